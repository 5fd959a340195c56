//! Constructors for the standard schemes: one-class, Hamming, abelian group
//! schemes, and cycles.

use std::f64::consts::PI;

use crate::arith::gauss::snap_rational;
use crate::arith::{induced_matrix, ExactMatrix, GaussRat};
use crate::error::{Error, Result};
use crate::scheme::translation::mixed_radix;
use crate::scheme::{check_cap, AssociationScheme, RelationTable, TranslationStructure, DEFAULT_SIZE_CAP};

fn one_class_p(q: usize) -> ExactMatrix {
    ExactMatrix::from_int_rows(&[&[1, q as i64 - 1], &[1, -1]])
}

/// The complete graph `K_q` as a scheme: `H(1, q)`.
pub fn one_class(q: usize) -> Result<AssociationScheme> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("one-class scheme needs q >= 2, got {q}")));
    }
    let table = RelationTable::from_fn(q, 1, |x, y| usize::from(x != y));
    AssociationScheme::build(table, Some(TranslationStructure::standard(vec![q as u32])?))?
        .with_eigenmatrix(one_class_p(q))
}

pub fn hamming(n: usize, q: usize) -> Result<AssociationScheme> {
    hamming_with_cap(n, q, DEFAULT_SIZE_CAP)
}

/// Words of length `n` over `0..q` related by Hamming distance; the
/// eigenmatrix is the induced action of `[[1, q−1], [1, −1]]` on degree `n`.
pub fn hamming_with_cap(n: usize, q: usize, cap: usize) -> Result<AssociationScheme> {
    if q < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!("hamming scheme needs n >= 1, q >= 2, got n={n} q={q}")));
    }
    let v = check_cap((q as u128).saturating_pow(n as u32), cap)?;
    let radix = vec![q as u32; n];
    let words: Vec<Vec<u32>> = (0..v).map(|w| mixed_radix(w, &radix)).collect();
    let table = RelationTable::from_fn(v, n, |x, y| words[x].iter().zip(&words[y]).filter(|(a, b)| a != b).count());
    let p = induced_matrix(&one_class_p(q), n as u32)?;
    AssociationScheme::build(table, Some(TranslationStructure::standard(radix)?))?.with_eigenmatrix(p)
}

pub fn group_scheme(orders: &[u32]) -> Result<AssociationScheme> {
    group_scheme_with_cap(orders, DEFAULT_SIZE_CAP)
}

/// Scheme of the abelian group `Z_{m_1} × … × Z_{m_k}`: vertices are group
/// elements in mixed-radix order and `relation(x, y)` is the index of `y − x`.
///
/// When every `m_j` divides 4 the character table `P[a][g] = χ_a(g)` is exact
/// and attached; otherwise the scheme is numeric-only.
pub fn group_scheme_with_cap(orders: &[u32], cap: usize) -> Result<AssociationScheme> {
    if orders.is_empty() || orders.iter().any(|&m| m < 2) {
        return Err(Error::InvalidArgument(format!("group orders must be >= 2, got {orders:?}")));
    }
    let size = orders.iter().fold(1u128, |acc, &m| acc.saturating_mul(m as u128));
    let v = check_cap(size, cap)?;
    let translation = TranslationStructure::standard(orders.to_vec())?;
    let table = RelationTable::from_fn(v, v - 1, |x, y| {
        let (ex, ey) = (translation.element(x), translation.element(y));
        let diff: Vec<u32> = ex.iter().zip(ey).zip(orders).map(|((&a, &b), &m)| (b + m - a) % m).collect();
        translation.vertex(&diff).expect("group closed")
    });
    let exact = orders.iter().all(|&m| 4 % m == 0);
    let scheme = AssociationScheme::build(table, Some(translation.clone()))?;
    if !exact {
        return Ok(scheme);
    }
    let p = ExactMatrix::from_fn(v, v, |a, g| {
        let (ea, eg) = (translation.element(a), translation.element(g));
        let k: i64 = ea
            .iter()
            .zip(eg)
            .zip(orders)
            .map(|((&x, &y), &m)| (x as i64 * y as i64 * (4 / m as i64)) % 4)
            .sum();
        GaussRat::i_pow(k)
    });
    scheme.with_eigenmatrix(p)
}

/// Distance partition of the `m`-cycle, `⌊m/2⌋` classes.
///
/// Eigenmatrix rows are indexed by character pairs `{a, −a}` for
/// `a = 0..=⌊m/2⌋`, with `p_k(a) = Σ_{g ∈ {k, −k}} cos(2πag/m)`; it is
/// attached when those values are rational (m = 3, 4, 6).
pub fn cycle_scheme(m: usize) -> Result<AssociationScheme> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("cycle scheme needs m >= 3, got {m}")));
    }
    check_cap(m as u128, DEFAULT_SIZE_CAP)?;
    let half = m / 2;
    let table = RelationTable::from_fn(m, half, |x, y| {
        let k = (y + m - x) % m;
        k.min(m - k)
    });
    let scheme = AssociationScheme::build(table, Some(TranslationStructure::standard(vec![m as u32])?))?;
    let mut rows = Vec::with_capacity(half + 1);
    for a in 0..=half {
        let mut row = Vec::with_capacity(half + 1);
        for k in 0..=half {
            let members: Vec<usize> = if k == 0 || 2 * k == m { vec![k] } else { vec![k, m - k] };
            let value: f64 = members.iter().map(|&g| (2.0 * PI * (a * g) as f64 / m as f64).cos()).sum();
            match snap_rational(value, 1e-9, 1000) {
                Some(r) => row.push(GaussRat::real(r)),
                None => return Ok(scheme),
            }
        }
        rows.push(row);
    }
    let p = ExactMatrix::from_rows(rows)?;
    match scheme.clone().with_eigenmatrix(p) {
        Ok(s) => Ok(s),
        Err(_) => Ok(scheme),
    }
}
