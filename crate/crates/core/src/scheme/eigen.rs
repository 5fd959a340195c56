//! Eigenmatrices: numeric diagonalization, Gaussian-rational snapping, and
//! exact certification.
//!
//! The Bose–Mesner algebra acts on itself through the intersection matrices
//! `B_i[r][k] = p[i][k][r]`; its primitive idempotents are common eigenvectors
//! of every `B_i`, with eigenvalue `p_i(j)` on `E_j`. A random integer
//! combination `Σ c_i B_i` generically has `d + 1` distinct eigenvalues, one
//! per idempotent, so each of its eigenvectors yields one row of `P`.

use std::cmp::Ordering;

use nalgebra::{Complex, DMatrix, DVector};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::axioms::IntersectionNumbers;
use super::AssociationScheme;
use crate::arith::{ExactMatrix, GaussRat};
use crate::error::{Error, Result};

type C64 = Complex<f64>;

#[derive(Clone, Debug)]
pub struct EigenOptions {
    /// Absolute tolerance for snapping eigenvalues to Gaussian rationals.
    pub tolerance: f64,
    pub max_denominator: u64,
    pub seed: u64,
    /// Fresh random combinations tried before giving up on a degenerate one.
    pub attempts: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tolerance: 1e-9,
            max_denominator: 1_000_000,
            seed: 0x5eed_b05e,
            attempts: 16,
        }
    }
}

fn intersection_matrices(p: &IntersectionNumbers) -> Vec<DMatrix<f64>> {
    let size = p.classes();
    (0..size)
        .map(|i| DMatrix::from_fn(size, size, |r, k| p.get(i, k, r) as f64))
        .collect()
}

fn to_complex(m: &DMatrix<f64>) -> DMatrix<C64> {
    m.map(|x| C64::new(x, 0.0))
}

/// Eigenvector of `b` for eigenvalue `theta` by shifted inverse iteration.
fn eigenvector(b: &DMatrix<C64>, theta: C64, scale: f64) -> Option<DVector<C64>> {
    let n = b.nrows();
    let shift = theta + C64::new(scale * 1e-11, scale * 1e-11);
    let mut m = b.clone();
    for i in 0..n {
        m[(i, i)] -= shift;
    }
    let lu = m.lu();
    let mut u = DVector::from_fn(n, |i, _| C64::new(1.0 + 0.1 * i as f64, 0.05 * i as f64));
    for _ in 0..4 {
        u = lu.solve(&u)?;
        let norm = u.norm();
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        u /= C64::new(norm, 0.0);
    }
    Some(u)
}

/// Rows of the eigenmatrix in floating point, valency row first, remaining
/// rows in canonical order.
fn numeric_rows(
    inter: &IntersectionNumbers,
    valencies: &[u64],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<C64>>> {
    let size = inter.classes();
    let mats = intersection_matrices(inter);
    let mut b = DMatrix::<f64>::zeros(size, size);
    for m in &mats {
        let c: f64 = rng.gen_range(1..=1000) as f64;
        b += m * c;
    }
    let thetas: Vec<C64> = b.complex_eigenvalues().iter().copied().collect();
    let scale = thetas.iter().map(|t| t.norm()).fold(1.0, f64::max);
    for a in 0..thetas.len() {
        for c in a + 1..thetas.len() {
            if (thetas[a] - thetas[c]).norm() < 1e-6 * scale {
                return None;
            }
        }
    }
    let bc = to_complex(&b);
    let cmats: Vec<DMatrix<C64>> = mats.iter().map(to_complex).collect();
    let mut rows = Vec::with_capacity(size);
    for &theta in &thetas {
        let u = eigenvector(&bc, theta, scale)?;
        let denom = u.dotc(&u);
        let row: Vec<C64> = cmats.iter().map(|m| u.dotc(&(m * &u)) / denom).collect();
        rows.push(row);
    }
    let dist = |row: &[C64]| -> f64 {
        row.iter()
            .zip(valencies)
            .map(|(x, &k)| (x - C64::new(k as f64, 0.0)).norm())
            .sum()
    };
    let trivial = (0..rows.len())
        .min_by(|&a, &c| dist(&rows[a]).total_cmp(&dist(&rows[c])))
        .expect("at least one row");
    let first = rows.remove(trivial);
    rows.sort_by(|a, c| {
        for (x, y) in a.iter().zip(c) {
            let ord = y.im.total_cmp(&x.im).then(y.re.total_cmp(&x.re));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    });
    rows.insert(0, first);
    Some(rows)
}

/// Floating-point eigenmatrix, for schemes whose eigenvalues are not
/// Gaussian rational. Entries are `(re, im)` pairs.
pub fn numeric_eigenmatrix(scheme: &AssociationScheme, opts: &EigenOptions) -> Result<Vec<Vec<(f64, f64)>>> {
    let valencies = scheme.valencies();
    for attempt in 0..opts.attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(attempt as u64));
        if let Some(rows) = numeric_rows(scheme.intersection_numbers(), &valencies, &mut rng) {
            return Ok(rows
                .into_iter()
                .map(|r| r.into_iter().map(|z| (z.re, z.im)).collect())
                .collect());
        }
    }
    Err(Error::DegenerateCombination { attempts: opts.attempts })
}

/// Exact eigenmatrix `P` with `P[j][i] = p_i(j)`.
///
/// Row 0 belongs to `E_0 = J/v` (the valencies); the other rows are sorted
/// lexicographically with entries compared by [`GaussRat::canonical_cmp`].
/// The snapped matrix is certified exactly, so a wrong snap is reported as
/// [`Error::SnapFailure`] rather than returned.
pub fn eigenmatrix(scheme: &AssociationScheme, opts: &EigenOptions) -> Result<ExactMatrix> {
    let numeric = numeric_eigenmatrix(scheme, opts)?;
    let mut rows = Vec::with_capacity(numeric.len());
    for (j, row) in numeric.iter().enumerate() {
        let mut exact = Vec::with_capacity(row.len());
        for (i, &(re, im)) in row.iter().enumerate() {
            let snapped = GaussRat::snap(re, im, opts.tolerance, opts.max_denominator).ok_or_else(|| {
                Error::SnapFailure(format!("p_{i}({j}) ≈ {re}{im:+}i has no small-denominator approximation"))
            })?;
            exact.push(snapped);
        }
        rows.push(exact);
    }
    let p = canonical_row_order(&ExactMatrix::from_rows(rows)?);
    certify_eigenmatrix(&p, scheme.intersection_numbers())
        .map_err(|e| Error::SnapFailure(format!("snapped eigenmatrix does not certify: {e}")))?;
    Ok(p)
}

/// Keep row 0 and sort the remaining rows canonically.
pub fn canonical_row_order(p: &ExactMatrix) -> ExactMatrix {
    let mut rows = p.to_rows();
    if rows.len() > 1 {
        rows[1..].sort_by(|a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.canonical_cmp(y))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        });
    }
    ExactMatrix::from_rows(rows).expect("same shape")
}

/// Exact check that `p` is the eigenmatrix of the scheme with these
/// intersection numbers: row 0 lists the valencies, column 0 is all ones,
/// `p` is invertible, and every row is a character of the Bose–Mesner
/// algebra, `p_i(j)·p_k(j) = Σ_r p[i][k][r]·p_r(j)`.
///
/// Together these say that `E_j = (1/v) Σ_k q_j(k) A_k` with `Q = v·P⁻¹`
/// are orthogonal idempotents summing to `I` with `A_i = Σ_j p_i(j) E_j`.
pub fn certify_eigenmatrix(p: &ExactMatrix, inter: &IntersectionNumbers) -> Result<()> {
    let size = inter.classes();
    if p.rows() != size || p.cols() != size {
        return Err(Error::DimensionMismatch(format!(
            "eigenmatrix is {}x{}, scheme has {size} classes",
            p.rows(),
            p.cols()
        )));
    }
    for i in 0..size {
        if p[(0, i)] != GaussRat::from_int(inter.valency(i) as i64) {
            return Err(Error::InvalidArgument(format!("P[0][{i}] = {} is not the valency", p[(0, i)])));
        }
        if !p[(i, 0)].is_one() {
            return Err(Error::InvalidArgument(format!("P[{i}][0] = {} is not 1", p[(i, 0)])));
        }
    }
    let ints: Vec<GaussRat> = (0..size * size * size)
        .map(|t| GaussRat::from_int(inter.get(t / (size * size), (t / size) % size, t % size) as i64))
        .collect();
    for j in 0..size {
        for i in 0..size {
            for k in i..size {
                let lhs = &p[(j, i)] * &p[(j, k)];
                let rhs: GaussRat = (0..size)
                    .filter(|&r| !ints[(i * size + k) * size + r].is_zero())
                    .map(|r| &ints[(i * size + k) * size + r] * &p[(j, r)])
                    .sum();
                if lhs != rhs {
                    return Err(Error::InvalidArgument(format!(
                        "row {j} is not a character: p_{i}·p_{k} = {lhs} but Σ p[{i}][{k}][r] p_r = {rhs}"
                    )));
                }
            }
        }
    }
    if p.determinant()?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// `Q = v·P⁻¹`.
pub fn dual_eigenmatrix(p: &ExactMatrix, v: usize) -> Result<ExactMatrix> {
    Ok(p.inverse()?.scale(&GaussRat::from_int(v as i64)))
}

/// Explicit `v × v` principal idempotents `E_j = (1/v) Σ_k Q[k][j] A_k`,
/// in the row order of the attached eigenmatrix.
pub fn idempotents(scheme: &AssociationScheme) -> Result<Vec<ExactMatrix>> {
    let p = scheme.exact_eigenmatrix()?;
    let v = scheme.v();
    let q = dual_eigenmatrix(p, v)?;
    let inv_v = GaussRat::from_frac(1, v as i64);
    let size = scheme.classes();
    Ok((0..size)
        .map(|j| {
            let coeffs: Vec<GaussRat> = (0..size).map(|k| &q[(k, j)] * &inv_v).collect();
            ExactMatrix::from_fn(v, v, |x, y| coeffs[scheme.relation(x, y)].clone())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(m: usize) -> AssociationScheme {
        let rows: Vec<Vec<usize>> = (0..m)
            .map(|x| (0..m).map(|y| { let k = (y + m - x) % m; k.min(m - k) }).collect())
            .collect();
        AssociationScheme::from_rows(&rows, None).unwrap()
    }

    fn z4() -> AssociationScheme {
        let rows: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| (y + 4 - x) % 4).collect()).collect();
        AssociationScheme::from_rows(&rows, None).unwrap()
    }

    #[test]
    fn four_cycle_eigenmatrix() {
        let p = eigenmatrix(&cycle(4), &EigenOptions::default()).unwrap();
        assert_eq!(p, ExactMatrix::from_int_rows(&[&[1, 2, 1], &[1, 0, -1], &[1, -2, 1]]));
    }

    #[test]
    fn z4_eigenmatrix_has_i_entries() {
        let p = eigenmatrix(&z4(), &EigenOptions::default()).unwrap();
        let expected: Vec<Vec<GaussRat>> = (0..4)
            .map(|a| (0..4).map(|g| GaussRat::i_pow(a * g)).collect())
            .collect();
        assert_eq!(p, ExactMatrix::from_rows(expected).unwrap());
        let q = dual_eigenmatrix(&p, 4).unwrap();
        assert_eq!(q[(1, 1)], GaussRat::from_ints(0, -1));
        assert_eq!(q, p.conj());
    }

    #[test]
    fn pentagon_fails_to_snap() {
        assert!(matches!(eigenmatrix(&cycle(5), &EigenOptions::default()), Err(Error::SnapFailure(_))));
        let numeric = numeric_eigenmatrix(&cycle(5), &EigenOptions::default()).unwrap();
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        assert!(numeric.iter().any(|r| (r[1].0 - phi).abs() < 1e-9));
    }

    #[test]
    fn certification_rejects_wrong_matrix() {
        let s = cycle(4);
        let wrong = ExactMatrix::from_int_rows(&[&[1, 2, 1], &[1, 1, -1], &[1, -2, 1]]);
        assert!(certify_eigenmatrix(&wrong, s.intersection_numbers()).is_err());
        let singular = ExactMatrix::from_int_rows(&[&[1, 2, 1], &[1, 0, -1], &[1, 0, -1]]);
        assert!(certify_eigenmatrix(&singular, s.intersection_numbers()).is_err());
    }

    #[test]
    fn idempotents_are_orthogonal_projections() {
        let s = cycle(4).with_computed_eigenmatrix();
        let es = idempotents(&s).unwrap();
        let v = s.v();
        assert_eq!(es[0], ExactMatrix::from_fn(v, v, |_, _| GaussRat::from_frac(1, v as i64)));
        let mut sum = ExactMatrix::zeros(v, v);
        for (a, ea) in es.iter().enumerate() {
            sum = sum.add(ea).unwrap();
            for (b, eb) in es.iter().enumerate() {
                let prod = ea * eb;
                if a == b {
                    assert_eq!(&prod, ea);
                } else {
                    assert_eq!(prod, ExactMatrix::zeros(v, v));
                }
            }
        }
        assert_eq!(sum, ExactMatrix::identity(v));
    }
}
