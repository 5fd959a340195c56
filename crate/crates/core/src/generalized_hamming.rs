//! `H(n, A)`: words of length `n` over the vertices of a base scheme `A`,
//! related by the composition counting how many coordinates are `r`-related.
//!
//! Explicit tables are built only under the size cap. Eigenmatrices of any
//! size come from the induced action of the base eigenmatrix.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::arith::{induced_matrix, Composition, CompositionIndex, ExactMatrix, GaussRat};
use crate::error::{Error, Result};
use crate::scheme::translation::mixed_radix;
use crate::scheme::{check_cap, dual_eigenmatrix, AssociationScheme, RelationTable, DEFAULT_SIZE_CAP};

/// Symbolic description of `H(n, A)`.
#[derive(Clone, Debug)]
pub struct GHScheme {
    base: AssociationScheme,
    n: u32,
    index: CompositionIndex,
}

impl GHScheme {
    pub fn new(base: AssociationScheme, n: u32) -> Self {
        let index = CompositionIndex::new(n, base.classes());
        GHScheme { base, n, index }
    }

    pub fn base(&self) -> &AssociationScheme {
        &self.base
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Classes including the identity: `C(n+d, d)`.
    pub fn classes(&self) -> usize {
        self.index.len()
    }

    pub fn class_index(&self) -> &CompositionIndex {
        &self.index
    }

    pub fn composition(&self, class: usize) -> &Composition {
        self.index.get(class)
    }

    pub fn class_of(&self, h: &Composition) -> Option<usize> {
        self.index.index_of(h.parts())
    }

    /// `v^n` as an exact integer; no table is built.
    pub fn vertex_count(&self) -> BigUint {
        BigUint::from(self.base.v()).pow(self.n)
    }

    /// Valency of class `α`: `multinomial(n; α) · Π k_i^{α_i}`.
    pub fn valencies(&self) -> Vec<BigUint> {
        let k = self.base.valencies();
        self.index
            .iter()
            .map(|alpha| {
                alpha
                    .parts()
                    .iter()
                    .zip(&k)
                    .fold(alpha.multinomial(), |acc, (&a, &ki)| acc * BigUint::from(ki).pow(a))
            })
            .collect()
    }

    pub fn eigenmatrix(&self) -> Result<ExactMatrix> {
        eigenmatrix_gh(self.base.exact_eigenmatrix()?, self.n)
    }

    pub fn dual_eigenmatrix(&self) -> Result<ExactMatrix> {
        dual_eigenmatrix_gh(self.base.exact_eigenmatrix()?, self.base.v(), self.n)
    }

    pub fn build_explicit(&self) -> Result<AssociationScheme> {
        build_explicit(&self.base, self.n as usize)
    }
}

fn check_word(word: &[usize], v: usize) -> Result<()> {
    match word.iter().find(|&&s| s >= v) {
        Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, v }),
        None => Ok(()),
    }
}

/// `h(v, w)[r]` = number of coordinates `j` with `v_j` and `w_j` `r`-related.
pub fn h_vector(v: &[usize], w: &[usize], base: &AssociationScheme) -> Result<Composition> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch(v.len(), w.len()));
    }
    check_word(v, base.v())?;
    check_word(w, base.v())?;
    let mut h = vec![0u32; base.classes()];
    for (&a, &b) in v.iter().zip(w) {
        h[base.relation(a, b)] += 1;
    }
    Ok(Composition::new(h))
}

pub fn build_explicit(base: &AssociationScheme, n: usize) -> Result<AssociationScheme> {
    build_explicit_with_cap(base, n, DEFAULT_SIZE_CAP)
}

/// Explicit `H(n, A)` on `v^n` vertices: vertex index is the base-`v` number
/// of the word, first coordinate most significant; class index is the
/// canonical index of `h(v, w)`.
///
/// Building the scheme runs the full axiom check, so success is a machine
/// check that `H(n, A)` is an association scheme at this size.
pub fn build_explicit_with_cap(base: &AssociationScheme, n: usize, cap: usize) -> Result<AssociationScheme> {
    if n == 0 {
        return Err(Error::InvalidArgument("word length must be at least 1".into()));
    }
    let v = base.v();
    let total = check_cap((v as u128).saturating_pow(n as u32), cap)?;
    let k = base.classes();
    let index = CompositionIndex::new(n as u32, k);
    let radix = vec![v as u32; n];
    let words: Vec<Vec<u32>> = (0..total).map(|w| mixed_radix(w, &radix)).collect();
    let table = RelationTable::from_fn(total, index.len() - 1, |x, y| {
        let mut h = vec![0u32; k];
        for (&a, &b) in words[x].iter().zip(&words[y]) {
            h[base.relation(a as usize, b as usize)] += 1;
        }
        index.index_of(&h).expect("h-vector is a composition of n")
    });
    let translation = base.translation().map(|t| t.power(n)).transpose()?;
    let scheme = AssociationScheme::build(table, translation)?;
    match base.eigenmatrix() {
        Some(p) => scheme.with_eigenmatrix(induced_matrix(p, n as u32)?),
        None => Ok(scheme),
    }
}

/// `P̂ = induced_matrix(P, n)`: row `γ`, column `α` is the coefficient of
/// `s^α` in `(Ps)^γ`.
pub fn eigenmatrix_gh(p: &ExactMatrix, n: u32) -> Result<ExactMatrix> {
    induced_matrix(p, n)
}

/// `induced_matrix(vP⁻¹, n)`, which equals `v^n · P̂⁻¹`.
pub fn dual_eigenmatrix_gh(p: &ExactMatrix, v: usize, n: u32) -> Result<ExactMatrix> {
    induced_matrix(&dual_eigenmatrix(p, v)?, n)
}

/// Row and column permutations with `vP⁻¹ = P[rows][cols]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reordering {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    /// `induced(vP⁻¹, n) = v^n · induced(P, n)⁻¹`.
    pub formally_dual: bool,
    /// `vP⁻¹ = P` exactly.
    pub self_dual: bool,
    /// `induced(vP⁻¹, n) = induced(P, n)` exactly.
    pub lifted_self_dual: bool,
    /// Set when `vP⁻¹` equals `P` after reordering, with 0 fixed on both sides.
    pub reordering: Option<Reordering>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.formally_dual
    }

    pub fn self_dual_up_to_reordering(&self) -> bool {
        self.reordering.is_some()
    }
}

/// Largest class count for which column orders are searched exhaustively.
const REORDER_SEARCH_LIMIT: usize = 8;

fn find_reordering(p: &ExactMatrix, q: &ExactMatrix) -> Option<Reordering> {
    let size = p.rows();
    if size == 0 || size > REORDER_SEARCH_LIMIT {
        return None;
    }
    for tail in (1..size).permutations(size - 1) {
        let cols: Vec<usize> = std::iter::once(0).chain(tail).collect();
        let pc = p.permute_cols(&cols);
        // rows of an invertible matrix are distinct, so matching is forced
        let by_row: HashMap<&[GaussRat], usize> = (0..size).map(|r| (pc.row(r), r)).collect();
        let rows: Option<Vec<usize>> = (0..size).map(|r| by_row.get(q.row(r)).copied()).collect();
        if let Some(rows) = rows {
            if rows[0] == 0 {
                return Some(Reordering { rows, cols });
            }
        }
    }
    None
}

pub fn formal_duality_check(p: &ExactMatrix, v: usize, n: u32) -> DualityReport {
    let failed = DualityReport { formally_dual: false, self_dual: false, lifted_self_dual: false, reordering: None };
    let Ok(q) = dual_eigenmatrix(p, v) else {
        return failed;
    };
    let (Ok(p_hat), Ok(q_hat)) = (induced_matrix(p, n), induced_matrix(&q, n)) else {
        return failed;
    };
    let scale = GaussRat::from(num_bigint::BigInt::from(v).pow(n));
    let formally_dual = match p_hat.inverse() {
        Ok(inv) => q_hat == inv.scale(&scale),
        Err(_) => false,
    };
    DualityReport {
        formally_dual,
        self_dual: &q == p,
        lifted_self_dual: q_hat == p_hat,
        reordering: find_reordering(p, &q),
    }
}

#[derive(Clone, Debug)]
pub struct TransCheck {
    /// Every class of `H(mn, A)` is a union of classes of `H(m, H(n, A))`.
    pub is_fusion: bool,
    /// Class of `H(mn, A)` containing each class of `H(m, H(n, A))`; `None`
    /// when some fine class meets two coarse classes.
    pub mapping: Option<Vec<usize>>,
    pub fine_classes: usize,
    pub coarse_classes: usize,
}

/// Compare `H(mn, A)` with `H(m, H(n, A))` on the shared vertex set
/// `V^{mn} = (V^n)^m` (both use base-`v` word indices).
pub fn fusion_check_trans(base: &AssociationScheme, m: usize, n: usize) -> Result<TransCheck> {
    fusion_check_trans_with_cap(base, m, n, DEFAULT_SIZE_CAP)
}

pub fn fusion_check_trans_with_cap(base: &AssociationScheme, m: usize, n: usize, cap: usize) -> Result<TransCheck> {
    check_cap((base.v() as u128).saturating_pow((m * n) as u32), cap)?;
    let coarse = build_explicit_with_cap(base, m * n, cap)?;
    let inner = build_explicit_with_cap(base, n, cap)?;
    let fine = build_explicit_with_cap(&inner, m, cap)?;
    let mut mapping = vec![usize::MAX; fine.classes()];
    let mut consistent = true;
    'outer: for x in 0..fine.v() {
        for y in 0..fine.v() {
            let (f, c) = (fine.relation(x, y), coarse.relation(x, y));
            if mapping[f] == usize::MAX {
                mapping[f] = c;
            } else if mapping[f] != c {
                consistent = false;
                break 'outer;
            }
        }
    }
    Ok(TransCheck {
        is_fusion: consistent,
        mapping: consistent.then_some(mapping),
        fine_classes: fine.classes(),
        coarse_classes: coarse.classes(),
    })
}
