use num_traits::Zero;

use super::eigen::dual_eigenmatrix;
use super::AssociationScheme;
use crate::arith::GaussRat;
use crate::error::{Error, Result};

/// Krein parameters `q[i][j][k]`, defined by `E_i ∘ E_j = (1/v) Σ_k q[i][j][k] E_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KreinParameters {
    size: usize,
    q: Vec<GaussRat>,
}

impl KreinParameters {
    pub fn classes(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &GaussRat {
        &self.q[(i * self.size + j) * self.size + k]
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<GaussRat>>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| (0..self.size).map(|k| self.get(i, j, k).clone()).collect()).collect())
            .collect()
    }
}

/// Expand `E_i ∘ E_j` in the idempotent basis.
///
/// Since the `A_k` are disjoint 0/1 matrices, `E_i ∘ E_j = (1/v²) Σ_k
/// Q[k][i] Q[k][j] A_k`, and rewriting `A_k = Σ_r P[r][k] E_r` gives
/// `q[i][j][r] = (1/v) Σ_k Q[k][i] Q[k][j] P[r][k]`.
///
/// Every parameter must be real and non-negative; anything else means the
/// eigenmatrix is wrong and is reported as [`Error::NegativeKrein`].
pub fn krein_parameters(scheme: &AssociationScheme) -> Result<KreinParameters> {
    let p = scheme.exact_eigenmatrix()?;
    let v = scheme.v();
    let q = dual_eigenmatrix(p, v)?;
    let size = scheme.classes();
    let inv_v = GaussRat::from_frac(1, v as i64);
    let mut out = Vec::with_capacity(size * size * size);
    for i in 0..size {
        for j in 0..size {
            let prod: Vec<GaussRat> = (0..size).map(|k| &q[(k, i)] * &q[(k, j)]).collect();
            for r in 0..size {
                let val: GaussRat = (0..size).map(|k| &prod[k] * &p[(r, k)]).sum::<GaussRat>() * &inv_v;
                if !val.is_real() || val.re() < &Zero::zero() {
                    return Err(Error::NegativeKrein { i, j, k: r, value: val.to_string() });
                }
                out.push(val);
            }
        }
    }
    Ok(KreinParameters { size, q: out })
}
