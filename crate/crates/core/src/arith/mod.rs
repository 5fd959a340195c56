//! Exact arithmetic: Gaussian rationals, dense matrices, sparse polynomials
//! and the action of a matrix on homogeneous polynomials.

pub mod composition;
pub mod gauss;
pub mod matrix;
pub mod poly;

pub use composition::{binomial, compositions, multinomial, Composition, CompositionIndex};
pub use gauss::GaussRat;
pub use matrix::ExactMatrix;
pub use poly::MPoly;

use crate::error::{Error, Result};

/// Matrix of the action of `m` on homogeneous polynomials of degree `n`.
///
/// Rows and columns are indexed by compositions of `n` into `m.rows()` parts
/// in canonical order; entry `(γ, α)` is the coefficient of `s^α` in
/// `Π_j ((m s)_j)^{γ_j}`.
pub fn induced_matrix(m: &ExactMatrix, n: u32) -> Result<ExactMatrix> {
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "induced action needs a non-empty square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let k = m.rows();
    let index = CompositionIndex::new(n, k);
    let forms: Vec<MPoly> = (0..k).map(|j| MPoly::linear(m.row(j))).collect();
    let mut powers: Vec<Vec<MPoly>> = forms.iter().map(|f| vec![MPoly::one(k), f.clone()]).collect();
    let mut out = ExactMatrix::zeros(index.len(), index.len());
    for (row, gamma) in index.iter().enumerate() {
        let mut prod = MPoly::one(k);
        for (j, &e) in gamma.parts().iter().enumerate() {
            let e = e as usize;
            while powers[j].len() <= e {
                let next = powers[j].last().unwrap().mul(&forms[j]);
                powers[j].push(next);
            }
            if e > 0 {
                prod = prod.mul(&powers[j][e]);
            }
        }
        for (exps, c) in prod.terms() {
            let col = index.index_of(exps).expect("homogeneous product stays in degree n");
            out[(row, col)] = c.clone();
        }
    }
    Ok(out)
}

/// Diagonal matrix with entry `Π_i d_i^{α_i}` at composition `α`; equals
/// `induced_matrix(diag(d), n)`.
pub fn induced_diagonal(diag: &[GaussRat], n: u32) -> ExactMatrix {
    let index = CompositionIndex::new(n, diag.len());
    let entries: Vec<GaussRat> = index
        .iter()
        .map(|alpha| {
            alpha
                .parts()
                .iter()
                .zip(diag)
                .map(|(&e, d)| d.pow(e))
                .product()
        })
        .collect();
    ExactMatrix::diagonal(&entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_induces_identity() {
        for n in 0..4 {
            let m = induced_matrix(&ExactMatrix::identity(3), n).unwrap();
            assert_eq!(m, ExactMatrix::identity(binomial(n as u64 + 2, 2).try_into().unwrap()));
        }
    }

    #[test]
    fn hadamard_degree_two() {
        let h = ExactMatrix::from_int_rows(&[&[1, 1], &[1, -1]]);
        let m = induced_matrix(&h, 2).unwrap();
        // row γ = (1,1): (s0+s1)(s0-s1) = s0^2 - s1^2
        let row: Vec<GaussRat> = m.row(1).to_vec();
        assert_eq!(row, vec![GaussRat::from_int(1), GaussRat::from_int(0), GaussRat::from_int(-1)]);
    }

    #[test]
    fn scalar_induces_power() {
        let c = GaussRat::from_ints(1, 1);
        let m = induced_matrix(&ExactMatrix::scalar(2, &c), 3).unwrap();
        assert_eq!(m, ExactMatrix::scalar(4, &c.pow(3)));
    }

    #[test]
    fn degree_one_is_the_matrix() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 1], &[1, 0, -1], &[1, -2, 1]]);
        assert_eq!(induced_matrix(&m, 1).unwrap(), m);
    }

    #[test]
    fn diagonal_shortcut_agrees() {
        let d = vec![GaussRat::from_int(1), GaussRat::i(), GaussRat::from_int(-2)];
        for n in 0..4 {
            assert_eq!(induced_diagonal(&d, n), induced_matrix(&ExactMatrix::diagonal(&d), n).unwrap());
        }
    }
}
