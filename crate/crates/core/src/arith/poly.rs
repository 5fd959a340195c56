//! Sparse multivariate polynomials over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

/// Polynomial in `num_vars` commuting variables. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, GaussRat>,
}

impl MPoly {
    pub fn zero(num_vars: usize) -> Self {
        MPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: GaussRat) -> Self {
        Self::monomial(vec![0; num_vars], c)
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, GaussRat::one())
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(e, GaussRat::one())
    }

    pub fn monomial(exps: Exponents, c: GaussRat) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Linear form `Σ coeffs[i]·x_i`.
    pub fn linear(coeffs: &[GaussRat]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussRat {
        self.terms.get(exps).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, c: GaussRat) {
        assert_eq!(exps.len(), self.num_vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(n)` when every term has total degree `n`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        MPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "polynomials in different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.num_vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute `x_i := images[i]`, all images living in a common ring.
    pub fn compose(&self, images: &[MPoly]) -> Result<Self> {
        if images.len() != self.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.num_vars
            )));
        }
        let target = images.first().map_or(0, MPoly::num_vars);
        if images.iter().any(|p| p.num_vars != target) {
            return Err(Error::DimensionMismatch("images in different rings".into()));
        }
        // cache powers of each image
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term.mul(&powers[i][k]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Linear change of variables `s_i := Σ_j m[i][j]·t_j`.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> Result<Self> {
        if m.rows() != self.num_vars || !m.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} substitution for {} variables",
                m.rows(),
                m.cols(),
                self.num_vars
            )));
        }
        let images: Vec<MPoly> = (0..m.rows()).map(|i| MPoly::linear(m.row(i))).collect();
        if images.is_empty() {
            return Ok(self.clone());
        }
        self.compose(&images)
    }

    pub fn evaluate(&self, point: &[GaussRat]) -> Result<GaussRat> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.num_vars
            )));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut acc = c.clone();
                for (x, &k) in point.iter().zip(e) {
                    if k > 0 {
                        acc = &acc * &x.pow(k);
                    }
                }
                acc
            })
            .sum())
    }

    /// Rename variables: old variable `i` becomes variable `map[i]` of a ring
    /// with `num_vars` variables. Several old variables may collapse onto one.
    pub fn rename_vars(&self, map: &[usize], num_vars: usize) -> Self {
        assert_eq!(map.len(), self.num_vars);
        let mut out = Self::zero(num_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; num_vars];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Render with the given variable names; falls back to `x0, x1, …`.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let name = |i: usize| -> String {
            names.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string())
        };
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { name(i) } else { format!("{}^{p}", name(i)) })
                .collect();
            let mono = mono.join("*");
            let negative = c.im().is_zero() && c.re() < &num_rational::BigRational::zero();
            let mag = if negative { -c } else { c.clone() };
            let composite = !mag.im().is_zero() && !mag.re().is_zero();
            let coeff = if composite { format!("({mag})") } else { mag.to_string() };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => coeff,
                (false, true) => mono,
                (false, false) => format!("{coeff}*{mono}"),
            };
            match (k == 0, negative) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.num_vars).map(|i| format!("s{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
