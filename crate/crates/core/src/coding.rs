//! Codes in `H(n, A)`: inner distributions, weight enumerators, the
//! MacWilliams transform, dual codes of additive codes, and the Z4 forms.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{CompositionIndex, ExactMatrix, GaussRat, MPoly};
use crate::builders::{cycle_scheme, group_scheme, one_class};
use crate::error::{Error, Result};
use crate::scheme::translation::mixed_radix;
use crate::scheme::{check_cap, idempotents, AssociationScheme, DEFAULT_SIZE_CAP};

/// Default limit on `v^n` for the explicit-idempotent oracle.
pub const ORACLE_CAP: usize = 256;

/// A nonempty set of distinct words of length `n` over the base vertices.
#[derive(Clone, Debug)]
pub struct Code {
    base: AssociationScheme,
    n: usize,
    words: Vec<Vec<usize>>,
}

impl Code {
    pub fn new(base: AssociationScheme, words: Vec<Vec<usize>>) -> Result<Self> {
        let Some(first) = words.first() else {
            return Err(Error::EmptyCode);
        };
        let n = first.len();
        let mut seen = HashSet::with_capacity(words.len());
        for (idx, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(Error::LengthMismatch(n, w.len()));
            }
            if let Some(&symbol) = w.iter().find(|&&s| s >= base.v()) {
                return Err(Error::SymbolOutOfRange { symbol, v: base.v() });
            }
            if !seen.insert(w.as_slice()) {
                return Err(Error::DuplicateWord(w.clone(), idx));
            }
        }
        Ok(Code { base, n, words })
    }

    /// Every word of `V^n`.
    pub fn whole_space(base: AssociationScheme, n: usize) -> Result<Self> {
        let v = base.v();
        let total = check_cap((v as u128).saturating_pow(n as u32), DEFAULT_SIZE_CAP)?;
        let radix = vec![v as u32; n];
        let words = (0..total).map(|w| mixed_radix(w, &radix).into_iter().map(|s| s as usize).collect()).collect();
        Code::new(base, words)
    }

    /// Additive closure of `generators` under the base translation group.
    pub fn span(base: AssociationScheme, n: usize, generators: &[Vec<usize>]) -> Result<Self> {
        let t = base.translation().ok_or(Error::NoTranslation)?.clone();
        let zero = t.vertex(&vec![0; t.orders().len()]).expect("identity element");
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        set.insert(vec![zero; n]);
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch(n, g.len()));
            }
            if let Some(&symbol) = g.iter().find(|&&s| s >= base.v()) {
                return Err(Error::SymbolOutOfRange { symbol, v: base.v() });
            }
            // add multiples of g to everything until nothing new appears
            let mut frontier: Vec<Vec<usize>> = set.iter().cloned().collect();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for w in &frontier {
                    let s: Vec<usize> = w.iter().zip(g).map(|(&a, &b)| t.add_vertices(a, b)).collect();
                    if set.insert(s.clone()) {
                        next.push(s);
                    }
                }
                frontier = next;
            }
        }
        Code::new(base, set.into_iter().collect())
    }

    pub fn base(&self) -> &AssociationScheme {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    /// Pairs `(x, y) ∈ C²` counted by the class index of `h(x, y)`.
    pub fn pair_counts(&self) -> (CompositionIndex, Vec<u64>) {
        let k = self.base.classes();
        let index = CompositionIndex::new(self.n as u32, k);
        let counts = self
            .words
            .par_iter()
            .fold(
                || vec![0u64; index.len()],
                |mut acc, x| {
                    let mut h = vec![0u32; k];
                    for y in &self.words {
                        h.iter_mut().for_each(|e| *e = 0);
                        for (&a, &b) in x.iter().zip(y) {
                            h[self.base.relation(a, b)] += 1;
                        }
                        acc[index.index_of(&h).expect("composition")] += 1;
                    }
                    acc
                },
            )
            .reduce(|| vec![0u64; index.len()], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
        (index, counts)
    }
}

/// Homogeneous enumerator of degree `n` in `d + 1` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    poly: MPoly,
    n: u32,
}

impl WeightEnumerator {
    pub fn from_poly(poly: MPoly) -> Result<Self> {
        match poly.homogeneous_degree() {
            Some(n) => Ok(WeightEnumerator { poly, n }),
            None => Err(Error::InvalidArgument("enumerator must be a nonzero homogeneous polynomial".into())),
        }
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MPoly {
        self.poly
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }

    pub fn coeff(&self, alpha: &[u32]) -> GaussRat {
        self.poly.coeff(alpha)
    }

    /// Every coefficient is real and at least zero.
    pub fn is_nonnegative(&self) -> bool {
        self.poly.terms().all(|(_, c)| c.is_real() && c.re() >= &BigRational::zero())
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.to_string())
    }
}

/// `a_α = #{(x, y) ∈ C² : h(x, y) = α} / |C|`, in canonical composition order.
pub fn inner_distribution(code: &Code) -> Vec<BigRational> {
    let (_, counts) = code.pair_counts();
    let size = BigInt::from(code.len());
    counts.into_iter().map(|c| BigRational::new(BigInt::from(c), size.clone())).collect()
}

pub fn weight_enumerator(code: &Code) -> WeightEnumerator {
    let (index, counts) = code.pair_counts();
    let size = code.len() as i64;
    let mut poly = MPoly::zero(code.base.classes());
    for (alpha, c) in index.iter().zip(counts) {
        if c > 0 {
            poly.add_term(alpha.parts().to_vec(), GaussRat::from_frac(c as i64, size));
        }
    }
    WeightEnumerator { poly, n: code.n as u32 }
}

/// `W⊥(t) = (v^n / |C|) · W(P⁻¹ t)`.
pub fn macwilliams_transform(
    w: &WeightEnumerator,
    p: &ExactMatrix,
    v: usize,
    code_size: usize,
) -> Result<WeightEnumerator> {
    if p.rows() != w.num_vars() {
        return Err(Error::DimensionMismatch(format!(
            "{}-variable enumerator against {}x{} eigenmatrix",
            w.num_vars(),
            p.rows(),
            p.cols()
        )));
    }
    let inv = p.inverse()?;
    let scale = GaussRat::real(BigRational::new(BigInt::from(v).pow(w.n), BigInt::from(code_size)));
    let poly = w.poly.substitute_linear(&inv)?.scale(&scale);
    Ok(WeightEnumerator { poly, n: w.n })
}

pub fn dual_weight_enumerator_direct(code: &Code) -> Result<WeightEnumerator> {
    dual_weight_enumerator_direct_with_cap(code, ORACLE_CAP)
}

/// Oracle for the transform: each `E_β` of `H(n, A)` is built explicitly as
/// the sum of `E_{i_1} ⊗ … ⊗ E_{i_n}` over sequences with composition `β`,
/// and the coefficient of `t^β` is `(v^n / |C|²) · xᵀ E_β x`.
pub fn dual_weight_enumerator_direct_with_cap(code: &Code, cap: usize) -> Result<WeightEnumerator> {
    let v = code.base.v();
    let n = code.n;
    let total = check_cap((v as u128).saturating_pow(n as u32), cap)?;
    let es = idempotents(&code.base)?;
    let k = es.len();
    let index = CompositionIndex::new(n as u32, k);
    let mut big: Vec<ExactMatrix> = vec![ExactMatrix::zeros(total, total); index.len()];
    let seq_radix = vec![k as u32; n];
    for s in 0..k.pow(n as u32) {
        let seq = mixed_radix(s, &seq_radix);
        let mut h = vec![0u32; k];
        let mut m = ExactMatrix::identity(1);
        for &i in &seq {
            h[i as usize] += 1;
            m = m.kron(&es[i as usize]);
        }
        let b = index.index_of(&h).expect("composition");
        big[b] = big[b].add(&m)?;
    }
    let idx: Vec<usize> = code
        .words
        .iter()
        .map(|w| w.iter().fold(0usize, |acc, &s| acc * v + s))
        .collect();
    let size = code.len() as i64;
    let scale = GaussRat::real(BigRational::new(BigInt::from(total), BigInt::from(size * size)));
    let mut poly = MPoly::zero(k);
    for (alpha, e) in index.iter().zip(&big) {
        let mut s = GaussRat::zero();
        for &x in &idx {
            for &y in &idx {
                s += &e[(x, y)];
            }
        }
        poly.add_term(alpha.parts().to_vec(), &s * &scale);
    }
    Ok(WeightEnumerator { poly, n: n as u32 })
}

/// Check closure under addition; the witness is the first pair whose sum
/// leaves the code.
pub fn check_additive(code: &Code) -> Result<()> {
    let t = code.base.translation().ok_or(Error::NoTranslation)?;
    let set: HashSet<&[usize]> = code.words.iter().map(Vec::as_slice).collect();
    for a in &code.words {
        for b in &code.words {
            let s: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| t.add_vertices(x, y)).collect();
            if !set.contains(s.as_slice()) {
                return Err(Error::NotAdditive { a: a.clone(), b: b.clone() });
            }
        }
    }
    Ok(())
}

pub fn dual_code(code: &Code) -> Result<Code> {
    dual_code_with_cap(code, DEFAULT_SIZE_CAP)
}

/// `C⊥ = {a ∈ Γⁿ : χ_a(x) = 1 for all x ∈ C}`, with `χ_a` identified with
/// the vertex of `a`. Membership is `Σ_j Σ_f a_{jf} x_{jf} / m_f ∈ Z`.
pub fn dual_code_with_cap(code: &Code, cap: usize) -> Result<Code> {
    check_additive(code)?;
    let t = code.base.translation().ok_or(Error::NoTranslation)?;
    let v = code.base.v();
    let n = code.n;
    let total = check_cap((v as u128).saturating_pow(n as u32), cap)?;
    let orders = t.orders();
    let l = orders.iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m as u64));
    let weight: Vec<u64> = orders.iter().map(|&m| l / m as u64).collect();
    let elems: Vec<Vec<u64>> = (0..v).map(|x| t.element(x).iter().map(|&e| e as u64).collect()).collect();
    let pairing = |a: usize, x: usize| -> u64 {
        elems[a].iter().zip(&elems[x]).zip(&weight).map(|((&p, &q), &w)| p * q * w).sum::<u64>()
    };
    let radix = vec![v as u32; n];
    let words: Vec<Vec<usize>> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let a: Vec<usize> = mixed_radix(i, &radix).into_iter().map(|s| s as usize).collect();
            let orthogonal = code
                .words
                .iter()
                .all(|x| a.iter().zip(x).map(|(&aj, &xj)| pairing(aj, xj)).sum::<u64>() % l == 0);
            orthogonal.then_some(a)
        })
        .collect();
    Code::new(code.base.clone(), words)
}

/// `W_{C⊥} = (v^n / |C|) · W_C(P⁻¹ t)`, exactly.
///
/// Idempotent `r` is matched with the class containing the characters of
/// row `r`; this is the row order produced by the builders.
pub fn translation_duality_check(code: &Code) -> Result<bool> {
    let p = code.base.exact_eigenmatrix()?;
    let dual = dual_code(code)?;
    let lhs = weight_enumerator(&dual);
    let rhs = macwilliams_transform(&weight_enumerator(code), p, code.base.v(), code.len())?;
    Ok(lhs == rhs)
}

fn content_matches(a: &Code, b: &Code) -> bool {
    let sa: BTreeSet<&Vec<usize>> = a.words.iter().collect();
    let sb: BTreeSet<&Vec<usize>> = b.words.iter().collect();
    sa == sb
}

/// `C⊥⊥ = C` as sets.
pub fn double_dual_check(code: &Code) -> Result<bool> {
    let dd = dual_code(&dual_code(code)?)?;
    Ok(content_matches(code, &dd))
}

/// Complete (4 variables), symmetrized (3) and Lee (2) enumerators of a code over Z4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Enumerators {
    pub cwe: MPoly,
    pub swe: MPoly,
    pub lee: MPoly,
}

fn z4_words_code(base: AssociationScheme, words: &[Vec<usize>]) -> Result<Code> {
    Code::new(base, words.to_vec())
}

/// Square-map substitution `(s², st, t²)` into two variables.
fn lee_images() -> Vec<MPoly> {
    let s = MPoly::var(2, 0);
    let t = MPoly::var(2, 1);
    vec![s.mul(&s), s.mul(&t), t.mul(&t)]
}

pub fn z4_enumerators(code: &Code) -> Result<Z4Enumerators> {
    let d = z4_words_code(group_scheme(&[4])?, code.words())?;
    let cwe = weight_enumerator(&d).into_poly();
    let swe = cwe.rename_vars(&[0, 1, 2, 1], 3);
    let lee = swe.compose(&lee_images())?;
    Ok(Z4Enumerators { cwe, swe, lee })
}

/// Symmetrized enumerator computed directly over the 4-cycle scheme.
pub fn z4_swe_over_cycle(code: &Code) -> Result<MPoly> {
    Ok(weight_enumerator(&z4_words_code(cycle_scheme(4)?, code.words())?).into_poly())
}

fn scaled(p: MPoly, code_size: usize) -> MPoly {
    p.scale(&GaussRat::from_frac(1, code_size as i64))
}

/// `(1/|C|) · W(s+t+u+v, s+it−u−iv, s−t+u−v, s−it−u+iv)`.
pub fn z4_cwe_transform(cwe: &MPoly, code_size: usize) -> Result<MPoly> {
    let rows: Vec<Vec<GaussRat>> = (0..4).map(|a| (0..4).map(|g| GaussRat::i_pow(a * g)).collect()).collect();
    let images: Vec<MPoly> = rows.iter().map(|r| MPoly::linear(r)).collect();
    Ok(scaled(cwe.compose(&images)?, code_size))
}

/// `(1/|C|) · W(s+2t+u, s−u, s−2t+u)`.
pub fn z4_swe_transform(swe: &MPoly, code_size: usize) -> Result<MPoly> {
    let images: Vec<MPoly> = [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
        .iter()
        .map(|r| MPoly::linear(&r.map(GaussRat::from_int)))
        .collect();
    Ok(scaled(swe.compose(&images)?, code_size))
}

/// `(1/|C|) · W((s+t)², s²−t², (s−t)²)` for a symmetrized enumerator `W`.
pub fn z4_lee_transform(swe: &MPoly, code_size: usize) -> Result<MPoly> {
    let s = MPoly::var(2, 0);
    let t = MPoly::var(2, 1);
    let plus = s.add(&t);
    let minus = s.sub(&t);
    let images = vec![plus.mul(&plus), plus.mul(&minus), minus.mul(&minus)];
    Ok(scaled(swe.compose(&images)?, code_size))
}

/// Gray map `0 ↦ 00, 1 ↦ 01, 2 ↦ 11, 3 ↦ 10`, an isometry from the 4-cycle
/// onto `H(2, 2)`.
pub const GRAY: [[usize; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];

pub fn gray_image(code: &Code) -> Result<Code> {
    let words = code
        .words()
        .iter()
        .map(|w| {
            w.iter()
                .map(|&s| GRAY.get(s).copied().ok_or(Error::SymbolOutOfRange { symbol: s, v: 4 }))
                .collect::<Result<Vec<_>>>()
                .map(|bits| bits.concat())
        })
        .collect::<Result<Vec<_>>>()?;
    Code::new(one_class(2)?, words)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Report {
    pub cwe_identity: bool,
    pub swe_identity: bool,
    /// Symmetrized enumerator from the complete one agrees with the one
    /// counted over the 4-cycle.
    pub swe_fusion: bool,
    pub lee_identity: bool,
    /// Lee enumerator equals the binary enumerator of the Gray image.
    pub gray_binary: bool,
}

impl Z4Report {
    pub fn holds(&self) -> bool {
        self.cwe_identity && self.swe_identity && self.swe_fusion && self.lee_identity && self.gray_binary
    }
}

/// All Z4 identities for an additive code given by its words.
pub fn z4_check(code: &Code) -> Result<Z4Report> {
    let d = z4_words_code(group_scheme(&[4])?, code.words())?;
    let dual = dual_code(&d)?;
    let e = z4_enumerators(&d)?;
    let ed = z4_enumerators(&dual)?;
    let size = d.len();
    let binary = weight_enumerator(&gray_image(&d)?).into_poly();
    Ok(Z4Report {
        cwe_identity: ed.cwe == z4_cwe_transform(&e.cwe, size)?,
        swe_identity: ed.swe == z4_swe_transform(&e.swe, size)?,
        swe_fusion: e.swe == z4_swe_over_cycle(&d)?,
        lee_identity: ed.lee == z4_lee_transform(&e.swe, size)?,
        gray_binary: e.lee == binary,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayLeeReport {
    pub identity: bool,
    pub binary_matches: bool,
}

impl GrayLeeReport {
    pub fn holds(&self) -> bool {
        self.identity && self.binary_matches
    }
}

pub fn gray_lee_check(code: &Code) -> Result<GrayLeeReport> {
    let r = z4_check(code)?;
    Ok(GrayLeeReport { identity: r.lee_identity, binary_matches: r.gray_binary })
}

/// Apply the transform twice; for additive codes this returns `W`.
pub fn macwilliams_involution(w: &WeightEnumerator, p: &ExactMatrix, v: usize, code_size: usize) -> Result<bool> {
    let once = macwilliams_transform(w, p, v, code_size)?;
    let total = BigInt::from(v).pow(w.n);
    let (dual_size, rem) = num_integer::Integer::div_rem(&total, &BigInt::from(code_size));
    if !rem.is_zero() {
        return Ok(false);
    }
    let dual_size: usize = dual_size.try_into().map_err(|_| Error::InvalidArgument("dual size overflow".into()))?;
    let twice = macwilliams_transform(&once, p, v, dual_size)?;
    Ok(&twice == w)
}
