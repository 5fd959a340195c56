//! The modular invariance property `(PT)³ = cI` with `T` diagonal: exact
//! verification, a search for `T`, and the lift to `H(n, A)`.

use nalgebra::{Complex, DMatrix, DVector};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{induced_matrix, ExactMatrix, GaussRat, MPoly};
use crate::error::{Error, Result};

/// A diagonal `T` and nonzero `c` with `(PT)³ = cI` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularWitness {
    pub t: ExactMatrix,
    pub c: GaussRat,
}

impl ModularWitness {
    pub fn diagonal(&self) -> Vec<GaussRat> {
        (0..self.t.rows()).map(|i| self.t[(i, i)].clone()).collect()
    }
}

pub fn verify_modular(p: &ExactMatrix, t: &ExactMatrix) -> Result<ModularWitness> {
    if !p.is_square() || !t.is_square() || p.rows() != t.rows() {
        return Err(Error::DimensionMismatch(format!(
            "P is {}x{}, T is {}x{}",
            p.rows(),
            p.cols(),
            t.rows(),
            t.cols()
        )));
    }
    if !t.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let pt = p.mul(t)?;
    let m = pt.mul(&pt)?.mul(&pt)?;
    let c = m[(0, 0)].clone();
    for r in 0..m.rows() {
        for k in 0..m.cols() {
            let expected = if r == k { &c } else { &GaussRat::zero() };
            if &m[(r, k)] != expected {
                return Err(Error::NotScalar { row: r, col: k, value: m[(r, k)].to_string() });
            }
        }
    }
    if c.is_zero() {
        return Err(Error::ZeroConstant);
    }
    Ok(ModularWitness { t: t.clone(), c })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMethod {
    Elimination,
    Numeric,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub restarts: usize,
    pub iterations: usize,
    pub tolerance: f64,
    pub max_denominator: u64,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { restarts: 200, iterations: 80, tolerance: 1e-9, max_denominator: 1_000_000, seed: 0x7e57 }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// Every exact witness found, normalized by `T[0][0] = 1`, sorted by the
    /// diagonal in canonical order. `free` marks a solution set with a free
    /// entry; only its values `±1, ±i` are listed.
    Found { witnesses: Vec<ModularWitness>, method: SearchMethod, free: bool },
    /// Nothing verified. This is not a proof that no `T` exists.
    NotFound { method: SearchMethod, restarts: usize, detail: String },
}

impl SearchOutcome {
    pub fn witnesses(&self) -> &[ModularWitness] {
        match self {
            SearchOutcome::Found { witnesses, .. } => witnesses,
            SearchOutcome::NotFound { .. } => &[],
        }
    }

    pub fn first(&self) -> Option<&ModularWitness> {
        self.witnesses().first()
    }
}

pub fn search_t(p: &ExactMatrix) -> Result<SearchOutcome> {
    search_t_with(p, &SearchOptions::default())
}

/// Look for `T = diag(1, t_1, …, t_d)`. With one or two unknowns the
/// polynomial system is eliminated exactly; beyond that, or when elimination
/// degenerates, damped Gauss–Newton restarts are snapped and re-verified.
pub fn search_t_with(p: &ExactMatrix, opts: &SearchOptions) -> Result<SearchOutcome> {
    if !p.is_square() || p.rows() == 0 {
        return Err(Error::DimensionMismatch(format!("P is {}x{}", p.rows(), p.cols())));
    }
    let d = p.rows() - 1;
    if d == 0 {
        let t = ExactMatrix::identity(1);
        return Ok(match verify_modular(p, &t) {
            Ok(w) => SearchOutcome::Found { witnesses: vec![w], method: SearchMethod::Elimination, free: false },
            Err(e) => SearchOutcome::NotFound { method: SearchMethod::Elimination, restarts: 0, detail: e.to_string() },
        });
    }
    if d <= 2 {
        let conditions = conditions(p);
        let candidates = if d == 1 { solve_one(&conditions, opts) } else { solve_two(&conditions, opts) };
        if let Some((candidates, free)) = candidates {
            let found = collect_witnesses(p, candidates);
            return Ok(if found.is_empty() {
                SearchOutcome::NotFound {
                    method: SearchMethod::Elimination,
                    restarts: 0,
                    detail: "no Gaussian-rational solution of the eliminated system".into(),
                }
            } else {
                SearchOutcome::Found { witnesses: found, method: SearchMethod::Elimination, free }
            });
        }
    }
    let candidates = numeric_search(p, opts);
    let found = collect_witnesses(p, candidates);
    Ok(if found.is_empty() {
        SearchOutcome::NotFound {
            method: SearchMethod::Numeric,
            restarts: opts.restarts,
            detail: format!("search incomplete after {} restarts", opts.restarts),
        }
    } else {
        SearchOutcome::Found { witnesses: found, method: SearchMethod::Numeric, free: false }
    })
}

fn collect_witnesses(p: &ExactMatrix, candidates: Vec<Vec<GaussRat>>) -> Vec<ModularWitness> {
    let mut found: Vec<ModularWitness> = Vec::new();
    for tail in candidates {
        let diag: Vec<GaussRat> = std::iter::once(GaussRat::one()).chain(tail).collect();
        if let Ok(w) = verify_modular(p, &ExactMatrix::diagonal(&diag)) {
            if !found.contains(&w) {
                found.push(w);
            }
        }
    }
    found.sort_by(|a, b| {
        a.diagonal()
            .iter()
            .zip(b.diagonal().iter())
            .map(|(x, y)| x.canonical_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    found
}

/// Entries of `(PT)³ − (PT)³[0][0]·I` as polynomials in `t_1..t_d`.
fn conditions(p: &ExactMatrix) -> Vec<MPoly> {
    let k = p.rows();
    let d = k - 1;
    let pt: Vec<Vec<MPoly>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    let mut e = vec![0u32; d];
                    if c > 0 {
                        e[c - 1] = 1;
                    }
                    MPoly::monomial(e, p[(r, c)].clone())
                })
                .collect()
        })
        .collect();
    let mul = |a: &Vec<Vec<MPoly>>, b: &Vec<Vec<MPoly>>| -> Vec<Vec<MPoly>> {
        (0..k)
            .map(|r| (0..k).map(|c| (0..k).fold(MPoly::zero(d), |acc, j| acc.add(&a[r][j].mul(&b[j][c])))).collect())
            .collect()
    };
    let m = mul(&mul(&pt, &pt), &pt);
    let mut out = Vec::new();
    for r in 0..k {
        for c in 0..k {
            let f = if r == c {
                if r == 0 {
                    continue;
                }
                m[r][r].sub(&m[0][0])
            } else {
                m[r][c].clone()
            };
            if !f.is_zero() {
                out.push(f);
            }
        }
    }
    out
}

// univariate polynomials over the Gaussian rationals, lowest degree first

type UPoly = Vec<GaussRat>;

fn trim(mut f: UPoly) -> UPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn divrem(f: &UPoly, g: &UPoly) -> (UPoly, UPoly) {
    let g = trim(g.clone());
    let mut r = trim(f.clone());
    if r.len() < g.len() {
        return (vec![], r);
    }
    let lead_inv = g.last().expect("nonzero divisor").inv().expect("nonzero lead");
    let mut q = vec![GaussRat::zero(); r.len() - g.len() + 1];
    while r.len() >= g.len() && !r.is_empty() {
        let shift = r.len() - g.len();
        let factor = r.last().unwrap() * &lead_inv;
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] -= &(&factor * gc);
        }
        q[shift] = factor;
        r = trim(r);
    }
    (q, r)
}

fn monic(f: UPoly) -> UPoly {
    let f = trim(f);
    match f.last() {
        Some(l) => {
            let inv = l.inv().expect("nonzero lead");
            f.iter().map(|c| c * &inv).collect()
        }
        None => f,
    }
}

fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn derivative(f: &UPoly) -> UPoly {
    f.iter().enumerate().skip(1).map(|(i, c)| c * &GaussRat::from_int(i as i64)).collect()
}

fn squarefree(f: &UPoly) -> UPoly {
    let g = gcd(f, &derivative(f));
    monic(divrem(f, &g).0)
}

fn eval(f: &UPoly, x: &GaussRat) -> GaussRat {
    f.iter().rev().fold(GaussRat::zero(), |acc, c| &acc * x + c)
}

/// Numeric roots by Durand–Kerner, then snapped to Gaussian rationals.
fn rational_roots(f: &UPoly, opts: &SearchOptions) -> Vec<GaussRat> {
    let f = squarefree(f);
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return vec![];
    }
    let coeffs: Vec<Complex<f64>> = f.iter().map(|c| { let (re, im) = c.to_c64(); Complex::new(re, im) }).collect();
    let value = |z: Complex<f64>| coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = Complex::new(0.4, 0.9);
    let radius = 1.0 + coeffs.iter().take(deg).map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex<f64>> = (0..deg).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = value(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    let mut out: Vec<GaussRat> = Vec::new();
    for r in z {
        if let Some(x) = GaussRat::snap(r.re, r.im, opts.tolerance.max(1e-7), opts.max_denominator) {
            if eval(&f, &x).is_zero() && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

fn as_univariate(f: &MPoly) -> UPoly {
    let deg = f.degree().unwrap_or(0) as usize;
    let mut u = vec![GaussRat::zero(); deg + 1];
    for (e, c) in f.terms() {
        u[e[0] as usize] = c.clone();
    }
    trim(u)
}

fn solve_one(conds: &[MPoly], opts: &SearchOptions) -> Option<(Vec<Vec<GaussRat>>, bool)> {
    let mut g: UPoly = vec![];
    for f in conds {
        g = gcd(&g, &as_univariate(f));
    }
    if g.is_empty() {
        return Some((unit_values().into_iter().map(|x| vec![x]).collect(), true));
    }
    Some((rational_roots(&g, opts).into_iter().map(|x| vec![x]).collect(), false))
}

/// Coefficients in `b` (variable 1), each a polynomial in `a` (variable 0).
fn split_in_b(f: &MPoly) -> Vec<UPoly> {
    let deg_b = f.terms().map(|(e, _)| e[1] as usize).max().unwrap_or(0);
    let deg_a = f.terms().map(|(e, _)| e[0] as usize).max().unwrap_or(0);
    let mut out = vec![vec![GaussRat::zero(); deg_a + 1]; deg_b + 1];
    for (e, c) in f.terms() {
        out[e[1] as usize][e[0] as usize] = c.clone();
    }
    out
}

fn sylvester(f: &[GaussRat], g: &[GaussRat]) -> ExactMatrix {
    // f, g lowest degree first with formal degrees len-1
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut s = ExactMatrix::zeros(size, size);
    for row in 0..n {
        for (i, c) in f.iter().rev().enumerate() {
            s[(row, row + i)] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in g.iter().rev().enumerate() {
            s[(n + row, row + i)] = c.clone();
        }
    }
    s
}

/// `Res_b(f, g)` as a polynomial in `a`, by evaluation at integer points and
/// Newton interpolation.
fn resultant_in_b(f: &MPoly, g: &MPoly) -> UPoly {
    let (fb, gb) = (split_in_b(f), split_in_b(g));
    if fb.len() < 2 || gb.len() < 2 {
        return vec![];
    }
    let deg_a = |p: &Vec<UPoly>| p.iter().map(|c| c.len()).max().unwrap_or(1) - 1;
    let bound = (fb.len() - 1) * deg_a(&gb) + (gb.len() - 1) * deg_a(&fb);
    let points: Vec<GaussRat> = (0..=bound as i64).map(GaussRat::from_int).collect();
    let values: Vec<GaussRat> = points
        .iter()
        .map(|a| {
            let fv: Vec<GaussRat> = fb.iter().map(|c| eval(c, a)).collect();
            let gv: Vec<GaussRat> = gb.iter().map(|c| eval(c, a)).collect();
            sylvester(&fv, &gv).determinant().expect("square")
        })
        .collect();
    interpolate(&points, &values)
}

fn interpolate(xs: &[GaussRat], ys: &[GaussRat]) -> UPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = (&xs[i] - &xs[i - j]).inv().expect("distinct points");
            coef[i] = &(&coef[i] - &coef[i - 1]) * &den;
        }
    }
    let mut poly: UPoly = vec![coef[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // poly = poly·(x − xs[i]) + coef[i]
        let mut next = vec![GaussRat::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &(c * &xs[i]);
        }
        next[0] += &coef[i];
        poly = next;
    }
    trim(poly)
}

/// Values tried for a variable left free by every condition.
fn unit_values() -> Vec<GaussRat> {
    (0..4).map(GaussRat::i_pow).collect()
}

/// Eliminate variable 1: gcd of all `Res_b(f, g)` and of the conditions
/// that do not involve `b`. Empty when everything vanishes identically.
fn eliminate_b(conds: &[MPoly]) -> UPoly {
    let mut g: UPoly = vec![];
    for f in conds {
        if f.terms().all(|(e, _)| e[1] == 0) {
            g = gcd(&g, &as_univariate(&f.rename_vars(&[0, 0], 1)));
        }
    }
    for (i, f) in conds.iter().enumerate() {
        for h in &conds[i + 1..] {
            let r = resultant_in_b(f, h);
            if !r.is_empty() {
                g = gcd(&g, &r);
            }
        }
    }
    g
}

/// Rational roots `a` of `ga`, each completed by the roots in `b` of the
/// specialized system; a `b` left free is replaced by the unit values.
fn back_substitute(conds: &[MPoly], ga: &UPoly, opts: &SearchOptions, free: &mut bool) -> Vec<Vec<GaussRat>> {
    let mut out = Vec::new();
    for a in rational_roots(ga, opts) {
        let mut gb: UPoly = vec![];
        for f in conds {
            let coeffs: UPoly = split_in_b(f).iter().map(|c| eval(c, &a)).collect();
            gb = gcd(&gb, &coeffs);
        }
        let bs = if gb.is_empty() {
            *free = true;
            unit_values()
        } else {
            rational_roots(&gb, opts)
        };
        out.extend(bs.into_iter().map(|b| vec![a.clone(), b]));
    }
    out
}

fn solve_two(conds: &[MPoly], opts: &SearchOptions) -> Option<(Vec<Vec<GaussRat>>, bool)> {
    let mut free = false;
    let ga = eliminate_b(conds);
    if !ga.is_empty() {
        return Some((back_substitute(conds, &ga, opts, &mut free), free));
    }
    let swapped: Vec<MPoly> = conds.iter().map(|f| f.rename_vars(&[1, 0], 2)).collect();
    let gb = eliminate_b(&swapped);
    if gb.is_empty() {
        return None;
    }
    let sols = back_substitute(&swapped, &gb, opts, &mut free);
    Some((sols.into_iter().map(|v| vec![v[1].clone(), v[0].clone()]).collect(), free))
}

type C64 = Complex<f64>;

fn residual_and_jacobian(p: &DMatrix<C64>, t: &[C64]) -> (DVector<C64>, DMatrix<C64>) {
    let k = p.nrows();
    let mut diag = vec![Complex::new(1.0, 0.0)];
    diag.extend_from_slice(t);
    let tm = DMatrix::from_diagonal(&DVector::from_vec(diag));
    let x = p * &tm;
    let x2 = &x * &x;
    let m = &x2 * &x;
    let rows = k * k - 1;
    let mut r = DVector::zeros(rows);
    let pick = |m: &DMatrix<C64>, out: &mut dyn FnMut(usize, C64)| {
        let mut idx = 0;
        for a in 0..k {
            for b in 0..k {
                if a == b && a == 0 {
                    continue;
                }
                let v = if a == b { m[(a, a)] - m[(0, 0)] } else { m[(a, b)] };
                out(idx, v);
                idx += 1;
            }
        }
    };
    pick(&m, &mut |i, v| r[i] = v);
    let mut jac = DMatrix::zeros(rows, k - 1);
    for u in 1..k {
        // d(PT)/dt_u = P·E_uu
        let mut dx = DMatrix::zeros(k, k);
        dx.set_column(u, &p.column(u));
        let dm = &dx * &x2 + &x * &dx * &x + &x2 * &dx;
        pick(&dm, &mut |i, v| jac[(i, u - 1)] = v);
    }
    (r, jac)
}

fn numeric_search(p: &ExactMatrix, opts: &SearchOptions) -> Vec<Vec<GaussRat>> {
    let k = p.rows();
    let pm = DMatrix::from_fn(k, k, |r, c| {
        let (re, im) = p[(r, c)].to_c64();
        Complex::new(re, im)
    });
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for _ in 0..opts.restarts {
        let mut t: Vec<C64> = (0..k - 1)
            .map(|_| Complex::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)))
            .collect();
        let mut lambda = 1e-3;
        let (mut r, mut jac) = residual_and_jacobian(&pm, &t);
        for _ in 0..opts.iterations {
            let norm = r.norm();
            if norm < 1e-13 {
                break;
            }
            let jh = jac.adjoint();
            let mut a = &jh * &jac;
            for i in 0..a.nrows() {
                a[(i, i)] += Complex::new(lambda, 0.0);
            }
            let rhs = -(&jh * &r);
            let Some(step) = a.lu().solve(&rhs) else { break };
            let trial: Vec<C64> = t.iter().zip(step.iter()).map(|(x, s)| x + s).collect();
            let (tr, tj) = residual_and_jacobian(&pm, &trial);
            if tr.norm() < norm {
                t = trial;
                r = tr;
                jac = tj;
                lambda = (lambda * 0.3).max(1e-12);
            } else {
                lambda *= 10.0;
            }
        }
        if r.norm() > 1e-8 {
            continue;
        }
        let snapped: Option<Vec<GaussRat>> =
            t.iter().map(|z| GaussRat::snap(z.re, z.im, opts.tolerance, opts.max_denominator)).collect();
        if let Some(s) = snapped {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedReport {
    pub holds: bool,
    /// Scalar of `(P̂T̂)³`, when it is one.
    pub induced_constant: Option<GaussRat>,
    /// `c^n`.
    pub expected_power: GaussRat,
    /// `T̂` built entrywise agrees with `induced_matrix(T, n)`.
    pub diagonal_consistent: bool,
}

impl InducedReport {
    pub fn constant_is_power(&self) -> bool {
        self.induced_constant.as_ref() == Some(&self.expected_power)
    }
}

/// Lift a witness to `P̂ = induced(P, n)` and `T̂[α][α] = Π_i T[i][i]^{α_i}`.
pub fn induced_modular_check(p: &ExactMatrix, t: &ExactMatrix, c: &GaussRat, n: u32) -> Result<InducedReport> {
    if !t.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let p_hat = induced_matrix(p, n)?;
    let diag: Vec<GaussRat> = (0..t.rows()).map(|i| t[(i, i)].clone()).collect();
    let t_hat = crate::arith::induced_diagonal(&diag, n);
    let diagonal_consistent = induced_matrix(t, n)? == t_hat;
    let (holds, induced_constant) = match verify_modular(&p_hat, &t_hat) {
        Ok(w) => (true, Some(w.c)),
        Err(Error::NotScalar { .. }) | Err(Error::ZeroConstant) => (false, None),
        Err(e) => return Err(e),
    };
    Ok(InducedReport { holds, induced_constant, expected_power: c.pow(n), diagonal_consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cycle_scheme, one_class};

    fn hadamard() -> ExactMatrix {
        ExactMatrix::from_int_rows(&[&[1, 1], &[1, -1]])
    }

    #[test]
    fn verify_examples() {
        let t = ExactMatrix::diagonal(&[GaussRat::one(), GaussRat::i()]);
        assert_eq!(verify_modular(&hadamard(), &t).unwrap().c, GaussRat::from_ints(2, 2));
        assert!(matches!(verify_modular(&hadamard(), &ExactMatrix::zeros(2, 2)), Err(Error::NotScalar { .. }) | Err(Error::ZeroConstant)));
        assert!(matches!(verify_modular(&hadamard(), &ExactMatrix::identity(2)), Err(Error::NotScalar { .. })));
        assert!(matches!(verify_modular(&hadamard(), &hadamard()), Err(Error::NotDiagonal)));
    }

    #[test]
    fn zero_t_is_rejected() {
        assert!(matches!(verify_modular(&ExactMatrix::identity(2), &ExactMatrix::zeros(2, 2)), Err(Error::ZeroConstant)));
    }

    #[test]
    fn search_one_class_two() {
        let out = search_t(one_class(2).unwrap().exact_eigenmatrix().unwrap()).unwrap();
        let ws = out.witnesses();
        assert_eq!(ws.len(), 2);
        assert_eq!(ws[0].diagonal(), vec![GaussRat::one(), GaussRat::i()]);
        assert_eq!(ws[0].c, GaussRat::from_ints(2, 2));
        assert_eq!(ws[1].diagonal(), vec![GaussRat::one(), GaussRat::from_ints(0, -1)]);
        assert_eq!(ws[1].c, GaussRat::from_ints(2, -2));
    }

    #[test]
    fn search_four_cycle() {
        let p = cycle_scheme(4).unwrap().exact_eigenmatrix().unwrap().clone();
        let out = search_t(&p).unwrap();
        assert!(matches!(out, SearchOutcome::Found { method: SearchMethod::Elimination, .. }));
        for w in out.witnesses() {
            assert_eq!(verify_modular(&p, &w.t).unwrap().c, w.c);
        }
        let expected = ExactMatrix::diagonal(&[GaussRat::one(), GaussRat::i(), GaussRat::from_int(-1)]);
        assert_eq!(out.first().unwrap().t, expected);
        assert_eq!(out.first().unwrap().c, GaussRat::from_ints(0, 8));
        // T = diag(1, a, −1) works for every a, with c = 8a
        assert!(matches!(out, SearchOutcome::Found { free: true, .. }));
        assert_eq!(out.witnesses().len(), 4);
    }

    #[test]
    fn numeric_path_matches_exact() {
        let p = cycle_scheme(4).unwrap().exact_eigenmatrix().unwrap().clone();
        let opts = SearchOptions { restarts: 40, ..Default::default() };
        let ws = collect_witnesses(&p, numeric_search(&p, &opts));
        assert!(!ws.is_empty());
    }

    #[test]
    fn search_reports_failure() {
        // no diagonal T works for an upper-triangular unipotent P
        let p = ExactMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert!(matches!(search_t(&p).unwrap(), SearchOutcome::NotFound { .. }));
    }

    #[test]
    fn lifted_constants() {
        let t = ExactMatrix::diagonal(&[GaussRat::one(), GaussRat::i()]);
        let c = GaussRat::from_ints(2, 2);
        for n in 1..=3 {
            let r = induced_modular_check(&hadamard(), &t, &c, n).unwrap();
            assert!(r.holds && r.diagonal_consistent && r.constant_is_power());
        }
        let r = induced_modular_check(&hadamard(), &t, &c, 2).unwrap();
        assert_eq!(r.induced_constant, Some(GaussRat::from_ints(0, 8)));
    }

    #[test]
    fn polynomial_helpers() {
        let f: UPoly = [-1, 0, 1].iter().map(|&x| GaussRat::from_int(x)).collect();
        let g: UPoly = [1, 1].iter().map(|&x| GaussRat::from_int(x)).collect();
        assert_eq!(gcd(&f, &g), g);
        let xs: Vec<GaussRat> = (0..4).map(GaussRat::from_int).collect();
        let ys: Vec<GaussRat> = xs.iter().map(|x| eval(&f, x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
        let mut roots = rational_roots(&f, &SearchOptions::default());
        roots.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(roots, vec![GaussRat::one(), GaussRat::from_int(-1)]);
    }
}
