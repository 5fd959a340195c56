//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;

use bosemesner::builders::{cycle_scheme, group_scheme, hamming, one_class};
use bosemesner::coding::{self, Code};
use bosemesner::generalized_hamming::{build_explicit, dual_eigenmatrix_gh, eigenmatrix_gh, fusion_check_trans};
use bosemesner::modular::{induced_modular_check, search_t, verify_modular};
use bosemesner::scheme::{self, canonical_row_order, krein_parameters, verify_table, EigenOptions};
use bosemesner::{AssociationScheme, CompositionIndex, ExactMatrix, GaussRat, MPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every identity below is exact; this only bounds the numeric
/// diagonalization that precedes certification in criterion 3.
const EIGEN_TOLERANCE: f64 = 1e-9;
const EIGEN_MAX_DENOMINATOR: u64 = 1_000_000;
const SEED: u64 = 0x5eed_2024;
const CAP: usize = 4096;

const MACW_CODES: usize = 60;
const DUAL_CODES: usize = 60;
const Z4_CODES: usize = 30;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn int(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

fn d_matrix() -> ExactMatrix {
    let i = GaussRat::i();
    let m = GaussRat::from_ints(0, -1);
    ExactMatrix::from_rows(vec![
        vec![int(1), int(1), int(1), int(1)],
        vec![int(1), i.clone(), int(-1), m.clone()],
        vec![int(1), int(-1), int(1), int(-1)],
        vec![int(1), m, int(-1), i],
    ])
    .unwrap()
}

fn c_scheme() -> AssociationScheme {
    cycle_scheme(4).unwrap()
}

fn d_scheme() -> AssociationScheme {
    group_scheme(&[4]).unwrap()
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in 2..=6usize {
        let want = ExactMatrix::from_int_rows(&[&[1, q as i64 - 1], &[1, -1]]);
        if one_class(q).unwrap().exact_eigenmatrix().unwrap() != &want {
            pass = false;
            notes.push(format!("one_class({q}) eigenmatrix differs"));
        }
    }
    let c_want = ExactMatrix::from_int_rows(&[&[1, 2, 1], &[1, 0, -1], &[1, -2, 1]]);
    if c_scheme().exact_eigenmatrix().unwrap() != &c_want {
        pass = false;
        notes.push("C eigenmatrix differs".into());
    }
    let d = d_scheme();
    let p_d = d.exact_eigenmatrix().unwrap();
    if p_d != &d_matrix() {
        pass = false;
        notes.push("D eigenmatrix differs from the displayed matrix".into());
    } else {
        notes.push("one_class(2..6), C, D: displayed matrices reproduced".into());
    }
    let four = ExactMatrix::scalar(4, &int(4));
    let square = p_d.mul(p_d).unwrap();
    if square != four {
        pass = false;
        let swap13 = ExactMatrix::identity(4).permute_rows(&[0, 3, 2, 1]).scale(&int(4));
        notes.push(format!(
            "P_D^2 != 4I: P_D^2 = 4*(rows 1,3 swapped) [{}], P_D*conj(P_D) = 4I [{}]",
            square == swap13,
            p_d.mul(&p_d.conj()).unwrap() == four
        ));
    }
    outcome(pass, notes.join("; "))
}

fn grid() -> Vec<(&'static str, AssociationScheme, usize)> {
    let mut out = Vec::new();
    let bases: [(&str, AssociationScheme); 4] =
        [("one_class(2)", one_class(2).unwrap()), ("one_class(3)", one_class(3).unwrap()), ("C", c_scheme()), ("D", d_scheme())];
    for (name, base) in bases {
        for n in 2..=3usize {
            if base.v().pow(n as u32) <= CAP {
                out.push((name, base.clone(), n));
            }
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, base, n) in grid() {
        count += 1;
        match build_explicit(&base, n) {
            Ok(s) => {
                let (report, _) = verify_table(s.table());
                let expected = CompositionIndex::new(n as u32, base.classes()).len();
                if !report.passed() || s.classes() != expected {
                    bad.push(format!("H({n},{name})"));
                }
            }
            Err(e) => bad.push(format!("H({n},{name}): {e}")),
        }
    }
    outcome(bad.is_empty(), format!("{count} schemes checked; failures: {bad:?}"))
}

fn criterion_3() -> Outcome {
    let opts = EigenOptions { tolerance: EIGEN_TOLERANCE, max_denominator: EIGEN_MAX_DENOMINATOR, ..Default::default() };
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, base, n) in grid() {
        count += 1;
        let explicit = build_explicit(&base, n).unwrap();
        let gf = eigenmatrix_gh(base.exact_eigenmatrix().unwrap(), n as u32).unwrap();
        match scheme::eigenmatrix(&explicit, &opts) {
            Ok(computed) if canonical_row_order(&computed) == canonical_row_order(&gf) => {}
            Ok(_) => bad.push(format!("H({n},{name}) differs")),
            Err(e) => bad.push(format!("H({n},{name}): {e}")),
        }
    }
    outcome(bad.is_empty(), format!("{count} schemes compared; failures: {bad:?}"))
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for q in 2..=4i64 {
        let p = one_class(q as usize).unwrap().exact_eigenmatrix().unwrap().clone();
        let first = MPoly::linear(&[int(1), int(q - 1)]);
        let second = MPoly::linear(&[int(1), int(-1)]);
        for n in 1..=6u32 {
            let hat = eigenmatrix_gh(&p, n).unwrap();
            let index = CompositionIndex::new(n, 2);
            for j in 0..=n {
                let row = index.index_of(&[n - j, j]).unwrap();
                let poly = first.pow(n - j).mul(&second.pow(j));
                for i in 0..=n {
                    let col = index.index_of(&[n - i, i]).unwrap();
                    if hat[(row, col)] != poly.coeff(&[n - i, i]) {
                        bad.push((q, n, j));
                    }
                }
            }
        }
    }
    bad.dedup();
    outcome(bad.is_empty(), format!("q in 2..=4, n in 1..=6; mismatched (q, n, row): {bad:?}"))
}

fn random_code(rng: &mut ChaCha8Rng, base: AssociationScheme, n: usize, max_size: usize) -> Code {
    let v = base.v();
    let total = v.pow(n as u32);
    let size = rng.gen_range(1..=max_size.min(total));
    let mut all: Vec<usize> = (0..total).collect();
    all.shuffle(rng);
    let words = all[..size]
        .iter()
        .map(|&x| (0..n).map(|k| (x / v.pow(k as u32)) % v).collect())
        .collect();
    Code::new(base, words).unwrap()
}

fn random_additive(rng: &mut ChaCha8Rng, base: AssociationScheme, n: usize) -> Code {
    let v = base.v();
    let gens: Vec<Vec<usize>> = (0..rng.gen_range(1..=3)).map(|_| (0..n).map(|_| rng.gen_range(0..v)).collect()).collect();
    Code::span(base, n, &gens).unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let bases = [one_class(2).unwrap(), c_scheme(), d_scheme()];
    let mut bad = 0;
    for _ in 0..MACW_CODES {
        let base = bases.choose(&mut rng).unwrap().clone();
        let n = rng.gen_range(1..=2);
        let code = random_code(&mut rng, base.clone(), n, 8);
        let w = coding::weight_enumerator(&code);
        let transform = coding::macwilliams_transform(&w, base.exact_eigenmatrix().unwrap(), base.v(), code.len()).unwrap();
        if coding::dual_weight_enumerator_direct(&code).unwrap() != transform {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{MACW_CODES} random codes, {bad} mismatches"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let groups: [&[u32]; 3] = [&[2], &[4], &[2, 2]];
    let mut bad = Vec::new();
    for k in 0..DUAL_CODES {
        let orders = groups[k % 3];
        let base = group_scheme(orders).unwrap();
        let n = rng.gen_range(1..=4);
        let code = random_additive(&mut rng, base.clone(), n);
        let dual = coding::dual_code(&code).unwrap();
        let sizes = code.len() * dual.len() == base.v().pow(n as u32);
        let identity = coding::translation_duality_check(&code).unwrap();
        let double = coding::double_dual_check(&code).unwrap();
        if !(sizes && identity && double) {
            bad.push(format!("{orders:?}^{n} |C|={}", code.len()));
        }
    }
    outcome(bad.is_empty(), format!("{DUAL_CODES} random additive codes; failures: {bad:?}"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut sizes = BTreeSet::new();
    let mut bad = Vec::new();
    for _ in 0..Z4_CODES {
        let n = rng.gen_range(1..=4);
        let code = random_additive(&mut rng, d_scheme(), n);
        sizes.insert((n, code.len()));
        let r = coding::z4_check(&code).unwrap();
        if !r.holds() {
            bad.push(format!("n={n} |C|={}: {:?}", code.len(), [r.cwe_identity, r.swe_identity, r.swe_fusion, r.lee_identity, r.gray_binary]));
        }
    }
    outcome(bad.is_empty(), format!("{Z4_CODES} random Z4 codes ({} distinct (n,|C|)); failures: {bad:?}", sizes.len()))
}

fn criterion_8() -> Outcome {
    let r = fusion_check_trans(&one_class(2).unwrap(), 2, 2).unwrap();
    let weight_two = CompositionIndex::new(4, 2).index_of(&[2, 2]).unwrap();
    let split: Vec<usize> = match &r.mapping {
        Some(map) => (0..r.coarse_classes).filter(|&c| map.iter().filter(|&&x| x == c).count() > 1).collect(),
        None => Vec::new(),
    };
    let binary = r.is_fusion && split == vec![weight_two] && r.fine_classes == 6 && r.coarse_classes == 5;
    let ternary = fusion_check_trans(&one_class(3).unwrap(), 2, 2).unwrap();
    outcome(
        binary && ternary.is_fusion,
        format!(
            "one_class(2): {} -> {} classes, split {split:?}; one_class(3): fusion {} ({} -> {})",
            r.fine_classes, r.coarse_classes, ternary.is_fusion, ternary.fine_classes, ternary.coarse_classes
        ),
    )
}

fn criterion_9() -> Outcome {
    let bases = [("C", c_scheme()), ("one_class(2)", one_class(2).unwrap()), ("one_class(3)", one_class(3).unwrap()), ("one_class(4)", one_class(4).unwrap())];
    let mut bad = Vec::new();
    for (name, base) in bases {
        let p = base.exact_eigenmatrix().unwrap();
        let v = base.v();
        for n in 2..=3u32 {
            let hat = eigenmatrix_gh(p, n).unwrap();
            let scale = int(v.pow(n) as i64);
            let inverse_scaled = hat.inverse().unwrap().scale(&scale);
            let formal = dual_eigenmatrix_gh(p, v, n).unwrap() == inverse_scaled;
            let self_dual = inverse_scaled == hat;
            if !(formal && self_dual) {
                bad.push(format!("H({n},{name}) formal={formal} self={self_dual}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("C, one_class(2..4), n in 2..=3; failures: {bad:?}"))
}

fn criterion_10() -> Outcome {
    let p = ExactMatrix::from_int_rows(&[&[1, 1], &[1, -1]]);
    let outcome_ = search_t(&p).unwrap();
    let found: Vec<(Vec<GaussRat>, GaussRat)> = outcome_.witnesses().iter().map(|w| (w.diagonal(), w.c.clone())).collect();
    let mut notes = Vec::new();
    let mut pass = true;
    for sign in [1i64, -1] {
        let diag = vec![int(1), GaussRat::from_ints(0, sign)];
        let c = GaussRat::from_ints(2, 2 * sign);
        let t = ExactMatrix::diagonal(&diag);
        let exact = verify_modular(&p, &t).map(|w| w.c == c).unwrap_or(false);
        let searched = found.contains(&(diag.clone(), c.clone()));
        let lifted = (2..=3u32).all(|n| {
            induced_modular_check(&p, &t, &c, n)
                .map(|r| r.holds && r.constant_is_power() && r.induced_constant.as_ref() == Some(&c.pow(n)))
                .unwrap_or(false)
        });
        pass &= exact && searched && lifted;
        notes.push(format!("T=diag(1,{}) c={c}: found {searched}, exact {exact}, lift n=2,3 with c^n {lifted}", diag[1]));
    }
    outcome(pass, notes.join("; "))
}

fn criterion_11() -> Outcome {
    let mut schemes: Vec<(String, AssociationScheme)> = Vec::new();
    for q in 2..=5 {
        schemes.push((format!("one_class({q})"), one_class(q).unwrap()));
    }
    for (n, q) in [(2, 2), (3, 2), (2, 3), (4, 2)] {
        schemes.push((format!("hamming({n},{q})"), hamming(n, q).unwrap()));
    }
    for orders in [&[2][..], &[4], &[2, 2], &[2, 4], &[4, 4]] {
        schemes.push((format!("group({orders:?})"), group_scheme(orders).unwrap()));
    }
    schemes.push(("cycle(4)".into(), c_scheme()));
    schemes.push(("cycle(6)".into(), cycle_scheme(6).unwrap()));
    for (name, base, n) in grid() {
        schemes.push((format!("H({n},{name})"), build_explicit(&base, n).unwrap()));
    }
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, s) in &schemes {
        if s.eigenmatrix().is_none() {
            continue;
        }
        checked += 1;
        if let Err(e) = krein_parameters(s) {
            bad.push(format!("{name}: {e}"));
        }
    }
    let k = krein_parameters(&d_scheme()).unwrap();
    let mut convolution = true;
    for i in 0..4 {
        for j in 0..4 {
            for r in 0..4 {
                let want = int(if r == (i + j) % 4 { 1 } else { 0 });
                convolution &= k.get(i, j, r) == &want;
            }
        }
    }
    outcome(
        bad.is_empty() && convolution,
        format!("{checked} schemes non-negative (failures {bad:?}); Z4 convolution pattern {convolution}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("eigenmatrices of one_class, C, D", criterion_1),
        ("H(n, A) passes the axioms", criterion_2),
        ("generating-function eigenmatrix", criterion_3),
        ("Hamming rows as Krawtchouk products", criterion_4),
        ("MacWilliams transform vs explicit idempotents", criterion_5),
        ("dual codes in translation schemes", criterion_6),
        ("Z4 enumerator identities", criterion_7),
        ("H(mn, A) as a fusion of H(m, H(n, A))", criterion_8),
        ("formal self-duality of H(n, A)", criterion_9),
        ("modular invariance and its lift", criterion_10),
        ("Krein parameters", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {:>2} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
