use std::fs;
use std::io::Read;
use std::process::ExitCode;

use bosemesner::coding::{self, Code};
use bosemesner::generalized_hamming::{self as gh, GHScheme};
use bosemesner::io::{self, SchemeJson};
use bosemesner::modular::{self, SearchOutcome};
use bosemesner::scheme::{self, verify_table, EigenOptions};
use bosemesner::{builders, AssociationScheme, Error, ExactMatrix, GaussRat, MPoly};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bosemesner", version, about = "Exact computations with association schemes and codes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    #[command(subcommand)]
    Scheme(SchemeCmd),
    #[command(subcommand)]
    Gh(GhCmd),
    #[command(subcommand)]
    Code(CodeCmd),
    #[command(subcommand)]
    Modinv(ModCmd),
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// Build a standard scheme: one_class Q | hamming N Q | group M1 [M2 ..] | cycle M
    Build { kind: String, args: Vec<usize> },
    /// Check the axioms of a scheme JSON file (`-` for stdin).
    Verify { input: String },
    /// Eigenmatrix, exact when it certifies, numeric otherwise.
    Eigen { base: String },
    Krein { base: String },
    /// Fuse classes, e.g. `--partition "0|1,3|2"`.
    Fuse {
        base: String,
        #[arg(long)]
        partition: String,
    },
}

#[derive(Args)]
struct GhArgs {
    #[arg(long)]
    base: String,
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum GhCmd {
    Build(GhArgs),
    Eigen {
        #[command(flatten)]
        a: GhArgs,
        /// Dual eigenmatrix `induced(vP⁻¹, n)` instead.
        #[arg(long)]
        dual: bool,
    },
    Duality(GhArgs),
    FusionCheck {
        #[arg(long)]
        base: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    Enumerate {
        #[arg(long)]
        base: String,
        file: String,
    },
    /// MacWilliams transform of a code file, or of an enumerator JSON with `--size`.
    Transform {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
        /// Also evaluate the explicit-idempotent oracle.
        #[arg(long)]
        direct: bool,
        file: String,
    },
    Dual {
        #[arg(long)]
        base: String,
        file: String,
    },
    Z4 { file: String },
    GrayCheck { file: String },
}

#[derive(Args)]
struct MatrixSource {
    /// Base scheme whose eigenmatrix is used.
    #[arg(long, conflicts_with = "matrix")]
    base: Option<String>,
    /// JSON file with the matrix as nested rows.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Subcommand)]
enum ModCmd {
    Verify {
        #[command(flatten)]
        src: MatrixSource,
        /// Diagonal of T, comma separated, e.g. `1,i`.
        #[arg(long)]
        t: String,
    },
    Search {
        #[command(flatten)]
        src: MatrixSource,
    },
    Lift {
        #[command(flatten)]
        src: MatrixSource,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        n: u32,
    },
}

struct Failure {
    code: u8,
    message: String,
    detail: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidArgument(_)
            | Error::DimensionMismatch(_)
            | Error::NotSquare { .. }
            | Error::ValueOutOfRange { .. }
            | Error::LengthMismatch(..)
            | Error::SymbolOutOfRange { .. }
            | Error::DuplicateWord(..)
            | Error::EmptyCode
            | Error::InvalidPartition(_)
            | Error::InvalidTranslation(_)
            | Error::SizeCap { .. } => 2,
            _ => 1,
        };
        let detail = match &e {
            Error::AxiomViolation(r) | Error::ClosureFailure { report: r, .. } => serde_json::to_value(r.as_ref()).ok(),
            Error::NotAdditive { a, b } => Some(json!({ "a": a, "b": b })),
            _ => None,
        };
        Failure { code, message: e.to_string(), detail }
    }
}

fn io_failure(what: &str, e: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: format!("{what}: {e}"), detail: None }
}

fn math_failure(message: String, detail: Value) -> Failure {
    Failure { code: 1, message, detail: Some(detail) }
}

type Out = Result<(Value, String), Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| io_failure("stdin", e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn build_named(kind: &str, args: &[usize]) -> Result<AssociationScheme, Failure> {
    let bad = || Failure { code: 2, message: format!("bad arguments {args:?} for {kind}"), detail: None };
    Ok(match (kind, args) {
        ("one_class", [q]) => builders::one_class(*q)?,
        ("hamming", [n, q]) => builders::hamming(*n, *q)?,
        ("cycle", [m]) => builders::cycle_scheme(*m)?,
        ("group", orders) if !orders.is_empty() => {
            builders::group_scheme(&orders.iter().map(|&m| m as u32).collect::<Vec<_>>())?
        }
        ("one_class" | "hamming" | "cycle" | "group", _) => return Err(bad()),
        _ => return Err(Failure { code: 2, message: format!("unknown scheme kind {kind:?}"), detail: None }),
    })
}

/// `one_class:2`, `cycle:4`, `group:2,2`, `hamming:3:2`, or a scheme JSON path.
fn load_base(spec: &str) -> Result<AssociationScheme, Failure> {
    let kinds = ["one_class", "cycle", "group", "hamming"];
    if let Some((kind, rest)) = spec.split_once(':') {
        if kinds.contains(&kind) {
            let args = rest
                .split([',', ':'])
                .map(|s| s.trim().parse::<usize>().map_err(|e| io_failure(spec, e)))
                .collect::<Result<Vec<_>, _>>()?;
            return build_named(kind, &args);
        }
    }
    Ok(io::parse_scheme_json(&read_input(spec)?)?.into_scheme()?)
}

fn parse_matrix_json(text: &str) -> Result<ExactMatrix, Failure> {
    let v: Value = serde_json::from_str(text).map_err(|e| io_failure("matrix", e))?;
    let rows = v.as_array().ok_or_else(|| io_failure("matrix", "expected an array of rows"))?;
    let entry = |x: &Value| -> Result<GaussRat, Failure> {
        match x {
            Value::String(s) => Ok(io::parse_gauss(s)?),
            Value::Number(n) => Ok(io::parse_gauss(&n.to_string())?),
            Value::Object(_) => Ok(io::parse_gauss(&x.to_string())?),
            _ => Err(io_failure("matrix", format!("bad entry {x}"))),
        }
    };
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| io_failure("matrix", "expected a row array"))?
                .iter()
                .map(entry)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExactMatrix::from_rows(parsed)?)
}

fn load_matrix(src: &MatrixSource) -> Result<ExactMatrix, Failure> {
    match (&src.base, &src.matrix) {
        (Some(b), None) => Ok(load_base(b)?.exact_eigenmatrix()?.clone()),
        (None, Some(m)) => parse_matrix_json(&read_input(m)?),
        _ => Err(Failure { code: 2, message: "give exactly one of --base or --matrix".into(), detail: None }),
    }
}

fn parse_diag(t: &str) -> Result<ExactMatrix, Failure> {
    let entries = t.split(',').map(io::parse_gauss).collect::<Result<Vec<_>, _>>()?;
    Ok(ExactMatrix::diagonal(&entries))
}

fn var_names(prefix: &str, k: usize) -> Vec<String> {
    (0..k).map(|i| format!("{prefix}{i}")).collect()
}

fn show(p: &MPoly, prefix: &str) -> String {
    let names = var_names(prefix, p.num_vars());
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    p.display_with(&refs)
}

fn show_named(p: &MPoly, names: &[&str]) -> String {
    p.display_with(names)
}

fn load_code(base: AssociationScheme, file: &str) -> Result<Code, Failure> {
    let words = io::parse_code_text(&read_input(file)?)?;
    Ok(Code::new(base, words)?)
}

fn scheme_cmd(cmd: SchemeCmd) -> Out {
    match cmd {
        SchemeCmd::Build { kind, args } => {
            let s = build_named(&kind, &args)?;
            let text = format!(
                "v = {}, d = {}, symmetric = {}\nvalencies = {:?}\nP =\n{}",
                s.v(),
                s.d(),
                s.is_symmetric(),
                s.valencies(),
                s.eigenmatrix().map_or("(numeric only)".to_string(), |p| p.to_string())
            );
            Ok((io::scheme_to_json(&s), text))
        }
        SchemeCmd::Verify { input } => {
            let sj: SchemeJson = io::parse_scheme_json(&read_input(&input)?)?;
            let table = sj.table()?;
            let (report, numbers) = verify_table(&table);
            if !report.passed() {
                return Err(math_failure(
                    format!("not an association scheme\n{report}"),
                    serde_json::to_value(&report).unwrap_or(Value::Null),
                ));
            }
            let numbers = numbers.expect("intersection numbers of a passing table");
            if let Some(p) = &sj.p {
                scheme::certify_eigenmatrix(p, &numbers)?;
            }
            let v = json!({
                "passed": true,
                "report": report,
                "eigenmatrix_certified": sj.p.is_some(),
                "intersection_numbers": numbers.to_nested(),
            });
            Ok((v, format!("{report}\nall axioms hold")))
        }
        SchemeCmd::Eigen { base } => {
            let s = load_base(&base)?;
            match s.eigenmatrix() {
                Some(p) => Ok((json!({ "exact": true, "P": p }), format!("P =\n{p}"))),
                None => {
                    let num = scheme::numeric_eigenmatrix(&s, &EigenOptions::default())?;
                    let rows: Vec<Vec<[f64; 2]>> =
                        num.iter().map(|r| r.iter().map(|&(re, im)| [re, im]).collect()).collect();
                    let text: Vec<String> = num
                        .iter()
                        .map(|r| r.iter().map(|&(re, im)| format!("{re:.9}{im:+.9}i")).collect::<Vec<_>>().join("  "))
                        .collect();
                    Ok((
                        json!({ "exact": false, "P_numeric": rows }),
                        format!("no exact eigenmatrix; numeric values:\n{}", text.join("\n")),
                    ))
                }
            }
        }
        SchemeCmd::Krein { base } => {
            let s = load_base(&base)?;
            let k = scheme::krein_parameters(&s)?;
            let nested = k.to_nested();
            let mut text = String::new();
            for (i, block) in nested.iter().enumerate() {
                for (j, row) in block.iter().enumerate() {
                    let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    text.push_str(&format!("q[{i}][{j}] = ({})\n", r.join(", ")));
                }
            }
            Ok((json!({ "krein": nested, "nonnegative": true }), text.trim_end().to_string()))
        }
        SchemeCmd::Fuse { base, partition } => {
            let s = load_base(&base)?;
            let blocks = partition
                .split('|')
                .map(|b| b.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| io_failure("partition", e))).collect())
                .collect::<Result<Vec<Vec<usize>>, _>>()?;
            let f = scheme::fusion(&s, &blocks)?;
            let text = format!(
                "fusion: v = {}, d = {}\nP =\n{}",
                f.v(),
                f.d(),
                f.eigenmatrix().map_or("(numeric only)".to_string(), |p| p.to_string())
            );
            Ok((io::scheme_to_json(&f), text))
        }
    }
}

fn labels(g: &GHScheme) -> Vec<String> {
    g.class_index().iter().map(|c| c.to_string()).collect()
}

fn gh_cmd(cmd: GhCmd) -> Out {
    match cmd {
        GhCmd::Build(a) => {
            let base = load_base(&a.base)?;
            let s = gh::build_explicit(&base, a.n as usize)?;
            let text = format!("H({}, A): v = {}, classes = {}, axioms hold", a.n, s.v(), s.classes());
            Ok((io::scheme_to_json(&s), text))
        }
        GhCmd::Eigen { a, dual } => {
            let g = GHScheme::new(load_base(&a.base)?, a.n);
            let m = if dual { g.dual_eigenmatrix()? } else { g.eigenmatrix()? };
            let l = labels(&g);
            Ok((json!({ "compositions": l, "matrix": m }), format!("index: {}\n{m}", l.join(" "))))
        }
        GhCmd::Duality(a) => {
            let base = load_base(&a.base)?;
            let r = gh::formal_duality_check(base.exact_eigenmatrix()?, base.v(), a.n);
            let reorder = r.reordering.as_ref().map(|o| json!({ "rows": o.rows, "cols": o.cols }));
            let v = json!({
                "formally_dual": r.formally_dual,
                "self_dual": r.self_dual,
                "lifted_self_dual": r.lifted_self_dual,
                "reordering": reorder,
            });
            let text = format!(
                "formally dual: {}\nself-dual: {}\nH(n, A) self-dual: {}\nself-dual after reordering: {}",
                r.formally_dual,
                r.self_dual,
                r.lifted_self_dual,
                r.reordering.as_ref().map_or("no".into(), |o| format!("rows {:?}, cols {:?}", o.rows, o.cols))
            );
            if !r.formally_dual {
                return Err(math_failure(text, v));
            }
            Ok((v, text))
        }
        GhCmd::FusionCheck { base, m, n } => {
            let r = gh::fusion_check_trans(&load_base(&base)?, m, n)?;
            let v = json!({
                "is_fusion": r.is_fusion,
                "mapping": r.mapping,
                "fine_classes": r.fine_classes,
                "coarse_classes": r.coarse_classes,
            });
            let text = format!(
                "H({}, A) is a fusion of H({m}, H({n}, A)): {}\nclasses {} -> {}\nmapping {:?}",
                m * n,
                r.is_fusion,
                r.fine_classes,
                r.coarse_classes,
                r.mapping
            );
            if !r.is_fusion {
                return Err(math_failure(text, v));
            }
            Ok((v, text))
        }
    }
}

fn code_cmd(cmd: CodeCmd) -> Out {
    match cmd {
        CodeCmd::Enumerate { base, file } => {
            let code = load_code(load_base(&base)?, &file)?;
            let w = coding::weight_enumerator(&code);
            let dist: Vec<String> = coding::inner_distribution(&code).iter().map(|x| x.to_string()).collect();
            let v = json!({ "size": code.len(), "n": code.n(), "enumerator": io::poly_to_json(w.poly()), "inner_distribution": dist });
            Ok((v, format!("|C| = {}\nW(s) = {}", code.len(), show(w.poly(), "s"))))
        }
        CodeCmd::Transform { base, n, size, direct, file } => {
            let base = load_base(&base)?;
            let p = base.exact_eigenmatrix()?.clone();
            let text = read_input(&file)?;
            let (w, code_size, code) = if text.trim_start().starts_with('{') {
                let size = size.ok_or_else(|| io_failure("transform", "--size is required with an enumerator file"))?;
                (coding::WeightEnumerator::from_poly(io::parse_poly_json(&text)?)?, size, None)
            } else {
                let code = Code::new(base.clone(), io::parse_code_text(&text)?)?;
                (coding::weight_enumerator(&code), code.len(), Some(code))
            };
            if let Some(n) = n {
                if n as u32 != w.degree() {
                    return Err(io_failure("transform", format!("--n {n} but words have length {}", w.degree())));
                }
            }
            let t = coding::macwilliams_transform(&w, &p, base.v(), code_size)?;
            let mut v = json!({ "enumerator": io::poly_to_json(t.poly()), "nonnegative": t.is_nonnegative() });
            let mut out = format!("W⊥(t) = {}", show(t.poly(), "t"));
            if direct {
                let code = code.ok_or_else(|| io_failure("transform", "--direct needs a code file"))?;
                let d = coding::dual_weight_enumerator_direct(&code)?;
                v["direct_matches"] = json!(d == t);
                out.push_str(&format!("\nexplicit idempotents agree: {}", d == t));
            }
            Ok((v, out))
        }
        CodeCmd::Dual { base, file } => {
            let code = load_code(load_base(&base)?, &file)?;
            let dual = coding::dual_code(&code)?;
            let holds = coding::translation_duality_check(&code).ok();
            let v = json!({
                "size": code.len(),
                "dual_size": dual.len(),
                "words": dual.words(),
                "enumerator": io::poly_to_json(coding::weight_enumerator(&dual).poly()),
                "macwilliams_holds": holds,
            });
            let text = format!(
                "|C| = {}, |C⊥| = {}\n{}W_C⊥ = (v^n/|C|) W_C(P⁻¹t): {}",
                code.len(),
                dual.len(),
                io::code_to_text(dual.words()),
                holds.map_or("n/a (no exact eigenmatrix)".into(), |h| h.to_string())
            );
            Ok((v, text))
        }
        CodeCmd::Z4 { file } => {
            let code = load_code(builders::group_scheme(&[4])?, &file)?;
            let e = coding::z4_enumerators(&code)?;
            let v = json!({
                "cwe": io::poly_to_json(&e.cwe),
                "swe": io::poly_to_json(&e.swe),
                "lee": io::poly_to_json(&e.lee),
            });
            let text = format!(
                "cwe = {}\nswe = {}\nlee = {}",
                show_named(&e.cwe, &["s", "t", "u", "v"]),
                show_named(&e.swe, &["s", "t", "u"]),
                show_named(&e.lee, &["s", "t"])
            );
            Ok((v, text))
        }
        CodeCmd::GrayCheck { file } => {
            let code = load_code(builders::group_scheme(&[4])?, &file)?;
            let r = coding::z4_check(&code)?;
            let v = json!({
                "cwe_identity": r.cwe_identity,
                "swe_identity": r.swe_identity,
                "swe_fusion": r.swe_fusion,
                "lee_identity": r.lee_identity,
                "gray_binary": r.gray_binary,
                "holds": r.holds(),
            });
            let text = format!(
                "complete MacWilliams: {}\nsymmetrized MacWilliams: {}\nsymmetrized = 4-cycle enumerator: {}\nGray/Lee identity: {}\nLee = binary enumerator of Gray image: {}",
                r.cwe_identity, r.swe_identity, r.swe_fusion, r.lee_identity, r.gray_binary
            );
            if !r.holds() {
                return Err(math_failure(text, v));
            }
            Ok((v, text))
        }
    }
}

fn witness_json(w: &modular::ModularWitness) -> Value {
    json!({ "T": w.diagonal(), "c": w.c })
}

fn witness_text(w: &modular::ModularWitness) -> String {
    let d: Vec<String> = w.diagonal().iter().map(|x| x.to_string()).collect();
    format!("T = diag({}), c = {}", d.join(", "), w.c)
}

fn modinv_cmd(cmd: ModCmd) -> Out {
    match cmd {
        ModCmd::Verify { src, t } => {
            let p = load_matrix(&src)?;
            let w = modular::verify_modular(&p, &parse_diag(&t)?)?;
            Ok((witness_json(&w), witness_text(&w)))
        }
        ModCmd::Search { src } => {
            let p = load_matrix(&src)?;
            match modular::search_t(&p)? {
                SearchOutcome::Found { witnesses, method, free } => {
                    let v = json!({
                        "found": true,
                        "method": format!("{method:?}"),
                        "free_parameter": free,
                        "witnesses": witnesses.iter().map(witness_json).collect::<Vec<_>>(),
                    });
                    let mut text: Vec<String> = witnesses.iter().map(witness_text).collect();
                    if free {
                        text.push("(solution set has a free entry; unit values listed)".into());
                    }
                    Ok((v, text.join("\n")))
                }
                SearchOutcome::NotFound { method, restarts, detail } => Err(math_failure(
                    format!("search incomplete: {detail}"),
                    json!({ "found": false, "method": format!("{method:?}"), "restarts": restarts, "detail": detail }),
                )),
            }
        }
        ModCmd::Lift { src, t, n } => {
            let p = load_matrix(&src)?;
            let w = match t {
                Some(t) => modular::verify_modular(&p, &parse_diag(&t)?)?,
                None => match modular::search_t(&p)?.first() {
                    Some(w) => w.clone(),
                    None => return Err(math_failure("no witness to lift".into(), json!({ "found": false }))),
                },
            };
            let r = modular::induced_modular_check(&p, &w.t, &w.c, n)?;
            let v = json!({
                "base": witness_json(&w),
                "n": n,
                "holds": r.holds,
                "induced_constant": r.induced_constant,
                "expected_power": r.expected_power,
                "constant_is_power": r.constant_is_power(),
                "diagonal_consistent": r.diagonal_consistent,
            });
            let text = format!(
                "{}\nlift to n = {n}: holds = {}, constant = {}, c^n = {}",
                witness_text(&w),
                r.holds,
                r.induced_constant.as_ref().map_or("-".into(), |c| c.to_string()),
                r.expected_power
            );
            if !r.holds {
                return Err(math_failure(text, v));
            }
            Ok((v, text))
        }
    }
}

fn emit(text: &str) {
    use std::io::Write;
    // A closed pipe downstream is not an error for us.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Scheme(c) => scheme_cmd(c),
        Cmd::Gh(c) => gh_cmd(c),
        Cmd::Code(c) => code_cmd(c),
        Cmd::Modinv(c) => modinv_cmd(c),
    };
    match result {
        Ok((v, text)) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&v).expect("json"));
            } else {
                emit(&text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if cli.json {
                let v = json!({ "error": f.message, "detail": f.detail });
                emit(&serde_json::to_string_pretty(&v).expect("json"));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
