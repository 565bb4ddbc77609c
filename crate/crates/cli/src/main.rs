use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use heiscat::bimodel::{induced_character_decomposition_with_bound, mackey_check, verify_local_relation, LocalRelation};
use heiscat::combinatorics::Partition;
use heiscat::diagcat::{
    evaluate_closed, k0_class, parse_diagram, simplify, verify_k0_relations, ClosedValue, IdempotentKind, Morphism,
};
use heiscat::heisenberg::{
    fock_apply, heis_normalize, heis_product, verify_boson_relation, verify_heis_relation, verify_weak_fock, HeisWord,
};
use heiscat::nilcoxeter::{
    ind_k, nc_product, phi_g, phi_k, res_k, verify_bimodule_iso, Flavor, KVector, NilcoxElem,
};
use heiscat::scalar::{fmt_scalar, Int, Scalar};
use heiscat::suite::{self, CaseStatus, SuiteConfig};
use heiscat::symfunc::{self, antipode, coproduct, hall_pairing, lr_coefficients, multiply, schur, SymFunc};
use heiscat::weyl::{weyl_apply, weyl_multiply, weyl_pairing, PolyVector, WeylElement};
use heiscat::{Error, Report};

#[derive(Parser)]
#[command(name = "heiscat", version, about = "Exact computations in the Heisenberg algebra and its categorifications")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest symmetric-function degree used by verifications.
    #[arg(long, global = true, default_value_t = suite::DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    /// Largest symmetric-group rank used by verifications.
    #[arg(long, global = true, default_value_t = suite::DEFAULT_MAX_RANK)]
    max_rank: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = suite::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric functions.
    #[command(subcommand)]
    Sym(SymCmd),
    /// The Weyl algebra and its polynomial representation.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Nilcoxeter algebras and their Grothendieck groups.
    #[command(subcommand)]
    Nilcox(NilcoxCmd),
    /// The Heisenberg algebra and Fock space.
    #[command(subcommand)]
    Heis(HeisCmd),
    /// The bimodule model over symmetric group algebras.
    #[command(subcommand)]
    Bimod(BimodCmd),
    /// String diagrams.
    #[command(subcommand)]
    Diag(DiagCmd),
    /// Run the full verification matrix.
    VerifyAll,
}

#[derive(Subcommand)]
enum SymCmd {
    /// Rewrite an element in another basis.
    Convert {
        f: String,
        #[arg(long)]
        to: String,
    },
    /// Product of two elements, in the basis of the first unless `--to` is given.
    Mul {
        f: String,
        g: String,
        #[arg(long)]
        to: Option<String>,
    },
    /// Hall inner product.
    Pair { f: String, g: String },
    /// Schur function of a partition.
    Schur {
        partition: String,
        #[arg(long, default_value = "m")]
        to: String,
    },
    /// Littlewood-Richardson coefficients of `s_λ s_μ`.
    Lr { lambda: String, mu: String },
    /// Coproduct, both legs in the basis of the input.
    Coproduct { f: String },
    /// Antipode.
    Antipode { f: String },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Normal-ordered product of the factors, left to right.
    Normalize {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Action of an element on a lattice vector.
    Apply { u: String, v: String },
    /// Pairing of an `R'` vector with an `R` vector.
    Pair { v: String, w: String },
}

#[derive(Subcommand)]
enum NilcoxCmd {
    /// Product in `N_n`.
    Mul {
        a: String,
        b: String,
        #[arg(long)]
        n: usize,
    },
    /// Bimodule isomorphism `N_{n+1} = N_n ⊗ N_{n+1} ⊕ N_n`.
    VerifyIso {
        #[arg(long)]
        n: usize,
    },
    /// Induction and restriction on the classes `[L_n]` and `[N_n]`.
    KMaps {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum HeisCmd {
    /// Normal form of a word.
    Normalize { word: String },
    /// Normal form of a product of words.
    Mul {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Action of a word on a symmetric function.
    Fock { word: String, f: String },
    /// Check the defining relation and its boson and Fock-space shadows.
    Verify(HeisVerify),
}

#[derive(Args)]
struct HeisVerify {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Fock-space degree bound.
    #[arg(long, default_value_t = 6)]
    degree: usize,
}

#[derive(Subcommand)]
enum BimodCmd {
    /// Local relations as matrix identities at levels `0..=max-rank`.
    VerifyRelations {
        /// One relation id; all of them when omitted.
        #[arg(long)]
        relation: Option<String>,
    },
    /// Mackey decomposition of `Res Ind` over `A_k`.
    Mackey {
        #[arg(long)]
        k: usize,
    },
    /// Simple multiplicities of `Ind(S^λ ⊗ S^μ)`.
    Decompose { lambda: String, mu: String },
}

#[derive(Subcommand)]
enum DiagCmd {
    /// Parse and re-render a diagram.
    Parse { text: String },
    /// Simplify a diagram with the local relations.
    Simplify { text: String },
    /// Value of a closed diagram.
    Eval { text: String },
    /// Grothendieck group relations between `S_↓^n` and `Λ_↑^m`.
    K0 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

/// What a command prints, in each output mode.
struct Output {
    text: String,
    /// Rendered JSON, so key order survives.
    json: String,
    /// Whether everything checked passed.
    ok: bool,
}

impl Output {
    fn value(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json: json.to_string(),
            ok: true,
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn parse<T, E>(text: &str) -> CliResult<T>
where
    T: std::str::FromStr<Err = E>,
    E: Into<Error>,
{
    text.parse().map_err(|e: E| Failure::from(e.into()))
}

fn scalar_json(c: &Scalar) -> Value {
    Value::String(fmt_scalar(c))
}

fn int_json(c: &Int) -> Value {
    i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string()))
}

fn sym_out(f: &SymFunc) -> Output {
    Output::value(f.to_string(), symfunc::to_json(f))
}

/// `{"[2]":1,"[1,1]":1}`, keys in partition order.
fn multiplicities(m: &std::collections::BTreeMap<Partition, Int>) -> Output {
    let body: Vec<String> = m
        .iter()
        .map(|(p, c)| format!("{}:{}", Value::String(p.to_string()), int_json(c)))
        .collect();
    let text = format!("{{{}}}", body.join(","));
    Output {
        json: text.clone(),
        text,
        ok: true,
    }
}

/// Folds a verification call into an output; failures still print the report.
fn report(result: heiscat::Result<Report>) -> CliResult<Output> {
    let (report, ok) = match result {
        Ok(r) => (r, true),
        Err(Error::Verification(f)) => (f.report, false),
        Err(e) => return Err(e.into()),
    };
    let verdict = if ok { "pass" } else { "fail" };
    Ok(Output {
        text: format!("{report}{verdict}"),
        json: json!({ "pass": ok, "checks": report.to_json() }).to_string(),
        ok,
    })
}

fn merged(results: impl IntoIterator<Item = heiscat::Result<Report>>) -> CliResult<Output> {
    let mut all = Report::new();
    let mut ok = true;
    for r in results {
        match r {
            Ok(rep) => all.extend(rep),
            Err(Error::Verification(f)) => {
                ok = false;
                all.extend(f.report);
            }
            Err(e) => return Err(e.into()),
        }
    }
    report(if ok { Ok(all) } else { all.into_result().map_err(Error::from) })
}

fn run_sym(cmd: SymCmd) -> CliResult<Output> {
    Ok(match cmd {
        SymCmd::Convert { f, to } => sym_out(&parse::<SymFunc, _>(&f)?.to_basis(parse(&to)?)),
        SymCmd::Mul { f, g, to } => {
            let (f, g) = (parse::<SymFunc, _>(&f)?, parse::<SymFunc, _>(&g)?);
            let target = match to {
                Some(t) => parse(&t)?,
                None => f.basis(),
            };
            sym_out(&multiply(&f, &g).to_basis(target))
        }
        SymCmd::Pair { f, g } => {
            let v = hall_pairing(&parse(&f)?, &parse(&g)?);
            Output::value(fmt_scalar(&v), scalar_json(&v))
        }
        SymCmd::Schur { partition, to } => sym_out(&schur(&parse(&partition)?).to_basis(parse(&to)?)),
        SymCmd::Lr { lambda, mu } => multiplicities(&lr_coefficients(&parse(&lambda)?, &parse(&mu)?)),
        SymCmd::Coproduct { f } => {
            let f: SymFunc = parse(&f)?;
            let delta = coproduct(&f);
            let letter = delta.basis.letter();
            let terms: Vec<String> = delta
                .terms
                .iter()
                .map(|((a, b), c)| {
                    let c = fmt_scalar(c);
                    let c = if c == "1" { String::new() } else { format!("{c} ") };
                    format!("{c}{letter}{a} (x) {letter}{b}")
                })
                .collect();
            let json_terms: Vec<Value> = delta
                .terms
                .iter()
                .map(|((a, b), c)| json!({ "left": a, "right": b, "coeff": scalar_json(c) }))
                .collect();
            let text = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            Output::value(text, json!({ "basis": delta.basis, "terms": json_terms }))
        }
        SymCmd::Antipode { f } => sym_out(&antipode(&parse(&f)?)),
    })
}

fn run_weyl(cmd: WeylCmd) -> CliResult<Output> {
    Ok(match cmd {
        WeylCmd::Normalize { factors } => {
            let mut acc = WeylElement::one();
            for f in &factors {
                acc = weyl_multiply(&acc, &parse(f)?);
            }
            let terms: Vec<Value> = acc
                .terms()
                .iter()
                .map(|(&(a, b), c)| json!({ "x": a, "d": b, "coeff": int_json(c) }))
                .collect();
            Output::value(acc.to_string(), Value::Array(terms))
        }
        WeylCmd::Apply { u, v } => {
            let out = weyl_apply(&parse(&u)?, &parse(&v)?);
            let text = out.to_string();
            Output::value(text.clone(), Value::String(text))
        }
        WeylCmd::Pair { v, w } => {
            let (v, w): (PolyVector, PolyVector) = (parse(&v)?, parse(&w)?);
            let p = weyl_pairing(&v, &w).map_err(|e| Failure::from(Error::from(e)))?;
            Output::value(p.to_string(), int_json(&p))
        }
    })
}

fn run_nilcox(cmd: NilcoxCmd) -> CliResult<Output> {
    match cmd {
        NilcoxCmd::Mul { a, b, n } => {
            let nil = |s: &str| NilcoxElem::parse(s, n).map_err(|e| Failure::from(Error::from(e)));
            let p = nc_product(&nil(&a)?, &nil(&b)?).map_err(|e| Failure::from(Error::from(e)))?;
            let text = p.to_string();
            Ok(Output::value(text.clone(), Value::String(text)))
        }
        NilcoxCmd::VerifyIso { n } => report(verify_bimodule_iso(n)),
        NilcoxCmd::KMaps { n } => {
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for flavor in [Flavor::G, Flavor::K] {
                let v = KVector::basis(flavor, n);
                let phi = |x: &KVector| {
                    match flavor {
                        Flavor::G => phi_g(x),
                        Flavor::K => phi_k(x),
                    }
                    .map(|p| p.to_string())
                    .map_err(|e| Failure::from(Error::from(e)))
                };
                let (ind, res) = (ind_k(&v), res_k(&v));
                lines.push(format!("Ind {v} = {ind}"));
                lines.push(format!("Res {v} = {res}"));
                lines.push(format!("phi({v}) = {}", phi(&v)?));
                rows.push(json!({
                    "class": v.to_string(),
                    "ind": ind.to_string(),
                    "res": res.to_string(),
                    "phi": phi(&v)?,
                }));
            }
            Ok(Output::value(lines.join("\n"), Value::Array(rows)))
        }
    }
}

fn run_heis(cmd: HeisCmd) -> CliResult<Output> {
    match cmd {
        HeisCmd::Normalize { word } => {
            let h = heis_normalize(&parse::<HeisWord, _>(&word)?);
            Ok(Output::value(h.to_string(), h.to_json()))
        }
        HeisCmd::Mul { words } => {
            let mut acc = heis_normalize(&HeisWord::default());
            for w in &words {
                acc = heis_product(&acc, &heis_normalize(&parse::<HeisWord, _>(w)?));
            }
            Ok(Output::value(acc.to_string(), acc.to_json()))
        }
        HeisCmd::Fock { word, f } => {
            let h = heis_normalize(&parse::<HeisWord, _>(&word)?);
            Ok(sym_out(&fock_apply(&h, &parse(&f)?)))
        }
        HeisCmd::Verify(HeisVerify { m, n, degree }) => merged([
            verify_heis_relation(m, n, degree),
            verify_boson_relation(m, n, degree),
            verify_weak_fock(m, n, degree),
        ]),
    }
}

fn run_bimod(cmd: BimodCmd, cfg: &SuiteConfig) -> CliResult<Output> {
    match cmd {
        BimodCmd::VerifyRelations { relation } => {
            let rels = match relation {
                Some(r) => vec![parse::<LocalRelation, _>(&r)?],
                None => LocalRelation::ALL.to_vec(),
            };
            merged(
                rels.into_iter()
                    .flat_map(|rel| (0..=cfg.max_rank).map(move |n| verify_local_relation(rel, n))),
            )
        }
        BimodCmd::Mackey { k } => report(mackey_check(k)),
        BimodCmd::Decompose { lambda, mu } => {
            let (l, m): (Partition, Partition) = (parse(&lambda)?, parse(&mu)?);
            let bound = (l.size() + m.size()).max(heiscat::bimodel::CHARACTER_BOUND);
            let d = induced_character_decomposition_with_bound(&l, &m, bound).map_err(|e| Failure::from(Error::from(e)))?;
            Ok(multiplicities(&d))
        }
    }
}

fn run_diag(cmd: DiagCmd) -> CliResult<Output> {
    let diagram = |t: &str| parse_diagram(t).map_err(|e| Failure::from(Error::from(e)));
    match cmd {
        DiagCmd::Parse { text } => {
            let d = diagram(&text)?;
            let json = json!({
                "diagram": d.to_string(),
                "domain": d.domain().to_string(),
                "codomain": d.codomain().to_string(),
                "crossings": d.crossings(),
            });
            Ok(Output::value(d.to_string(), json))
        }
        DiagCmd::Simplify { text } => {
            let m = simplify(&Morphism::from(diagram(&text)?));
            let terms: Vec<Value> = m
                .terms()
                .iter()
                .map(|(d, c)| json!({ "diagram": d.to_string(), "coeff": scalar_json(c) }))
                .collect();
            Ok(Output::value(m.to_string(), Value::Array(terms)))
        }
        DiagCmd::Eval { text } => {
            let value = evaluate_closed(&Morphism::from(diagram(&text)?)).map_err(|e| Failure::from(Error::from(e)))?;
            Ok(match value {
                ClosedValue::Scalar(c) => Output::value(fmt_scalar(&c), json!({ "value": scalar_json(&c) })),
                ClosedValue::Irreducible(m) => {
                    Output::value(format!("irreducible: {m}"), json!({ "irreducible": m.to_string() }))
                }
            })
        }
        DiagCmd::K0 { m, n } => {
            let mut out = report(verify_k0_relations(m, n))?;
            use IdempotentKind::{LambdaUp, SDown};
            let class = k0_class(&[(SDown, n), (LambdaUp, m)]);
            out.text = format!("[S^{n}][L^{m}] = {class}\n{}", out.text);
            let mut json: Value = serde_json::from_str(&out.json).expect("rendered JSON");
            json["class"] = Value::String(class.to_string());
            out.json = json.to_string();
            Ok(out)
        }
    }
}

fn run_verify_all(cfg: &SuiteConfig) -> Output {
    let cases = suite::run_suite(cfg);
    let ok = cases.iter().all(|c| c.status != CaseStatus::Fail);
    let width = cases.iter().map(|c| c.module.len() + c.id.len() + 1).max().unwrap_or(0);
    let mut text: String = cases
        .iter()
        .map(|c| {
            let status = match c.status {
                CaseStatus::Pass => "pass",
                CaseStatus::Fail => "FAIL",
                CaseStatus::Skipped => "skip",
            };
            format!("{status}  {:<width$}  {}\n", format!("{}/{}", c.module, c.id), c.detail)
        })
        .collect();
    let passed = cases.iter().filter(|c| c.status == CaseStatus::Pass).count();
    text.push_str(&format!("{passed}/{} cases passed", cases.len()));
    Output {
        text,
        json: suite::suite_json(&cases).to_string(),
        ok,
    }
}

fn run(cli: Cli) -> CliResult<Output> {
    let cfg = SuiteConfig {
        max_degree: cli.max_degree,
        max_rank: cli.max_rank,
        seed: cli.seed,
    };
    match cli.command {
        Command::Sym(c) => run_sym(c),
        Command::Weyl(c) => run_weyl(c),
        Command::Nilcox(c) => run_nilcox(c),
        Command::Heis(c) => run_heis(c),
        Command::Bimod(c) => run_bimod(c, &cfg),
        Command::Diag(c) => run_diag(c),
        Command::VerifyAll => Ok(run_verify_all(&cfg)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(AssertUnwindSafe(|| run(cli))).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure::Internal(msg))
    });
    match result {
        Ok(out) => {
            if json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
