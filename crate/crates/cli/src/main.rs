use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use rootchi::corpus::{self, CorpusEntry};
use rootchi::cyclo::CycloNum;
use rootchi::frcomplex::{self, ComplexJson, DimMap, FracComplex, PageDims};
use rootchi::gradings::{self, Collapse, DimTable, TableJson, TriSign};
use rootchi::laurent::LaurentPoly;
use rootchi::linkdiag::{parse_link, LinkDiagram};
use rootchi::skein::{HomflyInvariant, SkeinError};
use rootchi::verify::{self, VerifyReport};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;
const EXIT_IO: u8 = 4;

struct CliError {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> CliError {
    CliError { code, msg: msg.to_string() }
}

type CliResult = Result<ExitCode, CliError>;

#[derive(Parser)]
#[command(name = "rootchi", version, about = "Link polynomials, root-of-unity Euler characteristics and their checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one polynomial invariant of a link.
    Poly(PolyArgs),
    /// Run every check over a corpus.
    Verify(VerifyArgs),
    /// Work with (1/n)Z-graded complexes in JSON.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Work with dimension tables in JSON.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Homfly,
    Alexander,
    Sln,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Reduced,
    Middle,
    Unreduced,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct PolyArgs {
    /// Inline `PD[...]`, `BR[...]`, `U`, or a corpus name.
    link: String,
    #[arg(long, value_enum, default_value = "homfly")]
    invariant: Invariant,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "reduced")]
    variant: Variant,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Corpus searched for link names (default: the bundled corpus).
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, default_value = "1..6")]
    n_range: String,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Add decimal renderings of cyclotomic values to the report.
    #[arg(long)]
    approx: bool,
    /// Write 0 for every timing, so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Homology dimensions per degree.
    Hom { file: Option<PathBuf> },
    /// Euler characteristic in Z[zeta_2n].
    Chi {
        file: Option<PathBuf>,
        #[arg(long)]
        approx: bool,
    },
    /// Spectral sequence pages of the filtration.
    Ss { file: Option<PathBuf> },
    /// HFK_n of the unknot, Q[U]/(U^n), as complex JSON.
    UnknotHfkn {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Conv {
    Hfk,
    HfkPrimed,
    Sln,
}

#[derive(Subcommand)]
enum TableCmd {
    /// Bigraded Euler characteristic `sum (-1)^sign t^var dim`.
    Chi {
        file: Option<PathBuf>,
        #[arg(long, default_value = "gr_M")]
        sign: String,
        #[arg(long, default_value = "gr_T")]
        var: String,
    },
    /// Trigraded (i, j, k) Euler characteristic with sign (-1)^((k-j)/2).
    Tri { file: Option<PathBuf> },
    /// Collapse to a (1/n)Z grading and print dims and chi.
    Collapse {
        file: Option<PathBuf>,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        convention: Conv,
        /// Extra upward shift in units of 1/n.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// HFK_n of the unknot as a (gr_T, gr_M) table.
    UnknotHfkn {
        #[arg(long)]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Poly(a) => cmd_poly(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Complex(c) => cmd_complex(c),
        Cmd::Table(c) => cmd_table(c),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn read_text(file: Option<&Path>) -> Result<String, CliError> {
    match file {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| fail(EXIT_IO, format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| fail(EXIT_IO, format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn load_corpus(path: Option<&Path>) -> Result<Vec<CorpusEntry>, CliError> {
    match path {
        None => Ok(corpus::bundled()),
        Some(p) => corpus::parse_corpus(&read_text(Some(p))?).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", p.display()))),
    }
}

fn resolve_link(spec: &str, corpus_path: Option<&Path>) -> Result<LinkDiagram, CliError> {
    match parse_link(spec) {
        Ok(d) => Ok(d),
        Err(parse_err) => {
            let looks_inline = spec.contains('[') || spec.trim() == "U";
            let entries = load_corpus(corpus_path)?;
            match corpus::find(&entries, spec.trim()) {
                Some(e) if !looks_inline => Ok(e.diagram.clone()),
                _ if looks_inline => Err(fail(EXIT_INPUT, parse_err)),
                _ => Err(fail(EXIT_INPUT, format!("`{spec}` is neither a diagram nor a corpus name"))),
            }
        }
    }
}

fn skein_err(e: SkeinError) -> CliError {
    match e {
        SkeinError::TooManyCrossings { .. } => fail(EXIT_BOUND, e),
        other => fail(EXIT_FAIL, other),
    }
}

fn cmd_poly(a: PolyArgs) -> CliResult {
    let d = resolve_link(&a.link, a.corpus.as_deref())?;
    let inv = HomflyInvariant::compute(&d).map_err(skein_err)?;
    let (value, vname): (LaurentPoly, &str) = match (a.invariant, a.variant) {
        (Invariant::Homfly, Variant::Reduced) => (inv.reduced().map_err(skein_err)?, "reduced"),
        (Invariant::Homfly, Variant::Middle) => (inv.middle().map_err(skein_err)?, "middle"),
        (Invariant::Homfly, Variant::Unreduced) => (inv.unreduced_az.clone(), "unreduced"),
        (Invariant::Alexander, _) => (inv.alexander().map_err(skein_err)?, "symmetric"),
        (Invariant::Sln, v) => {
            let n = a.n.ok_or_else(|| fail(EXIT_INPUT, "--invariant sln needs --n"))?;
            if n == 0 {
                return Err(fail(EXIT_INPUT, "--n must be at least 1"));
            }
            let reduced = match v {
                Variant::Reduced => true,
                Variant::Unreduced => false,
                Variant::Middle => return Err(fail(EXIT_INPUT, "sl(n) has reduced and unreduced variants only")),
            };
            (inv.sln(n, reduced).map_err(skein_err)?, if reduced { "reduced" } else { "unreduced" })
        }
    };
    match a.format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let inv_name = match a.invariant {
                Invariant::Homfly => "homfly",
                Invariant::Alexander => "alexander",
                Invariant::Sln => "sln",
            };
            let out = json!({
                "link": a.link,
                "invariant": inv_name,
                "variant": vname,
                "n": a.n.filter(|_| matches!(a.invariant, Invariant::Sln)),
                "vars": value.trimmed().vars(),
                "value": value.to_string(),
            });
            println!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let bad = || fail(EXIT_INPUT, format!("bad --n-range `{s}`, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (u32, u32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn report_json(reports: &[VerifyReport], approx: bool, no_timing: bool) -> Value {
    let mut v = serde_json::to_value(reports).expect("reports serialize");
    for (r, rv) in reports.iter().zip(v.as_array_mut().unwrap()) {
        if no_timing {
            rv["ms"] = json!(0);
        }
        if approx {
            for (c, cv) in r.checks.iter().zip(rv["checks"].as_array_mut().unwrap()) {
                if let Some((l, rr)) = &c.approx {
                    cv["lhs_approx"] = json!(l);
                    cv["rhs_approx"] = json!(rr);
                }
            }
        }
    }
    v
}

fn cmd_verify(a: VerifyArgs) -> CliResult {
    let entries = load_corpus(a.corpus.as_deref())?;
    let ns = parse_range(&a.n_range)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| fail(EXIT_FAIL, e))?;
    let per_link: Vec<Vec<VerifyReport>> =
        pool.install(|| entries.par_iter().map(|e| verify::verify_entry(e, ns.clone())).collect());
    let (mut checks, mut failed, mut warned) = (0, 0, 0);
    for reps in &per_link {
        let link = &reps[0];
        let bad: Vec<String> = reps
            .iter()
            .flat_map(|r| {
                r.failures().map(move |c| match r.n {
                    Some(n) => format!("{}[n={n}]", c.name),
                    None => c.name.clone(),
                })
            })
            .collect();
        let warns: Vec<&str> = reps.iter().flat_map(|r| &r.checks).filter(|c| c.status == verify::Status::Warn).map(|c| c.name.as_str()).collect();
        checks += reps.iter().map(|r| r.checks.len()).sum::<usize>();
        failed += bad.len();
        warned += warns.len();
        if bad.is_empty() {
            let w = if warns.is_empty() { String::new() } else { format!("  warn: {}", warns.join(", ")) };
            println!("PASS {} (l={}){w}", link.link, link.ell);
        } else {
            println!("FAIL {} (l={}): {}", link.link, link.ell, bad.join(", "));
        }
    }
    println!(
        "{} links, n = {}..{}, {checks} checks, {failed} failed, {warned} warnings",
        per_link.len(),
        ns.start(),
        ns.end()
    );
    if let Some(path) = &a.report {
        let all: Vec<VerifyReport> = per_link.into_iter().flatten().collect();
        let text = serde_json::to_string_pretty(&report_json(&all, a.approx, a.no_timing)).unwrap();
        std::fs::write(path, text + "\n").map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))?;
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn load_complex(file: Option<&Path>) -> Result<FracComplex, CliError> {
    let text = read_text(file)?;
    let j: ComplexJson = serde_json::from_str(&text).map_err(|e| fail(EXIT_INPUT, format!("complex JSON: {e}")))?;
    FracComplex::from_json(&j).map_err(|e| fail(EXIT_INPUT, format!("invalid complex: {e}")))
}

fn frac(deg: i64, n: u32) -> String {
    let g = num_gcd(deg.unsigned_abs(), n as u64) as i64;
    let (p, q) = (deg / g, n as i64 / g);
    if q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn print_dims(dims: &DimMap, n: u32) {
    if dims.is_empty() {
        println!("0");
    }
    for (&deg, &k) in dims {
        println!("{}\t{k}", frac(deg, n));
    }
}

fn print_chi(chi: &CycloNum, approx: bool) {
    if approx {
        println!("{}\t~ {}", chi.compact(), chi.approx_string());
    } else {
        println!("{}", chi.compact());
    }
}

fn page_line(page: &PageDims, n: u32) -> String {
    if page.is_empty() {
        return "0".into();
    }
    page.iter().map(|(&(d, p), &k)| format!("{}@{p}:{k}", frac(d, n))).collect::<Vec<_>>().join(" ")
}

fn cmd_complex(c: ComplexCmd) -> CliResult {
    match c {
        ComplexCmd::Hom { file } => {
            let cx = load_complex(file.as_deref())?;
            print_dims(&cx.homology().dims, cx.n());
        }
        ComplexCmd::Chi { file, approx } => {
            let cx = load_complex(file.as_deref())?;
            print_chi(&cx.euler_char(), approx);
        }
        ComplexCmd::Ss { file } => {
            let cx = load_complex(file.as_deref())?;
            let ss = frcomplex::spectral_sequence(&cx);
            for (r, page) in ss.pages.iter().enumerate() {
                println!("E{r}: {}", page_line(page, cx.n()));
            }
            println!("Einf: {}", page_line(&ss.e_infinity, cx.n()));
            println!("gr H: {}", page_line(&ss.graded_homology, cx.n()));
            println!("stabilizes at E{}", ss.stabilization);
            println!("chi: {}", frcomplex::page_chi(cx.n(), &ss.e_infinity).compact());
        }
        ComplexCmd::UnknotHfkn { n } => {
            if n == 0 {
                return Err(fail(EXIT_INPUT, "--n must be at least 1"));
            }
            println!("{}", serde_json::to_string(&frcomplex::unknot_hfkn(n).to_json()).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_table(file: Option<&Path>) -> Result<DimTable, CliError> {
    let text = read_text(file)?;
    let j: TableJson = serde_json::from_str(&text).map_err(|e| fail(EXIT_INPUT, format!("table JSON: {e}")))?;
    DimTable::from_json(&j).map_err(|e| fail(EXIT_INPUT, e))
}

fn cmd_table(c: TableCmd) -> CliResult {
    let input = |e: gradings::GradingError| fail(EXIT_INPUT, e);
    match c {
        TableCmd::Chi { file, sign, var } => {
            let t = load_table(file.as_deref())?;
            println!("{}", gradings::chi_bigraded(&t, &sign, &var).map_err(input)?);
        }
        TableCmd::Tri { file } => {
            let t = load_table(file.as_deref())?;
            println!("{}", gradings::chi_trigraded(&t, TriSign::Homfly).map_err(input)?);
        }
        TableCmd::Collapse { file, n, convention, shift } => {
            if n == 0 {
                return Err(fail(EXIT_INPUT, "--n must be at least 1"));
            }
            let t = load_table(file.as_deref())?;
            let conv = match convention {
                Conv::Hfk => Collapse::Hfk,
                Conv::HfkPrimed => Collapse::HfkPrimed,
                Conv::Sln => Collapse::Sln,
            };
            let dims = gradings::collapse_to_frac(&t, n, conv, shift).map_err(input)?;
            print_dims(&dims, n);
            println!("chi: {}", frcomplex::chi_of_dims(n, &dims).compact());
        }
        TableCmd::UnknotHfkn { n } => {
            if n == 0 {
                return Err(fail(EXIT_INPUT, "--n must be at least 1"));
            }
            println!("{}", serde_json::to_string(&gradings::unknot_hfkn_table(n).to_json()).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}
