use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tilting::classifier::{classify, phi_map, psi_map, Caps};
use tilting::complex::{generation_search, is_generalized_two_term_in_place, is_presilting, num_distinct_summands};
use tilting::corpus::{builtin, load_dir, run_case};
use tilting::format::{parse_algebra, parse_census, parse_complex, parse_module, peek_field, print_census, print_complex, print_module};
use tilting::universe::{census, hunt_question1, Census};
use tilting::{Algebra, Error, Field, Fp, Result};

#[derive(Parser)]
#[command(name = "tilt", version, about = "Tilting-type predicates for modules over bound quiver algebras")]
struct Cli {
    #[command(flatten)]
    session: Session,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct Session {
    /// Field order; defaults to the `field` line of the input, else 2.
    #[arg(long, global = true)]
    field: Option<u64>,
    /// Census bound per vertex, e.g. `2,2,2`; defaults to 2 everywhere.
    #[arg(long, global = true, value_delimiter = ',')]
    bound: Option<Vec<usize>>,
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,
    /// Depth of the generation search.
    #[arg(long = "cap-cone", global = true)]
    cap_cone: Option<usize>,
    /// Multiplicity cap of the `Pres^k` search.
    #[arg(long = "cap-surj", global = true)]
    cap_surj: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report to this file (`-` for standard output).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a module against every predicate.
    Classify {
        algebra: PathBuf,
        /// Module file; defaults to the algebra file.
        module: Option<PathBuf>,
        /// Census file to use instead of enumerating one.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Run a corpus of cases against their pinned expectations.
    Examples {
        /// Directory of `.case` files; defaults to the built-in corpus.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Enumerate indecomposables up to the bound and print them as a census file.
    Census {
        algebra: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search basic modules for n-AIR-tilting modules that are not strongly n-AIR-tilting.
    Hunt {
        algebra: PathBuf,
        #[arg(long)]
        census: Option<PathBuf>,
        /// Largest number of indecomposable summands; defaults to the number of vertices.
        #[arg(long = "max-summands")]
        max_summands: Option<usize>,
    },
    /// Operations on complexes of projectives.
    #[command(subcommand)]
    Complex(ComplexCommand),
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Presilting, rank condition and generation of a complex.
    Check { algebra: PathBuf, complex: Option<PathBuf> },
    /// `H^0` of a generalized two-term silting complex.
    Phi {
        algebra: PathBuf,
        complex: Option<PathBuf>,
        /// Skip the generation certificate.
        #[arg(long = "assume-generates")]
        assume_generates: bool,
    },
    /// The silting complex of an n-AIR-tilting module.
    Psi { algebra: PathBuf, module: Option<PathBuf> },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Inconsistent,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_json(session: &Session, value: &serde_json::Value) -> Result<()> {
    let Some(path) = &session.json else { return Ok(()) };
    let text = serde_json::to_string_pretty(value).expect("serializable report");
    if path.as_os_str() == "-" {
        println!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text + "\n").map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
    }
}

fn caps(session: &Session) -> Caps {
    let mut caps = Caps::default();
    if let Some(d) = session.cap_cone {
        caps.cone_depth = d;
    }
    if let Some(m) = session.cap_surj {
        caps.surj = m;
    }
    caps
}

fn field_order(session: &Session, text: &str) -> Result<u64> {
    let declared = peek_field(text)?;
    match (session.field, declared) {
        (Some(p), Some(q)) if p != q => Err(Error::Usage(format!("--field {p} conflicts with `field {q}` in the input"))),
        (Some(p), _) | (None, Some(p)) => Ok(p),
        (None, None) => Ok(2),
    }
}

fn get_census<F: Field>(session: &Session, alg: &std::sync::Arc<Algebra<F>>, file: Option<&Path>) -> Result<Census<F>> {
    if let Some(f) = file {
        return parse_census(&read(f)?, alg);
    }
    let bound = session.bound.clone().unwrap_or_else(|| vec![2; alg.num_vertices()]);
    census(alg, &bound)
}

struct Inputs {
    algebra: String,
    other: String,
}

fn inputs(algebra: &Path, other: Option<&Path>) -> Result<Inputs> {
    let algebra = read(algebra)?;
    let other = match other {
        Some(p) => read(p)?,
        None => algebra.clone(),
    };
    Ok(Inputs { algebra, other })
}

fn cmd_classify<F: Field>(s: &Session, io: &Inputs, census_file: Option<&Path>) -> Result<Status> {
    let alg = parse_algebra::<F>(&io.algebra)?;
    let t = parse_module(&io.other, &alg)?;
    let cen = get_census(s, &alg, census_file)?;
    let report = classify(&t, s.n, &cen, caps(s), s.seed)?;
    print!("{}", report.to_text());
    write_json(s, &serde_json::from_str(&report.to_json()).expect("valid JSON"))?;
    Ok(if report.inconsistencies().is_empty() { Status::Ok } else { Status::Inconsistent })
}

fn cmd_census<F: Field>(s: &Session, text: &str, out: Option<&Path>) -> Result<Status> {
    let alg = parse_algebra::<F>(text)?;
    let cen = get_census(s, &alg, None)?;
    let printed = print_census(&cen);
    match out {
        Some(p) => {
            std::fs::write(p, &printed).map_err(|e| Error::Usage(format!("cannot write {}: {e}", p.display())))?;
            println!("census: {} indecomposables written to {}", cen.len(), p.display());
        }
        None => print!("{printed}"),
    }
    write_json(s, &json!({ "schema": 1, "bound": cen.bound, "method": cen.method, "size": cen.len() }))?;
    Ok(Status::Ok)
}

fn cmd_hunt<F: Field>(s: &Session, text: &str, census_file: Option<&Path>, max: Option<usize>) -> Result<Status> {
    let alg = parse_algebra::<F>(text)?;
    let cen = get_census(s, &alg, census_file)?;
    let report = hunt_question1(&cen, s.n, max.unwrap_or(alg.num_vertices()));
    println!("n: {}", report.n);
    println!("universe bound: {:?} ({} indecomposables)", report.universe_bound, cen.len());
    println!("candidates: {}", report.candidates);
    println!("n-AIR-tilting: {}", report.n_air);
    println!("separating: {}", report.separating.len());
    for hit in &report.separating {
        println!("  dims {:?}\n{}", hit.dims, hit.module);
    }
    println!("undecided: {}", report.undecided.len());
    for hit in &report.undecided {
        println!("  dims {:?}\n{}", hit.dims, hit.module);
    }
    write_json(s, &serde_json::to_value(&report).expect("serializable report"))?;
    Ok(Status::Ok)
}

fn cmd_complex_check<F: Field>(s: &Session, io: &Inputs) -> Result<Status> {
    let alg = parse_algebra::<F>(&io.algebra)?;
    let c = parse_complex(&io.other, &alg)?;
    let presilting = is_presilting(&c);
    let two_term = is_generalized_two_term_in_place(&c.strip(), s.n);
    let distinct = num_distinct_summands(&c)?;
    let rank = distinct == alg.num_vertices();
    let generation = generation_search(&c, caps(s).cone_depth)?;
    let homology: Vec<(i64, Vec<usize>)> = if c.is_zero() {
        Vec::new()
    } else {
        (c.lo()..=c.hi()).map(|k| (k, c.homology(k).dims().to_vec())).collect()
    };
    println!("presilting: {}", yes_no(presilting));
    println!("generalized two-term in degrees -{}..0: {}", s.n, yes_no(two_term));
    println!("rank condition: {} ({distinct} distinct summands, {} vertices)", yes_no(rank), alg.num_vertices());
    println!("generation: {} ({})", generation.verdict, generation.reason);
    for (k, d) in &homology {
        println!("H^{k}: {d:?}");
    }
    write_json(
        s,
        &json!({
            "schema": 1,
            "presilting": presilting,
            "generalized_two_term": two_term,
            "rank_condition": rank,
            "distinct_summands": distinct,
            "generation": generation.verdict.to_string(),
            "generation_reason": generation.reason,
            "cone_depth": caps(s).cone_depth,
        }),
    )?;
    Ok(Status::Ok)
}

fn cmd_phi<F: Field>(s: &Session, io: &Inputs, assume: bool) -> Result<Status> {
    let alg = parse_algebra::<F>(&io.algebra)?;
    let c = parse_complex(&io.other, &alg)?;
    let r = phi_map(&c, s.n, caps(s), assume)?;
    print!("{}", print_module(&r.module));
    println!("# rank condition: {}, generation: {}", yes_no(r.rank_condition), r.generation);
    write_json(s, &json!({ "schema": 1, "dims": r.module.dims(), "generation": r.generation.to_string() }))?;
    Ok(Status::Ok)
}

fn cmd_psi<F: Field>(s: &Session, io: &Inputs) -> Result<Status> {
    let alg = parse_algebra::<F>(&io.algebra)?;
    let t = parse_module(&io.other, &alg)?;
    let r = psi_map(&t, s.n, caps(s))?;
    print!("{}", print_complex(&r.complex));
    println!(
        "# presilting: {}, rank condition: {}, generation: {}",
        yes_no(r.presilting),
        yes_no(r.rank_condition),
        r.generation
    );
    write_json(
        s,
        &json!({
            "schema": 1,
            "q_vertices": r.q_vertices,
            "presilting": r.presilting,
            "rank_condition": r.rank_condition,
            "generation": r.generation.to_string(),
        }),
    )?;
    Ok(Status::Ok)
}

fn cmd_examples(s: &Session, dir: Option<&Path>) -> Result<Status> {
    let cases = match dir {
        Some(d) => load_dir(d)?,
        None => builtin(),
    };
    let (mut passed, mut failed) = (0, 0);
    let mut rows = Vec::new();
    for (file, text) in &cases {
        match run_case(text, caps(s)) {
            Ok(o) if o.passed() => {
                passed += 1;
                println!("PASS {file}");
                rows.push(json!({ "case": file, "passed": true }));
            }
            Ok(o) => {
                failed += 1;
                println!("FAIL {file}");
                for m in &o.mismatches {
                    println!("  {}: expected `{}`, observed `{}`", m.field, m.expected, m.observed);
                }
                let diffs: Vec<_> = o
                    .mismatches
                    .iter()
                    .map(|m| json!({ "field": m.field, "expected": m.expected, "observed": m.observed }))
                    .collect();
                rows.push(json!({ "case": file, "passed": false, "mismatches": diffs }));
            }
            Err(e) => return Err(Error::Usage(format!("{file}: {e}"))),
        }
    }
    println!("{passed} passed, {failed} failed");
    write_json(s, &json!({ "schema": 1, "cases": rows }))?;
    Ok(if failed == 0 { Status::Ok } else { Status::Inconsistent })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

macro_rules! by_field {
    ($p:expr, $func:ident ( $($arg:expr),* )) => {
        match $p {
            2 => $func::<Fp<2>>($($arg),*),
            3 => $func::<Fp<3>>($($arg),*),
            5 => $func::<Fp<5>>($($arg),*),
            7 => $func::<Fp<7>>($($arg),*),
            p => Err(Error::Usage(format!("unsupported field order {p}; supported: 2, 3, 5, 7"))),
        }
    };
}

fn run(cli: Cli) -> Result<Status> {
    let s = &cli.session;
    if s.n == 0 {
        return Err(Error::Usage("--n must be at least 1".into()));
    }
    match &cli.command {
        Command::Classify { algebra, module, census } => {
            let io = inputs(algebra, module.as_deref())?;
            by_field!(field_order(s, &io.algebra)?, cmd_classify(s, &io, census.as_deref()))
        }
        Command::Examples { dir } => cmd_examples(s, dir.as_deref()),
        Command::Census { algebra, out } => {
            let text = read(algebra)?;
            by_field!(field_order(s, &text)?, cmd_census(s, &text, out.as_deref()))
        }
        Command::Hunt { algebra, census, max_summands } => {
            let text = read(algebra)?;
            by_field!(field_order(s, &text)?, cmd_hunt(s, &text, census.as_deref(), *max_summands))
        }
        Command::Complex(ComplexCommand::Check { algebra, complex }) => {
            let io = inputs(algebra, complex.as_deref())?;
            by_field!(field_order(s, &io.algebra)?, cmd_complex_check(s, &io))
        }
        Command::Complex(ComplexCommand::Phi { algebra, complex, assume_generates }) => {
            let io = inputs(algebra, complex.as_deref())?;
            by_field!(field_order(s, &io.algebra)?, cmd_phi(s, &io, *assume_generates))
        }
        Command::Complex(ComplexCommand::Psi { algebra, module }) => {
            let io = inputs(algebra, module.as_deref())?;
            by_field!(field_order(s, &io.algebra)?, cmd_psi(s, &io))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Inconsistent) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 2,
                Error::Inconsistency(_) => 3,
                _ => 1,
            })
        }
    }
}
