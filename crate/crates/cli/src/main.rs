use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use cycleset::axbuilder::{build_ax, permutation_group};
use cycleset::covering::{pi1_order_all_points, ramirez_check, universal_covering};
use cycleset::cycleset::CycleSetTable;
use cycleset::enumeration::{
    enumerate_with, scan, EnumerationConfig, EnumerationFilter, Predicate, ScanKind,
};
use cycleset::frobenius::classify_action;
use cycleset::json::{
    cycle_set_line, parse_document, AXBraceJson, CycleSetJson, Document, GroupJson, SolutionJson,
};
use cycleset::solution::{from_solution, to_solution, SolutionTable};

/// Largest size accepted without `--allow-8`.
const DEFAULT_CAP: usize = 7;

#[derive(Parser)]
#[command(name = "cycleset", version, about = "Cycle sets, braces and involutive Yang-Baxter solutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a cycle-set or solution document.
    Verify { file: PathBuf },
    /// Translate between cycle sets and solutions.
    #[command(group(ArgGroup::new("target").required(true).args(["to_solution", "to_cycleset"])))]
    Convert {
        #[arg(long)]
        to_solution: bool,
        #[arg(long)]
        to_cycleset: bool,
        file: PathBuf,
    },
    /// The permutation group G(X) and its action on X.
    Group { file: PathBuf },
    /// The brace A(X).
    Brace { file: PathBuf },
    /// Fundamental group and universal covering of an indecomposable cycle set.
    Covering {
        file: PathBuf,
        /// 1-based base point.
        #[arg(long, default_value_t = 1)]
        base: usize,
    },
    /// Stream one representative per isomorphism class as JSON lines.
    Enumerate {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        indecomposable: bool,
        /// indecomposable, decomposable, irretractable, retractable,
        /// multipermutation or dihedral; repeatable.
        #[arg(long = "filter")]
        filters: Vec<Predicate>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run a scan over all sizes up to --max.
    #[command(group(ArgGroup::new("kind").required(true).args(["frobenius", "ramirez", "rav"])))]
    Scan {
        #[arg(long)]
        frobenius: bool,
        #[arg(long)]
        ramirez: bool,
        #[arg(long)]
        rav: bool,
        #[arg(long)]
        max: usize,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Args)]
struct Limits {
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Permit size 8.
    #[arg(long = "allow-8")]
    allow_8: bool,
}

impl Limits {
    fn config(&self) -> EnumerationConfig {
        EnumerationConfig {
            max_size: if self.allow_8 { 8 } else { DEFAULT_CAP },
            jobs: self.jobs,
        }
    }
}

enum Failure {
    Input(String),
    Violation,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation) => ExitCode::from(2),
    }
}

/// Writes one line to stdout; a closed pipe is not an error.
fn line(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit<T: Serialize>(doc: &T) {
    line(&serde_json::to_string(doc).expect("plain data serializes"));
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_cycle_set(path: &Path) -> Result<CycleSetTable, Failure> {
    match parse_document(&read(path)?)? {
        Document::CycleSet(cs) => Ok(cs),
        Document::Solution(sol) => Ok(from_solution(&sol)?),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Verify { file } => verify(&file),
        Command::Convert { to_solution: wants_solution, file, .. } => {
            match parse_document(&read(&file)?)? {
                Document::CycleSet(cs) if wants_solution => emit(&SolutionJson::from(&to_solution(&cs))),
                Document::Solution(sol) if !wants_solution => emit(&CycleSetJson::from(&from_solution(&sol)?)),
                _ => return Err(Failure::Input("input is already in the requested form".into())),
            }
            Ok(())
        }
        Command::Group { file } => {
            let cs = load_cycle_set(&file)?;
            let g = permutation_group(&cs)?;
            let action = classify_action(&g).report();
            emit(&json!({
                "order": g.order(),
                "degree": g.degree(),
                "generators": GroupJson::from(&g).generators,
                "solvable": g.is_solvable(),
                "abelian": g.is_abelian(),
                "transitive": g.is_transitive(),
                "dihedral": g.recognize_dihedral(),
                "action": action.kind,
                "action_report": action,
            }));
            Ok(())
        }
        Command::Brace { file } => {
            let cs = load_cycle_set(&file)?;
            let ax = build_ax(&cs)?;
            let brace = ax.brace();
            let primary: Vec<_> = brace
                .primary_decomposition()
                .iter()
                .map(|(p, part)| json!({ "prime": p, "members": part.members() }))
                .collect();
            emit(&json!({
                "brace": AXBraceJson::from(&ax),
                "socle": brace.socle().members(),
                "primary_decomposition": primary,
                "additive_invariant_factors": brace.additive_invariant_factors(),
            }));
            Ok(())
        }
        Command::Covering { file, base } => {
            let cs = load_cycle_set(&file)?;
            if base == 0 || base > cs.size() {
                return Err(Failure::Input(format!("base point {base} outside 1..={}", cs.size())));
            }
            let uc = universal_covering(&cs, base - 1)?;
            let projection: Vec<usize> =
                (0..uc.covering.size()).map(|g| uc.projection.apply(g) + 1).collect();
            emit(&json!({
                "report": uc.report,
                "pi1_order_all_points": pi1_order_all_points(&cs)?,
                "ramirez": ramirez_check(&cs)?,
                "covering": CycleSetJson::from(&uc.covering),
                "projection": projection,
            }));
            Ok(())
        }
        Command::Enumerate { n, indecomposable, filters, limits } => {
            let filter = EnumerationFilter { indecomposable_only: indecomposable, predicates: filters };
            let found = enumerate_with(n, &filter, &limits.config())?;
            for cs in &found {
                line(&cycle_set_line(cs));
            }
            eprintln!("{} classes", found.len());
            Ok(())
        }
        Command::Scan { frobenius, ramirez, max, limits, .. } => {
            let kind = if frobenius {
                ScanKind::Frobenius
            } else if ramirez {
                ScanKind::Ramirez
            } else {
                ScanKind::Rav
            };
            let report = scan(kind, max, &limits.config())?;
            emit(&report);
            eprintln!("elapsed_ms: {}", report.elapsed.as_millis());
            if report.violation {
                eprintln!("theorem violation flagged");
                return Err(Failure::Violation);
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CycleSetAxioms {
    bijective_rows: Option<bool>,
    cycle_law: Option<bool>,
    square_map_bijective: Option<bool>,
}

#[derive(Serialize)]
struct SolutionAxioms {
    non_degenerate: Option<bool>,
    involutive: Option<bool>,
    yang_baxter: Option<bool>,
}

/// Axioms are checked in order; one that was not reached is `null`.
fn verify(path: &Path) -> Result<(), Failure> {
    use cycleset::cycleset::CycleSetError as C;
    use cycleset::json::JsonError;
    use cycleset::solution::SolutionError as S;

    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let (report, error) = match parse_document(&text) {
        Ok(Document::CycleSet(cs)) => (cycle_set_report(&cs), None),
        Ok(Document::Solution(sol)) => (solution_report(&sol), None),
        Err(JsonError::CycleSet(e)) if value.get("sigma").is_some() => {
            let failed = match e {
                C::NonBijectiveRow(_) => 0,
                C::CycleLawViolation { .. } => 1,
                C::SquareMapNotBijective => 2,
                other => return Err(other.into()),
            };
            let reached = |i: usize| (i <= failed).then_some(i != failed);
            let axioms = CycleSetAxioms {
                bijective_rows: reached(0),
                cycle_law: reached(1),
                square_map_bijective: reached(2),
            };
            (json!({ "kind": "cycle-set", "valid": false, "axioms": axioms }), Some(e.to_string()))
        }
        Err(JsonError::Solution(e)) => {
            let failed = match e {
                S::Degenerate { .. } => 0,
                S::NotInvolutive { .. } => 1,
                S::YbeViolation { .. } => 2,
                other => return Err(other.into()),
            };
            let reached = |i: usize| (i <= failed).then_some(i != failed);
            let axioms = SolutionAxioms {
                non_degenerate: reached(0),
                involutive: reached(1),
                yang_baxter: reached(2),
            };
            (json!({ "kind": "solution", "valid": false, "axioms": axioms }), Some(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut report = report;
    if let Some(msg) = &error {
        report["violation"] = json!(msg);
    }
    emit(&report);
    match error {
        Some(msg) => Err(Failure::Input(msg)),
        None => Ok(()),
    }
}

fn cycle_set_report(cs: &CycleSetTable) -> serde_json::Value {
    let sol = to_solution(cs);
    let solution_ok = SolutionTable::verify(sol.left().to_vec(), sol.right().to_vec()).is_ok();
    json!({
        "kind": "cycle-set",
        "valid": true,
        "n": cs.size(),
        "axioms": CycleSetAxioms {
            bijective_rows: Some(true),
            cycle_law: Some(true),
            square_map_bijective: Some(true),
        },
        "solution": SolutionAxioms {
            non_degenerate: Some(solution_ok),
            involutive: Some(solution_ok),
            yang_baxter: Some(solution_ok),
        },
    })
}

fn solution_report(sol: &SolutionTable) -> serde_json::Value {
    let derived_ok = from_solution(sol).is_ok();
    json!({
        "kind": "solution",
        "valid": true,
        "n": sol.size(),
        "axioms": SolutionAxioms {
            non_degenerate: Some(true),
            involutive: Some(true),
            yang_baxter: Some(true),
        },
        "cycle_set": CycleSetAxioms {
            bijective_rows: Some(derived_ok),
            cycle_law: Some(derived_ok),
            square_map_bijective: Some(derived_ok),
        },
    })
}
