use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lcdlab::families::{family_affine_vector, family_code, symbolic_gram_det, symbolic_weight_enumerator};
use lcdlab::manifest::{self, RunManifest};
use lcdlab::paperio::{self, BoundsReport, Claim, Subject};
use lcdlab::reproduce::{self, Suite};
use lcdlab::search::{search_lcd, sweep_lcd, SearchBudget};
use lcdlab::{lcd_census, tables, Classifier, ClassifyOptions, Error};

#[derive(Parser, Debug)]
#[command(
    name = "lcdlab",
    version,
    about = "Binary LCD codes: families, bounds, classification and search"
)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads for classification and search.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Code database directory. LCDLAB_DB, when set, takes precedence.
    #[arg(long, global = true, default_value = "./lcddb")]
    db: PathBuf,

    /// Print JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Random seed for search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write a run manifest to this file.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a member of a tabulated LCD family and check its parameters.
    Family {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
    },
    /// Griesmer bound, case formula and known LCD distance for [n, k].
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Classify [n, k, d] codes up to equivalence and store them.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Classify [n, k, d] codes and count the LCD classes.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Look for an LCD [n, k, >= d] code. Exits 1 when none is found.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// Move proposals per restart.
        #[arg(long, default_value_t = 1_000_000)]
        iters: u64,
        #[arg(long, default_value_t = 8)]
        restarts: u32,
        /// Exhaustive multiplicity sweep instead of hill climbing (k <= 5).
        #[arg(long)]
        sweep: bool,
    },
    /// Decode the tabulated generator matrices and check their parameters.
    VerifyOctal {
        #[arg(long, value_enum)]
        table: OctalTable,
        /// Check every entry of the table.
        #[arg(long, conflicts_with = "name", required_unless_present = "name")]
        all: bool,
        /// Check one entry, e.g. M_23,1 or M_{23,1}.
        #[arg(long)]
        name: Option<String>,
    },
    /// Re-derive the tabulated results and print a pass/fail matrix.
    Reproduce {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Report,
    Code,
    We,
    Det,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OctalTable {
    Dim4,
    Dim5,
    MTable,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Dim4,
    Dim5,
    Bounds,
    All,
}

/// Text written to stdout, and whether everything checked out.
struct Outcome {
    text: String,
    ok: bool,
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default()
}

fn db_dir(global: &Global) -> PathBuf {
    std::env::var_os("LCDLAB_DB")
        .map(PathBuf::from)
        .unwrap_or_else(|| global.db.clone())
}

fn classifier(global: &Global) -> lcdlab::Result<Classifier> {
    Classifier::new(ClassifyOptions {
        db_dir: Some(db_dir(global)),
        jobs: global.jobs,
    })
}

fn parameters(cmd: &Command) -> Value {
    match cmd {
        Command::Family { k, s, t, .. } => json!({ "k": k, "s": s, "t": t }),
        Command::Bounds { n, k } => json!({ "n": n, "k": k }),
        Command::Classify { n, k, d } | Command::Census { n, k, d } => json!({ "n": n, "k": k, "d": d }),
        Command::Search {
            n,
            k,
            d,
            iters,
            restarts,
            sweep,
        } => {
            json!({ "n": n, "k": k, "d": d, "iters": iters, "restarts": restarts, "sweep": sweep })
        }
        Command::VerifyOctal { table, all, name } => {
            json!({ "table": format!("{table:?}"), "all": all, "name": name })
        }
        Command::Reproduce { suite } => json!({ "suite": format!("{suite:?}") }),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Family { .. } => "family",
        Command::Bounds { .. } => "bounds",
        Command::Classify { .. } => "classify",
        Command::Census { .. } => "census",
        Command::Search { .. } => "search",
        Command::VerifyOctal { .. } => "verify-octal",
        Command::Reproduce { .. } => "reproduce",
    }
}

fn family(k: usize, s: usize, t: i64, emit: Emit) -> lcdlab::Result<Outcome> {
    let (code, verdict) = family_code(k, s, t)?;
    let av = family_affine_vector(k, s)?;
    let we = symbolic_weight_enumerator(k, &av)?;
    let det = symbolic_gram_det(k, &av)?;
    let text = match emit {
        Emit::Report => paperio::emit_report(&Subject::Family {
            code: &code,
            verdict: &verdict,
            weight_enumerator: &we,
            gram_det: &det,
        })?,
        Emit::Code => code.generator().to_bit_strings().join("\n"),
        Emit::We => we.to_string(),
        Emit::Det => det.to_string(),
    };
    Ok(Outcome {
        text,
        ok: verdict.matches,
    })
}

fn bounds(n: usize, k: usize, as_json: bool) -> lcdlab::Result<Outcome> {
    let b = BoundsReport::new(n, k)?;
    let text = if as_json {
        paperio::emit_report(&Subject::Bounds(&b))?
    } else {
        let closed = b.closed_form.map_or("-".to_string(), |c| c.to_string());
        let known = match b.lcd_entry.candidates.as_slice() {
            [] => "unknown".to_string(),
            [d] => d.to_string(),
            many => format!("one of {many:?}"),
        };
        format!(
            "[{n},{k}]  griesmer {}  closed form {closed}  lcd {known} ({})",
            b.griesmer, b.lcd_entry.provenance
        )
    };
    Ok(Outcome { text, ok: true })
}

fn census(global: &Global, n: usize, k: usize, d: usize, lcd: bool) -> lcdlab::Result<Outcome> {
    let mut c = classifier(global)?;
    let db = c.classify(n, k, d)?;
    let census = lcd_census(&db)?;
    let text = if global.json {
        let mut v = paperio::report_value(&Subject::Census(&census))?;
        v["params"]["method"] = json!(db.method);
        if !lcd {
            v["measured"] = json!({ "count": census.count });
        }
        pretty(&v)
    } else if lcd {
        format!("[{n},{k},{d}]  {} classes, {} LCD", census.count, census.lcd_count)
    } else {
        format!("[{n},{k},{d}]  {} classes ({})", census.count, db.method)
    };
    Ok(Outcome { text, ok: true })
}

fn search(
    global: &Global,
    n: usize,
    k: usize,
    d: usize,
    iters: u64,
    restarts: u32,
    sweep: bool,
) -> lcdlab::Result<Outcome> {
    let found = if sweep {
        sweep_lcd(n, k, d, iters)?.found
    } else {
        let budget = SearchBudget::new(iters, global.seed, restarts)?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(global.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?
            .install(|| search_lcd(n, k, d, &budget))?
    };
    let Some(f) = found else {
        let text = if global.json {
            pretty(&json!({ "subject": "search", "params": { "n": n, "k": k, "d": d }, "found": false }))
        } else {
            format!("no LCD [{n},{k},{d}] code found within the budget")
        };
        return Ok(Outcome { text, ok: false });
    };
    let claimed = Claim {
        n: Some(n),
        k: Some(k),
        d: None,
        is_lcd: Some(true),
    };
    let label = format!("search [{n},{k},{d}]");
    let text = if global.json {
        let mut v = paperio::report_value(&Subject::Code {
            label: &label,
            code: &f.code,
            claimed,
        })?;
        v["params"]["restart"] = json!(f.restart);
        v["params"]["iterations"] = json!(f.iterations);
        pretty(&v)
    } else {
        let rows = f.code.generator().to_bit_strings().join("\n");
        format!(
            "LCD [{n},{k},{}] found (restart {}, {} moves)\n{rows}",
            f.code.min_weight()?,
            f.restart,
            f.iterations
        )
    };
    Ok(Outcome { text, ok: true })
}

fn verify_octal(table: OctalTable, name: Option<&str>, as_json: bool) -> lcdlab::Result<Outcome> {
    let checks = match table {
        OctalTable::Dim4 => reproduce::octal_checks(4)?,
        OctalTable::Dim5 => reproduce::octal_checks(5)?,
        OctalTable::MTable => reproduce::witness_checks()?,
    };
    let checks: Vec<_> = match name {
        None => checks,
        Some(want) => {
            let hit: Vec<_> = checks
                .into_iter()
                .filter(|c| c.item.split(' ').next().map(bare_name) == Some(bare_name(want)))
                .collect();
            if hit.is_empty() {
                let known: Vec<&str> = match table {
                    OctalTable::Dim4 => tables::DIM4_GENERATORS.iter().map(|e| e.name).collect(),
                    OctalTable::Dim5 => tables::DIM5_GENERATORS.iter().map(|e| e.name).collect(),
                    OctalTable::MTable => tables::LCD_WITNESSES.iter().map(|e| e.name).collect(),
                };
                return Err(Error::InvalidParameters(format!(
                    "no entry {want}; known: {}",
                    known.join(" ")
                )));
            }
            hit
        }
    };
    Ok(matrix(&checks, as_json))
}

fn matrix(checks: &[reproduce::Check], as_json: bool) -> Outcome {
    let ok = checks.iter().all(|c| c.pass);
    let text = if as_json {
        let tables: Vec<Value> = reproduce::summarize(checks)
            .into_iter()
            .map(|(t, p, n)| json!({ "table": t, "passed": p, "total": n, "pass": p == n }))
            .collect();
        pretty(&json!({ "subject": "reproduce", "tables": tables, "checks": checks, "match": ok }))
    } else {
        let mut lines: Vec<String> = checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("FAIL {} {}: {}", c.table, c.item, c.detail))
            .collect();
        for (t, p, n) in reproduce::summarize(checks) {
            lines.push(format!("{} {t:<26} {p}/{n}", if p == n { "PASS" } else { "FAIL" }));
        }
        lines.join("\n")
    };
    Outcome { text, ok }
}

fn run(cli: &Cli) -> lcdlab::Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Family { k, s, t, emit } => family(*k, *s, *t, *emit),
        Command::Bounds { n, k } => bounds(*n, *k, g.json),
        Command::Classify { n, k, d } => census(g, *n, *k, *d, false),
        Command::Census { n, k, d } => census(g, *n, *k, *d, true),
        Command::Search {
            n,
            k,
            d,
            iters,
            restarts,
            sweep,
        } => search(g, *n, *k, *d, *iters, *restarts, *sweep),
        Command::VerifyOctal { table, name, .. } => verify_octal(*table, name.as_deref(), g.json),
        Command::Reproduce { suite } => {
            let suite = match suite {
                SuiteArg::Dim4 => Suite::Dim4,
                SuiteArg::Dim5 => Suite::Dim5,
                SuiteArg::Bounds => Suite::Bounds,
                SuiteArg::All => Suite::All,
            };
            let checks = reproduce::run_suite(suite, &mut classifier(g)?)?;
            Ok(matrix(&checks, g.json))
        }
    }
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidParameters(_)
            | Error::UnknownFamilyRow { .. }
            | Error::BelowTMin { .. }
            | Error::AboveGriesmer { .. }
            | Error::Parse(_)
    )
}

fn write_manifest(path: &PathBuf, m: &RunManifest) -> std::io::Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(m).unwrap_or_default() + "\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ok = true;
    let recorded = manifest::record(
        command_name(&cli.command),
        parameters(&cli.command),
        cli.global.seed,
        || {
            run(&cli).map(|o| {
                ok = o.ok;
                o.text
            })
        },
    );
    match recorded {
        Ok((text, m)) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if let Some(path) = &cli.global.manifest {
                if let Err(e) = write_manifest(path, &m) {
                    eprintln!("lcdlab: cannot write manifest {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("lcdlab: {e}");
            ExitCode::from(if usage_error(&e) { 2 } else { 1 })
        }
    }
}

/// Entry names with the braces dropped, so `M_23,1` finds `M_{23,1}`.
fn bare_name(name: &str) -> String {
    name.chars().filter(|c| !matches!(c, '{' | '}')).collect()
}
