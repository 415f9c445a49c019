use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qsd_dna::classify::{census, CensusOptions};
use qsd_dna::dna::{d_rc_exact, gc_contents, ResidueShape};
use qsd_dna::enumerators::{cwe, gcw_direct};
use qsd_dna::golden::psi;
use qsd_dna::reports::{census_cells, regenerate_drc_tables, verify_all};
use qsd_dna::{build_qsd, to_dna, BinaryCode, Error, QsdCode, QsdRing};
use serde_json::json;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qsd-dna",
    version,
    about = "QSD codes over E and F and their DNA codes"
)]
struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, env = "QSD_DNA_THREADS")]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Count inequivalent self-orthogonal codes, i.e. QSD codes by residue dimension.
    Census {
        /// Length or range, e.g. `8`, `1..10`.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long)]
        k: Option<usize>,
        /// Compare with the published counts; exit 1 on any difference.
        #[arg(long)]
        check: bool,
        /// Also print a representative of every class.
        #[arg(long)]
        list: bool,
        /// Give up after this long, e.g. `90s`, `1h`; exit 3.
        #[arg(long, value_parser = humantime::parse_duration)]
        budget: Option<Duration>,
        /// Refuse lengths above this.
        #[arg(long, default_value_t = 15)]
        max_n: usize,
    },
    /// QSD code construction.
    Qsd {
        #[command(subcommand)]
        action: QsdAction,
    },
    /// Complete or GC weight enumerator of a QSD code.
    Wenum {
        #[command(flatten)]
        code: CodeArgs,
        /// GC enumerator instead of the complete one.
        #[arg(long)]
        gc: bool,
    },
    /// Reverse-complement distances d_RC^m.
    Drc {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_name = "FILE")]
        res: Option<PathBuf>,
        /// Residue rows inline, comma separated.
        #[arg(long, conflicts_with = "res")]
        rows: Option<String>,
        #[arg(long, group = "mode")]
        exact: bool,
        #[arg(long, group = "mode")]
        formula: bool,
        /// Exact and closed form side by side; exit 1 on disagreement.
        #[arg(long, group = "mode")]
        both: bool,
    },
    /// Regenerate the published d_RC tables and list discrepancies.
    Tables {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Write `drc_tables.csv` and `discrepancies.csv` here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 when a printed value is not reproduced.
        #[arg(long)]
        check: bool,
    },
    /// Enumerator, transfer and weight-two identities over the census.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// The eleven rings of order four with their GC maps.
    Rings,
}

#[derive(Subcommand)]
enum QsdAction {
    /// Build `a·B ⊕ c·B⊥` from a self-orthogonal residue `B`.
    Build {
        #[command(flatten)]
        code: CodeArgs,
        /// Also list the DNA words.
        #[arg(long)]
        dna: bool,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long, default_value = "E")]
    ring: QsdRing,
    /// File of residue rows, one binary word per line.
    #[arg(long, value_name = "FILE", required_unless_present = "rows")]
    res: Option<PathBuf>,
    #[arg(long, conflicts_with = "res")]
    rows: Option<String>,
}

impl CodeArgs {
    fn build(&self) -> Result<QsdCode, Failure> {
        let res = read_residue(self.res.as_ref(), self.rows.as_deref())?
            .ok_or_else(|| usage("no residue given"))?;
        Ok(build_qsd(self.ring, &res)?)
    }
}

enum Failure {
    Usage(String),
    Library(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn read_residue(file: Option<&PathBuf>, rows: Option<&str>) -> Result<Option<BinaryCode>, Failure> {
    let text = match (file, rows) {
        (Some(path), _) => fs::read_to_string(path)?,
        (None, Some(rows)) => rows.replace(',', "\n"),
        (None, None) => return Ok(None),
    };
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if rows.is_empty() {
        return Err(usage("residue needs at least one row"));
    }
    Ok(Some(BinaryCode::from_rows(&rows)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let mut out = std::io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded | Error::ResourceLimit { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match &cli.command {
        Command::Census {
            n,
            k,
            check,
            list,
            budget,
            max_n,
        } => {
            let opts = CensusOptions {
                max_n: *max_n,
                budget: *budget,
            };
            let ns: Vec<usize> = (n.0..=n.1).collect();
            let cells = census_cells(&ns, *k, &opts)?;
            let mut ok = true;
            let mut records = Vec::new();
            for c in &cells {
                let expected = psi(c.n, c.k);
                let pass = expected.map_or(c.count == 0, |e| e == c.count);
                ok &= pass;
                records.push((c, expected, pass));
            }
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = records
                        .iter()
                        .map(|(c, e, p)| {
                            let mut v = json!({"n": c.n, "k": c.k, "count": c.count});
                            if *check {
                                v["expected"] = json!(e);
                                v["match"] = json!(p);
                            }
                            if *list {
                                v["representatives"] = json!(c.representatives);
                            }
                            v
                        })
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&rows).expect("json")
                    )?;
                }
                Format::Csv | Format::Text => {
                    writeln!(
                        out,
                        "n,k,count{}",
                        if *check { ",expected,status" } else { "" }
                    )?;
                    for (c, e, p) in &records {
                        write!(out, "{},{},{}", c.n, c.k, c.count)?;
                        if *check {
                            let e = e.map_or("-".to_string(), |e| e.to_string());
                            write!(out, ",{},{}", e, if *p { "ok" } else { "MISMATCH" })?;
                        }
                        writeln!(out)?;
                        if *list {
                            for r in &c.representatives {
                                writeln!(
                                    out,
                                    "# {}",
                                    r.to_ascii()
                                        .split_whitespace()
                                        .collect::<Vec<_>>()
                                        .join(" ")
                                )?;
                            }
                        }
                    }
                }
            }
            Ok(if *check && !ok { EXIT_MISMATCH } else { 0 })
        }
        Command::Qsd {
            action: QsdAction::Build { code, dna },
        } => {
            let code = code.build()?;
            let dna_code = to_dna(&code);
            match cli.format {
                Format::Json => {
                    let mut v = json!({
                        "ring": code.ring().to_string(),
                        "n": code.len(),
                        "k1": code.k1(),
                        "log2_size": code.log2_size(),
                        "residue": code.residue(),
                        "torsion": code.torsion(),
                        "generator_matrix": code.generator_matrix().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        "self_orthogonal": code.is_self_orthogonal(),
                    });
                    if *dna {
                        v["dna"] = json!(dna_code.words());
                    }
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
                }
                Format::Csv | Format::Text => {
                    writeln!(
                        out,
                        "# ring {} n={} k1={} |C|=2^{}",
                        code.ring(),
                        code.len(),
                        code.k1(),
                        code.log2_size()
                    )?;
                    write!(out, "{}", code.generator_text())?;
                    if *dna {
                        for w in dna_code.words() {
                            writeln!(out, "{w}")?;
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Wenum { code, gc } => {
            let code = code.build()?;
            let w = if *gc { gcw_direct(&code) } else { cwe(&code) };
            match cli.format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&w).expect("json"))?
                }
                Format::Text => writeln!(out, "{w}")?,
                Format::Csv => {
                    let vars = if *gc { "x,y" } else { "w,x,y,z" };
                    writeln!(out, "{vars},coefficient")?;
                    for (e, c) in w.terms().iter().rev() {
                        let e: Vec<String> = e.iter().map(u32::to_string).collect();
                        writeln!(out, "{},{}", e.join(","), c)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Drc {
            n,
            k,
            res,
            rows,
            exact,
            formula,
            both,
        } => {
            let want_exact = *exact || *both || !*formula;
            let want_formula = *formula || *both;
            let codes: Vec<QsdCode> = match read_residue(res.as_ref(), rows.as_deref())? {
                Some(r) => {
                    if n.is_some_and(|n| n != r.len()) {
                        return Err(usage("--n disagrees with the residue length"));
                    }
                    vec![build_qsd(QsdRing::E, &r)?]
                }
                None => {
                    let n = n.ok_or_else(|| usage("give --n or a residue"))?;
                    let opts = CensusOptions::with_max_n(10);
                    census(n, *k, &opts)?
                        .into_iter()
                        .filter(|e| k.is_none_or(|k| e.k == k))
                        .flat_map(|e| e.representatives)
                        .map(|r| build_qsd(QsdRing::E, &r))
                        .collect::<Result<_, _>>()?
                }
            };
            let mut disagree = false;
            let mut records = Vec::new();
            for code in &codes {
                let shape = ResidueShape::detect(code.residue());
                let predicted = shape.predict(code.len());
                if *formula && predicted.is_none() && codes.len() == 1 {
                    return Err(Failure::Library(Error::InvalidShape(format!(
                        "no closed form for a {} residue",
                        shape.name()
                    ))));
                }
                for m in gc_contents(code.residue()) {
                    let f = predicted
                        .as_ref()
                        .and_then(|p| p.iter().find(|(mm, _)| *mm == m).map(|&(_, d)| d));
                    if !want_exact && f.is_none() {
                        continue;
                    }
                    let e = if want_exact {
                        Some(d_rc_exact(code, m)?)
                    } else {
                        None
                    };
                    if want_formula {
                        if let (Some(f), Some(e)) = (f, &e) {
                            disagree |= f != e.d_rc;
                        }
                    }
                    records.push((code, shape, m, e, f));
                }
            }
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = records
                        .iter()
                        .map(|(c, s, m, e, f)| {
                            json!({
                                "n": c.len(),
                                "k1": c.k1(),
                                "residue": c.residue(),
                                "shape": s.name(),
                                "m": m,
                                "exact": e.as_ref().map(|e| e.d_rc),
                                "witness": e.as_ref().map(|e| &e.witness),
                                "formula": if want_formula { json!(f) } else { json!(null) },
                            })
                        })
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&rows).expect("json")
                    )?;
                }
                Format::Csv | Format::Text => {
                    writeln!(out, "n,k1,residue,shape,m,exact,formula,witness")?;
                    for (c, s, m, e, f) in &records {
                        let show = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
                        writeln!(
                            out,
                            "{},{},{},{},{},{},{},{}",
                            c.len(),
                            c.k1(),
                            c.residue()
                                .to_ascii()
                                .split_whitespace()
                                .collect::<Vec<_>>()
                                .join(" "),
                            s.name(),
                            m,
                            show(e.as_ref().map(|e| e.d_rc)),
                            if want_formula { show(*f) } else { "-".into() },
                            e.as_ref().map_or(String::new(), |e| e.witness.to_string()),
                        )?;
                    }
                }
            }
            Ok(if *both && disagree { EXIT_MISMATCH } else { 0 })
        }
        Command::Tables {
            max_n,
            out: dir,
            check,
        } => {
            if *max_n > 8 {
                return Err(usage("the published tables stop at n = 8"));
            }
            let report = regenerate_drc_tables(*max_n)?;
            let mut disc = String::from("source,n,residue,m,claimed,exact,witness\n");
            for d in report.discrepancies() {
                disc.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    d.source,
                    d.n,
                    d.residue.replace(',', " "),
                    d.m,
                    d.claimed,
                    d.exact.map_or("undefined".to_string(), |e| e.to_string()),
                    d.witness.as_ref().map_or(String::new(), |w| w.to_string())
                ));
            }
            match (dir, cli.format) {
                (Some(dir), _) => {
                    fs::create_dir_all(dir)?;
                    fs::write(dir.join("drc_tables.csv"), report.to_csv())?;
                    fs::write(dir.join("discrepancies.csv"), &disc)?;
                }
                (None, Format::Json) => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("json")
                )?,
                (None, _) => write!(out, "{}", report.to_csv())?,
            }
            for d in report.discrepancies() {
                eprintln!("{}", d.line());
            }
            Ok(if *check && !report.all_reproduced() {
                EXIT_MISMATCH
            } else {
                0
            })
        }
        Command::Verify { max_n } => {
            let report = verify_all(*max_n)?;
            match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("json")
                )?,
                Format::Csv | Format::Text => write!(out, "{}", report.text())?,
            }
            Ok(
                if report.identities_hold() && report.formulas.unflagged_discrepancies().is_empty()
                {
                    0
                } else {
                    EXIT_MISMATCH
                },
            )
        }
        Command::Rings => {
            match cli.format {
                Format::Json => writeln!(out, "{}", qsd_dna::rings::rings_json())?,
                Format::Csv | Format::Text => {
                    writeln!(out, "ring,char,commutative,alpha,gc_map")?;
                    for r in qsd_dna::Ring4::all() {
                        let gc = r.gc_map().map_or("none".to_string(), |g| {
                            format!("{:?} {}", g.side, r.label(g.beta)).to_lowercase()
                        });
                        writeln!(
                            out,
                            "{},{},{},{},{}",
                            r.name(),
                            r.characteristic(),
                            r.is_commutative(),
                            r.label(r.alpha()),
                            gc
                        )?;
                    }
                }
            }
            Ok(0)
        }
    }
}
