use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;

use permcross::dist::{dist, joint_dist, DistributionReport};
use permcross::gf::{self, Gf};
use permcross::verify::{self, CheckResult, Status};
use permcross::{ClassSpec, Constraint, Enumerator, Permutation, Statistic};

const BOUND_ENV: &str = "PERMCROSS_BOUND";

#[derive(Parser)]
#[command(name = "permcross", version, about = "Crossing statistics on pattern-avoiding permutations")]
struct Cli {
    /// Emit JSON lines
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All statistics of one permutation, with crossing and nesting pairs
    Stats {
        /// One-line word: `4735126`, `4,7,3,5,1,2,6` or space separated
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Distribution of a statistic (or a pair) over a class, one row per n
    Dist(DistArgs),
    /// Expand a generating function beside its brute-force coefficients
    Expand {
        /// cfrac-321, thm24, thm52 or chung
        gf: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Run registered checks (default: all)
    Verify {
        ids: Vec<String>,
        /// Largest n exercised; overrides each check's default and $PERMCROSS_BOUND
        #[arg(long)]
        bound: Option<usize>,
        /// List the registered checks instead of running them
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("constraint").multiple(false)))]
struct DistArgs {
    /// Forbidden patterns, comma separated
    #[arg(long, value_delimiter = ',')]
    avoid: Vec<String>,
    /// Require sigma(n+1-k) = 1
    #[arg(long, group = "constraint")]
    one_at: Option<usize>,
    /// Require sigma(n) = k
    #[arg(long, group = "constraint")]
    ends_with: Option<usize>,
    /// Require the suffix k,...,2,1
    #[arg(long, group = "constraint")]
    tail: Option<usize>,
    /// Require max(i - sigma(i)) <= d
    #[arg(long, group = "constraint")]
    maxdrop: Option<usize>,
    /// Statistic, or `y_stat,q_stat` for a joint distribution
    #[arg(long, default_value = "crs")]
    stat: String,
    /// Size `n` or inclusive range `a..b`
    #[arg(long)]
    n: String,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Stats { perm } => stats(&mut out, format, &perm.join(" ")).map(|_| true),
        Command::Dist(args) => run_dist(&mut out, format, &args).map(|_| true),
        Command::Expand { gf, order } => expand(&mut out, format, &gf, order).map(|_| true),
        Command::Verify { ids, bound, list } => {
            if list {
                list_checks(&mut out, format).map(|_| true)
            } else {
                run_verify(&mut out, format, &ids, bound)
            }
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn stats(out: &mut impl Write, format: Format, word: &str) -> Result<()> {
    let p: Permutation = word.parse()?;
    let s = p.stats();
    match format {
        Format::Json => {
            let v = json!({
                "permutation": p,
                "n": p.len(),
                "stats": s,
                "crossings": p.crossings(),
                "nestings": p.nestings(),
            });
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["permutation".to_string(), "n".to_string()];
            header.extend(Statistic::ALL.iter().map(|st| st.name().to_string()));
            w.write_record(&header)?;
            let mut row = vec![p.to_string(), p.len().to_string()];
            row.extend(Statistic::ALL.iter().map(|st| st.eval(&p).to_string()));
            w.write_record(&row)?;
            w.flush()?;
        }
        Format::Human => {
            writeln!(out, "permutation  {p}")?;
            writeln!(out, "n            {}", p.len())?;
            for st in Statistic::ALL {
                writeln!(out, "{:<12} {}", st.name(), st.eval(&p))?;
            }
            writeln!(out, "crossings    {}", pairs(&p.crossings()))?;
            writeln!(out, "nestings     {}", pairs(&p.nestings()))?;
        }
    }
    Ok(())
}

fn pairs(v: &[(usize, usize)]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(" ")
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad size {t:?} in --n"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo > hi {
        bail!("empty size range {s:?}");
    }
    Ok((lo, hi))
}

fn constraint(args: &DistArgs) -> Constraint {
    if let Some(k) = args.one_at {
        Constraint::OneAt(k)
    } else if let Some(k) = args.ends_with {
        Constraint::EndsWith(k)
    } else if let Some(k) = args.tail {
        Constraint::Tail(k)
    } else if let Some(d) = args.maxdrop {
        Constraint::MaxDropLe(d)
    } else {
        Constraint::None
    }
}

fn run_dist(out: &mut impl Write, format: Format, args: &DistArgs) -> Result<()> {
    let (lo, hi) = parse_range(&args.n)?;
    let stats = args
        .stat
        .split(',')
        .map(|s| s.trim().parse::<Statistic>())
        .collect::<Result<Vec<_>, _>>()?;
    let pats: Vec<&str> = args.avoid.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    let base = ClassSpec::try_avoiding(lo, &pats)?.with(constraint(args));
    let e = Enumerator::default();
    let reports = (lo..=hi)
        .map(|n| {
            let spec = base.at_size(n);
            match stats.as_slice() {
                [s] => Ok(dist(&e, &spec, *s)?),
                [y, q] => Ok(joint_dist(&e, &spec, (*y, *q))?),
                _ => bail!("--stat takes one statistic or a comma-separated pair"),
            }
        })
        .collect::<Result<Vec<DistributionReport>>>()?;
    match format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(DistributionReport::CSV_HEADER)?;
            for r in &reports {
                w.write_record(r.csv_record())?;
            }
            w.flush()?;
        }
        Format::Human => {
            let names: Vec<&str> = stats.iter().map(|s| s.name()).collect();
            writeln!(out, "# {}  stat={}", base.at_size(lo).to_string().replacen(&format!("S_{lo}"), "S_n", 1), names.join(","))?;
            writeln!(out, "{:>3}  {:>10}  distribution", "n", "size")?;
            for r in &reports {
                writeln!(out, "{:>3}  {:>10}  {}", r.spec.n, r.cardinality, r.text)?;
            }
        }
    }
    Ok(())
}

fn expand(out: &mut impl Write, format: Format, id: &str, order: usize) -> Result<()> {
    let g: Gf = id.parse()?;
    let rows = gf::expand(g, &Enumerator::default(), order)?;
    match format {
        Format::Json => {
            for r in &rows {
                let mut v = serde_json::to_value(r)?;
                v["gf"] = json!(g.id());
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["gf", "n", "series", "brute", "match"])?;
            for r in &rows {
                w.write_record([
                    g.id().to_string(),
                    r.n.to_string(),
                    r.series.clone(),
                    r.brute.clone().unwrap_or_default(),
                    r.matches.map(|m| m.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Human => {
            let (spec, a, b) = g.oracle(0);
            let stat = match b {
                Some(b) => format!("y^{} q^{}", a.name(), b.name()),
                None => format!("q^{}", a.name()),
            };
            writeln!(out, "# {g}: coefficient of z^n vs sum of {stat} over S_n({})", spec.pattern_label())?;
            for r in &rows {
                let brute = r.brute.as_deref().unwrap_or("-");
                let flag = match r.matches {
                    Some(m) => format!("match={m}"),
                    None => "match=n/a".into(),
                };
                writeln!(out, "z^{:<3} {:<32} {:<32} {flag}", r.n, r.series, brute)?;
            }
        }
    }
    Ok(())
}

fn env_bound() -> Result<Option<usize>> {
    match std::env::var(BOUND_ENV) {
        Ok(v) if !v.trim().is_empty() => Ok(Some(
            v.trim().parse().with_context(|| format!("{BOUND_ENV}={v:?} is not a size"))?,
        )),
        _ => Ok(None),
    }
}

fn list_checks(out: &mut impl Write, format: Format) -> Result<()> {
    for c in verify::registry() {
        let bound = c.default_bound();
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "check_id": c.id, "title": c.title, "scale": c.scale, "default_bound": bound, "max_bound": c.max_bound, "gating": c.gating })
            )?,
            _ => writeln!(
                out,
                "{:<14} {:<7} {:>4}  {}",
                c.id,
                format!("{:?}", c.scale).to_lowercase(),
                bound.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
                c.title
            )?,
        }
    }
    Ok(())
}

fn run_verify(out: &mut impl Write, format: Format, ids: &[String], bound: Option<usize>) -> Result<bool> {
    let bound = match bound {
        Some(b) => Some(b),
        None => env_bound()?,
    };
    let ids: Vec<&str> = if ids.is_empty() {
        vec!["all"]
    } else {
        ids.iter().map(String::as_str).collect()
    };
    let results = verify::run_checks(&ids, bound)?;
    match format {
        Format::Json => {
            for r in &results {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check_id", "status", "gating", "bound_lo", "bound_hi", "witnesses", "runtime_ms", "notes"])?;
            for r in &results {
                let (lo, hi) = r.bound.map(|[a, b]| (a.to_string(), b.to_string())).unwrap_or_default();
                w.write_record([
                    r.check_id.clone(),
                    status_name(r.status).to_string(),
                    r.gating.to_string(),
                    lo,
                    hi,
                    serde_json::to_string(&r.witnesses)?,
                    r.runtime_ms.to_string(),
                    r.notes.join("; "),
                ])?;
            }
            w.flush()?;
        }
        Format::Human => human_verify(out, &results)?,
    }
    Ok(verify::suite_passed(&results))
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Finding => "finding",
    }
}

fn human_verify(out: &mut impl Write, results: &[CheckResult]) -> Result<()> {
    for r in results {
        let bound = r.bound.map(|[a, b]| format!("n={a}..{b}")).unwrap_or_else(|| "fixed".into());
        writeln!(
            out,
            "{:<8} {:<14} {:<10} {:>6} ms  {}",
            status_name(r.status),
            r.check_id,
            bound,
            r.runtime_ms,
            r.title
        )?;
        for n in &r.notes {
            writeln!(out, "{:9}note: {n}", "")?;
        }
        for w in &r.witnesses {
            writeln!(out, "{:9}witness: {w}", "")?;
        }
    }
    let count = |s| results.iter().filter(|r| r.status == s).count();
    writeln!(
        out,
        "{} checks: {} pass, {} fail, {} finding",
        results.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Finding)
    )?;
    Ok(())
}
