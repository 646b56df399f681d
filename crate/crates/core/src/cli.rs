//! Command-line front end.
//!
//! Result lines are `key=value` tokens separated by spaces. `--quiet` keeps
//! only the final result line of each subcommand. Exit codes: 0 on success,
//! 1 for domain errors (invalid spec, bound refusal), 2 for I/O and parse
//! errors, including bad command lines.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::blowup::{apex_augment, blow_up, BlowupSpec};
use crate::constructions::{
    circulant_bipartite, circulant_unipartite, complete_graph, pell_solution, theorem2_bound_check,
    theorem2_construction, theorem2_vertex_sums, CirculantBipartiteSpec, CirculantSpec,
};
use crate::error::{Error, Result};
use crate::extremal::{binom2, brute_force_max_sum_deg_sq, quasi_complete, quasi_star, sum_deg_sq};
use crate::graph::{verify_sed, SedReport, Sign, SignedGraph};
use crate::io::{read_edge_list_file, write_edge_list, write_edge_list_file};
use crate::optimization::{
    appendix_a_minimax, certify_floor, system_curves, System, DEFAULT_GRID_STEP,
};
use crate::solver::{solve_g, verify_lower_bounds, SearchConfig, SearchMode};

#[derive(Debug, Parser)]
#[command(name = "sedgraph", version, about = "Signed edge-dominated graphs")]
pub struct CliConfig {
    /// Write the produced graph (or witness) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for CSV curve output.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    /// Print only the final result line.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Worker threads for the exact search.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one of the graph families.
    Construct(ConstructArgs),
    /// Check the signed edge domination condition of an edge-list file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// k-blow-up of a graph, optionally with an apex vertex.
    Blowup {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        apex: bool,
    },
    /// Sum of squared degrees of the quasi-complete and quasi-star graphs.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "all_e", required_unless_present = "all_e")]
        e: Option<usize>,
        #[arg(long)]
        all_e: bool,
        /// Also run the exhaustive maximum (n <= 7).
        #[arg(long)]
        oracle: bool,
    },
    /// Grid-certify the minimax systems.
    Optimize {
        #[arg(long, value_enum, default_value = "all")]
        system: SystemArg,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid: f64,
    },
    /// Exact minimum total weight over SED-pairs of order n.
    Gn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        symmetry: bool,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub family: Family,
    /// Print the SED report.
    #[arg(long, global = true)]
    pub report: bool,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Pell-parameterized SED-pair with negative total weight
    Theorem2 {
        #[arg(long)]
        pell_index: usize,
    },
    /// Bipartite circulant band graph on `l` blocks per side
    CirculantBipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "+1")]
        weight: Sign,
    },
    /// Circulant band graph on `2l` blocks of size `a`
    Circulant {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "+1")]
        weight: Sign,
    },
    /// Complete graph with uniform weight
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "+1")]
        weight: Sign,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SystemArg {
    A,
    B1,
    B2,
    C1,
    C2,
    All,
}

impl SystemArg {
    fn systems(self) -> Vec<System> {
        match self {
            SystemArg::A => vec![System::AppendixA],
            SystemArg::B1 => vec![System::AppendixBCase1],
            SystemArg::B2 => vec![System::AppendixBCase2],
            SystemArg::C1 => vec![System::AppendixCCase1],
            SystemArg::C2 => vec![System::AppendixCCase2],
            SystemArg::All => System::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    All,
    Restricted,
}

/// Collects report lines; with `quiet` only the last `result` line survives.
struct Output<'a> {
    out: &'a mut dyn Write,
    quiet: bool,
}

impl Output<'_> {
    fn detail(&mut self, line: impl AsRef<str>) -> Result<()> {
        if !self.quiet {
            writeln!(self.out, "{}", line.as_ref())?;
        }
        Ok(())
    }

    fn result(&mut self, line: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", line.as_ref())?;
        Ok(())
    }

    fn raw(&mut self, text: &str) -> Result<()> {
        self.out.write_all(text.as_bytes())?;
        Ok(())
    }
}

/// Parses `argv` (program name first) and runs it with the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cfg, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cfg: &CliConfig, out: &mut dyn Write) -> Result<()> {
    let mut o = Output {
        out,
        quiet: cfg.quiet,
    };
    match &cfg.command {
        Command::Construct(args) => construct(cfg, args, &mut o),
        Command::Verify { input } => {
            let g = read_edge_list_file(input)?;
            let report = verify_sed(&g);
            print_report_table(&g, &report, &mut o)?;
            o.result(format!(
                "is_sed={} total={}",
                report.is_sed, report.total_weight
            ))
        }
        Command::Blowup { input, k, apex } => {
            let g = read_edge_list_file(input)?;
            let mut b = blow_up(&g, BlowupSpec::new(*k)?);
            if *apex {
                b = apex_augment(&b);
            }
            emit_graph(cfg, &b, false, &mut o)?;
            let r = verify_sed(&b);
            if cfg.out.is_some() {
                o.result(format!(
                    "n={} m={} s={} is_sed={}",
                    b.n(),
                    b.edge_count(),
                    r.total_weight,
                    r.is_sed
                ))?;
            }
            Ok(())
        }
        Command::Extremal {
            n,
            e,
            all_e,
            oracle,
        } => extremal(*n, *e, *all_e, *oracle, &mut o),
        Command::Optimize { system, grid } => optimize(cfg, *system, *grid, &mut o),
        Command::Gn {
            n,
            mode,
            witness,
            symmetry,
        } => {
            let mode = match mode {
                ModeArg::All => SearchMode::All,
                ModeArg::Restricted => SearchMode::RestrictedClass,
            };
            let config = SearchConfig::new(*n)
                .mode(mode)
                .workers(cfg.workers)
                .symmetry_break(*symmetry);
            let result = solve_g(&config)?;
            verify_lower_bounds(std::slice::from_ref(&result))?;
            let target = witness.as_ref().or(cfg.out.as_ref());
            if let (Some(path), Some(w)) = (target, &result.witness) {
                write_edge_list_file(path, w)?;
                o.detail(format!("witness written to {}", path.display()))?;
            }
            let mode_name = match mode {
                SearchMode::All => "all",
                SearchMode::RestrictedClass => "restricted",
            };
            o.result(format!(
                "n={} g={} nodes={} mode={mode_name}",
                result.n, result.g_value, result.nodes_explored
            ))
        }
    }
}

fn emit_graph(cfg: &CliConfig, g: &SignedGraph, report: bool, o: &mut Output<'_>) -> Result<()> {
    match &cfg.out {
        Some(path) => write_edge_list_file(path, g),
        None if !report => o.raw(&write_edge_list(g)),
        None => Ok(()),
    }
}

fn print_report_table(g: &SignedGraph, r: &SedReport, o: &mut Output<'_>) -> Result<()> {
    o.detail(format!("{:>8} {:>8}", "vertex", "s_v"))?;
    for (v, s) in r.vertex_sums.iter().enumerate() {
        o.detail(format!("{v:>8} {s:>8}"))?;
    }
    o.detail(format!("{:>8} {:>8} {:>4} {:>8}", "u", "v", "w", "N[e]"))?;
    for (e, s) in g.edges().iter().zip(&r.edge_neighborhood_sums) {
        o.detail(format!("{:>8} {:>8} {:>4} {:>8}", e.u, e.v, e.w, s))?;
    }
    Ok(())
}

fn construct(cfg: &CliConfig, args: &ConstructArgs, o: &mut Output<'_>) -> Result<()> {
    let g = match &args.family {
        Family::Theorem2 { pell_index } => {
            if *pell_index == 0 {
                return Err(Error::InvalidInput("--pell-index is 1-based".into()));
            }
            let pq = pell_solution(*pell_index)?;
            let bound = theorem2_bound_check(pq)?;
            if bound.n > 200_000 {
                return Err(Error::InvalidInput(format!(
                    "order {} is too large to materialize",
                    bound.n
                )));
            }
            let t = theorem2_construction(pq)?;
            if args.report {
                let (sa, sb, sc, sx) = theorem2_vertex_sums(pq);
                o.detail(format!("p={} q={}", pq.p(), pq.q()))?;
                o.detail(format!(
                    "|A|={} |B|={} |C|={} s_a={sa} s_b={sb} s_c={sc} s_x={sx}",
                    t.a.len(),
                    t.b.len(),
                    t.c.len()
                ))?;
                o.detail(format!("ratio={:.9}", bound.ratio))?;
            }
            t.graph
        }
        Family::CirculantBipartite { a, b, k, l, weight } => circulant_bipartite(
            CirculantBipartiteSpec {
                a: *a,
                b: *b,
                k: *k,
                l: *l,
            },
            *weight,
        )?,
        Family::Circulant { a, k, l, weight } => circulant_unipartite(
            CirculantSpec {
                a: *a,
                k: *k,
                l: *l,
            },
            *weight,
        )?,
        Family::Complete { n, weight } => complete_graph(*n, *weight)?,
    };
    emit_graph(cfg, &g, args.report, o)?;
    if args.report {
        let r = verify_sed(&g);
        if g.n() <= 64 {
            print_report_table(&g, &r, o)?;
        }
        o.result(format!(
            "n={} m={} s={} is_sed={}",
            g.n(),
            g.edge_count(),
            r.total_weight,
            r.is_sed
        ))?;
    }
    Ok(())
}

fn extremal(
    n: usize,
    e: Option<usize>,
    all_e: bool,
    oracle: bool,
    o: &mut Output<'_>,
) -> Result<()> {
    let es: Vec<usize> = match (e, all_e) {
        (Some(e), _) => vec![e],
        (None, _) => (0..=binom2(n)).collect(),
    };
    let mut header = format!("{:>6} {:>10} {:>10} {:>10}", "e", "sum_C", "sum_S", "F");
    if oracle {
        header.push_str(&format!(" {:>10}", "oracle"));
    }
    o.detail(header)?;
    let mut mismatches = 0;
    for &e in &es {
        let c = sum_deg_sq(&quasi_complete(n, e)?);
        let s = sum_deg_sq(&quasi_star(n, e)?);
        let f = c.max(s);
        let mut line = format!("{e:>6} {c:>10} {s:>10} {f:>10}");
        if oracle {
            let b = brute_force_max_sum_deg_sq(n, e)?;
            if b != f {
                mismatches += 1;
            }
            line.push_str(&format!(" {b:>10}"));
        }
        o.detail(line)?;
    }
    let mut last = format!("n={n} rows={}", es.len());
    if oracle {
        last.push_str(&format!(" oracle_mismatches={mismatches}"));
    }
    o.result(last)?;
    if mismatches > 0 {
        return Err(Error::Contract(format!(
            "{mismatches} rows disagree with the exhaustive maximum"
        )));
    }
    Ok(())
}

fn optimize(cfg: &CliConfig, which: SystemArg, grid: f64, o: &mut Output<'_>) -> Result<()> {
    if !(grid > 0.0 && grid <= 0.1) {
        return Err(Error::Domain(format!(
            "grid step must be in (0, 0.1], got {grid}"
        )));
    }
    let systems = which.systems();
    let mut all_passed = true;
    for (i, &system) in systems.iter().enumerate() {
        let cert = match system {
            System::AppendixA => appendix_a_minimax(grid),
            other => certify_floor(other, grid),
        };
        all_passed &= cert.passed;
        if let Some(dir) = &cfg.csv {
            write_curves(dir, system, grid)?;
        }
        if i + 1 == systems.len() {
            o.result(cert.to_string())?;
        } else {
            o.detail(cert.to_string())?;
        }
    }
    if !all_passed {
        return Err(Error::Contract("at least one certificate failed".into()));
    }
    Ok(())
}

fn write_curves(dir: &Path, system: System, step: f64) -> Result<()> {
    fs::create_dir_all(dir)?;
    for curve in system_curves(system, step)? {
        fs::write(dir.join(format!("{}.csv", curve.name)), curve.to_csv())?;
    }
    Ok(())
}
