mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use latpoly::classify::{appendix_fans, classify, minimal_smooth_2fans, ClassifyOptions, Provenance, Pruning, SeedFanSet};
use latpoly::cones::{is_smooth, is_very_ample, polytope_multiplicity};
use latpoly::equivalence::{canonical_form, dedup_classes};
use latpoly::fixtures::{bruns_polytope, fibonacci_polygon, hirzebruch_trapezoid, reeve_simplex};
use latpoly::io;
use latpoly::triangulation::{find_flag_unimodular_regular, is_flag, is_unimodular_triangulation, pulling_triangulation};
use latpoly::LatticePolytope;

use report::{histogram_line, histogram_table, yes_no};

const EXIT_USAGE: u8 = 1;
const EXIT_INCOMPLETE: u8 = 2;

#[derive(Parser)]
#[command(name = "latpoly", version, about = "Smooth lattice polytopes with few lattice points")]
struct Cli {
    /// Worker threads for searches.
    #[arg(long, global = true, env = "LATPOLY_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PruningArg {
    VertexCount,
    EmptyChamber,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Reeve,
    Bruns,
    Fibonacci,
    Hirzebruch,
}

#[derive(Subcommand)]
enum Command {
    /// Classify smooth polytopes with at most K lattice points.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3))]
        dim: u64,
        #[arg(long)]
        max_points: usize,
        /// Fan file (JSON array or one fan per line), or `appendix_fans`.
        #[arg(long)]
        seeds: Option<String>,
        /// Record stream destination.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Maximum number of fans to explore.
        #[arg(long, default_value_t = ClassifyOptions::default().max_fans)]
        budget: usize,
        #[arg(long, value_enum, default_value = "vertex-count")]
        pruning: PruningArg,
    },
    /// Check every polytope of a line-delimited list.
    Verify { file: PathBuf },
    /// Hilbert basis of the cone in a cone file.
    Hilbert { file: PathBuf },
    /// Canonical representative of the polytope in a polytope file.
    Canonical { file: PathBuf },
    /// Pulling triangulation, or with --flag-check a search for a
    /// unimodular flag one.
    Triangulate {
        #[arg(long)]
        flag_check: bool,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        file: PathBuf,
    },
    /// Named example families.
    Examples {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn seeds(dim: usize, max_points: usize, arg: Option<&str>) -> Result<SeedFanSet> {
    match arg {
        Some("appendix_fans") => Ok(appendix_fans(dim)),
        Some(path) => Ok(SeedFanSet::from_fans(io::read_fan_list(&read(Path::new(path))?)?, Provenance::File)),
        // a Hirzebruch polygon of parameter a has at least a + 4 points
        None if dim == 2 => Ok(minimal_smooth_2fans(max_points.saturating_sub(4) as u32)),
        None => bail!("--seeds is required in dimension 3"),
    }
}

fn cmd_classify(
    dim: usize,
    max_points: usize,
    seed_arg: Option<&str>,
    out: Option<&Path>,
    budget: usize,
    pruning: PruningArg,
    jobs: Option<usize>,
) -> Result<u8> {
    let seeds = seeds(dim, max_points, seed_arg)?;
    let pruning = match pruning {
        PruningArg::VertexCount => Pruning::VertexCount,
        PruningArg::EmptyChamber => Pruning::EmptyChamber,
    };
    let r = classify(dim, max_points, &seeds, ClassifyOptions { max_fans: budget, jobs, pruning })?;
    let records = io::records_from_result(&r);
    if let Some(out) = out {
        let path = if r.incomplete {
            let mut name = out.as_os_str().to_owned();
            name.push(".partial");
            PathBuf::from(name)
        } else {
            out.to_path_buf()
        };
        fs::write(&path, io::write_records(&records)).with_context(|| format!("writing {}", path.display()))?;
        println!("records: {} -> {}", records.len(), path.display());
    } else {
        println!("records: {}", records.len());
    }
    let hist = r.vertex_histogram();
    print!("{}", histogram_table(dim, &hist));
    println!("histogram: {}", histogram_line(dim, &hist));
    println!(
        "fans explored: {}, rhs vectors tested: {}, fans without polytopes: {}",
        r.stats.fans_explored, r.stats.b_vectors_tested, r.stats.pruned
    );
    if r.incomplete {
        eprintln!("incomplete: fan budget of {budget} exhausted");
        return Ok(EXIT_INCOMPLETE);
    }
    Ok(0)
}

fn cmd_verify(path: &Path) -> Result<u8> {
    let polys = io::read_polytope_list(&read(path)?)?;
    for (i, p) in polys.iter().enumerate() {
        let mult = polytope_multiplicity(p).map_or_else(|_| "n/a".to_string(), |m| m.to_string());
        println!(
            "#{}: points: {}, smooth: {}, very ample: {}, mult: {}",
            i + 1,
            p.num_lattice_points(),
            yes_no(is_smooth(p)),
            yes_no(is_very_ample(p)?),
            mult
        );
    }
    let classes = dedup_classes(&polys)?;
    println!("classes: {} for {} inputs", classes.len(), polys.len());
    println!("pairwise inequivalent: {}", yes_no(classes.len() == polys.len()));
    Ok(0)
}

fn cmd_hilbert(path: &Path) -> Result<u8> {
    let cone = io::read_cone(&read(path)?)?;
    let basis: Vec<Vec<i64>> = cone.hilbert_basis().iter().map(|v| v.to_vec()).collect();
    println!("{}", json!({ "hilbert_basis": basis }));
    Ok(0)
}

fn cmd_canonical(path: &Path) -> Result<u8> {
    let p = io::read_polytope(&read(path)?)?;
    let form = canonical_form(&p)?;
    println!("{}", io::polytope_to_json(&form.polytope()));
    Ok(0)
}

fn certificate(order: &[usize], simplices: &[Vec<usize>], p: &LatticePolytope) -> serde_json::Value {
    let points: Vec<Vec<i64>> = p.lattice_points().iter().map(|v| v.to_vec()).collect();
    json!({ "points": points, "order": order, "simplices": simplices })
}

fn cmd_triangulate(path: &Path, flag_check: bool, budget: u64, seed: u64, jobs: Option<usize>) -> Result<u8> {
    let p = io::read_polytope(&read(path)?)?;
    if !p.is_full_dimensional() {
        bail!("polytope is not full-dimensional");
    }
    if !flag_check {
        let order: Vec<usize> = (0..p.num_lattice_points()).collect();
        let t = pulling_triangulation(&p, &order);
        println!("{}", certificate(&t.order, &t.simplices, &p));
        println!("unimodular: {}, flag: {}", yes_no(is_unimodular_triangulation(&t)), yes_no(is_flag(&t)));
        return Ok(0);
    }
    let search = || find_flag_unimodular_regular(&p, budget, seed);
    let found = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build()?.install(search),
        None => search(),
    };
    match found {
        Some((t, order)) => println!("{}", certificate(&order, &t.simplices, &p)),
        None => println!("no-certificate-within-budget"),
    }
    Ok(0)
}

fn cmd_examples(family: Family, k: i64) -> Result<u8> {
    let (p, marked) = match family {
        Family::Reeve => (reeve_simplex(k)?, None),
        Family::Bruns => (bruns_polytope(k)?, None),
        Family::Fibonacci => {
            let k = u32::try_from(k).context("k out of range")?;
            (fibonacci_polygon(k)?, None)
        }
        Family::Hirzebruch => {
            let h = hirzebruch_trapezoid(k)?;
            (h.polytope, Some(h.marked))
        }
    };
    println!("{}", io::polytope_to_json(&p));
    println!("volume: {}", p.normalized_volume());
    println!("points: {}", p.num_lattice_points());
    println!("vertices: {}", p.vertices().len());
    println!("smooth: {}", yes_no(is_smooth(&p)));
    println!("very ample: {}", yes_no(is_very_ample(&p)?));
    match polytope_multiplicity(&p) {
        Ok(m) => println!("multiplicity: {m}"),
        Err(e) => println!("multiplicity: n/a ({e})"),
    }
    if let Some(m) = marked {
        let m: Vec<Vec<i64>> = m.iter().map(|v| v.to_vec()).collect();
        println!("marked: {}", json!(m));
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    let jobs = cli.jobs;
    match cli.command {
        Command::Classify { dim, max_points, seeds, out, budget, pruning } => {
            cmd_classify(dim as usize, max_points, seeds.as_deref(), out.as_deref(), budget, pruning, jobs)
        }
        Command::Verify { file } => cmd_verify(&file),
        Command::Hilbert { file } => cmd_hilbert(&file),
        Command::Canonical { file } => cmd_canonical(&file),
        Command::Triangulate { flag_check, budget, seed, file } => cmd_triangulate(&file, flag_check, budget, seed, jobs),
        Command::Examples { family, k } => cmd_examples(family, k),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
