use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polysum::batch::{load_input, verify_inputs, verify_random, BatchConfig, BatchReport, Identity, Input};
use polysum::centered::is_perfectly_centered;
use polysum::exact::parse_rat;
use polysum::flag::{flag_vector, GradedPoset};
use polysum::minkowski::{decompose_faces, is_relatively_general_position, perturb_to_general_position, MinkowskiSum, DEFAULT_MAX_RETRIES};
use polysum::polytope::{euler_check, polar_dual, Polytope, PolytopeFile};
use polysum::random::rand_polytope;
use polysum::{PolysumError, Result};

#[derive(Parser)]
#[command(name = "polysum", version, about = "Exact Minkowski sums and f-vector identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f-vector, small flag entries and the Euler check.
    Fvector {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minkowski sum of the given polytopes.
    Sum {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Print each face's summand faces.
        #[arg(long)]
        decompose: bool,
        /// Report whether the summands are relatively in general position.
        #[arg(long)]
        check_gp: bool,
        /// Write the sum as polytope JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Rotate summands into relative general position.
    Perturb {
        #[arg(required = true, num_args = 2..)]
        paths: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for the rotated polytopes.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check an identity on input files or on a seeded random batch.
    Verify {
        /// One of mainthm, maincor, maincor2, delta, lemface, euler, summand,
        /// bb, dsrshort, nestthm, fvthm, pc.
        identity: String,
        paths: Vec<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Maximum points sampled per random polytope.
        #[arg(long, default_value_t = 10)]
        vertices: usize,
        /// Parameter of maincor, as an integer or fraction.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Polar dual of a polytope with the origin in its interior.
    Dual {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test whether a polytope is perfectly centered.
    PcCheck {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random full-dimensional polytope.
    Rand {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// `println!` that exits quietly when stdout is a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(e.into());
        }
    }};
}

/// Identity verdicts map to 0/1; errors map to 2.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(PolysumError::PerturbationExhausted { attempts, diagnostics }) => {
            eprintln!("error: general position not reached after {attempts} attempts: {diagnostics}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn load_polytope(path: &Path) -> Result<Polytope> {
    Polytope::from_file(&PolytopeFile::load(path)?)
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "polytope".into(), |s| s.to_string_lossy().into_owned())
}

fn write_or_print(json: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{json}\n"))?,
        None => out!("{json}"),
    }
    Ok(())
}

fn max_retries() -> Result<usize> {
    match std::env::var("POLYSUM_MAX_RETRIES") {
        Ok(v) => v.trim().parse().map_err(|_| PolysumError::OutOfRange(format!("POLYSUM_MAX_RETRIES={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_RETRIES),
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Fvector { path, json } => cmd_fvector(&path, json),
        Command::Sum { paths, decompose, check_gp, out, json } => cmd_sum(&paths, decompose, check_gp, out.as_deref(), json),
        Command::Perturb { paths, seed, out, json } => cmd_perturb(&paths, seed, out.as_deref(), json),
        Command::Verify { identity, paths, random, seed, count, d, vertices, a, out, json } => {
            let identity: Identity = identity.parse()?;
            let a = parse_rat(&a)?;
            let report = if random {
                if !paths.is_empty() {
                    return Err(PolysumError::OutOfRange("--random takes no input files".into()));
                }
                let mut cfg = BatchConfig::new(identity, seed, count);
                cfg.dim = d;
                cfg.max_vertices = vertices;
                cfg.a = a;
                cfg.max_retries = max_retries()?;
                verify_random(&cfg)?
            } else {
                let inputs = paths
                    .iter()
                    .map(|p| Ok((stem(p), load_input(p)?)))
                    .collect::<Result<Vec<(String, Input)>>>()?;
                verify_inputs(identity, &inputs, &a)?
            };
            print_batch(&report, json)?;
            if let Some(out) = out {
                write_or_print(&report.to_json()?, Some(&out))?;
            }
            Ok(verdict(report.all_pass()))
        }
        Command::Dual { path, out } => {
            let dual = polar_dual(&load_polytope(&path)?)?;
            let file = PolytopeFile::from_polytope(format!("{}_dual", stem(&path)), dual.vpolytope());
            write_or_print(&file.to_json(), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::PcCheck { path, json } => {
            let report = is_perfectly_centered(&load_polytope(&path)?)?;
            if json {
                out!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                out!("perfectly centered: {}", report.pass);
                for line in &report.diagnostics {
                    out!("  {line}");
                }
            }
            Ok(verdict(report.pass))
        }
        Command::Rand { d, vertices, seed, out } => {
            let p = rand_polytope(d, vertices, seed)?;
            let file = PolytopeFile::from_polytope(format!("rand_d{d}_n{vertices}_s{seed}"), &p);
            write_or_print(&file.to_json(), out.as_deref())?;
            Ok(Outcome::Pass)
        }
    }
}

fn cmd_fvector(path: &Path, json: bool) -> Result<Outcome> {
    let p = load_polytope(path)?;
    let f = p.f_vector();
    let euler = euler_check(&f);
    let flags = flag_vector(&GradedPoset::from_face_lattice(p.lattice()));
    let small: Vec<_> = flags.entries().into_iter().filter(|e| e.dims.len() <= 3).collect();
    if json {
        let v = serde_json::json!({ "f": f.proper(), "flag": small, "euler": euler });
        out!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        if f.dim() == 0 {
            out!("f = {f}");
        } else {
            out!("f = {f}; euler: {}", if euler.pass { "pass" } else { "FAIL" });
        }
        for e in &small {
            let dims: Vec<String> = e.dims.iter().map(usize::to_string).collect();
            out!("  f_{{{}}} = {}", dims.join(","), e.count);
        }
    }
    Ok(verdict(euler.pass))
}

fn load_all(paths: &[PathBuf]) -> Result<Vec<Polytope>> {
    paths.iter().map(|p| load_polytope(p)).collect()
}

fn cmd_sum(paths: &[PathBuf], decompose: bool, check_gp: bool, out: Option<&Path>, json: bool) -> Result<Outcome> {
    let ms = MinkowskiSum::from_polytopes(load_all(paths)?)?;
    let names: Vec<String> = paths.iter().map(|p| stem(p)).collect();
    let file = PolytopeFile::from_polytope(names.join("+"), ms.sum().vpolytope());
    let sd = if decompose || check_gp { Some(decompose_faces(&ms)?) } else { None };
    let gp = sd.as_ref().map(is_relatively_general_position);
    if let Some(out) = out {
        write_or_print(&file.to_json(), Some(out))?;
    }
    if json {
        let mut v = serde_json::json!({ "sum": file, "f": ms.sum().f_vector().proper() });
        if let Some(gp) = gp.filter(|_| check_gp) {
            v["gp"] = gp.into();
        }
        if let Some(sd) = sd.as_ref().filter(|_| decompose) {
            v["decomposition"] = serde_json::to_value(sd.iter().collect::<Vec<_>>())?;
        }
        out!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(Outcome::Pass);
    }
    out!("f = {}", ms.sum().f_vector());
    if let (true, Some(sd)) = (decompose, &sd) {
        for e in sd.iter() {
            let parts: Vec<String> = e.parts.iter().map(usize::to_string).collect();
            let tag = if e.exact { "exact" } else { "inexact" };
            out!("  face {} (dim {}): ({}) {tag}", e.face, e.dim, parts.join(", "));
        }
    }
    if let (true, Some(gp)) = (check_gp, gp) {
        out!("gp: {gp}");
    }
    Ok(Outcome::Pass)
}

fn cmd_perturb(paths: &[PathBuf], seed: u64, out: Option<&Path>, json: bool) -> Result<Outcome> {
    let polys = load_all(paths)?;
    let summands: Vec<_> = polys.iter().map(|p| p.vpolytope().clone()).collect();
    let pert = perturb_to_general_position(&summands, seed, max_retries()?)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        for (path, p) in paths.iter().zip(&pert.summands) {
            let name = format!("{}_perturbed", stem(path));
            PolytopeFile::from_polytope(name.clone(), p).save(dir.join(format!("{name}.json")))?;
        }
    }
    let dominates = pert.after.dominates(&pert.before);
    if json {
        let files: Vec<_> = paths.iter().zip(&pert.summands).map(|(path, p)| PolytopeFile::from_polytope(stem(path), p)).collect();
        let v = serde_json::json!({
            "seed": seed,
            "attempts": pert.attempts,
            "identity_rotation": pert.is_identity(),
            "before": pert.before.proper(),
            "after": pert.after.proper(),
            "dominates": dominates,
            "summands": files,
        });
        out!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        if pert.is_identity() {
            out!("already in general position: identity rotation");
        } else {
            out!("gp reached after {} attempt(s), epsilon {}", pert.attempts, pert.epsilon);
        }
        out!("before f = {}", pert.before);
        out!("after  f = {}", pert.after);
        out!("after >= before componentwise: {dominates}");
    }
    Ok(verdict(dominates))
}

fn print_batch(report: &BatchReport, json: bool) -> Result<()> {
    if json {
        out!("{}", report.to_json()?);
        return Ok(());
    }
    for inst in &report.instances {
        out!("[{}] {}: {}", inst.index, inst.source, if inst.pass { "pass" } else { "FAIL" });
        if let Some(p) = &inst.perturbation {
            out!("    rotation seed {}, {} attempt(s)", p.rotation_seed, p.attempts);
        }
        for r in &inst.reports {
            out!("    {}", r.summary());
        }
    }
    out!("{}: {}/{} pass", report.identity, report.passed, report.passed + report.failed);
    Ok(())
}
