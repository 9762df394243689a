//! Batch verification over input files or seeded random instances, with
//! reports that are byte-identical for identical configurations.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::centered::{is_perfectly_centered, verify_fvthm, verify_mainthm_pc};
use crate::error::{PolysumError, Result};
use crate::exact::{format_rat, rat_int, Rat};
use crate::flag::{
    first_non_eulerian_interval, flag_vector, verify_bayer_billera, verify_dsrshort_all, verify_nestthm, GradedPoset,
    PosetFile,
};
use crate::minkowski::{
    decompose_faces, perturb_to_general_position, verify_lem_euler, verify_lem_summand, verify_lemface,
    verify_maincor, verify_maincor2, verify_mainthm, verify_thm_delta, MinkowskiSum, Perturbation, SumDecomposition,
    DEFAULT_MAX_RETRIES,
};
use crate::polytope::{euler_check, Polytope, PolytopeFile, VPolytope};
use crate::random::rand_polytope_in;
use crate::report::VerifierReport;

/// Identities selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Mainthm,
    Maincor,
    Maincor2,
    Delta,
    Lemface,
    Euler,
    Summand,
    Bb,
    Dsrshort,
    Nestthm,
    Fvthm,
    Pc,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Self::Mainthm,
        Self::Maincor,
        Self::Maincor2,
        Self::Delta,
        Self::Lemface,
        Self::Euler,
        Self::Summand,
        Self::Bb,
        Self::Dsrshort,
        Self::Nestthm,
        Self::Fvthm,
        Self::Pc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Mainthm => "mainthm",
            Self::Maincor => "maincor",
            Self::Maincor2 => "maincor2",
            Self::Delta => "delta",
            Self::Lemface => "lemface",
            Self::Euler => "euler",
            Self::Summand => "summand",
            Self::Bb => "bb",
            Self::Dsrshort => "dsrshort",
            Self::Nestthm => "nestthm",
            Self::Fvthm => "fvthm",
            Self::Pc => "pc",
        }
    }

    /// Whether instances are Minkowski sums (all inputs form one sum)
    /// rather than single polytopes or posets.
    pub fn takes_sum(self) -> bool {
        matches!(self, Self::Mainthm | Self::Maincor | Self::Maincor2 | Self::Delta | Self::Lemface | Self::Summand)
    }

    fn accepts_posets(self) -> bool {
        matches!(self, Self::Bb | Self::Dsrshort | Self::Nestthm)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = PolysumError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| PolysumError::OutOfRange(format!("unknown identity {s:?}")))
    }
}

/// Settings for random batches.
#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub identity: Identity,
    pub seed: u64,
    pub count: usize,
    /// Ambient dimension; drawn from `2..=4` per instance when unset.
    pub dim: Option<usize>,
    /// Upper bound on points sampled per polytope.
    pub max_vertices: usize,
    /// Parameter of the `maincor` identity.
    pub a: Rat,
    pub max_retries: usize,
}

impl BatchConfig {
    pub fn new(identity: Identity, seed: u64, count: usize) -> Self {
        Self { identity, seed, count, dim: None, max_vertices: 10, a: rat_int(1), max_retries: DEFAULT_MAX_RETRIES }
    }
}

/// How an instance's summands were rotated into general position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationInfo {
    pub rotation_seed: u64,
    pub attempts: usize,
    pub epsilon: String,
    pub before: Vec<u64>,
    pub after: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturbation: Option<PerturbationInfo>,
    pub reports: Vec<VerifierReport>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: usize,
    pub failed: usize,
    pub instances: Vec<InstanceReport>,
}

impl BatchReport {
    fn new(identity: Identity, seed: Option<u64>, instances: Vec<InstanceReport>) -> Self {
        let passed = instances.iter().filter(|i| i.pass).count();
        Self { identity: identity.name().into(), seed, passed, failed: instances.len() - passed, instances }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum Input {
    Polytope(Polytope),
    Poset(GradedPoset),
}

/// Reads a polytope file, or a poset file (recognized by its `ranks` key).
pub fn load_input(path: impl AsRef<Path>) -> Result<Input> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("ranks").is_some() {
        let f: PosetFile = serde_json::from_value(value)?;
        return Ok(Input::Poset(GradedPoset::from_file(&f)?));
    }
    let f: PolytopeFile = serde_json::from_value(value)?;
    Ok(Input::Polytope(Polytope::from_file(&f)?))
}

fn instance(index: usize, source: String, perturbation: Option<PerturbationInfo>, reports: Vec<VerifierReport>) -> InstanceReport {
    let pass = reports.iter().all(|r| r.pass);
    InstanceReport { index, source, perturbation, reports, pass }
}

/// Runs a sum identity on one sum.
pub fn check_sum(identity: Identity, ms: &MinkowskiSum, sd: &SumDecomposition, a: &Rat) -> Result<Vec<VerifierReport>> {
    let d = ms.dim();
    Ok(match identity {
        Identity::Mainthm => vec![verify_mainthm(ms, sd)?],
        Identity::Maincor => vec![verify_maincor(ms, sd, a)?],
        Identity::Maincor2 => vec![verify_maincor2(ms, sd)?],
        Identity::Delta => (0..d).map(|k| verify_thm_delta(ms, sd, k)).collect::<Result<_>>()?,
        Identity::Lemface => {
            let parts = sd.iter().filter(|e| e.exact).map(|e| verify_lemface(ms, sd, e.face)).collect::<Result<Vec<_>>>()?;
            vec![VerifierReport::aggregate("lemface", &parts)]
        }
        Identity::Summand => (0..ms.num_summands())
            .flat_map(|i| (0..d).map(move |k| (i, k)))
            .map(|(i, k)| verify_lem_summand(ms, sd, i, k))
            .collect::<Result<_>>()?,
        other => return Err(PolysumError::OutOfRange(format!("{other} is not an identity on sums"))),
    })
}

/// Runs a single-polytope identity.
pub fn check_polytope(identity: Identity, p: &Polytope) -> Result<Vec<VerifierReport>> {
    match identity {
        Identity::Euler => {
            let mut out = vec![euler_check(&p.f_vector())];
            for k in 0..p.dim() {
                out.push(verify_lem_euler(p, k)?);
            }
            Ok(out)
        }
        Identity::Bb | Identity::Dsrshort | Identity::Nestthm => {
            check_poset(identity, &GradedPoset::from_face_lattice(p.lattice()))
        }
        Identity::Fvthm => Ok(vec![verify_fvthm(p)?]),
        Identity::Pc => Ok(vec![is_perfectly_centered(p)?, verify_mainthm_pc(p)?]),
        other => Err(PolysumError::OutOfRange(format!("{other} is not an identity on single polytopes"))),
    }
}

/// Runs a flag-vector identity after checking the Eulerian property; a
/// non-Eulerian poset gets an advisory.
pub fn check_poset(identity: Identity, p: &GradedPoset) -> Result<Vec<VerifierReport>> {
    let fv = flag_vector(p);
    let report = match identity {
        Identity::Bb => verify_bayer_billera(&fv),
        Identity::Dsrshort => verify_dsrshort_all(&fv),
        Identity::Nestthm => verify_nestthm(&fv),
        other => return Err(PolysumError::OutOfRange(format!("{other} is not an identity on posets"))),
    };
    let advisory = first_non_eulerian_interval(p).map(|(x, y)| format!("not Eulerian: interval [{x}, {y}]"));
    Ok(vec![report.with_advisory(advisory)])
}

/// Verifies an identity on named inputs. Sum identities treat all inputs as
/// the summands of one sum, used as given; other identities check each
/// input separately.
pub fn verify_inputs(identity: Identity, inputs: &[(String, Input)], a: &Rat) -> Result<BatchReport> {
    if inputs.is_empty() {
        return Err(PolysumError::EmptyInput("no input files"));
    }
    if identity.takes_sum() {
        let polys = inputs
            .iter()
            .map(|(name, i)| match i {
                Input::Polytope(p) => Ok(p.clone()),
                Input::Poset(_) => Err(PolysumError::OutOfRange(format!("{name} is a poset, not a polytope"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let ms = MinkowskiSum::from_polytopes(polys)?;
        let sd = decompose_faces(&ms)?;
        let names: Vec<&str> = inputs.iter().map(|(n, _)| n.as_str()).collect();
        let reports = check_sum(identity, &ms, &sd, a)?;
        return Ok(BatchReport::new(identity, None, vec![instance(0, names.join(" + "), None, reports)]));
    }
    let instances = inputs
        .iter()
        .enumerate()
        .map(|(index, (name, input))| {
            let reports = match input {
                Input::Polytope(p) => check_polytope(identity, p)?,
                Input::Poset(p) if identity.accepts_posets() => check_poset(identity, p)?,
                Input::Poset(_) => return Err(PolysumError::OutOfRange(format!("{identity} needs polytopes, {name} is a poset"))),
            };
            Ok(instance(index, name.clone(), None, reports))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BatchReport::new(identity, None, instances))
}

/// Summands for one random sum instance: two or three of them, all
/// full-dimensional unless `mixed`, in which case each gets a random
/// dimension in `1..=d` and the first stays full-dimensional.
pub fn random_summands(d: usize, max_vertices: usize, mixed: bool, rng: &mut ChaCha8Rng) -> Result<Vec<VPolytope>> {
    let r = rng.gen_range(2..=3);
    (0..r)
        .map(|i| {
            let dim = if mixed && i > 0 { rng.gen_range(1..=d) } else { d };
            let n = rng.gen_range(dim + 1..=max_vertices.max(dim + 1));
            rand_polytope_in(d, dim, n, rng)
        })
        .collect()
}

/// A seeded random sum rotated into relative general position.
#[derive(Clone, Debug)]
pub struct RandomSum {
    pub seed: u64,
    pub dim: usize,
    pub perturbation: Perturbation,
}

impl RandomSum {
    pub fn sum(&self) -> &MinkowskiSum {
        &self.perturbation.sum
    }

    pub fn decomposition(&self) -> &SumDecomposition {
        &self.perturbation.decomposition
    }

    pub fn info(&self) -> PerturbationInfo {
        let p = &self.perturbation;
        PerturbationInfo {
            rotation_seed: self.seed,
            attempts: p.attempts,
            epsilon: format_rat(&p.epsilon),
            before: p.before.proper().to_vec(),
            after: p.after.proper().to_vec(),
        }
    }
}

/// Draws the dimension (from `2..=4` unless given) and summands from
/// `seed`, then perturbs with the same seed.
pub fn random_sum(seed: u64, dim: Option<usize>, max_vertices: usize, mixed: bool, max_retries: usize) -> Result<RandomSum> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = match dim {
        Some(d) => d,
        None => rng.gen_range(2..=4),
    };
    let summands = random_summands(d, max_vertices, mixed, &mut rng)?;
    let perturbation = perturb_to_general_position(&summands, seed, max_retries)?;
    Ok(RandomSum { seed, dim: d, perturbation })
}

fn random_instance(cfg: &BatchConfig, index: usize, seed: u64) -> Result<InstanceReport> {
    if !cfg.identity.takes_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = match cfg.dim {
            Some(d) => d,
            None => rng.gen_range(2..=4),
        };
        let n = rng.gen_range(d + 1..=cfg.max_vertices.max(d + 1));
        let p = Polytope::from_vpolytope(&rand_polytope_in(d, d, n, &mut rng)?)?;
        return Ok(instance(index, format!("random d={d} seed={seed}"), None, check_polytope(cfg.identity, &p)?));
    }
    let rs = random_sum(seed, cfg.dim, cfg.max_vertices, cfg.identity == Identity::Maincor2, cfg.max_retries)?;
    let reports = check_sum(cfg.identity, rs.sum(), rs.decomposition(), &cfg.a)?;
    Ok(instance(index, format!("random d={} seed={seed}", rs.dim), Some(rs.info()), reports))
}

/// Per-instance seeds drawn in order from the batch seed.
pub fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen()).collect()
}

/// Seeded random batch. Instances run in parallel; the report keeps them in
/// index order.
pub fn verify_random(cfg: &BatchConfig) -> Result<BatchReport> {
    if matches!(cfg.identity, Identity::Fvthm | Identity::Pc) {
        return Err(PolysumError::OutOfRange(format!(
            "{} needs perfectly centered inputs; random polytopes are not",
            cfg.identity
        )));
    }
    if !(2..=64).contains(&cfg.max_vertices) {
        return Err(PolysumError::OutOfRange(format!("--vertices {} outside 2..=64", cfg.max_vertices)));
    }
    if let Some(d) = cfg.dim {
        if !(1..=4).contains(&d) || (cfg.identity.takes_sum() && d < 2) {
            return Err(PolysumError::OutOfRange(format!("dimension {d} outside the supported range")));
        }
    }
    let seeds = instance_seeds(cfg.seed, cfg.count);
    let instances = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| random_instance(cfg, i, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(BatchReport::new(cfg.identity, Some(cfg.seed), instances))
}
