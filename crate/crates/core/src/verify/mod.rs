//! Property suites: sample inputs, evaluate predicates, collect violations.

mod catalog;
pub mod hexfloat;
mod report;
mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use catalog::{PredicateInfo, SuiteCatalog, SuiteInfo};
pub use report::{Failure, VerificationReport};

use crate::descriptor::AlgebraDescriptor;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::tolerance::{Tier, Tolerances};

/// Stream index reserved for checks that run once per suite rather than
/// once per sample.
const GLOBAL_STREAM: u64 = u64::MAX;

/// Read-only inputs shared by every sample of a run.
pub(crate) struct Ctx {
    pub desc: AlgebraDescriptor,
    pub tol: Tolerances,
}

impl Ctx {
    pub fn dim(&self) -> usize {
        self.desc.dimension()
    }

    pub fn eps(&self, tier: Tier, scale: f64) -> f64 {
        self.tol.eps_tier(tier, self.dim(), scale)
    }
}

/// Accumulates predicate outcomes for one sample.
#[derive(Default)]
pub(crate) struct Probe {
    evaluated: usize,
    failures: Vec<Failure>,
    metrics: Vec<(String, f64)>,
}

impl Probe {
    fn fail(&mut self, predicate: &str, violation: f64, inputs: &[&Element]) {
        self.failures.push(Failure {
            predicate: predicate.to_string(),
            inputs: inputs.iter().map(|e| hexfloat::format_element(e)).collect(),
            violation,
        });
    }

    /// `residual ≤ bound`; the residual is also folded into the
    /// predicate's worst-case metric.
    pub fn within(&mut self, predicate: &str, residual: f64, bound: f64, inputs: &[&Element]) {
        self.evaluated += 1;
        self.metric(predicate, residual);
        if residual.is_nan() || residual > bound {
            self.fail(predicate, residual, inputs);
        }
    }

    /// `residual ≤ ε` at the given tier and operand scale.
    pub fn close(&mut self, ctx: &Ctx, predicate: &str, residual: f64, tier: Tier, scale: f64, inputs: &[&Element]) {
        self.within(predicate, residual, ctx.eps(tier, scale), inputs);
    }

    /// `value ≥ −slack`, reported as the shortfall below zero.
    pub fn nonnegative(&mut self, predicate: &str, value: f64, slack: f64, inputs: &[&Element]) {
        self.within(predicate, (-value).max(0.0), slack, inputs);
    }

    /// A yes/no predicate; violations are reported as 1.
    pub fn holds(&mut self, predicate: &str, ok: bool, inputs: &[&Element]) {
        self.evaluated += 1;
        if !ok {
            self.fail(predicate, 1.0, inputs);
        }
    }

    /// A reported-only number; the report keeps the maximum.
    pub fn metric(&mut self, name: &str, value: f64) {
        self.metrics.push((name.to_string(), value));
    }

    fn error(&mut self, err: &Error) {
        self.evaluated += 1;
        self.failures.push(Failure {
            predicate: "evaluation-error".into(),
            inputs: vec![err.to_string()],
            violation: f64::INFINITY,
        });
    }
}

pub(crate) type SampleFn = fn(&Ctx, &mut ChaCha8Rng, usize, &mut Probe) -> Result<()>;
pub(crate) type GlobalFn = fn(&Ctx, &mut ChaCha8Rng, usize, &mut Probe) -> Result<()>;

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Run one suite. Sample `k` draws from stream `k` of the seeded
/// generator, so the result does not depend on thread scheduling.
pub fn run_suite(
    name: &str,
    descriptor: &AlgebraDescriptor,
    samples: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let fns = suites::lookup(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let ctx = Ctx {
        desc: descriptor.clone(),
        tol: *tol,
    };
    let start = Instant::now();
    let mut probes: Vec<Probe> = match fns.sample {
        Some(f) => (0..samples)
            .into_par_iter()
            .map(|k| {
                let mut probe = Probe::default();
                let mut rng = rng_for(seed, k as u64);
                if let Err(e) = f(&ctx, &mut rng, k, &mut probe) {
                    probe.error(&e);
                }
                probe
            })
            .collect(),
        None => Vec::new(),
    };
    if let Some(g) = fns.global {
        let mut probe = Probe::default();
        let mut rng = rng_for(seed, GLOBAL_STREAM);
        if let Err(e) = g(&ctx, &mut rng, samples, &mut probe) {
            probe.error(&e);
        }
        probes.push(probe);
    }

    let mut failures = Vec::new();
    let mut metrics: BTreeMap<String, f64> = BTreeMap::new();
    let mut evaluated = 0;
    for p in probes {
        evaluated += p.evaluated;
        failures.extend(p.failures);
        for (k, v) in p.metrics {
            let slot = metrics.entry(k).or_insert(v);
            if v > *slot || v.is_nan() {
                *slot = v;
            }
        }
    }
    Ok(VerificationReport {
        suite: name.to_string(),
        algebra: descriptor.to_string(),
        seed,
        samples,
        pass: failures.is_empty(),
        failures,
        elapsed_s: start.elapsed().as_secs_f64(),
        metrics,
        vacuous: evaluated == 0,
    })
}

/// Every catalog suite on every descriptor, in catalog order per algebra.
pub fn run_all(descriptors: &[AlgebraDescriptor], samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    run_all_with(descriptors, samples, seed, &Tolerances::default())
}

pub fn run_all_with(
    descriptors: &[AlgebraDescriptor],
    samples: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in descriptors {
        for suite in SuiteCatalog::standard().suites() {
            out.push(run_suite(suite.name, d, samples, seed, tol)?);
        }
    }
    Ok(out)
}
