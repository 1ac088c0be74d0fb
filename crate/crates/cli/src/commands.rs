use quatalg::battery::all_passed;
use quatalg::biderivation::tagged_basis;
use quatalg::derivation::local_report;
use quatalg::{
    biderivation_space, centroid_report, commuting_space, make_3pgq, quasi_centroid,
    section_checks, split_symmetric_skew, standard_probes, verify_all, verify_two_local_theorem,
    BatteryConfig, Check, Derivations, LinearMap, Params, Section, StructureTensor, Subspace,
    TaggedTensor, TwoLocalReport,
};
use serde::Serialize;
use serde_json::Value;

use crate::args::{Command, RunConfig, Source};

pub const DEFAULT_TWO_LOCAL_TRIALS: usize = 100;
pub const DEFAULT_LEMMA_TRIALS: usize = 50;

/// A rendered-independent command result.
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

impl Outcome {
    fn new(report: impl Serialize, checks: &[Check]) -> Self {
        Outcome {
            report: serde_json::to_value(report).expect("reports serialize"),
            passed: all_passed(checks),
        }
    }
}

/// Loads the algebra named by the config; errors are input errors.
pub fn load(source: &Source) -> Result<StructureTensor, String> {
    match source {
        Source::Params(p) => Ok(make_3pgq(p)),
        Source::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            StructureTensor::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}

fn maps(space: &Subspace, n: usize) -> Vec<LinearMap> {
    space
        .basis()
        .iter()
        .map(|v| LinearMap::from_flat(n, v))
        .collect()
}

#[derive(Serialize)]
struct DerivationsOut<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<&'a Params>,
    der_dim: usize,
    basis: &'a [LinearMap],
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct LocalOut {
    #[serde(flatten)]
    report: quatalg::LocalReport,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct TwoLocalOut {
    #[serde(flatten)]
    report: Option<TwoLocalReport>,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct BiderivationsOut<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<&'a Params>,
    dim: usize,
    symmetric_dim: usize,
    skew_dim: usize,
    basis: Vec<TaggedTensor>,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct CommutingOut<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<&'a Params>,
    commuting_dim: usize,
    pattern_ok: bool,
    basis: Vec<LinearMap>,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct CentroidOut {
    #[serde(flatten)]
    report: quatalg::CentroidReport,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct QuasiCentroidOut<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<&'a Params>,
    quasi_centroid_dim: usize,
    basis: Vec<LinearMap>,
    checks: Vec<Check>,
}

pub fn run(cfg: &RunConfig, sc: &StructureTensor) -> Outcome {
    let battery = BatteryConfig {
        seed: cfg.seed,
        two_local_trials: cfg.trials.unwrap_or(DEFAULT_TWO_LOCAL_TRIALS),
        lemma_trials: cfg.trials.unwrap_or(DEFAULT_LEMMA_TRIALS),
    };
    let checks = |section| section_checks(sc, section, battery);
    let params = sc.params();
    let n = sc.dim();
    match cfg.command {
        Command::Table => Outcome::new(sc.to_json(), &[]),
        Command::Derivations => {
            let der = Derivations::compute(sc);
            let checks = checks(Section::Derivations);
            let out = DerivationsOut {
                params,
                der_dim: der.dim(),
                basis: der.basis(),
                checks,
            };
            Outcome::new(&out, &out.checks)
        }
        Command::Local => {
            let out = LocalOut {
                report: local_report(sc, &standard_probes(n)),
                checks: checks(Section::Local),
            };
            Outcome::new(&out, &out.checks)
        }
        Command::TwoLocal => {
            let checks = checks(Section::TwoLocal);
            // the report is only meaningful where the verifier applies
            let report = sc.family_params().and_then(|p| {
                verify_two_local_theorem(p, battery.two_local_trials, battery.seed).ok()
            });
            let out = TwoLocalOut { report, checks };
            Outcome::new(&out, &out.checks)
        }
        Command::Biderivations => {
            let space = biderivation_space(sc);
            let (sym, skew) = split_symmetric_skew(&space);
            let out = BiderivationsOut {
                params,
                dim: space.dim(),
                symmetric_dim: sym.dim(),
                skew_dim: skew.dim(),
                basis: tagged_basis(&space),
                checks: checks(Section::Biderivations),
            };
            Outcome::new(&out, &out.checks)
        }
        Command::Commuting => {
            let report = commuting_space(sc);
            let out = CommutingOut {
                params,
                commuting_dim: report.dim,
                pattern_ok: report.pattern_ok,
                basis: maps(&report.space, n),
                checks: checks(Section::Commuting),
            };
            Outcome::new(&out, &out.checks)
        }
        Command::Centroid => {
            let mut all = checks(Section::Commuting);
            all.extend(checks(Section::QuasiCentroid));
            all.extend(checks(Section::Centroid));
            let out = CentroidOut {
                report: centroid_report(sc, battery.lemma_trials, battery.seed),
                checks: all,
            };
            Outcome::new(&out, &out.checks)
        }
        Command::QuasiCentroid => {
            let space = quasi_centroid(sc);
            let out = QuasiCentroidOut {
                params,
                quasi_centroid_dim: space.dim(),
                basis: maps(&space, n),
                checks: checks(Section::QuasiCentroid),
            };
            Outcome::new(&out, &out.checks)
        }
        Command::VerifyAll => {
            let b = verify_all(sc, battery);
            Outcome::new(&b, &b.checks)
        }
    }
}
