//! The full regression battery run by `verify-all`.
//!
//! Each closed-form statement is checked only where its hypotheses hold.
//! Outside them the check is either skipped or, where the brute-force answer
//! is still informative, run and reported without a verdict.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Params, StructureTensor};
use crate::biderivation::{
    biderivation_space, split_symmetric_skew, symmetric_family_lambda3_zero,
    verify_biderivation_theorem, verify_skew_lambda3_zero,
};
use crate::centroid::{
    centroid, commuting_space, is_scalar_line, quasi_centroid, verify_gamma_der_lemma,
};
use crate::derivation::{
    local_report, matches_derivation_form, standard_probes, theorem_probes, verify_ad_basis,
    verify_local_theorem, verify_two_local_theorem, Derivations,
};
use crate::error::Result;
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Computed and shown, with no claim to compare against.
    Reported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Reported => "reported",
        }
    }

    fn verdict(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Battery {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct BatteryConfig {
    pub seed: u64,
    pub two_local_trials: usize,
    pub lemma_trials: usize,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            two_local_trials: 100,
            lemma_trials: 50,
        }
    }
}

/// A group of checks attached to one CLI command; `verify-all` runs them
/// all in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section {
    Derivations,
    Local,
    TwoLocal,
    Biderivations,
    Commuting,
    QuasiCentroid,
    Centroid,
}

impl Section {
    pub const ALL: [Section; 7] = [
        Section::Derivations,
        Section::Local,
        Section::TwoLocal,
        Section::Biderivations,
        Section::Commuting,
        Section::QuasiCentroid,
        Section::Centroid,
    ];
}

struct Runner<'a> {
    sc: &'a StructureTensor,
    cfg: BatteryConfig,
    checks: Vec<Check>,
}

impl Runner<'_> {
    fn push(&mut self, name: &'static str, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            status,
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.push(name, Status::Skipped, why);
    }

    /// Asserted when `assert` holds, otherwise only reported.
    fn claim(&mut self, name: &'static str, assert: bool, ok: bool, detail: String) {
        let status = if assert {
            Status::verdict(ok)
        } else {
            Status::Reported
        };
        self.push(name, status, detail);
    }

    /// Runs `f` and turns a domain error into a failed check.
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((ok, detail)) => self.push(name, Status::verdict(ok), detail),
            Err(e) => self.push(name, Status::Fail, e.to_string()),
        }
    }
}

fn dims(s: &Subspace) -> String {
    format!("dim {}", s.dim())
}

/// Why closed forms do not apply to a table, if they do not.
fn family_or_reason(sc: &StructureTensor) -> std::result::Result<&Params, &'static str> {
    match (sc.family_params(), sc.params()) {
        (Some(p), _) => Ok(p),
        (None, Some(_)) => Err("table differs from the parameter family"),
        (None, None) => Err("no parameters"),
    }
}

/// The checks of one section. Closed forms are only asserted when the table
/// really is the parameter family and the parameters meet their hypotheses;
/// otherwise the brute-force result is reported or the check skipped.
pub fn section_checks(sc: &StructureTensor, section: Section, cfg: BatteryConfig) -> Vec<Check> {
    let mut r = Runner {
        sc,
        cfg,
        checks: Vec::new(),
    };
    let family = family_or_reason(sc);
    match section {
        Section::Derivations => derivations(&mut r, family),
        Section::Local => local(&mut r, family),
        Section::TwoLocal => two_local(&mut r, family),
        Section::Biderivations => biderivations(&mut r, family),
        Section::Commuting => commuting(&mut r, family),
        Section::QuasiCentroid => {
            let quasi = quasi_centroid(sc);
            let assert = family.is_ok_and(Params::is_nondegenerate);
            r.claim(
                "quasi-centroid is scalars",
                assert,
                is_scalar_line(&quasi, sc.dim()),
                dims(&quasi),
            );
        }
        Section::Centroid => centroid_section(&mut r, family),
    }
    r.checks
}

struct Hypotheses {
    l1l2: bool,
    l3: bool,
}

fn hypotheses(p: &Params) -> Hypotheses {
    Hypotheses {
        l1l2: !(p.l1.is_zero() || p.l2.is_zero()),
        l3: !p.l3.is_zero(),
    }
}

type Family<'a> = std::result::Result<&'a Params, &'static str>;

fn derivations(r: &mut Runner, family: Family) {
    let der = Derivations::compute(r.sc);
    let p = match family {
        Ok(p) => p,
        Err(why) => {
            r.push("derivation algebra", Status::Reported, dims(der.space()));
            r.skip("derivation matrix form", why);
            return;
        }
    };
    let h = hypotheses(p);
    if h.l1l2 {
        r.run("derivation matrix form", || {
            let mut ok = true;
            for d in der.basis() {
                ok &= matches_derivation_form(p, d)?;
            }
            if p.is_nondegenerate() {
                ok &= der.dim() == 3;
            }
            Ok((ok, format!("dim {}", der.dim())))
        });
    } else {
        r.skip("derivation matrix form", "requires l1*l2 != 0");
    }
    if h.l1l2 && h.l3 {
        r.run("ad-wedge basis of derivations", || {
            Ok((verify_ad_basis(p)?, format!("dim {}", der.dim())))
        });
    } else {
        r.skip("ad-wedge basis of derivations", lambda3_reason(&h));
    }
}

fn lambda3_reason(h: &Hypotheses) -> &'static str {
    if h.l3 {
        "requires l1*l2 != 0"
    } else {
        "requires l3 != 0"
    }
}

fn gap_detail(rep: &crate::derivation::LocalReport) -> String {
    format!(
        "probe dim {}, der dim {}, gap {}",
        rep.probe_dim,
        rep.der_dim,
        rep.gap.len()
    )
}

fn local(r: &mut Runner, family: Family) {
    match family {
        Ok(p) if hypotheses(p).l1l2 && hypotheses(p).l3 => {
            r.run("local derivations are derivations", || {
                let rep = verify_local_theorem(p)?;
                Ok((
                    rep.equal,
                    format!("probe dim {}, der dim {}", rep.probe_dim, rep.der_dim),
                ))
            });
        }
        Ok(p) => {
            let h = hypotheses(p);
            r.skip("local derivations are derivations", lambda3_reason(&h));
            if !h.l3 {
                let rep = local_report(r.sc, &theorem_probes());
                r.push(
                    "local derivation gap (l3 = 0)",
                    Status::Reported,
                    gap_detail(&rep),
                );
            }
        }
        Err(why) => {
            r.skip("local derivations are derivations", why);
            let rep = local_report(r.sc, &standard_probes(r.sc.dim()));
            r.push("probe space", Status::Reported, gap_detail(&rep));
        }
    }
}

fn two_local(r: &mut Runner, family: Family) {
    const NAME: &str = "2-local derivations are derivations";
    match family {
        Ok(p) if hypotheses(p).l1l2 && hypotheses(p).l3 => {
            let (trials, seed) = (r.cfg.two_local_trials, r.cfg.seed);
            r.run(NAME, || {
                let rep = verify_two_local_theorem(p, trials, seed)?;
                Ok((
                    rep.implication_held,
                    format!(
                        "{} trials, {} pairwise consistent, {} globally witnessed, seed {}",
                        rep.trials, rep.pairwise_ok, rep.global_ok, rep.seed
                    ),
                ))
            });
        }
        Ok(p) => r.skip(NAME, lambda3_reason(&hypotheses(p))),
        Err(why) => r.skip(NAME, why),
    }
}

fn biderivations(r: &mut Runner, family: Family) {
    const WEDGE: &str = "biderivations are wedge multiples";
    const SKEW: &str = "skew biderivations (l3 = 0)";
    const SYM: &str = "symmetric biderivation shape (l3 = 0)";
    let p = match family {
        Ok(p) => p,
        Err(why) => {
            let bder = biderivation_space(r.sc);
            let (sym, skew) = split_symmetric_skew(&bder);
            r.push(
                "biderivations",
                Status::Reported,
                format!(
                    "dim {} (symmetric {}, skew {})",
                    bder.dim(),
                    sym.dim(),
                    skew.dim()
                ),
            );
            for name in [WEDGE, SKEW, SYM] {
                r.skip(name, why);
            }
            return;
        }
    };
    let h = hypotheses(p);
    if h.l1l2 && h.l3 {
        r.run(WEDGE, || {
            let rep = verify_biderivation_theorem(p)?;
            Ok((rep.generator_matches_wedge, format!("dim {}", rep.dim)))
        });
    } else {
        r.skip(WEDGE, lambda3_reason(&h));
    }
    if h.l1l2 && !h.l3 {
        r.run(SKEW, || {
            let rep = verify_skew_lambda3_zero(p)?;
            Ok((rep.family_matches, format!("skew dim {}", rep.skew_dim)))
        });
        r.run(SYM, || {
            let rep = symmetric_family_lambda3_zero(p)?;
            Ok((rep.pattern_ok, format!("symmetric dim {}", rep.dim)))
        });
    } else {
        let why = if h.l3 {
            "requires l3 = 0"
        } else {
            "requires l1*l2 != 0"
        };
        r.skip(SKEW, why);
        r.skip(SYM, why);
    }
}

fn commuting(r: &mut Runner, family: Family) {
    let comm = commuting_space(r.sc);
    let assert = family.is_ok_and(Params::is_nondegenerate);
    r.claim(
        "commuting map form",
        assert,
        comm.pattern_ok && comm.dim == 5,
        format!("dim {}, pattern {}", comm.dim, comm.pattern_ok),
    );
}

fn centroid_section(r: &mut Runner, family: Family) {
    let sc = r.sc;
    let assert = family.is_ok_and(Params::is_nondegenerate);
    let center = sc.center();
    let e0_line = Subspace::span(sc.dim(), [sc.basis(0).into_coords()]);
    r.claim(
        "center is the scalar line",
        assert,
        center == e0_line,
        dims(&center),
    );
    let cent = centroid(sc);
    r.claim(
        "centroid is scalars",
        assert,
        is_scalar_line(&cent, sc.dim()),
        dims(&cent),
    );
    let (trials, seed) = (r.cfg.lemma_trials, r.cfg.seed);
    r.push(
        "centroid-derivation lemma",
        Status::verdict(verify_gamma_der_lemma(sc, trials, seed)),
        format!("{trials} trials, seed {seed}"),
    );
}

pub fn verify_all(sc: &StructureTensor, cfg: BatteryConfig) -> Battery {
    let mut checks = vec![Check {
        name: "associativity and identity",
        status: Status::verdict(sc.is_associative() && sc.has_unit_e0()),
        detail: format!(
            "associative: {}, e0 two-sided identity: {}",
            sc.is_associative(),
            sc.has_unit_e0()
        ),
    }];
    for section in Section::ALL {
        checks.extend(section_checks(sc, section, cfg));
    }
    Battery {
        params: sc.params().cloned(),
        seed: cfg.seed,
        all_passed: all_passed(&checks),
        checks,
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}
