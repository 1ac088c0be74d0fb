//! Acceptance criteria, run as a plain binary so every criterion prints its
//! PASS/FAIL line on each `cargo test` run.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use quatalg::biderivation::skew_families_lambda3_zero;
use quatalg::centroid::{centroid, is_scalar_line, matches_commuting_pattern, quasi_centroid};
use quatalg::derivation::{local_report, matches_derivation_form};
use quatalg::{
    ad_wedge, biderivation_space, commuting_space, derivation_space, local_probe_space, make_3pgq,
    rational, split_symmetric_skew, theorem_probes, verify_gamma_der_lemma,
    verify_two_local_theorem, wedge_tensor, Element, LinearMap, Params, Subspace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn nonzero_l3_triples() -> Vec<Params> {
    vec![
        Params::from_ints(1, 1, 1),
        Params::from_ints(1, 1, -1),
        Params::from_ints(2, 3, 5),
    ]
}

fn zero_l3_triples() -> Vec<Params> {
    vec![
        Params::from_ints(1, 1, 0),
        Params::from_ints(1, -1, 0),
        Params::from_ints(2, 3, 0),
    ]
}

fn basis_maps(s: &Subspace) -> Vec<LinearMap> {
    s.basis()
        .iter()
        .map(|v| LinearMap::from_flat(4, v))
        .collect()
}

fn associativity_and_identity() -> Outcome {
    for (name, p) in Params::special_cases() {
        let sc = make_3pgq(&p);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let (ei, ej, ek) = (sc.basis(i), sc.basis(j), sc.basis(k));
                    let left = sc.multiply(&sc.multiply(&ei, &ej), &ek);
                    let right = sc.multiply(&ei, &sc.multiply(&ej, &ek));
                    ensure!(
                        left == right,
                        "{name} {p}: (e{i}e{j})e{k} != e{i}(e{j}e{k})"
                    );
                }
            }
            let (e0, ei) = (sc.basis(0), sc.basis(i));
            ensure!(
                sc.multiply(&e0, &ei) == ei && sc.multiply(&ei, &e0) == ei,
                "{name} {p}: e0 not an identity at e{i}"
            );
        }
    }
    Ok("5 special cases, 64 triples each".into())
}

fn derivation_form(p: &Params) -> Result<(), String> {
    let der = derivation_space(&make_3pgq(p));
    ensure!(der.dim() == 3, "{p}: dim Der = {}", der.dim());
    for d in basis_maps(&der) {
        ensure!(
            matches_derivation_form(p, &d).map_err(|e| e.to_string())?,
            "{p}: basis map off the pattern"
        );
        ensure!(
            d.entry(2, 2).is_zero(),
            "{p}: diagonal parameter is nonzero"
        );
    }
    Ok(())
}

fn derivation_matrices() -> Outcome {
    for p in nonzero_l3_triples() {
        derivation_form(&p)?;
    }
    Ok("dim 3 and pattern with d = 0 at (1,1,1), (1,1,-1), (2,3,5)".into())
}

fn ad_wedge_span(p: &Params) -> Result<(), String> {
    let der = derivation_space(&make_3pgq(p));
    let ads = (1..4)
        .map(|i| ad_wedge(p, &Element::basis(4, i)).map(|m| m.flatten()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    ensure!(
        Subspace::span(16, ads) == der,
        "{p}: ad-wedge span differs from Der"
    );
    Ok(())
}

fn ad_wedge_basis() -> Outcome {
    for p in nonzero_l3_triples() {
        ad_wedge_span(&p)?;
    }
    Ok("span of ad-wedge maps equals Der at all three triples".into())
}

fn local_derivations() -> Outcome {
    for p in nonzero_l3_triples() {
        let sc = make_3pgq(&p);
        let probe = local_probe_space(&sc, &theorem_probes());
        ensure!(
            probe == derivation_space(&sc),
            "{p}: probe space has dim {}",
            probe.dim()
        );
    }
    let semi = local_report(&make_3pgq(&Params::from_ints(1, 1, 0)), &theorem_probes());
    let relation = if semi.equal {
        "equals"
    } else {
        "strictly contains"
    };
    Ok(format!(
        "probe space equals Der at all three triples; reported at (1,1,0): probe space (dim {}) {relation} Der (dim {})",
        semi.probe_dim, semi.der_dim
    ))
}

fn two_local_derivations() -> Outcome {
    let mut details = Vec::new();
    for p in [Params::from_ints(1, 1, 1), Params::from_ints(2, 3, 5)] {
        let rep = verify_two_local_theorem(&p, 100, 0).map_err(|e| e.to_string())?;
        ensure!(rep.trials == 100 && rep.seed == 0, "{p}: wrong run shape");
        ensure!(
            rep.implication_held && rep.global_ok == rep.pairwise_ok,
            "{p}: {} of {} pairwise-consistent trials globally witnessed",
            rep.global_ok,
            rep.pairwise_ok
        );
        details.push(format!(
            "{p}: {}/{} pairwise-consistent trials witnessed",
            rep.global_ok, rep.pairwise_ok
        ));
    }
    Ok(format!(
        "100/100 trials upheld the implication; {}",
        details.join(", ")
    ))
}

fn wedge_line(p: &Params) -> Result<(), String> {
    let bder = biderivation_space(&make_3pgq(p));
    ensure!(bder.dim() == 1, "{p}: dim BDer = {}", bder.dim());
    let wedge = wedge_tensor(p).map_err(|e| e.to_string())?.flatten();
    ensure!(
        bder.contains(&wedge),
        "{p}: generator is not a multiple of the wedge"
    );
    Ok(())
}

fn biderivations_nonzero_l3() -> Outcome {
    for p in nonzero_l3_triples() {
        wedge_line(&p)?;
    }
    Ok("dim 1, spanned by the wedge at all three triples".into())
}

fn skew_biderivations_zero_l3() -> Outcome {
    for p in zero_l3_triples() {
        let (_, skew) = split_symmetric_skew(&biderivation_space(&make_3pgq(&p)));
        ensure!(skew.dim() == 2, "{p}: skew dim {}", skew.dim());
        let families = skew_families_lambda3_zero(&p).map_err(|e| e.to_string())?;
        let span = Subspace::span(64, families.map(|t| t.flatten()));
        ensure!(
            span == skew,
            "{p}: skew part differs from the determinant families"
        );
    }
    Ok("skew dim 2, equal to the two determinant families at (1,1,0), (1,-1,0), (2,3,0)".into())
}

fn commuting_maps() -> Outcome {
    for p in nonzero_l3_triples() {
        let rep = commuting_space(&make_3pgq(&p));
        for m in basis_maps(&rep.space) {
            ensure!(
                matches_commuting_pattern(&m),
                "{p}: basis map off the pattern"
            );
        }
        ensure!(rep.dim == 5, "{p}: dim {}", rep.dim);
    }
    Ok("pattern holds and dim 5 at all three triples".into())
}

fn scalar_centroids(p: &Params) -> Result<(), String> {
    let sc = make_3pgq(p);
    let quasi = quasi_centroid(&sc);
    let cent = centroid(&sc);
    ensure!(
        is_scalar_line(&quasi, 4),
        "{p}: quasi-centroid has dim {}",
        quasi.dim()
    );
    ensure!(
        is_scalar_line(&cent, 4),
        "{p}: centroid has dim {}",
        cent.dim()
    );
    Ok(())
}

fn centroids() -> Outcome {
    for p in nonzero_l3_triples() {
        scalar_centroids(&p)?;
    }
    Ok("quasi-centroid and centroid are the scalar line at all three triples".into())
}

fn centroid_derivation_lemma() -> Outcome {
    for p in nonzero_l3_triples() {
        ensure!(
            verify_gamma_der_lemma(&make_3pgq(&p), 50, 0),
            "{p}: a trial failed"
        );
    }
    Ok("50/50 trials at all three triples".into())
}

fn random_rational(rng: &mut ChaCha8Rng) -> quatalg::Rational {
    let num = loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    rational::frac(num, rng.gen_range(1..=5))
}

fn sweep() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..25 {
        let p = Params::new(
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        derivation_form(&p)?;
        ad_wedge_span(&p)?;
        wedge_line(&p)?;
        scalar_centroids(&p)?;
    }
    let elapsed = started.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:.2?}");
    Ok(format!("25 triples, seed 0, {elapsed:.2?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "associativity and identity of the special cases",
            associativity_and_identity,
        ),
        ("derivation dimension and matrix form", derivation_matrices),
        ("ad-wedge maps form a basis of Der", ad_wedge_basis),
        ("local derivations", local_derivations),
        ("2-local derivations", two_local_derivations),
        ("biderivations for l3 != 0", biderivations_nonzero_l3),
        ("skew biderivations for l3 = 0", skew_biderivations_zero_l3),
        ("commuting maps", commuting_maps),
        ("quasi-centroid and centroid", centroids),
        ("centroid-derivation lemma", centroid_derivation_lemma),
        (
            "closed form against brute force on random parameters",
            sweep,
        ),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
