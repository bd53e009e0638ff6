//! Acceptance criteria. Runs without the libtest harness so every criterion prints exactly one
//! PASS/FAIL line; the process exits nonzero if any criterion fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use multalg_core::grassmann::{gaussian_binomial, grassmann_presentation};
use multalg_core::groebner::{buchberger_with, ideal_equal, inequality_witness, intersection_with_basis};
use multalg_core::jets::{apply_substitution, jet_presentation};
use multalg_core::multiplicity::{equivariant_multiplicity, hitchin_base_weights, verify_structure_theorem};
use multalg_core::verify::{corrupted_d3_fixture, d3_fixture, random_complete_intersection, run_all, RandomCiBounds, SuiteOptions};
use multalg_core::weights::{dominance_leq, is_minuscule, lower_set, weyl_orbit_size};
use multalg_core::{
    parse_polynomial, DominantWeight, GroebnerBasis, GroebnerConfig, Ideal, IntPoly, Monomial, MonomialOrder,
    Polynomial, PresentedRing, Provenance, Rational, VarList, WeightMultiset, WeightedGrading,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, Duration, Box<dyn FnOnce(&mut Produced) -> Outcome>);

/// Bases produced while checking criteria 1-4, re-certified by criterion 9.
#[derive(Default)]
struct Produced {
    bases: Vec<(String, GroebnerBasis)>,
}

fn cfg() -> GroebnerConfig {
    GroebnerConfig::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of the Gaussian binomial by counting k-subsets of {0..n-1} by
/// `sum(element) - k(k-1)/2`, independent of any polynomial division.
fn subset_oracle(n: u32, k: u32) -> IntPoly {
    let mut counts = vec![0i64; (k * (n - k) + 1) as usize];
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == k {
            let s: u32 = (0..n).filter(|b| mask & (1 << b) != 0).sum();
            counts[(s - k * (k.saturating_sub(1)) / 2) as usize] += 1;
        }
    }
    IntPoly::from_i64(&counts)
}

fn a_squared() -> PresentedRing {
    let v = VarList::new(&["a"]).unwrap();
    PresentedRing::new(v.clone(), WeightedGrading::standard(1), vec![parse_polynomial("a^2", &v).unwrap()], Provenance::Custom)
        .unwrap()
}

fn ideal(v: &VarList, gens: &[&str]) -> Ideal {
    Ideal::new(v, gens.iter().map(|g| parse_polynomial(g, v).unwrap())).unwrap()
}

fn basis(p: &mut Produced, label: impl Into<String>, i: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, String> {
    let gb = buchberger_with(i, order, &cfg()).map_err(e2s)?;
    p.bases.push((label.into(), gb.clone()));
    Ok(gb)
}

fn criterion_1(p: &mut Produced) -> Outcome {
    let base = a_squared();
    let expected: [&[&str]; 3] = [&["a0^2"], &["a0^2", "a0*a1"], &["a0^2", "a0*a1", "a0*a2 + a1^2"]];
    for d in 1..=3 {
        let j = jet_presentation(&base, d).map_err(e2s)?;
        let v = j.ring().vars().clone();
        let jet_ideal = j.ring().ideal();
        let target = ideal(&v, expected[d - 1]);
        let compared = if d == 3 {
            let up: HashMap<String, Polynomial> = [("a2".into(), parse_polynomial("2*a2", &v).unwrap())].into();
            apply_substitution(&target, &up).map_err(e2s)?
        } else {
            target
        };
        let order = jet_ideal.default_order();
        let lhs = basis(p, format!("J_{d}"), &jet_ideal, &order)?;
        let rhs = basis(p, format!("target d={d}"), &compared, &order)?;
        ensure(lhs == rhs, || format!("d={d}: reduced bases differ"))?;
    }
    Ok("orders 1, 2, 3 match; order 3 after a2 -> 2*a2".into())
}

fn criterion_2(p: &mut Produced) -> Outcome {
    let v = VarList::new(&["a0", "a1"]).unwrap();
    let m = ideal(&v, &["a0", "a1"]);
    let (cap, elim) = intersection_with_basis(&m.product(&m).map_err(e2s)?, &ideal(&v, &["a0"]), &cfg()).map_err(e2s)?;
    p.bases.push(("elimination basis".into(), elim));
    let want = ideal(&v, &["a0^2", "a0*a1"]);
    ensure(ideal_equal(&cap, &want, &cfg()).map_err(e2s)?, || "intersection differs".into())?;
    basis(p, "(a0^2, a0*a1)", &want, &want.default_order())?;
    Ok("(a0,a1)^2 ∩ (a0) = (a0^2, a0*a1)".into())
}

fn criterion_3(p: &mut Produced) -> Outcome {
    let mut count = 0;
    for n in 2..=6u32 {
        for k in 1..n {
            let ring = grassmann_presentation(n, k).map_err(e2s)?;
            let ideal = ring.ideal();
            let gb = basis(p, format!("Gr({k},{n})"), &ideal, &ideal.default_order())?;
            let hs = gb.hilbert_series(ring.grading()).map_err(e2s)?;
            let oracle = subset_oracle(n, k);
            ensure(gaussian_binomial(n, k).map_err(e2s)? == oracle, || format!("[{n} {k}] differs from subset count"))?;
            ensure(hs.as_polynomial() == Some(&oracle), || format!("Gr({k},{n}): series {hs}"))?;
            ensure(oracle.eval_at_one() == binomial(n as u64, k as u64).into(), || format!("Gr({k},{n}) at t=1"))?;
            count += 1;
        }
    }
    Ok(format!("{count} presentations, n = 2..6"))
}

fn criterion_4(p: &mut Produced) -> Outcome {
    let mut maps = Vec::new();
    for n in 2..=6u32 {
        for k in 1..n {
            maps.push((format!("Gr({k},{n})"), grassmann_presentation(n, k).map_err(e2s)?.to_map().map_err(e2s)?));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..20 {
        maps.push((format!("random CI {i}"), random_complete_intersection(&mut rng, &RandomCiBounds::default())));
    }
    let mut largest = 0;
    for (label, map) in &maps {
        ensure(map.vars().len() <= 6, || format!("{label}: too many variables"))?;
        let r = verify_structure_theorem(map).map_err(e2s)?;
        ensure(r.all_passed(), || format!("{label}: failed {:?}", r.failed_clauses()))?;
        ensure(r.socle_degrees == Some(vec![map.jacobian_degree() as u64]), || format!("{label}: socle degree"))?;
        // Independent recomputation of the right-hand side from the stated degrees.
        let domain = WeightMultiset::new(map.grading().weights().to_vec()).unwrap();
        let codomain = WeightMultiset::new(map.codomain_degrees().iter().map(|&d| d as u32).collect()).unwrap();
        let m = equivariant_multiplicity(&domain, &codomain);
        ensure(r.poincare_polynomial.as_deref() == Some(m.to_string().as_str()), || format!("{label}: m(t) = {m}"))?;
        let ideal = Ideal::new(map.vars(), map.components().iter().cloned()).unwrap();
        basis(p, label.clone(), &ideal, &MonomialOrder::WeightedGrevlex(map.grading().clone()))?;
        largest = largest.max(r.dimension.unwrap_or(0));
    }
    Ok(format!("{} maps (15 Grassmannians, 20 random), largest algebra dimension {largest}", maps.len()))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in 1..=8u32 {
        for k in 0..=n {
            let domain: Vec<u32> = (1..=k).chain(1..=n - k).collect();
            let m = equivariant_multiplicity(&WeightMultiset::new(domain).unwrap(), &WeightMultiset::new((1..=n).collect()).unwrap());
            ensure(m.as_polynomial() == Some(&subset_oracle(n, k)), || format!("n={n} k={k}: {m}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (n, k) pairs, n <= 8"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for n in 1..=8usize {
        for k in 1..n {
            for d in 0..=5i64 {
                let mu = DominantWeight::fundamental(n, k).unwrap().scaled(d + 1).unwrap();
                ensure(weyl_orbit_size(&mu) == BigUint::from(binomial(n as u64, k as u64)), || format!("{mu}"))?;
                count += 1;
            }
        }
    }
    let gl2 = weyl_orbit_size(&DominantWeight::new(vec![3, 0]).unwrap());
    ensure(gl2 == BigUint::from(2u32), || format!("GL_2 orbit {gl2}"))?;
    Ok(format!("{count} weights; GL_2 orbit size 2"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let draw = |rng: &mut ChaCha8Rng, n: usize, total: i64| {
        let mut v: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-3..=4)).collect();
        v.push(total - v.iter().sum::<i64>());
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    };
    let (mut comparable, mut transitive_chains) = (0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let total = rng.gen_range(-3..=6);
        let (a, b, c) = (draw(&mut rng, n, total), draw(&mut rng, n, total), draw(&mut rng, n, total));
        ensure(dominance_leq(&a, &a).unwrap(), || format!("{a} not reflexive"))?;
        let (ab, ba) = (dominance_leq(&a, &b).unwrap(), dominance_leq(&b, &a).unwrap());
        if ab || ba {
            comparable += 1;
        }
        ensure(!(ab && ba) || a == b, || format!("{a}, {b} violate antisymmetry"))?;
        if ab && dominance_leq(&b, &c).unwrap() {
            transitive_chains += 1;
            ensure(dominance_leq(&a, &c).unwrap(), || format!("{a} <= {b} <= {c} not transitive"))?;
        }
        let set = lower_set(&a);
        for lambda in &set {
            for nu in lower_set(lambda) {
                ensure(set.contains(&nu), || format!("lower set of {a} not closed at {nu}"))?;
            }
        }
    }
    for d in 0..=10i64 {
        let len = lower_set(&DominantWeight::new(vec![d + 1, 0]).unwrap()).len() as i64;
        ensure(len == (d + 1) / 2 + 1, || format!("GL_2 d={d}: {len} strata"))?;
    }
    for n in 1..=8 {
        for k in 0..=n {
            let omega = DominantWeight::fundamental(n, k).unwrap();
            ensure(lower_set(&omega) == vec![omega.clone()] && is_minuscule(&omega), || format!("omega_{k} in GL_{n}"))?;
        }
    }
    Ok(format!("500 triples ({comparable} comparable pairs, {transitive_chains} chains); GL_2 counts d <= 10; minuscule singletons"))
}

fn criterion_8() -> Outcome {
    for n in 1..=6u32 {
        for g in 2..=5u32 {
            let w = hitchin_base_weights(n, g).map_err(e2s)?;
            ensure(w.len() as u32 == n * n * (g - 1) + 1, || format!("n={n} g={g}: {}", w.len()))?;
            // Independent count: sum over i of dim H^0(K^i) = (2i - 1)(g - 1) for i >= 2, g for i = 1.
            let total: u32 = g + (2..=n).map(|i| (2 * i - 1) * (g - 1)).sum::<u32>();
            ensure(w.len() as u32 == total, || format!("n={n} g={g}: breakdown"))?;
        }
    }
    Ok("n = 1..6, g = 2..5".into())
}

fn criterion_9(p: &Produced) -> Outcome {
    for (label, gb) in &p.bases {
        gb.certify().map_err(|e| format!("{label}: {e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let targets: Vec<&GroebnerBasis> =
        p.bases.iter().filter(|(l, _)| l == "Gr(2,4)" || l == "J_3" || l == "Gr(3,6)").map(|(_, g)| g).collect();
    ensure(targets.len() >= 3, || "missing target bases".into())?;
    let random_poly = |rng: &mut ChaCha8Rng, v: &VarList| {
        let terms: Vec<(Monomial, Rational)> = (0..rng.gen_range(0..=6))
            .map(|_| {
                let e = (0..v.len()).map(|_| rng.gen_range(0..=3)).collect();
                (Monomial::new(e), Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()))
            })
            .collect();
        Polynomial::from_terms(v, terms)
    };
    for i in 0..200 {
        let gb = targets[i % targets.len()];
        let v = gb.vars().clone();
        let (f, g) = (random_poly(&mut rng, &v), random_poly(&mut rng, &v));
        let c = Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
        let (nf, ng) = (gb.normal_form(&f).map_err(e2s)?, gb.normal_form(&g).map_err(e2s)?);
        ensure(gb.normal_form(&nf).map_err(e2s)? == nf, || format!("input {i}: not idempotent"))?;
        let lms = gb.leading_monomials();
        ensure(nf.terms().iter().all(|(m, _)| !lms.iter().any(|l| l.divides(m))), || format!("input {i}: reducible remainder"))?;
        let combo = &f + &g.scale(&c);
        ensure(gb.normal_form(&combo).map_err(e2s)? == &nf + &ng.scale(&c), || format!("input {i}: not linear"))?;
    }
    Ok(format!("{} bases certified; 200 normal-form inputs", p.bases.len()))
}

fn criterion_10() -> Outcome {
    let base = a_squared();
    let j = jet_presentation(&base, 3).map_err(e2s)?;
    let v = j.ring().vars().clone();
    let up: HashMap<String, Polynomial> = [("a2".into(), parse_polynomial("2*a2", &v).unwrap())].into();
    let rescale = |i: Ideal| apply_substitution(&i, &up).unwrap();
    ensure(inequality_witness(&rescale(d3_fixture()), &j.ring().ideal(), &cfg()).map_err(e2s)?.is_none(), || {
        "clean fixture rejected".into()
    })?;
    let (witness, nf) = inequality_witness(&rescale(corrupted_d3_fixture()), &j.ring().ideal(), &cfg())
        .map_err(e2s)?
        .ok_or("corrupted fixture accepted")?;
    ensure(!nf.is_zero(), || "zero witness".into())?;
    let summary = run_all(&SuiteOptions { inject_corruption: true, ..SuiteOptions::default() });
    ensure(summary.exit_code() != 0, || "suite exit code is zero under corruption".into())?;
    let clean = run_all(&SuiteOptions::default());
    ensure(clean.exit_code() == 0, || format!("clean suite fails: {:?}", clean.failures().map(|c| &c.name).collect::<Vec<_>>()))?;
    Ok(format!("witness `{witness}` -> `{nf}`; suite exit code {} ({} failure)", summary.exit_code(), summary.failed))
}

fn main() -> ExitCode {
    let mut produced = Produced::default();
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        (1, "jet presentations of C[a]/(a^2), orders 1-3", secs(1), Box::new(criterion_1)),
        (2, "embedded-point intersection identity", secs(1), Box::new(criterion_2)),
        (3, "Grassmannian Hilbert series equal Gaussian binomials", secs(60), Box::new(criterion_3)),
        (4, "structure theorem on Grassmannians and random complete intersections", secs(120), Box::new(criterion_4)),
        (5, "equivariant multiplicity closed form", secs(1), Box::new(|_| criterion_5())),
        (6, "Weyl orbit sizes of multiples of fundamental weights", secs(1), Box::new(|_| criterion_6())),
        (7, "dominance order axioms, lower sets, minuscule weights", secs(5), Box::new(|_| criterion_7())),
        (8, "Hitchin base weight cardinality", secs(1), Box::new(|_| criterion_8())),
        (9, "Groebner certification and normal-form properties", secs(60), Box::new(|p| criterion_9(p))),
        (10, "negative control", secs(60), Box::new(|_| criterion_10())),
    ];
    let mut failed = 0;
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut produced);
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|d| {
            if elapsed < budget {
                Ok(d)
            } else {
                Err(format!("{d}; over the {budget:?} budget"))
            }
        });
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {id:>2} {status} {title} [{:.3} s < {} s] {detail}", elapsed.as_secs_f64(), budget.as_secs());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
