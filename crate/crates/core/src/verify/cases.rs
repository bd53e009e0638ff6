use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::closure::{closure_vs_grassmann_dimensions, NO_FORMULA};
use super::random::{random_complete_intersection, RandomCiBounds};
use super::{CheckCase, Checks, Evidence, SuiteOptions};
use crate::error::Result;
use crate::grassmann::{gaussian_binomial, grassmann_multiplicity, grassmann_presentation, product_hilbert, DivisorData};
use crate::groebner::{
    buchberger_with, ideal_equal, ideal_intersection, inequality_witness, GroebnerConfig, Ideal, MonomialOrder,
};
use crate::jets::{apply_substitution, jet_invariants, jet_presentation};
use crate::multiplicity::{
    build_quotient_with, equivariant_multiplicity, hitchin_base_weights, verify_structure_theorem_with, QuotientError,
    WeightMultiset,
};
use crate::poly::{parse_polynomial, Polynomial, PolynomialMap, VarList, WeightedGrading};
use crate::presented::{PresentedRing, Provenance};
use crate::series::{IntPoly, RationalSeries};
use crate::weights::{
    dominance_leq, fundamental_decomposition, is_minuscule, lower_set, weyl_orbit_size, DominantWeight,
};

use Evidence::{Derived, Reference, Trivial};

fn vars(names: &[&str]) -> VarList {
    VarList::new(names).expect("valid fixture names")
}

fn ideal(v: &VarList, gens: &[&str]) -> Result<Ideal> {
    let polys = gens.iter().map(|g| parse_polynomial(g, v)).collect::<Result<Vec<_>>>()?;
    Ideal::new(v, polys)
}

fn a_squared() -> PresentedRing {
    let v = vars(&["a"]);
    let rel = parse_polynomial("a^2", &v).expect("fixture parses");
    PresentedRing::new(v, WeightedGrading::standard(1), vec![rel], Provenance::Custom).expect("homogeneous")
}

/// `(a0^2, a0*a1, a0*a2 + a1^2)` over `a0, a1, a2`.
pub fn d3_fixture() -> Ideal {
    ideal(&vars(&["a0", "a1", "a2"]), &["a0^2", "a0*a1", "a0*a2 + a1^2"]).expect("fixture parses")
}

/// [`d3_fixture`] with the sign of `a1^2` flipped.
pub fn corrupted_d3_fixture() -> Ideal {
    ideal(&vars(&["a0", "a1", "a2"]), &["a0^2", "a0*a1", "a0*a2 - a1^2"]).expect("fixture parses")
}

/// `(a0, a1)^2 ∩ (a0) = (a0^2, a0*a1)`, with the intersection computed by elimination.
pub fn embedded_point_check(config: &GroebnerConfig) -> Result<bool> {
    let v = vars(&["a0", "a1"]);
    let m = ideal(&v, &["a0", "a1"])?;
    let lhs = ideal_intersection(&m.product(&m)?, &ideal(&v, &["a0"])?, config)?;
    ideal_equal(&lhs, &ideal(&v, &["a0^2", "a0*a1"])?, config)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ws(v: &[u32]) -> WeightMultiset {
    WeightMultiset::new(v.to_vec()).expect("positive weights")
}

fn dw(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).expect("dominant fixture")
}

/// Compares `got` with `want` and, on mismatch, names a generator that fails to reduce.
fn ideal_check(c: &mut Checks, label: &str, got: &Ideal, want: &Ideal, config: &GroebnerConfig) -> Result<()> {
    match inequality_witness(got, want, config)? {
        None => {
            c.that(label, true);
        }
        Some((generator, nf)) => {
            c.that(format!("{label}: `{generator}` has nonzero normal form `{nf}`"), false);
        }
    }
    Ok(())
}

fn certify(c: &mut Checks, label: &str, ideal: &Ideal, config: &GroebnerConfig) -> Result<()> {
    let gb = buchberger_with(ideal, &ideal.default_order(), config)?;
    if let Err(e) = gb.certify() {
        c.that(format!("{label}: {e}"), false);
    } else {
        c.that(label, true);
    }
    Ok(())
}

/// Every clause of the structure theorem plus the expected socle degree and dimension.
fn structure_checks(c: &mut Checks, map: &PolynomialMap, config: &GroebnerConfig) -> Result<()> {
    let r = verify_structure_theorem_with(map, config)?;
    for clause in r.failed_clauses() {
        c.that(format!("clause {clause}"), false);
    }
    c.eq("socle degrees", r.socle_degrees.clone(), Some(vec![map.jacobian_degree() as u64]));
    c.eq("dimension vs m(1)", r.dimension.map(|d| d as i64), r.m_at_one);
    Ok(())
}

pub fn catalogue(opts: &SuiteOptions) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    jets(&mut cases, opts);
    embedded_point(&mut cases);
    grassmann(&mut cases);
    structure(&mut cases, opts);
    equivariant(&mut cases);
    weights(&mut cases, opts);
    closure(&mut cases);
    groebner(&mut cases);
    negative_control(&mut cases);
    cases
}

fn jets(cases: &mut Vec<CheckCase>, opts: &SuiteOptions) {
    cases.push(CheckCase::new("jet/order-1", "jet-order-1", Reference, |o| {
        let j = jet_presentation(&a_squared(), 1)?;
        let mut c = Checks::default();
        ideal_check(&mut c, "J_1 = (a0^2)", &j.ring().ideal(), &ideal(j.ring().vars(), &["a0^2"])?, &o.config)?;
        let inv = jet_invariants(&j, &o.config)?;
        c.eq("finite", inv.finite, true).eq("dimension", inv.dimension, Some(2));
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("jet/order-2", "jet-order-2", Reference, |o| {
        let j = jet_presentation(&a_squared(), 2)?;
        let mut c = Checks::default();
        let rels: Vec<String> = j.ring().relations().iter().map(|p| p.to_string()).collect();
        c.eq("relations", rels, vec!["a0^2".to_string(), "2*a0*a1".to_string()]);
        ideal_check(&mut c, "J_2 = (a0^2, a0*a1)", &j.ring().ideal(), &ideal(j.ring().vars(), &["a0^2", "a0*a1"])?, &o.config)?;
        Ok(c.finish())
    }));
    let inject = opts.inject_corruption;
    cases.push(CheckCase::new("jet/order-3-rescaled", "jet-order-3", Reference, move |o| {
        let j = jet_presentation(&a_squared(), 3)?;
        let v = j.ring().vars().clone();
        let target = if inject { corrupted_d3_fixture() } else { d3_fixture() };
        let target = Ideal::new(&v, target.generators().iter().map(|g| g.substitute(&(0..3).map(|i| Polynomial::var(&v, i)).collect::<Vec<_>>(), &v)).collect::<Result<Vec<_>>>()?)?;
        let up: HashMap<String, Polynomial> = [("a2".to_string(), parse_polynomial("2*a2", &v)?)].into();
        let down: HashMap<String, Polynomial> = [("a2".to_string(), parse_polynomial("1/2*a2", &v)?)].into();
        let mut c = Checks::default();
        ideal_check(&mut c, "target under a2 -> 2*a2 equals J_3", &apply_substitution(&target, &up)?, &j.ring().ideal(), &o.config)?;
        ideal_check(&mut c, "J_3 under a2 -> a2/2 equals target", &apply_substitution(&j.ring().ideal(), &down)?, &target, &o.config)?;
        certify(&mut c, "J_3 basis certifies", &j.ring().ideal(), &o.config)?;
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("jet/order-2-invariants", "jet-invariants", Derived, |o| {
        let inv = jet_invariants(&jet_presentation(&a_squared(), 2)?, &o.config)?;
        let mut c = Checks::default();
        c.eq("krull dimension", inv.krull_dimension, 1).eq("finite", inv.finite, false);
        c.eq(
            "unit-weight series",
            inv.hilbert_series_unit_weights.map(|s| s.to_string()),
            Some("(1 + t - t^2)/(1 - t)".to_string()),
        );
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("jet/order-1-is-identity", "jet-identity", Trivial, |o| {
        let mut c = Checks::default();
        let rings = [a_squared(), grassmann_presentation(2, 1)?, grassmann_presentation(4, 2)?, grassmann_presentation(5, 2)?];
        for base in rings {
            let j = jet_presentation(&base, 1)?;
            let v = j.ring().vars().clone();
            let images: Vec<Polynomial> = (0..v.len()).map(|i| Polynomial::var(&v, i)).collect();
            let renamed = base.relations().iter().map(|r| r.substitute(&images, &v)).collect::<Result<Vec<_>>>()?;
            ideal_check(&mut c, &format!("{}", base.provenance()), &j.ring().ideal(), &Ideal::new(&v, renamed)?, &o.config)?;
            c.eq("weights", j.ring().grading().weights(), base.grading().weights());
        }
        Ok(c.finish())
    }));
    // Krull dimensions of jet rings of small Grassmannians. For k = 1 and k = n - 1 the ring is
    // C[x]/(x^n), whose order-d jets have dimension d - ceil(d / n); Gr(2,4) is regression data.
    const GRASSMANN_JET_KRULL: [((u32, u32, usize), usize); 18] = [
        ((2, 1, 1), 0), ((2, 1, 2), 1), ((2, 1, 3), 1),
        ((3, 1, 1), 0), ((3, 1, 2), 1), ((3, 1, 3), 2),
        ((3, 2, 1), 0), ((3, 2, 2), 1), ((3, 2, 3), 2),
        ((4, 1, 1), 0), ((4, 1, 2), 1), ((4, 1, 3), 2),
        ((4, 2, 1), 0), ((4, 2, 2), 2), ((4, 2, 3), 3),
        ((4, 3, 1), 0), ((4, 3, 2), 1), ((4, 3, 3), 2),
    ];
    for ((n, k, d), krull) in GRASSMANN_JET_KRULL {
        cases.push(CheckCase::new(format!("jet/grassmann-n{n}-k{k}-d{d}"), "jet-counts", Derived, move |o| {
            let base = grassmann_presentation(n, k)?;
            let j = jet_presentation(&base, d)?;
            let mut c = Checks::default();
            c.eq("variable count", j.ring().vars().len(), d * n as usize);
            c.eq("relation count", j.ring().relations().len(), d * n as usize);
            let gb = j.ring().groebner(&o.config)?;
            c.eq("krull dimension", gb.krull_dimension(), krull);
            if k == 1 || k == n - 1 {
                c.eq("fat point jets", gb.krull_dimension(), d - d.div_ceil(n as usize));
            }
            c.note(format!("krull dimension {}", gb.krull_dimension()));
            if d == 1 {
                c.that("finite", gb.is_zero_dimensional());
            }
            Ok(c.finish())
        }));
    }
}

fn embedded_point(cases: &mut Vec<CheckCase>) {
    cases.push(CheckCase::new("embedded-point/identity", "embedded-point", Reference, |o| {
        let mut c = Checks::default();
        c.that("(a0,a1)^2 ∩ (a0) = (a0^2, a0*a1)", embedded_point_check(&o.config)?);
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("embedded-point/symmetric", "embedded-point", Derived, |o| {
        let v = vars(&["a0", "a1"]);
        let m = ideal(&v, &["a0", "a1"])?;
        let lhs = ideal_intersection(&m.product(&m)?, &ideal(&v, &["a1"])?, &o.config)?;
        let mut c = Checks::default();
        ideal_check(&mut c, "(a0,a1)^2 ∩ (a1) = (a1^2, a0*a1)", &lhs, &ideal(&v, &["a1^2", "a0*a1"])?, &o.config)?;
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("embedded-point/inequality", "embedded-point", Derived, |o| {
        let v = vars(&["a0", "a1"]);
        let m = ideal(&v, &["a0", "a1"])?;
        let lhs = ideal_intersection(&m.product(&m)?, &ideal(&v, &["a0 + a1"])?, &o.config)?;
        let rhs = ideal(&v, &["a0^2", "a0*a1"])?;
        let mut c = Checks::default();
        match inequality_witness(&lhs, &rhs, &o.config)? {
            Some((g, nf)) => {
                c.that("witness has nonzero normal form", !nf.is_zero());
                c.note(format!("witness `{g}` reduces to `{nf}`"));
            }
            None => {
                c.that("ideals differ", false);
            }
        }
        Ok(c.finish())
    }));
}

fn grassmann(cases: &mut Vec<CheckCase>) {
    cases.push(CheckCase::new("gaussian/examples", "gaussian-binomial", Derived, |_| {
        let mut c = Checks::default();
        c.eq("[2 1]", gaussian_binomial(2, 1)?, IntPoly::from_i64(&[1, 1]));
        c.eq("[4 2]", gaussian_binomial(4, 2)?, IntPoly::from_i64(&[1, 1, 2, 1, 1]));
        c.eq("[7 0]", gaussian_binomial(7, 0)?, IntPoly::one());
        c.that("k > n rejected", gaussian_binomial(3, 4).is_err());
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("gaussian/duality-and-pascal", "gaussian-binomial", Derived, |_| {
        let mut c = Checks::default();
        for n in 0..=10u32 {
            for k in 0..=n {
                let g = gaussian_binomial(n, k)?;
                c.eq(&format!("[{n} {k}] symmetric"), &g, &gaussian_binomial(n, n - k)?);
                c.eq(&format!("[{n} {k}](1)"), g.eval_at_one(), BigInt::from(binomial(n as u64, k as u64)));
                c.that(format!("[{n} {k}] degree"), g.degree() == Some((k * (n - k)) as usize));
                if k >= 1 && k < n {
                    let rhs = &gaussian_binomial(n - 1, k - 1)? + &(&IntPoly::term(1, k as usize) * &gaussian_binomial(n - 1, k)?);
                    c.eq(&format!("[{n} {k}] recurrence"), g, rhs);
                }
            }
        }
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("grassmann/presentation-examples", "grassmann-presentation", Derived, |_| {
        let strings = |r: &PresentedRing| r.relations().iter().map(|p| p.to_string()).collect::<Vec<_>>();
        let mut c = Checks::default();
        c.eq("Gr(1,2)", strings(&grassmann_presentation(2, 1)?), vec!["p1*q1".into(), "p1 + q1".to_string()]);
        c.eq(
            "Gr(2,4)",
            strings(&grassmann_presentation(4, 2)?),
            ["p2*q2", "p2*q1 + p1*q2", "p1*q1 + p2 + q2", "p1 + q1"].map(String::from).to_vec(),
        );
        c.eq("Gr(1,3)", strings(&grassmann_presentation(3, 1)?), ["p1*q2", "p1*q1 + q2", "p1 + q1"].map(String::from).to_vec());
        Ok(c.finish())
    }));
    for n in 2..=6u32 {
        for k in 1..n {
            cases.push(CheckCase::new(format!("grassmann/hilbert-n{n}-k{k}"), "grassmann-hilbert-series", Derived, move |o| {
                let ring = grassmann_presentation(n, k)?;
                let mut c = Checks::default();
                let hs = ring.hilbert_series(&o.config)?;
                let g = gaussian_binomial(n, k)?;
                c.eq("series", hs.as_polynomial(), Some(&g));
                c.eq("value at 1", g.eval_at_one(), BigInt::from(binomial(n as u64, k as u64)));
                certify(&mut c, "basis certifies", &ring.ideal(), &o.config)?;
                Ok(c.finish())
            }));
        }
    }
    cases.push(CheckCase::new("grassmann/product-formula", "grassmann-product-formula", Derived, |_| {
        let mut c = Checks::default();
        c.eq("n=2 m=(1)", grassmann_multiplicity(&DivisorData::new(2, vec![1])?), IntPoly::from_i64(&[1, 1]));
        c.eq("n=4 m=(0,1,0)", grassmann_multiplicity(&DivisorData::new(4, vec![0, 1, 0])?), gaussian_binomial(4, 2)?);
        c.eq("n=3 m=(1,1)", grassmann_multiplicity(&DivisorData::new(3, vec![1, 1])?), IntPoly::from_i64(&[1, 2, 3, 2, 1]));
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("grassmann/tensor-products", "tensor-product-hilbert", Derived, |o| {
        let mut c = Checks::default();
        let g21 = grassmann_presentation(2, 1)?;
        c.eq("Gr(1,2) twice", product_hilbert(&[g21.clone(), g21], &o.config)?, RationalSeries::polynomial(IntPoly::from_i64(&[1, 2, 1])));
        c.eq("empty", product_hilbert(&[], &o.config)?, RationalSeries::one());
        c.eq(
            "Gr(2,4)",
            product_hilbert(&[grassmann_presentation(4, 2)?], &o.config)?,
            RationalSeries::polynomial(grassmann_multiplicity(&DivisorData::new(4, vec![0, 1, 0])?)),
        );
        Ok(c.finish())
    }));
}

fn structure(cases: &mut Vec<CheckCase>, opts: &SuiteOptions) {
    for n in 2..=6u32 {
        for k in 1..n {
            cases.push(CheckCase::new(format!("structure/grassmann-n{n}-k{k}"), "structure-theorem-grassmannian", Derived, move |o| {
                let map = grassmann_presentation(n, k)?.to_map()?;
                let mut c = Checks::default();
                structure_checks(&mut c, &map, &o.config)?;
                c.eq("top degree", map.jacobian_degree(), (k * (n - k)) as i64);
                Ok(c.finish())
            }));
        }
    }
    for i in 0..opts.random_cases {
        cases.push(CheckCase::new(format!("structure/random-ci-{i:02}"), "structure-theorem-random", Derived, move |o| {
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
            rng.set_stream(i as u64);
            let map = random_complete_intersection(&mut rng, &RandomCiBounds::default());
            let mut c = Checks::default();
            structure_checks(&mut c, &map, &o.config)?;
            let comps: Vec<String> = map.components().iter().map(|p| p.to_string()).collect();
            c.note(format!("weights {:?}, components [{}]", map.grading().weights(), comps.join(", ")));
            Ok(c.finish())
        }));
    }
    cases.push(CheckCase::new("structure/gr24-details", "structure-theorem-grassmannian", Derived, |o| {
        let map = grassmann_presentation(4, 2)?.to_map()?;
        let q = build_quotient_with(&map, &o.config).map_err(|e| match e {
            QuotientError::Algebra(e) => e,
            QuotientError::NotFinite(_) => crate::error::Error::NotZeroDimensional,
        })?;
        let mut c = Checks::default();
        c.eq("standard monomials", q.dimension(), 6);
        c.eq("poincare", q.poincare_polynomial(), gaussian_binomial(4, 2)?);
        let socle = q.socle();
        c.eq("socle degrees", socle.degrees, vec![4]);
        let pairings = q.pairing_matrices()?;
        c.eq("middle pairing shape", (pairings[2].matrix.rows(), pairings[2].matrix.cols()), (2, 2));
        c.that("middle pairing invertible", pairings[2].matrix.is_invertible());
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("structure/wobbly-order-2", "structure-theorem-wobbly", Derived, |o| {
        let v = vars(&["a0", "a1"]);
        let comps = vec![parse_polynomial("a0^2", &v)?, parse_polynomial("a0*a1", &v)?];
        let map = PolynomialMap::new(comps, WeightedGrading::standard(2))?;
        let r = verify_structure_theorem_with(&map, &o.config)?;
        let mut c = Checks::default();
        c.eq("finite", r.finite_dimensional, false).eq("krull dimension", r.krull_dimension, 1);
        c.that("no algebra clauses reported", r.dimension.is_none() && r.pairing_perfect.is_none());
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("structure/jacobian-gr12", "jacobian-determinant", Derived, |_| {
        let map = grassmann_presentation(2, 1)?.to_map()?;
        let mut c = Checks::default();
        let v = map.vars();
        // det [[q1, p1], [1, 1]] for the relation order (p1*q1, p1 + q1).
        c.eq("det", map.jacobian_determinant(), parse_polynomial("q1 - p1", v)?);
        Ok(c.finish())
    }));
}

fn equivariant(cases: &mut Vec<CheckCase>) {
    cases.push(CheckCase::new("equivariant/gaussian-closed-form", "equivariant-multiplicity", Derived, |_| {
        let mut c = Checks::default();
        for n in 1..=8u32 {
            for k in 0..=n {
                let domain: Vec<u32> = (1..=k).chain(1..=n - k).collect();
                let codomain: Vec<u32> = (1..=n).collect();
                let m = equivariant_multiplicity(&ws(&domain), &ws(&codomain));
                c.eq(&format!("n={n} k={k}"), m.as_polynomial(), Some(&gaussian_binomial(n, k)?));
            }
        }
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("equivariant/examples", "equivariant-multiplicity", Derived, |_| {
        let mut c = Checks::default();
        c.eq("{1,1}->{1,2}", equivariant_multiplicity(&ws(&[1, 1]), &ws(&[1, 2])).to_string(), "1 + t".to_string());
        c.eq(
            "{1,2,1,2}->{1,2,3,4}",
            equivariant_multiplicity(&ws(&[1, 2, 1, 2]), &ws(&[1, 2, 3, 4])).to_string(),
            "1 + t + 2*t^2 + t^3 + t^4".to_string(),
        );
        c.eq("permuted", equivariant_multiplicity(&ws(&[3, 1, 2]), &ws(&[1, 2, 3])), RationalSeries::one());
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("hitchin/cardinality", "hitchin-base-weights", Derived, |_| {
        let mut c = Checks::default();
        for n in 1..=6u32 {
            for g in 2..=5u32 {
                c.eq(&format!("n={n} g={g}"), hitchin_base_weights(n, g)?.len() as u32, n * n * (g - 1) + 1);
            }
        }
        c.eq("n=2 g=2", hitchin_base_weights(2, 2)?.counts(), vec![(1, 2), (2, 3)]);
        c.that("genus 1 rejected", hitchin_base_weights(2, 1).is_err());
        Ok(c.finish())
    }));
}

fn weights(cases: &mut Vec<CheckCase>, _opts: &SuiteOptions) {
    cases.push(CheckCase::new("weights/orbit-examples", "weyl-orbit", Reference, |_| {
        let mut c = Checks::default();
        c.eq("(4,0)", weyl_orbit_size(&dw(&[4, 0])), BigUint::from(2u32));
        c.eq("(3,3,0,0)", weyl_orbit_size(&dw(&[3, 3, 0, 0])), BigUint::from(6u32));
        c.eq("(2,2,2)", weyl_orbit_size(&dw(&[2, 2, 2])), BigUint::from(1u32));
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("weights/orbit-grassmannian-multiples", "weyl-orbit", Derived, |_| {
        let mut c = Checks::default();
        for n in 1..=8usize {
            for k in 1..n {
                for d in 0..=5i64 {
                    let mu = DominantWeight::fundamental(n, k)?.scaled(d + 1)?;
                    c.eq(&format!("{mu}"), weyl_orbit_size(&mu), BigUint::from(binomial(n as u64, k as u64)));
                }
            }
        }
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("weights/dominance-axioms-random", "dominance-order", Derived, |o| {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        rng.set_stream(1_000);
        let mut c = Checks::default();
        let draw = |rng: &mut ChaCha8Rng, n: usize, total: i64| loop {
            let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=4)).collect();
            let shift = total - v.iter().sum::<i64>();
            v[0] += shift;
            v.sort_unstable_by(|a, b| b.cmp(a));
            if let Ok(w) = DominantWeight::new(v) {
                if w.total() == total {
                    return w;
                }
            }
        };
        for _ in 0..500 {
            let n = rng.gen_range(1..=6);
            let total = rng.gen_range(-2..=6);
            let (a, b, x) = (draw(&mut rng, n, total), draw(&mut rng, n, total), draw(&mut rng, n, total));
            c.that(format!("{a} reflexive"), dominance_leq(&a, &a)?);
            if dominance_leq(&a, &b)? && dominance_leq(&b, &a)? {
                c.eq("antisymmetric", &a, &b);
            }
            if dominance_leq(&a, &b)? && dominance_leq(&b, &x)? {
                c.that(format!("{a} <= {b} <= {x} transitive"), dominance_leq(&a, &x)?);
            }
        }
        c.that("different totals incomparable", !dominance_leq(&dw(&[2, 0]), &dw(&[1, 0]))?);
        c.that("(1,1,0) <= (2,0,0)", dominance_leq(&dw(&[1, 1, 0]), &dw(&[2, 0, 0]))?);
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("weights/lower-set-examples", "lower-set", Derived, |_| {
        let mut c = Checks::default();
        c.eq("(2,0)", lower_set(&dw(&[2, 0])), vec![dw(&[2, 0]), dw(&[1, 1])]);
        c.eq("(4,0)", lower_set(&dw(&[4, 0])), vec![dw(&[4, 0]), dw(&[3, 1]), dw(&[2, 2])]);
        c.eq("(1,0,0)", lower_set(&dw(&[1, 0, 0])), vec![dw(&[1, 0, 0])]);
        for d in 0..=10i64 {
            c.eq(&format!("GL_2 d={d}"), lower_set(&dw(&[d + 1, 0])).len() as i64, (d + 1) / 2 + 1);
        }
        for mu in [dw(&[3, 1, 0]), dw(&[4, 2, 0, 0]), dw(&[3, 2, 1, 0, -1])] {
            let set = lower_set(&mu);
            for lambda in &set {
                for nu in lower_set(lambda) {
                    c.that(format!("{nu} <= {lambda} <= {mu} stays in the set"), set.contains(&nu));
                }
            }
        }
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("weights/minuscule", "minuscule", Reference, |_| {
        let mut c = Checks::default();
        c.that("omega_2 in GL_4", is_minuscule(&DominantWeight::fundamental(4, 2)?));
        c.that("(2,0) not minuscule", !is_minuscule(&dw(&[2, 0])));
        c.that("zero weight", is_minuscule(&dw(&[0, 0, 0])));
        for n in 2..=8 {
            for k in 1..n {
                let omega = DominantWeight::fundamental(n, k)?;
                c.eq(&format!("lower set of {omega}"), lower_set(&omega), vec![omega.clone()]);
                for d in 1..=3 {
                    c.that(format!("{d}+1 times {omega}"), !is_minuscule(&omega.scaled(d + 1)?));
                }
            }
        }
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("weights/fundamental-decomposition", "fundamental-decomposition", Reference, |_| {
        let mut c = Checks::default();
        let d = fundamental_decomposition(&dw(&[1, 1, 0, 0]));
        c.eq("alpha of omega_2", d.alpha.clone(), vec![0, 1, 0, 0]).eq("delta of omega_2", d.delta_exponents, vec![0, 0, 1, 0]);
        let d = fundamental_decomposition(&dw(&[2, 0]));
        c.eq("alpha of (2,0)", d.alpha.clone(), vec![2, 0]).eq("delta of (2,0)", d.delta_exponents, vec![0, 2]);
        for mu in [dw(&[5, 3, 3, -1]), dw(&[0]), dw(&[2, 2, 1])] {
            c.eq("round trip", fundamental_decomposition(&mu).recompose(), mu.entries().to_vec());
        }
        Ok(c.finish())
    }));
}

fn closure(cases: &mut Vec<CheckCase>) {
    cases.push(CheckCase::new("closure/gl2-double", "closure-strata", Derived, |_| {
        let r = closure_vs_grassmann_dimensions(&dw(&[2, 0]));
        let mut c = Checks::default();
        c.eq("strata", r.strata.len(), 2);
        c.eq("top stratum", r.strata[0].note, Some(NO_FORMULA));
        c.that("central stratum", r.strata[1].central);
        c.eq("central multiplicity", r.strata[1].grassmann_multiplicity.as_deref(), Some("1"));
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("closure/omega2-gl4", "closure-strata", Derived, |_| {
        let r = closure_vs_grassmann_dimensions(&dw(&[1, 1, 0, 0]));
        let mut c = Checks::default();
        c.eq("strata", r.strata.len(), 1);
        c.eq("multiplicity", r.strata[0].grassmann_multiplicity.clone(), Some(gaussian_binomial(4, 2)?.to_string()));
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("closure/zero", "closure-strata", Trivial, |_| {
        let r = closure_vs_grassmann_dimensions(&dw(&[0, 0]));
        let mut c = Checks::default();
        c.eq("strata", r.strata.len(), 1);
        c.eq("multiplicity", r.strata[0].grassmann_multiplicity.as_deref(), Some("1"));
        Ok(c.finish())
    }));
}

fn groebner(cases: &mut Vec<CheckCase>) {
    cases.push(CheckCase::new("groebner/gr12-basis", "groebner-examples", Derived, |o| {
        let v = vars(&["p1", "q1"]);
        let i = ideal(&v, &["p1 + q1", "p1*q1"])?;
        let gb = buchberger_with(&i, &i.default_order(), &o.config)?;
        let mut c = Checks::default();
        let strings: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
        c.eq("reduced basis", strings, vec!["q1^2".to_string(), "p1 + q1".to_string()]);
        c.that("certifies", gb.certify().is_ok());
        c.eq("normal form of p1", gb.normal_form(&parse_polynomial("p1", &v)?)?.to_string(), "-q1".to_string());
        Ok(c.finish())
    }));
    cases.push(CheckCase::new("groebner/d3-lex-contains-a1-cubed", "groebner-examples", Derived, |o| {
        let i = d3_fixture();
        let lex = buchberger_with(&i, &MonomialOrder::Lex, &o.config)?;
        let cube = parse_polynomial("a1^3", i.vars())?;
        let mut c = Checks::default();
        c.that("a1^3 in the lex basis", lex.polynomials().contains(&cube));
        c.that("lex basis certifies", lex.certify().is_ok());
        let grevlex = buchberger_with(&i, &i.default_order(), &o.config)?;
        c.that("a1^3 in the ideal", grevlex.contains(&cube)?);
        c.eq("krull dimension", grevlex.krull_dimension(), 1);
        Ok(c.finish())
    }));
}

fn negative_control(cases: &mut Vec<CheckCase>) {
    cases.push(CheckCase::new("negative-control/corrupted-order-3", "negative-control", Trivial, |o| {
        // The corrupted fixture must be rejected against the rescaled order-3 jet ideal,
        // with a generator whose normal form is nonzero.
        let j = jet_presentation(&a_squared(), 3)?;
        let v = j.ring().vars().clone();
        let corrupted = corrupted_d3_fixture();
        let images: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&v, i)).collect();
        let corrupted =
            Ideal::new(&v, corrupted.generators().iter().map(|g| g.substitute(&images, &v)).collect::<Result<Vec<_>>>()?)?;
        let up: HashMap<String, Polynomial> = [("a2".to_string(), parse_polynomial("2*a2", &v)?)].into();
        let rescaled = apply_substitution(&corrupted, &up)?;
        let mut c = Checks::default();
        match inequality_witness(&rescaled, &j.ring().ideal(), &o.config)? {
            Some((g, nf)) => {
                c.that("witness normal form is nonzero", !nf.is_zero());
                c.note(format!("witness `{g}` reduces to `{nf}`"));
            }
            None => {
                c.that("corrupted fixture rejected", false);
            }
        }
        Ok(c.finish())
    }));
}
