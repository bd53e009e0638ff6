use super::*;
use crate::error::Error;
use crate::poly::{parse_polynomial, VarList, WeightedGrading};
use crate::series::{IntPoly, RationalSeries};

fn vars(names: &[&str]) -> VarList {
    VarList::new(names).unwrap()
}

fn ideal(v: &VarList, gens: &[&str]) -> Ideal {
    Ideal::new(v, gens.iter().map(|g| parse_polynomial(g, v).unwrap())).unwrap()
}

fn gb(v: &VarList, gens: &[&str]) -> GroebnerBasis {
    let i = ideal(v, gens);
    buchberger(&i, &i.default_order()).unwrap()
}

fn strings(gb: &GroebnerBasis) -> Vec<String> {
    gb.polynomials().iter().map(|p| p.to_string()).collect()
}

#[test]
fn gr_2_1_reduced_basis() {
    let v = vars(&["p1", "q1"]);
    let g = gb(&v, &["p1 + q1", "p1*q1"]);
    assert_eq!(strings(&g), ["q1^2", "p1 + q1"]);
    g.certify().unwrap();
}

#[test]
fn principal_variable_ideal() {
    let v = vars(&["a0"]);
    assert_eq!(strings(&gb(&v, &["a0"])), ["a0"]);
}

#[test]
fn d3_ideal_contains_a1_cubed() {
    let v = vars(&["a0", "a1", "a2"]);
    let i = ideal(&v, &["a0^2", "a0*a1", "a0*a2 + a1^2"]);
    // Lex order with a0 > a1 > a2 makes a0*a2 the leading term, and the syzygy
    // a1*(a0*a2 + a1^2) - a2*(a0*a1) = a1^3 enters the basis.
    let lex = buchberger(&i, &MonomialOrder::Lex).unwrap();
    let a1_cubed = parse_polynomial("a1^3", &v).unwrap();
    assert!(lex.polynomials().contains(&a1_cubed));
    lex.certify().unwrap();
    let grevlex = buchberger(&i, &i.default_order()).unwrap();
    assert!(grevlex.contains(&a1_cubed).unwrap());
    assert!(!grevlex.is_zero_dimensional());
}

#[test]
fn normal_forms() {
    let v = vars(&["p1", "q1"]);
    let g = gb(&v, &["p1 + q1", "p1*q1"]);
    assert!(g.normal_form(&parse_polynomial("p1*q1", &v).unwrap()).unwrap().is_zero());
    assert_eq!(g.normal_form(&parse_polynomial("p1", &v).unwrap()).unwrap().to_string(), "-q1");
    let one = parse_polynomial("1", &v).unwrap();
    assert_eq!(g.normal_form(&one).unwrap(), one);

    let w = vars(&["a0", "a1", "a2"]);
    let d3 = gb(&w, &["a0^2", "a0*a1", "a0*a2 + a1^2"]);
    assert!(d3.normal_form(&parse_polynomial("a0*a2 + a1^2", &w).unwrap()).unwrap().is_zero());
}

#[test]
fn zero_dimensionality() {
    let v = vars(&["p1", "q1"]);
    assert!(gb(&v, &["p1 + q1", "q1^2"]).is_zero_dimensional());
    let w = vars(&["a0", "a1"]);
    assert!(!gb(&w, &["a0^2", "a0*a1"]).is_zero_dimensional());
    assert!(gb(&vars(&["x"]), &["x"]).is_zero_dimensional());
}

#[test]
fn standard_monomial_counts() {
    let v = vars(&["p1", "q1"]);
    let sm = gb(&v, &["p1 + q1", "q1^2"]).standard_monomials().unwrap();
    assert_eq!(sm.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>(), [vec![0, 0], vec![0, 1]]);

    let g4 = vars(&["p1", "p2", "q1", "q2"]);
    let i = ideal(&g4, &["p1 + q1", "p2 + p1*q1 + q2", "p2*q1 + p1*q2", "p2*q2"])
        .with_grading(WeightedGrading::new(vec![1, 2, 1, 2]).unwrap())
        .unwrap();
    let b = buchberger(&i, &i.default_order()).unwrap();
    assert_eq!(b.standard_monomials().unwrap().len(), 6);

    assert_eq!(gb(&vars(&["x"]), &["x"]).standard_monomials().unwrap().len(), 1);
    let w = vars(&["a0", "a1"]);
    assert_eq!(gb(&w, &["a0^2", "a0*a1"]).standard_monomials(), Err(Error::NotZeroDimensional));
}

#[test]
fn hilbert_series_examples() {
    let v = vars(&["p1", "q1"]);
    let hs = gb(&v, &["p1 + q1", "q1^2"]).hilbert_series(&WeightedGrading::standard(2)).unwrap();
    assert_eq!(hs, RationalSeries::polynomial(IntPoly::from_i64(&[1, 1])));

    let w = vars(&["a0", "a1"]);
    let hs = gb(&w, &["a0^2", "a0*a1"]).hilbert_series(&WeightedGrading::standard(2)).unwrap();
    assert_eq!(hs, RationalSeries::new(IntPoly::from_i64(&[1, 1, -1]), IntPoly::from_i64(&[1, -1])));

    let x = vars(&["x"]);
    let free = buchberger(&Ideal::new(&x, []).unwrap(), &MonomialOrder::grevlex(1)).unwrap();
    assert_eq!(free.hilbert_series(&WeightedGrading::standard(1)).unwrap().to_string(), "1/(1 - t)");
}

#[test]
fn hilbert_series_rejects_inhomogeneous() {
    let v = vars(&["x", "y"]);
    let g = gb(&v, &["x^2 + y"]);
    assert!(matches!(g.hilbert_series(&WeightedGrading::standard(2)), Err(Error::NotQuasiHomogeneous { .. })));
}

#[test]
fn krull_dimensions() {
    let w = vars(&["a0", "a1"]);
    assert_eq!(gb(&w, &["a0^2", "a0*a1"]).krull_dimension(), 1);
    let v = vars(&["p1", "q1"]);
    assert_eq!(gb(&v, &["p1 + q1", "p1*q1"]).krull_dimension(), 0);
    let z = vars(&["x", "y", "z"]);
    let free = buchberger(&Ideal::new(&z, []).unwrap(), &MonomialOrder::grevlex(3)).unwrap();
    assert_eq!(free.krull_dimension(), 3);
}

#[test]
fn intersections() {
    let cfg = GroebnerConfig::default();
    let v = vars(&["a0", "a1"]);
    let m = ideal(&v, &["a0", "a1"]);
    let m2 = m.product(&m).unwrap();
    let i = ideal_intersection(&m2, &ideal(&v, &["a0"]), &cfg).unwrap();
    assert!(ideal_equal(&i, &ideal(&v, &["a0^2", "a0*a1"]), &cfg).unwrap());

    let p = ideal(&v, &["a0^2 + a1^2", "a0*a1"]);
    let pp = ideal_intersection(&p, &p, &cfg).unwrap();
    assert!(ideal_equal(&pp, &p, &cfg).unwrap());

    let c = ideal_intersection(&ideal(&v, &["a0"]), &ideal(&v, &["a1"]), &cfg).unwrap();
    assert_eq!(c.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(), ["a0*a1"]);
}

#[test]
fn equality_cases() {
    let cfg = GroebnerConfig::default();
    let x = vars(&["x"]);
    assert!(ideal_equal(&ideal(&x, &["x"]), &ideal(&x, &["2*x"]), &cfg).unwrap());
    let v = vars(&["a0", "a1", "a2"]);
    let a = ideal(&v, &["a0*a2 + a1^2"]);
    let b = ideal(&v, &["2*a0*a2 + a1^2"]);
    assert!(!ideal_equal(&a, &b, &cfg).unwrap());
    let (gen, nf) = inequality_witness(&a, &b, &cfg).unwrap().unwrap();
    assert!(!nf.is_zero(), "witness {gen} should not reduce to zero");
}

#[test]
fn resource_cap_is_reported() {
    let v = vars(&["x", "y", "z"]);
    // Leading monomials x^2 and x*y share x, so at least one S-pair must be reduced.
    let i = ideal(&v, &["x^2 - y", "x*y - z", "y^2 - x*z"]);
    let cfg = GroebnerConfig { max_pair_reductions: 0 };
    assert_eq!(buchberger_with(&i, &i.default_order(), &cfg), Err(Error::ResourceLimit { cap: 0 }));
    assert!(buchberger(&i, &i.default_order()).is_ok());
}

#[test]
fn unit_ideal() {
    let v = vars(&["x", "y"]);
    let g = gb(&v, &["x", "x + 1"]);
    assert!(g.is_unit());
    assert_eq!(strings(&g), ["1"]);
    assert!(g.standard_monomials().unwrap().is_empty());
}

mod properties {
    use super::*;
    use crate::poly::{Monomial, Polynomial, Rational};
    use proptest::prelude::*;

    fn arb_poly(v: VarList, max_terms: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -4i64..=4), 0..max_terms).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    &v,
                    terms.into_iter().map(|(e, c)| (Monomial::new(e), Rational::from_integer(c.into()))),
                )
            },
        )
    }

    fn fixture() -> GroebnerBasis {
        gb(&vars(&["a0", "a1", "a2"]), &["a0^2", "a0*a1", "a0*a2 + a1^2"])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn normal_form_idempotent_and_linear(
            p in arb_poly(vars(&["a0", "a1", "a2"]), 6),
            q in arb_poly(vars(&["a0", "a1", "a2"]), 6),
        ) {
            let g = fixture();
            let v = g.vars().clone();
            let p = Polynomial::from_terms(&v, p.into_terms());
            let q = Polynomial::from_terms(&v, q.into_terms());
            let np = g.normal_form(&p).unwrap();
            prop_assert_eq!(g.normal_form(&np).unwrap(), np.clone());
            let nq = g.normal_form(&q).unwrap();
            prop_assert_eq!(g.normal_form(&(&p + &q)).unwrap(), &np + &nq);
            prop_assert!(g.contains(&(&p - &np)).unwrap());
        }

        #[test]
        fn ideal_equal_survives_shuffles_and_rescaling(
            perm_seed in 0usize..6,
            scales in proptest::collection::vec(1i64..5, 3),
        ) {
            let v = vars(&["a0", "a1", "a2"]);
            let gens = ["a0^2", "a0*a1", "a0*a2 + a1^2"];
            let base = ideal(&v, &gens);
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let shuffled: Vec<Polynomial> = perms[perm_seed]
                .iter()
                .zip(&scales)
                .map(|(&k, &s)| parse_polynomial(gens[k], &v).unwrap().scale(&Rational::from_integer(s.into())))
                .collect();
            let other = Ideal::new(&v, shuffled).unwrap();
            let cfg = GroebnerConfig::default();
            prop_assert!(ideal_equal(&base, &other, &cfg).unwrap());
            prop_assert!(ideal_equal(&other, &base, &cfg).unwrap());
        }

        #[test]
        fn random_bases_certify(
            gens in proptest::collection::vec(arb_poly(vars(&["a0", "a1", "a2"]), 4), 1..4),
        ) {
            let v = vars(&["a0", "a1", "a2"]);
            let gens: Vec<Polynomial> = gens.into_iter().map(|g| Polynomial::from_terms(&v, g.into_terms())).collect();
            let i = Ideal::new(&v, gens).unwrap();
            let b = buchberger(&i, &MonomialOrder::grevlex(3)).unwrap();
            prop_assert!(b.certify().is_ok());
            let lex = buchberger(&i, &MonomialOrder::Lex).unwrap();
            prop_assert!(lex.certify().is_ok());
        }
    }
}
