//! Fixed workloads shared by the criterion benches.

use multalg_core::grassmann::grassmann_presentation;
use multalg_core::jets::jet_presentation;
use multalg_core::{parse_polynomial, PolynomialMap, PresentedRing, Provenance, VarList, WeightedGrading};

/// Cohomology presentations of Gr(k, n) for the given `(n, k)`.
pub fn grassmannians(pairs: &[(u32, u32)]) -> Vec<(String, PresentedRing)> {
    pairs
        .iter()
        .map(|&(n, k)| (format!("Gr({k},{n})"), grassmann_presentation(n, k).expect("0 < k < n")))
        .collect()
}

/// Order-`d` jets of `C[a]/(a^m)`.
pub fn fat_point_jets(m: u32, d: usize) -> PresentedRing {
    let v = VarList::new(&["a"]).unwrap();
    let base = PresentedRing::new(
        v.clone(),
        WeightedGrading::standard(1),
        vec![parse_polynomial(&format!("a^{m}"), &v).unwrap()],
        Provenance::Custom,
    )
    .unwrap();
    jet_presentation(&base, d).unwrap().ring().clone()
}

/// The Grassmannian relations viewed as a quasi-homogeneous map.
pub fn grassmann_map(n: u32, k: u32) -> PolynomialMap {
    grassmann_presentation(n, k).unwrap().to_map().unwrap()
}
