use std::collections::BTreeMap;
use std::time::Instant;

use g5census::hypcensus::oracle::brute_force_classes;
use g5census::hypcensus::{canonical_model, q_representatives, run_hyp_census, HypModel};
use g5census::gf2algebra::UniPolyF2;
use num_rational::Ratio;

fn mass(auts: impl Iterator<Item = usize>) -> Ratio<i64> {
    auts.map(|a| Ratio::new(1, a as i64)).sum()
}

#[test]
fn census_matches_brute_force_in_low_genus() {
    for g in 2..=4 {
        let census = run_hyp_census(g).unwrap();
        let oracle = brute_force_classes(g).unwrap();
        assert_eq!(census.len(), oracle.len(), "genus {g}");
        for (c, o) in census.iter().zip(&oracle) {
            assert_eq!(c.model, o.model);
            assert_eq!(c.aut, o.aut, "{}", c.model);
        }
        assert_eq!(mass(census.iter().map(|c| c.aut)), Ratio::from_integer(1 << (2 * g - 1)));
    }
}

#[test]
fn genus_five_census() {
    let t = Instant::now();
    let census = run_hyp_census(5).unwrap();
    println!("genus 5 hyperelliptic census: {:?}", t.elapsed());
    assert_eq!(census.len(), 1070);
    assert_eq!(mass(census.iter().map(|c| c.aut)), Ratio::from_integer(512));
    let mut hist = BTreeMap::new();
    for c in &census {
        *hist.entry(c.aut).or_insert(0) += 1;
    }
    assert_eq!(hist, BTreeMap::from([(2, 983), (4, 76), (6, 7), (12, 4)]));
}

#[test]
fn q_classes_in_genus_five() {
    // factored forms; each entry is a product of the listed factors
    let list: [&[&str]; 31] = [
        &["1"], &["x"], &["x^2"], &["x", "x+1"], &["x^2+x+1"],
        &["x^3"], &["x^2", "x+1"], &["x^2+x+1", "x"], &["x^3+x+1"],
        &["x", "x", "x+1", "x+1"], &["x^2+x+1", "x^2+x+1"], &["x^2+x+1", "x^2"],
        &["x^2+x+1", "x", "x+1"], &["x^3+x+1", "x"], &["x^3+x^2+1", "x"], &["x^4+x+1"],
        &["x^4+x^3+1"],
        &["x^2+x+1", "x^2+x+1", "x"], &["x^3+x+1", "x^2+x+1"], &["x^3+x+1", "x", "x+1"],
        &["x^4+x+1", "x"], &["x^4+x^3+x^2+x+1", "x"], &["x^5+x^2+1"], &["x^5+x^3+1"],
        &["x^5+x^3+x^2+x+1"],
        &["x^2+x+1", "x^2+x+1", "x^2+x+1"], &["x^3+x+1", "x^3+x+1"],
        &["x^3+x+1", "x^3+x^2+1"], &["x^4+x+1", "x^2+x+1"], &["x^6+x+1"], &["x^6+x^3+1"],
    ];
    let reps = q_representatives(5).unwrap();
    assert_eq!(reps.len(), 31);
    let m = |q: UniPolyF2| {
        // a p of top degree makes any q valid for the canonical form check
        canonical_model(&HypModel::new(5, q, UniPolyF2::monomial(12)).unwrap()).unwrap().q
    };
    let mut got: Vec<_> = list
        .iter()
        .map(|fs| {
            let q = fs
                .iter()
                .fold(UniPolyF2::one(), |acc, f| &acc * &UniPolyF2::parse_pretty(f).unwrap());
            m(q)
        })
        .collect();
    got.sort();
    got.dedup();
    assert_eq!(got, reps);
}
