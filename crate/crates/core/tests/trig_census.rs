use std::collections::BTreeMap;
use std::time::Instant;

use g5census::grpact::Quintic21;
use g5census::trigcensus::{canonical_quintic, run_trig_census, SingularityType};
use num_rational::Ratio;

#[test]
fn trigonal_census() {
    let t = Instant::now();
    let census = run_trig_census(false).unwrap();
    println!("trigonal census: {:?}", t.elapsed());
    assert_eq!(census.len(), 2854);
    let mass: Ratio<i64> = census.iter().map(|c| Ratio::new(1, c.aut as i64)).sum();
    assert_eq!(mass, Ratio::from_integer(2817));
    let mut hist = BTreeMap::new();
    for c in &census {
        *hist.entry(c.aut).or_insert(0) += 1;
    }
    assert_eq!(hist, BTreeMap::from([(1, 2783), (2, 63), (3, 7), (6, 1)]));

    let searched = run_trig_census(true).unwrap();
    assert_eq!(searched, census);

    let ex = Quintic21::parse(
        "X5+Y5+X4Z+X3YZ+XY3Z+Y4Z+X3Z2+X2YZ2+XY2Z2+Y3Z2+X2Z3+XYZ3+Y2Z3",
    )
    .unwrap();
    let rep = canonical_quintic(ex);
    let c = census.iter().find(|c| c.f == rep).expect("example in census");
    assert_eq!(c.aut, 6);
    let by_type = census.iter().fold(BTreeMap::new(), |mut m, c| {
        *m.entry(c.sing).or_insert(0) += 1;
        m
    });
    println!("{by_type:?}");
    assert!(by_type.contains_key(&SingularityType::Cusp));
}
