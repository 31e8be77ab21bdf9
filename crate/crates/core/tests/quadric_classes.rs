use g5census::grpact::{quadric_orbits, Quadric15};

#[test]
fn seven_classes_with_expected_sizes() {
    let t0 = std::time::Instant::now();
    let c = quadric_orbits();
    eprintln!("built in {:?}", t0.elapsed());
    let sizes = c.table.sizes();
    eprintln!("sizes {:?}", sizes);
    eprintln!("stabs {:?}", c.stabilizers.iter().map(|s| s.len()).collect::<Vec<_>>());
    assert_eq!(sizes.len(), 7);
    assert_eq!(sizes[..4].iter().sum::<usize>(), 32116);
    assert_eq!(sizes[4..].iter().sum::<usize>(), 651);
    let p4 = Quadric15::parse("Y2+XZ+YZ").unwrap();
    assert_eq!(c.class_of(p4), Some(3));
}
