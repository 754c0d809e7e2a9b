use drinfeld::census::{census, enumerate, write_csv, CensusOptions, CensusReport};
use drinfeld::poly::monic_irreducibles;
use drinfeld::{Execution, Field, Poly};

fn no_realize() -> CensusOptions {
    CensusOptions { realize_bound: None, ..CensusOptions::default() }
}

#[test]
fn totals_depend_only_on_q_d_m() {
    let f3 = Field::new(3, 1, None).unwrap();
    for d in 1..=2 {
        for m in 1..=2 {
            let totals: Vec<usize> = monic_irreducibles(&f3, d)
                .map(|p| census(&p, m, no_realize()).unwrap().total)
                .collect();
            assert!(totals.windows(2).all(|w| w[0] == w[1]), "d = {d}, m = {m}: {totals:?}");
        }
    }
}

#[test]
fn sequential_and_parallel_enumerations_agree() {
    let f5 = Field::new(5, 1, None).unwrap();
    let p = Poly::from_ints(&f5, &[2, 0, 1]);
    let a = enumerate(&p, 2, Execution::Sequential).unwrap();
    let b = enumerate(&p, 2, Execution::Parallel).unwrap();
    assert_eq!(a.candidates, b.candidates);
}

#[test]
fn count_formula_mismatch_is_recorded() {
    let f3 = Field::new(3, 1, None).unwrap();
    let report = census(&Poly::x(&f3), 2, CensusOptions::default()).unwrap();
    assert_eq!(report.total, 15);
    assert_eq!(report.formula_total, Some(6));
    assert!(report.discrepancies.iter().any(|d| d.starts_with("count formula")));
    assert_eq!(report.ordinary_coverage.as_deref(), Some("1"));
}

#[test]
fn reports_round_trip_through_json_and_csv() {
    let f3 = Field::new(3, 1, None).unwrap();
    let report = census(&Poly::x(&f3), 1, CensusOptions::default()).unwrap();
    let back: CensusReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);
    let mut buf = Vec::new();
    write_csv(&[report.clone(), report], &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(1).unwrap().starts_with("3,1,1,\"0,1\",1,4,2,0,0,6,6,"));
}
