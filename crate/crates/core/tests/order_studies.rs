use hoc7_core::studies::{study_rows, StudyMode, StudySpec};

fn orders(mode: StudyMode) -> Vec<f64> {
    let spec = StudySpec::default_for(mode);
    let errors: Vec<(f64, f64)> = spec
        .levels
        .iter()
        .map(|&k| (spec.step(k), spec.error(k).unwrap()))
        .collect();
    study_rows(&errors)
        .unwrap()
        .iter()
        .filter_map(|r| r.order)
        .collect()
}

#[test]
fn time_refinement_is_seventh_order() {
    let o = orders(StudyMode::Time);
    assert_eq!(o.len(), 4);
    assert!(o.iter().all(|o| (6.5..=7.6).contains(o)), "{o:?}");
}

#[test]
fn space_refinement_is_fourth_order_in_psi() {
    let o = orders(StudyMode::Space);
    assert_eq!(o.len(), 4);
    assert!(o.iter().all(|o| (3.9..=4.1).contains(o)), "{o:?}");
}

#[test]
fn scalar_refinement_is_seventh_order() {
    let o = orders(StudyMode::Ode);
    assert!(o.iter().all(|o| (6.9..=7.1).contains(o)), "{o:?}");
}
