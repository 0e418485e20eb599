use ewmat::constructions::{complete_step, complete_to_conference, delete_principal, square_form, Stage};
use ewmat::generators::{paley, search, SearchConfig, SearchMode};
use ewmat::seidel::{
    identify, main_angles, normalize, seidel_from_tournament, target_charpoly, tournament_charpoly_via_conv, verify,
    Family, Kind, Property, SeidelMatrix, Spectrum,
};
use ewmat::{charpoly, det};

#[test]
fn order_ten_general_ew_exists() {
    let report = search(&SearchConfig::new(10, SearchMode::General)).unwrap();
    let m = report.solutions.first().expect("an EW matrix of order 10");
    let cert = verify(Property::Ew, m).unwrap();
    assert!(cert.is_pass());
    assert_eq!(det(m).unwrap().abs(), 73728);
    assert_eq!(m.rows(), 10);
}

// exhaustive; ~2.5M nodes
#[test]
fn order_ten_has_no_skew_ew() {
    let report = search(&SearchConfig::new(10, SearchMode::SkewOnly)).unwrap();
    assert!(report.complete);
    assert!(report.solutions.is_empty());
}

#[test]
fn paley_nineteen_rebuilds_from_every_stage() {
    let p = paley(19).unwrap();
    for del in [vec![0], vec![3, 11], vec![0, 1, 2], vec![4, 9, 17]] {
        let s = SeidelMatrix::new(delete_principal(p.body(), &del).unwrap()).unwrap();
        let class = square_form(&s).unwrap();
        assert_eq!(class.t, 4);
        assert_eq!(class.stage.removed(), del.len());
        let c = complete_to_conference(&s).unwrap();
        assert_eq!(c.order(), 20);
        assert!(verify(Property::Conference, c.body()).unwrap().is_pass());
    }
}

#[test]
fn one_step_moves_up_a_stage() {
    let p = paley(13).unwrap();
    let s = SeidelMatrix::new(delete_principal(p.body(), &[1, 5, 8]).unwrap()).unwrap();
    assert_eq!(square_form(&s).unwrap().stage, Stage::Minus3);
    let up = complete_step(&s).unwrap();
    assert_eq!(up.kind(), Kind::Symmetric);
    let chi = charpoly(up.body()).unwrap();
    assert_eq!(chi, target_charpoly(Family::SymC, 3).unwrap().expand().unwrap());
    assert_eq!(square_form(&up).unwrap().stage, Stage::Minus2);
}

#[test]
fn ew_tournament_charpoly_from_angles() {
    let ew = search(&SearchConfig::new(6, SearchMode::SkewOnly)).unwrap().solutions.remove(0);
    let s = SeidelMatrix::new(ew.add_scalar_identity(&-1).unwrap()).unwrap();
    let (_, s) = normalize(&s).unwrap();
    let spectrum = Spectrum::from_factored(&target_charpoly(Family::EwSeidel, 1).unwrap()).unwrap();
    let angles = main_angles(&s, &spectrum).unwrap();
    let chi = tournament_charpoly_via_conv(&s, &angles).unwrap();
    // x · χ of the order-5 tournament
    let a = ewmat::seidel::tournament_from_seidel(&s).unwrap();
    assert_eq!(chi, charpoly(a.body()).unwrap());
    assert_eq!(chi.coeff(0), 0);
    let found = identify(&charpoly(s.body()).unwrap()).unwrap();
    assert!(found.contains(&(Family::EwSeidel, 1)));
    assert_eq!(seidel_from_tournament(&a).unwrap(), s);
}
