use divfield_core::fixtures::{s4_times_c2, s4_times_c2_center, tower_fixtures};
use divfield_core::ramification::{exact_sequence_checks, induced_filtrations};
use num_rational::Ratio;

type Q = Ratio<i64>;

#[test]
fn quotient_of_s4_model_by_center() {
    let f = s4_times_c2().unwrap();
    let h = s4_times_c2_center().unwrap();
    let induced = induced_filtrations::<Q>(&f, &h).unwrap();
    assert_eq!(induced.quotient.orders(), &[12, 4]);
    assert_eq!(induced.sub.profile().unwrap().orders(), &[2; 10]);
}

#[test]
fn trivial_and_full_subgroups() {
    let f = s4_times_c2().unwrap();
    let g = f.group().clone();
    let full = induced_filtrations::<Q>(&f, &g).unwrap();
    assert!(full.quotient.orders().is_empty());
    assert_eq!(full.sub.profile().unwrap(), f.profile().unwrap());
    let triv = divfield_core::group::PermGroup::trivial(g.degree());
    let none = induced_filtrations::<Q>(&f, &triv).unwrap();
    assert_eq!(none.quotient, f.profile().unwrap());
    assert!(none.sub.levels().is_empty());
}

#[test]
fn exact_sequence_on_every_tower() {
    let towers = tower_fixtures().unwrap();
    assert!(towers.len() >= 20, "only {} towers", towers.len());
    for t in &towers {
        let checks = exact_sequence_checks::<Q>(&t.filtration, &t.subgroup)
            .unwrap_or_else(|e| panic!("{}: {e}", t.name));
        for c in checks {
            assert!(c.holds, "{}: x = {}: {} != {} * {}", t.name, c.x, c.upper_g, c.upper_h, c.upper_quotient);
        }
    }
}

#[test]
fn non_normal_subgroup_is_rejected() {
    let f = s4_times_c2().unwrap();
    let p = divfield_core::group::Perm::from_cycles(6, &[vec![0, 1]]).unwrap();
    let h = divfield_core::group::PermGroup::generate(6, vec![p]).unwrap();
    assert!(induced_filtrations::<Q>(&f, &h).is_err());
}
