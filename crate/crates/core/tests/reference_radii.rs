//! Radii against 40-digit roots of the derivative of the hypergeometric form
//! `x 1F2(1; a, b; -x²/4)` (and its square-root counterpart).

#![allow(clippy::excessive_precision)]

use radii::{find_radius, Family};

const REFERENCE: &[(Family, f64, f64)] = &[
    (Family::BesselCircle, -0.9, 0.36993729427078441545),
    (Family::BesselCircle, 2.5, 2.5011326204093966814),
    (Family::BesselCircle, 8.0, 4.1362679770520743926),
    (Family::BesselSqrt, -0.9, 0.20724096543385691252),
    (Family::BesselSqrt, 2.5, 11.169590014604001906),
    (Family::BesselSqrt, 8.0, 32.474250240698507094),
    (Family::StruveCircle, -0.3, 1.7420983993036452149),
    (Family::StruveCircle, 0.3, 2.1952297531420628401),
    (Family::StruveSqrt, -0.3, 5.1580423885883112653),
    (Family::StruveSqrt, 0.3, 8.61894948529625071),
    (Family::LommelCircle, -0.9, 0.92962198635256263701),
    (Family::LommelCircle, 0.9, 2.252754741450733026),
    (Family::LommelSqrt, -0.9, 1.3613189501956798825),
    (Family::LommelSqrt, 0.9, 9.1276799979275458534),
];

#[test]
fn radii_match_high_precision_roots() {
    for &(family, p, expected) in REFERENCE {
        let r = find_radius(family, p).unwrap();
        let rel = (r.radius - expected).abs() / expected;
        assert!(
            rel <= 1e-12,
            "{family} at {p}: {} vs {expected} ({rel:e})",
            r.radius
        );
        assert!(r.converged);
        assert!(r.bracket_used.contains(r.radius));
        assert_eq!(r.extended_domain, family.is_extended_domain(p));
    }
}

#[test]
fn reports_flag_extended_lommel_domain() {
    assert!(
        find_radius(Family::LommelSqrt, -0.9)
            .unwrap()
            .extended_domain
    );
    assert!(
        !find_radius(Family::LommelSqrt, 0.9)
            .unwrap()
            .extended_domain
    );
    assert!(
        !find_radius(Family::BesselSqrt, -0.9)
            .unwrap()
            .extended_domain
    );
}

#[test]
fn degenerate_edge_is_flagged_and_still_solved() {
    let r = find_radius(Family::BesselSqrt, -1.0 + 1e-12).unwrap();
    assert!(r.degenerate);
    assert!(r.radius > 0.0 && r.radius < 1e-10);
    assert!(!find_radius(Family::BesselSqrt, 0.0).unwrap().degenerate);
}
