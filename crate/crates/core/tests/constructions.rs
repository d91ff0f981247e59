use num_integer::gcd;

use floorsq::construct::{ceil_family_intervals, ceil_family_odd, floor_family, lower_bound_formula, stability_delta};
use floorsq::enumerate::enum_t;
use floorsq::exact::floor_mul_sq;
use floorsq::Rational;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

#[test]
fn floor_family_lower_bound_is_met() {
    for q in 2..=6i64 {
        for p in (1..q).filter(|p| gcd(*p, q) == 1) {
            let alpha = r(p, q);
            let rep = enum_t(&alpha, 10_000).unwrap();
            for x in [1_000u64, 10_000] {
                let bound = lower_bound_formula(q as u64, &Rational::integer(x)).unwrap();
                assert!(rep.count_at(x) as u64 >= bound, "{alpha}, x = {x}: {} < {bound}", rep.count_at(x));
            }
        }
    }
}

#[test]
fn floor_family_members_show_up_in_enumeration() {
    // (12, 12, 71) for 1/2 is the first member of the family
    let c = floor_family(&r(1, 2), 1).unwrap();
    let rep = enum_t(&r(1, 2), 100).unwrap();
    assert!(rep.index_triples.contains(&c.indices.to_u64().unwrap()));
}

#[test]
fn perturbation_keeps_family_values() {
    // inside [α, α + δ) all three floors stay put
    let alpha = r(2, 7);
    let c = floor_family(&alpha, 1).unwrap();
    let w: Vec<_> = c.indices.0.iter().map(|n| n * n).collect();
    let delta = w.iter().map(|w| stability_delta(&alpha, w).unwrap()).min().unwrap();
    let beta = alpha.clone() + delta * r(1, 2);
    for n in &c.indices.0 {
        assert_eq!(floor_mul_sq(&alpha, n).unwrap(), floor_mul_sq(&beta, n).unwrap());
    }
    let rec = floorsq::membership::verify_t_tuple(&beta, &c.indices).unwrap();
    assert_eq!(rec.values, c.values);
}

#[test]
fn appendix_families() {
    for n in [1, 3, 5] {
        assert!(ceil_family_odd(5, 4, n).unwrap().verified(), "q = 5, p = 4, n = {n}");
    }
    for p in [1, 2] {
        for n in [1, 3] {
            let c = ceil_family_odd(3, p, n).unwrap();
            assert!(!c.verified(), "q = 3, p = {p}, n = {n}");
            assert!(c.record.failing().count() > 0);
        }
    }
    for n in [4, 8] {
        assert!(ceil_family_intervals(&r(3, 8), n).unwrap().verified(), "n = {n}");
    }
}
