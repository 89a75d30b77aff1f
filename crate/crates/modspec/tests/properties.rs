use num_integer::gcd;
use proptest::prelude::*;

use modspec::algebra::{direct_sum, Bits, LatticeBudget, Ring, Shape};
use modspec::spectra::{Module, Side};
use modspec::topology::{build_space, decide_top, Variant};

/// A module ⊕ Z/d_i over Z/n with at most three factors and at most 64 elements.
fn shapes() -> impl Strategy<Value = Shape> {
    (2u64..=36, 1usize..=3, any::<[u8; 3]>()).prop_filter_map("order too large", |(n, k, picks)| {
        let ring = Ring::new(n).unwrap();
        let divs: Vec<u64> = ring.divisors().iter().copied().filter(|&d| d >= 2).collect();
        let mut chain: Vec<u64> = Vec::new();
        for &p in &picks[..k] {
            let allowed: Vec<u64> = divs
                .iter()
                .copied()
                .filter(|&d| chain.last().is_none_or(|&c| d % c == 0))
                .collect();
            chain.push(allowed[p as usize % allowed.len()]);
        }
        let order: u64 = chain.iter().product();
        if order > 64 {
            return None;
        }
        Shape::new(ring, chain).ok()
    })
}

fn module(s: &Shape) -> Module {
    Module::new(s, LatticeBudget::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lattice_operations_are_set_operations(s in shapes()) {
        let m = module(&s);
        let lat = m.lattice();
        prop_assert!(lat.verify_closure().is_ok());
        for a in lat.ids() {
            for b in lat.ids() {
                let meet = lat.set(a).intersection(lat.set(b));
                prop_assert_eq!(lat.set(lat.meet(a, b)), &meet);
                let j = lat.join(a, b);
                prop_assert!(lat.set(a).is_subset(lat.set(j)) && lat.set(b).is_subset(lat.set(j)));
                prop_assert_eq!(lat.leq(a, b), lat.set(a).is_subset(lat.set(b)));
            }
        }
    }

    #[test]
    fn colon_is_adjoint_to_ideal_multiplication(s in shapes()) {
        let m = module(&s);
        let lat = m.lattice();
        let top = lat.top();
        for k in lat.ids() {
            let colon = lat.colon(k, top);
            for i in m.ring().ideals() {
                prop_assert_eq!(colon.contains(&i), lat.leq(lat.ideal_times(&i, top), k));
            }
        }
        for i in m.ring().ideals() {
            for j in m.ring().ideals() {
                if i.contains(&j) {
                    prop_assert!(lat.leq(lat.ideal_times(&j, top), lat.ideal_times(&i, top)));
                }
            }
        }
    }

    #[test]
    fn quotient_orders_divide(s in shapes()) {
        let m = module(&s);
        let lat = m.lattice();
        for l in lat.ids() {
            let q = modspec::algebra::Quotient::new(lat, l);
            prop_assert_eq!(q.order() * lat.size(l), s.order());
        }
    }

    #[test]
    fn direct_sum_orders_multiply(a in shapes(), b in shapes()) {
        let n = a.ring().modulus();
        let b = Shape::new(Ring::new(n).unwrap(), b.factors().iter().map(|&d| gcd(d, n)).filter(|&d| d >= 2).collect::<Vec<_>>());
        if let Ok(b) = b {
            let sum = direct_sum(&a, &b).unwrap();
            prop_assert_eq!(sum.order(), a.order() * b.order());
            prop_assert!(sum.factors().windows(2).all(|w| w[1] % w[0] == 0));
        }
    }

    #[test]
    fn radicals_are_closure_operators(s in shapes()) {
        let m = module(&s);
        let lat = m.lattice();
        for l in lat.ids() {
            let c = m.corad_s(l);
            let r = m.rad_c(l);
            prop_assert!(lat.leq(c, l) && m.corad_s(c) == c);
            prop_assert!(lat.leq(l, r) && m.rad_c(r) == r);
            for k in lat.up(l).iter() {
                prop_assert!(lat.leq(c, m.corad_s(k)));
                prop_assert!(lat.leq(r, m.rad_c(k)));
            }
        }
        prop_assert_eq!(m.corad_s(0), 0);
        prop_assert_eq!(m.rad_c(lat.top()), lat.top());
    }

    #[test]
    fn fast_strong_tests_agree_with_pairwise(s in shapes()) {
        let m = module(&s);
        for l in m.lattice().ids() {
            prop_assert_eq!(m.is_strongly_hollow(l), m.is_strongly_hollow_pairwise(l));
            prop_assert_eq!(m.is_strongly_irreducible(l), m.is_strongly_irreducible_pairwise(l));
        }
    }

    #[test]
    fn varieties_turn_meets_and_joins_into_intersections(s in shapes()) {
        let m = module(&s);
        let lat = m.lattice();
        for a in lat.ids() {
            for b in lat.ids() {
                prop_assert_eq!(
                    m.variety(Side::Second, a).intersection(&m.variety(Side::Second, b)),
                    m.variety(Side::Second, lat.meet(a, b))
                );
                prop_assert_eq!(
                    m.variety(Side::Coprime, a).intersection(&m.variety(Side::Coprime, b)),
                    m.variety(Side::Coprime, lat.join(a, b))
                );
            }
        }
    }

    #[test]
    fn coprime_by_definition_and_by_quotient_agree(s in shapes()) {
        let m = module(&s);
        let top = m.top();
        for k in m.lattice().ids().filter(|&k| k != top) {
            prop_assert_eq!(m.is_coprime_in(k, top), m.is_coprime_by_quotient(k));
        }
    }

    #[test]
    fn restricted_families_always_give_spaces(s in shapes()) {
        let m = module(&s);
        for side in [Side::Second, Side::Coprime] {
            prop_assert!(build_space(&m, side, Variant::Restricted).is_ok());
            prop_assert_eq!(decide_top(&m, side, Variant::Full).is_topology, build_space(&m, side, Variant::Full).is_ok());
        }
    }

    #[test]
    fn closure_is_a_closure_operator(s in shapes()) {
        let m = module(&s);
        for side in [Side::Second, Side::Coprime] {
            let Ok(space) = build_space(&m, side, Variant::Full) else { continue };
            let n = space.len().min(10);
            for mask in 0..(1u64 << n) {
                let a = Bits::from_indices(space.len(), (0..n).filter(|i| mask >> i & 1 == 1));
                let c = space.closure(&a);
                prop_assert!(a.is_subset(&c));
                prop_assert_eq!(space.closure(&c), c.clone());
                prop_assert!(space.is_closed(&c));
                prop_assert_eq!(c, m.variety(side, m.hull(side, &a)));
            }
        }
    }
}
