use modspec::algebra::{direct_sum, AlgebraError, LatticeBudget, Quotient, Shape, SubId};
use modspec::spectra::{Module, Side};
use modspec::topology::{build_space, decide_top, witness_holds, Variant};
use modspec::verify::{catalog, run_check, Ctx, Status};

fn module(s: &str) -> Module {
    Module::new(&s.parse().unwrap(), LatticeBudget::default()).unwrap()
}

fn named(m: &Module, name: &str) -> SubId {
    let lat = m.lattice();
    lat.ids()
        .find(|&i| lat.name(i) == name)
        .unwrap_or_else(|| panic!("no submodule {name}"))
}

fn names(m: &Module, ids: &[SubId]) -> Vec<String> {
    ids.iter().map(|&i| m.lattice().name(i)).collect()
}

#[test]
fn mixed_prime_module_is_not_coprime() {
    // Z/2 ⊕ Z/3 over Z/6 is Z/6 in canonical form
    let m = module("n=6;M=6");
    let lat = m.lattice();
    let top = m.top();
    let w = m.coprime_module_witness(top).unwrap();
    assert_eq!(w.divisor(), 2);
    for d in [2, 3] {
        let im = lat.ideal_times(&m.ring().ideal(d), top);
        assert!(im != 0 && im != top);
    }
    assert_eq!(lat.size(lat.ideal_times(&m.ring().ideal(3), top)), 2);
    assert!(!m.is_coprime_in(0, top));
    assert_eq!(lat.annihilator(named(&m, "<3>")).divisor(), 2);
}

#[test]
fn two_factor_spelling_is_rejected_with_the_canonical_form() {
    let err = "n=6;M=2,3".parse::<Shape>().unwrap_err();
    match err {
        AlgebraError::NotAChain { canonical, .. } => assert_eq!(canonical, vec![6]),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn planes_over_prime_fields() {
    for p in [2u64, 3, 5] {
        let m = module(&format!("n={p};M={p},{p}"));
        let lat = m.lattice();
        assert_eq!(lat.len() as u64, p + 3);
        assert_eq!(m.spec_s().len() as u64, p + 2);
        assert_eq!(m.spec_c().len() as u64, p + 2);
        assert!(m.is_coprime_module(m.top()));
        for side in [Side::Second, Side::Coprime] {
            let d = decide_top(&m, side, Variant::Full);
            assert!(!d.is_topology);
            assert!(witness_holds(&m, side, Variant::Full, d.witness.unwrap()));
            assert!(build_space(&m, side, Variant::Restricted).is_ok());
        }
        let s = m.structure();
        assert!(!s.multiplication && !s.min_property);
    }
}

#[test]
fn ring_spectra_for_twelve() {
    let m = module("n=12;M=12");
    assert_eq!(names(&m, m.spec_c().points()), ["<3>", "<2>"]);
    assert_eq!(names(&m, m.spec_s().points()), ["<6>", "<4>"]);
    assert_eq!(m.lattice().name(m.corad_s(m.top())), "<2>");
    assert_eq!(m.lattice().name(m.rad_c(0)), "<6>");
    let six = named(&m, "<6>");
    assert_eq!(m.spec_s().members(&m.variety(Side::Second, six)), [six]);
    let ass: Vec<u64> = m.associated_primes().iter().map(|i| i.divisor()).collect();
    assert_eq!(ass, [2, 3]);
    assert_eq!(m.lattice().annihilated_by(&m.ring().ideal(2)), six);
    assert_eq!(m.lattice().annihilator(m.top()).divisor(), 12);
}

#[test]
fn ring_spectrum_space_is_discrete() {
    let m = module("n=12;M=12");
    let s = build_space(&m, Side::Second, Variant::Full).unwrap();
    assert_eq!(s.closed_sets().len(), 4);
    assert!(s.properties().discrete);
}

#[test]
fn simple_modules() {
    let m = module("n=5;M=5");
    assert_eq!(m.spec_s().points(), [m.top()]);
    assert!(m.is_coprime_module(m.top()));
    let ass: Vec<u64> = m.associated_primes().iter().map(|i| i.divisor()).collect();
    assert_eq!(ass, [5]);
    assert_eq!(m.lattice().len(), 2);
}

#[test]
fn uniserial_chains_are_strong_everywhere() {
    let m = module("n=8;M=8");
    assert!(m.lattice().ids().skip(1).all(|l| m.is_strongly_hollow(l)));
    let m = module("n=9;M=9");
    let top = m.top();
    assert!(m.lattice().ids().filter(|&l| l != top).all(|l| m.is_strongly_irreducible(l)));
    let s = module("n=27;M=27");
    let st = s.structure();
    assert!(st.hollow && st.local && st.colocal && st.uniform);
}

#[test]
fn diagonal_line_is_hollow_but_not_strongly_hollow() {
    let m = module("n=2;M=2,2");
    let d = named(&m, "<(1,1)>");
    assert!(!m.is_strongly_hollow(d));
    assert!(m.is_completely_hollow(d));
    assert!(m.strongly_hollow_witness(d).is_some());
}

#[test]
fn zero_is_reducible_in_z6() {
    let m = module("n=6;M=6");
    assert!(!m.is_irreducible(0));
    let top = m.top();
    for l in m.lattice().maximals() {
        assert!(m.is_completely_irreducible(l));
        assert!(m.is_coprime_in(l, top));
    }
}

#[test]
fn structural_examples() {
    let z6 = module("n=6;M=6");
    let s = z6.structure();
    assert!(s.multiplication && s.comultiplication && s.min_property && s.complete_max_property);
    let plane = module("n=2;M=2,2");
    assert!(!plane.structure().multiplication);
    let z4 = module("n=4;M=4");
    assert!(z4.structure().complete_max_property);
    assert!(!z4.is_second(z4.top()));
    assert!(z4.is_coprime_in(named(&z4, "<2>"), z4.top()));
}

#[test]
fn quotients_and_sums() {
    let m = module("n=4;M=4");
    let q = Quotient::new(m.lattice(), named(&m, "<2>"));
    assert_eq!(q.factors(), [2]);
    let whole = Quotient::new(m.lattice(), m.top());
    assert!(whole.is_zero());
    let zero = Quotient::new(m.lattice(), 0);
    assert_eq!(zero.factors(), [4]);

    let a: Shape = "n=6;M=2".parse().unwrap();
    let b: Shape = "n=6;M=3".parse().unwrap();
    assert_eq!(direct_sum(&a, &b).unwrap().factors(), [6]);
    let a: Shape = "n=4;M=2".parse().unwrap();
    let b: Shape = "n=4;M=4".parse().unwrap();
    assert_eq!(direct_sum(&a, &b).unwrap().factors(), [2, 4]);
}

#[test]
fn single_check_outcomes() {
    let run = |id: &str, s: &str| {
        let c = catalog().iter().find(|c| c.id == id).unwrap();
        run_check(c, &Ctx::new(module(s))).status
    };
    assert_eq!(run("cor-r-s-c", "n=12;M=12"), Status::Pass);
    assert_eq!(run("thm-s-top-2", "n=2;M=2,2"), Status::Vacuous);
    assert_eq!(run("lem-cop-prime", "n=12;M=2,6"), Status::Pass);
    assert_eq!(run("thm-T2", "n=30;M=30"), Status::Pass);
    assert_eq!(run("prop-sum-less", "n=4;M=2,4"), Status::Vacuous);
}
