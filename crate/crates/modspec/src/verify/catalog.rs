use rand::Rng;
use serde::Serialize;

use crate::algebra::{Bits, Ideal, Lattice, SubId};
use crate::spectra::Side;
use crate::topology::{variety_family, Variant};

use super::{Ctx, Outcome, Witness};

/// One executable statement. `run` evaluates the hypotheses first and reports `Vacuous`
/// when they fail on the instance.
#[derive(Serialize)]
pub struct CheckDescriptor {
    pub id: &'static str,
    pub hypotheses: &'static [&'static str],
    pub statement: &'static str,
    #[serde(skip)]
    pub run: fn(&Ctx) -> Outcome,
}

impl std::fmt::Debug for CheckDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckDescriptor").field("id", &self.id).finish()
    }
}

/// Checks whose hypotheses no finite nonzero module can meet, with the reason.
pub fn unattainable_reason(id: &str) -> Option<&'static str> {
    match id {
        "lem-1n" => Some(
            "Spec^s ⊆ SH forces a unique simple submodule in each primary component, so M is cyclic, \
             Spec^s = S(M) and the space is discrete: no connected subset has two points",
        ),
        "lem-c-1n" => Some(
            "Spec^c ⊆ SI forces M/Rad(M) to be cyclic, so M is cyclic, Spec^c = Max(M) and the space \
             is discrete: no connected subset has two points",
        ),
        "prop-sum-less" => Some(
            "every finite nonzero module has a maximal submodule, which is coprime, so no summand is coprimeless",
        ),
        _ => None,
    }
}

macro_rules! check {
    ($id:literal, [$($h:literal),*], $stmt:literal, $f:ident) => {
        CheckDescriptor { id: $id, hypotheses: &[$($h),*], statement: $stmt, run: $f }
    };
}

static CATALOG: &[CheckDescriptor] = &[
    check!("prop-IM", [], "M coprime ⟺ ann(M) = ann(M/L) = (L:M) for all L ⪇ M ⟺ every L ⪇ M is coprime in M", prop_im),
    check!("prop-IM+K", [], "K coprime in M ⟺ M/K coprime ⟺ every L with K ⊆ L ⪇ M is coprime in M ⟺ M/L coprime for all such L", prop_im_k),
    check!("prop-c-exact", ["0 ≠ L ⪇ M"], "K coprime in M ⇒ K∩L coprime in L or (K+L)/L coprime in M/L", prop_c_exact),
    check!("lem-cop-prime", [], "L second ⇒ ann(L) prime; K coprime in M ⇒ (K:M) prime", lem_cop_prime),
    check!("prop-c-ann-1", ["multiplication"], "a multiplication module is coprime iff it is simple", prop_c_ann_1),
    check!("prop-c-ann-2", ["comultiplication"], "a comultiplication module is coprime iff its annihilator is prime", prop_c_ann_2),
    check!("cor-mult-comult", ["multiplication", "comultiplication"], "coprime ⟺ annihilator prime ⟺ simple", cor_mult_comult),
    check!("cor-com-s", ["comultiplication"], "Spec^s(M) = {L ≠ 0 : ann(L) prime} = S(M)", cor_com_s),
    check!("cor-com-s-mult", ["multiplication"], "Spec^c(M) = Max(M)", cor_com_s_mult),
    check!("cor-r-s-c", ["M = R"], "Spec^c(R) = Max(R) and Spec^s(R) = Min(R)", cor_r_s_c),
    check!("rem-gen-ass", ["comultiplication"], "L ↦ ann(L) is a bijection Spec^s(M) → Ass(M) with inverse p ↦ (0:_M p)", rem_gen_ass),
    check!("lem-coprime-div", [], "K coprime in M ⟺ q = (K:M) prime and M/K divisible over R/q", lem_coprime_div),
    check!("prop-div-2", [], "K ⪇ L coprime in M with L relatively divisible ⇒ K coprime in L; M coprime ⟺ every nonzero relatively divisible L is second", prop_div_2),
    check!("prop-sum-cop", ["nontrivial direct sum"], "⊕ M_i coprime ⇒ each M_i coprime; with equal annihilators, ⊕ M_i coprime ⟺ each M_i coprime", prop_sum_cop),
    check!("prop-sum-less", ["coprimeless summands"], "a direct sum of coprimeless modules is coprimeless", prop_sum_less),
    check!("ex-acc", [], "qM is coprime in M for every prime q with qM ≠ M, and such q exist", ex_acc),
    check!("lem-s-max", ["comultiplication"], "every nonzero L has a second submodule maximal under L", lem_s_max),
    check!("lem-s-prop-1", [], "V^s(0) = ∅ and V^s(M) = Spec^s(M)", lem_s_prop_1),
    check!("lem-s-prop-2", [], "∩ V^s(L_i) = V^s(∩ L_i) over all pairs, all triples (5000 seeded triples above 120 members) and the full family", lem_s_prop_2),
    check!("lem-s-prop-3", [], "V^s((0:I)) ∪ V^s((0:J)) = V^s((0:I) + (0:J)) = V^s((0:I∩J)) = V^s((0:IJ))", lem_s_prop_3),
    check!("lem-c-prop-1", [], "V^c(M) = ∅ and V^c(0) = Spec^c(M)", lem_c_prop_1),
    check!("lem-c-prop-2", [], "∩ V^c(L_i) = V^c(Σ L_i) over all pairs, all triples (5000 seeded triples above 120 members) and the full family", lem_c_prop_2),
    check!("lem-c-prop-3", [], "V^c(IM) ∪ V^c(JM) = V^c(IM ∩ JM) = V^c((I∩J)M) = V^c(IJM)", lem_c_prop_3),
    check!("thm-s-top-1", [], "the varieties of annihilator-closed submodules form a topology on Spec^s", thm_s_top_1),
    check!("thm-s-top-2", ["Spec^s ⊆ SH"], "M is a top^s-module", thm_s_top_2),
    check!("thm-s-top-2-eq", [], "Spec^s ⊆ SH ⟺ V^s(L1) ∪ V^s(L2) = V^s(L1 + L2) for all L1, L2", thm_s_top_2_eq),
    check!("thm-c-top-1", [], "the varieties of the submodules IM form a topology on Spec^c", thm_c_top_1),
    check!("thm-c-top-2", ["Spec^c ⊆ SI"], "M is a top^c-module", thm_c_top_2),
    check!("prop-com-prop", ["comultiplication"], "Spec^s ⊆ SH, second submodules are completely hollow, top^s, min-property", prop_com_prop),
    check!("prop-mul-prop", ["multiplication"], "Spec^c ⊆ SI, coprime submodules are completely irreducible, top^c, max-property", prop_mul_prop),
    check!("lem-closure-s", ["top^s"], "the closure of A in Z^s is V^s(H(A))", lem_closure_s),
    check!("lem-closure-c", ["top^c"], "the closure of A in Z^c is V^c(J(A))", lem_closure_c),
    check!("thm-11", ["top^s"], "L ↦ V^s(L) is an order-preserving bijection from {L : Corad(L) = L} onto the closed sets", thm_11),
    check!("thm-c-11", ["top^c"], "L ↦ V^c(L) is an order-reversing bijection from {L : Rad(L) = L} onto the closed sets", thm_c_11),
    check!("prop-duo-irr", ["top^s"], "A irreducible ⇒ H(A) second; under Spec^s ⊆ SH, A irreducible ⟺ H(A) second ⟺ H(A) nonzero strongly hollow; chains are irreducible", prop_duo_irr),
    check!("prop-c-irr", ["top^c", "completely distributive"], "A irreducible ⇒ J(A) coprime; under Spec^c ⊆ SI, A irreducible ⟺ J(A) coprime ⟺ J(A) strongly irreducible; chains are irreducible", prop_c_irr),
    check!("thm-corad-s", ["top^s"], "Spec^s irreducible ⇒ Corad^s(M) second; S(M) irreducible ⇒ Soc(M) second; equivalences under Spec^s ⊆ SH", thm_corad_s),
    check!("thm-corad-c", ["top^c", "completely distributive"], "Spec^c irreducible ⇒ Rad^c(M) coprime; Max(M) irreducible ⇒ Rad(M) coprime; equivalences under Spec^c ⊆ SI", thm_corad_c),
    check!("prop-max-irr", ["Spec^s ⊆ SH"], "K ↦ V^s(K) bijects Spec^s with the irreducible closed sets; maximal second submodules give the components", prop_max_irr),
    check!("prop-c-max-irr", ["completely distributive", "Spec^c ⊆ SI"], "K ↦ V^c(K) bijects Spec^c with the irreducible closed sets; minimal coprime submodules give the components", prop_c_max_irr),
    check!("cor-sober-s", ["Spec^s ⊆ SH"], "Z^s is sober", cor_sober_s),
    check!("cor-sober-c", ["completely distributive", "Spec^c ⊆ SI"], "Z^c is sober", cor_sober_c),
    check!("prop-uniform", ["top^s"], "M uniform ⟺ Z^s ultraconnected", prop_uniform),
    check!("thm-c-hollow", ["top^c"], "M hollow ⟺ Z^c ultraconnected", thm_c_hollow),
    check!("prop-it-irr", ["top^s", "every second submodule simple"], "min-property ⇒ discrete; unique simple ⟺ min-property and connected", prop_it_irr),
    check!("prop-irr-c", ["top^c", "every coprime submodule maximal"], "complete max-property ⇒ discrete; unique maximal ⟺ complete max-property and connected", prop_irr_c),
    check!("thm-colocal", ["S(M) = Spec^s ⊆ SH"], "M colocal ⟺ Z^s connected", thm_colocal),
    check!("thm-c-colocal", ["top^c", "complete max-property", "every coprime submodule maximal"], "M local ⟺ Z^c connected", thm_c_colocal),
    check!("lem-1n", ["Spec^s ⊆ SH", "connected subset of size ≥ 2"], "each member of the subset is comparable to another member", lem_1n),
    check!("lem-c-1n", ["Spec^c ⊆ SI", "connected subset of size ≥ 2"], "each member of the subset is comparable to another member", lem_c_1n),
    check!("lem-s-t1", ["top^s"], "L simple ⟺ L second with V^s(L) = {L} ⟺ {L} closed", lem_s_t1),
    check!("prop-c-pts", ["top^c"], "L maximal ⟺ L coprime with V^c(L) = {L} ⟺ {L} closed", prop_c_pts),
    check!("prop-T1", ["top^s"], "Spec^s = S(M) ⟺ Z^s is T1", prop_t1),
    check!("prop-c-T1", ["top^c"], "Spec^c = Max(M) ⟺ Z^c is T1", prop_c_t1),
    check!("thm-T2", ["top^s", "min-property"], "Spec^s = S(M) ⟺ discrete ⟺ T2 ⟺ T1", thm_t2),
    check!("thm-c-T2", ["top^c", "complete max-property"], "Spec^c = Max(M) ⟺ discrete ⟺ T2 ⟺ T1", thm_c_t2),
    check!("rem-s-strong", ["uniserial"], "every nonzero submodule is strongly hollow", rem_s_strong),
    check!("rem-s-strong-2", ["S(M) ⊆ SH"], "M has the min-property", rem_s_strong_2),
    check!("ex-strong", ["uniserial"], "every proper submodule is strongly irreducible", ex_strong),
    check!("ex-strong-2", [], "Spec^c ⊆ SI ⟺ V^c(L1) ∪ V^c(L2) = V^c(L1 ∩ L2) for all L1, L2", ex_strong_2),
    check!("ex-strong-3", ["Max(M) ⊆ SI"], "M has the max-property", ex_strong_3),
    check!("rem-corad-2", [], "Corad^s is deflationary, monotone and idempotent", rem_corad_2),
    check!("rem-rad-2", [], "Rad^c is inflationary, monotone and idempotent", rem_rad_2),
    check!("rem-rad-3", [], "Max(M) ⊆ Spec^c and V^c(L) ≠ ∅ for L ≠ M", rem_rad_3),
    check!("rem-simple-char", ["top^s"], "T0; closure{L} = V^s(L); X^s(L) = ∅ ⇒ Soc ⊆ L, conversely when Spec^s = S(M); V^s(L) = ∅ ⟺ L = 0", rem_simple_char),
    check!("rem-max-char", ["top^c"], "T0; X^c(Rm) form a basis; closure{L} = V^c(L); X^c(L) = ∅ ⇒ L ⊆ Rad(M), conversely when Spec^c = Max(M); V^c(L) = ∅ ⟺ L = M", rem_max_char),
    check!("restricted-s", ["comultiplication"], "the full and annihilator-closed variety families give the same closed sets", restricted_s),
    check!("restricted-c", ["multiplication"], "the full and ideal-multiple variety families give the same closed sets", restricted_c),
];

pub fn catalog() -> &'static [CheckDescriptor] {
    CATALOG
}

fn fail(reason: impl Into<String>, subs: impl IntoIterator<Item = SubId>) -> Outcome {
    Outcome::Fail(Witness {
        reason: reason.into(),
        submodules: subs.into_iter().collect(),
        ideals: Vec::new(),
    })
}

fn fail_ideals(reason: impl Into<String>, ideals: impl IntoIterator<Item = Ideal>) -> Outcome {
    Outcome::Fail(Witness {
        reason: reason.into(),
        submodules: Vec::new(),
        ideals: ideals.into_iter().map(|i| i.divisor()).collect(),
    })
}

fn verdict(applicable: bool) -> Outcome {
    if applicable {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

macro_rules! ensure {
    ($cond:expr, $reason:expr, $subs:expr) => {
        if !$cond {
            return fail($reason, $subs);
        }
    };
    ($cond:expr, $reason:expr) => {
        if !$cond {
            return fail($reason, []);
        }
    };
}

fn proper(lat: &Lattice) -> impl Iterator<Item = SubId> + '_ {
    lat.ids().filter(move |&l| l != lat.top())
}

fn nonzero(lat: &Lattice) -> impl Iterator<Item = SubId> + '_ {
    lat.ids().filter(|&l| l != 0)
}

fn is_simple(lat: &Lattice, l: SubId) -> bool {
    lat.down(l).count() == 2
}

fn is_maximal(lat: &Lattice, l: SubId) -> bool {
    lat.up(l).count() == 2
}

fn is_chain(lat: &Lattice, members: &[SubId]) -> bool {
    members
        .iter()
        .all(|&a| members.iter().all(|&b| lat.leq(a, b) || lat.leq(b, a)))
}

fn distinct_sorted(mut v: Vec<Bits>) -> Vec<Bits> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v.dedup();
    v
}

fn prop_im(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let top = lat.top();
    let coprime = m.is_coprime_module(top);
    let ann = lat.annihilator(top).divisor();
    let mut ann_bad = None;
    let mut coprime_bad = None;
    for l in proper(lat) {
        let ann_q = *c.quotient_factors(l).last().expect("nonzero quotient");
        ensure!(ann_q == lat.colon(l, top).divisor(), "ann(M/L) differs from (L:M)", [l]);
        if ann_bad.is_none() && ann_q != ann {
            ann_bad = Some(l);
        }
        if coprime_bad.is_none() && !m.spec_c().contains(l) {
            coprime_bad = Some(l);
        }
    }
    if coprime == ann_bad.is_none() && coprime == coprime_bad.is_none() {
        Outcome::Pass
    } else {
        fail(
            format!(
                "coprime {coprime}, annihilators agree {}, all proper coprime in M {}",
                ann_bad.is_none(),
                coprime_bad.is_none()
            ),
            ann_bad.into_iter().chain(coprime_bad),
        )
    }
}

fn prop_im_k(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let top = lat.top();
    let spec = m.spec_c();
    for k in proper(lat) {
        let def = spec.contains(k);
        let quotient = c.quotient_is_coprime(k);
        let overs: Vec<SubId> = lat.up(k).iter().filter(|&l| l != top).collect();
        let all_in = overs.iter().all(|&l| spec.contains(l));
        let all_quotients = overs.iter().all(|&l| c.quotient_is_coprime(l));
        ensure!(
            def == quotient && def == all_in && def == all_quotients,
            format!("routes disagree: definition {def}, M/K {quotient}, overmodules {all_in}, their quotients {all_quotients}"),
            [k]
        );
    }
    Outcome::Pass
}

fn prop_c_exact(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let top = lat.top();
    let multiples: Vec<SubId> = m.ring().ideals().map(|i| lat.ideal_times(&i, top)).collect();
    let cross_check = m.shape().order() <= 32;
    let mut applicable = false;
    for &k in m.spec_c().points() {
        for l in (1..top).filter(|&l| l != top) {
            applicable = true;
            let kl = lat.meet(k, l);
            let inner = kl != l && m.is_coprime_in(kl, l);
            let s = lat.join(k, l);
            // (K+L)/L coprime in M/L, read through the correspondence of submodules above L
            let outer = s != top
                && multiples
                    .iter()
                    .all(|&im| lat.leq(im, s) || lat.join(im, s) == top);
            if cross_check && s != top {
                let (q, image) = c.quotient_image(l, s);
                ensure!(
                    q.is_coprime_in(image, q.top()) == outer,
                    "quotient lattice disagrees with the correspondence",
                    [k, l]
                );
            }
            ensure!(inner || outer, "neither K∩L coprime in L nor (K+L)/L coprime in M/L", [k, l]);
        }
    }
    verdict(applicable)
}

fn lem_cop_prime(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    for &l in m.spec_s().points() {
        ensure!(lat.annihilator(l).is_prime(), "second submodule with non-prime annihilator", [l]);
    }
    for &k in m.spec_c().points() {
        ensure!(lat.colon(k, lat.top()).is_prime(), "coprime submodule with non-prime (K:M)", [k]);
    }
    verdict(!m.spec_s().is_empty() || !m.spec_c().is_empty())
}

fn prop_c_ann_1(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let mut applicable = false;
    for l in nonzero(lat).filter(|&l| m.is_multiplication_sub(l)) {
        applicable = true;
        ensure!(m.is_coprime_module(l) == is_simple(lat, l), "coprime differs from simple", [l]);
    }
    verdict(applicable)
}

fn prop_c_ann_2(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let mut applicable = false;
    for l in nonzero(lat).filter(|&l| m.is_comultiplication_sub(l)) {
        applicable = true;
        ensure!(
            m.is_coprime_module(l) == lat.annihilator(l).is_prime(),
            "coprime differs from prime annihilator",
            [l]
        );
    }
    verdict(applicable)
}

fn cor_mult_comult(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let mut applicable = false;
    for l in nonzero(lat).filter(|&l| m.is_multiplication_sub(l) && m.is_comultiplication_sub(l)) {
        applicable = true;
        let cop = m.is_coprime_module(l);
        ensure!(
            cop == lat.annihilator(l).is_prime() && cop == is_simple(lat, l),
            "coprime, prime annihilator and simple disagree",
            [l]
        );
    }
    verdict(applicable)
}

fn cor_com_s(c: &Ctx) -> Outcome {
    if !c.structure().comultiplication {
        return Outcome::Vacuous;
    }
    let m = &c.m;
    let lat = m.lattice();
    let by_ann: Vec<SubId> = nonzero(lat).filter(|&l| lat.annihilator(l).is_prime()).collect();
    ensure!(m.spec_s().points() == by_ann, "Spec^s differs from {L ≠ 0 : ann(L) prime}");
    ensure!(m.spec_s().points() == lat.simples(), "Spec^s differs from S(M)");
    Outcome::Pass
}

fn cor_com_s_mult(c: &Ctx) -> Outcome {
    if !c.structure().multiplication {
        return Outcome::Vacuous;
    }
    ensure!(c.m.spec_c().points() == c.m.lattice().maximals(), "Spec^c differs from Max(M)");
    Outcome::Pass
}

fn cor_r_s_c(c: &Ctx) -> Outcome {
    let m = &c.m;
    let ring = m.ring();
    let n = ring.modulus();
    if m.shape().factors() != [n] {
        return Outcome::Vacuous;
    }
    let lat = m.lattice();
    let top = lat.top();
    let sorted = |mut v: Vec<SubId>| {
        v.sort_unstable();
        v
    };
    let max = sorted(ring.primes().iter().map(|&p| lat.ideal_times(&ring.ideal(p), top)).collect());
    let min = sorted(ring.primes().iter().map(|&p| lat.ideal_times(&ring.ideal(n / p), top)).collect());
    ensure!(m.spec_c().points() == max, "Spec^c(R) differs from {pR}");
    ensure!(lat.maximals() == max, "Max(R) differs from {pR}");
    ensure!(m.spec_s().points() == min, "Spec^s(R) differs from {(n/p)R}");
    ensure!(lat.simples() == min, "Min(R) differs from {(n/p)R}");
    Outcome::Pass
}

fn rem_gen_ass(c: &Ctx) -> Outcome {
    if !c.structure().comultiplication {
        return Outcome::Vacuous;
    }
    let m = &c.m;
    let lat = m.lattice();
    let mut anns: Vec<Ideal> = Vec::new();
    for &l in m.spec_s().points() {
        let p = lat.annihilator(l);
        ensure!(lat.annihilated_by(&p) == l, "(0:_M ann(L)) differs from L", [l]);
        anns.push(p);
    }
    anns.sort_unstable();
    let before = anns.len();
    anns.dedup();
    ensure!(anns.len() == before, "two second submodules share an annihilator");
    if anns != m.associated_primes() {
        return fail_ideals("annihilators of Spec^s differ from Ass(M)", anns);
    }
    Outcome::Pass
}

fn lem_coprime_div(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    for k in proper(lat) {
        let q = lat.colon(k, lat.top());
        let rhs = q.is_prime() && m.is_divisible_quotient(k);
        ensure!(m.spec_c().contains(k) == rhs, "coprime differs from prime colon with divisible quotient", [k]);
    }
    Outcome::Pass
}

fn prop_div_2(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let rel: Vec<SubId> = lat.ids().filter(|&l| m.is_relatively_divisible(l)).collect();
    for &l in &rel {
        for &k in m.spec_c().points() {
            if k != l && lat.leq(k, l) {
                ensure!(m.is_coprime_in(k, l), "coprime in M but not in the relatively divisible L", [k, l]);
            }
        }
    }
    let all_second = rel.iter().filter(|&&l| l != 0).all(|&l| m.is_second(l));
    ensure!(m.is_coprime_module(lat.top()) == all_second, "coprime differs from relatively divisible ⇒ second");
    Outcome::Pass
}

fn prop_sum_cop(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let whole = m.is_coprime_module(lat.top());
    let families = c.summand_families();
    for fam in families {
        let sizes: usize = fam.iter().map(|&x| lat.size(x)).product();
        ensure!(
            lat.join_all(fam.iter().copied()) == lat.top() && sizes == m.shape().order(),
            "summands do not form a direct sum",
            fam.clone()
        );
        let parts = fam.iter().all(|&x| m.is_coprime_module(x));
        ensure!(!whole || parts, "coprime sum with a non-coprime summand", fam.clone());
        let ann = lat.annihilator(fam[0]);
        if fam.iter().all(|&x| lat.annihilator(x) == ann) {
            ensure!(whole == parts, "equal annihilators but coprimality differs", fam.clone());
        }
    }
    verdict(!families.is_empty())
}

fn prop_sum_less(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let coprimeless = |n: SubId| !lat.down(n).iter().any(|k| k != n && m.is_coprime_in(k, n));
    let mut applicable = false;
    for fam in c.summand_families() {
        if fam.iter().all(|&x| coprimeless(x)) {
            applicable = true;
            ensure!(m.spec_c().is_empty(), "sum of coprimeless summands has a coprime submodule", fam.clone());
        }
    }
    verdict(applicable)
}

fn ex_acc(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let top = lat.top();
    let mut found = false;
    for q in m.ring().prime_ideals() {
        let qm = lat.ideal_times(&q, top);
        if qm != top {
            found = true;
            if !m.is_coprime_in(qm, top) {
                return fail_ideals("qM is not coprime in M", [q]);
            }
        }
    }
    ensure!(found, "no prime q with qM ≠ M");
    ensure!(!m.spec_c().is_empty(), "Spec^c is empty");
    Outcome::Pass
}

fn lem_s_max(c: &Ctx) -> Outcome {
    if !c.structure().comultiplication {
        return Outcome::Vacuous;
    }
    let m = &c.m;
    let lat = m.lattice();
    let spec = m.spec_s();
    for l in nonzero(lat) {
        let under = spec.members(c.variety(Side::Second, l));
        let has_max = under
            .iter()
            .any(|&k| under.iter().all(|&j| j == k || !lat.leq(k, j)));
        ensure!(has_max, "no second submodule maximal under L", [l]);
    }
    Outcome::Pass
}

fn lem_s_prop_1(c: &Ctx) -> Outcome {
    let top = c.m.top();
    ensure!(c.variety(Side::Second, 0).is_empty(), "V^s(0) ≠ ∅");
    ensure!(*c.variety(Side::Second, top) == c.m.spec_s().full(), "V^s(M) ≠ Spec^s");
    Outcome::Pass
}

fn lem_c_prop_1(c: &Ctx) -> Outcome {
    let top = c.m.top();
    ensure!(c.variety(Side::Coprime, top).is_empty(), "V^c(M) ≠ ∅");
    ensure!(*c.variety(Side::Coprime, 0) == c.m.spec_c().full(), "V^c(0) ≠ Spec^c");
    Outcome::Pass
}

/// Families of size at most three are exhaustive up to this lattice size, sampled above it.
const EXHAUSTIVE_TRIPLES: usize = 120;
const SAMPLED_TRIPLES: usize = 5000;

fn families_law(c: &Ctx, side: Side, combine: impl Fn(&Lattice, SubId, SubId) -> SubId) -> Outcome {
    let lat = c.m.lattice();
    let n = lat.len();
    let v = |l| c.variety(side, l);
    for a in lat.ids() {
        for b in a..n {
            ensure!(v(a).intersection(v(b)) == *v(combine(lat, a, b)), "law fails on a pair", [a, b]);
        }
    }
    let triple = |a: SubId, b: SubId, d: SubId| {
        v(a).intersection(v(b)).intersection(v(d)) == *v(combine(lat, combine(lat, a, b), d))
    };
    if n <= EXHAUSTIVE_TRIPLES {
        for a in 0..n {
            for b in a..n {
                for d in b..n {
                    ensure!(triple(a, b, d), "law fails on a triple", [a, b, d]);
                }
            }
        }
    } else {
        let mut rng = c.rng(n as u64);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, d) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            ensure!(triple(a, b, d), "law fails on a triple", [a, b, d]);
        }
    }
    let mut all = Bits::full(c.m.spectrum(side).len());
    for l in lat.ids() {
        all.intersect_with(v(l));
    }
    let folded = lat.ids().fold(lat.ids().next().unwrap(), |acc, x| combine(lat, acc, x));
    ensure!(all == *v(folded), "law fails on the whole lattice");
    Outcome::Pass
}

fn lem_s_prop_2(c: &Ctx) -> Outcome {
    families_law(c, Side::Second, |lat, a, b| lat.meet(a, b))
}

fn lem_c_prop_2(c: &Ctx) -> Outcome {
    families_law(c, Side::Coprime, |lat, a, b| lat.join(a, b))
}

fn lem_s_prop_3(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let v = |l| c.variety(Side::Second, l);
    let ideals: Vec<Ideal> = m.ring().ideals().collect();
    for (x, i) in ideals.iter().enumerate() {
        for j in &ideals[x..] {
            let (a, b) = (lat.annihilated_by(i), lat.annihilated_by(j));
            let u = v(a).union(v(b));
            let ok = u == *v(lat.join(a, b))
                && u == *v(lat.annihilated_by(&i.intersection(j)))
                && u == *v(lat.annihilated_by(&i.product(j)));
            if !ok {
                return fail_ideals("annihilator varieties disagree", [*i, *j]);
            }
        }
    }
    Outcome::Pass
}

fn lem_c_prop_3(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    let top = lat.top();
    let v = |l| c.variety(Side::Coprime, l);
    let ideals: Vec<Ideal> = m.ring().ideals().collect();
    for (x, i) in ideals.iter().enumerate() {
        for j in &ideals[x..] {
            let (a, b) = (lat.ideal_times(i, top), lat.ideal_times(j, top));
            let u = v(a).union(v(b));
            let ok = u == *v(lat.meet(a, b))
                && u == *v(lat.ideal_times(&i.intersection(j), top))
                && u == *v(lat.ideal_times(&i.product(j), top));
            if !ok {
                return fail_ideals("ideal-multiple varieties disagree", [*i, *j]);
            }
        }
    }
    Outcome::Pass
}

fn thm_s_top_1(c: &Ctx) -> Outcome {
    match c.restricted_space(Side::Second) {
        Ok(_) => Outcome::Pass,
        Err(e) => fail(e.to_string(), []),
    }
}

fn thm_c_top_1(c: &Ctx) -> Outcome {
    match c.restricted_space(Side::Coprime) {
        Ok(_) => Outcome::Pass,
        Err(e) => fail(e.to_string(), []),
    }
}

fn thm_s_top_2(c: &Ctx) -> Outcome {
    if !c.spectrum_is_strong(Side::Second) {
        return Outcome::Vacuous;
    }
    let d = c.decision(Side::Second);
    ensure!(d.is_topology, "not a top^s-module", d.witness.map(|(a, b)| vec![a, b]).unwrap_or_default());
    Outcome::Pass
}

fn thm_c_top_2(c: &Ctx) -> Outcome {
    if !c.spectrum_is_strong(Side::Coprime) {
        return Outcome::Vacuous;
    }
    let d = c.decision(Side::Coprime);
    ensure!(d.is_topology, "not a top^c-module", d.witness.map(|(a, b)| vec![a, b]).unwrap_or_default());
    Outcome::Pass
}

fn union_law(c: &Ctx, side: Side) -> Outcome {
    let lat = c.m.lattice();
    let v = |l| c.variety(side, l);
    let mut bad = None;
    'outer: for a in lat.ids() {
        for b in a..lat.len() {
            let combined = match side {
                Side::Second => lat.join(a, b),
                Side::Coprime => lat.meet(a, b),
            };
            if v(a).union(v(b)) != *v(combined) {
                bad = Some((a, b));
                break 'outer;
            }
        }
    }
    let strong = c.spectrum_is_strong(side);
    if strong == bad.is_none() {
        Outcome::Pass
    } else {
        fail(
            format!("spectrum strong {strong}, union law {}", bad.is_none()),
            bad.map(|(a, b)| vec![a, b]).unwrap_or_default(),
        )
    }
}

fn thm_s_top_2_eq(c: &Ctx) -> Outcome {
    union_law(c, Side::Second)
}

fn ex_strong_2(c: &Ctx) -> Outcome {
    union_law(c, Side::Coprime)
}

fn prop_com_prop(c: &Ctx) -> Outcome {
    if !c.structure().comultiplication {
        return Outcome::Vacuous;
    }
    let m = &c.m;
    ensure!(c.spectrum_is_strong(Side::Second), "Spec^s ⊄ SH");
    for &l in m.spec_s().points() {
        ensure!(m.is_completely_hollow(l), "second submodule not completely hollow", [l]);
    }
    ensure!(c.is_top(Side::Second), "not a top^s-module");
    ensure!(c.structure().min_property, "no min-property");
    Outcome::Pass
}

fn prop_mul_prop(c: &Ctx) -> Outcome {
    if !c.structure().multiplication {
        return Outcome::Vacuous;
    }
    let m = &c.m;
    ensure!(c.spectrum_is_strong(Side::Coprime), "Spec^c ⊄ SI");
    for &l in m.spec_c().points() {
        ensure!(m.is_completely_irreducible(l), "coprime submodule not completely irreducible", [l]);
    }
    ensure!(c.is_top(Side::Coprime), "not a top^c-module");
    ensure!(c.structure().max_property, "no max-property");
    Outcome::Pass
}

fn closure_formula(c: &Ctx, side: Side) -> Outcome {
    if !c.is_top(side) {
        return Outcome::Vacuous;
    }
    let Some(space) = c.space(side) else {
        return fail("varieties are closed under unions but the space fails the axioms", []);
    };
    let spec = c.m.spectrum(side);
    for a in c.subsets(side) {
        let formula = c.variety(side, c.m.hull(side, a));
        ensure!(
            space.is_closed(formula) && a.is_subset(formula) && space.closure(a) == *formula,
            "closure differs from the variety of the hull",
            spec.members(a)
        );
    }
    Outcome::Pass
}

fn lem_closure_s(c: &Ctx) -> Outcome {
    closure_formula(c, Side::Second)
}

fn lem_closure_c(c: &Ctx) -> Outcome {
    closure_formula(c, Side::Coprime)
}

fn radical_bijection(c: &Ctx, side: Side) -> Outcome {
    if !c.is_top(side) {
        return Outcome::Vacuous;
    }
    let Some(space) = c.space(side) else {
        return fail("varieties are closed under unions but the space fails the axioms", []);
    };
    let m = &c.m;
    let lat = m.lattice();
    let fixed: Vec<SubId> = lat.ids().filter(|&l| m.radical(side, l) == l).collect();
    let images = distinct_sorted(fixed.iter().map(|&l| c.variety(side, l).clone()).collect());
    ensure!(images.len() == fixed.len(), "two radical-fixed submodules share a variety");
    ensure!(images == space.closed_sets(), "varieties of fixed submodules differ from the closed sets");
    for &a in &fixed {
        for &b in &fixed {
            let by_sets = match side {
                Side::Second => c.variety(side, a).is_subset(c.variety(side, b)),
                Side::Coprime => c.variety(side, b).is_subset(c.variety(side, a)),
            };
            ensure!(lat.leq(a, b) == by_sets, "order is not matched", [a, b]);
        }
    }
    Outcome::Pass
}

fn thm_11(c: &Ctx) -> Outcome {
    radical_bijection(c, Side::Second)
}

fn thm_c_11(c: &Ctx) -> Outcome {
    radical_bijection(c, Side::Coprime)
}

/// Hull membership in the spectrum: H(A) second, or J(A) coprime in M.
fn hull_in_spectrum(c: &Ctx, side: Side, h: SubId) -> bool {
    match side {
        Side::Second => c.m.is_second(h),
        Side::Coprime => c.m.spec_c().contains(h),
    }
}

fn hull_is_strong(c: &Ctx, side: Side, h: SubId) -> bool {
    match side {
        Side::Second => c.m.is_strongly_hollow(h),
        Side::Coprime => c.m.is_strongly_irreducible(h),
    }
}

fn irreducible_hulls(c: &Ctx, side: Side) -> Outcome {
    let Some(space) = c.space(side) else {
        return fail("varieties are closed under unions but the space fails the axioms", []);
    };
    let m = &c.m;
    let spec = m.spectrum(side);
    let strong = c.spectrum_is_strong(side);
    for a in c.subsets(side).iter().filter(|a| !a.is_empty()) {
        let members = spec.members(a);
        let irr = space.is_irreducible(a);
        let h = m.hull(side, a);
        let inside = hull_in_spectrum(c, side, h);
        ensure!(!irr || inside, "irreducible subset whose hull is outside the spectrum", members);
        if strong {
            ensure!(
                irr == inside && inside == hull_is_strong(c, side, h),
                "irreducible, hull in spectrum and hull strong disagree",
                members
            );
        }
        ensure!(!is_chain(m.lattice(), &members) || irr, "chain that is not irreducible", members);
    }
    Outcome::Pass
}

fn prop_duo_irr(c: &Ctx) -> Outcome {
    if !c.is_top(Side::Second) {
        return Outcome::Vacuous;
    }
    irreducible_hulls(c, Side::Second)
}

fn prop_c_irr(c: &Ctx) -> Outcome {
    if !c.is_top(Side::Coprime) || !c.structure().completely_distributive {
        return Outcome::Vacuous;
    }
    irreducible_hulls(c, Side::Coprime)
}

/// The whole spectrum and the spectrum's simple (resp. maximal) part, each against its hull.
fn radical_irreducibility(c: &Ctx, side: Side) -> Outcome {
    let Some(space) = c.space(side) else {
        return fail("varieties are closed under unions but the space fails the axioms", []);
    };
    let m = &c.m;
    let lat = m.lattice();
    let spec = m.spectrum(side);
    let (extreme, hull_of_extreme) = match side {
        Side::Second => (lat.simples(), lat.socle()),
        Side::Coprime => (lat.maximals(), lat.radical()),
    };
    ensure!(
        extreme.iter().all(|&x| spec.contains(x)),
        "simple or maximal submodule outside the spectrum"
    );
    let strong = c.spectrum_is_strong(side);
    let cases = [
        (spec.full(), m.radical(side, if side == Side::Second { lat.top() } else { 0 })),
        (spec.subset(extreme.iter().copied()), hull_of_extreme),
    ];
    for (a, h) in cases {
        let irr = space.is_irreducible(&a);
        let inside = hull_in_spectrum(c, side, h);
        ensure!(!irr || inside, "irreducible set whose radical is outside the spectrum", [h]);
        if strong {
            ensure!(
                irr == inside && inside == hull_is_strong(c, side, h),
                "irreducible, radical in spectrum and radical strong disagree",
                [h]
            );
        }
    }
    if m.shape().is_uniserial() {
        ensure!(space.is_irreducible(&spec.full()), "uniserial module with reducible spectrum");
    }
    Outcome::Pass
}

fn thm_corad_s(c: &Ctx) -> Outcome {
    if !c.is_top(Side::Second) {
        return Outcome::Vacuous;
    }
    radical_irreducibility(c, Side::Second)
}

fn thm_corad_c(c: &Ctx) -> Outcome {
    if !c.is_top(Side::Coprime) || !c.structure().completely_distributive {
        return Outcome::Vacuous;
    }
    radical_irreducibility(c, Side::Coprime)
}

/// Points ↔ irreducible closed sets, and the extreme points ↔ components.
fn point_correspondence(c: &Ctx, side: Side) -> Outcome {
    let Some(space) = c.space(side) else {
        return fail("strong spectrum but the varieties do not form a topology", []);
    };
    let m = &c.m;
    let lat = m.lattice();
    let pts = m.spectrum(side).points();
    let images = distinct_sorted(pts.iter().map(|&k| c.variety(side, k).clone()).collect());
    ensure!(images.len() == pts.len(), "two points share a variety");
    let irr: Vec<Bits> = space.irreducible_closed_sets().into_iter().cloned().collect();
    ensure!(images == irr, "varieties of points differ from the irreducible closed sets");
    let extreme: Vec<SubId> = pts
        .iter()
        .copied()
        .filter(|&k| {
            pts.iter().all(|&j| {
                j == k
                    || match side {
                        Side::Second => !lat.leq(k, j),
                        Side::Coprime => !lat.leq(j, k),
                    }
            })
        })
        .collect();
    let from_extreme = distinct_sorted(extreme.iter().map(|&k| c.variety(side, k).clone()).collect());
    ensure!(
        from_extreme == distinct_sorted(space.components()),
        "extreme points do not give the components",
        extreme
    );
    Outcome::Pass
}

fn prop_max_irr(c: &Ctx) -> Outcome {
    if !c.spectrum_is_strong(Side::Second) {
        return Outcome::Vacuous;
    }
    point_correspondence(c, Side::Second)
}

fn prop_c_max_irr(c: &Ctx) -> Outcome {
    if !c.structure().completely_distributive || !c.spectrum_is_strong(Side::Coprime) {
        return Outcome::Vacuous;
    }
    point_correspondence(c, Side::Coprime)
}

fn sober(c: &Ctx, side: Side) -> Outcome {
    match c.space(side) {
        Some(s) => {
            ensure!(s.is_sober(), "not sober");
            Outcome::Pass
        }
        None => fail("strong spectrum but the varieties do not form a topology", []),
    }
}

fn cor_sober_s(c: &Ctx) -> Outcome {
    if !c.spectrum_is_strong(Side::Second) {
        return Outcome::Vacuous;
    }
    sober(c, Side::Second)
}

fn cor_sober_c(c: &Ctx) -> Outcome {
    if !c.structure().completely_distributive || !c.spectrum_is_strong(Side::Coprime) {
        return Outcome::Vacuous;
    }
    sober(c, Side::Coprime)
}

fn prop_uniform(c: &Ctx) -> Outcome {
    let Some(space) = c.space(Side::Second) else {
        return Outcome::Vacuous;
    };
    ensure!(c.structure().uniform == space.properties().ultraconnected, "uniform differs from ultraconnected");
    Outcome::Pass
}

fn thm_c_hollow(c: &Ctx) -> Outcome {
    let Some(space) = c.space(Side::Coprime) else {
        return Outcome::Vacuous;
    };
    ensure!(c.structure().hollow == space.properties().ultraconnected, "hollow differs from ultraconnected");
    Outcome::Pass
}

fn prop_it_irr(c: &Ctx) -> Outcome {
    let lat = c.m.lattice();
    let simples = lat.simples();
    let Some(space) = c.space(Side::Second) else {
        return Outcome::Vacuous;
    };
    if c.m.spec_s().points() != simples {
        return Outcome::Vacuous;
    }
    let p = space.properties();
    let min = c.structure().min_property;
    ensure!(!min || p.discrete, "min-property but not discrete");
    ensure!((simples.len() == 1) == (min && p.connected), "unique simple differs from min-property and connected");
    Outcome::Pass
}

fn prop_irr_c(c: &Ctx) -> Outcome {
    let lat = c.m.lattice();
    let maximals = lat.maximals();
    let Some(space) = c.space(Side::Coprime) else {
        return Outcome::Vacuous;
    };
    if c.m.spec_c().points() != maximals {
        return Outcome::Vacuous;
    }
    let p = space.properties();
    let cmax = c.structure().complete_max_property;
    ensure!(!cmax || p.discrete, "complete max-property but not discrete");
    ensure!(
        (maximals.len() == 1) == (cmax && p.connected),
        "unique maximal differs from complete max-property and connected"
    );
    Outcome::Pass
}

fn thm_colocal(c: &Ctx) -> Outcome {
    if c.m.spec_s().points() != c.m.lattice().simples() || !c.spectrum_is_strong(Side::Second) {
        return Outcome::Vacuous;
    }
    let Some(space) = c.space(Side::Second) else {
        return fail("strong spectrum but the varieties do not form a topology", []);
    };
    ensure!(c.structure().colocal == space.properties().connected, "colocal differs from connected");
    Outcome::Pass
}

fn thm_c_colocal(c: &Ctx) -> Outcome {
    let Some(space) = c.space(Side::Coprime) else {
        return Outcome::Vacuous;
    };
    if !c.structure().complete_max_property || c.m.spec_c().points() != c.m.lattice().maximals() {
        return Outcome::Vacuous;
    }
    ensure!(c.structure().local == space.properties().connected, "local differs from connected");
    Outcome::Pass
}

fn connected_comparable(c: &Ctx, side: Side) -> Outcome {
    if !c.spectrum_is_strong(side) {
        return Outcome::Vacuous;
    }
    let Some(space) = c.space(side) else {
        return fail("strong spectrum but the varieties do not form a topology", []);
    };
    let lat = c.m.lattice();
    let spec = c.m.spectrum(side);
    let mut applicable = false;
    for a in c.subsets(side).iter().filter(|a| a.count() >= 2) {
        if !space.is_connected_subset(a) {
            continue;
        }
        applicable = true;
        let members = spec.members(a);
        let ok = members.iter().all(|&k| {
            members
                .iter()
                .any(|&j| j != k && (lat.leq(k, j) || lat.leq(j, k)))
        });
        ensure!(ok, "member comparable to no other member", members);
    }
    verdict(applicable)
}

fn lem_1n(c: &Ctx) -> Outcome {
    connected_comparable(c, Side::Second)
}

fn lem_c_1n(c: &Ctx) -> Outcome {
    connected_comparable(c, Side::Coprime)
}

/// Extreme submodules (simple, resp. maximal) are exactly the closed points.
fn closed_points(c: &Ctx, side: Side) -> Outcome {
    let Some(space) = c.space(side) else {
        return Outcome::Vacuous;
    };
    let m = &c.m;
    let lat = m.lattice();
    let spec = m.spectrum(side);
    let candidates: Vec<SubId> = match side {
        Side::Second => lat.ids().collect(),
        Side::Coprime => proper(lat).collect(),
    };
    for l in candidates {
        let extreme = match side {
            Side::Second => is_simple(lat, l),
            Side::Coprime => is_maximal(lat, l),
        };
        let (by_variety, by_closed) = match spec.position(l) {
            Some(p) => {
                let single = space.singleton(p);
                (*c.variety(side, l) == single, space.is_closed(&single))
            }
            None => (false, false),
        };
        ensure!(
            extreme == by_variety && extreme == by_closed,
            "extreme, one-point variety and closed point disagree",
            [l]
        );
    }
    Outcome::Pass
}

fn lem_s_t1(c: &Ctx) -> Outcome {
    closed_points(c, Side::Second)
}

fn prop_c_pts(c: &Ctx) -> Outcome {
    closed_points(c, Side::Coprime)
}

fn extreme_spectrum(c: &Ctx, side: Side) -> bool {
    let lat = c.m.lattice();
    match side {
        Side::Second => c.m.spec_s().points() == lat.simples(),
        Side::Coprime => c.m.spec_c().points() == lat.maximals(),
    }
}

fn t1_chain(c: &Ctx, side: Side) -> Outcome {
    let Some(space) = c.space(side) else {
        return Outcome::Vacuous;
    };
    ensure!(extreme_spectrum(c, side) == space.properties().t1, "T1 differs from the spectrum being extreme");
    Outcome::Pass
}

fn prop_t1(c: &Ctx) -> Outcome {
    t1_chain(c, Side::Second)
}

fn prop_c_t1(c: &Ctx) -> Outcome {
    t1_chain(c, Side::Coprime)
}

fn t2_chain(c: &Ctx, side: Side, independence: bool) -> Outcome {
    let Some(space) = c.space(side) else {
        return Outcome::Vacuous;
    };
    if !independence {
        return Outcome::Vacuous;
    }
    let p = space.properties();
    let e = extreme_spectrum(c, side);
    ensure!(
        e == p.discrete && e == p.t2 && e == p.t1,
        format!("extreme {e}, discrete {}, T2 {}, T1 {}", p.discrete, p.t2, p.t1)
    );
    Outcome::Pass
}

fn thm_t2(c: &Ctx) -> Outcome {
    t2_chain(c, Side::Second, c.structure().min_property)
}

fn thm_c_t2(c: &Ctx) -> Outcome {
    t2_chain(c, Side::Coprime, c.structure().complete_max_property)
}

fn rem_s_strong(c: &Ctx) -> Outcome {
    if !c.m.shape().is_uniserial() {
        return Outcome::Vacuous;
    }
    for l in nonzero(c.m.lattice()) {
        ensure!(c.m.is_strongly_hollow(l), "not strongly hollow", [l]);
    }
    Outcome::Pass
}

fn rem_s_strong_2(c: &Ctx) -> Outcome {
    if !c.m.lattice().simples().iter().all(|&s| c.m.is_strongly_hollow(s)) {
        return Outcome::Vacuous;
    }
    ensure!(c.structure().min_property, "no min-property");
    Outcome::Pass
}

fn ex_strong(c: &Ctx) -> Outcome {
    if !c.m.shape().is_uniserial() {
        return Outcome::Vacuous;
    }
    for l in proper(c.m.lattice()) {
        ensure!(c.m.is_strongly_irreducible(l), "not strongly irreducible", [l]);
    }
    Outcome::Pass
}

fn ex_strong_3(c: &Ctx) -> Outcome {
    if !c.m.lattice().maximals().iter().all(|&s| c.m.is_strongly_irreducible(s)) {
        return Outcome::Vacuous;
    }
    ensure!(c.structure().max_property, "no max-property");
    Outcome::Pass
}

fn rem_corad_2(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    for l in lat.ids() {
        let r = m.corad_s(l);
        ensure!(lat.leq(r, l), "Corad(L) ⊄ L", [l]);
        ensure!(m.corad_s(r) == r, "Corad not idempotent", [l]);
        for k in lat.up(l).iter() {
            ensure!(lat.leq(r, m.corad_s(k)), "Corad not monotone", [l, k]);
        }
    }
    Outcome::Pass
}

fn rem_rad_2(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    for l in lat.ids() {
        let r = m.rad_c(l);
        ensure!(lat.leq(l, r), "L ⊄ Rad(L)", [l]);
        ensure!(m.rad_c(r) == r, "Rad not idempotent", [l]);
        for k in lat.up(l).iter() {
            ensure!(lat.leq(r, m.rad_c(k)), "Rad not monotone", [l, k]);
        }
    }
    Outcome::Pass
}

fn rem_rad_3(c: &Ctx) -> Outcome {
    let m = &c.m;
    let lat = m.lattice();
    for l in lat.maximals() {
        ensure!(m.spec_c().contains(l), "maximal submodule not coprime", [l]);
    }
    for l in proper(lat) {
        ensure!(!c.variety(Side::Coprime, l).is_empty(), "V^c(L) = ∅ for a proper L", [l]);
    }
    Outcome::Pass
}

fn rem_simple_char(c: &Ctx) -> Outcome {
    let Some(space) = c.space(Side::Second) else {
        return Outcome::Vacuous;
    };
    let m = &c.m;
    let lat = m.lattice();
    let spec = m.spec_s();
    ensure!(space.properties().t0, "not T0");
    for (p, &k) in spec.points().iter().enumerate() {
        ensure!(space.closure(&space.singleton(p)) == *c.variety(Side::Second, k), "closure of a point", [k]);
    }
    let soc = lat.socle();
    let extreme = extreme_spectrum(c, Side::Second);
    for l in lat.ids() {
        let v = c.variety(Side::Second, l);
        let x_empty = *v == spec.full();
        ensure!(!x_empty || lat.leq(soc, l), "X^s(L) = ∅ but Soc ⊄ L", [l]);
        if extreme {
            ensure!(!lat.leq(soc, l) || x_empty, "Soc ⊆ L but X^s(L) ≠ ∅", [l]);
        }
        ensure!(v.is_empty() == (l == 0), "V^s(L) = ∅ differs from L = 0", [l]);
    }
    Outcome::Pass
}

fn rem_max_char(c: &Ctx) -> Outcome {
    let Some(space) = c.space(Side::Coprime) else {
        return Outcome::Vacuous;
    };
    let m = &c.m;
    let lat = m.lattice();
    let spec = m.spec_c();
    let top = lat.top();
    ensure!(space.properties().t0, "not T0");
    let cyclic: Vec<SubId> = (0..m.shape().order()).map(|e| lat.generated_by(&[e])).collect();
    for l in lat.ids() {
        let mut union = Bits::new(spec.len());
        for e in lat.set(l).iter() {
            union.union_with(&c.variety(Side::Coprime, cyclic[e]).complement());
        }
        ensure!(union == c.variety(Side::Coprime, l).complement(), "X^c(L) is not the union of X^c(Rm), m ∈ L", [l]);
    }
    for (p, &k) in spec.points().iter().enumerate() {
        ensure!(space.closure(&space.singleton(p)) == *c.variety(Side::Coprime, k), "closure of a point", [k]);
    }
    let rad = lat.radical();
    let extreme = extreme_spectrum(c, Side::Coprime);
    for l in lat.ids() {
        let v = c.variety(Side::Coprime, l);
        let x_empty = *v == spec.full();
        ensure!(!x_empty || lat.leq(l, rad), "X^c(L) = ∅ but L ⊄ Rad(M)", [l]);
        if extreme {
            ensure!(!lat.leq(l, rad) || x_empty, "L ⊆ Rad(M) but X^c(L) ≠ ∅", [l]);
        }
        ensure!(v.is_empty() == (l == top), "V^c(L) = ∅ differs from L = M", [l]);
    }
    Outcome::Pass
}

fn same_closed_sets(c: &Ctx, side: Side) -> bool {
    let closed = |variant| {
        distinct_sorted(
            variety_family(&c.m, side, variant)
                .into_iter()
                .map(|(_, v)| v)
                .collect(),
        )
    };
    closed(Variant::Full) == closed(Variant::Restricted)
}

fn restricted_s(c: &Ctx) -> Outcome {
    if !c.structure().comultiplication {
        return Outcome::Vacuous;
    }
    ensure!(same_closed_sets(c, Side::Second), "restricted family differs");
    Outcome::Pass
}

fn restricted_c(c: &Ctx) -> Outcome {
    if !c.structure().multiplication {
        return Outcome::Vacuous;
    }
    ensure!(same_closed_sets(c, Side::Coprime), "restricted family differs");
    Outcome::Pass
}
