//! One line per acceptance criterion; exits nonzero if any criterion fails. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use modspec::algebra::{LatticeBudget, Shape, SubId};
use modspec::spectra::{Module, Side};
use modspec::topology::{build_space, decide_top, witness_holds, Variant};
use modspec::verify::{enumerate_instances, run_suite, InstanceBudget, Status, SuiteReport};

type Verdict = Result<String, String>;

fn module(s: &Shape) -> Module {
    Module::new(s, LatticeBudget::default()).expect("within budget")
}

fn cyclic_ring(n: u64) -> Module {
    module(&Shape::cyclic(n, n).unwrap())
}

/// The ideal dZ/n as a set of residues, computed directly.
fn ideal_set(n: u64, d: u64) -> BTreeSet<u64> {
    (0..n).map(|k| k * d % n).collect()
}

fn residues(m: &Module, id: SubId) -> BTreeSet<u64> {
    m.lattice()
        .elements(id)
        .into_iter()
        .map(|e| m.shape().coords(e)[0])
        .collect()
}

fn primes_dividing(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| n.is_multiple_of(p) && (2..p).all(|q| p % q != 0)).collect()
}

fn ring_spectrum(side: Side, generator: impl Fn(u64, u64) -> u64) -> Verdict {
    let start = Instant::now();
    for n in 2..=60u64 {
        let m = cyclic_ring(n);
        let got: BTreeSet<BTreeSet<u64>> = m.spectrum(side).points().iter().map(|&id| residues(&m, id)).collect();
        let want: BTreeSet<BTreeSet<u64>> = primes_dividing(n)
            .into_iter()
            .map(|p| ideal_set(n, generator(n, p)))
            .collect();
        if got != want {
            return Err(format!("n={n}: got {got:?}, want {want:?}"));
        }
        let extreme = match side {
            Side::Coprime => m.lattice().maximals(),
            Side::Second => m.lattice().simples(),
        };
        if extreme != m.spectrum(side).points() {
            return Err(format!("n={n}: spectrum differs from the extreme ideals"));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(1) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("n = 2..60 in {} ms", t.as_millis()))
}

fn criterion_1() -> Verdict {
    ring_spectrum(Side::Coprime, |_, p| p).map(|s| format!("Spec^c(Z/n) = {{pZ/n}} = Max(Z/n), {s}"))
}

fn criterion_2() -> Verdict {
    ring_spectrum(Side::Second, |n, p| n / p).map(|s| format!("Spec^s(Z/n) = {{(n/p)Z/n}} = minimal ideals, {s}"))
}

fn criterion_3() -> Verdict {
    let m = module(&"n=6;M=6".parse().unwrap());
    let top = m.top();
    if m.is_coprime_module(top) {
        return Err("Z/2 ⊕ Z/3 reported coprime".into());
    }
    let w = m.coprime_module_witness(top).ok_or("no witness")?;
    let whole: BTreeSet<u64> = (0..6).collect();
    // IM computed on residues, independent of the lattice
    let valid = |d: u64| {
        let im = ideal_set(6, d);
        im.len() > 1 && im != whole
    };
    if w.divisor() != 2 || !valid(2) || !valid(3) {
        return Err(format!("witness ({}) is not the least valid one", w.divisor()));
    }
    Ok("not coprime; least witness (2) valid, (3) also valid".into())
}

fn criterion_4() -> Verdict {
    for p in [2u64, 3] {
        let m = module(&format!("n={p};M={p},{p}").parse().unwrap());
        let lat = m.lattice();
        let nonzero: Vec<SubId> = lat.ids().filter(|&l| l != 0).collect();
        let proper: Vec<SubId> = lat.ids().filter(|&l| l != lat.top()).collect();
        if m.spec_s().points() != nonzero {
            return Err(format!("p={p}: some nonzero submodule is not second"));
        }
        if m.spec_c().points() != proper {
            return Err(format!("p={p}: some proper submodule is not coprime"));
        }
        for side in [Side::Second, Side::Coprime] {
            let d = decide_top(&m, side, Variant::Full);
            match d.witness {
                Some(w) if !d.is_topology && witness_holds(&m, side, Variant::Full, w) => {}
                _ => return Err(format!("p={p} {side:?}: full family not rejected with a valid witness")),
            }
            build_space(&m, side, Variant::Restricted).map_err(|e| format!("p={p} {side:?}: {e}"))?;
        }
    }
    Ok("(Z/p)^2, p = 2, 3: full families rejected with verified witnesses, restricted spaces valid".into())
}

fn tally(r: &SuiteReport, id: &str) -> (usize, usize, usize) {
    let c = r.summary.checks.iter().find(|c| c.id == id).expect("selected check");
    (c.pass, c.vacuous, c.fail)
}

fn criterion_5() -> Verdict {
    let ids = vec!["lem-closure-s".to_string(), "lem-closure-c".to_string()];
    let r = run_suite(&InstanceBudget::default(), Some(&ids)).map_err(|e| e.to_string())?;
    let (ps, _, fs) = tally(&r, "lem-closure-s");
    let (pc, _, fc) = tally(&r, "lem-closure-c");
    if fs + fc > 0 || !r.summary.skipped.is_empty() {
        return Err(format!("{} failures, {} skipped instances", fs + fc, r.summary.skipped.len()));
    }
    Ok(format!(
        "closure = V(H(A)) on {ps} top^s and V^c(J(A)) on {pc} top^c instances of {}",
        r.summary.instances
    ))
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let r = run_suite(&InstanceBudget::default(), None).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    let s = &r.summary;
    if s.fail > 0 {
        let first = r.results.iter().find(|x| x.status == Status::Fail).unwrap();
        return Err(format!("{} failures, first {} on {}", s.fail, first.check_id, first.instance));
    }
    if !s.uncovered.is_empty() {
        return Err(format!("never applicable without a reason: {:?}", s.uncovered));
    }
    if t > Duration::from_secs(300) {
        return Err(format!("took {t:?}"));
    }
    let unattainable: Vec<&str> = s.checks.iter().filter(|c| c.unattainable.is_some()).map(|c| c.id).collect();
    Ok(format!(
        "{} checks on {} instances: {} pass, {} vacuous, 0 fail; unattainable {:?}; {:.1} s",
        s.checks.len(),
        s.evaluated,
        s.pass,
        s.vacuous,
        unattainable,
        t.as_secs_f64()
    ))
}

fn criterion_7() -> Verdict {
    let ids: Vec<String> = ["prop-IM", "prop-IM+K", "thm-T2", "thm-c-T2"].iter().map(|s| s.to_string()).collect();
    let r = run_suite(&InstanceBudget::default(), Some(&ids)).map_err(|e| e.to_string())?;
    if r.summary.fail > 0 {
        return Err(format!("{} failures", r.summary.fail));
    }
    let mut pairs = 0usize;
    for inst in enumerate_instances(&InstanceBudget::default()).map_err(|e| e.to_string())? {
        let m = module(&inst.shape);
        let top = m.top();
        for k in m.lattice().ids().filter(|&k| k != top) {
            pairs += 1;
            if m.is_coprime_in(k, top) != m.is_coprime_by_quotient(k) {
                return Err(format!("{}: coprime routes disagree at {k}", inst.shape));
            }
        }
    }
    let applied: Vec<String> = ids
        .iter()
        .map(|id| {
            let (p, _, _) = tally(&r, id);
            format!("{id} {p}")
        })
        .collect();
    Ok(format!(
        "all routes agree ({}); definition and quotient agree on {pairs} (M, K)",
        applied.join(", ")
    ))
}

fn criterion_8() -> Verdict {
    let mut count = 0;
    for inst in enumerate_instances(&InstanceBudget::default()).map_err(|e| e.to_string())? {
        let m = module(&inst.shape);
        if !m.structure().comultiplication {
            continue;
        }
        count += 1;
        let lat = m.lattice();
        let by_ann: Vec<SubId> = lat.ids().filter(|&l| l != 0 && lat.annihilator(l).is_prime()).collect();
        if m.spec_s().points() != by_ann {
            return Err(format!("{}: Spec^s differs from prime annihilators", inst.shape));
        }
        let anns: BTreeSet<u64> = by_ann.iter().map(|&l| lat.annihilator(l).divisor()).collect();
        let ass: BTreeSet<u64> = m.associated_primes().iter().map(|i| i.divisor()).collect();
        if anns.len() != by_ann.len() || anns != ass {
            return Err(format!("{}: annihilator map is not a bijection onto Ass", inst.shape));
        }
        if by_ann.iter().any(|&l| lat.annihilated_by(&lat.annihilator(l)) != l) {
            return Err(format!("{}: (0:_M ann(L)) differs from L", inst.shape));
        }
    }
    Ok(format!("{count} comultiplication instances: Spec^s = prime-annihilator submodules ≅ Ass(M)"))
}

fn criterion_9() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_modspec"))
            .arg("verify")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!("exit codes {:?} {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("two default verify runs, {} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [(u32, fn() -> Verdict); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        match f() {
            Ok(msg) => println!("acceptance {n}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("acceptance {n}: FAIL  {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
