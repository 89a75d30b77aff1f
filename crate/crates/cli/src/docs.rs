//! Output documents. JSON refers to submodules by lattice index; text output uses generator names.

use std::fmt::Write as _;

use serde::Serialize;

use modspec::algebra::{Bits, SubId};
use modspec::spectra::{Module, Side, Structure};
use modspec::topology::{build_space, decide_top, Properties, TopologyError, Variant};
use modspec::verify::{catalog, run_check, Ctx, Status, SuiteReport, Witness};

/// Every JSON document starts with the tool, its version, the command and the instance echo.
#[derive(Serialize)]
pub struct Versioned<T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Versioned<T> {
    pub fn new(command: &'static str, instance: Option<String>, body: T) -> Self {
        Versioned {
            tool: env!("CARGO_BIN_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            instance,
            body,
        }
    }
}

fn versioned<T>(command: &'static str, m: &Module, body: T) -> Versioned<T> {
    Versioned::new(command, Some(m.shape().instance()), body)
}

fn generators(m: &Module, id: SubId) -> Vec<Vec<u64>> {
    let shape = m.shape();
    m.lattice()
        .generators(id)
        .into_iter()
        .map(|g| shape.coords(g))
        .collect()
}

fn names(m: &Module, ids: &[SubId]) -> String {
    let parts: Vec<String> = ids.iter().map(|&i| m.lattice().name(i)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
pub struct Member {
    pub id: SubId,
    pub size: usize,
    pub generators: Vec<Vec<u64>>,
}

#[derive(Serialize)]
pub struct LatticeDoc {
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
    pub order: usize,
    pub members: Vec<Member>,
    pub covers: Vec<(SubId, SubId)>,
}

pub fn lattice(m: &Module) -> Versioned<LatticeDoc> {
    let lat = m.lattice();
    let members = lat
        .ids()
        .map(|id| Member {
            id,
            size: lat.size(id),
            generators: generators(m, id),
        })
        .collect();
    versioned(
        "lattice",
        m,
        LatticeDoc {
            modulus: m.ring().modulus(),
            invariant_factors: m.shape().factors().to_vec(),
            order: m.shape().order(),
            members,
            covers: lat.covers(),
        },
    )
}

/// Hasse diagram: one node per submodule, one edge per cover, smaller below.
pub fn lattice_dot(m: &Module) -> String {
    let lat = m.lattice();
    let mut s = String::new();
    let _ = writeln!(s, "// {} {} {}", env!("CARGO_BIN_NAME"), env!("CARGO_PKG_VERSION"), m.shape().instance());
    s.push_str("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for id in lat.ids() {
        let _ = writeln!(s, "  {id} [label=\"{}\"];", lat.name(id));
    }
    for (a, b) in lat.covers() {
        let _ = writeln!(s, "  {a} -> {b};");
    }
    s.push_str("}\n");
    s
}

pub fn lattice_text(m: &Module) -> String {
    let lat = m.lattice();
    let mut s = format!("{}: {} submodules\n", m.shape().instance(), lat.len());
    for id in lat.ids() {
        let above: Vec<SubId> = lat.covers().into_iter().filter(|&(a, _)| a == id).map(|(_, b)| b).collect();
        let _ = writeln!(s, "  [{id}] {} order {} covered by {}", lat.name(id), lat.size(id), names(m, &above));
    }
    s
}

#[derive(Serialize)]
pub struct Point {
    pub id: SubId,
    pub generators: Vec<Vec<u64>>,
    pub annihilator: u64,
    pub colon: u64,
    pub strongly_hollow: bool,
    pub strongly_irreducible: bool,
}

#[derive(Serialize)]
pub struct SpectrumDoc {
    pub kind: &'static str,
    pub members: Vec<Point>,
}

pub fn spectrum_body(m: &Module, side: Side) -> SpectrumDoc {
    let lat = m.lattice();
    let members = m
        .spectrum(side)
        .points()
        .iter()
        .map(|&id| Point {
            id,
            generators: generators(m, id),
            annihilator: lat.annihilator(id).divisor(),
            colon: lat.colon(id, lat.top()).divisor(),
            strongly_hollow: m.is_strongly_hollow(id),
            strongly_irreducible: m.is_strongly_irreducible(id),
        })
        .collect();
    SpectrumDoc {
        kind: match side {
            Side::Second => "second",
            Side::Coprime => "coprime",
        },
        members,
    }
}

pub fn spectrum(m: &Module, side: Side) -> Versioned<SpectrumDoc> {
    versioned("spec", m, spectrum_body(m, side))
}

fn spectrum_lines(m: &Module, d: &SpectrumDoc, s: &mut String) {
    let _ = writeln!(s, "{} spectrum: {} members", d.kind, d.members.len());
    for p in &d.members {
        let _ = writeln!(
            s,
            "  {}  ann ({})  (L:M) ({})  strongly hollow {}  strongly irreducible {}",
            m.lattice().name(p.id),
            p.annihilator,
            p.colon,
            flag(p.strongly_hollow),
            flag(p.strongly_irreducible)
        );
    }
}

pub fn spectrum_text(m: &Module, d: &Versioned<SpectrumDoc>) -> String {
    let mut s = format!("{}\n", m.shape().instance());
    spectrum_lines(m, &d.body, &mut s);
    s
}

#[derive(Serialize)]
pub struct GenericPoints {
    pub closed_set: Vec<SubId>,
    pub generic: Vec<SubId>,
}

#[derive(Serialize)]
pub struct TopologyDoc {
    pub side: &'static str,
    pub variant: Variant,
    pub is_topology: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(SubId, SubId)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub points: Vec<SubId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_sets: Option<Vec<Vec<SubId>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<SubId>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_points: Option<Vec<GenericPoints>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sober: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<Properties>,
}

pub fn topology_body(m: &Module, side: Side, variant: Variant) -> TopologyDoc {
    let spec = m.spectrum(side);
    let decision = decide_top(m, side, variant);
    let mut doc = TopologyDoc {
        side: side.short(),
        variant,
        is_topology: decision.is_topology,
        witness: decision.witness,
        error: None,
        points: spec.points().to_vec(),
        closed_sets: None,
        components: None,
        generic_points: None,
        sober: None,
        properties: None,
    };
    match build_space(m, side, variant) {
        Ok(space) => {
            let ids = |b: &Bits| spec.members(b);
            doc.closed_sets = Some(space.closed_sets().iter().map(ids).collect());
            doc.components = Some(space.components().iter().map(ids).collect());
            doc.generic_points = Some(
                space
                    .irreducible_closed_sets()
                    .into_iter()
                    .map(|c| GenericPoints {
                        closed_set: ids(c),
                        generic: space.generic_points(c).into_iter().map(|p| spec.points()[p]).collect(),
                    })
                    .collect(),
            );
            doc.sober = Some(space.is_sober());
            doc.properties = Some(space.properties());
        }
        Err(TopologyError::NotATopology { .. }) => {}
        Err(e) => {
            doc.is_topology = false;
            doc.error = Some(e.to_string());
        }
    }
    doc
}

pub fn topology(m: &Module, side: Side, variant: Variant) -> Versioned<TopologyDoc> {
    versioned("topology", m, topology_body(m, side, variant))
}

fn topology_lines(m: &Module, d: &TopologyDoc, s: &mut String) {
    let variant = match d.variant {
        Variant::Full => "full",
        Variant::Restricted => "restricted",
    };
    let _ = writeln!(s, "side {} variant {variant}: points {}", d.side, names(m, &d.points));
    if let Some((a, b)) = d.witness {
        let lat = m.lattice();
        let _ = writeln!(
            s,
            "  not a topology: V({}) ∪ V({}) is not a variety",
            lat.name(a),
            lat.name(b)
        );
    }
    if let Some(e) = &d.error {
        let _ = writeln!(s, "  not a topology: {e}");
    }
    if let Some(closed) = &d.closed_sets {
        let _ = writeln!(s, "  closed sets:");
        for c in closed {
            let _ = writeln!(s, "    {}", names(m, c));
        }
    }
    if let Some(components) = &d.components {
        let _ = writeln!(s, "  components:");
        for c in components {
            let _ = writeln!(s, "    {}", names(m, c));
        }
    }
    if let Some(generic) = &d.generic_points {
        let _ = writeln!(s, "  generic points:");
        for g in generic {
            let _ = writeln!(s, "    {} of {}", names(m, &g.generic), names(m, &g.closed_set));
        }
    }
    if let (Some(p), Some(sober)) = (&d.properties, d.sober) {
        let _ = writeln!(
            s,
            "  connected {}  ultraconnected {}  T0 {}  T1 {}  T2 {}  discrete {}  sober {}",
            flag(p.connected),
            flag(p.ultraconnected),
            flag(p.t0),
            flag(p.t1),
            flag(p.t2),
            flag(p.discrete),
            flag(sober)
        );
    }
}

pub fn topology_text(m: &Module, d: &Versioned<TopologyDoc>) -> String {
    let mut s = format!("{}\n", m.shape().instance());
    topology_lines(m, &d.body, &mut s);
    s
}

#[derive(Serialize)]
pub struct PropsDoc {
    #[serde(flatten)]
    pub structure: Structure,
    /// Over a commutative ring completely coprime and coprime coincide.
    pub completely_coprime: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coprime_witness: Option<u64>,
    pub top_s: bool,
    pub top_c: bool,
    pub lattice_size: usize,
    pub socle: SubId,
    pub radical: SubId,
    pub corad_s: SubId,
    pub rad_c: SubId,
    pub associated_primes: Vec<u64>,
}

pub fn props_body(m: &Module) -> PropsDoc {
    let lat = m.lattice();
    let s = m.structure().clone();
    PropsDoc {
        completely_coprime: s.coprime,
        structure: s,
        coprime_witness: m.coprime_module_witness(lat.top()).map(|i| i.divisor()),
        top_s: decide_top(m, Side::Second, Variant::Full).is_topology,
        top_c: decide_top(m, Side::Coprime, Variant::Full).is_topology,
        lattice_size: lat.len(),
        socle: lat.socle(),
        radical: lat.radical(),
        corad_s: m.corad_s(lat.top()),
        rad_c: m.rad_c(0),
        associated_primes: m.associated_primes().iter().map(|i| i.divisor()).collect(),
    }
}

pub fn props(m: &Module) -> Versioned<PropsDoc> {
    versioned("props", m, props_body(m))
}

fn props_lines(m: &Module, d: &PropsDoc, s: &mut String) {
    let lat = m.lattice();
    let value = serde_json::to_value(&d.structure).unwrap_or_default();
    if let Some(map) = value.as_object() {
        for (k, v) in map {
            let _ = writeln!(s, "  {k}: {}", flag(v.as_bool().unwrap_or(false)));
        }
    }
    let _ = writeln!(s, "  completely_coprime: {}", flag(d.completely_coprime));
    if let Some(w) = d.coprime_witness {
        let _ = writeln!(s, "  not coprime: ({w})M is neither 0 nor M");
    }
    let _ = writeln!(s, "  top_s: {}  top_c: {}", flag(d.top_s), flag(d.top_c));
    let _ = writeln!(
        s,
        "  Soc {}  Rad {}  Corad^s(M) {}  Rad^c(0) {}",
        lat.name(d.socle),
        lat.name(d.radical),
        lat.name(d.corad_s),
        lat.name(d.rad_c)
    );
    let ass: Vec<String> = d.associated_primes.iter().map(|p| format!("({p})")).collect();
    let _ = writeln!(s, "  associated primes: {}", ass.join(", "));
}

pub fn props_text(m: &Module, d: &Versioned<PropsDoc>) -> String {
    let mut s = format!("{}: {} submodules\n", m.shape().instance(), d.body.lattice_size);
    props_lines(m, &d.body, &mut s);
    s
}

pub fn verify_text(r: &SuiteReport) -> String {
    let s = &r.summary;
    let mut out = format!(
        "{} instances ({} evaluated, {} skipped): {} pass, {} vacuous, {} fail\n",
        s.instances,
        s.evaluated,
        s.skipped.len(),
        s.pass,
        s.vacuous,
        s.fail
    );
    for c in &s.checks {
        let _ = write!(
            out,
            "{:<18} pass {:>4}  vacuous {:>4}  fail {:>4}  skipped {:>4}",
            c.id, c.pass, c.vacuous, c.fail, c.skipped
        );
        match c.unattainable {
            Some(reason) => {
                let _ = writeln!(out, "  never applicable: {reason}");
            }
            None if !c.covered => out.push_str("  never applicable\n"),
            None => out.push('\n'),
        }
        let _ = writeln!(out, "    {}", c.statement);
    }
    for sk in &s.skipped {
        let _ = writeln!(out, "skipped {}: {}", sk.instance, sk.reason);
    }
    for f in r.results.iter().filter(|x| x.status == Status::Fail) {
        let _ = writeln!(out, "FAIL {} on {}: {}", f.check_id, f.instance, witness_text(f.witness.as_ref()));
    }
    out
}

fn witness_text(w: Option<&Witness>) -> String {
    match w {
        None => String::new(),
        Some(w) => format!("{} (submodules {:?}, ideals {:?})", w.reason, w.submodules, w.ideals),
    }
}

#[derive(Serialize)]
pub struct CheckLine {
    pub id: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct ReportDoc {
    pub lattice_size: usize,
    pub props: PropsDoc,
    pub spec_s: SpectrumDoc,
    pub spec_c: SpectrumDoc,
    pub topologies: Vec<TopologyDoc>,
    pub checks: Vec<CheckLine>,
    pub failures: usize,
}

pub fn report(ctx: &Ctx) -> Versioned<ReportDoc> {
    let m = &ctx.m;
    let mut topologies = Vec::new();
    for side in [Side::Second, Side::Coprime] {
        for variant in [Variant::Full, Variant::Restricted] {
            topologies.push(topology_body(m, side, variant));
        }
    }
    let checks: Vec<CheckLine> = catalog()
        .iter()
        .map(|c| {
            let r = run_check(c, ctx);
            CheckLine {
                id: c.id,
                status: r.status,
                witness: r.witness,
            }
        })
        .collect();
    let failures = checks.iter().filter(|c| c.status == Status::Fail).count();
    versioned(
        "report",
        m,
        ReportDoc {
            lattice_size: m.lattice().len(),
            props: props_body(m),
            spec_s: spectrum_body(m, Side::Second),
            spec_c: spectrum_body(m, Side::Coprime),
            topologies,
            checks,
            failures,
        },
    )
}

pub fn report_text(m: &Module, d: &Versioned<ReportDoc>) -> String {
    let b = &d.body;
    let mut s = format!("{}: {} submodules\n\nproperties\n", m.shape().instance(), b.lattice_size);
    props_lines(m, &b.props, &mut s);
    s.push('\n');
    spectrum_lines(m, &b.spec_s, &mut s);
    spectrum_lines(m, &b.spec_c, &mut s);
    for t in &b.topologies {
        s.push('\n');
        topology_lines(m, t, &mut s);
    }
    let count = |st: Status| b.checks.iter().filter(|c| c.status == st).count();
    let _ = writeln!(
        s,
        "\nchecks: {} pass, {} vacuous, {} fail",
        count(Status::Pass),
        count(Status::Vacuous),
        b.failures
    );
    for c in b.checks.iter().filter(|c| c.status == Status::Fail) {
        let _ = writeln!(s, "  FAIL {}: {}", c.id, witness_text(c.witness.as_ref()));
    }
    s
}
