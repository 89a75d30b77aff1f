//! Zariski-type topologies on the second and coprime spectra.

mod space;

pub use space::{FiniteSpace, Properties};

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Bits, SubId};
use crate::spectra::{Module, Side};

/// Which variety family: all submodules as parameters, or the restricted ones
/// (annihilator-closed on the second side, ideal multiples IM on the coprime side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Provenance {
    pub side: Side,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("the {side:?} varieties of the {variant:?} family are not closed under finite unions (witness {witness:?})")]
    NotATopology {
        side: Side,
        variant: Variant,
        witness: (SubId, SubId),
    },
    #[error("closed-set family violates the topology axioms: {0}")]
    Axiom(String),
}

/// Whether a variety family is closed under pairwise unions, with the least failing parameter pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopDecision {
    pub is_topology: bool,
    pub witness: Option<(SubId, SubId)>,
}

/// Parameters of a variety family together with their varieties.
pub fn variety_family(m: &Module, side: Side, variant: Variant) -> Vec<(SubId, Bits)> {
    let params: Vec<SubId> = match variant {
        Variant::Full => m.lattice().ids().collect(),
        Variant::Restricted => m.restricted_parameters(side),
    };
    params.into_iter().map(|l| (l, m.variety(side, l))).collect()
}

/// Tests every parameter pair L1 ≤ L2 (by index) for V(L1) ∪ V(L2) being a member of the family.
pub fn decide_top(m: &Module, side: Side, variant: Variant) -> TopDecision {
    let family = variety_family(m, side, variant);
    let mut ids: HashMap<&Bits, usize> = HashMap::new();
    for (_, v) in &family {
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
    for (i, (l1, v1)) in family.iter().enumerate() {
        for (l2, v2) in &family[i..] {
            let key = (ids[v1], ids[v2]);
            let ok = *memo
                .entry(key)
                .or_insert_with(|| ids.contains_key(&v1.union(v2)));
            if !ok {
                return TopDecision {
                    is_topology: false,
                    witness: Some((*l1, *l2)),
                };
            }
        }
    }
    TopDecision {
        is_topology: true,
        witness: None,
    }
}

pub fn is_top_s(m: &Module) -> bool {
    decide_top(m, Side::Second, Variant::Full).is_topology
}

pub fn is_top_c(m: &Module) -> bool {
    decide_top(m, Side::Coprime, Variant::Full).is_topology
}

/// Re-checks a witness from `decide_top`: the union of the two varieties is not a variety of the family.
pub fn witness_holds(m: &Module, side: Side, variant: Variant, witness: (SubId, SubId)) -> bool {
    let union = m.variety(side, witness.0).union(&m.variety(side, witness.1));
    !variety_family(m, side, variant)
        .iter()
        .any(|(_, v)| *v == union)
}

/// The space on a spectrum whose closed sets are the varieties of the family, with ∅ and the
/// whole spectrum adjoined.
pub fn build_space(m: &Module, side: Side, variant: Variant) -> Result<FiniteSpace, TopologyError> {
    let decision = decide_top(m, side, variant);
    if let Some(witness) = decision.witness {
        return Err(TopologyError::NotATopology {
            side,
            variant,
            witness,
        });
    }
    FiniteSpace::new(
        m.spectrum(side).points().to_vec(),
        variety_family(m, side, variant).into_iter().map(|(_, v)| v),
        Some(Provenance { side, variant }),
    )
}
