use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{factorize, Bits, LatticeBudget, Quotient, SubId};
use crate::spectra::{factors_coprime_witness, Module, Side, Structure};
use crate::topology::{build_space, decide_top, FiniteSpace, TopDecision, TopologyError, Variant};

/// Spectra up to this size have every subset tested; larger ones are sampled.
pub const EXHAUSTIVE_SUBSETS: usize = 12;
pub const SAMPLED_SUBSETS: usize = 200;

/// Everything the checks need about one module, computed on first use.
pub struct Ctx {
    pub m: Module,
    pub instance: String,
    top: [OnceCell<TopDecision>; 2],
    space: [OnceCell<Option<FiniteSpace>>; 2],
    restricted: [OnceCell<Result<FiniteSpace, TopologyError>>; 2],
    strong: [OnceCell<bool>; 2],
    subsets: [OnceCell<Vec<Bits>>; 2],
    varieties: [OnceCell<Vec<Bits>>; 2],
    quotients: OnceCell<Vec<Vec<u64>>>,
    summands: OnceCell<Vec<Vec<SubId>>>,
    quotient_modules: RefCell<HashMap<Vec<u64>, Rc<Module>>>,
}

fn idx(side: Side) -> usize {
    match side {
        Side::Second => 0,
        Side::Coprime => 1,
    }
}

impl Ctx {
    pub fn new(m: Module) -> Self {
        let instance = m.shape().instance();
        Ctx {
            m,
            instance,
            top: Default::default(),
            space: Default::default(),
            restricted: Default::default(),
            strong: Default::default(),
            subsets: Default::default(),
            varieties: Default::default(),
            quotients: OnceCell::new(),
            summands: OnceCell::new(),
            quotient_modules: RefCell::new(HashMap::new()),
        }
    }

    pub fn structure(&self) -> &Structure {
        self.m.structure()
    }

    pub fn decision(&self, side: Side) -> &TopDecision {
        self.top[idx(side)].get_or_init(|| decide_top(&self.m, side, Variant::Full))
    }

    pub fn is_top(&self, side: Side) -> bool {
        self.decision(side).is_topology
    }

    /// The full Zariski-type space, when the varieties form a topology.
    pub fn space(&self, side: Side) -> Option<&FiniteSpace> {
        self.space[idx(side)]
            .get_or_init(|| build_space(&self.m, side, Variant::Full).ok())
            .as_ref()
    }

    pub fn restricted_space(&self, side: Side) -> &Result<FiniteSpace, TopologyError> {
        self.restricted[idx(side)].get_or_init(|| build_space(&self.m, side, Variant::Restricted))
    }

    /// Spec^s ⊆ SH(M) on the second side, Spec^c ⊆ SI(M) on the coprime side.
    pub fn spectrum_is_strong(&self, side: Side) -> bool {
        *self.strong[idx(side)].get_or_init(|| {
            let spec = self.m.spectrum(side);
            spec.points().iter().all(|&l| match side {
                Side::Second => self.m.is_strongly_hollow(l),
                Side::Coprime => self.m.is_strongly_irreducible(l),
            })
        })
    }

    /// V(L) for every lattice member.
    pub fn variety(&self, side: Side, l: SubId) -> &Bits {
        &self.varieties[idx(side)].get_or_init(|| {
            self.m
                .lattice()
                .ids()
                .map(|x| self.m.variety(side, x))
                .collect()
        })[l]
    }

    /// Subsets of a spectrum to quantify over: all of them for small spectra, otherwise
    /// ∅, the singletons, the whole spectrum and a seeded random sample.
    pub fn subsets(&self, side: Side) -> &[Bits] {
        self.subsets[idx(side)].get_or_init(|| {
            let n = self.m.spectrum(side).len();
            if n <= EXHAUSTIVE_SUBSETS {
                return (0u64..1 << n).map(|mask| Bits::from_mask(n, mask)).collect();
            }
            let mut out = vec![Bits::new(n), Bits::full(n)];
            out.extend((0..n).map(|p| Bits::from_indices(n, [p])));
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed() ^ idx(side) as u64);
            for _ in 0..SAMPLED_SUBSETS {
                out.push(Bits::from_indices(n, (0..n).filter(|_| rng.gen::<bool>())));
            }
            out
        })
    }

    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed() ^ salt.rotate_left(32))
    }

    fn seed(&self) -> u64 {
        self.instance
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
    }

    /// Invariant factors of M/L for every lattice member (empty for L = M).
    pub fn quotient_factors(&self, l: SubId) -> &[u64] {
        &self.quotients.get_or_init(|| {
            self.m
                .lattice()
                .ids()
                .map(|x| Quotient::new(self.m.lattice(), x).factors().to_vec())
                .collect()
        })[l]
    }

    /// M/L is a nonzero coprime module, judged from its invariant factors.
    pub fn quotient_is_coprime(&self, l: SubId) -> bool {
        let f = self.quotient_factors(l);
        !f.is_empty() && factors_coprime_witness(self.m.ring(), f).is_none()
    }

    /// The lattice of M/L together with the image of `k ⊇ L` in it.
    pub fn quotient_image(&self, l: SubId, k: SubId) -> (Rc<Module>, SubId) {
        let lat = self.m.lattice();
        let q = Quotient::new(lat, l);
        let shape = q.shape().expect("proper submodule");
        let module = self
            .quotient_modules
            .borrow_mut()
            .entry(q.factors().to_vec())
            .or_insert_with(|| {
                Rc::new(Module::new(&shape, LatticeBudget::default()).expect("quotient fits the budget"))
            })
            .clone();
        let gens: Vec<usize> = lat
            .generators(k)
            .into_iter()
            .map(|g| shape.element(&q.project(g)))
            .collect();
        let image = module.lattice().generated_by(&gens);
        (module, image)
    }

    /// Direct-sum decompositions of M into submodules: the invariant-factor cyclic split,
    /// the primary cyclic split, and every split of the invariant factors into two blocks.
    pub fn summand_families(&self) -> &[Vec<SubId>] {
        self.summands.get_or_init(|| {
            let lat = self.m.lattice();
            let shape = self.m.shape();
            let k = shape.rank();
            let unit = |i: usize| {
                let mut c = vec![0; k];
                c[i] = 1;
                shape.element(&c)
            };
            let mut families = Vec::new();
            let cyclic: Vec<SubId> = (0..k).map(|i| lat.generated_by(&[unit(i)])).collect();
            if k >= 2 {
                families.push(cyclic.clone());
            }
            let primary: Vec<SubId> = (0..k)
                .flat_map(|i| {
                    let d = shape.factors()[i];
                    factorize(d)
                        .into_iter()
                        .map(move |(p, e)| (i, d / p.pow(e)))
                })
                .map(|(i, c)| lat.generated_by(&[shape.scale(c, unit(i))]))
                .collect();
            if primary.len() >= 2 && primary != cyclic {
                families.push(primary);
            }
            if k >= 3 {
                for mask in 1u32..(1 << (k - 1)) {
                    let (a, b): (Vec<usize>, Vec<usize>) = (0..k).partition(|&i| mask >> i & 1 == 1);
                    families.push(vec![
                        lat.join_all(a.iter().map(|&i| cyclic[i])),
                        lat.join_all(b.iter().map(|&i| cyclic[i])),
                    ]);
                }
            }
            families
        })
    }
}
