//! Seeded random walks over the module constructors, used as fuzz input.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    carve, direct_sum, matlis_dual, quotient, regular_module, FiniteAlgebra, ModulePresentation,
};
use crate::fplin::Matrix;
use crate::latt::cyclic;

/// Largest module dimension a walk may produce. Beyond this the submodule
/// lattice of a module with trivial action outgrows the default cap.
pub const MAX_RANDOM_DIM: usize = 5;

#[derive(Clone, Debug)]
pub struct RandomModule {
    pub module: ModulePresentation,
    /// Constructor steps taken, in order.
    pub steps: Vec<String>,
    /// The walk only produced free modules `A^r`, which are progenerators.
    pub free: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Regular,
    SumRegular,
    SumSelf,
    CarveCyclic,
    QuotientCyclic,
    Dual,
    Rebase,
}

const STEPS: [Step; 7] = [
    Step::Regular,
    Step::SumRegular,
    Step::SumSelf,
    Step::CarveCyclic,
    Step::QuotientCyclic,
    Step::Dual,
    Step::Rebase,
];

/// Deterministic in `(a, seed, budget)`. A budget of `b` takes `b - 1`
/// constructor steps starting from the regular module.
pub fn random_module(a: &Arc<FiniteAlgebra>, seed: u64, budget: usize) -> ModulePresentation {
    random_module_traced(a, seed, budget).module
}

pub fn random_module_traced(a: &Arc<FiniteAlgebra>, seed: u64, budget: usize) -> RandomModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reg = regular_module(a);
    let mut cur = reg.clone();
    let mut free_rank = Some(1usize);
    let mut steps = vec!["regular".to_string()];
    for _ in 1..budget {
        let step = *STEPS.choose(&mut rng).expect("nonempty");
        let (next, rank) = match step {
            Step::Regular => (Some(reg.clone()), Some(1)),
            Step::SumRegular => (direct_sum(&[&cur, &reg]).ok(), free_rank.map(|r| r + 1)),
            Step::SumSelf => (direct_sum(&[&cur, &cur]).ok(), free_rank.map(|r| 2 * r)),
            Step::CarveCyclic => (
                random_cyclic(&cur, &mut rng)
                    .and_then(|s| carve(&cur, &s).ok())
                    .map(|(m, _)| m),
                None,
            ),
            Step::QuotientCyclic => (
                random_cyclic(&cur, &mut rng)
                    .and_then(|s| quotient(&cur, &s).ok())
                    .map(|(m, _)| m),
                None,
            ),
            Step::Dual => (matlis_dual(&cur).ok(), None),
            Step::Rebase => (
                random_invertible(&cur, &mut rng).and_then(|q| cur.change_basis(&q)),
                free_rank,
            ),
        };
        let Some(next) = next else { continue };
        if next.dim() == 0 || next.dim() > MAX_RANDOM_DIM || next.validate().is_err() {
            continue;
        }
        steps.push(format!("{step:?}").to_lowercase());
        cur = next;
        free_rank = rank;
    }
    let name = format!("rand({},{seed})", a.name());
    RandomModule {
        module: cur.renamed(name),
        steps,
        free: free_rank.is_some(),
    }
}

fn random_vector(m: &ModulePresentation, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let p = m.prime().get();
    (0..m.dim()).map(|_| rng.gen_range(0..p)).collect()
}

fn random_cyclic(m: &ModulePresentation, rng: &mut ChaCha8Rng) -> Option<super::Submodule> {
    let v = random_vector(m, rng);
    if v.iter().all(|&x| x == 0) {
        return None;
    }
    let s = cyclic(m, &v);
    (!s.is_full()).then_some(s)
}

fn random_invertible(m: &ModulePresentation, rng: &mut ChaCha8Rng) -> Option<Matrix> {
    let p = m.prime();
    let n = m.dim();
    (0..64).find_map(|_| {
        let flat: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..p.get())).collect();
        let q = Matrix::from_flat(p, n, n, &flat);
        (q.rank() == n).then_some(q)
    })
}

/// A uniformly random invertible matrix, for basis-independence checks.
pub fn random_change_of_basis(p: crate::fplin::Prime, n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let flat: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..p.get())).collect();
        let q = Matrix::from_flat(p, n, n, &flat);
        if q.rank() == n {
            return q;
        }
    }
}
