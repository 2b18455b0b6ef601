use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::graph::VertexSet;
use crate::props::check;

use super::brute::{brute_force_solve, search_sizes};
use super::{Answer, Instance, SolveError};

fn binomial(n: u64, r: u64) -> BigUint {
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Upper bound `C(p + q - 2, q - 1)` on the Ramsey number `R(p, q)`.
pub fn ramsey_bound(p: u64, q: u64) -> BigUint {
    assert!(p >= 1 && q >= 1, "Ramsey arguments must be positive");
    binomial(p + q - 2, q - 1)
}

/// `R^(1) = R(k, k)` and `R^(i) = R(R^(i-1), R^(i-1))`, both through
/// [`ramsey_bound`]. Panics once an intermediate value no longer fits in
/// `u64`, long before the result itself becomes uncomputable.
pub fn nested_ramsey_bound(ell: u64, k: u64) -> BigUint {
    assert!(
        ell >= 1 && k >= 1,
        "nested Ramsey arguments must be positive"
    );
    let mut r = ramsey_bound(k, k);
    for _ in 1..ell {
        let prev = r
            .to_u64()
            .filter(|&p| p <= u64::MAX / 2)
            .expect("nested Ramsey argument exceeds u64");
        r = ramsey_bound(prev, prev);
    }
    r
}

/// Whether `n >= R^(ell)(k, k)`, without materialising huge values.
fn at_least_nested_ramsey(n: usize, ell: u64, k: u64) -> bool {
    let n_big = BigUint::from(n);
    let mut r = ramsey_bound(k, k);
    for _ in 1..ell {
        if r > n_big {
            // The sequence never decreases.
            return false;
        }
        let prev = r.to_u64().expect("bounded by n");
        r = ramsey_bound(prev, prev);
    }
    n_big >= r
}

/// Which branch produced a [`HereditaryOutcome`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HereditaryPath {
    /// `k >= R(p, q)`: rejected without enumeration.
    RamseyNo,
    /// Only `k`-subsets were enumerated.
    SizeK,
    /// `n >= R^(ell)(k, k)`: a solution must exist; brute force located it.
    RamseyYes,
    /// No shortcut applied.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HereditaryOutcome {
    pub answer: Answer,
    pub path: HereditaryPath,
}

/// Solver for hereditary properties. The caller classifies the property:
/// sizes of the smallest excluded complete and edgeless graphs when both
/// exist, or `includes_both` when every complete and every edgeless graph
/// belongs to it. Any other combination falls back to brute force.
pub fn hereditary_solve(
    inst: &Instance,
    excluded_clique: Option<usize>,
    excluded_edgeless: Option<usize>,
    includes_both: bool,
) -> Result<HereditaryOutcome, SolveError> {
    if includes_both != (excluded_clique.is_none() && excluded_edgeless.is_none()) {
        return Err(SolveError::InconsistentCase);
    }
    let k = inst.k();
    match (excluded_clique, excluded_edgeless) {
        (Some(p), Some(q)) => {
            if BigUint::from(k) >= ramsey_bound(p as u64, q as u64) || k > inst.n() {
                return Ok(HereditaryOutcome {
                    answer: Answer::no(),
                    path: HereditaryPath::RamseyNo,
                });
            }
            Ok(HereditaryOutcome {
                answer: search_sizes(inst, [k]),
                path: HereditaryPath::SizeK,
            })
        }
        (None, None) => {
            let answer = brute_force_solve(inst);
            if at_least_nested_ramsey(inst.n(), inst.ell() as u64, k as u64) {
                if !answer.is_yes() {
                    return Err(SolveError::InconsistentCase);
                }
                return Ok(HereditaryOutcome {
                    answer,
                    path: HereditaryPath::RamseyYes,
                });
            }
            Ok(HereditaryOutcome {
                answer,
                path: HereditaryPath::BruteForce,
            })
        }
        _ => Ok(HereditaryOutcome {
            answer: brute_force_solve(inst),
            path: HereditaryPath::BruteForce,
        }),
    }
}

/// For properties preserved under adding vertices the whole vertex set is
/// optimal, so only the layers themselves are tested.
pub fn complement_hereditary_solve(inst: &Instance) -> Result<Answer, SolveError> {
    if !inst.pi().is_complement_hereditary() {
        return Err(SolveError::Unsupported {
            algorithm: "complement-hereditary",
            property: inst.pi().to_string(),
        });
    }
    if inst.k() > inst.n() {
        return Ok(Answer::no());
    }
    let layers: Vec<usize> = (0..inst.t())
        .filter(|&i| check(inst.graph().layer(i), inst.pi()))
        .take(inst.ell())
        .collect();
    if layers.len() < inst.ell() {
        return Ok(Answer::no());
    }
    Answer::yes(inst, VertexSet::full(inst.n()), layers)
}
