use std::collections::HashMap;

use crate::graph::{MultiLayerGraph, Vertex, VertexSet};
use crate::props::forbidden::for_each_combination;
use crate::props::structure::truss_peel;
use crate::props::{check, pi_refine, PropertySpec};

use super::{Answer, Instance, SolveError};

/// Order in which layers are scanned for a violated cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    Ascending,
    Descending,
}

/// Result of refining one layer selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRun {
    /// Maximal vertex sets satisfying the property in every layer, sorted.
    pub sets: Vec<VertexSet>,
    /// Largest number of cell splits in one partition, that is, along one
    /// choice at every branch.
    pub refinement_steps: usize,
    /// Cell splits summed over all distinct cells reached by branching.
    pub total_refinements: usize,
    /// Number of cells split by excluding one endpoint of an unsupported
    /// edge because refinement alone made no progress.
    pub branch_steps: usize,
}

impl PartitionRun {
    /// Without branching the output cells are pairwise disjoint.
    pub fn branched(&self) -> bool {
        self.branch_steps > 0
    }
}

/// Aggregate counters over all layer selections of one query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartitionStats {
    pub runs: usize,
    pub max_refinement_steps: usize,
    pub max_total_refinements: usize,
    pub total_branch_steps: usize,
}

pub fn partition_solve_all_layers(
    g: &MultiLayerGraph,
    pi: &PropertySpec,
) -> Result<PartitionRun, SolveError> {
    partition_solve_all_layers_with(g, pi, ScanOrder::Ascending)
}

/// Edges of `sub` that lie in no c-truss of `sub`.
fn unsupported_edges(sub: &crate::graph::SimpleGraph, c: usize) -> Vec<(Vertex, Vertex)> {
    let alive = truss_peel(sub, c - 2);
    sub.edges()
        .filter(|&(u, v)| !alive[u].contains(&v))
        .collect()
}

struct Refiner<'a> {
    g: &'a MultiLayerGraph,
    pi: &'a PropertySpec,
    layer_order: Vec<usize>,
    sets: Vec<VertexSet>,
    total_refinements: usize,
    branch_steps: usize,
    memo: HashMap<(Vec<Vertex>, Vec<Vertex>), usize>,
    /// Cells smaller than this are skipped.
    floor: usize,
    /// Raise `floor` to the largest set found so far.
    bounded: bool,
}

impl Refiner<'_> {
    /// Refines `cell`, keeping only sets that contain every vertex of
    /// `forced`, and returns the split count of its heaviest partition.
    fn refine(&mut self, cell: Vec<Vertex>, forced: Vec<Vertex>) -> Result<usize, SolveError> {
        if cell.len() < self.floor {
            return Ok(0);
        }
        let key = (cell, forced);
        if let Some(&steps) = self.memo.get(&key) {
            return Ok(steps);
        }
        let members = VertexSet::new(key.0.iter().copied());
        if self.sets.iter().any(|s| members.is_subset(s)) {
            return Ok(0);
        }
        let steps = self.refine_fresh(&key.0, &key.1)?;
        self.memo.insert(key, steps);
        Ok(steps)
    }

    fn refine_fresh(&mut self, cell: &[Vertex], forced: &[Vertex]) -> Result<usize, SolveError> {
        let violated: Vec<usize> = self
            .layer_order
            .iter()
            .copied()
            .filter(|&i| !check(&self.g.layer(i).induced(cell), self.pi))
            .collect();
        if violated.is_empty() {
            if self.bounded {
                self.floor = self.floor.max(cell.len());
            }
            self.sets.push(VertexSet::new(cell.iter().copied()));
            return Ok(0);
        }
        let mut stuck = Vec::new();
        for &i in &violated {
            let sub = self.g.layer(i).induced(cell);
            let parts = pi_refine(&sub, self.pi)?;
            if parts.len() == 1 {
                stuck.push(sub);
                continue;
            }
            self.total_refinements += 1;
            let mut steps = 1;
            for part in parts.cells() {
                let part: Vec<Vertex> = part.iter().map(|j| cell[j]).collect();
                if forced.iter().all(|v| part.binary_search(v).is_ok()) {
                    steps += self.refine(part, forced.to_vec())?;
                }
            }
            return Ok(steps);
        }
        let c = match *self.pi {
            PropertySpec::CTruss(c) => c,
            _ => unreachable!("refinement of {} always splits a violating cell", self.pi),
        };
        let edges: Vec<(Vertex, Vertex)> = stuck
            .iter()
            .flat_map(|sub| unsupported_edges(sub, c))
            .collect();
        let is_forced = |j: usize| forced.binary_search(&cell[j]).is_ok();
        let without = |drop: usize| -> Vec<Vertex> {
            cell.iter()
                .enumerate()
                .filter(|&(j, _)| j != drop)
                .map(|(_, &v)| v)
                .collect()
        };
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| is_forced(a) || is_forced(b)) {
            return match (is_forced(a), is_forced(b)) {
                (true, true) => Ok(0),
                (true, false) => self.refine(without(b), forced.to_vec()),
                _ => self.refine(without(a), forced.to_vec()),
            };
        }
        let &(a, b) = edges
            .first()
            .expect("a stuck truss cell has an unsupported edge");
        self.branch_steps += 1;
        let mut keep_a = forced.to_vec();
        keep_a.push(cell[a]);
        keep_a.sort_unstable();
        let dropped_a = self.refine(without(a), forced.to_vec())?;
        let dropped_b = self.refine(without(b), keep_a)?;
        Ok(dropped_a.max(dropped_b))
    }
}

/// Starts from the single cell `V` and, while some cell violates the
/// property in some layer, replaces it by its refinement in that layer.
/// A c-truss cell that refinement cannot split has an edge `ab` lying in
/// no c-truss; it is replaced by the alternatives "without `a`" and
/// "with `a`, without `b`", and non-maximal sets are dropped at the end.
///
/// Cells contained in an already found set are skipped, so the counters
/// cover only the cells actually refined.
pub fn partition_solve_all_layers_with(
    g: &MultiLayerGraph,
    pi: &PropertySpec,
    order: ScanOrder,
) -> Result<PartitionRun, SolveError> {
    run(g, pi, order, None)
}

/// With `floor` set, only sets of at least that size are sought and
/// smaller ones may be missing from the result.
fn run(
    g: &MultiLayerGraph,
    pi: &PropertySpec,
    order: ScanOrder,
    floor: Option<usize>,
) -> Result<PartitionRun, SolveError> {
    if !pi.is_partitionable() {
        return Err(SolveError::Unsupported {
            algorithm: "partition",
            property: pi.to_string(),
        });
    }
    let layer_order: Vec<usize> = match order {
        ScanOrder::Ascending => (0..g.t()).collect(),
        ScanOrder::Descending => (0..g.t()).rev().collect(),
    };
    let mut refiner = Refiner {
        g,
        pi,
        layer_order,
        sets: Vec::new(),
        total_refinements: 0,
        branch_steps: 0,
        memo: HashMap::new(),
        floor: floor.unwrap_or(0),
        bounded: floor.is_some(),
    };
    let refinement_steps = if g.n() > 0 {
        refiner.refine((0..g.n()).collect(), Vec::new())?
    } else {
        0
    };
    let mut sets = refiner.sets;
    sets.sort();
    sets.dedup();
    let all = sets.clone();
    sets.retain(|s| !all.iter().any(|o| o != s && s.is_subset(o)));
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(PartitionRun {
        sets,
        refinement_steps,
        total_refinements: refiner.total_refinements,
        branch_steps: refiner.branch_steps,
    })
}

/// Refines every `ell`-subset of layers and reports the largest set found,
/// ties broken by the earliest layer subset and then lexicographically.
/// Cells too small to beat `k` or the best set so far are not refined.
pub fn partition_solve(inst: &Instance) -> Result<Answer, SolveError> {
    best_over_layers(inst, true).map(|(a, _)| a)
}

/// As [`partition_solve`], refining every cell so that the counters
/// describe complete runs.
pub fn partition_solve_with_stats(inst: &Instance) -> Result<(Answer, PartitionStats), SolveError> {
    best_over_layers(inst, false)
}

fn best_over_layers(
    inst: &Instance,
    bounded: bool,
) -> Result<(Answer, PartitionStats), SolveError> {
    let (t, ell) = (inst.t(), inst.ell());
    let mut stats = PartitionStats::default();
    let mut best: Option<(VertexSet, Vec<usize>)> = None;
    let mut failure = None;
    for_each_combination(t, ell, |layers| {
        let restricted = match inst.graph().restrict_layers(layers) {
            Ok(g) => g,
            Err(e) => unreachable!("valid layer subset rejected: {e}"),
        };
        let floor = bounded.then(|| {
            best.as_ref()
                .map_or(inst.k(), |(b, _)| inst.k().max(b.len() + 1))
        });
        match run(&restricted, inst.pi(), ScanOrder::Ascending, floor) {
            Ok(run) => {
                stats.runs += 1;
                stats.max_refinement_steps = stats.max_refinement_steps.max(run.refinement_steps);
                stats.max_total_refinements =
                    stats.max_total_refinements.max(run.total_refinements);
                stats.total_branch_steps += run.branch_steps;
                if let Some(top) = run.sets.into_iter().next() {
                    if best.as_ref().is_none_or(|(b, _)| top.len() > b.len()) {
                        best = Some((top, layers.to_vec()));
                    }
                }
                false
            }
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let answer = match best {
        Some((x, layers)) if x.len() >= inst.k() => Answer::yes(inst, x, layers)?,
        _ => Answer::no(),
    };
    Ok((answer, stats))
}
