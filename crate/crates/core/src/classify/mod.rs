//! Classification of smooth lattice polytopes with few lattice points.
//!
//! Seed fans are closed under blow-ups breadth first. For every fan reached,
//! all polytopes with that normal fan and at most `max_points` lattice points
//! are recorded, and the results are merged up to integral equivalence.
//!
//! A polytope has at least as many lattice points as vertices, and blow-ups
//! add maximal cones, so fans with more than `max_points` cones are never
//! expanded. The smallest polytope of a fan can have more points than the
//! smallest polytope of one of its blow-ups, so fans without small polytopes
//! are still expanded by default (see [`Pruning`]).

pub mod chamber;
pub mod fans;
pub mod search;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cones::{fan_is_complete, fan_is_smooth};
use crate::equivalence::{canonical_form_smooth, CanonicalForm};
use crate::error::{Error, Result};

pub use chamber::{chamber_model, ChamberModel, Wall};
pub use fans::{
    appendix_fans, blow_down, blow_up_fan, fan_key, faces_of_dim_at_least_two, find_blow_down, hirzebruch_fan,
    minimal_smooth_2fans, p2_fan, FanKey, Provenance, SeedFan, SeedFanSet,
};
pub use search::{enumerate_rhs, enumerate_rhs_counted, min_lattice_points, min_lattice_points_capped, RhsHit};

/// Exploration limits.
#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Maximum number of fans to process before giving up.
    pub max_fans: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub pruning: Pruning,
}

/// When a fan's blow-ups are skipped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pruning {
    /// Only when the fan has more maximal cones than `max_points`. Sound:
    /// blow-ups only add vertices.
    #[default]
    VertexCount,
    /// Also when no polytope with this fan has at most `max_points` lattice
    /// points. Faster, but the minimum is not monotone under blow-ups.
    EmptyChamber,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { max_fans: 2_000_000, jobs: None, pruning: Pruning::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub form: CanonicalForm,
    pub num_vertices: usize,
    pub num_lattice_points: usize,
    /// Id of the least fan key (in processing order) producing the class.
    pub source_fan: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyStats {
    pub fans_explored: u64,
    pub b_vectors_tested: u64,
    pub pruned: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub dim: usize,
    pub max_points: usize,
    pub classes: Vec<ClassEntry>,
    pub stats: ClassifyStats,
    /// The fan budget ran out with unexplored fans left.
    pub incomplete: bool,
    /// Keys of every fan processed, in processing order.
    #[serde(skip)]
    pub explored: Vec<FanKey>,
}

impl ClassificationResult {
    /// Number of classes per vertex count, from the smallest vertex count
    /// seen up to the largest, zeros included.
    pub fn vertex_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        let lo = self.classes.iter().map(|c| c.num_vertices).min().unwrap_or(0);
        let hi = self.classes.iter().map(|c| c.num_vertices).max().unwrap_or(0);
        for v in lo..=hi {
            h.insert(v, 0);
        }
        for c in &self.classes {
            *h.entry(c.num_vertices).or_insert(0) += 1;
        }
        if self.classes.is_empty() {
            h.clear();
        }
        h
    }
}

struct FanOutcome {
    forms: Vec<CanonicalForm>,
    children: Vec<FanKey>,
    tested: u64,
    pruned: bool,
}

fn process(key: &FanKey, max_points: usize, pruning: Pruning) -> Result<FanOutcome> {
    let fan = key.fan();
    if fan.cones().len() > max_points {
        return Ok(FanOutcome { forms: Vec::new(), children: Vec::new(), tested: 0, pruned: true });
    }
    let cm = chamber_model(&fan)?;
    let (hits, tested) = enumerate_rhs_counted(&cm, max_points);
    if hits.is_empty() && pruning == Pruning::EmptyChamber {
        return Ok(FanOutcome { forms: Vec::new(), children: Vec::new(), tested, pruned: true });
    }
    let forms = hits.iter().map(|h| canonical_form_smooth(&h.polytope)).collect::<Result<Vec<_>>>()?;
    let fan = cm.fan();
    // blow-ups add maximal cones, so at the limit no child can qualify
    if fan.cones().len() >= max_points {
        return Ok(FanOutcome { pruned: forms.is_empty(), forms, children: Vec::new(), tested });
    }
    let children = faces_of_dim_at_least_two(fan)
        .iter()
        .map(|face| blow_up_fan(fan, face).map(|f| fan_key(&f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FanOutcome { pruned: forms.is_empty(), forms, children, tested })
}

/// Breadth-first closure of `seeds` under blow-ups, collecting every smooth
/// polytope with at most `max_points` lattice points whose normal fan is
/// reached.
pub fn classify(dim: usize, max_points: usize, seeds: &SeedFanSet, opts: ClassifyOptions) -> Result<ClassificationResult> {
    if !(2..=3).contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    for s in &seeds.fans {
        if s.fan.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: s.fan.dim() });
        }
        if !fan_is_smooth(&s.fan) || !fan_is_complete(&s.fan)? {
            return Err(Error::MalformedFan(format!("seed {} is not a complete smooth fan", s.name)));
        }
    }
    let run = || classify_inner(dim, max_points, seeds, opts);
    match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    }
}

fn classify_inner(dim: usize, max_points: usize, seeds: &SeedFanSet, opts: ClassifyOptions) -> Result<ClassificationResult> {
    let mut visited: BTreeSet<FanKey> = BTreeSet::new();
    let mut frontier: BTreeSet<FanKey> = seeds.fans.iter().map(|s| fan_key(&s.fan)).collect();
    let mut classes: BTreeMap<CanonicalForm, String> = BTreeMap::new();
    let mut stats = ClassifyStats::default();
    let mut explored = Vec::new();
    let mut incomplete = false;

    while !frontier.is_empty() {
        let mut level: Vec<FanKey> = std::mem::take(&mut frontier).into_iter().filter(|k| !visited.contains(k)).collect();
        let room = opts.max_fans.saturating_sub(explored.len());
        if level.len() > room {
            level.truncate(room);
            incomplete = true;
        }
        visited.extend(level.iter().cloned());
        let outcomes: Vec<FanOutcome> = level.par_iter().map(|k| process(k, max_points, opts.pruning)).collect::<Result<_>>()?;
        for (key, out) in level.iter().zip(outcomes) {
            stats.fans_explored += 1;
            stats.b_vectors_tested += out.tested;
            stats.pruned += out.pruned as u64;
            let id = key.id();
            for f in out.forms {
                classes.entry(f).or_insert_with(|| id.clone());
            }
            for c in out.children {
                if !visited.contains(&c) {
                    frontier.insert(c);
                }
            }
            explored.push(key.clone());
        }
        if incomplete {
            break;
        }
    }

    let mut entries: Vec<ClassEntry> = classes
        .into_iter()
        .map(|(form, source_fan)| {
            let p = form.polytope();
            ClassEntry { num_vertices: p.vertices().len(), num_lattice_points: p.num_lattice_points(), form, source_fan }
        })
        .collect();
    entries.sort_by(|a, b| {
        (a.num_lattice_points, a.num_vertices, &a.form).cmp(&(b.num_lattice_points, b.num_vertices, &b.form))
    });
    Ok(ClassificationResult { dim, max_points, classes: entries, stats, incomplete, explored })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_point_polygons() {
        let r = classify(2, 4, &minimal_smooth_2fans(1), ClassifyOptions::default()).unwrap();
        assert!(!r.incomplete);
        let counts: Vec<usize> = r.classes.iter().map(|c| c.num_lattice_points).collect();
        assert_eq!(counts, vec![3, 4]);
    }

    #[test]
    fn three_points_is_the_unit_triangle() {
        let r = classify(2, 3, &minimal_smooth_2fans(0), ClassifyOptions::default()).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].num_vertices, 3);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let r = classify(2, 12, &minimal_smooth_2fans(9), ClassifyOptions { max_fans: 3, jobs: Some(1), ..Default::default() }).unwrap();
        assert!(r.incomplete);
        assert_eq!(r.stats.fans_explored, 3);
    }

    #[test]
    fn wrong_dimension_seeds_are_rejected() {
        assert!(classify(3, 12, &minimal_smooth_2fans(1), ClassifyOptions::default()).is_err());
    }
}
