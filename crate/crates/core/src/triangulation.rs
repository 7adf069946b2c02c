//! Pulling triangulations on all lattice points, flagness, and a search for
//! regular unimodular flag triangulations.
//!
//! Pulling a point `p` replaces every cell containing `p` by the joins of
//! `p` with the facets of that cell not containing `p`. Each cell carries
//! every lattice point it contains, so after pulling all points in some
//! order every cell is a simplex without further lattice points. The result
//! is regular (a pulling refinement of the trivial subdivision).

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lattice::{combinations, det_of, relative_volume, IntVector};
use crate::polytope::{Hull, LatticePolytope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    /// All lattice points of the polytope, sorted.
    pub points: Vec<IntVector>,
    /// Sorted index sets, sorted.
    pub simplices: Vec<Vec<usize>>,
    /// Pulling order (indices into `points`) that produced the simplices.
    pub order: Vec<usize>,
}

impl Triangulation {
    pub fn dim(&self) -> usize {
        self.simplices.first().map_or(0, |s| s.len() - 1)
    }

    fn edges_of(&self, s: &[usize]) -> Vec<IntVector> {
        s[1..].iter().map(|&i| self.points[i] - self.points[s[0]]).collect()
    }

    /// Normalized volume of each simplex.
    pub fn simplex_volumes(&self) -> Vec<u64> {
        self.simplices
            .iter()
            .map(|s| {
                let e = self.edges_of(s);
                if e.len() == self.points[0].dim() {
                    det_of(&e).unsigned_abs() as u64
                } else {
                    relative_volume(&e).unsigned_abs() as u64
                }
            })
            .collect()
    }

    /// Unordered pairs of points joined by an edge of some simplex.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for s in &self.simplices {
            for i in 0..s.len() {
                for j in i + 1..s.len() {
                    out.insert((s[i], s[j]));
                }
            }
        }
        out
    }
}

/// Triangulates `p` by pulling the points `order` (indices into
/// `p.lattice_points()`) one after another.
pub fn pulling_triangulation(p: &LatticePolytope, order: &[usize]) -> Triangulation {
    let points = p.lattice_points().to_vec();
    assert!(p.is_full_dimensional(), "pulling needs a full-dimensional polytope");
    let mut cells: Vec<Vec<usize>> = vec![(0..points.len()).collect()];
    for &q in order {
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            if cell.len() == p.dim() + 1 || !cell.contains(&q) {
                next.push(cell);
                continue;
            }
            let pts: Vec<IntVector> = cell.iter().map(|&i| points[i]).collect();
            let hull = Hull::compute(&pts).expect("cells are full-dimensional");
            for f in &hull.facets {
                if f.is_tight(&points[q]) {
                    continue;
                }
                let mut apex: Vec<IntVector> = cell.iter().map(|&i| points[i]).filter(|x| f.is_tight(x)).collect();
                apex.push(points[q]);
                let join = Hull::compute(&apex).expect("joins are full-dimensional");
                // the join keeps every point of the cell it contains
                next.push(cell.iter().copied().filter(|&i| join.contains(&points[i])).collect());
            }
        }
        cells = next;
    }
    cells.sort();
    Triangulation { points, simplices: cells, order: order.to_vec() }
}

/// Every simplex has normalized volume 1.
pub fn is_unimodular_triangulation(t: &Triangulation) -> bool {
    t.simplices.iter().all(|s| s.len() == t.dim() + 1) && t.simplex_volumes().iter().all(|&v| v == 1)
}

/// Every clique of the 1-skeleton is a face of the complex generated by
/// `facets`.
pub fn is_flag_complex(facets: &[Vec<usize>]) -> bool {
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    let mut top = 0;
    for f in facets {
        let mut f = f.clone();
        f.sort();
        top = top.max(f.len());
        for k in 1..=f.len() {
            for sub in combinations(f.len(), k) {
                faces.insert(sub.iter().map(|&i| f[i]).collect());
            }
        }
    }
    let vertices: BTreeSet<usize> = facets.iter().flatten().copied().collect();
    let adjacent = |a: usize, b: usize| faces.contains(&if a < b { vec![a, b] } else { vec![b, a] });
    // grow cliques one vertex at a time, keeping them sorted
    let mut cliques: Vec<Vec<usize>> = faces.iter().filter(|f| f.len() == 2).cloned().collect();
    for size in 3..=top + 1 {
        let mut grown = Vec::new();
        for c in &cliques {
            for &v in vertices.range(c[c.len() - 1] + 1..) {
                if c.iter().all(|&u| adjacent(u, v)) {
                    let mut g = c.clone();
                    g.push(v);
                    if !faces.contains(&g) {
                        return false;
                    }
                    grown.push(g);
                }
            }
        }
        debug_assert!(grown.iter().all(|g| g.len() == size));
        cliques = grown;
    }
    true
}

pub fn is_flag(t: &Triangulation) -> bool {
    is_flag_complex(&t.simplices)
}

fn passes(t: &Triangulation) -> bool {
    is_unimodular_triangulation(t) && is_flag(t)
}

/// The order used by restart `r`: the identity for `r = 0`, otherwise a
/// shuffle drawn from a ChaCha stream keyed by `(seed, r)`.
pub fn restart_order(n: usize, seed: u64, r: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    if r > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(r);
        order.shuffle(&mut rng);
    }
    order
}

/// Searches pulling orders for a unimodular flag triangulation: the
/// lexicographic order first, then up to `budget` shuffled restarts. The
/// first success by restart index wins, independent of scheduling.
pub fn find_flag_unimodular_regular(p: &LatticePolytope, budget: u64, seed: u64) -> Option<(Triangulation, Vec<usize>)> {
    let n = p.num_lattice_points();
    const BATCH: u64 = 64;
    let mut start = 0u64;
    while start <= budget {
        let end = (start + BATCH).min(budget + 1);
        let hit = (start..end)
            .into_par_iter()
            .filter_map(|r| {
                let order = restart_order(n, seed, r);
                let t = pulling_triangulation(p, &order);
                passes(&t).then_some((r, t))
            })
            .min_by_key(|(r, _)| *r);
        if let Some((_, t)) = hit {
            let order = t.order.clone();
            return Some((t, order));
        }
        start = end;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly<const D: usize>(pts: &[[i64; D]]) -> LatticePolytope
    where
        IntVector: From<[i64; D]>,
    {
        LatticePolytope::from_coords(pts).unwrap()
    }

    fn cube() -> LatticePolytope {
        poly(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]])
    }

    fn index(p: &LatticePolytope, x: IntVector) -> usize {
        p.lattice_points().iter().position(|y| *y == x).unwrap()
    }

    #[test]
    fn unit_square() {
        let sq = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        for order in crate::lattice::permutations(4) {
            let t = pulling_triangulation(&sq, &order);
            assert_eq!(t.simplices.len(), 2);
            assert!(is_unimodular_triangulation(&t));
        }
    }

    #[test]
    fn staircase_cube() {
        let c = cube();
        let a = index(&c, IntVector::from([0, 0, 0]));
        let b = index(&c, IntVector::from([1, 1, 1]));
        let mut order = vec![a, b];
        order.extend((0..8).filter(|i| *i != a && *i != b));
        let t = pulling_triangulation(&c, &order);
        assert_eq!(t.simplices.len(), 6);
        assert!(is_unimodular_triangulation(&t));
        assert!(is_flag(&t));
        assert_eq!(t.simplex_volumes().iter().sum::<u64>(), c.normalized_volume());
    }

    #[test]
    fn triangle_of_side_two() {
        let tri = poly(&[[0, 0], [2, 0], [0, 2]]);
        let t = pulling_triangulation(&tri, &(0..tri.num_lattice_points()).collect::<Vec<_>>());
        assert_eq!(t.simplices.len(), 4);
        assert!(is_unimodular_triangulation(&t));
    }

    #[test]
    fn reeve_single_simplex_is_not_unimodular() {
        let r = poly(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 3]]);
        let t = pulling_triangulation(&r, &[0, 1, 2, 3]);
        assert_eq!(t.simplices.len(), 1);
        assert!(!is_unimodular_triangulation(&t));
    }

    #[test]
    fn flag_examples() {
        assert!(is_flag_complex(&[vec![0, 1, 2, 3]]));
        assert!(!is_flag_complex(&[vec![0, 1], vec![1, 2], vec![0, 2]]));
        // boundary of a tetrahedron: the 4-clique is not a face
        assert!(!is_flag_complex(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]));
        // octahedron boundary is flag
        assert!(is_flag_complex(&[
            vec![0, 2, 4], vec![0, 2, 5], vec![0, 3, 4], vec![0, 3, 5],
            vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 4], vec![1, 3, 5],
        ]));
    }

    #[test]
    fn search_examples() {
        let (t, order) = find_flag_unimodular_regular(&cube(), 1000, 7).unwrap();
        assert_eq!(pulling_triangulation(&cube(), &order), t);
        let tri = poly(&[[0, 0], [1, 0], [0, 1]]);
        let (t, order) = find_flag_unimodular_regular(&tri, 0, 0).unwrap();
        assert_eq!(order, vec![0, 1, 2]);
        assert_eq!(t.simplices, vec![vec![0, 1, 2]]);
        let reeve = poly(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 2]]);
        assert!(find_flag_unimodular_regular(&reeve, 20, 1).is_none());
    }

    #[test]
    fn restart_orders_are_reproducible_permutations() {
        let a = restart_order(10, 3, 5);
        assert_eq!(a, restart_order(10, 3, 5));
        let mut s = a.clone();
        s.sort();
        assert_eq!(s, (0..10).collect::<Vec<_>>());
        assert_eq!(restart_order(6, 9, 0), (0..6).collect::<Vec<_>>());
    }
}
