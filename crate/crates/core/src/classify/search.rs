//! Enumeration of right-hand sides `b` in the chamber of a smooth fan.
//!
//! Translations are removed by pinning `b = 0` on the rays of the first
//! maximal cone. The remaining `rho = n - d` coordinates are determined by
//! the lengths of `rho` edges whose functionals are independent, so `b` is
//! enumerated through those lengths: each edge has length `1 + delta` with
//! `delta >= 0`, and the number of lattice points on edges bounds the total
//! excess `sum delta` by `max_points - #vertices`.

use num_traits::{One, Zero};

use super::chamber::ChamberModel;
use crate::lattice::{self, Rational};
use crate::polytope::LatticePolytope;

/// A realized right-hand side.
#[derive(Clone, Debug)]
pub struct RhsHit {
    pub b: Vec<i64>,
    pub polytope: LatticePolytope,
}

/// Coordinates of `b` that are not pinned.
fn free_coordinates(cm: &ChamberModel) -> Vec<usize> {
    let pinned = &cm.fan().cones()[0];
    (0..cm.num_facets()).filter(|i| !pinned.contains(i)).collect()
}

/// Edge functionals that are independent on the free coordinates, and the
/// inverse of the square system they form.
struct Basis {
    free: Vec<usize>,
    rinv: Vec<Vec<Rational>>,
}

fn basis(cm: &ChamberModel) -> Basis {
    let free = free_coordinates(cm);
    let rows = cm.restricted(&free);
    let rho = free.len();
    let mut chosen: Vec<usize> = Vec::new();
    for (e, _) in rows.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(e);
        let ints: Vec<Vec<i128>> = trial.iter().map(|&k| rows[k].iter().map(|x| x.to_integer()).collect()).collect();
        if lattice::rank_rows(ints) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == rho {
            break;
        }
    }
    assert_eq!(chosen.len(), rho, "edge lengths determine a polytope up to translation");
    let r: Vec<Vec<Rational>> = chosen.iter().map(|&k| rows[k].clone()).collect();
    // columns of R^-1, stored as rows of its transpose
    let cols: Vec<Vec<Rational>> = (0..rho)
        .map(|j| {
            let e: Vec<Rational> = (0..rho).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            lattice::solve_rational(&r, &e).expect("independent rows")
        })
        .collect();
    let rinv = (0..rho).map(|i| (0..rho).map(|j| cols[j][i]).collect()).collect();
    Basis { free, rinv }
}

/// Calls `visit` on every `delta` in `Z_{>=0}^len` with entries summing to
/// at most `total`.
fn for_each_excess(len: usize, total: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(buf: &mut Vec<usize>, len: usize, left: usize, visit: &mut impl FnMut(&[usize])) {
        if buf.len() == len {
            visit(buf);
            return;
        }
        for x in 0..=left {
            buf.push(x);
            go(buf, len, left - x, visit);
            buf.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, total, visit);
}

/// Candidate right-hand sides with all edge lengths positive and at most
/// `max_excess` lattice points on edges beyond the vertices. Returns the
/// candidates together with the number of `delta` vectors tried.
fn chamber_points(cm: &ChamberModel, max_excess: usize) -> (Vec<(Vec<i64>, usize)>, u64) {
    let bs = basis(cm);
    let rho = bs.free.len();
    let mut out = Vec::new();
    let mut tested = 0u64;
    for_each_excess(rho, max_excess, &mut |delta| {
        tested += 1;
        let mut b = vec![0i64; cm.num_facets()];
        for (i, &coord) in bs.free.iter().enumerate() {
            let x: Rational = bs.rinv[i]
                .iter()
                .zip(delta)
                .map(|(c, &dl)| *c * Rational::from_integer(1 + dl as i128))
                .sum();
            if !lattice::is_integral(&x) {
                return;
            }
            b[coord] = lattice::narrow(x.to_integer());
        }
        let lengths = cm.edge_lengths(&b);
        if lengths.iter().any(|&l| l < 1) {
            return;
        }
        let excess: i64 = lengths.iter().map(|l| l - 1).sum();
        if excess as usize <= max_excess {
            out.push((b, excess as usize));
        }
    });
    (out, tested)
}

/// All `P(A, b)` in the chamber with at most `max_points` lattice points, one
/// per `b` with the first cone pinned at the origin.
pub fn enumerate_rhs(cm: &ChamberModel, max_points: usize) -> Vec<LatticePolytope> {
    enumerate_rhs_counted(cm, max_points).0.into_iter().map(|h| h.polytope).collect()
}

/// As [`enumerate_rhs`], also returning the `b` vectors and the number of
/// candidates tested.
pub fn enumerate_rhs_counted(cm: &ChamberModel, max_points: usize) -> (Vec<RhsHit>, u64) {
    let v = cm.num_vertices();
    if v > max_points {
        return (Vec::new(), 0);
    }
    let (cands, tested) = chamber_points(cm, max_points - v);
    let hits = cands
        .into_iter()
        .filter_map(|(b, _)| {
            let p = cm.realize(&b).expect("chamber points give full-dimensional polytopes");
            (p.num_lattice_points() <= max_points).then_some(RhsHit { b, polytope: p })
        })
        .collect();
    (hits, tested)
}

/// Fewest lattice points among chamber polytopes of least total edge length,
/// searching total excess up to `cap`. `None` if the chamber has no lattice
/// point within the cap.
pub fn min_lattice_points_capped(cm: &ChamberModel, cap: usize) -> Option<usize> {
    for s in 0..=cap {
        let (cands, _) = chamber_points(cm, s);
        let best = cands
            .into_iter()
            .filter(|(_, e)| *e == s)
            .map(|(b, _)| cm.realize(&b).expect("chamber point").num_lattice_points())
            .min();
        if best.is_some() {
            return best;
        }
    }
    None
}

/// [`min_lattice_points_capped`] with a cap of 32.
pub fn min_lattice_points(cm: &ChamberModel) -> Option<usize> {
    min_lattice_points_capped(cm, 32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::chamber::chamber_model;
    use crate::classify::fans::{hirzebruch_fan, p2_fan};
    use crate::cones::{fan_is_smooth, is_smooth};

    #[test]
    fn p2_triangles() {
        let cm = chamber_model(&p2_fan()).unwrap();
        let mut counts: Vec<usize> = enumerate_rhs(&cm, 12).iter().map(|p| p.num_lattice_points()).collect();
        counts.sort();
        assert_eq!(counts, vec![3, 6, 10]);
    }

    #[test]
    fn square_fan_rectangles() {
        let cm = chamber_model(&hirzebruch_fan(0)).unwrap();
        let ps = enumerate_rhs(&cm, 12);
        let mut dims: Vec<(i64, i64)> = ps
            .iter()
            .map(|p| {
                let v = p.vertices();
                let w = v.iter().map(|x| x[0]).max().unwrap() - v.iter().map(|x| x[0]).min().unwrap();
                let h = v.iter().map(|x| x[1]).max().unwrap() - v.iter().map(|x| x[1]).min().unwrap();
                (w, h)
            })
            .collect();
        dims.sort();
        assert!(dims.contains(&(1, 1)) && dims.contains(&(1, 5)) && dims.contains(&(2, 3)) && dims.contains(&(3, 2)));
        assert!(!dims.contains(&(3, 3)));
    }

    #[test]
    fn emitted_polytopes_have_the_source_fan() {
        for f in [p2_fan(), hirzebruch_fan(1), hirzebruch_fan(2)] {
            let cm = chamber_model(&f).unwrap();
            let (hits, _) = enumerate_rhs_counted(&cm, 12);
            assert!(!hits.is_empty());
            for h in hits {
                assert!(is_smooth(&h.polytope));
                let nf = h.polytope.normal_fan().unwrap();
                assert_eq!(nf.normalized(), cm.fan().normalized());
                let mut realized = h.polytope.edge_lengths();
                let mut symbolic: Vec<u64> = cm.edge_lengths(&h.b).iter().map(|&l| l as u64).collect();
                realized.sort();
                symbolic.sort();
                assert_eq!(realized, symbolic);
            }
        }
    }

    #[test]
    fn too_small_budget_gives_nothing() {
        let cm = chamber_model(&hirzebruch_fan(3)).unwrap();
        assert!(enumerate_rhs(&cm, 6).is_empty());
        assert_eq!(min_lattice_points(&cm), Some(7));
    }

    #[test]
    fn minimum_examples() {
        assert_eq!(min_lattice_points(&chamber_model(&p2_fan()).unwrap()), Some(3));
        let cube = LatticePolytope::from_coords(&[
            [0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1],
        ])
        .unwrap();
        assert_eq!(min_lattice_points(&chamber_model(&cube.normal_fan().unwrap()).unwrap()), Some(8));
        let first = LatticePolytope::from_coords(&[[0, 0, 0], [0, 1, 0], [0, 0, 1], [7, 0, 0], [1, 1, 0], [1, 0, 1]]).unwrap();
        let fan = first.normal_fan().unwrap();
        assert!(fan_is_smooth(&fan));
        // chamber polytopes are {x, y, z >= 0, y + z <= h, x + 6(y + z) <= c}
        // with c - 6h >= 1, so the tabulated polytope (h = 1, c = 7) is least
        assert_eq!(min_lattice_points(&chamber_model(&fan).unwrap()), Some(12));
    }
}
