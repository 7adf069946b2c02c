//! Inputs shared by the benchmarks in `benches/`.

use latpoly::fixtures::bruns_polytope;
use latpoly::{IntVector, LatticePolytope};

/// Lattice points of `[0, n]^3` plus the Bruns polytope vertices, as a hull
/// input with many redundant points.
pub fn cube_with_junk(n: i64) -> Vec<IntVector> {
    let mut pts = Vec::new();
    for x in 0..=n {
        for y in 0..=n {
            for z in 0..=n {
                pts.push(IntVector::from([x, y, z]));
            }
        }
    }
    pts.extend(bruns_polytope(2).expect("k >= 1").vertices().iter().copied());
    pts
}

/// Simplicial 3-cones `cone(e1, e2, (1, 1, k))`.
pub fn reeve_cone(k: i64) -> Vec<IntVector> {
    vec![IntVector::from([1, 0, 0]), IntVector::from([0, 1, 0]), IntVector::from([1, 1, k])]
}

pub fn largest_tabulated_3_polytope() -> LatticePolytope {
    latpoly::appendix::polytopes_3d()
        .into_iter()
        .max_by_key(|p| (p.num_lattice_points(), p.vertices().len()))
        .expect("table is nonempty")
}
