//! Vertex lists of the smooth lattice polygons and smooth 3-polytopes with at
//! most 12 lattice points, in the order they are usually tabulated.

use crate::lattice::IntVector;
use crate::polytope::LatticePolytope;

pub const POLYGONS: [&[[i64; 2]]; 41] = [
    &[[1, 0], [0, 0], [0, 1], [1, 1]],
    &[[0, 0], [0, 1], [2, 0], [2, 1]],
    &[[0, 0], [0, 1], [3, 0], [3, 1]],
    &[[0, 0], [0, 1], [4, 0], [4, 1]],
    &[[0, 0], [0, 1], [5, 0], [5, 1]],
    &[[2, 0], [0, 0], [0, 2], [2, 2]],
    &[[0, 2], [0, 0], [3, 0], [3, 2]],
    &[[1, 0], [0, 0], [0, 1], [3, 1]],
    &[[0, 0], [0, 1], [2, 0], [4, 1]],
    &[[0, 0], [0, 1], [3, 0], [5, 1]],
    &[[0, 0], [0, 1], [4, 0], [6, 1]],
    &[[0, 0], [1, 0], [5, 2], [0, 2]],
    &[[1, 0], [0, 0], [0, 1], [4, 1]],
    &[[0, 0], [0, 1], [2, 0], [5, 1]],
    &[[0, 0], [0, 1], [3, 0], [6, 1]],
    &[[1, 0], [0, 0], [0, 1], [5, 1]],
    &[[0, 0], [0, 1], [2, 0], [6, 1]],
    &[[0, 0], [0, 1], [3, 0], [7, 1]],
    &[[1, 0], [0, 0], [0, 1], [6, 1]],
    &[[0, 0], [0, 1], [2, 0], [7, 1]],
    &[[1, 0], [0, 0], [0, 1], [7, 1]],
    &[[0, 0], [0, 1], [2, 0], [8, 1]],
    &[[1, 0], [0, 0], [0, 1], [8, 1]],
    &[[1, 0], [0, 0], [0, 1], [9, 1]],
    &[[0, 1], [1, 0], [0, 0]],
    &[[0, 0], [2, 0], [0, 2]],
    &[[0, 0], [3, 0], [0, 3]],
    &[[1, 0], [0, 1], [0, 2], [2, 0]],
    &[[2, 0], [0, 2], [0, 3], [3, 0]],
    &[[1, 0], [0, 1], [0, 3], [3, 0]],
    &[[1, 1], [3, 0], [0, 2], [0, 4], [4, 0]],
    &[[4, 1], [0, 3], [0, 2], [3, 0], [1, 1], [4, 0], [1, 3], [3, 2]],
    &[[0, 3], [0, 2], [3, 0], [1, 1], [4, 0], [1, 3]],
    &[[2, 0], [0, 1], [1, 0], [0, 3], [2, 1]],
    &[[2, 0], [0, 1], [1, 0], [0, 4], [2, 2]],
    &[[0, 2], [1, 0], [0, 1], [2, 0], [2, 1], [1, 2]],
    &[[0, 3], [2, 0], [0, 2], [3, 0], [3, 1], [1, 3]],
    &[[0, 3], [1, 0], [0, 1], [3, 0], [3, 1], [1, 3]],
    &[[0, 0], [1, 0], [0, 4], [1, 3]],
    &[[2, 0], [0, 0], [0, 4], [2, 2]],
    &[[0, 0], [1, 0], [0, 5], [1, 4]],
];

pub const POLYTOPES_3D: [&[[i64; 3]]; 33] = [
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [7, 0, 0], [1, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [6, 0, 0], [1, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [6, 0, 0], [2, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [5, 0, 0], [1, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [5, 0, 0], [2, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [5, 0, 0], [3, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [4, 0, 0], [1, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [5, 0, 0], [2, 1, 0], [2, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [4, 0, 0], [2, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [4, 0, 0], [3, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [4, 0, 0], [4, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [3, 0, 0], [1, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [4, 0, 0], [2, 1, 0], [2, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [3, 0, 0], [2, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [4, 0, 0], [3, 1, 0], [2, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [3, 0, 0], [3, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [2, 0, 0], [2, 1, 0], [1, 0, 1]],
    &[[0, 0, 0], [0, 1, 0], [0, 0, 1], [3, 0, 0], [3, 1, 0], [2, 0, 1]],
    &[[0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 0, 0]],
    &[[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]],
    &[[1, 0, 0], [0, 1, 0], [1, 0, 1], [0, 1, 1], [0, 2, 0], [2, 0, 0]],
    &[[2, 0, 0], [0, 2, 0], [2, 0, 1], [0, 2, 1], [0, 3, 0], [3, 0, 0]],
    &[[0, 1, 0], [1, 0, 0], [0, 0, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]],
    &[[0, 0, 0], [0, 0, 1], [2, 0, 0], [0, 2, 0], [2, 0, 1], [0, 2, 1]],
    &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 2], [1, 0, 2], [0, 1, 2]],
    &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 3], [1, 0, 3], [0, 1, 3]],
    &[[0, 0, 0], [0, 0, 1], [2, 0, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1]],
    &[[0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 1, 1], [3, 0, 0], [3, 1, 0], [1, 0, 1], [1, 1, 1]],
    &[[0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 1, 1], [2, 0, 0], [3, 1, 0], [1, 0, 1], [2, 1, 1]],
    &[[0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 1, 1], [2, 0, 0], [2, 1, 0], [1, 0, 1], [1, 1, 1]],
    &[[0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 2, 1], [2, 0, 0], [2, 1, 0], [1, 0, 1], [1, 2, 1]],
    &[[1, 1, 0], [0, 1, 0], [0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]],
    &[[0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 1, 1], [2, 0, 0], [2, 1, 0], [2, 0, 1], [2, 1, 1]],
];

pub fn polygons() -> Vec<LatticePolytope> {
    POLYGONS.iter().map(|vs| LatticePolytope::from_coords(vs).expect("tabulated polygon")).collect()
}

pub fn polytopes_3d() -> Vec<LatticePolytope> {
    POLYTOPES_3D.iter().map(|vs| LatticePolytope::from_coords(vs).expect("tabulated polytope")).collect()
}

/// Both lists as raw vertex vectors.
pub fn vertex_lists(dim: usize) -> Vec<Vec<IntVector>> {
    match dim {
        2 => POLYGONS.iter().map(|vs| vs.iter().map(|&c| IntVector::from(c)).collect()).collect(),
        3 => POLYTOPES_3D.iter().map(|vs| vs.iter().map(|&c| IntVector::from(c)).collect()).collect(),
        _ => Vec::new(),
    }
}
