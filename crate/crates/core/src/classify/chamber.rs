//! Polytopes `P(A, b) = { x : A x <= b }` with a fixed smooth normal fan and
//! their edge lengths as integer linear functionals of `b`.

use crate::cones::{fan_is_smooth, Fan};
use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix, IntVector, Rational};
use crate::polytope::LatticePolytope;

/// Edge between the vertices of two maximal cones sharing a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub cones: (usize, usize),
    /// Ray of the first cone that is not on the wall.
    pub leaving: usize,
    /// Ray of the second cone that is not on the wall.
    pub entering: usize,
    /// Primitive direction from the first vertex towards the second.
    pub direction: IntVector,
    /// Coefficients of the lattice length as a function of `b`.
    pub functional: Vec<i64>,
}

impl Wall {
    pub fn length(&self, b: &[i64]) -> i64 {
        self.functional.iter().zip(b).map(|(c, x)| c * x).sum()
    }
}

#[derive(Clone, Debug)]
pub struct ChamberModel {
    fan: Fan,
    /// `A_sigma^-1` per maximal cone; column `j` belongs to ray `cones[sigma][j]`.
    inverses: Vec<IntMatrix>,
    walls: Vec<Wall>,
}

impl ChamberModel {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn num_facets(&self) -> usize {
        self.fan.rays().len()
    }

    pub fn num_vertices(&self) -> usize {
        self.fan.cones().len()
    }

    /// `x_sigma(b) = A_sigma^-1 b_sigma`.
    pub fn vertex(&self, sigma: usize, b: &[i64]) -> IntVector {
        let sub: Vec<i64> = self.fan.cones()[sigma].iter().map(|&i| b[i]).collect();
        self.inverses[sigma].apply(&IntVector::from_slice(&sub).expect("cone size is the dimension"))
    }

    pub fn vertices(&self, b: &[i64]) -> Vec<IntVector> {
        (0..self.num_vertices()).map(|s| self.vertex(s, b)).collect()
    }

    pub fn edge_lengths(&self, b: &[i64]) -> Vec<i64> {
        self.walls.iter().map(|w| w.length(b)).collect()
    }

    /// All edge lengths are positive, so `P(A, b)` has exactly this fan.
    pub fn in_chamber(&self, b: &[i64]) -> bool {
        self.walls.iter().all(|w| w.length(b) >= 1)
    }

    /// `P(A, b)` for `b` in the chamber.
    pub fn realize(&self, b: &[i64]) -> Result<LatticePolytope> {
        LatticePolytope::hull_from_points(&self.vertices(b))
    }

    /// Rational functionals restricted to the coordinates in `free`.
    pub(crate) fn restricted(&self, free: &[usize]) -> Vec<Vec<Rational>> {
        self.walls
            .iter()
            .map(|w| free.iter().map(|&i| Rational::from_integer(w.functional[i] as i128)).collect())
            .collect()
    }
}

/// Symbolic vertex solutions and edge-length functionals of a smooth fan.
/// The fan is normalized first so ray and cone indices are deterministic.
pub fn chamber_model(f: &Fan) -> Result<ChamberModel> {
    if !fan_is_smooth(f) {
        return Err(Error::FanNotSmooth);
    }
    let fan = f.normalized();
    let n = fan.rays().len();
    let inverses: Vec<IntMatrix> = fan
        .cones()
        .iter()
        .map(|c| {
            let rows: Vec<IntVector> = c.iter().map(|&i| fan.rays()[i]).collect();
            lattice::unimodular_inverse(&IntMatrix::from_vectors(&rows))
        })
        .collect::<Result<_>>()?;

    let mut walls = Vec::new();
    let cones = fan.cones();
    for s in 0..cones.len() {
        for t in s + 1..cones.len() {
            let shared = cones[s].iter().filter(|i| cones[t].contains(i)).count();
            if shared + 1 != fan.dim() {
                continue;
            }
            let pos = cones[s].iter().position(|i| !cones[t].contains(i)).unwrap();
            let leaving = cones[s][pos];
            let entering = *cones[t].iter().find(|i| !cones[s].contains(i)).unwrap();
            // column `pos` of A_s^-1 pairs to 1 with the leaving normal and to 0
            // with the wall normals; the edge runs against it
            let col: Vec<i64> = (0..fan.dim()).map(|r| -inverses[s].get(r, pos)).collect();
            let direction = IntVector::from_slice(&col)?;
            // length = b_leaving - <v_leaving, x_t(b)>
            let v = fan.rays()[leaving];
            let mut functional = vec![0i64; n];
            functional[leaving] += 1;
            for (j, &ray) in cones[t].iter().enumerate() {
                let coeff: i64 = (0..fan.dim()).map(|r| v[r] * inverses[t].get(r, j)).sum();
                functional[ray] -= coeff;
            }
            walls.push(Wall { cones: (s, t), leaving, entering, direction, functional });
        }
    }
    Ok(ChamberModel { fan, inverses, walls })
}
