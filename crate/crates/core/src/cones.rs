//! Pointed rational cones and fans.
//!
//! Covers simpliciality, unimodularity, Q-Gorenstein data, box points,
//! Hilbert bases and multiplicities of cones, plus the cone-based polytope
//! predicates (smoothness, very ampleness, multiplicity) and completeness /
//! smoothness of fans.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    self, combinations, coordinates_in, cross, det_of, primitive_vector, rank, IntMatrix, IntVector, Rational,
};
use crate::polytope::{for_each_box_point, LatticePolytope};

/// A pointed cone given by its primitive, irredundant generators (sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<IntVector>,
}

/// Height functional, index and Gorenstein flag of a Q-Gorenstein cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinData {
    pub height: Vec<Rational>,
    pub index: i128,
    pub is_gorenstein: bool,
}

impl RationalCone {
    /// Builds the cone generated by `gens`: generators are made primitive,
    /// deduplicated and pruned to the extreme rays.
    pub fn new(gens: &[IntVector]) -> Result<RationalCone> {
        let first = gens.first().ok_or(Error::EmptyCone)?;
        let d = first.dim();
        let mut prim = BTreeSet::new();
        for g in gens {
            if g.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, got: g.dim() });
            }
            prim.insert(primitive_vector(g)?);
        }
        let all: Vec<IntVector> = prim.into_iter().collect();
        if all.iter().any(|g| in_cone_of(&all, &-*g)) {
            return Err(Error::NotPointed);
        }
        let mut kept = all.clone();
        for g in &all {
            let others: Vec<IntVector> = kept.iter().copied().filter(|h| h != g).collect();
            if !others.is_empty() && in_cone_of(&others, g) {
                kept = others;
            }
        }
        Ok(RationalCone { ambient_dim: d, generators: kept })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        rank(&self.generators)
    }

    pub fn is_simplicial(&self) -> bool {
        self.generators.len() == self.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Simplicial, full-dimensional and generated by a lattice basis.
    pub fn is_unimodular(&self) -> bool {
        self.generators.len() == self.ambient_dim && det_of(&self.generators).abs() == 1
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        if let Some(normals) = self.inward_facet_normals() {
            normals.iter().all(|n| n.dot(x) >= 0)
        } else {
            in_cone_of(&self.generators, x)
        }
    }

    /// Inward facet normals of a full-dimensional cone in dimension 2 or 3.
    pub fn inward_facet_normals(&self) -> Option<Vec<IntVector>> {
        if !self.is_full_dimensional() {
            return None;
        }
        let g = &self.generators;
        match self.ambient_dim {
            1 => Some(vec![g[0]]),
            2 => {
                let (a, b) = (g[0], g[1]);
                let na = IntVector::from([-a[1], a[0]]);
                let nb = IntVector::from([-b[1], b[0]]);
                let na = if na.dot(&b) > 0 { na } else { -na };
                let nb = if nb.dot(&a) > 0 { nb } else { -nb };
                Some(vec![na, nb])
            }
            3 => Some(cone_facets_3d(g).into_iter().map(|(n, _, _)| n).collect()),
            _ => None,
        }
    }

    /// Triangulation into simplicial cones on the extreme rays, fanned out
    /// from the lexicographically least ray.
    pub fn simplicial_pieces(&self) -> Vec<Vec<IntVector>> {
        if self.is_simplicial() {
            return vec![self.generators.clone()];
        }
        // pointed cones of dimension <= 2 are simplicial, and inputs live in
        // dimension <= 3, so this is a full-dimensional 3D cone
        let g = &self.generators;
        let apex = g[0];
        cone_facets_3d(g)
            .into_iter()
            .filter(|&(_, a, b)| g[a] != apex && g[b] != apex)
            .map(|(_, a, b)| vec![apex, g[a], g[b]])
            .collect()
    }

    /// Solves `<h, v> = 1` for every generator; `None` if not Q-Gorenstein.
    pub fn gorenstein_data(&self) -> Option<GorensteinData> {
        let rows: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|g| g.coords().iter().map(|&x| Rational::from_integer(x as i128)).collect())
            .collect();
        let rhs = vec![Rational::one(); rows.len()];
        let height = lattice::solve_rational(&rows, &rhs)?;
        let index = lattice::lcm_of_denominators(&height);
        Some(GorensteinData { height, index, is_gorenstein: index == 1 })
    }

    pub fn is_q_gorenstein(&self) -> bool {
        self.gorenstein_data().is_some()
    }

    /// The nib `conv(0, generators)`.
    pub fn nib(&self) -> Result<LatticePolytope> {
        if !self.is_q_gorenstein() {
            return Err(Error::NotQGorenstein);
        }
        let mut pts = self.generators.clone();
        pts.push(IntVector::zero(self.ambient_dim));
        LatticePolytope::hull_from_points(&pts)
    }

    pub fn nib_lattice_points(&self) -> Result<Vec<IntVector>> {
        Ok(self.nib()?.lattice_points().to_vec())
    }

    /// Normalized volume of the nib (relative to the span when the cone is
    /// not full-dimensional).
    pub fn multiplicity(&self) -> Result<u64> {
        if self.is_simplicial() && self.is_full_dimensional() {
            return Ok(det_of(&self.generators).unsigned_abs() as u64);
        }
        Ok(self.nib()?.normalized_volume())
    }

    /// Lattice points of the half-open parallelepiped of a simplicial cone.
    pub fn box_points(&self) -> Result<Vec<IntVector>> {
        if !self.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        Ok(box_points_of(&self.generators))
    }

    /// The unique minimal generating set of the semigroup of lattice points
    /// in the cone, sorted lexicographically.
    pub fn hilbert_basis(&self) -> Vec<IntVector> {
        let mut candidates: BTreeSet<IntVector> = self.generators.iter().copied().collect();
        for piece in self.simplicial_pieces() {
            candidates.extend(box_points_of(&piece).into_iter().filter(|p| !p.is_zero()));
        }
        let candidates: Vec<IntVector> = candidates.into_iter().collect();
        let mut out: Vec<IntVector> = candidates
            .iter()
            .copied()
            .filter(|x| {
                !candidates
                    .iter()
                    .any(|y| y != x && self.contains(&(*x - *y)))
            })
            .collect();
        out.sort();
        out
    }
}

/// Lattice points of `sum lambda_i v_i`, `lambda_i in [0, 1)`, for linearly
/// independent `gens`.
pub(crate) fn box_points_of(gens: &[IntVector]) -> Vec<IntVector> {
    let d = gens[0].dim();
    let k = gens.len();
    // coordinates on which the generators restrict to an invertible block
    let rows = combinations(d, k)
        .into_iter()
        .find(|rows| {
            let block: Vec<IntVector> = gens
                .iter()
                .map(|g| IntVector::from_slice(&rows.iter().map(|&r| g[r]).collect::<Vec<_>>()).unwrap())
                .collect();
            det_of(&block) != 0
        })
        .expect("independent generators");
    // block matrix with generators as columns
    let block = IntMatrix::new(rows.iter().map(|&r| gens.iter().map(|g| g[r]).collect()).collect()).unwrap();
    let det = lattice::det(&block).unwrap();
    let adj = lattice::adjugate(&block).unwrap();

    let mut lo = vec![0i64; d];
    let mut hi = vec![0i64; d];
    for g in gens {
        for i in 0..d {
            if g[i] < 0 {
                lo[i] += g[i];
            } else {
                hi[i] += g[i];
            }
        }
    }
    let lo = IntVector::from_slice(&lo).unwrap();
    let hi = IntVector::from_slice(&hi).unwrap();
    let mut out = Vec::new();
    for_each_box_point(&lo, &hi, |x| {
        let sub = IntVector::from_slice(&rows.iter().map(|&r| x[r]).collect::<Vec<_>>()).unwrap();
        // det * lambda = adj * sub
        let scaled = adj.apply(&sub);
        let in_box = scaled.coords().iter().all(|&s| {
            let s = s as i128;
            if det > 0 {
                (0..det).contains(&s)
            } else {
                (det + 1..=0).contains(&s)
            }
        });
        if in_box {
            let mut recon = vec![0i128; d];
            for (j, g) in gens.iter().enumerate() {
                for (i, r) in recon.iter_mut().enumerate() {
                    *r += scaled[j] as i128 * g[i] as i128;
                }
            }
            if recon.iter().zip(x.coords()).all(|(&r, &xi)| r == det * xi as i128) {
                out.push(*x);
            }
        }
        true
    });
    out.sort();
    out
}

/// Facets of a full-dimensional pointed 3D cone given by extreme rays:
/// `(inward normal, ray index, ray index)`.
fn cone_facets_3d(g: &[IntVector]) -> Vec<(IntVector, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let n = cross(&g[i], &g[j]);
            if n.is_zero() {
                continue;
            }
            let vals: Vec<i128> = g.iter().map(|h| n.dot(h)).collect();
            if vals.iter().all(|&v| v >= 0) {
                out.push((primitive_vector(&n).unwrap(), i, j));
            } else if vals.iter().all(|&v| v <= 0) {
                out.push((primitive_vector(&-n).unwrap(), i, j));
            }
        }
    }
    out
}

fn span_basis(gens: &[IntVector]) -> Vec<IntVector> {
    let mut basis: Vec<IntVector> = Vec::new();
    for g in gens {
        let mut trial = basis.clone();
        trial.push(*g);
        if rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    basis
}

/// Membership in `cone(gens)` via Caratheodory: `x` lies in the cone of some
/// linearly independent subset.
pub(crate) fn in_cone_of(gens: &[IntVector], x: &IntVector) -> bool {
    if x.is_zero() {
        return true;
    }
    let d = x.dim();
    for k in 1..=d.min(gens.len()) {
        for subset in combinations(gens.len(), k) {
            let basis: Vec<IntVector> = subset.iter().map(|&i| gens[i]).collect();
            if rank(&basis) < k {
                continue;
            }
            if let Some(c) = coordinates_in(&basis, x) {
                if c.iter().all(|t| *t >= Rational::zero()) {
                    // verify exactly: the solver only checks consistency on the
                    // rows it used
                    let mut recon = vec![Rational::zero(); d];
                    for (t, b) in c.iter().zip(&basis) {
                        for (i, r) in recon.iter_mut().enumerate() {
                            *r += *t * Rational::from_integer(b[i] as i128);
                        }
                    }
                    if recon.iter().zip(x.coords()).all(|(r, &xi)| *r == Rational::from_integer(xi as i128)) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every tangent cone is generated by a lattice basis.
pub fn is_smooth(p: &LatticePolytope) -> bool {
    if !p.is_full_dimensional() {
        return false;
    }
    (0..p.vertices().len()).all(|i| {
        let dirs = p.edge_directions(i);
        dirs.len() == p.dim() && det_of(&dirs).abs() == 1
    })
}

/// Very ampleness: for every vertex `u`, `u + hilb(T_u P)` lies in `P`.
pub fn is_very_ample(p: &LatticePolytope) -> Result<bool> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    for (i, u) in p.vertices().iter().enumerate() {
        let cone = p.tangent_cone_at(i)?;
        if !cone.hilbert_basis().iter().all(|h| p.contains(&(*u + *h))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest multiplicity of a maximal normal cone.
pub fn polytope_multiplicity(p: &LatticePolytope) -> Result<u64> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let mut best = 0;
    for (i, u) in p.vertices().iter().enumerate() {
        let cone = p.normal_cone_at(i)?;
        let m = cone.multiplicity().map_err(|e| match e {
            Error::NotQGorenstein => Error::VertexNotQGorenstein(*u),
            other => other,
        })?;
        best = best.max(m);
    }
    Ok(best)
}

/// A fan given by its rays and its maximal cones (index sets into the rays).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    rays: Vec<IntVector>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Checks index ranges, dimensions and duplicate rays. Cone index lists
    /// are sorted; geometric conditions are checked by [`fan_is_complete`].
    pub fn new(rays: Vec<IntVector>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        let d = rays.first().ok_or_else(|| Error::MalformedFan("no rays".into()))?.dim();
        if rays.iter().any(|r| r.dim() != d) {
            return Err(Error::MalformedFan("rays of different dimensions".into()));
        }
        if rays.iter().any(|r| r.is_zero()) {
            return Err(Error::MalformedFan("zero ray".into()));
        }
        if rays.iter().collect::<BTreeSet<_>>().len() != rays.len() {
            return Err(Error::MalformedFan("duplicate rays".into()));
        }
        let mut cs = Vec::with_capacity(cones.len());
        for mut c in cones {
            c.sort();
            c.dedup();
            if c.is_empty() || c.iter().any(|&i| i >= rays.len()) {
                return Err(Error::MalformedFan(format!("bad cone {c:?}")));
            }
            cs.push(c);
        }
        Ok(Fan { rays, cones: cs })
    }

    pub fn dim(&self) -> usize {
        self.rays[0].dim()
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn cone_rays(&self, c: usize) -> Vec<IntVector> {
        self.cones[c].iter().map(|&i| self.rays[i]).collect()
    }

    /// Rays sorted lexicographically, each cone sorted, cone list sorted.
    pub fn normalized(&self) -> Fan {
        let mut order: Vec<usize> = (0..self.rays.len()).collect();
        order.sort_by_key(|&i| self.rays[i]);
        let mut new_index = vec![0; self.rays.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let rays = order.iter().map(|&i| self.rays[i]).collect();
        let mut cones: Vec<Vec<usize>> = self
            .cones
            .iter()
            .map(|c| {
                let mut c: Vec<usize> = c.iter().map(|&i| new_index[i]).collect();
                c.sort();
                c
            })
            .collect();
        cones.sort();
        Fan { rays, cones }
    }
}

/// Every maximal cone is unimodular.
pub fn fan_is_smooth(f: &Fan) -> bool {
    let d = f.dim();
    f.cones.iter().all(|c| c.len() == d && det_of(&c.iter().map(|&i| f.rays[i]).collect::<Vec<_>>()).abs() == 1)
}

/// Completeness: every wall (facet of a maximal cone) is shared by exactly
/// two maximal cones lying on opposite sides of it, and a generic vector is
/// covered by exactly one maximal cone.
pub fn fan_is_complete(f: &Fan) -> Result<bool> {
    let d = f.dim();
    if !(2..=3).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    let mut walls: BTreeMap<Vec<usize>, Vec<i32>> = BTreeMap::new();
    let mut cone_normals: Vec<Vec<IntVector>> = Vec::with_capacity(f.cones.len());
    for c in &f.cones {
        let gens: Vec<IntVector> = c.iter().map(|&i| f.rays[i]).collect();
        if rank(&gens) != d {
            return Err(Error::MalformedFan(format!("cone {c:?} is not full-dimensional")));
        }
        let cone = RationalCone::new(&gens).map_err(|_| Error::MalformedFan(format!("cone {c:?} is not pointed")))?;
        if cone.generators().len() != gens.len() {
            return Err(Error::MalformedFan(format!("cone {c:?} has redundant rays")));
        }
        let normals = cone.inward_facet_normals().expect("full-dimensional");
        for n in &normals {
            let on_wall: Vec<usize> = c.iter().copied().filter(|&i| n.dot(&f.rays[i]) == 0).collect();
            // the wall hyperplane is spanned by the rays on it; orient it by a
            // fixed normal so opposite cones get opposite signs
            let key_normal = wall_normal(&on_wall.iter().map(|&i| f.rays[i]).collect::<Vec<_>>(), d);
            let side = if key_normal.dot(n) > 0 { 1 } else { -1 };
            walls.entry(on_wall).or_default().push(side);
        }
        cone_normals.push(normals);
    }
    for sides in walls.values() {
        if sides.len() != 2 || sides[0] == sides[1] {
            return Ok(false);
        }
    }
    let w = generic_vector(f);
    let covering = cone_normals.iter().filter(|ns| ns.iter().all(|n| n.dot(&w) > 0)).count();
    Ok(covering == 1)
}

fn wall_normal(rays: &[IntVector], d: usize) -> IntVector {
    let n = if d == 2 {
        IntVector::from([-rays[0][1], rays[0][0]])
    } else {
        let basis = span_basis(rays);
        cross(&basis[0], &basis[1])
    };
    let n = primitive_vector(&n).expect("wall spans a hyperplane");
    // canonical orientation: first nonzero coordinate positive
    if n.coords().iter().find(|&&x| x != 0).copied().unwrap_or(1) < 0 {
        -n
    } else {
        n
    }
}

/// A vector off every hyperplane spanned by rays of `f`.
fn generic_vector(f: &Fan) -> IntVector {
    let d = f.dim();
    let mut hyperplanes: Vec<IntVector> = Vec::new();
    if d == 2 {
        hyperplanes.extend(f.rays.iter().map(|r| IntVector::from([-r[1], r[0]])));
    } else {
        for i in 0..f.rays.len() {
            for j in i + 1..f.rays.len() {
                let n = cross(&f.rays[i], &f.rays[j]);
                if !n.is_zero() {
                    hyperplanes.push(n);
                }
            }
        }
    }
    let mut t: i64 = 1;
    loop {
        let w = if d == 2 {
            IntVector::from([1 + 97 * t, 31 * t * t + 7])
        } else {
            IntVector::from([1 + 97 * t, 31 * t * t + 7, 13 * t * t * t + 3 * t + 5])
        };
        if hyperplanes.iter().all(|n| n.dot(&w) != 0) {
            return w;
        }
        t += 1;
    }
}
