//! Lattice polytopes of dimension at most three: hulls, faces, lattice points,
//! normalized volume, tangent cones and normal fans.

use std::collections::BTreeSet;

use crate::cones::{Fan, RationalCone};
use crate::error::{Error, Result};
use crate::lattice::{
    self, cross, det_of, primitive_vector, rank, relative_volume, segment_lattice_length, IntMatrix, IntVector,
};

/// Largest absolute coordinate accepted by polytope constructors. Keeps every
/// intermediate of the 3D predicates well inside `i64`.
pub const COORD_LIMIT: i64 = 1 << 20;

/// Facet inequality `<normal, x> <= offset`, with the indices of the vertices
/// on which it is tight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: IntVector,
    pub offset: i64,
    pub vertices: Vec<usize>,
}

impl Facet {
    #[inline]
    pub fn value(&self, x: &IntVector) -> i128 {
        self.normal.dot(x)
    }

    #[inline]
    pub fn contains(&self, x: &IntVector) -> bool {
        self.normal.dot(x) <= self.offset as i128
    }

    #[inline]
    pub fn is_tight(&self, x: &IntVector) -> bool {
        self.normal.dot(x) == self.offset as i128
    }
}

/// Hull description without the lattice-point cache.
#[derive(Clone, Debug)]
pub(crate) struct Hull {
    pub dim: usize,
    pub vertices: Vec<IntVector>,
    pub facets: Vec<Facet>,
    pub equations: Vec<(IntVector, i64)>,
}

impl Hull {
    pub(crate) fn compute(points: &[IntVector]) -> Result<Hull> {
        let pts: Vec<IntVector> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if pts.len() < 2 {
            return Err(Error::NotFullDimensional);
        }
        let ambient = pts[0].dim();
        if ambient > 3 {
            return Err(Error::UnsupportedDimension(ambient));
        }
        for p in &pts {
            if p.dim() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: p.dim() });
            }
            if let Some(&c) = p.coords().iter().find(|c| c.abs() > COORD_LIMIT) {
                return Err(Error::CoordinateRange(c));
            }
        }
        let p0 = pts[0];
        let mut basis: Vec<IntVector> = Vec::new();
        for p in &pts[1..] {
            let d = *p - p0;
            let mut trial = basis.clone();
            trial.push(d);
            if rank(&trial) == trial.len() {
                basis = trial;
            }
        }
        let dim = basis.len();
        let equations = affine_equations(ambient, &basis, &p0);

        let mut facet_set: BTreeSet<(IntVector, i64)> = BTreeSet::new();
        let support = |n: IntVector, anchor: &IntVector| -> Option<(IntVector, i64)> {
            if n.is_zero() {
                return None;
            }
            let n = primitive_vector(&n).expect("nonzero");
            let c = n.dot(anchor);
            let mut above = false;
            let mut below = false;
            for p in &pts {
                let v = n.dot(p);
                above |= v > c;
                below |= v < c;
                if above && below {
                    return None;
                }
            }
            let c64 = lattice::narrow(c);
            Some(if !above { (n, c64) } else { (-n, -c64) })
        };
        match dim {
            1 => {
                let dir = primitive_vector(&basis[0]).expect("nonzero");
                let vals = pts.iter().map(|p| dir.dot(p));
                let hi = vals.clone().max().unwrap();
                let lo = vals.min().unwrap();
                facet_set.insert((dir, lattice::narrow(hi)));
                facet_set.insert((-dir, lattice::narrow(-lo)));
            }
            2 => {
                let plane = if ambient == 3 { Some(cross(&basis[0], &basis[1])) } else { None };
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        let e = pts[j] - pts[i];
                        let n = match plane {
                            Some(m) => cross(&m, &e),
                            None => IntVector::from([e[1], -e[0]]),
                        };
                        facet_set.extend(support(n, &pts[i]));
                    }
                }
            }
            3 => {
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        let e1 = pts[j] - pts[i];
                        for k in j + 1..pts.len() {
                            let n = cross(&e1, &(pts[k] - pts[i]));
                            facet_set.extend(support(n, &pts[i]));
                        }
                    }
                }
            }
            _ => return Err(Error::NotFullDimensional),
        }

        let facet_list: Vec<(IntVector, i64)> = facet_set.into_iter().collect();
        let mut vertices: Vec<IntVector> = pts
            .iter()
            .copied()
            .filter(|p| {
                let tight: Vec<IntVector> = facet_list
                    .iter()
                    .filter(|(n, c)| n.dot(p) == *c as i128)
                    .map(|(n, _)| *n)
                    .collect();
                rank(&tight) == dim
            })
            .collect();
        vertices.sort();
        let facets = facet_list
            .into_iter()
            .map(|(normal, offset)| {
                let vs = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| normal.dot(v) == offset as i128)
                    .map(|(i, _)| i)
                    .collect();
                Facet { normal, offset, vertices: vs }
            })
            .collect();
        Ok(Hull { dim, vertices, facets, equations })
    }

    pub(crate) fn contains(&self, x: &IntVector) -> bool {
        self.equations.iter().all(|(n, c)| n.dot(x) == *c as i128) && self.facets.iter().all(|f| f.contains(x))
    }
}

/// Integer equations cutting out the affine hull of `p0 + span(basis)`.
fn affine_equations(ambient: usize, basis: &[IntVector], p0: &IntVector) -> Vec<(IntVector, i64)> {
    let normals: Vec<IntVector> = match (ambient, basis.len()) {
        (a, k) if a == k => vec![],
        (2, 1) => vec![IntVector::from([-basis[0][1], basis[0][0]])],
        (3, 2) => vec![cross(&basis[0], &basis[1])],
        (3, 1) => {
            let mut out: Vec<IntVector> = Vec::new();
            for i in 0..3 {
                let c = cross(&basis[0], &IntVector::unit(3, i));
                if c.is_zero() {
                    continue;
                }
                let mut trial = out.clone();
                trial.push(c);
                if rank(&trial) == trial.len() {
                    out = trial;
                }
                if out.len() == 2 {
                    break;
                }
            }
            out
        }
        _ => vec![],
    };
    normals
        .into_iter()
        .map(|n| {
            let n = primitive_vector(&n).expect("nonzero normal");
            (n, lattice::narrow(n.dot(p0)))
        })
        .collect()
}

/// A lattice polytope with eagerly computed facets, edges and lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
    equations: Vec<(IntVector, i64)>,
    edges: Vec<(usize, usize)>,
    lattice_points: Vec<IntVector>,
}

impl LatticePolytope {
    /// Convex hull of a finite point set. Duplicates and non-extreme points are
    /// discarded; lower-dimensional inputs keep their own dimension.
    pub fn hull_from_points(points: &[IntVector]) -> Result<LatticePolytope> {
        let hull = Hull::compute(points)?;
        Ok(Self::from_hull(hull))
    }

    pub(crate) fn from_hull(hull: Hull) -> LatticePolytope {
        let Hull { dim, vertices, facets, equations } = hull;
        let ambient_dim = vertices[0].dim();
        let edges = compute_edges(dim, &vertices, &facets);
        let mut poly = LatticePolytope {
            ambient_dim,
            dim,
            vertices,
            facets,
            equations,
            edges,
            lattice_points: Vec::new(),
        };
        poly.lattice_points = poly.enumerate_lattice_points(usize::MAX);
        poly
    }

    pub fn from_coords<const D: usize>(points: &[[i64; D]]) -> Result<LatticePolytope>
    where
        IntVector: From<[i64; D]>,
    {
        let pts: Vec<IntVector> = points.iter().map(|&p| IntVector::from(p)).collect();
        Self::hull_from_points(&pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Equations `<n, x> = c` of the affine hull (empty when full-dimensional).
    pub fn equations(&self) -> &[(IntVector, i64)] {
        &self.equations
    }

    /// Edges as pairs of vertex indices `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// All lattice points, lexicographically sorted.
    pub fn lattice_points(&self) -> &[IntVector] {
        &self.lattice_points
    }

    pub fn num_lattice_points(&self) -> usize {
        self.lattice_points.len()
    }

    pub fn vertex_index(&self, u: &IntVector) -> Option<usize> {
        self.vertices.binary_search(u).ok()
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        x.dim() == self.ambient_dim
            && self.equations.iter().all(|(n, c)| n.dot(x) == *c as i128)
            && self.facets.iter().all(|f| f.contains(x))
    }

    /// Vertices joined to vertex `i` by an edge.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Facet indices whose inequality is tight at vertex `i`.
    pub fn facets_at(&self, i: usize) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.vertices.binary_search(&i).is_ok())
            .map(|(k, _)| k)
            .collect()
    }

    fn bounding_box(&self) -> (IntVector, IntVector) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        let d = self.ambient_dim;
        let mut lo_c = lo.to_vec();
        let mut hi_c = hi.to_vec();
        for v in &self.vertices {
            for i in 0..d {
                lo_c[i] = lo_c[i].min(v[i]);
                hi_c[i] = hi_c[i].max(v[i]);
            }
        }
        lo = IntVector::from_slice(&lo_c).unwrap();
        hi = IntVector::from_slice(&hi_c).unwrap();
        (lo, hi)
    }

    /// Bounding-box scan filtered by the H-description. Stops once more than
    /// `limit` points have been found.
    fn enumerate_lattice_points(&self, limit: usize) -> Vec<IntVector> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for_each_box_point(&lo, &hi, |p| {
            if self.contains(p) {
                out.push(*p);
                if out.len() > limit {
                    return false;
                }
            }
            true
        });
        out
    }

    /// Number of lattice points on the union of the edges (vertices once).
    pub fn edge_lattice_point_count(&self) -> usize {
        let interior: u64 = self
            .edges
            .iter()
            .map(|&(a, b)| segment_lattice_length(&self.vertices[a], &self.vertices[b]) - 1)
            .sum();
        self.vertices.len() + interior as usize
    }

    /// Lattice length of every edge, in edge order.
    pub fn edge_lengths(&self) -> Vec<u64> {
        self.edges
            .iter()
            .map(|&(a, b)| segment_lattice_length(&self.vertices[a], &self.vertices[b]))
            .collect()
    }

    /// Vertex indices of facet `f` in cyclic order (3D polytopes).
    pub fn facet_cycle(&self, f: usize) -> Vec<usize> {
        let vs = &self.facets[f].vertices;
        if self.dim != 3 {
            return vs.clone();
        }
        let in_facet = |i: usize| vs.binary_search(&i).is_ok();
        let adj: Vec<(usize, usize)> = self.edges.iter().copied().filter(|&(a, b)| in_facet(a) && in_facet(b)).collect();
        let mut cycle = vec![vs[0]];
        let mut prev = usize::MAX;
        loop {
            let cur = *cycle.last().unwrap();
            let next = adj
                .iter()
                .filter_map(|&(a, b)| if a == cur { Some(b) } else if b == cur { Some(a) } else { None })
                .find(|&n| n != prev && (cycle.len() < 2 || n != cycle[cycle.len() - 2]));
            match next {
                Some(n) if n != cycle[0] => {
                    prev = cur;
                    cycle.push(n);
                }
                _ => break,
            }
        }
        cycle
    }

    /// Simplices of the pulling-from-one-vertex (fan) triangulation from
    /// vertex `apex`, as point lists.
    pub fn fan_simplices(&self, apex: usize) -> Vec<Vec<IntVector>> {
        let a = self.vertices[apex];
        match self.dim {
            1 => vec![vec![self.vertices[0], self.vertices[1]]],
            2 => self
                .facets
                .iter()
                .filter(|f| f.vertices.binary_search(&apex).is_err())
                .map(|f| vec![a, self.vertices[f.vertices[0]], self.vertices[f.vertices[1]]])
                .collect(),
            3 => {
                let mut out = Vec::new();
                for (k, f) in self.facets.iter().enumerate() {
                    if f.vertices.binary_search(&apex).is_ok() {
                        continue;
                    }
                    let cyc = self.facet_cycle(k);
                    for w in 1..cyc.len() - 1 {
                        out.push(vec![a, self.vertices[cyc[0]], self.vertices[cyc[w]], self.vertices[cyc[w + 1]]]);
                    }
                }
                out
            }
            _ => vec![],
        }
    }

    /// Normalized volume, i.e. volume in units of unimodular simplices of the
    /// affine lattice spanned by the polytope.
    pub fn normalized_volume(&self) -> u64 {
        self.normalized_volume_from(0)
    }

    /// Normalized volume computed from the fan triangulation at vertex `apex`.
    pub fn normalized_volume_from(&self, apex: usize) -> u64 {
        self.fan_simplices(apex)
            .iter()
            .map(|s| {
                let edges: Vec<IntVector> = s[1..].iter().map(|p| *p - s[0]).collect();
                if edges.len() == self.ambient_dim {
                    det_of(&edges).unsigned_abs() as u64
                } else {
                    relative_volume(&edges).unsigned_abs() as u64
                }
            })
            .sum()
    }

    /// Tangent cone at vertex `u`, generated by the primitive edge directions.
    pub fn tangent_cone(&self, u: &IntVector) -> Result<RationalCone> {
        let i = self.vertex_index(u).ok_or(Error::NotAVertex(*u))?;
        self.tangent_cone_at(i)
    }

    pub fn tangent_cone_at(&self, i: usize) -> Result<RationalCone> {
        let u = self.vertices[i];
        let gens: Vec<IntVector> = self.neighbors(i).into_iter().map(|j| self.vertices[j] - u).collect();
        RationalCone::new(&gens)
    }

    /// Primitive edge directions at vertex `i`, in neighbor order.
    pub fn edge_directions(&self, i: usize) -> Vec<IntVector> {
        let u = self.vertices[i];
        self.neighbors(i)
            .into_iter()
            .map(|j| primitive_vector(&(self.vertices[j] - u)).expect("distinct vertices"))
            .collect()
    }

    /// Normal fan: rays are the outward facet normals in lexicographic order,
    /// maximal cones are listed in vertex order.
    pub fn normal_fan(&self) -> Result<Fan> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let mut rays: Vec<IntVector> = self.facets.iter().map(|f| f.normal).collect();
        rays.sort();
        let index_of = |n: &IntVector| rays.binary_search(n).expect("facet normal present");
        let cones = (0..self.vertices.len())
            .map(|i| {
                let mut c: Vec<usize> = self.facets_at(i).into_iter().map(|k| index_of(&self.facets[k].normal)).collect();
                c.sort();
                c
            })
            .collect();
        Fan::new(rays.clone(), cones)
    }

    /// Maximal normal cone at vertex `i` (outward normals of incident facets).
    pub fn normal_cone_at(&self, i: usize) -> Result<RationalCone> {
        let gens: Vec<IntVector> = self.facets_at(i).into_iter().map(|k| self.facets[k].normal).collect();
        RationalCone::new(&gens)
    }

    pub fn dilate(&self, k: i64) -> Result<LatticePolytope> {
        if k <= 0 {
            return Err(Error::ZeroDilation);
        }
        let pts: Vec<IntVector> = self.vertices.iter().map(|v| v.scaled(k)).collect();
        Self::hull_from_points(&pts)
    }

    pub fn translate(&self, t: &IntVector) -> Result<LatticePolytope> {
        let pts: Vec<IntVector> = self.vertices.iter().map(|v| *v + *t).collect();
        Self::hull_from_points(&pts)
    }

    /// Image under `x -> m * x + t`.
    pub fn map_affine(&self, m: &IntMatrix, t: &IntVector) -> Result<LatticePolytope> {
        let pts: Vec<IntVector> = self.vertices.iter().map(|v| m.apply(v) + *t).collect();
        Self::hull_from_points(&pts)
    }

    /// Euler characteristic `V - E + F` (3D polytopes).
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.facets.len() as i64
    }
}

fn compute_edges(dim: usize, vertices: &[IntVector], facets: &[Facet]) -> Vec<(usize, usize)> {
    if dim == 1 {
        return vec![(0, 1)];
    }
    let n = vertices.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, f) in facets.iter().enumerate() {
        for &v in &f.vertices {
            incident[v].push(k);
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let common: Vec<IntVector> = incident[i]
                .iter()
                .filter(|k| incident[j].contains(k))
                .map(|&k| facets[k].normal)
                .collect();
            if common.len() >= dim - 1 && rank(&common) == dim - 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Visits every lattice point of the box `[lo, hi]` in lexicographic order;
/// the visitor returns `false` to stop.
pub(crate) fn for_each_box_point(lo: &IntVector, hi: &IntVector, mut visit: impl FnMut(&IntVector) -> bool) {
    let d = lo.dim();
    let mut cur = *lo;
    loop {
        if !visit(&cur) {
            return;
        }
        // odometer increment, last coordinate fastest
        let mut coords = cur.to_vec();
        let mut i = d;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if coords[i] < hi[i] {
                coords[i] += 1;
                for (j, c) in coords.iter_mut().enumerate().skip(i + 1) {
                    *c = lo[j];
                }
                break;
            }
        }
        cur = IntVector::from_slice(&coords).expect("same dimension");
    }
}
