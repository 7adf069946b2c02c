//! Named example families: Reeve simplices, Bruns polytopes, the Fibonacci
//! polygon and Hirzebruch trapezoids.

use crate::error::{Error, Result};
use crate::lattice::{det_of, IntVector};
use crate::polytope::LatticePolytope;

fn positive(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("parameter must be at least 1, got {k}")));
    }
    Ok(())
}

/// `conv((0,0,0), (1,0,0), (0,1,0), (1,1,k))`.
pub fn reeve_simplex(k: i64) -> Result<LatticePolytope> {
    positive(k)?;
    LatticePolytope::from_coords(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, k]])
}

/// Eight lattice points, multiplicity `k + 1`, very ample but not smooth.
pub fn bruns_polytope(k: i64) -> Result<LatticePolytope> {
    positive(k)?;
    LatticePolytope::from_coords(&[
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, k],
        [1, 1, k + 1],
    ])
}

/// `F_0 = 0, F_1 = 1, ...`
pub fn fibonacci(n: u32) -> i64 {
    let (mut a, mut b) = (0i64, 1i64);
    for _ in 0..n {
        (a, b) = (b, a.checked_add(b).expect("Fibonacci number fits in i64"));
    }
    a
}

/// The four unimodularity identities evaluated at `k >= 1`, in the order
/// `F(2k+3)F(2k) - F(2k+2)F(2k+1)`, `F(2k+2)F(2k-1) - F(2k+1)F(2k)`,
/// `F(2k+4)F(2k) - F(2k+2)^2`, `F(2k+3)F(2k-1) - F(2k+1)^2`.
/// They evaluate to `-1, +1, -1, +1`.
pub fn fibonacci_identities(k: u32) -> [i64; 4] {
    assert!(k >= 1);
    let f = |n: u32| fibonacci(n);
    let n = 2 * k;
    [
        f(n + 3) * f(n) - f(n + 2) * f(n + 1),
        f(n + 2) * f(n - 1) - f(n + 1) * f(n),
        f(n + 4) * f(n) - f(n + 2) * f(n + 2),
        f(n + 3) * f(n - 1) - f(n + 1) * f(n + 1),
    ]
}

/// The convex chain of `2k + 1` edge vectors running from `(1,0)` to `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciChain {
    pub k: u32,
    pub edge_vectors: Vec<IntVector>,
}

impl FibonacciChain {
    /// Determinants of consecutive edge vectors.
    pub fn turn_determinants(&self) -> Vec<i128> {
        self.edge_vectors.windows(2).map(det_of).collect()
    }

    /// The closed boundary walk: the chain, its mirror in the vertical axis,
    /// the point reflection and the mirror in the horizontal axis, so that
    /// the directions turn once around counterclockwise.
    pub fn boundary_steps(&self) -> Vec<IntVector> {
        let c = &self.edge_vectors;
        let mut steps = c.clone();
        steps.extend(c.iter().rev().map(|e| IntVector::from([-e[0], e[1]])));
        steps.extend(c.iter().map(|e| IntVector::from([-e[0], -e[1]])));
        steps.extend(c.iter().rev().map(|e| IntVector::from([e[0], -e[1]])));
        steps
    }

    /// Points visited by the boundary walk, translated into the nonnegative
    /// quadrant with both coordinates attaining 0.
    pub fn boundary_points(&self) -> Vec<IntVector> {
        let mut pts = Vec::new();
        let mut cur = IntVector::zero(2);
        for s in self.boundary_steps() {
            pts.push(cur);
            cur += s;
        }
        debug_assert!(cur.is_zero());
        let min_x = pts.iter().map(|p| p[0]).min().unwrap();
        let min_y = pts.iter().map(|p| p[1]).min().unwrap();
        let shift = IntVector::from([-min_x, -min_y]);
        pts.iter().map(|p| *p + shift).collect()
    }
}

/// `(F2,F0), (F4,F2), ..., (F2k,F2k-2), (F2k-1,F2k-3), ..., (F3,F1), (1,1), (0,1)`.
pub fn fibonacci_chain(k: u32) -> Result<FibonacciChain> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let f = |n: u32| fibonacci(n);
    let mut edges = Vec::with_capacity(2 * k as usize + 1);
    for i in 1..=k {
        edges.push(IntVector::from([f(2 * i), f(2 * i - 2)]));
    }
    for i in (2..=k).rev() {
        edges.push(IntVector::from([f(2 * i - 1), f(2 * i - 3)]));
    }
    edges.push(IntVector::from([1, 1]));
    edges.push(IntVector::from([0, 1]));
    Ok(FibonacciChain { k, edge_vectors: edges })
}

/// Convex hull of the reflected chain.
pub fn fibonacci_polygon(k: u32) -> Result<LatticePolytope> {
    LatticePolytope::hull_from_points(&fibonacci_chain(k)?.boundary_points())
}

/// A Hirzebruch trapezoid together with its marked lattice points.
#[derive(Clone, Debug)]
pub struct HirzebruchTrapezoid {
    pub a: i64,
    pub polytope: LatticePolytope,
    /// Distinct marked points, sorted.
    pub marked: Vec<IntVector>,
    /// True when some of the six nominal marks coincide (`a <= 1`).
    pub degenerate: bool,
}

/// `conv((0,0), (a+1,0), (0,1), (1,1))` with marks at `(0,0), (1,0), (a,0),
/// (a+1,0), (0,1), (1,1)`.
pub fn hirzebruch_trapezoid(a: i64) -> Result<HirzebruchTrapezoid> {
    if a < 0 {
        return Err(Error::InvalidArgument(format!("a must be nonnegative, got {a}")));
    }
    let polytope = LatticePolytope::from_coords(&[[0, 0], [a + 1, 0], [0, 1], [1, 1]])?;
    let mut marked: Vec<IntVector> =
        [[0, 0], [1, 0], [a, 0], [a + 1, 0], [0, 1], [1, 1]].into_iter().map(IntVector::from).collect();
    marked.sort();
    marked.dedup();
    let degenerate = marked.len() < 6;
    Ok(HirzebruchTrapezoid { a, polytope, marked, degenerate })
}
