//! Exact integer and rational linear algebra in dimension at most four.
//!
//! Coordinates are `i64`; every product that can grow (determinants, minors,
//! eliminations) is carried out in `i128`. Polytope constructors bound input
//! coordinates so that no intermediate of the three-dimensional geometry can
//! overflow.

#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar (always normalized, positive denominator).
pub type Rational = Ratio<i128>;

pub const MAX_DIM: usize = 4;

/// A point of the integer lattice `Z^d`, `1 <= d <= 4`.
///
/// Unused trailing coordinates are kept at zero, so the derived ordering is
/// the lexicographic order on vectors of equal dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector {
    coords: [i64; MAX_DIM],
    dim: u8,
}

impl IntVector {
    pub fn from_slice(coords: &[i64]) -> Result<Self> {
        if coords.is_empty() || coords.len() > MAX_DIM {
            return Err(Error::UnsupportedDimension(coords.len()));
        }
        let mut c = [0; MAX_DIM];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Self { coords: c, dim: coords.len() as u8 })
    }

    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "unsupported dimension {dim}");
        Self { coords: [0; MAX_DIM], dim: dim as u8 }
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = 1;
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim as usize]
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.coords().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    #[inline]
    pub fn dot(&self, other: &IntVector) -> i128 {
        debug_assert_eq!(self.dim, other.dim);
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    /// gcd of the absolute values of the coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.coords().iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    pub fn scaled(&self, k: i64) -> IntVector {
        let mut out = *self;
        for c in out.coords.iter_mut() {
            *c *= k;
        }
        out
    }

    pub fn max_abs(&self) -> i64 {
        self.coords().iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

impl Index<usize> for IntVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.coords()[i]
    }
}

impl Add for IntVector {
    type Output = IntVector;
    fn add(mut self, rhs: IntVector) -> IntVector {
        debug_assert_eq!(self.dim, rhs.dim);
        for i in 0..MAX_DIM {
            self.coords[i] += rhs.coords[i];
        }
        self
    }
}

impl AddAssign for IntVector {
    fn add_assign(&mut self, rhs: IntVector) {
        *self = *self + rhs;
    }
}

impl Sub for IntVector {
    type Output = IntVector;
    fn sub(mut self, rhs: IntVector) -> IntVector {
        debug_assert_eq!(self.dim, rhs.dim);
        for i in 0..MAX_DIM {
            self.coords[i] -= rhs.coords[i];
        }
        self
    }
}

impl Neg for IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        self.scaled(-1)
    }
}

impl Mul<IntVector> for i64 {
    type Output = IntVector;
    fn mul(self, rhs: IntVector) -> IntVector {
        rhs.scaled(self)
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

macro_rules! impl_from_array {
    ($($n:literal),*) => {$(
        impl From<[i64; $n]> for IntVector {
            fn from(a: [i64; $n]) -> Self {
                IntVector::from_slice(&a).expect("array length is a supported dimension")
            }
        }
    )*};
}
impl_from_array!(1, 2, 3, 4);

impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        IntVector::from_slice(&v).map_err(serde::de::Error::custom)
    }
}

/// Cross product in `Z^3`.
pub fn cross(a: &IntVector, b: &IntVector) -> IntVector {
    debug_assert!(a.dim() == 3 && b.dim() == 3);
    IntVector::from([
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ])
}

/// Divides out the content; keeps the direction.
pub fn primitive_vector(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    let mut out = *v;
    for c in out.coords.iter_mut() {
        *c /= g;
    }
    Ok(out)
}

/// Lattice length of the segment `[a, b]`: one less than the number of
/// lattice points on it.
pub fn segment_lattice_length(a: &IntVector, b: &IntVector) -> u64 {
    (*b - *a).content() as u64
}

/// Dense rectangular integer matrix, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
    cols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: bad.len() });
        }
        Ok(Self { rows, cols })
    }

    pub fn from_vectors(vs: &[IntVector]) -> Self {
        Self::new(vs.iter().map(|v| v.to_vec()).collect()).expect("vectors share a dimension")
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { rows, cols: n }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn row_vector(&self, i: usize) -> IntVector {
        IntVector::from_slice(&self.rows[i]).expect("row dimension supported")
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        Self { rows, cols: self.rows.len() }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        let (_, k) = self.shape();
        let (k2, n) = other.shape();
        if k != k2 {
            return Err(Error::DimensionMismatch { expected: k, got: k2 });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..n)
                    .map(|j| {
                        let s: i128 = (0..k).map(|t| r[t] as i128 * other.rows[t][j] as i128).sum();
                        narrow(s)
                    })
                    .collect()
            })
            .collect();
        Ok(IntMatrix { rows, cols: n })
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &IntVector) -> IntVector {
        debug_assert_eq!(self.cols, v.dim());
        let out: Vec<i64> = self
            .rows
            .iter()
            .map(|r| narrow(r.iter().zip(v.coords()).map(|(&a, &b)| a as i128 * b as i128).sum()))
            .collect();
        IntVector::from_slice(&out).expect("row count is a supported dimension")
    }
}

#[inline]
pub(crate) fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer overflow in exact arithmetic")
}

/// Exact determinant of a square matrix of size at most 4 (cofactor expansion).
pub fn det(m: &IntMatrix) -> Result<i128> {
    let (r, c) = m.shape();
    if r != c {
        return Err(Error::NotSquare { rows: r, cols: c });
    }
    if r > MAX_DIM {
        return Err(Error::UnsupportedDimension(r));
    }
    let rows: Vec<Vec<i128>> = m.rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    Ok(det_rows(&rows))
}

fn det_rows(rows: &[Vec<i128>]) -> i128 {
    match rows.len() {
        0 => 1,
        1 => rows[0][0],
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        n => {
            let mut total = 0i128;
            for j in 0..n {
                if rows[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let term = rows[0][j] * det_rows(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Determinant of the matrix whose rows are `vs` (square).
pub fn det_of(vs: &[IntVector]) -> i128 {
    let n = vs.len();
    debug_assert!(vs.iter().all(|v| v.dim() == n));
    match n {
        1 => vs[0][0] as i128,
        2 => vs[0][0] as i128 * vs[1][1] as i128 - vs[0][1] as i128 * vs[1][0] as i128,
        3 => {
            let (a, b, c) = (&vs[0], &vs[1], &vs[2]);
            let m = |x: i64, y: i64| x as i128 * y as i128;
            a[0] as i128 * (m(b[1], c[2]) - m(b[2], c[1])) - a[1] as i128 * (m(b[0], c[2]) - m(b[2], c[0]))
                + a[2] as i128 * (m(b[0], c[1]) - m(b[1], c[0]))
        }
        _ => {
            let rows: Vec<Vec<i128>> = vs.iter().map(|v| v.coords().iter().map(|&x| x as i128).collect()).collect();
            det_rows(&rows)
        }
    }
}

/// Exact inverse of a matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let d = det(m)?;
    if d.abs() != 1 {
        return Err(Error::NotUnimodular(d));
    }
    let n = m.shape().0;
    let rows128: Vec<Vec<i128>> = m.rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // adjugate entry (i, j) is the (j, i) cofactor
            let minor: Vec<Vec<i128>> = rows128
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = narrow(sign * det_rows(&minor) * d);
        }
    }
    IntMatrix::new(inv)
}

/// Adjugate of a square matrix (`adj(m) * m = det(m) * I`).
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    let (r, c) = m.shape();
    if r != c {
        return Err(Error::NotSquare { rows: r, cols: c });
    }
    let rows128: Vec<Vec<i128>> = m.rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let n = r;
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = rows128
                .iter()
                .enumerate()
                .filter(|&(rr, _)| rr != j)
                .map(|(_, row)| row.iter().enumerate().filter(|&(cc, _)| cc != i).map(|(_, &x)| x).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = narrow(sign * det_rows(&minor));
        }
    }
    IntMatrix::new(adj)
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * m = H`.
///
/// `H` is in row echelon form, each pivot is positive, the entries above a
/// pivot lie in `[0, pivot)` and zero rows come last. Pivot rows are chosen by
/// minimal absolute value, ties broken by the lower row index.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (nr, nc) = m.shape();
    let mut h: Vec<Vec<i128>> = m.rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..nr).map(|i| (0..nr).map(|j| i128::from(i == j)).collect()).collect();
    let mut prow = 0;
    for col in 0..nc {
        if prow == nr {
            break;
        }
        loop {
            let pick = (prow..nr)
                .filter(|&i| h[i][col] != 0)
                .min_by_key(|&i| (h[i][col].abs(), i));
            let Some(p) = pick else { break };
            h.swap(prow, p);
            u.swap(prow, p);
            let pivot = h[prow][col];
            let mut done = true;
            for i in prow + 1..nr {
                if h[i][col] != 0 {
                    let q = Integer::div_floor(&h[i][col], &pivot);
                    for j in 0..nc {
                        h[i][j] -= q * h[prow][j];
                    }
                    for j in 0..nr {
                        u[i][j] -= q * u[prow][j];
                    }
                    if h[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[prow][col] == 0 {
            continue;
        }
        if h[prow][col] < 0 {
            h[prow].iter_mut().for_each(|x| *x = -*x);
            u[prow].iter_mut().for_each(|x| *x = -*x);
        }
        let pivot = h[prow][col];
        for i in 0..prow {
            let q = Integer::div_floor(&h[i][col], &pivot);
            if q != 0 {
                for j in 0..nc {
                    h[i][j] -= q * h[prow][j];
                }
                for j in 0..nr {
                    u[i][j] -= q * u[prow][j];
                }
            }
        }
        prow += 1;
    }
    let to64 = |rows: Vec<Vec<i128>>| rows.into_iter().map(|r| r.into_iter().map(narrow).collect()).collect::<Vec<Vec<i64>>>();
    let hm = IntMatrix { rows: to64(h), cols: nc };
    let um = IntMatrix { rows: to64(u), cols: nr };
    (hm, um)
}

/// Checks the shape predicate documented on [`hermite_normal_form`].
pub fn is_hermite_normal_form(h: &IntMatrix) -> bool {
    let (nr, nc) = h.shape();
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..nr {
        let lead = (0..nc).find(|&j| h.get(i, j) != 0);
        match lead {
            None => seen_zero = true,
            Some(j) => {
                if seen_zero || last_pivot.is_some_and(|p| j <= p) {
                    return false;
                }
                let pivot = h.get(i, j);
                if pivot <= 0 {
                    return false;
                }
                if (0..i).any(|k| !(0..pivot).contains(&h.get(k, j))) {
                    return false;
                }
                last_pivot = Some(j);
            }
        }
    }
    true
}

/// Rank of a family of vectors (fraction-free elimination).
pub fn rank(vs: &[IntVector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<i128>> = vs.iter().map(|v| v.coords().iter().map(|&x| x as i128).collect()).collect();
    rank_rows(rows)
}

pub(crate) fn rank_rows(mut rows: Vec<Vec<i128>>) -> usize {
    let nc = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..nc {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                let g = a.gcd(&b);
                let (fa, fb) = (b / g, a / g);
                for j in 0..nc {
                    rows[i][j] = rows[i][j] * fb - rows[r][j] * fa;
                }
                let cg = rows[i].iter().fold(0i128, |g, x| g.gcd(x));
                if cg > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= cg);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solves a rational linear system `rows * x = rhs`.
///
/// Returns `None` if the system is inconsistent; free variables are set to
/// zero otherwise.
pub fn solve_rational(rows: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(*b);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..=n {
                    let t = a[r][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][n];
    }
    Some(x)
}

/// Coefficients of `target` in terms of linearly independent `basis` vectors,
/// or `None` if `target` is outside their span.
pub fn coordinates_in(basis: &[IntVector], target: &IntVector) -> Option<Vec<Rational>> {
    let d = target.dim();
    let rows: Vec<Vec<Rational>> = (0..d)
        .map(|i| basis.iter().map(|b| Rational::from_integer(b[i] as i128)).collect())
        .collect();
    let rhs: Vec<Rational> = target.coords().iter().map(|&x| Rational::from_integer(x as i128)).collect();
    solve_rational(&rows, &rhs)
}

/// Relative normalized volume of the parallelepiped spanned by linearly
/// independent `edges` with respect to the lattice of their linear span: the
/// gcd of all maximal minors.
pub fn relative_volume(edges: &[IntVector]) -> i128 {
    let k = edges.len();
    if k == 0 {
        return 1;
    }
    let d = edges[0].dim();
    let mut g = 0i128;
    for cols in combinations(d, k) {
        let rows: Vec<Vec<i128>> = edges.iter().map(|e| cols.iter().map(|&c| e[c] as i128).collect()).collect();
        g = g.gcd(&det_rows(&rows));
    }
    g
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub(crate) fn lcm_of_denominators(xs: &[Rational]) -> i128 {
    xs.iter().fold(1i128, |l, x| l.lcm(x.denom()))
}

pub(crate) fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}
