//! Brute-force oracles checked against the library. Oracles use their own
//! integer arithmetic and do not call into the code under test.

use latpoly::fixtures::{bruns_polytope, reeve_simplex};
use latpoly::{IntVector, LatticePolytope, RationalCone};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn det(m: &[Vec<i64>]) -> i128 {
    match m.len() {
        2 => m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128,
        3 => {
            let e = |i: usize, j: usize| m[i][j] as i128;
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        _ => unreachable!(),
    }
}

/// Coordinates of `x` in the generator basis, scaled by `|det|`.
fn scaled_coords(gens: &[Vec<i64>], x: &[i64]) -> (Vec<i128>, i128) {
    let d = det(gens);
    let coords = (0..gens.len())
        .map(|i| {
            let mut m = gens.to_vec();
            m[i] = x.to_vec();
            det(&m) * d.signum()
        })
        .collect();
    (coords, d.abs())
}

fn box_range(gens: &[Vec<i64>]) -> Vec<(i64, i64)> {
    (0..gens[0].len())
        .map(|j| {
            let lo: i64 = gens.iter().map(|g| g[j].min(0)).sum();
            let hi: i64 = gens.iter().map(|g| g[j].max(0)).sum();
            (lo, hi)
        })
        .collect()
}

fn grid(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &(lo, hi) in ranges {
        out = out.into_iter().flat_map(|p| (lo..=hi).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Hilbert basis of a full-dimensional simplicial cone: nonzero points of the
/// closed parallelepiped that are not a sum of two nonzero points of it.
fn hilbert_oracle(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let pts: Vec<(Vec<i64>, Vec<i128>)> = grid(&box_range(gens))
        .into_iter()
        .filter(|x| x.iter().any(|&c| c != 0))
        .filter_map(|x| {
            let (c, d) = scaled_coords(gens, &x);
            c.iter().all(|&t| (0..=d).contains(&t)).then_some((x, c))
        })
        .collect();
    let mut out: Vec<Vec<i64>> = pts
        .iter()
        .filter(|(x, cx)| !pts.iter().any(|(y, cy)| y != x && cx.iter().zip(cy).all(|(a, b)| b <= a)))
        .map(|(x, _)| x.clone())
        .collect();
    out.sort();
    out
}

fn lib_hilbert(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let vs: Vec<IntVector> = gens.iter().map(|g| IntVector::from_slice(g).unwrap()).collect();
    RationalCone::new(&vs).unwrap().hilbert_basis().iter().map(|v| v.to_vec()).collect()
}

fn primitive_2d(r: i64) -> Vec<Vec<i64>> {
    grid(&[(-r, r), (-r, r)]).into_iter().filter(|v| gcd(v[0], v[1]) == 1).collect()
}

#[test]
fn hilbert_basis_of_planar_cones() {
    let mut cones: Vec<Vec<Vec<i64>>> = Vec::new();
    // one representative of every class up to multiplicity 20
    for q in 1..=20 {
        for p in 0..q {
            if gcd(p, q) == 1 {
                cones.push(vec![vec![1, 0], vec![p, q]]);
            }
        }
    }
    let prim = primitive_2d(4);
    for (i, a) in prim.iter().enumerate() {
        for b in &prim[i + 1..] {
            let m = det(&[a.clone(), b.clone()]).abs();
            if (1..=20).contains(&m) {
                cones.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    assert!(cones.len() > 1000);
    for g in &cones {
        assert_eq!(lib_hilbert(g), hilbert_oracle(g), "cone {g:?}");
    }
}

#[test]
fn hilbert_basis_of_reeve_cones() {
    for k in 1..=6 {
        let g = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, k]];
        let h = hilbert_oracle(&g);
        assert_eq!(lib_hilbert(&g), h, "k = {k}");
    }
    // the generators plus (1,1,j) for 0 < j < k
    let g = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 4]];
    assert_eq!(hilbert_oracle(&g).len(), 4 + 2);
}

#[test]
fn box_points_count_multiplicity() {
    let gens3 = [
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 5]],
        vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 2]],
        vec![vec![1, 2, 3], vec![-1, 1, 0], vec![1, 0, 4]],
    ];
    for g in gens3.iter().chain(std::iter::once(&vec![vec![3, 1], vec![-1, 4]])) {
        let vs: Vec<IntVector> = g.iter().map(|x| IntVector::from_slice(x).unwrap()).collect();
        let c = RationalCone::new(&vs).unwrap();
        let m = det(g).unsigned_abs() as u64;
        assert_eq!(c.multiplicity().unwrap(), m);
        assert_eq!(c.box_points().unwrap().len() as u64, m);
        // half-open box oracle
        let oracle = grid(&box_range(g))
            .into_iter()
            .filter(|x| {
                let (c, d) = scaled_coords(g, x);
                c.iter().all(|&t| (0..d).contains(&t))
            })
            .count() as u64;
        assert_eq!(oracle, m);
    }
}

/// Lattice points by testing every point of the bounding box against all
/// hyperplanes through affinely independent vertex triples.
fn count_points_3d(vertices: &[[i64; 3]]) -> usize {
    let lo: Vec<i64> = (0..3).map(|j| vertices.iter().map(|v| v[j]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..3).map(|j| vertices.iter().map(|v| v[j]).max().unwrap()).collect();
    let mut planes = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            for c in b + 1..vertices.len() {
                let u: Vec<i64> = (0..3).map(|j| vertices[b][j] - vertices[a][j]).collect();
                let w: Vec<i64> = (0..3).map(|j| vertices[c][j] - vertices[a][j]).collect();
                let n = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
                if n == [0, 0, 0] {
                    continue;
                }
                let val = |p: &[i64]| (0..3).map(|j| n[j] * p[j]).sum::<i64>();
                let off = val(&vertices[a]);
                let vals: Vec<i64> = vertices.iter().map(|v| val(v) - off).collect();
                if vals.iter().all(|&x| x >= 0) {
                    planes.push((n, off, 1));
                } else if vals.iter().all(|&x| x <= 0) {
                    planes.push((n, off, -1));
                }
            }
        }
    }
    grid(&[(lo[0], hi[0]), (lo[1], hi[1]), (lo[2], hi[2])])
        .iter()
        .filter(|p| planes.iter().all(|(n, off, s)| s * ((0..3).map(|j| n[j] * p[j]).sum::<i64>() - off) >= 0))
        .count()
}

#[test]
fn lattice_point_counts_of_named_families() {
    for k in 1..=12 {
        let r = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, k]];
        assert_eq!(reeve_simplex(k).unwrap().num_lattice_points(), count_points_3d(&r));
        let r2: Vec<[i64; 3]> = r.iter().map(|v| [2 * v[0], 2 * v[1], 2 * v[2]]).collect();
        assert_eq!(reeve_simplex(k).unwrap().dilate(2).unwrap().num_lattice_points(), count_points_3d(&r2));
        let q = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, k], [1, 1, k + 1]];
        assert_eq!(bruns_polytope(k).unwrap().num_lattice_points(), count_points_3d(&q));
    }
    let odd = [[0, 0, 0], [3, 1, 0], [1, 4, 1], [2, 2, 5], [0, 1, 3]];
    assert_eq!(LatticePolytope::from_coords(&odd).unwrap().num_lattice_points(), count_points_3d(&odd));
}
