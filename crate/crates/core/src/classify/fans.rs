//! Smooth complete fans: seeds, blow-ups, blow-downs and a key that is
//! invariant under `GL(d, Z)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cones::{fan_is_smooth, Fan};
use crate::error::{Error, Result};
use crate::lattice::{combinations, det_of, permutations, primitive_vector, unimodular_inverse, IntMatrix, IntVector};
use crate::polytope::LatticePolytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Builtin2d,
    Appendix,
    File,
}

#[derive(Clone, Debug)]
pub struct SeedFan {
    pub name: String,
    pub provenance: Provenance,
    pub fan: Fan,
}

#[derive(Clone, Debug, Default)]
pub struct SeedFanSet {
    pub fans: Vec<SeedFan>,
}

impl SeedFanSet {
    pub fn len(&self) -> usize {
        self.fans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fans.is_empty()
    }

    pub fn from_fans(fans: Vec<Fan>, provenance: Provenance) -> SeedFanSet {
        let fans = fans
            .into_iter()
            .enumerate()
            .map(|(i, fan)| SeedFan { name: format!("seed-{i}"), provenance, fan })
            .collect();
        SeedFanSet { fans }
    }
}

fn v2(x: i64, y: i64) -> IntVector {
    IntVector::from([x, y])
}

/// The fan of the projective plane.
pub fn p2_fan() -> Fan {
    Fan::new(vec![v2(1, 0), v2(0, 1), v2(-1, -1)], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid fan")
}

/// The fan with rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch_fan(a: i64) -> Fan {
    Fan::new(
        vec![v2(1, 0), v2(0, 1), v2(-1, a), v2(0, -1)],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )
    .expect("valid fan")
}

/// The projective plane and the Hirzebruch fans with `0 <= a <= max_param`.
pub fn minimal_smooth_2fans(max_param: u32) -> SeedFanSet {
    let mut fans = vec![SeedFan { name: "P2".into(), provenance: Provenance::Builtin2d, fan: p2_fan() }];
    for a in 0..=max_param {
        fans.push(SeedFan { name: format!("F{a}"), provenance: Provenance::Builtin2d, fan: hirzebruch_fan(a as i64) });
    }
    SeedFanSet { fans }
}

/// Normal fans of the tabulated polytopes of dimension `dim`, one per
/// `GL(d, Z)` class.
pub fn appendix_fans(dim: usize) -> SeedFanSet {
    let polys: Vec<LatticePolytope> = match dim {
        2 => crate::appendix::polygons(),
        3 => crate::appendix::polytopes_3d(),
        _ => Vec::new(),
    };
    let mut seen = BTreeSet::new();
    let mut fans = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        let fan = p.normal_fan().expect("full-dimensional");
        if seen.insert(fan_key(&fan)) {
            fans.push(SeedFan { name: format!("appendix-{dim}d-{}", i + 1), provenance: Provenance::Appendix, fan });
        }
    }
    SeedFanSet { fans }
}

/// Faces of a smooth fan of dimension at least 2, as sorted ray index sets.
pub fn faces_of_dim_at_least_two(f: &Fan) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    for c in f.cones() {
        for k in 2..=c.len() {
            for sub in combinations(c.len(), k) {
                out.insert(sub.iter().map(|&i| c[i]).collect::<Vec<_>>());
            }
        }
    }
    out.into_iter().collect()
}

/// Stellar subdivision at the primitive sum of the rays of `face`. The
/// result is normalized (rays sorted, cones sorted).
pub fn blow_up_fan(f: &Fan, face: &[usize]) -> Result<Fan> {
    if !fan_is_smooth(f) {
        return Err(Error::FanNotSmooth);
    }
    let mut face: Vec<usize> = face.to_vec();
    face.sort();
    face.dedup();
    if face.len() < 2 || !f.cones().iter().any(|c| face.iter().all(|i| c.contains(i))) {
        return Err(Error::NotAFace(face));
    }
    let sum = face.iter().fold(IntVector::zero(f.dim()), |acc, &i| acc + f.rays()[i]);
    let new_ray = primitive_vector(&sum)?;
    let mut rays = f.rays().to_vec();
    let new_index = rays.len();
    rays.push(new_ray);
    let mut cones = Vec::new();
    for c in f.cones() {
        if face.iter().all(|i| c.contains(i)) {
            for &drop in &face {
                let mut nc: Vec<usize> = c.iter().copied().filter(|&i| i != drop).collect();
                nc.push(new_index);
                cones.push(nc);
            }
        } else {
            cones.push(c.clone());
        }
    }
    Ok(Fan::new(rays, cones)?.normalized())
}

/// Rays of a 2D fan in counterclockwise order starting from the first ray.
pub fn cyclic_ray_order(f: &Fan) -> Vec<usize> {
    let half = |v: &IntVector| if v[1] > 0 || (v[1] == 0 && v[0] > 0) { 0 } else { 1 };
    let mut order: Vec<usize> = (0..f.rays().len()).collect();
    order.sort_by(|&a, &b| {
        let (ra, rb) = (&f.rays()[a], &f.rays()[b]);
        half(ra).cmp(&half(rb)).then_with(|| 0.cmp(&det_of(&[*ra, *rb])))
    });
    order
}

/// A ray of a complete smooth 2D fan equal to the sum of its two neighbours.
pub fn find_blow_down(f: &Fan) -> Option<usize> {
    if f.dim() != 2 || f.rays().len() < 4 {
        return None;
    }
    let order = cyclic_ray_order(f);
    let n = order.len();
    let mut hits: Vec<usize> = (0..n)
        .filter(|&k| {
            let prev = f.rays()[order[(k + n - 1) % n]];
            let next = f.rays()[order[(k + 1) % n]];
            prev + next == f.rays()[order[k]]
        })
        .map(|k| order[k])
        .collect();
    hits.sort();
    hits.first().copied()
}

/// Removes ray `i` of a 2D fan and merges its two cones.
pub fn blow_down(f: &Fan, i: usize) -> Result<Fan> {
    if f.dim() != 2 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    let order = cyclic_ray_order(f);
    let n = order.len();
    let k = order.iter().position(|&j| j == i).ok_or_else(|| Error::InvalidArgument(format!("no ray {i}")))?;
    let kept: Vec<usize> = (1..n).map(|s| order[(k + s) % n]).collect();
    let rays: Vec<IntVector> = kept.iter().map(|&j| f.rays()[j]).collect();
    let m = rays.len();
    let cones = (0..m).map(|s| vec![s, (s + 1) % m]).collect();
    Ok(Fan::new(rays, cones)?.normalized())
}

/// Canonical description of a smooth fan up to `GL(d, Z)`: the least, over
/// every maximal cone and ordering of its rays, of the image under the map
/// sending that ordered cone to the standard basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FanKey {
    pub rays: Vec<IntVector>,
    pub cones: Vec<Vec<usize>>,
}

impl FanKey {
    pub fn id(&self) -> String {
        let mut h = Sha256::new();
        for r in &self.rays {
            h.update(r.to_string().as_bytes());
        }
        h.update(b"|");
        for c in &self.cones {
            h.update(format!("{c:?}").as_bytes());
        }
        hex::encode(&h.finalize()[..8])
    }

    pub fn fan(&self) -> Fan {
        Fan::new(self.rays.clone(), self.cones.clone()).expect("keys describe valid fans")
    }
}

pub fn fan_key(f: &Fan) -> FanKey {
    if f.dim() == 2 && f.cones().len() == f.rays().len() && f.rays().len() >= 3 {
        return fan_key_2d(f);
    }
    let d = f.dim();
    let mut best: Option<FanKey> = None;
    for c in f.cones() {
        if c.len() != d {
            continue;
        }
        for perm in permutations(d) {
            // columns are the ordered rays; invert to send them to e_1..e_d
            let cols: Vec<IntVector> = perm.iter().map(|&j| f.rays()[c[j]]).collect();
            let m = IntMatrix::from_vectors(&cols).transpose();
            let Ok(inv) = unimodular_inverse(&m) else { continue };
            let images: Vec<IntVector> = f.rays().iter().map(|r| inv.apply(r)).collect();
            let mut order: Vec<usize> = (0..images.len()).collect();
            order.sort_by_key(|&i| images[i]);
            let mut pos = vec![0; images.len()];
            for (new, &old) in order.iter().enumerate() {
                pos[old] = new;
            }
            let mut cones: Vec<Vec<usize>> = f
                .cones()
                .iter()
                .map(|cc| {
                    let mut v: Vec<usize> = cc.iter().map(|&i| pos[i]).collect();
                    v.sort();
                    v
                })
                .collect();
            cones.sort();
            let key = FanKey { rays: order.iter().map(|&i| images[i]).collect(), cones };
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.unwrap_or_else(|| {
        let n = f.normalized();
        FanKey { rays: n.rays().to_vec(), cones: n.cones().to_vec() }
    })
}

/// Self-intersection numbers `c_i` with `v_(i-1) + v_(i+1) = c_i v_i`, in
/// counterclockwise order.
pub fn self_intersections(f: &Fan) -> Vec<i64> {
    let order = cyclic_ray_order(f);
    let n = order.len();
    let r = |k: usize| f.rays()[order[k % n]];
    (0..n).map(|k| det_of(&[r(k + n - 1), r(k + 1)]) as i64).collect()
}

/// For complete smooth 2D fans the class is the cyclic sequence of
/// self-intersection numbers up to rotation and reversal; the key is the fan
/// rebuilt from the least such sequence starting at `(1,0), (0,1)`.
fn fan_key_2d(f: &Fan) -> FanKey {
    let c = self_intersections(f);
    let n = c.len();
    let mut best: Option<Vec<i64>> = None;
    let rev: Vec<i64> = c.iter().rev().copied().collect();
    for seq in [&c, &rev] {
        for s in 0..n {
            let rot: Vec<i64> = (0..n).map(|k| seq[(s + k) % n]).collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    let c = best.expect("nonempty");
    // v_0 = (1,0), v_1 = (0,1), v_(k+1) = c_k v_k - v_(k-1)
    let mut rays = vec![v2(1, 0), v2(0, 1)];
    for k in 1..n - 1 {
        let next = c[k] * rays[k] - rays[k - 1];
        rays.push(next);
    }
    let cones = (0..n).map(|k| vec![k, (k + 1) % n]).collect();
    let fan = Fan::new(rays, cones).expect("sequence of a complete smooth fan").normalized();
    FanKey { rays: fan.rays().to_vec(), cones: fan.cones().to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::fan_is_complete;

    #[test]
    fn seed_sets() {
        let s0 = minimal_smooth_2fans(0);
        assert_eq!(s0.len(), 2);
        assert_eq!(minimal_smooth_2fans(9).len(), 11);
        for s in minimal_smooth_2fans(9).fans {
            assert!(fan_is_complete(&s.fan).unwrap());
            assert!(fan_is_smooth(&s.fan));
        }
    }

    #[test]
    fn blow_up_examples() {
        let b = blow_up_fan(&p2_fan(), &[0, 1]).unwrap();
        assert_eq!(b.rays().len(), 4);
        assert!(b.rays().contains(&v2(1, 1)));
        assert!(fan_is_complete(&b).unwrap() && fan_is_smooth(&b));
        let r = find_blow_down(&b).unwrap();
        assert_eq!(b.rays()[r], v2(1, 1));
        assert_eq!(fan_key(&blow_down(&b, r).unwrap()), fan_key(&p2_fan()));

        let sq = hirzebruch_fan(0);
        let b = blow_up_fan(&sq, &[0, 1]).unwrap();
        assert_eq!(b.rays().len(), 5);

        let cube = LatticePolytope::from_coords(&[
            [0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1],
        ])
        .unwrap()
        .normal_fan()
        .unwrap();
        let e: Vec<usize> = (0..3)
            .map(|i| cube.rays().iter().position(|r| *r == IntVector::unit(3, i)).unwrap())
            .collect();
        let b = blow_up_fan(&cube, &e).unwrap();
        assert!(b.rays().contains(&IntVector::from([1, 1, 1])));
        assert_eq!(b.cones().len(), cube.cones().len() + 2);
        assert!(fan_is_complete(&b).unwrap() && fan_is_smooth(&b));
        assert!(blow_up_fan(&cube, &[0]).is_err());
    }

    #[test]
    fn minimal_fans_have_no_blow_down() {
        assert_eq!(find_blow_down(&p2_fan()), None);
        assert_eq!(find_blow_down(&hirzebruch_fan(3)), None);
        assert_eq!(find_blow_down(&hirzebruch_fan(0)), None);
    }

    #[test]
    fn blow_up_then_blow_down_round_trip() {
        for seed in minimal_smooth_2fans(6).fans {
            for face in faces_of_dim_at_least_two(&seed.fan) {
                let b = blow_up_fan(&seed.fan, &face).unwrap();
                assert!(find_blow_down(&b).is_some());
            }
        }
    }

    #[test]
    fn fan_key_is_gl_invariant() {
        let f = hirzebruch_fan(2);
        let g = IntMatrix::new(vec![vec![2, 1], vec![1, 1]]).unwrap();
        let rays: Vec<IntVector> = f.rays().iter().map(|r| g.apply(r)).collect();
        let h = Fan::new(rays, f.cones().to_vec()).unwrap();
        assert_eq!(fan_key(&f), fan_key(&h));
        assert_ne!(fan_key(&hirzebruch_fan(1)), fan_key(&hirzebruch_fan(2)));
        assert_eq!(fan_key(&f).fan().rays().len(), 4);
    }

    #[test]
    fn appendix_fans_are_smooth_and_complete() {
        for dim in [2, 3] {
            let seeds = appendix_fans(dim);
            assert!(!seeds.is_empty());
            for s in &seeds.fans {
                assert!(fan_is_complete(&s.fan).unwrap());
                assert!(fan_is_smooth(&s.fan));
            }
        }
    }
}
