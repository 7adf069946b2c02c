use latpoly::appendix::{polygons, polytopes_3d};
use latpoly::classify::{
    appendix_fans, blow_down, blow_up_fan, chamber_model, classify, enumerate_rhs, find_blow_down, min_lattice_points,
    minimal_smooth_2fans, ClassificationResult, ClassifyOptions, Pruning,
};
use latpoly::{Fan, IntVector};
use latpoly::equivalence::are_equivalent;

fn histogram(r: &ClassificationResult) -> Vec<(usize, usize)> {
    r.vertex_histogram().into_iter().collect()
}

fn run_2d() -> ClassificationResult {
    classify(2, 12, &minimal_smooth_2fans(9), ClassifyOptions::default()).unwrap()
}

#[test]
fn polygons_with_at_most_12_points() {
    let r = run_2d();
    assert!(!r.incomplete);
    assert_eq!(r.classes.len(), 41);
    assert_eq!(histogram(&r), vec![(3, 3), (4, 30), (5, 3), (6, 4), (7, 0), (8, 1)]);
    let found: Vec<_> = r.classes.iter().map(|c| c.form.polytope()).collect();
    for p in polygons() {
        assert_eq!(found.iter().filter(|q| are_equivalent(&p, q)).count(), 1, "{:?}", p.vertices());
    }
}

#[test]
fn three_polytopes_from_tabulated_fans() {
    let r = classify(3, 12, &appendix_fans(3), ClassifyOptions::default()).unwrap();
    assert!(!r.incomplete);
    assert_eq!(r.classes.len(), 33);
    assert_eq!(histogram(&r), vec![(4, 2), (5, 0), (6, 25), (7, 0), (8, 6)]);
    let found: Vec<_> = r.classes.iter().map(|c| c.form.polytope()).collect();
    for p in polytopes_3d() {
        assert_eq!(found.iter().filter(|q| are_equivalent(&p, q)).count(), 1, "{:?}", p.vertices());
    }
}

#[test]
fn classification_is_deterministic() {
    let a = classify(2, 9, &minimal_smooth_2fans(6), ClassifyOptions { jobs: Some(1), ..Default::default() }).unwrap();
    let b = classify(2, 9, &minimal_smooth_2fans(6), ClassifyOptions { jobs: Some(4), ..Default::default() }).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

fn fan2(rays: &[[i64; 2]], cones: &[[usize; 2]]) -> Fan {
    Fan::new(rays.iter().map(|&r| IntVector::from(r)).collect(), cones.iter().map(|c| c.to_vec()).collect()).unwrap()
}

#[test]
fn minimum_can_drop_under_a_blow_up() {
    let f = fan2(&[[-10, -1], [-9, -1], [-1, 0], [0, 1], [1, 0]], &[[0, 1], [0, 2], [1, 4], [2, 3], [3, 4]]);
    let e = |x: i64, y: i64| f.rays().iter().position(|r| *r == IntVector::from([x, y])).unwrap();
    let g = blow_up_fan(&f, &[e(0, 1), e(1, 0)]).unwrap();
    assert_eq!(min_lattice_points(&chamber_model(&f).unwrap()), Some(35));
    assert_eq!(min_lattice_points(&chamber_model(&g).unwrap()), Some(34));
}

#[test]
fn octagon_fan_has_a_blow_down_without_small_polygons() {
    let octagon = polygons().into_iter().find(|p| p.vertices().len() == 8).unwrap();
    assert_eq!(octagon.num_lattice_points(), 12);
    let f = octagon.normal_fan().unwrap();
    let down = blow_down(&f, find_blow_down(&f).unwrap()).unwrap();
    assert!(enumerate_rhs(&chamber_model(&down).unwrap(), 12).is_empty());
}

#[test]
fn empty_chamber_pruning_loses_the_octagon() {
    let opts = ClassifyOptions { pruning: Pruning::EmptyChamber, ..Default::default() };
    let r = classify(2, 12, &minimal_smooth_2fans(9), opts).unwrap();
    assert_eq!(r.classes.len(), 40);
    assert!(r.classes.iter().all(|c| c.num_vertices < 8));
}

#[test]
fn area_bound_for_classified_polygons() {
    for c in run_2d().classes {
        let p = c.form.polytope();
        let a = p.vertices().len() as i64;
        let b = *p.edge_lengths().iter().max().unwrap() as i64;
        // twice the Euclidean area is the normalized volume
        let twice_area = p.normalized_volume() as i64;
        let twice_bound = match a {
            3 => b * b,
            4 => 2 * b * b,
            _ => 2 * (4i64.pow((a - 4) as u32) * b * b - a + 4),
        };
        assert!(twice_area <= twice_bound, "{:?}", p.vertices());
    }
}
