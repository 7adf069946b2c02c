use latpoly::cones::{is_smooth, is_very_ample, polytope_multiplicity};
use latpoly::fixtures::{bruns_polytope, fibonacci_chain, fibonacci_identities, fibonacci_polygon, reeve_simplex};
use latpoly::IntVector;

#[test]
fn reeve_simplices() {
    for k in 1..=50 {
        let r = reeve_simplex(k).unwrap();
        assert_eq!(r.num_lattice_points(), 4);
        assert_eq!(r.normalized_volume(), k as u64);
        assert_eq!(r.dilate(2).unwrap().num_lattice_points(), k as usize + 9);
        assert_eq!(is_smooth(&r), k == 1);
    }
}

#[test]
fn bruns_polytopes() {
    let apex = IntVector::from([0, 1, 0]);
    for k in 1..=20 {
        let q = bruns_polytope(k).unwrap();
        assert_eq!(q.num_lattice_points(), 8);
        assert_eq!(polytope_multiplicity(&q).unwrap(), k as u64 + 1);
        assert!(is_very_ample(&q).unwrap(), "k = {k}");
        let gorenstein = q.tangent_cone(&apex).unwrap().gorenstein_data().is_some_and(|g| g.is_gorenstein);
        assert_eq!(gorenstein, k == 1, "k = {k}");
    }
}

#[test]
fn fibonacci_chain_for_five() {
    let c = fibonacci_chain(5).unwrap();
    let expected = [[1, 0], [3, 1], [8, 3], [21, 8], [55, 21], [34, 13], [13, 5], [5, 2], [2, 1], [1, 1], [0, 1]];
    assert_eq!(c.edge_vectors, expected.map(IntVector::from).to_vec());
}

#[test]
fn fibonacci_identities_have_alternating_signs() {
    for k in 1..=6 {
        assert_eq!(fibonacci_identities(k), [-1, 1, -1, 1], "k = {k}");
    }
}

#[test]
fn fibonacci_polygons() {
    let mut last_area = 0;
    for k in 1..=6 {
        let p = fibonacci_polygon(k).unwrap();
        assert!(is_smooth(&p), "k = {k}");
        // the axis-parallel steps of adjacent reflected chains merge
        assert_eq!(p.vertices().len(), 8 * k as usize);
        let mut lengths = p.edge_lengths();
        lengths.sort();
        assert_eq!(lengths.iter().filter(|&&l| l == 2).count(), 4);
        assert!(lengths.iter().all(|&l| l <= 2));
        let area = p.normalized_volume();
        assert!(area > last_area);
        last_area = area;
    }
}

#[test]
fn reeve_multiplicity_is_the_normal_cone_determinant() {
    // inward normals at the origin: (0,0,1), (0,-k,1), (k,0,-1)
    for k in 1..=10 {
        assert_eq!(polytope_multiplicity(&reeve_simplex(k).unwrap()).unwrap(), (k * k) as u64);
    }
}
