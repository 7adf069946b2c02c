use latpoly::appendix::polytopes_3d;
use latpoly::triangulation::{find_flag_unimodular_regular, is_flag, is_unimodular_triangulation, pulling_triangulation};

#[test]
fn every_tabulated_3_polytope_has_a_flag_unimodular_pulling_triangulation() {
    for (i, p) in polytopes_3d().iter().enumerate() {
        let (t, order) = find_flag_unimodular_regular(p, 100_000, 0).unwrap_or_else(|| panic!("no certificate for #{i}"));
        let replay = pulling_triangulation(p, &order);
        assert_eq!(replay, t);
        assert!(is_unimodular_triangulation(&replay) && is_flag(&replay));
        assert_eq!(replay.simplices.len() as u64, p.normalized_volume());
    }
}

#[test]
fn search_is_reproducible_across_seeds_and_threads() {
    let p = &polytopes_3d()[30];
    let a = find_flag_unimodular_regular(p, 1000, 11).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = pool.install(|| find_flag_unimodular_regular(p, 1000, 11).unwrap());
    assert_eq!(a, b);
}
