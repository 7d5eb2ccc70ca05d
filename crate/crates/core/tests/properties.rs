//! Randomized and exhaustive agreement between the fast routines and the
//! brute-force oracles.

use antipode_lab::oracle::{
    degree_by_enumeration, free_sets_by_full_scan, naive_cover_exists,
    self_antipodality_by_enumeration,
};
use antipode_lab::{
    asterisk_set, classify_six_ridge_set, cover_report, enumerate_antipode_free_sets,
    enumerate_faces, exists_cover, k_of_d, Cover, CoverSet, Face, Outcome, SearchOptions,
    SearchProblem, SixRidgeShape,
};
use proptest::prelude::*;

fn face_in(d: u32) -> impl Strategy<Value = Face> {
    let full = (1u64 << d) as u32;
    (0..full, 0..full).prop_map(move |(fixed, value)| Face::new(d, fixed, value).unwrap())
}

fn face_pair() -> impl Strategy<Value = (Face, Face)> {
    (1u32..=6).prop_flat_map(|d| (face_in(d), face_in(d)))
}

fn ridges(d: u32) -> Vec<Face> {
    enumerate_faces(d, d as i32 - 2).unwrap()
}

/// A random assignment of every ridge to one of `d` sets.
fn ridge_cover() -> impl Strategy<Value = Cover> {
    (3u32..=5).prop_flat_map(|d| {
        let n = ridges(d).len();
        proptest::collection::vec(0..d as usize, n).prop_map(move |slots| {
            let mut sets = vec![Vec::new(); d as usize];
            for (face, slot) in ridges(d).into_iter().zip(slots) {
                sets[slot].push(face);
            }
            let sets = sets
                .into_iter()
                .map(|faces| CoverSet::new(d, 2, faces).unwrap())
                .collect();
            Cover::new(d, 2, sets).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn antipode_is_an_involution(face in (1u32..=8).prop_flat_map(face_in)) {
        prop_assert_eq!(face.antipode().antipode(), face);
        prop_assert_eq!(face.antipode().dim(), face.dim());
    }

    #[test]
    fn degree_matches_enumeration((a, b) in face_pair()) {
        let fast = a.antipodality_degree(&b).unwrap();
        prop_assert_eq!(fast, degree_by_enumeration(&a, &b));
        prop_assert_eq!(fast, b.antipodality_degree(&a).unwrap());
        prop_assert!(fast <= a.dim().min(b.dim()));
    }

    #[test]
    fn realising_subfaces_are_antipodal((a, b) in face_pair()) {
        let k = a.antipodality_degree(&b).unwrap();
        match a.antipodal_subfaces(&b).unwrap() {
            Some((g, h)) => {
                prop_assert_eq!(g.dim(), k);
                prop_assert!(a.contains(&g).unwrap());
                prop_assert!(b.contains(&h).unwrap());
                prop_assert!(g.is_antipodal(&h).unwrap());
            }
            None => prop_assert_eq!(k, -1),
        }
    }

    #[test]
    fn degree_is_monotone_under_inclusion((a, b) in face_pair(), pick in any::<prop::sample::Index>()) {
        let subs: Vec<Face> = (0..=a.dim()).flat_map(|k| a.subfaces(k).unwrap()).collect();
        let sub = subs[pick.index(subs.len())];
        prop_assert!(sub.antipodality_degree(&b).unwrap() <= a.antipodality_degree(&b).unwrap());
    }

    #[test]
    fn face_text_round_trips(face in (1u32..=12).prop_flat_map(face_in)) {
        let text = face.to_string();
        prop_assert_eq!(Face::parse(&text, face.ambient_dim()).unwrap(), face);
        prop_assert_eq!(Face::parse(&text.to_lowercase(), face.ambient_dim()).unwrap(), face);
    }

    #[test]
    fn cover_text_round_trips(cover in ridge_cover()) {
        prop_assert_eq!(Cover::parse(&cover.to_text()).unwrap(), cover);
    }

    #[test]
    fn random_d_set_ridge_covers_hit_the_bound(cover in ridge_cover()) {
        let report = cover_report(&cover);
        prop_assert!(report.is_complete);
        let d = cover.ambient_dim();
        prop_assert!(report.max_self_antipodality >= k_of_d(d).unwrap());
        let w = report.witness.expect("max >= 0 has a witness");
        prop_assert_eq!(w.pair.k, report.max_self_antipodality);
    }

    #[test]
    fn set_value_matches_enumeration(
        (d, picks) in (1u32..=4).prop_flat_map(|d| {
            let n = 3usize.pow(d);
            (Just(d), proptest::collection::btree_set(0..n, 0..=6))
        })
    ) {
        let all: Vec<Face> = (0..=d as i32).flat_map(|k| enumerate_faces(d, k).unwrap()).collect();
        let faces: Vec<Face> = picks.into_iter().map(|i| all[i]).collect();
        // Mixed-dimension sets are not covers; check the pairwise maximum directly.
        let fast = faces
            .iter()
            .flat_map(|a| faces.iter().map(move |b| a.antipodality_degree(b).unwrap()))
            .max()
            .unwrap_or(-1);
        prop_assert_eq!(fast, self_antipodality_by_enumeration(&faces));
    }

    #[test]
    fn cover_set_value_matches_enumeration(
        (d, picks) in (2u32..=5).prop_flat_map(|d| {
            let n = ridges(d).len();
            (Just(d), proptest::collection::btree_set(0..n, 0..=8))
        })
    ) {
        let all = ridges(d);
        let faces: Vec<Face> = picks.into_iter().map(|i| all[i]).collect();
        let set = CoverSet::new(d, 2, faces.clone()).unwrap();
        prop_assert_eq!(set.self_antipodality().0, self_antipodality_by_enumeration(&faces));
    }

    #[test]
    fn asterisks_of_close_vertices_share_a_ridge(
        (d, u, v) in (3u32..=7).prop_flat_map(|d| {
            let n = 1u32 << d;
            (Just(d), 0..n, 0..n)
        })
    ) {
        prop_assume!(d - (u ^ v).count_ones() >= 2);
        let a = asterisk_set(&Face::vertex(d, u).unwrap()).unwrap();
        let b = asterisk_set(&Face::vertex(d, v).unwrap()).unwrap();
        prop_assert!(a.faces().iter().any(|f| b.contains(f)));
    }

    #[test]
    fn asterisk_meets_boundary_of_facet_through_vertex(
        (d, v, pos) in (3u32..=7).prop_flat_map(|d| (Just(d), 0..(1u32 << d), 1..=d))
    ) {
        let vertex = Face::vertex(d, v).unwrap();
        let value = vertex.value_mask() >> (d - pos) & 1 == 1;
        let facet = Face::facet(d, pos, value).unwrap();
        prop_assert!(facet.contains(&vertex).unwrap());
        let ast = asterisk_set(&vertex).unwrap();
        prop_assert!(ast.faces().iter().any(|r| facet.contains(r).unwrap()));
    }
}

#[test]
fn search_agrees_with_naive_assignment() {
    let mut compared = 0;
    for d in 2..=3u32 {
        for forbid_k in 0..=(d as i32 - 2) {
            for n in 1..=4u32 {
                let Some(expected) = naive_cover_exists(d, n, 2, forbid_k, 100_000_000) else {
                    continue;
                };
                let p = SearchProblem::new(d, n, 2, forbid_k).unwrap();
                let r = exists_cover(&p, SearchOptions::new(u64::MAX)).unwrap();
                let found = match &r.outcome {
                    Outcome::Witness(c) => {
                        assert!(cover_report(c).avoids(forbid_k));
                        true
                    }
                    Outcome::Unsat => false,
                    Outcome::BudgetExhausted => unreachable!(),
                };
                assert_eq!(found, expected, "d={d} n={n} forbid_k={forbid_k}");
                compared += 1;
            }
        }
    }
    assert!(compared >= 8, "only {compared} cases compared");
}

#[test]
fn parallel_search_is_deterministic() {
    let p = SearchProblem::new(5, 5, 2, 2).unwrap();
    for budget in [1, 10, 777, 5_000] {
        let seq = exists_cover(&p, SearchOptions::new(budget)).unwrap();
        for threads in [2, 3, 8] {
            let par = exists_cover(&p, SearchOptions::new(budget).with_threads(threads)).unwrap();
            assert_eq!(par.outcome.label(), seq.outcome.label());
            assert_eq!(par.nodes_expanded, seq.nodes_expanded);
        }
    }
}

#[test]
fn pruned_enumeration_matches_full_scan() {
    for (d, forbid_k, size) in [(3, 0, 4), (3, 1, 2), (4, 1, 6), (4, 1, 5), (4, 0, 3)] {
        let fast = enumerate_antipode_free_sets(d, 2, forbid_k, size).unwrap();
        let (slow, _) = free_sets_by_full_scan(d, 2, forbid_k, size);
        assert_eq!(fast, slow, "d={d} forbid_k={forbid_k} size={size}");
    }
}

#[test]
fn set_with_antipodal_edges_is_other() {
    let d = 4;
    let all = ridges(d);
    let a = Face::parse("XX00", d).unwrap();
    let rest: Vec<Face> = all
        .iter()
        .copied()
        .filter(|f| *f != a && *f != a.antipode())
        .take(4)
        .collect();
    let mut faces = vec![a, a.antipode()];
    faces.extend(rest);
    let set = CoverSet::new(d, 2, faces).unwrap();
    assert_eq!(classify_six_ridge_set(&set).unwrap(), SixRidgeShape::Other);
}
