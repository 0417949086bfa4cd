mod common;

use std::collections::HashMap;

use grasscode::{
    build_lexicode, gaussian_product, BigUint, Grassmannian, HybridConfig, LexicodeBuilder, Scheme,
};

#[test]
fn enumeration_sizes_match_gaussian() {
    for (n, k, q) in [
        (4, 2, 2),
        (5, 2, 2),
        (5, 3, 2),
        (6, 3, 2),
        (4, 2, 3),
        (5, 2, 3),
        (4, 1, 5),
    ] {
        let all = common::all_subspaces(n, k, q);
        assert_eq!(
            BigUint::from(all.len()),
            gaussian_product(n, k, q),
            "({n},{k},{q})"
        );
    }
}

#[test]
fn pure_orders_match_reference_keys() {
    for (n, k, q) in [
        (5, 2, 2),
        (6, 3, 2),
        (6, 2, 2),
        (4, 2, 3),
        (5, 2, 3),
        (5, 3, 3),
    ] {
        let g = Grassmannian::new(n, k, q).unwrap();
        for scheme in [Scheme::Ferrers, Scheme::Extended] {
            let list = common::sorted(common::all_subspaces(n, k, q), scheme);
            for (i, x) in list.iter().enumerate() {
                let i = BigUint::from(i);
                assert_eq!(g.encode(x, scheme).unwrap(), i, "{scheme} ({n},{k},{q})");
                assert_eq!(&g.decode(&i, scheme).unwrap(), x);
            }
        }
    }
}

#[test]
fn distance_matches_intersection_count() {
    for (n, k, q) in [(5, 2, 2), (4, 2, 3)] {
        let g = Grassmannian::new(n, k, q).unwrap();
        let all = common::all_subspaces(n, k, q);
        for x in &all {
            for y in &all {
                let d = grasscode::subspace_distance(x, y, g.field()).unwrap();
                assert_eq!(d, common::distance(x, y));
            }
        }
    }
}

#[test]
fn distance_between_dimensions() {
    let f = grasscode::FieldTable::new(2).unwrap();
    let line = grasscode::Subspace::from_rref(common::matrix(&[&[1, 0, 0, 0]]), 2).unwrap();
    let plane = grasscode::Subspace::leading_unit(4, 2, 2);
    let other = grasscode::Subspace::from_rref(common::matrix(&[&[0, 0, 1, 0]]), 2).unwrap();
    assert_eq!(grasscode::subspace_distance(&line, &plane, &f).unwrap(), 1);
    assert_eq!(grasscode::subspace_distance(&other, &plane, &f).unwrap(), 3);
    assert_eq!(common::distance(&other, &plane), 3);
}

#[test]
fn hybrid_bijection_for_every_threshold() {
    for (n, k, q) in [(6, 3, 2), (4, 2, 3)] {
        let g = Grassmannian::new(n, k, q).unwrap();
        let all = common::all_subspaces(n, k, q);
        for t in 0..=k * (n - k) + 1 {
            let cfg = HybridConfig { threshold: t };
            let mut seen = vec![false; all.len()];
            for x in &all {
                let i = g.encode_hybrid(x, cfg).unwrap();
                let slot: usize = i.clone().try_into().unwrap();
                assert!(!seen[slot], "t={t} repeats {i}");
                seen[slot] = true;
                assert_eq!(&g.decode_hybrid(&i, cfg).unwrap(), x);
                if common::diagram_size(x) < t {
                    let delta = g.delta_count(x, cfg).unwrap();
                    assert_eq!(delta, BigUint::from(common::succeeding_large(&all, x, t)));
                }
            }
        }
    }
}

#[test]
fn hybrid_keeps_both_orders_inside_their_blocks() {
    let g = Grassmannian::new(6, 3, 2).unwrap();
    let cfg = HybridConfig { threshold: 6 };
    let all = common::all_subspaces(6, 3, 2);
    let (large, small): (Vec<_>, Vec<_>) =
        all.into_iter().partition(|x| common::diagram_size(x) >= 6);
    let block = g.hybrid_block(cfg).unwrap();
    assert_eq!(block, BigUint::from(large.len()));
    for (i, x) in common::sorted(large, Scheme::Ferrers).iter().enumerate() {
        assert_eq!(g.encode_hybrid(x, cfg).unwrap(), BigUint::from(i));
    }
    for (i, x) in common::sorted(small, Scheme::Extended).iter().enumerate() {
        assert_eq!(g.encode_hybrid(x, cfg).unwrap(), &block + BigUint::from(i));
    }
}

#[test]
fn lexicodes_match_reference_greedy() {
    for (n, k, q, d) in [
        (4, 2, 2, 4),
        (5, 2, 2, 4),
        (6, 3, 2, 4),
        (4, 2, 3, 4),
        (6, 3, 2, 6),
    ] {
        let g = Grassmannian::new(n, k, q).unwrap();
        for scheme in [Scheme::Ferrers, Scheme::Extended] {
            let list = common::sorted(common::all_subspaces(n, k, q), scheme);
            let expected = common::greedy(&list, d);
            let code = build_lexicode(&g, d, scheme, None).unwrap();
            assert_eq!(code.codewords, expected, "{scheme} ({n},{k},{q}) d={d}");
        }
    }
}

#[test]
fn hybrid_lexicode_follows_hybrid_order() {
    let g = Grassmannian::new(6, 3, 2).unwrap();
    let cfg = HybridConfig { threshold: 5 };
    let mut list = common::all_subspaces(6, 3, 2);
    list.sort_by_key(|x| g.encode_hybrid(x, cfg).unwrap());
    let code = build_lexicode(&g, 4, Scheme::Hybrid(cfg), None).unwrap();
    assert_eq!(code.codewords, common::greedy(&list, 4));
}

#[test]
fn greedy_dominance() {
    let g = Grassmannian::new(6, 3, 2).unwrap();
    let code = build_lexicode(&g, 4, Scheme::Ferrers, None).unwrap();
    assert!(code.verify(g.field()).unwrap().ok);
    let total: usize = g.total().clone().try_into().unwrap();
    let mut position = HashMap::new();
    for (i, c) in code.codewords.iter().enumerate() {
        position.insert(g.encode_ferrers(c).unwrap(), i);
    }
    for i in 0..total {
        let i = BigUint::from(i);
        if position.contains_key(&i) {
            continue;
        }
        let x = g.decode_ferrers(&i).unwrap();
        // some earlier codeword must be too close
        let blocked = code
            .codewords
            .iter()
            .take_while(|c| g.encode_ferrers(c).unwrap() < i)
            .any(|c| common::distance(&x, c) < 4);
        assert!(blocked, "index {i} was compatible but skipped");
    }
}

#[test]
fn deterministic_across_runs_and_pools() {
    let g = Grassmannian::new(7, 3, 2).unwrap();
    let a = build_lexicode(&g, 4, Scheme::Extended, None).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .unwrap();
    let b = pool.install(|| build_lexicode(&g, 4, Scheme::Extended, None).unwrap());
    assert_eq!(a, b);
    assert_eq!(a.to_checkpoint(), b.to_checkpoint());
}

#[test]
fn checkpoint_resume_at_every_split() {
    let g = Grassmannian::new(5, 2, 2).unwrap();
    let full = build_lexicode(&g, 4, Scheme::Ferrers, None).unwrap();
    for split in (0..=155u32).step_by(7) {
        let part = build_lexicode(&g, 4, Scheme::Ferrers, Some(&BigUint::from(split))).unwrap();
        let restored = grasscode::CodeBuild::from_checkpoint(&part.to_checkpoint()).unwrap();
        let mut b = LexicodeBuilder::resume(&g, restored).unwrap();
        b.run(None).unwrap();
        assert_eq!(b.into_build(), full, "split {split}");
    }
}

#[test]
fn extension_fields_round_trip() {
    for (n, k, q) in [(4, 2, 4), (4, 2, 9), (3, 1, 8), (5, 2, 4)] {
        let g = Grassmannian::new(n, k, q).unwrap();
        let total: usize = g.total().clone().try_into().unwrap();
        let hybrid = Scheme::Hybrid(HybridConfig::default_for(&g));
        for scheme in [Scheme::Ferrers, Scheme::Extended, hybrid] {
            let mut seen = std::collections::HashSet::new();
            let mut prev: Option<grasscode::Subspace> = None;
            for i in 0..total {
                let i = BigUint::from(i);
                let x = g.decode(&i, scheme).unwrap();
                assert_eq!(g.encode(&x, scheme).unwrap(), i);
                assert!(seen.insert(x.rref().clone()));
                if let (Some(p), false) = (&prev, matches!(scheme, Scheme::Hybrid(_))) {
                    assert!(g.compare(p, &x, scheme).unwrap().is_lt());
                }
                prev = Some(x);
            }
        }
    }
}

mod large {
    use grasscode::{BigUint, Grassmannian, HybridConfig, Scheme};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn grassmannians() -> &'static [Grassmannian] {
        static G: OnceLock<Vec<Grassmannian>> = OnceLock::new();
        G.get_or_init(|| {
            [(20, 10, 2), (16, 5, 3), (12, 6, 16), (40, 7, 2)]
                .iter()
                .map(|&(n, k, q)| Grassmannian::new(n, k, q).unwrap())
                .collect()
        })
    }

    proptest! {
        #[test]
        fn random_indices_round_trip(which in 0usize..4, bytes in proptest::collection::vec(any::<u8>(), 40)) {
            let g = &grassmannians()[which];
            let i = BigUint::from_bytes_le(&bytes) % g.total();
            let hybrid = Scheme::Hybrid(HybridConfig::default_for(g));
            for scheme in [Scheme::Ferrers, Scheme::Extended, hybrid] {
                let x = g.decode(&i, scheme).unwrap();
                prop_assert!(x.rref().is_rref());
                prop_assert_eq!(g.encode(&x, scheme).unwrap(), i.clone());
            }
        }
    }
}
