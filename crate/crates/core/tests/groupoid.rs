use std::collections::BTreeSet;

use groupoid_jordan::analysis::abelianization;
use groupoid_jordan::groupoid::{
    free_product, free_reduce, object_group_presentation, object_group_with_tree, retract_arrow, spanning_tree,
    spanning_tree_ranked, Arrow, GroupoidPresentation, Letter, ObjectId, Sign, Word,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn obj(i: usize) -> ObjectId {
    ObjectId::new(format!("o{i}"))
}

/// A random graph groupoid on `v` objects. Connected when `connected`,
/// with `extra` arrows beyond a tree and a few relations.
fn random_groupoid(seed: u64, v: usize, extra: usize, relations: usize, connected: bool) -> GroupoidPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let objects: Vec<ObjectId> = (0..v).map(obj).collect();
    let mut arrows = Vec::new();
    if connected {
        for i in 1..v {
            let p = rng.gen_range(0..i);
            arrows.push(Arrow::new(format!("t{i}"), obj(p), obj(i)));
        }
    }
    for k in 0..extra {
        arrows.push(Arrow::new(
            format!("g{k}"),
            obj(rng.gen_range(0..v)),
            obj(rng.gen_range(0..v)),
        ));
    }
    let g = GroupoidPresentation::free(objects.clone(), arrows.clone()).unwrap();
    let rels = (0..relations)
        .map(|_| {
            let start = obj(rng.gen_range(0..v));
            random_loop(&g, &start, &mut rng, 6)
        })
        .collect();
    GroupoidPresentation::new(objects, arrows, rels).unwrap()
}

/// A random walk of up to `len` steps from `start`, along arrows either way.
fn random_walk(g: &GroupoidPresentation, start: &ObjectId, rng: &mut ChaCha8Rng, len: usize) -> (Word, ObjectId) {
    let mut at = start.clone();
    let mut letters = Vec::new();
    for _ in 0..len {
        let out: Vec<(Letter, ObjectId)> = g
            .arrows()
            .iter()
            .flat_map(|a| {
                let mut v = Vec::new();
                if a.src == at {
                    v.push((Letter::new(&*a.id, Sign::Pos), a.tgt.clone()));
                }
                if a.tgt == at {
                    v.push((Letter::new(&*a.id, Sign::Neg), a.src.clone()));
                }
                v
            })
            .collect();
        if out.is_empty() {
            break;
        }
        let (l, next) = out[rng.gen_range(0..out.len())].clone();
        letters.push(l);
        at = next;
    }
    (Word::new(start.clone(), letters), at)
}

/// A random loop: a walk out, then the tree path home.
fn random_loop(g: &GroupoidPresentation, start: &ObjectId, rng: &mut ChaCha8Rng, len: usize) -> Word {
    let (out, end) = random_walk(g, start, rng, len);
    let tree = spanning_tree(g, start).unwrap();
    out.then(&tree.tau(&end).unwrap().inverse(end))
}

/// Cancels adjacent inverse pairs in a random order until none remain.
fn reduce_randomly(letters: &[Letter], rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let mut w = letters.to_vec();
    loop {
        let spots: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i].cancels(&w[i + 1]))
            .collect();
        if spots.is_empty() {
            return w;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        w.drain(i..i + 2);
    }
}

fn letters_strategy() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0u8..3, any::<bool>()), 0..40).prop_map(|v| {
        v.into_iter()
            .map(|(g, pos)| {
                let id = ["a", "b", "c"][g as usize];
                if pos {
                    Letter::pos(id)
                } else {
                    Letter::neg(id)
                }
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn reduction_is_idempotent_and_confluent(w in letters_strategy(), seed in any::<u64>()) {
        let once = free_reduce(&w);
        prop_assert_eq!(free_reduce(&once), once.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..4 {
            prop_assert_eq!(reduce_randomly(&w, &mut rng), once.clone());
        }
    }

    #[test]
    fn word_times_inverse_is_identity(seed in any::<u64>(), len in 0usize..20) {
        let g = random_groupoid(seed, 5, 4, 0, true);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let (w, end) = random_walk(&g, &obj(0), &mut rng, len);
        let both = w.then(&w.inverse(end));
        let r = g.reduce_word(&both).unwrap();
        prop_assert!(r.is_empty());
        prop_assert_eq!(&r.start, &obj(0));
        prop_assert_eq!(g.reduce_word(&r).unwrap(), r);
    }

    #[test]
    fn retraction_laws(seed in any::<u64>(), v in 1usize..7, extra in 0usize..5) {
        let g = random_groupoid(seed, v, extra, 1, true);
        let p = obj(0);
        let tree = spanning_tree(&g, &p).unwrap();
        for y in tree.objects() {
            let tau = tree.tau(y).unwrap();
            prop_assert!(retract_arrow(&g, &tree, &tau).unwrap().is_empty());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let start = obj(rng.gen_range(0..v));
        let (gw, mid) = random_walk(&g, &start, &mut rng, 5);
        let (hw, _) = random_walk(&g, &mid, &mut rng, 5);
        let whole = retract_arrow(&g, &tree, &gw.then(&hw)).unwrap();
        let parts = retract_arrow(&g, &tree, &gw).unwrap().then(&retract_arrow(&g, &tree, &hw).unwrap()).reduced();
        prop_assert_eq!(whole, parts);
        let l = random_loop(&g, &p, &mut rng, 5);
        prop_assert_eq!(retract_arrow(&g, &tree, &l).unwrap(), l.reduced());
    }

    #[test]
    fn free_rank_law(seed in any::<u64>(), v in 1usize..8, extra in 0usize..8) {
        let g = random_groupoid(seed, v, extra, 0, true);
        let e = g.arrows().len();
        let pres = object_group_presentation(&g, &obj(0)).unwrap();
        prop_assert_eq!(pres.generators().len(), e + 1 - v);
        prop_assert!(pres.relators().is_empty());
        prop_assert_eq!(abelianization(&pres).free_rank, e + 1 - v);
    }

    #[test]
    fn free_products_of_free_groupoids_are_free(s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = random_groupoid(s1, 3, 2, 0, true);
        let h = random_groupoid(s2, 4, 3, 0, true);
        let gh = free_product(&g, &h).unwrap();
        prop_assert!(gh.relations().is_empty());
        prop_assert_eq!(gh.arrows().len(), g.arrows().len() + h.arrows().len());
        let g = random_groupoid(s1, 3, 2, 1, true);
        prop_assert_eq!(free_product(&g, &h).unwrap().relations().len(), 1);
    }

    #[test]
    fn components_partition_the_objects(seed in any::<u64>(), v in 1usize..10, extra in 0usize..8) {
        let g = random_groupoid(seed, v, extra, 0, false);
        let parts = g.connected_components();
        let mut seen = BTreeSet::new();
        for part in &parts {
            prop_assert!(!part.is_empty());
            for o in part {
                prop_assert!(seen.insert(o.clone()), "{} listed twice", o);
            }
        }
        prop_assert_eq!(seen.len(), v);
        for a in g.arrows() {
            let side = |o: &ObjectId| parts.iter().position(|p| p.contains(o));
            prop_assert_eq!(side(&a.src), side(&a.tgt));
        }
    }

    #[test]
    fn tree_choice_keeps_invariants(seed in any::<u64>(), v in 1usize..7, extra in 0usize..6, rels in 0usize..4, keys in prop::collection::vec(any::<u16>(), 16)) {
        let g = random_groupoid(seed, v, extra, rels, true);
        let p = obj(0);
        let bfs = object_group_presentation(&g, &p).unwrap();
        let tree = spanning_tree_ranked(&g, &p, |i| keys[i % keys.len()] ^ (i as u16)).unwrap();
        let other = object_group_with_tree(&g, &tree);
        prop_assert_eq!(bfs.generators().len(), other.generators().len());
        let (a, b) = (abelianization(&bfs), abelianization(&other));
        prop_assert_eq!(a.is_trivial(), b.is_trivial());
        prop_assert_eq!(a, b);
    }
}
