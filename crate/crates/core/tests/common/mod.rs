#![allow(dead_code)]

use std::collections::BTreeMap;

use groupoid_jordan::complex::{
    build_space, carve_cover, pushout_input_from_cover, random_simple_cycle, Cell, CoverMode, LengthBounds, ModelName,
    ModelSpec, Subcomplex,
};
use groupoid_jordan::groupoid::{spanning_tree, Arrow, GroupoidPresentation, Letter, ObjectId, Sign, Word};
use groupoid_jordan::pushout::{GroupoidMorphismData, PushoutInput};
use groupoid_jordan::verify::split_curve;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn o(s: &str) -> ObjectId {
    ObjectId::new(s)
}

/// A connected groupoid over `j` plus one private object: a random tree on
/// `j`, a few loops, maybe an extra arrow and a power relation.
fn side(prefix: &str, j: &[ObjectId], extra: &str, rng: &mut ChaCha8Rng) -> GroupoidPresentation {
    let mut objects = j.to_vec();
    objects.push(o(extra));
    let mut arrows = Vec::new();
    for i in 1..j.len() {
        let parent = rng.gen_range(0..i);
        let (s, t) = if rng.gen_bool(0.5) { (parent, i) } else { (i, parent) };
        arrows.push(Arrow::new(format!("{prefix}t{i}"), j[s].clone(), j[t].clone()));
    }
    let anchor = rng.gen_range(0..j.len());
    arrows.push(Arrow::new(format!("{prefix}ty"), j[anchor].clone(), o(extra)));
    let mut relations = Vec::new();
    for l in 0..rng.gen_range(0..=2) {
        let at = objects[rng.gen_range(0..objects.len())].clone();
        let id = format!("{prefix}g{l}");
        arrows.push(Arrow::new(&id, at.clone(), at.clone()));
        if l == 0 && rng.gen_bool(0.5) {
            let m = rng.gen_range(2..=3);
            relations.push(Word::new(at, vec![Letter::pos(&id); m]));
        }
    }
    if rng.gen_bool(0.5) {
        let s = objects[rng.gen_range(0..objects.len())].clone();
        let t = objects[rng.gen_range(0..objects.len())].clone();
        arrows.push(Arrow::new(format!("{prefix}e"), s, t));
    }
    GroupoidPresentation::new(objects, arrows, relations).unwrap()
}

/// A random loop at `x`: a product of one or two conjugated arrows.
fn loop_at(g: &GroupoidPresentation, x: &ObjectId, rng: &mut ChaCha8Rng) -> Word {
    let tree = spanning_tree(g, x).unwrap();
    let mut w = Word::identity(x.clone());
    for _ in 0..rng.gen_range(1..=2) {
        let a = &g.arrows()[rng.gen_range(0..g.arrows().len())];
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        let (s, t) = match sign {
            Sign::Pos => (&a.src, &a.tgt),
            Sign::Neg => (&a.tgt, &a.src),
        };
        let there = tree.tau(s).unwrap();
        let back = tree.tau(t).unwrap().inverse(t.clone());
        w = w
            .then(&there)
            .then(&Word::new(s.clone(), vec![Letter::new(&*a.id, sign)]))
            .then(&back);
    }
    w.reduced()
}

/// A seeded pushout square over `|J| = k`. `c_loops = 0` gives a trivial
/// `C`; otherwise each object gets up to `c_loops` generating loops.
pub fn random_input(k: usize, c_loops: usize, seed: u64) -> PushoutInput {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32) ^ ((c_loops as u64) << 40));
    let j: Vec<ObjectId> = (0..k).map(|i| o(&format!("x{i}"))).collect();
    let clash = seed.is_multiple_of(2);
    let a = side("a", &j, if clash { "y" } else { "ya" }, &mut rng);
    let b = side("b", &j, if clash { "y" } else { "yb" }, &mut rng);
    let mut arrows = Vec::new();
    let mut i = GroupoidMorphismData::default();
    let mut jm = GroupoidMorphismData::default();
    for x in &j {
        let count = if c_loops == 0 { 0 } else { rng.gen_range(1..=c_loops) };
        for t in 0..count {
            let id = format!("c{x}_{t}");
            arrows.push(Arrow::new(&id, x.clone(), x.clone()));
            i.arrow_map.insert(id.clone(), loop_at(&a, x, &mut rng));
            jm.arrow_map.insert(id, loop_at(&b, x, &mut rng));
        }
    }
    PushoutInput {
        base_points: j.clone(),
        basepoint: j[0].clone(),
        c: GroupoidPresentation::new(j, arrows, vec![]).unwrap(),
        a,
        b,
        i,
        j: jm,
    }
}

/// Two arcs `p -> q` glued at their ends.
pub fn circle_input() -> PushoutInput {
    let objs = vec![o("p"), o("q")];
    PushoutInput {
        base_points: objs.clone(),
        basepoint: o("p"),
        c: GroupoidPresentation::free(objs.clone(), vec![]).unwrap(),
        a: GroupoidPresentation::free(objs.clone(), vec![Arrow::new("a", "p", "q")]).unwrap(),
        b: GroupoidPresentation::free(objs, vec![Arrow::new("b", "p", "q")]).unwrap(),
        i: GroupoidMorphismData {
            object_map: BTreeMap::new(),
            arrow_map: BTreeMap::new(),
        },
        j: Default::default(),
    }
}

/// Pushout squares from covers of small spheres: two arcs of a curve
/// (`|J| = 2`) and two disjoint points (`|J| = 1`, nontrivial `C`).
pub fn cover_inputs() -> Vec<(String, PushoutInput)> {
    let x = build_space(&ModelSpec::new(ModelName::GridSphere, 3)).unwrap();
    let mut out = Vec::new();
    for seed in 0..2 {
        let c = random_simple_cycle(&x, seed, LengthBounds::new(4, 10), 1000).unwrap();
        let (_, _, arc_a, arc_b) = split_curve(&x, &c).unwrap();
        let cover = carve_cover(&x, &arc_a, &arc_b, CoverMode::General).unwrap();
        out.push((
            format!("sphere curve {seed}"),
            pushout_input_from_cover(&x, &cover).unwrap(),
        ));
    }
    let d = Subcomplex::from_cells([Cell::Vertex(0)]);
    let e = Subcomplex::from_cells([Cell::Vertex(10)]);
    let cover = carve_cover(&x, &d, &e, CoverMode::Pbp).unwrap();
    out.push((
        "sphere two points".into(),
        pushout_input_from_cover(&x, &cover).unwrap(),
    ));
    out
}

/// The two-route corpus: every `|J|` in 1..=4 with trivial and nontrivial
/// `C`, three seeds each, plus the circle and the cover squares.
pub fn corpus() -> Vec<(String, PushoutInput)> {
    let mut out = vec![("circle".to_string(), circle_input())];
    for k in 1..=4 {
        for c_loops in [0, 2] {
            for seed in 0..3 {
                out.push((
                    format!("|J| = {k}, C loops ≤ {c_loops}, seed {seed}"),
                    random_input(k, c_loops, seed),
                ));
            }
        }
    }
    out.extend(cover_inputs());
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * cofactor_det(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Smith invariants from determinantal divisors: `D_k` is the gcd of all
/// `k x k` minors and `d_k = D_k / D_(k-1)`, zero once `D_k` vanishes.
pub fn determinantal_invariants(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        if g.is_zero() {
            out.resize(rows.min(cols), BigInt::zero());
            return out;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}
