use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Cell, CellComplex, Subcomplex};
use crate::error::{Error, Result};

/// Inclusive bounds on a number of edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthBounds {
    pub min: usize,
    pub max: usize,
}

impl LengthBounds {
    pub fn new(min: usize, max: usize) -> Self {
        LengthBounds { min, max }
    }
}

fn degree_in(x: &CellComplex, s: &Subcomplex, v: usize) -> usize {
    x.edges_at(v)
        .iter()
        .filter(|&&e| s.contains(Cell::Edge(e)))
        .map(|&e| if x.ends(e).0 == x.ends(e).1 { 2 } else { 1 })
        .sum()
}

fn edges_connected(x: &CellComplex, s: &Subcomplex) -> bool {
    let verts: Vec<usize> = s.vertices().collect();
    let Some(&first) = verts.first() else {
        return true;
    };
    let mut seen = HashSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some(v) = queue.pop_front() {
        for &e in x.edges_at(v) {
            if s.contains(Cell::Edge(e)) {
                let w = x.across(e, v);
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    seen.len() == verts.len()
}

/// A closed, face-free, connected subcomplex in which every vertex has
/// degree two.
pub fn validate_simple_cycle(x: &CellComplex, c: &Subcomplex) -> Result<()> {
    c.check_closed(x)?;
    if c.faces().next().is_some() {
        return Err(Error::Shape("a curve has no faces".into()));
    }
    if c.edges().next().is_none() {
        return Err(Error::Shape("a curve needs at least one edge".into()));
    }
    for v in c.vertices() {
        let d = degree_in(x, c, v);
        if d != 2 {
            return Err(Error::Shape(format!(
                "vertex `{}` has degree {d} in the curve",
                x.vertices()[v]
            )));
        }
    }
    if !edges_connected(x, c) {
        return Err(Error::Shape("the curve is not connected".into()));
    }
    Ok(())
}

/// A closed, face-free, connected subcomplex with two endpoints of degree
/// one and all other vertices of degree two, or a single vertex.
pub fn validate_arc(x: &CellComplex, a: &Subcomplex) -> Result<()> {
    a.check_closed(x)?;
    if a.faces().next().is_some() {
        return Err(Error::Shape("an arc has no faces".into()));
    }
    let verts: Vec<usize> = a.vertices().collect();
    if verts.is_empty() {
        return Err(Error::Shape("an arc has at least one vertex".into()));
    }
    if verts.len() > 1 {
        let mut ends = 0;
        for &v in &verts {
            match degree_in(x, a, v) {
                1 => ends += 1,
                2 => {}
                d => {
                    return Err(Error::Shape(format!(
                        "vertex `{}` has degree {d} in the arc",
                        x.vertices()[v]
                    )))
                }
            }
        }
        if ends != 2 {
            return Err(Error::Shape(format!("an arc has two endpoints, found {ends}")));
        }
    }
    if !edges_connected(x, a) {
        return Err(Error::Shape("the arc is not connected".into()));
    }
    Ok(())
}

/// Walks along the edges of `s` from `start` taking `first` as the first
/// edge, until no unused edge remains. Returns vertices and edges in order.
fn walk(x: &CellComplex, s: &Subcomplex, start: usize, first: Option<usize>) -> (Vec<usize>, Vec<usize>) {
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut used = HashSet::new();
    let mut here = start;
    let mut next = first;
    while let Some(e) = next {
        used.insert(e);
        edges.push(e);
        here = x.across(e, here);
        if here == start {
            break;
        }
        vertices.push(here);
        next = x
            .edges_at(here)
            .iter()
            .copied()
            .find(|&f| s.contains(Cell::Edge(f)) && !used.contains(&f));
    }
    (vertices, edges)
}

/// The canonical traversal of a simple cycle: from its lowest vertex,
/// stepping first toward the lower of its two neighbours. `edges[i]` joins
/// `vertices[i]` and `vertices[i + 1]` cyclically.
pub fn cycle_order(x: &CellComplex, c: &Subcomplex) -> Result<(Vec<usize>, Vec<usize>)> {
    validate_simple_cycle(x, c)?;
    let start = c.vertices().next().expect("validated cycle has vertices");
    let first = x
        .edges_at(start)
        .iter()
        .copied()
        .filter(|&e| c.contains(Cell::Edge(e)))
        .min_by_key(|&e| (x.across(e, start), e));
    Ok(walk(x, c, start, first))
}

/// The canonical traversal of an arc, from the endpoint with the lower
/// vertex index.
pub fn arc_order(x: &CellComplex, a: &Subcomplex) -> Result<(Vec<usize>, Vec<usize>)> {
    validate_arc(x, a)?;
    let start = a
        .vertices()
        .find(|&v| degree_in(x, a, v) <= 1)
        .expect("validated arc has an endpoint");
    let first = x.edges_at(start).iter().copied().find(|&e| a.contains(Cell::Edge(e)));
    Ok(walk(x, a, start, first))
}

/// The closed subcomplex spanned by the given vertices and edges.
pub fn subcomplex_from_path(vertices: &[usize], edges: &[usize]) -> Subcomplex {
    vertices
        .iter()
        .map(|&v| Cell::Vertex(v))
        .chain(edges.iter().map(|&e| Cell::Edge(e)))
        .collect()
}

/// One self-avoiding step sequence of up to `k` edges from `start`.
fn self_avoiding_walk(x: &CellComplex, rng: &mut ChaCha8Rng, start: usize, k: usize) -> (Vec<usize>, Vec<usize>) {
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut seen = HashSet::from([start]);
    let mut here = start;
    for _ in 0..k {
        let options: Vec<(usize, usize)> = x
            .edges_at(here)
            .iter()
            .map(|&e| (e, x.across(e, here)))
            .filter(|(_, w)| !seen.contains(w))
            .collect();
        if options.is_empty() {
            break;
        }
        let (e, w) = options[rng.gen_range(0..options.len())];
        seen.insert(w);
        vertices.push(w);
        edges.push(e);
        here = w;
    }
    (vertices, edges)
}

/// Shortest path from `from` to `to` avoiding `blocked` vertices; edges in
/// order.
fn shortest_path(
    x: &CellComplex,
    from: usize,
    to: usize,
    blocked: &HashSet<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = HashSet::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut vs = vec![to];
            let mut es = Vec::new();
            let mut c = to;
            while c != from {
                let (p, e) = prev[&c];
                es.push(e);
                vs.push(p);
                c = p;
            }
            vs.reverse();
            es.reverse();
            return Some((vs, es));
        }
        for &e in x.edges_at(v) {
            let w = x.across(e, v);
            if !blocked.contains(&w) && seen.insert(w) {
                prev.insert(w, (v, e));
                queue.push_back(w);
            }
        }
    }
    None
}

/// A simple cycle in the 1-skeleton, deterministic in `seed`: a random
/// self-avoiding walk of at least two steps closed up by a shortest path
/// back to its start that avoids the walk's interior. Restarts until the
/// length lies within `bounds`.
pub fn random_simple_cycle(x: &CellComplex, seed: u64, bounds: LengthBounds, retries: usize) -> Result<Subcomplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = x.vertices().len();
    let fail = |detail: &str| Error::GenerationFailure {
        attempts: retries,
        detail: detail.to_string(),
    };
    if n == 0 || bounds.max < 3 || bounds.min > bounds.max {
        return Err(fail("infeasible length bounds"));
    }
    for _ in 0..retries {
        let start = rng.gen_range(0..n);
        let k = rng.gen_range(2..bounds.max);
        let (vs, es) = self_avoiding_walk(x, &mut rng, start, k);
        if es.len() < 2 {
            continue;
        }
        let end = *vs.last().expect("nonempty walk");
        let blocked: HashSet<usize> = vs[1..vs.len() - 1].iter().copied().collect();
        let Some((back_vs, back_es)) = shortest_path(x, end, start, &blocked) else {
            continue;
        };
        let total = es.len() + back_es.len();
        if total < bounds.min || total > bounds.max {
            continue;
        }
        let mut cells = subcomplex_from_path(&vs, &es);
        for c in subcomplex_from_path(&back_vs, &back_es).cells() {
            cells.insert(c);
        }
        if validate_simple_cycle(x, &cells).is_ok() {
            return Ok(cells);
        }
    }
    Err(fail("no simple cycle within the length bounds"))
}

/// An arc with between `bounds.min` and `bounds.max` edges (zero edges is a
/// single vertex), deterministic in `seed`.
pub fn random_arc(x: &CellComplex, seed: u64, bounds: LengthBounds, retries: usize) -> Result<Subcomplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = x.vertices().len();
    let fail = |detail: &str| Error::GenerationFailure {
        attempts: retries,
        detail: detail.to_string(),
    };
    if n == 0 || bounds.min > bounds.max {
        return Err(fail("infeasible length bounds"));
    }
    for _ in 0..retries {
        let start = rng.gen_range(0..n);
        let k = rng.gen_range(bounds.min..=bounds.max);
        let (vs, es) = self_avoiding_walk(x, &mut rng, start, k);
        if es.len() == k {
            return Ok(subcomplex_from_path(&vs, &es));
        }
    }
    Err(fail("no self-avoiding walk of the requested length"))
}
