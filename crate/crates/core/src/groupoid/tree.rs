use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::group::GroupPresentation;
use super::presentation::GroupoidPresentation;
use super::word::{free_reduce, GroupWord, Ident, Letter, ObjectId, Sign, Word};
use crate::error::{Error, Result};

/// How an object was first reached while growing the tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEntry {
    pub object: ObjectId,
    /// `(letter, parent)`: the tree letter leading from `parent` to `object`.
    /// `None` only for the basepoint.
    pub via: Option<(Letter, ObjectId)>,
}

/// A spanning tree of one component, stored as parent pointers in discovery
/// order. `tau(y)` is the unique tree word from the basepoint to `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawTree")]
pub struct SpanningTreeData {
    pub basepoint: ObjectId,
    pub entries: Vec<TreeEntry>,
    #[serde(skip)]
    index: HashMap<ObjectId, usize>,
}

#[derive(Deserialize)]
struct RawTree {
    basepoint: ObjectId,
    entries: Vec<TreeEntry>,
}

impl From<RawTree> for SpanningTreeData {
    fn from(raw: RawTree) -> Self {
        SpanningTreeData::from_entries(raw.basepoint, raw.entries)
    }
}

impl SpanningTreeData {
    fn from_entries(basepoint: ObjectId, entries: Vec<TreeEntry>) -> Self {
        let index = entries.iter().enumerate().map(|(i, e)| (e.object.clone(), i)).collect();
        SpanningTreeData {
            basepoint,
            entries,
            index,
        }
    }

    pub fn contains(&self, y: &ObjectId) -> bool {
        self.lookup(y).is_some()
    }

    fn lookup(&self, y: &ObjectId) -> Option<usize> {
        self.index.get(y).copied()
    }

    /// Objects covered, in discovery order.
    pub fn objects(&self) -> impl Iterator<Item = &ObjectId> {
        self.entries.iter().map(|e| &e.object)
    }

    pub fn tree_arrows(&self) -> HashSet<Ident> {
        self.entries
            .iter()
            .filter_map(|e| e.via.as_ref().map(|(l, _)| l.id.clone()))
            .collect()
    }

    /// The tree word `τ_y` from the basepoint to `y`.
    pub fn tau(&self, y: &ObjectId) -> Option<Word> {
        let mut k = self.lookup(y)?;
        let mut rev = Vec::new();
        while let Some((l, parent)) = &self.entries[k].via {
            rev.push(l.clone());
            k = self.lookup(parent).expect("parent recorded before child");
        }
        rev.reverse();
        Some(Word::new(self.basepoint.clone(), rev))
    }
}

/// Breadth-first spanning tree from `p`. Incident arrows are explored in
/// ascending arrow index; the first arrival at an object wins.
pub fn spanning_tree(g: &GroupoidPresentation, p: &ObjectId) -> Result<SpanningTreeData> {
    spanning_tree_ranked(g, p, |k| k)
}

/// Breadth-first spanning tree where incident arrows are explored in
/// ascending `rank(arrow index)`. Used to compare different tree choices.
pub fn spanning_tree_ranked<K: Ord>(
    g: &GroupoidPresentation,
    p: &ObjectId,
    rank: impl Fn(usize) -> K,
) -> Result<SpanningTreeData> {
    let start = g
        .object_position(p)
        .ok_or_else(|| Error::UnknownObject(p.to_string()))?;
    let objects = g.objects();
    let mut seen = vec![false; objects.len()];
    seen[start] = true;
    let mut entries = vec![TreeEntry {
        object: p.clone(),
        via: None,
    }];
    let mut queue = VecDeque::from([start]);
    let mut order: Vec<usize> = Vec::new();
    while let Some(y) = queue.pop_front() {
        order.clear();
        order.extend_from_slice(g.incident(y));
        order.sort_by_key(|&k| (rank(k), k));
        for &k in &order {
            let a = &g.arrows()[k];
            if a.is_loop() {
                continue;
            }
            let here = &objects[y];
            let (other, sign) = if &a.src == here {
                (&a.tgt, Sign::Pos)
            } else {
                (&a.src, Sign::Neg)
            };
            let z = g.object_position(other).expect("validated arrow endpoint");
            if !seen[z] {
                seen[z] = true;
                entries.push(TreeEntry {
                    object: other.clone(),
                    via: Some((Letter { id: a.id.clone(), sign }, here.clone())),
                });
                queue.push_back(z);
            }
        }
    }
    Ok(SpanningTreeData::from_entries(p.clone(), entries))
}

/// The retraction `r(g) = reduce(τ_x · g · τ_y^-1)`, a loop at the tree's
/// basepoint.
pub fn retract_arrow(g: &GroupoidPresentation, tree: &SpanningTreeData, w: &Word) -> Result<Word> {
    let end = g.end_of(w)?;
    let outside = |o: &ObjectId| Error::Component {
        object: o.to_string(),
        basepoint: tree.basepoint.to_string(),
    };
    let tau_x = tree.tau(&w.start).ok_or_else(|| outside(&w.start))?;
    let tau_y = tree.tau(&end).ok_or_else(|| outside(&end))?;
    Ok(tau_x.then(w).then(&tau_y.inverse(end)).reduced())
}

/// Rewrites a loop at the basepoint over the object-group generators: tree
/// letters retract to the identity and every other arrow is its own
/// generator.
pub fn rewrite_over_generators(tree_arrows: &HashSet<Ident>, letters: &[Letter]) -> GroupWord {
    let kept: Vec<Letter> = letters
        .iter()
        .filter(|l| !tree_arrows.contains(&l.id))
        .cloned()
        .collect();
    GroupWord(free_reduce(&kept))
}

/// Presentation of the object group at `p`: one generator per non-tree
/// arrow of p's component (named after the arrow), one relator `r(ρ)` per
/// relation based in that component.
pub fn object_group_presentation(g: &GroupoidPresentation, p: &ObjectId) -> Result<GroupPresentation> {
    let tree = spanning_tree(g, p)?;
    Ok(object_group_with_tree(g, &tree))
}

pub fn object_group_with_tree(g: &GroupoidPresentation, tree: &SpanningTreeData) -> GroupPresentation {
    let tree_arrows = tree.tree_arrows();
    let generators: Vec<Ident> = g
        .arrows()
        .iter()
        .filter(|a| tree.contains(&a.src) && !tree_arrows.contains(&a.id))
        .map(|a| a.id.clone())
        .collect();
    let relators: Vec<GroupWord> = g
        .relations()
        .iter()
        .filter(|rho| tree.contains(&rho.start))
        .map(|rho| rewrite_over_generators(&tree_arrows, &rho.letters))
        .collect();
    GroupPresentation::from_parts_unchecked(generators, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::presentation::Arrow;

    fn o(s: &str) -> ObjectId {
        ObjectId::new(s)
    }

    #[test]
    fn single_object_tree_is_identity() {
        let g = GroupoidPresentation::free(vec![o("p")], vec![]).unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        assert_eq!(t.tau(&o("p")).unwrap(), Word::identity(o("p")));
        assert_eq!(t.entries.len(), 1);
    }

    #[test]
    fn path_tree_words() {
        let g = GroupoidPresentation::free(
            vec![o("p"), o("q"), o("s")],
            vec![Arrow::new("a", "p", "q"), Arrow::new("b", "q", "s")],
        )
        .unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        assert_eq!(t.tau(&o("q")).unwrap().letters, vec![Letter::pos("a")]);
        assert_eq!(
            t.tau(&o("s")).unwrap().letters,
            vec![Letter::pos("a"), Letter::pos("b")]
        );
    }

    #[test]
    fn parallel_arrows_lowest_index_wins() {
        let g = GroupoidPresentation::free(
            vec![o("p"), o("q")],
            vec![Arrow::new("a1", "p", "q"), Arrow::new("a2", "p", "q")],
        )
        .unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        assert_eq!(t.tau(&o("q")).unwrap().letters, vec![Letter::pos("a1")]);
    }

    #[test]
    fn reversed_arrow_enters_with_negative_sign() {
        let g = GroupoidPresentation::free(vec![o("p"), o("q")], vec![Arrow::new("a", "q", "p")]).unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        assert_eq!(t.tau(&o("q")).unwrap().letters, vec![Letter::neg("a")]);
    }

    #[test]
    fn unknown_basepoint() {
        let g = GroupoidPresentation::free(vec![o("p")], vec![]).unwrap();
        assert!(matches!(spanning_tree(&g, &o("z")), Err(Error::UnknownObject(_))));
    }

    #[test]
    fn retraction_examples() {
        let g = GroupoidPresentation::free(
            vec![o("p"), o("q")],
            vec![
                Arrow::new("a", "p", "q"),
                Arrow::new("b", "p", "q"),
                Arrow::new("l", "p", "p"),
            ],
        )
        .unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        // tree arrow retracts to the identity
        let r = retract_arrow(&g, &t, &Word::new(o("p"), vec![Letter::pos("a")])).unwrap();
        assert!(r.is_empty());
        // parallel non-tree arrow becomes b a^-1
        let r = retract_arrow(&g, &t, &Word::new(o("p"), vec![Letter::pos("b")])).unwrap();
        assert_eq!(r.letters, vec![Letter::pos("b"), Letter::neg("a")]);
        assert_eq!(r.start, o("p"));
        // loops at the basepoint only reduce
        let l = Word::new(o("p"), vec![Letter::pos("l"), Letter::pos("l"), Letter::neg("l")]);
        assert_eq!(retract_arrow(&g, &t, &l).unwrap(), l.reduced());
    }

    #[test]
    fn retraction_outside_component() {
        let g = GroupoidPresentation::free(vec![o("p"), o("q")], vec![Arrow::new("l", "q", "q")]).unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        let w = Word::new(o("q"), vec![Letter::pos("l")]);
        assert!(matches!(retract_arrow(&g, &t, &w), Err(Error::Component { .. })));
    }

    #[test]
    fn cube_root_relation() {
        let g = GroupoidPresentation::new(
            vec![o("p")],
            vec![Arrow::new("a", "p", "p")],
            vec![Word::new(o("p"), vec![Letter::pos("a"); 3])],
        )
        .unwrap();
        let gp = object_group_presentation(&g, &o("p")).unwrap();
        assert_eq!(gp.to_string(), "⟨a | a^3⟩");
    }

    #[test]
    fn relation_away_from_basepoint_is_conjugated_back() {
        // a: p->q tree arrow, loop l at q with relation l l
        let g = GroupoidPresentation::new(
            vec![o("p"), o("q")],
            vec![Arrow::new("a", "p", "q"), Arrow::new("l", "q", "q")],
            vec![Word::new(o("q"), vec![Letter::pos("l"), Letter::pos("l")])],
        )
        .unwrap();
        let t = spanning_tree(&g, &o("p")).unwrap();
        let by_hand = retract_arrow(&g, &t, &g.relations()[0]).unwrap();
        assert_eq!(
            by_hand.letters,
            vec![Letter::pos("a"), Letter::pos("l"), Letter::pos("l"), Letter::neg("a")]
        );
        let gp = object_group_presentation(&g, &o("p")).unwrap();
        assert_eq!(gp.to_string(), "⟨l | l^2⟩");
    }
}
