use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::word::{Ident, Letter, ObjectId, Sign, Word};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A generating arrow `id : src -> tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: Ident,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

impl Arrow {
    pub fn new(id: impl AsRef<str>, src: impl Into<ObjectId>, tgt: impl Into<ObjectId>) -> Self {
        Arrow {
            id: Arc::from(id.as_ref()),
            src: src.into(),
            tgt: tgt.into(),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.src == self.tgt
    }
}

impl From<String> for ObjectId {
    fn from(s: String) -> Self {
        ObjectId::new(s)
    }
}

/// A finitely presented groupoid: objects, generating arrows and loop
/// relations. Immutable once built; every constructor validates.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawGroupoid", into = "RawGroupoid")]
pub struct GroupoidPresentation {
    objects: Vec<ObjectId>,
    arrows: Vec<Arrow>,
    relations: Vec<Word>,
    object_index: HashMap<ObjectId, usize>,
    arrow_index: HashMap<Ident, usize>,
    // arrow indices touching each object, ascending
    incident: Vec<Vec<usize>>,
}

impl PartialEq for GroupoidPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.arrows == other.arrows && self.relations == other.relations
    }
}

impl Eq for GroupoidPresentation {}

#[derive(Serialize, Deserialize)]
struct RawGroupoid {
    objects: Vec<ObjectId>,
    arrows: Vec<Arrow>,
    #[serde(default)]
    relations: Vec<Word>,
}

impl TryFrom<RawGroupoid> for GroupoidPresentation {
    type Error = Error;

    fn try_from(raw: RawGroupoid) -> Result<Self> {
        GroupoidPresentation::new(raw.objects, raw.arrows, raw.relations)
    }
}

impl From<GroupoidPresentation> for RawGroupoid {
    fn from(g: GroupoidPresentation) -> Self {
        RawGroupoid {
            objects: g.objects,
            arrows: g.arrows,
            relations: g.relations,
        }
    }
}

impl GroupoidPresentation {
    pub fn new(objects: Vec<ObjectId>, arrows: Vec<Arrow>, relations: Vec<Word>) -> Result<Self> {
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::Duplicate(o.to_string()));
            }
        }
        let mut arrow_index = HashMap::with_capacity(arrows.len());
        let mut incident = vec![Vec::new(); objects.len()];
        for (k, a) in arrows.iter().enumerate() {
            if arrow_index.insert(a.id.clone(), k).is_some() {
                return Err(Error::Duplicate(a.id.to_string()));
            }
            let s = *object_index
                .get(&a.src)
                .ok_or_else(|| Error::UnknownObject(a.src.to_string()))?;
            let t = *object_index
                .get(&a.tgt)
                .ok_or_else(|| Error::UnknownObject(a.tgt.to_string()))?;
            incident[s].push(k);
            if t != s {
                incident[t].push(k);
            }
        }
        let g = GroupoidPresentation {
            objects,
            arrows,
            relations: Vec::new(),
            object_index,
            arrow_index,
            incident,
        };
        g.with_relations(relations)
    }

    /// The free groupoid on a directed graph.
    pub fn free(objects: Vec<ObjectId>, arrows: Vec<Arrow>) -> Result<Self> {
        GroupoidPresentation::new(objects, arrows, Vec::new())
    }

    /// Replaces the relation list, checking every relation is a composable
    /// loop.
    fn with_relations(mut self, relations: Vec<Word>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            self.check_loop(r).map_err(|e| Error::RelationShape {
                index: i,
                detail: e.to_string(),
            })?;
        }
        self.relations = relations;
        Ok(self)
    }

    fn check_loop(&self, w: &Word) -> Result<()> {
        let end = self.end_of(w)?;
        if end != w.start {
            return Err(Error::Shape(format!("word starts at {} but ends at {end}", w.start)));
        }
        Ok(())
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    pub fn has_object(&self, o: &ObjectId) -> bool {
        self.object_index.contains_key(o)
    }

    pub fn object_position(&self, o: &ObjectId) -> Option<usize> {
        self.object_index.get(o).copied()
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrow_index.get(id).map(|&k| &self.arrows[k])
    }

    pub fn arrow_position(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    /// Arrow indices incident to the object at position `obj`, ascending.
    pub(crate) fn incident(&self, obj: usize) -> &[usize] {
        &self.incident[obj]
    }

    /// End object of a composable word; errors name the first bad letter.
    pub fn end_of(&self, w: &Word) -> Result<ObjectId> {
        if !self.has_object(&w.start) {
            return Err(Error::UnknownObject(w.start.to_string()));
        }
        let mut cur = &w.start;
        for (index, l) in w.letters.iter().enumerate() {
            let a = self.arrow(&l.id).ok_or_else(|| Error::Composition {
                index,
                detail: format!("unknown arrow `{}`", l.id),
            })?;
            let (from, to) = match l.sign {
                Sign::Pos => (&a.src, &a.tgt),
                Sign::Neg => (&a.tgt, &a.src),
            };
            if from != cur {
                return Err(Error::Composition {
                    index,
                    detail: format!("{l:?} starts at {from}, running endpoint is {cur}"),
                });
            }
            cur = to;
        }
        Ok(cur.clone())
    }

    /// Checks composability, then freely reduces.
    pub fn reduce_word(&self, w: &Word) -> Result<Word> {
        self.end_of(w)?;
        Ok(w.reduced())
    }

    /// Objects partitioned by connectivity of the underlying undirected
    /// graph. Parts are ordered by first object; members keep object order.
    pub fn connected_components(&self) -> Vec<Vec<ObjectId>> {
        let mut uf = UnionFind::new(self.objects.len());
        for a in &self.arrows {
            uf.union(self.object_index[&a.src], self.object_index[&a.tgt]);
        }
        uf.groups()
            .into_iter()
            .map(|g| g.into_iter().map(|i| self.objects[i].clone()).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Adds every member of `family` as a relation. The object set is
    /// unchanged.
    pub fn quotient_by_relations(&self, family: &RelationFamily) -> Result<GroupoidPresentation> {
        let mut relations = self.relations.clone();
        let base = relations.len();
        for (k, (object, w)) in family.iter().enumerate() {
            if w.start != *object {
                return Err(Error::RelationShape {
                    index: base + k,
                    detail: format!("listed at {object} but starts at {}", w.start),
                });
            }
            relations.push(w.clone());
        }
        self.clone().with_relations(relations)
    }
}

/// Per-object families of loops `{R(x)}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFamily {
    pub loops: BTreeMap<ObjectId, Vec<Word>>,
}

impl RelationFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Word) {
        self.loops.entry(w.start.clone()).or_default().push(w);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ObjectId, &Word)> {
        self.loops.iter().flat_map(|(o, ws)| ws.iter().map(move |w| (o, w)))
    }

    pub fn is_empty(&self) -> bool {
        self.loops.values().all(Vec::is_empty)
    }
}

/// Free product with identifier bookkeeping.
#[derive(Clone, Debug)]
pub struct FreeProduct {
    pub presentation: GroupoidPresentation,
    /// Arrow renames applied to the left factor (only colliding ids).
    pub left_renames: HashMap<Ident, Ident>,
    pub right_renames: HashMap<Ident, Ident>,
}

impl FreeProduct {
    pub fn left_id(&self, id: &Ident) -> Ident {
        self.left_renames.get(id).cloned().unwrap_or_else(|| id.clone())
    }

    pub fn right_id(&self, id: &Ident) -> Ident {
        self.right_renames.get(id).cloned().unwrap_or_else(|| id.clone())
    }

    pub fn left_word(&self, w: &Word) -> Word {
        rename_word(w, &self.left_renames)
    }

    pub fn right_word(&self, w: &Word) -> Word {
        rename_word(w, &self.right_renames)
    }
}

pub(crate) fn rename_word(w: &Word, renames: &HashMap<Ident, Ident>) -> Word {
    if renames.is_empty() {
        return w.clone();
    }
    Word {
        start: w.start.clone(),
        letters: w
            .letters
            .iter()
            .map(|l| Letter {
                id: renames.get(&l.id).cloned().unwrap_or_else(|| l.id.clone()),
                sign: l.sign,
            })
            .collect(),
    }
}

/// Free product over the shared identity subgroupoid on `Ob(G) ∩ Ob(H)`.
/// Colliding arrow ids are suffixed with their factor's tag.
pub fn free_product_tagged(
    g: &GroupoidPresentation,
    g_tag: &str,
    h: &GroupoidPresentation,
    h_tag: &str,
) -> Result<FreeProduct> {
    let g_ids: HashSet<&Ident> = g.arrows.iter().map(|a| &a.id).collect();
    let collide: HashSet<Ident> = h
        .arrows
        .iter()
        .filter(|a| g_ids.contains(&a.id))
        .map(|a| a.id.clone())
        .collect();
    let taken: HashSet<Ident> = g.arrows.iter().chain(h.arrows.iter()).map(|a| a.id.clone()).collect();
    let fresh = |id: &Ident, tag: &str| -> Ident {
        let mut name = format!("{id}.{tag}");
        while taken.contains(name.as_str()) {
            name.push('\'');
        }
        Arc::from(name)
    };
    let left_renames: HashMap<Ident, Ident> = collide.iter().map(|id| (id.clone(), fresh(id, g_tag))).collect();
    let right_renames: HashMap<Ident, Ident> = collide.iter().map(|id| (id.clone(), fresh(id, h_tag))).collect();

    let mut objects = g.objects.clone();
    objects.extend(h.objects.iter().filter(|o| !g.has_object(o)).cloned());
    let rename_arrow = |a: &Arrow, map: &HashMap<Ident, Ident>| Arrow {
        id: map.get(&a.id).cloned().unwrap_or_else(|| a.id.clone()),
        src: a.src.clone(),
        tgt: a.tgt.clone(),
    };
    let mut arrows: Vec<Arrow> = g.arrows.iter().map(|a| rename_arrow(a, &left_renames)).collect();
    arrows.extend(h.arrows.iter().map(|a| rename_arrow(a, &right_renames)));
    let mut relations: Vec<Word> = g.relations.iter().map(|w| rename_word(w, &left_renames)).collect();
    relations.extend(h.relations.iter().map(|w| rename_word(w, &right_renames)));

    Ok(FreeProduct {
        presentation: GroupoidPresentation::new(objects, arrows, relations)?,
        left_renames,
        right_renames,
    })
}

pub fn free_product(g: &GroupoidPresentation, h: &GroupoidPresentation) -> Result<GroupoidPresentation> {
    Ok(free_product_tagged(g, "L", h, "R")?.presentation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> ObjectId {
        ObjectId::new(s)
    }

    fn path_pqrs() -> GroupoidPresentation {
        // a: p->q, b: q->r, c: q->s
        GroupoidPresentation::free(
            vec![o("p"), o("q"), o("r"), o("s")],
            vec![
                Arrow::new("a", "p", "q"),
                Arrow::new("b", "q", "r"),
                Arrow::new("c", "q", "s"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn reduce_identity_and_inverse() {
        let g = path_pqrs();
        let e = Word::identity(o("p"));
        assert_eq!(g.reduce_word(&e).unwrap(), e);
        let w = Word::new(o("p"), vec![Letter::pos("a"), Letter::neg("a")]);
        assert_eq!(g.reduce_word(&w).unwrap(), Word::identity(o("p")));
    }

    #[test]
    fn reduce_middle_pair() {
        let g = path_pqrs();
        let w = Word::new(
            o("p"),
            vec![Letter::pos("a"), Letter::pos("b"), Letter::neg("b"), Letter::pos("c")],
        );
        assert_eq!(
            g.reduce_word(&w).unwrap(),
            Word::new(o("p"), vec![Letter::pos("a"), Letter::pos("c")])
        );
    }

    #[test]
    fn composition_error_names_index() {
        let g = path_pqrs();
        let w = Word::new(o("p"), vec![Letter::pos("a"), Letter::pos("a")]);
        match g.reduce_word(&w) {
            Err(Error::Composition { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected composition error, got {other:?}"),
        }
    }

    #[test]
    fn components_examples() {
        let g = GroupoidPresentation::free(vec![o("1"), o("2")], vec![]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![o("1")], vec![o("2")]]);

        let g = GroupoidPresentation::free(
            vec![o("1"), o("2"), o("3"), o("4")],
            vec![Arrow::new("a", "1", "2"), Arrow::new("b", "3", "4")],
        )
        .unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![o("1"), o("2")], vec![o("3"), o("4")]]
        );

        let cyc = GroupoidPresentation::free(
            vec![o("1"), o("2"), o("3"), o("4")],
            vec![
                Arrow::new("a", "1", "2"),
                Arrow::new("b", "2", "3"),
                Arrow::new("c", "3", "4"),
                Arrow::new("d", "4", "1"),
            ],
        )
        .unwrap();
        assert_eq!(cyc.connected_components().len(), 1);
        assert_eq!(cyc.connected_components()[0].len(), 4);
    }

    #[test]
    fn non_loop_relation_rejected() {
        let err = GroupoidPresentation::new(
            vec![o("p"), o("q")],
            vec![Arrow::new("a", "p", "q")],
            vec![Word::new(o("p"), vec![Letter::pos("a")])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::RelationShape { index: 0, .. }));
    }

    #[test]
    fn quotient_rejects_misplaced_loop() {
        let g = GroupoidPresentation::free(vec![o("p")], vec![Arrow::new("a", "p", "p")]).unwrap();
        let mut fam = RelationFamily::new();
        fam.loops.insert(o("p"), vec![Word::new(o("q"), vec![])]);
        assert!(matches!(
            g.quotient_by_relations(&fam),
            Err(Error::RelationShape { .. })
        ));

        let empty = g.quotient_by_relations(&RelationFamily::new()).unwrap();
        assert_eq!(empty, g);
    }

    #[test]
    fn free_product_renames_collisions() {
        let g = GroupoidPresentation::free(vec![o("p")], vec![Arrow::new("a", "p", "p")]).unwrap();
        let h = GroupoidPresentation::new(
            vec![o("p"), o("q")],
            vec![Arrow::new("a", "p", "q"), Arrow::new("b", "q", "q")],
            vec![Word::new(o("q"), vec![Letter::pos("b"), Letter::pos("b")])],
        )
        .unwrap();
        let fp = free_product_tagged(&g, "G", &h, "H").unwrap();
        let ids: Vec<&str> = fp.presentation.arrows().iter().map(|a| &*a.id).collect();
        assert_eq!(ids, vec!["a.G", "a.H", "b"]);
        assert_eq!(fp.presentation.objects(), &[o("p"), o("q")]);
        assert_eq!(fp.presentation.relations().len(), 1);
    }
}
