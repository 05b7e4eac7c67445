//! Finite 2-dimensional cell complexes: vertices, oriented edges and faces
//! bounded by closed edge words.
//!
//! Open subsets are modelled by the cells left over after removing a closed
//! subcomplex. Their fundamental groupoids are read off the order complex of
//! the retained cell poset, which is a regular CW model of the open set.

mod components;
mod cover;
mod models;
mod paths;

pub use components::{complement_components, component_boundary, ComponentPartition};
pub use cover::{
    carve_cover, cell_object, fundamental_groupoid_presentation, open_model, open_pi1, pushout_input_from_cover,
    CoverData, CoverMode, OpenModel, PathGroupoid,
};
pub use models::{build_space, ModelName, ModelSpec};
pub use paths::{
    arc_order, cycle_order, random_arc, random_simple_cycle, subcomplex_from_path, validate_arc, validate_simple_cycle,
    LengthBounds,
};

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{Arrow, GroupoidPresentation, Ident, ObjectId, Sign, Word};

/// A cell by kind and index. Orders vertices before edges before faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

impl Cell {
    pub fn dim(self) -> usize {
        match self {
            Cell::Vertex(_) => 0,
            Cell::Edge(_) => 1,
            Cell::Face(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCell {
    pub id: Ident,
    pub boundary: Word,
}

/// A finite cell complex of dimension at most two. Edges are arrows between
/// vertices; each face is attached along a closed edge word.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct CellComplex {
    vertices: Vec<ObjectId>,
    edges: Vec<Arrow>,
    faces: Vec<FaceCell>,
    vertex_index: HashMap<ObjectId, usize>,
    edge_index: HashMap<Ident, usize>,
    face_index: HashMap<Ident, usize>,
    ends: Vec<(usize, usize)>,
    face_edges: Vec<Vec<(usize, Sign)>>,
    vertex_edges: Vec<Vec<usize>>,
    edge_faces: Vec<Vec<usize>>,
}

impl PartialEq for CellComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.faces == other.faces
    }
}

impl Eq for CellComplex {}

impl fmt::Debug for CellComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CellComplex(V={}, E={}, F={})",
            self.vertices.len(),
            self.edges.len(),
            self.faces.len()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    vertices: Vec<ObjectId>,
    #[serde(default)]
    edges: Vec<Arrow>,
    #[serde(default)]
    faces: Vec<FaceCell>,
}

impl TryFrom<RawComplex> for CellComplex {
    type Error = Error;
    fn try_from(raw: RawComplex) -> Result<Self> {
        CellComplex::new(raw.vertices, raw.edges, raw.faces)
    }
}

impl From<CellComplex> for RawComplex {
    fn from(x: CellComplex) -> Self {
        RawComplex {
            vertices: x.vertices,
            edges: x.edges,
            faces: x.faces,
        }
    }
}

impl CellComplex {
    pub fn new(vertices: Vec<ObjectId>, edges: Vec<Arrow>, faces: Vec<FaceCell>) -> Result<Self> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (k, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), k).is_some() {
                return Err(Error::Duplicate(v.to_string()));
            }
        }
        let mut edge_index = HashMap::with_capacity(edges.len());
        let mut ends = Vec::with_capacity(edges.len());
        let mut vertex_edges = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            if edge_index.insert(e.id.clone(), k).is_some() {
                return Err(Error::Duplicate(e.id.to_string()));
            }
            let s = *vertex_index
                .get(&e.src)
                .ok_or_else(|| Error::UnknownObject(e.src.to_string()))?;
            let t = *vertex_index
                .get(&e.tgt)
                .ok_or_else(|| Error::UnknownObject(e.tgt.to_string()))?;
            ends.push((s, t));
            vertex_edges[s].push(k);
            if t != s {
                vertex_edges[t].push(k);
            }
        }
        let mut face_index = HashMap::with_capacity(faces.len());
        let mut face_edges = Vec::with_capacity(faces.len());
        let mut edge_faces = vec![Vec::new(); edges.len()];
        for (k, f) in faces.iter().enumerate() {
            if face_index.insert(f.id.clone(), k).is_some() {
                return Err(Error::Duplicate(f.id.to_string()));
            }
            if f.boundary.is_empty() {
                return Err(Error::Shape(format!("face `{}` has an empty boundary", f.id)));
            }
            let start = *vertex_index
                .get(&f.boundary.start)
                .ok_or_else(|| Error::UnknownObject(f.boundary.start.to_string()))?;
            let mut here = start;
            let mut word = Vec::with_capacity(f.boundary.len());
            for (i, l) in f.boundary.letters.iter().enumerate() {
                let e = *edge_index
                    .get(&l.id)
                    .ok_or_else(|| Error::UnknownArrow(l.id.to_string()))?;
                let (s, t) = ends[e];
                let (from, to) = match l.sign {
                    Sign::Pos => (s, t),
                    Sign::Neg => (t, s),
                };
                if from != here {
                    return Err(Error::Composition {
                        index: i,
                        detail: format!("boundary of face `{}` breaks at `{}`", f.id, l.id),
                    });
                }
                here = to;
                word.push((e, l.sign));
                if !edge_faces[e].contains(&k) {
                    edge_faces[e].push(k);
                }
            }
            if here != start {
                return Err(Error::Shape(format!("boundary of face `{}` is not closed", f.id)));
            }
            face_edges.push(word);
        }
        Ok(CellComplex {
            vertices,
            edges,
            faces,
            vertex_index,
            edge_index,
            face_index,
            ends,
            face_edges,
            vertex_edges,
            edge_faces,
        })
    }

    pub fn vertices(&self) -> &[ObjectId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Arrow] {
        &self.edges
    }

    pub fn faces(&self) -> &[FaceCell] {
        &self.faces
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(&ObjectId::new(name)).copied()
    }

    pub fn edge(&self, name: &str) -> Option<usize> {
        self.edge_index.get(name).copied()
    }

    pub fn face(&self, name: &str) -> Option<usize> {
        self.face_index.get(name).copied()
    }

    /// `(source, target)` vertex indices of an edge.
    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    pub fn face_boundary(&self, f: usize) -> &[(usize, Sign)] {
        &self.face_edges[f]
    }

    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn faces_on(&self, e: usize) -> &[usize] {
        &self.edge_faces[e]
    }

    /// The vertex at the other end of `e` from `v`.
    pub fn across(&self, e: usize, v: usize) -> usize {
        let (s, t) = self.ends[e];
        if s == v {
            t
        } else {
            s
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn cell_count(&self) -> usize {
        self.vertices.len() + self.edges.len() + self.faces.len()
    }

    /// Dense index of a cell: vertices, then edges, then faces.
    pub fn cell_index(&self, c: Cell) -> usize {
        match c {
            Cell::Vertex(i) => i,
            Cell::Edge(i) => self.vertices.len() + i,
            Cell::Face(i) => self.vertices.len() + self.edges.len() + i,
        }
    }

    pub fn cell_at(&self, k: usize) -> Cell {
        let (v, e) = (self.vertices.len(), self.edges.len());
        if k < v {
            Cell::Vertex(k)
        } else if k < v + e {
            Cell::Edge(k - v)
        } else {
            Cell::Face(k - v - e)
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.cell_count()).map(|k| self.cell_at(k))
    }

    pub fn cell_name(&self, c: Cell) -> &str {
        match c {
            Cell::Vertex(i) => self.vertices[i].as_str(),
            Cell::Edge(i) => &self.edges[i].id,
            Cell::Face(i) => &self.faces[i].id,
        }
    }

    /// The cells strictly below `c` in the face poset.
    pub fn boundary_cells(&self, c: Cell) -> Vec<Cell> {
        match c {
            Cell::Vertex(_) => Vec::new(),
            Cell::Edge(e) => {
                let (s, t) = self.ends[e];
                if s == t {
                    vec![Cell::Vertex(s)]
                } else {
                    vec![Cell::Vertex(s), Cell::Vertex(t)]
                }
            }
            Cell::Face(f) => {
                let mut out = BTreeSet::new();
                for &(e, _) in &self.face_edges[f] {
                    out.insert(Cell::Edge(e));
                    let (s, t) = self.ends[e];
                    out.insert(Cell::Vertex(s));
                    out.insert(Cell::Vertex(t));
                }
                out.into_iter().collect()
            }
        }
    }

    /// The cells strictly above `c` in the face poset.
    pub fn coboundary_cells(&self, c: Cell) -> Vec<Cell> {
        match c {
            Cell::Vertex(v) => {
                let mut out = BTreeSet::new();
                for &e in &self.vertex_edges[v] {
                    out.insert(Cell::Edge(e));
                    for &f in &self.edge_faces[e] {
                        out.insert(Cell::Face(f));
                    }
                }
                out.into_iter().collect()
            }
            Cell::Edge(e) => self.edge_faces[e].iter().map(|&f| Cell::Face(f)).collect(),
            Cell::Face(_) => Vec::new(),
        }
    }

    /// The underlying edge-path groupoid: vertices, edges, face boundaries.
    pub fn edge_path_groupoid(&self) -> GroupoidPresentation {
        GroupoidPresentation::new(
            self.vertices.clone(),
            self.edges.clone(),
            self.faces.iter().map(|f| f.boundary.clone()).collect(),
        )
        .expect("a validated complex is a valid groupoid presentation")
    }

    /// Whether each edge joins distinct vertices and each face is attached
    /// along a simple cycle. Order-complex models need this.
    pub fn check_regular(&self) -> Result<()> {
        for (k, &(s, t)) in self.ends.iter().enumerate() {
            if s == t {
                return Err(Error::Shape(format!("edge `{}` is a loop", self.edges[k].id)));
            }
        }
        for (k, word) in self.face_edges.iter().enumerate() {
            let mut seen_v = HashSet::new();
            let mut seen_e = HashSet::new();
            for &(e, sign) in word {
                let (s, t) = self.ends[e];
                let from = if sign == Sign::Pos { s } else { t };
                if !seen_e.insert(e) || !seen_v.insert(from) {
                    return Err(Error::Shape(format!(
                        "face `{}` is not attached along a simple cycle",
                        self.faces[k].id
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A set of cells of some complex, used for closed subcomplexes such as
/// removed sets, arcs and curves, and for component boundaries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subcomplex {
    cells: BTreeSet<Cell>,
}

impl Subcomplex {
    pub fn new() -> Self {
        Subcomplex::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Subcomplex {
            cells: cells.into_iter().collect(),
        }
    }

    /// The smallest closed subcomplex containing `cells`.
    pub fn closure_of(x: &CellComplex, cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut out = BTreeSet::new();
        for c in cells {
            out.insert(c);
            out.extend(x.boundary_cells(c));
        }
        Subcomplex { cells: out }
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().filter_map(|c| match c {
            Cell::Vertex(v) => Some(*v),
            _ => None,
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().filter_map(|c| match c {
            Cell::Edge(e) => Some(*e),
            _ => None,
        })
    }

    pub fn faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().filter_map(|c| match c {
            Cell::Face(f) => Some(*f),
            _ => None,
        })
    }

    pub fn union(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex {
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex {
            cells: self.cells.intersection(&other.cells).copied().collect(),
        }
    }

    /// Fails with the first cell whose boundary is not contained.
    pub fn check_closed(&self, x: &CellComplex) -> Result<()> {
        for &c in &self.cells {
            self.check_cell(x, c)?;
            if x.boundary_cells(c).iter().any(|b| !self.cells.contains(b)) {
                return Err(Error::Closure(x.cell_name(c).to_string()));
            }
        }
        Ok(())
    }

    fn check_cell(&self, x: &CellComplex, c: Cell) -> Result<()> {
        let ok = match c {
            Cell::Vertex(i) => i < x.vertices.len(),
            Cell::Edge(i) => i < x.edges.len(),
            Cell::Face(i) => i < x.faces.len(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Shape(format!("cell {c:?} is not in the complex")))
        }
    }

    /// Indicator over dense cell indices.
    pub fn mask(&self, x: &CellComplex) -> Vec<bool> {
        let mut m = vec![false; x.cell_count()];
        for &c in &self.cells {
            m[x.cell_index(c)] = true;
        }
        m
    }

    pub fn resolve(x: &CellComplex, spec: &SubcomplexSpec) -> Result<Self> {
        let mut cells = BTreeSet::new();
        for v in &spec.vertices {
            cells.insert(Cell::Vertex(
                x.vertex(v).ok_or_else(|| Error::UnknownObject(v.clone()))?,
            ));
        }
        for e in &spec.edges {
            cells.insert(Cell::Edge(x.edge(e).ok_or_else(|| Error::UnknownArrow(e.clone()))?));
        }
        for f in &spec.faces {
            cells.insert(Cell::Face(
                x.face(f).ok_or_else(|| Error::Shape(format!("unknown face `{f}`")))?,
            ));
        }
        Ok(Subcomplex { cells })
    }

    pub fn to_spec(&self, x: &CellComplex) -> SubcomplexSpec {
        SubcomplexSpec {
            vertices: self.vertices().map(|v| x.vertices[v].to_string()).collect(),
            edges: self.edges().map(|e| x.edges[e].id.to_string()).collect(),
            faces: self.faces().map(|f| x.faces[f].id.to_string()).collect(),
        }
    }
}

impl FromIterator<Cell> for Subcomplex {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Subcomplex::from_cells(iter)
    }
}

/// A subcomplex written by cell names, for files.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcomplexSpec {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<String>,
    #[serde(default)]
    pub faces: Vec<String>,
}

pub(crate) fn ident(s: impl AsRef<str>) -> Ident {
    Arc::from(s.as_ref())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::Letter;

    fn square() -> CellComplex {
        build_space(&ModelSpec::new(ModelName::Disk, 1)).unwrap()
    }

    #[test]
    fn rejects_open_face_boundary() {
        let v = vec![ObjectId::new("a"), ObjectId::new("b")];
        let e = vec![Arrow::new("x", "a", "b")];
        let f = vec![FaceCell {
            id: ident("f"),
            boundary: Word::new(ObjectId::new("a"), vec![Letter::pos("x")]),
        }];
        assert!(matches!(CellComplex::new(v, e, f), Err(Error::Shape(_))));
    }

    #[test]
    fn rejects_broken_face_boundary() {
        let v = vec![ObjectId::new("a"), ObjectId::new("b")];
        let e = vec![Arrow::new("x", "a", "b")];
        let f = vec![FaceCell {
            id: ident("f"),
            boundary: Word::new(ObjectId::new("a"), vec![Letter::pos("x"), Letter::pos("x")]),
        }];
        assert!(matches!(
            CellComplex::new(v, e, f),
            Err(Error::Composition { index: 1, .. })
        ));
    }

    #[test]
    fn closure_and_closedness() {
        let x = square();
        let f = Subcomplex::closure_of(&x, [Cell::Face(0)]);
        assert_eq!(f.len(), 9);
        assert!(f.check_closed(&x).is_ok());
        let bad = Subcomplex::from_cells([Cell::Edge(0)]);
        assert!(matches!(bad.check_closed(&x), Err(Error::Closure(_))));
    }

    #[test]
    fn spec_round_trip() {
        let x = square();
        let s = Subcomplex::closure_of(&x, [Cell::Edge(1)]);
        assert_eq!(Subcomplex::resolve(&x, &s.to_spec(&x)).unwrap(), s);
    }

    #[test]
    fn cell_index_round_trip() {
        let x = square();
        for k in 0..x.cell_count() {
            assert_eq!(x.cell_index(x.cell_at(k)), k);
        }
    }

    #[test]
    fn json_round_trip() {
        let x = build_space(&ModelSpec::new(ModelName::GridSphere, 2)).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        let y: CellComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
