use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::components::components_of_mask;
use super::{Cell, CellComplex, ComponentPartition, Subcomplex};
use crate::error::{Error, Result};
use crate::groupoid::{
    object_group_with_tree, spanning_tree, Arrow, GroupPresentation, GroupoidPresentation, Letter, ObjectId, Word,
};
use crate::pushout::{GroupoidMorphismData, PushoutInput};

/// The edge-path groupoid of a complex with its marked base points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathGroupoid {
    pub presentation: GroupoidPresentation,
    pub base_points: Vec<ObjectId>,
}

impl PathGroupoid {
    pub fn object_group(&self, p: &ObjectId) -> Result<GroupPresentation> {
        if !self.base_points.contains(p) {
            return Err(Error::Basepoint(p.to_string()));
        }
        crate::groupoid::object_group_presentation(&self.presentation, p)
    }
}

/// Generators are the edges, relations the face boundaries, all vertices
/// are objects and `j` is recorded as the set of base points.
pub fn fundamental_groupoid_presentation(x: &CellComplex, j: &[ObjectId]) -> Result<PathGroupoid> {
    if j.is_empty() {
        return Err(Error::Connectivity("the base-point set is empty".into()));
    }
    for p in j {
        if x.vertex(p.as_str()).is_none() {
            return Err(Error::UnknownObject(p.to_string()));
        }
    }
    let presentation = x.edge_path_groupoid();
    for part in presentation.connected_components() {
        if !part.iter().any(|o| j.contains(o)) {
            return Err(Error::Connectivity(format!(
                "no base point in the component of `{}`",
                part[0]
            )));
        }
    }
    Ok(PathGroupoid {
        presentation,
        base_points: j.to_vec(),
    })
}

/// The object naming a cell in an order-complex model: `v:`, `e:` or `f:`
/// followed by the cell name.
pub fn cell_object(x: &CellComplex, c: Cell) -> ObjectId {
    let tag = match c {
        Cell::Vertex(_) => "v",
        Cell::Edge(_) => "e",
        Cell::Face(_) => "f",
    };
    ObjectId::new(format!("{tag}:{}", x.cell_name(c)))
}

/// Groupoid model of an open set given by its retained cells: the order
/// complex of the retained face poset. Objects are cells, arrows are
/// comparable pairs `σ<τ` directed upwards, relations are the triangles
/// `v<e<f`.
#[derive(Clone, Debug)]
pub struct OpenModel {
    pub presentation: GroupoidPresentation,
    pub cells: Vec<Cell>,
}

pub fn open_model(x: &CellComplex, removed: &Subcomplex) -> Result<OpenModel> {
    x.check_regular()?;
    let gone = removed.mask(x);
    let keep = |c: Cell| !gone[x.cell_index(c)];
    let name: Vec<ObjectId> = x.cells().map(|c| cell_object(x, c)).collect();
    let obj = |c: Cell| name[x.cell_index(c)].clone();
    let arrow_id = |lo: Cell, hi: Cell| format!("{}<{}", obj(lo), obj(hi));

    let cells: Vec<Cell> = x.cells().filter(|&c| keep(c)).collect();
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    for &hi in &cells {
        for lo in x.boundary_cells(hi) {
            if keep(lo) {
                arrows.push(Arrow::new(arrow_id(lo, hi), obj(lo), obj(hi)));
            }
        }
        if let Cell::Face(f) = hi {
            let mut edges: Vec<usize> = x.face_boundary(f).iter().map(|&(e, _)| e).collect();
            edges.sort_unstable();
            for e in edges {
                let ec = Cell::Edge(e);
                if !keep(ec) {
                    continue;
                }
                let (s, t) = x.ends(e);
                for v in [s, t] {
                    let vc = Cell::Vertex(v);
                    if keep(vc) {
                        relations.push(Word::new(
                            obj(vc),
                            vec![
                                Letter::pos(arrow_id(vc, ec)),
                                Letter::pos(arrow_id(ec, hi)),
                                Letter::neg(arrow_id(vc, hi)),
                            ],
                        ));
                    }
                }
            }
        }
    }
    let presentation = GroupoidPresentation::new(cells.iter().map(|&c| obj(c)).collect(), arrows, relations)?;
    Ok(OpenModel { presentation, cells })
}

/// Object group at cell `p` of the open set left after removing `removed`.
pub fn open_pi1(x: &CellComplex, removed: &Subcomplex, p: Cell) -> Result<GroupPresentation> {
    if removed.contains(p) {
        return Err(Error::Membership(x.cell_name(p).to_string()));
    }
    let m = open_model(x, removed)?;
    crate::groupoid::object_group_presentation(&m.presentation, &cell_object(x, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverMode {
    /// `D` and `E` must be disjoint.
    Pbp,
    /// `D` and `E` may overlap, as two arcs of one curve do.
    General,
}

/// `U = X \ D`, `V = X \ E`, `W = U ∩ V`, with one base cell per component
/// of `W`.
#[derive(Clone, Debug)]
pub struct CoverData {
    pub mode: CoverMode,
    pub d: Subcomplex,
    pub e: Subcomplex,
    pub u: Subcomplex,
    pub v: Subcomplex,
    pub w: Subcomplex,
    pub w_components: ComponentPartition,
    /// The lowest cell of each component of `W`, in part order.
    pub j: Vec<Cell>,
}

impl CoverData {
    pub fn j_objects(&self, x: &CellComplex) -> Vec<ObjectId> {
        self.j.iter().map(|&c| cell_object(x, c)).collect()
    }
}

pub fn carve_cover(x: &CellComplex, d: &Subcomplex, e: &Subcomplex, mode: CoverMode) -> Result<CoverData> {
    d.check_closed(x)?;
    e.check_closed(x)?;
    if mode == CoverMode::Pbp {
        if let Some(c) = d.intersection(e).cells().next() {
            return Err(Error::Disjointness(x.cell_name(c).to_string()));
        }
    }
    let both = d.union(e);
    let gone = both.mask(x);
    let w_components = components_of_mask(x, &gone);
    let outside = |s: &Subcomplex| Subcomplex::from_cells(x.cells().filter(|&c| !s.contains(c)));
    let j = w_components.parts.iter().map(|p| p[0]).collect();
    Ok(CoverData {
        mode,
        d: d.clone(),
        e: e.clone(),
        u: outside(d),
        v: outside(e),
        w: outside(&both),
        w_components,
        j,
    })
}

/// The pushout square of a cover: `A`, `B`, `W` are the order-complex models
/// of `U`, `V`, `W`; `C` is totally disconnected on `J` with the object
/// groups of the components of `W`, and `i`, `j` are induced by inclusion.
pub fn pushout_input_from_cover(x: &CellComplex, cover: &CoverData) -> Result<PushoutInput> {
    if cover.j.is_empty() {
        return Err(Error::Shape("the intersection of the cover is empty".into()));
    }
    let a = open_model(x, &cover.d)?.presentation;
    let b = open_model(x, &cover.e)?.presentation;
    let w = open_model(x, &cover.d.union(&cover.e))?.presentation;
    let base_points = cover.j_objects(x);

    let mut loops = Vec::new();
    let mut relations = Vec::new();
    let mut image = BTreeMap::new();
    for p in &base_points {
        let tree = spanning_tree(&w, p)?;
        let tree_arrows = tree.tree_arrows();
        for arrow in w.arrows() {
            if !tree.contains(&arrow.src) || tree_arrows.contains(&arrow.id) {
                continue;
            }
            let to = tree.tau(&arrow.src).expect("source in tree");
            let back = tree.tau(&arrow.tgt).expect("target in tree");
            let word = to
                .then(&Word::new(arrow.src.clone(), vec![Letter::pos(&arrow.id)]))
                .then(&back.inverse(arrow.tgt.clone()))
                .reduced();
            loops.push(Arrow::new(&arrow.id, p.clone(), p.clone()));
            image.insert(arrow.id.to_string(), word);
        }
        let group = object_group_with_tree(&w, &tree);
        for r in group.relators() {
            relations.push(Word::new(p.clone(), r.0.clone()));
        }
    }
    let c = GroupoidPresentation::new(base_points.clone(), loops, relations)?;
    let morphism = GroupoidMorphismData {
        object_map: base_points.iter().map(|p| (p.clone(), p.clone())).collect(),
        arrow_map: image,
    };
    Ok(PushoutInput {
        basepoint: base_points[0].clone(),
        base_points,
        c,
        a,
        b,
        i: morphism.clone(),
        j: morphism,
    })
}
