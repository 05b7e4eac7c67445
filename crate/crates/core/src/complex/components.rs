use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Cell, CellComplex, Subcomplex};
use crate::error::Result;
use crate::union_find::UnionFind;

/// Components of the cells left after removing a closed subcomplex. Two
/// retained cells are adjacent when one lies in the boundary of the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Each part sorted; parts ordered by their smallest cell.
    pub parts: Vec<Vec<Cell>>,
    part_of: HashMap<Cell, usize>,
    /// The adjacencies that merged two classes, a spanning forest of the
    /// parts.
    pub forest: Vec<(Cell, Cell)>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `None` for removed cells.
    pub fn part_of(&self, c: Cell) -> Option<usize> {
        self.part_of.get(&c).copied()
    }

    pub fn retained(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().flatten().copied()
    }

    /// A chain of adjacent retained cells from `a` to `b` along the spanning
    /// forest, or `None` when they lie in different parts.
    pub fn witness_path(&self, a: Cell, b: Cell) -> Option<Vec<Cell>> {
        let pa = self.part_of(a)?;
        if self.part_of(b)? != pa {
            return None;
        }
        let mut adj: HashMap<Cell, Vec<Cell>> = HashMap::new();
        for &(x, y) in &self.forest {
            if self.part_of[&x] == pa {
                adj.entry(x).or_default().push(y);
                adj.entry(y).or_default().push(x);
            }
        }
        let mut prev: HashMap<Cell, Cell> = HashMap::new();
        let mut queue = VecDeque::from([a]);
        prev.insert(a, a);
        while let Some(c) = queue.pop_front() {
            if c == b {
                break;
            }
            for &d in adj.get(&c).into_iter().flatten() {
                if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(d) {
                    e.insert(c);
                    queue.push_back(d);
                }
            }
        }
        let mut path = vec![b];
        let mut c = b;
        while c != a {
            c = prev[&c];
            path.push(c);
        }
        path.reverse();
        Some(path)
    }
}

/// Partitions the cells outside the closed subcomplex `s` into connected
/// parts by union-find over the face poset.
pub fn complement_components(x: &CellComplex, s: &Subcomplex) -> Result<ComponentPartition> {
    s.check_closed(x)?;
    let removed = s.mask(x);
    Ok(components_of_mask(x, &removed))
}

pub(crate) fn components_of_mask(x: &CellComplex, removed: &[bool]) -> ComponentPartition {
    let n = x.cell_count();
    let mut uf = UnionFind::new(n);
    let mut forest = Vec::new();
    for k in 0..n {
        if removed[k] {
            continue;
        }
        let c = x.cell_at(k);
        for b in x.boundary_cells(c) {
            let kb = x.cell_index(b);
            if !removed[kb] && uf.union(k, kb) {
                forest.push((b, c));
            }
        }
    }
    let mut parts = Vec::new();
    let mut part_of = HashMap::new();
    for group in uf.groups() {
        if removed[group[0]] {
            continue;
        }
        let cells: Vec<Cell> = group.into_iter().map(|k| x.cell_at(k)).collect();
        for &c in &cells {
            part_of.insert(c, parts.len());
        }
        parts.push(cells);
    }
    ComponentPartition { parts, part_of, forest }
}

/// `closure(part) \ part`.
pub fn component_boundary(x: &CellComplex, part: &[Cell]) -> Subcomplex {
    let inside: BTreeSet<Cell> = part.iter().copied().collect();
    let mut out = Subcomplex::new();
    for &c in part {
        for b in x.boundary_cells(c) {
            if !inside.contains(&b) {
                out.insert(b);
            }
        }
    }
    out
}
