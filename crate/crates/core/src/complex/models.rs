use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ident, CellComplex, FaceCell};
use crate::error::{Error, Result};
use crate::groupoid::{Arrow, Letter, ObjectId, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelName {
    /// Square grid with one outer face glued along its perimeter.
    GridSphere,
    Disk,
    /// The disk with one inner square removed.
    Annulus,
    Cycle,
    Interval,
}

impl ModelName {
    pub fn euler_target(self) -> i64 {
        match self {
            ModelName::GridSphere => 2,
            ModelName::Disk | ModelName::Interval => 1,
            ModelName::Annulus | ModelName::Cycle => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ModelName::GridSphere => "grid_sphere",
            ModelName::Disk => "disk",
            ModelName::Annulus => "annulus",
            ModelName::Cycle => "cycle",
            ModelName::Interval => "interval",
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl std::str::FromStr for ModelName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "grid_sphere" => ModelName::GridSphere,
            "disk" => ModelName::Disk,
            "annulus" => ModelName::Annulus,
            "cycle" => ModelName::Cycle,
            "interval" => ModelName::Interval,
            _ => return Err(Error::Parameter(format!("unknown model `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelSpec {
    pub name: ModelName,
    pub n: usize,
}

impl ModelSpec {
    pub fn new(name: ModelName, n: usize) -> Self {
        ModelSpec { name, n }
    }
}

fn gv(r: usize, c: usize) -> ObjectId {
    ObjectId::new(format!("v{r}_{c}"))
}

fn h(r: usize, c: usize) -> String {
    format!("h{r}_{c}")
}

fn u(r: usize, c: usize) -> String {
    format!("u{r}_{c}")
}

/// Vertices `v{r}_{c}`; edges `h{r}_{c}: (r,c) -> (r,c+1)` then
/// `u{r}_{c}: (r,c) -> (r+1,c)`; square faces `f{r}_{c}`.
fn grid(n: usize, skip_face: Option<(usize, usize)>, outer: bool) -> Result<CellComplex> {
    let mut vertices = Vec::with_capacity((n + 1) * (n + 1));
    for r in 0..=n {
        for c in 0..=n {
            vertices.push(gv(r, c));
        }
    }
    let mut edges = Vec::with_capacity(2 * n * (n + 1));
    for r in 0..=n {
        for c in 0..n {
            edges.push(Arrow::new(h(r, c), gv(r, c), gv(r, c + 1)));
        }
    }
    for r in 0..n {
        for c in 0..=n {
            edges.push(Arrow::new(u(r, c), gv(r, c), gv(r + 1, c)));
        }
    }
    let mut faces = Vec::with_capacity(n * n + 1);
    for r in 0..n {
        for c in 0..n {
            if skip_face == Some((r, c)) {
                continue;
            }
            faces.push(FaceCell {
                id: ident(format!("f{r}_{c}")),
                boundary: Word::new(
                    gv(r, c),
                    vec![
                        Letter::pos(h(r, c)),
                        Letter::pos(u(r, c + 1)),
                        Letter::neg(h(r + 1, c)),
                        Letter::neg(u(r, c)),
                    ],
                ),
            });
        }
    }
    if outer {
        let mut letters = Vec::with_capacity(4 * n);
        letters.extend((0..n).map(|c| Letter::pos(h(0, c))));
        letters.extend((0..n).map(|r| Letter::pos(u(r, n))));
        letters.extend((0..n).rev().map(|c| Letter::neg(h(n, c))));
        letters.extend((0..n).rev().map(|r| Letter::neg(u(r, 0))));
        faces.push(FaceCell {
            id: ident("outer"),
            boundary: Word::new(gv(0, 0), letters),
        });
    }
    CellComplex::new(vertices, edges, faces)
}

/// Builds one of the named models at size `n ≥ 1`.
pub fn build_space(spec: &ModelSpec) -> Result<CellComplex> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::Parameter(format!("{} needs size at least 1", spec.name)));
    }
    match spec.name {
        ModelName::GridSphere => grid(n, None, true),
        ModelName::Disk => grid(n, None, false),
        ModelName::Annulus => {
            let m = (n - 1) / 2;
            grid(n, Some((m, m)), false)
        }
        ModelName::Cycle => {
            let vertices = (0..n).map(|i| ObjectId::new(format!("v{i}"))).collect();
            let edges = (0..n)
                .map(|i| Arrow::new(format!("e{i}"), format!("v{i}"), format!("v{}", (i + 1) % n)))
                .collect();
            CellComplex::new(vertices, edges, vec![])
        }
        ModelName::Interval => {
            let vertices = (0..=n).map(|i| ObjectId::new(format!("v{i}"))).collect();
            let edges = (0..n)
                .map(|i| Arrow::new(format!("e{i}"), format!("v{i}"), format!("v{}", i + 1)))
                .collect();
            CellComplex::new(vertices, edges, vec![])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let x = build_space(&ModelSpec::new(ModelName::GridSphere, 2)).unwrap();
        assert_eq!((x.vertices().len(), x.edges().len(), x.faces().len()), (9, 12, 5));
        assert_eq!(x.euler_characteristic(), 2);
        assert_eq!(
            build_space(&ModelSpec::new(ModelName::Interval, 3))
                .unwrap()
                .euler_characteristic(),
            1
        );
        assert_eq!(
            build_space(&ModelSpec::new(ModelName::Cycle, 4))
                .unwrap()
                .euler_characteristic(),
            0
        );
    }

    #[test]
    fn euler_targets() {
        for name in [
            ModelName::GridSphere,
            ModelName::Disk,
            ModelName::Annulus,
            ModelName::Cycle,
            ModelName::Interval,
        ] {
            for n in 1..7 {
                let x = build_space(&ModelSpec::new(name, n)).unwrap();
                assert_eq!(x.euler_characteristic(), name.euler_target(), "{name} {n}");
            }
        }
    }

    #[test]
    fn sphere_formulae() {
        for n in 1..6 {
            let x = build_space(&ModelSpec::new(ModelName::GridSphere, n)).unwrap();
            assert_eq!(x.vertices().len(), (n + 1) * (n + 1));
            assert_eq!(x.edges().len(), 2 * n * (n + 1));
            assert_eq!(x.faces().len(), n * n + 1);
            x.check_regular().unwrap();
        }
    }

    #[test]
    fn size_zero_rejected() {
        assert!(matches!(
            build_space(&ModelSpec::new(ModelName::Cycle, 0)),
            Err(Error::Parameter(_))
        ));
    }
}
