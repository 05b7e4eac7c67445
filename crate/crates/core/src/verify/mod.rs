//! Separation queries and the properties built on them: the
//! Phragmen-Brouwer property, connected arc complements with the bisection
//! search, and the Jordan curve checks.

mod jordan;

pub use jordan::{jordan_curve_check, split_curve, vankampen_jordan_pipeline, JordanReport, PipelineSummary};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{
    arc_order, build_space, complement_components, random_arc, subcomplex_from_path, Cell, CellComplex, LengthBounds,
    ModelName, ModelSpec, Subcomplex,
};
use crate::error::{Error, Result};

/// Whether `a` and `b` lie in different components of `X \ D`.
pub fn separates(x: &CellComplex, d: &Subcomplex, a: usize, b: usize) -> Result<bool> {
    for v in [a, b] {
        if v >= x.vertices().len() {
            return Err(Error::UnknownObject(format!("vertex #{v}")));
        }
        if d.contains(Cell::Vertex(v)) {
            return Err(Error::Membership(x.vertices()[v].to_string()));
        }
    }
    let parts = complement_components(x, d)?;
    Ok(parts.part_of(Cell::Vertex(a)) != parts.part_of(Cell::Vertex(b)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbpInstance {
    pub d: Subcomplex,
    pub e: Subcomplex,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PbpVerdict {
    Holds,
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbpOutcome {
    pub verdict: PbpVerdict,
    pub d_separates: bool,
    pub e_separates: bool,
    pub union_separates: bool,
}

/// Violated exactly when neither `D` nor `E` separates `a` from `b` but
/// `D ∪ E` does.
pub fn pbp_check(x: &CellComplex, inst: &PbpInstance) -> Result<PbpOutcome> {
    inst.d.check_closed(x)?;
    inst.e.check_closed(x)?;
    if let Some(c) = inst.d.intersection(&inst.e).cells().next() {
        return Err(Error::Disjointness(x.cell_name(c).to_string()));
    }
    let both = inst.d.union(&inst.e);
    let d_separates = separates(x, &inst.d, inst.a, inst.b)?;
    let e_separates = separates(x, &inst.e, inst.a, inst.b)?;
    let union_separates = separates(x, &both, inst.a, inst.b)?;
    let verdict = if !d_separates && !e_separates && union_separates {
        PbpVerdict::Violated
    } else {
        PbpVerdict::Holds
    };
    Ok(PbpOutcome {
        verdict,
        d_separates,
        e_separates,
        union_separates,
    })
}

/// The circle counterexample on `cycle(n)`: `D = {v0}`, `E = {v_h}` with
/// `h = n/2`, and `a`, `b` in the middle of the two arcs between them.
pub fn cycle_witness(n: usize) -> Result<(CellComplex, PbpInstance)> {
    if n < 4 {
        return Err(Error::Parameter("the circle witness needs n ≥ 4".into()));
    }
    let x = build_space(&ModelSpec::new(ModelName::Cycle, n))?;
    let h = n / 2;
    let inst = PbpInstance {
        d: Subcomplex::from_cells([Cell::Vertex(0)]),
        e: Subcomplex::from_cells([Cell::Vertex(h)]),
        a: h.div_ceil(2),
        b: h + (n - h).div_ceil(2),
    };
    Ok((x, inst))
}

/// Seeded instances with `D`, `E` single vertices or short arcs (one to
/// three edges), disjoint, and `a`, `b` vertices outside both.
pub fn sample_pbp_instances(x: &CellComplex, seed: u64, count: usize, retries: usize) -> Result<Vec<PbpInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = x.vertices().len();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > retries.max(1) * count.max(1) {
            return Err(Error::GenerationFailure {
                attempts,
                detail: "could not place disjoint D and E".into(),
            });
        }
        let pick = |rng: &mut ChaCha8Rng| -> Result<Subcomplex> {
            if rng.gen_bool(0.5) {
                Ok(Subcomplex::from_cells([Cell::Vertex(rng.gen_range(0..n))]))
            } else {
                random_arc(x, rng.gen(), LengthBounds::new(1, 3), retries)
            }
        };
        let d = pick(&mut rng)?;
        let e = pick(&mut rng)?;
        if !d.intersection(&e).is_empty() {
            continue;
        }
        let free: Vec<usize> = (0..n)
            .filter(|&v| !d.contains(Cell::Vertex(v)) && !e.contains(Cell::Vertex(v)))
            .collect();
        if free.is_empty() {
            continue;
        }
        let a = *free.choose(&mut rng).expect("nonempty");
        let b = *free.choose(&mut rng).expect("nonempty");
        out.push(PbpInstance { d, e, a, b });
    }
    Ok(out)
}

/// Whether the complement of an arc is connected.
pub fn arc_complement_connected(x: &CellComplex, arc: &Subcomplex) -> Result<bool> {
    crate::complex::validate_arc(x, arc)?;
    Ok(complement_components(x, arc)?.len() == 1)
}

/// The two halves of an arc given by its vertex and edge sequences, split at
/// vertex `⌈k/2⌉` for `k ≥ 2` edges and into its endpoints for `k = 1`.
pub fn arc_halves(vertices: &[usize], edges: &[usize]) -> Option<[(Vec<usize>, Vec<usize>); 2]> {
    let k = edges.len();
    match k {
        0 => None,
        1 => Some([(vec![vertices[0]], vec![]), (vec![vertices[1]], vec![])]),
        _ => {
            let mid = k.div_ceil(2);
            Some([
                (vertices[..=mid].to_vec(), edges[..mid].to_vec()),
                (vertices[mid..].to_vec(), edges[mid..].to_vec()),
            ])
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    pub subarc: Subcomplex,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    /// Number of halvings performed.
    pub depth: usize,
}

/// If the arc separates `a` from `b`, repeatedly halves it, keeping the
/// first half that still separates, until neither half separates or the
/// piece is a single vertex.
pub fn bisection_separating_subarc(x: &CellComplex, arc: &Subcomplex, a: usize, b: usize) -> Result<Option<Bisection>> {
    let (mut vs, mut es) = arc_order(x, arc)?;
    if !separates(x, arc, a, b)? {
        return Ok(None);
    }
    let mut depth = 0;
    'descend: while let Some(halves) = arc_halves(&vs, &es) {
        for (hv, he) in halves {
            if separates(x, &subcomplex_from_path(&hv, &he), a, b)? {
                vs = hv;
                es = he;
                depth += 1;
                continue 'descend;
            }
        }
        break;
    }
    Ok(Some(Bisection {
        subarc: subcomplex_from_path(&vs, &es),
        vertices: vs,
        edges: es,
        depth,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{random_simple_cycle, validate_arc};

    fn model(name: ModelName, n: usize) -> CellComplex {
        build_space(&ModelSpec::new(name, n)).unwrap()
    }

    fn points(vs: &[usize]) -> Subcomplex {
        vs.iter().map(|&v| Cell::Vertex(v)).collect()
    }

    #[test]
    fn separation_on_cycle() {
        let x = model(ModelName::Cycle, 8);
        assert!(!separates(&x, &points(&[0]), 2, 6).unwrap());
        assert!(separates(&x, &points(&[0, 4]), 2, 6).unwrap());
        assert!(!separates(&x, &Subcomplex::new(), 2, 6).unwrap());
        assert!(matches!(separates(&x, &points(&[2]), 2, 6), Err(Error::Membership(_))));
    }

    #[test]
    fn circle_fails_pbp() {
        let x = model(ModelName::Cycle, 8);
        let inst = PbpInstance {
            d: points(&[0]),
            e: points(&[4]),
            a: 2,
            b: 6,
        };
        assert_eq!(pbp_check(&x, &inst).unwrap().verdict, PbpVerdict::Violated);
        for n in 4..=16 {
            let (x, inst) = cycle_witness(n).unwrap();
            assert_eq!(pbp_check(&x, &inst).unwrap().verdict, PbpVerdict::Violated, "n = {n}");
        }
    }

    #[test]
    fn sphere_has_pbp() {
        let x = model(ModelName::GridSphere, 4);
        for inst in sample_pbp_instances(&x, 7, 40, 100).unwrap() {
            assert_eq!(pbp_check(&x, &inst).unwrap().verdict, PbpVerdict::Holds);
        }
        let same = PbpInstance {
            d: points(&[0]),
            e: points(&[24]),
            a: 12,
            b: 12,
        };
        assert_eq!(pbp_check(&x, &same).unwrap().verdict, PbpVerdict::Holds);
    }

    #[test]
    fn pbp_rejects_overlap() {
        let x = model(ModelName::Cycle, 8);
        let inst = PbpInstance {
            d: points(&[0]),
            e: points(&[0]),
            a: 2,
            b: 6,
        };
        assert!(matches!(pbp_check(&x, &inst), Err(Error::Disjointness(_))));
    }

    #[test]
    fn arcs_on_sphere_do_not_separate() {
        let x = model(ModelName::GridSphere, 6);
        for seed in 0..10 {
            let arc = random_arc(&x, seed, LengthBounds::new(0, 12), 100).unwrap();
            assert!(arc_complement_connected(&x, &arc).unwrap());
        }
        let curve = random_simple_cycle(&x, 3, LengthBounds::new(4, 20), 1000).unwrap();
        assert!(matches!(arc_complement_connected(&x, &curve), Err(Error::Shape(_))));
    }

    #[test]
    fn interval_bisection_finds_a_cut_vertex() {
        let x = model(ModelName::Interval, 8);
        let arc = subcomplex_from_path(&[2, 3, 4, 5, 6], &[2, 3, 4, 5]);
        assert!(!arc_complement_connected(&x, &arc).unwrap());
        let found = bisection_separating_subarc(&x, &arc, 0, 8).unwrap().unwrap();
        assert_eq!(found.vertices.len(), 1);
        assert!(separates(&x, &found.subarc, 0, 8).unwrap());
        validate_arc(&x, &found.subarc).unwrap();
    }

    #[test]
    fn non_separating_arcs_give_none() {
        let x = model(ModelName::Cycle, 8);
        let arc = subcomplex_from_path(&[1, 2, 3], &[1, 2]);
        assert_eq!(bisection_separating_subarc(&x, &arc, 5, 6).unwrap(), None);
        let y = model(ModelName::GridSphere, 4);
        let arc = subcomplex_from_path(&[0, 1, 2], &[0, 1]);
        assert_eq!(bisection_separating_subarc(&y, &arc, 12, 24).unwrap(), None);
    }

    #[test]
    fn halves_share_the_midpoint() {
        let [(v1, e1), (v2, e2)] = arc_halves(&[0, 1, 2, 3, 4], &[10, 11, 12, 13]).unwrap();
        assert_eq!((v1, e1), (vec![0, 1, 2], vec![10, 11]));
        assert_eq!((v2, e2), (vec![2, 3, 4], vec![12, 13]));
        let [(v1, _), (v2, _)] = arc_halves(&[0, 1, 2, 3], &[10, 11, 12]).unwrap();
        assert_eq!((v1, v2), (vec![0, 1, 2], vec![2, 3]));
        assert!(arc_halves(&[0], &[]).is_none());
    }
}
