use serde::{Deserialize, Serialize};

use crate::analysis::{abelianization, AbelianInvariants};
use crate::complex::{
    carve_cover, cell_object, complement_components, component_boundary, cycle_order, open_pi1,
    pushout_input_from_cover, subcomplex_from_path, validate_simple_cycle, Cell, CellComplex, CoverMode, Subcomplex,
};
use crate::error::{Error, Result};
use crate::groupoid::object_group_presentation;
use crate::pushout::{certify, pushout_object_group, validate_pushout_input, CertificateKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineSummary {
    /// The split points.
    pub a: String,
    pub b: String,
    pub arc_lengths: [usize; 2],
    pub u_cells: usize,
    pub v_cells: usize,
    pub w_cells: usize,
    pub base_points: Vec<String>,
    pub pi1_u: AbelianInvariants,
    pub pi1_v: AbelianInvariants,
    pub pushout: AbelianInvariants,
    pub direct: AbelianInvariants,
    pub f_generators: usize,
    pub certificate: CertificateKind,
    pub relators_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanReport {
    pub curve_length: usize,
    pub component_count: usize,
    pub component_sizes: Vec<usize>,
    pub boundaries_equal_curve: Vec<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pipeline: Option<PipelineSummary>,
}

impl JordanReport {
    /// Two components, each bounded by exactly the curve.
    pub fn separates_as_expected(&self) -> bool {
        self.component_count == 2 && self.boundaries_equal_curve.iter().all(|&b| b)
    }
}

/// Components of the complement of a simple cycle and whether each is
/// bounded by exactly the cycle.
pub fn jordan_curve_check(x: &CellComplex, c: &Subcomplex) -> Result<JordanReport> {
    validate_simple_cycle(x, c)?;
    let parts = complement_components(x, c)?;
    Ok(JordanReport {
        curve_length: c.edges().count(),
        component_count: parts.len(),
        component_sizes: parts.parts.iter().map(Vec::len).collect(),
        boundaries_equal_curve: parts.parts.iter().map(|p| component_boundary(x, p) == *c).collect(),
        pipeline: None,
    })
}

/// Splits a simple cycle at traversal positions `0` and `⌊len/2⌋` into two
/// arcs meeting only at their endpoints. Returns `(a, b, A, B)`.
pub fn split_curve(x: &CellComplex, c: &Subcomplex) -> Result<(usize, usize, Subcomplex, Subcomplex)> {
    let (vs, es) = cycle_order(x, c)?;
    let len = es.len();
    if len < 4 {
        return Err(Error::PipelineStage {
            stage: "split",
            detail: format!("curve of length {len} is shorter than 4"),
        });
    }
    let h = len / 2;
    let first = subcomplex_from_path(&vs[..=h], &es[..h]);
    let mut second_vs = vs[h..].to_vec();
    second_vs.push(vs[0]);
    let second = subcomplex_from_path(&second_vs, &es[h..]);
    Ok((vs[0], vs[h], first, second))
}

fn stage(stage: &'static str, detail: impl Into<String>) -> Error {
    Error::PipelineStage {
        stage,
        detail: detail.into(),
    }
}

/// Replays the van Kampen argument on a curve: split it into arcs `A`, `B`
/// at `a`, `b`; cover `X \ {a, b}` by `U = X \ A` and `V = X \ B`; check that
/// `U`, `V` are connected and simply connected up to abelianization; glue
/// along one base point per component of `W = X \ C`; and check that the
/// result has abelianization `Z`, agrees with `π₁(X \ {a, b})` computed
/// directly, and forces `|J| = 2`.
pub fn vankampen_jordan_pipeline(x: &CellComplex, c: &Subcomplex) -> Result<JordanReport> {
    let mut report = jordan_curve_check(x, c)?;
    let (a, b, arc_a, arc_b) = split_curve(x, c)?;

    for (name, arc) in [("U", &arc_a), ("V", &arc_b)] {
        let parts = complement_components(x, arc)?;
        if parts.len() != 1 {
            return Err(stage("connected", format!("{name} has {} components", parts.len())));
        }
    }

    let cover = carve_cover(x, &arc_a, &arc_b, CoverMode::General)?;
    if cover.j.len() != cover.w_components.len() || cover.j.is_empty() {
        return Err(stage("cover", "base points do not match the components of W"));
    }
    for (k, &p) in cover.j.iter().enumerate() {
        if cover.w_components.part_of(p) != Some(k) {
            return Err(stage("cover", format!("base point {} is misplaced", x.cell_name(p))));
        }
    }

    let input = pushout_input_from_cover(x, &cover)?;
    let validated = validate_pushout_input(&input).map_err(|e| stage("cover", e.to_string()))?;
    let p = &input.basepoint;
    let pi1_u = abelianization(&object_group_presentation(&validated.input().a, p)?);
    let pi1_v = abelianization(&object_group_presentation(&validated.input().b, p)?);
    if !pi1_u.is_trivial() || !pi1_v.is_trivial() {
        return Err(stage(
            "simply_connected",
            format!("π₁(U) ab = {pi1_u}, π₁(V) ab = {pi1_v}"),
        ));
    }

    let result = pushout_object_group(&validated)?;
    let pushout = abelianization(&result.presentation);
    if pushout != AbelianInvariants::free(1) {
        return Err(stage(
            "pushout",
            format!("pushout abelianization is {pushout}, expected Z"),
        ));
    }

    let punctures = Subcomplex::from_cells([Cell::Vertex(a), Cell::Vertex(b)]);
    let direct = abelianization(&open_pi1(x, &punctures, cover.j[0])?);
    if direct != pushout {
        return Err(stage(
            "direct",
            format!("direct route gives {direct}, pushout gives {pushout}"),
        ));
    }

    match cover.j.len() {
        2 => {}
        n if n >= 3 => {
            return Err(stage(
                "base_points",
                format!("|J| = {n} would make the object group nonabelian, contradicting rank 1"),
            ))
        }
        n => return Err(stage("base_points", format!("|J| = {n}, the curve does not separate"))),
    }

    let cert = certify(&result);
    if !cert.sound || cert.kind == CertificateKind::None {
        return Err(stage("certificate", "no sound nontriviality certificate"));
    }

    report.pipeline = Some(PipelineSummary {
        a: x.vertices()[a].to_string(),
        b: x.vertices()[b].to_string(),
        arc_lengths: [arc_a.edges().count(), arc_b.edges().count()],
        u_cells: cover.u.len(),
        v_cells: cover.v.len(),
        w_cells: cover.w.len(),
        base_points: cover.j.iter().map(|&c| cell_object(x, c).to_string()).collect(),
        pi1_u,
        pi1_v,
        pushout,
        direct,
        f_generators: result.f_generators.len(),
        certificate: cert.kind,
        relators_checked: cert.relators_checked,
    });
    Ok(report)
}
