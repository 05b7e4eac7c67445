//! The Phragmen-Brouwer property: it fails on the circle and holds for
//! sampled instances on the sphere.

use groupoid_jordan::complex::{build_space, ModelName, ModelSpec};
use groupoid_jordan::verify::{cycle_witness, pbp_check, sample_pbp_instances, PbpVerdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [4, 8, 12] {
        let (x, inst) = cycle_witness(n)?;
        let out = pbp_check(&x, &inst)?;
        println!(
            "cycle({n}): D separates {}, E separates {}, D ∪ E separates {} -> {:?}",
            out.d_separates, out.e_separates, out.union_separates, out.verdict
        );
    }
    let x = build_space(&ModelSpec::new(ModelName::GridSphere, 8))?;
    let instances = sample_pbp_instances(&x, 7, 200, 1000)?;
    let mut violated = 0;
    for inst in &instances {
        if pbp_check(&x, inst)?.verdict == PbpVerdict::Violated {
            violated += 1;
        }
    }
    println!(
        "grid_sphere(8): {violated} of {} sampled instances violated",
        instances.len()
    );
    Ok(())
}
