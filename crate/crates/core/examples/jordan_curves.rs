//! Random simple closed curves on grid spheres: each one splits the sphere
//! into exactly two pieces bounded by the curve, and the van Kampen pipeline
//! recovers `Z` for the twice-punctured sphere.
//!
//! ```text
//! cargo run --example jordan_curves -- 16 5
//! ```

use std::time::Instant;

use groupoid_jordan::complex::{build_space, random_simple_cycle, LengthBounds, ModelName, ModelSpec};
use groupoid_jordan::verify::vankampen_jordan_pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(8);
    let count: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);

    let x = build_space(&ModelSpec::new(ModelName::GridSphere, n))?;
    println!(
        "grid_sphere({n}): V={} E={} F={}",
        x.vertices().len(),
        x.edges().len(),
        x.faces().len()
    );
    for seed in 0..count {
        let start = Instant::now();
        let curve = random_simple_cycle(&x, seed, LengthBounds::new(4, 4 * n), 1000)?;
        let report = vankampen_jordan_pipeline(&x, &curve)?;
        let p = report.pipeline.as_ref().expect("pipeline ran");
        println!(
            "seed {seed}: length {:>3}, parts {:?}, boundaries = C: {:?}, |J| = {}, pushout {}, direct {}, {:?} ({:.2?})",
            report.curve_length,
            report.component_sizes,
            report.boundaries_equal_curve,
            p.base_points.len(),
            p.pushout,
            p.direct,
            p.certificate,
            start.elapsed()
        );
    }
    Ok(())
}
