//! Arcs never separate the sphere. On an interval they do, and halving the
//! arc narrows the separator down to one vertex.

use groupoid_jordan::complex::{build_space, random_arc, subcomplex_from_path, LengthBounds, ModelName, ModelSpec};
use groupoid_jordan::verify::{arc_complement_connected, bisection_separating_subarc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sphere = build_space(&ModelSpec::new(ModelName::GridSphere, 6))?;
    for seed in 0..5 {
        let arc = random_arc(&sphere, seed, LengthBounds::new(1, 18), 1000)?;
        println!(
            "sphere arc {seed}: {} edges, complement connected: {}",
            arc.edges().count(),
            arc_complement_connected(&sphere, &arc)?
        );
    }
    let n = 16;
    let line = build_space(&ModelSpec::new(ModelName::Interval, n))?;
    let vs: Vec<usize> = (3..=13).collect();
    let es: Vec<usize> = (3..13).collect();
    let arc = subcomplex_from_path(&vs, &es);
    let found = bisection_separating_subarc(&line, &arc, 0, n)?.expect("the arc separates the ends");
    let names: Vec<String> = found.vertices.iter().map(|&v| line.vertices()[v].to_string()).collect();
    println!(
        "interval({n}): arc v3..v13 narrows to {names:?} after {} halvings",
        found.depth
    );
    Ok(())
}
