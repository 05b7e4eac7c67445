//! Fundamental groups of the built-in cell complexes.

use groupoid_jordan::analysis::{abelianization, tietze_simplify};
use groupoid_jordan::complex::{build_space, fundamental_groupoid_presentation, ModelName, ModelSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    for name in [
        ModelName::GridSphere,
        ModelName::Disk,
        ModelName::Annulus,
        ModelName::Cycle,
        ModelName::Interval,
    ] {
        let x = build_space(&ModelSpec::new(name, n))?;
        let p = x.vertices()[0].clone();
        let g = fundamental_groupoid_presentation(&x, std::slice::from_ref(&p))?.object_group(&p)?;
        println!(
            "{name:<12} χ = {:>2}  {} generators, {} relators  ->  {}  ab {}",
            x.euler_characteristic(),
            g.generators().len(),
            g.relators().len(),
            tietze_simplify(&g, 1000),
            abelianization(&g)
        );
    }
    Ok(())
}
