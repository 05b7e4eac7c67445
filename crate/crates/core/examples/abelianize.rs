//! Abelian invariants of finitely presented groups through the Smith normal
//! form of the relator matrix.

use groupoid_jordan::analysis::{
    abelianization, no_z_retract_sufficient, relator_matrix, smith_normal_form, tietze_simplify,
};
use groupoid_jordan::groupoid::{parse_group_word, GroupPresentation};

fn group(gens: &[&str], rels: &[&str]) -> Result<GroupPresentation, Box<dyn std::error::Error>> {
    let rels = rels
        .iter()
        .map(|r| parse_group_word(r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupPresentation::new(gens.to_vec(), rels)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("Klein bottle", group(&["a", "b"], &["a b a b^-1"])?),
        ("torus", group(&["a", "b"], &["a b a^-1 b^-1"])?),
        ("Z/6", group(&["x", "y"], &["x x", "y y y", "x y x^-1 y^-1"])?),
        ("trivial", group(&["a", "b"], &["a b", "a b b"])?),
    ];
    for (name, p) in &cases {
        let snf = smith_normal_form(&relator_matrix(p));
        let simple = tietze_simplify(p, 100);
        println!(
            "{name:<13} {p}  SNF {snf:?}  ab {}  simplified {simple}  no Z retract: {:?}",
            abelianization(p),
            no_z_retract_sufficient(p)
        );
    }
    Ok(())
}
