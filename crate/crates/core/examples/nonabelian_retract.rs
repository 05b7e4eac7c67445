//! Three base points force a nonabelian object group: the retraction onto
//! the free group on the f generators keeps a commutator alive.

use groupoid_jordan::groupoid::{render_word, Arrow, GroupWord, GroupoidPresentation, Letter, ObjectId};
use groupoid_jordan::pushout::{certify, pushout_object_group, retraction_rho, validate_pushout_input, PushoutInput};

fn tree(prefix: &str, j: &[ObjectId]) -> Result<GroupoidPresentation, Box<dyn std::error::Error>> {
    let arrows = j[1..]
        .iter()
        .map(|x| Arrow::new(format!("{prefix}{x}"), j[0].clone(), x.clone()))
        .collect();
    Ok(GroupoidPresentation::free(j.to_vec(), arrows)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j: Vec<ObjectId> = ["p", "x", "y"].into_iter().map(ObjectId::new).collect();
    // a loop in A at p with a^3 = 1, so G(p) is Z/3 * F_2
    let mut a = tree("a", &j)?;
    let mut arrows = a.arrows().to_vec();
    arrows.push(Arrow::new("g", "p", "p"));
    let rel = groupoid_jordan::groupoid::Word::new(j[0].clone(), vec![Letter::pos("g"); 3]);
    a = GroupoidPresentation::new(j.clone(), arrows, vec![rel])?;
    let input = PushoutInput {
        base_points: j.clone(),
        basepoint: j[0].clone(),
        c: GroupoidPresentation::free(j.clone(), vec![])?,
        a,
        b: tree("b", &j)?,
        i: Default::default(),
        j: Default::default(),
    };
    let r = pushout_object_group(&validate_pushout_input(&input)?)?;
    println!("G(p) = {}", r.presentation);
    let cert = certify(&r);
    for (w, img) in cert.witnesses.iter().zip(&cert.rho_images) {
        println!("  ρ({}) = {}", render_word(w), render_word(img));
    }
    println!("certificate: {:?}", cert.kind);
    let g = GroupWord(vec![Letter::pos("g")]);
    println!("ρ(g) = '{}'", render_word(&retraction_rho(&r, &g)?));
    Ok(())
}
