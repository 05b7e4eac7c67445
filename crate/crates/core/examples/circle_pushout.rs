//! The circle glued from two arcs: a pushout of groupoids over the two end
//! points gives a free group on one generator.

use groupoid_jordan::analysis::abelianization;
use groupoid_jordan::groupoid::{render_word, Arrow, GroupWord, GroupoidPresentation, ObjectId};
use groupoid_jordan::pushout::{
    certify, groupoid_route_invariants, pushout_object_group, validate_pushout_input, PushoutInput,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j = vec![ObjectId::new("p"), ObjectId::new("q")];
    let input = PushoutInput {
        base_points: j.clone(),
        basepoint: j[0].clone(),
        c: GroupoidPresentation::free(j.clone(), vec![])?,
        a: GroupoidPresentation::free(j.clone(), vec![Arrow::new("a", "p", "q")])?,
        b: GroupoidPresentation::free(j, vec![Arrow::new("b", "p", "q")])?,
        i: Default::default(),
        j: Default::default(),
    };
    let v = validate_pushout_input(&input)?;
    let r = pushout_object_group(&v)?;
    println!("G(p) = {}", r.presentation);
    for f in &r.f_generators {
        println!(
            "  {} = {}",
            f.name,
            render_word(&GroupWord(f.definition.letters.clone()))
        );
    }
    println!(
        "abelianization: {} (groupoid route {})",
        abelianization(&r.presentation),
        groupoid_route_invariants(&v)?
    );
    let cert = certify(&r);
    println!("certificate: {:?}, sound {}", cert.kind, cert.sound);
    Ok(())
}
