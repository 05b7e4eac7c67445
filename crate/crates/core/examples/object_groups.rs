//! Object groups of a connected groupoid: contract a spanning tree and read
//! off one generator per remaining arrow.

use groupoid_jordan::analysis::abelianization;
use groupoid_jordan::groupoid::{
    object_group_presentation, parse_group_word, render_word, retract_arrow, spanning_tree, Arrow, GroupWord,
    GroupoidPresentation, ObjectId, Word,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let objs: Vec<ObjectId> = ["p", "q", "r"].into_iter().map(ObjectId::new).collect();
    let arrows = vec![
        Arrow::new("s", "p", "q"),
        Arrow::new("t", "q", "r"),
        Arrow::new("u", "r", "p"),
        Arrow::new("l", "q", "q"),
    ];
    // l^2 = 1 at q
    let rel = Word::new(ObjectId::new("q"), parse_group_word("l l")?.letters().to_vec());
    let g = GroupoidPresentation::new(objs.clone(), arrows, vec![rel])?;
    println!("components: {:?}", g.connected_components());
    for p in &objs {
        let tree = spanning_tree(&g, p)?;
        let group = object_group_presentation(&g, p)?;
        println!("G({p}) = {group}, abelianized {}", abelianization(&group));
        let u = Word::new(ObjectId::new("r"), parse_group_word("u")?.letters().to_vec());
        let loop_u = retract_arrow(&g, &tree, &u)?;
        println!("  u retracts to {}", render_word(&GroupWord(loop_u.letters)));
    }
    Ok(())
}
