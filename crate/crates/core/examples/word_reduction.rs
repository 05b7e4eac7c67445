//! Free reduction of group words and composition of groupoid words.

use groupoid_jordan::groupoid::{
    parse_group_word, render_word, Arrow, GroupWord, GroupoidPresentation, ObjectId, Word,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["a b b^-1 a^-1 c", "x y x^-1 x y^-1", "a^-1 a"] {
        let w = parse_group_word(text)?;
        println!("{text:<20} -> {}", render_word(&w.reduced()));
    }
    let a = parse_group_word("a b")?;
    let b = parse_group_word("b^-1 c")?;
    println!(
        "[ab, b^-1 c] = {}",
        render_word(&GroupWord::commutator(&a, &b).reduced())
    );

    // a groupoid with arrows g: x -> y and h: y -> x
    let x = ObjectId::new("x");
    let y = ObjectId::new("y");
    let g = GroupoidPresentation::free(
        vec![x.clone(), y.clone()],
        vec![Arrow::new("g", "x", "y"), Arrow::new("h", "y", "x")],
    )?;
    let gh = Word::new(x.clone(), parse_group_word("g h")?.letters().to_vec());
    println!("g h ends at {}", g.end_of(&gh)?);
    let back = gh.then(&gh.inverse(x.clone()));
    println!("(g h)(g h)^-1 reduces to {} letters", g.reduce_word(&back)?.len());
    let bad = Word::new(y, parse_group_word("g")?.letters().to_vec());
    println!("g starting at y: {}", g.end_of(&bad).unwrap_err());
    Ok(())
}
