use std::collections::HashSet;

use crate::groupoid::{GroupPresentation, GroupWord, Ident, Letter, Sign};

/// Applies sound Tietze moves, at most `budget` of them:
///
/// 1. replace a relator by its cyclic free reduction,
/// 2. delete an empty relator,
/// 3. eliminate a generator occurring exactly once in some relator,
///    substituting its solution into every other relator.
///
/// Elimination picks the shortest eligible relator (lowest index on ties).
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    let mut gens: Vec<Ident> = p.generators().to_vec();
    let mut rels: Vec<GroupWord> = p.relators().to_vec();
    let mut steps = 0;

    while steps < budget {
        if let Some(i) = rels.iter().position(|r| *r != r.cyclically_reduced()) {
            rels[i] = rels[i].cyclically_reduced();
            steps += 1;
            continue;
        }
        if let Some(i) = rels.iter().position(GroupWord::is_empty) {
            rels.remove(i);
            steps += 1;
            continue;
        }
        match find_elimination(&rels) {
            Some((ri, pos)) => {
                let r = rels.remove(ri);
                let g = r.letters()[pos].clone();
                let value = solve_for(&r, pos);
                rels = rels.iter().map(|w| substitute(w, &g.id, &value)).collect();
                gens.retain(|x| *x != g.id);
                steps += 1;
            }
            None => break,
        }
    }
    GroupPresentation::from_parts_unchecked(gens, rels)
}

/// (relator index, letter position) of the generator to eliminate.
fn find_elimination(rels: &[GroupWord]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (ri, r) in rels.iter().enumerate() {
        if best.is_some_and(|(len, _, _)| len <= r.len()) {
            continue;
        }
        let letters = r.letters();
        let mut counts: Vec<(&Ident, usize)> = Vec::new();
        for l in letters {
            match counts.iter_mut().find(|(id, _)| *id == &l.id) {
                Some((_, n)) => *n += 1,
                None => counts.push((&l.id, 1)),
            }
        }
        let once: HashSet<&Ident> = counts.iter().filter(|(_, n)| *n == 1).map(|(id, _)| *id).collect();
        if let Some(pos) = letters.iter().position(|l| once.contains(&l.id)) {
            best = Some((r.len(), ri, pos));
        }
    }
    best.map(|(_, ri, pos)| (ri, pos))
}

/// From `u g^e v = 1` solve for `g`: `u^-1 v^-1` when e = +1, `v u` when
/// e = -1.
fn solve_for(r: &GroupWord, pos: usize) -> GroupWord {
    let letters = r.letters();
    let u = GroupWord(letters[..pos].to_vec());
    let v = GroupWord(letters[pos + 1..].to_vec());
    match letters[pos].sign {
        Sign::Pos => u.inverse().then(&v.inverse()).reduced(),
        Sign::Neg => v.then(&u).reduced(),
    }
}

fn substitute(w: &GroupWord, g: &Ident, value: &GroupWord) -> GroupWord {
    let inv = value.inverse();
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in w.letters() {
        if &l.id == g {
            match l.sign {
                Sign::Pos => out.extend(value.letters().iter().cloned()),
                Sign::Neg => out.extend(inv.letters().iter().cloned()),
            }
        } else {
            out.push(l.clone());
        }
    }
    GroupWord(out).reduced()
}
