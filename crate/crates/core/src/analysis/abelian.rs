use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::snf::{smith_normal_form, IntegerMatrix};
use crate::groupoid::{GroupPresentation, Ident};

/// `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | t_2 | ... | t_k`, all `t_i ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(with = "crate::serde_bigint::vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relator_matrix(p: &GroupPresentation) -> IntegerMatrix {
    let col: HashMap<&Ident, usize> = p.generators().iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut m = IntegerMatrix::zeros(p.relators().len(), p.generators().len());
    for (r, w) in p.relators().iter().enumerate() {
        for l in w.letters() {
            m.add(r, col[&l.id], &BigInt::from(l.sign.as_i64()));
        }
    }
    m
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let d = smith_normal_form(&relator_matrix(p));
    let nonzero = d.iter().filter(|x| !x.is_zero()).count();
    AbelianInvariants {
        free_rank: p.generators().len() - nonzero,
        torsion: d.into_iter().filter(|x| !x.is_zero() && !x.is_one()).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RetractVerdict {
    CertifiedNoZRetract,
    Inconclusive,
}

/// One-sided test: a retraction onto `Z` would split off a `Z` summand of
/// the abelianization, so free rank 0 rules it out. Never claims a retract
/// exists.
pub fn no_z_retract_sufficient(p: &GroupPresentation) -> RetractVerdict {
    if abelianization(p).free_rank == 0 {
        RetractVerdict::CertifiedNoZRetract
    } else {
        RetractVerdict::Inconclusive
    }
}
