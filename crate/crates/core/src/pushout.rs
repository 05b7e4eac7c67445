//! Object groups of pushouts of groupoids over a base-point set `J`.
//!
//! Given a square `C -> A`, `C -> B` of groupoids over `J` with `C` totally
//! disconnected and `A`, `B` connected, the object group `G(p)` of the
//! pushout is
//!
//! ```text
//! A(p) * B(p) * F  /  ( r(iγ) · f_x · s(jγ)^-1 · f_x^-1 )   for γ a generating loop of C(x)
//! ```
//!
//! where `r`, `s` are the spanning-tree retractions of `A`, `B` at `p` and
//! `F` is free on formal generators `f_x`, `x ∈ J \ {p}`. With left-to-right
//! composition `f_x` stands for `α_x · β_x^-1`, the tree word into `x` in `A`
//! followed by the tree word back out in `B`. The retraction `G(p) -> F`
//! deletes every `A(p)` and `B(p)` letter; it kills each relator above, which
//! certifies that `F` is a retract of `G(p)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::analysis::{abelianization, relator_matrix, smith_normal_form, AbelianInvariants, IntegerMatrix};
use crate::error::{Error, Result};
use crate::groupoid::{
    free_product_tagged, free_reduce, object_group_presentation, rewrite_over_generators, spanning_tree, Arrow,
    GroupPresentation, GroupWord, GroupoidPresentation, Ident, Letter, ObjectId, SpanningTreeData, Word,
};

/// An identity-on-objects morphism given on generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidMorphismData {
    /// Recorded explicitly; must be the identity on `J`. Empty means identity.
    #[serde(default)]
    pub object_map: BTreeMap<ObjectId, ObjectId>,
    pub arrow_map: BTreeMap<String, Word>,
}

impl GroupoidMorphismData {
    pub fn image(&self, arrow: &str) -> Option<&Word> {
        self.arrow_map.get(arrow)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushoutInput {
    #[serde(rename = "J")]
    pub base_points: Vec<ObjectId>,
    #[serde(rename = "p")]
    pub basepoint: ObjectId,
    #[serde(rename = "C")]
    pub c: GroupoidPresentation,
    #[serde(rename = "A")]
    pub a: GroupoidPresentation,
    #[serde(rename = "B")]
    pub b: GroupoidPresentation,
    pub i: GroupoidMorphismData,
    pub j: GroupoidMorphismData,
}

/// Output of [`validate_pushout_input`]: `A` and `B` share no objects
/// outside `J`, and both morphism object maps are written out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedPushout(PushoutInput);

impl ValidatedPushout {
    pub fn input(&self) -> &PushoutInput {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "side", rename_all = "snake_case")]
pub enum GeneratorOrigin {
    /// Non-tree arrow of `A` (by its original id).
    A {
        arrow: String,
    },
    B {
        arrow: String,
    },
    F {
        object: ObjectId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum RelatorOrigin {
    A {
        relation: usize,
    },
    B {
        relation: usize,
    },
    /// The gluing relator of generating loop `gamma` of `C(object)`.
    Gluing {
        object: ObjectId,
        gamma: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FGenerator {
    pub name: String,
    pub object: ObjectId,
    /// `α_x · β_x^-1` as a loop at `p` in the free product `A * B`.
    pub definition: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushoutResult {
    pub basepoint: ObjectId,
    pub presentation: GroupPresentation,
    pub f_generators: Vec<FGenerator>,
    pub tree_a: SpanningTreeData,
    pub tree_b: SpanningTreeData,
    pub generator_origin: Vec<GeneratorOrigin>,
    pub relator_provenance: Vec<RelatorOrigin>,
}

impl PushoutResult {
    pub fn f_names(&self) -> HashSet<Ident> {
        self.f_generators.iter().map(|f| Ident::from(f.name.as_str())).collect()
    }
}

fn check_morphism(
    name: &str,
    m: &GroupoidMorphismData,
    c: &GroupoidPresentation,
    target: &GroupoidPresentation,
    base: &BTreeSet<ObjectId>,
) -> Result<GroupoidMorphismData> {
    let bad = |detail: String| Error::Morphism {
        name: name.to_string(),
        detail,
    };
    for (x, y) in &m.object_map {
        if x != y || !base.contains(x) {
            return Err(bad(format!("object map sends {x} to {y}; expected the identity on J")));
        }
    }
    for key in m.arrow_map.keys() {
        if c.arrow(key).is_none() {
            return Err(bad(format!("image given for unknown arrow `{key}` of C")));
        }
    }
    for gamma in c.arrows() {
        let w = m
            .image(&gamma.id)
            .ok_or_else(|| bad(format!("no image for generator `{}`", gamma.id)))?;
        if w.start != gamma.src {
            return Err(bad(format!(
                "image of `{}` starts at {} not {}",
                gamma.id, w.start, gamma.src
            )));
        }
        let end = target
            .end_of(w)
            .map_err(|e| bad(format!("image of `{}`: {e}", gamma.id)))?;
        if end != gamma.tgt {
            return Err(bad(format!("image of `{}` ends at {end} not {}", gamma.id, gamma.tgt)));
        }
    }
    let mut out = m.clone();
    out.object_map = base.iter().map(|x| (x.clone(), x.clone())).collect();
    Ok(out)
}

fn rename_objects(g: &GroupoidPresentation, map: &HashMap<ObjectId, ObjectId>) -> Result<GroupoidPresentation> {
    let r = |o: &ObjectId| map.get(o).cloned().unwrap_or_else(|| o.clone());
    GroupoidPresentation::new(
        g.objects().iter().map(r).collect(),
        g.arrows()
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                src: r(&a.src),
                tgt: r(&a.tgt),
            })
            .collect(),
        g.relations()
            .iter()
            .map(|w| Word::new(r(&w.start), w.letters.clone()))
            .collect(),
    )
}

/// Checks the hypotheses: `p ∈ J`, `C` has object set `J` and only loops,
/// `A` and `B` are connected and contain `J`, and `i`, `j` send each
/// generating loop of `C` to a loop at the same object.
pub fn validate_pushout_input(input: &PushoutInput) -> Result<ValidatedPushout> {
    let mut base = BTreeSet::new();
    for x in &input.base_points {
        if !base.insert(x.clone()) {
            return Err(Error::Duplicate(x.to_string()));
        }
    }
    if !base.contains(&input.basepoint) {
        return Err(Error::Basepoint(input.basepoint.to_string()));
    }
    let c_objects: BTreeSet<ObjectId> = input.c.objects().iter().cloned().collect();
    if c_objects != base {
        return Err(Error::Shape("C must have object set exactly J".into()));
    }
    if let Some(a) = input.c.arrows().iter().find(|a| !a.is_loop()) {
        return Err(Error::TotalDisconnection {
            arrow: a.id.to_string(),
            src: a.src.to_string(),
            tgt: a.tgt.to_string(),
        });
    }
    for (name, g) in [("A", &input.a), ("B", &input.b)] {
        if let Some(x) = base.iter().find(|x| !g.has_object(x)) {
            return Err(Error::Connectivity(format!("{name} does not contain base point {x}")));
        }
        let parts = g.connected_components();
        if parts.len() > 1 {
            return Err(Error::Connectivity(format!(
                "{name} has {} components; `{}` is not connected to `{}`",
                parts.len(),
                parts[1][0],
                parts[0][0]
            )));
        }
    }

    // keep A and B apart away from J
    let a_objects: HashSet<&ObjectId> = input.a.objects().iter().collect();
    let clash: Vec<ObjectId> = input
        .b
        .objects()
        .iter()
        .filter(|o| !base.contains(*o) && a_objects.contains(o))
        .cloned()
        .collect();
    let (a, b) = if clash.is_empty() {
        (input.a.clone(), input.b.clone())
    } else {
        let taken: HashSet<String> = input
            .a
            .objects()
            .iter()
            .chain(input.b.objects())
            .map(|o| o.to_string())
            .collect();
        let fresh = |o: &ObjectId, tag: &str| {
            let mut s = format!("{o}@{tag}");
            while taken.contains(&s) {
                s.push('\'');
            }
            ObjectId::new(s)
        };
        let ma: HashMap<ObjectId, ObjectId> = clash.iter().map(|o| (o.clone(), fresh(o, "A"))).collect();
        let mb: HashMap<ObjectId, ObjectId> = clash.iter().map(|o| (o.clone(), fresh(o, "B"))).collect();
        (rename_objects(&input.a, &ma)?, rename_objects(&input.b, &mb)?)
    };
    let i = check_morphism("i", &input.i, &input.c, &a, &base)?;
    let j = check_morphism("j", &input.j, &input.c, &b, &base)?;
    Ok(ValidatedPushout(PushoutInput {
        base_points: input.base_points.clone(),
        basepoint: input.basepoint.clone(),
        c: input.c.clone(),
        a,
        b,
        i,
        j,
    }))
}

/// Checks, at the level of abelianizations, that `i` and `j` send the
/// relations of `C` to consequences of the relations of `A` and `B`.
pub fn check_morphism_relations(v: &ValidatedPushout) -> Result<()> {
    let input = v.input();
    for (name, m, g) in [("i", &input.i, &input.a), ("j", &input.j, &input.b)] {
        let tree = spanning_tree(g, &input.basepoint)?;
        let tree_arrows = tree.tree_arrows();
        let target = crate::groupoid::object_group_with_tree(g, &tree);
        let col: HashMap<&Ident, usize> = target.generators().iter().enumerate().map(|(k, x)| (x, k)).collect();
        // exponent vector of r(m(γ)) for each generating loop γ
        let image_vec: HashMap<&Ident, BTreeMap<usize, i64>> = input
            .c
            .arrows()
            .iter()
            .map(|gamma| {
                let w = rewrite_over_generators(&tree_arrows, &m.arrow_map[&*gamma.id].letters);
                let mut v = BTreeMap::new();
                for l in w.letters() {
                    *v.entry(col[&l.id]).or_insert(0) += l.sign.as_i64();
                }
                (&gamma.id, v)
            })
            .collect();
        let base = relator_matrix(&target);
        let extra_rows = input.c.relations().len();
        if extra_rows == 0 {
            continue;
        }
        let mut m2 = IntegerMatrix::zeros(base.rows() + extra_rows, base.cols());
        for r in 0..base.rows() {
            for c in 0..base.cols() {
                let x = base.get(r, c);
                if x != Default::default() {
                    m2.add(r, c, &x);
                }
            }
        }
        for (k, rho) in input.c.relations().iter().enumerate() {
            for l in &rho.letters {
                for (&c, &e) in &image_vec[&l.id] {
                    m2.add(base.rows() + k, c, &num_bigint::BigInt::from(e * l.sign.as_i64()));
                }
            }
        }
        // a finitely generated abelian group is not isomorphic to a proper quotient of itself
        if invariants(&m2, base.cols()) != invariants(&base, base.cols()) {
            return Err(Error::Morphism {
                name: name.to_string(),
                detail: "some relation of C does not map to a consequence of the target's relations".into(),
            });
        }
    }
    Ok(())
}

fn invariants(m: &IntegerMatrix, gens: usize) -> AbelianInvariants {
    use num_traits::{One, Zero};
    let d = smith_normal_form(m);
    let nonzero = d.iter().filter(|x| !x.is_zero()).count();
    AbelianInvariants {
        free_rank: gens - nonzero,
        torsion: d.into_iter().filter(|x| !x.is_zero() && !x.is_one()).collect(),
    }
}

/// The groupoid-level pushout: `A * B` with one relation
/// `reduce(i(γ) · j(γ)^-1)` per generating loop `γ` of `C`.
pub fn groupoid_pushout_presentation(v: &ValidatedPushout) -> Result<GroupoidPresentation> {
    let input = v.input();
    let fp = free_product_tagged(&input.a, "A", &input.b, "B")?;
    let mut relations = fp.presentation.relations().to_vec();
    for gamma in input.c.arrows() {
        let iw = fp.left_word(&input.i.arrow_map[&*gamma.id]);
        let jw = fp.right_word(&input.j.arrow_map[&*gamma.id]);
        relations.push(iw.then(&jw.inverse(gamma.tgt.clone())).reduced());
    }
    GroupoidPresentation::new(
        fp.presentation.objects().to_vec(),
        fp.presentation.arrows().to_vec(),
        relations,
    )
}

/// `G(p)` presented over `A(p)`, `B(p)` and the `f_x`, with breadth-first
/// trees for `A` and `B`.
pub fn pushout_object_group(v: &ValidatedPushout) -> Result<PushoutResult> {
    let p = &v.input().basepoint;
    let tree_a = spanning_tree(&v.input().a, p)?;
    let tree_b = spanning_tree(&v.input().b, p)?;
    pushout_object_group_with_trees(v, tree_a, tree_b)
}

/// As [`pushout_object_group`] with caller-chosen spanning trees of `A` and
/// `B` at `p`.
pub fn pushout_object_group_with_trees(
    v: &ValidatedPushout,
    tree_a: SpanningTreeData,
    tree_b: SpanningTreeData,
) -> Result<PushoutResult> {
    let input = v.input();
    let p = &input.basepoint;
    for (name, tree, g) in [("A", &tree_a, &input.a), ("B", &tree_b, &input.b)] {
        if &tree.basepoint != p || g.objects().iter().any(|o| !tree.contains(o)) {
            return Err(Error::Shape(format!("tree for {name} must span it from {p}")));
        }
    }
    let fp = free_product_tagged(&input.a, "A", &input.b, "B")?;
    let ta = tree_a.tree_arrows();
    let tb = tree_b.tree_arrows();

    let mut generators: Vec<Ident> = Vec::new();
    let mut generator_origin = Vec::new();
    for a in input.a.arrows().iter().filter(|a| !ta.contains(&a.id)) {
        generators.push(fp.left_id(&a.id));
        generator_origin.push(GeneratorOrigin::A {
            arrow: a.id.to_string(),
        });
    }
    for b in input.b.arrows().iter().filter(|b| !tb.contains(&b.id)) {
        generators.push(fp.right_id(&b.id));
        generator_origin.push(GeneratorOrigin::B {
            arrow: b.id.to_string(),
        });
    }
    let mut taken: HashSet<Ident> = generators.iter().cloned().collect();
    let mut f_generators = Vec::new();
    let mut f_name: HashMap<ObjectId, Ident> = HashMap::new();
    for x in input.base_points.iter().filter(|x| *x != p) {
        let mut name = format!("f_{x}");
        while taken.contains(name.as_str()) {
            name.push('\'');
        }
        let id: Ident = Arc::from(name.as_str());
        taken.insert(id.clone());
        generators.push(id.clone());
        generator_origin.push(GeneratorOrigin::F { object: x.clone() });
        let alpha = fp.left_word(&tree_a.tau(x).expect("tree spans A"));
        let beta = fp.right_word(&tree_b.tau(x).expect("tree spans B"));
        f_generators.push(FGenerator {
            name,
            object: x.clone(),
            definition: alpha.then(&beta.inverse(x.clone())),
        });
        f_name.insert(x.clone(), id);
    }

    let over_a = |letters: &[Letter]| -> Vec<Letter> {
        rewrite_over_generators(&ta, letters)
            .0
            .into_iter()
            .map(|l| Letter {
                id: fp.left_id(&l.id),
                sign: l.sign,
            })
            .collect()
    };
    let over_b = |letters: &[Letter]| -> Vec<Letter> {
        rewrite_over_generators(&tb, letters)
            .0
            .into_iter()
            .map(|l| Letter {
                id: fp.right_id(&l.id),
                sign: l.sign,
            })
            .collect()
    };

    let mut relators = Vec::new();
    let mut relator_provenance = Vec::new();
    for (k, rho) in input.a.relations().iter().enumerate() {
        relators.push(GroupWord(over_a(&rho.letters)));
        relator_provenance.push(RelatorOrigin::A { relation: k });
    }
    for (k, rho) in input.b.relations().iter().enumerate() {
        relators.push(GroupWord(over_b(&rho.letters)));
        relator_provenance.push(RelatorOrigin::B { relation: k });
    }
    for gamma in input.c.arrows() {
        let x = &gamma.src;
        let mut w = over_a(&input.i.arrow_map[&*gamma.id].letters);
        let sj = GroupWord(over_b(&input.j.arrow_map[&*gamma.id].letters));
        match f_name.get(x) {
            Some(f) => {
                w.push(Letter::new(&**f, crate::groupoid::Sign::Pos));
                w.extend(sj.inverse().0);
                w.push(Letter::new(&**f, crate::groupoid::Sign::Neg));
            }
            None => w.extend(sj.inverse().0),
        }
        relators.push(GroupWord(free_reduce(&w)));
        relator_provenance.push(RelatorOrigin::Gluing {
            object: x.clone(),
            gamma: gamma.id.to_string(),
        });
    }

    Ok(PushoutResult {
        basepoint: p.clone(),
        presentation: GroupPresentation::from_parts_unchecked(generators, relators),
        f_generators,
        tree_a,
        tree_b,
        generator_origin,
        relator_provenance,
    })
}

/// The retraction `G(p) -> F`: drop `A(p)` and `B(p)` letters, keep the
/// `f_x`, reduce.
pub fn retraction_rho(result: &PushoutResult, w: &GroupWord) -> Result<GroupWord> {
    Retraction::new(result).apply(w)
}

struct Retraction {
    f: HashSet<Ident>,
    all: HashSet<Ident>,
}

impl Retraction {
    fn new(result: &PushoutResult) -> Self {
        Retraction {
            f: result.f_names(),
            all: result.presentation.generators().iter().cloned().collect(),
        }
    }

    fn apply(&self, w: &GroupWord) -> Result<GroupWord> {
        let mut kept = Vec::new();
        for l in w.letters() {
            if self.f.contains(&l.id) {
                kept.push(l.clone());
            } else if !self.all.contains(&l.id) {
                return Err(Error::UnknownGenerator(l.id.to_string()));
            }
        }
        Ok(GroupWord(free_reduce(&kept)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Nontrivial,
    Nonabelian,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// `[f_x]` for a nontrivial certificate, `[f_x, [f_x, f_y]]` for a
    /// nonabelian one.
    pub witnesses: Vec<GroupWord>,
    /// Reduced images of the witnesses under the retraction.
    pub rho_images: Vec<GroupWord>,
    /// Relators mechanically checked to lie in the kernel of the retraction.
    pub relators_checked: usize,
    pub sound: bool,
}

/// Certificates that `G(p)` is nontrivial (`|J| ≥ 2`) or nonabelian
/// (`|J| ≥ 3`), backed by the retraction onto `F`.
pub fn certify(result: &PushoutResult) -> Certificate {
    let rho = Retraction::new(result);
    let mut sound = true;
    for r in result.presentation.relators() {
        match rho.apply(r) {
            Ok(img) if img.is_empty() => {}
            _ => sound = false,
        }
    }
    let relators_checked = result.presentation.relators().len();
    let f: Vec<GroupWord> = result
        .f_generators
        .iter()
        .map(|g| GroupWord(vec![Letter::pos(&g.name)]))
        .collect();
    let mut witnesses = Vec::new();
    if let Some(fx) = f.first() {
        witnesses.push(fx.clone());
    }
    if f.len() >= 2 {
        witnesses.push(GroupWord::commutator(&f[0], &f[1]).reduced());
    }
    let rho_images: Vec<GroupWord> = witnesses
        .iter()
        .map(|w| rho.apply(w).expect("witness uses result generators"))
        .collect();
    let kind = if !sound {
        CertificateKind::None
    } else if rho_images.len() >= 2 && !rho_images[1].is_empty() {
        CertificateKind::Nonabelian
    } else if rho_images.first().is_some_and(|w| !w.is_empty()) {
        CertificateKind::Nontrivial
    } else {
        CertificateKind::None
    };
    Certificate {
        kind,
        witnesses,
        rho_images,
        relators_checked,
        sound,
    }
}

/// Abelianization of `G(p)` along the groupoid route: pushout of groupoids,
/// then spanning-tree extraction at `p`.
pub fn groupoid_route_invariants(v: &ValidatedPushout) -> Result<AbelianInvariants> {
    let g = groupoid_pushout_presentation(v)?;
    Ok(abelianization(&object_group_presentation(&g, &v.input().basepoint)?))
}
