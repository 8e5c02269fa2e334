//! Two-dimensional colimits of groups built at the level of presentations
//! and checked by counting homomorphisms into finite groups.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groupkit::{count_homs, eval_word, letter_inv, list_homs, Elem, FinGroup, GroupPresentation, Word};
use crate::report::ValidationReport;

/// A homomorphism between presented groups given by generator images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedMap {
    pub source: GroupPresentation,
    pub target: GroupPresentation,
    /// Image of each source generator, as a word over the target generators.
    pub images: Vec<Word>,
}

impl PresentedMap {
    pub fn new(source: GroupPresentation, target: GroupPresentation, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.generator_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} images for {} source generators",
                images.len(),
                source.generator_count()
            )));
        }
        for w in &images {
            if let Some(g) = w.max_generator().filter(|&g| g >= target.generator_count()) {
                return Err(Error::UnboundGenerator(g));
            }
        }
        Ok(PresentedMap { source, target, images })
    }

    /// Every generator goes to the empty word.
    pub fn trivial(source: GroupPresentation, target: GroupPresentation) -> Self {
        let images = vec![Word::empty(); source.generator_count()];
        PresentedMap { source, target, images }
    }

    /// `k∘self` on the source generators, for an assignment `k` of the
    /// target generators.
    pub fn pull(&self, k: &[Elem], group: &FinGroup) -> Vec<Elem> {
        self.images.iter().map(|w| eval_word(w, k, group).expect("bound")).collect()
    }

    /// For every homomorphism out of the target into `k`, each source
    /// relator must evaluate to the identity.
    pub fn check_on(&self, k: &FinGroup, budget: Budget) -> Result<ValidationReport> {
        let mut r = ValidationReport::new("presented map");
        for (i, assignment) in list_homs(&self.target, k, budget)?.iter().enumerate() {
            let pulled = self.pull(assignment, k);
            for (j, rel) in self.source.relators().iter().enumerate() {
                let v = eval_word(rel, &pulled, k)?;
                r.check(v == 0, "relator", &[i, j], || {
                    format!("source relator {} is not killed under target hom {assignment:?}", rel.render(self.source.generators()))
                });
            }
        }
        Ok(r)
    }

    fn same_ends(&self, other: &PresentedMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch("maps are not parallel".into()));
        }
        Ok(())
    }
}

/// A fresh generator name that had to be changed to avoid a collision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Renaming {
    pub requested: String,
    pub assigned: String,
}

/// A presentation together with the generators added to build it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub presentation: GroupPresentation,
    pub added: Vec<String>,
    pub renamings: Vec<Renaming>,
}

impl Construction {
    /// The stable letter of a coinserter.
    pub fn stable_letter(&self) -> &str {
        &self.added[0]
    }
}

/// Uses `requested` unless taken, and otherwise the first free `t0, t1, …`.
fn fresh(taken: &mut Vec<String>, requested: &str, renamings: &mut Vec<Renaming>) -> String {
    let name = if taken.iter().any(|g| g == requested) {
        let assigned = (0..).map(|i| format!("t{i}")).find(|n| !taken.contains(n)).expect("unbounded");
        renamings.push(Renaming { requested: requested.to_string(), assigned: assigned.clone() });
        assigned
    } else {
        requested.to_string()
    };
    taken.push(name.clone());
    name
}

/// `t w t⁻¹ v⁻¹` with `t` the generator at index `t`.
fn conjugation_relator(t: usize, w: &Word, v: &Word) -> Word {
    Word::product(&[&Word::generator(t), w, &Word::from_letters(&[letter_inv(t)]), &v.inverse()])
}

/// `⟨ target, t | target relators, t f(a) t⁻¹ g(a)⁻¹ ⟩` for `f, g: H ⇉ B`.
pub fn coinserter_presentation(f: &PresentedMap, g: &PresentedMap) -> Result<Construction> {
    f.same_ends(g)?;
    let b = &f.target;
    let mut names = b.generators().to_vec();
    let mut renamings = Vec::new();
    let t = fresh(&mut names, "t", &mut renamings);
    let idx = b.generator_count();
    let mut relators = b.relators().to_vec();
    relators.extend(f.images.iter().zip(&g.images).map(|(x, y)| conjugation_relator(idx, x, y)));
    Ok(Construction { presentation: GroupPresentation::new(names, relators)?, added: vec![t], renamings })
}

/// Adds the relator `α β⁻¹`.
pub fn coequifier_presentation(b: &GroupPresentation, alpha: &Word, beta: &Word) -> Result<GroupPresentation> {
    let mut relators = b.relators().to_vec();
    relators.push(alpha.concat(&beta.inverse()));
    GroupPresentation::new(b.generators().to_vec(), relators)
}

/// Adds the relator `α`.
pub fn coidentifier_presentation(b: &GroupPresentation, alpha: &Word) -> Result<GroupPresentation> {
    coequifier_presentation(b, alpha, &Word::empty())
}

/// `B` with one new generator per letter, each commuting with every
/// generator of `B`.
pub fn tensor_by_free_group_presentation(letters: &[String], b: &GroupPresentation) -> Result<Construction> {
    let mut names = b.generators().to_vec();
    let mut renamings = Vec::new();
    let mut added = Vec::new();
    let mut relators = b.relators().to_vec();
    for (i, x) in letters.iter().enumerate() {
        added.push(fresh(&mut names, x, &mut renamings));
        let t = b.generator_count() + i;
        for g in 0..b.generator_count() {
            let w = Word::generator(g);
            relators.push(conjugation_relator(t, &w, &w));
        }
    }
    Ok(Construction { presentation: GroupPresentation::new(names, relators)?, added, renamings })
}

/// Both sides of a hom-count identity at one test group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomCount {
    pub group: String,
    pub lhs: u64,
    pub rhs: u64,
}

impl HomCount {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `|Hom(P, K)|` against `#{(k, β) : β k(f(a)) β⁻¹ = k(g(a)) for all a}`.
pub fn verify_coinserter_by_homcount(
    p: &GroupPresentation,
    f: &PresentedMap,
    g: &PresentedMap,
    k: &FinGroup,
    budget: Budget,
) -> Result<(u64, u64)> {
    f.same_ends(g)?;
    let lhs = count_homs(p, k, budget)?;
    let mut rhs = 0;
    for assignment in list_homs(&f.target, k, budget)? {
        let (fa, ga) = (f.pull(&assignment, k), g.pull(&assignment, k));
        rhs += k.elements().filter(|&b| fa.iter().zip(&ga).all(|(&x, &y)| k.conj(b, x) == y)).count() as u64;
    }
    Ok((lhs, rhs))
}

/// `|Hom(P, K)|` against `#{k: B → K : k(α) = k(β)}`.
pub fn verify_coequifier_by_homcount(
    p: &GroupPresentation,
    b: &GroupPresentation,
    alpha: &Word,
    beta: &Word,
    k: &FinGroup,
    budget: Budget,
) -> Result<(u64, u64)> {
    let lhs = count_homs(p, k, budget)?;
    let mut rhs = 0;
    for assignment in list_homs(b, k, budget)? {
        if eval_word(alpha, &assignment, k)? == eval_word(beta, &assignment, k)? {
            rhs += 1;
        }
    }
    Ok((lhs, rhs))
}

pub fn verify_coidentifier_by_homcount(
    p: &GroupPresentation,
    b: &GroupPresentation,
    alpha: &Word,
    k: &FinGroup,
    budget: Budget,
) -> Result<(u64, u64)> {
    verify_coequifier_by_homcount(p, b, alpha, &Word::empty(), k, budget)
}

/// `|Hom(P, K)|` against `Σ_k |C_K(im k)|^n` for the tensor of `B` by the
/// free group on `n` letters.
pub fn verify_tensor_by_homcount(
    p: &GroupPresentation,
    letters: usize,
    b: &GroupPresentation,
    k: &FinGroup,
    budget: Budget,
) -> Result<(u64, u64)> {
    let lhs = count_homs(p, k, budget)?;
    let mut rhs = 0u64;
    for assignment in list_homs(b, k, budget)? {
        let c = k.elements().filter(|&z| k.centralizes(z, &assignment)).count() as u64;
        rhs += c.pow(letters as u32);
    }
    Ok((lhs, rhs))
}

/// Runs `check` on every panel group in parallel; results keep panel order.
pub fn verify_on_panel<F>(panel: &[(String, FinGroup)], check: F) -> Result<Vec<HomCount>>
where
    F: Fn(&FinGroup) -> Result<(u64, u64)> + Sync,
{
    panel
        .par_iter()
        .map(|(name, k)| check(k).map(|(lhs, rhs)| HomCount { group: name.clone(), lhs, rhs }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;

    fn b2() -> GroupPresentation {
        GroupPresentation::from_letters(&["b"], &[&[1, 1]]).unwrap()
    }

    #[test]
    fn coinserter_of_trivial_maps_adds_a_free_letter() {
        let f = PresentedMap::trivial(GroupPresentation::free(&[]), b2());
        let c = coinserter_presentation(&f, &f).unwrap();
        assert_eq!(c.presentation.render(), "⟨ b, t | b^2 ⟩");
        assert_eq!(c.stable_letter(), "t");
        let z2 = library::cyclic(2);
        assert_eq!(verify_coinserter_by_homcount(&c.presentation, &f, &f, &z2, Budget::DEFAULT).unwrap(), (4, 4));
    }

    #[test]
    fn colliding_letters_are_renamed() {
        let b = GroupPresentation::free(&["t", "t0"]);
        let f = PresentedMap::trivial(GroupPresentation::free(&[]), b);
        let c = coinserter_presentation(&f, &f).unwrap();
        assert_eq!(c.stable_letter(), "t1");
        assert_eq!(c.renamings, vec![Renaming { requested: "t".into(), assigned: "t1".into() }]);
    }

    #[test]
    fn tensor_by_one_letter() {
        let c = tensor_by_free_group_presentation(&["t".into()], &b2()).unwrap();
        assert_eq!(c.presentation.relators().len(), 2);
        let z2 = library::cyclic(2);
        assert_eq!(count_homs(&c.presentation, &z2, Budget::DEFAULT).unwrap(), 4);
        assert_eq!(verify_tensor_by_homcount(&c.presentation, 1, &b2(), &library::s3(), Budget::DEFAULT).unwrap(), (12, 12));
        let same = tensor_by_free_group_presentation(&[], &b2()).unwrap();
        assert_eq!(same.presentation, b2());
    }

    #[test]
    fn coidentifier_of_a_generator() {
        let s3 = GroupPresentation::s3();
        let p = coidentifier_presentation(&s3, &Word::generator(0)).unwrap();
        assert_eq!(p.relators().last().unwrap(), &Word::generator(0));
        let k = library::s3();
        assert_eq!(verify_coidentifier_by_homcount(&p, &s3, &Word::generator(0), &k, Budget::DEFAULT).unwrap(), (1, 1));
    }

    #[test]
    fn non_maps_are_caught_on_a_test_group() {
        let z2 = GroupPresentation::cyclic(2);
        let z3 = GroupPresentation::cyclic(3);
        let f = PresentedMap::new(z2, z3, vec![Word::generator(0)]).unwrap();
        assert!(!f.check_on(&library::cyclic(3), Budget::DEFAULT).unwrap().is_valid());
    }
}
