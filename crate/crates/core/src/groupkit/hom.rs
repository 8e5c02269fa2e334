use serde::{Deserialize, Serialize};

use super::group::{Elem, FinGroup};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A map of underlying sets between two finite groups; [`GroupHom::check`]
/// decides whether it is a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupHom {
    pub map: Vec<Elem>,
}

impl GroupHom {
    pub fn new(map: Vec<Elem>) -> Self {
        GroupHom { map }
    }

    pub fn identity(g: &FinGroup) -> Self {
        GroupHom::new(g.elements().collect())
    }

    pub fn trivial(source: &FinGroup) -> Self {
        GroupHom::new(vec![0; source.order()])
    }

    /// `x ↦ a·x·a⁻¹`
    pub fn conjugation(g: &FinGroup, a: Elem) -> Self {
        GroupHom::new(g.elements().map(|x| g.conj(a, x)).collect())
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    /// `self ∘ first`
    pub fn after(&self, first: &GroupHom) -> GroupHom {
        GroupHom::new(first.map.iter().map(|&a| self.map[a]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &a)| i == a)
    }

    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&a| a == 0)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|a| seen.insert(*a))
    }

    pub fn is_bijective(&self, target: &FinGroup) -> bool {
        self.map.len() == target.order() && self.is_injective()
    }

    pub fn check(&self, source: &FinGroup, target: &FinGroup) -> Result<()> {
        if self.map.len() != source.order() {
            return Err(Error::NotHomomorphism(format!(
                "map has {} entries for a group of order {}",
                self.map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = self.map.iter().find(|&&a| a >= target.order()) {
            return Err(Error::NotHomomorphism(format!("image {bad} out of range")));
        }
        for a in source.elements() {
            for b in source.elements() {
                if self.map[source.mul(a, b)] != target.mul(self.map[a], self.map[b]) {
                    return Err(Error::NotHomomorphism(format!(
                        "f({a}·{b}) ≠ f({a})·f({b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_hom(&self, source: &FinGroup, target: &FinGroup) -> bool {
        self.check(source, target).is_ok()
    }
}

/// Extends an assignment of images to `gens` along the right Cayley graph;
/// `None` if some edge is inconsistent.
fn extend_from_generators(
    source: &FinGroup,
    target: &FinGroup,
    gens: &[Elem],
    images: &[Elem],
) -> Option<GroupHom> {
    let mut map = vec![usize::MAX; source.order()];
    map[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let fy = target.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(GroupHom::new(map))
}

/// All homomorphisms `source → target`, sorted by their element maps.
///
/// Backtracks over images of a greedy generating set; an image must have order
/// dividing the generator's order, and the Cayley-graph extension must be
/// consistent on every edge.
pub fn hom_set(source: &FinGroup, target: &FinGroup, budget: Budget) -> Result<Vec<GroupHom>> {
    let gens = source.greedy_generators();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let ord = source.element_order(g);
            target
                .elements()
                .filter(|&b| ord.is_multiple_of(target.element_order(b)))
                .collect()
        })
        .collect();
    let mut meter = budget.meter("hom_set");
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    let mut idx = vec![0usize; gens.len()];
    // odometer over the candidate lists
    'outer: loop {
        meter.tick()?;
        for (k, &i) in idx.iter().enumerate() {
            images[k] = candidates[k][i];
        }
        if let Some(h) = extend_from_generators(source, target, &gens, &images) {
            debug_assert!(h.is_hom(source, target));
            out.push(h);
        }
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library::*;

    fn count(g: &FinGroup, h: &FinGroup) -> usize {
        hom_set(g, h, Budget::DEFAULT).unwrap().len()
    }

    #[test]
    fn spec_hom_counts() {
        assert_eq!(count(&cyclic(2), &cyclic(2)), 2);
        assert_eq!(count(&cyclic(2), &s3()), 4);
        assert_eq!(count(&s3(), &cyclic(3)), 1);
        assert_eq!(count(&s3(), &s3()), 10);
        assert_eq!(count(&trivial(), &s3()), 1);
        assert_eq!(count(&cyclic(4), &cyclic(2)), 2);
        assert_eq!(count(&klein(), &klein()), 16);
    }

    #[test]
    fn hom_set_elements_are_homs_and_sorted() {
        let src = dihedral(4);
        let tgt = s3();
        let homs = hom_set(&src, &tgt, Budget::DEFAULT).unwrap();
        assert!(homs.windows(2).all(|w| w[0] < w[1]));
        assert!(homs.iter().all(|h| h.is_hom(&src, &tgt)));
    }

    #[test]
    fn budget_is_enforced() {
        let err = hom_set(&klein(), &s3(), Budget(1)).unwrap_err();
        assert!(err.is_budget());
    }
}
