use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::{Elem, FinGroup};
use super::word::{eval_word, free_reduce, letter, letter_inv, Letter, Word};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Generators plus freely reduced, nonempty relators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl TryFrom<PresentationRepr> for GroupPresentation {
    type Error = Error;
    fn try_from(r: PresentationRepr) -> Result<Self> {
        GroupPresentation::new(r.generators, r.relators)
    }
}

impl From<GroupPresentation> for PresentationRepr {
    fn from(p: GroupPresentation) -> Self {
        PresentationRepr {
            generators: p.generators,
            relators: p.relators,
        }
    }
}

impl GroupPresentation {
    /// Reduces every relator and drops the ones that become empty.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generators.len();
        let mut kept = Vec::with_capacity(relators.len());
        for r in relators {
            let r = free_reduce(r.letters());
            if let Some(g) = r.max_generator() {
                if g >= n {
                    return Err(Error::UnboundGenerator(g));
                }
            }
            if !r.is_empty() {
                kept.push(r);
            }
        }
        Ok(GroupPresentation {
            generators,
            relators: kept,
        })
    }

    pub fn from_letters(generators: &[&str], relators: &[&[Letter]]) -> Result<Self> {
        GroupPresentation::new(
            generators.iter().map(|s| s.to_string()).collect(),
            relators.iter().map(|r| free_reduce(r)).collect(),
        )
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Plain-text form `⟨ a, b | a^2, b^3 ⟩`.
    pub fn render(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| r.render(&self.generators)).collect();
        if rels.is_empty() {
            format!("⟨ {} ⟩", self.generators.join(", "))
        } else {
            format!("⟨ {} | {} ⟩", self.generators.join(", "), rels.join(", "))
        }
    }

    /// One generator per element and one relator `g_a g_b g_{ab}⁻¹` per
    /// table entry.
    pub fn of_table(q: &FinGroup) -> Self {
        let generators = q.elements().map(|a| format!("g{a}")).collect();
        let mut relators = Vec::new();
        for a in q.elements() {
            for b in q.elements() {
                relators.push(free_reduce(&[letter(a), letter(b), letter_inv(q.mul(a, b))]));
            }
        }
        GroupPresentation::new(generators, relators).expect("table presentation")
    }

    /// ⟨ a | aⁿ ⟩
    pub fn cyclic(n: usize) -> Self {
        GroupPresentation::new(vec!["a".into()], vec![Word::generator(0).power(n)]).expect("cyclic")
    }

    /// ⟨ x, y | x², y³, (xy)² ⟩
    pub fn s3() -> Self {
        GroupPresentation::from_letters(&["x", "y"], &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]).expect("S3")
    }

    /// Free group on the given generator names.
    pub fn free(names: &[&str]) -> Self {
        GroupPresentation::from_letters(names, &[]).expect("free group")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Relators grouped by the step at which they become fully bound.
fn relator_schedule(p: &GroupPresentation) -> Vec<Vec<&Word>> {
    let mut by_step = vec![Vec::new(); p.generator_count().max(1)];
    for r in p.relators() {
        let g = r.max_generator().unwrap_or(0);
        by_step[g].push(r);
    }
    by_step
}

fn search(
    p: &GroupPresentation,
    k: &FinGroup,
    schedule: &[Vec<&Word>],
    assignment: &mut Vec<Elem>,
    sink: &mut dyn FnMut(&[Elem]),
) {
    let step = assignment.len();
    if step == p.generator_count() {
        sink(assignment);
        return;
    }
    for x in k.elements() {
        assignment.push(x);
        let ok = schedule[step]
            .iter()
            .all(|r| eval_word(r, assignment, k).expect("bound") == 0);
        if ok {
            search(p, k, schedule, assignment, sink);
        }
        assignment.pop();
    }
}

fn required(p: &GroupPresentation, k: &FinGroup) -> u64 {
    (k.order() as u64).saturating_pow(p.generator_count() as u32)
}

/// Number of generator assignments into `k` killing every relator, which is
/// exactly `|Hom(⟨P⟩, k)|`. The search space is split on the first
/// generator's image.
pub fn count_homs(p: &GroupPresentation, k: &FinGroup, budget: Budget) -> Result<u64> {
    budget.require("count_homs", required(p, k))?;
    let schedule = relator_schedule(p);
    if p.generator_count() == 0 {
        return Ok(1);
    }
    let total = k
        .elements()
        .into_par_iter()
        .map(|x| {
            let mut assignment = vec![x];
            if !schedule[0].iter().all(|r| eval_word(r, &assignment, k).expect("bound") == 0) {
                return 0;
            }
            let mut n = 0u64;
            search(p, k, &schedule, &mut assignment, &mut |_| n += 1);
            n
        })
        .sum();
    Ok(total)
}

/// The assignments counted by [`count_homs`], lexicographically ordered.
pub fn list_homs(p: &GroupPresentation, k: &FinGroup, budget: Budget) -> Result<Vec<Vec<Elem>>> {
    budget.require("list_homs", required(p, k))?;
    let schedule = relator_schedule(p);
    let mut out = Vec::new();
    search(p, k, &schedule, &mut Vec::new(), &mut |a| out.push(a.to_vec()));
    Ok(out)
}
