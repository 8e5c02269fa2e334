//! Brute-force oracles written against the raw tables only.

#![allow(dead_code)]

use std::collections::BTreeSet;

use xmodcat::fincat::{validate_category, FinCategory, MorId, ObjId};
use xmodcat::groupkit::{FinGroup, GroupPresentation, Word};
use xmodcat::limits2d::Diagram;
use xmodcat::fixtures;
use xmodcat::xmod::CrossedModule;

/// Every fixture used by the sweeps: the named ones and a seeded batch.
pub fn sweep_fixtures(random: u64) -> Vec<(String, CrossedModule)> {
    let mut out: Vec<(String, CrossedModule)> = fixtures::named().into_iter().map(|(n, x)| (n.to_string(), x)).collect();
    for seed in 0..random {
        out.push((format!("random-{seed}"), fixtures::random_xmod(seed, Default::default()).unwrap()));
    }
    out
}

/// Invertible endomorphisms of `b`, straight from the table.
fn automorphisms(c: &FinCategory, b: ObjId) -> Vec<MorId> {
    let endo = c.hom(b, b);
    endo.iter()
        .copied()
        .filter(|&f| endo.iter().any(|&g| c.comp(g, f) == c.id(b) && c.comp(f, g) == c.id(b)))
        .collect()
}

/// All natural families `(α_f)` over the morphisms out of `x`, found by
/// enumerating the full product of automorphism sets and then testing every
/// naturality square. No propagation; `None` past `cap` candidates.
pub fn isotropy_families(c: &FinCategory, x: ObjId, cap: u64) -> Option<BTreeSet<Vec<MorId>>> {
    let out: Vec<MorId> = c.morphisms().filter(|&f| c.dom(f) == x).collect();
    let choices: Vec<Vec<MorId>> = out.iter().map(|&f| automorphisms(c, c.cod(f))).collect();
    let total = choices.iter().try_fold(1u64, |acc, v| acc.checked_mul(v.len() as u64))?;
    if total > cap {
        return None;
    }
    let pos = |f: MorId| out.iter().position(|&g| g == f).unwrap();
    let mut found = BTreeSet::new();
    let mut idx = vec![0usize; out.len()];
    'outer: loop {
        let fam: Vec<MorId> = idx.iter().zip(&choices).map(|(&i, v)| v[i]).collect();
        let natural = out.iter().enumerate().all(|(i, &f)| {
            c.morphisms().filter(|&g| c.dom(g) == c.cod(f)).all(|g| c.comp(g, fam[i]) == c.comp(fam[pos(c.comp(g, f))], g))
        });
        if natural {
            found.insert(fam);
        }
        for k in 0..idx.len() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    Some(found)
}

pub fn coslice_size(c: &FinCategory, x: ObjId) -> usize {
    c.morphisms().filter(|&f| c.dom(f) == x).count()
}

/// Evaluates signed one-based letters in `k`.
pub fn eval(letters: &[i32], assignment: &[usize], k: &FinGroup) -> usize {
    letters.iter().fold(k.identity(), |acc, &l| {
        let g = assignment[l.unsigned_abs() as usize - 1];
        k.mul(acc, if l > 0 { g } else { k.inv(g) })
    })
}

pub fn letters(w: &Word) -> Vec<i32> {
    serde_json::from_value(serde_json::to_value(w).unwrap()).unwrap()
}

/// Every generator assignment into `k` killing every relator.
pub fn assignments(p: &GroupPresentation, k: &FinGroup) -> Vec<Vec<usize>> {
    let rels: Vec<Vec<i32>> = p.relators().iter().map(letters).collect();
    let n = p.generator_count();
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        if rels.iter().all(|r| eval(r, &cur, k) == k.identity()) {
            out.push(cur.clone());
        }
        let mut i = 0;
        while i < n {
            cur[i] += 1;
            if cur[i] < k.order() {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

pub fn hom_count(p: &GroupPresentation, k: &FinGroup) -> u64 {
    assignments(p, k).len() as u64
}

/// `#{(k, β) : β k(f a) β⁻¹ = k(g a)}`.
pub fn coinserter_pairs(target: &GroupPresentation, f: &[Word], g: &[Word], k: &FinGroup) -> u64 {
    let mut n = 0;
    for a in assignments(target, k) {
        let fa: Vec<usize> = f.iter().map(|w| eval(&letters(w), &a, k)).collect();
        let ga: Vec<usize> = g.iter().map(|w| eval(&letters(w), &a, k)).collect();
        for b in k.elements() {
            if fa.iter().zip(&ga).all(|(&x, &y)| k.mul(k.mul(b, x), k.inv(b)) == y) {
                n += 1;
            }
        }
    }
    n
}

/// `#{k : k(α) = k(β)}`.
pub fn coequifier_maps(base: &GroupPresentation, alpha: &Word, beta: &Word, k: &FinGroup) -> u64 {
    assignments(base, k).into_iter().filter(|a| eval(&letters(alpha), a, k) == eval(&letters(beta), a, k)).count() as u64
}

/// `#{α ∈ G(B) : γ(α)∘f = g}`.
pub fn two_cell_count(xm: &CrossedModule, f: MorId, g: MorId) -> usize {
    let c = &xm.base;
    let b = c.cod(f);
    (0..xm.groups[b].order()).filter(|&a| c.comp(xm.gamma[b][a], f) == g).count()
}

/// Both horizontal-composition formulas for `β*α`.
pub fn horizontal(xm: &CrossedModule, beta: (MorId, usize), alpha: (MorId, usize)) -> (MorId, usize, usize) {
    let c = &xm.base;
    let (f2, b) = beta;
    let (f1, a) = alpha;
    let grp = &xm.groups[c.cod(f2)];
    let g2 = c.comp(xm.gamma[c.cod(f2)][b], f2);
    let one = grp.mul(b, xm.actions[f2].map[a]);
    let two = grp.mul(xm.actions[g2].map[a], b);
    (c.comp(f2, f1), one, two)
}

/// Shapes of connected diagrams with at most four objects.
pub fn connected_shapes() -> Vec<(&'static str, FinCategory)> {
    vec![
        ("terminal", FinCategory::terminal()),
        ("walking-arrow", FinCategory::walking_arrow()),
        ("parallel-pair", FinCategory::parallel_pair()),
        ("span", FinCategory::span()),
        ("cospan", FinCategory::cospan()),
        ("zigzag", FinCategory::zigzag()),
        ("chain-3", FinCategory::chain(3)),
        ("chain-4", FinCategory::chain(4)),
        ("square", fixtures::square()),
    ]
    .into_iter()
    .inspect(|(n, j)| assert!(validate_category(j).is_valid() && j.is_connected() && j.object_count() <= 4, "{n}"))
    .collect()
}

/// Cocones with the given apex, from the tables; each prefix is filtered
/// on the morphisms between the objects it already covers.
pub fn cocones_naive(c: &FinCategory, d: &Diagram, apex: ObjId) -> Vec<Vec<MorId>> {
    let j = &d.shape;
    let mut out = vec![vec![]];
    for x in j.objects() {
        let legs = c.hom(d.functor.obj_map[x], apex);
        out = out.into_iter().flat_map(|p| legs.iter().map(move |&l| [p.clone(), vec![l]].concat())).collect();
        out.retain(|legs: &Vec<MorId>| {
            j.morphisms()
                .filter(|&u| j.dom(u) <= x && j.cod(u) <= x)
                .all(|u| c.comp(legs[j.cod(u)], d.functor.mor_map[u]) == legs[j.dom(u)])
        });
    }
    out
}
