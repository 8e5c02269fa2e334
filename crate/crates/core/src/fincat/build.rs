use super::{FinCategory, MorId, ObjId};
use crate::groupkit::FinGroup;

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl FinCategory {
    pub fn empty() -> Self {
        FinCategory::from_parts(vec![], vec![], vec![], vec![]).expect("empty category")
    }

    pub fn terminal() -> Self {
        FinCategory::discrete(1)
    }

    /// `n` objects and only identities.
    pub fn discrete(n: usize) -> Self {
        FinCategory::from_parts(
            names("", n),
            (0..n).map(|a| (format!("1_{a}"), a, a)).collect(),
            (0..n).collect(),
            (0..n).map(|a| (a, a, a)),
        )
        .expect("discrete category")
    }

    /// One object `*`; morphism `k` is group element `k` and `g∘f = g·f`.
    pub fn delooping(g: &FinGroup) -> Self {
        FinCategory::from_fn(
            vec!["*".into()],
            g.elements().map(|a| (g.name(a).to_string(), 0, 0)).collect(),
            vec![0],
            |x, y| g.mul(x, y),
        )
        .expect("delooping")
    }

    /// The preorder generated by `relations` (`(a, b)` meaning `a ≤ b`).
    /// Morphisms are the pairs `a ≤ b`, listed lexicographically.
    pub fn poset(n: usize, relations: &[(ObjId, ObjId)]) -> Self {
        let mut le = vec![false; n * n];
        for a in 0..n {
            le[a * n + a] = true;
        }
        for &(a, b) in relations {
            assert!(a < n && b < n, "relation out of range");
            le[a * n + b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if le[a * n + k] && le[k * n + b] {
                        le[a * n + b] = true;
                    }
                }
            }
        }
        let mut morphisms = Vec::new();
        let mut index = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in 0..n {
                if le[a * n + b] {
                    index[a * n + b] = morphisms.len();
                    let name = if a == b { format!("1_{a}") } else { format!("{a}<{b}") };
                    morphisms.push((name, a, b));
                }
            }
        }
        let dc: Vec<(ObjId, ObjId)> = morphisms.iter().map(|m| (m.1, m.2)).collect();
        let identity = (0..n).map(|a| index[a * n + a]).collect();
        FinCategory::from_fn(names("", n), morphisms, identity, |g, f| index[dc[f].0 * n + dc[g].1])
            .expect("poset")
    }

    /// `0 → 1`.
    pub fn walking_arrow() -> Self {
        FinCategory::poset(2, &[(0, 1)])
    }

    /// `0 → 1 → … → n-1`.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinCategory::poset(n, &rel)
    }

    /// `1 ← 0 → 2`, the shape of a pushout.
    pub fn span() -> Self {
        FinCategory::poset(3, &[(0, 1), (0, 2)])
    }

    /// `1 → 0 ← 2`, the shape of a pullback.
    pub fn cospan() -> Self {
        FinCategory::poset(3, &[(1, 0), (2, 0)])
    }

    /// `0 ← 1 → 2 ← 3`.
    pub fn zigzag() -> Self {
        FinCategory::poset(4, &[(1, 0), (1, 2), (3, 2)])
    }

    /// Two parallel arrows `u, v: 0 ⇉ 1` (morphisms 2 and 3).
    pub fn parallel_pair() -> Self {
        FinCategory::from_fn(
            names("", 2),
            vec![
                ("1_0".into(), 0, 0),
                ("1_1".into(), 1, 1),
                ("u".into(), 0, 1),
                ("v".into(), 0, 1),
            ],
            vec![0, 1],
            |g, f| if g < 2 { f } else { g },
        )
        .expect("parallel pair")
    }

    /// Cartesian product; object `(a, b)` has id `a·|D₀| + b`, morphism
    /// `(f, g)` has id `f·|D₁| + g`.
    pub fn product(c: &FinCategory, d: &FinCategory) -> Self {
        let (nd, md) = (d.object_count(), d.morphism_count());
        let mut obj_names = Vec::new();
        for a in c.objects() {
            for b in d.objects() {
                obj_names.push(format!("({},{})", c.obj_name(a), d.obj_name(b)));
            }
        }
        let mut morphisms = Vec::new();
        for f in c.morphisms() {
            for g in d.morphisms() {
                morphisms.push((
                    format!("({},{})", c.mor_name(f), d.mor_name(g)),
                    c.dom(f) * nd + d.dom(g),
                    c.cod(f) * nd + d.cod(g),
                ));
            }
        }
        let mut identity = Vec::new();
        for a in c.objects() {
            for b in d.objects() {
                identity.push(c.id(a) * md + d.id(b));
            }
        }
        FinCategory::from_fn(obj_names, morphisms, identity, |x, y| {
            c.comp(x / md, y / md) * md + d.comp(x % md, y % md)
        })
        .expect("product category")
    }

    /// Freely adjoins an initial object `0`. Old object `a` becomes `a + 1`;
    /// morphism 0 is `1_0`, morphism `1 + a` is the unique `0 → a + 1`, and an
    /// old morphism `f` becomes `1 + n + f`.
    pub fn with_initial(c: &FinCategory) -> Self {
        let n = c.object_count();
        let shift = 1 + n;
        let mut obj_names = vec!["0".to_string()];
        obj_names.extend(c.obj_names().iter().cloned());
        let mut morphisms = vec![("1_0".to_string(), 0, 0)];
        for a in c.objects() {
            morphisms.push((format!("!{}", c.obj_name(a)), 0, a + 1));
        }
        for f in c.morphisms() {
            morphisms.push((c.mor_name(f).to_string(), c.dom(f) + 1, c.cod(f) + 1));
        }
        let identity = std::iter::once(0).chain(c.objects().map(|a| c.id(a) + shift)).collect();
        let cod = |x: MorId| if x < shift { x.saturating_sub(1) } else { c.cod(x - shift) };
        FinCategory::from_fn(obj_names, morphisms, identity, |g, f| {
            if f == 0 {
                g
            } else if f < shift {
                // g∘!a = !(cod g)
                1 + cod(g - shift)
            } else {
                c.comp(g - shift, f - shift) + shift
            }
        })
        .expect("category with an initial object")
    }
}
