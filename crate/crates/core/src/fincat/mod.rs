//! Finite categories as explicit composition tables, with functors, natural
//! transformations, coslices and connectivity.

mod build;
mod functor;

use std::collections::HashMap;

pub use functor::{enumerate_functors, FinFunctor, NatTransformation};

use crate::error::{Error, Result};
use crate::groupkit::{Elem, FinGroup};
use crate::report::ValidationReport;

pub type ObjId = usize;
pub type MorId = usize;

/// A finite category. Objects and morphisms are dense integer ids; the
/// composition table is keyed by `(g, f)` and holds `g∘f` for composable
/// pairs.
///
/// Construction only checks that ids are in range. Use
/// [`validate_category`] to check the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    obj_names: Vec<String>,
    mor_names: Vec<String>,
    dom: Vec<ObjId>,
    cod: Vec<ObjId>,
    identity: Vec<MorId>,
    comp: Vec<Option<MorId>>,
    hom: Vec<Vec<MorId>>,
}

impl FinCategory {
    /// `morphisms[i] = (name, dom, cod)`; `composites` lists `(g, f, g∘f)`.
    pub fn from_parts(
        obj_names: Vec<String>,
        morphisms: Vec<(String, ObjId, ObjId)>,
        identity: Vec<MorId>,
        composites: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let n = obj_names.len();
        let m = morphisms.len();
        if identity.len() != n {
            return Err(Error::InvalidCategory(format!(
                "{} identities for {n} objects",
                identity.len()
            )));
        }
        if let Some(&bad) = identity.iter().find(|&&i| i >= m) {
            return Err(Error::UnknownMorphism(bad));
        }
        let mut mor_names = Vec::with_capacity(m);
        let mut dom = Vec::with_capacity(m);
        let mut cod = Vec::with_capacity(m);
        for (name, d, c) in morphisms {
            if d >= n {
                return Err(Error::UnknownObject(d));
            }
            if c >= n {
                return Err(Error::UnknownObject(c));
            }
            mor_names.push(name);
            dom.push(d);
            cod.push(c);
        }
        let mut comp = vec![None; m * m];
        for (g, f, gf) in composites {
            for x in [g, f, gf] {
                if x >= m {
                    return Err(Error::UnknownMorphism(x));
                }
            }
            match comp[g * m + f] {
                Some(prev) if prev != gf => {
                    return Err(Error::InvalidCategory(format!(
                        "composite {g}∘{f} given twice ({prev} and {gf})"
                    )))
                }
                _ => comp[g * m + f] = Some(gf),
            }
        }
        let mut hom = vec![Vec::new(); n * n];
        for f in 0..m {
            hom[dom[f] * n + cod[f]].push(f);
        }
        Ok(FinCategory {
            obj_names,
            mor_names,
            dom,
            cod,
            identity,
            comp,
            hom,
        })
    }

    /// Fills the table from a composition function on composable pairs.
    pub fn from_fn(
        obj_names: Vec<String>,
        morphisms: Vec<(String, ObjId, ObjId)>,
        identity: Vec<MorId>,
        compose: impl Fn(MorId, MorId) -> MorId,
    ) -> Result<Self> {
        let m = morphisms.len();
        let mut triples = Vec::new();
        for g in 0..m {
            for f in 0..m {
                if morphisms[f].2 == morphisms[g].1 {
                    triples.push((g, f, compose(g, f)));
                }
            }
        }
        FinCategory::from_parts(obj_names, morphisms, identity, triples)
    }

    #[inline]
    pub fn object_count(&self) -> usize {
        self.obj_names.len()
    }

    #[inline]
    pub fn morphism_count(&self) -> usize {
        self.dom.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.object_count()
    }

    pub fn morphisms(&self) -> std::ops::Range<MorId> {
        0..self.morphism_count()
    }

    pub fn is_empty(&self) -> bool {
        self.object_count() == 0
    }

    #[inline]
    pub fn dom(&self, f: MorId) -> ObjId {
        self.dom[f]
    }

    #[inline]
    pub fn cod(&self, f: MorId) -> ObjId {
        self.cod[f]
    }

    #[inline]
    pub fn id(&self, a: ObjId) -> MorId {
        self.identity[a]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.dom[f]] == f
    }

    pub fn obj_name(&self, a: ObjId) -> &str {
        &self.obj_names[a]
    }

    pub fn mor_name(&self, f: MorId) -> &str {
        &self.mor_names[f]
    }

    pub fn obj_names(&self) -> &[String] {
        &self.obj_names
    }

    pub fn mor_names(&self) -> &[String] {
        &self.mor_names
    }

    /// Morphisms `a → b` in id order.
    #[inline]
    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.hom[a * self.object_count() + b]
    }

    pub fn out_of(&self, a: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&f| self.dom[f] == a).collect()
    }

    pub fn composable(&self, g: MorId, f: MorId) -> bool {
        self.cod[f] == self.dom[g]
    }

    /// `g∘f`, or a typed error when the pair is not composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        let m = self.morphism_count();
        if g >= m {
            return Err(Error::UnknownMorphism(g));
        }
        if f >= m {
            return Err(Error::UnknownMorphism(f));
        }
        if !self.composable(g, f) {
            return Err(Error::NotComposable { g, f });
        }
        self.comp[g * m + f].ok_or(Error::MissingComposite { g, f })
    }

    /// `g∘f` for a pair known to be composable in a validated category.
    #[inline]
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        debug_assert!(self.composable(g, f), "{g}∘{f} not composable");
        self.comp[g * self.morphism_count() + f].expect("composite present in a validated category")
    }

    /// Composite of a path given in diagrammatic order reversed: `comp_all(&[h, g, f]) = h∘g∘f`.
    pub fn comp_all(&self, path: &[MorId]) -> MorId {
        let (&last, rest) = path.split_last().expect("nonempty path");
        rest.iter().rev().fold(last, |acc, &h| self.comp(h, acc))
    }

    fn table_entry(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g * self.morphism_count() + f]
    }

    /// Two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.dom[f], self.cod[f]);
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.comp(g, f) == self.id(a) && self.comp(f, g) == self.id(b))
    }

    pub fn is_invertible(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    /// Invertible endomorphisms of `a`, identity first, then in id order.
    pub fn automorphisms(&self, a: ObjId) -> Vec<MorId> {
        let id = self.id(a);
        std::iter::once(id)
            .chain(self.hom(a, a).iter().copied().filter(|&f| f != id && self.is_invertible(f)))
            .collect()
    }

    pub fn are_isomorphic(&self, a: ObjId, b: ObjId) -> bool {
        self.hom(a, b).iter().any(|&f| self.is_invertible(f))
    }

    /// Least object with exactly one morphism to every object.
    pub fn initial_object(&self) -> Option<ObjId> {
        self.objects().find(|&a| self.objects().all(|b| self.hom(a, b).len() == 1))
    }

    pub fn terminal_object(&self) -> Option<ObjId> {
        self.objects().find(|&b| self.objects().all(|a| self.hom(a, b).len() == 1))
    }

    pub fn is_discrete(&self) -> bool {
        self.morphisms().all(|f| self.is_identity(f))
    }

    /// Connected components: the finest partition of the objects in which
    /// the two ends of every morphism share a block. Blocks are sorted and
    /// listed by least element.
    pub fn pi0(&self) -> Vec<Vec<ObjId>> {
        let n = self.object_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for f in self.morphisms() {
            let (a, b) = (find(&mut parent, self.dom[f]), find(&mut parent, self.cod[f]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut blocks: Vec<Vec<ObjId>> = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            let r = find(&mut parent, a);
            let i = *index.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(a);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.pi0().len() == 1
    }

    /// The coslice `X/C` and its projection to `C`.
    ///
    /// Objects are the morphisms out of `X` in id order. A morphism from `f`
    /// is a pair `(f, g)` with `dom g = cod f`, landing in `g∘f`; pairs are
    /// listed by source then by `g`.
    pub fn coslice(&self, x: ObjId) -> Result<(FinCategory, FinFunctor)> {
        if x >= self.object_count() {
            return Err(Error::UnknownObject(x));
        }
        let objs = self.out_of(x);
        let index: HashMap<MorId, usize> = objs.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut morphisms = Vec::new();
        let mut pairs = Vec::new();
        let mut mor_map = Vec::new();
        let mut identity = vec![0; objs.len()];
        let mut pair_index = HashMap::new();
        for (i, &f) in objs.iter().enumerate() {
            for g in self.out_of(self.cod[f]) {
                let target = index[&self.comp(g, f)];
                if g == self.id(self.cod[f]) {
                    identity[i] = morphisms.len();
                }
                pair_index.insert((f, g), morphisms.len());
                morphisms.push((format!("{}@{}", self.mor_names[g], self.mor_names[f]), i, target));
                pairs.push((f, g));
                mor_map.push(g);
            }
        }
        let mut triples = Vec::new();
        for (second, &(f2, h)) in pairs.iter().enumerate() {
            for (first, &(f, g)) in pairs.iter().enumerate() {
                if self.comp(g, f) == f2 {
                    triples.push((second, first, pair_index[&(f, self.comp(h, g))]));
                }
            }
        }
        let obj_names = objs.iter().map(|&f| self.mor_names[f].clone()).collect();
        let cat = FinCategory::from_parts(obj_names, morphisms, identity, triples)?;
        let projection = FinFunctor {
            obj_map: objs.iter().map(|&f| self.cod[f]).collect(),
            mor_map,
        };
        Ok((cat, projection))
    }

    /// Group of invertible endomorphisms of `a` under composition.
    pub fn automorphism_group(&self, a: ObjId) -> Result<AutGroup> {
        if a >= self.object_count() {
            return Err(Error::UnknownObject(a));
        }
        let labels = self.automorphisms(a);
        let index: HashMap<MorId, Elem> = labels.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for &f in &labels {
            for &g in &labels {
                table.push(index[&self.comp(f, g)]);
            }
        }
        let names = labels.iter().map(|&f| self.mor_names[f].clone()).collect();
        let group = FinGroup::from_table(n, table, Some(names))?;
        Ok(AutGroup { object: a, group, labels, index })
    }
}

/// `Aut(A)` as a table group, element `i` labelled by morphism `labels[i]`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    pub object: ObjId,
    pub group: FinGroup,
    pub labels: Vec<MorId>,
    index: HashMap<MorId, Elem>,
}

impl AutGroup {
    pub fn element_of(&self, f: MorId) -> Option<Elem> {
        self.index.get(&f).copied()
    }
}

/// Checks typing of the table, identity laws and associativity, reporting
/// every violation.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut r = ValidationReport::new("category");
    let m = c.morphism_count();
    for a in c.objects() {
        let i = c.id(a);
        r.check(c.dom(i) == a && c.cod(i) == a, "identity-shape", &[a, i], || {
            format!("identity of {} is not an endomorphism of it", c.obj_name(a))
        });
    }
    let mut well_typed = true;
    for g in 0..m {
        for f in 0..m {
            let entry = c.table_entry(g, f);
            if c.composable(g, f) {
                match entry {
                    None => {
                        well_typed = false;
                        r.push("missing-composite", &[g, f], format!("{}∘{} undefined", c.mor_name(g), c.mor_name(f)));
                    }
                    Some(h) => r.check(c.dom(h) == c.dom(f) && c.cod(h) == c.cod(g), "ill-typed-composite", &[g, f, h], || {
                        well_typed = false;
                        format!("{}∘{} = {} has the wrong type", c.mor_name(g), c.mor_name(f), c.mor_name(h))
                    }),
                }
            } else if let Some(h) = entry {
                r.push("spurious-composite", &[g, f, h], format!("{}∘{} defined on a non-composable pair", c.mor_name(g), c.mor_name(f)));
            }
        }
    }
    if !well_typed || !r.is_valid() {
        return r;
    }
    for f in 0..m {
        let (a, b) = (c.dom(f), c.cod(f));
        r.check(c.comp(c.id(b), f) == f, "left-identity", &[f], || format!("id∘{} ≠ {}", c.mor_name(f), c.mor_name(f)));
        r.check(c.comp(f, c.id(a)) == f, "right-identity", &[f], || format!("{}∘id ≠ {}", c.mor_name(f), c.mor_name(f)));
    }
    for f in 0..m {
        for g in c.out_of(c.cod(f)) {
            let gf = c.comp(g, f);
            for h in c.out_of(c.cod(g)) {
                let lhs = c.comp(h, gf);
                let rhs = c.comp(c.comp(h, g), f);
                r.check(lhs == rhs, "associativity", &[h, g, f], || {
                    format!(
                        "{h}∘({g}∘{f}) = {} but ({h}∘{g})∘{f} = {}",
                        c.mor_name(lhs),
                        c.mor_name(rhs),
                        h = c.mor_name(h),
                        g = c.mor_name(g),
                        f = c.mor_name(f)
                    )
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;

    fn one_object(names: &[&str], table: &[usize]) -> FinCategory {
        let k = names.len();
        FinCategory::from_fn(
            vec!["*".into()],
            names.iter().map(|n| (n.to_string(), 0, 0)).collect(),
            vec![0],
            |g, f| table[g * k + f],
        )
        .unwrap()
    }

    #[test]
    fn delooping_is_valid() {
        let c = FinCategory::delooping(&library::cyclic(2));
        assert!(validate_category(&c).is_valid());
        assert!(validate_category(&FinCategory::empty()).is_valid());
    }

    #[test]
    fn idempotent_patch_is_still_a_category() {
        // e, s with s∘s = s: the two-element idempotent monoid, associative
        let c = one_object(&["e", "s"], &[0, 1, 1, 1]);
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn non_associative_patch_is_reported_at_sss() {
        // ℤ₃ table {e,s,t} patched to s∘s = t, t∘s = e, s∘t = s
        let c = one_object(&["e", "s", "t"], &[0, 1, 2, 1, 2, 1, 2, 0, 1]);
        let r = validate_category(&c);
        assert!(!r.is_valid());
        let v = r.first("associativity").unwrap();
        assert_eq!(v.witness, vec![1, 1, 1]);
    }

    #[test]
    fn typing_errors_are_reported() {
        let c = FinCategory::from_parts(
            vec!["A".into(), "B".into()],
            vec![("1A".into(), 0, 0), ("1B".into(), 1, 1), ("f".into(), 0, 1)],
            vec![0, 1],
            vec![(0, 0, 0), (1, 1, 1), (1, 2, 2), (2, 0, 2), (0, 2, 2)],
        )
        .unwrap();
        let r = validate_category(&c);
        assert!(r.has("spurious-composite"));
        assert!(FinCategory::from_parts(vec!["A".into()], vec![("f".into(), 0, 3)], vec![0], vec![]).is_err());
        assert_eq!(c.compose(0, 1), Err(Error::NotComposable { g: 0, f: 1 }));
    }

    #[test]
    fn coslice_sizes() {
        let d = FinCategory::discrete(3);
        let (cs, _) = d.coslice(1).unwrap();
        assert_eq!((cs.object_count(), cs.morphism_count()), (1, 1));
        let bz2 = FinCategory::delooping(&library::cyclic(2));
        let (cs, p) = bz2.coslice(0).unwrap();
        assert_eq!((cs.object_count(), cs.morphism_count()), (2, 4));
        assert!(validate_category(&cs).is_valid());
        assert!(p.check(&cs, &bz2).is_valid());
        let bs3 = FinCategory::delooping(&library::s3());
        let (cs, p) = bs3.coslice(0).unwrap();
        assert_eq!((cs.object_count(), cs.morphism_count()), (6, 36));
        assert!(validate_category(&cs).is_valid());
        assert!(p.check(&cs, &bs3).is_valid());
        assert_eq!(bs3.coslice(4).unwrap_err(), Error::UnknownObject(4));
    }

    #[test]
    fn connectivity() {
        let t = FinCategory::terminal();
        assert!(t.is_connected());
        assert_eq!(t.pi0(), vec![vec![0]]);
        let d = FinCategory::discrete(2);
        assert!(!d.is_connected());
        assert_eq!(d.pi0(), vec![vec![0], vec![1]]);
        let s = FinCategory::span();
        assert!(s.is_connected());
        assert!(!FinCategory::empty().is_connected());
        assert!(FinCategory::empty().pi0().is_empty());
    }

    #[test]
    fn initial_objects() {
        assert_eq!(FinCategory::walking_arrow().initial_object(), Some(0));
        assert_eq!(FinCategory::delooping(&library::cyclic(2)).initial_object(), None);
        assert_eq!(FinCategory::discrete(2).initial_object(), None);
    }

    #[test]
    fn automorphism_groups() {
        let d = FinCategory::discrete(2);
        assert!(d.automorphism_group(1).unwrap().group.is_trivial());
        let s3 = library::s3();
        let bs3 = FinCategory::delooping(&s3);
        let aut = bs3.automorphism_group(0).unwrap();
        assert!(aut.group.same_table(&s3));
        let p = FinCategory::walking_arrow();
        assert!(p.automorphism_group(0).unwrap().group.is_trivial());
    }
}
