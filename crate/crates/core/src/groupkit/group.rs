use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of a [`FinGroup`]; the identity is always `0`.
pub type Elem = usize;

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct FinGroup {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    table: Vec<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl TryFrom<GroupRepr> for FinGroup {
    type Error = Error;
    fn try_from(r: GroupRepr) -> Result<Self> {
        if r.table.len() != r.order * r.order {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, expected {}",
                r.table.len(),
                r.order * r.order
            )));
        }
        FinGroup::from_table(r.order, r.table, r.names)
    }
}

impl From<FinGroup> for GroupRepr {
    fn from(g: FinGroup) -> Self {
        let default = default_names(g.order);
        let names = (g.names != default).then_some(g.names);
        GroupRepr {
            order: g.order,
            table: g.mul,
            names,
        }
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
        .collect()
}

impl FinGroup {
    /// Validates a flat row-major table (`table[a * n + b] = a·b`) with identity `0`.
    pub fn from_table(order: usize, table: Vec<Elem>, names: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidGroup(format!("entry {bad} out of range")));
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(Error::InvalidGroup(format!("element 0 is not an identity at {a}")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(order);
        for a in 0..order {
            match (0..order).find(|&b| table[a * order + b] == 0 && table[b * order + a] == 0) {
                Some(b) => inv.push(b),
                None => return Err(Error::InvalidGroup(format!("element {a} has no inverse"))),
            }
        }
        let names = match names {
            Some(n) if n.len() == order => n,
            Some(n) => {
                return Err(Error::InvalidGroup(format!(
                    "{} names for {order} elements",
                    n.len()
                )))
            }
            None => default_names(order),
        };
        Ok(FinGroup {
            order,
            mul: table,
            inv,
            names,
        })
    }

    /// Builds a group from a closed set of `items` (first item is the identity)
    /// and a multiplication on them.
    pub fn from_closed_set<T: PartialEq + Clone>(
        items: &[T],
        mut op: impl FnMut(&T, &T) -> T,
        names: Vec<String>,
    ) -> Result<Self> {
        let n = items.len();
        let mut table = Vec::with_capacity(n * n);
        for a in items {
            for b in items {
                let c = op(a, b);
                let idx = items
                    .iter()
                    .position(|x| *x == c)
                    .ok_or_else(|| Error::InvalidGroup("set is not closed under the operation".into()))?;
                table.push(idx);
            }
        }
        FinGroup::from_table(n, table, Some(names))
    }

    pub fn trivial() -> Self {
        FinGroup::from_table(1, vec![0], None).expect("trivial group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `a·b·a⁻¹`
    #[inline]
    pub fn conj(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.inv[a])
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order);
        self.names = names;
        self
    }

    /// Same multiplication table, ignoring element names.
    pub fn same_table(&self, other: &FinGroup) -> bool {
        self.order == other.order && self.mul == other.mul
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn power(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[Elem]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Greedy generating set: scan elements in id order and keep each one that
    /// enlarges the subgroup generated so far.
    pub fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = self.generated(&gens);
        for a in self.elements() {
            if !span[a] {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }

    pub fn centralizes(&self, a: Elem, set: &[Elem]) -> bool {
        set.iter().all(|&b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn center(&self) -> Vec<Elem> {
        let all: Vec<Elem> = self.elements().collect();
        self.elements().filter(|&a| self.centralizes(a, &all)).collect()
    }

    /// The subgroup on `members` (must contain `0` and be closed), relabelled
    /// densely in the given order, together with its embedding.
    pub fn subgroup(&self, members: &[Elem]) -> Result<(FinGroup, Vec<Elem>)> {
        if members.first() != Some(&0) {
            return Err(Error::InvalidGroup("subgroup listing must start with the identity".into()));
        }
        let names = members.iter().map(|&a| self.names[a].clone()).collect();
        let g = FinGroup::from_closed_set(members, |&a, &b| self.mul(a, b), names)?;
        Ok((g, members.to_vec()))
    }

    pub fn direct_product(&self, other: &FinGroup) -> FinGroup {
        let n = self.order * other.order;
        let split = |x: usize| (x / other.order, x % other.order);
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = split(x);
                let (c, d) = split(y);
                table.push(self.mul(a, c) * other.order + other.mul(b, d));
            }
        }
        let names = (0..n)
            .map(|x| {
                let (a, b) = split(x);
                if x == 0 {
                    "e".to_string()
                } else {
                    format!("({},{})", self.names[a], other.names[b])
                }
            })
            .collect();
        FinGroup::from_table(n, table, Some(names)).expect("direct product of groups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::library;

    #[test]
    fn rejects_broken_tables() {
        assert!(FinGroup::from_table(2, vec![0, 1, 1, 1], None).is_err());
        assert!(FinGroup::from_table(2, vec![0, 1, 1], None).is_err());
        assert!(FinGroup::from_table(0, vec![], None).is_err());
        // {e,a,b} with a·a = a is not a group
        assert!(FinGroup::from_table(3, vec![0, 1, 2, 1, 1, 0, 2, 0, 1], None).is_err());
    }

    #[test]
    fn greedy_generators_of_small_groups() {
        assert_eq!(library::cyclic(4).greedy_generators(), vec![1]);
        assert_eq!(library::klein().greedy_generators().len(), 2);
        let s3 = library::s3();
        let gens = s3.greedy_generators();
        assert_eq!(gens.len(), 2);
        assert!(s3.generated(&gens).iter().all(|&b| b));
        assert!(library::trivial().greedy_generators().is_empty());
    }

    #[test]
    fn center_and_orders() {
        let s3 = library::s3();
        assert_eq!(s3.center(), vec![0]);
        let d4 = library::dihedral(4);
        assert_eq!(d4.center().len(), 2);
        assert_eq!((1..6).map(|a| s3.element_order(a)).collect::<Vec<_>>(), vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn serde_round_trip_keeps_names() {
        let s3 = library::s3();
        let text = serde_json::to_string(&s3).unwrap();
        let back: FinGroup = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s3);
    }
}
