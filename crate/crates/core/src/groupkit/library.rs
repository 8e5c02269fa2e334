//! Small named groups used by fixtures and hom-count panels.

use super::group::FinGroup;
use crate::error::{Error, Result};

pub fn trivial() -> FinGroup {
    FinGroup::trivial()
}

/// ℤₙ with elements `e, a, a^2, …`.
pub fn cyclic(n: usize) -> FinGroup {
    assert!(n > 0);
    let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    let names = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    FinGroup::from_table(n, table, Some(names)).expect("cyclic group")
}

pub fn klein() -> FinGroup {
    let z2 = cyclic(2);
    z2.direct_product(&z2)
}

/// Permutations of `0..n` under `(σ·τ)(i) = σ(τ(i))`, ordered by number of
/// moved points and then by cycle notation; `S₃` comes out as
/// `e, (12), (13), (23), (123), (132)`.
pub fn symmetric(n: usize) -> FinGroup {
    let mut perms = Vec::new();
    permutations(n, &mut Vec::new(), &mut vec![false; n], &mut perms);
    perms.sort_by_key(|p| (p.iter().enumerate().filter(|(i, &x)| *i != x).count(), cycle_notation(p)));
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FinGroup::from_closed_set(&perms, |s, t| t.iter().map(|&i| s[i]).collect(), names)
        .expect("symmetric group")
}

pub fn s3() -> FinGroup {
    symmetric(3)
}

/// Dihedral group of order `2n`: `r^k` then `r^k s`, with `s r s = r⁻¹`.
pub fn dihedral(n: usize) -> FinGroup {
    assert!(n >= 1);
    let order = 2 * n;
    // element (k, f) encodes r^k s^f
    let enc = |k: usize, f: usize| f * n + k;
    let mut table = vec![0; order * order];
    for f1 in 0..2 {
        for k1 in 0..n {
            for f2 in 0..2 {
                for k2 in 0..n {
                    // r^k1 s^f1 r^k2 s^f2 = r^(k1 ± k2) s^(f1+f2)
                    let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                    table[enc(k1, f1) * order + enc(k2, f2)] = enc(k, (f1 + f2) % 2);
                }
            }
        }
    }
    let names = (0..order)
        .map(|x| {
            let (k, f) = (x % n, x / n);
            let r = match k {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            match (r.is_empty(), f) {
                (true, 0) => "e".to_string(),
                (false, 0) => r,
                (_, _) => format!("{r}s"),
            }
        })
        .collect();
    FinGroup::from_table(order, table, Some(names)).expect("dihedral group")
}

/// Looks up a group by a short name: `1`, `Z<n>`, `S<n>`, `D<n>` (order 2n),
/// `V4` / `Z2xZ2`.
pub fn by_name(name: &str) -> Result<FinGroup> {
    let parse = |s: &str| s.parse::<usize>().ok().filter(|&n| n > 0);
    let g = match name {
        "1" | "trivial" => trivial(),
        "V4" | "Z2xZ2" | "klein" => klein(),
        _ => {
            let (head, tail) = name.split_at(1.min(name.len()));
            match (head, parse(tail)) {
                ("Z", Some(n)) if n <= 64 => cyclic(n),
                ("S", Some(n)) if n <= 5 => symmetric(n),
                ("D", Some(n)) if n <= 32 => dihedral(n),
                _ => return Err(Error::Schema(format!("unknown group name {name:?}"))),
            }
        }
    };
    Ok(g)
}

/// The default hom-count panel: ℤ₂, ℤ₃, ℤ₄, S₃, D₄, ℤ₂×ℤ₂.
pub fn default_panel() -> Vec<(String, FinGroup)> {
    ["Z2", "Z3", "Z4", "S3", "D4", "V4"]
        .iter()
        .map(|n| (n.to_string(), by_name(n).expect("panel group")))
        .collect()
}

fn permutations(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for i in 0..n {
        if !used[i] {
            used[i] = true;
            cur.push(i);
            permutations(n, cur, used, out);
            cur.pop();
            used[i] = false;
        }
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_labels_and_conjugation() {
        let s3 = s3();
        let names: Vec<&str> = s3.elements().map(|a| s3.name(a)).collect();
        assert_eq!(names, ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        // (12)(13)(12) = (23)
        assert_eq!(s3.conj(1, 2), 3);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn orders() {
        assert_eq!(dihedral(4).order(), 8);
        assert!(!dihedral(4).is_abelian());
        assert!(dihedral(2).is_abelian());
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(klein().order(), 4);
        assert!(by_name("Q8").is_err());
        assert_eq!(by_name("Z5").unwrap().order(), 5);
    }
}
