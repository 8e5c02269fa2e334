//! A small finite-domain backtracking solver. Each constraint is checked as
//! soon as the last variable it mentions is assigned.

use crate::budget::Meter;
use crate::error::Result;

type Check<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

pub(crate) struct Csp<'a> {
    domains: Vec<Vec<usize>>,
    buckets: Vec<Vec<Check<'a>>>,
    constant: bool,
}

impl<'a> Csp<'a> {
    pub(crate) fn new(domains: Vec<Vec<usize>>) -> Self {
        let n = domains.len();
        Csp { domains, buckets: (0..n).map(|_| Vec::new()).collect(), constant: true }
    }

    /// Adds a constraint over `vars`; `check` reads the assignment only at
    /// those positions.
    pub(crate) fn constrain(&mut self, vars: &[usize], check: impl Fn(&[usize]) -> bool + 'a) {
        match vars.iter().max() {
            Some(&last) => self.buckets[last].push(Box::new(check)),
            None => self.constant &= check(&[]),
        }
    }

    /// Calls `sink` on every solution in lexicographic order of domain
    /// positions; `sink` returns `false` to stop early.
    pub(crate) fn solve(&self, meter: &mut Meter, mut sink: impl FnMut(&[usize]) -> bool) -> Result<()> {
        if !self.constant {
            return Ok(());
        }
        let mut assignment = vec![0; self.domains.len()];
        self.step(0, &mut assignment, meter, &mut sink)?;
        Ok(())
    }

    pub(crate) fn all(&self, meter: &mut Meter) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        self.solve(meter, |a| {
            out.push(a.to_vec());
            true
        })?;
        Ok(out)
    }

    fn step(
        &self,
        i: usize,
        assignment: &mut Vec<usize>,
        meter: &mut Meter,
        sink: &mut impl FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        if i == self.domains.len() {
            return Ok(sink(assignment));
        }
        for &x in &self.domains[i] {
            meter.tick()?;
            assignment[i] = x;
            if self.buckets[i].iter().all(|c| c(assignment)) && !self.step(i + 1, assignment, meter, sink)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;

    #[test]
    fn solves_in_order() {
        let mut csp = Csp::new(vec![vec![0, 1, 2], vec![0, 1, 2]]);
        csp.constrain(&[0, 1], |a| a[0] < a[1]);
        let sols = csp.all(&mut Budget::DEFAULT.meter("test")).unwrap();
        assert_eq!(sols, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let mut empty = Csp::new(vec![]);
        assert_eq!(empty.all(&mut Budget::DEFAULT.meter("test")).unwrap().len(), 1);
        empty.constrain(&[], |_| false);
        assert!(empty.all(&mut Budget::DEFAULT.meter("test")).unwrap().is_empty());
    }
}
