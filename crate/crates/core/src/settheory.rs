//! Finite monoids and their gabi structures in `Set`.
//!
//! Here `δ: M → M × M^op` is a table of pairs `m ↦ (m₊, m₋)`.

use crate::exec::{ordered_map, Execution, SearchError};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("Cayley table must be {size}x{size} with entries below {size}")]
    Shape { size: usize },
    #[error("identity index {0} out of range")]
    Identity(usize),
    #[error("identity law fails at {0}")]
    IdentityLaw(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("expected {expected} names, got {found}")]
    Names { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    table: Vec<Vec<usize>>,
    identity: usize,
    names: Vec<String>,
}

impl FiniteMonoid {
    /// Validates the table; elements are named by index.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, MonoidError> {
        let size = table.len();
        if size == 0 || table.iter().any(|r| r.len() != size || r.iter().any(|&x| x >= size)) {
            return Err(MonoidError::Shape { size });
        }
        if identity >= size {
            return Err(MonoidError::Identity(identity));
        }
        for m in 0..size {
            if table[identity][m] != m || table[m][identity] != m {
                return Err(MonoidError::IdentityLaw(m));
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(MonoidError::Associativity(a, b, c));
                    }
                }
            }
        }
        let names = (0..size).map(|i| i.to_string()).collect();
        Ok(FiniteMonoid { table, identity, names })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, MonoidError> {
        if names.len() != self.size() {
            return Err(MonoidError::Names { expected: self.size(), found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The opposite monoid (transposed table).
    pub fn opposite(&self) -> FiniteMonoid {
        let n = self.size();
        let table = (0..n).map(|a| (0..n).map(|b| self.table[b][a]).collect()).collect();
        FiniteMonoid { table, identity: self.identity, names: self.names.clone() }
    }
}

/// The inverse table when every element has a two-sided inverse.
pub fn is_group(m: &FiniteMonoid) -> Option<Vec<usize>> {
    let n = m.size();
    let e = m.identity();
    (0..n).map(|a| (0..n).find(|&b| m.mul(a, b) == e && m.mul(b, a) == e)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidGabi {
    pub monoid: FiniteMonoid,
    /// `delta[m] = (m₊, m₋)`.
    pub delta: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// `δ` is a monoid map `M → M × M^op`.
    HomLift,
    /// Additionally `m₊ = m`, `m₊m₋ = 1` and `(m₊₊, m₋₊, m₋₋m₊₋) = (m₊, m₋, 1)`.
    FullLift,
}

pub fn check_monoid_gabi(s: &MonoidGabi, level: Level) -> Report {
    let m = &s.monoid;
    let mut report = Report::new();
    if s.delta.len() != m.size() || s.delta.iter().any(|&(p, q)| p >= m.size() || q >= m.size()) {
        report.push("shape", "δ", format!("δ must assign a pair of elements to each of the {} elements", m.size()));
        return report;
    }
    let d = &s.delta;
    let pair = |(p, q): (usize, usize)| format!("({}, {})", m.name(p), m.name(q));
    let e = m.identity();
    if d[e] != (e, e) {
        report.push("unital", m.name(e), format!("δ(1) = {} ≠ (1, 1)", pair(d[e])));
    }
    for a in 0..m.size() {
        for b in 0..m.size() {
            let ab = m.mul(a, b);
            let expect = (m.mul(d[a].0, d[b].0), m.mul(d[b].1, d[a].1));
            if d[ab] != expect {
                report.push(
                    "monoid-map",
                    format!("({}, {})", m.name(a), m.name(b)),
                    format!("δ({}{}) = {} but (a₊b₊, b₋a₋) = {}", m.name(a), m.name(b), pair(d[ab]), pair(expect)),
                );
            }
        }
    }
    if level == Level::FullLift {
        for a in 0..m.size() {
            let (p, q) = d[a];
            if p != a {
                report.push("plus-leg", m.name(a), format!("m₊ = {} ≠ m", m.name(p)));
            }
            if m.mul(p, q) != e {
                report.push("inverse", m.name(a), format!("m₊m₋ = {}·{} = {} ≠ 1", m.name(p), m.name(q), m.name(m.mul(p, q))));
            }
            let lhs = (d[p].0, d[q].0, m.mul(d[q].1, d[p].1));
            if lhs != (p, q, e) {
                report.push(
                    "GA3",
                    m.name(a),
                    format!(
                        "(m₊₊, m₋₊, m₋₋m₊₋) = ({}, {}, {}) but (m₊, m₋, 1) = ({}, {}, {})",
                        m.name(lhs.0),
                        m.name(lhs.1),
                        m.name(lhs.2),
                        m.name(p),
                        m.name(q),
                        m.name(e)
                    ),
                );
            }
        }
    }
    report
}

/// Every condition that mentions only elements `≤ k`, with `k` among them.
fn consistent(m: &FiniteMonoid, d: &[(usize, usize)], k: usize, level: Level) -> bool {
    let e = m.identity();
    let known = |x: usize| x < d.len();
    if k == e && d[e] != (e, e) {
        return false;
    }
    if level == Level::FullLift {
        let (p, q) = d[k];
        if p != k || m.mul(p, q) != e {
            return false;
        }
    }
    for a in 0..=k {
        for b in 0..=k {
            let ab = m.mul(a, b);
            if a != k && b != k && ab != k {
                continue;
            }
            if known(ab) && d[ab] != (m.mul(d[a].0, d[b].0), m.mul(d[b].1, d[a].1)) {
                return false;
            }
        }
    }
    if level == Level::FullLift {
        for a in 0..=k {
            let (p, q) = d[a];
            let touches = a == k || p == k || q == k;
            if touches && known(p) && known(q) && (d[p].0, d[q].0, m.mul(d[q].1, d[p].1)) != (p, q, e) {
                return false;
            }
        }
    }
    true
}

fn extend(m: &FiniteMonoid, level: Level, d: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    let n = m.size();
    let k = d.len();
    if k == n {
        out.push(d.clone());
        return;
    }
    for p in 0..n {
        for q in 0..n {
            d.push((p, q));
            if consistent(m, d, k, level) {
                extend(m, level, d, out);
            }
            d.pop();
        }
    }
}

/// All passing `δ` tables in lexicographic order of the flattened table.
///
/// The cap bounds the raw candidate count `(size²)^size`; the search itself
/// backtracks and visits far fewer.
pub fn search_monoid_gabi(m: &FiniteMonoid, level: Level, cap: u128, exec: Execution) -> Result<Vec<MonoidGabi>, SearchError> {
    let n = m.size();
    let required = ((n * n) as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if required > cap {
        return Err(SearchError::CapExceeded { required, cap });
    }
    let firsts: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect();
    let branches = ordered_map(firsts, exec, |first| {
        let mut out = Vec::new();
        let mut d = vec![first];
        if consistent(m, &d, 0, level) {
            extend(m, level, &mut d, &mut out);
        }
        out
    });
    Ok(branches.into_iter().flatten().map(|delta| MonoidGabi { monoid: m.clone(), delta }).collect())
}

/// `δ(m) = (m, m⁻¹)` when `M` is a group.
pub fn group_gabi(m: &FiniteMonoid) -> Option<MonoidGabi> {
    let inv = is_group(m)?;
    Some(MonoidGabi { monoid: m.clone(), delta: inv.into_iter().enumerate().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::DEFAULT_CAP;
    use crate::fixtures;

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(FiniteMonoid::new(vec![vec![0, 1], vec![1]], 0), Err(MonoidError::Shape { size: 2 }));
        assert_eq!(FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 1), Err(MonoidError::IdentityLaw(0)));
        // 0 identity, 1·1 = 2, 1·2 = 1, 2·1 = 2, 2·2 = 2: (1·1)·1 = 2 but 1·(1·1) = 1.
        let t = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
        assert!(matches!(FiniteMonoid::new(t, 0), Err(MonoidError::Associativity(..))));
    }

    #[test]
    fn is_group_examples() {
        assert_eq!(is_group(&fixtures::cyclic_monoid(3)), Some(vec![0, 2, 1]));
        assert_eq!(is_group(&fixtures::idempotent_monoid()), None);
        assert_eq!(is_group(&fixtures::trivial_monoid()), Some(vec![0]));
    }

    #[test]
    fn check_examples() {
        let c3 = group_gabi(&fixtures::cyclic_monoid(3)).unwrap();
        assert_eq!(c3.delta, vec![(0, 0), (1, 2), (2, 1)]);
        assert!(check_monoid_gabi(&c3, Level::FullLift).passed());
        let c2 = MonoidGabi { monoid: fixtures::cyclic_monoid(2), delta: vec![(0, 0), (1, 1)] };
        assert!(check_monoid_gabi(&c2, Level::FullLift).passed());
        let e = MonoidGabi { monoid: fixtures::idempotent_monoid(), delta: vec![(0, 0), (1, 0)] };
        assert!(check_monoid_gabi(&e, Level::HomLift).passed());
        let r = check_monoid_gabi(&e, Level::FullLift);
        assert!(r.findings.iter().any(|f| f.label == "inverse" && f.witness == "e"), "{r}");
    }

    #[test]
    fn search_examples() {
        let c2 = search_monoid_gabi(&fixtures::cyclic_monoid(2), Level::FullLift, DEFAULT_CAP, Execution::Sequential).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[0].delta, vec![(0, 0), (1, 1)]);
        let e = search_monoid_gabi(&fixtures::idempotent_monoid(), Level::FullLift, DEFAULT_CAP, Execution::Sequential).unwrap();
        assert!(e.is_empty());
        let s3 = fixtures::symmetric_group3();
        assert!(matches!(search_monoid_gabi(&s3, Level::FullLift, DEFAULT_CAP, Execution::Sequential), Err(SearchError::CapExceeded { .. })));
        let all = search_monoid_gabi(&s3, Level::FullLift, u128::MAX, Execution::default()).unwrap();
        assert_eq!(all, vec![group_gabi(&s3).unwrap()]);
    }

    fn brute_force(m: &FiniteMonoid, level: Level) -> Vec<Vec<(usize, usize)>> {
        let n = m.size();
        let total = (n * n).pow(n as u32);
        (0..total)
            .filter_map(|mut code| {
                let mut digits = vec![0; n];
                for k in (0..n).rev() {
                    digits[k] = code % (n * n);
                    code /= n * n;
                }
                let delta: Vec<_> = digits.iter().map(|&x| (x / n, x % n)).collect();
                check_monoid_gabi(&MonoidGabi { monoid: m.clone(), delta: delta.clone() }, level).passed().then_some(delta)
            })
            .collect()
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for (_, m) in fixtures::monoid_corpus().into_iter().filter(|(_, m)| m.size() <= 4) {
            for level in [Level::HomLift, Level::FullLift] {
                for exec in [Execution::Sequential, Execution::Parallel] {
                    let got: Vec<_> = search_monoid_gabi(&m, level, DEFAULT_CAP, exec).unwrap().into_iter().map(|g| g.delta).collect();
                    assert_eq!(got, brute_force(&m, level));
                }
            }
        }
    }
}
