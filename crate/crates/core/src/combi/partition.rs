use std::fmt;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// A partition inside the `rows × cols` rectangle, stored with exactly `rows` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxPartition {
    rows: usize,
    cols: usize,
    parts: Vec<usize>,
}

impl BoxPartition {
    /// Pads `parts` with zeros to `rows` entries.
    pub fn new(rows: usize, cols: usize, parts: &[usize]) -> Result<Self> {
        let nonzero = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        if nonzero > rows || parts.iter().any(|&p| p > cols) {
            return Err(Error::OutsideBox { parts: parts.to_vec(), rows, cols });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("parts {parts:?} are not weakly decreasing")));
        }
        let mut padded = parts[..nonzero].to_vec();
        padded.resize(rows, 0);
        Ok(Self { rows, cols, parts: padded })
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        Self { rows, cols, parts: vec![0; rows] }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Self { rows, cols, parts: vec![cols; rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` (1-based), zero beyond the stored parts.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Complement in its own box: `λ∨_i = cols − λ_{rows+1−i}`.
    pub fn dual(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, parts: self.parts.iter().rev().map(|&p| self.cols - p).collect() }
    }

    /// Complement inside the `a × b` box: `μ_i = b − λ_{a+1−i}`.
    pub fn dual_in(&self, a: usize, b: usize) -> Result<Self> {
        let fits = (1..=self.rows.max(a)).all(|i| self.part(i) <= if i <= a { b } else { 0 });
        if !fits {
            return Err(Error::OutsideBox { parts: self.parts.clone(), rows: a, cols: b });
        }
        Ok(Self { rows: a, cols: b, parts: (1..=a).map(|i| b - self.part(a + 1 - i)).collect() })
    }

    /// The same parts viewed in another box.
    pub fn rebox(&self, rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, &self.parts)
    }

    /// Componentwise order `λ_i ≤ μ_i`.
    pub fn leq(&self, other: &Self) -> bool {
        (1..=self.rows.max(other.rows)).all(|i| self.part(i) <= other.part(i))
    }

    /// The Grassmannian permutation `w_λ` in `S_{rows+cols}`: `w_λ(i) = λ_{rows+1−i} + i` for
    /// `i ≤ rows`, remaining values increasing.
    pub fn to_perm(&self) -> Permutation {
        let (k, n) = (self.rows, self.rows + self.cols);
        let mut oneline: Vec<usize> = (1..=k).map(|i| self.part(k + 1 - i) + i).collect();
        let rest: Vec<usize> = (1..=n).filter(|v| !oneline.contains(v)).collect();
        oneline.extend(rest);
        Permutation::new(oneline).expect("Grassmannian permutation is a bijection")
    }

    /// Every partition in the box, ordered by `(λ_rows, …, λ_1)` lexicographically; for the
    /// `2 × 2` box this is `00, 10, 20, 11, 21, 22`.
    pub fn all(rows: usize, cols: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut parts = vec![0; rows];
        fill(&mut parts, 0, cols, &mut out);
        let mut out: Vec<Self> = out.into_iter().map(|parts| Self { rows, cols, parts }).collect();
        out.sort_by(|a, b| a.parts.iter().rev().cmp(b.parts.iter().rev()));
        out
    }
}

fn fill(parts: &mut Vec<usize>, i: usize, max: usize, out: &mut Vec<Vec<usize>>) {
    if i == parts.len() {
        out.push(parts.clone());
        return;
    }
    for p in 0..=max {
        parts[i] = p;
        fill(parts, i + 1, p, out);
    }
    parts[i] = 0;
}

impl fmt::Display for BoxPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses comma-separated parts such as `2,1`.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(rows: usize, cols: usize, parts: &[usize]) -> BoxPartition {
        BoxPartition::new(rows, cols, parts).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(bp(2, 2, &[2, 1]).dual(), bp(2, 2, &[1, 0]));
        assert_eq!(bp(3, 4, &[]).dual(), BoxPartition::full(3, 4));
        assert_eq!(bp(2, 2, &[2, 2]).dual(), bp(2, 2, &[0, 0]));
    }

    #[test]
    fn box_dual_examples() {
        assert_eq!(bp(2, 2, &[1]).dual_in(1, 2).unwrap(), bp(1, 2, &[1]));
        assert_eq!(bp(2, 2, &[0, 0]).dual_in(2, 1).unwrap(), bp(2, 1, &[1, 1]));
        assert_eq!(bp(2, 2, &[2, 0]).dual_in(2, 2).unwrap(), bp(2, 2, &[2, 0]));
        assert!(bp(2, 2, &[1, 1]).dual_in(1, 2).is_err());
        assert!(bp(2, 2, &[2]).dual_in(2, 1).is_err());
    }

    #[test]
    fn order_examples() {
        assert!(bp(2, 2, &[1, 0]).leq(&bp(2, 2, &[2, 1])));
        assert!(!bp(2, 2, &[2, 1]).leq(&bp(2, 2, &[2, 0])));
        let l = bp(2, 3, &[3, 1]);
        assert!(l.leq(&l));
    }

    #[test]
    fn grassmannian_permutations() {
        assert_eq!(bp(2, 2, &[1, 0]).to_perm().oneline(), [1, 3, 2, 4]);
        assert!(bp(3, 2, &[]).to_perm().is_identity());
        assert_eq!(bp(2, 2, &[2, 2]).to_perm().oneline(), [3, 4, 1, 2]);
    }

    #[test]
    fn validation() {
        assert!(BoxPartition::new(2, 2, &[3]).is_err());
        assert!(BoxPartition::new(2, 2, &[1, 1, 1]).is_err());
        assert!(BoxPartition::new(2, 2, &[1, 2]).is_err());
        assert_eq!(bp(2, 2, &[1, 0, 0, 0]).parts(), [1, 0]);
        assert_eq!(parse_parts("2, 1").unwrap(), vec![2, 1]);
        assert!(parse_parts("2,x").is_err());
    }

    #[test]
    fn enumeration_order() {
        let names: Vec<String> = BoxPartition::all(2, 2).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["0,0", "1,0", "2,0", "1,1", "2,1", "2,2"]);
        assert_eq!(BoxPartition::all(2, 3).len(), 10);
        assert_eq!(BoxPartition::all(3, 3).len(), 20);
    }

    #[test]
    fn duality_properties_on_small_boxes() {
        for (k, m) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let all = BoxPartition::all(k, m);
            let mut perms = std::collections::BTreeSet::new();
            for l in &all {
                assert_eq!(l.dual().dual(), *l);
                assert_eq!(l.weight() + l.dual().weight(), k * m);
                for mu in &all {
                    assert_eq!(l.leq(mu), mu.dual().leq(&l.dual()));
                }
                let w = l.to_perm();
                assert_eq!(w.length(), l.weight());
                let descents: Vec<usize> = (1..k + m).filter(|&i| w.has_right_descent(i)).collect();
                assert!(descents.is_empty() || descents == [k]);
                perms.insert(w);
            }
            assert_eq!(perms.len(), all.len());
            for a in 1..=k {
                for b in 1..=m {
                    for l in BoxPartition::all(a, b) {
                        let d = l.dual_in(a, b).unwrap();
                        assert_eq!(d.dual_in(a, b).unwrap(), l);
                        assert_eq!(d.weight() + l.weight(), a * b);
                    }
                }
            }
        }
    }
}
