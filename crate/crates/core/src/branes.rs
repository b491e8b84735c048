//! Type A brane diagrams: D5 and NS5 markers with multiplicities between them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Brane {
    /// D5 brane.
    D,
    /// NS5 brane.
    N,
}

impl Brane {
    pub fn swapped(self) -> Brane {
        match self {
            Brane::D => Brane::N,
            Brane::N => Brane::D,
        }
    }
}

/// `branes.len() == gaps.len() + 1`; the outer regions are implicitly 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraneDiagram {
    branes: Vec<Brane>,
    gaps: Vec<u64>,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Brane(msg.into())
}

impl BraneDiagram {
    pub fn new(branes: Vec<Brane>, gaps: Vec<u64>) -> Result<Self> {
        if branes.is_empty() {
            return Err(err("a diagram needs at least one brane"));
        }
        if gaps.len() + 1 != branes.len() {
            return Err(err(format!("{} branes need {} gaps, got {}", branes.len(), branes.len() - 1, gaps.len())));
        }
        Ok(BraneDiagram { branes, gaps })
    }

    /// Strict grammar `marker (INT marker)*` with `marker := D | N`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut branes = Vec::new();
        let mut gaps = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            if pos % 2 == 0 {
                branes.push(match tok {
                    "D" => Brane::D,
                    "N" => Brane::N,
                    _ => return Err(err(format!("expected `D` or `N` at token {}, found `{tok}`", pos + 1))),
                });
            } else {
                if tok.starts_with('-') && tok[1..].chars().all(|c| c.is_ascii_digit()) && tok.len() > 1 {
                    return Err(err(format!("negative gap `{tok}`")));
                }
                if !tok.chars().all(|c| c.is_ascii_digit()) {
                    return Err(err(format!("expected a gap at token {}, found `{tok}`", pos + 1)));
                }
                gaps.push(tok.parse().map_err(|_| err(format!("gap `{tok}` out of range")))?);
            }
        }
        if branes.len() == gaps.len() {
            return Err(err("diagram must end with a brane"));
        }
        BraneDiagram::new(branes, gaps)
    }

    pub fn branes(&self) -> &[Brane] {
        &self.branes
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.branes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branes.is_empty()
    }

    /// `(#D5, #NS5)`.
    pub fn counts(&self) -> (usize, usize) {
        let d = self.branes.iter().filter(|&&b| b == Brane::D).count();
        (d, self.branes.len() - d)
    }

    fn gap(&self, k: isize) -> i64 {
        if k < 0 {
            0
        } else {
            self.gaps.get(k as usize).map_or(0, |&g| g as i64)
        }
    }

    /// Whether the move at `pos` is defined (mixed pair, nonnegative result).
    pub fn hw_legal(&self, pos: usize) -> bool {
        self.hw_move(pos).is_ok()
    }

    /// Hanany-Witten move on branes `pos` and `pos + 1`:
    /// `d1 D d2 N d3 ↔ d1 N (d1 + d3 + 1 − d2) D d3`.
    pub fn hw_move(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.branes.len() {
            return Err(err(format!("position {pos} has no right neighbour")));
        }
        if self.branes[pos] == self.branes[pos + 1] {
            return Err(err(format!("branes {pos} and {} have the same color", pos + 1)));
        }
        let p = pos as isize;
        let d2 = self.gap(p);
        let new = self.gap(p - 1) + self.gap(p + 1) + 1 - d2;
        if new < 0 {
            return Err(err(format!("move at {pos} gives negative multiplicity {new}")));
        }
        let mut out = self.clone();
        out.branes.swap(pos, pos + 1);
        out.gaps[pos] = new as u64;
        Ok(out)
    }

    /// All NS5 branes left of all D5 branes.
    pub fn is_separated(&self) -> bool {
        self.branes.windows(2).all(|w| !(w[0] == Brane::D && w[1] == Brane::N))
    }

    /// Positions of `D N` pairs.
    pub fn dn_positions(&self) -> Vec<usize> {
        (0..self.branes.len().saturating_sub(1))
            .filter(|&k| self.branes[k] == Brane::D && self.branes[k + 1] == Brane::N)
            .collect()
    }

    /// Moves every D5 to the right of every NS5, always taking the leftmost
    /// `D N` pair.
    pub fn normalize_separated(&self) -> Result<Self> {
        let mut cur = self.clone();
        while let Some(&pos) = cur.dn_positions().first() {
            cur = cur.hw_move(pos)?;
        }
        Ok(cur)
    }

    /// Same as [`normalize_separated`](Self::normalize_separated) but picks
    /// among the legal `D N` moves with `choose`. Fails if no move is legal.
    pub fn normalize_with(&self, mut choose: impl FnMut(&[usize]) -> usize) -> Result<Self> {
        let mut cur = self.clone();
        loop {
            let pending = cur.dn_positions();
            if pending.is_empty() {
                return Ok(cur);
            }
            let legal: Vec<usize> = pending.into_iter().filter(|&p| cur.hw_legal(p)).collect();
            if legal.is_empty() {
                return Err(err(format!("stuck at `{cur}`: every remaining move is negative")));
            }
            cur = cur.hw_move(legal[choose(&legal)])?;
        }
    }

    /// Swaps every marker; gaps unchanged.
    pub fn mirror_dual(&self) -> Self {
        BraneDiagram { branes: self.branes.iter().map(|b| b.swapped()).collect(), gaps: self.gaps.clone() }
    }

    /// For `N … N m0 D … D`: `(m0, m−1, …)` read leftwards and `(m0, m1, …)`
    /// read rightwards.
    pub fn split_separated(&self) -> Result<(Vec<u64>, Vec<u64>)> {
        let (d, n) = self.counts();
        if d == 0 || n == 0 {
            return Err(err("split needs at least one brane of each color; use split_at"));
        }
        if !self.is_separated() {
            return Err(err("diagram is not separated"));
        }
        self.split_at(n - 1)
    }

    /// Splits at gap `k`: `(g_k, g_{k−1}, …, g_0)` and `(g_k, g_{k+1}, …)`.
    pub fn split_at(&self, k: usize) -> Result<(Vec<u64>, Vec<u64>)> {
        if k >= self.gaps.len() {
            return Err(err(format!("no gap at position {k}")));
        }
        let minus = self.gaps[..=k].iter().rev().copied().collect();
        let plus = self.gaps[k..].to_vec();
        Ok((minus, plus))
    }
}

impl FromStr for BraneDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BraneDiagram::parse(s)
    }
}

impl fmt::Display for BraneDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.branes.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", self.gaps[k - 1])?;
            }
            f.write_str(match b {
                Brane::D => "D",
                Brane::N => "N",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(s: &str) -> BraneDiagram {
        BraneDiagram::parse(s).unwrap()
    }

    #[test]
    fn parse_and_format() {
        let d = dg("D 2 N 3 D 1 D 5 N 7 D");
        assert_eq!(d.len(), 6);
        assert_eq!(d.gaps(), &[2, 3, 1, 5, 7]);
        assert_eq!(dg("  D   3 D ").to_string(), "D 3 D");
        assert_eq!(dg("N").gaps(), &[] as &[u64]);
        for bad in ["", "D 3", "X", "D -1 N", "D x N", "D 3 3 N", "3 D"] {
            assert!(matches!(BraneDiagram::parse(bad), Err(Error::Brane(_))), "{bad}");
        }
    }

    #[test]
    fn hw_examples() {
        let d = dg("D 2 N 3 D 1 D 5 N 7 D");
        let m = d.hw_move(1).unwrap();
        assert_eq!(m.gaps(), &[2, 1, 1, 5, 7]);
        assert_eq!(m.to_string(), "D 2 D 1 N 1 D 5 N 7 D");
        assert_eq!(m.hw_move(1).unwrap(), d);
        assert_eq!(dg("D 1 N").hw_move(0).unwrap().to_string(), "N 0 D");
        assert!(dg("D 1 D").hw_move(0).is_err());
        assert!(dg("D 3 N").hw_move(0).is_err());
        assert!(dg("D").hw_move(0).is_err());
    }

    #[test]
    fn normalization() {
        assert!(matches!(dg("D 3 N").normalize_separated(), Err(Error::Brane(_))));
        assert_eq!(dg("N 2 D").normalize_separated().unwrap().to_string(), "N 2 D");
        assert_eq!(dg("D 0 N").normalize_separated().unwrap().to_string(), "N 1 D");
        let n = dg("D 1 D 2 N 1 N").normalize_separated().unwrap();
        assert!(n.is_separated());
        assert_eq!(n.counts(), (2, 2));
    }

    #[test]
    fn mirror_and_split() {
        assert_eq!(dg("D 3 D").mirror_dual().to_string(), "N 3 N");
        assert_eq!(dg("D 2 N 3 D").mirror_dual().to_string(), "N 2 D 3 N");
        assert_eq!(dg("N 1 N 2 D 1 D").split_separated().unwrap(), (vec![2, 1], vec![2, 1]));
        assert_eq!(dg("N 5 D").split_separated().unwrap(), (vec![5], vec![5]));
        assert!(dg("D 3 D").split_separated().is_err());
        assert!(dg("D 1 N").split_separated().is_err());
        assert_eq!(dg("D 3 D 4 D").split_at(1).unwrap(), (vec![4, 3], vec![4]));
        assert!(dg("D").split_at(0).is_err());
    }
}
