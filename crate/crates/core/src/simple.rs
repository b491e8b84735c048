use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of the simple roots `Π`, stored as a bit mask over 0-based
/// Bourbaki indices. Displayed and serialized as 1-based index lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simple(pub u32);

impl Simple {
    pub const EMPTY: Simple = Simple(0);

    /// All of `Π` for the given rank.
    pub fn all(rank: usize) -> Simple {
        Simple(((1u64 << rank) - 1) as u32)
    }

    /// From 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(idx: I) -> Simple {
        Simple(idx.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// From 1-based Bourbaki labels, validated against `rank`.
    pub fn from_labels(labels: &[usize], rank: usize) -> Result<Simple> {
        let mut m = 0u32;
        for &l in labels {
            if l == 0 || l > rank {
                return Err(Error::SimpleIndex { index: l, rank });
            }
            m |= 1 << (l - 1);
        }
        Ok(Simple(m))
    }

    /// Parses `"1,3"`, `""`, `"-"`, `"none"` or `"all"`.
    pub fn parse(text: &str, rank: usize) -> Result<Simple> {
        let t = text.trim();
        match t {
            "" | "-" | "none" | "empty" => return Ok(Simple::EMPTY),
            "all" | "Π" => return Ok(Simple::all(rank)),
            _ => {}
        }
        let labels = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::SubsetSyntax(text.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Simple::from_labels(&labels, rank)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: Simple) -> Simple {
        Simple(self.0 | o.0)
    }

    pub fn intersection(self, o: Simple) -> Simple {
        Simple(self.0 & o.0)
    }

    pub fn minus(self, o: Simple) -> Simple {
        Simple(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Simple) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Simple) -> bool {
        self.0 & o.0 == 0
    }

    /// 0-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Simple> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Simple(cur))
        })
    }

    /// Every subset of `Π` at the given rank.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = Simple> {
        Simple::all(rank).subsets()
    }
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Simple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}
