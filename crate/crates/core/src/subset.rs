use crate::rootsys::RootId;

const WORDS: usize = 4;

/// Largest root system the bit set can hold (`|Φ(E8)| = 240`).
pub const MAX_ROOTS: usize = 64 * WORDS;

/// A subset of the roots of one root system, kept as a fixed-width bit set.
/// `universe` is `|Φ|` of the owning system and is used to reject mixing
/// subsets of different systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSubset {
    bits: [u64; WORDS],
    universe: u16,
}

impl RootSubset {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_ROOTS);
        RootSubset { bits: [0; WORDS], universe: universe as u16 }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = RootSubset::empty(universe);
        for r in 0..universe {
            s.insert(r);
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = RootId>>(universe: usize, ids: I) -> Self {
        let mut s = RootSubset::empty(universe);
        for r in ids {
            s.insert(r);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn insert(&mut self, r: RootId) {
        assert!(r < self.universe as usize, "root id {r} out of range");
        self.bits[r / 64] |= 1 << (r % 64);
    }

    pub fn remove(&mut self, r: RootId) {
        self.bits[r / 64] &= !(1 << (r % 64));
    }

    pub fn contains(&self, r: RootId) -> bool {
        r < self.universe as usize && self.bits[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Members in increasing root-id order.
    pub fn iter(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.universe as usize).filter(move |&r| self.contains(r))
    }

    pub fn to_vec(&self) -> Vec<RootId> {
        self.iter().collect()
    }

    pub fn same_system(&self, o: &RootSubset) -> bool {
        self.universe == o.universe
    }

    fn zip(&self, o: &RootSubset, f: impl Fn(u64, u64) -> u64) -> RootSubset {
        debug_assert!(self.same_system(o));
        let mut bits = [0; WORDS];
        for (k, b) in bits.iter_mut().enumerate() {
            *b = f(self.bits[k], o.bits[k]);
        }
        RootSubset { bits, universe: self.universe }
    }

    pub fn union(&self, o: &RootSubset) -> RootSubset {
        self.zip(o, |a, b| a | b)
    }

    pub fn intersection(&self, o: &RootSubset) -> RootSubset {
        self.zip(o, |a, b| a & b)
    }

    pub fn difference(&self, o: &RootSubset) -> RootSubset {
        self.zip(o, |a, b| a & !b)
    }

    pub fn is_subset(&self, o: &RootSubset) -> bool {
        self.same_system(o) && (0..WORDS).all(|k| self.bits[k] & !o.bits[k] == 0)
    }

    pub fn is_disjoint(&self, o: &RootSubset) -> bool {
        (0..WORDS).all(|k| self.bits[k] & o.bits[k] == 0)
    }

    /// `Φ \ self`.
    pub fn complement(&self) -> RootSubset {
        RootSubset::full(self.universe()).difference(self)
    }
}
