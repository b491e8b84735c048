//! Weyl groups as permutation groups on root ids.
//!
//! Elements are numbered in a fixed global order: by length, then by the
//! lexicographically smallest reduced word. The identity is element 0 and the
//! simple reflection `s_i` is element `i + 1`.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootId, RootSystem};
use crate::simple::Simple;
use crate::subset::RootSubset;

pub type ElemId = usize;

/// Key of an element: images of the simple roots, packed 16 bits each. Rank
/// is at most 8, so this fits in a `u128`.
type Key = u128;

#[derive(Debug, Clone)]
pub struct WeylGroup {
    sys: RootSystem,
    n_roots: usize,
    perms: Vec<u16>,
    index: HashMap<Key, u32>,
    length: Vec<u16>,
    /// Lex-smallest reduced word of `e` ends with `last[e]`, after `parent[e]`.
    parent: Vec<u32>,
    last: Vec<u8>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
}

/// Enumerates `W`. The caller is responsible for the size guard, which
/// `RootSystem::build` already enforces.
pub fn enumerate_weyl(sys: &RootSystem) -> WeylGroup {
    WeylGroup::new(sys.clone())
}

fn pack(images: impl Iterator<Item = u16>) -> Key {
    images.enumerate().fold(0, |k, (i, r)| k | (r as Key) << (16 * i))
}

impl WeylGroup {
    pub fn new(sys: RootSystem) -> WeylGroup {
        let n = sys.len();
        let rank = sys.rank();
        let refl: Vec<Vec<u16>> = (0..rank).map(|i| sys.simple_reflection(i).to_vec()).collect();

        let identity: Vec<u16> = (0..n as u16).collect();
        let mut perms = identity.clone();
        let mut index = HashMap::new();
        index.insert(pack(identity[..rank].iter().copied()), 0u32);
        let mut length = vec![0u16];
        let mut parent = vec![u32::MAX];
        let mut last = vec![u8::MAX];

        let mut level = 0..1usize;
        let mut len = 0u16;
        while !level.is_empty() {
            // Candidates w·s_i with w(α_i) > 0, in (w, i) order so the first
            // hit for each new element carries its lex-smallest word.
            let cands: Vec<(u32, u8, Key)> = level
                .clone()
                .into_par_iter()
                .flat_map_iter(|w| {
                    let p = &perms[w * n..(w + 1) * n];
                    let (refl, sys) = (&refl, &sys);
                    (0..rank).filter_map(move |i| {
                        if !sys.is_positive(p[i] as usize) {
                            return None;
                        }
                        let key = pack((0..rank).map(|j| p[refl[i][j] as usize]));
                        Some((w as u32, i as u8, key))
                    })
                })
                .collect();
            let start = length.len();
            len += 1;
            for (w, i, key) in cands {
                if index.contains_key(&key) {
                    continue;
                }
                let id = length.len() as u32;
                index.insert(key, id);
                let w = w as usize;
                let s = &refl[i as usize];
                let new: Vec<u16> = (0..n).map(|b| perms[w * n + s[b] as usize]).collect();
                perms.extend_from_slice(&new);
                length.push(len);
                parent.push(w as u32);
                last.push(i);
            }
            level = start..length.len();
        }

        let order = length.len();
        let mut g = WeylGroup {
            sys,
            n_roots: n,
            perms,
            index,
            length,
            parent,
            last,
            right: Vec::new(),
            left: Vec::new(),
            inverse: Vec::new(),
        };
        let tables: Vec<(Vec<u32>, Vec<u32>, u32)> = (0..order)
            .into_par_iter()
            .map(|w| {
                let p = g.perm(w);
                let right = (0..rank)
                    .map(|i| g.lookup(pack((0..rank).map(|j| p[refl[i][j] as usize]))))
                    .collect();
                let left = (0..rank)
                    .map(|i| g.lookup(pack((0..rank).map(|j| refl[i][p[j] as usize]))))
                    .collect();
                let mut inv = vec![0u16; n];
                for (b, &img) in p.iter().enumerate() {
                    inv[img as usize] = b as u16;
                }
                (right, left, g.lookup(pack(inv[..rank].iter().copied())))
            })
            .collect();
        g.right.reserve(order * rank);
        g.left.reserve(order * rank);
        g.inverse.reserve(order);
        for (r, l, i) in tables {
            g.right.extend(r);
            g.left.extend(l);
            g.inverse.push(i);
        }
        g
    }

    fn lookup(&self, key: Key) -> u32 {
        self.index[&key]
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// Id of `s_i` (0-based `i`).
    pub fn simple_reflection(&self, i: usize) -> ElemId {
        self.right[i] as ElemId
    }

    /// One-line permutation of root ids.
    pub fn perm(&self, w: ElemId) -> &[u16] {
        &self.perms[w * self.n_roots..(w + 1) * self.n_roots]
    }

    /// `w(r)`.
    pub fn apply(&self, w: ElemId, r: RootId) -> RootId {
        self.perms[w * self.n_roots + r] as RootId
    }

    /// `w⁻¹(α_j)`, the quantity all coset conditions are phrased in.
    pub fn inv_simple(&self, w: ElemId, j: usize) -> RootId {
        self.apply(self.inverse(w), j)
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.length[w] as usize
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        self.inverse[w] as ElemId
    }

    /// `w·s_i`.
    pub fn mul_simple_right(&self, w: ElemId, i: usize) -> ElemId {
        self.right[w * self.rank() + i] as ElemId
    }

    /// `s_i·w`.
    pub fn mul_simple_left(&self, i: usize, w: ElemId) -> ElemId {
        self.left[w * self.rank() + i] as ElemId
    }

    /// `a·b`.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let pa = self.perm(a);
        let pb = self.perm(b);
        self.lookup(pack((0..self.rank()).map(|j| pa[pb[j] as usize]))) as ElemId
    }

    /// Element with the given permutation, if it lies in `W`.
    pub fn find_perm(&self, perm: &[u16]) -> Option<ElemId> {
        let id = *self.index.get(&pack(perm[..self.rank()].iter().copied()))? as ElemId;
        (self.perm(id) == perm).then_some(id)
    }

    /// Reflection `s_α` for an arbitrary root.
    pub fn reflection(&self, alpha: RootId) -> ElemId {
        let r = self.rank();
        self.lookup(pack((0..r).map(|j| self.sys.reflect(alpha, j) as u16))) as ElemId
    }

    /// Lex-smallest reduced word, 0-based letters.
    pub fn word(&self, w: ElemId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != 0 {
            out.push(self.last[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        out.reverse();
        out
    }

    /// `"s1 s2 s1"`, or `"e"` for the identity.
    pub fn word_string(&self, w: ElemId) -> String {
        if w == 0 {
            return "e".to_string();
        }
        self.word(w).iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }

    /// Element with the given word (0-based letters, need not be reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        let mut w = 0;
        for &i in word {
            if i >= self.rank() {
                return Err(Error::SimpleIndex { index: i + 1, rank: self.rank() });
            }
            w = self.mul_simple_right(w, i);
        }
        Ok(w)
    }

    /// Parses `"s1 s2"`, `"1 2"`, `"1,2"` or `"e"`.
    pub fn parse_word(&self, text: &str) -> Result<ElemId> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(0);
        }
        let letters = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                let l: usize =
                    p.trim_start_matches('s').parse().map_err(|_| Error::SubsetSyntax(text.to_string()))?;
                if l == 0 {
                    return Err(Error::SimpleIndex { index: 0, rank: self.rank() });
                }
                Ok(l - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_word(&letters)
    }

    /// Length computed from the permutation: `|{α > 0 : w(α) < 0}|`.
    pub fn inversion_count(&self, w: ElemId) -> usize {
        (0..self.sys.positive_count()).filter(|&r| !self.sys.is_positive(self.apply(w, r))).count()
    }

    /// Image of a root subset.
    pub fn apply_subset(&self, w: ElemId, s: &RootSubset) -> RootSubset {
        RootSubset::from_ids(self.n_roots, s.iter().map(|r| self.apply(w, r)))
    }

    /// Subgroup generated by `{s_α : α ∈ A}`, sorted.
    pub fn reflection_subgroup(&self, a: &RootSubset) -> Vec<ElemId> {
        let mut gens: Vec<ElemId> = a.iter().map(|r| self.reflection(r)).collect();
        gens.sort_unstable();
        gens.dedup();
        self.closure(|w, out| out.extend(gens.iter().map(|&g| self.mul(g, w))))
    }

    /// `W_I`, sorted.
    pub fn parabolic_subgroup(&self, s: Simple) -> Vec<ElemId> {
        self.closure(|w, out| out.extend(s.iter().map(|i| self.mul_simple_right(w, i))))
    }

    fn closure(&self, step: impl Fn(ElemId, &mut Vec<ElemId>)) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0]);
        let mut buf = Vec::new();
        while let Some(w) = queue.pop_front() {
            buf.clear();
            step(w, &mut buf);
            for &v in &buf {
                if !seen[v] {
                    seen[v] = true;
                    out.push(v);
                    queue.push_back(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `W_L · w · W_I`, sorted.
    pub fn double_coset(&self, l: Simple, i: Simple, w: ElemId) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        seen[w] = true;
        let mut out = vec![w];
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            let nbrs = l.iter().map(|j| self.mul_simple_left(j, x)).chain(i.iter().map(|j| self.mul_simple_right(x, j)));
            for v in nbrs.collect::<Vec<_>>() {
                if !seen[v] {
                    seen[v] = true;
                    out.push(v);
                    queue.push_back(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Right cosets `W/W_I` (`side = Right`) or left cosets `W_I\W`.
    pub fn coset_space(&self, i: Simple, side: Side) -> CosetSpace {
        CosetSpace::parabolic(self, i, side)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `W_I\W`.
    Left,
    /// `W/W_I`.
    Right,
}

/// Sign in the two embeddings of free double cosets into `W/W_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// A coset space of `W` by a subgroup, each coset named by its smallest
/// element in the global order. For parabolic subgroups that element is the
/// unique minimal-length representative.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    side: Side,
    parabolic: Option<Simple>,
    subgroup: Vec<ElemId>,
    reps: Vec<ElemId>,
    assign: Vec<u32>,
}

impl CosetSpace {
    /// Cosets of `W_I`, representatives picked by the root condition.
    pub fn parabolic(w: &WeylGroup, i: Simple, side: Side) -> CosetSpace {
        let is_rep = |x: ElemId| {
            let y = if side == Side::Right { x } else { w.inverse(x) };
            i.iter().all(|j| w.sys.is_positive(w.apply(y, j)))
        };
        let reps: Vec<ElemId> = (0..w.order()).filter(|&x| is_rep(x)).collect();
        let mut assign = vec![u32::MAX; w.order()];
        for (c, &r) in reps.iter().enumerate() {
            assign[r] = c as u32;
        }
        // Every element reduces to its representative by descents inside I.
        for x in 0..w.order() {
            if assign[x] != u32::MAX {
                continue;
            }
            let mut y = x;
            'reduce: loop {
                for j in i.iter() {
                    match side {
                        Side::Right if !w.sys.is_positive(w.apply(y, j)) => {
                            y = w.mul_simple_right(y, j);
                            continue 'reduce;
                        }
                        Side::Left if !w.sys.is_positive(w.inv_simple(y, j)) => {
                            y = w.mul_simple_left(j, y);
                            continue 'reduce;
                        }
                        _ => {}
                    }
                }
                break;
            }
            assign[x] = assign[y];
        }
        CosetSpace { side, parabolic: Some(i), subgroup: w.parabolic_subgroup(i), reps, assign }
    }

    /// Cosets of an arbitrary subgroup given by its sorted element list.
    pub fn of_subgroup(w: &WeylGroup, subgroup: Vec<ElemId>, side: Side) -> CosetSpace {
        let mut assign = vec![u32::MAX; w.order()];
        let mut reps = Vec::new();
        for x in 0..w.order() {
            if assign[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &h in &subgroup {
                let y = if side == Side::Right { w.mul(x, h) } else { w.mul(h, x) };
                assign[y] = c;
            }
        }
        CosetSpace { side, parabolic: None, subgroup, reps, assign }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn parabolic_set(&self) -> Option<Simple> {
        self.parabolic
    }

    pub fn subgroup(&self) -> &[ElemId] {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[ElemId] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> ElemId {
        self.reps[c]
    }

    /// Index of the coset containing `w`.
    pub fn coset_of(&self, w: ElemId) -> usize {
        self.assign[w] as usize
    }

    /// All elements of coset `c`, sorted.
    pub fn members(&self, g: &WeylGroup, c: usize) -> Vec<ElemId> {
        let r = self.reps[c];
        let mut out: Vec<ElemId> = self
            .subgroup
            .iter()
            .map(|&h| if self.side == Side::Right { g.mul(r, h) } else { g.mul(h, r) })
            .collect();
        out.sort_unstable();
        out
    }
}

/// `w⁻¹(α_j)` lands in `Φ⁺\Φ_I` (plus) or `Φ⁻\Φ_I` (minus) for every `j ∈ L`.
pub fn free_condition(g: &WeylGroup, l: Simple, i: Simple, sign: Sign, w: ElemId) -> bool {
    let sys = g.root_system();
    let inv = g.inverse(w);
    l.iter().all(|j| {
        let r = g.apply(inv, j);
        sys.is_positive(r) == (sign == Sign::Plus) && !sys.in_span(r, i)
    })
}

/// `(W_L\W/W_I)^free` embedded in `W/W_I` with the given sign, as sorted coset
/// indices of `g.coset_space(i, Side::Right)`.
pub fn free_double_cosets(g: &WeylGroup, l: Simple, i: Simple, sign: Sign) -> Vec<usize> {
    let space = g.coset_space(i, Side::Right);
    free_double_cosets_in(g, &space, l, sign)
}

pub fn free_double_cosets_in(g: &WeylGroup, space: &CosetSpace, l: Simple, sign: Sign) -> Vec<usize> {
    let i = space.parabolic.expect("parabolic coset space");
    (0..space.len()).filter(|&c| free_condition(g, l, i, sign, space.rep(c))).collect()
}

/// Checks the free condition on every element of every coset, not just the
/// representative. Returns the member set, or the first coset where it varies.
pub fn free_double_cosets_checked(g: &WeylGroup, l: Simple, i: Simple, sign: Sign) -> Result<Vec<usize>> {
    let space = g.coset_space(i, Side::Right);
    let mut out = Vec::new();
    for c in 0..space.len() {
        let want = free_condition(g, l, i, sign, space.rep(c));
        for x in space.members(g, c) {
            if free_condition(g, l, i, sign, x) != want {
                return Err(Error::NonConstantCoset(g.word_string(space.rep(c))));
            }
        }
        if want {
            out.push(c);
        }
    }
    Ok(out)
}

/// `|W_L w W_I| = |W_L|·|W_I|`, by direct orbit enumeration.
pub fn orbit_freeness(g: &WeylGroup, l: Simple, i: Simple, w: ElemId) -> bool {
    let orbit = g.double_coset(l, i, w).len();
    orbit == g.parabolic_subgroup(l).len() * g.parabolic_subgroup(i).len()
}

/// Smallest element of each free `W_L × W_I` orbit, sorted. Independent of the
/// root conditions: orbits are enumerated and measured directly.
pub fn free_orbit_minima(g: &WeylGroup, l: Simple, i: Simple) -> Vec<ElemId> {
    let full = g.parabolic_subgroup(l).len() * g.parabolic_subgroup(i).len();
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for w in 0..g.order() {
        if seen[w] {
            continue;
        }
        let orbit = g.double_coset(l, i, w);
        for &x in &orbit {
            seen[x] = true;
        }
        if orbit.len() == full {
            out.push(w);
        }
    }
    out
}
