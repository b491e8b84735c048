//! Independent reference implementations used only by the tests.
//!
//! Roots are generated by closing the simple roots under simple reflections
//! computed from hand-entered Cartan matrices, and the Weyl group is the
//! closure of the generator permutations of that root list. Nothing here
//! calls into the library except to translate library ids into oracle ids.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use slodowy::{RootSystem, Simple, WeylGroup};

pub type Perm = Vec<u16>;

/// `A[i][j] = <α_i, α_j^∨>`, Bourbaki numbering.
pub fn cartan(label: &str) -> Vec<Vec<i32>> {
    let (kind, n) = label.split_at(1);
    let n: usize = n.parse().unwrap();
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match kind {
        "A" => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
        "B" => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        "C" => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        "D" => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        "E" => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (3..n).for_each(|i| link(i - 1, i, -1, -1));
        }
        "F" => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        "G" => link(0, 1, -1, -3),
        _ => panic!("unknown type {label}"),
    }
    a
}

fn reflect(cartan: &[Vec<i32>], b: &[i32], i: usize) -> Vec<i32> {
    let c: i32 = (0..cartan.len()).map(|j| b[j] * cartan[j][i]).sum();
    let mut out = b.to_vec();
    out[i] -= c;
    out
}

/// All roots, as coordinates in the simple roots, by closing `Π` under the
/// simple reflections.
pub fn root_closure(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let rank = cartan.len();
    let mut roots: Vec<Vec<i32>> = (0..rank).map(|i| (0..rank).map(|k| i32::from(k == i)).collect()).collect();
    let mut seen: HashSet<Vec<i32>> = roots.iter().cloned().collect();
    let mut k = 0;
    while k < roots.len() {
        for i in 0..rank {
            let img = reflect(cartan, &roots[k], i);
            if seen.insert(img.clone()) {
                roots.push(img);
            }
        }
        k += 1;
    }
    roots
}

pub struct Oracle {
    pub label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    pub roots: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    pub elems: Vec<Perm>,
    elem_index: HashMap<Perm, usize>,
    /// `left[i][x] = s_i · x`, `right[i][x] = x · s_i`.
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    refl: HashMap<usize, usize>,
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&r| a[r as usize]).collect()
}

impl Oracle {
    pub fn new(label: &str) -> Oracle {
        let cartan = cartan(label);
        let rank = cartan.len();
        let roots = root_closure(&cartan);
        let index: HashMap<Vec<i32>, usize> = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let gens: Vec<Perm> =
            (0..rank).map(|i| roots.iter().map(|r| index[&reflect(&cartan, r, i)] as u16).collect()).collect();
        let id: Perm = (0..roots.len() as u16).collect();
        let mut elems = vec![id.clone()];
        let mut elem_index = HashMap::from([(id, 0usize)]);
        let mut k = 0;
        while k < elems.len() {
            for g in &gens {
                let p = compose(&elems[k], g);
                if !elem_index.contains_key(&p) {
                    elem_index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            k += 1;
        }
        let table = |f: &dyn Fn(&Perm, &Perm) -> Perm| -> Vec<Vec<usize>> {
            gens.iter().map(|g| elems.iter().map(|x| elem_index[&f(x, g)]).collect()).collect()
        };
        let left = table(&|x, g| compose(g, x));
        let right = table(&|x, g| compose(x, g));
        let mut o = Oracle { label: label.into(), rank, cartan, roots, index, elems, elem_index, left, right, refl: HashMap::new() };
        // s_{w(α_i)} = w s_i w⁻¹.
        for x in 0..o.elems.len() {
            for i in 0..rank {
                let beta = o.elems[x][i] as usize;
                if !o.refl.contains_key(&beta) {
                    let r = o.mul(o.mul(x, o.simple_elem(i)), o.inverse(x));
                    o.refl.insert(beta, r);
                }
            }
        }
        o
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn simple_elem(&self, i: usize) -> usize {
        self.right[i][0]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.elem_index[&compose(&self.elems[a], &self.elems[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let p = &self.elems[a];
        let mut inv = vec![0u16; p.len()];
        for (r, &img) in p.iter().enumerate() {
            inv[img as usize] = r as u16;
        }
        self.elem_index[&inv]
    }

    pub fn apply(&self, w: usize, r: usize) -> usize {
        self.elems[w][r] as usize
    }

    pub fn reflection(&self, r: usize) -> usize {
        self.refl[&r]
    }

    pub fn root_id(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, r: usize) -> bool {
        self.roots[r].iter().all(|&c| c >= 0)
    }

    pub fn neg(&self, r: usize) -> usize {
        let c: Vec<i32> = self.roots[r].iter().map(|x| -x).collect();
        self.index[&c]
    }

    pub fn in_span(&self, r: usize, s: Simple) -> bool {
        self.roots[r].iter().enumerate().all(|(k, &c)| c == 0 || s.contains(k))
    }

    pub fn span(&self, s: Simple) -> BTreeSet<usize> {
        (0..self.roots.len()).filter(|&r| self.in_span(r, s)).collect()
    }

    /// `Φ_I ∪ (Φ⁺_J \ Φ_K)`.
    pub fn gamma(&self, i: Simple, j: Simple, k: Simple) -> BTreeSet<usize> {
        (0..self.roots.len())
            .filter(|&r| self.in_span(r, i) || (self.is_positive(r) && self.in_span(r, j) && !self.in_span(r, k)))
            .collect()
    }

    pub fn closed(&self, set: &BTreeSet<usize>) -> bool {
        for &a in set {
            for &b in set {
                let sum: Vec<i32> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
                if let Some(c) = self.root_id(&sum) {
                    if !set.contains(&c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn complement(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.roots.len()).filter(|r| !set.contains(r)).collect()
    }

    pub fn symmetric(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().copied().filter(|&r| set.contains(&self.neg(r))).collect()
    }

    pub fn orthogonal(&self, x: Simple, y: Simple) -> bool {
        x.iter().all(|a| y.iter().all(|b| self.cartan[a][b] == 0))
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = HashSet::from([0usize]);
        let mut out = vec![0];
        let mut k = 0;
        while k < out.len() {
            for &g in gens {
                let p = self.mul(out[k], g);
                if seen.insert(p) {
                    out.push(p);
                }
            }
            k += 1;
        }
        out
    }

    pub fn parabolic(&self, s: Simple) -> Vec<usize> {
        let gens: Vec<usize> = s.iter().map(|i| self.simple_elem(i)).collect();
        self.generated(&gens)
    }

    pub fn reflection_group(&self, roots: &BTreeSet<usize>) -> Vec<usize> {
        let gens: Vec<usize> = roots.iter().map(|&r| self.reflection(r)).collect();
        self.generated(&gens)
    }

    /// For each element, the smallest element of its coset `x·H`.
    pub fn right_coset_labels(&self, h: &[usize]) -> Vec<usize> {
        (0..self.order()).map(|x| h.iter().map(|&u| self.mul(x, u)).min().unwrap()).collect()
    }

    /// For each element, the smallest element of `W_L · x · W_I`, plus the
    /// size of that double coset.
    pub fn double_cosets(&self, l: Simple, i: Simple) -> (Vec<usize>, HashMap<usize, usize>) {
        let mut label = vec![usize::MAX; self.order()];
        let mut sizes = HashMap::new();
        for start in 0..self.order() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut orbit = vec![start];
            let mut seen = HashSet::from([start]);
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for a in l.iter() {
                    let y = self.left[a][x];
                    if seen.insert(y) {
                        orbit.push(y);
                    }
                }
                for b in i.iter() {
                    let y = self.right[b][x];
                    if seen.insert(y) {
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            let m = *orbit.iter().min().unwrap();
            for &x in &orbit {
                label[x] = m;
            }
            sizes.insert(m, orbit.len());
        }
        (label, sizes)
    }

    /// Translation of library ids into oracle ids.
    pub fn bridge(&self, sys: &RootSystem) -> Vec<usize> {
        (0..sys.len()).map(|r| self.root_id(sys.root(r)).expect("library root unknown to the oracle")).collect()
    }

    pub fn elem_of(&self, w: &WeylGroup, bridge: &[usize], x: usize) -> usize {
        let sys = w.root_system();
        let mut p = vec![0u16; self.roots.len()];
        for r in 0..sys.len() {
            p[bridge[r]] = bridge[w.apply(x, r)] as u16;
        }
        self.elem_index[&p]
    }

    pub fn roots_of(&self, bridge: &[usize], set: &slodowy::RootSubset) -> BTreeSet<usize> {
        set.iter().map(|r| bridge[r]).collect()
    }
}

/// Every composition of `n`, built by binary cut positions.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    (0..1u64 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for k in 0..n - 1 {
                if cuts >> k & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// Hanany-Witten move on a plain marker string and gap list.
pub fn hw(branes: &[char], gaps: &[i64], pos: usize) -> Option<(Vec<char>, Vec<i64>)> {
    if pos + 1 >= branes.len() || branes[pos] == branes[pos + 1] {
        return None;
    }
    let get = |k: isize| if k < 0 || k as usize >= gaps.len() { 0 } else { gaps[k as usize] };
    let p = pos as isize;
    let new = get(p - 1) + get(p + 1) + 1 - get(p);
    if new < 0 {
        return None;
    }
    let mut b = branes.to_vec();
    b.swap(pos, pos + 1);
    let mut g = gaps.to_vec();
    g[pos] = new;
    Some((b, g))
}
