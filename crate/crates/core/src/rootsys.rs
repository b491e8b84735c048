//! Finite crystallographic root systems.
//!
//! Roots are integer coordinate vectors in the basis of simple roots. The
//! first `|Φ⁺|` root ids are the positive roots ordered by height (the simple
//! roots come first, in Bourbaki order); id `r + |Φ⁺|` is `-root(r)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::simple::Simple;
use crate::subset::{RootSubset, MAX_ROOTS};

pub type RootId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// `|W|` from the classical formulas.
    pub fn weyl_order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(8) => 696_729_600,
            CartanType::E(_) => unreachable!("validated at parse time"),
            CartanType::F4 => 1152,
            CartanType::G2 => 12,
        }
    }

    /// `|Φ|` from the classical formulas.
    pub fn root_count(self) -> usize {
        match self {
            CartanType::A(n) => n * (n + 1),
            CartanType::B(n) | CartanType::C(n) => 2 * n * n,
            CartanType::D(n) => 2 * n * (n - 1),
            CartanType::E(6) => 72,
            CartanType::E(7) => 126,
            CartanType::E(8) => 240,
            CartanType::E(_) => unreachable!("validated at parse time"),
            CartanType::F4 => 48,
            CartanType::G2 => 12,
        }
    }

    /// Langlands dual type together with the relabeling of simple roots
    /// (0-based) that transports a subset of `Π` to the dual base.
    pub fn dual(self) -> (CartanType, Vec<usize>) {
        let n = self.rank();
        match self {
            CartanType::B(n) => (CartanType::C(n), (0..n).collect()),
            CartanType::C(n) => (CartanType::B(n), (0..n).collect()),
            CartanType::F4 => (CartanType::F4, vec![3, 2, 1, 0]),
            CartanType::G2 => (CartanType::G2, vec![1, 0]),
            t => (t, (0..n).collect()),
        }
    }

    /// Symmetric bilinear form on simple roots, scaled to integers, in
    /// Bourbaki numbering.
    fn gram(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self {
            CartanType::A(_) | CartanType::D(_) | CartanType::E(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                match self {
                    CartanType::A(_) => (1..n).for_each(|i| link(&mut g, i - 1, i, -1)),
                    CartanType::D(_) => {
                        (1..n - 1).for_each(|i| link(&mut g, i - 1, i, -1));
                        link(&mut g, n - 3, n - 1, -1);
                    }
                    _ => {
                        link(&mut g, 0, 2, -1);
                        link(&mut g, 1, 3, -1);
                        (3..n).for_each(|i| link(&mut g, i - 1, i, -1));
                    }
                }
            }
            CartanType::B(_) => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 2 } else { 4 };
                }
                (1..n).for_each(|i| link(&mut g, i - 1, i, -2));
            }
            CartanType::C(_) => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 4 } else { 2 };
                }
                (1..n).for_each(|i| link(&mut g, i - 1, i, if i + 1 == n { -2 } else { -1 }));
            }
            CartanType::F4 => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            CartanType::G2 => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = match (letter, n) {
            ('A', n) if n >= 1 => CartanType::A(n),
            ('B', n) if n >= 2 => CartanType::B(n),
            ('C', n) if n >= 2 => CartanType::C(n),
            ('D', n) if n >= 4 => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

/// A finite root system with its pairing, reflection and addition tables.
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i32>>,
    n_pos: usize,
    index: HashMap<Vec<i32>, RootId>,
    support: Vec<u32>,
    /// `(α, β)` for all pairs, row-major.
    pairing: Vec<i64>,
    /// Root id of `α + β` when it is a root, row-major.
    sums: Vec<Option<u16>>,
    /// For each simple reflection, the induced permutation of root ids.
    reflections: Vec<Vec<u16>>,
}

/// Builds a root system from a type label using the default configuration.
pub fn build_root_system(label: &str) -> Result<RootSystem> {
    RootSystem::build(label, &Config::from_env())
}

impl RootSystem {
    /// Builds the root system for `label`, rejecting types whose Weyl group is
    /// larger than `cfg.max_weyl_order`.
    pub fn build(label: &str, cfg: &Config) -> Result<RootSystem> {
        let ty: CartanType = label.parse()?;
        let order = ty.weyl_order();
        if order > cfg.max_weyl_order {
            return Err(Error::GuardExceeded { label: ty.to_string(), order, limit: cfg.max_weyl_order });
        }
        Ok(RootSystem::from_type(ty))
    }

    pub fn from_type(ty: CartanType) -> RootSystem {
        let gram = ty.gram();
        let n = ty.rank();
        let pos = positive_roots(&gram);
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        assert!(roots.len() <= MAX_ROOTS);
        let index: HashMap<Vec<i32>, RootId> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let support = roots
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &c)| c != 0).fold(0u32, |m, (i, _)| m | 1 << i))
            .collect();
        let total = roots.len();
        let form = |a: &[i32], b: &[i32]| -> i64 {
            let mut s = 0i64;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] as i64 * gram[i][j] * b[j] as i64;
                }
            }
            s
        };
        let mut pairing = vec![0i64; total * total];
        let mut sums = vec![None; total * total];
        for a in 0..total {
            for b in 0..total {
                pairing[a * total + b] = form(&roots[a], &roots[b]);
                let s: Vec<i32> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                sums[a * total + b] = index.get(&s).map(|&r| r as u16);
            }
        }
        let mut sys = RootSystem {
            cartan_type: ty,
            gram,
            roots,
            n_pos,
            index,
            support,
            pairing,
            sums,
            reflections: Vec::new(),
        };
        sys.reflections = (0..n)
            .map(|i| (0..total).map(|b| sys.reflect(i, b) as u16).collect())
            .collect();
        sys
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn label(&self) -> String {
        self.cartan_type.to_string()
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.n_pos
    }

    /// Coordinates of a root in the simple-root basis.
    pub fn root(&self, r: RootId) -> &[i32] {
        &self.roots[r]
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn find(&self, coords: &[i32]) -> Option<RootId> {
        self.index.get(coords).copied()
    }

    /// Root id of the `i`-th simple root (0-based).
    pub fn simple(&self, i: usize) -> RootId {
        debug_assert!(i < self.rank());
        i
    }

    pub fn simple_roots(&self) -> Vec<RootId> {
        (0..self.rank()).collect()
    }

    pub fn is_positive(&self, r: RootId) -> bool {
        r < self.n_pos
    }

    pub fn negate(&self, r: RootId) -> RootId {
        if r < self.n_pos {
            r + self.n_pos
        } else {
            r - self.n_pos
        }
    }

    pub fn height(&self, r: RootId) -> i32 {
        self.roots[r].iter().sum()
    }

    /// Simple roots with a nonzero coefficient in `r`.
    pub fn support(&self, r: RootId) -> Simple {
        Simple(self.support[r])
    }

    /// `r ∈ Φ_S`, i.e. `r` lies in the span of `S`.
    pub fn in_span(&self, r: RootId, s: Simple) -> bool {
        self.support[r] & !s.0 == 0
    }

    /// Symmetric form on simple roots, integer-scaled.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Cartan matrix `a_ij = 2(α_i, α_j) / (α_j, α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| 2 * self.gram[i][j] / self.gram[j][j]).collect()).collect()
    }

    /// `(α, β)` in the integer-scaled form.
    pub fn pairing(&self, a: RootId, b: RootId) -> i64 {
        self.pairing[a * self.len() + b]
    }

    /// `⟨β, α^∨⟩ = 2(β, α) / (α, α)`.
    pub fn coroot_pairing(&self, beta: RootId, alpha: RootId) -> i64 {
        2 * self.pairing(beta, alpha) / self.pairing(alpha, alpha)
    }

    /// `α + β` when it is a root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a * self.len() + b].map(|r| r as RootId)
    }

    /// `s_α(β)` for an arbitrary root `α`.
    pub fn reflect(&self, alpha: RootId, beta: RootId) -> RootId {
        let c = self.coroot_pairing(beta, alpha) as i32;
        let img: Vec<i32> = self.roots[beta].iter().zip(&self.roots[alpha]).map(|(b, a)| b - c * a).collect();
        self.index[&img]
    }

    /// Permutation of root ids induced by the `i`-th simple reflection.
    pub fn simple_reflection(&self, i: usize) -> &[u16] {
        &self.reflections[i]
    }

    pub fn empty_subset(&self) -> RootSubset {
        RootSubset::empty(self.len())
    }

    pub fn all_roots(&self) -> RootSubset {
        RootSubset::full(self.len())
    }

    pub fn positive_roots(&self) -> RootSubset {
        RootSubset::from_ids(self.len(), 0..self.n_pos)
    }

    pub fn negative_roots(&self) -> RootSubset {
        RootSubset::from_ids(self.len(), self.n_pos..self.len())
    }

    /// `{α_i : i ∈ S}` as a root subset.
    pub fn simple_subset(&self, s: Simple) -> RootSubset {
        RootSubset::from_ids(self.len(), s.iter())
    }

    /// `Φ_S` as a subset.
    pub fn span(&self, s: Simple) -> RootSubset {
        RootSubset::from_ids(self.len(), (0..self.len()).filter(|&r| self.in_span(r, s)))
    }

    /// `Φ⁺_S`.
    pub fn positive_span(&self, s: Simple) -> RootSubset {
        RootSubset::from_ids(self.len(), (0..self.n_pos).filter(|&r| self.in_span(r, s)))
    }

    /// `-Γ`.
    pub fn negate_subset(&self, g: &RootSubset) -> RootSubset {
        RootSubset::from_ids(self.len(), g.iter().map(|r| self.negate(r)))
    }

    /// Checks that `s` only names simple roots of this system.
    pub fn check_simple(&self, s: Simple) -> Result<()> {
        if s.is_subset(Simple::all(self.rank())) {
            Ok(())
        } else {
            let index = s.iter().find(|&i| i >= self.rank()).unwrap_or(0) + 1;
            Err(Error::SimpleIndex { index, rank: self.rank() })
        }
    }

    /// Two simple roots are joined in the Dynkin diagram.
    pub fn dynkin_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.gram[i][j] != 0
    }

    /// Every element of `a` is orthogonal to every element of `b` (simple
    /// roots).
    pub fn simple_orthogonal(&self, a: Simple, b: Simple) -> bool {
        a.iter().all(|i| b.iter().all(|j| self.gram[i][j] == 0))
    }

    fn check_subset(&self, s: &RootSubset) -> Result<()> {
        if s.universe() == self.len() {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn same_system(&self, s: &RootSubset) -> Result<()> {
        self.check_subset(s)
    }

    pub fn format_root(&self, r: RootId) -> String {
        let sign = if self.is_positive(r) { "" } else { "-" };
        let coords = if self.is_positive(r) { self.root(r).to_vec() } else { self.root(self.negate(r)).to_vec() };
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{c}a{}", i + 1) })
            .collect();
        format!("{sign}({})", terms.join("+"))
    }
}

/// `Φ_S = Φ ∩ span(S)`.
pub fn root_subsystem(sys: &RootSystem, s: Simple) -> Result<RootSubset> {
    sys.check_simple(s)?;
    Ok(sys.span(s))
}

/// `(α, β) = 0` for all `α ∈ a`, `β ∈ b`.
pub fn is_orthogonal(sys: &RootSystem, a: &RootSubset, b: &RootSubset) -> Result<bool> {
    sys.check_subset(a)?;
    sys.check_subset(b)?;
    Ok(a.iter().all(|x| b.iter().all(|y| sys.pairing(x, y) == 0)))
}

/// Positive roots from the symmetric form, by the root-string criterion.
fn positive_roots(gram: &[Vec<i64>]) -> Vec<Vec<i32>> {
    let n = gram.len();
    let form_simple = |r: &[i32], i: usize| -> i64 { (0..n).map(|j| r[j] as i64 * gram[j][i]).sum() };
    let unit = |i: usize| -> Vec<i32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let mut found: Vec<Vec<i32>> = (0..n).map(unit).collect();
    let mut known: std::collections::HashSet<Vec<i32>> = found.iter().cloned().collect();
    let mut layer = found.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // Largest q with β - qα_i still a root (or zero is excluded).
                let mut q = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let c = 2 * form_simple(beta, i) / gram[i][i];
                if q - c > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        found.extend(next.iter().cloned());
        layer = next;
    }
    found.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: &str) -> RootSystem {
        build_root_system(label).unwrap()
    }

    #[test]
    fn classical_root_counts() {
        for label in ["A1", "A2", "A3", "A7", "B2", "B5", "C3", "C5", "D4", "D6", "E6", "F4", "G2"] {
            let s = sys(label);
            assert_eq!(s.len(), s.cartan_type().root_count(), "{label}");
            assert_eq!(s.positive_count() * 2, s.len());
        }
        assert_eq!(sys("A2").len(), 6);
        assert_eq!(sys("A2").positive_count(), 3);
        assert_eq!(sys("G2").len(), 12);
    }

    #[test]
    fn e7_e8_rejected_by_default_guard() {
        assert!(matches!(RootSystem::build("E7", &Config::default()), Err(Error::GuardExceeded { .. })));
        assert!(matches!(RootSystem::build("E8", &Config::default()), Err(Error::GuardExceeded { .. })));
        let big = Config { max_weyl_order: u128::MAX };
        assert_eq!(RootSystem::build("E8", &big).unwrap().len(), 240);
    }

    #[test]
    fn unknown_labels() {
        for bad in ["", "X3", "A0", "B1", "D3", "E5", "E9", "F3", "G3", "A"] {
            assert!(matches!(bad.parse::<CartanType>(), Err(Error::UnknownType(_))), "{bad}");
        }
    }

    #[test]
    fn simple_roots_in_bourbaki_order() {
        let s = sys("B3");
        assert_eq!(s.root(0), &[1, 0, 0]);
        assert_eq!(s.root(1), &[0, 1, 0]);
        assert_eq!(s.root(2), &[0, 0, 1]);
        // highest root of B3 is α1 + 2α2 + 2α3
        assert_eq!(s.root(s.positive_count() - 1), &[1, 2, 2]);
        let g = sys("G2");
        assert_eq!(g.root(g.positive_count() - 1), &[3, 2]);
        let f = sys("F4");
        assert_eq!(f.root(f.positive_count() - 1), &[2, 3, 4, 2]);
        let e = sys("E6");
        assert_eq!(e.root(e.positive_count() - 1), &[1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn a3_cartan_pairings() {
        let s = sys("A3");
        assert_eq!(s.len(), 12);
        assert_ne!(s.pairing(0, 1), 0);
        assert_eq!(s.pairing(0, 2), 0);
        assert_eq!(s.cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn bc_cartan_matrices_are_transposes() {
        let b = sys("B3").cartan_matrix();
        let c = sys("C3").cartan_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b[i][j], c[j][i]);
            }
        }
        assert_eq!(sys("G2").cartan_matrix(), vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn reflections_are_involutions_fixing_positivity() {
        for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let s = sys(label);
            for i in 0..s.rank() {
                let p = s.simple_reflection(i);
                for r in 0..s.len() {
                    assert_eq!(p[p[r] as usize] as usize, r);
                    assert_eq!(p[s.negate(r)] as usize, s.negate(p[r] as usize));
                    if r == i {
                        assert_eq!(p[r] as usize, s.negate(i));
                    } else if s.is_positive(r) {
                        assert!(s.is_positive(p[r] as usize));
                    }
                }
            }
        }
    }

    #[test]
    fn exactly_one_of_root_and_negative_is_positive() {
        let s = sys("F4");
        for r in 0..s.len() {
            assert_ne!(s.is_positive(r), s.is_positive(s.negate(r)));
            assert_eq!(s.negate(s.negate(r)), r);
        }
    }

    #[test]
    fn subsystem_examples() {
        let a3 = sys("A3");
        let s1 = root_subsystem(&a3, Simple(0b001)).unwrap();
        assert_eq!(s1.to_vec(), vec![0, a3.negate(0)]);
        let s12 = root_subsystem(&a3, Simple(0b011)).unwrap();
        assert_eq!(s12.len(), 6);
        let a2 = sys("A2");
        assert!(root_subsystem(&a2, Simple::EMPTY).unwrap().is_empty());
        assert!(matches!(root_subsystem(&a2, Simple(0b100)), Err(Error::SimpleIndex { index: 3, rank: 2 })));
    }

    #[test]
    fn orthogonality_examples() {
        let a3 = sys("A3");
        let one = a3.simple_subset(Simple(0b001));
        let three = a3.simple_subset(Simple(0b100));
        assert!(is_orthogonal(&a3, &one, &three).unwrap());
        let a2 = sys("A2");
        assert!(!is_orthogonal(&a2, &a2.simple_subset(Simple(1)), &a2.simple_subset(Simple(2))).unwrap());
        assert!(is_orthogonal(&a2, &a2.simple_subset(Simple(1)), &a2.empty_subset()).unwrap());
        assert_eq!(is_orthogonal(&a2, &one, &three), Err(Error::SystemMismatch));
    }

    #[test]
    fn dual_types() {
        assert_eq!(CartanType::B(3).dual().0, CartanType::C(3));
        assert_eq!(CartanType::C(4).dual().0, CartanType::B(4));
        assert_eq!(CartanType::G2.dual().1, vec![1, 0]);
        assert_eq!(CartanType::A(3).dual().0, CartanType::A(3));
    }
}
