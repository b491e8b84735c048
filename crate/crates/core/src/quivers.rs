//! Quiver gauge theory data at the level of dimension vectors.
//!
//! Arrow directions are irrelevant here, so edges are unordered pairs kept
//! with multiplicity.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverDatum {
    /// Gauge dimension per vertex.
    pub n: Vec<u64>,
    /// Framing dimension per vertex.
    pub m: Vec<u64>,
    /// Unordered edges, stored with the smaller endpoint first.
    pub edges: Vec<(usize, usize)>,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Quiver(msg.into())
}

impl QuiverDatum {
    pub fn new(n: Vec<u64>, m: Vec<u64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n.len() != m.len() {
            return Err(err("gauge and framing vectors differ in length"));
        }
        let edges = edges
            .into_iter()
            .map(|(a, b)| {
                if a >= n.len() || b >= n.len() {
                    Err(err(format!("edge ({a},{b}) references a missing vertex")))
                } else {
                    Ok((a.min(b), a.max(b)))
                }
            })
            .collect::<Result<_>>()?;
        Ok(QuiverDatum { n, m, edges })
    }

    /// A single vertex of gauge dimension 0 framed by `m`.
    pub fn framed_point(m: u64) -> Self {
        QuiverDatum { n: vec![0], m: vec![m], edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn add_vertex(&mut self, n: u64, m: u64) -> usize {
        self.n.push(n);
        self.m.push(m);
        self.n.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.edges.push((a.min(b), a.max(b)));
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &QuiverDatum) -> QuiverDatum {
        let off = self.n.len();
        let mut out = self.clone();
        out.n.extend(&other.n);
        out.m.extend(&other.m);
        out.edges.extend(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        out
    }

    /// Drops vertices of gauge dimension 0 together with their edges.
    pub fn pruned(&self) -> QuiverDatum {
        let keep: Vec<usize> = (0..self.n.len()).filter(|&v| self.n[v] > 0).collect();
        let mut new_id = vec![usize::MAX; self.n.len()];
        for (k, &v) in keep.iter().enumerate() {
            new_id[v] = k;
        }
        QuiverDatum {
            n: keep.iter().map(|&v| self.n[v]).collect(),
            m: keep.iter().map(|&v| self.m[v]).collect(),
            edges: self
                .edges
                .iter()
                .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
                .map(|&(a, b)| (new_id[a], new_id[b]))
                .collect(),
        }
    }

    /// `2(Σ_edges n_i n_j + Σ n_v m_v − Σ n_v²)`; may be negative.
    pub fn higgs_dim(&self) -> i64 {
        let e: i64 = self.edges.iter().map(|&(a, b)| (self.n[a] * self.n[b]) as i64).sum();
        let f: i64 = (0..self.n.len()).map(|v| (self.n[v] * self.m[v]) as i64).sum();
        let g: i64 = self.n.iter().map(|&x| (x * x) as i64).sum();
        2 * (e + f - g)
    }

    /// `2 Σ n_v`.
    pub fn coulomb_dim(&self) -> i64 {
        2 * self.n.iter().sum::<u64>() as i64
    }
}

impl Serialize for QuiverDatum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices: Vec<usize> = (0..self.n.len()).collect();
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        let as_map = |v: &Vec<u64>| -> std::collections::BTreeMap<usize, u64> { v.iter().copied().enumerate().collect() };
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("vertices", &vertices)?;
        m.serialize_entry("edges", &edges)?;
        m.serialize_entry("n", &as_map(&self.n))?;
        m.serialize_entry("m", &as_map(&self.m))?;
        m.end()
    }
}

/// `v̄ = (v_{n+1}, v_n, …, v_1)` strictly decreasing: chain `v_1 − … − v_n`
/// with framing `v_{n+1}` at the top vertex. Vertex `k` carries `v_{k+1}`.
pub fn linear_quiver(v: &[u64]) -> Result<QuiverDatum> {
    if v.len() < 2 {
        return Err(err("a linear quiver needs at least two entries"));
    }
    if v.contains(&0) {
        return Err(err("entries must be positive"));
    }
    if v.windows(2).any(|w| w[0] <= w[1]) {
        return Err(err("entries must be strictly decreasing"));
    }
    let n: Vec<u64> = v[1..].iter().rev().copied().collect();
    let mut m = vec![0; n.len()];
    *m.last_mut().unwrap() = v[0];
    let edges = (1..n.len()).map(|k| (k - 1, k)).collect();
    QuiverDatum::new(n, m, edges)
}

/// `(n, n−1, …, 1)`.
pub fn full_flag(n: u64) -> Vec<u64> {
    (1..=n).rev().collect()
}

fn check_composition(parts: &[u64]) -> Result<u64> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(err("a composition needs positive parts"));
    }
    let n: u64 = parts.iter().sum();
    if n < 2 {
        return Err(err("composition must sum to at least 2"));
    }
    Ok(n)
}

/// Intersection at framed vertices `i` of `q` and `i2` of `q2`.
///
/// A new gauge vertex of dimension `min(m_i, m'_{i2})` joins `i` and `i2`; it
/// carries the leftover framing `|m'_{i2} − m_i|`, and the two original
/// framings are consumed. The vertices of `q2` are shifted past those of `q`,
/// and the new vertex comes last.
pub fn intersect(q: &QuiverDatum, i: usize, q2: &QuiverDatum, i2: usize) -> Result<QuiverDatum> {
    if i >= q.vertex_count() || i2 >= q2.vertex_count() {
        return Err(err("junction vertex out of range"));
    }
    let (a, b) = (q.m[i], q2.m[i2]);
    if a == 0 || b == 0 {
        return Err(err("junction vertices must be framed"));
    }
    let off = q.vertex_count();
    let mut out = q.disjoint_union(q2);
    out.m[i] = 0;
    out.m[i2 + off] = 0;
    let v = out.add_vertex(a.min(b), a.abs_diff(b));
    out.add_edge(i, v);
    out.add_edge(i2 + off, v);
    Ok(out)
}

/// Intersection along a Levi factor: the framing `m_i` of `q` splits as the
/// sum of the framings of the given parts, and each part is glued as in
/// [`intersect`] with junction framing 0.
pub fn intersect_levi(q: &QuiverDatum, i: usize, parts: &[(QuiverDatum, usize)]) -> Result<QuiverDatum> {
    if i >= q.vertex_count() {
        return Err(err("junction vertex out of range"));
    }
    let mut total = 0;
    for (p, v) in parts {
        if *v >= p.vertex_count() || p.m[*v] == 0 {
            return Err(err("every part must be framed at its junction vertex"));
        }
        total += p.m[*v];
    }
    if total != q.m[i] {
        return Err(err(format!("parts carry framing {total}, junction has {}", q.m[i])));
    }
    let mut out = q.clone();
    out.m[i] = 0;
    for (p, v) in parts {
        let off = out.vertex_count();
        let size = p.m[*v];
        out = out.disjoint_union(p);
        out.m[v + off] = 0;
        let j = out.add_vertex(size, 0);
        out.add_edge(i, j);
        out.add_edge(v + off, j);
    }
    Ok(out)
}

/// `Q★`: chain `1, 2, …, n−1` with leg vertices `n_1, …, n_k` attached to the
/// vertex of dimension `n−1`. Chain vertices come first.
pub fn star_quiver(parts: &[u64]) -> Result<QuiverDatum> {
    let n = check_composition(parts)?;
    let mut q = QuiverDatum { n: (1..n).collect(), m: vec![0; (n - 1) as usize], edges: Vec::new() };
    for k in 1..q.n.len() {
        q.add_edge(k - 1, k);
    }
    let top = q.n.len() - 1;
    for &p in parts {
        let v = q.add_vertex(p, 0);
        q.add_edge(top, v);
    }
    Ok(q)
}

/// `Q☆`: `Q★` with each leg extended by the tail `n_i − 1, …, 1`.
pub fn full_star_quiver(parts: &[u64]) -> Result<QuiverDatum> {
    let n = check_composition(parts)?;
    let mut q = QuiverDatum { n: (1..n).collect(), m: vec![0; (n - 1) as usize], edges: Vec::new() };
    for k in 1..q.n.len() {
        q.add_edge(k - 1, k);
    }
    let top = q.n.len() - 1;
    for &p in parts {
        let mut prev = top;
        for d in (1..=p).rev() {
            let v = q.add_vertex(d, 0);
            q.add_edge(prev, v);
            prev = v;
        }
    }
    Ok(q)
}

/// The leg glued in to build `Q★` (`tails = false`) or `Q☆` (`tails = true`).
pub fn leg(part: u64, tails: bool) -> Result<(QuiverDatum, usize)> {
    if tails && part >= 2 {
        let q = linear_quiver(&full_flag(part))?;
        let top = q.vertex_count() - 1;
        Ok((q, top))
    } else {
        Ok((QuiverDatum::framed_point(part), 0))
    }
}

/// `Q★` (or `Q☆`) assembled as the intersection of the full flag quiver with
/// one leg per part, before pruning zero-dimensional vertices.
pub fn star_as_intersection(parts: &[u64], tails: bool) -> Result<QuiverDatum> {
    let n = check_composition(parts)?;
    let flag = linear_quiver(&full_flag(n))?;
    let top = flag.vertex_count() - 1;
    let legs = parts.iter().map(|&p| leg(p, tails)).collect::<Result<Vec<_>>>()?;
    intersect_levi(&flag, top, &legs)
}

/// Result of comparing the Coulomb dimension of `Q★` with `n² + n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoulombCheck {
    pub n: u64,
    pub coulomb: i64,
    pub expected: i64,
    pub ok: bool,
}

/// `coulomb_dim(Q★_n̄) = 2(n² − n(n−1)/2) = n² + n`.
pub fn coulomb_crosscheck(parts: &[u64]) -> Result<CoulombCheck> {
    let n = check_composition(parts)?;
    let coulomb = star_quiver(parts)?.coulomb_dim();
    let expected = 2 * ((n * n) as i64 - (n * (n - 1) / 2) as i64);
    Ok(CoulombCheck { n, coulomb, expected, ok: coulomb == expected })
}

/// `ψ(e_i) = 0` if `i` is a partial sum `n_1 + … + n_j`, else 1, for
/// `i = 1..n−1`.
pub fn psi_character(parts: &[u64]) -> Result<Vec<u8>> {
    let n = check_composition(parts)?;
    let sums: Vec<u64> = parts.iter().scan(0, |acc, &p| {
        *acc += p;
        Some(*acc)
    }).collect();
    Ok((1..n).map(|i| u8::from(!sums.contains(&i))).collect())
}

/// Every composition of `n`, in lexicographic order.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Parses `2,1`.
pub fn parse_composition(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Error::SubsetSyntax(text.to_string())))
        .collect()
}
