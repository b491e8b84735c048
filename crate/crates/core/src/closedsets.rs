//! Closed subsets of a root system and the `Γ(I,J,K)` family.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::simple::Simple;
use crate::subset::RootSubset;
use crate::weyl::{ElemId, WeylGroup};

/// `α, β ∈ Γ` and `α + β ∈ Φ` imply `α + β ∈ Γ`, by scanning all pairs.
pub fn is_closed(sys: &RootSystem, gamma: &RootSubset) -> Result<bool> {
    sys.same_system(gamma)?;
    let members = gamma.to_vec();
    for &a in &members {
        for &b in &members {
            if let Some(s) = sys.sum(a, b) {
                if !gamma.contains(s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `Γ_s = Γ ∩ (−Γ)`.
pub fn symmetric_part(sys: &RootSystem, gamma: &RootSubset) -> RootSubset {
    gamma.intersection(&sys.negate_subset(gamma))
}

/// `Γ_u = Γ \ Γ_s`.
pub fn unipotent_part(sys: &RootSystem, gamma: &RootSubset) -> RootSubset {
    gamma.difference(&symmetric_part(sys, gamma))
}

/// `α ∈ Γ, β ∈ J, α + β ∈ Γ ⇒ α + β ∈ J`.
pub fn is_ideal(sys: &RootSystem, j: &RootSubset, gamma: &RootSubset) -> Result<bool> {
    sys.same_system(j)?;
    sys.same_system(gamma)?;
    if !j.is_subset(gamma) {
        return Err(Error::Containment("ideal candidate is not contained in Γ".into()));
    }
    for a in gamma.iter() {
        for b in j.iter() {
            if let Some(s) = sys.sum(a, b) {
                if gamma.contains(s) && !j.contains(s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A closed `Γ` is invertible when `Φ \ Γ` is closed too.
pub fn is_invertible(sys: &RootSystem, gamma: &RootSubset) -> Result<bool> {
    if !is_closed(sys, gamma)? {
        return Err(Error::NotClosed);
    }
    is_closed(sys, &gamma.complement())
}

/// `Φ \ (−Γ)`, the roots of `h_Γ^⊥`.
pub fn perp_complement(sys: &RootSystem, gamma: &RootSubset) -> RootSubset {
    sys.negate_subset(gamma).complement()
}

/// `W_{Γ_s}`, the Weyl group of `H_Γ`.
pub fn weyl_of_subgroup(w: &WeylGroup, gamma: &RootSubset) -> Result<Vec<ElemId>> {
    let sys = w.root_system();
    if !is_closed(sys, gamma)? {
        return Err(Error::NotClosed);
    }
    Ok(w.reflection_subgroup(&symmetric_part(sys, gamma)))
}

/// `Γ(I,K)` is invertible iff `I ⊥ K \ I`.
pub fn invertibility_criterion(sys: &RootSystem, i: Simple, k: Simple) -> bool {
    sys.simple_orthogonal(i, k.minus(i))
}

/// `(I, J, K)` together with `Γ(I,J,K) = Φ_I ∪ (Φ⁺_J \ Φ_K)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaTriple {
    #[serde(rename = "I")]
    pub i: Simple,
    #[serde(rename = "J")]
    pub j: Simple,
    #[serde(rename = "K")]
    pub k: Simple,
    #[serde(skip)]
    pub gamma: RootSubset,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// A splitting `I ∪ K = X ⊔ Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(rename = "X")]
    pub x: Simple,
    #[serde(rename = "Y")]
    pub y: Simple,
}

fn check_triple(sys: &RootSystem, i: Simple, j: Simple, k: Simple) -> Result<()> {
    sys.check_simple(i)?;
    sys.check_simple(j)?;
    sys.check_simple(k)?;
    if !i.is_subset(j) {
        return Err(Error::Containment(format!("I = {{{i}}} is not contained in J = {{{j}}}")));
    }
    if !k.is_subset(j) {
        return Err(Error::Containment(format!("K = {{{k}}} is not contained in J = {{{j}}}")));
    }
    Ok(())
}

/// `Φ_I ∪ (Φ⁺_J \ Φ_K)` without containment checks.
pub fn gamma_set(sys: &RootSystem, i: Simple, j: Simple, k: Simple) -> RootSubset {
    sys.span(i).union(&sys.positive_span(j).difference(&sys.span(k)))
}

pub fn build_gamma(sys: &RootSystem, i: Simple, j: Simple, k: Simple) -> Result<GammaTriple> {
    check_triple(sys, i, j, k)?;
    Ok(GammaTriple { i, j, k, gamma: gamma_set(sys, i, j, k), witness: None })
}

impl GammaTriple {
    /// Attaches the witness from [`gamma_closedness_criterion`] when one exists.
    pub fn with_witness(mut self, sys: &RootSystem) -> Result<Self> {
        self.witness = gamma_closedness_criterion(sys, self.i, self.j, self.k)?;
        Ok(self)
    }
}

/// The three splitting conditions, checked verbatim:
/// `I ∪ K = X ⊔ Y`, `X ⊥ Y`, `X ⊇ I \ K` and `Y ⊇ K \ I`.
pub fn witness_holds(sys: &RootSystem, i: Simple, j: Simple, k: Simple, w: Witness) -> bool {
    let Witness { x, y } = w;
    x.is_subset(j)
        && y.is_subset(j)
        && x.is_disjoint(y)
        && x.union(y) == i.union(k)
        && sys.simple_orthogonal(x, y)
        && i.minus(k).is_subset(x)
        && k.minus(i).is_subset(y)
}

/// Runs the `I_k, K_k` shrinking iteration and returns the resulting split
/// when it satisfies the three conditions.
///
/// Leftover elements of the stable core are placed by Dynkin component of
/// `I ∪ K`: with `X` if the component meets `X`, else with `Y`.
pub fn gamma_closedness_criterion(sys: &RootSystem, i: Simple, j: Simple, k: Simple) -> Result<Option<Witness>> {
    check_triple(sys, i, j, k)?;
    let (mut ik, mut kk) = (i, k);
    let (mut x, mut y) = (Simple::EMPTY, Simple::EMPTY);
    loop {
        let (dx, dy) = (ik.minus(kk), kk.minus(ik));
        if !sys.simple_orthogonal(dx, dy) {
            return Ok(None);
        }
        x = x.union(dx);
        y = y.union(dy);
        let both = ik.intersection(kk);
        let next_i = Simple::from_indices(both.iter().filter(|&a| sys.simple_orthogonal(Simple::from_indices([a]), dy)));
        let next_k = Simple::from_indices(both.iter().filter(|&a| sys.simple_orthogonal(Simple::from_indices([a]), dx)));
        if (next_i, next_k) == (ik, kk) {
            break;
        }
        ik = next_i;
        kk = next_k;
    }
    let core = ik.intersection(kk);
    let support = i.union(k);
    for comp in dynkin_components(sys, support) {
        let left = comp.intersection(core);
        if left.is_empty() {
            continue;
        }
        if !comp.is_disjoint(x) {
            x = x.union(left);
        } else {
            y = y.union(left);
        }
    }
    let w = Witness { x, y };
    Ok(witness_holds(sys, i, j, k, w).then_some(w))
}

/// Connected components of the Dynkin diagram restricted to `s`, in order of
/// their smallest index.
pub fn dynkin_components(sys: &RootSystem, s: Simple) -> Vec<Simple> {
    let mut left = s;
    let mut out = Vec::new();
    while let Some(start) = left.iter().next() {
        let mut comp = Simple::from_indices([start]);
        let mut frontier = vec![start];
        while let Some(a) = frontier.pop() {
            for b in left.iter() {
                if !comp.contains(b) && sys.dynkin_adjacent(a, b) {
                    comp = comp.union(Simple::from_indices([b]));
                    frontier.push(b);
                }
            }
        }
        left = left.minus(comp);
        out.push(comp);
    }
    out
}

/// Every triple `I, K ⊆ J ⊆ Π`.
pub fn all_triples(rank: usize) -> impl Iterator<Item = (Simple, Simple, Simple)> {
    Simple::all_subsets(rank).flat_map(|j| j.subsets().flat_map(move |i| j.subsets().map(move |k| (i, j, k))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::weyl::enumerate_weyl;

    fn s(bits: u32) -> Simple {
        Simple(bits)
    }

    #[test]
    fn closedness_examples() {
        let a2 = build_root_system("A2").unwrap();
        assert!(is_closed(&a2, &a2.positive_roots()).unwrap());
        assert!(!is_closed(&a2, &a2.simple_subset(s(3))).unwrap());
        let g = a2.span(s(1)).union(&RootSubset::from_ids(6, [a2.find(&[1, 1]).unwrap()]));
        assert!(!is_closed(&a2, &g).unwrap());
    }

    #[test]
    fn parts_and_ideals() {
        let a2 = build_root_system("A2").unwrap();
        let phi_i = a2.span(s(1));
        assert_eq!(symmetric_part(&a2, &phi_i), phi_i);
        assert!(unipotent_part(&a2, &phi_i).is_empty());
        let pos = a2.positive_roots();
        assert!(symmetric_part(&a2, &pos).is_empty());
        assert_eq!(unipotent_part(&a2, &pos), pos);
        assert!(!is_ideal(&a2, &a2.simple_subset(s(1)), &pos).unwrap());
        assert!(is_ideal(&a2, &pos, &pos).unwrap());
        assert!(matches!(is_ideal(&a2, &phi_i, &pos), Err(Error::Containment(_))));
        let a3 = build_root_system("A3").unwrap();
        let g = build_gamma(&a3, s(1), s(7), s(4)).unwrap();
        assert_eq!(symmetric_part(&a3, &g.gamma), a3.span(s(1)));
    }

    #[test]
    fn invertibility_examples() {
        let a3 = build_root_system("A3").unwrap();
        assert!(is_invertible(&a3, &a3.positive_roots()).unwrap());
        let g = build_gamma(&a3, s(1), s(7), s(5)).unwrap();
        assert!(is_invertible(&a3, &g.gamma).unwrap());
        assert!(invertibility_criterion(&a3, s(1), s(5)));
        let a2 = build_root_system("A2").unwrap();
        assert!(!invertibility_criterion(&a2, s(1), s(3)));
        assert!(invertibility_criterion(&a2, Simple::EMPTY, s(3)));
        // Parabolic subsets have closed complements.
        let p = build_gamma(&a2, s(1), s(3), s(1)).unwrap();
        assert!(is_invertible(&a2, &p.gamma).unwrap());
        let bad = a2.simple_subset(s(3));
        assert_eq!(is_invertible(&a2, &bad), Err(Error::NotClosed));
    }

    #[test]
    fn gamma_special_cases() {
        let a3 = build_root_system("A3").unwrap();
        let all = Simple::all(3);
        for i in Simple::all_subsets(3) {
            assert_eq!(build_gamma(&a3, i, all, all).unwrap().gamma, a3.span(i));
            assert_eq!(build_gamma(&a3, i, all, i).unwrap().gamma, a3.span(i).union(&a3.positive_roots()));
        }
        let g = build_gamma(&a3, s(1), all, s(4)).unwrap().gamma;
        let mut want = a3.span(s(1)).union(&a3.positive_roots());
        want.remove(2);
        assert_eq!(g, want);
        assert!(matches!(build_gamma(&a3, s(1), s(2), s(2)), Err(Error::Containment(_))));
    }

    #[test]
    fn criterion_examples() {
        let a3 = build_root_system("A3").unwrap();
        let w = gamma_closedness_criterion(&a3, s(1), s(7), s(4)).unwrap().unwrap();
        assert_eq!((w.x, w.y), (s(1), s(4)));
        let a2 = build_root_system("A2").unwrap();
        assert_eq!(gamma_closedness_criterion(&a2, s(1), s(3), s(2)).unwrap(), None);
        for i in Simple::all_subsets(3) {
            let w = gamma_closedness_criterion(&a3, i, s(7), i).unwrap().unwrap();
            assert_eq!((w.x, w.y), (Simple::EMPTY, i));
        }
    }

    #[test]
    fn perp_complement_examples() {
        let a2 = build_root_system("A2").unwrap();
        assert!(perp_complement(&a2, &a2.all_roots()).is_empty());
        assert_eq!(perp_complement(&a2, &a2.span(s(1))), a2.span(s(1)).complement());
    }

    #[test]
    fn weyl_of_closed_subsets() {
        let a3 = build_root_system("A3").unwrap();
        let w = enumerate_weyl(&a3);
        let p = build_gamma(&a3, s(5), s(7), s(5)).unwrap().gamma;
        assert_eq!(weyl_of_subgroup(&w, &p).unwrap(), w.parabolic_subgroup(s(5)));
        assert_eq!(weyl_of_subgroup(&w, &a3.positive_roots()).unwrap(), vec![0]);
        assert_eq!(weyl_of_subgroup(&w, &a3.all_roots()).unwrap().len(), 24);
    }

    #[test]
    fn components() {
        let d4 = build_root_system("D4").unwrap();
        assert_eq!(dynkin_components(&d4, s(0b1011)), vec![s(0b1011)]);
        assert_eq!(dynkin_components(&d4, s(0b1001)), vec![s(1), s(8)]);
        assert_eq!(all_triples(2).count(), 1 + 2 * 2 * 2 + 16);
    }
}
