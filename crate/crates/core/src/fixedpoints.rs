//! Torus-fixed-point sets as subsets of coset spaces `W/W_I`.
//!
//! Two independent routes are provided: the defining root condition on every
//! coset (`fixed_points_bruteforce`) and the block decomposition over ordered
//! partitions `L = L1 ⊔ L2 ⊔ L3` (`fixed_points_theorem`).

use std::collections::HashMap;

use serde::Serialize;

use crate::closedsets::{self, gamma_set, is_closed, perp_complement, symmetric_part, Witness};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::simple::Simple;
use crate::subset::RootSubset;
use crate::weyl::{free_condition, CosetSpace, ElemId, Side, Sign, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Brute,
    Theorem,
}

/// Members of a coset space `W/W_H`, as sorted coset indices.
#[derive(Debug, Clone)]
pub struct FixedPointSet {
    pub ambient: CosetSpace,
    pub members: Vec<usize>,
    pub provenance: Provenance,
    pub l: Simple,
}

impl FixedPointSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Canonical representatives of the member cosets.
    pub fn reps(&self) -> Vec<ElemId> {
        self.members.iter().map(|&c| self.ambient.rep(c)).collect()
    }

    pub fn words(&self, w: &WeylGroup) -> Vec<String> {
        self.reps().into_iter().map(|r| w.word_string(r)).collect()
    }
}

/// `I` with `Φ_I = s`, if `s` is a standard parabolic subsystem.
fn standard_parabolic(sys: &RootSystem, s: &RootSubset) -> Option<Simple> {
    let i = Simple::from_indices((0..sys.rank()).filter(|&j| s.contains(j)));
    (sys.span(i) == *s).then_some(i)
}

/// `{w W_{Γ_s} : w⁻¹(α_j) ∈ Φ \ (−Γ) for all j ∈ L}`, with the condition
/// checked on every element of every coset.
pub fn fixed_points_bruteforce(w: &WeylGroup, l: Simple, gamma: &RootSubset) -> Result<FixedPointSet> {
    let sys = w.root_system();
    sys.check_simple(l)?;
    if !is_closed(sys, gamma)? {
        return Err(Error::NotClosed);
    }
    let sym = symmetric_part(sys, gamma);
    let ambient = match standard_parabolic(sys, &sym) {
        Some(i) => w.coset_space(i, Side::Right),
        None => CosetSpace::of_subgroup(w, w.reflection_subgroup(&sym), Side::Right),
    };
    let allowed = perp_complement(sys, gamma);
    let holds = |x: ElemId| {
        let inv = w.inverse(x);
        l.iter().all(|j| allowed.contains(w.apply(inv, j)))
    };
    let mut members = Vec::new();
    for c in 0..ambient.len() {
        let want = holds(ambient.rep(c));
        if ambient.members(w, c).into_iter().any(|x| holds(x) != want) {
            return Err(Error::NonConstantCoset(w.word_string(ambient.rep(c))));
        }
        if want {
            members.push(c);
        }
    }
    Ok(FixedPointSet { ambient, members, provenance: Provenance::Brute, l })
}

/// The three sets of the block decomposition, as sorted indices into
/// `W/W_I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSets {
    /// `w⁻¹(α_j) ∈ Φ⁺ \ Φ_I` for `j ∈ L1`.
    pub a: Vec<usize>,
    /// `w⁻¹(α_j) ∈ Φ⁻ \ Φ_J` for `j ∈ L2`.
    pub a_bar: Vec<usize>,
    /// `w⁻¹(α_j) ∈ Φ⁻_K \ Φ_I` for `j ∈ L3`.
    pub b_bar: Vec<usize>,
}

impl TheoremSets {
    pub fn intersection(&self) -> Vec<usize> {
        self.a.iter().copied().filter(|c| self.a_bar.binary_search(c).is_ok() && self.b_bar.binary_search(c).is_ok()).collect()
    }
}

/// Parabolic coset spaces, built once per call chain.
struct Spaces<'a> {
    w: &'a WeylGroup,
    cache: HashMap<Simple, CosetSpace>,
}

impl<'a> Spaces<'a> {
    fn new(w: &'a WeylGroup) -> Self {
        Spaces { w, cache: HashMap::new() }
    }

    fn get(&mut self, s: Simple) -> &CosetSpace {
        let w = self.w;
        self.cache.entry(s).or_insert_with(|| w.coset_space(s, Side::Right))
    }
}

#[allow(clippy::too_many_arguments)]
fn direct_sets(w: &WeylGroup, space: &CosetSpace, i: Simple, j: Simple, k: Simple, l: [Simple; 3]) -> TheoremSets {
    let sys = w.root_system();
    let filter = |cond: &dyn Fn(usize) -> bool, part: Simple| -> Vec<usize> {
        (0..space.len())
            .filter(|&c| {
                let inv = w.inverse(space.rep(c));
                part.iter().all(|q| cond(w.apply(inv, q)))
            })
            .collect()
    };
    TheoremSets {
        a: filter(&|r| sys.is_positive(r) && !sys.in_span(r, i), l[0]),
        a_bar: filter(&|r| !sys.is_positive(r) && !sys.in_span(r, j), l[1]),
        b_bar: filter(&|r| !sys.is_positive(r) && sys.in_span(r, k) && !sys.in_span(r, i), l[2]),
    }
}

/// The fiber-product forms:
/// `Ā = W/W_I ×_{W/W_J} (W̄_{L2}\W/W_J)^free` and
/// `B̄ = (W̄_{L3}\W/W_I)^free ∩ (W/W_I ×_{W/W_{I∪K}} ((W/W_Y)^{W_{L3}}/W_X))`.
fn fiber_sets(spaces: &mut Spaces, i: Simple, j: Simple, k: Simple, wit: Witness, l: [Simple; 3]) -> TheoremSets {
    let w = spaces.w;
    let space_i = spaces.get(i).clone();
    let reps = space_i.reps().to_vec();

    let a: Vec<usize> = (0..reps.len()).filter(|&c| free_condition(w, l[0], i, Sign::Plus, reps[c])).collect();

    let space_j = spaces.get(j).clone();
    let minus_j: Vec<bool> = space_j.reps().iter().map(|&r| free_condition(w, l[1], j, Sign::Minus, r)).collect();
    let a_bar = (0..reps.len()).filter(|&c| minus_j[space_j.coset_of(reps[c])]).collect();

    // W_{L3}-fixed cosets of W/W_Y, pushed down to W/W_{X ∪ Y} = W/W_{I ∪ K}.
    let space_y = spaces.get(wit.y).clone();
    let space_ik = spaces.get(i.union(k)).clone();
    let mut hit = vec![false; space_ik.len()];
    for &r in space_y.reps() {
        let c = space_y.coset_of(r);
        if l[2].iter().all(|q| space_y.coset_of(w.mul_simple_left(q, r)) == c) {
            hit[space_ik.coset_of(r)] = true;
        }
    }
    let b_bar = (0..reps.len())
        .filter(|&c| free_condition(w, l[2], i, Sign::Minus, reps[c]) && hit[space_ik.coset_of(reps[c])])
        .collect();
    TheoremSets { a, a_bar, b_bar }
}

/// `A`, `Ā` and `B̄` for one ordered partition, computed from the direct root
/// conditions and cross-checked against the fiber-product forms.
#[allow(clippy::too_many_arguments)]
pub fn theorem_sets(
    w: &WeylGroup,
    i: Simple,
    l1: Simple,
    l2: Simple,
    l3: Simple,
    j: Simple,
    k: Simple,
    witness: Witness,
) -> Result<TheoremSets> {
    let sys = w.root_system();
    for s in [l1, l2, l3] {
        sys.check_simple(s)?;
    }
    closedsets::build_gamma(sys, i, j, k)?;
    if !closedsets::witness_holds(sys, i, j, k, witness) {
        return Err(Error::InvalidWitness);
    }
    let mut spaces = Spaces::new(w);
    sets_for_partition(&mut spaces, i, j, k, witness, [l1, l2, l3])
}

fn sets_for_partition(spaces: &mut Spaces, i: Simple, j: Simple, k: Simple, wit: Witness, l: [Simple; 3]) -> Result<TheoremSets> {
    let space = spaces.get(i).clone();
    let direct = direct_sets(spaces.w, &space, i, j, k, l);
    let fiber = fiber_sets(spaces, i, j, k, wit, l);
    if direct != fiber {
        return Err(Error::Mismatch(format!(
            "direct and fiber-product forms differ for I={{{i}}} J={{{j}}} K={{{k}}} L1={{{}}} L2={{{}}} L3={{{}}}",
            l[0], l[1], l[2]
        )));
    }
    Ok(direct)
}

/// One block `A ∩ Ā ∩ B̄` of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremBlock {
    #[serde(rename = "L1")]
    pub l1: Simple,
    #[serde(rename = "L2")]
    pub l2: Simple,
    #[serde(rename = "L3")]
    pub l3: Simple,
    pub members: Vec<usize>,
}

/// Ordered partitions `L = L1 ⊔ L2 ⊔ L3`, by a ternary counter over `L` in
/// increasing index order.
pub fn ordered_partitions(l: Simple, parts: usize) -> Vec<Vec<Simple>> {
    let idx: Vec<usize> = l.iter().collect();
    let total = parts.pow(idx.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut out = vec![Simple::EMPTY; parts];
            for &q in &idx {
                out[code % parts] = out[code % parts].union(Simple::from_indices([q]));
                code /= parts;
            }
            out
        })
        .collect()
}

/// Union of the `3^|L|` blocks; the blocks are checked to be pairwise
/// disjoint. Returns the set together with its blocks.
pub fn fixed_points_theorem_blocks(
    w: &WeylGroup,
    l: Simple,
    i: Simple,
    j: Simple,
    k: Simple,
) -> Result<(FixedPointSet, Vec<TheoremBlock>)> {
    let sys = w.root_system();
    sys.check_simple(l)?;
    closedsets::build_gamma(sys, i, j, k)?;
    let witness = closedsets::gamma_closedness_criterion(sys, i, j, k)?.ok_or(Error::NotClosed)?;
    let mut spaces = Spaces::new(w);
    let ambient = spaces.get(i).clone();
    let mut owner = vec![usize::MAX; ambient.len()];
    let mut blocks = Vec::new();
    for (b, part) in ordered_partitions(l, 3).into_iter().enumerate() {
        let sets = sets_for_partition(&mut spaces, i, j, k, witness, [part[0], part[1], part[2]])?;
        let members = sets.intersection();
        for &c in &members {
            if owner[c] != usize::MAX {
                return Err(Error::Mismatch(format!(
                    "coset {} lies in two blocks",
                    w.word_string(ambient.rep(c))
                )));
            }
            owner[c] = b;
        }
        blocks.push(TheoremBlock { l1: part[0], l2: part[1], l3: part[2], members });
    }
    let members = (0..ambient.len()).filter(|&c| owner[c] != usize::MAX).collect();
    Ok((FixedPointSet { ambient, members, provenance: Provenance::Theorem, l }, blocks))
}

pub fn fixed_points_theorem(w: &WeylGroup, l: Simple, i: Simple, j: Simple, k: Simple) -> Result<FixedPointSet> {
    Ok(fixed_points_theorem_blocks(w, l, i, j, k)?.0)
}

/// Both routes for a `Γ(I,J,K)` triple; errors with `Mismatch` if they differ.
pub fn fixed_points_both(w: &WeylGroup, l: Simple, i: Simple, j: Simple, k: Simple) -> Result<FixedPointSet> {
    let thm = fixed_points_theorem(w, l, i, j, k)?;
    let brute = fixed_points_bruteforce(w, l, &gamma_set(w.root_system(), i, j, k))?;
    if thm.reps() != brute.reps() {
        return Err(Error::Mismatch(format!(
            "theorem gives {} cosets, brute force gives {}",
            thm.len(),
            brute.len()
        )));
    }
    Ok(thm)
}

/// `∐_{L = L1 ⊔ L2} (W_{L1}\W/W_I)^free ∩ (W̄_{L2}\W/W_I)^free`.
pub fn levi_fixed_points(w: &WeylGroup, l: Simple, i: Simple) -> Result<FixedPointSet> {
    let sys = w.root_system();
    sys.check_simple(l)?;
    sys.check_simple(i)?;
    let ambient = w.coset_space(i, Side::Right);
    let mut owner = vec![false; ambient.len()];
    for part in ordered_partitions(l, 2) {
        for c in 0..ambient.len() {
            let r = ambient.rep(c);
            if free_condition(w, part[0], i, Sign::Plus, r) && free_condition(w, part[1], i, Sign::Minus, r) {
                if owner[c] {
                    return Err(Error::Mismatch(format!("coset {} lies in two blocks", w.word_string(r))));
                }
                owner[c] = true;
            }
        }
    }
    let members = (0..ambient.len()).filter(|&c| owner[c]).collect();
    Ok(FixedPointSet { ambient, members, provenance: Provenance::Theorem, l })
}

/// One block `(W_{L1}\W) ∩ (W̄_{L2}\W)` of the Weyl group decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionBlock {
    #[serde(rename = "L1")]
    pub l1: Simple,
    #[serde(rename = "L2")]
    pub l2: Simple,
    pub members: Vec<ElemId>,
}

/// `W = ∐ (W_{L1}\W) ∩ (W̄_{L2}\W)` over `L = L1 ⊔ L2`; the blocks are
/// checked to partition `W`.
pub fn weyl_decomposition(w: &WeylGroup, l: Simple) -> Result<Vec<DecompositionBlock>> {
    let sys = w.root_system();
    sys.check_simple(l)?;
    let mut blocks: Vec<DecompositionBlock> = ordered_partitions(l, 2)
        .into_iter()
        .map(|p| DecompositionBlock { l1: p[0], l2: p[1], members: Vec::new() })
        .collect();
    let index: HashMap<Simple, usize> = blocks.iter().enumerate().map(|(b, blk)| (blk.l2, b)).collect();
    let mut seen = 0usize;
    for x in 0..w.order() {
        let inv = w.inverse(x);
        let neg = Simple::from_indices(l.iter().filter(|&q| !sys.is_positive(w.apply(inv, q))));
        let b = index[&neg];
        blocks[b].members.push(x);
        seen += 1;
    }
    let total: usize = blocks.iter().map(|b| b.members.len()).sum();
    if total != w.order() || seen != w.order() {
        return Err(Error::Mismatch("decomposition blocks do not partition W".into()));
    }
    blocks.sort_by_key(|b| b.l2);
    Ok(blocks)
}

/// `{w ∈ W_I\W : w(−α_i) ∈ Φ⁺ \ Φ_I for i ∈ L}`, as sorted indices into the
/// left coset space `g.coset_space(I, Side::Left)`.
pub fn projection_image(w: &WeylGroup, i: Simple, l: Simple) -> Result<Vec<usize>> {
    let sys = w.root_system();
    sys.check_simple(i)?;
    sys.check_simple(l)?;
    let space = w.coset_space(i, Side::Left);
    Ok((0..space.len())
        .filter(|&c| {
            let r = space.rep(c);
            l.iter().all(|q| {
                let img = w.apply(r, sys.negate(q));
                sys.is_positive(img) && !sys.in_span(img, i)
            })
        })
        .collect())
}

/// `W/W_I`.
pub fn z_fixed_points(w: &WeylGroup, i: Simple) -> Result<CosetSpace> {
    w.root_system().check_simple(i)?;
    Ok(w.coset_space(i, Side::Right))
}
