//! The table of mirror branes and fixed-point counts of their intersections.

use std::fmt;

use serde::Serialize;

use crate::closedsets::{build_gamma, gamma_closedness_criterion};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::fixedpoints::{fixed_points_theorem, levi_fixed_points};
use crate::rootsys::{CartanType, RootSystem};
use crate::simple::Simple;
use crate::weyl::{free_double_cosets, Side, Sign, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BraneKind {
    /// `T*G//P_I`.
    Parabolic,
    /// `T*G//L_I`.
    Levi,
    /// `T*G//B_{L_I}`.
    BorelOfLevi,
    /// `T*G//_{e_I} U_{e_I}`.
    Slice,
    /// `T*G//_{e_I} U`.
    Whittaker,
    /// `T*G//U_{P_I}`.
    Radical,
    /// `T*G//H_Γ` for `Γ = Γ(I,J,K)`; not in the mirror table.
    Gamma { j: Simple, k: Simple },
}

/// Which group the brane lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    G,
    Dual,
}

impl Group {
    fn flip(self) -> Group {
        match self {
            Group::G => Group::Dual,
            Group::Dual => Group::G,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraneDescriptor {
    pub kind: BraneKind,
    pub subset: Simple,
    pub side: Group,
}

impl Serialize for BraneDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("kind", self.kind_name())?;
        m.serialize_entry("I", &self.subset)?;
        if let BraneKind::Gamma { j, k } = self.kind {
            m.serialize_entry("J", &j)?;
            m.serialize_entry("K", &k)?;
        }
        m.serialize_entry("side", &self.side)?;
        m.end()
    }
}

impl BraneDescriptor {
    pub fn new(kind: BraneKind, subset: Simple) -> Self {
        BraneDescriptor { kind, subset, side: Group::G }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            BraneKind::Parabolic => "parabolic",
            BraneKind::Levi => "levi",
            BraneKind::BorelOfLevi => "borel-of-levi",
            BraneKind::Slice => "slice",
            BraneKind::Whittaker => "whittaker",
            BraneKind::Radical => "radical",
            BraneKind::Gamma { .. } => "gamma",
        }
    }

    /// Parses `kind:1,2` (for example `slice:1`, `parabolic:all`, `u`) or
    /// `gamma:I;J;K`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let t = text.trim();
        let (kind, rest) = t.split_once(':').unwrap_or((t, ""));
        let kind = kind.trim().to_ascii_lowercase();
        let sub = |r: &str| Simple::parse(r, rank);
        let d = match kind.as_str() {
            "parabolic" | "p" => BraneDescriptor::new(BraneKind::Parabolic, sub(rest)?),
            "levi" | "l" => BraneDescriptor::new(BraneKind::Levi, sub(rest)?),
            "borel-of-levi" | "borel" | "b" => BraneDescriptor::new(BraneKind::BorelOfLevi, sub(rest)?),
            "slice" | "s" => BraneDescriptor::new(BraneKind::Slice, sub(rest)?),
            "whittaker" | "w" => BraneDescriptor::new(BraneKind::Whittaker, sub(rest)?),
            "radical" | "r" => BraneDescriptor::new(BraneKind::Radical, sub(rest)?),
            "u" if rest.trim().is_empty() => BraneDescriptor::new(BraneKind::Whittaker, Simple::EMPTY),
            "torus" | "t" if rest.trim().is_empty() => BraneDescriptor::new(BraneKind::Levi, Simple::EMPTY),
            "gamma" => {
                let parts: Vec<&str> = rest.split(';').collect();
                if parts.len() != 3 {
                    return Err(Error::SubsetSyntax(text.to_string()));
                }
                BraneDescriptor::new(BraneKind::Gamma { j: sub(parts[1])?, k: sub(parts[2])? }, sub(parts[0])?)
            }
            _ => return Err(Error::Mirror(format!("unknown brane `{text}`"))),
        };
        Ok(d)
    }

    /// `U`: the unipotent radical of the Borel, in either of its two names.
    fn is_plain_u(&self) -> bool {
        self.subset.is_empty() && matches!(self.kind, BraneKind::Whittaker | BraneKind::Radical)
    }
}

impl fmt::Display for BraneDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BraneKind::Gamma { j, k } => write!(f, "gamma:{};{};{}", self.subset, j, k),
            _ => write!(f, "{}:{}", self.kind_name(), self.subset),
        }
    }
}

/// Row-wise swap of the mirror table, moving to the other group:
/// `P_I ↔ slice(I)`, `L_I ↔ whittaker(I)`, `B_{L_I} ↔ U_{P_I}`.
pub fn mirror_of(d: BraneDescriptor) -> Result<BraneDescriptor> {
    let kind = match d.kind {
        BraneKind::Parabolic => BraneKind::Slice,
        BraneKind::Slice => BraneKind::Parabolic,
        BraneKind::Levi => BraneKind::Whittaker,
        BraneKind::Whittaker => BraneKind::Levi,
        BraneKind::BorelOfLevi => BraneKind::Radical,
        BraneKind::Radical => BraneKind::BorelOfLevi,
        BraneKind::Gamma { .. } => return Err(Error::Mirror(format!("`{d}` has no entry in the mirror table"))),
    };
    Ok(BraneDescriptor { kind, subset: d.subset, side: d.side.flip() })
}

/// Moves a descriptor's subsets to the base of the dual root system.
pub fn transport(ty: CartanType, d: BraneDescriptor) -> BraneDescriptor {
    let (_, relabel) = ty.dual();
    let map = |s: Simple| Simple::from_indices(s.iter().map(|i| relabel[i]));
    let kind = match d.kind {
        BraneKind::Gamma { j, k } => BraneKind::Gamma { j: map(j), k: map(k) },
        other => other,
    };
    BraneDescriptor { kind, subset: map(d.subset), side: d.side }
}

/// Fixed-point count of the intersection of two branes over the same group,
/// or `None` when no formula applies. Order of the pair does not matter.
pub fn fixed_point_count(w: &WeylGroup, d1: BraneDescriptor, d2: BraneDescriptor) -> Result<Option<usize>> {
    let sys = w.root_system();
    for d in [d1, d2] {
        sys.check_simple(d.subset)?;
        if let BraneKind::Gamma { j, k } = d.kind {
            build_gamma(sys, d.subset, j, k)?;
        }
    }
    if let Some(n) = count_ordered(w, sys, d1, d2)? {
        return Ok(Some(n));
    }
    count_ordered(w, sys, d2, d1)
}

fn count_ordered(w: &WeylGroup, sys: &RootSystem, a: BraneDescriptor, b: BraneDescriptor) -> Result<Option<usize>> {
    if a.kind == BraneKind::Slice {
        let l = a.subset;
        let i = b.subset;
        let theorem = |i, j, k| -> Result<Option<usize>> {
            if gamma_closedness_criterion(sys, i, j, k)?.is_none() {
                return Ok(None);
            }
            Ok(Some(fixed_points_theorem(w, l, i, j, k)?.len()))
        };
        return match b.kind {
            BraneKind::Parabolic => Ok(Some(free_double_cosets(w, l, i, Sign::Plus).len())),
            BraneKind::Levi => Ok(Some(levi_fixed_points(w, l, i)?.len())),
            BraneKind::BorelOfLevi => theorem(Simple::EMPTY, i, Simple::EMPTY),
            BraneKind::Gamma { j, k } => theorem(i, j, k),
            _ => Ok(None),
        };
    }
    if a.is_plain_u() && b.kind == BraneKind::Parabolic {
        return Ok(Some(w.coset_space(b.subset, Side::Right).len()));
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct MirrorReport {
    pub left: [BraneDescriptor; 2],
    pub right: [BraneDescriptor; 2],
    pub dual_type: String,
    pub count_left: usize,
    pub count_right: usize,
    pub matched: bool,
}

/// Compares the fixed-point count of `(d1, d2)` over `G` with that of their
/// mirrors over the dual group.
pub fn mirror_report(w: &WeylGroup, dual: &WeylGroup, d1: BraneDescriptor, d2: BraneDescriptor) -> Result<MirrorReport> {
    let ty = w.root_system().cartan_type();
    if dual.root_system().cartan_type() != ty.dual().0 {
        return Err(Error::Mirror(format!("{} is not the dual of {ty}", dual.root_system().label())));
    }
    let m1 = transport(ty, mirror_of(d1)?);
    let m2 = transport(ty, mirror_of(d2)?);
    let left = fixed_point_count(w, d1, d2)?
        .ok_or_else(|| Error::Mirror(format!("no fixed-point formula for ({d1}, {d2})")))?;
    let right = fixed_point_count(dual, m1, m2)?
        .ok_or_else(|| Error::Mirror(format!("no fixed-point formula for ({m1}, {m2}) on the dual side")))?;
    Ok(MirrorReport {
        left: [d1, d2],
        right: [m1, m2],
        dual_type: dual.root_system().label(),
        count_left: left,
        count_right: right,
        matched: left == right,
    })
}

/// Builds the dual group's Weyl group and reports.
pub fn mirror_report_for(w: &WeylGroup, d1: BraneDescriptor, d2: BraneDescriptor, cfg: &Config) -> Result<MirrorReport> {
    let ty = w.root_system().cartan_type();
    let (dual_ty, _) = ty.dual();
    if dual_ty == ty {
        return mirror_report(w, w, d1, d2);
    }
    let dual = WeylGroup::new(RootSystem::build(&dual_ty.to_string(), cfg)?);
    mirror_report(w, &dual, d1, d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::weyl::enumerate_weyl;

    fn group(label: &str) -> WeylGroup {
        enumerate_weyl(&build_root_system(label).unwrap())
    }

    fn d(kind: BraneKind, bits: u32) -> BraneDescriptor {
        BraneDescriptor::new(kind, Simple(bits))
    }

    #[test]
    fn table_rows_and_involution() {
        let p = d(BraneKind::Parabolic, 1);
        assert_eq!(mirror_of(p).unwrap().kind, BraneKind::Slice);
        assert_eq!(mirror_of(d(BraneKind::Levi, 1)).unwrap().kind, BraneKind::Whittaker);
        assert_eq!(mirror_of(d(BraneKind::BorelOfLevi, 1)).unwrap().kind, BraneKind::Radical);
        for kind in [
            BraneKind::Parabolic,
            BraneKind::Levi,
            BraneKind::BorelOfLevi,
            BraneKind::Slice,
            BraneKind::Whittaker,
            BraneKind::Radical,
        ] {
            let x = d(kind, 3);
            assert_eq!(mirror_of(mirror_of(x).unwrap()).unwrap(), x);
            assert_eq!(mirror_of(x).unwrap().side, Group::Dual);
        }
        let g = d(BraneKind::Gamma { j: Simple(3), k: Simple(2) }, 1);
        assert!(matches!(mirror_of(g), Err(Error::Mirror(_))));
    }

    #[test]
    fn a2_counts() {
        let g = group("A2");
        let c = |a, b| fixed_point_count(&g, a, b).unwrap();
        assert_eq!(c(d(BraneKind::Slice, 1), d(BraneKind::Parabolic, 1)), Some(1));
        assert_eq!(c(d(BraneKind::Slice, 1), d(BraneKind::Levi, 2)), Some(2));
        assert_eq!(c(d(BraneKind::Whittaker, 0), d(BraneKind::Parabolic, 1)), Some(3));
        assert_eq!(c(d(BraneKind::Parabolic, 1), d(BraneKind::Whittaker, 0)), Some(3));
        assert_eq!(c(d(BraneKind::Levi, 1), d(BraneKind::Levi, 2)), None);
    }

    #[test]
    fn reports() {
        let a3 = group("A3");
        let r = mirror_report(&a3, &a3, d(BraneKind::Slice, 1), d(BraneKind::Parabolic, 6)).unwrap();
        assert!(r.matched);
        let a2 = group("A2");
        let u = d(BraneKind::Whittaker, 0);
        let r = mirror_report(&a2, &a2, u, d(BraneKind::Parabolic, 0)).unwrap();
        assert_eq!((r.count_left, r.count_right, r.matched), (6, 6, true));
        let r = mirror_report(&a2, &a2, u, d(BraneKind::Parabolic, 1)).unwrap();
        assert_eq!((r.count_left, r.count_right, r.matched), (3, 6, false));
    }

    #[test]
    fn dual_groups() {
        let b3 = group("B3");
        let r = mirror_report_for(&b3, d(BraneKind::Slice, 1), d(BraneKind::Parabolic, 4), &Config::default()).unwrap();
        assert_eq!(r.dual_type, "C3");
        assert!(r.matched);
        let g2 = group("G2");
        let r = mirror_report_for(&g2, d(BraneKind::Slice, 1), d(BraneKind::Parabolic, 1), &Config::default()).unwrap();
        assert_eq!(r.right[0].subset, Simple(2));
        assert!(r.matched);
    }

    #[test]
    fn parsing() {
        assert_eq!(BraneDescriptor::parse("slice:1,2", 3).unwrap(), d(BraneKind::Slice, 3));
        assert_eq!(BraneDescriptor::parse("u", 3).unwrap(), d(BraneKind::Whittaker, 0));
        assert_eq!(BraneDescriptor::parse("parabolic:all", 3).unwrap(), d(BraneKind::Parabolic, 7));
        let g = BraneDescriptor::parse("gamma:1;all;3", 3).unwrap();
        assert_eq!(g.kind, BraneKind::Gamma { j: Simple(7), k: Simple(4) });
        assert!(BraneDescriptor::parse("nope:1", 3).is_err());
    }
}
