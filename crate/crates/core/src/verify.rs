//! Invariant suite run by `verify-all`: each check compares two independent
//! computations exhaustively over one root system.

use serde::Serialize;

use crate::closedsets::{all_triples, gamma_closedness_criterion, gamma_set, invertibility_criterion, is_closed, is_invertible, symmetric_part, witness_holds};
use crate::error::Result;
use crate::fixedpoints::{fixed_points_bruteforce, fixed_points_theorem_blocks, projection_image, weyl_decomposition, z_fixed_points};
use crate::simple::Simple;
use crate::weyl::{free_double_cosets, free_orbit_minima, Sign, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// The theorem-versus-brute-force sweep is skipped above this `|W|`.
    pub max_theorem_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_theorem_order: 1200 }
    }
}

struct Tally {
    rec: CheckRecord,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { rec: CheckRecord { name, cases: 0, failures: 0, skipped: false, first_failure: None } }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.rec.cases += 1;
        if !ok {
            self.rec.failures += 1;
            if self.rec.first_failure.is_none() {
                self.rec.first_failure = Some(what());
            }
        }
    }

    fn skipped(mut self) -> CheckRecord {
        self.rec.skipped = true;
        self.rec
    }
}

fn subsets(rank: usize) -> Vec<Simple> {
    Simple::all_subsets(rank).collect()
}

fn theorem_vs_brute(w: &WeylGroup, opts: VerifyOptions) -> Result<CheckRecord> {
    let mut t = Tally::new("theorem-equals-bruteforce");
    if w.order() > opts.max_theorem_order {
        return Ok(t.skipped());
    }
    let sys = w.root_system();
    for (i, j, k) in all_triples(sys.rank()) {
        let gamma = gamma_set(sys, i, j, k);
        if !is_closed(sys, &gamma)? {
            continue;
        }
        for l in subsets(sys.rank()) {
            let brute = fixed_points_bruteforce(w, l, &gamma)?;
            let outcome = fixed_points_theorem_blocks(w, l, i, j, k);
            let ok = match &outcome {
                Ok((thm, _)) => thm.reps() == brute.reps(),
                Err(e) if e.is_verification_failure() => false,
                Err(e) => return Err(e.clone()),
            };
            t.check(ok, || format!("L={{{l}}} I={{{i}}} J={{{j}}} K={{{k}}}"));
        }
    }
    Ok(t.rec)
}

fn closedness_criterion(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("closedness-criterion");
    let sys = w.root_system();
    for (i, j, k) in all_triples(sys.rank()) {
        let closed = is_closed(sys, &gamma_set(sys, i, j, k))?;
        let wit = gamma_closedness_criterion(sys, i, j, k)?;
        let ok = wit.is_some() == closed && wit.is_none_or(|x| witness_holds(sys, i, j, k, x));
        t.check(ok, || format!("I={{{i}}} J={{{j}}} K={{{k}}} closed={closed}"));
    }
    Ok(t.rec)
}

fn invertibility(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("invertibility-criterion");
    let sys = w.root_system();
    let all = Simple::all(sys.rank());
    for i in subsets(sys.rank()) {
        for k in subsets(sys.rank()) {
            let gamma = gamma_set(sys, i, all, k);
            if !is_closed(sys, &gamma)? {
                continue;
            }
            let ok = is_invertible(sys, &gamma)? == invertibility_criterion(sys, i, k);
            t.check(ok, || format!("I={{{i}}} K={{{k}}}"));
        }
    }
    Ok(t.rec)
}

fn free_cosets(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("free-double-cosets");
    let rank = w.rank();
    for l in subsets(rank) {
        for i in subsets(rank) {
            let space = w.coset_space(i, crate::weyl::Side::Right);
            let by_root: Vec<usize> = free_double_cosets(w, l, i, Sign::Plus).into_iter().map(|c| space.rep(c)).collect();
            let mut by_root_min: Vec<usize> = by_root.iter().map(|&r| *w.double_coset(l, i, r).iter().min().unwrap()).collect();
            by_root_min.sort_unstable();
            by_root_min.dedup();
            let mut orbits = free_orbit_minima(w, l, i);
            orbits.sort_unstable();
            let proj = projection_image(w, i, l)?.len();
            t.check(by_root_min == orbits && proj == by_root.len(), || format!("L={{{l}}} I={{{i}}}"));
        }
    }
    Ok(t.rec)
}

fn decomposition(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("weyl-decomposition");
    for l in subsets(w.rank()) {
        let blocks = weyl_decomposition(w, l)?;
        let mut seen = vec![false; w.order()];
        let mut ok = blocks.len() == 1 << l.len();
        for b in &blocks {
            for &x in &b.members {
                ok &= !std::mem::replace(&mut seen[x], true);
            }
        }
        ok &= seen.iter().all(|&s| s);
        t.check(ok, || format!("L={{{l}}}"));
    }
    Ok(t.rec)
}

fn mirror_symmetry(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("free-count-symmetry");
    let rank = w.rank();
    for l in subsets(rank) {
        for i in subsets(rank) {
            let a = free_double_cosets(w, l, i, Sign::Plus).len();
            let b = free_double_cosets(w, i, l, Sign::Plus).len();
            t.check(a == b, || format!("L={{{l}}} I={{{i}}}: {a} vs {b}"));
        }
    }
    Ok(t.rec)
}

fn z_matching(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("z-matching");
    let sys = w.root_system();
    let empty = sys.empty_subset();
    for i in subsets(sys.rank()) {
        let z = z_fixed_points(w, i)?.len();
        for l in subsets(sys.rank()) {
            let n = fixed_points_bruteforce(w, l, &empty)?.len();
            t.check((z == n) == i.is_empty(), || format!("I={{{i}}} L={{{l}}}: {z} vs {n}"));
        }
    }
    Ok(t.rec)
}

fn symmetric_parts(w: &WeylGroup) -> Result<CheckRecord> {
    let mut t = Tally::new("symmetric-part");
    let sys = w.root_system();
    for (i, j, k) in all_triples(sys.rank()) {
        let gamma = gamma_set(sys, i, j, k);
        if !is_closed(sys, &gamma)? {
            continue;
        }
        t.check(symmetric_part(sys, &gamma) == sys.span(i), || format!("I={{{i}}} J={{{j}}} K={{{k}}}"));
    }
    Ok(t.rec)
}

/// Runs every check on `w`, reporting progress through `progress`.
pub fn verify_group(w: &WeylGroup, opts: VerifyOptions, mut progress: impl FnMut(&str)) -> Result<Vec<CheckRecord>> {
    type Check<'a> = Box<dyn Fn(&WeylGroup) -> Result<CheckRecord> + 'a>;
    let checks: Vec<(&str, Check)> = vec![
        ("theorem-equals-bruteforce", Box::new(move |w| theorem_vs_brute(w, opts))),
        ("closedness-criterion", Box::new(closedness_criterion)),
        ("invertibility-criterion", Box::new(invertibility)),
        ("free-double-cosets", Box::new(free_cosets)),
        ("weyl-decomposition", Box::new(decomposition)),
        ("free-count-symmetry", Box::new(mirror_symmetry)),
        ("z-matching", Box::new(z_matching)),
        ("symmetric-part", Box::new(symmetric_parts)),
    ];
    let mut out = Vec::new();
    for (name, run) in checks {
        progress(name);
        out.push(run(w)?);
    }
    Ok(out)
}
