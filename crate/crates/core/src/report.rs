//! Per-braid verification of the floor inequalities against certified bounds.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    corollary_rhs, corollary_weak_rhs, floor_genus_lower, integer, render_rational, theorem_rhs,
    Rational,
};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::invariants::{
    alexander_genus_lower, alexander_polynomial, bennequin_genus_upper, BoundSource, GenusBounds,
};
use crate::order::HandleReducer;

/// Euler characteristic of the Bennequin surface of the freely reduced word,
/// `n - l`, where `l` is the reduced length. The surface may be disconnected.
pub fn bennequin_surface_chi(w: &BraidWord) -> i64 {
    crate::invariants::bennequin_chi(w)
}

/// Number of connected pieces of the Bennequin surface of the reduced word:
/// strands `k` and `k+1` share a piece whenever `sigma_k` occurs.
pub fn bennequin_pieces(w: &BraidWord) -> usize {
    let used: BTreeSet<usize> = w
        .free_reduce()
        .letters()
        .iter()
        .map(|l| l.index())
        .collect();
    w.strands() - used.len()
}

/// Euler characteristic of a connected spanning surface of the closure: the
/// Bennequin surface with its pieces joined by tubes, each costing 2.
pub fn connected_chi_lower(w: &BraidWord) -> i64 {
    bennequin_surface_chi(w) - 2 * (bennequin_pieces(w) as i64 - 1)
}

/// How the two sides of a check are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessOrEqual,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Less => lhs < rhs,
            Relation::LessOrEqual => lhs <= rhs,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
        }
    }
}

/// One evaluated inequality, with both sides kept for diagnosis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl Check {
    fn new(name: &'static str, relation: Relation, lhs: Rational, rhs: Rational) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        Check {
            name,
            relation,
            lhs,
            rhs,
            holds,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.name,
            render_rational(&self.lhs),
            self.relation.as_str(),
            render_rational(&self.rhs),
            if self.holds { "ok" } else { "FAIL" }
        )
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "theorem-chi",
    "corollary-upper",
    "corollary-weak",
    "prop1-sigma1",
    "bounds-order",
    "floor-lower-consistent",
];

/// Everything `verify_braid` learned about one braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub braid: BraidWord,
    pub floor: u64,
    pub chi_lower: i64,
    pub genus: Option<GenusBounds>,
    pub alexander_lower: Option<u64>,
    pub alexander: Option<String>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn record(&self) -> VerificationRecord {
        let get = |name: &str| self.check(name).map(|c| c.holds);
        let rhs = |name: &str| self.check(name).map(|c| render_rational(&c.rhs));
        VerificationRecord {
            braid: self.braid.to_string(),
            n: self.braid.strands(),
            length: self.braid.len(),
            floor: self.floor,
            chi_lower: self.chi_lower,
            genus_lower: self.genus.map(|g| g.lower),
            genus_upper: self.genus.map(|g| g.upper),
            genus_lower_source: self.genus.map(|g| g.lower_source.to_string()),
            alexander: self.alexander.clone(),
            theorem_rhs: rhs("theorem-chi").unwrap_or_default(),
            corollary_rhs: rhs("corollary-upper"),
            check_theorem_chi: get("theorem-chi"),
            check_corollary_upper: get("corollary-upper"),
            check_corollary_weak: get("corollary-weak"),
            check_prop1_sigma1: get("prop1-sigma1"),
            check_bounds_order: get("bounds-order"),
            check_floor_lower_consistent: get("floor-lower-consistent"),
            all_hold: self.all_hold(),
        }
    }
}

/// Flat, serializable form of a report. Checks that do not apply to the
/// braid are absent; rationals are rendered as `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub braid: String,
    pub n: usize,
    pub length: usize,
    pub floor: u64,
    pub chi_lower: i64,
    pub genus_lower: Option<u64>,
    pub genus_upper: Option<u64>,
    pub genus_lower_source: Option<String>,
    pub alexander: Option<String>,
    pub theorem_rhs: String,
    pub corollary_rhs: Option<String>,
    pub check_theorem_chi: Option<bool>,
    pub check_corollary_upper: Option<bool>,
    pub check_corollary_weak: Option<bool>,
    pub check_prop1_sigma1: Option<bool>,
    pub check_bounds_order: Option<bool>,
    pub check_floor_lower_consistent: Option<bool>,
    pub all_hold: bool,
}

/// Computes the floor and the certified bounds of `w` and evaluates every
/// applicable inequality. Failed checks are data; errors only come from the
/// reducer's step limit.
pub fn verify_braid_with(reducer: &HandleReducer, w: &BraidWord) -> Result<VerificationReport> {
    let n = w.strands();
    let floor = reducer.floor(w)?.floor as u64;
    let floor_q = integer(floor as i64);
    let chi_lower = connected_chi_lower(w);
    let mut checks = vec![Check::new(
        "theorem-chi",
        Relation::Less,
        floor_q.clone(),
        theorem_rhs(n, chi_lower),
    )];

    let (mut genus, mut alexander, mut alexander_lower) = (None, None, None);
    if w.is_knot() {
        let lower = alexander_genus_lower(w)?;
        let upper = bennequin_genus_upper(w)?;
        let from_floor = floor_genus_lower(n, floor);
        checks.push(Check::new(
            "corollary-upper",
            Relation::Less,
            floor_q.clone(),
            corollary_rhs(n, upper),
        ));
        checks.push(Check::new(
            "corollary-weak",
            Relation::Less,
            floor_q.clone(),
            corollary_weak_rhs(upper),
        ));
        checks.push(Check::new(
            "bounds-order",
            Relation::LessOrEqual,
            integer(lower as i64),
            integer(upper as i64),
        ));
        checks.push(Check::new(
            "floor-lower-consistent",
            Relation::LessOrEqual,
            integer(from_floor as i64),
            integer(upper as i64),
        ));
        genus = Some(GenusBounds::classical(w)?.with_lower(from_floor, BoundSource::DehornoyFloor));
        alexander = Some(alexander_polynomial(w)?.to_string());
        alexander_lower = Some(lower);
    }

    let (s, k) = w.sigma1_counts();
    let m = s.max(k);
    if m >= 1 {
        checks.push(Check::new(
            "prop1-sigma1",
            Relation::Less,
            floor_q,
            integer(m as i64),
        ));
    }
    checks.sort_by_key(|c| CHECK_NAMES.iter().position(|&n| n == c.name));

    Ok(VerificationReport {
        braid: w.clone(),
        floor,
        chi_lower,
        genus,
        alexander_lower,
        alexander,
        checks,
    })
}

/// [`verify_braid_with`] using the default reducer.
pub fn verify_braid(w: &BraidWord) -> Result<VerificationReport> {
    verify_braid_with(&HandleReducer::default(), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::rational;

    fn w(n: usize, codes: &[i32]) -> BraidWord {
        BraidWord::from_codes(n, codes).unwrap()
    }

    #[test]
    fn trefoil_report() {
        let r = verify_braid(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(r.floor, 1);
        assert_eq!(r.chi_lower, -1);
        let g = r.genus.unwrap();
        assert_eq!((g.lower, g.upper), (1, 1));
        assert!(r.all_hold());
        let t = r.check("theorem-chi").unwrap();
        assert_eq!((t.lhs.clone(), t.rhs.clone()), (integer(1), integer(2)));
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn unknot_report() {
        let r = verify_braid(&w(2, &[1])).unwrap();
        assert_eq!(r.floor, 0);
        let g = r.genus.unwrap();
        assert_eq!((g.lower, g.upper), (0, 0));
        let c = r.check("corollary-upper").unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (integer(0), integer(1)));
        assert!(r.all_hold());
    }

    #[test]
    fn figure_eight_report() {
        let r = verify_braid(&w(3, &[1, -2, 1, -2])).unwrap();
        let g = r.genus.unwrap();
        assert_eq!((g.lower, g.upper), (1, 1));
        assert_eq!(r.check("corollary-upper").unwrap().rhs, rational(19, 10));
        assert!(r.all_hold());
    }

    #[test]
    fn links_skip_knot_checks() {
        let r = verify_braid(&w(3, &[1, 1])).unwrap();
        assert!(r.genus.is_none());
        let names: Vec<_> = r.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, ["theorem-chi", "prop1-sigma1"]);
        let rec = r.record();
        assert_eq!(rec.check_corollary_upper, None);
        assert_eq!(rec.check_theorem_chi, Some(true));
    }

    #[test]
    fn split_closures_use_a_connected_surface() {
        let id = w(6, &[]);
        assert_eq!(bennequin_pieces(&id), 6);
        assert_eq!(connected_chi_lower(&id), -4);
        // the disconnected disks alone would give 0 < 0
        assert_eq!(theorem_rhs(6, bennequin_surface_chi(&id)), integer(0));
        assert!(verify_braid(&id).unwrap().all_hold());
        assert_eq!(connected_chi_lower(&w(3, &[1, -2, 1, -2])), -1);
        assert_eq!(connected_chi_lower(&w(4, &[1, -1, 3])), 4 - 1 - 4);
    }
}
