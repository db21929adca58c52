//! Built-in knots whose genus is certified by coinciding internal bounds.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::{alexander_genus_lower, bennequin_genus_upper};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub braid: BraidWord,
    pub exact_genus: u64,
    pub certification: String,
}

impl CatalogueEntry {
    /// Accepts `braid` only if its Alexander lower bound equals its Bennequin
    /// upper bound and that value is `claimed`.
    pub fn certify(name: &'static str, braid: BraidWord, claimed: u64) -> Result<Self> {
        let fail = |reason: String| Error::Certification {
            name: name.to_string(),
            reason,
        };
        let lower = alexander_genus_lower(&braid).map_err(|e| fail(e.to_string()))?;
        let upper = bennequin_genus_upper(&braid).map_err(|e| fail(e.to_string()))?;
        if lower != upper {
            return Err(fail(format!("bounds differ: {lower} <= g <= {upper}")));
        }
        if lower != claimed {
            return Err(fail(format!("certified genus {lower}, listed {claimed}")));
        }
        Ok(CatalogueEntry {
            name,
            braid,
            exact_genus: lower,
            certification: format!("alexander-span = bennequin-surface = {lower}"),
        })
    }
}

const ENTRIES: &[(&str, usize, &[i32], u64)] = &[
    ("unknot", 2, &[1], 0),
    ("trefoil", 2, &[1, 1, 1], 1),
    ("figure-eight", 3, &[1, -2, 1, -2], 1),
    ("T(2,5)", 2, &[1, 1, 1, 1, 1], 2),
    ("T(2,7)", 2, &[1, 1, 1, 1, 1, 1, 1], 3),
    ("T(3,4)", 3, &[1, 2, 1, 2, 1, 2, 1, 2], 3),
];

/// The built-in entries, each re-certified on every call.
pub fn catalogue() -> Result<Vec<CatalogueEntry>> {
    ENTRIES
        .iter()
        .map(|&(name, n, codes, g)| {
            CatalogueEntry::certify(name, BraidWord::from_codes(n, codes)?, g)
        })
        .collect()
}
