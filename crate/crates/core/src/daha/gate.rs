use std::sync::OnceLock;

use serde::Serialize;

use super::oracle::{check_zero, modular_agrees, OracleConfig};
use super::relations::daha_relations;
use super::rep::Convention;
use super::DahaError;

/// Relation families failed by one convention variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantReport {
    pub convention: Convention,
    pub failed_families: Vec<u8>,
}

/// Outcome of the convention search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Selection {
    pub convention: Convention,
    pub variants: Vec<VariantReport>,
}

/// Rank and box of the search.
pub const GATE_RANK: usize = 2;
pub const GATE_RADIUS: u32 = 2;

/// Tries every convention against the defining relations at rank 2 on the
/// box of radius 2 and keeps the unique survivor.
///
/// Failures are established by modular evaluation, which is a sound
/// refutation; the survivor is then confirmed exactly.
pub fn search_conventions() -> Result<Selection, DahaError> {
    let cfg = OracleConfig { box_radius: GATE_RADIUS, trials: 2, seed: 0x5eed, ..Default::default() };
    let rels = daha_relations(GATE_RANK);
    let mut variants = Vec::new();
    for conv in Convention::all() {
        let mut failed: Vec<u8> = rels
            .iter()
            .filter(|r| !modular_agrees(&r.lhs.clone().sub(r.rhs.clone()), conv, GATE_RANK, &cfg))
            .map(|r| r.family)
            .collect();
        failed.dedup();
        variants.push(VariantReport { convention: conv, failed_families: failed });
    }
    let survivors: Vec<Convention> =
        variants.iter().filter(|v| v.failed_families.is_empty()).map(|v| v.convention).collect();
    let diagnostic = || {
        variants
            .iter()
            .map(|v| format!("{}: failed {:?}", v.convention, v.failed_families))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let conv = match survivors.as_slice() {
        [] => return Err(DahaError::NoConvention(diagnostic())),
        [one] => *one,
        _ => return Err(DahaError::AmbiguousConvention(diagnostic())),
    };
    for r in &rels {
        let v = check_zero(&r.lhs.clone().sub(r.rhs.clone()), conv, GATE_RANK, &cfg)?;
        if !v.is_equal() {
            return Err(DahaError::NoConvention(format!("{conv} fails {} exactly", r.id)));
        }
    }
    Ok(Selection { convention: conv, variants })
}

/// The search result, computed once per process.
pub fn selection() -> Result<&'static Selection, DahaError> {
    static SEL: OnceLock<Result<Selection, DahaError>> = OnceLock::new();
    SEL.get_or_init(search_conventions).as_ref().map_err(Clone::clone)
}

/// The selected convention for the representation at rank `n`.
pub fn build_rep(n: usize) -> Result<Convention, DahaError> {
    if n == 0 {
        return Err(DahaError::BadRank(n));
    }
    Ok(selection()?.convention)
}
