//! Checks that every subfamily of a family needs one edge per accepted set.

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::semantics::AcceptedFamily;

use super::{min_dc, SearchConfig, SearchStats, SearchStatus};

/// Largest family whose subfamilies are enumerated.
pub const MAX_UNIFORM_FAMILY: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubfamilyVerdict {
    /// No graph with fewer than `|g|` edges represents `g`.
    Hard,
    /// A witness smaller than `|g|` exists.
    NotHard { minimal_size: usize },
    /// The search could not decide: budget, edge limit or label cap.
    Unverified { exhausted_up_to: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformityReport {
    pub family: AcceptedFamily,
    pub subfamilies_total: usize,
    /// One entry per subfamily, ordered by the bitmask over `family`'s sets.
    pub verdicts: Vec<(AcceptedFamily, SubfamilyVerdict)>,
    pub stats: SearchStats,
}

impl UniformityReport {
    pub fn uniformly_hard(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v == SubfamilyVerdict::Hard)
    }

    pub fn violations(&self) -> impl Iterator<Item = &(AcceptedFamily, SubfamilyVerdict)> {
        self.verdicts
            .iter()
            .filter(|(_, v)| matches!(v, SubfamilyVerdict::NotHard { .. }))
    }

    pub fn unverified(&self) -> impl Iterator<Item = &(AcceptedFamily, SubfamilyVerdict)> {
        self.verdicts
            .iter()
            .filter(|(_, v)| matches!(v, SubfamilyVerdict::Unverified { .. }))
    }
}

/// Runs [`min_dc`] on every subfamily `g` of `f`.
///
/// The trivial graph already has `|g|` edges, so it is enough to rule out
/// everything below that: each search stops at `min(max_edges, |g| - 1)`.
/// Subfamilies are searched in parallel under `config.execution`; each
/// single search runs sequentially.
pub fn verify_uniform_hardness(f: &AcceptedFamily, config: &SearchConfig) -> Result<UniformityReport> {
    if f.len() > MAX_UNIFORM_FAMILY {
        return Err(Error::Parameter(format!(
            "uniform hardness check enumerates 2^|f| subfamilies; |f| = {} exceeds {MAX_UNIFORM_FAMILY}",
            f.len()
        )));
    }
    let sets: Vec<_> = f.iter().cloned().collect();
    let masks: Vec<u64> = (0..1u64 << sets.len()).collect();
    let results = par::map(config.execution, &masks, |&mask| {
        let sub = AcceptedFamily::from_sets(
            f.universe_size(),
            sets.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()),
        )?;
        let need = sub.len();
        if need == 0 {
            return Ok((sub, SubfamilyVerdict::Hard, SearchStats::default()));
        }
        let mut cfg = *config;
        cfg.max_edges = config.max_edges.min(need - 1);
        cfg.execution = Execution::Sequential;
        let r = min_dc(&sub, &cfg)?;
        let verdict = match (r.status, r.minimal_size) {
            (SearchStatus::Found, Some(k)) => SubfamilyVerdict::NotHard { minimal_size: k },
            (SearchStatus::NotFound, _) if r.exact && r.exhausted_up_to >= Some(need - 1) => SubfamilyVerdict::Hard,
            _ => SubfamilyVerdict::Unverified {
                exhausted_up_to: r.exhausted_up_to,
            },
        };
        Ok((sub, verdict, r.stats))
    });
    let mut report = UniformityReport {
        family: f.clone(),
        subfamilies_total: masks.len(),
        verdicts: Vec::with_capacity(masks.len()),
        stats: SearchStats::default(),
    };
    for r in results {
        let (sub, verdict, stats) = r?;
        report.stats.merge(&stats);
        report.verdicts.push((sub, verdict));
    }
    Ok(report)
}
