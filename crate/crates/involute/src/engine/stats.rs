//! Run statistics and the criteria configuration.

use serde::Serialize;

/// Which of the four involutive Buchberger-style criteria are consulted,
/// and whether the Rewritten purge (discarding queued descendants of a
/// generator whose own prolongation chain reduced to zero) is active.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriteriaConfig {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    pub rewritten: bool,
}

impl CriteriaConfig {
    /// Nothing enabled: every prolongation is reduced the hard way.
    pub fn none() -> Self {
        CriteriaConfig {
            c1: false,
            c2: false,
            c3: false,
            c4: false,
            rewritten: false,
        }
    }

    /// C1 and C2 with the Rewritten purge: the default preset.
    pub fn c1_c2() -> Self {
        CriteriaConfig {
            c1: true,
            c2: true,
            c3: false,
            c4: false,
            rewritten: true,
        }
    }

    /// All four criteria plus the Rewritten purge.
    pub fn all() -> Self {
        CriteriaConfig {
            c1: true,
            c2: true,
            c3: true,
            c4: true,
            rewritten: true,
        }
    }

    pub fn with_rewritten(mut self, on: bool) -> Self {
        self.rewritten = on;
        self
    }

    pub fn any_criterion(&self) -> bool {
        self.c1 || self.c2 || self.c3 || self.c4
    }
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        CriteriaConfig::c1_c2()
    }
}

/// Identifies which criterion discarded a prolongation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    C1,
    C2,
    C3,
    C4,
}

/// Counters collected over one basis computation.
///
/// `max_degree` tracks the largest total degree among the intermediate
/// polynomials the run produced: nonzero normal forms of proper
/// prolongations and of elements whose head dropped during reduction.
/// Inputs that pass through unchanged do not count.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunStats {
    pub basis_size: usize,
    #[serde(rename = "reductions_to_zero")]
    pub zero_reductions: u64,
    pub c1: u64,
    pub c2: u64,
    pub c3: u64,
    pub c4: u64,
    /// Queue entries removed by the Rewritten purge in the main loop.
    pub rewritten: u64,
    /// Queue entries removed by the purge inside head reduction; counted
    /// separately from `rewritten`.
    pub head_purged: u64,
    /// Queue entries re-wrapped as their own ancestor after a head drop
    /// during head reduction.
    pub head_rewrapped: u64,
    pub max_degree: u32,
    pub cpu_ms: f64,
    /// Triples selected from the queue by the main loop.
    pub selected: u64,
    /// Triples ever pushed onto the queue.
    pub enqueued: u64,
    /// Insertions into the intermediate basis (re-entries included).
    pub entered_basis: u64,
}

impl RunStats {
    pub fn record_criterion(&mut self, c: Criterion) {
        match c {
            Criterion::C1 => self.c1 += 1,
            Criterion::C2 => self.c2 += 1,
            Criterion::C3 => self.c3 += 1,
            Criterion::C4 => self.c4 += 1,
        }
    }

    pub fn criteria_total(&self) -> u64 {
        self.c1 + self.c2 + self.c3 + self.c4
    }

    pub fn observe_degree(&mut self, deg: u32) {
        if deg > self.max_degree {
            self.max_degree = deg;
        }
    }
}
