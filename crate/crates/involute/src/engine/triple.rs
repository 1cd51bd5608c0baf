//! The bookkeeping record carried through a basis computation: a
//! polynomial, its ancestor (the generator it descends from by
//! non-multiplicative prolongations), and the prolongation variables
//! already processed.
//!
//! Ancestors are compared by identity stamp, never by polynomial value:
//! two distinct records may transiently carry equal polynomials. Birth
//! stamps increase strictly in creation order, which is what both the
//! queue tie-breaking and the "computed before" test of criterion C4
//! rely on.

use std::cmp::Ordering;

use crate::janet::VarSet;
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};

/// Monotone id generator for triples.
#[derive(Debug, Default)]
pub struct IdGen(u64);

impl IdGen {
    pub fn next_id(&mut self) -> u64 {
        self.0 += 1;
        self.0
    }
}

#[derive(Clone, Debug)]
pub struct Triple {
    id: u64,
    poly: Polynomial,
    anc_lm: Monomial,
    anc_id: u64,
    processed_nm: VarSet,
}

impl Triple {
    /// Wraps a polynomial as its own ancestor.
    pub fn generator(poly: Polynomial, id: u64) -> Self {
        assert!(!poly.is_zero(), "triples carry nonzero polynomials");
        let anc_lm = poly.leading_monomial().clone();
        Triple {
            id,
            poly,
            anc_lm,
            anc_id: id,
            processed_nm: VarSet::empty(),
        }
    }

    /// Wraps a polynomial with an inherited ancestor.
    pub fn with_ancestor(
        poly: Polynomial,
        anc_lm: Monomial,
        anc_id: u64,
        processed_nm: VarSet,
        id: u64,
    ) -> Self {
        assert!(!poly.is_zero(), "triples carry nonzero polynomials");
        debug_assert!(
            anc_lm.divides(poly.leading_monomial()),
            "ancestor head must divide the carried head"
        );
        Triple {
            id,
            poly,
            anc_lm,
            anc_id,
            processed_nm,
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn leading_monomial(&self) -> &Monomial {
        self.poly.leading_monomial()
    }

    pub fn anc_lm(&self) -> &Monomial {
        &self.anc_lm
    }

    pub fn anc_id(&self) -> u64 {
        self.anc_id
    }

    pub fn processed_nm(&self) -> VarSet {
        self.processed_nm
    }

    pub fn is_own_ancestor(&self) -> bool {
        self.anc_id == self.id
    }

    /// A proper prolongation carries a head strictly above its ancestor's.
    pub fn is_proper_prolongation(&self) -> bool {
        self.poly.leading_monomial() != &self.anc_lm
    }

    pub(crate) fn set_poly(&mut self, poly: Polynomial) {
        assert!(!poly.is_zero());
        self.poly = poly;
    }

    pub(crate) fn set_processed_nm(&mut self, nm: VarSet) {
        self.processed_nm = nm;
    }
}

/// Selection key used for queues: lowest leading monomial under
/// degree-reverse-lexicographic comparison; ties go to the triple whose
/// ancestor was born first, then to the older triple. Degrevlex is
/// degree-compatible, so the minimum never has a proper divisor among the
/// queued heads, whatever ordering the basis itself uses.
fn selection_cmp(a: &Triple, b: &Triple) -> Ordering {
    MonomialOrder::DegRevLex
        .compare(a.leading_monomial(), b.leading_monomial())
        .then(a.anc_id.cmp(&b.anc_id))
        .then(a.id.cmp(&b.id))
}

/// Removes and returns the queue element preferred by the selection
/// strategy.
pub fn select_next(queue: &mut Vec<Triple>) -> Triple {
    assert!(!queue.is_empty(), "selection from an empty queue");
    let mut best = 0;
    for i in 1..queue.len() {
        if selection_cmp(&queue[i], &queue[best]) == Ordering::Less {
            best = i;
        }
    }
    queue.remove(best)
}

/// Index of a polynomial whose head has no proper conventional divisor
/// among the heads of `system`: the degrevlex-minimal head, earliest
/// input position on ties.
pub fn select_initial(system: &[Polynomial]) -> usize {
    assert!(!system.is_empty(), "selection from an empty system");
    let mut best = 0;
    for i in 1..system.len() {
        if MonomialOrder::DegRevLex.compare(
            system[i].leading_monomial(),
            system[best].leading_monomial(),
        ) == Ordering::Less
        {
            best = i;
        }
    }
    best
}
