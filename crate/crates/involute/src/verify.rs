//! Post-hoc verification of a computed basis.
//!
//! Four independent checks: the prolongation certificate (every
//! non-multiplicative prolongation involutively reduces to zero, computed
//! with no criteria), the conventional S-polynomial test, two-sided ideal
//! equality against an independently computed reduced Gröbner basis, and
//! involutive head autoreduction.
//!
//! The batch checks are data-parallel; with the `parallel` feature they
//! run on rayon, otherwise on a plain sequential loop. The `_sequential`
//! variants are always available for comparison.

use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::engine::involutive_normal_form;
use crate::janet::JanetPartition;
use crate::oracle::{self, ReducedGb};
use crate::poly::{Monomial, Polynomial};

/// Verdicts of [`verify_involutive_output`]; all four hold for a correct
/// run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem5: bool,
    pub spoly: bool,
    pub ideal_equal: bool,
    pub heads_minimal: bool,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.theorem5 && self.spoly && self.ideal_equal && self.heads_minimal
    }
}

fn basis_partition(basis: &[Polynomial]) -> Option<JanetPartition> {
    if basis.is_empty() {
        return None;
    }
    let lms: Vec<Monomial> = basis.iter().map(|f| f.leading_monomial().clone()).collect();
    let part = JanetPartition::compute(&lms);
    // distinct heads are a precondition for aligning partition indices
    // with basis indices
    (part.len() == basis.len()).then_some(part)
}

/// All (generator, non-multiplicative variable) prolongation jobs.
fn prolongation_jobs(basis: &[Polynomial], part: &JanetPartition) -> Vec<(usize, usize)> {
    (0..basis.len())
        .flat_map(|i| {
            part.nonmultiplicative_at(i)
                .iter()
                .map(move |x| (i, x))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn prolongation_vanishes(
    basis: &[Polynomial],
    part: &JanetPartition,
    job: (usize, usize),
) -> bool {
    let (i, x) = job;
    involutive_normal_form(&basis[i].mul_var(x), basis, part).is_zero()
}

/// Every non-multiplicative prolongation of the basis involutively
/// reduces to zero (no criteria involved).
pub fn theorem5_certificate(basis: &[Polynomial]) -> bool {
    let Some(part) = basis_partition(basis) else {
        return basis.is_empty();
    };
    let jobs = prolongation_jobs(basis, &part);
    #[cfg(feature = "parallel")]
    {
        jobs.par_iter()
            .all(|&job| prolongation_vanishes(basis, &part, job))
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter()
            .all(|&job| prolongation_vanishes(basis, &part, job))
    }
}

/// Sequential twin of [`theorem5_certificate`].
pub fn theorem5_certificate_sequential(basis: &[Polynomial]) -> bool {
    let Some(part) = basis_partition(basis) else {
        return basis.is_empty();
    };
    prolongation_jobs(basis, &part)
        .into_iter()
        .all(|job| prolongation_vanishes(basis, &part, job))
}

fn spoly_jobs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect()
}

fn spoly_vanishes(basis: &[Polynomial], job: (usize, usize)) -> bool {
    let s = oracle::s_polynomial(&basis[job.0], &basis[job.1]);
    oracle::conventional_normal_form(&s, basis).is_zero()
}

/// Every S-polynomial of the basis reduces to zero conventionally.
pub fn spolys_reduce_to_zero(basis: &[Polynomial]) -> bool {
    let jobs = spoly_jobs(basis.len());
    #[cfg(feature = "parallel")]
    {
        jobs.par_iter().all(|&job| spoly_vanishes(basis, job))
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().all(|&job| spoly_vanishes(basis, job))
    }
}

/// Sequential twin of [`spolys_reduce_to_zero`].
pub fn spolys_reduce_to_zero_sequential(basis: &[Polynomial]) -> bool {
    spoly_jobs(basis.len())
        .into_iter()
        .all(|job| spoly_vanishes(basis, job))
}

/// No head is involutively divisible by another basis element's head.
pub fn heads_involutively_autoreduced(basis: &[Polynomial]) -> bool {
    let Some(part) = basis_partition(basis) else {
        return basis.is_empty();
    };
    (0..basis.len()).all(|i| {
        (0..basis.len()).all(|j| {
            i == j || !part.divides_involutively_at(j, basis[i].leading_monomial())
        })
    })
}

/// Two-sided membership: the basis lies in the input ideal (normal forms
/// against the oracle's reduced Gröbner basis vanish) and the input lies
/// in the basis ideal (conventional normal forms against the basis
/// vanish; meaningful once the S-polynomial test holds).
fn ideal_equal(input: &[Polynomial], basis: &[Polynomial], gb: &ReducedGb) -> bool {
    let nonzero_inputs: Vec<&Polynomial> = input.iter().filter(|f| !f.is_zero()).collect();
    if basis.is_empty() || gb.is_empty() {
        return nonzero_inputs.is_empty() && basis.is_empty() && gb.is_empty();
    }
    let forward = {
        #[cfg(feature = "parallel")]
        {
            basis.par_iter().all(|g| gb.contains(g))
        }
        #[cfg(not(feature = "parallel"))]
        {
            basis.iter().all(|g| gb.contains(g))
        }
    };
    let backward = {
        #[cfg(feature = "parallel")]
        {
            nonzero_inputs
                .par_iter()
                .all(|f| oracle::conventional_normal_form(f, basis).is_zero())
        }
        #[cfg(not(feature = "parallel"))]
        {
            nonzero_inputs
                .iter()
                .all(|f| oracle::conventional_normal_form(f, basis).is_zero())
        }
    };
    forward && backward
}

/// Runs all four checks, computing the oracle's reduced Gröbner basis of
/// `input` internally.
pub fn verify_involutive_output(input: &[Polynomial], basis: &[Polynomial]) -> VerificationReport {
    let gb = oracle::buchberger(input);
    verify_with_gb(input, basis, &gb)
}

/// Sequential twin of [`verify_involutive_output`].
pub fn verify_involutive_output_sequential(
    input: &[Polynomial],
    basis: &[Polynomial],
) -> VerificationReport {
    let gb = oracle::buchberger(input);
    let nonzero_inputs: Vec<&Polynomial> = input.iter().filter(|f| !f.is_zero()).collect();
    let ideal_equal = if basis.is_empty() || gb.is_empty() {
        nonzero_inputs.is_empty() && basis.is_empty() && gb.is_empty()
    } else {
        basis.iter().all(|g| gb.contains(g))
            && nonzero_inputs
                .iter()
                .all(|f| oracle::conventional_normal_form(f, basis).is_zero())
    };
    VerificationReport {
        theorem5: theorem5_certificate_sequential(basis),
        spoly: spolys_reduce_to_zero_sequential(basis),
        ideal_equal,
        heads_minimal: heads_involutively_autoreduced(basis),
    }
}

/// Runs all four checks against a caller-supplied reduced Gröbner basis
/// of the input (lets one oracle run serve several algorithm outputs).
pub fn verify_with_gb(
    input: &[Polynomial],
    basis: &[Polynomial],
    gb: &ReducedGb,
) -> VerificationReport {
    VerificationReport {
        theorem5: theorem5_certificate(basis),
        spoly: spolys_reduce_to_zero(basis),
        ideal_equal: ideal_equal(input, basis, gb),
        heads_minimal: heads_involutively_autoreduced(basis),
    }
}
