//! Conventional Buchberger machinery used to check the involutive
//! engine's output: S-polynomials, conventional normal forms, reduced
//! Gröbner bases, and ideal membership.
//!
//! This module deliberately shares only the polynomial arithmetic and the
//! orderings with the engine; it never consults a Janet partition.

use std::cmp::Ordering;

use crate::poly::{reduce_step, Monomial, Polynomial};

/// S-polynomial of two nonzero polynomials:
/// `(lcm/LT(f))·f − (lcm/LT(g))·g` with `lcm = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert!(
        !f.is_zero() && !g.is_zero(),
        "S-polynomial of a zero polynomial"
    );
    let lcm = f.leading_monomial().lcm(g.leading_monomial());
    let tf = crate::poly::Term {
        coeff: f.leading_coeff().recip(),
        mono: lcm.quotient(f.leading_monomial()),
    };
    let tg = crate::poly::Term {
        coeff: g.leading_coeff().recip(),
        mono: lcm.quotient(g.leading_monomial()),
    };
    f.mul_term(&tf).sub(&g.mul_term(&tg))
}

/// Full conventional normal form: every term divisible by some leading
/// monomial of `basis` is reduced; reducers are tried in slice order.
pub fn conventional_normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut h = f.clone();
    let mut scan_from = 0;
    while !h.is_zero() {
        let mut found = None;
        'terms: for (ti, t) in h.terms().iter().enumerate().skip(scan_from) {
            for (gi, g) in basis.iter().enumerate() {
                if !g.is_zero() && g.leading_monomial().divides(&t.mono) {
                    found = Some((ti, gi));
                    break 'terms;
                }
            }
        }
        let Some((ti, gi)) = found else { break };
        let t = h.terms()[ti].clone();
        h = reduce_step(&h, &basis[gi], &t);
        scan_from = ti;
    }
    h
}

/// A reduced Gröbner basis: monic generators, pairwise interreduced,
/// sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGb {
    generators: Vec<Polynomial>,
}

impl ReducedGb {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership test: `f` lies in the ideal iff its conventional normal
    /// form vanishes.
    pub fn contains(&self, f: &Polynomial) -> bool {
        conventional_normal_form(f, &self.generators).is_zero()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BuchbergerOptions {
    /// Skip pairs with coprime heads.
    pub coprime_criterion: bool,
    /// Skip pairs covered by a third generator whose pairs were already
    /// treated.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            coprime_criterion: true,
            chain_criterion: true,
        }
    }
}

/// Buchberger's algorithm with the normal selection strategy (pair of
/// minimal lcm under the active order first), returning the reduced
/// monic Gröbner basis.
pub fn buchberger(system: &[Polynomial]) -> ReducedGb {
    buchberger_with(system, BuchbergerOptions::default())
}

pub fn buchberger_with(system: &[Polynomial], opts: BuchbergerOptions) -> ReducedGb {
    let inputs: Vec<Polynomial> = system
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.make_monic())
        .collect();
    if inputs.is_empty() {
        return ReducedGb {
            generators: Vec::new(),
        };
    }
    let order = inputs[0].order();

    let mut basis: Vec<Polynomial> = Vec::new();
    for f in inputs {
        if !basis.contains(&f) {
            basis.push(f);
        }
    }

    // pending pairs keyed by lcm of the heads
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let add_pairs = |pairs: &mut Vec<(usize, usize, Monomial)>, basis: &[Polynomial], k: usize| {
        for i in 0..k {
            let lcm = basis[i].leading_monomial().lcm(basis[k].leading_monomial());
            pairs.push((i, k, lcm));
        }
    };
    for k in 0..basis.len() {
        add_pairs(&mut pairs, &basis, k);
    }

    while !pairs.is_empty() {
        // normal strategy: lowest lcm first, then oldest pair
        let mut best = 0;
        for i in 1..pairs.len() {
            let c = order.compare(&pairs[i].2, &pairs[best].2);
            if c == Ordering::Less
                || (c == Ordering::Equal && (pairs[i].0, pairs[i].1) < (pairs[best].0, pairs[best].1))
            {
                best = i;
            }
        }
        let (i, j, lcm) = pairs.remove(best);

        if opts.coprime_criterion {
            let product = basis[i].leading_monomial().mul(basis[j].leading_monomial());
            if product == lcm {
                continue;
            }
        }
        if opts.chain_criterion {
            // sound without bookkeeping: both sub-lcms properly divide
            // lcm(i, j), so the skipped pair is covered by pairs that are
            // strictly smaller in the well-founded lcm order
            let covered = (0..basis.len()).any(|k| {
                k != i && k != j && {
                    let lk = basis[k].leading_monomial();
                    lk.divides(&lcm)
                        && lk.lcm(basis[i].leading_monomial()).properly_divides(&lcm)
                        && lk.lcm(basis[j].leading_monomial()).properly_divides(&lcm)
                }
            });
            if covered {
                continue;
            }
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let r = conventional_normal_form(&s, &basis);
        if !r.is_zero() {
            let r = r.make_monic();
            basis.push(r);
            add_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    ReducedGb {
        generators: interreduce(basis),
    }
}

/// Minimalizes heads and fully interreduces: the canonical reduced monic
/// form of a Gröbner basis (unique for the ideal and ordering).
fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|f| !f.is_zero());
    if basis.is_empty() {
        return basis;
    }
    let order = basis[0].order();

    // drop generators whose head another generator's head divides
    let mut keep: Vec<Polynomial> = Vec::new();
    'outer: for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            let li = basis[i].leading_monomial();
            let lj = basis[j].leading_monomial();
            if lj.properly_divides(li) || (li == lj && j < i) {
                continue 'outer;
            }
        }
        keep.push(basis[i].clone());
    }

    // reduce every generator against the others until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, f)| f.clone())
                .collect();
            let r = conventional_normal_form(&keep[i], &others).make_monic();
            if r != keep[i] {
                keep[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    keep.sort_by(|a, b| order.compare(a.leading_monomial(), b.leading_monomial()));
    keep
}

/// Conventional autoreduction of an input system: repeatedly replaces
/// each element by its normal form modulo the others, drops zeros, and
/// normalizes to monic.
pub fn autoreduce(system: &[Polynomial]) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = system.iter().filter(|f| !f.is_zero()).cloned().collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < g.len() {
            let others: Vec<Polynomial> = g
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, f)| f.clone())
                .collect();
            let r = conventional_normal_form(&g[i], &others);
            if r.is_zero() {
                g.remove(i);
                changed = true;
                continue;
            }
            let r = r.make_monic();
            if r != g[i] {
                g[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    g
}

/// Extracts the reduced Gröbner basis hiding inside a Gröbner basis
/// (conventional head minimalization plus interreduction).
pub fn extract_reduced_gb(basis: &[Polynomial]) -> Vec<Polynomial> {
    interreduce(basis.iter().filter(|f| !f.is_zero()).map(|f| f.make_monic()).collect())
}
