//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Monomials are dense exponent vectors over a fixed variable context;
//! polynomials are term lists kept strictly sorted (descending) under the
//! ordering fixed at construction. All values are immutable after
//! construction and all arithmetic is exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::order::MonomialOrder;

/// Exact rational coefficient. `BigRational` keeps itself in canonical
/// reduced form with a positive denominator.
pub type Coefficient = BigRational;

/// Builds an integer coefficient.
pub fn coeff_int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the rational coefficient `num/den`.
pub fn coeff_ratio(num: i64, den: i64) -> Coefficient {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An ordered list of distinct variable names. Index `i` is the `i`-th
/// variable of every monomial built against this context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "variable context must be non-empty");
        for (i, name) in names.iter().enumerate() {
            assert!(!name.is_empty(), "variable names must be non-empty");
            assert!(
                !names[..i].contains(name),
                "duplicate variable name `{name}`"
            );
        }
        VariableContext { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial as a dense exponent vector, with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    /// The constant monomial `1` in `nvars` variables.
    pub fn unit(nvars: usize) -> Self {
        assert!(nvars >= 1, "context must have at least one variable");
        Monomial {
            exps: vec![0; nvars],
            deg: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "context must have at least one variable");
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    /// The single variable `x_index`.
    pub fn var(index: usize, nvars: usize) -> Self {
        let mut m = Monomial::unit(nvars);
        m.exps[index] = 1;
        m.deg = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_unit(&self) -> bool {
        self.deg == 0
    }

    fn check_context(&self, other: &Monomial) {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomial context mismatch: {} vs {} variables",
            self.exps.len(),
            other.exps.len()
        );
    }

    /// Conventional divisibility: `self | other` iff every exponent of
    /// `self` is at most the matching exponent of `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.check_context(other);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Proper divisibility: divides and is distinct.
    pub fn properly_divides(&self, other: &Monomial) -> bool {
        self.divides(other) && self != other
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check_context(other);
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.check_context(other);
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
        }
    }

    /// Multiplies by the single variable `index`.
    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[index] += 1;
        m.deg += 1;
        m
    }

    /// Exact quotient `self / divisor`.
    pub fn quotient(&self, divisor: &Monomial) -> Monomial {
        assert!(
            divisor.divides(self),
            "monomial quotient of a non-divisor"
        );
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
            deg: self.deg - divisor.deg,
        }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }
}

/// A nonzero coefficient attached to a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coefficient,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coefficient, mono: Monomial) -> Self {
        assert!(!coeff.is_zero(), "terms must have nonzero coefficients");
        Term { coeff, mono }
    }
}

/// A polynomial over Q: terms strictly decreasing under its ordering,
/// no zero coefficients, no repeated monomials. The zero polynomial has
/// an empty term list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<Term>,
    nvars: usize,
    order: MonomialOrder,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            terms: Vec::new(),
            nvars,
            order,
        }
    }

    /// Normalizes an arbitrary term list: sorts descending, merges equal
    /// monomials, drops zero coefficients.
    pub fn from_terms(mut terms: Vec<Term>, nvars: usize, order: MonomialOrder) -> Self {
        for t in &terms {
            assert_eq!(
                t.mono.nvars(),
                nvars,
                "term monomial does not match the context size"
            );
        }
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        merged.push(t);
                    }
                }
            }
        }
        Polynomial {
            terms: merged,
            nvars,
            order,
        }
    }

    pub fn constant(c: Coefficient, nvars: usize, order: MonomialOrder) -> Self {
        if c.is_zero() {
            Polynomial::zero(nvars, order)
        } else {
            Polynomial {
                terms: vec![Term::new(c, Monomial::unit(nvars))],
                nvars,
                order,
            }
        }
    }

    pub fn from_monomial(mono: Monomial, order: MonomialOrder) -> Self {
        let nvars = mono.nvars();
        Polynomial {
            terms: vec![Term::new(Coefficient::one(), mono)],
            nvars,
            order,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> &Term {
        assert!(!self.is_zero(), "the zero polynomial has no leading term");
        &self.terms[0]
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.leading_term().mono
    }

    pub fn leading_coeff(&self) -> &Coefficient {
        &self.leading_term().coeff
    }

    /// Maximum total degree over all terms (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomial context mismatch");
        assert_eq!(self.order, other.order, "polynomial ordering mismatch");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.order.compare(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate_other {
                        -b.coeff.clone()
                    } else {
                        b.coeff.clone()
                    };
                    out.push(Term { coeff, mono: b.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if negate_other {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !coeff.is_zero() {
                        out.push(Term { coeff, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let coeff = if negate_other {
                -b.coeff.clone()
            } else {
                b.coeff.clone()
            };
            out.push(Term { coeff, mono: b.mono.clone() });
        }
        Polynomial {
            terms: out,
            nvars: self.nvars,
            order: self.order,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff.clone(),
                    mono: t.mono.clone(),
                })
                .collect(),
            nvars: self.nvars,
            order: self.order,
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.clone(),
                })
                .collect(),
            nvars: self.nvars,
            order: self.order,
        }
    }

    /// Multiplies by a term. Order is preserved because monomial orders
    /// are multiplicative, so no re-sort is needed.
    pub fn mul_term(&self, factor: &Term) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * &factor.coeff,
                    mono: t.mono.mul(&factor.mono),
                })
                .collect(),
            nvars: self.nvars,
            order: self.order,
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul(mono),
                })
                .collect(),
            nvars: self.nvars,
            order: self.order,
        }
    }

    pub fn mul_var(&self, index: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul_var(index),
                })
                .collect(),
            nvars: self.nvars,
            order: self.order,
        }
    }

    /// Full product of two polynomials.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut acc = Polynomial::zero(self.nvars, self.order);
        for t in &other.terms {
            acc = acc.add(&self.mul_term(t));
        }
        acc
    }

    /// Scales so the leading coefficient becomes 1.
    pub fn make_monic(&self) -> Polynomial {
        let lc = self.leading_coeff();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Looks up the term with the given monomial, if present.
    pub fn term_with_monomial(&self, mono: &Monomial) -> Option<&Term> {
        self.terms.iter().find(|t| &t.mono == mono)
    }

    /// Re-sorts the terms under a different ordering; the explicit
    /// conversion between orderings.
    pub fn reordered(&self, order: MonomialOrder) -> Polynomial {
        Polynomial::from_terms(self.terms.clone(), self.nvars, order)
    }
}

/// One elementary reduction step: returns `h - g * (t / LT(g))` where `t`
/// is a term of `h` whose monomial is conventionally divisible by `LM(g)`.
/// The monomial of `t` is cancelled exactly.
pub fn reduce_step(h: &Polynomial, g: &Polynomial, t: &Term) -> Polynomial {
    assert!(!g.is_zero(), "cannot reduce by the zero polynomial");
    debug_assert!(
        h.term_with_monomial(&t.mono).map(|ht| &ht.coeff) == Some(&t.coeff),
        "t must be a term of h"
    );
    let g_lt = g.leading_term();
    assert!(
        g_lt.mono.divides(&t.mono),
        "leading monomial of the reducer does not divide the chosen term"
    );
    let factor = Term {
        coeff: &t.coeff / &g_lt.coeff,
        mono: t.mono.quotient(&g_lt.mono),
    };
    h.sub(&g.mul_term(&factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sysfile::parse_polynomial;
    use proptest::prelude::*;

    fn ctx2() -> VariableContext {
        VariableContext::new(["x", "y"])
    }

    fn ctx3() -> VariableContext {
        VariableContext::new(["x", "y", "z"])
    }

    fn p(src: &str, ctx: &VariableContext, order: MonomialOrder) -> Polynomial {
        parse_polynomial(src, ctx, order).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn divisibility_examples() {
        // x^2 | x^2 y
        assert!(m(&[2, 0]).divides(&m(&[2, 1])));
        // xy does not divide x^2
        assert!(!m(&[1, 1]).divides(&m(&[2, 0])));
        let u = m(&[1, 2]);
        assert!(u.divides(&u));
        assert!(!u.properly_divides(&u));
    }

    #[test]
    fn lcm_examples() {
        // lcm(x^2 y, x z) = x^2 y z
        assert_eq!(m(&[2, 1, 0]).lcm(&m(&[1, 0, 1])), m(&[2, 1, 1]));
        let u = m(&[3, 1, 2]);
        assert_eq!(u.lcm(&Monomial::unit(3)), u);
        // disjoint supports multiply
        assert_eq!(m(&[2, 0]).lcm(&m(&[0, 2])), m(&[2, 2]));
    }

    #[test]
    fn mul_and_quotient_examples() {
        assert_eq!(m(&[1, 0]).mul(&m(&[0, 2])), m(&[1, 2]));
        assert_eq!(m(&[2, 2]).quotient(&m(&[2, 0])), m(&[0, 2]));
        let v = m(&[3, 1]);
        assert_eq!(v.quotient(&Monomial::unit(2)), v);
    }

    #[test]
    #[should_panic(expected = "non-divisor")]
    fn quotient_of_non_divisor_panics() {
        let _ = m(&[1, 0]).quotient(&m(&[0, 1]));
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn context_mismatch_panics() {
        let _ = m(&[1, 0]).divides(&m(&[1, 0, 0]));
    }

    #[test]
    fn leading_term_examples() {
        // degrevlex: LM(x^2 y + x y z) = x^2 y
        let f = p("x^2*y + x*y*z", &ctx3(), MonomialOrder::DegRevLex);
        assert_eq!(f.leading_monomial(), &m(&[2, 1, 0]));

        // lex: LM(x + y^3) = x
        let g = p("x + y^3", &ctx2(), MonomialOrder::Lex);
        assert_eq!(g.leading_monomial(), &m(&[1, 0]));

        // constant
        let c = p("5", &ctx2(), MonomialOrder::DegRevLex);
        assert_eq!(c.leading_term().coeff, coeff_int(5));
        assert!(c.leading_monomial().is_unit());
    }

    #[test]
    #[should_panic(expected = "no leading term")]
    fn leading_term_of_zero_panics() {
        let z = Polynomial::zero(2, MonomialOrder::DegRevLex);
        let _ = z.leading_term();
    }

    #[test]
    fn reduce_step_examples() {
        let ctx = ctx2();
        let o = MonomialOrder::DegRevLex;

        // h = x^2 + y, g = x^2, t = x^2  ->  y
        let h = p("x^2 + y", &ctx, o);
        let g = p("x^2", &ctx, o);
        let t = h.leading_term().clone();
        assert_eq!(reduce_step(&h, &g, &t), p("y", &ctx, o));

        // h = 2 x^2 y, g = x^2 + 1, t = 2 x^2 y  ->  -2y
        let h = p("2*x^2*y", &ctx, o);
        let g = p("x^2 + 1", &ctx, o);
        let t = h.leading_term().clone();
        assert_eq!(reduce_step(&h, &g, &t), p("-2*y", &ctx, o));

        // h = x^2 y^2 + x, g = y^2, t = x^2 y^2  ->  x
        let h = p("x^2*y^2 + x", &ctx, o);
        let g = p("y^2", &ctx, o);
        let t = h.leading_term().clone();
        assert_eq!(reduce_step(&h, &g, &t), p("x", &ctx, o));
    }

    #[test]
    #[should_panic(expected = "does not divide")]
    fn reduce_step_non_divisible_panics() {
        let ctx = ctx2();
        let o = MonomialOrder::DegRevLex;
        let h = p("x^2 + y", &ctx, o);
        let g = p("y^2", &ctx, o);
        let t = h.leading_term().clone();
        let _ = reduce_step(&h, &g, &t);
    }

    #[test]
    fn make_monic_examples() {
        let ctx = ctx2();
        let o = MonomialOrder::DegRevLex;
        assert_eq!(p("2*x + 4", &ctx, o).make_monic(), p("x + 2", &ctx, o));
        let monic = p("x + 2", &ctx, o);
        assert_eq!(monic.make_monic(), monic);
        assert_eq!(
            p("1/3*y^2 - 2", &ctx, o).make_monic(),
            p("y^2 - 6", &ctx, o)
        );
    }

    #[test]
    fn from_terms_merges_and_drops() {
        let ctx = ctx2();
        let o = MonomialOrder::DegRevLex;
        assert_eq!(p("x + x", &ctx, o), p("2*x", &ctx, o));
        assert!(p("x - x", &ctx, o).is_zero());
    }

    // -- property tests -------------------------------------------------

    fn mono_strategy(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0..=max_exp, n).prop_map(Monomial::from_exponents)
    }

    fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-4i64..=4, mono_strategy(n, 3)), 0..6).prop_map(move |ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .filter(|(c, _)| *c != 0)
                    .map(|(c, m)| Term::new(coeff_int(c), m))
                    .collect(),
                n,
                MonomialOrder::DegRevLex,
            )
        })
    }

    fn is_well_formed(f: &Polynomial) -> bool {
        f.terms().windows(2).all(|w| {
            f.order().compare(&w[0].mono, &w[1].mono) == Ordering::Greater
        }) && f.terms().iter().all(|t| !t.coeff.is_zero())
    }

    proptest! {
        #[test]
        fn divisibility_transitive(
            u in mono_strategy(3, 3), v in mono_strategy(3, 3), w in mono_strategy(3, 3)
        ) {
            if u.divides(&v) && v.divides(&w) {
                prop_assert!(u.divides(&w));
            }
        }

        #[test]
        fn lcm_is_least_upper_bound(u in mono_strategy(2, 3), v in mono_strategy(2, 3)) {
            let l = u.lcm(&v);
            prop_assert!(u.divides(&l) && v.divides(&l));
            // brute force over the bounded exponent box: anything both divide
            // is a multiple of the lcm
            for a in 0..=6u32 {
                for b in 0..=6u32 {
                    let w = Monomial::from_exponents(vec![a, b]);
                    if u.divides(&w) && v.divides(&w) {
                        prop_assert!(l.divides(&w));
                    }
                }
            }
        }

        #[test]
        fn exact_arithmetic_round_trip(f in poly_strategy(3), g in poly_strategy(3)) {
            prop_assert_eq!(f.add(&g).sub(&g), f.clone());
            prop_assert!(is_well_formed(&f.add(&g)));
            prop_assert!(is_well_formed(&f.sub(&g)));
            prop_assert!(is_well_formed(&f.mul(&g)));
        }

        #[test]
        fn reduce_step_contract(h in poly_strategy(3), g in poly_strategy(3)) {
            prop_assume!(!h.is_zero() && !g.is_zero());
            // find a term of h divisible by LM(g), if any
            let target = h.terms().iter()
                .find(|t| g.leading_monomial().divides(&t.mono)).cloned();
            if let Some(t) = target {
                let r = reduce_step(&h, &g, &t);
                prop_assert!(is_well_formed(&r));
                // the eliminated monomial is gone
                prop_assert!(r.term_with_monomial(&t.mono).is_none());
                // h - r is exactly the term multiple of g that was subtracted
                let factor = Term {
                    coeff: &t.coeff / g.leading_coeff(),
                    mono: t.mono.quotient(g.leading_monomial()),
                };
                prop_assert_eq!(h.sub(&r), g.mul_term(&factor));
            }
        }
    }
}
