//! Generated benchmark families.

use crate::order::MonomialOrder;
use crate::poly::{coeff_int, Monomial, Polynomial, Term, VariableContext};

/// The variable context `x1 .. xn` used by the cyclic family.
pub fn cyclic_context(n: usize) -> VariableContext {
    VariableContext::new((1..=n).map(|i| format!("x{i}")))
}

/// The cyclic-`n` system:
/// `f_k = sum_{i=0}^{n-1} prod_{j=i}^{i+k-1} x_{j mod n}` for `k = 1 .. n-1`,
/// plus `f_n = x1 * ... * xn - 1`. Requires `n >= 2`.
pub fn generate_cyclic(n: usize, order: MonomialOrder) -> (VariableContext, Vec<Polynomial>) {
    assert!(n >= 2, "cyclic systems need at least two variables");
    let ctx = cyclic_context(n);
    let mut polys = Vec::with_capacity(n);
    for k in 1..n {
        let mut terms = Vec::with_capacity(n);
        for i in 0..n {
            let mut exps = vec![0u32; n];
            for j in i..i + k {
                exps[j % n] += 1;
            }
            terms.push(Term::new(coeff_int(1), Monomial::from_exponents(exps)));
        }
        polys.push(Polynomial::from_terms(terms, n, order));
    }
    let all_ones = Monomial::from_exponents(vec![1; n]);
    polys.push(Polynomial::from_terms(
        vec![
            Term::new(coeff_int(1), all_ones),
            Term::new(coeff_int(-1), Monomial::unit(n)),
        ],
        n,
        order,
    ));
    (ctx, polys)
}
