//! Monomial orderings.
//!
//! Both orderings are multiplicative total orders with the constant
//! monomial as the minimum, which is what leading-term selection and the
//! queue selection strategy rely on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::poly::Monomial;

/// A monomial ordering on a fixed variable context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Pure lexicographic: `a > b` iff the leftmost nonzero entry of
    /// `a - b` is positive.
    Lex,
    /// Degree-reverse-lexicographic: higher total degree wins; on equal
    /// degree, `a > b` iff the rightmost nonzero entry of `a - b` is
    /// negative.
    DegRevLex,
}

impl MonomialOrder {
    /// Compares two monomials of the same context.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(
            a.nvars(),
            b.nvars(),
            "monomial context mismatch: {} vs {} variables",
            a.nvars(),
            b.nvars()
        );
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(format!(
                "unknown ordering `{other}` (expected `lex` or `degrevlex`)"
            )),
        }
    }
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            non_eq => return non_eq,
        }
    }
    Ordering::Equal
}

fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        non_eq => return non_eq,
    }
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // rightmost difference: the smaller entry belongs to the
            // greater monomial
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn lex_x_beats_y() {
        // x = (1,0), y = (0,1)
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn unit_is_minimal_in_both_orders() {
        let one = m(&[0, 0, 0]);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            for u in [m(&[1, 0, 0]), m(&[0, 0, 1]), m(&[2, 1, 3])] {
                assert_eq!(order.compare(&one, &u), Ordering::Less);
            }
            assert_eq!(order.compare(&one, &one), Ordering::Equal);
        }
    }

    #[test]
    fn degrevlex_x2y_beats_xyz() {
        // deg 3 each; a - b = (1, 0, -1): rightmost nonzero negative => a > b
        assert_eq!(
            MonomialOrder::DegRevLex.compare(&m(&[2, 1, 0]), &m(&[1, 1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn degrevlex_degree_dominates() {
        assert_eq!(
            MonomialOrder::DegRevLex.compare(&m(&[1, 1]), &m(&[1, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_x_beats_y_cubed() {
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 3])),
            Ordering::Greater
        );
    }

    #[test]
    fn parse_names() {
        assert_eq!("lex".parse::<MonomialOrder>().unwrap(), MonomialOrder::Lex);
        assert_eq!(
            "degrevlex".parse::<MonomialOrder>().unwrap(),
            MonomialOrder::DegRevLex
        );
        assert!("grlex".parse::<MonomialOrder>().is_err());
    }

    fn mono_strategy(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn total_antisymmetric_transitive(
            a in mono_strategy(3), b in mono_strategy(3), c in mono_strategy(3)
        ) {
            for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
                // totality + antisymmetry
                prop_assert_eq!(order.compare(&a, &b), order.compare(&b, &a).reverse());
                prop_assert_eq!(order.compare(&a, &b) == Ordering::Equal, a == b);
                // transitivity
                if order.compare(&a, &b) != Ordering::Greater
                    && order.compare(&b, &c) != Ordering::Greater
                {
                    prop_assert_ne!(order.compare(&a, &c), Ordering::Greater);
                }
            }
        }

        #[test]
        fn multiplicative(a in mono_strategy(3), b in mono_strategy(3), w in mono_strategy(3)) {
            for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
                prop_assert_eq!(
                    order.compare(&a, &b),
                    order.compare(&a.mul(&w), &b.mul(&w))
                );
            }
        }

        #[test]
        fn unit_minimal(a in mono_strategy(4)) {
            let one = Monomial::unit(4);
            for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
                prop_assert_ne!(order.compare(&one, &a), Ordering::Greater);
            }
        }

        #[test]
        fn degrevlex_degree_compatible(a in mono_strategy(4), b in mono_strategy(4)) {
            if a.degree() < b.degree() {
                prop_assert_eq!(MonomialOrder::DegRevLex.compare(&a, &b), Ordering::Less);
            }
        }
    }
}
