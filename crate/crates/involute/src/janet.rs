//! Janet division: the per-monomial partition of variables into
//! multiplicative and non-multiplicative sets, involutive divisibility,
//! and divisor search.
//!
//! For a finite monomial set `U` and `u` in `U`, the variable `x_1` is
//! multiplicative for `u` iff `u` attains the maximum `x_1`-degree in `U`;
//! for `i > 1`, `x_i` is multiplicative for `u` iff `u` attains the
//! maximum `x_i`-degree among the elements of `U` that agree with `u` on
//! the degrees of `x_1 .. x_{i-1}`.
//!
//! Divisor search is a deliberate linear scan over the generating set;
//! no index structure is maintained.

use std::fmt;

use crate::poly::Monomial;

/// A small set of variable indices backed by a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn empty() -> Self {
        VarSet(0)
    }

    /// All variables `0..nvars`.
    pub fn all(nvars: usize) -> Self {
        assert!(nvars <= 64, "at most 64 variables are supported");
        if nvars == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << nvars) - 1)
        }
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < 64);
        self.0 |= 1 << index;
    }

    pub fn with(mut self, index: usize) -> Self {
        self.insert(index);
        self
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 64 && self.0 & (1 << index) != 0
    }

    pub fn union(&self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersect(&self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Ascending iteration over the member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits & (1 << i) != 0)
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VarSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// The Janet partition of a finite monomial set: for every generator, the
/// set of multiplicative variables. Exact duplicates in the input are
/// collapsed; first-occurrence order is preserved.
#[derive(Clone, Debug)]
pub struct JanetPartition {
    monos: Vec<Monomial>,
    mult: Vec<VarSet>,
    nvars: usize,
}

impl JanetPartition {
    pub fn compute(monomials: &[Monomial]) -> Self {
        assert!(
            !monomials.is_empty(),
            "Janet partition of an empty monomial set"
        );
        let nvars = monomials[0].nvars();
        let mut monos: Vec<Monomial> = Vec::with_capacity(monomials.len());
        for m in monomials {
            assert_eq!(m.nvars(), nvars, "monomial context mismatch");
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }

        let mut mult = vec![VarSet::empty(); monos.len()];
        // classes of generators agreeing on the degrees of the first i
        // variables; refined one variable at a time
        let mut classes: Vec<Vec<usize>> = vec![(0..monos.len()).collect()];
        for i in 0..nvars {
            let mut next_classes = Vec::new();
            for class in &classes {
                let max_deg = class
                    .iter()
                    .map(|&k| monos[k].exponent(i))
                    .max()
                    .expect("classes are non-empty");
                for &k in class {
                    if monos[k].exponent(i) == max_deg {
                        mult[k].insert(i);
                    }
                }
                // split by the degree of variable i for the next round
                let mut groups: Vec<(u32, Vec<usize>)> = Vec::new();
                for &k in class {
                    let d = monos[k].exponent(i);
                    match groups.iter_mut().find(|(g, _)| *g == d) {
                        Some((_, v)) => v.push(k),
                        None => groups.push((d, vec![k])),
                    }
                }
                next_classes.extend(groups.into_iter().map(|(_, v)| v));
            }
            classes = next_classes;
        }

        JanetPartition { monos, mult, nvars }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, u: &Monomial) -> Option<usize> {
        self.monos.iter().position(|m| m == u)
    }

    pub fn multiplicative_at(&self, index: usize) -> VarSet {
        self.mult[index]
    }

    pub fn nonmultiplicative_at(&self, index: usize) -> VarSet {
        VarSet::all(self.nvars).difference(self.mult[index])
    }

    /// Multiplicative variables of a generator, looked up by value.
    pub fn multiplicative(&self, u: &Monomial) -> VarSet {
        let idx = self
            .index_of(u)
            .expect("monomial is not in the partition domain");
        self.mult[idx]
    }

    pub fn nonmultiplicative(&self, u: &Monomial) -> VarSet {
        VarSet::all(self.nvars).difference(self.multiplicative(u))
    }

    /// Does the generator at `index` involutively divide `v`? True iff it
    /// divides conventionally and the quotient only involves its
    /// multiplicative variables.
    pub fn divides_involutively_at(&self, index: usize, v: &Monomial) -> bool {
        let u = &self.monos[index];
        if !u.divides(v) {
            return false;
        }
        let mult = self.mult[index];
        u.exponents()
            .iter()
            .zip(v.exponents())
            .enumerate()
            .all(|(i, (a, b))| a == b || mult.contains(i))
    }

    /// Involutive divisibility with the divisor looked up by value.
    pub fn is_involutive_divisor(&self, u: &Monomial, v: &Monomial) -> bool {
        let idx = self
            .index_of(u)
            .expect("monomial is not in the partition domain");
        self.divides_involutively_at(idx, v)
    }

    /// Linear scan for an involutive divisor of `v`. Divisors of a fixed
    /// monomial form a chain, so the minimal-degree one returned here is
    /// unique when any exists.
    pub fn find_involutive_divisor(&self, v: &Monomial) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in 0..self.monos.len() {
            if self.divides_involutively_at(i, v) {
                match best {
                    Some(b) if self.monos[b].degree() <= self.monos[i].degree() => {}
                    _ => best = Some(i),
                }
            }
        }
        best
    }
}

/// Outcome of the division-axiom check: any violation carries a printable
/// witness. This is a falsifier over finite data, not a proof.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub violations: Vec<String>,
    pub pairs_checked: usize,
    pub subsets_checked: usize,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three involutive-division conditions on the Janet partition
/// of `monomials`.
///
/// Conditions 1 and 2 are decided exactly: two involutive cones intersect
/// iff the lcm of their generators lies in both, so the intersection test
/// reduces to a finite divisibility check. Condition 3 quantifies over
/// all subsets; it is enumerated up to `subset_cap` subsets.
pub fn check_division_axioms(monomials: &[Monomial], subset_cap: usize) -> AxiomReport {
    let mut report = AxiomReport::default();
    let part = JanetPartition::compute(monomials);
    let u_set = part.monomials();
    let n = u_set.len();

    let cone_contains = |p: &JanetPartition, i: usize, w: &Monomial| -> bool {
        p.divides_involutively_at(i, w)
    };

    // condition 1: intersecting cones imply comparable generators
    for i in 0..n {
        for j in (i + 1)..n {
            report.pairs_checked += 1;
            let l = u_set[i].lcm(&u_set[j]);
            let intersect = cone_contains(&part, i, &l) && cone_contains(&part, j, &l);
            if intersect
                && !part.divides_involutively_at(i, &u_set[j])
                && !part.divides_involutively_at(j, &u_set[i])
            {
                report.violations.push(format!(
                    "condition 1: cones of {:?} and {:?} intersect at {:?} but neither divides the other",
                    u_set[i].exponents(),
                    u_set[j].exponents(),
                    l.exponents()
                ));
            }
        }
    }

    // condition 2: an involutive divisor has the larger multiplicative set
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if part.divides_involutively_at(i, &u_set[j])
                && !part.multiplicative_at(j).is_subset_of(part.multiplicative_at(i))
            {
                report.violations.push(format!(
                    "condition 2: {:?} involutively divides {:?} but M({:?}) is not contained in M({:?})",
                    u_set[i].exponents(),
                    u_set[j].exponents(),
                    u_set[j].exponents(),
                    u_set[i].exponents()
                ));
            }
        }
    }

    // condition 3: shrinking the set can only grow multiplicative sets
    if n <= 63 {
        let total: u64 = 1u64 << n;
        let mut mask: u64 = 1;
        while mask < total && report.subsets_checked < subset_cap {
            let members: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
            if !members.is_empty() && members.len() < n {
                report.subsets_checked += 1;
                let sub: Vec<Monomial> = members.iter().map(|&k| u_set[k].clone()).collect();
                let sub_part = JanetPartition::compute(&sub);
                for (pos, &k) in members.iter().enumerate() {
                    if !part
                        .multiplicative_at(k)
                        .is_subset_of(sub_part.multiplicative_at(pos))
                    {
                        report.violations.push(format!(
                            "condition 3: M({:?}, U) is not contained in M({:?}, V) for V = {:?}",
                            u_set[k].exponents(),
                            u_set[k].exponents(),
                            members
                        ));
                    }
                }
            }
            mask += 1;
        }
    }

    report
}
