//! Involutive normal forms over triples: the criteria gate, full and
//! head-only reduction, and batch head reduction of a queue.

use crate::janet::JanetPartition;
use crate::poly::{reduce_step, Polynomial, Term};

use super::stats::{CriteriaConfig, Criterion, RunStats};
use super::triple::{IdGen, Triple};

/// Result of a reduction that may have been short-circuited by a
/// criterion instead of performing any arithmetic.
#[derive(Debug)]
pub(crate) struct NfOutcome {
    pub poly: Polynomial,
    pub criterion: Option<Criterion>,
}

/// Tests the enabled criteria for the pair `(p, g)`, where the head of
/// `g` involutively divides the head of `p`. Checked in the fixed order
/// C1, C2, C3, C4; the first hit wins.
pub fn criteria(
    p: &Triple,
    g: &Triple,
    basis: &[Triple],
    partition: &JanetPartition,
    cfg: &CriteriaConfig,
) -> Option<Criterion> {
    let lm_f = p.leading_monomial();

    if cfg.c1 && p.anc_lm().mul(g.anc_lm()) == *lm_f {
        return Some(Criterion::C1);
    }
    if cfg.c2 && p.anc_lm().lcm(g.anc_lm()).properly_divides(lm_f) {
        return Some(Criterion::C2);
    }
    if cfg.c3 {
        let bound = p.anc_lm().lcm(g.anc_lm());
        let lm_g = g.leading_monomial();
        let hit = basis.iter().any(|t| {
            t.leading_monomial().lcm(lm_f).properly_divides(&bound)
                && t.leading_monomial().lcm(lm_g).properly_divides(&bound)
        });
        if hit {
            return Some(Criterion::C3);
        }
    }
    if cfg.c4 {
        for (i, t) in basis.iter().enumerate() {
            if t.id() >= p.anc_id() {
                continue; // must have been computed before the ancestor of p
            }
            let lm_t = t.leading_monomial();
            if !lm_t.divides(lm_f) {
                continue;
            }
            let q = lm_f.quotient(lm_t);
            // the quotient must be a single non-multiplicative variable
            let mut vars = q.support();
            let (first, rest) = (vars.next(), vars.next());
            let single = q.degree() == 1 && rest.is_none();
            if let (true, Some(y)) = (single, first) {
                if partition.nonmultiplicative_at(i).contains(y)
                    && p.anc_lm().lcm(t.anc_lm()).properly_divides(lm_f)
                {
                    return Some(Criterion::C4);
                }
            }
        }
    }
    None
}

/// Highest reducible term of `terms[from..]`: returns `(term index,
/// basis index of the involutive divisor)`.
fn find_reducible(
    terms: &[Term],
    partition: &JanetPartition,
    from: usize,
) -> Option<(usize, usize)> {
    for (offset, t) in terms[from..].iter().enumerate() {
        if let Some(d) = partition.find_involutive_divisor(&t.mono) {
            return Some((from + offset, d));
        }
    }
    None
}

/// Full involutive normal form of `p` modulo the basis, consulting the
/// criteria exactly once: on the first reduction attempt against the
/// original head term. A criterion hit discards the polynomial as zero
/// without arithmetic.
pub(crate) fn nf_full(
    p: &Triple,
    basis: &[Triple],
    partition: &JanetPartition,
    cfg: &CriteriaConfig,
    stats: &mut RunStats,
) -> NfOutcome {
    debug_assert_eq!(basis.len(), partition.len());
    let mut h = p.poly().clone();
    let mut head_intact = true;
    let mut scan_from = 0;
    while !h.is_zero() {
        let Some((ti, di)) = find_reducible(h.terms(), partition, scan_from) else {
            break;
        };
        if head_intact && ti == 0 {
            if let Some(c) = criteria(p, &basis[di], basis, partition, cfg) {
                stats.record_criterion(c);
                return NfOutcome {
                    poly: Polynomial::zero(h.nvars(), h.order()),
                    criterion: Some(c),
                };
            }
            head_intact = false;
        }
        let t = h.terms()[ti].clone();
        h = reduce_step(&h, basis[di].poly(), &t);
        // terms above the reduced position are untouched and stay
        // irreducible, so the scan can resume there
        scan_from = ti;
    }
    NfOutcome {
        poly: h,
        criterion: None,
    }
}

/// Public wrapper over [`nf_full`]; criterion hits are recorded in
/// `stats` and surface as a zero result.
pub fn normal_form(
    p: &Triple,
    basis: &[Triple],
    partition: &JanetPartition,
    cfg: &CriteriaConfig,
    stats: &mut RunStats,
) -> Polynomial {
    nf_full(p, basis, partition, cfg, stats).poly
}

/// Head normal form: unchanged when the head is already involutively
/// irreducible; zero when a criterion fires (consulted only for proper
/// prolongations); otherwise the head is reduced until irreducible or the
/// polynomial vanishes. The tail is never touched.
pub(crate) fn hnf(
    p: &Triple,
    basis: &[Triple],
    partition: &JanetPartition,
    cfg: &CriteriaConfig,
    stats: &mut RunStats,
) -> NfOutcome {
    debug_assert_eq!(basis.len(), partition.len());
    let mut h = p.poly().clone();
    if h.is_zero() {
        return NfOutcome {
            poly: h,
            criterion: None,
        };
    }
    let Some(d0) = partition.find_involutive_divisor(h.leading_monomial()) else {
        return NfOutcome {
            poly: h,
            criterion: None,
        };
    };
    if h.leading_monomial() != p.anc_lm() {
        if let Some(c) = criteria(p, &basis[d0], basis, partition, cfg) {
            stats.record_criterion(c);
            return NfOutcome {
                poly: Polynomial::zero(h.nvars(), h.order()),
                criterion: Some(c),
            };
        }
    }
    loop {
        if h.is_zero() {
            break;
        }
        let Some(di) = partition.find_involutive_divisor(h.leading_monomial()) else {
            break;
        };
        let t = h.leading_term().clone();
        h = reduce_step(&h, basis[di].poly(), &t);
    }
    NfOutcome {
        poly: h,
        criterion: None,
    }
}

pub fn head_normal_form(
    p: &Triple,
    basis: &[Triple],
    partition: &JanetPartition,
    cfg: &CriteriaConfig,
    stats: &mut RunStats,
) -> Polynomial {
    hnf(p, basis, partition, cfg, stats).poly
}

/// Involutive normal form of the tail: every non-head term is reduced to
/// irreducibility, the head is left alone. The input head must already be
/// involutively irreducible modulo the basis.
pub fn tail_normal_form(p: &Triple, basis: &[Triple], partition: &JanetPartition) -> Polynomial {
    let h = p.poly();
    assert!(!h.is_zero(), "tail normal form of the zero polynomial");
    assert!(
        partition
            .find_involutive_divisor(h.leading_monomial())
            .is_none(),
        "tail normal form requires a head-irreducible input"
    );
    let mut h = h.clone();
    let mut scan_from = 1;
    loop {
        let Some((ti, di)) = find_reducible(h.terms(), partition, scan_from) else {
            break;
        };
        let t = h.terms()[ti].clone();
        h = reduce_step(&h, basis[di].poly(), &t);
        scan_from = ti;
    }
    h
}

/// Head-reduces every queued triple modulo the basis. Survivors whose
/// head dropped re-enter as their own ancestor with an empty processed
/// set; when a triple that is its own ancestor reduces to zero, its
/// queued descendants are purged from the remaining work list.
pub fn head_reduce(
    queue: Vec<Triple>,
    basis: &[Triple],
    partition: &JanetPartition,
    cfg: &CriteriaConfig,
    stats: &mut RunStats,
    ids: &mut IdGen,
) -> Vec<Triple> {
    let mut pending = std::collections::VecDeque::from(queue);
    let mut out: Vec<Triple> = Vec::with_capacity(pending.len());
    while let Some(p) = pending.pop_front() {
        let res = hnf(&p, basis, partition, cfg, stats);
        if !res.poly.is_zero() {
            if res.poly.leading_monomial() != p.leading_monomial() {
                // head dropped: the result is a new generator
                if p.is_proper_prolongation()
                    || res.poly.leading_monomial() != p.anc_lm()
                {
                    stats.observe_degree(res.poly.total_degree());
                }
                stats.head_rewrapped += 1;
                stats.enqueued += 1;
                out.push(Triple::generator(res.poly.make_monic(), ids.next_id()));
            } else {
                // no reduction happened at all
                if p.is_proper_prolongation() {
                    stats.observe_degree(res.poly.total_degree());
                }
                out.push(p);
            }
        } else {
            if res.criterion.is_none() {
                stats.zero_reductions += 1;
            }
            if p.leading_monomial() == p.anc_lm() && cfg.rewritten {
                let before = pending.len();
                pending.retain(|q| q.anc_id() != p.anc_id());
                stats.head_purged += (before - pending.len()) as u64;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::triple::IdGen;
    use crate::janet::VarSet;
    use crate::order::MonomialOrder;
    use crate::poly::{Monomial, VariableContext};
    use crate::sysfile::parse_polynomial;

    const O: MonomialOrder = MonomialOrder::DegRevLex;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y"])
    }

    fn p(src: &str) -> Polynomial {
        parse_polynomial(src, &ctx(), O).unwrap()
    }

    fn basis_of(polys: &[&str], first_id: u64) -> (Vec<Triple>, JanetPartition) {
        let basis: Vec<Triple> = polys
            .iter()
            .enumerate()
            .map(|(i, s)| Triple::generator(p(s), first_id + i as u64))
            .collect();
        let lms: Vec<Monomial> = basis
            .iter()
            .map(|t| t.leading_monomial().clone())
            .collect();
        let part = JanetPartition::compute(&lms);
        (basis, part)
    }

    /// Rebuilds the x^2 y^2 instance used across these tests: the basis
    /// {x^2, y^2, x y^2} with x^2 y^2 queued as the x-prolongation of
    /// x y^2, whose ancestor is y^2.
    fn x2y2_instance() -> (Vec<Triple>, JanetPartition, Triple) {
        let (basis, part) = basis_of(&["x^2", "y^2", "x*y^2"], 1);
        // the prolongation x * (x y^2) with ancestor y^2 (id 2)
        let prol = Triple::with_ancestor(
            p("x^2*y^2"),
            p("y^2").leading_monomial().clone(),
            2,
            VarSet::empty(),
            4,
        );
        (basis, part, prol)
    }

    #[test]
    fn criteria_c1_fires_on_x2y2() {
        let (basis, part, prol) = x2y2_instance();
        // the involutive divisor of x^2 y^2 here is x^2 (ancestor x^2)
        let g = &basis[0];
        let hit = criteria(&prol, g, &basis, &part, &CriteriaConfig::c1_c2());
        assert_eq!(hit, Some(Criterion::C1));
    }

    #[test]
    fn criteria_c2_fires_for_shared_ancestor() {
        // p and g share the ancestor y (id 9); p is the proper
        // prolongation x y of it
        let (basis_raw, part) = basis_of(&["y"], 9);
        let g = basis_raw[0].clone();
        let prol = Triple::with_ancestor(
            p("x*y"),
            p("y").leading_monomial().clone(),
            9,
            VarSet::empty(),
            10,
        );
        let hit = criteria(&prol, &g, &basis_raw, &part, &CriteriaConfig::c1_c2());
        assert_eq!(hit, Some(Criterion::C2));
    }

    #[test]
    fn criteria_disabled_never_fire() {
        let (basis, part, prol) = x2y2_instance();
        let hit = criteria(&prol, &basis[0], &basis, &part, &CriteriaConfig::none());
        assert_eq!(hit, None);
    }

    #[test]
    fn normal_form_keeps_irreducible_input() {
        let (basis, part) = basis_of(&["x^2", "y^2"], 1);
        let mut stats = RunStats::default();
        // x y^2 has no involutive divisor in {x^2, y^2}
        let t = Triple::generator(p("x*y^2"), 7);
        let nf = normal_form(&t, &basis, &part, &CriteriaConfig::c1_c2(), &mut stats);
        assert_eq!(nf, p("x*y^2"));
        assert_eq!(stats.criteria_total() + stats.zero_reductions, 0);
    }

    #[test]
    fn normal_form_discards_by_c1() {
        let (basis, part, prol) = x2y2_instance();
        let mut stats = RunStats::default();
        let nf = normal_form(&prol, &basis, &part, &CriteriaConfig::c1_c2(), &mut stats);
        assert!(nf.is_zero());
        assert_eq!(stats.c1, 1);
        assert_eq!(stats.zero_reductions, 0);
    }

    #[test]
    fn normal_form_reduces_fully_without_criteria() {
        let (basis, part, prol) = x2y2_instance();
        let mut stats = RunStats::default();
        let nf = normal_form(&prol, &basis, &part, &CriteriaConfig::none(), &mut stats);
        // x^2 y^2 reduces to zero by arithmetic: x^2 * y^2 cancels it
        assert!(nf.is_zero());
        assert_eq!(stats.criteria_total(), 0);
    }

    #[test]
    fn head_normal_form_fast_path_returns_input() {
        let (basis, part) = basis_of(&["x^2", "y^2"], 1);
        let mut stats = RunStats::default();
        let t = Triple::generator(p("x*y^2 + x"), 5);
        let h = head_normal_form(&t, &basis, &part, &CriteriaConfig::c1_c2(), &mut stats);
        assert_eq!(h, p("x*y^2 + x"));
    }

    #[test]
    fn head_normal_form_reduces_own_generator_without_criteria() {
        // a generator that is its own ancestor head-reduces with no
        // criteria consultation even though its head is reducible
        let (basis, part) = basis_of(&["x^2"], 1);
        let mut stats = RunStats::default();
        let t = Triple::generator(p("x^3 + y"), 5);
        let h = head_normal_form(&t, &basis, &part, &CriteriaConfig::all(), &mut stats);
        // x^3 reduces to 0 by x^2 (x multiplicative), leaving y
        assert_eq!(h, p("y"));
        assert_eq!(stats.criteria_total(), 0);
    }

    #[test]
    fn head_normal_form_discards_prolongation_by_criteria() {
        let (basis, part, prol) = x2y2_instance();
        let mut stats = RunStats::default();
        let h = head_normal_form(&prol, &basis, &part, &CriteriaConfig::c1_c2(), &mut stats);
        assert!(h.is_zero());
        assert_eq!(stats.c1, 1);
    }

    #[test]
    fn head_normal_form_leaves_tail_alone() {
        let (basis, part) = basis_of(&["x^2"], 1);
        let mut stats = RunStats::default();
        // head x^3 reducible; tail y^3 + x^2... the tail term x^2 stays
        let t = Triple::generator(p("x^3 + x^2"), 5);
        let h = head_normal_form(&t, &basis, &part, &CriteriaConfig::none(), &mut stats);
        // x^3 -> x^3 - x*x^2 = 0 remains x^2; then head x^2 -> 0
        assert!(h.is_zero());
    }

    fn plex(src: &str) -> Polynomial {
        parse_polynomial(src, &ctx(), MonomialOrder::Lex).unwrap()
    }

    #[test]
    fn tail_normal_form_examples() {
        // singleton basis {y^2}: every variable multiplicative; under lex
        // the head of x + y^3 is x, so only the tail reduces
        let basis = vec![Triple::generator(plex("y^2"), 1)];
        let part = JanetPartition::compute(&[basis[0].leading_monomial().clone()]);
        let t = Triple::generator(plex("x + y^3"), 5);
        let h = tail_normal_form(&t, &basis, &part);
        assert_eq!(h, plex("x"));

        // already reduced input is returned unchanged
        let t = Triple::generator(plex("x + y"), 6);
        assert_eq!(tail_normal_form(&t, &basis, &part), plex("x + y"));
    }

    #[test]
    fn tail_normal_form_preserves_head() {
        let basis = vec![Triple::generator(plex("y^2"), 1)];
        let part = JanetPartition::compute(&[basis[0].leading_monomial().clone()]);
        let t = Triple::generator(plex("x^2 + x*y^2 + y^3 + 1"), 5);
        let h = tail_normal_form(&t, &basis, &part);
        assert_eq!(h.leading_monomial(), plex("x^2").leading_monomial());
        // both tail multiples of y^2 were eliminated
        assert_eq!(h, plex("x^2 + 1"));
    }

    #[test]
    #[should_panic(expected = "head-irreducible")]
    fn tail_normal_form_rejects_reducible_head() {
        let (basis, part) = basis_of(&["y^2"], 1);
        let t = Triple::generator(p("y^3"), 5);
        let _ = tail_normal_form(&t, &basis, &part);
    }

    #[test]
    fn head_reduce_keeps_irreducible_queue() {
        let (basis, part) = basis_of(&["x^2", "y^2"], 1);
        let mut stats = RunStats::default();
        let mut ids = IdGen::default();
        let q = vec![Triple::generator(p("x*y^2 + y"), 10)];
        let out = head_reduce(
            q.clone(),
            &basis,
            &part,
            &CriteriaConfig::c1_c2(),
            &mut stats,
            &mut ids,
        );
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].id(), 10);
    }

    #[test]
    fn head_reduce_rewraps_dropped_heads() {
        let (basis, part) = basis_of(&["x^2"], 1);
        let mut stats = RunStats::default();
        let mut ids = IdGen::default();
        for _ in 0..10 {
            ids.next_id();
        }
        let q = vec![Triple::generator(p("x^3 + y"), 9)];
        let out = head_reduce(
            q,
            &basis,
            &part,
            &CriteriaConfig::c1_c2(),
            &mut stats,
            &mut ids,
        );
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].poly(), &p("y"));
        assert!(out[0].is_own_ancestor());
        assert!(out[0].processed_nm().is_empty());
        assert_ne!(out[0].id(), 9);
    }

    #[test]
    fn head_reduce_purges_descendants_of_zero_reduced_generator() {
        // basis {x}; queue: generator x + y ... head x reducible -> drops
        // to y (rewrap), so build instead a generator that dies entirely:
        // q1 = x (its own ancestor, id 20) reduces to zero; q2, q3 are
        // descendants of q1 (anc_id 20) and must be purged from the
        // remaining work list.
        let (basis, part) = basis_of(&["x"], 1);
        let mut stats = RunStats::default();
        let mut ids = IdGen::default();
        for _ in 0..30 {
            ids.next_id();
        }
        let g = Triple::generator(p("x"), 20);
        let d1 = Triple::with_ancestor(
            p("x*y"),
            p("x").leading_monomial().clone(),
            20,
            VarSet::empty(),
            21,
        );
        let d2 = Triple::with_ancestor(
            p("x*y^2"),
            p("x").leading_monomial().clone(),
            20,
            VarSet::empty(),
            22,
        );
        let q = vec![g, d1, d2];
        let out = head_reduce(
            q,
            &basis,
            &part,
            &CriteriaConfig::c1_c2(),
            &mut stats,
            &mut ids,
        );
        assert!(out.is_empty());
        assert_eq!(stats.zero_reductions, 1);
        assert_eq!(stats.head_purged, 2);
    }
}
