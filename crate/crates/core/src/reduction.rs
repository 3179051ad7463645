//! Reduction from IN-DOMINATING SET on out-regular digraphs to the MODF
//! decision problem, with a brute-force check of both directions.
//!
//! Gadget layout for a source `D'` of order `n` and out-degree `d`:
//! the complete digraph `T` occupies `[0, n + 2d)` with `X = [0, d)`, the copy
//! of `D'` occupies `[n + 2d, 2n + 2d)` and the arcless part `D''` occupies
//! `[2n + 2d, 2n + 4d)`. Every vertex of `X` has arcs in both directions to
//! every vertex of `D'` and `D''`.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::domination::{is_in_dominating, is_modf};
use crate::error::{ModfError, Result};
use crate::sign::SignFunction;
use crate::solver::{gamma_maj_out_oracle, gamma_minus, modf_decision, ORACLE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    T,
    DPrime,
    DSecond,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetInstance {
    pub source: Digraph,
    /// Out-degree of every source vertex.
    pub d: usize,
    pub k: i64,
    pub gadget: Digraph,
    pub x_set: VertexSet,
    /// `2k - 2n - 2d`.
    pub weight_threshold: i64,
    pub part_map: Vec<Part>,
}

impl GadgetInstance {
    pub fn source_order(&self) -> usize {
        self.source.order()
    }

    pub fn t_part(&self) -> VertexSet {
        self.part(Part::T)
    }

    pub fn d_prime_part(&self) -> VertexSet {
        self.part(Part::DPrime)
    }

    pub fn d_second_part(&self) -> VertexSet {
        self.part(Part::DSecond)
    }

    fn part(&self, p: Part) -> VertexSet {
        self.part_map
            .iter()
            .enumerate()
            .filter(|&(_, &q)| q == p)
            .map(|(v, _)| v)
            .collect()
    }

    /// Index of source vertex `v` inside the gadget.
    pub fn copy_of(&self, v: usize) -> usize {
        self.source.order() + 2 * self.d + v
    }

    /// Arc count the construction must produce.
    pub fn expected_arc_count(&self) -> usize {
        let n = self.source.order();
        let t = n + 2 * self.d;
        t * (t - 1) + self.source.arc_count() + 2 * self.d * (2 * self.d) + 2 * self.d * n
    }
}

/// Whether `(D', k)` is an instance of the restricted source problem:
/// out-regular with degree `d`, `4d > n - 2`, `k >= 1` and `2k < n + 2`.
pub fn validate_instance(source: &Digraph, k: i64) -> bool {
    let n = source.order() as i64;
    match source.regular_out_degree() {
        Some(d) if n >= 1 => 4 * d as i64 > n - 2 && k >= 1 && 2 * k < n + 2,
        _ => false,
    }
}

pub fn build_gadget(source: &Digraph, k: i64) -> Result<GadgetInstance> {
    if !validate_instance(source, k) {
        return Err(ModfError::InvalidInstance(format!(
            "need an out-regular digraph with 4d > n - 2 and 1 <= k < n/2 + 1 (n = {}, k = {k})",
            source.order()
        )));
    }
    let n = source.order();
    let d = source.regular_out_degree().expect("validated");
    let t = n + 2 * d;
    let order = 2 * n + 4 * d;
    if order > crate::MAX_VERTICES {
        return Err(ModfError::TooLarge(order));
    }
    let mut out = vec![VertexSet::EMPTY; order];
    let t_set = VertexSet::full(t);
    for (v, s) in out.iter_mut().enumerate().take(t) {
        *s = t_set.without(v);
    }
    for (u, outs) in source.out_sets().iter().enumerate() {
        out[t + u] = outs.iter().map(|v| t + v).collect();
    }
    let x_set = VertexSet::full(d);
    let outside_t = VertexSet::full(order) - t_set;
    for x in x_set.iter() {
        out[x] |= outside_t;
    }
    for v in outside_t.iter() {
        out[v] |= x_set;
    }
    let mut part_map = vec![Part::T; t];
    part_map.extend(std::iter::repeat_n(Part::DPrime, n));
    part_map.extend(std::iter::repeat_n(Part::DSecond, 2 * d));
    let inst = GadgetInstance {
        source: source.clone(),
        d,
        k,
        gadget: Digraph::from_out_sets(out),
        x_set,
        weight_threshold: 2 * k - 2 * n as i64 - 2 * d as i64,
        part_map,
    };
    assert_eq!(inst.gadget.arc_count(), inst.expected_arc_count());
    Ok(inst)
}

/// The function positive exactly on `X` and the copy of `S`.
pub fn lift_in_dominating_to_modf(inst: &GadgetInstance, s: VertexSet) -> Result<SignFunction> {
    if !is_in_dominating(&inst.source, s)? {
        return Err(ModfError::NotInDominating);
    }
    if s.len() as i64 > inst.k {
        return Err(ModfError::SetTooLarge {
            size: s.len(),
            limit: inst.k.max(0) as usize,
        });
    }
    let image: VertexSet = s.iter().map(|v| inst.copy_of(v)).collect();
    SignFunction::new(inst.gadget.order(), image | inst.x_set)
}

/// Moves `+1` onto every vertex of `X`, each time taking it from the
/// lowest-index positive vertex of the `D'` copy. Weight is unchanged and no
/// closed out-sum decreases. Returns the new function and the number of
/// exchanges, or `None` if some exchange had no positive `D'` vertex to use.
pub fn normalize_on_x(inst: &GadgetInstance, f: &SignFunction) -> Option<(SignFunction, usize)> {
    let mut g = *f;
    let mut swaps = 0;
    let copy = inst.d_prime_part();
    for u in inst.x_set.iter() {
        if g.is_positive(u) {
            continue;
        }
        let x = (g.positives() & copy).iter().next()?;
        g = g.with_sign(u, true).with_sign(x, false);
        swaps += 1;
    }
    Some((g, swaps))
}

/// The structural claims of the converse direction, evaluated on one
/// threshold-achieving optimal function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralChecks {
    pub function: SignFunction,
    /// `|f^-1(1)| <= k + d`.
    pub positives_within_bound: bool,
    /// `f(N+[v]) <= 0` for every `v` in `T`.
    pub t_vertices_unsatisfied: bool,
    pub normalized: Option<SignFunction>,
    pub exchanges: usize,
    /// After normalization, `f = +1` on all of `X`.
    pub x_positive_after_normalization: bool,
    /// After normalization, `S = D' ∩ f^-1(1)` is in-dominating in the source.
    pub extracted_in_dominating: bool,
    /// After normalization, `|S| <= k`.
    pub extracted_within_k: bool,
    pub extracted: VertexSet,
}

impl StructuralChecks {
    pub fn all_pass(&self) -> bool {
        self.positives_within_bound
            && self.t_vertices_unsatisfied
            && self.x_positive_after_normalization
            && self.extracted_in_dominating
            && self.extracted_within_k
    }
}

pub fn structural_checks(inst: &GadgetInstance, f: &SignFunction) -> Result<StructuralChecks> {
    if !is_modf(&inst.gadget, f)? {
        return Err(ModfError::NotModf);
    }
    let bound = inst.k + inst.d as i64;
    let positives_within_bound = f.positives().len() as i64 <= bound;
    let t_unsat = |g: &SignFunction| {
        inst.t_part()
            .iter()
            .all(|v| g.sum_over(inst.gadget.closed_out_neighbors(v)) <= 0)
    };
    let t_vertices_unsatisfied = t_unsat(f);
    let n = inst.source_order();
    let base = inst.copy_of(0);
    let normalized = normalize_on_x(inst, f);
    let (x_ok, in_dom, within_k, extracted, exchanges, norm_f) = match normalized {
        Some((g, swaps)) => {
            let s: VertexSet = (g.positives() & inst.d_prime_part())
                .iter()
                .map(|v| v - base)
                .collect();
            let x_ok = inst.x_set.is_subset(g.positives());
            let in_dom = is_in_dominating(&inst.source, s)?;
            (x_ok, in_dom, s.len() as i64 <= inst.k, s, swaps, Some(g))
        }
        None => (false, false, false, VertexSet::EMPTY, 0, None),
    };
    debug_assert!(extracted.bound() <= n);
    Ok(StructuralChecks {
        function: *f,
        positives_within_bound,
        t_vertices_unsatisfied,
        normalized: norm_f,
        exchanges,
        x_positive_after_normalization: x_ok,
        extracted_in_dominating: in_dom,
        extracted_within_k: within_k,
        extracted,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub d: usize,
    pub k: i64,
    pub gadget_order: usize,
    pub weight_threshold: i64,
    pub gamma_minus: usize,
    /// A minimum in-dominating set of the source.
    pub in_dominating_witness: VertexSet,
    /// `γ-(D') <= k`.
    pub source_yes: bool,
    /// `γ+maj(gadget) <= 2k - 2n - 2d`.
    pub gadget_yes: bool,
    pub agree: bool,
    pub gamma_maj_gadget: i64,
    /// Present when the gadget side holds.
    pub structural: Option<StructuralChecks>,
    /// Present when the source side holds: the lifted function and whether
    /// it is a MODF within the threshold.
    pub lifted: Option<SignFunction>,
    pub lifted_ok: bool,
}

/// Solves both sides by brute force: subsets for `γ-` and sign functions for
/// the gadget. Gadget order is capped at the oracle limit.
pub fn equivalence_check(source: &Digraph, k: i64) -> Result<EquivalenceReport> {
    let inst = build_gadget(source, k)?;
    let order = inst.gadget.order();
    if order > ORACLE_CAP {
        return Err(ModfError::CapExceeded {
            what: "gadget order",
            value: order,
            cap: ORACLE_CAP,
        });
    }
    let gm = gamma_minus(source)?;
    let source_yes = gm.size as i64 <= k;
    let gadget_yes = modf_decision(&inst.gadget, inst.weight_threshold)?;
    let optimum = gamma_maj_out_oracle(&inst.gadget)?;

    let structural = if optimum.optimum <= inst.weight_threshold {
        Some(structural_checks(&inst, &optimum.witness)?)
    } else {
        None
    };
    let (lifted, lifted_ok) = if source_yes {
        let f = lift_in_dominating_to_modf(&inst, gm.witness)?;
        let ok = is_modf(&inst.gadget, &f)? && f.weight() <= inst.weight_threshold;
        (Some(f), ok)
    } else {
        (None, false)
    };
    Ok(EquivalenceReport {
        n: source.order(),
        d: inst.d,
        k,
        gadget_order: order,
        weight_threshold: inst.weight_threshold,
        gamma_minus: gm.size,
        in_dominating_witness: gm.witness,
        source_yes,
        gadget_yes,
        agree: source_yes == gadget_yes,
        gamma_maj_gadget: optimum.optimum,
        structural,
        lifted,
        lifted_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn instance_validation() {
        assert!(validate_instance(&directed_cycle(3).unwrap(), 2));
        assert!(!validate_instance(&directed_path(3).unwrap(), 1));
        assert!(!validate_instance(&directed_cycle(8).unwrap(), 5));
        assert!(!validate_instance(&directed_cycle(3).unwrap(), 0));
        // d = 1 needs n < 6
        assert!(!validate_instance(&directed_cycle(6).unwrap(), 1));
        assert!(build_gadget(&directed_path(3).unwrap(), 1).is_err());
    }

    #[test]
    fn c3_gadget_layout() {
        let inst = build_gadget(&directed_cycle(3).unwrap(), 2).unwrap();
        assert_eq!(inst.gadget.order(), 10);
        assert_eq!(inst.x_set.to_vec(), vec![0]);
        assert_eq!(inst.weight_threshold, -4);
        assert_eq!(inst.t_part(), VertexSet::full(5));
        assert_eq!(inst.d_prime_part().to_vec(), vec![5, 6, 7]);
        assert_eq!(inst.d_second_part().to_vec(), vec![8, 9]);
        // T complete, X sees everything, D'' only sees X
        assert_eq!(inst.gadget.out_neighbors(0), VertexSet::full(10).without(0));
        assert_eq!(inst.gadget.out_neighbors(1), VertexSet::full(5).without(1));
        assert_eq!(inst.gadget.out_neighbors(8).to_vec(), vec![0]);
        assert_eq!(inst.gadget.out_neighbors(5).to_vec(), vec![0, 6]);
        assert_eq!(inst.gadget.arc_count(), 20 + 3 + 4 + 6);
    }

    #[test]
    fn lift_on_complete_source() {
        let inst = build_gadget(&complete_digraph(3).unwrap(), 1).unwrap();
        assert_eq!(inst.gadget.order(), 14);
        assert_eq!(inst.weight_threshold, -8);
        let f = lift_in_dominating_to_modf(&inst, VertexSet::singleton(2)).unwrap();
        assert_eq!(f.positives().len(), 3);
        assert_eq!(f.weight(), -8);
        assert!(is_modf(&inst.gadget, &f).unwrap());
        let sat = crate::domination::satisfied_set(&inst.gadget, &f).unwrap();
        assert!((inst.d_prime_part() | inst.d_second_part()).is_subset(sat));
    }

    #[test]
    fn lift_errors() {
        let inst = build_gadget(&directed_cycle(3).unwrap(), 1).unwrap();
        assert_eq!(
            lift_in_dominating_to_modf(&inst, VertexSet::singleton(0)),
            Err(ModfError::NotInDominating)
        );
        let s: VertexSet = [0, 1].into_iter().collect();
        assert!(matches!(
            lift_in_dominating_to_modf(&inst, s),
            Err(ModfError::SetTooLarge { .. })
        ));
    }

    #[test]
    fn out_degree_one_leaves_d_second_unsatisfied() {
        // With d = 1 every D'' vertex sees itself and one X vertex, so its
        // closed out-sum under the lifted function is 0.
        let inst = build_gadget(&directed_cycle(3).unwrap(), 2).unwrap();
        let s: VertexSet = [0, 1].into_iter().collect();
        let f = lift_in_dominating_to_modf(&inst, s).unwrap();
        assert_eq!(f.weight(), -4);
        let sat = crate::domination::satisfied_set(&inst.gadget, &f).unwrap();
        assert!(!sat.intersects(inst.d_second_part()));
        assert!(!is_modf(&inst.gadget, &f).unwrap());
    }

    #[test]
    fn complete_digraph_equivalence() {
        let k4 = complete_digraph(4).unwrap();
        for k in 1..=2 {
            let r = equivalence_check(&k4, k).unwrap();
            assert_eq!(r.gadget_order, 20);
            assert!(r.agree && r.source_yes && r.lifted_ok);
            assert_eq!(r.gamma_minus, 1);
            assert!(r.structural.unwrap().all_pass());
        }
    }

    #[test]
    fn normalization_fills_x() {
        let inst = build_gadget(&complete_digraph(4).unwrap(), 1).unwrap();
        let positives: VertexSet = [0, inst.copy_of(0), inst.copy_of(1), inst.copy_of(2)]
            .into_iter()
            .collect();
        let f = SignFunction::new(inst.gadget.order(), positives).unwrap();
        let (g, swaps) = normalize_on_x(&inst, &f).unwrap();
        assert_eq!(swaps, 2);
        assert!(inst.x_set.is_subset(g.positives()));
        assert_eq!(g.weight(), f.weight());
        assert!(g.positives().contains(inst.copy_of(2)));
    }
}
