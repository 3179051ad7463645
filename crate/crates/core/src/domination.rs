//! The defining predicates: closed out-sums, satisfied sets, MODFs, majority
//! dominating functions of graphs, minimality and in-domination.

use crate::bitset::VertexSet;
use crate::digraph::{Digraph, Graph};
use crate::error::{ModfError, Result};
use crate::sign::SignFunction;

/// Largest positive set [`is_minimal_modf`] will search exhaustively.
pub const MINIMALITY_CAP: usize = 20;

fn check_sizes(order: usize, f: &SignFunction) -> Result<()> {
    if order == 0 {
        return Err(ModfError::Empty);
    }
    if f.order() != order {
        return Err(ModfError::SizeMismatch {
            expected: order,
            found: f.order(),
        });
    }
    Ok(())
}

/// Whether `satisfied` vertices out of `n` form a majority: `2|S| >= n`.
#[inline]
pub fn is_majority(satisfied: usize, n: usize) -> bool {
    2 * satisfied >= n
}

/// Vertices whose closed neighborhood (given as a list of masks) has a
/// positive sum under `positives`. No validation; shared by every solver.
#[inline]
pub(crate) fn satisfied_mask(closed: &[VertexSet], positives: VertexSet) -> VertexSet {
    let mut sat = VertexSet::EMPTY;
    for (v, &nb) in closed.iter().enumerate() {
        // f(N) >= 1  <=>  2|N ∩ P| > |N|
        if 2 * (nb & positives).len() > nb.len() {
            sat.insert(v);
        }
    }
    sat
}

#[inline]
pub(crate) fn satisfied_count(closed: &[VertexSet], positives: VertexSet) -> usize {
    closed
        .iter()
        .filter(|&&nb| 2 * (nb & positives).len() > nb.len())
        .count()
}

/// Closed out-neighborhoods `N+[v]` of every vertex.
pub(crate) fn closed_out_sets(d: &Digraph) -> Vec<VertexSet> {
    (0..d.order()).map(|v| d.closed_out_neighbors(v)).collect()
}

/// Closed neighborhoods `N[v]` of every vertex.
pub(crate) fn closed_sets(g: &Graph) -> Vec<VertexSet> {
    (0..g.order()).map(|v| g.closed_neighbors(v)).collect()
}

/// `f(N+[v])`.
pub fn closed_out_sum(d: &Digraph, f: &SignFunction, v: usize) -> Result<i64> {
    check_sizes(d.order(), f)?;
    d.check_vertex(v)?;
    Ok(f.sum_over(d.closed_out_neighbors(v)))
}

/// `S = { v : f(N+[v]) >= 1 }`.
pub fn satisfied_set(d: &Digraph, f: &SignFunction) -> Result<VertexSet> {
    check_sizes(d.order(), f)?;
    Ok(satisfied_mask(&closed_out_sets(d), f.positives()))
}

/// Whether `f` is a majority out-dominating function of `d`.
pub fn is_modf(d: &Digraph, f: &SignFunction) -> Result<bool> {
    let sat = satisfied_set(d, f)?;
    Ok(is_majority(sat.len(), d.order()))
}

/// Whether no MODF `g != f` with `g <= f` pointwise exists.
///
/// Such a `g` is `f` with a nonempty subset of its positive vertices flipped,
/// so all subsets are searched; single flips are tried first since they
/// settle most non-minimal inputs.
pub fn is_minimal_modf(d: &Digraph, f: &SignFunction) -> Result<bool> {
    if !is_modf(d, f)? {
        return Err(ModfError::NotModf);
    }
    let positives = f.positives();
    if positives.len() > MINIMALITY_CAP {
        return Err(ModfError::CapExceeded {
            what: "positive vertices",
            value: positives.len(),
            cap: MINIMALITY_CAP,
        });
    }
    let closed = closed_out_sets(d);
    let n = d.order();
    let is_modf_with = |p: VertexSet| is_majority(satisfied_count(&closed, p), n);

    if positives.iter().any(|v| is_modf_with(positives.without(v))) {
        return Ok(false);
    }
    // Enumerate every nonempty submask `r` of `positives`; the candidate is
    // positives minus r.
    let all = positives.bits();
    let mut r = all;
    while r != 0 {
        if r.count_ones() > 1 && is_modf_with(VertexSet::from_bits(all & !r)) {
            return Ok(false);
        }
        r = (r - 1) & all;
    }
    Ok(true)
}

/// Every `+1` vertex `v` has some `u` in `N-[v]` with `f(N+[u])` in `{1, 2}`.
/// Holds for all minimal MODFs; the converse fails.
pub fn minimality_necessary_condition(d: &Digraph, f: &SignFunction) -> Result<bool> {
    if !is_modf(d, f)? {
        return Err(ModfError::NotModf);
    }
    let critical: VertexSet = (0..d.order())
        .filter(|&u| matches!(f.sum_over(d.closed_out_neighbors(u)), 1 | 2))
        .collect();
    Ok(f
        .positives()
        .iter()
        .all(|v| d.closed_in_neighbors(v).intersects(critical)))
}

/// Whether `f` is a majority dominating function of the undirected graph `g`.
pub fn is_majority_dominating(g: &Graph, f: &SignFunction) -> Result<bool> {
    check_sizes(g.order(), f)?;
    let sat = satisfied_count(&closed_sets(g), f.positives());
    Ok(is_majority(sat, g.order()))
}

/// Whether every vertex outside `s` has an out-neighbor in `s`.
pub fn is_in_dominating(d: &Digraph, s: VertexSet) -> Result<bool> {
    if s.bound() > d.order() {
        return Err(ModfError::VertexOutOfRange {
            vertex: s.bound() - 1,
            order: d.order(),
        });
    }
    Ok(in_dominates(d.out_sets(), s))
}

#[inline]
pub(crate) fn in_dominates(out: &[VertexSet], s: VertexSet) -> bool {
    out.iter()
        .enumerate()
        .all(|(v, &outs)| s.contains(v) || outs.intersects(s))
}

/// The digraph with every arc reversed.
pub fn reverse_digraph(d: &Digraph) -> Digraph {
    d.reverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn signs(values: &[i8]) -> SignFunction {
        SignFunction::from_values(values).unwrap()
    }

    #[test]
    fn closed_out_sum_examples() {
        let c3 = cycle(3);
        let ones = SignFunction::all_positive(3);
        for v in 0..3 {
            assert_eq!(closed_out_sum(&c3, &ones, v).unwrap(), 2);
        }
        let f = signs(&[-1, -1, 1, 1]);
        assert_eq!(closed_out_sum(&path(4), &f, 1).unwrap(), 0);
        let single = Digraph::empty(1).unwrap();
        assert_eq!(
            closed_out_sum(&single, &SignFunction::all_negative(1), 0).unwrap(),
            -1
        );
    }

    #[test]
    fn closed_out_sum_errors() {
        let p4 = path(4);
        let f = SignFunction::all_positive(4);
        assert_eq!(
            closed_out_sum(&p4, &f, 4),
            Err(ModfError::VertexOutOfRange { vertex: 4, order: 4 })
        );
        assert_eq!(
            closed_out_sum(&p4, &SignFunction::all_positive(3), 0),
            Err(ModfError::SizeMismatch { expected: 4, found: 3 })
        );
        let empty = Digraph::empty(0).unwrap();
        assert_eq!(
            is_modf(&empty, &SignFunction::all_positive(0)),
            Err(ModfError::Empty)
        );
    }

    #[test]
    fn satisfied_set_examples() {
        let p4 = path(4);
        let f = signs(&[-1, -1, 1, 1]);
        let sums: Vec<i64> = (0..4).map(|v| closed_out_sum(&p4, &f, v).unwrap()).collect();
        assert_eq!(sums, vec![-2, 0, 2, 1]);
        assert_eq!(satisfied_set(&p4, &f).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(
            satisfied_set(&p4, &SignFunction::all_positive(4)).unwrap(),
            VertexSet::full(4)
        );
        assert!(satisfied_set(&p4, &SignFunction::all_negative(4))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn modf_examples() {
        assert!(is_modf(&path(4), &signs(&[-1, -1, 1, 1])).unwrap());
        let c4 = cycle(4);
        for v in 0..4 {
            let f = SignFunction::from_positives(4, [v]).unwrap();
            assert!(!is_modf(&c4, &f).unwrap());
        }
        assert!(is_modf(&c4, &SignFunction::all_positive(4)).unwrap());
    }

    #[test]
    fn odd_order_needs_ceiling_half() {
        // n = 5 needs three satisfied vertices: directed P5 with the last two
        // vertices positive satisfies only v3, v4.
        let p5 = path(5);
        let f = signs(&[-1, -1, -1, 1, 1]);
        assert_eq!(satisfied_set(&p5, &f).unwrap().len(), 2);
        assert!(!is_modf(&p5, &f).unwrap());
        let g = signs(&[-1, -1, 1, 1, 1]);
        assert!(is_modf(&p5, &g).unwrap());
    }

    #[test]
    fn minimality_examples() {
        assert!(!is_minimal_modf(&path(3), &SignFunction::all_positive(3)).unwrap());
        assert!(is_minimal_modf(&cycle(4), &signs(&[1, 1, 1, -1])).unwrap());
        let single = Digraph::empty(1).unwrap();
        assert!(is_minimal_modf(&single, &SignFunction::all_positive(1)).unwrap());
        assert_eq!(
            is_minimal_modf(&cycle(4), &SignFunction::all_negative(4)),
            Err(ModfError::NotModf)
        );
    }

    #[test]
    fn minimality_cap_is_enforced() {
        let d = Digraph::empty(21).unwrap();
        assert!(matches!(
            is_minimal_modf(&d, &SignFunction::all_positive(21)),
            Err(ModfError::CapExceeded { .. })
        ));
    }

    #[test]
    fn minimality_matches_pointwise_brute_force() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        for mask in 0u64..16 {
            let f = SignFunction::new(4, VertexSet::from_bits(mask)).unwrap();
            if !is_modf(&d, &f).unwrap() {
                continue;
            }
            let brute = !(0u64..16).any(|g| {
                g != mask
                    && g & !mask == 0
                    && is_modf(&d, &SignFunction::new(4, VertexSet::from_bits(g)).unwrap())
                        .unwrap()
            });
            assert_eq!(is_minimal_modf(&d, &f).unwrap(), brute, "mask {mask:#b}");
        }
    }

    #[test]
    fn necessary_condition_examples() {
        let c4 = cycle(4);
        assert!(minimality_necessary_condition(&c4, &signs(&[1, 1, 1, -1])).unwrap());
        for n in 1..8 {
            let p = path(n);
            let ones = SignFunction::all_positive(n);
            assert!(minimality_necessary_condition(&p, &ones).unwrap());
            if n > 1 {
                assert!(!is_minimal_modf(&p, &ones).unwrap());
            }
        }
    }

    #[test]
    fn majority_dominating_examples() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_majority_dominating(&p4, &signs(&[-1, 1, 1, -1])).unwrap());
        assert!(is_majority_dominating(&p4, &SignFunction::all_positive(4)).unwrap());
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let f = SignFunction::from_positives(5, [0]).unwrap();
        assert!(!is_majority_dominating(&star, &f).unwrap());
    }

    #[test]
    fn in_dominating_examples() {
        let c3 = cycle(3);
        assert!(is_in_dominating(&c3, VertexSet::from_bits(0b011)).unwrap());
        assert!(!is_in_dominating(&c3, VertexSet::singleton(0)).unwrap());
        assert!(is_in_dominating(&c3, VertexSet::full(3)).unwrap());
        assert!(is_in_dominating(&c3, VertexSet::singleton(3)).is_err());
    }

    #[test]
    fn reverse_examples() {
        let p3 = path(3);
        let r = reverse_digraph(&p3);
        assert_eq!(r.arcs().collect::<Vec<_>>(), vec![(1, 0), (2, 1)]);
        let complete =
            Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(reverse_digraph(&complete), complete);
    }
}
