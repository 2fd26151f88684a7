//! Brute-force domination oracle: exact gamma, dominion count and the
//! full list of minimum dominating sets for any graph this crate builds.
//!
//! Counting is over labeled subsets; no quotient under rotation or
//! reflection is taken. Subsets are scanned per cardinality in ascending
//! mask order, so set lists are deterministic and already sorted.

use crate::bits::{binomial, Subsets};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default ceiling on subset tests per `solve` call.
pub const DEFAULT_BUDGET: u64 = 1 << 31;

/// Exact solution: domination number, dominion, and every minimum
/// dominating set (ascending by mask).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominionResult {
    pub gamma: usize,
    pub zeta: u64,
    pub sets: Vec<VertexSet>,
}

/// Per-vertex membership counts across all minimum dominating sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadProfile {
    pub per_vertex: Vec<u64>,
    pub tau: u64,
}

/// True iff the closed neighborhoods of `s` cover every vertex.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let mut covered = VertexSet::EMPTY;
    for v in s.iter() {
        if v >= g.n_vertices() {
            return false;
        }
        covered = covered.union(g.closed_unchecked(v));
    }
    covered == g.full_set()
}

/// Finds gamma and all dominating sets of that size by scanning
/// cardinalities upward from the degree bound `ceil(n / (max_deg + 1))`.
///
/// `budget` caps the total number of subset tests; exceeding it aborts
/// with [`Error::BudgetExceeded`] before the offending cardinality runs.
pub fn solve(g: &Graph, budget: u64) -> Result<DominionResult> {
    let n = g.n_vertices();
    let full = g.full_set();
    let closed: Vec<u64> = (0..n).map(|v| g.closed_unchecked(v).mask()).collect();

    let lower = n.div_ceil(g.max_degree() + 1);
    let mut spent: u128 = 0;
    for k in lower.max(1)..=n {
        spent += binomial(n, k);
        if spent > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: spent,
                budget,
            });
        }
        let mut sets = Vec::new();
        for mask in Subsets::new(n, k) {
            let mut covered = 0u64;
            let mut rest = mask;
            while rest != 0 {
                covered |= closed[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if covered == full.mask() {
                sets.push(VertexSet::from_mask(mask));
            }
        }
        if !sets.is_empty() {
            return Ok(DominionResult {
                gamma: k,
                zeta: sets.len() as u64,
                sets,
            });
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// Counts dominating subsets of exactly size `k` (no minimality claim).
pub fn count_dominating_of_size(g: &Graph, k: usize, budget: u64) -> Result<u64> {
    let n = g.n_vertices();
    let planned = binomial(n, k);
    if planned > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: planned,
            budget,
        });
    }
    let closed: Vec<u64> = (0..n).map(|v| g.closed_unchecked(v).mask()).collect();
    let full = g.full_set().mask();
    let mut count = 0;
    for mask in Subsets::new(n, k) {
        let mut covered = 0u64;
        let mut rest = mask;
        while rest != 0 {
            covered |= closed[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        if covered == full {
            count += 1;
        }
    }
    Ok(count)
}

/// Membership counts per vertex over the minimum sets; `tau` is the max.
pub fn load_profile(r: &DominionResult, n_vertices: usize) -> LoadProfile {
    let mut per_vertex = vec![0u64; n_vertices];
    for s in &r.sets {
        for v in s.iter() {
            per_vertex[v] += 1;
        }
    }
    let tau = per_vertex.iter().copied().max().unwrap_or(0);
    LoadProfile { per_vertex, tau }
}

/// Minimum pairwise overlap fraction `|S ∩ T| / gamma` over distinct
/// minimum dominating sets; 1 by convention when only one set exists.
pub fn min_overlap(r: &DominionResult) -> f64 {
    if r.sets.len() < 2 {
        return 1.0;
    }
    let mut best = usize::MAX;
    'outer: for i in 0..r.sets.len() {
        for j in i + 1..r.sets.len() {
            let ov = r.sets[i].intersection(r.sets[j]).len();
            if ov < best {
                best = ov;
                if best == 0 {
                    break 'outer;
                }
            }
        }
    }
    best as f64 / r.gamma as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family_str;

    fn named(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn dominating_predicate() {
        let g = build_family_str("prism:4").unwrap();
        // {b_0, t_2} -> ids {4, 2}
        assert!(is_dominating(&g, named(&[4, 2])));
        assert!(!is_dominating(&g, VertexSet::EMPTY));
        assert!(is_dominating(&g, g.full_set()));
        assert!(!is_dominating(&g, named(&[0, 1])));
    }

    #[test]
    fn prism4_sets_match_known_list() {
        let g = build_family_str("prism:4").unwrap();
        let r = solve(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.gamma, r.zeta), (2, 4));
        // {b0,t2}, {b1,t3}, {b2,t0}, {b3,t1}, ascending by mask
        let expected = vec![
            named(&[4, 2]),
            named(&[5, 3]),
            named(&[6, 0]),
            named(&[7, 1]),
        ];
        assert_eq!(r.sets, expected);
        assert!(r.sets.windows(2).all(|w| w[0].mask() < w[1].mask()));
    }

    #[test]
    fn small_families() {
        let r = solve(&build_family_str("complete:6").unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.gamma, r.zeta), (1, 6));
        let r = solve(&build_family_str("prism:6").unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.gamma, r.zeta), (4, 51));
        let r = solve(&build_family_str("path:6").unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.gamma, r.zeta), (2, 1));
    }

    #[test]
    fn every_reported_set_dominates_and_none_smaller_exists() {
        for spec in ["prism:5", "house", "wheel:6", "bintree:6", "kbipartite:2,3"] {
            let g = build_family_str(spec).unwrap();
            let r = solve(&g, DEFAULT_BUDGET).unwrap();
            assert!(r.sets.iter().all(|&s| is_dominating(&g, s)), "{spec}");
            assert_eq!(r.zeta, r.sets.len() as u64);
            if r.gamma > 1 {
                let below = count_dominating_of_size(&g, r.gamma - 1, DEFAULT_BUDGET).unwrap();
                assert_eq!(below, 0, "{spec}: found set below gamma");
            }
        }
    }

    #[test]
    fn load_profile_examples() {
        let g = build_family_str("prism:3").unwrap();
        let r = solve(&g, DEFAULT_BUDGET).unwrap();
        let lp = load_profile(&r, g.n_vertices());
        assert_eq!(lp.tau, 3);
        assert_eq!(lp.per_vertex.iter().sum::<u64>(), r.gamma as u64 * r.zeta);

        let g = build_family_str("complete:6").unwrap();
        let r = solve(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(load_profile(&r, 6).tau, 1);

        let g = build_family_str("star:6").unwrap();
        let r = solve(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.gamma, r.zeta), (1, 1));
        assert_eq!(load_profile(&r, 6).tau, 1);
    }

    #[test]
    fn overlap_examples() {
        let overlap = |spec: &str| {
            let g = build_family_str(spec).unwrap();
            min_overlap(&solve(&g, DEFAULT_BUDGET).unwrap())
        };
        assert_eq!(overlap("cycle:6"), 0.0);
        assert_eq!(overlap("bintree:5"), 0.5);
        assert_eq!(overlap("path:6"), 1.0); // unique set, convention
    }

    #[test]
    fn budget_guard() {
        let g = build_family_str("prism:10").unwrap();
        match solve(&g, 100) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert!(needed > 100);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn solve_is_deterministic() {
        let g = build_family_str("prism:7").unwrap();
        let a = solve(&g, DEFAULT_BUDGET).unwrap();
        let b = solve(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
    }
}
