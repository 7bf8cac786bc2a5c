//! The tangent space at the fixed point of the canonical embedding.
//!
//! For simple simply connected `G` and a proper Levi subset, the tangent
//! space is `⊕ Hom(V(ω_i)^{Ru P}, V(ω_i))` with the summands of
//! L-generated fundamental weights removed. [`removal_set`] finds those by a
//! walk on the Dynkin diagram; [`removal_set_oracle`] finds them by
//! exhaustive search over tensor products and serves as ground truth.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dynkin::{self, NodeSet};
use crate::error::{Error, Result};
use crate::repcalc;
use crate::rootsys::RootSystem;

/// Default rank bound for [`removal_set_oracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 4;

/// Per-node line of the tangent-space report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandReport {
    pub node: usize,
    pub retained: bool,
    /// `dim V_G(ω_i)`.
    pub g_dim: BigInt,
    /// `dim V(ω_i)^{Ru P} = dim V_L(ω_i)`.
    pub l_dim: BigInt,
    /// `g_dim · l_dim` for retained summands, zero otherwise.
    pub contribution: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentReport {
    pub summands: Vec<SummandReport>,
    pub removed: NodeSet,
    pub total_dim: BigInt,
    pub dim_ce: usize,
}

fn check_input(sys: &RootSystem, levi: NodeSet) -> Result<()> {
    if !sys.is_simple() {
        return Err(Error::NotSimple);
    }
    sys.check_nodes(levi)?;
    if levi == sys.all_nodes() {
        return Err(Error::LeviIsWholeDiagram);
    }
    Ok(())
}

/// `dim CE(G/Ru(P)) = |Δ⁺| + |Δ⁺_L| + rank`.
pub fn dim_ce(sys: &RootSystem, levi: NodeSet) -> Result<usize> {
    sys.check_nodes(levi)?;
    Ok(sys.positive_roots().len() + sys.count_positive_roots_in(levi) + sys.rank())
}

/// Nodes whose summands are removed by the diagram walk.
pub fn removal_set(sys: &RootSystem, levi: NodeSet) -> Result<NodeSet> {
    check_input(sys, levi)?;
    let walker = Walker { sys, levi, sing: dynkin::singularity(sys)? };
    let mut removed = NodeSet::empty();
    for start in dynkin::extreme_nodes(sys).intersection(levi).iter() {
        removed = removed.union(walker.walk(start));
    }
    Ok(removed)
}

struct Walker<'a> {
    sys: &'a RootSystem,
    levi: NodeSet,
    sing: Option<usize>,
}

enum Step {
    Continue,
    Stop,
    /// Continue along the given ray, stopping once the removed segment
    /// (singularity included) exceeds `limit` nodes.
    Branch { ray: Vec<usize>, limit: Option<usize> },
}

impl Walker<'_> {
    fn next_node(&self, prev: usize, cur: usize) -> Option<usize> {
        let next: Vec<usize> = self.sys.neighbors(cur).iter().copied().filter(|&u| u != prev).collect();
        (next.len() == 1).then(|| next[0])
    }

    fn walk(&self, start: usize) -> NodeSet {
        let mut removed = NodeSet::empty();
        let Some(&first) = self.sys.neighbors(start).first() else {
            return removed;
        };
        if Some(start) == self.sing && !self.sys.is_long(first) {
            // The walk begins at the singularity and heads for the short
            // roots, so the singularity is already behind it.
            return removed;
        }
        let (mut prev, mut cur) = (start, first);
        loop {
            removed.insert(cur);
            if !self.levi.contains(cur) {
                return removed;
            }
            if Some(cur) == self.sing {
                match self.at_singularity(prev) {
                    Step::Stop => return removed,
                    Step::Continue => {}
                    Step::Branch { ray, limit } => {
                        for (k, &node) in ray.iter().enumerate() {
                            removed.insert(node);
                            if !self.levi.contains(node) || limit.is_some_and(|l| k + 2 > l) {
                                break;
                            }
                        }
                        return removed;
                    }
                }
            }
            match self.next_node(prev, cur) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                }
                None => return removed,
            }
        }
    }

    fn at_singularity(&self, prev: usize) -> Step {
        if self.sys.is_simply_laced() {
            let Ok(rays) = dynkin::rays(self.sys) else { return Step::Stop };
            let others: Vec<&Vec<usize>> = rays.iter().filter(|r| !r.contains(&prev)).collect();
            let inside = |r: &Vec<usize>| r.iter().all(|&n| self.levi.contains(n));
            let (in_levi, outside): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = others.into_iter().partition(|r| inside(r));
            if in_levi.len() != 1 || outside.len() != 1 {
                return Step::Stop;
            }
            let is_e = self.sys.components()[0].kind == crate::rootsys::SimpleType::E;
            let limit = is_e.then(|| rays.iter().filter(|r| *r != outside[0]).map(Vec::len).max().unwrap_or(0));
            Step::Branch { ray: outside[0].clone(), limit }
        } else if !self.sys.is_long(prev) {
            // Crossed the multiple edge from the short side: keep going.
            Step::Continue
        } else {
            Step::Stop
        }
    }
}

/// Per-node summand dimensions and the total dimension of the tangent space.
pub fn tangent_report(sys: &RootSystem, levi: NodeSet) -> Result<TangentReport> {
    let removed = removal_set(sys, levi)?;
    report_for(sys, levi, removed)
}

/// Builds the report for an explicit removal set (used to compare the walk
/// with the oracle).
pub fn report_for(sys: &RootSystem, levi: NodeSet, removed: NodeSet) -> Result<TangentReport> {
    check_input(sys, levi)?;
    let all = sys.all_nodes();
    let mut summands = Vec::new();
    let mut total = BigInt::zero();
    for i in 0..sys.rank() {
        let w = sys.fundamental_weight(i);
        let g_dim = repcalc::weyl_dim(sys, all, &w)?;
        let l_dim = repcalc::weyl_dim(sys, levi, &w)?;
        let retained = !removed.contains(i);
        let contribution = if retained { &g_dim * &l_dim } else { BigInt::zero() };
        total += &contribution;
        summands.push(SummandReport { node: i, retained, g_dim, l_dim, contribution });
    }
    Ok(TangentReport { summands, removed, total_dim: total, dim_ce: dim_ce(sys, levi)? })
}

/// The set of fundamental weights `L`-generated by the other fundamental
/// weights, found by exhaustive search. Refuses ranks above `bound`.
pub fn removal_set_oracle(sys: &RootSystem, levi: NodeSet, bound: usize) -> Result<NodeSet> {
    check_input(sys, levi)?;
    if sys.rank() > bound {
        return Err(Error::RankAboveBound { rank: sys.rank(), bound });
    }
    let mut removed = NodeSet::empty();
    for i in 0..sys.rank() {
        let pool: Vec<_> = (0..sys.rank()).filter(|&j| j != i).map(|j| sys.fundamental_weight(j)).collect();
        if repcalc::is_l_generated(sys, levi, &sys.fundamental_weight(i), &pool)? {
            removed.insert(i);
        }
    }
    Ok(removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::rootsys::SimpleType::{self, *};

    fn sys(t: SimpleType, n: usize) -> RootSystem {
        RootSystem::simple(t, n).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn retained_pairs(r: &TangentReport) -> Vec<(BigInt, BigInt)> {
        let mut v: Vec<(BigInt, BigInt)> =
            r.summands.iter().filter(|s| s.retained).map(|s| (s.g_dim.clone(), s.l_dim.clone())).collect();
        v.sort();
        v
    }

    #[test]
    fn e8_with_e7_levi() {
        let e8 = sys(E, 8);
        // Delete the far end of the longest ray (Bourbaki node 8).
        let levi = e8.all_nodes().without(7);
        assert_eq!(dim_ce(&e8, levi).unwrap(), 191);
        let r = tangent_report(&e8, levi).unwrap();
        assert_eq!(r.removed, NodeSet::from_nodes(&[2, 3, 4, 5]));
        assert_eq!(
            retained_pairs(&r),
            vec![(big(248), big(1)), (big(3875), big(133)), (big(30380), big(56)), (big(147250), big(912))]
        );
        assert_eq!(r.total_dim, big(136508903));
    }

    #[test]
    fn f4_with_b3_levi() {
        let f4 = sys(F, 4);
        let levi = NodeSet::from_nodes(&[0, 1, 2]);
        assert_eq!(dim_ce(&f4, levi).unwrap(), 37);
        let r = tangent_report(&f4, levi).unwrap();
        assert_eq!(r.removed.len(), 1);
        assert_eq!(retained_pairs(&r), vec![(big(26), big(1)), (big(52), big(7)), (big(273), big(8))]);
        assert_eq!(r.total_dim, big(2574));
    }

    #[test]
    fn type_a_hyperplane_stabilizer_is_smooth() {
        for n in 2..=8 {
            let a = sys(A, n - 1);
            let levi = a.all_nodes().without(n - 2);
            let r = tangent_report(&a, levi).unwrap();
            let kept: Vec<usize> = r.summands.iter().filter(|s| s.retained).map(|s| s.node).collect();
            assert_eq!(kept, vec![0]);
            assert_eq!(r.total_dim, BigInt::from(n * (n - 1)));
            assert_eq!(r.total_dim, BigInt::from(dim_ce(&a, levi).unwrap()));
        }
        let a2 = sys(A, 2);
        assert_eq!(tangent_report(&a2, NodeSet::from_nodes(&[0])).unwrap().total_dim, big(6));
    }

    #[test]
    fn dim_ce_for_full_levi_is_dim_g() {
        let b3 = sys(B, 3);
        assert_eq!(dim_ce(&b3, b3.all_nodes()).unwrap(), b3.dim_group());
    }

    #[test]
    fn oracle_examples() {
        let a3 = sys(A, 3);
        assert_eq!(removal_set_oracle(&a3, NodeSet::from_nodes(&[0]), 4).unwrap(), NodeSet::from_nodes(&[1]));
        for (t, n) in [(A, 4), (B, 3), (G, 2), (F, 4)] {
            assert_eq!(removal_set_oracle(&sys(t, n), NodeSet::empty(), 4).unwrap(), NodeSet::empty());
        }
        for (t, n) in [(B, 2), (G, 2)] {
            let s = sys(t, n);
            for node in 0..2 {
                let levi = NodeSet::from_nodes(&[node]);
                assert_eq!(removal_set_oracle(&s, levi, 4).unwrap(), removal_set(&s, levi).unwrap());
            }
        }
    }

    #[test]
    fn input_errors() {
        let e6 = sys(E, 6);
        assert_eq!(
            removal_set_oracle(&e6, NodeSet::empty(), 4).unwrap_err(),
            Error::RankAboveBound { rank: 6, bound: 4 }
        );
        assert_eq!(removal_set(&e6, e6.all_nodes()).unwrap_err(), Error::LeviIsWholeDiagram);
        let ss = RootSystem::new(&[(A, 1), (A, 2)]).unwrap();
        assert_eq!(tangent_report(&ss, NodeSet::empty()).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn walk_matches_oracle_through_rank_six() {
        use crate::rootsys::SimpleType;
        for n in 1..=6 {
            for t in [A, B, C, D, E, F, G] {
                if !SimpleType::admits_rank(t, n) {
                    continue;
                }
                let s = sys(t, n);
                let outside_and_boundary_free = |levi: NodeSet| s.all_nodes().difference(levi.union(dynkin::boundary(&s, levi)));
                for levi in s.all_nodes().subsets().filter(|&l| l != s.all_nodes()) {
                    let walk = removal_set(&s, levi).unwrap();
                    assert_eq!(walk, removal_set_oracle(&s, levi, 6).unwrap(), "{t}{n} levi {levi}");
                    assert!(walk.is_disjoint(outside_and_boundary_free(levi)));
                    let r = report_for(&s, levi, walk).unwrap();
                    assert!(r.total_dim >= BigInt::from(r.dim_ce));
                    for line in &r.summands {
                        if !levi.contains(line.node) {
                            assert_eq!(line.l_dim, BigInt::from(1));
                        }
                    }
                }
            }
        }
    }
}
