//! Node subsets of a Dynkin diagram and the graph algorithms the orbit and
//! tangent-space computations are built on.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// A subset of diagram nodes, stored as a bit mask (node `i` is bit `i`).
///
/// Ordered by the sorted list of contained nodes, so `{0} < {0, 1} < {1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        Self(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn from_nodes(nodes: &[usize]) -> Self {
        nodes.iter().copied().collect()
    }

    /// Nodes `start..end`.
    pub fn from_range(start: usize, end: usize) -> Self {
        (start..end).collect()
    }

    pub fn contains(self, node: usize) -> bool {
        node < Self::CAPACITY && self.0 >> node & 1 == 1
    }

    pub fn insert(&mut self, node: usize) {
        assert!(node < Self::CAPACITY, "node index {node} exceeds capacity");
        self.0 |= 1 << node;
    }

    pub fn remove(&mut self, node: usize) {
        if node < Self::CAPACITY {
            self.0 &= !(1 << node);
        }
    }

    pub fn with(mut self, node: usize) -> Self {
        self.insert(node);
        self
    }

    pub fn without(mut self, node: usize) -> Self {
        self.remove(node);
        self
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..Self::CAPACITY).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bit-mask order.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        let full = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(NodeSet(cur))
        })
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for n in iter {
            s.insert(n);
        }
        s
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints one-based node labels, e.g. `{1,3}`.
impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, n) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", n + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Connected components of the subdiagram induced on `s`, ordered by their
/// smallest node.
pub fn components(sys: &RootSystem, s: NodeSet) -> Vec<NodeSet> {
    let mut left = s;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = NodeSet::empty().with(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in sys.neighbors(v) {
                if s.contains(u) && !comp.contains(u) {
                    comp.insert(u);
                    stack.push(u);
                }
            }
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// Nodes outside `s` adjacent to some node of `s`.
pub fn boundary(sys: &RootSystem, s: NodeSet) -> NodeSet {
    s.iter()
        .flat_map(|v| sys.neighbors(v).iter().copied())
        .filter(|&u| !s.contains(u))
        .collect()
}

fn degree(sys: &RootSystem, node: usize) -> usize {
    sys.neighbors(node).len()
}

/// The branch node (types D, E) or the long node incident to the multiple
/// edge (types B, C, F, G); `None` for type A.
pub fn singularity(sys: &RootSystem) -> Result<Option<usize>> {
    if !sys.is_simple() {
        return Err(Error::NotSimple);
    }
    if let Some(branch) = (0..sys.rank()).find(|&v| degree(sys, v) >= 3) {
        return Ok(Some(branch));
    }
    Ok(sys.edges().iter().find(|e| e.multiplicity > 1).map(|e| {
        if sys.root_norm(e.a) > sys.root_norm(e.b) {
            e.a
        } else {
            e.b
        }
    }))
}

/// Nodes of degree at most one (a lone node counts as extreme).
pub fn extreme_nodes(sys: &RootSystem) -> NodeSet {
    (0..sys.rank()).filter(|&v| degree(sys, v) <= 1).collect()
}

/// Maximal paths leaving the singularity, each listed outward from the node
/// adjacent to it; ordered by smallest contained node.
pub fn rays(sys: &RootSystem) -> Result<Vec<Vec<usize>>> {
    let sing = singularity(sys)?.ok_or(Error::NoSingularity)?;
    let mut rays: Vec<Vec<usize>> = sys
        .neighbors(sing)
        .iter()
        .map(|&first| walk_from(sys, sing, first))
        .collect();
    rays.sort_by_key(|r| r.iter().copied().min());
    Ok(rays)
}

/// The path starting at `first` and moving away from `prev` until it cannot
/// continue without branching. Only used on chains.
pub(crate) fn walk_from(sys: &RootSystem, prev: usize, first: usize) -> Vec<usize> {
    let mut path = vec![first];
    let (mut p, mut cur) = (prev, first);
    loop {
        let next: Vec<usize> = sys.neighbors(cur).iter().copied().filter(|&u| u != p).collect();
        if next.len() != 1 {
            break;
        }
        p = cur;
        cur = next[0];
        path.push(cur);
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType::{self, *};

    fn sys(t: SimpleType, n: usize) -> RootSystem {
        RootSystem::simple(t, n).unwrap()
    }

    #[test]
    fn component_examples() {
        let a3 = sys(A, 3);
        assert_eq!(
            components(&a3, NodeSet::from_nodes(&[0, 2])),
            vec![NodeSet::from_nodes(&[0]), NodeSet::from_nodes(&[2])]
        );
        assert_eq!(components(&a3, a3.all_nodes()), vec![a3.all_nodes()]);
        let d4 = sys(D, 4);
        assert_eq!(components(&d4, NodeSet::from_nodes(&[0, 2, 3])).len(), 3);
    }

    #[test]
    fn boundary_examples() {
        let a3 = sys(A, 3);
        assert_eq!(boundary(&a3, NodeSet::from_nodes(&[1, 2])), NodeSet::from_nodes(&[0]));
        assert_eq!(boundary(&a3, NodeSet::empty()), NodeSet::empty());
        assert_eq!(boundary(&a3, a3.all_nodes()), NodeSet::empty());
    }

    #[test]
    fn singularity_examples() {
        for n in 1..=8 {
            assert_eq!(singularity(&sys(A, n)).unwrap(), None);
        }
        assert_eq!(singularity(&sys(D, 4)).unwrap(), Some(1));
        // F4: nodes 1,2 long, double edge 2=>3.
        assert_eq!(singularity(&sys(F, 4)).unwrap(), Some(1));
        assert_eq!(singularity(&sys(G, 2)).unwrap(), Some(1));
        assert_eq!(singularity(&sys(B, 2)).unwrap(), Some(0));
        assert_eq!(singularity(&sys(C, 3)).unwrap(), Some(2));
        assert_eq!(singularity(&sys(E, 8)).unwrap(), Some(3));
        let ss = RootSystem::new(&[(A, 1), (A, 1)]).unwrap();
        assert_eq!(singularity(&ss).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn extreme_node_examples() {
        assert_eq!(extreme_nodes(&sys(A, 4)), NodeSet::from_nodes(&[0, 3]));
        assert_eq!(extreme_nodes(&sys(D, 4)), NodeSet::from_nodes(&[0, 2, 3]));
        assert_eq!(extreme_nodes(&sys(A, 1)), NodeSet::from_nodes(&[0]));
    }

    #[test]
    fn ray_examples() {
        let d4 = rays(&sys(D, 4)).unwrap();
        assert_eq!(d4.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 1]);
        let mut e8: Vec<usize> = rays(&sys(E, 8)).unwrap().iter().map(Vec::len).collect();
        e8.sort_unstable();
        assert_eq!(e8, vec![1, 2, 4]);
        assert_eq!(rays(&sys(F, 4)).unwrap(), vec![vec![0], vec![2, 3]]);
        assert_eq!(rays(&sys(A, 3)).unwrap_err(), Error::NoSingularity);
    }

    #[test]
    fn extreme_node_counts_and_boundaries() {
        for n in 1..=8 {
            for t in [A, B, C, D, E, F, G] {
                if !t.admits_rank(n) {
                    continue;
                }
                let s = sys(t, n);
                let k = extreme_nodes(&s).len();
                assert!((1..=3).contains(&k));
                if k == 3 {
                    assert!(matches!(t, D | E));
                }
                if n <= 6 {
                    for sub in s.all_nodes().subsets() {
                        assert!(boundary(&s, sub).is_disjoint(sub));
                        let parts = components(&s, sub);
                        let union = parts.iter().fold(NodeSet::empty(), |a, &b| a.union(b));
                        assert_eq!(union, sub);
                        for (i, p) in parts.iter().enumerate() {
                            for q in &parts[i + 1..] {
                                assert!(p.is_disjoint(*q));
                                assert!(boundary(&s, *p).is_disjoint(*q));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subsets_enumeration() {
        let s = NodeSet::from_nodes(&[1, 3]);
        let subs: Vec<NodeSet> = s.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(alloc::format!("{s}"), "{2,4}");
    }
}
