//! Representation calculus for `G` and its standard Levi subgroups.
//!
//! Every routine takes a `levi` node set: the simple roots of the reductive
//! subgroup `L` whose representations are meant. `levi = Π` gives `G`
//! itself. Weights always stay in the full fundamental coordinates of `G`,
//! so a highest weight of `L` keeps its central part.
//!
//! Internally weights are integer vectors; because short roots have squared
//! length 2, every value `(μ, α)` entering Freudenthal's formula is an
//! integer as well.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dynkin::NodeSet;
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::rootsys::{Basis, Root, RootSystem, Weight};

type Lat = Vec<i64>;

/// One isotypic component `V_L(λ)^{⊕m}` of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsotypicSummand {
    pub highest_weight: Weight,
    pub multiplicity: BigInt,
}

/// Validates `hw` as an integral weight, dominant for `levi`, and returns
/// its integer fundamental coordinates.
fn lattice_weight(sys: &RootSystem, levi: NodeSet, hw: &Weight) -> Result<Lat> {
    sys.check_nodes(levi)?;
    let w = sys.to_fundamental(hw)?;
    let x = w.to_ints().ok_or(Error::NonIntegral)?;
    if levi.iter().any(|j| x[j] < 0) {
        return Err(Error::NotDominant);
    }
    Ok(x)
}

fn lat_weight(x: &[i64]) -> Weight {
    Weight::from_ints(Basis::Fundamental, x)
}

/// Data of the Levi subsystem shared by the algorithms below.
struct Levi<'a> {
    sys: &'a RootSystem,
    nodes: NodeSet,
    roots: Vec<&'a Root>,
}

impl<'a> Levi<'a> {
    fn new(sys: &'a RootSystem, nodes: NodeSet) -> Self {
        Self { sys, nodes, roots: sys.positive_roots_in(nodes).collect() }
    }

    fn is_dominant(&self, x: &[i64]) -> bool {
        self.nodes.iter().all(|j| x[j] >= 0)
    }

    fn sub_root(&self, x: &[i64], root: &Root, times: i64) -> Lat {
        x.iter().zip(&root.fundamental).map(|(a, b)| a - times * b).collect()
    }

    fn simple_root(&self, j: usize) -> &'a [i64] {
        &self.sys.cartan()[j]
    }

    /// `(x, α)` for `x` in fundamental coordinates.
    fn form_with_root(&self, x: &[i64], root: &Root) -> i64 {
        root.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| c * (self.sys.root_norm(i) / 2) * x[i])
            .sum()
    }

    /// Conjugates `x` into the dominant chamber of the Levi.
    fn dominate(&self, x: &[i64]) -> Lat {
        let mut x = x.to_vec();
        while let Some(j) = self.nodes.iter().find(|&j| x[j] < 0) {
            let p = x[j];
            for (v, a) in x.iter_mut().zip(self.simple_root(j)) {
                *v -= p * a;
            }
        }
        x
    }

    /// Dot-action conjugation into the dominant chamber. Returns the sign of
    /// the Weyl element used, or `None` if `x + ρ` lies on a wall.
    fn dot_dominate(&self, x: &[i64]) -> Option<(Lat, i8)> {
        let mut x = x.to_vec();
        let mut sign = 1i8;
        loop {
            if self.nodes.iter().any(|j| x[j] == -1) {
                return None;
            }
            let Some(j) = self.nodes.iter().find(|&j| x[j] < -1) else {
                return Some((x, sign));
            };
            let p = x[j] + 1;
            for (v, a) in x.iter_mut().zip(self.simple_root(j)) {
                *v -= p * a;
            }
            sign = -sign;
        }
    }

    fn orbit(&self, x: &[i64]) -> Vec<Lat> {
        let mut seen: BTreeMap<Lat, ()> = BTreeMap::new();
        let mut queue = VecDeque::new();
        seen.insert(x.to_vec(), ());
        queue.push_back(x.to_vec());
        while let Some(y) = queue.pop_front() {
            for j in self.nodes.iter() {
                if y[j] == 0 {
                    continue;
                }
                let z: Lat = y.iter().zip(self.simple_root(j)).map(|(v, a)| v - y[j] * a).collect();
                if !seen.contains_key(&z) {
                    seen.insert(z.clone(), ());
                    queue.push_back(z);
                }
            }
        }
        seen.into_keys().collect()
    }
}

/// Dominant part of a weight diagram, computed by Freudenthal's formula.
struct Diagram {
    dominant: BTreeMap<Lat, BigInt>,
}

impl Diagram {
    fn build(levi: &Levi<'_>, hw: &[i64]) -> Self {
        let n = levi.sys.rank();
        // Dominant weights below hw, reached through chains of dominant
        // weights differing by positive roots; each carries λ - μ in simple
        // root coordinates.
        let mut depth: BTreeMap<Lat, Lat> = BTreeMap::new();
        depth.insert(hw.to_vec(), vec![0; n]);
        let mut queue = VecDeque::from([hw.to_vec()]);
        while let Some(mu) = queue.pop_front() {
            let c = depth[&mu].clone();
            for root in &levi.roots {
                let nu = levi.sub_root(&mu, root, 1);
                if levi.is_dominant(&nu) && !depth.contains_key(&nu) {
                    let cn: Lat = c.iter().zip(&root.coeffs).map(|(a, b)| a + b).collect();
                    depth.insert(nu.clone(), cn);
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(Lat, Lat)> = depth.into_iter().collect();
        order.sort_by_key(|(mu, c)| (c.iter().sum::<i64>(), mu.clone()));

        let mut dominant: BTreeMap<Lat, BigInt> = BTreeMap::new();
        for (mu, c) in order {
            if mu == hw {
                dominant.insert(mu, BigInt::one());
                continue;
            }
            let mut num = BigInt::zero();
            for root in &levi.roots {
                let mut k = 1;
                loop {
                    let up: Lat = mu.iter().zip(&root.fundamental).map(|(a, b)| a + k * b).collect();
                    let Some(m) = dominant.get(&levi.dominate(&up)) else { break };
                    num += m * BigInt::from(levi.form_with_root(&up, root));
                    k += 1;
                }
            }
            num *= 2;
            // (λ - μ, λ + μ + 2ρ_L)
            let den: i64 = levi
                .nodes
                .iter()
                .map(|j| c[j] * (levi.sys.root_norm(j) / 2) * (hw[j] + mu[j] + 2))
                .sum();
            assert!(den > 0, "Freudenthal denominator must be positive");
            let (m, r) = num.div_rem(&BigInt::from(den));
            assert!(r.is_zero(), "Freudenthal multiplicity must be integral");
            if !m.is_zero() {
                dominant.insert(mu, m);
            }
        }
        Self { dominant }
    }

    fn all_weights(&self, levi: &Levi<'_>) -> BTreeMap<Lat, BigInt> {
        let mut out = BTreeMap::new();
        for (mu, m) in &self.dominant {
            for w in levi.orbit(mu) {
                out.insert(w, m.clone());
            }
        }
        out
    }
}

/// `∏_{α∈Δ⁺_L} ⟨α^∨, hw+ρ_L⟩ / ⟨α^∨, ρ_L⟩`, the dimension of `V_L(hw)`.
pub fn weyl_dim(sys: &RootSystem, levi: NodeSet, hw: &Weight) -> Result<BigInt> {
    let x = lattice_weight(sys, levi, hw)?;
    Ok(weyl_dim_lattice(sys, levi, &x))
}

pub(crate) fn weyl_dim_lattice(sys: &RootSystem, levi: NodeSet, x: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in sys.positive_roots_in(levi) {
        let shifted: i64 = root.coroot.iter().zip(x).map(|(c, v)| c * (v + 1)).sum();
        let height: i64 = root.coroot.iter().sum();
        num *= shifted;
        den *= height;
    }
    let (d, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension must be an integer");
    d
}

/// The full weight diagram of `V_L(hw)` with multiplicities.
pub fn weight_multiplicities(sys: &RootSystem, levi: NodeSet, hw: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
    let x = lattice_weight(sys, levi, hw)?;
    let l = Levi::new(sys, levi);
    let diagram = Diagram::build(&l, &x);
    Ok(diagram.all_weights(&l).into_iter().map(|(w, m)| (lat_weight(&w), m)).collect())
}

/// Decomposes `V_L(hws[0]) ⊗ V_L(hws[1]) ⊗ …` into isotypic components,
/// folding left to right with Klimyk's formula. The empty product is the
/// trivial module. Output is sorted by highest weight.
pub fn tensor_decompose(sys: &RootSystem, levi: NodeSet, hws: &[Weight]) -> Result<Vec<IsotypicSummand>> {
    let xs: Vec<Lat> = hws.iter().map(|w| lattice_weight(sys, levi, w)).collect::<Result<_>>()?;
    let l = Levi::new(sys, levi);
    let decomposition = decompose_lattice(&l, &xs);
    Ok(decomposition
        .into_iter()
        .map(|(w, m)| IsotypicSummand { highest_weight: lat_weight(&w), multiplicity: m })
        .collect())
}

fn decompose_lattice(l: &Levi<'_>, xs: &[Lat]) -> BTreeMap<Lat, BigInt> {
    let mut acc: BTreeMap<Lat, BigInt> = BTreeMap::new();
    let Some((first, rest)) = xs.split_first() else {
        acc.insert(vec![0; l.sys.rank()], BigInt::one());
        return acc;
    };
    acc.insert(first.clone(), BigInt::one());
    for factor in rest {
        let weights = Diagram::build(l, factor).all_weights(l);
        let mut next: BTreeMap<Lat, BigInt> = BTreeMap::new();
        for (lambda, mult) in &acc {
            for (nu, m) in &weights {
                let sum: Lat = lambda.iter().zip(nu).map(|(a, b)| a + b).collect();
                if let Some((dom, sign)) = l.dot_dominate(&sum) {
                    let e = next.entry(dom).or_insert_with(BigInt::zero);
                    if sign > 0 {
                        *e += mult * m;
                    } else {
                        *e -= mult * m;
                    }
                }
            }
        }
        next.retain(|_, m| {
            assert!(!m.is_negative(), "Klimyk cancellation left a negative multiplicity");
            !m.is_zero()
        });
        acc = next;
    }
    acc
}

/// The γ-degree `⟨γ, λ⟩` with `γ = Σ_{k∉levi} ω_k^∨`.
fn grading_degree(sys: &RootSystem, levi: NodeSet, x: &[i64]) -> Q {
    let inv = sys.cartan_inverse();
    sys.all_nodes()
        .difference(levi)
        .iter()
        .map(|k| (0..sys.rank()).map(|j| &inv[j][k] * q(x[j])).sum::<Q>())
        .sum()
}

/// Whether `x` lies in the rational span of the simple roots in `levi`.
fn in_levi_root_span(sys: &RootSystem, levi: NodeSet, x: &[i64]) -> bool {
    let inv = sys.cartan_inverse();
    sys.all_nodes()
        .difference(levi)
        .iter()
        .all(|k| (0..sys.rank()).map(|j| &inv[j][k] * q(x[j])).sum::<Q>().is_zero())
}

/// Searches for a multiset of `pool` weights whose `L`-tensor product
/// contains `V_L(target)`. Returns the multiset as pool indices
/// (non-decreasing), or `None` if there is none.
///
/// The search is complete: with the grading coweight `γ = Σ_{k∉levi} ω_k^∨`
/// every non-zero dominant weight of a simple group has positive degree, and
/// a witness must have the same total degree as the target.
pub fn l_generation_witness(
    sys: &RootSystem,
    levi: NodeSet,
    target: &Weight,
    pool: &[Weight],
) -> Result<Option<Vec<usize>>> {
    if !sys.is_simple() {
        return Err(Error::NotSimple);
    }
    sys.check_nodes(levi)?;
    if levi == sys.all_nodes() {
        return Err(Error::LeviIsWholeDiagram);
    }
    let all = sys.all_nodes();
    let t = lattice_weight(sys, all, target)?;
    let ps: Vec<Lat> = pool.iter().map(|w| lattice_weight(sys, all, w)).collect::<Result<_>>()?;
    if t.iter().all(|&v| v == 0) {
        return Ok(Some(Vec::new()));
    }
    let target_deg = grading_degree(sys, levi, &t);
    let items: Vec<(usize, Q)> = ps
        .iter()
        .enumerate()
        .filter(|(_, p)| p.iter().any(|&v| v != 0))
        .map(|(i, p)| (i, grading_degree(sys, levi, p)))
        .collect();
    debug_assert!(items.iter().all(|(_, d)| d.is_positive()));

    let l = Levi::new(sys, levi);
    let mut chosen = Vec::new();
    let mut search = Search { sys, levi, l: &l, target: &t, pool: &ps, items: &items };
    Ok(search.run(0, &target_deg, &mut chosen).then_some(chosen))
}

struct Search<'s, 'a> {
    sys: &'s RootSystem,
    levi: NodeSet,
    l: &'s Levi<'a>,
    target: &'s [i64],
    pool: &'s [Lat],
    items: &'s [(usize, Q)],
}

impl Search<'_, '_> {
    fn run(&mut self, start: usize, remaining: &Q, chosen: &mut Vec<usize>) -> bool {
        if remaining.is_zero() {
            return self.check(chosen);
        }
        for k in start..self.items.len() {
            let (idx, deg) = &self.items[k];
            if deg > remaining {
                continue;
            }
            chosen.push(*idx);
            if self.run(k, &(remaining - deg), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn check(&self, chosen: &[usize]) -> bool {
        let n = self.sys.rank();
        let mut diff: Lat = self.target.iter().map(|v| -v).collect();
        for &i in chosen {
            for (d, p) in diff.iter_mut().zip(&self.pool[i]) {
                *d += p;
            }
        }
        if !in_levi_root_span(self.sys, self.levi, &diff) {
            return false;
        }
        let factors: Vec<Lat> = chosen.iter().map(|&i| self.pool[i].clone()).collect();
        debug_assert_eq!(self.target.len(), n);
        decompose_lattice(self.l, &factors).contains_key(self.target)
    }
}

/// Whether `target` is `L`-generated by `pool`.
pub fn is_l_generated(sys: &RootSystem, levi: NodeSet, target: &Weight, pool: &[Weight]) -> Result<bool> {
    Ok(l_generation_witness(sys, levi, target, pool)?.is_some())
}

/// Dimension of `V_L(hw)` summed over a decomposition, weighted by
/// multiplicity.
pub fn total_dimension(sys: &RootSystem, levi: NodeSet, summands: &[IsotypicSummand]) -> Result<BigInt> {
    summands.iter().try_fold(BigInt::zero(), |acc, s| {
        Ok(acc + &s.multiplicity * weyl_dim(sys, levi, &s.highest_weight)?)
    })
}

/// Whether `x` is a non-negative integer combination of the simple roots in
/// `levi`.
pub fn in_levi_root_cone(sys: &RootSystem, levi: NodeSet, x: &Weight) -> Result<bool> {
    let r = sys.to_simple_root(x)?;
    Ok(r.coords().iter().enumerate().all(|(i, c)| {
        c.is_integer() && !c.is_negative() && (levi.contains(i) || c.is_zero())
    }))
}

/// Shorthand for `linalg::from_ints` on fundamental coordinates.
pub fn fundamental(coords: &[i64]) -> Weight {
    Weight::new(Basis::Fundamental, linalg::from_ints(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType::{self, *};

    fn sys(t: SimpleType, n: usize) -> RootSystem {
        RootSystem::simple(t, n).unwrap()
    }

    fn dim(s: &RootSystem, levi: NodeSet, x: &[i64]) -> BigInt {
        weyl_dim(s, levi, &fundamental(x)).unwrap()
    }

    #[test]
    fn trivial_module_has_dimension_one() {
        let s = sys(E, 8);
        assert_eq!(dim(&s, s.all_nodes(), &[0; 8]), BigInt::from(1));
    }

    #[test]
    fn classical_dimensions() {
        let a2 = sys(A, 2);
        assert_eq!(dim(&a2, a2.all_nodes(), &[1, 1]), BigInt::from(8));
        let g2 = sys(G, 2);
        assert_eq!(dim(&g2, g2.all_nodes(), &[1, 0]), BigInt::from(7));
        assert_eq!(dim(&g2, g2.all_nodes(), &[0, 1]), BigInt::from(14));
        let b3 = sys(B, 3);
        assert_eq!(dim(&b3, b3.all_nodes(), &[0, 0, 1]), BigInt::from(8));
    }

    #[test]
    fn e8_adjoint_and_f4_levi_dimensions() {
        let e8 = sys(E, 8);
        let mut w = [0; 8];
        w[7] = 1;
        assert_eq!(dim(&e8, e8.all_nodes(), &w), BigInt::from(248));
        // F4 with the B3 Levi on nodes 1,2,3.
        let f4 = sys(F, 4);
        let b3 = NodeSet::from_nodes(&[0, 1, 2]);
        assert_eq!(dim(&f4, b3, &[0, 0, 1, 0]), BigInt::from(8));
        assert_eq!(dim(&f4, b3, &[1, 0, 0, 0]), BigInt::from(7));
        assert_eq!(dim(&f4, b3, &[0, 0, 0, 1]), BigInt::from(1));
    }

    #[test]
    fn non_dominant_weight_is_rejected() {
        let a2 = sys(A, 2);
        assert_eq!(weyl_dim(&a2, a2.all_nodes(), &fundamental(&[-1, 0])).unwrap_err(), Error::NotDominant);
        // ... but it is fine for a Levi that ignores node 1.
        assert_eq!(weyl_dim(&a2, NodeSet::from_nodes(&[1]), &fundamental(&[-1, 0])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn sl2_string() {
        let a1 = sys(A, 1);
        let m = weight_multiplicities(&a1, a1.all_nodes(), &fundamental(&[2])).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.values().all(|v| v.is_one()));
    }

    #[test]
    fn a2_adjoint_zero_weight() {
        let a2 = sys(A, 2);
        let m = weight_multiplicities(&a2, a2.all_nodes(), &fundamental(&[1, 1])).unwrap();
        assert_eq!(m[&fundamental(&[0, 0])], BigInt::from(2));
        assert_eq!(m.values().sum::<BigInt>(), BigInt::from(8));
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = sys(A, 1);
        let d = tensor_decompose(&a1, a1.all_nodes(), &[fundamental(&[1]), fundamental(&[1])]).unwrap();
        let hw: Vec<Weight> = d.iter().map(|s| s.highest_weight.clone()).collect();
        assert_eq!(hw, vec![fundamental(&[0]), fundamental(&[2])]);
        assert!(d.iter().all(|s| s.multiplicity.is_one()));
    }

    #[test]
    fn tensoring_with_trivial_is_identity() {
        let b3 = sys(B, 3);
        let levi = NodeSet::from_nodes(&[1, 2]);
        let lam = fundamental(&[3, 1, 2]);
        let d = tensor_decompose(&b3, levi, &[lam.clone(), fundamental(&[0, 0, 0])]).unwrap();
        assert_eq!(d, vec![IsotypicSummand { highest_weight: lam, multiplicity: BigInt::one() }]);
    }

    #[test]
    fn levi_tensor_keeps_full_coordinates() {
        // A3, levi {1}: res ω_1 ⊗ res ω_1 contains the trivial module with
        // highest weight 2ω_1 - α_1 = ω_2.
        let a3 = sys(A, 3);
        let levi = NodeSet::from_nodes(&[0]);
        let d = tensor_decompose(&a3, levi, &[fundamental(&[1, 0, 0]), fundamental(&[1, 0, 0])]).unwrap();
        let hw: Vec<Weight> = d.iter().map(|s| s.highest_weight.clone()).collect();
        assert_eq!(hw, vec![fundamental(&[0, 1, 0]), fundamental(&[2, 0, 0])]);
    }

    #[test]
    fn l_generation_examples() {
        let a3 = sys(A, 3);
        let levi = NodeSet::from_nodes(&[0]);
        let (w1, w2, w3) = (fundamental(&[1, 0, 0]), fundamental(&[0, 1, 0]), fundamental(&[0, 0, 1]));
        assert!(is_l_generated(&a3, levi, &w2, &[w1.clone(), w3.clone()]).unwrap());
        assert_eq!(l_generation_witness(&a3, levi, &w2, &[w1.clone(), w3.clone()]).unwrap(), Some(vec![0, 0]));
        assert!(!is_l_generated(&a3, levi, &w3, &[w1.clone(), w2.clone()]).unwrap());
        for t in [&w1, &w2, &w3] {
            let pool: Vec<Weight> = [&w1, &w2, &w3].into_iter().filter(|p| p != &t).cloned().collect();
            assert!(!is_l_generated(&a3, NodeSet::empty(), t, &pool).unwrap());
        }
    }

    #[test]
    fn l_generation_errors() {
        let ss = RootSystem::new(&[(A, 1), (A, 1)]).unwrap();
        assert_eq!(
            is_l_generated(&ss, NodeSet::empty(), &fundamental(&[1, 0]), &[]).unwrap_err(),
            Error::NotSimple
        );
        let a2 = sys(A, 2);
        assert_eq!(
            is_l_generated(&a2, a2.all_nodes(), &fundamental(&[1, 0]), &[]).unwrap_err(),
            Error::LeviIsWholeDiagram
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_system() -> impl Strategy<Value = RootSystem> {
            prop::sample::select(vec![(A, 1), (A, 2), (A, 3), (B, 2), (B, 3), (C, 3), (G, 2)])
                .prop_map(|(t, n)| sys(t, n))
        }

        fn case() -> impl Strategy<Value = (RootSystem, NodeSet, Vec<i64>, Vec<i64>)> {
            small_system().prop_flat_map(|s| {
                let n = s.rank();
                let full = s.all_nodes().bits();
                (
                    Just(s),
                    (0..=full).prop_map(move |b| NodeSet::from_bits(b & full)),
                    prop::collection::vec(0i64..=2, n),
                    prop::collection::vec(0i64..=1, n),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn multiplicities_sum_to_dimension((s, levi, x, _) in case()) {
                let hw = fundamental(&x);
                let mults = weight_multiplicities(&s, levi, &hw).unwrap();
                let sum: BigInt = mults.values().sum();
                prop_assert_eq!(sum, weyl_dim(&s, levi, &hw).unwrap());
            }

            #[test]
            fn multiplicities_are_weyl_invariant((s, levi, x, _) in case()) {
                let mults = weight_multiplicities(&s, levi, &fundamental(&x)).unwrap();
                for (w, m) in &mults {
                    for i in levi.iter() {
                        prop_assert_eq!(mults.get(&s.reflect(i, w)), Some(m));
                    }
                }
            }

            #[test]
            fn tensor_dimensions_multiply((s, levi, x, y) in case()) {
                let (a, b) = (fundamental(&x), fundamental(&y));
                let parts = tensor_decompose(&s, levi, &[a.clone(), b.clone()]).unwrap();
                let total = total_dimension(&s, levi, &parts).unwrap();
                prop_assert_eq!(total, weyl_dim(&s, levi, &a).unwrap() * weyl_dim(&s, levi, &b).unwrap());
            }

            #[test]
            fn larger_pools_generate_more((s, levi, x, _) in case(), target in 0usize..3, extra in 0usize..3) {
                prop_assume!(levi != s.all_nodes());
                let n = s.rank();
                let (target, extra) = (target % n, extra % n);
                let pool: Vec<Weight> = (0..n)
                    .filter(|&j| j != target && j != extra && x[j] > 0)
                    .map(|j| s.fundamental_weight(j))
                    .collect();
                let goal = s.fundamental_weight(target);
                if is_l_generated(&s, levi, &goal, &pool).unwrap() {
                    let mut bigger = pool.clone();
                    bigger.push(s.fundamental_weight(extra));
                    prop_assert!(is_l_generated(&s, levi, &goal, &bigger).unwrap());
                }
            }
        }
    }
}
