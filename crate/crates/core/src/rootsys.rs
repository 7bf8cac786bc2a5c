//! Cartan data of simple and semisimple root systems.
//!
//! Nodes are numbered from zero internally and follow the Bourbaki
//! numbering within each simple component; components are concatenated in
//! the order given. Weights are exact rational vectors tagged with the basis
//! they are expressed in.
//!
//! Conventions:
//!
//! * `cartan[i][j] = ⟨α_j^∨, α_i⟩`, so row `i` is the simple root `α_i`
//!   written in the fundamental-weight basis.
//! * The invariant form is normalized per component so that short roots have
//!   squared length 2; hence `(α_i, ω_j) = δ_ij · |α_i|²/2` is an integer.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::dynkin::NodeSet;
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};

/// The letter of a simple Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Self::A,
            'B' => Self::B,
            'C' => Self::C,
            'D' => Self::D,
            'E' => Self::E,
            'F' => Self::F,
            'G' => Self::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Self::A => rank >= 1,
            Self::B | Self::C => rank >= 2,
            Self::D => rank >= 3,
            Self::E => (6..=8).contains(&rank),
            Self::F => rank == 4,
            Self::G => rank == 2,
        }
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            Self::A => n * (n + 1) / 2,
            Self::B | Self::C => n * n,
            Self::D => n * n - n,
            Self::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Self::F => 24,
            Self::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One simple factor of a semisimple system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub kind: SimpleType,
    pub rank: usize,
    /// Index of the first node of this component in the global numbering.
    pub offset: usize,
}

impl Component {
    pub fn nodes(&self) -> NodeSet {
        NodeSet::from_range(self.offset, self.offset + self.rank)
    }
}

/// An edge of the Dynkin diagram. `multiplicity` is 1, 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
}

/// Which basis a [`Weight`]'s coordinates refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Fundamental weights `ω_i` (the default for weights).
    Fundamental,
    /// Simple roots `α_i`.
    SimpleRoot,
    /// Fundamental coweights `ω_i^∨`.
    FundamentalCoweight,
    /// Simple coroots `α_i^∨`.
    Coroot,
}

impl Basis {
    pub fn is_coweight(self) -> bool {
        matches!(self, Basis::FundamentalCoweight | Basis::Coroot)
    }
}

/// An exact rational vector in one of the four standard bases.
///
/// The derived order compares the basis tag first and then the coordinates
/// lexicographically; it is the canonical order used for every sorted
/// output in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    basis: Basis,
    coords: Vec<Q>,
}

impl Weight {
    pub fn new(basis: Basis, coords: Vec<Q>) -> Self {
        Self { basis, coords }
    }

    pub fn fundamental(coords: Vec<Q>) -> Self {
        Self::new(Basis::Fundamental, coords)
    }

    pub fn from_ints(basis: Basis, coords: &[i64]) -> Self {
        Self::new(basis, linalg::from_ints(coords))
    }

    pub fn zero(basis: Basis, rank: usize) -> Self {
        Self::new(basis, linalg::zeros(rank))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    /// Integer coordinates, if every coordinate is an integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        linalg::to_ints(&self.coords)
    }

    pub fn scaled(&self, s: &Q) -> Self {
        Self::new(self.basis, linalg::scale(&self.coords, s))
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.basis, other.basis, "weights in different bases");
        assert_eq!(self.rank(), other.rank(), "weights of different rank");
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.check_compatible(rhs);
        Weight::new(self.basis, linalg::add(&self.coords, &rhs.coords))
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.check_compatible(rhs);
        Weight::new(self.basis, linalg::sub(&self.coords, &rhs.coords))
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.basis, linalg::neg(&self.coords))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A positive root together with its coroot, both as integer coordinate
/// vectors in the simple (co)root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub coroot: Vec<i64>,
    /// `(α, α)` under the normalized invariant form.
    pub norm: i64,
    /// The root in fundamental-weight coordinates.
    pub fundamental: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn support(&self) -> NodeSet {
        NodeSet::from_iter(self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i))
    }

    /// `⟨α^∨, x⟩` for `x` in fundamental coordinates.
    pub fn pair(&self, x: &[i64]) -> i64 {
        self.coroot.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Immutable Cartan datum of a semisimple root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<Component>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Squared length `(α_i, α_i)` of each simple root.
    root_norms: Vec<i64>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    positive_roots: Vec<Root>,
    /// Rational inverse of `cartan`.
    cartan_inverse: Vec<Vec<Q>>,
    /// Gram matrix of the fundamental weights under the invariant form.
    fundamental_gram: Vec<Vec<Q>>,
}

fn simple_component(kind: SimpleType, n: usize) -> (Vec<Edge>, Vec<i64>) {
    let chain = |len: usize| -> Vec<Edge> {
        (0..len.saturating_sub(1)).map(|i| Edge { a: i, b: i + 1, multiplicity: 1 }).collect()
    };
    match kind {
        SimpleType::A => (chain(n), vec![2; n]),
        SimpleType::B => {
            let mut e = chain(n);
            e[n - 2].multiplicity = 2;
            let mut norms = vec![4; n];
            norms[n - 1] = 2;
            (e, norms)
        }
        SimpleType::C => {
            let mut e = chain(n);
            e[n - 2].multiplicity = 2;
            let mut norms = vec![2; n];
            norms[n - 1] = 4;
            (e, norms)
        }
        SimpleType::D => {
            let mut e = chain(n - 1);
            e.push(Edge { a: n - 3, b: n - 1, multiplicity: 1 });
            (e, vec![2; n])
        }
        SimpleType::E => {
            // 1-3-4-5-...-n with 2 attached to 4.
            let mut e = vec![Edge { a: 0, b: 2, multiplicity: 1 }, Edge { a: 1, b: 3, multiplicity: 1 }];
            e.extend((2..n - 1).map(|i| Edge { a: i, b: i + 1, multiplicity: 1 }));
            (e, vec![2; n])
        }
        SimpleType::F => {
            let mut e = chain(4);
            e[1].multiplicity = 2;
            (e, vec![4, 4, 2, 2])
        }
        SimpleType::G => (vec![Edge { a: 0, b: 1, multiplicity: 3 }], vec![2, 6]),
    }
}

impl RootSystem {
    /// Builds the Cartan datum of the direct sum of the given simple types.
    pub fn new(spec: &[(SimpleType, usize)]) -> Result<Self> {
        if spec.is_empty() {
            return Err(Error::EmptySystem);
        }
        let mut components = Vec::new();
        let mut edges = Vec::new();
        let mut root_norms = Vec::new();
        let mut offset = 0;
        for &(kind, n) in spec {
            if !kind.admits_rank(n) {
                return Err(Error::InadmissibleType { kind, rank: n });
            }
            let (e, norms) = simple_component(kind, n);
            edges.extend(e.into_iter().map(|e| Edge { a: e.a + offset, b: e.b + offset, ..e }));
            root_norms.extend(norms);
            components.push(Component { kind, rank: n, offset });
            offset += n;
        }
        let rank = offset;
        if rank > NodeSet::CAPACITY {
            return Err(Error::RankTooLarge(rank));
        }

        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut adjacency = vec![Vec::new(); rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for e in &edges {
            let (na, nb) = (root_norms[e.a], root_norms[e.b]);
            let m = i64::from(e.multiplicity);
            // cartan[i][j] = 2(α_i, α_j)/(α_j, α_j); the long end sees -m.
            if na == nb {
                cartan[e.a][e.b] = -1;
                cartan[e.b][e.a] = -1;
            } else if na > nb {
                cartan[e.a][e.b] = -m;
                cartan[e.b][e.a] = -1;
            } else {
                cartan[e.a][e.b] = -1;
                cartan[e.b][e.a] = -m;
            }
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }

        let cartan_q: Vec<Vec<Q>> = cartan.iter().map(|r| linalg::from_ints(r)).collect();
        let cartan_inverse = linalg::invert(&cartan_q).expect("Cartan matrix is non-singular");
        // (ω_i, ω_j) = A^{-1}[i][j] · |α_j|²/2
        let fundamental_gram: Vec<Vec<Q>> = (0..rank)
            .map(|i| (0..rank).map(|j| &cartan_inverse[i][j] * q(root_norms[j] / 2)).collect())
            .collect();

        let mut sys = Self {
            components,
            rank,
            cartan,
            root_norms,
            edges,
            adjacency,
            positive_roots: Vec::new(),
            cartan_inverse,
            fundamental_gram,
        };
        sys.positive_roots = sys.close_positive_roots();
        Ok(sys)
    }

    /// Convenience constructor for a simple system.
    pub fn simple(kind: SimpleType, rank: usize) -> Result<Self> {
        Self::new(&[(kind, rank)])
    }

    /// Reflection closure of the simple roots, sorted by height then
    /// coefficients.
    fn close_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                // ⟨α_i^∨, β⟩ = Σ_k β_k cartan[k][i]
                let p: i64 = (0..n).map(|k| beta[k] * self.cartan[k][i]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= p;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().map(|c| self.make_root(c)).collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        roots
    }

    fn make_root(&self, coeffs: Vec<i64>) -> Root {
        let n = self.rank;
        let norm: i64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| coeffs[i] * coeffs[j] * self.simple_inner(i, j))
            .sum();
        // α^∨ = Σ c_i (|α_i|²/|α|²) α_i^∨
        let coroot: Vec<i64> = coeffs
            .iter()
            .zip(&self.root_norms)
            .map(|(&c, &d)| {
                debug_assert_eq!((c * d) % norm, 0);
                c * d / norm
            })
            .collect();
        let fundamental: Vec<i64> =
            (0..n).map(|j| (0..n).map(|i| coeffs[i] * self.cartan[i][j]).sum()).collect();
        Root { coeffs, coroot, norm, fundamental }
    }

    /// `(α_i, α_j)` under the normalized form.
    fn simple_inner(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j] * self.root_norms[j] / 2
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::from_range(0, self.rank)
    }

    /// Squared length of the simple root at `node`.
    pub fn root_norm(&self, node: usize) -> i64 {
        self.root_norms[node]
    }

    /// Whether `node` is a long root of its component. In simply laced
    /// components every root counts as long.
    pub fn is_long(&self, node: usize) -> bool {
        let comp = self.component_of(node);
        let max = comp.nodes().iter().map(|i| self.root_norms[i]).max().unwrap_or(2);
        self.root_norms[node] == max
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| e.multiplicity == 1)
    }

    pub fn component_of(&self, node: usize) -> &Component {
        self.components
            .iter()
            .find(|c| (c.offset..c.offset + c.rank).contains(&node))
            .expect("node within rank")
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots as weights in the simple-root basis.
    pub fn positive_root_weights(&self) -> Vec<Weight> {
        self.positive_roots.iter().map(|r| Weight::from_ints(Basis::SimpleRoot, &r.coeffs)).collect()
    }

    /// Positive roots whose support lies inside `nodes`.
    pub fn positive_roots_in(&self, nodes: NodeSet) -> impl Iterator<Item = &Root> + '_ {
        self.positive_roots.iter().filter(move |r| r.support().is_subset(nodes))
    }

    /// `|Δ⁺_Φ|` for the subsystem spanned by the simple roots in `nodes`.
    pub fn count_positive_roots_in(&self, nodes: NodeSet) -> usize {
        self.positive_roots_in(nodes).count()
    }

    /// `dim G = 2|Δ⁺| + rank` for the semisimple group on all nodes.
    pub fn dim_group(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    /// Dimension of the standard Levi subgroup `L_Φ` (including its full
    /// maximal torus).
    pub fn dim_levi(&self, nodes: NodeSet) -> usize {
        2 * self.count_positive_roots_in(nodes) + self.rank
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, rank: self.rank })
        }
    }

    pub fn check_nodes(&self, nodes: NodeSet) -> Result<()> {
        match nodes.iter().find(|&n| n >= self.rank) {
            Some(node) => Err(Error::NodeOutOfRange { node, rank: self.rank }),
            None => Ok(()),
        }
    }

    /// Exact inverse of the Cartan matrix.
    pub fn cartan_inverse(&self) -> &[Vec<Q>] {
        &self.cartan_inverse
    }

    /// Gram matrix `(ω_i, ω_j)` of the invariant form.
    pub fn fundamental_gram(&self) -> &[Vec<Q>] {
        &self.fundamental_gram
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::new(Basis::Fundamental, linalg::unit(self.rank, i))
    }

    /// `α_i` in the fundamental basis.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::from_ints(Basis::Fundamental, &self.cartan[i])
    }

    pub fn simple_coroot(&self, i: usize) -> Weight {
        Weight::new(Basis::Coroot, linalg::unit(self.rank, i))
    }

    pub fn fundamental_coweight(&self, i: usize) -> Weight {
        Weight::new(Basis::FundamentalCoweight, linalg::unit(self.rank, i))
    }

    /// `ρ`, the sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight::new(Basis::Fundamental, (0..self.rank).map(|_| Q::one()).collect())
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank, found: w.rank() })
        }
    }

    /// Converts a weight to the fundamental basis (`x = r·A` from root
    /// coordinates).
    pub fn to_fundamental(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        match w.basis {
            Basis::Fundamental => Ok(w.clone()),
            Basis::SimpleRoot => {
                let a: Vec<Vec<Q>> = self.cartan.iter().map(|r| linalg::from_ints(r)).collect();
                Ok(Weight::fundamental(linalg::vec_mat(&w.coords, &a)))
            }
            _ => Err(Error::BasisMismatch),
        }
    }

    /// Converts a weight to the simple-root basis (`r = x·A⁻¹`).
    pub fn to_simple_root(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        match w.basis {
            Basis::SimpleRoot => Ok(w.clone()),
            Basis::Fundamental => {
                Ok(Weight::new(Basis::SimpleRoot, linalg::vec_mat(&w.coords, &self.cartan_inverse)))
            }
            _ => Err(Error::BasisMismatch),
        }
    }

    /// Converts a coweight to the simple-coroot basis. The fundamental
    /// coweight `ω_k^∨` is row `k` of `(Aᵀ)⁻¹`.
    pub fn to_coroot(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        match w.basis {
            Basis::Coroot => Ok(w.clone()),
            Basis::FundamentalCoweight => {
                let inv_t = linalg::transpose(&self.cartan_inverse);
                Ok(Weight::new(Basis::Coroot, linalg::vec_mat(&w.coords, &inv_t)))
            }
            _ => Err(Error::BasisMismatch),
        }
    }

    /// Converts a coweight to the fundamental-coweight basis.
    pub fn to_fundamental_coweight(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        match w.basis {
            Basis::FundamentalCoweight => Ok(w.clone()),
            Basis::Coroot => {
                let a_t: Vec<Vec<Q>> =
                    linalg::transpose(&self.cartan.iter().map(|r| linalg::from_ints(r)).collect::<Vec<_>>());
                Ok(Weight::new(Basis::FundamentalCoweight, linalg::vec_mat(&w.coords, &a_t)))
            }
            _ => Err(Error::BasisMismatch),
        }
    }

    /// The canonical pairing `⟨coweight, weight⟩`.
    pub fn pairing(&self, coweight: &Weight, weight: &Weight) -> Result<Q> {
        if !coweight.basis.is_coweight() || weight.basis.is_coweight() {
            return Err(Error::BasisMismatch);
        }
        let c = self.to_coroot(coweight)?;
        let w = self.to_fundamental(weight)?;
        Ok(linalg::dot(&c.coords, &w.coords))
    }

    /// The invariant form on weights.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Q> {
        let a = self.to_fundamental(a)?;
        let b = self.to_fundamental(b)?;
        Ok(linalg::dot(&a.coords, &linalg::mat_vec(&self.fundamental_gram, &b.coords)))
    }

    /// Whether `⟨α_i^∨, w⟩ ≥ 0` for every simple coroot.
    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        let w = self.to_fundamental(w)?;
        Ok(w.coords.iter().all(|x| !x.is_negative()))
    }

    /// Dominance with respect to the simple roots in `nodes` only.
    pub fn is_dominant_for(&self, w: &Weight, nodes: NodeSet) -> Result<bool> {
        let w = self.to_fundamental(w)?;
        Ok(nodes.iter().all(|i| !w.coords[i].is_negative()))
    }

    /// The simple reflection `s_i` applied to a weight in the fundamental
    /// basis.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        debug_assert_eq!(w.basis, Basis::Fundamental);
        let p = w.coords[i].clone();
        if p.is_zero() {
            return w.clone();
        }
        let coords = w.coords.iter().zip(&self.cartan[i]).map(|(x, &a)| x - &p * q(a)).collect();
        Weight::new(Basis::Fundamental, coords)
    }

    /// Orbit of `w` under the reflections indexed by `generators`, in
    /// canonical (lexicographic) order.
    pub fn weyl_orbit(&self, w: &Weight, generators: NodeSet) -> Result<Vec<Weight>> {
        self.check_nodes(generators)?;
        let start = self.to_fundamental(w)?;
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for i in generators.iter() {
                let y = self.reflect(i, &x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Row `i` of the inverse transposed Cartan matrix: the degrees
    /// `⟨ω_i^∨, ω_j⟩` of the fundamental weights with respect to `ω_i^∨`.
    pub fn degree_labels(&self, i: usize) -> Result<Vec<Q>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        self.check_node(i)?;
        Ok((0..self.rank).map(|j| self.cartan_inverse[j][i].clone()).collect())
    }

    /// Compact type string such as `A3xB2`.
    pub fn type_string(&self) -> alloc::string::String {
        use alloc::string::ToString;
        let parts: Vec<alloc::string::String> =
            self.components.iter().map(|c| alloc::format!("{}{}", c.kind, c.rank)).collect();
        if parts.is_empty() {
            return "".to_string();
        }
        parts.join("x")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qfrac;

    pub(crate) fn all_types_up_to(max_rank: usize) -> Vec<(SimpleType, usize)> {
        use SimpleType::*;
        let mut out = Vec::new();
        for n in 1..=max_rank {
            for t in [A, B, C, D, E, F, G] {
                if t.admits_rank(n) {
                    out.push((t, n));
                }
            }
        }
        out
    }

    #[test]
    fn positive_root_counts_match_closed_form() {
        for (t, n) in all_types_up_to(8) {
            let sys = RootSystem::simple(t, n).unwrap();
            assert_eq!(sys.positive_roots().len(), t.positive_root_count(n), "{t}{n}");
        }
    }

    #[test]
    fn named_root_counts() {
        assert_eq!(RootSystem::simple(SimpleType::A, 3).unwrap().positive_roots().len(), 6);
        assert_eq!(RootSystem::simple(SimpleType::G, 2).unwrap().positive_roots().len(), 6);
        assert_eq!(RootSystem::simple(SimpleType::E, 8).unwrap().positive_roots().len(), 120);
        assert_eq!(RootSystem::simple(SimpleType::E, 7).unwrap().positive_roots().len(), 63);
    }

    #[test]
    fn inadmissible_types_are_rejected() {
        for (t, n) in [(SimpleType::B, 1), (SimpleType::D, 2), (SimpleType::E, 5), (SimpleType::F, 3), (SimpleType::G, 3)] {
            assert_eq!(RootSystem::simple(t, n).unwrap_err(), Error::InadmissibleType { kind: t, rank: n });
        }
        assert_eq!(RootSystem::new(&[]).unwrap_err(), Error::EmptySystem);
    }

    #[test]
    fn cartan_matrix_invariants() {
        for (t, n) in all_types_up_to(8) {
            let sys = RootSystem::simple(t, n).unwrap();
            let a = sys.cartan();
            for i in 0..n {
                assert_eq!(a[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn b2_orientation() {
        let sys = RootSystem::simple(SimpleType::B, 2).unwrap();
        // α_1 long, α_2 short: α_1 = 2ω_1 - 2ω_2
        assert_eq!(sys.cartan()[0], vec![2, -2]);
        assert_eq!(sys.cartan()[1], vec![-1, 2]);
        assert!(sys.is_long(0) && !sys.is_long(1));
    }

    #[test]
    fn pairing_examples() {
        for (t, n) in all_types_up_to(4) {
            let sys = RootSystem::simple(t, n).unwrap();
            let c = sys.simple_coroot(0);
            assert_eq!(sys.pairing(&c, &sys.fundamental_weight(0)).unwrap(), q(1));
            assert_eq!(sys.pairing(&c, &sys.simple_root(0)).unwrap(), q(2));
        }
        let a2 = RootSystem::simple(SimpleType::A, 2).unwrap();
        let alpha2 = Weight::from_ints(Basis::SimpleRoot, &[0, 1]);
        assert_eq!(a2.pairing(&a2.fundamental_coweight(0), &alpha2).unwrap(), q(0));
        assert_eq!(
            a2.pairing(&a2.fundamental_coweight(0), &a2.fundamental_weight(0)).unwrap(),
            qfrac(2, 3)
        );
    }

    #[test]
    fn pairing_rejects_bad_arguments() {
        let a2 = RootSystem::simple(SimpleType::A, 2).unwrap();
        let w3 = Weight::from_ints(Basis::Fundamental, &[1, 0, 0]);
        assert_eq!(
            a2.pairing(&a2.simple_coroot(0), &w3).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
        assert_eq!(
            a2.pairing(&a2.fundamental_weight(0), &a2.fundamental_weight(0)).unwrap_err(),
            Error::BasisMismatch
        );
    }

    #[test]
    fn dominance() {
        let a2 = RootSystem::simple(SimpleType::A, 2).unwrap();
        assert!(a2.is_dominant(&Weight::from_ints(Basis::Fundamental, &[1, 1])).unwrap());
        let a1 = RootSystem::simple(SimpleType::A, 1).unwrap();
        assert!(!a1.is_dominant(&Weight::from_ints(Basis::Fundamental, &[-1])).unwrap());
        let a3 = RootSystem::simple(SimpleType::A, 3).unwrap();
        assert!(!a3.is_dominant(&Weight::from_ints(Basis::Fundamental, &[1, -1, 1])).unwrap());
    }

    #[test]
    fn weyl_orbit_examples() {
        let a1 = RootSystem::simple(SimpleType::A, 1).unwrap();
        let o = a1.weyl_orbit(&a1.fundamental_weight(0), NodeSet::from_nodes(&[0])).unwrap();
        assert_eq!(o, vec![Weight::from_ints(Basis::Fundamental, &[-1]), Weight::from_ints(Basis::Fundamental, &[1])]);

        let a2 = RootSystem::simple(SimpleType::A, 2).unwrap();
        let w1 = a2.fundamental_weight(0);
        assert_eq!(a2.weyl_orbit(&w1, a2.all_nodes()).unwrap().len(), 3);
        let o = a2.weyl_orbit(&w1, NodeSet::from_nodes(&[0])).unwrap();
        let expected: BTreeSet<Weight> = [w1.clone(), &w1 - &a2.simple_root(0)].into_iter().collect();
        assert_eq!(o.into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn degree_label_examples() {
        let a3 = RootSystem::simple(SimpleType::A, 3).unwrap();
        assert_eq!(a3.degree_labels(0).unwrap(), vec![qfrac(3, 4), qfrac(1, 2), qfrac(1, 4)]);
        let a2 = RootSystem::simple(SimpleType::A, 2).unwrap();
        assert_eq!(a2.degree_labels(0).unwrap(), vec![qfrac(2, 3), qfrac(1, 3)]);
        let ss = RootSystem::new(&[(SimpleType::A, 1), (SimpleType::A, 1)]).unwrap();
        assert_eq!(ss.degree_labels(0).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn degree_labels_invert_cartan_transpose() {
        for (t, n) in all_types_up_to(8) {
            let sys = RootSystem::simple(t, n).unwrap();
            for i in 0..n {
                let row = sys.degree_labels(i).unwrap();
                // row · Aᵀ: entry j = Σ_k row_k A[j][k]
                for j in 0..n {
                    let v: Q = (0..n).map(|k| &row[k] * q(sys.cartan()[j][k])).sum();
                    assert_eq!(v, if i == j { q(1) } else { q(0) }, "{t}{n} row {i}");
                }
            }
        }
    }

    #[test]
    fn basis_conversions_round_trip() {
        let sys = RootSystem::simple(SimpleType::F, 4).unwrap();
        let w = Weight::new(Basis::Fundamental, vec![q(1), qfrac(-2, 3), q(0), q(5)]);
        let r = sys.to_simple_root(&w).unwrap();
        assert_eq!(sys.to_fundamental(&r).unwrap(), w);
        let c = Weight::new(Basis::FundamentalCoweight, vec![q(1), q(0), qfrac(1, 2), q(-1)]);
        let cr = sys.to_coroot(&c).unwrap();
        assert_eq!(sys.to_fundamental_coweight(&cr).unwrap(), c);
    }

    #[test]
    fn invariant_form_normalization() {
        let g2 = RootSystem::simple(SimpleType::G, 2).unwrap();
        assert_eq!(g2.inner_product(&g2.simple_root(0), &g2.simple_root(0)).unwrap(), q(2));
        assert_eq!(g2.inner_product(&g2.simple_root(1), &g2.simple_root(1)).unwrap(), q(6));
        for r in g2.positive_roots() {
            assert!(r.norm == 2 || r.norm == 6);
        }
    }

    #[test]
    fn semisimple_is_block_diagonal() {
        let sys = RootSystem::new(&[(SimpleType::A, 2), (SimpleType::B, 2)]).unwrap();
        assert_eq!(sys.rank(), 4);
        assert_eq!(sys.positive_roots().len(), 3 + 4);
        assert_eq!(sys.cartan()[1][2], 0);
        assert_eq!(sys.type_string(), "A2xB2");
        assert_eq!(sys.dim_group(), 8 + 10);
    }
}
