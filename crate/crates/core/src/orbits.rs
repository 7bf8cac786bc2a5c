//! Orbits of affine `(G×L)`-embeddings of `G/Ru(P)`.
//!
//! The canonical embedding is handled on the Dynkin diagram: orbits match
//! the subsets `Π_Y ⊆ Π` none of whose components lies inside `Π_L`. A
//! general embedding is handled through the cone `Σ` spanned by the
//! `W_L`-orbits of its generators: orbits match the faces of `Σ` whose
//! relative interiors meet the dominant chamber. Both produce the same
//! [`OrbitPoset`] shape, which is also the orbit poset of the associated
//! monoid.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::conegeom::{self, Cone, Face};
use crate::dynkin::{self, NodeSet};
use crate::error::{Error, Result};
use crate::lattice;
use crate::linalg::{self, Q};
use crate::rootsys::{RootSystem, SimpleType, Weight};

/// What an orbit is indexed by.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitKey {
    /// The subset `Π_Y` of the canonical case.
    Subdiagram(NodeSet),
    /// A face `Γ` of `Σ` in the general case.
    Face(Face),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub key: OrbitKey,
    /// `Π_Y`; in the general case the simple roots orthogonal to `Γ`.
    pub pi_y: NodeSet,
    /// `∂Π_Y`.
    pub boundary: NodeSet,
    /// Generic modality `d_G(Y)`.
    pub d_g: usize,
    pub dim_stab: usize,
    pub dim_orbit: usize,
    pub dim_y: usize,
    pub stab_unipotent_dim: usize,
    pub stab_levi_nodes: NodeSet,
    pub stab_torus_dim: usize,
    /// Whether `⟨Γ⟩_Z` is saturated in the weight lattice, so that the
    /// reported torus dimension belongs to a connected torus. Always true in
    /// the canonical case.
    pub saturated: bool,
}

/// Orbits in canonical order (`dim_y` descending, then key) and the covering
/// relation of orbit closures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoset {
    pub orbits: Vec<OrbitDatum>,
    /// `(i, j)`: the closure of orbit `i` contains orbit `j`, with nothing in
    /// between.
    pub covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    fn build(mut orbits: Vec<OrbitDatum>, below: impl Fn(&OrbitDatum, &OrbitDatum) -> bool) -> Self {
        orbits.sort_by(|a, b| b.dim_y.cmp(&a.dim_y).then_with(|| a.key.cmp(&b.key)));
        let n = orbits.len();
        let rel: Vec<Vec<bool>> =
            (0..n).map(|i| (0..n).map(|j| i != j && below(&orbits[j], &orbits[i])).collect()).collect();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if rel[i][j] && !(0..n).any(|k| rel[i][k] && rel[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        Self { orbits, covers }
    }

    /// Whether the closure of orbit `i` contains orbit `j`.
    pub fn closure_contains(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        let mut stack = alloc::vec![i];
        let mut seen = alloc::vec![false; self.orbits.len()];
        while let Some(k) = stack.pop() {
            for &(a, b) in &self.covers {
                if a == k && !seen[b] {
                    if b == j {
                        return true;
                    }
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }

    pub fn modality(&self) -> usize {
        self.orbits.iter().map(|o| o.d_g).max().unwrap_or(0)
    }

    /// Orbits not contained in the closure of any other orbit.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&j| !self.covers.iter().any(|&(_, b)| b == j)).collect()
    }

    /// Orbits whose closures contain no other orbit.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&i| !self.covers.iter().any(|&(a, _)| a == i)).collect()
    }
}

/// No component of `pi_y` lies inside `levi`.
pub fn is_admissible(sys: &RootSystem, levi: NodeSet, pi_y: NodeSet) -> bool {
    dynkin::components(sys, pi_y).iter().all(|c| !c.is_subset(levi))
}

fn canonical_datum(sys: &RootSystem, levi: NodeSet, pi_y: NodeSet) -> OrbitDatum {
    let boundary = dynkin::boundary(sys, pi_y);
    let stab_nodes = pi_y.union(levi.difference(boundary));
    let unipotent = sys.positive_roots().len() - sys.count_positive_roots_in(stab_nodes);
    let dim_stab = unipotent + 2 * sys.count_positive_roots_in(pi_y) + pi_y.len();
    let d_g = sys.count_positive_roots_in(levi) - sys.count_positive_roots_in(levi.difference(boundary));
    let dim_orbit = sys.dim_group() - dim_stab;
    OrbitDatum {
        key: OrbitKey::Subdiagram(pi_y),
        pi_y,
        boundary,
        d_g,
        dim_stab,
        dim_orbit,
        dim_y: dim_orbit + d_g,
        stab_unipotent_dim: unipotent,
        stab_levi_nodes: pi_y,
        stab_torus_dim: pi_y.len(),
        saturated: true,
    }
}

/// Orbits of the canonical embedding `CE(G/Ru(P))`.
pub fn enumerate_canonical_orbits(sys: &RootSystem, levi: NodeSet) -> Result<OrbitPoset> {
    sys.check_nodes(levi)?;
    let orbits = sys
        .all_nodes()
        .subsets()
        .filter(|&s| is_admissible(sys, levi, s))
        .map(|s| canonical_datum(sys, levi, s))
        .collect();
    Ok(OrbitPoset::build(orbits, |small, big| big.pi_y.is_subset(small.pi_y)))
}

/// `mod_G CE(G/Ru(P))`, the maximum of `d_G` over all orbits.
pub fn modality_canonical(sys: &RootSystem, levi: NodeSet) -> Result<usize> {
    sys.check_nodes(levi)?;
    Ok(sys
        .all_nodes()
        .subsets()
        .filter(|&s| is_admissible(sys, levi, s))
        .map(|s| canonical_datum(sys, levi, s).d_g)
        .max()
        .unwrap_or(0))
}

/// The same maximum taken only over `Π_Y ⊇ Π ∖ Π_L`.
pub fn modality_canonical_restricted(sys: &RootSystem, levi: NodeSet) -> Result<usize> {
    sys.check_nodes(levi)?;
    let outside = sys.all_nodes().difference(levi);
    Ok(levi
        .subsets()
        .map(|s| s.union(outside))
        .filter(|&s| is_admissible(sys, levi, s))
        .map(|s| canonical_datum(sys, levi, s).d_g)
        .max()
        .unwrap_or(0))
}

/// Finitely many orbits iff every component lies inside `levi` or misses it.
pub fn has_finitely_many_orbits(sys: &RootSystem, levi: NodeSet) -> Result<bool> {
    sys.check_nodes(levi)?;
    Ok(sys.components().iter().all(|c| {
        let nodes = c.nodes();
        nodes.is_subset(levi) || nodes.is_disjoint(levi)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentRole {
    /// The component lies inside the Levi subset.
    InLevi,
    /// Type A with the Levi subset missing exactly one end node: the
    /// parabolic is a hyperplane or line stabilizer.
    HyperplaneStabilizer { missing: usize },
    /// Neither of the above.
    Obstruction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub kind: SimpleType,
    pub rank: usize,
    pub nodes: NodeSet,
    pub role: ComponentRole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub smooth: bool,
    pub components: Vec<ComponentReport>,
}

/// Smoothness of `CE(G/Ru(P))` with a per-component explanation.
pub fn is_smooth_canonical(sys: &RootSystem, levi: NodeSet) -> Result<SmoothnessReport> {
    sys.check_nodes(levi)?;
    let components: Vec<ComponentReport> = sys
        .components()
        .iter()
        .map(|c| {
            let nodes = c.nodes();
            let missing = nodes.difference(levi);
            let ends = NodeSet::from_nodes(&[c.offset, c.offset + c.rank - 1]);
            let role = if missing.is_empty() {
                ComponentRole::InLevi
            } else if c.kind == SimpleType::A && missing.len() == 1 && missing.is_subset(ends) {
                ComponentRole::HyperplaneStabilizer { missing: missing.first().unwrap_or(c.offset) }
            } else {
                ComponentRole::Obstruction
            };
            ComponentReport { kind: c.kind, rank: c.rank, nodes, role }
        })
        .collect();
    let smooth = components.iter().all(|c| c.role != ComponentRole::Obstruction);
    Ok(SmoothnessReport { smooth, components })
}

/// Result of the face-based classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralOrbits {
    pub poset: OrbitPoset,
    /// `Σ`, the cone spanned by the `W_L`-orbits of the generators.
    pub sigma: Cone,
    /// Whether the generators span the whole weight space. Orbits are still
    /// classified when they do not, but the embedding is then not of the
    /// form the classification is stated for.
    pub full_rank: bool,
}

fn checked_generators(sys: &RootSystem, generators: &[Weight]) -> Result<Vec<Vec<Q>>> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    generators
        .iter()
        .map(|g| {
            let w = sys.to_fundamental(g)?;
            if !w.is_integral() {
                return Err(Error::NonIntegral);
            }
            if !sys.is_dominant(&w)? {
                return Err(Error::NotDominant);
            }
            Ok(w.into_coords())
        })
        .collect()
}

fn integer_row(v: &[Q]) -> Vec<BigInt> {
    linalg::primitive(v).iter().map(|x| x.to_integer()).collect()
}

/// `⟨Γ⟩_Z = Σ_{λ_i ∈ Γ} Zλ_i + (ZΔ_L ∩ ⟨Γ⟩)` equals `⟨Γ⟩ ∩ X(T)`.
fn lattice_is_saturated(sys: &RootSystem, levi: NodeSet, generators: &[Vec<Q>], f: &Face) -> bool {
    let n = sys.rank();
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .filter(|g| linalg::in_span(&f.span_basis, g, n))
        .map(|g| g.iter().map(|x| x.to_integer()).collect())
        .collect();
    let levi_nodes = levi.to_vec();
    let roots: Vec<Vec<i64>> = levi_nodes.iter().map(|&i| sys.cartan()[i].clone()).collect();
    let eqs: Vec<Vec<BigInt>> = linalg::nullspace(&f.span_basis, n).iter().map(|e| integer_row(e)).collect();
    let m: Vec<Vec<BigInt>> = eqs
        .iter()
        .map(|e| roots.iter().map(|r| e.iter().zip(r).map(|(a, &b)| a * b).sum()).collect())
        .collect();
    for c in lattice::integer_kernel(&m, levi_nodes.len()) {
        let mut v = alloc::vec![BigInt::zero(); n];
        for (ci, r) in c.iter().zip(&roots) {
            for (x, &ri) in v.iter_mut().zip(r) {
                *x += ci * ri;
            }
        }
        rows.push(v);
    }
    let q_rows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect()).collect();
    linalg::rank(&q_rows, n) == f.dim && lattice::is_saturated(&rows)
}

/// Orbits of the affine embedding whose weight monoid is `L`-generated by
/// the given dominant weights.
pub fn enumerate_general_orbits(sys: &RootSystem, levi: NodeSet, generators: &[Weight]) -> Result<GeneralOrbits> {
    sys.check_nodes(levi)?;
    let gens = checked_generators(sys, generators)?;
    let n = sys.rank();
    let mut points = Vec::new();
    for g in &gens {
        for w in sys.weyl_orbit(&Weight::fundamental(g.clone()), levi)? {
            points.push(w.into_coords());
        }
    }
    let full_rank = linalg::rank(&gens, n) == n;
    let sigma = conegeom::cone_hull(&points)?;
    let pos = sys.positive_roots().len();
    let levi_pos = sys.count_positive_roots_in(levi);
    let mut orbits = Vec::new();
    for f in conegeom::faces(&sigma) {
        if !conegeom::face_meets_dominant_interior(sys, &sigma, &f)? {
            continue;
        }
        let spans = conegeom::face_spans(sys, levi, &f)?;
        let levi_in_norm = spans
            .norm_roots
            .iter()
            .filter(|&&i| sys.positive_roots()[i].support().is_subset(levi))
            .count();
        let unipotent = pos - spans.norm_roots.len();
        let torus = n - f.dim;
        let dim_stab = unipotent + 2 * spans.perp_roots.len() + torus;
        let d_g = levi_pos - levi_in_norm;
        let dim_orbit = sys.dim_group() - dim_stab;
        let saturated = lattice_is_saturated(sys, levi, &gens, &f);
        orbits.push(OrbitDatum {
            pi_y: spans.perp_simple,
            boundary: dynkin::boundary(sys, spans.perp_simple),
            d_g,
            dim_stab,
            dim_orbit,
            dim_y: dim_orbit + d_g,
            stab_unipotent_dim: unipotent,
            stab_levi_nodes: spans.perp_simple,
            stab_torus_dim: torus,
            saturated,
            key: OrbitKey::Face(f),
        });
    }
    let poset = OrbitPoset::build(orbits, |small, big| match (&small.key, &big.key) {
        (OrbitKey::Face(a), OrbitKey::Face(b)) => a.is_subface_of(b),
        _ => false,
    });
    Ok(GeneralOrbits { poset, sigma, full_rank })
}

/// Compares the canonical classification with the face classification for
/// the fundamental weights as generators. Returns the discrepancies found;
/// an empty list means the two posets agree orbit for orbit.
pub fn crosscheck(sys: &RootSystem, levi: NodeSet) -> Result<Vec<String>> {
    let canonical = enumerate_canonical_orbits(sys, levi)?;
    let fundamentals: Vec<Weight> = (0..sys.rank()).map(|i| sys.fundamental_weight(i)).collect();
    let general = enumerate_general_orbits(sys, levi, &fundamentals)?.poset;
    let mut issues = Vec::new();
    if canonical.orbits.len() != general.orbits.len() {
        issues.push(format!("{} canonical orbits, {} faces", canonical.orbits.len(), general.orbits.len()));
        return Ok(issues);
    }
    let mut matching = Vec::new();
    for (i, c) in canonical.orbits.iter().enumerate() {
        let Some(j) = general.orbits.iter().position(|g| g.pi_y == c.pi_y) else {
            issues.push(format!("no face for Π_Y = {}", c.pi_y));
            continue;
        };
        let g = &general.orbits[j];
        let fields = [
            ("d_G", c.d_g, g.d_g),
            ("dim_stab", c.dim_stab, g.dim_stab),
            ("dim_Y", c.dim_y, g.dim_y),
            ("unipotent", c.stab_unipotent_dim, g.stab_unipotent_dim),
            ("torus", c.stab_torus_dim, g.stab_torus_dim),
        ];
        for (name, a, b) in fields {
            if a != b {
                issues.push(format!("Π_Y = {}: {name} {a} vs {b}", c.pi_y));
            }
        }
        if !g.saturated {
            issues.push(format!("Π_Y = {}: lattice not saturated", c.pi_y));
        }
        matching.push((i, j));
    }
    if issues.is_empty() {
        let to_general = |i: usize| matching.iter().find(|m| m.0 == i).map(|m| m.1);
        let mut mapped: Vec<(usize, usize)> = canonical
            .covers
            .iter()
            .filter_map(|&(a, b)| Some((to_general(a)?, to_general(b)?)))
            .collect();
        mapped.sort_unstable();
        let mut theirs = general.covers.clone();
        theirs.sort_unstable();
        if mapped != theirs {
            issues.push(String::from("closure relations differ"));
        }
    }
    Ok(issues)
}
