//! Rational polyhedral cones by double description, their face lattices, and
//! the subspaces attached to a face.
//!
//! Vectors live in fundamental-weight coordinates; halfspaces are linear
//! functionals `h` with `h · x ≥ 0` under the plain dot product, so the
//! dominant chamber is `x_i ≥ 0`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::dynkin::NodeSet;
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::new(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        if i / 64 >= self.0.len() {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(other.0.iter().chain(core::iter::repeat(&0))).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().enumerate().all(|(k, a)| a & !other.0.get(k).copied().unwrap_or(0) == 0)
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, w) in self.0.iter().enumerate() {
            for b in 0..64 {
                if w >> b & 1 == 1 {
                    out.push(k * 64 + b);
                }
            }
        }
        out
    }
}

/// Double description of `{x : a·x ≥ 0 for a in ineqs, e·x = 0 for e in eqs}`.
/// Returns extreme rays modulo the lineality space and a lineality basis.
fn double_description(ineqs: &[Vec<Q>], eqs: &[Vec<Q>], n: usize) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let mut lin = linalg::nullspace(eqs, n);
    let mut rays: Vec<(Vec<Q>, Bits)> = Vec::new();
    for (k, a) in ineqs.iter().enumerate() {
        if let Some(p) = lin.iter().position(|l| !linalg::dot(a, l).is_zero()) {
            let mut l = lin.remove(p);
            let mut al = linalg::dot(a, &l);
            if al.is_negative() {
                l = linalg::neg(&l);
                al = -al;
            }
            for other in lin.iter_mut() {
                let c = linalg::dot(a, other) / &al;
                *other = linalg::sub(other, &linalg::scale(&l, &c));
            }
            for (r, z) in rays.iter_mut() {
                let c = linalg::dot(a, r) / &al;
                *r = linalg::primitive(&linalg::sub(r, &linalg::scale(&l, &c)));
                z.set(k);
            }
            rays.push((linalg::primitive(&l), Bits::full(k)));
            continue;
        }
        let vals: Vec<Q> = rays.iter().map(|(r, _)| linalg::dot(a, r)).collect();
        let mut next: Vec<(Vec<Q>, Bits)> = Vec::new();
        for ((r, z), v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                let mut z = z.clone();
                if v.is_zero() {
                    z.set(k);
                }
                next.push((r.clone(), z));
            }
        }
        for (i, vi) in vals.iter().enumerate().filter(|(_, v)| v.is_positive()) {
            for (j, vj) in vals.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                let common = rays[i].1.and(&rays[j].1);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(m, (_, z))| m == i || m == j || !common.is_subset(z));
                if adjacent {
                    let r = linalg::lincomb(vi, &rays[j].0, vj, &rays[i].0);
                    let mut z = common;
                    z.set(k);
                    next.push((linalg::primitive(&r), z));
                }
            }
        }
        rays = next;
    }
    (rays.into_iter().map(|(r, _)| r).collect(), lin)
}

fn normalized(vs: impl IntoIterator<Item = Vec<Q>>, away: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let set: BTreeSet<Vec<Q>> = vs
        .into_iter()
        .map(|v| linalg::primitive(&linalg::project_away(&v, away)))
        .filter(|v| !linalg::is_zero_vec(v))
        .collect();
    set.into_iter().collect()
}

/// A rational polyhedral cone with both descriptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Vec<Q>>,
    lineality: Vec<Vec<Q>>,
    halfspaces: Vec<Vec<Q>>,
    equations: Vec<Vec<Q>>,
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Extreme rays modulo the lineality space, orthogonal to it, primitive
    /// and sorted.
    pub fn rays(&self) -> &[Vec<Q>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Q>] {
        &self.lineality
    }

    /// Facet normals, primitive, sorted, lying in the span of the cone.
    pub fn halfspaces(&self) -> &[Vec<Q>] {
        &self.halfspaces
    }

    /// A basis of the functionals vanishing on the cone.
    pub fn equations(&self) -> &[Vec<Q>] {
        &self.equations
    }

    /// Rays together with both signs of each lineality vector; the zero
    /// vector alone for the zero cone.
    pub fn generators(&self) -> Vec<Vec<Q>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(linalg::neg(l));
        }
        if g.is_empty() {
            g.push(linalg::zeros(self.ambient));
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.halfspaces.iter().all(|h| !linalg::dot(h, v).is_negative())
            && self.equations.iter().all(|e| linalg::dot(e, v).is_zero())
    }
}

/// The cone spanned by `vectors`.
pub fn cone_hull(vectors: &[Vec<Q>]) -> Result<Cone> {
    let n = vectors.first().ok_or(Error::EmptyGenerators)?.len();
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    let (dual_rays, dual_lin) = double_description(vectors, &[], n);
    let equations = linalg::row_basis(&dual_lin, n);
    let halfspaces = normalized(dual_rays, &equations);
    let (rays, lin) = double_description(&halfspaces, &equations, n);
    let lineality = linalg::row_basis(&lin, n);
    let rays = normalized(rays, &lineality);
    Ok(Cone { ambient: n, rays, lineality, halfspaces, equations })
}

/// A face of a cone, described by the halfspaces tight on it and the rays it
/// contains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    pub dim: usize,
    /// Indices into [`Cone::halfspaces`].
    pub tight: Vec<usize>,
    /// Indices into [`Cone::rays`].
    pub rays: Vec<usize>,
    /// Basis of the linear span of the face.
    pub span_basis: Vec<Vec<Q>>,
}

impl Face {
    /// Face containment, read off the tight sets.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        other.tight.iter().all(|t| self.tight.contains(t))
    }
}

/// The full face lattice, ordered by `(dim, tight set)`. The smallest face is
/// the lineality space.
pub fn faces(c: &Cone) -> Vec<Face> {
    let h = c.halfspaces.len();
    let incidence: Vec<Bits> = c
        .rays
        .iter()
        .map(|r| {
            let mut b = Bits::new(h);
            for (k, hs) in c.halfspaces.iter().enumerate() {
                if linalg::dot(hs, r).is_zero() {
                    b.set(k);
                }
            }
            b
        })
        .collect();
    let closure = |tight: &Bits| -> Bits {
        let mut b = Bits::new(c.rays.len());
        for (i, inc) in incidence.iter().enumerate() {
            if tight.is_subset(inc) {
                b.set(i);
            }
        }
        b
    };
    let mut seen: BTreeMap<Bits, Bits> = BTreeMap::new();
    let bottom = Bits::full(h);
    seen.insert(Bits::new(c.rays.len()), bottom.clone());
    let mut queue = vec![bottom];
    while let Some(tight) = queue.pop() {
        for inc in &incidence {
            let t = tight.and(inc);
            let r = closure(&t);
            if let alloc::collections::btree_map::Entry::Vacant(slot) = seen.entry(r) {
                slot.insert(t.clone());
                queue.push(t);
            }
        }
    }
    let mut out: Vec<Face> = seen
        .into_iter()
        .map(|(rays, tight)| {
            let rays = rays.indices();
            let mut span: Vec<Vec<Q>> = rays.iter().map(|&i| c.rays[i].clone()).collect();
            span.extend(c.lineality.iter().cloned());
            let span_basis = linalg::row_basis(&span, c.ambient);
            Face { dim: span_basis.len(), tight: tight.indices(), rays, span_basis }
        })
        .collect();
    out.sort_by(|a, b| (a.dim, &a.tight).cmp(&(b.dim, &b.tight)));
    out
}

/// Whether the relative interior of `f` meets the dominant chamber, decided
/// as `dim(f ∩ C) = dim f`.
pub fn face_meets_dominant_interior(sys: &RootSystem, c: &Cone, f: &Face) -> Result<bool> {
    let n = sys.rank();
    if c.ambient != n {
        return Err(Error::DimensionMismatch { expected: n, found: c.ambient });
    }
    let mut eqs = c.equations.clone();
    eqs.extend(f.tight.iter().map(|&k| c.halfspaces[k].clone()));
    let mut ineqs: Vec<Vec<Q>> =
        (0..c.halfspaces.len()).filter(|k| !f.tight.contains(k)).map(|k| c.halfspaces[k].clone()).collect();
    ineqs.extend((0..n).map(|i| linalg::unit(n, i)));
    let (rays, lin) = double_description(&ineqs, &eqs, n);
    let mut span = rays;
    span.extend(lin);
    Ok(linalg::rank(&span, n) == f.dim)
}

/// Subspaces attached to a face `Γ`, all as row bases in fundamental
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSpans {
    /// `⟨Γ⟩`.
    pub span: Vec<Vec<Q>>,
    /// `|Γ| = span(Δ_L) ∩ ⟨Γ⟩`.
    pub abs: Vec<Vec<Q>>,
    /// `⟨Γ⟩^⊥` under the invariant form.
    pub perp: Vec<Vec<Q>>,
    /// `‖Γ‖ = |Γ| ⊕ ⟨Γ⟩^⊥`.
    pub norm: Vec<Vec<Q>>,
    /// Positive roots lying in `‖Γ‖`, as indices into
    /// [`RootSystem::positive_roots`].
    pub norm_roots: Vec<usize>,
    /// The base of `Δ ∩ ‖Γ‖`: the roots of `norm_roots` that are not a sum
    /// of two others.
    pub phi: Vec<usize>,
    /// Positive roots lying in `⟨Γ⟩^⊥`.
    pub perp_roots: Vec<usize>,
    /// Simple roots lying in `⟨Γ⟩^⊥`.
    pub perp_simple: NodeSet,
}

pub fn face_spans(sys: &RootSystem, levi: NodeSet, f: &Face) -> Result<FaceSpans> {
    sys.check_nodes(levi)?;
    let n = sys.rank();
    if f.span_basis.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: f.span_basis[0].len() });
    }
    let span = f.span_basis.clone();
    let levi_roots: Vec<Vec<Q>> = levi.iter().map(|i| sys.simple_root(i).into_coords()).collect();
    let abs = linalg::row_basis(&linalg::intersect(&levi_roots, &span, n), n);
    let gram = sys.fundamental_gram();
    let paired: Vec<Vec<Q>> = span.iter().map(|s| linalg::vec_mat(s, gram)).collect();
    let perp = linalg::nullspace(&paired, n);
    let mut both = abs.clone();
    both.extend(perp.iter().cloned());
    let norm = linalg::row_basis(&both, n);

    let roots = sys.positive_roots();
    let as_q: Vec<Vec<Q>> = roots.iter().map(|r| linalg::from_ints(&r.fundamental)).collect();
    let norm_roots: Vec<usize> = (0..roots.len()).filter(|&i| linalg::in_span(&norm, &as_q[i], n)).collect();
    let perp_roots: Vec<usize> = (0..roots.len()).filter(|&i| linalg::in_span(&perp, &as_q[i], n)).collect();
    let coeff_set: BTreeSet<&Vec<i64>> = norm_roots.iter().map(|&i| &roots[i].coeffs).collect();
    let phi = norm_roots
        .iter()
        .copied()
        .filter(|&i| {
            !norm_roots.iter().any(|&j| {
                let rest: Vec<i64> = roots[i].coeffs.iter().zip(&roots[j].coeffs).map(|(a, b)| a - b).collect();
                coeff_set.contains(&rest)
            })
        })
        .collect();
    let perp_simple = (0..n).filter(|&i| linalg::in_span(&perp, sys.simple_root(i).coords(), n)).collect();
    Ok(FaceSpans { span, abs, perp, norm, norm_roots, phi, perp_roots, perp_simple })
}
