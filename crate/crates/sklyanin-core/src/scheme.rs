//! Truncated point schemes as unions of product components in (ℙ²)^d.
//!
//! Every admissible length-d tuple lives in a product F₁ × ⋯ × F_d whose
//! factors are single points, special lines, or (in degree one only) all of
//! ℙ².  [`build_scheme`] produces the scheme of a quiver by enumerating its
//! paths of d vertices, turning each into a [`ComponentProduct`], and pruning
//! to the maximal components; the full quiver yields the degree-d truncated
//! scheme V_d, the limiting subquiver yields W_d.
//!
//! Two independent checks guard the construction.  [`verify_vanishing`]
//! certifies symbolically that all multilinearized relations vanish
//! identically on every component (each line factor contributes its own
//! formal parameter).  [`oracle_extend`] rebuilds the degree-(d+1) scheme
//! from the degree-d one using only the successor calculus — no quiver — and
//! must reproduce `build_scheme` exactly.

use std::fmt;

use num_traits::Zero;

use crate::geometry::{marked_points, param_point, Factor, ProjPoint};
use crate::quiver::{Quiver, QuiverPath};
use crate::relations::{QuadraticRelationSet, SuccessorLocus};
use crate::scalars::Eis;
use crate::{Error, Result};

/// A product of factors, one per ℙ² slot: an irreducible closed subvariety
/// of (ℙ²)^d of the restricted shape the successor calculus produces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentProduct {
    factors: Vec<Factor>,
}

impl ComponentProduct {
    /// Builds a product component; at least one factor is required.
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::DegreeTooSmall { got: 0, min: 1 });
        }
        Ok(ComponentProduct { factors })
    }

    /// The component carved out by a quiver path (one factor per vertex).
    pub fn from_path(path: &QuiverPath) -> Self {
        ComponentProduct {
            factors: path.vertices().iter().map(|v| v.to_factor()).collect(),
        }
    }

    /// The factors, one per ℙ² slot.
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Number of ℙ² slots.
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Dimension as a variety (the sum of the factor dimensions).
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(Factor::dimension).sum()
    }

    /// Set-theoretic containment `other ⊆ self`, decided factor-wise.
    /// Errors when the degrees differ.
    pub fn contains(&self, other: &ComponentProduct) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::LengthMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self
            .factors
            .iter()
            .zip(&other.factors)
            .all(|(mine, theirs)| mine.contains(theirs)))
    }

    /// Reduced intersection, again factor-wise; `None` when some pair of
    /// factors is disjoint.  Errors when the degrees differ.
    pub fn intersect(&self, other: &ComponentProduct) -> Result<Option<ComponentProduct>> {
        if self.degree() != other.degree() {
            return Err(Error::LengthMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let mut factors = Vec::with_capacity(self.degree());
        for (mine, theirs) in self.factors.iter().zip(&other.factors) {
            match mine.intersect(theirs) {
                Some(f) => factors.push(f),
                None => return Ok(None),
            }
        }
        Ok(Some(ComponentProduct { factors }))
    }

    /// A copy extended by one more factor.
    fn extended(&self, next: Factor) -> ComponentProduct {
        let mut factors = self.factors.clone();
        factors.push(next);
        ComponentProduct { factors }
    }

    /// A copy with the last factor replaced.
    fn with_last(&self, last: Factor) -> ComponentProduct {
        let mut factors = self.factors.clone();
        *factors.last_mut().expect("components are nonempty") = last;
        ComponentProduct { factors }
    }
}

/// Factors joined by `×`, e.g. `PA1×pa×pb×PB1`.
impl fmt::Display for ComponentProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for factor in &self.factors {
            if !first {
                write!(f, "\u{00d7}")?;
            }
            first = false;
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// A finite union of equal-degree product components, kept in canonical form:
/// sorted, duplicate-free, and an antichain under containment (no component
/// lies inside another).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeUnion {
    degree: usize,
    components: Vec<ComponentProduct>,
}

impl SchemeUnion {
    /// Canonicalizes a list of components: checks that all degrees agree,
    /// deduplicates, removes components contained in another, and sorts.
    pub fn from_components(components: Vec<ComponentProduct>) -> Result<Self> {
        let degree = components
            .first()
            .ok_or_else(|| Error::InvalidConfig("a scheme union needs at least one component".into()))?
            .degree();
        for c in &components {
            if c.degree() != degree {
                return Err(Error::LengthMismatch {
                    left: degree,
                    right: c.degree(),
                });
            }
        }
        let mut sorted = components;
        sorted.sort();
        sorted.dedup();
        let mut maximal = Vec::with_capacity(sorted.len());
        for (i, c) in sorted.iter().enumerate() {
            let absorbed = sorted
                .iter()
                .enumerate()
                .any(|(j, d)| j != i && d.contains(c).expect("equal degrees"));
            if !absorbed {
                maximal.push(c.clone());
            }
        }
        Ok(SchemeUnion {
            degree,
            components: maximal,
        })
    }

    /// The components in canonical order.
    pub fn components(&self) -> &[ComponentProduct] {
        &self.components
    }

    /// The common number of ℙ² slots.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Whether some single component contains the given one (which, for
    /// irreducible products, is equivalent to containment in the union).
    pub fn contains_component(&self, c: &ComponentProduct) -> Result<bool> {
        for mine in &self.components {
            if mine.contains(c)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// The degree-d scheme of a quiver: all of ℙ² in degree one, otherwise the
/// maximal components among the products carved out by paths of d vertices.
pub fn build_scheme(quiver: &Quiver, d: usize) -> Result<SchemeUnion> {
    if d == 0 {
        return Err(Error::DegreeTooSmall { got: 0, min: 1 });
    }
    if d == 1 {
        return SchemeUnion::from_components(vec![ComponentProduct::new(vec![
            Factor::WholePlane,
        ])?]);
    }
    let components = quiver
        .enumerate_paths(d)?
        .iter()
        .map(ComponentProduct::from_path)
        .collect();
    SchemeUnion::from_components(components)
}

/// The degree-d truncated point scheme V_d (full successor quiver).
pub fn truncated_scheme(d: usize) -> Result<SchemeUnion> {
    build_scheme(&Quiver::q(), d)
}

/// The degree-d limiting scheme W_d (line↔point subquiver).
pub fn limit_scheme(d: usize) -> Result<SchemeUnion> {
    build_scheme(&Quiver::q_prime(), d)
}

/// A slot's coordinates as constant + parameter·direction; points have zero
/// direction, lines use their marked-point parametrization.
fn slot_coords(factor: &Factor) -> Result<([Eis; 3], [Eis; 3])> {
    match factor {
        Factor::Point(p) => Ok((p.coords().clone(), Default::default())),
        Factor::Line(l) => {
            let g = param_point(l);
            Ok((g.q0().coords().clone(), g.q1().coords().clone()))
        }
        Factor::WholePlane => Err(Error::UnexpectedWholePlane),
    }
}

/// Symbolic check that every multilinearized relation vanishes identically
/// on a component.
///
/// Each slot contributes its own formal parameter; a bilinear form in slots
/// i, i+1 expands into four coefficients (1, t_i, t_{i+1}, t_i·t_{i+1}), all
/// of which must be exactly zero.  Degree-one components carry no relations
/// and pass vacuously.
pub fn component_satisfies_relations(
    rels: &QuadraticRelationSet,
    component: &ComponentProduct,
) -> Result<bool> {
    let d = component.degree();
    if d < 2 {
        return Ok(true);
    }
    let slots = component
        .factors()
        .iter()
        .map(slot_coords)
        .collect::<Result<Vec<_>>>()?;
    for form in rels.multilinearize(d)? {
        let (p0, p1) = &slots[form.index() - 1];
        let (q0, q1) = &slots[form.index()];
        let c = form.coeffs();
        for (left, right) in [(p0, q0), (p1, q0), (p0, q1), (p1, q1)] {
            let mut acc = Eis::zero();
            for u in 0..3 {
                for v in 0..3 {
                    if !c[u][v].is_zero() {
                        acc = acc + c[u][v].clone() * &left[u] * &right[v];
                    }
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Certifies that all multilinearized relations vanish identically on every
/// component of the union.
pub fn verify_vanishing(rels: &QuadraticRelationSet, scheme: &SchemeUnion) -> Result<bool> {
    for c in scheme.components() {
        if !component_satisfies_relations(rels, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Appends the successor locus of a concrete point to a component (the
/// point is the component's last factor); empty loci contribute nothing.
fn push_point_successor(
    rels: &QuadraticRelationSet,
    base: &ComponentProduct,
    p: &ProjPoint,
    out: &mut Vec<ComponentProduct>,
) -> Result<()> {
    let next = match rels.successor_locus(p) {
        SuccessorLocus::Empty => return Ok(()),
        SuccessorLocus::SinglePoint(q) => Factor::Point(q),
        SuccessorLocus::FullLine(l) => Factor::Line(l),
        SuccessorLocus::AllOfP2 => return Err(Error::UnexpectedWholePlane),
    };
    out.push(base.extended(next));
    Ok(())
}

/// Rebuilds the degree-(d+1) scheme from the degree-d one using only the
/// successor calculus — no quiver knowledge.
///
/// Each component is extended behind its last factor:
///
/// * a point extends by its successor locus;
/// * a line extends by the (constant) successor of its generic point, and in
///   addition each of its two marked points replaces the line and extends by
///   its own successor locus (the loci jump there, creating new components);
/// * the whole plane (degree one) splits into the three lines cut out by the
///   determinant cubic, each handled as above.
///
/// The result is canonicalized by [`SchemeUnion::from_components`]; agreement
/// with [`build_scheme`] at every degree is the strongest internal
/// consistency check the toolkit performs.
pub fn oracle_extend(rels: &QuadraticRelationSet, scheme: &SchemeUnion) -> Result<SchemeUnion> {
    let mut out: Vec<ComponentProduct> = Vec::new();
    for c in scheme.components() {
        match c.factors().last().expect("components are nonempty") {
            Factor::Point(p) => {
                push_point_successor(rels, c, p, &mut out)?;
            }
            Factor::Line(l) => extend_past_line(rels, c, l, &mut out)?,
            Factor::WholePlane => {
                let (_, lines) = rels.cubic_factor_check().ok_or_else(|| {
                    Error::InvalidRelations(
                        "determinant cubic does not factor into three lines".into(),
                    )
                })?;
                for l in &lines {
                    let base = ComponentProduct::new(vec![Factor::Line(l.clone())])?;
                    extend_past_line(rels, &base, l, &mut out)?;
                }
            }
        }
    }
    SchemeUnion::from_components(out)
}

/// Extends a component whose last factor is the line `l`: the generic point
/// contributes its constant successor behind the full line, while each marked
/// point replaces the line and contributes its own (jumped) successor locus.
fn extend_past_line(
    rels: &QuadraticRelationSet,
    base: &ComponentProduct,
    l: &crate::geometry::LinearForm,
    out: &mut Vec<ComponentProduct>,
) -> Result<()> {
    match rels.generic_successor(l)? {
        SuccessorLocus::Empty => {}
        SuccessorLocus::SinglePoint(q) => out.push(base.extended(Factor::Point(q))),
        SuccessorLocus::FullLine(m) => out.push(base.extended(Factor::Line(m))),
        SuccessorLocus::AllOfP2 => return Err(Error::UnexpectedWholePlane),
    }
    let (m0, m1) = marked_points(l);
    for pm in [m0, m1] {
        let pinned = base.with_last(Factor::Point(pm.clone()));
        push_point_successor(rels, &pinned, &pm, out)?;
    }
    Ok(())
}
