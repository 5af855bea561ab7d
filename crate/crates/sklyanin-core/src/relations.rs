//! The quadratic relations of S(1,1,1) and the successor calculus they induce
//! on ℙ².
//!
//! The algebra is k⟨x,y,z⟩ modulo three quadratic relations; in the default
//! presentation
//!
//! ```text
//!   f = yz + zy + x²,   g = zx + xz + y²,   h = xy + yx + z².
//! ```
//!
//! Freezing the first tensor factor of each relation at a point p ∈ ℙ² turns
//! (f, g, h) into three linear forms in the next coordinate — the 3×3
//! *successor matrix* M(p).  Its kernel is the locus of admissible next
//! points, and the rank dichotomy classifies it completely: rank 3 ↔ empty,
//! rank 2 ↔ a single point, rank 1 ↔ a full line, rank 0 ↔ all of ℙ².
//!
//! det M(p) = −(x³ + y³ + z³ − 3xyz) cuts out the union of the three special
//! lines, which factors as (x+y+z)(x+ζ²y+ζz)(x+ζy+ζ²z); away from it there is
//! no successor at all.  [`QuadraticRelationSet::validate`] checks this
//! factorization together with the successor loci of the special points and
//! of the generic (symbolic) point of each punctured line, and must pass
//! before any scheme construction downstream is trusted.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::geometry::{line_a, line_b, line_c, pa, pb, pc, param_point, LinearForm, ProjPoint};
use crate::linalg::{det3, kernel_direction, rank3, Matrix3};
use crate::scalars::{Eis, ParamPoly};
use crate::{Error, Result};

/// Index of a generator (x = 0, y = 1, z = 2); purely notational.
pub const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

/// Which of the three relations a form came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelLabel {
    F,
    G,
    H,
}

impl RelLabel {
    pub const ALL: [RelLabel; 3] = [RelLabel::F, RelLabel::G, RelLabel::H];

    pub fn index(self) -> usize {
        match self {
            RelLabel::F => 0,
            RelLabel::G => 1,
            RelLabel::H => 2,
        }
    }
}

impl fmt::Display for RelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelLabel::F => write!(f, "f"),
            RelLabel::G => write!(f, "g"),
            RelLabel::H => write!(f, "h"),
        }
    }
}

/// Three quadratic relations, each stored as the 3×3 coefficient matrix of a
/// bilinear form: relation r = Σ_{u,v} C^r[u][v] · u⊗v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRelationSet {
    coeffs: [Matrix3<Eis>; 3],
}

/// Shorthand for a 0/1 coefficient matrix.
fn unit_matrix(entries: [(usize, usize); 3]) -> Matrix3<Eis> {
    let mut m: Matrix3<Eis> = Default::default();
    for (u, v) in entries {
        m[u][v] = Eis::one();
    }
    m
}

impl QuadraticRelationSet {
    /// The defining relations of S(1,1,1):
    /// f = yz + zy + x², g = zx + xz + y², h = xy + yx + z².
    pub fn standard() -> Self {
        QuadraticRelationSet {
            coeffs: [
                unit_matrix([(0, 0), (1, 2), (2, 1)]), // f
                unit_matrix([(1, 1), (2, 0), (0, 2)]), // g
                unit_matrix([(2, 2), (0, 1), (1, 0)]), // h
            ],
        }
    }

    /// Builds a custom relation set from explicit coefficient matrices
    /// (mostly useful for demonstrating validation failures).
    pub fn from_coeffs(coeffs: [Matrix3<Eis>; 3]) -> Self {
        QuadraticRelationSet { coeffs }
    }

    /// The coefficient matrix of one relation.
    pub fn relation(&self, label: RelLabel) -> &Matrix3<Eis> {
        &self.coeffs[label.index()]
    }

    /// Scales every relation by a common nonzero constant (an equivalent
    /// presentation of the same ideal).
    pub fn scaled(&self, by: &Eis) -> Self {
        let mut coeffs = self.coeffs.clone();
        for m in coeffs.iter_mut() {
            for row in m.iter_mut() {
                for e in row.iter_mut() {
                    *e = e.clone() * by.clone();
                }
            }
        }
        QuadraticRelationSet { coeffs }
    }

    /// The bilinear value r(p, q) = Σ C^r[u][v] p_u q_v.
    pub fn bilinear_value(&self, label: RelLabel, p: &ProjPoint, q: &ProjPoint) -> Eis {
        let c = self.relation(label);
        let mut acc = Eis::zero();
        for u in 0..3 {
            for v in 0..3 {
                if !c[u][v].is_zero() {
                    acc = acc + c[u][v].clone() * &p.coords()[u] * &q.coords()[v];
                }
            }
        }
        acc
    }

    /// The successor matrix M(p): row r, column v holds Σ_u C^r[u][v] p_u,
    /// the coefficient of the next coordinate v in the frozen relation r.
    pub fn successor_matrix(&self, p: &ProjPoint) -> Matrix3<Eis> {
        let mut m: Matrix3<Eis> = Default::default();
        for (r, c) in self.coeffs.iter().enumerate() {
            for (v, slot) in m[r].iter_mut().enumerate() {
                let mut acc = Eis::zero();
                for u in 0..3 {
                    if !c[u][v].is_zero() {
                        acc = acc + c[u][v].clone() * &p.coords()[u];
                    }
                }
                *slot = acc;
            }
        }
        m
    }

    /// The successor matrix at the generic point of a parametrized line:
    /// entries are degree-≤1 polynomials in the parameter t.
    pub fn successor_matrix_generic(&self, coords: &[ParamPoly; 3]) -> Matrix3<ParamPoly> {
        let mut m: Matrix3<ParamPoly> =
            std::array::from_fn(|_| std::array::from_fn(|_| ParamPoly::zero()));
        for (r, c) in self.coeffs.iter().enumerate() {
            for (v, slot) in m[r].iter_mut().enumerate() {
                let mut acc = ParamPoly::zero();
                for u in 0..3 {
                    if !c[u][v].is_zero() {
                        acc = acc + coords[u].scale(&c[u][v]);
                    }
                }
                *slot = acc;
            }
        }
        m
    }

    /// The locus of admissible successors of a concrete point, classified by
    /// the rank of M(p).
    pub fn successor_locus(&self, p: &ProjPoint) -> SuccessorLocus {
        let m = self.successor_matrix(p);
        match rank3(&m) {
            3 => SuccessorLocus::Empty,
            2 => {
                let v = kernel_direction(&m).expect("rank-2 matrix has a kernel direction");
                SuccessorLocus::SinglePoint(ProjPoint::new(v).expect("kernel direction is nonzero"))
            }
            1 => {
                let row = m
                    .iter()
                    .find(|row| row.iter().any(|e| !e.is_zero()))
                    .expect("rank-1 matrix has a nonzero row");
                SuccessorLocus::FullLine(
                    LinearForm::new(row.clone()).expect("nonzero row defines a line"),
                )
            }
            _ => SuccessorLocus::AllOfP2,
        }
    }

    /// The successor locus of the *generic* point of a line, computed
    /// symbolically over ℚ(ζ₃)(t) and required to be independent of t.
    ///
    /// Errors when the locus varies along the line (which standard-style
    /// relation sets never exhibit on the three special lines).
    pub fn generic_successor(&self, l: &LinearForm) -> Result<SuccessorLocus> {
        let m = self.successor_matrix_generic(&param_point(l).generic_coords());
        match rank3(&m) {
            3 => Ok(SuccessorLocus::Empty),
            2 => {
                let v = kernel_direction(&m).expect("rank-2 matrix has a kernel direction");
                let c = constant_direction(&v).ok_or_else(|| {
                    Error::InvalidRelations(format!(
                        "generic successor varies along the line {l}"
                    ))
                })?;
                Ok(SuccessorLocus::SinglePoint(
                    ProjPoint::new(c).expect("kernel direction is nonzero"),
                ))
            }
            1 => {
                let row = m
                    .iter()
                    .find(|row| row.iter().any(|e| !e.is_zero()))
                    .expect("rank-1 matrix has a nonzero row");
                let c = constant_direction(row).ok_or_else(|| {
                    Error::InvalidRelations(format!(
                        "generic successor line varies along the line {l}"
                    ))
                })?;
                Ok(SuccessorLocus::FullLine(
                    LinearForm::new(c).expect("nonzero row defines a line"),
                ))
            }
            _ => Ok(SuccessorLocus::AllOfP2),
        }
    }

    /// det M at the symbolic point (x, y, z): a homogeneous cubic.
    pub fn det_cubic(&self) -> Poly3 {
        let vars = [Poly3::var(0), Poly3::var(1), Poly3::var(2)];
        let mut m: Matrix3<Poly3> =
            std::array::from_fn(|_| std::array::from_fn(|_| Poly3::zero()));
        for (r, c) in self.coeffs.iter().enumerate() {
            for (v, slot) in m[r].iter_mut().enumerate() {
                let mut acc = Poly3::zero();
                for u in 0..3 {
                    if !c[u][v].is_zero() {
                        acc = acc + vars[u].scale(&c[u][v]);
                    }
                }
                *slot = acc;
            }
        }
        det3(&m)
    }

    /// Checks that det M factors as a nonzero constant times the product of
    /// the three special lines, returning the constant and the lines.
    pub fn cubic_factor_check(&self) -> Option<(Eis, [LinearForm; 3])> {
        let lines = [line_a(), line_b(), line_c()];
        let mut product = Poly3::one();
        for l in &lines {
            product = product * Poly3::from_linear(l);
        }
        let det = self.det_cubic();
        let (_, lead_det) = det.leading_term()?;
        let (_, lead_prod) = product.leading_term()?;
        let scale = lead_det.checked_div(lead_prod).ok()?;
        if scale.is_zero() {
            return None;
        }
        (det - product.scale(&scale)).is_zero().then_some((scale, lines))
    }

    /// The multilinearized relations on (ℙ²)^d: forms r_i for r ∈ {f, g, h}
    /// and 1 ≤ i ≤ d−1, where r_i applies relation r to coordinates i, i+1.
    pub fn multilinearize(&self, d: usize) -> Result<Vec<MultilinearForm>> {
        if d < 2 {
            return Err(Error::DegreeTooSmall { got: d, min: 2 });
        }
        let mut out = Vec::with_capacity(3 * (d - 1));
        for i in 1..d {
            for label in RelLabel::ALL {
                out.push(MultilinearForm {
                    index: i,
                    label,
                    coeffs: self.relation(label).clone(),
                });
            }
        }
        Ok(out)
    }

    /// Structural validation of the relation set; all downstream scheme
    /// computations assume this gate has passed.
    ///
    /// Verified facts:
    /// 1. det M(x,y,z) equals a nonzero constant times the product of the
    ///    three special lines;
    /// 2. the successor locus of each special point is the full like-named
    ///    line (p_a ↦ ℙ¹_A, p_b ↦ ℙ¹_B, p_c ↦ ℙ¹_C);
    /// 3. the successor of the generic point of each punctured line is the
    ///    single like-named point, t-independently.
    pub fn validate(&self) -> Result<()> {
        let mut failures: Vec<String> = Vec::new();
        if self.cubic_factor_check().is_none() {
            failures.push(
                "determinant cubic is not a scalar multiple of the three special lines".into(),
            );
        }
        let expected_lines = [(pa(), line_a()), (pb(), line_b()), (pc(), line_c())];
        for (p, l) in &expected_lines {
            match self.successor_locus(p) {
                SuccessorLocus::FullLine(found) if found == *l => {}
                other => failures.push(format!(
                    "successor locus of {p} is {other:?}, expected the full line {l}"
                )),
            }
        }
        let expected_points = [(line_a(), pa()), (line_b(), pb()), (line_c(), pc())];
        for (l, p) in &expected_points {
            match self.generic_successor(l) {
                Ok(SuccessorLocus::SinglePoint(found)) if found == *p => {}
                Ok(other) => failures.push(format!(
                    "generic successor on {l} is {other:?}, expected the single point {p}"
                )),
                Err(e) => failures.push(e.to_string()),
            }
        }
        if failures.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidRelations(failures.join("; ")))
        }
    }
}

/// Locus of admissible next points, classified by the successor matrix rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuccessorLocus {
    /// Rank 3: no successor.
    Empty,
    /// Rank 2: exactly one successor.
    SinglePoint(ProjPoint),
    /// Rank 1: a full line of successors.
    FullLine(LinearForm),
    /// Rank 0: every point of ℙ² (never happens for p ≠ 0 with the standard
    /// relations, but the dichotomy is closed under it).
    AllOfP2,
}

/// If the polynomial vector is a polynomial multiple of a constant direction,
/// returns that direction; otherwise `None`.
///
/// The test is exact: v is projectively constant iff v_i·c_j = v_j·c_i as
/// polynomial identities, where c = v(t₀) for any parameter value t₀ with
/// v(t₀) ≠ 0.
fn constant_direction(v: &[ParamPoly; 3]) -> Option<[Eis; 3]> {
    let max_deg = v.iter().filter_map(ParamPoly::degree).max()?;
    let mut witness: Option<[Eis; 3]> = None;
    for t in 0..=(max_deg as i64 + 1) {
        let at = Eis::from_int(t);
        let c = [v[0].eval(&at), v[1].eval(&at), v[2].eval(&at)];
        if c.iter().any(|x| !x.is_zero()) {
            witness = Some(c);
            break;
        }
    }
    let c = witness?;
    for i in 0..3 {
        for j in (i + 1)..3 {
            if !(v[i].scale(&c[j]) - v[j].scale(&c[i])).is_zero() {
                return None;
            }
        }
    }
    Some(c)
}

/// One multilinearized relation r_i on (ℙ²)^d: bilinear in coordinates i and
/// i+1 (1-based), constant in every other slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearForm {
    index: usize,
    label: RelLabel,
    coeffs: Matrix3<Eis>,
}

impl MultilinearForm {
    /// The 1-based left slot i; the form couples coordinates i and i+1.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Which relation the form multilinearizes.
    pub fn label(&self) -> RelLabel {
        self.label
    }

    /// The 3×3 bilinear coefficient matrix (9 ambient coefficient slots).
    pub fn coeffs(&self) -> &Matrix3<Eis> {
        &self.coeffs
    }

    /// Number of ambient coefficient slots of the bilinear form.
    pub fn ambient_coefficient_count(&self) -> usize {
        9
    }

    /// Exact evaluation at a tuple of points (one per ℙ² factor).
    pub fn eval_at_points(&self, tuple: &[ProjPoint]) -> Eis {
        let p = &tuple[self.index - 1];
        let q = &tuple[self.index];
        let mut acc = Eis::zero();
        for u in 0..3 {
            for v in 0..3 {
                if !self.coeffs[u][v].is_zero() {
                    acc = acc + self.coeffs[u][v].clone() * &p.coords()[u] * &q.coords()[v];
                }
            }
        }
        acc
    }
}

impl fmt::Display for MultilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.label, self.index)
    }
}

/// A sparse polynomial in the commuting variables x, y, z over ℚ(ζ₃), keyed
/// by exponent triples.  Just enough structure for the determinant cubic and
/// its factorization check.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly3 {
    terms: BTreeMap<[u8; 3], Eis>,
}

impl Poly3 {
    /// The variable with the given index (0 ↦ x, 1 ↦ y, 2 ↦ z).
    pub fn var(i: usize) -> Self {
        let mut e = [0u8; 3];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Eis::one());
        Poly3 { terms }
    }

    /// Embeds a linear form αx + βy + γz.
    pub fn from_linear(l: &LinearForm) -> Self {
        let mut p = Poly3::zero();
        for (i, c) in l.coeffs().iter().enumerate() {
            p = p + Poly3::var(i).scale(c);
        }
        p
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, by: &Eis) -> Self {
        if by.is_zero() {
            return Poly3::zero();
        }
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * by))
                .collect(),
        }
    }

    /// The highest term in the deterministic monomial order (lexicographic on
    /// exponent triples), if any.
    pub fn leading_term(&self) -> Option<([u8; 3], &Eis)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Exact evaluation at a point's coordinates.
    pub fn eval(&self, p: &ProjPoint) -> Eis {
        let mut acc = Eis::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                term = term * p.coords()[i].pow(exp as u32);
            }
            acc = acc + term;
        }
        acc
    }

    fn insert_term(&mut self, e: [u8; 3], c: Eis) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }
}

impl Zero for Poly3 {
    fn zero() -> Self {
        Poly3::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly3 {
    fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert([0, 0, 0], Eis::one());
        Poly3 { terms }
    }
}

impl std::ops::Add for Poly3 {
    type Output = Poly3;
    fn add(self, rhs: Poly3) -> Poly3 {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.insert_term(e, c);
        }
        out
    }
}

impl std::ops::Sub for Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: Poly3) -> Poly3 {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.insert_term(e, -c);
        }
        out
    }
}

impl std::ops::Mul for Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Terms print from the lexicographically largest exponent triple downwards,
/// e.g. `(-1+0*z)*x^3 + ...`.
impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => write!(f, "*{}", VAR_NAMES[i])?,
                    _ => write!(f, "*{}^{}", VAR_NAMES[i], exp)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn rels() -> QuadraticRelationSet {
        QuadraticRelationSet::standard()
    }

    /// −(x³ + y³ + z³ − 3xyz), the expected determinant cubic.
    fn expected_cubic() -> Poly3 {
        let x = Poly3::var(0);
        let y = Poly3::var(1);
        let z = Poly3::var(2);
        let cubes = x.clone() * x.clone() * x.clone()
            + y.clone() * y.clone() * y.clone()
            + z.clone() * z.clone() * z.clone();
        let mixed = (x * y * z).scale(&Eis::from_int(3));
        mixed - cubes
    }

    #[test]
    fn successor_matrix_at_pa_is_all_ones() {
        let m = rels().successor_matrix(&pa());
        for row in &m {
            for e in row {
                assert_eq!(*e, Eis::one());
            }
        }
    }

    #[test]
    fn successor_matrix_at_a_punctured_line_point() {
        // p = [0 : 1 : −1] lies on ℙ¹_A off the marked points.
        let p = ProjPoint::from_ints(0, 1, -1).unwrap();
        let m = rels().successor_matrix(&p);
        let want = [[0, -1, 1], [-1, 1, 0], [1, 0, -1]].map(|r| r.map(Eis::from_int));
        assert_eq!(m, want);
    }

    #[test]
    fn determinant_cubic_is_minus_the_fermat_like_cubic() {
        assert_eq!(rels().det_cubic(), expected_cubic());
    }

    #[test]
    fn determinant_at_a_generic_point() {
        // det M([1:2:3]) = 3·6 − (1 + 8 + 27) = −18.
        let p = ProjPoint::from_ints(1, 2, 3).unwrap();
        assert_eq!(rels().det_cubic().eval(&p), Eis::from_int(-18));
        assert_eq!(rels().successor_locus(&p), SuccessorLocus::Empty);
    }

    #[test]
    fn cubic_factors_into_the_three_special_lines() {
        let (scale, lines) = rels().cubic_factor_check().unwrap();
        assert_eq!(scale, Eis::from_int(-1));
        assert_eq!(lines, [line_a(), line_b(), line_c()]);
    }

    #[test]
    fn special_points_have_full_line_successors() {
        assert_eq!(
            rels().successor_locus(&pa()),
            SuccessorLocus::FullLine(line_a())
        );
        assert_eq!(
            rels().successor_locus(&pb()),
            SuccessorLocus::FullLine(line_b())
        );
        assert_eq!(
            rels().successor_locus(&pc()),
            SuccessorLocus::FullLine(line_c())
        );
    }

    #[test]
    fn punctured_line_points_have_single_successors() {
        let p = ProjPoint::from_ints(0, 1, -1).unwrap();
        assert_eq!(rels().successor_locus(&p), SuccessorLocus::SinglePoint(pa()));
        // A few more sample points on ℙ¹_A via the parametrization.
        let g = param_point(&line_a());
        for t in [rat(1, 1), rat(2, 1), rat(-1, 2), rat(5, 3)] {
            let p = g.at(&Eis::from_rational(t));
            assert_eq!(
                rels().successor_locus(&p),
                SuccessorLocus::SinglePoint(pa()),
                "successor of {p}"
            );
        }
    }

    #[test]
    fn generic_successors_are_constant_along_each_line() {
        let r = rels();
        assert_eq!(
            r.generic_successor(&line_a()).unwrap(),
            SuccessorLocus::SinglePoint(pa())
        );
        assert_eq!(
            r.generic_successor(&line_b()).unwrap(),
            SuccessorLocus::SinglePoint(pb())
        );
        assert_eq!(
            r.generic_successor(&line_c()).unwrap(),
            SuccessorLocus::SinglePoint(pc())
        );
    }

    #[test]
    fn determinant_vanishes_exactly_on_the_line_union() {
        let r = rels();
        let det = r.det_cubic();
        // 20 sample points on each special line: determinant zero.
        for l in [line_a(), line_b(), line_c()] {
            let g = param_point(&l);
            for k in 0..20 {
                let t = Eis::from_rational(rat(k - 10, 1 + (k % 3)));
                let p = g.at(&t);
                assert!(det.eval(&p).is_zero(), "det at {p} on {l}");
            }
        }
        // 20 integer points off the union: determinant nonzero.
        let mut off = 0;
        'outer: for a in 2..8i64 {
            for b in 2..8i64 {
                let p = ProjPoint::from_ints(1, a, b).unwrap();
                if [line_a(), line_b(), line_c()]
                    .iter()
                    .any(|l| l.incident(&p))
                {
                    continue;
                }
                assert!(!det.eval(&p).is_zero(), "det at {p} must be nonzero");
                assert_eq!(r.successor_locus(&p), SuccessorLocus::Empty);
                off += 1;
                if off == 20 {
                    break 'outer;
                }
            }
        }
        assert_eq!(off, 20);
    }

    /// Kernel membership is equivalent to the vanishing of all three frozen
    /// relations: successors satisfy f = g = h = 0, non-successors fail one.
    #[test]
    fn kernel_membership_matches_relation_vanishing() {
        let r = rels();
        let vanish_all = |p: &ProjPoint, q: &ProjPoint| {
            RelLabel::ALL
                .iter()
                .all(|&l| r.bilinear_value(l, p, q).is_zero())
        };
        // Single-point case: an unmarked point of ℙ¹_A.
        let p = ProjPoint::from_ints(0, 1, -1).unwrap();
        assert!(vanish_all(&p, &pa()));
        assert!(!vanish_all(&p, &pb()));
        assert!(!vanish_all(&p, &ProjPoint::from_ints(1, 2, 3).unwrap()));
        // Full-line case: every sampled point of ℙ¹_A succeeds p_a.
        let g = param_point(&line_a());
        for k in -5..=5 {
            let q = g.at(&Eis::from_int(k));
            assert!(vanish_all(&pa(), &q));
        }
        assert!(vanish_all(&pa(), &pb()));
        assert!(vanish_all(&pa(), &pc()));
        assert!(!vanish_all(&pa(), &pa())); // p_a ∉ ℙ¹_A
        // Empty case: nothing succeeds an off-union point.
        let off = ProjPoint::from_ints(1, 2, 3).unwrap();
        for q in [pa(), pb(), pc(), ProjPoint::from_ints(0, 1, -1).unwrap()] {
            assert!(!vanish_all(&off, &q));
        }
    }

    #[test]
    fn successor_matrix_rank_is_at_least_one() {
        // The rows of M(p) are linear in p and never all vanish at a point.
        let r = rels();
        let samples = [
            pa(),
            pb(),
            pc(),
            ProjPoint::from_ints(0, 1, -1).unwrap(),
            ProjPoint::from_ints(1, 2, 3).unwrap(),
            ProjPoint::from_ints(1, 0, 0).unwrap(),
            ProjPoint::from_ints(0, 0, 1).unwrap(),
        ];
        for p in samples {
            assert!(rank3(&r.successor_matrix(&p)) >= 1, "rank at {p}");
        }
    }

    #[test]
    fn multilinearize_produces_three_forms_per_adjacent_pair() {
        let forms = rels().multilinearize(2).unwrap();
        assert_eq!(forms.len(), 3);
        let forms4 = rels().multilinearize(4).unwrap();
        assert_eq!(forms4.len(), 9);
        for f in &forms4 {
            assert_eq!(f.ambient_coefficient_count(), 9);
        }
        assert_eq!(
            rels().multilinearize(1),
            Err(Error::DegreeTooSmall { got: 1, min: 2 })
        );
    }

    #[test]
    fn multilinear_form_evaluates_bilinearly() {
        // f_1 at (p_a, p_b): 1·ζ² + 1·ζ + 1·1 = 0.
        let forms = rels().multilinearize(2).unwrap();
        let f1 = &forms[0];
        assert_eq!(f1.label(), RelLabel::F);
        assert_eq!(f1.index(), 1);
        assert!(f1.eval_at_points(&[pa(), pb()]).is_zero());
        // f_1 at (p_a, [1:2:3]) = 3 + 2 + 1 = 6.
        let q = ProjPoint::from_ints(1, 2, 3).unwrap();
        assert_eq!(f1.eval_at_points(&[pa(), q]), Eis::from_int(6));
    }

    #[test]
    fn standard_relations_pass_validation() {
        assert!(rels().validate().is_ok());
        // Rescaling all relations by ζ presents the same ideal and passes.
        assert!(rels().scaled(&Eis::zeta()).validate().is_ok());
    }

    #[test]
    fn broken_relations_fail_validation() {
        // Drop the x² term from f: the determinant no longer factors through
        // the three special lines.
        let broken = QuadraticRelationSet::from_coeffs([
            unit_matrix([(1, 2), (2, 1), (1, 2)]), // f = yz + zy (duplicate entry is idempotent)
            rels().relation(RelLabel::G).clone(),
            rels().relation(RelLabel::H).clone(),
        ]);
        let err = broken.validate().unwrap_err();
        match err {
            Error::InvalidRelations(msg) => {
                assert!(!msg.is_empty());
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn poly3_display_is_deterministic() {
        let det = rels().det_cubic();
        assert_eq!(
            det.to_string(),
            "(-1+0*z)*x^3 + (3+0*z)*x*y*z + (-1+0*z)*y^3 + (-1+0*z)*z^3"
        );
    }
}
