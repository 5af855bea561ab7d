//! The projective plane ℙ² over ℚ(ζ₃): points, lines, and the six special
//! objects that control the geometry of S(1,1,1).
//!
//! Points and linear forms are stored in a canonical normalization — the
//! first nonzero coordinate is scaled to 1 — so structural equality *is*
//! projective equality and every object has exactly one representation.
//!
//! The distinguished objects are
//!
//! * the points  p_a = [1:1:1],  p_b = [1:ζ:ζ²],  p_c = [1:ζ²:ζ],  and
//! * the lines   ℙ¹_A : x + y + z = 0,   ℙ¹_B : x + ζ²y + ζz = 0,
//!   ℙ¹_C : x + ζy + ζ²z = 0,
//!
//! whose incidence pattern is: each special point lies on exactly the two
//! lines with the *other* letters (p_a ∈ ℙ¹_B ∩ ℙ¹_C and so on).  The two
//! special points on a line are its *marked points*; they anchor both the
//! generic-point parametrization of the line and the section grids used for
//! cohomology computations.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalars::{Eis, ParamPoly};
use crate::{Error, Result};

/// A point of ℙ², stored with its first nonzero coordinate normalized to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: [Eis; 3],
}

/// A line in ℙ², i.e. the zero locus of αx + βy + γz with the first nonzero
/// coefficient normalized to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: [Eis; 3],
}

/// Scales a nonzero triple so its first nonzero entry becomes 1.
fn normalize_triple(mut v: [Eis; 3]) -> Result<[Eis; 3]> {
    let lead = v.iter().find(|c| !c.is_zero()).cloned();
    match lead {
        None => Err(Error::ZeroTriple),
        Some(l) => {
            let inv = l.inv().expect("nonzero scalar is invertible");
            for c in v.iter_mut() {
                *c = c.clone() * inv.clone();
            }
            Ok(v)
        }
    }
}

/// Cross product of two coordinate triples; the workhorse behind both
/// `meet` (on line coefficients) and `join` (on point coordinates).
fn cross(u: &[Eis; 3], v: &[Eis; 3]) -> [Eis; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

impl ProjPoint {
    /// Normalizes a coordinate triple into a point; errors on (0, 0, 0).
    pub fn new(coords: [Eis; 3]) -> Result<Self> {
        Ok(ProjPoint {
            coords: normalize_triple(coords)?,
        })
    }

    /// Builds a point from machine integers (convenient in tests).
    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        ProjPoint::new([Eis::from_int(x), Eis::from_int(y), Eis::from_int(z)])
    }

    /// The canonical normalized coordinates.
    pub fn coords(&self) -> &[Eis; 3] {
        &self.coords
    }

    /// The line through two distinct points.
    pub fn join(&self, other: &ProjPoint) -> Result<LinearForm> {
        if self == other {
            return Err(Error::IdenticalInputs);
        }
        LinearForm::new(cross(&self.coords, &other.coords))
    }
}

impl LinearForm {
    /// Normalizes a coefficient triple into a line; errors on (0, 0, 0).
    pub fn new(coeffs: [Eis; 3]) -> Result<Self> {
        Ok(LinearForm {
            coeffs: normalize_triple(coeffs)?,
        })
    }

    /// The canonical normalized coefficients.
    pub fn coeffs(&self) -> &[Eis; 3] {
        &self.coeffs
    }

    /// Exact evaluation of the defining form at a point.
    pub fn eval(&self, p: &ProjPoint) -> Eis {
        let mut acc = Eis::zero();
        for (c, x) in self.coeffs.iter().zip(p.coords().iter()) {
            acc = acc + c * x;
        }
        acc
    }

    /// Whether the point lies on the line.
    pub fn incident(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// The intersection point of two distinct lines.
    pub fn meet(&self, other: &LinearForm) -> Result<ProjPoint> {
        if self == other {
            return Err(Error::IdenticalInputs);
        }
        ProjPoint::new(cross(&self.coeffs, &other.coeffs))
    }
}

/// The special point p_a = [1:1:1].
pub fn pa() -> ProjPoint {
    ProjPoint::from_ints(1, 1, 1).expect("nonzero triple")
}

/// The special point p_b = [1:ζ:ζ²].
pub fn pb() -> ProjPoint {
    ProjPoint::new([Eis::one(), Eis::zeta(), Eis::zeta_sq()]).expect("nonzero triple")
}

/// The special point p_c = [1:ζ²:ζ].
pub fn pc() -> ProjPoint {
    ProjPoint::new([Eis::one(), Eis::zeta_sq(), Eis::zeta()]).expect("nonzero triple")
}

/// The line ℙ¹_A : x + y + z = 0.
pub fn line_a() -> LinearForm {
    LinearForm::new([Eis::one(), Eis::one(), Eis::one()]).expect("nonzero triple")
}

/// The line ℙ¹_B : x + ζ²y + ζz = 0.
pub fn line_b() -> LinearForm {
    LinearForm::new([Eis::one(), Eis::zeta_sq(), Eis::zeta()]).expect("nonzero triple")
}

/// The line ℙ¹_C : x + ζy + ζ²z = 0.
pub fn line_c() -> LinearForm {
    LinearForm::new([Eis::one(), Eis::zeta(), Eis::zeta_sq()]).expect("nonzero triple")
}

/// The two marked points of a line, in canonical order.
///
/// For the three named lines these are the two special points lying on the
/// line: (p_b, p_c) on ℙ¹_A, (p_a, p_c) on ℙ¹_B, (p_a, p_b) on ℙ¹_C.  For any
/// other line the pair consists of its intersections with the coordinate
/// lines x = 0, y = 0, z = 0 — the first two distinct ones, in that order —
/// which is deterministic and always yields two distinct points on the line.
pub fn marked_points(l: &LinearForm) -> (ProjPoint, ProjPoint) {
    if *l == line_a() {
        return (pb(), pc());
    }
    if *l == line_b() {
        return (pa(), pc());
    }
    if *l == line_c() {
        return (pa(), pb());
    }
    let axes = [
        LinearForm::new([Eis::one(), Eis::zero(), Eis::zero()]).unwrap(),
        LinearForm::new([Eis::zero(), Eis::one(), Eis::zero()]).unwrap(),
        LinearForm::new([Eis::zero(), Eis::zero(), Eis::one()]).unwrap(),
    ];
    let mut found: Vec<ProjPoint> = Vec::new();
    for axis in axes.iter() {
        if axis == l {
            continue;
        }
        let p = l.meet(axis).expect("distinct lines meet");
        if !found.contains(&p) {
            found.push(p);
        }
        if found.len() == 2 {
            break;
        }
    }
    let q1 = found.pop().expect("a line meets the coordinate triangle twice");
    let q0 = found.pop().expect("a line meets the coordinate triangle twice");
    (q0, q1)
}

/// The parametrization g(t) = q₀ + t·q₁ of a line by its marked points.
///
/// As t ranges over the field, g(t) covers every point of the line except q₁
/// exactly once; treating t as a formal parameter turns "for every point of
/// the punctured line" into a polynomial identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineParam {
    q0: ProjPoint,
    q1: ProjPoint,
}

impl LineParam {
    /// The base point g(0) = q₀.
    pub fn q0(&self) -> &ProjPoint {
        &self.q0
    }

    /// The direction point, the unique point of the line missed by g.
    pub fn q1(&self) -> &ProjPoint {
        &self.q1
    }

    /// The coordinates of g(t) as degree-≤1 polynomials in t.
    pub fn generic_coords(&self) -> [ParamPoly; 3] {
        let q0 = self.q0.coords();
        let q1 = self.q1.coords();
        [
            ParamPoly::linear(q0[0].clone(), q1[0].clone()),
            ParamPoly::linear(q0[1].clone(), q1[1].clone()),
            ParamPoly::linear(q0[2].clone(), q1[2].clone()),
        ]
    }

    /// The concrete point g(t) for a scalar value of t.
    pub fn at(&self, t: &Eis) -> ProjPoint {
        let coords = self.generic_coords();
        let v = [
            coords[0].eval(t),
            coords[1].eval(t),
            coords[2].eval(t),
        ];
        ProjPoint::new(v).expect("a line parametrization never passes through (0,0,0)")
    }
}

/// Parametrizes a line by its two marked points.
pub fn param_point(l: &LinearForm) -> LineParam {
    let (q0, q1) = marked_points(l);
    LineParam { q0, q1 }
}

/// One factor of a product component inside (ℙ²)^d.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// A single closed point.
    Point(ProjPoint),
    /// A line ℙ¹ ⊂ ℙ².
    Line(LinearForm),
    /// All of ℙ² (only valid in the degree-1 scheme).
    WholePlane,
}

impl Factor {
    /// Set-theoretic containment `other ⊆ self` of factors inside ℙ².
    pub fn contains(&self, other: &Factor) -> bool {
        match (self, other) {
            (Factor::WholePlane, _) => true,
            (_, Factor::WholePlane) => false,
            (Factor::Line(l), Factor::Line(m)) => l == m,
            (Factor::Line(l), Factor::Point(p)) => l.incident(p),
            (Factor::Point(_), Factor::Line(_)) => false,
            (Factor::Point(p), Factor::Point(q)) => p == q,
        }
    }

    /// Reduced intersection of two factors, or `None` when disjoint.
    ///
    /// Two distinct lines meet in their intersection point; a line and an
    /// incident point meet in the point; everything meets `WholePlane` in
    /// itself.
    pub fn intersect(&self, other: &Factor) -> Option<Factor> {
        match (self, other) {
            (Factor::WholePlane, f) => Some(f.clone()),
            (f, Factor::WholePlane) => Some(f.clone()),
            (Factor::Point(p), Factor::Point(q)) => (p == q).then(|| Factor::Point(p.clone())),
            (Factor::Point(p), Factor::Line(l)) | (Factor::Line(l), Factor::Point(p)) => {
                l.incident(p).then(|| Factor::Point(p.clone()))
            }
            (Factor::Line(l), Factor::Line(m)) => {
                if l == m {
                    Some(Factor::Line(l.clone()))
                } else {
                    Some(Factor::Point(l.meet(m).expect("distinct lines")))
                }
            }
        }
    }

    /// Dimension of the factor as a variety (0, 1, or 2).
    pub fn dimension(&self) -> usize {
        match self {
            Factor::Point(_) => 0,
            Factor::Line(_) => 1,
            Factor::WholePlane => 2,
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = ["x", "y", "z"];
        let mut first = true;
        for (c, v) in self.coeffs.iter().zip(vars.iter()) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "({c})*{v}")?;
            }
        }
        write!(f, " = 0")
    }
}

/// Named objects print symbolically (`pa`, `PA1`, `P2`); everything else
/// falls back to coordinates.
impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Point(p) => {
                if *p == pa() {
                    write!(f, "pa")
                } else if *p == pb() {
                    write!(f, "pb")
                } else if *p == pc() {
                    write!(f, "pc")
                } else {
                    write!(f, "{p}")
                }
            }
            Factor::Line(l) => {
                if *l == line_a() {
                    write!(f, "PA1")
                } else if *l == line_b() {
                    write!(f, "PB1")
                } else if *l == line_c() {
                    write!(f, "PC1")
                } else {
                    write!(f, "{{{l}}}")
                }
            }
            Factor::WholePlane => write!(f, "P2"),
        }
    }
}
