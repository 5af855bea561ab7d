//! Exact arithmetic in the cyclotomic field ℚ(ζ₃) and in ℚ(ζ₃)[t].
//!
//! ζ denotes the primitive cube root of unity e^{2πi/3}, so ζ² = −1 − ζ and
//! 1 + ζ + ζ² = 0.  Every element of ℚ(ζ₃) is written uniquely as
//! `re + ze·ζ` with rational `re`, `ze`; all arithmetic reduces ζ² via the
//! rewriting rule above.  Coefficients are arbitrary-precision rationals, so
//! nothing here ever rounds: equality of scalars is exact structural equality
//! of the canonical representation.
//!
//! [`ParamPoly`] implements polynomials in one central parameter `t` with
//! [`Eis`] coefficients.  They parametrize generic points of lines in ℙ², so
//! that statements "for all points of a punctured line" become identities of
//! polynomials and are decided exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator by the underlying representation.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a numerator/denominator pair of machine integers.
///
/// Panics if `den` is zero; the quotient is reduced automatically.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element `re + ze·ζ` of ℚ(ζ₃), with ζ = e^{2πi/3}.
///
/// The pair `(re, ze)` is the canonical representation: two scalars are equal
/// iff both rational parts agree.  The derived ordering is the lexicographic
/// one on `(re, ze)`; it has no field-theoretic meaning and exists only so
/// that collections of scalars (and of the geometric objects built from them)
/// can be sorted deterministically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Eis {
    re: Rational,
    ze: Rational,
}

impl Eis {
    /// Builds `re + ze·ζ` from its two rational coordinates.
    pub fn new(re: Rational, ze: Rational) -> Self {
        Eis { re, ze }
    }

    /// Embeds an integer.
    pub fn from_int(n: i64) -> Self {
        Eis::new(rat(n, 1), Rational::zero())
    }

    /// Builds `a + b·ζ` from machine integers.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Eis::new(rat(a, 1), rat(b, 1))
    }

    /// Embeds a rational number.
    pub fn from_rational(r: Rational) -> Self {
        Eis::new(r, Rational::zero())
    }

    /// The root of unity ζ itself.
    pub fn zeta() -> Self {
        Eis::from_ints(0, 1)
    }

    /// ζ² in canonical form, i.e. −1 − ζ.
    pub fn zeta_sq() -> Self {
        Eis::from_ints(-1, -1)
    }

    /// Rational part of the canonical representation.
    pub fn re(&self) -> &Rational {
        &self.re
    }

    /// Coefficient of ζ in the canonical representation.
    pub fn ze(&self) -> &Rational {
        &self.ze
    }

    /// Complex conjugation, the nontrivial field automorphism ζ ↦ ζ².
    ///
    /// On coordinates: a + bζ ↦ (a − b) − bζ.
    pub fn conj(&self) -> Self {
        Eis::new(&self.re - &self.ze, -self.ze.clone())
    }

    /// The field norm N(a + bζ) = a² − ab + b², a nonnegative rational that
    /// vanishes exactly on zero.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.ze + &self.ze * &self.ze
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Eis::new(c.re / &n, c.ze / &n))
    }

    /// Exact division; errors when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Eis) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Small nonnegative integer power by repeated multiplication.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Eis::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// The default scalar is zero, so arrays of scalars default to zero-filled.
impl Default for Eis {
    fn default() -> Self {
        Eis::zero()
    }
}

impl Zero for Eis {
    fn zero() -> Self {
        Eis::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.ze.is_zero()
    }
}

impl One for Eis {
    fn one() -> Self {
        Eis::from_int(1)
    }
}

impl std::ops::Add for Eis {
    type Output = Eis;
    fn add(self, rhs: Eis) -> Eis {
        Eis::new(self.re + rhs.re, self.ze + rhs.ze)
    }
}

impl std::ops::Sub for Eis {
    type Output = Eis;
    fn sub(self, rhs: Eis) -> Eis {
        Eis::new(self.re - rhs.re, self.ze - rhs.ze)
    }
}

impl std::ops::Neg for Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis::new(-self.re, -self.ze)
    }
}

impl std::ops::Mul for Eis {
    type Output = Eis;
    /// (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd·ζ², and ζ² = −1 − ζ, so the
    /// canonical coordinates of the product are (ac − bd, ad + bc − bd).
    fn mul(self, rhs: Eis) -> Eis {
        let ac = &self.re * &rhs.re;
        let bd = &self.ze * &rhs.ze;
        let ad = &self.re * &rhs.ze;
        let bc = &self.ze * &rhs.re;
        Eis::new(ac - &bd, ad + bc - bd)
    }
}

impl std::ops::Mul<&Eis> for &Eis {
    type Output = Eis;
    fn mul(self, rhs: &Eis) -> Eis {
        self.clone() * rhs.clone()
    }
}

impl std::ops::Mul<&Eis> for Eis {
    type Output = Eis;
    fn mul(self, rhs: &Eis) -> Eis {
        self * rhs.clone()
    }
}

impl std::ops::Add<&Eis> for Eis {
    type Output = Eis;
    fn add(self, rhs: &Eis) -> Eis {
        self + rhs.clone()
    }
}

impl std::ops::Sub<&Eis> for Eis {
    type Output = Eis;
    fn sub(self, rhs: &Eis) -> Eis {
        self - rhs.clone()
    }
}

impl std::ops::Add<&Eis> for &Eis {
    type Output = Eis;
    fn add(self, rhs: &Eis) -> Eis {
        self.clone() + rhs.clone()
    }
}

impl std::ops::Sub<&Eis> for &Eis {
    type Output = Eis;
    fn sub(self, rhs: &Eis) -> Eis {
        self.clone() - rhs.clone()
    }
}

/// Canonical string form `re+ze*z` (z stands for ζ), e.g. `1+0*z`, `0+1*z`,
/// `-1-1*z`, `1/2-2/3*z`.  Rationals print without a denominator when it is 1.
impl fmt::Display for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ze.is_negative() {
            write!(f, "{}-{}*z", self.re, -self.ze.clone())
        } else {
            write!(f, "{}+{}*z", self.re, self.ze)
        }
    }
}

/// Parses the canonical form and the abbreviations `a`, `b*z`, `z`, `-z`,
/// `a+z`, `a-z`; omitted parts default to zero.
impl FromStr for Eis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parse_rat = |t: &str| -> std::result::Result<Rational, String> {
            Rational::from_str(t).map_err(|e| format!("bad rational {t:?}: {e}"))
        };
        if s == "z" {
            return Ok(Eis::zeta());
        }
        if s == "-z" {
            return Ok(-Eis::zeta());
        }
        if let Some(head) = s.strip_suffix("*z") {
            // Split "A±B" into the rational part and the ζ-coefficient: the
            // separating sign is the last +/- preceded by a digit.
            let bytes = head.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit() {
                    split = Some(i);
                    break;
                }
            }
            return match split {
                Some(i) => {
                    let sign = if bytes[i] == b'-' { -1 } else { 1 };
                    let re = parse_rat(&head[..i])?;
                    let ze = parse_rat(&head[i + 1..])? * rat(sign, 1);
                    Ok(Eis::new(re, ze))
                }
                None => Ok(Eis::new(Rational::zero(), parse_rat(head)?)),
            };
        }
        if let Some(head) = s.strip_suffix("+z") {
            return Ok(Eis::new(parse_rat(head)?, Rational::one()));
        }
        if let Some(head) = s.strip_suffix("-z") {
            if !head.is_empty() {
                return Ok(Eis::new(parse_rat(head)?, -Rational::one()));
            }
        }
        Ok(Eis::from_rational(parse_rat(&s)?))
    }
}

/// A polynomial in one parameter `t` with coefficients in ℚ(ζ₃).
///
/// Coefficients are stored by ascending power of `t` with no trailing zeros,
/// so structural equality is polynomial equality.  The zero polynomial is the
/// empty coefficient list and has degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPoly {
    coeffs: Vec<Eis>,
}

impl ParamPoly {
    /// Builds a polynomial from coefficients by ascending power, trimming
    /// trailing zeros to restore the canonical form.
    pub fn from_coeffs(mut coeffs: Vec<Eis>) -> Self {
        while coeffs.last().is_some_and(Eis::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs }
    }

    /// The constant polynomial.
    pub fn constant(c: Eis) -> Self {
        ParamPoly::from_coeffs(vec![c])
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        ParamPoly::from_coeffs(vec![Eis::zero(), Eis::one()])
    }

    /// `c0 + c1·t`.
    pub fn linear(c0: Eis, c1: Eis) -> Self {
        ParamPoly::from_coeffs(vec![c0, c1])
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients by ascending power (no trailing zeros).
    pub fn coeffs(&self) -> &[Eis] {
        &self.coeffs
    }

    /// The coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Eis {
        self.coeffs.get(k).cloned().unwrap_or_else(Eis::zero)
    }

    /// Exact evaluation at a scalar.
    pub fn eval(&self, at: &Eis) -> Eis {
        let mut acc = Eis::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, by: &Eis) -> Self {
        ParamPoly::from_coeffs(self.coeffs.iter().map(|c| c * by).collect())
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        ParamPoly::constant(Eis::one())
    }
}

impl std::ops::Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        ParamPoly::from_coeffs(out)
    }
}

impl std::ops::Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self + (-rhs)
    }
}

impl std::ops::Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = vec![Eis::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a * b;
            }
        }
        ParamPoly::from_coeffs(out)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> Eis {
        Eis::zeta()
    }

    #[test]
    fn zeta_squared_is_minus_one_minus_zeta() {
        assert_eq!(z() * z(), Eis::zeta_sq());
        assert_eq!(Eis::zeta_sq(), Eis::from_ints(-1, -1));
    }

    #[test]
    fn zeta_cubed_is_one() {
        assert_eq!(z() * z() * z(), Eis::one());
        assert_eq!(z() * Eis::zeta_sq(), Eis::one());
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        assert!((Eis::one() + z() + Eis::zeta_sq()).is_zero());
    }

    #[test]
    fn inverse_of_one_plus_zeta_is_minus_zeta() {
        let v = Eis::one() + z();
        let inv = v.inv().unwrap();
        assert_eq!(inv, -z());
        // Independent check by re-multiplication.
        assert_eq!(v * inv, Eis::one());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(Eis::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(
            Eis::one().checked_div(&Eis::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn norm_is_rational_and_positive_definite() {
        assert_eq!(z().norm(), rat(1, 1));
        assert_eq!(Eis::from_ints(2, 3).norm(), rat(4 - 6 + 9, 1));
        assert!(Eis::zero().norm().is_zero());
    }

    #[test]
    fn conjugation_swaps_zeta_and_zeta_squared() {
        assert_eq!(z().conj(), Eis::zeta_sq());
        assert_eq!(Eis::zeta_sq().conj(), z());
    }

    #[test]
    fn display_matches_canonical_format() {
        assert_eq!(Eis::one().to_string(), "1+0*z");
        assert_eq!(z().to_string(), "0+1*z");
        assert_eq!(Eis::zeta_sq().to_string(), "-1-1*z");
        assert_eq!(Eis::new(rat(1, 2), rat(-2, 3)).to_string(), "1/2-2/3*z");
    }

    #[test]
    fn parse_accepts_abbreviated_forms() {
        assert_eq!("1".parse::<Eis>().unwrap(), Eis::one());
        assert_eq!("z".parse::<Eis>().unwrap(), z());
        assert_eq!("-z".parse::<Eis>().unwrap(), -z());
        assert_eq!("2*z".parse::<Eis>().unwrap(), Eis::from_ints(0, 2));
        assert_eq!("1+0*z".parse::<Eis>().unwrap(), Eis::one());
        assert_eq!("-1-1*z".parse::<Eis>().unwrap(), Eis::zeta_sq());
        assert_eq!("3/4-z".parse::<Eis>().unwrap(), Eis::new(rat(3, 4), rat(-1, 1)));
    }

    #[test]
    fn product_of_conjugate_linear_factors() {
        // (t + ζ)(t + ζ²) = t² − t + 1.
        let lhs = ParamPoly::linear(z(), Eis::one()) * ParamPoly::linear(Eis::zeta_sq(), Eis::one());
        let rhs = ParamPoly::from_coeffs(vec![Eis::one(), Eis::from_int(-1), Eis::one()]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = ParamPoly::from_coeffs(vec![Eis::one(), Eis::zero(), Eis::zero()]);
        assert_eq!(p.degree(), Some(0));
        let q = ParamPoly::from_coeffs(vec![Eis::zero()]);
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn evaluation_agrees_with_expansion() {
        // p(t) = (1 + ζ) + 2t + t², evaluated at t = ζ.
        let p = ParamPoly::from_coeffs(vec![Eis::one() + z(), Eis::from_int(2), Eis::one()]);
        let expect = (Eis::one() + z()) + Eis::from_int(2) * z() + z() * z();
        assert_eq!(p.eval(&z()), expect);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_eis() -> impl Strategy<Value = Eis> {
        (arb_rational(), arb_rational()).prop_map(|(re, ze)| Eis::new(re, ze))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        /// Field axioms on random triples: commutativity, associativity,
        /// distributivity, and inverse laws where defined.
        #[test]
        fn field_axioms((a, b, c) in (arb_eis(), arb_eis(), arb_eis())) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(
                (a.clone() + b.clone()) + c.clone(),
                a.clone() + (b.clone() + c.clone())
            );
            prop_assert_eq!(
                (a.clone() * b.clone()) * c.clone(),
                a.clone() * (b.clone() * c.clone())
            );
            prop_assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
            prop_assert_eq!(a.clone() + Eis::zero(), a.clone());
            prop_assert_eq!(a.clone() * Eis::one(), a.clone());
            prop_assert_eq!(a.clone() + (-a.clone()), Eis::zero());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), Eis::one());
            }
        }

        /// Conjugation is a field automorphism of order two.
        #[test]
        fn conjugation_is_an_automorphism((a, b) in (arb_eis(), arb_eis())) {
            prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
            prop_assert_eq!((a.clone() + b.clone()).conj(), a.conj() + b.conj());
            prop_assert_eq!(a.conj().conj(), a.clone());
            // The norm is multiplicative and equals a·conj(a).
            let n = Eis::from_rational(a.norm());
            prop_assert_eq!(a.clone() * a.conj(), n);
        }

        /// The printed form round-trips through the parser.
        #[test]
        fn display_round_trips(a in arb_eis()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Eis>().unwrap(), a);
        }

        /// Degrees add under multiplication (coefficients form a field, so
        /// there are no zero divisors).
        #[test]
        fn poly_degrees_add(
            a in proptest::collection::vec(arb_eis(), 1..5),
            b in proptest::collection::vec(arb_eis(), 1..5),
        ) {
            let p = ParamPoly::from_coeffs(a);
            let q = ParamPoly::from_coeffs(b);
            let pq = p.clone() * q.clone();
            match (p.degree(), q.degree()) {
                (Some(dp), Some(dq)) => prop_assert_eq!(pq.degree(), Some(dp + dq)),
                _ => prop_assert!(pq.is_zero()),
            }
        }
    }
}
