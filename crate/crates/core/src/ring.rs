//! Exact arithmetic in ℤ[√2].
//!
//! Every frieze weight in this crate is a [`QuadInt`], an element `a + b√2`
//! with unbounded integer coefficients. Comparisons are decided integrally,
//! never through floating point, so all classification predicates are exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not a unit of Z[sqrt 2]")]
    NotAUnit(QuadInt),
    #[error("{0} is not positive")]
    NotPositive(QuadInt),
    #[error("cannot parse {0:?} as an element of Z[sqrt 2]")]
    Parse(String),
}

/// An element `a + b√2` of ℤ[√2].
///
/// The pair `(a, b)` is canonical, so equality is componentwise. Ordering is
/// the order of the real numbers the elements denote; since √2 is irrational
/// this agrees with equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        QuadInt::default()
    }

    pub fn one() -> Self {
        QuadInt::new(1, 0)
    }

    /// √2 itself.
    pub fn sqrt2() -> Self {
        QuadInt::new(0, 1)
    }

    /// The fundamental unit `1 + √2`.
    pub fn fundamental_unit() -> Self {
        QuadInt::new(1, 1)
    }

    /// `λ_p = 2cos(π/p)` for the two values of `p` where it lies in ℤ[√2].
    pub fn lambda(p: usize) -> Option<Self> {
        match p {
            3 => Some(QuadInt::one()),
            4 => Some(QuadInt::sqrt2()),
            _ => None,
        }
    }

    /// Coefficient of 1.
    pub fn rational_part(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of √2.
    pub fn sqrt2_part(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Galois conjugate `a - b√2`.
    pub fn conjugate(&self) -> Self {
        QuadInt { a: self.a.clone(), b: -&self.b }
    }

    /// `N(a + b√2) = |a² - 2b²|`.
    pub fn norm(&self) -> BigUint {
        self.signed_norm().magnitude().clone()
    }

    fn signed_norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// True for units that are positive reals, i.e. the powers `ℓ_m`.
    pub fn is_positive_unit(&self) -> bool {
        self.is_unit() && self.signum() == Ordering::Greater
    }

    /// Both coefficients are non-negative.
    pub fn has_nonneg_coeffs(&self) -> bool {
        !self.a.is_negative() && !self.b.is_negative()
    }

    /// Exact sign of `a + b√2` as a real number.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
            (Sign::NoSign, s) | (s, Sign::NoSign) => sign_to_ordering(s),
            (x, y) if x == y => sign_to_ordering(x),
            _ => {
                // Opposite signs: the larger of a² and 2b² wins.
                if self.signed_norm().is_positive() {
                    sign_to_ordering(sa)
                } else {
                    sign_to_ordering(sb)
                }
            }
        }
    }

    /// `ℓ_m = (1 + √2)^m` for any integer `m`; `ℓ_{-1} = -1 + √2`.
    pub fn unit_power(m: i64) -> Self {
        let base = if m >= 0 { QuadInt::new(1, 1) } else { QuadInt::new(-1, 1) };
        base.pow(m.unsigned_abs())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = QuadInt::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The exponent `m` with `self = ℓ_m`, for positive units.
    pub fn unit_log(&self) -> Result<i64, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotAUnit(self.clone()));
        }
        if self.signum() != Ordering::Greater {
            return Err(RingError::NotPositive(self.clone()));
        }
        let one = QuadInt::one();
        let up = QuadInt::new(1, 1);
        let down = QuadInt::new(-1, 1);
        let mut x = self.clone();
        let mut m = 0i64;
        // Each step multiplies by ℓ_{∓1}, which is exact division by ℓ_{±1}.
        while x > one {
            x = &x * &down;
            m += 1;
        }
        while x < one {
            x = &x * &up;
            m -= 1;
        }
        debug_assert!(x.is_one());
        Ok(m)
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

fn sign_to_ordering(s: Sign) -> Ordering {
    match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// Exact comparison of `x` and `y` as real numbers.
pub fn cmp_real(x: &QuadInt, y: &QuadInt) -> Ordering {
    (x - y).signum()
}

/// Normalized Chebyshev polynomial of the second kind evaluated at `lambda`:
/// `U_{-1} = 0`, `U_0 = 1`, `U_k = λ·U_{k-1} - U_{k-2}`.
pub fn chebyshev_u(k: i64, lambda: &QuadInt) -> QuadInt {
    assert!(k >= -1, "chebyshev_u is defined for k >= -1, got {k}");
    let mut prev = QuadInt::zero();
    let mut cur = QuadInt::one();
    if k == -1 {
        return prev;
    }
    for _ in 0..k {
        let next = &(lambda * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_real(self, other)
    }
}

impl From<i64> for QuadInt {
    fn from(a: i64) -> Self {
        QuadInt::new(a, 0)
    }
}

impl From<BigInt> for QuadInt {
    fn from(a: BigInt) -> Self {
        QuadInt { a, b: BigInt::zero() }
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        QuadInt { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl AddAssign<&QuadInt> for QuadInt {
    fn add_assign(&mut self, rhs: &QuadInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        QuadInt { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        let a = &self.a * &rhs.a + BigInt::from(2) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadInt { a, b }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        &self * &rhs
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: -self.a, b: -self.b }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for QuadInt {
    /// Renders `0`, `1`, `√2`, `1+√2`, `-3+3√2`, `3-√2`, `2√2`, `-√2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |f: &mut fmt::Formatter<'_>, b: &BigInt| -> fmt::Result {
            let mag = b.magnitude();
            if mag.is_one() {
                write!(f, "√2")
            } else {
                write!(f, "{mag}√2")
            }
        };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            write!(f, "{}", if self.b.is_negative() { "-" } else { "+" })?;
        } else if self.b.is_negative() {
            write!(f, "-")?;
        }
        surd(f, &self.b)
    }
}

impl fmt::Debug for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadInt({self})")
    }
}

impl FromStr for QuadInt {
    type Err = RingError;

    /// Accepts the [`Display`](fmt::Display) grammar, with `sqrt(2)` allowed
    /// in place of `√2` and `*` optional between a coefficient and the surd.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RingError::Parse(s.to_string());
        let text: String = s
            .replace("sqrt(2)", "√2")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        if text.is_empty() {
            return Err(err());
        }

        // Split into signed terms.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (idx, c) in text.chars().enumerate() {
            if (c == '+' || c == '-') && idx > 0 {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(c);
        }
        terms.push(cur);
        if terms.len() > 2 {
            return Err(err());
        }

        let mut a: Option<BigInt> = None;
        let mut b: Option<BigInt> = None;
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (is_surd, digits) = match body.strip_suffix("√2") {
                Some(coef) => (true, coef),
                None => (false, body),
            };
            let mut value = if is_surd && digits.is_empty() {
                BigInt::one()
            } else {
                if !digits.chars().all(|c| c.is_ascii_digit()) {
                    return Err(err());
                }
                digits.parse::<BigInt>().map_err(|_| err())?
            };
            if neg {
                value = -value;
            }
            let slot = if is_surd { &mut b } else { &mut a };
            if slot.is_some() {
                return Err(err());
            }
            *slot = Some(value);
        }
        Ok(QuadInt { a: a.unwrap_or_default(), b: b.unwrap_or_default() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&q(1, 1) * &q(1, 1), q(3, 2));
        assert_eq!(&q(-1, 1) * &q(2, 2), q(2, 0));
        assert_eq!(&q(5, -7) + &QuadInt::zero(), q(5, -7));
    }

    #[test]
    fn norms() {
        assert_eq!(q(1, 2).norm(), BigUint::from(7u32));
        assert_eq!(q(1, 1).norm(), BigUint::from(1u32));
        assert_eq!(q(0, 1).norm(), BigUint::from(2u32));
        assert!(q(3, 2).is_unit());
        assert!(!q(0, 1).is_unit());
        assert!(!q(1, 2).is_unit());
    }

    #[test]
    fn unit_powers_and_logs() {
        assert_eq!(QuadInt::unit_power(0), q(1, 0));
        assert_eq!(QuadInt::unit_power(2), q(3, 2));
        assert_eq!(QuadInt::unit_power(-1), q(-1, 1));
        assert_eq!(&q(-1, 1) * &q(1, 1), QuadInt::one());
        assert_eq!(q(3, 2).unit_log(), Ok(2));
        assert_eq!(QuadInt::one().unit_log(), Ok(0));
        assert_eq!(q(7, 5).unit_log(), Ok(3));
        assert_eq!(q(0, 1).unit_log(), Err(RingError::NotAUnit(q(0, 1))));
        assert_eq!(q(-1, 0).unit_log(), Err(RingError::NotPositive(q(-1, 0))));
        assert_eq!(q(1, -1).unit_log(), Err(RingError::NotPositive(q(1, -1))));
        for m in -20..=30 {
            assert_eq!(QuadInt::unit_power(m).unit_log(), Ok(m));
        }
    }

    #[test]
    fn real_comparisons() {
        assert_eq!(cmp_real(&q(-1, 1), &q(1, 0)), Ordering::Less);
        assert_eq!(cmp_real(&q(0, 1), &q(1, 0)), Ordering::Greater);
        assert_eq!(cmp_real(&q(3, -1), &q(1, 1)), Ordering::Less);
        assert_eq!(cmp_real(&q(3, 2), &q(3, 2)), Ordering::Equal);
    }

    #[test]
    fn chebyshev_values() {
        let s2 = QuadInt::sqrt2();
        assert_eq!(chebyshev_u(1, &s2), s2);
        assert_eq!(chebyshev_u(-1, &s2), QuadInt::zero());
        assert_eq!(chebyshev_u(2, &s2), QuadInt::one());
        assert_eq!(chebyshev_u(3, &s2), QuadInt::zero());
        // Period 8 up to sign at λ₄.
        for k in -1..20 {
            assert_eq!(chebyshev_u(k + 4, &s2), -chebyshev_u(k, &s2));
        }
        // Symmetry of the Euclidean friezes on the triangle and the square.
        for p in [3i64, 4] {
            let lam = QuadInt::lambda(p as usize).unwrap();
            for d in 1..p {
                assert_eq!(chebyshev_u(d - 1, &lam), chebyshev_u(p - d - 1, &lam));
            }
        }
    }

    #[test]
    fn rendering() {
        let cases = [
            (q(0, 0), "0"),
            (q(1, 0), "1"),
            (q(0, 1), "√2"),
            (q(1, 1), "1+√2"),
            (q(-3, 3), "-3+3√2"),
            (q(3, -1), "3-√2"),
            (q(0, -1), "-√2"),
            (q(0, 2), "2√2"),
            (q(-7, 0), "-7"),
        ];
        for (x, s) in cases {
            assert_eq!(x.to_string(), s);
            assert_eq!(s.parse::<QuadInt>().unwrap(), x);
        }
    }

    #[test]
    fn parsing_aliases_and_errors() {
        assert_eq!("1+sqrt(2)".parse::<QuadInt>().unwrap(), q(1, 1));
        assert_eq!("2 + 3*sqrt(2)".parse::<QuadInt>().unwrap(), q(2, 3));
        assert_eq!("√2+1".parse::<QuadInt>().unwrap(), q(1, 1));
        assert_eq!("+5".parse::<QuadInt>().unwrap(), q(5, 0));
        for bad in ["", "+", "1+2", "√2+√2", "x", "1+-2√2", "1+2+3", "√3"] {
            assert!(bad.parse::<QuadInt>().is_err(), "{bad:?} should not parse");
        }
    }

    fn arb_quad() -> impl Strategy<Value = QuadInt> {
        (-1_000_000i64..=1_000_000, -1_000_000i64..=1_000_000).prop_map(|(a, b)| q(a, b))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(x in arb_quad(), y in arb_quad()) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn render_parse_round_trip(x in arb_quad()) {
            prop_assert_eq!(x.to_string().parse::<QuadInt>().unwrap(), x);
        }

        #[test]
        fn comparison_matches_floating_point(x in arb_quad(), y in arb_quad()) {
            let exact = cmp_real(&x, &y);
            let diff = x.to_f64() - y.to_f64();
            // Differences this far from zero are resolved reliably in f64.
            if diff.abs() > 1e-6 {
                prop_assert_eq!(exact, diff.partial_cmp(&0.0).unwrap());
            }
            prop_assert_eq!(cmp_real(&y, &x), exact.reverse());
        }

        #[test]
        fn comparison_is_transitive(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            if x <= y && y <= z {
                prop_assert!(x <= z);
            }
        }
    }
}
