//! Exact scalar rings and fields.
//!
//! Everything downstream (matrices, polynomials, elimination) is generic over
//! [`Scalar`]; division-dependent algorithms require [`Field`]. The three
//! instantiations used in this crate are `BigRational`, `i64`, and [`Fp`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact commutative ring element. No floating point implements this.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// A scalar with exact division by nonzero elements.
pub trait Field: Scalar {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv().expect("division by zero")
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Prime field element. The modulus rides along with the value; elements
/// produced by `zero()`/`one()` carry modulus 0 ("any modulus") and adopt the
/// other operand's modulus on first contact. One computation never mixes two
/// distinct positive moduli.
#[derive(Debug, Clone, Copy)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus > 1, "modulus must be at least 2");
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    /// Reduction of a signed integer.
    pub fn from_i64(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        let v = ((value % m) + m) % m;
        Fp::new(v as u64, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn unify(a: u64, b: u64) -> u64 {
        if a == 0 {
            b
        } else {
            debug_assert!(b == 0 || a == b, "mixed moduli {a} and {b}");
            a
        }
    }

    fn reduced(value: u64, modulus: u64) -> Self {
        if modulus == 0 {
            Fp { value, modulus }
        } else {
            Fp {
                value: value % modulus,
                modulus,
            }
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let m = Fp::unify(self.modulus, other.modulus);
        if m == 0 {
            self.value == other.value
        } else {
            self.value % m == other.value % m
        }
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = Fp::unify(self.modulus, rhs.modulus);
        Fp::reduced(self.value + rhs.value, m)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = Fp::unify(self.modulus, rhs.modulus);
        if m == 0 {
            debug_assert!(rhs.value == 0, "cannot subtract from modulus-free value");
            return Fp::reduced(self.value, 0);
        }
        Fp::reduced(self.value % m + (m - rhs.value % m), m)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = Fp::unify(self.modulus, rhs.modulus);
        if m == 0 {
            return Fp::reduced(self.value * rhs.value, 0);
        }
        let prod = (self.value as u128 % m as u128) * (rhs.value as u128 % m as u128);
        Fp::reduced((prod % m as u128) as u64, m)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::zero() - self
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
    fn is_one(&self) -> bool {
        if self.modulus == 0 {
            self.value == 1
        } else {
            self.value % self.modulus == 1 % self.modulus
        }
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        let m = self.modulus;
        debug_assert!(m > 1, "inverse needs a concrete modulus");
        if self.value.is_multiple_of(m) {
            return None;
        }
        // extended Euclid
        let (mut r0, mut r1) = (m as i128, (self.value % m) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert!(r0 == 1, "modulus must be prime");
        let inv = ((t0 % m as i128) + m as i128) % m as i128;
        Some(Fp::new(inv as u64, m))
    }
}

/// Modular arithmetic helpers for the hot enumeration paths that work on raw
/// `u64` residues instead of [`Fp`] values.
pub mod modp {
    pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
        (a + b) % p
    }

    pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn reduce_i64(v: i64, p: u64) -> u64 {
        let m = p as i64;
        (((v % m) + m) % m) as u64
    }

    pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, p);
            }
            base = mul_mod(base, base, p);
            exp >>= 1;
        }
        acc
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let p = 7;
        let a = Fp::new(5, p);
        let b = Fp::new(4, p);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 6);
        assert_eq!((a - b).value(), 1);
        assert_eq!((b - a).value(), 6);
        assert_eq!((-a).value(), 2);
    }

    #[test]
    fn fp_inverse() {
        for p in [2u64, 3, 5, 32003] {
            for v in 1..p.min(50) {
                let x = Fp::new(v, p);
                let inv = x.inv().unwrap();
                assert!((x * inv).is_one(), "inverse failed for {v} mod {p}");
            }
        }
        assert_eq!(Fp::new(0, 5).inv(), None);
    }

    #[test]
    fn fp_universal_constants_adopt_modulus() {
        let x = Fp::new(3, 5);
        assert_eq!((Fp::one() + x).value(), 4);
        assert_eq!((Fp::zero() - x).value(), 2);
        assert!((Fp::one() * x) == x);
    }

    #[test]
    fn from_signed() {
        assert_eq!(Fp::from_i64(-1, 5).value(), 4);
        assert_eq!(Fp::from_i64(-10, 5).value(), 0);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(32003));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(32001));
    }
}
