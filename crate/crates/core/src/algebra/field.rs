use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Scalar field used by the generic polynomial and matrix code.
///
/// Elements of a runtime-chosen prime field cannot produce a zero out of thin
/// air, so constants are built from a `Context` (the modulus for GF(p), the
/// unit type for the rationals).
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Context: Clone + PartialEq + fmt::Debug;

    fn context(&self) -> Self::Context;
    fn zero_in(ctx: &Self::Context) -> Self;
    fn one_in(ctx: &Self::Context) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.context())
    }
}

/// GF(p) for a prime `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u32,
}

impl PrimeField {
    pub const MAX_MODULUS: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p >= Self::MAX_MODULUS || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Self { modulus: p as u32 })
    }

    /// GF(2), always valid.
    pub fn binary() -> Self {
        Self { modulus: 2 }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.modulus as u64
    }

    /// Reduces an arbitrary integer into the field.
    pub fn elem(&self, value: i64) -> FieldElement {
        let p = self.modulus as i64;
        FieldElement {
            value: value.rem_euclid(p) as u32,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// All elements in increasing order of their representative.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.modulus).map(move |v| FieldElement {
            value: v,
            field: *self,
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() || a.field != *self {
            return None;
        }
        let group = self.order() - 1;
        let mut best = group;
        for d in divisors(group) {
            if a.pow(d).value == 1 {
                best = best.min(d);
            }
        }
        Some(best)
    }

    /// Smallest element of multiplicative order exactly `order`, when `order | p-1`.
    pub fn element_of_order(&self, order: u64) -> Option<FieldElement> {
        if order == 0 || (self.order() - 1) % order != 0 {
            return None;
        }
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == Some(order))
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.modulus)
    }
}

/// Deterministic trial division; adequate below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// An element of a [`PrimeField`]; the value is always reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn same_field(&self, other: &Self) -> Result<u64, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::MixedFields {
                left: self.field.modulus,
                right: other.field.modulus,
            });
        }
        Ok(self.field.modulus as u64)
    }

    fn with_value(&self, value: u64) -> Self {
        FieldElement {
            value: value as u32,
            field: self.field,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let p = self.same_field(other)?;
        Ok(self.with_value((self.value as u64 + other.value as u64) % p))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        let p = self.same_field(other)?;
        Ok(self.with_value((self.value as u64 + p - other.value as u64) % p))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let p = self.same_field(other)?;
        Ok(self.with_value(self.value as u64 * other.value as u64 % p))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.value == 0 {
            return Err(AlgebraError::ZeroInverse);
        }
        // extended Euclid on (value, p)
        let p = self.field.modulus as i64;
        let (mut r0, mut r1) = (p, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.field.elem(t0))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let p = self.field.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        self.with_value(acc)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.field.modulus)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                match self.$checked(&rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.modulus;
        self.with_value(((p - self.value) % p) as u64)
    }
}

impl Field for FieldElement {
    type Context = PrimeField;

    fn context(&self) -> PrimeField {
        self.field
    }
    fn zero_in(ctx: &PrimeField) -> Self {
        ctx.zero()
    }
    fn one_in(ctx: &PrimeField) -> Self {
        ctx.one()
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + fmt::Debug,
{
    type Context = ();

    fn context(&self) {}
    fn zero_in(_: &()) -> Self {
        Zero::zero()
    }
    fn one_in(_: &()) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
