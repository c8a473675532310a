//! Exact scalar fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use rand::Rng;

/// An exact field. All linear algebra in this crate is generic over it.
pub trait Field:
    Copy
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn characteristic() -> u64;
    /// Number of elements.
    fn order() -> u64;
    /// Stable index in `0..order()`.
    fn to_index(self) -> u64;
    fn from_index(i: u64) -> Self;
    /// Representative in `(-p/2, p/2]`, used for printing.
    fn to_i64(self) -> i64;

    fn elements() -> Vec<Self> {
        (0..Self::order()).map(Self::from_index).collect()
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_index(rng.gen_range(0..Self::order()))
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `Z/P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(is_prime(P), "Fp requires a prime modulus");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = self.0 as u64;
        let mut e = P as u64 - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            e >>= 1;
        }
        Some(Fp(acc as u32))
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v)
    }

    fn characteristic() -> u64 {
        P as u64
    }

    fn order() -> u64 {
        P as u64
    }

    fn to_index(self) -> u64 {
        self.0 as u64
    }

    fn from_index(i: u64) -> Self {
        Self::new(i as i64)
    }

    fn to_i64(self) -> i64 {
        if self.0 as u64 * 2 > P as u64 {
            self.0 as i64 - P as i64
        } else {
            self.0 as i64
        }
    }
}
