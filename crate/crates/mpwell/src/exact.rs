//! Exact complex dyadic arithmetic.
//!
//! Every finite `f64` is a dyadic rational `m * 2^e`, so products and sums of
//! `f64` inputs can be carried exactly as big-integer mantissa pairs with a
//! shared power-of-two exponent. The terminating hypergeometric sum is
//! evaluated on this carrier and rounded to `f64` exactly once, which removes
//! the catastrophic cancellation the alternating sum suffers in native
//! precision.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Splits a finite `f64` into `(mantissa, exponent)` with `x = m * 2^e`.
fn decompose(x: f64) -> (BigInt, i64) {
    debug_assert!(x.is_finite());
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let neg = bits >> 63 == 1;
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, exp) = if biased == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), biased - 1075)
    };
    let m = BigInt::from(mant);
    (if neg { -m } else { m }, exp)
}

/// `(re + i im) * 2^exp` with exact integer parts.
#[derive(Clone, Debug)]
pub(crate) struct DyadicComplex {
    re: BigInt,
    im: BigInt,
    exp: i64,
}

impl DyadicComplex {
    pub fn one() -> Self {
        DyadicComplex {
            re: BigInt::one(),
            im: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(k: i64) -> Self {
        DyadicComplex {
            re: BigInt::from(k),
            im: BigInt::zero(),
            exp: 0,
        }
    }

    /// Exact embedding of a finite complex double.
    pub fn from_c64(z: Complex64) -> Self {
        let (mr, er) = decompose(z.re);
        let (mi, ei) = decompose(z.im);
        let e = if mr.is_zero() {
            ei
        } else if mi.is_zero() {
            er
        } else {
            er.min(ei)
        };
        DyadicComplex {
            re: mr << (er - e) as u64,
            im: mi << (ei - e) as u64,
            exp: e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = self.exp.min(other.exp);
        DyadicComplex {
            re: (&self.re << (self.exp - e) as u64) + (&other.re << (other.exp - e) as u64),
            im: (&self.im << (self.exp - e) as u64) + (&other.im << (other.exp - e) as u64),
            exp: e,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        DyadicComplex {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
            exp: self.exp + other.exp,
        }
    }

    pub fn conj(&self) -> Self {
        DyadicComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
            exp: self.exp,
        }
    }

    /// `|z|^2` as `(integer, exponent)`; the integer is non-negative.
    pub fn norm_sqr(&self) -> (BigInt, i64) {
        (&self.re * &self.re + &self.im * &self.im, 2 * self.exp)
    }

    /// Rounds `self / (den * 2^{den_exp})` to complex `f64`, `den > 0`.
    pub fn div_round(&self, den: &BigInt, den_exp: i64) -> Complex64 {
        let e = self.exp - den_exp;
        Complex64::new(ratio_to_f64(&self.re, den, e), ratio_to_f64(&self.im, den, e))
    }
}

/// Correctly rounded `num / den * 2^exp2` (round half to even); `den > 0`.
///
/// The quotient is computed with 56 significant bits and the remainder is
/// folded into a sticky bit, so the final `u64 -> f64` conversion performs the
/// one and only rounding step. Overflow saturates to infinity, deep underflow
/// to zero (values entering the subnormal range may round twice there).
pub(crate) fn ratio_to_f64(num: &BigInt, den: &BigInt, exp2: i64) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    debug_assert!(den.sign() == num_bigint::Sign::Plus);
    let mag = num.magnitude();
    let den_mag = den.magnitude();
    let nb = mag.bits() as i64;
    let db = den_mag.bits() as i64;
    let s = 56 + db - nb;
    let (mut q, r) = if s >= 0 {
        (mag << s as u64).div_rem(den_mag)
    } else {
        mag.div_rem(&(den_mag << (-s) as u64))
    };
    if !r.is_zero() {
        q |= BigUint::one();
    }
    // q holds 55..=57 bits, small enough for u64 and wide enough that the
    // conversion below rounds the true ratio correctly.
    let v = q.to_u64().expect("quotient exceeds 57 bits") as f64;
    let v = if num.sign() == num_bigint::Sign::Minus {
        -v
    } else {
        v
    };
    ldexp(v, exp2 - s)
}

/// `x * 2^e` by exact power-of-two multiplies, chunked to stay in range.
pub(crate) fn ldexp(x: f64, e: i64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mut v = x;
    let mut e = e;
    while e > 0 {
        let step = e.min(1000);
        v *= 2f64.powi(step as i32);
        if v.is_infinite() {
            return v;
        }
        e -= step;
    }
    while e < 0 {
        let step = (-e).min(1000);
        v *= 2f64.powi(-(step as i32));
        if v == 0.0 {
            return v;
        }
        e += step;
    }
    v
}
