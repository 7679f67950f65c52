//! Exact Gaussian rationals.

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// `a + b i` with rational `a`, `b`.
pub type Gaussian = Complex<Rational64>;

pub fn gaussian(re: i64, im: i64) -> Gaussian {
    Complex::new(Rational64::from_integer(re), Rational64::from_integer(im))
}

pub fn real(r: Rational64) -> Gaussian {
    Complex::new(r, Rational64::zero())
}

pub fn zero() -> Gaussian {
    Gaussian::zero()
}

pub fn one() -> Gaussian {
    Gaussian::one()
}

/// `1 / 2^k`.
pub fn inv_pow2(k: u32) -> Gaussian {
    real(Rational64::new(1, 1i64 << k))
}
