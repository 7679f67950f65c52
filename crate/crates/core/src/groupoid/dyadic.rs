use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An exact dyadic rational `numerator / 2^exponent` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: i64, exponent: u32) -> Self {
        let mut d = Self { numerator, exponent };
        d.reduce();
        d
    }

    pub fn integer(n: i64) -> Self {
        Self::new(n, 0)
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    fn reduce(&mut self) {
        if self.numerator == 0 {
            self.exponent = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= tz;
        self.exponent -= tz;
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_nonnegative(&self) -> bool {
        self.numerator >= 0
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.numerator * k, self.exponent)
    }

    fn aligned(self, other: Self) -> (i64, i64, u32) {
        let e = self.exponent.max(other.exponent);
        (self.numerator << (e - self.exponent), other.numerator << (e - other.exponent), e)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { numerator: -self.numerator, exponent: self.exponent }
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduced_form() {
        assert_eq!(Dyadic::new(6, 3), Dyadic::new(3, 2));
        assert_eq!(Dyadic::new(0, 9).exponent(), 0);
        assert_eq!(Dyadic::new(8, 2), Dyadic::integer(2));
        assert_eq!(Dyadic::new(-3, 4).to_string(), "-3/2^4");
    }

    proptest! {
        #[test]
        fn field_laws(a in -1000i64..1000, ea in 0u32..12, b in -1000i64..1000, eb in 0u32..12) {
            let (x, y) = (Dyadic::new(a, ea), Dyadic::new(b, eb));
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x + y - y, x);
            // compare against exact rationals
            let rx = num_rational::Rational64::new(a, 1 << ea);
            let ry = num_rational::Rational64::new(b, 1 << eb);
            prop_assert_eq!(x.cmp(&y), rx.cmp(&ry));
            let s = x + y;
            prop_assert_eq!(num_rational::Rational64::new(s.numerator(), 1 << s.exponent()), rx + ry);
        }
    }
}
