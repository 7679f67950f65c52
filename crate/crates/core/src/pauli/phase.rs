use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Serialize};

use crate::scalar::{gaussian, Gaussian};

/// A fourth root of unity, stored as the exponent of `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub const fn from_power(k: u32) -> Self {
        Phase((k % 4) as u8)
    }

    /// `(-1)^k`.
    pub const fn sign(odd: bool) -> Self {
        if odd {
            Self::MINUS_ONE
        } else {
            Self::ONE
        }
    }

    pub const fn power(self) -> u8 {
        self.0
    }

    pub fn inverse(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    pub fn conj(self) -> Self {
        self.inverse()
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn to_gaussian(self) -> Gaussian {
        match self.0 {
            0 => gaussian(1, 0),
            1 => gaussian(0, 1),
            2 => gaussian(-1, 0),
            _ => gaussian(0, -1),
        }
    }

    /// Inverse of [`Phase::to_gaussian`] on the four units.
    pub fn from_gaussian(z: &Gaussian) -> Option<Self> {
        [Self::ONE, Self::I, Self::MINUS_ONE, Self::MINUS_I].into_iter().find(|p| p.to_gaussian() == *z)
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;

    fn neg(self) -> Phase {
        self * Phase::MINUS_ONE
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        })
    }
}

impl TryFrom<String> for Phase {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        match s.as_str() {
            "1" => Ok(Self::ONE),
            "i" => Ok(Self::I),
            "-1" => Ok(Self::MINUS_ONE),
            "-i" => Ok(Self::MINUS_I),
            _ => Err(format!("not a phase: {s}")),
        }
    }
}

impl From<Phase> for String {
    fn from(p: Phase) -> String {
        p.to_string()
    }
}
