//! Points of the configuration space `{−1, 1}^W`, seen through finite windows.

use std::collections::BTreeMap;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::lattice::Site;
use crate::pauli::Phase;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool_minus(minus: bool) -> Self {
        if minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn flip(self) -> Self {
        Self::from_bool_minus(!self.is_minus())
    }

    pub fn to_i64(self) -> i64 {
        if self.is_minus() {
            -1
        } else {
            1
        }
    }

    pub fn phase(self) -> Phase {
        Phase::sign(self.is_minus())
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool_minus(self.is_minus() != rhs.is_minus())
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.to_i64() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

/// Anything that assigns signs to (some) keys.
pub trait SignField<K> {
    fn sign_at(&self, key: &K) -> Option<Sign>;
}

/// A total assignment of signs on a finite window of keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    from = "Vec<(K, Sign)>",
    into = "Vec<(K, Sign)>",
    bound(serialize = "K: Serialize + Ord + Clone", deserialize = "K: Deserialize<'de> + Ord")
)]
pub struct Configuration<K: Ord = Site> {
    pub values: BTreeMap<K, Sign>,
}

impl<K: Ord> Default for Configuration<K> {
    fn default() -> Self {
        Self { values: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Configuration<K> {
    pub fn new(values: BTreeMap<K, Sign>) -> Self {
        Self { values }
    }

    pub fn constant<I: IntoIterator<Item = K>>(window: I, s: Sign) -> Self {
        Self { values: window.into_iter().map(|k| (k, s)).collect() }
    }

    pub fn get(&self, k: &K) -> Option<Sign> {
        self.values.get(k).copied()
    }

    pub fn window(&self) -> impl Iterator<Item = &K> {
        self.values.keys()
    }

    pub fn covers<'a, I: IntoIterator<Item = &'a K>>(&self, keys: I) -> bool
    where
        K: 'a,
    {
        keys.into_iter().all(|k| self.values.contains_key(k))
    }

    pub fn restrict<'a, I: IntoIterator<Item = &'a K>>(&self, keys: I) -> Self
    where
        K: 'a,
    {
        Self { values: keys.into_iter().filter_map(|k| self.values.get(k).map(|s| (k.clone(), *s))).collect() }
    }

    /// Keys carrying `−1`.
    pub fn minus_set(&self) -> Vec<K> {
        self.values.iter().filter(|(_, s)| s.is_minus()).map(|(k, _)| k.clone()).collect()
    }
}

impl<K: Ord> From<Vec<(K, Sign)>> for Configuration<K> {
    fn from(v: Vec<(K, Sign)>) -> Self {
        Self { values: v.into_iter().collect() }
    }
}

impl<K: Ord> From<Configuration<K>> for Vec<(K, Sign)> {
    fn from(c: Configuration<K>) -> Self {
        c.values.into_iter().collect()
    }
}

impl<K: Ord> SignField<K> for Configuration<K> {
    fn sign_at(&self, key: &K) -> Option<Sign> {
        self.values.get(key).copied()
    }
}

/// A configuration on all of `W`: explicit values on a finite window and a
/// default sign everywhere else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedConfig {
    pub window: Configuration<Site>,
    pub default: Sign,
}

impl ExtendedConfig {
    pub fn constant(s: Sign) -> Self {
        Self { window: Configuration::default(), default: s }
    }

    pub fn ones() -> Self {
        Self::constant(Sign::Plus)
    }

    pub fn new(window: Configuration<Site>, default: Sign) -> Self {
        Self { window, default }
    }

    pub fn value(&self, w: &Site) -> Sign {
        self.window.get(w).unwrap_or(self.default)
    }
}

impl SignField<Site> for ExtendedConfig {
    fn sign_at(&self, key: &Site) -> Option<Sign> {
        Some(self.value(key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Vertex;

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus.flip(), Sign::Plus);
        assert_eq!(serde_json::to_string(&Sign::Minus).unwrap(), "-1");
    }

    #[test]
    fn extension_rule() {
        let w = Site::Vertex(Vertex::new(0, 0));
        let f = ExtendedConfig::new(Configuration::constant([w], Sign::Minus), Sign::Plus);
        assert_eq!(f.value(&w), Sign::Minus);
        assert_eq!(f.value(&Site::Vertex(Vertex::new(9, 9))), Sign::Plus);
    }
}
