use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition};

/// The bases in which skew Schur functions are expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Schur,
    /// Fundamental quasisymmetric functions.
    F,
    /// Monomial quasisymmetric functions.
    M,
    /// Quasisymmetric Schur functions.
    S,
    /// Dual immaculate functions.
    D,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::Schur, Basis::F, Basis::M, Basis::S, Basis::D];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::F => "f",
            Basis::M => "m",
            Basis::S => "s",
            Basis::D => "d",
        }
    }

    /// Symbol used when printing terms.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::F => "F",
            Basis::M => "M",
            Basis::S => "S",
            Basis::D => "D",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "schur" => Ok(Basis::Schur),
            "f" => Ok(Basis::F),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            "d" => Ok(Basis::D),
            _ => Err(Error::Parse { input: s.to_string(), reason: "unknown basis".into() }),
        }
    }
}

/// A linear combination with exact integer coefficients, keyed by
/// compositions or partitions. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<K: Ord> {
    basis: Basis,
    size: usize,
    coeffs: BTreeMap<K, i64>,
}

/// Expansion in one of the quasisymmetric bases F, M, S, D.
pub type QsymExpansion = Expansion<Composition>;

/// Expansion in the Schur basis.
pub type SymExpansion = Expansion<Partition>;

pub(crate) trait Key: Ord + Clone + fmt::Display {
    fn key_size(&self) -> usize;
}

impl Key for Composition {
    fn key_size(&self) -> usize {
        self.size()
    }
}

impl Key for Partition {
    fn key_size(&self) -> usize {
        self.size()
    }
}

#[allow(private_bounds)]
impl<K: Key> Expansion<K> {
    pub fn zero(basis: Basis, size: usize) -> Self {
        Expansion { basis, size, coeffs: BTreeMap::new() }
    }

    /// Builds an expansion, dropping zero terms and checking key sizes.
    pub fn from_terms<I: IntoIterator<Item = (K, i64)>>(basis: Basis, size: usize, terms: I) -> Result<Self> {
        let mut e = Self::zero(basis, size);
        for (k, c) in terms {
            e.add_term(k, c)?;
        }
        Ok(e)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Degree of every term.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_term(&mut self, key: K, c: i64) -> Result<()> {
        if key.key_size() != self.size {
            return Err(Error::InternalConsistency(format!(
                "term {key} has size {} in an expansion of size {}",
                key.key_size(),
                self.size
            )));
        }
        if c == 0 {
            return Ok(());
        }
        let slot = self.coeffs.entry(key.clone()).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.coeffs.remove(&key);
        }
        Ok(())
    }

    pub fn coeff(&self, key: &K) -> i64 {
        self.coeffs.get(key).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, i64)> {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    /// Number of nonzero terms; emptiness is `is_zero`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Keys with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.coeffs.keys()
    }

    /// Keys with positive coefficient.
    pub fn positive_support(&self) -> impl Iterator<Item = &K> {
        self.coeffs.iter().filter(|(_, &c)| c > 0).map(|(k, _)| k)
    }

    /// All coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Nonzero support of `self` contains that of `other`.
    pub fn support_contains(&self, other: &Self) -> bool {
        other.coeffs.keys().all(|k| self.coeffs.contains_key(k))
    }

    /// Positive support of `self` contains that of `other`.
    pub fn positive_support_contains(&self, other: &Self) -> bool {
        other.positive_support().all(|k| self.coeff(k) > 0)
    }

    /// `self - other`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis || self.size != other.size {
            return Err(Error::SizeMismatch { left: self.size, right: other.size });
        }
        let mut out = self.clone();
        for (k, &c) in &other.coeffs {
            out.add_term(k.clone(), c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// `true` if every coefficient is 0 or 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.coeffs.values().all(|&c| c == 1)
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl<K: Key> fmt::Display for Expansion<K> {
    /// Human-readable form such as `F_{3,1} + 2F_{2,2} - F_{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{}_{{{k}}}", self.basis.symbol())?;
        }
        Ok(())
    }
}

impl<K: Key> Serialize for Expansion<K> {
    /// A map from the comma form of each key to its coefficient, keys in
    /// lexicographic order of their parts.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.coeffs.len()))?;
        for (k, c) in &self.coeffs {
            m.serialize_entry(&k.to_string(), c)?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition;

    #[test]
    fn zero_terms_are_dropped() {
        let mut e = QsymExpansion::zero(Basis::D, 4);
        e.add_term(composition!("22"), 1).unwrap();
        e.add_term(composition!("13"), -1).unwrap();
        e.add_term(composition!("22"), -1).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&composition!("13")), -1);
        assert!(!e.is_nonnegative());
        assert!(e.add_term(composition!("5"), 1).is_err());
    }

    #[test]
    fn display_and_json() {
        let e = QsymExpansion::from_terms(Basis::D, 4, [(composition!("22"), 1), (composition!("13"), -1)]).unwrap();
        assert_eq!(e.to_string(), "-D_{1,3} + D_{2,2}");
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"1,3":-1,"2,2":1}"#);
    }

    #[test]
    fn overflow_is_reported() {
        let mut e = QsymExpansion::zero(Basis::F, 1);
        e.add_term(composition!("1"), i64::MAX).unwrap();
        assert_eq!(e.add_term(composition!("1"), 1), Err(Error::Overflow));
    }
}
