use alloc::collections::BTreeMap;
use core::fmt;

use super::{AlgebraError, Coefficients};

/// Element of the group ring `Z[A]` for a cyclic group `A = <t>`.
///
/// Stored as `exponent -> multiplicity`. With a modulus `m` the exponents are
/// reduced into `[0, m)` (`A = Z/m`); without one they are Laurent exponents
/// (`A = Z`). Zero multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coefficients: Coefficients,
    terms: BTreeMap<i64, i64>,
}

impl GroupRingElement {
    pub fn zero(coefficients: Coefficients) -> Self {
        Self {
            coefficients,
            terms: BTreeMap::new(),
        }
    }

    /// The integer `c` (all mass on the identity exponent).
    pub fn constant(coefficients: Coefficients, c: i64) -> Self {
        Self::monomial(coefficients, c, 0)
    }

    /// `c * t^exponent`
    pub fn monomial(coefficients: Coefficients, c: i64, exponent: i64) -> Self {
        let mut e = Self::zero(coefficients);
        e.add_term(exponent, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(coefficients: Coefficients, terms: I) -> Self {
        let mut e = Self::zero(coefficients);
        for (exp, c) in terms {
            e.add_term(exp, c);
        }
        e
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    /// `(exponent, multiplicity)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        let e = self.coefficients.reduce(exponent);
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Adds `c * t^exponent` in place.
    pub fn add_term(&mut self, exponent: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coefficients.reduce(exponent);
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = Self::zero(self.coefficients);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Sum of multiplicities (the augmentation). For a state-sum this is the
    /// number of colorings.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    /// True iff all mass sits on exponent 0, i.e. the element is an integer.
    pub fn is_trivial(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.coefficients != other.coefficients {
            return Err(AlgebraError::CoefficientMismatch {
                left: self.coefficients,
                right: other.coefficients,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupRingElement {
    /// Renders as `3 + 6t + t^-1`, constant term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: alloc::vec::Vec<(i64, i64)> = self.terms().collect();
        // constant, then positive exponents ascending, then negative descending
        ordered.sort_by_key(|&(e, _)| (e != 0, e < 0, e.abs()));
        for (k, (e, c)) in ordered.into_iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{mag}t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Z[{}]", self, self.coefficients)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn z3() -> Coefficients {
        Coefficients::cyclic(3).unwrap()
    }

    #[test]
    fn identity_product() {
        let a = GroupRingElement::from_terms(Coefficients::Integers, [(0, 3), (1, 6)]);
        let one = GroupRingElement::constant(Coefficients::Integers, 1);
        assert_eq!(a.mul(&one).unwrap(), a);
        assert_eq!(a.to_string(), "3 + 6t");
    }

    #[test]
    fn exponents_wrap() {
        let t2 = GroupRingElement::monomial(z3(), 1, 2);
        assert_eq!(t2.mul(&t2).unwrap(), GroupRingElement::monomial(z3(), 1, 1));
    }

    #[test]
    fn triviality() {
        let a = GroupRingElement::from_terms(Coefficients::Integers, [(0, 8), (1, 8)]);
        assert!(!a.is_trivial());
        assert!(GroupRingElement::constant(Coefficients::Integers, 16).is_trivial());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = GroupRingElement::constant(Coefficients::Integers, 1);
        let b = GroupRingElement::constant(z3(), 1);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn display_laurent() {
        let a = GroupRingElement::from_terms(Coefficients::Integers, [(-1, 2), (0, 23), (1, 2), (2, -1)]);
        assert_eq!(a.to_string(), "23 + 2t - t^2 + 2t^-1");
        assert_eq!(GroupRingElement::zero(z3()).to_string(), "0");
    }

    fn elem(m: Option<u64>) -> impl Strategy<Value = GroupRingElement> {
        proptest::collection::vec((-4i64..5, -3i64..4), 0..5).prop_map(move |t| {
            let c = match m {
                Some(m) => Coefficients::cyclic(m).unwrap(),
                None => Coefficients::Integers,
            };
            GroupRingElement::from_terms(c, t)
        })
    }

    proptest! {
        #[test]
        fn ring_laws_laurent(a in elem(None), b in elem(None), c in elem(None)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn ring_laws_cyclic(a in elem(Some(4)), b in elem(Some(4)), c in elem(Some(4))) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.mul(&b).unwrap().total(), a.total() * b.total());
        }
    }
}
