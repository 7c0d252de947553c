use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{boundary_terms, decode_tuple, encode_tuple, is_degenerate, tuple_count, ChainBasis, CohomologyError};
use crate::algebra::{AlgebraError, Coefficients};
use crate::quandle::Quandle;

/// An `A`-valued `k`-cochain on an `n`-element quandle, stored densely over
/// all `n^k` tuples in lexicographic order.
///
/// Values are written additively: the cochain `t^(χ_x + 2χ_y)` is stored as
/// `1` at `x` and `2` at `y`. Over `Z/m` values are kept in `[0, m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    n: usize,
    degree: usize,
    coefficients: Coefficients,
    values: Vec<i64>,
    quandle_flag: bool,
}

impl Cochain {
    pub fn zero(n: usize, degree: usize, coefficients: Coefficients) -> Result<Self, CohomologyError> {
        let len = tuple_count(n, degree)?;
        Ok(Self {
            n,
            degree,
            coefficients,
            values: vec![0; len],
            quandle_flag: true,
        })
    }

    /// Dense constructor; `values[i]` belongs to the `i`-th tuple.
    pub fn from_values(
        n: usize,
        degree: usize,
        coefficients: Coefficients,
        values: Vec<i64>,
    ) -> Result<Self, CohomologyError> {
        let len = tuple_count(n, degree)?;
        if values.len() != len {
            return Err(CohomologyError::ShapeMismatch {
                cochain: degree,
                size: values.len(),
                degree,
                expected: len,
            });
        }
        let mut c = Self {
            n,
            degree,
            coefficients,
            values,
            quandle_flag: false,
        };
        c.normalize();
        Ok(c)
    }

    /// `sum c * χ_tuple` over the given terms. All tuples must have the same
    /// length and entries below `n`.
    pub fn from_terms(
        n: usize,
        degree: usize,
        coefficients: Coefficients,
        terms: &[(&[usize], i64)],
    ) -> Result<Self, CohomologyError> {
        let mut c = Self::zero(n, degree, coefficients)?;
        for &(t, v) in terms {
            if t.len() != degree || t.iter().any(|&x| x >= n) {
                return Err(CohomologyError::ShapeMismatch {
                    cochain: t.len(),
                    size: n,
                    degree,
                    expected: n,
                });
            }
            c.values[encode_tuple(n, t)] += v;
        }
        c.normalize();
        Ok(c)
    }

    /// The characteristic cochain `χ_tuple`.
    pub fn characteristic(n: usize, coefficients: Coefficients, tuple: &[usize]) -> Result<Self, CohomologyError> {
        Self::from_terms(n, tuple.len(), coefficients, &[(tuple, 1)])
    }

    fn normalize(&mut self) {
        let c = self.coefficients;
        self.values.iter_mut().for_each(|v| *v = c.reduce(*v));
        let (n, k) = (self.n, self.degree);
        self.quandle_flag = self
            .values
            .iter()
            .enumerate()
            .all(|(i, &v)| v == 0 || !is_degenerate(&decode_tuple(n, k, i)));
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    /// True iff the cochain vanishes on every tuple with equal neighbours.
    pub fn quandle_flag(&self) -> bool {
        self.quandle_flag
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, tuple: &[usize]) -> i64 {
        self.values[encode_tuple(self.n, tuple)]
    }

    #[inline]
    pub fn value_at(&self, index: usize) -> i64 {
        self.values[index]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Nonzero `(tuple, value)` pairs in tuple order.
    pub fn support(&self) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(i, &v)| (decode_tuple(self.n, self.degree, i), v))
    }

    fn check_shape(&self, other: &Self) -> Result<(), CohomologyError> {
        if self.coefficients != other.coefficients {
            return Err(AlgebraError::CoefficientMismatch {
                left: self.coefficients,
                right: other.coefficients,
            }
            .into());
        }
        if self.n != other.n || self.degree != other.degree {
            return Err(CohomologyError::ShapeMismatch {
                cochain: other.degree,
                size: other.n,
                degree: self.degree,
                expected: self.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.check_shape(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Self::from_values(self.n, self.degree, self.coefficients, values)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut c = self.clone();
        c.values.iter_mut().for_each(|v| *v *= s);
        c.normalize();
        c
    }

    /// Reinterprets the values in another coefficient group (reducing mod
    /// `m` when the target is `Z/m`).
    pub fn with_coefficients(&self, coefficients: Coefficients) -> Self {
        let mut c = self.clone();
        c.coefficients = coefficients;
        c.normalize();
        c
    }

    /// Values on the basis of `basis` (same quandle size and degree).
    pub(crate) fn coordinates(&self, basis: &ChainBasis) -> Vec<i64> {
        basis.indices().iter().map(|&i| self.values[i]).collect()
    }

    pub(crate) fn from_coordinates(
        n: usize,
        basis: &ChainBasis,
        coefficients: Coefficients,
        coords: &[i64],
    ) -> Result<Self, CohomologyError> {
        let mut values = vec![0; tuple_count(n, basis.degree())?];
        for (&i, &v) in basis.indices().iter().zip(coords) {
            values[i] = v;
        }
        Self::from_values(n, basis.degree(), coefficients, values)
    }
}

impl fmt::Display for Cochain {
    /// `2χ(0,1) - χ(1,0)`; the zero cochain prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, v) in self.support() {
            let (sign, mag) = if v < 0 { ("-", -v) } else { ("+", v) };
            if first {
                if v < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str("χ(")?;
            for (i, x) in t.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in C^{}(X_{};{})", self, self.degree, self.n, self.coefficients)
    }
}

/// `δf = f ∘ ∂`, a `(k+1)`-cochain over the rack complex.
pub fn coboundary(f: &Cochain, x: &Quandle) -> Result<Cochain, CohomologyError> {
    if f.n != x.len() {
        return Err(CohomologyError::ShapeMismatch {
            cochain: f.degree,
            size: f.n,
            degree: f.degree,
            expected: x.len(),
        });
    }
    let k = f.degree + 1;
    let total = tuple_count(x.len(), k)?;
    let mut terms = Vec::new();
    let values = (0..total)
        .map(|i| {
            boundary_terms(x, &decode_tuple(x.len(), k, i), &mut terms);
            terms.iter().map(|&(j, c)| c * f.values[j]).sum()
        })
        .collect();
    Cochain::from_values(x.len(), k, f.coefficients, values)
}

/// `δf = 0` in `A`. Whether `f` is also a quandle cochain is reported by
/// [`Cochain::quandle_flag`].
pub fn is_cocycle(f: &Cochain, x: &Quandle) -> bool {
    coboundary(f, x).map(|d| d.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn z() -> Coefficients {
        Coefficients::Integers
    }

    /// The explicit degree-2 condition
    /// `φ(p,r) + φ(p*r,q*r) = φ(p,q) + φ(p*q,r)`.
    fn two_cocycle_by_formula(f: &Cochain, x: &Quandle) -> bool {
        let n = x.len();
        let c = f.coefficients();
        (0..n).all(|p| {
            (0..n).all(|q| {
                (0..n).all(|r| {
                    let lhs = f.get(&[p, r]) + f.get(&[x.op(p, r), x.op(q, r)]);
                    let rhs = f.get(&[p, q]) + f.get(&[x.op(p, q), r]);
                    c.reduce(lhs - rhs) == 0
                })
            })
        })
    }

    /// The explicit degree-3 condition.
    fn three_cocycle_by_formula(f: &Cochain, x: &Quandle) -> bool {
        let n = x.len();
        let c = f.coefficients();
        let o = |a, b| x.op(a, b);
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        let lhs = f.get(&[p, q, r]) + f.get(&[o(p, r), o(q, r), s]) + f.get(&[p, r, s]);
                        let rhs = f.get(&[o(p, q), r, s])
                            + f.get(&[p, q, s])
                            + f.get(&[o(p, s), o(q, s), o(r, s)]);
                        if c.reduce(lhs - rhs) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn trivial_quandle_everything_is_a_cocycle() {
        let t = Quandle::trivial(3);
        for k in 1..=3 {
            for i in 0..tuple_count(3, k).unwrap() {
                let c = Cochain::characteristic(3, z(), &decode_tuple(3, k, i)).unwrap();
                assert!(is_cocycle(&c, &t));
            }
        }
    }

    #[test]
    fn r4_sign_convention() {
        // δχ_(0) on R4 is χ(0,1) + χ(0,3) - χ(2,1) - χ(2,3)
        let r4 = Quandle::dihedral(4);
        let d = coboundary(&Cochain::characteristic(4, z(), &[0]).unwrap(), &r4).unwrap();
        let expect = Cochain::from_terms(4, 2, z(), &[(&[0, 1], 1), (&[0, 3], 1), (&[2, 1], -1), (&[2, 3], -1)])
            .unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn flags_and_display() {
        let c = Cochain::from_terms(3, 2, z(), &[(&[0, 1], 2), (&[1, 0], -1)]).unwrap();
        assert!(c.quandle_flag());
        assert_eq!(c.to_string(), "2χ(0,1) - χ(1,0)");
        let d = Cochain::characteristic(3, z(), &[1, 1]).unwrap();
        assert!(!d.quandle_flag());
        let z3 = Coefficients::cyclic(3).unwrap();
        assert_eq!(c.with_coefficients(z3).get(&[1, 0]), 2);
        assert!(c.add(&c.with_coefficients(z3)).is_err());
    }

    fn cochain(n: usize, k: usize, m: Option<u64>) -> impl Strategy<Value = Cochain> {
        let len = n.pow(k as u32);
        proptest::collection::vec(-5i64..6, len).prop_map(move |v| {
            let c = m.map_or(Coefficients::Integers, |m| Coefficients::cyclic(m).unwrap());
            Cochain::from_values(n, k, c, v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn delta_delta_zero_over_z(f in cochain(4, 2, None), g in cochain(3, 3, None)) {
            let s4 = Quandle::s4();
            let dd = coboundary(&coboundary(&f, &s4).unwrap(), &s4).unwrap();
            prop_assert!(dd.is_zero());
            let r3 = Quandle::dihedral(3);
            prop_assert!(is_cocycle(&coboundary(&g, &r3).unwrap(), &r3));
        }

        #[test]
        fn delta_delta_zero_over_zm(f in cochain(4, 1, Some(4)), g in cochain(4, 3, Some(6))) {
            let r4 = Quandle::dihedral(4);
            prop_assert!(is_cocycle(&coboundary(&f, &r4).unwrap(), &r4));
            prop_assert!(is_cocycle(&coboundary(&g, &r4).unwrap(), &r4));
        }

        #[test]
        fn general_check_matches_explicit_conditions(
            f in cochain(3, 2, Some(3)),
            g in cochain(3, 3, Some(3)),
        ) {
            let r3 = Quandle::dihedral(3);
            prop_assert_eq!(is_cocycle(&f, &r3), two_cocycle_by_formula(&f, &r3));
            prop_assert_eq!(is_cocycle(&g, &r3), three_cocycle_by_formula(&g, &r3));
            // coboundaries satisfy the explicit conditions
            let df = coboundary(&f, &r3).unwrap();
            prop_assert!(three_cocycle_by_formula(&df, &r3));
        }
    }
}
