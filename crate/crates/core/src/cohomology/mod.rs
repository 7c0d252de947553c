//! Rack, degenerate and quandle (co)chain complexes and their (co)homology.
//!
//! A `k`-chain basis element is a `k`-tuple of quandle elements. Tuples are
//! encoded as base-`n` integers with the first entry most significant, so
//! index order is lexicographic order.

mod bridge;
pub mod catalog;
mod cochain;
mod groups;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraError, IntegerMatrix};
use crate::quandle::Quandle;

pub use bridge::{
    evaluation_homs, group_cocycle_basis, is_group_2cocycle, pullback_cocycle, quandle_cocycle_from_group_cocycle,
    EvaluationKind,
};
pub use cochain::{coboundary, is_cocycle, Cochain};
pub use groups::{coboundary_witness, cocycle_basis, cohomology, restricted_cohomology, CohomologyGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("degree must be at least 1")]
    BadDegree,
    #[error("{0} tuples are too many to enumerate")]
    TooLarge(u64),
    #[error("the degenerate tuples do not form a subcomplex over a rack")]
    NotSubcomplex,
    #[error("cochain has degree {cochain} on {size} elements, expected degree {degree} on {expected}")]
    ShapeMismatch {
        cochain: usize,
        size: usize,
        degree: usize,
        expected: usize,
    },
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("group cochain is not a group 2-cocycle")]
    NotAGroupCocycle,
    #[error("homomorphism does not apply: {0}")]
    NoHomomorphism(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Quandle(#[from] crate::quandle::QuandleError),
}

/// Which chain complex: all tuples (`R`), degenerate tuples (`D`), or the
/// quotient `Q = R/D` spanned by tuples without equal neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    Rack,
    Degenerate,
    Quandle,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Rack => "R",
            Self::Degenerate => "D",
            Self::Quandle => "Q",
        })
    }
}

/// `n^k`, refusing sizes that cannot be enumerated.
pub(crate) fn tuple_count(n: usize, k: usize) -> Result<usize, CohomologyError> {
    const LIMIT: u64 = 1 << 22;
    let total = (n as u64).checked_pow(k as u32).filter(|&t| t <= LIMIT);
    total.map(|t| t as usize).ok_or(CohomologyError::TooLarge(u64::MAX))
}

pub(crate) fn decode_tuple(n: usize, k: usize, mut index: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for slot in t.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    t
}

pub(crate) fn encode_tuple(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * n + x)
}

pub(crate) fn is_degenerate(t: &[usize]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

/// Ordered basis of `C_k` for one theory.
#[derive(Clone, Debug)]
pub struct ChainBasis {
    n: usize,
    degree: usize,
    theory: Theory,
    indices: Vec<usize>,
    position: Vec<usize>,
}

impl ChainBasis {
    pub fn new(n: usize, degree: usize, theory: Theory) -> Result<Self, CohomologyError> {
        let total = tuple_count(n, degree)?;
        let mut indices = Vec::new();
        let mut position = vec![usize::MAX; total];
        for (idx, pos) in position.iter_mut().enumerate() {
            let keep = match theory {
                Theory::Rack => true,
                Theory::Degenerate => is_degenerate(&decode_tuple(n, degree, idx)),
                Theory::Quandle => !is_degenerate(&decode_tuple(n, degree, idx)),
            };
            if keep {
                *pos = indices.len();
                indices.push(idx);
            }
        }
        Ok(Self {
            n,
            degree,
            theory,
            indices,
            position,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn tuple(&self, i: usize) -> Vec<usize> {
        decode_tuple(self.n, self.degree, self.indices[i])
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(move |i| self.tuple(i))
    }

    /// Position of a full tuple index in this basis.
    pub fn position_of_index(&self, index: usize) -> Option<usize> {
        self.position.get(index).copied().filter(|&p| p != usize::MAX)
    }

    pub(crate) fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// `∂(x_1..x_k)` as `(index of (k-1)-tuple, coefficient)` terms, unreduced.
pub(crate) fn boundary_terms(x: &Quandle, t: &[usize], out: &mut Vec<(usize, i64)>) {
    out.clear();
    let k = t.len();
    if k <= 1 {
        return;
    }
    let n = x.len();
    let mut face = Vec::with_capacity(k - 1);
    for i in 1..k {
        let sign = if i % 2 == 1 { 1 } else { -1 }; // (-1)^(i+1) for 0-based i
        face.clear();
        face.extend(t[..i].iter().copied());
        face.extend(t[i + 1..].iter().copied());
        out.push((encode_tuple(n, &face), sign));
        face.clear();
        face.extend(t[..i].iter().map(|&a| x.op(a, t[i])));
        face.extend(t[i + 1..].iter().copied());
        out.push((encode_tuple(n, &face), -sign));
    }
}

/// `∂(x_1..x_k)` in the rack complex, collected and sorted by tuple.
pub fn boundary_of_tuple(x: &Quandle, t: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut terms = Vec::new();
    boundary_terms(x, t, &mut terms);
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (idx, c) in terms {
        *acc.entry(idx).or_insert(0) += c;
    }
    acc.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(idx, c)| (decode_tuple(x.len(), t.len() - 1, idx), c))
        .collect()
}

/// Matrix of `∂_k : C_k -> C_{k-1}` in the bases of `theory`
/// (rows: `(k-1)`-tuples, columns: `k`-tuples).
pub fn boundary_matrix(x: &Quandle, k: usize, theory: Theory) -> Result<IntegerMatrix, CohomologyError> {
    if k == 0 {
        return Err(CohomologyError::BadDegree);
    }
    if x.is_rack_only() && theory != Theory::Rack {
        return Err(CohomologyError::NotSubcomplex);
    }
    let src = ChainBasis::new(x.len(), k, theory)?;
    let dst = ChainBasis::new(x.len(), k - 1, theory)?;
    let rows = boundary_rows(x, &src, &dst)?;
    let mut m = IntegerMatrix::zeros(dst.len(), src.len());
    for (j, col) in rows.iter().enumerate() {
        for &(i, c) in col {
            m.set(i, j, c.into());
        }
    }
    Ok(m)
}

/// Sparse columns of `∂` between two bases.
pub(crate) fn boundary_rows(
    x: &Quandle,
    src: &ChainBasis,
    dst: &ChainBasis,
) -> Result<Vec<Vec<(usize, i64)>>, CohomologyError> {
    let dst_total = tuple_count(x.len(), dst.degree)?;
    let mut acc = vec![0i64; dst_total];
    let mut terms = Vec::new();
    let mut cols = Vec::with_capacity(src.len());
    for t in src.tuples() {
        boundary_terms(x, &t, &mut terms);
        for &(idx, c) in &terms {
            acc[idx] += c;
        }
        let mut col = Vec::new();
        for &(idx, _) in &terms {
            let c = core::mem::take(&mut acc[idx]);
            if c == 0 {
                continue;
            }
            match dst.position_of_index(idx) {
                Some(p) => col.push((p, c)),
                None if src.theory == Theory::Degenerate => return Err(CohomologyError::NotSubcomplex),
                None => {}
            }
        }
        col.sort_unstable();
        cols.push(col);
    }
    Ok(cols)
}

/// Matrix of `δ^k : C^k -> C^{k+1}`, the transpose of `∂_{k+1}`
/// (rows: `(k+1)`-tuples, columns: `k`-tuples). Entries as `i64` rows.
pub(crate) fn coboundary_rows(x: &Quandle, k: usize, theory: Theory) -> Result<Vec<Vec<i64>>, CohomologyError> {
    if x.is_rack_only() && theory != Theory::Rack {
        return Err(CohomologyError::NotSubcomplex);
    }
    let src = ChainBasis::new(x.len(), k + 1, theory)?;
    let dst = ChainBasis::new(x.len(), k, theory)?;
    let cols = boundary_rows(x, &src, &dst)?;
    Ok(cols
        .into_iter()
        .map(|col| {
            let mut row = vec![0i64; dst.len()];
            for (i, c) in col {
                row[i] = c;
            }
            row
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn builtins() -> Vec<Quandle> {
        vec![
            Quandle::trivial(2),
            Quandle::dihedral(3),
            Quandle::dihedral(4),
            Quandle::s4(),
        ]
    }

    #[test]
    fn boundary_of_pair_in_r3() {
        let r3 = Quandle::dihedral(3);
        let m = boundary_matrix(&r3, 2, Theory::Rack).unwrap();
        // column of (0,1) is (0) - (2)
        let col = m.column(1);
        assert_eq!(col, vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)]);
    }

    #[test]
    fn first_boundary_vanishes() {
        for q in builtins() {
            for th in [Theory::Rack, Theory::Quandle] {
                let m = boundary_matrix(&q, 1, th).unwrap();
                assert_eq!((m.rows(), m.cols()), (1, q.len()));
                assert!(m.is_zero());
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero() {
        for q in builtins() {
            for th in [Theory::Rack, Theory::Degenerate, Theory::Quandle] {
                for k in 2..=4 {
                    let a = boundary_matrix(&q, k - 1, th).unwrap();
                    let b = boundary_matrix(&q, k, th).unwrap();
                    assert!(a.mul(&b).is_zero(), "{th} k={k} n={}", q.len());
                }
            }
        }
    }

    #[test]
    fn degenerate_block_structure() {
        // in tuple order, the rack boundary maps D-columns only into D-rows
        for q in builtins() {
            for k in 2..=4 {
                let m = boundary_matrix(&q, k, Theory::Rack).unwrap();
                let n = q.len();
                for j in 0..m.cols() {
                    if !is_degenerate(&decode_tuple(n, k, j)) {
                        continue;
                    }
                    for i in 0..m.rows() {
                        if !is_degenerate(&decode_tuple(n, k - 1, i)) {
                            assert_eq!(m.get(i, j), &BigInt::from(0));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bases_partition() {
        for k in 0..=3 {
            let r = ChainBasis::new(4, k, Theory::Rack).unwrap();
            let d = ChainBasis::new(4, k, Theory::Degenerate).unwrap();
            let q = ChainBasis::new(4, k, Theory::Quandle).unwrap();
            assert_eq!(r.len(), d.len() + q.len());
            assert!(q.tuples().all(|t| !is_degenerate(&t)));
        }
    }

    #[test]
    fn racks_only_have_the_rack_complex() {
        let t: Vec<Vec<usize>> = (0..3).map(|a| vec![(a + 1) % 3; 3]).collect();
        let rack = Quandle::rack_from_table(&t).unwrap();
        assert!(boundary_matrix(&rack, 2, Theory::Rack).is_ok());
        assert_eq!(boundary_matrix(&rack, 2, Theory::Quandle), Err(CohomologyError::NotSubcomplex));
    }
}
