//! Maps into quandle cohomology: pullbacks along homomorphisms, the
//! evaluation maps of Alexander quandles, and group 2-cocycles.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::groups::kernel_generators;
use super::{decode_tuple, encode_tuple, Cochain, CohomologyError};
use crate::algebra::{Coefficients, FiniteGroup};
use crate::quandle::{Quandle, QuandleHom};

/// `(h^# f)(x_1..x_k) = f(h(x_1)..h(x_k))`.
pub fn pullback_cocycle(h: &QuandleHom, f: &Cochain) -> Result<Cochain, CohomologyError> {
    let (src, dst) = (h.source().len(), h.target().len());
    if f.size() != dst {
        return Err(CohomologyError::ShapeMismatch {
            cochain: f.degree(),
            size: f.size(),
            degree: f.degree(),
            expected: dst,
        });
    }
    let k = f.degree();
    let total = super::tuple_count(src, k)?;
    let values = (0..total)
        .map(|i| {
            let image: Vec<usize> = decode_tuple(src, k, i).into_iter().map(|a| h.apply(a)).collect();
            f.value_at(encode_tuple(dst, &image))
        })
        .collect();
    Cochain::from_values(src, k, f.coefficients(), values)
}

/// Which evaluation of an Alexander quandle `Z_n[T,T^-1]/(h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvaluationKind {
    /// `f(T) -> f(1)` onto the trivial quandle `T_n`; needs `n | h(1)`.
    AtOne,
    /// `f(T) -> f(-1)` onto the dihedral quandle `R_n`; needs `n | h(-1)`.
    AtMinusOne,
}

/// The evaluation surjections that exist for `(n, h)`.
pub fn evaluation_homs(n: u64, h: &[i64]) -> Result<Vec<(EvaluationKind, QuandleHom)>, CohomologyError> {
    let source = Quandle::alexander(n, h)?;
    let ni = n as i64;
    let at = |s: i64| -> i64 {
        h.iter().rev().fold(0i64, |acc, &c| (acc * s + c).rem_euclid(ni))
    };
    let digits = |mut idx: usize| -> Vec<i64> {
        let mut out = Vec::new();
        while idx > 0 {
            out.push((idx % n as usize) as i64);
            idx /= n as usize;
        }
        out
    };
    let mut out = Vec::new();
    for (kind, s, target) in [
        (EvaluationKind::AtOne, 1i64, Quandle::trivial(n as usize)),
        (EvaluationKind::AtMinusOne, -1i64, Quandle::dihedral(n as usize)),
    ] {
        if at(s) != 0 {
            continue;
        }
        let map: Vec<usize> = (0..source.len())
            .map(|idx| {
                let v = digits(idx).iter().rev().fold(0i64, |acc, &c| acc * s + c);
                v.rem_euclid(ni) as usize
            })
            .collect();
        out.push((kind, QuandleHom::new(source.clone(), target, map)?));
    }
    Ok(out)
}

/// `α(x,y) + α(xy,z) = α(x,yz) + α(y,z)` for all triples, in `A`.
/// `alpha[x * |G| + y]` holds `α(x, y)`.
pub fn is_group_2cocycle(g: &FiniteGroup, alpha: &[i64], coefficients: Coefficients) -> bool {
    let n = g.order();
    if alpha.len() != n * n {
        return false;
    }
    let a = |x: usize, y: usize| alpha[x * n + y];
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                coefficients.reduce(a(x, y) + a(g.mul(x, y), z) - a(x, g.mul(y, z)) - a(y, z)) == 0
            })
        })
    })
}

/// Generators of the group 2-cocycles `G x G -> A` (over `Z/m` the
/// generators are reduced representatives).
pub fn group_cocycle_basis(g: &FiniteGroup, coefficients: Coefficients) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut rows = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vec![0i64; n * n];
                row[x * n + y] += 1;
                row[g.mul(x, y) * n + z] += 1;
                row[x * n + g.mul(y, z)] -= 1;
                row[y * n + z] -= 1;
                if row.iter().any(|&v| v != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let gens = kernel_generators(&rows, n * n, coefficients);
    let m = coefficients.modulus();
    gens.into_iter()
        .map(|v: Vec<BigInt>| {
            v.iter()
                .map(|x| {
                    let x = x.to_i64().expect("cocycle entries fit");
                    coefficients.reduce(x)
                })
                .collect::<Vec<i64>>()
        })
        .filter(|v| m.is_none() || v.iter().any(|&x| x != 0))
        .collect()
}

/// `φ(p,q) = α(p,q) - α(q, q^-1 p q)` on the conjugation quandle of `G`
/// with `p*q = q^-1 p q`.
pub fn quandle_cocycle_from_group_cocycle(
    g: &FiniteGroup,
    alpha: &[i64],
    coefficients: Coefficients,
) -> Result<Cochain, CohomologyError> {
    if !is_group_2cocycle(g, alpha, coefficients) {
        return Err(CohomologyError::NotAGroupCocycle);
    }
    let n = g.order();
    let values = (0..n * n)
        .map(|i| {
            let (p, q) = (i / n, i % n);
            let conj = g.mul(g.mul(g.inv(q), p), q);
            alpha[p * n + q] - alpha[q * n + conj]
        })
        .collect();
    Cochain::from_values(n, 2, coefficients, values)
}
