//! Named cocycles on the small quandles.
//!
//! Element indices follow the constructors in [`crate::quandle`]: `R_n` and
//! `T_n` are `0..n`; `S_4` uses the relation-table labels, so the Alexander
//! element `1+T` is `2` and `T` is `3`.

use alloc::vec::Vec;

use super::{bridge::evaluation_homs, pullback_cocycle, Cochain};
use crate::algebra::Coefficients;

fn build(n: usize, degree: usize, c: Coefficients, terms: &[(&[usize], i64)]) -> Cochain {
    Cochain::from_terms(n, degree, c, terms).expect("catalog terms are well formed")
}

/// The 3-cocycle generating `H^3(R_3; Z_3)`:
/// `-χ(0,1,0) + χ(0,2,0) - χ(0,2,1) + χ(1,0,1) + χ(1,0,2) + χ(2,0,2) + χ(2,1,2)`.
pub fn eta1(c: Coefficients) -> Cochain {
    build(
        3,
        3,
        c,
        &[
            (&[0, 1, 0], -1),
            (&[0, 2, 0], 1),
            (&[0, 2, 1], -1),
            (&[1, 0, 1], 1),
            (&[1, 0, 2], 1),
            (&[2, 0, 2], 1),
            (&[2, 1, 2], 1),
        ],
    )
}

/// The same class written with `+2χ(0,2,1)`; equal to [`eta1`] mod 3 only.
pub fn eta1_alternate(c: Coefficients) -> Cochain {
    build(
        3,
        3,
        c,
        &[
            (&[0, 1, 0], -1),
            (&[0, 2, 0], 1),
            (&[0, 2, 1], 2),
            (&[1, 0, 1], 1),
            (&[1, 0, 2], 1),
            (&[2, 0, 2], 1),
            (&[2, 1, 2], 1),
        ],
    )
}

/// The four 3-coboundaries `η_2 .. η_5` on `R_3` (index `i` in `2..=5`).
pub fn eta(i: usize, c: Coefficients) -> Option<Cochain> {
    let terms: &[(&[usize], i64)] = match i {
        2 => &[(&[0, 1, 0], -1), (&[0, 2, 1], 1), (&[1, 0, 1], -1), (&[1, 2, 0], 1)],
        3 => &[
            (&[0, 1, 0], 1),
            (&[0, 1, 2], 1),
            (&[0, 2, 0], -1),
            (&[0, 2, 1], -1),
            (&[1, 0, 2], -1),
            (&[1, 2, 1], 1),
        ],
        4 => &[
            (&[0, 1, 0], 1),
            (&[0, 1, 2], 1),
            (&[0, 2, 0], -1),
            (&[0, 2, 1], -1),
            (&[2, 0, 1], 1),
            (&[2, 1, 2], -1),
        ],
        5 => &[(&[0, 1, 2], 1), (&[0, 2, 0], -1), (&[2, 0, 2], -1), (&[2, 1, 0], 1)],
        _ => return None,
    };
    Some(build(3, 3, c, terms))
}

/// Sparse 3-cochain as (tuple, coefficient) terms.
pub type SparseTerms = Vec<([usize; 3], i64)>;

/// `δχ_(a,b)` on `R_3` written out term by term, for the six pairs with
/// `a != b` in lexicographic order.
pub fn r3_degree_two_coboundaries() -> Vec<((usize, usize), SparseTerms)> {
    type Row = ((usize, usize), &'static [([usize; 3], i64)]);
    let table: [Row; 6] = [
        ((0, 1), &[([0, 1, 0], -1), ([0, 1, 2], -1), ([0, 2, 0], 1), ([0, 2, 1], 1), ([1, 0, 2], 1), ([1, 2, 1], -1)]),
        ((0, 2), &[([0, 1, 0], 1), ([0, 1, 2], 1), ([0, 2, 0], -1), ([0, 2, 1], -1), ([2, 0, 1], 1), ([2, 1, 2], -1)]),
        ((1, 0), &[([0, 1, 2], 1), ([0, 2, 0], -1), ([1, 0, 1], -1), ([1, 0, 2], -1), ([1, 2, 0], 1), ([1, 2, 1], 1)]),
        ((1, 2), &[([1, 0, 1], 1), ([1, 0, 2], 1), ([1, 2, 0], -1), ([1, 2, 1], -1), ([2, 0, 2], -1), ([2, 1, 0], 1)]),
        ((2, 0), &[([0, 1, 0], -1), ([0, 2, 1], 1), ([2, 0, 1], -1), ([2, 0, 2], -1), ([2, 1, 0], 1), ([2, 1, 2], 1)]),
        ((2, 1), &[([1, 0, 1], -1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([2, 0, 2], 1), ([2, 1, 0], -1), ([2, 1, 2], -1)]),
    ];
    table.iter().map(|(p, t)| (*p, t.to_vec())).collect()
}

/// `f_(a,b) = χ(a,b) + χ(a,b+2)` on `R_4`, for `a` and `b` of different
/// parity.
pub fn r4_pair_cocycle(a: usize, b: usize) -> Cochain {
    build(4, 2, Coefficients::Integers, &[(&[a, b], 1), (&[a, (b + 2) % 4], 1)])
}

/// `λ_1 = f_(0,1)` on `R_4` over `Z`.
pub fn lambda1() -> Cochain {
    r4_pair_cocycle(0, 1)
}

/// `λ_2 = f_(2,1)` on `R_4` over `Z`.
pub fn lambda2() -> Cochain {
    r4_pair_cocycle(2, 1)
}

/// The `Z_2`-valued 2-cocycle on `S_4`:
/// `χ(0,1) + χ(1,0) + χ(1+T,0) + χ(0,1+T) + χ(1,1+T) + χ(1+T,1)`.
pub fn phi_s4() -> Cochain {
    let z2 = Coefficients::Cyclic(2);
    let one_plus_t = 2;
    build(
        4,
        2,
        z2,
        &[
            (&[0, 1], 1),
            (&[1, 0], 1),
            (&[one_plus_t, 0], 1),
            (&[0, one_plus_t], 1),
            (&[1, one_plus_t], 1),
            (&[one_plus_t, 1], 1),
        ],
    )
}

/// `χ(a,b)` on the trivial quandle `T_n`.
pub fn trivial_pair(n: usize, a: usize, b: usize, c: Coefficients) -> Cochain {
    build(n, 2, c, &[(&[a, b], 1)])
}

/// On `Z_3[T,T^-1]/(T^2-1)`: `φ_(0,1) + 2φ_(0,2) + 3φ_(1,2)`, where
/// `φ_(i,j)` is the pullback of `χ(i,j)` along `f(T) -> f(1)` onto `T_3`.
pub fn alexander_example() -> Cochain {
    let (_, p) = evaluation_homs(3, &[-1, 0, 1])
        .expect("Z3[T]/(T^2-1) is a quandle")
        .into_iter()
        .next()
        .expect("3 divides h(1)");
    let z = Coefficients::Integers;
    let mut phi = Cochain::zero(9, 2, z).expect("81 pairs");
    for (i, j, w) in [(0, 1, 1), (0, 2, 2), (1, 2, 3)] {
        let pulled = pullback_cocycle(&p, &trivial_pair(3, i, j, z)).expect("shapes agree");
        phi = phi.add(&pulled.scale(w)).expect("same shape");
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{coboundary, coboundary_witness, cohomology, is_cocycle, Theory};
    use crate::quandle::Quandle;

    #[test]
    fn eta1_is_a_mod_three_class_only() {
        let r3 = Quandle::dihedral(3);
        let z3 = Coefficients::cyclic(3).unwrap();
        assert!(is_cocycle(&eta1(z3), &r3));
        assert!(!is_cocycle(&eta1(Coefficients::Integers), &r3));
        assert!(coboundary_witness(&eta1(z3), &r3).unwrap().is_none());
        assert_eq!(eta1(z3), eta1_alternate(z3));
        assert_ne!(eta1(Coefficients::Integers), eta1_alternate(Coefficients::Integers));
    }

    #[test]
    fn eta_two_to_five_are_coboundaries() {
        let r3 = Quandle::dihedral(3);
        for i in 2..=5 {
            let e = eta(i, Coefficients::Integers).unwrap();
            assert!(is_cocycle(&e, &r3));
            assert!(coboundary_witness(&e, &r3).unwrap().is_some(), "eta{i}");
        }
        assert!(eta(6, Coefficients::Integers).is_none());
    }

    #[test]
    fn r3_coboundary_table() {
        let r3 = Quandle::dihedral(3);
        let z = Coefficients::Integers;
        for ((a, b), terms) in r3_degree_two_coboundaries() {
            let d = coboundary(&Cochain::characteristic(3, z, &[a, b]).unwrap(), &r3).unwrap();
            let listed: Vec<(&[usize], i64)> = terms.iter().map(|(t, v)| (&t[..], *v)).collect();
            assert_eq!(d, Cochain::from_terms(3, 3, z, &listed).unwrap(), "δχ({a},{b})");
        }
    }

    #[test]
    fn named_two_cocycles() {
        let r4 = Quandle::dihedral(4);
        for (a, b) in [(0, 1), (2, 1), (1, 0), (3, 0)] {
            assert!(is_cocycle(&r4_pair_cocycle(a, b), &r4));
        }
        assert!(is_cocycle(&phi_s4(), &Quandle::s4()));
        assert!(coboundary_witness(&phi_s4(), &Quandle::s4()).unwrap().is_none());
        let alex = Quandle::alexander(3, &[-1, 0, 1]).unwrap();
        let phi = alexander_example();
        assert!(is_cocycle(&phi, &alex) && phi.quandle_flag());
    }

    #[test]
    fn r4_representatives_span_the_pair_cocycles() {
        // the reported basis and the four f's generate the same lattice
        // modulo coboundaries
        let r4 = Quandle::dihedral(4);
        let g = cohomology(&r4, 2, Theory::Quandle, Coefficients::Integers).unwrap();
        let fs = [(0, 1), (2, 1), (1, 0), (3, 0)].map(|(a, b)| r4_pair_cocycle(a, b));
        let reps = g.representatives();
        let in_span = |target: &Cochain, gens: &[Cochain]| -> bool {
            // small coefficient search suffices at this size
            let range = -3i64..=3;
            let k = gens.len();
            let mut idx = alloc::vec![-3i64; k];
            loop {
                let mut c = target.clone();
                for (g, &s) in gens.iter().zip(&idx) {
                    c = c.sub(&g.scale(s)).unwrap();
                }
                if coboundary_witness(&c, &r4).unwrap().is_some() {
                    return true;
                }
                let mut j = 0;
                while j < k {
                    idx[j] += 1;
                    if range.contains(&idx[j]) {
                        break;
                    }
                    idx[j] = -3;
                    j += 1;
                }
                if j == k {
                    return false;
                }
            }
        };
        for f in &fs {
            assert!(in_span(f, reps));
        }
        for r in reps {
            assert!(in_span(r, &fs));
        }
    }
}
