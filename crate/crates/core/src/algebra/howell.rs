//! Howell normal form over `Z/m`.
//!
//! Unlike an echelon form, the Howell form of a row space `S` has the
//! property that for every `j`, the rows whose first `j` entries vanish span
//! exactly the vectors of `S` whose first `j` entries vanish. That is what
//! makes kernels over composite moduli computable by elimination.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HowellForm {
    modulus: u64,
    width: usize,
    rows: Vec<Vec<u64>>,
}

impl HowellForm {
    /// Howell form of the row span of `rows` over `Z/modulus`.
    ///
    /// Panics if `modulus < 2` or a row has the wrong width.
    pub fn new(rows: &[Vec<i64>], width: usize, modulus: u64) -> Self {
        assert!(modulus >= 2, "Howell form needs a modulus of at least 2");
        let m = modulus as i128;
        let mut work: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), width, "row width mismatch");
                r.iter().map(|&x| (x as i128).rem_euclid(m) as u64).collect()
            })
            .collect();
        let mut done: Vec<Vec<u64>> = Vec::new();
        for col in 0..width {
            let mut pivot: Option<Vec<u64>> = None;
            let mut rest = Vec::with_capacity(work.len());
            for row in work.drain(..) {
                if row[col] == 0 {
                    rest.push(row);
                    continue;
                }
                match pivot.take() {
                    None => pivot = Some(row),
                    Some(p) => {
                        let (a, b) = (p[col] as i128, row[col] as i128);
                        let e = a.extended_gcd(&b);
                        let (ag, bg) = (a / e.gcd, b / e.gcd);
                        let new_p = combine(&p, &row, e.x, e.y, m);
                        let other = combine(&p, &row, -bg, ag, m);
                        if other.iter().any(|&x| x != 0) {
                            rest.push(other);
                        }
                        pivot = Some(new_p);
                    }
                }
            }
            work = rest;
            let Some(p) = pivot else { continue };
            // scale by a unit so the pivot divides the modulus
            let unit = normalizing_unit(p[col], modulus);
            let mut p = scale(&p, unit as i128, m);
            let g = p[col];
            for prev in done.iter_mut() {
                let q = (prev[col] / g) as i128;
                if q != 0 {
                    let reduced = combine(prev, &p, 1, -q, m);
                    *prev = reduced;
                }
            }
            // the annihilator multiple has a zero at this column and must stay
            // available to later columns
            let ann = scale(&p, (modulus / g) as i128, m);
            if ann.iter().any(|&x| x != 0) {
                work.push(ann);
            }
            p.shrink_to_fit();
            done.push(p);
        }
        Self {
            modulus,
            width,
            rows: done,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Column of the leading nonzero entry of each row.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("Howell rows are nonzero"))
            .collect()
    }

    /// Canonical representative of `v` modulo the row span. Zero iff `v` is
    /// in the span.
    pub fn reduce(&self, v: &[i64]) -> Vec<u64> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let m = self.modulus as i128;
        let mut out: Vec<u64> = v.iter().map(|&x| (x as i128).rem_euclid(m) as u64).collect();
        for (row, col) in self.rows.iter().zip(self.pivots()) {
            let q = (out[col] / row[col]) as i128;
            if q != 0 {
                out = combine(&out, row, 1, -q, m);
            }
        }
        out
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

/// Generators of `{x in (Z/m)^n : a x = 0}` where `a` is given by rows of
/// width `n`.
pub fn kernel_mod(a_rows: &[Vec<i64>], n: usize, modulus: u64) -> Vec<Vec<u64>> {
    let height = a_rows.len();
    // row i of [A^T | I] = (column i of A, e_i)
    let mut aug: Vec<Vec<i64>> = vec![vec![0; height + n]; n];
    for (r, row) in a_rows.iter().enumerate() {
        assert_eq!(row.len(), n, "row width mismatch");
        for (c, &x) in row.iter().enumerate() {
            aug[c][r] = x;
        }
    }
    for (i, row) in aug.iter_mut().enumerate() {
        row[height + i] = 1;
    }
    let hf = HowellForm::new(&aug, height + n, modulus);
    hf.rows
        .iter()
        .zip(hf.pivots())
        .filter(|(_, p)| *p >= height)
        .map(|(r, _)| r[height..].to_vec())
        .collect()
}

fn combine(a: &[u64], b: &[u64], x: i128, y: i128, m: i128) -> Vec<u64> {
    a.iter()
        .zip(b)
        .map(|(&p, &q)| (x * p as i128 + y * q as i128).rem_euclid(m) as u64)
        .collect()
}

fn scale(a: &[u64], x: i128, m: i128) -> Vec<u64> {
    a.iter().map(|&p| (x * p as i128).rem_euclid(m) as u64).collect()
}

/// A unit `u` of `Z/m` with `u * a = gcd(a, m) (mod m)`.
fn normalizing_unit(a: u64, m: u64) -> u64 {
    let g = a.gcd(&m);
    let (a1, m1) = ((a / g) as i128, (m / g) as i128);
    if m1 == 1 {
        return 1;
    }
    let inv = a1.extended_gcd(&m1).x.rem_euclid(m1) as u64;
    (0..g)
        .map(|k| inv + k * m1 as u64)
        .find(|u| u.gcd(&m) == 1)
        .expect("a unit lift always exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    /// All `Z/m`-combinations of the rows (small cases only).
    fn span(rows: &[Vec<u64>], width: usize, m: u64) -> BTreeSet<Vec<u64>> {
        let mut out = BTreeSet::new();
        out.insert(vec![0; width]);
        for r in rows {
            let cur: Vec<Vec<u64>> = out.iter().cloned().collect();
            for v in cur {
                for c in 1..m {
                    out.insert(v.iter().zip(r).map(|(a, b)| (a + c * b) % m).collect());
                }
            }
        }
        out
    }

    fn to_u(rows: &[Vec<i64>], m: u64) -> Vec<Vec<u64>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(m as i64) as u64).collect())
            .collect()
    }

    #[test]
    fn two_over_z4_keeps_span() {
        let hf = HowellForm::new(&[vec![2]], 1, 4);
        assert_eq!(span(hf.rows(), 1, 4), span(&to_u(&[vec![2]], 4), 1, 4));
        assert_eq!(hf.rows(), &[vec![2]]);
    }

    #[test]
    fn identity_is_fixed() {
        let id: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| (i == j) as i64).collect()).collect();
        let hf = HowellForm::new(&id, 3, 6);
        assert_eq!(hf.rows(), &to_u(&id, 6)[..]);
    }

    #[test]
    fn zero_row_dropped() {
        let hf = HowellForm::new(&[vec![0]], 1, 6);
        assert!(hf.rows().is_empty());
    }

    #[test]
    fn howell_property_needs_annihilator_rows() {
        // span of (2, 1) over Z/4 contains (0, 2); an echelon form alone would
        // not expose it
        let hf = HowellForm::new(&[vec![2, 1]], 2, 4);
        assert_eq!(hf.rows(), &[vec![2, 1], vec![0, 2]]);
        assert!(hf.contains(&[0, 2]));
        assert!(!hf.contains(&[0, 1]));
    }

    #[test]
    fn kernel_over_composite_modulus() {
        // 2x = 0 over Z/4 has kernel {0, 2}
        let k = kernel_mod(&[vec![2]], 1, 4);
        assert_eq!(span(&k, 1, 4), [vec![0], vec![2]].into_iter().collect());
    }

    #[test]
    fn random_spans_match_brute_force() {
        let mut seed = 17u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 12) as i64 - 6
        };
        for m in [4u64, 6, 8, 9] {
            for _ in 0..20 {
                let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| next()).collect()).collect();
                let hf = HowellForm::new(&rows, 3, m);
                assert_eq!(span(hf.rows(), 3, m), span(&to_u(&rows, m), 3, m));
                // kernel agrees with brute force
                let k = kernel_mod(&rows, 3, m);
                let ks = span(&k, 3, m);
                for a in 0..m {
                    for b in 0..m {
                        for c in 0..m {
                            let x = [a as i64, b as i64, c as i64];
                            let zero = rows.iter().all(|r| {
                                r.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>().rem_euclid(m as i64) == 0
                            });
                            assert_eq!(zero, ks.contains(&vec![a, b, c]));
                        }
                    }
                }
            }
        }
    }
}
