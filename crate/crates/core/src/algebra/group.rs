use alloc::vec::Vec;

use super::AlgebraError;

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table exhaustively and derives identity and inverses.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(AlgebraError::MalformedTable);
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
            .ok_or(AlgebraError::NotAGroup("no identity element"))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| flat[a * n + b] == identity && flat[b * n + a] == identity)
                    .ok_or(AlgebraError::NotAGroup("missing inverse"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let g = Self {
            order: n,
            table: flat,
            identity,
            inverse,
        };
        if !g.verify() {
            return Err(AlgebraError::NotAGroup("multiplication is not associative"));
        }
        Ok(g)
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(&table).expect("cyclic table is a group")
    }

    /// Direct product, element `(a, b)` encoded as `a * |h| + b`.
    pub fn direct_product(g: &Self, h: &Self) -> Self {
        let (m, n) = (g.order, h.order);
        let table: Vec<Vec<usize>> = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n))
                    .collect()
            })
            .collect();
        Self::from_table(&table).expect("product of groups is a group")
    }

    /// Symmetric group on `k` letters. Elements are the permutations of
    /// `0..k` in lexicographic order; the product `p * q` applies `p` first,
    /// then `q`.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq: Vec<usize> = (0..k).map(|i| q[p[i]]).collect();
                        index(&pq)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(&table).expect("permutation table is a group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of associativity, identity and inverse laws.
    pub fn verify(&self) -> bool {
        verify_group_table(self.order, &self.table)
            && (0..self.order).all(|a| {
                self.mul(self.identity, a) == a
                    && self.mul(a, self.identity) == a
                    && self.mul(a, self.inverse[a]) == self.identity
                    && self.mul(self.inverse[a], a) == self.identity
            })
    }
}

/// Checks whether a raw table (row-major, `n x n`) is a group table.
pub fn verify_group(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return false;
    }
    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    verify_group_table(n, &flat)
        && (0..n).any(|e| {
            (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a)
                && (0..n).all(|a| (0..n).any(|b| flat[a * n + b] == e && flat[b * n + a] == e))
        })
}

fn verify_group_table(n: usize, t: &[usize]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = t[a * n + b];
            (0..n).all(|c| t[ab * n + c] == t[a * n + t[b * n + c]])
        })
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cyclic_two() {
        assert!(verify_group(&[vec![0, 1], vec![1, 0]]));
        assert!(FiniteGroup::cyclic(2).verify());
    }

    #[test]
    fn broken_associativity() {
        // identity 0, every element self-inverse, but (1*2)*3 != 1*(2*3)
        let t = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 2],
            vec![3, 2, 1, 0],
        ];
        assert!(!verify_group(&t));
        assert!(FiniteGroup::from_table(&t).is_err());
    }

    #[test]
    fn symmetric_three() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        assert!(g.verify());
        assert!(!g.is_abelian());
        // three transpositions, two 3-cycles, identity
        let involutions = (0..6).filter(|&a| a != g.identity() && g.mul(a, a) == g.identity()).count();
        assert_eq!(involutions, 3);
    }

    #[test]
    fn klein_four() {
        let v = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(v.verify() && v.is_abelian());
        assert!((0..4).all(|a| v.mul(a, a) == v.identity()));
    }
}
