//! Classical links as closed braids: colorings, 2-cocycle state-sums and
//! the closed forms in terms of linking numbers.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::algebra::{Coefficients, GroupRingElement};
use crate::cohomology::{is_cocycle, Cochain};
use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },
    #[error("cannot parse braid letter {0:?}")]
    Parse(String),
    #[error("cochain must be a 2-cocycle")]
    NotACocycle,
    #[error("cocycle must vanish on the diagonal")]
    Degenerate,
    #[error("cochain lives on {cochain} elements but the quandle has {quandle}")]
    SizeMismatch { cochain: usize, quandle: usize },
    #[error("{0} colorings are too many to enumerate")]
    TooLarge(u64),
    #[error("linking number {0} is odd")]
    OddLinking(i64),
    #[error("weight table must be {k} x {k}")]
    BadWeights { k: usize },
}

/// A braid word on `strands` strands. Letter `i > 0` is `σ_i`, letter
/// `-i` is `σ_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self, KnotError> {
        if strands == 0 {
            return Err(KnotError::NoStrands);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(KnotError::LetterOutOfRange { letter, strands });
        }
        Ok(Self { strands, letters })
    }

    /// Strand count inferred as the largest generator index plus one.
    pub fn from_letters(letters: Vec<i64>) -> Result<Self, KnotError> {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands, letters)
    }

    /// Parses signed integers separated by whitespace or commas.
    pub fn parse(s: &str, strands: Option<usize>) -> Result<Self, KnotError> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| KnotError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        match strands {
            Some(m) => Self::new(m, letters),
            None => Self::from_letters(letters),
        }
    }

    pub fn identity(strands: usize) -> Result<Self, KnotError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// `(generator index, sign)` pairs.
    pub fn generators(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.letters.iter().map(|&l| (l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 }))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` followed by `other`, on the larger strand count.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    /// `w self w^-1`.
    pub fn conjugate_by(&self, w: &Self) -> Self {
        w.concat(self).concat(&w.inverse())
    }

    /// Markov stabilization: add a strand and the letter `σ_m^{±1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let m = self.strands as i64;
        let mut letters = self.letters.clone();
        letters.push(if positive { m } else { -m });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// `perm[p]` is the bottom position of the strand starting at top
    /// position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for (i, _) in self.generators() {
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Pushes the colors `top` down through the braid.
///
/// `σ_i` maps the colors `(a, b)` at positions `(i, i+1)` to `(b, a*b)`;
/// `σ_i^-1` maps them to `(b *̄ a, a)`.
pub fn propagate(b: &BraidWord, x: &Quandle, top: &[usize]) -> Vec<usize> {
    let mut c = top.to_vec();
    for (i, s) in b.generators() {
        apply_letter(x, &mut c, i - 1, s);
    }
    c
}

#[inline]
fn apply_letter(x: &Quandle, c: &mut [usize], p: usize, sign: i8) {
    let (a, bb) = (c[p], c[p + 1]);
    if sign > 0 {
        c[p] = bb;
        c[p + 1] = x.op(a, bb);
    } else {
        c[p] = x.inv_op(bb, a);
        c[p + 1] = a;
    }
}

/// `|X|^m`, the number of candidate top tuples.
pub fn candidate_count(b: &BraidWord, x: &Quandle) -> Result<usize, KnotError> {
    (x.len() as u64)
        .checked_pow(b.strands() as u32)
        .filter(|&t| t <= 1 << 26)
        .map(|t| t as usize)
        .ok_or(KnotError::TooLarge(u64::MAX))
}

fn decode(n: usize, m: usize, mut idx: usize, out: &mut [usize]) {
    for slot in out[..m].iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

/// Top tuples fixed by the braid, i.e. colorings of the closure.
pub fn colorings(b: &BraidWord, x: &Quandle) -> Result<Vec<Vec<usize>>, KnotError> {
    let total = candidate_count(b, x)?;
    Ok(colorings_in(b, x, 0..total))
}

/// Colorings whose top tuple index (base `|X|`, first strand most
/// significant) lies in `range`.
pub fn colorings_in(b: &BraidWord, x: &Quandle, range: Range<usize>) -> Vec<Vec<usize>> {
    let m = b.strands();
    let mut top = vec![0; m];
    let mut out = Vec::new();
    if x.is_empty() {
        return out;
    }
    for idx in range {
        decode(x.len(), m, idx, &mut top);
        if propagate(b, x, &top) == top {
            out.push(top.clone());
        }
    }
    out
}

/// Rejects cochains that would not give an invariant.
pub fn check_state_sum_inputs(x: &Quandle, phi: &Cochain) -> Result<(), KnotError> {
    if phi.size() != x.len() {
        return Err(KnotError::SizeMismatch {
            cochain: phi.size(),
            quandle: x.len(),
        });
    }
    if phi.degree() != 2 || !is_cocycle(phi, x) {
        return Err(KnotError::NotACocycle);
    }
    if !phi.quandle_flag() {
        return Err(KnotError::Degenerate);
    }
    Ok(())
}

/// `Φ(L) = Σ_C Π_τ φ(...)^{ε(τ)}` over colorings of the closure of `b`.
pub fn state_sum(b: &BraidWord, x: &Quandle, phi: &Cochain) -> Result<GroupRingElement, KnotError> {
    check_state_sum_inputs(x, phi)?;
    let total = candidate_count(b, x)?;
    Ok(state_sum_in(b, x, phi, 0..total))
}

/// The part of the state-sum coming from top tuples with index in
/// `range`. Inputs are not validated; see [`check_state_sum_inputs`].
pub fn state_sum_in(b: &BraidWord, x: &Quandle, phi: &Cochain, range: Range<usize>) -> GroupRingElement {
    let coeff = phi.coefficients();
    let mut acc = GroupRingElement::zero(coeff);
    let m = b.strands();
    let n = x.len();
    let mut top = vec![0; m];
    let mut c = vec![0; m];
    for idx in range {
        decode(n, m, idx, &mut top);
        c.copy_from_slice(&top);
        let mut exponent = 0i64;
        for (i, s) in b.generators() {
            let p = i - 1;
            let (a, bb) = (c[p], c[p + 1]);
            if s > 0 {
                exponent += phi.get(&[a, bb]);
            } else {
                exponent -= phi.get(&[x.inv_op(bb, a), a]);
            }
            apply_letter(x, &mut c, p, s);
        }
        if c == top {
            acc.add_term(coeff.reduce(exponent), 1);
        }
    }
    acc
}

/// Components of the closure and their pairwise linking numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linking {
    /// Top positions of each component, components ordered by their
    /// smallest position.
    pub components: Vec<Vec<usize>>,
    /// Symmetric, zero diagonal.
    pub matrix: Vec<Vec<i64>>,
}

impl Linking {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, position: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&position))
            .expect("every position lies on a component")
    }

    /// `lk(A, B)` for disjoint sets of components.
    pub fn between(&self, a: &[usize], b: &[usize]) -> i64 {
        a.iter().flat_map(|&i| b.iter().map(move |&j| (i, j))).map(|(i, j)| self.matrix[i][j]).sum()
    }

    /// Sum over unordered pairs.
    pub fn total(&self) -> i64 {
        let n = self.component_count();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.matrix[i][j]).sum()
    }
}

/// Half the signed count of crossings between distinct components.
pub fn linking_matrix(b: &BraidWord) -> Linking {
    let perm = b.permutation();
    let m = b.strands();
    let mut comp = vec![usize::MAX; m];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut cycle = Vec::new();
        let mut p = start;
        while comp[p] == usize::MAX {
            comp[p] = id;
            cycle.push(p);
            p = perm[p];
        }
        cycle.sort_unstable();
        components.push(cycle);
    }
    let k = components.len();
    let mut twice = vec![vec![0i64; k]; k];
    let mut at: Vec<usize> = (0..m).collect();
    for (i, s) in b.generators() {
        let (u, v) = (comp[at[i - 1]], comp[at[i]]);
        if u != v {
            twice[u][v] += s as i64;
            twice[v][u] += s as i64;
        }
        at.swap(i - 1, i);
    }
    let matrix = twice.iter().map(|r| r.iter().map(|&x| x / 2).collect()).collect();
    Linking { components, matrix }
}

/// Closed form over `T_k` with `φ = Σ_{i≠j} w[i][j] χ(i,j)`: a sum over
/// colorings of components of `Π_{i≠j} t^{lk(A_i, A_j) w[i][j]}`.
pub fn oracle_tk(link: &Linking, weights: &[Vec<i64>]) -> Result<GroupRingElement, KnotError> {
    let k = weights.len();
    if weights.iter().any(|r| r.len() != k) || k == 0 {
        return Err(KnotError::BadWeights { k });
    }
    let n = link.component_count();
    let mut acc = GroupRingElement::zero(Coefficients::Integers);
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= 1 << 24).ok_or(KnotError::TooLarge(u64::MAX))?;
    let mut color = vec![0usize; n];
    for code in 0..total as usize {
        decode(k, n, code, &mut color);
        let mut exponent = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v && color[u] != color[v] {
                    exponent += link.matrix[u][v] * weights[color[u]][color[v]];
                }
            }
        }
        acc.add_term(exponent, 1);
    }
    Ok(acc)
}

/// [`oracle_tk`] for `T_2` with `φ = χ(0,1)`.
pub fn oracle_t2(link: &Linking) -> GroupRingElement {
    oracle_tk(link, &[vec![0, 1], vec![0, 0]]).expect("2 x 2 weights")
}

/// Closed form over `R_4` with `φ = u λ_1 + v λ_2`:
/// `2^n Σ_{A ⊆ K} t^{(u+v) lk(A, K∖A) / 2}`. Needs every pairwise linking
/// number even.
pub fn oracle_r4(link: &Linking, u: i64, v: i64) -> Result<GroupRingElement, KnotError> {
    let n = link.component_count();
    for row in &link.matrix {
        if let Some(&odd) = row.iter().find(|&&l| l % 2 != 0) {
            return Err(KnotError::OddLinking(odd));
        }
    }
    if n > 20 {
        return Err(KnotError::TooLarge(1 << n));
    }
    let mut acc = GroupRingElement::zero(Coefficients::Integers);
    for mask in 0..(1usize << n) {
        let a: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        acc.add_term((u + v) * link.between(&a, &b) / 2, 1 << n);
    }
    Ok(acc)
}

/// Braid words for a few small knots, used by tests and the CLI.
pub fn named_knot(name: &str) -> Option<BraidWord> {
    let (strands, letters): (usize, &[i64]) = match name {
        "3_1" | "trefoil" => (2, &[1, 1, 1]),
        "4_1" | "figure8" => (3, &[1, -2, 1, -2]),
        "5_1" => (2, &[1, 1, 1, 1, 1]),
        "5_2" => (3, &[1, 1, 1, 2, -1, 2]),
        "hopf" => (2, &[1, 1]),
        _ => return None,
    };
    BraidWord::new(strands, letters.to_vec()).ok()
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;
    use super::*;
    use crate::cohomology::catalog;

    fn word(m: usize, l: &[i64]) -> BraidWord {
        BraidWord::new(m, l.to_vec()).unwrap()
    }

    #[test]
    fn parsing() {
        let b = BraidWord::parse("1 1 1", None).unwrap();
        assert_eq!((b.strands(), b.len()), (2, 3));
        let b = BraidWord::parse("1,-2", None).unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(BraidWord::parse("", None).unwrap().strands(), 1);
        assert!(BraidWord::parse("1 x", None).is_err());
        assert!(BraidWord::parse("0", None).is_err());
        assert!(BraidWord::parse("3", Some(3)).is_err());
        assert_eq!(b.to_string(), "1 -2");
    }

    #[test]
    fn propagation_rules() {
        let r3 = Quandle::dihedral(3);
        assert_eq!(propagate(&word(2, &[1]), &r3, &[0, 1]), vec![1, 2]);
        for a in 0..3 {
            assert_eq!(propagate(&word(2, &[1]), &r3, &[a, a]), vec![a, a]);
        }
        let s4 = Quandle::s4();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(propagate(&word(2, &[-1, 1]), &s4, &[a, b]), vec![a, b]);
                assert_eq!(propagate(&word(2, &[1, -1]), &s4, &[a, b]), vec![a, b]);
            }
        }
    }

    #[test]
    fn coloring_counts() {
        let trefoil = named_knot("3_1").unwrap();
        assert_eq!(colorings(&trefoil, &Quandle::s4()).unwrap().len(), 16);
        assert_eq!(colorings(&trefoil, &Quandle::dihedral(3)).unwrap().len(), 9);
        assert_eq!(colorings(&word(2, &[1, 1, 1, 1]), &Quandle::dihedral(4)).unwrap().len(), 16);
        for n in 1..4 {
            assert_eq!(colorings(&trefoil, &Quandle::trivial(n)).unwrap().len(), n);
            assert_eq!(colorings(&word(3, &[]), &Quandle::trivial(n)).unwrap().len(), n * n * n);
        }
    }

    #[test]
    fn linking_numbers() {
        assert_eq!(linking_matrix(&word(2, &[1, 1])).matrix, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(linking_matrix(&word(2, &[1, 1, 1, 1])).matrix[0][1], 2);
        assert_eq!(linking_matrix(&word(2, &[-1, -1])).matrix[0][1], -1);
        let knot = linking_matrix(&word(2, &[1, 1, 1]));
        assert_eq!(knot.component_count(), 1);
        assert_eq!(knot.matrix, vec![vec![0]]);
        assert_eq!(linking_matrix(&word(3, &[])).component_count(), 3);
    }

    #[test]
    fn anchor_values() {
        let s4 = Quandle::s4();
        let phi = catalog::phi_s4();
        for name in ["3_1", "4_1"] {
            let v = state_sum(&named_knot(name).unwrap(), &s4, &phi).unwrap();
            assert_eq!(v.to_string(), "4 + 12t", "{name}");
        }
        let r4 = Quandle::dihedral(4);
        let v = state_sum(&word(2, &[1, 1, 1, 1]), &r4, &catalog::lambda1()).unwrap();
        assert_eq!(v.to_string(), "8 + 8t");
        let t2 = Quandle::trivial(2);
        let hopf = state_sum(&word(2, &[1, 1]), &t2, &catalog::trivial_pair(2, 0, 1, Coefficients::Integers)).unwrap();
        assert_eq!(hopf.to_string(), "2 + 2t");
    }

    #[test]
    fn rejects_bad_cochains() {
        let r3 = Quandle::dihedral(3);
        let not_cocycle = Cochain::characteristic(3, Coefficients::Integers, &[0, 1]).unwrap();
        assert_eq!(state_sum(&word(2, &[1]), &r3, &not_cocycle), Err(KnotError::NotACocycle));
        let diag = Cochain::characteristic(2, Coefficients::Integers, &[0, 0]).unwrap();
        assert_eq!(state_sum(&word(2, &[1]), &Quandle::trivial(2), &diag), Err(KnotError::Degenerate));
    }

    #[test]
    fn oracles() {
        let hopf = linking_matrix(&word(2, &[1, 1, 1, 1]));
        assert_eq!(oracle_t2(&hopf).to_string(), "2 + 2t^2");
        assert_eq!(oracle_r4(&hopf, 1, 0).unwrap().to_string(), "8 + 8t");
        assert_eq!(oracle_t2(&linking_matrix(&word(2, &[1, 1, 1]))).to_string(), "2");
        assert_eq!(oracle_r4(&linking_matrix(&word(2, &[1, 1])), 1, 0), Err(KnotError::OddLinking(1)));
    }

    #[test]
    fn partial_sums_add_up() {
        let b = named_knot("5_2").unwrap();
        let s4 = Quandle::s4();
        let phi = catalog::phi_s4();
        let whole = state_sum(&b, &s4, &phi).unwrap();
        let mut acc = GroupRingElement::zero(phi.coefficients());
        for r in [0..10, 10..40, 40..64] {
            acc = acc.add(&state_sum_in(&b, &s4, &phi, r)).unwrap();
        }
        assert_eq!(acc, whole);
    }
}
