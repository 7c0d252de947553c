//! Finite quandles (and racks) as operation tables.
//!
//! Elements are always `0..n`. Constructors that have a natural notation for
//! their elements (Alexander quandles, for instance) attach display labels,
//! but all comparisons are by table.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::algebra::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuandleError {
    #[error("operation table is not square")]
    NotSquare,
    #[error("table entry {value} at ({a},{b}) is out of range")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("axiom I fails at a={a}: a*a = {value}")]
    Idempotence { a: usize, value: usize },
    #[error("axiom II fails at b={b}: {a1}*b = {a2}*b")]
    RightInvertibility { b: usize, a1: usize, a2: usize },
    #[error("axiom III fails at (a,b,c)=({a},{b},{c})")]
    SelfDistributivity { a: usize, b: usize, c: usize },
    #[error("Alexander quandle needs modulus >= 2, got {0}")]
    AlexanderModulus(u64),
    #[error("polynomial must have degree >= 1 with leading and constant coefficients invertible mod {modulus}")]
    AlexanderPolynomial { modulus: u64 },
    #[error("{0} elements do not fit in an operation table")]
    TooLarge(u64),
    #[error("subset is not closed under the operation")]
    NotClosed,
    #[error("map is not a quandle homomorphism at ({a},{b})")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("map has wrong length or out-of-range image")]
    MalformedMap,
}

/// A finite quandle: `op[a][b] = a*b`, `inv_op[a][b] = a*̄b` (the unique `c`
/// with `c*b = a`).
///
/// Racks (axioms II and III without idempotence) are representable too;
/// [`Quandle::is_rack_only`] reports them.
#[derive(Clone, Debug)]
pub struct Quandle {
    n: usize,
    op: Vec<usize>,
    inv_op: Vec<usize>,
    rack_only: bool,
    labels: Option<Vec<String>>,
}

impl PartialEq for Quandle {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.op == other.op
    }
}

impl Eq for Quandle {}

impl Quandle {
    /// Validates a quandle table. Axioms are checked in order I, II, III and
    /// the first violation is reported with a witness.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let mut q = Self::build(table)?;
        if let Some(a) = (0..q.n).find(|&a| q.op(a, a) != a) {
            return Err(QuandleError::Idempotence { a, value: q.op(a, a) });
        }
        q.check_rack_axioms()?;
        Ok(q)
    }

    /// Accepts racks: axioms II and III are required, idempotence is not.
    pub fn rack_from_table(table: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let mut q = Self::build(table)?;
        q.check_rack_axioms()?;
        q.rack_only = (0..q.n).any(|a| q.op(a, a) != a);
        Ok(q)
    }

    fn build(table: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = table.len();
        if table.iter().any(|r| r.len() != n) {
            return Err(QuandleError::NotSquare);
        }
        for (a, row) in table.iter().enumerate() {
            if let Some((b, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(QuandleError::OutOfRange { a, b, value });
            }
        }
        Ok(Self {
            n,
            op: table.iter().flatten().copied().collect(),
            inv_op: vec![usize::MAX; n * n],
            rack_only: false,
            labels: None,
        })
    }

    fn check_rack_axioms(&mut self) -> Result<(), QuandleError> {
        let n = self.n;
        for b in 0..n {
            let mut seen = vec![usize::MAX; n];
            for a in 0..n {
                let c = self.op(a, b);
                if seen[c] != usize::MAX {
                    return Err(QuandleError::RightInvertibility { b, a1: seen[c], a2: a });
                }
                seen[c] = a;
                self.inv_op[c * n + b] = a;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(self.op(a, c), self.op(b, c)) {
                        return Err(QuandleError::SelfDistributivity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, QuandleError> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::from_table(&table)
    }

    /// Trivial quandle `T_n`: `x*y = x`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |a, _| a).expect("trivial table is a quandle")
    }

    /// Dihedral quandle `R_n`: `i*j = 2j - i (mod n)`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_fn(n, |i, j| (2 * j + n - i) % n.max(1)).expect("dihedral table is a quandle")
    }

    /// The four-element quandle `S_4` (rotations of the faces of a
    /// tetrahedron), transcribed from its relation table.
    pub fn s4() -> Self {
        // value v = a*b for each listed (a, b)
        const RELATIONS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 2), (2, 3), (3, 1)],
            [(0, 3), (1, 1), (2, 0), (3, 2)],
            [(0, 1), (1, 3), (2, 2), (3, 0)],
            [(0, 2), (1, 0), (2, 1), (3, 3)],
        ];
        let mut table = vec![vec![0; 4]; 4];
        for (v, pairs) in RELATIONS.iter().enumerate() {
            for &(a, b) in pairs {
                table[a][b] = v;
            }
        }
        Self::from_table(&table).expect("S4 table is a quandle")
    }

    /// Conjugation quandle of a group: `a*b = b^-k a b^k`.
    pub fn conjugation(g: &FiniteGroup, k: i64) -> Self {
        Self::from_fn(g.order(), |a, b| g.mul(g.mul(g.pow(b, -k), a), g.pow(b, k)))
            .expect("conjugation tables are quandles")
    }

    /// Alexander quandle `Z_n[T, T^-1]/(h(T))` with `a*b = T a + (1-T) b`.
    ///
    /// `h` lists coefficients from the constant term upward. Elements are the
    /// residues of degree `< deg h` with coefficients in `[0, n)`; the
    /// element `sum a_i T^i` has index `sum a_i n^i`.
    pub fn alexander(n: u64, h: &[i64]) -> Result<Self, QuandleError> {
        if n < 2 {
            return Err(QuandleError::AlexanderModulus(n));
        }
        let ni = n as i64;
        let mut h: Vec<i64> = h.iter().map(|c| c.rem_euclid(ni)).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        let bad = || QuandleError::AlexanderPolynomial { modulus: n };
        if h.len() < 2 {
            return Err(bad());
        }
        let d = h.len() - 1;
        let lead = h[d];
        if lead.gcd(&ni) != 1 || h[0].gcd(&ni) != 1 {
            return Err(bad());
        }
        let size = n.checked_pow(d as u32).filter(|&s| s <= 1 << 16).ok_or(QuandleError::TooLarge(n))?;
        let size = size as usize;
        let lead_inv = lead.extended_gcd(&ni).x.rem_euclid(ni);
        let decode = |mut idx: usize| -> Vec<i64> {
            (0..d)
                .map(|_| {
                    let c = (idx % n as usize) as i64;
                    idx /= n as usize;
                    c
                })
                .collect()
        };
        let encode = |c: &[i64]| -> usize { c.iter().rev().fold(0, |acc, &x| acc * n as usize + x as usize) };
        // T * p, reduced with T^d = -lead^-1 (h_0 + ... + h_{d-1} T^{d-1})
        let times_t = |p: &[i64]| -> Vec<i64> {
            let top = p[d - 1];
            let mut out = vec![0i64; d];
            out[1..d].copy_from_slice(&p[..d - 1]);
            for (i, o) in out.iter_mut().enumerate() {
                *o = (*o - top * lead_inv % ni * h[i]).rem_euclid(ni);
            }
            out
        };
        let elems: Vec<Vec<i64>> = (0..size).map(decode).collect();
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| (x - y).rem_euclid(ni)).collect();
                        let t = times_t(&diff);
                        let sum: Vec<i64> = t.iter().zip(b).map(|(x, y)| (x + y).rem_euclid(ni)).collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let mut q = Self::from_table(&table)?;
        q.labels = Some(elems.iter().map(|c| poly_label(c)).collect());
        Ok(q)
    }

    /// The subquandle on `elements` (renumbered `0..k` in the given order).
    pub fn subquandle(&self, elements: &[usize]) -> Result<Self, QuandleError> {
        let pos = |x: usize| elements.iter().position(|&e| e == x);
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let row = elements
                .iter()
                .map(|&b| pos(self.op(a, b)).ok_or(QuandleError::NotClosed))
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row);
        }
        Self::rack_from_table(&table)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `a*b`
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b]
    }

    /// `a*̄b`, the unique `c` with `c*b = a`.
    #[inline]
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_op[a * self.n + b]
    }

    pub fn is_rack_only(&self) -> bool {
        self.rack_only
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.n.max(1)).take(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    /// Index of the element labelled `label`, if labels are attached.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Smallest subset containing `seeds` and closed under `*`.
    pub fn closure(&self, seeds: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        let mut members: Vec<usize> = Vec::new();
        for &s in seeds {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let snapshot = members.len();
            for j in 0..snapshot.max(i + 1) {
                let b = members[j];
                for c in [self.op(a, b), self.op(b, a)] {
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                    }
                }
            }
            i += 1;
        }
        inside
    }

    /// A small generating set, found greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.n];
        for a in 0..self.n {
            if !inside[a] {
                gens.push(a);
                inside = self.closure(&gens);
            }
        }
        gens
    }
}

fn poly_label(c: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in c.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let coeff = if x == 1 && i > 0 { String::new() } else { x.to_string() };
        parts.push(match i {
            0 => coeff,
            1 => format!("{coeff}T"),
            _ => format!("{coeff}T^{i}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// A homomorphism `f` with `f(a*b) = f(a)*f(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleHom {
    source: Quandle,
    target: Quandle,
    map: Vec<usize>,
}

impl QuandleHom {
    pub fn new(source: Quandle, target: Quandle, map: Vec<usize>) -> Result<Self, QuandleError> {
        if map.len() != source.len() || map.iter().any(|&x| x >= target.len()) {
            return Err(QuandleError::MalformedMap);
        }
        for a in 0..source.len() {
            for b in 0..source.len() {
                if map[source.op(a, b)] != target.op(map[a], map[b]) {
                    return Err(QuandleError::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(q: &Quandle) -> Self {
        Self {
            source: q.clone(),
            target: q.clone(),
            map: (0..q.len()).collect(),
        }
    }

    pub fn source(&self) -> &Quandle {
        &self.source
    }

    pub fn target(&self) -> &Quandle {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut hit = vec![false; self.target.len()];
        self.map.iter().all(|&x| !core::mem::replace(&mut hit[x], true))
    }
}

/// All homomorphisms `x -> y`, in lexicographic order of the images of a
/// greedy generating set of `x`.
pub fn find_homs(x: &Quandle, y: &Quandle) -> Vec<QuandleHom> {
    let gens = x.generators();
    let mut out = Vec::new();
    if y.is_empty() {
        if x.is_empty() {
            out.push(QuandleHom::new(x.clone(), y.clone(), Vec::new()).expect("empty map"));
        }
        return out;
    }
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_from_generators(x, y, &gens, &images) {
            out.push(QuandleHom {
                source: x.clone(),
                target: y.clone(),
                map,
            });
        }
        // odometer over y^|gens|
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            images[k] += 1;
            if images[k] < y.len() {
                break;
            }
            images[k] = 0;
        }
    }
}

fn extend_from_generators(x: &Quandle, y: &Quandle, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = x.len();
    let mut f = vec![usize::MAX; n];
    for (&g, &img) in gens.iter().zip(images) {
        f[g] = img;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..n {
            if f[a] == usize::MAX {
                continue;
            }
            for b in 0..n {
                if f[b] == usize::MAX {
                    continue;
                }
                let c = x.op(a, b);
                let fc = y.op(f[a], f[b]);
                if f[c] == usize::MAX {
                    f[c] = fc;
                    changed = true;
                } else if f[c] != fc {
                    return None;
                }
            }
        }
    }
    if f.contains(&usize::MAX) {
        return None;
    }
    let ok = (0..n).all(|a| (0..n).all(|b| f[x.op(a, b)] == y.op(f[a], f[b])));
    ok.then_some(f)
}

/// A bijective homomorphism `x -> y`, if one exists.
pub fn is_isomorphic(x: &Quandle, y: &Quandle) -> Option<QuandleHom> {
    if x.len() != y.len() {
        return None;
    }
    find_homs(x, y).into_iter().find(QuandleHom::is_bijective)
}
