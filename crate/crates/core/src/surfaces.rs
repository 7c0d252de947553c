//! Knotted surfaces given by surface-braid presentations, 3-cocycle
//! state-sums over white vertices, and triple point linking.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::algebra::{Coefficients, GroupRingElement};
use crate::cohomology::{is_cocycle, Cochain};
use crate::knots::{BraidWord, KnotError};
use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("braid words must have {degree} strands")]
    StrandMismatch { degree: usize },
    #[error("relation index {k} out of range 1..={max}")]
    RelationIndex { k: usize, max: usize },
    #[error("white vertex index {i} out of range 1..={max}")]
    VertexIndex { i: usize, max: usize },
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("cochain must be a 3-cocycle")]
    NotACocycle,
    #[error("cocycle must vanish on tuples with equal neighbours")]
    Degenerate,
    #[error("cochain lives on {cochain} elements but the quandle has {quandle}")]
    SizeMismatch { cochain: usize, quandle: usize },
    #[error("{0} candidate colorings are too many to enumerate")]
    TooLarge(u64),
    #[error("triple linking data needs component labels in 1..={n}")]
    ComponentOutOfRange { n: usize },
    #[error(transparent)]
    Braid(#[from] KnotError),
}

/// A relation `Q(w)(x_k) = Q(w)(x_{k+1})` coming from the braid system
/// entry `w^-1 σ_k^ε w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub word: BraidWord,
    pub k: usize,
    pub eps: i8,
}

/// A white vertex reached by the path with braid word `beta`; its triple
/// sits at positions `i, i+1, i+2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteVertex {
    pub beta: BraidWord,
    pub i: usize,
    pub eps: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceBraidPresentation {
    degree: usize,
    relations: Vec<Relation>,
    white_vertices: Vec<WhiteVertex>,
}

fn sign(e: i64) -> Result<i8, SurfaceError> {
    match e {
        1 => Ok(1),
        -1 => Ok(-1),
        _ => Err(SurfaceError::BadSign(e)),
    }
}

impl SurfaceBraidPresentation {
    /// Relations as `(w, k, ε)` and white vertices as `(β, i, ε)`, with
    /// words given as signed letters on `degree` strands.
    pub fn new(
        degree: usize,
        relations: &[(&[i64], usize, i64)],
        white_vertices: &[(&[i64], usize, i64)],
    ) -> Result<Self, SurfaceError> {
        let relations = relations
            .iter()
            .map(|&(w, k, e)| {
                Ok(Relation {
                    word: BraidWord::new(degree, w.to_vec())?,
                    k,
                    eps: sign(e)?,
                })
            })
            .collect::<Result<Vec<_>, SurfaceError>>()?;
        let white_vertices = white_vertices
            .iter()
            .map(|&(b, i, e)| {
                Ok(WhiteVertex {
                    beta: BraidWord::new(degree, b.to_vec())?,
                    i,
                    eps: sign(e)?,
                })
            })
            .collect::<Result<Vec<_>, SurfaceError>>()?;
        Self::from_parts(degree, relations, white_vertices)
    }

    pub fn from_parts(
        degree: usize,
        relations: Vec<Relation>,
        white_vertices: Vec<WhiteVertex>,
    ) -> Result<Self, SurfaceError> {
        for r in &relations {
            if r.word.strands() != degree {
                return Err(SurfaceError::StrandMismatch { degree });
            }
            if r.k == 0 || r.k >= degree {
                return Err(SurfaceError::RelationIndex {
                    k: r.k,
                    max: degree.saturating_sub(1),
                });
            }
            sign(r.eps as i64)?;
        }
        for w in &white_vertices {
            if w.beta.strands() != degree {
                return Err(SurfaceError::StrandMismatch { degree });
            }
            if w.i == 0 || w.i + 2 > degree {
                return Err(SurfaceError::VertexIndex {
                    i: w.i,
                    max: degree.saturating_sub(2),
                });
            }
            sign(w.eps as i64)?;
        }
        Ok(Self {
            degree,
            relations,
            white_vertices,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn white_vertices(&self) -> &[WhiteVertex] {
        &self.white_vertices
    }
}

pub const TWIST_SPUN_TREFOIL: &str = "TWIST_SPUN_TREFOIL";
pub const TWIST_SPUN_TREFOIL_REVERSED: &str = "TWIST_SPUN_TREFOIL_REVERSED";

/// The degree-4 presentation of the 2-twist spun trefoil.
pub fn twist_spun_trefoil() -> SurfaceBraidPresentation {
    SurfaceBraidPresentation::new(
        4,
        &[
            (&[], 2, -1),
            (&[-2, -2, 1], 1, 1),
            (&[-2, -2, 1], 3, -1),
            (&[-2, 1, 3], 3, 1),
            (&[-2, 1, 3], 1, -1),
            (&[-1, 3], 2, 1),
        ],
        &[
            (&[1], 1, 1),
            (&[-2, 1], 1, 1),
            (&[-2, 1], 2, 1),
            (&[1, 3], 2, -1),
            (&[1, 3], 1, -1),
            (&[3], 1, -1),
        ],
    )
    .expect("preset is well formed")
}

/// The mirror chart, describing the 2-twist spun trefoil with reversed
/// orientation.
pub fn twist_spun_trefoil_reversed() -> SurfaceBraidPresentation {
    SurfaceBraidPresentation::new(
        4,
        &[
            (&[1, -3], 2, 1),
            (&[2, -1, -3], 1, -1),
            (&[2, -1, -3], 3, 1),
            (&[2, 2, -1], 3, -1),
            (&[2, 2, -1], 1, 1),
            (&[], 2, -1),
        ],
        &[
            (&[1, 1, -3], 1, -1),
            (&[2, 2, -1, -3], 1, -1),
            (&[2, 2, -1, -3], 2, -1),
            (&[2, 2, 2, -1], 2, 1),
            (&[2, 2, 2, -1], 1, 1),
            (&[1], 1, 1),
        ],
    )
    .expect("preset is well formed")
}

pub fn builtin_presets() -> Vec<(&'static str, SurfaceBraidPresentation)> {
    vec![
        (TWIST_SPUN_TREFOIL, twist_spun_trefoil()),
        (TWIST_SPUN_TREFOIL_REVERSED, twist_spun_trefoil_reversed()),
    ]
}

pub fn preset(name: &str) -> Option<SurfaceBraidPresentation> {
    builtin_presets().into_iter().find(|(n, _)| *n == name).map(|(_, p)| p)
}

/// Evaluates the free-quandle automorphism `Q(b)` on a color tuple: entry
/// `j` of the result is `Q(b)(x_j)` with `x` replaced by `tuple`.
///
/// For one letter, `σ_i` puts `c_{i+1} *̄ c_i` at `i` and `c_i` at `i+1`;
/// `σ_i^-1` puts `c_{i+1}` at `i` and `c_i * c_{i+1}` at `i+1`. Since
/// `Q(b_1 b_2) = Q(b_1) ∘ Q(b_2)` on generators, the letters of a word act
/// on tuples from last to first.
pub fn surface_tuple_action(b: &BraidWord, x: &Quandle, tuple: &[usize]) -> Vec<usize> {
    let mut c = tuple.to_vec();
    act_in_place(b, x, &mut c);
    c
}

fn act_in_place(b: &BraidWord, x: &Quandle, c: &mut [usize]) {
    for &l in b.letters().iter().rev() {
        let p = l.unsigned_abs() as usize - 1;
        let (u, v) = (c[p], c[p + 1]);
        if l > 0 {
            c[p] = x.inv_op(v, u);
            c[p + 1] = u;
        } else {
            c[p] = v;
            c[p + 1] = x.op(u, v);
        }
    }
}

/// Size of the search space `|X|^m`, refusing anything above `2^26`.
pub fn candidate_count(p: &SurfaceBraidPresentation, x: &Quandle) -> Result<usize, SurfaceError> {
    (x.len() as u64)
        .checked_pow(p.degree as u32)
        .filter(|&t| t <= 1 << 26)
        .map(|t| t as usize)
        .ok_or(SurfaceError::TooLarge(u64::MAX))
}

fn decode(n: usize, idx: usize, out: &mut [usize]) {
    let mut idx = idx;
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

fn satisfies(p: &SurfaceBraidPresentation, x: &Quandle, c: &[usize], scratch: &mut Vec<usize>) -> bool {
    p.relations.iter().all(|r| {
        scratch.clear();
        scratch.extend_from_slice(c);
        act_in_place(&r.word, x, scratch);
        scratch[r.k - 1] == scratch[r.k]
    })
}

/// Tuples satisfying every relation, i.e. colorings of the surface.
pub fn colorings_of_presentation(p: &SurfaceBraidPresentation, x: &Quandle) -> Result<Vec<Vec<usize>>, SurfaceError> {
    let total = candidate_count(p, x)?;
    Ok(colorings_of_presentation_in(p, x, 0..total))
}

pub fn colorings_of_presentation_in(
    p: &SurfaceBraidPresentation,
    x: &Quandle,
    range: Range<usize>,
) -> Vec<Vec<usize>> {
    let mut c = vec![0; p.degree];
    let mut scratch = Vec::with_capacity(p.degree);
    let mut out = Vec::new();
    if x.is_empty() {
        return out;
    }
    for idx in range {
        decode(x.len(), idx, &mut c);
        if satisfies(p, x, &c, &mut scratch) {
            out.push(c.clone());
        }
    }
    out
}

/// Rejects cochains that would not give an invariant.
pub fn check_surface_inputs(x: &Quandle, theta: &Cochain) -> Result<(), SurfaceError> {
    if theta.size() != x.len() {
        return Err(SurfaceError::SizeMismatch {
            cochain: theta.size(),
            quandle: x.len(),
        });
    }
    if theta.degree() != 3 {
        return Err(SurfaceError::NotACocycle);
    }
    if !theta.quandle_flag() {
        return Err(SurfaceError::Degenerate);
    }
    if !is_cocycle(theta, x) {
        return Err(SurfaceError::NotACocycle);
    }
    Ok(())
}

/// `Σ_c Π_W θ(c(p), c(q), c(r))^{ε(W)}` over colorings and white vertices.
pub fn surface_state_sum(
    p: &SurfaceBraidPresentation,
    x: &Quandle,
    theta: &Cochain,
) -> Result<GroupRingElement, SurfaceError> {
    check_surface_inputs(x, theta)?;
    let total = candidate_count(p, x)?;
    Ok(surface_state_sum_in(p, x, theta, 0..total))
}

/// The part of the state-sum from candidate tuples with index in `range`.
/// Inputs are not validated; see [`check_surface_inputs`].
pub fn surface_state_sum_in(
    p: &SurfaceBraidPresentation,
    x: &Quandle,
    theta: &Cochain,
    range: Range<usize>,
) -> GroupRingElement {
    let coeff = theta.coefficients();
    let mut acc = GroupRingElement::zero(coeff);
    for c in colorings_of_presentation_in(p, x, range) {
        let mut exponent = 0;
        let mut acted = c.clone();
        for w in &p.white_vertices {
            acted.copy_from_slice(&c);
            act_in_place(&w.beta, x, &mut acted);
            let i = w.i - 1;
            exponent += w.eps as i64 * theta.get(&acted[i..i + 3]);
        }
        acc.add_term(coeff.reduce(exponent), 1);
    }
    acc
}

/// Which closed form: the 2-twist spun trefoil or its orientation reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistSpunForm {
    Forward,
    Reversed,
}

/// One admissible pair of a closed form, with its six signed triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTerm {
    pub y1: usize,
    pub y2: usize,
    pub factors: [([usize; 3], i64); 6],
    /// Exponent of the product, reduced in `A`.
    pub exponent: i64,
}

/// Pairs with `y2 = (y1 * y2) * y1` and `y2 = (y2 * y1) * y1`.
pub fn admissible_pairs(x: &Quandle) -> Vec<(usize, usize)> {
    let n = x.len();
    (0..n)
        .flat_map(|y1| (0..n).map(move |y2| (y1, y2)))
        .filter(|&(y1, y2)| x.op(x.op(y1, y2), y1) == y2 && x.op(x.op(y2, y1), y1) == y2)
        .collect()
}

fn factors(x: &Quandle, y1: usize, y2: usize, form: TwistSpunForm) -> [([usize; 3], i64); 6] {
    let s = x.op(y1, y2);
    match form {
        TwistSpunForm::Forward => [
            ([s, y1, y2], 1),
            ([s, y2, s], 1),
            ([y2, s, y1], 1),
            ([y1, s, y2], -1),
            ([s, y1, s], -1),
            ([y1, y2, s], -1),
        ],
        TwistSpunForm::Reversed => [
            ([y2, s, y1], -1),
            ([y2, y1, y2], -1),
            ([y1, y2, s], -1),
            ([s, y2, y1], 1),
            ([y2, s, y2], 1),
            ([s, y1, y2], 1),
        ],
    }
}

/// Per-pair terms of the closed form, in `(y1, y2)` order.
pub fn closed_form_terms(x: &Quandle, theta: &Cochain, form: TwistSpunForm) -> Result<Vec<PairTerm>, SurfaceError> {
    check_surface_inputs(x, theta)?;
    Ok(admissible_pairs(x)
        .into_iter()
        .map(|(y1, y2)| {
            let factors = factors(x, y1, y2, form);
            let exponent = factors.iter().map(|(t, s)| s * theta.get(t)).sum();
            PairTerm {
                y1,
                y2,
                factors,
                exponent: theta.coefficients().reduce(exponent),
            }
        })
        .collect())
}

fn closed_form(x: &Quandle, theta: &Cochain, form: TwistSpunForm) -> Result<GroupRingElement, SurfaceError> {
    let mut acc = GroupRingElement::zero(theta.coefficients());
    for t in closed_form_terms(x, theta, form)? {
        acc.add_term(t.exponent, 1);
    }
    Ok(acc)
}

pub fn twist_spun_trefoil_closed_form(x: &Quandle, theta: &Cochain) -> Result<GroupRingElement, SurfaceError> {
    closed_form(x, theta, TwistSpunForm::Forward)
}

pub fn reversed_closed_form(x: &Quandle, theta: &Cochain) -> Result<GroupRingElement, SurfaceError> {
    closed_form(x, theta, TwistSpunForm::Reversed)
}

/// Triple point counts `T(i,j,k)` of a linked surface with components
/// `1..=n` (top, middle, bottom sheet components). Unlisted types are 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripleLinkingData {
    n: usize,
    values: BTreeMap<(usize, usize, usize), i64>,
}

impl TripleLinkingData {
    pub fn new(n: usize, entries: &[((usize, usize, usize), i64)]) -> Result<Self, SurfaceError> {
        let mut values = BTreeMap::new();
        for &((i, j, k), v) in entries {
            if [i, j, k].iter().any(|&c| c == 0 || c > n) {
                return Err(SurfaceError::ComponentOutOfRange { n });
            }
            values.insert((i, j, k), v);
        }
        Ok(Self { n, values })
    }

    /// The data realizing `(a, b)` on three components.
    pub fn from_ab(a: i64, b: i64) -> Self {
        let entries = [
            ((1, 2, 3), a),
            ((3, 2, 1), -a),
            ((3, 1, 2), b),
            ((2, 1, 3), -b),
            ((2, 3, 1), -(a + b)),
            ((1, 3, 2), a + b),
        ];
        Self::new(3, &entries).expect("labels in range")
    }

    pub fn components(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.values.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// `T(i,j,i) = 0` for `i != j`, and `T(i,j,k) - T(i,k,j) + T(k,i,j) = 0`
    /// for distinct `i, j, k`.
    pub fn validate(&self) -> bool {
        let r = 1..=self.n;
        for i in r.clone() {
            for j in r.clone() {
                if i != j && self.get(i, j, i) != 0 {
                    return false;
                }
                for k in r.clone() {
                    if i != j && j != k && i != k && self.get(i, j, k) - self.get(i, k, j) + self.get(k, i, j) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(a, b) = (T(1,2,3), T(3,1,2))` for valid three-component data.
    pub fn solve_ab(&self) -> Option<(i64, i64)> {
        if self.n != 3 || !self.validate() {
            return None;
        }
        let (a, b) = (self.get(1, 2, 3), self.get(3, 1, 2));
        let consistent = self.get(3, 2, 1) == -a
            && self.get(2, 1, 3) == -b
            && self.get(2, 3, 1) == -(a + b)
            && self.get(1, 3, 2) == a + b;
        consistent.then_some((a, b))
    }
}

/// `t^a + t^-a + t^b + t^-b + t^(a+b) + t^(-a-b) + 21` over `Z`.
pub fn three_component_oracle(a: i64, b: i64) -> GroupRingElement {
    GroupRingElement::from_terms(
        Coefficients::Integers,
        [(a, 1), (-a, 1), (b, 1), (-b, 1), (a + b, 1), (-a - b, 1), (0, 21)],
    )
}

/// The state-sum over `T_n` colorings of components: each triple point
/// type `(i,j,k)` contributes `θ(c_k, c_j, c_i)^{T(i,j,k)}` (bottom,
/// middle, top colors).
pub fn triple_linking_state_sum(data: &TripleLinkingData, theta: &Cochain) -> Result<GroupRingElement, SurfaceError> {
    let x = Quandle::trivial(theta.size());
    check_surface_inputs(&x, theta)?;
    let (n, k) = (data.n, theta.size());
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= 1 << 24).ok_or(SurfaceError::TooLarge(u64::MAX))?;
    let mut acc = GroupRingElement::zero(theta.coefficients());
    let mut color = vec![0; n];
    for code in 0..total as usize {
        decode(k, code, &mut color);
        let mut exponent = 0;
        for (&(i, j, l), &t) in &data.values {
            exponent += t * theta.get(&[color[l - 1], color[j - 1], color[i - 1]]);
        }
        acc.add_term(theta.coefficients().reduce(exponent), 1);
    }
    Ok(acc)
}
