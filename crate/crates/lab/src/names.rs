//! Resolution of quandle, group, coefficient and cocycle names.
//!
//! Quandles: `T<n>`, `R<n>`, `S4`, `Alex(n;h)` with `h` a polynomial in
//! `T` such as `T^2-1`, `Conj(G,k)` with `G` one of `Z<n>`, `S<k>` or a
//! product `GxH`, or a path to a JSON table.
//!
//! Cocycles: `eta1`, `phi_S4`, `lambda1`, `lambda2`, `phi_alex`, `zero`,
//! `chi(x,y[,z])`, or a path to a JSON cochain.

use quandle_core::cohomology::catalog;
use quandle_core::{Coefficients, Cochain, FiniteGroup, Quandle};

use crate::json::{CochainJson, QuandleJson};
use crate::{read_file, LabError};

fn usage(msg: impl Into<String>) -> LabError {
    LabError::Usage(msg.into())
}

/// `Z`, or `Z<m>` / `Zm` with `m >= 2`.
pub fn parse_coefficients(s: &str) -> Result<Coefficients, LabError> {
    let s = s.trim();
    if s == "Z" {
        return Ok(Coefficients::Integers);
    }
    let m = s
        .strip_prefix('Z')
        .map(|r| r.trim_start_matches('_'))
        .and_then(|r| r.parse::<u64>().ok())
        .ok_or_else(|| usage(format!("unknown coefficient group {s:?}")))?;
    Coefficients::cyclic(m).map_err(|e| usage(e.to_string()))
}

/// Coefficients, low degree first, of a polynomial in `T` such as
/// `T^2+T+1`, `2T^3 - T + 1` or `-1+T^2`.
pub fn parse_polynomial(s: &str) -> Result<Vec<i64>, LabError> {
    let bad = || usage(format!("cannot parse polynomial {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut coeffs: Vec<i64> = Vec::new();
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-1, &term[1..]),
            Some(b'+') => (1, &term[1..]),
            _ => (1, term),
        };
        let (c, deg) = match body.find('T') {
            None => (body.parse::<i64>().map_err(|_| bad())?, 0),
            Some(p) => {
                let c = match body[..p].trim_end_matches('*') {
                    "" => 1,
                    digits => digits.parse::<i64>().map_err(|_| bad())?,
                };
                let deg = match &body[p + 1..] {
                    "" => 1,
                    rest => rest.strip_prefix('^').and_then(|d| d.parse::<usize>().ok()).ok_or_else(bad)?,
                };
                (c, deg)
            }
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += sign * c;
    }
    Ok(coeffs)
}

pub fn parse_group(s: &str) -> Result<FiniteGroup, LabError> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('x') {
        return Ok(FiniteGroup::direct_product(&parse_group(a)?, &parse_group(b)?));
    }
    let bad = || usage(format!("unknown group {s:?}; use Z<n>, S<k> or GxH"));
    let (kind, n) = s.split_at(1.min(s.len()));
    let n: usize = n.parse().map_err(|_| bad())?;
    match kind {
        "Z" if (1..=64).contains(&n) => Ok(FiniteGroup::cyclic(n)),
        "S" if (1..=5).contains(&n) => Ok(FiniteGroup::symmetric(n)),
        _ => Err(bad()),
    }
}

fn small_index(s: &str, limit: usize) -> Option<usize> {
    s.parse::<usize>().ok().filter(|&n| (1..=limit).contains(&n))
}

/// Resolves a quandle name or JSON path.
pub fn resolve_quandle(spec: &str) -> Result<Quandle, LabError> {
    let spec = spec.trim();
    if spec.ends_with(".json") {
        let j: QuandleJson = serde_json::from_str(&read_file(spec)?)?;
        return j.to_quandle();
    }
    if spec == "S4" {
        return Ok(Quandle::s4());
    }
    if let Some(n) = spec.strip_prefix('T').and_then(|r| small_index(r, 256)) {
        return Ok(Quandle::trivial(n));
    }
    if let Some(n) = spec.strip_prefix('R').and_then(|r| small_index(r, 256)) {
        return Ok(Quandle::dihedral(n));
    }
    if let Some(args) = spec.strip_prefix("Alex(").and_then(|r| r.strip_suffix(')')) {
        let (n, h) = args.split_once(';').ok_or_else(|| usage("Alex needs the form Alex(n;h)"))?;
        let n: u64 = n.trim().parse().map_err(|_| usage(format!("bad modulus {n:?}")))?;
        return Ok(Quandle::alexander(n, &parse_polynomial(h)?)?);
    }
    if let Some(args) = spec.strip_prefix("Conj(").and_then(|r| r.strip_suffix(')')) {
        let (g, k) = args.rsplit_once(',').ok_or_else(|| usage("Conj needs the form Conj(G,k)"))?;
        let k: i64 = k.trim().parse().map_err(|_| usage(format!("bad exponent {k:?}")))?;
        return Ok(Quandle::conjugation(&parse_group(g)?, k));
    }
    Err(usage(format!("unknown quandle {spec:?}")))
}

/// Built-ins shown by `quandle list`: name and a one-line description.
pub fn builtin_quandles() -> Vec<(&'static str, &'static str)> {
    vec![
        ("T2", "trivial quandle on 2 elements"),
        ("T3", "trivial quandle on 3 elements"),
        ("R3", "dihedral quandle, i*j = 2j - i mod 3"),
        ("R4", "dihedral quandle, i*j = 2j - i mod 4"),
        ("R5", "dihedral quandle, i*j = 2j - i mod 5"),
        ("S4", "tetrahedral quandle Z2[T]/(T^2+T+1)"),
        ("Alex(2;T^2+T+1)", "Alexander quandle isomorphic to S4"),
        ("Alex(3;T^2-1)", "Alexander quandle on 9 elements"),
        ("Conj(S3,1)", "transpositions and 3-cycles of S3 under conjugation"),
    ]
}

fn element(x: &Quandle, s: &str) -> Result<usize, LabError> {
    let s = s.trim();
    let e = match s.parse::<usize>() {
        Ok(e) => Some(e).filter(|&e| e < x.len()),
        Err(_) => x.element_by_label(s),
    };
    e.ok_or_else(|| LabError::Validation(format!("{s:?} is not an element of the quandle")))
}

/// Resolves a cocycle name on `x`. `degree` is used by `zero`; `coeff`
/// overrides the default coefficients of a named cocycle.
pub fn resolve_cocycle(spec: &str, x: &Quandle, degree: usize, coeff: Option<Coefficients>) -> Result<Cochain, LabError> {
    let spec = spec.trim();
    let named = |f: Cochain| Ok(coeff.map_or_else(|| f.clone(), |c| f.with_coefficients(c)));
    match spec {
        "eta1" => return named(catalog::eta1(Coefficients::Cyclic(3))),
        "phi_S4" => return named(catalog::phi_s4()),
        "lambda1" => return named(catalog::lambda1()),
        "lambda2" => return named(catalog::lambda2()),
        "phi_alex" => return named(catalog::alexander_example()),
        "zero" => return Ok(Cochain::zero(x.len(), degree, coeff.unwrap_or(Coefficients::Integers))?),
        _ => {}
    }
    if spec.ends_with(".json") {
        let j: CochainJson = serde_json::from_str(&read_file(spec)?)?;
        let f = j.to_cochain(x.len())?;
        return named(f);
    }
    if let Some(args) = spec.strip_prefix("chi(").and_then(|r| r.strip_suffix(')')) {
        let tuple = args.split(',').map(|e| element(x, e)).collect::<Result<Vec<_>, _>>()?;
        return Ok(Cochain::characteristic(x.len(), coeff.unwrap_or(Coefficients::Integers), &tuple)?);
    }
    Err(usage(format!("unknown cocycle {spec:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use quandle_core::quandle::is_isomorphic;

    #[test]
    fn coefficients() {
        assert_eq!(parse_coefficients("Z").unwrap(), Coefficients::Integers);
        assert_eq!(parse_coefficients("Z3").unwrap(), Coefficients::Cyclic(3));
        assert_eq!(parse_coefficients("Z_4").unwrap(), Coefficients::Cyclic(4));
        assert!(parse_coefficients("Z1").is_err());
        assert!(parse_coefficients("Q").is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_polynomial("T^2-1").unwrap(), vec![-1, 0, 1]);
        assert_eq!(parse_polynomial("T^2 + T + 1").unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_polynomial("-1+2T^3-T").unwrap(), vec![-1, -1, 0, 2]);
        assert_eq!(parse_polynomial("3*T").unwrap(), vec![0, 3]);
        assert!(parse_polynomial("T^").is_err());
        assert!(parse_polynomial("").is_err());
    }

    #[test]
    fn quandles() {
        assert_eq!(resolve_quandle("R4").unwrap(), Quandle::dihedral(4));
        assert_eq!(resolve_quandle("T2").unwrap().len(), 2);
        let alex = resolve_quandle("Alex(2;T^2+T+1)").unwrap();
        assert!(is_isomorphic(&alex, &Quandle::s4()).is_some());
        assert_eq!(resolve_quandle("Alex(3;T^2-1)").unwrap().len(), 9);
        let conj = resolve_quandle("Conj(S3,1)").unwrap();
        assert_eq!(conj.len(), 6);
        assert_eq!(resolve_quandle("Conj(Z2xZ3,1)").unwrap(), Quandle::trivial(6));
        for (name, _) in builtin_quandles() {
            assert!(resolve_quandle(name).is_ok(), "{name}");
        }
        assert!(matches!(resolve_quandle("R0"), Err(LabError::Usage(_))));
        assert!(matches!(resolve_quandle("Alex(4;2T+1)"), Err(LabError::Validation(_))));
    }

    #[test]
    fn cocycles() {
        let r3 = Quandle::dihedral(3);
        assert_eq!(resolve_cocycle("eta1", &r3, 3, None).unwrap().coefficients(), Coefficients::Cyclic(3));
        let z = resolve_cocycle("eta1", &r3, 3, Some(Coefficients::Integers)).unwrap();
        assert_eq!(z.coefficients(), Coefficients::Integers);
        let t2 = Quandle::trivial(2);
        let chi = resolve_cocycle("chi(0,1)", &t2, 2, None).unwrap();
        assert_eq!(chi.get(&[0, 1]), 1);
        assert!(resolve_cocycle("chi(0,2)", &t2, 2, None).is_err());
        let s4 = Quandle::s4();
        assert_eq!(resolve_cocycle("zero", &s4, 3, None).unwrap().degree(), 3);
        assert!(resolve_cocycle("nope", &s4, 2, None).is_err());
    }
}
