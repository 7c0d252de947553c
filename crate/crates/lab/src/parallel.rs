//! Splits coloring enumeration across threads. Partial state-sums are
//! added in chunk order, so results do not depend on scheduling.

use std::ops::Range;

use quandle_core::knots::{self, BraidWord, KnotError};
use quandle_core::surfaces::{self, SurfaceError};
use quandle_core::{Cochain, GroupRingElement, Quandle, SurfaceBraidPresentation};

pub const THREADS_VAR: &str = "QUANDLE_LAB_THREADS";

/// Available parallelism, capped by `QUANDLE_LAB_THREADS` when set.
pub fn worker_count() -> usize {
    let available = std::thread::available_parallelism().map_or(1, usize::from);
    match std::env::var(THREADS_VAR).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(cap) if cap >= 1 => cap.min(available),
        _ => available,
    }
}

fn chunks(total: usize, workers: usize) -> Vec<Range<usize>> {
    let workers = workers.clamp(1, total.max(1));
    let step = total.div_ceil(workers);
    (0..workers)
        .map(|w| (w * step).min(total)..((w + 1) * step).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Evaluates `part` on disjoint ranges covering `0..total` and adds the
/// results.
pub fn sum_ranges<F>(total: usize, workers: usize, zero: GroupRingElement, part: F) -> GroupRingElement
where
    F: Fn(Range<usize>) -> GroupRingElement + Sync,
{
    let ranges = chunks(total, workers);
    let parts: Vec<GroupRingElement> = if ranges.len() <= 1 {
        ranges.into_iter().map(&part).collect()
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(|| part(r))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    parts
        .iter()
        .fold(zero, |acc, p| acc.add(p).expect("partial sums share coefficients"))
}

pub fn knot_state_sum(b: &BraidWord, x: &Quandle, phi: &Cochain) -> Result<GroupRingElement, KnotError> {
    knots::check_state_sum_inputs(x, phi)?;
    let total = knots::candidate_count(b, x)?;
    let zero = GroupRingElement::zero(phi.coefficients());
    Ok(sum_ranges(total, worker_count(), zero, |r| knots::state_sum_in(b, x, phi, r)))
}

pub fn surface_state_sum(
    p: &SurfaceBraidPresentation,
    x: &Quandle,
    theta: &Cochain,
) -> Result<GroupRingElement, SurfaceError> {
    surfaces::check_surface_inputs(x, theta)?;
    let total = surfaces::candidate_count(p, x)?;
    let zero = GroupRingElement::zero(theta.coefficients());
    Ok(sum_ranges(total, worker_count(), zero, |r| surfaces::surface_state_sum_in(p, x, theta, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use quandle_core::cohomology::catalog;
    use quandle_core::Coefficients;

    #[test]
    fn chunks_cover_the_range() {
        for (total, workers) in [(0, 4), (1, 4), (10, 3), (81, 8), (7, 7)] {
            let rs = chunks(total, workers);
            let covered: Vec<usize> = rs.iter().flat_map(|r| r.clone()).collect();
            assert_eq!(covered, (0..total).collect::<Vec<_>>());
        }
    }

    #[test]
    fn threaded_sums_match_serial() {
        let s4 = Quandle::s4();
        let phi = catalog::phi_s4();
        let b = knots::named_knot("4_1").unwrap();
        let serial = knots::state_sum(&b, &s4, &phi).unwrap();
        for workers in [1, 2, 5, 64] {
            let total = knots::candidate_count(&b, &s4).unwrap();
            let zero = GroupRingElement::zero(phi.coefficients());
            assert_eq!(sum_ranges(total, workers, zero, |r| knots::state_sum_in(&b, &s4, &phi, r)), serial);
        }
        assert_eq!(knot_state_sum(&b, &s4, &phi).unwrap(), serial);

        let r3 = Quandle::dihedral(3);
        let eta = catalog::eta1(Coefficients::Cyclic(3));
        let p = surfaces::twist_spun_trefoil();
        assert_eq!(surface_state_sum(&p, &r3, &eta).unwrap(), surfaces::surface_state_sum(&p, &r3, &eta).unwrap());
    }
}
