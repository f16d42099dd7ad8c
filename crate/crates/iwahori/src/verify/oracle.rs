//! Orbit membership read directly off coordinate descriptions of the orbits.
//!
//! Independent of the classifier: no valuation arithmetic on `m + n`, only
//! the shape of the normal form and which coordinates vanish.

use iwahori_core::{Family, FlagPoint, OrbitLabel, PointKind, Tag};

/// Whether `x` lies in the orbit named by `label`.
///
/// Cells with `n ≥ 0` are coordinate windows `[n, C t^-n + ... ]` (primed
/// for `O`); tags pin the first two coordinates to `C^×` or `0`. Cells with
/// `n < 0` are unions of strata of the opposite kind
/// `[-n-1-k, C^× t^n + ...]` and the base point; `open` is the stratum `k = 0`.
pub fn in_orbit(x: &FlagPoint, label: &OrbitLabel) -> bool {
    let n = label.n();
    let p = x.p();
    let within = |lo: i64, hi: i64| p.terms().all(|(k, _)| lo <= k && k <= hi);
    let nonzero = |k: i64| !p.coefficient(k).is_zero();
    let (own, other) = match label.family() {
        Family::E => (PointKind::Straight, PointKind::Primed),
        Family::O => (PointKind::Primed, PointKind::Straight),
    };
    if n >= 0 {
        let top = match label.family() {
            Family::E => n - 1,
            Family::O => n,
        };
        return x.kind() == own
            && x.n() == n
            && within(-n, top)
            && label
                .tags()
                .iter()
                .enumerate()
                .all(|(i, tag)| nonzero(-n + i as i64) == (*tag == Tag::Open));
    }
    let last_stratum = match label.family() {
        Family::E => -2 * n - 1,
        Family::O => -2 * n - 2,
    };
    let k = -n - 1 - x.n();
    let stratum_top = match label.family() {
        Family::E => x.n(),
        Family::O => x.n() - 1,
    };
    let in_stratum =
        x.kind() == other && (0..=last_stratum).contains(&k) && nonzero(n) && within(n, stratum_top);
    let is_base = x.kind() == own && x.n() == n && p.is_zero();
    let top = in_stratum && k == 0;
    match label.tags() {
        [] => in_stratum || is_base,
        [Tag::Open] => top,
        [Tag::Hyp] => (in_stratum || is_base) && !top,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use iwahori_core::LaurentPoly;

    fn label(s: &str) -> OrbitLabel {
        s.parse().unwrap()
    }

    #[test]
    fn coordinate_windows() {
        let x = FlagPoint::straight(2, LaurentPoly::t_pow(-1));
        assert!(in_orbit(&x, &label("E_2")));
        assert!(in_orbit(&x, &label("E_2:hyp")));
        assert!(in_orbit(&x, &label("E_2:hyp,open")));
        assert!(!in_orbit(&x, &label("E_2:open")));
        assert!(!in_orbit(&x, &label("O_2")));
        // [0, t^-1] = [0, C^× t^-1]: top stratum of O_-1
        let y = FlagPoint::straight(0, LaurentPoly::t_pow(-1));
        assert!(in_orbit(&y, &label("O_-1:open")));
        assert!(!in_orbit(&y, &label("E_0")));
        let base = FlagPoint::primed(-1, LaurentPoly::zero());
        assert!(in_orbit(&base, &label("O_-1:hyp")));
        assert!(!in_orbit(&base, &label("O_-1:open")));
    }
}
