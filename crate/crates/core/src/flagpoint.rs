//! Points of the affine flag variety `SL₂((t))/I` in normal form.
//!
//! Every coset `gI` has a unique representative of one of two shapes:
//!
//! ```text
//!   [n, p]  = [[t^n, p], [0, t^-n]] I     with p = 0 or ν_∞(p) < n
//!   [n, p]' = [[p, t^n], [-t^-n, 0]] I    with p = 0 or ν_∞(p) ≤ n
//! ```

use core::fmt;

use crate::coeff::Coeff;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::loopgroup::{GroupElement, Precision};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    /// Upper triangular representative, written `[n, p]`.
    Straight,
    /// Antidiagonal-type representative, written `[n, p]'`.
    Primed,
}

/// A point `[n, p]` or `[n, p]'`. Equality is equality of cosets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagPoint {
    kind: PointKind,
    n: i64,
    p: LaurentPoly,
}

impl FlagPoint {
    /// Builds a point, discarding the terms of `p` that do not affect the coset:
    /// exponents `>= n` for `[n, p]` and `> n` for `[n, p]'`.
    pub fn new(kind: PointKind, n: i64, p: LaurentPoly) -> Self {
        let p = match kind {
            PointKind::Straight => p.truncate_below(n),
            PointKind::Primed => p.truncate_below(n + 1),
        };
        FlagPoint { kind, n, p }
    }

    pub fn straight(n: i64, p: LaurentPoly) -> Self {
        Self::new(PointKind::Straight, n, p)
    }

    pub fn primed(n: i64, p: LaurentPoly) -> Self {
        Self::new(PointKind::Primed, n, p)
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> &LaurentPoly {
        &self.p
    }

    pub fn is_straight(&self) -> bool {
        self.kind == PointKind::Straight
    }

    pub fn representative(&self) -> GroupElement {
        let up = LaurentPoly::t_pow(self.n);
        let down = LaurentPoly::t_pow(-self.n);
        let m = match self.kind {
            PointKind::Straight => GroupElement::exact(up, self.p.clone(), LaurentPoly::zero(), down),
            PointKind::Primed => GroupElement::exact(self.p.clone(), up, -down, LaurentPoly::zero()),
        };
        m.expect("normal form representatives have determinant 1")
    }

    /// Loop rotation `γ·[n, p(t)] = [n, γ^n p(γt)]`, same formula for primed points.
    pub fn rotate(&self, gamma: &Coeff) -> Result<FlagPoint, Error> {
        let scale = gamma.pow(self.n).ok_or(Error::ZeroRotation)?;
        Ok(FlagPoint {
            kind: self.kind,
            n: self.n,
            p: self.p.rotate(gamma)?.scale(&scale),
        })
    }

    /// Translation by `ṡ₁ = [[0, -1], [1, 0]]` in closed form.
    pub fn involute(&self) -> FlagPoint {
        if self.p.is_zero() {
            let kind = match self.kind {
                PointKind::Straight => PointKind::Primed,
                PointKind::Primed => PointKind::Straight,
            };
            return FlagPoint {
                kind,
                n: -self.n,
                p: LaurentPoly::zero(),
            };
        }
        let (m, unit) = self.p.unit_decompose().expect("p is nonzero");
        // -t^-n / p_(0), kept below -m (straight) or up to -m (primed)
        let order = match self.kind {
            PointKind::Straight => self.n - m,
            PointKind::Primed => self.n - m + 1,
        };
        let inv = unit.invert_unit(order as usize).expect("unit part is a unit");
        FlagPoint::new(self.kind, -m, -inv.shift(-self.n))
    }
}

/// The normal form of the coset `gI`.
///
/// Bottom row `(c, d)`: the coset is `[−ν(d), b·d₍₀₎⁻¹]` when `c = 0` or
/// `ν(c) − ν(d) ≥ 1`, and `[−ν(c), −a·c₍₀₎⁻¹]'` otherwise. With finite
/// precision the function first checks that every kept coefficient is
/// determined by the known entries.
pub fn normal_form(g: &GroupElement) -> Result<FlagPoint, Error> {
    let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
    let prec = g.prec();
    let straight = match (c.valuation(), d.valuation()) {
        (Err(_), Err(_)) => {
            return Err(match prec {
                Precision::Exact => Error::ZeroMatrix,
                Precision::Finite(p) => Error::InsufficientPrecision {
                    needed: p + 1,
                    available: prec,
                },
            })
        }
        (Err(_), Ok(_)) => true,
        (Ok(_), Err(_)) => false,
        (Ok(vc), Ok(vd)) => vc - vd >= 1,
    };
    // Row entry that becomes p, and the divisor whose unit part is inverted.
    let (top, bottom, sign, keep_below) = if straight {
        let vd = d.valuation().expect("nonzero");
        (b, d, false, -vd)
    } else {
        let vc = c.valuation().expect("nonzero");
        (a, c, true, -vc + 1)
    };
    let n = if straight { keep_below } else { keep_below - 1 };
    let kind = if straight {
        PointKind::Straight
    } else {
        PointKind::Primed
    };

    // Error terms: O(t^P) from `top` itself and O(t^(ν(top) + P + n)) from the
    // truncated inverse; both must lie at or above `keep_below`.
    let needed = match top.valuation() {
        Ok(vt) => keep_below.max(keep_below - n - vt),
        Err(_) => keep_below,
    };
    if !prec.covers(needed) {
        return Err(Error::InsufficientPrecision {
            needed,
            available: prec,
        });
    }
    let p = match top.valuation() {
        Ok(vt) if keep_below > vt => {
            let order = (keep_below - vt) as usize;
            let (_, unit) = bottom.unit_decompose()?;
            let inv = unit.invert_unit(order)?;
            let p = top.mul_below(&inv, Some(keep_below));
            if sign {
                -p
            } else {
                p
            }
        }
        _ => LaurentPoly::zero(),
    };
    Ok(FlagPoint::new(kind, n, p))
}

/// Left translation `g·x`, in normal form.
///
/// Elements with finite precision are first truncated to a small precision,
/// which is raised until the normal form is determined; the answer equals
/// the one computed from all known coefficients.
pub fn act(g: &GroupElement, x: &FlagPoint) -> Result<FlagPoint, Error> {
    let rep = x.representative();
    let Precision::Finite(full) = g.prec() else {
        return normal_form(&g.multiply(&rep));
    };
    let spread = [
        x.n.abs(),
        x.p.valuation().map_or(0, i64::abs),
        x.p.degree_inf().map_or(0, i64::abs),
    ]
    .into_iter()
    .max()
    .unwrap_or(0);
    let mut trial = (2 * (spread - g.min_valuation()) + 4).min(full);
    loop {
        match normal_form(&g.truncated(trial).multiply(&rep)) {
            Err(Error::InsufficientPrecision { .. }) if trial < full => {
                trial = (2 * trial).min(full);
            }
            other => return other,
        }
    }
}

impl fmt::Display for FlagPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.n, self.p)?;
        if self.kind == PointKind::Primed {
            f.write_str("'")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopgroup::SubgroupId;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(n: i64) -> Coeff {
        Coeff::integer(n)
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, q(c))))
    }

    fn t(k: i64) -> LaurentPoly {
        LaurentPoly::t_pow(k)
    }

    /// `rep(x)⁻¹·g ∈ I` certifies `gI = xI` without going through `normal_form`.
    fn same_coset(g: &GroupElement, x: &FlagPoint) -> bool {
        x.representative()
            .inverse()
            .multiply(g)
            .membership(SubgroupId::I)
            .unwrap()
    }

    #[test]
    fn construction_truncates() {
        let x = FlagPoint::straight(1, poly(&[(-1, 1), (1, 1), (5, 1)]));
        assert_eq!(x, FlagPoint::straight(1, t(-1)));
        assert_eq!(FlagPoint::primed(0, poly(&[(0, 1), (1, 1)])), FlagPoint::primed(0, t(0)));
        assert_eq!(FlagPoint::straight(0, LaurentPoly::zero()).p(), &LaurentPoly::zero());
    }

    #[test]
    fn representatives() {
        assert_eq!(FlagPoint::straight(0, LaurentPoly::zero()).representative(), GroupElement::identity());
        let r = FlagPoint::primed(0, LaurentPoly::zero()).representative();
        assert_eq!(r.entries(), [&LaurentPoly::zero(), &t(0), &-t(0), &LaurentPoly::zero()]);
        let r = FlagPoint::straight(1, t(-1)).representative();
        assert_eq!(r.entries(), [&t(1), &t(-1), &LaurentPoly::zero(), &t(-1)]);
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(normal_form(&GroupElement::identity()), Ok(FlagPoint::straight(0, LaurentPoly::zero())));
        assert_eq!(normal_form(&GroupElement::dot_s1()), Ok(FlagPoint::primed(0, LaurentPoly::zero())));
        let g = GroupElement::upper(t(-1));
        let x = normal_form(&g).unwrap();
        assert_eq!(x, FlagPoint::straight(0, t(-1)));
        assert!(same_coset(&g, &x));
        assert_eq!(normal_form(&GroupElement::diag_t(1)), Ok(FlagPoint::straight(1, LaurentPoly::zero())));
    }

    #[test]
    fn normal_form_demands_precision() {
        // [[t^-3, 0], [0, t^3]] times an element known mod t^4 loses precision.
        let s = GroupElement::sample(SubgroupId::I, -3..=3, 4, 5);
        let g = GroupElement::diag_t(-3).multiply(&GroupElement::upper(t(-4))).multiply(&s);
        assert!(matches!(normal_form(&g), Err(Error::InsufficientPrecision { .. })));
        let exact_zero_row = GroupElement::from_parts(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            Precision::Exact,
        );
        assert_eq!(normal_form(&exact_zero_row), Err(Error::ZeroMatrix));
    }

    #[test]
    fn action_examples() {
        let x = FlagPoint::straight(2, poly(&[(-2, 1), (1, 3)]));
        assert_eq!(act(&GroupElement::identity(), &x), Ok(x.clone()));
        // upper(q)·[n, 0] = [n, t^-n q]
        let q_poly = poly(&[(0, 2), (1, -1), (3, 1), (5, 7)]);
        let y = act(&GroupElement::upper(q_poly.clone()), &FlagPoint::straight(2, LaurentPoly::zero())).unwrap();
        assert_eq!(y, FlagPoint::straight(2, q_poly.shift(-2)));
        let g = GroupElement::lower(t(1));
        let base = FlagPoint::straight(-1, LaurentPoly::zero());
        let z = act(&g, &base).unwrap();
        assert_eq!(z, FlagPoint::primed(0, -t(-1)));
        assert!(same_coset(&g.multiply(&base.representative()), &z));
    }

    #[test]
    fn rotation_examples() {
        let g = q(2);
        assert_eq!(FlagPoint::straight(3, LaurentPoly::zero()).rotate(&g), Ok(FlagPoint::straight(3, LaurentPoly::zero())));
        assert_eq!(FlagPoint::straight(1, t(-1)).rotate(&g), Ok(FlagPoint::straight(1, t(-1))));
        let x = FlagPoint::straight(1, poly(&[(-1, 1), (0, 1)]));
        assert_eq!(x.rotate(&q(3)), Ok(FlagPoint::straight(1, poly(&[(-1, 1), (0, 3)]))));
        let via_matrix = normal_form(&x.representative().rotate(&q(3)).unwrap()).unwrap();
        assert_eq!(via_matrix, x.rotate(&q(3)).unwrap());
        assert_eq!(x.rotate(&Coeff::ZERO), Err(Error::ZeroRotation));
    }

    #[test]
    fn involution_examples() {
        let s1 = GroupElement::dot_s1();
        let cases = [
            (FlagPoint::straight(0, LaurentPoly::zero()), FlagPoint::primed(0, LaurentPoly::zero())),
            (FlagPoint::straight(1, t(-1)), FlagPoint::straight(1, -t(-1))),
            (FlagPoint::primed(0, t(0)), FlagPoint::primed(0, -t(0))),
        ];
        for (x, want) in cases {
            assert_eq!(x.involute(), want);
            assert_eq!(act(&s1, &x).unwrap(), want);
        }
    }

    #[test]
    fn display() {
        assert_eq!(FlagPoint::primed(0, LaurentPoly::zero()).to_string(), "[0, 0]'");
        assert_eq!(FlagPoint::straight(2, poly(&[(-2, 1), (-1, 1)])).to_string(), "[2, t^-2 + t^-1]");
    }

    pub(crate) fn any_point(max_n: i64) -> impl Strategy<Value = FlagPoint> {
        (
            any::<bool>(),
            -max_n..=max_n,
            proptest::collection::vec((-2 * max_n - 1..=2 * max_n, -3i64..=3, 1i64..=2), 0..6),
        )
            .prop_map(|(straight, n, terms)| {
                let p = LaurentPoly::from_terms(terms.into_iter().map(|(k, a, b)| (k, Coeff::ratio(a, b))));
                let kind = if straight { PointKind::Straight } else { PointKind::Primed };
                FlagPoint::new(kind, n, p)
            })
    }

    fn gamma() -> impl Strategy<Value = Coeff> {
        prop_oneof![Just(q(2)), Just(q(-1)), Just(Coeff::ratio(1, 3)), Just(q(-3)), Just(Coeff::ratio(-2, 5))]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn normal_form_of_representative_is_identity(x in any_point(6)) {
            prop_assert_eq!(normal_form(&x.representative()), Ok(x));
        }

        #[test]
        fn involution_is_translation_and_order_two(x in any_point(5)) {
            let y = x.involute();
            prop_assert_eq!(act(&GroupElement::dot_s1(), &x), Ok(y.clone()));
            prop_assert_eq!(y.involute(), x);
        }

        #[test]
        fn rotation_matches_matrix_rotation(x in any_point(5), g in gamma(), h in gamma()) {
            let direct = x.rotate(&g).unwrap();
            let via = normal_form(&x.representative().rotate(&g).unwrap()).unwrap();
            prop_assert_eq!(&direct, &via);
            prop_assert_eq!(x.rotate(&(&g * &h)).unwrap(), x.rotate(&h).unwrap().rotate(&g).unwrap());
        }

        #[test]
        fn right_multiplication_by_iwahori_is_invisible(x in any_point(4), seed in any::<u64>()) {
            let h = GroupElement::sample(SubgroupId::I, -3..=3, 24, seed);
            let g = x.representative().multiply(&h);
            prop_assert_eq!(normal_form(&g), Ok(x));
        }

        #[test]
        fn adaptive_action_matches_full_precision(x in any_point(4), seed in any::<u64>()) {
            let h = GroupElement::sample(SubgroupId::I, -3..=3, 24, seed);
            let full = normal_form(&h.multiply(&x.representative())).unwrap();
            prop_assert_eq!(act(&h, &x), Ok(full));
        }
    }
}
