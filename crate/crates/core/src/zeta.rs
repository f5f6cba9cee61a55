//! Point counts over `k` and `k2` and the Frobenius characteristic
//! polynomial, read off from the invariants without any arithmetic in `k2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorclass::{kernel_e, RadicalData};
use crate::gf2::FieldCtx;
use crate::invariants::{invariants_with, InvariantData};
use crate::sscurve::{normalize, Curve};

/// `N1 = q + 1 + a1` and `N2 = q^2 + 1 + 2 a2 - a1^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZetaData {
    pub n1: i64,
    pub n2: i64,
    pub a1: i64,
    pub a2: i64,
}

impl ZetaData {
    pub fn char_poly(&self, q: i64) -> [i64; 5] {
        char_poly(self, q)
    }
}

/// Coefficients `(1, a1, a2, q a1, q^2)` of
/// `1 + a1 t + a2 t^2 + q a1 t^3 + q^2 t^4`.
pub fn char_poly(z: &ZetaData, q: i64) -> [i64; 5] {
    [1, z.a1, z.a2, q * z.a1, q * q]
}

/// Inverts the count relations; rejects pairs where `2 a2` would be odd.
pub fn zeta_from_counts(n1: i64, n2: i64, q: i64) -> Result<ZetaData> {
    let a1 = n1 - q - 1;
    let twice_a2 = n2 - q * q - 1 + a1 * a1;
    if twice_a2 % 2 != 0 || n1 < 1 || n2 < 1 {
        return Err(Error::InvalidCounts { n1, n2, q });
    }
    Ok(ZetaData {
        n1,
        n2,
        a1,
        a2: twice_a2 / 2,
    })
}

/// Counts from precomputed invariants.
pub fn zeta_from_invariants(m: u32, inv: &InvariantData) -> Result<ZetaData> {
    let q = 1i64 << m;
    let n1 = match inv.sgn_q.as_int() {
        0 => q + 1,
        s => {
            // sqrt(2^w q) = 2^{(m+w)/2}
            if !(m + inv.w).is_multiple_of(2) {
                return Err(Error::DegenerateForm);
            }
            q + 1 + s * (1i64 << ((m + inv.w) / 2))
        }
    };
    let n2 = q * q + 1 + inv.sgn_q_tilde.as_int() * (1i64 << (inv.w_tilde / 2)) * q;
    zeta_from_counts(n1, n2, q)
}

/// Closed-form `(N1, N2, a1, a2)` of a curve, given its radical data.
pub fn count_points_with(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> Result<ZetaData> {
    let inv = invariants_with(ctx, curve, rad)?;
    zeta_from_invariants(ctx.m(), &inv)
}

/// Closed-form `(N1, N2, a1, a2)` of any curve of the model.
pub fn count_points(ctx: &FieldCtx, curve: &Curve) -> Result<ZetaData> {
    let c = normalize(ctx, curve);
    let rad = kernel_e(ctx, c.a, c.b)?;
    count_points_with(ctx, &c, &rad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Fe;
    use crate::sscurve::twist;

    fn ctx(m: u32) -> FieldCtx {
        FieldCtx::new(m).unwrap()
    }

    fn curve(a: u32, b: u32, c: u32, d: bool) -> Curve {
        Curve::new(Fe(a), Fe(b), Fe(c), d).unwrap()
    }

    #[test]
    fn counts_over_f8() {
        let k = ctx(3);
        assert_eq!(
            count_points(&k, &curve(1, 0, 0, false)).unwrap(),
            ZetaData {
                n1: 9,
                n2: 65,
                a1: 0,
                a2: 0
            }
        );
        // N2 = q^2 + 1 + 2q = 81 and a2 = (81 - 65 + 16) / 2 = 16
        assert_eq!(
            count_points(&k, &curve(1, 0, 1, false)).unwrap(),
            ZetaData {
                n1: 5,
                n2: 81,
                a1: -4,
                a2: 16
            }
        );
        assert_eq!(
            count_points(&k, &curve(1, 0, 1, true)).unwrap(),
            ZetaData {
                n1: 13,
                n2: 81,
                a1: 4,
                a2: 16
            }
        );
    }

    #[test]
    fn counts_over_f2() {
        let z = count_points(&ctx(1), &curve(1, 0, 1, false)).unwrap();
        assert_eq!((z.n1, z.a1), (5, 2));
    }

    #[test]
    fn char_poly_examples() {
        let z = |a1, a2| ZetaData {
            n1: 0,
            n2: 0,
            a1,
            a2,
        };
        assert_eq!(char_poly(&z(0, 0), 8), [1, 0, 0, 0, 64]);
        assert_eq!(char_poly(&z(4, 8), 8), [1, 4, 8, 32, 64]);
        assert_eq!(char_poly(&z(-4, 8), 8), [1, -4, 8, -32, 64]);
    }

    #[test]
    fn inversion() {
        assert_eq!(
            zeta_from_counts(9, 65, 8).unwrap(),
            ZetaData {
                n1: 9,
                n2: 65,
                a1: 0,
                a2: 0
            }
        );
        assert_eq!(zeta_from_counts(13, 81, 8).unwrap().a2, 16);
        assert_eq!(zeta_from_counts(9, 129, 8).unwrap().a2, 32);
        assert_eq!(
            zeta_from_counts(10, 65, 8),
            Err(Error::InvalidCounts {
                n1: 10,
                n2: 65,
                q: 8
            })
        );
    }

    #[test]
    fn twist_complements_n1() {
        for m in 1..=7 {
            let k = ctx(m);
            let q = k.q() as i64;
            for a in k.nonzero_elements() {
                for c in k.elements().step_by(5) {
                    for b in [Fe::ZERO, a] {
                        let cv = curve(a.0, b.0, c.0, false);
                        let z = count_points(&k, &cv).unwrap();
                        let t = count_points(&k, &twist(&cv)).unwrap();
                        assert_eq!(z.n1 + t.n1, 2 * q + 2);
                        assert_eq!(z.n2, t.n2);
                    }
                }
            }
        }
    }
}
