//! The curve model `y^2 + y = a x^5 + b x^3 + c x + d`, its hyperelliptic
//! twist, and the action of `(lambda, nu)` on parameter quadruples.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::factorclass::Pab;
use crate::gf2::{Fe, FieldCtx};

/// Parameters `(a, b, c, d)` of a supersingular genus-2 curve.
///
/// `d` is a class of `k / AS(k)`: `false` stands for `0` and `true` for the
/// field's fixed `d0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Curve {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: bool,
}

/// Parameters `(lambda, nu)` of a `k`-isomorphism between two models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoWitness {
    pub lambda: Fe,
    pub nu: Fe,
}

impl IsoWitness {
    pub const IDENTITY: IsoWitness = IsoWitness {
        lambda: Fe::ONE,
        nu: Fe::ZERO,
    };
}

impl Curve {
    pub fn new(a: Fe, b: Fe, c: Fe, d: bool) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(Curve { a, b, c, d })
    }

    /// `b` is `0` or equal to `a`.
    pub fn is_normalized(&self) -> bool {
        self.b.is_zero() || self.b == self.a
    }

    /// `a:b:c:d` with hexadecimal field elements.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// `m:a:b:c:d`, self-describing form used in JSON records.
    pub fn to_text_with_degree(&self, m: u32) -> String {
        format!("{m}:{self}")
    }

    /// Parses `a:b:c:d` or `m:a:b:c:d` against `ctx`.
    pub fn parse(ctx: &FieldCtx, input: &str) -> Result<Curve> {
        let err = |reason: &str| Error::ParseCurve {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = input.trim().split(':').collect();
        let fields = match parts.len() {
            4 => &parts[..],
            5 => {
                let m: u32 = parts[0].parse().map_err(|_| err("bad degree"))?;
                if m != ctx.m() {
                    return Err(err("degree does not match the field"));
                }
                &parts[1..]
            }
            _ => return Err(err("expected a:b:c:d or m:a:b:c:d")),
        };
        let hex = |s: &str| -> Result<Fe> {
            let s = s.trim_start_matches("0x");
            let v = u32::from_str_radix(s, 16).map_err(|_| err("bad hexadecimal element"))?;
            ctx.element(v)
        };
        let d = match fields[3] {
            "0" => false,
            "1" => true,
            _ => return Err(err("d must be 0 or 1")),
        };
        Curve::new(hex(fields[0])?, hex(fields[1])?, hex(fields[2])?, d)
            .map_err(|_| err("a must be nonzero"))
    }

    /// Right-hand side `a x^5 + b x^3 + c x` without the constant term.
    pub fn q_poly(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        let x2 = ctx.square(x);
        let x3 = ctx.mul(x2, x);
        let x5 = ctx.mul(x3, x2);
        ctx.mul(self.a, x5) + ctx.mul(self.b, x3) + ctx.mul(self.c, x)
    }

    /// The quadratic form `Q(x) = Tr(a x^5 + b x^3 + c x)`.
    pub fn q_form(&self, ctx: &FieldCtx, x: Fe) -> bool {
        ctx.trace(self.q_poly(ctx, x))
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:x}:{:x}:{:x}:{}",
            self.a,
            self.b,
            self.c,
            u8::from(self.d)
        )
    }
}

impl Serialize for Curve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Hyperelliptic twist: add `d0` to the equation.
pub fn twist(curve: &Curve) -> Curve {
    Curve {
        d: !curve.d,
        ..*curve
    }
}

/// Maps `(a,b,c,d)` to
/// `(l^5 a, l^3 b, l (c + E_ab(nu)^{1/4}), a nu^5 + b nu^3 + c nu + d)`.
pub fn apply_iso(ctx: &FieldCtx, curve: &Curve, w: IsoWitness) -> Result<Curve> {
    if w.lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let l = w.lambda;
    let l2 = ctx.square(l);
    let l3 = ctx.mul(l2, l);
    let l5 = ctx.mul(l3, l2);
    let e = Pab::new(ctx, curve.a, curve.b)?.e(w.nu);
    Ok(Curve {
        a: ctx.mul(l5, curve.a),
        b: ctx.mul(l3, curve.b),
        c: ctx.mul(l, curve.c + ctx.fourth_root(e)),
        d: curve.d ^ curve.q_form(ctx, w.nu),
    })
}

/// An isomorphic model with `b = 0` or `b = a`.
pub fn normalize(ctx: &FieldCtx, curve: &Curve) -> Curve {
    if curve.is_normalized() {
        return *curve;
    }
    let lambda = ctx.sqrt(ctx.div(curve.b, curve.a));
    apply_iso(
        ctx,
        curve,
        IsoWitness {
            lambda,
            nu: Fe::ZERO,
        },
    )
    .expect("b != 0 gives lambda != 0")
}

/// Exhaustive search for a witness over all `(lambda, nu)`.
pub fn is_isomorphic(ctx: &FieldCtx, c1: &Curve, c2: &Curve) -> Option<IsoWitness> {
    if c1.b.is_zero() != c2.b.is_zero() {
        return None;
    }
    for lambda in ctx.nonzero_elements() {
        let l2 = ctx.square(lambda);
        let l3 = ctx.mul(l2, lambda);
        if ctx.mul(ctx.mul(l3, l2), c1.a) != c2.a || ctx.mul(l3, c1.b) != c2.b {
            continue;
        }
        for nu in ctx.elements() {
            let w = IsoWitness { lambda, nu };
            if apply_iso(ctx, c1, w).ok() == Some(*c2) {
                return Some(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: u32) -> FieldCtx {
        FieldCtx::new(m).unwrap()
    }

    fn curve(a: u32, b: u32, c: u32, d: bool) -> Curve {
        Curve::new(Fe(a), Fe(b), Fe(c), d).unwrap()
    }

    #[test]
    fn twist_flips_d() {
        let c = curve(1, 2, 3, false);
        assert_eq!(twist(&c), curve(1, 2, 3, true));
        assert_eq!(twist(&twist(&c)), c);
    }

    #[test]
    fn zero_a_rejected() {
        assert_eq!(
            Curve::new(Fe(0), Fe(1), Fe(1), false),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn identity_and_zero_lambda() {
        let k = ctx(4);
        let c = curve(3, 5, 7, true);
        assert_eq!(apply_iso(&k, &c, IsoWitness::IDENTITY).unwrap(), c);
        let w = IsoWitness {
            lambda: Fe::ZERO,
            nu: Fe::ONE,
        };
        assert_eq!(apply_iso(&k, &c, w), Err(Error::ZeroLambda));
    }

    #[test]
    fn sqrt_b_over_a_equalizes() {
        let k = ctx(5);
        for a in k.nonzero_elements() {
            for b in k.nonzero_elements() {
                let c = curve(a.0, b.0, 9, false);
                let lambda = k.sqrt(k.div(b, a));
                let img = apply_iso(
                    &k,
                    &c,
                    IsoWitness {
                        lambda,
                        nu: Fe::ZERO,
                    },
                )
                .unwrap();
                assert_eq!(img.a, img.b);
            }
        }
    }

    #[test]
    fn normalize_is_idempotent() {
        let k = ctx(6);
        let g = Fe(2);
        let c = curve(1, k.square(g).0, 5, false);
        let n = normalize(&k, &c);
        assert_eq!(n.a, n.b);
        assert_eq!(n.a, k.pow(g, 5));
        assert_eq!(normalize(&k, &curve(7, 0, 3, true)), curve(7, 0, 3, true));
        for a in 1..64 {
            for b in (0..64).step_by(7) {
                let c = curve(a, b, (a * 3 + b) % 64, b % 2 == 0);
                let n = normalize(&k, &c);
                assert!(n.is_normalized());
                assert_eq!(normalize(&k, &n), n);
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        let k = ctx(3);
        assert!(is_isomorphic(&k, &curve(1, 0, 0, false), &curve(1, 0, 0, true)).is_some());
        assert!(is_isomorphic(&k, &curve(1, 0, 1, false), &curve(1, 0, 1, true)).is_none());
        let c = curve(3, 3, 5, false);
        let w = IsoWitness {
            lambda: Fe(6),
            nu: Fe(3),
        };
        let img = apply_iso(&k, &c, w).unwrap();
        let found = is_isomorphic(&k, &c, &img).unwrap();
        assert_eq!(apply_iso(&k, &c, found).unwrap(), img);
    }

    #[test]
    fn text_round_trip() {
        let k = ctx(8);
        let c = curve(0xa1, 0xa1, 0x3f, true);
        assert_eq!(c.to_text(), "a1:a1:3f:1");
        assert_eq!(c.to_text_with_degree(8), "8:a1:a1:3f:1");
        assert_eq!(Curve::parse(&k, "a1:a1:3f:1").unwrap(), c);
        assert_eq!(Curve::parse(&k, "8:a1:a1:3f:1").unwrap(), c);
        assert!(Curve::parse(&k, "7:a1:a1:3f:1").is_err());
        assert!(Curve::parse(&k, "0:1:1:0").is_err());
        assert!(Curve::parse(&k, "1:1:100:0").is_err());
        assert!(Curve::parse(&k, "1:1:1:2").is_err());
        assert!(Curve::parse(&k, "1:1:1").is_err());
    }
}
