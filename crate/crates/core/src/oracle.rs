//! Brute-force ground truth.
//!
//! Everything here works straight from the curve equation and the field
//! arithmetic: point counts by evaluating the model over every abscissa,
//! radicals by testing the bilinear form against a basis, and isomorphism
//! classes by closing orbits under every `(lambda, nu)`. None of it calls
//! into the closed-form path.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2::{Fe, FieldCtx, FieldOps, QuadExt};
use crate::linalg::BitEchelon;
use crate::sscurve::Curve;

/// Point counts over `k` and `k2` obtained by enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCount {
    pub n1: u64,
    pub n2: u64,
}

fn check_level(level: u32) -> Result<()> {
    if level == 1 || level == 2 {
        Ok(())
    } else {
        Err(Error::SizeGuard {
            what: "oracle level",
            limit: "level in {1, 2}",
        })
    }
}

fn rhs<F: FieldOps>(f: &F, c: &Curve, x: F::Elem, d: F::Elem) -> F::Elem {
    let x2 = f.times(x, x);
    let x3 = f.times(x2, x);
    let x5 = f.times(x3, x2);
    f.times(f.embed(c.a), x5) + f.times(f.embed(c.b), x3) + f.times(f.embed(c.c), x) + d
}

fn count_over<F: FieldOps>(f: &F, ctx: &FieldCtx, curve: &Curve) -> u64 {
    let d = f.embed(if curve.d { ctx.d0() } else { Fe::ZERO });
    let affine: u64 = (0..f.order())
        .filter(|&i| !f.abs_trace(rhs(f, curve, f.element_at(i), d)))
        .count() as u64;
    1 + 2 * affine
}

/// `|C(F_{q^level})|`: one point at infinity plus two affine points for
/// every `x` whose right-hand side has absolute trace zero.
pub fn brute_count(ctx: &FieldCtx, curve: &Curve, level: u32) -> Result<u64> {
    check_level(level)?;
    if ctx.m() * level > 24 {
        return Err(Error::SizeGuard {
            what: "brute_count",
            limit: "m * level <= 24",
        });
    }
    Ok(match level {
        1 => count_over(ctx, ctx, curve),
        _ => count_over(&QuadExt(ctx), ctx, curve),
    })
}

pub fn brute_counts(ctx: &FieldCtx, curve: &Curve) -> Result<OracleCount> {
    Ok(OracleCount {
        n1: brute_count(ctx, curve, 1)?,
        n2: brute_count(ctx, curve, 2)?,
    })
}

fn q_form<F: FieldOps>(f: &F, c: &Curve, x: F::Elem) -> bool {
    let zero = f.embed(Fe::ZERO);
    f.abs_trace(rhs(f, c, x, zero))
}

fn polar<F: FieldOps>(f: &F, c: &Curve, x: F::Elem, y: F::Elem) -> bool {
    q_form(f, c, x + y) ^ q_form(f, c, x) ^ q_form(f, c, y)
}

/// Elements `x` with `<x, y> = 0` for every `y` in `probes`, returned as an
/// echelon basis of packed vectors.
fn orthogonal_to<F: FieldOps>(f: &F, c: &Curve, probes: &[F::Elem]) -> BitEchelon {
    let mut e = BitEchelon::new();
    for i in 0..f.order() {
        let x = f.element_at(i);
        if probes.iter().all(|&y| !polar(f, c, x, y)) {
            e.insert(i, 0);
        }
    }
    e
}

/// Radical of the polar form of `Q` over `F_{q^level}`, found by testing
/// every element against a basis.
pub fn brute_radical(ctx: &FieldCtx, curve: &Curve, level: u32) -> Result<Vec<u64>> {
    check_level(level)?;
    if ctx.m() * level > 16 {
        return Err(Error::SizeGuard {
            what: "brute_radical",
            limit: "m * level <= 16",
        });
    }
    Ok(match level {
        1 => {
            let basis: Vec<Fe> = (0..ctx.m()).map(|i| Fe(1 << i)).collect();
            orthogonal_to(ctx, curve, &basis).basis()
        }
        _ => {
            let ext = QuadExt(ctx);
            let basis: Vec<_> = (0..2 * ctx.m()).map(|i| ext.element_at(1 << i)).collect();
            orthogonal_to(&ext, curve, &basis).basis()
        }
    })
}

/// `{u in k2 : <u, l> = 0 for all l in k}`, packed as `lo | hi << m`.
pub fn brute_orthogonal_of_base(ctx: &FieldCtx, curve: &Curve) -> Result<Vec<u64>> {
    if ctx.m() > 8 {
        return Err(Error::SizeGuard {
            what: "brute_orthogonal_of_base",
            limit: "m <= 8",
        });
    }
    let ext = QuadExt(ctx);
    let probes: Vec<_> = (0..ctx.m()).map(|i| ext.embed(Fe(1 << i))).collect();
    Ok(orthogonal_to(&ext, curve, &probes).basis())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The isomorphism action written out directly, with the fourth root taken
/// as `x^{q^2/4}`.
fn act(ctx: &FieldCtx, c: &Curve, lambda: Fe, nu: Fe) -> Curve {
    let q = ctx.q();
    let e = ctx.mul(ctx.pow(c.a, 4), ctx.pow(nu, 16))
        + ctx.mul(ctx.pow(c.b, 4), ctx.pow(nu, 8))
        + ctx.mul(ctx.pow(c.b, 2), ctx.pow(nu, 2))
        + ctx.mul(c.a, nu);
    let root4 = ctx.pow(e, q * q / 4);
    let t = ctx.mul(c.a, ctx.pow(nu, 5)) + ctx.mul(c.b, ctx.pow(nu, 3)) + ctx.mul(c.c, nu);
    Curve {
        a: ctx.mul(ctx.pow(lambda, 5), c.a),
        b: ctx.mul(ctx.pow(lambda, 3), c.b),
        c: ctx.mul(lambda, c.c + root4),
        d: c.d ^ ctx.trace(t),
    }
}

/// Partitions all `(q-1) q^2 * 2` curves (with unrestricted `b`) into
/// orbits under every `(lambda, nu)`. Orbits and their members are sorted.
pub fn brute_classes(ctx: &FieldCtx) -> Result<Vec<Vec<Curve>>> {
    if ctx.m() > 4 {
        return Err(Error::SizeGuard {
            what: "brute_classes",
            limit: "m <= 4",
        });
    }
    let q = ctx.q() as usize;
    let index = |c: &Curve| {
        (((c.a.0 as usize - 1) * q + c.b.0 as usize) * q + c.c.0 as usize) * 2 + c.d as usize
    };
    let mut curves = Vec::with_capacity((q - 1) * q * q * 2);
    for a in ctx.nonzero_elements() {
        for b in ctx.elements() {
            for c in ctx.elements() {
                for d in [false, true] {
                    curves.push(Curve { a, b, c, d });
                }
            }
        }
    }
    let mut parent: Vec<usize> = (0..curves.len()).collect();
    for (i, c) in curves.iter().enumerate() {
        for lambda in ctx.nonzero_elements() {
            for nu in ctx.elements() {
                let j = index(&act(ctx, c, lambda, nu));
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut orbits: BTreeMap<usize, Vec<Curve>> = BTreeMap::new();
    for (i, c) in curves.iter().enumerate() {
        let r = find(&mut parent, i);
        orbits.entry(r).or_default().push(*c);
    }
    // curves were generated in increasing order, so members are sorted and
    // the roots (minimal indices) order the orbits by their smallest member
    Ok(orbits.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sscurve::twist;

    fn ctx(m: u32) -> FieldCtx {
        FieldCtx::new(m).unwrap()
    }

    fn curve(a: u32, b: u32, c: u32, d: bool) -> Curve {
        Curve {
            a: Fe(a),
            b: Fe(b),
            c: Fe(c),
            d,
        }
    }

    #[test]
    fn hand_counts_over_f2() {
        let k = ctx(1);
        assert_eq!(brute_count(&k, &curve(1, 0, 0, false), 1).unwrap(), 3);
        assert_eq!(brute_count(&k, &curve(1, 0, 0, false), 2).unwrap(), 5);
        assert_eq!(brute_count(&k, &curve(1, 0, 1, false), 1).unwrap(), 5);
    }

    #[test]
    fn twist_counts_are_complementary() {
        for m in 1..=5 {
            let k = ctx(m);
            let q = k.q();
            for a in k.nonzero_elements().step_by(3) {
                for c in k.elements().step_by(5) {
                    let cv = curve(a.0, a.0, c.0, false);
                    let n = brute_counts(&k, &cv).unwrap();
                    let t = brute_counts(&k, &twist(&cv)).unwrap();
                    assert_eq!(n.n1 + t.n1, 2 * q + 2);
                    assert_eq!(n.n2, t.n2);
                }
            }
        }
    }

    #[test]
    fn size_guards() {
        let k = ctx(13);
        assert!(matches!(
            brute_count(&k, &curve(1, 0, 0, false), 2),
            Err(Error::SizeGuard { .. })
        ));
        assert!(matches!(
            brute_count(&k, &curve(1, 0, 0, false), 3),
            Err(Error::SizeGuard { .. })
        ));
        assert!(matches!(
            brute_radical(&ctx(9), &curve(1, 0, 0, false), 2),
            Err(Error::SizeGuard { .. })
        ));
        assert!(matches!(
            brute_classes(&ctx(5)),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn radical_of_x5_over_f8() {
        let k = ctx(3);
        assert_eq!(
            brute_radical(&k, &curve(1, 0, 0, false), 1).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn orbit_counts_small() {
        assert_eq!(brute_classes(&ctx(1)).unwrap().len(), 6);
        assert_eq!(brute_classes(&ctx(2)).unwrap().len(), 14);
    }
}
