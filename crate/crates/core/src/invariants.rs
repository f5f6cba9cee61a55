//! Invariants of the quadratic form `Q(x) = Tr(a x^5 + b x^3 + c x)` that
//! control the point counts: the linear forms `l` and `l_c` on `W`, the
//! codimension of `V = ker(Q|W)` in `W`, and the signs of `Q` over `k` and
//! over `k2`.
//!
//! Everything is computed from `k`-level data only.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorclass::{kernel_e, FactorShape, RadicalData};
use crate::gf2::{Fe, FieldCtx};
use crate::linalg;
use crate::sscurve::Curve;

/// `sgn(Q)`: `Zero` when `V` is a proper subspace of `W`, otherwise the
/// parity of the induced non-degenerate form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

impl Sign {
    /// `+1`, `-1` or `0`.
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Zero => 0,
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Zero => "0",
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A linear form on `W`, stored by its values on the basis of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearForm {
    bits: u32,
}

impl LinearForm {
    pub fn from_basis_values(bits: u32) -> Self {
        LinearForm { bits }
    }

    pub fn basis_values(self) -> u32 {
        self.bits
    }

    /// Value on `z`, which must lie in `W`.
    pub fn eval(self, rad: &RadicalData, z: Fe) -> bool {
        let coords = rad.coords(z).expect("linear form evaluated outside W");
        (coords & self.bits).count_ones() & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

/// Summary of the point-count invariants of one curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantData {
    pub w: u32,
    pub v_codim: u32,
    pub sgn_q: Sign,
    pub w_tilde: u32,
    pub sgn_q_tilde: Sign,
    pub shape: FactorShape,
}

/// Value of `l` on one nonzero element of `W`.
fn ell_value(ctx: &FieldCtx, rad: &RadicalData, z: Fe) -> Result<bool> {
    if rad.roots_in_k.contains(&z) {
        return Ok(ctx.trace(Fe::ONE));
    }
    match rad.pair_sums.iter().find(|p| p.v == z) {
        Some(p) => Ok(p.origin == crate::factorclass::PairOrigin::Conjugate),
        None => Err(Error::Unclassifiable(z.0)),
    }
}

/// The form `l` on `W`: `Tr(1)` on roots of `P`, `0` on sums of two roots
/// in `k`, `1` on sums of two conjugate roots in `k2 - k`.
pub fn ell(ctx: &FieldCtx, rad: &RadicalData) -> Result<LinearForm> {
    let mut bits = 0;
    for (i, &z) in rad.basis.iter().enumerate() {
        if ell_value(ctx, rad, z)? {
            bits |= 1 << i;
        }
    }
    Ok(LinearForm { bits })
}

/// `l_c = L_{c + b^2/a}` restricted to `W`.
pub fn ell_c(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> LinearForm {
    let shift = curve.c + ctx.div(ctx.square(curve.b), curve.a);
    let bits = rad
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &z)| ctx.trace(ctx.mul(shift, z)))
        .fold(0, |acc, (i, _)| acc | 1 << i);
    LinearForm { bits }
}

/// `codim(V, W)`: `0` iff `l_c = l`.
pub fn v_codim(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> Result<u32> {
    Ok(u32::from(ell_c(ctx, curve, rad) != ell(ctx, rad)?))
}

/// Arf invariant of `Q` on `k / W`, by symplectic reduction over a
/// complement of `W` in `k`.
pub fn arf_invariant(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> Result<bool> {
    let q = |x: Fe| curve.q_form(ctx, x);
    let polar = |x: Fe, y: Fe| q(x + y) ^ q(x) ^ q(y);
    let basis: Vec<u64> = rad.basis.iter().map(|z| z.0 as u64).collect();
    let mut rest: Vec<Fe> = linalg::complement(&basis, ctx.m())
        .into_iter()
        .map(|v| Fe(v as u32))
        .collect();
    let mut arf = false;
    while let Some(e) = rest.pop() {
        let pos = rest
            .iter()
            .position(|&f| polar(e, f))
            .ok_or(Error::DegenerateForm)?;
        let f = rest.swap_remove(pos);
        arf ^= q(e) & q(f);
        for g in rest.iter_mut() {
            let (ge, gf) = (polar(*g, e), polar(*g, f));
            if gf {
                *g += e;
            }
            if ge {
                *g += f;
            }
        }
    }
    Ok(arf)
}

/// `sgn(Q)`, including the effect of the twist bit `d`.
pub fn sign_q(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> Result<Sign> {
    if v_codim(ctx, curve, rad)? == 1 {
        return Ok(Sign::Zero);
    }
    let sign = if arf_invariant(ctx, curve, rad)? {
        Sign::Minus
    } else {
        Sign::Plus
    };
    // adding d0 adds Tr(d0) = 1 to Q
    Ok(if curve.d { sign.negate() } else { sign })
}

/// Whether `V~ = W~` over `k2`, decided on `k`: `l_c` vanishes on the sums
/// of conjugate root pairs, and for shape `(1)(4)` takes the value `1` on
/// the root in `k`.
pub fn v_tilde_eq_w_tilde(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> bool {
    let lc = ell_c(ctx, curve, rad);
    let pairs_ok = rad.conjugate_pair_sums().all(|v| !lc.eval(rad, v));
    let root_ok = match rad.shape() {
        FactorShape::OneFour => lc.eval(rad, rad.roots_in_k[0]),
        _ => true,
    };
    pairs_ok && root_ok
}

/// `sgn(Q~)`, the sign of the form over `k2`, from `k`-level data.
pub fn sign_q_tilde(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> Sign {
    let lc = ell_c(ctx, curve, rad);
    let tr1 = ctx.trace(Fe::ONE);
    let all_differ_from_tr1 = || rad.roots_in_k.iter().all(|&z| lc.eval(rad, z) != tr1);
    let plus_if = |b: bool| if b { Sign::Plus } else { Sign::Zero };
    match rad.shape() {
        FactorShape::Irreducible => Sign::Plus,
        FactorShape::OneFour | FactorShape::TwoThree | FactorShape::OneTwoTwo => {
            plus_if(v_tilde_eq_w_tilde(ctx, curve, rad))
        }
        FactorShape::OneOneThree => {
            if all_differ_from_tr1() {
                Sign::Minus
            } else {
                Sign::Plus
            }
        }
        FactorShape::OneOneOneTwo => {
            if !v_tilde_eq_w_tilde(ctx, curve, rad) {
                Sign::Zero
            } else if all_differ_from_tr1() {
                Sign::Minus
            } else {
                Sign::Plus
            }
        }
        FactorShape::Split => {
            let zeros = rad.roots_in_k.iter().filter(|&&z| !lc.eval(rad, z)).count();
            if zeros == 3 {
                Sign::Plus
            } else {
                Sign::Minus
            }
        }
    }
}

pub fn invariants_with(ctx: &FieldCtx, curve: &Curve, rad: &RadicalData) -> Result<InvariantData> {
    let shape = rad.shape();
    Ok(InvariantData {
        w: rad.w,
        v_codim: v_codim(ctx, curve, rad)?,
        sgn_q: sign_q(ctx, curve, rad)?,
        w_tilde: shape.w_tilde(),
        sgn_q_tilde: sign_q_tilde(ctx, curve, rad),
        shape,
    })
}

pub fn invariants(ctx: &FieldCtx, curve: &Curve) -> Result<InvariantData> {
    let rad = kernel_e(ctx, curve.a, curve.b)?;
    invariants_with(ctx, curve, &rad)
}
