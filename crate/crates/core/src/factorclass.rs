//! Factorization shape of `P_ab(x) = a^2 x^5 + b^2 x + a`, the kernel `W`
//! of the linearized polynomial `E_ab(x) = a^4 x^16 + b^4 x^8 + b^2 x^2 + a x`,
//! and the closed-form shape counts over the family `b = a`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{Fe, FieldCtx};
use crate::linalg;

/// Degrees of the irreducible factors of `P_ab` over `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorShape {
    /// `(5)`
    Irreducible,
    /// `(1)(4)`
    OneFour,
    /// `(2)(3)`
    TwoThree,
    /// `(1)(1)(3)`
    OneOneThree,
    /// `(1)(2)(2)`
    OneTwoTwo,
    /// `(1)(1)(1)(2)`
    OneOneOneTwo,
    /// `(1)(1)(1)(1)(1)`
    Split,
}

impl FactorShape {
    pub const ALL: [FactorShape; 7] = [
        FactorShape::Irreducible,
        FactorShape::OneFour,
        FactorShape::TwoThree,
        FactorShape::OneOneThree,
        FactorShape::OneTwoTwo,
        FactorShape::OneOneOneTwo,
        FactorShape::Split,
    ];

    pub fn degrees(self) -> &'static [u8] {
        match self {
            FactorShape::Irreducible => &[5],
            FactorShape::OneFour => &[1, 4],
            FactorShape::TwoThree => &[2, 3],
            FactorShape::OneOneThree => &[1, 1, 3],
            FactorShape::OneTwoTwo => &[1, 2, 2],
            FactorShape::OneOneOneTwo => &[1, 1, 1, 2],
            FactorShape::Split => &[1, 1, 1, 1, 1],
        }
    }

    pub fn from_degrees(degrees: &[u8]) -> Option<Self> {
        let mut d = degrees.to_vec();
        d.sort_unstable();
        Self::ALL.into_iter().find(|s| s.degrees() == d.as_slice())
    }

    /// Number of roots in `k`.
    pub fn linear_factors(self) -> usize {
        self.degrees().iter().filter(|&&d| d == 1).count()
    }

    /// `dim W` implied by the shape.
    pub fn w(self) -> u32 {
        match self {
            FactorShape::Irreducible => 0,
            FactorShape::OneFour | FactorShape::TwoThree => 1,
            FactorShape::OneOneThree | FactorShape::OneTwoTwo => 2,
            FactorShape::OneOneOneTwo => 3,
            FactorShape::Split => 4,
        }
    }

    /// `dim W` of the same curve over the quadratic extension.
    pub fn w_tilde(self) -> u32 {
        match self {
            FactorShape::Irreducible => 0,
            FactorShape::OneFour | FactorShape::TwoThree | FactorShape::OneOneThree => 2,
            FactorShape::OneTwoTwo | FactorShape::OneOneOneTwo | FactorShape::Split => 4,
        }
    }

    fn from_radical(w: u32, roots: usize) -> Option<Self> {
        Some(match (w, roots) {
            (0, 0) => FactorShape::Irreducible,
            (1, 1) => FactorShape::OneFour,
            (1, 0) => FactorShape::TwoThree,
            (2, 2) => FactorShape::OneOneThree,
            (2, 1) => FactorShape::OneTwoTwo,
            (3, 3) => FactorShape::OneOneOneTwo,
            (4, 5) => FactorShape::Split,
            _ => return None,
        })
    }
}

impl fmt::Display for FactorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.degrees() {
            write!(f, "({d})")?;
        }
        Ok(())
    }
}

impl Serialize for FactorShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Factorization type of the quartic `x^4 + x^3 + x^2 + x + e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarticShape {
    /// `(1)(3)`
    OneThree,
    /// `(4)`
    Irreducible,
    /// `(1)(1)(2)`
    OneOneTwo,
    /// `(2)(2)`
    TwoTwo,
    /// `(1)(1)(1)(1)`
    Split,
}

impl QuarticShape {
    /// Shape of `(x + z) * quartic`.
    fn with_linear(self) -> FactorShape {
        match self {
            QuarticShape::OneThree => FactorShape::OneOneThree,
            QuarticShape::Irreducible => FactorShape::OneFour,
            QuarticShape::OneOneTwo => FactorShape::OneOneOneTwo,
            QuarticShape::TwoTwo => FactorShape::OneTwoTwo,
            QuarticShape::Split => FactorShape::Split,
        }
    }
}

/// `P_ab` and `E_ab` for fixed `(a, b)`, with the coefficient powers cached.
#[derive(Debug, Clone, Copy)]
pub struct Pab<'a> {
    ctx: &'a FieldCtx,
    a: Fe,
    b: Fe,
    a2: Fe,
    b2: Fe,
    a4: Fe,
    b4: Fe,
}

impl<'a> Pab<'a> {
    pub fn new(ctx: &'a FieldCtx, a: Fe, b: Fe) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let a2 = ctx.square(a);
        let b2 = ctx.square(b);
        Ok(Pab {
            ctx,
            a,
            b,
            a2,
            b2,
            a4: ctx.square(a2),
            b4: ctx.square(b2),
        })
    }

    pub fn a(&self) -> Fe {
        self.a
    }

    pub fn b(&self) -> Fe {
        self.b
    }

    /// `a^2 x^5 + b^2 x + a`
    #[inline]
    pub fn p(&self, x: Fe) -> Fe {
        let k = self.ctx;
        let x4 = k.square(k.square(x));
        k.mul(self.a2, k.mul(x4, x)) + k.mul(self.b2, x) + self.a
    }

    /// `a^4 x^16 + b^4 x^8 + b^2 x^2 + a x`
    #[inline]
    pub fn e(&self, x: Fe) -> Fe {
        let k = self.ctx;
        let x2 = k.square(x);
        let x8 = k.square(k.square(x2));
        let x16 = k.square(x8);
        k.mul(self.a4, x16) + k.mul(self.b4, x8) + k.mul(self.b2, x2) + k.mul(self.a, x)
    }

    /// Images of the power basis under `E_ab`, as packed vectors.
    pub fn e_images(&self) -> Vec<u64> {
        (0..self.ctx.m())
            .map(|i| self.e(Fe(1 << i)).0 as u64)
            .collect()
    }
}

pub fn eval_p(ctx: &FieldCtx, a: Fe, b: Fe, x: Fe) -> Result<Fe> {
    Ok(Pab::new(ctx, a, b)?.p(x))
}

pub fn eval_e(ctx: &FieldCtx, a: Fe, b: Fe, x: Fe) -> Result<Fe> {
    Ok(Pab::new(ctx, a, b)?.e(x))
}

/// Where the two roots `z, z'` with `z + z' = v` live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrigin {
    /// Both roots in `k`.
    InK,
    /// Conjugate roots in `k2 - k`.
    Conjugate,
}

/// An element `v` of `W` with `v^5 P(v) = 1`, i.e. a sum of two roots of `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSum {
    pub v: Fe,
    pub origin: PairOrigin,
}

/// The kernel `W` of `E_ab` on `k`, with every nonzero element classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalData {
    pub w: u32,
    pub basis: Vec<Fe>,
    /// All `2^w` elements; index `i` is the combination of basis vectors
    /// selected by the bits of `i`.
    pub elements: Vec<Fe>,
    /// Roots of `P` in `k`, increasing.
    pub roots_in_k: Vec<Fe>,
    pub pair_sums: Vec<PairSum>,
}

impl RadicalData {
    /// Coordinates of `z` in `basis`, if `z` lies in `W`.
    pub fn coords(&self, z: Fe) -> Option<u32> {
        self.elements.iter().position(|&e| e == z).map(|i| i as u32)
    }

    pub fn contains(&self, z: Fe) -> bool {
        self.coords(z).is_some()
    }

    /// Shape read off from `(w, |Z|)`.
    pub fn shape(&self) -> FactorShape {
        FactorShape::from_radical(self.w, self.roots_in_k.len())
            .expect("kernel classification always yields a valid (w, |Z|) pair")
    }

    pub fn conjugate_pair_sums(&self) -> impl Iterator<Item = Fe> + '_ {
        self.pair_sums
            .iter()
            .filter(|p| p.origin == PairOrigin::Conjugate)
            .map(|p| p.v)
    }
}

/// Computes `W = ker(E_ab) ∩ k` by Gaussian elimination and classifies its
/// nonzero elements into roots of `P` and pair sums.
pub fn kernel_e(ctx: &FieldCtx, a: Fe, b: Fe) -> Result<RadicalData> {
    let pab = Pab::new(ctx, a, b)?;
    let kernel = linalg::kernel(&pab.e_images());
    let echelon = linalg::BitEchelon::from_vectors(kernel);
    let basis_bits = echelon.basis();
    let elements: Vec<Fe> = linalg::span_elements(&basis_bits)
        .into_iter()
        .map(|v| Fe(v as u32))
        .collect();
    let mut roots_in_k = Vec::new();
    let mut pair_sums = Vec::new();
    for &z in elements.iter().filter(|z| !z.is_zero()) {
        let pz = pab.p(z);
        if pz.is_zero() {
            roots_in_k.push(z);
            continue;
        }
        let z5 = ctx.mul(ctx.square(ctx.square(z)), z);
        if ctx.mul(z5, pz) != Fe::ONE {
            return Err(Error::Unclassifiable(z.0));
        }
        // z^2 + v z + (a v^3)^{-1} has its roots in k iff (a v^5)^{-1} in AS(k)
        let origin = if ctx.trace(ctx.inv(ctx.mul(a, z5))) {
            PairOrigin::Conjugate
        } else {
            PairOrigin::InK
        };
        pair_sums.push(PairSum { v: z, origin });
    }
    roots_in_k.sort();
    pair_sums.sort_by_key(|p| p.v);
    Ok(RadicalData {
        w: basis_bits.len() as u32,
        basis: basis_bits.into_iter().map(|v| Fe(v as u32)).collect(),
        elements,
        roots_in_k,
        pair_sums,
    })
}

/// Factorization type of `x^4 + x^3 + x^2 + x + e`, `e != 0`.
pub fn quartic_shape(ctx: &FieldCtx, e: Fe) -> Result<QuarticShape> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let Some(lambda) = ctx.cube_root(e) else {
        return Ok(QuarticShape::OneThree);
    };
    if ctx.m() % 2 == 1 {
        return Ok(if ctx.trace(lambda) {
            QuarticShape::Irreducible
        } else {
            QuarticShape::OneOneTwo
        });
    }
    // m even: the three cube roots sum to zero, so either one or all three
    // lie in AS(k)
    let eps = ctx.cube_root_of_unity().expect("m even");
    let roots = [
        lambda,
        ctx.mul(lambda, eps),
        ctx.mul(lambda, ctx.square(eps)),
    ];
    let in_as = roots.iter().filter(|&&r| !ctx.trace(r)).count();
    Ok(if in_as == 3 {
        QuarticShape::Split
    } else {
        QuarticShape::TwoTwo
    })
}

/// Smallest root of `P_ab` in `k`, read from the radical (roots of `P`
/// always lie in `W`).
fn smallest_root(ctx: &FieldCtx, a: Fe, b: Fe) -> Result<Option<Fe>> {
    Ok(kernel_e(ctx, a, b)?.roots_in_k.first().copied())
}

/// Closed-form factorization type of `P_ab` for `b` in `{0, a}`.
pub fn shape_p(ctx: &FieldCtx, a: Fe, b: Fe) -> Result<FactorShape> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let m = ctx.m();
    if b.is_zero() {
        return Ok(match m % 4 {
            1 | 3 => FactorShape::OneFour,
            2 => FactorShape::OneTwoTwo,
            _ if ctx.power_class(a, 5)? => FactorShape::Split,
            _ => FactorShape::Irreducible,
        });
    }
    if b != a {
        return Err(Error::NotNormalized);
    }
    match smallest_root(ctx, a, b)? {
        None if m % 2 == 1 => Ok(FactorShape::TwoThree),
        None => Ok(FactorShape::Irreducible),
        Some(z) => {
            let z4 = ctx.square(ctx.square(z));
            let e = Fe::ONE + ctx.inv(z4);
            Ok(quartic_shape(ctx, e)?.with_linear())
        }
    }
}

/// Histogram of `shape_p(a, a)` over `a` in `k*`.
pub fn shape_census_a(ctx: &FieldCtx) -> BTreeMap<FactorShape, u64> {
    let mut out = BTreeMap::new();
    for a in ctx.nonzero_elements() {
        let s = shape_p(ctx, a, a).expect("a != 0 and b = a");
        *out.entry(s).or_insert(0) += 1;
    }
    out
}

/// Closed-form values of [`shape_census_a`]; shapes that never occur for
/// this parity of `m` are omitted.
pub fn shape_table(m: u32) -> BTreeMap<FactorShape, u64> {
    let q = 1i64 << m;
    let four = i64::from(m.is_multiple_of(4));
    let rows: Vec<(FactorShape, i64)> = if m % 2 == 1 {
        vec![
            (FactorShape::TwoThree, (q + 1) / 3),
            (FactorShape::OneOneOneTwo, (q - 2) / 6),
            (FactorShape::OneFour, q / 2 - 1),
        ]
    } else {
        vec![
            (FactorShape::OneOneThree, (q - 1) / 3),
            (FactorShape::OneTwoTwo, q / 4 - (1 - four)),
            (FactorShape::Split, (q - 4 - 12 * four) / 60),
            (FactorShape::Irreducible, 2 * (q + 1 - 2 * four) / 5),
        ]
    };
    rows.into_iter()
        .filter(|&(_, n)| n > 0)
        .map(|(s, n)| (s, n as u64))
        .collect()
}
