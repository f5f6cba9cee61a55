//! Isomorphism classes of supersingular curves, their distribution over the
//! possible zeta functions, curve search, and the supersingular isogeny
//! classes of abelian surfaces.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::factorclass::{kernel_e, FactorShape, Pab, RadicalData};
use crate::gf2::{Fe, FieldCtx};
use crate::linalg::{self, BitEchelon};
use crate::sscurve::{apply_iso, Curve, IsoWitness};
use crate::zeta::{count_points_with, ZetaData};

/// A canonical representative of one isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassRep {
    pub curve: Curve,
    pub zeta: ZetaData,
    pub shape: FactorShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IsogenyKind {
    Simple,
    Split { b1: i64, b2: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsogenyClassInfo {
    pub a1: i64,
    pub a2: i64,
    #[serde(flatten)]
    pub kind: IsogenyKind,
    pub jacobian_count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EmptyReason {
    /// `(a1, a2)` belongs to a supersingular isogeny class with no jacobian.
    NoJacobian,
    /// `(a1, a2)` is not the zeta data of any supersingular abelian surface.
    NotSupersingular,
}

impl fmt::Display for EmptyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmptyReason::NoJacobian => "isogeny class contains no jacobian",
            EmptyReason::NotSupersingular => "not a supersingular isogeny class",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FindResult {
    Found(Curve),
    Empty(EmptyReason),
}

impl FindResult {
    pub fn curve(self) -> Option<Curve> {
        match self {
            FindResult::Found(c) => Some(c),
            FindResult::Empty(_) => None,
        }
    }
}

/// Fixed `(a, b)` with its radical and the subspace `E_ab(k)^{1/4}` that
/// moves `c` within a class.
struct Stratum<'a> {
    ctx: &'a FieldCtx,
    a: Fe,
    b: Fe,
    rad: RadicalData,
    e_images: Vec<u64>,
    shifts: BitEchelon,
}

impl<'a> Stratum<'a> {
    fn new(ctx: &'a FieldCtx, a: Fe, b: Fe) -> Result<Self> {
        let rad = kernel_e(ctx, a, b)?;
        let e_images = Pab::new(ctx, a, b)?.e_images();
        let shifts = BitEchelon::from_vectors(
            e_images
                .iter()
                .map(|&v| ctx.fourth_root(Fe(v as u32)).0 as u64),
        );
        Ok(Stratum {
            ctx,
            a,
            b,
            rad,
            e_images,
            shifts,
        })
    }

    /// The `2^w` smallest elements of the cosets of the shift space.
    fn c_candidates(&self) -> Vec<Fe> {
        self.shifts
            .coset_representatives(self.ctx.m())
            .into_iter()
            .map(|v| Fe(v as u32))
            .collect()
    }

    /// Moves `c` to the smallest element of its coset, adjusting `d`.
    fn canonical_c(&self, curve: Curve) -> Curve {
        let k = self.ctx;
        let target = self.shifts.reduce(curve.c.0 as u64);
        let delta = curve.c + Fe(target as u32);
        if delta.is_zero() {
            return curve;
        }
        let e = k.square(k.square(delta));
        let nu =
            linalg::preimage(&self.e_images, e.0 as u64).expect("delta lies in the shift space");
        apply_iso(
            k,
            &curve,
            IsoWitness {
                lambda: Fe::ONE,
                nu: Fe(nu as u32),
            },
        )
        .expect("lambda = 1")
    }

    fn curve(&self, c: Fe, d: bool) -> Curve {
        Curve {
            a: self.a,
            b: self.b,
            c,
            d,
        }
    }

    /// Canonical representatives of the classes with this `(a, b)`.
    ///
    /// `group` holds the `lambda` with `lambda^5 a = a` and
    /// `lambda^3 b = b`.
    fn classes(&self, group: &[Fe]) -> Result<Vec<ClassRep>> {
        let k = self.ctx;
        let cands = self.c_candidates();
        let index: BTreeMap<Fe, usize> = cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let node = |c: &Curve| index[&c.c] * 2 + c.d as usize;
        let mut parent: Vec<usize> = (0..2 * cands.len()).collect();
        let mut union = |x: usize, y: usize| {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        };
        for &c in &cands {
            for d in [false, true] {
                let cur = self.curve(c, d);
                let i = node(&cur);
                for &nu in &self.rad.elements {
                    let img = apply_iso(
                        k,
                        &cur,
                        IsoWitness {
                            lambda: Fe::ONE,
                            nu,
                        },
                    )?;
                    union(i, node(&img));
                }
                for &lambda in group {
                    let img = apply_iso(
                        k,
                        &cur,
                        IsoWitness {
                            lambda,
                            nu: Fe::ZERO,
                        },
                    )?;
                    union(i, node(&self.canonical_c(img)));
                }
            }
        }
        let mut out = Vec::new();
        for (i, &c) in cands.iter().enumerate() {
            for d in [false, true] {
                let n = i * 2 + d as usize;
                if find(&mut parent, n) == n {
                    let curve = self.curve(c, d);
                    let zeta = count_points_with(k, &curve, &self.rad)?;
                    out.push(ClassRep {
                        curve,
                        zeta,
                        shape: self.rad.shape(),
                    });
                }
            }
        }
        Ok(out)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Smallest element of each class of `k* / (k*)^5`.
pub fn fifth_power_class_reps(ctx: &FieldCtx) -> Vec<Fe> {
    let n = ctx.q() - 1;
    let e = if n.is_multiple_of(5) { n / 5 } else { n };
    let mut seen = Vec::new();
    let mut reps = Vec::new();
    for a in ctx.nonzero_elements() {
        let key = ctx.pow(a, e);
        if !seen.contains(&key) {
            seen.push(key);
            reps.push(a);
        }
    }
    reps
}

/// Fifth roots of unity in `k`.
fn mu5(ctx: &FieldCtx) -> Vec<Fe> {
    let n = ctx.q() - 1;
    if !n.is_multiple_of(5) {
        return vec![Fe::ONE];
    }
    let z = ctx
        .nonzero_elements()
        .map(|x| ctx.pow(x, n / 5))
        .find(|&z| z != Fe::ONE)
        .expect("k* is cyclic");
    let mut roots: Vec<Fe> = (0..5).map(|i| ctx.pow(z, i)).collect();
    roots.sort();
    roots
}

/// All `(a, b)` strata, in increasing order of `(a, b)`.
fn strata(ctx: &FieldCtx) -> Vec<(Fe, Fe)> {
    let reps = fifth_power_class_reps(ctx);
    let mut out = Vec::new();
    for a in ctx.nonzero_elements() {
        if reps.contains(&a) {
            out.push((a, Fe::ZERO));
        }
        out.push((a, a));
    }
    out
}

/// One representative per isomorphism class, sorted by curve.
///
/// Each representative is the smallest curve with `b` in `{0, a}` inside
/// its class.
pub fn enumerate_classes(ctx: &FieldCtx) -> Result<Vec<ClassRep>> {
    let roots = mu5(ctx);
    let mut out = Vec::new();
    for (a, b) in strata(ctx) {
        // lambda^5 = lambda^3 = 1 forces lambda = 1 once b = a
        let group = if b.is_zero() {
            &roots[..]
        } else {
            &[Fe::ONE][..]
        };
        out.extend(Stratum::new(ctx, a, b)?.classes(group)?);
    }
    Ok(out)
}

/// `4q - 2`, plus `8` when `4 | m`.
pub fn expected_class_total(m: u32) -> u64 {
    4 * (1u64 << m) - 2 + if m.is_multiple_of(4) { 8 } else { 0 }
}

/// Number of classes per `(a1, a2)`. Every supersingular isogeny class is
/// present, with count `0` when it contains no jacobian.
pub fn class_counts(ctx: &FieldCtx) -> Result<BTreeMap<(i64, i64), u64>> {
    Ok(histogram(ctx.m(), &enumerate_classes(ctx)?))
}

pub fn histogram(m: u32, reps: &[ClassRep]) -> BTreeMap<(i64, i64), u64> {
    let mut counts: BTreeMap<(i64, i64), u64> =
        atlas(m).iter().map(|&(a1, a2, _)| ((a1, a2), 0)).collect();
    for r in reps {
        *counts.entry((r.zeta.a1, r.zeta.a2)).or_default() += 1;
    }
    counts
}

/// `(a1, a2, kind)` of every supersingular isogeny class, sorted by
/// `(a1, a2)`.
pub fn atlas(m: u32) -> Vec<(i64, i64, IsogenyKind)> {
    let q = 1i64 << m;
    // elliptic Frobenius traces and the simple classes
    let (bs, simple): (Vec<i64>, Vec<(i64, i64)>) = if m % 2 == 1 {
        let s = 1i64 << m.div_ceil(2);
        (
            vec![0, s, -s],
            vec![(0, -2 * q), (0, -q), (0, q), (s, q), (-s, q)],
        )
    } else {
        let r = 1i64 << (m / 2);
        (
            vec![0, r, -r, 2 * r, -2 * r],
            vec![(0, -q), (0, 0), (r, q), (-r, q)],
        )
    };
    let mut out = Vec::new();
    for (i, &b1) in bs.iter().enumerate() {
        for &b2 in &bs[i..] {
            let (b1, b2) = (b1.max(b2), b1.min(b2));
            out.push((b1 + b2, 2 * q + b1 * b2, IsogenyKind::Split { b1, b2 }));
        }
    }
    out.extend(
        simple
            .into_iter()
            .map(|(a1, a2)| (a1, a2, IsogenyKind::Simple)),
    );
    out.sort();
    out
}

pub fn isogeny_classes(ctx: &FieldCtx) -> Result<Vec<IsogenyClassInfo>> {
    let counts = class_counts(ctx)?;
    Ok(isogeny_classes_from_counts(ctx.m(), &counts))
}

pub fn isogeny_classes_from_counts(
    m: u32,
    counts: &BTreeMap<(i64, i64), u64>,
) -> Vec<IsogenyClassInfo> {
    atlas(m)
        .into_iter()
        .map(|(a1, a2, kind)| IsogenyClassInfo {
            a1,
            a2,
            kind,
            jacobian_count: counts.get(&(a1, a2)).copied().unwrap_or(0),
        })
        .collect()
}

/// Class counts predicted by the closed-form tables, keyed like
/// [`class_counts`].
pub fn table_counts(m: u32) -> BTreeMap<(i64, i64), u64> {
    let q = 1i64 << m;
    let four = m.is_multiple_of(4);
    let mut t = BTreeMap::new();
    let mut put = |a1: i64, a2: i64, n: i64| {
        assert!(n >= 0);
        t.insert((a1, a2), n as u64);
        t.insert((-a1, a2), n as u64);
    };
    if m % 2 == 1 {
        let s = 1i64 << m.div_ceil(2);
        put(0, 0, q - 1);
        put(0, 2 * q, (q - 2) / 2);
        put(s, 2 * q, q / 2);
        put(2 * s, 4 * q, (q - 2) / 6);
        put(0, -2 * q, (q - 2) / 6);
        put(0, -q, 0);
        put(0, q, (q + 1) / 3);
        put(s, q, (q + 1) / 3);
    } else {
        let r = 1i64 << (m / 2);
        put(0, -2 * q, (q - 4) / 12);
        put(r, 0, 0);
        put(0, q, 2 * (q - 1) / 3);
        put(0, 2 * q, (5 * q - 8) / 12);
        put(r, 2 * q, 0);
        put(2 * r, 2 * q, q / 4);
        put(2 * r, 3 * q, (q - 1) / 3);
        put(3 * r, 4 * q, 0);
        put(4 * r, 6 * q, (q - 4 + if four { 48 } else { 0 }) / 60);
        put(0, -q, (q - 1) / 3);
        put(0, 0, q / 2);
        put(r, q, 2 * (q + 1 + if four { 8 } else { 0 }) / 5);
    }
    t
}

/// Targets `(w, sgn Q~ value, w~)` constraints read off `(a1, a2)`.
fn shape_can_realize(shape: FactorShape, m: u32, a1: i64, a2: i64) -> bool {
    let q = 1i64 << m;
    if a1 != 0 {
        let want = a1.unsigned_abs();
        if 1u64 << ((m + shape.w()) / 2) != want || !(m + shape.w()).is_multiple_of(2) {
            return false;
        }
    }
    let n2_dev = 2 * a2 - a1 * a1;
    if n2_dev != 0 {
        if n2_dev % q != 0 {
            return false;
        }
        if (n2_dev / q).unsigned_abs() != 1u64 << (shape.w_tilde() / 2) {
            return false;
        }
    }
    true
}

/// A curve whose zeta data is `(a1, a2)`, or the reason none exists.
///
/// Strata are visited in increasing `(a, b)` order and skipped when their
/// factorization shape cannot produce `(a1, a2)`.
pub fn find_curve(ctx: &FieldCtx, a1: i64, a2: i64) -> Result<FindResult> {
    if !atlas(ctx.m()).iter().any(|&(x, y, _)| (x, y) == (a1, a2)) {
        return Ok(FindResult::Empty(EmptyReason::NotSupersingular));
    }
    for (a, b) in strata(ctx) {
        let rad = kernel_e(ctx, a, b)?;
        if !shape_can_realize(rad.shape(), ctx.m(), a1, a2) {
            continue;
        }
        let st = Stratum::new(ctx, a, b)?;
        for c in st.c_candidates() {
            for d in [false, true] {
                let curve = st.curve(c, d);
                let z = count_points_with(ctx, &curve, &st.rad)?;
                if (z.a1, z.a2) == (a1, a2) {
                    return Ok(FindResult::Found(curve));
                }
            }
        }
    }
    Ok(FindResult::Empty(EmptyReason::NoJacobian))
}
