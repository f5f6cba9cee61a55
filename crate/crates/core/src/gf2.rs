//! Arithmetic in `k = F_{2^m}` and in its quadratic extension
//! `k2 = k[u]/(u^2 + u + d0)`, together with the trace and Artin-Schreier
//! toolkit used everywhere else.
//!
//! Elements of `k` are bit strings in the power basis of the modulus; the
//! integer value of that encoding is the element order used for every
//! canonical choice in the crate.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};
use crate::linalg;

pub const MAX_DEGREE: u32 = 20;

/// An element of `k`, encoded in the power basis of the field modulus.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// characteristic 2: addition is xor
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Fe {
    type Output = Fe;
    #[inline]
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Fe {
    #[inline]
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl fmt::LowerHex for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// An element `lo + hi*u` of the quadratic extension `k2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Fe2 {
    pub lo: Fe,
    pub hi: Fe,
}

impl Fe2 {
    pub const ZERO: Fe2 = Fe2 {
        lo: Fe::ZERO,
        hi: Fe::ZERO,
    };
    /// The generator `u` of `k2` over `k`.
    pub const U: Fe2 = Fe2 {
        lo: Fe::ZERO,
        hi: Fe::ONE,
    };

    pub fn new(lo: Fe, hi: Fe) -> Self {
        Fe2 { lo, hi }
    }
}

impl From<Fe> for Fe2 {
    fn from(x: Fe) -> Self {
        Fe2 {
            lo: x,
            hi: Fe::ZERO,
        }
    }
}

impl Add for Fe2 {
    type Output = Fe2;
    #[inline]
    fn add(self, rhs: Fe2) -> Fe2 {
        Fe2 {
            lo: self.lo + rhs.lo,
            hi: self.hi + rhs.hi,
        }
    }
}

/// Factorization type of a monic quadratic `x^2 + a x + b` over `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadFactor {
    /// `a = 0`: a double root.
    Inseparable(Fe),
    /// Two distinct roots in `k`, smaller `as_solve` branch first.
    Split(Fe, Fe),
    Irreducible,
}

/// A realization of `F_{2^m}` and its quadratic extension.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    m: u32,
    modulus: u32,
    d0: Fe,
    trace_mask: u32,
    as_images: Vec<u64>,
    /// Generator of the 3-Sylow subgroup of `k*` and its order.
    cube_sylow: (Fe, u64),
}

// ---- polynomials over F2 packed in u64, used only to pick the modulus ----

fn poly_mulmod(mut a: u64, mut b: u64, f: u64) -> u64 {
    let deg = 63 - f.leading_zeros();
    let mut r = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> deg & 1 == 1 {
            a ^= f;
        }
    }
    r
}

fn poly_mod(mut a: u64, f: u64) -> u64 {
    let df = 63 - f.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= df {
        a ^= f << (63 - a.leading_zeros() - df);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or test: `gcd(x^{2^i} + x, f) = 1` for `1 <= i <= deg/2`.
pub(crate) fn poly_is_irreducible(f: u64) -> bool {
    let deg = 63 - f.leading_zeros();
    if deg == 0 {
        return false;
    }
    let x = poly_mod(0b10, f);
    let mut xp = x;
    for _ in 1..=deg / 2 {
        xp = poly_mulmod(xp, xp, f);
        if poly_gcd(f, xp ^ x) != 1 {
            return false;
        }
    }
    true
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let qt = r / new_r;
        (t, new_t) = (new_t, t - qt * new_t);
        (r, new_r) = (new_r, r - qt * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FieldCtx {
    /// Builds `F_{2^m}` on the smallest irreducible modulus with nonzero
    /// constant term and picks `d0` as the smallest element of trace one.
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = ((1u64 << m) | 1..1u64 << (m + 1))
            .step_by(2)
            .find(|&f| poly_is_irreducible(f))
            .expect("an irreducible polynomial exists in every degree")
            as u32;

        let mut ctx = FieldCtx {
            m,
            modulus,
            d0: Fe::ZERO,
            trace_mask: 0,
            as_images: Vec::new(),
            cube_sylow: (Fe::ONE, 1),
        };
        ctx.trace_mask = (0..m)
            .filter(|&i| ctx.trace_by_definition(Fe(1 << i)))
            .fold(0, |acc, i| acc | 1 << i);
        ctx.d0 = (1..ctx.q() as u32)
            .map(Fe)
            .find(|&x| ctx.trace(x))
            .expect("trace is onto");
        ctx.as_images = (0..m)
            .map(|i| {
                let e = Fe(1 << i);
                (e + ctx.square(e)).0 as u64
            })
            .collect();
        ctx.cube_sylow = ctx.find_cube_sylow();
        Ok(ctx)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u64 {
        1u64 << self.m
    }

    /// The modulus as a bit string including the leading `x^m` term.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Human-readable modulus, e.g. `x^3+x+1`.
    pub fn modulus_string(&self) -> String {
        let terms: Vec<String> = (0..=self.m)
            .rev()
            .filter(|i| self.modulus >> i & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        terms.join("+")
    }

    /// Fixed representative of the nontrivial class of `k / AS(k)`.
    #[inline]
    pub fn d0(&self) -> Fe {
        self.d0
    }

    /// Defining constant of `k2 = k[u]/(u^2+u+r)`; equal to `d0`.
    #[inline]
    pub fn ext_r(&self) -> Fe {
        self.d0
    }

    pub fn element(&self, bits: u32) -> Result<Fe> {
        if (bits as u64) < self.q() {
            Ok(Fe(bits))
        } else {
            Err(Error::ElementOutOfRange {
                value: bits,
                m: self.m,
            })
        }
    }

    /// All elements of `k` in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q() as u32).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> {
        (1..self.q() as u32).map(Fe)
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        let top = 1u32 << self.m;
        let (mut a, mut b, mut r) = (x.0, y.0, 0u32);
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        Fe(r)
    }

    #[inline]
    pub fn square(&self, x: Fe) -> Fe {
        self.mul(x, x)
    }

    pub fn pow(&self, x: Fe, mut e: u64) -> Fe {
        let (mut base, mut acc) = (x, Fe::ONE);
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse.
    ///
    /// Panics on zero.
    pub fn inv(&self, x: Fe) -> Fe {
        assert!(!x.is_zero(), "inverse of zero in F_2^{}", self.m);
        self.pow(x, self.q() - 2)
    }

    pub fn checked_inv(&self, x: Fe) -> Option<Fe> {
        (!x.is_zero()).then(|| self.inv(x))
    }

    pub fn div(&self, x: Fe, y: Fe) -> Fe {
        self.mul(x, self.inv(y))
    }

    fn trace_by_definition(&self, x: Fe) -> bool {
        let mut acc = Fe::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc += y;
            y = self.square(y);
        }
        debug_assert!(acc.0 <= 1);
        acc == Fe::ONE
    }

    /// Absolute trace `Tr_{k/F2}`.
    #[inline]
    pub fn trace(&self, x: Fe) -> bool {
        (x.0 & self.trace_mask).count_ones() & 1 == 1
    }

    /// Bit mask `t` with `Tr(x) = parity(x & t)`.
    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    /// Smaller solution `y` of `y + y^2 = a`, if `a` lies in `AS(k)`.
    pub fn as_solve(&self, a: Fe) -> Option<Fe> {
        if self.trace(a) {
            return None;
        }
        let y = linalg::preimage(&self.as_images, a.0 as u64)
            .expect("trace-zero elements lie in AS(k)") as u32;
        // the two solutions differ by 1, i.e. in bit 0
        Some(Fe(y & !1))
    }

    /// Classifies `x^2 + a x + b`.
    pub fn quad_factor(&self, a: Fe, b: Fe) -> QuadFactor {
        if a.is_zero() {
            return QuadFactor::Inseparable(self.sqrt(b));
        }
        let t = self.div(b, self.square(a));
        match self.as_solve(t) {
            Some(y) => QuadFactor::Split(self.mul(a, y), self.mul(a, y + Fe::ONE)),
            None => QuadFactor::Irreducible,
        }
    }

    /// Unique square root, `x^{2^{m-1}}`.
    pub fn sqrt(&self, x: Fe) -> Fe {
        (1..self.m).fold(x, |y, _| self.square(y))
    }

    pub fn fourth_root(&self, x: Fe) -> Fe {
        self.sqrt(self.sqrt(x))
    }

    /// Whether `x` lies in `(k*)^n` for `n` in `{3, 5}`.
    pub fn power_class(&self, x: Fe, n: u32) -> Result<bool> {
        if n != 3 && n != 5 {
            return Err(Error::UnsupportedExponent(n));
        }
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let order = self.q() - 1;
        Ok(self.pow(x, order / gcd(n as u64, order)) == Fe::ONE)
    }

    fn find_cube_sylow(&self) -> (Fe, u64) {
        let order = self.q() - 1;
        let mut t = order;
        let mut sylow = 1u64;
        while t.is_multiple_of(3) {
            t /= 3;
            sylow *= 3;
        }
        if sylow == 1 {
            return (Fe::ONE, 1);
        }
        let non_cube = self
            .nonzero_elements()
            .find(|&z| self.pow(z, order / 3) != Fe::ONE)
            .expect("3 | q-1 implies a non-cube exists");
        (self.pow(non_cube, t), sylow)
    }

    /// Some `y` with `y^3 = x`, or `None` when `x` is not a cube.
    ///
    /// For odd `m` the cube root is unique; for even `m` the root returned
    /// is one of three, the others being its products with `mu_3`.
    pub fn cube_root(&self, x: Fe) -> Option<Fe> {
        if x.is_zero() {
            return Some(Fe::ZERO);
        }
        let order = self.q() - 1;
        let (g, sylow) = self.cube_sylow;
        let t = order / sylow;
        if sylow > 1 && self.pow(x, order / 3) != Fe::ONE {
            return None;
        }
        let inv3 = if t == 1 {
            0
        } else {
            mod_inverse(3, t).expect("gcd(3, t) = 1")
        };
        let r = self.pow(x, inv3);
        // x / r^3 lies in the 3-Sylow subgroup; extract its cube root there
        let h = self.div(x, self.pow(r, 3));
        let mut y = Fe::ONE;
        for _ in 0..sylow {
            if self.pow(y, 3) == h {
                return Some(self.mul(r, y));
            }
            y = self.mul(y, g);
        }
        unreachable!("cube in the 3-Sylow subgroup has a root there")
    }

    /// A primitive cube root of unity (a root of `x^2+x+1`), when `m` is even.
    pub fn cube_root_of_unity(&self) -> Option<Fe> {
        match self.quad_factor(Fe::ONE, Fe::ONE) {
            QuadFactor::Split(e, _) => Some(e),
            _ => None,
        }
    }

    // ---- quadratic extension ----

    pub fn mul2(&self, x: Fe2, y: Fe2) -> Fe2 {
        // u^2 = u + r
        let ll = self.mul(x.lo, y.lo);
        let hh = self.mul(x.hi, y.hi);
        let cross = self.mul(x.lo + x.hi, y.lo + y.hi) + ll + hh;
        Fe2 {
            lo: ll + self.mul(hh, self.d0),
            hi: cross + hh,
        }
    }

    pub fn pow2(&self, x: Fe2, mut e: u64) -> Fe2 {
        let (mut base, mut acc) = (x, Fe2::from(Fe::ONE));
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul2(acc, base);
            }
            base = self.mul2(base, base);
            e >>= 1;
        }
        acc
    }

    /// Galois conjugate over `k`: `u -> u + 1`.
    pub fn conj2(&self, x: Fe2) -> Fe2 {
        Fe2 {
            lo: x.lo + x.hi,
            hi: x.hi,
        }
    }

    /// Relative trace `Tr_{k2/k}(lo + hi*u) = hi`.
    #[inline]
    pub fn trace_rel(&self, x: Fe2) -> Fe {
        x.hi
    }

    /// Absolute trace on `k2`, via `Tr_{k2} = Tr_k o Tr_{k2/k}`.
    #[inline]
    pub fn ext_trace_abs(&self, x: Fe2) -> bool {
        self.trace(self.trace_rel(x))
    }

    /// Packs an element of `k2` into `2m` bits: `lo | hi << m`.
    pub fn pack2(&self, x: Fe2) -> u64 {
        x.lo.0 as u64 | (x.hi.0 as u64) << self.m
    }

    pub fn unpack2(&self, bits: u64) -> Fe2 {
        let mask = (1u64 << self.m) - 1;
        Fe2 {
            lo: Fe((bits & mask) as u32),
            hi: Fe((bits >> self.m) as u32),
        }
    }
}

/// Uniform access to `k` and `k2` for code that must run over either.
pub trait FieldOps {
    type Elem: Copy + Eq + Add<Output = Self::Elem>;

    fn order(&self) -> u64;
    /// The element with packed encoding `index`.
    fn element_at(&self, index: u64) -> Self::Elem;
    fn index_of(&self, x: Self::Elem) -> u64;
    fn embed(&self, x: Fe) -> Self::Elem;
    fn times(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn abs_trace(&self, x: Self::Elem) -> bool;
    /// Degree over F2.
    fn degree(&self) -> u32;
}

impl FieldOps for FieldCtx {
    type Elem = Fe;

    fn order(&self) -> u64 {
        self.q()
    }
    fn element_at(&self, index: u64) -> Fe {
        Fe(index as u32)
    }
    fn index_of(&self, x: Fe) -> u64 {
        x.0 as u64
    }
    fn embed(&self, x: Fe) -> Fe {
        x
    }
    fn times(&self, x: Fe, y: Fe) -> Fe {
        self.mul(x, y)
    }
    fn abs_trace(&self, x: Fe) -> bool {
        self.trace(x)
    }
    fn degree(&self) -> u32 {
        self.m
    }
}

/// The quadratic extension `k2` seen through [`FieldOps`].
#[derive(Debug, Clone, Copy)]
pub struct QuadExt<'a>(pub &'a FieldCtx);

impl FieldOps for QuadExt<'_> {
    type Elem = Fe2;

    fn order(&self) -> u64 {
        self.0.q() * self.0.q()
    }
    fn element_at(&self, index: u64) -> Fe2 {
        self.0.unpack2(index)
    }
    fn index_of(&self, x: Fe2) -> u64 {
        self.0.pack2(x)
    }
    fn embed(&self, x: Fe) -> Fe2 {
        Fe2::from(x)
    }
    fn times(&self, x: Fe2, y: Fe2) -> Fe2 {
        self.0.mul2(x, y)
    }
    fn abs_trace(&self, x: Fe2) -> bool {
        self.0.ext_trace_abs(x)
    }
    fn degree(&self) -> u32 {
        2 * self.0.m
    }
}
