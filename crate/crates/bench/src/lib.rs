//! Shared inputs for the benchmarks.

use ss2zeta::{Curve, Fe, FieldCtx};

/// `n` normalized curves spread over the field, the same on every run.
pub fn sample_curves(ctx: &FieldCtx, n: usize) -> Vec<Curve> {
    let mask = (ctx.q() - 1) as u32;
    let mut state = 0x9e37_79b9u32;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 17;
        state ^= state << 5;
        state & mask
    };
    (0..n)
        .map(|i| {
            let a = Fe(next().max(1));
            let b = if i % 2 == 0 { Fe::ZERO } else { a };
            Curve {
                a,
                b,
                c: Fe(next()),
                d: i % 3 == 0,
            }
        })
        .collect()
}
