use proptest::prelude::*;

use ss2zeta::census::atlas;
use ss2zeta::factorclass::kernel_e;
use ss2zeta::invariants::{ell, ell_c, invariants};
use ss2zeta::oracle::brute_counts;
use ss2zeta::sscurve::{apply_iso, normalize, twist};
use ss2zeta::zeta::{count_points, zeta_from_counts};
use ss2zeta::{Curve, Fe, FieldCtx, IsoWitness};

/// `(m, a, b, c, d)` with `a != 0` and arbitrary `b`.
fn any_curve(max_m: u32) -> impl Strategy<Value = (u32, Curve)> {
    (1..=max_m).prop_flat_map(|m| {
        let q = 1u32 << m;
        (Just(m), 1..q, 0..q, 0..q, any::<bool>()).prop_map(|(m, a, b, c, d)| {
            (
                m,
                Curve {
                    a: Fe(a),
                    b: Fe(b),
                    c: Fe(c),
                    d,
                },
            )
        })
    })
}

fn any_witness(m: u32) -> impl Strategy<Value = IsoWitness> {
    let q = 1u32 << m;
    (1..q, 0..q).prop_map(|(l, n)| IsoWitness {
        lambda: Fe(l),
        nu: Fe(n),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn matches_brute_force((m, c) in any_curve(7)) {
        let k = FieldCtx::new(m).unwrap();
        let z = count_points(&k, &c).unwrap();
        let o = brute_counts(&k, &c).unwrap();
        prop_assert_eq!((z.n1, z.n2), (o.n1 as i64, o.n2 as i64));
    }

    #[test]
    fn invariant_under_isomorphism(
        (m, c, w) in any_curve(14).prop_flat_map(|(m, c)| (Just(m), Just(c), any_witness(m)))
    ) {
        let k = FieldCtx::new(m).unwrap();
        let img = apply_iso(&k, &c, w).unwrap();
        prop_assert_eq!(count_points(&k, &c).unwrap(), count_points(&k, &img).unwrap());
    }

    #[test]
    fn twist_relations((m, c) in any_curve(16)) {
        let k = FieldCtx::new(m).unwrap();
        let q = k.q() as i64;
        let z = count_points(&k, &c).unwrap();
        let t = count_points(&k, &twist(&c)).unwrap();
        prop_assert_eq!(z.n1 + t.n1, 2 * q + 2);
        prop_assert_eq!(z.n2, t.n2);
        prop_assert_eq!(z.a1, -t.a1);
    }

    #[test]
    fn zeta_lies_in_atlas((m, c) in any_curve(16)) {
        let k = FieldCtx::new(m).unwrap();
        let z = count_points(&k, &c).unwrap();
        prop_assert!(atlas(m).iter().any(|&(a1, a2, _)| (a1, a2) == (z.a1, z.a2)));
        prop_assert_eq!(zeta_from_counts(z.n1, z.n2, k.q() as i64).unwrap(), z);
    }

    #[test]
    fn q_on_radical_is_sum_of_forms((m, c) in any_curve(16)) {
        let k = FieldCtx::new(m).unwrap();
        let c = Curve { d: false, ..normalize(&k, &c) };
        let rad = kernel_e(&k, c.a, c.b).unwrap();
        let l = ell(&k, &rad).unwrap();
        let lc = ell_c(&k, &c, &rad);
        for &z in &rad.elements {
            prop_assert_eq!(c.q_form(&k, z), l.eval(&rad, z) ^ lc.eval(&rad, z));
        }
    }

    #[test]
    fn shape_determines_dimensions((m, c) in any_curve(16)) {
        let k = FieldCtx::new(m).unwrap();
        let inv = invariants(&k, &normalize(&k, &c)).unwrap();
        prop_assert_eq!(inv.shape.w(), inv.w);
        prop_assert!(inv.v_codim <= 1);
        prop_assert_eq!(inv.v_codim == 1, inv.sgn_q == ss2zeta::Sign::Zero);
    }
}
