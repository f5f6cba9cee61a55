//! Serializable records for the command-line outputs.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::census::{atlas, ClassRep, EmptyReason, IsogenyClassInfo, IsogenyKind};
use crate::factorclass::FactorShape;
use crate::gf2::FieldCtx;
use crate::sscurve::Curve;
use crate::zeta::ZetaData;

pub const SCHEMA: &str = "ss2zeta/1";

#[derive(Debug, Clone, Serialize)]
pub struct ZetaRecord {
    pub schema: &'static str,
    pub m: u32,
    pub modulus: String,
    pub curve: Curve,
    #[serde(rename = "N1")]
    pub n1: i64,
    #[serde(rename = "N2")]
    pub n2: i64,
    pub a1: i64,
    pub a2: i64,
    pub char_poly: [i64; 5],
}

impl ZetaRecord {
    pub fn new(ctx: &FieldCtx, curve: Curve, z: &ZetaData) -> Self {
        ZetaRecord {
            schema: SCHEMA,
            m: ctx.m(),
            modulus: ctx.modulus_string(),
            curve,
            n1: z.n1,
            n2: z.n2,
            a1: z.a1,
            a2: z.a2,
            char_poly: z.char_poly(ctx.q() as i64),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub curve: Curve,
    pub shape: FactorShape,
    #[serde(rename = "N1")]
    pub n1: i64,
    #[serde(rename = "N2")]
    pub n2: i64,
    pub a1: i64,
    pub a2: i64,
}

impl From<&ClassRep> for ClassRecord {
    fn from(r: &ClassRep) -> Self {
        ClassRecord {
            curve: r.curve,
            shape: r.shape,
            n1: r.zeta.n1,
            n2: r.zeta.n2,
            a1: r.zeta.a1,
            a2: r.zeta.a2,
        }
    }
}

/// One row of the census table. `b1` and `b2` are empty for simple classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub m: u32,
    pub a1: i64,
    pub a2: i64,
    pub count: u64,
    pub kind: &'static str,
    pub b1: Option<i64>,
    pub b2: Option<i64>,
}

fn kind_fields(kind: IsogenyKind) -> (&'static str, Option<i64>, Option<i64>) {
    match kind {
        IsogenyKind::Simple => ("simple", None, None),
        IsogenyKind::Split { b1, b2 } => ("split", Some(b1), Some(b2)),
    }
}

/// Rows for every `(a1, a2)` of `counts`, labelled with their isogeny kind.
pub fn count_rows(m: u32, counts: &BTreeMap<(i64, i64), u64>) -> Vec<CountRow> {
    let kinds: BTreeMap<(i64, i64), IsogenyKind> = atlas(m)
        .into_iter()
        .map(|(a1, a2, k)| ((a1, a2), k))
        .collect();
    counts
        .iter()
        .map(|(&(a1, a2), &count)| {
            let (kind, b1, b2) = kinds
                .get(&(a1, a2))
                .map_or(("unknown", None, None), |&k| kind_fields(k));
            CountRow {
                m,
                a1,
                a2,
                count,
                kind,
                b1,
                b2,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    pub schema: &'static str,
    pub m: u32,
    pub modulus: String,
    pub total: u64,
    pub counts: Vec<CountRow>,
    pub classes: Vec<ClassRecord>,
}

impl CensusRecord {
    pub fn new(ctx: &FieldCtx, reps: &[ClassRep], counts: &BTreeMap<(i64, i64), u64>) -> Self {
        CensusRecord {
            schema: SCHEMA,
            m: ctx.m(),
            modulus: ctx.modulus_string(),
            total: reps.len() as u64,
            counts: count_rows(ctx.m(), counts),
            classes: reps.iter().map(ClassRecord::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsogenyRecord {
    pub schema: &'static str,
    pub m: u32,
    pub modulus: String,
    pub classes: Vec<IsogenyClassInfo>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FindRecord {
    pub schema: &'static str,
    pub m: u32,
    pub modulus: String,
    pub a1: i64,
    pub a2: i64,
    pub curve: Option<Curve>,
    pub empty: Option<EmptyReason>,
}

/// Writes `rows` as CSV with the header `m,a1,a2,count,kind,b1,b2`.
pub fn write_count_csv<W: Write>(out: W, rows: &[CountRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::class_counts;
    use crate::gf2::Fe;

    #[test]
    fn csv_layout() {
        let k = FieldCtx::new(3).unwrap();
        let rows = count_rows(3, &class_counts(&k).unwrap());
        let mut buf = Vec::new();
        write_count_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("m,a1,a2,count,kind,b1,b2"));
        assert!(text.contains("3,0,0,7,split,4,-4\n"));
        assert!(text.contains("3,0,-8,0,simple,,\n"));
        assert_eq!(lines.count(), 11);
    }

    #[test]
    fn zeta_json() {
        let k = FieldCtx::new(3).unwrap();
        let c = Curve::new(Fe(1), Fe(0), Fe(1), false).unwrap();
        let z = crate::zeta::count_points(&k, &c).unwrap();
        let json = serde_json::to_string(&ZetaRecord::new(&k, c, &z)).unwrap();
        assert_eq!(
            json,
            r#"{"schema":"ss2zeta/1","m":3,"modulus":"x^3+x+1","curve":"1:0:1:0","N1":5,"N2":81,"a1":-4,"a2":16,"char_poly":[1,-4,16,-32,64]}"#
        );
    }

    #[test]
    fn isogeny_json_flattens_kind() {
        let info = IsogenyClassInfo {
            a1: 0,
            a2: 0,
            kind: IsogenyKind::Split { b1: 4, b2: -4 },
            jacobian_count: 7,
        };
        assert_eq!(
            serde_json::to_string(&info).unwrap(),
            r#"{"a1":0,"a2":0,"kind":"split","b1":4,"b2":-4,"jacobian_count":7}"#
        );
    }
}
