//! Command-line front end: zeta data of a single curve, class census,
//! curve search, isogeny classes and oracle verification.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};

use ss2zeta::census::{
    class_counts, enumerate_classes, expected_class_total, find_curve, histogram,
    isogeny_classes_from_counts, table_counts, FindResult,
};
use ss2zeta::factorclass::{shape_census_a, shape_table};
use ss2zeta::oracle::{brute_classes, brute_counts};
use ss2zeta::report::{self, CensusRecord, FindRecord, IsogenyRecord, ZetaRecord, SCHEMA};
use ss2zeta::zeta::count_points;
use ss2zeta::{Curve, Error, Fe, FieldCtx, IsogenyKind};

/// Exit status for flag and input errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a verification check fails.
pub const EXIT_VERIFY: i32 = 1;
/// Exit status when `m` exceeds the limit of a subcommand.
pub const EXIT_GUARD: i32 = 3;

const MAX_M_ZETA: u32 = 20;
const MAX_M_CENSUS: u32 = 16;
const MAX_M_VERIFY: u32 = 6;
const MAX_M_ORBITS: u32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "ss2zeta",
    version,
    about = "Zeta functions of supersingular genus-2 curves over F_{2^m}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Point counts and Frobenius polynomial of one curve
    Zeta {
        #[arg(long)]
        m: u32,
        /// a:b:c:d in hexadecimal, d in {0, 1}
        #[arg(long)]
        curve: String,
        #[arg(long)]
        json: bool,
    },
    /// Number of isomorphism classes per (a1, a2)
    Census {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A curve with prescribed (a1, a2)
    Find {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
        #[arg(long, allow_hyphen_values = true)]
        a2: i64,
        #[arg(long)]
        json: bool,
    },
    /// Supersingular isogeny classes and how many jacobians each contains
    Isogeny {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the closed forms against brute force
    Verify {
        #[arg(long)]
        m: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Guard(String),
    Verify,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegreeOutOfRange(_) | Error::SizeGuard { .. } => Failure::Guard(e.to_string()),
            Error::ParseCurve { .. } | Error::ElementOutOfRange { .. } | Error::ZeroElement => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn field(m: u32, limit: u32) -> std::result::Result<FieldCtx, Failure> {
    if m == 0 || m > limit {
        return Err(Failure::Guard(format!(
            "m must lie in 1..={limit} for this command, got {m}"
        )));
    }
    Ok(FieldCtx::new(m)?)
}

fn header(out: &mut dyn Write, ctx: &FieldCtx) -> io::Result<()> {
    writeln!(
        out,
        "# m={} q={} modulus={}",
        ctx.m(),
        ctx.q(),
        ctx.modulus_string()
    )
}

fn json_line<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    let s = serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn zeta(out: &mut dyn Write, m: u32, curve: &str, json: bool) -> Outcome {
    let ctx = field(m, MAX_M_ZETA)?;
    let curve = Curve::parse(&ctx, curve)?;
    let z = count_points(&ctx, &curve)?;
    let rec = ZetaRecord::new(&ctx, curve, &z);
    if json {
        return json_line(out, &rec);
    }
    header(out, &ctx)?;
    writeln!(out, "curve {}", rec.curve)?;
    writeln!(out, "N1 {}", rec.n1)?;
    writeln!(out, "N2 {}", rec.n2)?;
    writeln!(out, "a1 {}", rec.a1)?;
    writeln!(out, "a2 {}", rec.a2)?;
    let poly: Vec<String> = rec.char_poly.iter().map(i64::to_string).collect();
    writeln!(out, "char_poly {}", poly.join(" "))?;
    Ok(())
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn census(out: &mut dyn Write, m: u32, format: Format) -> Outcome {
    let ctx = field(m, MAX_M_CENSUS)?;
    let reps = enumerate_classes(&ctx)?;
    let counts = histogram(m, &reps);
    match format {
        Format::Json => json_line(out, &CensusRecord::new(&ctx, &reps, &counts)),
        Format::Csv => {
            report::write_count_csv(&mut *out, &report::count_rows(m, &counts))
                .map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(())
        }
        Format::Text => {
            header(out, &ctx)?;
            writeln!(
                out,
                "{:>8} {:>10} {:>8}  {:<6} {:>6} {:>6}",
                "a1", "a2", "count", "kind", "b1", "b2"
            )?;
            for r in report::count_rows(m, &counts) {
                writeln!(
                    out,
                    "{:>8} {:>10} {:>8}  {:<6} {:>6} {:>6}",
                    r.a1,
                    r.a2,
                    r.count,
                    r.kind,
                    opt(r.b1),
                    opt(r.b2)
                )?;
            }
            writeln!(out, "total {}", reps.len())?;
            Ok(())
        }
    }
}

fn find(out: &mut dyn Write, m: u32, a1: i64, a2: i64, json: bool) -> Outcome {
    let ctx = field(m, MAX_M_CENSUS)?;
    let res = find_curve(&ctx, a1, a2)?;
    if json {
        let (curve, empty) = match res {
            FindResult::Found(c) => (Some(c), None),
            FindResult::Empty(r) => (None, Some(r)),
        };
        let rec = FindRecord {
            schema: SCHEMA,
            m,
            modulus: ctx.modulus_string(),
            a1,
            a2,
            curve,
            empty,
        };
        return json_line(out, &rec);
    }
    header(out, &ctx)?;
    match res {
        FindResult::Found(c) => writeln!(out, "{c}")?,
        FindResult::Empty(r) => writeln!(out, "EMPTY({r})")?,
    }
    Ok(())
}

fn isogeny(out: &mut dyn Write, m: u32, json: bool) -> Outcome {
    let ctx = field(m, MAX_M_CENSUS)?;
    let classes = isogeny_classes_from_counts(m, &class_counts(&ctx)?);
    if json {
        let rec = IsogenyRecord {
            schema: SCHEMA,
            m,
            modulus: ctx.modulus_string(),
            classes,
        };
        return json_line(out, &rec);
    }
    header(out, &ctx)?;
    writeln!(
        out,
        "{:>8} {:>10}  {:<6} {:>6} {:>6} {:>10}",
        "a1", "a2", "kind", "b1", "b2", "jacobians"
    )?;
    for c in &classes {
        let (kind, b1, b2) = match c.kind {
            IsogenyKind::Simple => ("simple", None, None),
            IsogenyKind::Split { b1, b2 } => ("split", Some(b1), Some(b2)),
        };
        writeln!(
            out,
            "{:>8} {:>10}  {:<6} {:>6} {:>6} {:>10}",
            c.a1,
            c.a2,
            kind,
            opt(b1),
            opt(b2),
            c.jacobian_count
        )?;
    }
    let split = classes
        .iter()
        .filter(|c| c.kind != IsogenyKind::Simple)
        .count();
    writeln!(out, "split {split} simple {}", classes.len() - split)?;
    Ok(())
}

struct Checks<'a> {
    out: &'a mut dyn Write,
    failed: bool,
}

impl Checks<'_> {
    fn report(&mut self, name: &str, ok: bool, detail: String) -> io::Result<()> {
        self.failed |= !ok;
        writeln!(
            self.out,
            "{} {name}: {detail}",
            if ok { "PASS" } else { "FAIL" }
        )
    }
}

fn verify(out: &mut dyn Write, m: u32) -> Outcome {
    let ctx = field(m, MAX_M_VERIFY)?;
    header(out, &ctx)?;
    let mut checks = Checks { out, failed: false };

    let mut total = 0u64;
    let mut mismatches = 0u64;
    for a in ctx.nonzero_elements() {
        for b in [Fe::ZERO, a] {
            for c in ctx.elements() {
                for d in [false, true] {
                    let curve = Curve { a, b, c, d };
                    let z = count_points(&ctx, &curve)?;
                    let o = brute_counts(&ctx, &curve)?;
                    total += 1;
                    if (z.n1, z.n2) != (o.n1 as i64, o.n2 as i64) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    checks.report(
        "counts",
        mismatches == 0,
        format!(
            "{} of {total} curves agree with enumeration",
            total - mismatches
        ),
    )?;

    let reps = enumerate_classes(&ctx)?;
    let counts = histogram(m, &reps);
    let expected = expected_class_total(m);
    checks.report(
        "total",
        reps.len() as u64 == expected,
        format!("{} classes, expected {expected}", reps.len()),
    )?;
    let table = table_counts(m);
    let off = table
        .iter()
        .filter(|(k, v)| counts.get(k) != Some(v))
        .count()
        + counts.keys().filter(|k| !table.contains_key(k)).count();
    checks.report(
        "tables",
        off == 0,
        format!(
            "{} of {} (a1, a2) entries match",
            table.len() - off,
            table.len()
        ),
    )?;

    let shapes = shape_census_a(&ctx);
    checks.report(
        "shapes",
        shapes == shape_table(m),
        format!("{} factorization shapes over b = a", shapes.len()),
    )?;

    if m <= MAX_M_ORBITS {
        let orbits = brute_classes(&ctx)?;
        let single = orbits.iter().all(|o| {
            reps.iter()
                .filter(|r| o.binary_search(&r.curve).is_ok())
                .count()
                == 1
        });
        checks.report(
            "orbits",
            single && orbits.len() == reps.len(),
            format!("{} orbits, {} representatives", orbits.len(), reps.len()),
        )?;
    } else {
        writeln!(
            checks.out,
            "SKIP orbits: exhaustive orbits need m <= {MAX_M_ORBITS}"
        )?;
    }

    if m % 2 == 1 {
        let q = ctx.q() as i64;
        let empty = find_curve(&ctx, 0, -q)?.curve().is_none() && counts.get(&(0, -q)) == Some(&0);
        checks.report(
            "empty class",
            empty,
            format!("no curve with (a1, a2) = (0, {})", -q),
        )?;
    }

    let failed = checks.failed;
    writeln!(checks.out, "{}", if failed { "FAIL" } else { "PASS" })?;
    if failed {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Zeta { m, curve, json } => zeta(out, m, &curve, json),
        Command::Census { m, format } => census(out, m, format),
        Command::Find { m, a1, a2, json } => find(out, m, a1, a2, json),
        Command::Isogeny { m, json } => isogeny(out, m, json),
        Command::Verify { m } => verify(out, m),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Guard(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_GUARD
        }
        Err(Failure::Verify) => EXIT_VERIFY,
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_VERIFY
        }
    }
}
