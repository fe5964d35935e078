//! Command-line front end. `run` parses arguments, writes data to `out` and
//! diagnostics to `err`, and returns the process exit code:
//! 0 when everything checked passes, 1 on a formula/oracle mismatch,
//! 2 on invalid input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{self, CensusReport, ElemValue, Selection, VerificationRecord, CENSUS_BOUND};
use crate::curve::CubicCurve;
use crate::doubling::{self, DoublingParam};
use crate::family::Family;
use crate::field::{Elem, FiniteField};
use crate::tripling::{self, TriplingParam};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Tripling,
    Doubling,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Tripling => Family::Tripling,
            FamilyArg::Doubling => Family::Doubling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SelectionArg {
    Both,
    Tripling,
    Doubling,
}

impl From<SelectionArg> for Selection {
    fn from(s: SelectionArg) -> Self {
        match s {
            SelectionArg::Both => Selection::Both,
            SelectionArg::Tripling => Selection::Tripling,
            SelectionArg::Doubling => Selection::Doubling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// the curve C behind N1 (affine)
    #[value(name = "C")]
    C,
    /// Y^2 = X(X - 1)(X - 1/3) (projective)
    Legendre13,
    /// Y^2 = X(X + 1)(X + 3/4) (projective)
    Legendre34,
    /// the curve gamma (affine)
    Gamma,
}

#[derive(Debug, Parser)]
#[command(
    name = "dik-census",
    version,
    about = "Isomorphism-class census of the tripling and doubling curve families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct FieldArgs {
    /// field order, a power of an odd prime
    #[arg(long, conflicts_with_all = ["p", "k"])]
    q: Option<u64>,
    /// characteristic, together with --k
    #[arg(long, requires = "k")]
    p: Option<u64>,
    /// extension degree, together with --p
    #[arg(long, requires = "p")]
    k: Option<u32>,
}

#[derive(Debug, clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// write data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full class structure of a family over one field
    Census {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Every closed-form count against the census for one field
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify over all prime powers in a range
    Sweep {
        #[arg(long, value_enum, default_value = "both")]
        family: SelectionArg,
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Point count of an auxiliary curve
    Points {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Label, j-invariant and classes of one parameter
    Classify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        field: FieldArgs,
        /// integer, or comma-separated coefficients with the constant term first
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide isomorphism of two family members over F_q
    Isom {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct Invalid(String);

impl<E: std::error::Error> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

fn field_of(args: &FieldArgs) -> Result<FiniteField, Invalid> {
    let field = match (args.q, args.p, args.k) {
        (Some(q), _, _) => FiniteField::of_order(q)?,
        (None, Some(p), Some(k)) => FiniteField::new(p, k)?,
        _ => return Err(Invalid("give --q, or --p with --k".into())),
    };
    Ok(field)
}

fn parse_elem<'f>(field: &'f FiniteField, s: &str) -> Result<Elem<'f>, Invalid> {
    let s = s.trim();
    if s.contains(',') {
        let coeffs = s
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(field.from_coeffs(&coeffs)?)
    } else {
        Ok(field.int(s.parse::<i64>()?))
    }
}

fn sink<'a>(
    path: &Option<PathBuf>,
    out: &'a mut dyn Write,
) -> Result<Box<dyn Write + 'a>, Invalid> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(out),
    })
}

fn write_json<T: Serialize>(w: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_census_csv(
    w: &mut dyn Write,
    report: &CensusReport,
    field: &FiniteField,
) -> io::Result<()> {
    let mut wr = csv_writer(w);
    wr.write_record(["family", "q", "u", "j", "class", "block"])?;
    let show = |v: &ElemValue| v.to_elem(field).map(|e| e.to_string()).unwrap_or_default();
    for (ci, class) in report.classes.iter().enumerate() {
        for (bi, block) in class.blocks.iter().enumerate() {
            for u in block {
                wr.write_record([
                    report.family.name().to_string(),
                    report.q.to_string(),
                    show(u),
                    show(&class.j),
                    ci.to_string(),
                    bi.to_string(),
                ])?;
            }
        }
    }
    wr.flush()
}

pub fn write_checks_csv(w: &mut dyn Write, records: &[VerificationRecord]) -> io::Result<()> {
    let mut wr = csv_writer(w);
    wr.write_record([
        "family", "q", "check", "formula", "oracle", "relation", "pass",
    ])?;
    for r in records {
        for c in &r.checks {
            wr.write_record([
                r.family.name().to_string(),
                r.q.to_string(),
                c.name.clone(),
                opt(c.formula),
                c.oracle.to_string(),
                format!("{:?}", c.relation).to_lowercase(),
                c.pass.to_string(),
            ])?;
        }
    }
    wr.flush()
}

pub const SWEEP_HEADER: [&str; 15] = [
    "family",
    "q",
    "p",
    "k",
    "jbar_formula",
    "jbar_oracle",
    "fq_formula",
    "fq_oracle",
    "N1",
    "N2",
    "N",
    "c3",
    "n_q",
    "nbar",
    "pass",
];

pub fn write_sweep_csv(w: &mut dyn Write, records: &[VerificationRecord]) -> io::Result<()> {
    let mut wr = csv_writer(w);
    wr.write_record(SWEEP_HEADER)?;
    for r in records {
        let qs = &r.quantities;
        wr.write_record([
            r.family.name().to_string(),
            r.q.to_string(),
            r.p.to_string(),
            r.k.to_string(),
            opt(qs.jbar_formula),
            qs.jbar_oracle.to_string(),
            opt(qs.fq_formula),
            qs.fq_oracle.to_string(),
            opt(qs.n1),
            opt(qs.n2),
            opt(qs.n),
            opt(qs.c3),
            opt(qs.n_q),
            opt(qs.nbar),
            r.pass.to_string(),
        ])?;
    }
    wr.flush()
}

fn summary_line(r: &VerificationRecord) -> String {
    let qs = &r.quantities;
    let mut line = format!(
        "{} q={} jbar {}/{} fq {}/{} {}",
        r.family,
        r.q,
        opt(qs.jbar_formula),
        qs.jbar_oracle,
        opt(qs.fq_formula),
        qs.fq_oracle,
        if r.pass { "PASS" } else { "FAIL" }
    );
    for c in r.failures() {
        line.push_str(&format!(
            " [{}: formula {} oracle {}]",
            c.name,
            opt(c.formula),
            c.oracle
        ));
    }
    line
}

#[derive(Serialize)]
struct PointsOut {
    target: String,
    q: u64,
    count: u64,
    convention: &'static str,
}

#[derive(Serialize)]
struct ClassifyOut {
    family: Family,
    q: u64,
    u: ElemValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    j: ElemValue,
    jbar_class: Vec<ElemValue>,
    fq_block: Vec<ElemValue>,
}

#[derive(Serialize)]
struct WitnessOut {
    alpha: ElemValue,
    r: ElemValue,
}

#[derive(Serialize)]
struct IsomOut {
    family: Family,
    q: u64,
    u: ElemValue,
    v: ElemValue,
    isomorphic: bool,
    witness: Option<WitnessOut>,
}

fn vals(xs: &[Elem<'_>]) -> Vec<ElemValue> {
    xs.iter().map(|&x| ElemValue::of(x)).collect()
}

fn check_census_bound(field: &FiniteField) -> Result<(), Invalid> {
    if field.order() > CENSUS_BOUND {
        return Err(Invalid(format!(
            "census is limited to q <= {CENSUS_BOUND}, got q = {}",
            field.order()
        )));
    }
    Ok(())
}

fn family_curve<'f>(family: Family, u: Elem<'f>) -> Result<CubicCurve<'f>, Invalid> {
    Ok(match family {
        Family::Tripling => TriplingParam::new(u)?.curve(),
        Family::Doubling => DoublingParam::new(u)?.curve(),
    })
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Invalid> {
    match cli.command {
        Command::Census {
            family,
            field,
            output,
        } => {
            let field = field_of(&field)?;
            check_census_bound(&field)?;
            let report = census::brute_census(family.into(), &field)?;
            let mut w = sink(&output.out, out)?;
            match output.format {
                OutputFormat::Json => write_json(&mut w, &report)?,
                OutputFormat::Csv => write_census_csv(&mut w, &report, &field)?,
            }
            Ok(EXIT_PASS)
        }
        Command::Verify {
            family,
            field,
            output,
        } => {
            let field = field_of(&field)?;
            check_census_bound(&field)?;
            let record = census::verify(family.into(), &field)?;
            writeln!(err, "{}", summary_line(&record))?;
            let mut w = sink(&output.out, out)?;
            match output.format {
                OutputFormat::Json => write_json(&mut w, &record)?,
                OutputFormat::Csv => write_checks_csv(&mut w, std::slice::from_ref(&record))?,
            }
            Ok(if record.pass {
                EXIT_PASS
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Sweep {
            family,
            q_min,
            q_max,
            jobs,
            output,
        } => {
            let records = census::sweep(family.into(), q_min, q_max, jobs)?;
            for r in &records {
                writeln!(err, "{}", summary_line(r))?;
            }
            let mut w = sink(&output.out, out)?;
            match output.format {
                OutputFormat::Json => write_json(&mut w, &records)?,
                OutputFormat::Csv => write_sweep_csv(&mut w, &records)?,
            }
            Ok(if records.iter().all(|r| r.pass) {
                EXIT_PASS
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Points {
            target,
            field,
            output,
        } => {
            let field = field_of(&field)?;
            let (name, count, convention) = match target {
                Target::C => {
                    if field.characteristic() < 5 || field.order() % 3 != 1 {
                        return Err(Invalid("target C needs p >= 5 and q = 1 mod 3".into()));
                    }
                    ("C", tripling::n1(&field)?, "affine")
                }
                Target::Legendre13 => ("legendre13", tripling::n2(&field)?, "projective"),
                Target::Legendre34 => ("legendre34", doubling::n_legendre(&field)?, "projective"),
                Target::Gamma => ("gamma", doubling::gamma_affine_count(&field)?, "affine"),
            };
            let res = PointsOut {
                target: name.into(),
                q: field.order(),
                count,
                convention,
            };
            let mut w = sink(&output.out, out)?;
            match output.format {
                OutputFormat::Json => write_json(&mut w, &res)?,
                OutputFormat::Csv => {
                    let mut wr = csv_writer(&mut w);
                    wr.serialize(&res)?;
                    wr.flush()?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Classify {
            family,
            field,
            u,
            output,
        } => {
            let field = field_of(&field)?;
            let u = parse_elem(&field, &u)?;
            let family: Family = family.into();
            let (label, j, class, blocks) = match family {
                Family::Tripling => {
                    let t = TriplingParam::new(u)?;
                    let cls = t.fq_class()?;
                    (
                        Some(t.label().to_string()),
                        t.j(),
                        cls.jbar_members,
                        cls.fq_blocks,
                    )
                }
                Family::Doubling => {
                    let d = DoublingParam::new(u)?;
                    (None, d.j(), d.jbar_class(), d.fq_blocks()?)
                }
            };
            let block = blocks
                .into_iter()
                .find(|b| b.contains(&u))
                .unwrap_or_default();
            let res = ClassifyOut {
                family,
                q: field.order(),
                u: ElemValue::of(u),
                label,
                j: ElemValue::of(j),
                jbar_class: vals(&class),
                fq_block: vals(&block),
            };
            let mut w = sink(&output.out, out)?;
            match output.format {
                OutputFormat::Json => write_json(&mut w, &res)?,
                OutputFormat::Csv => {
                    let mut wr = csv_writer(&mut w);
                    wr.write_record(["family", "q", "u", "label", "j", "jbar_class", "fq_block"])?;
                    let join = |xs: &[Elem<'_>]| {
                        xs.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    wr.write_record([
                        family.name().to_string(),
                        field.order().to_string(),
                        u.to_string(),
                        res.label.clone().unwrap_or_default(),
                        j.to_string(),
                        join(&class),
                        join(&block),
                    ])?;
                    wr.flush()?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Isom {
            family,
            field,
            u,
            v,
            output,
        } => {
            let field = field_of(&field)?;
            let family: Family = family.into();
            let (u, v) = (parse_elem(&field, &u)?, parse_elem(&field, &v)?);
            let (cu, cv) = (family_curve(family, u)?, family_curve(family, v)?);
            let witness = cu.isomorphic_fq(&cv)?;
            let res = IsomOut {
                family,
                q: field.order(),
                u: ElemValue::of(u),
                v: ElemValue::of(v),
                isomorphic: witness.is_some(),
                witness: witness.map(|w| WitnessOut {
                    alpha: ElemValue::of(w.alpha),
                    r: ElemValue::of(w.r),
                }),
            };
            let mut w = sink(&output.out, out)?;
            match output.format {
                OutputFormat::Json => write_json(&mut w, &res)?,
                OutputFormat::Csv => {
                    let mut wr = csv_writer(&mut w);
                    wr.write_record(["family", "q", "u", "v", "isomorphic", "alpha", "r"])?;
                    wr.write_record([
                        family.name().to_string(),
                        field.order().to_string(),
                        u.to_string(),
                        v.to_string(),
                        if witness.is_some() { "yes" } else { "no" }.to_string(),
                        opt(witness.map(|w| w.alpha)),
                        opt(witness.map(|w| w.r)),
                    ])?;
                    wr.flush()?;
                }
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Parses `args` (program name first) and runs the chosen command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INVALID
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_PASS
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}
