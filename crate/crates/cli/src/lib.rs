//! Argument handling, dispatch and output formats of the `stringcone` tool.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use stringcone::audit::{run_criteria, AuditConfig};
use stringcone::branching::{branch_multiplicities, decomposition_report};
use stringcone::cones::{
    bz_inequalities, cone_poset, poset_dot, string_cone_explicit, Block, ConeH, LinearForm,
    PosetLevel,
};
use stringcone::oracle::{dim_cap_from_env, weyl_dim};
use stringcone::polytopes::{
    canonical_cone, lusztig_polytope_h_rep, lusztig_polytope_points, string_polytope_points,
};
use stringcone::weyl::canonical_word;
use stringcone::{Error, Family, LieType, Weight};

/// Exit status for a verification mismatch or an internal failure.
pub const EXIT_MISMATCH: u8 = 1;
/// Exit status for malformed or inconsistent input.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "stringcone",
    version,
    about = "String cones, string and Lusztig polytopes, and A_{n-1} branching for types B, C, D"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inequalities of the string cone of the canonical word.
    Cone(ConeArgs),
    /// Lattice points or inequalities of a string or Lusztig polytope.
    Polytope(PolytopeArgs),
    /// Multiplicities of the A_{n-1} constituents of V(λ).
    Branch(BranchArgs),
    /// The poset whose order polyhedron is the string cone, as DOT.
    Poset(PosetArgs),
    /// Run the verification sweeps.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Records,
    Lines,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BlockArg {
    All,
    Minus,
    Plus,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Family: A, B, C or D.
    #[arg(long = "type", value_parser = parse_family)]
    pub family: Family,
    /// Rank of the type.
    #[arg(long)]
    pub rank: usize,
}

impl TypeArgs {
    fn lie_type(&self) -> Result<LieType, Failure> {
        LieType::new(self.family, self.rank).map_err(Failure::usage)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format; `table` unless the subcommand only supports `dot`.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Generate the Berenstein-Zelevinsky system instead of the explicit one.
    #[arg(long)]
    pub bz: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Fundamental coordinates, comma separated.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    pub lambda: Lambda,
    /// Lusztig coordinates instead of string coordinates.
    #[arg(long)]
    pub lusztig: bool,
    /// Print the inequalities instead of the points.
    #[arg(long = "h-rep")]
    pub h_rep: bool,
    /// Print only the number of lattice points.
    #[arg(long)]
    pub count: bool,
    /// Largest dimension to enumerate; defaults to STRINGCONE_DIM_CAP or 20000.
    #[arg(long = "dim-cap")]
    pub dim_cap: Option<u128>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    pub lambda: Lambda,
    /// Also report every fiber of the decomposition.
    #[arg(long)]
    pub fibers: bool,
    #[arg(long = "dim-cap")]
    pub dim_cap: Option<u128>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// The weaker relation system that the cone inequalities are derived from.
    #[arg(long)]
    pub lemma: bool,
    #[arg(long, value_enum, default_value = "all")]
    pub block: BlockArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Criteria to run, comma separated; all by default.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=8))]
    pub criteria: Vec<u8>,
    /// Side of the scanned box `[0, b]^N`.
    #[arg(long = "box", default_value_t = 2)]
    pub box_bound: u32,
    /// Largest rank in the type and weight sweeps.
    #[arg(long = "max-rank", default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=6))]
    pub max_rank: u64,
    /// Largest fundamental coefficient in the weight sweeps.
    #[arg(long = "max-coeff", default_value_t = 2)]
    pub max_coeff: u32,
    /// Weights of larger dimension are left out of the sweeps.
    #[arg(long = "dim-cap")]
    pub dim_cap: Option<u128>,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Fundamental coordinates given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda(pub Vec<i64>);

/// Parses `a,b,c` into fundamental coordinates.
pub fn parse_lambda(s: &str) -> Result<Lambda, String> {
    if s.trim().is_empty() {
        return Err("empty weight".into());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad coefficient {p:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(Lambda)
}

/// A failed run with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }

    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) | Error::NegativeMultiplicity(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from_error(e)
    }
}

/// Output of a successful run. `passed` is false when a verification
/// criterion failed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeRecord {
    pub lie_type: String,
    pub system: String,
    pub labels: Vec<String>,
    pub forms: Vec<FormRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsRecord {
    pub lie_type: String,
    pub coordinates: String,
    pub lambda: Vec<i64>,
    pub labels: Vec<String>,
    pub count: usize,
    pub points: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRecord {
    pub mu: Vec<i64>,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRecord {
    pub t: Vec<i64>,
    pub mu: Vec<i64>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRecord {
    pub lie_type: String,
    pub levi: String,
    pub lambda: Vec<i64>,
    pub multiplicities: Vec<MultiplicityRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibers: Option<Vec<FiberRecord>>,
}

/// Parses records written by `--format records`.
pub fn read_records<T: for<'de> Deserialize<'de>>(text: &str) -> serde_json::Result<T> {
    serde_json::from_str(text)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn format_or(out: &OutputArgs, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = out.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(Failure::usage(format!(
            "format {f:?} is not available here"
        )));
    }
    Ok(f)
}

fn weight(ty: LieType, lambda: &[i64]) -> Result<Weight, Failure> {
    let l = Weight::new(ty, lambda).map_err(Failure::usage)?;
    if !l.is_dominant() {
        return Err(Failure::usage(Error::NonDominant));
    }
    Ok(l)
}

fn check_dim(ty: LieType, l: &Weight, cap: Option<u128>) -> Result<(), Failure> {
    let cap = cap.unwrap_or_else(dim_cap_from_env);
    let dim = weyl_dim(ty, l)?;
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap }.into());
    }
    Ok(())
}

/// `c_1 t_1 + … >= -constant` with labelled coordinates.
fn form_text(f: &LinearForm, labels: &[String]) -> String {
    let mut s = String::new();
    for (c, label) in f.coeffs.iter().zip(labels).filter(|(c, _)| **c != 0) {
        let sign = if *c < 0 { "-" } else { "+" };
        let mag = c.abs();
        if s.is_empty() {
            if *c < 0 {
                s.push('-');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if mag != 1 {
            let _ = write!(s, "{mag}");
        }
        s.push_str(label);
    }
    if s.is_empty() {
        s.push('0');
    }
    let _ = write!(s, " >= {}", -f.constant);
    s
}

fn forms_output(
    format: Format,
    lie_type: LieType,
    system: &str,
    labels: Vec<String>,
    forms: &[LinearForm],
) -> String {
    match format {
        Format::Records => to_json(&ConeRecord {
            lie_type: lie_type.to_string(),
            system: system.into(),
            labels,
            forms: forms
                .iter()
                .map(|f| FormRecord {
                    coeffs: f.coeffs.clone(),
                    constant: f.constant,
                })
                .collect(),
        }),
        Format::Lines => forms
            .iter()
            .map(|f| {
                let mut parts: Vec<String> = f.coeffs.iter().map(i64::to_string).collect();
                parts.push(f.constant.to_string());
                parts.join(" ") + "\n"
            })
            .collect(),
        _ => {
            let mut s = format!(
                "# {system} system of {lie_type}: {} inequalities\n",
                forms.len()
            );
            for f in forms {
                s.push_str(&form_text(f, &labels));
                s.push('\n');
            }
            s
        }
    }
}

fn cone_labels(cone: &ConeH) -> Vec<String> {
    cone.labels.iter().map(ToString::to_string).collect()
}

fn run_cone(a: &ConeArgs) -> Result<Outcome, Failure> {
    let ty = a.ty.lie_type()?;
    let format = format_or(
        &a.out,
        Format::Table,
        &[Format::Table, Format::Records, Format::Lines],
    )?;
    let (system, cone) = if a.bz {
        (
            "Berenstein-Zelevinsky",
            bz_inequalities(&canonical_word(ty))?,
        )
    } else if ty.family() == Family::A {
        ("explicit", canonical_cone(ty)?)
    } else {
        ("explicit", string_cone_explicit(ty)?)
    };
    let text = forms_output(format, ty, system, cone_labels(&cone), &cone.forms);
    Ok(Outcome { text, passed: true })
}

fn lusztig_labels(cone: &ConeH) -> Vec<String> {
    cone_labels(cone)
        .into_iter()
        .map(|s| s.replacen('t', "u", 1))
        .collect()
}

fn points_output(format: Format, rec: &PointsRecord) -> String {
    match format {
        Format::Records => to_json(rec),
        Format::Lines => rec
            .points
            .iter()
            .map(|p| p.iter().map(i64::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
        _ => {
            let mut cols: Vec<Vec<String>> = vec![rec.labels.clone()];
            cols.extend(
                rec.points
                    .iter()
                    .map(|p| p.iter().map(i64::to_string).collect()),
            );
            let width: Vec<usize> = (0..rec.labels.len())
                .map(|k| {
                    cols.iter()
                        .map(|row| row[k].chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut s = format!(
                "# {} coordinates of {} at lambda = {:?}: {} points\n",
                rec.coordinates, rec.lie_type, rec.lambda, rec.count
            );
            for row in cols {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&width)
                    .map(|(c, &w)| format!("{c:>w$}", w = w))
                    .collect();
                s.push_str(cells.join(" ").trim_end());
                s.push('\n');
            }
            s
        }
    }
}

fn run_polytope(a: &PolytopeArgs) -> Result<Outcome, Failure> {
    let ty = a.ty.lie_type()?;
    let l = weight(ty, &a.lambda.0)?;
    let format = format_or(
        &a.out,
        Format::Table,
        &[Format::Table, Format::Records, Format::Lines],
    )?;
    if a.h_rep && a.count {
        return Err(Failure::usage("--h-rep and --count are exclusive"));
    }
    let cone = canonical_cone(ty)?;
    if a.h_rep {
        let (system, labels, forms) = if a.lusztig {
            (
                "Lusztig polytope",
                lusztig_labels(&cone),
                lusztig_polytope_h_rep(ty, &l)?,
            )
        } else {
            (
                "string polytope",
                cone_labels(&cone),
                string_polytope_forms(ty, &l, &cone),
            )
        };
        return Ok(Outcome {
            text: forms_output(format, ty, system, labels, &forms),
            passed: true,
        });
    }
    check_dim(ty, &l, a.dim_cap)?;
    let (coordinates, labels, points) = if a.lusztig {
        (
            "Lusztig",
            lusztig_labels(&cone),
            lusztig_polytope_points(ty, &l)?,
        )
    } else {
        (
            "string",
            cone_labels(&cone),
            string_polytope_points(ty, &l)?,
        )
    };
    if a.count {
        let text = match format {
            Format::Records => to_json(&serde_json::json!({ "count": points.len() })),
            _ => format!("{}\n", points.len()),
        };
        return Ok(Outcome { text, passed: true });
    }
    let rec = PointsRecord {
        lie_type: ty.to_string(),
        coordinates: coordinates.into(),
        lambda: l.fund().to_vec(),
        labels,
        count: points.len(),
        points,
    };
    Ok(Outcome {
        text: points_output(format, &rec),
        passed: true,
    })
}

/// Cone forms followed by the weight bounds `t_k ≤ ⟨λ - Σ_{j>k} t_j α_{i_j}, α_{i_k}^∨⟩`.
fn string_polytope_forms(ty: LieType, l: &Weight, cone: &ConeH) -> Vec<LinearForm> {
    let word = canonical_word(ty);
    let a = stringcone::rootsys::cartan_matrix(ty);
    let letters = word.letters();
    let mut forms = cone.forms.clone();
    for (k, &ik) in letters.iter().enumerate() {
        let mut coeffs = vec![0; letters.len()];
        coeffs[k] = -1;
        for (j, &ij) in letters.iter().enumerate().skip(k + 1) {
            coeffs[j] = -a.get(ik, ij);
        }
        forms.push(LinearForm::new(coeffs, l.fund()[ik - 1]));
    }
    forms
}

fn run_branch(a: &BranchArgs) -> Result<Outcome, Failure> {
    let ty = a.ty.lie_type()?;
    let l = weight(ty, &a.lambda.0)?;
    let levi = ty.levi()?;
    let format = format_or(&a.out, Format::Table, &[Format::Table, Format::Records])?;
    check_dim(ty, &l, a.dim_cap)?;
    let res = branch_multiplicities(ty, &l)?;
    let fibers = if a.fibers {
        Some(decomposition_report(ty, &l)?)
    } else {
        None
    };
    let text = match format {
        Format::Records => to_json(&BranchRecord {
            lie_type: ty.to_string(),
            levi: levi.to_string(),
            lambda: l.fund().to_vec(),
            multiplicities: res
                .entries
                .iter()
                .map(|e| MultiplicityRecord {
                    mu: e.mu.clone(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
            fibers: fibers.as_ref().map(|r| {
                r.fibers
                    .iter()
                    .map(|f| FiberRecord {
                        t: f.t.clone(),
                        mu: f.mu.clone(),
                        size: f.points.len(),
                    })
                    .collect()
            }),
        }),
        _ => {
            let mut s = format!("# {ty} lambda = {l} restricted to {levi}\n");
            for e in res.entries.iter().rev() {
                let mu = Weight::new(levi, &e.mu)?;
                let _ = writeln!(s, "{mu}: {}", e.multiplicity);
            }
            if let Some(r) = &fibers {
                let _ = writeln!(s, "# fibers: t, mu, size");
                for f in &r.fibers {
                    let mu = Weight::new(levi, &f.mu)?;
                    let _ = writeln!(s, "# {:?} {mu} {}", f.t, f.points.len());
                }
            }
            s
        }
    };
    Ok(Outcome { text, passed: true })
}

fn run_poset(a: &PosetArgs) -> Result<Outcome, Failure> {
    let ty = a.ty.lie_type()?;
    format_or(&a.out, Format::Dot, &[Format::Dot])?;
    let level = if a.lemma {
        PosetLevel::Lemma
    } else {
        PosetLevel::Theorem
    };
    let block = match a.block {
        BlockArg::All => Block::All,
        BlockArg::Minus => Block::Minus,
        BlockArg::Plus => Block::Plus,
    };
    let rels = cone_poset(ty, level)?;
    Ok(Outcome {
        text: poset_dot(ty, &rels, block),
        passed: true,
    })
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let format = format_or(&a.out, Format::Table, &[Format::Table, Format::Records])?;
    let cfg = AuditConfig {
        max_rank: a.max_rank as usize,
        max_coeff: i64::from(a.max_coeff),
        dim_cap: a.dim_cap.unwrap_or_else(dim_cap_from_env),
        box_bound: i64::from(a.box_bound),
    };
    let ids: Vec<usize> = if a.criteria.is_empty() {
        (1..=8).collect()
    } else {
        a.criteria.iter().map(|&c| c as usize).collect()
    };
    let reports = run_criteria(&cfg, &ids)?;
    let passed = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Records => to_json(&reports),
        _ => {
            let mut s: String = reports.iter().map(|r| r.line() + "\n").collect();
            let _ = writeln!(
                s,
                "{}",
                if passed {
                    "all criteria passed"
                } else {
                    "verification failed"
                }
            );
            s
        }
    };
    Ok(Outcome { text, passed })
}

/// Runs one parsed command and returns its output.
pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let (outcome, output) = match &cli.command {
        Command::Cone(a) => (run_cone(a)?, &a.out.output),
        Command::Polytope(a) => (run_polytope(a)?, &a.out.output),
        Command::Branch(a) => (run_branch(a)?, &a.out.output),
        Command::Poset(a) => (run_poset(a)?, &a.out.output),
        Command::Verify(a) => (run_verify(a)?, &a.out.output),
    };
    if let Some(path) = output {
        std::fs::File::create(path)
            .and_then(|mut f| f.write_all(outcome.text.as_bytes()))
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        return Ok(Outcome {
            text: String::new(),
            passed: outcome.passed,
        });
    }
    Ok(outcome)
}
