use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cloneforge_core::centralizer::{
    centralizer_brute_report, centralizer_fast_report, double_centralizer_hom_report,
    double_centralizer_sandwich_report, pairwise_equalizer_report, verify_dc, HomSearchStrategy, Verdict,
    WitnessStrategy,
};
use cloneforge_core::clone::{clone_slice, DEFAULT_MEMBER_LIMIT};
use cloneforge_core::homsearch::{enumerate_homs, DEFAULT_HOM_CAP};
use cloneforge_core::kronecker::{commutes, Commutation};
use cloneforge_core::zoo::{
    action_preorder, make_free_gset, make_vector_space, recognize_vector_space, roots_of_action,
    unique_transitions_check, GroupTable, GsetStrategy, PrimeField, VecspaceStrategy,
};
use cloneforge_core::{set_table_limit, Algebra, Error, OpSet};

use crate::error::{CliError, Result};
use crate::format::{algebra_to_json, parse_algebra, parse_group, read_text};
use crate::report::{
    centralizer_doc, replay, ActionDoc, CloneDoc, CommuteDoc, HomsDoc, MatrixDoc, Report, Term, TransitionDoc,
};

/// Environment variable overriding the table-size guard.
pub const TABLE_LIMIT_ENV: &str = "CLONEFORGE_TABLE_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "cloneforge", version, about = "Clones, centralizers and double centralizers of finite algebras")]
pub struct Cli {
    /// Recheck every witness and certificate in a report file, without recomputing.
    #[arg(long, value_name = "REPORT", conflicts_with = "command")]
    pub replay: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

/// Where the algebra comes from: a file or one of the built-in families.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Algebra file.
    #[arg(long, value_name = "FILE")]
    pub algebra: Option<PathBuf>,
    /// The vector space GF(p)^d.
    #[arg(long, num_args = 2, value_names = ["P", "D"])]
    pub vecspace: Option<Vec<u64>>,
    /// The free G-set on R roots, G given by a Cayley table file.
    #[arg(long, num_args = 2, value_names = ["GROUP_FILE", "R"])]
    pub free_gset: Option<Vec<String>>,
    /// An algebra file whose symbols are all unary.
    #[arg(long, value_name = "FILE")]
    pub monoid_action: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Write the result here (atomically) instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CentralizerMethod {
    Fast,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DcMethod {
    HomCriterion,
    PairwiseEqualizer,
    Sandwich,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an algebra in canonical form.
    Show {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether two basic operations commute.
    Commute {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        output: Output,
    },
    /// The n-ary derived operations, each with a derivation.
    Clone {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N")]
        arity: usize,
        /// Maximum number of members.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MEMBER_LIMIT)]
        limit: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The n-ary operations commuting with every basic operation.
    Centralizer {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N")]
        arity: usize,
        #[arg(long, value_enum, default_value_t = CentralizerMethod::Fast)]
        method: CentralizerMethod,
        /// Brute method: only test basic operations up to this arity.
        #[arg(long, value_name = "K")]
        cap_arity: Option<usize>,
        /// Fast method: maximum size of the generated clone slice.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MEMBER_LIMIT)]
        limit: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The n-ary part of the double centralizer.
    Dc {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N")]
        arity: usize,
        #[arg(long, value_enum, default_value_t = DcMethod::HomCriterion)]
        method: DcMethod,
        /// Sandwich method: arity cap on the centralizer used for the upper bound.
        #[arg(long, value_name = "K", default_value_t = 1)]
        cap_arity: usize,
        /// Homomorphism cap, or member cap for the sandwich method.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Show that the double centralizer equals the derived operations, with a
    /// separating homomorphism for every other operation.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N")]
        arity: usize,
        /// Homomorphism cap when no structural strategy applies.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_HOM_CAP)]
        limit: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Every homomorphism between two algebras of the same signature.
    Homs {
        #[arg(long, value_name = "FILE", alias = "algebra")]
        source: PathBuf,
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_HOM_CAP)]
        limit: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Write a built-in algebra as an algebra file.
    ZooBuild {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Reachability preorder, roots, orbits and unique transitions of a monoid action.
    AnalyzeAction {
        #[command(flatten)]
        source: Source,
        /// Longest word to examine; defaults to |A| + 1.
        #[arg(long, value_name = "L")]
        length_bound: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

enum Family {
    File,
    Vecspace,
    Gset(GroupTable),
    Action,
}

fn load(source: &Source) -> Result<(Algebra, Family)> {
    if let Some(path) = &source.algebra {
        return Ok((parse_algebra(path)?, Family::File));
    }
    if let Some(pd) = &source.vecspace {
        let field = PrimeField::new(pd[0])?;
        let d = usize::try_from(pd[1]).map_err(|_| CliError::Usage("--vecspace: dimension too large".into()))?;
        return Ok((make_vector_space(field, d)?, Family::Vecspace));
    }
    if let Some(gr) = &source.free_gset {
        let group = parse_group(Path::new(&gr[0]))?;
        let roots: usize =
            gr[1].parse().map_err(|_| CliError::Usage(format!("--free-gset: {:?} is not a root count", gr[1])))?;
        return Ok((make_free_gset(&group, roots)?, Family::Gset(group)));
    }
    if let Some(path) = &source.monoid_action {
        let algebra = parse_algebra(path)?;
        if let Some((name, op)) = algebra.named_ops().find(|(_, op)| op.arity() != 1) {
            return Err(CliError::invalid(
                &path.display().to_string(),
                format!("symbol {name:?}"),
                format!("a monoid action needs unary symbols, found arity {}", op.arity()),
            ));
        }
        return Ok((algebra, Family::Action));
    }
    unreachable!("clap requires one source")
}

/// What a command produced: the text to write, a one-line summary, and the exit status.
struct Outcome {
    text: String,
    summary: String,
    status: i32,
}

impl Outcome {
    fn report(report: Report, status: i32) -> Self {
        Outcome { summary: report.summary().to_string(), text: report.to_json(), status }
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn sizes_summary(label: &str, n: usize, set: &OpSet) -> String {
    format!("{label}({n}) size {}", set.len())
}

fn execute(command: Command) -> Result<(Outcome, Option<PathBuf>)> {
    Ok(match command {
        Command::Show { source, output } | Command::ZooBuild { source, output } => {
            let (algebra, _) = load(&source)?;
            let symbols: Vec<String> = algebra.named_ops().map(|(n, op)| format!("{n}/{}", op.arity())).collect();
            let summary = format!("carrier {}, symbols [{}]", algebra.carrier(), symbols.join(", "));
            (Outcome { text: algebra_to_json(&algebra), summary, status: 0 }, output.out)
        }
        Command::Commute { source, f, g, output } => {
            let (algebra, _) = load(&source)?;
            let find = |name: &str| algebra.op(name).cloned().ok_or_else(|| Error::UnknownSymbol(name.to_string()));
            let (fo, go) = (find(&f)?, find(&g)?);
            let (commuting, witness) = match commutes(&fo, &go)? {
                Commutation::Commute => (true, None),
                Commutation::Differ { matrix, first, second } => (
                    false,
                    Some(MatrixDoc {
                        h: matrix.entries().iter().map(|&x| x as u64).collect(),
                        rows: matrix.rows(),
                        cols: matrix.cols(),
                        lhs: first,
                        rhs: second,
                    }),
                ),
            };
            let summary = match &witness {
                None => format!("{f} and {g} commute"),
                Some(w) => format!("{f} and {g} do not commute: f*g = {} but f~*g = {} at {:?}", w.lhs, w.rhs, w.h),
            };
            let doc = CommuteDoc { algebra: (&algebra).into(), f, g, commutes: commuting, witness, summary };
            (Outcome::report(Report::Commute(doc), if commuting { 0 } else { 1 }), output.out)
        }
        Command::Clone { source, arity, limit, output } => {
            let (algebra, _) = load(&source)?;
            let slice = clone_slice(algebra.ops(), algebra.carrier(), arity, limit)?;
            let names: Vec<&str> = algebra.named_ops().map(|(n, _)| n).collect();
            let certs: Vec<_> = slice.ops().iter().map(|op| slice.certificate(op).expect("members have derivations")).collect();
            let doc = CloneDoc {
                algebra: (&algebra).into(),
                arity,
                carrier: algebra.carrier(),
                members: slice.ops().iter().map(|o| o.table().iter().map(|&x| x as u64).collect()).collect(),
                certificates: certs.iter().map(Term::from).collect(),
                terms: certs.iter().map(|c| c.render(&names)).collect(),
                size: slice.ops().len(),
                summary: sizes_summary("clone", arity, slice.ops()),
            };
            (Outcome::report(Report::Clone(doc), 0), output.out)
        }
        Command::Centralizer { source, arity, method, cap_arity, limit, output } => {
            let (algebra, _) = load(&source)?;
            let (gens, k) = (algebra.ops(), algebra.carrier());
            let report = match method {
                CentralizerMethod::Fast => centralizer_fast_report(gens, k, arity, limit)?,
                CentralizerMethod::Brute => centralizer_brute_report(gens, k, arity, cap_arity.unwrap_or(usize::MAX))?,
            };
            let summary = sizes_summary("centralizer", arity, &report.members);
            (Outcome::report(Report::Centralizer(centralizer_doc(&report, &algebra, summary)), 0), output.out)
        }
        Command::Dc { source, arity, method, cap_arity, limit, output } => {
            let (algebra, _) = load(&source)?;
            let report = match method {
                DcMethod::HomCriterion => double_centralizer_hom_report(&algebra, arity, limit.unwrap_or(DEFAULT_HOM_CAP))?,
                DcMethod::PairwiseEqualizer => pairwise_equalizer_report(&algebra, arity, limit.unwrap_or(DEFAULT_HOM_CAP))?,
                DcMethod::Sandwich => {
                    double_centralizer_sandwich_report(&algebra, arity, cap_arity, limit.unwrap_or(DEFAULT_MEMBER_LIMIT))?
                }
            };
            let summary = match (&report.verdict, &report.upper) {
                (Verdict::Bounds, Some(upper)) => {
                    format!("derived({arity}) size {} <= DC({arity}) <= size {}", report.members.len(), upper.len())
                }
                (Verdict::Verified, _) => format!("DC({arity})=derived({arity}), size {}", report.members.len()),
                _ => sizes_summary("DC", arity, &report.members),
            };
            (Outcome::report(Report::Dc(centralizer_doc(&report, &algebra, summary)), 0), output.out)
        }
        Command::Verify { source, arity, limit, output } => {
            let (algebra, family) = load(&source)?;
            let shared = Arc::new(algebra.clone());
            let mut strategy: Box<dyn WitnessStrategy> = match family {
                Family::Gset(group) => Box::new(GsetStrategy::new(shared.clone(), group, arity)?),
                Family::Vecspace => Box::new(VecspaceStrategy::new(shared.clone(), arity)?),
                Family::File | Family::Action => match recognize_vector_space(&algebra) {
                    Ok(_) => Box::new(VecspaceStrategy::new(shared.clone(), arity)?),
                    Err(_) => Box::new(HomSearchStrategy::new(&algebra, arity, limit)?),
                },
            };
            let report = verify_dc(&algebra, arity, strategy.as_mut(), DEFAULT_MEMBER_LIMIT)?;
            let (summary, status) = match &report.verdict {
                Verdict::Verified => (format!("DC({arity})=derived({arity}), size {}", report.members.len()), 0),
                Verdict::Undecided(f) => (format!("undecided: no separating homomorphism for {:?}", f.table()), 1),
                other => (format!("unexpected verdict {other:?}"), 1),
            };
            (Outcome::report(Report::Verify(centralizer_doc(&report, &algebra, summary)), status), output.out)
        }
        Command::Homs { source, target, limit, output } => {
            let s = Arc::new(parse_algebra(&source)?);
            let t = Arc::new(parse_algebra(&target)?);
            let found = enumerate_homs(&s, &t, limit)?;
            let mut homs: Vec<Vec<u64>> =
                found.homs.iter().map(|h| h.values().iter().map(|&x| x as u64).collect()).collect();
            homs.sort();
            let more = if found.truncated { " (truncated)" } else { "" };
            let doc = HomsDoc {
                source: s.as_ref().into(),
                target: t.as_ref().into(),
                size: homs.len(),
                summary: format!("{} homomorphisms{more}", homs.len()),
                homs,
                truncated: found.truncated,
            };
            (Outcome::report(Report::Homs(doc), 0), output.out)
        }
        Command::AnalyzeAction { source, length_bound, output } => {
            let (algebra, _) = load(&source)?;
            let structure = action_preorder(&algebra)?;
            let bound = length_bound.unwrap_or(algebra.carrier() + 1);
            let witness = unique_transitions_check(&algebra, bound)?;
            let summary = match &witness {
                None => format!("no two distinct words of length <= {bound} meet"),
                Some(w) => format!("unique transitions fail: words {:?} and {:?} meet at {}", w.w, w.v, w.a),
            };
            let k = algebra.carrier() as u32;
            let doc = ActionDoc {
                algebra: (&algebra).into(),
                up: (0..k).map(|a| structure.up(a)).collect(),
                roots: roots_of_action(&structure),
                orbits: structure.orbits().map(<[usize]>::to_vec),
                length_bound: bound,
                unique_transitions: witness.is_none(),
                witness: witness.map(|w| TransitionDoc { w: w.w, v: w.v, a: w.a }),
                summary,
            };
            let status = if doc.unique_transitions { 0 } else { 1 };
            (Outcome::report(Report::AnalyzeAction(doc), status), output.out)
        }
    })
}

fn apply_env_limit(value: Option<OsString>) -> Result<()> {
    if let Some(raw) = value {
        let text = raw.to_string_lossy().into_owned();
        match text.trim().parse::<usize>() {
            Ok(limit) if limit > 0 => set_table_limit(limit),
            _ => return Err(CliError::TableLimitEnv(text)),
        }
    }
    Ok(())
}

fn run_inner(cli: Cli) -> Result<i32> {
    apply_env_limit(std::env::var_os(TABLE_LIMIT_ENV))?;
    if let Some(path) = cli.replay {
        let report = Report::from_json(&path.display().to_string(), &read_text(&path)?)?;
        let problems = replay(&report)?;
        for p in &problems {
            println!("FAIL {p}");
        }
        if problems.is_empty() {
            println!("replay ok: {}", report.summary());
            return Ok(0);
        }
        println!("replay failed: {} problem(s)", problems.len());
        return Ok(1);
    }
    let Some(command) = cli.command else {
        return Err(CliError::Usage("expected a command or --replay REPORT; see --help".into()));
    };
    let (outcome, out) = execute(command)?;
    match out {
        Some(path) => {
            write_atomic(&path, &outcome.text)?;
            println!("{}", outcome.summary);
        }
        None => {
            print!("{}", outcome.text);
            eprintln!("{}", outcome.summary);
        }
    }
    Ok(outcome.status)
}

/// Runs the command line `args` (program name first) and returns the exit
/// status: 0 success, 1 a negative answer (non-commuting operations, an
/// undecided verification, a failed replay, a transition counterexample),
/// 2 a usage, input or resource error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_inner(cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
