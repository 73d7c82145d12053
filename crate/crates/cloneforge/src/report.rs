//! Report documents: what each command writes, and how `--replay` rechecks it.
//!
//! Every report embeds the algebra it was computed from, so replaying needs
//! nothing but the report file. Replay checks witnesses; it does not redo the
//! search that found them.

use cloneforge_core::centralizer::{replay_report, CentralizerReport, Exclusion, Method, Verdict, Witness};
use cloneforge_core::clone::DerivationCertificate;
use cloneforge_core::homsearch::is_hom;
use cloneforge_core::kronecker::{commutes, kron_first_at, kron_second_at, Matrix};
use cloneforge_core::zoo::{action_preorder, apply_word, unique_transitions_check};
use cloneforge_core::{Algebra, Elem, OpSet};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::format::{check_table, from_json, to_canonical_json, AlgebraFile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Projection {
        p: usize,
    },
    Apply {
        g: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        args: Vec<Term>,
    },
}

impl From<&DerivationCertificate> for Term {
    fn from(c: &DerivationCertificate) -> Self {
        match c {
            DerivationCertificate::Projection(j) => Term::Projection { p: *j },
            DerivationCertificate::Apply { generator, args } => {
                Term::Apply { g: *generator, args: args.iter().map(Term::from).collect() }
            }
        }
    }
}

impl From<&Term> for DerivationCertificate {
    fn from(t: &Term) -> Self {
        match t {
            Term::Projection { p } => DerivationCertificate::Projection(*p),
            Term::Apply { g, args } => {
                DerivationCertificate::Apply { generator: *g, args: args.iter().map(DerivationCertificate::from).collect() }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExclusionDoc {
    pub f: Vec<u64>,
    /// `matrix`, `clone-member` or `hom`.
    pub kind: String,
    /// Index of the generator a matrix witness refers to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<usize>,
    /// Matrix entries, clone member table, or homomorphism values.
    pub h: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub term: Option<Term>,
    pub lhs: Elem,
    pub rhs: Elem,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralizerDoc {
    pub algebra: AlgebraFile,
    pub arity: usize,
    pub carrier: usize,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<String>,
    pub members: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Term>,
    /// Rendered form of `certificates`; informational.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<Vec<u64>>>,
    pub exclusions: Vec<ExclusionDoc>,
    /// `exact`, `verified`, `bounds` or `undecided`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub undecided: Option<Vec<u64>>,
    pub size: usize,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub h: Vec<u64>,
    pub rows: usize,
    pub cols: usize,
    pub lhs: Elem,
    pub rhs: Elem,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommuteDoc {
    pub algebra: AlgebraFile,
    pub f: String,
    pub g: String,
    pub commutes: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<MatrixDoc>,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CloneDoc {
    pub algebra: AlgebraFile,
    pub arity: usize,
    pub carrier: usize,
    pub members: Vec<Vec<u64>>,
    pub certificates: Vec<Term>,
    pub terms: Vec<String>,
    pub size: usize,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomsDoc {
    pub source: AlgebraFile,
    pub target: AlgebraFile,
    pub homs: Vec<Vec<u64>>,
    pub truncated: bool,
    pub size: usize,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionDoc {
    pub w: Vec<usize>,
    pub v: Vec<usize>,
    pub a: Elem,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub algebra: AlgebraFile,
    /// `up[a]` lists every `b` with `a <= b`.
    pub up: Vec<Vec<Elem>>,
    pub roots: Vec<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<usize>>,
    pub length_bound: usize,
    pub unique_transitions: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<TransitionDoc>,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Commute(CommuteDoc),
    Clone(CloneDoc),
    Centralizer(CentralizerDoc),
    Dc(CentralizerDoc),
    Verify(CentralizerDoc),
    Homs(HomsDoc),
    AnalyzeAction(ActionDoc),
}

fn wide(table: &[Elem]) -> Vec<u64> {
    table.iter().map(|&x| x as u64).collect()
}

fn tables(ops: &OpSet) -> Vec<Vec<u64>> {
    ops.iter().map(|o| wide(o.table())).collect()
}

impl Report {
    pub fn summary(&self) -> &str {
        match self {
            Report::Commute(d) => &d.summary,
            Report::Clone(d) => &d.summary,
            Report::Centralizer(d) | Report::Dc(d) | Report::Verify(d) => &d.summary,
            Report::Homs(d) => &d.summary,
            Report::AnalyzeAction(d) => &d.summary,
        }
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(&serde_json::to_value(self).expect("reports always serialize"))
    }

    pub fn from_json(source_name: &str, text: &str) -> Result<Report> {
        from_json(source_name, text)
    }
}

pub fn centralizer_doc(report: &CentralizerReport, algebra: &Algebra, summary: String) -> CentralizerDoc {
    let names: Vec<&str> = algebra.named_ops().map(|(n, _)| n).collect();
    let exclusions = report
        .exclusions
        .iter()
        .map(|ex| {
            let f = wide(ex.f.table());
            match &ex.witness {
                Witness::Matrix { generator, matrix, first, second } => ExclusionDoc {
                    f,
                    kind: "matrix".into(),
                    g: Some(*generator),
                    h: wide(matrix.entries()),
                    term: None,
                    lhs: *first,
                    rhs: *second,
                },
                Witness::CloneMember { h, certificate, lhs, rhs } => ExclusionDoc {
                    f,
                    kind: "clone-member".into(),
                    g: None,
                    h: wide(h.table()),
                    term: Some(certificate.into()),
                    lhs: *lhs,
                    rhs: *rhs,
                },
                Witness::Hom { values, lhs, rhs } => {
                    ExclusionDoc { f, kind: "hom".into(), g: None, h: wide(values), term: None, lhs: *lhs, rhs: *rhs }
                }
            }
        })
        .collect();
    let (verdict, undecided) = match &report.verdict {
        Verdict::Exact => ("exact", None),
        Verdict::Verified => ("verified", None),
        Verdict::Bounds => ("bounds", None),
        Verdict::Undecided(f) => ("undecided", Some(wide(f.table()))),
    };
    CentralizerDoc {
        algebra: algebra.into(),
        arity: report.arity,
        carrier: report.carrier,
        method: report.method.tag().into(),
        strategy: report.strategy.clone(),
        members: tables(&report.members),
        certificates: report.certificates.iter().map(Term::from).collect(),
        terms: report.certificates.iter().map(|c| c.render(&names)).collect(),
        upper: report.upper.as_ref().map(tables),
        exclusions,
        verdict: verdict.into(),
        undecided,
        size: report.members.len(),
        summary,
    }
}

const SRC: &str = "report";

fn opset(carrier: usize, n: usize, field: &str, tables: &[Vec<u64>]) -> Result<OpSet> {
    let ops = tables
        .iter()
        .enumerate()
        .map(|(i, t)| check_table(SRC, &format!("{field}[{i}]"), carrier, n, t))
        .collect::<Result<Vec<_>>>()?;
    let set = OpSet::new(carrier, n, ops.iter().cloned())?;
    if set.len() != ops.len() || set.iter().zip(&ops).any(|(a, b)| a != b) {
        return Err(CliError::invalid(SRC, field, "members must be distinct and in canonical order"));
    }
    Ok(set)
}

fn elems(field: &str, carrier: usize, values: &[u64]) -> Result<Vec<Elem>> {
    match values.iter().position(|&v| v >= carrier as u64) {
        Some(i) => Err(CliError::invalid(SRC, format!("{field}[{i}]"), "entry is not below the carrier")),
        None => Ok(values.iter().map(|&v| v as Elem).collect()),
    }
}

impl CentralizerDoc {
    /// Rebuilds the core report; fails on structurally invalid documents.
    pub fn to_report(&self, algebra: &Algebra) -> Result<CentralizerReport> {
        let (k, n) = (self.carrier, self.arity);
        if k != algebra.carrier() {
            return Err(CliError::invalid(SRC, "carrier", "differs from the embedded algebra"));
        }
        let method = Method::from_tag(&self.method)
            .ok_or_else(|| CliError::invalid(SRC, "method", format!("unknown method {:?}", self.method)))?;
        let big = k.checked_pow(n as u32).ok_or_else(|| CliError::invalid(SRC, "arity", "too large"))?;
        let mut exclusions = Vec::with_capacity(self.exclusions.len());
        for (i, ex) in self.exclusions.iter().enumerate() {
            let field = format!("exclusions[{i}]");
            let f = check_table(SRC, &format!("{field}.f"), k, n, &ex.f)?;
            let witness = match ex.kind.as_str() {
                "matrix" => {
                    let g = ex.g.ok_or_else(|| CliError::invalid(SRC, format!("{field}.g"), "missing generator"))?;
                    let cols = algebra
                        .ops()
                        .get(g)
                        .ok_or_else(|| CliError::invalid(SRC, format!("{field}.g"), "no such generator"))?
                        .arity();
                    let entries = elems(&format!("{field}.h"), k, &ex.h)?;
                    let matrix = Matrix::new(k, n, cols, entries)
                        .map_err(|e| CliError::invalid(SRC, format!("{field}.h"), e.to_string()))?;
                    Witness::Matrix { generator: g, matrix, first: ex.lhs, second: ex.rhs }
                }
                "clone-member" => {
                    let term = ex.term.as_ref().ok_or_else(|| CliError::invalid(SRC, format!("{field}.term"), "missing"))?;
                    let h = check_table(SRC, &format!("{field}.h"), k, big, &ex.h)?;
                    Witness::CloneMember { h, certificate: term.into(), lhs: ex.lhs, rhs: ex.rhs }
                }
                "hom" => Witness::Hom { values: elems(&format!("{field}.h"), k, &ex.h)?, lhs: ex.lhs, rhs: ex.rhs },
                other => return Err(CliError::invalid(SRC, format!("{field}.kind"), format!("unknown kind {other:?}"))),
            };
            exclusions.push(Exclusion { f, witness });
        }
        let verdict = match (self.verdict.as_str(), &self.undecided) {
            ("exact", None) => Verdict::Exact,
            ("verified", None) => Verdict::Verified,
            ("bounds", None) => Verdict::Bounds,
            ("undecided", Some(t)) => Verdict::Undecided(check_table(SRC, "undecided", k, n, t)?),
            _ => return Err(CliError::invalid(SRC, "verdict", format!("unexpected verdict {:?}", self.verdict))),
        };
        Ok(CentralizerReport {
            carrier: k,
            arity: n,
            method,
            strategy: self.strategy.clone(),
            members: opset(k, n, "members", &self.members)?,
            certificates: self.certificates.iter().map(DerivationCertificate::from).collect(),
            upper: self.upper.as_ref().map(|u| opset(k, n, "upper", u)).transpose()?,
            exclusions,
            verdict,
        })
    }
}

/// Rechecks `report`; returns one line per problem, empty when it holds up.
pub fn replay(report: &Report) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    match report {
        Report::Centralizer(doc) | Report::Dc(doc) | Report::Verify(doc) => {
            let algebra = doc.algebra.validate(SRC, "algebra.")?;
            let core = doc.to_report(&algebra)?;
            for failure in replay_report(&core, &algebra)? {
                problems.push(format!("{:?}: {}", failure.f.table(), failure.reason));
            }
            if doc.size != core.members.len() {
                problems.push("size does not match the member list".into());
            }
            if let Some(upper) = &core.upper {
                if !core.members.is_subset(upper) {
                    problems.push("lower bound is not inside the upper bound".into());
                }
            }
        }
        Report::Commute(doc) => {
            let algebra = doc.algebra.validate(SRC, "algebra.")?;
            let find = |name: &str, field: &str| {
                algebra.op(name).cloned().ok_or_else(|| CliError::invalid(SRC, field, format!("unknown symbol {name:?}")))
            };
            let (f, g) = (find(&doc.f, "f")?, find(&doc.g, "g")?);
            match (&doc.witness, doc.commutes) {
                (Some(w), false) => {
                    let entries = elems("witness.h", f.carrier(), &w.h)?;
                    let bad_shape = w.rows != f.arity() || w.cols != g.arity();
                    let matrix = Matrix::new(f.carrier(), w.rows, w.cols, entries)
                        .map_err(|e| CliError::invalid(SRC, "witness.h", e.to_string()))?;
                    let pair = (kron_first_at(&f, &g, &matrix)?, kron_second_at(&f, &g, &matrix)?);
                    if bad_shape || pair != (w.lhs, w.rhs) || pair.0 == pair.1 {
                        problems.push("the witness matrix does not separate f * g from f ~* g".into());
                    }
                }
                (None, true) => {
                    // a positive answer has no witness; it can only be rechecked
                    if !commutes(&f, &g)?.commutes() {
                        problems.push("the operations do not commute".into());
                    }
                }
                _ => problems.push("commutes and witness disagree".into()),
            }
        }
        Report::Clone(doc) => {
            let algebra = doc.algebra.validate(SRC, "algebra.")?;
            let members = opset(doc.carrier, doc.arity, "members", &doc.members)?;
            if doc.certificates.len() != members.len() || doc.size != members.len() {
                problems.push("certificate count or size differs from the member count".into());
            }
            for (op, term) in members.iter().zip(&doc.certificates) {
                let cert = DerivationCertificate::from(term);
                if cert.replay(algebra.ops(), doc.carrier, doc.arity).as_ref().ok() != Some(op) {
                    problems.push(format!("{:?}: certificate does not derive the member", op.table()));
                }
            }
        }
        Report::Homs(doc) => {
            let source = doc.source.validate(SRC, "source.")?;
            let target = doc.target.validate(SRC, "target.")?;
            let mut seen = std::collections::BTreeSet::new();
            for (i, h) in doc.homs.iter().enumerate() {
                let values = elems(&format!("homs[{i}]"), target.carrier(), h)?;
                if values.len() != source.carrier() {
                    problems.push(format!("homs[{i}]: expected {} values", source.carrier()));
                } else if let Some(v) = is_hom(&values, &source, &target)? {
                    problems.push(format!("homs[{i}]: not a homomorphism at symbol {} on {:?}", v.symbol, v.args));
                }
                if !seen.insert(values) {
                    problems.push(format!("homs[{i}]: listed twice"));
                }
            }
            if doc.size != doc.homs.len() {
                problems.push("size does not match the list".into());
            }
        }
        Report::AnalyzeAction(doc) => {
            let algebra = doc.algebra.validate(SRC, "algebra.")?;
            let structure = action_preorder(&algebra)?;
            let k = algebra.carrier() as Elem;
            if doc.up != (0..k).map(|a| structure.up(a)).collect::<Vec<_>>() {
                problems.push("the preorder does not match the action".into());
            }
            match (&doc.witness, doc.unique_transitions) {
                (Some(w), false) => {
                    let too_long = w.w.len().max(w.v.len()) > doc.length_bound;
                    let holds = w.w != w.v && apply_word(&algebra, &w.w, w.a)? == apply_word(&algebra, &w.v, w.a)?;
                    if too_long || !holds {
                        problems.push("the two words do not meet at the given point".into());
                    }
                }
                (None, true) => {
                    if unique_transitions_check(&algebra, doc.length_bound)?.is_some() {
                        problems.push("two words within the length bound meet".into());
                    }
                }
                _ => problems.push("unique_transitions and witness disagree".into()),
            }
        }
    }
    Ok(problems)
}
