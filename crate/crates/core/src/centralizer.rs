//! Centralizers `G^⊥` and double centralizers of finite algebras.
//!
//! Every computation filters the full operation space `A^(A^n)` and records,
//! for each rejected `f`, a witness that can be checked again without
//! redoing the search: a separating matrix, a member of the generated clone
//! with its derivation, or a homomorphism `A^(A^n) -> A`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::clone::{clone_slice, derived_clone_slice, DerivationCertificate};
use crate::guard::table_len;
use crate::homsearch::{enumerate_homs, for_each_hom, is_hom, regularize};
use crate::kronecker::{commutes, kron_first_at, kron_second_at, u_map, Commutation, Matrix};
use crate::tuple::encode_unchecked;
use crate::{Algebra, Elem, Error, OpSet, Operation, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Fast,
    HomCriterion,
    PairwiseEqualizer,
    Sandwich,
    Verification,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Fast => "fast",
            Method::HomCriterion => "hom-criterion",
            Method::PairwiseEqualizer => "pairwise-equalizer",
            Method::Sandwich => "sandwich",
            Method::Verification => "verification",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Method> {
        [
            Method::Brute,
            Method::Fast,
            Method::HomCriterion,
            Method::PairwiseEqualizer,
            Method::Sandwich,
            Method::Verification,
        ]
        .into_iter()
        .find(|m| m.tag() == tag)
    }
}

/// Why an operation is outside the computed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `f * g != f ~* g` at `matrix`, for the generator at index `generator`.
    Matrix { generator: usize, matrix: Matrix, first: Elem, second: Elem },
    /// A member `h` of the generated clone at arity `|A|^n` with
    /// `h(f) = lhs != rhs = f(h . u)`.
    CloneMember { h: Operation, certificate: DerivationCertificate, lhs: Elem, rhs: Elem },
    /// A homomorphism `A^(A^n) -> A` with `h(f) = lhs != rhs`.
    Hom { values: Vec<Elem>, lhs: Elem, rhs: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exclusion {
    pub f: Operation,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The set was computed by exhaustive filtering.
    Exact,
    /// Double centralizer equals the derived clone at this arity.
    Verified,
    /// The strategy produced no valid witness for this operation.
    Undecided(Operation),
    /// Only bounds are known (`members` below, `upper` above).
    Bounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerReport {
    pub carrier: usize,
    pub arity: usize,
    pub method: Method,
    pub strategy: Option<String>,
    pub members: OpSet,
    /// Derivations of `members`, in the same order, when membership was shown
    /// by derivation.
    pub certificates: Vec<DerivationCertificate>,
    pub upper: Option<OpSet>,
    pub exclusions: Vec<Exclusion>,
    pub verdict: Verdict,
}

impl CentralizerReport {
    fn new(carrier: usize, arity: usize, method: Method, members: OpSet) -> Self {
        CentralizerReport {
            carrier,
            arity,
            method,
            strategy: None,
            members,
            certificates: Vec::new(),
            upper: None,
            exclusions: Vec::new(),
            verdict: Verdict::Exact,
        }
    }
}

/// Every operation of arity `n`, in order of code.
pub fn all_operations(carrier: usize, n: usize) -> Result<impl Iterator<Item = Operation>> {
    let len = table_len(carrier, n)?;
    let count = table_len(carrier, len)?;
    Ok((0..count).map(move |code| Operation::from_code(carrier, n, code).expect("code below count")))
}

fn check_carriers(gens: &[Operation], carrier: usize) -> Result<()> {
    if carrier == 0 {
        return Err(Error::EmptyCarrier);
    }
    match gens.iter().find(|g| g.carrier() != carrier) {
        Some(g) => Err(Error::CarrierMismatch { expected: carrier, found: g.carrier() }),
        None => Ok(()),
    }
}

/// Codes of the projections `pi_j` as elements of `A^(A^n)`.
fn projection_codes(carrier: usize, n: usize) -> Result<Vec<usize>> {
    u_map(carrier, n)?.iter().map(Operation::code).collect()
}

/// Index in `A^n` of `(h(pi_j))_j`, for `h` given by its values on `A^(A^n)`.
fn point_index(values: &[Elem], proj: &[usize], carrier: usize) -> usize {
    encode_unchecked(proj.iter().map(|&c| values[c]), carrier)
}

/// `G^⊥` at arity `n`, testing only generators of arity at most `max_g_arity`.
pub fn centralizer_brute_report(
    gens: &[Operation],
    carrier: usize,
    n: usize,
    max_g_arity: usize,
) -> Result<CentralizerReport> {
    check_carriers(gens, carrier)?;
    let mut members = Vec::new();
    let mut exclusions = Vec::new();
    'next: for f in all_operations(carrier, n)? {
        for (generator, g) in gens.iter().enumerate().filter(|(_, g)| g.arity() <= max_g_arity) {
            if let Commutation::Differ { matrix, first, second } = commutes(&f, g)? {
                exclusions.push(Exclusion { f, witness: Witness::Matrix { generator, matrix, first, second } });
                continue 'next;
            }
        }
        members.push(f);
    }
    let mut report = CentralizerReport::new(carrier, n, Method::Brute, OpSet::new(carrier, n, members)?);
    report.exclusions = exclusions;
    Ok(report)
}

pub fn centralizer_brute(gens: &[Operation], carrier: usize, n: usize, max_g_arity: usize) -> Result<OpSet> {
    Ok(centralizer_brute_report(gens, carrier, n, max_g_arity)?.members)
}

/// `G^⊥` at arity `n` through the evaluation matrix: `f` is kept iff
/// `h(f) = f(h . u)` for every `h` of arity `|A|^n` in the clone generated by `G`.
pub fn centralizer_fast_report(gens: &[Operation], carrier: usize, n: usize, limit: usize) -> Result<CentralizerReport> {
    check_carriers(gens, carrier)?;
    let big = table_len(carrier, n)?;
    let slice = clone_slice(gens, carrier, big, limit)?;
    let proj = projection_codes(carrier, n)?;
    let points: Vec<usize> = slice.ops().iter().map(|h| point_index(h.table(), &proj, carrier)).collect();
    let mut members = Vec::new();
    let mut exclusions = Vec::new();
    for f in all_operations(carrier, n)? {
        let code = f.code()?;
        let bad = slice.ops().iter().zip(&points).find(|(h, &p)| h.table()[code] != f.table()[p]);
        match bad {
            None => members.push(f),
            Some((h, &p)) => {
                let witness = Witness::CloneMember {
                    h: h.clone(),
                    certificate: slice.certificate(h).expect("member has a certificate"),
                    lhs: h.table()[code],
                    rhs: f.table()[p],
                };
                exclusions.push(Exclusion { f, witness });
            }
        }
    }
    let mut report = CentralizerReport::new(carrier, n, Method::Fast, OpSet::new(carrier, n, members)?);
    report.exclusions = exclusions;
    Ok(report)
}

pub fn centralizer_fast(gens: &[Operation], carrier: usize, n: usize, limit: usize) -> Result<OpSet> {
    Ok(centralizer_fast_report(gens, carrier, n, limit)?.members)
}

/// Homomorphisms `A^(A^n) -> A`, failing with [`Error::Incomplete`] past `cap`.
fn all_homs_from_power(algebra: &Algebra, power: &Algebra, cap: usize) -> Result<Vec<Vec<Elem>>> {
    let mut homs = Vec::new();
    let mut truncated = false;
    for_each_hom(power, algebra, |values| {
        if homs.len() == cap {
            truncated = true;
            return false;
        }
        homs.push(values.to_vec());
        true
    })?;
    if truncated {
        return Err(Error::Incomplete { cap });
    }
    Ok(homs)
}

fn filter_by_homs(
    carrier: usize,
    n: usize,
    method: Method,
    homs: &[Vec<Elem>],
    rhs_of: impl Fn(usize, &Operation, usize) -> Elem,
) -> Result<CentralizerReport> {
    let mut members = Vec::new();
    let mut exclusions = Vec::new();
    for f in all_operations(carrier, n)? {
        let code = f.code()?;
        let bad = homs.iter().enumerate().find(|(i, h)| h[code] != rhs_of(*i, &f, code));
        match bad {
            None => members.push(f),
            Some((i, h)) => {
                let witness = Witness::Hom { values: h.clone(), lhs: h[code], rhs: rhs_of(i, &f, code) };
                exclusions.push(Exclusion { f, witness });
            }
        }
    }
    let mut report = CentralizerReport::new(carrier, n, method, OpSet::new(carrier, n, members)?);
    report.exclusions = exclusions;
    Ok(report)
}

/// The double centralizer at arity `n`: all `f` with `h(f) = f(h . u)` for
/// every homomorphism `h : A^(A^n) -> A`. At most `cap` homomorphisms are
/// enumerated; beyond that the result would only be an upper set, so the
/// call fails with [`Error::Incomplete`].
pub fn double_centralizer_hom_report(algebra: &Algebra, n: usize, cap: usize) -> Result<CentralizerReport> {
    let carrier = algebra.carrier();
    let power = algebra.power(table_len(carrier, n)?)?;
    let homs = all_homs_from_power(algebra, &power, cap)?;
    let proj = projection_codes(carrier, n)?;
    let points: Vec<usize> = homs.iter().map(|h| point_index(h, &proj, carrier)).collect();
    filter_by_homs(carrier, n, Method::HomCriterion, &homs, |i, f, _| f.table()[points[i]])
}

pub fn double_centralizer_hom(algebra: &Algebra, n: usize, cap: usize) -> Result<OpSet> {
    Ok(double_centralizer_hom_report(algebra, n, cap)?.members)
}

/// The same set as [`double_centralizer_hom`], as the equalizer of every
/// homomorphism with its regularization.
pub fn pairwise_equalizer_report(algebra: &Algebra, n: usize, cap: usize) -> Result<CentralizerReport> {
    let carrier = algebra.carrier();
    let base = Arc::new(algebra.clone());
    let power = Arc::new(algebra.power(table_len(carrier, n)?)?);
    let found = enumerate_homs(&power, &base, cap)?;
    if found.truncated {
        return Err(Error::Incomplete { cap });
    }
    let regular = found.homs.iter().map(|h| regularize(h, n)).collect::<Result<Vec<_>>>()?;
    let homs: Vec<Vec<Elem>> = found.homs.into_iter().map(|h| h.into_values()).collect();
    filter_by_homs(carrier, n, Method::PairwiseEqualizer, &homs, |i, _, code| regular[i].values()[code])
}

pub fn pairwise_equalizer_slice(algebra: &Algebra, n: usize, cap: usize) -> Result<OpSet> {
    Ok(pairwise_equalizer_report(algebra, n, cap)?.members)
}

/// Bounds `lower ⊆ DC(n) ⊆ upper`: the derived clone below, and above it the
/// centralizer of the centralizer slices of arity at most `cap_arity`.
pub fn double_centralizer_sandwich(algebra: &Algebra, n: usize, cap_arity: usize, limit: usize) -> Result<(OpSet, OpSet)> {
    let carrier = algebra.carrier();
    let lower = derived_clone_slice(algebra, n, limit)?.into_ops();
    let mut perp = Vec::new();
    for m in 0..=cap_arity {
        perp.extend(centralizer_brute(algebra.ops(), carrier, m, usize::MAX)?.into_vec());
    }
    let upper = centralizer_brute(&perp, carrier, n, cap_arity)?;
    Ok((lower, upper))
}

pub fn double_centralizer_sandwich_report(
    algebra: &Algebra,
    n: usize,
    cap_arity: usize,
    limit: usize,
) -> Result<CentralizerReport> {
    let (lower, upper) = double_centralizer_sandwich(algebra, n, cap_arity, limit)?;
    let exact = lower == upper;
    let mut report = CentralizerReport::new(algebra.carrier(), n, Method::Sandwich, lower);
    report.upper = Some(upper);
    report.verdict = if exact { Verdict::Verified } else { Verdict::Bounds };
    Ok(report)
}

/// Source of separating homomorphisms for [`verify_dc`].
pub trait WitnessStrategy {
    fn name(&self) -> &str;

    /// A homomorphism `A^(A^n) -> A`, as values indexed by power element,
    /// meant to separate `f` from the double centralizer. Its output is
    /// always checked before it is trusted.
    fn separating_hom(&mut self, f: &Operation) -> Result<Option<Vec<Elem>>>;
}

/// Scans a precomputed list of homomorphisms out of the power.
pub struct HomSearchStrategy {
    homs: Vec<Vec<Elem>>,
    points: Vec<usize>,
}

impl HomSearchStrategy {
    /// Enumerates up to `cap` homomorphisms; with a truncated list the
    /// strategy may fail to find witnesses but never finds wrong ones.
    pub fn new(algebra: &Algebra, n: usize, cap: usize) -> Result<Self> {
        let carrier = algebra.carrier();
        let power = algebra.power(table_len(carrier, n)?)?;
        let mut homs = Vec::new();
        for_each_hom(&power, algebra, |values| {
            homs.push(values.to_vec());
            homs.len() < cap
        })?;
        let proj = projection_codes(carrier, n)?;
        let points = homs.iter().map(|h| point_index(h, &proj, carrier)).collect();
        Ok(HomSearchStrategy { homs, points })
    }
}

impl WitnessStrategy for HomSearchStrategy {
    fn name(&self) -> &str {
        "hom-search"
    }

    fn separating_hom(&mut self, f: &Operation) -> Result<Option<Vec<Elem>>> {
        let code = f.code()?;
        Ok(self.homs.iter().zip(&self.points).find(|(h, &p)| h[code] != f.table()[p]).map(|(h, _)| h.clone()))
    }
}

/// Checks a candidate separating homomorphism against `f`; returns
/// `(h(f), f(h . u))` when it is a homomorphism and the two differ.
fn check_separation(
    algebra: &Algebra,
    power: &Algebra,
    proj: &[usize],
    f: &Operation,
    values: &[Elem],
) -> Result<Option<(Elem, Elem)>> {
    if values.len() != power.carrier() || is_hom(values, power, algebra)?.is_some() {
        return Ok(None);
    }
    let lhs = values[f.code()?];
    let rhs = f.table()[point_index(values, proj, algebra.carrier())];
    Ok((lhs != rhs).then_some((lhs, rhs)))
}

/// Shows `DC(n) = derived(n)` by obtaining, for every non-derived `f`, a
/// separating homomorphism from `strategy` and checking it. Members carry
/// derivation certificates. If some `f` gets no valid witness the verdict is
/// [`Verdict::Undecided`] for the first such `f`.
pub fn verify_dc(
    algebra: &Algebra,
    n: usize,
    strategy: &mut dyn WitnessStrategy,
    limit: usize,
) -> Result<CentralizerReport> {
    let carrier = algebra.carrier();
    let derived = derived_clone_slice(algebra, n, limit)?;
    let power = algebra.power(table_len(carrier, n)?)?;
    let proj = projection_codes(carrier, n)?;
    let mut exclusions = Vec::new();
    let mut undecided = None;
    for f in all_operations(carrier, n)? {
        if derived.contains(&f) {
            continue;
        }
        let candidate = match strategy.separating_hom(&f) {
            Ok(c) => c,
            Err(e @ Error::TableTooLarge { .. }) => return Err(e),
            Err(_) => None,
        };
        let checked = match &candidate {
            Some(values) => check_separation(algebra, &power, &proj, &f, values)?,
            None => None,
        };
        match (candidate, checked) {
            (Some(values), Some((lhs, rhs))) => exclusions.push(Exclusion { f, witness: Witness::Hom { values, lhs, rhs } }),
            _ => {
                undecided.get_or_insert(f);
            }
        }
    }
    let certificates = derived.ops().iter().map(|op| derived.certificate(op).expect("member")).collect();
    let mut report = CentralizerReport::new(carrier, n, Method::Verification, derived.ops().clone());
    report.strategy = Some(String::from(strategy.name()));
    report.certificates = certificates;
    report.exclusions = exclusions;
    report.verdict = match undecided {
        Some(f) => Verdict::Undecided(f),
        None => Verdict::Verified,
    };
    Ok(report)
}

/// Evaluates the three equivalent descriptions of `f ∈ G^⊥`: commuting with
/// every generator, `h(f) = f(h . u)` over the clone slice at arity `|A|^n`,
/// and commuting with every member of that slice. True iff all three agree.
pub fn check_charn_equivalence(gens: &[Operation], f: &Operation, limit: usize) -> Result<bool> {
    let carrier = f.carrier();
    check_carriers(gens, carrier)?;
    let n = f.arity();
    let mut first = true;
    for g in gens {
        first &= commutes(f, g)?.commutes();
    }
    let slice = clone_slice(gens, carrier, table_len(carrier, n)?, limit)?;
    let proj = projection_codes(carrier, n)?;
    let code = f.code()?;
    let second = slice.ops().iter().all(|h| h.table()[code] == f.table()[point_index(h.table(), &proj, carrier)]);
    let mut third = true;
    for h in slice.ops() {
        if !commutes(f, h)?.commutes() {
            third = false;
            break;
        }
    }
    Ok(first == second && second == third)
}

/// A witness or certificate in a report that did not check out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayFailure {
    pub f: Operation,
    pub reason: &'static str,
}

/// Rechecks every witness and certificate in `report` against the
/// generators (`algebra.ops()` for algebra-based reports). Exclusions and
/// members must also partition the operation space unless the report only
/// holds bounds.
pub fn replay_report(report: &CentralizerReport, algebra: &Algebra) -> Result<Vec<ReplayFailure>> {
    let carrier = report.carrier;
    if carrier != algebra.carrier() {
        return Err(Error::CarrierMismatch { expected: algebra.carrier(), found: carrier });
    }
    let n = report.arity;
    let gens = algebra.ops();
    let big = table_len(carrier, n)?;
    let proj = projection_codes(carrier, n)?;
    let mut power: Option<Box<Algebra>> = None;
    let mut failures = Vec::new();
    let mut fail = |f: &Operation, reason| failures.push(ReplayFailure { f: f.clone(), reason });

    for ex in &report.exclusions {
        let f = &ex.f;
        if f.carrier() != carrier || f.arity() != n {
            fail(f, "operation has the wrong shape");
            continue;
        }
        if report.members.contains(f) {
            fail(f, "operation is both included and excluded");
            continue;
        }
        match &ex.witness {
            Witness::Matrix { generator, matrix, first, second } => {
                let Some(g) = gens.get(*generator) else {
                    fail(f, "witness names a missing generator");
                    continue;
                };
                let shape_ok = matrix.carrier() == carrier && matrix.rows() == n && matrix.cols() == g.arity();
                if !shape_ok
                    || kron_first_at(f, g, matrix)? != *first
                    || kron_second_at(f, g, matrix)? != *second
                    || first == second
                {
                    fail(f, "matrix does not separate the two products");
                }
            }
            Witness::CloneMember { h, certificate, lhs, rhs } => {
                let derived = certificate.replay(gens, carrier, big);
                if derived.as_ref().ok() != Some(h) {
                    fail(f, "certificate does not derive the clone member");
                    continue;
                }
                let (l, r) = (h.table()[f.code()?], f.table()[point_index(h.table(), &proj, carrier)]);
                if (l, r) != (*lhs, *rhs) || l == r {
                    fail(f, "clone member does not separate");
                }
            }
            Witness::Hom { values, lhs, rhs } => {
                let power = match &mut power {
                    Some(p) => p,
                    slot => slot.insert(Box::new(algebra.power(big)?)),
                };
                match check_separation(algebra, power, &proj, f, values)? {
                    Some(pair) if pair == (*lhs, *rhs) => {}
                    _ => fail(f, "homomorphism does not separate"),
                }
            }
        }
    }

    if !report.certificates.is_empty() {
        if report.certificates.len() != report.members.len() {
            failures.push(ReplayFailure { f: Operation::constant(carrier, 0, 0)?, reason: "certificate count differs from member count" });
        } else {
            for (op, cert) in report.members.iter().zip(&report.certificates) {
                if cert.replay(gens, carrier, n).as_ref().ok() != Some(op) {
                    failures.push(ReplayFailure { f: op.clone(), reason: "certificate does not derive the member" });
                }
            }
        }
    }

    let partition = matches!(report.verdict, Verdict::Exact | Verdict::Verified) && report.method != Method::Sandwich;
    if partition {
        let count = table_len(carrier, big)?;
        if report.members.len() + report.exclusions.len() != count {
            failures.push(ReplayFailure {
                f: Operation::constant(carrier, n, 0)?,
                reason: "members and exclusions do not cover every operation",
            });
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clone::DEFAULT_MEMBER_LIMIT;
    use crate::homsearch::DEFAULT_HOM_CAP;
    use alloc::string::ToString;
    use alloc::vec;

    fn op(carrier: usize, arity: usize, table: &[Elem]) -> Operation {
        Operation::new(carrier, arity, table.to_vec()).unwrap()
    }

    fn not() -> Operation {
        op(2, 1, &[1, 0])
    }

    fn gf2() -> Algebra {
        Algebra::new(
            2,
            vec![
                ("add".to_string(), op(2, 2, &[0, 1, 1, 0])),
                ("zero".to_string(), op(2, 0, &[0])),
                ("neg".to_string(), op(2, 1, &[0, 1])),
                ("scale_0".to_string(), op(2, 1, &[0, 0])),
                ("scale_1".to_string(), op(2, 1, &[0, 1])),
            ],
        )
        .unwrap()
    }

    fn free_z2() -> Algebra {
        Algebra::new(2, vec![("e".to_string(), op(2, 1, &[0, 1])), ("s".to_string(), not())]).unwrap()
    }

    fn tables(set: &OpSet) -> Vec<Vec<Elem>> {
        set.iter().map(|o| o.table().to_vec()).collect()
    }

    #[test]
    fn brute_examples() {
        assert_eq!(tables(&centralizer_brute(&[not()], 2, 1, 9).unwrap()), [vec![0, 1], vec![1, 0]]);
        assert_eq!(centralizer_brute(&[], 2, 2, 9).unwrap().len(), 16);
        let g = [op(2, 2, &[0, 1, 1, 0]), op(2, 0, &[0])];
        assert_eq!(tables(&centralizer_brute(&g, 2, 1, 9).unwrap()), [vec![0, 0], vec![0, 1]]);
        // generators above the arity cap are ignored
        assert_eq!(centralizer_brute(&g[..1], 2, 1, 1).unwrap().len(), 4);
        assert_eq!(centralizer_brute(&g, 2, 1, 1).unwrap().len(), 2);
    }

    #[test]
    fn fast_matches_brute_examples() {
        for gens in [vec![not()], vec![], vec![op(2, 2, &[0, 1, 1, 0]), op(2, 0, &[0])]] {
            for n in 0..=2 {
                let brute = centralizer_brute(&gens, 2, n, usize::MAX).unwrap();
                let fast = centralizer_fast(&gens, 2, n, DEFAULT_MEMBER_LIMIT).unwrap();
                assert_eq!(brute, fast, "gens {gens:?} n {n}");
            }
        }
    }

    #[test]
    fn reports_replay() {
        let alg = Algebra::new(2, vec![("not".to_string(), not()), ("and".to_string(), op(2, 2, &[0, 0, 0, 1]))]).unwrap();
        for n in 0..=2 {
            for report in [
                centralizer_brute_report(alg.ops(), 2, n, usize::MAX).unwrap(),
                centralizer_fast_report(alg.ops(), 2, n, DEFAULT_MEMBER_LIMIT).unwrap(),
            ] {
                assert!(replay_report(&report, &alg).unwrap().is_empty(), "{:?} n {n}", report.method);
            }
        }
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let alg = Algebra::new(2, vec![("not".to_string(), not())]).unwrap();
        let mut report = centralizer_brute_report(alg.ops(), 2, 1, 9).unwrap();
        if let Witness::Matrix { first, .. } = &mut report.exclusions[0].witness {
            *first ^= 1;
        }
        assert_eq!(replay_report(&report, &alg).unwrap().len(), 1);
    }

    #[test]
    fn hom_criterion_examples() {
        assert_eq!(tables(&double_centralizer_hom(&gf2(), 1, DEFAULT_HOM_CAP).unwrap()), [vec![0, 0], vec![0, 1]]);
        assert_eq!(tables(&double_centralizer_hom(&free_z2(), 1, DEFAULT_HOM_CAP).unwrap()), [vec![0, 1], vec![1, 0]]);
        let one = Algebra::new(1, vec![("s".to_string(), op(1, 1, &[0]))]).unwrap();
        for n in 0..3 {
            assert_eq!(double_centralizer_hom(&one, n, DEFAULT_HOM_CAP).unwrap().len(), 1);
        }
        assert!(matches!(double_centralizer_hom(&gf2(), 1, 1), Err(Error::Incomplete { cap: 1 })));
    }

    #[test]
    fn pairwise_equalizer_agrees() {
        for n in 0..=2 {
            let a = double_centralizer_hom_report(&gf2(), n, DEFAULT_HOM_CAP).unwrap();
            let b = pairwise_equalizer_report(&gf2(), n, DEFAULT_HOM_CAP).unwrap();
            assert_eq!(a.members, b.members);
            assert!(replay_report(&b, &gf2()).unwrap().is_empty());
        }
    }

    #[test]
    fn sandwich_examples() {
        let (lower, upper) = double_centralizer_sandwich(&gf2(), 1, 2, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(tables(&lower), [vec![0, 0], vec![0, 1]]);
        assert_eq!(lower, upper);
        let empty = Algebra::new(2, vec![]).unwrap();
        let (lower, upper) = double_centralizer_sandwich(&empty, 1, 1, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(tables(&lower), [vec![0, 1]]);
        assert_eq!(tables(&upper), [vec![0, 1]]);
    }

    #[test]
    fn verify_with_generic_search() {
        let alg = gf2();
        for n in 0..=2 {
            let mut strategy = HomSearchStrategy::new(&alg, n, DEFAULT_HOM_CAP).unwrap();
            let report = verify_dc(&alg, n, &mut strategy, DEFAULT_MEMBER_LIMIT).unwrap();
            assert_eq!(report.verdict, Verdict::Verified);
            assert_eq!(report.members.len(), 1 << n);
            assert!(replay_report(&report, &alg).unwrap().is_empty());
        }
    }

    struct Useless;

    impl WitnessStrategy for Useless {
        fn name(&self) -> &str {
            "useless"
        }

        fn separating_hom(&mut self, _: &Operation) -> Result<Option<Vec<Elem>>> {
            Ok(Some(vec![0; 16]))
        }
    }

    #[test]
    fn bad_strategy_is_undecided() {
        let report = verify_dc(&gf2(), 2, &mut Useless, DEFAULT_MEMBER_LIMIT).unwrap();
        // the zero map is a hom but separates only f with f(0, 0) = 1
        assert_eq!(report.exclusions.len(), 8);
        assert_eq!(report.verdict, Verdict::Undecided(op(2, 2, &[0, 1, 0, 0])));
    }

    #[test]
    fn charn_equivalence_examples() {
        assert!(check_charn_equivalence(&[not()], &op(2, 1, &[0, 1]), DEFAULT_MEMBER_LIMIT).unwrap());
        assert!(check_charn_equivalence(&[not()], &op(2, 1, &[0, 0]), DEFAULT_MEMBER_LIMIT).unwrap());
        assert!(check_charn_equivalence(&[], &op(2, 2, &[0, 1, 1, 1]), DEFAULT_MEMBER_LIMIT).unwrap());
    }
}
