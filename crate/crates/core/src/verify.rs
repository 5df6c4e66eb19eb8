//! Runs the structural claims about `HH¹` of group algebras as exact checks
//! over families of small groups, producing one record per claim instance.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use once_cell::unsync::OnceCell;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::assoc::{
    block_decomposition, center, group_algebra, ideal_from, ideal_power, is_local, is_symmetric, is_uniserial,
    nilpotency_index, ot_criterion, quotient, radical, radical_layers, radical_method, socle,
    truncated_polynomial_algebra, AssocAlgebra, IdealSubspace, RadicalMethod, Symmetry,
};
use crate::deriv::{
    commutator, der_filtration, ext1_self_dims, hh1, hh1_module_socle, induce_on_quotient,
    inner_derivation, restrict_to_center, socle_maps, DerivationSpace, HH1Presentation,
};
use crate::error::{Error, Result};
use crate::ffmat::{Echelon, Matrix, PrimeField, Scalar, Subspace};
use crate::groups::{GroupSpec, GroupTable};
use crate::lie::{is_simple, replay_verdict, witt_isomorphism, SimplicityCertificate, SimplicityVerdict};

pub const DEFAULT_PRIMES: [u32; 4] = [2, 3, 5, 7];
pub const DEFAULT_MAX_ORDER: usize = 32;
/// Hard ceiling on `max_group_order`; order-64 groups are opt-in.
pub const MAX_GROUP_ORDER: usize = 64;
/// Random samples drawn per claim, on top of the exhaustive basis checks.
pub const RANDOM_SAMPLES: usize = 32;

/// The suites, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SuiteId {
    #[serde(rename = "T1_forward")]
    T1Forward,
    #[serde(rename = "P25_converse")]
    P25Converse,
    #[serde(rename = "OT_criterion")]
    OtCriterion,
    #[serde(rename = "C23_inequality")]
    C23Inequality,
    #[serde(rename = "T12_lower_bound")]
    T12LowerBound,
    #[serde(rename = "P35_filtration")]
    P35Filtration,
    #[serde(rename = "L31_L34_lemmas")]
    L31L34Lemmas,
    #[serde(rename = "W_iso")]
    WIso,
}

impl SuiteId {
    pub const ALL: [SuiteId; 8] = [
        SuiteId::T1Forward,
        SuiteId::P25Converse,
        SuiteId::OtCriterion,
        SuiteId::C23Inequality,
        SuiteId::T12LowerBound,
        SuiteId::P35Filtration,
        SuiteId::L31L34Lemmas,
        SuiteId::WIso,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::T1Forward => "T1_forward",
            SuiteId::P25Converse => "P25_converse",
            SuiteId::OtCriterion => "OT_criterion",
            SuiteId::C23Inequality => "C23_inequality",
            SuiteId::T12LowerBound => "T12_lower_bound",
            SuiteId::P35Filtration => "P35_filtration",
            SuiteId::L31L34Lemmas => "L31_L34_lemmas",
            SuiteId::WIso => "W_iso",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Families of test algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Cyclic `p`-groups.
    Cyclic,
    /// `(C_p)^n` with `n ≥ 2`.
    ElemAbelian,
    /// Abelian `p`-groups that are neither cyclic nor elementary abelian.
    Product,
    Dihedral,
    Quaternion,
    Extraspecial,
    /// `C_p ⋊ C_m` with faithful action, one per divisor `m > 1` of `p - 1`.
    Semidirect,
    /// `k[x_1..x_n]/(x_i^h)`, which is not a group algebra.
    Truncated,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Cyclic,
        Family::ElemAbelian,
        Family::Product,
        Family::Dihedral,
        Family::Quaternion,
        Family::Extraspecial,
        Family::Semidirect,
        Family::Truncated,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::ElemAbelian => "elem-abelian",
            Family::Product => "product",
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::Extraspecial => "extraspecial",
            Family::Semidirect => "semidirect",
            Family::Truncated => "truncated",
        }
    }

    /// Ground truth for `J(B) = J(Z(B))B`: true exactly for the nilpotent
    /// blocks with abelian defect group, which among these families are the
    /// abelian `p`-group algebras.
    fn ot_ground_truth(self) -> Option<(bool, &'static str)> {
        match self {
            Family::Cyclic | Family::ElemAbelian | Family::Product => Some((true, "abelian p-group")),
            Family::Dihedral | Family::Quaternion | Family::Extraspecial => Some((false, "nonabelian defect group")),
            Family::Semidirect => Some((false, "non-nilpotent principal block")),
            Family::Truncated => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub primes: Vec<u32>,
    pub families: Vec<Family>,
    pub max_group_order: usize,
    pub rng_seed: u64,
    pub suites: Vec<SuiteId>,
    /// Record wall-clock timings (which makes reports non-reproducible).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            primes: DEFAULT_PRIMES.to_vec(),
            families: Family::ALL.to_vec(),
            max_group_order: DEFAULT_MAX_ORDER,
            rng_seed: 0,
            suites: SuiteId::ALL.to_vec(),
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::InvalidParameter("no suites selected".into()));
        }
        if self.families.is_empty() {
            return Err(Error::InvalidParameter("no families selected".into()));
        }
        if self.primes.is_empty() {
            return Err(Error::InvalidParameter("no primes selected".into()));
        }
        for &p in &self.primes {
            PrimeField::new(p)?;
        }
        if self.max_group_order == 0 || self.max_group_order > MAX_GROUP_ORDER {
            return Err(Error::InvalidParameter(format!(
                "max_group_order must lie in [1, {MAX_GROUP_ORDER}], got {}",
                self.max_group_order
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// One evaluated claim on one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: SuiteId,
    pub algebra: String,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

/// Associative-side invariants of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocSummary {
    pub dim: usize,
    pub commutative: bool,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub radical_method: RadicalMethod,
    /// `dim J^i/J^{i+1}` for `i = 1, 2, …`.
    pub radical_layers: Vec<usize>,
    pub nilpotency_index: usize,
    pub socle_dim: usize,
    /// Absent when the center does not split over the prime field.
    pub blocks: Option<usize>,
    pub local: bool,
    pub symmetric: Symmetry,
    pub uniserial: bool,
}

/// Derivation-side invariants, with the Lie verdict on `HH¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hh1Summary {
    pub der: usize,
    /// `dim Der_1`, the derivations preserving `J`.
    pub der1: usize,
    pub ider: usize,
    pub hh1: usize,
    pub lie_verdict: String,
    pub lie_certificate: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub algebra: String,
    pub field_char: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assoc: Option<AssocSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hh1: Option<Hh1Summary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub records: Vec<CheckRecord>,
    pub summaries: Vec<AlgebraSummary>,
}

impl SuiteReport {
    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }
}

/// A member of the test catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestAlgebra {
    pub id: String,
    pub family: Family,
    pub p: u32,
    pub group: Option<GroupSpec>,
    /// `(variables, height)` for the truncated polynomial family.
    pub truncated: Option<(u32, u32)>,
    pub dim: usize,
}

impl TestAlgebra {
    fn of_group(family: Family, p: u32, spec: GroupSpec) -> Result<Self> {
        let dim = spec.order()?;
        Ok(TestAlgebra { id: format!("k[{spec}]/GF({p})"), family, p, group: Some(spec), truncated: None, dim })
    }

    fn is_p_group(&self) -> bool {
        matches!(
            self.family,
            Family::Cyclic | Family::ElemAbelian | Family::Product | Family::Dihedral | Family::Quaternion | Family::Extraspecial
        )
    }

    fn is_abelian_p_group(&self) -> bool {
        matches!(self.family, Family::Cyclic | Family::ElemAbelian | Family::Product)
    }

    /// `(n, p)` with the group isomorphic to `(C_p)^n`.
    fn elementary_rank(&self) -> Option<u32> {
        match self.group {
            Some(GroupSpec::ElemAbelian { n, .. }) => Some(n),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<AssocAlgebra> {
        let f = PrimeField::new(self.p)?;
        match (&self.group, self.truncated) {
            (Some(spec), _) => group_algebra(&spec.build()?, f),
            (None, Some((n, h))) => truncated_polynomial_algebra(f, n, h),
            (None, None) => Err(Error::Internal("catalog entry without a construction".into())),
        }
    }
}

fn truncated_id(p: u32, n: u32, h: u32) -> String {
    if n == 1 {
        return format!("k[t]/(t^{h})/GF({p})");
    }
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let rels: Vec<String> = vars.iter().map(|v| format!("{v}^{h}")).collect();
    format!("k[{}]/({})/GF({p})", vars.join(","), rels.join(","))
}

/// Partitions of `k` into parts of size at most `max`, largest part first.
fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(k)).rev() {
        for mut rest in partitions(k - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Truncated polynomial algebras in the catalog, as `(p, variables, height)`.
const TRUNCATED: [(u32, u32, u32); 2] = [(2, 2, 3), (7, 1, 7)];

/// The test algebras selected by `cfg`, ordered by prime, dimension and id.
pub fn catalog(cfg: &SuiteConfig) -> Result<Vec<TestAlgebra>> {
    cfg.validate()?;
    let max = cfg.max_group_order;
    let mut primes = cfg.primes.clone();
    primes.sort_unstable();
    primes.dedup();
    let mut out = Vec::new();
    for &p in &primes {
        let pu = p as usize;
        let mut entries = Vec::new();
        let mut k = 1;
        while pu.pow(k) <= max {
            let q = pu.pow(k);
            // cyclic of prime order is built as (C_p)^1 so the Witt map applies
            let cyc = if k == 1 { GroupSpec::ElemAbelian { p, n: 1 } } else { GroupSpec::Cyclic { n: q } };
            entries.push(TestAlgebra::of_group(Family::Cyclic, p, cyc)?);
            if k >= 2 {
                entries.push(TestAlgebra::of_group(Family::ElemAbelian, p, GroupSpec::ElemAbelian { p, n: k })?);
                for parts in partitions(k, k - 1) {
                    if parts[0] == 1 {
                        continue;
                    }
                    let factors = parts.iter().map(|&e| GroupSpec::Cyclic { n: pu.pow(e) }).collect();
                    entries.push(TestAlgebra::of_group(Family::Product, p, GroupSpec::DirectProduct { factors })?);
                }
            }
            if p == 2 && k >= 3 {
                entries.push(TestAlgebra::of_group(Family::Dihedral, p, GroupSpec::Dihedral { order: q })?);
            }
            if p == 2 && k == 3 {
                entries.push(TestAlgebra::of_group(Family::Quaternion, p, GroupSpec::Quaternion8)?);
            }
            if p > 2 && k == 3 {
                entries.push(TestAlgebra::of_group(Family::Extraspecial, p, GroupSpec::ExtraspecialP3ExponentP { p })?);
            }
            k += 1;
        }
        for m in 2..p {
            if (p - 1) % m != 0 || pu * m as usize > max {
                continue;
            }
            if let Some(d) = (2..p).find(|&d| multiplicative_order(d, p) == m) {
                entries.push(TestAlgebra::of_group(Family::Semidirect, p, GroupSpec::SemidirectCpCm { p, m, d })?);
            }
        }
        for (tp, n, h) in TRUNCATED {
            let dim = (h as usize).pow(n);
            if tp == p && dim <= max {
                entries.push(TestAlgebra {
                    id: truncated_id(p, n, h),
                    family: Family::Truncated,
                    p,
                    group: None,
                    truncated: Some((n, h)),
                    dim,
                });
            }
        }
        entries.retain(|e| cfg.families.contains(&e.family));
        entries.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        out.extend(entries);
    }
    Ok(out)
}

fn multiplicative_order(d: u32, p: u32) -> u32 {
    let mut x = d % p;
    let mut k = 1;
    while x != 1 {
        x = x * d % p;
        k += 1;
    }
    k
}

/// Per-algebra state shared by all suites; everything is computed on demand.
struct Instance {
    entry: TestAlgebra,
    seed: u64,
    alg: OnceCell<Result<AssocAlgebra>>,
    table: OnceCell<Result<GroupTable>>,
    hh1: OnceCell<Result<HH1Presentation>>,
    verdict: OnceCell<SimplicityVerdict>,
    used: std::cell::Cell<bool>,
}

impl Instance {
    fn new(entry: TestAlgebra, seed: u64) -> Self {
        Instance {
            entry,
            seed,
            alg: OnceCell::new(),
            table: OnceCell::new(),
            hh1: OnceCell::new(),
            verdict: OnceCell::new(),
            used: std::cell::Cell::new(false),
        }
    }

    fn algebra(&self) -> Result<&AssocAlgebra> {
        self.used.set(true);
        self.alg.get_or_init(|| self.entry.build()).as_ref().map_err(Clone::clone)
    }

    fn table(&self) -> Result<&GroupTable> {
        self.table
            .get_or_init(|| match &self.entry.group {
                Some(spec) => spec.build(),
                None => Err(Error::InvalidParameter("not a group algebra".into())),
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn hh1(&self) -> Result<&HH1Presentation> {
        let a = self.algebra()?;
        self.hh1.get_or_init(|| hh1(a)).as_ref().map_err(Clone::clone)
    }

    fn verdict(&self) -> Result<&SimplicityVerdict> {
        let h = self.hh1()?;
        Ok(self.verdict.get_or_init(|| is_simple(&h.lie, self.seed)))
    }
}

/// Result of evaluating one claim.
struct Outcome {
    computed: String,
    status: Status,
    certificate: Option<String>,
}

impl Outcome {
    fn judge(ok: bool, computed: impl Into<String>) -> Self {
        Outcome { computed: computed.into(), status: if ok { Status::Pass } else { Status::Fail }, certificate: None }
    }

    fn with_certificate(mut self, c: impl Into<String>) -> Self {
        self.certificate = Some(c.into());
        self
    }
}

struct Recorder {
    suite: SuiteId,
    timings: bool,
    records: Vec<CheckRecord>,
}

impl Recorder {
    fn new(suite: SuiteId, timings: bool) -> Self {
        Recorder { suite, timings, records: Vec::new() }
    }

    fn check(&mut self, algebra: &str, claim: &str, expected: impl Into<String>, eval: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let outcome = eval().unwrap_or_else(|e| match e {
            Error::Inconclusive(msg) => Outcome { computed: msg, status: Status::Inconclusive, certificate: None },
            other => Outcome { computed: format!("error: {other}"), status: Status::Fail, certificate: None },
        });
        let timing_ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.records.push(CheckRecord {
            suite: self.suite,
            algebra: algebra.to_string(),
            claim: claim.to_string(),
            expected: expected.into(),
            computed: outcome.computed,
            pass: outcome.status == Status::Pass,
            status: outcome.status,
            timing_ms,
            certificate: outcome.certificate,
        });
    }
}

/// 64-bit FNV-1a, used to derive per-record seeds from ids.
fn fnv1a(parts: &[&str]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for &b in part.as_bytes().iter().chain(std::iter::once(&0xff)) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

fn rng_for(seed: u64, suite: SuiteId, algebra: &str, claim: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(&[suite.as_str(), algebra, claim]))
}

fn random_vector(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..n).map(|_| rng.gen_range(0..f.p())).collect()
}

fn random_in(s: &Subspace, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    s.combine(&random_vector(s.field(), s.dim(), rng))
}

fn random_derivation(space: &DerivationSpace, rng: &mut ChaCha8Rng) -> Matrix {
    space.combine(&random_vector(space.space().field(), space.dim(), rng))
}

pub fn describe_verdict(v: &SimplicityVerdict) -> String {
    match v {
        SimplicityVerdict::Simple { seed, certificate: SimplicityCertificate::Norton { generators, certificate } } => format!(
            "norton seed={seed} generators={generators:?} attempt={} factor_degree={} nullity={}",
            certificate.attempt,
            certificate.factor.len().saturating_sub(1),
            certificate.nullity
        ),
        SimplicityVerdict::Simple { seed, certificate: SimplicityCertificate::Exhaustive { lines } } => {
            format!("exhaustive seed={seed} lines={lines}")
        }
        SimplicityVerdict::NotSimple { reason, witness } => {
            let reason = serde_plain_name(reason);
            match witness {
                Some(w) => format!("{reason}: ideal of dim {}", w.dim()),
                None => reason,
            }
        }
        SimplicityVerdict::Inconclusive { seed, transcript } => format!("inconclusive seed={seed}: {transcript}"),
    }
}

fn serde_plain_name(r: &crate::lie::NonSimpleReason) -> String {
    use crate::lie::NonSimpleReason::*;
    match r {
        DimensionAtMostOne => "dimension_at_most_one",
        Abelian => "abelian",
        NonzeroCenter => "nonzero_center",
        NotPerfect => "not_perfect",
        ProperIdeal => "proper_ideal",
    }
    .to_string()
}

/// Runs every selected suite over the catalog. Records come out grouped by
/// suite (in [`SuiteId::ALL`] order) and then by catalog order; summaries
/// cover every algebra some suite touched.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let entries = catalog(cfg)?;
    let instances: Vec<Instance> = entries.into_iter().map(|e| Instance::new(e, cfg.rng_seed)).collect();
    let mut suites = cfg.suites.clone();
    suites.sort_unstable();
    suites.dedup();
    let mut records = Vec::new();
    for suite in suites {
        let mut rec = Recorder::new(suite, cfg.timings);
        for inst in &instances {
            match suite {
                SuiteId::T1Forward => t1_forward(&mut rec, inst),
                SuiteId::P25Converse => p25_converse(&mut rec, inst),
                SuiteId::OtCriterion => ot_records(&mut rec, inst),
                SuiteId::C23Inequality => c23_inequality(&mut rec, inst),
                SuiteId::T12LowerBound => t12_lower_bound(&mut rec, inst),
                SuiteId::P35Filtration => p35_filtration(&mut rec, inst, cfg.rng_seed),
                SuiteId::L31L34Lemmas => lemma_records(&mut rec, inst, cfg.rng_seed),
                SuiteId::WIso => w_iso(&mut rec, inst),
            }
        }
        records.extend(rec.records);
    }
    let summaries = instances
        .iter()
        .filter(|i| i.used.get())
        .map(|i| summarize_instance(i, true))
        .collect();
    Ok(SuiteReport { records, summaries })
}

/// The lemma checks on a single algebra.
pub fn lemma_suite(a: &AssocAlgebra, algebra_id: &str, seed: u64) -> Vec<CheckRecord> {
    let entry = TestAlgebra {
        id: algebra_id.to_string(),
        family: Family::Truncated,
        p: a.field().p(),
        group: a.meta().group.clone(),
        truncated: None,
        dim: a.dim(),
    };
    let inst = Instance::new(entry, seed);
    let _ = inst.alg.set(Ok(a.clone()));
    let mut rec = Recorder::new(SuiteId::L31L34Lemmas, false);
    lemma_records(&mut rec, &inst, seed);
    rec.records
}

/// The `J(A) = J(Z(A))A` checks over the catalog selected by `cfg`.
pub fn ot_suite(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let cfg = SuiteConfig { suites: vec![SuiteId::OtCriterion], ..cfg.clone() };
    Ok(run_suite(&cfg)?.records)
}

/// Summary of a single algebra; the `HH¹` part is skipped unless `with_hh1`.
pub fn summarize(a: &AssocAlgebra, algebra_id: &str, seed: u64, with_hh1: bool) -> AlgebraSummary {
    let entry = TestAlgebra {
        id: algebra_id.to_string(),
        family: Family::Truncated,
        p: a.field().p(),
        group: a.meta().group.clone(),
        truncated: None,
        dim: a.dim(),
    };
    let inst = Instance::new(entry, seed);
    let _ = inst.alg.set(Ok(a.clone()));
    summarize_instance(&inst, with_hh1)
}

fn summarize_instance(inst: &Instance, with_hh1: bool) -> AlgebraSummary {
    let mut s = AlgebraSummary {
        algebra: inst.entry.id.clone(),
        field_char: inst.entry.p,
        group: inst.entry.group.clone(),
        assoc: None,
        hh1: None,
        error: None,
    };
    let a = match inst.algebra() {
        Ok(a) => a,
        Err(e) => {
            s.error = Some(e.to_string());
            return s;
        }
    };
    match assoc_summary(a) {
        Ok(x) => s.assoc = Some(x),
        Err(e) => s.error = Some(e.to_string()),
    }
    if !with_hh1 {
        return s;
    }
    let hh = inst.verdict().and_then(|v| hh1_summary(a, inst.hh1()?, v));
    match hh {
        Ok(x) => s.hh1 = Some(x),
        Err(e) => {
            s.error.get_or_insert(e.to_string());
        }
    }
    s
}

pub fn assoc_summary(a: &AssocAlgebra) -> Result<AssocSummary> {
    let blocks = match block_decomposition(a) {
        Ok(b) => Some(b.len()),
        Err(Error::NotSplit(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(AssocSummary {
        dim: a.dim(),
        commutative: a.is_commutative(),
        center_dim: center(a)?.algebra.dim(),
        radical_dim: radical(a)?.dim(),
        radical_method: radical_method(a)?,
        radical_layers: radical_layers(a)?,
        nilpotency_index: nilpotency_index(a)?,
        socle_dim: socle(a)?.dim(),
        blocks,
        local: is_local(a)?,
        symmetric: is_symmetric(a)?,
        uniserial: is_uniserial(a)?,
    })
}

pub fn hh1_summary(a: &AssocAlgebra, h: &HH1Presentation, verdict: &SimplicityVerdict) -> Result<Hh1Summary> {
    let flag = RadicalFlag::new(a)?;
    let der1 = filtration_space(a, &h.der, &flag, 1)?;
    Ok(Hh1Summary {
        der: h.der.dim(),
        der1: der1.dim(),
        ider: h.ider.dim(),
        hh1: h.dim(),
        lie_verdict: verdict.label().to_string(),
        lie_certificate: describe_verdict(verdict),
    })
}

// ---------------------------------------------------------------------------
// simplicity

fn t1_forward(rec: &mut Recorder, inst: &Instance) {
    let e = &inst.entry;
    if e.elementary_rank().is_none() || e.dim < 3 {
        return;
    }
    rec.check(&e.id, "HH¹(kP) is a simple Lie algebra for elementary abelian P of order at least 3", "simple", || {
        let v = inst.verdict()?;
        let h = inst.hh1()?;
        let replayed = replay_verdict(&h.lie, v);
        let computed = format!("{} (dim HH¹ = {}, replayed = {replayed})", v.label(), h.dim());
        let out = match v.is_simple() {
            Some(s) => Outcome::judge(s && replayed, computed),
            None => Outcome { computed, status: Status::Inconclusive, certificate: None },
        };
        Ok(out.with_certificate(describe_verdict(v)))
    });
}

fn p25_converse(rec: &mut Recorder, inst: &Instance) {
    let e = &inst.entry;
    let elementary = e.elementary_rank().is_some();
    if !e.is_p_group() || (elementary && e.dim != 2) {
        return;
    }
    rec.check(
        &e.id,
        "HH¹(kP) is not simple when P is not elementary abelian of order at least 3",
        "not_simple with a verified proper ideal",
        || {
            let v = inst.verdict()?;
            let h = inst.hh1()?;
            let replayed = replay_verdict(&h.lie, v);
            let computed = format!("{} (dim HH¹ = {}, witness replayed = {replayed})", v.label(), h.dim());
            let out = match v.is_simple() {
                Some(s) => Outcome::judge(!s && replayed, computed),
                None => Outcome { computed, status: Status::Inconclusive, certificate: None },
            };
            Ok(out.with_certificate(describe_verdict(v)))
        },
    );
    if e.is_abelian_p_group() && !elementary {
        rec.check(
            &e.id,
            "every derivation preserves I(kQ)kP for Q = Φ(P), and the derivations with image in I(kQ)kP form a proper nonzero ideal of HH¹(kP)",
            "nonzero proper Lie ideal",
            || frattini_witness(inst),
        );
    }
}

fn frattini_witness(inst: &Instance) -> Result<Outcome> {
    let a = inst.algebra()?;
    let g = inst.table()?;
    let h = inst.hh1()?;
    let f = a.field();
    let d = a.dim();
    let q: Vec<usize> = g.frattini()?.into_iter().filter(|&x| x != g.identity()).collect();
    if q.is_empty() {
        return Ok(Outcome::judge(false, "Frattini subgroup is trivial"));
    }
    let seeds: Vec<Vec<Scalar>> = q
        .iter()
        .map(|&x| {
            let mut v = vec![0; d];
            v[x] = 1;
            v[g.identity()] = f.neg(1);
            v
        })
        .collect();
    let ideal = ideal_from(a, &Subspace::from_vectors(f, d, seeds))?;
    let quo = quotient(a, &ideal)?;
    let ders = h.der.matrices();
    let mut induced = Vec::with_capacity(ders.len());
    for m in &ders {
        match induce_on_quotient(a, &quo, m) {
            Ok(x) => induced.push(x),
            Err(Error::NotPreserved) => return Ok(Outcome::judge(false, "a derivation does not preserve I(kQ)kP")),
            Err(e) => return Err(e),
        }
    }
    // kernel of Der(kP) → Der(kP/I), in Der coordinates
    let flat: Vec<Vec<Scalar>> = induced.iter().map(|m| m.data().to_vec()).collect();
    let kernel = kernel_of_columns(f, ders.len(), &flat)?;
    let mut hh_vectors = Vec::with_capacity(kernel.dim());
    for c in kernel.vectors() {
        let m = h.der.combine(c);
        for l in 0..d {
            if !ideal.contains(&m.column(l)) {
                return Ok(Outcome::judge(false, "a kernel element has image outside I(kQ)kP"));
            }
        }
        let coords = h.coordinates(&m).ok_or_else(|| Error::Internal("kernel element left Der".into()))?;
        hh_vectors.push(coords);
    }
    let k = Subspace::from_vectors(f, h.dim(), hh_vectors);
    let ok = !k.is_zero() && !k.is_full() && h.lie.is_ideal(&k);
    Ok(Outcome::judge(
        ok,
        format!(
            "|Q| = {}, dim I(kQ)kP = {}, ideal of dim {} in HH¹ of dim {}",
            q.len() + 1,
            ideal.dim(),
            k.dim(),
            h.dim()
        ),
    ))
}

/// Kernel of the linear map whose `i`-th column is `cols[i]`.
fn kernel_of_columns(f: PrimeField, n: usize, cols: &[Vec<Scalar>]) -> Result<Subspace> {
    if n == 0 {
        return Ok(Subspace::zero(f, 0));
    }
    let len = cols[0].len();
    if len == 0 {
        return Ok(Subspace::full(f, n));
    }
    let rows: Vec<Vec<Scalar>> = (0..len).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    Ok(Matrix::from_rows(f, n, &rows)?.kernel())
}

// ---------------------------------------------------------------------------
// J(A) = J(Z(A))A

fn ot_records(rec: &mut Recorder, inst: &Instance) {
    let e = &inst.entry;
    let Some((truth, why)) = e.family.ot_ground_truth() else {
        return;
    };
    if e.is_p_group() {
        rec.check(&e.id, "J(A) = J(Z(A))A", format!("{truth} ({why})"), || {
            let a = inst.algebra()?;
            let got = ot_criterion(a)?;
            Ok(Outcome::judge(got == truth, got.to_string()))
        });
        return;
    }
    let id = format!("B0({})", e.id);
    rec.check(&id, "J(B) = J(Z(B))B for the principal block B", format!("{truth} ({why})"), || {
        let a = inst.algebra()?;
        let blocks = block_decomposition(a)?;
        let f = a.field();
        // the principal block is the one whose idempotent has augmentation 1
        let b = blocks
            .iter()
            .find(|b| b.idempotent.iter().fold(0, |acc, &x| f.add(acc, x)) != 0)
            .ok_or_else(|| Error::Internal("no block with nonzero augmentation".into()))?;
        let got = ot_criterion(&b.sub.algebra)?;
        Ok(Outcome::judge(got == truth, format!("{got} (one of {} blocks, dim {})", blocks.len(), b.sub.algebra.dim())))
    });
}

// ---------------------------------------------------------------------------
// socle derivations and the lower bound

fn c23_inequality(rec: &mut Recorder, inst: &Instance) {
    let e = &inst.entry;
    if e.is_p_group() {
        rec.check(&e.id, "A is local and symmetric", "local, symmetric", || {
            let a = inst.algebra()?;
            let local = is_local(a)?;
            let sym = is_symmetric(a)?;
            let ok = local && sym.is_symmetric();
            let computed = format!("local = {local}, symmetric = {}", sym.is_symmetric());
            Ok(match sym {
                Symmetry::Inconclusive { space_dim } => Outcome {
                    computed: format!("{computed} (form search inconclusive on {space_dim} dims)"),
                    status: Status::Inconclusive,
                    certificate: None,
                },
                Symmetry::Symmetric { lambda } => {
                    Outcome::judge(ok, computed).with_certificate(format!("lambda = {lambda:?}"))
                }
                Symmetry::NotSymmetric => Outcome::judge(false, computed),
            })
        });
        rec.check(&e.id, "dim J/J² ≤ dim soc_Z(HH¹(A))", "inequality holds", || {
            let a = inst.algebra()?;
            let h = inst.hh1()?;
            let top = radical_layers(a)?.first().copied().unwrap_or(0);
            let msoc = hh1_module_socle(a, h)?.dim();
            Ok(Outcome::judge(top <= msoc, format!("{top} ≤ {msoc}")))
        });
    } else if e.family == Family::Semidirect {
        rec.check(&e.id, "Σ_S dim Ext¹(S,S) ≤ dim soc_Z(HH¹(A))", "inequality holds", || {
            let a = inst.algebra()?;
            let h = inst.hh1()?;
            let ext = ext1_self_dims(a)?;
            let total: usize = ext.iter().sum();
            let msoc = hh1_module_socle(a, h)?.dim();
            Ok(Outcome::judge(total <= msoc, format!("{ext:?} sums to {total} ≤ {msoc}")))
        });
    } else {
        return;
    }
    rec.check(
        &e.id,
        "socle maps are derivations in soc_Z(Der(A)) and outer when nonzero",
        "every socle map verified",
        || socle_map_outcome(inst),
    );
}

fn socle_map_outcome(inst: &Instance) -> Result<Outcome> {
    let a = inst.algebra()?;
    let h = inst.hh1()?;
    let maps = socle_maps(a, h)?;
    // z·f = 0 on the nose for z ∈ J(Z(A)), which is membership in soc_Z(Der)
    let z = &h.center;
    let jz = radical(&z.algebra)?;
    for w in jz.space().vectors() {
        let lz = a.left_mul_matrix(&z.embed(w));
        for m in maps.space.matrices() {
            if !lz.mul(&m).is_zero() {
                return Ok(Outcome::judge(false, "a socle map is not annihilated by J(Z(A))"));
            }
        }
    }
    let top = radical_layers(a)?.first().copied().unwrap_or(0);
    let soc = socle(a)?.dim();
    let mut computed = format!("{} independent socle maps, none inner", maps.space.dim());
    let mut ok = true;
    if is_local(a)? {
        // for local A the maps are exactly Hom(J/J², soc(A))
        ok = maps.space.dim() == top * soc;
        computed = format!("{computed}; dim Hom(J/J², soc) = {}", top * soc);
    }
    Ok(Outcome::judge(ok, computed))
}

fn t12_lower_bound(rec: &mut Recorder, inst: &Instance) {
    let e = &inst.entry;
    if e.is_p_group() && e.dim > 1 {
        rec.check(&e.id, "dim HH¹(A) ≥ 2 for a block with one simple module and nontrivial defect group", "≥ 2", || {
            let h = inst.hh1()?;
            Ok(Outcome::judge(h.dim() >= 2, h.dim().to_string()))
        });
    }
    if let Some(GroupSpec::SemidirectCpCm { p, m, .. }) = e.group {
        if m + 1 == p && p >= 3 {
            rec.check(
                &e.id,
                "dim HH¹(k(P ⋊ E)) = 1 for P cyclic of order p ≥ 3 and E = Aut(P), so one simple module is needed for the bound",
                "1",
                || {
                    let h = inst.hh1()?;
                    Ok(Outcome::judge(h.dim() == 1, h.dim().to_string()))
                },
            );
        }
    }
}

fn w_iso(rec: &mut Recorder, inst: &Instance) {
    let e = &inst.entry;
    let Some(n) = e.elementary_rank() else {
        return;
    };
    let p = e.p;
    let expected = n as usize * (p as usize).pow(n);
    rec.check(&e.id, "dim HH¹(k(C_p)^n) = n·p^n", expected.to_string(), || {
        let h = inst.hh1()?;
        Ok(Outcome::judge(h.dim() == expected, h.dim().to_string()))
    });
    rec.check(&e.id, "x_i ↦ g_i − 1 carries W(n;1) isomorphically onto HH¹(kP)", "Lie algebra isomorphism", || {
        let a = inst.algebra()?;
        let h = inst.hh1()?;
        let iso = witt_isomorphism(a, h, n, p)?;
        let pairs = iso.dim * iso.dim.saturating_sub(1) / 2;
        Ok(Outcome::judge(true, format!("bijective, all {pairs} bracket pairs preserved"))
            .with_certificate(format!("W({n};1) over GF({p}), dim {}", iso.dim)))
    });
}

// ---------------------------------------------------------------------------
// the radical filtration

/// Depths in the flag `A ⊇ J ⊇ J² ⊇ … ⊇ J^N = 0`, read off coordinates in a
/// basis adapted to it.
struct RadicalFlag {
    n: usize,
    /// Inverse of the adapted basis.
    change: Matrix,
    adapted: Matrix,
    /// Depth of each adapted basis vector.
    depth: Vec<usize>,
    /// Basis of `J` as columns.
    jbasis: Matrix,
    powers: Vec<IdealSubspace>,
}

impl RadicalFlag {
    fn new(a: &AssocAlgebra) -> Result<Self> {
        let f = a.field();
        let d = a.dim();
        let n = nilpotency_index(a)?;
        let j = radical(a)?.clone();
        let mut powers = vec![IdealSubspace::whole(a)];
        for m in 1..n {
            powers.push(ideal_power(a, &j, m)?);
        }
        let mut ech = Echelon::new(f, d);
        let mut cols = Vec::with_capacity(d);
        let mut depth = Vec::with_capacity(d);
        for (m, pw) in powers.iter().enumerate().rev() {
            for v in pw.space().vectors() {
                if ech.insert(v.to_vec()) {
                    cols.push(v.to_vec());
                    depth.push(m);
                }
            }
        }
        let adapted = Matrix::from_columns(f, d, &cols)?;
        let change = adapted.inverse().ok_or_else(|| Error::Internal("adapted basis is singular".into()))?;
        let jcols: Vec<Vec<Scalar>> = j.space().vectors().map(|v| v.to_vec()).collect();
        let jbasis = if jcols.is_empty() { Matrix::zero(f, d, 0) } else { Matrix::from_columns(f, d, &jcols)? };
        Ok(RadicalFlag { n, change, adapted, depth, jbasis, powers })
    }

    /// Largest `m ≤ N` with `f(J) ⊆ J^m` (0 if `f(J) ⊄ J`).
    fn level(&self, m: &Matrix) -> usize {
        if self.jbasis.cols() == 0 {
            return self.n;
        }
        let img = self.change.mul(&m.mul(&self.jbasis));
        let mut lvl = self.n;
        for r in 0..img.rows() {
            if img.row(r).iter().any(|&x| x != 0) {
                lvl = lvl.min(self.depth[r]);
            }
        }
        lvl
    }

    /// Whether `m` maps every `J^i` into `J^{i+1}` (with `J^0 = A`).
    fn raises(&self, m: &Matrix) -> bool {
        let img = self.change.mul(&m.mul(&self.adapted));
        (0..img.rows()).all(|r| (0..img.cols()).all(|c| img.get(r, c) == 0 || self.depth[r] > self.depth[c]))
    }
}

/// `{f ∈ Der : f(J) ⊆ J^m}` by linear conditions in `Der` coordinates.
fn filtration_space(a: &AssocAlgebra, der: &DerivationSpace, flag: &RadicalFlag, m: usize) -> Result<DerivationSpace> {
    let f = a.field();
    let d = a.dim();
    let j = radical(a)?;
    let target = if m < flag.n { flag.powers[m].space().clone() } else { Subspace::zero(f, d) };
    let mats = der.matrices();
    let cols: Vec<Vec<Scalar>> = mats
        .iter()
        .map(|dm| j.space().vectors().flat_map(|v| target.reduce(&dm.mul_vec(v))).collect())
        .collect();
    let k = kernel_of_columns(f, mats.len(), &cols)?;
    let vs = k.vectors().map(|c| der.combine(c).into_data()).collect();
    DerivationSpace::from_subspace(f, d, Subspace::from_vectors(f, d * d, vs))
}

/// Dimensions of the lower central series of a matrix Lie algebra, stopping
/// at zero or when it stabilizes.
fn matrix_lower_central_series(f: PrimeField, d: usize, basis: &[Matrix]) -> Vec<usize> {
    let mut dims = vec![basis.len()];
    let mut current: Vec<Matrix> = basis.to_vec();
    while !current.is_empty() {
        let mut ech = Echelon::new(f, d * d);
        let mut next = Vec::new();
        for x in basis {
            for c in &current {
                let b = commutator(x, c);
                if ech.insert(b.data().to_vec()) {
                    next.push(b);
                }
            }
        }
        if next.len() == current.len() {
            break;
        }
        dims.push(next.len());
        current = next;
    }
    dims
}

fn p35_filtration(rec: &mut Recorder, inst: &Instance, seed: u64) {
    let id = inst.entry.id.clone();
    struct Ctx {
        flag: RadicalFlag,
        levels: Vec<DerivationSpace>,
        adapted: Vec<(usize, Matrix)>,
    }
    let ctx: OnceCell<Result<Ctx>> = OnceCell::new();
    let get = || -> Result<&Ctx> {
        ctx.get_or_init(|| {
            let a = inst.algebra()?;
            let h = inst.hh1()?;
            let flag = RadicalFlag::new(a)?;
            let levels: Vec<DerivationSpace> =
                der_filtration(a, &h.der, flag.n)?.into_iter().map(|l| l.space).collect();
            let d = a.dim();
            let mut ech = Echelon::new(a.field(), d * d);
            let mut adapted = Vec::new();
            for (i, lvl) in levels.iter().enumerate().rev() {
                for v in lvl.space().vectors() {
                    if ech.insert(v.to_vec()) {
                        adapted.push((i + 1, Matrix::from_data(a.field(), d, d, v.to_vec())?));
                    }
                }
            }
            Ok(Ctx { flag, levels, adapted })
        })
        .as_ref()
        .map_err(Clone::clone)
    };
    rec.check(&id, "Der_m computed by linear conditions agrees with the flag depth of its basis", "agreement", || {
        let a = inst.algebra()?;
        let h = inst.hh1()?;
        let c = get()?;
        for (m, lvl) in c.levels.iter().enumerate() {
            let own = filtration_space(a, &h.der, &c.flag, m + 1)?;
            if own.space() != lvl.space() {
                return Ok(Outcome::judge(false, format!("Der_{} differs between the two computations", m + 1)));
            }
        }
        for (l, x) in &c.adapted {
            if c.flag.level(x) != *l {
                return Ok(Outcome::judge(false, "an adapted basis element has the wrong depth"));
            }
        }
        let dims: Vec<usize> = c.levels.iter().map(|l| l.dim()).collect();
        Ok(Outcome::judge(true, format!("dims Der_1..Der_{} = {dims:?} (dim Der = {})", c.flag.n, h.der.dim())))
    });
    // one pass over adapted pairs serves (i)-(iii); bilinearity extends it to all pairs
    let pairs: OnceCell<Result<Vec<(usize, usize, usize)>>> = OnceCell::new();
    let get_pairs = || -> Result<&Vec<(usize, usize, usize)>> {
        pairs
            .get_or_init(|| {
                let c = get()?;
                let mut out = Vec::new();
                for x in 0..c.adapted.len() {
                    for y in x..c.adapted.len() {
                        let (lx, fx) = &c.adapted[x];
                        let (ly, fy) = &c.adapted[y];
                        out.push((*lx, *ly, c.flag.level(&commutator(fx, fy))));
                    }
                }
                Ok(out)
            })
            .as_ref()
            .map_err(Clone::clone)
    };
    let samples = |claim: &str, check: &dyn Fn(&Ctx, &mut ChaCha8Rng) -> bool| -> Result<usize> {
        let c = get()?;
        let mut rng = rng_for(seed, SuiteId::P35Filtration, &id, claim);
        Ok((0..RANDOM_SAMPLES).filter(|_| !check(c, &mut rng)).count())
    };
    let claim_i = "(i) [Der_m, Der_n] ⊆ Der_{m+n−1}";
    rec.check(&id, claim_i, "holds on all adapted basis pairs and random samples", || {
        let c = get()?;
        let n = c.flag.n;
        let bad = get_pairs()?.iter().filter(|(lx, ly, l)| *l < (lx + ly - 1).min(n)).count();
        let bad_random = samples(claim_i, &|c, rng| {
            let m = rng.gen_range(1..=n);
            let k = rng.gen_range(1..=n);
            let x = random_derivation(&c.levels[m - 1], rng);
            let y = random_derivation(&c.levels[k - 1], rng);
            c.levels[(m + k - 1).min(n) - 1].contains(&commutator(&x, &y))
        })?;
        Ok(pair_outcome(get_pairs()?.len(), bad, bad_random))
    });
    let claim_ii = "(ii) Der_1 is a Lie subalgebra of Der(A)";
    rec.check(&id, claim_ii, "closed under the bracket", || {
        let bad = get_pairs()?.iter().filter(|(_, _, l)| *l < 1).count();
        let bad_random = samples(claim_ii, &|c, rng| {
            let x = random_derivation(&c.levels[0], rng);
            let y = random_derivation(&c.levels[0], rng);
            c.levels[0].contains(&commutator(&x, &y))
        })?;
        Ok(pair_outcome(get_pairs()?.len(), bad, bad_random))
    });
    let claim_iii = "(iii) Der_m is an ideal in Der_1";
    rec.check(&id, claim_iii, "[Der_1, Der_m] ⊆ Der_m for all m", || {
        let n = get()?.flag.n;
        let bad = get_pairs()?.iter().filter(|(lx, ly, l)| *l < *lx.max(ly)).count();
        let bad_random = samples(claim_iii, &|c, rng| {
            let m = rng.gen_range(1..=n);
            let x = random_derivation(&c.levels[0], rng);
            let y = random_derivation(&c.levels[m - 1], rng);
            c.levels[m - 1].contains(&commutator(&x, &y))
        })?;
        Ok(pair_outcome(get_pairs()?.len(), bad, bad_random))
    });
    rec.check(&id, "(iv) Der_2 is a nilpotent Lie algebra", "nilpotent", || {
        let a = inst.algebra()?;
        let c = get()?;
        let der2 = if c.flag.n >= 2 { &c.levels[1] } else { &c.levels[0] };
        let basis = der2.matrices();
        if basis.iter().all(|m| c.flag.raises(m)) {
            return Ok(Outcome::judge(true, format!("dim Der_2 = {}; every element raises the radical flag", basis.len()))
                .with_certificate(format!("products of {} elements vanish", c.flag.n)));
        }
        let dims = matrix_lower_central_series(a.field(), a.dim(), &basis);
        let nilpotent = dims.last() == Some(&0);
        Ok(Outcome::judge(nilpotent, format!("lower central series dims {dims:?}")))
    });
}

fn pair_outcome(pairs: usize, bad: usize, bad_random: usize) -> Outcome {
    Outcome::judge(
        bad == 0 && bad_random == 0,
        format!("{pairs} adapted pairs ({bad} violations), {RANDOM_SAMPLES} random samples ({bad_random} violations)"),
    )
}

// ---------------------------------------------------------------------------
// lemmas

fn lemma_records(rec: &mut Recorder, inst: &Instance, seed: u64) {
    let id = inst.entry.id.clone();
    let sample_rng = |claim: &str| rng_for(seed, SuiteId::L31L34Lemmas, &id, claim);

    let claim = "Lemma: every derivation maps Z(A) into Z(A)";
    let mut rng = sample_rng(claim);
    rec.check(&id, claim, "f(z) ∈ Z(A) for all basis pairs and random samples", || {
        let h = inst.hh1()?;
        let z = &h.center;
        let ders = h.der.matrices();
        let mut bad = 0;
        for m in &ders {
            for zv in z.space.vectors() {
                if !z.space.contains(&m.mul_vec(zv)) {
                    bad += 1;
                }
            }
        }
        let mut bad_random = 0;
        for _ in 0..RANDOM_SAMPLES {
            let m = random_derivation(&h.der, &mut rng);
            let zv = random_in(&z.space, &mut rng);
            if !z.space.contains(&m.mul_vec(&zv)) {
                bad_random += 1;
            }
        }
        Ok(Outcome::judge(
            bad == 0 && bad_random == 0,
            format!("{} basis pairs ({bad} violations), {RANDOM_SAMPLES} random ({bad_random} violations)", ders.len() * z.space.dim()),
        ))
    });

    rec.check(&id, "Lemma: restriction to Z(A) is a Lie homomorphism HH¹(A) → HH¹(Z(A))", "homomorphism", || {
        let a = inst.algebra()?;
        let h = inst.hh1()?;
        let r = restrict_to_center(a, h)?;
        Ok(Outcome::judge(
            true,
            format!("dim HH¹(Z) = {}, kernel dim {}, brackets preserved on all basis pairs", r.target.dim(), r.kernel.dim()),
        ))
    });

    let claim = "HH¹ bracket is independent of coset representatives";
    let mut rng = sample_rng(claim);
    rec.check(&id, claim, "random inner perturbations leave brackets unchanged", || {
        let a = inst.algebra()?;
        let h = inst.hh1()?;
        if h.dim() == 0 {
            return Ok(Outcome::judge(true, "HH¹ = 0"));
        }
        let f = a.field();
        let mut bad = 0;
        for _ in 0..RANDOM_SAMPLES {
            let u = random_vector(f, h.dim(), &mut rng);
            let v = random_vector(f, h.dim(), &mut rng);
            let x = h.lift(&u).add(&inner_derivation(a, &random_vector(f, a.dim(), &mut rng)));
            let y = h.lift(&v).add(&inner_derivation(a, &random_vector(f, a.dim(), &mut rng)));
            if h.coordinates(&commutator(&x, &y)) != Some(h.lie.bracket(&u, &v)) {
                bad += 1;
            }
        }
        Ok(Outcome::judge(bad == 0, format!("{RANDOM_SAMPLES} random samples ({bad} violations)")))
    });

    let local_symmetric = || -> Result<bool> {
        let a = inst.algebra()?;
        Ok(is_local(a)? && is_symmetric(a)?.is_symmetric())
    };
    match local_symmetric() {
        Ok(true) => {
            let ot = inst.algebra().and_then(ot_criterion);
            if let Ok(false) = ot {
                rec.check(
                    &id,
                    "Lemma: for local symmetric A with J(Z(A))A ≠ J(A), HH¹(A) → HH¹(Z(A)) is not injective",
                    "nonzero kernel",
                    || {
                        let a = inst.algebra()?;
                        let r = restrict_to_center(a, inst.hh1()?)?;
                        Ok(Outcome::judge(!r.kernel.is_zero(), format!("kernel dim {}", r.kernel.dim())))
                    },
                );
            }
            let claim = "Lemma: for local symmetric A, derivations vanishing on Z(A) preserve J(A)";
            let mut rng = sample_rng(claim);
            rec.check(&id, claim, "f(J) ⊆ J on all basis pairs and random samples", || {
                let a = inst.algebra()?;
                let h = inst.hh1()?;
                let f = a.field();
                let z = &h.center;
                let j = radical(a)?;
                let ders = h.der.matrices();
                let cols: Vec<Vec<Scalar>> =
                    ders.iter().map(|m| z.space.vectors().flat_map(|zv| m.mul_vec(zv)).collect()).collect();
                let k = kernel_of_columns(f, ders.len(), &cols)?;
                let kmats: Vec<Matrix> = k.vectors().map(|c| h.der.combine(c)).collect();
                let mut bad = 0;
                for m in &kmats {
                    for v in j.space().vectors() {
                        if !j.contains(&m.mul_vec(v)) {
                            bad += 1;
                        }
                    }
                }
                let mut bad_random = 0;
                for _ in 0..RANDOM_SAMPLES {
                    let c = random_vector(f, k.dim(), &mut rng);
                    let m = h.der.combine(&k.combine(&c));
                    let x = random_in(j.space(), &mut rng);
                    if !j.contains(&m.mul_vec(&x)) {
                        bad_random += 1;
                    }
                }
                Ok(Outcome::judge(
                    bad == 0 && bad_random == 0,
                    format!(
                        "dim {{f : f(Z) = 0}} = {}; {} basis pairs ({bad} violations), {RANDOM_SAMPLES} random ({bad_random} violations)",
                        k.dim(),
                        kmats.len() * j.dim()
                    ),
                ))
            });
        }
        Ok(false) => {}
        Err(e) => {
            rec.check(&id, "Lemma preconditions: local and symmetric", "decided", || Err(e));
        }
    }

    let claim = "Lemma: f(J) ⊆ J implies f(J^n) ⊆ J^n for all n";
    let mut rng = sample_rng(claim);
    rec.check(&id, claim, "holds for every n below the nilpotency index", || {
        let a = inst.algebra()?;
        let h = inst.hh1()?;
        let flag = RadicalFlag::new(a)?;
        let der1 = filtration_space(a, &h.der, &flag, 1)?;
        let mats = der1.matrices();
        let mut bad = 0;
        let mut pairs = 0;
        for pw in flag.powers.iter().skip(1) {
            for m in &mats {
                for v in pw.space().vectors() {
                    pairs += 1;
                    if !pw.contains(&m.mul_vec(v)) {
                        bad += 1;
                    }
                }
            }
        }
        let mut bad_random = 0;
        if flag.n > 1 {
            for _ in 0..RANDOM_SAMPLES {
                let n = rng.gen_range(1..flag.n);
                let m = random_derivation(&der1, &mut rng);
                let x = random_in(flag.powers[n].space(), &mut rng);
                if !flag.powers[n].contains(&m.mul_vec(&x)) {
                    bad_random += 1;
                }
            }
        }
        Ok(Outcome::judge(
            bad == 0 && bad_random == 0,
            format!("dim Der_1 = {}; {pairs} basis pairs ({bad} violations), {RANDOM_SAMPLES} random ({bad_random} violations)", der1.dim()),
        ))
    });

    let claim = "Lemma: f(J) ⊆ J^m and g(J) ⊆ J^n imply [f,g](J) ⊆ J^{m+n−1}";
    let mut rng = sample_rng(claim);
    rec.check(&id, claim, "holds on random samples from each Der_m", || {
        let a = inst.algebra()?;
        let h = inst.hh1()?;
        let flag = RadicalFlag::new(a)?;
        let n = flag.n;
        let levels = (1..=n).map(|m| filtration_space(a, &h.der, &flag, m)).collect::<Result<Vec<_>>>()?;
        let mut bad = 0;
        for _ in 0..RANDOM_SAMPLES {
            let m = rng.gen_range(1..=n);
            let k = rng.gen_range(1..=n);
            let x = random_derivation(&levels[m - 1], &mut rng);
            let y = random_derivation(&levels[k - 1], &mut rng);
            if flag.level(&commutator(&x, &y)) < (m + k - 1).min(n) {
                bad += 1;
            }
        }
        Ok(Outcome::judge(bad == 0, format!("{RANDOM_SAMPLES} random samples ({bad} violations)")))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::derivations;

    fn cfg(suites: Vec<SuiteId>, max: usize, primes: Vec<u32>) -> SuiteConfig {
        SuiteConfig { suites, max_group_order: max, primes, ..SuiteConfig::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in SuiteId::ALL {
            assert_eq!(s.as_str().parse::<SuiteId>().unwrap(), s);
        }
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("T3".parse::<SuiteId>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::default().validate().is_ok());
        assert!(SuiteConfig { suites: vec![], ..SuiteConfig::default() }.validate().is_err());
        assert!(SuiteConfig { primes: vec![4], ..SuiteConfig::default() }.validate().is_err());
        assert!(SuiteConfig { max_group_order: 128, ..SuiteConfig::default() }.validate().is_err());
    }

    #[test]
    fn catalog_at_order_nine() {
        let ids: Vec<String> = catalog(&cfg(SuiteId::ALL.to_vec(), 9, vec![2, 3])).unwrap().into_iter().map(|e| e.id).collect();
        assert_eq!(
            ids,
            [
                "k[C2]/GF(2)",
                "k[C2^2]/GF(2)",
                "k[C4]/GF(2)",
                "k[C2^3]/GF(2)",
                "k[C4xC2]/GF(2)",
                "k[C8]/GF(2)",
                "k[D8]/GF(2)",
                "k[Q8]/GF(2)",
                "k[x1,x2]/(x1^3,x2^3)/GF(2)",
                "k[C3]/GF(3)",
                "k[C3:C2(d=2)]/GF(3)",
                "k[C3^2]/GF(3)",
                "k[C9]/GF(3)",
            ]
        );
    }

    #[test]
    fn partitions_of_four() {
        assert_eq!(partitions(4, 4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let c = cfg(SuiteId::ALL.to_vec(), 8, vec![2, 3]);
        let r1 = run_suite(&c).unwrap();
        let failing: Vec<&CheckRecord> = r1.records.iter().filter(|r| r.status != Status::Pass).collect();
        assert!(failing.is_empty(), "{failing:#?}");
        let r2 = run_suite(&c).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.records.iter().all(|r| r.timing_ms.is_none()));
    }

    #[test]
    fn ot_suite_labels() {
        let recs = ot_suite(&cfg(vec![SuiteId::OtCriterion], 8, vec![2, 3])).unwrap();
        let get = |id: &str| recs.iter().find(|r| r.algebra == id).unwrap();
        assert_eq!(get("k[D8]/GF(2)").computed, "false");
        assert_eq!(get("k[C4xC2]/GF(2)").computed, "true");
        assert!(get("B0(k[C3:C2(d=2)]/GF(3))").computed.starts_with("false"));
        assert!(recs.iter().all(|r| r.pass));
    }

    #[test]
    fn lemma_suite_on_truncated_polynomials() {
        let a = truncated_polynomial_algebra(PrimeField::new(7).unwrap(), 1, 7).unwrap();
        let recs = lemma_suite(&a, "k[t]/(t^7)", 0);
        assert!(recs.len() >= 6);
        assert!(recs.iter().all(|r| r.pass), "{recs:#?}");
    }

    #[test]
    fn derivation_two_of_a_matrix_algebra_is_not_nilpotent() {
        // M_2(k) has J = 0, so every level of the filtration is Der = ad(M_2)
        let f = PrimeField::new(3).unwrap();
        let mut prods = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    prods.push((2 * i + j, 2 * j + l, 2 * i + l, 1));
                }
            }
        }
        let labels = ["e11", "e12", "e21", "e22"].map(String::from).to_vec();
        let a = AssocAlgebra::new(f, 4, prods, vec![1, 0, 0, 1], labels, Default::default()).unwrap();
        let der = derivations(&a).unwrap();
        assert_eq!(der.dim(), 3);
        let dims = matrix_lower_central_series(f, 4, &der.matrices());
        assert_eq!(dims, vec![3]);
    }
}
