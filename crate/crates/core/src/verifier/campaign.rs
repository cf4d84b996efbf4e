//! Verification campaigns over populations of multisets.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{partitions, Subset};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, conjugacy_class, d_class, inverse_j_class, shifted_shuffle, PermMultiset};
use crate::qsym::{classify_q, Basis, GradedVector};
use crate::tableau::{knuth_class, standard_tableaux};

use super::kernel::{cond, Kernel};
use super::{check_er_conjecture, check_theorem, MAX_CHECK_DEGREE};

/// Exhaustive subset enumeration covers `2^{n!}` sets; beyond `n = 4` that is infeasible.
pub const EXHAUSTIVE_MAX_DEGREE: usize = 4;
const FINDINGS_CAP: usize = 50;
const SPECIMEN_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ExhaustiveSubsets,
    RandomMultisets,
    Structured,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "exhaustive_subsets" | "exhaustive" => Ok(Mode::ExhaustiveSubsets),
            "random_multisets" | "random" => Ok(Mode::RandomMultisets),
            "structured" => Ok(Mode::Structured),
            _ => Err(Error::InvalidConfig(format!("unknown mode {s:?}"))),
        }
    }
}

fn default_max_multiplicity() -> u64 {
    1
}

fn default_crosscheck() -> usize {
    100
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub degree: usize,
    pub mode: Mode,
    /// Number of random multisets; ignored by the other modes.
    #[serde(default)]
    pub samples: usize,
    #[serde(default = "default_max_multiplicity")]
    pub max_multiplicity: u64,
    #[serde(default)]
    pub seed: Option<u64>,
    /// How many instances to re-run through the generic checkers.
    #[serde(default = "default_crosscheck")]
    pub crosscheck: usize,
}

impl CampaignConfig {
    pub fn new(degree: usize, mode: Mode) -> Self {
        CampaignConfig {
            degree,
            mode,
            samples: 0,
            max_multiplicity: default_max_multiplicity(),
            seed: None,
            crosscheck: default_crosscheck(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.degree;
        if n == 0 {
            return Err(Error::InvalidConfig("degree must be positive".into()));
        }
        if n > MAX_CHECK_DEGREE {
            return Err(Error::Infeasible(format!(
                "condition checks are limited to degree {MAX_CHECK_DEGREE}, got {n}"
            )));
        }
        match self.mode {
            Mode::ExhaustiveSubsets if n > EXHAUSTIVE_MAX_DEGREE => Err(Error::Infeasible(format!(
                "exhaustive enumeration of subsets of S_{n} means 2^{} sets; the limit is degree {EXHAUSTIVE_MAX_DEGREE}",
                crate::combinat::factorial(n)
            ))),
            Mode::RandomMultisets if self.seed.is_none() => {
                Err(Error::InvalidConfig("random mode requires a seed".into()))
            }
            Mode::RandomMultisets if self.samples == 0 => {
                Err(Error::InvalidConfig("random mode requires a positive sample count".into()))
            }
            Mode::RandomMultisets if self.max_multiplicity == 0 => {
                Err(Error::InvalidConfig("max multiplicity must be positive".into()))
            }
            _ => Ok(()),
        }
    }
}

/// One recorded multiset with its condition flags (`T`/`F` per entry of
/// [`CampaignReport::flag_names`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub multiset: String,
    pub flags: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Population {
    pub instances: u64,
    pub symmetric: u64,
    pub fine: u64,
    pub symmetric_not_fine: u64,
    pub families: BTreeMap<String, u64>,
}

/// `matrix[i][j]` counts instances on which conditions `i` and `j` agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub conditions: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
    pub patterns: BTreeMap<String, u64>,
    pub all_agree: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violations {
    pub disagreements: u64,
    pub closure: u64,
    pub er_on_fine: u64,
    pub crosscheck_mismatches: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specimens {
    pub symmetric_not_fine: Vec<Finding>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossChecks {
    pub checked: u64,
    pub mismatches: Vec<Finding>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub flag_names: Vec<String>,
    pub population: Population,
    pub agreement: Agreement,
    pub violations: Violations,
    pub disagreements: Vec<Finding>,
    pub specimens: Specimens,
    pub closure_violations: Vec<Finding>,
    pub er_violations: Vec<Finding>,
    pub crosschecks: CrossChecks,
    pub seed: Option<u64>,
    pub wall_time_secs: f64,
}

impl CampaignReport {
    /// No five-way disagreement and no cross-check mismatch.
    pub fn consistent(&self) -> bool {
        self.violations.disagreements == 0 && self.violations.crosscheck_mismatches == 0
    }
}

/// Canonical order of instances: by size, then by the sorted `(rank, multiplicity)` list.
type Key = (u64, Vec<(usize, u64)>);

#[derive(Default)]
struct Capped {
    cap: usize,
    count: u64,
    items: Vec<(Key, Finding)>,
}

impl Capped {
    fn new(cap: usize) -> Self {
        Capped {
            cap,
            ..Default::default()
        }
    }

    fn push(&mut self, key: Key, f: Finding) {
        self.count += 1;
        self.items.push((key, f));
        if self.items.len() > 2 * self.cap {
            self.trim();
        }
    }

    fn trim(&mut self) {
        self.items.sort_by(|a, b| a.0.cmp(&b.0));
        self.items.truncate(self.cap);
    }

    fn merge(mut self, other: Capped) -> Capped {
        self.count += other.count;
        self.items.extend(other.items);
        self.trim();
        self
    }

    fn finish(mut self) -> Vec<Finding> {
        self.trim();
        self.items.into_iter().map(|(_, f)| f).collect()
    }
}

struct Acc {
    population: Population,
    patterns: [u64; 32],
    disagreements: Capped,
    specimens: Capped,
    closure: Capped,
    er: Capped,
    crosschecked: u64,
    mismatches: Capped,
    symmetric_masks: Vec<u64>,
}

impl Acc {
    fn new() -> Self {
        Acc {
            population: Population::default(),
            patterns: [0; 32],
            disagreements: Capped::new(FINDINGS_CAP),
            specimens: Capped::new(SPECIMEN_CAP),
            closure: Capped::new(FINDINGS_CAP),
            er: Capped::new(FINDINGS_CAP),
            crosschecked: 0,
            mismatches: Capped::new(FINDINGS_CAP),
            symmetric_masks: Vec::new(),
        }
    }

    fn merge(mut self, o: Acc) -> Acc {
        let p = &mut self.population;
        p.instances += o.population.instances;
        p.symmetric += o.population.symmetric;
        p.fine += o.population.fine;
        p.symmetric_not_fine += o.population.symmetric_not_fine;
        for (k, v) in o.population.families {
            *p.families.entry(k).or_default() += v;
        }
        for (a, b) in self.patterns.iter_mut().zip(o.patterns) {
            *a += b;
        }
        self.disagreements = self.disagreements.merge(o.disagreements);
        self.specimens = self.specimens.merge(o.specimens);
        self.closure = self.closure.merge(o.closure);
        self.er = self.er.merge(o.er);
        self.crosschecked += o.crosschecked;
        self.mismatches = self.mismatches.merge(o.mismatches);
        self.symmetric_masks.extend(o.symmetric_masks);
        self
    }
}

fn flag_string(flags: &[bool]) -> String {
    flags.iter().map(|&f| if f { 'T' } else { 'F' }).collect()
}

/// Caches Schur positivity by descent histogram.
struct FineCache {
    n: usize,
    map: HashMap<Vec<i64>, bool>,
}

impl FineCache {
    fn new(n: usize) -> Self {
        FineCache { n, map: HashMap::new() }
    }

    fn is_fine(&mut self, hist: &[i64]) -> bool {
        if let Some(&f) = self.map.get(hist) {
            return f;
        }
        let mut q = GradedVector::zero(self.n, Basis::Fundamental);
        for (bits, &c) in hist.iter().enumerate() {
            if c != 0 {
                q.add_term(&Subset::from_bits(bits as u64).composition(self.n), BigInt::from(c))
                    .expect("valid composition");
            }
        }
        let fine = classify_q(&q).expect("F-expansion").is_fine();
        self.map.insert(hist.to_vec(), fine);
        fine
    }
}

struct Recorder<'k> {
    kernel: &'k Kernel,
    fine_cache: FineCache,
    acc: Acc,
}

impl<'k> Recorder<'k> {
    fn new(kernel: &'k Kernel) -> Self {
        Recorder {
            kernel,
            fine_cache: FineCache::new(kernel.degree()),
            acc: Acc::new(),
        }
    }

    fn to_multiset(&self, support: &[(usize, u64)]) -> PermMultiset {
        let mut b = PermMultiset::new(self.kernel.degree());
        for &(r, m) in support {
            b.insert(self.kernel.perms()[r].clone(), m).expect("same degree");
        }
        b
    }

    /// Records one instance. `support` is only materialized for findings.
    fn record(
        &mut self,
        flags: [bool; cond::COUNT],
        hist: &[i64],
        support: impl Fn() -> Vec<(usize, u64)>,
        family: Option<&str>,
        crosscheck: bool,
    ) -> Result<bool> {
        let acc = &mut self.acc;
        acc.population.instances += 1;
        if let Some(f) = family {
            *acc.population.families.entry(f.to_string()).or_default() += 1;
        }
        let theorem = &flags[..5];
        let pattern = theorem.iter().enumerate().fold(0, |m, (i, &f)| m | (usize::from(f) << i));
        acc.patterns[pattern] += 1;
        let symmetric = flags[cond::E];
        let fine = symmetric && self.fine_cache.is_fine(hist);
        let acc = &mut self.acc;
        if symmetric {
            acc.population.symmetric += 1;
            if fine {
                acc.population.fine += 1;
            } else {
                acc.population.symmetric_not_fine += 1;
            }
        }
        let disagree = theorem.iter().any(|&f| f != theorem[0]);
        let closure_bad = symmetric && !(flags[cond::CLOSURE_RIGHT] && flags[cond::CLOSURE_LEFT]);
        let er_bad = fine && !flags[cond::ER];
        let specimen = symmetric && !fine;
        if disagree || closure_bad || er_bad || specimen || crosscheck {
            let sup = support();
            let key: Key = (sup.iter().map(|x| x.1).sum(), sup.clone());
            let b = self.to_multiset(&sup);
            let finding = Finding {
                multiset: b.to_string(),
                flags: flag_string(&flags),
                family: family.map(str::to_string),
            };
            let acc = &mut self.acc;
            if disagree {
                acc.disagreements.push(key.clone(), finding.clone());
            }
            if closure_bad {
                acc.closure.push(key.clone(), finding.clone());
            }
            if er_bad {
                acc.er.push(key.clone(), finding.clone());
            }
            if specimen {
                acc.specimens.push(key.clone(), finding.clone());
            }
            if crosscheck {
                self.acc.crosschecked += 1;
                let generic = check_theorem(&b)?;
                let er = check_er_conjecture(&b)?;
                if generic.flags() != theorem || er.holds != flags[cond::ER] {
                    let mut f = finding;
                    let mut g = generic.flags().to_vec();
                    g.push(er.holds);
                    f.flags = format!("{} vs generic {}", f.flags, flag_string(&g));
                    self.acc.mismatches.push(key, f);
                }
            }
        }
        Ok(symmetric)
    }
}

fn finish(cfg: &CampaignConfig, acc: Acc, start: Instant) -> CampaignReport {
    let names: Vec<String> = cond::NAMES[..5].iter().map(|s| s.to_string()).collect();
    let mut matrix = vec![vec![0u64; 5]; 5];
    let mut patterns = BTreeMap::new();
    let mut all_agree = 0;
    for (mask, &count) in acc.patterns.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let flags: Vec<bool> = (0..5).map(|i| mask >> i & 1 == 1).collect();
        patterns.insert(flag_string(&flags), count);
        if mask == 0 || mask == 31 {
            all_agree += count;
        }
        for i in 0..5 {
            for j in 0..5 {
                if flags[i] == flags[j] {
                    matrix[i][j] += count;
                }
            }
        }
    }
    let violations = Violations {
        disagreements: acc.disagreements.count,
        closure: acc.closure.count,
        er_on_fine: acc.er.count,
        crosscheck_mismatches: acc.mismatches.count,
    };
    CampaignReport {
        config: cfg.clone(),
        flag_names: cond::NAMES.iter().map(|s| s.to_string()).collect(),
        population: acc.population,
        agreement: Agreement {
            conditions: names,
            matrix,
            patterns,
            all_agree,
        },
        violations,
        disagreements: acc.disagreements.finish(),
        specimens: Specimens {
            symmetric_not_fine: acc.specimens.finish(),
        },
        closure_violations: acc.closure.finish(),
        er_violations: acc.er.finish(),
        crosschecks: CrossChecks {
            checked: acc.crosschecked,
            mismatches: acc.mismatches.finish(),
        },
        seed: cfg.seed,
        wall_time_secs: start.elapsed().as_secs_f64(),
    }
}

/// Outcome of an exhaustive sweep: the report and, if requested, every
/// symmetric subset as a bitmask over lexicographic permutation ranks.
pub struct SweepOutcome {
    pub report: CampaignReport,
    pub symmetric_masks: Vec<u64>,
}

/// Runs a campaign as configured.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    match cfg.mode {
        Mode::ExhaustiveSubsets => Ok(exhaustive_sweep(cfg, false)?.report),
        Mode::RandomMultisets => random_campaign(cfg),
        Mode::Structured => structured_campaign(cfg),
    }
}

/// Every subset of `S_n`, visited in Gray-code order inside fixed high-bit chunks.
pub fn exhaustive_sweep(cfg: &CampaignConfig, collect_symmetric: bool) -> Result<SweepOutcome> {
    cfg.validate()?;
    if cfg.mode != Mode::ExhaustiveSubsets {
        return Err(Error::InvalidConfig("exhaustive sweep needs exhaustive mode".into()));
    }
    let start = Instant::now();
    let kernel = Kernel::new(cfg.degree)?;
    let m = kernel.perms().len();
    let low = m.min(20);
    let high = m - low;
    let total = 1u64 << m;
    let stride = (total / cfg.crosscheck.max(1) as u64).max(1);
    let accs = (0..1u64 << high)
        .into_par_iter()
        .map(|chunk| -> Result<Acc> {
            let mut rec = Recorder::new(&kernel);
            let mut tally = kernel.tally();
            let base = chunk << low;
            for r in low..m {
                if base >> r & 1 == 1 {
                    tally.add(r, 1);
                }
            }
            let mut mask = base;
            for i in 0u64..1 << low {
                if i > 0 {
                    let bit = i.trailing_zeros() as usize;
                    let sign = if mask >> bit & 1 == 1 { -1 } else { 1 };
                    tally.add(bit, sign);
                    mask ^= 1 << bit;
                }
                let support = || (0..m).filter(|r| mask >> r & 1 == 1).map(|r| (r, 1)).collect();
                let symmetric = rec.record(tally.flags(), tally.histogram(), support, None, mask % stride == 0)?;
                if symmetric && collect_symmetric {
                    rec.acc.symmetric_masks.push(mask);
                }
            }
            Ok(rec.acc)
        })
        .collect::<Result<Vec<Acc>>>()?;
    let acc = accs.into_iter().fold(Acc::new(), Acc::merge);
    let mut masks = acc.symmetric_masks.clone();
    masks.sort_unstable();
    Ok(SweepOutcome {
        report: finish(cfg, acc, start),
        symmetric_masks: masks,
    })
}

/// Multiset with support drawn uniformly without replacement and
/// multiplicities uniform on `[1, max]`; sample `i` uses stream `i` of the seed.
pub fn random_support(n_perms: usize, max_mult: u64, seed: u64, i: u64) -> Vec<(usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let k = rng.random_range(1..=n_perms);
    let mut ranks = rand::seq::index::sample(&mut rng, n_perms, k).into_vec();
    ranks.sort_unstable();
    ranks
        .into_iter()
        .map(|r| (r, rng.random_range(1..=max_mult)))
        .collect()
}

fn random_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    let kernel = Kernel::new(cfg.degree)?;
    let seed = cfg.seed.expect("validated");
    let m = kernel.perms().len();
    let stride = (cfg.samples / cfg.crosscheck.max(1)).max(1);
    let acc = (0..cfg.samples)
        .into_par_iter()
        .fold(
            || Ok(Recorder::new(&kernel)),
            |rec: Result<Recorder>, i| {
                let mut rec = rec?;
                let support = random_support(m, cfg.max_multiplicity, seed, i as u64);
                let mut tally = kernel.tally();
                for &(r, c) in &support {
                    tally.add(r, c as i64);
                }
                rec.record(tally.flags(), tally.histogram(), || support.clone(), None, i % stride == 0)?;
                Ok(rec)
            },
        )
        .map(|r| r.map(|r| r.acc))
        .collect::<Result<Vec<Acc>>>()?
        .into_iter()
        .fold(Acc::new(), Acc::merge);
    Ok(finish(cfg, acc, start))
}

/// The structured families of degree `n`, labelled, in a fixed order.
pub fn structured_families(n: usize) -> Result<Vec<(String, PermMultiset)>> {
    let mut out = Vec::new();
    for lambda in partitions(n) {
        for t in standard_tableaux(&lambda) {
            let label = format!("knuth {t:?}");
            out.push((label, PermMultiset::from_perms(n, knuth_class(&t).iter().cloned())?));
        }
    }
    for lambda in partitions(n) {
        out.push((format!("conjugacy {lambda}"), PermMultiset::from_perms(n, conjugacy_class(n, &lambda)?)?));
    }
    for j in Subset::all(n) {
        out.push((format!("j_class {j}"), PermMultiset::from_perms(n, inverse_j_class(n, j)?)?));
    }
    for j in Subset::all(n) {
        let class = d_class(n, j)?;
        if !class.is_empty() {
            out.push((format!("d_class {j}"), PermMultiset::from_perms(n, class)?));
        }
    }
    for a in 1..n {
        for pi in all_permutations(a) {
            for tau in all_permutations(n - a) {
                out.push((
                    format!("shifted_shuffle {pi} {tau}"),
                    PermMultiset::from_perms(n, shifted_shuffle(&pi, &tau))?,
                ));
            }
        }
    }
    Ok(out)
}

fn structured_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    let kernel = Kernel::new(cfg.degree)?;
    let families = structured_families(cfg.degree)?;
    let stride = (families.len() / cfg.crosscheck.max(1)).max(1);
    let acc = families
        .par_iter()
        .enumerate()
        .fold(
            || Ok(Recorder::new(&kernel)),
            |rec: Result<Recorder>, (i, (label, b))| {
                let mut rec = rec?;
                let support: Vec<(usize, u64)> = b.iter().map(|(p, m)| (kernel.rank(p).expect("degree"), m)).collect();
                let mut tally = kernel.tally();
                for &(r, c) in &support {
                    tally.add(r, c as i64);
                }
                let kind = label.split(' ').next().unwrap_or("");
                rec.record(tally.flags(), tally.histogram(), || support.clone(), Some(kind), i % stride == 0)?;
                Ok(rec)
            },
        )
        .map(|r| r.map(|r| r.acc))
        .collect::<Result<Vec<Acc>>>()?
        .into_iter()
        .fold(Acc::new(), Acc::merge);
    Ok(finish(cfg, acc, start))
}

/// Materializes a subset bitmask over lexicographic ranks of `S_n`.
pub fn mask_to_multiset(n: usize, mask: u64) -> PermMultiset {
    let perms = all_permutations(n);
    PermMultiset::from_perms(
        n,
        perms.into_iter().enumerate().filter(|(r, _)| mask >> r & 1 == 1).map(|(_, p)| p),
    )
    .expect("same degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip_time(mut r: CampaignReport) -> CampaignReport {
        r.wall_time_secs = 0.0;
        r
    }

    #[test]
    fn config_bounds() {
        assert!(matches!(
            CampaignConfig::new(5, Mode::ExhaustiveSubsets).validate(),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            CampaignConfig::new(7, Mode::Structured).validate(),
            Err(Error::Infeasible(_))
        ));
        let mut cfg = CampaignConfig::new(5, Mode::RandomMultisets);
        cfg.samples = 10;
        assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        cfg.seed = Some(1);
        assert!(cfg.validate().is_ok());
        assert_eq!("random".parse::<Mode>().unwrap(), Mode::RandomMultisets);
    }

    #[test]
    fn exhaustive_s3() {
        let cfg = CampaignConfig::new(3, Mode::ExhaustiveSubsets);
        let out = exhaustive_sweep(&cfg, true).unwrap();
        let r = &out.report;
        assert_eq!(r.population.instances, 64);
        assert_eq!(r.agreement.all_agree, 64);
        assert!(r.consistent());
        assert_eq!(r.crosschecks.checked, 64);
        assert_eq!(out.symmetric_masks.len() as u64, r.population.symmetric);
        for &mask in &out.symmetric_masks {
            let b = mask_to_multiset(3, mask);
            assert!(crate::verifier::check_e_symmetric(&b).unwrap().holds);
        }
    }

    #[test]
    fn random_is_reproducible() {
        let mut cfg = CampaignConfig::new(4, Mode::RandomMultisets);
        cfg.samples = 200;
        cfg.max_multiplicity = 3;
        cfg.seed = Some(42);
        cfg.crosscheck = 20;
        let a = strip_time(run_campaign(&cfg).unwrap());
        let b = strip_time(run_campaign(&cfg).unwrap());
        assert_eq!(a, b);
        assert!(a.consistent());
        assert_eq!(a.population.instances, 200);
        assert_eq!(random_support(24, 3, 42, 5), random_support(24, 3, 42, 5));
        assert_ne!(random_support(24, 3, 42, 5), random_support(24, 3, 42, 6));
    }

    #[test]
    fn structured_s4() {
        let mut cfg = CampaignConfig::new(4, Mode::Structured);
        cfg.crosscheck = 1000;
        let r = run_campaign(&cfg).unwrap();
        assert!(r.consistent());
        assert_eq!(r.violations.closure, 0);
        assert_eq!(r.violations.er_on_fine, 0);
        assert_eq!(r.population.families["knuth"], 10);
        assert_eq!(r.population.families["conjugacy"], 5);
        assert_eq!(r.population.instances, r.crosschecks.checked);
    }

    #[test]
    fn report_json_fields() {
        let cfg = CampaignConfig::new(2, Mode::ExhaustiveSubsets);
        let js = serde_json::to_value(run_campaign(&cfg).unwrap()).unwrap();
        for key in ["config", "population", "agreement", "disagreements", "specimens", "seed", "wall_time_secs"] {
            assert!(js.get(key).is_some(), "{key}");
        }
        assert!(js["specimens"]["symmetric_not_fine"].is_array());
    }
}
