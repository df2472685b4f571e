//! Classification by repeated building-up.
//!
//! Every class at length ℓ is extended with every admissible witness, and
//! the resulting expansions are deduplicated up to equivalence over F_q:
//! identical generator matrices first, then fingerprints, then an exact
//! equivalence test against the representatives sharing the fingerprint.
//!
//! [`enumerate_via_crt`] is an independent enumeration that splits R into
//! F_q ⊕ K and combines all self-dual components directly.

use crate::analysis::{self, low_weight_words, AnalysisOptions, MatchReport, WeightEnum};
use crate::buildup::{self, ExtensionWitness};
use crate::equiv::{self, CodeFingerprint, EquivOptions, Prepared};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec, ResidueClass};
use crate::packed::{self, with_word, Word};
use crate::qc::{self, FieldCode};
use crate::rcode::RingCode;
use crate::ring::{RingElem, RingSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

const BATCH: usize = 4096;

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub equiv: EquivOptions,
    pub workers: Option<usize>,
    /// Keep only final-length classes with at least this minimum distance.
    pub min_distance: Option<usize>,
    /// Work allowed per level: candidate witnesses tried, and |R|^ℓ for the scan.
    pub budget: u128,
    /// Run even when completeness is not guaranteed.
    pub constructive: bool,
    /// Write the manifest here after every completed level.
    pub checkpoint: Option<PathBuf>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            equiv: EquivOptions::default(),
            workers: None,
            min_distance: None,
            budget: 1 << 32,
            constructive: false,
            checkpoint: None,
        }
    }
}

/// How a class was reached: seed number, then witnesses in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail {
    pub seed: usize,
    pub steps: Vec<ExtensionWitness>,
}

impl Trail {
    pub fn replay(&self, spec: &RingSpec) -> Result<RingCode> {
        let seeds = buildup::seed(spec)?;
        let mut code = seeds
            .get(self.seed)
            .cloned()
            .ok_or_else(|| Error::Domain(format!("seed {} does not exist", self.seed)))?;
        for w in &self.steps {
            code = w.apply(&code)?;
        }
        Ok(code)
    }
}

#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub code: RingCode,
    pub expansion: FieldCode,
    pub fingerprint: CodeFingerprint,
    pub trail: Trail,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub ell: usize,
    pub classes: usize,
    pub candidates: u64,
    pub distinct: u64,
    pub pruned: u64,
    pub exact_checks: u64,
}

#[derive(Clone, Debug)]
pub struct ClassificationRun {
    pub spec: RingSpec,
    pub target_ell: usize,
    /// Completeness is guaranteed for these parameters.
    pub exhaustive: bool,
    /// False when a budget stopped the run; `classes` then belong to `reached_ell`.
    pub complete: bool,
    pub reached_ell: usize,
    pub min_distance: Option<usize>,
    pub classes: Vec<ClassRecord>,
    pub levels: Vec<LevelStats>,
}

impl ClassificationRun {
    pub fn empty(spec: RingSpec, target_ell: usize) -> ClassificationRun {
        ClassificationRun {
            spec,
            target_ell,
            exhaustive: false,
            complete: true,
            reached_ell: target_ell,
            min_distance: None,
            classes: Vec::new(),
            levels: Vec::new(),
        }
    }
}

/// Are the hypotheses under which building-up reaches every code satisfied?
pub fn completeness_guaranteed(spec: &RingSpec) -> bool {
    spec.cyclotomic_ok() && spec.field().supports_branch_i()
}

fn step_of(spec: &RingSpec) -> usize {
    if spec.field().residue_class() == ResidueClass::ThreeMod4 {
        4
    } else {
        2
    }
}

pub fn classify(spec: &RingSpec, target_ell: usize, opts: &ClassifyOptions) -> Result<ClassificationRun> {
    classify_from(spec, target_ell, opts, None)
}

/// Continue a run from a manifest written by an earlier (possibly interrupted) run.
pub fn resume(path: impl AsRef<Path>, opts: &ClassifyOptions) -> Result<ClassificationRun> {
    let text = std::fs::read_to_string(path)?;
    let manifest: Manifest =
        serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    let spec = RingSpec::from_params(manifest.q, manifest.m)?;
    let mut opts = opts.clone();
    if opts.min_distance.is_none() {
        opts.min_distance = manifest.min_distance;
    }
    let start = manifest.restore(&spec, &opts.equiv)?;
    classify_from(&spec, manifest.target_ell, &opts, Some((manifest.reached_ell, start, manifest.levels)))
}

fn classify_from(
    spec: &RingSpec,
    target_ell: usize,
    opts: &ClassifyOptions,
    start: Option<(usize, Vec<ClassRecord>, Vec<LevelStats>)>,
) -> Result<ClassificationRun> {
    let step = step_of(spec);
    let exhaustive = completeness_guaranteed(spec);
    if !exhaustive && !opts.constructive {
        return Err(Error::Unsupported(format!(
            "building-up is not known to reach every self-dual code over F_{}[Y]/(Y^{} − 1); \
             rerun in constructive mode for a non-exhaustive search",
            spec.field().q(),
            spec.m()
        )));
    }
    if target_ell < step || target_ell % step != 0 {
        return Err(Error::Domain(format!("target length must be a positive multiple of {step}, got {target_ell}")));
    }
    let (mut ell, mut frontier, mut levels) = match start {
        Some(s) => s,
        None => {
            let seeds = buildup::seed(spec)?;
            let recs = seeds
                .into_iter()
                .enumerate()
                .map(|(i, code)| {
                    let expansion = code.expand();
                    let fingerprint = equiv::fingerprint(&expansion, &opts.equiv)?;
                    Ok(ClassRecord { code, expansion, fingerprint, trail: Trail { seed: i, steps: Vec::new() } })
                })
                .collect::<Result<Vec<_>>>()?;
            let stats = LevelStats { ell: step, classes: recs.len(), ..Default::default() };
            (step, recs, vec![stats])
        }
    };
    let mut run = ClassificationRun {
        spec: *spec,
        target_ell,
        exhaustive,
        complete: true,
        reached_ell: ell,
        min_distance: opts.min_distance,
        classes: Vec::new(),
        levels: Vec::new(),
    };
    if ell == target_ell {
        if let Some(dmin) = opts.min_distance {
            frontier.retain(|r| r.fingerprint.d >= dmin);
        }
    }
    while ell < target_ell {
        let last = ell + step == target_ell;
        let filter = if last { opts.min_distance } else { None };
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.workers.unwrap_or(0)).build();
        let work = || with_word!(spec.field(), W => extend_level::<W>(spec, &frontier, ell, filter, opts));
        let outcome = match pool {
            Ok(p) => p.install(work),
            Err(_) => work(),
        };
        match outcome {
            Ok((next, stats)) => {
                frontier = next;
                ell += step;
                levels.push(stats);
                run.reached_ell = ell;
                if let Some(path) = &opts.checkpoint {
                    let snapshot = ClassificationRun {
                        classes: frontier.clone(),
                        levels: levels.clone(),
                        complete: ell == target_ell,
                        ..run.clone()
                    };
                    Manifest::from_run(&snapshot, &[]).write(path)?;
                }
            }
            Err(Error::Resource { .. }) if !exhaustive || opts.checkpoint.is_some() => {
                run.complete = false;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    run.classes = frontier;
    run.levels = levels;
    Ok(run)
}

/// Base code data for fast candidate generation: an F_q basis of the
/// expansion, each vector written over R and pre-placed in the longer layout.
struct Base<W: Word> {
    vectors: Vec<Vec<RingElem>>,
    placed: Vec<W>,
}

fn place<W: Word>(w: &mut W, a: &RingElem, j: usize, ell: usize) {
    for i in 0..a.m() {
        let c = a.coeff(i);
        if !c.is_zero() {
            w.set(i * ell + j, c);
        }
    }
}

impl<W: Word> Base<W> {
    fn new(spec: &RingSpec, code: &FieldCode, ell: usize, offset: usize) -> Base<W> {
        let new_ell = ell + offset;
        let vectors: Vec<Vec<RingElem>> = code.rows().iter().map(|r| qc::collapse_vector(spec, ell, r)).collect();
        let placed = vectors
            .iter()
            .map(|v| {
                let mut w = W::zero();
                for (j, a) in v.iter().enumerate() {
                    place(&mut w, a, j + offset, new_ell);
                }
                w
            })
            .collect();
        Base { vectors, placed }
    }

    /// RREF generator rows of the extension by `w`.
    fn rows(&self, spec: &RingSpec, w: &ExtensionWitness, new_ell: usize) -> Vec<W> {
        let m = spec.m();
        let (one, z) = (spec.one(), spec.zero());
        let mut rows = Vec::with_capacity(m * new_ell / 2);
        let ip = |v: &[RingElem], xc: &[RingElem]| {
            let mut s = spec.zero();
            for (a, b) in v.iter().zip(xc) {
                s = spec.add(&s, &spec.mul(a, b));
            }
            spec.neg(&s)
        };
        match w {
            ExtensionWitness::BranchI { c, x } => {
                let mut first = vec![one, z];
                first.extend_from_slice(x);
                rows.extend((0..m).map(|s| qc::expand_row::<W>(spec, &first, s)));
                let xc: Vec<RingElem> = x.iter().map(|a| spec.conj(a)).collect();
                for (v, p) in self.vectors.iter().zip(&self.placed) {
                    let y = ip(v, &xc);
                    let mut r = *p;
                    place(&mut r, &y, 0, new_ell);
                    place(&mut r, &spec.mul(c, &y), 1, new_ell);
                    rows.push(r);
                }
            }
            ExtensionWitness::BranchII { alpha, beta, x1, x2 } => {
                for (lead, x) in [(0, x1), (1, x2)] {
                    let mut g = vec![z; 4];
                    g[lead] = one;
                    g.extend_from_slice(x);
                    rows.extend((0..m).map(|s| qc::expand_row::<W>(spec, &g, s)));
                }
                let c1: Vec<RingElem> = x1.iter().map(|a| spec.conj(a)).collect();
                let c2: Vec<RingElem> = x2.iter().map(|a| spec.conj(a)).collect();
                for (v, p) in self.vectors.iter().zip(&self.placed) {
                    let s = ip(v, &c1);
                    let t = ip(v, &c2);
                    let third = spec.add(&spec.mul(alpha, &s), &spec.mul(beta, &t));
                    let fourth = spec.sub(&spec.mul(beta, &s), &spec.mul(alpha, &t));
                    let mut r = *p;
                    for (j, a) in [s, t, third, fourth].iter().enumerate() {
                        place(&mut r, a, j, new_ell);
                    }
                    rows.push(r);
                }
            }
        }
        packed::rref(&mut rows, spec.m() * new_ell);
        rows
    }
}

/// x is the least element of its orbit under multiplication by powers of Y.
/// Replacing x by Y^k·x only multiplies the two new columns by a power of Y.
fn canonical_under_shift(spec: &RingSpec, x: &[RingElem]) -> bool {
    (1..spec.m()).all(|k| {
        let yk = spec.y_pow(k);
        for a in x {
            let b = spec.mul(&yk, a);
            match b.cmp(a) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => return true,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    })
}

/// Witnesses for one base, in a fixed order.
fn witnesses<'a>(spec: &'a RingSpec, ell: usize, budget: u128) -> Result<Box<dyn Iterator<Item = ExtensionWitness> + 'a>> {
    let minus_one = spec.minus_one();
    if spec.field().supports_branch_i() {
        let scalars = buildup::canonical_branch_i_scalars(spec);
        let mut sols = Vec::new();
        for _ in &scalars {
            sols.push(spec.enumerate_solutions(ell, minus_one, budget)?);
        }
        let it = scalars.into_iter().zip(sols).flat_map(move |(c, s)| {
            s.filter(move |x| canonical_under_shift(spec, x)).map(move |x| ExtensionWitness::BranchI { c, x })
        });
        return Ok(Box::new(it));
    }
    let pairs: Vec<(RingElem, RingElem)> = {
        let elems: Vec<RingElem> = spec.elements().collect();
        let mut v = Vec::new();
        for a in &elems {
            for b in &elems {
                let s = spec.add(&spec.norm(a), &spec.norm(b));
                if s == minus_one && spec.mul(a, &spec.conj(b)) == spec.mul(&spec.conj(a), b) {
                    v.push((*a, *b));
                }
            }
        }
        v
    };
    spec.enumerate_solutions(ell, minus_one, budget)?;
    let it = pairs.into_iter().flat_map(move |(alpha, beta)| {
        let outer = spec.enumerate_solutions(ell, minus_one, budget).expect("checked above");
        outer.flat_map(move |x1| {
            let inner = spec.enumerate_solutions(ell, minus_one, budget).expect("checked above");
            inner.filter_map(move |x2| {
                let orth = spec.hermitian_ip(&x1, &x2).map(|v| v.is_zero()).unwrap_or(false);
                orth.then(|| ExtensionWitness::BranchII { alpha, beta, x1: x1.clone(), x2 })
            })
        })
    });
    Ok(Box::new(it))
}

/// No nonzero codeword of weight below `dmin`.
fn has_min_distance<W: Word>(code: &FieldCode, dmin: usize, budget: u128) -> Result<bool> {
    if dmin <= 1 {
        return Ok(true);
    }
    let low = low_weight_words::<W>(code, dmin - 1, budget, false)?;
    Ok(low.counts.iter().skip(1).all(|&c| c == 0))
}

/// Incremental deduplication up to equivalence over F_q.
struct Dedup<W: Word, T> {
    n: usize,
    seen: HashSet<Vec<W>>,
    buckets: HashMap<CodeFingerprint, Vec<usize>>,
    reps: Vec<Prepared<W>>,
    payloads: Vec<T>,
    exact_checks: u64,
}

impl<W: Word, T> Dedup<W, T> {
    fn new(n: usize) -> Dedup<W, T> {
        Dedup { n, seen: HashSet::new(), buckets: HashMap::new(), reps: Vec::new(), payloads: Vec::new(), exact_checks: 0 }
    }

    /// Returns true when `rows` (in RREF) starts a new class.
    fn offer(&mut self, rows: Vec<W>, payload: T, opts: &EquivOptions) -> Result<bool> {
        if self.seen.contains(&rows) {
            return Ok(false);
        }
        self.seen.insert(rows.clone());
        let code = FieldCode::from_packed(self.n, rows);
        let prep = equiv::prepare::<W>(&code, opts)?;
        let bucket = self.buckets.entry(prep.fingerprint.clone()).or_default();
        for &i in bucket.iter() {
            self.exact_checks += 1;
            if equiv::prepared_equivalent(&self.reps[i], &prep, opts)?.is_some() {
                return Ok(false);
            }
        }
        bucket.push(self.reps.len());
        self.reps.push(prep);
        self.payloads.push(payload);
        Ok(true)
    }

    fn distinct(&self) -> u64 {
        self.seen.len() as u64
    }
}

fn extend_level<W: Word>(
    spec: &RingSpec,
    frontier: &[ClassRecord],
    ell: usize,
    filter: Option<usize>,
    opts: &ClassifyOptions,
) -> Result<(Vec<ClassRecord>, LevelStats)> {
    let step = step_of(spec);
    let new_ell = ell + step;
    let n = spec.m() * new_ell;
    let mut dedup: Dedup<W, (usize, ExtensionWitness)> = Dedup::new(n);
    let mut stats = LevelStats { ell: new_ell, ..Default::default() };
    let mut tried: u128 = 0;
    for (bi, rec) in frontier.iter().enumerate() {
        let base = Base::<W>::new(spec, &rec.expansion, ell, step);
        let mut it = witnesses(spec, ell, opts.budget)?;
        loop {
            let batch: Vec<ExtensionWitness> = it.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            tried += batch.len() as u128;
            if tried > opts.budget {
                return Err(Error::Resource { required: tried, budget: opts.budget });
            }
            let built: Vec<Result<Option<(Vec<W>, ExtensionWitness)>>> = batch
                .into_par_iter()
                .map(|w| {
                    let rows = base.rows(spec, &w, new_ell);
                    if let Some(dmin) = filter {
                        let code = FieldCode::from_packed(n, rows.clone());
                        if !has_min_distance::<W>(&code, dmin, opts.equiv.word_budget)? {
                            return Ok(None);
                        }
                    }
                    Ok(Some((rows, w)))
                })
                .collect();
            for b in built {
                stats.candidates += 1;
                match b? {
                    None => stats.pruned += 1,
                    Some((rows, w)) => {
                        dedup.offer(rows, (bi, w), &opts.equiv)?;
                    }
                }
            }
        }
    }
    stats.distinct = dedup.distinct();
    stats.exact_checks = dedup.exact_checks;
    let mut next = Vec::with_capacity(dedup.reps.len());
    for (prep, (bi, w)) in dedup.reps.into_iter().zip(dedup.payloads) {
        let parent = &frontier[bi];
        let code = w.apply_unchecked(&parent.code);
        let expansion = code.expand();
        debug_assert_eq!(expansion.rows(), prep.code().rows());
        let mut trail = parent.trail.clone();
        trail.steps.push(w);
        next.push(ClassRecord { code, expansion, fingerprint: prep.fingerprint, trail });
    }
    stats.classes = next.len();
    Ok((next, stats))
}

/// Pairwise-inequivalent representatives of the given expansions, in input order.
pub fn dedup_codes(codes: &[FieldCode], opts: &EquivOptions) -> Result<Vec<usize>> {
    let Some(first) = codes.first() else { return Ok(Vec::new()) };
    let (field, n) = (first.field(), first.n());
    if codes.iter().any(|c| c.field() != field || c.n() != n) {
        return Err(Error::Domain("codes to deduplicate must share field and length".into()));
    }
    with_word!(field, W => {
        let mut d: Dedup<W, usize> = Dedup::new(n);
        for (i, c) in codes.iter().enumerate() {
            d.offer(c.packed::<W>(), i, opts)?;
        }
        Ok(d.payloads)
    })
}

/// Sesquilinear setting for the component enumerations.
struct Sesq<E> {
    elems: Vec<E>,
    zero: E,
    one: E,
    add: Box<dyn Fn(E, E) -> E>,
    mul: Box<dyn Fn(E, E) -> E>,
    conj: Box<dyn Fn(E) -> E>,
}

impl<E: Copy + Eq> Sesq<E> {
    fn ip(&self, a: &[E], b: &[E]) -> E {
        a.iter().zip(b).fold(self.zero, |s, (&x, &y)| (self.add)(s, (self.mul)(x, (self.conj)(y))))
    }

    /// All self-dual codes of length n, as RREF generator matrices.
    fn self_dual_codes(&self, n: usize, budget: u128) -> Result<Vec<Vec<Vec<E>>>> {
        if n % 2 != 0 {
            return Ok(Vec::new());
        }
        let k = n / 2;
        let mut out = Vec::new();
        let mut rows: Vec<Vec<E>> = Vec::new();
        let mut work = 0u128;
        self.rec(n, k, 0, &mut rows, &mut out, &mut work, budget)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        n: usize,
        k: usize,
        min_pivot: usize,
        rows: &mut Vec<Vec<E>>,
        out: &mut Vec<Vec<Vec<E>>>,
        work: &mut u128,
        budget: u128,
    ) -> Result<()> {
        if rows.len() == k {
            out.push(rows.clone());
            return Ok(());
        }
        let left = k - rows.len();
        let pivots: Vec<usize> = rows.iter().map(|r| r.iter().position(|x| *x != self.zero).unwrap()).collect();
        for p in min_pivot..=n - left {
            if rows.iter().any(|s| s[p] != self.zero) {
                continue;
            }
            let free: Vec<usize> = (p + 1..n).filter(|j| !pivots.contains(j)).collect();
            let q = self.elems.len();
            let total = (q as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
            *work = work.saturating_add(total);
            if *work > budget {
                return Err(Error::Resource { required: *work, budget });
            }
            for mut t in 0..total {
                let mut r = vec![self.zero; n];
                r[p] = self.one;
                for &j in &free {
                    r[j] = self.elems[(t % q as u128) as usize];
                    t /= q as u128;
                }
                if self.ip(&r, &r) != self.zero || rows.iter().any(|s| self.ip(s, &r) != self.zero) {
                    continue;
                }
                rows.push(r);
                self.rec(n, k, p + 1, rows, out, work, budget)?;
                rows.pop();
            }
        }
        Ok(())
    }
}

/// Independent enumeration of the self-dual codes over R of length ℓ: every
/// Euclidean self-dual code over F_q combined with every Hermitian self-dual
/// code over the residue field K = F_q[Y]/(Φ_m), deduplicated over F_q.
/// Supported for q = 2 with m = 3 (K = F_4) and m = 5 (K = F_16).
pub fn enumerate_via_crt(spec: &RingSpec, ell: usize, opts: &ClassifyOptions) -> Result<Vec<RingCode>> {
    if !spec.cyclotomic_ok() {
        return Err(Error::Unsupported(format!(
            "Y^{} − 1 does not split into two irreducible factors over {}",
            spec.m(),
            spec.field()
        )));
    }
    if spec.field() != FieldSpec::F2 || !(spec.m() == 3 || spec.m() == 5) {
        return Err(Error::Unsupported("component enumeration is implemented for q = 2, m ∈ {3, 5}".into()));
    }
    let f = spec.field();
    let base = Sesq {
        elems: f.elements().collect(),
        zero: FieldElem::ZERO,
        one: FieldElem::ONE,
        add: Box::new(move |a, b| f.add(a, b)),
        mul: Box::new(move |a, b| f.mul(a, b)),
        conj: Box::new(|a| a),
    };
    let s = *spec;
    let top = spec.m() - 1;
    let residue = Sesq {
        elems: spec.elements().filter(|a| a.coeff(top).is_zero()).collect(),
        zero: spec.zero(),
        one: spec.one(),
        add: Box::new(move |a, b| s.add(&a, &b)),
        mul: Box::new(move |a, b| s.residue_mul(&a, &b)),
        conj: Box::new(move |a| s.residue_conj(&a)),
    };
    let c1 = base.self_dual_codes(ell, opts.budget)?;
    let c2 = residue.self_dual_codes(ell, opts.budget)?;
    let pairs = (c1.len() as u128) * (c2.len() as u128);
    if pairs > opts.budget {
        return Err(Error::Resource { required: pairs, budget: opts.budget });
    }
    let mut codes = Vec::with_capacity(pairs as usize);
    let mut expansions = Vec::with_capacity(pairs as usize);
    for a in &c1 {
        for b in &c2 {
            let mut gens: Vec<Vec<RingElem>> =
                a.iter().map(|r| r.iter().map(|&u| spec.combine_parts(u, &spec.zero())).collect()).collect();
            gens.extend(b.iter().map(|r| r.iter().map(|v| spec.combine_parts(FieldElem::ZERO, v)).collect()));
            let code = RingCode::new(*spec, ell, gens)?;
            debug_assert!(code.is_self_dual());
            expansions.push(code.expand());
            codes.push(code);
        }
    }
    let keep = dedup_codes(&expansions, &opts.equiv)?;
    Ok(keep.into_iter().map(|i| codes[i].clone()).collect())
}

/// Do two lists of codes represent the same equivalence classes?
pub fn same_classes(a: &[FieldCode], b: &[FieldCode], opts: &EquivOptions) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !used[j] && equiv::are_equivalent(x, y, opts)?.is_some() {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassReport {
    pub index: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_exact: bool,
    pub enumerator: WeightEnum,
    pub template: MatchReport,
    pub divisible: bool,
    pub aut: Option<u128>,
    pub type_ii: Option<bool>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ClassReport>,
    /// (d, number of classes) in increasing d.
    pub by_distance: Vec<(usize, usize)>,
    pub highest_d: Option<usize>,
    /// Classes attaining the highest d.
    pub best_count: usize,
}

impl Report {
    pub fn count_template(&self, name: &str) -> usize {
        self.rows.iter().filter(|r| r.template.matched().is_some_and(|m| m.name == name)).count()
    }

    pub fn render_csv(&self) -> String {
        let mut s = String::from("class,n,k,d,d_exact,template,beta,divisible,aut\n");
        for r in &self.rows {
            let (t, b) = match r.template.matched() {
                Some(m) => (m.name.clone(), m.beta.map(|b| b.to_string()).unwrap_or_default()),
                None => (String::new(), String::new()),
            };
            let aut = r.aut.map(|a| a.to_string()).unwrap_or_default();
            s.push_str(&format!("{},{},{},{},{},{},{},{},{}\n", r.index + 1, r.n, r.k, r.d, r.d_exact, t, b, r.divisible, aut));
        }
        s
    }

    /// One line per minimum distance, like a table of counts per length.
    pub fn render_summary(&self) -> String {
        let n = self.rows.first().map(|r| r.n).unwrap_or(0);
        let mut s = String::from("n,d,classes\n");
        for (d, c) in &self.by_distance {
            s.push_str(&format!("{n},{d},{c}\n"));
        }
        s
    }
}

/// Per-class parameters, enumerator form, divisibility and |Aut| (for n ≤ the automorphism limit).
pub fn filter_report(run: &ClassificationRun, opts: &ClassifyOptions) -> Result<Report> {
    let aopts = AnalysisOptions { budget: opts.equiv.word_budget, workers: opts.workers };
    let mut rows = Vec::with_capacity(run.classes.len());
    let p = run.spec.m() as u64;
    for (i, rec) in run.classes.iter().enumerate() {
        let d = &rec.expansion;
        let md = analysis::min_distance(d, &aopts)?;
        let horizon = analysis::template_weight_horizon(d.n()).unwrap_or(md.value).max(md.value);
        let enumerator = analysis::weight_enumerator_auto(d, horizon, &aopts)?;
        let aut = if d.n() <= opts.equiv.max_aut_len {
            Some(equiv::automorphism_order(d, &opts.equiv)?)
        } else {
            None
        };
        let type_ii = match d.field() {
            FieldSpec::F2 => Some(analysis::is_type_ii_binary(d)),
            FieldSpec::F4 => Some(analysis::is_type_ii_f4(d)?),
            _ => None,
        };
        rows.push(ClassReport {
            index: i,
            n: d.n(),
            k: d.k(),
            d: md.value,
            d_exact: md.exact,
            template: analysis::match_template(&enumerator),
            divisible: analysis::divisibility_check(&enumerator, p),
            enumerator,
            aut,
            type_ii,
        });
    }
    let mut by: std::collections::BTreeMap<usize, usize> = Default::default();
    for r in &rows {
        *by.entry(r.d).or_default() += 1;
    }
    let highest_d = by.keys().next_back().copied();
    let best_count = highest_d.map(|d| by[&d]).unwrap_or(0);
    Ok(Report { rows, by_distance: by.into_iter().collect(), highest_d, best_count })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManifestClass {
    pub seed: usize,
    pub steps: Vec<String>,
    pub fingerprint: CodeFingerprint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

/// JSON description of a run; doubles as the resume checkpoint.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub q: u32,
    pub m: usize,
    pub target_ell: usize,
    pub reached_ell: usize,
    pub exhaustive: bool,
    pub complete: bool,
    pub min_distance: Option<usize>,
    pub levels: Vec<LevelStats>,
    pub classes: Vec<ManifestClass>,
}

impl Manifest {
    /// `files[i]`, when present, names the matrix file written for class i.
    pub fn from_run(run: &ClassificationRun, files: &[String]) -> Manifest {
        let spec = run.spec;
        Manifest {
            q: spec.field().q(),
            m: spec.m(),
            target_ell: run.target_ell,
            reached_ell: run.reached_ell,
            exhaustive: run.exhaustive,
            complete: run.complete,
            min_distance: run.min_distance,
            levels: run.levels.clone(),
            classes: run
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| ManifestClass {
                    seed: c.trail.seed,
                    steps: c.trail.steps.iter().map(|w| w.render(&spec)).collect(),
                    fingerprint: c.fingerprint.clone(),
                    file: files.get(i).cloned(),
                })
                .collect(),
        }
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        let path = path.as_ref();
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, text)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Replay every trail and check it lands on the recorded fingerprint.
    pub fn restore(&self, spec: &RingSpec, opts: &EquivOptions) -> Result<Vec<ClassRecord>> {
        self.classes
            .iter()
            .map(|c| {
                let steps = c.steps.iter().map(|s| ExtensionWitness::parse(spec, s)).collect::<Result<Vec<_>>>()?;
                let trail = Trail { seed: c.seed, steps };
                let code = trail.replay(spec)?;
                let expansion = code.expand();
                let fingerprint = equiv::fingerprint(&expansion, opts)?;
                if fingerprint != c.fingerprint {
                    return Err(Error::Construction("replayed class does not match its recorded fingerprint".into()));
                }
                Ok(ClassRecord { code, expansion, fingerprint, trail })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_self_dual_counts() {
        let f = FieldSpec::F2;
        let s = Sesq {
            elems: f.elements().collect(),
            zero: FieldElem::ZERO,
            one: FieldElem::ONE,
            add: Box::new(move |a, b| f.add(a, b)),
            mul: Box::new(move |a, b| f.mul(a, b)),
            conj: Box::new(|a| a),
        };
        // Π_{i=1}^{n/2-1} (2^i + 1)
        assert_eq!(s.self_dual_codes(2, 1 << 20).unwrap().len(), 1);
        assert_eq!(s.self_dual_codes(4, 1 << 20).unwrap().len(), 3);
        assert_eq!(s.self_dual_codes(6, 1 << 20).unwrap().len(), 15);
        assert_eq!(s.self_dual_codes(8, 1 << 20).unwrap().len(), 135);
    }

    #[test]
    fn refuses_without_hypotheses() {
        let spec = RingSpec::from_params(2, 7).unwrap();
        assert!(matches!(classify(&spec, 4, &ClassifyOptions::default()), Err(Error::Unsupported(_))));
        assert!(enumerate_via_crt(&spec, 2, &ClassifyOptions::default()).is_err());
    }

    #[test]
    fn shift_canonical() {
        let spec = RingSpec::from_params(2, 3).unwrap();
        let x = vec![spec.one(), spec.zero()];
        let orbit: Vec<Vec<RingElem>> =
            (0..3).map(|k| x.iter().map(|a| spec.mul(&spec.y_pow(k), a)).collect()).collect();
        assert_eq!(orbit.iter().filter(|v| canonical_under_shift(&spec, v)).count(), 1);
    }
}
