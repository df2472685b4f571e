//! Weight distributions, minimum distance and the derived tests.
//!
//! Full enumerators walk the message space in a p-ary Gray order so every
//! step is one packed row addition. Above the budget, low-weight counts come
//! from two disjoint information sets: a codeword of weight at most 2w+1 has
//! weight at most w on one of them, so enumerating messages of weight ≤ w on
//! both yields every such codeword exactly.

use crate::error::{domain, Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::packed::{self, with_word, Word};
use crate::qc::{gray_image, FieldCode};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Default cap on the number of codewords a full enumeration may visit.
pub const DEFAULT_WORD_BUDGET: u128 = 1 << 28;

/// Weight distribution A_0.., complete or exact through some weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightEnum {
    pub n: usize,
    pub counts: Vec<u64>,
    pub complete: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub budget: u128,
    pub workers: Option<usize>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { budget: DEFAULT_WORD_BUDGET, workers: None }
    }
}

impl AnalysisOptions {
    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
}

/// Minimum distance, or a lower bound when `exact` is false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDistance {
    pub value: usize,
    pub exact: bool,
}

impl WeightEnum {
    /// Largest weight whose count is known exactly.
    pub fn complete_through(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn a(&self, i: usize) -> Option<u64> {
        self.counts.get(i).copied()
    }

    /// Smallest nonzero weight within the known range.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] != 0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// `1 + 285y^8 + 21280y^12 + …`
    pub fn render_poly(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            match i {
                0 => write!(s, "{c}").unwrap(),
                1 => write!(s, "{c}y").unwrap(),
                _ => write!(s, "{c}y^{i}").unwrap(),
            }
        }
        if !self.complete {
            s.push_str(" + …");
        }
        s
    }

    pub fn render_csv(&self) -> String {
        let mut s = String::from("i,A_i\n");
        for (i, &c) in self.counts.iter().enumerate() {
            writeln!(s, "{i},{c}").unwrap();
        }
        s
    }
}

/// F_p-basis of the code as packed words, with p the characteristic.
fn prime_basis<W: Word>(d: &FieldCode) -> Vec<W> {
    let rows: Vec<W> = d.packed();
    if W::FIELD == FieldSpec::F4 {
        let omega = FieldElem(2);
        rows.iter().flat_map(|&r| [r, r.scale(omega)]).collect()
    } else {
        rows
    }
}

fn full_counts<W: Word>(gens: &[W], p: u64, n: usize) -> Vec<u64> {
    let k = gens.len();
    let mut top = 0;
    let mut chunks = 1u64;
    while top < k && chunks < 512 {
        top += 1;
        chunks *= p;
    }
    let low = k - top;
    let (low_gens, top_gens) = gens.split_at(low);
    let span = p.pow(low as u32);
    (0..chunks)
        .into_par_iter()
        .map(|t| {
            let mut w = W::zero();
            let mut tt = t;
            for g in top_gens {
                w = w.add(g.scale(FieldElem((tt % p) as u8)));
                tt /= p;
            }
            let mut counts = vec![0u64; n + 1];
            counts[w.weight() as usize] += 1;
            for s in 1..span {
                let j = if p == 2 {
                    s.trailing_zeros() as usize
                } else {
                    let mut v = s;
                    let mut j = 0;
                    while v % p == 0 {
                        v /= p;
                        j += 1;
                    }
                    j
                };
                w = w.add(low_gens[j]);
                counts[w.weight() as usize] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

pub fn codeword_count(d: &FieldCode) -> u128 {
    (d.field().q() as u128).checked_pow(d.k() as u32).unwrap_or(u128::MAX)
}

/// Complete weight enumerator by exhaustive enumeration.
pub fn weight_enumerator(d: &FieldCode, opts: &AnalysisOptions) -> Result<WeightEnum> {
    let required = codeword_count(d);
    if required > opts.budget {
        return Err(Error::Resource { required, budget: opts.budget });
    }
    let n = d.n();
    let p = d.field().characteristic() as u64;
    let counts = opts.run(|| with_word!(d.field(), W => full_counts::<W>(&prime_basis::<W>(d), p, n)));
    Ok(WeightEnum { n, counts, complete: true })
}

struct InfoSets<W> {
    first: Vec<W>,
    first_mask: u128,
    second: Option<Vec<W>>,
}

fn info_sets<W: Word>(d: &FieldCode) -> InfoSets<W> {
    let first: Vec<W> = d.packed();
    let first_mask = d.pivots().iter().fold(0u128, |m, &j| m | (1u128 << j));
    let rest: Vec<usize> = (0..d.n()).filter(|j| (first_mask >> j) & 1 == 0).collect();
    let mut second = first.clone();
    let piv = packed::rref_on_columns(&mut second, &rest);
    let second = (piv.len() == d.k()).then_some(second);
    InfoSets { first, first_mask, second }
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

/// Number of projective messages of weight 1..=w over a k-dimensional space.
fn low_cost(k: usize, w: usize, q: u32) -> u128 {
    (1..=w.min(k)).map(|i| binom(k, i).saturating_mul((q as u128 - 1).saturating_pow(i as u32 - 1))).sum()
}

struct LowSearch<W> {
    scaled: Vec<Vec<W>>,
    max_weight: usize,
    depth: usize,
    skip: Option<(u128, usize)>,
    collect: bool,
}

impl<W: Word> LowSearch<W> {
    fn visit(&self, w: W, counts: &mut [u64], out: &mut Vec<W>) {
        let wt = w.weight() as usize;
        if wt > self.max_weight {
            return;
        }
        if let Some((mask, lim)) = self.skip {
            if w.restrict(mask).weight() as usize <= lim {
                return;
            }
        }
        counts[wt] += 1;
        if self.collect {
            out.push(w);
        }
    }

    fn rec(&self, start: usize, level: usize, acc: W, counts: &mut [u64], out: &mut Vec<W>) {
        for i in start..self.scaled.len() {
            for s in &self.scaled[i] {
                let w = acc.add(*s);
                self.visit(w, counts, out);
                if level + 1 < self.depth {
                    self.rec(i + 1, level + 1, w, counts, out);
                }
            }
        }
    }

    fn run(&self) -> (Vec<u64>, Vec<W>) {
        let k = self.scaled.len();
        if self.depth == 0 {
            return (vec![0; self.max_weight + 1], Vec::new());
        }
        (0..k)
            .into_par_iter()
            .map(|i| {
                let mut counts = vec![0u64; self.max_weight + 1];
                let mut out = Vec::new();
                // leading coefficient fixed to 1: one word per projective class
                let w = self.scaled[i][0];
                self.visit(w, &mut counts, &mut out);
                if self.depth > 1 {
                    self.rec(i + 1, 1, w, &mut counts, &mut out);
                }
                (counts, out)
            })
            .reduce(
                || (vec![0u64; self.max_weight + 1], Vec::new()),
                |(mut a, mut wa), (b, wb)| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    wa.extend(wb);
                    (a, wa)
                },
            )
    }
}

fn scaled_rows<W: Word>(rows: &[W]) -> Vec<Vec<W>> {
    rows.iter().map(|r| W::FIELD.nonzero().map(|s| r.scale(s)).collect()).collect()
}

/// Exact low-weight data: counts through `max_weight` and, if asked, one
/// representative per projective class of nonzero words of weight ≤ `max_weight`.
pub(crate) struct LowWeight<W> {
    pub counts: Vec<u64>,
    pub words: Vec<W>,
}

pub(crate) fn low_weight_words<W: Word>(
    d: &FieldCode,
    max_weight: usize,
    budget: u128,
    collect: bool,
) -> Result<LowWeight<W>> {
    let k = d.k();
    let q = d.field().q();
    let max_weight = max_weight.min(d.n());
    let mut counts = vec![0u64; max_weight + 1];
    counts[0] = 1;
    if k == 0 {
        return Ok(LowWeight { counts, words: Vec::new() });
    }
    let sets = info_sets::<W>(d);
    let w = if sets.second.is_some() { max_weight / 2 } else { max_weight };
    let w = w.min(k);
    let passes = if sets.second.is_some() { 2 } else { 1 };
    let required = low_cost(k, w, q).saturating_mul(passes);
    if required > budget {
        return Err(Error::Resource { required, budget });
    }
    let mut words = Vec::new();
    let mut add = |(c, ws): (Vec<u64>, Vec<W>)| {
        for (i, x) in c.into_iter().enumerate().skip(1) {
            counts[i] += x * (q as u64 - 1);
        }
        words.extend(ws);
    };
    let search = |rows: &[W], skip| LowSearch {
        scaled: scaled_rows(rows),
        max_weight,
        depth: w,
        skip,
        collect,
    };
    add(search(&sets.first, None).run());
    if let Some(second) = &sets.second {
        add(search(second, Some((sets.first_mask, w))).run());
    }
    Ok(LowWeight { counts, words })
}

/// Counts A_0..A_max_weight, exact, without enumerating the whole code.
pub fn weight_enumerator_prefix(d: &FieldCode, max_weight: usize, opts: &AnalysisOptions) -> Result<WeightEnum> {
    let counts = opts.run(|| {
        with_word!(d.field(), W => low_weight_words::<W>(d, max_weight, opts.budget, false).map(|l| l.counts))
    })?;
    let complete = counts.len() == d.n() + 1;
    Ok(WeightEnum { n: d.n(), counts, complete })
}

/// Full enumerator when the code is small enough, otherwise an exact prefix through `max_weight`.
pub fn weight_enumerator_auto(d: &FieldCode, max_weight: usize, opts: &AnalysisOptions) -> Result<WeightEnum> {
    if codeword_count(d) <= opts.budget.min(1 << 20) {
        weight_enumerator(d, opts)
    } else {
        weight_enumerator_prefix(d, max_weight, opts)
    }
}

/// Exact minimum distance, degrading to a certified lower bound when the budget runs out.
pub fn min_distance(d: &FieldCode, opts: &AnalysisOptions) -> Result<MinDistance> {
    if d.k() == 0 {
        return Ok(MinDistance { value: d.n() + 1, exact: true });
    }
    if codeword_count(d) <= opts.budget.min(1 << 16) {
        let we = weight_enumerator(d, opts)?;
        return Ok(MinDistance { value: we.min_distance().unwrap_or(d.n() + 1), exact: true });
    }
    let mut proven = 0;
    let mut t = 1;
    loop {
        match weight_enumerator_prefix(d, t, opts) {
            Ok(we) => {
                if let Some(v) = we.min_distance() {
                    return Ok(MinDistance { value: v, exact: true });
                }
                proven = we.complete_through();
                if proven >= d.n() {
                    return Ok(MinDistance { value: d.n() + 1, exact: true });
                }
            }
            Err(Error::Resource { .. }) => return Ok(MinDistance { value: proven + 1, exact: false }),
            Err(e) => return Err(e),
        }
        t += 2;
    }
}

/// Every A_i with p ∤ i is divisible by p (over the known range).
pub fn divisibility_check(w: &WeightEnum, p: u64) -> bool {
    w.counts.iter().enumerate().skip(1).all(|(i, &a)| i as u64 % p == 0 || a % p == 0)
}

fn binom_i128(n: usize, k: usize) -> Option<i128> {
    if k > n {
        return Some(0);
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r.checked_mul((n - i) as i128)? / (i as i128 + 1);
    }
    Some(r)
}

/// Weight distribution of the dual code, from a complete enumerator of a k-dimensional code.
pub fn macwilliams_transform(w: &WeightEnum, q: u32, k: usize) -> Result<Vec<i128>> {
    if !w.complete {
        return domain("MacWilliams transform needs a complete enumerator");
    }
    let overflow = || Error::Domain("integer overflow in MacWilliams transform".into());
    let n = w.n;
    let q = q as i128;
    let size = q.checked_pow(k as u32).ok_or_else(overflow)?;
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut total: i128 = 0;
        for (i, &a) in w.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut kj: i128 = 0;
            for s in 0..=j.min(i) {
                let term = binom_i128(i, s)
                    .and_then(|x| x.checked_mul(binom_i128(n - i, j - s)?))
                    .and_then(|x| x.checked_mul((q - 1).checked_pow((j - s) as u32)?))
                    .ok_or_else(overflow)?;
                kj = if s % 2 == 0 { kj.checked_add(term) } else { kj.checked_sub(term) }.ok_or_else(overflow)?;
            }
            total = total.checked_add((a as i128).checked_mul(kj).ok_or_else(overflow)?).ok_or_else(overflow)?;
        }
        if total % size != 0 {
            return domain("MacWilliams transform is not integral");
        }
        out.push(total / size);
    }
    Ok(out)
}

/// A self-dual code's enumerator is fixed by the MacWilliams transform.
pub fn is_macwilliams_invariant(w: &WeightEnum, field: FieldSpec) -> Result<bool> {
    if w.n % 2 != 0 {
        return Ok(false);
    }
    let b = macwilliams_transform(w, field.q(), w.n / 2)?;
    Ok(b.iter().zip(&w.counts).all(|(&x, &y)| x == y as i128))
}

/// Binary, self-dual and doubly-even.
pub fn is_type_ii_binary(d: &FieldCode) -> bool {
    d.field() == FieldSpec::F2 && d.is_self_dual() && d.rows().iter().all(|r| r.iter().filter(|c| !c.is_zero()).count() % 4 == 0)
}

/// Euclidean self-dual F_4 code whose Gray image is binary Type II.
pub fn is_type_ii_f4(d: &FieldCode) -> Result<bool> {
    if d.field() != FieldSpec::F4 {
        return domain("Type II over F_4 needs a code over F_4");
    }
    if !d.is_self_dual() {
        return domain("Type II test needs a Euclidean self-dual code");
    }
    Ok(is_type_ii_binary(&gray_image(d)?))
}

/// Minimum Lee weight of an F_4 code, i.e. the minimum distance of its Gray image.
pub fn lee_distance(d: &FieldCode, opts: &AnalysisOptions) -> Result<MinDistance> {
    min_distance(&gray_image(d)?, opts)
}

/// Allowed values of the free parameter of a template.
#[derive(Clone, Copy, Debug)]
pub enum BetaRange {
    Fixed,
    Interval(i64, i64),
    List(&'static [i64]),
    /// Any integer that keeps the listed coefficients nonnegative.
    Free,
}

/// A candidate weight enumerator `1 + Σ (c_i + b_i·β) y^i` with A_i = 0 for 0 < i < d.
#[derive(Clone, Copy, Debug)]
pub struct Template {
    pub n: usize,
    pub d: usize,
    pub name: &'static str,
    pub terms: &'static [(usize, i64, i64)],
    pub beta: BetaRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateMatch {
    pub n: usize,
    pub name: String,
    pub beta: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatchReport {
    Matched(TemplateMatch),
    NoMatch(String),
    Ambiguous(Vec<TemplateMatch>),
}

impl MatchReport {
    pub fn matched(&self) -> Option<&TemplateMatch> {
        match self {
            MatchReport::Matched(m) => Some(m),
            _ => None,
        }
    }
}

const BETA_42: &[i64] = &[
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 24, 26, 28, 32, 42,
];

pub const TEMPLATES: &[Template] = &[
    Template { n: 24, d: 8, name: "extremal", terms: &[(8, 759, 0), (12, 2576, 0)], beta: BetaRange::Fixed },
    Template { n: 30, d: 6, name: "W1", terms: &[(6, 19, 0), (8, 393, 0), (10, 1848, 0), (12, 5192, 0)], beta: BetaRange::Fixed },
    Template { n: 30, d: 6, name: "W2", terms: &[(6, 27, 0), (8, 369, 0), (10, 1848, 0), (12, 5256, 0)], beta: BetaRange::Fixed },
    Template { n: 30, d: 6, name: "W3", terms: &[(6, 35, 0), (8, 345, 0), (10, 1848, 0), (12, 5320, 0)], beta: BetaRange::Fixed },
    Template { n: 36, d: 8, name: "W1", terms: &[(8, 225, 0), (10, 2016, 0)], beta: BetaRange::Fixed },
    Template { n: 36, d: 8, name: "W2", terms: &[(8, 289, 0), (10, 1632, 0)], beta: BetaRange::Fixed },
    Template { n: 40, d: 8, name: "extremal", terms: &[(8, 285, 0), (12, 21280, 0)], beta: BetaRange::Fixed },
    Template { n: 42, d: 8, name: "W1", terms: &[(8, 164, 0), (10, 679, 0)], beta: BetaRange::Fixed },
    Template { n: 42, d: 8, name: "W2", terms: &[(8, 84, 8), (10, 1449, -24), (12, 10640, -16)], beta: BetaRange::List(BETA_42) },
    Template { n: 48, d: 10, name: "W1", terms: &[(10, 704, 0), (12, 8976, 0)], beta: BetaRange::Fixed },
    Template { n: 48, d: 10, name: "W2", terms: &[(10, 768, 0), (12, 8592, 0)], beta: BetaRange::Fixed },
    Template { n: 50, d: 10, name: "W2", terms: &[(10, 580, -32), (12, 7400, 160)], beta: BetaRange::Free },
    Template { n: 54, d: 10, name: "W1", terms: &[(10, 351, -8), (12, 5031, 24)], beta: BetaRange::Interval(0, 43) },
    Template { n: 54, d: 10, name: "W2", terms: &[(10, 351, -8), (12, 5543, 24), (14, 43884, 32)], beta: BetaRange::Interval(12, 43) },
    Template { n: 60, d: 12, name: "W2", terms: &[(12, 2555, 64), (14, 33600, -384)], beta: BetaRange::Free },
    Template { n: 66, d: 12, name: "W1", terms: &[(12, 1690, 0), (14, 7990, 0)], beta: BetaRange::Fixed },
    Template { n: 66, d: 12, name: "W2", terms: &[(12, 858, 8), (14, 18678, -24)], beta: BetaRange::Interval(0, 778) },
    Template { n: 66, d: 12, name: "W3", terms: &[(12, 858, 8), (14, 18166, -24)], beta: BetaRange::Interval(14, 756) },
];

impl Template {
    pub fn max_weight(&self) -> usize {
        self.terms.iter().map(|t| t.0).max().unwrap_or(self.d)
    }

    /// β for which `w` fits this template, if any.
    pub fn fit(&self, w: &WeightEnum) -> Option<Option<i64>> {
        if w.n != self.n || w.complete_through() < self.max_weight() {
            return None;
        }
        if (1..self.d).any(|i| w.counts[i] != 0) {
            return None;
        }
        let beta = match self.terms.iter().find(|t| t.2 != 0) {
            None => None,
            Some(&(i, c, b)) => {
                let diff = w.counts[i] as i64 - c;
                if diff % b != 0 {
                    return None;
                }
                Some(diff / b)
            }
        };
        let bv = beta.unwrap_or(0);
        if self.terms.iter().any(|&(i, c, b)| w.counts[i] as i64 != c + b * bv) {
            return None;
        }
        let allowed = match self.beta {
            BetaRange::Fixed => true,
            BetaRange::Interval(lo, hi) => (lo..=hi).contains(&bv),
            BetaRange::List(l) => l.contains(&bv),
            BetaRange::Free => true,
        };
        allowed.then_some(beta)
    }
}

pub fn templates_for(n: usize) -> Vec<&'static Template> {
    TEMPLATES.iter().filter(|t| t.n == n).collect()
}

/// Identify which of the listed enumerator forms `w` has.
pub fn match_template(w: &WeightEnum) -> MatchReport {
    let cands = templates_for(w.n);
    if cands.is_empty() {
        return MatchReport::NoMatch(format!("no templates for length {}", w.n));
    }
    let hits: Vec<TemplateMatch> = cands
        .iter()
        .filter_map(|t| t.fit(w).map(|beta| TemplateMatch { n: t.n, name: t.name.to_string(), beta }))
        .collect();
    match hits.len() {
        0 => MatchReport::NoMatch(format!("enumerator {} fits none of the length-{} forms", w.render_poly(), w.n)),
        1 => MatchReport::Matched(hits.into_iter().next().unwrap()),
        _ => MatchReport::Ambiguous(hits),
    }
}

/// Largest weight any template for length n needs.
pub fn template_weight_horizon(n: usize) -> Option<usize> {
    templates_for(n).iter().map(|t| t.max_weight()).max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(field: FieldSpec, n: usize, rows: &[&[u8]]) -> FieldCode {
        let rows: Vec<Vec<FieldElem>> = rows.iter().map(|r| r.iter().map(|&x| FieldElem(x)).collect()).collect();
        FieldCode::from_rows(field, n, &rows).unwrap()
    }

    fn brute(d: &FieldCode) -> Vec<u64> {
        let q = d.field().q() as usize;
        let f = d.field();
        let mut counts = vec![0u64; d.n() + 1];
        for mut t in 0..q.pow(d.k() as u32) {
            let mut v = vec![FieldElem::ZERO; d.n()];
            for r in d.rows() {
                let s = FieldElem((t % q) as u8);
                t /= q;
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = f.add(*x, f.mul(s, y));
                }
            }
            counts[v.iter().filter(|c| !c.is_zero()).count()] += 1;
        }
        counts
    }

    #[test]
    fn gray_enumeration_matches_brute_force() {
        let opts = AnalysisOptions::default();
        let cases = [
            code(FieldSpec::F2, 7, &[&[1, 0, 0, 0, 1, 1, 0], &[0, 1, 0, 0, 1, 0, 1], &[0, 0, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]]),
            code(FieldSpec::F3, 6, &[&[1, 0, 0, 1, 2, 1], &[0, 1, 0, 2, 2, 0], &[0, 0, 1, 1, 1, 2]]),
            code(FieldSpec::F4, 6, &[&[1, 0, 0, 1, 2, 3], &[0, 1, 0, 3, 1, 2], &[0, 0, 1, 2, 3, 1]]),
            code(FieldSpec::F5, 5, &[&[1, 0, 2, 3, 4], &[0, 1, 1, 4, 2]]),
        ];
        for d in &cases {
            let we = weight_enumerator(d, &opts).unwrap();
            assert_eq!(we.counts, brute(d), "{:?}", d.field());
            let pre = weight_enumerator_prefix(d, d.n(), &opts).unwrap();
            assert_eq!(pre.counts, we.counts);
            for t in 0..d.n() {
                let pre = weight_enumerator_prefix(d, t, &opts).unwrap();
                assert_eq!(pre.counts[..], we.counts[..=t]);
            }
        }
    }

    #[test]
    fn zero_code() {
        let d = FieldCode::zero(FieldSpec::F3, 4);
        let we = weight_enumerator(&d, &AnalysisOptions::default()).unwrap();
        assert_eq!(we.counts, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let rows: Vec<Vec<u8>> = (0..20).map(|i| (0..40).map(|j| u8::from(j == i || j == i + 20)).collect()).collect();
        let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
        let d = code(FieldSpec::F2, 40, &refs);
        let small = AnalysisOptions { budget: 1000, workers: None };
        assert!(matches!(weight_enumerator(&d, &small), Err(Error::Resource { .. })));
        let md = min_distance(&d, &small).unwrap();
        assert_eq!(md, MinDistance { value: 2, exact: true });
    }

    #[test]
    fn divisibility_examples() {
        let mk = |counts: Vec<u64>| WeightEnum { n: counts.len() - 1, counts, complete: false };
        let mut c = vec![0u64; 11];
        c[0] = 1;
        c[8] = 225;
        assert!(divisibility_check(&mk(c.clone()), 3));
        c[10] = 768;
        assert!(divisibility_check(&mk(c), 3));
        assert!(!divisibility_check(&mk(vec![1, 0, 0, 0, 1]), 3));
    }

    #[test]
    fn macwilliams_on_hamming_pair() {
        let d = code(FieldSpec::F2, 8, &[
            &[1, 0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1, 1, 0],
        ]);
        let we = weight_enumerator(&d, &AnalysisOptions::default()).unwrap();
        assert_eq!(we.counts, vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert!(is_macwilliams_invariant(&we, FieldSpec::F2).unwrap());
        assert!(is_type_ii_binary(&d));
    }

    #[test]
    fn template_solving() {
        let mut counts = vec![0u64; 13];
        counts[0] = 1;
        counts[8] = 84;
        counts[10] = 1449;
        counts[12] = 10640;
        let we = WeightEnum { n: 42, counts: counts.clone(), complete: false };
        assert_eq!(
            match_template(&we),
            MatchReport::Matched(TemplateMatch { n: 42, name: "W2".into(), beta: Some(0) })
        );
        counts[8] = 84 + 8 * 23;
        counts[10] = 1449 - 24 * 23;
        counts[12] = 10640 - 16 * 23;
        let we = WeightEnum { n: 42, counts, complete: false };
        assert!(matches!(match_template(&we), MatchReport::NoMatch(_)));
    }
}
