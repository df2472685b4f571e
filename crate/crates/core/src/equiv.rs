//! Permutation and monomial equivalence of field codes.
//!
//! Each code is turned into an incidence structure: points are coordinates,
//! blocks are supports of low-weight codewords (one per projective class).
//! Colourings of the points are refined to equitable partitions and a
//! backtracking search individualizes points until the colouring is
//! discrete. A discrete colouring pair gives a candidate permutation, which
//! is accepted only after the code itself is checked to map onto the other.

use crate::analysis::{self, low_weight_words};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::packed::{self, with_word, Word};
use crate::qc::FieldCode;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Clone, Copy, Debug)]
pub struct EquivOptions {
    /// Stop adding weight strata once this many blocks are collected.
    pub max_blocks: usize,
    /// Search nodes before giving up with `Error::Undecided`.
    pub node_budget: u64,
    /// Budget for the low-weight enumeration.
    pub word_budget: u128,
    /// Longest code for which [`automorphism_order`] runs.
    pub max_aut_len: usize,
}

impl Default for EquivOptions {
    fn default() -> Self {
        EquivOptions { max_blocks: 6000, node_budget: 2_000_000, word_budget: 1 << 26, max_aut_len: 24 }
    }
}

/// Invariants that agree on equivalent codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeFingerprint {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub enum_prefix: Vec<u64>,
    pub refinement_signature: u64,
}

/// A monomial map: symbol at coordinate i moves to perm[i], multiplied by scalars[i].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub scalars: Vec<FieldElem>,
}

impl MonomialMap {
    pub fn identity(n: usize) -> MonomialMap {
        MonomialMap { perm: (0..n).collect(), scalars: vec![FieldElem::ONE; n] }
    }

    pub fn apply(&self, d: &FieldCode) -> FieldCode {
        d.monomial_image(&self.perm, &self.scalars)
    }

    /// One-line permutation (1-based) followed by the column scalars.
    pub fn render(&self, field: FieldSpec) -> String {
        let p: Vec<String> = self.perm.iter().map(|x| (x + 1).to_string()).collect();
        let s: Vec<&str> = self.scalars.iter().map(|&c| field.symbol(c)).collect();
        format!("perm: {}\nscalars: {}", p.join(" "), s.join(" "))
    }
}

struct Fnv(u64);

impl Fnv {
    fn new() -> Fnv {
        Fnv(0xcbf2_9ce4_8422_2325)
    }
    fn push(&mut self, x: u64) {
        for b in x.to_le_bytes() {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100_0000_01b3);
        }
    }
}

/// Incidence structure of a code plus what the leaf test needs.
struct Structure<W: Word> {
    n: usize,
    code: FieldCode,
    basis: Vec<W>,
    dual: Vec<W>,
    blocks: Vec<u128>,
    block_set: HashSet<u128>,
    point_blocks: Vec<Vec<u32>>,
    /// Largest weight included among the blocks.
    horizon: usize,
    counts: Vec<u64>,
}

fn span_rank<W: Word>(words: &[W], n: usize) -> usize {
    let mut v = words.to_vec();
    packed::rref(&mut v, n).len()
}

impl<W: Word> Structure<W> {
    fn build(code: &FieldCode, opts: &EquivOptions) -> Result<Structure<W>> {
        let n = code.n();
        let k = code.k();
        let d = analysis::min_distance(code, &analysis::AnalysisOptions { budget: opts.word_budget, workers: None })?;
        if !d.exact {
            return Err(Error::Resource { required: opts.word_budget + 1, budget: opts.word_budget });
        }
        let mut horizon = d.value.min(n);
        let mut low = low_weight_words::<W>(code, horizon, opts.word_budget, true)?;
        while horizon < n && low.words.len() <= opts.max_blocks && span_rank(&low.words, n) < k {
            match low_weight_words::<W>(code, horizon + 1, opts.word_budget, true) {
                Ok(next) => {
                    horizon += 1;
                    low = next;
                }
                Err(Error::Resource { .. }) => break,
                Err(e) => return Err(e),
            }
        }
        let mut blocks: Vec<u128> = low.words.iter().map(|w| w.support()).collect();
        blocks.sort_unstable();
        let block_set: HashSet<u128> = blocks.iter().copied().collect();
        let mut point_blocks = vec![Vec::new(); n];
        for (b, &s) in blocks.iter().enumerate() {
            for (p, pb) in point_blocks.iter_mut().enumerate() {
                if (s >> p) & 1 == 1 {
                    pb.push(b as u32);
                }
            }
        }
        Ok(Structure {
            n,
            code: code.clone(),
            basis: code.packed(),
            dual: code.dual().packed(),
            blocks,
            block_set,
            point_blocks,
            horizon,
            counts: low.counts,
        })
    }

    /// Refine `colors` towards an equitable partition. Signatures are
    /// commutative 64-bit hashes of neighbouring colours, and the trace
    /// records the sorted signature multisets of every round.
    fn refine(&self, colors: &mut Vec<u32>, trace: &mut Vec<u64>) {
        let nb = self.blocks.len();
        let mut ncolors = count_colors(colors);
        let mut bsig = vec![0u64; nb];
        let mut bcol = vec![0u32; nb];
        let mut psig = vec![0u64; self.n];
        loop {
            for (b, &s) in self.blocks.iter().enumerate() {
                let mut h = 0u64;
                let mut x = s;
                while x != 0 {
                    let p = x.trailing_zeros() as usize;
                    h = h.wrapping_add(mix(colors[p] as u64));
                    x &= x - 1;
                }
                bsig[b] = h;
            }
            rank_signatures(&bsig, &mut bcol, trace);
            for (p, sig) in psig.iter_mut().enumerate() {
                let h = self.point_blocks[p]
                    .iter()
                    .fold(0u64, |h, &b| h.wrapping_add(mix(bcol[b as usize] as u64 ^ 0x5bd1_e995)));
                *sig = mix(h ^ mix(colors[p] as u64));
            }
            let mut newc = vec![0u32; self.n];
            rank_signatures(&psig, &mut newc, trace);
            let nc = count_colors(&newc);
            *colors = newc;
            if nc == ncolors {
                break;
            }
            ncolors = nc;
        }
    }

    /// Does the permutation (with suitable scalars for q > 2) map this code onto `other`?
    fn leaf(&self, other: &Structure<W>, perm: &[usize]) -> Option<MonomialMap> {
        let f = W::FIELD;
        if f == FieldSpec::F2 {
            let ok = self.basis.iter().all(|g| {
                let v = g.permute(perm);
                other.dual.iter().all(|h| dot(&v, h, self.n).is_zero())
            });
            return ok.then(|| MonomialMap { perm: perm.to_vec(), scalars: vec![FieldElem::ONE; self.n] });
        }
        let scalars = monomial_scalars(&self.basis, &other.dual, perm, self.n)?;
        Some(MonomialMap { perm: perm.to_vec(), scalars })
    }
}

fn count_colors(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn mix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Replace each signature by its rank among the distinct signatures.
fn rank_signatures(sigs: &[u64], out: &mut [u32], trace: &mut Vec<u64>) {
    let mut idx: Vec<u32> = (0..sigs.len() as u32).collect();
    idx.sort_unstable_by_key(|&a| sigs[a as usize]);
    let mut rank = 0u32;
    let mut i = 0;
    while i < idx.len() {
        let s = sigs[idx[i] as usize];
        let mut j = i;
        while j < idx.len() && sigs[idx[j] as usize] == s {
            out[idx[j] as usize] = rank;
            j += 1;
        }
        trace.push((j - i) as u64);
        trace.push(s);
        rank += 1;
        i = j;
    }
    trace.push(u64::MAX);
}

fn dot<W: Word>(a: &W, b: &W, n: usize) -> FieldElem {
    let f = W::FIELD;
    if f == FieldSpec::F2 {
        return FieldElem(((a.support() & b.support()).count_ones() & 1) as u8);
    }
    let mut s = FieldElem::ZERO;
    let common = a.support() & b.support();
    let mut x = common;
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        debug_assert!(i < n);
        s = f.add(s, f.mul(a.get(i), b.get(i)));
        x &= x - 1;
    }
    s
}

/// Scalars λ (all nonzero) with Σ_j h[perm j]·λ_j·g_j = 0 for every basis row g and parity row h.
fn monomial_scalars<W: Word>(basis: &[W], dual: &[W], perm: &[usize], n: usize) -> Option<Vec<FieldElem>> {
    let f = W::FIELD;
    let mut eqs: Vec<W> = Vec::with_capacity(basis.len() * dual.len());
    for g in basis {
        for h in dual {
            let mut e = W::zero();
            let mut x = g.support();
            while x != 0 {
                let j = x.trailing_zeros() as usize;
                let c = f.mul(h.get(perm[j]), g.get(j));
                if !c.is_zero() {
                    e.set(j, c);
                }
                x &= x - 1;
            }
            if !e.is_zero() {
                eqs.push(e);
            }
        }
    }
    let null = nullspace(&mut eqs, n);
    nonzero_vector_in(&null, n, f)
}

/// Basis of {λ : E λ = 0}.
fn nullspace<W: Word>(eqs: &mut Vec<W>, n: usize) -> Vec<Vec<FieldElem>> {
    let f = W::FIELD;
    let piv = packed::rref(eqs, n);
    let mut out = Vec::new();
    for j in (0..n).filter(|j| !piv.contains(j)) {
        let mut v = vec![FieldElem::ZERO; n];
        v[j] = FieldElem::ONE;
        for (row, &p) in eqs.iter().zip(&piv) {
            v[p] = f.neg(row.get(j));
        }
        out.push(v);
    }
    out
}

/// Some vector of the span with no zero coordinate.
fn nonzero_vector_in(basis: &[Vec<FieldElem>], n: usize, f: FieldSpec) -> Option<Vec<FieldElem>> {
    if basis.is_empty() {
        return None;
    }
    let dim = basis.len();
    let q = f.q() as u64;
    let total = q.checked_pow(dim as u32).unwrap_or(u64::MAX).min(1 << 20);
    // try all-ones combination first, then the rest
    let ones = vec![FieldElem::ONE; dim];
    let candidates = std::iter::once(ones).chain((1..total).map(|mut t| {
        (0..dim)
            .map(|_| {
                let c = FieldElem((t % q) as u8);
                t /= q;
                c
            })
            .collect()
    }));
    for coef in candidates {
        let mut v = vec![FieldElem::ZERO; n];
        for (c, b) in coef.iter().zip(basis) {
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
        if v.iter().all(|c| !c.is_zero()) {
            return Some(v);
        }
    }
    None
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let mut c = colors.to_vec();
    c[v] = count_colors(colors) as u32;
    c
}

/// Smallest non-singleton cell, ties broken by colour.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let mut cells = std::collections::BTreeMap::<u32, Vec<usize>>::new();
    for (p, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(p);
    }
    cells.into_values().filter(|v| v.len() > 1).min_by_key(|v| v.len())
}

fn discrete_map(c1: &[u32], c2: &[u32]) -> Vec<usize> {
    let mut pos = vec![0usize; c2.len()];
    for (p, &c) in c2.iter().enumerate() {
        pos[c as usize] = p;
    }
    c1.iter().map(|&c| pos[c as usize]).collect()
}

struct Search<'a, W: Word> {
    s1: &'a Structure<W>,
    s2: &'a Structure<W>,
    nodes: u64,
    budget: u64,
}

impl<W: Word> Search<'_, W> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Undecided(format!("search exceeded {} nodes", self.budget)));
        }
        Ok(())
    }

    /// Find a map from s1 to s2 extending the colour correspondence c1 → c2.
    fn find(&mut self, c1: &[u32], c2: &[u32]) -> Result<Option<MonomialMap>> {
        self.tick()?;
        let Some(cell) = target_cell(c1) else {
            let perm = discrete_map(c1, c2);
            return Ok(self.s1.leaf(self.s2, &perm));
        };
        let v = cell[0];
        let color = c1[v];
        let mut t1 = Vec::new();
        let mut a = individualize(c1, v);
        self.s1.refine(&mut a, &mut t1);
        for w in (0..c2.len()).filter(|&w| c2[w] == color) {
            let mut t2 = Vec::new();
            let mut b = individualize(c2, w);
            self.s2.refine(&mut b, &mut t2);
            if t1 != t2 {
                continue;
            }
            if let Some(m) = self.find(&a, &b)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }
}

fn initial<W: Word>(s: &Structure<W>) -> (Vec<u32>, Vec<u64>) {
    let mut c = vec![0u32; s.n];
    let mut t = Vec::new();
    s.refine(&mut c, &mut t);
    (c, t)
}

/// A code with its incidence structure and equitable colouring, ready for
/// repeated equivalence tests.
pub(crate) struct Prepared<W: Word> {
    s: Structure<W>,
    colors: Vec<u32>,
    trace: Vec<u64>,
    pub fingerprint: CodeFingerprint,
}

pub(crate) fn prepare<W: Word>(d: &FieldCode, opts: &EquivOptions) -> Result<Prepared<W>> {
    let s = Structure::<W>::build(d, opts)?;
    let (colors, trace) = initial(&s);
    let mut h = Fnv::new();
    h.push(s.horizon as u64);
    h.push(s.blocks.len() as u64);
    for &x in &trace {
        h.push(x);
    }
    let fingerprint = CodeFingerprint {
        n: d.n(),
        k: d.k(),
        d: s.counts.iter().skip(1).position(|&c| c != 0).map_or(d.n() + 1, |i| i + 1),
        enum_prefix: s.counts.clone(),
        refinement_signature: h.0,
    };
    Ok(Prepared { s, colors, trace, fingerprint })
}

impl<W: Word> Prepared<W> {
    pub(crate) fn code(&self) -> &FieldCode {
        &self.s.code
    }
}

/// Equivalence of two prepared codes; the map sends `a` onto `b`.
pub(crate) fn prepared_equivalent<W: Word>(
    a: &Prepared<W>,
    b: &Prepared<W>,
    opts: &EquivOptions,
) -> Result<Option<MonomialMap>> {
    if a.s.code == b.s.code {
        return Ok(Some(MonomialMap::identity(a.s.n)));
    }
    if a.fingerprint != b.fingerprint || a.trace != b.trace {
        return Ok(None);
    }
    let mut search = Search { s1: &a.s, s2: &b.s, nodes: 0, budget: opts.node_budget };
    let found = search.find(&a.colors, &b.colors)?;
    if let Some(m) = &found {
        // never trust the search alone
        if m.apply(&a.s.code) != b.s.code {
            return Err(Error::Construction("equivalence witness failed verification".into()));
        }
    }
    Ok(found)
}

fn equivalent_w<W: Word>(d1: &FieldCode, d2: &FieldCode, opts: &EquivOptions) -> Result<Option<MonomialMap>> {
    let a = prepare::<W>(d1, opts)?;
    let b = prepare::<W>(d2, opts)?;
    prepared_equivalent(&a, &b, opts)
}

/// Decide monomial equivalence (permutation equivalence over F_2).
/// A returned map is verified to send `d1` onto `d2`.
pub fn are_equivalent(d1: &FieldCode, d2: &FieldCode, opts: &EquivOptions) -> Result<Option<MonomialMap>> {
    if d1.field() != d2.field() || d1.n() != d2.n() || d1.k() != d2.k() {
        return Ok(None);
    }
    if d1 == d2 {
        return Ok(Some(MonomialMap::identity(d1.n())));
    }
    if d1.k() == 0 {
        return Ok(Some(MonomialMap::identity(d1.n())));
    }
    with_word!(d1.field(), W => equivalent_w::<W>(d1, d2, opts))
}

fn fingerprint_w<W: Word>(d: &FieldCode, opts: &EquivOptions) -> Result<CodeFingerprint> {
    Ok(prepare::<W>(d, opts)?.fingerprint)
}

pub fn fingerprint(d: &FieldCode, opts: &EquivOptions) -> Result<CodeFingerprint> {
    if d.k() == 0 {
        return Ok(CodeFingerprint { n: d.n(), k: 0, d: d.n() + 1, enum_prefix: vec![1], refinement_signature: 0 });
    }
    with_word!(d.field(), W => fingerprint_w::<W>(d, opts))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn aut_order_w<W: Word>(d: &FieldCode, opts: &EquivOptions) -> Result<u128> {
    let s = Structure::<W>::build(d, opts)?;
    let n = s.n;
    let overflow = || Error::Resource { required: u128::MAX, budget: u128::MAX };
    let (mut colors, _) = initial(&s);
    let mut order: u128 = 1;
    let mut nodes = 0u64;
    while let Some(cell) = target_cell(&colors) {
        let v = cell[0];
        let mut t1 = Vec::new();
        let mut a = individualize(&colors, v);
        s.refine(&mut a, &mut t1);
        let mut uf = UnionFind((0..n).collect());
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell[1..] {
            if uf.find(w) == uf.find(v) || failed.iter().any(|&f| uf.find(f) == uf.find(w)) {
                continue;
            }
            let mut t2 = Vec::new();
            let mut b = individualize(&colors, w);
            s.refine(&mut b, &mut t2);
            let found = if t1 == t2 {
                let mut search = Search { s1: &s, s2: &s, nodes: 0, budget: opts.node_budget.saturating_sub(nodes) };
                let r = search.find(&a, &b);
                nodes += search.nodes;
                r?
            } else {
                None
            };
            match found {
                Some(m) => {
                    for (i, &j) in m.perm.iter().enumerate() {
                        uf.union(i, j);
                    }
                }
                None => failed.push(w),
            }
        }
        let root = uf.find(v);
        let orbit = cell.iter().filter(|&&w| uf.find(w) == root).count() as u128;
        order = order.checked_mul(orbit).ok_or_else(overflow)?;
        colors = a;
    }
    let diagonal = diagonal_automorphisms(&s)?;
    order.checked_mul(diagonal).ok_or_else(overflow)
}

/// Number of invertible diagonal maps fixing the code.
fn diagonal_automorphisms<W: Word>(s: &Structure<W>) -> Result<u128> {
    let f = W::FIELD;
    if f == FieldSpec::F2 {
        return Ok(1);
    }
    let id: Vec<usize> = (0..s.n).collect();
    let mut eqs = Vec::new();
    for g in &s.basis {
        for h in &s.dual {
            let mut e = W::zero();
            for j in 0..s.n {
                let c = f.mul(h.get(j), g.get(j));
                if !c.is_zero() {
                    e.set(id[j], c);
                }
            }
            if !e.is_zero() {
                eqs.push(e);
            }
        }
    }
    let null = nullspace(&mut eqs, s.n);
    let q = f.q() as u128;
    let dim = null.len() as u32;
    if q.pow(dim) > 1 << 22 {
        return Err(Error::Resource { required: q.pow(dim), budget: 1 << 22 });
    }
    let mut count = 0u128;
    for mut t in 0..q.pow(dim) {
        let mut v = vec![FieldElem::ZERO; s.n];
        for b in &null {
            let c = FieldElem((t % q) as u8);
            t /= q;
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        if v.iter().all(|c| !c.is_zero()) {
            count += 1;
        }
    }
    Ok(count)
}

/// |Aut(D)|: permutation automorphisms over F_2, monomial automorphisms otherwise.
pub fn automorphism_order(d: &FieldCode, opts: &EquivOptions) -> Result<u128> {
    if d.n() > opts.max_aut_len {
        return Err(Error::Resource { required: d.n() as u128, budget: opts.max_aut_len as u128 });
    }
    if d.k() == 0 {
        return Err(Error::Domain("automorphism group of the zero code is not computed".into()));
    }
    with_word!(d.field(), W => aut_order_w::<W>(d, opts))
}

struct FpfSearch<'a, W: Word> {
    s: &'a Structure<W>,
    colors: Vec<u32>,
    p: usize,
    sigma: Vec<usize>,
    nodes: u64,
    budget: u64,
}

const UNSET: usize = usize::MAX;

impl<W: Word> FpfSearch<'_, W> {
    fn blocks_ok(&self) -> bool {
        let assigned = self.sigma.iter().enumerate().fold(0u128, |m, (i, &x)| if x != UNSET { m | (1 << i) } else { m });
        self.s.blocks.iter().all(|&b| {
            if b & !assigned != 0 {
                return true;
            }
            let mut img = 0u128;
            let mut x = b;
            while x != 0 {
                let i = x.trailing_zeros() as usize;
                img |= 1 << self.sigma[i];
                x &= x - 1;
            }
            self.s.block_set.contains(&img)
        })
    }

    fn rec(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Undecided(format!("fixed-point-free search exceeded {} nodes", self.budget)));
        }
        let Some(a) = self.sigma.iter().position(|&x| x == UNSET) else {
            let perm = self.sigma.clone();
            let ok = self.s.basis.iter().all(|g| {
                let v = g.permute(&perm);
                self.s.dual.iter().all(|h| dot(&v, h, self.s.n).is_zero())
            });
            return Ok(ok);
        };
        let free: Vec<usize> = (0..self.s.n)
            .filter(|&b| b != a && self.sigma[b] == UNSET && self.colors[b] == self.colors[a])
            .collect();
        let mut cycle = vec![a];
        self.extend_cycle(&free, &mut cycle)
    }

    fn extend_cycle(&mut self, free: &[usize], cycle: &mut Vec<usize>) -> Result<bool> {
        if cycle.len() == self.p {
            for i in 0..self.p {
                self.sigma[cycle[i]] = cycle[(i + 1) % self.p];
            }
            let res = if self.blocks_ok() { self.rec()? } else { false };
            if !res {
                for &c in cycle.iter() {
                    self.sigma[c] = UNSET;
                }
            }
            return Ok(res);
        }
        for &b in free {
            if cycle.contains(&b) {
                continue;
            }
            cycle.push(b);
            if self.extend_cycle(free, cycle)? {
                return Ok(true);
            }
            cycle.pop();
        }
        Ok(false)
    }
}

/// Is there a fixed-point-free permutation automorphism of prime order p?
/// Equivalently: can the coordinates be reordered so the code is invariant under T^{n/p}.
pub fn has_fpf_automorphism_order_p(d: &FieldCode, p: usize, opts: &EquivOptions) -> Result<bool> {
    if p < 2 || d.n() % p != 0 {
        return Err(Error::Domain(format!("{p} does not divide the length {}", d.n())));
    }
    if d.is_shift_invariant(d.n() / p) {
        return Ok(true);
    }
    with_word!(d.field(), W => {
        let s = Structure::<W>::build(d, opts)?;
        let (colors, _) = initial(&s);
        let mut search = FpfSearch { s: &s, colors, p, sigma: vec![UNSET; d.n()], nodes: 0, budget: opts.node_budget };
        search.rec()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(field: FieldSpec, n: usize, rows: &[&[u8]]) -> FieldCode {
        let rows: Vec<Vec<FieldElem>> = rows.iter().map(|r| r.iter().map(|&x| FieldElem(x)).collect()).collect();
        FieldCode::from_rows(field, n, &rows).unwrap()
    }

    #[test]
    fn tiny_codes() {
        let opts = EquivOptions::default();
        let d = code(FieldSpec::F2, 2, &[&[1, 1]]);
        assert_eq!(automorphism_order(&d, &opts).unwrap(), 2);
        assert!(are_equivalent(&d, &d, &opts).unwrap().is_some());
    }

    #[test]
    fn permuted_copy_is_equivalent() {
        let opts = EquivOptions::default();
        let d = code(FieldSpec::F2, 8, &[
            &[1, 0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1, 1, 0],
        ]);
        let perm = vec![3, 7, 1, 0, 6, 2, 5, 4];
        let e = d.permuted(&perm);
        let m = are_equivalent(&d, &e, &opts).unwrap().unwrap();
        assert_eq!(m.apply(&d), e);
        assert_eq!(fingerprint(&d, &opts).unwrap(), fingerprint(&e, &opts).unwrap());
        // extended Hamming code: |AGL(3,2)| = 1344
        assert_eq!(automorphism_order(&d, &opts).unwrap(), 1344);
    }

    #[test]
    fn monomial_copy_is_equivalent() {
        let opts = EquivOptions::default();
        let d = code(FieldSpec::F3, 6, &[&[1, 0, 0, 1, 2, 1], &[0, 1, 0, 2, 2, 0], &[0, 0, 1, 1, 1, 2]]);
        let perm = vec![2, 0, 1, 5, 4, 3];
        let sc: Vec<FieldElem> = [1u8, 2, 2, 1, 2, 1].iter().map(|&x| FieldElem(x)).collect();
        let e = d.monomial_image(&perm, &sc);
        let m = are_equivalent(&d, &e, &opts).unwrap().unwrap();
        assert_eq!(m.apply(&d), e);
        let other = code(FieldSpec::F3, 6, &[&[1, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 0], &[0, 0, 1, 0, 0, 1]]);
        assert!(are_equivalent(&d, &other, &opts).unwrap().is_none());
    }

    #[test]
    fn inequivalent_binary() {
        let opts = EquivOptions::default();
        let a = code(FieldSpec::F2, 4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let b = code(FieldSpec::F2, 4, &[&[1, 1, 0, 0], &[0, 1, 1, 0]]);
        assert!(are_equivalent(&a, &b, &opts).unwrap().is_none());
        assert_eq!(automorphism_order(&a, &opts).unwrap(), 8);
    }

    #[test]
    fn fpf_errors_and_trivial_cases() {
        let opts = EquivOptions::default();
        let a = code(FieldSpec::F2, 4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(has_fpf_automorphism_order_p(&a, 3, &opts).is_err());
        assert!(has_fpf_automorphism_order_p(&a, 2, &opts).unwrap());
    }
}
