//! The quotient ring R = F_q[Y]/(Y^m − 1).
//!
//! Elements carry their coefficient vectors inline (constant term first) so
//! they are `Copy` and cheap to hash. The ordering used everywhere is
//! lexicographic on `(c_0, c_1, …)`.

use crate::error::{domain, Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

/// Largest supported m.
pub const MAX_M: usize = 8;

/// Default cap on the candidate space scanned by [`RingSpec::enumerate_solutions`].
pub const DEFAULT_ENUM_BUDGET: u128 = 1 << 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: FieldSpec,
    m: u8,
    cyclotomic_ok: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    c: [FieldElem; MAX_M],
    m: u8,
}

/// Image of a ring element under R ≅ F_q[Y]/(Y−1) ⊕ F_q[Y]/(Φ_p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrtPair {
    pub eval1: FieldElem,
    pub eval_phi: Vec<FieldElem>,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multiplicative order of q modulo m (m ≥ 2, gcd(q,m) = 1).
fn mult_order(q: u32, m: u32) -> u32 {
    let mut x = q % m;
    let mut k = 1;
    while x != 1 {
        x = x * q % m;
        k += 1;
    }
    k
}

impl RingSpec {
    pub fn new(field: FieldSpec, m: usize) -> Result<RingSpec> {
        if m == 0 || m > MAX_M {
            return domain(format!("m = {m} outside 1..={MAX_M}"));
        }
        let m32 = m as u32;
        if gcd(m32, field.characteristic()) != 1 {
            return domain(format!("m = {m} is not coprime to the characteristic of {field}"));
        }
        let cyclotomic_ok = is_prime(m32) && mult_order(field.q(), m32) == m32 - 1;
        Ok(RingSpec { field, m: m as u8, cyclotomic_ok })
    }

    pub fn from_params(q: u32, m: usize) -> Result<RingSpec> {
        RingSpec::new(FieldSpec::from_order(q)?, m)
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// m is a prime p and q generates (Z/p)^*, so Y^m − 1 = (Y − 1)Φ_p(Y) with both factors irreducible.
    #[inline]
    pub fn cyclotomic_ok(&self) -> bool {
        self.cyclotomic_ok
    }

    pub fn size(&self) -> u64 {
        (self.field.q() as u64).pow(self.m as u32)
    }

    pub fn zero(&self) -> RingElem {
        RingElem { c: [FieldElem::ZERO; MAX_M], m: self.m }
    }

    pub fn one(&self) -> RingElem {
        self.scalar(FieldElem::ONE)
    }

    pub fn scalar(&self, a: FieldElem) -> RingElem {
        let mut r = self.zero();
        r.c[0] = a;
        r
    }

    pub fn minus_one(&self) -> RingElem {
        self.scalar(self.field.minus_one())
    }

    pub fn y_pow(&self, k: usize) -> RingElem {
        let mut r = self.zero();
        r.c[k % self.m()] = FieldElem::ONE;
        r
    }

    /// 1 + Y + … + Y^{m−1}.
    pub fn phi(&self) -> RingElem {
        let mut r = self.zero();
        for i in 0..self.m() {
            r.c[i] = FieldElem::ONE;
        }
        r
    }

    pub fn elem(&self, coeffs: &[u8]) -> Result<RingElem> {
        if coeffs.len() != self.m() {
            return domain(format!("expected {} coefficients, got {}", self.m, coeffs.len()));
        }
        let mut r = self.zero();
        for (i, &v) in coeffs.iter().enumerate() {
            r.c[i] = self.field.elem(v)?;
        }
        Ok(r)
    }

    pub fn from_coeffs(&self, coeffs: &[FieldElem]) -> RingElem {
        let mut r = self.zero();
        for (i, &v) in coeffs.iter().enumerate() {
            let idx = i % self.m();
            r.c[idx] = self.field.add(r.c[idx], v);
        }
        r
    }

    pub fn check(&self, a: &RingElem) -> Result<()> {
        if a.m != self.m {
            return domain("ring element from a different ring");
        }
        Ok(())
    }

    #[inline]
    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = self.field;
        let mut r = *a;
        for i in 0..self.m() {
            r.c[i] = f.add(a.c[i], b.c[i]);
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: &RingElem) -> RingElem {
        let mut r = *a;
        for i in 0..self.m() {
            r.c[i] = self.field.neg(a.c[i]);
        }
        r
    }

    #[inline]
    pub fn scale(&self, s: FieldElem, a: &RingElem) -> RingElem {
        let mut r = *a;
        for i in 0..self.m() {
            r.c[i] = self.field.mul(s, a.c[i]);
        }
        r
    }

    /// Cyclic convolution mod Y^m − 1.
    #[inline]
    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = self.field;
        let m = self.m();
        let mut r = self.zero();
        for i in 0..m {
            if a.c[i].is_zero() {
                continue;
            }
            for j in 0..m {
                let k = if i + j >= m { i + j - m } else { i + j };
                r.c[k] = f.add(r.c[k], f.mul(a.c[i], b.c[j]));
            }
        }
        r
    }

    /// Y ↦ Y^{-1}: coefficient i moves to (m − i) mod m.
    #[inline]
    pub fn conj(&self, a: &RingElem) -> RingElem {
        let m = self.m();
        let mut r = *a;
        for i in 1..m {
            r.c[m - i] = a.c[i];
        }
        r
    }

    /// a · conj(a).
    pub fn norm(&self, a: &RingElem) -> RingElem {
        self.mul(a, &self.conj(a))
    }

    pub fn eval_at_one(&self, a: &RingElem) -> FieldElem {
        a.coeffs().iter().fold(FieldElem::ZERO, |s, &c| self.field.add(s, c))
    }

    fn modulus_poly(&self) -> Vec<FieldElem> {
        let mut p = vec![FieldElem::ZERO; self.m() + 1];
        p[0] = self.field.minus_one();
        p[self.m()] = FieldElem::ONE;
        p
    }

    fn gcd_with_modulus(&self, a: &RingElem) -> (Vec<FieldElem>, Vec<FieldElem>) {
        let (g, s, _) = poly::ext_gcd(self.field, a.coeffs(), &self.modulus_poly());
        (g, s)
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        let (g, _) = self.gcd_with_modulus(a);
        let unit = g.len() == 1;
        if self.cyclotomic_ok {
            debug_assert_eq!(unit, self.is_unit_by_factors(a));
        }
        unit
    }

    /// a(1) ≠ 0 and Φ_p ∤ a; valid only when `cyclotomic_ok`.
    pub fn is_unit_by_factors(&self, a: &RingElem) -> bool {
        !self.eval_at_one(a).is_zero() && !self.reduce_phi(a).is_zero()
    }

    pub fn inv(&self, a: &RingElem) -> Result<RingElem> {
        let (g, s) = self.gcd_with_modulus(a);
        if g.len() != 1 {
            return domain(format!("{} is not a unit", self.render(a)));
        }
        let r = self.from_coeffs(&s);
        debug_assert_eq!(self.mul(a, &r), self.one());
        Ok(r)
    }

    /// Every element of R in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.size()).map(move |i| self.elem_at(i))
    }

    /// The i-th element in lexicographic order (c_0 is the most significant digit).
    pub fn elem_at(&self, mut i: u64) -> RingElem {
        let q = self.field.q() as u64;
        let mut r = self.zero();
        for j in (0..self.m()).rev() {
            r.c[j] = FieldElem((i % q) as u8);
            i /= q;
        }
        r
    }

    pub fn index_of(&self, a: &RingElem) -> u64 {
        let q = self.field.q() as u64;
        a.coeffs().iter().fold(0, |acc, c| acc * q + c.0 as u64)
    }

    pub fn units(&self) -> Vec<RingElem> {
        self.elements().filter(|a| self.is_unit(a)).collect()
    }

    pub fn hermitian_ip(&self, x: &[RingElem], y: &[RingElem]) -> Result<RingElem> {
        if x.len() != y.len() {
            return domain(format!("length mismatch {} vs {}", x.len(), y.len()));
        }
        Ok(self.hermitian_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn hermitian_unchecked(&self, x: &[RingElem], y: &[RingElem]) -> RingElem {
        let mut s = self.zero();
        for (a, b) in x.iter().zip(y) {
            s = self.add(&s, &self.mul(a, &self.conj(b)));
        }
        s
    }

    // Residue field K = F_q[Y]/(Φ_p). Elements of K are represented as ring
    // elements of degree < m − 1.

    fn require_cyclotomic(&self) -> Result<()> {
        if !self.cyclotomic_ok {
            return Err(Error::Unsupported(format!(
                "Y^{} − 1 does not split into two irreducible factors over {}",
                self.m, self.field
            )));
        }
        Ok(())
    }

    /// a mod Φ_m.
    pub fn reduce_phi(&self, a: &RingElem) -> RingElem {
        let m = self.m();
        let top = a.c[m - 1];
        let mut r = *a;
        for i in 0..m - 1 {
            r.c[i] = self.field.sub(a.c[i], top);
        }
        r.c[m - 1] = FieldElem::ZERO;
        r
    }

    pub fn residue_mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.reduce_phi(&self.mul(a, b))
    }

    pub fn residue_conj(&self, a: &RingElem) -> RingElem {
        self.reduce_phi(&self.conj(a))
    }

    pub fn residue_inv(&self, a: &RingElem) -> Result<RingElem> {
        let a = self.reduce_phi(a);
        let phi: Vec<FieldElem> = vec![FieldElem::ONE; self.m()];
        let (g, s, _) = poly::ext_gcd(self.field, a.coeffs(), &phi);
        if g.len() != 1 {
            return domain("element is zero in the residue ring");
        }
        Ok(self.reduce_phi(&self.from_coeffs(&s)))
    }

    /// Idempotent with e1 ≡ 1 mod (Y − 1) and e1 ≡ 0 mod Φ_p.
    pub fn idempotent_one(&self) -> Result<RingElem> {
        self.require_cyclotomic()?;
        let p_inv = self.field.inv(self.field.from_int(self.m() as i64))?;
        Ok(self.scale(p_inv, &self.phi()))
    }

    pub fn idempotent_phi(&self) -> Result<RingElem> {
        Ok(self.sub(&self.one(), &self.idempotent_one()?))
    }

    pub fn crt_split(&self, a: &RingElem) -> Result<CrtPair> {
        self.require_cyclotomic()?;
        let r = self.reduce_phi(a);
        Ok(CrtPair { eval1: self.eval_at_one(a), eval_phi: r.coeffs()[..self.m() - 1].to_vec() })
    }

    pub fn crt_combine(&self, p: &CrtPair) -> Result<RingElem> {
        self.require_cyclotomic()?;
        if p.eval_phi.len() != self.m() - 1 {
            return domain("residue component has the wrong length");
        }
        let b = self.from_coeffs(&p.eval_phi);
        Ok(self.combine_parts(p.eval1, &b))
    }

    /// a·e1 + b·e2 for a ∈ F_q and b a residue representative.
    pub(crate) fn combine_parts(&self, a: FieldElem, b: &RingElem) -> RingElem {
        let e1 = self.idempotent_one().expect("cyclotomic ring");
        let e2 = self.sub(&self.one(), &e1);
        self.add(&self.scale(a, &e1), &self.mul(b, &e2))
    }

    pub fn crt_mul(&self, a: &CrtPair, b: &CrtPair) -> Result<CrtPair> {
        let x = self.from_coeffs(&a.eval_phi);
        let y = self.from_coeffs(&b.eval_phi);
        let r = self.residue_mul(&x, &y);
        Ok(CrtPair {
            eval1: self.field.mul(a.eval1, b.eval1),
            eval_phi: r.coeffs()[..self.m() - 1].to_vec(),
        })
    }

    pub fn crt_add(&self, a: &CrtPair, b: &CrtPair) -> CrtPair {
        let f = self.field;
        CrtPair {
            eval1: f.add(a.eval1, b.eval1),
            eval_phi: a.eval_phi.iter().zip(&b.eval_phi).map(|(&x, &y)| f.add(x, y)).collect(),
        }
    }

    /// Polynomial text, highest degree first, e.g. `Y^2 + Y + 1` or `w*Y^4 + w^2*Y^3`.
    pub fn render(&self, a: &RingElem) -> String {
        let f = self.field;
        let mut terms = Vec::new();
        for i in (0..self.m()).rev() {
            let c = a.c[i];
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "Y".to_string(),
                _ => format!("Y^{i}"),
            };
            terms.push(match (i, c == FieldElem::ONE) {
                (0, _) => f.symbol(c).to_string(),
                (_, true) => mono,
                _ => format!("{}*{}", f.symbol(c), mono),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn parse(&self, s: &str) -> Result<RingElem> {
        let f = self.field;
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let mut r = self.zero();
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty polynomial".into()));
        }
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(bad(format!("empty term in {s:?}")));
            }
            let (coef, mono) = match term.find('Y') {
                None => (term.as_str(), None),
                Some(pos) => {
                    let coef = term[..pos].trim_end_matches('*');
                    (if coef.is_empty() { "1" } else { coef }, Some(&term[pos + 1..]))
                }
            };
            let c = f.parse_symbol(coef).ok_or_else(|| bad(format!("bad coefficient {coef:?}")))?;
            let deg = match mono {
                None => 0,
                Some("") => 1,
                Some(e) => e
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| bad(format!("bad monomial in {term:?}")))?,
            };
            let idx = deg % self.m();
            r.c[idx] = f.add(r.c[idx], c);
        }
        Ok(r)
    }

    pub fn render_vec(&self, v: &[RingElem]) -> String {
        let parts: Vec<String> = v.iter().map(|a| self.render(a)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn parse_vec(&self, s: &str) -> Result<Vec<RingElem>> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("expected (…) vector, got {s:?}") })?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner.split(',').map(|t| self.parse(t)).collect()
    }

    /// Lazily enumerate all x ∈ R^n with ⟨x, x⟩ = target, in lexicographic order.
    pub fn enumerate_solutions(&self, n: usize, target: RingElem, budget: u128) -> Result<Solutions> {
        self.check(&target)?;
        let required = (self.size() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if required > budget {
            return Err(Error::Resource { required, budget });
        }
        let table = Arc::new(NormTable::new(*self));
        let first = 0..table.elems.len();
        Ok(Solutions::new(table, n, target, first))
    }
}

/// Lookup tables for the norm map x ↦ x·conj(x).
#[derive(Debug)]
pub struct NormTable {
    spec: RingSpec,
    elems: Vec<RingElem>,
    norms: Vec<RingElem>,
    by_norm: HashMap<RingElem, Vec<u32>>,
}

impl NormTable {
    pub fn new(spec: RingSpec) -> NormTable {
        let elems: Vec<RingElem> = spec.elements().collect();
        let norms: Vec<RingElem> = elems.iter().map(|a| spec.norm(a)).collect();
        let mut by_norm: HashMap<RingElem, Vec<u32>> = HashMap::new();
        for (i, nm) in norms.iter().enumerate() {
            by_norm.entry(*nm).or_default().push(i as u32);
        }
        NormTable { spec, elems, norms, by_norm }
    }

    pub fn elements_with_norm(&self, target: &RingElem) -> impl Iterator<Item = RingElem> + '_ {
        self.by_norm.get(target).into_iter().flatten().map(move |&i| self.elems[i as usize])
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// Iterator returned by [`RingSpec::enumerate_solutions`].
pub struct Solutions {
    table: Arc<NormTable>,
    n: usize,
    target: RingElem,
    first: Range<usize>,
    idx: Vec<usize>,
    partial: Vec<RingElem>,
    last: Vec<u32>,
    last_pos: usize,
    started: bool,
    done: bool,
}

impl Solutions {
    fn new(table: Arc<NormTable>, n: usize, target: RingElem, first: Range<usize>) -> Solutions {
        let zero = table.spec.zero();
        Solutions {
            table,
            n,
            target,
            idx: vec![0; n.saturating_sub(1)],
            partial: vec![zero; n],
            first,
            last: Vec::new(),
            last_pos: 0,
            started: false,
            done: false,
        }
    }

    /// Restrict the first coordinate to the given index range of lexicographic element order,
    /// so disjoint ranges can be scanned by independent workers.
    pub fn with_first_range(mut self, range: Range<usize>) -> Solutions {
        let end = range.end.min(self.table.len());
        self.first = range.start.min(end)..end;
        self
    }

    fn recompute_from(&mut self, k: usize) {
        let spec = self.table.spec;
        for j in k..self.n - 1 {
            let prev = if j == 0 { spec.zero() } else { self.partial[j - 1] };
            self.partial[j] = spec.add(&prev, &self.table.norms[self.idx[j]]);
        }
        let need = if self.n == 1 {
            self.target
        } else {
            spec.sub(&self.target, &self.partial[self.n - 2])
        };
        self.last = self.table.by_norm.get(&need).cloned().unwrap_or_default();
        self.last_pos = 0;
    }

    /// Advance the odometer over the first n−1 coordinates; false when exhausted.
    fn advance_prefix(&mut self) -> bool {
        let len = self.table.len();
        let mut k = self.n - 1;
        while k > 0 {
            k -= 1;
            let limit = if k == 0 { self.first.end } else { len };
            if self.idx[k] + 1 < limit {
                self.idx[k] += 1;
                for j in k + 1..self.n - 1 {
                    self.idx[j] = 0;
                }
                self.recompute_from(k);
                return true;
            }
        }
        false
    }

    fn current(&self, last: u32) -> Vec<RingElem> {
        let mut v: Vec<RingElem> = self.idx.iter().map(|&i| self.table.elems[i]).collect();
        v.push(self.table.elems[last as usize]);
        v
    }
}

impl Iterator for Solutions {
    type Item = Vec<RingElem>;

    fn next(&mut self) -> Option<Vec<RingElem>> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return self.target.is_zero().then(Vec::new);
        }
        if !self.started {
            self.started = true;
            if self.n == 1 {
                self.recompute_from(0);
                let first = self.first.clone();
                self.last.retain(|&i| first.contains(&(i as usize)));
            } else {
                if self.first.is_empty() {
                    self.done = true;
                    return None;
                }
                self.idx[0] = self.first.start;
                self.recompute_from(0);
            }
        }
        loop {
            if self.last_pos < self.last.len() {
                let l = self.last[self.last_pos];
                self.last_pos += 1;
                return Some(self.current(l));
            }
            if self.n == 1 || !self.advance_prefix() {
                self.done = true;
                return None;
            }
        }
    }
}

impl RingElem {
    #[inline]
    pub fn coeffs(&self) -> &[FieldElem] {
        &self.c[..self.m as usize]
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.c[i]
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// Degree as a polynomial of degree < m; None for zero.
    pub fn degree(&self) -> Option<usize> {
        (0..self.m()).rev().find(|&i| !self.c[i].is_zero())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<u8> = self.coeffs().iter().map(|c| c.0).collect();
        write!(f, "R{v:?}")
    }
}

/// Dense polynomial helpers over F_q, index = degree.
pub(crate) mod poly {
    use crate::gf::{FieldElem, FieldSpec};

    pub fn trim(mut a: Vec<FieldElem>) -> Vec<FieldElem> {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    pub fn divrem(f: FieldSpec, a: &[FieldElem], b: &[FieldElem]) -> (Vec<FieldElem>, Vec<FieldElem>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        assert!(!b.is_empty(), "division by zero polynomial");
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = f.inv_nonzero(*b.last().unwrap());
        let mut quot = vec![FieldElem::ZERO; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let coef = f.mul(*r.last().unwrap(), lead_inv);
            quot[shift] = coef;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(coef, bc));
            }
            r = trim(r);
        }
        (trim(quot), r)
    }

    pub fn mul(f: FieldSpec, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![FieldElem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = f.add(r[i + j], f.mul(x, y));
            }
        }
        trim(r)
    }

    pub fn sub(f: FieldSpec, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        let n = a.len().max(b.len());
        let g = |v: &[FieldElem], i: usize| v.get(i).copied().unwrap_or(FieldElem::ZERO);
        trim((0..n).map(|i| f.sub(g(a, i), g(b, i))).collect())
    }

    /// Returns (g, s, t) with s·a + t·b = g and g monic (or zero).
    pub fn ext_gcd(
        f: FieldSpec,
        a: &[FieldElem],
        b: &[FieldElem],
    ) -> (Vec<FieldElem>, Vec<FieldElem>, Vec<FieldElem>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![FieldElem::ONE], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![FieldElem::ONE]);
        while !r1.is_empty() {
            let (q, r) = divrem(f, &r0, &r1);
            let s2 = sub(f, &s0, &mul(f, &q, &s1));
            let t2 = sub(f, &t0, &mul(f, &q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if let Some(&lead) = r0.last() {
            let inv = f.inv_nonzero(lead);
            let sc = |v: Vec<FieldElem>| -> Vec<FieldElem> { v.into_iter().map(|c| f.mul(c, inv)).collect() };
            (sc(r0), sc(s0), sc(t0))
        } else {
            (r0, s0, t0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r23() -> RingSpec {
        RingSpec::from_params(2, 3).unwrap()
    }

    #[test]
    fn basic_products() {
        let r = r23();
        assert_eq!(r.mul(&r.y_pow(1), &r.y_pow(2)), r.one());
        let a = r.elem(&[1, 1, 0]).unwrap();
        assert!(r.mul(&a, &r.phi()).is_zero());
        let r35 = RingSpec::from_params(3, 5).unwrap();
        let a = r35.elem(&[0, 0, 0, 0, 2]).unwrap();
        assert_eq!(r35.mul(&a, &r35.y_pow(1)), r35.scalar(FieldElem(2)));
    }

    #[test]
    fn conjugation() {
        let r = r23();
        assert_eq!(r.conj(&r.y_pow(1)), r.y_pow(2));
        assert_eq!(r.conj(&r.one()), r.one());
        let s = r.elem(&[0, 1, 1]).unwrap();
        assert_eq!(r.conj(&s), s);
    }

    #[test]
    fn units_small() {
        let r = r23();
        assert!(!r.is_unit(&r.elem(&[1, 1, 0]).unwrap()));
        assert!(r.is_unit(&r.y_pow(1)));
        assert_eq!(r.inv(&r.y_pow(1)).unwrap(), r.y_pow(2));
        assert_eq!(r.units().len(), 3);
        assert!(r.inv(&r.zero()).is_err());
    }

    #[test]
    fn cyclotomic_flags() {
        let ok = |q, m| RingSpec::from_params(q, m).unwrap().cyclotomic_ok();
        assert!(ok(2, 3) && ok(2, 5) && ok(3, 5) && ok(5, 7) && ok(3, 7));
        assert!(!ok(2, 7) && !ok(4, 3) && !ok(4, 5) && !ok(2, 1));
        assert!(RingSpec::from_params(2, 4).is_err());
        assert!(RingSpec::from_params(3, 6).is_err());
    }

    #[test]
    fn crt_examples() {
        let r = r23();
        let s = r.crt_split(&r.y_pow(1)).unwrap();
        assert_eq!(s.eval1, FieldElem::ONE);
        assert_eq!(s.eval_phi, vec![FieldElem(0), FieldElem(1)]);
        let s = r.crt_split(&r.phi()).unwrap();
        assert_eq!(s, CrtPair { eval1: FieldElem::ONE, eval_phi: vec![FieldElem(0); 2] });
        for a in r.elements() {
            assert_eq!(r.crt_combine(&r.crt_split(&a).unwrap()).unwrap(), a);
        }
        let r43 = RingSpec::from_params(4, 3).unwrap();
        assert!(matches!(r43.crt_split(&r43.one()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn hermitian_examples() {
        let r = r23();
        let one = r.one();
        assert!(r.hermitian_ip(&[one, one], &[one, one]).unwrap().is_zero());
        assert!(r.hermitian_ip(&[one, one], &[r.zero(), r.zero()]).unwrap().is_zero());
        assert!(r.hermitian_ip(&[one], &[one, one]).is_err());
        let r57 = RingSpec::from_params(5, 7).unwrap();
        let v = [r57.one(), r57.scalar(FieldElem(2))];
        assert!(r57.hermitian_ip(&v, &v).unwrap().is_zero());
    }

    #[test]
    fn solutions_against_brute_force() {
        let r = r23();
        let target = r.one();
        let mut brute = Vec::new();
        for a in r.elements() {
            for b in r.elements() {
                if r.hermitian_ip(&[a, b], &[a, b]).unwrap() == target {
                    brute.push(vec![a, b]);
                }
            }
        }
        let got: Vec<_> = r.enumerate_solutions(2, target, DEFAULT_ENUM_BUDGET).unwrap().collect();
        assert_eq!(got, brute);
        assert_eq!(got.len(), 12);

        let empty: Vec<_> = r.enumerate_solutions(0, r.zero(), 1).unwrap().collect();
        assert_eq!(empty, vec![Vec::<RingElem>::new()]);
        assert!(matches!(r.enumerate_solutions(10, target, 1 << 27), Err(Error::Resource { .. })));
    }

    #[test]
    fn solutions_partitioned() {
        let r = RingSpec::from_params(3, 5).unwrap();
        let t = r.minus_one();
        let all: Vec<_> = r.enumerate_solutions(2, t, DEFAULT_ENUM_BUDGET).unwrap().collect();
        let mut parts = Vec::new();
        for chunk in [0..50usize, 50..200, 200..243] {
            parts.extend(r.enumerate_solutions(2, t, DEFAULT_ENUM_BUDGET).unwrap().with_first_range(chunk));
        }
        assert_eq!(all, parts);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for x in &all {
            assert_eq!(r.hermitian_ip(x, x).unwrap(), t);
        }
    }

    #[test]
    fn text_roundtrip() {
        let r = RingSpec::from_params(4, 5).unwrap();
        let a = r.elem(&[1, 0, 0, 3, 2]).unwrap();
        assert_eq!(r.render(&a), "w*Y^4 + w^2*Y^3 + 1");
        assert_eq!(r.parse("w*Y^4 + w^2*Y^3 + 1").unwrap(), a);
        assert_eq!(r.parse("wY^4+w2Y^3+1").unwrap(), a);
        let r2 = r23();
        assert_eq!(r2.render(&r2.phi()), "Y^2 + Y + 1");
        assert_eq!(r2.render(&r2.zero()), "0");
        let v = vec![r2.phi(), r2.zero(), r2.y_pow(1)];
        assert_eq!(r2.parse_vec(&r2.render_vec(&v)).unwrap(), v);
        assert!(r2.parse("Y^").is_err());
        assert!(r2.parse("3*Y").is_err());
    }
}
