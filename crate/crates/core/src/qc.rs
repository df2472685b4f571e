//! Field codes and the correspondence between codes over R and
//! quasi-cyclic codes over F_q.
//!
//! Coordinate layout: position `i·ℓ + j` carries coefficient `i` of ring
//! coordinate `j`.

use crate::error::{domain, Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::packed::{self, with_word, Word};
use crate::rcode::RingCode;
use crate::ring::{RingElem, RingSpec};
use std::hash::{Hash, Hasher};

/// A linear code over F_q, stored as a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct FieldCode {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
    qc_index: Option<usize>,
}

impl PartialEq for FieldCode {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.n == o.n && self.rows == o.rows
    }
}

impl Eq for FieldCode {}

impl Hash for FieldCode {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.field.hash(h);
        self.n.hash(h);
        self.rows.hash(h);
    }
}

pub fn max_len(field: FieldSpec) -> usize {
    with_word!(field, W => W::MAX_LEN)
}

impl FieldCode {
    /// Row space of `rows`; the basis is brought to RREF.
    pub fn from_rows(field: FieldSpec, n: usize, rows: &[Vec<FieldElem>]) -> Result<FieldCode> {
        if n > max_len(field) {
            return Err(Error::Unsupported(format!("length {n} exceeds {} for {field}", max_len(field))));
        }
        for r in rows {
            if r.len() != n {
                return domain(format!("row of length {} in a length-{n} code", r.len()));
            }
            if r.iter().any(|c| c.0 as u32 >= field.q()) {
                return domain(format!("symbol outside {field}"));
            }
        }
        Ok(with_word!(field, W => {
            let packed: Vec<W> = rows.iter().map(|r| W::from_slice(r)).collect();
            FieldCode::from_packed(n, packed)
        }))
    }

    pub(crate) fn from_packed<W: Word>(n: usize, mut rows: Vec<W>) -> FieldCode {
        let pivots = packed::rref(&mut rows, n);
        FieldCode {
            field: W::FIELD,
            n,
            rows: rows.iter().map(|w| w.to_vec(n)).collect(),
            pivots,
            qc_index: None,
        }
    }

    pub fn zero(field: FieldSpec, n: usize) -> FieldCode {
        FieldCode { field, n, rows: Vec::new(), pivots: Vec::new(), qc_index: None }
    }

    pub fn packed<W: Word>(&self) -> Vec<W> {
        assert_eq!(W::FIELD, self.field, "packed word type does not match the field");
        self.rows.iter().map(|r| W::from_slice(r)).collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn qc_index(&self) -> Option<usize> {
        self.qc_index
    }

    pub fn with_qc_index(mut self, ell: Option<usize>) -> FieldCode {
        self.qc_index = ell;
        self
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        with_word!(self.field, W => {
            let basis: Vec<W> = self.packed();
            packed::reduce(&basis, &self.pivots, W::from_slice(v)).is_zero()
        })
    }

    /// Contains every row of `other`.
    pub fn contains_code(&self, other: &FieldCode) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn euclidean(&self, a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
        let f = self.field;
        a.iter().zip(b).fold(FieldElem::ZERO, |s, (&x, &y)| f.add(s, f.mul(x, y)))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        (0..self.k()).all(|i| (i..self.k()).all(|j| self.euclidean(&self.rows[i], &self.rows[j]).is_zero()))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// Euclidean dual, as a parity-check basis.
    pub fn dual(&self) -> FieldCode {
        let f = self.field;
        let mut h = Vec::new();
        for j in (0..self.n).filter(|j| !self.pivots.contains(j)) {
            let mut v = vec![FieldElem::ZERO; self.n];
            v[j] = FieldElem::ONE;
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = f.neg(row[j]);
            }
            h.push(v);
        }
        FieldCode::from_rows(f, self.n, &h).expect("dual of a valid code")
    }

    /// Image under coordinate i ↦ perm[i], symbol at i multiplied by scalars[i].
    pub fn monomial_image(&self, perm: &[usize], scalars: &[FieldElem]) -> FieldCode {
        with_word!(self.field, W => {
            let rows: Vec<W> = self.packed::<W>().iter().map(|w| w.monomial(perm, scalars)).collect();
            FieldCode::from_packed(self.n, rows)
        })
    }

    pub fn permuted(&self, perm: &[usize]) -> FieldCode {
        self.monomial_image(perm, &vec![FieldElem::ONE; self.n])
    }

    /// Apply T^step: the symbol at position i moves to (i + step) mod n.
    pub fn shifted(&self, step: usize) -> FieldCode {
        let perm: Vec<usize> = (0..self.n).map(|i| (i + step) % self.n).collect();
        self.permuted(&perm).with_qc_index(self.qc_index)
    }

    pub fn is_shift_invariant(&self, step: usize) -> bool {
        if self.n == 0 {
            return true;
        }
        let s = self.shifted(step % self.n);
        self.contains_code(&s)
    }

    /// Drop the given coordinates.
    pub fn punctured_rows(&self, drop: &[usize]) -> Vec<Vec<FieldElem>> {
        self.rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, &c)| c).collect())
            .collect()
    }
}

/// Quasi-cyclic image over F_q of a code over R.
pub fn expand(c: &RingCode) -> FieldCode {
    let spec = c.spec();
    let ell = c.ell();
    let m = spec.m();
    let n = m * ell;
    with_word!(spec.field(), W => {
        let mut rows: Vec<W> = Vec::with_capacity(c.k() * m);
        for g in c.gens() {
            for s in 0..m {
                rows.push(expand_row::<W>(&spec, g, s));
            }
        }
        FieldCode::from_packed(n, rows).with_qc_index(Some(ell))
    })
}

/// Y^s · g laid out as a field vector.
pub(crate) fn expand_row<W: Word>(spec: &RingSpec, g: &[RingElem], s: usize) -> W {
    let ell = g.len();
    let m = spec.m();
    let mut w = W::zero();
    for (j, a) in g.iter().enumerate() {
        for i in 0..m {
            let c = a.coeff(i);
            if !c.is_zero() {
                w.set(((i + s) % m) * ell + j, c);
            }
        }
    }
    w
}

/// Vector over R laid out as a field vector of length mℓ.
pub fn expand_vector(spec: &RingSpec, v: &[RingElem]) -> Vec<FieldElem> {
    let ell = v.len();
    let mut out = vec![FieldElem(0); spec.m() * ell];
    for (j, a) in v.iter().enumerate() {
        for (i, &c) in a.coeffs().iter().enumerate() {
            out[i * ell + j] = c;
        }
    }
    out
}

/// Field vector of length mℓ back to a vector over R.
pub fn collapse_vector(spec: &RingSpec, ell: usize, v: &[FieldElem]) -> Vec<RingElem> {
    let m = spec.m();
    (0..ell)
        .map(|j| {
            let coeffs: Vec<FieldElem> = (0..m).map(|i| v[i * ell + j]).collect();
            spec.from_coeffs(&coeffs)
        })
        .collect()
}

/// Code over R whose expansion is `d`.
pub fn collapse(d: &FieldCode, m: usize, ell: usize) -> Result<RingCode> {
    let spec = RingSpec::new(d.field(), m)?;
    if d.n() != m * ell {
        return domain(format!("length {} is not {m}·{ell}", d.n()));
    }
    if !d.is_shift_invariant(ell) {
        return domain(format!("code is not invariant under T^{ell}"));
    }
    let mut gens: Vec<Vec<RingElem>> = Vec::new();
    let mut span = FieldCode::zero(d.field(), d.n());
    for row in d.rows() {
        if span.contains(row) {
            continue;
        }
        let g = collapse_vector(&spec, ell, row);
        gens.push(g);
        span = expand(&RingCode::new(spec, ell, gens.clone())?);
        if span.k() == d.k() {
            break;
        }
    }
    RingCode::new(spec, ell, gens)
}

/// Gray image of an F_4 code: the symbol ωx + ω̄y goes to (x, y), giving
/// the binary vector (x_0..x_{n−1}, y_0..y_{n−1}).
pub fn gray_image(d: &FieldCode) -> Result<FieldCode> {
    if d.field() != FieldSpec::F4 {
        return domain("the Gray map is defined for codes over F_4 only");
    }
    let n = d.n();
    let f = FieldSpec::F4;
    let omega = FieldElem(2);
    let mut rows = Vec::with_capacity(2 * d.k());
    for r in d.rows() {
        rows.push(gray_vector(r));
        let wr: Vec<FieldElem> = r.iter().map(|&c| f.mul(omega, c)).collect();
        rows.push(gray_vector(&wr));
    }
    FieldCode::from_rows(FieldSpec::F2, 2 * n, &rows)
}

/// Gray image of a single F_4 vector.
pub fn gray_vector(v: &[FieldElem]) -> Vec<FieldElem> {
    let n = v.len();
    let mut out = vec![FieldElem::ZERO; 2 * n];
    for (i, c) in v.iter().enumerate() {
        let (b0, b1) = (c.0 & 1, c.0 >> 1);
        out[i] = FieldElem(b0 ^ b1);
        out[n + i] = FieldElem(b0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: &[u8]) -> Vec<FieldElem> {
        v.iter().map(|&x| FieldElem(x)).collect()
    }

    #[test]
    fn gray_symbols() {
        assert_eq!(gray_vector(&fe(&[2])), fe(&[1, 0]));
        assert_eq!(gray_vector(&fe(&[1])), fe(&[1, 1]));
        assert_eq!(gray_vector(&fe(&[3])), fe(&[0, 1]));
        assert_eq!(gray_vector(&fe(&[0])), fe(&[0, 0]));
    }

    #[test]
    fn repetition_collapse() {
        let d = FieldCode::from_rows(FieldSpec::F2, 6, &[fe(&[1; 6])]).unwrap();
        let c = collapse(&d, 3, 2).unwrap();
        let spec = c.spec();
        assert_eq!(c.gens(), &[vec![spec.phi(), spec.phi()]]);
        assert_eq!(expand(&c), d);
    }

    #[test]
    fn non_qc_rejected() {
        let d = FieldCode::from_rows(FieldSpec::F2, 6, &[fe(&[1, 1, 0, 0, 0, 0])]).unwrap();
        assert!(!d.is_shift_invariant(2));
        assert!(collapse(&d, 3, 2).is_err());
    }

    #[test]
    fn dual_is_orthogonal() {
        let d = FieldCode::from_rows(FieldSpec::F5, 5, &[fe(&[1, 2, 3, 0, 4]), fe(&[0, 1, 1, 1, 0])]).unwrap();
        let h = d.dual();
        assert_eq!(h.k(), 3);
        for a in d.rows() {
            for b in h.rows() {
                assert!(d.euclidean(a, b).is_zero());
            }
        }
    }
}
