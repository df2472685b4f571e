//! Linear codes over R and their standard form.

use crate::error::{domain, Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::qc::{expand, FieldCode};
use crate::ring::{RingElem, RingSpec};

/// A code over R given by a k × ℓ generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingCode {
    spec: RingSpec,
    ell: usize,
    gens: Vec<Vec<RingElem>>,
}

/// Which ideal generator occupies the α block of the standard form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaBranch {
    YMinusOne,
    Phi,
}

/// Generator matrix in the block shape
///
/// ```text
/// [ I   A12      A13    A14  A15 ]
/// [ 0 (Y-1)I   Phi*M    B24  B25 ]
/// [ 0    0        0   a*I  a*D35 ]
/// ```
///
/// with M = I. Column t of `matrix` is column `column_perm[t]` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub matrix: Vec<Vec<RingElem>>,
    pub alpha_branch: Option<AlphaBranch>,
    pub column_perm: Vec<usize>,
}

impl RingCode {
    /// Zero rows are dropped.
    pub fn new(spec: RingSpec, ell: usize, gens: Vec<Vec<RingElem>>) -> Result<RingCode> {
        let mut kept = Vec::with_capacity(gens.len());
        for (i, row) in gens.into_iter().enumerate() {
            if row.len() != ell {
                return domain(format!("generator row {i} has length {}, expected {ell}", row.len()));
            }
            for a in &row {
                spec.check(a)?;
            }
            if row.iter().any(|a| !a.is_zero()) {
                kept.push(row);
            }
        }
        Ok(RingCode { spec, ell, gens: kept })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Vec<RingElem>] {
        &self.gens
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let s = &self.spec;
        (0..self.k()).all(|i| (i..self.k()).all(|j| s.hermitian_unchecked(&self.gens[i], &self.gens[j]).is_zero()))
    }

    /// Decided on the expansion: dimension mℓ/2 and Euclidean self-orthogonal.
    pub fn is_self_dual(&self) -> bool {
        expand(self).is_self_dual()
    }

    pub fn expand(&self) -> FieldCode {
        expand(self)
    }

    /// Columns in the given order: new column t is old column `order[t]`.
    pub fn reorder_columns(&self, order: &[usize]) -> RingCode {
        let gens = self.gens.iter().map(|r| order.iter().map(|&j| r[j]).collect()).collect();
        RingCode { spec: self.spec, ell: self.ell, gens }
    }

    pub fn direct_sum(&self, other: &RingCode) -> Result<RingCode> {
        if self.spec != other.spec {
            return domain("direct sum of codes over different rings");
        }
        let z = self.spec.zero();
        let mut gens = Vec::new();
        for r in &self.gens {
            let mut v = r.clone();
            v.extend(std::iter::repeat(z).take(other.ell));
            gens.push(v);
        }
        for r in &other.gens {
            let mut v = vec![z; self.ell];
            v.extend_from_slice(r);
            gens.push(v);
        }
        RingCode::new(self.spec, self.ell + other.ell, gens)
    }

    pub fn standard_form(&self) -> Result<StandardForm> {
        standard_form(self)
    }

    /// k1 ≥ t in the standard form.
    pub fn free_rank_at_least(&self, t: usize) -> Result<bool> {
        Ok(self.standard_form()?.k1 >= t)
    }
}

/// Arithmetic needed by the elimination helpers.
trait Scalars {
    type T: Copy + PartialEq;
    fn is_zero(&self, a: &Self::T) -> bool;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn sub(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn inv(&self, a: &Self::T) -> Self::T;
}

struct Fq(FieldSpec);

impl Scalars for Fq {
    type T = FieldElem;
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.0.mul(*a, *b)
    }
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.0.sub(*a, *b)
    }
    fn inv(&self, a: &FieldElem) -> FieldElem {
        self.0.inv_nonzero(*a)
    }
}

/// The residue field F_q[Y]/(Φ_p).
struct Residue(RingSpec);

impl Scalars for Residue {
    type T = RingElem;
    fn is_zero(&self, a: &RingElem) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.0.residue_mul(a, b)
    }
    fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.0.sub(a, b)
    }
    fn inv(&self, a: &RingElem) -> RingElem {
        self.0.residue_inv(a).expect("nonzero residue")
    }
}

fn scale_row<S: Scalars>(s: &S, row: &mut [S::T], c: &S::T) {
    for x in row.iter_mut() {
        *x = s.mul(c, x);
    }
}

/// Scale so that row[j] becomes `target`.
fn normalize_at<S: Scalars>(s: &S, row: &mut [S::T], j: usize, target: &S::T) {
    let c = s.mul(target, &s.inv(&row[j]));
    scale_row(s, row, &c);
}

/// Clear column j in every row using a pivot row with 1 at j.
fn eliminate<S: Scalars>(s: &S, rows: &mut [Vec<S::T>], pivot: &[S::T], j: usize) {
    for row in rows.iter_mut() {
        if !s.is_zero(&row[j]) {
            let c = row[j];
            for (x, p) in row.iter_mut().zip(pivot) {
                *x = s.sub(x, &s.mul(&c, p));
            }
        }
    }
}

/// Reduced row echelon form with zero rows removed. Returns pivot columns.
fn echelon<S: Scalars>(s: &S, mut rows: Vec<Vec<S::T>>, ncols: usize) -> (Vec<Vec<S::T>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for j in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !s.is_zero(&rows[r][j])) else {
            continue;
        };
        rows.swap(rank, p);
        let mut pr = rows[rank].clone();
        let one = s.mul(&pr[j], &s.inv(&pr[j]));
        normalize_at(s, &mut pr, j, &one);
        let (before, rest) = rows.split_at_mut(rank);
        eliminate(s, before, &pr, j);
        eliminate(s, &mut rest[1..], &pr, j);
        rows[rank] = pr;
        pivots.push(j);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

fn standard_form(c: &RingCode) -> Result<StandardForm> {
    let spec = c.spec;
    if !spec.cyclotomic_ok() {
        return Err(Error::Unsupported(format!(
            "standard form needs Y^{} − 1 to have exactly two irreducible factors over {}",
            spec.m(),
            spec.field()
        )));
    }
    let f = spec.field();
    let fq = Fq(f);
    let res = Residue(spec);
    let ell = c.ell;

    let comp1: Vec<Vec<FieldElem>> = c.gens.iter().map(|r| r.iter().map(|a| spec.eval_at_one(a)).collect()).collect();
    let comp2: Vec<Vec<RingElem>> = c.gens.iter().map(|r| r.iter().map(|a| spec.reduce_phi(a)).collect()).collect();
    let (mut r1, _) = echelon(&fq, comp1, ell);
    let (mut r2, _) = echelon(&res, comp2, ell);

    // Unit pivots: a column where both components still have support.
    let mut used = vec![false; ell];
    let mut p1: Vec<Vec<FieldElem>> = Vec::new();
    let mut p2: Vec<Vec<RingElem>> = Vec::new();
    let mut unit_cols = Vec::new();
    loop {
        let pick = (0..ell).filter(|&j| !used[j]).find_map(|j| {
            let a = r1.iter().position(|r| !r[j].is_zero())?;
            let b = r2.iter().position(|r| !r[j].is_zero())?;
            Some((j, a, b))
        });
        let Some((j, a, b)) = pick else { break };
        let mut u = r1.remove(a);
        let mut v = r2.remove(b);
        normalize_at(&fq, &mut u, j, &FieldElem::ONE);
        normalize_at(&res, &mut v, j, &spec.one());
        eliminate(&fq, &mut r1, &u, j);
        eliminate(&fq, &mut p1, &u, j);
        eliminate(&res, &mut r2, &v, j);
        eliminate(&res, &mut p2, &v, j);
        p1.push(u);
        p2.push(v);
        unit_cols.push(j);
        used[j] = true;
    }

    let (mut r1, piv1) = echelon(&fq, r1, ell);
    let (mut r2, piv2) = echelon(&res, r2, ell);
    let k1 = p1.len();
    let k2 = r1.len().min(r2.len());
    let k3 = r1.len().max(r2.len()) - k2;

    let y_minus_one = spec.reduce_phi(&spec.sub(&spec.y_pow(1), &spec.one()));
    let phi_at_one = f.from_int(spec.m() as i64);
    for (row, &j) in r1.iter_mut().zip(&piv1) {
        normalize_at(&fq, row, j, &phi_at_one);
    }
    for (row, &j) in r2.iter_mut().zip(&piv2) {
        normalize_at(&res, row, j, &y_minus_one);
    }

    let zero1 = vec![FieldElem::ZERO; ell];
    let zero2 = vec![spec.zero(); ell];
    let join = |a: &[FieldElem], b: &[RingElem]| -> Vec<RingElem> {
        a.iter().zip(b).map(|(&x, y)| spec.combine_parts(x, y)).collect()
    };

    let mut rows = Vec::new();
    for (u, v) in p1.iter().zip(&p2) {
        rows.push(join(u, v));
    }
    for t in 0..k2 {
        rows.push(join(&r1[t], &r2[t]));
    }
    let alpha_branch = if r2.len() > k2 {
        Some(AlphaBranch::YMinusOne)
    } else if r1.len() > k2 {
        Some(AlphaBranch::Phi)
    } else {
        None
    };
    for t in k2..r2.len() {
        rows.push(join(&zero1, &r2[t]));
    }
    for t in k2..r1.len() {
        rows.push(join(&r1[t], &zero2));
    }

    let mut order: Vec<usize> = unit_cols.clone();
    order.extend(&piv2[..k2]);
    order.extend(&piv1[..k2]);
    order.extend(&piv2[k2..]);
    order.extend(&piv1[k2..]);
    let mut taken = vec![false; ell];
    for &j in &order {
        taken[j] = true;
    }
    order.extend((0..ell).filter(|&j| !taken[j]));

    let matrix = rows.iter().map(|r| order.iter().map(|&j| r[j]).collect()).collect();
    Ok(StandardForm { k1, k2, k3, matrix, alpha_branch, column_perm: order })
}

impl StandardForm {
    /// Check the block pattern entry by entry.
    pub fn has_block_shape(&self, spec: &RingSpec) -> bool {
        let (k1, k2, k3) = (self.k1, self.k2, self.k3);
        let one = spec.one();
        let ym1 = spec.sub(&spec.y_pow(1), &one);
        let phi = spec.phi();
        let alpha = match self.alpha_branch {
            Some(AlphaBranch::YMinusOne) => ym1,
            Some(AlphaBranch::Phi) => phi,
            None => spec.zero(),
        };
        let ell = self.column_perm.len();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                let ok = if i < k1 {
                    j >= k1 || *a == if i == j { one } else { spec.zero() }
                } else if i < k1 + k2 {
                    let t = i - k1;
                    if j < k1 {
                        a.is_zero()
                    } else if j < k1 + k2 {
                        *a == if j - k1 == t { ym1 } else { spec.zero() }
                    } else if j < k1 + 2 * k2 {
                        *a == if j - k1 - k2 == t { phi } else { spec.zero() }
                    } else {
                        !spec.is_unit(a)
                    }
                } else {
                    let t = i - k1 - k2;
                    if j < k1 + 2 * k2 {
                        a.is_zero()
                    } else if j < k1 + 2 * k2 + k3 {
                        *a == if j - k1 - 2 * k2 == t { alpha } else { spec.zero() }
                    } else {
                        // a multiple of α
                        spec.mul(a, &if alpha == ym1 { phi } else { ym1 }).is_zero()
                    }
                };
                if !ok {
                    return false;
                }
            }
            if row.len() != ell {
                return false;
            }
        }
        self.matrix.len() == k1 + k2 + k3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r23() -> RingSpec {
        RingSpec::from_params(2, 3).unwrap()
    }

    #[test]
    fn self_orthogonality_examples() {
        let r = r23();
        let one = r.one();
        let c = RingCode::new(r, 2, vec![vec![one, one]]).unwrap();
        assert!(c.is_self_orthogonal());
        assert!(c.is_self_dual());
        assert_eq!(c.expand().n(), 6);
        assert_eq!(c.expand().k(), 3);
        let c0 = RingCode::new(r, 2, vec![vec![one, r.zero()]]).unwrap();
        assert!(!c0.is_self_orthogonal());
        let r57 = RingSpec::from_params(5, 7).unwrap();
        let c5 = RingCode::new(r57, 2, vec![vec![r57.one(), r57.scalar(FieldElem(2))]]).unwrap();
        assert!(c5.is_self_orthogonal());
        assert!(c5.is_self_dual());
        let z = RingCode::new(r, 2, vec![]).unwrap();
        assert!(!z.is_self_dual());
    }

    #[test]
    fn standard_form_examples() {
        let r = r23();
        let one = r.one();
        let c = RingCode::new(r, 2, vec![vec![one, one]]).unwrap();
        let sf = c.standard_form().unwrap();
        assert_eq!((sf.k1, sf.k2, sf.k3), (1, 0, 0));
        assert!(sf.has_block_shape(&r));
        assert!(!c.free_rank_at_least(2).unwrap());
        assert!(c.direct_sum(&c).unwrap().free_rank_at_least(2).unwrap());

        let ym1 = r.sub(&r.y_pow(1), &one);
        let d = RingCode::new(r, 2, vec![vec![ym1, ym1]]).unwrap();
        let sf = d.standard_form().unwrap();
        assert_eq!((sf.k1, sf.k2, sf.k3), (0, 0, 1));
        assert_eq!(sf.alpha_branch, Some(AlphaBranch::YMinusOne));
        assert!(sf.has_block_shape(&r));

        let r43 = RingSpec::from_params(4, 3).unwrap();
        let e = RingCode::new(r43, 2, vec![vec![r43.one(), r43.one()]]).unwrap();
        assert!(matches!(e.standard_form(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn standard_form_generates_same_code() {
        let r = r23();
        let ym1 = r.sub(&r.y_pow(1), &r.one());
        let phi = r.phi();
        let y = r.y_pow(1);
        let gens = vec![
            vec![ym1, phi, r.zero(), y],
            vec![phi, phi, y, r.one()],
            vec![r.zero(), ym1, ym1, r.zero()],
        ];
        let c = RingCode::new(r, 4, gens).unwrap();
        let sf = c.standard_form().unwrap();
        assert!(sf.has_block_shape(&r));
        let permuted = c.reorder_columns(&sf.column_perm);
        let back = RingCode::new(r, 4, sf.matrix.clone()).unwrap();
        assert_eq!(permuted.expand(), back.expand());
        let again = back.standard_form().unwrap();
        assert_eq!((again.k1, again.k2, again.k3), (sf.k1, sf.k2, sf.k3));
    }
}
