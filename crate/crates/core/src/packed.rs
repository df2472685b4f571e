//! Packed codeword representations and the kernels built on them.
//!
//! Binary words live in a `u128`. F_4 words use two bit planes (bit 0 and
//! bit 1 of the element index). F_3 and F_5 words use 4-bit lanes inside four
//! `u64` limbs with SWAR add/reduce.

use crate::gf::{FieldElem, FieldSpec};
use std::fmt::Debug;
use std::hash::Hash;

pub trait Word: Copy + Eq + Ord + Hash + Send + Sync + Debug + 'static {
    const FIELD: FieldSpec;
    const MAX_LEN: usize;

    fn zero() -> Self;
    fn get(&self, i: usize) -> FieldElem;
    fn set(&mut self, i: usize, v: FieldElem);
    fn add(self, o: Self) -> Self;
    fn neg(self) -> Self;
    fn scale(self, s: FieldElem) -> Self;
    fn weight(self) -> u32;
    /// Keep only the positions whose bit is set in `mask`.
    fn restrict(self, mask: u128) -> Self;
    fn support(self) -> u128;

    #[inline]
    fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    #[inline]
    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    fn from_slice(v: &[FieldElem]) -> Self {
        let mut w = Self::zero();
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                w.set(i, c);
            }
        }
        w
    }

    fn to_vec(self, n: usize) -> Vec<FieldElem> {
        (0..n).map(|i| self.get(i)).collect()
    }

    /// Image under the coordinate map i ↦ perm[i] with the symbol at i scaled by scalars[i].
    fn monomial(self, perm: &[usize], scalars: &[FieldElem]) -> Self {
        let f = Self::FIELD;
        let mut w = Self::zero();
        for (i, (&p, &s)) in perm.iter().zip(scalars).enumerate() {
            let c = self.get(i);
            if !c.is_zero() {
                w.set(p, f.mul(c, s));
            }
        }
        w
    }

    fn permute(self, perm: &[usize]) -> Self {
        let mut w = Self::zero();
        for (i, &p) in perm.iter().enumerate() {
            let c = self.get(i);
            if !c.is_zero() {
                w.set(p, c);
            }
        }
        w
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct B2(pub u128);

impl Word for B2 {
    const FIELD: FieldSpec = FieldSpec::F2;
    const MAX_LEN: usize = 128;

    #[inline]
    fn zero() -> Self {
        B2(0)
    }
    #[inline]
    fn get(&self, i: usize) -> FieldElem {
        FieldElem(((self.0 >> i) & 1) as u8)
    }
    #[inline]
    fn set(&mut self, i: usize, v: FieldElem) {
        self.0 = (self.0 & !(1u128 << i)) | ((v.0 as u128 & 1) << i);
    }
    #[inline]
    fn add(self, o: Self) -> Self {
        B2(self.0 ^ o.0)
    }
    #[inline]
    fn neg(self) -> Self {
        self
    }
    #[inline]
    fn scale(self, s: FieldElem) -> Self {
        if s.is_zero() {
            B2(0)
        } else {
            self
        }
    }
    #[inline]
    fn weight(self) -> u32 {
        self.0.count_ones()
    }
    #[inline]
    fn restrict(self, mask: u128) -> Self {
        B2(self.0 & mask)
    }
    #[inline]
    fn support(self) -> u128 {
        self.0
    }
}

/// F_4 word as two bit planes: `lo` holds bit 0 of each index, `hi` bit 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct B4 {
    pub lo: u128,
    pub hi: u128,
}

impl B4 {
    #[inline]
    fn times_omega(self) -> Self {
        B4 { lo: self.hi, hi: self.lo ^ self.hi }
    }
}

impl Word for B4 {
    const FIELD: FieldSpec = FieldSpec::F4;
    const MAX_LEN: usize = 128;

    #[inline]
    fn zero() -> Self {
        B4 { lo: 0, hi: 0 }
    }
    #[inline]
    fn get(&self, i: usize) -> FieldElem {
        FieldElem((((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8)
    }
    #[inline]
    fn set(&mut self, i: usize, v: FieldElem) {
        let b = 1u128 << i;
        self.lo = (self.lo & !b) | ((v.0 as u128 & 1) << i);
        self.hi = (self.hi & !b) | (((v.0 as u128 >> 1) & 1) << i);
    }
    #[inline]
    fn add(self, o: Self) -> Self {
        B4 { lo: self.lo ^ o.lo, hi: self.hi ^ o.hi }
    }
    #[inline]
    fn neg(self) -> Self {
        self
    }
    #[inline]
    fn scale(self, s: FieldElem) -> Self {
        match s.0 {
            0 => B4::zero(),
            1 => self,
            2 => self.times_omega(),
            _ => self.times_omega().times_omega(),
        }
    }
    #[inline]
    fn weight(self) -> u32 {
        (self.lo | self.hi).count_ones()
    }
    #[inline]
    fn restrict(self, mask: u128) -> Self {
        B4 { lo: self.lo & mask, hi: self.hi & mask }
    }
    #[inline]
    fn support(self) -> u128 {
        self.lo | self.hi
    }
}

const LANES: u64 = 0x1111_1111_1111_1111;

/// F_p word (p ∈ {3, 5}) in 4-bit lanes, 16 lanes per limb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nib<const P: u64>(pub [u64; 4]);

pub type N3 = Nib<3>;
pub type N5 = Nib<5>;

impl<const P: u64> Nib<P> {
    #[inline]
    fn reduce(s: u64) -> u64 {
        let over = (s + (8 - P) * LANES) & (8 * LANES);
        s - (over >> 3) * P
    }
}

impl<const P: u64> Word for Nib<P> {
    const FIELD: FieldSpec = if P == 3 { FieldSpec::F3 } else { FieldSpec::F5 };
    const MAX_LEN: usize = 64;

    #[inline]
    fn zero() -> Self {
        Nib([0; 4])
    }
    #[inline]
    fn get(&self, i: usize) -> FieldElem {
        FieldElem(((self.0[i >> 4] >> ((i & 15) * 4)) & 15) as u8)
    }
    #[inline]
    fn set(&mut self, i: usize, v: FieldElem) {
        let sh = (i & 15) * 4;
        let limb = &mut self.0[i >> 4];
        *limb = (*limb & !(15 << sh)) | ((v.0 as u64) << sh);
    }
    #[inline]
    fn add(self, o: Self) -> Self {
        let mut r = [0u64; 4];
        for k in 0..4 {
            r[k] = Self::reduce(self.0[k] + o.0[k]);
        }
        Nib(r)
    }
    #[inline]
    fn neg(self) -> Self {
        let mut r = [0u64; 4];
        for k in 0..4 {
            r[k] = Self::reduce(P * LANES - self.0[k]);
        }
        // lanes that held 0 became P and were reduced back to 0
        Nib(r)
    }
    #[inline]
    fn scale(self, s: FieldElem) -> Self {
        let s = s.0 as u64;
        if s == 0 {
            return Self::zero();
        }
        if s == P - 1 {
            return self.neg();
        }
        let mut acc = self;
        for _ in 1..s {
            acc = acc.add(self);
        }
        acc
    }
    #[inline]
    fn weight(self) -> u32 {
        self.0.iter().map(|&x| ((x | (x >> 1) | (x >> 2) | (x >> 3)) & LANES).count_ones()).sum()
    }
    #[inline]
    fn restrict(self, mask: u128) -> Self {
        let mut r = self.0;
        for (k, limb) in r.iter_mut().enumerate() {
            let bits = (mask >> (16 * k)) as u16;
            *limb &= spread_nibbles(bits);
        }
        Nib(r)
    }
    fn support(self) -> u128 {
        let mut s = 0u128;
        for k in 0..4 {
            let x = self.0[k];
            let nz = (x | (x >> 1) | (x >> 2) | (x >> 3)) & LANES;
            for j in 0..16 {
                if (nz >> (4 * j)) & 1 == 1 {
                    s |= 1u128 << (16 * k + j);
                }
            }
        }
        s
    }
}

/// 16-bit mask to a lane mask with 0xF in each selected lane.
#[inline]
fn spread_nibbles(bits: u16) -> u64 {
    let mut x = bits as u64;
    x = (x | (x << 24)) & 0x0000_00FF_0000_00FF;
    x = (x | (x << 12)) & 0x000F_000F_000F_000F;
    x = (x | (x << 6)) & 0x0303_0303_0303_0303;
    x = (x | (x << 3)) & LANES;
    x * 15
}

/// Run `$body` with `$W` bound to the packed word type for `$field`.
macro_rules! with_word {
    ($field:expr, $W:ident => $body:expr) => {
        match $field {
            $crate::gf::FieldSpec::F2 => {
                type $W = $crate::packed::B2;
                $body
            }
            $crate::gf::FieldSpec::F4 => {
                type $W = $crate::packed::B4;
                $body
            }
            $crate::gf::FieldSpec::F3 => {
                type $W = $crate::packed::N3;
                $body
            }
            $crate::gf::FieldSpec::F5 => {
                type $W = $crate::packed::N5;
                $body
            }
        }
    };
}
pub(crate) use with_word;

/// In-place reduced row echelon form; zero rows are dropped. Returns pivot columns.
pub fn rref<W: Word>(rows: &mut Vec<W>, n: usize) -> Vec<usize> {
    rref_on_columns(rows, (0..n).collect::<Vec<_>>().as_slice())
}

/// RREF where pivots are only searched in `cols`, in the given order.
/// Rows with no support on `cols` are kept at the bottom.
pub fn rref_on_columns<W: Word>(rows: &mut Vec<W>, cols: &[usize]) -> Vec<usize> {
    let f = W::FIELD;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for &j in cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r].get(j).is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv_nonzero(rows[rank].get(j));
        let pr = rows[rank].scale(inv);
        rows[rank] = pr;
        for r in 0..rows.len() {
            if r != rank {
                let c = rows[r].get(j);
                if !c.is_zero() {
                    rows[r] = rows[r].sub(pr.scale(c));
                }
            }
        }
        pivots.push(j);
        rank += 1;
    }
    rows.retain(|w| !w.is_zero());
    pivots
}

/// Reduce `v` against an RREF basis with the given pivots.
#[inline]
pub fn reduce<W: Word>(basis: &[W], pivots: &[usize], mut v: W) -> W {
    for (row, &j) in basis.iter().zip(pivots) {
        let c = v.get(j);
        if !c.is_zero() {
            v = v.sub(row.scale(c));
        }
    }
    v
}
