//! Seed codes and the two building-up constructions.
//!
//! Branch (i), for char 2 or q ≡ 1 (mod 4): from a self-dual code with rows
//! r_i, a scalar c with c·c̄ = −1 and x with ⟨x, x⟩ = −1, the rows
//!
//! ```text
//! ( 1     0     x  )
//! ( y_i   c·y_i r_i),   y_i = −⟨r_i, x⟩
//! ```
//!
//! generate a self-dual code two columns longer. Branch (ii), for
//! q ≡ 3 (mod 4), adds four columns using (α, β, x1, x2).

use crate::error::{Error, Result};
use crate::equiv;
use crate::gf::ResidueClass;
use crate::rcode::RingCode;
use crate::ring::{RingElem, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionWitness {
    BranchI { c: RingElem, x: Vec<RingElem> },
    BranchII { alpha: RingElem, beta: RingElem, x1: Vec<RingElem>, x2: Vec<RingElem> },
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Construction(msg.into()))
}

/// Every c ∈ R with c·conj(c) = −1.
pub fn branch_i_scalars(spec: &RingSpec) -> Vec<RingElem> {
    let target = spec.minus_one();
    spec.elements().filter(|c| spec.norm(c) == target).collect()
}

/// One c per orbit under multiplication by powers of Y (the smallest in each orbit).
/// Replacing c by Y^k·c permutes coordinates of the expansion, so these suffice up to equivalence.
pub fn canonical_branch_i_scalars(spec: &RingSpec) -> Vec<RingElem> {
    let key = |c: &RingElem| {
        let mut v = c.coeffs().to_vec();
        v.reverse();
        v
    };
    let all = branch_i_scalars(spec);
    all.iter()
        .copied()
        .filter(|c| (1..spec.m()).all(|k| key(&spec.mul(&spec.y_pow(k), c)) >= key(c)))
        .collect()
}

/// Self-dual codes of the smallest length: all [1 c] with c·c̄ = −1 up to
/// equivalence of expansions, or the 2 × 4 matrix when q ≡ 3 (mod 4).
pub fn seed(spec: &RingSpec) -> Result<Vec<RingCode>> {
    let f = spec.field();
    if f.residue_class() == ResidueClass::ThreeMod4 {
        let (a, b) = f.sum_of_squares_minus_one()?;
        let (a, b, nb) = (spec.scalar(a), spec.scalar(b), spec.scalar(f.neg(b)));
        let (one, z) = (spec.one(), spec.zero());
        let code = RingCode::new(*spec, 4, vec![vec![one, z, a, b], vec![z, one, nb, a]])?;
        return Ok(vec![code]);
    }
    let mut seeds: Vec<RingCode> = Vec::new();
    let mut expansions = Vec::new();
    for c in branch_i_scalars(spec) {
        let code = RingCode::new(*spec, 2, vec![vec![spec.one(), c]])?;
        let d = code.expand();
        let mut known = false;
        for e in &expansions {
            if *e == d || equiv::are_equivalent(e, &d, &equiv::EquivOptions::default())?.is_some() {
                known = true;
                break;
            }
        }
        if !known {
            expansions.push(d);
            seeds.push(code);
        }
    }
    Ok(seeds)
}

impl ExtensionWitness {
    pub fn apply(&self, base: &RingCode) -> Result<RingCode> {
        match self {
            ExtensionWitness::BranchI { c, x } => extend_i(base, c, x),
            ExtensionWitness::BranchII { alpha, beta, x1, x2 } => extend_ii(base, alpha, beta, x1, x2),
        }
    }

    pub(crate) fn apply_unchecked(&self, base: &RingCode) -> RingCode {
        match self {
            ExtensionWitness::BranchI { c, x } => extend_i_unchecked(base, c, x),
            ExtensionWitness::BranchII { alpha, beta, x1, x2 } => extend_ii_unchecked(base, alpha, beta, x1, x2),
        }
    }

    /// One-line text form, e.g. `i; c = 1; x = (Y^2 + 1, 1, 0)`.
    pub fn render(&self, spec: &RingSpec) -> String {
        match self {
            ExtensionWitness::BranchI { c, x } => {
                format!("i; c = {}; x = {}", spec.render(c), spec.render_vec(x))
            }
            ExtensionWitness::BranchII { alpha, beta, x1, x2 } => format!(
                "ii; alpha = {}; beta = {}; x1 = {}; x2 = {}",
                spec.render(alpha),
                spec.render(beta),
                spec.render_vec(x1),
                spec.render_vec(x2)
            ),
        }
    }

    pub fn parse(spec: &RingSpec, line: &str) -> Result<ExtensionWitness> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let mut parts = line.split(';').map(str::trim);
        let branch = parts.next().unwrap_or("");
        let mut field = |name: &str| -> Result<String> {
            let p = parts.next().ok_or_else(|| bad(format!("missing `{name} = …`")))?;
            let (k, v) = p.split_once('=').ok_or_else(|| bad(format!("expected `{name} = …`, got {p:?}")))?;
            if k.trim() != name {
                return Err(bad(format!("expected `{name}`, got {:?}", k.trim())));
            }
            Ok(v.trim().to_string())
        };
        match branch {
            "i" => {
                let c = spec.parse(&field("c")?)?;
                let x = spec.parse_vec(&field("x")?)?;
                Ok(ExtensionWitness::BranchI { c, x })
            }
            "ii" => {
                let alpha = spec.parse(&field("alpha")?)?;
                let beta = spec.parse(&field("beta")?)?;
                let x1 = spec.parse_vec(&field("x1")?)?;
                let x2 = spec.parse_vec(&field("x2")?)?;
                Ok(ExtensionWitness::BranchII { alpha, beta, x1, x2 })
            }
            other => Err(bad(format!("unknown branch {other:?}"))),
        }
    }
}

/// Parse a witness file: one witness per non-comment line.
pub fn parse_witness_log(spec: &RingSpec, text: &str) -> Result<Vec<ExtensionWitness>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(ln, l)| {
            ExtensionWitness::parse(spec, l).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: ln, msg },
                other => other,
            })
        })
        .collect()
}

fn check_base(base: &RingCode, x_len: usize) -> Result<()> {
    if base.ell() % 2 != 0 {
        return fail(format!("base length {} is odd", base.ell()));
    }
    if x_len != base.ell() {
        return fail(format!("witness vector has length {x_len}, base has length {}", base.ell()));
    }
    if !base.is_self_dual() {
        return fail("base code is not self-dual");
    }
    Ok(())
}

pub fn extend_i(base: &RingCode, c: &RingElem, x: &[RingElem]) -> Result<RingCode> {
    let spec = base.spec();
    if !spec.field().supports_branch_i() {
        return fail(format!("branch (i) needs char 2 or q ≡ 1 (mod 4); q = {}", spec.field().q()));
    }
    spec.check(c)?;
    if spec.norm(c) != spec.minus_one() {
        return fail("c·conj(c) ≠ −1");
    }
    if x.len() == base.ell() && spec.hermitian_unchecked(x, x) != spec.minus_one() {
        return fail("⟨x, x⟩ ≠ −1");
    }
    check_base(base, x.len())?;
    Ok(extend_i_unchecked(base, c, x))
}

pub(crate) fn extend_i_unchecked(base: &RingCode, c: &RingElem, x: &[RingElem]) -> RingCode {
    let spec = base.spec();
    let mut gens = Vec::with_capacity(base.k() + 1);
    let mut first = vec![spec.one(), spec.zero()];
    first.extend_from_slice(x);
    gens.push(first);
    for r in base.gens() {
        let y = spec.neg(&spec.hermitian_unchecked(r, x));
        let mut row = vec![y, spec.mul(c, &y)];
        row.extend_from_slice(r);
        gens.push(row);
    }
    RingCode::new(spec, base.ell() + 2, gens).expect("well-formed extension")
}

pub fn extend_ii(
    base: &RingCode,
    alpha: &RingElem,
    beta: &RingElem,
    x1: &[RingElem],
    x2: &[RingElem],
) -> Result<RingCode> {
    let spec = base.spec();
    if spec.field().residue_class() != ResidueClass::ThreeMod4 {
        return fail(format!("branch (ii) needs q ≡ 3 (mod 4); q = {}", spec.field().q()));
    }
    spec.check(alpha)?;
    spec.check(beta)?;
    let s = |a: &RingElem, b: &RingElem| spec.add(&spec.norm(a), &spec.norm(b));
    if s(alpha, beta) != spec.minus_one() {
        return fail("α·conj(α) + β·conj(β) ≠ −1");
    }
    if spec.mul(alpha, &spec.conj(beta)) != spec.mul(&spec.conj(alpha), beta) {
        return fail("α·conj(β) ≠ conj(α)·β");
    }
    if x1.len() != x2.len() {
        return fail("x1 and x2 have different lengths");
    }
    if x1.len() == base.ell() {
        if !spec.hermitian_unchecked(x1, x2).is_zero() {
            return fail("⟨x1, x2⟩ ≠ 0");
        }
        if spec.hermitian_unchecked(x1, x1) != spec.minus_one() {
            return fail("⟨x1, x1⟩ ≠ −1");
        }
        if spec.hermitian_unchecked(x2, x2) != spec.minus_one() {
            return fail("⟨x2, x2⟩ ≠ −1");
        }
    }
    check_base(base, x1.len())?;
    Ok(extend_ii_unchecked(base, alpha, beta, x1, x2))
}

pub(crate) fn extend_ii_unchecked(
    base: &RingCode,
    alpha: &RingElem,
    beta: &RingElem,
    x1: &[RingElem],
    x2: &[RingElem],
) -> RingCode {
    let spec = base.spec();
    let (one, z) = (spec.one(), spec.zero());
    let mut gens = Vec::with_capacity(base.k() + 2);
    let mut a = vec![one, z, z, z];
    a.extend_from_slice(x1);
    let mut b = vec![z, one, z, z];
    b.extend_from_slice(x2);
    gens.push(a);
    gens.push(b);
    for r in base.gens() {
        let s = spec.neg(&spec.hermitian_unchecked(r, x1));
        let t = spec.neg(&spec.hermitian_unchecked(r, x2));
        let third = spec.add(&spec.mul(alpha, &s), &spec.mul(beta, &t));
        let fourth = spec.sub(&spec.mul(beta, &s), &spec.mul(alpha, &t));
        let mut row = vec![s, t, third, fourth];
        row.extend_from_slice(r);
        gens.push(row);
    }
    RingCode::new(spec, base.ell() + 4, gens).expect("well-formed extension")
}

/// Output of [`reduce`]: applying `witness` to `base` gives the input code
/// with its columns taken in `column_order`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub base: RingCode,
    pub witness: ExtensionWitness,
    pub column_order: Vec<usize>,
}

/// Write a self-dual code as a branch (i) extension of a code two columns shorter.
pub fn reduce(code: &RingCode) -> Result<Reduction> {
    let spec = code.spec();
    if code.ell() < 4 {
        return Err(Error::Unsupported(format!("length {} is below the minimum length 4", code.ell())));
    }
    if !spec.field().supports_branch_i() {
        return Err(Error::Unsupported("reduction needs char 2 or q ≡ 1 (mod 4)".into()));
    }
    if !code.is_self_dual() {
        return Err(Error::Unsupported("input is not self-dual".into()));
    }
    let sf = code.standard_form()?;
    if sf.k1 < 2 {
        return Err(Error::Unsupported(format!("free rank {} is below 2", sf.k1)));
    }
    let c = spec.scalar(spec.field().sqrt_of_minus_one()?);
    let u = &sf.matrix[0];
    let v = &sf.matrix[1];
    let x: Vec<RingElem> = u[2..].to_vec();
    let mut rows = Vec::with_capacity(sf.matrix.len() - 1);
    rows.push((2..code.ell()).map(|j| spec.add(&u[j], &spec.mul(&c, &v[j]))).collect::<Vec<_>>());
    for r in &sf.matrix[2..] {
        rows.push(r[2..].to_vec());
    }
    let base = RingCode::new(spec, code.ell() - 2, rows)?;
    let witness = ExtensionWitness::BranchI { c, x };
    let rebuilt = witness.apply_unchecked(&base);
    if rebuilt.expand() != code.reorder_columns(&sf.column_perm).expand() {
        return fail("reduction does not regenerate the input");
    }
    Ok(Reduction { base, witness, column_order: sf.column_perm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldElem;

    #[test]
    fn cubic_seed_is_unique() {
        let r = RingSpec::from_params(2, 3).unwrap();
        let s = seed(&r).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].gens()[0][1] == r.one() || s.iter().all(|c| c.is_self_dual()));
        assert!(s[0].is_self_dual());
        assert_eq!(canonical_branch_i_scalars(&r), vec![r.one()]);
    }

    #[test]
    fn ternary_seed_matrix() {
        let r = RingSpec::from_params(3, 5).unwrap();
        let s = seed(&r).unwrap();
        let g = s[0].gens();
        let (one, z, two) = (r.one(), r.zero(), r.scalar(FieldElem(2)));
        assert_eq!(g, &[vec![one, z, one, one], vec![z, one, two, one]]);
        assert!(s[0].is_self_dual());
    }

    #[test]
    fn zero_x_rejected() {
        let r = RingSpec::from_params(2, 3).unwrap();
        let base = &seed(&r).unwrap()[0];
        let e = extend_i(base, &r.one(), &[r.zero(), r.zero()]).unwrap_err();
        assert!(e.to_string().contains("⟨x, x⟩"));
        let e = extend_i(base, &r.zero(), &[r.one(), r.zero()]).unwrap_err();
        assert!(e.to_string().contains("c·conj(c)"));
    }

    #[test]
    fn witness_text_roundtrip() {
        let r = RingSpec::from_params(2, 3).unwrap();
        let w = ExtensionWitness::BranchI { c: r.one(), x: vec![r.phi(), r.zero(), r.y_pow(2)] };
        let s = w.render(&r);
        assert_eq!(s, "i; c = 1; x = (Y^2 + Y + 1, 0, Y^2)");
        assert_eq!(ExtensionWitness::parse(&r, &s).unwrap(), w);
        let r3 = RingSpec::from_params(3, 5).unwrap();
        let w2 = ExtensionWitness::BranchII {
            alpha: r3.one(),
            beta: r3.one(),
            x1: vec![r3.one(), r3.zero()],
            x2: vec![r3.zero(), r3.y_pow(3)],
        };
        assert_eq!(ExtensionWitness::parse(&r3, &w2.render(&r3)).unwrap(), w2);
        assert!(ExtensionWitness::parse(&r, "iii; c = 1").is_err());
    }

    #[test]
    fn reduce_seed_is_rejected() {
        let r = RingSpec::from_params(2, 3).unwrap();
        let s = &seed(&r).unwrap()[0];
        assert!(matches!(reduce(s), Err(Error::Unsupported(_))));
    }
}
