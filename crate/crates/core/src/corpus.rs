//! Reference generator matrices with their published parameters.
//!
//! Entries are either stored files, extensions of a stored code by a stored
//! witness, or shortenings of another entry (drop leading rows and columns
//! over R). Before any expected value is compared, each expansion must be
//! self-dual and invariant under the quasi-cyclic shift.

use crate::analysis::{self, AnalysisOptions, WeightEnum};
use crate::buildup;
use crate::equiv::{self, EquivOptions};
use crate::error::{Error, Result};
use crate::format;
use crate::gf::FieldSpec;
use crate::qc::{self, FieldCode};
use crate::rcode::RingCode;
use crate::ring::RingSpec;
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub enum Source {
    Ring(&'static str),
    /// Field-code file; the code is ℓ-quasi-cyclic with ℓ = n / m.
    Field(&'static str),
    Extension { base: &'static str, witness: &'static str },
    Shortened { parent: &'static str, rows: usize, cols: usize },
}

/// How far the expected values are checked by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tier {
    /// Exact counts, always.
    Exact,
    /// Exact counts with `exact`; otherwise structure and a distance bound.
    Extended,
    /// Structure and a distance bound; counts are reported, not certified.
    Bound,
}

#[derive(Clone, Copy, Debug)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    /// Enumerator form and β.
    pub template: Option<(&'static str, Option<i64>)>,
    pub a: &'static [(usize, u64)],
    pub aut: Option<u128>,
    /// |Aut| of the binary Gray image (F_4 only).
    pub gray_aut: Option<u128>,
    pub type_ii: Option<bool>,
    /// Minimum Lee weight (F_4 only): minimum distance of the Gray image.
    pub lee: Option<usize>,
}

const fn nk(n: usize, d: Option<usize>) -> Expected {
    Expected { n, k: n / 2, d, template: None, a: &[], aut: None, gray_aut: None, type_ii: None, lee: None }
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub q: u32,
    pub m: usize,
    pub source: Source,
    pub tier: Tier,
    pub expected: Expected,
}

macro_rules! corpus_file {
    ($f:literal) => {
        include_str!(concat!("../corpus/", $f))
    };
}

use Source::*;
use Tier::*;

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "G_14",
        q: 2,
        m: 3,
        source: Ring(corpus_file!("G_14.rc")),
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(0))), a: &[(8, 84), (10, 1449)], ..nk(42, Some(8)) },
    },
    // The length-14 code inside G_16; the printed G_14 is a different code with the same enumerator.
    CorpusEntry {
        name: "G_14_inner",
        q: 2,
        m: 3,
        source: Shortened { parent: "G_16", rows: 1, cols: 2 },
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(0))), a: &[(8, 84), (10, 1449)], ..nk(42, Some(8)) },
    },
    CorpusEntry {
        name: "G_16",
        q: 2,
        m: 3,
        source: Ring(corpus_file!("G_16.rc")),
        tier: Exact,
        expected: Expected { template: Some(("W2", None)), a: &[(10, 768), (12, 8592)], ..nk(48, Some(10)) },
    },
    CorpusEntry { name: "G_20", q: 2, m: 3, source: Ring(corpus_file!("G_20.rc")), tier: Bound, expected: nk(60, None) },
    CorpusEntry {
        name: "C_48_1",
        q: 2,
        m: 3,
        source: Extension { base: "G_14_inner", witness: corpus_file!("C_48_1.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", None)), aut: Some(3), ..nk(48, Some(10)) },
    },
    CorpusEntry {
        name: "C_48_2",
        q: 2,
        m: 3,
        source: Extension { base: "G_14_inner", witness: corpus_file!("C_48_2.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", None)), aut: Some(24), ..nk(48, Some(10)) },
    },
    CorpusEntry {
        name: "C_48_3",
        q: 2,
        m: 3,
        source: Extension { base: "G_14_inner", witness: corpus_file!("C_48_3.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", None)), aut: Some(12), ..nk(48, Some(10)) },
    },
    CorpusEntry {
        name: "C_48_4",
        q: 2,
        m: 3,
        source: Extension { base: "G_14_inner", witness: corpus_file!("C_48_4.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", None)), aut: Some(6), ..nk(48, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_1",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_1.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(18))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_2",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_2.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W1", Some(9))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_3",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_3.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(15))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_4",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_4.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W1", Some(3))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_5",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_5.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W1", Some(0))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_6",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_6.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(12))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_54_7",
        q: 2,
        m: 3,
        source: Extension { base: "G_16", witness: corpus_file!("C_54_7.wit") },
        tier: Exact,
        expected: Expected { template: Some(("W1", Some(6))), aut: Some(3), ..nk(54, Some(10)) },
    },
    CorpusEntry {
        name: "C_66_1",
        q: 2,
        m: 3,
        source: Extension { base: "G_20", witness: corpus_file!("C_66_1.wit") },
        tier: Bound,
        expected: Expected { template: Some(("W2", Some(46))), aut: Some(3), ..nk(66, Some(12)) },
    },
    CorpusEntry {
        name: "C_66_2",
        q: 2,
        m: 3,
        source: Extension { base: "G_20", witness: corpus_file!("C_66_2.wit") },
        tier: Bound,
        expected: Expected { template: Some(("W2", Some(17))), aut: Some(3), ..nk(66, Some(12)) },
    },
    CorpusEntry {
        name: "C_66_3",
        q: 2,
        m: 3,
        source: Extension { base: "G_20", witness: corpus_file!("C_66_3.wit") },
        tier: Bound,
        expected: Expected { template: Some(("W2", Some(23))), aut: Some(3), ..nk(66, Some(12)) },
    },
    CorpusEntry {
        name: "C_66_4",
        q: 2,
        m: 3,
        source: Extension { base: "G_20", witness: corpus_file!("C_66_4.wit") },
        tier: Bound,
        expected: Expected { template: Some(("W2", Some(26))), aut: Some(3), ..nk(66, Some(12)) },
    },
    CorpusEntry {
        name: "C_66_5",
        q: 2,
        m: 3,
        source: Extension { base: "G_20", witness: corpus_file!("C_66_5.wit") },
        tier: Bound,
        expected: Expected { template: Some(("W2", Some(43))), aut: Some(3), ..nk(66, Some(12)) },
    },
    CorpusEntry {
        name: "G_12",
        q: 2,
        m: 5,
        source: Ring(corpus_file!("quintic_G_12.rc")),
        tier: Extended,
        expected: Expected { template: Some(("W2", Some(10))), a: &[(12, 3195), (14, 29760)], ..nk(60, Some(12)) },
    },
    CorpusEntry {
        name: "G_10",
        q: 2,
        m: 5,
        source: Shortened { parent: "G_12", rows: 1, cols: 2 },
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(2))), a: &[(10, 516), (12, 7720)], ..nk(50, Some(10)) },
    },
    CorpusEntry {
        name: "G_8",
        q: 2,
        m: 5,
        source: Shortened { parent: "G_10", rows: 1, cols: 2 },
        tier: Exact,
        expected: Expected { a: &[(8, 285), (12, 21280)], type_ii: Some(true), ..nk(40, Some(8)) },
    },
    CorpusEntry {
        name: "K_8",
        q: 2,
        m: 7,
        source: Ring(corpus_file!("K_8.rc")),
        tier: Extended,
        expected: Expected { type_ii: Some(true), ..nk(56, Some(12)) },
    },
    CorpusEntry {
        name: "K_6",
        q: 2,
        m: 7,
        source: Shortened { parent: "K_8", rows: 1, cols: 2 },
        tier: Exact,
        expected: Expected { template: Some(("W2", Some(0))), ..nk(42, Some(8)) },
    },
    CorpusEntry {
        name: "K_4",
        q: 2,
        m: 7,
        source: Shortened { parent: "K_6", rows: 1, cols: 2 },
        tier: Exact,
        expected: nk(28, Some(6)),
    },
    CorpusEntry {
        name: "K_2",
        q: 2,
        m: 7,
        source: Shortened { parent: "K_4", rows: 1, cols: 2 },
        tier: Exact,
        expected: nk(14, Some(4)),
    },
    CorpusEntry {
        name: "J_6",
        q: 4,
        m: 5,
        source: Ring(corpus_file!("J_6.rc")),
        tier: Extended,
        expected: Expected { a: &[(10, 1893)], ..nk(30, Some(10)) },
    },
    CorpusEntry {
        name: "QSD_30_4",
        q: 4,
        m: 5,
        source: Field(corpus_file!("QSD_30_4.fc")),
        tier: Extended,
        expected: Expected { a: &[(10, 1893)], aut: Some(30), ..nk(30, Some(10)) },
    },
    CorpusEntry {
        name: "J_4",
        q: 4,
        m: 5,
        source: Shortened { parent: "J_6", rows: 1, cols: 2 },
        tier: Exact,
        expected: nk(20, Some(8)),
    },
    CorpusEntry {
        name: "J_2",
        q: 4,
        m: 5,
        source: Shortened { parent: "J_4", rows: 1, cols: 2 },
        tier: Exact,
        expected: nk(10, Some(4)),
    },
    CorpusEntry {
        name: "M_6",
        q: 4,
        m: 7,
        source: Ring(corpus_file!("M_6.rc")),
        tier: Bound,
        // A_12 = 323 as printed is not divisible by 7; the enumerated count is 1323.
        expected: Expected { a: &[(12, 1323)], lee: Some(12), ..nk(42, Some(12)) },
    },
    CorpusEntry {
        name: "SSD_42_4",
        q: 4,
        m: 7,
        source: Field(corpus_file!("SSD_42_4.fc")),
        tier: Bound,
        expected: Expected { a: &[(12, 1323)], lee: Some(12), ..nk(42, Some(12)) },
    },
    CorpusEntry {
        name: "M_4",
        q: 4,
        m: 7,
        source: Shortened { parent: "M_6", rows: 1, cols: 2 },
        tier: Extended,
        expected: Expected { a: &[(9, 630)], type_ii: Some(true), lee: Some(12), ..nk(28, Some(9)) },
    },
    CorpusEntry {
        name: "SSD_28_4",
        q: 4,
        m: 7,
        source: Field(corpus_file!("SSD_28_4.fc")),
        tier: Extended,
        expected: Expected { a: &[(9, 630)], type_ii: Some(true), lee: Some(12), gray_aut: Some(7), ..nk(28, Some(9)) },
    },
    CorpusEntry {
        name: "M_2",
        q: 4,
        m: 7,
        source: Shortened { parent: "M_4", rows: 1, cols: 2 },
        tier: Exact,
        expected: nk(14, Some(6)),
    },
    CorpusEntry {
        name: "N_4",
        q: 5,
        m: 7,
        source: Ring(corpus_file!("N_4.rc")),
        tier: Extended,
        expected: nk(28, Some(10)),
    },
    CorpusEntry {
        name: "N_2",
        q: 5,
        m: 7,
        source: Shortened { parent: "N_4", rows: 1, cols: 2 },
        tier: Exact,
        expected: nk(14, Some(6)),
    },
    CorpusEntry {
        name: "I_8",
        q: 3,
        m: 5,
        source: Ring(corpus_file!("I_8.rc")),
        tier: Bound,
        expected: Expected { aut: Some(10), ..nk(40, Some(12)) },
    },
    CorpusEntry {
        name: "QSD_40_3",
        q: 3,
        m: 5,
        source: Field(corpus_file!("QSD_40_3.fc")),
        tier: Bound,
        expected: Expected { aut: Some(10), ..nk(40, Some(12)) },
    },
    CorpusEntry {
        name: "I_4",
        q: 3,
        m: 5,
        source: Shortened { parent: "I_8", rows: 2, cols: 4 },
        tier: Exact,
        expected: Expected { aut: Some(3840), ..nk(20, Some(6)) },
    },
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Drop the first `rows` generators and the first `cols` coordinates.
pub fn shorten(code: &RingCode, rows: usize, cols: usize) -> Result<RingCode> {
    if rows > code.k() || cols > code.ell() {
        return Err(Error::Domain("cannot drop more rows or columns than the code has".into()));
    }
    let gens = code.gens()[rows..].iter().map(|g| g[cols..].to_vec()).collect();
    RingCode::new(code.spec(), code.ell() - cols, gens)
}

impl CorpusEntry {
    pub fn spec(&self) -> Result<RingSpec> {
        RingSpec::from_params(self.q, self.m)
    }

    /// The code over R, when the entry has one.
    pub fn ring_code(&self) -> Result<Option<RingCode>> {
        let spec = self.spec()?;
        let parent = |name: &str| -> Result<RingCode> {
            find(name)
                .ok_or_else(|| Error::Domain(format!("unknown corpus entry {name}")))?
                .ring_code()?
                .ok_or_else(|| Error::Domain(format!("{name} has no ring form")))
        };
        Ok(match self.source {
            Ring(text) => Some(format::parse_ring_code(text)?),
            Field(_) => None,
            Extension { base, witness } => {
                let mut code = parent(base)?;
                for w in buildup::parse_witness_log(&spec, witness)? {
                    code = w.apply(&code)?;
                }
                Some(code)
            }
            Shortened { parent: p, rows, cols } => Some(shorten(&parent(p)?, rows, cols)?),
        })
    }

    pub fn field_code(&self) -> Result<FieldCode> {
        match self.source {
            Field(text) => {
                let d = format::parse_field_code(text)?;
                let ell = d.n() / self.m;
                Ok(d.with_qc_index(Some(ell)))
            }
            _ => Ok(qc::expand(&self.ring_code()?.expect("non-field source"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub tier: Tier,
    /// Counts were compared exactly (not just bounded).
    pub exact: bool,
    pub checks: Vec<Check>,
    pub enumerator: Option<WeightEnum>,
}

impl EntryReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn line(&self) -> String {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        let details: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.detail.is_empty())
            .map(|c| if c.pass { c.detail.clone() } else { format!("{} MISMATCH ({})", c.label, c.detail) })
            .collect();
        let mode = if self.exact { "" } else { " [bound mode]" };
        format!("{status}: {}{mode}: {}", self.name, details.join(", "))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Also certify counts of Extended and Bound entries.
    pub exact: bool,
    pub analysis: AnalysisOptions,
    pub equiv: EquivOptions,
}

fn check(checks: &mut Vec<Check>, label: &str, pass: bool, detail: String) {
    checks.push(Check { label: label.to_string(), pass, detail });
}

pub fn verify(entry: &CorpusEntry, opts: &VerifyOptions) -> Result<EntryReport> {
    let d = entry.field_code()?;
    let e = entry.expected;
    let exact = entry.tier == Exact || opts.exact;
    let mut checks = Vec::new();
    let report = |checks: Vec<Check>, enumerator| EntryReport {
        name: entry.name.to_string(),
        tier: entry.tier,
        exact,
        checks,
        enumerator,
    };
    let self_dual = d.is_self_dual();
    check(&mut checks, "self-dual", self_dual, String::new());
    let step = d.n() / entry.m;
    let qc = d.n() % entry.m == 0 && d.is_shift_invariant(step);
    check(&mut checks, "quasi-cyclic", qc, String::new());
    if !self_dual || !qc {
        return Ok(report(checks, None));
    }
    let nk_ok = d.n() == e.n && d.k() == e.k;
    check(&mut checks, "length", nk_ok, format!("[{},{}]", d.n(), d.k()));

    let template_horizon = e.template.and_then(|_| analysis::template_weight_horizon(d.n())).unwrap_or(0);
    let a_horizon = e.a.iter().map(|x| x.0).max().unwrap_or(0);
    let enumerator = if exact {
        let horizon = [e.d.unwrap_or(0), template_horizon, a_horizon].into_iter().max().unwrap_or(0).max(1);
        let w = analysis::weight_enumerator_auto(&d, horizon, &opts.analysis)?;
        let md = w.min_distance();
        if let Some(dv) = e.d {
            check(&mut checks, "d", md == Some(dv), format!("d={}", md.map_or("-".into(), |v| v.to_string())));
        }
        for &(i, a) in e.a {
            let got = w.a(i);
            check(&mut checks, &format!("A_{i}"), got == Some(a), format!("A_{i}={}", got.map_or("?".into(), |v| v.to_string())));
        }
        if let Some((name, beta)) = e.template {
            let m = analysis::match_template(&w);
            let got = m.matched().cloned();
            let ok = got.as_ref().is_some_and(|t| t.name == name && (beta.is_none() || t.beta == beta));
            let shown = match &got {
                Some(t) => match t.beta {
                    Some(b) => format!("{} β={b}", t.name),
                    None => t.name.clone(),
                },
                None => format!("{m:?}"),
            };
            check(&mut checks, "template", ok, shown);
        }
        let div = analysis::divisibility_check(&w, entry.m as u64);
        check(&mut checks, "divisibility", div, String::new());
        Some(w)
    } else {
        // no words below the expected distance
        let bound = e.d.unwrap_or(2);
        let w = analysis::weight_enumerator_prefix(&d, bound - 1, &opts.analysis)?;
        let ok = w.counts.iter().skip(1).all(|&c| c == 0);
        check(&mut checks, "d bound", ok, format!("d≥{bound}"));
        let div = analysis::divisibility_check(&w, entry.m as u64);
        check(&mut checks, "divisibility", div, String::new());
        Some(w)
    };
    if let Some(t) = e.type_ii {
        let got = match d.field() {
            FieldSpec::F2 => analysis::is_type_ii_binary(&d),
            FieldSpec::F4 => analysis::is_type_ii_f4(&d)?,
            _ => return Err(Error::Domain("Type II is defined here for q = 2, 4".into())),
        };
        check(&mut checks, "Type II", got == t, if got { "Type II".into() } else { "not Type II".into() });
    }
    if let (Some(l), true) = (e.lee, exact) {
        let got = analysis::lee_distance(&d, &opts.analysis)?;
        check(&mut checks, "d_L", got.exact && got.value == l, format!("d_L={}", got.value));
    }
    if let Some(a) = e.aut {
        if exact {
            let eopts = EquivOptions { max_aut_len: opts.equiv.max_aut_len.max(d.n()), ..opts.equiv.clone() };
            let got = equiv::automorphism_order(&d, &eopts)?;
            check(&mut checks, "|Aut|", got == a, format!("|Aut|={got}"));
        }
    }
    if let (Some(a), true) = (e.gray_aut, exact) {
        let g = qc::gray_image(&d)?;
        let eopts = EquivOptions { max_aut_len: opts.equiv.max_aut_len.max(g.n()), ..opts.equiv.clone() };
        let got = equiv::automorphism_order(&g, &eopts)?;
        check(&mut checks, "|Aut(gray)|", got == a, format!("|Aut(gray)|={got}"));
    }
    Ok(report(checks, enumerator))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_resolvable() {
        for (i, e) in ENTRIES.iter().enumerate() {
            assert!(ENTRIES[..i].iter().all(|o| o.name != e.name));
            if let Extension { base, .. } | Shortened { parent: base, .. } = e.source {
                assert!(find(base).is_some(), "{}", e.name);
            }
        }
    }

    #[test]
    fn small_entries_expand() {
        let d = find("K_2").unwrap().field_code().unwrap();
        assert_eq!((d.n(), d.k()), (14, 7));
        assert!(d.is_self_dual());
    }
}
