//! Verification suites: every check is a pair of structured values that must
//! agree, so `pass` is `lhs == rhs` by construction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::binom::lucas;
use crate::constraints::{enumerate_admissible, nonstandard_case_list, I_MAX_LIMIT};
use crate::error::{Error, Result};
use crate::obstruction::{
    bound_chain_value, check_lemma_u0, check_lemma_ugt1, check_prop_bound, lemma_u0_closed_form,
    BoundCase, DOLD, RP,
};

pub const U_MAX: u32 = 6;
pub const V_MAX: u32 = 8;
pub const K_MAX: u32 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    LemmaU0,
    LemmaUgt1,
    PropIii,
    PropIv,
    Theorem,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "all",
        "lemma-u0",
        "lemma-ugt1",
        "prop-iii",
        "prop-iv",
        "theorem",
    ];

    const PARTS: [Suite; 5] = [
        Suite::LemmaU0,
        Suite::LemmaUgt1,
        Suite::PropIii,
        Suite::PropIv,
        Suite::Theorem,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::LemmaU0 => "lemma-u0",
            Suite::LemmaUgt1 => "lemma-ugt1",
            Suite::PropIii => "prop-iii",
            Suite::PropIv => "prop-iv",
            Suite::Theorem => "theorem",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "lemma-u0" => Ok(Suite::LemmaU0),
            "lemma-ugt1" => Ok(Suite::LemmaUgt1),
            "prop-iii" => Ok(Suite::PropIii),
            "prop-iv" => Ok(Suite::PropIv),
            "theorem" => Ok(Suite::Theorem),
            _ => Err(Error::domain(format!(
                "unknown suite `{s}` (expected one of {})",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Optional parameter overrides; `None` selects the suite's default range.
/// Values that do not fit a suite (wrong parity, not applicable) are skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub u: Option<Vec<u32>>,
    pub v: Option<Vec<u32>>,
    pub i: Option<Vec<u32>>,
    pub k: Option<Vec<u32>>,
}

impl SuiteParams {
    fn validate(&self) -> Result<()> {
        let guard = |name: &str, values: &Option<Vec<u32>>, lo: u32, hi: u32| -> Result<()> {
            match values.iter().flatten().find(|&&x| x < lo || x > hi) {
                Some(x) => Err(Error::domain(format!(
                    "--{name} value {x} outside {lo}..{hi}"
                ))),
                None => Ok(()),
            }
        };
        guard("u", &self.u, 0, U_MAX)?;
        guard("v", &self.v, 0, V_MAX)?;
        guard("i", &self.i, 1, I_MAX_LIMIT as u32)?;
        guard("k", &self.k, 1, K_MAX)
    }

    fn us(&self, default: &[u32]) -> Vec<u32> {
        self.u.clone().unwrap_or_else(|| default.to_vec())
    }

    fn vs(&self, default: &[u32]) -> Vec<u32> {
        self.v.clone().unwrap_or_else(|| default.to_vec())
    }

    fn k_allowed(&self, k: u32) -> bool {
        self.k.as_ref().is_none_or(|ks| ks.contains(&k))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub statement: String,
    pub parameters: BTreeMap<String, Json>,
    pub lhs: Json,
    pub rhs: Json,
    pub pass: bool,
}

impl VerificationReport {
    fn new(
        check_id: &str,
        statement: impl Into<String>,
        parameters: BTreeMap<String, Json>,
        lhs: Json,
        rhs: Json,
    ) -> Self {
        let pass = lhs == rhs;
        VerificationReport {
            check_id: check_id.into(),
            statement: statement.into(),
            parameters,
            lhs,
            rhs,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteOutput {
    pub suite: Suite,
    pub version: &'static str,
    pub all_pass: bool,
    pub reports: Vec<VerificationReport>,
}

fn bit(b: bool) -> Json {
    json!(u8::from(b))
}

fn bits(bs: &[bool]) -> Json {
    Json::Array(bs.iter().map(|&b| bit(b)).collect())
}

fn params<const N: usize>(pairs: [(&str, Json); N]) -> BTreeMap<String, Json> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn lemma_u0(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let is: Vec<u32> = match &p.i {
        Some(is) => is.iter().copied().filter(|i| i % 2 == 1).collect(),
        None => (1..=63).step_by(2).collect(),
    };
    is.par_iter()
        .map(|&i| {
            let c = check_lemma_u0(i)?;
            Ok(VerificationReport::new(
                "lemma-u0",
                "w^_2 e^(2i+1)[RP(nu^2)] = 1 + binom(i+3, 2)",
                params([
                    ("i", json!(i)),
                    ("admissible", json!(c.admissible)),
                    ("per_component", bits(&c.per_component)),
                ]),
                bit(c.value),
                bit(lemma_u0_closed_form(i)),
            ))
        })
        .collect()
}

fn lemma_ugt1(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let mut tuples = Vec::new();
    for u in p.us(&[2, 3, 4]).into_iter().filter(|&u| u >= 2) {
        for &v in &p.vs(&[0, 1, 2]) {
            for a in [1, 3] {
                for k in (2..=(1 << (u + 1)) + 6).step_by(2) {
                    if p.k_allowed(k) {
                        tuples.push((u, v, a, k));
                    }
                }
            }
        }
    }
    tuples
        .par_iter()
        .map(|&(u, v, a, k)| {
            let c = check_lemma_ugt1(u, v, a, k)?;
            Ok(VerificationReport::new(
                "lemma-ugt1",
                "top e-numbers [Dold, RP^2] = [a = 1, k = 2 mod 4]",
                params([
                    ("u", json!(u)),
                    ("v", json!(v)),
                    ("a", json!(a)),
                    ("k", json!(k)),
                    ("consistent", json!(c.consistent)),
                    ("class_fits_rank", json!(c.class_fits_rank)),
                ]),
                bits(&[c.dold_top, c.rp_top]),
                bits(&[a == 1, k % 4 == 2]),
            ))
        })
        .collect()
}

fn prop_ks(case: BoundCase, u: u32, p: &SuiteParams) -> Vec<u32> {
    let lo = case.threshold(u) + 1;
    let hi = (1 << (u + 1)) + 8;
    (lo..=hi)
        .filter(|k| k % 4 == case.residue() && p.k_allowed(*k))
        .collect()
}

fn prop_suite(case: BoundCase, p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let uvs: Vec<(u32, u32)> = p
        .us(&[2, 3])
        .into_iter()
        .filter(|&u| u >= 2)
        .flat_map(|u| p.vs(&[0, 1]).into_iter().map(move |v| (u, v)))
        .collect();
    let per_uv: Vec<Vec<VerificationReport>> = uvs
        .par_iter()
        .map(|&(u, v)| {
            let mut out = Vec::new();
            let n = (1u64 << u) * (v as u64 + 1);
            let m = (1u64 << u) * v as u64;
            out.push(VerificationReport::new(
                "chain-binomial",
                "binom(2^u(v+1) - 1, 2^u v) = 1 mod 2",
                params([("u", json!(u)), ("v", json!(v))]),
                bit(lucas(n - 1, m)),
                bit(true),
            ));
            if case == BoundCase::Iii {
                let first = check_prop_bound(case, u, v, case.threshold(u) + 4)?;
                out.push(VerificationReport::new(
                    "chain-base",
                    "(1+c) d^N (1+c+c^2+d)^(N-1)[P(2,i)] = Dold-side number = 1",
                    params([
                        ("u", json!(u)),
                        ("v", json!(v)),
                        ("N", json!(n)),
                        ("k", json!(case.threshold(u) + 4)),
                    ]),
                    bits(&[bound_chain_value(u, v)?, first.per_component[DOLD]]),
                    bits(&[true, true]),
                ));
            }
            for k in prop_ks(case, u, p) {
                let c = check_prop_bound(case, u, v, k)?;
                let mut ps = params([
                    ("u", json!(u)),
                    ("v", json!(v)),
                    ("k", json!(k)),
                    ("per_component", bits(&c.per_component)),
                ]);
                let report = match case {
                    BoundCase::Iii => VerificationReport::new(
                        "prop-iii",
                        "w^_4^N e^(1+k-2^(u+1)) is 1 on the Dold side and 0 on RP^2",
                        ps,
                        bits(&[c.per_component[DOLD], c.per_component[RP]]),
                        bits(&[true, false]),
                    ),
                    BoundCase::Iv => {
                        if let Some(d) = &c.displayed {
                            ps.insert("displayed_total".into(), bit(d.total));
                            ps.insert("displayed_per_component".into(), bits(&d.per_component));
                        }
                        VerificationReport::new(
                            "prop-iv",
                            "w^_4^N (1+w[0]_1)^2 e^(k-2^(u+1)-1) total number = 1",
                            ps,
                            bit(c.obstruction),
                            bit(true),
                        )
                    }
                };
                out.push(report);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_uv.into_iter().flatten().collect())
}

fn theorem(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let is: Vec<u64> = match &p.i {
        Some(is) => is.iter().map(|&i| u64::from(i)).collect(),
        None => (1..=32).collect(),
    };
    let Some(&i_max) = is.iter().max() else {
        return Ok(Vec::new());
    };
    let found = enumerate_admissible(2, i_max, 1)?;
    let expected = nonstandard_case_list(i_max);
    Ok(is
        .iter()
        .map(|&i| {
            let lhs: Vec<Json> = found
                .iter()
                .filter(|r| r.tuple.i == i)
                .map(|r| json!([r.tuple.k, r.tuple.a, r.nonstandard_case]))
                .collect();
            let rhs: Vec<Json> = expected
                .iter()
                .filter(|row| row.0 == i)
                .map(|&(_, k, a, case)| json!([k, a, case]))
                .collect();
            VerificationReport::new(
                "theorem",
                "admissible (k, a, case) for h = 2, eps = 1 = nonstandard case list",
                params([("h", json!(2)), ("i", json!(i)), ("eps", json!(1))]),
                Json::Array(lhs),
                Json::Array(rhs),
            )
        })
        .collect())
}

fn run_part(suite: Suite, p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    match suite {
        Suite::All => {
            let mut out = Vec::new();
            for part in Suite::PARTS {
                out.extend(run_part(part, p)?);
            }
            Ok(out)
        }
        Suite::LemmaU0 => lemma_u0(p),
        Suite::LemmaUgt1 => lemma_ugt1(p),
        Suite::PropIii => prop_suite(BoundCase::Iii, p),
        Suite::PropIv => prop_suite(BoundCase::Iv, p),
        Suite::Theorem => theorem(p),
    }
}

/// Runs a suite. Reports come back in a fixed order regardless of how the
/// parallel work is scheduled.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<Vec<VerificationReport>> {
    params.validate()?;
    run_part(suite, params)
}

pub fn suite_output(suite: Suite, params: &SuiteParams) -> Result<SuiteOutput> {
    let reports = run_suite(suite, params)?;
    Ok(SuiteOutput {
        suite,
        version: env!("CARGO_PKG_VERSION"),
        all_pass: reports.iter().all(|r| r.pass),
        reports,
    })
}
