//! Arithmetic admissibility of fixed data `RP^j ⊔ P(h,i)`.
//!
//! Every clause is evaluated literally and reported by id, so an excluded
//! tuple always names at least one failed clause.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `i` accepted by [`enumerate_admissible`].
pub const I_MAX_LIMIT: u64 = 1 << 12;

/// `i = 2^u (2v+1)`.
pub fn decompose(i: u64) -> Result<(u32, u64)> {
    if i == 0 {
        return Err(Error::domain("decompose needs i >= 1"));
    }
    let u = i.trailing_zeros();
    Ok((u, ((i >> u) - 1) / 2))
}

/// The shared part of the binary expansions of `h` and `a`.
pub fn common(h: u64, a: u64) -> u64 {
    h & a
}

/// Upper bound on `k`: `2^(u+1) + 2` for `u = 1`, else `2^(u+1)`.
pub fn k_bound(u: u32) -> u64 {
    let b = 1u64 << (u + 1);
    if u == 1 {
        b + 2
    } else {
        b
    }
}

/// `A` with `2^A <= h <= 2^(A+1)`, taking the lower value when `h` is a
/// power of two (where `A - 1` also satisfies the inequality).
fn exponent_a(h: u64) -> u32 {
    63 - h.leading_zeros()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FixedDataTuple {
    pub h: u64,
    pub i: u64,
    pub k: u64,
    pub a: u64,
    pub b: u64,
    pub eps: u8,
    pub q: u64,
    pub j: u64,
}

impl FixedDataTuple {
    /// A tuple with `(b, q, j) = (1, h+1, 2i+k-1)`.
    pub fn canonical(h: u64, i: u64, k: u64, a: u64, eps: u8) -> Self {
        FixedDataTuple {
            h,
            i,
            k,
            a,
            b: 1,
            eps,
            q: h + 1,
            j: (2 * i + k).saturating_sub(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub id: &'static str,
    pub applicable: bool,
    pub pass: bool,
    pub detail: String,
}

impl ClauseResult {
    fn check(id: &'static str, pass: bool, detail: String) -> Self {
        ClauseResult {
            id,
            applicable: true,
            pass,
            detail,
        }
    }

    fn skipped(id: &'static str, detail: String) -> Self {
        ClauseResult {
            id,
            applicable: false,
            pass: true,
            detail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Admissible,
    Excluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub tuple: FixedDataTuple,
    pub u: u32,
    pub v: u64,
    #[serde(rename = "A")]
    pub exponent_a: u32,
    pub general_clauses: Vec<ClauseResult>,
    pub standard_clauses: Vec<ClauseResult>,
    pub nonstandard_clauses: Vec<ClauseResult>,
    pub nonstandard_case: Option<u8>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.verdict == Verdict::Admissible
    }

    pub fn failed(&self) -> impl Iterator<Item = &ClauseResult> {
        self.general_clauses
            .iter()
            .chain(&self.standard_clauses)
            .chain(&self.nonstandard_clauses)
            .filter(|c| !c.pass)
    }
}

fn congruent(x: u64, y: u64, modulus: u64) -> bool {
    x % modulus == y % modulus
}

fn standard_clauses(t: &FixedDataTuple, u: u32, v: u64, big_a: u32) -> Vec<ClauseResult> {
    let m = 1u64 << (big_a + 1);
    let pow_u = 1u64 << u;
    let (i, k, a, j, h) = (t.i, t.k, t.a, t.j, t.h);
    let mut out = vec![
        ClauseResult::check("I(1)", a < pow_u, format!("a = {a} < 2^u = {pow_u}")),
        ClauseResult::check(
            "I(2):j",
            congruent(j + 1, i + a + 1, m),
            format!("j+1 = {} ≡ i+a+1 = {} mod {m}", j + 1, i + a + 1),
        ),
        ClauseResult::check(
            "I(2):k",
            congruent(i + k, a + 1, m),
            format!("i+k = {} ≡ a+1 = {} mod {m}", i + k, a + 1),
        ),
    ];
    if u <= big_a {
        let tail = (1u64 << (u + 1)) * (v + 1);
        out.push(ClauseResult::check(
            "I(2)(a)",
            k == pow_u + a + 1 && tail.is_multiple_of(m),
            format!(
                "k = {k} = 2^u+a+1 = {} and 2^(u+1)(v+1) = {tail} ≡ 0 mod {m}",
                pow_u + a + 1
            ),
        ));
        out.push(ClauseResult::skipped(
            "I(2)(b)",
            format!("u = {u} <= A = {big_a}"),
        ));
        out.push(ClauseResult::check(
            "I(c)",
            a + 2 <= k && k <= pow_u + a + 1,
            format!(
                "X1 = a+2 = {} <= k = {k} <= 2^u+a+1 = {}",
                a + 2,
                pow_u + a + 1
            ),
        ));
        out.push(ClauseResult::skipped(
            "I(d)",
            format!("u = {u} <= A = {big_a}"),
        ));
    } else {
        out.push(ClauseResult::skipped(
            "I(2)(a)",
            format!("u = {u} > A = {big_a}"),
        ));
        out.push(ClauseResult::check(
            "I(2)(b)",
            congruent(k, a + 1, m),
            format!("k = {k} ≡ a+1 = {} mod {m}", a + 1),
        ));
        out.push(ClauseResult::skipped(
            "I(c)",
            format!("u = {u} > A = {big_a}"),
        ));
        let x2_cap = (1i64 << (u + 1)) - (h as i64 - common(h, a) as i64);
        out.push(ClauseResult::check(
            "I(d)",
            (k as i64) <= x2_cap,
            format!(
                "k = {k} <= 2^(u+1) - (h - common(h,a)) = {x2_cap}, common = {}",
                common(h, a)
            ),
        ));
    }
    out
}

/// Which of the four nonstandard cases `(u, k, a, v)` matches, if any.
fn nonstandard_case(u: u32, v: u64, k: u64, a: u64) -> Option<u8> {
    let two_u1 = 1u64 << (u + 1);
    match (u, k, a) {
        (0, 2, 2) if v % 2 == 1 => Some(1),
        (1, 4, 1) => Some(2),
        (u, k, 1) if u > 1 && k % 4 == 2 && (6..=two_u1 - 2).contains(&k) => Some(3),
        (u, k, 3) if u > 1 && k % 4 == 0 && (4..=two_u1).contains(&k) => Some(4),
        _ => None,
    }
}

/// Evaluates every clause of the theorem against `t`.
pub fn check_theorem(t: &FixedDataTuple) -> Result<AdmissibilityReport> {
    if t.h == 0 {
        return Err(Error::domain("h must be at least 1"));
    }
    if t.eps > 1 {
        return Err(Error::domain("eps must be 0 or 1"));
    }
    let (u, v) = decompose(t.i)?;
    let big_a = exponent_a(t.h);
    let kb = k_bound(u);

    let general = vec![
        ClauseResult::check(
            "bqj",
            t.b == 1 && t.q == t.h + 1 && t.j + 1 == 2 * t.i + t.k,
            format!(
                "(b,q,j) = ({},{},{}) vs (1,{},{})",
                t.b,
                t.q,
                t.j,
                t.h + 1,
                (2 * t.i + t.k).saturating_sub(1)
            ),
        ),
        ClauseResult::check("k-even", t.k.is_multiple_of(2), format!("k = {}", t.k)),
        ClauseResult::check(
            "k-range",
            (2..=kb).contains(&t.k),
            format!("2 <= k = {} <= {kb}", t.k),
        ),
        ClauseResult::check(
            "i+a-odd",
            (t.i + t.a) % 2 == 1,
            format!("i+a = {}", t.i + t.a),
        ),
    ];

    let mut reasons = Vec::new();
    let mut standard = Vec::new();
    let mut nonstandard = Vec::new();
    let mut case = None;

    if t.eps == 0 {
        standard = standard_clauses(t, u, v, big_a);
        if t.h.is_power_of_two() && big_a > 0 {
            let alt = standard_clauses(t, u, v, big_a - 1);
            let differs = standard
                .iter()
                .zip(&alt)
                .any(|(x, y)| x.pass != y.pass || x.applicable != y.applicable);
            if differs {
                reasons.push(format!(
                    "h = {} is a power of two; the alternative A = {} changes the (I) clauses",
                    t.h,
                    big_a - 1
                ));
            }
        }
    } else {
        nonstandard.push(ClauseResult::check(
            "II:h=2",
            t.h == 2,
            "nonstandard requires h=2".to_string(),
        ));
        case = nonstandard_case(u, v, t.k, t.a);
        nonstandard.push(ClauseResult::check(
            "II:case",
            case.is_some(),
            match case {
                Some(n) => format!("matches case ({n})"),
                None => format!(
                    "(u,k,a,v) = ({u},{},{},{v}) matches none of the four nonstandard cases",
                    t.k, t.a
                ),
            },
        ));
        if case == Some(2) {
            reasons.push("case (2): the bundle is ν^4 = τ⊕(τ⊗η) (printed as ν^2)".into());
        }
    }

    let failed: Vec<String> = general
        .iter()
        .chain(&standard)
        .chain(&nonstandard)
        .filter(|c| !c.pass)
        .map(|c| format!("{} failed: {}", c.id, c.detail))
        .collect();
    let verdict = if failed.is_empty() {
        Verdict::Admissible
    } else {
        Verdict::Excluded
    };
    reasons.splice(0..0, failed);

    Ok(AdmissibilityReport {
        tuple: *t,
        u,
        v,
        exponent_a: big_a,
        general_clauses: general,
        standard_clauses: standard,
        nonstandard_clauses: nonstandard,
        nonstandard_case: case,
        verdict,
        reasons,
    })
}

/// Values of `a` worth trying: `(1+c)^a` only depends on `a` modulo the
/// least power of two above `h`.
pub fn a_range(h: u64) -> std::ops::Range<u64> {
    0..(h + 1).next_power_of_two()
}

/// Every admissible canonical tuple with `i <= i_max`,
/// `k <= k_bound(u) + 4` and `a` in [`a_range`], ordered by `(i, k, a)`.
pub fn enumerate_admissible(h: u64, i_max: u64, eps: u8) -> Result<Vec<AdmissibilityReport>> {
    if i_max > I_MAX_LIMIT {
        return Err(Error::domain(format!(
            "i_max = {i_max} exceeds the limit {I_MAX_LIMIT}"
        )));
    }
    let mut out = Vec::new();
    for i in 1..=i_max {
        let (u, _) = decompose(i)?;
        for k in 1..=k_bound(u) + 4 {
            for a in a_range(h) {
                let report = check_theorem(&FixedDataTuple::canonical(h, i, k, a, eps))?;
                if report.admissible() {
                    out.push(report);
                }
            }
        }
    }
    Ok(out)
}

/// `(i, k, a, case)` for `h = 2`, `eps = 1`, read straight off the four
/// nonstandard cases by range rather than by clause evaluation.
pub fn nonstandard_case_list(i_max: u64) -> Vec<(u64, u64, u64, u8)> {
    let mut out = Vec::new();
    for i in 1..=i_max {
        let u = i.trailing_zeros();
        let v = ((i >> u) - 1) / 2;
        let two_u1 = 1u64 << (u + 1);
        match u {
            0 if v % 2 == 1 => out.push((i, 2, 2, 1)),
            0 => {}
            1 => out.push((i, 4, 1, 2)),
            _ => {
                let mut rows: Vec<_> = (6..=two_u1 - 2)
                    .step_by(4)
                    .map(|k| (i, k, 1, 3))
                    .chain((4..=two_u1).step_by(4).map(|k| (i, k, 3, 4)))
                    .collect();
                rows.sort();
                out.extend(rows);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(12).unwrap(), (2, 1));
        assert_eq!(decompose(7).unwrap(), (0, 3));
        assert_eq!(decompose(8).unwrap(), (3, 0));
        assert!(decompose(0).is_err());
    }

    #[test]
    fn common_examples() {
        assert_eq!(common(2, 3), 2);
        assert_eq!(common(4, 3), 0);
        assert_eq!(common(13, 13), 13);
    }

    #[test]
    fn k_bounds() {
        assert_eq!(k_bound(1), 6);
        assert_eq!(k_bound(2), 8);
        assert_eq!(k_bound(0), 2);
    }

    #[test]
    fn exponent_a_takes_lower_value() {
        assert_eq!(exponent_a(1), 0);
        assert_eq!(exponent_a(2), 1);
        assert_eq!(exponent_a(3), 1);
        assert_eq!(exponent_a(4), 2);
        assert_eq!(exponent_a(7), 2);
    }

    #[test]
    fn nonstandard_examples() {
        // i = 2 gives u = 1
        let r = check_theorem(&FixedDataTuple::canonical(2, 2, 4, 1, 1)).unwrap();
        assert_eq!(r.nonstandard_case, Some(2));
        assert!(r.admissible());

        // u = 0, v even: i = 1 or 5
        let r = check_theorem(&FixedDataTuple::canonical(2, 5, 2, 2, 1)).unwrap();
        assert!(!r.admissible());
        assert!(r.failed().any(|c| c.id == "II:case"));
        let r = check_theorem(&FixedDataTuple::canonical(2, 7, 2, 2, 1)).unwrap();
        assert_eq!(r.nonstandard_case, Some(1));
        assert!(r.admissible());

        let r = check_theorem(&FixedDataTuple::canonical(3, 2, 4, 1, 1)).unwrap();
        assert!(!r.admissible());
        assert!(r
            .reasons
            .iter()
            .any(|s| s.contains("nonstandard requires h=2")));
    }

    #[test]
    fn bqj_mismatch_is_reported() {
        let mut t = FixedDataTuple::canonical(2, 2, 4, 1, 1);
        t.q = 4;
        let r = check_theorem(&t).unwrap();
        assert!(!r.admissible());
        assert_eq!(r.failed().next().unwrap().id, "bqj");
    }

    #[test]
    fn standard_a_bound() {
        // u = 1 (i = 2), a = 3 >= 2^u
        let r = check_theorem(&FixedDataTuple::canonical(2, 2, 4, 3, 0)).unwrap();
        assert!(r.failed().any(|c| c.id == "I(1)"));
        let all = enumerate_admissible(2, 16, 0).unwrap();
        for rep in &all {
            assert!(rep.tuple.a < 1 << rep.u);
        }
    }

    #[test]
    fn standard_enumeration_small() {
        // h = 1: A = 0, modulus 2. u >= 1 > A uses (b) and (d).
        let all = enumerate_admissible(1, 8, 0).unwrap();
        assert!(!all.is_empty());
        for rep in &all {
            assert_eq!(rep.tuple.eps, 0);
            assert!(rep.failed().next().is_none());
        }
    }

    #[test]
    fn enumeration_guard() {
        assert!(enumerate_admissible(2, I_MAX_LIMIT + 1, 1).is_err());
    }

    #[test]
    fn case_list_small() {
        let list = nonstandard_case_list(8);
        assert!(list.contains(&(2, 4, 1, 2)));
        assert!(list.contains(&(6, 4, 1, 2)));
        assert!(list.contains(&(3, 2, 2, 1)));
        assert!(list.contains(&(7, 2, 2, 1)));
        assert!(!list.iter().any(|r| r.0 == 1 || r.0 == 5));
        let at4: Vec<_> = list.iter().filter(|r| r.0 == 4).collect();
        assert_eq!(at4, vec![&(4, 4, 3, 4), &(4, 6, 1, 3), &(4, 8, 3, 4)]);
    }
}
