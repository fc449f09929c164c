//! Graded-commutative polynomial rings over GF(2) with per-generator
//! truncations and single-generator rewrite rules.
//!
//! Every [`ClassPoly`] is kept in normal form: each monomial respects the
//! truncation bounds of its ring, no rewrite rule applies to it, and the
//! terms are stored in a sorted set under graded-lex order. Structural
//! equality of two classes is therefore equality in the ring.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::binom::lucas;
use crate::error::{Error, Result};

/// A polynomial generator: name, degree and truncation.
///
/// A truncation of `n > 0` imposes `g^(n+1) = 0`; `0` leaves the generator
/// free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub truncation: u32,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, degree: u32, truncation: u32) -> Self {
        GeneratorSpec {
            name: name.into(),
            degree,
            truncation,
        }
    }

    #[inline]
    fn admits(&self, exponent: u32) -> bool {
        self.truncation == 0 || exponent <= self.truncation
    }
}

/// `g^power -> rhs`. Every rhs term has a smaller exponent of `g` and the
/// same total degree as the left side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Rewrite {
    generator: usize,
    power: u32,
    rhs: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    generators: Vec<GeneratorSpec>,
    rewrites: Vec<Rewrite>,
}

/// Shared handle to a ring; classes hold one of these.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new(generators: Vec<GeneratorSpec>) -> Result<Ring> {
        let mut seen = HashSet::new();
        for g in &generators {
            if g.degree == 0 {
                return Err(Error::InvalidRing(format!(
                    "generator `{}` has degree 0",
                    g.name
                )));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::InvalidRing(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        Ok(Arc::new(RingSpec {
            generators,
            rewrites: Vec::new(),
        }))
    }

    /// Returns a copy of this ring with the rule `generator^power -> rhs`.
    ///
    /// `rhs` must live in a ring with the same generators.
    pub fn with_rewrite(&self, generator: &str, power: u32, rhs: &ClassPoly) -> Result<Ring> {
        if rhs.ring.generators != self.generators {
            return Err(Error::RingMismatch(
                "rewrite right side uses different generators".into(),
            ));
        }
        let idx = self.index_of(generator)?;
        if power == 0 {
            return Err(Error::InvalidRing("rewrite power must be positive".into()));
        }
        if self.rewrites.iter().any(|r| r.generator == idx) {
            return Err(Error::InvalidRing(format!(
                "generator `{generator}` already has a rewrite rule"
            )));
        }
        let lhs_degree = power * self.generators[idx].degree;
        for m in &rhs.terms {
            if m.exps[idx] >= power {
                return Err(Error::InvalidRing(format!(
                    "rewrite for `{generator}^{power}` does not lower its exponent"
                )));
            }
            if m.degree != lhs_degree {
                return Err(Error::InvalidRing(format!(
                    "rewrite for `{generator}^{power}` is not homogeneous"
                )));
            }
        }
        let mut rewrites = self.rewrites.clone();
        rewrites.push(Rewrite {
            generator: idx,
            power,
            rhs: rhs.terms.iter().cloned().collect(),
        });
        Ok(Arc::new(RingSpec {
            generators: self.generators.clone(),
            rewrites,
        }))
    }

    /// Same generators plus `extra` appended at the end, no rewrite rules.
    pub fn extended(&self, extra: GeneratorSpec) -> Result<Ring> {
        let mut gens = self.generators.clone();
        gens.push(extra);
        RingSpec::new(gens)
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn has_rewrites(&self) -> bool {
        !self.rewrites.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial {
            degree: 0,
            exps: vec![0; self.generators.len()],
        }
    }

    /// Builds a monomial from `(name, exponent)` pairs. Repeated names add up.
    pub fn monomial(&self, powers: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps = vec![0; self.generators.len()];
        for &(name, e) in powers {
            exps[self.index_of(name)?] += e;
        }
        Ok(self.monomial_from_exponents(exps))
    }

    pub fn monomial_from_exponents(&self, exps: Vec<u32>) -> Monomial {
        debug_assert_eq!(exps.len(), self.generators.len());
        let degree = exps
            .iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum();
        Monomial { degree, exps }
    }

    fn in_bounds(&self, m: &Monomial) -> bool {
        m.exps
            .iter()
            .zip(&self.generators)
            .all(|(&e, g)| g.admits(e))
    }

    /// Normal form of a GF(2) sum of monomials. Duplicates in `raw` must
    /// already have been cancelled.
    fn normalize(&self, raw: HashSet<Monomial>) -> BTreeSet<Monomial> {
        let mut current: HashSet<Monomial> =
            raw.into_iter().filter(|m| self.in_bounds(m)).collect();
        loop {
            let mut changed = false;
            for rw in &self.rewrites {
                let g = rw.generator;
                if current.iter().all(|m| m.exps[g] < rw.power) {
                    continue;
                }
                changed = true;
                let shift = rw.power * self.generators[g].degree;
                let mut buckets: BTreeMap<u32, HashSet<Monomial>> = BTreeMap::new();
                for m in current.drain() {
                    toggle(buckets.entry(m.exps[g]).or_default(), m);
                }
                // Each rewrite strictly lowers the exponent of `g`, so
                // draining the top bucket always terminates.
                while buckets
                    .last_key_value()
                    .is_some_and(|(&top, _)| top >= rw.power)
                {
                    let (_, bucket) = buckets.pop_last().unwrap();
                    for mut m in bucket {
                        m.exps[g] -= rw.power;
                        m.degree -= shift;
                        for r in &rw.rhs {
                            let n = m.times(r);
                            if self.in_bounds(&n) {
                                toggle(buckets.entry(n.exps[g]).or_default(), n);
                            }
                        }
                    }
                }
                current = buckets.into_values().flatten().collect();
            }
            if !changed {
                break;
            }
        }
        current.into_iter().collect()
    }
}

#[inline]
fn toggle(set: &mut HashSet<Monomial>, m: Monomial) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

/// A monomial as an exponent vector aligned with its ring's generators.
///
/// The derived ordering compares total degree first, then exponents
/// lexicographically: graded-lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Appends a generator with the given exponent and degree.
    pub(crate) fn pushed(&self, exponent: u32, degree: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(exponent);
        Monomial {
            degree: self.degree + exponent * degree,
            exps,
        }
    }

    /// Drops the generator at `index`, returning the remaining monomial and
    /// the dropped exponent.
    pub(crate) fn split_off(&self, index: usize, degree: u32) -> (Monomial, u32) {
        let mut exps = self.exps.clone();
        let e = exps.remove(index);
        (
            Monomial {
                degree: self.degree - e * degree,
                exps,
            },
            e,
        )
    }

    fn squared(&self) -> Monomial {
        Monomial {
            degree: 2 * self.degree,
            exps: self.exps.iter().map(|e| 2 * e).collect(),
        }
    }

    fn write(&self, ring: &RingSpec, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (e, g) in self.exps.iter().zip(&ring.generators) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&g.name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A cohomology class: a reduced GF(2) polynomial in a [`RingSpec`].
#[derive(Clone, Debug)]
pub struct ClassPoly {
    ring: Ring,
    terms: BTreeSet<Monomial>,
}

impl PartialEq for ClassPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for ClassPoly {}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(
            "operands belong to different rings".into(),
        ))
    }
}

impl ClassPoly {
    pub fn zero(ring: &Ring) -> Self {
        ClassPoly {
            ring: ring.clone(),
            terms: BTreeSet::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        ClassPoly::from_monomials(ring, [ring.unit_monomial()])
    }

    pub fn scalar(ring: &Ring, bit: bool) -> Self {
        if bit {
            ClassPoly::one(ring)
        } else {
            ClassPoly::zero(ring)
        }
    }

    pub fn generator(ring: &Ring, name: &str) -> Result<Self> {
        Ok(ClassPoly::from_monomials(
            ring,
            [ring.monomial(&[(name, 1)])?],
        ))
    }

    /// Sums the given monomials over GF(2) and reduces.
    pub fn from_monomials(ring: &Ring, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut raw = HashSet::new();
        for m in monomials {
            assert_eq!(
                m.exps.len(),
                ring.generators.len(),
                "monomial does not match ring arity"
            );
            toggle(&mut raw, m);
        }
        ClassPoly {
            ring: ring.clone(),
            terms: ring.normalize(raw),
        }
    }

    /// Convenience constructor: each entry is one monomial given as
    /// `(name, exponent)` pairs; `&[]` is the unit.
    pub fn from_terms(ring: &Ring, terms: &[&[(&str, u32)]]) -> Result<Self> {
        let monos = terms
            .iter()
            .map(|t| ring.monomial(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassPoly::from_monomials(ring, monos))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn constant_term(&self) -> bool {
        self.terms.first().is_some_and(Monomial::is_unit)
    }

    /// Highest degree carrying a nonzero term.
    pub fn top_degree(&self) -> Option<u32> {
        self.terms.last().map(Monomial::degree)
    }

    /// Re-runs normalization. A no-op on any class built through this API.
    pub fn reduce(&self) -> Self {
        ClassPoly::from_monomials(&self.ring, self.terms.iter().cloned())
    }

    /// The same terms read in another ring with identical generators,
    /// normalized there (e.g. applying a rewrite rule the source ring lacks).
    pub fn recast(&self, target: &Ring) -> Result<Self> {
        if target.generators != self.ring.generators {
            return Err(Error::RingMismatch(
                "recast requires identical generators".into(),
            ));
        }
        Ok(ClassPoly::from_monomials(
            target,
            self.terms.iter().cloned(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        Ok(ClassPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut raw = HashSet::with_capacity(self.num_terms() * other.num_terms());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.times(b);
                if self.ring.in_bounds(&m) {
                    toggle(&mut raw, m);
                }
            }
        }
        Ok(ClassPoly {
            ring: self.ring.clone(),
            terms: self.ring.normalize(raw),
        })
    }

    /// Squaring is additive in characteristic 2, so only the monomials are
    /// squared.
    pub fn square(&self) -> Self {
        let raw = self.terms.iter().map(Monomial::squared).collect();
        ClassPoly {
            ring: self.ring.clone(),
            terms: self.ring.normalize(raw),
        }
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut result = ClassPoly::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        result
    }

    pub fn graded_part(&self, degree: u32) -> Self {
        ClassPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree == degree)
                .cloned()
                .collect(),
        }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        ClassPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree <= max_degree)
                .cloned()
                .collect(),
        }
    }

    /// Graded pieces `p_0, ..., p_max`.
    pub fn graded_parts(&self, max_degree: u32) -> Vec<ClassPoly> {
        let mut parts: Vec<BTreeSet<Monomial>> = vec![BTreeSet::new(); max_degree as usize + 1];
        for m in &self.terms {
            if m.degree <= max_degree {
                parts[m.degree as usize].insert(m.clone());
            }
        }
        parts
            .into_iter()
            .map(|terms| ClassPoly {
                ring: self.ring.clone(),
                terms,
            })
            .collect()
    }

    /// Formal inverse up to `max_degree`, built degree by degree:
    /// `q_0 = 1`, `q_t = sum_{s=1..t} p_s q_{t-s}`.
    pub fn invert(&self, max_degree: u32) -> Result<Self> {
        if !self.constant_term() {
            return Err(Error::NonUnit);
        }
        let parts = self.graded_parts(max_degree);
        let mut q: Vec<ClassPoly> = Vec::with_capacity(parts.len());
        q.push(ClassPoly::one(&self.ring));
        for t in 1..parts.len() {
            let mut acc: HashSet<Monomial> = HashSet::new();
            for s in 1..=t {
                if parts[s].is_zero() || q[t - s].is_zero() {
                    continue;
                }
                for m in parts[s].mul(&q[t - s])?.terms {
                    toggle(&mut acc, m);
                }
            }
            q.push(ClassPoly {
                ring: self.ring.clone(),
                terms: acc.into_iter().collect(),
            });
        }
        Ok(ClassPoly {
            ring: self.ring.clone(),
            terms: q.into_iter().flat_map(|p| p.terms).collect(),
        })
    }

    /// Multiplies by a GF(2) scalar.
    pub fn scaled(&self, bit: bool) -> Self {
        if bit {
            self.clone()
        } else {
            ClassPoly::zero(&self.ring)
        }
    }
}

/// `(1+g)^(-m)` expanded to `max_degree` via `sum_j C(m-1+j, j) g^j`.
pub fn neg_pow_expand(ring: &Ring, generator: &str, m: u64, max_degree: u32) -> Result<ClassPoly> {
    if m == 0 {
        return Err(Error::domain("neg_pow_expand needs a positive exponent"));
    }
    let idx = ring.index_of(generator)?;
    if ring.generators[idx].degree != 1 {
        return Err(Error::domain(format!(
            "neg_pow_expand needs a degree-1 generator, `{generator}` has degree {}",
            ring.generators[idx].degree
        )));
    }
    let monos = (0..=max_degree)
        .filter(|&j| lucas(m - 1 + j as u64, j as u64))
        .map(|j| {
            let mut exps = vec![0; ring.generators.len()];
            exps[idx] = j;
            ring.monomial_from_exponents(exps)
        });
    Ok(ClassPoly::from_monomials(ring, monos))
}

impl fmt::Display for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, m) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            m.write(&self.ring, f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dold(h: u32, i: u32) -> Ring {
        RingSpec::new(vec![
            GeneratorSpec::new("c", 1, h),
            GeneratorSpec::new("d", 2, i),
        ])
        .unwrap()
    }

    fn poly(ring: &Ring, terms: &[&[(&str, u32)]]) -> ClassPoly {
        ClassPoly::from_terms(ring, terms).unwrap()
    }

    #[test]
    fn truncations_kill_terms() {
        let r = dold(2, 7);
        assert!(poly(&r, &[&[("c", 3)]]).is_zero());
        assert!(poly(&r, &[&[("c", 2), ("d", 8)]]).is_zero());
        assert!(poly(&r, &[&[("c", 1)], &[("c", 1)]]).is_zero());
    }

    #[test]
    fn unknown_generator_is_structural_error() {
        let r = dold(2, 3);
        assert_eq!(
            ClassPoly::generator(&r, "alpha"),
            Err(Error::UnknownGenerator("alpha".into()))
        );
    }

    #[test]
    fn ring_validation() {
        assert!(RingSpec::new(vec![
            GeneratorSpec::new("c", 1, 0),
            GeneratorSpec::new("c", 2, 0)
        ])
        .is_err());
        assert!(RingSpec::new(vec![GeneratorSpec::new("c", 0, 0)]).is_err());
    }

    #[test]
    fn small_products() {
        let r = dold(2, 3);
        let one_c = poly(&r, &[&[], &[("c", 1)]]);
        assert_eq!(one_c.mul(&one_c).unwrap(), poly(&r, &[&[], &[("c", 2)]]));
        let stong = poly(&r, &[&[], &[("c", 1)], &[("c", 2)], &[("d", 1)]]);
        // (1+c)^2 (1+c+c^2+d) = (1+c^2)(1+c+c^2+d) = 1+c+c^2+d+c^2+c^3+c^4+c^2d
        let expected = poly(&r, &[&[], &[("c", 1)], &[("d", 1)], &[("c", 2), ("d", 1)]]);
        assert_eq!(one_c.pow(2).mul(&stong).unwrap(), expected);
        assert!(stong.mul(&ClassPoly::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ClassPoly::one(&dold(2, 3));
        let b = ClassPoly::one(&dold(2, 4));
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn add_is_symmetric_difference() {
        let r = RingSpec::new(vec![
            GeneratorSpec::new("alpha", 1, 2),
            GeneratorSpec::new("e", 1, 0),
        ])
        .unwrap();
        let a2 = poly(&r, &[&[("alpha", 2)]]);
        let e2 = poly(&r, &[&[("e", 2)]]);
        let s = a2.add(&e2).unwrap().add(&e2).unwrap().add(&a2).unwrap();
        assert!(s.is_zero());
        let c = dold(2, 3);
        let cd = poly(&c, &[&[("c", 1)], &[("d", 1)]]);
        assert_eq!(cd.add(&ClassPoly::zero(&c)).unwrap(), cd);
        assert_eq!(cd.num_terms(), 2);
    }

    #[test]
    fn powers() {
        let r = dold(2, 4);
        let one_c = poly(&r, &[&[], &[("c", 1)]]);
        assert_eq!(one_c.pow(2), poly(&r, &[&[], &[("c", 2)]]));
        // C(10,1) even, C(10,2) = 45 odd
        assert_eq!(one_c.pow(10), poly(&r, &[&[], &[("c", 2)]]));
        assert_eq!(one_c.pow(0), ClassPoly::one(&r));
        assert_eq!(ClassPoly::zero(&r).pow(0), ClassPoly::one(&r));
    }

    #[test]
    fn inverses() {
        let r = dold(2, 5);
        let one_c = poly(&r, &[&[], &[("c", 1)]]);
        assert_eq!(
            one_c.invert(12).unwrap(),
            poly(&r, &[&[], &[("c", 1)], &[("c", 2)]])
        );
        let free = RingSpec::new(vec![GeneratorSpec::new("c", 1, 0)]).unwrap();
        let sq = poly(&free, &[&[], &[("c", 2)]]);
        assert_eq!(
            sq.invert(4).unwrap(),
            poly(&free, &[&[], &[("c", 2)], &[("c", 4)]])
        );
        assert_eq!(poly(&r, &[&[("c", 1)]]).invert(3), Err(Error::NonUnit));
    }

    #[test]
    fn graded_parts() {
        let r = dold(2, 3);
        let stong = poly(&r, &[&[], &[("c", 1)], &[("c", 2)], &[("d", 1)]]);
        assert_eq!(stong.graded_part(2), poly(&r, &[&[("c", 2)], &[("d", 1)]]));
        assert!(poly(&r, &[&[], &[("c", 1)]]).graded_part(5).is_zero());
        let total = stong
            .graded_parts(10)
            .into_iter()
            .fold(ClassPoly::zero(&r), |acc, p| acc.add(&p).unwrap());
        assert_eq!(total, stong);
    }

    #[test]
    fn neg_pow_on_rp2() {
        let rp2 = RingSpec::new(vec![GeneratorSpec::new("alpha", 1, 2)]).unwrap();
        assert_eq!(
            neg_pow_expand(&rp2, "alpha", 4, 2).unwrap(),
            ClassPoly::one(&rp2)
        );
        assert_eq!(
            neg_pow_expand(&rp2, "alpha", 2, 2).unwrap(),
            poly(&rp2, &[&[], &[("alpha", 2)]])
        );
        let r = dold(2, 3);
        assert_eq!(
            neg_pow_expand(&r, "c", 1, 2).unwrap(),
            poly(&r, &[&[], &[("c", 1)], &[("c", 2)]])
        );
        assert!(matches!(
            neg_pow_expand(&r, "c", 0, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            neg_pow_expand(&r, "d", 1, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rewrite_rule_reduces_top_power() {
        // e^2 -> c e + c^2 + d over P(2,3)
        let free = dold(2, 3).extended(GeneratorSpec::new("e", 1, 0)).unwrap();
        let rhs = poly(&free, &[&[("c", 1), ("e", 1)], &[("c", 2)], &[("d", 1)]]);
        let ring = free.with_rewrite("e", 2, &rhs).unwrap();
        let e2 = poly(&ring, &[&[("e", 2)]]);
        assert_eq!(e2, rhs.recast(&ring).unwrap());
        let e = poly(&ring, &[&[("e", 1)]]);
        assert_eq!(e.reduce(), e);
        // non-homogeneous rules are rejected
        let bad = poly(&free, &[&[("c", 1)]]);
        assert!(free.with_rewrite("e", 2, &bad).is_err());
    }

    #[test]
    fn display_is_graded_lex() {
        let r = dold(2, 3);
        let p = poly(
            &r,
            &[
                &[("d", 1)],
                &[],
                &[("c", 2)],
                &[("c", 1)],
                &[("c", 1), ("d", 2)],
            ],
        );
        assert_eq!(p.to_string(), "1 + c + d + c^2 + c*d^2");
        assert_eq!(ClassPoly::zero(&r).to_string(), "0");
    }
}
