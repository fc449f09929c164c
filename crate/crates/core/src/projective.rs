//! Projectivized bundles `RP(ν)`.
//!
//! `H*(RP(ν))` is the base ring extended by the tautological class `e`
//! (degree 1) modulo `sum_{j=0..k} w_j(ν) e^(k-j) = 0`. Two rings are kept:
//! the quotient ring, where classes are in normal form with `e`-exponent
//! below `k`, and a free ring where `e` is unconstrained. Both push forward
//! to the base by the same formula `e^(k-1+s) -> w̄_s(ν)`, and the two
//! evaluation routes (pushforward vs. reduction) are checked against each
//! other in tests.

use std::collections::HashSet;
use std::sync::Arc;

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::manifold::Manifold;
use crate::ring::{same_ring, ClassPoly, GeneratorSpec, Monomial, Ring};

/// Reserved name of the tautological generator.
pub const TAUTOLOGICAL: &str = "e";

#[derive(Clone, Debug)]
pub struct ProjBundle {
    base: Arc<Manifold>,
    bundle: Bundle,
    free: Ring,
    ring: Ring,
    e_index: usize,
    dimension: u32,
    /// `w̄_s(ν)` for `s = 0..=dim base`.
    dual_parts: Vec<ClassPoly>,
    top: Monomial,
}

pub fn projectivize(base: &Arc<Manifold>, nu: &Bundle) -> Result<ProjBundle> {
    if nu.base() != base {
        return Err(Error::RingMismatch(format!(
            "bundle {} does not live over {}",
            nu.label(),
            base.label()
        )));
    }
    if base.ring().index_of(TAUTOLOGICAL).is_ok() {
        return Err(Error::domain(format!(
            "base ring already uses the reserved generator `{TAUTOLOGICAL}`"
        )));
    }
    let k = nu.rank();
    let free = base
        .ring()
        .extended(GeneratorSpec::new(TAUTOLOGICAL, 1, 0))?;
    let e_index = free.generators().len() - 1;

    // e^k = sum_{j=1..k} w_j e^(k-j)
    let mut rhs = ClassPoly::zero(&free);
    for j in 1..=k {
        let wj = lift_into(&free, &nu.w(j));
        let ej = ClassPoly::from_monomials(&free, [e_power(&free, e_index, k - j)]);
        rhs = rhs.add(&wj.mul(&ej)?)?;
    }
    let ring = free.with_rewrite(TAUTOLOGICAL, k, &rhs)?;

    let dim_base = base.dimension();
    let dual_parts = nu.dual_class().value.graded_parts(dim_base);
    let top = base.fundamental().pushed(k - 1, 1);
    Ok(ProjBundle {
        base: base.clone(),
        bundle: nu.clone(),
        free,
        ring,
        e_index,
        dimension: dim_base + k - 1,
        dual_parts,
        top,
    })
}

fn e_power(ring: &Ring, e_index: usize, n: u32) -> Monomial {
    let mut exps = vec![0; ring.generators().len()];
    exps[e_index] = n;
    ring.monomial_from_exponents(exps)
}

fn lift_into(target: &Ring, p: &ClassPoly) -> ClassPoly {
    ClassPoly::from_monomials(target, p.terms().map(|m| m.pushed(0, 1)))
}

impl ProjBundle {
    pub fn base(&self) -> &Arc<Manifold> {
        &self.base
    }

    pub fn bundle(&self) -> &Bundle {
        &self.bundle
    }

    pub fn rank(&self) -> u32 {
        self.bundle.rank()
    }

    /// `dim B + k - 1`.
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// Quotient ring, classes in `e`-normal form.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Base generators plus an unconstrained `e`.
    pub fn free_ring(&self) -> &Ring {
        &self.free
    }

    pub fn class_fits_rank(&self) -> bool {
        self.bundle.class_fits_rank()
    }

    pub fn e(&self) -> ClassPoly {
        ClassPoly::generator(&self.ring, TAUTOLOGICAL).expect("e is present")
    }

    pub fn e_free(&self) -> ClassPoly {
        ClassPoly::generator(&self.free, TAUTOLOGICAL).expect("e is present")
    }

    pub fn e_power_free(&self, n: u32) -> ClassPoly {
        ClassPoly::from_monomials(&self.free, [e_power(&self.free, self.e_index, n)])
    }

    /// A base class viewed in the quotient ring.
    pub fn lift(&self, p: &ClassPoly) -> Result<ClassPoly> {
        self.check_base(p)?;
        Ok(lift_into(&self.ring, p))
    }

    /// A base class viewed in the free ring.
    pub fn lift_free(&self, p: &ClassPoly) -> Result<ClassPoly> {
        self.check_base(p)?;
        Ok(lift_into(&self.free, p))
    }

    fn check_base(&self, p: &ClassPoly) -> Result<()> {
        if same_ring(p.ring(), self.base.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "class does not live over {}",
                self.base.label()
            )))
        }
    }

    fn check_total(&self, p: &ClassPoly) -> Result<()> {
        if same_ring(p.ring(), &self.ring) || same_ring(p.ring(), &self.free) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "class does not live on RP({})",
                self.bundle.label()
            )))
        }
    }

    /// `sum_j w_j e^(k-j)` in the free ring; zero once reduced.
    pub fn relation(&self) -> ClassPoly {
        let k = self.rank();
        let mut rel = ClassPoly::zero(&self.free);
        for j in 0..=k {
            let wj = lift_into(&self.free, &self.bundle.w(j));
            rel = rel
                .add(&wj.mul(&self.e_power_free(k - j)).expect("same ring"))
                .expect("same ring");
        }
        rel
    }

    /// Normal form with every `e`-exponent below the rank.
    pub fn e_reduce(&self, p: &ClassPoly) -> Result<ClassPoly> {
        self.check_total(p)?;
        p.recast(&self.ring)
    }

    /// `π_*`: sends `b e^t` to `b w̄_(t-k+1)(ν)`, zero for negative index.
    /// Accepts classes from either the quotient or the free ring.
    pub fn pushforward(&self, p: &ClassPoly) -> Result<ClassPoly> {
        self.check_total(p)?;
        let k = self.rank();
        let base_ring = self.base.ring();
        let mut acc: HashSet<Monomial> = HashSet::new();
        for m in p.terms() {
            let (b, t) = m.split_off(self.e_index, 1);
            if t + 1 < k {
                continue;
            }
            let s = (t + 1 - k) as usize;
            let Some(dual) = self.dual_parts.get(s) else {
                continue;
            };
            for w in dual.terms() {
                let n = b.times(w);
                if !acc.remove(&n) {
                    acc.insert(n);
                }
            }
        }
        Ok(ClassPoly::from_monomials(base_ring, acc))
    }

    /// `p[RP(ν)]` via the pushforward.
    pub fn evaluate_total(&self, p: &ClassPoly) -> Result<bool> {
        self.base.evaluate_fundamental(&self.pushforward(p)?)
    }

    /// `p[RP(ν)]` via full `e`-reduction: the coefficient of
    /// `e^(k-1) · [B]` in the normal form.
    pub fn evaluate_total_by_reduction(&self, p: &ClassPoly) -> Result<bool> {
        Ok(self.e_reduce(p)?.contains(&self.top))
    }
}
