//! Dold manifolds `P(h,i)` and real projective spaces, with evaluation on
//! the fundamental class.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{same_ring, ClassPoly, GeneratorSpec, Monomial, Ring, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldKind {
    Dold { h: u32, i: u32 },
    Projective { n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifold {
    ring: Ring,
    dimension: u32,
    fundamental: Monomial,
    kind: ManifoldKind,
    label: String,
}

/// `P(h,i)`: cohomology `Z/2[c,d]/(c^(h+1), d^(i+1))`, `deg c = 1`,
/// `deg d = 2`, dimension `h + 2i`.
pub fn dold_manifold(h: u32, i: u32) -> Result<Arc<Manifold>> {
    if h == 0 || i == 0 {
        return Err(Error::domain(format!(
            "P({h},{i}): both parameters must be at least 1"
        )));
    }
    let ring = RingSpec::new(vec![
        GeneratorSpec::new("c", 1, h),
        GeneratorSpec::new("d", 2, i),
    ])?;
    let fundamental = ring.monomial(&[("c", h), ("d", i)])?;
    Ok(Arc::new(Manifold {
        dimension: h + 2 * i,
        fundamental,
        ring,
        kind: ManifoldKind::Dold { h, i },
        label: format!("P({h},{i})"),
    }))
}

/// `RP^n`: cohomology `Z/2[alpha]/(alpha^(n+1))`.
pub fn real_projective(n: u32) -> Result<Arc<Manifold>> {
    if n == 0 {
        return Err(Error::domain("RP(n) needs n >= 1"));
    }
    let ring = RingSpec::new(vec![GeneratorSpec::new("alpha", 1, n)])?;
    let fundamental = ring.monomial(&[("alpha", n)])?;
    Ok(Arc::new(Manifold {
        dimension: n,
        fundamental,
        ring,
        kind: ManifoldKind::Projective { n },
        label: format!("RP({n})"),
    }))
}

impl Manifold {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn fundamental(&self) -> &Monomial {
        &self.fundamental
    }

    pub fn kind(&self) -> ManifoldKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generator(&self, name: &str) -> Result<ClassPoly> {
        ClassPoly::generator(&self.ring, name)
    }

    /// `1 + g` for a generator `g`.
    pub fn one_plus(&self, name: &str) -> Result<ClassPoly> {
        ClassPoly::one(&self.ring).add(&self.generator(name)?)
    }

    /// Pairs a class with `[M]`: the coefficient of the fundamental
    /// monomial. Terms of lower degree are ignored, so inhomogeneous
    /// classes are projected to their top-degree part.
    pub fn evaluate_fundamental(&self, p: &ClassPoly) -> Result<bool> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch(format!(
                "class does not live in H*({})",
                self.label
            )));
        }
        Ok(p.contains(&self.fundamental))
    }
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}
