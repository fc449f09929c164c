//! Vector bundles as (rank, total Stiefel-Whitney class) pairs.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::manifold::{real_projective, Manifold, ManifoldKind};
use crate::ring::{same_ring, ClassPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    base: Arc<Manifold>,
    rank: u32,
    total: ClassPoly,
    label: String,
}

/// `w̄(ν)`: the formal inverse of the total class up to the base dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualClass {
    pub value: ClassPoly,
}

impl Bundle {
    pub fn new(
        base: &Arc<Manifold>,
        rank: u32,
        total: ClassPoly,
        label: impl Into<String>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::domain("bundle rank must be at least 1"));
        }
        if !same_ring(total.ring(), base.ring()) {
            return Err(Error::RingMismatch(format!(
                "total class does not live over {}",
                base.label()
            )));
        }
        if !total.constant_term() {
            return Err(Error::domain(
                "total Whitney class must have constant term 1",
            ));
        }
        Ok(Bundle {
            base: base.clone(),
            rank,
            total,
            label: label.into(),
        })
    }

    pub fn trivial(base: &Arc<Manifold>, rank: u32) -> Result<Self> {
        Bundle::new(base, rank, ClassPoly::one(base.ring()), format!("{rank}"))
    }

    pub fn base(&self) -> &Arc<Manifold> {
        &self.base
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn total_class(&self) -> &ClassPoly {
        &self.total
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `w_j`.
    pub fn w(&self, j: u32) -> ClassPoly {
        self.total.graded_part(j)
    }

    pub fn dual_class(&self) -> DualClass {
        DualClass {
            value: self
                .total
                .invert(self.base.dimension())
                .expect("total class is a unit"),
        }
    }

    /// Whether `w_j = 0` for every `j > rank`.
    pub fn class_fits_rank(&self) -> bool {
        self.total.top_degree().unwrap_or(0) <= self.rank
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {} (rank {}, w = {})",
            self.label,
            self.base.label(),
            self.rank,
            self.total
        )
    }
}

fn require_dold(base: &Manifold) -> Result<(u32, u32)> {
    match base.kind() {
        ManifoldKind::Dold { h, i } => Ok((h, i)),
        _ => Err(Error::domain(format!(
            "{} is not a Dold manifold",
            base.label()
        ))),
    }
}

/// `1 + c + c^2 + d`, the total class of `τ⊗η`.
pub fn stong_class(base: &Manifold) -> Result<ClassPoly> {
    ClassPoly::from_terms(base.ring(), &[&[], &[("c", 1)], &[("c", 2)], &[("d", 1)]])
}

/// `(1+c)^a (1+c+d)^b (1+c+c^2+d)^eps` over a Dold manifold.
pub fn bundle_standard(base: &Arc<Manifold>, a: u64, b: u64, eps: u8, rank: u32) -> Result<Bundle> {
    require_dold(base)?;
    if eps > 1 {
        return Err(Error::domain("eps must be 0 or 1"));
    }
    let one_c = base.one_plus("c")?;
    let one_cd = one_c.add(&base.generator("d")?)?;
    let mut total = one_c.pow(a).mul(&one_cd.pow(b))?;
    if eps == 1 {
        total = total.mul(&stong_class(base)?)?;
    }
    Bundle::new(base, rank, total, format!("std(a={a},b={b},eps={eps})"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedBundle {
    /// The line bundle with `w = 1 + c`.
    Xi,
    /// Tangent bundle of `RP^2` pulled back: `w = (1+c)^3`.
    Tau,
    /// `τ⊗η` with `w = 1 + c + c^2 + d`.
    Stong,
}

impl FromStr for NamedBundle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xi" => Ok(NamedBundle::Xi),
            "tau" => Ok(NamedBundle::Tau),
            "stong" => Ok(NamedBundle::Stong),
            other => Err(Error::domain(format!(
                "unknown bundle `{other}` (expected xi, tau or stong)"
            ))),
        }
    }
}

impl fmt::Display for NamedBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedBundle::Xi => "xi",
            NamedBundle::Tau => "tau",
            NamedBundle::Stong => "stong",
        })
    }
}

pub fn bundle_named(base: &Arc<Manifold>, name: NamedBundle) -> Result<Bundle> {
    let (h, _) = require_dold(base)?;
    let (rank, total) = match name {
        NamedBundle::Xi => (1, base.one_plus("c")?),
        NamedBundle::Tau | NamedBundle::Stong if h < 2 => {
            return Err(Error::domain(format!("{name} needs h >= 2")));
        }
        NamedBundle::Tau => (2, base.one_plus("c")?.pow(3)),
        NamedBundle::Stong => (2, stong_class(base)?),
    };
    Bundle::new(base, rank, total, name.to_string())
}

/// The bundle over `RP^2` of rank `2^(u+1)(2v+1) + k` with total class
/// `(1+alpha)^(2^(u+1) + k)`.
pub fn rp_side_bundle(u: u32, v: u32, k: u32) -> Result<Bundle> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "rp_side_bundle needs even k >= 2, got {k}"
        )));
    }
    let base = real_projective(2)?;
    let rank = (1u32 << (u + 1)) * (2 * v + 1) + k;
    let total = base.one_plus("alpha")?.pow((1u64 << (u + 1)) + k as u64);
    Bundle::new(&base, rank, total, format!("rp(u={u},v={v},k={k})"))
}

pub fn whitney_sum(b1: &Bundle, b2: &Bundle) -> Result<Bundle> {
    if b1.base != b2.base {
        return Err(Error::RingMismatch(
            "Whitney sum of bundles over different bases".into(),
        ));
    }
    Bundle::new(
        &b1.base,
        b1.rank + b2.rank,
        b1.total.mul(&b2.total)?,
        format!("{} + {}", b1.label, b2.label),
    )
}

/// Equality of total classes over the same base; ranks are ignored.
pub fn stably_equal(b1: &Bundle, b2: &Bundle) -> Result<bool> {
    if b1.base != b2.base {
        return Err(Error::RingMismatch(
            "comparing bundles over different bases".into(),
        ));
    }
    Ok(b1.total == b2.total)
}
