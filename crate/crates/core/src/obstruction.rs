//! Characteristic numbers of fixed data `RP^2 ⊔ P(2,i)`.
//!
//! Both components are projectivized; every characteristic number summed
//! over the components has to vanish. The `w[0]_j` tables are taken as
//! given inputs, the `ŵ` classes are formed from them, and the resulting
//! numbers are reported per component together with their GF(2) total.

use std::sync::Arc;

use crate::binom::lucas;
use crate::bundle::{bundle_named, rp_side_bundle, stong_class, Bundle, NamedBundle};
use crate::error::{Error, Result};
use crate::manifold::{dold_manifold, Manifold};
use crate::projective::{projectivize, ProjBundle};
use crate::ring::ClassPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScenarioTag {
    /// `u = 0`, `ν^2 = τ⊗η`.
    LemmaU0,
    /// `u > 1`, `w(ν^k) = (1+c)^(a+2)(1+c+c^2+d)`.
    UGreaterOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScenarioContext {
    pub h: u32,
    pub u: u32,
    pub v: u32,
    pub i: u32,
    pub k: u32,
    pub a: u32,
    pub tag: ScenarioTag,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub manifold: Arc<Manifold>,
    pub bundle: Bundle,
    pub proj: ProjBundle,
}

impl Component {
    fn new(bundle: Bundle) -> Result<Self> {
        let manifold = bundle.base().clone();
        let proj = projectivize(&manifold, &bundle)?;
        Ok(Component {
            manifold,
            bundle,
            proj,
        })
    }

    pub fn label(&self) -> &str {
        self.manifold.label()
    }

    fn free(&self, terms: &[&[(&str, u32)]]) -> Result<ClassPoly> {
        ClassPoly::from_terms(self.proj.free_ring(), terms)
    }
}

/// Index of the Dold component in [`FixedData::components`].
pub const DOLD: usize = 0;
/// Index of the `RP^2` component.
pub const RP: usize = 1;

#[derive(Clone, Debug)]
pub struct FixedData {
    components: Vec<Component>,
    context: ScenarioContext,
}

impl FixedData {
    /// `(P(2,i), ν^2 = τ⊗η) ⊔ (RP^2, rank 2i+2)` for odd `i`.
    pub fn lemma_u0(i: u32) -> Result<Self> {
        if i.is_multiple_of(2) {
            return Err(Error::domain(format!("u = 0 needs odd i, got {i}")));
        }
        let p = dold_manifold(2, i)?;
        let nu = bundle_named(&p, NamedBundle::Stong)?;
        let v = (i - 1) / 2;
        let context = ScenarioContext {
            h: 2,
            u: 0,
            v,
            i,
            k: 2,
            a: 2,
            tag: ScenarioTag::LemmaU0,
        };
        FixedData::new(
            vec![
                Component::new(nu)?,
                Component::new(rp_side_bundle(0, v, 2)?)?,
            ],
            context,
        )
    }

    /// `(P(2, 2^u(2v+1)), ν^k) ⊔ (RP^2, ν^(2^(u+1)(2v+1)+k))` for `u > 1`,
    /// with `w(ν^k) = (1+c)^(a+2)(1+c+c^2+d)`: `(1+c)^3(...)` for `a = 1`
    /// and `(1+c)(...)` for `a = 3`.
    pub fn u_greater_one(u: u32, v: u32, a: u32, k: u32) -> Result<Self> {
        if u < 2 {
            return Err(Error::domain(format!("scenario needs u > 1, got {u}")));
        }
        if a != 1 && a != 3 {
            return Err(Error::domain(format!("a must be 1 or 3, got {a}")));
        }
        if k < 2 || !k.is_multiple_of(2) {
            return Err(Error::domain(format!("k must be even and >= 2, got {k}")));
        }
        let i = (1u32 << u) * (2 * v + 1);
        let p = dold_manifold(2, i)?;
        let total = p.one_plus("c")?.pow(a as u64 + 2).mul(&stong_class(&p)?)?;
        let nu = Bundle::new(&p, k, total, format!("nu^{k}(a={a})"))?;
        let context = ScenarioContext {
            h: 2,
            u,
            v,
            i,
            k,
            a,
            tag: ScenarioTag::UGreaterOne,
        };
        FixedData::new(
            vec![
                Component::new(nu)?,
                Component::new(rp_side_bundle(u, v, k)?)?,
            ],
            context,
        )
    }

    pub fn new(components: Vec<Component>, context: ScenarioContext) -> Result<Self> {
        if let Some(first) = components.first() {
            let dim = first.proj.dimension();
            if let Some(bad) = components.iter().find(|c| c.proj.dimension() != dim) {
                return Err(Error::domain(format!(
                    "projectivization of {} has dimension {}, expected {dim}",
                    bad.label(),
                    bad.proj.dimension()
                )));
            }
        }
        Ok(FixedData {
            components,
            context,
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn context(&self) -> &ScenarioContext {
        &self.context
    }

    /// Common dimension of the projectivized components.
    pub fn dimension(&self) -> u32 {
        self.components[0].proj.dimension()
    }
}

/// One class per component, each in that component's free `e`-ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    pub label: String,
    pub classes: Vec<ClassPoly>,
}

impl ComponentClass {
    fn zip_with(
        &self,
        other: &ComponentClass,
        label: String,
        f: impl Fn(&ClassPoly, &ClassPoly) -> Result<ClassPoly>,
    ) -> Result<ComponentClass> {
        let classes = self
            .classes
            .iter()
            .zip(&other.classes)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(ComponentClass { label, classes })
    }

    pub fn add(&self, other: &ComponentClass) -> Result<ComponentClass> {
        self.zip_with(
            other,
            format!("{} + {}", self.label, other.label),
            |a, b| a.add(b),
        )
    }

    pub fn mul(&self, other: &ComponentClass) -> Result<ComponentClass> {
        self.zip_with(
            other,
            format!("({})({})", self.label, other.label),
            |a, b| a.mul(b),
        )
    }

    pub fn pow(&self, n: u64) -> ComponentClass {
        ComponentClass {
            label: format!("({})^{n}", self.label),
            classes: self.classes.iter().map(|c| c.pow(n)).collect(),
        }
    }

    /// `e^n` on every component.
    pub fn e_power(fd: &FixedData, n: u32) -> ComponentClass {
        ComponentClass {
            label: format!("e^{n}"),
            classes: fd
                .components
                .iter()
                .map(|c| c.proj.e_power_free(n))
                .collect(),
        }
    }

    pub fn one(fd: &FixedData) -> ComponentClass {
        ComponentClass::e_power(fd, 0)
    }
}

/// The `w[0]_j` tables for `j = 1, 2, 4`, binomials resolved mod 2 and the
/// terms summed as printed.
pub fn w0_class(fd: &FixedData, index: u32) -> Result<ComponentClass> {
    let ctx = fd.context;
    let comps = &fd.components;
    let classes = match (index, ctx.tag) {
        (1, _) => vec![
            comps[DOLD].free(&[&[("c", 1)]])?,
            comps[RP].free(&[&[("alpha", 1)]])?,
        ],
        (2, ScenarioTag::LemmaU0) => {
            let beta = lucas(ctx.i as u64 + 3, 2);
            let p = &comps[DOLD];
            let on_p = p
                .free(&[&[("c", 1), ("e", 1)], &[("c", 2)], &[("d", 1)]])?
                .add(&p.free(&[&[("c", 2)]])?.scaled(beta))?;
            let on_rp = comps[RP].free(&[&[("alpha", 2)], &[("e", 2)]])?;
            vec![on_p, on_rp]
        }
        (4, ScenarioTag::UGreaterOne) => {
            let gamma = lucas(ctx.a as u64 + 1, 2);
            let p = &comps[DOLD];
            let on_p = p
                .free(&[
                    &[("c", 2), ("d", 1)],
                    &[("c", 1), ("d", 1), ("e", 1)],
                    &[("d", 1), ("e", 2)],
                    &[("d", 2)],
                ])?
                .add(&p.free(&[&[("c", 2), ("e", 2)]])?.scaled(gamma))?;
            let on_rp = comps[RP].free(&[&[("alpha", 2), ("e", 2)]])?.scaled(gamma);
            vec![on_p, on_rp]
        }
        (2 | 4, tag) => {
            return Err(Error::domain(format!(
                "w[0]_{index} is not tabulated for the {tag:?} scenario"
            )))
        }
        _ => {
            return Err(Error::domain(format!(
                "w[0]_{index} is not tabulated (supported: 1, 2, 4)"
            )))
        }
    };
    Ok(ComponentClass {
        label: format!("w[0]_{index}"),
        classes,
    })
}

/// `ŵ_2 = w[0]_2 + e^2 + w[0]_1^2`.
pub fn hat_w2(fd: &FixedData) -> Result<ComponentClass> {
    let w1 = w0_class(fd, 1)?;
    let w2 = w0_class(fd, 2)?;
    let mut hat = w2.add(&ComponentClass::e_power(fd, 2))?.add(&w1.pow(2))?;
    hat.label = "ŵ2".into();
    Ok(hat)
}

/// `ŵ_4 = w[0]_4 + C(a+1,2) w[0]_1^2 e^2`.
pub fn hat_w4(fd: &FixedData) -> Result<ComponentClass> {
    let gamma = lucas(fd.context.a as u64 + 1, 2);
    let w1 = w0_class(fd, 1)?;
    let w4 = w0_class(fd, 4)?;
    let corr = w1.pow(2).mul(&ComponentClass::e_power(fd, 2))?;
    let corr = ComponentClass {
        label: corr.label,
        classes: corr.classes.iter().map(|c| c.scaled(gamma)).collect(),
    };
    let mut hat = w4.add(&corr)?;
    hat.label = "ŵ4".into();
    Ok(hat)
}

/// `1 + w[0]_1`.
pub fn one_plus_w1(fd: &FixedData) -> Result<ComponentClass> {
    let mut cc = ComponentClass::one(fd).add(&w0_class(fd, 1)?)?;
    cc.label = "1 + w[0]_1".into();
    Ok(cc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalNumber {
    pub per_component: Vec<bool>,
    pub total: bool,
}

/// Evaluates `cc · e^(m_j)` on each projectivized component and sums.
///
/// Each nonzero class must reach the common dimension exactly with its top
/// degree plus the `e`-power; otherwise the offending component is reported.
pub fn total_number(
    fd: &FixedData,
    cc: &ComponentClass,
    e_exponents: &[u32],
) -> Result<TotalNumber> {
    if cc.classes.len() != fd.components.len() || e_exponents.len() != fd.components.len() {
        return Err(Error::domain(
            "need one class and one e-exponent per component",
        ));
    }
    let mut per_component = Vec::with_capacity(fd.components.len());
    for ((comp, class), &m) in fd.components.iter().zip(&cc.classes).zip(e_exponents) {
        let dim = comp.proj.dimension();
        if let Some(top) = class.top_degree() {
            if top + m != dim {
                return Err(Error::DegreeMismatch {
                    component: comp.label().to_string(),
                    found: top + m,
                    expected: dim,
                });
            }
        }
        let full = class.mul(&comp.proj.e_power_free(m))?;
        per_component.push(comp.proj.evaluate_total(&full)?);
    }
    let total = per_component.iter().fold(false, |acc, b| acc ^ b);
    Ok(TotalNumber {
        per_component,
        total,
    })
}

/// Like [`total_number`] without the degree audit: each product is
/// projected onto the top degree by the evaluation.
pub fn projected_number(
    fd: &FixedData,
    cc: &ComponentClass,
    e_exponents: &[u32],
) -> Result<TotalNumber> {
    let mut per_component = Vec::with_capacity(fd.components.len());
    for ((comp, class), &m) in fd.components.iter().zip(&cc.classes).zip(e_exponents) {
        let full = class.mul(&comp.proj.e_power_free(m))?;
        per_component.push(comp.proj.evaluate_total(&full)?);
    }
    let total = per_component.iter().fold(false, |acc, b| acc ^ b);
    Ok(TotalNumber {
        per_component,
        total,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaU0Check {
    pub i: u32,
    /// `ŵ_2 e^(2i+1)` summed over both components.
    pub value: bool,
    pub admissible: bool,
    pub per_component: Vec<bool>,
}

/// Closed form of the `u = 0` obstruction: `1 + C(i+3, 2) mod 2`.
pub fn lemma_u0_closed_form(i: u32) -> bool {
    !lucas(i as u64 + 3, 2)
}

pub fn check_lemma_u0(i: u32) -> Result<LemmaU0Check> {
    let fd = FixedData::lemma_u0(i)?;
    let hat = hat_w2(&fd)?;
    let m = 2 * i + 1;
    let n = total_number(&fd, &hat, &[m, m])?;
    Ok(LemmaU0Check {
        i,
        value: n.total,
        admissible: !n.total,
        per_component: n.per_component,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaUgt1Check {
    pub dold_top: bool,
    pub rp_top: bool,
    pub consistent: bool,
    /// False when `w(ν^k)` has terms above degree `k`, i.e. no rank-`k`
    /// bundle carries this class.
    pub class_fits_rank: bool,
}

/// Compares the top `e`-numbers `e^dim` of both components.
pub fn check_lemma_ugt1(u: u32, v: u32, a: u32, k: u32) -> Result<LemmaUgt1Check> {
    let fd = FixedData::u_greater_one(u, v, a, k)?;
    let dim = fd.dimension();
    let top = ComponentClass::e_power(&fd, 0);
    let n = total_number(&fd, &top, &[dim, dim])?;
    Ok(LemmaUgt1Check {
        dold_top: n.per_component[DOLD],
        rp_top: n.per_component[RP],
        consistent: !n.total,
        class_fits_rank: fd.components[DOLD].proj.class_fits_rank(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundCase {
    /// `a = 1`, `k ≡ 2 mod 4`.
    Iii,
    /// `a = 3`, `k ≡ 0 mod 4`.
    Iv,
}

impl BoundCase {
    pub fn a(self) -> u32 {
        match self {
            BoundCase::Iii => 1,
            BoundCase::Iv => 3,
        }
    }

    pub fn residue(self) -> u32 {
        match self {
            BoundCase::Iii => 2,
            BoundCase::Iv => 0,
        }
    }

    /// Largest `k` the bound allows.
    pub fn threshold(self, u: u32) -> u32 {
        match self {
            BoundCase::Iii => (1 << (u + 1)) - 2,
            BoundCase::Iv => 1 << (u + 1),
        }
    }
}

impl std::str::FromStr for BoundCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iii" => Ok(BoundCase::Iii),
            "iv" => Ok(BoundCase::Iv),
            _ => Err(Error::domain(format!(
                "unknown case `{s}` (expected iii or iv)"
            ))),
        }
    }
}

impl std::fmt::Display for BoundCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundCase::Iii => "iii",
            BoundCase::Iv => "iv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropBoundCheck {
    pub applicable: bool,
    /// Total number of the formed class; `false` when not applicable.
    pub obstruction: bool,
    pub per_component: Vec<bool>,
    /// Case (iv) only: `ŵ_4^N e^(1+k-2^(u+1))`, the same degree without
    /// the `(1+w[0]_1)^2` factor. It evaluates to 0, so only the formed
    /// class carries the obstruction.
    pub displayed: Option<TotalNumber>,
}

/// Evaluates the `ŵ_4`-power number that bounds `k` in cases (iii)/(iv).
///
/// Case (iii): `ŵ_4^N e^(1+k-2^(u+1))`. Case (iv):
/// `ŵ_4^N (1+w[0]_1)^2 e^(k-2^(u+1)-1)`. Here `N = 2^u(v+1)`.
pub fn check_prop_bound(case: BoundCase, u: u32, v: u32, k: u32) -> Result<PropBoundCheck> {
    if u < 2 {
        return Err(Error::domain(format!("case {case} needs u > 1, got {u}")));
    }
    if k % 4 != case.residue() {
        return Err(Error::domain(format!(
            "case {case} needs k ≡ {} mod 4, got k = {k}",
            case.residue()
        )));
    }
    if k <= case.threshold(u) {
        return Ok(PropBoundCheck {
            applicable: false,
            obstruction: false,
            per_component: Vec::new(),
            displayed: None,
        });
    }
    let fd = FixedData::u_greater_one(u, v, case.a(), k)?;
    let n_pow = (1u64 << u) * (v as u64 + 1);
    let w4n = hat_w4(&fd)?.pow(n_pow);
    let two_u1 = 1u32 << (u + 1);
    let (number, displayed) = match case {
        BoundCase::Iii => {
            let m = 1 + k - two_u1;
            (total_number(&fd, &w4n, &[m, m])?, None)
        }
        BoundCase::Iv => {
            let formed = w4n.mul(&one_plus_w1(&fd)?.pow(2))?;
            let m = k - two_u1 - 1;
            let shown = 1 + k - two_u1;
            (
                total_number(&fd, &formed, &[m, m])?,
                Some(total_number(&fd, &w4n, &[shown, shown])?),
            )
        }
    };
    Ok(PropBoundCheck {
        applicable: true,
        obstruction: number.total,
        per_component: number.per_component,
        displayed,
    })
}

/// `(1+c) d^N (1+c+c^2+d)^(N-1) [P(2, 2^u(2v+1))]` with `N = 2^u(v+1)`,
/// the base-side form both bound computations reduce to.
pub fn bound_chain_value(u: u32, v: u32) -> Result<bool> {
    let i = (1u32 << u) * (2 * v + 1);
    let n = (1u64 << u) * (v as u64 + 1);
    let p = dold_manifold(2, i)?;
    let cls = p
        .one_plus("c")?
        .mul(&p.generator("d")?.pow(n))?
        .mul(&stong_class(&p)?.pow(n - 1))?;
    p.evaluate_fundamental(&cls)
}
