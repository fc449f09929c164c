use std::fmt;
use std::sync::Arc;

use super::ast::{Expr, Space};
use super::parser::{Parser, Tok};
use crate::binom::lucas;
use crate::bundle::{bundle_named, bundle_standard, rp_side_bundle, whitney_sum, Bundle};
use crate::error::{Error, Result};
use crate::manifold::{dold_manifold, real_projective, Manifold};
use crate::projective::{projectivize, ProjBundle};
use crate::ring::{ClassPoly, Ring};

/// A base manifold, optionally with a bundle projectivized over it.
#[derive(Clone, Debug)]
pub struct Scenario {
    base: Arc<Manifold>,
    proj: Option<ProjBundle>,
}

impl Scenario {
    pub fn new(base: Arc<Manifold>, bundle: Option<&Bundle>) -> Result<Self> {
        let proj = bundle.map(|nu| projectivize(&base, nu)).transpose()?;
        Ok(Scenario { base, proj })
    }

    pub fn base(&self) -> &Arc<Manifold> {
        &self.base
    }

    pub fn proj(&self) -> Option<&ProjBundle> {
        self.proj.as_ref()
    }

    /// Parses `SPACE[;BUNDLE]` where `SPACE` is `P(h,i)` or `RP(n)` and
    /// `BUNDLE` is a `+`-separated Whitney sum of `xi`, `tau`, `stong`,
    /// `std(a,b,eps,rank)` and `rp(u,v,k)`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut p = Parser::new(spec)?;
        let base = match p.parse_space()? {
            Space::Dold { h, i } => dold_manifold(h, i)?,
            Space::Projective { n } => real_projective(n)?,
            Space::ProjBundle => {
                return Err(Error::domain("a scenario base must be P(h,i) or RP(n)"));
            }
        };
        let mut bundle: Option<Bundle> = None;
        if p.eat(&Tok::Semi) {
            loop {
                let summand = parse_summand(&mut p, &base)?;
                bundle = Some(match bundle {
                    None => summand,
                    Some(acc) => whitney_sum(&acc, &summand)?,
                });
                if !p.eat(&Tok::Plus) {
                    break;
                }
            }
        }
        p.finish()?;
        Scenario::new(base, bundle.as_ref())
    }
}

fn parse_args(p: &mut Parser) -> Result<Vec<u64>> {
    let mut args = Vec::new();
    if p.eat(&Tok::LParen) {
        loop {
            args.push(p.expect_int()?);
            if !p.eat(&Tok::Comma) {
                break;
            }
        }
        p.expect(Tok::RParen)?;
    }
    Ok(args)
}

fn small(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::domain(format!("bundle parameter {n} out of range")))
}

fn parse_summand(p: &mut Parser, base: &Arc<Manifold>) -> Result<Bundle> {
    let name = p.expect_ident()?;
    let args = parse_args(p)?;
    match (name.as_str(), args.as_slice()) {
        ("xi" | "tau" | "stong", []) => bundle_named(base, name.parse()?),
        ("std", &[a, b, eps, rank]) => {
            let eps = u8::try_from(eps).map_err(|_| Error::domain("eps must be 0 or 1"))?;
            bundle_standard(base, a, b, eps, small(rank)?)
        }
        ("rp", &[u, v, k]) => {
            let nu = rp_side_bundle(small(u)?, small(v)?, small(k)?)?;
            if nu.base() != base {
                return Err(Error::RingMismatch(format!(
                    "rp(u,v,k) lives over RP(2), not {}",
                    base.label()
                )));
            }
            Ok(nu)
        }
        _ => Err(Error::domain(format!(
            "unknown bundle `{name}` with {} argument(s); expected xi, tau, stong, \
             std(a,b,eps,rank) or rp(u,v,k)",
            args.len()
        ))),
    }
}

/// Evaluation environment: the scenario that fixes the ambient ring for
/// bare expressions and gives meaning to `[RPnu]`.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub scenario: Option<Scenario>,
}

impl Env {
    pub fn with_scenario(scenario: Scenario) -> Self {
        Env {
            scenario: Some(scenario),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// A characteristic number.
    Bit(bool),
    Class(ClassPoly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bit(b) => write!(f, "{}", u8::from(*b)),
            Value::Class(p) => write!(f, "{p}"),
        }
    }
}

/// Evaluates `expr` as a class in `ring`, truncating inverses at
/// `max_degree`.
pub fn eval_class(expr: &Expr, ring: &Ring, max_degree: u32) -> Result<ClassPoly> {
    Ok(match expr {
        Expr::Sym(s) => ClassPoly::generator(ring, s.name())?,
        Expr::Int(n) => ClassPoly::scalar(ring, n % 2 == 1),
        Expr::Binom(n, r) => ClassPoly::scalar(ring, lucas(*n, *r)),
        Expr::Add(a, b) => {
            eval_class(a, ring, max_degree)?.add(&eval_class(b, ring, max_degree)?)?
        }
        Expr::Mul(a, b) => {
            eval_class(a, ring, max_degree)?.mul(&eval_class(b, ring, max_degree)?)?
        }
        Expr::Pow(a, n) => eval_class(a, ring, max_degree)?.pow(u64::from(*n)),
        Expr::Inv(a) => eval_class(a, ring, max_degree)?.invert(max_degree)?,
        Expr::Eval(..) => {
            return Err(Error::domain(
                "bracket evaluation is only allowed at the top level",
            ));
        }
    })
}

pub fn eval_expr(expr: &Expr, env: &Env) -> Result<Value> {
    match expr {
        Expr::Eval(inner, space) => eval_bracket(inner, *space, env).map(Value::Bit),
        _ => {
            let (ring, dim) = match &env.scenario {
                Some(Scenario { proj: Some(pb), .. }) => (pb.ring(), pb.dimension()),
                Some(Scenario { base, proj: None }) => (base.ring(), base.dimension()),
                None => {
                    return Err(Error::domain(
                        "no ambient ring: pass a scenario or evaluate on [P(h,i)], [RP(n)] or [RPnu]",
                    ));
                }
            };
            eval_class(expr, ring, dim).map(Value::Class)
        }
    }
}

fn eval_bracket(inner: &Expr, space: Space, env: &Env) -> Result<bool> {
    let m = match space {
        Space::Dold { h, i } => dold_manifold(h, i)?,
        Space::Projective { n } => real_projective(n)?,
        Space::ProjBundle => {
            let pb = env
                .scenario
                .as_ref()
                .and_then(Scenario::proj)
                .ok_or_else(|| Error::domain("[RPnu] needs a scenario with a bundle"))?;
            let class = eval_class(inner, pb.free_ring(), pb.dimension())?;
            return pb.evaluate_total(&class);
        }
    };
    let class = eval_class(inner, m.ring(), m.dimension())?;
    m.evaluate_fundamental(&class)
}

/// Parses and evaluates in one step.
pub fn evaluate(source: &str, env: &Env) -> Result<Value> {
    eval_expr(&super::parse(source)?, env)
}
