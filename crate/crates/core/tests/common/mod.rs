//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use charnum_core::dsl::{Expr, Space, Symbol};
use charnum_core::{ClassPoly, Monomial, Ring};
use rand::rngs::StdRng;
use rand::Rng;

/// Every in-bounds monomial of degree at most `max_degree`. Generators
/// without a truncation are capped by degree alone.
pub fn monomials_up_to(ring: &Ring, max_degree: u32) -> Vec<Monomial> {
    let gens = ring.generators();
    let mut out = Vec::new();
    let mut exps = vec![0u32; gens.len()];
    fn rec(ring: &Ring, idx: usize, budget: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let gens = ring.generators();
        if idx == gens.len() {
            out.push(ring.monomial_from_exponents(exps.clone()));
            return;
        }
        let g = &gens[idx];
        let mut cap = budget / g.degree;
        if g.truncation != 0 {
            cap = cap.min(g.truncation);
        }
        for e in 0..=cap {
            exps[idx] = e;
            rec(ring, idx + 1, budget - e * g.degree, exps, out);
        }
        exps[idx] = 0;
    }
    rec(ring, 0, max_degree, &mut exps, &mut out);
    out
}

pub fn random_class(rng: &mut StdRng, ring: &Ring, max_degree: u32) -> ClassPoly {
    let monos = monomials_up_to(ring, max_degree);
    let density: f64 = rng.gen_range(0.1..0.6);
    ClassPoly::from_monomials(ring, monos.into_iter().filter(|_| rng.gen_bool(density)))
}

/// `1 + (random class without constant term)`.
pub fn random_unit(rng: &mut StdRng, ring: &Ring, max_degree: u32) -> ClassPoly {
    let p = random_class(rng, ring, max_degree);
    if p.constant_term() {
        p
    } else {
        p.add(&ClassPoly::one(ring)).unwrap()
    }
}

/// Pascal's triangle mod 2, rows `0..=n_max`.
pub fn pascal_mod2(n_max: usize) -> Vec<Vec<bool>> {
    let mut rows: Vec<Vec<bool>> = vec![vec![true]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![true; n + 1];
        for r in 1..n {
            row[r] = prev[r - 1] ^ prev[r];
        }
        rows.push(row);
    }
    rows
}

/// Dense coefficient table for `Z/2[c,d]/(c^(h+1), d^(i+1))`:
/// `coef[a][b]` is the coefficient of `c^a d^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub h: usize,
    pub i: usize,
    pub coef: Vec<Vec<bool>>,
}

impl Dense {
    pub fn zero(h: usize, i: usize) -> Self {
        Dense {
            h,
            i,
            coef: vec![vec![false; i + 1]; h + 1],
        }
    }

    pub fn scalar(h: usize, i: usize, bit: bool) -> Self {
        let mut z = Dense::zero(h, i);
        z.coef[0][0] = bit;
        z
    }

    pub fn mono(h: usize, i: usize, a: usize, b: usize) -> Self {
        let mut z = Dense::zero(h, i);
        if a <= h && b <= i {
            z.coef[a][b] = true;
        }
        z
    }

    pub fn add(&self, o: &Dense) -> Dense {
        let mut z = self.clone();
        for a in 0..=self.h {
            for b in 0..=self.i {
                z.coef[a][b] ^= o.coef[a][b];
            }
        }
        z
    }

    pub fn mul(&self, o: &Dense) -> Dense {
        let mut z = Dense::zero(self.h, self.i);
        for a1 in 0..=self.h {
            for b1 in 0..=self.i {
                if !self.coef[a1][b1] {
                    continue;
                }
                for a2 in 0..=self.h - a1 {
                    for b2 in 0..=self.i - b1 {
                        if o.coef[a2][b2] {
                            z.coef[a1 + a2][b1 + b2] ^= true;
                        }
                    }
                }
            }
        }
        z
    }

    pub fn pow(&self, n: u32) -> Dense {
        let mut z = Dense::scalar(self.h, self.i, true);
        for _ in 0..n {
            z = z.mul(self);
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        self.coef.iter().flatten().all(|&x| !x)
    }

    /// `1/(1+x) = sum_n x^n`, finite because `x` is nilpotent.
    pub fn inv(&self) -> Option<Dense> {
        if !self.coef[0][0] {
            return None;
        }
        let x = self.add(&Dense::scalar(self.h, self.i, true));
        let mut term = Dense::scalar(self.h, self.i, true);
        let mut sum = Dense::zero(self.h, self.i);
        while !term.is_zero() {
            sum = sum.add(&term);
            term = term.mul(&x);
        }
        Some(sum)
    }

    pub fn top(&self) -> bool {
        self.coef[self.h][self.i]
    }

    pub fn from_class(p: &ClassPoly, h: usize, i: usize) -> Dense {
        let mut z = Dense::zero(h, i);
        for m in p.terms() {
            let e = m.exponents();
            z.coef[e[0] as usize][e[1] as usize] ^= true;
        }
        z
    }
}

pub fn v2_factorial(n: u64) -> u64 {
    let mut s = 0;
    let mut q = n / 2;
    while q > 0 {
        s += q;
        q /= 2;
    }
    s
}

/// Evaluates an expression over the symbols `c`, `d` in the dense model;
/// `None` when an inverse meets a non-unit.
pub fn dense_eval(e: &Expr, h: usize, i: usize) -> Option<Dense> {
    Some(match e {
        Expr::Sym(Symbol::C) => Dense::mono(h, i, 1, 0),
        Expr::Sym(Symbol::D) => Dense::mono(h, i, 0, 1),
        Expr::Sym(_) => panic!("dense model only knows c and d"),
        Expr::Int(n) => Dense::scalar(h, i, n % 2 == 1),
        Expr::Binom(n, r) => {
            // Legendre: C(n,r) is odd iff v2(n!) = v2(r!) + v2((n-r)!)
            let bit = r <= n && v2_factorial(*n) == v2_factorial(*r) + v2_factorial(n - r);
            Dense::scalar(h, i, bit)
        }
        Expr::Add(a, b) => dense_eval(a, h, i)?.add(&dense_eval(b, h, i)?),
        Expr::Mul(a, b) => dense_eval(a, h, i)?.mul(&dense_eval(b, h, i)?),
        Expr::Pow(a, n) => dense_eval(a, h, i)?.pow(*n),
        Expr::Inv(a) => dense_eval(a, h, i)?.inv()?,
        Expr::Eval(..) => panic!("dense model has no brackets"),
    })
}

/// Random expression of depth at most `depth` over `symbols`.
pub fn random_expr(rng: &mut StdRng, depth: u32, symbols: &[Symbol]) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..6) {
            0..=2 => Expr::Sym(symbols[rng.gen_range(0..symbols.len())]),
            3 | 4 => Expr::Int(rng.gen_range(0..4)),
            _ => Expr::Binom(rng.gen_range(0..24), rng.gen_range(0..12)),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..5) {
        0 => Expr::sum(random_expr(rng, d, symbols), random_expr(rng, d, symbols)),
        1 => Expr::product(random_expr(rng, d, symbols), random_expr(rng, d, symbols)),
        2 => Expr::pow(random_expr(rng, d, symbols), rng.gen_range(0..5)),
        3 => Expr::inv(Expr::sum(Expr::Int(1), random_expr(rng, d, symbols))),
        _ => Expr::inv(random_expr(rng, d, symbols)),
    }
}

/// A random top-level input: sometimes wrapped in a bracket evaluation.
pub fn random_input(rng: &mut StdRng, depth: u32) -> Expr {
    let e = random_expr(rng, depth, &Symbol::ALL);
    match rng.gen_range(0..4) {
        0 => Expr::Eval(
            Box::new(e),
            Space::Dold {
                h: rng.gen_range(1..5),
                i: rng.gen_range(1..9),
            },
        ),
        1 => Expr::Eval(
            Box::new(e),
            Space::Projective {
                n: rng.gen_range(1..9),
            },
        ),
        2 => Expr::Eval(Box::new(e), Space::ProjBundle),
        _ => e,
    }
}

/// Expressions the round-trip check runs over, including every displayed
/// formula in concrete form.
pub const CORPUS: [&str; 30] = [
    "(1+c+d+binom(10,2)*c^2)/(1+c+c^2+d) [P(2,7)]",
    "1/((1+c)*(1+c+d)*(1+c^2*d/(1+d))) [P(2,4)]",
    "1/((1+c)^3*(1+c+d)*(1+c^2*d/(1+d))) [P(2,4)]",
    "d^4/(1+c)^2 [P(2,4)]",
    "d^4/(1+c)^4 [P(2,4)]",
    "1/(1+alpha)^6 [RP(2)]",
    "1/(1+alpha)^4 [RP(2)]",
    "c*e+c^2+d+binom(10,2)*c^2",
    "alpha^2+e^2",
    "c*e+e^2+d+binom(10,2)*c^2",
    "c^2*d+c*d*e+d*e^2+d^2+binom(2,2)*c^2*e^2",
    "binom(4,2)*alpha^2*e^2",
    "c^2*d+c*d*e+d*e^2+d^2",
    "(c^2*d+c*d*e+d*e^2+d^2)^4*e^3",
    "(c^2*d+c*d*e+d*e^2+d^2)^4*(1+c)^2*e",
    "d^4*(1+c+c^2+d)^4/((1+c)^3*(1+c+c^2+d)) [P(2,4)]",
    "(1+c)*d^4*(1+c+c^2+d)^3 [P(2,4)]",
    "d^4*binom(3,0)*(1+c)^10 [P(2,4)]",
    "c^2*d^4 [P(2,4)]",
    "d^4*(1+c+c^2+d)^4*(1+c)^2/((1+c)*(1+c+c^2+d)) [P(2,4)]",
    "(1+c)^3*(1+c+c^2+d)",
    "binom(6,2)",
    "(1+c)^2*(1+c+c^2+d)",
    "(1+c+d)*(1+c^2*d/(1+d))",
    "c^2*d^7 [P(2,7)]",
    "1 [RP(2)]",
    "e^17 [RPnu]",
    "e^2+c*e+c^2+d",
    "1/(1+c+c^2+d)",
    "c d e alpha + 1/1/c^2 + (c+d)+(e*alpha)",
];
