use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    C,
    D,
    Alpha,
    E,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::C, Symbol::D, Symbol::Alpha, Symbol::E];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::C => "c",
            Symbol::D => "d",
            Symbol::Alpha => "alpha",
            Symbol::E => "e",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Target of a bracket evaluation `expr [SPACE]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Dold {
        h: u32,
        i: u32,
    },
    Projective {
        n: u32,
    },
    /// The projectivized bundle bound by the evaluation environment.
    ProjBundle,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Dold { h, i } => write!(f, "P({h},{i})"),
            Space::Projective { n } => write!(f, "RP({n})"),
            Space::ProjBundle => f.write_str("RPnu"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Sym(Symbol),
    /// Integer literal, read mod 2.
    Int(u64),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    /// `1/x`: truncated formal inverse.
    Inv(Box<Expr>),
    /// `binom(n, r)` as a mod-2 scalar.
    Binom(u64, u64),
    /// `x [SPACE]`; only valid at the top level.
    Eval(Box<Expr>, Space),
}

impl Expr {
    pub fn sum(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn product(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, n: u32) -> Expr {
        Expr::Pow(Box::new(a), n)
    }

    pub fn inv(a: Expr) -> Expr {
        Expr::Inv(Box::new(a))
    }

    // Precedence levels: 0 sum, 1 product, 2 power, 3 atom. Operators are
    // left-associative, so a right operand at the same level gets parens.
    fn write_at(&self, level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let own = match self {
            Expr::Add(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Pow(..) => 2,
            Expr::Eval(..) => 0,
            _ => 3,
        };
        let wrap = own < level;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Expr::Sym(s) => f.write_str(s.name())?,
            Expr::Int(n) => write!(f, "{n}")?,
            Expr::Binom(n, r) => write!(f, "binom({n},{r})")?,
            Expr::Add(a, b) => {
                a.write_at(0, f)?;
                f.write_str("+")?;
                b.write_at(1, f)?;
            }
            Expr::Mul(a, b) => {
                a.write_at(1, f)?;
                f.write_str("*")?;
                b.write_at(2, f)?;
            }
            Expr::Pow(a, n) => {
                a.write_at(3, f)?;
                write!(f, "^{n}")?;
            }
            Expr::Inv(a) => {
                f.write_str("1/")?;
                a.write_at(3, f)?;
            }
            Expr::Eval(a, space) => {
                a.write_at(0, f)?;
                write!(f, " [{space}]")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(0, f)
    }
}
