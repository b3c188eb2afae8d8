use std::fmt;

use crate::closure::ClosureMode;
use crate::poly::PolyExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

/// A statement with its source position. Positions are not part of the node.
#[derive(Debug, Clone)]
pub struct Statement {
    pub pos: Pos,
    pub node: Stmt,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl Eq for Statement {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Ring {
        name: String,
        base: RingBase,
        quotient: Option<Expr>,
        primes: Vec<Expr>,
    },
    Let {
        name: String,
        expr: Expr,
    },
    Check {
        kind: CheckKind,
        args: Vec<Arg>,
    },
    Report {
        kind: ReportKind,
        args: Vec<Arg>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingBase {
    Poly { p: u64, vars: Vec<String> },
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Ideal(Vec<PolyExpr>),
    Name(String),
    Sum(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Meet(Box<Expr>, Box<Expr>),
    Colon(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, u32),
    Dc(Box<Expr>, ClosureMode),
    Ker {
        targets: Vec<String>,
        images: Vec<(String, PolyExpr)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Expr(Expr),
    Poly(PolyExpr),
    Mode(ClosureMode),
    Int(u64),
    Word(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Equal,
    Member,
    Sop,
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Closedness,
    Contain,
    Structural,
    Capture,
    Netest,
    Frobenius,
    Cm,
    Classify,
}

impl CheckKind {
    pub const ALL: [CheckKind; 4] = [CheckKind::Equal, CheckKind::Member, CheckKind::Sop, CheckKind::Regular];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Equal => "equal",
            CheckKind::Member => "member",
            CheckKind::Sop => "sop",
            CheckKind::Regular => "regular",
        }
    }
}

impl ReportKind {
    pub const ALL: [ReportKind; 8] = [
        ReportKind::Closedness,
        ReportKind::Contain,
        ReportKind::Structural,
        ReportKind::Capture,
        ReportKind::Netest,
        ReportKind::Frobenius,
        ReportKind::Cm,
        ReportKind::Classify,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ReportKind::Closedness => "closedness",
            ReportKind::Contain => "contain",
            ReportKind::Structural => "structural",
            ReportKind::Capture => "capture",
            ReportKind::Netest => "netest",
            ReportKind::Frobenius => "frobenius",
            ReportKind::Cm => "cm",
            ReportKind::Classify => "classify",
        }
    }
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl Expr {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            Expr::Sum(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Expr::Product(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Expr::Ideal(polys) => {
                write!(f, "ideal(")?;
                join(f, polys)?;
                write!(f, ")")
            }
            Expr::Name(n) => write!(f, "{n}"),
            Expr::Meet(a, b) => write!(f, "meet({a}, {b})"),
            Expr::Colon(a, b) => write!(f, "colon({a}, {b})"),
            Expr::Bracket(a, e) => write!(f, "bracket({a}, {e})"),
            Expr::Dc(a, m) => write!(f, "dc({a}, {})", m.name()),
            Expr::Ker { targets, images } => {
                write!(f, "ker(")?;
                join(f, targets)?;
                write!(f, "; ")?;
                for (i, (v, img)) in images.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v} -> {img}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Expr(e) => write!(f, "{e}"),
            Arg::Poly(p) => write!(f, "{p}"),
            Arg::Mode(m) => write!(f, "{}", m.name()),
            Arg::Int(v) => write!(f, "{v}"),
            Arg::Word(w) => write!(f, "{w}"),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring {
                name,
                base,
                quotient,
                primes,
            } => {
                write!(f, "ring {name} = ")?;
                match base {
                    RingBase::Poly { p, vars } => {
                        write!(f, "poly(p={p}; ")?;
                        join(f, vars)?;
                        write!(f, ")")?;
                    }
                    RingBase::Named(n) => write!(f, "{n}")?,
                }
                if let Some(q) = quotient {
                    write!(f, " / {q}")?;
                    if !primes.is_empty() {
                        write!(f, " with primes [")?;
                        join(f, primes)?;
                        write!(f, "]")?;
                    }
                }
                Ok(())
            }
            Stmt::Let { name, expr } => write!(f, "let {name} = {expr}"),
            Stmt::Check { kind, args } => {
                write!(f, "check {}(", kind.name())?;
                join(f, args)?;
                write!(f, ")")
            }
            Stmt::Report { kind, args } => {
                write!(f, "report {}(", kind.name())?;
                join(f, args)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.node)?;
        }
        Ok(())
    }
}
