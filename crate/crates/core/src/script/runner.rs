use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::ast::*;
use super::ScriptError;
use crate::closure::{self, ClosureMode, StructuralOptions};
use crate::error::{Error, Result};
use crate::ideal::{format_generators, ring_map_kernel, Ideal};
use crate::poly::{MonomialOrder, Poly, PolyExpr, Ring, RingRef};
use crate::presented::PresentedRing;

pub const VERSION: &str = concat!("icalc ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub scenario: String,
    /// Order for `poly(...)` rings; grevlex when unset.
    pub order: Option<MonomialOrder>,
    /// Upper end of the default Frobenius exponent range.
    pub emax: u32,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            scenario: "script".into(),
            order: None,
            emax: closure::DEFAULT_E_RANGE.1,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub line: usize,
    pub label: String,
    pub kind: String,
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub label: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub scenario: String,
    pub version: String,
    pub seed: u64,
    pub entries: Vec<Entry>,
    pub checks: Vec<CheckRecord>,
}

impl ReportDocument {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Exit code for a completed run: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario {} ({}, seed {})", self.scenario, self.version, self.seed);
        for e in &self.entries {
            let _ = writeln!(out, "\n[{}] {}", e.line, e.label);
            render(&e.data, 4, &mut out);
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "\nchecks: {passed}/{} passed", self.checks.len());
        for c in &self.checks {
            let _ = writeln!(out, "  {} {}", if c.pass { "PASS" } else { "FAIL" }, c.label);
        }
        out
    }

    pub fn entry(&self, label_prefix: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.label.starts_with(label_prefix))
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

fn strings(polys: &[Poly]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

struct Runner<'a> {
    opts: &'a RunOptions,
    rings: BTreeMap<String, PresentedRing>,
    active: Option<PresentedRing>,
    env: BTreeMap<String, Ideal>,
    doc: ReportDocument,
}

/// Evaluates the statements in order. Failed checks are recorded, not raised;
/// the first evaluation error aborts the run.
pub fn run_script(script: &Script, opts: &RunOptions) -> std::result::Result<ReportDocument, ScriptError> {
    let mut r = Runner {
        opts,
        rings: BTreeMap::new(),
        active: None,
        env: BTreeMap::new(),
        doc: ReportDocument {
            scenario: opts.scenario.clone(),
            version: VERSION.to_string(),
            seed: opts.seed,
            entries: Vec::new(),
            checks: Vec::new(),
        },
    };
    for st in &script.statements {
        r.statement(&st.node, st.pos).map_err(|source| ScriptError::Eval {
            line: st.pos.line,
            col: st.pos.col,
            source,
        })?;
    }
    Ok(r.doc)
}

impl Runner<'_> {
    fn ctx(&self) -> Result<&PresentedRing> {
        self.active
            .as_ref()
            .ok_or_else(|| Error::Precondition("no ring has been declared".into()))
    }

    fn ambient(&self) -> Result<RingRef> {
        Ok(self.ctx()?.ambient().clone())
    }

    fn push(&mut self, pos: Pos, label: String, kind: &str, data: Value) {
        self.doc.entries.push(Entry {
            line: pos.line,
            label,
            kind: kind.to_string(),
            data,
        });
    }

    fn lift(&self, i: &Ideal) -> Result<Ideal> {
        self.ctx()?.extend(i.generators())
    }

    fn poly(&self, p: &PolyExpr) -> Result<Poly> {
        p.to_poly(&self.ambient()?)
    }

    fn polys(&self, args: &[Arg]) -> Result<Vec<Poly>> {
        args.iter()
            .map(|a| match a {
                Arg::Poly(p) => self.poly(p),
                other => Err(Error::Precondition(format!("`{other}` is not a polynomial"))),
            })
            .collect()
    }

    fn arg_expr(&self, args: &[Arg], k: usize) -> Result<Ideal> {
        match args.get(k) {
            Some(Arg::Expr(e)) => self.eval(e),
            _ => Err(Error::Precondition(format!("argument {} must be an ideal", k + 1))),
        }
    }

    fn arg_poly(&self, args: &[Arg], k: usize) -> Result<Poly> {
        match args.get(k) {
            Some(Arg::Poly(p)) => self.poly(p),
            _ => Err(Error::Precondition(format!("argument {} must be a polynomial", k + 1))),
        }
    }

    fn eval(&self, e: &Expr) -> Result<Ideal> {
        let ring = self.ambient()?;
        match e {
            Expr::Ideal(polys) => {
                let gens = polys.iter().map(|p| p.to_poly(&ring)).collect::<Result<Vec<_>>>()?;
                Ideal::new(&ring, gens)
            }
            Expr::Name(n) => self
                .env
                .get(n)
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("`{n}` is unbound"))),
            Expr::Sum(a, b) => self.eval(a)?.sum(&self.eval(b)?),
            Expr::Product(a, b) => self.eval(a)?.product(&self.eval(b)?),
            Expr::Meet(a, b) => self.lift(&self.eval(a)?)?.intersection(&self.lift(&self.eval(b)?)?),
            Expr::Colon(a, b) => self.lift(&self.eval(a)?)?.colon(&self.eval(b)?),
            Expr::Bracket(a, q) => self.lift(&self.eval(a)?.bracket_power(*q)?),
            Expr::Dc(a, mode) => closure::decomposition_closure(self.ctx()?, &self.eval(a)?, *mode),
            Expr::Ker { targets, images } => {
                let target = Ring::new(ring.characteristic() as u64, targets, MonomialOrder::GrevLex)?;
                let mut imgs = Vec::with_capacity(ring.nvars());
                for v in ring.vars() {
                    let found = images.iter().find(|(name, _)| name == v).ok_or_else(|| {
                        Error::Precondition(format!("variable {v} has no image"))
                    })?;
                    imgs.push(found.1.to_poly(&target)?);
                }
                if let Some((extra, _)) = images.iter().find(|(name, _)| ring.var_index(name).is_err()) {
                    return Err(Error::UnknownVariable(extra.clone()));
                }
                ring_map_kernel(&ring, &target, &imgs)
            }
        }
    }

    fn statement(&mut self, node: &Stmt, pos: Pos) -> Result<()> {
        let label = node.to_string();
        match node {
            Stmt::Ring {
                name,
                base,
                quotient,
                primes,
            } => {
                let base_ring = match base {
                    RingBase::Poly { p, vars } => {
                        let order = self.opts.order.unwrap_or(MonomialOrder::GrevLex);
                        PresentedRing::polynomial(&Ring::new(*p, vars, order)?)?
                    }
                    RingBase::Named(n) => self
                        .rings
                        .get(n)
                        .cloned()
                        .ok_or_else(|| Error::Precondition(format!("ring `{n}` is unbound")))?,
                };
                self.active = Some(base_ring.clone());
                let ring = match quotient {
                    None => base_ring,
                    Some(q) => {
                        let j = base_ring.extend(self.eval(q)?.generators())?;
                        let ps = if primes.is_empty() {
                            None
                        } else {
                            Some(primes.iter().map(|p| self.eval(p)).collect::<Result<Vec<_>>>()?)
                        };
                        PresentedRing::new(j, ps)?
                    }
                };
                let mut data = json!({
                    "ring": ring.ambient().to_string(),
                    "defining": strings(&ring.defining_ideal().basis()?),
                    "dim": ring.dim(),
                });
                if let Some(ps) = ring.primes() {
                    let mut list = Vec::new();
                    for p in ps {
                        list.push(json!({
                            "prime": p.ideal.canonical_string()?,
                            "dim": p.dim,
                            "absolutely_minimal": p.absolutely_minimal,
                        }));
                    }
                    data["primes"] = Value::Array(list);
                }
                self.rings.insert(name.clone(), ring.clone());
                self.active = Some(ring);
                self.push(pos, label, "ring", data);
            }
            Stmt::Let { name, expr } => {
                let value = self.eval(expr)?.canonical()?;
                let ctx = self.ctx()?;
                let mut data = json!({ "generators": strings(&value.basis()?) });
                if !ctx.defining_ideal().is_zero() {
                    let mut image = Vec::new();
                    for g in self.lift(&value)?.basis()? {
                        let r = ctx.image(&g)?;
                        if !r.is_zero() {
                            image.push(r.to_string());
                        }
                    }
                    data["image"] = json!(image);
                }
                self.env.insert(name.clone(), value);
                self.push(pos, label, "let", data);
            }
            Stmt::Check { kind, args } => {
                let (pass, detail) = self.check(*kind, args)?;
                let mut data = json!({ "pass": pass });
                if let Some(d) = detail {
                    data["detail"] = d;
                }
                self.doc.checks.push(CheckRecord {
                    label: label.clone(),
                    pass,
                });
                self.push(pos, label, "check", data);
            }
            Stmt::Report { kind, args } => {
                let data = self.report(*kind, args)?;
                self.push(pos, label, kind.name(), data);
            }
        }
        Ok(())
    }

    fn check(&self, kind: CheckKind, args: &[Arg]) -> Result<(bool, Option<Value>)> {
        let ctx = self.ctx()?;
        Ok(match kind {
            CheckKind::Equal => {
                let a = self.lift(&self.arg_expr(args, 0)?)?;
                let b = self.lift(&self.arg_expr(args, 1)?)?;
                let pass = a.equals(&b)?;
                let detail = if pass {
                    None
                } else {
                    Some(json!({
                        "left": strings(&a.basis()?),
                        "right": strings(&b.basis()?),
                    }))
                };
                (pass, detail)
            }
            CheckKind::Member => {
                let f = self.arg_poly(args, 0)?;
                let i = self.lift(&self.arg_expr(args, 1)?)?;
                let pass = i.contains(&f)?;
                let detail = if pass {
                    None
                } else {
                    Some(json!({ "remainder": i.reduce(&f)?.to_string() }))
                };
                (pass, detail)
            }
            CheckKind::Sop => {
                let zs = self.polys(args)?;
                let c = ctx.is_system_of_parameters(&zs)?;
                (
                    c.is_sop,
                    Some(json!({
                        "dim": ctx.dim(),
                        "count": zs.len(),
                        "quotient_dim": c.quotient_dim,
                    })),
                )
            }
            CheckKind::Regular => {
                let zs = self.polys(args)?;
                let rep = ctx.is_regular_sequence(&zs)?;
                let mut d = json!({ "proper": rep.proper });
                if let Some(k) = rep.failing_step() {
                    d["failing_step"] = json!(k);
                    if let Some(w) = &rep.steps[k - 1].zero_divisor_witness {
                        d["witness"] = json!(w.to_string());
                    }
                }
                (rep.is_regular(), Some(d))
            }
        })
    }

    fn report(&self, kind: ReportKind, args: &[Arg]) -> Result<Value> {
        let ctx = self.ctx()?;
        Ok(match kind {
            ReportKind::Closedness => {
                let i = self.arg_expr(args, 0)?;
                let mode = match args.get(1) {
                    Some(Arg::Mode(m)) => *m,
                    _ => ClosureMode::Tight,
                };
                to_value(&closure::closedness_necessary_test(ctx, &i, mode)?.to_json()?)
            }
            ReportKind::Contain => {
                let i = self.arg_expr(args, 0)?;
                to_value(&closure::theorem_contain_verdict(ctx, &i)?.to_json()?)
            }
            ReportKind::Structural => {
                let i = self.arg_expr(args, 0)?;
                let opts = StructuralOptions {
                    p_unmixed: matches!(args.get(1), Some(Arg::Word(w)) if w == "unmixed"),
                    seed: self.opts.seed,
                };
                to_value(&closure::structural_verdict(ctx, &i, opts)?.to_json()?)
            }
            ReportKind::Capture => {
                let zs = self.polys(args)?;
                to_value(&closure::colon_capture_report(ctx, &zs)?.to_json()?)
            }
            ReportKind::Netest => {
                let cs = self.polys(args)?;
                let given = if cs.is_empty() { None } else { Some(cs.as_slice()) };
                let data = closure::construct_ne_test_data(ctx, given, closure::DEFAULT_NILPOTENCY_CAP)?;
                to_value(&data.to_json(ctx)?)
            }
            ReportKind::Frobenius => {
                let i = self.arg_expr(args, 0)?;
                let x = self.arg_poly(args, 1)?;
                let c = self.arg_poly(args, 2)?;
                let (lo, hi) = match (args.get(3), args.get(4)) {
                    (Some(Arg::Int(a)), Some(Arg::Int(b))) => (*a as u32, *b as u32),
                    _ => (closure::DEFAULT_E_RANGE.0, self.opts.emax),
                };
                to_value(&closure::bounded_frobenius_check(ctx, &i, &x, &c, lo, hi)?.to_json())
            }
            ReportKind::Cm => {
                let i = self.lift(&self.arg_expr(args, 0)?)?;
                let sop = self.polys(&args[1..])?;
                let quotient = PresentedRing::new(i.clone(), None)?;
                let probe = quotient.cm_probe(if sop.is_empty() { None } else { Some(&sop) }, self.opts.seed)?;
                let mut d = json!({
                    "ring": format!("S/{}", i.canonical_string()?),
                    "dim": quotient.dim(),
                    "verdict": to_value(&probe.verdict),
                    "sop": strings(&probe.sop),
                    "exact": probe.is_exact(),
                    "grading": probe.grading,
                    "failing_step": probe.failing_step,
                });
                if let (Some(k), Some(reg)) = (probe.failing_step, &probe.regularity) {
                    if let Some(w) = &reg.steps[k - 1].zero_divisor_witness {
                        d["witness"] = json!(w.to_string());
                    }
                }
                d
            }
            ReportKind::Classify => {
                let c = ctx.classify()?;
                let primes = ctx.require_primes()?;
                let names = |idx: &[usize]| -> Result<Vec<String>> {
                    idx.iter().map(|&k| primes[k].ideal.canonical_string()).collect()
                };
                json!({
                    "dims": c.dims,
                    "equidimensional": c.equidimensional,
                    "absolutely_minimal": names(&c.absolutely_minimal)?,
                    "lower_dimensional": names(&c.lower_dimensional)?,
                    "P": strings(&c.p.basis()?),
                    "Q": strings(&c.q.basis()?),
                    "P_plus_Q": format_generators(&c.p.sum(&c.q)?.basis()?),
                    "P_plus_Q_maximal": c.p.sum(&c.q)?.equals(&Ideal::maximal(ctx.ambient()))?,
                })
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_script;
    use super::*;

    fn run(src: &str) -> ReportDocument {
        run_script(&parse_script(src).unwrap(), &RunOptions::default()).unwrap()
    }

    #[test]
    fn empty_script() {
        let doc = run("");
        assert!(doc.entries.is_empty());
        assert_eq!(doc.exit_code(), 0);
    }

    #[test]
    fn failing_equality_prints_both_bases() {
        let doc = run(
            "ring S = poly(p=2; T,X,Y,Z)\n\
             let P = ideal(T*Y - X*Z, T^2*X - Z^2, T*X^2 - Y*Z, X^3 - Y^2)\n\
             let Q = ideal(T, X, Y)\n\
             check equal(meet(P, Q), ideal(T*Y - X*Z))",
        );
        assert_eq!(doc.exit_code(), 1);
        let e = doc.entry("check").unwrap();
        assert_eq!(e.data["pass"], json!(false));
        assert_eq!(e.data["detail"]["left"].as_array().unwrap().len(), 4);
        assert_eq!(e.data["detail"]["right"], json!(["T*Y + X*Z"]));
        assert!(doc.to_text().contains("FAIL check equal"));
    }

    #[test]
    fn quotient_semantics() {
        let doc = run(
            "ring S = poly(p=2; X,Y,Z)\n\
             ring R = S / ideal(X*Y, X*Z) with primes [ideal(X), ideal(Y, Z)]\n\
             check equal(colon(ideal(0), ideal(Y)), ideal(X))\n\
             check member(X*Y, ideal(0))\n\
             check equal(bracket(ideal(X + Y), 0), ideal(X + Y))\n\
             check equal(bracket(ideal(X + Y), 1), ideal(X^2 + Y^2))\n\
             check sop(Y, X - Z)\n\
             check regular(Y)",
        );
        let passes: Vec<bool> = doc.checks.iter().map(|c| c.pass).collect();
        assert_eq!(passes, vec![true, true, true, true, true, false]);
    }

    #[test]
    fn evaluation_errors_carry_position() {
        let s = parse_script("ring S = poly(p=2; x,y)\nlet I = ideal(w)").unwrap();
        let err = run_script(&s, &RunOptions::default()).unwrap_err();
        assert_eq!(
            err,
            ScriptError::Eval {
                line: 2,
                col: 1,
                source: Error::UnknownVariable("w".into())
            }
        );
        assert_eq!(err.exit_code(), 3);
    }
}
