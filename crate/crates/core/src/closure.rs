//! Closure diagnostics for tight closure (`I*`) and NE closure (`I★`).
//!
//! Neither closure is ever computed in full. Every report is one of four kinds:
//!
//! - a *lower bound*: the decomposition closure `⋂ (I + J + P_i)`, over all
//!   minimal primes for tight closure and over the absolutely minimal primes for
//!   NE closure;
//! - a *necessary test*: an ideal differing from its decomposition closure is not
//!   closed, and a witness element proves it;
//! - a *theorem verdict*: the hypotheses of a structural theorem are checked and
//!   the theorem supplies the certificate;
//! - *Frobenius evidence*: `c·x^q ∈ I^[q]` checked for a finite range of `q = p^e`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{find_positive_grading, format_generators, Ideal};
use crate::poly::{Monomial, Poly, RingRef};
use crate::presented::{CmVerdict, PresentedRing, MAX_GRADING_WEIGHT};

pub const DEFAULT_E_RANGE: (u32, u32) = (0, 5);
pub const DEFAULT_NILPOTENCY_CAP: u32 = 10;

pub const CITE_INTERSECT: &str =
    "Lemma intersect: a tightly closed ideal I equals the intersection of I + P_i over the minimal primes P_i";
pub const CITE_NE_COMPONENTS: &str =
    "NE basics (5): x is in the NE closure of I iff its image is in the NE closure of IR/P for every absolutely minimal P";
pub const CITE_NE_ZERO: &str =
    "NE basics (1): the NE closure of 0 is the intersection of the absolutely minimal primes";
pub const CITE_CONTAIN: &str =
    "Theorem contain: a parameter ideal contained in P + Q is never tightly closed";
pub const CITE_CMDVR: &str =
    "Theorem CMDVR: with Q = (X_1..X_n) and S/P Cohen-Macaulay, no parameter ideal of S/(P ∩ Q) is tightly closed";
pub const CITE_NCMDVR: &str =
    "Theorem NCMDVR: with Q = (X_1..X_n) and P homogeneous unmixed, dim S/P >= 2, no homogeneous parameter ideal of S/(P ∩ Q) is tightly closed";
pub const CITE_CAPTURE: &str =
    "NE colon capturing: (x_1..x_k) : x_{k+1} is contained in (x_1..x_k)★";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMode {
    Tight,
    Ne,
}

impl ClosureMode {
    pub fn name(&self) -> &'static str {
        match self {
            ClosureMode::Tight => "tight",
            ClosureMode::Ne => "ne",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureStatus {
    NotClosedCertified,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    LowerBound,
    NecessaryTest,
    TheoremVerdict,
    FrobeniusEvidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Hypothesis {
    fn new(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Hypothesis {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        }
    }
}

/// Outcome of a closedness or structural analysis of one ideal.
///
/// `status == NotClosedCertified` with a witness means the witness lies in
/// `dc_result` but not in the subject ideal (plus J). Theorem verdicts certify
/// without a witness.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub subject: Ideal,
    pub mode: ClosureMode,
    pub kind: ReportKind,
    pub dc_result: Option<Ideal>,
    pub status: ClosureStatus,
    pub witness: Option<Poly>,
    pub citations: Vec<String>,
    pub e_range: Option<(u32, u32)>,
    pub hypotheses: Vec<Hypothesis>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct ClosureReportJson {
    pub subject: String,
    pub mode: ClosureMode,
    pub kind: ReportKind,
    pub dc_generators: Option<Vec<String>>,
    pub status: ClosureStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub citations: Vec<String>,
    pub e_range: Option<(u32, u32)>,
    pub hypotheses: Vec<Hypothesis>,
    pub notes: Vec<String>,
}

fn strings(polys: &[Poly]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

impl ClosureReport {
    pub fn to_json(&self) -> Result<ClosureReportJson> {
        let dc_generators = match &self.dc_result {
            Some(dc) => Some(strings(&dc.basis()?)),
            None => None,
        };
        Ok(ClosureReportJson {
            subject: format_generators(self.subject.generators()),
            mode: self.mode,
            kind: self.kind,
            dc_generators,
            status: self.status,
            witness: self.witness.as_ref().map(|w| w.to_string()),
            citations: self.citations.clone(),
            e_range: self.e_range,
            hypotheses: self.hypotheses.clone(),
            notes: self.notes.clone(),
        })
    }

    pub fn is_certified(&self) -> bool {
        self.status == ClosureStatus::NotClosedCertified
    }
}

/// Preimage in S of `⋂ (I + P_i)` over all minimal primes (`Tight`) or over the
/// absolutely minimal ones (`Ne`). Contains `I + J` and is a lower bound for the
/// corresponding closure.
pub fn decomposition_closure(r: &PresentedRing, i: &Ideal, mode: ClosureMode) -> Result<Ideal> {
    let primes = r.require_primes()?;
    let base = r.extend(i.generators())?;
    let parts = primes
        .iter()
        .filter(|p| mode == ClosureMode::Tight || p.absolutely_minimal)
        .map(|p| base.sum(&p.ideal))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Ideal> = parts.iter().collect();
    Ideal::intersect_all(r.ambient(), &refs)?.canonical()
}

/// Lemma-`intersect` test: if the decomposition closure is strictly larger than
/// `I + J`, the first reduced-basis element outside `I + J` witnesses that `I`
/// is not closed.
pub fn closedness_necessary_test(
    r: &PresentedRing,
    i: &Ideal,
    mode: ClosureMode,
) -> Result<ClosureReport> {
    let dc = decomposition_closure(r, i, mode)?;
    let base = r.extend(i.generators())?;
    let mut witness = None;
    for g in dc.basis()? {
        if !base.contains(&g)? {
            witness = Some(g);
            break;
        }
    }
    let citation = match mode {
        ClosureMode::Tight => CITE_INTERSECT,
        ClosureMode::Ne => CITE_NE_COMPONENTS,
    };
    let status = if witness.is_some() {
        ClosureStatus::NotClosedCertified
    } else {
        ClosureStatus::Inconclusive
    };
    let mut notes = Vec::new();
    if witness.is_none() {
        notes.push(format!(
            "I + J equals its {} decomposition closure; the necessary test is silent",
            mode.name()
        ));
    }
    Ok(ClosureReport {
        subject: i.clone(),
        mode,
        kind: ReportKind::NecessaryTest,
        dc_result: Some(dc),
        status,
        witness,
        citations: vec![citation.to_string()],
        e_range: None,
        hypotheses: Vec::new(),
        notes,
    })
}

fn require_sop(r: &PresentedRing, i: &Ideal) -> Result<()> {
    let check = r.is_system_of_parameters(i.generators())?;
    if !check.is_sop {
        return Err(Error::Precondition(format!(
            "{} is not a system of parameters ({} elements for dim {}, quotient dimension {})",
            format_generators(i.generators()),
            i.generators().len(),
            r.dim(),
            check.quotient_dim
        )));
    }
    Ok(())
}

/// Theorem `contain`: for a non-equidimensional ring, a parameter ideal contained
/// in `P + Q` (`P` the intersection of the absolutely minimal primes, `Q` of the
/// others) is not tightly closed.
pub fn theorem_contain_verdict(r: &PresentedRing, i: &Ideal) -> Result<ClosureReport> {
    let c = r.classify()?;
    if c.equidimensional {
        return Err(Error::NotApplicable(
            "the ring is equidimensional; there is no lower-dimensional component".into(),
        ));
    }
    require_sop(r, i)?;
    let pq = c.p.sum(&c.q)?;
    let mut outside = None;
    for g in i.generators() {
        if !pq.contains(g)? {
            outside = Some(g.clone());
            break;
        }
    }
    let maximal = pq.equals(&Ideal::maximal(r.ambient()))?;
    let contained = outside.is_none();
    let mut hypotheses = vec![
        Hypothesis::new(
            "non-equidimensional",
            true,
            format!("prime dimensions {:?}, dim R = {}", c.dims, r.dim()),
        ),
        Hypothesis::new("system of parameters", true, "count = dim R, quotient dimension 0"),
        Hypothesis::new(
            "I inside P + Q",
            contained,
            match &outside {
                None => format!("P + Q = {}", pq.canonical_string()?),
                Some(g) => format!("{g} is not in P + Q = {}", pq.canonical_string()?),
            },
        ),
    ];
    hypotheses.push(Hypothesis::new(
        "P + Q maximal",
        maximal,
        "when P + Q is the maximal ideal no parameter ideal is tightly closed",
    ));
    Ok(ClosureReport {
        subject: i.clone(),
        mode: ClosureMode::Tight,
        kind: ReportKind::TheoremVerdict,
        dc_result: None,
        status: if contained {
            ClosureStatus::NotClosedCertified
        } else {
            ClosureStatus::Inconclusive
        },
        witness: None,
        citations: vec![CITE_CONTAIN.to_string()],
        e_range: None,
        hypotheses,
        notes: Vec::new(),
    })
}

/// Generators rewritten as `Y^h + q_1, q_2, ..., q_d` with every `q_i` in the
/// ideal of the non-distinguished variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SopNormalization {
    pub h: u32,
    pub lead: Poly,
    pub rest: Vec<Poly>,
}

/// Terms of `f` involving only the variable `y` (constants included).
fn pure_part(f: &Poly, y: usize) -> Vec<(u32, u32)> {
    f.terms()
        .iter()
        .filter(|(_, m)| m.exponents().iter().enumerate().all(|(v, &e)| v == y || e == 0))
        .map(|(c, m)| (*c, m.exponents()[y]))
        .collect()
}

/// Row-reduces the pure-`Y` parts of the generators (a univariate Euclidean
/// algorithm) until a single generator `Y^h + q` keeps a pure-`Y` part.
pub fn normalize_sop_generators(
    ring: &RingRef,
    y: usize,
    gens: &[Poly],
) -> Result<SopNormalization> {
    let field = ring.field();
    let n = ring.nvars();
    let mut work: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &work {
        if pure_part(g, y).iter().any(|&(_, d)| d == 0) {
            return Err(Error::Precondition(format!(
                "{g} has a nonzero constant term, so it is not in the maximal ideal"
            )));
        }
    }
    // pure parts are kept sorted by descending Y-degree through `top`
    let top = |f: &Poly| pure_part(f, y).into_iter().max_by_key(|t| t.1);
    loop {
        let live: Vec<usize> = (0..work.len()).filter(|&k| top(&work[k]).is_some()).collect();
        if live.is_empty() {
            return Err(Error::NoYLead);
        }
        if live.len() == 1 {
            break;
        }
        let pivot = *live
            .iter()
            .min_by_key(|&&k| (top(&work[k]).unwrap().1, k))
            .unwrap();
        let (pc, pd) = top(&work[pivot]).unwrap();
        for &k in &live {
            if k == pivot {
                continue;
            }
            while let Some((c, d)) = top(&work[k]) {
                if d < pd {
                    break;
                }
                let factor = field.div(c, pc)?;
                let shift = Monomial::var(n, y, d - pd);
                work[k] = work[k].try_sub(&work[pivot].mul_term(factor, &shift)?)?;
            }
        }
    }
    let lead_idx = (0..work.len()).find(|&k| top(&work[k]).is_some()).unwrap();
    let part = pure_part(&work[lead_idx], y);
    if part.len() != 1 {
        let text = part
            .iter()
            .map(|(c, d)| format!("{c}*{}^{d}", ring.vars()[y]))
            .collect::<Vec<_>>()
            .join(" + ");
        return Err(Error::NonMonomialLead {
            var: ring.vars()[y].clone(),
            part: text,
        });
    }
    let (c, h) = part[0];
    let lead = work[lead_idx].scale(field.inv(c)?);
    let rest: Vec<Poly> = work
        .iter()
        .enumerate()
        .filter(|(k, g)| *k != lead_idx && !g.is_zero())
        .map(|(_, g)| g.clone())
        .collect();
    let mut all = vec![lead.clone()];
    all.extend(rest.iter().cloned());
    let before = Ideal::new(ring, gens.to_vec())?;
    let after = Ideal::new(ring, all)?;
    debug_assert!(before.equals(&after)?);
    if !before.equals(&after)? {
        return Err(Error::Precondition("normalization changed the ideal".into()));
    }
    Ok(SopNormalization { h, lead, rest })
}

/// Options for [`structural_verdict`].
#[derive(Debug, Clone, Copy)]
pub struct StructuralOptions {
    /// The user asserts that P is unmixed; it is not verified.
    pub p_unmixed: bool,
    pub seed: u64,
}

impl Default for StructuralOptions {
    fn default() -> Self {
        StructuralOptions {
            p_unmixed: false,
            seed: 0,
        }
    }
}

/// Checks the hypotheses of Theorems `CMDVR` and `NCMDVR` for `R = S/(P ∩ Q)`
/// where `Q` is generated by every variable except the last one, `Y`.
pub fn structural_verdict(
    r: &PresentedRing,
    i: &Ideal,
    opts: StructuralOptions,
) -> Result<ClosureReport> {
    let ring = r.ambient().clone();
    let n = ring.nvars();
    if n < 2 {
        return Err(Error::NotApplicable("need at least two variables".into()));
    }
    let y = n - 1;
    let c = r.classify()?;
    if c.equidimensional {
        return Err(Error::NotApplicable("the ring is equidimensional".into()));
    }
    let qvars = Ideal::new(&ring, (0..y).map(|v| ring.gen(v)).collect())?;
    if !c.q.equals(&qvars)? {
        return Err(Error::NotApplicable(format!(
            "the lower-dimensional part {} is not the ideal of all variables but {}",
            c.q.canonical_string()?,
            ring.vars()[y]
        )));
    }
    require_sop(r, i)?;

    let mut notes = Vec::new();
    let mut hypotheses = Vec::new();
    let primes = r.require_primes()?;
    let abs: Vec<Ideal> = c.absolutely_minimal.iter().map(|&k| primes[k].ideal.clone()).collect();
    let sp = PresentedRing::new(c.p.clone(), Some(abs))?;

    let probe = sp.cm_probe(None, opts.seed)?;
    let cm = probe.verdict == CmVerdict::Cm && probe.is_exact();
    let sop_text = format_generators(&probe.sop);
    hypotheses.push(Hypothesis::new(
        "S/P Cohen-Macaulay",
        cm,
        match (probe.verdict, probe.failing_step) {
            (CmVerdict::Cm, _) if probe.is_exact() => {
                format!("homogeneous s.o.p. {sop_text} is a regular sequence")
            }
            (CmVerdict::Cm, _) => format!("s.o.p. {sop_text} is regular but no grading found (heuristic)"),
            (CmVerdict::NotCm, Some(k)) => {
                format!("s.o.p. {sop_text} fails to be regular at step {k}")
            }
            (CmVerdict::NotCm, None) => format!("s.o.p. {sop_text} generates the unit ideal"),
            (CmVerdict::NoSopFound, _) => "no system of parameters found".to_string(),
        },
    ));

    if let (Ok(ni), Ok(np)) = (
        normalize_sop_generators(&ring, y, i.generators()),
        normalize_sop_generators(&ring, y, &c.p.basis()?),
    ) {
        let mut gens = vec![ni.lead.to_string()];
        gens.extend(ni.rest.iter().map(|g| g.to_string()));
        notes.push(format!(
            "I = ({}) with h = {}; P has lead {} with t = {}",
            gens.join(", "),
            ni.h,
            np.lead,
            np.h
        ));
    }

    let mut citations = Vec::new();
    let status;
    if cm {
        citations.push(CITE_CMDVR.to_string());
        status = ClosureStatus::NotClosedCertified;
    } else {
        let grading =
            find_positive_grading(&ring, &[&c.p], i.generators(), MAX_GRADING_WEIGHT)?;
        let dim_p = c.p.dimension()?;
        hypotheses.push(Hypothesis::new(
            "P and I homogeneous",
            grading.is_some(),
            match &grading {
                Some(w) => format!("positive grading {:?} on {:?}", w, ring.vars()),
                None => format!("no positive grading with weights <= {MAX_GRADING_WEIGHT}"),
            },
        ));
        hypotheses.push(Hypothesis::new(
            "P unmixed",
            opts.p_unmixed,
            if opts.p_unmixed {
                "asserted by the user, not verified"
            } else {
                "not asserted"
            },
        ));
        hypotheses.push(Hypothesis::new(
            "dim S/P >= 2",
            dim_p >= 2,
            format!("dim S/P = {dim_p}"),
        ));
        if grading.is_some() && opts.p_unmixed && dim_p >= 2 {
            citations.push(CITE_NCMDVR.to_string());
            status = ClosureStatus::NotClosedCertified;
        } else {
            status = ClosureStatus::Inconclusive;
            let failed: Vec<&str> = hypotheses
                .iter()
                .filter(|h| !h.holds)
                .map(|h| h.name.as_str())
                .collect();
            notes.push(format!("failed hypotheses: {}", failed.join(", ")));
        }
    }
    Ok(ClosureReport {
        subject: i.clone(),
        mode: ClosureMode::Tight,
        kind: ReportKind::TheoremVerdict,
        dc_result: None,
        status,
        witness: None,
        citations,
        e_range: None,
        hypotheses,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrobeniusVerdict {
    Supported,
    RefutedForC,
}

/// Evidence for `x ∈ I*` or `x ∈ I★` with a fixed multiplier `c`. `Supported`
/// is evidence, not proof; `RefutedForC` disproves membership only when `c` is a
/// (weak) test element whose `q'` is at most a failing `q`.
#[derive(Debug, Clone)]
pub struct FrobeniusCertificate {
    pub ideal: Ideal,
    pub x: Poly,
    pub c: Poly,
    pub checks: Vec<(u32, bool)>,
    pub verdict: FrobeniusVerdict,
    /// `c` avoids every minimal prime (`c ∈ R°`), when primes are known.
    pub c_in_r_circ: Option<bool>,
    /// `c` avoids every absolutely minimal prime (`c ∈ R•`), when primes are known.
    pub c_in_r_bullet: Option<bool>,
}

#[derive(Serialize)]
pub struct FrobeniusCertificateJson {
    pub ideal: String,
    pub x: String,
    pub c: String,
    pub checks: Vec<FrobeniusCheckJson>,
    pub verdict: FrobeniusVerdict,
    pub c_in_r_circ: Option<bool>,
    pub c_in_r_bullet: Option<bool>,
}

#[derive(Serialize)]
pub struct FrobeniusCheckJson {
    pub e: u32,
    pub q: u64,
    pub holds: bool,
}

impl FrobeniusCertificate {
    pub fn to_json(&self) -> FrobeniusCertificateJson {
        let p = self.x.ring().characteristic() as u64;
        FrobeniusCertificateJson {
            ideal: format_generators(self.ideal.generators()),
            x: self.x.to_string(),
            c: self.c.to_string(),
            checks: self
                .checks
                .iter()
                .map(|&(e, holds)| FrobeniusCheckJson {
                    e,
                    q: p.pow(e),
                    holds,
                })
                .collect(),
            verdict: self.verdict,
            c_in_r_circ: self.c_in_r_circ,
            c_in_r_bullet: self.c_in_r_bullet,
        }
    }
}

/// The check at exponent `e`: `c·x^q ∈ I^[q] + J^[q] + J`, the preimage of `(IR)^[q]`.
pub fn frobenius_check_at(r: &PresentedRing, i: &Ideal, x: &Poly, c: &Poly, e: u32) -> Result<bool> {
    let target = i
        .bracket_power(e)?
        .sum(&r.defining_ideal().bracket_power(e)?)?
        .sum(r.defining_ideal())?;
    target.contains(&c.try_mul(&x.frobenius_power(e)?)?)
}

pub fn bounded_frobenius_check(
    r: &PresentedRing,
    i: &Ideal,
    x: &Poly,
    c: &Poly,
    e_min: u32,
    e_max: u32,
) -> Result<FrobeniusCertificate> {
    if c.is_zero() {
        return Err(Error::InvalidMultiplier);
    }
    if e_min > e_max {
        return Err(Error::Precondition(format!("empty exponent range [{e_min}, {e_max}]")));
    }
    let mut checks = Vec::with_capacity((e_max - e_min + 1) as usize);
    for e in e_min..=e_max {
        checks.push((e, frobenius_check_at(r, i, x, c, e)?));
    }
    let verdict = if checks.iter().all(|c| c.1) {
        FrobeniusVerdict::Supported
    } else {
        FrobeniusVerdict::RefutedForC
    };
    let (mut c_in_r_circ, mut c_in_r_bullet) = (None, None);
    if let Some(primes) = r.primes() {
        let mut circ = true;
        let mut bullet = true;
        for p in primes {
            if p.ideal.contains(c)? {
                circ = false;
                if p.absolutely_minimal {
                    bullet = false;
                }
            }
        }
        c_in_r_circ = Some(circ);
        c_in_r_bullet = Some(bullet);
    }
    Ok(FrobeniusCertificate {
        ideal: i.clone(),
        x: x.clone(),
        c: c.clone(),
        checks,
        verdict,
        c_in_r_circ,
        c_in_r_bullet,
    })
}

/// Constructive weak NE-test element `c = Σ (c_i d_i)^{q'}`.
#[derive(Debug, Clone)]
pub struct NeTestData {
    /// Index into the ring's primes, with `(c_i, d_i)`.
    pub components: Vec<(usize, Poly, Poly)>,
    /// `e'` with `q' = p^{e'}` killing the nilradical: `N^[q'] = 0` in R.
    pub qprime_exponent: u32,
    pub c: Poly,
    pub c_in_r_bullet: bool,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct NeTestJson {
    pub components: Vec<NeComponentJson>,
    pub qprime_exponent: u32,
    pub qprime: u64,
    pub c: String,
    pub c_in_r_bullet: bool,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct NeComponentJson {
    pub prime: String,
    pub c_i: String,
    pub d_i: String,
}

impl NeTestData {
    pub fn to_json(&self, r: &PresentedRing) -> Result<NeTestJson> {
        let primes = r.require_primes()?;
        let mut components = Vec::new();
        for (k, ci, di) in &self.components {
            components.push(NeComponentJson {
                prime: primes[*k].ideal.canonical_string()?,
                c_i: ci.to_string(),
                d_i: di.to_string(),
            });
        }
        let p = r.ambient().characteristic() as u64;
        Ok(NeTestJson {
            components,
            qprime_exponent: self.qprime_exponent,
            qprime: p.pow(self.qprime_exponent),
            c: self.c.to_string(),
            c_in_r_bullet: self.c_in_r_bullet,
            notes: self.notes.clone(),
        })
    }
}

/// Assembles `c = Σ (c_i d_i)^{q'}` over the absolutely minimal primes `P_i`,
/// where `d_i` lies in every other minimal prime but not in `P_i`, and `q'`
/// is the least Frobenius power killing the nilradical (`e' ≤ cap`).
pub fn construct_ne_test_data(
    r: &PresentedRing,
    multipliers: Option<&[Poly]>,
    cap: u32,
) -> Result<NeTestData> {
    let primes = r.require_primes()?;
    let ring = r.ambient();
    let abs: Vec<usize> = (0..primes.len()).filter(|&k| primes[k].absolutely_minimal).collect();
    let mut notes = Vec::new();
    let cis: Vec<Poly> = match multipliers {
        Some(m) => {
            if m.len() != abs.len() {
                return Err(Error::Precondition(format!(
                    "{} multipliers given for {} absolutely minimal primes",
                    m.len(),
                    abs.len()
                )));
            }
            m.to_vec()
        }
        None => {
            notes.push(
                "c_i = 1 by default; this is a valid choice only when R/P_i is regular".to_string(),
            );
            vec![Poly::one(ring); abs.len()]
        }
    };

    let mut components = Vec::with_capacity(abs.len());
    for (&k, ci) in abs.iter().zip(&cis) {
        let others: Vec<&Ideal> = (0..primes.len())
            .filter(|&j| j != k)
            .map(|j| &primes[j].ideal)
            .collect();
        let meet = Ideal::intersect_all(ring, &others)?;
        let mut d = None;
        for g in meet.basis()? {
            if !primes[k].ideal.contains(&g)? {
                d = Some(g);
                break;
            }
        }
        let d = d.ok_or(Error::DecompositionNotIrredundant(k + 1))?;
        components.push((k, ci.clone(), d));
    }

    let all: Vec<&Ideal> = primes.iter().map(|p| &p.ideal).collect();
    let nilradical = Ideal::intersect_all(ring, &all)?.basis()?;
    let j = r.defining_ideal();
    let mut e_prime = None;
    for e in 0..=cap {
        let mut ok = true;
        for n in &nilradical {
            if !j.contains(&n.frobenius_power(e)?)? {
                ok = false;
                break;
            }
        }
        if ok {
            e_prime = Some(e);
            break;
        }
    }
    let e_prime = e_prime.ok_or(Error::NilpotencyBound(cap))?;

    let mut c = Poly::zero(ring);
    for (_, ci, di) in &components {
        c = c.try_add(&ci.try_mul(di)?.frobenius_power(e_prime)?)?;
    }
    let mut c_in_r_bullet = true;
    for &k in &abs {
        if primes[k].ideal.contains(&c)? {
            c_in_r_bullet = false;
        }
    }
    if !c_in_r_bullet {
        notes.push("assembled c lies in an absolutely minimal prime; choose other c_i".to_string());
    }
    Ok(NeTestData {
        components,
        qprime_exponent: e_prime,
        c,
        c_in_r_bullet,
        notes,
    })
}

#[derive(Debug, Clone)]
pub struct CaptureStep {
    pub k: usize,
    /// Preimage of `(x_1..x_k) :_R x_{k+1}`.
    pub colon: Ideal,
    /// Preimage of `(x_1..x_k)`.
    pub base: Ideal,
    pub dc_tight: Ideal,
    pub dc_ne: Ideal,
    pub regular: bool,
    pub tight_captures: bool,
    pub ne_captures: bool,
}

#[derive(Debug, Clone)]
pub struct CaptureReport {
    pub sop: Vec<Poly>,
    pub steps: Vec<CaptureStep>,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct CaptureStepJson {
    pub k: usize,
    pub colon: Vec<String>,
    pub base: Vec<String>,
    pub dc_tight: Vec<String>,
    pub dc_ne: Vec<String>,
    pub regular: bool,
    pub tight_captures: bool,
    pub ne_captures: bool,
}

#[derive(Serialize)]
pub struct CaptureReportJson {
    pub sop: Vec<String>,
    pub steps: Vec<CaptureStepJson>,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

impl CaptureReport {
    pub fn to_json(&self) -> Result<CaptureReportJson> {
        let mut steps = Vec::new();
        for s in &self.steps {
            steps.push(CaptureStepJson {
                k: s.k,
                colon: strings(&s.colon.basis()?),
                base: strings(&s.base.basis()?),
                dc_tight: strings(&s.dc_tight.basis()?),
                dc_ne: strings(&s.dc_ne.basis()?),
                regular: s.regular,
                tight_captures: s.tight_captures,
                ne_captures: s.ne_captures,
            });
        }
        Ok(CaptureReportJson {
            sop: strings(&self.sop),
            steps,
            citations: self.citations.clone(),
            notes: self.notes.clone(),
        })
    }
}

/// For each k, compares `C_k = (x_1..x_k) :_R x_{k+1}` with `(x_1..x_k)` and with
/// its two decomposition closures. A failed NE capture does not refute NE colon
/// capturing, since the decomposition closure only bounds `★` from below.
pub fn colon_capture_report(r: &PresentedRing, sop: &[Poly]) -> Result<CaptureReport> {
    r.require_primes()?;
    let check = r.is_system_of_parameters(sop)?;
    if !check.is_sop {
        return Err(Error::Precondition(format!(
            "{} is not a system of parameters",
            format_generators(sop)
        )));
    }
    let mut steps = Vec::with_capacity(sop.len());
    for k in 0..sop.len() {
        let i_k = Ideal::new(r.ambient(), sop[..k].to_vec())?;
        let base = r.extend(&sop[..k])?;
        let colon = base.colon_poly(&sop[k])?;
        let dc_tight = decomposition_closure(r, &i_k, ClosureMode::Tight)?;
        let dc_ne = decomposition_closure(r, &i_k, ClosureMode::Ne)?;
        steps.push(CaptureStep {
            k,
            regular: colon.is_subset_of(&base)?,
            tight_captures: colon.is_subset_of(&dc_tight)?,
            ne_captures: colon.is_subset_of(&dc_ne)?,
            colon,
            base,
            dc_tight,
            dc_ne,
        });
    }
    Ok(CaptureReport {
        sop: sop.to_vec(),
        steps,
        citations: vec![CITE_CAPTURE.to_string()],
        notes: vec![
            "a false ne_captures is not a counterexample: dc_ne is only a lower bound for the NE closure"
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring_with_vars;

    const P: [&str; 4] = ["T*Y-X*Z", "T^2*X-Z^2", "T*X^2-Y*Z", "X^3-Y^2"];

    fn badcolon() -> PresentedRing {
        let s = ring_with_vars(2, "X,Y,Z").unwrap();
        PresentedRing::new(
            Ideal::parse(&s, &["X*Y", "X*Z"]).unwrap(),
            Some(vec![
                Ideal::parse(&s, &["X"]).unwrap(),
                Ideal::parse(&s, &["Y", "Z"]).unwrap(),
            ]),
        )
        .unwrap()
    }

    fn badintersect() -> PresentedRing {
        let s = ring_with_vars(2, "T,X,Y,Z").unwrap();
        let pp = Ideal::parse(&s, &P).unwrap();
        let q = Ideal::parse(&s, &["T", "X", "Y"]).unwrap();
        PresentedRing::new(pp.intersection(&q).unwrap(), Some(vec![pp, q])).unwrap()
    }

    #[test]
    fn decomposition_closures_of_zero() {
        let r = badcolon();
        let s = r.ambient().clone();
        let zero = Ideal::zero(&s);
        let ne = decomposition_closure(&r, &zero, ClosureMode::Ne).unwrap();
        assert!(ne.equals(&Ideal::parse(&s, &["X"]).unwrap()).unwrap());
        let tight = decomposition_closure(&r, &zero, ClosureMode::Tight).unwrap();
        assert!(tight.equals(r.defining_ideal()).unwrap());
        let m = Ideal::maximal(&s);
        for mode in [ClosureMode::Tight, ClosureMode::Ne] {
            assert!(decomposition_closure(&r, &m, mode).unwrap().equals(&m).unwrap());
        }
    }

    #[test]
    fn closedness_tests() {
        let r = badcolon();
        let s = r.ambient().clone();
        let zero = Ideal::zero(&s);
        let t = closedness_necessary_test(&r, &zero, ClosureMode::Tight).unwrap();
        assert_eq!(t.status, ClosureStatus::Inconclusive);
        let n = closedness_necessary_test(&r, &zero, ClosureMode::Ne).unwrap();
        assert_eq!(n.status, ClosureStatus::NotClosedCertified);
        assert_eq!(n.witness, Some(s.parse("X").unwrap()));

        let r = badintersect();
        let s = r.ambient().clone();
        let i = Ideal::parse(&s, &["Z", "X-T"]).unwrap();
        let t = closedness_necessary_test(&r, &i, ClosureMode::Tight).unwrap();
        assert_eq!(t.status, ClosureStatus::Inconclusive);
        assert!(t
            .dc_result
            .unwrap()
            .equals(&Ideal::parse(&s, &["Z", "X-T", "X*Y", "X^3", "Y^2"]).unwrap())
            .unwrap());
    }

    #[test]
    fn contain_verdicts() {
        let s = ring_with_vars(2, "X,Y1,Y2").unwrap();
        let r = PresentedRing::new(
            Ideal::parse(&s, &["X"]).unwrap().intersection(&Ideal::parse(&s, &["Y1", "Y2"]).unwrap()).unwrap(),
            Some(vec![Ideal::parse(&s, &["X"]).unwrap(), Ideal::parse(&s, &["Y1", "Y2"]).unwrap()]),
        )
        .unwrap();
        let v = theorem_contain_verdict(&r, &Ideal::parse(&s, &["Y1+X", "Y2"]).unwrap()).unwrap();
        assert!(v.is_certified());
        assert!(v.witness.is_none());
        assert!(v.hypotheses.iter().all(|h| h.holds));

        let r = badintersect();
        let s = r.ambient().clone();
        let v = theorem_contain_verdict(&r, &Ideal::parse(&s, &["Z", "X-T"]).unwrap()).unwrap();
        assert_eq!(v.status, ClosureStatus::Inconclusive);

        let pp = Ideal::parse(&s, &P).unwrap();
        let dom = PresentedRing::new(pp.clone(), Some(vec![pp])).unwrap();
        assert!(matches!(
            theorem_contain_verdict(&dom, &Ideal::parse(&s, &["T", "X"]).unwrap()),
            Err(Error::NotApplicable(_))
        ));
        let err = theorem_contain_verdict(&r, &Ideal::parse(&s, &["Z"]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn normalization_examples() {
        let s = ring_with_vars(2, "T,X,Y,Z").unwrap();
        let n = normalize_sop_generators(&s, 3, &s.parse_all(&["Z", "X-T"]).unwrap()).unwrap();
        assert_eq!(n.h, 1);
        assert_eq!(n.lead, s.parse("Z").unwrap());
        assert_eq!(n.rest, s.parse_all(&["X-T"]).unwrap());

        let s3 = ring_with_vars(3, "T,X,Y,Z").unwrap();
        let n = normalize_sop_generators(&s3, 3, &s3.parse_all(&["Z^2+T", "Z^3", "X"]).unwrap())
            .unwrap();
        assert_eq!(n.h, 2);
        assert_eq!(n.lead, s3.parse("Z^2+T").unwrap());
        assert_eq!(n.rest, s3.parse_all(&["-T*Z", "X"]).unwrap());

        let n = normalize_sop_generators(&s, 3, &s.parse_all(&["Z"]).unwrap()).unwrap();
        assert!(n.rest.is_empty());

        assert_eq!(
            normalize_sop_generators(&s, 3, &s.parse_all(&["T", "X*Z"]).unwrap()).unwrap_err(),
            Error::NoYLead
        );
        assert!(matches!(
            normalize_sop_generators(&s, 3, &s.parse_all(&["Z+Z^2"]).unwrap()),
            Err(Error::NonMonomialLead { .. })
        ));
    }

    #[test]
    fn structural_verdicts() {
        let r = badintersect();
        let s = r.ambient().clone();
        let i = Ideal::parse(&s, &["Z", "X-T"]).unwrap();
        let v = structural_verdict(&r, &i, StructuralOptions { p_unmixed: true, seed: 0 }).unwrap();
        assert!(v.is_certified());
        assert_eq!(v.citations, vec![CITE_NCMDVR.to_string()]);
        assert!(!v.hypotheses[0].holds);
        let v = structural_verdict(&r, &i, StructuralOptions::default()).unwrap();
        assert_eq!(v.status, ClosureStatus::Inconclusive);

        // S/P a CM hypersurface, P + Q not maximal
        let s = ring_with_vars(2, "X1,X2,Y").unwrap();
        let p = Ideal::parse(&s, &["Y^2+X1^3"]).unwrap();
        let q = Ideal::parse(&s, &["X1", "X2"]).unwrap();
        let r = PresentedRing::new(p.intersection(&q).unwrap(), Some(vec![p, q])).unwrap();
        let i = Ideal::parse(&s, &["Y", "X2"]).unwrap();
        let v = structural_verdict(&r, &i, StructuralOptions::default()).unwrap();
        assert!(v.is_certified());
        assert_eq!(v.citations, vec![CITE_CMDVR.to_string()]);
        assert_eq!(theorem_contain_verdict(&r, &i).unwrap().status, ClosureStatus::Inconclusive);

        let s = ring_with_vars(2, "X,Y").unwrap();
        let r = PresentedRing::new(
            Ideal::parse(&s, &["X*Y"]).unwrap(),
            Some(vec![Ideal::parse(&s, &["Y"]).unwrap(), Ideal::parse(&s, &["X"]).unwrap()]),
        )
        .unwrap();
        assert!(matches!(
            structural_verdict(&r, &Ideal::parse(&s, &["X+Y"]).unwrap(), StructuralOptions::default()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn frobenius_checks() {
        let r = badcolon();
        let s = r.ambient().clone();
        let zero = Ideal::zero(&s);
        let x = s.parse("X").unwrap();
        let ok = bounded_frobenius_check(&r, &zero, &x, &s.parse("Y").unwrap(), 0, 5).unwrap();
        assert_eq!(ok.verdict, FrobeniusVerdict::Supported);
        assert_eq!(ok.c_in_r_bullet, Some(true));
        assert_eq!(ok.c_in_r_circ, Some(false));
        let bad = bounded_frobenius_check(&r, &zero, &x, &s.parse("X+Y").unwrap(), 0, 5).unwrap();
        assert_eq!(bad.verdict, FrobeniusVerdict::RefutedForC);
        assert!(bad.checks.iter().all(|c| !c.1));
        assert_eq!(bad.c_in_r_circ, Some(true));
        let i = Ideal::parse(&s, &["X"]).unwrap();
        let triv = bounded_frobenius_check(&r, &i, &x, &Poly::one(&s), 0, 3).unwrap();
        assert_eq!(triv.verdict, FrobeniusVerdict::Supported);
        assert_eq!(
            bounded_frobenius_check(&r, &i, &x, &Poly::zero(&s), 0, 3).unwrap_err(),
            Error::InvalidMultiplier
        );
    }

    #[test]
    fn ne_test_assembly() {
        let r = badcolon();
        let s = r.ambient().clone();
        let d = construct_ne_test_data(&r, None, DEFAULT_NILPOTENCY_CAP).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].2, s.parse("Y").unwrap());
        assert_eq!(d.qprime_exponent, 0);
        assert_eq!(d.c, s.parse("Y").unwrap());
        assert!(d.c_in_r_bullet);

        let pp = Ideal::parse(&s, &["X"]).unwrap();
        let dom = PresentedRing::new(pp.clone(), Some(vec![pp])).unwrap();
        let d = construct_ne_test_data(&dom, None, DEFAULT_NILPOTENCY_CAP).unwrap();
        assert_eq!(d.components[0].2, Poly::one(&s));
        assert_eq!(d.qprime_exponent, 0);

        let nonreduced = PresentedRing::new(
            Ideal::parse(&s, &["X^2", "X*Y"]).unwrap(),
            Some(vec![Ideal::parse(&s, &["X"]).unwrap()]),
        )
        .unwrap();
        let d = construct_ne_test_data(&nonreduced, None, DEFAULT_NILPOTENCY_CAP).unwrap();
        assert_eq!(d.qprime_exponent, 1);
        assert_eq!(
            construct_ne_test_data(&nonreduced, None, 0).unwrap_err(),
            Error::NilpotencyBound(0)
        );
    }

    #[test]
    fn capture_reports() {
        let r = badcolon();
        let s = r.ambient().clone();
        let rep = colon_capture_report(&r, &s.parse_all(&["Y", "X-Z"]).unwrap()).unwrap();
        let k0 = &rep.steps[0];
        assert!(k0.colon.equals(&Ideal::parse(&s, &["X"]).unwrap()).unwrap());
        assert!(!k0.regular);
        assert!(!k0.tight_captures);
        assert!(k0.ne_captures);

        let s = ring_with_vars(3, "x,y,z").unwrap();
        let poly = PresentedRing::polynomial(&s).unwrap();
        let rep = colon_capture_report(&poly, &s.parse_all(&["x", "y", "z"]).unwrap()).unwrap();
        assert!(rep.steps.iter().all(|st| st.regular && st.colon.equals(&st.base).unwrap()));

        let r = badintersect();
        let s = r.ambient().clone();
        let rep = colon_capture_report(&r, &s.parse_all(&["Z", "X-T"]).unwrap()).unwrap();
        // Z avoids both primes, so J : Z = J
        assert!(rep.steps[0].colon.equals(r.defining_ideal()).unwrap());
        assert!(rep.steps[0].regular);
    }
}
