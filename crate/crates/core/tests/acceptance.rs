//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line.

use std::process::Command;

use icalc::closure::{
    bounded_frobenius_check, colon_capture_report, construct_ne_test_data, decomposition_closure,
    structural_verdict, theorem_contain_verdict, ClosureMode, ClosureStatus, FrobeniusVerdict,
    StructuralOptions, CITE_NCMDVR, DEFAULT_NILPOTENCY_CAP,
};
use icalc::ideal::ring_map_kernel;
use icalc::poly::ring_with_vars;
use icalc::presented::CmVerdict;
use icalc::suites::{run_all, SuiteConfig};
use icalc::{Ideal, PresentedRing, RingRef};

type Outcome = Result<(), String>;

const P: [&str; 4] = ["T*Y-X*Z", "T^2*X-Z^2", "T*X^2-Y*Z", "X^3-Y^2"];

fn ensure(cond: bool, what: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn ideal(s: &RingRef, gens: &[&str]) -> Result<Ideal, String> {
    e(Ideal::parse(s, gens))
}

fn badintersect(p: u64) -> Result<(RingRef, Ideal, Ideal, PresentedRing), String> {
    let s = e(ring_with_vars(p, "T,X,Y,Z"))?;
    let pp = ideal(&s, &P)?;
    let q = ideal(&s, &["T", "X", "Y"])?;
    let r = e(PresentedRing::new(e(pp.intersection(&q))?, Some(vec![pp.clone(), q.clone()])))?;
    Ok((s, pp, q, r))
}

fn badcolon() -> Result<(RingRef, PresentedRing), String> {
    let s = e(ring_with_vars(2, "X,Y,Z"))?;
    let r = e(PresentedRing::new(
        ideal(&s, &["X*Y", "X*Z"])?,
        Some(vec![ideal(&s, &["X"])?, ideal(&s, &["Y", "Z"])?]),
    ))?;
    Ok((s, r))
}

fn c1_intersection() -> Outcome {
    for p in [2, 3] {
        let (s, pp, q, _) = badintersect(p)?;
        let printed = ideal(&s, &["T*Y-X*Z", "T*X^2-Y*Z", "X^3-Y^2", "T^3*X-T*Z^2"])?;
        ensure(e(e(pp.intersection(&q))?.equals(&printed))?, &format!("P ∩ Q differs at p = {p}"))?;
    }
    Ok(())
}

fn c2_closure_identity() -> Outcome {
    let (s, pp, q, _) = badintersect(2)?;
    let i = ideal(&s, &["Z", "X-T"])?;
    let left = e(i.sum(&e(pp.intersection(&q))?))?;
    let right = e(e(i.sum(&pp))?.intersection(&e(i.sum(&q))?))?;
    let printed = ideal(&s, &["Z", "X-T", "X*Y", "X^3", "Y^2"])?;
    ensure(e(left.equals(&right))?, "I + (P ∩ Q) != (I + P) ∩ (I + Q)")?;
    ensure(e(left.equals(&printed))?, "I + (P ∩ Q) != (Z, X-T, XY, X^3, Y^2)")?;
    ensure(e(e(i.sum(&q))?.equals(&Ideal::maximal(&s)))?, "I + Q != (T, X, Y, Z)")
}

fn c3_kernel() -> Outcome {
    let (s, pp, _, _) = badintersect(2)?;
    // the target copy of T is renamed T1 since source and target names must differ
    let target = e(ring_with_vars(2, "T1,U"))?;
    let images = e(target.parse_all(&["T1", "U^2", "U^3", "U*T1"]))?;
    let k = e(ring_map_kernel(&s, &target, &images))?;
    ensure(e(k.equals(&pp))?, &format!("kernel is {k}"))
}

fn c4_cm_detection() -> Outcome {
    let (_, pp, q, _) = badintersect(2)?;
    let sp = e(PresentedRing::new(pp, None))?;
    let probe = e(sp.cm_probe(None, 0))?;
    ensure(probe.verdict == CmVerdict::NotCm, "S/P not reported notCM")?;
    ensure(probe.failing_step.is_some(), "no failing colon step for S/P")?;
    let sq = e(PresentedRing::new(q, None))?;
    ensure(e(sq.cm_probe(None, 0))?.verdict == CmVerdict::Cm, "S/Q not reported CM")
}

fn c5_structural() -> Outcome {
    let (s, _, _, r) = badintersect(2)?;
    let i = ideal(&s, &["Z", "X-T"])?;
    let v = e(structural_verdict(&r, &i, StructuralOptions { p_unmixed: true, seed: 0 }))?;
    let cm = v.hypotheses.iter().find(|h| h.name == "S/P Cohen-Macaulay");
    ensure(cm.map(|h| !h.holds) == Some(true), "CMDVR hypothesis did not fail")?;
    let dim = v.hypotheses.iter().find(|h| h.name == "dim S/P >= 2");
    ensure(dim.map(|h| h.holds) == Some(true), "dim S/P >= 2 not established")?;
    ensure(v.citations == vec![CITE_NCMDVR.to_string()], "NCMDVR not cited")?;
    ensure(v.status == ClosureStatus::NotClosedCertified, "not certified")
}

fn c6_badcolon() -> Outcome {
    let (s, r) = badcolon()?;
    let sop = e(s.parse_all(&["Y", "X-Z"]))?;
    ensure(e(r.is_system_of_parameters(&sop))?.is_sop, "(y, x - z) is not an s.o.p.")?;
    let colon = e(r.defining_ideal().colon_poly(&e(s.parse("Y"))?))?;
    ensure(e(colon.equals(&ideal(&s, &["X"])?))?, "0 :_R y != (x)")?;
    let zero = Ideal::zero(&s);
    let tight = e(decomposition_closure(&r, &zero, ClosureMode::Tight))?;
    ensure(e(tight.equals(r.defining_ideal()))?, "dc_tight(0) != 0")?;
    let ne = e(decomposition_closure(&r, &zero, ClosureMode::Ne))?;
    ensure(e(ne.equals(&ideal(&s, &["X"])?))?, "dc_ne(0) != (x)")?;
    let cap = e(colon_capture_report(&r, &sop))?;
    ensure(!cap.steps[0].tight_captures, "tight capture did not fail at k = 0")?;
    ensure(cap.steps[0].ne_captures, "NE capture did not hold at k = 0")?;
    let x = e(s.parse("X"))?;
    let good = e(bounded_frobenius_check(&r, &zero, &x, &e(s.parse("Y"))?, 0, 5))?;
    ensure(good.verdict == FrobeniusVerdict::Supported, "c = y not supported")?;
    let bad = e(bounded_frobenius_check(&r, &zero, &x, &e(s.parse("X+Y"))?, 0, 5))?;
    ensure(bad.verdict == FrobeniusVerdict::RefutedForC, "c = x + y not refuted")?;
    ensure(bad.checks.iter().all(|c| !c.1), "c = x + y holds at some e")
}

fn c7_contain() -> Outcome {
    let s = e(ring_with_vars(2, "X,Y1,Y2"))?;
    let pp = ideal(&s, &["X"])?;
    let q = ideal(&s, &["Y1", "Y2"])?;
    let r = e(PresentedRing::new(e(pp.intersection(&q))?, Some(vec![pp, q])))?;
    let c = e(r.classify())?;
    ensure(c.dims == vec![2, 1], &format!("dims {:?}", c.dims))?;
    ensure(e(e(c.p.sum(&c.q))?.equals(&Ideal::maximal(&s)))?, "P + Q != m")?;
    let v = e(theorem_contain_verdict(&r, &ideal(&s, &["Y1+X", "Y2"])?))?;
    ensure(v.status == ClosureStatus::NotClosedCertified, "not certified")
}

fn c8_ne_test() -> Outcome {
    let (s, r) = badcolon()?;
    let d = e(construct_ne_test_data(&r, None, DEFAULT_NILPOTENCY_CAP))?;
    let y = e(s.parse("Y"))?;
    ensure(d.components.len() == 1 && d.components[0].2 == y, "d_1 != y")?;
    ensure(d.qprime_exponent == 0, "q' != 1")?;
    ensure(d.c == y, &format!("c = {}", d.c))?;
    ensure(d.c_in_r_bullet, "c not in R•")?;
    // y lies in (y, z) and not in (x): both monomial, decided by divisibility
    let yz = ideal(&s, &["Y", "Z"])?;
    ensure(e(yz.contains(&y))? && !e(ideal(&s, &["X"])?.contains(&y))?, "d_1 membership")
}

fn c9_suites() -> Outcome {
    let outcomes = e(run_all(SuiteConfig::default()))?;
    ensure(outcomes.len() == 7, "expected seven suites")?;
    for o in outcomes {
        ensure(o.cases >= 200, &format!("{} ran {} cases", o.name, o.cases))?;
        if !o.passed() {
            return Err(format!("{}: {}", o.name, o.failures.join("; ")));
        }
    }
    Ok(())
}

fn c10_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_icalc"))
            .args(["repro", "badintersect", "--json"])
            .output()
            .map_err(|x| x.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.success() && b.status.success(), "repro exited nonzero")?;
    ensure(!a.stdout.is_empty(), "empty output")?;
    ensure(a.stdout == b.stdout, "outputs differ")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 badintersect P ∩ Q at p = 2, 3", c1_intersection),
        ("2 badintersect I + (P ∩ Q) = (I + P) ∩ (I + Q)", c2_closure_identity),
        ("3 presentation kernel equals P", c3_kernel),
        ("4 S/P not CM, S/Q CM", c4_cm_detection),
        ("5 structural verdict via NCMDVR", c5_structural),
        ("6 badcolon suite", c6_badcolon),
        ("7 contain demo", c7_contain),
        ("8 NE test element on badcolon", c8_ne_test),
        ("9 property suites", c9_suites),
        ("10 repro badintersect JSON is byte-stable", c10_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
