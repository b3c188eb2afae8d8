//! Seeded randomized property suites.
//!
//! Inputs stay small: at most four variables, degree at most 3, p ∈ {2, 3}.
//! Where possible the expected answer comes from an independent oracle
//! (lcm/divisibility arithmetic on monomial ideals) instead of from the
//! Gröbner machinery under test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closure::{decomposition_closure, ClosureMode};
use crate::error::Result;
use crate::groebner::{groebner_basis, is_reduced, normal_form, s_polynomial};
use crate::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, RingRef};
use crate::presented::PresentedRing;

pub const DEFAULT_CASES: usize = 200;

pub const SUITES: [&str; 7] = [
    "buchberger",
    "monomial",
    "bracket",
    "dc",
    "regseq",
    "distribute",
    "dimension",
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: DEFAULT_CASES,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Case = fn(&mut ChaCha8Rng, &mut Vec<String>) -> Result<Option<String>>;

fn case_fn(name: &str) -> Option<Case> {
    Some(match name {
        "buchberger" => buchberger_case,
        "monomial" => monomial_case,
        "bracket" => bracket_case,
        "dc" => dc_case,
        "regseq" => regseq_case,
        "distribute" => distribute_case,
        "dimension" => dimension_case,
        _ => return None,
    })
}

/// Runs one suite. Each suite draws from its own stream, derived from the seed
/// and the suite's position in [`SUITES`].
pub fn run_suite(name: &str, cfg: SuiteConfig) -> Result<SuiteOutcome> {
    let index = SUITES
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| crate::Error::Precondition(format!("unknown suite `{name}`")))?;
    let case = case_fn(name).expect("listed suite");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64 + 1);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for k in 0..cfg.cases {
        if let Some(msg) = case(&mut rng, &mut notes)? {
            failures.push(format!("case {k}: {msg}"));
        }
    }
    let mut summary = Vec::new();
    if name == "distribute" {
        let held = notes.iter().filter(|n| n.as_str() == "hypothesis").count();
        summary.push(format!("hypothesis held in {held} of {} cases", cfg.cases));
    }
    Ok(SuiteOutcome {
        name: name.to_string(),
        cases: cfg.cases,
        failures,
        notes: summary,
    })
}

pub fn run_all(cfg: SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    SUITES.iter().map(|s| run_suite(s, cfg)).collect()
}

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn random_ring(rng: &mut ChaCha8Rng, min_vars: usize) -> RingRef {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let n = rng.gen_range(min_vars..=4);
    let order = if rng.gen_bool(0.5) {
        MonomialOrder::GrevLex
    } else {
        MonomialOrder::Lex
    };
    Ring::new(p, &NAMES[..n], order).expect("valid ring")
}

/// Exponent vector of total degree in `lo..=hi`, supported on `vars`.
fn random_monomial(rng: &mut ChaCha8Rng, n: usize, vars: &[usize], lo: u32, hi: u32) -> Monomial {
    let mut e = vec![0u32; n];
    let d = rng.gen_range(lo..=hi);
    for _ in 0..d {
        e[*vars.choose(rng).unwrap()] += 1;
    }
    Monomial::new(e)
}

fn random_poly_in(rng: &mut ChaCha8Rng, ring: &RingRef, vars: &[usize]) -> Poly {
    let n = ring.nvars();
    let p = ring.characteristic() as i64;
    loop {
        let terms = rng.gen_range(1..=3);
        let mut out = Vec::with_capacity(terms);
        for t in 0..terms {
            let lo = if t == 0 { 1 } else { 0 };
            out.push((rng.gen_range(1..p), random_monomial(rng, n, vars, lo, 3)));
        }
        let f = Poly::from_terms(ring, out).expect("valid terms");
        // repeated monomials can cancel
        if !f.is_zero() {
            return f;
        }
    }
}

fn all_vars(ring: &RingRef) -> Vec<usize> {
    (0..ring.nvars()).collect()
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef) -> Poly {
    let vars = all_vars(ring);
    random_poly_in(rng, ring, &vars)
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &RingRef, max_gens: usize) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_poly(rng, ring)).collect();
    Ideal::new(ring, gens).expect("same ring")
}

fn random_monomials(rng: &mut ChaCha8Rng, n: usize, vars: &[usize], max_gens: usize) -> Vec<Monomial> {
    let k = rng.gen_range(1..=max_gens);
    (0..k).map(|_| random_monomial(rng, n, vars, 1, 3)).collect()
}

fn monomial_ideal(ring: &RingRef, monos: &[Monomial]) -> Ideal {
    let gens = monos.iter().map(|m| Poly::monomial(ring, 1, m.clone())).collect();
    Ideal::new(ring, gens).expect("same ring")
}

// ---- monomial-ideal oracle -------------------------------------------------

/// Minimal generators: drop every monomial divisible by another one.
fn minimalize(monos: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = monos;
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn oracle_intersection(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut all = Vec::new();
    for x in a {
        for y in b {
            all.push(x.lcm(y));
        }
    }
    minimalize(all)
}

fn oracle_colon(a: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    minimalize(a.iter().map(|x| x.div(&x.gcd(m))).collect())
}

fn oracle_sum(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimalize(a.iter().chain(b).cloned().collect())
}

/// The reduced basis of a monomial ideal is its set of minimal generators.
fn matches_oracle(i: &Ideal, oracle: &[Monomial]) -> Result<bool> {
    let basis = i.basis()?;
    if basis.len() != oracle.len() {
        return Ok(false);
    }
    Ok(basis.iter().all(|g| {
        g.len() == 1 && g.leading_coeff() == Some(1) && oracle.contains(g.leading_monomial().unwrap())
    }))
}

fn show(monos: &[Monomial]) -> String {
    let parts: Vec<String> = monos.iter().map(|m| format!("{:?}", m.exponents())).collect();
    format!("[{}]", parts.join(" "))
}

// ---- suites ----------------------------------------------------------------

fn buchberger_case(rng: &mut ChaCha8Rng, _: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 2);
    let i = random_ideal(rng, &ring, 4);
    let gb = groebner_basis(i.generators(), &ring)?;
    let g = gb.elements();
    if !is_reduced(g) {
        return Ok(Some(format!("basis of {i} is not reduced")));
    }
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            let s = s_polynomial(&g[a], &g[b])?;
            let r = normal_form(&s, g)?;
            if !r.is_zero() {
                return Ok(Some(format!("S({}, {}) reduces to {r} in basis of {i}", g[a], g[b])));
            }
        }
    }
    for f in i.generators() {
        if !normal_form(f, g)?.is_zero() {
            return Ok(Some(format!("generator {f} of {i} does not reduce to 0")));
        }
    }
    let again = groebner_basis(g, &ring)?;
    if again.elements() != g {
        return Ok(Some(format!("basis of {i} is not a fixed point")));
    }
    Ok(None)
}

fn monomial_case(rng: &mut ChaCha8Rng, _: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 2);
    let n = ring.nvars();
    let vars = all_vars(&ring);
    let a = random_monomials(rng, n, &vars, 3);
    let b = random_monomials(rng, n, &vars, 3);
    let ia = monomial_ideal(&ring, &a);
    let ib = monomial_ideal(&ring, &b);

    let meet = ia.intersection(&ib)?;
    let expect = oracle_intersection(&minimalize(a.clone()), &minimalize(b.clone()));
    if !matches_oracle(&meet, &expect)? {
        return Ok(Some(format!("{} ∩ {}: got {meet}, oracle {}", show(&a), show(&b), show(&expect))));
    }

    let m = random_monomial(rng, n, &vars, 1, 2);
    let colon = ia.colon_poly(&Poly::monomial(&ring, 1, m.clone()))?;
    let expect = oracle_colon(&a, &m);
    if !matches_oracle(&colon, &expect)? {
        return Ok(Some(format!("{} : {:?}: got {colon}, oracle {}", show(&a), m.exponents(), show(&expect))));
    }

    // colon by an ideal is the intersection of the colons by its generators
    let colon = ia.colon(&ib)?;
    let mut expect = vec![Monomial::one(n)];
    for y in &b {
        expect = oracle_intersection(&expect, &oracle_colon(&a, y));
    }
    if !matches_oracle(&colon, &expect)? {
        return Ok(Some(format!("{} : {}: got {colon}, oracle {}", show(&a), show(&b), show(&expect))));
    }

    // g·(I : g) ⊆ I ⊆ I : g for a general g
    let i = random_ideal(rng, &ring, 3);
    let g = random_poly(rng, &ring);
    let c = i.colon_poly(&g)?;
    if !i.is_subset_of(&c)? || !c.scale_by(&g)?.is_subset_of(&i)? {
        return Ok(Some(format!("colon sandwich fails for {i} : {g}")));
    }
    Ok(None)
}

fn bracket_case(rng: &mut ChaCha8Rng, _: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 2);
    let i = random_ideal(rng, &ring, 3);
    if !i.bracket_power(0)?.equals(&i)? {
        return Ok(Some(format!("I^[1] != I for {i}")));
    }
    let b1 = i.bracket_power(1)?;
    if !b1.is_subset_of(&i)? {
        return Ok(Some(format!("I^[p] not inside I for {i}")));
    }
    if !b1.bracket_power(1)?.equals(&i.bracket_power(2)?)? {
        return Ok(Some(format!("(I^[p])^[p] != I^[p^2] for {i}")));
    }
    // another generating set: the reduced basis plus a combination of generators
    let mut gens = i.basis()?;
    let r = random_poly(rng, &ring);
    let combo = i.generators()[0].try_mul(&r)?.try_add(i.generators().last().unwrap())?;
    gens.push(combo);
    gens.reverse();
    let other = Ideal::new(&ring, gens)?;
    if !other.bracket_power(1)?.equals(&b1)? {
        return Ok(Some(format!("bracket power depends on the generators of {i}")));
    }
    Ok(None)
}

/// Pairwise incomparable nonempty proper subsets of the variables.
fn random_antichain(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<usize>> {
    loop {
        let k = rng.gen_range(2..=3);
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for _ in 0..k {
            let size = rng.gen_range(1..n);
            let mut vars: Vec<usize> = (0..n).collect();
            vars.shuffle(rng);
            let mut s = vars[..size].to_vec();
            s.sort_unstable();
            sets.push(s);
        }
        let incomparable = sets.iter().enumerate().all(|(i, a)| {
            sets.iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.iter().all(|v| b.contains(v)))
        });
        if incomparable {
            return sets;
        }
    }
}

fn dc_case(rng: &mut ChaCha8Rng, _: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 3);
    let n = ring.nvars();
    let vars = all_vars(&ring);
    let sets = random_antichain(rng, n);
    let prime_monos: Vec<Vec<Monomial>> = sets
        .iter()
        .map(|s| s.iter().map(|&v| Monomial::var(n, v, 1)).collect())
        .collect();
    let primes: Vec<Ideal> = prime_monos.iter().map(|m| monomial_ideal(&ring, m)).collect();
    let mut j_monos = vec![Monomial::one(n)];
    for pm in &prime_monos {
        j_monos = oracle_intersection(&j_monos, pm);
    }
    let r = PresentedRing::new(monomial_ideal(&ring, &j_monos), Some(primes))?;
    let max_dim = r.dim();

    let a = random_monomials(rng, n, &vars, 3);
    let i = monomial_ideal(&ring, &a);
    let extra = random_monomial(rng, n, &vars, 1, 3);
    let bigger = i.add_poly(&Poly::monomial(&ring, 1, extra))?;
    for mode in [ClosureMode::Tight, ClosureMode::Ne] {
        let dc = decomposition_closure(&r, &i, mode)?;
        let mut expect: Option<Vec<Monomial>> = None;
        for (s, pm) in sets.iter().zip(&prime_monos) {
            if mode == ClosureMode::Ne && (n - s.len()) as i64 != max_dim {
                continue;
            }
            let part = oracle_sum(&oracle_sum(&a, &j_monos), pm);
            expect = Some(match expect {
                None => part,
                Some(acc) => oracle_intersection(&acc, &part),
            });
            if !dc.is_subset_of(&r.extend(i.generators())?.sum(&monomial_ideal(&ring, pm))?)? {
                return Ok(Some(format!("dc not inside I + J + P for I = {i}")));
            }
        }
        let expect = expect.expect("some prime participates");
        if !matches_oracle(&dc, &expect)? {
            return Ok(Some(format!("{} dc of {i}: got {dc}, oracle {}", mode.name(), show(&expect))));
        }
        if !decomposition_closure(&r, &dc, mode)?.equals(&dc)? {
            return Ok(Some(format!("{} dc not idempotent on {i}", mode.name())));
        }
        if !dc.is_subset_of(&decomposition_closure(&r, &bigger, mode)?)? {
            return Ok(Some(format!("{} dc not monotone on {i} ⊆ {bigger}", mode.name())));
        }
    }
    Ok(None)
}

fn regseq_case(rng: &mut ChaCha8Rng, _: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 2);
    let n = ring.nvars();
    let k = rng.gen_range(1..n);
    let front: Vec<usize> = (0..k).collect();
    let j = if rng.gen_bool(0.5) {
        let monos = random_monomials(rng, n, &front, 3);
        monomial_ideal(&ring, &monos)
    } else {
        let gens = (0..rng.gen_range(1..=2))
            .map(|_| random_poly_in(rng, &ring, &front))
            .collect();
        Ideal::new(&ring, gens)?
    };
    let i = Ideal::new(&ring, (k..n).map(|v| ring.gen(v)).collect())?;
    if !i.intersection(&j)?.equals(&i.product(&j)?)? {
        return Ok(Some(format!("{i} ∩ {j} != {i}·{j}")));
    }
    Ok(None)
}

fn distribute_case(rng: &mut ChaCha8Rng, notes: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 2);
    let n = ring.nvars();
    let vars = all_vars(&ring);
    let pick = |rng: &mut ChaCha8Rng| -> Ideal {
        if rng.gen_bool(0.5) {
            let monos = random_monomials(rng, n, &vars, 2);
            monomial_ideal(&ring, &monos)
        } else {
            random_ideal(rng, &ring, 2)
        }
    };
    let i = pick(rng);
    let p = pick(rng);
    let q = pick(rng);
    let lhs = i.sum(&p.intersection(&q)?)?;
    let rhs = i.sum(&p)?.intersection(&i.sum(&q)?)?;
    if !lhs.equals(&rhs)? {
        return Ok(None);
    }
    notes.push("hypothesis".into());
    let left = i.intersection(&p.sum(&q)?)?;
    let right = i.intersection(&p)?.sum(&i.intersection(&q)?)?;
    if !left.equals(&right)? {
        return Ok(Some(format!("I = {i}, P = {p}, Q = {q}")));
    }
    Ok(None)
}

fn dimension_case(rng: &mut ChaCha8Rng, _: &mut Vec<String>) -> Result<Option<String>> {
    let ring = random_ring(rng, 2);
    let i = random_ideal(rng, &ring, 3);
    let lex = i.with_order(MonomialOrder::Lex)?.dimension()?;
    let grevlex = i.with_order(MonomialOrder::GrevLex)?.dimension()?;
    if lex != grevlex {
        return Ok(Some(format!("dim {i}: lex {lex}, grevlex {grevlex}")));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_basics() {
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        assert_eq!(minimalize(vec![m(&[2, 0]), m(&[1, 0]), m(&[0, 1])]), vec![m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(oracle_intersection(&[m(&[1, 0])], &[m(&[0, 1])]), vec![m(&[1, 1])]);
        assert_eq!(oracle_colon(&[m(&[2, 1])], &m(&[1, 0])), vec![m(&[1, 1])]);
    }

    #[test]
    fn suites_are_deterministic() {
        let cfg = SuiteConfig { seed: 7, cases: 10 };
        for name in SUITES {
            let a = run_suite(name, cfg).unwrap();
            let b = run_suite(name, cfg).unwrap();
            assert!(a.passed(), "{name}: {:?}", a.failures);
            assert_eq!(a.failures, b.failures);
            assert_eq!(a.notes, b.notes);
        }
    }
}
