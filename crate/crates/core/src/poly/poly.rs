use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, Ring, RingRef};
use crate::error::{Error, Result};

/// Sparse polynomial over F_p. Terms are nonzero and strictly descending in the
/// ring's monomial order; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    terms: Vec<(u32, Monomial)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        Self::monomial(ring, ring.field().reduce(c), Monomial::one(ring.nvars()))
    }

    pub fn monomial(ring: &RingRef, coeff: u32, mono: Monomial) -> Self {
        assert_eq!(mono.len(), ring.nvars(), "monomial length");
        let coeff = coeff % ring.characteristic();
        let terms = if coeff == 0 { Vec::new() } else { vec![(coeff, mono)] };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs: sorts,
    /// combines duplicates and drops zeros.
    pub fn from_terms(ring: &RingRef, terms: Vec<(i64, Monomial)>) -> Result<Self> {
        let field = ring.field();
        let mut reduced = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if m.len() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    found: m.len(),
                });
            }
            reduced.push((field.reduce(c), m));
        }
        Ok(Self::normalize(ring, reduced))
    }

    fn normalize(ring: &RingRef, mut terms: Vec<(u32, Monomial)>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(last.0, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| t.0 != 0);
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    /// Coefficient of `mono`, zero if absent.
    pub fn coeff(&self, mono: &Monomial) -> u32 {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|t| order.cmp(mono, &t.1))
            .map(|i| self.terms[i].0)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_weighted_homogeneous(&vec![1; self.ring.nvars()])
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.1.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    fn merge(&self, other: &Poly, negate_other: bool) -> Poly {
        let order = self.ring.order();
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let oc = |c: u32| if negate_other { field.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.1, &b.1) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((oc(b.0), b.1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a.0, oc(b.0));
                    if c != 0 {
                        out.push((c, a.1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| (oc(b.0), b.1.clone())));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                terms.push((field.mul(*a, *b), ma.mul(mb)?));
            }
        }
        Ok(Self::normalize(&self.ring, terms))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (field.mul(*a, c), m.clone())).collect(),
        }
    }

    /// `c * mono * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: u32, mono: &Monomial) -> Result<Poly> {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Ok(Poly::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| Ok((field.mul(*a, c), m.mul(mono)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, n: u32) -> Result<Poly> {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// f^{p^e}: every exponent is scaled by p^e; coefficients are fixed by Frobenius
    /// on F_p, and the scaled monomials keep their relative order.
    pub fn frobenius_power(&self, e: u32) -> Result<Poly> {
        let p = self.ring.characteristic();
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::Capacity(format!("{p}^{e} overflows")))?;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| Ok((*c, m.scale(q)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Re-expresses the polynomial in `target`, sending variable i to variable
    /// `var_map[i]` of `target`.
    pub fn embed(&self, target: &RingRef, var_map: &[usize]) -> Result<Poly> {
        if var_map.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: var_map.len(),
            });
        }
        if target.characteristic() != self.ring.characteristic() {
            return Err(Error::IncompatibleRing);
        }
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (*c, Monomial::new(e))
            })
            .collect();
        Ok(Self::normalize(target, terms))
    }

    /// Same variables, possibly another order.
    pub fn reorder(&self, target: &RingRef) -> Result<Poly> {
        if target.vars() != self.ring.vars() {
            return Err(Error::IncompatibleRing);
        }
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(target, &map)
    }

    /// Evaluates the polynomial with variable i replaced by `images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ImageCount {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        let mut acc = Poly::zero(&target);
        for (c, m) in &self.terms {
            let mut t = Poly::constant(&target, *c as i64);
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    t = t.try_mul(&images[i].pow(x)?)?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Whether any term involves one of the given variables.
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .any(|(_, m)| vars.iter().any(|&v| m.exponents()[v] > 0))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// Canonical text: descending terms, coefficients in [1, p), joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if *c != 1 {
                    write!(f, "{c}*")?;
                }
                write_monomial(f, self.ring.vars(), m)?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            /// Panics when the operands live in different rings.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$call(rhs).expect("polynomial operands in different rings")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(self.ring.characteristic() - 1)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Convenience for building small rings in tests and examples.
pub fn ring_with_vars(p: u64, vars: &str) -> Result<RingRef> {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ring::new(p, &names, super::MonomialOrder::GrevLex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use proptest::prelude::*;

    fn r(p: u64, vars: &str) -> RingRef {
        ring_with_vars(p, vars).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let s = r(5, "x,y");
        let x = s.var("x").unwrap();
        let y = s.var("y").unwrap();
        assert_eq!((&x + &y) + (&x - &y), x.scale(2));
        assert_eq!((&x + &y) * (&x - &y), s.parse("x^2 - y^2").unwrap());
        assert!((&x * &Poly::zero(&s)).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = r(5, "x,y");
        let b = r(7, "x,y");
        let err = a.var("x").unwrap().try_add(&b.var("x").unwrap()).unwrap_err();
        assert_eq!(err, Error::IncompatibleRing);
    }

    #[test]
    fn canonical_printing() {
        let s = r(5, "X,Y,Z");
        let f = s.parse("2*X^3*Y - Z + 1").unwrap();
        assert_eq!(f.to_string(), "2*X^3*Y + 4*Z + 1");
        assert_eq!(Poly::zero(&s).to_string(), "0");
    }

    #[test]
    fn frobenius_examples() {
        let s = r(2, "X,Y");
        let f = s.parse("X+Y").unwrap();
        assert_eq!(f.frobenius_power(1).unwrap(), s.parse("X^2+Y^2").unwrap());
        assert_eq!(f.frobenius_power(0).unwrap(), f);
        let t = r(3, "X,Z");
        let g = t.parse("2*X+Z").unwrap();
        assert_eq!(g.frobenius_power(1).unwrap(), g.pow(3).unwrap());
        assert_eq!(g.frobenius_power(1).unwrap(), t.parse("2*X^3+Z^3").unwrap());
    }

    #[test]
    fn frobenius_overflow_is_capacity_error() {
        let s = r(3, "X");
        let f = s.parse("X").unwrap();
        assert!(matches!(f.frobenius_power(40), Err(Error::Capacity(_))));
        let g = s.parse("X^4000000").unwrap();
        assert!(matches!(g.frobenius_power(19), Err(Error::Capacity(_))));
    }

    #[test]
    fn substitute_and_embed() {
        let src = r(2, "T,X");
        let tgt = r(2, "U,S");
        let u = tgt.var("U").unwrap();
        let s = tgt.var("S").unwrap();
        let f = src.parse("T*X + X^2").unwrap();
        let img = f.substitute(&[s.clone(), u.pow(2).unwrap()]).unwrap();
        assert_eq!(img, tgt.parse("S*U^2 + U^4").unwrap());
        let lex = src.with_order(MonomialOrder::Lex);
        assert_eq!(f.reorder(&lex).unwrap().to_string(), "T*X + X^2");
    }

    fn arb_poly(ring: RingRef) -> impl Strategy<Value = Poly> {
        let n = ring.nvars();
        proptest::collection::vec((0i64..5, proptest::collection::vec(0u32..3, n)), 0..5).prop_map(
            move |ts| {
                Poly::from_terms(&ring, ts.into_iter().map(|(c, e)| (c, Monomial::new(e))).collect())
                    .unwrap()
            },
        )
    }

    fn triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
        prop_oneof![Just(2u64), Just(3), Just(5)].prop_flat_map(|p| {
            let s = r(p, "x,y,z");
            (arb_poly(s.clone()), arb_poly(s.clone()), arb_poly(s))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms((f, g, h) in triple()) {
            prop_assert_eq!((&f * &g) * h.clone(), &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), (&f * &g) + (&f * &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert!((&f - &f).is_zero());
            prop_assert_eq!(&f + &(-&f), Poly::zero(f.ring()));
        }

        #[test]
        fn frobenius_is_repeated_multiplication((f, _, _) in triple(), e in 0u32..3) {
            let p = f.ring().characteristic();
            let q = p.pow(e);
            let mut acc = Poly::one(f.ring());
            for _ in 0..q {
                acc = &acc * &f;
            }
            let fr = f.frobenius_power(e).unwrap();
            prop_assert_eq!(fr.len(), f.len());
            prop_assert_eq!(fr, acc);
        }

        #[test]
        fn terms_stay_canonical((f, g, _) in triple()) {
            let h = &f * &g + f.clone();
            let order = h.ring().order();
            for w in h.terms().windows(2) {
                prop_assert_eq!(order.cmp(&w[0].1, &w[1].1), Ordering::Greater);
            }
            prop_assert!(h.terms().iter().all(|t| t.0 != 0));
        }
    }
}
