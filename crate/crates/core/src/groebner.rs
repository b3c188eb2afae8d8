//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pair selection uses the normal strategy: the pending pair whose lcm has the
//! smallest total degree goes first, ties broken by the generator indices
//! `(i, j)` in lexicographic order. Both Buchberger criteria prune pairs. The
//! output is interreduced, monic and sorted by descending leading monomial, so
//! it is a canonical value for the ideal and the order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, RingRef};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial())
    }
}

/// Full reduction of `f` by `divisors`, tried in the given order at every step.
/// The remainder has no term divisible by any divisor's leading monomial.
pub fn normal_form(f: &Poly, divisors: &[Poly]) -> Result<Poly> {
    for g in divisors {
        if !Ring::same(g.ring(), f.ring()) {
            return Err(Error::IncompatibleRing);
        }
    }
    let ring = f.ring().clone();
    let field = ring.field();
    let divs: Vec<&Poly> = divisors.iter().filter(|g| !g.is_zero()).collect();
    if divs.is_empty() {
        return Ok(f.clone());
    }
    let mut p = f.clone();
    let mut rem: Vec<(i64, Monomial)> = Vec::new();
    while let Some(&(c, ref m)) = p.terms().first() {
        let m = m.clone();
        match divs
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)))
        {
            Some(g) => {
                let lm = g.leading_monomial().unwrap();
                let lc = g.leading_coeff().unwrap();
                let factor = field.div(c, lc)?;
                let sub = g.mul_term(factor, &m.div(lm))?;
                p = p.try_sub(&sub)?;
            }
            None => {
                rem.push((c as i64, m.clone()));
                p = p.try_sub(&Poly::monomial(&ring, c, m))?;
            }
        }
    }
    Poly::from_terms(&ring, rem)
}

pub fn s_polynomial(f: &Poly, g: &Poly) -> Result<Poly> {
    let (fm, gm) = match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(Poly::zero(f.ring())),
    };
    let field = f.ring().field();
    let l = fm.lcm(gm);
    let a = f.mul_term(field.inv(f.leading_coeff().unwrap())?, &l.div(fm))?;
    let b = g.mul_term(field.inv(g.leading_coeff().unwrap())?, &l.div(gm))?;
    a.try_sub(&b)
}

/// True when every S-polynomial of `elements` reduces to zero against them.
pub fn satisfies_buchberger_criterion(elements: &[Poly]) -> Result<bool> {
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let s = s_polynomial(&elements[i], &elements[j])?;
            if !normal_form(&s, elements)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when no term of an element is divisible by another element's leading
/// monomial and all leading coefficients are 1.
pub fn is_reduced(elements: &[Poly]) -> bool {
    elements.iter().enumerate().all(|(i, g)| {
        g.leading_coeff() == Some(1)
            && elements.iter().enumerate().all(|(j, h)| {
                i == j
                    || h.leading_monomial()
                        .is_some_and(|lm| g.terms().iter().all(|(_, m)| !lm.divides(m)))
            })
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn groebner_basis(gens: &[Poly], ring: &RingRef) -> Result<GroebnerBasis> {
    for g in gens {
        if !Ring::same(g.ring(), ring) {
            return Err(Error::IncompatibleRing);
        }
    }
    let unit = || GroebnerBasis {
        ring: ring.clone(),
        elements: vec![Poly::one(ring)],
    };
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.is_unit() {
            return Ok(unit());
        }
        let g = g.monic();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }

    // (lcm degree, i, j); BTreeSet iteration yields the normal-strategy choice
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lcm_deg = |b: &[Poly], i: usize, j: usize| {
        b[i].leading_monomial()
            .unwrap()
            .lcm(b[j].leading_monomial().unwrap())
            .degree()
    };
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert((lcm_deg(&basis, i, j), i, j));
            pending.insert((i, j));
        }
    }

    while let Some(entry) = queue.pop_first() {
        let (_, i, j) = entry;
        pending.remove(&(i, j));
        let (mi, mj) = (
            basis[i].leading_monomial().unwrap().clone(),
            basis[j].leading_monomial().unwrap().clone(),
        );
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let h = normal_form(&s, &basis)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(unit());
        }
        basis.push(h.monic());
        let n = basis.len() - 1;
        for k in 0..n {
            queue.insert((lcm_deg(&basis, k, n), k, n));
            pending.insert((k, n));
        }
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: interreduce(basis)?,
    })
}

/// Minimalizes and fully interreduces a Gröbner basis, then sorts it.
fn interreduce(basis: Vec<Poly>) -> Result<Vec<Poly>> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.leading_monomial().unwrap();
            j != i && hm.divides(lm) && (hm != lm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        // leading terms are untouched because no other leading monomial divides them
        out.push(normal_form(&minimal[i], &others)?.monic());
    }
    if let Some(g) = out.first() {
        let order = g.ring().order();
        out.sort_by(|a, b| {
            order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
        });
    }
    Ok(out)
}

/// Gröbner basis of `gens` under another order; the result lives in the
/// reordered ring.
pub fn groebner_basis_with_order(gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(g) => g.ring().with_order(order),
        None => return Err(Error::Precondition("no generators to infer the ring from".into())),
    };
    let moved = gens.iter().map(|g| g.reorder(&ring)).collect::<Result<Vec<_>>>()?;
    groebner_basis(&moved, &ring)
}

/// Generators of `(gens) ∩ F_p[remaining variables]`, returned in the original ring.
///
/// A Gröbner basis is computed under the block order with `front` as the dominant
/// block; its elements free of `front` generate the elimination ideal.
pub fn eliminate(gens: &[Poly], ring: &RingRef, front: &[usize]) -> Result<Vec<Poly>> {
    if front.is_empty() {
        return Ok(groebner_basis(gens, ring)?.elements().to_vec());
    }
    let n = ring.nvars();
    let mut perm: Vec<usize> = front.to_vec();
    perm.extend((0..n).filter(|v| !front.contains(v)));
    // position of original variable v in the permuted ring
    let mut to_aux = vec![0usize; n];
    for (pos, &v) in perm.iter().enumerate() {
        to_aux[v] = pos;
    }
    let names = perm.iter().map(|&v| ring.vars()[v].clone()).collect();
    let aux = Ring::auxiliary(
        ring.field(),
        names,
        MonomialOrder::BlockElimination { front: front.len() },
    );
    let moved = gens.iter().map(|g| g.embed(&aux, &to_aux)).collect::<Result<Vec<_>>>()?;
    let gb = groebner_basis(&moved, &aux)?;
    let front_aux: Vec<usize> = (0..front.len()).collect();
    gb.elements()
        .iter()
        .filter(|g| !g.involves_any(&front_aux))
        .map(|g| g.embed(ring, &perm))
        .collect()
}
