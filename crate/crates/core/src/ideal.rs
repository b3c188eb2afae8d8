//! Finitely generated ideals and the ideal calculus built on Gröbner bases.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, RingRef};

/// An ideal of an ambient polynomial ring. The reduced Gröbner basis is computed
/// on first use and cached; equality always goes through it.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Poly>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    /// Generators as given, `(0)` for the zero ideal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.gens)
    }
}

fn fmt_list(f: &mut fmt::Formatter<'_>, polys: &[Poly]) -> fmt::Result {
    if polys.is_empty() {
        return write!(f, "(0)");
    }
    write!(f, "(")?;
    for (i, g) in polys.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{g}")?;
    }
    write!(f, ")")
}

/// `(g1, g2, ...)` in canonical polynomial syntax.
pub fn format_generators(polys: &[Poly]) -> String {
    struct L<'a>(&'a [Poly]);
    impl fmt::Display for L<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt_list(f, self.0)
        }
    }
    L(polys).to_string()
}

/// Polynomial `c` exactly divided by `f`; `c` must be a multiple of `f`.
pub fn exact_div(c: &Poly, f: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::UndefinedColon);
    }
    let ring = c.ring().clone();
    let field = ring.field();
    let lm = f.leading_monomial().unwrap().clone();
    let lc_inv = field.inv(f.leading_coeff().unwrap())?;
    let mut rest = c.clone();
    let mut quotient = Poly::zero(&ring);
    while let Some((rc, rm)) = rest.terms().first().cloned() {
        if !lm.divides(&rm) {
            return Err(Error::Precondition(format!("{f} does not divide {c}")));
        }
        let t = Poly::monomial(&ring, field.mul(rc, lc_inv), rm.div(&lm));
        rest = rest.try_sub(&f.try_mul(&t)?)?;
        quotient = quotient.try_add(&t)?;
    }
    Ok(quotient)
}

/// Ring with one extra variable in front, dominant under a block order.
fn prepend_variable(ring: &RingRef, name: &str) -> (RingRef, Vec<usize>) {
    let mut vars = vec![name.to_string()];
    vars.extend(ring.vars().iter().cloned());
    let aux = Ring::auxiliary(ring.field(), vars, MonomialOrder::BlockElimination { front: 1 });
    let shift = (1..=ring.nvars()).collect();
    (aux, shift)
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Poly>) -> Result<Self> {
        for g in &gens {
            if !Ring::same(g.ring(), ring) {
                return Err(Error::IncompatibleRing);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Poly::one(ring)],
            gb: OnceLock::new(),
        }
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Self> {
        Self::new(ring, ring.parse_all(gens)?)
    }

    /// Ideal generated by the named variables.
    pub fn of_variables(ring: &RingRef, names: &[&str]) -> Result<Self> {
        let gens = names.iter().map(|n| ring.var(n)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    /// The homogeneous maximal ideal, generated by all variables.
    pub fn maximal(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| ring.gen(i)).collect(),
            gb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    fn check_poly(&self, f: &Poly) -> Result<()> {
        if Ring::same(&self.ring, f.ring()) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = groebner::groebner_basis(&self.gens, &self.ring)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn basis(&self) -> Result<Vec<Poly>> {
        Ok(self.groebner()?.elements().to_vec())
    }

    /// The same ideal, generated by its reduced Gröbner basis.
    pub fn canonical(&self) -> Result<Ideal> {
        let gb = self.groebner()?.clone();
        let out = Ideal {
            ring: self.ring.clone(),
            gens: gb.elements().to_vec(),
            gb: OnceLock::new(),
        };
        let _ = out.gb.set(gb);
        Ok(out)
    }

    /// Reduced Gröbner basis in canonical text, e.g. `(X, Y^2)`.
    pub fn canonical_string(&self) -> Result<String> {
        Ok(format_generators(self.groebner()?.elements()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        self.check_poly(f)?;
        self.groebner()?.reduce(f)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.groebner()?.elements() == other.groebner()?.elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_poly(&self, f: &Poly) -> Result<Ideal> {
        self.check_poly(f)?;
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn scale_by(&self, f: &Poly) -> Result<Ideal> {
        self.check_poly(f)?;
        let gens = self.gens.iter().map(|g| g.try_mul(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` as the elimination of `t` from `t·I + (1 − t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let (aux, shift) = prepend_variable(&self.ring, "@t");
        let t = aux.gen(0);
        let one_minus_t = Poly::one(&aux).try_sub(&t)?;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(g.embed(&aux, &shift)?.try_mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.embed(&aux, &shift)?.try_mul(&one_minus_t)?);
        }
        let gb = groebner::groebner_basis(&gens, &aux)?;
        let mut back = vec![0usize];
        back.extend(0..self.ring.nvars());
        let out = gb
            .elements()
            .iter()
            .filter(|g| !g.involves_any(&[0]))
            .map(|g| g.embed(&self.ring, &back))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, out)
    }

    pub fn intersect_all(ring: &RingRef, ideals: &[&Ideal]) -> Result<Ideal> {
        let mut acc = Ideal::unit(ring);
        for i in ideals {
            acc = acc.intersection(i)?;
        }
        Ok(acc)
    }

    /// `I : f = {g : g·f ∈ I}`, from the generators of `I ∩ (f)` divided by `f`.
    pub fn colon_poly(&self, f: &Poly) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::UndefinedColon);
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersection(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|h| exact_div(h, f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`, the intersection of `I : g` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersection(&self.colon_poly(g)?)?;
        }
        Ok(acc)
    }

    /// Whether some power of `f` lies in the ideal: `1 ∈ I + (1 − r·f)` with a new
    /// variable `r`.
    pub fn radical_contains(&self, f: &Poly) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let (aux, shift) = prepend_variable(&self.ring, "@r");
        let r = aux.gen(0);
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.embed(&aux, &shift))
            .collect::<Result<Vec<_>>>()?;
        gens.push(Poly::one(&aux).try_sub(&r.try_mul(&f.embed(&aux, &shift)?)?)?);
        Ok(groebner::groebner_basis(&gens, &aux)?.is_unit())
    }

    /// Krull dimension of `S/I` from the initial ideal: the largest set of variables
    /// containing the support of no leading monomial. The unit ideal has dimension −1.
    pub fn dimension(&self) -> Result<i64> {
        let gb = self.groebner()?;
        if gb.is_unit() {
            return Ok(-1);
        }
        let supports: Vec<u64> = gb
            .leading_monomials()
            .map(|m| m.support().fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        Ok(max_independent_set(self.ring.nvars(), &supports) as i64)
    }

    /// `I^[p^e]`, generated by the Frobenius powers of the generators.
    pub fn bracket_power(&self, e: u32) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.frobenius_power(e))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Homogeneous for the standard grading (every variable of weight 1).
    pub fn is_homogeneous(&self) -> Result<bool> {
        self.is_weighted_homogeneous(&vec![1; self.ring.nvars()])
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> Result<bool> {
        Ok(self
            .groebner()?
            .elements()
            .iter()
            .all(|g| g.is_weighted_homogeneous(weights)))
    }

    /// Generators free of the named variables, i.e. `I ∩ F_p[other variables]`.
    pub fn eliminate(&self, names: &[&str]) -> Result<Ideal> {
        let front = names
            .iter()
            .map(|n| self.ring.var_index(n))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, groebner::eliminate(&self.gens, &self.ring, &front)?)
    }

    /// The same ideal in a ring with the same variables under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(order);
        let gens = self.gens.iter().map(|g| g.reorder(&ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}

fn max_independent_set(n: usize, supports: &[u64]) -> u32 {
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones();
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Kernel of `F_p[source] → F_p[target]`, `v_i ↦ images[i]`, by eliminating the
/// target variables from the graph ideal `(v_i − images[i])`.
pub fn ring_map_kernel(source: &RingRef, target: &RingRef, images: &[Poly]) -> Result<Ideal> {
    if images.len() != source.nvars() {
        return Err(Error::ImageCount {
            expected: source.nvars(),
            found: images.len(),
        });
    }
    if source.characteristic() != target.characteristic() {
        return Err(Error::IncompatibleRing);
    }
    for img in images {
        if !Ring::same(img.ring(), target) {
            return Err(Error::IncompatibleRing);
        }
    }
    if let Some(v) = source.vars().iter().find(|v| target.vars().contains(v)) {
        return Err(Error::RenameRequired(v.clone()));
    }
    let m = target.nvars();
    let mut vars = target.vars().to_vec();
    vars.extend(source.vars().iter().cloned());
    let joint = Ring::with_field(
        source.field(),
        vars,
        MonomialOrder::BlockElimination { front: m },
    )?;
    let target_map: Vec<usize> = (0..m).collect();
    let gens = images
        .iter()
        .enumerate()
        .map(|(i, img)| joint.gen(m + i).try_sub(&img.embed(&joint, &target_map)?))
        .collect::<Result<Vec<_>>>()?;
    let front: Vec<usize> = (0..m).collect();
    let kept = groebner::eliminate(&gens, &joint, &front)?;
    let mut back = vec![0usize; m];
    back.extend(0..source.nvars());
    let out = kept
        .iter()
        .map(|g| g.embed(source, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(source, out)
}

/// Smallest positive integer weight vector (by total weight, then
/// lexicographically, entries at most `max_weight`) for which every ideal and
/// every listed polynomial is weighted-homogeneous.
pub fn find_positive_grading(
    ring: &RingRef,
    ideals: &[&Ideal],
    polys: &[Poly],
    max_weight: u32,
) -> Result<Option<Vec<u32>>> {
    let n = ring.nvars();
    let mut constraints: Vec<Vec<i64>> = Vec::new();
    let mut collect = |f: &Poly| {
        if let Some((_, first)) = f.terms().first() {
            for (_, m) in &f.terms()[1..] {
                constraints.push(diff(first, m));
            }
        }
    };
    for i in ideals {
        for g in i.groebner()?.elements() {
            collect(g);
        }
    }
    for f in polys {
        collect(f);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let max_weight = max_weight.max(1);
    let mut best: Option<(u32, Vec<u32>)> = None;
    let mut w = vec![1u32; n];
    loop {
        let total: u32 = w.iter().sum();
        let better = match &best {
            None => true,
            Some((t, v)) => total < *t || (total == *t && w < *v),
        };
        if better
            && constraints
                .iter()
                .all(|c| c.iter().zip(&w).map(|(a, &b)| a * b as i64).sum::<i64>() == 0)
        {
            best = Some((total, w.clone()));
        }
        // odometer
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(best.map(|b| b.1));
            }
            k -= 1;
            if w[k] < max_weight {
                w[k] += 1;
                for x in &mut w[k + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

fn diff(a: &Monomial, b: &Monomial) -> Vec<i64> {
    a.exponents()
        .iter()
        .zip(b.exponents())
        .map(|(&x, &y)| x as i64 - y as i64)
        .collect()
}
