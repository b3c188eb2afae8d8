use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector X_1^{a_1} ... X_n^{a_n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .ok_or_else(|| Error::Capacity(format!("exponent {a} + {b}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn scale(&self, factor: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|&a| {
                a.checked_mul(factor)
                    .ok_or_else(|| Error::Capacity(format!("exponent {a} * {factor}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Indices of variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// Monomial orders. Variable priority follows declaration order: variable 0 is largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// The first `front` variables form a dominant block; grevlex inside each block.
    BlockElimination { front: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // on a degree tie, the monomial with the smaller exponent in the last differing
    // variable is larger
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without the length check; callers guarantee equal lengths.
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => grevlex(&a.0, &b.0),
            MonomialOrder::BlockElimination { front } => {
                let k = front.min(a.0.len());
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::BlockElimination { front } => format!("elim({front})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn textbook_examples() {
        // x > y > z
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    /// Textbook grevlex: a > b iff deg a > deg b, or equal degree and the rightmost
    /// nonzero entry of a - b is negative.
    fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
        let da: i64 = a.iter().map(|&x| x as i64).sum();
        let db: i64 = b.iter().map(|&x| x as i64).sum();
        if da != db {
            return da.cmp(&db);
        }
        let diff: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x as i64 - y as i64).collect();
        match diff.iter().rev().find(|&&d| d != 0) {
            None => Ordering::Equal,
            Some(&d) if d < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    #[test]
    fn grevlex_matches_exhaustive_oracle() {
        let mut all = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    all.push(vec![a, b, c]);
                }
            }
        }
        for a in &all {
            for b in &all {
                assert_eq!(
                    MonomialOrder::GrevLex.cmp(&m(a), &m(b)),
                    grevlex_oracle(a, b),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn block_order_eliminates_front_block() {
        let o = MonomialOrder::BlockElimination { front: 1 };
        // t beats any power of the rest
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 2]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..4).prop_map(|front| MonomialOrder::BlockElimination { front }),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn total_order_axioms(o in orders(), a in mono(), b in mono(), c in mono()) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert!(o.cmp(&a, &c) != Ordering::Greater);
            }
        }

        #[test]
        fn refines_divisibility_and_multiplication(o in orders(), a in mono(), b in mono(), c in mono()) {
            if a.divides(&b) && a != b {
                prop_assert_eq!(o.cmp(&a, &b), Ordering::Less);
            }
            let ac = a.mul(&c).unwrap();
            let bc = b.mul(&c).unwrap();
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&ac, &bc));
        }
    }
}
