//! Quotient rings `R = S/J` with user-supplied minimal primes.
//!
//! Primality of the supplied primes is trusted. What is verified at construction:
//! `J ⊆ P_i` for every prime, every generator of `⋂ P_i` lies in the radical of
//! `J` (so `rad J = ⋂ P_i`), and no prime contains another.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{find_positive_grading, Ideal};
use crate::poly::{Poly, RingRef};

/// Random linear combinations tried by [`PresentedRing::cm_probe`] after the
/// variable subsets.
pub const SOP_SEARCH_BUDGET: usize = 64;

/// Largest weight tried when looking for a positive grading.
pub const MAX_GRADING_WEIGHT: u32 = 6;

#[derive(Debug, Clone)]
pub struct PrimeComponent {
    pub ideal: Ideal,
    pub asserted_prime: bool,
    /// dim S/P
    pub dim: i64,
    pub absolutely_minimal: bool,
}

#[derive(Debug, Clone)]
pub struct PresentedRing {
    ambient: RingRef,
    defining: Ideal,
    primes: Option<Vec<PrimeComponent>>,
    dim: i64,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub equidimensional: bool,
    pub absolutely_minimal: Vec<usize>,
    pub lower_dimensional: Vec<usize>,
    /// Intersection of the absolutely minimal primes.
    pub p: Ideal,
    /// Intersection of the remaining primes, `(1)` if there are none.
    pub q: Ideal,
    pub dims: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SopCheck {
    pub elements: Vec<Poly>,
    pub is_sop: bool,
    /// dim S/(J + (elements))
    pub quotient_dim: i64,
    pub count_matches_dim: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularStep {
    pub element: Poly,
    pub regular: bool,
    /// A reduced-basis element of the colon ideal outside the previous ideal.
    pub zero_divisor_witness: Option<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSequenceReport {
    pub steps: Vec<RegularStep>,
    /// `J + (elements)` is a proper ideal.
    pub proper: bool,
}

impl RegularSequenceReport {
    pub fn is_regular(&self) -> bool {
        self.proper && self.steps.iter().all(|s| s.regular)
    }

    /// 1-based index of the first non-regular step.
    pub fn failing_step(&self) -> Option<usize> {
        self.steps.iter().position(|s| !s.regular).map(|i| i + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CmVerdict {
    Cm,
    NotCm,
    NoSopFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmProbe {
    pub verdict: CmVerdict,
    pub sop: Vec<Poly>,
    pub failing_step: Option<usize>,
    pub regularity: Option<RegularSequenceReport>,
    /// Positive grading making `J` and the s.o.p. homogeneous; when present the
    /// graded criterion makes the verdict exact, otherwise it is heuristic.
    pub grading: Option<Vec<u32>>,
}

impl CmProbe {
    pub fn is_exact(&self) -> bool {
        self.grading.is_some() || self.verdict == CmVerdict::NoSopFound
    }
}

impl PresentedRing {
    /// `S/J`, optionally with the minimal primes of `J`.
    pub fn new(defining: Ideal, primes: Option<Vec<Ideal>>) -> Result<Self> {
        let ambient = defining.ring().clone();
        if defining.is_unit()? {
            return Err(Error::EmptyRing);
        }
        let primes = match primes {
            None => None,
            Some(list) => Some(Self::verify_primes(&defining, list)?),
        };
        let dim = match &primes {
            Some(ps) => ps.iter().map(|p| p.dim).max().unwrap_or(-1),
            None => defining.dimension()?,
        };
        let primes = primes.map(|ps| {
            ps.into_iter()
                .map(|mut c| {
                    c.absolutely_minimal = c.dim == dim;
                    c
                })
                .collect()
        });
        Ok(PresentedRing {
            ambient,
            defining,
            primes,
            dim,
        })
    }

    /// The polynomial ring itself, a domain with the single minimal prime `(0)`.
    pub fn polynomial(ring: &RingRef) -> Result<Self> {
        Self::new(Ideal::zero(ring), Some(vec![Ideal::zero(ring)]))
    }

    fn verify_primes(j: &Ideal, list: Vec<Ideal>) -> Result<Vec<PrimeComponent>> {
        if list.is_empty() {
            return Err(Error::BadDecomposition("empty list of primes".into()));
        }
        let mut out = Vec::with_capacity(list.len());
        for (i, p) in list.iter().enumerate() {
            if p.is_unit()? {
                return Err(Error::BadDecomposition(format!("prime {} is the unit ideal", i + 1)));
            }
            for g in j.generators() {
                if !p.contains(g)? {
                    return Err(Error::BadDecomposition(format!(
                        "generator {g} of J is not in prime {}",
                        i + 1
                    )));
                }
            }
        }
        for (i, a) in list.iter().enumerate() {
            for (k, b) in list.iter().enumerate() {
                if i != k && a.is_subset_of(b)? {
                    return Err(Error::BadDecomposition(format!(
                        "prime {} contains prime {}, so it is not minimal",
                        k + 1,
                        i + 1
                    )));
                }
            }
        }
        let refs: Vec<&Ideal> = list.iter().collect();
        let meet = Ideal::intersect_all(j.ring(), &refs)?;
        for g in meet.basis()? {
            if !j.radical_contains(&g)? {
                return Err(Error::BadDecomposition(format!(
                    "generator {g} of the intersection of the primes is not in rad J"
                )));
            }
        }
        for p in list {
            let dim = p.dimension()?;
            out.push(PrimeComponent {
                ideal: p,
                asserted_prime: true,
                dim,
                absolutely_minimal: false,
            });
        }
        Ok(out)
    }

    pub fn ambient(&self) -> &RingRef {
        &self.ambient
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    pub fn primes(&self) -> Option<&[PrimeComponent]> {
        self.primes.as_deref()
    }

    pub fn require_primes(&self) -> Result<&[PrimeComponent]> {
        self.primes().ok_or(Error::NeedsPrimes)
    }

    /// Krull dimension of R.
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_equidimensional(&self) -> Option<bool> {
        self.primes
            .as_ref()
            .map(|ps| ps.iter().all(|p| p.absolutely_minimal))
    }

    /// Normal form of `f` modulo J, the canonical representative of its image in R.
    pub fn image(&self, f: &Poly) -> Result<Poly> {
        self.defining.reduce(f)
    }

    /// Preimage in S of the ideal of R generated by the images of `gens`.
    pub fn extend(&self, gens: &[Poly]) -> Result<Ideal> {
        let mut all = self.defining.generators().to_vec();
        all.extend(gens.iter().cloned());
        Ideal::new(&self.ambient, all)
    }

    pub fn classify(&self) -> Result<Classification> {
        let primes = self.require_primes()?;
        let mut abs = Vec::new();
        let mut rest = Vec::new();
        for (i, p) in primes.iter().enumerate() {
            if p.absolutely_minimal {
                abs.push(i);
            } else {
                rest.push(i);
            }
        }
        let pick = |idx: &[usize]| -> Result<Ideal> {
            let refs: Vec<&Ideal> = idx.iter().map(|&i| &primes[i].ideal).collect();
            Ideal::intersect_all(&self.ambient, &refs)
        };
        Ok(Classification {
            equidimensional: rest.is_empty(),
            p: pick(&abs)?,
            q: pick(&rest)?,
            absolutely_minimal: abs,
            lower_dimensional: rest,
            dims: primes.iter().map(|p| p.dim).collect(),
        })
    }

    /// Graded-local reading: `elements` form a system of parameters when there are
    /// `dim R` of them and `S/(J + (elements))` has dimension 0.
    pub fn is_system_of_parameters(&self, elements: &[Poly]) -> Result<SopCheck> {
        let quotient_dim = self.extend(elements)?.dimension()?;
        let count_matches_dim = elements.len() as i64 == self.dim;
        Ok(SopCheck {
            elements: elements.to_vec(),
            is_sop: count_matches_dim && quotient_dim == 0,
            quotient_dim,
            count_matches_dim,
        })
    }

    /// Step k is regular iff `(J + (z_1..z_{k-1})) : z_k = J + (z_1..z_{k-1})`.
    pub fn is_regular_sequence(&self, elements: &[Poly]) -> Result<RegularSequenceReport> {
        let mut base = self.defining.clone();
        let mut steps = Vec::with_capacity(elements.len());
        for z in elements {
            let colon = if z.is_zero() {
                Ideal::unit(&self.ambient)
            } else {
                base.colon_poly(z)?
            };
            let mut witness = None;
            for g in colon.basis()? {
                if !base.contains(&g)? {
                    witness = Some(g);
                    break;
                }
            }
            steps.push(RegularStep {
                element: z.clone(),
                regular: witness.is_none(),
                zero_divisor_witness: witness,
            });
            base = base.add_poly(z)?;
        }
        Ok(RegularSequenceReport {
            steps,
            proper: !base.is_unit()?,
        })
    }

    /// Cohen–Macaulay probe by the graded criterion: R is CM iff one homogeneous
    /// system of parameters is a regular sequence. Without `sop` the search tries
    /// subsets of variables first, then [`SOP_SEARCH_BUDGET`] seeded random linear
    /// forms.
    pub fn cm_probe(&self, sop: Option<&[Poly]>, seed: u64) -> Result<CmProbe> {
        let sop = match sop {
            Some(s) => Some(s.to_vec()),
            None => self.search_sop(seed)?,
        };
        let sop = match sop {
            Some(s) => s,
            None => {
                return Ok(CmProbe {
                    verdict: CmVerdict::NoSopFound,
                    sop: Vec::new(),
                    failing_step: None,
                    regularity: None,
                    grading: None,
                })
            }
        };
        let grading =
            find_positive_grading(&self.ambient, &[&self.defining], &sop, MAX_GRADING_WEIGHT)?;
        let report = self.is_regular_sequence(&sop)?;
        let verdict = if report.is_regular() {
            CmVerdict::Cm
        } else {
            CmVerdict::NotCm
        };
        Ok(CmProbe {
            verdict,
            failing_step: report.failing_step(),
            regularity: Some(report),
            sop,
            grading,
        })
    }

    fn search_sop(&self, seed: u64) -> Result<Option<Vec<Poly>>> {
        let d = self.dim.max(0) as usize;
        let n = self.ambient.nvars();
        if d == 0 {
            return Ok(Some(Vec::new()));
        }
        for combo in combinations(n, d) {
            let zs: Vec<Poly> = combo.iter().map(|&i| self.ambient.gen(i)).collect();
            if self.is_system_of_parameters(&zs)?.is_sop {
                return Ok(Some(zs));
            }
        }
        let p = self.ambient.characteristic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SOP_SEARCH_BUDGET {
            let zs: Vec<Poly> = (0..d)
                .map(|_| {
                    let mut f = Poly::zero(&self.ambient);
                    while f.is_zero() {
                        for i in 0..n {
                            let c = rng.gen_range(0..p);
                            f = f + self.ambient.gen(i).scale(c);
                        }
                    }
                    f
                })
                .collect();
            if self.is_system_of_parameters(&zs)?.is_sop {
                return Ok(Some(zs));
            }
        }
        Ok(None)
    }
}

/// k-subsets of 0..n in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
