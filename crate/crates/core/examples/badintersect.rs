//! The non-CM component P meeting the line Q: intersections, the presentation
//! of S/P as a semigroup ring, and the structural verdict.

use icalc::closure::{structural_verdict, theorem_contain_verdict, StructuralOptions};
use icalc::ideal::ring_map_kernel;
use icalc::poly::ring_with_vars;
use icalc::{Ideal, PresentedRing};

fn main() -> icalc::Result<()> {
    let s = ring_with_vars(2, "T,X,Y,Z")?;
    let p = Ideal::parse(&s, &["T*Y - X*Z", "T^2*X - Z^2", "T*X^2 - Y*Z", "X^3 - Y^2"])?;
    let q = Ideal::parse(&s, &["T", "X", "Y"])?;
    let pq = p.intersection(&q)?;
    println!("P ∩ Q = {}", pq.canonical_string()?);

    let i = Ideal::parse(&s, &["Z", "X - T"])?;
    println!("I + (P ∩ Q)     = {}", i.sum(&pq)?.canonical_string()?);
    println!("(I + P) ∩ (I + Q) = {}", i.sum(&p)?.intersection(&i.sum(&q)?)?.canonical_string()?);

    let target = ring_with_vars(2, "s,u")?;
    let images = target.parse_all(&["s", "u^2", "u^3", "u*s"])?;
    let k = ring_map_kernel(&s, &target, &images)?;
    println!("ker(T->s, X->u^2, Y->u^3, Z->us) = P: {}", k.equals(&p)?);

    let probe = PresentedRing::new(p.clone(), None)?.cm_probe(None, 0)?;
    println!("S/P: {:?}, s.o.p. fails at step {:?}", probe.verdict, probe.failing_step);

    let r = PresentedRing::new(pq, Some(vec![p, q]))?;
    let contain = theorem_contain_verdict(&r, &i)?;
    println!("contain: {:?}", contain.status);
    let v = structural_verdict(&r, &i, StructuralOptions { p_unmixed: true, seed: 0 })?;
    println!("structural: {:?}", v.status);
    for h in &v.hypotheses {
        println!("  [{}] {}: {}", if h.holds { "x" } else { " " }, h.name, h.detail);
    }
    for c in &v.citations {
        println!("  {c}");
    }
    Ok(())
}
