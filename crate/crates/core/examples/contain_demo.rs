//! A plane and a line meeting in a point: P + Q is the maximal ideal, so no
//! parameter ideal is tightly closed.

use icalc::closure::theorem_contain_verdict;
use icalc::poly::ring_with_vars;
use icalc::{Ideal, PresentedRing};

fn main() -> icalc::Result<()> {
    let s = ring_with_vars(2, "X,Y1,Y2")?;
    let p = Ideal::parse(&s, &["X"])?;
    let q = Ideal::parse(&s, &["Y1", "Y2"])?;
    let r = PresentedRing::new(p.intersection(&q)?, Some(vec![p, q]))?;
    let c = r.classify()?;
    println!("prime dimensions {:?}, P + Q = {}", c.dims, c.p.sum(&c.q)?.canonical_string()?);

    let i = Ideal::parse(&s, &["Y1 + X", "Y2"])?;
    let v = theorem_contain_verdict(&r, &i)?;
    println!("{} -> {:?}", i, v.status);
    for h in &v.hypotheses {
        println!("  {} = {} ({})", h.name, h.holds, h.detail);
    }
    Ok(())
}
