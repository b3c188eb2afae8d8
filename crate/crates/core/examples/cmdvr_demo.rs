//! A Cohen-Macaulay component with a line sticking out: the CMDVR configuration
//! and the normalized generators used in its proof.

use icalc::closure::{normalize_sop_generators, structural_verdict, StructuralOptions};
use icalc::poly::ring_with_vars;
use icalc::{Ideal, PresentedRing};

fn main() -> icalc::Result<()> {
    let s = ring_with_vars(2, "X1,X2,Y")?;
    let p = Ideal::parse(&s, &["Y^2 + X1^3"])?;
    let q = Ideal::parse(&s, &["X1", "X2"])?;
    let r = PresentedRing::new(p.intersection(&q)?, Some(vec![p, q]))?;

    let gens = s.parse_all(&["Y^2 + X1", "Y^3 + X2", "X1*X2"])?;
    let n = normalize_sop_generators(&s, 2, &gens)?;
    println!("h = {}, lead = {}, rest = {:?}", n.h, n.lead, n.rest.iter().map(|g| g.to_string()).collect::<Vec<_>>());

    let i = Ideal::parse(&s, &["Y", "X2"])?;
    let v = structural_verdict(&r, &i, StructuralOptions::default())?;
    println!("{:?}", v.status);
    for c in &v.citations {
        println!("  {c}");
    }
    Ok(())
}
