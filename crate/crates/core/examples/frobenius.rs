//! Bounded Frobenius evidence: c·x^q ∈ I^[q] for q = 1, 2, ..., 2^5.

use icalc::closure::bounded_frobenius_check;
use icalc::poly::ring_with_vars;
use icalc::{Ideal, PresentedRing};

fn main() -> icalc::Result<()> {
    let s = ring_with_vars(2, "X,Y,Z")?;
    let r = PresentedRing::new(
        Ideal::parse(&s, &["X*Y", "X*Z"])?,
        Some(vec![Ideal::parse(&s, &["X"])?, Ideal::parse(&s, &["Y", "Z"])?]),
    )?;
    let zero = Ideal::zero(&s);
    let x = s.parse("X")?;
    for c in ["Y", "X + Y", "Z^2"] {
        let c = s.parse(c)?;
        let cert = bounded_frobenius_check(&r, &zero, &x, &c, 0, 5)?;
        let row: String = cert.checks.iter().map(|&(_, h)| if h { '+' } else { '.' }).collect();
        println!(
            "c = {:6} {row}  {:?}  (c in R°: {:?}, c in R•: {:?})",
            c.to_string(),
            cert.verdict,
            cert.c_in_r_circ,
            cert.c_in_r_bullet
        );
    }
    println!("x^(2^e) for e = 3: {}", x.frobenius_power(3)?);
    Ok(())
}
