//! A plane and a line in F_2^3: tight closure does not capture colons, NE
//! closure does.

use icalc::closure::{closedness_necessary_test, colon_capture_report, ClosureMode};
use icalc::poly::ring_with_vars;
use icalc::{Ideal, PresentedRing};

fn main() -> icalc::Result<()> {
    let s = ring_with_vars(2, "X,Y,Z")?;
    let r = PresentedRing::new(
        Ideal::parse(&s, &["X*Y", "X*Z"])?,
        Some(vec![Ideal::parse(&s, &["X"])?, Ideal::parse(&s, &["Y", "Z"])?]),
    )?;
    let y = s.parse("Y")?;
    println!("0 : y = {}", r.defining_ideal().colon_poly(&y)?.canonical_string()?);

    let zero = Ideal::zero(&s);
    for mode in [ClosureMode::Tight, ClosureMode::Ne] {
        let rep = closedness_necessary_test(&r, &zero, mode)?;
        let dc = rep.dc_result.as_ref().unwrap();
        println!(
            "{:5} dc(0) = {}  {:?}  witness {}",
            mode.name(),
            dc.canonical_string()?,
            rep.status,
            rep.witness.map(|w| w.to_string()).unwrap_or_else(|| "-".into())
        );
    }

    let cap = colon_capture_report(&r, &s.parse_all(&["Y", "X - Z"])?)?;
    for st in &cap.steps {
        println!(
            "k = {}: regular {}, tight captures {}, ne captures {}",
            st.k, st.regular, st.tight_captures, st.ne_captures
        );
    }
    Ok(())
}
