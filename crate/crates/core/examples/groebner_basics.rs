//! Reduced Gröbner bases, normal forms and elimination.

use icalc::groebner::{eliminate, groebner_basis, normal_form};
use icalc::poly::ring_with_vars;
use icalc::{MonomialOrder, Ring};

fn main() -> icalc::Result<()> {
    let s = ring_with_vars(7, "x,y,z")?;
    let gens = s.parse_all(&["x^2 + y*z - 1", "x*y - z^2", "y^3 - x"])?;
    let gb = groebner_basis(&gens, &s)?;
    println!("{s}");
    for g in gb.elements() {
        println!("  {g}");
    }
    let f = s.parse("x^3*y + z")?;
    println!("normal form of {f}: {}", normal_form(&f, gb.elements())?);

    // the twisted cubic, implicitized by eliminating t
    let r = Ring::new(7, &["t", "x", "y", "z"], MonomialOrder::GrevLex)?;
    let graph = r.parse_all(&["x - t", "y - t^2", "z - t^3"])?;
    let kept = eliminate(&graph, &r, &[0])?;
    println!("twisted cubic:");
    for g in kept {
        println!("  {g}");
    }
    Ok(())
}
