//! Parses and runs an .icl script given on the command line, or a small inline one.

use icalc::script::{parse_script, run_script, RunOptions};

const INLINE: &str = "\
ring S = poly(p=3; x,y,z)
let I = ideal(x*y, y*z)
let J = ideal(x - z)
check equal(meet(I, J), meet(J, I))
check member(x*y*z, I)
report cm(I)
";

fn main() {
    let src = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable script"),
        None => INLINE.to_string(),
    };
    let result = parse_script(&src).and_then(|s| run_script(&s, &RunOptions::default()));
    match result {
        Ok(doc) => {
            print!("{}", doc.to_text());
            std::process::exit(doc.exit_code());
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
