// Separability by prefix-testable languages through Büchi closures.

use std::error::Error;

use ptsep::{buchi_product_nonempty, closure_buchi, parse_automaton, prefix_separable, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let starts_a = parse_automaton(
        "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 1 a 1\ntrans: 1 b 1",
    )?;
    let starts_b = parse_automaton(
        "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 b 1\ntrans: 1 a 1\ntrans: 1 b 1",
    )?;
    let a_star = parse_automaton("alphabet: a b\nstates: 1\ninitial: 0\nfinal: 0\ntrans: 0 a 0")?;

    println!("aA* | bA*: {}", prefix_separable(&starts_a, &starts_b));
    println!("aA* | a*:  {}", prefix_separable(&starts_a, &a_star));

    // both closures contain a^ω
    let c1 = closure_buchi(&starts_a);
    let c2 = closure_buchi(&a_star);
    let a = Word::from_chars("a")?;
    println!(
        "a^ω in both closures: {}",
        c1.accepts_lasso(&Word::empty(), &a)? && c2.accepts_lasso(&Word::empty(), &a)?
    );
    assert!(buchi_product_nonempty(&c1, &c2)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
