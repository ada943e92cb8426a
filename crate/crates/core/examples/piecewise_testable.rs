// Piecewise testability of deterministic automata.

use std::error::Error;

use ptsep::{is_piecewise_testable, parse_automaton};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cases = [
        ("a*b*", "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 0 1\ntrans: 0 a 0\ntrans: 0 b 1\ntrans: 1 b 1"),
        ("(aa)*", "alphabet: a\nstates: 2\ninitial: 0\nfinal: 0\ntrans: 0 a 1\ntrans: 1 a 0"),
        ("a*b", "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 0\ntrans: 0 b 1"),
    ];
    for (name, text) in cases {
        let d = parse_automaton(text)?;
        println!("{name:>6}: {}", is_piecewise_testable(&d)?);
    }
    let nfa = parse_automaton(
        "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 0\ntrans: 0 a 1",
    )?;
    match is_piecewise_testable(&nfa) {
        Err(e) => println!("nondeterministic input: {e}"),
        Ok(_) => return Err("expected a determinism error".into()),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
