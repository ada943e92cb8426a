// Deciding separability by piecewise testable languages.

use std::error::Error;

use ptsep::{
    common_pattern, loop_fixpoint, parse_automaton, pt_separable, pt_separable_via_extended,
    Automaton,
};

fn aut(text: &str) -> Result<Automaton, Box<dyn Error>> {
    Ok(parse_automaton(text)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ab = aut(
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\ntrans: 2 a 1",
    )?;
    let ba = aut(
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 b 1\ntrans: 1 a 2\ntrans: 2 b 1",
    )?;
    let a_star = aut("alphabet: a b\nstates: 1\ninitial: 0\nfinal: 0\ntrans: 0 a 0")?;
    let b_plus = aut("alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 b 1\ntrans: 1 b 1")?;

    // (ab)+ and (ba)+ share the loop alphabet {a, b} at their final states
    let fix = loop_fixpoint(&ab, 2, &ba, 2);
    println!(
        "loop alphabet at (2, 2): {:?} after {} rounds",
        fix.alphabet, fix.iterations
    );

    for (name, l1, l2) in [("(ab)+ | (ba)+", &ab, &ba), ("a* | b+", &a_star, &b_plus)] {
        let fast = pt_separable(l1, l2);
        assert_eq!(fast, pt_separable_via_extended(l1, l2)?);
        println!("{name}: separable = {fast}");
        if let Some(pat) = common_pattern(l1, l2)? {
            println!("common pattern:\n{pat}");
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
