// Patterns shared by two languages and words that no level-n test tells apart.

use std::error::Error;

use ptsep::{common_pattern, parse_automaton, pattern_witness, realize_pattern, subword_profile};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ab = parse_automaton(
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\ntrans: 2 a 1",
    )?;
    let ba = parse_automaton(
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 b 1\ntrans: 1 a 2\ntrans: 2 b 1",
    )?;
    let pat = common_pattern(&ab, &ba)?.ok_or("expected a common pattern")?;
    println!("{pat}");
    for n in 1..=3 {
        let canonical = pattern_witness(&pat, n)?;
        let v = realize_pattern(&ab, &pat, n).ok_or("no word in (ab)+")?;
        let w = realize_pattern(&ba, &pat, n).ok_or("no word in (ba)+")?;
        assert_eq!(subword_profile(&v, n), subword_profile(&w, n));
        println!("n={n}: canonical {canonical} | {v} ~ {w}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
