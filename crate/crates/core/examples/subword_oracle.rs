// Subword profiles and the bounded brute-force separability search.

use std::error::Error;

use ptsep::{oracle_pt_separable, parse_automaton, profile_set, subword_profile, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Word::from_chars("abba")?;
    let p = subword_profile(&w, 2);
    println!("Sub_2(abba) has {} words:", p.len());
    for s in p.subwords() {
        println!("  {s}");
    }

    let a_star_b = parse_automaton(
        "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 0\ntrans: 0 b 1",
    )?;
    for n in 0..=2 {
        println!(
            "classes of a*b at n={n}: {}",
            profile_set(&a_star_b, n)?.len()
        );
    }

    let ab = parse_automaton(
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\ntrans: 2 a 1",
    )?;
    let ba = parse_automaton(
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 b 1\ntrans: 1 a 2\ntrans: 2 b 1",
    )?;
    println!("a*b | (ba)+: {}", oracle_pt_separable(&a_star_b, &ba, 4)?);
    println!("(ab)+ | (ba)+: {}", oracle_pt_separable(&ab, &ba, 4)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
