// Reading, checking and writing the `.aut` text format.

use std::error::Error;

use ptsep::{parse_automaton, serialize, Word};

const AB_PLUS: &str = "\
# (ab)+
alphabet: a b
states: 3
initial: 0
final: 2
trans: 0 a 1
trans: 1 b 2
trans: 2 a 1
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = parse_automaton(AB_PLUS)?;
    println!(
        "{} states, {} transitions",
        a.num_states(),
        a.num_transitions()
    );
    for w in ["ab", "abab", "aba", ""] {
        let word = Word::from_chars(w)?;
        println!("{:>9} -> {}", word.to_string(), a.accepts(&word)?);
    }
    let text = serialize(&a);
    assert_eq!(parse_automaton(&text)?, a);
    print!("{text}");

    let bad = "alphabet: a\nstates: 1\ninitial: 0\ntrans: 0 b 0\n";
    match parse_automaton(bad) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("foreign letter accepted".into()),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
