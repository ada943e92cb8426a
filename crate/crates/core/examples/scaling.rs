// Timing the decision procedure on growing chain automata.

use std::error::Error;
use std::time::Instant;

use ptsep::{pt_separable, AlphabetSet, Automaton, Letter};

/// `(a^k b)+` read as a cycle of `k + 1` states, optionally shifted.
fn cycle(k: usize, shift: usize) -> Result<Automaton, Box<dyn Error>> {
    let (a, b) = (Letter::new("a")?, Letter::new("b")?);
    let alphabet: AlphabetSet = [a.clone(), b.clone()].into_iter().collect();
    let len = k + 1;
    let transitions = (0..len).map(|i| {
        let l = if (i + shift) % len == k {
            b.clone()
        } else {
            a.clone()
        };
        (i, l, (i + 1) % len)
    });
    Ok(Automaton::new(&alphabet, len, [0], [0], transitions)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for k in [2, 8, 32, 128] {
        let (l1, l2) = (cycle(k, 0)?, cycle(k, 1)?);
        let start = Instant::now();
        let separable = pt_separable(&l1, &l2);
        println!(
            "k={k:>3}: states {:>3}, separable {separable}, {:?}",
            l1.num_states(),
            start.elapsed()
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
