// Factorization trees whose wide nodes have idempotent, equal-content children.

use std::error::Error;

use ptsep::{ramsey_factorization, Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["aab", "abcabcab", "abbbbbbba"] {
        let w = Word::from_chars(text)?;
        let tree = ramsey_factorization(&w)?;
        tree.validate()?;
        let k = w.content().len();
        println!("{text}: height {} (bound {})", tree.height(), 3 * k - 2);
        print!("{tree}");
    }
    assert!(ramsey_factorization(&Word::empty()).is_err());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
