// From a CNF formula to two automata that share a content iff it is satisfiable.

use std::error::Error;

use ptsep::hardness::decode_valuation;
use ptsep::{parse_dimacs, same_content_witness, sat_reduction, serialize, ContentSearch};

const CNF: &str = "\
c (x1 or not x2) and (x2 or x3) and (not x1 or not x3)
p cnf 3 3
1 -2 0
2 3 0
-1 -3 0
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = parse_dimacs(CNF)?;
    let (a1, a2) = sat_reduction(&f);
    print!("A1:\n{}A2:\n{}", serialize(&a1), serialize(&a2));
    match same_content_witness(&a1, &a2, 64)? {
        ContentSearch::Found(u, v) => {
            let valuation = decode_valuation(f.num_vars(), &u).ok_or("undecodable witness")?;
            println!(
                "u = {u}\nv = {v}\nvaluation {valuation:?} satisfies f: {}",
                f.satisfies(&valuation)
            );
        }
        other => println!("{other:?}"),
    }

    let contradiction = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")?;
    let (b1, b2) = sat_reduction(&contradiction);
    println!("x1 and not x1: {:?}", same_content_witness(&b1, &b2, 64)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
