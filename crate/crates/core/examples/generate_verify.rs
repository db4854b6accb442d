//! Generate instances with planted zero pivots and cross-check each against
//! dense elimination.

use hepta::io::{generate_matrix, verify, GenSpec, VerifyOptions};
use hepta::Kind;

fn main() {
    for (seed, zero_pivots) in [(1, 0), (2, 1), (3, 2), (4, 3)] {
        let kind = if seed % 2 == 0 { Kind::Anti } else { Kind::Cyclic };
        let m = generate_matrix(GenSpec { n: 16, seed, zero_pivots, kind }).unwrap();
        let report = verify(&m, VerifyOptions::default());
        println!("{report}\n");
    }
}
