//! Solve H x = b exactly and check the residual.

use hepta::fixtures::cyclic_10;
use hepta::{factor, solve, Rational};

fn main() {
    let h = cyclic_10();
    let b: Vec<Rational> = (1..=10).map(Rational::from).collect();
    let report = solve(&factor(&h), &h, &b).unwrap();
    for (i, x) in report.solution.iter().enumerate() {
        println!("x_{} = {x}", i + 1);
    }
    println!("residual checked: {}", report.residual_checked);
}
