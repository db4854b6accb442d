//! Determinant of the 10x10 reference matrix, exact and in floating point.

use hepta::fixtures::cyclic_10;
use hepta::oracle::oracle_det;
use hepta::{factor, factor_float, FloatTolerance};

fn main() {
    let h = cyclic_10();
    let fz = factor(&h);
    println!("det H (exact)  = {}", fz.determinant());
    println!("det H (oracle) = {}", oracle_det(&h.to_dense()).unwrap());

    let float = factor_float(&h, FloatTolerance::default()).expect("no small pivots here");
    println!("det H (float)  = {}", float.determinant());

    let minors = fz.leading_minors().unwrap();
    println!("leading minors: {}", minors.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", "));
}
