//! Inverse of an anti-cyclic matrix from the inverse of its cyclic core.

use hepta::fixtures::{anti_10, cyclic_10};
use hepta::{anti_determinant, anti_invert, invert};

fn main() {
    let b = anti_10();
    let inv = anti_invert(&b).unwrap();
    println!("det B = {}", anti_determinant(&b));
    println!("B^-1 row 1: {}", inv.row(0).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));

    let a_inv = invert(&cyclic_10()).unwrap();
    println!("equals A^-1 with rows reversed: {}", a_inv.reverse_rows() == inv);
    println!("B B^-1 = I: {}", b.to_dense().mul(&inv).unwrap().is_identity());
}
