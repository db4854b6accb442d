//! A matrix whose plain LU breaks down: the zero pivot becomes `t` and the
//! determinant is still exact.

use hepta::{factor, factor_float, Bands, CyclicHeptaMatrix, FloatTolerance, Rational, Seq};

fn main() {
    // d_1 = 0 gives alpha_1 = 0 immediately
    let mut bands = Bands::zeros(8);
    bands.diag = [0, 2, 3, 1, 2, 5, 1, 4].map(Rational::from).to_vec();
    bands.sub1 = vec![Rational::one(); 8];
    bands.super1 = vec![Rational::one(); 8];
    let h = CyclicHeptaMatrix::from_bands(bands).unwrap();

    println!("float: {:?}", factor_float(&h, FloatTolerance::default()).err());

    let fz = factor(&h);
    println!("substituted pivots: {:?}", fz.substituted());
    for i in 1..=3 {
        println!("alpha_{i} = {}", fz.get(Seq::Alpha, i).unwrap());
    }
    println!("u_n(t) = {}", fz.u(8));
    println!("det H = u_n(0) = {}", fz.determinant());
}
