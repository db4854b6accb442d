//! Linear scaling of the float path; pass sizes as arguments.

use hepta::io::{bench, BenchConfig, Mode};

fn main() {
    let sizes: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let sizes = if sizes.is_empty() { vec![1000, 2000, 4000, 8000] } else { sizes };
    let report = bench(&BenchConfig { invert: false, ..BenchConfig::new(sizes, Mode::Float, 3) }).unwrap();
    print!("{report}");
    for pair in report.medians.windows(2) {
        println!(
            "op_count({}) / op_count({}) = {:.4}",
            pair[1].n,
            pair[0].n,
            pair[1].op_count as f64 / pair[0].op_count as f64
        );
    }
}
