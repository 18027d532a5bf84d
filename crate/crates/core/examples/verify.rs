//! Cross-checks the operator route against the element-wise map.
//!
//! cargo run --release --example verify -- 7

use std::time::Instant;

use szczarba::sz::verify_range;

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let start = Instant::now();
    let report = verify_range(max_n);
    println!("{report}");
    println!("elapsed {:.2?}", start.elapsed());
    if !report.is_success() {
        std::process::exit(1);
    }
}
