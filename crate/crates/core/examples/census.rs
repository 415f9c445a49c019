//! Counts inequivalent binary self-orthogonal codes for each length up to N.
//!
//!     cargo run --release --example census -- 10

use std::time::Instant;

use qsd_dna::classify::{census, CensusOptions};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let opts = CensusOptions::with_max_n(max_n);
    let start = Instant::now();
    for n in 1..=max_n {
        let counts: Vec<String> = census(n, None, &opts)
            .expect("within limit")
            .iter()
            .map(|e| e.count.to_string())
            .collect();
        println!("n={n:>2}: {}", counts.join(" "));
    }
    eprintln!("elapsed {:.2?}", start.elapsed());
}
