//! Runs every identity suite over the census codes of length at most N
//! (default 8) and prints the closed-form agreement matrix.
//!
//!     cargo run --release --example verify -- 8

fn main() -> qsd_dna::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let report = qsd_dna::reports::verify_all(max_n)?;
    print!("{}", report.text());
    Ok(())
}
