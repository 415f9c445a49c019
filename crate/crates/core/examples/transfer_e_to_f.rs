//! Reads a QSD code over E as a code over F and checks that it stays QSD with
//! the same GC enumerator.
//!
//!     cargo run --example transfer_e_to_f

use qsd_dna::qsd::is_qsd;
use qsd_dna::{build_qsd, gcw_direct, transfer_e_to_f, BinaryCode, QsdRing, RingWord};

fn main() -> qsd_dna::Result<()> {
    let res = BinaryCode::from_rows(&["111100", "000011"])?;
    let over_e = build_qsd(QsdRing::E, &res)?;
    let over_f = transfer_e_to_f(&over_e)?;
    let words: Vec<RingWord> = over_f.codewords().collect();
    println!(
        "over F: {} words, QSD: {}",
        words.len(),
        is_qsd(QsdRing::F, over_f.len(), &words)
    );
    println!("GCW over E: {}", gcw_direct(&over_e));
    println!("GCW over F: {}", gcw_direct(&over_f));
    Ok(())
}
