//! Exact reverse-complement distance of each fixed-GC subcode, with the
//! coordinate pairing that attains it and a permutation realizing that pairing.
//!
//!     cargo run --release --example reverse_complement -- 11110000 00001111

use qsd_dna::{build_qsd, d_rc_profile, BinaryCode, QsdRing, ResidueShape};

fn main() -> qsd_dna::Result<()> {
    let mut rows: Vec<String> = std::env::args().skip(1).collect();
    if rows.is_empty() {
        rows = vec!["11000".into(), "00110".into()];
    }
    let rows: Vec<&str> = rows.iter().map(String::as_str).collect();
    let code = build_qsd(QsdRing::E, &BinaryCode::from_rows(&rows)?)?;
    let shape = ResidueShape::detect(code.residue());
    let predicted = shape.predict(code.len()).unwrap_or_default();
    println!("residue {} ({} shape)", code.residue(), shape.name());
    for p in d_rc_profile(&code) {
        let formula = predicted
            .iter()
            .find(|(m, _)| *m == p.m)
            .map_or("-".to_string(), |(_, d)| d.to_string());
        println!(
            "d_RC^{} = {:>2}  closed form {:>2}  pairing {}  permutation {:?}",
            p.m,
            p.d_rc,
            formula,
            p.witness,
            p.witness.to_permutation().images()
        );
    }
    Ok(())
}
