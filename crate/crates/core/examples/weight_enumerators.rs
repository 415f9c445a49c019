//! Complete, joint and GC weight enumerators of a QSD code, computed from the
//! codewords and from the residue alone.
//!
//!     cargo run --example weight_enumerators -- 1111000 0000110

use qsd_dna::enumerators::{cwe_from_joint, fixed_gc_subcode_size};
use qsd_dna::{
    build_qsd, cwe, gcw_closed_form, gcw_direct, joint_weight_enumerator, BinaryCode, QsdRing,
};

fn main() -> qsd_dna::Result<()> {
    let mut rows: Vec<String> = std::env::args().skip(1).collect();
    if rows.is_empty() {
        rows = vec!["11000".into(), "00110".into()];
    }
    let rows: Vec<&str> = rows.iter().map(String::as_str).collect();
    let code = build_qsd(QsdRing::E, &BinaryCode::from_rows(&rows)?)?;

    let complete = cwe(&code);
    let joint = joint_weight_enumerator(code.residue(), code.torsion())?;
    println!("CWE  = {complete}");
    println!("J    = {joint}");
    println!("CWE from J agrees: {}", cwe_from_joint(&joint) == complete);

    let gcw = gcw_direct(&code);
    println!("GCW  = {gcw}");
    println!(
        "closed form agrees: {}",
        gcw == gcw_closed_form(code.residue())
    );
    for m in 0..=code.len() {
        let size = fixed_gc_subcode_size(&gcw, m);
        if size > 0 {
            println!("  GC-content {m}: {size} words");
        }
    }
    Ok(())
}
