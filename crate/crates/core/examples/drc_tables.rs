//! Regenerates the published d_RC tables by exhaustive search and lists
//! every value the search does not reproduce.
//!
//!     cargo run --release --example drc_tables

use qsd_dna::reports::regenerate_drc_tables;

fn main() -> qsd_dna::Result<()> {
    let report = regenerate_drc_tables(8)?;
    print!("{}", report.to_csv());
    let misprints: Vec<_> = report
        .rows
        .iter()
        .filter(|r| r.k1 != r.k1_printed)
        .collect();
    for r in &misprints {
        println!(
            "row n={} <{}>: printed k1={} but the residue has dimension {}",
            r.n, r.residue, r.k1_printed, r.k1
        );
    }
    for r in report.rows.iter().filter(|r| !r.generator_matches) {
        println!(
            "row n={} <{}>: printed generator matrix does not span the code",
            r.n, r.residue
        );
    }
    for d in report.discrepancies() {
        println!("{}", d.line());
    }
    Ok(())
}
