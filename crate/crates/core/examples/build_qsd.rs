//! Builds the length-5 QSD code from residue <11000, 00110> and its DNA image.
//!
//!     cargo run --example build_qsd

use qsd_dna::dna::AlphabetMap;
use qsd_dna::{build_qsd, to_dna, BinaryCode, QsdRing};

fn main() -> qsd_dna::Result<()> {
    let res = BinaryCode::from_rows(&["11000", "00110"])?;
    let code = build_qsd(QsdRing::E, &res)?;
    println!("residue {res}, torsion {}", code.torsion());
    println!("generator matrix over E:\n{}", code.generator_text());
    println!(
        "|C| = 2^{}, self-orthogonal: {}",
        code.log2_size(),
        code.is_self_orthogonal()
    );
    let map = AlphabetMap::new(&QsdRing::E.ring())?;
    for w in code.codewords().take(8) {
        println!("{w}  ->  {}", map.word(&w));
    }
    let dna = to_dna(&code);
    println!("... {} words in all", dna.size());
    Ok(())
}
