//! Prints the addition and multiplication tables of every ring of order four,
//! which side its GC map acts from, and the isomorphism checks.
//!
//!     cargo run --example ring_tables

use qsd_dna::rings::verify_isomorphisms;
use qsd_dna::{Ring4, RingElem};

fn main() {
    for ring in Ring4::all() {
        println!(
            "ring {} (char {}, alpha = {})",
            ring.name(),
            ring.characteristic(),
            ring.label(ring.alpha())
        );
        for x in RingElem::ALL {
            let row: Vec<&str> = RingElem::ALL
                .iter()
                .map(|&y| ring.label(ring.mul(x, y)))
                .collect();
            println!("  {:>2} * _ : {}", ring.label(x), row.join(" "));
        }
        match ring.gc_map() {
            Some(g) => println!("  GC map: {:?} action of {}", g.side, ring.label(g.beta)),
            None => println!("  no GC map"),
        }
    }
    let report = verify_isomorphisms();
    println!("isomorphisms hold: {}", report.all_hold());
}
