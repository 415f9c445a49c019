//! Quasi-self-dual codes over the two non-commutative rings of order four
//! and the DNA codes they induce.
//!
//! The pieces, bottom up:
//!
//! * [`gf2`]: binary linear codes packed into `u64` rows.
//! * [`rings`]: the eleven rings of order four, their GC maps, and the
//!   isomorphism checks between them.
//! * [`classify`]: canonical forms under coordinate permutations and the
//!   census of self-orthogonal binary codes.
//! * [`qsd`]: words and QSD codes over `E` and `F`, built from a
//!   self-orthogonal residue `B` as `a·B ⊕ c·B⊥`.
//! * [`enumerators`]: complete, joint and GC weight enumerators.
//! * [`dna`]: the DNA alphabet map and reverse-complement distances.
//! * [`reports`]: batch checks behind the CLI and the acceptance suite.
//!
//! ```
//! use qsd_dna::{build_qsd, gcw_direct, BinaryCode, QsdRing};
//!
//! let res = BinaryCode::from_rows(&["11000", "00110"])?;
//! let code = build_qsd(QsdRing::E, &res)?;
//! assert_eq!(code.log2_size(), 5);
//! assert_eq!(gcw_direct(&code).to_string(), "8x^4y + 16x^2y^3 + 8y^5");
//! # Ok::<(), qsd_dna::Error>(())
//! ```

pub mod classify;
pub mod dna;
pub mod enumerators;
pub mod error;
pub mod gf2;
pub mod golden;
pub mod qsd;
pub mod reports;
pub mod rings;

pub use classify::{are_equivalent, canonical_form, census, CensusEntry, CensusOptions};
pub use dna::{
    d_rc_exact, d_rc_profile, to_dna, DnaCode, DnaWord, Involution, Nucleotide, RcProfile,
    ResidueShape,
};
pub use enumerators::{
    cwe, gcw_closed_form, gcw_direct, joint_weight_enumerator, WeightEnumerator,
};
pub use error::{Error, Result};
pub use gf2::{BinaryCode, Permutation};
pub use qsd::{build_qsd, transfer_e_to_f, QsdCode, QsdRing, RingWord};
pub use rings::{Ring4, RingElem, RingName};
