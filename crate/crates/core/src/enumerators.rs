//! Complete, joint and GC weight enumerators with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{mask, BinaryCode};
use crate::qsd::{QsdCode, RingWord};

/// A homogeneous polynomial of degree `n` in 2 or 4 variables.
///
/// Four-variable enumerators use `(w, x, y, z)` for the symbols `(0, a, b, c)`,
/// which the DNA map reads as `(A, G, C, T)`. Two-variable GC enumerators use
/// `x` for G/C positions and `y` for A/T positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    n: usize,
    arity: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl WeightEnumerator {
    pub fn new(n: usize, arity: usize) -> Self {
        assert!(
            arity == 2 || arity == 4,
            "enumerators have 2 or 4 variables"
        );
        WeightEnumerator {
            n,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coefficient: u64) {
        debug_assert_eq!(exponents.len(), self.arity);
        debug_assert_eq!(exponents.iter().sum::<u32>() as usize, self.n);
        if coefficient != 0 {
            *self.terms.entry(exponents).or_insert(0) += coefficient;
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `(w, x, y, z) ↦ (y, x, x, y)`: GC positions to `x`, AT positions to `y`.
    pub fn gc_specialization(&self) -> WeightEnumerator {
        assert_eq!(self.arity, 4);
        let mut out = WeightEnumerator::new(self.n, 2);
        for (e, &c) in &self.terms {
            out.add_term(vec![e[1] + e[2], e[0] + e[3]], c);
        }
        out
    }

    fn variables(&self) -> &'static [&'static str] {
        if self.arity == 4 {
            &["w", "x", "y", "z"]
        } else {
            &["x", "y"]
        }
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.variables();
        // highest powers of the first variable first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut mono = String::new();
            for (v, &p) in vars.iter().zip(e) {
                match p {
                    0 => {}
                    1 => mono.push_str(v),
                    _ => mono.push_str(&format!("{v}^{p}")),
                }
            }
            match (*c, mono.is_empty()) {
                (c, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&mono)?,
                (c, false) => write!(f, "{c}{mono}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term<'a> {
    exponents: &'a [u32],
    coefficient: u64,
}

impl Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(e, &c)| Term {
                exponents: e,
                coefficient: c,
            })
            .collect();
        let mut st = serializer.serialize_struct("WeightEnumerator", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("variables", self.variables())?;
        st.serialize_field("polynomial", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Complete weight enumerator of a list of words of length `n`.
pub fn cwe_of_words(n: usize, words: impl IntoIterator<Item = RingWord>) -> WeightEnumerator {
    let mut out = WeightEnumerator::new(n, 4);
    for w in words {
        out.add_term(w.symbol_counts().to_vec(), 1);
    }
    out
}

pub fn cwe(code: &QsdCode) -> WeightEnumerator {
    cwe_of_words(code.len(), code.codewords())
}

/// `J(A, B) = Σ w^i x^j y^k z^l` over pairs `(u, v) ∈ A × B`, where `i, j, k, l`
/// count positions with `(uᵢ, vᵢ) = (0,0), (0,1), (1,0), (1,1)`.
pub fn joint_weight_enumerator(a: &BinaryCode, b: &BinaryCode) -> Result<WeightEnumerator> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    let m = mask(n);
    let mut out = WeightEnumerator::new(n, 4);
    for u in a.codewords() {
        for v in b.codewords() {
            out.add_term(
                vec![
                    (!u & !v & m).count_ones(),
                    (!u & v).count_ones(),
                    (u & !v).count_ones(),
                    (u & v).count_ones(),
                ],
                1,
            );
        }
    }
    Ok(out)
}

/// Renames the joint enumerator of `(res, tor)` into CWE variables: a
/// position `(s, t)` holds `a·s + c·t`, so `(0,1) ↦ c`, `(1,0) ↦ a`, `(1,1) ↦ b`.
pub fn cwe_from_joint(joint: &WeightEnumerator) -> WeightEnumerator {
    let mut out = WeightEnumerator::new(joint.n, 4);
    for (e, &c) in &joint.terms {
        out.add_term(vec![e[0], e[2], e[3], e[1]], c);
    }
    out
}

/// GC enumerator read off the expanded code.
pub fn gcw_direct(code: &QsdCode) -> WeightEnumerator {
    cwe(code).gc_specialization()
}

/// `Σ 2^{n−k₁} Aᵢ(res) x^i y^{n−i}`.
pub fn gcw_closed_form(res: &BinaryCode) -> WeightEnumerator {
    let n = res.len();
    let scale = 1u64 << (n - res.dim());
    let mut out = WeightEnumerator::new(n, 2);
    for (i, &a) in res.weight_distribution().counts().iter().enumerate() {
        out.add_term(vec![i as u32, (n - i) as u32], scale * a);
    }
    out
}

/// Number of codewords with GC-content `m`, read from a GC enumerator.
pub fn fixed_gc_subcode_size(gcw: &WeightEnumerator, m: usize) -> u64 {
    assert_eq!(gcw.arity, 2);
    if m > gcw.n {
        return 0;
    }
    gcw.coefficient(&[m as u32, (gcw.n - m) as u32])
}
