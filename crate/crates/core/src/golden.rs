//! Published reference tables, embedded at build time.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::gf2::BinaryCode;
use crate::qsd::{QsdRing, RingWord};

const PSI_CSV: &str = include_str!("../data/psi_table.csv");
const DRC_CSV: &str = include_str!("../data/drc_table.csv");

/// Largest length in the published d_RC tables.
pub const DRC_MAX_N: usize = 8;

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes())
}

/// Published counts of inequivalent self-orthogonal `[n, k]` codes, `n ≤ 15`.
pub fn psi_table() -> &'static BTreeMap<(usize, usize), usize> {
    static TABLE: OnceLock<BTreeMap<(usize, usize), usize>> = OnceLock::new();
    TABLE.get_or_init(|| {
        reader(PSI_CSV)
            .records()
            .map(|r| {
                let r = r.expect("embedded table is well formed");
                let field = |i: usize| r[i].trim().parse::<usize>().expect("integer field");
                ((field(0), field(1)), field(2))
            })
            .collect()
    })
}

pub fn psi(n: usize, k: usize) -> Option<usize> {
    psi_table().get(&(n, k)).copied()
}

/// One row of the published d_RC tables.
#[derive(Debug, Clone)]
pub struct DrcRow {
    pub n: usize,
    /// Residue dimension as printed, which can disagree with the generators.
    pub k1_printed: usize,
    pub residue: BinaryCode,
    /// Printed generator matrix over E.
    pub generator: Vec<RingWord>,
    /// Printed `(m, d_RC^m)` pairs.
    pub values: Vec<(usize, u32)>,
}

pub fn drc_rows() -> &'static [DrcRow] {
    static ROWS: OnceLock<Vec<DrcRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let mut out = Vec::new();
        for r in reader(DRC_CSV).records() {
            let r = r.expect("embedded table is well formed");
            let k1_printed: usize = r[1].trim().parse().expect("k1 field");
            let values: Vec<(usize, u32)> = r[4]
                .split_whitespace()
                .map(|p| {
                    let (m, d) = p.split_once(':').expect("m:d pair");
                    (m.parse().expect("m"), d.parse().expect("d"))
                })
                .collect();
            let lengths: Vec<usize> = match r[0].trim() {
                "*" => (1..=DRC_MAX_N).collect(),
                n => vec![n.parse().expect("length field")],
            };
            for n in lengths {
                let expand = |row: &str| {
                    if r[0].trim() == "*" {
                        row.repeat(n)
                    } else {
                        row.to_string()
                    }
                };
                let residue_rows: Vec<String> = r[2].split_whitespace().map(expand).collect();
                let generator = r[3]
                    .split_whitespace()
                    .map(|g| RingWord::parse(QsdRing::E, &expand(g)).expect("symbol row"))
                    .collect();
                out.push(DrcRow {
                    n,
                    k1_printed,
                    residue: BinaryCode::from_rows(&residue_rows).expect("binary rows"),
                    generator,
                    values: values.clone(),
                });
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_entries() {
        assert_eq!(psi(8, 2), Some(6));
        assert_eq!(psi(10, 5), Some(2));
        assert_eq!(psi(14, 6), Some(27));
        assert_eq!(psi(15, 6), Some(48));
        assert_eq!(psi(10, 6), None);
        assert_eq!(psi_table().keys().filter(|(n, _)| *n <= 10).count(), 35);
    }

    #[test]
    fn drc_rows_parse() {
        let rows = drc_rows();
        assert_eq!(rows.len(), 8 + 39);
        let n5 = rows
            .iter()
            .find(|r| r.n == 5 && r.residue.dim() == 2)
            .unwrap();
        assert_eq!(n5.values, [(2, 2), (4, 2)]);
        let zero7 = rows.iter().find(|r| r.n == 7 && r.k1_printed == 0).unwrap();
        assert_eq!(zero7.generator[0].to_string(), "c c c c c c c");
        let misprint = rows
            .iter()
            .find(|r| r.n == 6 && r.residue.dim() == 3)
            .unwrap();
        assert_eq!(misprint.k1_printed, 2);
    }
}
