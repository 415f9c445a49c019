//! Batch checks over the census: table reproduction, enumerator identities,
//! ring transfer, closed-form distances and the weight-two reduction.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    canonical_form, census, count_with_weight_two, reduce_d2, CensusEntry, CensusOptions,
};
use crate::dna::{d_rc_exact, gc_contents, Involution, ResidueShape};
use crate::enumerators::{
    cwe, cwe_from_joint, gcw_closed_form, gcw_direct, joint_weight_enumerator,
};
use crate::error::{Error, Result};
use crate::gf2::BinaryCode;
use crate::golden::{drc_rows, psi};
use crate::qsd::{build_qsd, is_qsd, transfer_e_to_f, QsdCode, QsdRing, RingWord};

#[derive(Debug, Clone, Serialize)]
pub struct CellCheck {
    pub n: usize,
    pub k: usize,
    pub expected: Option<usize>,
    pub actual: usize,
}

impl CellCheck {
    pub fn matches(&self) -> bool {
        self.expected == Some(self.actual)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusCheck {
    pub cells: Vec<CellCheck>,
    #[serde(with = "as_secs")]
    pub elapsed: Duration,
}

mod as_secs {
    pub fn serialize<S: serde::Serializer>(
        d: &std::time::Duration,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }
}

impl CensusCheck {
    /// Every computed cell has a published value and agrees with it.
    pub fn all_match(&self) -> bool {
        self.cells.iter().all(CellCheck::matches)
    }

    pub fn mismatches(&self) -> Vec<&CellCheck> {
        self.cells.iter().filter(|c| !c.matches()).collect()
    }
}

/// Census cells for each length in `ns`, restricted to `k` when given.
pub fn census_cells(
    ns: &[usize],
    k: Option<usize>,
    opts: &CensusOptions,
) -> Result<Vec<CensusEntry>> {
    let mut out = Vec::new();
    for &n in ns {
        let entries = census(n, k, opts)?;
        match k {
            Some(k) if 2 * k > n => out.push(CensusEntry {
                n,
                k,
                representatives: Vec::new(),
                count: 0,
            }),
            Some(_) => out.push(entries.into_iter().last().expect("cell k computed")),
            None => out.extend(entries),
        }
    }
    Ok(out)
}

pub fn check_census(ns: &[usize], opts: &CensusOptions) -> Result<CensusCheck> {
    let start = Instant::now();
    let cells = census_cells(ns, None, opts)?
        .into_iter()
        .map(|e| CellCheck {
            n: e.n,
            k: e.k,
            expected: psi(e.n, e.k),
            actual: e.count,
        })
        .collect();
    Ok(CensusCheck {
        cells,
        elapsed: start.elapsed(),
    })
}

/// QSD codes over E for every census class of every length up to `max_n`.
pub fn census_qsd_codes(max_n: usize) -> Result<Vec<QsdCode>> {
    let opts = CensusOptions::with_max_n(max_n);
    let mut out = Vec::new();
    for n in 1..=max_n {
        for entry in census(n, None, &opts)? {
            for res in &entry.representatives {
                out.push(build_qsd(QsdRing::E, res)?);
            }
        }
    }
    Ok(out)
}

/// A printed or predicted value that the exact search does not reproduce.
#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    pub source: String,
    pub n: usize,
    pub residue: String,
    pub m: usize,
    pub claimed: u32,
    /// `None` when the GC-content-`m` subcode is empty.
    pub exact: Option<u32>,
    pub witness: Option<Involution>,
}

impl Discrepancy {
    pub fn line(&self) -> String {
        let exact = self
            .exact
            .map_or("undefined (empty subcode)".to_string(), |d| d.to_string());
        let witness = self
            .witness
            .as_ref()
            .map_or(String::new(), |w| format!(" witness {w}"));
        format!(
            "{}: n={} res=<{}> m={} claimed {} exact {}{}",
            self.source, self.n, self.residue, self.m, self.claimed, exact, witness
        )
    }
}

fn residue_label(res: &BinaryCode) -> String {
    res.row_words()
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, Serialize)]
pub struct RowCheck {
    pub n: usize,
    pub k1_printed: usize,
    pub k1: usize,
    pub residue: String,
    pub generator: Vec<String>,
    /// The printed generator matrix spans the code built from the residue.
    pub generator_matches: bool,
    pub printed: Vec<(usize, u32)>,
    /// Exact `(m, d_RC^m, witness)` for every GC-content present.
    pub exact: Vec<(usize, u32, Involution)>,
    pub discrepancies: Vec<Discrepancy>,
}

impl RowCheck {
    pub fn reproduced(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub rows: Vec<RowCheck>,
}

impl TableReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &Discrepancy> {
        self.rows.iter().flat_map(|r| &r.discrepancies)
    }

    pub fn all_reproduced(&self) -> bool {
        self.rows.iter().all(RowCheck::reproduced)
    }

    /// One line per row: `n,k1,residue,generator,exact,printed,status`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k1,residue,generator,d_rc,printed,status\n");
        for r in &self.rows {
            let exact: Vec<String> = r.exact.iter().map(|(m, d, _)| format!("{m}:{d}")).collect();
            let printed: Vec<String> = r.printed.iter().map(|(m, d)| format!("{m}:{d}")).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.n,
                r.k1,
                r.residue.replace(',', " "),
                r.generator.join(" "),
                exact.join(" "),
                printed.join(" "),
                if r.reproduced() { "ok" } else { "differs" }
            );
        }
        out
    }
}

/// Recomputes every row of the published d_RC tables up to length `max_n`.
pub fn regenerate_drc_tables(max_n: usize) -> Result<TableReport> {
    let rows: Vec<_> = drc_rows().iter().filter(|r| r.n <= max_n).collect();
    let checked = rows
        .par_iter()
        .map(|row| -> Result<RowCheck> {
            let code = build_qsd(QsdRing::E, &row.residue)?;
            let generator_matches =
                QsdCode::from_generator_matrix(QsdRing::E, row.n, &row.generator)
                    .map(|c| c == code)
                    .unwrap_or(false);
            let exact: Vec<(usize, u32, Involution)> = gc_contents(code.residue())
                .into_iter()
                .map(|m| d_rc_exact(&code, m).map(|p| (m, p.d_rc, p.witness)))
                .collect::<Result<_>>()?;
            let label = residue_label(&row.residue);
            let discrepancies = row
                .values
                .iter()
                .filter_map(|&(m, claimed)| {
                    let found = exact.iter().find(|(mm, _, _)| *mm == m);
                    match found {
                        Some((_, d, _)) if *d == claimed => None,
                        other => Some(Discrepancy {
                            source: "table".into(),
                            n: row.n,
                            residue: label.clone(),
                            m,
                            claimed,
                            exact: other.map(|(_, d, _)| *d),
                            witness: other.map(|(_, _, w)| w.clone()),
                        }),
                    }
                })
                .collect();
            Ok(RowCheck {
                n: row.n,
                k1_printed: row.k1_printed,
                k1: row.residue.dim(),
                residue: label,
                generator: code
                    .generator_matrix()
                    .iter()
                    .map(|w| w.to_string().replace(' ', ""))
                    .collect(),
                generator_matches,
                printed: row.values.clone(),
                exact,
                discrepancies,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReport { rows: checked })
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn collect(
        name: &str,
        codes: &[QsdCode],
        check: impl Fn(&QsdCode) -> Option<String> + Sync + Send,
    ) -> Self {
        let failures: Vec<String> = codes.par_iter().filter_map(check).collect();
        SuiteResult {
            name: name.into(),
            checked: codes.len(),
            failures,
        }
    }
}

fn describe(code: &QsdCode) -> String {
    format!("n={} res=<{}>", code.len(), residue_label(code.residue()))
}

/// CWE of the expanded code equals the joint enumerator of `(res, tor)`.
pub fn verify_joint_enumerator(codes: &[QsdCode]) -> SuiteResult {
    SuiteResult::collect(
        "complete enumerator = joint enumerator of (res, tor)",
        codes,
        |c| {
            let joint = joint_weight_enumerator(c.residue(), c.torsion()).expect("equal lengths");
            (cwe(c) != cwe_from_joint(&joint)).then(|| describe(c))
        },
    )
}

/// GC enumerator of the expanded code equals the scaled residue weight distribution.
pub fn verify_gc_enumerator(codes: &[QsdCode]) -> SuiteResult {
    SuiteResult::collect("GC enumerator = 2^(n-k1) * residue weights", codes, |c| {
        (gcw_direct(c) != gcw_closed_form(c.residue())).then(|| describe(c))
    })
}

/// Reading over F keeps the code QSD, with the same GC enumerator.
pub fn verify_transfer(codes: &[QsdCode]) -> SuiteResult {
    SuiteResult::collect(
        "E to F transfer stays QSD with equal GC enumerator",
        codes,
        |c| {
            let ok = transfer_e_to_f(c).is_ok_and(|f| {
                let words: Vec<RingWord> = f.codewords().collect();
                is_qsd(QsdRing::F, f.len(), &words) && gcw_direct(&f) == gcw_direct(c)
            });
            (!ok).then(|| describe(c))
        },
    )
}

/// Every expanded codeword set is QSD over its ring.
pub fn verify_qsd(codes: &[QsdCode]) -> SuiteResult {
    SuiteResult::collect("expanded code is QSD over E", codes, |c| {
        let words: Vec<RingWord> = c.codewords().collect();
        let ok = is_qsd(c.ring(), c.len(), &words)
            && c.residue().is_subcode_of(c.torsion())
            && c.torsion() == &c.residue().dual()
            && c.log2_size() == c.len();
        (!ok).then(|| describe(c))
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightTwoCell {
    pub n: usize,
    pub k: usize,
    pub with_weight_two: usize,
    pub reduced_classes: usize,
    pub target: usize,
}

impl WeightTwoCell {
    pub fn holds(&self) -> bool {
        self.with_weight_two == self.target && self.reduced_classes == self.target
    }
}

/// For each `(n, k)`, the classes containing a weight-2 word are counted and
/// reduced by puncturing; both numbers must equal the class count of `(n−2, k−1)`.
pub fn verify_weight_two(max_n: usize, opts: &CensusOptions) -> Result<Vec<WeightTwoCell>> {
    let cells: Vec<Vec<CensusEntry>> = (0..=max_n)
        .map(|n| census(n, None, opts))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for n in 2..=max_n {
        for entry in cells[n].iter().filter(|e| e.k >= 1) {
            let target = cells[n - 2].get(entry.k - 1).map_or(0, |e| e.count);
            let reduced: BTreeSet<BinaryCode> = entry
                .representatives
                .iter()
                .filter_map(|c| reduce_d2(c).ok())
                .map(|c| canonical_form(&c))
                .collect();
            out.push(WeightTwoCell {
                n,
                k: entry.k,
                with_weight_two: count_with_weight_two(entry),
                reduced_classes: reduced.len(),
                target,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaEntry {
    pub n: usize,
    pub residue: String,
    pub shape: ResidueShape,
    pub m: usize,
    pub predicted: u32,
    pub exact: u32,
    pub witness: Involution,
}

impl FormulaEntry {
    pub fn agrees(&self) -> bool {
        self.predicted == self.exact
    }

    pub fn family(&self) -> &'static str {
        self.shape.name()
    }

    pub fn discrepancy(&self) -> Discrepancy {
        Discrepancy {
            source: format!("{} formula", self.family()),
            n: self.n,
            residue: self.residue.clone(),
            m: self.m,
            claimed: self.predicted,
            exact: Some(self.exact),
            witness: Some(self.witness.clone()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaMatrix {
    pub entries: Vec<FormulaEntry>,
}

impl FormulaMatrix {
    pub fn family(&self, name: &str) -> impl Iterator<Item = &FormulaEntry> + '_ {
        let name = name.to_string();
        self.entries.iter().filter(move |e| e.family() == name)
    }

    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        self.entries
            .iter()
            .filter(|e| !e.agrees())
            .map(FormulaEntry::discrepancy)
            .collect()
    }

    /// Mismatches outside the overlap family, whose case boundaries are the
    /// only ones left open; the exact search decides those.
    pub fn unflagged_discrepancies(&self) -> Vec<Discrepancy> {
        self.entries
            .iter()
            .filter(|e| !e.agrees() && e.family() != "overlap")
            .map(FormulaEntry::discrepancy)
            .collect()
    }

    /// `(family, checked, agreeing)` per shape family.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize)> {
        ["one-generator", "disjoint", "overlap"]
            .into_iter()
            .map(|f| {
                let all: Vec<_> = self.family(f).collect();
                (f, all.len(), all.iter().filter(|e| e.agrees()).count())
            })
            .collect()
    }
}

/// Closed-form predictions against the exact search for every code whose
/// residue has a covered shape.
pub fn formula_matrix(codes: &[QsdCode]) -> Result<FormulaMatrix> {
    let per_code: Vec<Vec<FormulaEntry>> = codes
        .par_iter()
        .map(|c| -> Result<Vec<FormulaEntry>> {
            let shape = ResidueShape::detect(c.residue());
            let Some(predictions) = shape.predict(c.len()) else {
                return Ok(Vec::new());
            };
            predictions
                .into_iter()
                .map(|(m, predicted)| {
                    let p = d_rc_exact(c, m)?;
                    Ok(FormulaEntry {
                        n: c.len(),
                        residue: residue_label(c.residue()),
                        shape,
                        m,
                        predicted,
                        exact: p.d_rc,
                        witness: p.witness,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(FormulaMatrix {
        entries: per_code.into_iter().flatten().collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub suites: Vec<SuiteResult>,
    pub weight_two: Vec<WeightTwoCell>,
    pub formulas: FormulaMatrix,
    pub ring_isomorphisms: bool,
}

impl VerifyReport {
    /// Identities that must hold exactly; closed-form disagreements are reported, not fatal.
    pub fn identities_hold(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
            && self.weight_two.iter().all(WeightTwoCell::holds)
            && self.ring_isomorphisms
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "rings: isomorphisms and E/F distinctness ... {}",
            mark(self.ring_isomorphisms)
        );
        for s in &self.suites {
            let _ = writeln!(
                out,
                "{} over {} codes ... {}",
                s.name,
                s.checked,
                mark(s.passed())
            );
            for f in &s.failures {
                let _ = writeln!(out, "  failed: {f}");
            }
        }
        let ok = self.weight_two.iter().all(WeightTwoCell::holds);
        let _ = writeln!(
            out,
            "weight-two reduction over {} cells ... {}",
            self.weight_two.len(),
            mark(ok)
        );
        for (family, checked, agree) in self.formulas.summary() {
            let _ = writeln!(
                out,
                "{family} formula: {agree}/{checked} values agree with the exact search"
            );
        }
        for d in self.formulas.discrepancies() {
            let _ = writeln!(out, "  {}", d.line());
        }
        out
    }
}

/// Runs every identity suite over the census codes of length at most `max_n`.
pub fn verify_all(max_n: usize) -> Result<VerifyReport> {
    if max_n > 10 {
        return Err(Error::ResourceLimit {
            n: max_n,
            limit: 10,
        });
    }
    let codes = census_qsd_codes(max_n)?;
    let opts = CensusOptions::with_max_n(max_n.max(2));
    Ok(VerifyReport {
        max_n,
        suites: vec![
            verify_qsd(&codes),
            verify_joint_enumerator(&codes),
            verify_gc_enumerator(&codes),
            verify_transfer(&codes),
        ],
        weight_two: verify_weight_two(max_n, &opts)?,
        formulas: formula_matrix(&codes)?,
        ring_isomorphisms: crate::rings::verify_isomorphisms().all_hold(),
    })
}
