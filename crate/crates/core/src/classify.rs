//! Classification of binary self-orthogonal codes up to coordinate permutation.
//!
//! Equivalence is decided through [`canonical_form`], an individualization and
//! refinement search: coordinates are coloured by how they sit inside the
//! codewords, colours are refined until stable, and ties are broken by
//! branching. Every discrete leaf gives a coordinate ordering and the smallest
//! resulting generator matrix is the certificate. Automorphisms found along the
//! way prune branches that would only reproduce known leaves.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{weight, BinaryCode, Permutation};

/// Largest length accepted by [`canonical_form`].
pub const CANONICAL_MAX_LEN: usize = 32;

struct Search<'a> {
    n: usize,
    code: &'a BinaryCode,
    words: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

impl<'a> Search<'a> {
    fn new(code: &'a BinaryCode) -> Self {
        let words: Vec<u64> = code.codewords().skip(1).collect();
        let n = code.len();
        let mut automorphisms = Vec::new();
        // identical columns can be swapped freely
        let columns: Vec<u64> = (0..n)
            .map(|i| {
                code.rows()
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (r, &row)| acc | ((row >> i & 1) << r))
            })
            .collect();
        for i in 0..n {
            if let Some(j) = (i + 1..n).find(|&j| columns[j] == columns[i]) {
                let mut g: Vec<usize> = (0..n).collect();
                g.swap(i, j);
                automorphisms.push(g);
            }
        }
        Search {
            n,
            code,
            words,
            best: None,
            first: None,
            automorphisms,
        }
    }

    fn initial_colours(&self) -> Vec<u32> {
        let keys: Vec<Vec<u32>> = (0..self.n)
            .map(|i| {
                let mut profile = vec![0u32; self.n + 1];
                for &w in &self.words {
                    if w >> i & 1 == 1 {
                        profile[weight(w) as usize] += 1;
                    }
                }
                profile
            })
            .collect();
        rank(&keys)
    }

    /// Refines `colours` until the number of cells stops growing.
    fn refine(&self, colours: &mut Vec<u32>) {
        let mut cells = count_cells(colours);
        while cells < self.n {
            let signatures: Vec<Vec<u8>> = self
                .words
                .iter()
                .map(|&w| {
                    let mut sig = vec![0u8; cells];
                    let mut rest = w;
                    while rest != 0 {
                        let i = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        sig[colours[i] as usize] += 1;
                    }
                    sig
                })
                .collect();
            let keys: Vec<(u32, Vec<&Vec<u8>>)> = (0..self.n)
                .map(|i| {
                    let mut seen: Vec<&Vec<u8>> = self
                        .words
                        .iter()
                        .zip(&signatures)
                        .filter(|(&w, _)| w >> i & 1 == 1)
                        .map(|(_, s)| s)
                        .collect();
                    seen.sort_unstable();
                    (colours[i], seen)
                })
                .collect();
            *colours = rank(&keys);
            let refined = count_cells(colours);
            if refined == cells {
                break;
            }
            cells = refined;
        }
    }

    fn leaf(&mut self, colours: &[u32]) {
        let mut order = vec![0usize; self.n];
        for (i, &c) in colours.iter().enumerate() {
            order[c as usize] = i;
        }
        let sigma = Permutation::from_order(&order).expect("discrete partition is an ordering");
        let cert = self
            .code
            .permute(&sigma)
            .expect("lengths agree")
            .rows()
            .to_vec();
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == cert && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                let mut g = vec![0usize; self.n];
                for p in 0..self.n {
                    g[known.1[p]] = order[p];
                }
                if g.iter().enumerate().any(|(i, &x)| i != x) {
                    self.automorphisms.push(g);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), order.clone()));
        }
        if self.best.as_ref().is_none_or(|b| cert < b.0) {
            self.best = Some((cert, order));
        }
    }

    fn explore(&mut self, mut colours: Vec<u32>, path: &mut Vec<usize>) {
        self.refine(&mut colours);
        let cells = count_cells(&colours);
        if cells == self.n {
            self.leaf(&colours);
            return;
        }
        let target = (0..cells as u32)
            .find(|&c| colours.iter().filter(|&&x| x == c).count() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let members: Vec<usize> = (0..self.n).filter(|&i| colours[i] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if !tried.is_empty() {
                let orbit_of = self.stabiliser_orbits(path);
                if tried.iter().any(|&u| orbit_of[u] == orbit_of[v]) {
                    continue;
                }
            }
            tried.push(v);
            let child: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    if c > target || (c == target && i != v) {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            path.push(v);
            self.explore(child, path);
            path.pop();
        }
    }

    /// Orbit labels under the known automorphisms that fix `path` pointwise.
    fn stabiliser_orbits(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.automorphisms {
            if path.iter().all(|&p| g[p] == p) {
                for (i, &j) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.n).map(|i| find(&mut parent, i)).collect()
    }
}

fn count_cells(colours: &[u32]) -> usize {
    colours.iter().max().map_or(0, |&m| m as usize + 1)
}

fn rank<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present") as u32)
        .collect()
}

/// The canonical representative of the permutation class of `code`.
///
/// Two codes of the same length are permutation-equivalent iff their canonical
/// forms are equal. The representative is the smallest RREF generator matrix
/// (compared row by row as integers) among the leaves of the refinement search.
pub fn canonical_form(code: &BinaryCode) -> BinaryCode {
    canonical_form_with_order(code).0
}

/// Canonical form together with a coordinate ordering that produces it:
/// coordinate `order[p]` of `code` lands at position `p`.
pub fn canonical_form_with_order(code: &BinaryCode) -> (BinaryCode, Vec<usize>) {
    assert!(
        code.len() <= CANONICAL_MAX_LEN,
        "canonical form supports n <= {CANONICAL_MAX_LEN}"
    );
    if code.is_empty() {
        return (code.clone(), Vec::new());
    }
    let mut search = Search::new(code);
    let colours = search.initial_colours();
    search.explore(colours, &mut Vec::new());
    let (_, order) = search.best.expect("search reaches at least one leaf");
    let sigma = Permutation::from_order(&order).expect("valid ordering");
    (code.permute(&sigma).expect("lengths agree"), order)
}

pub fn are_equivalent(x: &BinaryCode, y: &BinaryCode) -> bool {
    x.len() == y.len()
        && x.dim() == y.dim()
        && x.weight_distribution() == y.weight_distribution()
        && canonical_form(x) == canonical_form(y)
}

/// One cell of the census: all inequivalent self-orthogonal `[n, k]` codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    pub k: usize,
    pub representatives: Vec<BinaryCode>,
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Lengths above this are refused with [`Error::ResourceLimit`].
    pub max_n: usize,
    pub budget: Option<Duration>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_n: 12,
            budget: None,
        }
    }
}

impl CensusOptions {
    pub fn with_max_n(max_n: usize) -> Self {
        CensusOptions {
            max_n,
            ..Default::default()
        }
    }
}

/// Canonical children of `parent`: spans of `parent` with one more even
/// vector from its dual, one vector per coset of `parent`.
fn augment(parent: &BinaryCode) -> BTreeSet<BinaryCode> {
    let n = parent.len();
    let mut reps: BTreeSet<u64> = BTreeSet::new();
    for v in parent.dual().codewords() {
        if weight(v).is_multiple_of(2) {
            let r = parent.reduce(v);
            if r != 0 {
                reps.insert(r);
            }
        }
    }
    reps.into_iter()
        .map(|v| {
            let child = BinaryCode::from_generators(n, parent.rows().iter().copied().chain([v]))
                .expect("child has the parent's length");
            canonical_form(&child)
        })
        .collect()
}

struct Deadline {
    at: Option<Instant>,
    expired: AtomicBool,
}

impl Deadline {
    fn new(budget: Option<Duration>) -> Self {
        Deadline {
            at: budget.map(|b| Instant::now() + b),
            expired: AtomicBool::new(false),
        }
    }

    fn check(&self) -> bool {
        if self.expired.load(Ordering::Relaxed) {
            return false;
        }
        if self.at.is_some_and(|at| Instant::now() > at) {
            self.expired.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

fn next_cell(parents: &[BinaryCode], deadline: &Deadline) -> Result<Vec<BinaryCode>> {
    let children: Vec<Option<BTreeSet<BinaryCode>>> = parents
        .par_iter()
        .map(|p| deadline.check().then(|| augment(p)))
        .collect();
    let mut all = BTreeSet::new();
    for c in children {
        all.extend(c.ok_or(Error::BudgetExceeded)?);
    }
    Ok(all.into_iter().collect())
}

/// Every cell `(n, 0), (n, 1), …` up to `max_k` (default: all nonempty cells).
pub fn census(n: usize, max_k: Option<usize>, opts: &CensusOptions) -> Result<Vec<CensusEntry>> {
    if n > opts.max_n {
        return Err(Error::ResourceLimit {
            n,
            limit: opts.max_n,
        });
    }
    if n > CANONICAL_MAX_LEN {
        return Err(Error::LengthOutOfRange(n));
    }
    let deadline = Deadline::new(opts.budget);
    let top = max_k.unwrap_or(n / 2).min(n / 2);
    let mut reps = vec![BinaryCode::zero(n)];
    let mut out = Vec::with_capacity(top + 1);
    for k in 0..=top {
        if k > 0 {
            reps = next_cell(&reps, &deadline)?;
        }
        out.push(CensusEntry {
            n,
            k,
            count: reps.len(),
            representatives: reps.clone(),
        });
    }
    Ok(out)
}

/// The single cell `(n, k)`; empty when `2k > n`.
pub fn classify_so(n: usize, k: usize, opts: &CensusOptions) -> Result<CensusEntry> {
    if 2 * k > n {
        if n > opts.max_n {
            return Err(Error::ResourceLimit {
                n,
                limit: opts.max_n,
            });
        }
        return Ok(CensusEntry {
            n,
            k,
            representatives: Vec::new(),
            count: 0,
        });
    }
    Ok(census(n, Some(k), opts)?
        .pop()
        .expect("census returns cell k"))
}

/// The smallest weight-2 codeword, if any.
pub fn weight_two_word(code: &BinaryCode) -> Option<u64> {
    code.codewords().filter(|&w| weight(w) == 2).min()
}

pub fn contains_weight_two(code: &BinaryCode) -> bool {
    weight_two_word(code).is_some()
}

/// Punctures the support of the smallest weight-2 codeword, giving a
/// self-orthogonal `[n − 2, k − 1]` code.
pub fn reduce_d2(code: &BinaryCode) -> Result<BinaryCode> {
    let w = weight_two_word(code).ok_or(Error::NoWeightTwoWord)?;
    Ok(code.puncture(w))
}

/// Appends two coordinates and the word `0…011`; inverse of [`reduce_d2`] on classes.
pub fn pad_d2(code: &BinaryCode) -> Result<BinaryCode> {
    let n = code.len();
    BinaryCode::from_generators(n + 2, code.rows().iter().copied().chain([0b11 << n]))
}

pub fn census_counts(entries: &[CensusEntry]) -> Vec<usize> {
    entries.iter().map(|e| e.count).collect()
}

/// Number of classes in `entry` whose codes contain a weight-2 word.
pub fn count_with_weight_two(entry: &CensusEntry) -> usize {
    entry
        .representatives
        .iter()
        .filter(|c| contains_weight_two(c))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&str]) -> BinaryCode {
        BinaryCode::from_rows(rows).unwrap()
    }

    #[test]
    fn relabelled_single_words_agree() {
        assert_eq!(
            canonical_form(&code(&["00110"])),
            canonical_form(&code(&["11000"]))
        );
        assert_ne!(
            canonical_form(&code(&["1111"])),
            canonical_form(&code(&["1100", "0011"]))
        );
        assert!(are_equivalent(
            &code(&["110000", "001111"]),
            &code(&["011110", "100001"])
        ));
        assert!(!are_equivalent(
            &code(&["111100", "001111"]),
            &code(&["111100", "000011"])
        ));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = code(&["11110000", "00111100", "00000011"]);
        let f = canonical_form(&c);
        assert_eq!(canonical_form(&f), f);
        let (g, order) = canonical_form_with_order(&c);
        assert_eq!(
            c.permute(&Permutation::from_order(&order).unwrap())
                .unwrap(),
            g
        );
    }

    #[test]
    fn small_census_counts() {
        let opts = CensusOptions::default();
        assert_eq!(classify_so(4, 1, &opts).unwrap().count, 2);
        assert_eq!(classify_so(2, 1, &opts).unwrap().count, 1);
        for n in 1..=8 {
            assert_eq!(classify_so(n, 0, &opts).unwrap().count, 1);
        }
        let cells = census_counts(&census(8, None, &opts).unwrap());
        assert_eq!(cells, [1, 4, 6, 5, 2]);
    }

    #[test]
    fn census_representatives_are_self_orthogonal_and_distinct() {
        for entry in census(8, None, &CensusOptions::default()).unwrap() {
            for (i, c) in entry.representatives.iter().enumerate() {
                assert!(c.is_self_orthogonal());
                assert_eq!(c.dim(), entry.k);
                assert_eq!(&canonical_form(c), c);
                for d in &entry.representatives[i + 1..] {
                    assert_ne!(canonical_form(c), canonical_form(d));
                }
            }
        }
    }

    #[test]
    fn resource_limit_and_budget() {
        let opts = CensusOptions::with_max_n(6);
        assert_eq!(
            census(7, None, &opts),
            Err(Error::ResourceLimit { n: 7, limit: 6 })
        );
        let tight = CensusOptions {
            max_n: 12,
            budget: Some(Duration::ZERO),
        };
        std::thread::sleep(Duration::from_millis(2));
        assert_eq!(census(10, None, &tight), Err(Error::BudgetExceeded));
    }

    #[test]
    fn weight_two_reduction() {
        let c = code(&["1100", "0011"]);
        assert_eq!(reduce_d2(&c).unwrap(), code(&["11"]));
        assert_eq!(reduce_d2(&code(&["1111"])), Err(Error::NoWeightTwoWord));
        let padded = pad_d2(&code(&["111100"])).unwrap();
        assert!(padded.is_self_orthogonal());
        assert_eq!(padded.dim(), 2);
        assert_eq!(
            canonical_form(&reduce_d2(&padded).unwrap()),
            canonical_form(&code(&["111100"]))
        );
    }
}
