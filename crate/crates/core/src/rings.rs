//! The eleven rings of order four as validated lookup tables.
//!
//! Characteristic-2 rings use the element order `(0, a, b, c)` with
//! `c = a + b`; the index of an element is the bit pattern of its coordinates
//! over the additive basis `{a, b}`, so addition is XOR. Characteristic-4 rings
//! use `(0, a, 2a, 3a)` and index `k` stands for `k·a`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingName {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
}

impl RingName {
    pub const ALL: [RingName; 11] = [
        RingName::A,
        RingName::B,
        RingName::C,
        RingName::D,
        RingName::E,
        RingName::F,
        RingName::G,
        RingName::H,
        RingName::I,
        RingName::J,
        RingName::K,
    ];
}

impl fmt::Display for RingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for RingName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingName::ALL
            .into_iter()
            .find(|r| r.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown ring {s:?}")))
    }
}

/// An element of a ring of order four, by table index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElem(u8);

impl RingElem {
    pub const ZERO: RingElem = RingElem(0);
    pub const A: RingElem = RingElem(1);
    pub const B: RingElem = RingElem(2);
    pub const C: RingElem = RingElem(3);

    pub const ALL: [RingElem; 4] = [RingElem(0), RingElem(1), RingElem(2), RingElem(3)];

    pub fn new(index: u8) -> Result<Self> {
        if index < 4 {
            Ok(RingElem(index))
        } else {
            Err(Error::Parse(format!("element index {index} out of range")))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The pair `(s, t)` with `self = a·s + c·t` in the characteristic-2 labelling.
    pub fn to_pair(self) -> (bool, bool) {
        match self.0 {
            0 => (false, false),
            1 => (true, false),
            2 => (true, true),
            _ => (false, true),
        }
    }

    pub fn from_pair(s: bool, t: bool) -> RingElem {
        match (s, t) {
            (false, false) => RingElem(0),
            (true, false) => RingElem(1),
            (true, true) => RingElem(2),
            (false, true) => RingElem(3),
        }
    }

    /// Symbol in the characteristic-2 labelling.
    pub fn symbol(self) -> char {
        ['0', 'a', 'b', 'c'][self.index()]
    }

    pub fn from_symbol(ch: char) -> Result<RingElem> {
        match ch {
            '0' => Ok(RingElem(0)),
            'a' => Ok(RingElem(1)),
            'b' => Ok(RingElem(2)),
            'c' => Ok(RingElem(3)),
            other => Err(Error::Parse(format!("unknown ring symbol {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A GC-content map `x ↦ βx` (left) or `x ↦ xβ` (right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GcMap {
    pub beta: RingElem,
    pub side: Side,
}

pub type Table = [[u8; 4]; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring4 {
    name: RingName,
    characteristic: u8,
    add: Table,
    mul: Table,
    alpha: RingElem,
    gc: Option<GcMap>,
}

fn char2_tables(aa: u8, ab: u8, ba: u8, bb: u8) -> (Table, Table) {
    let mut add = [[0; 4]; 4];
    let mut mul = [[0; 4]; 4];
    let basis = [[aa, ab], [ba, bb]];
    for x in 0..4u8 {
        for y in 0..4u8 {
            add[x as usize][y as usize] = x ^ y;
            let mut p = 0;
            for (i, row) in basis.iter().enumerate() {
                for (j, &b) in row.iter().enumerate() {
                    if x >> i & 1 == 1 && y >> j & 1 == 1 {
                        p ^= b;
                    }
                }
            }
            mul[x as usize][y as usize] = p;
        }
    }
    (add, mul)
}

fn char4_tables(square: u8) -> (Table, Table) {
    let mut add = [[0; 4]; 4];
    let mut mul = [[0; 4]; 4];
    for x in 0..4u8 {
        for y in 0..4u8 {
            add[x as usize][y as usize] = (x + y) % 4;
            mul[x as usize][y as usize] = (x * y * square) % 4;
        }
    }
    (add, mul)
}

impl Ring4 {
    /// The ring `name` built from its presentation.
    pub fn new(name: RingName) -> Ring4 {
        use RingName::*;
        let left = |b: u8| {
            Some(GcMap {
                beta: RingElem(b),
                side: Side::Left,
            })
        };
        let (characteristic, (add, mul), alpha, gc) = match name {
            A => (4, char4_tables(1), 2, left(2)),
            B => (4, char4_tables(2), 2, left(1)),
            C => (4, char4_tables(0), 2, None),
            D => (2, char2_tables(1, 0, 0, 2), 2, left(1)),
            E => (2, char2_tables(1, 1, 2, 2), 3, left(1)),
            F => (
                2,
                char2_tables(1, 2, 1, 2),
                3,
                Some(GcMap {
                    beta: RingElem(1),
                    side: Side::Right,
                }),
            ),
            G => (2, char2_tables(0, 1, 1, 2), 1, left(1)),
            H => (2, char2_tables(0, 0, 0, 2), 1, left(2)),
            I => (2, char2_tables(2, 0, 0, 0), 2, left(1)),
            J => (2, char2_tables(0, 0, 0, 0), 3, None),
            K => (2, char2_tables(1, 2, 2, 3), 3, None),
        };
        Ring4::from_tables(name, characteristic, add, mul, RingElem(alpha), gc)
            .expect("built-in ring tables are valid")
    }

    /// Validates and assembles a ring from explicit tables.
    pub fn from_tables(
        name: RingName,
        characteristic: u8,
        add: Table,
        mul: Table,
        alpha: RingElem,
        gc: Option<GcMap>,
    ) -> Result<Ring4> {
        let ring = Ring4 {
            name,
            characteristic,
            add,
            mul,
            alpha,
            gc,
        };
        ring.validate()?;
        Ok(ring)
    }

    pub fn all() -> Vec<Ring4> {
        RingName::ALL.into_iter().map(Ring4::new).collect()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRing(self.name, msg));
        let els = RingElem::ALL;
        for x in els {
            if self.add(RingElem::ZERO, x) != x {
                return bad(format!("0 is not an additive identity for {x:?}"));
            }
            if !els.iter().any(|&y| self.add(x, y) == RingElem::ZERO) {
                return bad(format!("{x:?} has no additive inverse"));
            }
            if self.characteristic == 2 && self.add(x, x) != RingElem::ZERO {
                return bad(format!("x + x != 0 for {x:?}"));
            }
            for y in els {
                if self.add(x, y) != self.add(y, x) {
                    return bad("addition is not commutative".into());
                }
                for z in els {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return bad("addition is not associative".into());
                    }
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return bad(format!("({x:?}{y:?}){z:?} != {x:?}({y:?}{z:?})"));
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return bad("left distributivity fails".into());
                    }
                    if self.mul(self.add(x, y), z) != self.add(self.mul(x, z), self.mul(y, z)) {
                        return bad("right distributivity fails".into());
                    }
                }
            }
        }
        if self.characteristic == 4
            && self.add(RingElem::A, self.add(RingElem::A, RingElem::A)) == RingElem::ZERO
        {
            return bad("characteristic-4 table has 3a = 0".into());
        }
        if self.alpha == RingElem::ZERO || self.add(self.alpha, self.alpha) != RingElem::ZERO {
            return bad(format!(
                "{:?} does not define a fixed-point-free involution",
                self.alpha
            ));
        }
        if let Some(gc) = self.gc {
            if !self.gc_map_candidates().contains(&gc) {
                return bad(format!("{gc:?} is not a valid GC-content map"));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> RingName {
        self.name
    }

    pub fn characteristic(&self) -> u8 {
        self.characteristic
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn alpha(&self) -> RingElem {
        self.alpha
    }

    pub fn gc_map(&self) -> Option<GcMap> {
        self.gc
    }

    #[inline]
    pub fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem(self.add[x.index()][y.index()])
    }

    #[inline]
    pub fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem(self.mul[x.index()][y.index()])
    }

    /// Watson–Crick complement `x ↦ x + α`.
    pub fn complement(&self, x: RingElem) -> RingElem {
        self.add(x, self.alpha)
    }

    /// One iff `x` stands for G or C.
    pub fn gc_content(&self, x: RingElem) -> Result<bool> {
        let gc = self.gc.ok_or(Error::NoGcMap(self.name))?;
        Ok(self.apply_gc(gc, x) != RingElem::ZERO)
    }

    fn apply_gc(&self, gc: GcMap, x: RingElem) -> RingElem {
        match gc.side {
            Side::Left => self.mul(gc.beta, x),
            Side::Right => self.mul(x, gc.beta),
        }
    }

    /// Every `(β, side)` whose multiplication map has image `{0, r}`, two
    /// elements per fibre, and `{0, α}` as the zero fibre.
    pub fn gc_map_candidates(&self) -> Vec<GcMap> {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            for beta in RingElem::ALL {
                let gc = GcMap { beta, side };
                let images = RingElem::ALL.map(|x| self.apply_gc(gc, x));
                let zero_fibre: Vec<RingElem> = RingElem::ALL
                    .into_iter()
                    .filter(|x| images[x.index()] == RingElem::ZERO)
                    .collect();
                let mut nonzero: Vec<RingElem> = images
                    .into_iter()
                    .filter(|&y| y != RingElem::ZERO)
                    .collect();
                nonzero.dedup();
                if zero_fibre == [RingElem::ZERO, self.alpha] && nonzero.len() == 1 {
                    out.push(gc);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        RingElem::ALL.iter().all(|&x| {
            RingElem::ALL
                .iter()
                .all(|&y| self.mul(x, y) == self.mul(y, x))
        })
    }

    pub fn label(&self, x: RingElem) -> &'static str {
        if self.characteristic == 4 {
            ["0", "a", "2a", "3a"][x.index()]
        } else {
            ["0", "a", "b", "c"][x.index()]
        }
    }

    pub fn to_doc(&self) -> RingDoc {
        let table = |t: &Table| {
            t.iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| self.label(RingElem(v)).to_string())
                        .collect()
                })
                .collect()
        };
        RingDoc {
            name: self.name,
            characteristic: self.characteristic,
            elements: RingElem::ALL
                .iter()
                .map(|&x| self.label(x).to_string())
                .collect(),
            add: table(&self.add),
            mul: table(&self.mul),
            alpha: self.label(self.alpha).to_string(),
            beta: self.gc.map(|g| self.label(g.beta).to_string()),
            side: self.gc.map(|g| g.side),
        }
    }
}

/// JSON document describing a ring's tables and maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub name: RingName,
    pub characteristic: u8,
    pub elements: Vec<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub alpha: String,
    pub beta: Option<String>,
    pub side: Option<Side>,
}

pub fn rings_json() -> String {
    let docs: Vec<RingDoc> = Ring4::all().iter().map(Ring4::to_doc).collect();
    serde_json::to_string_pretty(&docs).expect("ring documents serialize")
}

/// Plain add/mul tables on four points, for isomorphism targets.
#[derive(Debug, Clone, Copy)]
pub struct Structure {
    pub name: &'static str,
    pub add: Table,
    pub mul: Table,
}

impl Structure {
    fn from_fn(
        name: &'static str,
        add: impl Fn(u8, u8) -> u8,
        mul: impl Fn(u8, u8) -> u8,
    ) -> Structure {
        let mut a = [[0; 4]; 4];
        let mut m = [[0; 4]; 4];
        for x in 0..4u8 {
            for y in 0..4u8 {
                a[x as usize][y as usize] = add(x, y);
                m[x as usize][y as usize] = mul(x, y);
            }
        }
        Structure {
            name,
            add: a,
            mul: m,
        }
    }

    /// Integers mod 4.
    pub fn z4() -> Structure {
        Structure::from_fn("Z4", |x, y| (x + y) % 4, |x, y| (x * y) % 4)
    }

    /// `Z2 × Z2`, element bits `(first, second)`.
    pub fn z2_x_z2() -> Structure {
        Structure::from_fn("Z2xZ2", |x, y| x ^ y, |x, y| x & y)
    }

    /// `Z2[u]/(u² − 1)`, element bits `(1, u)`.
    pub fn z2u_u2_minus_1() -> Structure {
        Structure::from_fn(
            "Z2[u]/(u^2-1)",
            |x, y| x ^ y,
            |x, y| {
                let (p0, p1, q0, q1) = (x & 1, x >> 1, y & 1, y >> 1);
                ((p0 & q0) ^ (p1 & q1)) | (((p0 & q1) ^ (p1 & q0)) << 1)
            },
        )
    }

    /// `GF(4) = {0, 1, w, 1 + w}` with `w² = w + 1`, element bits `(1, w)`.
    pub fn gf4() -> Structure {
        Structure::from_fn(
            "GF(4)",
            |x, y| x ^ y,
            |x, y| {
                let (p0, p1, q0, q1) = (x & 1, x >> 1, y & 1, y >> 1);
                let c0 = (p0 & q0) ^ (p1 & q1);
                let c1 = (p0 & q1) ^ (p1 & q0) ^ (p1 & q1);
                c0 | (c1 << 1)
            },
        )
    }

    pub fn of_ring(ring: &Ring4) -> Structure {
        Structure {
            name: "ring",
            add: ring.add,
            mul: ring.mul,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismCheck {
    pub source: RingName,
    pub target: String,
    pub map: [u8; 4],
    pub bijective: bool,
    pub add_preserved: usize,
    pub mul_preserved: usize,
}

impl IsomorphismCheck {
    pub fn holds(&self) -> bool {
        self.bijective && self.add_preserved == 16 && self.mul_preserved == 16
    }
}

pub fn check_map(source: &Ring4, target: &Structure, map: [u8; 4]) -> IsomorphismCheck {
    let mut sorted = map;
    sorted.sort();
    let mut add_preserved = 0;
    let mut mul_preserved = 0;
    for x in 0..4 {
        for y in 0..4 {
            let (fx, fy) = (map[x] as usize, map[y] as usize);
            if map[source.add[x][y] as usize] == target.add[fx][fy] {
                add_preserved += 1;
            }
            if map[source.mul[x][y] as usize] == target.mul[fx][fy] {
                mul_preserved += 1;
            }
        }
    }
    IsomorphismCheck {
        source: source.name,
        target: target.name.to_string(),
        map,
        bijective: sorted == [0, 1, 2, 3],
        add_preserved,
        mul_preserved,
    }
}

/// True iff some bijection is a ring isomorphism between the two tables.
pub fn isomorphic(x: &Structure, y: &Structure) -> bool {
    let ring_x = Ring4 {
        name: RingName::A,
        characteristic: 0,
        add: x.add,
        mul: x.mul,
        alpha: RingElem::ZERO,
        gc: None,
    };
    permutations4()
        .into_iter()
        .any(|p| check_map(&ring_x, y, p).holds())
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort();
                    if s == [0, 1, 2, 3] {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct IsomorphismReport {
    pub checks: Vec<IsomorphismCheck>,
    pub e_not_isomorphic_to_f: bool,
}

impl IsomorphismReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IsomorphismCheck::holds) && self.e_not_isomorphic_to_f
    }
}

/// Checks `A ≅ Z4`, `D ≅ Z2×Z2`, `G ≅ Z2[u]/(u²−1)`, `K ≅ GF(4)` under the
/// standard maps, the identity on `E`, and that `E` and `F` are not isomorphic.
pub fn verify_isomorphisms() -> IsomorphismReport {
    let e = Ring4::new(RingName::E);
    let checks = vec![
        // k·a ↦ k
        check_map(&Ring4::new(RingName::A), &Structure::z4(), [0, 1, 2, 3]),
        // a ↦ (1,0), b ↦ (0,1)
        check_map(
            &Ring4::new(RingName::D),
            &Structure::z2_x_z2(),
            [0, 1, 2, 3],
        ),
        // a ↦ 1 + u, b ↦ 1, c ↦ u
        check_map(
            &Ring4::new(RingName::G),
            &Structure::z2u_u2_minus_1(),
            [0, 3, 1, 2],
        ),
        // a ↦ 1, b ↦ w
        check_map(&Ring4::new(RingName::K), &Structure::gf4(), [0, 1, 2, 3]),
        check_map(&e, &Structure::of_ring(&e), [0, 1, 2, 3]),
    ];
    IsomorphismReport {
        checks,
        e_not_isomorphic_to_f: !isomorphic(
            &Structure::of_ring(&e),
            &Structure::of_ring(&Ring4::new(RingName::F)),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RingName::*;

    const O: RingElem = RingElem::ZERO;
    const A_: RingElem = RingElem::A;
    const B_: RingElem = RingElem::B;
    const C_: RingElem = RingElem::C;

    #[test]
    fn addition_examples() {
        let e = Ring4::new(E);
        assert_eq!(e.add(A_, B_), C_);
        assert_eq!(e.add(C_, C_), O);
        let a = Ring4::new(A);
        assert_eq!(a.add(RingElem(1), RingElem(3)), O);
        assert_eq!(a.label(RingElem(3)), "3a");
    }

    #[test]
    fn char2_addition_matches_printed_table() {
        let printed: Table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        for r in Ring4::all().iter().filter(|r| r.characteristic() == 2) {
            assert_eq!(r.add_table(), &printed, "{}", r.name());
        }
        let char4: Table = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]];
        for r in [A, B, C] {
            assert_eq!(Ring4::new(r).add_table(), &char4);
        }
    }

    #[test]
    fn e_and_f_multiplication_tables() {
        // rows x, columns y, entries xy
        let e_printed: Table = [[0, 0, 0, 0], [0, 1, 1, 0], [0, 2, 2, 0], [0, 3, 3, 0]];
        let f_printed: Table = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 1, 2, 3], [0, 0, 0, 0]];
        assert_eq!(Ring4::new(E).mul_table(), &e_printed);
        assert_eq!(Ring4::new(F).mul_table(), &f_printed);
        assert_eq!(Ring4::new(E).mul(A_, B_), A_);
        assert_eq!(Ring4::new(F).mul(A_, B_), B_);
        for x in RingElem::ALL {
            assert_eq!(
                Ring4::new(E).mul(C_, x),
                C_.min(if x.to_pair().0 { C_ } else { O })
            );
        }
    }

    #[test]
    fn only_e_and_f_are_noncommutative() {
        for r in Ring4::all() {
            assert_eq!(
                !r.is_commutative(),
                matches!(r.name(), E | F),
                "{}",
                r.name()
            );
        }
    }

    #[test]
    fn c_and_j_have_zero_products() {
        for name in [C, J] {
            let r = Ring4::new(name);
            assert!(r.mul_table().iter().flatten().all(|&v| v == 0));
        }
    }

    #[test]
    fn complement_is_fixed_point_free_involution() {
        for r in Ring4::all() {
            for x in RingElem::ALL {
                assert_ne!(r.complement(x), x);
                assert_eq!(r.complement(r.complement(x)), x);
            }
        }
        let e = Ring4::new(E);
        assert_eq!(e.complement(O), C_);
        let a = Ring4::new(A);
        for k in 0..4 {
            assert_eq!(a.complement(RingElem(k)), RingElem((k + 2) % 4));
        }
    }

    #[test]
    fn gc_content_values() {
        let e = Ring4::new(E);
        assert!(e.gc_content(B_).unwrap());
        assert!(e.gc_content(A_).unwrap());
        assert!(!e.gc_content(C_).unwrap());
        assert!(!e.gc_content(O).unwrap());
        let f = Ring4::new(F);
        assert!(f.gc_content(A_).unwrap());
        assert!(f.gc_content(B_).unwrap());
        assert!(!f.gc_content(C_).unwrap());
        for name in [C, J, K] {
            assert_eq!(Ring4::new(name).gc_content(A_), Err(Error::NoGcMap(name)));
        }
    }

    fn betas(name: RingName, side: Side) -> Vec<&'static str> {
        let r = Ring4::new(name);
        r.gc_map_candidates()
            .into_iter()
            .filter(|g| g.side == side)
            .map(|g| r.label(g.beta))
            .collect()
    }

    #[test]
    fn gc_map_candidates_match_classification() {
        assert_eq!(betas(A, Side::Left), ["2a"]);
        assert_eq!(betas(B, Side::Left), ["a", "3a"]);
        assert_eq!(betas(D, Side::Left), ["a"]);
        assert_eq!(betas(E, Side::Left), ["a", "b", "c"]);
        assert_eq!(betas(G, Side::Left), ["a"]);
        assert_eq!(betas(H, Side::Left), ["b", "c"]);
        assert_eq!(betas(I, Side::Left), ["a", "c"]);
        assert!(betas(F, Side::Left).is_empty());
        assert_eq!(betas(F, Side::Right), ["a", "b", "c"]);
        assert!(betas(E, Side::Right).is_empty());
        for name in [C, J, K] {
            assert!(Ring4::new(name).gc_map_candidates().is_empty(), "{name}");
            assert!(Ring4::new(name).gc_map().is_none());
        }
    }

    #[test]
    fn every_candidate_gives_the_same_partition() {
        for r in Ring4::all() {
            let fibres: Vec<[bool; 4]> = r
                .gc_map_candidates()
                .into_iter()
                .map(|g| RingElem::ALL.map(|x| r.apply_gc(g, x) != O))
                .collect();
            for f in &fibres {
                assert_eq!(f, &fibres[0]);
                assert_eq!(f.iter().filter(|&&b| b).count(), 2);
                assert!(!f[0] && !f[r.alpha().index()]);
            }
        }
    }

    #[test]
    fn residue_reduction_equals_gc_map_on_e() {
        let e = Ring4::new(E);
        for x in RingElem::ALL {
            assert_eq!(e.gc_content(x).unwrap(), x.to_pair().0);
        }
    }

    #[test]
    fn pair_decomposition_is_bijective() {
        let e = Ring4::new(E);
        for x in RingElem::ALL {
            let (s, t) = x.to_pair();
            assert_eq!(RingElem::from_pair(s, t), x);
            let a_s = if s { A_ } else { O };
            let c_t = if t { C_ } else { O };
            assert_eq!(e.add(a_s, c_t), x);
        }
    }

    #[test]
    fn isomorphisms_hold() {
        let report = verify_isomorphisms();
        for c in &report.checks {
            assert!(c.holds(), "{c:?}");
        }
        assert!(report.e_not_isomorphic_to_f);
        // φ_D(a)·φ_D(b) = (1,0)(0,1) = (0,0)
        assert_eq!(Structure::z2_x_z2().mul[1][2], 0);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let e = Ring4::new(E);
        let mut mul = *e.mul_table();
        mul[1][2] = 3;
        assert!(Ring4::from_tables(E, 2, *e.add_table(), mul, C_, None).is_err());
        assert!(Ring4::from_tables(E, 2, *e.add_table(), *e.mul_table(), O, None).is_err());
        let wrong_gc = Some(GcMap {
            beta: A_,
            side: Side::Right,
        });
        assert!(Ring4::from_tables(E, 2, *e.add_table(), *e.mul_table(), C_, wrong_gc).is_err());
    }

    #[test]
    fn json_document() {
        let doc = Ring4::new(E).to_doc();
        assert_eq!(doc.mul[1], ["0", "a", "a", "0"]);
        assert_eq!(doc.beta.as_deref(), Some("a"));
        let json = rings_json();
        let back: Vec<RingDoc> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.len(), 11);
        assert_eq!(back[5].side, Some(Side::Right));
        assert_eq!(back[10].beta, None);
    }
}
