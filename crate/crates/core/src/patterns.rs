//! Proctor patterns, reverse King and Sundaram tableaux, the bijections
//! between them and the model states, and the right-key map.
//!
//! A pattern of rank `n` has rows `a_1, b_1, a_2, b_2, …, a_n, b_n`, where
//! `a_i` and `b_i` have `n − i + 1` entries. Rows are stored 0-based:
//! `a[i][k]` is `a_{i+1, i+1+k}`.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{LaurentPolynomial, Variables};
use crate::demazure::CartanType;
use crate::error::{Error, Result};
use crate::model::{Family, KEntry, MarkedState, Model, State};
use crate::partition::Partition;
use crate::weyl::SignedPermutation;

/// A nonnegative half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Half(i32);

impl Half {
    pub fn int(k: i32) -> Half {
        Half(2 * k)
    }

    pub fn from_twice(t: i32) -> Half {
        Half(t)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    /// Round up to an integer.
    pub fn ceil(self) -> i32 {
        (self.0 + 1).div_euclid(2)
    }

    pub fn minus_half(self) -> Half {
        Half(self.0 - 1)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Half {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad pattern entry {s:?}"));
        match s.split_once('/') {
            Some((num, "2")) => Ok(Half(num.trim().parse().map_err(|_| bad())?)),
            Some(_) => Err(bad()),
            None => Ok(Half::int(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integral() {
            s.serialize_i64(i64::from(self.0 / 2))
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) => Ok(Half::int(k)),
            Raw::Text(t) => t.parse().map_err(de::Error::custom),
        }
    }
}

/// A symplectic (type C) or odd orthogonal (type B) Proctor pattern.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Half>>", into = "Vec<Vec<Half>>")]
pub struct ProctorPattern {
    pub a: Vec<Vec<Half>>,
    pub b: Vec<Vec<Half>>,
}

impl TryFrom<Vec<Vec<Half>>> for ProctorPattern {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Half>>) -> Result<Self> {
        ProctorPattern::from_rows(rows)
    }
}

impl From<ProctorPattern> for Vec<Vec<Half>> {
    fn from(p: ProctorPattern) -> Self {
        p.rows()
    }
}

impl ProctorPattern {
    /// From the interleaved rows `a_1, b_1, …, a_n, b_n`.
    pub fn from_rows(rows: Vec<Vec<Half>>) -> Result<Self> {
        if rows.len() % 2 != 0 {
            return Err(Error::Invalid("a pattern has an even number of rows".into()));
        }
        let n = rows.len() / 2;
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for (k, row) in rows.into_iter().enumerate() {
            if row.len() != n - k / 2 {
                return Err(Error::Invalid(format!(
                    "pattern row {} has length {}, expected {}",
                    k + 1,
                    row.len(),
                    n - k / 2
                )));
            }
            if k % 2 == 0 {
                a.push(row);
            } else {
                b.push(row);
            }
        }
        Ok(ProctorPattern { a, b })
    }

    pub fn rows(&self) -> Vec<Vec<Half>> {
        self.a.iter().zip(&self.b).flat_map(|(x, y)| [x.clone(), y.clone()]).collect()
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// The top row as a partition.
    pub fn top(&self) -> Result<Partition> {
        let parts = self.a.first().map(|r| r.iter().map(|h| h.ceil()).collect()).unwrap_or_default();
        Partition::new(parts)
    }

    /// Text form such as `[(2,1),(1,0),(1),(1/2)]`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("pattern {text:?} must be bracketed")))?;
        let mut rows = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let open = rest.find(['(', '[']).ok_or_else(|| Error::Parse(format!("pattern {text:?}")))?;
            let close_char = if rest.as_bytes()[open] == b'(' { ')' } else { ']' };
            let close = rest[open..].find(close_char).ok_or_else(|| Error::Parse(format!("pattern {text:?}")))? + open;
            let body = rest[open + 1..close].trim();
            let row = if body.is_empty() {
                Vec::new()
            } else {
                body.split(',').map(|x| x.trim().trim_matches('"').parse()).collect::<Result<Vec<Half>>>()?
            };
            rows.push(row);
            rest = rest[close + 1..].trim_start_matches([',', ' ']).trim();
        }
        ProctorPattern::from_rows(rows)
    }

    fn get_a(&self, i: usize, j: usize) -> Option<Half> {
        if i < self.rank() && j >= i && j < self.rank() {
            Some(self.a[i][j - i])
        } else {
            None
        }
    }

    fn get_b(&self, i: usize, j: usize) -> Option<Half> {
        if i < self.rank() && j >= i && j < self.rank() {
            Some(self.b[i][j - i])
        } else {
            None
        }
    }

    /// Interlacing, nonnegativity and integrality. In type B only the last
    /// entry of each `b` row may be a half-integer.
    pub fn validate(&self, cartan_type: CartanType) -> bool {
        let n = self.rank();
        if self.a.len() != n || self.b.len() != n {
            return false;
        }
        for i in 0..n {
            if self.a[i].len() != n - i || self.b[i].len() != n - i {
                return false;
            }
            for j in i..n {
                let a = self.a[i][j - i];
                let b = self.b[i][j - i];
                if a < Half(0) || b < Half(0) || !a.is_integral() {
                    return false;
                }
                let half_ok = cartan_type == CartanType::B && j == n - 1;
                if !b.is_integral() && !half_ok {
                    return false;
                }
                // min{a_ij, a_{i+1,j}} >= b_ij >= max{a_{i,j+1}, a_{i+1,j+1}}
                let upper = [self.get_a(i, j), self.get_a(i + 1, j)];
                let lower = [self.get_a(i, j + 1), self.get_a(i + 1, j + 1)];
                if upper.iter().flatten().any(|&u| b > u) || lower.iter().flatten().any(|&l| b < l) {
                    return false;
                }
                // min{b_{i-1,j-1}, b_{i,j-1}} >= a_ij >= max{b_{i-1,j}, b_ij}
                if i > 0 {
                    let upper = [self.get_b(i - 1, j - 1), if j > i { self.get_b(i, j - 1) } else { None }];
                    let lower = [self.get_b(i - 1, j), Some(b)];
                    if upper.iter().flatten().any(|&u| a > u) || lower.iter().flatten().any(|&l| a < l) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Π z_i^{A_i − 2B_i + A_{i+1}}`.
    pub fn weight(&self) -> LaurentPolynomial {
        let n = self.rank();
        let sum = |r: &Vec<Half>| r.iter().map(|h| h.twice()).sum::<i32>();
        let a2: Vec<i32> = self.a.iter().map(sum).collect();
        let b2: Vec<i32> = self.b.iter().map(sum).collect();
        let exps = (0..n)
            .map(|i| {
                let next = if i + 1 < n { a2[i + 1] } else { 0 };
                // a-row sums are even, so this halves exactly
                (a2[i] + next) / 2 - b2[i]
            })
            .collect();
        LaurentPolynomial::monomial(Variables::z(n), exps, 1)
    }
}

impl fmt::Display for ProctorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("({})", r.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for ProctorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every pattern with top row `λ` (padded to `n`), by ranged enumeration
/// and a final interlacing check. Works without reference to the model.
pub fn enumerate_patterns(lambda: &Partition, n: usize, cartan_type: CartanType) -> Result<Vec<ProctorPattern>> {
    let top: Vec<Half> = lambda.padded(n)?.parts().iter().map(|&x| Half::int(x)).collect();
    let mut filler = Filler { n, cartan_type, rows: vec![top], out: Vec::new() };
    filler.next_row();
    let mut out = filler.out;
    out.sort();
    Ok(out)
}

/// Depth-first filling of pattern rows, each ranged by the row above.
struct Filler {
    n: usize,
    cartan_type: CartanType,
    rows: Vec<Vec<Half>>,
    out: Vec<ProctorPattern>,
}

impl Filler {
    fn next_row(&mut self) {
        let k = self.rows.len();
        if k == 2 * self.n {
            let p = ProctorPattern::from_rows(self.rows.clone()).expect("shape");
            if p.validate(self.cartan_type) {
                self.out.push(p);
            }
            return;
        }
        let above = &self.rows[k - 1];
        let len = self.n - k / 2;
        // bounds from the row above only; the final check enforces the rest
        let bounds: Vec<(i32, i32, i32)> = (0..len)
            .map(|j| {
                if k % 2 == 1 {
                    // a b row under an a row of the same length
                    let half_step = self.cartan_type == CartanType::B && j == len - 1;
                    let lo = above.get(j + 1).map_or(0, |h| h.twice());
                    (lo, above[j].twice(), if half_step { 1 } else { 2 })
                } else {
                    // an a row under a b row one longer
                    (above[j + 1].twice(), above[j].twice(), 2)
                }
            })
            .collect();
        let mut row = vec![Half(0); len];
        self.fill_entry(0, &bounds, &mut row);
    }

    fn fill_entry(&mut self, j: usize, bounds: &[(i32, i32, i32)], row: &mut Vec<Half>) {
        if j == bounds.len() {
            self.rows.push(row.clone());
            self.next_row();
            self.rows.pop();
            return;
        }
        let (lo, hi, step) = bounds[j];
        let mut v = if step == 2 { lo + lo.rem_euclid(2) } else { lo };
        while v <= hi {
            row[j] = Half(v);
            self.fill_entry(j + 1, bounds, row);
            v += step;
        }
    }
}

/// Layers and columns of the colored vertical edges encoded by a pattern,
/// for a model of width `λ_1 + n`.
fn occupancy(p: &ProctorPattern, width: usize) -> Result<Vec<Vec<bool>>> {
    let n = p.rank();
    let mut mask = vec![vec![false; width]; 2 * n + 1];
    let mut set = |layer: usize, col: i32| -> Result<()> {
        if col < 0 || col as usize >= width {
            return Err(Error::Invalid(format!("pattern entry lands outside the grid in layer {layer}")));
        }
        let cell = &mut mask[layer][col as usize];
        if *cell {
            return Err(Error::Invalid(format!("pattern places two paths in layer {layer}, column {col}")));
        }
        *cell = true;
        Ok(())
    };
    for i in 0..n {
        for j in i..n {
            // a_{i,j} sits at column a + n − j (1-based j)
            set(2 * i, p.a[i][j - i].ceil() + (n - 1 - j) as i32)?;
            let b = p.b[i][j - i].ceil();
            if j == n - 1 && b == 0 {
                continue;
            }
            set(2 * i + 1, b + (n - 1 - j) as i32 - 1)?;
        }
    }
    Ok(mask)
}

/// Read a pattern off a state of `model`, with type-B marks on the `k1`
/// U-turns (`None` elsewhere, and everywhere in type C).
pub fn marked_state_to_pattern(model: &Model, s: &State, marks: &[Option<bool>]) -> Result<ProctorPattern> {
    model.check_state(s)?;
    let n = model.rank();
    let ks = model.k_entries(s)?;
    if marks.len() != n {
        return Err(Error::Invalid("one mark slot per U-turn".into()));
    }
    for i in 0..n {
        let needs = model.cartan.cartan_type == CartanType::B && ks[i] == KEntry::K1;
        if needs != marks[i].is_some() {
            return Err(Error::Invalid(format!("mark at U-turn {} does not match the state", i + 1)));
        }
    }
    let cols = |layer: usize| -> Vec<i32> {
        (0..model.width()).rev().filter(|&c| s.vertical[layer][c].is_color()).map(|c| c as i32).collect()
    };
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let ca = cols(2 * i);
        if ca.len() != n - i {
            return Err(Error::Encoding(format!("layer {} carries {} paths", 2 * i, ca.len())));
        }
        a.push((i..n).map(|j| Half::int(ca[j - i] - (n - 1 - j) as i32)).collect::<Vec<_>>());
        let cb = cols(2 * i + 1);
        if cb.len() != n - i && cb.len() + 1 != n - i {
            return Err(Error::Encoding(format!("layer {} carries {} paths", 2 * i + 1, cb.len())));
        }
        let mut row: Vec<Half> =
            (i..n).map(|j| cb.get(j - i).map_or(Half(0), |&c| Half::int(c - (n - 1 - j) as i32 + 1))).collect();
        if marks[i] == Some(true) {
            let last = row.len() - 1;
            row[last] = row[last].minus_half();
        }
        b.push(row);
    }
    Ok(ProctorPattern { a, b })
}

/// Ψ for type C states (no marks).
pub fn state_to_pattern(model: &Model, s: &State) -> Result<ProctorPattern> {
    marked_state_to_pattern(model, s, &vec![None; model.rank()])
}

/// The character model at `w_0` whose states Ψ identifies with patterns.
pub fn pattern_model(lambda: &Partition, n: usize, cartan_type: CartanType) -> Result<Model> {
    Model::new(lambda, &SignedPermutation::longest(n), Family::Character, cartan_type)
}

/// Ψ⁻¹: the unique marked state of the `w_0` character model with this pattern.
pub fn pattern_to_state(p: &ProctorPattern, cartan_type: CartanType) -> Result<(Model, MarkedState)> {
    if !p.validate(cartan_type) {
        return Err(Error::Invalid(format!("{p} is not a valid type {cartan_type} pattern")));
    }
    let n = p.rank();
    let model = pattern_model(&p.top()?, n, cartan_type)?;
    let mask = occupancy(p, model.width())?;
    let mut states = model.states_with_occupancy(&mask)?;
    if states.len() != 1 {
        return Err(Error::Encoding(format!("{p} has {} colorings", states.len())));
    }
    let state = states.pop().expect("one state");
    let ks = model.k_entries(&state)?;
    let marks: Vec<Option<bool>> = (0..n)
        .map(|i| {
            let half = !p.b[i][n - 1 - i].is_integral();
            match (cartan_type, ks[i]) {
                (CartanType::B, KEntry::K1) => Some(half),
                _ => None,
            }
        })
        .collect();
    for (i, mark) in marks.iter().enumerate() {
        if !p.b[i][n - 1 - i].is_integral() && mark.is_none() {
            return Err(Error::Encoding(format!("half entry in {p} without a k1 U-turn")));
        }
    }
    Ok((model, MarkedState { state, marks }))
}

/// A letter of the reverse alphabet `1 < 1̄ < 2 < 2̄ < ⋯ < n < n̄ < ∞`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Plain(u32),
    Bar(u32),
    Inf,
}

impl Letter {
    fn rank(self) -> u32 {
        match self {
            Letter::Plain(k) => 2 * k - 1,
            Letter::Bar(k) => 2 * k,
            Letter::Inf => u32::MAX,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(k) => write!(f, "{k}"),
            Letter::Bar(k) => write!(f, "{k}b"),
            Letter::Inf => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_matches('"');
        if s == "inf" || s == "∞" {
            return Ok(Letter::Inf);
        }
        let (digits, bar) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let k: u32 = digits.parse().map_err(|_| Error::Parse(format!("bad tableau entry {s:?}")))?;
        if k == 0 {
            return Err(Error::Parse(format!("bad tableau entry {s:?}")));
        }
        Ok(if bar { Letter::Bar(k) } else { Letter::Plain(k) })
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Reverse King tableaux, type C.
    King,
    /// Reverse Sundaram tableaux, type B.
    Sundaram,
}

impl Flavor {
    pub fn of(cartan_type: CartanType) -> Flavor {
        match cartan_type {
            CartanType::C => Flavor::King,
            CartanType::B => Flavor::Sundaram,
        }
    }
}

/// A reverse King or Sundaram tableau of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub rank: usize,
    pub flavor: Flavor,
    pub rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Text form `[[2b,1],[1]]`; quotes around entries are accepted.
    pub fn parse(text: &str, rank: usize, cartan_type: CartanType) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("tableau {text:?} must be bracketed")))?;
        let mut rows = Vec::new();
        if !inner.is_empty() {
            for part in inner.split("],[") {
                let body = part.trim_start_matches('[').trim_end_matches(']');
                if body.is_empty() {
                    continue;
                }
                rows.push(body.split(',').map(str::parse).collect::<Result<Vec<Letter>>>()?);
            }
        }
        let t = Tableau { rank, flavor: Flavor::of(cartan_type), rows };
        t.validate()?;
        Ok(t)
    }

    /// Bound on row `r` (0-based): the letter `(n − r)`-bar.
    fn row_bound(&self, r: usize) -> Letter {
        Letter::Bar((self.rank - r) as u32)
    }

    /// Replace each `∞` by its row bound.
    fn without_infinity(&self) -> Tableau {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| row.iter().map(|&x| if x == Letter::Inf { self.row_bound(r) } else { x }).collect())
            .collect();
        Tableau { rank: self.rank, flavor: Flavor::King, rows }
    }

    /// Rows weakly decreasing, columns strictly decreasing, row `r` bounded
    /// by its barred letter. In the Sundaram flavor `∞` may only stand at the
    /// start of a row whose bound letter it replaces, so it occurs at most
    /// once per row and may repeat down the first column.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Invalid(m));
        if self.rows.len() > self.rank {
            return bad(format!("{} rows exceed rank {}", self.rows.len(), self.rank));
        }
        if self.rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths must weakly decrease".into());
        }
        for (r, row) in self.rows.iter().enumerate() {
            let infs = row.iter().filter(|&&x| x == Letter::Inf).count();
            if infs > 0 && (self.flavor == Flavor::King || infs > 1 || row[0] != Letter::Inf) {
                return bad(format!("misplaced infinity in row {}", r + 1));
            }
        }
        let plain = self.without_infinity();
        for (r, row) in plain.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] < w[1]) {
                return bad(format!("row {} is not weakly decreasing", r + 1));
            }
            if row.iter().any(|&x| x > self.row_bound(r)) {
                return bad(format!("row {} exceeds its bound {}", r + 1, self.row_bound(r)));
            }
            if let Letter::Plain(k) | Letter::Bar(k) = row[0] {
                if k as usize > self.rank {
                    return bad(format!("letter {} exceeds the rank", row[0]));
                }
            }
            if r > 0 {
                for (c, x) in row.iter().enumerate() {
                    if plain.rows[r - 1][c] <= *x {
                        return bad(format!("column {} is not strictly decreasing", c + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of entries in row `r` that are at least `x`.
    fn count_at_least(&self, r: usize, x: Letter) -> i32 {
        self.rows.get(r).map_or(0, |row| row.iter().filter(|&&y| y >= x).count() as i32)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Θ: the cells of the shape `a_k` hold letters `≥ k`, those of `b_k`
/// letters `≥ k̄`. A half-integral `b_{i,n}` puts `∞` at the start of row
/// `n + 1 − i`.
pub fn pattern_to_tableau(p: &ProctorPattern, cartan_type: CartanType) -> Result<Tableau> {
    if !p.validate(cartan_type) {
        return Err(Error::Invalid(format!("{p} is not a valid type {cartan_type} pattern")));
    }
    let n = p.rank();
    let shape: Vec<usize> = p.a[0].iter().map(|h| h.ceil() as usize).filter(|&x| x > 0).collect();
    let mut rows: Vec<Vec<Letter>> = shape.iter().map(|&len| vec![Letter::Plain(1); len]).collect();
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            // the largest letter whose shape contains the cell
            'letters: for k in (0..n).rev() {
                for (letter, shape_row) in
                    [(Letter::Bar(k as u32 + 1), &p.b[k]), (Letter::Plain(k as u32 + 1), &p.a[k])]
                {
                    if r < shape_row.len() && (c as i32) < shape_row[r].ceil() {
                        *cell = letter;
                        break 'letters;
                    }
                }
            }
        }
    }
    for i in 0..n {
        if !p.b[i][n - 1 - i].is_integral() {
            rows[n - 1 - i][0] = Letter::Inf;
        }
    }
    let t = Tableau { rank: n, flavor: Flavor::of(cartan_type), rows };
    t.validate()?;
    Ok(t)
}

/// Θ⁻¹.
pub fn tableau_to_pattern(t: &Tableau) -> Result<ProctorPattern> {
    t.validate()?;
    let n = t.rank;
    let plain = t.without_infinity();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let k = i as u32 + 1;
        a.push((i..n).map(|j| Half::int(plain.count_at_least(j - i, Letter::Plain(k)))).collect::<Vec<_>>());
        let mut row: Vec<Half> = (i..n).map(|j| Half::int(plain.count_at_least(j - i, Letter::Bar(k)))).collect();
        let r = n - 1 - i;
        if t.rows.get(r).is_some_and(|row| row[0] == Letter::Inf) {
            let last = row.len() - 1;
            row[last] = row[last].minus_half();
        }
        b.push(row);
    }
    let p = ProctorPattern { a, b };
    let ct = match t.flavor {
        Flavor::King => CartanType::C,
        Flavor::Sundaram => CartanType::B,
    };
    if !p.validate(ct) {
        return Err(Error::Encoding(format!("{t} does not give a valid pattern")));
    }
    Ok(p)
}

/// All tableaux of shape `λ` by brute force over fillings; independent of Θ.
pub fn enumerate_tableaux(lambda: &Partition, n: usize, cartan_type: CartanType) -> Result<Vec<Tableau>> {
    let shape: Vec<usize> = lambda.padded(n)?.parts().iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    let flavor = Flavor::of(cartan_type);
    let mut alphabet: Vec<Letter> = (1..=n as u32).flat_map(|k| [Letter::Plain(k), Letter::Bar(k)]).collect();
    if flavor == Flavor::Sundaram {
        alphabet.push(Letter::Inf);
    }
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<Letter>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        alphabet: &[Letter],
        rows: &mut Vec<Vec<Letter>>,
        n: usize,
        flavor: Flavor,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            let t = Tableau { rank: n, flavor, rows: rows.clone() };
            if t.validate().is_ok() {
                out.push(t);
            }
            return;
        }
        let (r, _) = cells[k];
        for &x in alphabet {
            rows[r].push(x);
            // prune on rows only; the full check runs at the leaves
            let row = &rows[r];
            let ok = row.len() < 2 || {
                let (p, q) = (row[row.len() - 2], row[row.len() - 1]);
                q != Letter::Inf && p >= q
            };
            if ok {
                rec(k + 1, cells, alphabet, rows, n, flavor, out);
            }
            rows[r].pop();
        }
    }
    rec(0, &cells, &alphabet, &mut rows, n, flavor, &mut out);
    out.sort_by_key(|t| t.to_string());
    Ok(out)
}

/// The Weyl element of the unique atom-model coloring of an uncolored state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyResult {
    pub w: SignedPermutation,
    pub state: State,
}

/// Try every `w`: exactly one atom model may color the occupancy, in
/// exactly one way.
pub fn compute_key_occupancy(
    lambda: &Partition,
    n: usize,
    cartan_type: CartanType,
    mask: &[Vec<bool>],
) -> Result<KeyResult> {
    let mut found = Vec::new();
    for w in SignedPermutation::all(n) {
        let model = Model::new(lambda, &w, Family::Atom, cartan_type)?;
        for s in model.states_with_occupancy(mask)? {
            found.push(KeyResult { w: w.clone(), state: s });
        }
    }
    if found.len() != 1 {
        return Err(Error::Encoding(format!("{} admissible atom colorings, expected exactly one", found.len())));
    }
    Ok(found.pop().expect("one coloring"))
}

/// Key of a state of any model with the same `λ` and type.
pub fn compute_key_state(model: &Model, s: &State) -> Result<KeyResult> {
    model.check_state(s)?;
    let mask: Vec<Vec<bool>> = s.vertical.iter().map(|v| v.iter().map(|x| x.is_color()).collect()).collect();
    compute_key_occupancy(&model.lambda, model.rank(), model.cartan.cartan_type, &mask)
}

/// Key of a tableau, through Θ⁻¹ and the pattern's occupancy.
pub fn compute_key_tableau(t: &Tableau) -> Result<KeyResult> {
    let p = tableau_to_pattern(t)?;
    compute_key_pattern(&p, cartan_of(t.flavor))
}

pub fn compute_key_pattern(p: &ProctorPattern, cartan_type: CartanType) -> Result<KeyResult> {
    if !p.validate(cartan_type) {
        return Err(Error::Invalid(format!("{p} is not a valid type {cartan_type} pattern")));
    }
    let n = p.rank();
    let lambda = p.top()?;
    let width = lambda.first() as usize + n;
    compute_key_occupancy(&lambda, n, cartan_type, &occupancy(p, width)?)
}

fn cartan_of(f: Flavor) -> CartanType {
    match f {
        Flavor::King => CartanType::C,
        Flavor::Sundaram => CartanType::B,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> ProctorPattern {
        ProctorPattern::parse(s).unwrap()
    }
    fn poly(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variables::z(2)).unwrap()
    }
    fn lam(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn half_text_and_json() {
        assert_eq!("1/2".parse::<Half>().unwrap(), Half::from_twice(1));
        assert_eq!(Half::from_twice(3).ceil(), 2);
        let p = pat("[(2,1),(1,0),(1),(1/2)]");
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"[[2,1],[1,0],[1],["1/2"]]"#);
        assert_eq!(serde_json::from_str::<ProctorPattern>(&j).unwrap(), p);
        assert_eq!(p.to_string(), "[(2,1),(1,0),(1),(1/2)]");
    }

    #[test]
    fn validation() {
        assert!(pat("[(2,1),(1,0),(1),(0)]").validate(CartanType::C));
        assert!(!pat("[(2,1),(3,0),(1),(0)]").validate(CartanType::C));
        assert!(pat("[(2,1),(1,0),(1),(1/2)]").validate(CartanType::B));
        assert!(!pat("[(2,1),(1,0),(1),(1/2)]").validate(CartanType::C));
    }

    #[test]
    fn weights() {
        assert_eq!(pat("[(2,1),(1,0),(1),(0)]").weight(), poly("z1^2*z2"));
        assert_eq!(pat("[(2,1),(1,0),(1),(1)]").weight(), poly("z1^2*z2^-1"));
        assert!(pat("[(0,0),(0,0),(0),(0)]").weight().is_one());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_patterns(&lam("2,1"), 2, CartanType::C).unwrap().len(), 16);
        assert_eq!(enumerate_patterns(&lam("0"), 2, CartanType::C).unwrap().len(), 1);
        // dimensions of the vector representations of Sp(4) and SO(5)
        assert_eq!(enumerate_patterns(&lam("1"), 2, CartanType::C).unwrap().len(), 4);
        assert_eq!(enumerate_patterns(&lam("1"), 2, CartanType::B).unwrap().len(), 5);
    }

    #[test]
    fn identity_and_s1_states() {
        let m = Model::new(&lam("2,1"), &SignedPermutation::identity(2), Family::Atom, CartanType::C).unwrap();
        let s = &m.enumerate_states()[0];
        assert_eq!(state_to_pattern(&m, s).unwrap(), pat("[(2,1),(1,0),(1),(0)]"));
        let s1 = SignedPermutation::parse("s1", 2).unwrap();
        let m = Model::new(&lam("2,1"), &s1, Family::Atom, CartanType::C).unwrap();
        let s = &m.enumerate_states()[0];
        assert_eq!(state_to_pattern(&m, s).unwrap(), pat("[(2,1),(2,0),(2),(0)]"));
    }

    #[test]
    fn marked_type_b_state() {
        let s2 = SignedPermutation::parse("s2", 2).unwrap();
        let m = Model::new(&lam("2,1"), &s2, Family::Atom, CartanType::B).unwrap();
        let marked: Vec<_> = m.enumerate_marked_states().unwrap();
        let patterns: Vec<_> =
            marked.iter().map(|x| marked_state_to_pattern(&m, &x.state, &x.marks).unwrap()).collect();
        assert!(patterns.contains(&pat("[(2,1),(1,0),(1),(1/2)]")));
        assert!(patterns.contains(&pat("[(2,1),(1,0),(1),(1)]")));
    }

    #[test]
    fn theta_examples() {
        let t = pattern_to_tableau(&pat("[(2,1),(1,0),(1),(0)]"), CartanType::C).unwrap();
        assert_eq!(t.to_string(), "[[2,1],[1]]");
        let t = pattern_to_tableau(&pat("[(2,1),(1,0),(1),(1)]"), CartanType::C).unwrap();
        assert_eq!(t.to_string(), "[[2b,1],[1]]");
        let t = pattern_to_tableau(&pat("[(2,1),(1,0),(1),(1/2)]"), CartanType::B).unwrap();
        assert_eq!(t.to_string(), "[[inf,1],[1]]");
        assert_eq!(tableau_to_pattern(&t).unwrap(), pat("[(2,1),(1,0),(1),(1/2)]"));
        let back = Tableau::parse("[[2b,1],[1]]", 2, CartanType::C).unwrap();
        assert_eq!(tableau_to_pattern(&back).unwrap(), pat("[(2,1),(1,0),(1),(1)]"));
        let empty = Tableau::parse("[]", 2, CartanType::C).unwrap();
        assert_eq!(tableau_to_pattern(&empty).unwrap(), pat("[(0,0),(0,0),(0),(0)]"));
    }

    #[test]
    fn malformed_tableaux() {
        assert!(Tableau::parse("[[1,2]]", 2, CartanType::C).is_err());
        assert!(Tableau::parse("[[1],[1]]", 2, CartanType::C).is_err());
        assert!(Tableau::parse("[[1],[2]]", 2, CartanType::C).is_err());
        assert!(Tableau::parse("[[inf,1]]", 2, CartanType::C).is_err());
        assert!(Tableau::parse("[[3]]", 2, CartanType::C).is_err());
    }

    #[test]
    fn key_examples() {
        let key = |s: &str| compute_key_tableau(&Tableau::parse(s, 2, CartanType::C).unwrap()).unwrap().w;
        assert_eq!(key("[[2b,1],[1]]"), SignedPermutation::parse("s2", 2).unwrap());
        assert!(key("[[2,1],[1]]").is_identity());
        assert_eq!(key("[[2b,1b],[1b]]"), SignedPermutation::longest(2));
    }
}
