//! Colored U-turn lattice models for types B and C.
//!
//! A model has `2n` horizontal rows. Row `2i−1` (0-based `2i−2`) is a Γ row
//! with spectral parameter `z_i`; row `2i` is a Δ row with parameter
//! `z_i^{-1}`; the two are joined on the right by U-turn `i`, weighted by the
//! K-matrix at `z_i`. Columns are numbered from the right starting at 0, so
//! column 0 touches the U-turns.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Exponents, LaurentPolynomial, Variables};
use crate::demazure::{rho_monomial, CartanData, CartanType};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weyl::{ColorPalette, SignedPermutation, Spin, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Atom,
    Character,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Atom => "atom",
            Family::Character => "character",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "atom" => Ok(Family::Atom),
            "character" | "char" => Ok(Family::Character),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowKind {
    Gamma,
    Delta,
}

/// Named vertex configurations of the Γ and Δ tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    A1,
    A2,
    A2Prime,
    A2Dagger,
    A2Circ,
    B2,
    C1,
    C2,
}

impl VertexClass {
    /// The weight is `z^k` for the returned `k`.
    pub fn exponent(self, kind: RowKind) -> i32 {
        use VertexClass::*;
        match kind {
            RowKind::Gamma => match self {
                A1 | C1 => 0,
                A2 | A2Prime | A2Dagger | A2Circ | B2 | C2 => 1,
            },
            RowKind::Delta => match self {
                A1 | C2 => 1,
                _ => 0,
            },
        }
    }

    pub fn label(self) -> &'static str {
        use VertexClass::*;
        match self {
            A1 => "a1",
            A2 => "a2",
            A2Prime => "a2'",
            A2Dagger => "a2+",
            A2Circ => "a2o",
            B2 => "b2",
            C1 => "c1",
            C2 => "c2",
        }
    }
}

/// Classify a Γ vertex with edges (left, top, right, bottom).
/// `None` means weight 0.
pub fn gamma_class(family: Family, l: Spin, t: Spin, r: Spin, b: Spin) -> Option<VertexClass> {
    use VertexClass::*;
    let z = |s: Spin| s.is_empty();
    if !((l == r && t == b) || (l == b && t == r)) {
        return None;
    }
    match (z(l), z(t), z(r), z(b)) {
        (true, true, true, true) => Some(A1),
        (true, false, false, true) => Some(C1),
        (false, true, true, false) => Some(C2),
        (false, true, false, true) => Some(B2),
        (true, false, true, false) => None,
        (false, false, false, false) => {
            if l == r && t == b {
                if l == t {
                    Some(A2Circ)
                } else if t < l {
                    Some(A2Dagger)
                } else {
                    None
                }
            } else {
                // bounce: l == b, t == r, l != t
                match family {
                    Family::Atom if l < t => Some(A2),
                    Family::Character if l > t => Some(A2Prime),
                    _ => None,
                }
            }
        }
        _ => None,
    }
}

/// Classify a Δ vertex with edges (left, top, right, bottom).
pub fn delta_class(family: Family, l: Spin, t: Spin, r: Spin, b: Spin) -> Option<VertexClass> {
    use VertexClass::*;
    let z = |s: Spin| s.is_empty();
    if !((r == l && t == b) || (r == b && t == l)) {
        return None;
    }
    match (z(l), z(t), z(r), z(b)) {
        (true, true, true, true) => Some(A1),
        (false, false, true, true) => Some(C1),
        (true, true, false, false) => Some(C2),
        (false, true, false, true) => Some(B2),
        (true, false, true, false) => None,
        (false, false, false, false) => {
            if l == r && t == b {
                if l == t {
                    Some(A2Circ)
                } else if t > l {
                    Some(A2Dagger)
                } else {
                    None
                }
            } else {
                // bounce: l == t, r == b, l != r
                match family {
                    Family::Atom if r > l => Some(A2),
                    Family::Character if l > r => Some(A2Prime),
                    _ => None,
                }
            }
        }
        _ => None,
    }
}

pub fn vertex_class(kind: RowKind, family: Family, l: Spin, t: Spin, r: Spin, b: Spin) -> Option<VertexClass> {
    match kind {
        RowKind::Gamma => gamma_class(family, l, t, r, b),
        RowKind::Delta => delta_class(family, l, t, r, b),
    }
}

/// U-turn configurations; `top` is the right edge of the Γ row and `bottom`
/// the right edge of the Δ row below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KEntry {
    K1,
    K2,
    K3,
    K3Prime,
}

impl KEntry {
    pub fn label(self) -> &'static str {
        match self {
            KEntry::K1 => "k1",
            KEntry::K2 => "k2",
            KEntry::K3 => "k3",
            KEntry::K3Prime => "k3'",
        }
    }
}

pub fn k_entry(family: Family, top: Spin, bottom: Spin) -> Option<KEntry> {
    if top.is_empty() && bottom.is_empty() {
        Some(KEntry::K1)
    } else if top.is_unbarred() && bottom == top.bar() {
        Some(KEntry::K2)
    } else if top.is_color() && bottom == top {
        match family {
            Family::Atom if top.is_barred() => Some(KEntry::K3),
            Family::Character if top.is_unbarred() => Some(KEntry::K3Prime),
            _ => None,
        }
    } else {
        None
    }
}

/// Weight of a K-matrix entry as a polynomial in the U-turn variable `slot`.
pub fn k_weight(entry: KEntry, cartan_type: CartanType, vars: Variables, slot: usize) -> LaurentPolynomial {
    match entry {
        KEntry::K1 => {
            let zm2 = LaurentPolynomial::variable(vars, slot, -2);
            match cartan_type {
                CartanType::C => zm2,
                CartanType::B => zm2 + LaurentPolynomial::variable(vars, slot, -1),
            }
        }
        _ => LaurentPolynomial::one(vars),
    }
}

/// The boundary data and weights of one model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Model {
    pub family: Family,
    pub cartan: CartanData,
    pub lambda: Partition,
    pub w: SignedPermutation,
    width: usize,
    /// Top boundary spins indexed by column.
    top: Vec<Spin>,
    /// Left boundary spins of the Δ rows, top to bottom.
    left_delta: Vec<Spin>,
}

/// A full edge assignment.
///
/// `vertical[k][c]` is the vertical edge in column `c` above row `k`
/// (layer `2n` is the bottom boundary). `horizontal[r][k]` is the
/// horizontal edge of row `r` on the right of column `k`; `k = 0` meets the
/// U-turn and `k = width` is the left boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct State {
    pub vertical: Vec<Vec<Spin>>,
    pub horizontal: Vec<Vec<Spin>>,
}

/// A type-B state with each `k1` U-turn resolved to one monomial:
/// marked means `z_i^{-1}`, unmarked `z_i^{-2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedState {
    pub state: State,
    /// One slot per U-turn; `None` unless the U-turn is `k1`.
    pub marks: Vec<Option<bool>>,
}

impl State {
    /// Key for the canonical order: edges row by row, left to right,
    /// each row's horizontal edges followed by the vertical edges below it.
    fn canonical_key(&self) -> Vec<Spin> {
        let mut key = Vec::new();
        for r in 0..self.horizontal.len() {
            key.extend(self.horizontal[r].iter().rev());
            key.extend(self.vertical[r + 1].iter().rev());
        }
        key
    }
}

/// Weight of a state split into a monomial part and the list of `k1` U-turns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct WeightParts {
    exps: Exponents,
    k1_mask: u32,
}

impl Model {
    pub fn new(lambda: &Partition, w: &SignedPermutation, family: Family, cartan_type: CartanType) -> Result<Self> {
        Self::with_padding(lambda, w, family, cartan_type, 0)
    }

    /// A model with `extra` additional empty columns on the left.
    pub fn with_padding(
        lambda: &Partition,
        w: &SignedPermutation,
        family: Family,
        cartan_type: CartanType,
        extra: usize,
    ) -> Result<Self> {
        let n = w.rank();
        if n == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        let lambda = lambda.padded(n)?;
        let width = lambda.first() as usize + n + extra;
        let mut top = vec![Spin::EMPTY; width];
        for (j, &part) in lambda.parts().iter().enumerate() {
            top[part as usize + n - 1 - j] = Spin::color(j + 1, false);
        }
        Ok(Model {
            family,
            cartan: CartanData::new(cartan_type, n),
            lambda,
            w: w.clone(),
            width,
            top,
            left_delta: w.color_word(),
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> usize {
        2 * self.rank()
    }

    pub fn top_boundary(&self) -> &[Spin] {
        &self.top
    }

    pub fn left_boundary(&self, row: usize) -> Spin {
        if row % 2 == 0 {
            Spin::EMPTY
        } else {
            self.left_delta[row / 2]
        }
    }

    pub fn row_kind(&self, row: usize) -> RowKind {
        if row % 2 == 0 {
            RowKind::Gamma
        } else {
            RowKind::Delta
        }
    }

    pub fn vars(&self) -> Variables {
        self.cartan.vars()
    }

    pub fn palette(&self) -> ColorPalette {
        ColorPalette::new(self.rank())
    }

    /// The same boundary data with the other Cartan type.
    pub fn with_type(&self, cartan_type: CartanType) -> Model {
        let mut m = self.clone();
        m.cartan.cartan_type = cartan_type;
        m
    }

    fn class_at(&self, s: &State, row: usize, col: usize) -> Option<VertexClass> {
        vertex_class(
            self.row_kind(row),
            self.family,
            s.horizontal[row][col + 1],
            s.vertical[row][col],
            s.horizontal[row][col],
            s.vertical[row + 1][col],
        )
    }

    fn k_at(&self, s: &State, i: usize) -> Option<KEntry> {
        k_entry(self.family, s.horizontal[2 * i][0], s.horizontal[2 * i + 1][0])
    }

    /// Visit every admissible state with its weight parts.
    fn for_each_state(&self, f: impl FnMut(&State, &WeightParts)) {
        self.for_each_state_masked(None, f)
    }

    /// Visit the states whose vertical occupancy (colored or not) matches
    /// `mask[layer][column]`, when a mask is given.
    fn for_each_state_masked(&self, mask: Option<&[Vec<bool>]>, mut f: impl FnMut(&State, &WeightParts)) {
        let n = self.rank();
        let mut s = State {
            vertical: vec![vec![Spin::EMPTY; self.width]; 2 * n + 1],
            horizontal: vec![vec![Spin::EMPTY; self.width + 1]; 2 * n],
        };
        s.vertical[0] = self.top.clone();
        let mut acc = WeightParts { exps: vec![0; n], k1_mask: 0 };
        self.dfs_row(0, &mut s, &mut acc, mask, &mut f);
    }

    fn dfs_row(
        &self,
        row: usize,
        s: &mut State,
        acc: &mut WeightParts,
        mask: Option<&[Vec<bool>]>,
        f: &mut impl FnMut(&State, &WeightParts),
    ) {
        if row == self.rows() {
            f(s, acc);
            return;
        }
        match self.row_kind(row) {
            RowKind::Gamma => {
                s.horizontal[row][self.width] = Spin::EMPTY;
                self.dfs_gamma(row, self.width, s, acc, mask, f);
            }
            RowKind::Delta => {
                // Δ paths run right to left: fix the U-turn first.
                let i = row / 2;
                let top = s.horizontal[row - 1][0];
                let mut options = vec![];
                if top.is_empty() {
                    options.push(Spin::EMPTY);
                } else {
                    options.push(top.bar());
                    options.push(top);
                }
                for bottom in options {
                    let Some(entry) = k_entry(self.family, top, bottom) else { continue };
                    s.horizontal[row][0] = bottom;
                    let k1 = entry == KEntry::K1;
                    if k1 {
                        acc.k1_mask |= 1 << i;
                    }
                    self.dfs_delta(row, 0, s, acc, mask, f);
                    if k1 {
                        acc.k1_mask &= !(1 << i);
                    }
                }
            }
        }
    }

    /// Γ row, processing column `k − 1` (left to right as `k` decreases).
    fn dfs_gamma(
        &self,
        row: usize,
        k: usize,
        s: &mut State,
        acc: &mut WeightParts,
        mask: Option<&[Vec<bool>]>,
        f: &mut impl FnMut(&State, &WeightParts),
    ) {
        if k == 0 {
            self.dfs_row(row + 1, s, acc, mask, f);
            return;
        }
        let col = k - 1;
        let l = s.horizontal[row][col + 1];
        let t = s.vertical[row][col];
        let mut options = [(l, t), (t, l)];
        let count = if l == t { 1 } else { 2 };
        options.sort();
        for &(r, b) in &options[..count] {
            if mask.is_some_and(|m| m[row + 1][col] != b.is_color()) {
                continue;
            }
            if let Some(class) = gamma_class(self.family, l, t, r, b) {
                s.horizontal[row][col] = r;
                s.vertical[row + 1][col] = b;
                let e = class.exponent(RowKind::Gamma);
                acc.exps[row / 2] += e;
                self.dfs_gamma(row, col, s, acc, mask, f);
                acc.exps[row / 2] -= e;
            }
        }
    }

    /// Δ row, processing column `col` (right to left as `col` increases).
    fn dfs_delta(
        &self,
        row: usize,
        col: usize,
        s: &mut State,
        acc: &mut WeightParts,
        mask: Option<&[Vec<bool>]>,
        f: &mut impl FnMut(&State, &WeightParts),
    ) {
        if col == self.width {
            if s.horizontal[row][col] == self.left_boundary(row) {
                self.dfs_row(row + 1, s, acc, mask, f);
            }
            return;
        }
        let last_row = row + 1 == self.rows();
        let r = s.horizontal[row][col];
        let t = s.vertical[row][col];
        let mut options = [(r, t), (t, r)];
        let count = if r == t { 1 } else { 2 };
        options.sort();
        for &(l, b) in &options[..count] {
            if (last_row && b.is_color()) || mask.is_some_and(|m| m[row + 1][col] != b.is_color()) {
                continue;
            }
            if let Some(class) = delta_class(self.family, l, t, r, b) {
                s.horizontal[row][col + 1] = l;
                s.vertical[row + 1][col] = b;
                let e = class.exponent(RowKind::Delta);
                acc.exps[row / 2] -= e;
                self.dfs_delta(row, col + 1, s, acc, mask, f);
                acc.exps[row / 2] += e;
            }
        }
    }

    fn weight_from_parts(&self, parts: &WeightParts) -> LaurentPolynomial {
        let vars = self.vars();
        let mut p = LaurentPolynomial::monomial(vars, parts.exps.clone(), 1);
        for i in 0..self.rank() {
            if parts.k1_mask >> i & 1 == 1 {
                // the monomial part already excludes k1, so multiply it in
                p = &p * &k_weight(KEntry::K1, self.cartan.cartan_type, vars, i);
            }
        }
        p
    }

    /// All admissible states in canonical order.
    pub fn enumerate_states(&self) -> Vec<State> {
        let mut out = Vec::new();
        self.for_each_state(|s, _| out.push(s.clone()));
        out.sort_by_cached_key(State::canonical_key);
        out
    }

    /// All colorings of a vertical occupancy pattern `mask[layer][column]`
    /// that are admissible in this model, in canonical order.
    pub fn states_with_occupancy(&self, mask: &[Vec<bool>]) -> Result<Vec<State>> {
        let ok = mask.len() == self.rows() + 1 && mask.iter().all(|m| m.len() == self.width);
        if !ok {
            return Err(Error::Invalid("occupancy shape does not match the model".into()));
        }
        if mask[0].iter().zip(&self.top).any(|(m, t)| *m != t.is_color()) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        self.for_each_state_masked(Some(mask), |s, _| out.push(s.clone()));
        out.sort_by_cached_key(State::canonical_key);
        Ok(out)
    }

    pub fn count_states(&self) -> usize {
        let mut count = 0;
        self.for_each_state(|_, _| count += 1);
        count
    }

    /// Sum of state weights.
    pub fn partition_function(&self) -> LaurentPolynomial {
        let mut tally: HashMap<WeightParts, i64> = HashMap::new();
        self.for_each_state(|_, parts| *tally.entry(parts.clone()).or_default() += 1);
        let mut total = LaurentPolynomial::zero(self.vars());
        for (parts, count) in tally {
            total += self.weight_from_parts(&parts).scale(&BigInt::from(count));
        }
        total
    }

    fn check_shape(&self, s: &State) -> Result<()> {
        let ok = s.vertical.len() == self.rows() + 1
            && s.horizontal.len() == self.rows()
            && s.vertical.iter().all(|v| v.len() == self.width)
            && s.horizontal.iter().all(|h| h.len() == self.width + 1);
        if !ok {
            return Err(Error::Invalid("state shape does not match the model".into()));
        }
        Ok(())
    }

    /// Check boundary conditions and that every vertex and U-turn is admissible.
    pub fn check_state(&self, s: &State) -> Result<()> {
        self.check_shape(s)?;
        if s.vertical[0] != self.top {
            return Err(Error::ZeroWeight("top boundary differs from the model".into()));
        }
        if s.vertical[self.rows()].iter().any(|x| x.is_color()) {
            return Err(Error::ZeroWeight("bottom boundary must be empty".into()));
        }
        for row in 0..self.rows() {
            if s.horizontal[row][self.width] != self.left_boundary(row) {
                return Err(Error::ZeroWeight(format!("left boundary of row {row}")));
            }
            for col in 0..self.width {
                if self.class_at(s, row, col).is_none() {
                    return Err(Error::ZeroWeight(format!("vertex at row {row}, column {col}")));
                }
            }
        }
        for i in 0..self.rank() {
            if self.k_at(s, i).is_none() {
                return Err(Error::ZeroWeight(format!("U-turn {}", i + 1)));
            }
        }
        Ok(())
    }

    fn parts_of(&self, s: &State) -> Result<WeightParts> {
        self.check_state(s)?;
        let mut parts = WeightParts { exps: vec![0; self.rank()], k1_mask: 0 };
        for row in 0..self.rows() {
            let kind = self.row_kind(row);
            let sign = if kind == RowKind::Gamma { 1 } else { -1 };
            for col in 0..self.width {
                let class = self.class_at(s, row, col).expect("checked");
                parts.exps[row / 2] += sign * class.exponent(kind);
            }
        }
        for i in 0..self.rank() {
            if self.k_at(s, i) == Some(KEntry::K1) {
                parts.k1_mask |= 1 << i;
            }
        }
        Ok(parts)
    }

    /// Product of all vertex and U-turn weights.
    pub fn state_weight(&self, s: &State) -> Result<LaurentPolynomial> {
        Ok(self.weight_from_parts(&self.parts_of(s)?))
    }

    /// Vertex classes row by row, columns left to right.
    pub fn vertex_classes(&self, s: &State) -> Result<Vec<Vec<VertexClass>>> {
        self.check_state(s)?;
        Ok((0..self.rows())
            .map(|row| (0..self.width).rev().map(|c| self.class_at(s, row, c).expect("checked")).collect())
            .collect())
    }

    pub fn k_entries(&self, s: &State) -> Result<Vec<KEntry>> {
        self.check_state(s)?;
        Ok((0..self.rank()).map(|i| self.k_at(s, i).expect("checked")).collect())
    }

    /// Number of `a2†` vertices plus `k2` U-turns. Atom family only.
    pub fn inversion_statistic(&self, s: &State) -> Result<usize> {
        if self.family != Family::Atom {
            return Err(Error::Invalid("the inversion statistic is defined for the atom family".into()));
        }
        let crossings = self.vertex_classes(s)?.iter().flatten().filter(|&&c| c == VertexClass::A2Dagger).count();
        let k2 = self.k_entries(s)?.iter().filter(|&&k| k == KEntry::K2).count();
        Ok(crossings + k2)
    }

    /// Expand each state over all markings of its `k1` U-turns. Type B only.
    pub fn enumerate_marked_states(&self) -> Result<Vec<MarkedState>> {
        if self.cartan.cartan_type != CartanType::B {
            return Err(Error::Invalid("marked states exist only in type B".into()));
        }
        let mut out = Vec::new();
        for s in self.enumerate_states() {
            out.extend(self.markings(&s)?);
        }
        Ok(out)
    }

    /// All markings of one state.
    pub fn markings(&self, s: &State) -> Result<Vec<MarkedState>> {
        let entries = self.k_entries(s)?;
        let slots: Vec<usize> = (0..entries.len()).filter(|&i| entries[i] == KEntry::K1).collect();
        Ok((0u32..(1 << slots.len()))
            .map(|mask| {
                let mut marks = vec![None; entries.len()];
                for (k, &i) in slots.iter().enumerate() {
                    marks[i] = Some(mask >> k & 1 == 1);
                }
                MarkedState { state: s.clone(), marks }
            })
            .collect())
    }

    /// Monomial weight of a marked state.
    pub fn marked_weight(&self, m: &MarkedState) -> Result<LaurentPolynomial> {
        let parts = self.parts_of(&m.state)?;
        let mut exps = parts.exps;
        for (i, e) in exps.iter_mut().enumerate() {
            let is_k1 = parts.k1_mask >> i & 1 == 1;
            match (is_k1, m.marks.get(i).copied().flatten()) {
                (true, Some(true)) => *e -= 1,
                (true, Some(false)) => *e -= 2,
                (false, None) => {}
                _ => return Err(Error::Invalid(format!("marks do not match the k1 U-turns at {}", i + 1))),
            }
        }
        Ok(LaurentPolynomial::monomial(self.vars(), exps, 1))
    }

    /// Occupancy pattern of a state, forgetting colors.
    pub fn uncolor(s: &State) -> UncoloredState {
        UncoloredState {
            vertical: s.vertical.iter().map(|v| v.iter().map(|x| x.is_color()).collect()).collect(),
            horizontal: s.horizontal.iter().map(|h| h.iter().map(|x| x.is_color()).collect()).collect(),
        }
    }

    /// JSON export: boundary data, edges, and per-vertex classification.
    pub fn state_json(&self, s: &State) -> Result<Value> {
        let classes = self.vertex_classes(s)?;
        let ks = self.k_entries(s)?;
        let vertices: Vec<Value> = (0..self.rows())
            .flat_map(|row| {
                let classes = &classes;
                (0..self.width).map(move |k| {
                    let col = self.width - 1 - k;
                    json!({"row": row + 1, "column": col, "class": classes[row][k].label()})
                })
            })
            .collect();
        let uturns: Vec<Value> =
            ks.iter().enumerate().map(|(i, k)| json!({"uturn": i + 1, "entry": k.label()})).collect();
        Ok(json!({
            "weight": self.state_weight(s)?.to_string(),
            "vertical": s.vertical,
            "horizontal": s.horizontal,
            "vertices": vertices,
            "uturns": uturns,
        }))
    }

    /// Model description for JSON output.
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "type": self.cartan.cartan_type,
            "rank": self.rank(),
            "lambda": self.lambda,
            "w": self.w,
            "columns": self.width,
            "top": self.top,
            "left_delta": self.left_delta,
        })
    }

    /// ASCII picture: vertical edges between rows, Γ/Δ vertices as `G`/`D`,
    /// colors as letters (`A` = `c1`, `a` = `c̄1`), U-turns as `)`.
    pub fn render(&self, s: &State) -> String {
        let mut out = String::new();
        let vline = |layer: usize| -> String {
            let mut line = String::from(" ");
            for col in (0..self.width).rev() {
                line.push_str(&format!(" {} ", s.vertical[layer][col].glyph()));
                line.push(' ');
            }
            line.trim_end().to_string()
        };
        for row in 0..self.rows() {
            out.push_str(&vline(row));
            out.push('\n');
            let v = if self.row_kind(row) == RowKind::Gamma { 'G' } else { 'D' };
            let mut line = String::new();
            for col in (0..self.width).rev() {
                line.push(s.horizontal[row][col + 1].glyph());
                line.push(' ');
                line.push(v);
                line.push(' ');
            }
            line.push(s.horizontal[row][0].glyph());
            line.push_str(if row % 2 == 0 { " \\" } else { " /" });
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&vline(self.rows()));
        out.push('\n');
        out
    }
}

/// Edge occupancy without colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UncoloredState {
    pub vertical: Vec<Vec<bool>>,
    pub horizontal: Vec<Vec<bool>>,
}

/// Partition function of the model for `(λ, w, family, type)`.
pub fn partition_function(
    family: Family,
    cartan_type: CartanType,
    lambda: &Partition,
    w: &SignedPermutation,
) -> Result<LaurentPolynomial> {
    Ok(Model::new(lambda, w, family, cartan_type)?.partition_function())
}

/// The four entries of the U-turn matrix seen after the bottom-row transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FishEntry {
    /// top empty, bottom unbarred
    H1,
    /// top empty, bottom barred
    H1Bar,
    /// top unbarred, bottom empty
    H2,
    /// top barred, bottom empty
    H2Bar,
}

impl FishEntry {
    pub fn of(top: Spin, bottom: Spin) -> Option<FishEntry> {
        match (top.is_empty(), bottom.is_empty()) {
            (true, false) if bottom.is_unbarred() => Some(FishEntry::H1),
            (true, false) => Some(FishEntry::H1Bar),
            (false, true) if top.is_unbarred() => Some(FishEntry::H2),
            (false, true) => Some(FishEntry::H2Bar),
            _ => None,
        }
    }
}

/// A state whose last Δ row has been rewritten as a Γ row by swapping its
/// single color `d` with the empty spin on every horizontal edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottomRowTransform {
    pub state: State,
    pub color: Spin,
    pub entry: FishEntry,
}

fn swap_color(x: Spin, d: Spin) -> Spin {
    if x == d {
        Spin::EMPTY
    } else if x.is_empty() {
        d
    } else {
        x
    }
}

impl Model {
    /// Swap `d ↔ 0` on the horizontal edges of the last row, `d` being the
    /// row's left boundary color, and read the U-turn as a fish entry.
    pub fn bottom_row_gamma_transform(&self, s: &State) -> Result<BottomRowTransform> {
        self.check_state(s)?;
        let last = self.rows() - 1;
        let d = self.left_boundary(last);
        if let Some(x) = s.horizontal[last].iter().find(|x| x.is_color() && **x != d) {
            return Err(Error::Encoding(format!("last row carries {x} besides {d}")));
        }
        let mut t = s.clone();
        for x in t.horizontal[last].iter_mut() {
            *x = swap_color(*x, d);
        }
        let entry = FishEntry::of(t.horizontal[last - 1][0], t.horizontal[last][0])
            .ok_or_else(|| Error::Encoding("U-turn does not map to a fish entry".into()))?;
        Ok(BottomRowTransform { state: t, color: d, entry })
    }

    /// Undo [`Model::bottom_row_gamma_transform`].
    pub fn bottom_row_gamma_inverse(&self, t: &BottomRowTransform) -> Result<State> {
        let mut s = t.state.clone();
        let last = self.rows() - 1;
        for x in s.horizontal[last].iter_mut() {
            *x = swap_color(*x, t.color);
        }
        self.check_state(&s)?;
        Ok(s)
    }

    /// Compare each vertex of the original last Δ row with the Γ reading of
    /// the transformed row; both use the parameter `z_n^{-1}`.
    pub fn bottom_row_weights_match(&self, s: &State) -> Result<bool> {
        let t = self.bottom_row_gamma_transform(s)?;
        let last = self.rows() - 1;
        Ok((0..self.width).all(|col| {
            let before = delta_class(
                self.family,
                s.horizontal[last][col + 1],
                s.vertical[last][col],
                s.horizontal[last][col],
                s.vertical[last + 1][col],
            );
            let after = gamma_class(
                self.family,
                t.state.horizontal[last][col + 1],
                t.state.vertical[last][col],
                t.state.horizontal[last][col],
                t.state.vertical[last + 1][col],
            );
            match (before, after) {
                (Some(x), Some(y)) => x.exponent(RowKind::Delta) == y.exponent(RowKind::Gamma),
                _ => false,
            }
        }))
    }
}

/// Which functional equation to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `i < n`: the relation between `Z_w` and `Z_{s_i w}` from type-A crossings.
    AStep,
    /// `i = n`: the relation from the U-turn.
    BcStep,
}

/// Check the functional equation relating `Z_w` and `Z_{s_i w}`.
///
/// Atom family, `j = i + 1`:
/// `(z_i − z_j) Z_{s_i w} = z_j Z_w − z_i Z_w(s_i z)`;
/// `(z_n^2 − 1) Z_{s_n w} = Z_w − Z_w(s_n z)` (C), `(z_n − 1)` in type B.
///
/// Character family:
/// `(z_i − z_j) Z_{s_i w} = z_i (Z_w − Z_w(s_i z))`;
/// `(z_n^2 − 1) Z_{s_n w} = z_n^2 Z_w − Z_w(s_n z)` (C) and
/// `(z_n − 1) Z_{s_n w} = z_n Z_w − Z_w(s_n z)` (B).
pub fn verify_functional_equation(
    relation: Relation,
    family: Family,
    lambda: &Partition,
    w: &SignedPermutation,
    i: usize,
    cartan_type: CartanType,
) -> Result<bool> {
    let n = w.rank();
    match relation {
        Relation::AStep if i == 0 || i >= n => {
            return Err(Error::Invalid(format!("A-step needs 1 <= i < n, got i = {i}")))
        }
        Relation::BcStep if i != n => return Err(Error::Invalid(format!("BC-step needs i = n = {n}, got i = {i}"))),
        _ => {}
    }
    let group = WeylGroup::new(n);
    let s = SignedPermutation::generator(n, i)?;
    let sw = s.compose(w)?;
    if group.length(&sw) != group.length(w) + 1 {
        return Err(Error::Invalid(format!("l(s{i} w) != l(w) + 1 for w = {w}")));
    }
    let zw = partition_function(family, cartan_type, lambda, w)?;
    let zsw = partition_function(family, cartan_type, lambda, &sw)?;
    let zw_s = zw.act_variables(&s)?;
    let vars = Variables::z(n);
    let zi = LaurentPolynomial::variable(vars, i - 1, 1);
    let (lhs, rhs) = match relation {
        Relation::AStep => {
            let zj = LaurentPolynomial::variable(vars, i, 1);
            let lhs = (&zi - &zj) * &zsw;
            let rhs = match family {
                Family::Atom => &zj * &zw - &zi * &zw_s,
                Family::Character => &zi * &(&zw - &zw_s),
            };
            (lhs, rhs)
        }
        Relation::BcStep => {
            let power = match cartan_type {
                CartanType::C => 2,
                CartanType::B => 1,
            };
            let zp = LaurentPolynomial::variable(vars, n - 1, power);
            let one = LaurentPolynomial::one(vars);
            let lhs = (&zp - &one) * &zsw;
            let rhs = match family {
                Family::Atom => &zw - &zw_s,
                Family::Character => &zp * &zw - &zw_s,
            };
            (lhs, rhs)
        }
    };
    Ok(lhs == rhs)
}

/// `z^ρ · f`.
pub fn times_rho(f: &LaurentPolynomial, cd: &CartanData) -> LaurentPolynomial {
    &rho_monomial(cd) * f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }
    fn w(s: &str) -> SignedPermutation {
        SignedPermutation::parse(s, 2).unwrap()
    }
    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variables::z(2)).unwrap()
    }
    fn model(l: &str, x: &str, f: Family, t: CartanType) -> Model {
        Model::new(&lam(l), &w(x), f, t).unwrap()
    }

    #[test]
    fn ground_state() {
        let m = model("3,1", "1", Family::Atom, CartanType::C);
        assert_eq!(m.width(), 5);
        assert_eq!(m.top_boundary()[4], Spin::color(1, false));
        assert_eq!(m.top_boundary()[1], Spin::color(2, false));
        let states = m.enumerate_states();
        assert_eq!(states.len(), 1);
        assert_eq!(m.state_weight(&states[0]).unwrap(), p("z1^4*z2"));
    }

    #[test]
    fn worked_atom_table() {
        let expected = [
            ("1", "z1^3*z2", 1),
            ("s1", "z1^2*z2^2", 1),
            ("s2", "z1^3*z2^-1", 1),
            ("s1 s2", "z1^2 + z2^2 + z1*z2", 3),
            ("s2 s1", "z1^2 + z1^2*z2^-2", 2),
            ("s1 s2 s1", "1 + z1*z2 + z1*z2^-1 + z1^-1*z2", 4),
            ("s2 s1 s2", "1 + z2^-2 + z1*z2^-1", 3),
            ("w0", "z1^-1*z2^-1", 1),
        ];
        for (x, z, count) in expected {
            let m = model("2,1", x, Family::Atom, CartanType::C);
            assert_eq!(m.partition_function(), p(z), "{x}");
            assert_eq!(m.count_states(), count, "{x}");
        }
    }

    #[test]
    fn type_b_weights() {
        let m = model("2,1", "s2", Family::Atom, CartanType::B);
        assert_eq!(m.partition_function(), p("z1^3 + z1^3*z2^-1"));
        let s = &m.enumerate_states()[0];
        assert_eq!(m.state_weight(s).unwrap(), p("z1^3*z2^-1 + z1^3*z2^-2").shift(&[0, 1]));
        let marked = m.enumerate_marked_states().unwrap();
        assert_eq!(marked.len(), 2);
        let total =
            marked.iter().map(|x| m.marked_weight(x).unwrap()).fold(LaurentPolynomial::zero(m.vars()), |a, b| a + b);
        assert_eq!(total, m.partition_function());
        assert!(model("2,1", "s2", Family::Atom, CartanType::C).enumerate_marked_states().is_err());
    }

    #[test]
    fn character_state_count() {
        assert_eq!(model("2,1", "s2 s1 s2", Family::Character, CartanType::C).count_states(), 11);
    }

    #[test]
    fn bad_partition_is_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Model::new(&lam("1,1,1"), &w("1"), Family::Atom, CartanType::C).is_err());
    }

    #[test]
    fn inversion_examples() {
        let m = model("2,1", "1", Family::Atom, CartanType::C);
        assert_eq!(m.inversion_statistic(&m.enumerate_states()[0]).unwrap(), 4);
        let m = model("2,1", "w0", Family::Atom, CartanType::C);
        assert_eq!(m.inversion_statistic(&m.enumerate_states()[0]).unwrap(), 0);
        let m = model("2,1", "s1 s2", Family::Atom, CartanType::C);
        for s in m.enumerate_states() {
            assert_eq!(m.inversion_statistic(&s).unwrap(), 2);
        }
    }

    #[test]
    fn bottom_row_transform_round_trip() {
        let m = model("3,1", "1", Family::Atom, CartanType::C);
        let s = &m.enumerate_states()[0];
        let t = m.bottom_row_gamma_transform(s).unwrap();
        assert_eq!(t.color, Spin::color(2, true));
        assert_ne!(t.state.horizontal[3], s.horizontal[3]);
        assert_eq!(m.bottom_row_gamma_inverse(&t).unwrap(), *s);
        assert!(m.bottom_row_weights_match(s).unwrap());
    }

    #[test]
    fn functional_equation_examples() {
        use Relation::*;
        assert!(verify_functional_equation(AStep, Family::Atom, &lam("2,1"), &w("1"), 1, CartanType::C).unwrap());
        assert!(verify_functional_equation(BcStep, Family::Atom, &lam("2,1"), &w("1"), 2, CartanType::C).unwrap());
        assert!(verify_functional_equation(BcStep, Family::Character, &lam("2,1"), &w("1"), 2, CartanType::B).unwrap());
        assert!(verify_functional_equation(AStep, Family::Atom, &lam("2,1"), &w("s1"), 1, CartanType::C).is_err());
    }

    #[test]
    fn render_has_one_line_per_layer_and_row() {
        let m = model("2,1", "1", Family::Atom, CartanType::C);
        let text = m.render(&m.enumerate_states()[0]);
        assert_eq!(text.lines().count(), 9);
    }
}
