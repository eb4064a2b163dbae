//! R-matrices and the solvability identities of the U-turn models.
//!
//! Corners of an R-vertex are listed as `(BL, TL, TR, BR)`. The first
//! parameter `x` belongs to the line running from bottom-left to top-right,
//! the second `y` to the line running from top-left to bottom-right.
//!
//! All checks work by composing "transfer" maps that send a pair of input
//! spins to the weighted list of admissible output pairs. A three-vertex
//! side of the RLL relation becomes a map from `(a, b, c)` to `(d, e, f)`,
//! and two sides agree exactly when the two maps agree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPolynomial, Variables};
use crate::demazure::CartanType;
use crate::error::{Error, Result};
use crate::model::{delta_class, gamma_class, k_entry, k_weight, Family, FishEntry, KEntry, RowKind};
use crate::weyl::{ColorPalette, Spin};

/// Which pair of row types an R-matrix intertwines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RKind {
    GammaGamma,
    DeltaDelta,
    DeltaGamma,
    GammaDelta,
}

impl RKind {
    pub const ALL: [RKind; 4] = [RKind::GammaGamma, RKind::DeltaDelta, RKind::DeltaGamma, RKind::GammaDelta];

    /// Row types of the first and second line.
    pub fn rows(self) -> (RowKind, RowKind) {
        match self {
            RKind::GammaGamma => (RowKind::Gamma, RowKind::Gamma),
            RKind::DeltaDelta => (RowKind::Delta, RowKind::Delta),
            RKind::DeltaGamma => (RowKind::Delta, RowKind::Gamma),
            RKind::GammaDelta => (RowKind::Gamma, RowKind::Delta),
        }
    }
}

impl fmt::Display for RKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RKind::GammaGamma => "gamma-gamma",
            RKind::DeltaDelta => "delta-delta",
            RKind::DeltaGamma => "delta-gamma",
            RKind::GammaDelta => "gamma-delta",
        })
    }
}

impl FromStr for RKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma-gamma" | "GG" => Ok(RKind::GammaGamma),
            "delta-delta" | "DD" => Ok(RKind::DeltaDelta),
            "delta-gamma" | "DG" => Ok(RKind::DeltaGamma),
            "gamma-delta" | "GD" => Ok(RKind::GammaDelta),
            _ => Err(Error::Parse(format!("unknown R-matrix kind {s:?}"))),
        }
    }
}

/// Symbolic value of one R-matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum REntry {
    X,
    Y,
    XMinusY,
    MinusX,
    /// One of the two free ΓΔ slots.
    Free(usize),
}

pub type Corners = [Spin; 4];

/// An R-matrix table. Only the ΓΔ kind uses `free`; its two entries sit on
/// the slots `(c', c', c, c)` and `(c', c, c', c)` with `c' < c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub kind: RKind,
    pub family: Family,
    pub free: [LaurentPolynomial; 2],
}

fn all_colored(t: &Corners) -> bool {
    t.iter().all(|s| s.is_color())
}

impl RMatrix {
    /// The table with the default free entries `x` and `x − y` (in `z_1 = z_i`, `z_2 = z_j`).
    pub fn new(kind: RKind, family: Family) -> Self {
        let v = Variables::z(2);
        let x = LaurentPolynomial::variable(v, 0, 1);
        let y = LaurentPolynomial::variable(v, 1, 1);
        let xy = &x - &y;
        RMatrix { kind, family, free: [x, xy] }
    }

    pub fn with_free(kind: RKind, family: Family, free: [LaurentPolynomial; 2]) -> Self {
        RMatrix { kind, family, free }
    }

    pub fn entry(&self, t: &Corners) -> Option<REntry> {
        let [bl, tl, tr, br] = *t;
        let zero = |s: Spin| s.is_empty();
        let char = self.family == Family::Character;
        use REntry::*;
        match self.kind {
            RKind::GammaGamma => {
                if t.iter().all(|s| s.is_empty()) {
                    return Some(Y);
                }
                if zero(bl) && tl.is_color() && tr == tl && zero(br) {
                    return Some(Y);
                }
                if bl.is_color() && zero(tl) && tr == bl && zero(br) {
                    return Some(XMinusY);
                }
                if bl.is_color() && zero(tl) && zero(tr) && br == bl {
                    return Some(X);
                }
                if all_colored(t) {
                    if bl == tl && tl == tr && tr == br {
                        return Some(X);
                    }
                    if tr == tl && br == bl {
                        if bl < tl {
                            return Some(if char { Y } else { X });
                        }
                        return Some(if char { X } else { Y });
                    }
                    if bl > tl && tr == bl && br == tl {
                        return Some(XMinusY);
                    }
                }
                None
            }
            RKind::DeltaDelta => {
                if t.iter().all(|s| s.is_empty()) {
                    return Some(Y);
                }
                if zero(bl) && tl.is_color() && tr == tl && zero(br) {
                    return Some(X);
                }
                if zero(bl) && tl.is_color() && zero(tr) && br == tl {
                    return Some(XMinusY);
                }
                if bl.is_color() && zero(tl) && zero(tr) && br == bl {
                    return Some(Y);
                }
                if all_colored(t) {
                    if bl == tl && tl == tr && tr == br {
                        return Some(X);
                    }
                    if tr == tl && br == bl {
                        if bl < tl {
                            return Some(if char { X } else { Y });
                        }
                        return Some(if char { Y } else { X });
                    }
                    if bl > tl && tr == bl && br == tl {
                        return Some(XMinusY);
                    }
                }
                None
            }
            RKind::DeltaGamma => {
                if t.iter().all(|s| s.is_empty()) {
                    return Some(XMinusY);
                }
                if zero(bl) && zero(tl) && tr.is_color() && br == tr {
                    return Some(X);
                }
                if bl.is_color() && zero(tl) && tr == bl && zero(br) {
                    return Some(Y);
                }
                if zero(bl) && tl.is_color() && zero(tr) && br == tl {
                    return Some(Y);
                }
                if bl.is_color() && tl == bl && zero(tr) && zero(br) {
                    return Some(Y);
                }
                if all_colored(t) {
                    if bl == tl && tl == tr && tr == br {
                        return Some(Y);
                    }
                    // (c', c', c, c) in the atom family, (c, c, c', c') in the character family
                    if bl == tl && tr == br {
                        let ok = if char { bl > tr } else { bl < tr };
                        return ok.then_some(Y);
                    }
                    if bl < tl && tr == bl && br == tl {
                        return Some(Y);
                    }
                }
                None
            }
            RKind::GammaDelta => {
                if t.iter().all(|s| s.is_empty()) {
                    return Some(MinusX);
                }
                if zero(bl) && zero(tl) && tr.is_color() && br == tr {
                    return Some(Y);
                }
                if bl.is_color() && zero(tl) && tr == bl && zero(br) {
                    return Some(X);
                }
                if zero(bl) && tl.is_color() && zero(tr) && br == tl {
                    return Some(X);
                }
                if bl.is_color() && tl == bl && zero(tr) && zero(br) {
                    return Some(X);
                }
                if all_colored(t) {
                    if bl == tl && tl == tr && tr == br {
                        return Some(XMinusY);
                    }
                    if bl < tr && tl == bl && br == tr {
                        return Some(Free(0));
                    }
                    if bl < tl && tr == bl && br == tl {
                        return Some(Free(1));
                    }
                }
                None
            }
        }
    }

    /// The entry as a polynomial at parameters `(x, y)`. Free entries are
    /// returned as stored.
    pub fn weight(&self, t: &Corners, x: &LaurentPolynomial, y: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        Some(match self.entry(t)? {
            REntry::X => x.clone(),
            REntry::Y => y.clone(),
            REntry::XMinusY => x - y,
            REntry::MinusX => -x,
            REntry::Free(k) => self.free[k].clone(),
        })
    }

    /// The entry at a rational point; free entries are evaluated at `(x, y)`.
    pub fn value(&self, t: &Corners, x: &BigRational, y: &BigRational) -> Result<Option<BigRational>> {
        Ok(match self.entry(t) {
            None => None,
            Some(REntry::X) => Some(x.clone()),
            Some(REntry::Y) => Some(y.clone()),
            Some(REntry::XMinusY) => Some(x - y),
            Some(REntry::MinusX) => Some(-x),
            Some(REntry::Free(k)) => Some(self.free[k].evaluate(&[x.clone(), y.clone()])?),
        })
    }

    /// Every nonzero entry over `spins`, in corner order.
    pub fn entries(&self, spins: &[Spin]) -> Vec<(Corners, REntry)> {
        let mut out = Vec::new();
        for t in corner_tuples(spins) {
            if let Some(e) = self.entry(&t) {
                out.push((t, e));
            }
        }
        out
    }
}

fn corner_tuples(spins: &[Spin]) -> Vec<Corners> {
    let mut out = Vec::with_capacity(spins.len().pow(4));
    for &a in spins {
        for &b in spins {
            for &c in spins {
                for &d in spins {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Empty spin plus `colors` colors (`colors` even), in internal order.
pub fn spin_set(colors: usize) -> Result<Vec<Spin>> {
    if colors % 2 != 0 {
        return Err(Error::Invalid(format!("color count {colors} must be even")));
    }
    Ok(ColorPalette::new(colors / 2).spins())
}

type Outputs<W> = Vec<(Spin, Spin, W)>;

/// Map from an input pair to the weighted output pairs of one vertex.
struct Transfer<W> {
    map: HashMap<(Spin, Spin), Outputs<W>>,
}

impl<W: Clone> Transfer<W> {
    fn build(spins: &[Spin], f: impl Fn(&Corners) -> Option<W>) -> Self {
        let mut map: HashMap<(Spin, Spin), Outputs<W>> = HashMap::new();
        for t in corner_tuples(spins) {
            if let Some(w) = f(&t) {
                map.entry((t[0], t[1])).or_default().push((t[2], t[3], w));
            }
        }
        Transfer { map }
    }

    fn get(&self, a: Spin, b: Spin) -> &[(Spin, Spin, W)] {
        self.map.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// An L-vertex table as a function of `(l, t, r, b)` at parameter `z_slot`.
fn l_weight(kind: RowKind, family: Family, t: &Corners, vars: Variables, slot: usize) -> Option<LaurentPolynomial> {
    let [l, top, r, b] = *t;
    let class = match kind {
        RowKind::Gamma => gamma_class(family, l, top, r, b)?,
        RowKind::Delta => delta_class(family, l, top, r, b)?,
    };
    Some(LaurentPolynomial::variable(vars, slot, class.exponent(kind)))
}

type Six = [Spin; 6];

/// Both sides of the RLL relation as maps `(a,b,c,d,e,f) → weight`.
fn rll_sides(r: &RMatrix, spins: &[Spin]) -> (HashMap<Six, LaurentPolynomial>, HashMap<Six, LaurentPolynomial>) {
    let vars = Variables::z(2);
    let x = LaurentPolynomial::variable(vars, 0, 1);
    let y = LaurentPolynomial::variable(vars, 1, 1);
    let (phi, theta) = r.kind.rows();
    let rt = Transfer::build(spins, |t| r.weight(t, &x, &y));
    let lp = Transfer::build(spins, |t| l_weight(phi, r.family, t, vars, 0));
    let lt = Transfer::build(spins, |t| l_weight(theta, r.family, t, vars, 1));
    let mut lhs: HashMap<Six, LaurentPolynomial> = HashMap::new();
    let mut rhs: HashMap<Six, LaurentPolynomial> = HashMap::new();
    for &a in spins {
        for &b in spins {
            for &c in spins {
                // R(a,b,x,y) LΦ(x,c,d,m) LΘ(y,m,e,f)
                for (xs, ys, w1) in rt.get(a, b) {
                    for (d, m, w2) in lp.get(*xs, c) {
                        let w12 = w1 * w2;
                        for (e, f, w3) in lt.get(*ys, *m) {
                            *lhs.entry([a, b, c, *d, *e, *f]).or_insert_with(|| LaurentPolynomial::zero(vars)) +=
                                &w12 * w3;
                        }
                    }
                }
                // LΘ(b,c,y,m) LΦ(a,m,x,f) R(x,y,d,e)
                for (ys, m, w1) in lt.get(b, c) {
                    for (xs, f, w2) in lp.get(a, *m) {
                        let w12 = w1 * w2;
                        for (d, e, w3) in rt.get(*xs, *ys) {
                            *rhs.entry([a, b, c, *d, *e, *f]).or_insert_with(|| LaurentPolynomial::zero(vars)) +=
                                &w12 * w3;
                        }
                    }
                }
            }
        }
    }
    lhs.retain(|_, v| !v.is_zero());
    rhs.retain(|_, v| !v.is_zero());
    (lhs, rhs)
}

/// A boundary on which the two sides of a relation differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch<B> {
    pub boundary: B,
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct YbeReport {
    pub kind: RKind,
    pub family: Family,
    pub colors: usize,
    pub boundaries: usize,
    pub nonzero_boundaries: usize,
    pub mismatches: Vec<Mismatch<Six>>,
}

impl YbeReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare<B: Copy + Ord + std::hash::Hash>(
    lhs: &HashMap<B, LaurentPolynomial>,
    rhs: &HashMap<B, LaurentPolynomial>,
    vars: Variables,
) -> Vec<Mismatch<B>> {
    let mut keys: Vec<B> = lhs.keys().chain(rhs.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    let zero = LaurentPolynomial::zero(vars);
    keys.into_iter()
        .filter_map(|k| {
            let l = lhs.get(&k).unwrap_or(&zero);
            let r = rhs.get(&k).unwrap_or(&zero);
            (l != r).then(|| Mismatch { boundary: k, lhs: l.clone(), rhs: r.clone() })
        })
        .collect()
}

/// Exhaustive RLL check for `r` over the empty spin plus `colors` colors.
pub fn check_rll(r: &RMatrix, colors: usize) -> Result<YbeReport> {
    let spins = spin_set(colors)?;
    let (lhs, rhs) = rll_sides(r, &spins);
    let mut nonzero: Vec<&Six> = lhs.keys().chain(rhs.keys()).collect();
    nonzero.sort();
    nonzero.dedup();
    Ok(YbeReport {
        kind: r.kind,
        family: r.family,
        colors,
        boundaries: spins.len().pow(6),
        nonzero_boundaries: nonzero.len(),
        mismatches: compare(&lhs, &rhs, Variables::z(2)),
    })
}

/// Yang–Baxter equation for one of the tables, over 0 plus 4 colors.
pub fn verify_ybe(kind: RKind, family: Family) -> Result<YbeReport> {
    check_rll(&RMatrix::new(kind, family), 4)
}

/// Search the ΓΔ relation with the given free entries for a failing boundary.
pub fn refute_gamma_delta_ybe(family: Family, free: [LaurentPolynomial; 2]) -> Result<Option<Mismatch<Six>>> {
    for f in &free {
        if f.is_zero() {
            return Err(Error::Invalid("free entries must be nonzero".into()));
        }
        if f.vars() != Variables::z(2) {
            return Err(Error::VariableMismatch { left: f.vars().len(), right: 2 });
        }
    }
    let r = RMatrix::with_free(RKind::GammaDelta, family, free);
    Ok(check_rll(&r, 4)?.mismatches.into_iter().next())
}

/// Random nonzero free entries `a z_i + b z_j + c`.
pub fn random_free_entries(rng: &mut impl Rng) -> [LaurentPolynomial; 2] {
    let vars = Variables::z(2);
    let mut draw = || loop {
        let a: i64 = rng.random_range(-9..=9);
        let b: i64 = rng.random_range(-9..=9);
        let c: i64 = rng.random_range(-9..=9);
        let p = LaurentPolynomial::from_terms(vars, [(vec![1, 0], a), (vec![0, 1], b), (vec![0, 0], c)]);
        if !p.is_zero() {
            return p;
        }
    };
    [draw(), draw()]
}

/// Refutation at the default free entries and at `trials` random draws.
#[derive(Clone, Debug, Serialize)]
pub struct RefutationReport {
    pub family: Family,
    pub seed: u64,
    pub attempts: Vec<RefutationAttempt>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefutationAttempt {
    pub free: [String; 2],
    pub counterexample: Option<Mismatch<Six>>,
}

impl RefutationReport {
    pub fn pass(&self) -> bool {
        self.attempts.iter().all(|a| a.counterexample.is_some())
    }
}

pub fn refute_gamma_delta_trials(family: Family, seed: u64, trials: usize) -> Result<RefutationReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut draws = vec![RMatrix::new(RKind::GammaDelta, family).free];
    for _ in 0..trials {
        draws.push(random_free_entries(&mut rng));
    }
    let mut attempts = Vec::new();
    for free in draws {
        let label = [free[0].to_string(), free[1].to_string()];
        attempts.push(RefutationAttempt { free: label, counterexample: refute_gamma_delta_ybe(family, free)? });
    }
    Ok(RefutationReport { family, seed, attempts })
}

/// How the ΓΔ discrepancy on one boundary grows with the palette size.
#[derive(Clone, Debug, Serialize)]
pub struct ColorScaling {
    pub boundary: Six,
    /// `(colors, lhs, rhs)` for 2, 4 and 6 colors.
    pub sides: Vec<(usize, LaurentPolynomial, LaurentPolynomial)>,
    /// The discrepancy is a nonconstant affine function of the color count
    /// while one side stays fixed.
    pub linear_in_colors: bool,
}

/// Find a boundary over `{0, c_1}` whose ΓΔ discrepancy changes between
/// 2 and 4 colors, because one side sums over a closed colored loop, and
/// check the growth is linear through 6 colors.
pub fn gamma_delta_color_scaling(family: Family) -> Result<Option<ColorScaling>> {
    let r = RMatrix::new(RKind::GammaDelta, family);
    let vars = Variables::z(2);
    let zero = LaurentPolynomial::zero(vars);
    let sides: Vec<_> = [2usize, 4, 6].iter().map(|&k| Ok((k, rll_sides(&r, &spin_set(k)?)))).collect::<Result<_>>()?;
    let top = Spin::color(1, false);
    let small = [Spin::EMPTY, top];
    for a in corner_tuples(&small) {
        for b in [[Spin::EMPTY; 2], [Spin::EMPTY, top], [top, Spin::EMPTY], [top, top]] {
            let key = [a[0], a[1], a[2], a[3], b[0], b[1]];
            let get = |m: &HashMap<Six, LaurentPolynomial>| m.get(&key).cloned().unwrap_or_else(|| zero.clone());
            let vals: Vec<(usize, LaurentPolynomial, LaurentPolynomial)> =
                sides.iter().map(|(k, (l, rr))| (*k, get(l), get(rr))).collect();
            let d: Vec<LaurentPolynomial> = vals.iter().map(|(_, l, rr)| l - rr).collect();
            if d[0].is_zero() || d[0] == d[1] {
                continue;
            }
            let one_side_fixed = (vals[0].1 == vals[1].1 && vals[1].1 == vals[2].1)
                || (vals[0].2 == vals[1].2 && vals[1].2 == vals[2].2);
            let linear = &d[2] - &d[1] == &d[1] - &d[0];
            return Ok(Some(ColorScaling { boundary: key, sides: vals, linear_in_colors: linear && one_side_fixed }));
        }
    }
    Ok(None)
}

/// The K-matrix as an L-style table over `(top, bottom)`.
fn k_poly(family: Family, cartan_type: CartanType, top: Spin, bottom: Spin, slot: usize) -> Option<LaurentPolynomial> {
    let e = k_entry(family, top, bottom)?;
    Some(k_weight(e, cartan_type, Variables::z(2), slot))
}

#[derive(Clone, Debug, Serialize)]
pub struct ReflectionReport {
    pub family: Family,
    pub cartan_type: CartanType,
    pub boundaries: usize,
    /// Boundaries `(a, b, c, d)` where the left side is nonzero.
    pub nonzero: Vec<Corners>,
    pub mismatches: Vec<Mismatch<Corners>>,
}

impl ReflectionReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Reflection equation over `{0, u, u', ū', ū}`:
///
/// `Σ R_ΔΔ(d,c,x1,x2) R_ΔΓ(x1,b,y1,y2) K_i(a,y1) K_j(y2,x2)`
/// `= z_i^{-2} Σ K_i(p,d) R_ΔΓ(c,q,r,p) K_j(s,r) R_ΓΓ(b,a,s,q)`,
///
/// with `R_ΔΔ` at `(z_i^{-1}, z_j^{-1})`, the left `R_ΔΓ` at `(z_i^{-1}, z_j)`,
/// the right `R_ΔΓ` at `(z_j^{-1}, z_i)` and `R_ΓΓ` at `(z_j, z_i)`.
pub fn verify_reflection_equation(family: Family, cartan_type: CartanType) -> Result<ReflectionReport> {
    let spins = spin_set(4)?;
    let vars = Variables::z(2);
    let zi = LaurentPolynomial::variable(vars, 0, 1);
    let zj = LaurentPolynomial::variable(vars, 1, 1);
    let zi_inv = LaurentPolynomial::variable(vars, 0, -1);
    let zj_inv = LaurentPolynomial::variable(vars, 1, -1);
    let dd = RMatrix::new(RKind::DeltaDelta, family);
    let dg = RMatrix::new(RKind::DeltaGamma, family);
    let gg = RMatrix::new(RKind::GammaGamma, family);
    let t_dd = Transfer::build(&spins, |t| dd.weight(t, &zi_inv, &zj_inv));
    let t_dg_left = Transfer::build(&spins, |t| dg.weight(t, &zi_inv, &zj));
    let t_dg_right = Transfer::build(&spins, |t| dg.weight(t, &zj_inv, &zi));
    let alpha = LaurentPolynomial::variable(vars, 0, -2);
    let mut lhs: HashMap<Corners, LaurentPolynomial> = HashMap::new();
    let mut rhs: HashMap<Corners, LaurentPolynomial> = HashMap::new();
    let add = |m: &mut HashMap<Corners, LaurentPolynomial>, k: Corners, v: LaurentPolynomial| {
        *m.entry(k).or_insert_with(|| LaurentPolynomial::zero(vars)) += v;
    };
    for t in corner_tuples(&spins) {
        let [a, b, c, d] = t;
        for (x1, x2, w1) in t_dd.get(d, c) {
            for (y1, y2, w2) in t_dg_left.get(*x1, b) {
                let (Some(k1), Some(k2)) =
                    (k_poly(family, cartan_type, a, *y1, 0), k_poly(family, cartan_type, *y2, *x2, 1))
                else {
                    continue;
                };
                add(&mut lhs, t, &(w1 * w2) * &(&k1 * &k2));
            }
        }
        for &p in &spins {
            let Some(k1) = k_poly(family, cartan_type, p, d, 0) else { continue };
            for &q in &spins {
                for (r, p2, w1) in t_dg_right.get(c, q) {
                    if *p2 != p {
                        continue;
                    }
                    for &s in &spins {
                        let Some(k2) = k_poly(family, cartan_type, s, *r, 1) else { continue };
                        let Some(w2) = gg.weight(&[b, a, s, q], &zj, &zi) else { continue };
                        add(&mut rhs, t, &(&k1 * w1) * &(&k2 * &w2) * &alpha);
                    }
                }
            }
        }
    }
    lhs.retain(|_, v| !v.is_zero());
    rhs.retain(|_, v| !v.is_zero());
    let mut nonzero: Vec<Corners> = lhs.keys().copied().collect();
    nonzero.sort();
    Ok(ReflectionReport {
        family,
        cartan_type,
        boundaries: spins.len().pow(4),
        nonzero,
        mismatches: compare(&lhs, &rhs, vars),
    })
}

/// Unitarity: `Σ_{x,y} R(b,a,x,y; z_i,z_j) R(y,x,a',b'; z_j,z_i) = β δ`.
/// Returns `β`, which must be the same on every diagonal boundary.
pub fn verify_unitarity(kind: RKind, family: Family) -> Result<LaurentPolynomial> {
    if !matches!(kind, RKind::GammaGamma | RKind::DeltaDelta) {
        return Err(Error::Invalid(format!("unitarity is stated for gamma-gamma and delta-delta, not {kind}")));
    }
    let spins = spin_set(4)?;
    let vars = Variables::z(2);
    let zi = LaurentPolynomial::variable(vars, 0, 1);
    let zj = LaurentPolynomial::variable(vars, 1, 1);
    let r = RMatrix::new(kind, family);
    let first = Transfer::build(&spins, |t| r.weight(t, &zi, &zj));
    let second = Transfer::build(&spins, |t| r.weight(t, &zj, &zi));
    let mut beta: Option<LaurentPolynomial> = None;
    for &a in &spins {
        for &b in &spins {
            let mut out: HashMap<(Spin, Spin), LaurentPolynomial> = HashMap::new();
            for (x, y, w1) in first.get(b, a) {
                for (a2, b2, w2) in second.get(*y, *x) {
                    *out.entry((*a2, *b2)).or_insert_with(|| LaurentPolynomial::zero(vars)) += w1 * w2;
                }
            }
            for ((a2, b2), v) in out {
                if v.is_zero() {
                    continue;
                }
                if (a2, b2) != (a, b) {
                    return Err(Error::IdentityFailure(format!("off-diagonal term {v} from ({a},{b}) to ({a2},{b2})")));
                }
                match &beta {
                    None => beta = Some(v),
                    Some(bv) if *bv == v => {}
                    Some(bv) => {
                        return Err(Error::IdentityFailure(format!("scalar {bv} vs {v} at ({a},{b})")));
                    }
                }
            }
        }
    }
    let beta = beta.ok_or_else(|| Error::IdentityFailure("double crossing vanishes".into()))?;
    // every diagonal boundary must have produced the scalar
    for &a in &spins {
        for &b in &spins {
            let mut total = LaurentPolynomial::zero(vars);
            for (x, y, w1) in first.get(b, a) {
                for (a2, b2, w2) in second.get(*y, *x) {
                    if (*a2, *b2) == (a, b) {
                        total += w1 * w2;
                    }
                }
            }
            if total != beta {
                return Err(Error::IdentityFailure(format!("diagonal ({a},{b}) gives {total}")));
            }
        }
    }
    Ok(beta)
}

/// Kernel of the RLL − LLR system at one rational specialization.
#[derive(Clone, Debug, Serialize)]
pub struct KernelResult {
    pub kind: RKind,
    pub family: Family,
    pub point: (String, String),
    pub colors: usize,
    pub unknowns: usize,
    pub equations: usize,
    pub dimension: usize,
    /// Kernel basis; each vector lists its nonzero slots.
    #[serde(skip)]
    pub basis: Vec<BTreeMap<Corners, BigRational>>,
    /// Some kernel vector is nonzero on the all-empty slot.
    pub nondegenerate: bool,
}

/// Each color occurs an even number of times among the corners.
pub fn is_even_slot(t: &Corners) -> bool {
    t.iter().filter(|s| s.is_color()).all(|s| t.iter().filter(|u| *u == s).count() % 2 == 0)
}

/// The even slots over `spins`.
pub fn kernel_slots(spins: &[Spin]) -> Vec<Corners> {
    corner_tuples(spins).into_iter().filter(is_even_slot).collect()
}

fn l_value(kind: RowKind, family: Family, t: &Corners, z: &BigRational) -> Option<BigRational> {
    let [l, top, r, b] = *t;
    let class = match kind {
        RowKind::Gamma => gamma_class(family, l, top, r, b)?,
        RowKind::Delta => delta_class(family, l, top, r, b)?,
    };
    Some(if class.exponent(kind) == 0 { BigRational::one() } else { z.clone() })
}

/// Solve for every R-matrix (on the even slots) satisfying the RLL relation
/// of `kind` at `(z_i, z_j)`, by exact sparse elimination.
pub fn solve_rll_kernel(
    kind: RKind,
    family: Family,
    zi: &BigRational,
    zj: &BigRational,
    colors: usize,
) -> Result<KernelResult> {
    if zi.is_zero() || zj.is_zero() || zi == zj {
        return Err(Error::Invalid("specialization needs z_i != z_j, both nonzero".into()));
    }
    if colors == 0 || colors > 4 {
        return Err(Error::Invalid(format!("color count {colors} outside 2..=4")));
    }
    let spins = spin_set(colors)?;
    let slots = kernel_slots(&spins);
    let index: HashMap<Corners, usize> = slots.iter().enumerate().map(|(k, s)| (*s, k)).collect();
    let (phi, theta) = kind.rows();
    let lp = Transfer::build(&spins, |t| l_value(phi, family, t, zi));
    let lt = Transfer::build(&spins, |t| l_value(theta, family, t, zj));
    let mut rows: HashMap<Six, BTreeMap<usize, BigRational>> = HashMap::new();
    let bump = |rows: &mut HashMap<Six, BTreeMap<usize, BigRational>>, key: Six, slot: usize, v: BigRational| {
        let row = rows.entry(key).or_default();
        let e = row.entry(slot).or_insert_with(BigRational::zero);
        *e += v;
        if e.is_zero() {
            row.remove(&slot);
        }
    };
    for &a in &spins {
        for &b in &spins {
            for &c in &spins {
                for &xs in &spins {
                    for &ys in &spins {
                        let Some(&slot) = index.get(&[a, b, xs, ys]) else { continue };
                        for (d, m, w1) in lp.get(xs, c) {
                            for (e, f, w2) in lt.get(ys, *m) {
                                bump(&mut rows, [a, b, c, *d, *e, *f], slot, w1 * w2);
                            }
                        }
                    }
                }
                for (ys, m, w1) in lt.get(b, c) {
                    for (xs, f, w2) in lp.get(a, *m) {
                        for &d in &spins {
                            for &e in &spins {
                                let Some(&slot) = index.get(&[*xs, *ys, d, e]) else { continue };
                                bump(&mut rows, [a, b, c, d, e, *f], slot, -(w1 * w2));
                            }
                        }
                    }
                }
            }
        }
    }
    let equations: Vec<BTreeMap<usize, BigRational>> = rows.into_values().filter(|r| !r.is_empty()).collect();
    let n_eq = equations.len();
    let basis_idx = sparse_kernel(equations, slots.len());
    let basis: Vec<BTreeMap<Corners, BigRational>> =
        basis_idx.into_iter().map(|v| v.into_iter().map(|(k, x)| (slots[k], x)).collect()).collect();
    let empty = [Spin::EMPTY; 4];
    let nondegenerate = basis.iter().any(|v| v.contains_key(&empty));
    Ok(KernelResult {
        kind,
        family,
        point: (zi.to_string(), zj.to_string()),
        colors,
        unknowns: slots.len(),
        equations: n_eq,
        dimension: basis.len(),
        basis,
        nondegenerate,
    })
}

/// Kernel basis of a sparse rational system by elimination to echelon form.
fn sparse_kernel(equations: Vec<BTreeMap<usize, BigRational>>, unknowns: usize) -> Vec<BTreeMap<usize, BigRational>> {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for mut row in equations {
        while let Some((&p, _)) = row.iter().next() {
            if let Some(prow) = pivots.get(&p) {
                let f = row[&p].clone();
                for (k, v) in prow {
                    let e = row.entry(*k).or_insert_with(BigRational::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            } else {
                let f = row[&p].clone();
                for v in row.values_mut() {
                    *v /= &f;
                }
                pivots.insert(p, row);
                break;
            }
        }
    }
    let mut basis = Vec::new();
    for free in (0..unknowns).filter(|k| !pivots.contains_key(k)) {
        let mut sol: BTreeMap<usize, BigRational> = BTreeMap::new();
        sol.insert(free, BigRational::one());
        for (p, prow) in pivots.iter().rev() {
            let mut s = BigRational::zero();
            for (k, v) in prow {
                if k != p {
                    if let Some(x) = sol.get(k) {
                        s -= v * x;
                    }
                }
            }
            if !s.is_zero() {
                sol.insert(*p, s);
            }
        }
        basis.push(sol);
    }
    basis
}

/// Kernel dimensions at two independent random points, which must agree.
#[derive(Clone, Debug, Serialize)]
pub struct GenericKernel {
    pub first: KernelResult,
    pub second: KernelResult,
}

fn random_point(rng: &mut impl Rng) -> (BigRational, BigRational) {
    loop {
        let mut q = || {
            let n: i64 = rng.random_range(-40..=40);
            let d: i64 = rng.random_range(1..=17);
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        let (a, b) = (q(), q());
        if !a.is_zero() && !b.is_zero() && a != b {
            return (a, b);
        }
    }
}

/// Solve at two random points; retries a few times when the dimensions
/// disagree and reports [`Error::Degenerate`] if they keep disagreeing.
pub fn solve_rll_kernel_generic(kind: RKind, family: Family, colors: usize, seed: u64) -> Result<GenericKernel> {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..4 {
        let (a, b) = random_point(&mut rng);
        let (c, d) = random_point(&mut rng);
        let first = solve_rll_kernel(kind, family, &a, &b, colors)?;
        let second = solve_rll_kernel(kind, family, &c, &d, colors)?;
        if first.dimension == second.dimension {
            return Ok(GenericKernel { first, second });
        }
    }
    Err(Error::Degenerate(format!("{kind}: kernel dimension depends on the point")))
}

/// A one-dimensional kernel, scaled to agree with the table on the empty
/// slot, equals the table on every slot.
pub fn kernel_matches_table(k: &KernelResult, r: &RMatrix) -> Result<bool> {
    if k.dimension != 1 || k.kind != r.kind || k.family != r.family {
        return Ok(false);
    }
    let x: BigRational = k.point.0.parse().map_err(|_| Error::Parse(k.point.0.clone()))?;
    let y: BigRational = k.point.1.parse().map_err(|_| Error::Parse(k.point.1.clone()))?;
    let v = &k.basis[0];
    let empty = [Spin::EMPTY; 4];
    let (Some(table0), Some(kernel0)) = (r.value(&empty, &x, &y)?, v.get(&empty)) else {
        return Ok(false);
    };
    let scale = table0 / kernel0;
    let spins = spin_set(k.colors)?;
    for t in kernel_slots(&spins) {
        let expected = r.value(&t, &x, &y)?.unwrap_or_else(BigRational::zero);
        let got = v.get(&t).map(|g| g * &scale).unwrap_or_else(BigRational::zero);
        if expected != got {
            return Ok(false);
        }
    }
    // the table must not have entries outside the even slots
    Ok(corner_tuples(&spins).iter().all(|t| r.entry(t).is_none() || is_even_slot(t)))
}

/// The ten configuration classes of the quantum R-matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RqClass {
    A1,
    B1,
    B2,
    C1,
    C2,
    C1Prime,
    C2Prime,
    B2Prime,
    B1Prime,
    A2,
}

/// The quantum R-matrix at `z = z_j / z_i`, in variables `(z_i, z_j, q)`.
pub struct RqMatrix;

impl RqMatrix {
    pub fn vars() -> Variables {
        Variables::with_q(2)
    }

    pub fn class(t: &Corners) -> Option<RqClass> {
        let [bl, tl, tr, br] = *t;
        let z = |s: Spin| s.is_empty();
        use RqClass::*;
        if t.iter().all(|s| s.is_empty()) {
            return Some(A1);
        }
        if z(bl) && tl.is_color() && z(tr) && br == tl {
            return Some(B1);
        }
        if bl.is_color() && z(tl) && tr == bl && z(br) {
            return Some(B2);
        }
        if bl.is_color() && z(tl) && z(tr) && br == bl {
            return Some(C1);
        }
        if z(bl) && tl.is_color() && tr == tl && z(br) {
            return Some(C2);
        }
        if !all_colored(t) {
            return None;
        }
        if bl == tl && tl == tr && tr == br {
            return Some(A2);
        }
        if tr == tl && br == bl {
            return Some(if bl < tl { C1Prime } else { C2Prime });
        }
        if tr == bl && br == tl {
            return Some(if bl > tl { B2Prime } else { B1Prime });
        }
        None
    }

    /// The printed weight of a class.
    pub fn weight(class: RqClass) -> LaurentPolynomial {
        let v = Self::vars();
        let one = LaurentPolynomial::one(v);
        let q = LaurentPolynomial::variable(v, 2, 1);
        let q2 = LaurentPolynomial::variable(v, 2, 2);
        let z = LaurentPolynomial::monomial(v, vec![-1, 1, 0], 1);
        use RqClass::*;
        match class {
            A1 => &z - &q2,
            B1 | B2 | B2Prime | B1Prime => (&one - &z) * &q,
            C1 => (&one - &q2) * &z,
            C2 => &one - &q2,
            C1Prime => -((&one - &q2) * &z),
            C2Prime => -(&one - &q2),
            A2 => &q2 * &z - &one,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RqLimitReport {
    /// Slots where the limit differs from the atom ΓΓ table.
    pub limit_mismatches: Vec<Corners>,
    /// Slots where the reindexed ΓΓ table differs from the ΔΔ table.
    pub transpose_mismatches: Vec<Corners>,
}

impl RqLimitReport {
    pub fn limit_pass(&self) -> bool {
        self.limit_mismatches.is_empty()
    }
    pub fn transpose_pass(&self) -> bool {
        self.transpose_mismatches.is_empty()
    }
    pub fn pass(&self) -> bool {
        self.limit_pass() && self.transpose_pass()
    }
}

/// Apply the four rescalings to one quantum weight and take `q → 0`:
/// negate fully colored classes; `c1, c1'` times `z^{-1}` and `c2, c2'`
/// times `z`; `b1` times `q`, `b2` times `q^{-1}`, `b1'` times `−q`,
/// `b2'` times `−q^{-1}`; then set `q = 0`. The result is multiplied by `z_i`.
pub fn rq_limit_entry(class: RqClass) -> Result<LaurentPolynomial> {
    use RqClass::*;
    let v = RqMatrix::vars();
    let mut w = RqMatrix::weight(class);
    if matches!(class, C1Prime | C2Prime | B2Prime | B1Prime | A2) {
        w = -w;
    }
    let z = LaurentPolynomial::monomial(v, vec![-1, 1, 0], 1);
    let z_inv = LaurentPolynomial::monomial(v, vec![1, -1, 0], 1);
    let q = LaurentPolynomial::variable(v, 2, 1);
    let q_inv = LaurentPolynomial::variable(v, 2, -1);
    w = match class {
        C1 | C1Prime => &w * &z_inv,
        C2 | C2Prime => &w * &z,
        _ => w,
    };
    w = match class {
        B1 => &w * &q,
        B2 => &w * &q_inv,
        B1Prime => -(&w * &q),
        B2Prime => -(&w * &q_inv),
        _ => w,
    };
    let limit = w.specialize_zero(2)?;
    Ok(&limit * &LaurentPolynomial::variable(v, 0, 1))
}

/// Compare the `q → 0` limit with the atom ΓΓ table entry by entry over
/// 0 plus 4 colors, and compare ΓΓ reindexed by `(a,b,c,d) → (c,d,a,b)`
/// with ΔΔ.
pub fn rq_limit_check() -> Result<RqLimitReport> {
    let spins = spin_set(4)?;
    let v = RqMatrix::vars();
    let zi = LaurentPolynomial::variable(v, 0, 1);
    let zj = LaurentPolynomial::variable(v, 1, 1);
    let gg = RMatrix::new(RKind::GammaGamma, Family::Atom);
    let dd = RMatrix::new(RKind::DeltaDelta, Family::Atom);
    let zero = LaurentPolynomial::zero(v);
    let mut limit_mismatches = Vec::new();
    let mut transpose_mismatches = Vec::new();
    for t in corner_tuples(&spins) {
        let limit = match RqMatrix::class(&t) {
            Some(c) => rq_limit_entry(c)?,
            None => zero.clone(),
        };
        let table = gg.weight(&t, &zi, &zj).unwrap_or_else(|| zero.clone());
        if limit != table {
            limit_mismatches.push(t);
        }
        let moved = [t[2], t[3], t[0], t[1]];
        let g = gg.weight(&moved, &zi, &zj).unwrap_or_else(|| zero.clone());
        let d = dd.weight(&t, &zi, &zj).unwrap_or_else(|| zero.clone());
        if g != d {
            transpose_mismatches.push(t);
        }
    }
    Ok(RqLimitReport { limit_mismatches, transpose_mismatches })
}

/// Free parameters of the U-turn matrix seen after the bottom-row transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FishKMatrix {
    pub h1: LaurentPolynomial,
    pub h1_bar: LaurentPolynomial,
    pub h2: LaurentPolynomial,
    pub h2_bar: LaurentPolynomial,
}

impl FishKMatrix {
    pub fn new(
        h1: LaurentPolynomial,
        h1_bar: LaurentPolynomial,
        h2: LaurentPolynomial,
        h2_bar: LaurentPolynomial,
    ) -> Result<Self> {
        if [&h1, &h1_bar, &h2, &h2_bar].iter().any(|h| h.is_zero()) {
            return Err(Error::Invalid("fish K-matrix parameters must be nonzero".into()));
        }
        Ok(FishKMatrix { h1, h1_bar, h2, h2_bar })
    }

    pub fn parameter(&self, e: FishEntry) -> &LaurentPolynomial {
        match e {
            FishEntry::H1 => &self.h1,
            FishEntry::H1Bar => &self.h1_bar,
            FishEntry::H2 => &self.h2,
            FishEntry::H2Bar => &self.h2_bar,
        }
    }
}

/// One configuration of the fish: an R_ΓΓ vertex at `(z_n, z_n^{-1})`
/// feeding a U-turn of the transformed model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FishConfiguration {
    /// `(TL, BL, TR, BR)` of the R-vertex.
    pub corners: Corners,
    pub coefficient: LaurentPolynomial,
    pub entry: FishEntry,
}

/// The fish configurations for color `u` (unbarred) in the rank-`n` variables.
pub fn fish_configurations(family: Family, n: usize, u: Spin) -> Result<Vec<FishConfiguration>> {
    if !u.is_unbarred() {
        return Err(Error::Invalid(format!("{u} is not an unbarred color")));
    }
    let v = Variables::z(n);
    let zn = LaurentPolynomial::variable(v, n - 1, 1);
    let zn_inv = LaurentPolynomial::variable(v, n - 1, -1);
    let ub = u.bar();
    let e = Spin::EMPTY;
    let mut out = vec![
        FishConfiguration { corners: [e, ub, e, ub], coefficient: zn.clone(), entry: FishEntry::H1Bar },
        FishConfiguration { corners: [e, u, u, e], coefficient: &zn - &zn_inv, entry: FishEntry::H2 },
        FishConfiguration { corners: [u, e, u, e], coefficient: zn_inv.clone(), entry: FishEntry::H2 },
    ];
    if family == Family::Atom {
        out.push(FishConfiguration { corners: [e, ub, ub, e], coefficient: &zn - &zn_inv, entry: FishEntry::H2Bar });
        out.push(FishConfiguration { corners: [ub, e, ub, e], coefficient: zn_inv, entry: FishEntry::H2Bar });
    }
    Ok(out)
}

/// Check a fish coefficient against `R_ΓΓ` at `(z_n, z_n^{-1})`.
pub fn fish_coefficient_matches(family: Family, n: usize, f: &FishConfiguration) -> bool {
    let v = Variables::z(n);
    let zn = LaurentPolynomial::variable(v, n - 1, 1);
    let zn_inv = LaurentPolynomial::variable(v, n - 1, -1);
    let [tl, bl, tr, br] = f.corners;
    let gg = RMatrix::new(RKind::GammaGamma, family);
    gg.weight(&[bl, tl, tr, br], &zn, &zn_inv).as_ref() == Some(&f.coefficient)
}

/// Weight of a U-turn entry of the original model, for reference in fish data.
pub fn k_entry_weight(entry: KEntry, cartan_type: CartanType, n: usize) -> LaurentPolynomial {
    k_weight(entry, cartan_type, Variables::z(n), n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variables::z(2)).unwrap()
    }
    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn tables_conserve_color_pairs() {
        let spins = spin_set(4).unwrap();
        for kind in RKind::ALL {
            for family in [Family::Atom, Family::Character] {
                let r = RMatrix::new(kind, family);
                for (t, _) in r.entries(&spins) {
                    assert!(is_even_slot(&t), "{kind} {family} {t:?}");
                }
            }
        }
    }

    #[test]
    fn character_gamma_gamma_swaps_one_pair() {
        let spins = spin_set(4).unwrap();
        let a = RMatrix::new(RKind::GammaGamma, Family::Atom);
        let c = RMatrix::new(RKind::GammaGamma, Family::Character);
        let differ: Vec<Corners> = corner_tuples(&spins).into_iter().filter(|t| a.entry(t) != c.entry(t)).collect();
        // ordered color pairs (c', c) and (c, c') for the 6 pairs of distinct colors
        assert_eq!(differ.len(), 12);
        for t in differ {
            assert!(t[0] == t[3] && t[1] == t[2] && t[0] != t[1]);
        }
    }

    #[test]
    fn ybe_gamma_gamma_atom_small_palette() {
        let r = RMatrix::new(RKind::GammaGamma, Family::Atom);
        assert!(check_rll(&r, 2).unwrap().pass());
    }

    #[test]
    fn gamma_delta_fails_with_two_colors() {
        let r = RMatrix::new(RKind::GammaDelta, Family::Atom);
        assert!(!check_rll(&r, 2).unwrap().pass());
    }

    #[test]
    fn unitarity_constant() {
        assert_eq!(verify_unitarity(RKind::GammaGamma, Family::Atom).unwrap(), p("z1*z2"));
        assert!(verify_unitarity(RKind::DeltaGamma, Family::Atom).is_err());
    }

    #[test]
    fn reflection_empty_boundary() {
        let r = verify_reflection_equation(Family::Atom, CartanType::C).unwrap();
        assert!(r.pass());
        assert!(r.nonzero.contains(&[Spin::EMPTY; 4]));
    }

    #[test]
    fn kernel_gamma_gamma_is_the_table() {
        let k = solve_rll_kernel(RKind::GammaGamma, Family::Atom, &rat(2), &rat(3), 4).unwrap();
        assert_eq!(k.unknowns, 65);
        assert_eq!(k.dimension, 1);
        assert!(k.nondegenerate);
        assert!(kernel_matches_table(&k, &RMatrix::new(RKind::GammaGamma, Family::Atom)).unwrap());
        assert!(!kernel_matches_table(&k, &RMatrix::new(RKind::GammaGamma, Family::Character)).unwrap());
    }

    #[test]
    fn kernel_rejects_bad_points() {
        assert!(solve_rll_kernel(RKind::GammaGamma, Family::Atom, &rat(2), &rat(2), 4).is_err());
        assert!(solve_rll_kernel(RKind::GammaGamma, Family::Atom, &rat(0), &rat(2), 4).is_err());
    }

    #[test]
    fn rq_entries() {
        let v = RqMatrix::vars();
        let zi = LaurentPolynomial::variable(v, 0, 1);
        let zj = LaurentPolynomial::variable(v, 1, 1);
        assert_eq!(rq_limit_entry(RqClass::A1).unwrap(), zj);
        assert!(rq_limit_entry(RqClass::B1).unwrap().is_zero());
        assert_eq!(rq_limit_entry(RqClass::B2).unwrap(), &zi - &zj);
        assert!(rq_limit_check().unwrap().limit_pass());
    }

    #[test]
    fn fish_coefficients_come_from_r_gamma_gamma() {
        let u = Spin::color(2, false);
        for family in [Family::Atom, Family::Character] {
            for f in fish_configurations(family, 2, u).unwrap() {
                assert!(fish_coefficient_matches(family, 2, &f), "{f:?}");
            }
        }
        assert_eq!(fish_configurations(Family::Character, 2, u).unwrap().len(), 3);
    }

    #[test]
    fn fish_matrix_rejects_zero() {
        let v = Variables::z(1);
        let one = LaurentPolynomial::one(v);
        assert!(FishKMatrix::new(one.clone(), one.clone(), one.clone(), LaurentPolynomial::zero(v)).is_err());
    }
}
