//! The hyperoctahedral group of signed permutations and the color palette.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed permutation of `1..n`, stored by its images of `1..n`.
///
/// `images[i-1] = ±j` means `w(i) = j` or `w(i) = j̄`. Images of barred
/// letters follow from `w(ī) = w(i)‾`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(images: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(images)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Self {
        w.images
    }
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a signed permutation")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    /// The longest element `[1̄, …, n̄]`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).map(|x| -x).collect() }
    }

    /// Simple reflection `s_i`, `1 ≤ i ≤ n`: swaps `i, i+1` for `i < n` and
    /// negates `n` for `i = n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Invalid(format!("generator s{i} outside rank {n}")));
        }
        let mut w = Self::identity(n);
        if i < n {
            w.images.swap(i - 1, i);
        } else {
            w.images[n - 1] = -(n as i32);
        }
        Ok(w)
    }

    /// Product `s_{a_1} s_{a_2} ⋯ s_{a_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.compose(&Self::generator(n, i)?)?;
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(x)` for a signed letter `x ∈ {±1, …, ±n}`.
    pub fn apply(&self, x: i32) -> i32 {
        x.signum() * self.images[x.unsigned_abs() as usize - 1]
    }

    /// `(u·v)(i) = u(v(i))`.
    pub fn compose(&self, v: &Self) -> Result<Self> {
        if self.rank() != v.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: v.rank() });
        }
        Ok(SignedPermutation { images: v.images.iter().map(|&x| self.apply(x)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x.unsigned_abs() as usize - 1] = x.signum() * (i as i32 + 1);
        }
        SignedPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// All `2^n n!` elements, in lexicographic order of their windows.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        permutations(&mut perm, 0, &mut |p| {
            for signs in 0u32..(1 << n) {
                let images = p.iter().enumerate().map(|(k, &x)| if signs >> k & 1 == 1 { -x } else { x }).collect();
                out.push(SignedPermutation { images });
            }
        });
        out.sort();
        out
    }

    /// Length and one reduced word, found by breadth-first search from the
    /// identity trying generators in increasing order.
    pub fn length_and_reduced_word(&self) -> (usize, Vec<usize>) {
        let word = WeylGroup::new(self.rank()).reduced_word(self).to_vec();
        (word.len(), word)
    }

    pub fn length(&self) -> usize {
        self.length_and_reduced_word().0
    }

    /// Subword property against the BFS reduced word of `w`.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool> {
        if self.rank() != w.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: w.rank() });
        }
        Ok(WeylGroup::new(w.rank()).bruhat_leq(self, w))
    }

    /// Left Δ-boundary colors, top to bottom: the first `n` entries of the
    /// color vector `(w w_0)·c`. A permutation `v` moves the entry in
    /// position `i` to position `v(i)`, so position `i` receives
    /// `c_{v^{-1}(i)}`, with `c_{-j}` read as `c̄_j`.
    pub fn color_word(&self) -> Vec<Spin> {
        let n = self.rank();
        let v = self.compose(&Self::longest(n)).expect("same rank").inverse();
        (1..=n as i32).map(|i| Spin::from_signed(v.apply(i))).collect()
    }

    /// Parse window notation `[2, -1]` or a word such as `s1 s2 s1`,
    /// `s1s2`, `1`, `id`, `e` or `w0`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let inner = t
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("unbalanced window {t:?}")))?;
            let images = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().replace('\u{2212}', "-").parse::<i32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("window {t:?}: {e}")))?;
            if images.len() != n {
                return Err(Error::RankMismatch { left: n, right: images.len() });
            }
            return Self::new(images);
        }
        match t {
            "" | "1" | "e" | "id" | "identity" => return Ok(Self::identity(n)),
            "w0" | "w_0" => return Ok(Self::longest(n)),
            _ => {}
        }
        let mut word = Vec::new();
        for piece in t.split(|c: char| c.is_whitespace() || c == '*' || c == '.') {
            for tok in piece.split('s').skip(1) {
                let tok = tok.trim_start_matches('_');
                let i: usize = tok.parse().map_err(|_| Error::Parse(format!("bad generator in {t:?}")))?;
                word.push(i);
            }
            if !piece.is_empty() && !piece.starts_with('s') {
                return Err(Error::Parse(format!("bad Weyl element {t:?}")));
            }
        }
        Self::from_word(n, &word)
    }
}

fn permutations(p: &mut Vec<i32>, k: usize, f: &mut impl FnMut(&[i32])) {
    if k == p.len() {
        f(p);
        return;
    }
    for j in k..p.len() {
        p.swap(k, j);
        permutations(p, k + 1, f);
        p.swap(k, j);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The whole group of a given rank with BFS lengths and reduced words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<SignedPermutation>,
    words: HashMap<SignedPermutation, Vec<usize>>,
}

impl WeylGroup {
    pub fn new(rank: usize) -> Self {
        let id = SignedPermutation::identity(rank);
        let gens: Vec<SignedPermutation> =
            (1..=rank).map(|i| SignedPermutation::generator(rank, i).expect("in range")).collect();
        let mut words = HashMap::new();
        let mut elements = vec![id.clone()];
        words.insert(id.clone(), Vec::new());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let word = words[&x].clone();
            for (k, s) in gens.iter().enumerate() {
                let y = x.compose(s).expect("same rank");
                if !words.contains_key(&y) {
                    let mut wy = word.clone();
                    wy.push(k + 1);
                    words.insert(y.clone(), wy);
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        WeylGroup { rank, elements, words }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Elements in BFS order (nondecreasing length).
    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn reduced_word(&self, w: &SignedPermutation) -> &[usize] {
        &self.words[w]
    }

    pub fn length(&self, w: &SignedPermutation) -> usize {
        self.words[w].len()
    }

    pub fn longest(&self) -> SignedPermutation {
        SignedPermutation::longest(self.rank)
    }

    /// `y ≤ w` iff some subword of the reduced word of `w` is a reduced word of `y`.
    pub fn bruhat_leq(&self, y: &SignedPermutation, w: &SignedPermutation) -> bool {
        self.bruhat_leq_with_word(y, self.reduced_word(w))
    }

    /// Subword test against an explicitly chosen reduced word.
    pub fn bruhat_leq_with_word(&self, y: &SignedPermutation, word: &[usize]) -> bool {
        let ly = self.length(y);
        if ly > word.len() {
            return false;
        }
        let gens: Vec<SignedPermutation> =
            word.iter().map(|&i| SignedPermutation::generator(self.rank, i).expect("in range")).collect();
        (0u32..(1 << word.len())).filter(|m| m.count_ones() as usize == ly).any(|mask| {
            let mut x = SignedPermutation::identity(self.rank);
            for (k, g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    x = x.compose(g).expect("same rank");
                }
            }
            &x == y
        })
    }

    /// All reduced words of `w` (exponential; meant for small rank).
    pub fn all_reduced_words(&self, w: &SignedPermutation) -> Vec<Vec<usize>> {
        let l = self.length(w);
        if l == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 1..=self.rank {
            let s = SignedPermutation::generator(self.rank, i).expect("in range");
            let x = w.compose(&s).expect("same rank");
            if self.length(&x) + 1 == l {
                for mut word in self.all_reduced_words(&x) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }
}

/// An edge spin: empty, or a color `c_j` / `c̄_j`.
///
/// Stored as one byte whose numeric order is the model's internal order
/// `0 < c̄_1 < ⋯ < c̄_n < c_n < ⋯ < c_1`: `c̄_j` is `j` and `c_j` is `255 − j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Spin(u8);

impl Spin {
    pub const EMPTY: Spin = Spin(0);

    pub fn color(index: usize, barred: bool) -> Spin {
        assert!((1..128).contains(&index), "color index out of range");
        Spin(if barred { index as u8 } else { 255 - index as u8 })
    }

    /// `c_j` for `j > 0`, `c̄_j` for `-j`.
    pub fn from_signed(x: i32) -> Spin {
        Spin::color(x.unsigned_abs() as usize, x < 0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_color(self) -> bool {
        self.0 != 0
    }

    pub fn is_barred(self) -> bool {
        self.0 != 0 && self.0 < 128
    }

    pub fn is_unbarred(self) -> bool {
        self.0 >= 128
    }

    /// Color index `j` of `c_j` or `c̄_j`; 0 for the empty spin.
    pub fn index(self) -> usize {
        match self.0 {
            0 => 0,
            x if x < 128 => x as usize,
            x => 255 - x as usize,
        }
    }

    /// `c_j ↔ c̄_j`; the empty spin is fixed.
    pub fn bar(self) -> Spin {
        if self.0 == 0 {
            self
        } else {
            Spin(255 - self.0)
        }
    }

    /// Signed index: `j` for `c_j`, `-j` for `c̄_j`, 0 for empty.
    pub fn signed(self) -> i32 {
        if self.is_barred() {
            -(self.index() as i32)
        } else {
            self.index() as i32
        }
    }

    /// One-character label: `.` empty, `A` = `c_1`, `B` = `c_2`, …, lowercase barred.
    pub fn glyph(self) -> char {
        match self.index() {
            0 => '.',
            j if self.is_barred() => (b'a' + j as u8 - 1) as char,
            j => (b'A' + j as u8 - 1) as char,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            0 => write!(f, "0"),
            j if self.is_barred() => write!(f, "c{j}b"),
            j => write!(f, "c{j}"),
        }
    }
}

impl fmt::Debug for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Spin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(Spin::EMPTY);
        }
        let body = s.strip_prefix('c').ok_or_else(|| Error::Parse(format!("bad spin {s:?}")))?;
        let (digits, barred) = match body.strip_suffix('b') {
            Some(d) => (d, true),
            None => (body, false),
        };
        let j: usize = digits.parse().map_err(|_| Error::Parse(format!("bad spin {s:?}")))?;
        if j == 0 || j >= 128 {
            return Err(Error::Parse(format!("bad spin {s:?}")));
        }
        Ok(Spin::color(j, barred))
    }
}

impl Serialize for Spin {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Spin {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The colors `c_1..c_n` and their bars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorPalette {
    pub rank: usize,
}

impl ColorPalette {
    pub fn new(rank: usize) -> Self {
        ColorPalette { rank }
    }

    /// All `2n` colors in increasing internal order.
    pub fn colors(&self) -> Vec<Spin> {
        let mut v: Vec<Spin> = (1..=self.rank).flat_map(|j| [Spin::color(j, true), Spin::color(j, false)]).collect();
        v.sort();
        v
    }

    /// The empty spin followed by all colors.
    pub fn spins(&self) -> Vec<Spin> {
        std::iter::once(Spin::EMPTY).chain(self.colors()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(t, n).unwrap()
    }

    #[test]
    fn involutions_and_braids() {
        let s1 = SignedPermutation::generator(2, 1).unwrap();
        assert!(s1.compose(&s1).unwrap().is_identity());
        assert_ne!(w("s1 s2 s1", 2), w("s2 s1 s2", 2));
        assert_eq!(w("s1 s2 s1 s2", 2), w("s2 s1 s2 s1", 2));
        assert_eq!(w("w0", 2), SignedPermutation::new(vec![-1, -2]).unwrap());
        assert!(w("w0", 2).compose(&w("w0", 2)).unwrap().is_identity());
    }

    #[test]
    fn lengths() {
        assert_eq!(w("1", 2).length_and_reduced_word(), (0, vec![]));
        assert_eq!(w("w0", 2).length(), 4);
        assert_eq!(w("w0", 3).length(), 9);
        assert_eq!(w("s2 s1 s2", 2).length(), 3);
    }

    #[test]
    fn group_sizes() {
        for n in 1..=3 {
            let all = SignedPermutation::all(n);
            let expected = (1 << n) * (1..=n).product::<usize>();
            assert_eq!(all.len(), expected);
            assert_eq!(WeylGroup::new(n).elements().len(), expected);
        }
    }

    #[test]
    fn bruhat_examples() {
        let id = w("1", 2);
        for x in SignedPermutation::all(2) {
            assert!(id.bruhat_leq(&x).unwrap());
        }
        assert!(!w("s1", 2).bruhat_leq(&w("s2", 2)).unwrap());
        assert!(w("s1 s2", 2).bruhat_leq(&w("s2 s1 s2", 2)).unwrap());
    }

    #[test]
    fn color_words() {
        let c = |x: i32| Spin::from_signed(x);
        assert_eq!(w("1", 2).color_word(), vec![c(-1), c(-2)]);
        assert_eq!(w("w0", 2).color_word(), vec![c(1), c(2)]);
        assert_eq!(w("s2", 2).color_word(), vec![c(-1), c(2)]);
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(w("[2, -1]", 2), w("s1 s2", 2));
        assert_eq!(w("s1s2", 2), w("s1 s2", 2));
        assert_eq!(w("s_1 s_2", 2), w("s1 s2", 2));
        assert!(SignedPermutation::parse("[1, 1]", 2).is_err());
        assert!(SignedPermutation::parse("s3", 2).is_err());
        assert!(SignedPermutation::parse("x1", 2).is_err());
        assert_eq!(w("[2, -1]", 2).to_string(), "[2, -1]");
    }

    #[test]
    fn spin_order_and_bar() {
        let pal = ColorPalette::new(2).colors();
        let names: Vec<String> = pal.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["c1b", "c2b", "c2", "c1"]);
        for s in pal {
            assert_eq!(s.bar().bar(), s);
            assert_ne!(s.is_barred(), s.bar().is_barred());
            assert_eq!(s.to_string().parse::<Spin>().unwrap(), s);
        }
        assert!(Spin::EMPTY < Spin::color(1, true));
    }
}
