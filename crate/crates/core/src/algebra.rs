//! Exact multivariate Laurent polynomials with integer coefficients.
//!
//! Polynomials live in `Z[z_1^{±1}, …, z_n^{±1}]`, optionally with one more
//! variable `q` appended after `z_n`. Terms are kept in a `BTreeMap` keyed by
//! exponent vector, so equality of values is equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::weyl::SignedPermutation;

/// Exponent vector of a monomial, one signed entry per variable.
pub type Exponents = Vec<i32>;

/// The ambient variables: `z_1..z_rank`, plus `q` when enabled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variables {
    pub rank: usize,
    pub q: bool,
}

impl Variables {
    pub fn z(rank: usize) -> Self {
        Variables { rank, q: false }
    }

    pub fn with_q(rank: usize) -> Self {
        Variables { rank, q: true }
    }

    /// Total number of exponent slots.
    pub fn len(&self) -> usize {
        self.rank + usize::from(self.q)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Slot index of `q`, if present.
    pub fn q_index(&self) -> Option<usize> {
        self.q.then_some(self.rank)
    }

    pub fn name(&self, slot: usize) -> String {
        if Some(slot) == self.q_index() {
            "q".to_string()
        } else {
            format!("z{}", slot + 1)
        }
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    vars: Variables,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(vars: Variables) -> Self {
        LaurentPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Variables) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: Variables, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    /// `c · z^exps`. Panics if `exps` has the wrong length.
    pub fn monomial(vars: Variables, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        p
    }

    /// The single variable in slot `slot`, raised to `power`.
    pub fn variable(vars: Variables, slot: usize, power: i32) -> Self {
        let mut e = vec![0; vars.len()];
        e[slot] = power;
        Self::monomial(vars, e, 1)
    }

    pub fn from_terms<I, C>(vars: Variables, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn vars(&self) -> Variables {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: lexicographically descending exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The exponent vector if this is a single term with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Exponents> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.is_one() => Some(e),
            _ => None,
        }
    }

    /// Sum of all coefficients, counted with sign.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch { left: self.vars.len(), right: other.vars.len() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPolynomial { vars: self.vars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiply by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.vars.len(), "shift length");
        LaurentPolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Apply a map on exponent vectors term by term, collecting like terms.
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Exponents) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Substitute `x ↦ x^{-1}` for the variable in `slot`.
    pub fn invert_variable(&self, slot: usize) -> Self {
        self.map_exponents(|e| {
            let mut e = e.to_vec();
            e[slot] = -e[slot];
            e
        })
    }

    /// Substitute the variable in `slot` by zero. Fails when some term has a
    /// negative power of that variable.
    pub fn specialize_zero(&self, slot: usize) -> Result<Self> {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            match e[slot] {
                0 => out.add_term(e.clone(), c.clone()),
                k if k > 0 => {}
                _ => {
                    return Err(Error::Invalid(format!(
                        "negative power of {} cannot be set to zero",
                        self.vars.name(slot)
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Signed-permutation action on the `z` variables: `z_i` becomes
    /// `z_{|w(i)|}`, inverted when `w(i)` is negative. A `q` slot is left alone.
    pub fn act_variables(&self, w: &SignedPermutation) -> Result<Self> {
        if w.rank() != self.vars.rank {
            return Err(Error::RankMismatch { left: w.rank(), right: self.vars.rank });
        }
        let images = w.images();
        Ok(self.map_exponents(|e| {
            let mut out = e.to_vec();
            for (i, &img) in images.iter().enumerate() {
                let j = img.unsigned_abs() as usize - 1;
                out[j] = img.signum() * e[i];
            }
            out
        }))
    }

    /// Per-slot minimum and maximum exponents. `None` for the zero polynomial.
    pub fn exponent_bounds(&self) -> Option<(Exponents, Exponents)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for k in 0..e.len() {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        Some((lo, hi))
    }

    /// Exact division in the Laurent ring.
    ///
    /// Long division on lexicographically leading terms. Any quotient term
    /// must lie in the box spanned by the exponent ranges of `self` and
    /// `divisor`, which bounds the loop and detects non-divisibility.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        let (plo, phi) = self.exponent_bounds().expect("nonzero");
        let (qlo, qhi) = divisor.exponent_bounds().expect("nonzero");
        let lo: Exponents = plo.iter().zip(&qlo).map(|(a, b)| a - b).collect();
        let hi: Exponents = phi.iter().zip(&qhi).map(|(a, b)| a - b).collect();
        let (lead_e, lead_c) = divisor.leading_term().expect("nonzero");
        let (lead_e, lead_c) = (lead_e.clone(), lead_c.clone());

        let mut rem = self.clone();
        let mut quotient = Self::zero(self.vars);
        while let Some((re, rc)) = rem.leading_term() {
            let m: Exponents = re.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let inside = m.iter().zip(lo.iter().zip(&hi)).all(|(x, (l, h))| l <= x && x <= h);
            let (c, r) = rc.div_rem(&lead_c);
            if !inside || !r.is_zero() {
                return Err(Error::NotDivisible(format!("{self} by {divisor}")));
            }
            let step = Self::monomial(self.vars, m, c);
            rem = &rem - &(&step * divisor);
            quotient += step;
        }
        Ok(quotient)
    }

    /// Exact value at a rational point with nonzero coordinates.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.vars.len() {
            return Err(Error::VariableMismatch { left: self.vars.len(), right: point.len() });
        }
        if let Some(k) = point.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroCoordinate(k));
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                term *= x.pow(k);
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluate at integer coordinates.
    pub fn evaluate_int(&self, point: &[i64]) -> Result<BigRational> {
        let pt: Vec<BigRational> = point.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        self.evaluate(&pt)
    }

    /// JSON form: a list of `{coeff, exponents}` in canonical order.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }

    pub fn from_json(value: &Value, vars: Variables) -> Result<Self> {
        let items = value.as_array().ok_or_else(|| Error::Parse("polynomial JSON must be a list".into()))?;
        let mut p = Self::zero(vars);
        for item in items {
            let coeff = match item.get("coeff") {
                Some(Value::Number(n)) => {
                    n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?
                }
                Some(Value::String(s)) => s.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))?,
                _ => return Err(Error::Parse("missing coeff".into())),
            };
            let exps: Exponents = item
                .get("exponents")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("missing exponents".into()))?
                .iter()
                .map(|x| x.as_i64().and_then(|v| i32::try_from(v).ok()))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse("exponents must be integers".into()))?;
            if exps.len() != vars.len() {
                return Err(Error::VariableMismatch { left: vars.len(), right: exps.len() });
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }

    /// Parse the canonical text form, e.g. `z1^2 - 3*z1*z2^-1 + 1`.
    ///
    /// Also accepts the Unicode minus sign, braces around exponents, and
    /// implicit spacing.
    pub fn parse(text: &str, vars: Variables) -> Result<Self> {
        let cleaned: String =
            text.replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Self::zero(vars);
        if cleaned == "0" {
            return Ok(p);
        }
        // Split into signed terms; a '-' right after '^' belongs to an exponent.
        let bytes: Vec<char> = cleaned.chars().collect();
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut cur = String::new();
        for (k, &ch) in bytes.iter().enumerate() {
            let in_exponent = k > 0 && bytes[k - 1] == '^';
            if (ch == '+' || ch == '-') && !in_exponent {
                if !cur.is_empty() {
                    pieces.push((negative, std::mem::take(&mut cur)));
                } else if k > 0 {
                    return Err(Error::Parse(format!("dangling sign in {text:?}")));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing sign in {text:?}")));
        }
        pieces.push((negative, cur));

        for (neg, body) in pieces {
            let mut coeff = BigInt::one();
            let mut exps = vec![0i32; vars.len()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {body:?}")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))?;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent {p:?}")))?),
                    None => (factor, 1),
                };
                let slot = if name == "q" {
                    vars.q_index().ok_or_else(|| Error::Parse("q is not enabled".into()))?
                } else {
                    let idx: usize = name
                        .strip_prefix('z')
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                    if idx == 0 || idx > vars.rank {
                        return Err(Error::Parse(format!("variable {name} outside rank {}", vars.rank)));
                    }
                    idx - 1
                };
                exps[slot] += power;
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }

    /// Parse with the rank inferred from the largest variable index (minimum
    /// `min_rank`).
    pub fn parse_infer(text: &str, min_rank: usize) -> Result<Self> {
        let mut rank = min_rank;
        let chars: Vec<char> = text.chars().collect();
        let mut k = 0;
        while k < chars.len() {
            if chars[k] == 'z' {
                let digits: String = chars[k + 1..].iter().take_while(|c| c.is_ascii_digit()).collect();
                if let Ok(i) = digits.parse::<usize>() {
                    rank = rank.max(i);
                }
            }
            k += 1;
        }
        Self::parse(text, Variables { rank, q: text.contains('q') })
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(slot, &x)| {
                    let name = self.vars.name(slot);
                    if x == 1 {
                        name
                    } else {
                        format!("{name}^{x}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: Coeff,
            exponents: &'a [i32],
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            let coeff = c.to_i64().map(Coeff::Small).unwrap_or_else(|| Coeff::Big(c.to_string()));
            seq.serialize_element(&Term { coeff, exponents: e })?;
        }
        seq.end()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$checked(rhs).expect("polynomials over different variables")
            }
        }
        impl $trait<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

impl LaurentPolynomial {
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl AddAssign<LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: LaurentPolynomial) {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variables::z(2)).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("z1 + z2") * p("z1 - z2"), p("z1^2 - z2^2"));
    }

    #[test]
    fn unit_and_shift() {
        let x = p("3*z1^-1*z2 + 7");
        assert_eq!(&x * &LaurentPolynomial::one(x.vars()), x);
        assert_eq!(p("z2^-2 + z2^-1") * p("z2^2"), p("1 + z2"));
    }

    #[test]
    fn mismatched_variables_are_a_usage_error() {
        let a = LaurentPolynomial::one(Variables::z(2));
        let b = LaurentPolynomial::one(Variables::z(3));
        let err = a.checked_mul(&b).unwrap_err();
        assert!(err.is_usage());
    }

    #[test]
    fn division_examples() {
        assert_eq!(p("z2^2 - 1").exact_divide(&p("z2 - 1")).unwrap(), p("z2 + 1"));
        assert_eq!(p("z1^3*z2 + z2").exact_divide(&p("z1^2")).unwrap(), p("z1*z2 + z1^-2*z2"));
        assert!(matches!(p("z1 + z2").exact_divide(&p("z1 + 1")), Err(Error::NotDivisible(_))));
        assert_eq!(p("z1").exact_divide(&LaurentPolynomial::zero(Variables::z(2))), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("z1^3*z2").evaluate_int(&[2, 3]).unwrap(), BigRational::from_integer(24.into()));
        assert_eq!(p("z1^2 + z1^2*z2^-2").evaluate_int(&[1, 1]).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(p("z1^-1").evaluate_int(&[0, 1]), Err(Error::ZeroCoordinate(0)));
    }

    #[test]
    fn canonical_text() {
        let x = p("z2^-2 + 1 - 2*z1*z2 + z1^3");
        assert_eq!(x.to_string(), "z1^3 - 2*z1*z2 + 1 + z2^-2");
        assert_eq!(p("-z1").to_string(), "-z1");
        assert_eq!(LaurentPolynomial::zero(Variables::z(2)).to_string(), "0");
        assert_eq!(p("z1^{-1} \u{2212} z2"), p("z1^-1 - z2"));
    }

    #[test]
    fn q_slot() {
        let v = Variables::with_q(2);
        let x = LaurentPolynomial::parse("z2 - q^2", v).unwrap();
        assert_eq!(x.to_string(), "z2 - q^2");
        assert_eq!(x.specialize_zero(2).unwrap(), LaurentPolynomial::parse("z2", v).unwrap());
        assert!(LaurentPolynomial::parse("q^-1", v).unwrap().specialize_zero(2).is_err());
        assert!(LaurentPolynomial::parse("q", Variables::z(2)).is_err());
    }

    #[test]
    fn json_round_trip_with_big_coefficient() {
        let big = BigInt::from(10).pow(30u32);
        let x = LaurentPolynomial::monomial(Variables::z(2), vec![1, -1], big.clone()) + p("5");
        let j = x.to_json();
        assert_eq!(j[0]["coeff"], Value::String(big.to_string()));
        assert_eq!(j[1]["coeff"], Value::from(5));
        assert_eq!(LaurentPolynomial::from_json(&j, Variables::z(2)).unwrap(), x);
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "z1 +", "z3", "x1", "z1^a", "z1**z2"] {
            assert!(LaurentPolynomial::parse(bad, Variables::z(2)).is_err(), "{bad}");
        }
    }
}
