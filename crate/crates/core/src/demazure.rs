//! Isobaric Demazure operators and Demazure atom operators in types B and C.
//!
//! `D_i` acts on a monomial `z^μ` by the geometric string along `α_i`; this
//! is the production path. [`apply_demazure_quotient`] builds the defining
//! quotient `(f − z^{−α_i} s_i f)/(1 − z^{−α_i})` with exact division and
//! serves as an independent reference.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Exponents, LaurentPolynomial, Variables};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weyl::{SignedPermutation, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    B,
    C,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            match self {
                CartanType::B => "B",
                CartanType::C => "C",
            }
        )
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            other => Err(Error::Parse(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// Root data for `B_n` or `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanData {
    pub cartan_type: CartanType,
    pub rank: usize,
}

impl CartanData {
    pub fn new(cartan_type: CartanType, rank: usize) -> Self {
        CartanData { cartan_type, rank }
    }

    pub fn vars(&self) -> Variables {
        Variables::z(self.rank)
    }

    /// `ρ = (n−1, n−2, …, 0)`.
    pub fn rho(&self) -> Exponents {
        (0..self.rank).rev().map(|x| x as i32).collect()
    }

    /// Simple root `α_i` as an exponent vector.
    pub fn simple_root(&self, i: usize) -> Result<Exponents> {
        self.check_index(i)?;
        let n = self.rank;
        let mut a = vec![0; n];
        if i < n {
            a[i - 1] = 1;
            a[i] = -1;
        } else {
            a[n - 1] = match self.cartan_type {
                CartanType::B => 1,
                CartanType::C => 2,
            };
        }
        Ok(a)
    }

    /// `⟨μ, α_i^∨⟩`.
    pub fn pairing(&self, mu: &[i32], i: usize) -> Result<i32> {
        self.check_index(i)?;
        let n = self.rank;
        Ok(if i < n {
            mu[i - 1] - mu[i]
        } else {
            match self.cartan_type {
                CartanType::B => 2 * mu[n - 1],
                CartanType::C => mu[n - 1],
            }
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::Invalid(format!("generator index {i} outside 1..={}", self.rank)));
        }
        Ok(())
    }

    fn check_poly(&self, p: &LaurentPolynomial) -> Result<()> {
        if p.vars() != self.vars() {
            return Err(Error::VariableMismatch { left: self.vars().len(), right: p.vars().len() });
        }
        Ok(())
    }
}

fn add_scaled(mu: &[i32], alpha: &[i32], t: i32) -> Exponents {
    mu.iter().zip(alpha).map(|(m, a)| m + t * a).collect()
}

/// `D_i p`, term by term through the monomial string formula.
pub fn apply_demazure(i: usize, p: &LaurentPolynomial, cd: &CartanData) -> Result<LaurentPolynomial> {
    cd.check_poly(p)?;
    let alpha = cd.simple_root(i)?;
    let mut terms: Vec<(Exponents, num_bigint::BigInt)> = Vec::new();
    for (mu, c) in p.terms() {
        let k = cd.pairing(mu, i)?;
        if k >= 0 {
            for t in 0..=k {
                terms.push((add_scaled(mu, &alpha, -t), c.clone()));
            }
        } else {
            for t in 1..(-k) {
                terms.push((add_scaled(mu, &alpha, t), -c));
            }
        }
    }
    Ok(LaurentPolynomial::from_terms(cd.vars(), terms))
}

/// `A_i p = D_i p − p`.
pub fn apply_atom(i: usize, p: &LaurentPolynomial, cd: &CartanData) -> Result<LaurentPolynomial> {
    Ok(apply_demazure(i, p, cd)? - p)
}

/// Reference implementation of `D_i` through the defining quotient.
pub fn apply_demazure_quotient(i: usize, p: &LaurentPolynomial, cd: &CartanData) -> Result<LaurentPolynomial> {
    cd.check_poly(p)?;
    let alpha = cd.simple_root(i)?;
    let s = SignedPermutation::generator(cd.rank, i)?;
    let neg_alpha: Exponents = alpha.iter().map(|a| -a).collect();
    let one = LaurentPolynomial::one(cd.vars());
    let x = LaurentPolynomial::monomial(cd.vars(), neg_alpha, 1);
    let numerator = p - &x * &p.act_variables(&s)?;
    numerator.exact_divide(&(one - x))
}

/// `z^λ` padded to the rank.
pub fn highest_weight_monomial(lambda: &Partition, cd: &CartanData) -> Result<LaurentPolynomial> {
    let l = lambda.padded(cd.rank)?;
    Ok(LaurentPolynomial::monomial(cd.vars(), l.parts().to_vec(), 1))
}

fn apply_word(
    word: &[usize],
    mut f: LaurentPolynomial,
    cd: &CartanData,
    op: fn(usize, &LaurentPolynomial, &CartanData) -> Result<LaurentPolynomial>,
) -> Result<LaurentPolynomial> {
    for &i in word.iter().rev() {
        f = op(i, &f, cd)?;
    }
    Ok(f)
}

/// `D_w z^λ` along the BFS reduced word of `w`.
pub fn demazure_polynomial(w: &SignedPermutation, lambda: &Partition, cd: &CartanData) -> Result<LaurentPolynomial> {
    let word = reduced_word_for(w, cd)?;
    demazure_polynomial_with_word(&word, lambda, cd)
}

/// `D_{a_1} ⋯ D_{a_k} z^λ` for an explicit word.
pub fn demazure_polynomial_with_word(word: &[usize], lambda: &Partition, cd: &CartanData) -> Result<LaurentPolynomial> {
    apply_word(word, highest_weight_monomial(lambda, cd)?, cd, apply_demazure)
}

/// `A_w z^λ` along the BFS reduced word of `w`.
pub fn atom_polynomial(w: &SignedPermutation, lambda: &Partition, cd: &CartanData) -> Result<LaurentPolynomial> {
    let word = reduced_word_for(w, cd)?;
    atom_polynomial_with_word(&word, lambda, cd)
}

pub fn atom_polynomial_with_word(word: &[usize], lambda: &Partition, cd: &CartanData) -> Result<LaurentPolynomial> {
    apply_word(word, highest_weight_monomial(lambda, cd)?, cd, apply_atom)
}

/// The irreducible character `χ_λ = D_{w_0} z^λ`.
pub fn character(lambda: &Partition, cd: &CartanData) -> Result<LaurentPolynomial> {
    demazure_polynomial(&SignedPermutation::longest(cd.rank), lambda, cd)
}

fn reduced_word_for(w: &SignedPermutation, cd: &CartanData) -> Result<Vec<usize>> {
    if w.rank() != cd.rank {
        return Err(Error::RankMismatch { left: w.rank(), right: cd.rank });
    }
    Ok(WeylGroup::new(cd.rank).reduced_word(w).to_vec())
}

/// `z^ρ`.
pub fn rho_monomial(cd: &CartanData) -> LaurentPolynomial {
    LaurentPolynomial::monomial(cd.vars(), cd.rho(), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(t: CartanType, n: usize) -> CartanData {
        CartanData::new(t, n)
    }
    fn p(s: &str, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variables::z(n)).unwrap()
    }
    fn lam(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }
    fn w(s: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(s, n).unwrap()
    }

    #[test]
    fn string_cases() {
        let c2 = cd(CartanType::C, 2);
        // k = μ_1 − μ_2 = −1
        assert!(apply_demazure(1, &p("z1*z2^2", 2), &c2).unwrap().is_zero());
        assert_eq!(apply_demazure(1, &p("z1^2*z2", 2), &c2).unwrap(), p("z1^2*z2 + z1*z2^2", 2));
        assert_eq!(apply_demazure(2, &p("z1^3*z2", 2), &c2).unwrap(), p("z1^3*z2 + z1^3*z2^-1", 2));
        assert!(apply_demazure(2, &p("z1^3*z2^-1", 2), &c2).unwrap().is_zero());
        assert!(apply_demazure(3, &p("z1", 2), &c2).is_err());
    }

    #[test]
    fn atom_cases() {
        let c2 = cd(CartanType::C, 2);
        assert!(apply_atom(1, &p("z1*z2", 2), &c2).unwrap().is_zero());
        assert_eq!(apply_atom(1, &p("z1^2*z2", 2), &c2).unwrap(), p("z1*z2^2", 2));
        assert_eq!(apply_atom(2, &p("z1^3*z2", 2), &c2).unwrap(), p("z1^3*z2^-1", 2));
    }

    #[test]
    fn worked_atoms() {
        let c2 = cd(CartanType::C, 2);
        assert_eq!(
            atom_polynomial(&w("s1 s2 s1", 2), &lam("2,1"), &c2).unwrap(),
            p("z1^-1 + z2 + z2^-1 + z1^-2*z2", 2)
        );
        assert_eq!(atom_polynomial(&w("w0", 2), &lam("2,1"), &c2).unwrap(), p("z1^-2*z2^-1", 2));
        let total = SignedPermutation::all(2)
            .iter()
            .map(|x| atom_polynomial(x, &lam("2,1"), &c2).unwrap())
            .fold(LaurentPolynomial::zero(c2.vars()), |a, b| a + b);
        assert_eq!(total, character(&lam("2,1"), &c2).unwrap());
    }

    #[test]
    fn vector_representation() {
        let c2 = cd(CartanType::C, 2);
        assert_eq!(character(&lam("1"), &c2).unwrap(), p("z1 + z2 + z2^-1 + z1^-1", 2));
        let b2 = cd(CartanType::B, 2);
        assert_eq!(character(&lam("1"), &b2).unwrap(), p("z1 + z2 + 1 + z2^-1 + z1^-1", 2));
    }

    #[test]
    fn identity_gives_highest_weight() {
        let b3 = cd(CartanType::B, 3);
        assert_eq!(demazure_polynomial(&w("1", 3), &lam("2,1"), &b3).unwrap(), p("z1^2*z2", 3));
    }

    #[test]
    fn quotient_reference_agrees_on_examples() {
        for t in [CartanType::B, CartanType::C] {
            let c = cd(t, 2);
            for s in ["z1^3*z2", "z1^-2*z2^3", "z2^-1", "1 + z1*z2^-4"] {
                for i in 1..=2 {
                    assert_eq!(
                        apply_demazure(i, &p(s, 2), &c).unwrap(),
                        apply_demazure_quotient(i, &p(s, 2), &c).unwrap()
                    );
                }
            }
        }
    }
}
