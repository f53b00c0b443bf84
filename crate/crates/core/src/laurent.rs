//! The group algebra of the weight lattice with rational coefficients.
//!
//! This is the combinatorial model of `R(T)`: monomials `e^μ` for integral
//! weights `μ`, multiplied by adding exponents. On top of it live the Weyl
//! action, the augmentation `ε`, and the Demazure operators
//!
//! ```text
//! L_j(x) = (x − s_j x) / (1 − e^{−α_j})
//! T_j(x) = (e^{α_j} x − s_j x) / (e^{α_j} − 1) = e^{−ρ} L_j(e^ρ x)
//! ```
//!
//! which are evaluated monomial by monomial through their geometric-series
//! expansions; no polynomial division is ever performed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootdata::RootSystem;
use crate::weyl::{longest_of, ParabolicSubgroup, WeylElt, WeylGroup};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        LaurentPoly::monomial(vec![0; rank])
    }

    /// `e^μ`.
    pub fn monomial(mu: Vec<i64>) -> Self {
        LaurentPoly::term(mu, Rational::one())
    }

    pub fn term(mu: Vec<i64>, coeff: Rational) -> Self {
        let mut p = LaurentPoly::zero(mu.len());
        p.add_term(mu, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, Rational)>>(rank: usize, terms: I) -> Self {
        let mut p = LaurentPoly::zero(rank);
        for (mu, c) in terms {
            p.add_term(mu, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order (lexicographic on ω coordinates).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &[i64]) -> Rational {
        self.terms.get(mu).copied().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mu: Vec<i64>, coeff: Rational) {
        debug_assert_eq!(mu.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), *c);
        }
    }

    pub fn scale(&self, c: Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Multiplication by the monomial `e^λ`.
    pub fn shift(&self, lambda: &[i64]) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (add_vec(m, lambda), *c)).collect(),
        }
    }

    /// `ε`: sum of coefficients.
    pub fn epsilon(&self) -> Rational {
        self.terms.values().copied().sum()
    }

    /// `w·f`, relabelling each exponent `μ ↦ wμ`.
    pub fn weyl_act(&self, w: &WeylElt) -> LaurentPoly {
        LaurentPoly::from_terms(self.rank, self.terms.iter().map(|(m, c)| (w.act_int(m), *c)))
    }

    /// `s_j·f` (1-based `j`).
    pub fn reflect(&self, rs: &RootSystem, j: usize) -> LaurentPoly {
        LaurentPoly::from_terms(self.rank, self.terms.iter().map(|(m, c)| (rs.reflect_int(j - 1, m), *c)))
    }

    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        (1..=rs.rank()).all(|j| self.reflect(rs, j) == *self)
    }

    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().flat_map(|m| m.iter().map(|x| x.abs())).max().unwrap_or(0)
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

fn add_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), -*c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-Rational::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(add_vec(a, b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let exps: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
            if c.is_one() {
                write!(f, "e^({})", exps.join(","))?;
            } else {
                write!(f, "({c})e^({})", exps.join(","))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    weight: Vec<i64>,
    coeff: String,
}

/// Serialized as a list of `{weight, coeff}` terms. The rank is read back
/// from the weights, so the zero polynomial deserializes with rank 0.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> =
            self.terms.iter().map(|(m, c)| TermRecord { weight: m.clone(), coeff: c.to_string() }).collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    /// The rank is taken from the first term; an empty list deserializes to
    /// the rank-0 zero polynomial.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(d)?;
        let rank = records.first().map_or(0, |r| r.weight.len());
        let mut p = LaurentPoly::zero(rank);
        for r in records {
            if r.weight.len() != rank {
                return Err(D::Error::custom("inconsistent weight lengths"));
            }
            let c: Rational = r.coeff.parse().map_err(|_| D::Error::custom(format!("bad coefficient {}", r.coeff)))?;
            p.add_term(r.weight, c);
        }
        Ok(p)
    }
}

/// `T_j(e^μ)` added into `out` with multiplier `c`.
fn demazure_t_monomial(rs: &RootSystem, j0: usize, mu: &[i64], c: Rational, out: &mut LaurentPoly) {
    let k = mu[j0];
    let alpha: Vec<i64> = rs.cartan_matrix().iter().map(|row| row[j0]).collect();
    if k >= 0 {
        let mut x = mu.to_vec();
        for _ in 0..=k {
            out.add_term(x.clone(), c);
            sub_assign(&mut x, &alpha);
        }
    } else if k <= -2 {
        let mut x = mu.to_vec();
        for _ in 1..=(-k - 1) {
            add_assign_vec(&mut x, &alpha);
            out.add_term(x.clone(), -c);
        }
    }
}

/// `L_j(e^μ)` added into `out` with multiplier `c`.
fn demazure_l_monomial(rs: &RootSystem, j0: usize, mu: &[i64], c: Rational, out: &mut LaurentPoly) {
    let k = mu[j0];
    let alpha: Vec<i64> = rs.cartan_matrix().iter().map(|row| row[j0]).collect();
    if k >= 1 {
        let mut x = mu.to_vec();
        for _ in 0..k {
            out.add_term(x.clone(), c);
            sub_assign(&mut x, &alpha);
        }
    } else if k <= -1 {
        let mut x = mu.to_vec();
        for _ in 1..=-k {
            add_assign_vec(&mut x, &alpha);
            out.add_term(x.clone(), -c);
        }
    }
}

fn sub_assign(x: &mut [i64], a: &[i64]) {
    for (u, v) in x.iter_mut().zip(a) {
        *u -= v;
    }
}

fn add_assign_vec(x: &mut [i64], a: &[i64]) {
    for (u, v) in x.iter_mut().zip(a) {
        *u += v;
    }
}

/// Demazure operator `T_j` (1-based `j`).
pub fn demazure_t(rs: &RootSystem, j: usize, f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.rank);
    for (mu, c) in &f.terms {
        demazure_t_monomial(rs, j - 1, mu, *c, &mut out);
    }
    out
}

/// Operator `L_j = (1 − s_j)/(1 − e^{−α_j})` (1-based `j`).
pub fn demazure_l(rs: &RootSystem, j: usize, f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.rank);
    for (mu, c) in &f.terms {
        demazure_l_monomial(rs, j - 1, mu, *c, &mut out);
    }
    out
}

/// `T_{i_1} ⋯ T_{i_p}` applied to `f`; the rightmost letter acts first.
/// The word must be reduced.
pub fn demazure_t_word(rs: &RootSystem, word: &[usize], f: &LaurentPoly) -> Result<LaurentPoly> {
    WeylElt::from_reduced_word(rs, word)?;
    Ok(apply_t_word_unchecked(rs, word, f))
}

/// `T_w = T_{i_1} ⋯ T_{i_p}` along the canonical reduced word of `w`.
pub fn demazure_t_elt(rs: &RootSystem, w: &WeylElt, f: &LaurentPoly) -> LaurentPoly {
    apply_t_word_unchecked(rs, w.word(), f)
}

fn apply_t_word_unchecked(rs: &RootSystem, word: &[usize], f: &LaurentPoly) -> LaurentPoly {
    let mut x = f.clone();
    for &j in word.iter().rev() {
        x = demazure_t(rs, j, &x);
    }
    x
}

fn check_rank(rs: &RootSystem, len: usize) -> Result<()> {
    if len != rs.rank() {
        Err(Error::RankMismatch { expected: rs.rank(), got: len })
    } else {
        Ok(())
    }
}

/// The class `(|W_J|/|W|) ∏ (1 − e^{−α})` over positive roots `α` outside the
/// root subsystem spanned by `{α_i : i ∈ J}`.
pub fn point_class(group: &WeylGroup, gens: &BTreeSet<usize>) -> Result<LaurentPoly> {
    let rs = group.root_system();
    let sub = ParabolicSubgroup::new(rs, gens)?;
    let n = rs.rank();
    let mut prod = LaurentPoly::one(n);
    for beta in rs.positive_roots() {
        let in_levi = beta.root_coords.iter().enumerate().all(|(i, &c)| c == 0 || gens.contains(&(i + 1)));
        if in_levi {
            continue;
        }
        let neg: Vec<i64> = beta.weight.iter().map(|x| -x).collect();
        let factor = &LaurentPoly::one(n) - &LaurentPoly::monomial(neg);
        prod = &prod * &factor;
    }
    Ok(prod.scale(Rational::new(sub.order() as i64, group.order() as i64)))
}

/// Weyl character of the irreducible module with highest weight `λ`,
/// computed as `T_{w_0}(e^λ)`.
pub fn demazure_character(rs: &RootSystem, lambda: &[i64]) -> Result<LaurentPoly> {
    check_rank(rs, lambda.len())?;
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let all: BTreeSet<usize> = (1..=rs.rank()).collect();
    let w0 = longest_of(rs, &all);
    Ok(demazure_t_elt(rs, &w0, &LaurentPoly::monomial(lambda.to_vec())))
}

/// `∏_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> Rational {
    let shifted: Vec<i64> = lambda.iter().zip(rs.rho()).map(|(a, b)| a + b).collect();
    rs.positive_roots()
        .iter()
        .map(|b| Rational::new(b.pair_coroot(&shifted), b.pair_coroot(rs.rho())))
        .product()
}
