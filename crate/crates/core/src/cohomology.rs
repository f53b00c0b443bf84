//! Polynomial model of `H*(G/B)`: polynomials in the simple roots
//! `α_1, …, α_n` with BGG divided differences `∂_j(z) = (z − s_j z)/α_j`.
//!
//! Schubert representatives are obtained by descending from the top class
//! `(1/|W|) ∏_{α>0} α`, and coefficients in the Schubert basis are extracted
//! by applying the complementary divided-difference chain and reading off the
//! constant term.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::weyl::{WeylElt, WeylGroup};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyClass {
    rank: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyClass {
    pub fn zero(rank: usize) -> Self {
        PolyClass { rank, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        let mut p = PolyClass::zero(rank);
        p.add_term(vec![0; rank], c);
        p
    }

    pub fn one(rank: usize) -> Self {
        PolyClass::constant(rank, Rational::one())
    }

    /// The linear form `Σ c_i α_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = PolyClass::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, *c);
        }
        p
    }

    /// A weight viewed as a linear form in the simple roots.
    pub fn from_weight(rs: &RootSystem, lambda: &Weight) -> Self {
        PolyClass::linear(&rs.weight_to_root_coords(lambda))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: Rational) -> Self {
        let mut out = PolyClass::zero(self.rank);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&vec![0; self.rank]).copied().unwrap_or_else(Rational::zero)
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = PolyClass::one(self.rank);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `s_j` acting by `α_i ↦ α_i − ⟨α_i, α_j∨⟩ α_j` (1-based `j`).
    pub fn reflect(&self, rs: &RootSystem, j: usize) -> Self {
        let n = self.rank;
        let images: Vec<PolyClass> = (0..n)
            .map(|i| {
                let mut c = vec![Rational::zero(); n];
                c[i] = Rational::one();
                c[j - 1] -= Rational::from_integer(rs.cartan_matrix()[j - 1][i]);
                PolyClass::linear(&c)
            })
            .collect();
        let mut out = PolyClass::zero(n);
        for (e, c) in &self.terms {
            let mut m = PolyClass::constant(n, *c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = &m * &images[i].pow(k);
                }
            }
            for (e2, c2) in m.terms {
                out.add_term(e2, c2);
            }
        }
        out
    }
}

impl Add for &PolyClass {
    type Output = PolyClass;
    fn add(self, rhs: &PolyClass) -> PolyClass {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }
}

impl Sub for &PolyClass {
    type Output = PolyClass;
    fn sub(self, rhs: &PolyClass) -> PolyClass {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -*c);
        }
        out
    }
}

impl Mul for &PolyClass {
    type Output = PolyClass;
    fn mul(self, rhs: &PolyClass) -> PolyClass {
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        PolyClass { rank: self.rank, terms: acc }
    }
}

impl fmt::Display for PolyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "a{}", i + 1)?,
                    _ => write!(f, "a{}^{p}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialRecord {
    exponents: Vec<u32>,
    coeff: String,
}

/// Serialized as a list of `{exponents, coeff}` terms; as with Laurent
/// polynomials, the zero class comes back with rank 0.
impl Serialize for PolyClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(e, c)| MonomialRecord { exponents: e.clone(), coeff: c.to_string() })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let recs = Vec::<MonomialRecord>::deserialize(d)?;
        let rank = recs.first().map_or(0, |r| r.exponents.len());
        let mut p = PolyClass::zero(rank);
        for r in recs {
            if r.exponents.len() != rank {
                return Err(D::Error::custom("inconsistent exponent lengths"));
            }
            let c: Rational = r.coeff.parse().map_err(|_| D::Error::custom(format!("bad coefficient {}", r.coeff)))?;
            p.add_term(r.exponents, c);
        }
        Ok(p)
    }
}

/// BGG operator `∂_j` (1-based `j`).
pub fn bgg_partial(rs: &RootSystem, j: usize, f: &PolyClass) -> Result<PolyClass> {
    rs.check_index(j)?;
    let num = f - &f.reflect(rs, j);
    let mut out = PolyClass::zero(f.rank);
    for (e, c) in &num.terms {
        if e[j - 1] == 0 {
            return Err(Error::Internal(format!("{num} is not divisible by a{j}")));
        }
        let mut e2 = e.clone();
        e2[j - 1] -= 1;
        out.add_term(e2, *c);
    }
    Ok(out)
}

/// Applies `∂` letter by letter along `word`, leftmost letter first.
pub fn bgg_chain(rs: &RootSystem, word: &[usize], f: &PolyClass) -> Result<PolyClass> {
    word.iter().try_fold(f.clone(), |acc, &j| bgg_partial(rs, j, &acc))
}

/// Schubert representatives and basis extraction for one root system.
#[derive(Clone, Debug)]
pub struct SchubertCalculus {
    group: WeylGroup,
    top: PolyClass,
    reps: HashMap<WeylElt, PolyClass>,
}

impl SchubertCalculus {
    pub fn new(group: &WeylGroup) -> Result<Self> {
        let rs = group.root_system();
        let n = rs.rank();
        let mut top = PolyClass::constant(n, Rational::new(1, group.order() as i64));
        for beta in rs.positive_roots() {
            let c: Vec<Rational> = beta.root_coords.iter().map(|&x| Rational::from_integer(x)).collect();
            top = &top * &PolyClass::linear(&c);
        }
        let mut sc = SchubertCalculus { group: group.clone(), top, reps: HashMap::new() };
        for w in group.elements() {
            let rep = bgg_chain(rs, w.word(), &sc.top)?;
            sc.reps.insert(w.clone(), rep);
        }
        let w0 = group.longest();
        if sc.reps[w0] != PolyClass::one(n) {
            return Err(Error::Internal("top class does not descend to 1".into()));
        }
        Ok(sc)
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// `(1/|W|) ∏_{α>0} α`, the representative of the point class.
    pub fn top_class(&self) -> &PolyClass {
        &self.top
    }

    /// Representative of `[X_w]`: `∂` applied along the canonical word
    /// `s_{i_1} ⋯ s_{i_p}` of `w`, `∂_{i_1}` first, starting from the top
    /// class. Its degree is `N − ℓ(w)`.
    pub fn schubert_rep(&self, w: &WeylElt) -> &PolyClass {
        &self.reps[w]
    }

    /// Same as [`SchubertCalculus::schubert_rep`] but along an arbitrary
    /// reduced word of `w`.
    pub fn schubert_rep_along(&self, word: &[usize]) -> Result<PolyClass> {
        bgg_chain(self.group.root_system(), word, &self.top)
    }

    /// Coefficient of `[X_w]` in `f`: the constant term of `f` after the
    /// chain that carries `[X_w]` to `[X_{w_0}] = 1`.
    pub fn coefficient(&self, f: &PolyClass, w: &WeylElt) -> Result<Rational> {
        let rs = self.group.root_system();
        let u = w.inverse(rs).mul(rs, self.group.longest());
        Ok(bgg_chain(rs, u.word(), f)?.constant_term())
    }

    /// All nonzero coefficients of `f` in the Schubert basis.
    pub fn expand_in_schubert_basis(&self, f: &PolyClass) -> Result<BTreeMap<WeylElt, Rational>> {
        let n_pos = self.group.root_system().num_positive_roots() as u32;
        if f.degree().is_some_and(|d| d > n_pos) {
            return Err(Error::Precondition(format!("degree exceeds {n_pos}")));
        }
        let mut out = BTreeMap::new();
        if f.is_zero() {
            return Ok(out);
        }
        for w in self.group.elements() {
            let c = self.coefficient(f, w)?;
            if !c.is_zero() {
                out.insert(w.clone(), c);
            }
        }
        Ok(out)
    }

    /// Checks that extraction applied to every representative returns its
    /// indicator.
    pub fn round_trip(&self) -> Result<()> {
        for v in self.group.elements() {
            let coeffs = self.expand_in_schubert_basis(self.schubert_rep(v))?;
            if coeffs.len() != 1 || coeffs.get(v) != Some(&Rational::one()) {
                return Err(Error::Internal(format!("extraction of [X_{v}] gave {coeffs:?}")));
            }
        }
        Ok(())
    }

    /// `λ·[X_w]` in the Schubert basis.
    pub fn classical_chevalley(&self, lambda: &[i64], w: &WeylElt) -> Result<BTreeMap<WeylElt, Rational>> {
        if w.is_identity() {
            // λ·[pt] = 0 in H*(G/B): the product has degree N + 1
            return Ok(BTreeMap::new());
        }
        let rs = self.group.root_system();
        let form = PolyClass::from_weight(rs, &Weight::from_ints(lambda));
        self.expand_in_schubert_basis(&(&form * self.schubert_rep(w)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn setup(name: &str, rank: usize) -> (RootSystem, SchubertCalculus) {
        let rs = RootSystem::build(name, rank).unwrap();
        let g = WeylGroup::new(&rs).unwrap();
        (rs.clone(), SchubertCalculus::new(&g).unwrap())
    }

    #[test]
    fn partial_basics() {
        let rs = RootSystem::build("B", 2).unwrap();
        assert!(bgg_partial(&rs, 1, &PolyClass::constant(2, q(5))).unwrap().is_zero());
        let lam = Weight::from_ints(&[3, -1]);
        let form = PolyClass::from_weight(&rs, &lam);
        for j in 1..=2 {
            let d = bgg_partial(&rs, j, &form).unwrap();
            assert_eq!(d, PolyClass::constant(2, lam.coords[j - 1]));
        }
    }

    #[test]
    fn a1_reps() {
        let (rs, sc) = setup("A", 1);
        let id = WeylElt::identity(1);
        let s1 = WeylElt::from_word(&rs, &[1]).unwrap();
        let half_a1 = PolyClass::linear(&[Rational::new(1, 2)]);
        assert_eq!(*sc.schubert_rep(&id), half_a1);
        assert_eq!(*sc.schubert_rep(&s1), PolyClass::one(1));
        assert_eq!(bgg_partial(&rs, 1, &half_a1).unwrap(), PolyClass::one(1));
        let chev = sc.classical_chevalley(&[1], &s1).unwrap();
        assert_eq!(chev, BTreeMap::from([(id, q(1))]));
        assert!(sc.classical_chevalley(&[0], &s1).unwrap().is_empty());
    }

    #[test]
    fn degrees_and_round_trip() {
        for (name, rank) in [("A", 2), ("B", 2), ("G", 2), ("A", 3)] {
            let (rs, sc) = setup(name, rank);
            let n = rs.num_positive_roots();
            for w in sc.group().elements() {
                let rep = sc.schubert_rep(w);
                assert!(rep.is_homogeneous());
                assert_eq!(rep.degree(), Some((n - w.length()) as u32));
            }
            sc.round_trip().unwrap();
            assert!(sc.expand_in_schubert_basis(&PolyClass::zero(rank)).unwrap().is_empty());
        }
    }

    #[test]
    fn reduced_word_independence() {
        for name in ["A", "B", "G"] {
            let (_, sc) = setup(name, 2);
            for w in sc.group().elements() {
                for word in sc.group().reduced_words(w) {
                    assert_eq!(sc.schubert_rep_along(&word).unwrap(), *sc.schubert_rep(w));
                }
            }
        }
    }

    #[test]
    fn a2_chevalley() {
        let (rs, sc) = setup("A", 2);
        let s1 = WeylElt::from_word(&rs, &[1]).unwrap();
        let chev = sc.classical_chevalley(&[1, 0], &s1).unwrap();
        assert_eq!(chev, BTreeMap::from([(WeylElt::identity(2), q(1))]));
        let s2 = WeylElt::from_word(&rs, &[2]).unwrap();
        assert!(sc.classical_chevalley(&[1, 0], &s2).unwrap().is_empty());
    }

    #[test]
    fn g2_chevalley_layer() {
        let (rs, sc) = setup("G", 2);
        let w = WeylElt::from_word(&rs, &[1, 2, 1, 2]).unwrap();
        let chev = sc.classical_chevalley(&[0, 1], &w).unwrap();
        let expected = BTreeMap::from([
            (WeylElt::from_word(&rs, &[1, 2, 1]).unwrap(), q(1)),
            (WeylElt::from_word(&rs, &[2, 1, 2]).unwrap(), q(3)),
        ]);
        assert_eq!(chev, expected);
    }

    fn random_poly(rng: &mut impl rand::Rng, rank: usize) -> PolyClass {
        let mut p = PolyClass::zero(rank);
        for _ in 0..6 {
            let e: Vec<u32> = (0..rank).map(|_| rng.gen_range(0..4)).collect();
            p.add_term(e, Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
        }
        p
    }

    #[test]
    fn partial_squares_to_zero_and_leibniz() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (name, rank) in [("A", 2), ("B", 2), ("G", 2), ("C", 3)] {
            let rs = RootSystem::build(name, rank).unwrap();
            for _ in 0..20 {
                let f = random_poly(&mut rng, rank);
                let g = random_poly(&mut rng, rank);
                for j in 1..=rank {
                    let d = bgg_partial(&rs, j, &f).unwrap();
                    assert!(bgg_partial(&rs, j, &d).unwrap().is_zero());
                    // f + s_j f is s_j-invariant
                    let inv = &f + &f.reflect(&rs, j);
                    assert_eq!(inv.reflect(&rs, j), inv);
                    let lhs = bgg_partial(&rs, j, &(&inv * &g)).unwrap();
                    let rhs = &inv * &bgg_partial(&rs, j, &g).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    fn matrix_rank(mut rows: Vec<Vec<Rational>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let k = rows[i][c] / rows[r][c];
                    let pivot = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(pivot) {
                        *x -= k * y;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn reps_of_equal_length_are_independent() {
        for (name, rank) in [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)] {
            let (rs, sc) = setup(name, rank);
            for len in 0..=rs.num_positive_roots() {
                let reps: Vec<&PolyClass> =
                    sc.group().elements().iter().filter(|w| w.length() == len).map(|w| sc.schubert_rep(w)).collect();
                let monos: std::collections::BTreeSet<&Vec<u32>> =
                    reps.iter().flat_map(|p| p.terms().map(|(e, _)| e)).collect();
                let rows: Vec<Vec<Rational>> = reps
                    .iter()
                    .map(|p| monos.iter().map(|e| p.terms.get(*e).copied().unwrap_or_else(Rational::zero)).collect())
                    .collect();
                assert_eq!(matrix_rank(rows), reps.len(), "{name}{rank} length {len}");
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let (_, sc) = setup("G", 2);
        let top = sc.top_class();
        let json = serde_json::to_string(top).unwrap();
        let back: PolyClass = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, top);
    }
}
