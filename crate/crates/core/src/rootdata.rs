//! Finite root systems and weight-lattice arithmetic.
//!
//! Weights are written in the basis of fundamental weights `ω_1, …, ω_n`, so
//! the pairing `⟨λ, α_j∨⟩` is just the `j`-th coordinate. Simple roots are
//! read off the Cartan matrix with the convention `a_ij = ⟨α_j, α_i∨⟩`
//! (Bourbaki labeling; for `G2` the root `α_1` is short).
//!
//! Simple-root indices in the public API are 1-based, matching the usual
//! notation `s_1, s_2, …`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A finite Cartan type such as `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = (1..=MAX_RANK).contains(&rank)
            && match family {
                Family::A => true,
                Family::B | Family::C => rank >= 2,
                Family::D => rank >= 4,
                Family::E => (6..=8).contains(&rank),
                Family::F => rank == 4,
                Family::G => rank == 2,
            };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(family.letter().to_string(), rank))
        }
    }

    /// Parses `"G2"`-style names; when `rank` is given it must agree with the
    /// digits in the name (a bare letter takes the rank from the argument).
    pub fn parse(name: &str, rank: Option<usize>) -> Result<Self> {
        let name = name.trim();
        let bad = || Error::InvalidCartanType(name.to_string(), rank.unwrap_or(0));
        let mut chars = name.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let digits: String = chars.collect();
        let named = if digits.is_empty() {
            None
        } else {
            Some(digits.parse::<usize>().map_err(|_| bad())?)
        };
        let r = match (named, rank) {
            (Some(a), Some(b)) if a != b => return Err(bad()),
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(bad()),
        };
        CartanType::new(family, r)
    }

    /// `a_ij = ⟨α_j, α_i∨⟩`, 0-based.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Number of positive roots from the classification.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CartanType::parse(s, None)
    }
}

/// A weight in fundamental-weight coordinates with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![Rational::zero(); rank] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| Rational::from_integer(c)).collect() }
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i - 1] = Rational::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn to_integral(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: Rational) -> Weight {
        Weight { coords: self.coords.iter().map(|a| a * c).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A positive root, stored both in simple-root coordinates and in
/// fundamental-weight coordinates, together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// `β = Σ c_i α_i`.
    pub root_coords: Vec<i64>,
    /// `⟨β, α_j∨⟩` for each `j`.
    pub weight: Vec<i64>,
    /// `β∨ = Σ c∨_i α_i∨`, so that `⟨λ, β∨⟩ = Σ c∨_i λ_i`.
    pub coroot_coords: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    pub fn pair_coroot(&self, lambda: &[i64]) -> i64 {
        self.coroot_coords.iter().zip(lambda).map(|(c, l)| c * l).sum()
    }

    pub fn pair_coroot_rational(&self, lambda: &Weight) -> Rational {
        self.coroot_coords.iter().zip(&lambda.coords).map(|(c, l)| l * *c).sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths `(α_i, α_i)/2`, normalized so the shortest is 1.
    symmetrizer: Vec<Rational>,
    positive_roots: Vec<Root>,
    rho: Vec<i64>,
    /// `h_j` with `height(β) = Σ_j h_j ⟨β, α_j∨⟩`.
    height_form: Vec<Rational>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let symmetrizer = symmetrizer(&cartan);
        let mut rs = RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            rho: Vec::new(),
            height_form: Vec::new(),
        };
        let n = rs.rank();
        rs.height_form = (1..=n)
            .map(|j| rs.weight_to_root_coords(&Weight::fundamental(n, j)).into_iter().sum())
            .collect();
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                c
            })
            .collect();
        let closure = rs.reflection_closure(&simple);
        rs.positive_roots = closure.into_iter().map(|c| rs.make_root(c)).collect();
        rs.positive_roots
            .sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.root_coords.cmp(&a.root_coords)));
        rs.rho = vec![0; n];
        for beta in &rs.positive_roots {
            for (r, x) in rs.rho.iter_mut().zip(&beta.weight) {
                *r += x;
            }
        }
        for r in rs.rho.iter_mut() {
            debug_assert!(*r % 2 == 0);
            *r /= 2;
        }
        rs
    }

    /// Builds the root system of type `family`/`rank`, validating the pair.
    pub fn build(name: &str, rank: usize) -> Result<Self> {
        Ok(RootSystem::new(CartanType::parse(name, Some(rank))?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `ρ` in fundamental-weight coordinates (all ones).
    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    pub fn rho_weight(&self) -> Weight {
        Weight::from_ints(&self.rho)
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.rank() {
            Err(Error::IndexOutOfRange { index: j, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    fn check_weight(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            Err(Error::RankMismatch { expected: self.rank(), got: len })
        } else {
            Ok(())
        }
    }

    /// `α_j` in fundamental-weight coordinates (1-based `j`).
    pub fn simple_root(&self, j: usize) -> Vec<i64> {
        self.cartan.iter().map(|row| row[j - 1]).collect()
    }

    pub fn simple_root_weight(&self, j: usize) -> Weight {
        Weight::from_ints(&self.simple_root(j))
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    /// `⟨λ, α_j∨⟩`.
    pub fn pairing(&self, lambda: &Weight, j: usize) -> Result<Rational> {
        self.check_index(j)?;
        self.check_weight(lambda.rank())?;
        Ok(lambda.coords[j - 1])
    }

    /// `s_j λ = λ − ⟨λ, α_j∨⟩ α_j`.
    pub fn reflect(&self, j: usize, lambda: &Weight) -> Result<Weight> {
        self.check_index(j)?;
        self.check_weight(lambda.rank())?;
        let k = lambda.coords[j - 1];
        let coords = lambda
            .coords
            .iter()
            .zip(&self.cartan)
            .map(|(c, row)| c - k * row[j - 1])
            .collect();
        Ok(Weight { coords })
    }

    /// Integral version of [`RootSystem::reflect`], 0-based index, no checks.
    pub fn reflect_int(&self, j0: usize, lambda: &[i64]) -> Vec<i64> {
        let k = lambda[j0];
        lambda.iter().zip(&self.cartan).map(|(c, row)| c - k * row[j0]).collect()
    }

    pub fn reflect_int_in_place(&self, j0: usize, lambda: &mut [i64]) {
        let k = lambda[j0];
        if k != 0 {
            for (c, row) in lambda.iter_mut().zip(&self.cartan) {
                *c -= k * row[j0];
            }
        }
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|j| c.iter().enumerate().map(|(i, ci)| ci * self.cartan[j][i]).sum())
            .collect()
    }

    /// Converts a weight to simple-root coordinates (inverse Cartan matrix).
    #[allow(clippy::needless_range_loop)]
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Vec<Rational> {
        // Solve Σ_i c_i a_ji = λ_j, i.e. A c = λ, by exact Gaussian elimination.
        let n = self.rank();
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut row: Vec<Rational> =
                    (0..n).map(|i| Rational::from_integer(self.cartan[j][i])).collect();
                row.push(lambda.coords[j]);
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for k in col..=n {
                        let v = m[col][k] * f;
                        m[r][k] -= v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }

    /// Height `Σ c_i` of a weight written as `Σ c_i α_i`.
    pub fn height(&self, weight: &[i64]) -> Rational {
        self.height_form.iter().zip(weight).map(|(h, b)| h * *b).sum()
    }

    /// Sign of a root given in ω coordinates; assumes the input is a root.
    pub fn is_positive_root(&self, weight: &[i64]) -> bool {
        self.height(weight).is_positive()
    }

    /// Whether a weight (in ω coordinates) is a root, and if so its sign.
    pub fn root_sign(&self, weight: &[i64]) -> Option<bool> {
        if self.positive_roots.iter().find(|b| b.weight == weight).is_some() {
            return Some(true);
        }
        let neg: Vec<i64> = weight.iter().map(|x| -x).collect();
        self.positive_roots.iter().find(|b| b.weight == neg).map(|_| false)
    }

    /// Index of the positive root with the given ω-coordinates.
    pub fn find_positive_root(&self, weight: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|b| b.weight == weight)
    }

    /// Closes a set of positive roots (simple-root coordinates) under simple
    /// reflections, keeping only positive images.
    pub fn reflection_closure(&self, seed: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
        let n = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = seed.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = seed.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for j in 0..n {
                let k: i64 = (0..n).map(|i| beta[i] * self.cartan[j][i]).sum();
                if k == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[j] -= k;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen
    }

    fn make_root(&self, c: Vec<i64>) -> Root {
        let n = self.rank();
        let weight = self.root_to_weight(&c);
        // (β,β) = Σ c_i c_j d_i a_ij; β∨ = Σ c_i (d_i / d_β) α_i∨ with d_β = (β,β)/2.
        let mut norm = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                norm += self.symmetrizer[i] * (c[i] * c[j] * self.cartan[i][j]);
            }
        }
        let d_beta = norm / 2;
        let coroot_coords = (0..n)
            .map(|i| {
                let x = self.symmetrizer[i] * c[i] / d_beta;
                assert!(x.is_integer(), "coroot coordinate must be integral");
                x.to_integer()
            })
            .collect();
        Root { root_coords: c, weight, coroot_coords }
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(di * Rational::new(cartan[i][j], cartan[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let min = d.iter().copied().min().unwrap();
    d.into_iter().map(|x| x / min).collect()
}
