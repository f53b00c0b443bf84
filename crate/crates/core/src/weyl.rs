//! Weyl group elements, Bruhat order, parabolic cosets and maximal lifts.
//!
//! An element `w` is identified by the images `w·ω_1, …, w·ω_n` of the
//! fundamental weights. Its stored word is the lexicographically smallest
//! reduced word, recovered by repeatedly stripping the smallest left descent
//! (a left descent `i` of `w` is exactly a negative coordinate of `w·ρ`).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootdata::{Root, RootSystem, Weight};
use crate::Rational;

/// Default cap on `|W|` for full group generation (the order of `W(E6)`).
pub const DEFAULT_GROUP_CAP: usize = 51840;

#[derive(Clone, Debug)]
pub struct WeylElt {
    /// `images[j] = w·ω_{j+1}` in ω coordinates.
    images: Vec<Vec<i64>>,
    /// Lexicographically smallest reduced word, 1-based indices.
    word: Vec<usize>,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

/// Orders by length, then by canonical word.
impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for i in &self.word {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl WeylElt {
    pub fn identity(rank: usize) -> Self {
        let images = (0..rank)
            .map(|j| {
                let mut v = vec![0; rank];
                v[j] = 1;
                v
            })
            .collect();
        WeylElt { images, word: Vec::new() }
    }

    /// Builds an element from images of fundamental weights, recovering its
    /// canonical reduced word.
    pub fn from_images(rs: &RootSystem, images: Vec<Vec<i64>>) -> Self {
        let n = images.len();
        let mut v: Vec<i64> = (0..n).map(|i| images.iter().map(|c| c[i]).sum()).collect();
        let mut word = Vec::new();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            word.push(i + 1);
            rs.reflect_int_in_place(i, &mut v);
        }
        WeylElt { images, word }
    }

    /// The product `s_{i_1} ⋯ s_{i_k}` of an arbitrary (not necessarily
    /// reduced) word.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut images = WeylElt::identity(rs.rank()).images;
        for &i in word.iter().rev() {
            rs.check_index(i)?;
            for col in images.iter_mut() {
                rs.reflect_int_in_place(i - 1, col);
            }
        }
        Ok(WeylElt::from_images(rs, images))
    }

    /// Like [`WeylElt::from_word`], but rejects words that are not reduced.
    pub fn from_reduced_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let w = WeylElt::from_word(rs, word)?;
        if w.length() != word.len() {
            return Err(Error::NotReduced(word.to_vec()));
        }
        Ok(w)
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        WeylElt::from_word(rs, &[i])
    }

    /// The reflection `s_β: λ ↦ λ − ⟨λ, β∨⟩ β`.
    pub fn reflection(rs: &RootSystem, beta: &Root) -> Self {
        let n = rs.rank();
        let images = (0..n)
            .map(|j| {
                let c = beta.coroot_coords[j];
                (0..n)
                    .map(|i| if i == j { 1 } else { 0 } - c * beta.weight[i])
                    .collect()
            })
            .collect();
        WeylElt::from_images(rs, images)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn act_int(&self, lambda: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0; n];
        for (l, col) in lambda.iter().zip(&self.images) {
            if *l != 0 {
                for (o, c) in out.iter_mut().zip(col) {
                    *o += l * c;
                }
            }
        }
        out
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        let n = self.rank();
        let mut coords = vec![Rational::from_integer(0); n];
        for (l, col) in lambda.coords.iter().zip(&self.images) {
            for (o, c) in coords.iter_mut().zip(col) {
                *o += l * *c;
            }
        }
        Weight { coords }
    }

    /// `w·ρ`; faithful since `ρ` is regular.
    pub fn rho_image(&self) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|i| self.images.iter().map(|c| c[i]).sum()).collect()
    }

    pub fn mul(&self, rs: &RootSystem, other: &WeylElt) -> WeylElt {
        let images = other.images.iter().map(|c| self.act_int(c)).collect();
        WeylElt::from_images(rs, images)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElt {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElt::from_word(rs, &rev).expect("stored word has valid indices")
    }

    /// `s_i·w` (1-based `i`).
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElt {
        let images = self.images.iter().map(|c| rs.reflect_int(i - 1, c)).collect();
        WeylElt::from_images(rs, images)
    }

    /// `w·s_i` (1-based `i`).
    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElt {
        let mut images = self.images.clone();
        let alpha = rs.simple_root(i);
        let img_alpha = self.act_int(&alpha);
        // w s_i ω_j = w(ω_j − δ_ij α_i)
        for (o, a) in images[i - 1].iter_mut().zip(&img_alpha) {
            *o -= a;
        }
        WeylElt::from_images(rs, images)
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.images.iter().map(|c| c[i - 1]).sum::<i64>() < 0
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w·α_i` is negative.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        !rs.is_positive_root(&self.act_int(&rs.simple_root(i)))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots().iter().filter(|b| !rs.is_positive_root(&self.act_int(&b.weight))).count()
    }
}

/// Bruhat order test `v ≤ w`.
///
/// Walks the stored reduced word `s_{i_1} ⋯ s_{i_k}` of `w` from the left,
/// greedily matching letters of `v`: when `s = s_{i_1}` is a left descent of
/// `v` we keep it in the subword and continue with `s·v`, otherwise we skip it.
/// `v ≤ w` iff the remainder is the identity (subword property).
pub fn bruhat_leq(rs: &RootSystem, v: &WeylElt, w: &WeylElt) -> bool {
    if v.length() > w.length() {
        return false;
    }
    let mut x = v.rho_image();
    for &s in w.word() {
        if x[s - 1] < 0 {
            rs.reflect_int_in_place(s - 1, &mut x);
        }
    }
    x.iter().all(|&c| c > 0) && x == rs.rho()
}

pub fn bruhat_lt(rs: &RootSystem, v: &WeylElt, w: &WeylElt) -> bool {
    v.length() < w.length() && bruhat_leq(rs, v, w)
}

/// Normalizes a set of simple indices (1-based).
pub fn stabilizer_set(lambda: &[i64]) -> BTreeSet<usize> {
    lambda.iter().enumerate().filter(|(_, &c)| c == 0).map(|(i, _)| i + 1).collect()
}

/// The standard parabolic subgroup `W_J` generated by `{s_j : j ∈ J}`.
#[derive(Clone, Debug)]
pub struct ParabolicSubgroup {
    pub gens: BTreeSet<usize>,
    pub elements: Vec<WeylElt>,
    pub longest: WeylElt,
}

impl ParabolicSubgroup {
    pub fn new(rs: &RootSystem, gens: &BTreeSet<usize>) -> Result<Self> {
        for &j in gens {
            rs.check_index(j)?;
        }
        let id = WeylElt::identity(rs.rank());
        let mut seen: HashMap<WeylElt, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &j in gens {
                let y = x.right_mul_simple(rs, j);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let longest = elements.iter().max_by_key(|e| e.length()).cloned().unwrap();
        Ok(ParabolicSubgroup { gens: gens.clone(), elements, longest })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Minimal-length representative of `w W_J`.
pub fn coset_min_rep(rs: &RootSystem, w: &WeylElt, gens: &BTreeSet<usize>) -> WeylElt {
    let mut x = w.clone();
    while let Some(&j) = gens.iter().find(|&&j| x.has_right_descent(rs, j)) {
        x = x.right_mul_simple(rs, j);
    }
    x
}

/// Maximal-length representative of `w W_J`.
pub fn coset_max_rep(rs: &RootSystem, w: &WeylElt, gens: &BTreeSet<usize>) -> WeylElt {
    let mut x = w.clone();
    while let Some(&j) = gens.iter().find(|&&j| !x.has_right_descent(rs, j)) {
        x = x.right_mul_simple(rs, j);
    }
    x
}

/// Longest element of `W_J`.
pub fn longest_of(rs: &RootSystem, gens: &BTreeSet<usize>) -> WeylElt {
    coset_max_rep(rs, &WeylElt::identity(rs.rank()), gens)
}

/// Bruhat order on `W/W_J`, comparing minimal representatives.
pub fn coset_bruhat_leq(rs: &RootSystem, tau: &WeylElt, sigma: &WeylElt, gens: &BTreeSet<usize>) -> bool {
    bruhat_leq(rs, &coset_min_rep(rs, tau, gens), &coset_min_rep(rs, sigma, gens))
}

/// Maximal lift of a strictly decreasing chain of cosets `τ_1 > … > τ_r`
/// (given by any representatives) with respect to `w`.
///
/// Returns `w ≥ t_1 > … > t_r` with `t_i ∈ τ_i W_J`, each `t_i` the Bruhat
/// maximum of the admissible part of its coset. Found by exhaustion over the
/// coset; a missing maximum is reported as an internal error.
pub fn maximal_lift(
    rs: &RootSystem,
    chain: &[WeylElt],
    w: &WeylElt,
    parabolic: &ParabolicSubgroup,
) -> Result<Vec<WeylElt>> {
    let mut lift: Vec<WeylElt> = Vec::with_capacity(chain.len());
    for tau in chain {
        let candidates: Vec<WeylElt> = parabolic
            .elements
            .iter()
            .map(|u| tau.mul(rs, u))
            .filter(|t| match lift.last() {
                None => bruhat_leq(rs, t, w),
                Some(prev) => bruhat_lt(rs, t, prev),
            })
            .collect();
        if candidates.is_empty() {
            return Err(Error::NoLift);
        }
        let top = candidates
            .iter()
            .find(|m| candidates.iter().all(|c| bruhat_leq(rs, c, m)))
            .ok_or_else(|| {
                Error::Internal(format!("no unique Bruhat-maximal lift of coset {tau} below the bound"))
            })?;
        lift.push(top.clone());
    }
    Ok(lift)
}

/// `v(π, w)`: the last element of the maximal lift.
pub fn final_direction(
    rs: &RootSystem,
    chain: &[WeylElt],
    w: &WeylElt,
    parabolic: &ParabolicSubgroup,
) -> Result<WeylElt> {
    maximal_lift(rs, chain, w, parabolic)?
        .pop()
        .ok_or_else(|| Error::Precondition("empty coset chain".into()))
}

/// Minimal coset representatives of `W/W_J`.
#[derive(Clone, Debug)]
pub struct ParabolicQuotient {
    pub stabilizer_gens: BTreeSet<usize>,
    pub cosets: Vec<WeylElt>,
    pub subgroup_size: usize,
}

/// The full finite Weyl group, generated breadth-first so that elements come
/// out sorted by length.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElt>,
    index: HashMap<WeylElt, usize>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        WeylGroup::with_cap(rs, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(rs: &RootSystem, cap: usize) -> Result<Self> {
        let id = WeylElt::identity(rs.rank());
        let mut index = HashMap::new();
        index.insert(id.clone(), 0);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for j in 1..=rs.rank() {
                if x.has_right_descent(rs, j) {
                    continue;
                }
                let y = x.right_mul_simple(rs, j);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(WeylGroup { rs: rs.clone(), elements, index })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &WeylElt) -> bool {
        self.index.contains_key(w)
    }

    pub fn longest(&self) -> &WeylElt {
        self.elements.last().expect("group is nonempty")
    }

    pub fn identity(&self) -> &WeylElt {
        &self.elements[0]
    }

    pub fn element(&self, word: &[usize]) -> Result<WeylElt> {
        WeylElt::from_word(&self.rs, word)
    }

    pub fn quotient(&self, gens: &BTreeSet<usize>) -> Result<ParabolicQuotient> {
        let sub = ParabolicSubgroup::new(&self.rs, gens)?;
        let cosets: Vec<WeylElt> = self
            .elements
            .iter()
            .filter(|w| gens.iter().all(|&j| !w.has_right_descent(&self.rs, j)))
            .cloned()
            .collect();
        Ok(ParabolicQuotient { stabilizer_gens: gens.clone(), cosets, subgroup_size: sub.order() })
    }

    /// All reduced words of `w`, by recursion on right descents.
    pub fn reduced_words(&self, w: &WeylElt) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in 1..=self.rs.rank() {
            if w.has_right_descent(&self.rs, j) {
                let shorter = w.right_mul_simple(&self.rs, j);
                for mut word in self.reduced_words(&shorter) {
                    word.push(j);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build("G", 2).unwrap();
        let g = WeylGroup::new(&rs).unwrap();
        (rs, g)
    }

    fn el(rs: &RootSystem, word: &[usize]) -> WeylElt {
        WeylElt::from_word(rs, word).unwrap()
    }

    /// Brute-force subword oracle: some subword of `w`'s reduced word is a
    /// reduced word for `v`.
    fn subword_oracle(rs: &RootSystem, v: &WeylElt, w: &WeylElt) -> bool {
        let word = w.word();
        let k = word.len();
        (0u32..(1 << k)).any(|mask| {
            let sub: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
            sub.len() == v.length() && el(rs, &sub) == *v
        })
    }

    /// Bruhat order as the transitive closure of `v < v·s_β` with length
    /// increase, for every positive root `β`.
    #[allow(clippy::needless_range_loop)]
    fn cover_closure_oracle(rs: &RootSystem, g: &WeylGroup) -> HashMap<(usize, usize), bool> {
        let elems = g.elements();
        let n = elems.len();
        let reflections: Vec<WeylElt> = rs.positive_roots().iter().map(|b| WeylElt::reflection(rs, b)).collect();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
            for r in &reflections {
                let y = elems[i].mul(rs, r);
                if y.length() > elems[i].length() {
                    leq[i][g.index[&y]] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut out = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                out.insert((i, j), leq[i][j]);
            }
        }
        out
    }

    #[test]
    fn group_orders() {
        for (name, rank, order, top) in [
            ("A", 1, 2, 1),
            ("A", 2, 6, 3),
            ("A", 3, 24, 6),
            ("B", 2, 8, 4),
            ("B", 3, 48, 9),
            ("G", 2, 12, 6),
            ("F", 4, 1152, 24),
        ] {
            let rs = RootSystem::build(name, rank).unwrap();
            let g = WeylGroup::new(&rs).unwrap();
            assert_eq!(g.order(), order, "{name}{rank}");
            assert_eq!(g.longest().length(), top);
        }
    }

    #[test]
    fn group_cap() {
        let rs = RootSystem::build("E", 7).unwrap();
        assert_eq!(WeylGroup::new(&rs).unwrap_err(), Error::GroupTooLarge(DEFAULT_GROUP_CAP));
        let rs = RootSystem::build("A", 3).unwrap();
        assert!(WeylGroup::with_cap(&rs, 10).is_err());
    }

    #[test]
    fn lengths_words_and_inversions() {
        for (name, rank) in [("A", 3), ("B", 3), ("G", 2)] {
            let rs = RootSystem::build(name, rank).unwrap();
            let g = WeylGroup::new(&rs).unwrap();
            for w in g.elements() {
                assert_eq!(w.length(), w.inversion_count(&rs));
                assert_eq!(el(&rs, w.word()), *w);
                assert_eq!(w.inverse(&rs).mul(&rs, w), *g.identity());
                for i in 1..=rank {
                    let ws = w.right_mul_simple(&rs, i);
                    assert_eq!(ws.length().abs_diff(w.length()), 1);
                    assert_eq!(ws.length() < w.length(), w.has_right_descent(&rs, i));
                    let sw = w.left_mul_simple(&rs, i);
                    assert_eq!(sw.length() < w.length(), w.has_left_descent(i));
                }
            }
        }
    }

    #[test]
    fn non_reduced_word_rejected() {
        let (rs, _) = g2();
        assert_eq!(WeylElt::from_reduced_word(&rs, &[1, 1]).unwrap_err(), Error::NotReduced(vec![1, 1]));
        assert!(WeylElt::from_reduced_word(&rs, &[1, 2, 1, 2, 1, 2]).is_ok());
        assert!(WeylElt::from_word(&rs, &[3]).is_err());
        // (s1 s2)^6 = 1
        assert!(el(&rs, &[1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]).is_identity());
    }

    #[test]
    fn bruhat_examples() {
        let (rs, g) = g2();
        let w = el(&rs, &[1, 2, 1, 2]);
        assert!(bruhat_leq(&rs, g.identity(), &w));
        assert!(bruhat_leq(&rs, &el(&rs, &[1]), &w));
        assert!(!bruhat_leq(&rs, g.longest(), &el(&rs, &[1])));
        assert!(!bruhat_leq(&rs, &el(&rs, &[2, 1, 2, 1]), &w));
    }

    #[test]
    fn bruhat_matches_oracles() {
        for (name, rank) in [("A", 2), ("A", 3), ("B", 2), ("G", 2), ("B", 3)] {
            let rs = RootSystem::build(name, rank).unwrap();
            let g = WeylGroup::new(&rs).unwrap();
            let closure = cover_closure_oracle(&rs, &g);
            for (i, v) in g.elements().iter().enumerate() {
                for (j, w) in g.elements().iter().enumerate() {
                    let fast = bruhat_leq(&rs, v, w);
                    assert_eq!(fast, closure[&(i, j)], "{name}{rank} {v} <= {w}");
                    if rank <= 2 || w.length() <= 6 {
                        assert_eq!(fast, subword_oracle(&rs, v, w), "{v} <= {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn coset_reps() {
        let (rs, g) = g2();
        let j1: BTreeSet<usize> = [1].into();
        let x = el(&rs, &[2, 1]);
        assert_eq!(coset_min_rep(&rs, &x, &j1), el(&rs, &[2]));
        assert_eq!(coset_max_rep(&rs, &x, &j1), el(&rs, &[2, 1]));
        assert_eq!(coset_min_rep(&rs, g.identity(), &j1), *g.identity());
        assert_eq!(coset_max_rep(&rs, g.identity(), &j1), el(&rs, &[1]));
        assert_eq!(coset_max_rep(&rs, g.longest(), &j1), *g.longest());
        for gens in [BTreeSet::new(), j1.clone(), [2].into(), [1, 2].into()] {
            let sub = ParabolicSubgroup::new(&rs, &gens).unwrap();
            let q = g.quotient(&gens).unwrap();
            assert_eq!(q.cosets.len() * q.subgroup_size, g.order());
            for w in g.elements() {
                let lo = coset_min_rep(&rs, w, &gens);
                let hi = coset_max_rep(&rs, w, &gens);
                assert_eq!(hi, lo.mul(&rs, &sub.longest));
                assert_eq!(hi.length(), lo.length() + sub.longest.length());
                assert!(q.cosets.contains(&lo));
            }
        }
    }

    #[test]
    fn coset_order_examples() {
        let (rs, g) = g2();
        let j1: BTreeSet<usize> = [1].into();
        let s2 = el(&rs, &[2]);
        assert!(coset_bruhat_leq(&rs, g.identity(), &s2, &j1));
        assert!(coset_bruhat_leq(&rs, &s2, &el(&rs, &[1, 2]), &j1));
        assert!(!coset_bruhat_leq(&rs, g.longest(), &s2, &j1));
    }

    #[test]
    fn maximal_lift_table_rows() {
        let (rs, g) = g2();
        let j1: BTreeSet<usize> = [1].into();
        let sub = ParabolicSubgroup::new(&rs, &j1).unwrap();
        let w = el(&rs, &[1, 2, 1, 2]);
        let chain = [el(&rs, &[2, 1, 2]), el(&rs, &[1, 2]), el(&rs, &[2])];
        let lift = maximal_lift(&rs, &chain, &w, &sub).unwrap();
        assert_eq!(lift, vec![el(&rs, &[2, 1, 2]), el(&rs, &[1, 2]), el(&rs, &[2])]);
        assert_eq!(final_direction(&rs, &chain, &w, &sub).unwrap(), el(&rs, &[2]));

        let chain = [el(&rs, &[1, 2, 1, 2]), el(&rs, &[2, 1, 2]), el(&rs, &[1, 2]), el(&rs, &[2])];
        let lift = maximal_lift(&rs, &chain, &w, &sub).unwrap();
        assert_eq!(lift, chain.to_vec());

        let chain = [el(&rs, &[1, 2])];
        let lift = maximal_lift(&rs, &chain, &w, &sub).unwrap();
        assert_eq!(lift, vec![el(&rs, &[1, 2, 1])]);

        let id = g.identity().clone();
        let trivial = ParabolicSubgroup::new(&rs, &BTreeSet::new()).unwrap();
        assert_eq!(maximal_lift(&rs, std::slice::from_ref(&id), &id, &trivial).unwrap(), vec![id.clone()]);

        // a coset above w has no lift
        let chain = [el(&rs, &[2, 1, 2, 1, 2])];
        assert_eq!(maximal_lift(&rs, &chain, &w, &sub).unwrap_err(), Error::NoLift);
    }

    #[test]
    fn reduced_words_of_longest() {
        let (_, g) = g2();
        let words = g.reduced_words(g.longest());
        assert_eq!(words, vec![vec![1, 2, 1, 2, 1, 2], vec![2, 1, 2, 1, 2, 1]]);
        let rs = RootSystem::build("A", 3).unwrap();
        let g = WeylGroup::new(&rs).unwrap();
        assert_eq!(g.reduced_words(g.longest()).len(), 16);
    }
}
