//! Littelmann's path model for a dominant integral weight `λ`.
//!
//! A Lakshmibai-Seshadri path `π = (τ⃗, a⃗)` is stored as a strictly
//! decreasing chain of cosets `τ_1 > … > τ_r` in `W/W_λ` (minimal
//! representatives) together with rational breakpoints `0 = a_0 < … < a_r = 1`.
//! On `[a_{j−1}, a_j]` the path moves in direction `τ_j λ`.
//!
//! The root operators act on the underlying piecewise-linear path; the result
//! is re-encoded by reading off each constant-direction segment and looking
//! its direction up in the orbit `Wλ`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{weyl_dimension, LaurentPoly};
use crate::rootdata::{RootSystem, Weight};
use crate::weyl::{coset_bruhat_leq, stabilizer_set, ParabolicSubgroup, WeylElt};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LSPath {
    shape: Vec<i64>,
    cosets: Vec<WeylElt>,
    breaks: Vec<Rational>,
}

impl LSPath {
    pub fn shape(&self) -> &[i64] {
        &self.shape
    }

    /// Minimal representatives `τ_1 > … > τ_r`.
    pub fn cosets(&self) -> &[WeylElt] {
        &self.cosets
    }

    /// `0 = a_0 < a_1 < … < a_r = 1`.
    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    /// `ι(π) = τ_1`.
    pub fn initial_direction(&self) -> &WeylElt {
        &self.cosets[0]
    }

    fn segments(&self) -> Vec<(Vec<i64>, Rational)> {
        self.cosets
            .iter()
            .zip(self.breaks.windows(2))
            .map(|(tau, ab)| (tau.act_int(&self.shape), ab[1] - ab[0]))
            .collect()
    }

    /// `π(t)`.
    pub fn value_at(&self, t: Rational) -> Weight {
        let n = self.shape.len();
        let mut acc = Weight::zero(n);
        for (dir, ab) in self.segments().into_iter().map(|(d, _)| d).zip(self.breaks.windows(2)) {
            if t <= ab[0] {
                break;
            }
            let dt = if t < ab[1] { t - ab[0] } else { ab[1] - ab[0] };
            acc = acc.add(&Weight::from_ints(&dir).scale(dt));
        }
        acc
    }

    /// `π(1)`, which is integral for LS paths.
    pub fn endpoint(&self) -> Vec<i64> {
        self.value_at(Rational::one()).to_integral().expect("LS path endpoints are integral")
    }

    pub fn to_record(&self) -> PathRecord {
        PathRecord {
            shape: self.shape.clone(),
            cosets: self.cosets.iter().map(|c| c.word().to_vec()).collect(),
            breaks: self.breaks.iter().map(|b| b.to_string()).collect(),
        }
    }
}

/// JSON form of an LS path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub shape: Vec<i64>,
    pub cosets: Vec<Vec<usize>>,
    pub breaks: Vec<String>,
}

/// A piecewise-linear function on `[0, 1]` given by its breakpoints.
#[derive(Clone, Debug, PartialEq)]
struct PiecewiseLinear(Vec<(Rational, Rational)>);

impl PiecewiseLinear {
    fn eval(&self, t: Rational) -> Rational {
        let pts = &self.0;
        for w in pts.windows(2) {
            let ((t0, v0), (t1, v1)) = (w[0], w[1]);
            if t >= t0 && t <= t1 {
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
            }
        }
        pts.last().expect("nonempty").1
    }

    fn min_value(&self) -> Rational {
        self.0.iter().map(|p| p.1).min().expect("nonempty")
    }

    fn times(&self) -> impl Iterator<Item = Rational> + '_ {
        self.0.iter().map(|p| p.0)
    }

    /// `t ↦ min{f(s) : t ≤ s ≤ 1}`.
    fn suffix_min(&self) -> PiecewiseLinear {
        let h = &self.0;
        let n = h.len();
        let mut out = vec![h[n - 1]];
        let mut g = h[n - 1].1;
        for k in (0..n - 1).rev() {
            let ((t0, h0), (t1, h1)) = (h[k], h[k + 1]);
            if h0 < g {
                if h1 != g {
                    out.push((crossing(t0, h0, t1, h1, g), g));
                }
                out.push((t0, h0));
                g = h0;
            } else {
                out.push((t0, g));
            }
        }
        out.reverse();
        PiecewiseLinear(out)
    }

    /// `t ↦ min{f(s) : 0 ≤ s ≤ t}`.
    fn prefix_min(&self) -> PiecewiseLinear {
        let h = &self.0;
        let mut out = vec![h[0]];
        let mut g = h[0].1;
        for k in 0..h.len() - 1 {
            let ((t0, h0), (t1, h1)) = (h[k], h[k + 1]);
            if h1 < g {
                if h0 != g {
                    out.push((crossing(t0, h0, t1, h1, g), g));
                }
                out.push((t1, h1));
                g = h1;
            } else {
                out.push((t1, g));
            }
        }
        PiecewiseLinear(out)
    }

    /// `t ↦ min(f(t) − shift, cap)`.
    fn shifted_capped(&self, shift: Rational, cap: Rational) -> PiecewiseLinear {
        let pts: Vec<(Rational, Rational)> = self.0.iter().map(|&(t, v)| (t, v - shift)).collect();
        let mut out = vec![(pts[0].0, pts[0].1.min(cap))];
        for w in pts.windows(2) {
            let ((t0, v0), (t1, v1)) = (w[0], w[1]);
            if (v0 < cap && v1 > cap) || (v0 > cap && v1 < cap) {
                out.push((crossing(t0, v0, t1, v1, cap), cap));
            }
            out.push((t1, v1.min(cap)));
        }
        PiecewiseLinear(out)
    }
}

/// The `t` in `(t0, t1)` where the segment from `(t0, v0)` to `(t1, v1)`
/// takes the value `level`.
fn crossing(t0: Rational, v0: Rational, t1: Rational, v1: Rational, level: Rational) -> Rational {
    t0 + (level - v0) / (v1 - v0) * (t1 - t0)
}

/// Path model data for a fixed root system and dominant weight.
#[derive(Clone, Debug)]
pub struct PathModel {
    rs: RootSystem,
    lambda: Vec<i64>,
    stabilizer: BTreeSet<usize>,
    parabolic: ParabolicSubgroup,
    /// Orbit weight `σλ` to the minimal representative of `σ W_λ`.
    orbit: HashMap<Vec<i64>, WeylElt>,
}

impl PathModel {
    pub fn new(rs: &RootSystem, lambda: &[i64]) -> Result<Self> {
        if lambda.len() != rs.rank() {
            return Err(Error::RankMismatch { expected: rs.rank(), got: lambda.len() });
        }
        if lambda.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant(lambda.to_vec()));
        }
        let stabilizer = stabilizer_set(lambda);
        let parabolic = ParabolicSubgroup::new(rs, &stabilizer)?;
        // Walking up from the dominant weight, s_i σ stays a minimal coset
        // representative whenever ⟨σλ, α_i∨⟩ > 0.
        let id = WeylElt::identity(rs.rank());
        let mut orbit = HashMap::from([(lambda.to_vec(), id.clone())]);
        let mut queue = VecDeque::from([(lambda.to_vec(), id)]);
        while let Some((mu, sigma)) = queue.pop_front() {
            for i in 1..=rs.rank() {
                if mu[i - 1] > 0 {
                    let nu = rs.reflect_int(i - 1, &mu);
                    if !orbit.contains_key(&nu) {
                        let tau = sigma.left_mul_simple(rs, i);
                        orbit.insert(nu.clone(), tau.clone());
                        queue.push_back((nu, tau));
                    }
                }
            }
        }
        Ok(PathModel { rs: rs.clone(), lambda: lambda.to_vec(), stabilizer, parabolic, orbit })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// `J = {i : ⟨λ, α_i∨⟩ = 0}`.
    pub fn stabilizer(&self) -> &BTreeSet<usize> {
        &self.stabilizer
    }

    pub fn parabolic(&self) -> &ParabolicSubgroup {
        &self.parabolic
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit.len()
    }

    /// The coset `σ W_λ` with `σλ = μ`, if `μ` lies in the orbit.
    pub fn coset_of_direction(&self, mu: &[i64]) -> Option<&WeylElt> {
        self.orbit.get(mu)
    }

    /// `π_λ(t) = tλ`.
    pub fn straight_path(&self) -> LSPath {
        LSPath {
            shape: self.lambda.clone(),
            cosets: vec![WeylElt::identity(self.rs.rank())],
            breaks: vec![Rational::zero(), Rational::one()],
        }
    }

    fn height_function(&self, path: &LSPath, j: usize) -> PiecewiseLinear {
        let mut pts = vec![(Rational::zero(), Rational::zero())];
        let mut t = Rational::zero();
        let mut h = Rational::zero();
        for (dir, dur) in path.segments() {
            t += dur;
            h += dur * dir[j - 1];
            pts.push((t, h));
        }
        PiecewiseLinear(pts)
    }

    /// Rebuilds an LS path from `t ↦ π(t) + sign·d(t)·α_j`.
    fn displace(&self, path: &LSPath, j: usize, d: &PiecewiseLinear, sign: i64) -> Result<LSPath> {
        let alpha = self.rs.simple_root(j);
        let mut times: Vec<Rational> = path.breaks.iter().copied().chain(d.times()).collect();
        times.sort();
        times.dedup();
        let old_segments = path.segments();
        let mut segs: Vec<(Vec<i64>, Rational)> = Vec::new();
        for ab in times.windows(2) {
            let (a, b) = (ab[0], ab[1]);
            let mid = (a + b) / 2;
            let k = path.breaks.windows(2).position(|w| mid > w[0] && mid < w[1]).expect("mid lies in a segment");
            let slope = (d.eval(b) - d.eval(a)) / (b - a) * sign;
            let dir: Vec<i64> = old_segments[k]
                .0
                .iter()
                .zip(&alpha)
                .map(|(x, al)| {
                    let v = Rational::from_integer(*x) + slope * al;
                    if v.is_integer() {
                        Ok(v.to_integer())
                    } else {
                        Err(Error::Internal(format!("non-integral direction after root operator at t={a}")))
                    }
                })
                .collect::<Result<_>>()?;
            match segs.last_mut() {
                Some((last, dur)) if *last == dir => *dur += b - a,
                _ => segs.push((dir, b - a)),
            }
        }
        let mut cosets = Vec::with_capacity(segs.len());
        let mut breaks = vec![Rational::zero()];
        let mut t = Rational::zero();
        for (dir, dur) in segs {
            let tau = self.orbit.get(&dir).ok_or_else(|| {
                Error::Internal(format!("direction {dir:?} is not in the orbit of {:?}", self.lambda))
            })?;
            cosets.push(tau.clone());
            t += dur;
            breaks.push(t);
        }
        Ok(LSPath { shape: self.lambda.clone(), cosets, breaks })
    }

    /// Root operator `f_j`; `None` is the null path.
    pub fn f_op(&self, j: usize, path: &LSPath) -> Result<Option<LSPath>> {
        self.rs.check_index(j)?;
        let h = self.height_function(path, j);
        let m = h.min_value();
        let l = h.suffix_min().shifted_capped(m, Rational::one());
        if l.eval(Rational::one()) != Rational::one() {
            return Ok(None);
        }
        self.displace(path, j, &l, -1).map(Some)
    }

    /// Root operator `e_j`; `None` is the null path.
    pub fn e_op(&self, j: usize, path: &LSPath) -> Result<Option<LSPath>> {
        self.rs.check_index(j)?;
        let h = self.height_function(path, j);
        let m = h.min_value();
        // r(t) = 1 − min(1, prefix_min(h)(t) − m); r(0) = 0 iff m ≤ −1
        let capped = h.prefix_min().shifted_capped(m, Rational::one());
        if capped.eval(Rational::zero()) != Rational::one() {
            return Ok(None);
        }
        let r = PiecewiseLinear(capped.0.iter().map(|&(t, v)| (t, Rational::one() - v)).collect());
        self.displace(path, j, &r, 1).map(Some)
    }

    /// `dim V_λ` from the Weyl dimension formula.
    pub fn dimension(&self) -> usize {
        let d = weyl_dimension(&self.rs, &self.lambda);
        d.to_integer() as usize
    }

    /// `T^λ`: closure of `{π_λ}` under all `f_j`, in breadth-first order.
    pub fn generate(&self) -> Result<Vec<LSPath>> {
        self.generate_with_cap(10 * self.dimension().max(1))
    }

    pub fn generate_with_cap(&self, cap: usize) -> Result<Vec<LSPath>> {
        let start = self.straight_path();
        let mut seen: HashSet<LSPath> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        let mut expansions = 0usize;
        while let Some(p) = queue.pop_front() {
            expansions += 1;
            if expansions > cap {
                return Err(Error::PathCapExceeded(cap));
            }
            for j in 1..=self.rs.rank() {
                if let Some(q) = self.f_op(j, &p)? {
                    if seen.insert(q.clone()) {
                        out.push(q.clone());
                        queue.push_back(q);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Σ_{η ∈ T^λ} e^{η(1)}`.
    pub fn character(&self) -> Result<LaurentPoly> {
        let mut chi = LaurentPoly::zero(self.rs.rank());
        for p in self.generate()? {
            chi.add_term(p.endpoint(), Rational::one());
        }
        Ok(chi)
    }

    /// `S_j(π) = {π, f_j π, …, f_j^m π}` for `π` with `e_j π = 0`.
    pub fn alpha_string(&self, j: usize, path: &LSPath) -> Result<Vec<LSPath>> {
        if self.e_op(j, path)?.is_some() {
            return Err(Error::Precondition(format!("e_{j} does not annihilate the path")));
        }
        let mut out = vec![path.clone()];
        while let Some(next) = self.f_op(j, out.last().unwrap())? {
            out.push(next);
        }
        Ok(out)
    }

    /// Checks the LS-path encoding invariants.
    pub fn is_valid(&self, path: &LSPath) -> bool {
        let b = &path.breaks;
        b.len() == path.cosets.len() + 1
            && b[0].is_zero()
            && b[b.len() - 1].is_one()
            && b.windows(2).all(|w| w[0] < w[1])
            && path.cosets.windows(2).all(|w| {
                w[0] != w[1] && coset_bruhat_leq(&self.rs, &w[1], &w[0], &self.stabilizer)
            })
            && path.value_at(Rational::one()).to_integral().is_some()
    }

    pub fn from_record(&self, rec: &PathRecord) -> Result<LSPath> {
        if rec.shape != self.lambda {
            return Err(Error::Precondition("path shape does not match the model".into()));
        }
        let cosets = rec
            .cosets
            .iter()
            .map(|w| WeylElt::from_word(&self.rs, w))
            .collect::<Result<Vec<_>>>()?;
        let breaks = rec
            .breaks
            .iter()
            .map(|s| s.parse::<Rational>().map_err(|_| Error::Precondition(format!("bad breakpoint {s}"))))
            .collect::<Result<Vec<_>>>()?;
        let path = LSPath { shape: rec.shape.clone(), cosets, breaks };
        if !self.is_valid(&path) {
            return Err(Error::Precondition("record does not encode an LS path".into()));
        }
        Ok(path)
    }

    /// Graphviz rendering of the crystal graph on `T^λ`, edges labelled by
    /// the index `j` of `f_j`.
    pub fn crystal_dot(&self) -> Result<String> {
        let paths = self.generate()?;
        let index: HashMap<&LSPath, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut s = String::from("digraph crystal {\n");
        for (i, p) in paths.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{:?}\"];", p.endpoint());
        }
        for (i, p) in paths.iter().enumerate() {
            for j in 1..=self.rs.rank() {
                if let Some(q) = self.f_op(j, p)? {
                    let _ = writeln!(s, "  n{i} -> n{} [label=\"{j}\"];", index[&q]);
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn piecewise_minima() {
        let h = PiecewiseLinear(vec![(q(0), q(0)), (Rational::new(1, 2), q(-2)), (q(1), q(1))]);
        let suf = h.suffix_min();
        assert_eq!(suf.eval(q(0)), q(-2));
        assert_eq!(suf.eval(Rational::new(3, 4)), Rational::new(-1, 2));
        assert_eq!(suf.eval(q(1)), q(1));
        let pre = h.prefix_min();
        assert_eq!(pre.eval(Rational::new(1, 4)), q(-1));
        assert_eq!(pre.eval(q(1)), q(-2));
        let capped = suf.shifted_capped(q(-2), q(1));
        assert_eq!(capped.eval(Rational::new(1, 2)), q(0));
        assert_eq!(capped.eval(Rational::new(2, 3)), q(1));
        assert_eq!(capped.eval(q(1)), q(1));
    }

    #[test]
    fn a1_fundamental() {
        let rs = RootSystem::build("A", 1).unwrap();
        let pm = PathModel::new(&rs, &[1]).unwrap();
        let pi = pm.straight_path();
        assert_eq!(pi.endpoint(), vec![1]);
        assert!(pm.e_op(1, &pi).unwrap().is_none());
        let f = pm.f_op(1, &pi).unwrap().unwrap();
        assert_eq!(f.cosets(), &[WeylElt::from_word(&rs, &[1]).unwrap()]);
        assert_eq!(f.endpoint(), vec![-1]);
        assert!(pm.f_op(1, &f).unwrap().is_none());
        assert_eq!(pm.e_op(1, &f).unwrap().unwrap(), pi);
        assert_eq!(pm.generate().unwrap().len(), 2);
        let chi = pm.character().unwrap();
        assert_eq!(chi, &LaurentPoly::monomial(vec![1]) + &LaurentPoly::monomial(vec![-1]));
    }

    #[test]
    fn zero_weight() {
        let rs = RootSystem::build("B", 2).unwrap();
        let pm = PathModel::new(&rs, &[0, 0]).unwrap();
        assert_eq!(pm.straight_path().endpoint(), vec![0, 0]);
        assert_eq!(pm.generate().unwrap(), vec![pm.straight_path()]);
        assert_eq!(pm.character().unwrap(), LaurentPoly::one(2));
    }

    #[test]
    fn g2_adjoint() {
        let rs = RootSystem::build("G", 2).unwrap();
        let pm = PathModel::new(&rs, &[0, 1]).unwrap();
        assert_eq!(pm.straight_path().endpoint(), vec![0, 1]);
        let paths = pm.generate().unwrap();
        assert_eq!(paths.len(), 14);
        assert_eq!(paths.iter().filter(|p| p.endpoint() == vec![0, 0]).count(), 2);
        for p in &paths {
            assert!(pm.is_valid(p), "{p:?}");
        }
        // f_1 f_2 π_{ω_2} runs along s_1 s_2 ω_2 up to t = 1/3, then s_2 ω_2
        let p = pm.f_op(2, &pm.straight_path()).unwrap().unwrap();
        let p = pm.f_op(1, &p).unwrap().unwrap();
        let el = |w: &[usize]| WeylElt::from_word(&rs, w).unwrap();
        assert_eq!(p.cosets(), &[el(&[1, 2]), el(&[2])]);
        assert_eq!(p.breaks(), &[q(0), Rational::new(1, 3), q(1)]);
        let a1 = rs.simple_root(1);
        let s2w2 = rs.reflect_int(1, &[0, 1]);
        assert_eq!(p.endpoint(), vec![s2w2[0] - a1[0], s2w2[1] - a1[1]]);
        // α_1-string through π_{ω_2} is trivial
        assert_eq!(pm.alpha_string(1, &pm.straight_path()).unwrap().len(), 1);
        assert!(pm.alpha_string(1, &p).is_err());
    }

    #[test]
    fn e_inverts_f() {
        for (name, rank, lambda) in [("A", 2, vec![1, 1]), ("B", 2, vec![1, 1]), ("G", 2, vec![1, 1]), ("C", 3, vec![0, 1, 1])] {
            let rs = RootSystem::build(name, rank).unwrap();
            let pm = PathModel::new(&rs, &lambda).unwrap();
            let paths = pm.generate().unwrap();
            assert_eq!(paths.len(), pm.dimension());
            for p in &paths {
                assert!(pm.is_valid(p));
                for j in 1..=rank {
                    if let Some(f) = pm.f_op(j, p).unwrap() {
                        assert_eq!(pm.e_op(j, &f).unwrap().as_ref(), Some(p));
                    }
                    if let Some(e) = pm.e_op(j, p).unwrap() {
                        assert_eq!(pm.f_op(j, &e).unwrap().as_ref(), Some(p));
                    }
                }
            }
        }
    }

    #[test]
    fn straight_path_is_highest() {
        let rs = RootSystem::build("A", 3).unwrap();
        let pm = PathModel::new(&rs, &[1, 0, 2]).unwrap();
        for j in 1..=3 {
            assert!(pm.e_op(j, &pm.straight_path()).unwrap().is_none());
        }
    }

    #[test]
    fn records_round_trip() {
        let rs = RootSystem::build("G", 2).unwrap();
        let pm = PathModel::new(&rs, &[0, 1]).unwrap();
        for p in pm.generate().unwrap() {
            let json = serde_json::to_string(&p.to_record()).unwrap();
            let rec: PathRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(pm.from_record(&rec).unwrap(), p);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let rs = RootSystem::build("A", 2).unwrap();
        assert!(PathModel::new(&rs, &[1, -1]).is_err());
        assert!(PathModel::new(&rs, &[1]).is_err());
        let pm = PathModel::new(&rs, &[1, 1]).unwrap();
        assert!(pm.generate_with_cap(2).is_err());
    }

    #[test]
    fn dot_output() {
        let rs = RootSystem::build("A", 1).unwrap();
        let pm = PathModel::new(&rs, &[1]).unwrap();
        let dot = pm.crystal_dot().unwrap();
        assert!(dot.contains("n0 -> n1 [label=\"1\"]"));
    }
}
