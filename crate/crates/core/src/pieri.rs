//! The Pieri-Chevalley expansion of `e^λ·[O_{X_w}]` in K-theory.
//!
//! For a dominant integral `λ` and `w ∈ W`, the restricted path set is
//! `T^λ_w = {π ∈ T^λ : ι(π) ≤ wW_λ}` and
//!
//! ```text
//! e^λ [O_{X_w}] = Σ_{η ∈ T^λ_w} [O_{X_{v(η,w)}}]
//! ```
//!
//! where `v(η, w)` is the final direction of `η` with respect to `w`. The
//! expansion is certified through the ring-level operator identity
//! `e^λ T_{w⁻¹} = Σ_η T_{v(η,w)⁻¹} e^{η(1)}`, checked exactly on probes.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{demazure_t_elt, LaurentPoly};
use crate::lspath::{LSPath, PathModel};
use crate::rootdata::{CartanType, RootSystem};
use crate::weyl::{bruhat_leq, coset_bruhat_leq, coset_max_rep, maximal_lift, WeylElt};
use crate::Rational;

/// One row of the path table: a path in `T^λ_w` with its lift data.
#[derive(Clone, Debug)]
pub struct PathRow {
    pub path: LSPath,
    pub endpoint: Vec<i64>,
    pub lift: Vec<WeylElt>,
    pub initial: WeylElt,
    pub final_direction: WeylElt,
}

/// `T^λ_w` as a filter of a precomputed `T^λ`.
pub fn restrict_paths(pm: &PathModel, all: &[LSPath], w: &WeylElt) -> Vec<LSPath> {
    let rs = pm.root_system();
    all.iter()
        .filter(|p| coset_bruhat_leq(rs, p.initial_direction(), w, pm.stabilizer()))
        .cloned()
        .collect()
}

pub fn restricted_paths(pm: &PathModel, w: &WeylElt) -> Result<Vec<LSPath>> {
    Ok(restrict_paths(pm, &pm.generate()?, w))
}

/// `v(π, w)` for a path of the model.
pub fn final_direction_of(pm: &PathModel, path: &LSPath, w: &WeylElt) -> Result<WeylElt> {
    let lift = maximal_lift(pm.root_system(), path.cosets(), w, pm.parabolic())?;
    Ok(lift.last().expect("paths have at least one segment").clone())
}

pub fn path_rows(pm: &PathModel, restricted: &[LSPath], w: &WeylElt) -> Result<Vec<PathRow>> {
    let rs = pm.root_system();
    restricted
        .iter()
        .map(|p| {
            let lift = maximal_lift(rs, p.cosets(), w, pm.parabolic()).map_err(|e| match e {
                Error::NoLift => Error::Internal(format!("path with initial direction {} has no lift", p.initial_direction())),
                other => other,
            })?;
            Ok(PathRow {
                path: p.clone(),
                endpoint: p.endpoint(),
                final_direction: lift.last().unwrap().clone(),
                initial: p.initial_direction().clone(),
                lift,
            })
        })
        .collect()
}

/// Multiplicities `c_v` of `e^λ [O_{X_w}] = Σ c_v [O_{X_v}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub cartan_type: CartanType,
    pub lambda: Vec<i64>,
    pub w: WeylElt,
    pub path_count: usize,
    pub coeffs: BTreeMap<WeylElt, u64>,
}

impl Expansion {
    pub fn coeff(&self, v: &WeylElt) -> u64 {
        self.coeffs.get(v).copied().unwrap_or(0)
    }

    /// Checks `Σ c_v = |T^λ_w|`, `v ≤ w` for every key, and `c_w ≥ 1`.
    pub fn check_invariants(&self, rs: &RootSystem) -> Result<()> {
        let total: u64 = self.coeffs.values().sum();
        if total != self.path_count as u64 {
            return Err(Error::Internal(format!("multiplicities sum to {total}, expected {}", self.path_count)));
        }
        if let Some(v) = self.coeffs.keys().find(|v| !bruhat_leq(rs, v, &self.w)) {
            return Err(Error::Internal(format!("{v} is not below {}", self.w)));
        }
        if self.coeff(&self.w) < 1 {
            return Err(Error::Internal(format!("top class {} is missing", self.w)));
        }
        Ok(())
    }

    pub fn to_record(&self, rs: &RootSystem) -> ExpansionRecord {
        ExpansionRecord {
            cartan_type: self.cartan_type.to_string(),
            rank: self.cartan_type.rank,
            lambda: self.lambda.clone(),
            word: self.w.word().to_vec(),
            paths: self.path_count,
            coeffs: self
                .coeffs
                .iter()
                .map(|(v, &mult)| CoeffRecord {
                    v_word: v.word().to_vec(),
                    v_inv_word: v.inverse(rs).word().to_vec(),
                    mult,
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &ExpansionRecord) -> Result<Expansion> {
        let cartan_type = CartanType::parse(&rec.cartan_type, Some(rec.rank))?;
        let rs = RootSystem::new(cartan_type);
        let w = WeylElt::from_reduced_word(&rs, &rec.word)?;
        let coeffs = rec
            .coeffs
            .iter()
            .map(|c| Ok((WeylElt::from_reduced_word(&rs, &c.v_word)?, c.mult)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Expansion { cartan_type, lambda: rec.lambda.clone(), w, path_count: rec.paths, coeffs })
    }
}

/// JSON form of an [`Expansion`], ordered by length then word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub word: Vec<usize>,
    pub paths: usize,
    pub coeffs: Vec<CoeffRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub v_word: Vec<usize>,
    #[serde(default)]
    pub v_inv_word: Vec<usize>,
    pub mult: u64,
}

pub fn expansion_from_rows(pm: &PathModel, w: &WeylElt, rows: &[PathRow]) -> Expansion {
    let mut coeffs = BTreeMap::new();
    for row in rows {
        *coeffs.entry(row.final_direction.clone()).or_insert(0) += 1;
    }
    Expansion {
        cartan_type: pm.root_system().cartan_type(),
        lambda: pm.lambda().to_vec(),
        w: w.clone(),
        path_count: rows.len(),
        coeffs,
    }
}

/// Computes `e^λ [O_{X_w}]` in the Schubert basis.
pub fn expand(pm: &PathModel, w: &WeylElt) -> Result<Expansion> {
    let restricted = restricted_paths(pm, w)?;
    let rows = path_rows(pm, &restricted, w)?;
    Ok(expansion_from_rows(pm, w, &rows))
}

/// Probe monomials `e^μ` for `μ` in the box `{−2,…,2}^n`, plus `extra`
/// random monomials with coordinates in `{−4,…,4}` drawn from `seed`.
pub fn default_probes(rank: usize, extra: usize, seed: u64) -> Vec<LaurentPoly> {
    let mut probes = Vec::new();
    let mut mu = vec![-2i64; rank];
    loop {
        probes.push(LaurentPoly::monomial(mu.clone()));
        let mut k = 0;
        while k < rank && mu[k] == 2 {
            mu[k] = -2;
            k += 1;
        }
        if k == rank {
            break;
        }
        mu[k] += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        probes.push(LaurentPoly::monomial((0..rank).map(|_| rng.gen_range(-4..=4)).collect()));
    }
    probes
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub holds: bool,
    pub probes_checked: usize,
    /// First failing probe with the left and right sides.
    pub mismatch: Option<(LaurentPoly, LaurentPoly, LaurentPoly)>,
}

/// Checks `e^λ T_{w⁻¹}(x) = Σ_{η ∈ T^λ_w} T_{v(η,w)⁻¹}(e^{η(1)} x)` exactly
/// on every probe `x`.
pub fn verify_operator_identity(
    pm: &PathModel,
    w: &WeylElt,
    rows: &[PathRow],
    probes: &[LaurentPoly],
) -> IdentityReport {
    let rs = pm.root_system();
    let w_inv = w.inverse(rs);
    // Group paths by final direction: Σ_v T_{v⁻¹}(P_v · x).
    let mut grouped: BTreeMap<WeylElt, LaurentPoly> = BTreeMap::new();
    for row in rows {
        grouped
            .entry(row.final_direction.inverse(rs))
            .or_insert_with(|| LaurentPoly::zero(rs.rank()))
            .add_term(row.endpoint.clone(), Rational::from_integer(1));
    }
    for (k, x) in probes.iter().enumerate() {
        let lhs = demazure_t_elt(rs, &w_inv, x).shift(pm.lambda());
        let mut rhs = LaurentPoly::zero(rs.rank());
        for (v_inv, weights) in &grouped {
            rhs.add_assign(&demazure_t_elt(rs, v_inv, &(weights * x)));
        }
        if lhs != rhs {
            return IdentityReport { holds: false, probes_checked: k + 1, mismatch: Some((x.clone(), lhs, rhs)) };
        }
    }
    IdentityReport { holds: true, probes_checked: probes.len(), mismatch: None }
}

/// The positive root `β` with `v = w·s_β`, if any.
pub fn reflection_root_between(rs: &RootSystem, v: &WeylElt, w: &WeylElt) -> Result<Option<usize>> {
    let hits: Vec<usize> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, b)| w.mul(rs, &WeylElt::reflection(rs, b)) == *v)
        .map(|(i, _)| i)
        .collect();
    match hits.len() {
        0 => Ok(None),
        1 => Ok(Some(hits[0])),
        _ => Err(Error::Internal(format!("several reflections relate {v} and {w}"))),
    }
}

#[derive(Clone, Debug)]
pub struct ChevalleyReport {
    pub holds: bool,
    /// `(v, root index, expected ⟨λ, β∨⟩, observed c_v)` for every
    /// codimension-one element below `w` related to it by a reflection.
    pub covers: Vec<(WeylElt, usize, i64, u64)>,
    pub diagnostics: Vec<String>,
}

/// Compares the length-`(ℓ(w)−1)` layer of the expansion with Chevalley's
/// pairings `⟨λ, β∨⟩` for `v = w s_β`.
pub fn chevalley_cross_check(rs: &RootSystem, expansion: &Expansion, group_elements: &[WeylElt]) -> Result<ChevalleyReport> {
    let w = &expansion.w;
    let mut covers = Vec::new();
    let mut diagnostics = Vec::new();
    let mut seen = BTreeSet::new();
    if w.length() > 0 {
        for v in group_elements.iter().filter(|v| v.length() + 1 == w.length()) {
            if let Some(idx) = reflection_root_between(rs, v, w)? {
                let expected = rs.positive_roots()[idx].pair_coroot(&expansion.lambda);
                let observed = expansion.coeff(v);
                if observed as i64 != expected {
                    diagnostics.push(format!("c_{v} = {observed}, Chevalley pairing gives {expected}"));
                }
                seen.insert(v.clone());
                covers.push((v.clone(), idx, expected, observed));
            }
        }
    }
    for (v, c) in &expansion.coeffs {
        if v.length() + 1 == w.length() && !seen.contains(v) {
            diagnostics.push(format!("c_{v} = {c} but {v} is not a reflection cover of {w}"));
        }
    }
    Ok(ChevalleyReport { holds: diagnostics.is_empty(), covers, diagnostics })
}

/// Pullback of a Schubert class along `G/B → G/P`: the longest element of
/// the coset.
pub fn parabolic_pullback(rs: &RootSystem, coset: &WeylElt, gens: &BTreeSet<usize>) -> WeylElt {
    coset_max_rep(rs, coset, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylGroup;

    fn el(rs: &RootSystem, w: &[usize]) -> WeylElt {
        WeylElt::from_word(rs, w).unwrap()
    }

    #[test]
    fn a1_expansion() {
        let rs = RootSystem::build("A", 1).unwrap();
        let pm = PathModel::new(&rs, &[1]).unwrap();
        let s1 = el(&rs, &[1]);
        let e = expand(&pm, &s1).unwrap();
        assert_eq!(e.path_count, 2);
        assert_eq!(e.coeffs, BTreeMap::from([(el(&rs, &[]), 1), (s1.clone(), 1)]));
        e.check_invariants(&rs).unwrap();

        let rows = path_rows(&pm, &restricted_paths(&pm, &s1).unwrap(), &s1).unwrap();
        let probes = vec![LaurentPoly::one(1), LaurentPoly::monomial(vec![1])];
        let report = verify_operator_identity(&pm, &s1, &rows, &probes);
        assert!(report.holds);
        // x = 1 gives e^{ω1} on both sides
        let lhs = demazure_t_elt(&rs, &s1, &LaurentPoly::one(1)).shift(&[1]);
        assert_eq!(lhs, LaurentPoly::monomial(vec![1]));

        let g = WeylGroup::new(&rs).unwrap();
        let ch = chevalley_cross_check(&rs, &e, g.elements()).unwrap();
        assert!(ch.holds);
        assert_eq!(ch.covers.len(), 1);
        assert_eq!(ch.covers[0].2, 1);
    }

    #[test]
    fn identity_element_absorbs() {
        let rs = RootSystem::build("B", 2).unwrap();
        for lambda in [[1, 0], [0, 1], [2, 1]] {
            let pm = PathModel::new(&rs, &lambda).unwrap();
            let id = el(&rs, &[]);
            let e = expand(&pm, &id).unwrap();
            assert_eq!(e.coeffs, BTreeMap::from([(id.clone(), 1)]));
        }
    }

    #[test]
    fn g2_expansion_and_identity() {
        let rs = RootSystem::build("G", 2).unwrap();
        let pm = PathModel::new(&rs, &[0, 1]).unwrap();
        let w = el(&rs, &[1, 2, 1, 2]);
        let restricted = restricted_paths(&pm, &w).unwrap();
        assert_eq!(restricted.len(), 13);
        let rows = path_rows(&pm, &restricted, &w).unwrap();
        let e = expansion_from_rows(&pm, &w, &rows);
        let expected: BTreeMap<WeylElt, u64> = [
            (vec![1, 2, 1, 2], 1),
            (vec![1, 2, 1], 1),
            (vec![2, 1, 2], 3),
            (vec![2, 1], 3),
            (vec![1, 2], 2),
            (vec![2], 2),
            (vec![1], 1),
        ]
        .into_iter()
        .map(|(wd, c)| (el(&rs, &wd), c))
        .collect();
        assert_eq!(e.coeffs, expected);
        let report = verify_operator_identity(&pm, &w, &rows, &default_probes(2, 10, 3));
        assert!(report.holds, "{:?}", report.mismatch);
    }

    #[test]
    fn chevalley_side_convention() {
        // v = w s_β is the convention that matches the expansion; the left
        // version v = s_β w would pair s_2 s_1 s_2 with α_1 and give 0.
        let rs = RootSystem::build("G", 2).unwrap();
        let w = el(&rs, &[1, 2, 1, 2]);
        let v = el(&rs, &[2, 1, 2]);
        let idx = reflection_root_between(&rs, &v, &w).unwrap().unwrap();
        assert_eq!(rs.positive_roots()[idx].pair_coroot(&[0, 1]), 3);
        let left = rs
            .positive_roots()
            .iter()
            .find(|b| WeylElt::reflection(&rs, b).mul(&rs, &w) == v)
            .unwrap();
        assert_eq!(left.pair_coroot(&[0, 1]), 0);
    }

    #[test]
    fn pullback_examples() {
        let rs = RootSystem::build("G", 2).unwrap();
        let j1: BTreeSet<usize> = [1].into();
        assert_eq!(parabolic_pullback(&rs, &el(&rs, &[2]), &j1), el(&rs, &[2, 1]));
        assert_eq!(parabolic_pullback(&rs, &el(&rs, &[]), &j1), el(&rs, &[1]));
        let w0 = el(&rs, &[1, 2, 1, 2, 1, 2]);
        assert_eq!(parabolic_pullback(&rs, &w0, &j1), w0);
    }

    #[test]
    fn record_round_trip() {
        let rs = RootSystem::build("G", 2).unwrap();
        let pm = PathModel::new(&rs, &[0, 1]).unwrap();
        let e = expand(&pm, &el(&rs, &[1, 2, 1, 2])).unwrap();
        let rec = e.to_record(&rs);
        let json = serde_json::to_string(&rec).unwrap();
        let back: ExpansionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Expansion::from_record(&back).unwrap(), e);
        assert_eq!(rec.coeffs[0].v_word, vec![1]);
        assert_eq!(rec.coeffs.last().unwrap().v_word, vec![1, 2, 1, 2]);
        assert_eq!(rec.coeffs.last().unwrap().v_inv_word, vec![2, 1, 2, 1]);
    }

    #[test]
    fn probe_box() {
        let p = default_probes(2, 3, 0);
        assert_eq!(p.len(), 25 + 3);
        assert_eq!(p[0], LaurentPoly::monomial(vec![-2, -2]));
    }
}
