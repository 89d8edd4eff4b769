//! Solver-versus-oracle sweeps over a deterministic grid of equations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::checked_pow;
use crate::error::{Error, Result};
use crate::field::{make_field, FieldCtx, FieldParams, DEFAULT_ENUM_CAP};
use crate::oracle::{brute_count, q_associate_direct};
use crate::poly::{self, FqPoly};
use crate::solver::{big_h, count_solutions, solve_one, EquationSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridPreset {
    /// q ∈ {2, 3, 4, 5}, k ≤ 3, d_i ≤ 4.
    Small,
    /// q ∈ {2, 3}, k ≤ 2, d_i ≤ 3; a quick smoke grid.
    Tiny,
    Empty,
}

impl FromStr for GridPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Self::Small),
            "tiny" => Ok(Self::Tiny),
            "empty" => Ok(Self::Empty),
            other => Err(Error::Parse(format!("unknown grid '{other}' (expected small, tiny or empty)"))),
        }
    }
}

impl fmt::Display for GridPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Small => "small",
            Self::Tiny => "tiny",
            Self::Empty => "empty",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridConfig {
    /// Coefficient fields as `(p, s)`.
    pub fields: Vec<(u64, u32)>,
    pub k_values: Vec<usize>,
    pub max_degree: usize,
    /// Random right-hand sides per equation, besides `b = 0`.
    pub random_b: usize,
    pub seed: u64,
    pub enum_cap: u64,
    /// Adds one to every formula exponent; exists to prove the harness can fail.
    pub corrupt: bool,
}

impl GridConfig {
    pub fn preset(preset: GridPreset, seed: u64) -> Self {
        let (fields, k_values, max_degree, random_b) = match preset {
            GridPreset::Small => (vec![(2, 1), (3, 1), (2, 2), (5, 1)], vec![1, 2, 3], 4, 3),
            GridPreset::Tiny => (vec![(2, 1), (3, 1)], vec![1, 2], 3, 1),
            GridPreset::Empty => (vec![], vec![], 0, 0),
        };
        Self { fields, k_values, max_degree, random_b, seed, enum_cap: DEFAULT_ENUM_CAP, corrupt: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub index: usize,
    pub q: u32,
    pub dims: Vec<usize>,
    pub f: Vec<String>,
    pub b: String,
    pub b_degree: usize,
    pub ell: usize,
    pub solvable: bool,
    pub exponent: Option<u64>,
    #[serde(rename = "H_degree")]
    pub h_degree: usize,
    /// `deg H` at ℓ, 2ℓ, 3ℓ.
    pub h_degree_multiples: Vec<usize>,
    pub ell_independent: bool,
    pub solution_verified: bool,
    /// Brute-force count; absent when the case was skipped.
    pub count: Option<u64>,
    pub formula_count: Option<u64>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub p: u32,
    pub s: u32,
    pub ell: usize,
    pub base_modulus: String,
    pub ext_modulus: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub fields: Vec<FieldInfo>,
    pub cases: Vec<CaseReport>,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
    pub all_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

struct GridCase {
    field: usize,
    ell: usize,
    spec: EquationSpec,
}

/// Nondecreasing tuples of length `k` over `1..=max`.
fn degree_tuples(k: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, lo: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for d in lo..=max {
            cur.push(d);
            rec(k, d, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 1, max, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Runs the whole grid. Output depends only on `config`.
pub fn run_grid(config: &GridConfig) -> Result<VerifySummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut contexts: BTreeMap<(usize, usize), FieldCtx> = BTreeMap::new();
    let mut cases = Vec::new();

    for (fi, &(p, s)) in config.fields.iter().enumerate() {
        for &k in &config.k_values {
            for dims in degree_tuples(k, config.max_degree) {
                for mode in 0..3 {
                    let f_list: Vec<FqPoly> = (0..k)
                        .map(|_| match mode {
                            0 => FqPoly::one(),
                            1 => FqPoly::x(),
                            _ => loop {
                                let q = checked_pow(p, u64::from(s)).expect("grid fields are tiny") as u32;
                                let f = FqPoly::from_coeffs((0..4).map(|_| rng.gen_range(0..q)).collect());
                                if !f.is_zero() {
                                    break f;
                                }
                            },
                        })
                        .collect();
                    let mut rhs = vec![None];
                    rhs.extend((0..config.random_b).map(|_| Some(rng.gen_range(1..=config.max_degree))));
                    for m in rhs {
                        let b_degree = m.unwrap_or(1);
                        let ell = crate::arith::lcm_all(dims.iter().chain([&b_degree]).map(|&d| d as u64)) as usize;
                        let ctx = match contexts.entry((fi, ell)) {
                            std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                            std::collections::btree_map::Entry::Vacant(e) => e.insert(make_field(
                                &FieldParams::new(p, s, ell).seed(config.seed).enum_cap(config.enum_cap),
                            )?),
                        };
                        let b = match m {
                            None => ctx.zero(),
                            Some(m) => ctx.random_subfield_element(m, &mut rng)?,
                        };
                        let spec = EquationSpec::new(f_list.clone(), dims.clone(), b, b_degree)?;
                        cases.push(GridCase { field: fi, ell, spec });
                    }
                }
            }
        }
    }

    let reports = cases
        .par_iter()
        .enumerate()
        .map(|(index, case)| run_case(index, &contexts[&(case.field, case.ell)], &case.spec, config))
        .collect::<Result<Vec<_>>>()?;

    let count_status = |s: CaseStatus| reports.iter().filter(|r| r.status == s).count();
    let (matched, mismatched, skipped) =
        (count_status(CaseStatus::Match), count_status(CaseStatus::Mismatch), count_status(CaseStatus::Skipped));
    let fields = contexts
        .iter()
        .map(|(&(_, ell), ctx)| FieldInfo {
            p: ctx.order().p,
            s: ctx.order().s,
            ell,
            base_modulus: poly::format(ctx.base_modulus()),
            ext_modulus: poly::format(ctx.ext_modulus()),
        })
        .collect();
    Ok(VerifySummary {
        seed: config.seed,
        fields,
        matched,
        mismatched,
        skipped,
        all_match: mismatched == 0,
        warning: reports.is_empty().then(|| "empty grid: nothing was checked".to_string()),
        cases: reports,
    })
}

fn run_case(index: usize, ctx: &FieldCtx, spec: &EquationSpec, config: &GridConfig) -> Result<CaseReport> {
    let k = ctx.base();
    let q = ctx.q();
    let result = count_solutions(ctx, spec)?;
    let ell = result.ell_used;
    let h_degree_multiples = (1..=3)
        .map(|c| Ok(big_h(k, &spec.f_list, &spec.d_list, c * ell)?.degree().expect("H is nonzero")))
        .collect::<Result<Vec<_>>>()?;
    let ell_independent = h_degree_multiples.iter().all(|&d| d == result.h_degree);

    let exponent = result.exponent.map(|e| if config.corrupt { e + 1 } else { e });
    let formula_count = match exponent {
        Some(e) => checked_pow(u64::from(q), e),
        None => Some(0),
    };

    let solution_verified = match solve_one(ctx, spec) {
        Ok(z) => {
            let mut sum = ctx.zero();
            let mut inside = true;
            for ((f, zi), &d) in spec.f_list.iter().zip(&z).zip(&spec.d_list) {
                inside &= ctx.in_subfield(zi, d)?;
                ctx.add_assign(&mut sum, &q_associate_direct(ctx, f, zi));
            }
            result.solvable && inside && sum == spec.b
        }
        Err(Error::NoSolution) => !result.solvable,
        Err(e) => return Err(e),
    };

    let (count, note) = match brute_count(ctx, spec, config.enum_cap) {
        Ok(report) => (Some(report.count), None),
        Err(Error::EnumerationCapExceeded { needed, cap }) => {
            (None, Some(format!("skipped: {needed} tuples exceed cap {cap}")))
        }
        Err(e) => return Err(e),
    };
    let formula_ok = ell_independent && solution_verified;
    let (matched, status) = match count {
        Some(c) if formula_ok && formula_count == Some(c) => (true, CaseStatus::Match),
        Some(_) => (false, CaseStatus::Mismatch),
        None if formula_ok => (true, CaseStatus::Skipped),
        None => (false, CaseStatus::Mismatch),
    };
    Ok(CaseReport {
        index,
        q,
        dims: spec.d_list.clone(),
        f: spec.f_list.iter().map(poly::format).collect(),
        b: ctx.format_elem(&spec.b),
        b_degree: spec.b_degree,
        ell,
        solvable: result.solvable,
        exponent,
        h_degree: result.h_degree,
        h_degree_multiples,
        ell_independent,
        solution_verified,
        count,
        formula_count,
        matched,
        status,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples() {
        assert_eq!(degree_tuples(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(degree_tuples(3, 4).len(), 20);
    }

    #[test]
    fn tiny_grid_matches() {
        let summary = run_grid(&GridConfig::preset(GridPreset::Tiny, 7)).unwrap();
        assert!(summary.all_match);
        assert_eq!(summary.mismatched, 0);
        assert!(summary.matched > 50);
    }

    #[test]
    fn corruption_is_detected() {
        let mut config = GridConfig::preset(GridPreset::Tiny, 7);
        config.corrupt = true;
        let summary = run_grid(&config).unwrap();
        assert!(!summary.all_match);
    }

    #[test]
    fn empty_grid_is_vacuous() {
        let summary = run_grid(&GridConfig::preset(GridPreset::Empty, 0)).unwrap();
        assert!(summary.all_match);
        assert!(summary.cases.is_empty());
        assert!(summary.warning.is_some());
    }
}
