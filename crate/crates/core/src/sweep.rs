//! Family sweeps comparing closed form, oracle and construction, and seeded
//! spec generation.
//!
//! Random choices come from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha
//! 0.3) through `rand 0.8` `gen_range`, so a seed fixes the output.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caterpillar::{build_graph, classify, CaterpillarSpec, ClassLabel};
use crate::closed_form::lambda;
use crate::construct::construct;
use crate::error::{Error, Result};
use crate::oracle::{min_augmentation, Mode, Target};

pub const CSV_HEADER: &str = "spec;class;formula;oracle;construction;agree";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Regular1,
    Regular2,
    RegularK,
    AtLeast3,
    Zero2,
    Deserted,
    Random,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "regular1" => Family::Regular1,
            "regular2" => Family::Regular2,
            "regularK" | "regulark" => Family::RegularK,
            "atleast3" => Family::AtLeast3,
            "zero2" => Family::Zero2,
            "deserted" => Family::Deserted,
            "random" => Family::Random,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    /// Leaves per spine vertex for [`Family::RegularK`].
    pub k: usize,
    /// Largest leaf count used by enumerated and random families.
    pub l_max: usize,
    /// Number of specs for [`Family::Random`].
    pub count: usize,
    pub seed: u64,
    pub oracle: bool,
    pub oracle_max_vertices: usize,
    pub budget: usize,
    pub mode: Mode,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            family: Family::Regular1,
            n_min: 1,
            n_max: 4,
            k: 3,
            l_max: 4,
            count: 20,
            seed: 1,
            oracle: true,
            oracle_max_vertices: 12,
            budget: 8,
            mode: Mode::Serial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleCell {
    Value(usize),
    Skipped,
    OverBudget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub spec: CaterpillarSpec,
    pub class: ClassLabel,
    pub formula: Option<usize>,
    pub oracle: OracleCell,
    pub construction: Option<usize>,
    /// All populated values are equal.
    pub agree: bool,
}

impl fmt::Display for SweepRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let formula = self.formula.map_or("Unsupported".to_string(), |v| v.to_string());
        let oracle = match self.oracle {
            OracleCell::Value(v) => v.to_string(),
            OracleCell::Skipped => "SKIPPED".to_string(),
            OracleCell::OverBudget => "OVER_BUDGET".to_string(),
        };
        let construction = self.construction.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "{};{};{};{};{};{}",
            self.spec, self.class, formula, oracle, construction, self.agree
        )
    }
}

/// Evaluates one spec. Specs with fewer than 3 vertices yield `None`.
pub fn sweep_row(spec: &CaterpillarSpec, cfg: &SweepConfig) -> Option<SweepRow> {
    if spec.vertex_count() < 3 {
        return None;
    }
    let class = classify(spec);
    let formula = lambda(spec).ok().map(|r| r.value);
    let construction = construct(spec).ok().map(|p| p.size());
    let oracle = if cfg.oracle && spec.vertex_count() <= cfg.oracle_max_vertices {
        let (g, _) = build_graph(spec);
        match min_augmentation(&g, cfg.budget, Target::Cycle, cfg.mode) {
            Ok(r) => OracleCell::Value(r.minimum),
            Err(_) => OracleCell::OverBudget,
        }
    } else {
        OracleCell::Skipped
    };
    let mut values: Vec<usize> = formula.into_iter().chain(construction).collect();
    if let OracleCell::Value(v) = oracle {
        values.push(v);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    Some(SweepRow {
        spec: spec.clone(),
        class,
        formula,
        oracle,
        construction,
        agree,
    })
}

/// The specs a family sweep visits, in output order.
pub fn family_specs(cfg: &SweepConfig) -> Result<Vec<CaterpillarSpec>> {
    let lengths = cfg.n_min.max(1)..=cfg.n_max;
    let mut out = Vec::new();
    match cfg.family {
        Family::Regular1 | Family::Regular2 | Family::RegularK => {
            let k = match cfg.family {
                Family::Regular1 => 1,
                Family::Regular2 => 2,
                _ => cfg.k,
            };
            for n in lengths {
                out.push(CaterpillarSpec::regular(n, k)?);
            }
        }
        Family::AtLeast3 => {
            let alphabet: Vec<usize> = (3..=cfg.l_max).collect();
            for n in lengths {
                out.extend(sequences(&alphabet, n, |_| true));
            }
        }
        Family::Zero2 => {
            let alphabet: Vec<usize> = std::iter::once(0).chain(2..=cfg.l_max).collect();
            for n in lengths {
                out.extend(sequences(&alphabet, n, |l| l.contains(&0) && l.iter().any(|&x| x >= 2)));
            }
        }
        Family::Deserted => {
            let alphabet: Vec<usize> = (0..=cfg.l_max).collect();
            for n in lengths {
                out.extend(
                    sequences(&alphabet, n, |_| true)
                        .filter(|s| classify(s) == ClassLabel::DesertedSegments),
                );
            }
        }
        Family::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for _ in 0..cfg.count {
                let n = rng.gen_range(cfg.n_min.max(1)..=cfg.n_max.max(cfg.n_min.max(1)));
                let leaves = (0..n).map(|_| rng.gen_range(0..=cfg.l_max)).collect();
                out.push(CaterpillarSpec::new(leaves)?);
            }
        }
    }
    Ok(out)
}

/// All length-`n` sequences over `alphabet` in lexicographic order that
/// pass `keep`.
fn sequences<'a>(
    alphabet: &'a [usize],
    n: usize,
    keep: impl Fn(&[usize]) -> bool + 'a,
) -> impl Iterator<Item = CaterpillarSpec> + 'a {
    let total = if alphabet.is_empty() { 0 } else { alphabet.len().pow(n as u32) };
    (0..total).filter_map(move |mut code| {
        let mut l = vec![0; n];
        for slot in l.iter_mut().rev() {
            *slot = alphabet[code % alphabet.len()];
            code /= alphabet.len();
        }
        keep(&l).then(|| CaterpillarSpec::new(l).expect("n >= 1"))
    })
}

pub fn sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    Ok(family_specs(cfg)?
        .iter()
        .filter_map(|s| sweep_row(s, cfg))
        .collect())
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// Class constraint for [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Any,
    Supported,
    Regular1,
    Regular2,
    RegularK,
    AtLeast3,
    Zero2,
    Deserted,
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "any" => Constraint::Any,
            "supported" => Constraint::Supported,
            "regular1" => Constraint::Regular1,
            "regular2" => Constraint::Regular2,
            "regularK" | "regulark" => Constraint::RegularK,
            "atleast3" => Constraint::AtLeast3,
            "zero2" => Constraint::Zero2,
            "deserted" => Constraint::Deserted,
            _ => return Err(Error::Parse(format!("unknown constraint {s:?}"))),
        })
    }
}

/// Inclusive ranges for spine length and per-vertex leaf counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenRanges {
    pub n_min: usize,
    pub n_max: usize,
    pub l_min: usize,
    pub l_max: usize,
}

/// Deterministic spec from `seed` satisfying `constraint`.
pub fn generate(seed: u64, ranges: GenRanges, constraint: Constraint) -> Result<CaterpillarSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with(&mut rng, ranges, constraint)
}

pub fn generate_with<R: Rng>(rng: &mut R, r: GenRanges, constraint: Constraint) -> Result<CaterpillarSpec> {
    let fail = |why: &str| Err(Error::Unsatisfiable(format!("{constraint:?}: {why}")));
    if r.n_min.max(1) > r.n_max || r.l_min > r.l_max {
        return fail("empty range");
    }
    let has = |x: usize| (r.l_min..=r.l_max).contains(&x);
    let heavy_from = |lo: usize| lo.max(r.l_min)..=r.l_max;

    let constraint = if constraint == Constraint::Supported {
        let mut options = Vec::new();
        if has(1) {
            options.push(Constraint::Regular1);
        }
        if has(2) {
            options.push(Constraint::Regular2);
        }
        if r.l_max >= 3 {
            options.extend([Constraint::RegularK, Constraint::AtLeast3]);
        }
        if has(0) && r.l_max >= 2 {
            options.push(Constraint::Zero2);
        }
        if has(0) && has(1) && r.n_max >= 3 {
            options.push(Constraint::Deserted);
        }
        match options.choose(rng) {
            Some(&c) => c,
            None => return fail("no supported class fits the ranges"),
        }
    } else {
        constraint
    };

    let mut n = rng.gen_range(r.n_min.max(1)..=r.n_max);
    let leaves = match constraint {
        Constraint::Any | Constraint::Supported => (0..n).map(|_| rng.gen_range(r.l_min..=r.l_max)).collect(),
        Constraint::Regular1 if has(1) => vec![1; n],
        Constraint::Regular2 if has(2) => vec![2; n],
        Constraint::RegularK if r.l_max >= 3 => vec![rng.gen_range(heavy_from(3)); n],
        Constraint::AtLeast3 if r.l_max >= 3 => (0..n).map(|_| rng.gen_range(heavy_from(3))).collect(),
        Constraint::Zero2 if has(0) && r.l_max >= 2 => (0..n)
            .map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(heavy_from(2)) })
            .collect(),
        Constraint::Deserted if has(0) && has(1) && r.n_max >= 3 => {
            n = n.max(3);
            deserted_leaves(rng, n, r)
        }
        _ => return fail("leaf range cannot satisfy the class"),
    };
    CaterpillarSpec::new(leaves)
}

/// Random pattern where every single-leaf vertex sits between leafless ones.
fn deserted_leaves<R: Rng>(rng: &mut R, n: usize, r: GenRanges) -> Vec<usize> {
    let heavy_ok = r.l_max >= 2;
    let mut l: Vec<usize> = (0..n)
        .map(|_| match rng.gen_range(0..3) {
            0 => 0,
            1 => 1,
            _ if heavy_ok => rng.gen_range(r.l_min.max(2)..=r.l_max),
            _ => 0,
        })
        .collect();
    for t in 0..n {
        if l[t] == 1 {
            if t == 0 || t + 1 == n || l[t - 1] != 0 {
                l[t] = 0;
            } else {
                l[t + 1] = 0;
            }
        }
    }
    if !l.contains(&1) {
        let t = rng.gen_range(1..n - 1);
        l[t - 1] = 0;
        l[t] = 1;
        l[t + 1] = 0;
    }
    l
}
