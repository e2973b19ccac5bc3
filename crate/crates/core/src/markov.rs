//! Ground truth from the chain itself: the discrete-time TASEP transition
//! matrix over all `2^n` states and its exact stationary distribution.
//!
//! States are indexed by reading the word as a big-endian binary number.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::format_rational;
use crate::error::{Error, Result};
use crate::partition::z_n_derrida;
use crate::tableau::{sum_weights, StateWord};

/// Largest lattice accepted by the exact solver.
pub const MARKOV_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    n: usize,
    alpha: BigRational,
    beta: BigRational,
}

impl ChainSpec {
    pub fn new(n: usize, alpha: BigRational, beta: BigRational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "lattice length n must be at least 1".into(),
            ));
        }
        check_rate("alpha", &alpha)?;
        check_rate("beta", &beta)?;
        Ok(Self { n, alpha, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }
}

/// Rates must lie in `(0, 1]`.
pub fn check_rate(name: &'static str, value: &BigRational) -> Result<()> {
    if value <= &BigRational::zero() || value > &BigRational::one() {
        return Err(Error::InvalidRate {
            name,
            value: format_rational(value),
        });
    }
    Ok(())
}

/// Row-stochastic matrix, stored densely; `entry(from, to)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    n: usize,
    rows: Vec<Vec<BigRational>>,
}

impl TransitionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, from: usize, to: usize) -> &BigRational {
        &self.rows[from][to]
    }

    pub fn row(&self, from: usize) -> &[BigRational] {
        &self.rows[from]
    }
}

/// Entry `0.. -> 1..` with probability `alpha/(n+1)`, exit `..1 -> ..0` with
/// `beta/(n+1)`, each hop `10 -> 01` with `1/(n+1)`; the rest stays put.
pub fn build_chain(spec: &ChainSpec) -> TransitionMatrix {
    let n = spec.n;
    let size = 1usize << n;
    let scale = BigRational::from_integer((n as i64 + 1).into());
    let entry = &spec.alpha / &scale;
    let exit = &spec.beta / &scale;
    let hop = BigRational::one() / &scale;

    let mut rows = vec![vec![BigRational::zero(); size]; size];
    for (from, row) in rows.iter_mut().enumerate() {
        let bits = StateWord::from_index(n, from).bits().to_vec();
        let mut moves: Vec<(usize, &BigRational)> = Vec::new();
        if !bits[0] {
            let mut to = bits.clone();
            to[0] = true;
            moves.push((StateWord::new(to).index(), &entry));
        }
        if bits[n - 1] {
            let mut to = bits.clone();
            to[n - 1] = false;
            moves.push((StateWord::new(to).index(), &exit));
        }
        for site in 0..n - 1 {
            if bits[site] && !bits[site + 1] {
                let mut to = bits.clone();
                to.swap(site, site + 1);
                moves.push((StateWord::new(to).index(), &hop));
            }
        }
        let mut stay = BigRational::one();
        for (to, p) in moves {
            row[to] += p;
            stay -= p;
        }
        row[from] += stay;
    }
    TransitionMatrix { n, rows }
}

/// The unique probability vector `pi` with `pi M = pi`.
///
/// Solves `(M^T - I) pi = 0` with the last equation replaced by
/// `sum(pi) = 1`. Rows are kept sparse and each pivot is the sparsest
/// candidate row, which keeps fill-in (and fraction growth) manageable.
pub fn stationary_distribution(m: &TransitionMatrix) -> Result<Vec<BigRational>> {
    let size = m.states();
    // column `size` holds the right-hand side
    let mut rows: Vec<BTreeMap<usize, BigRational>> = (0..size - 1)
        .map(|i| {
            let mut row: BTreeMap<usize, BigRational> = (0..size)
                .filter(|&j| !m.entry(j, i).is_zero())
                .map(|j| (j, m.entry(j, i).clone()))
                .collect();
            let diag = row.entry(i).or_insert_with(BigRational::zero);
            *diag -= BigRational::one();
            if diag.is_zero() {
                row.remove(&i);
            }
            row
        })
        .collect();
    rows.push((0..=size).map(|j| (j, BigRational::one())).collect());

    for col in 0..size {
        let pivot = (col..size)
            .filter(|&r| rows[r].contains_key(&col))
            .min_by_key(|&r| rows[r].len())
            .ok_or(Error::Singular)?;
        rows.swap(col, pivot);
        let (done, rest) = rows.split_at_mut(col + 1);
        let pivot_row = &done[col];
        let p = &pivot_row[&col];
        for row in rest.iter_mut() {
            let Some(lead) = row.remove(&col) else {
                continue;
            };
            let factor = lead / p;
            for (&j, v) in pivot_row.range(col + 1..) {
                let e = row.entry(j).or_insert_with(BigRational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
        }
    }

    let mut pi = vec![BigRational::zero(); size];
    for col in (0..size).rev() {
        let row = &rows[col];
        let mut acc = row.get(&size).cloned().unwrap_or_else(BigRational::zero);
        for (&j, v) in row.range(col + 1..size) {
            acc -= v * &pi[j];
        }
        pi[col] = acc / &row[&col];
    }
    Ok(pi)
}

/// `pi M - pi`, exactly.
pub fn stationarity_residual(m: &TransitionMatrix, pi: &[BigRational]) -> Vec<BigRational> {
    (0..m.states())
        .map(|to| {
            let inflow: BigRational = (0..m.states())
                .map(|from| &pi[from] * m.entry(from, to))
                .sum();
            inflow - &pi[to]
        })
        .collect()
}

/// Per-state comparison of the solved chain against `P(tau)/Z_n`.
#[derive(Clone, Debug)]
pub struct StationaryCheck {
    pub stationary: Vec<BigRational>,
    pub predicted: Vec<BigRational>,
}

impl StationaryCheck {
    pub fn holds(&self) -> bool {
        self.stationary == self.predicted
    }
}

pub fn stationary_check(spec: &ChainSpec) -> Result<StationaryCheck> {
    if spec.n > MARKOV_MAX_N {
        return Err(Error::TooLarge {
            what: "lattice length n",
            value: spec.n,
            limit: MARKOV_MAX_N,
        });
    }
    let stationary = stationary_distribution(&build_chain(spec))?;
    let z = z_n_derrida(spec.n)?.eval(&spec.alpha, &spec.beta)?;
    let predicted = StateWord::all(spec.n)
        .map(|tau| Ok(sum_weights(&tau).eval(&spec.alpha, &spec.beta)? / &z))
        .collect::<Result<Vec<_>>>()?;
    Ok(StationaryCheck {
        stationary,
        predicted,
    })
}

/// True iff every stationary probability equals the tableau prediction.
pub fn verify_stationary_formula(spec: &ChainSpec) -> Result<bool> {
    Ok(stationary_check(spec)?.holds())
}

/// `[{state, probability}, ...]` in index order.
pub fn stationary_json(n: usize, pi: &[BigRational]) -> Value {
    Value::Array(
        pi.iter()
            .enumerate()
            .map(|(i, p)| {
                json!({
                    "state": StateWord::from_index(n, i).to_string(),
                    "probability": format!("{}/{}", p.numer(), p.denom()),
                })
            })
            .collect(),
    )
}
