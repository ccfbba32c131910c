//! Partitions, Littlewood-Richardson coefficients and Schur polynomials.
//!
//! These are the building blocks of every multiplicity formula in the crate:
//! socle filtrations and large-annihilator duals of tensor injectives are
//! given by sums of products of LR coefficients, and the Schur-polynomial
//! machinery doubles as an independent oracle for them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, identified with its Young diagram.
///
/// Parts are weakly decreasing and positive; the empty partition is allowed
/// everywhere. Trailing zeros are stripped on construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Creates a partition from weakly decreasing parts. Zeros are dropped.
    ///
    /// Panics if the sequence increases somewhere; use [`Partition::from_str`]
    /// for untrusted input.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        let parts = parts.into_iter().take_while(|&p| p > 0).collect();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero beyond the last row.
    pub fn row(&self, r: usize) -> u32 {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Young-diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(r, &p)| p <= other.row(r))
    }

    /// All partitions of `m`.
    pub fn all_of(m: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::new(acc.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                rec(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// All subdiagrams of `self` with exactly `m` cells.
    pub fn sub_diagrams_of_size(&self, m: u32) -> Vec<Partition> {
        Partition::all_of(m)
            .into_iter()
            .filter(|p| p.contained_in(self))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracketed text form, e.g. `[3,1,1]`; `[]` is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("expected bracketed partition, got {t:?}"),
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let p: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad partition part {piece:?}"),
            })?;
            if p == 0 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "partition parts must be positive".into(),
                });
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("parts not weakly decreasing in {t:?}"),
            });
        }
        Ok(Partition::new(parts))
    }
}

/// The Littlewood-Richardson coefficient `c^ν_{λμ}`.
///
/// Counts skew semistandard tableaux of shape `ν/λ` and content `μ` whose
/// reverse reading word is a lattice word. Total: returns 0 whenever the
/// sizes or the containment `λ ⊆ ν` fail.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !lambda.contained_in(nu) {
        return 0;
    }
    if mu.is_empty() {
        return 1; // ν = λ at this point
    }
    // Cells of ν/λ in reverse reading order: rows top to bottom, each row
    // right to left. Filling in this order keeps the lattice condition a
    // prefix property and makes the right/above neighbours already placed.
    let rows = nu.len();
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for r in 0..rows {
        let lo = lambda.row(r);
        let hi = nu.row(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let k = mu.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; nu.row(r) as usize])
        .collect();
    let mut used = vec![0u32; k]; // content so far, also the lattice counters
    let mut count = 0u64;

    fn rec(
        idx: usize,
        cells: &[(usize, u32)],
        grid: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        mu: &Partition,
        lambda: &Partition,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (r, c) = cells[idx];
        let right = if c + 1 < grid[r].len() as u32 {
            grid[r][(c + 1) as usize]
        } else {
            0
        };
        // Cell above is a constraint only if it lies in the skew shape.
        let above = if r > 0 && c >= lambda.row(r - 1) && c < grid[r - 1].len() as u32 {
            grid[r - 1][c as usize]
        } else {
            0
        };
        for v in 1..=mu.len() as u32 {
            if used[(v - 1) as usize] >= mu.row((v - 1) as usize) {
                continue;
            }
            // lattice word: after placing v, #v ≤ #(v-1)
            if v > 1 && used[(v - 1) as usize] + 1 > used[(v - 2) as usize] {
                continue;
            }
            if right != 0 && v > right {
                continue; // weakly increasing along rows, reading l→r
            }
            if above != 0 && v <= above {
                continue; // strictly increasing down columns
            }
            grid[r][c as usize] = v;
            used[(v - 1) as usize] += 1;
            rec(idx + 1, cells, grid, used, mu, lambda, count);
            used[(v - 1) as usize] -= 1;
            grid[r][c as usize] = 0;
        }
    }

    rec(0, &cells, &mut grid, &mut used, mu, lambda, &mut count);
    count
}

/// Iterated Littlewood-Richardson coefficient `c^γ_{α₁,…,α_m}`,
/// the multiplicity of `S_γ(U)` in `S_{α₁}(U) ⊗ ⋯ ⊗ S_{α_m}(U)`.
pub fn multi_lr(gamma: &Partition, alphas: &[Partition]) -> u64 {
    let total: u64 = alphas.iter().map(|a| a.size()).sum();
    if total != gamma.size() {
        return 0;
    }
    // Fold: keep the expansion of the partial product, pruned to
    // subdiagrams of γ (everything else can never reach γ).
    let mut cur: BTreeMap<Partition, u64> = BTreeMap::new();
    cur.insert(Partition::empty(), 1);
    for alpha in alphas {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (delta, &coeff) in &cur {
            let target = delta.size() + alpha.size();
            for dp in gamma.sub_diagrams_of_size(target as u32) {
                let c = lr_coefficient(delta, alpha, &dp);
                if c > 0 {
                    *next.entry(dp).or_insert(0) += coeff * c;
                }
            }
        }
        cur = next;
        if cur.is_empty() {
            return 0;
        }
    }
    cur.get(gamma).copied().unwrap_or(0)
}

/// A polynomial in `k` variables with nonnegative integer coefficients,
/// stored as exponent-vector → coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    pub vars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl MPoly {
    pub fn zero(vars: usize) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: u64) -> Self {
        let mut p = MPoly::zero(vars);
        if c != 0 {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn add_term(&mut self, expo: Vec<u32>, c: u64) {
        assert_eq!(expo.len(), self.vars);
        if c == 0 {
            return;
        }
        let e = self.terms.entry(expo).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
    }

    /// Subtracts `c·x^expo`; panics if the result would go negative
    /// (coefficients here are always counts).
    pub fn sub_term(&mut self, expo: &[u32], c: u64) {
        if c == 0 {
            return;
        }
        let cur = self.terms.get_mut(expo).expect("term not present");
        assert!(*cur >= c, "negative coefficient");
        *cur -= c;
        if *cur == 0 {
            self.terms.remove(expo);
        }
    }

    pub fn coeff(&self, expo: &[u32]) -> u64 {
        self.terms.get(expo).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &u64)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = MPoly::zero(self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(expo, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Drops every term whose total degree exceeds `d`.
    pub fn truncate_total_degree(&self, d: u32) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (e, &c) in &self.terms {
            if e.iter().sum::<u32>() <= d {
                out.add_term(e.clone(), c);
            }
        }
        out
    }

    /// The lexicographically greatest exponent vector, if any.
    pub fn leading_exponent(&self) -> Option<&Vec<u32>> {
        self.terms.keys().next_back()
    }
}

/// The Schur polynomial `s_λ(x₁,…,x_k)` by semistandard-tableau enumeration.
///
/// Returns the zero polynomial when `λ` has more rows than variables.
pub fn schur_poly(lambda: &Partition, k: usize) -> MPoly {
    let mut out = MPoly::zero(k);
    if lambda.len() > k {
        return out;
    }
    if lambda.is_empty() {
        return MPoly::constant(k, 1);
    }
    // Fill row by row; row r entries weakly increase and strictly exceed the
    // entry above, so a row is determined cell by cell.
    let rows = lambda.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; lambda.row(r) as usize])
        .collect();

    fn rec(r: usize, c: usize, lambda: &Partition, k: usize, grid: &mut Vec<Vec<u32>>, out: &mut MPoly) {
        if r == lambda.len() {
            let mut expo = vec![0u32; k];
            for row in grid.iter() {
                for &v in row {
                    expo[(v - 1) as usize] += 1;
                }
            }
            out.add_term(expo, 1);
            return;
        }
        let (nr, nc) = if c + 1 < grid[r].len() {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let min_left = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_above = if r > 0 && c < grid[r - 1].len() {
            grid[r - 1][c] + 1
        } else {
            1
        };
        for v in min_left.max(min_above)..=k as u32 {
            grid[r][c] = v;
            rec(nr, nc, lambda, k, grid, out);
        }
        grid[r][c] = 0;
    }

    rec(0, 0, lambda, k, &mut grid, &mut out);
    out
}
