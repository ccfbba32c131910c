//! Kazhdan-Lusztig polynomials for finite symmetric groups and the Verma
//! composition multiplicities m(λ, μ) they induce.
//!
//! Multiplicities are computed inside the finite reductive factor spanned by
//! the finite roots of the rank-r truncation, which is a product of general
//! linear factors indexed by ψ-classes. Weights translate to permutation
//! data through their ρ-shifted coordinate vectors, with the antidominant
//! point of each orbit as base; singular orbits use longest coset
//! representatives for the stabilizer.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{checked_mul, Error, Result};
use crate::weights::{class_members, EligibleWeight};

/// Default cap on the symmetric-group degree accepted by the KL machinery.
pub const DEFAULT_KL_BOUND: usize = 8;

/// A permutation of `1..=m` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PermWord(Vec<u32>);

impl PermWord {
    pub fn new(images: Vec<u32>) -> Result<PermWord> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v == 0 || v as usize > m || seen[(v - 1) as usize] {
                return Err(Error::Domain(format!(
                    "not a permutation of 1..={m}: {images:?}"
                )));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(PermWord(images))
    }

    pub fn identity(m: usize) -> PermWord {
        PermWord((1..=m as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Coxeter length: the inversion count.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut inv = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Right multiplication by the simple transposition of positions
    /// `t, t+1` (0-based `t`).
    fn swap_positions(&self, t: usize) -> PermWord {
        let mut v = self.0.clone();
        v.swap(t, t + 1);
        PermWord(v)
    }

    /// First position `t` with `w(t) > w(t+1)`, if any.
    fn first_right_descent(&self) -> Option<usize> {
        self.0.windows(2).position(|p| p[0] > p[1])
    }

    fn has_right_descent(&self, t: usize) -> bool {
        self.0[t] > self.0[t + 1]
    }

    /// Right multiplication by the (not necessarily simple) transposition of
    /// positions `a` and `b`.
    fn swap_any(&self, a: usize, b: usize) -> PermWord {
        let mut v = self.0.clone();
        v.swap(a, b);
        PermWord(v)
    }
}

impl fmt::Debug for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for PermWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<PermWord> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("expected bracketed permutation, got {t:?}"),
            })?;
        let mut images = Vec::new();
        for piece in inner.split(',') {
            let v: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad permutation entry {piece:?}"),
            })?;
            images.push(v);
        }
        PermWord::new(images).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })
    }
}

/// Bruhat order via the rank-matrix criterion:
/// `x ≤ w` iff `|{t ≤ i : x(t) ≥ j}| ≤ |{t ≤ i : w(t) ≥ j}|` for all `i, j`.
pub fn bruhat_leq(x: &PermWord, w: &PermWord) -> bool {
    assert_eq!(x.degree(), w.degree(), "permutations of different degree");
    let m = x.degree();
    for i in 0..m {
        // counts of values ≥ j among the first i+1 entries
        let mut cx = vec![0i32; m + 2];
        let mut cw = vec![0i32; m + 2];
        for t in 0..=i {
            cx[x.0[t] as usize] += 1;
            cw[w.0[t] as usize] += 1;
        }
        let mut sx = 0;
        let mut sw = 0;
        for j in (1..=m).rev() {
            sx += cx[j];
            sw += cw[j];
            if sx > sw {
                return false;
            }
        }
    }
    true
}

/// A Kazhdan-Lusztig polynomial: nonnegative coefficients in ascending
/// powers of q. The zero polynomial encodes `x ≰ w`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KLPolynomial {
    coeffs: Vec<u64>,
}

impl KLPolynomial {
    pub fn zero() -> KLPolynomial {
        KLPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> KLPolynomial {
        KLPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> KLPolynomial {
        let mut coeffs = coeffs;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        KLPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for KLPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}*q")?,
                (i, 1) => write!(f, "q^{i}")?,
                (i, c) => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Signed polynomial used inside the recursion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct SPoly(Vec<i64>);

impl SPoly {
    fn zero() -> SPoly {
        SPoly(Vec::new())
    }
    fn one() -> SPoly {
        SPoly(vec![1])
    }
    fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }
    fn add_assign(&mut self, other: &SPoly, shift: usize, scale: i64) {
        if self.0.len() < other.0.len() + shift {
            self.0.resize(other.0.len() + shift, 0);
        }
        for (i, &c) in other.0.iter().enumerate() {
            self.0[i + shift] += scale * c;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
    fn into_kl(self) -> KLPolynomial {
        assert!(
            self.0.iter().all(|&c| c >= 0),
            "KL polynomial with a negative coefficient: {:?}",
            self.0
        );
        KLPolynomial::from_coeffs(self.0.into_iter().map(|c| c as u64).collect())
    }
}

/// Memoized Kazhdan-Lusztig computation confined to one value; create one
/// table per computation (results are deterministic, state is not shared).
pub struct KlTable {
    bound: usize,
    memo: HashMap<(PermWord, PermWord), SPoly>,
    lower_cache: HashMap<PermWord, Vec<PermWord>>,
}

impl KlTable {
    pub fn new(bound: usize) -> KlTable {
        KlTable {
            bound,
            memo: HashMap::new(),
            lower_cache: HashMap::new(),
        }
    }

    /// The polynomial `P_{x,w}`; zero when `x ≰ w` in Bruhat order.
    pub fn polynomial(&mut self, x: &PermWord, w: &PermWord) -> Result<KLPolynomial> {
        if x.degree() != w.degree() {
            return Err(Error::Domain(
                "permutations from different symmetric groups".into(),
            ));
        }
        if x.degree() > self.bound {
            return Err(Error::Resource {
                what: format!("symmetric group degree {}", x.degree()),
                limit: self.bound as u64,
            });
        }
        Ok(self.p(x, w).into_kl())
    }

    fn p(&mut self, x: &PermWord, w: &PermWord) -> SPoly {
        if x == w {
            return SPoly::one();
        }
        if !bruhat_leq(x, w) {
            return SPoly::zero();
        }
        let key = (x.clone(), w.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let s = w
            .first_right_descent()
            .expect("w ≠ e because x < w was ruled out");
        let ws = w.swap_positions(s);
        let result = if !x.has_right_descent(s) {
            // ws < w and xs > x force P_{x,w} = P_{xs,w}
            let xs = x.swap_positions(s);
            self.p(&xs, w)
        } else {
            let xs = x.swap_positions(s);
            let mut acc = self.p(&xs, &ws);
            let pxws = self.p(x, &ws);
            acc.add_assign(&pxws, 1, 1);
            // correction terms: z with x ≤ z < w, zs < z, weighted by μ(z, ws)
            let lw = w.length();
            for z in self.lower_interval(&ws) {
                if !z.has_right_descent(s) || !bruhat_leq(x, &z) {
                    continue;
                }
                let mu = self.mu(&z, &ws);
                if mu == 0 {
                    continue;
                }
                let shift = (lw - z.length()) / 2;
                let pxz = self.p(x, &z);
                acc.add_assign(&pxz, shift, -mu);
            }
            acc
        };
        self.memo.insert(key, result.clone());
        result
    }

    /// μ(z, y): the coefficient of `q^{(ℓ(y)−ℓ(z)−1)/2}` in `P_{z,y}`.
    fn mu(&mut self, z: &PermWord, y: &PermWord) -> i64 {
        let lz = z.length();
        let ly = y.length();
        if lz >= ly || (ly - lz).is_multiple_of(2) {
            return 0;
        }
        let p = self.p(z, y);
        p.coeff((ly - lz - 1) / 2)
    }

    /// All `z ≤ y`, gathered by walking Bruhat covers downward.
    fn lower_interval(&mut self, y: &PermWord) -> Vec<PermWord> {
        if let Some(hit) = self.lower_cache.get(y) {
            return hit.clone();
        }
        let m = y.degree();
        let mut seen: std::collections::HashSet<PermWord> = std::collections::HashSet::new();
        let mut stack = vec![y.clone()];
        seen.insert(y.clone());
        while let Some(z) = stack.pop() {
            let lz = z.length();
            for a in 0..m {
                for b in a + 1..m {
                    if z.0[a] > z.0[b] {
                        let z2 = z.swap_any(a, b);
                        if z2.length() + 1 == lz && !seen.contains(&z2) {
                            seen.insert(z2.clone());
                            stack.push(z2);
                        }
                    }
                }
            }
        }
        let out: Vec<PermWord> = seen.into_iter().collect();
        self.lower_cache.insert(y.clone(), out.clone());
        out
    }
}

/// Convenience entry point with the default degree bound.
pub fn kl_polynomial(x: &PermWord, w: &PermWord) -> Result<KLPolynomial> {
    KlTable::new(DEFAULT_KL_BOUND).polynomial(x, w)
}

/// The permutation of maximal length sending the ascending sort of `values`
/// to `values` (slot t ↦ position holding the t-th sorted value). Ties are
/// resolved to the longest coset representative for the stabilizer of the
/// sorted vector: equal slots are matched to positions in decreasing order.
pub fn longest_coset_rep(values: &[i64]) -> PermWord {
    let m = values.len();
    let mut sorted: Vec<i64> = values.to_vec();
    sorted.sort();
    let mut images = vec![0u32; m];
    let mut slot = 0usize;
    while slot < m {
        let v = sorted[slot];
        let mut group = slot;
        while group < m && sorted[group] == v {
            group += 1;
        }
        let mut positions: Vec<usize> = (0..m).filter(|&p| values[p] == v).collect();
        positions.reverse();
        for (offset, pos) in positions.into_iter().enumerate() {
            images[slot + offset] = pos as u32 + 1;
        }
        slot = group;
    }
    PermWord::new(images).expect("constructed from a value matching")
}

/// The Verma composition multiplicity m(λ, μ) at the canonical truncation
/// rank (one past the larger eligibility rank of the inputs).
pub fn verma_multiplicity(lambda: &EligibleWeight, mu: &EligibleWeight) -> Result<u64> {
    let rank = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
    verma_multiplicity_at_rank(lambda, mu, rank, DEFAULT_KL_BOUND)
}

/// m(λ, μ) computed inside the rank-`rank` finite factor.
///
/// Zero unless the weights are linked by the finite Weyl group of the
/// factor: equal levels and, per ψ-class, equal multisets of ρ-shifted
/// coordinates over the box. The value is the product over classes of the
/// Kazhdan-Lusztig polynomial at q = 1 for the longest coset representatives
/// of the two coordinate arrangements over the antidominant base point.
pub fn verma_multiplicity_at_rank(
    lambda: &EligibleWeight,
    mu: &EligibleWeight,
    rank: i64,
    kl_bound: usize,
) -> Result<u64> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    let n = lambda.n();
    if rank < lambda.eligibility_rank().max(mu.eligibility_rank()) {
        return Err(Error::Domain(format!(
            "rank {rank} below the eligibility rank of the inputs"
        )));
    }
    if lambda.level() != mu.level() {
        return Ok(0);
    }
    let mut result = 1u64;
    for c in 0..=n {
        let members = class_members(n, c, rank);
        if members.is_empty() {
            continue;
        }
        let va: Vec<i64> = members.iter().map(|&p| lambda.rho_shift(p)).collect();
        let vb: Vec<i64> = members.iter().map(|&p| mu.rho_shift(p)).collect();
        let mut sa = va.clone();
        let mut sb = vb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(0); // not in the same finite-Weyl dot orbit
        }
        if va == vb {
            continue; // identical factor data, P = 1
        }
        if members.len() > kl_bound {
            return Err(Error::Resource {
                what: format!("symmetric group degree {} in ψ-class {c}", members.len()),
                limit: kl_bound as u64,
            });
        }
        let w_plus = longest_coset_rep(&va);
        let x_plus = longest_coset_rep(&vb);
        let mut table = KlTable::new(kl_bound);
        let p = table.polynomial(&x_plus, &w_plus)?;
        result = checked_mul(result, p.eval_at_one(), "verma multiplicity")?;
        if result == 0 {
            return Ok(0);
        }
    }
    Ok(result)
}
