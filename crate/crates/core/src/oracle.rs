//! Independent brute-force recomputations of the fast paths.
//!
//! Each oracle shares only domain types with the code it checks; any
//! disagreement on the overlap domain is a build-blocking failure, exercised
//! by the `certify` entry point and the acceptance suite.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::kl::{bruhat_leq, KLPolynomial, PermWord};
use crate::partitions::{lr_coefficient, schur_poly, Partition};
use crate::symalg::WeightedRootSpace;
use crate::weights::{dominance_geq, EligibleWeight, Root, WeightIndex};

/// The full Schur expansion of `s_λ · s_μ` by explicit monomial
/// multiplication in `|λ|+|μ|` variables: peel off the lex-leading Schur
/// term until nothing is left.
pub fn naive_schur_expansion(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeMap<Partition, u64>> {
    let total = lambda.size() + mu.size();
    if total > 10 {
        return Err(Error::Resource {
            what: format!("naive LR product size {total}"),
            limit: 10,
        });
    }
    let k = (total as usize).max(1);
    let mut product = schur_poly(lambda, k).mul(&schur_poly(mu, k));
    let mut expansion: BTreeMap<Partition, u64> = BTreeMap::new();
    while let Some(lead) = product.leading_exponent().cloned() {
        // the lex-greatest monomial of a Schur-positive polynomial is the
        // leading monomial x^π of its greatest constituent s_π
        let mut parts = lead.clone();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent not a partition: {parts:?}"
        );
        parts.retain(|&p| p > 0);
        let pi = Partition::new(parts);
        let c = product.coeff(&lead);
        let s = schur_poly(&pi, k);
        for (e, &sc) in s.terms() {
            product.sub_term(
                e,
                sc.checked_mul(c).expect("oracle coefficient overflow"),
            );
        }
        expansion.insert(pi, c);
    }
    Ok(expansion)
}

/// LR coefficient by explicit monomial expansion.
pub fn naive_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.size() > 10 {
        return Err(Error::Resource {
            what: format!("naive LR target size {}", nu.size()),
            limit: 10,
        });
    }
    if lambda.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    Ok(naive_schur_expansion(lambda, mu)?
        .get(nu)
        .copied()
        .unwrap_or(0))
}

/// Kazhdan-Lusztig polynomials through R-polynomials and the defining
/// inversion identity, structurally distinct from the μ-recursion.
///
/// For each `x ≤ w` the polynomial is pinned down by
/// `q^{ℓ(w)−ℓ(x)} P_{x,w}(q⁻¹) − P_{x,w}(q) = Σ_{x<z≤w} R_{x,z} P_{z,w}`
/// together with the degree bound; the full identity is re-checked after
/// solving.
pub struct NaiveKl {
    limit: usize,
    r_memo: HashMap<(PermWord, PermWord), Vec<i64>>,
    p_memo: HashMap<(PermWord, PermWord), Vec<i64>>,
}

impl NaiveKl {
    pub fn new() -> NaiveKl {
        NaiveKl {
            limit: 5,
            r_memo: HashMap::new(),
            p_memo: HashMap::new(),
        }
    }

    pub fn polynomial(&mut self, x: &PermWord, w: &PermWord) -> Result<KLPolynomial> {
        if x.degree() != w.degree() {
            return Err(Error::Domain("degrees differ".into()));
        }
        if x.degree() > self.limit {
            return Err(Error::Resource {
                what: format!("naive KL degree {}", x.degree()),
                limit: self.limit as u64,
            });
        }
        let p = self.p(x, w);
        assert!(p.iter().all(|&c| c >= 0), "negative naive KL coefficient");
        Ok(KLPolynomial::from_coeffs(
            p.into_iter().map(|c| c as u64).collect(),
        ))
    }

    fn r(&mut self, x: &PermWord, w: &PermWord) -> Vec<i64> {
        if x == w {
            return vec![1];
        }
        if !bruhat_leq(x, w) {
            return Vec::new();
        }
        let key = (x.clone(), w.clone());
        if let Some(hit) = self.r_memo.get(&key) {
            return hit.clone();
        }
        let s = first_descent(w).expect("w is not the identity here");
        let ws = swap(w, s);
        let result = if has_descent(x, s) {
            self.r(&swap(x, s), &ws)
        } else {
            // R_{x,w} = (q−1)·R_{x,ws} + q·R_{xs,ws}
            let a = self.r(x, &ws);
            let b = self.r(&swap(x, s), &ws);
            let mut out = vec![0i64; a.len().max(b.len()) + 1];
            for (i, &c) in a.iter().enumerate() {
                out[i + 1] += c;
                out[i] -= c;
            }
            for (i, &c) in b.iter().enumerate() {
                out[i + 1] += c;
            }
            trim(&mut out);
            out
        };
        self.r_memo.insert(key, result.clone());
        result
    }

    fn p(&mut self, x: &PermWord, w: &PermWord) -> Vec<i64> {
        if x == w {
            return vec![1];
        }
        if !bruhat_leq(x, w) {
            return Vec::new();
        }
        let key = (x.clone(), w.clone());
        if let Some(hit) = self.p_memo.get(&key) {
            return hit.clone();
        }
        let len_gap = w.length() - x.length();
        // F = Σ_{x < z ≤ w} R_{x,z}·P_{z,w}
        let mut f = vec![0i64; len_gap + 1];
        for z in lower_interval(w) {
            if z == *x || !bruhat_leq(x, &z) {
                continue;
            }
            let r = self.r(x, &z);
            let p = self.p(&z, w);
            for (i, &rc) in r.iter().enumerate() {
                for (j, &pc) in p.iter().enumerate() {
                    f[i + j] += rc * pc;
                }
            }
        }
        // deg P ≤ (len_gap−1)/2, so the high half of F is q^{len_gap}·P(1/q):
        // p_i = [q^{len_gap−i}] F
        let top = (len_gap - 1) / 2;
        let mut p = vec![0i64; top + 1];
        for (i, slot) in p.iter_mut().enumerate() {
            *slot = f[len_gap - i];
        }
        trim(&mut p);
        // re-check the full identity with the solved polynomial
        let mut lhs = vec![0i64; len_gap + 1];
        for (i, &c) in p.iter().enumerate() {
            lhs[len_gap - i] += c;
            lhs[i] -= c;
        }
        trim(&mut lhs);
        let mut fe = f.clone();
        trim(&mut fe);
        assert_eq!(lhs, fe, "KL inversion identity failed for ({x:?},{w:?})");
        self.p_memo.insert(key, p.clone());
        p
    }
}

impl Default for NaiveKl {
    fn default() -> Self {
        NaiveKl::new()
    }
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn first_descent(w: &PermWord) -> Option<usize> {
    w.images().windows(2).position(|p| p[0] > p[1])
}

fn has_descent(w: &PermWord, t: usize) -> bool {
    w.images()[t] > w.images()[t + 1]
}

fn swap(w: &PermWord, t: usize) -> PermWord {
    let mut v = w.images().to_vec();
    v.swap(t, t + 1);
    PermWord::new(v).unwrap()
}

fn lower_interval(w: &PermWord) -> Vec<PermWord> {
    let m = w.degree();
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(z) = stack.pop() {
        let lz = z.length();
        for a in 0..m {
            for b in a + 1..m {
                if z.images()[a] > z.images()[b] {
                    let mut v = z.images().to_vec();
                    v.swap(a, b);
                    let z2 = PermWord::new(v).unwrap();
                    if z2.length() + 1 == lz && !seen.contains(&z2) {
                        seen.insert(z2.clone());
                        stack.push(z2);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Literal multiset enumeration over colored roots, the oracle for the
/// symmetric-algebra DP. Capped at |ψ(ν)| ≤ 3 and rank ≤ 3.
pub fn naive_sym_mult(nu: &EligibleWeight, rank: i64) -> Result<u64> {
    let d = match nu.psi().to_int() {
        Some(v) if v <= 0 => (-v) as u64,
        _ => return Ok(0),
    };
    if d > 3 {
        return Err(Error::Resource {
            what: format!("naive symmetric-algebra depth {d}"),
            limit: 3,
        });
    }
    if rank > 3 {
        return Err(Error::Resource {
            what: format!("naive symmetric-algebra rank {rank}"),
            limit: 3,
        });
    }
    if nu.level().iter().any(|&a| a != 0) {
        return Err(Error::Domain("nonzero level".into()));
    }
    // every colored root, one entry per color
    let space = WeightedRootSpace::new(nu.n(), rank);
    let mut colored: Vec<(EligibleWeight, u64)> = Vec::new();
    for (root, psi, mult) in space.entries() {
        for _ in 0..*mult {
            colored.push((root.as_weight(nu.n()), (-psi) as u64));
        }
    }
    fn rec(
        colored: &[(EligibleWeight, u64)],
        from: usize,
        acc: &EligibleWeight,
        budget: u64,
        target: &EligibleWeight,
        hits: &mut u64,
    ) {
        if acc == target {
            *hits += 1;
        }
        if budget == 0 {
            return;
        }
        // remaining parts each add +1 at one index, so the positive mass of
        // target − acc can never exceed the remaining budget
        let gap = target - acc;
        let positive_mass: u64 = gap
            .finite_support()
            .map(|(_, &c)| c.max(0) as u64)
            .sum();
        if positive_mass > budget {
            return;
        }
        for idx in from..colored.len() {
            let (w, cost) = &colored[idx];
            if *cost > budget {
                continue;
            }
            let next = acc.checked_add(w);
            rec(colored, idx, &next, budget - cost, target, hits);
        }
    }
    let mut hits = 0u64;
    let zero = EligibleWeight::zero(nu.n());
    if nu.is_zero() {
        return Ok(1);
    }
    // count only exact-degree multisets: enumerate with full budget and
    // match on the target; sub-degree hits have a different ψ and never
    // equal the target, except the empty multiset handled above
    rec(&colored, 0, &zero, d, nu, &mut hits);
    Ok(hits)
}

/// Exhaustive search for a decomposition of λ − μ into positive roots.
pub fn naive_dominance(lambda: &EligibleWeight, mu: &EligibleWeight) -> Result<bool> {
    assert_eq!(lambda.n(), mu.n());
    if lambda.level() != mu.level() {
        return Ok(false);
    }
    let delta = lambda - mu;
    let height: i64 = delta
        .finite_support()
        .map(|(_, &c)| c.abs())
        .sum();
    if height > 16 {
        return Err(Error::Resource {
            what: format!("naive dominance height {height}"),
            limit: 16,
        });
    }
    // candidate intermediate indices: the ≺-interval spanned by the support
    let support: Vec<WeightIndex> = delta.finite_support().map(|(p, _)| *p).collect();
    if support.is_empty() {
        return Ok(true);
    }
    let lo = *support.first().unwrap();
    let hi = *support.last().unwrap();
    let mut box_points = Vec::new();
    let rank = support.iter().map(|p| p.i.abs()).max().unwrap();
    for k in 1..=lambda.n() {
        for i in (-rank..=rank).filter(|&i| i != 0) {
            let p = WeightIndex::new(i, k);
            if lo <= p && p <= hi {
                box_points.push(p);
            }
        }
    }

    fn search(
        delta: &EligibleWeight,
        points: &[WeightIndex],
        memo: &mut std::collections::HashSet<EligibleWeight>,
    ) -> bool {
        if delta.is_zero() {
            return true;
        }
        if memo.contains(delta) {
            return false;
        }
        // the ≺-least support point must carry a positive coefficient
        let (first, &c) = delta.finite_support().next().unwrap();
        if c <= 0 {
            memo.insert(delta.clone());
            return false;
        }
        let first = *first;
        for &q in points.iter().filter(|&&q| first < q) {
            let step = Root::new(first, q);
            debug_assert!(step.is_positive());
            let rest = delta - &step.as_weight(delta.n());
            if search(&rest, points, memo) {
                return true;
            }
        }
        memo.insert(delta.clone());
        false
    }

    let mut memo = std::collections::HashSet::new();
    Ok(search(&delta, &box_points, &mut memo))
}

/// Summary of one oracle-agreement suite.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub mismatches: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.cases > 0
    }
}

/// Runs every oracle-overlap suite; all suites must report zero mismatches.
pub fn certify() -> Result<Vec<SuiteReport>> {
    let mut reports = Vec::new();

    // LR against naive polynomial expansion, all |ν| ≤ 4 here (the
    // acceptance suite extends to 6)
    let mut cases = 0;
    let mut bad = 0;
    for total in 0..=4u32 {
        for a in 0..=total {
            for lam in Partition::all_of(a) {
                for mu in Partition::all_of(total - a) {
                    for nu in Partition::all_of(total) {
                        cases += 1;
                        if lr_coefficient(&lam, &mu, &nu) != naive_lr(&lam, &mu, &nu)? {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    reports.push(SuiteReport {
        name: "lr",
        cases,
        mismatches: bad,
    });

    // KL against the R-polynomial route on all of S_4
    let mut cases = 0;
    let mut bad = 0;
    let mut naive = NaiveKl::new();
    let mut table = crate::kl::KlTable::new(crate::kl::DEFAULT_KL_BOUND);
    let s4 = all_permutations(4);
    for x in &s4 {
        for w in &s4 {
            cases += 1;
            if table.polynomial(x, w)? != naive.polynomial(x, w)? {
                bad += 1;
            }
        }
    }
    reports.push(SuiteReport {
        name: "kl",
        cases,
        mismatches: bad,
    });

    // symmetric-algebra DP against literal enumeration, n ≤ 2, rank ≤ 2
    let mut cases = 0;
    let mut bad = 0;
    for n in 1..=2u32 {
        for rank in 1..=2i64 {
            let space = WeightedRootSpace::new(n, rank);
            for d in 0..=2u64 {
                for (nu, fast) in space.weight_counts_at_degree(d)? {
                    cases += 1;
                    if naive_sym_mult(&nu, rank)? != fast {
                        bad += 1;
                    }
                }
            }
        }
    }
    reports.push(SuiteReport {
        name: "symalg",
        cases,
        mismatches: bad,
    });

    // dominance against exhaustive positive-root search
    let mut cases = 0;
    let mut bad = 0;
    for (a, b) in dominance_sample_pairs() {
        cases += 1;
        if dominance_geq(&a, &b) != naive_dominance(&a, &b)? {
            bad += 1;
        }
    }
    reports.push(SuiteReport {
        name: "dominance",
        cases,
        mismatches: bad,
    });

    Ok(reports)
}

fn dominance_sample_pairs() -> Vec<(EligibleWeight, EligibleWeight)> {
    let mut out = Vec::new();
    let pool1: Vec<EligibleWeight> = ["0", "e[1,1]", "e[2,1]", "e[-1,1]", "e[1,1] - e[2,1]"]
        .iter()
        .map(|s| crate::weights::parse_weight(s, 1).unwrap())
        .collect();
    for a in &pool1 {
        for b in &pool1 {
            out.push((a.clone(), b.clone()));
        }
    }
    let pool2: Vec<EligibleWeight> = ["0", "e[-1,1] - e[1,2]", "e[1,1] - e[1,2]", "e[-1,2]"]
        .iter()
        .map(|s| crate::weights::parse_weight(s, 2).unwrap())
        .collect();
    for a in &pool2 {
        for b in &pool2 {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

pub(crate) fn all_permutations(m: usize) -> Vec<PermWord> {
    fn rec(m: usize, acc: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<PermWord>) {
        if acc.len() == m {
            out.push(PermWord::new(acc.clone()).unwrap());
            return;
        }
        for v in 1..=m as u32 {
            if !used[(v - 1) as usize] {
                used[(v - 1) as usize] = true;
                acc.push(v);
                rec(m, acc, used, out);
                acc.pop();
                used[(v - 1) as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(m, &mut Vec::new(), &mut vec![false; m], &mut out);
    out
}
