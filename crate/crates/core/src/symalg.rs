//! Weight multiplicities of the symmetric algebra of the multiplicity-
//! weighted negative root space: the root space for each ψ-negative root α
//! comes in `2^{|ψ(α)|} − 1` copies, and the weight multiplicity of the
//! symmetric algebra at ν counts multisets of colored roots summing to ν.
//!
//! These counts weight the Verma flags of the ψ-filtration layers of
//! standard modules, so everything downstream of the standard-multiplicity
//! formula funnels through here.

use std::collections::BTreeMap;

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::weights::{EligibleWeight, Root, WeightIndex};

/// The rank-r truncation of the weighted root space: every root with
/// ψ(α) ≤ −1 and both indices in the box `±[r] × [n]`, together with its
/// color multiplicity `2^{|ψ(α)|} − 1`.
#[derive(Clone, Debug)]
pub struct WeightedRootSpace {
    n: u32,
    rank: i64,
    entries: Vec<(Root, i64, u64)>, // (root, ψ(root), multiplicity)
}

impl WeightedRootSpace {
    pub fn new(n: u32, rank: i64) -> WeightedRootSpace {
        assert!(n >= 1 && rank >= 0);
        let mut entries = Vec::new();
        let box_indices: Vec<WeightIndex> = (1..=n)
            .flat_map(|k| {
                (-rank..=rank)
                    .filter(|&i| i != 0)
                    .map(move |i| WeightIndex::new(i, k))
            })
            .collect();
        for &plus in &box_indices {
            for &minus in &box_indices {
                if plus == minus {
                    continue;
                }
                let root = Root::new(plus, minus);
                let psi = root.psi(n);
                if psi <= -1 {
                    entries.push((root, psi, r_multiplicity_from_psi(psi)));
                }
            }
        }
        // DP processes roots by (ψ-degree, index pair)
        entries.sort_by_key(|(root, psi, _)| (*psi, root.plus, root.minus));
        WeightedRootSpace { n, rank, entries }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn entries(&self) -> &[(Root, i64, u64)] {
        &self.entries
    }

    /// Weight-indexed multiset counts at exact ψ-degree `−d`, by convolving
    /// each root's bounded geometric series into a running table.
    ///
    /// Entry `ν ↦ m` says: there are `m` multisets of colored roots from
    /// this space with coefficient sum ν and `ψ(ν) = −d`.
    pub fn weight_counts_at_degree(&self, d: u64) -> Result<BTreeMap<EligibleWeight, u64>> {
        // state: weight → count, graded by spent ψ-budget
        let mut table: BTreeMap<EligibleWeight, u64> = BTreeMap::new();
        table.insert(EligibleWeight::zero(self.n), 1);
        for (root, psi, mult) in &self.entries {
            let step = (-psi) as u64;
            let root_weight = root.as_weight(self.n);
            let mut next: BTreeMap<EligibleWeight, u64> = BTreeMap::new();
            for (nu, &count) in &table {
                let spent = (-nu.psi().to_int().expect("root sums have integral ψ")) as u64;
                let mut shifted = nu.clone();
                let mut j = 0u64;
                loop {
                    let ways = checked_mul(count, multiset_count(*mult, j)?, "sym weights")?;
                    let slot = next.entry(shifted.clone()).or_insert(0);
                    *slot = checked_add(*slot, ways, "sym weights")?;
                    j += 1;
                    if spent + j * step > d {
                        break;
                    }
                    shifted = shifted.checked_add(&root_weight);
                }
            }
            table = next;
        }
        table.retain(|nu, _| (-nu.psi().to_int().unwrap()) as u64 == d);
        Ok(table)
    }
}

fn r_multiplicity_from_psi(psi: i64) -> u64 {
    debug_assert!(psi <= -1);
    let depth = (-psi) as u32;
    2u64.checked_pow(depth)
        .map(|p| p - 1)
        .expect("ψ-depth within u64 range")
}

/// Multiplicity of a root in the weighted root space:
/// `2^{|ψ(α)|} − 1` when ψ(α) ≤ −1, zero otherwise.
pub fn r_multiplicity(root: &Root, n: u32) -> u64 {
    let psi = root.psi(n);
    if psi <= -1 {
        r_multiplicity_from_psi(psi)
    } else {
        0
    }
}

/// Multisets of size `j` over `m` colors: C(m + j − 1, j).
fn multiset_count(m: u64, j: u64) -> Result<u64> {
    if j == 0 {
        return Ok(1);
    }
    if m == 0 {
        return Ok(0);
    }
    let mut acc = 1u64;
    for t in 0..j {
        acc = checked_mul(acc, m + t, "binomial")?;
        acc /= t + 1; // exact: product of t+1 consecutive integers
    }
    Ok(acc)
}

/// The weight multiplicity `dim S^•(𝓡_r)_ν`: the number of multisets of
/// colored roots from the rank-r weighted root space summing to ν. The sign
/// convention has ν a sum of ψ-negative roots, so ν ⪯ 0.
pub fn sym_weight_mult(nu: &EligibleWeight, rank: i64) -> Result<u64> {
    if nu.level().iter().any(|&a| a != 0) {
        return Err(Error::Domain(
            "symmetric-algebra weights have zero level".into(),
        ));
    }
    if !nu.is_r_eligible(rank) {
        return Err(Error::Domain(format!(
            "weight not {rank}-eligible (eligibility rank {})",
            nu.eligibility_rank()
        )));
    }
    let d = match nu.psi().to_int() {
        Some(v) if v <= 0 => (-v) as u64,
        _ => return Ok(0), // fractional or positive ψ never occurs in the support
    };
    if d == 0 {
        return Ok(u64::from(nu.is_zero()));
    }
    let space = WeightedRootSpace::new(nu.n(), rank);
    Ok(space
        .weight_counts_at_degree(d)?
        .get(nu)
        .copied()
        .unwrap_or(0))
}

/// The ψ-degree at which ν can appear in the symmetric algebra: `−ψ(ν)`
/// when the multiplicity at the minimal sufficient rank is nonzero.
pub fn sym_support_degree(nu: &EligibleWeight) -> Result<Option<u64>> {
    let rank = nu.eligibility_rank().max(1);
    let m = sym_weight_mult(nu, rank)?;
    if m == 0 {
        Ok(None)
    } else {
        Ok(Some((-nu.psi().to_int().expect("integral")) as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::parse_weight;

    fn w(text: &str, n: u32) -> EligibleWeight {
        parse_weight(text, n).unwrap()
    }

    #[test]
    fn r_multiplicity_values() {
        // ψ = −1 → 1 color, ψ = −2 → 3 colors
        let shallow = Root::new(WeightIndex::new(-1, 1), WeightIndex::new(1, 1));
        assert_eq!(shallow.psi(1), -1);
        assert_eq!(r_multiplicity(&shallow, 1), 1);

        let deep = Root::new(WeightIndex::new(-1, 2), WeightIndex::new(1, 1));
        assert_eq!(deep.psi(2), -2);
        assert_eq!(r_multiplicity(&deep, 2), 3);

        let finite = Root::new(WeightIndex::new(1, 1), WeightIndex::new(2, 1));
        assert_eq!(r_multiplicity(&finite, 1), 0);
    }

    #[test]
    fn space_invariants() {
        let space = WeightedRootSpace::new(2, 2);
        for (root, psi, mult) in space.entries() {
            assert!(*psi <= -1);
            assert!(root.plus.i.abs() <= 2 && root.minus.i.abs() <= 2);
            assert_eq!(*mult, 2u64.pow((-psi) as u32) - 1);
        }
        // n = 1: the ψ-negative roots of the rank-r box are the r² pairs
        // (negative, positive)
        assert_eq!(WeightedRootSpace::new(1, 3).entries().len(), 9);
    }

    #[test]
    fn sym_weight_mult_worked_values() {
        // ν = 0: the empty multiset
        assert_eq!(sym_weight_mult(&w("0", 1), 1).unwrap(), 1);
        // single ψ = −1 root, one color
        assert_eq!(sym_weight_mult(&w("e[-1,1] - e[1,1]", 1), 1).unwrap(), 1);
        // the degree-2 value: {(−1↔1),(−2↔2)} and {(−1↔2),(−2↔1)}
        let nu = w("e[-1,1] - e[1,1] + e[-2,1] - e[2,1]", 1);
        assert_eq!(sym_weight_mult(&nu, 2).unwrap(), 2);
    }

    #[test]
    fn sym_weight_mult_rejects_bad_inputs() {
        assert!(sym_weight_mult(&w("w[1]", 1), 1).is_err());
        assert!(sym_weight_mult(&w("e[-2,1] - e[2,1]", 1), 1).is_err());
        // positive roots are not in the support
        assert_eq!(sym_weight_mult(&w("e[1,1] - e[-1,1]", 1), 1).unwrap(), 0);
        // fractional ψ
        assert_eq!(sym_weight_mult(&w("e[1,1] - e[2,1]", 1), 2).unwrap(), 0);
    }

    #[test]
    fn support_degree_values() {
        assert_eq!(sym_support_degree(&w("0", 1)).unwrap(), Some(0));
        assert_eq!(
            sym_support_degree(&w("e[-1,1] - e[1,1]", 1)).unwrap(),
            Some(1)
        );
        assert_eq!(sym_support_degree(&w("e[1,1] - e[-1,1]", 1)).unwrap(), None);
    }

    #[test]
    fn stabilization_in_rank_for_n1() {
        // at n = 1 every ψ-negative root has ψ = −1 and no chaining through
        // intermediate classes exists, so counts are rank-stable
        let samples = [
            "e[-1,1] - e[1,1]",
            "e[-1,1] - e[1,1] + e[-2,1] - e[2,1]",
            "2*e[-1,1] - 2*e[1,1]",
        ];
        for text in samples {
            let nu = w(text, 1);
            let r0 = nu.eligibility_rank();
            let base = sym_weight_mult(&nu, r0).unwrap();
            for r in r0 + 1..=r0 + 2 {
                assert_eq!(sym_weight_mult(&nu, r).unwrap(), base, "ν = {text}");
            }
        }
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multiset_count(3, 0).unwrap(), 1);
        assert_eq!(multiset_count(3, 1).unwrap(), 3);
        assert_eq!(multiset_count(3, 2).unwrap(), 6);
        assert_eq!(multiset_count(1, 5).unwrap(), 1);
        assert_eq!(multiset_count(0, 2).unwrap(), 0);
    }
}
