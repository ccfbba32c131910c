//! The headline multiplicity computations: simple multiplicities of
//! standard modules, parabolic Verma modules, ψ-filtration layers, standard
//! filtrations of injectives (BGG reciprocity), socle filtrations of tensor
//! injectives and their large-annihilator duals.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::kl::{verma_multiplicity_at_rank, DEFAULT_KL_BOUND};
use crate::partitions::{lr_coefficient, Partition};
use crate::symalg::WeightedRootSpace;
use crate::weights::{class_members, EligibleWeight, Half};
use crate::weyl::linked;

/// An n-tuple of partitions, the label set of simple tensor modules.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct PartitionTuple {
    parts: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(parts: Vec<Partition>) -> PartitionTuple {
        assert!(!parts.is_empty(), "tuple length is the block count, ≥ 1");
        PartitionTuple { parts }
    }

    pub fn empty(n: usize) -> PartitionTuple {
        PartitionTuple::new(vec![Partition::empty(); n])
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True iff every component is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    pub fn components(&self) -> &[Partition] {
        &self.parts
    }

    pub fn total_size(&self) -> u64 {
        self.parts.iter().map(|p| p.size()).sum()
    }

    pub fn render(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parses `[2,1];[];[3]` into a tuple of the given length.
    pub fn parse(text: &str, n: usize) -> Result<PartitionTuple> {
        let pieces: Vec<&str> = text.split(';').collect();
        if pieces.len() != n {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected {n} partitions separated by ';', got {}", pieces.len()),
            });
        }
        let parts = pieces
            .iter()
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<Partition>>>()?;
        Ok(PartitionTuple::new(parts))
    }
}

/// A finite weight-indexed multiplicity table with truncation metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub base: EligibleWeight,
    pub entries: BTreeMap<EligibleWeight, u64>,
    pub rank_used: i64,
    pub stabilized: bool,
}

/// One layer of a dual-Verma flag of a ψ-filtration layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagLayer {
    pub weight: EligibleWeight,
    pub multiplicity: u64,
    pub psi_degree: Half,
}

/// `[A(λ) : L(μ)]`, the multiplicity of the simple module in the standard
/// module: `Σ_ν m(λ+ν, μ) · dim S^•(𝓡)_ν` over the weights ν of the
/// symmetric algebra with `ψ(ν) = ψ(μ) − ψ(λ)`, evaluated at the canonical
/// truncation rank (one past the larger eligibility rank of the inputs).
pub fn standard_simple_multiplicity(
    lambda: &EligibleWeight,
    mu: &EligibleWeight,
) -> Result<u64> {
    let rank = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
    standard_simple_multiplicity_at_rank(lambda, mu, rank)
}

/// The same sum with the truncation rank pinned explicitly.
pub fn standard_simple_multiplicity_at_rank(
    lambda: &EligibleWeight,
    mu: &EligibleWeight,
    rank: i64,
) -> Result<u64> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if lambda.level() != mu.level() {
        return Ok(0);
    }
    let delta_psi = mu.psi() - lambda.psi();
    let d = match delta_psi.to_int() {
        Some(v) if v <= 0 => (-v) as u64,
        _ => return Ok(0),
    };
    let space = WeightedRootSpace::new(lambda.n(), rank);
    let mut total = 0u64;
    for (nu, count) in space.weight_counts_at_degree(d)? {
        let shifted = lambda + &nu;
        // cheap linkage precheck before invoking the KL machinery
        if linked(&shifted, mu).is_none() {
            continue;
        }
        let m = verma_multiplicity_at_rank(&shifted, mu, rank, DEFAULT_KL_BOUND)?;
        if m != 0 {
            total = checked_add(total, checked_mul(m, count, "standard mult")?, "standard mult")?;
        }
    }
    Ok(total)
}

/// The dual-Verma flag of the ψ-degree-p layer of the rank-r approximation
/// to the standard module: one layer `(λ+ν, dim S^•(𝓡_r)_ν)` per symmetric-
/// algebra weight ν with `ψ(ν) = p − ψ(λ)`.
pub fn standard_psi_layer(
    lambda: &EligibleWeight,
    p: Half,
    rank: i64,
) -> Result<Vec<FlagLayer>> {
    if !lambda.is_r_eligible(rank) {
        return Err(Error::Domain(format!(
            "weight not {rank}-eligible (eligibility rank {})",
            lambda.eligibility_rank()
        )));
    }
    let depth = p - lambda.psi();
    let d = match depth.to_int() {
        Some(v) if v <= 0 => (-v) as u64,
        _ => return Ok(Vec::new()), // above the top layer, or fractional offset
    };
    let space = WeightedRootSpace::new(lambda.n(), rank);
    let mut layers = Vec::new();
    for (nu, count) in space.weight_counts_at_degree(d)? {
        if count > 0 {
            layers.push(FlagLayer {
                weight: lambda + &nu,
                multiplicity: count,
                psi_degree: p,
            });
        }
    }
    Ok(layers)
}

/// `[M_r(λ) : L(μ)]` for the rank-r parabolic Verma module: equals m(λ, μ)
/// when μ lies in the finite-Weyl dot orbit of λ, zero otherwise.
///
/// Both weights must be r-eligible; for linked weights beyond the
/// truncation rank the theory gives no closed form and `NotCovered` is
/// returned instead of a guess.
pub fn parabolic_verma_multiplicity(
    lambda: &EligibleWeight,
    mu: &EligibleWeight,
    rank: i64,
) -> Result<u64> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if !lambda.is_r_eligible(rank) {
        return Err(Error::Domain(format!(
            "highest weight not {rank}-eligible (eligibility rank {})",
            lambda.eligibility_rank()
        )));
    }
    if !mu.is_r_eligible(rank) {
        return Err(Error::NotCovered(format!(
            "[M_r(λ):L(μ)] with μ of eligibility rank {} > r = {rank}; \
             only r-eligible constituents have a closed form",
            mu.eligibility_rank()
        )));
    }
    verma_multiplicity_at_rank(lambda, mu, rank + 1, DEFAULT_KL_BOUND)
}

/// The standard filtration of the injective envelope I(λ):
/// `(I(λ) : A(μ)) = [M_s(μ) : L_s(λ)] = m(μ, λ)`, supported on the
/// finite-Weyl dot orbit above λ. The table always contains λ with
/// multiplicity 1.
pub fn injective_standard_flag(lambda: &EligibleWeight) -> Result<MultiplicityTable> {
    let rank = lambda.eligibility_rank() + 1;
    let mut entries = BTreeMap::new();
    for mu in dot_up_set(lambda, rank) {
        let m = verma_multiplicity_at_rank(&mu, lambda, rank, DEFAULT_KL_BOUND)?;
        if m != 0 {
            entries.insert(mu, m);
        }
    }
    Ok(MultiplicityTable {
        base: lambda.clone(),
        entries,
        rank_used: rank,
        stabilized: true, // Verma multiplicities are rank-stable
    })
}

/// All weights of the finite-Weyl dot orbit of λ (within the rank box)
/// that dominate λ, found by breadth-first search through raising
/// transpositions within ψ-classes.
fn dot_up_set(lambda: &EligibleWeight, rank: i64) -> Vec<EligibleWeight> {
    let n = lambda.n();
    let mut seen: BTreeSet<EligibleWeight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(cur) = queue.pop_front() {
        for c in 0..=n {
            let members = class_members(n, c, rank);
            for a in 0..members.len() {
                for b in a + 1..members.len() {
                    let (pa, pb) = (members[a], members[b]);
                    let (fa, fb) = (cur.rho_shift(pa), cur.rho_shift(pb));
                    if fa >= fb {
                        continue; // swapping would not raise
                    }
                    let mut next = cur.clone();
                    next.add_finite(pa, fb - fa);
                    next.add_finite(pb, fa - fb);
                    if !seen.contains(&next) {
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// A table indexed by pairs of partition tuples.
pub type TupleTable = BTreeMap<(PartitionTuple, PartitionTuple), u64>;

/// The socle filtration layers of the tensor injective labelled by a pair
/// of partition tuples. Layer `r+1` maps `(λ', μ')` to
/// `Σ_{γ tuples, Σ|γ_k| = r} Π_k c^{λ_k}_{λ'_k γ_k} c^{μ_k}_{μ'_k γ_k}`;
/// trailing empty layers are omitted.
pub fn socle_layers_tensor_injective(
    lambda: &PartitionTuple,
    mu: &PartitionTuple,
) -> Result<Vec<(usize, TupleTable)>> {
    assert_eq!(lambda.len(), mu.len(), "tuple lengths differ");
    let n = lambda.len();
    // per block: (|γ|, λ'_k, μ'_k) → Σ_γ c·c
    let mut per_block: Vec<BTreeMap<(u64, Partition, Partition), u64>> = Vec::new();
    for k in 0..n {
        let mut table: BTreeMap<(u64, Partition, Partition), u64> = BTreeMap::new();
        let lk = &lambda.components()[k];
        let mk = &mu.components()[k];
        let max_gamma = lk.size().min(mk.size()) as u32;
        for g in 0..=max_gamma {
            for gamma in Partition::all_of(g) {
                if !gamma.contained_in(lk) || !gamma.contained_in(mk) {
                    continue;
                }
                for lp in lk.sub_diagrams_of_size((lk.size() - g as u64) as u32) {
                    let c1 = lr_coefficient(&lp, &gamma, lk);
                    if c1 == 0 {
                        continue;
                    }
                    for mp in mk.sub_diagrams_of_size((mk.size() - g as u64) as u32) {
                        let c2 = lr_coefficient(&mp, &gamma, mk);
                        if c2 == 0 {
                            continue;
                        }
                        let slot = table.entry((g as u64, lp.clone(), mp)).or_insert(0);
                        *slot = checked_add(*slot, checked_mul(c1, c2, "socle")?, "socle")?;
                    }
                }
            }
        }
        per_block.push(table);
    }
    // convolve blocks, grouping by total |γ|
    let mut acc: BTreeMap<(u64, Vec<Partition>, Vec<Partition>), u64> = BTreeMap::new();
    acc.insert((0, Vec::new(), Vec::new()), 1);
    for table in &per_block {
        let mut next: BTreeMap<(u64, Vec<Partition>, Vec<Partition>), u64> = BTreeMap::new();
        for ((g0, lps, mps), &c0) in &acc {
            for ((g, lp, mp), &c) in table {
                let mut lps2 = lps.clone();
                let mut mps2 = mps.clone();
                lps2.push(lp.clone());
                mps2.push(mp.clone());
                let slot = next.entry((g0 + g, lps2, mps2)).or_insert(0);
                *slot = checked_add(*slot, checked_mul(c0, c, "socle")?, "socle")?;
            }
        }
        acc = next;
    }
    // socle layer r+1 collects the γ-tuples of total size r
    let mut layers: BTreeMap<usize, BTreeMap<(PartitionTuple, PartitionTuple), u64>> =
        BTreeMap::new();
    for ((g, lps, mps), c) in acc {
        layers
            .entry(g as usize + 1)
            .or_default()
            .insert((PartitionTuple::new(lps), PartitionTuple::new(mps)), c);
    }
    Ok(layers.into_iter().collect())
}

/// The decomposition of the large-annihilator dual of a tensor injective
/// into tensor injectives:
/// `(α, β) ↦ Σ_γ Π_k c^{λ_k}_{α_k γ_k} c^{μ_k}_{β_k γ_k}`.
pub fn la_dual_decomposition(
    lambda: &PartitionTuple,
    mu: &PartitionTuple,
) -> Result<TupleTable> {
    let layers = socle_layers_tensor_injective(lambda, mu)?;
    let mut out: TupleTable = BTreeMap::new();
    for (_, table) in layers {
        for (key, c) in table {
            let slot = out.entry(key).or_insert(0);
            *slot = checked_add(*slot, c, "la dual")?;
        }
    }
    Ok(out)
}
