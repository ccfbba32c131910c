//! The interval-finite order on eligible weights, its one-step covering
//! relation, interval enumeration with the chain-length bound, block
//! classification and linkage chains.
//!
//! The order is the reflexive-transitive closure of two kinds of downward
//! steps inside the rank-(r+1) truncation: dot-reflections through simple
//! finite roots that descend, and shifts by ψ-negative roots.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{class_members, dominance_geq, EligibleWeight, Root, WeightIndex};
use crate::weyl::{dot, leq_fin, WeylElement};

/// The kind of a one-step edge `lower ◁ upper`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum EdgeKind {
    /// `lower = s_α · upper ≺ upper` for a simple finite root α.
    DotReflection,
    /// `lower = upper + ν` for a root ν with ψ(ν) < 0.
    PsiNegativeRoot,
}

/// A covering-step edge of the order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PosetEdge {
    pub lower: EligibleWeight,
    pub upper: EligibleWeight,
    pub kind: EdgeKind,
}

/// All one-step predecessors of λ within the rank-r truncation: descending
/// dot-reflections through the simple roots of the rank-(r+1) finite factor
/// and shifts by the ψ-negative roots of the rank-(r+1) box.
pub fn triangle_down(lambda: &EligibleWeight, rank: i64) -> Result<Vec<PosetEdge>> {
    if !lambda.is_r_eligible(rank) {
        return Err(Error::Domain(format!(
            "weight not {rank}-eligible (eligibility rank {})",
            lambda.eligibility_rank()
        )));
    }
    Ok(down_edges(lambda, rank + 1))
}

/// One-step predecessors using roots and reflections of the fixed rank-`r`
/// box. Box-eligible inputs stay box-eligible, so iterated searches remain
/// inside one finite factor.
///
/// Reflection steps range over all finite roots of the box, not only the
/// simple ones: inside a dot orbit, simple descents only generate the weak
/// order, while the order's defining clause `μ = σ·(λ+ν) ⪯ λ` needs the
/// full Bruhat down-set.
fn down_edges(lambda: &EligibleWeight, r: i64) -> Vec<PosetEdge> {
    debug_assert!(lambda.is_r_eligible(r));
    let n = lambda.n();
    let mut edges = Vec::new();
    // (i) descending reflections through finite roots of the box
    for c in 0..=n {
        let members = class_members(n, c, r);
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let alpha = Root::new(members[a], members[b]);
                if lambda.rho_shift(members[a]) > lambda.rho_shift(members[b]) {
                    let lower = dot(&WeylElement::reflection(&alpha), lambda);
                    edges.push(PosetEdge {
                        lower,
                        upper: lambda.clone(),
                        kind: EdgeKind::DotReflection,
                    });
                }
            }
        }
    }
    // (ii) every ψ-negative root of the box
    let box_indices: Vec<WeightIndex> = (1..=n)
        .flat_map(|k| {
            (-r..=r)
                .filter(|&i| i != 0)
                .map(move |i| WeightIndex::new(i, k))
        })
        .collect();
    for &plus in &box_indices {
        for &minus in &box_indices {
            if plus == minus {
                continue;
            }
            let nu = Root::new(plus, minus);
            if nu.psi(n) < 0 {
                edges.push(PosetEdge {
                    lower: lambda.add_root(&nu),
                    upper: lambda.clone(),
                    kind: EdgeKind::PsiNegativeRoot,
                });
            }
        }
    }
    edges
}

/// The block tag of a weight: the pair (level vector, total finite
/// coefficient sum). Two weights lie in the same block of the category iff
/// their tags agree (the root lattice is exactly the zero-sum finite part).
pub fn block_class(lambda: &EligibleWeight) -> (Vec<i64>, i64) {
    (lambda.level().to_vec(), lambda.finite_total())
}

/// The chain-length bound `ψ(λ−μ) + (λ−μ, ρ_{r+1})` from the interval-
/// finiteness argument; `None` when the difference is not in the root
/// lattice.
///
/// ρ here is the sum of positive roots of the whole rank-(r+1) box algebra,
/// which pairs ≥ 2 with every positive box root, so each downward step
/// spends budget; the finite-root factor's ρ pairs negatively with some
/// infinite roots and would not bound chains.
pub fn chain_bound(lambda: &EligibleWeight, mu: &EligibleWeight, rank: i64) -> Option<u64> {
    if block_class(lambda) != block_class(mu) {
        return None;
    }
    let delta = lambda - mu;
    let psi = delta.psi().to_int()?;
    let bound = psi + rho_box_pairing(&delta, rank + 1);
    u64::try_from(bound).ok()
}

/// Pairing of a zero-level difference with the sum of positive roots of the
/// full rank-`r` box algebra.
fn rho_box_pairing(delta: &EligibleWeight, r: i64) -> i64 {
    let n = delta.n();
    let total = 2 * r * n as i64;
    let mut box_indices: Vec<WeightIndex> = (1..=n)
        .flat_map(|k| {
            (-r..=r)
                .filter(|&i| i != 0)
                .map(move |i| WeightIndex::new(i, k))
        })
        .collect();
    box_indices.sort();
    let mut acc = 0i64;
    for (t, p) in box_indices.iter().enumerate() {
        let coeff = total + 1 - 2 * (t as i64 + 1);
        acc += coeff * delta.finite_coeff(*p);
    }
    acc
}

/// The order `μ ≤ λ`: reflexive, otherwise a bounded downward search along
/// `triangle_down` steps pruned by the dominance box between μ and λ.
pub fn leq_order(mu: &EligibleWeight, lambda: &EligibleWeight) -> Result<bool> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if mu == lambda {
        return Ok(true);
    }
    if block_class(lambda) != block_class(mu) || !dominance_geq(lambda, mu) {
        return Ok(false);
    }
    let rank = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
    let Some(depth_cap) = chain_bound(lambda, mu, rank) else {
        return Ok(false);
    };
    let mut seen: BTreeSet<EligibleWeight> = BTreeSet::new();
    let mut frontier = vec![lambda.clone()];
    seen.insert(lambda.clone());
    for _ in 0..depth_cap {
        let mut next = Vec::new();
        for gamma in frontier {
            for edge in down_edges(&gamma, rank) {
                if edge.lower == *mu {
                    return Ok(true);
                }
                if dominance_geq(&edge.lower, mu) && seen.insert(edge.lower.clone()) {
                    next.push(edge.lower);
                }
            }
        }
        if next.is_empty() {
            return Ok(false);
        }
        frontier = next;
    }
    Ok(false)
}

/// The set reachable from λ by at most `depth` downward steps, pruned to
/// the dominance sandwich over μ. Exposed so saturation of the search at
/// the chain-length bound can be checked directly.
pub fn reachable_down(
    lambda: &EligibleWeight,
    mu: &EligibleWeight,
    depth: u64,
) -> Result<BTreeSet<EligibleWeight>> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    let rank = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
    let mut seen: BTreeSet<EligibleWeight> = BTreeSet::new();
    seen.insert(lambda.clone());
    let mut frontier = vec![lambda.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for gamma in frontier {
            for edge in down_edges(&gamma, rank) {
                if dominance_geq(&edge.lower, mu) && seen.insert(edge.lower.clone()) {
                    next.push(edge.lower);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(seen)
}

/// The interval `{γ : μ ≤ γ ≤ λ}`; empty when the endpoints are unrelated.
///
/// A downward search from λ pruned by dominance over μ collects the
/// candidates and the edges among them; γ is kept iff μ is reachable from
/// it within the collected subgraph.
pub fn interval(mu: &EligibleWeight, lambda: &EligibleWeight) -> Result<Vec<EligibleWeight>> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if mu == lambda {
        return Ok(vec![lambda.clone()]);
    }
    if block_class(lambda) != block_class(mu) || !dominance_geq(lambda, mu) {
        return Ok(Vec::new());
    }
    let rank = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
    let Some(depth_cap) = chain_bound(lambda, mu, rank) else {
        return Ok(Vec::new());
    };
    // collect everything reachable downward from λ within the dominance box
    let mut depth: BTreeMap<EligibleWeight, u64> = BTreeMap::new();
    let mut parents: BTreeMap<EligibleWeight, Vec<EligibleWeight>> = BTreeMap::new();
    depth.insert(lambda.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(lambda.clone());
    while let Some(gamma) = queue.pop_front() {
        let d = depth[&gamma];
        if d == depth_cap {
            continue;
        }
        for edge in down_edges(&gamma, rank) {
            if !dominance_geq(&edge.lower, mu) {
                continue;
            }
            parents
                .entry(edge.lower.clone())
                .or_default()
                .push(gamma.clone());
            if !depth.contains_key(&edge.lower) {
                depth.insert(edge.lower.clone(), d + 1);
                queue.push_back(edge.lower);
            }
        }
    }
    if !depth.contains_key(mu) {
        return Ok(Vec::new());
    }
    // ascend from μ through recorded parents to find the interval members
    let mut kept: BTreeSet<EligibleWeight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    kept.insert(mu.clone());
    queue.push_back(mu.clone());
    while let Some(gamma) = queue.pop_front() {
        for parent in parents.get(&gamma).cloned().unwrap_or_default() {
            if kept.insert(parent.clone()) {
                queue.push_back(parent);
            }
        }
    }
    Ok(kept.into_iter().collect())
}

/// A chain `λ = λ_1, …, λ_m = μ` within a block in which consecutive
/// weights differ by a root of ψ-degree ±1, so that one of each consecutive
/// pair indexes a simple constituent of the other's standard module.
///
/// The difference is peeled one coefficient unit at a time: a unit is
/// transported from a surplus index to a deficit index along a path of
/// ψ-adjacent classes, one root step per hop.
pub fn linkage_chain(
    lambda: &EligibleWeight,
    mu: &EligibleWeight,
) -> Result<Vec<EligibleWeight>> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if block_class(lambda) != block_class(mu) {
        return Err(Error::Domain(
            "weights lie in different blocks; no linkage chain exists".into(),
        ));
    }
    let n = lambda.n();
    let mut chain = vec![lambda.clone()];
    let mut current = lambda.clone();
    let mut guard = 0usize;
    while &current != mu {
        guard += 1;
        assert!(guard < 100_000, "linkage chain failed to converge");
        let delta = &current - mu;
        // surplus and deficit indices exist because the total sum is zero
        let source = *delta
            .finite_support()
            .find(|(_, &c)| c > 0)
            .map(|(p, _)| p)
            .expect("nonzero zero-sum difference has a surplus");
        let dest = *delta
            .finite_support()
            .find(|(_, &c)| c < 0)
            .map(|(p, _)| p)
            .expect("nonzero zero-sum difference has a deficit");
        for (from, to) in transport_hops(n, source, dest) {
            current = current.add_root(&Root::new(to, from));
            chain.push(current.clone());
        }
    }
    Ok(chain)
}

/// A path of index hops from `source` to `dest` in which consecutive
/// indices lie in ψ-adjacent classes, so every hop is a root of ψ-degree
/// ±1. Equal classes detour through a neighbouring class.
fn transport_hops(n: u32, source: WeightIndex, dest: WeightIndex) -> Vec<(WeightIndex, WeightIndex)> {
    let cs = crate::weights::psi_class(source);
    let cd = crate::weights::psi_class(dest);
    let reach = source.i.abs().max(dest.i.abs()) + 1;
    let mut stations = vec![source];
    if cs == cd {
        let via = if cs < n { cs + 1 } else { cs - 1 };
        stations.push(hub_index(n, via, reach, &[source, dest]));
    } else {
        let step: i64 = if cd > cs { 1 } else { -1 };
        let mut c = cs as i64 + step;
        while c != cd as i64 {
            stations.push(hub_index(n, c as u32, reach, &[source, dest]));
            c += step;
        }
    }
    stations.push(dest);
    stations.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Some index of ψ-class `c` within the rank box, avoiding `taken`.
fn hub_index(n: u32, c: u32, rank: i64, taken: &[WeightIndex]) -> WeightIndex {
    *class_members(n, c, rank)
        .iter()
        .find(|q| !taken.contains(q))
        .expect("boxes are large enough to route around two indices")
}

/// True iff consecutive chain entries are related through a standard
/// module: the lower one is a constituent weight of the upper one's
/// standard module. Used to certify linkage chains.
pub fn chain_step_certified(upper: &EligibleWeight, lower: &EligibleWeight) -> Result<bool> {
    let up = crate::olamult::standard_simple_multiplicity(upper, lower)?;
    if up > 0 {
        return Ok(true);
    }
    let down = crate::olamult::standard_simple_multiplicity(lower, upper)?;
    Ok(down > 0)
}

/// `≤_fin` re-export point for consumers that think in poset terms.
pub fn leq_fin_order(mu: &EligibleWeight, lambda: &EligibleWeight) -> bool {
    leq_fin(mu, lambda)
}
