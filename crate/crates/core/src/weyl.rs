//! Finite-support permutations of the weight-index set, reflections, the dot
//! action `σ · λ = σ(λ + ρ) − ρ`, and linkage.
//!
//! The Weyl group here is the group of bijections of the index set fixing a
//! cofinite subset; the finite Weyl group W(s) is the subgroup preserving
//! the ψ-value of every index (products of finite-root reflections).

use std::collections::{BTreeMap, BTreeSet};

use crate::weights::{
    dominance_geq, psi_point, EligibleWeight, Root, WeightIndex,
};

/// A finitely supported permutation of the index set. Only moved points are
/// stored; the map is a bijection of its support.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeylElement {
    moved: BTreeMap<WeightIndex, WeightIndex>,
}

impl WeylElement {
    pub fn identity() -> WeylElement {
        WeylElement::default()
    }

    /// Builds an element from an explicit assignment, dropping fixed points.
    /// Panics if the assignment is not a bijection of its support.
    pub fn from_map(map: BTreeMap<WeightIndex, WeightIndex>) -> WeylElement {
        let keys: BTreeSet<_> = map.keys().copied().collect();
        let values: BTreeSet<_> = map.values().copied().collect();
        assert_eq!(map.len(), values.len(), "assignment not injective");
        assert_eq!(keys, values, "support not permuted onto itself");
        let moved = map.into_iter().filter(|(p, q)| p != q).collect();
        WeylElement { moved }
    }

    /// The reflection associated to a root: the transposition of its two
    /// indices. `reflection(−α) = reflection(α)`.
    pub fn reflection(root: &Root) -> WeylElement {
        let mut moved = BTreeMap::new();
        moved.insert(root.plus, root.minus);
        moved.insert(root.minus, root.plus);
        WeylElement { moved }
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    pub fn apply(&self, p: WeightIndex) -> WeightIndex {
        self.moved.get(&p).copied().unwrap_or(p)
    }

    pub fn support(&self) -> impl Iterator<Item = &WeightIndex> {
        self.moved.keys()
    }

    /// Largest `|i|` among moved indices; 0 for the identity.
    pub fn support_rank(&self) -> i64 {
        self.moved.keys().map(|p| p.i.abs()).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            moved: self.moved.iter().map(|(p, q)| (*q, *p)).collect(),
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut moved = BTreeMap::new();
        let support: BTreeSet<WeightIndex> = self
            .moved
            .keys()
            .chain(other.moved.keys())
            .copied()
            .collect();
        for p in support {
            let q = self.apply(other.apply(p));
            if q != p {
                moved.insert(p, q);
            }
        }
        WeylElement { moved }
    }

    /// True iff the permutation preserves the ψ-value of every index, i.e.
    /// lies in the finite Weyl group W(s).
    pub fn in_finite_weyl(&self, n: u32) -> bool {
        self.moved
            .iter()
            .all(|(p, q)| psi_point(n, *p) == psi_point(n, *q))
    }
}

/// The plain action: the coefficient of `σλ` at `p` is the coefficient of
/// `λ` at `σ⁻¹(p)`. Levels are untouched; the finite part is recomputed as
/// the deviation from each block's level background.
pub fn act(sigma: &WeylElement, lambda: &EligibleWeight) -> EligibleWeight {
    transport(sigma, lambda, |w, p| w.pairing(p), |_| 0)
}

/// The dot action `σ · λ = σ(λ + ρ) − ρ`, computed on ρ-shifted coefficient
/// functions.
pub fn dot(sigma: &WeylElement, lambda: &EligibleWeight) -> EligibleWeight {
    transport(sigma, lambda, |w, p| w.rho_shift(p), |p| -p.i)
}

/// Transports a coefficient function along σ and re-expresses the result as
/// level background plus finite corrections. `read` extracts the function
/// from λ, `background(p)` is its value at an untouched far index minus the
/// level coefficient.
fn transport(
    sigma: &WeylElement,
    lambda: &EligibleWeight,
    read: impl Fn(&EligibleWeight, WeightIndex) -> i64,
    background: impl Fn(WeightIndex) -> i64,
) -> EligibleWeight {
    let n = lambda.n();
    let inv = sigma.inverse();
    let mut out = EligibleWeight::zero(n);
    for (k, &a) in lambda.level().iter().enumerate() {
        out.add_level(k as u32 + 1, a);
    }
    let mut touched: BTreeSet<WeightIndex> = sigma.support().copied().collect();
    touched.extend(lambda.finite_support().map(|(p, _)| *p));
    for p in touched {
        let value = read(lambda, inv.apply(p));
        let level = lambda.level()[(p.k - 1) as usize];
        out.add_finite(p, value - level - background(p));
    }
    out
}

/// Searches for `σ` with `dot(σ, λ) = μ`.
///
/// Criterion: equal levels and equal multisets of ρ-shifted coefficients
/// over the common eligibility box (any witness permutation restricts to
/// the box, because the shifted functions of equal-level weights agree
/// pointwise outside it). The witness matches equal values in ≺ order
/// within each value fiber, which is class-preserving whenever any
/// class-preserving witness exists.
pub fn linked(lambda: &EligibleWeight, mu: &EligibleWeight) -> Option<WeylElement> {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if lambda.level() != mu.level() {
        return None;
    }
    let n = lambda.n();
    let rank = lambda.eligibility_rank().max(mu.eligibility_rank());
    if rank == 0 {
        return Some(WeylElement::identity());
    }
    // fibers: shifted value → positions carrying it, in ≺ order (the ≺
    // iteration makes the later in-order pairing class-preserving whenever
    // any class-preserving witness exists, because ψ-classes are ≺-segments)
    let mut box_indices: Vec<WeightIndex> = (1..=n)
        .flat_map(|k| {
            (-rank..=rank)
                .filter(|&i| i != 0)
                .map(move |i| WeightIndex::new(i, k))
        })
        .collect();
    box_indices.sort();
    let mut fibers_lambda: BTreeMap<i64, Vec<WeightIndex>> = BTreeMap::new();
    let mut fibers_mu: BTreeMap<i64, Vec<WeightIndex>> = BTreeMap::new();
    for &p in &box_indices {
        fibers_lambda.entry(lambda.rho_shift(p)).or_default().push(p);
        fibers_mu.entry(mu.rho_shift(p)).or_default().push(p);
    }
    if fibers_lambda.len() != fibers_mu.len() {
        return None;
    }
    let mut map = BTreeMap::new();
    for ((va, pa), (vb, pb)) in fibers_lambda.iter().zip(fibers_mu.iter()) {
        if va != vb || pa.len() != pb.len() {
            return None;
        }
        // σ⁻¹ sends the j-th μ-position of the fiber to the j-th λ-position
        for (source, target) in pa.iter().zip(pb.iter()) {
            map.insert(*source, *target);
        }
    }
    // positions were sorted per fiber, so the map is a bijection of the box
    let sigma = WeylElement::from_map(map);
    debug_assert_eq!(&dot(&sigma, lambda), mu);
    Some(sigma)
}

/// The order `≤_fin`: `μ ≤ λ` iff some finite-Weyl element links them by
/// the dot action and `λ ⪰ μ` in dominance. Equality is allowed.
pub fn leq_fin(mu: &EligibleWeight, lambda: &EligibleWeight) -> bool {
    if mu == lambda {
        return true;
    }
    match linked(lambda, mu) {
        Some(sigma) => sigma.in_finite_weyl(lambda.n()) && dominance_geq(lambda, mu),
        None => false,
    }
}
