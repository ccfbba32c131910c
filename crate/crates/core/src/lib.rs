//! Combinatorial invariants of a highest weight category of
//! gl(∞)-modules built from a block-diagonal Levi subalgebra: simple
//! multiplicities of standard modules and parabolic Verma modules,
//! BGG-reciprocity tables for injective envelopes, socle filtrations and
//! large-annihilator duals of tensor injectives, the interval-finite order
//! on eligible weights, and the block decomposition.
//!
//! Everything is computed at a finite truncation rank; rank-stable
//! quantities are flagged as such, and every fast path has an independent
//! brute-force oracle in [`oracle`].

pub mod error;
pub mod kl;
pub mod olamult;
pub mod oracle;
pub mod order;
pub mod partitions;
pub mod symalg;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use kl::{kl_polynomial, verma_multiplicity, KLPolynomial, PermWord};
pub use olamult::{
    injective_standard_flag, la_dual_decomposition, parabolic_verma_multiplicity,
    socle_layers_tensor_injective, standard_psi_layer, standard_simple_multiplicity,
    FlagLayer, MultiplicityTable, PartitionTuple,
};
pub use order::{block_class, interval, leq_order, linkage_chain, triangle_down, PosetEdge};
pub use partitions::{lr_coefficient, multi_lr, schur_poly, MPoly, Partition};
pub use symalg::{r_multiplicity, sym_support_degree, sym_weight_mult, WeightedRootSpace};
pub use weights::{
    dominance_geq, parse_weight, psi_point, EligibleWeight, Half, Root, WeightIndex,
};
pub use weyl::{act, dot, leq_fin, linked, WeylElement};
