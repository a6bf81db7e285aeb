//! Polynomial functions on `Z/p^k` through their Carlitz expansions, and the
//! group `Pgr(Z/p^k)` of polynomial permutations.

mod counting;
mod enumerate;
mod generators;
mod jet;
mod membership;
mod p2;
mod reduction;
mod rivest;

pub use counting::{
    factor_order, pgr_formula_value, pgr_order, pgr_order_enumerated, pgr_order_formula,
    FactorOrder, OrderMethod, PgrOrder,
};
pub use enumerate::{
    enumerate_polynomial_functions, jet_space_size, jets, Gates, PolyFunctionCensus,
};
pub use generators::{chain_order, crt_lift, pgr_generators, small_generating_set};
pub use jet::{level_modulus, CarlitzJet};
pub use membership::{is_polynomial_function, jet_of_table};
pub use p2::{
    all_triples, p2_triple_of, random_triple, semidirect_multiply, triple_group_order,
    verify_p2_isomorphism, P2Report, P2Triple, VerifyMode,
};
pub use reduction::{normalize_generator, reduce_permutation};
pub use rivest::rivest_is_permutation;
