//! Weyl groups as finitely supported signed permutations, together with the
//! block, integrality and facet data that the multiplicity formulas need.

mod descriptor;
mod element;
mod facets;
mod subsystem;

pub use descriptor::{coxeter_isomorphic, CoxeterComponent, CoxeterDescriptor};
pub use element::{format_word, longest_element, WeylElement};
pub use facets::{
    antidominant_representative, facet_signature, same_facet, FacetSignature, Sign,
};
pub use subsystem::{
    dot_stabilizer, integral_subsystem, is_dot_regular, limit_descriptor, same_block,
    stable_level, IntegralSubsystem,
};

pub(crate) use facets::antidominant_in;
pub(crate) use subsystem::{integral_subsystem_at, subsystem_from_positive};
