//! Exact linear combinations of special values and the identity catalog.

mod atom;
mod catalog;
mod check;
mod expr;
mod reduce;

pub use atom::{Atom, Site};
pub use catalog::{
    catalog_json, find_identity, identity_catalog, IdentityDescriptor, IdentityForm, IdentityRecord, ParamDomain,
};
pub use check::{
    check_identity_symbolic, check_record, classify_record, classify_self_recursive, FormClassification, FormResidual,
    SelfRecursion, SymbolicCheck,
};
pub use expr::{rat, LinExpr};
pub use reduce::{reduce, reduce_with, ReductionOutcome, RuleSet};
