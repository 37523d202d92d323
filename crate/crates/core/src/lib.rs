pub mod algebra;
pub mod arith;
pub mod classgroup;
pub mod cli;
pub mod constructions;
pub mod counterexample;
pub mod domain;
pub mod error;
pub mod irreducible;
pub mod lattice;
pub mod monoid;
pub mod serde_util;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/domains.md")]
    mod domains {}
    #[doc = include_str!("../../../book/src/monoids.md")]
    mod monoids {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/irreducibility.md")]
    mod irreducibility {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/counterexample.md")]
    mod counterexample {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
