//! Agreement analysis of interval-valued survey data.
//!
//! Crisp intervals from several participants are combined into a Type-1
//! fuzzy set with the Interval Agreement Approach ([`iaa`]), whose membership
//! at `x` is the fraction of intervals containing `x`. The agreement ratio
//! ([`agreement`]) then summarizes how much of each agreement level survives
//! into the next one up.
//!
//! ```
//! use iaa_core::{agreement::gamma_exact, intervals::IntervalCollection};
//!
//! let responses = IntervalCollection::from_pairs(&[(2.0, 4.0), (2.5, 3.5)]).unwrap();
//! assert_eq!(gamma_exact(&responses).unwrap().gamma, 0.5);
//! ```

pub mod agreement;
pub mod cli;
pub mod error;
pub mod fuzzyset;
pub mod iaa;
pub mod intervals;
pub mod numfmt;
pub mod survey;

pub use error::{Error, Result};
