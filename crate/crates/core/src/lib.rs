//! Exact combinatorics of multisegments.
//!
//! * [`Exponent`], [`Segment`], [`Multisegment`]: exact points, segments and
//!   their canonical text/JSON forms.
//! * [`poset`]: elementary operations, the order they generate, downsets,
//!   enumeration by support and Hasse diagrams.
//! * [`mwa`]: the Moeglin–Waldspurger algorithm for the dual multisegment,
//!   with tie-break policies, traces and the (P)/(P') validators.
//! * [`RingElement`]: integer combinations of monomials with multiset-union
//!   product, twists, degree and dominant monomials.
//! * [`speh`]: rectangle multisegments, the determinantal character
//!   `F(l, k)`, the condensation identity and the lemma checks.
//! * [`verify`]: exhaustive corpora and the named verifier suites.
//!
//! ```
//! use spehlab::{mwa_dual, Multisegment};
//!
//! let m: Multisegment = "(0..2)".parse().unwrap();
//! assert_eq!(mwa_dual(&m).to_string(), "(0..0)+(1..1)+(2..2)");
//! ```

pub mod cli;
pub mod error;
pub mod exponent;
pub mod multiseg;
pub mod mwa;
pub mod poset;
pub mod report;
pub mod ring;
pub mod segment;
pub mod speh;
mod text;
pub mod verify;

pub use error::{Error, Result};
pub use exponent::Exponent;
pub use multiseg::{Multisegment, PointMultiset, Stats};
pub use mwa::{check_p, check_p_prime, mwa_dual, mwa_dual_traced, mwa_dual_with_choices, PCheck};
pub use poset::{downset, enumerate_with_support, hasse, is_leq, successors_down, Hasse, Poset};
pub use report::{Status, VerificationReport};
pub use ring::RingElement;
pub use segment::{seg_from_begin, seg_from_end, Line, Point, Segment};
pub use speh::{bar_u, char_f, rect, SpehParams};
pub use text::parse_points;
