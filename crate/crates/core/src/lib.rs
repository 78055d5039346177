//! River voting with Parallel Universe Tiebreaking (PUT).
//!
//! River walks the margin graph's edges from the strongest down and keeps
//! an edge unless its target already has a parent or it would close a
//! cycle; the root of the resulting tree wins. Under PUT an alternative
//! wins if it wins under *some* ordering of equal-margin edges. This crate
//! decides PUT winners in polynomial time:
//!
//! 1. [`semiriver::semi_river`] keeps every edge that any River run could use,
//! 2. [`rspt::directed_prim`] grows a strongest-path tree from the candidate,
//! 3. [`putcheck::set_ordering`] puts the tree edges first within each margin,
//! 4. [`river::river_fast`] runs River on that ordering; the candidate wins
//!    iff it is the root.
//!
//! [`oracle::put_winners_bruteforce`] enumerates every ordering for small
//! elections and serves as ground truth.
//!
//! ```
//! use river_put::{ballots, putcheck};
//!
//! let profile = ballots::parse_profile(
//!     "alternatives: Alice, Bob, Charlie
//!      4: Alice > Bob > Charlie
//!      3: Bob > Charlie > Alice
//!      2: Bob > Alice > Charlie
//!      4: Charlie > Alice > Bob",
//! )
//! .unwrap();
//! let g = ballots::margin_graph(&profile);
//! let outcome = putcheck::river_put_winners(&g, false);
//! assert_eq!(outcome.winners, vec![0]); // Alice
//! ```

pub mod ballots;
pub mod certificate;
pub mod cli;
pub mod graph;
pub mod oracle;
pub mod putcheck;
pub mod river;
pub mod rspt;
pub mod semiriver;

pub use ballots::{margin_graph, parse_profile, MarginGraph, PreferenceProfile};
pub use graph::{DescendingOrdering, Edge, Strength, WeightedDigraph};
pub use putcheck::{constructive_check, river_put_winners, PutCertificate, PutOutcome};
pub use river::{river_fast, river_naive, RiverDiagram};
