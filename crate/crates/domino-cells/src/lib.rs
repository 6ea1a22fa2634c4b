//! File formats, Graphviz output, the Kazhdan–Lusztig basis cache and the
//! verification suites behind the `domino-cells` command.

pub mod caps;
pub mod dot;
pub mod format;
pub mod kl_cache;
pub mod verify;
