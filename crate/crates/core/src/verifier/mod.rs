//! Front-end plumbing: configuration files, sweeps over deletion sets up to
//! coordinate symmetry, assertions over reports, and the reproduction
//! presets.

mod canonical;
mod checks;
mod config;
pub mod presets;
mod sweep;

pub use canonical::{canonical_configuration, canonical_points, facet_incidence, permutations};
pub use checks::{evaluate_all, Check, CheckOutcome, Field, Named, Op};
pub use config::{load_config, parse_config, ConfigFile};
pub use presets::{reproduce, Expectation, PresetOutcome, PRESETS};
pub use sweep::{
    cap_from_env, enumerate, run_sweep, threads_from_env, write_jsonl, Enumeration, Predicate, ResultRecord,
    SweepClass, SweepOutcome, SweepSpec, DEFAULT_CAP,
};
