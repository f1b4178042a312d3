//! Explore every Painter reply sequence against a strategy and check its bound.

use ramsey_core::harness::certify;
use ramsey_core::BuilderSpec;

fn main() {
    for name in ["p3-path:10", "p3-cycle:7", "c4-path:5", "p4-path:12"] {
        let spec: BuilderSpec = name.parse().unwrap();
        let r = certify(&spec);
        println!(
            "{name:<12} bound {:>3}  worst {:>3}  leaves {:>7}  {}",
            r.claimed_bound,
            r.worst_rounds,
            r.leaves,
            if r.passed() { "ok" } else { "FAILED" }
        );
    }
}
