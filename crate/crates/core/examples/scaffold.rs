//! Smallest red graphs from which a blue target can be forced, and the
//! lower bounds they give.

use ramsey_core::bounds::{best_lower_bound, min_scaffolding_size, TargetShape};
use ramsey_core::{Family, TargetPattern};

fn main() {
    for (fam, h) in [("acyclic", "P5"), ("C4", "P3"), ("C4", "P4"), ("P3+acyclic", "P9")] {
        let fam: Family = fam.parse().unwrap();
        let h: TargetPattern = h.parse().unwrap();
        match min_scaffolding_size(&fam, h, 8) {
            Some((m, cert)) => {
                cert.verify().expect("certificate checks out");
                let copy: Vec<String> = cert.forced_copy.iter().map(|e| e.to_string()).collect();
                println!("{fam} / {h}: {m} red edges, forced copy {}", copy.join(" "));
            }
            None => println!("{fam} / {h}: none within 8 edges"),
        }
    }
    for ell in [4u32, 8, 12] {
        let b = best_lower_bound(3, TargetShape::of(TargetPattern::p(ell + 1)));
        println!("P4 vs P{}: at least {} rounds ({})", ell + 1, b.rounds(), b.name);
    }
}
