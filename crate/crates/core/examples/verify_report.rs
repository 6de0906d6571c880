//! Runs the whole comparison harness and prints one line per identity.
//!
//! ```text
//! cargo run --release --example verify_report -- 4
//! ```

use std::time::Instant;

use osp_macdonald::weylchar::verify::{run_suite, Status, Suite};

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let start = Instant::now();
    let report = run_suite(Suite::All, max_n);
    for e in &report.entries {
        let extra = match e.status {
            Status::EqualUpTo => format!(" ({})", e.transform),
            Status::KnownErratum | Status::Mismatch => format!(" [{} diff terms]", e.diff.len()),
            Status::Equal => String::new(),
        };
        println!("{:<14} {:>3}  {}{}", e.status.to_string(), e.n, e.identity, extra);
    }
    println!();
    for s in [Status::Equal, Status::EqualUpTo, Status::KnownErratum, Status::Mismatch] {
        println!("{s}: {}", report.count(s));
    }
    println!("elapsed: {:.2?}", start.elapsed());
}
