//! Builds fusion products of the three-dimensional osp(1,2) module at
//! explicit points and compares with the closed-form characters.
//!
//! ```text
//! cargo run --release --example fusion_oracle -- 3
//! ```

use std::time::Instant;

use osp_macdonald::fusion::{fusion_character, parse_points, sample_point_sets, FusionError};
use osp_macdonald::weylchar::{ch_w, ch_w_sigma};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for points in sample_point_sets(n) {
        let shown: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        for twisted in [false, true] {
            let start = Instant::now();
            let ch = fusion_character(n, &points, twisted).expect("generic points");
            let closed = if twisted { ch_w_sigma(-(n as i64)) } else { ch_w(-(n as i64)) };
            println!(
                "[{}] twisted={twisted:<5} dim {} {} {:.2?}",
                shown.join(","),
                ch.eval_at_one(),
                if ch == closed { "matches" } else { "DIFFERS" },
                start.elapsed()
            );
        }
    }
    // equal squares collapse the twisted filtration
    let bad = parse_points("1,-1").unwrap();
    match fusion_character(2, &bad, true) {
        Err(FusionError::NotCyclic { dimension, expected }) => {
            println!("1,-1 twisted: cyclic span {dimension} of {expected}")
        }
        other => println!("1,-1 twisted: {other:?}"),
    }
}
