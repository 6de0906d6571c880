//! Every alcove walk for one target, with its statistics and whether it
//! survives each specialization.
//!
//! ```text
//! cargo run --example alcove_walks -- -2
//! ```

use osp_macdonald::walks::{enumerate_walks, hword_from_stats, leg, legprime_shifted, survives, traverse, x_weight};
use osp_macdonald::{Family, Specialization};

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(-2);
    let walks = enumerate_walks(n);
    println!("n = {n}: {} walks", walks.len());
    println!("{:<10} {:>3} {:>2} {:<10} {:>4} {:>5}  survives", "mask", "wt", "d", "h", "leg", "leg'");
    for w in &walks {
        let s = traverse(w).expect("walk of the right length");
        let h = hword_from_stats(&s, n.signum());
        assert_eq!(x_weight(&h), s.wt());
        let mut kept = Vec::new();
        for family in Family::ALL {
            for spec in Specialization::ALL {
                if survives(&s, family, spec) {
                    kept.push(format!("{family}/{spec}"));
                }
            }
        }
        println!(
            "{:<10} {:>3} {:>2} {:<10} {:>4} {:>5}  {}",
            w.mask_string(),
            s.wt(),
            s.d(),
            h.to_string_compact(),
            leg(&h),
            legprime_shifted(&h),
            kept.join(" ")
        );
    }
}
