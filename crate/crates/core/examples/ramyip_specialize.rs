//! The full Ram-Yip sum for one `n`, then its two specializations computed
//! from the rational functions and from the surviving walks.

use osp_macdonald::ramyip::{combinatorial_route, geometric_route, ramyip_sum, specialize, LegVariant};
use osp_macdonald::{Family, Specialization};

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(-1);
    for family in Family::ALL {
        println!("{family}, n = {n}");
        let sum = ramyip_sum(family, n, true).expect("within bound");
        println!("  E(x, q, v)  = {}", sum.render());
        for spec in Specialization::ALL {
            let g = geometric_route(family, n, spec).expect("limit exists");
            let c = combinatorial_route(family, n, spec, LegVariant::Shifted).expect("within bound");
            println!("  {spec:<5} walks: {}", c.render());
            println!("  {spec:<5} limit: {}", g.render());
            match specialize(family, n, spec) {
                Ok(_) => println!("  {spec:<5} routes agree"),
                Err(e) => println!("  {spec:<5} {e}"),
            }
        }
    }
}
