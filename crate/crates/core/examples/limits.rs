//! Finite approximants against the infinite products they converge to.

use osp_macdonald::qcomb::{euler_product_truncated, wedge_lhs_truncated, FactorKind};
use osp_macdonald::weylchar::{approximant, limit_char, trusted_q_degree, LimitKind};

fn main() {
    let x_bound = 4;
    for kind in LimitKind::ALL {
        let limit = limit_char(kind, 3, x_bound);
        println!("{kind}: {}", limit.poly.render());
        for n in 2..=8 {
            let d = trusted_q_degree(n);
            let ok = approximant(kind, n, d, x_bound).poly == limit.restrict(d, x_bound).poly;
            println!("  n = {n}: agrees through q^{d}: {ok}");
        }
    }
    let lhs = wedge_lhs_truncated(6, 6);
    let rhs = euler_product_truncated(FactorKind::SinglePlus, 6, 6);
    println!("wedge identity through (6,6): {}", lhs.poly == rhs.poly);
}
