//! Gaussian binomials and the q-multinomials that weight walk counts.

use osp_macdonald::qcomb::{q_binomial, q_multinomial};

fn main() {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|m| q_binomial(n, m, 1).render()).collect();
        println!("[{n}; m]_q: {}", row.join(" | "));
    }
    println!();
    // base q^2, as in the t = 0 formulas
    println!("[4; 2]_(q^2) = {}", q_binomial(4, 2, 2).render());
    let m = q_multinomial(1, 2, 1, 2);
    println!("[4; 1,2,1]_(q^2) = {}", m.render());
    println!("at q = 1: {}", m.eval_at_one());
}
