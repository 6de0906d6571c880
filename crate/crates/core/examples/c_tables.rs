//! Coefficient tables by recurrence and by closed form, and the polynomials
//! they assemble.

use osp_macdonald::cform::{c_closed, c_rec, cdag_closed, cdag_rec, e_spec, triples, CKey};
use osp_macdonald::{Family, Specialization};

fn main() {
    for r in [1u8, 2] {
        println!("r = {r}, index sum 3");
        for (a, b, c) in triples(3) {
            let key = CKey::new(r, a, b, c);
            assert_eq!(c_rec(key), c_closed(key));
            assert_eq!(cdag_rec(key), cdag_closed(key));
            println!("  ({a},{b},{c})  c = {:<16} cdag = {}", c_closed(key).render(), cdag_closed(key).render());
        }
    }
    println!();
    for family in Family::ALL {
        for spec in Specialization::ALL {
            for n in [-2, 2] {
                println!("E[{family},{spec}]({n:>2}) = {}", e_spec(family, n, spec).render());
            }
        }
    }
}
