//! Weyl-module characters from closed forms and from explicit bases, and the
//! PBW-graded character.

use osp_macdonald::weylchar::{ch_d, ch_gr_w_pbw, ch_w, ch_w_sigma, character_of, enumerate_basis, BasisKind};

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    println!("chD({n})       = {}", ch_d(n).render());
    for (kind, closed, label) in [
        (BasisKind::UntwistedNeg, ch_w(-n), "chW(-n)     "),
        (BasisKind::TwistedNeg, ch_w_sigma(-n), "chWsigma(-n)"),
        (BasisKind::UntwistedPos, ch_w(n), "chW(n)      "),
        (BasisKind::TwistedPos, ch_w_sigma(n), "chWsigma(n) "),
    ] {
        let basis = enumerate_basis(kind, n);
        assert_eq!(character_of(&basis), closed);
        println!("{label} = {}   ({} monomials)", closed.render(), basis.len());
    }
    println!();
    for twisted in [false, true] {
        let gr = ch_gr_w_pbw(n, twisted);
        println!("PBW layers, twisted = {twisted}:");
        for (p, layer) in &gr.layers {
            println!("  p = {p}: {}", layer.render());
        }
        println!("  dimension {}", gr.dimension());
    }
}
