//! a_(p,1,0..0) = a_(p,0..0)·e1 − a_(t·p,0..0) for monomials p.

use higher_fusion::poly::{rat, UPoly};
use higher_fusion::symm::{pieri_check, pieri_sides};

fn main() {
    let n = 4;
    for m in 0..=n + 2 {
        let p = UPoly::monomial(m, rat(1));
        let (lhs, _) = pieri_sides(&p, n);
        let note = if lhs.is_zero() { "both sides vanish" } else { "" };
        println!("p = t^{m}: {} {note}", pieri_check(&p, n));
    }
}
