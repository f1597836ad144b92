//! Arithmetic in ℚ[t1..tn]/(t1···tn − 1) and its localization at F.

use higher_fusion::perm::Permutation;
use higher_fusion::poly::UPoly;
use higher_fusion::torus::{LocalizedElem, SignedAction, TorusElem};

fn main() -> higher_fusion::Result<()> {
    let n = 3;
    let t1 = TorusElem::var(n, 0);
    let inv = TorusElem::var_inverse(n, 0);
    println!("t1 · t1⁻¹ = {}", t1.mul(&inv));
    println!("t1⁻¹ = {inv}");

    let f = UPoly::from_ints(&[1, 1]);
    let p = TorusElem::product_of_values(n, &f);
    println!("P = F(t1)F(t2)F(t3) = {p}");
    let psi = LocalizedElem::lattice_unit(&[1, -1, 0], &f)?;
    println!("ψ(1,-1,0) = {psi}");

    let swap = SignedAction::signed(Permutation::transposition(n, 0, 1));
    let x = t1.sub(&TorusElem::var(n, 1));
    println!("t1 − t2 antisymmetric under (1 2): {}", x.act(&swap) == x);
    Ok(())
}
