//! The potential V and the identity c_F,j = ±∂V/∂c̄_k.

use higher_fusion::ideal::{potential, potential_derivative_check, FunctorSpec};

fn main() -> higher_fusion::Result<()> {
    let spec = FunctorSpec::from_coefficients(4, "0,1,0,2,-1")?;
    let pot = potential(&spec)?;
    println!("G(t) coefficients: {}", pot.g.coefficient_list());
    println!("V = {}", pot.elem_form);
    let report = potential_derivative_check(&spec)?;
    for e in &report.entries {
        println!("j={} d/dc̄{}: {} [{}]", e.j, e.k, e.signed_derivative, if e.pass { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
