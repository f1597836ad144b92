//! χ_F = (F(t) − F(t⁻¹)) / (t − t⁻¹) for SU(2).

use higher_fusion::ideal::{generators_sym, su2_character, FunctorSpec};
use higher_fusion::torus::TorusElem;

fn main() -> higher_fusion::Result<()> {
    for coeffs in ["0,0,0,1", "1,1,1", "2,0,-1,0,1"] {
        let spec = FunctorSpec::from_coefficients(2, coeffs)?;
        let chi = su2_character(&spec)?;
        let c0 = TorusElem::canonicalize(&generators_sym(&spec)?[0]);
        println!("F = {}: χ_F = {chi}, equals c_F,0: {}", spec.functor(), chi.numerator() == &c0);
    }
    Ok(())
}
