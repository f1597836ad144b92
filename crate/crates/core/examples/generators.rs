//! The three forms of the higher fusion ideal generators.
//!
//! cargo run --example generators -- 3 1,0,-1/2,1

use higher_fusion::ideal::{FunctorSpec, IdealPresentation};

fn main() -> higher_fusion::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rank = args.first().map_or(3, |s| s.parse().expect("rank"));
    let coeffs = args.get(1).map_or("1,0,-1/2,1", String::as_str);
    let spec = FunctorSpec::from_coefficients(rank, coeffs)?;
    let pres = IdealPresentation::build(&spec)?;
    println!("{}", spec.label());
    for (j, ((q, c), e)) in pres.antisym.iter().zip(&pres.sym).zip(&pres.elem).enumerate() {
        println!("q_{j}      = {}", q.to_text("t"));
        println!("c_F,{j}    = {}", c.to_text("t"));
        println!("  in c̄    = {e}");
    }
    println!("unit ideal: {}", pres.is_unit_ideal());
    Ok(())
}
