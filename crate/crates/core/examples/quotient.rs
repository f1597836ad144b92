//! Gröbner basis and quotient algebra of a classical fusion ideal.

use higher_fusion::ideal::FunctorSpec;
use higher_fusion::verlinde::fusion_algebra;

fn main() -> higher_fusion::Result<()> {
    let spec = FunctorSpec::classical(3, 2)?;
    let (gb, algebra, localized) = fusion_algebra(&spec)?;
    for g in gb.generators() {
        println!("{}", g.to_text("c"));
    }
    println!("dimension {} (localized {})", algebra.dimension(), localized.dimension());
    for (i, m) in algebra.mul_matrices().iter().enumerate() {
        println!("multiplication by c{}:", i + 1);
        for row in m.to_string_rows() {
            println!("  [{}]", row.join(", "));
        }
    }
    Ok(())
}
