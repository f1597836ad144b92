//! Fusion coefficients from the quotient algebra against Kac–Walton.

use higher_fusion::verlinde::compare_with_quotient;

fn main() -> higher_fusion::Result<()> {
    for (n, k) in [(2, 3), (3, 2), (4, 1)] {
        let report = compare_with_quotient(n, k)?;
        println!(
            "SU({n})_{k}: dimension {} ({} weights), match {}",
            report.dimension,
            report.expected_dimension,
            report.pass()
        );
    }
    Ok(())
}
