//! Regular sequences and the truncated Koszul complex of x_F.

use higher_fusion::ideal::FunctorSpec;
use higher_fusion::koszul::{default_window, regseq1_check, regseq2_check, truncated_koszul_cohomology};

fn main() -> higher_fusion::Result<()> {
    println!("regseq1 n=4 m=2: {}", regseq1_check(4, 2)?.all_pass());
    let spec = FunctorSpec::classical(3, 1)?;
    println!("regseq2 {}: {}", spec.label(), regseq2_check(&spec)?.all_pass());
    let report = truncated_koszul_cohomology(&spec, default_window(&spec))?;
    println!("degree  H^0 H^1 H^2  graded  hilbert");
    for row in &report.rows {
        let h: Vec<String> = row.cohomology.iter().map(|d| format!("{d:>3}")).collect();
        let mark = if row.flagged { "  (edge)" } else { "" };
        println!("{:>6}  {}  {:>6}  {:>7}{mark}", row.degree, h.join(" "), row.top_graded, row.hilbert);
    }
    println!("concentrated in top degree: {}", report.concentrated());
    Ok(())
}
