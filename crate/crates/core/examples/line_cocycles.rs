//! Cocycles of vector fields on the line with values in operators between densities.

use projsym::onedim::{cocycle_space_1d, reference_pairing, solve_c4};

fn main() -> projsym::Result<()> {
    for k in 1..=5 {
        let c3 = cocycle_space_1d(k, 3)?;
        let s = solve_c4(k)?;
        let c5 = cocycle_space_1d(k, 5)?;
        let j5 = reference_pairing(k, 5);
        let spans_j5 = match (c5.first(), &j5) {
            (Some(v), Some(j)) => j[3..] == v[..],
            _ => false,
        };
        println!(
            "weight -{k}: order 3 dim {}, order 4 s = {}, order 5 dim {}{}",
            c3.len(),
            s.map(|s| s.to_string()).unwrap_or_else(|| "none".into()),
            c5.len(),
            if spans_j5 { " (the J5 coefficients)" } else { "" }
        );
    }
    Ok(())
}
