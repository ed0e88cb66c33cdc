//! Translations and dilations of the line: the relation holds in the limit.
//!
//!     cargo run --release --example affine_control

use anosovlab::nogo::{affine_control, affine_control_defect, AFFINE_S, AFFINE_T};

fn main() -> anosovlab::Result<()> {
    println!("U(t) V(s) U(-t) = V(s e^t) at s = {AFFINE_S}, t = {AFFINE_T}");
    for n in [256, 512, 1024, 2048] {
        println!(
            "n = {n:>4}  defect {:.3e}   s = 0: {:.1e}   t = 0: {:.1e}",
            affine_control(n)?,
            affine_control_defect(n, 0.0, AFFINE_T)?,
            affine_control_defect(n, AFFINE_S, 0.0)?
        );
    }
    Ok(())
}
