//! Computes one quotient dimension with timing, e.g.
//!
//! ```text
//! cargo run --release --example dim_table -- 5 31 traced
//! ```

use std::time::Instant;

use hitcalc_core::quotient::HitCalc;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let t: usize = args.get(1).map_or(5, |s| s.parse().unwrap());
    let n: u64 = args.get(2).map_or(14, |s| s.parse().unwrap());
    let traced = args.get(3).is_some_and(|s| s == "traced");
    let engine = HitCalc::new();
    let start = Instant::now();
    let qb = if traced {
        engine.quotient_basis_traced(t, n).unwrap()
    } else {
        engine.quotient_basis(t, n).unwrap()
    };
    println!(
        "t={t} n={n}: dim {} of {} columns in {:.2?}",
        qb.dim(),
        qb.columns(),
        start.elapsed()
    );
    if traced {
        print!("{}", qb.trace().echo().unwrap());
    }
}
