//! Involutivity test: vect(2|0) passes and its vanishing scan is zero; o(3) fails.

use spencer::involutivity::{is_involutive, scan_is_zero, standard_order, vanishing_scan};
use spencer::registry::{self, BuildParams};

fn main() -> spencer::Result<()> {
    for name in ["vect(2|0)", "vect(0|3)", "o(3)"] {
        let g = registry::find(name)?.build(&BuildParams::default())?.graded;
        let r = is_involutive(&g, &standard_order(&g), None)?;
        println!("{name}: involutive = {} (conditions {} {} {})", r.involutive, r.condition1, r.condition2, r.condition3);
        for (t, lhs, rhs) in r.cartan_bound(&g) {
            println!("  t={t}: dim g_(t+1) = {lhs}, sum of kernel dims = {rhs}");
        }
        if r.involutive {
            let scan = vanishing_scan(&g, 3, 4)?;
            println!("  H^(i,k) = 0 for i <= 3, k <= 4: {}", scan_is_zero(&scan));
        }
    }
    Ok(())
}
