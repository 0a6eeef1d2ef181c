//! Structure functions of conformal geometry in dimension 4: the Weyl tensor splits in two.

use spencer::registry::{self, BuildParams};
use spencer::spencer::SpencerComplex;

fn main() -> spencer::Result<()> {
    let g = registry::find("co(4)")?.build(&BuildParams::default())?.graded;
    let cx = SpencerComplex::new(&g);
    for k in 1..=3 {
        let c = cx.cochains(k, 2)?;
        let h = cx.cohomology(k, 2)?;
        println!("C^{{{k},2}} = {:>8}  H^{{{k},2}} = {}", c.sdim().to_string(), h.sdim());
    }
    let h = cx.cohomology(2, 2)?;
    for class in h.classes.iter().take(3) {
        let w: Vec<String> = class.weight.iter().map(|x| x.to_string()).collect();
        println!("  weight ({}) : {}", w.join(","), cx.cochain_label(&class.representative));
    }
    println!("Euler characteristic check at k=2: {} = {}", cx.euler_cochains(2)?, cx.euler_cohomology(2)?);
    Ok(())
}
