//! Socle filtration of the order-2 structure functions for g_0 = spe(4).

use spencer::registry::{self, BuildParams};
use spencer::spencer::SpencerComplex;

fn main() -> spencer::Result<()> {
    let g = registry::find("pe(5):g0=spe(4)")?.build(&BuildParams::default())?.graded;
    let cx = SpencerComplex::new(&g);
    let h = cx.cohomology(2, 2)?;
    let m = cx.module(&h)?;
    let r = m.composition_report();
    println!("H^{{2,2}} = {}  split = {}  complete = {}", r.sdim, r.split, r.complete);
    for (i, layer) in r.layers.iter().enumerate() {
        for c in &layer.constituents {
            let w: Vec<String> = c.weight.iter().map(|x| x.to_string()).collect();
            println!("  layer {i}: ({}) {} sdim {}", w.join(","), if c.parity { "odd" } else { "even" }, c.sdim);
        }
    }
    Ok(())
}
