//! Algebras from Cartan matrices: osp_a(4|2) with symbolic `a`, and ab(3).

use spencer::cartan_matrix::{ab3, osp_alpha, Word};
use spencer::field::Scalar;

fn main() -> spencer::Result<()> {
    let a = Scalar::alpha();
    for which in [1u8, 2] {
        let g = osp_alpha(which, &a)?;
        println!("osp_a(4|2) #{which}: sdim {}, rank {}", g.algebra.sdim(), g.rank());
        for row in &g.cartan_matrix {
            println!("  [{}]", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        }
        let w = Word::parse("[1,[2,3]]")?;
        let v = g.eval_word(&w, false);
        let nz: Vec<String> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("({c}) {}", g.algebra.label(i))).collect();
        println!("  [X1-,[X2-,X3-]] = {}", nz.join(" + "));
    }
    let g = ab3()?;
    println!("ab(3): sdim {}, node-0 degrees {:?}", g.algebra.sdim(), {
        let mut d = g.node_degrees(0);
        d.sort();
        d.dedup();
        d
    });
    Ok(())
}
