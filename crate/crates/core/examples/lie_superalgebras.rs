//! Classical matrix Lie superalgebras: dimensions and a Jacobi check on each.

use spencer::classical;

fn main() -> spencer::Result<()> {
    let list = vec![
        ("gl(2|1)", classical::gl(2, 1)?.algebra),
        ("osp(3|2)", classical::osp_sy(3, 1)?.algebra),
        ("pe(3)", classical::pe_sy(3)?.algebra),
        ("spe(3)", classical::spe(3)?.algebra),
        ("q(3)", classical::q(3)?.algebra),
        ("psq(3)", classical::psq(3)?),
        ("psl(2|2)", classical::psl(2)?),
    ];
    for (name, g) in list {
        let bad = g.check_jacobi();
        println!("{name:<9} sdim {:>6}  Jacobi violations: {}", g.sdim().to_string(), bad.len());
    }
    Ok(())
}
