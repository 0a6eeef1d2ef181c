//! Z-gradings of osp(7|2): by a weight functional and by a node of the Cartan matrix.

use spencer::classical;
use spencer::field::Scalar;
use spencer::grading::grade_by_weight;

fn main() -> spencer::Result<()> {
    let g = classical::osp_sy(7, 1)?.algebra;
    let rank = g.weight_labels.len();
    let mut e1 = vec![Scalar::zero(); rank];
    e1[0] = Scalar::one();
    let gr = grade_by_weight(&g, &e1)?;
    println!("osp(7|2) graded by e1:");
    for (d, s) in gr.sdim_table() {
        println!("  g_{d:<2} {s}");
    }
    println!("g_-1 abelian: {}, g_0 faithful on g_-1: {}", gr.g_minus_abelian(), gr.is_faithful());
    println!("g_0 = {}", gr.g0()?.sdim());
    Ok(())
}
