//! Cartan prolongs: conformal and orthogonal algebras, and pe(3) in the skew realization.

use spencer::classical;
use spencer::prolong::{cartan_prolong, intersection_form_dim, ProlongInput};

fn main() -> spencer::Result<()> {
    let inputs = vec![
        ProlongInput::from_defining("co(4)", &classical::osp_sy(4, 0)?.central_extension("co(4)")?),
        ProlongInput::from_defining("o(4)", &classical::osp_sy(4, 0)?),
        ProlongInput::from_defining("gl(2|1)", &classical::gl(2, 1)?),
        ProlongInput::from_defining("pe_sk(3)", &classical::pe_sk(3)?),
    ];
    for input in &inputs {
        let r = cartan_prolong(input, 4)?;
        let dims: Vec<String> = r.sdims.iter().map(|(d, s)| format!("g_{d}={s}")).collect();
        println!("{:<9} stabilized={:<5} {}", input.name, r.stabilized, dims.join(" "));
        let check: Vec<usize> = (1..=2).map(|i| intersection_form_dim(input, i)).collect();
        println!("          intersection form dims of g_1, g_2: {check:?}");
    }
    Ok(())
}
