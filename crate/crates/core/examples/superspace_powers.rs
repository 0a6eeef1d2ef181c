//! Superdimensions of symmetric and exterior powers, and the supertranspose.

use spencer::linalg::Matrix;
use spencer::superspace::{ext_power, supertranspose, sym_power, SuperSpace};

fn main() -> spencer::Result<()> {
    let v = SuperSpace::standard(2, 2);
    for k in 0..=4 {
        println!("k={k}  S^k = {:>6}  Lambda^k = {:>6}", sym_power(&v, k).sdim().to_string(), ext_power(&v, k).sdim().to_string());
    }

    // an odd matrix in format (0,0,1)
    let par = [false, false, true];
    let x = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 2], &[3, 4, 0]]);
    let mut y = x.clone();
    for _ in 0..4 {
        y = supertranspose(&y, &par)?;
    }
    println!("X^st =\n{}", supertranspose(&x, &par)?);
    println!("(X^st)^st^st^st == X: {}", y == x);
    Ok(())
}
