//! Exact scalars: rationals and rational functions in the parameter `a`, plus a kernel computation.

use spencer::field::Scalar;
use spencer::linalg::{kernel_basis, rank, Matrix};

fn main() -> spencer::Result<()> {
    let a = Scalar::alpha();
    let x = Scalar::parse("3/4")?;
    let f = &(&a + &Scalar::one()) / &(&a * &a);
    println!("x = {x}, f(a) = {f}, f(a) * a^2 = {}", &f * &(&a * &a));
    println!("f(2) = {}", f.evaluate_alpha(Scalar::int(2).as_rational().unwrap())?);

    let m = Matrix::from_rows(
        vec![
            vec![Scalar::one(), a.clone(), &a * &a],
            vec![Scalar::one(), Scalar::one(), Scalar::one()],
            vec![Scalar::int(2), &a + &Scalar::one(), &(&a * &a) + &Scalar::one()],
        ],
        3,
    );
    println!("rank over Q(a) = {}", rank(&m));
    for v in kernel_basis(&m) {
        println!("kernel vector: [{}]", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
    }
    Ok(())
}
