//! Exact division by linear forms and Jacobi-Trudi determinants in Q[t1, t2].
use equichow::charpoly::{
    divide_exact, elementary_symmetric, linear_form, product_of_forms, schur_det, Character,
};

fn main() {
    let factors = [
        Character::new(1, 0),
        Character::new(1, -1),
        Character::new(0, 1),
    ];
    let n = &product_of_forms(&factors) * &linear_form(Character::new(2, 3));
    println!("n = {n}");
    println!(
        "n / t1 (t1 - t2) t2 = {}",
        divide_exact(&n, &factors).unwrap()
    );
    match divide_exact(&n, &[Character::new(1, 1)]) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("n / (t1 + t2): {e}"),
    }
    let forms: Vec<_> = factors.iter().map(|&c| linear_form(c)).collect();
    let e = elementary_symmetric(&forms);
    println!("s_(1,1) in e_j over a 3-box: {}", schur_det(&[1, 1], &e, 2));
}
