use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use super::poly::{q, Character, SPoly, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("cannot divide by the zero character")]
    ZeroFactor,
    #[error("not divisible by the linear form of {0}")]
    NotDivisible(Character),
}

/// Divides `n` by the linear form `c1*t1 + c2*t2` of `chi`, failing when the
/// remainder is nonzero.
///
/// The polynomial is expanded in powers of the variable with nonzero
/// coefficient in `chi` (t2 when possible), and synthetic division runs from
/// the top power down. The leftover constant-in-that-variable part is the
/// remainder, i.e. `n` restricted to the zero line of `chi`.
pub fn divide_linear(n: &SPoly, chi: Character) -> Result<SPoly, DivisionError> {
    if chi.is_zero() {
        return Err(DivisionError::ZeroFactor);
    }
    // main variable index: 1 => t2, 0 => t1
    let (main_coef, other_coef, main_is_t2) = if chi.c2 != 0 {
        (chi.c2, chi.c1, true)
    } else {
        (chi.c1, chi.c2, false)
    };
    let split = |e: (u32, u32)| if main_is_t2 { (e.1, e.0) } else { (e.0, e.1) };
    let join = |main: u32, other: u32| {
        if main_is_t2 {
            (other, main)
        } else {
            (main, other)
        }
    };

    // rows[j] = coefficient polynomial (in the other variable) of main^j
    let mut rows: BTreeMap<u32, BTreeMap<u32, Q>> = BTreeMap::new();
    for (e, c) in n.terms() {
        let (m, o) = split(*e);
        rows.entry(m).or_default().insert(o, c.clone());
    }
    let inv_main = Q::new(1.into(), main_coef.into());
    let other = q(other_coef);
    let mut quotient = SPoly::zero();
    let top = rows.keys().next_back().copied().unwrap_or(0);
    for j in (1..=top).rev() {
        let row = match rows.remove(&j) {
            Some(r) => r,
            None => continue,
        };
        // main^j * C(o) = main^(j-1) * C(o)/a * (a*main + b*other) - main^(j-1) * C(o) * b/a * other
        let below = rows.entry(j - 1).or_default();
        for (o, c) in row {
            if c.is_zero() {
                continue;
            }
            let qc = &c * &inv_main;
            quotient.add_term(join(j - 1, o), &qc);
            if !other.is_zero() {
                let delta = -(&qc * &other);
                let entry = below.entry(o + 1).or_insert_with(Q::zero);
                *entry += delta;
            }
        }
    }
    let remainder_nonzero = rows
        .get(&0)
        .map(|r| r.values().any(|c| !c.is_zero()))
        .unwrap_or(false);
    if remainder_nonzero {
        return Err(DivisionError::NotDivisible(chi));
    }
    Ok(quotient)
}

/// Exact division by the product of the linear forms of `factors`, one factor
/// at a time.
pub fn divide_exact(n: &SPoly, factors: &[Character]) -> Result<SPoly, DivisionError> {
    if factors.iter().any(Character::is_zero) {
        return Err(DivisionError::ZeroFactor);
    }
    let mut cur = n.clone();
    for &f in factors {
        cur = divide_linear(&cur, f)?;
    }
    Ok(cur)
}

/// Product of the linear forms of `factors`.
pub fn product_of_forms(factors: &[Character]) -> SPoly {
    factors
        .iter()
        .fold(SPoly::one(), |acc, &f| &acc * &super::poly::linear_form(f))
}
