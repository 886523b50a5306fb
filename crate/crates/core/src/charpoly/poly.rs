use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A character of the two-dimensional torus, i.e. a point of the
/// character lattice, written in the basis dual to `t1, t2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Character {
    pub c1: i64,
    pub c2: i64,
}

impl Character {
    pub const ZERO: Character = Character { c1: 0, c2: 0 };

    pub const fn new(c1: i64, c2: i64) -> Self {
        Character { c1, c2 }
    }

    pub fn is_zero(&self) -> bool {
        self.c1 == 0 && self.c2 == 0
    }

    /// Pairing with a cocharacter.
    pub fn pair(&self, w: (i64, i64)) -> i64 {
        self.c1 * w.0 + self.c2 * w.1
    }

    pub fn scale(&self, k: i64) -> Character {
        Character::new(self.c1 * k, self.c2 * k)
    }

    /// Splits a nonzero character as `k * p` with `p` primitive and its first
    /// nonzero coordinate positive.
    pub fn primitive_part(&self) -> (i64, Character) {
        let g = self.c1.gcd(&self.c2);
        assert!(g != 0, "zero character has no primitive part");
        let mut p = Character::new(self.c1 / g, self.c2 / g);
        let mut k = g;
        if p.c1 < 0 || (p.c1 == 0 && p.c2 < 0) {
            p = -p;
            k = -k;
        }
        (k, p)
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, o: Character) -> Character {
        Character::new(self.c1 + o.c1, self.c2 + o.c2)
    }
}

impl Sub for Character {
    type Output = Character;
    fn sub(self, o: Character) -> Character {
        Character::new(self.c1 - o.c1, self.c2 - o.c2)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character::new(-self.c1, -self.c2)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

/// Exponent pair `(a, b)` of the monomial `t1^a t2^b`.
pub type Exponent = (u32, u32);

/// Graded-lex key: higher total degree first, then higher `t1` power first.
fn glex_key(e: &Exponent) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
    (std::cmp::Reverse(e.0 + e.1), std::cmp::Reverse(e.0))
}

/// Sparse polynomial in `Q[t1, t2]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SPoly {
    terms: BTreeMap<Exponent, Q>,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly::default()
    }

    pub fn one() -> Self {
        SPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        SPoly::monomial(c, (0, 0))
    }

    pub fn monomial(c: Q, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        SPoly { terms }
    }

    pub fn t1() -> Self {
        SPoly::monomial(Q::one(), (1, 0))
    }

    pub fn t2() -> Self {
        SPoly::monomial(Q::one(), (0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Q)>>(it: I) -> Self {
        let mut p = SPoly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a + b == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: Exponent) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in graded-lex order (used for printing).
    pub fn terms_glex(&self) -> Vec<(Exponent, Q)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|(e, _)| glex_key(e));
        v
    }

    pub fn add_term(&mut self, e: Exponent, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// `Some(k)` when every term has total degree `k`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|&(a, b)| a + b);
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|&(a, b)| a + b == k)
    }

    pub fn scale(&self, c: &Q) -> SPoly {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> SPoly {
        let mut acc = SPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let mut acc = Q::zero();
        for (&(a, b), c) in &self.terms {
            acc +=
                c * num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize);
        }
        acc
    }

    /// Coefficient vector of a homogeneous polynomial of degree `k` in the
    /// basis `t1^k, t1^(k-1) t2, ..., t2^k`.
    pub fn homogeneous_coords(&self, k: u32) -> Vec<Q> {
        debug_assert!(self.is_homogeneous_of(k));
        (0..=k).map(|j| self.coeff((k - j, j))).collect()
    }

    pub fn from_homogeneous_coords(k: u32, coords: &[Q]) -> SPoly {
        SPoly::from_terms(
            coords
                .iter()
                .enumerate()
                .map(|(j, c)| ((k - j as u32, j as u32), c.clone())),
        )
    }

    /// Polynomial with rational content removed: integer coefficients with gcd 1
    /// and a positive leading (graded-lex) coefficient. Returns the factor `f`
    /// such that `self = f * result`.
    pub fn primitive(&self) -> (Q, SPoly) {
        let lead = match self.terms_glex().into_iter().next() {
            None => return (Q::one(), SPoly::zero()),
            Some((_, c)) => c,
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Q::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }
}

impl From<Character> for SPoly {
    fn from(chi: Character) -> SPoly {
        linear_form(chi)
    }
}

/// The linear form `c1*t1 + c2*t2` attached to a character.
pub fn linear_form(chi: Character) -> SPoly {
    SPoly::from_terms([((1, 0), q(chi.c1)), ((0, 1), q(chi.c2))])
}

impl<'a> Add<&'a SPoly> for &'a SPoly {
    type Output = SPoly;
    fn add(self, o: &SPoly) -> SPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }
}

impl Add for SPoly {
    type Output = SPoly;
    fn add(self, o: SPoly) -> SPoly {
        &self + &o
    }
}

impl<'a> Sub<&'a SPoly> for &'a SPoly {
    type Output = SPoly;
    fn sub(self, o: &SPoly) -> SPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, &-c);
        }
        r
    }
}

impl Sub for SPoly {
    type Output = SPoly;
    fn sub(self, o: SPoly) -> SPoly {
        &self - &o
    }
}

impl Neg for SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        SPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        -self.clone()
    }
}

impl<'a> Mul<&'a SPoly> for &'a SPoly {
    type Output = SPoly;
    fn mul(self, o: &SPoly) -> SPoly {
        let mut r = SPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                r.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        r
    }
}

impl Mul for SPoly {
    type Output = SPoly;
    fn mul(self, o: SPoly) -> SPoly {
        &self * &o
    }
}

fn fmt_monomial(e: Exponent) -> String {
    let mut parts = Vec::new();
    for (name, p) in [("t1", e.0), ("t2", e.1)] {
        match p {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{p}")),
        }
    }
    parts.join("*")
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for SPoly {
    /// Graded-lex order, e.g. `t1^2 - 2*t1*t2 + 1/2*t2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms_glex();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = fmt_monomial(*e);
            if mono.is_empty() {
                out.push_str(&fmt_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPoly({self})")
    }
}

/// Elementary symmetric polynomials `e_0 = 1, e_1, ..., e_n` of the given
/// linear forms.
pub fn elementary_symmetric(forms: &[SPoly]) -> Vec<SPoly> {
    let mut e = vec![SPoly::one()];
    for f in forms {
        let mut next = e.clone();
        next.push(SPoly::zero());
        for j in 1..next.len() {
            next[j] = &next[j] + &(&e[j - 1] * f);
        }
        e = next;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_form_of_basis_characters() {
        assert_eq!(linear_form(Character::new(0, 1)), SPoly::t2());
        assert_eq!(linear_form(Character::new(1, 0)), SPoly::t1());
        let f = linear_form(Character::new(-2, 1));
        assert_eq!(f, &SPoly::t1().scale(&q(-2)) + &SPoly::t2());
        assert_eq!(f.to_string(), "-2*t1 + t2");
    }

    #[test]
    fn display_is_graded_lex() {
        let p = &(&SPoly::t1() * &SPoly::t1()) - &(&SPoly::t1() * &SPoly::t2()).scale(&q(2));
        assert_eq!(p.to_string(), "t1^2 - 2*t1*t2");
        let r = &SPoly::constant(q_frac(1, 2)) + &SPoly::t2().pow(3);
        assert_eq!(r.to_string(), "t2^3 + 1/2");
        assert_eq!(SPoly::zero().to_string(), "0");
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = &SPoly::t1() - &SPoly::t1();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn elementary_symmetric_of_two_forms() {
        let e = elementary_symmetric(&[SPoly::t1(), SPoly::t2()]);
        assert_eq!(e.len(), 3);
        assert_eq!(e[1], &SPoly::t1() + &SPoly::t2());
        assert_eq!(e[2], &SPoly::t1() * &SPoly::t2());
    }

    #[test]
    fn primitive_part_normalizes_sign() {
        assert_eq!(
            Character::new(-2, 0).primitive_part(),
            (-2, Character::new(1, 0))
        );
        assert_eq!(
            Character::new(0, -3).primitive_part(),
            (-3, Character::new(0, 1))
        );
        assert_eq!(
            Character::new(4, -6).primitive_part(),
            (2, Character::new(2, -3))
        );
        let (c, p) = SPoly::t1().scale(&q_frac(-3, 2)).primitive();
        assert_eq!(c, q_frac(-3, 2));
        assert_eq!(p, SPoly::t1());
    }
}
