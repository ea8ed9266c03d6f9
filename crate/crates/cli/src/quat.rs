//! Quaternion literals: `sum := '-'? term (('+' | '-') term)*`,
//! `term := rational ('*'? unit)? | unit`, `unit := 'i' | 'j' | 'k'`.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use skewalg::quaternion::{QAlgebra, Quat};

use crate::expr::{Cursor, ParseError};

const TERM: &[&str] = &["rational", "'i'", "'j'", "'k'"];

fn unit_slot(c: char) -> Option<usize> {
    match c {
        'i' => Some(1),
        'j' => Some(2),
        'k' => Some(3),
        _ => None,
    }
}

/// Parses a literal such as `1 + i - 3/2 k` into the algebra `alg`.
pub fn parse_quat(src: &str, alg: &Arc<QAlgebra>) -> Result<Quat, ParseError> {
    let mut c = Cursor::new(src);
    let mut coords = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
    let mut sign = if c.eat('-') { -BigRational::one() } else { BigRational::one() };
    loop {
        let (slot, value) = term(&mut c)?;
        coords[slot] += sign * value;
        if c.eat('+') {
            sign = BigRational::one();
        } else if c.eat('-') {
            sign = -BigRational::one();
        } else if c.at_end() {
            break;
        } else {
            return Err(c.error(&["'+'", "'-'", "end of input"]));
        }
    }
    let [w, x, y, z] = coords;
    Ok(Quat::new(alg, w, x, y, z))
}

fn term(c: &mut Cursor) -> Result<(usize, BigRational), ParseError> {
    match c.peek() {
        Some(u) if unit_slot(u).is_some() => {
            c.eat(u);
            Ok((unit_slot(u).expect("checked"), BigRational::one()))
        }
        Some(d) if d.is_ascii_digit() => {
            let value = c.rational()?;
            let starred = c.eat('*');
            let next = c.peek();
            match next.and_then(unit_slot) {
                Some(slot) => {
                    c.eat(next.expect("peeked"));
                    Ok((slot, value))
                }
                None if starred => Err(c.error(&["'i'", "'j'", "'k'"])),
                None => Ok((0, value)),
            }
        }
        _ => Err(c.error(TERM)),
    }
}

/// Parses `p/q` or an integer with an optional leading minus.
pub fn parse_rational(src: &str) -> Result<BigRational, ParseError> {
    let mut c = Cursor::new(src);
    let negative = c.eat('-');
    let r = c.rational()?;
    if !c.at_end() {
        return Err(c.error(&["end of input"]));
    }
    Ok(if negative { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn units_and_sums() {
        let h = QAlgebra::hamilton();
        assert_eq!(parse_quat("j", &h).unwrap(), Quat::j(&h));
        assert_eq!(parse_quat("1+i+j", &h).unwrap(), Quat::from_ints(&h, 1, 1, 1, 0));
        assert_eq!(parse_quat("-k", &h).unwrap(), Quat::k(&h).neg());
        let half = BigRational::new(1.into(), 2.into());
        let want = Quat::new(&h, q(0), q(2), q(0), -half);
        assert_eq!(parse_quat("2*i - 1/2 k", &h).unwrap(), want);
        assert_eq!(parse_quat("i + i", &h).unwrap(), Quat::from_ints(&h, 0, 2, 0, 0));
    }

    #[test]
    fn malformed_literals() {
        let h = QAlgebra::hamilton();
        assert_eq!(parse_quat("", &h).unwrap_err().offset, 0);
        assert_eq!(parse_quat("2*", &h).unwrap_err().offset, 2);
        assert_eq!(parse_quat("i j", &h).unwrap_err().offset, 2);
        assert!(parse_quat("x0", &h).is_err());
    }

    #[test]
    fn rational_flags() {
        assert_eq!(parse_rational("-1").unwrap(), q(-1));
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }
}
