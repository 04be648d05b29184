//! Commutative rings with optional Bezout-domain structure.
//!
//! A [`Ring`] is a small immutable context that interprets [`Elem`] values.
//! Three rings are provided: the integers (arbitrary precision), prime
//! fields `F_p` with `p < 2^16`, and the 16-element ring `Z_2[X,Y]/(X^2,Y^2)`
//! (called `Nil16`), the smallest ring in which `2 = 0` breaks the
//! minor-vanishing argument for zero-square 3x3 matrices.
//!
//! Element arithmetic (`add`, `mul`, ...) is infallible. Mixing elements of
//! different rings is a caller bug and panics; every matrix and vector
//! constructor validates membership up front through [`Ring::ensure`], so
//! the panic is unreachable through the checked public surfaces.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime-field modulus (exclusive).
pub const MAX_PRIME: u32 = 1 << 16;

/// Monomial bit positions of a `Nil16` element: `1, X, Y, XY`.
const NIL_ONE: u8 = 0b0001;
const NIL_X: u8 = 0b0010;
const NIL_Y: u8 = 0b0100;
const NIL_XY: u8 = 0b1000;
const NIL_NAMES: [(u8, &str); 4] = [(NIL_ONE, "1"), (NIL_X, "X"), (NIL_Y, "Y"), (NIL_XY, "XY")];

/// A ring element. The stored representation is canonical, so derived
/// equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    /// Residue in `[0, p)`.
    Fp(u32),
    /// Coefficient bits over the basis `{1, X, Y, XY}` (bit `k` is the
    /// monomial `X^(k&1) Y^(k>>1)`).
    Nil(u8),
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(v) => write!(f, "{v}"),
            Elem::Fp(v) => write!(f, "{v}"),
            Elem::Nil(0) => f.write_str("0"),
            Elem::Nil(bits) => {
                let terms: Vec<&str> = NIL_NAMES
                    .iter()
                    .filter(|(b, _)| bits & b != 0)
                    .map(|(_, name)| *name)
                    .collect();
                f.write_str(&terms.join("+"))
            }
        }
    }
}

impl Elem {
    pub fn as_bigint(&self) -> Option<&BigInt> {
        match self {
            Elem::Int(v) => Some(v),
            _ => None,
        }
    }
}

/// Operational context for a commutative unital ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Int,
    Fp(u32),
    Nil16,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => f.write_str("int"),
            Ring::Fp(p) => write!(f, "fp:{p}"),
            Ring::Nil16 => f.write_str("nil16"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "int" => Ok(Ring::Int),
            "nil16" => Ok(Ring::Nil16),
            other => match other.strip_prefix("fp:") {
                Some(p) => {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::contract(format!("bad prime in ring selector {other:?}")))?;
                    Ring::prime_field(p)
                }
                None => Err(Error::contract(format!(
                    "unknown ring selector {other:?} (expected int, fp:<p> or nil16)"
                ))),
            },
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn nil_mul(a: u8, b: u8) -> u8 {
    let mut out = 0;
    for i in 0..4 {
        if a & (1 << i) == 0 {
            continue;
        }
        for j in 0..4 {
            // X^2 = Y^2 = 0 kills any pair sharing a variable.
            if b & (1 << j) != 0 && i & j == 0 {
                out ^= 1 << (i | j);
            }
        }
    }
    out
}

impl Ring {
    /// `F_p`, checking primality by trial division.
    pub fn prime_field(p: u64) -> Result<Ring> {
        if p >= MAX_PRIME as u64 {
            return Err(Error::contract(format!("prime {p} exceeds 2^16")));
        }
        if !is_prime(p) {
            return Err(Error::contract(format!("{p} is not prime")));
        }
        Ok(Ring::Fp(p as u32))
    }

    pub fn is_domain(&self) -> bool {
        !matches!(self, Ring::Nil16)
    }

    pub fn has_bezout(&self) -> bool {
        !matches!(self, Ring::Nil16)
    }

    pub fn two_is_zero_divisor(&self) -> bool {
        matches!(self, Ring::Fp(2) | Ring::Nil16)
    }

    pub fn contains(&self, a: &Elem) -> bool {
        match (self, a) {
            (Ring::Int, Elem::Int(_)) => true,
            (Ring::Fp(p), Elem::Fp(v)) => v < p,
            (Ring::Nil16, Elem::Nil(bits)) => *bits < 16,
            _ => false,
        }
    }

    pub fn ensure(&self, a: &Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::contract(format!("element {a:?} does not belong to {self}")))
        }
    }

    fn mixed(&self, a: &Elem, b: &Elem) -> ! {
        panic!("contract violation: mixed-ring operands {a:?}, {b:?} over {self}")
    }

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Int => Elem::Int(BigInt::zero()),
            Ring::Fp(_) => Elem::Fp(0),
            Ring::Nil16 => Elem::Nil(0),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Ring::Int => Elem::Int(BigInt::one()),
            Ring::Fp(_) => Elem::Fp(1),
            Ring::Nil16 => Elem::Nil(NIL_ONE),
        }
    }

    /// Image of an integer under the canonical map `Z -> R`.
    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Elem {
        match self {
            Ring::Int => Elem::Int(v.clone()),
            Ring::Fp(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Elem::Fp(r.to_u32().expect("residue fits u32"))
            }
            Ring::Nil16 => {
                if v.is_odd() {
                    Elem::Nil(NIL_ONE)
                } else {
                    Elem::Nil(0)
                }
            }
        }
    }

    /// A `Nil16` element from its coefficient bits over `1, X, Y, XY`.
    pub fn nil(bits: u8) -> Elem {
        assert!(bits < 16, "Nil16 element has four coefficient bits");
        Elem::Nil(bits)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(v) => v.is_zero(),
            Elem::Fp(v) => *v == 0,
            Elem::Nil(b) => *b == 0,
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Int, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Ring::Fp(p), Elem::Fp(x), Elem::Fp(y)) => Elem::Fp(((*x as u64 + *y as u64) % *p as u64) as u32),
            (Ring::Nil16, Elem::Nil(x), Elem::Nil(y)) => Elem::Nil(x ^ y),
            _ => self.mixed(a, b),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Ring::Int, Elem::Int(x)) => Elem::Int(-x),
            (Ring::Fp(p), Elem::Fp(x)) => Elem::Fp(if *x == 0 { 0 } else { p - x }),
            (Ring::Nil16, Elem::Nil(x)) => Elem::Nil(*x),
            _ => self.mixed(a, a),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Int, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Ring::Fp(p), Elem::Fp(x), Elem::Fp(y)) => Elem::Fp(((*x as u64 * *y as u64) % *p as u64) as u32),
            (Ring::Nil16, Elem::Nil(x), Elem::Nil(y)) => Elem::Nil(nil_mul(*x, *y)),
            _ => self.mixed(a, b),
        }
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Elem>) -> Elem {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// `a*b - c*d`, the shape of every 2x2 minor.
    pub fn cross_diff(&self, a: &Elem, b: &Elem, c: &Elem, d: &Elem) -> Elem {
        self.sub(&self.mul(a, b), &self.mul(c, d))
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(v) => v.abs().is_one(),
            Elem::Fp(v) => *v != 0,
            // X, Y, XY are nilpotent; 1 + nilpotent is a unit.
            Elem::Nil(b) => b & NIL_ONE != 0,
        }
    }

    pub fn inv_unit(&self, a: &Elem) -> Result<Elem> {
        if !self.is_unit(a) {
            return Err(Error::NonUnit(a.to_string()));
        }
        Ok(match (self, a) {
            (Ring::Int, Elem::Int(v)) => Elem::Int(v.clone()),
            (Ring::Fp(p), Elem::Fp(v)) => Elem::Fp(fp_inverse(*v, *p)),
            (Ring::Nil16, Elem::Nil(v)) => {
                let inv = (0..16u8)
                    .find(|&c| nil_mul(*v, c) == NIL_ONE)
                    .expect("units of Nil16 are invertible");
                Elem::Nil(inv)
            }
            _ => self.mixed(a, a),
        })
    }

    fn require_bezout(&self, op: &'static str) -> Result<()> {
        if self.has_bezout() {
            Ok(())
        } else {
            Err(Error::CapabilityMissing {
                op,
                ring: self.to_string(),
            })
        }
    }

    /// Extended gcd: `(g, s, t)` with `g = s*a + t*b`, `g` the canonical
    /// associate. Over the integers this is the classical Euclidean
    /// recursion with the final sign flipped so that `g >= 0`.
    pub fn xgcd(&self, a: &Elem, b: &Elem) -> Result<(Elem, Elem, Elem)> {
        self.require_bezout("xgcd")?;
        match (self, a, b) {
            (Ring::Int, Elem::Int(a), Elem::Int(b)) => {
                let (g, s, t) = int_xgcd(a, b);
                Ok((Elem::Int(g), Elem::Int(s), Elem::Int(t)))
            }
            (Ring::Fp(p), Elem::Fp(x), Elem::Fp(y)) => Ok(if *x != 0 {
                (Elem::Fp(1), Elem::Fp(fp_inverse(*x, *p)), Elem::Fp(0))
            } else if *y != 0 {
                (Elem::Fp(1), Elem::Fp(0), Elem::Fp(fp_inverse(*y, *p)))
            } else {
                (Elem::Fp(0), Elem::Fp(0), Elem::Fp(0))
            }),
            _ => self.mixed(a, b),
        }
    }

    /// Left fold of [`Ring::xgcd`] with back-substituted coefficients, so
    /// that `sum(coeffs[i] * v[i]) = g`.
    pub fn gcd_list(&self, v: &[Elem]) -> Result<(Elem, Vec<Elem>)> {
        self.require_bezout("gcd_list")?;
        let (first, rest) = v
            .split_first()
            .ok_or_else(|| Error::contract("gcd_list of an empty sequence"))?;
        let (mut g, s, _) = self.xgcd(first, &self.zero())?;
        let mut coeffs = vec![s];
        for x in rest {
            let (g2, s, t) = self.xgcd(&g, x)?;
            for c in coeffs.iter_mut() {
                *c = self.mul(c, &s);
            }
            coeffs.push(t);
            g = g2;
        }
        debug_assert_eq!(
            self.sum(&coeffs.iter().zip(v).map(|(c, x)| self.mul(c, x)).collect::<Vec<_>>()),
            g,
            "gcd_list coefficients must reproduce g"
        );
        Ok((g, coeffs))
    }

    /// The unique `q` with `q * b = a`; never a rounded quotient.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if self.is_zero(b) {
            return Err(Error::contract(format!("exact_div({a}, 0)")));
        }
        let not_divisible = || Error::NotDivisible {
            dividend: a.to_string(),
            divisor: b.to_string(),
        };
        match (self, a, b) {
            (Ring::Int, Elem::Int(x), Elem::Int(y)) => {
                let (q, r) = x.div_rem(y);
                if r.is_zero() {
                    Ok(Elem::Int(q))
                } else {
                    Err(not_divisible())
                }
            }
            (Ring::Fp(_), _, _) => Ok(self.mul(a, &self.inv_unit(b)?)),
            (Ring::Nil16, _, _) => {
                // Quotients by zero divisors are not unique here.
                if !self.is_unit(b) {
                    return Err(Error::CapabilityMissing {
                        op: "exact_div by a non-unit",
                        ring: self.to_string(),
                    });
                }
                Ok(self.mul(a, &self.inv_unit(b)?))
            }
            _ => self.mixed(a, b),
        }
    }

    /// Splits `a = u * c` with `u` a unit and `c` the canonical associate
    /// (non-negative over `Z`, `0` or `1` over `F_p`, the smallest bit
    /// pattern in the unit orbit over `Nil16`).
    pub fn canon_assoc(&self, a: &Elem) -> (Elem, Elem) {
        match (self, a) {
            (Ring::Int, Elem::Int(v)) => {
                if v.is_negative() {
                    (Elem::Int(-BigInt::one()), Elem::Int(-v))
                } else {
                    (self.one(), a.clone())
                }
            }
            (Ring::Fp(_), Elem::Fp(v)) => {
                if *v == 0 {
                    (self.one(), self.zero())
                } else {
                    (a.clone(), self.one())
                }
            }
            (Ring::Nil16, Elem::Nil(v)) => {
                let (unit, c) = (0..16u8)
                    .filter(|u| u & NIL_ONE != 0)
                    .map(|u| (u, nil_mul(u, *v)))
                    .min_by_key(|&(_, c)| c)
                    .expect("Nil16 has units");
                // a = unit^{-1} * c
                let inv = self.inv_unit(&Elem::Nil(unit)).expect("orbit uses units");
                (inv, Elem::Nil(c))
            }
            _ => self.mixed(a, a),
        }
    }

    pub fn canonical(&self, a: &Elem) -> Elem {
        self.canon_assoc(a).1
    }

    pub fn are_associates(&self, a: &Elem, b: &Elem) -> bool {
        self.canonical(a) == self.canonical(b)
    }

    /// Parses the element text format of this ring.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let bad = |what: &str| Error::parse(1, 1, format!("invalid {what} element {s:?} for ring {self}"));
        match self {
            Ring::Int | Ring::Fp(_) => {
                let v: BigInt = s.parse().map_err(|_| bad("integer"))?;
                Ok(self.from_bigint(&v))
            }
            Ring::Nil16 => {
                if s == "0" {
                    return Ok(Elem::Nil(0));
                }
                let mut bits = 0u8;
                for term in s.split('+') {
                    let term = term.trim();
                    let (b, _) = NIL_NAMES
                        .iter()
                        .find(|(_, name)| *name == term)
                        .ok_or_else(|| bad("nil16"))?;
                    bits ^= b;
                }
                Ok(Elem::Nil(bits))
            }
        }
    }

    /// Every element of a finite ring, in ascending storage order.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match self {
            Ring::Int => None,
            Ring::Fp(p) => Some((0..*p).map(Elem::Fp).collect()),
            Ring::Nil16 => Some((0..16).map(Elem::Nil).collect()),
        }
    }
}

fn fp_inverse(v: u32, p: u32) -> u32 {
    // v^(p-2) mod p
    let (mut base, mut exp, mut acc) = (v as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn int_xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Elem {
        Ring::Int.from_i64(v)
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(Ring::Int.add(&int(2), &int(-2)), int(0));
        let f3 = Ring::Fp(3);
        assert_eq!(f3.mul(&Elem::Fp(2), &Elem::Fp(2)), Elem::Fp(1));
        let x = Ring::nil(NIL_X);
        assert_eq!(Ring::Nil16.mul(&x, &x), Elem::Nil(0));
        assert_eq!(Ring::Nil16.mul(&x, &Ring::nil(NIL_Y)), Elem::Nil(NIL_XY));
    }

    #[test]
    #[should_panic(expected = "mixed-ring")]
    fn mixed_operands_panic() {
        Ring::Int.add(&int(1), &Elem::Fp(1));
    }

    #[test]
    fn units() {
        assert!(Ring::Int.is_unit(&int(-1)));
        assert!(!Ring::Int.is_unit(&int(2)));
        let u = Ring::nil(NIL_ONE | NIL_XY);
        assert!(Ring::Nil16.is_unit(&u));
        let inv = Ring::Nil16.inv_unit(&u).unwrap();
        assert_eq!(inv, u);
        assert_eq!(Ring::Nil16.mul(&inv, &u), Ring::Nil16.one());
        assert!(matches!(Ring::Int.inv_unit(&int(2)), Err(Error::NonUnit(_))));
        assert_eq!(Ring::Fp(7).inv_unit(&Elem::Fp(3)).unwrap(), Elem::Fp(5));
    }

    #[test]
    fn xgcd_examples() {
        assert_eq!(Ring::Int.xgcd(&int(6), &int(10)).unwrap(), (int(2), int(2), int(-1)));
        assert_eq!(Ring::Int.xgcd(&int(0), &int(-7)).unwrap(), (int(7), int(0), int(-1)));
        assert_eq!(Ring::Int.xgcd(&int(0), &int(0)).unwrap(), (int(0), int(0), int(0)));
        assert_eq!(
            Ring::Fp(5).xgcd(&Elem::Fp(3), &Elem::Fp(0)).unwrap(),
            (Elem::Fp(1), Elem::Fp(2), Elem::Fp(0))
        );
        assert!(matches!(
            Ring::Nil16.xgcd(&Elem::Nil(1), &Elem::Nil(2)),
            Err(Error::CapabilityMissing { .. })
        ));
    }

    #[test]
    fn gcd_list_examples() {
        let (g, _) = Ring::Int.gcd_list(&[int(-30), int(15), int(2)]).unwrap();
        assert_eq!(g, int(1));
        let v = [int(6), int(10), int(15)];
        let (g, coeffs) = Ring::Int.gcd_list(&v).unwrap();
        assert_eq!(g, int(1));
        assert_eq!(coeffs, vec![int(-14), int(7), int(1)]);
        let (g, _) = Ring::Int.gcd_list(&[int(0), int(0), int(0)]).unwrap();
        assert_eq!(g, int(0));
        assert!(matches!(Ring::Int.gcd_list(&[]), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(Ring::Int.exact_div(&int(-30), &int(1)).unwrap(), int(-30));
        assert!(matches!(
            Ring::Int.exact_div(&int(7), &int(3)),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(Ring::Fp(7).exact_div(&Elem::Fp(3), &Elem::Fp(5)).unwrap(), Elem::Fp(2));
        assert!(Ring::Int.exact_div(&int(7), &int(0)).is_err());
    }

    #[test]
    fn canon_assoc_examples() {
        assert_eq!(Ring::Int.canon_assoc(&int(-30)), (int(-1), int(30)));
        assert_eq!(Ring::Int.canon_assoc(&int(0)), (int(1), int(0)));
        assert_eq!(Ring::Fp(5).canon_assoc(&Elem::Fp(4)), (Elem::Fp(4), Elem::Fp(1)));
    }

    #[test]
    fn nil16_canon_assoc_round_trips() {
        let r = Ring::Nil16;
        for a in r.elements().unwrap() {
            let (u, c) = r.canon_assoc(&a);
            assert!(r.is_unit(&u));
            assert_eq!(r.mul(&u, &c), a);
        }
    }

    #[test]
    fn nil16_axioms_exhaustive() {
        let r = Ring::Nil16;
        let all = r.elements().unwrap();
        for a in &all {
            for b in &all {
                assert_eq!(r.mul(a, b), r.mul(b, a));
                assert_eq!(r.add(a, b), r.add(b, a));
                for c in &all {
                    assert_eq!(r.mul(a, &r.mul(b, c)), r.mul(&r.mul(a, b), c));
                    assert_eq!(r.add(a, &r.add(b, c)), r.add(&r.add(a, b), c));
                    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
                }
            }
            assert_eq!(r.mul(a, &r.one()), *a);
            assert_eq!(r.add(a, &r.neg(a)), r.zero());
        }
        // 2 = 1 + 1 = 0
        assert_eq!(r.add(&r.one(), &r.one()), r.zero());
        assert!(r.two_is_zero_divisor());
    }

    #[test]
    fn selectors_and_text() {
        assert_eq!("int".parse::<Ring>().unwrap(), Ring::Int);
        assert_eq!("fp:7".parse::<Ring>().unwrap(), Ring::Fp(7));
        assert_eq!("nil16".parse::<Ring>().unwrap(), Ring::Nil16);
        assert!("fp:9".parse::<Ring>().is_err());
        assert!("fp:65537".parse::<Ring>().is_err());
        assert!("rat".parse::<Ring>().is_err());

        let n = Ring::Nil16;
        let e = n.parse_elem("X+Y+XY").unwrap();
        assert_eq!(e, Elem::Nil(NIL_X | NIL_Y | NIL_XY));
        assert_eq!(e.to_string(), "X+Y+XY");
        assert_eq!(n.parse_elem("0").unwrap().to_string(), "0");
        assert!(n.parse_elem("Z").is_err());
        assert_eq!(Ring::Fp(5).parse_elem("-1").unwrap(), Elem::Fp(4));
        assert_eq!(Ring::Int.parse_elem("-123456789012345678901234567890").unwrap().to_string(),
            "-123456789012345678901234567890");
    }

    #[test]
    fn capability_flags() {
        assert!(Ring::Int.is_domain() && Ring::Int.has_bezout() && !Ring::Int.two_is_zero_divisor());
        assert!(Ring::Fp(2).two_is_zero_divisor());
        assert!(!Ring::Fp(3).two_is_zero_divisor());
        assert!(!Ring::Nil16.is_domain() && !Ring::Nil16.has_bezout());
    }
}
