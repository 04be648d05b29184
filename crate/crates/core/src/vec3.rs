//! 3-vectors: dot, cross and triple products, unimodularity witnesses and the
//! orthogonal completion used to build the middle column of a similarity
//! transform.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec3 {
    ring: Ring,
    c: [Elem; 3],
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

impl Vec3 {
    pub fn new(ring: Ring, c: [Elem; 3]) -> Result<Self> {
        for e in &c {
            ring.ensure(e)?;
        }
        Ok(Vec3 { ring, c })
    }

    pub fn from_slice(ring: Ring, v: &[Elem]) -> Result<Self> {
        let c: [Elem; 3] = v
            .to_vec()
            .try_into()
            .map_err(|_| Error::contract(format!("a 3-vector needs 3 components, got {}", v.len())))?;
        Vec3::new(ring, c)
    }

    pub fn from_ints(ring: Ring, v: [i64; 3]) -> Self {
        Vec3 {
            ring,
            c: v.map(|x| ring.from_i64(x)),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn components(&self) -> &[Elem; 3] {
        &self.c
    }

    pub fn into_components(self) -> [Elem; 3] {
        self.c
    }

    fn check(&self, other: &Vec3) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::contract("3-vectors over different rings"));
        }
        Ok(())
    }

    pub fn dot(&self, other: &Vec3) -> Result<Elem> {
        self.check(other)?;
        let r = self.ring;
        Ok(r.sum(&[
            r.mul(&self.c[0], &other.c[0]),
            r.mul(&self.c[1], &other.c[1]),
            r.mul(&self.c[2], &other.c[2]),
        ]))
    }

    pub fn cross(&self, other: &Vec3) -> Result<Vec3> {
        self.check(other)?;
        let r = self.ring;
        let (a, b) = (&self.c, &other.c);
        Ok(Vec3 {
            ring: r,
            c: [
                r.cross_diff(&a[1], &b[2], &a[2], &b[1]),
                r.cross_diff(&a[2], &b[0], &a[0], &b[2]),
                r.cross_diff(&a[0], &b[1], &a[1], &b[0]),
            ],
        })
    }

    /// `a . (b x c)`, the determinant of the rows `a, b, c`.
    pub fn triple(a: &Vec3, b: &Vec3, c: &Vec3) -> Result<Elem> {
        a.dot(&b.cross(c)?)
    }

    pub fn scale(&self, k: &Elem) -> Vec3 {
        Vec3 {
            ring: self.ring,
            c: self.c.clone().map(|x| self.ring.mul(k, &x)),
        }
    }

    pub fn sub(&self, other: &Vec3) -> Result<Vec3> {
        self.check(other)?;
        let r = self.ring;
        Ok(Vec3 {
            ring: r,
            c: [
                r.sub(&self.c[0], &other.c[0]),
                r.sub(&self.c[1], &other.c[1]),
                r.sub(&self.c[2], &other.c[2]),
            ],
        })
    }

    /// Some `w` with `self . w = 1` if the components generate the unit
    /// ideal, `None` otherwise.
    pub fn unimodular_witness(&self) -> Result<Option<Vec3>> {
        let r = self.ring;
        let (g, coeffs) = r.gcd_list(&self.c)?;
        if !r.is_unit(&g) {
            return Ok(None);
        }
        let inv = r.inv_unit(&g)?;
        let w = Vec3::from_slice(r, &coeffs)?.scale(&inv);
        debug_assert!(r.is_one(&self.dot(&w)?));
        Ok(Some(w))
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.unimodular_witness()?.is_some())
    }
}

/// Result of [`complete_orthogonal`]: `x` with `a . x = 0` and
/// `det[b; c; x] = unit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub x: Vec3,
    pub unit: Elem,
}

/// Given unimodular `a, b, c` with `a . b = 1` and `a . c = 0`, finds a
/// unimodular `x` orthogonal to `a` with `det[b; c; x]` a unit.
///
/// `x` starts as a Bezout witness for `b x c` (so the triple product is 1)
/// and is then shifted by `-(a . x) b`, which leaves the triple product
/// unchanged.
pub fn complete_orthogonal(a: &Vec3, b: &Vec3, c: &Vec3) -> Result<Completion> {
    let r = a.ring();
    a.check(b)?;
    a.check(c)?;
    if !r.is_one(&a.dot(b)?) {
        return Err(Error::contract("complete_orthogonal requires a . b = 1"));
    }
    if !r.is_zero(&a.dot(c)?) {
        return Err(Error::contract("complete_orthogonal requires a . c = 0"));
    }
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if !v.is_unimodular()? {
            return Err(Error::contract(format!("complete_orthogonal requires {name} = {v} unimodular")));
        }
    }
    let bc = b.cross(c)?;
    let x0 = bc
        .unimodular_witness()?
        .ok_or_else(|| Error::InternalInvariantBroken(format!("b x c = {bc} is not unimodular")))?;
    let s = a.dot(&x0)?;
    let x = x0.sub(&b.scale(&s))?;
    let unit = Vec3::triple(b, c, &x)?;
    if !r.is_zero(&a.dot(&x)?) || !r.is_unit(&unit) {
        return Err(Error::InternalInvariantBroken(format!(
            "completion x = {x} failed its own check (triple = {unit})"
        )));
    }
    Ok(Completion { x, unit })
}
