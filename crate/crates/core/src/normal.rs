//! Zero-square matrices: characterization checks, rank-one factorization,
//! similarity certificates for sizes 2 and 3, and rank obstructions for
//! sizes 4 and up.
//!
//! For a zero-square `T` of size 2 or 3 over a Bezout domain, `T = m a^T`
//! with `a` primitive and `a . m = Tr(T) = 0`. With `r = gcd(m) = gcd(T)`,
//! `c = m / r` and `b` a Bezout witness for `a` (`a . b = 1`), any invertible
//! `U` whose first column is `c`, whose last column is `b` and whose middle
//! columns are orthogonal to `a` satisfies `T U = U (r E_1n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, MatrixJson, MinorIndex};
use crate::ring::{Elem, Ring};
use crate::vec3::{complete_orthogonal, Vec3};

/// `T[i][j] = multipliers[i] * primitive[j]` for a nonzero 3x3 rank-one `T`.
///
/// `delta` is the multiplier of the first row (a gcd of that row, sign
/// included so that `row_1 = delta * primitive`). `lambda` and `gamma` are
/// the canonical gcds of rows 2 and 3, and `u`, `v` the units with
/// `row_2 = lambda * u * primitive` and `row_3 = gamma * v * primitive`.
/// Zero rows have gcd 0 and unit 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneFactorization {
    pub primitive: Vec3,
    pub multipliers: Vec3,
    pub delta: Elem,
    pub lambda: Elem,
    pub gamma: Elem,
    pub u: Elem,
    pub v: Elem,
}

/// `(r, U)` with `T U = U (r E_1n)` and `det(U) = det_unit` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityCertificate {
    pub n: usize,
    pub r: Elem,
    pub u: Matrix,
    pub det_unit: Elem,
}

/// A nonzero 2x2 minor. Over a domain it proves rank at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub minor: MinorIndex,
    pub value: Elem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailReason {
    ShapeMismatch,
    RingMismatch,
    DetNotUnit,
    DetUnitMismatch,
    ProductMismatch,
    RNotGcd,
}

impl FailReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailReason::ShapeMismatch => "shape-mismatch",
            FailReason::RingMismatch => "ring-mismatch",
            FailReason::DetNotUnit => "det-not-unit",
            FailReason::DetUnitMismatch => "det-unit-mismatch",
            FailReason::ProductMismatch => "product-mismatch",
            FailReason::RNotGcd => "r-not-gcd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    pub reason: Option<FailReason>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.reason.is_none()
    }
}

fn require_square(t: &Matrix) -> Result<usize> {
    if !t.is_square() {
        return Err(Error::contract(format!("expected a square matrix, got {}x{}", t.rows(), t.cols())));
    }
    Ok(t.rows())
}

fn require_domain(t: &Matrix, op: &'static str) -> Result<()> {
    if !t.ring().is_domain() {
        return Err(Error::CapabilityMissing {
            op,
            ring: t.ring().to_string(),
        });
    }
    Ok(())
}

fn require_bezout_domain(t: &Matrix, op: &'static str) -> Result<()> {
    require_domain(t, op)?;
    if !t.ring().has_bezout() {
        return Err(Error::CapabilityMissing {
            op,
            ring: t.ring().to_string(),
        });
    }
    Ok(())
}

pub fn is_zero_square(t: &Matrix) -> Result<bool> {
    require_square(t)?;
    Ok(t.square()?.is_zero())
}

/// `(det(T) = 0, Tr(T) = 0)`; over a domain both hold whenever `T^2 = 0`.
pub fn check_domain_necessary(t: &Matrix) -> Result<(bool, bool)> {
    require_square(t)?;
    require_domain(t, "check_domain_necessary")?;
    let r = t.ring();
    Ok((r.is_zero(&t.det()?), r.is_zero(&t.trace()?)))
}

/// For trace-zero 3x3 `T`: `(T^2 = 0, all 2x2 minors vanish)`. The two agree
/// whenever 2 is not a zero divisor.
pub fn theorem_2min_check(t: &Matrix) -> Result<(bool, bool)> {
    if t.rows() != 3 || t.cols() != 3 {
        return Err(Error::contract("theorem_2min_check needs a 3x3 matrix"));
    }
    if !t.ring().is_zero(&t.trace()?) {
        return Err(Error::contract("theorem_2min_check needs Tr(T) = 0"));
    }
    let lhs = is_zero_square(t)?;
    let rhs = t.all_minors2_zero().is_none();
    debug_assert!(
        t.ring().two_is_zero_divisor() || lhs == rhs,
        "zero-square and minor vanishing disagree over {} for {t}",
        t.ring()
    );
    Ok((lhs, rhs))
}

/// `T = m a^T` with `a` primitive and canonically normalized (its first
/// nonzero component is a canonical associate).
fn factor_rank_one(t: &Matrix) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let r = t.ring();
    if t.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    if let Some(witness) = t.all_minors2_zero() {
        return Err(Error::NotRankOne { witness });
    }
    let lead = (0..t.rows())
        .find(|&i| t.row(i).iter().any(|e| !r.is_zero(e)))
        .expect("nonzero matrix has a nonzero row");
    let row = t.row(lead);
    let (g, _) = r.gcd_list(row)?;
    let mut primitive = row.iter().map(|e| r.exact_div(e, &g)).collect::<Result<Vec<_>>>()?;
    let pivot = primitive
        .iter()
        .position(|e| !r.is_zero(e))
        .expect("nonzero row has a nonzero entry");
    let (unit, _) = r.canon_assoc(&primitive[pivot]);
    let unit_inv = r.inv_unit(&unit)?;
    for e in primitive.iter_mut() {
        *e = r.mul(e, &unit_inv);
    }
    let multipliers = (0..t.rows())
        .map(|i| r.exact_div(t.get(i, pivot), &primitive[pivot]))
        .collect::<Result<Vec<_>>>()?;
    let rebuilt = Matrix::outer_product(r, &multipliers, &primitive)?;
    if &rebuilt != t {
        return Err(Error::InternalInvariantBroken(format!(
            "rank-one factorization does not reproduce {t}"
        )));
    }
    Ok((primitive, multipliers))
}

pub fn factor_rank_one_3x3(t: &Matrix) -> Result<RankOneFactorization> {
    if t.rows() != 3 || t.cols() != 3 {
        return Err(Error::contract("factor_rank_one_3x3 needs a 3x3 matrix"));
    }
    require_bezout_domain(t, "factor_rank_one_3x3")?;
    let r = t.ring();
    let (primitive, multipliers) = factor_rank_one(t)?;
    let (u, lambda) = r.canon_assoc(&multipliers[1]);
    let (v, gamma) = r.canon_assoc(&multipliers[2]);
    Ok(RankOneFactorization {
        delta: multipliers[0].clone(),
        lambda,
        gamma,
        u,
        v,
        primitive: Vec3::from_slice(r, &primitive)?,
        multipliers: Vec3::from_slice(r, &multipliers)?,
    })
}

/// Column, split into `(r, m / r)` with `r` the canonical gcd.
fn split_content(ring: Ring, m: &[Elem]) -> Result<(Elem, Vec<Elem>)> {
    let (content, _) = ring.gcd_list(m)?;
    let c = m.iter().map(|e| ring.exact_div(e, &content)).collect::<Result<Vec<_>>>()?;
    Ok((content, c))
}

fn bezout_witness(ring: Ring, a: &[Elem]) -> Result<Vec<Elem>> {
    let (g, coeffs) = ring.gcd_list(a)?;
    if !ring.is_unit(&g) {
        return Err(Error::InternalInvariantBroken(format!("primitive row has non-unit gcd {g}")));
    }
    let inv = ring.inv_unit(&g)?;
    Ok(coeffs.iter().map(|c| ring.mul(c, &inv)).collect())
}

fn columns_to_matrix(ring: Ring, cols: &[Vec<Elem>]) -> Result<Matrix> {
    let n = cols[0].len();
    let rows = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    Matrix::from_rows(ring, rows)
}

fn precheck_normalize(t: &Matrix, n: usize, op: &'static str) -> Result<()> {
    if t.rows() != n || t.cols() != n {
        return Err(Error::contract(format!("{op} needs a {n}x{n} matrix, got {}x{}", t.rows(), t.cols())));
    }
    require_bezout_domain(t, op)?;
    if !is_zero_square(t)? {
        return Err(Error::NotZeroSquare);
    }
    Ok(())
}

fn finish(t: &Matrix, n: usize, r: Elem, u: Matrix) -> Result<SimilarityCertificate> {
    let det_unit = u.det()?;
    let cert = SimilarityCertificate { n, r, u, det_unit };
    let check = verify_certificate(t, &cert);
    if let Some(reason) = check.reason {
        return Err(Error::InternalInvariantBroken(format!(
            "certificate for {t} failed verification: {}",
            reason.as_str()
        )));
    }
    Ok(cert)
}

fn trivial_certificate(ring: Ring, n: usize) -> SimilarityCertificate {
    SimilarityCertificate {
        n,
        r: ring.zero(),
        u: Matrix::identity(ring, n),
        det_unit: ring.one(),
    }
}

/// Certificate that a zero-square 3x3 `T` is similar to `r E_13`.
///
/// `U = [m/r | x | b]` where `b` is a Bezout witness for the primitive row
/// and `x` comes from the orthogonal completion of `(a, b, m/r)`.
pub fn normalize_3x3(t: &Matrix) -> Result<SimilarityCertificate> {
    precheck_normalize(t, 3, "normalize_3x3")?;
    let ring = t.ring();
    if t.is_zero() {
        return Ok(trivial_certificate(ring, 3));
    }
    let f = factor_rank_one_3x3(t).map_err(|e| match e {
        Error::NotRankOne { witness } => Error::InternalInvariantBroken(format!(
            "zero-square 3x3 matrix over a domain has nonzero minor {witness}"
        )),
        other => other,
    })?;
    let (r, first) = split_content(ring, f.multipliers.components())?;
    let a = f.primitive;
    let c = Vec3::from_slice(ring, &first)?;
    let b = Vec3::from_slice(ring, &bezout_witness(ring, a.components())?)?;
    let done = complete_orthogonal(&a, &b, &c)?;
    let u = columns_to_matrix(
        ring,
        &[c.into_components().to_vec(), done.x.into_components().to_vec(), b.into_components().to_vec()],
    )?;
    finish(t, 3, r, u)
}

/// Certificate that a zero-square 2x2 `T` is similar to `r E_12`.
///
/// `U = [m/r | b]` with `a . b = 1`. Trace zero makes `m/r` a unit multiple
/// of `(-a_2, a_1)`, so `det(U) = -w (a . b)` for a unit `w`.
pub fn normalize_2x2(t: &Matrix) -> Result<SimilarityCertificate> {
    precheck_normalize(t, 2, "normalize_2x2")?;
    let ring = t.ring();
    if t.is_zero() {
        return Ok(trivial_certificate(ring, 2));
    }
    let (a, m) = factor_rank_one(t).map_err(|e| match e {
        Error::NotRankOne { witness } => Error::InternalInvariantBroken(format!(
            "zero-square 2x2 matrix over a domain has nonzero minor {witness}"
        )),
        other => other,
    })?;
    let (r, c) = split_content(ring, &m)?;
    let b = bezout_witness(ring, &a)?;
    let u = columns_to_matrix(ring, &[c, b])?;
    finish(t, 2, r, u)
}

/// Dispatches on size; sizes other than 2 and 3 are rejected.
pub fn normalize(t: &Matrix) -> Result<SimilarityCertificate> {
    match (t.rows(), t.cols()) {
        (2, 2) => normalize_2x2(t),
        (3, 3) => normalize_3x3(t),
        (r, c) => Err(Error::contract(format!("normalization is defined for 2x2 and 3x3, got {r}x{c}"))),
    }
}

/// Checks `T U = U (r E_1n)`, `det(U) = det_unit` a unit, and `r ~ gcd(T)`
/// (skipped over rings without gcds, except that `r = 0` forces `T = 0`).
pub fn verify_certificate(t: &Matrix, cert: &SimilarityCertificate) -> Verification {
    let fail = |reason| Verification { reason: Some(reason) };
    let n = cert.n;
    if !t.is_square() || t.rows() != n || cert.u.rows() != n || cert.u.cols() != n || n < 2 {
        return fail(FailReason::ShapeMismatch);
    }
    let ring = t.ring();
    if cert.u.ring() != ring || !ring.contains(&cert.r) || !ring.contains(&cert.det_unit) {
        return fail(FailReason::RingMismatch);
    }
    let det = match cert.u.det() {
        Ok(d) => d,
        Err(_) => return fail(FailReason::ShapeMismatch),
    };
    if !ring.is_unit(&det) {
        return fail(FailReason::DetNotUnit);
    }
    if det != cert.det_unit {
        return fail(FailReason::DetUnitMismatch);
    }
    let target = Matrix::e_matrix(ring, n, 1, n).expect("n >= 2").scale(&cert.r);
    let lhs = t.mul(&cert.u).expect("shapes checked");
    let rhs = cert.u.mul(&target).expect("shapes checked");
    if lhs != rhs {
        return fail(FailReason::ProductMismatch);
    }
    if ring.is_zero(&cert.r) {
        if !t.is_zero() {
            return fail(FailReason::RNotGcd);
        }
    } else if ring.has_bezout() {
        let g = t.gcd_of_entries().expect("ring has gcds");
        if !ring.are_associates(&cert.r, &g) {
            return fail(FailReason::RNotGcd);
        }
    }
    Verification { reason: None }
}

fn c4(ring: Ring) -> Matrix {
    Matrix::from_ints(ring, &[[0, 0, 1, 1], [0, 0, 1, 1], [-1, 1, 0, 0], [1, -1, 0, 0]])
        .expect("static shape")
}

/// The 4x4 zero-square, trace-zero, rank-2 matrix, padded with zero rows and
/// columns to size `n`.
pub fn counterexample(ring: Ring, n: usize) -> Result<Matrix> {
    if n < 4 {
        return Err(Error::contract(format!("counterexample needs n >= 4, got {n}")));
    }
    c4(ring).padded(n)
}

/// First nonzero 2x2 minor. For zero-square `T` over a domain, `Some` rules
/// out similarity to any multiple of `E_1n`.
pub fn obstruction_witness(t: &Matrix) -> Result<Option<ObstructionWitness>> {
    require_domain(t, "obstruction_witness")?;
    Ok(t.all_minors2_zero().map(|minor| ObstructionWitness {
        minor,
        value: t.minor2(minor).expect("index from enumeration"),
    }))
}

/// Wire form of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub r: String,
    #[serde(rename = "U")]
    pub u: MatrixJson,
    pub det_unit: String,
    #[serde(default)]
    pub verified: bool,
}

impl SimilarityCertificate {
    pub fn to_json(&self, verified: bool) -> CertificateJson {
        CertificateJson {
            n: self.n,
            r: self.r.to_string(),
            u: self.u.to_json(),
            det_unit: self.det_unit.to_string(),
            verified,
        }
    }

    pub fn from_json(json: &CertificateJson) -> Result<Self> {
        let u = Matrix::from_json(&json.u)?;
        let ring = u.ring();
        Ok(SimilarityCertificate {
            n: json.n,
            r: ring.parse_elem(&json.r)?,
            det_unit: ring.parse_elem(&json.det_unit)?,
            u,
        })
    }
}
