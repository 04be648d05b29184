//! Ground truth for the constructive algorithms: seeded random zero-square
//! integer matrices, exhaustive enumeration over tiny prime fields, and
//! brute-force similarity search.
//!
//! The enumeration and search code works on raw `u32`/`i64` grids rather
//! than on [`Matrix`] so that it shares no arithmetic with the code it checks.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};

/// Upper bound on the size of an exhaustive search space.
pub const MAX_ENUMERATION: u64 = 1 << 25;

/// Largest entry bound for [`bounded_search_2x2_int`].
pub const MAX_SEARCH_BOUND: i64 = 12;

/// SplitMix64. Constants are fixed so corpora are reproducible everywhere:
/// increment `0x9E3779B97F4A7C15`, multipliers `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB`, shifts 30, 27, 31.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[lo, hi]` by reduction modulo the range width.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        let width = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % width) as i64
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n: usize,
    pub entry_bound: i64,
    pub seed: u64,
    pub conjugation_steps: usize,
}

impl GenConfig {
    pub fn new(n: usize, entry_bound: i64, seed: u64, conjugation_steps: usize) -> Self {
        GenConfig {
            n,
            entry_bound,
            seed,
            conjugation_steps,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.entry_bound < 1 {
            return Err(Error::contract("entry_bound must be at least 1"));
        }
        if !(2..=5).contains(&self.n) {
            return Err(Error::contract(format!("n must be in 2..=5, got {}", self.n)));
        }
        Ok(())
    }
}

const MAX_REDRAWS: usize = 64;
const SHEAR_MAX: i64 = 3;

/// Stream of random zero-square integer matrices `S^-1 (p q^T) S` with
/// `q . p = 0`, where each `S = I + k E_ij` is an integer shear.
#[derive(Debug, Clone)]
pub struct ZeroSquareGenerator {
    cfg: GenConfig,
    rng: SplitMix64,
}

impl ZeroSquareGenerator {
    pub fn new(cfg: GenConfig) -> Result<Self> {
        cfg.validate()?;
        if !(2..=3).contains(&cfg.n) {
            return Err(Error::contract(format!("random_zero_square supports n = 2, 3, got {}", cfg.n)));
        }
        Ok(ZeroSquareGenerator {
            cfg,
            rng: SplitMix64::new(cfg.seed),
        })
    }

    fn draw_vector(&mut self) -> Vec<i64> {
        let b = self.cfg.entry_bound;
        (0..self.cfg.n).map(|_| self.rng.range_i64(-b, b)).collect()
    }

    /// A nonzero `p` orthogonal to `q`.
    fn draw_orthogonal(&mut self, q: &[i64]) -> Vec<BigInt> {
        let b = self.cfg.entry_bound;
        let q: Vec<BigInt> = q.iter().map(|&x| BigInt::from(x)).collect();
        let basis: Vec<Vec<BigInt>> = if q.len() == 2 {
            vec![vec![q[1].clone(), -&q[0]]]
        } else {
            vec![
                vec![q[1].clone(), -&q[0], BigInt::from(0)],
                vec![BigInt::from(0), q[2].clone(), -&q[1]],
                vec![q[2].clone(), BigInt::from(0), -&q[0]],
            ]
        };
        let mut p = vec![BigInt::from(0); q.len()];
        for v in &basis {
            let k = BigInt::from(self.rng.range_i64(-b, b));
            for (pi, vi) in p.iter_mut().zip(v) {
                *pi += &k * vi;
            }
        }
        p
    }

    pub fn next_matrix(&mut self) -> Result<Matrix> {
        let n = self.cfg.n;
        for _ in 0..MAX_REDRAWS {
            let q = self.draw_vector();
            if q.iter().all(|&x| x == 0) {
                continue;
            }
            let p = self.draw_orthogonal(&q);
            if p.iter().all(|x| x == &BigInt::from(0)) {
                continue;
            }
            let mut t: Vec<Vec<BigInt>> = p
                .iter()
                .map(|pi| q.iter().map(|&qj| pi * qj).collect())
                .collect();
            for _ in 0..self.cfg.conjugation_steps {
                let i = self.rng.below(n);
                let j = (i + 1 + self.rng.below(n - 1)) % n;
                let mut k = self.rng.range_i64(-SHEAR_MAX, SHEAR_MAX - 1);
                if k >= 0 {
                    k += 1;
                }
                shear_conjugate(&mut t, i, j, &BigInt::from(k));
            }
            let rows = t
                .into_iter()
                .map(|r| r.into_iter().map(Elem::Int).collect())
                .collect();
            return Matrix::from_rows(Ring::Int, rows);
        }
        Err(Error::contract("generator produced only degenerate draws"))
    }
}

/// `T <- S^-1 T S` with `S = I + k E_ij`, `S^-1 = I - k E_ij`.
fn shear_conjugate(t: &mut [Vec<BigInt>], i: usize, j: usize, k: &BigInt) {
    // T S: col_j += k col_i
    for row in t.iter_mut() {
        let add = k * &row[i];
        row[j] += add;
    }
    // S^-1 (T S): row_i -= k row_j
    let row_j = t[j].clone();
    for (x, y) in t[i].iter_mut().zip(&row_j) {
        *x -= k * y;
    }
}

pub fn random_zero_square(cfg: GenConfig) -> Result<Matrix> {
    ZeroSquareGenerator::new(cfg)?.next_matrix()
}

/// `p q^T` for `q . p = 0`.
pub fn rank_one_zero_square(p: &[i64], q: &[i64]) -> Result<Matrix> {
    if p.len() != q.len() {
        return Err(Error::contract("p and q must have the same length"));
    }
    let dot: i128 = p.iter().zip(q).map(|(&a, &b)| a as i128 * b as i128).sum();
    if dot != 0 {
        return Err(Error::contract("q . p must vanish"));
    }
    let rows: Vec<Vec<i64>> = p.iter().map(|&a| q.iter().map(|&b| a * b).collect()).collect();
    Matrix::from_ints(Ring::Int, &rows)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusHeader {
    pub seed: u64,
    pub n: usize,
    pub entry_bound: i64,
    pub conjugation_steps: usize,
    pub count: usize,
}

/// JSON-lines corpus: a header line, then one matrix JSON per line.
pub fn write_corpus<W: Write>(cfg: GenConfig, count: usize, mut out: W) -> Result<()> {
    let mut generator = ZeroSquareGenerator::new(cfg)?;
    let header = CorpusHeader {
        seed: cfg.seed,
        n: cfg.n,
        entry_bound: cfg.entry_bound,
        conjugation_steps: cfg.conjugation_steps,
        count,
    };
    let io = |e: std::io::Error| Error::contract(format!("write failed: {e}"));
    writeln!(out, "{}", serde_json::to_string(&header).expect("header serializes")).map_err(io)?;
    for _ in 0..count {
        writeln!(out, "{}", generator.next_matrix()?.to_json_string()).map_err(io)?;
    }
    Ok(())
}

fn field_modulus(p: u64) -> Result<u32> {
    match Ring::prime_field(p)? {
        Ring::Fp(p) => Ok(p),
        _ => unreachable!(),
    }
}

fn space_size(p: u32, cells: usize) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..cells {
        total = total.saturating_mul(p as u64);
        if total > MAX_ENUMERATION {
            return Err(Error::contract(format!(
                "enumeration space {p}^{cells} exceeds 2^25"
            )));
        }
    }
    Ok(total)
}

/// Row-major digits of `index` in base `p`, first entry most significant.
fn decode(mut index: u64, p: u32, cells: usize) -> Vec<u32> {
    let mut digits = vec![0; cells];
    for d in digits.iter_mut().rev() {
        *d = (index % p as u64) as u32;
        index /= p as u64;
    }
    digits
}

fn grid_mul(a: &[u32], b: &[u32], n: usize, p: u32) -> Vec<u32> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u64;
            for k in 0..n {
                acc += a[i * n + k] as u64 * b[k * n + j] as u64;
            }
            out[i * n + j] = (acc % p as u64) as u32;
        }
    }
    out
}

fn grid_det(a: &[u32], n: usize, p: u32) -> u32 {
    let p64 = p as i64;
    let g = |i: usize, j: usize| a[i * n + j] as i64;
    let d = match n {
        1 => g(0, 0),
        2 => g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0),
        3 => {
            g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
                + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
        }
        _ => unreachable!("grid_det is only used for n <= 3"),
    };
    d.rem_euclid(p64) as u32
}

fn grid_to_matrix(grid: &[u32], n: usize, p: u32) -> Matrix {
    Matrix::from_vec(Ring::Fp(p), n, n, grid.iter().map(|&v| Elem::Fp(v)).collect())
        .expect("residues are reduced")
}

fn matrix_to_grid(t: &Matrix, p: u32) -> Result<Vec<u32>> {
    if t.ring() != Ring::Fp(p) {
        return Err(Error::contract(format!("matrix is over {}, expected fp:{p}", t.ring())));
    }
    Ok(t.entries()
        .iter()
        .map(|e| match e {
            Elem::Fp(v) => *v,
            _ => unreachable!("ring checked"),
        })
        .collect())
}

/// Every `n x n` matrix over `F_p` with `T^2 = 0`, in lexicographic order.
pub fn enumerate_zero_square_fp(n: usize, p: u64) -> Result<Vec<Matrix>> {
    let p = field_modulus(p)?;
    if n == 0 {
        return Err(Error::contract("n must be positive"));
    }
    let total = space_size(p, n * n)?;
    let mut out = Vec::new();
    for idx in 0..total {
        let grid = decode(idx, p, n * n);
        if grid_mul(&grid, &grid, n, p).iter().all(|&v| v == 0) {
            out.push(grid_to_matrix(&grid, n, p));
        }
    }
    Ok(out)
}

/// Every trace-zero 3x3 matrix over `F_p` (the last diagonal entry is
/// determined by the other eight), in lexicographic order of the free entries.
pub fn enumerate_trace_zero_3x3_fp(p: u64) -> Result<Vec<Matrix>> {
    let p = field_modulus(p)?;
    let total = space_size(p, 8)?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut grid = decode(idx, p, 8);
        let last = (2 * p - grid[0] - grid[4]) % p;
        grid.push(last);
        out.push(grid_to_matrix(&grid, 3, p));
    }
    Ok(out)
}

/// `|GL(n, F_p)| = prod_{k<n} (p^n - p^k)`.
pub fn gl_order(n: usize, p: u64) -> u64 {
    let pn = p.pow(n as u32);
    (0..n).map(|k| pn - p.pow(k as u32)).product()
}

/// `GL(n, F_p)` by rejection on `det != 0`, checked against [`gl_order`].
pub fn enumerate_gl_fp(n: usize, p: u64) -> Result<Vec<Vec<u32>>> {
    let pm = field_modulus(p)?;
    if !(1..=3).contains(&n) {
        return Err(Error::contract("GL enumeration supports n <= 3"));
    }
    let total = space_size(pm, n * n)?;
    let group: Vec<Vec<u32>> = (0..total)
        .map(|idx| decode(idx, pm, n * n))
        .filter(|g| grid_det(g, n, pm) != 0)
        .collect();
    if group.len() as u64 != gl_order(n, p) {
        return Err(Error::InternalInvariantBroken(format!(
            "enumerated {} elements of GL({n}, F_{p}), expected {}",
            group.len(),
            gl_order(n, p)
        )));
    }
    Ok(group)
}

/// First `(r, U)` in lexicographic order of `U` (then `r`) with `U`
/// invertible and `T U = U (r E_1n)`.
pub fn brute_force_similarity_fp(t: &Matrix, p: u64) -> Result<Option<(Elem, Matrix)>> {
    let group = similarity_search_space(t, p)?;
    brute_force_similarity_in(t, p, &group)
}

fn similarity_search_space(t: &Matrix, p: u64) -> Result<Vec<Vec<u32>>> {
    if !(p == 2 || p == 3) {
        return Err(Error::contract(format!("brute-force similarity supports p in {{2, 3}}, got {p}")));
    }
    if !t.is_square() || !(2..=3).contains(&t.rows()) {
        return Err(Error::contract("brute-force similarity supports 2x2 and 3x3 matrices"));
    }
    enumerate_gl_fp(t.rows(), p)
}

/// As [`brute_force_similarity_fp`] with a precomputed `GL(n, F_p)`.
pub fn brute_force_similarity_in(t: &Matrix, p: u64, group: &[Vec<u32>]) -> Result<Option<(Elem, Matrix)>> {
    let pm = field_modulus(p)?;
    let n = t.rows();
    let grid = matrix_to_grid(t, pm)?;
    for u in group {
        if u.len() != n * n {
            return Err(Error::contract("group element has the wrong size"));
        }
        let tu = grid_mul(&grid, u, n, pm);
        // U (r E_1n) is zero except its last column, which is r col_1(U).
        let off_last_zero = (0..n).all(|i| (0..n - 1).all(|j| tu[i * n + j] == 0));
        if !off_last_zero {
            continue;
        }
        for r in 0..pm {
            if (0..n).all(|i| tu[i * n + n - 1] == (r * u[i * n]) % pm) {
                return Ok(Some((Elem::Fp(r), grid_to_matrix(u, n, pm))));
            }
        }
    }
    Ok(None)
}

fn small_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exhaustive search for `(r, U)` with `|U_ij| <= bound`, `det(U) = +-1`,
/// `r = +-gcd(T)` and `T U = U (r E_12)`.
pub fn bounded_search_2x2_int(t: &Matrix, bound: i64) -> Result<Option<(Elem, Matrix)>> {
    if t.ring() != Ring::Int || t.rows() != 2 || t.cols() != 2 {
        return Err(Error::contract("bounded search needs a 2x2 integer matrix"));
    }
    if !(0..=MAX_SEARCH_BOUND).contains(&bound) {
        return Err(Error::contract(format!("bound must be in 0..={MAX_SEARCH_BOUND}")));
    }
    let e: Vec<i64> = t
        .entries()
        .iter()
        .map(|x| x.as_bigint().and_then(BigInt::to_i64).filter(|v| v.abs() < 1 << 24))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::contract("entries too large for bounded search"))?;
    let as_matrix = |r: i64, u: [i64; 4]| {
        (Ring::Int.from_i64(r), Matrix::from_ints(Ring::Int, &[[u[0], u[1]], [u[2], u[3]]]).expect("2x2"))
    };
    if e.iter().all(|&v| v == 0) {
        return Ok(Some(as_matrix(0, [1, 0, 0, 1])));
    }
    let g = e.iter().fold(0, |acc, &v| small_gcd(acc, v));
    for r in [g, -g] {
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    for d in -bound..=bound {
                        if (a * d - b * c).abs() != 1 {
                            continue;
                        }
                        // T U = [[0, r a], [0, r c]]
                        let tu = [
                            e[0] * a + e[1] * c,
                            e[0] * b + e[1] * d,
                            e[2] * a + e[3] * c,
                            e[2] * b + e[3] * d,
                        ];
                        if tu == [0, r * a, 0, r * c] {
                            return Ok(Some(as_matrix(r, [a, b, c, d])));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Counts from running [`normalize`](crate::normal::normalize) and the
/// brute-force search side by side over every zero-square matrix of a size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub p: u64,
    pub n: usize,
    pub zero_square_count: usize,
    /// Matrices whose constructed certificate passes verification.
    pub verified: usize,
    /// Matrices for which the search found some `(r, U)`.
    pub oracle_witnesses: usize,
    /// Matrices where either side came up empty.
    pub mismatches: usize,
}

pub fn compare_with_brute_force(p: u64, n: usize) -> Result<OracleSummary> {
    if !(p == 2 || p == 3) || !(2..=3).contains(&n) {
        return Err(Error::contract("oracle supports p in {2, 3} and n in {2, 3}"));
    }
    let matrices = enumerate_zero_square_fp(n, p)?;
    let group = enumerate_gl_fp(n, p)?;
    let mut summary = OracleSummary {
        p,
        n,
        zero_square_count: matrices.len(),
        verified: 0,
        oracle_witnesses: 0,
        mismatches: 0,
    };
    for t in &matrices {
        let ours = crate::normal::normalize(t)
            .ok()
            .filter(|c| crate::normal::verify_certificate(t, c).ok());
        let found = brute_force_similarity_in(t, p, &group)?;
        summary.verified += ours.is_some() as usize;
        summary.oracle_witnesses += found.is_some() as usize;
        if ours.is_none() || found.is_none() {
            summary.mismatches += 1;
        }
    }
    Ok(summary)
}
