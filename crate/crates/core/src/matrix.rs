//! Dense matrices with exact entries over a [`Ring`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// Largest size accepted by the cofactor determinant.
pub const MAX_DET_SIZE: usize = 8;

/// A 2x2 minor position, 1-based: rows `(a, b)` with `a < b` and columns
/// `(c, d)` with `c < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorIndex {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

impl MinorIndex {
    pub fn new(rows: (usize, usize), cols: (usize, usize)) -> Self {
        MinorIndex { rows, cols }
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows ({},{}) cols ({},{})",
            self.rows.0, self.rows.1, self.cols.0, self.cols.1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn from_vec(ring: Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::contract("matrix dimensions must be at least 1"));
        }
        if entries.len() != rows * cols {
            return Err(Error::contract(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            ring.ensure(e)?;
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::contract("ragged rows"));
        }
        Matrix::from_vec(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor mapping integers through `Z -> R`.
    pub fn from_ints<R: AsRef<[i64]>>(ring: Ring, rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(ring, rows)
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn zero_square(ring: Ring, n: usize) -> Self {
        Matrix::zeros(ring, n, n)
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// `E_ij`, 1-based.
    pub fn e_matrix(ring: Ring, n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::contract(format!("E_{i}{j} out of range for n = {n}")));
        }
        let mut m = Matrix::zeros(ring, n, n);
        m.entries[(i - 1) * n + (j - 1)] = ring.one();
        Ok(m)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) -> Result<()> {
        self.ring.ensure(&v)?;
        if i >= self.rows || j >= self.cols {
            return Err(Error::contract(format!("index ({i},{j}) out of range")));
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::contract(format!(
                "matrices over different rings ({} vs {})",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    fn require_square(&self, op: &str) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::contract(format!(
                "{op} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::contract("shape mismatch in add"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&self.ring.neg(&self.ring.one())))
    }

    pub fn scale(&self, k: &Elem) -> Matrix {
        let entries = self.entries.iter().map(|a| self.ring.mul(k, a)).collect();
        Matrix { entries, ..self.clone() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::contract(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = self.ring;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = r.zero();
                for k in 0..self.cols {
                    acc = r.add(&acc, &r.mul(self.get(i, k), other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            ring: r,
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn square(&self) -> Result<Matrix> {
        self.require_square("square")?;
        self.mul(self)
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn trace(&self) -> Result<Elem> {
        let n = self.require_square("trace")?;
        Ok(self.ring.sum((0..n).map(|i| self.get(i, i))))
    }

    /// Laplace expansion along the first row; valid over any commutative ring.
    pub fn det(&self) -> Result<Elem> {
        let n = self.require_square("det")?;
        if n > MAX_DET_SIZE {
            return Err(Error::contract(format!("det limited to n <= {MAX_DET_SIZE}, got {n}")));
        }
        let cols: Vec<usize> = (0..n).collect();
        Ok(self.cofactor_det(0, &cols))
    }

    fn cofactor_det(&self, row: usize, cols: &[usize]) -> Elem {
        let r = self.ring;
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = r.zero();
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if r.is_zero(entry) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = r.mul(entry, &self.cofactor_det(row + 1, &rest));
            acc = if k % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
        }
        acc
    }

    /// Determinant of rows `(r1, r2)` and columns `(c1, c2)` taken in the
    /// given order, 0-based; the order need not be increasing.
    pub(crate) fn minor_ordered(&self, r1: usize, r2: usize, c1: usize, c2: usize) -> Elem {
        self.ring
            .cross_diff(self.get(r1, c1), self.get(r2, c2), self.get(r1, c2), self.get(r2, c1))
    }

    pub fn minor2(&self, m: MinorIndex) -> Result<Elem> {
        let (a, b) = m.rows;
        let (c, d) = m.cols;
        if !(1 <= a && a < b && b <= self.rows) || !(1 <= c && c < d && d <= self.cols) {
            return Err(Error::contract(format!("minor {m} invalid for a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(self.minor_ordered(a - 1, b - 1, c - 1, d - 1))
    }

    /// Every 2x2 minor position in lexicographic `(a,b,c,d)` order.
    pub fn minor_indices(&self) -> impl Iterator<Item = MinorIndex> {
        let (rows, cols) = (self.rows, self.cols);
        (1..=rows).flat_map(move |a| {
            (a + 1..=rows).flat_map(move |b| {
                (1..=cols).flat_map(move |c| (c + 1..=cols).map(move |d| MinorIndex::new((a, b), (c, d))))
            })
        })
    }

    /// `None` when every 2x2 minor vanishes, otherwise the first nonzero one.
    pub fn all_minors2_zero(&self) -> Option<MinorIndex> {
        self.minor_indices().find(|&m| {
            let v = self.minor_ordered(m.rows.0 - 1, m.rows.1 - 1, m.cols.0 - 1, m.cols.1 - 1);
            !self.ring.is_zero(&v)
        })
    }

    /// `T^2` assembled from the trace and 2x2 minors:
    /// `t2[i][j] = t[i][j] Tr(T) + sum_{k != i, j} T_{ik}^{kj}`, where the
    /// minor uses rows `(i, k)` and columns `(k, j)` in that order. The
    /// diagonal case is the same sum with `j = i`.
    pub fn square_entry_formula(&self) -> Result<Matrix> {
        let n = self.require_square("square_entry_formula")?;
        let r = self.ring;
        let tr = self.trace()?;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.mul(self.get(i, j), &tr);
                for k in (0..n).filter(|&k| k != i && k != j) {
                    acc = r.add(&acc, &self.minor_ordered(i, k, k, j));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            ring: r,
            rows: n,
            cols: n,
            entries,
        })
    }

    pub fn gcd_of_entries(&self) -> Result<Elem> {
        Ok(self.ring.gcd_list(&self.entries)?.0)
    }

    /// Column vector times row vector.
    pub fn outer_product(ring: Ring, col: &[Elem], row: &[Elem]) -> Result<Matrix> {
        let entries = col
            .iter()
            .flat_map(|p| row.iter().map(move |q| ring.mul(p, q)))
            .collect();
        Matrix::from_vec(ring, col.len(), row.len(), entries)
    }

    /// `self` in the upper-left corner of an `n x n` zero matrix.
    pub fn padded(&self, n: usize) -> Result<Matrix> {
        if n < self.rows || n < self.cols {
            return Err(Error::contract("padding must not shrink the matrix"));
        }
        let mut out = Matrix::zeros(self.ring, n, n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            ring: self.ring.to_string(),
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(Elem::to_string).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Matrix> {
        let ring: Ring = json.ring.parse()?;
        if json.entries.len() != json.rows || json.entries.iter().any(|r| r.len() != json.cols) {
            return Err(Error::contract(format!(
                "entries do not match the declared {}x{} shape",
                json.rows, json.cols
            )));
        }
        let rows = json
            .entries
            .iter()
            .map(|r| r.iter().map(|s| ring.parse_elem(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ring, rows)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("matrix JSON serializes")
    }

    pub fn parse_json(text: &str) -> Result<Matrix> {
        let json: MatrixJson = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
        Matrix::from_json(&json)
    }

    /// Whitespace-separated integers, one row per line.
    pub fn parse_plain_int(text: &str) -> Result<Matrix> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            let mut col = 0;
            for tok in line.split_whitespace() {
                let offset = line[col..].find(tok).map_or(col, |p| col + p);
                col = offset + tok.len();
                let v = Ring::Int
                    .parse_elem(tok)
                    .map_err(|_| Error::parse(lineno + 1, offset + 1, format!("invalid integer {tok:?}")))?;
                row.push(v);
            }
            if let Some(first) = rows.first().map(Vec::len) {
                if first != row.len() {
                    return Err(Error::parse(
                        lineno + 1,
                        1,
                        format!("row has {} entries, expected {first}", row.len()),
                    ));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::parse(1, 1, "empty matrix"));
        }
        Matrix::from_rows(Ring::Int, rows)
    }

    /// Bracketed row layout, e.g. `[[0, 1], [0, 0]]` split one row per line.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(Elem::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(",\n "))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Wire form of a matrix: entries are strings in the element text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c4() -> Matrix {
        Matrix::from_ints(
            Ring::Int,
            &[[0, 0, 1, 1], [0, 0, 1, 1], [-1, 1, 0, 0], [1, -1, 0, 0]],
        )
        .unwrap()
    }

    fn worked() -> Matrix {
        Matrix::from_ints(Ring::Int, &[[-180, -300, -450], [90, 150, 225], [12, 20, 30]]).unwrap()
    }

    fn int(v: i64) -> Elem {
        Ring::Int.from_i64(v)
    }

    /// Leibniz sum over all permutations, independent of the cofactor path.
    fn leibniz_det(m: &Matrix) -> Elem {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let r = m.ring();
        let n = m.rows();
        let mut acc = r.zero();
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = r.one();
            for (i, &pi) in p.iter().enumerate() {
                term = r.mul(&term, m.get(i, pi));
            }
            acc = if inversions % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
        }
        acc
    }

    #[test]
    fn c4_squares_to_zero_with_zero_trace() {
        let c = c4();
        assert!(c.square().unwrap().is_zero());
        assert_eq!(c.trace().unwrap(), int(0));
        assert_eq!(c.minor2(MinorIndex::new((2, 3), (2, 3))).unwrap(), int(-1));
        assert!(c.all_minors2_zero().is_some());
    }

    #[test]
    fn identity_is_neutral() {
        let t = worked();
        assert_eq!(Matrix::identity(Ring::Int, 3).mul(&t).unwrap(), t);
    }

    #[test]
    fn det_examples() {
        let u = Matrix::from_ints(Ring::Int, &[[-30, 5, -14], [15, -3, 7], [2, 0, 1]]).unwrap();
        assert_eq!(leibniz_det(&u), int(1));
        assert_eq!(u.det().unwrap(), int(1));
        assert_eq!(Matrix::e_matrix(Ring::Int, 3, 1, 3).unwrap().det().unwrap(), int(0));
        assert_eq!(Matrix::identity(Ring::Int, 4).det().unwrap(), int(1));
        assert_eq!(c4().det().unwrap(), leibniz_det(&c4()));
        assert_eq!(c4().det().unwrap(), int(0));
        assert!(Matrix::zeros(Ring::Int, 2, 3).det().is_err());
        assert!(Matrix::identity(Ring::Int, 9).det().is_err());
    }

    #[test]
    fn minors_of_worked_example_vanish() {
        let t = worked();
        assert_eq!(t.minor2(MinorIndex::new((1, 2), (1, 2))).unwrap(), int(0));
        // direct enumeration of all nine minors
        let mut count = 0;
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            for (c, d) in [(1, 2), (1, 3), (2, 3)] {
                assert_eq!(t.minor2(MinorIndex::new((a, b), (c, d))).unwrap(), int(0));
                count += 1;
            }
        }
        assert_eq!(count, 9);
        assert_eq!(t.minor_indices().count(), 9);
        assert_eq!(t.all_minors2_zero(), None);
        assert_eq!(Matrix::zero_square(Ring::Int, 3).all_minors2_zero(), None);
        assert!(t.minor2(MinorIndex::new((2, 1), (1, 2))).is_err());
        assert!(t.minor2(MinorIndex::new((1, 4), (1, 2))).is_err());
    }

    #[test]
    fn square_entry_formula_examples() {
        let t = worked();
        assert!(t.square_entry_formula().unwrap().is_zero());
        assert!(t.square().unwrap().is_zero());
        let n = Ring::Nil16;
        let d = Matrix::from_rows(
            n,
            vec![
                vec![Ring::nil(0b0010), n.zero(), n.zero()],
                vec![n.zero(), Ring::nil(0b0100), n.zero()],
                vec![n.zero(), n.zero(), Ring::nil(0b0110)],
            ],
        )
        .unwrap();
        assert!(d.square_entry_formula().unwrap().is_zero());
        let e13 = Matrix::e_matrix(Ring::Int, 3, 1, 3).unwrap();
        assert!(e13.square_entry_formula().unwrap().is_zero());
    }

    #[test]
    fn gcd_of_entries_examples() {
        assert_eq!(worked().gcd_of_entries().unwrap(), int(1));
        let e = Matrix::e_matrix(Ring::Int, 3, 1, 3).unwrap().scale(&int(3));
        assert_eq!(e.gcd_of_entries().unwrap(), int(3));
        assert_eq!(Matrix::zero_square(Ring::Int, 3).gcd_of_entries().unwrap(), int(0));
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(Ring::Int, 2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.trace().is_err());
        assert!(a.add(&Matrix::zeros(Ring::Int, 3, 2)).is_err());
        assert!(Matrix::zeros(Ring::Int, 2, 2).mul(&Matrix::zeros(Ring::Fp(3), 2, 2)).is_err());
        assert!(Matrix::from_vec(Ring::Int, 2, 2, vec![int(1)]).is_err());
        assert!(Matrix::from_vec(Ring::Fp(3), 1, 1, vec![Elem::Fp(3)]).is_err());
        assert!(Matrix::from_vec(Ring::Int, 1, 1, vec![Elem::Fp(1)]).is_err());
    }

    #[test]
    fn json_and_text_formats() {
        let t = worked();
        let s = t.to_json_string();
        assert_eq!(
            s,
            r#"{"ring":"int","rows":3,"cols":3,"entries":[["-180","-300","-450"],["90","150","225"],["12","20","30"]]}"#
        );
        assert_eq!(Matrix::parse_json(&s).unwrap(), t);
        let plain = Matrix::parse_plain_int("-180 -300 -450\n90 150 225\n12 20 30\n").unwrap();
        assert_eq!(plain, t);
        match Matrix::parse_plain_int("1 2\n3 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Matrix::parse_plain_int("1 2\n3\n").is_err());
        assert!(Matrix::parse_json(r#"{"ring":"int","rows":2,"cols":2,"entries":[["1"]]}"#).is_err());
        assert!(matches!(Matrix::parse_json("{nope"), Err(Error::Parse { .. })));
        assert_eq!(
            Matrix::from_ints(Ring::Int, &[[0, 1], [0, 0]]).unwrap().to_text(),
            "[[0, 1],\n [0, 0]]"
        );
    }
}
