//! Dense matrices over an exact field, with the linear algebra the
//! categorical constructions need: products, Kronecker products, kernels,
//! cokernels and linear solves.
//!
//! Tensor bases are ordered with the second factor fastest: the basis vector
//! `v_i ⊗ w_j` of `V ⊗ W` sits at position `i * dim W + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Invariant(format!(
                "matrix of shape {rows}x{cols} given {} entries",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// 1x1 matrix holding `s`.
    pub fn scalar(s: Scalar) -> Matrix {
        Matrix {
            field: s.field(),
            rows: 1,
            cols: 1,
            data: vec![s],
        }
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(entry(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Row-major integer literal; `cols` is needed for the empty case.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "literal has wrong length");
        Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn from_rows_i64(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Matrix::from_i64(field, rows.len(), cols, &flat)
    }

    pub fn column(field: Field, entries: Vec<Scalar>) -> Matrix {
        let n = entries.len();
        Matrix {
            field,
            rows: n,
            cols: 1,
            data: entries,
        }
    }

    /// Standard basis column `e_i` of length `n`.
    pub fn unit_vector(field: Field, n: usize, i: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, 1);
        m.data[i] = field.one();
        m
    }

    /// Permutation matrix of the switch `V ⊗ W → W ⊗ V` with `dim V = m`,
    /// `dim W = n`.
    pub fn swap(field: Field, m: usize, n: usize) -> Matrix {
        let mut out = Matrix::zeros(field, m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                out.data[(j * m + i) * (m * n) + i * n + j] = field.one();
            }
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn col_matrix(&self, c: usize) -> Matrix {
        Matrix::column(self.field, self.col(c))
    }

    fn shape_err(&self, op: &'static str, other: &Matrix) -> Error {
        Error::Shape {
            op,
            lhs_rows: self.rows,
            lhs_cols: self.cols,
            rhs_rows: other.rows,
            rhs_cols: other.cols,
        }
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(self.shape_err("matrix product", other));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * other.cols + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "kron across fields");
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = a.mul_ref(b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(self.shape_err("matrix sum", other));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.add_assign_ref(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(s)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn hstack(parts: &[&Matrix], field: Field, rows: usize) -> Result<Matrix> {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for p in parts {
            if p.rows != rows {
                return Err(Error::Shape {
                    op: "horizontal stack",
                    lhs_rows: rows,
                    lhs_cols: offset,
                    rhs_rows: p.rows,
                    rhs_cols: p.cols,
                });
            }
            for r in 0..rows {
                for c in 0..p.cols {
                    out.data[r * cols + offset + c] = p.get(r, c).clone();
                }
            }
            offset += p.cols;
        }
        Ok(out)
    }

    pub fn vstack(parts: &[&Matrix], field: Field, cols: usize) -> Result<Matrix> {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            if p.cols != cols {
                return Err(Error::Shape {
                    op: "vertical stack",
                    lhs_rows: data.len() / cols.max(1),
                    lhs_cols: cols,
                    rhs_rows: p.rows,
                    rhs_cols: p.cols,
                });
            }
            data.extend(p.data.iter().cloned());
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Sub-block of `rows` x `cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| {
            self.get(r0 + r, c0 + c).clone()
        })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in 0..m.cols {
                let v = m.get(row, c).mul_ref(&inv);
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..m.cols {
                    let sub = factor.mul_ref(m.get(row, c));
                    if !sub.is_zero() {
                        let v = m.get(r, c).sub_ref(&sub);
                        m.data[r * m.cols + c] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null-space basis in the reduced echelon convention: one vector per free
    /// column, carrying a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Matrix> {
        let (r, pivots) = self.rref();
        let field = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![field.zero(); self.cols];
                v[fc] = field.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, fc).clone();
                }
                Matrix::column(field, v)
            })
            .collect()
    }

    /// Kernel basis as the columns of one `cols x k` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        let basis = self.kernel_basis();
        let refs: Vec<&Matrix> = basis.iter().collect();
        Matrix::hstack(&refs, self.field, self.cols).expect("kernel columns share length")
    }

    /// Surjection `q` onto `coker(self)`, with `q · self = 0`. The quotient
    /// basis is the set of standard basis vectors that complete the column
    /// space, chosen by echelon pivots.
    pub fn cokernel(&self) -> (Matrix, usize) {
        let n = self.rows;
        let field = self.field;
        let augmented =
            Matrix::hstack(&[self, &Matrix::identity(field, n)], field, n).expect("same row count");
        let (_, pivots) = augmented.rref();
        let image_cols: Vec<usize> = pivots.iter().copied().filter(|&c| c < self.cols).collect();
        let complement: Vec<usize> = pivots
            .iter()
            .filter(|&&c| c >= self.cols)
            .map(|&c| c - self.cols)
            .collect();
        let mut columns: Vec<Matrix> = image_cols.iter().map(|&c| self.col_matrix(c)).collect();
        columns.extend(complement.iter().map(|&i| Matrix::unit_vector(field, n, i)));
        let refs: Vec<&Matrix> = columns.iter().collect();
        let basis = Matrix::hstack(&refs, field, n).expect("columns share length");
        let inverse = basis.inverse().expect("image plus complement is a basis");
        let dim = complement.len();
        let q = inverse.block(image_cols.len(), dim, 0, n);
        (q, dim)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::hstack(&[self, &Matrix::identity(self.field, n)], self.field, n).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// Some `X` with `self · X = rhs`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        if self.rows != rhs.rows || self.field != rhs.field {
            return None;
        }
        let aug = Matrix::hstack(&[self, rhs], self.field, self.rows).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.data[p * rhs.cols + c] = r.get(i, self.cols + c).clone();
            }
        }
        Some(x)
    }

    /// Whether the column spaces of `self` and `other` coincide.
    pub fn same_column_space(&self, other: &Matrix) -> bool {
        if self.rows != other.rows {
            return false;
        }
        let r = self.rank();
        r == other.rank()
            && Matrix::hstack(&[self, other], self.field, self.rows)
                .map(|m| m.rank() == r)
                .unwrap_or(false)
    }

    /// First column on which two equally shaped matrices disagree.
    pub fn first_difference(&self, other: &Matrix) -> Option<usize> {
        (0..self.cols).find(|&c| (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)))
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: Scalar) -> Matrix {
        let mut m = self.clone();
        m.set(r, c, value);
        m
    }

    /// Product of a chain given in application order: `chain(&[a, b, c])`
    /// is `c · b · a`.
    pub fn chain(maps: &[&Matrix]) -> Result<Matrix> {
        let mut acc = maps[0].clone();
        for m in &maps[1..] {
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }

    /// Parses a row-major table of scalar strings with a known shape.
    pub fn from_strings(
        field: Field,
        rows: usize,
        cols: usize,
        table: &[Vec<String>],
    ) -> Result<Matrix> {
        let declared_rows = table.len();
        if declared_rows != rows || table.iter().any(|row| row.len() != cols) {
            let found_cols = table.first().map_or(0, Vec::len);
            return Err(Error::Parse(format!(
                "expected a {rows}x{cols} matrix, found {declared_rows}x{found_cols}"
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in table {
            for s in row {
                data.push(field.parse_scalar(s)?);
            }
        }
        Matrix::new(field, rows, cols, data)
    }

    pub fn column_string(&self, c: usize) -> String {
        let parts: Vec<String> = self.col(c).iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Witness text when two linear maps differ, `None` when they agree.
pub fn difference(lhs: &Result<Matrix>, rhs: &Result<Matrix>) -> Option<String> {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a.shape() != b.shape() => Some(format!(
            "sides have shapes {}x{} and {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )),
        (Ok(a), Ok(b)) => a.first_difference(b).map(|c| {
            format!(
                "basis vector {c}: {} vs {}",
                a.column_string(c),
                b.column_string(c)
            )
        }),
        (Err(e), _) | (_, Err(e)) => Some(format!("composite undefined: {e}")),
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn identity_law_and_column_swap() {
        let m = Matrix::from_rows_i64(Q, &[vec![1, 2, 0], vec![3, 4, 5], vec![0, 0, 7]]);
        assert_eq!(Matrix::identity(Q, 3).mul(&m).unwrap(), m);
        let a = Matrix::from_rows_i64(Q, &[vec![1, 2], vec![3, 4]]);
        let s = Matrix::from_rows_i64(Q, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            a.mul(&s).unwrap(),
            Matrix::from_rows_i64(Q, &[vec![2, 1], vec![4, 3]])
        );
    }

    #[test]
    fn gf3_product() {
        let f = Field::Prime(3);
        let two = Matrix::from_i64(f, 1, 1, &[2]);
        assert_eq!(two.mul(&two).unwrap(), Matrix::from_i64(f, 1, 1, &[1]));
    }

    #[test]
    fn shape_error_names_both_operands() {
        let a = Matrix::zeros(Q, 2, 3);
        let b = Matrix::zeros(Q, 2, 3);
        match a.mul(&b) {
            Err(Error::Shape {
                lhs_rows: 2,
                lhs_cols: 3,
                rhs_rows: 2,
                rhs_cols: 3,
                ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            Matrix::identity(Q, 2).kron(&Matrix::identity(Q, 3)),
            Matrix::identity(Q, 6)
        );
        let m = Matrix::from_rows_i64(Q, &[vec![1, -1], vec![0, 3]]);
        assert_eq!(
            Matrix::from_i64(Q, 1, 1, &[2]).kron(&m),
            m.scale(&Q.from_i64(2))
        );
        // second factor fastest
        let a = Matrix::from_rows_i64(Q, &[vec![1], vec![2]]);
        let b = Matrix::from_rows_i64(Q, &[vec![10], vec![20]]);
        assert_eq!(
            a.kron(&b),
            Matrix::from_rows_i64(Q, &[vec![10], vec![20], vec![20], vec![40]])
        );
    }

    #[test]
    fn swap_is_a_kron_permutation() {
        let a = Matrix::from_rows_i64(Q, &[vec![1], vec![2]]);
        let b = Matrix::from_rows_i64(Q, &[vec![3], vec![5], vec![7]]);
        let s = Matrix::swap(Q, 2, 3);
        assert_eq!(s.mul(&a.kron(&b)).unwrap(), b.kron(&a));
        assert_eq!(
            Matrix::swap(Q, 3, 2).mul(&s).unwrap(),
            Matrix::identity(Q, 6)
        );
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Q, 4).kernel_basis().is_empty());
        let z = Matrix::zeros(Q, 2, 2);
        assert_eq!(
            z.kernel_basis(),
            vec![Matrix::unit_vector(Q, 2, 0), Matrix::unit_vector(Q, 2, 1)]
        );
        let ones = Matrix::from_rows_i64(Q, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(
            ones.kernel_basis(),
            vec![Matrix::from_rows_i64(Q, &[vec![-1], vec![1]])]
        );
    }

    #[test]
    fn cokernel_examples() {
        let (_, d) = Matrix::identity(Q, 3).cokernel();
        assert_eq!(d, 0);
        let zero = Matrix::zeros(Q, 2, 1);
        let (q, d) = zero.cokernel();
        assert_eq!(d, 2);
        assert_eq!(q, Matrix::identity(Q, 2));
        let diag = Matrix::from_rows_i64(Q, &[vec![1], vec![1]]);
        let (q, d) = diag.cokernel();
        assert_eq!(d, 1);
        assert!(q.mul(&diag).unwrap().is_zero());
        assert_eq!(q.rank(), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_rows_i64(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        let b = Matrix::from_rows_i64(Q, &[vec![3], vec![2]]);
        assert_eq!(
            a.solve(&b).unwrap(),
            Matrix::from_rows_i64(Q, &[vec![1], vec![1]])
        );
        let singular = Matrix::from_rows_i64(Q, &[vec![1, 1], vec![1, 1]]);
        assert!(singular.inverse().is_none());
        assert!(singular
            .solve(&Matrix::from_rows_i64(Q, &[vec![1], vec![0]]))
            .is_none());
        assert_eq!(
            Matrix::zeros(Q, 0, 0).inverse(),
            Some(Matrix::zeros(Q, 0, 0))
        );
    }

    #[test]
    fn string_round_trip() {
        let f = Field::Prime(5);
        let m = Matrix::from_rows_i64(f, &[vec![1, 7], vec![-1, 0]]);
        let s = m.to_strings();
        assert_eq!(s[0][1], "2 mod 5");
        assert_eq!(Matrix::from_strings(f, 2, 2, &s).unwrap(), m);
        assert!(Matrix::from_strings(f, 2, 3, &s).is_err());
    }
}
