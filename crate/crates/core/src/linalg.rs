//! Exact dense linear algebra over any [`Field`] by Gauss-Jordan elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub type Vector = Vec<FieldElement>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let nrows = rows.len();
        let data: Vec<_> = rows.into_iter().flatten().collect();
        if data.iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape("column length differs from row count".into()));
        }
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch);
                }
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Side-by-side concatenation; all blocks need the same row count.
    pub fn hstack(blocks: &[Matrix]) -> Result<Matrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::Shape("hstack of no blocks".into()))?;
        let rows = first.rows;
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Shape("hstack blocks differ in row count".into()));
        }
        if blocks.iter().any(|b| b.field != first.field) {
            return Err(Error::FieldMismatch);
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(&first.field, rows, cols);
        let mut off = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    m.set(r, off + c, b.get(r, c).clone());
                }
            }
            off += b.cols;
        }
        Ok(m)
    }

    pub fn mul_vec(&self, x: &[FieldElement]) -> Result<Vector> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), x)).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Inner product; panics on length or field mismatch.
pub fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    let field = a.first().or(b.first()).map(|x| x.field().clone());
    let mut acc = match field {
        Some(f) => f.zero(),
        None => panic!("dot product of empty vectors has no field"),
    };
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// Reduced row echelon form and the pivot column of each nonzero row.
/// Pivots are chosen as the first nonzero entry at or below the current row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = a.get(row, col).inv().expect("nonzero pivot");
        for c in col..a.cols {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..a.cols {
                let v = a.get(r, c) - &(&factor * a.get(row, c));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Indices of a maximal set of linearly independent columns.
pub fn pivot_columns(m: &Matrix) -> Vec<usize> {
    rref(m).1
}

/// A particular solution of `m x = b` with every free variable set to zero,
/// or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[FieldElement]) -> Result<Option<Vector>> {
    if b.len() != m.rows {
        return Err(Error::Shape(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            m.rows
        )));
    }
    let rhs = Matrix::from_columns(&m.field, m.rows, &[b.to_vec()])?;
    let aug = Matrix::hstack(&[m.clone(), rhs])?;
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![m.field.zero(); m.cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r.get(row, m.cols).clone();
    }
    Ok(Some(x))
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace(m: &Matrix) -> Vec<Vector> {
    let (r, pivots) = rref(m);
    let free = (0..m.cols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![m.field.zero(); m.cols];
        v[f] = m.field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, f);
        }
        v
    })
    .collect()
}

/// Rank of the stacked `[normal | rhs]` matrix of a list of affine equations
/// `normal . w = rhs`.
pub fn augmented_rank(field: &Field, equations: &[(Vector, FieldElement)]) -> Result<usize> {
    let width = equations.first().map_or(0, |(n, _)| n.len());
    if equations.iter().any(|(n, _)| n.len() != width) {
        return Err(Error::Shape("equations differ in width".into()));
    }
    let rows = equations
        .iter()
        .map(|(n, r)| {
            let mut row = n.clone();
            row.push(r.clone());
            row
        })
        .collect();
    Ok(rank(&Matrix::from_rows(field, rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        let f = q();
        Matrix::from_rows(
            &f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn vecq(v: &[i64]) -> Vector {
        v.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(&q(), 3)), 3);
        assert_eq!(rank(&Matrix::zeros(&q(), 3, 4)), 0);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn solve_examples() {
        let x = solve(&mat(&[&[1, 1], &[0, 1]]), &vecq(&[2, 1])).unwrap();
        assert_eq!(x, Some(vecq(&[1, 1])));
        assert_eq!(solve(&mat(&[&[1], &[0]]), &vecq(&[0, 1])).unwrap(), None);
        let x = solve(&mat(&[&[1, 2], &[2, 4]]), &vecq(&[0, 0])).unwrap();
        assert_eq!(x, Some(vecq(&[0, 0])));
        assert!(matches!(
            solve(&mat(&[&[1]]), &vecq(&[1, 2])),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::identity(&q(), 3)).is_empty());
        assert_eq!(nullspace(&Matrix::zeros(&q(), 2, 2)).len(), 2);
        let n = nullspace(&mat(&[&[1, 1]]));
        assert_eq!(n, vec![vecq(&[-1, 1])]);
    }

    #[test]
    fn augmented_rank_examples() {
        let f = q();
        let eq = |n: &[i64], r: i64| (vecq(n), f.from_i64(r));
        assert_eq!(
            augmented_rank(&f, &[eq(&[1, 2], 3), eq(&[1, 2], 3)]).unwrap(),
            1
        );
        assert_eq!(
            augmented_rank(&f, &[eq(&[1, 2], 0), eq(&[1, 2], 1)]).unwrap(),
            2
        );
        assert_eq!(rank(&mat(&[&[1, 2], &[1, 2]])), 1);
        let three = [eq(&[1, 0, 0], 1), eq(&[0, 1, 0], 2), eq(&[0, 0, 1], 3)];
        assert_eq!(augmented_rank(&f, &three).unwrap(), 3);
        assert!(augmented_rank(&f, &[eq(&[1], 0), eq(&[1, 2], 0)]).is_err());
    }

    #[test]
    fn hstack_and_transpose() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[5], &[6]]);
        let h = Matrix::hstack(&[a.clone(), b]).unwrap();
        assert_eq!(h, mat(&[&[1, 2, 5], &[3, 4, 6]]));
        assert_eq!(a.transpose(), mat(&[&[1, 3], &[2, 4]]));
        assert!(Matrix::hstack(&[a, mat(&[&[1]])]).is_err());
    }
}
