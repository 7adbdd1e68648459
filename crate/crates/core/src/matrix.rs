use crate::point::Point;
use crate::scalar::Scalar;

/// Small dense row-major matrix acting on vectors of points.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|r| self.row(r).iter().fold(T::zero(), |a, x| a + x.clone()))
            .collect()
    }

    /// Number of nonzero entries in the row.
    pub fn row_support(&self, r: usize) -> usize {
        self.row(r).iter().filter(|x| !x.is_zero()).count()
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matrix shapes do not chain");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let v = (0..self.cols).fold(T::zero(), |acc, i| {
                    acc + self.get(r, i).clone() * other.get(i, c).clone()
                });
                out.set(r, c, v);
            }
        }
        out
    }

    /// Row `r` of the result is `sum_c self[r][c] * points[c]`. Zero
    /// entries are skipped, so unit rows copy points exactly.
    pub fn apply(&self, points: &[Point<T>]) -> Vec<Point<T>> {
        assert_eq!(self.cols, points.len(), "matrix width must match point count");
        let dim = points.first().map_or(0, Point::dim);
        (0..self.rows)
            .map(|r| {
                let mut acc = Point::origin(dim);
                for (w, p) in self.row(r).iter().zip(points) {
                    if !w.is_zero() {
                        acc.add_scaled(w, p);
                    }
                }
                acc
            })
            .collect()
    }
}
