use super::{Field, FieldElement};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

/// Matrix over a number field.
pub type KMatrix = Matrix<FieldElement>;

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, entries: Vec<E>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entries length must be rows·cols");
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        Matrix { rows: n, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }
}

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning rows top-down within the current column, so the result depends
/// only on the input and not on any heuristic.
fn rref<F: Field>(k: &F, m: &Matrix<F::Elem>) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut a: Vec<Vec<F::Elem>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !k.is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(row, p);
        let inv = k.inv(&a[row][col]);
        for c in col..m.cols {
            a[row][c] = k.mul(&a[row][c], &inv);
        }
        for r in 0..a.len() {
            if r == row || k.is_zero(&a[r][col]) {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..m.cols {
                let t = k.mul(&factor, &a[row][c]);
                a[r][c] = k.sub(&a[r][c], &t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

/// Rank and a kernel basis (vectors `v` with `M·v = 0`).
///
/// The kernel basis is the standard one read off the reduced row echelon
/// form: one vector per free column, with a 1 in that column.
pub fn rank_and_kernel<F: Field>(k: &F, m: &Matrix<F::Elem>) -> (usize, Vec<Vec<F::Elem>>) {
    let (reduced, pivots) = rref(k, m);
    let rank = pivots.len();
    let mut kernel = Vec::new();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); m.cols];
        v[free] = k.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = k.neg(&reduced[r][free]);
        }
        kernel.push(v);
    }
    (rank, kernel)
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant<F: Field>(k: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    let mut a: Vec<Vec<F::Elem>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut det = k.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !k.is_zero(&a[r][col])) else {
            return k.zero();
        };
        if p != col {
            a.swap(p, col);
            det = k.neg(&det);
        }
        det = k.mul(&det, &a[col][col]);
        let inv = k.inv(&a[col][col]);
        for r in col + 1..n {
            if k.is_zero(&a[r][col]) {
                continue;
            }
            let factor = k.mul(&a[r][col], &inv);
            for c in col..n {
                let t = k.mul(&factor, &a[col][c]);
                a[r][c] = k.sub(&a[r][c], &t);
            }
        }
    }
    det
}
