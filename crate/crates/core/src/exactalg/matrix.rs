use super::field::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    /// # Panics
    /// If `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entries length must be rows × cols");
        Self { rows, cols, entries }
    }

    /// Builds a matrix from row vectors. `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        Self::new(n, cols, entries)
    }

    pub fn zeros<F: Field<Elem = T>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity<F: Field<Elem = T>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The submatrix made of the first `n` rows.
    pub fn top_rows(&self, n: usize) -> Self {
        let n = n.min(self.rows);
        Self::new(n, self.cols, self.entries[..n * self.cols].to_vec())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(f).collect())
    }

    pub fn mul_vec<F: Field<Elem = T>>(&self, field: &F, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }
}

/// Row echelon form produced by fraction-free elimination.
pub(crate) struct Echelon<T> {
    /// The first `pivots.len()` rows are the nonzero echelon rows.
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
}

/// Bareiss elimination. Over a field the "exact division" by the previous
/// pivot is a field division; for integral inputs over ℚ every quotient is
/// again integral, which keeps entry growth polynomial.
pub(crate) fn bareiss_echelon<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let cols = m.cols();
    let mut a = m.row_vecs();
    for r in a.iter_mut() {
        field.normalize(r);
    }
    let nrows = a.len();
    let mut prev = field.one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(p, r);
        let prev_inv = field.inv(&prev).expect("pivot is nonzero");
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = &pivot_row[c];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let t = field.sub(&field.mul(piv, &row[j]), &field.mul(&lead, &pivot_row[j]));
                row[j] = field.mul(&t, &prev_inv);
            }
            row[c] = field.zero();
        }
        prev = piv.clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: a, pivots }
}

/// Exact rank over the matrix's field.
pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    bareiss_echelon(field, m).pivots.len()
}

/// Basis of the right null space `{v : Mv = 0}`.
///
/// Vectors come in reduced column-echelon order: one per non-pivot column,
/// ascending, each with a one in its own free column and zeros in the other
/// free columns before normalization. Every vector is then passed through
/// [`Field::normalize`], so over ℚ entries are coprime integers with a
/// positive leading entry.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let ech = bareiss_echelon(field, m);
    kernel_from_echelon(field, m.cols(), &ech)
}

pub(crate) fn kernel_from_echelon<F: Field>(
    field: &F,
    cols: usize,
    ech: &Echelon<F::Elem>,
) -> Vec<Vec<F::Elem>> {
    let rank = ech.pivots.len();
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let pivot_inv: Vec<F::Elem> = (0..rank)
        .map(|i| field.inv(&ech.rows[i][ech.pivots[i]]).expect("nonzero pivot"))
        .collect();
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for i in (0..rank).rev() {
                let p = ech.pivots[i];
                if p > f {
                    continue;
                }
                let row = &ech.rows[i];
                let s = (p + 1..cols)
                    .filter(|&j| !field.is_zero(&v[j]))
                    .fold(field.zero(), |acc, j| field.add(&acc, &field.mul(&row[j], &v[j])));
                v[p] = field.neg(&field.mul(&s, &pivot_inv[i]));
            }
            field.normalize(&mut v);
            v
        })
        .collect()
}
