use super::{FieldElement, FieldError, FieldSpec};

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, Debug)]
pub struct MatrixGF {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl MatrixGF {
    pub fn new(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self, FieldError> {
        if entries.len() != rows * cols {
            return Err(FieldError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(MatrixGF {
            field: field.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field: field.clone(),
            rows,
            cols,
            entries: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Stacks equal-length row vectors. `cols` is needed for the empty case.
    pub fn from_rows<R: AsRef<[FieldElement]>>(
        field: &FieldSpec,
        cols: usize,
        rows: &[R],
    ) -> Result<Self, FieldError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(FieldError::Shape {
                    rows: rows.len(),
                    cols,
                    len: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, entries)
    }

    /// Convenience constructor from small integers, reduced into the prime field.
    pub fn from_ints(field: &FieldSpec, rows: usize, cols: usize, vals: &[i64]) -> Self {
        let entries = vals.iter().map(|&v| field.from_int(v)).collect();
        Self::new(field, rows, cols, entries).expect("shape")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| {
                        self.field.add(acc, self.field.mul(a, b))
                    })
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Columns are scanned left to right; within a column the first nonzero
    /// row at or below the current pivot row is chosen. The result is
    /// therefore fully determined by the input.
    pub fn rref(&self) -> (MatrixGF, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            if r != prow {
                for j in 0..cols {
                    m.entries.swap(r * cols + j, prow * cols + j);
                }
            }
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            f.scale_in_place(&mut m.entries[prow * cols..(prow + 1) * cols], inv);
            let pivot_row = m.row(prow).to_vec();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, c);
                if !factor.is_zero() {
                    let neg = f.neg(factor);
                    f.axpy(&mut m.entries[r * cols..(r + 1) * cols], neg, &pivot_row);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(&self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.row(r));
            if basis.rank() == self.cols {
                break;
            }
        }
        basis.rank()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column in
    /// increasing column order, with a 1 in its free column.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FieldElement::ZERO; self.cols];
                v[free] = FieldElement::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }
}

/// A subspace kept as fully reduced echelon rows, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    dim: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &FieldSpec, dim: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    /// Reduces `v` against the current rows, returning the remainder.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    fn reduce_in_place(&self, w: &mut [FieldElement]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if !c.is_zero() {
                self.field.axpy(w, self.field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Basis of `{v : row · v = 0 for every row}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<FieldElement>> {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.dim)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FieldElement::ZERO; self.dim];
                v[free] = FieldElement::ONE;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = self.field.neg(row[free]);
                }
                v
            })
            .collect()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(w[pc]).expect("nonzero");
        self.field.scale_in_place(&mut w, inv);
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                self.field.axpy(row, self.field.neg(c), &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p, 1).unwrap()
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        let f = gf(2);
        let m = MatrixGF::identity(&f, 3);
        assert!(m.nullspace().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn equal_rows_over_gf2() {
        let f = gf(2);
        let m = MatrixGF::from_ints(&f, 2, 2, &[1, 1, 1, 1]);
        let ns = m.nullspace();
        assert_eq!(ns, vec![vec![FieldElement::ONE, FieldElement::ONE]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn zero_matrix_rank() {
        let f = gf(3);
        assert_eq!(MatrixGF::zeros(&f, 4, 5).rank(), 0);
        assert_eq!(MatrixGF::zeros(&f, 4, 5).nullspace().len(), 5);
    }

    /// Brute-force kernel size over GF(3) for every 3x3 matrix in a sample.
    #[test]
    fn nullity_matches_enumeration_gf3() {
        let f = gf(3);
        let mut seed = 12345u64;
        for _ in 0..200 {
            let vals: Vec<i64> = (0..9)
                .map(|_| {
                    seed = seed
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    ((seed >> 33) % 3) as i64
                })
                .collect();
            let m = MatrixGF::from_ints(&f, 3, 3, &vals);
            let mut kernel = 0;
            for t in 0..27 {
                let v: Vec<_> = [t % 3, (t / 3) % 3, t / 9]
                    .iter()
                    .map(|&x| f.from_int(x))
                    .collect();
                if m.mul_vec(&v).iter().all(|x| x.is_zero()) {
                    kernel += 1;
                }
            }
            let ns = m.nullspace();
            assert_eq!(3usize.pow(ns.len() as u32), kernel);
            assert_eq!(m.rank() + ns.len(), 3);
            for v in &ns {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn rank_of_stacked_subspace() {
        let f = gf(2);
        // five independent vectors of GF(2)^8 plus the sum of three of them
        let basis: Vec<Vec<i64>> = vec![
            vec![1, 0, 0, 1, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 1, 1, 1, 0, 0, 1],
            vec![1, 1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 1, 0, 1, 0, 1, 0],
        ];
        let extra: Vec<i64> = (0..8)
            .map(|j| (basis[0][j] + basis[2][j] + basis[4][j]) % 2)
            .collect();

        // the subspace spanned by the five has 32 elements, by enumeration
        let mut span = std::collections::BTreeSet::new();
        for mask in 0..32u32 {
            let v: Vec<i64> = (0..8)
                .map(|j| {
                    (0..5)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| basis[i][j])
                        .sum::<i64>()
                        % 2
                })
                .collect();
            span.insert(v);
        }
        assert_eq!(span.len(), 32);
        assert!(span.contains(&extra));

        let mut all: Vec<i64> = basis.concat();
        all.extend(&extra);
        let m = MatrixGF::from_ints(&f, 6, 8, &all);
        assert_eq!(m.rank(), 5);
    }

    #[test]
    fn rref_is_deterministic_and_reduced() {
        let f = gf(5);
        let m = MatrixGF::from_ints(&f, 3, 4, &[0, 2, 4, 1, 3, 1, 0, 2, 3, 3, 4, 3]);
        let (r, pivots) = m.rref();
        for (i, &pc) in pivots.iter().enumerate() {
            assert_eq!(r.get(i, pc), FieldElement::ONE);
            for j in 0..r.rows() {
                if j != i {
                    assert!(r.get(j, pc).is_zero());
                }
            }
        }
        let (r2, p2) = m.rref();
        assert_eq!(r.entries(), r2.entries());
        assert_eq!(pivots, p2);
    }

    #[test]
    fn echelon_basis_membership() {
        let f = gf(3);
        let mut b = EchelonBasis::new(&f, 3);
        let v1: Vec<_> = [1, 2, 0].iter().map(|&x| f.from_int(x)).collect();
        let v2: Vec<_> = [0, 1, 1].iter().map(|&x| f.from_int(x)).collect();
        assert!(b.insert(&v1));
        assert!(b.insert(&v2));
        // 2*v1 + v2
        let sum: Vec<_> = [2, 2, 1].iter().map(|&x| f.from_int(x)).collect();
        assert!(b.contains(&sum));
        assert!(!b.insert(&sum));
        assert!(!b.contains(&[FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE]));
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn echelon_null_space_agrees_with_matrix() {
        let f = gf(5);
        let mut state = 11u64;
        for _ in 0..50 {
            let vals: Vec<i64> = (0..20)
                .map(|_| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    // sparse-ish rows so that ranks vary
                    let d = (state >> 33) % 9;
                    if d < 5 {
                        0
                    } else {
                        d as i64
                    }
                })
                .collect();
            let m = MatrixGF::from_ints(&f, 4, 5, &vals);
            let mut b = EchelonBasis::new(&f, 5);
            for r in 0..4 {
                b.insert(m.row(r));
            }
            assert_eq!(b.null_space(), m.nullspace());
        }
    }

    #[test]
    fn shape_errors() {
        let f = gf(2);
        assert!(MatrixGF::new(&f, 2, 2, vec![FieldElement::ZERO; 3]).is_err());
        assert!(MatrixGF::from_rows(&f, 2, &[vec![FieldElement::ZERO]]).is_err());
    }
}
