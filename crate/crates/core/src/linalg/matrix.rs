//! Sparse matrices with exact entries.

use super::{Ring, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// A sparse matrix over the active ring. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            ring,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: Ring, data: &[Vec<i64>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let mut m = Self::zero(ring, rows, cols);
        for (i, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Scalar::from_i64(ring, v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        assert_eq!(v.ring(), self.ring, "entry ring mismatch");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let cur = self.get(i, j);
        self.set(i, j, &cur + v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zero(self.ring, self.cols, self.rows);
        for (i, j, v) in self.iter() {
            t.set(j, i, v.clone());
        }
        t
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.ring, rhs.ring);
        let mut out = SparseMatrix::zero(self.ring, self.rows, rhs.cols);
        // Group rhs rows for sparse row-times-matrix accumulation.
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (i, j, v) in rhs.iter() {
            rhs_rows.entry(i).or_default().push((j, v));
        }
        for (i, k, a) in self.iter() {
            if let Some(row) = rhs_rows.get(&k) {
                for (j, b) in row {
                    out.add_to(i, *j, &(a * b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.ring.zero(); self.rows];
        for (i, j, a) in self.iter() {
            out[i] = &out[i] + &(a * &v[j]);
        }
        out
    }

    /// Rows `i` and `r` swapped, in place.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let mut moved: Vec<(usize, usize, Scalar)> = Vec::new();
        for (&(i, j), v) in self.entries.iter() {
            if i == a {
                moved.push((b, j, v.clone()));
            } else if i == b {
                moved.push((a, j, v.clone()));
            }
        }
        self.entries.retain(|&(i, _), _| i != a && i != b);
        for (i, j, v) in moved {
            self.entries.insert((i, j), v);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let mut moved: Vec<(usize, usize, Scalar)> = Vec::new();
        for (&(i, j), v) in self.entries.iter() {
            if j == a {
                moved.push((i, b, v.clone()));
            } else if j == b {
                moved.push((i, a, v.clone()));
            }
        }
        self.entries.retain(|&(_, j), _| j != a && j != b);
        for (i, j, v) in moved {
            self.entries.insert((i, j), v);
        }
    }

    /// `row[a] += c * row[b]`, in place.
    pub fn add_row_multiple(&mut self, a: usize, b: usize, c: &Scalar) {
        let row_b: Vec<(usize, Scalar)> = self
            .entries
            .range((b, 0)..=(b, usize::MAX))
            .map(|(&(_, j), v)| (j, v.clone()))
            .collect();
        for (j, v) in row_b {
            self.add_to(a, j, &(c * &v));
        }
    }

    /// `col[a] += c * col[b]`, in place.
    pub fn add_col_multiple(&mut self, a: usize, b: usize, c: &Scalar) {
        let col_b: Vec<(usize, Scalar)> = self
            .entries
            .iter()
            .filter(|(&(_, j), _)| j == b)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect();
        for (i, v) in col_b {
            self.add_to(i, a, &(c * &v));
        }
    }

    pub fn scale_row(&mut self, r: usize, c: &Scalar) {
        let row: Vec<(usize, Scalar)> = self
            .entries
            .range((r, 0)..=(r, usize::MAX))
            .map(|(&(_, j), v)| (j, v.clone()))
            .collect();
        for (j, v) in row {
            self.set(r, j, c * &v);
        }
    }

    pub fn scale_col(&mut self, cidx: usize, c: &Scalar) {
        let col: Vec<(usize, Scalar)> = self
            .entries
            .iter()
            .filter(|(&(_, j), _)| j == cidx)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect();
        for (i, v) in col {
            self.set(i, cidx, c * &v);
        }
    }

    /// Map entries into another ring (Z -> Q or Z -> F_p reduction).
    pub fn map_ring(&self, target: Ring) -> SparseMatrix {
        let mut out = SparseMatrix::zero(target, self.rows, self.cols);
        for (i, j, v) in self.iter() {
            let moved = match (v, target) {
                (Scalar::Int(z), Ring::Rat) => Scalar::Rat(num_rational::BigRational::from(z.clone())),
                (Scalar::Int(z), Ring::Fp(p)) => {
                    use num_traits::ToPrimitive;
                    let m = z.mod_floor(&num_bigint::BigInt::from(p));
                    Scalar::Fp {
                        p,
                        val: m.to_u64().expect("mod p fits"),
                    }
                }
                (v, t) if v.ring() == t => v.clone(),
                _ => panic!("unsupported ring map"),
            };
            out.set(i, j, moved);
        }
        out
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hstack(&self, right: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, right.rows);
        assert_eq!(self.ring, right.ring);
        let mut out = SparseMatrix::zero(self.ring, self.rows, self.cols + right.cols);
        for (i, j, v) in self.iter() {
            out.set(i, j, v.clone());
        }
        for (i, j, v) in right.iter() {
            out.set(i, j + self.cols, v.clone());
        }
        out
    }
}

use num_integer::Integer as _;

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} over {}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows.min(16) {
            let row: Vec<String> = (0..self.cols.min(16)).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
