//! Sparse exact matrices stored column by column.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::ScalarValue;

/// A sparse matrix over an exact scalar field. Each column keeps its
/// nonzero entries sorted by row index.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: Vec<Vec<(usize, ScalarValue)>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize, one: &ScalarValue) -> Self {
        let mut m = Matrix::zeros(n, n);
        for (c, col) in m.cols.iter_mut().enumerate() {
            col.push((c, one.clone()));
        }
        m
    }

    /// Build from row-major dense entries.
    pub fn from_dense(rows: usize, cols: usize, entries: &[Vec<ScalarValue>]) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for (r, row) in entries.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.cols[c].push((r, v.clone()));
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn column(&self, c: usize) -> &[(usize, ScalarValue)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&ScalarValue> {
        let col = &self.cols[c];
        col.binary_search_by_key(&r, |e| e.0)
            .ok()
            .map(|k| &col[k].1)
    }

    pub fn set(&mut self, r: usize, c: usize, v: ScalarValue) {
        assert!(r < self.rows, "row {r} out of range");
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&r, |e| e.0) {
            Ok(k) if v.is_zero() => {
                col.remove(k);
            }
            Ok(k) => col[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => col.insert(k, (r, v)),
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &ScalarValue) {
        let sum = match self.get(r, c) {
            Some(old) => old + v,
            None => v.clone(),
        };
        self.set(r, c, sum);
    }

    /// Row-major dense copy, zeros filled with `zero`.
    pub fn to_dense(&self, zero: &ScalarValue) -> Vec<Vec<ScalarValue>> {
        let mut out = vec![vec![zero.clone(); self.ncols()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), rhs.rows, "dimension mismatch in product");
        let mut acc: Vec<Option<ScalarValue>> = vec![None; self.rows];
        let mut touched = Vec::new();
        let mut cols = Vec::with_capacity(rhs.ncols());
        for rcol in &rhs.cols {
            for (k, b) in rcol {
                for (r, a) in &self.cols[*k] {
                    let term = a * b;
                    match &mut acc[*r] {
                        Some(v) => *v = &*v + &term,
                        slot @ None => {
                            *slot = Some(term);
                            touched.push(*r);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut col = Vec::with_capacity(touched.len());
            for r in touched.drain(..) {
                let v = acc[r].take().expect("touched entry");
                if !v.is_zero() {
                    col.push((r, v));
                }
            }
            cols.push(col);
        }
        Matrix {
            rows: self.rows,
            cols,
        }
    }

    /// Exact rank. Rows and columns split into connected blocks (two entries
    /// are linked when they share a row or a column); each block is reduced
    /// by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let n = self.ncols();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut row_owner: Vec<Option<usize>> = vec![None; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, _) in col {
                match row_owner[*r] {
                    None => row_owner[*r] = Some(c),
                    Some(o) => {
                        let (a, b) = (find(&mut parent, o), find(&mut parent, c));
                        if a != b {
                            parent[a] = b;
                        }
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for c in 0..n {
            if !self.cols[c].is_empty() {
                let root = find(&mut parent, c);
                groups[root].push(c);
            }
        }
        let mut rank = 0;
        let mut row_pos = vec![usize::MAX; self.rows];
        for group in groups.iter().filter(|g| !g.is_empty()) {
            if group.len() == 1 {
                rank += 1;
                continue;
            }
            let mut rows: Vec<usize> = group
                .iter()
                .flat_map(|&c| self.cols[c].iter().map(|e| e.0))
                .collect();
            rows.sort_unstable();
            rows.dedup();
            if rows.len() == 1 {
                rank += 1;
                continue;
            }
            for (k, &r) in rows.iter().enumerate() {
                row_pos[r] = k;
            }
            let mut dense = vec![vec![ScalarValue::zero(); group.len()]; rows.len()];
            for (k, &c) in group.iter().enumerate() {
                for (r, v) in &self.cols[c] {
                    dense[row_pos[*r]][k] = v.clone();
                }
            }
            rank += bareiss_rank(dense);
        }
        rank
    }
}

fn bareiss_rank(mut a: Vec<Vec<ScalarValue>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev_inv: Option<ScalarValue> = None;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        let scale = match &prev_inv {
            Some(inv) => &pivot * inv,
            None => pivot.clone(),
        };
        for row in rest.iter_mut() {
            let factor = core::mem::replace(&mut row[c], ScalarValue::zero());
            if factor.is_zero() {
                if !scale.is_one() {
                    for x in row[c + 1..].iter_mut().filter(|x| !x.is_zero()) {
                        *x = &*x * &scale;
                    }
                }
                continue;
            }
            let factor = match &prev_inv {
                Some(inv) => &factor * inv,
                None => factor,
            };
            for j in c + 1..ncols {
                let mut v = if row[j].is_zero() {
                    ScalarValue::zero()
                } else {
                    &scale * &row[j]
                };
                if !pivot_row[j].is_zero() {
                    v = v - &factor * &pivot_row[j];
                }
                row[j] = v;
            }
        }
        prev_inv = Some(pivot.inverse().expect("pivot is nonzero"));
        r += 1;
    }
    r
}
