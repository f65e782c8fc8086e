//! Dense matrices over GF(2).

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<bool>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![false; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for j in 0..other.cols {
                        if other.get(k, j) {
                            let v = out.get(i, j);
                            out.set(i, j, !v);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&b| !b)
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> Vec<bool> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: &[bool]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data: data.to_vec() }
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<bool>> = (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect();
        rank_of(rows, self.cols)
    }
}

/// Row-reduces `rows` in place and returns the pivot columns.
fn reduce(rows: &mut Vec<Vec<bool>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank_of(mut rows: Vec<Vec<bool>>, cols: usize) -> usize {
    reduce(&mut rows, cols).len()
}

/// A basis of `{x : A x = 0}` where `A` is given by its rows.
pub fn nullspace(mut rows: Vec<Vec<bool>>, cols: usize) -> Vec<Vec<bool>> {
    let pivots = reduce(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![false; cols];
            x[f] = true;
            for (row, &p) in rows.iter().zip(&pivots) {
                if row[f] {
                    x[p] = true;
                }
            }
            x
        })
        .collect()
}

/// Vectors from `candidates` extending a basis of `span(base)` to a basis of
/// `span(base ∪ candidates)`.
pub fn complement(base: &[Vec<bool>], candidates: &[Vec<bool>], cols: usize) -> Vec<Vec<bool>> {
    let mut acc: Vec<Vec<bool>> = base.to_vec();
    let mut r = rank_of(acc.clone(), cols);
    let mut out = Vec::new();
    for c in candidates {
        acc.push(c.clone());
        let r2 = rank_of(acc.clone(), cols);
        if r2 > r {
            r = r2;
            out.push(c.clone());
        } else {
            acc.pop();
        }
    }
    out
}

/// All `2^k` sums of subsets of `basis`.
pub fn span(basis: &[Vec<bool>], cols: usize) -> Vec<Vec<bool>> {
    assert!(basis.len() < 20, "span of dimension {} is too large to enumerate", basis.len());
    (0u32..1 << basis.len())
        .map(|mask| {
            let mut v = vec![false; cols];
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
            }
            v
        })
        .collect()
}
