use super::{Field, Poly, Ring, Scalar};
use crate::error::{Error, Result};
use num_traits::One;
use std::fmt;
use std::ops::{Add, Sub};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(RingMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.data[i * self.cols + j].clone()
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.set(self.rows + i, self.cols + j, o.get(i, j));
            }
        }
        out
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| self.get(i / o.rows, j / o.cols) * o.get(i % o.rows, j % o.cols))
    }

    /// Characteristic polynomial `det(xI − M)` by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> Result<Poly<R>> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        // Transforms for leading principal submatrices of size n, n-1, ..., 2.
        let mut transforms: Vec<Vec<Vec<R>>> = Vec::new();
        for size in (2..=n).rev() {
            let k = size - 1;
            let r: Vec<R> = (0..k).map(|j| -self.get(k, j)).collect();
            let c: Vec<R> = (0..k).map(|i| self.get(i, k)).collect();
            let a = -self.get(k, k);
            let sub = Self::from_fn(k, k, |i, j| self.get(i, j));
            let mut items = vec![R::one(), a];
            let mut v = c;
            for step in 0..k {
                let dot = r.iter().zip(&v).fold(R::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
                items.push(dot);
                if step + 1 < k {
                    v = sub.mul_vec(&v);
                }
            }
            // Toeplitz (size+1) x size, column i holds items[0..] starting at row i.
            let mut t = vec![vec![R::zero(); size]; size + 1];
            for (i, col) in (0..size).map(|i| (i, i)) {
                for row in i..=size {
                    t[row][col] = items[row - i].clone();
                }
            }
            transforms.push(t);
        }
        let mut poly = vec![R::one(), -self.get(0, 0)];
        for t in transforms.iter().rev() {
            poly = t.iter().map(|row| row.iter().zip(&poly).fold(R::zero(), |acc, (x, y)| acc + x.clone() * y.clone())).collect();
        }
        poly.reverse();
        Ok(Poly::new(poly))
    }
}

impl<R: Ring> Add for RingMatrix<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        RingMatrix { rows: self.rows, cols: self.cols, data: self.data.into_iter().zip(o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<R: Ring> Sub for RingMatrix<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        RingMatrix { rows: self.rows, cols: self.cols, data: self.data.into_iter().zip(o.data).map(|(a, b)| a - b).collect() }
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<R: Ring> RingMatrix<R> {
    /// Nested-array rendering with quoted entries, e.g. `[["1","q"],["0","1"]]`.
    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|c| format!("\"{}\"", c.render())).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Row-reduced echelon data over a field.
pub struct Echelon<R> {
    pub reduced: RingMatrix<R>,
    pub pivots: Vec<usize>,
}

impl<R: Field> RingMatrix<R> {
    /// Reduced row echelon form with pivot columns.
    pub fn rref(&self) -> Echelon<R> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = R::one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - f.clone() * b;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel `{v : M v = 0}` as column vectors.
    pub fn kernel(&self) -> Vec<Vec<R>> {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![R::zero(); self.cols];
                v[f] = R::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Solves `M X = B`; errors when no solution exists. Free variables are set to zero.
    pub fn solve(&self, b: &Self) -> Result<Self> {
        assert_eq!(self.rows, b.rows);
        let aug = Self::from_fn(self.rows, self.cols + b.cols, |i, j| if j < self.cols { self.get(i, j) } else { b.get(i, j - self.cols) });
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::Singular("inconsistent linear system".into()));
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, reduced.get(r, self.cols + j));
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        if self.rank() < self.rows {
            return Err(Error::Singular("matrix is not invertible".into()));
        }
        self.solve(&Self::identity(self.rows))
    }

    /// Characteristic polynomial via reduction to Hessenberg form (field case).
    pub fn charpoly_hessenberg(&self) -> Result<Poly<R>> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.at(i, m - 1).is_zero()) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let piv = h.get(m, m - 1);
            for j in m + 1..n {
                let u = h.get(j, m - 1) / piv.clone();
                if u.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = h.get(j, c) - u.clone() * h.get(m, c);
                    h.set(j, c, v);
                }
                for r in 0..n {
                    let v = h.get(r, m) + u.clone() * h.get(r, j);
                    h.set(r, m, v);
                }
            }
        }
        let x = Poly::var();
        let mut p: Vec<Poly<R>> = vec![Poly::one()];
        for m in 1..=n {
            let mut next = (x.clone() - Poly::constant(h.get(m - 1, m - 1))) * p[m - 1].clone();
            let mut prod = R::one();
            for i in (1..m).rev() {
                prod = prod * h.get(i, i - 1);
                let t = prod.clone() * h.get(i - 1, m - 1);
                if !t.is_zero() {
                    next = next - p[i - 1].scale(&t);
                }
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }
}

/// Basis of a column space, given spanning vectors; returns independent subset indices.
pub fn independent_subset(vectors: &[Vec<Scalar>]) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let dim = vectors[0].len();
    let m = RingMatrix::from_fn(dim, vectors.len(), |i, j| vectors[j][i].clone());
    m.rref().pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, QPoly};
    use num_traits::Zero;

    #[test]
    fn charpoly_small() {
        let id: RingMatrix<Scalar> = RingMatrix::identity(2);
        assert_eq!(id.charpoly().unwrap(), QPoly::from_ints(&[1, -2, 1]));
        let d = RingMatrix::from_fn(2, 2, |i, j| if i == j { int(3 + i as i64) } else { int(0) });
        assert_eq!(d.charpoly().unwrap(), QPoly::from_ints(&[12, -7, 1]));
        let m =
            RingMatrix::from_rows(vec![vec![int(1), int(2), int(0)], vec![int(3), int(-1), int(4)], vec![int(0), int(5), int(2)]]).unwrap();
        assert_eq!(m.charpoly().unwrap(), m.charpoly_hessenberg().unwrap());
    }

    #[test]
    fn kernel_and_solve() {
        let m = RingMatrix::from_rows(vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]]).unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        let a = RingMatrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(1)]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RingMatrix::identity(2));
    }
}
