//! Integer linear algebra: column Hermite normal form of a pairing matrix.

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_all<I: IntoIterator<Item = i64>>(xs: I) -> i64 {
    xs.into_iter().fold(0, gcd)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

/// Returns `(g, x, y)` with `a x + b y = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1, 0);
    let (mut y0, mut y1) = (0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Ceiling division for `b > 0`.
pub fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Column Hermite form `P·U = [H | 0]` of an `r × n` integer matrix of rank `r`.
///
/// `H` is lower triangular with a positive diagonal and `U` is unimodular.
#[derive(Clone, Debug)]
pub struct ColumnHermite {
    rows: usize,
    cols: usize,
    h: Vec<Vec<i64>>,
    u: Vec<Vec<i64>>,
}

impl ColumnHermite {
    /// Returns `None` when the rows are linearly dependent.
    pub fn new(p: &[Vec<i64>], cols: usize) -> Option<Self> {
        let rows = p.len();
        let mut a: Vec<Vec<i64>> = p.to_vec();
        let mut u: Vec<Vec<i64>> = (0..cols)
            .map(|i| (0..cols).map(|j| i64::from(i == j)).collect())
            .collect();
        let col_op = |m: &mut Vec<Vec<i64>>, i: usize, j: usize, a: i64, b: i64, c: i64, d: i64| {
            // (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
            for row in m.iter_mut() {
                let (x, y) = (row[i], row[j]);
                row[i] = a * x + b * y;
                row[j] = c * x + d * y;
            }
        };
        for r in 0..rows {
            if r >= cols {
                return None;
            }
            for j in r + 1..cols {
                let (x, y) = (a[r][r], a[r][j]);
                if y == 0 {
                    continue;
                }
                let (g, s, t) = ext_gcd(x, y);
                let (xg, yg) = (x / g, y / g);
                col_op(&mut a, r, j, s, t, -yg, xg);
                col_op(&mut u, r, j, s, t, -yg, xg);
            }
            if a[r][r] == 0 {
                return None;
            }
            if a[r][r] < 0 {
                for m in [&mut a, &mut u] {
                    for row in m.iter_mut() {
                        row[r] = -row[r];
                    }
                }
            }
        }
        let h = a.iter().map(|row| row[..rows].to_vec()).collect();
        Some(Self { rows, cols, h, u })
    }

    pub fn h(&self, i: usize, j: usize) -> i64 {
        self.h[i][j]
    }

    /// Maps coordinates `y` on the first `r` columns of `U` to a vector in `Z^n`.
    pub fn lift(&self, y: &[i64]) -> Vec<i64> {
        (0..self.cols)
            .map(|i| (0..self.rows).map(|j| self.u[i][j] * y[j]).sum())
            .collect()
    }

    /// Kernel basis: the last `n - r` columns of `U`.
    pub fn kernel(&self) -> Vec<Vec<i64>> {
        (self.rows..self.cols)
            .map(|j| (0..self.cols).map(|i| self.u[i][j]).collect())
            .collect()
    }

    /// Some `x ∈ Z^n` with `P x = c`, if one exists.
    pub fn solve(&self, c: &[i64]) -> Option<Vec<i64>> {
        let mut y = vec![0i64; self.rows];
        for i in 0..self.rows {
            let rest: i64 = (0..i).map(|j| self.h[i][j] * y[j]).sum();
            let num = c[i] - rest;
            if num % self.h[i][i] != 0 {
                return None;
            }
            y[i] = num / self.h[i][i];
        }
        Some(self.lift(&y))
    }

    /// Greedy `y` with `(H y)_i ≥ b_i`, each entry as small as the previous choices allow.
    pub fn greedy_above(&self, b: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.rows];
        for i in 0..self.rows {
            let rest: i64 = (0..i).map(|j| self.h[i][j] * y[j]).sum();
            y[i] = div_ceil(b[i] - rest, self.h[i][i]);
        }
        y
    }

    /// `H y`.
    pub fn image(&self, y: &[i64]) -> Vec<i64> {
        (0..self.rows)
            .map(|i| (0..=i).map(|j| self.h[i][j] * y[j]).sum())
            .collect()
    }
}
