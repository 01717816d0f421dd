//! Dense GF(2) matrices at desk scale, rows stored as u64 bitmasks.

use serde::Serialize;

/// Matrix over GF(2) with at most 64 columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gf2Matrix {
    pub rows: usize,
    pub cols: usize,
    /// Row bitmasks, bit `j` = entry in column `j`.
    pub data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "GF(2) matrices support at most 64 columns ({cols} requested)");
        Gf2Matrix { rows, cols, data: vec![0; rows] }
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        if value {
            self.data[row] |= 1 << col;
        } else {
            self.data[row] &= !(1 << col);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row] >> col & 1 == 1
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        assert!(row < self.rows && col < self.cols);
        self.data[row] ^= 1 << col;
    }

    /// Columns as bitmasks over rows (needs rows <= 64).
    pub fn columns(&self) -> Vec<u64> {
        assert!(self.rows <= 64);
        (0..self.cols)
            .map(|j| {
                self.data
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, r)| acc | ((r >> j & 1) << i))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_of(self.data.clone())
    }

    /// Whether `target` (a bitmask over rows) lies in the column space.
    pub fn column_space_contains(&self, target: u64) -> bool {
        let cols = self.columns();
        let r = rank_of(cols.clone());
        let mut with_target = cols;
        with_target.push(target);
        rank_of(with_target) == r
    }

    /// Matrix product over GF(2); `self` applied after `other`.
    pub fn multiply(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Gf2Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = 0u64;
            for k in 0..self.cols {
                if self.get(i, k) {
                    acc ^= other.data[k];
                }
            }
            out.data[i] = acc;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| *r == 0)
    }

    /// Apply to a vector given as a column bitmask.
    pub fn apply(&self, v: u64) -> u64 {
        let mut out = 0u64;
        for (i, row) in self.data.iter().enumerate() {
            if ((row & v).count_ones() & 1) == 1 {
                out |= 1 << i;
            }
        }
        out
    }
}

fn rank_of(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && *row >> bit & 1 == 1 {
                *row ^= lead;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let mut m = Gf2Matrix::zero(3, 2);
        // columns: (1,1,0) and (0,1,1)
        m.set(0, 0, true);
        m.set(1, 0, true);
        m.set(1, 1, true);
        m.set(2, 1, true);
        assert_eq!(m.rank(), 2);
        assert!(m.column_space_contains(0b011)); // first column
        assert!(m.column_space_contains(0b101)); // sum of both
        assert!(!m.column_space_contains(0b001));
        assert!(m.column_space_contains(0));
    }

    #[test]
    fn multiply_and_apply() {
        let mut a = Gf2Matrix::zero(2, 2);
        a.set(0, 0, true);
        a.set(0, 1, true);
        a.set(1, 1, true);
        let prod = a.multiply(&a);
        // a^2 = [[1,0],[0,1]] over GF(2) for this choice
        assert!(prod.get(0, 0) && !prod.get(0, 1) && prod.get(1, 1));
        assert_eq!(a.apply(0b10), 0b11);
    }

    #[test]
    fn rank_of_zero_matrix() {
        assert_eq!(Gf2Matrix::zero(4, 4).rank(), 0);
    }
}
