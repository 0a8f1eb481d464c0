use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{zero, RatMatrix, Rational};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    reduced: RatMatrix,
    pivots: Vec<usize>,
}

/// Clears denominators row by row so elimination can run over ℤ.
fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `target ← pivot_val·target − factor·pivot_row`, then divides out the row content.
fn eliminate(target: &mut [BigInt], pivot_row: &[BigInt], col: usize) {
    let factor = target[col].clone();
    if factor.is_zero() {
        return;
    }
    let pivot_val = &pivot_row[col];
    let g = factor.gcd(pivot_val);
    let (tm, pm) = (pivot_val / &g, &factor / &g);
    for (t, p) in target.iter_mut().zip(pivot_row) {
        *t = &*t * &tm - p * &pm;
    }
    remove_content(target);
}

/// Forward elimination; returns pivot columns. Pivot choice: the nonzero
/// entry of least absolute value in the column, which keeps row growth small.
fn forward(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let candidate = (next..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
        let Some(p) = candidate else { continue };
        rows.swap(next, p);
        remove_content(&mut rows[next]);
        let (head, tail) = rows.split_at_mut(next + 1);
        let pivot_row = &head[next];
        for row in tail.iter_mut() {
            eliminate(row, pivot_row, col);
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

impl Echelon {
    pub fn compute(m: &RatMatrix) -> Self {
        let cols = m.cols();
        let mut rows = integer_rows(m);
        let pivots = forward(&mut rows, cols);
        // back substitution, still over ℤ
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let (head, tail) = rows.split_at_mut(i);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                eliminate(row, pivot_row, pc);
            }
        }
        let mut reduced = RatMatrix::zeros(pivots.len(), cols);
        for (i, &pc) in pivots.iter().enumerate() {
            let lead = rows[i][pc].clone();
            for c in 0..cols {
                if !rows[i][c].is_zero() {
                    reduced[(i, c)] = Rational::new(rows[i][c].clone(), lead.clone());
                }
            }
        }
        Self { reduced, pivots }
    }

    pub fn rank_only(m: &RatMatrix) -> usize {
        let mut rows = integer_rows(m);
        forward(&mut rows, m.cols()).len()
    }

    /// Nonzero rows of the reduced form, one per pivot.
    pub fn reduced(&self) -> &RatMatrix {
        &self.reduced
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let cols = self.reduced.cols();
        let free: Vec<usize> = (0..cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![zero(); cols];
                v[f] = Rational::one();
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced[(i, f)].clone();
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn reduced_form_is_normalized() {
        let m = RatMatrix::from_i64(&[&[2, 4, 6], &[1, 3, 5]]);
        let e = m.echelon();
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(
            e.reduced(),
            &RatMatrix::from_i64(&[&[1, 0, -1], &[0, 1, 2]])
        );
        assert_eq!(e.kernel_basis(), vec![vec![rat(1), rat(-2), rat(1)]]);
    }

    #[test]
    fn zero_rows_skipped() {
        let m = RatMatrix::from_i64(&[&[0, 0], &[0, 3]]);
        let e = m.echelon();
        assert_eq!(e.pivots(), &[1]);
        assert_eq!(e.reduced(), &RatMatrix::from_i64(&[&[0, 1]]));
    }
}
