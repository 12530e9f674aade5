//! Exact Gaussian elimination over a coefficient field.

use crate::error::{Error, Result};
use crate::valuation::ring::RingElement;

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns.
pub fn rref(
    mut rows: Vec<Vec<RingElement>>,
    ncols: usize,
) -> Result<(Vec<Vec<RingElement>>, Vec<usize>)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col]
            .inv()
            .ok_or_else(|| Error::usage("pivot is not invertible"))?;
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect::<Result<_>>()?;
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&y.mul(&f)?)?;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Ok((rows, pivots))
}

/// Basis of the null space `{y : M y = 0}` of an `m x n` matrix.
pub fn null_space(
    rows: Vec<Vec<RingElement>>,
    ncols: usize,
    zero: &RingElement,
) -> Result<Vec<Vec<RingElement>>> {
    let (red, pivots) = rref(rows, ncols)?;
    let one = zero.one_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut y = vec![zero.clone(); ncols];
        y[free] = one.clone();
        for (row, &pc) in red.iter().zip(&pivots) {
            y[pc] = row[free].neg();
        }
        basis.push(y);
    }
    Ok(basis)
}

/// Number of `k`-subsets of an `n`-set, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return Ok(());
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::int;

    fn q(n: i64) -> RingElement {
        RingElement::Rational(int(n))
    }

    #[test]
    fn rank_and_null_space() {
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        let (red, piv) = rref(m.clone(), 3).unwrap();
        assert_eq!(red.len(), 2);
        assert_eq!(piv, vec![0, 1]);
        let ns = null_space(m.clone(), 3, &q(0)).unwrap();
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(q(0), |acc, (a, b)| acc.add(&a.mul(b).unwrap()).unwrap());
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            Ok(())
        })
        .unwrap();
        assert_eq!(seen.len() as u128, binomial(4, 2));
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        assert_eq!(binomial(15, 9), 5005);
        let mut count = 0;
        for_each_subset(3, 0, |_| {
            count += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(count, 1);
    }
}
