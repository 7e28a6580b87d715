//! Exact integer solutions of `A u = b` by fraction-free elimination.

use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Solves `A u = b` over the integers for a full-column-rank `A` (`rows × cols`).
///
/// Returns [`Error::NotInSpan`] when the system has no solution, or only a non-integral one, and
/// [`Error::BasisNotIndependent`] when `A` has a nontrivial kernel.
pub fn solve_integer<C: Coeff>(a: &[Vec<C>], b: &[C], cols: usize) -> Result<Vec<C>> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    if let Some(row) = a.iter().find(|row| row.len() != cols) {
        return Err(Error::SizeMismatch { left: row.len(), right: cols });
    }
    // augmented rows, last entry is the right-hand side
    let mut m: Vec<Vec<C>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .filter(|row: &Vec<C>| row.iter().any(|v| !v.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..m.len()).filter(|&r| !m[r][col].is_zero()).min_by_key(|&r| m[r][col].abs()) else {
            continue;
        };
        m.swap(rank, pr);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let (p, f) = (m[rank][col].clone(), m[r][col].clone());
            let g = p.gcd(&f);
            let (p, f) = (p / g.clone(), f / g);
            for c in col..=cols {
                let v = p.clone() * m[r][c].clone() - f.clone() * m[rank][c].clone();
                m[r][c] = v;
            }
            normalize(&mut m[r]);
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::NotInSpan);
    }
    if rank < cols {
        return Err(Error::BasisNotIndependent);
    }
    let mut u = vec![C::zero(); cols];
    for r in (0..rank).rev() {
        let col = pivots[r];
        let mut rhs = m[r][cols].clone();
        for c in col + 1..cols {
            rhs = rhs - m[r][c].clone() * u[c].clone();
        }
        u[col] = rhs.exact_div(&m[r][col]).ok_or(Error::NotInSpan)?;
    }
    Ok(u)
}

/// Divides a row by the gcd of its entries.
fn normalize<C: Coeff>(row: &mut [C]) {
    let g = row.iter().fold(C::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}
