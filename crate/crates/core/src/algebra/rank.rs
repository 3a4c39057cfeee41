use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Row `g` of the matrix whose row space is `QG·e`: the coefficients of `g·e`.
fn translate_row<T: Clone>(g: &GroupTable, coeffs: &[T], zero: T, x: usize) -> Vec<T> {
    let mut row = vec![zero; g.order()];
    for (y, c) in coeffs.iter().enumerate() {
        row[g.mul(x, y)] = c.clone();
    }
    row
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `dim_Q(QG·e)` for an idempotent `e`.
///
/// Elimination runs over `F_p` with `p > |G|` prime and coprime to the
/// denominator of `e`. Left multiplication by `e` is an idempotent matrix,
/// so its rank equals its trace, and an idempotent over `F_p` has rank equal
/// to its trace read in `F_p`; as the rank is at most `|G| < p` the two
/// ranks agree. The trace `|G|·coeff(1)` is cross-checked.
pub fn ideal_rank(g: &GroupTable, e: &AlgebraElement) -> Result<usize> {
    if !e.is_idempotent(g) {
        return Err(Error::IdempotencyFailure("ideal_rank needs an idempotent".into()));
    }
    let n = g.order();
    let den = e.denominator();
    let mut p = (n as u64 + 1).max(3);
    while !is_prime(p) || (den % BigInt::from(p)).is_zero() {
        p += 1;
    }
    let pb = BigInt::from(p);
    let dinv = pow_mod(den.mod_floor(&pb).to_u64().expect("residue"), p - 2, p);
    let coeffs: Vec<u64> =
        e.numerators().iter().map(|c| c.mod_floor(&pb).to_u64().expect("residue") * dinv % p).collect();
    let rank = rank_mod_p(g, &coeffs, p);
    let trace = e.coeff(0) * BigInt::from(n);
    if !trace.is_integer() || trace.to_integer() != BigInt::from(rank) {
        return Err(Error::AuditFailure { predicted: trace.to_integer().to_u64().unwrap_or(0), rank: rank as u64 });
    }
    Ok(rank)
}

fn rank_mod_p(g: &GroupTable, coeffs: &[u64], p: u64) -> usize {
    let n = g.order();
    let mut rows: Vec<Vec<u64>> = (0..n).into_par_iter().map(|x| translate_row(g, coeffs, 0, x)).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot = rows[rank].clone();
        rows.par_iter_mut().enumerate().for_each(|(r, row)| {
            if r == rank || row[col] == 0 {
                return;
            }
            let f = row[col];
            for (v, &q) in row.iter_mut().zip(&pivot).skip(col) {
                *v = (*v + p - f * q % p) % p;
            }
        });
        rank += 1;
    }
    rank
}

/// `dim_Q(QG·x)` for any `x`, by fraction-free (Bareiss) elimination over
/// the integers. Cubic in `|G|` with growing entries; meant for small groups.
pub fn ideal_rank_exact(g: &GroupTable, x: &AlgebraElement) -> usize {
    let n = g.order();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|y| translate_row(g, x.numerators(), BigInt::zero(), y)).collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        let pivot_row = m[rank].clone();
        let pv = pivot_row[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            for c in col..n {
                row[c] = (&row[c] * &pv - &f * &pivot_row[c]) / &prev;
            }
        }
        prev = pv;
        rank += 1;
    }
    rank
}
