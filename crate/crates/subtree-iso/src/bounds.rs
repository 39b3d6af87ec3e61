//! Exact integer comparisons against the irrational bounds `5^(n/4)` and
//! `3·2^(n/2−1)`.
//!
//! No verdict ever touches floating point: each inequality is raised to the
//! fourth (or second) power so both sides become integers, e.g.
//! `v ≤ 5^(n/4) ⟺ v⁴ ≤ 5ⁿ`. All arithmetic is checked 128-bit; `None`
//! means the comparison left the representable range, and callers surface a
//! resource-limit error instead of guessing.

pub fn pow5(e: u32) -> Option<u128> {
    5u128.checked_pow(e)
}

pub fn pow2(e: u32) -> Option<u128> {
    2u128.checked_pow(e)
}

fn fourth(v: u128) -> Option<u128> {
    let sq = v.checked_mul(v)?;
    sq.checked_mul(sq)
}

/// v ≤ 5^(n/4), via v⁴ ≤ 5ⁿ.
pub fn le_pow5_quarter(v: u128, n: usize) -> Option<bool> {
    Some(fourth(v)? <= pow5(n as u32)?)
}

/// v ≤ 5^(n/4) − 1, via (v+1)⁴ ≤ 5ⁿ.
pub fn le_pow5_quarter_minus_one(v: u128, n: usize) -> Option<bool> {
    le_pow5_quarter(v.checked_add(1)?, n)
}

/// b ≥ 2·5^(n/4−2), via b⁴·5⁸ ≥ 16·5ⁿ.
pub fn ge_twice_pow5_quarter_minus_two(b: u128, n: usize) -> Option<bool> {
    let lhs = fourth(b)?.checked_mul(pow5(8)?)?;
    let rhs = pow5(n as u32)?.checked_mul(16)?;
    Some(lhs >= rhs)
}

/// c ≤ 3·2^(n/2−1), via 4c² ≤ 9·2ⁿ.
pub fn le_three_pow2_half_minus_one(c: u128, n: usize) -> Option<bool> {
    let lhs = c.checked_mul(c)?.checked_mul(4)?;
    let rhs = pow2(n as u32)?.checked_mul(9)?;
    Some(lhs <= rhs)
}

/// s ≤ r + 3·2^(n/2−1).
pub fn le_plus_three_pow2_half_minus_one(s: u128, r: u128, n: usize) -> Option<bool> {
    if s <= r {
        return Some(true);
    }
    le_three_pow2_half_minus_one(s - r, n)
}
