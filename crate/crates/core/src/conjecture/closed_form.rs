//! Closed formulas and the quadratic recursion for `c_i(r)` and `d_i(r)`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{binom, binom_i, catalan, Integer};

pub fn closed_form_c(i: usize, r: usize) -> Integer {
    binom(r, i / 2) * binom(r, (i + 1) / 2)
}

pub fn closed_form_d(i: usize, r: usize) -> Integer {
    (0..=i).map(|k| binom(k, i - k) * binom(r, k) * catalan(k)).sum()
}

/// The alternating expression for `c_i(r)` that the Aluffi relations produce
/// from [`closed_form_d`].
pub fn alt_form_c(i: usize, r: usize) -> Integer {
    (0..=r)
        .map(|k| {
            let t = binom_i(2 * (r - k) as i64, i as i64 - k as i64) * binom(r, k) * catalan(k);
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `d_i(r)` from the quadratic recursion with `d_0(r) = 1` and `d_i(0) = 0`
/// for `i >= 1`.
pub fn recursion_d(i: usize, r: usize, memo: &mut HashMap<(usize, usize), Integer>) -> Integer {
    if i == 0 {
        return 1.into();
    }
    if r == 0 {
        return Integer::zero();
    }
    if let Some(v) = memo.get(&(i, r)) {
        return v.clone();
    }
    let mut total = Integer::zero();
    for shift in [1, 2] {
        if i < shift {
            continue;
        }
        let s = i - shift;
        for a in 0..=s {
            for bb in 0..r {
                let left = recursion_d(a, bb, memo);
                if left.is_zero() {
                    continue;
                }
                total += left * recursion_d(s - a, r - 1 - bb, memo);
            }
        }
    }
    memo.insert((i, r), total.clone());
    total
}
