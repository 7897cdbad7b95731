//! Exact integer helpers for the square-root expressions in the length formula.

/// `⌈√x⌉`.
pub fn ceil_sqrt(x: u128) -> u128 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// `⌈2√k⌉` for `k ≥ 0`, i.e. the least `h` with `h² ≥ 4k`.
pub fn ceil_two_sqrt(k: u64) -> u64 {
    let h = ceil_sqrt(4 * k as u128);
    debug_assert!(h * h >= 4 * k as u128 && (h == 0 || (h - 1) * (h - 1) < 4 * k as u128));
    h as u64
}

/// `⌈a / b⌉` for `a ≥ 0`, `b > 0`.
pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}
