//! Brute-force representation counts by nested-loop lattice enumeration.
//!
//! Each coordinate is bounded by what the remaining budget allows, so the
//! loops visit only points with `Q(x) ≤ n`. Nothing here touches series
//! arithmetic; the counts are the ground truth the formulas are checked
//! against.

use crate::theta::QuadForm;

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Visits `x` with `a x² ≤ budget`, passing `(x, a x²)`.
fn for_square(a: i64, budget: i64, mut f: impl FnMut(i64)) {
    let b = isqrt(budget / a);
    for x in -b..=b {
        f(a * x * x);
    }
}

/// Visits `(x, y)` with `b (x² + xy + y²) ≤ budget`, passing the value.
fn for_hexagonal(b: i64, budget: i64, mut f: impl FnMut(i64)) {
    if budget < 0 {
        return;
    }
    // x² + xy + y² ≥ 3x²/4, so |x| ≤ √(4m/3)
    let m = budget / b;
    let bx = isqrt(4 * m / 3);
    for x in -bx..=bx {
        // y² + xy + x² - m ≤ 0 gives y within the roots of the quadratic
        let disc = 4 * m - 3 * x * x;
        if disc < 0 {
            continue;
        }
        let s = isqrt(disc);
        let lo = (-x - s - 1).div_euclid(2);
        let hi = (-x + s + 1).div_euclid(2) + 1;
        for y in lo..=hi {
            let v = b * (x * x + x * y + y * y);
            if v <= budget {
                f(v);
            }
        }
    }
}

fn checked_add(count: &mut u64) {
    *count = count.checked_add(1).expect("representation count overflow");
}

/// `#{x ∈ ℤ⁴ : Σ a_i x_i² = n}`.
pub fn count_q1(a: [u32; 4], n: u64) -> u64 {
    let n = n as i64;
    let [a1, a2, a3, a4] = a.map(i64::from);
    let mut count = 0u64;
    for_square(a1, n, |v1| {
        for_square(a2, n - v1, |v2| {
            for_square(a3, n - v1 - v2, |v3| {
                for_square(a4, n - v1 - v2 - v3, |v4| {
                    if v1 + v2 + v3 + v4 == n {
                        checked_add(&mut count);
                    }
                })
            })
        })
    });
    count
}

/// `#{x ∈ ℤ⁴ : b1 (x1² + x1x2 + x2²) + b2 (x3² + x3x4 + x4²) = n}`.
pub fn count_q2(b: [u32; 2], n: u64) -> u64 {
    let n = n as i64;
    let [b1, b2] = b.map(i64::from);
    let mut count = 0u64;
    for_hexagonal(b1, n, |v1| {
        for_hexagonal(b2, n - v1, |v2| {
            if v1 + v2 == n {
                checked_add(&mut count);
            }
        })
    });
    count
}

/// `#{x ∈ ℤ⁴ : a1 x1² + a2 x2² + b1 (x3² + x3x4 + x4²) = n}`.
pub fn count_q3(c: [u32; 3], n: u64) -> u64 {
    let n = n as i64;
    let [a1, a2, b1] = c.map(i64::from);
    let mut count = 0u64;
    for_square(a1, n, |v1| {
        for_square(a2, n - v1, |v2| {
            for_hexagonal(b1, n - v1 - v2, |v3| {
                if v1 + v2 + v3 == n {
                    checked_add(&mut count);
                }
            })
        })
    });
    count
}

pub fn count(form: &QuadForm, n: u64) -> u64 {
    match *form {
        QuadForm::Q1(a) => count_q1(a, n),
        QuadForm::Q2(b) => count_q2(b, n),
        QuadForm::Q3(c) => count_q3(c, n),
    }
}

/// Counts for every `0 ≤ n ≤ nmax` from a single enumeration of the
/// ellipsoid `Q(x) ≤ nmax`.
pub fn counts_upto(form: &QuadForm, nmax: u64) -> Vec<u64> {
    let n = nmax as i64;
    let mut hist = vec![0u64; nmax as usize + 1];
    let mut bump = |v: i64| {
        let slot = &mut hist[v as usize];
        *slot = slot.checked_add(1).expect("representation count overflow");
    };
    match *form {
        QuadForm::Q1(a) => {
            let [a1, a2, a3, a4] = a.map(i64::from);
            for_square(a1, n, |v1| {
                for_square(a2, n - v1, |v2| {
                    for_square(a3, n - v1 - v2, |v3| {
                        for_square(a4, n - v1 - v2 - v3, |v4| bump(v1 + v2 + v3 + v4))
                    })
                })
            });
        }
        QuadForm::Q2(b) => {
            let [b1, b2] = b.map(i64::from);
            for_hexagonal(b1, n, |v1| for_hexagonal(b2, n - v1, |v2| bump(v1 + v2)));
        }
        QuadForm::Q3(c) => {
            let [a1, a2, b1] = c.map(i64::from);
            for_square(a1, n, |v1| {
                for_square(a2, n - v1, |v2| for_hexagonal(b1, n - v1 - v2, |v3| bump(v1 + v2 + v3)))
            });
        }
    }
    hist
}
