//! Small exact-arithmetic helpers shared across the crate.

/// Binomial coefficient `C(n, k)` as `i128`. Exact for every `n <= 64` we
/// ever see; panics on overflow rather than wrapping.
pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for t in 0..k {
        acc = acc
            .checked_mul((n - t) as i128)
            .expect("binomial overflow");
        acc /= (t + 1) as i128; // exact: product of t+1 consecutive integers
    }
    acc
}

/// Generalized binomial `C(x, m)` for integer `x` (possibly negative):
/// `x (x-1) ... (x-m+1) / m!`. Used to evaluate Hilbert polynomials at
/// integer points.
pub fn binomial_at(x: i128, m: usize) -> i128 {
    let mut num: i128 = 1;
    for t in 0..m {
        num = num
            .checked_mul(x - t as i128)
            .expect("binomial_at overflow");
    }
    let mut den: i128 = 1;
    for t in 1..=m {
        den *= t as i128;
    }
    num / den // exact: m consecutive integers are divisible by m!
}

/// Primality by trial division. All orders in this crate are tiny.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
