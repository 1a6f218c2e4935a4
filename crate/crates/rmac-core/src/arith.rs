//! Small multiplicative number-theory helpers shared across modules.

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// ascending prime order. `factorize(1)` is empty.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let snapshot = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(snapshot.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// The Moebius function.
pub(crate) fn moebius(n: u64) -> i64 {
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler's totient function.
pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}
