//! Integer helpers used by the group and table code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Exponent of the prime `l` in `n` (`n > 0`).
pub fn valuation(l: u64, mut n: u64) -> u32 {
    let mut v = 0;
    while n % l == 0 {
        n /= l;
        v += 1;
    }
    v
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Iterates over all `k`-subsets of `0..n` in lexicographic order, reusing
/// one index buffer.
pub struct Combinations {
    idx: Vec<usize>,
    n: usize,
    first: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            idx: (0..k).collect(),
            n,
            first: true,
            done: k > n,
        }
    }

    /// Advances to the next subset; `None` when exhausted.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(isqrt(76), 8);
        assert_eq!(isqrt(64), 8);
        assert_eq!(factorize(72), vec![(2, 3), (3, 2)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(valuation(3, 63), 2);
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn combinations_count_and_order() {
        let mut c = Combinations::new(6, 3);
        let mut seen = Vec::new();
        while let Some(s) = c.next_subset() {
            seen.push(s.to_vec());
        }
        assert_eq!(seen.len(), 20);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[19], vec![3, 4, 5]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let mut empty = Combinations::new(4, 0);
        assert_eq!(empty.next_subset(), Some(&[][..]));
        assert_eq!(empty.next_subset(), None);
        assert_eq!(Combinations::new(2, 3).next_subset(), None);
    }
}
