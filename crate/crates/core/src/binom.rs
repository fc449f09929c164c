//! Binomial parities over GF(2).

/// `C(n, r) mod 2` by Lucas: odd iff every binary digit of `r` is at most
/// the matching digit of `n`. `r > n` gives 0 automatically, since then
/// some bit of `r` is missing from `n`.
#[inline]
pub fn lucas(n: u64, r: u64) -> bool {
    r & !n == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(lucas(6, 2));
        assert!(!lucas(5, 2));
        assert!(lucas(0, 0));
        assert!(lucas(17, 0));
        assert!(!lucas(3, 4));
        assert!(lucas(10, 2));
        assert!(!lucas(8, 2));
    }
}
