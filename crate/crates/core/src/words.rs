//! Balanced circular `{A,B}`-word machinery: conjugation, periods,
//! special and self-conjugate-primitive words, and the counting
//! functions `R`, `P`, `Q`, `A`.
//!
//! `R(n)` counts balanced circular words of length `2n`, `P(m)`
//! primitive circular words of length `m`, `Q(m)` primitive balanced
//! circular words of length `2m`. All three have exact divisor-sum
//! formulas through the totient and Möbius functions. The
//! self-conjugate count `A(m)` has no known closed form and is
//! computed by exhaustive enumeration; only its parity has a law,
//! `A(m) ≡ P(2m) (mod 2)`.
//!
//! Words are packed as bit sequences (`A = 0`, `B = 1`), most
//! significant bit first so that integer order on equal lengths is
//! lexicographic order with `A < B`.

use crate::Error;
use alloc::vec::Vec;
use core::fmt;

/// Letter of the two-symbol alphabet. Rendered uppercase for solution
/// words and lowercase for per-interval partition patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub const fn conjugate(self) -> Self {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub const fn upper(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
        }
    }

    pub const fn lower(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// An ordered `{A,B}`-sequence of length 1..=32, packed into a `u32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u32,
    len: u8,
}

impl Word {
    /// Maximum supported length (enough for self-conjugate enumeration
    /// at `m = 16`).
    pub const MAX_LEN: usize = 32;

    pub fn from_bits(bits: u32, len: usize) -> Self {
        assert!((1..=Self::MAX_LEN).contains(&len), "word length out of range");
        let mask = Self::mask(len);
        Self {
            bits: bits & mask,
            len: len as u8,
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        assert!(!letters.is_empty() && letters.len() <= Self::MAX_LEN);
        let mut bits = 0u32;
        for &l in letters {
            bits = bits << 1 | (l == Letter::B) as u32;
        }
        Self {
            bits,
            len: letters.len() as u8,
        }
    }

    fn mask(len: usize) -> u32 {
        if len == 32 {
            u32::MAX
        } else {
            (1u32 << len) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Letter at position `i` counted from the left.
    pub fn letter(&self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        if self.bits >> (self.len() - 1 - i) & 1 == 1 {
            Letter::B
        } else {
            Letter::A
        }
    }

    pub fn with_letter(&self, i: usize, l: Letter) -> Self {
        debug_assert!(i < self.len());
        let bit = 1u32 << (self.len() - 1 - i);
        let bits = match l {
            Letter::A => self.bits & !bit,
            Letter::B => self.bits | bit,
        };
        Self { bits, len: self.len }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn count(&self, l: Letter) -> usize {
        let ones = self.bits.count_ones() as usize;
        match l {
            Letter::B => ones,
            Letter::A => self.len() - ones,
        }
    }

    /// Equal numbers of both letters.
    pub fn is_balanced(&self) -> bool {
        self.len().is_multiple_of(2) && self.count(Letter::A) == self.len() / 2
    }

    /// Cyclic rotation moving the first `r` letters to the end.
    pub fn rotated(&self, r: usize) -> Self {
        let len = self.len();
        let r = r % len;
        if r == 0 {
            return *self;
        }
        let bits = (self.bits << r | self.bits >> (len - r)) & Self::mask(len);
        Self { bits, len: self.len }
    }

    /// Swaps every `A` for a `B` and vice versa; an involution.
    pub fn conjugate(&self) -> Self {
        Self {
            bits: !self.bits & Self::mask(self.len()),
            len: self.len,
        }
    }

    /// Least `l > 0` with `rotated(l) == self`; always divides the
    /// length.
    pub fn period(&self) -> usize {
        (1..=self.len())
            .find(|&l| self.len().is_multiple_of(l) && self.rotated(l) == *self)
            .unwrap()
    }

    /// A word of full period.
    pub fn is_primitive(&self) -> bool {
        self.period() == self.len()
    }

    /// Lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len()).map(|r| self.rotated(r)).min().unwrap()
    }

    /// True when the word is lexicographically least among its
    /// rotations.
    pub fn is_canonical_rotation(&self) -> bool {
        (1..self.len()).all(|r| self.rotated(r) >= *self)
    }

    /// Some rotation equals the conjugate; equivalently the circular
    /// class is self-conjugate.
    pub fn is_special(&self) -> bool {
        let conj = self.conjugate();
        (0..self.len()).any(|r| self.rotated(r) == conj)
    }

    /// A factor `a` such that some rotation of the word reads
    /// `(a a*)(a a*)...(a a*)`; `None` exactly when the word is not
    /// special. Searches rotations in order and factor lengths from the
    /// shortest, so a primitive special word of length `2m` yields the
    /// unique length-`m` factor of its least such rotation.
    pub fn special_representation(&self) -> Option<Word> {
        let len = self.len();
        if !len.is_multiple_of(2) {
            return None;
        }
        for r in 0..len {
            let u = self.rotated(r);
            for half in (1..=len / 2).filter(|h| (len / 2).is_multiple_of(*h)) {
                let a = u.prefix(half);
                let block = a.concat(&a.conjugate());
                if u == block.repeated(len / (2 * half)) {
                    return Some(a);
                }
            }
        }
        None
    }

    fn prefix(&self, k: usize) -> Word {
        debug_assert!(k >= 1 && k <= self.len());
        Word::from_bits(self.bits >> (self.len() - k), k)
    }

    fn concat(&self, other: &Word) -> Word {
        debug_assert!(self.len() + other.len() <= Self::MAX_LEN);
        Word::from_bits(
            self.bits << other.len() | other.bits,
            self.len() + other.len(),
        )
    }

    fn repeated(&self, times: usize) -> Word {
        let mut out = *self;
        for _ in 1..times {
            out = out.concat(self);
        }
        out
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        if self.len == other.len {
            self.bits.cmp(&other.bits)
        } else {
            self.letters().cmp(other.letters())
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.upper())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Both cases accepted so the same parser serves solution words and
/// interval patterns.
impl core::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() || s.len() > Self::MAX_LEN {
            return Err(Error::Parse("word length out of range"));
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            letters.push(match c {
                'A' | 'a' => Letter::A,
                'B' | 'b' => Letter::B,
                _ => return Err(Error::Parse("word letters must be A or B")),
            });
        }
        Ok(Word::from_letters(&letters))
    }
}

/// A circular word: the rotation class of a word, named by its
/// lexicographically least rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircularClass {
    canonical: Word,
    period: usize,
}

impl CircularClass {
    pub fn of(word: Word) -> Self {
        Self {
            canonical: word.canonical_rotation(),
            period: word.period(),
        }
    }

    pub fn canonical(&self) -> Word {
        self.canonical
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn is_primitive(&self) -> bool {
        self.period == self.canonical.len()
    }
}

/// Möbius function; 0 on non-square-free inputs, else `(-1)^#primes`.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out -= out / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Binomial coefficient, exact in `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `R(n)`: balanced circular words of length `2n`, by the totient
/// formula `R(n) = (1/2n) Σ_{m|n} C(2m, m) φ(n/m)`.
pub fn count_balanced_circular(n: u64) -> u128 {
    assert!(n >= 1);
    let sum: u128 = divisors(n)
        .iter()
        .map(|&m| binomial(2 * m, m) * totient(n / m) as u128)
        .sum();
    sum / (2 * n as u128)
}

/// `P(m)`: primitive circular words of length `m`, by Möbius inversion
/// of `2^m = Σ_{k|m} k P(k)`.
pub fn count_primitive_circular(m: u64) -> u128 {
    assert!((1..=120).contains(&m), "2^m must fit in u128");
    let sum: i128 = divisors(m)
        .iter()
        .map(|&k| (1i128 << k) * mobius(m / k) as i128)
        .sum();
    debug_assert!(sum > 0 && sum % m as i128 == 0);
    (sum / m as i128) as u128
}

/// `Q(m)`: primitive balanced circular words of length `2m`, by Möbius
/// inversion of `C(2m, m) = Σ_{k|m} 2k Q(k)`.
pub fn count_primitive_balanced(m: u64) -> u128 {
    assert!(m >= 1);
    let sum: i128 = divisors(m)
        .iter()
        .map(|&k| binomial(2 * k, k) as i128 * mobius(m / k) as i128)
        .sum();
    debug_assert!(sum > 0 && sum % (2 * m as i128) == 0);
    (sum / (2 * m as i128)) as u128
}

/// `A(m)`: circular words of length `2m` that are both primitive and
/// self-conjugate, by exhaustive enumeration. A word is special
/// exactly when some rotation has the half-conjugate form `b b*`, and
/// the `b b*` words are closed under rotation, so every primitive
/// special class is met by exactly `2m` of the `2^m` half-word
/// choices. No closed formula is asserted; the full-scan oracle and
/// the parity law `A(m) ≡ P(2m) (mod 2)` are checked in tests.
pub fn count_star_primitive(m: u64) -> u64 {
    assert!(m >= 1 && 2 * m <= Word::MAX_LEN as u64);
    let half = m as usize;
    let mut primitive_words = 0u64;
    for bits in 0..1u64 << half {
        let b = Word::from_bits(bits as u32, half);
        if b.concat(&b.conjugate()).is_primitive() {
            primitive_words += 1;
        }
    }
    debug_assert_eq!(primitive_words % (2 * m), 0);
    primitive_words / (2 * m)
}

/// Parity of `P(2k)` predicted from the factorization of `k`: odd
/// exactly when `k` is odd square-free, or twice an odd square-free
/// number.
pub fn primitive_parity_law(k: u64) -> bool {
    fn odd_square_free(n: u64) -> bool {
        if n.is_multiple_of(2) {
            return false;
        }
        let mut n = n;
        let mut p = 3;
        while p * p <= n {
            if n.is_multiple_of(p * p) {
                return false;
            }
            while n.is_multiple_of(p) {
                n /= p;
            }
            p += 2;
        }
        true
    }
    odd_square_free(k) || (k.is_multiple_of(2) && odd_square_free(k / 2))
}

/// One row of the counting table exposed to front ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: u64,
    pub balanced: u128,
    pub primitive: u128,
    pub primitive_balanced: u128,
    pub star_primitive: u64,
    /// `P(2n)`, whose parity must match `star_primitive`.
    pub primitive_doubled: u128,
}

impl CountRow {
    pub fn parity_law_holds(&self) -> bool {
        self.star_primitive as u128 % 2 == self.primitive_doubled % 2
    }
}

/// Counting-table engine: divisor-sum formulas or exhaustive
/// enumeration (the independent cross-check; `A` is always exhaustive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountEngine {
    #[default]
    Formula,
    BruteForce,
}

/// Table of `R`, `P`, `Q`, `A` for `n = 1..=nmax`.
pub fn count_table(nmax: u64, engine: CountEngine) -> Vec<CountRow> {
    (1..=nmax)
        .map(|n| match engine {
            CountEngine::Formula => CountRow {
                n,
                balanced: count_balanced_circular(n),
                primitive: count_primitive_circular(n),
                primitive_balanced: count_primitive_balanced(n),
                star_primitive: count_star_primitive(n),
                primitive_doubled: count_primitive_circular(2 * n),
            },
            CountEngine::BruteForce => CountRow {
                n,
                balanced: brute::balanced_circular(n) as u128,
                primitive: brute::primitive_circular(n) as u128,
                primitive_balanced: brute::primitive_balanced(n) as u128,
                star_primitive: count_star_primitive(n),
                primitive_doubled: brute::primitive_circular(2 * n) as u128,
            },
        })
        .collect()
}

/// Independent enumeration oracles. These walk every word and count
/// rotation classes directly; the formulas above must agree with them.
pub mod brute {
    use super::Word;

    /// Rotation classes of balanced words of length `2n`.
    pub fn balanced_circular(n: u64) -> u64 {
        let len = (2 * n) as usize;
        assert!(len <= Word::MAX_LEN);
        let mut count = 0;
        for bits in 0..1u64 << len {
            let w = Word::from_bits(bits as u32, len);
            if w.is_balanced() && w.is_canonical_rotation() {
                count += 1;
            }
        }
        count
    }

    /// Rotation classes of full period among words of length `m`.
    pub fn primitive_circular(m: u64) -> u64 {
        let len = m as usize;
        assert!(len <= Word::MAX_LEN);
        let mut count = 0;
        for bits in 0..1u64 << len {
            let w = Word::from_bits(bits as u32, len);
            if w.is_canonical_rotation() && w.is_primitive() {
                count += 1;
            }
        }
        count
    }

    /// Rotation classes that are both balanced and of full period,
    /// length `2m`.
    pub fn primitive_balanced(m: u64) -> u64 {
        let len = (2 * m) as usize;
        assert!(len <= Word::MAX_LEN);
        let mut count = 0;
        for bits in 0..1u64 << len {
            let w = Word::from_bits(bits as u32, len);
            if w.is_balanced() && w.is_canonical_rotation() && w.is_primitive() {
                count += 1;
            }
        }
        count
    }

    /// Full-scan count of primitive self-conjugate rotation classes of
    /// length `2m`; quadratic in the word count, for cross-checks only.
    pub fn star_primitive(m: u64) -> u64 {
        let len = (2 * m) as usize;
        assert!(len <= Word::MAX_LEN);
        let mut count = 0;
        for bits in 0..1u64 << len {
            let w = Word::from_bits(bits as u32, len);
            if w.is_balanced() && w.is_canonical_rotation() && w.is_primitive() && w.is_special() {
                count += 1;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::str::FromStr;

    fn w(s: &str) -> Word {
        Word::from_str(s).unwrap()
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(w("A").conjugate(), w("B"));
        assert_eq!(w("AABB").conjugate(), w("BBAA"));
        for bits in 0..1u32 << 10 {
            let word = Word::from_bits(bits, 10);
            assert_eq!(word.conjugate().conjugate(), word);
        }
    }

    #[test]
    fn rotation_and_ordering() {
        assert_eq!(w("AABB").rotated(1), w("ABBA"));
        assert_eq!(w("AABB").rotated(4), w("AABB"));
        assert!(w("AABB") < w("ABAB"));
        assert!(w("ABAB") < w("BA"));
        assert_eq!(w("ABAB").period(), 2);
        assert_eq!(w("AABB").period(), 4);
        assert_eq!(w("BBAA").canonical_rotation(), w("AABB"));
    }

    #[test]
    fn arithmetic_function_base_cases() {
        assert_eq!(mobius(1), 1);
        assert_eq!(totient(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(totient(6), 2);
    }

    #[test]
    fn mobius_divisor_sum_vanishes() {
        // Σ_{d|n} μ(d) = [n = 1]
        for n in 1..=200u64 {
            let sum: i64 = divisors(n).iter().map(|&d| mobius(d)).sum();
            assert_eq!(sum, i64::from(n == 1));
        }
    }

    #[test]
    fn balanced_circular_small_values() {
        assert_eq!(count_balanced_circular(1), 1); // [AB]
        assert_eq!(count_balanced_circular(2), 2); // [AABB], [ABAB]
        assert_eq!(count_balanced_circular(3), 4); // (20 + 2·2)/6
    }

    #[test]
    fn primitive_circular_small_values() {
        assert_eq!(count_primitive_circular(1), 2); // A, B
        assert_eq!(count_primitive_circular(2), 1); // [AB]
        assert_eq!(count_primitive_circular(8), 30); // (256 - 16)/8
    }

    #[test]
    fn primitive_balanced_small_values() {
        assert_eq!(count_primitive_balanced(1), 1); // [AB]
        assert_eq!(count_primitive_balanced(2), 1); // [AABB]
        assert_eq!(count_primitive_balanced(3), 3); // (20 - 2)/6
    }

    #[test]
    fn star_primitive_small_values() {
        assert_eq!(count_star_primitive(1), 1); // [AB]
        assert_eq!(count_star_primitive(2), 1); // [AABB]; [ABAB] has period 2
    }

    #[test]
    fn star_primitive_matches_full_scan() {
        for m in 1..=8 {
            assert_eq!(count_star_primitive(m), brute::star_primitive(m), "m = {m}");
        }
    }

    #[test]
    fn special_words() {
        let (word, special) = (w("AABB"), true);
        assert_eq!(word.is_special(), special);
        assert_eq!(word.special_representation(), Some(w("AA")));
        assert!(w("ABAB").is_special());
        assert_eq!(w("ABAB").special_representation(), Some(w("A")));
        assert!(!w("AAAB").is_special());
        assert_eq!(w("AAAB").special_representation(), None);
    }

    #[test]
    fn special_representation_matches_exhaustive_check() {
        // Over every balanced word of length 6: the factorized form
        // exists exactly when some rotation equals the conjugate.
        for bits in 0..1u32 << 6 {
            let word = Word::from_bits(bits, 6);
            if !word.is_balanced() {
                continue;
            }
            let by_rotation = (0..6).any(|r| word.rotated(r) == word.conjugate());
            assert_eq!(word.is_special(), by_rotation);
            assert_eq!(word.special_representation().is_some(), by_rotation);
            if let Some(a) = word.special_representation() {
                let block = a.concat(&a.conjugate());
                let rebuilt = block.repeated(6 / (2 * a.len()));
                assert!((0..6).any(|r| word.rotated(r) == rebuilt));
            }
        }
    }

    #[test]
    fn formulas_match_brute_force() {
        for n in 1..=8 {
            assert_eq!(count_balanced_circular(n), brute::balanced_circular(n) as u128);
            assert_eq!(count_primitive_circular(n), brute::primitive_circular(n) as u128);
            assert_eq!(count_primitive_balanced(n), brute::primitive_balanced(n) as u128);
        }
    }

    #[test]
    fn divisor_identities() {
        for m in 1..=12u64 {
            let p_sum: u128 = divisors(m)
                .iter()
                .map(|&k| k as u128 * count_primitive_circular(k))
                .sum();
            assert_eq!(p_sum, 1u128 << m);
            let q_sum: u128 = divisors(m)
                .iter()
                .map(|&k| 2 * k as u128 * count_primitive_balanced(k))
                .sum();
            assert_eq!(q_sum, binomial(2 * m, m));
        }
    }

    #[test]
    fn star_primitive_parity_law() {
        for m in 1..=8 {
            assert_eq!(
                count_star_primitive(m) as u128 % 2,
                count_primitive_circular(2 * m) % 2,
                "A({m}) must be congruent to P({}) mod 2",
                2 * m
            );
        }
    }

    #[test]
    fn primitive_parity_pattern() {
        for k in 1..=12 {
            assert_eq!(
                count_primitive_circular(2 * k) % 2 == 1,
                primitive_parity_law(k),
                "parity pattern fails at k = {k}"
            );
        }
    }

    #[test]
    fn count_engines_agree() {
        let formula = count_table(6, CountEngine::Formula);
        let brute = count_table(6, CountEngine::BruteForce);
        assert_eq!(formula, brute);
        assert!(formula.iter().all(CountRow::parity_law_holds));
    }
}
