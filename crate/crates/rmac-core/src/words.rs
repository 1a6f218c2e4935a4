//! Binary Lyndon words, necklace counting, gap numbers and the
//! word-to-face correspondence for polygon vertex sets.
//!
//! Alphabet convention: bits `{0, 1}` with `0 < 1`. (Some computer-algebra
//! systems enumerate Lyndon words over letters `{1, 2}`; the mapping
//! `1 -> 0`, `2 -> 1` makes those listings comparable verbatim.)
//!
//! A binary word of length `d` dividing `n` labels a vertex subset of the
//! `n`-gon: repeat the word `n/d` times and record the (1-based) positions
//! of the zeros. Rotating the polygon shifts the word, so Lyndon words —
//! the lexicographically least aperiodic representatives — index the
//! rotation orbits of vertex subsets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::{divisors, euler_phi, moebius};
use crate::error::{Error, Result};

/// Largest word length accepted by the enumeration routines. The number of
/// binary Lyndon words grows like `2^d / d`; this cap keeps every listing
/// comfortably in memory.
pub const MAX_WORD_LENGTH: usize = 24;

/// A binary Lyndon word: strictly smaller than every nontrivial rotation
/// of itself (hence aperiodic).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord {
    bits: Vec<u8>,
}

impl LyndonWord {
    /// Validates and wraps a bit string.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidInput("empty word".into()));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidInput("word bits must be 0 or 1".into()));
        }
        if !is_lyndon(&bits) {
            return Err(Error::InvalidInput(format!(
                "{} is not a Lyndon word (not strictly least among its rotations)",
                render_bits(&bits)
            )));
        }
        Ok(LyndonWord { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Word length `d`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // guaranteed non-empty by construction
    }

    /// Number of zeros in the word.
    pub fn zero_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 0).count()
    }

    /// The gap number: occurrences of the factor `01`, read linearly. For
    /// Lyndon words of length at least 2 (which start with 0 and end with
    /// 1) this equals the number of maximal blocks of zeros.
    pub fn gap_number(&self) -> usize {
        self.bits.windows(2).filter(|w| w == &[0, 1]).count()
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_bits(&self.bits))
    }
}

impl FromStr for LyndonWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidInput(format!(
                    "invalid character {other:?} in word"
                ))),
            })
            .collect::<Result<_>>()?;
        LyndonWord::new(bits)
    }
}

fn render_bits(bits: &[u8]) -> String {
    bits.iter().map(|b| char::from(b'0' + b)).collect()
}

/// `true` when `bits` is strictly smaller than all of its nontrivial
/// rotations.
pub fn is_lyndon(bits: &[u8]) -> bool {
    let d = bits.len();
    if d == 0 {
        return false;
    }
    (1..d).all(|r| {
        let rotation = bits[r..].iter().chain(&bits[..r]);
        bits.iter().lt(rotation)
    })
}

/// All binary Lyndon words of length exactly `d`, in lexicographic order
/// (Duval's algorithm). The count is re-verified against Moreau's formula.
pub fn lyndon_words(d: usize) -> Result<Vec<LyndonWord>> {
    if d < 1 {
        return Err(Error::InvalidInput("word length must be at least 1".into()));
    }
    if d > MAX_WORD_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "word length {d} exceeds the enumeration cap {MAX_WORD_LENGTH}"
        )));
    }
    let mut out = Vec::new();
    // Duval's algorithm: enumerate all Lyndon words of length <= d in lex
    // order, keeping those of length exactly d.
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == d {
            out.push(LyndonWord { bits: w.clone() });
        }
        // Extend periodically to length d, then increment the last
        // non-maximal letter.
        let prefix = w.len();
        while w.len() < d {
            let b = w[w.len() % prefix];
            w.push(b);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        if w.is_empty() {
            break;
        }
        *w.last_mut().expect("nonempty") = 1;
    }
    let expected = moreau_count(d as u64)?;
    if out.len() as u64 != expected {
        return Err(Error::Verification(format!(
            "enumerated {} Lyndon words of length {d} but Moreau's formula gives {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// Number of binary Lyndon words of length `n` (Moreau's formula):
/// `(1/n) * sum over d | n of mu(d) * 2^(n/d)`.
pub fn moreau_count(n: u64) -> Result<u64> {
    big_to_u64(moreau_count_big(n)?, "Moreau count")
}

/// Number of binary necklaces of length `n`:
/// `(1/n) * sum over d | n of phi(d) * 2^(n/d)`.
pub fn necklace_count(n: u64) -> Result<u64> {
    big_to_u64(necklace_count_big(n)?, "necklace count")
}

/// Arbitrary-precision Moreau count.
pub(crate) fn moreau_count_big(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::InvalidInput("count requires n >= 1".into()));
    }
    let mut total = num_bigint::BigInt::from(0);
    for d in divisors(n) {
        let term = num_bigint::BigInt::from(2u32).pow((n / d) as u32);
        total += term * moebius(d);
    }
    let (q, r) = num_integer::Integer::div_rem(&total, &num_bigint::BigInt::from(n));
    assert!(
        num_traits::Zero::is_zero(&r) && !num_traits::Signed::is_negative(&q),
        "Moreau sum must be a positive multiple of n"
    );
    Ok(q.magnitude().clone())
}

/// Arbitrary-precision necklace count.
pub(crate) fn necklace_count_big(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::InvalidInput("count requires n >= 1".into()));
    }
    let mut total = BigUint::from(0u32);
    for d in divisors(n) {
        total += BigUint::from(2u32).pow((n / d) as u32) * BigUint::from(euler_phi(d));
    }
    let (q, r) = num_integer::Integer::div_rem(&total, &BigUint::from(n));
    assert!(num_traits::Zero::is_zero(&r), "totient sum must be divisible by n");
    Ok(q)
}

fn big_to_u64(v: BigUint, what: &str) -> Result<u64> {
    v.to_u64().ok_or_else(|| {
        Error::ResourceLimit(format!("{what} does not fit in 64 bits: {v}"))
    })
}

/// Number of binary Lyndon words of length `n` with gap number exactly `k`:
/// `(2/n) * sum over e | gcd(n,k) of mu(e) * C(n/e, 2k/e)` for `k >= 1`.
/// (`k = 0` only occurs for the two one-letter words.)
pub fn count_l(n: u64, k: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidInput("count_l requires n >= 1".into()));
    }
    if k == 0 {
        return Ok(if n == 1 { 2 } else { 0 });
    }
    let g = num_integer::Integer::gcd(&n, &k);
    let mut total = num_bigint::BigInt::from(0);
    for e in divisors(g) {
        total += binomial(n / e, 2 * k / e) * moebius(e);
    }
    total *= 2;
    let (q, r) = num_integer::Integer::div_rem(&total, &num_bigint::BigInt::from(n));
    if !num_traits::Zero::is_zero(&r) || num_traits::Signed::is_negative(&q) {
        return Err(Error::Verification(format!(
            "count_l({n}, {k}) evaluated to the non-integer or negative {total}/{n}"
        )));
    }
    big_to_u64(q.magnitude().clone(), "count_l")
}

fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    if k > n {
        return num_bigint::BigInt::from(0);
    }
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// One rotation-orbit of polygon vertex subsets, labelled by its Lyndon
/// word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordClass {
    /// The orbit's Lyndon representative.
    pub word: LyndonWord,
    /// Ambient polygon size.
    pub n: usize,
    /// Word length; the orbit size. Divides `n`.
    pub d: usize,
    /// Gap number of the word.
    pub iota: usize,
    /// Canonical face: 1-based positions of the zeros in the repeated word.
    pub face: Vec<usize>,
    /// All `d` distinct cyclic shifts of the face, starting from `face`.
    pub orbit: Vec<Vec<usize>>,
}

impl WordClass {
    /// Gap number over the full `n`-cycle: `iota * n / d`.
    pub fn full_gap(&self) -> usize {
        self.iota * self.n / self.d
    }

    /// Rank contributed per orbit member: `iota * n/d - 1`.
    pub fn module_rank(&self) -> usize {
        self.full_gap() - 1
    }

    /// Total Z-rank of the summand labelled by this class:
    /// `d * (iota * n/d - 1) = iota * n - d`.
    pub fn summand_rank(&self) -> usize {
        self.d * self.module_rank()
    }
}

/// Computes the face and orbit data of a word inside the `n`-gon.
/// Requires `|w|` to divide `n`.
pub fn face_from_word(word: &LyndonWord, n: usize) -> Result<WordClass> {
    let d = word.len();
    if n < 1 || !n.is_multiple_of(d) {
        return Err(Error::InvalidInput(format!(
            "word length {d} does not divide n = {n}"
        )));
    }
    let face: Vec<usize> = (0..n)
        .filter(|&i| word.bits()[i % d] == 0)
        .map(|i| i + 1)
        .collect();
    let orbit: Vec<Vec<usize>> = (0..d)
        .map(|shift| {
            let mut shifted: Vec<usize> = face.iter().map(|&p| (p - 1 + shift) % n + 1).collect();
            shifted.sort_unstable();
            shifted
        })
        .collect();
    Ok(WordClass {
        iota: word.gap_number(),
        word: word.clone(),
        n,
        d,
        face,
        orbit,
    })
}

/// The orbit representatives indexing the rank-positive summands of
/// `H_1` for the `n`-gon: all Lyndon words of length `d` for proper
/// divisors `1 < d < n`, plus the length-`n` words with gap number at
/// least 2. Sorted by `(d, iota, word)`.
pub fn representatives(n: usize) -> Result<Vec<WordClass>> {
    if n < 3 {
        return Err(Error::InvalidInput(
            "representatives are defined for n >= 3".into(),
        ));
    }
    let mut classes = Vec::new();
    for d in divisors(n as u64) {
        let d = d as usize;
        if d == 1 {
            continue;
        }
        for word in lyndon_words(d)? {
            let class = face_from_word(&word, n)?;
            // Summand rank d*(full_gap - 1) vanishes exactly when the full
            // gap is 1, i.e. for length-n words with a single zero block.
            if class.full_gap() >= 2 {
                classes.push(class);
            }
        }
    }
    classes.sort_by(|a, b| {
        (a.d, a.iota, &a.word.bits).cmp(&(b.d, b.iota, &b.word.bits))
    });
    Ok(classes)
}

/// Classes of [`representatives`] grouped by `(d, iota)`, preserving order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFamily {
    pub d: usize,
    pub iota: usize,
    pub classes: Vec<WordClass>,
}

impl ClassFamily {
    /// Gap number over the full cycle, shared by the whole family.
    pub fn full_gap(&self) -> usize {
        self.classes[0].full_gap()
    }

    /// Combined Z-rank of the family's summands.
    pub fn basis_count(&self) -> usize {
        self.classes.iter().map(WordClass::summand_rank).sum()
    }
}

/// Groups [`representatives`] by `(d, iota)` in ascending order.
pub fn representative_families(n: usize) -> Result<Vec<ClassFamily>> {
    let mut families: Vec<ClassFamily> = Vec::new();
    for class in representatives(n)? {
        match families.last_mut() {
            Some(f) if f.d == class.d && f.iota == class.iota => f.classes.push(class),
            _ => families.push(ClassFamily {
                d: class.d,
                iota: class.iota,
                classes: vec![class],
            }),
        }
    }
    Ok(families)
}
