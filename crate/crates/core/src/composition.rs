//! Compositions as values: containment, occurrence counting, supports,
//! covering, and the one-element extension/reduction neighbourhoods.
//!
//! A composition of `n` corresponds to a layered permutation of `n`
//! (descending runs of the interval sizes), and containment here mirrors
//! pattern containment of layered permutations; the correspondence is
//! context only, nothing in this crate converts between the two.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// A composition: a finite sequence of positive integer parts.
///
/// The `size` is the sum of the parts, the `len` the number of parts. The
/// empty composition is a legal value (it is the base of the counting
/// recursion and the reduction of `(1)`), but prolificity-facing operations
/// reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<u64>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The composition with the same parts in reversed order.
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self { parts }
    }

    /// Concatenation `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }

    /// True iff the first and last part both have size 1 (requires
    /// non-emptiness; a single part of size 1 qualifies).
    pub fn starts_and_ends_with_one(&self) -> bool {
        matches!(self.parts.first(), Some(1)) && matches!(self.parts.last(), Some(1))
    }

    /// Digit-string rendering when every part fits in one digit, otherwise
    /// comma-separated. `(1,4,4,1)` renders as `1441`, `(8,12)` as `8,12`.
    pub fn compact(&self) -> String {
        if !self.is_empty() && self.parts.iter().all(|&p| p <= 9) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

/// Canonical order: by size, then by number of parts, then lexicographically.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.parts.len().cmp(&other.parts.len()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_composition(s)
    }
}

/// Parses a composition from text.
///
/// Accepted forms:
/// - a comma/whitespace-separated list of positive decimal integers, e.g.
///   `"1,4,4,1"` or `"8 12 4"`;
/// - a separator-free string of digits 1-9 (compact form), one part per
///   digit, e.g. `"1441"`.
///
/// Compact form wins for separator-free digit strings, so `"12"` is the
/// two-part composition `(1,2)`; write `"12,"` or `"012"` for a single part
/// of size twelve.
pub fn parse_composition(text: &str) -> Result<Composition, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyInput);
    }
    let is_sep = |c: char| c == ',' || c.is_whitespace();
    if !trimmed.contains(is_sep) && trimmed.chars().all(|c| ('1'..='9').contains(&c)) {
        let parts = trimmed.chars().map(|c| c as u64 - '0' as u64).collect();
        return Ok(Composition { parts });
    }
    let mut parts = Vec::new();
    for token in trimmed.split(is_sep).filter(|t| !t.is_empty()) {
        match token.parse::<u64>() {
            Ok(0) => return Err(Error::NonPositivePart { token: token.into() }),
            Ok(p) => parts.push(p),
            Err(_) if token.starts_with('-') && token[1..].chars().all(|c| c.is_ascii_digit()) => {
                return Err(Error::NonPositivePart { token: token.into() });
            }
            Err(_) => return Err(Error::InvalidToken { token: token.into() }),
        }
    }
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(Composition { parts })
}

/// One containment embedding, as the strictly increasing 1-based indices of
/// the text parts it uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Support {
    indices: Vec<usize>,
}

impl Support {
    pub fn new(indices: Vec<usize>) -> Result<Self, Error> {
        if indices.windows(2).any(|w| w[0] >= w[1]) || indices.first() == Some(&0) {
            return Err(Error::UnorderedSupport);
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, ix) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{ix}")?;
        }
        write!(f, ")")
    }
}

/// An exact, unbounded occurrence count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccurrenceCount(BigUint);

impl OccurrenceCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for OccurrenceCount {
    fn from(v: u64) -> Self {
        OccurrenceCount(BigUint::from(v))
    }
}

impl From<BigUint> for OccurrenceCount {
    fn from(v: BigUint) -> Self {
        OccurrenceCount(v)
    }
}

impl fmt::Display for OccurrenceCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Length of the longest pattern prefix contained in the text, computed by
/// the greedy left-to-right scan. Greedy matching is maximal for this
/// relation, so the result equals the exhaustive maximum over index subsets.
pub fn longest_prefix_contained(pattern: &Composition, text: &Composition) -> usize {
    let u = pattern.parts();
    let mut matched = 0;
    for &part in text.parts() {
        if matched < u.len() && part >= u[matched] {
            matched += 1;
        }
    }
    matched
}

/// True iff the pattern is contained in the text: some strictly increasing
/// selection of parts of the text dominates the pattern part-wise. Runs in
/// time linear in the text length. The empty pattern is contained in
/// everything.
pub fn contains(pattern: &Composition, text: &Composition) -> bool {
    longest_prefix_contained(pattern, text) == pattern.len()
}

/// Default cap on the text length for exhaustive supports enumeration.
pub const DEFAULT_SUPPORTS_CAP: usize = 20;

/// All supports of the pattern in the text, enumerated exhaustively, with
/// the default text-length cap. This is an oracle, not a production path.
pub fn supports(pattern: &Composition, text: &Composition) -> Result<Vec<Support>, Error> {
    supports_capped(pattern, text, DEFAULT_SUPPORTS_CAP)
}

/// As [`supports`], with an explicit text-length cap.
pub fn supports_capped(
    pattern: &Composition,
    text: &Composition,
    cap: usize,
) -> Result<Vec<Support>, Error> {
    if pattern.is_empty() {
        return Err(Error::EmptyComposition);
    }
    if text.len() > cap {
        return Err(Error::SupportsCapExceeded { len: text.len(), cap });
    }
    let u = pattern.parts();
    let v = text.parts();
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(u.len());
    enumerate_supports(u, v, 0, 0, &mut chosen, &mut found);
    Ok(found)
}

fn enumerate_supports(
    u: &[u64],
    v: &[u64],
    j: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<Support>,
) {
    if j == u.len() {
        found.push(Support { indices: chosen.clone() });
        return;
    }
    let remaining = u.len() - j;
    if v.len() < remaining {
        return;
    }
    let last_start = v.len() - remaining;
    for i in start..=last_start {
        if v[i] >= u[j] {
            chosen.push(i + 1);
            enumerate_supports(u, v, j + 1, i + 1, chosen, found);
            chosen.pop();
        }
    }
}

/// The parts of `c` at the selected indices, in order.
pub fn subcomposition(c: &Composition, x: &Support) -> Result<Composition, Error> {
    let parts = c.parts();
    let mut out = Vec::with_capacity(x.len());
    for &ix in x.indices() {
        if ix == 0 || ix > parts.len() {
            return Err(Error::IndexOutOfRange { index: ix, len: parts.len() });
        }
        out.push(parts[ix - 1]);
    }
    Ok(Composition { parts: out })
}

#[derive(Default)]
struct BinomialTable {
    memo: HashMap<(u64, u64), BigUint>,
}

impl BinomialTable {
    fn binomial(&mut self, n: u64, k: u64) -> &BigUint {
        self.memo.entry((n, k)).or_insert_with(|| {
            if k > n {
                return BigUint::zero();
            }
            let k = k.min(n - k);
            let mut acc = BigUint::one();
            for i in 0..k {
                acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
            }
            acc
        })
    }
}

/// Number of occurrences of the pattern in the text: the sum over all index
/// subsets of the product of binomial coefficients `C(text part, pattern
/// part)`, evaluated by direct subset enumeration with zero terms pruned.
///
/// The empty pattern has exactly one (empty) occurrence.
pub fn count_occurrences(pattern: &Composition, text: &Composition) -> OccurrenceCount {
    let mut table = BinomialTable::default();
    let mut total = BigUint::zero();
    let acc = BigUint::one();
    sum_subset_products(pattern.parts(), text.parts(), &acc, &mut table, &mut total);
    OccurrenceCount(total)
}

fn sum_subset_products(
    u: &[u64],
    v: &[u64],
    acc: &BigUint,
    table: &mut BinomialTable,
    total: &mut BigUint,
) {
    let Some((&u0, u_rest)) = u.split_first() else {
        *total += acc;
        return;
    };
    if v.len() < u.len() {
        return;
    }
    for i in 0..=(v.len() - u.len()) {
        if v[i] >= u0 {
            let next = acc * table.binomial(v[i], u0);
            sum_subset_products(u_rest, &v[i + 1..], &next, table, total);
        }
    }
}

/// Independent route to the same count, via the recursion
/// `occ(u, v) = occ(u, v') + C(last(v), last(u)) * occ(u', v')` where a prime
/// drops the last part, with `occ(empty, _) = 1` and
/// `occ(non-empty, empty) = 0`. Evaluated bottom-up over prefix lengths.
pub fn count_occurrences_oracle(pattern: &Composition, text: &Composition) -> OccurrenceCount {
    let u = pattern.parts();
    let v = text.parts();
    let mut table = BinomialTable::default();
    let mut row: Vec<BigUint> = Vec::with_capacity(u.len() + 1);
    row.push(BigUint::one());
    row.extend(std::iter::repeat(BigUint::zero()).take(u.len()));
    for &part in v {
        for i in (1..=u.len()).rev() {
            let gained = table.binomial(part, u[i - 1]) * &row[i - 1];
            row[i] += gained;
        }
    }
    OccurrenceCount(row.pop().unwrap())
}

/// True iff every index of the text lies in some support of the pattern.
///
/// Computed in time linear in the text length: with `a[i]` the greedy longest
/// pattern prefix contained in `text[..i]` and `b[i]` the greedy longest
/// pattern suffix contained in `text[i..]`, index `i` is covered iff some
/// pattern position `j` satisfies `pattern[j] <= text[i]`, `a[i-1] >= j-1`
/// and `b[i+1] >= k-j`.
pub fn is_covered(pattern: &Composition, text: &Composition) -> bool {
    let u = pattern.parts();
    let v = text.parts();
    let k = u.len();
    let n = v.len();
    if k == 0 {
        // the only support of the empty pattern is the empty index set
        return n == 0;
    }
    let mut prefix = vec![0usize; n + 1];
    for i in 1..=n {
        let a = prefix[i - 1];
        prefix[i] = if a < k && v[i - 1] >= u[a] { a + 1 } else { a };
    }
    let mut suffix = vec![0usize; n + 2];
    for i in (1..=n).rev() {
        let b = suffix[i + 1];
        suffix[i] = if b < k && v[i - 1] >= u[k - 1 - b] { b + 1 } else { b };
    }
    (1..=n).all(|i| {
        let j_min = 1.max(k.saturating_sub(suffix[i + 1]));
        let j_max = k.min(prefix[i - 1] + 1);
        (j_min..=j_max).any(|j| u[j - 1] <= v[i - 1])
    })
}

/// The distinct compositions obtained by inserting one element: incrementing
/// one part, or inserting a new part of size 1 into any gap. Every result
/// has size exactly `size(c) + 1`; duplicates are removed and the result is
/// in canonical order.
pub fn extensions(c: &Composition) -> Vec<Composition> {
    let parts = c.parts();
    let mut set = BTreeSet::new();
    for i in 0..parts.len() {
        let mut next = parts.to_vec();
        next[i] += 1;
        set.insert(Composition { parts: next });
    }
    for gap in 0..=parts.len() {
        let mut next = parts.to_vec();
        next.insert(gap, 1);
        set.insert(Composition { parts: next });
    }
    set.into_iter().collect()
}

/// The distinct compositions obtained by removing one element: decrementing
/// one part, dropping it when it reaches zero. Inverse of [`extensions`]:
/// `w` is a reduction of `c` iff `c` is an extension of `w`.
pub fn reductions(c: &Composition) -> Vec<Composition> {
    let parts = c.parts();
    let mut set = BTreeSet::new();
    for i in 0..parts.len() {
        let mut next = parts.to_vec();
        if next[i] == 1 {
            next.remove(i);
        } else {
            next[i] -= 1;
        }
        set.insert(Composition { parts: next });
    }
    set.into_iter().collect()
}

/// All compositions of the given size, in canonical order. Size 0 yields the
/// empty composition alone; size `n >= 1` yields `2^(n-1)` compositions.
pub fn compositions_of_size(n: u64) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let n = usize::try_from(n).expect("composition size out of range");
    assert!(n <= 25, "refusing to enumerate 2^{} compositions", n - 1);
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1u64;
        for bit in 0..(n - 1) {
            if mask >> bit & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(Composition { parts });
    }
    out.sort();
    out
}

/// All non-empty compositions of size at most `n`, in canonical order.
pub fn compositions_up_to(n: u64) -> Vec<Composition> {
    let mut out: Vec<Composition> = (1..=n).flat_map(compositions_of_size).collect();
    out.sort();
    out
}
