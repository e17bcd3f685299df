//! Shared domain types: objects, morphisms, the ordered-distinct-triple
//! indexing convention, alpha functions and object permutations.
//!
//! Objects are the integers `1..=n`. Every hom-set has exactly two
//! morphisms; the naming convention is
//!
//! * `E^{i,i}`: the identity of object `i`,
//! * `F^{i,i}`: the unique non-identity endomorphism of `i`,
//! * `F^{i,j}`, `G^{i,j}` for `i != j`: the absorbing cross morphism and
//!   its companion.

use crate::{Error, Result, MAX_ALPHA_N};
use std::fmt;

/// The three morphism name letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorKind {
    E,
    F,
    G,
}

impl fmt::Display for MorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorKind::E => "E",
            MorKind::F => "F",
            MorKind::G => "G",
        })
    }
}

/// A named arrow `K^{i,j}` with 1-based source `i` and target `j`.
///
/// Invariants: `E` only on the diagonal, `G` only off it. `F` occurs both
/// on the diagonal (the non-identity endomorphism) and off it (the
/// absorbing cross morphism).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    kind: MorKind,
    src: u8,
    tgt: u8,
}

impl Morphism {
    pub fn new(kind: MorKind, src: u8, tgt: u8) -> Result<Self> {
        match kind {
            MorKind::E if src != tgt => Err(Error::InvalidMorphism(format!(
                "E^{{{src},{tgt}}}: identities live on the diagonal"
            ))),
            MorKind::G if src == tgt => Err(Error::InvalidMorphism(format!(
                "G^{{{src},{tgt}}}: G is only defined between distinct objects"
            ))),
            _ => Ok(Morphism { kind, src, tgt }),
        }
    }

    /// The identity `E^{i,i}`.
    pub fn identity(i: u8) -> Self {
        Morphism { kind: MorKind::E, src: i, tgt: i }
    }

    /// `F^{i,j}` (also `F^{i,i}` when `i == j`).
    pub fn f(src: u8, tgt: u8) -> Self {
        Morphism { kind: MorKind::F, src, tgt }
    }

    /// `G^{i,j}`, `i != j`.
    pub fn g(src: u8, tgt: u8) -> Self {
        assert_ne!(src, tgt, "G^{{i,i}} does not exist");
        Morphism { kind: MorKind::G, src, tgt }
    }

    pub fn kind(&self) -> MorKind {
        self.kind
    }

    pub fn src(&self) -> u8 {
        self.src
    }

    pub fn tgt(&self) -> u8 {
        self.tgt
    }

    pub fn is_identity(&self) -> bool {
        self.kind == MorKind::E
    }

    /// Both morphisms of the hom-set `i -> j`, slot order `[E,F]` on the
    /// diagonal and `[F,G]` off it.
    pub fn hom(src: u8, tgt: u8) -> [Morphism; 2] {
        if src == tgt {
            [Morphism::identity(src), Morphism::f(src, tgt)]
        } else {
            [Morphism::f(src, tgt), Morphism::g(src, tgt)]
        }
    }

    /// All `2n^2` morphisms of the category on `1..=n`, grouped by hom-set
    /// in lexicographic `(src, tgt)` order.
    pub fn all(n: usize) -> Vec<Morphism> {
        let mut out = Vec::with_capacity(2 * n * n);
        for i in 1..=n as u8 {
            for j in 1..=n as u8 {
                out.extend(Morphism::hom(i, j));
            }
        }
        out
    }

    /// Relabels source and target through an object permutation, keeping
    /// the kind letter.
    pub fn relabel(&self, sigma: &Perm) -> Morphism {
        Morphism {
            kind: self.kind,
            src: sigma.apply(self.src),
            tgt: sigma.apply(self.tgt),
        }
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{{{},{}}}", self.kind, self.src, self.tgt)
    }
}

/// Number of ordered triples with pairwise distinct entries from `1..=n`.
pub fn distinct_triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2)
    }
}

fn check_range(n: usize, v: u8) -> Result<()> {
    if v == 0 || v as usize > n {
        Err(Error::ObjectOutOfRange { value: v as usize, n })
    } else {
        Ok(())
    }
}

/// Rank of a pairwise-distinct triple `(i, j, k)` in the lexicographic
/// enumeration of all `n(n-1)(n-2)` such triples. This order is part of
/// the file-format contract and must not change.
pub fn triple_rank(n: usize, i: u8, j: u8, k: u8) -> Result<usize> {
    check_range(n, i)?;
    check_range(n, j)?;
    check_range(n, k)?;
    if i == j || j == k || i == k {
        return Err(Error::NotDistinct(i, j, k));
    }
    // Count predecessors coordinate by coordinate.
    let before_i = (i as usize - 1) * (n - 1) * (n - 2);
    let before_j = (1..j).filter(|&x| x != i).count() * (n - 2);
    let before_k = (1..k).filter(|&x| x != i && x != j).count();
    Ok(before_i + before_j + before_k)
}

/// Inverse of [`triple_rank`].
pub fn triple_unrank(n: usize, rank: usize) -> Result<(u8, u8, u8)> {
    let count = distinct_triple_count(n);
    if rank >= count {
        return Err(Error::RankOutOfRange { rank, n, count });
    }
    let block = (n - 1) * (n - 2);
    let i = (rank / block + 1) as u8;
    let rem = rank % block;
    let j = nth_excluding(n, rem / (n - 2), &[i]);
    let k = nth_excluding(n, rem % (n - 2), &[i, j]);
    Ok((i, j, k))
}

fn nth_excluding(n: usize, pos: usize, skip: &[u8]) -> u8 {
    (1..=n as u8)
        .filter(|v| !skip.contains(v))
        .nth(pos)
        .expect("position within range by construction")
}

/// All pairwise-distinct triples over `1..=n` in lexicographic (= rank)
/// order.
pub fn distinct_triples(n: usize) -> impl Iterator<Item = (u8, u8, u8)> {
    let n = n as u8;
    (1..=n).flat_map(move |i| {
        (1..=n).filter(move |&j| j != i).flat_map(move |j| {
            (1..=n)
                .filter(move |&k| k != i && k != j)
                .map(move |k| (i, j, k))
        })
    })
}

/// A total boolean function on ordered object triples that is zero on
/// every triple with a repeated index. Only the values on distinct
/// triples are stored, as a bitmask in rank order; the degenerate-zero
/// rule is baked into the representation rather than validated.
///
/// Immutable after construction; cheap to copy.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlphaFunction {
    n: u8,
    bits: u128,
}

impl AlphaFunction {
    /// The all-zero function on `1..=n`. Errors when `n(n-1)(n-2)` exceeds
    /// the 128-bit capacity (`n > 6`).
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ObjectOutOfRange { value: 0, n });
        }
        if n > MAX_ALPHA_N {
            return Err(Error::AlphaTooLarge { n });
        }
        Ok(AlphaFunction { n: n as u8, bits: 0 })
    }

    /// Builds from the set of triples mapped to 1.
    pub fn from_ones(n: usize, ones: &[(u8, u8, u8)]) -> Result<Self> {
        let mut alpha = AlphaFunction::zero(n)?;
        for &(i, j, k) in ones {
            alpha.bits |= 1u128 << triple_rank(n, i, j, k)?;
        }
        Ok(alpha)
    }

    /// Builds from a raw support mask over triple ranks.
    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        let mut alpha = AlphaFunction::zero(n)?;
        let count = distinct_triple_count(n);
        if count < 128 && bits >> count != 0 {
            return Err(Error::RankOutOfRange {
                rank: 127 - bits.leading_zeros() as usize,
                n,
                count,
            });
        }
        alpha.bits = bits;
        Ok(alpha)
    }

    /// Parses a `'0'/'1'` string in rank order, e.g. `"010010"` for n=3.
    pub fn from_bits_str(n: usize, s: &str) -> Result<Self> {
        let count = distinct_triple_count(n);
        if s.len() != count {
            return Err(Error::AlphaFile {
                field: "bits",
                message: format!("expected {count} characters for n={n}, got {}", s.len()),
            });
        }
        let mut bits = 0u128;
        for (rank, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1u128 << rank,
                '0' => {}
                other => {
                    return Err(Error::AlphaFile {
                        field: "bits",
                        message: format!("invalid character {other:?} at position {rank}"),
                    })
                }
            }
        }
        AlphaFunction::from_bits(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Evaluates the function. Returns the stored bit on pairwise-distinct
    /// triples and 0 on every other triple.
    ///
    /// Panics if an index is outside `1..=n`.
    pub fn eval(&self, i: u8, j: u8, k: u8) -> bool {
        assert!(
            i >= 1 && j >= 1 && k >= 1 && i <= self.n && j <= self.n && k <= self.n,
            "object index out of range 1..={}",
            self.n
        );
        if i == j || j == k || i == k {
            return false;
        }
        let rank = triple_rank(self.n as usize, i, j, k).expect("distinct and in range");
        self.bit(rank)
    }

    /// The stored bit at a triple rank.
    pub fn bit(&self, rank: usize) -> bool {
        debug_assert!(rank < distinct_triple_count(self.n as usize));
        self.bits >> rank & 1 == 1
    }

    /// The raw support mask (bit r = value on the rank-r triple).
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The triples mapped to 1, in rank order.
    pub fn ones(&self) -> Vec<(u8, u8, u8)> {
        distinct_triples(self.n as usize)
            .enumerate()
            .filter(|&(rank, _)| self.bit(rank))
            .map(|(_, t)| t)
            .collect()
    }

    pub fn support_size(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Serialization as a `'0'/'1'` string in rank order.
    pub fn bits_string(&self) -> String {
        (0..distinct_triple_count(self.n as usize))
            .map(|r| if self.bit(r) { '1' } else { '0' })
            .collect()
    }

    /// Key whose integer order equals lexicographic order of
    /// [`Self::bits_string`]. Used to pick canonical orbit representatives.
    pub fn lex_key(&self) -> u128 {
        let count = distinct_triple_count(self.n as usize);
        if count == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (128 - count)
        }
    }
}

impl fmt::Debug for AlphaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha(n={}; {})", self.n, self.bits_string())
    }
}

/// A permutation of the objects `1..=n`, stored as the image list
/// `sigma(1), ..., sigma(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { image: (1..=n as u8).collect() }
    }

    /// Validates that `image` is a bijection on `1..=n`.
    pub fn from_images(image: Vec<u8>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidPermutation(image));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.image[i as usize - 1]
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0u8; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize - 1] = i as u8 + 1;
        }
        Perm { image }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            image: (1..=self.image.len() as u8)
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    /// All `n!` permutations, identity first, in lexicographic image order.
    pub fn all(n: usize) -> Vec<Perm> {
        use itertools::Itertools;
        (1..=n as u8)
            .permutations(n)
            .map(|image| Perm { image })
            .collect()
    }
}
