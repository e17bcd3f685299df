//! Composition of morphisms, full composition tables, and an exhaustive
//! category-axiom oracle.
//!
//! [`compose`] encodes the forced part of the multiplication: identities
//! are units, `F` absorbs everything, and the only free choice — what a
//! `G . G` composite across three distinct objects is — is read off the
//! alpha function. [`check_axioms`] deliberately assumes none of that: it
//! re-checks units, associativity and reducedness by brute force over any
//! [`Composition`], so it can certify tables built here as well as raw
//! two-object tables from [`crate::bruteforce`].

use crate::model::{AlphaFunction, MorKind, Morphism};
use crate::{Error, Result};

/// Composes `g . f` for `f: i -> j`, `g: j -> k`.
///
/// Errors when the pair is not composable (`tgt(f) != src(g)`).
pub fn compose(alpha: &AlphaFunction, g: Morphism, f: Morphism) -> Result<Morphism> {
    if f.tgt() != g.src() {
        return Err(Error::NotComposable { g, f });
    }
    Ok(compose_unchecked(alpha, g, f))
}

/// [`compose`] without the composability check; callers guarantee
/// `tgt(f) == src(g)`.
pub fn compose_unchecked(alpha: &AlphaFunction, g: Morphism, f: Morphism) -> Morphism {
    debug_assert_eq!(f.tgt(), g.src());
    // Units first, then F-absorption, then the alpha-driven G.G case.
    if g.kind() == MorKind::E {
        return f;
    }
    if f.kind() == MorKind::E {
        return g;
    }
    let (i, j, k) = (f.src(), f.tgt(), g.tgt());
    if g.kind() == MorKind::F || f.kind() == MorKind::F {
        return Morphism::f(i, k);
    }
    // Both G, so i != j and j != k. alpha is zero whenever i == k, which
    // keeps the G result off the diagonal.
    if alpha.eval(i, j, k) {
        Morphism::g(i, k)
    } else {
        Morphism::f(i, k)
    }
}

/// Anything that composes the named morphisms of a 2-per-hom-set category
/// on `1..=n`. Implementations may assume the pair is composable.
pub trait Composition {
    fn n(&self) -> usize;
    fn compose(&self, g: Morphism, f: Morphism) -> Morphism;
}

/// Tabulated composition for the category determined by an alpha function.
///
/// The table stores a result for exactly the composable pairs, indexed by
/// a dense morphism numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryTable {
    n: usize,
    /// Morphisms in dense-index order.
    morphisms: Vec<Morphism>,
    /// `entries[index(g) * 2n^2 + index(f)]` is the dense index of
    /// `g . f`, or `NO_ENTRY` when the pair is not composable.
    entries: Vec<u8>,
}

const NO_ENTRY: u8 = u8::MAX;

/// Dense index of a morphism: hom-sets in `(src, tgt)` order, two slots
/// each.
pub(crate) fn morphism_index(n: usize, m: Morphism) -> usize {
    let slot = match (m.kind(), m.src() == m.tgt()) {
        (MorKind::E, true) | (MorKind::F, false) => 0,
        (MorKind::F, true) | (MorKind::G, false) => 1,
        _ => unreachable!("invalid morphism {m}"),
    };
    ((m.src() as usize - 1) * n + (m.tgt() as usize - 1)) * 2 + slot
}

impl CategoryTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The composite `g . f`, or `None` when the pair is not composable.
    pub fn get(&self, g: Morphism, f: Morphism) -> Option<Morphism> {
        if f.tgt() != g.src() {
            return None;
        }
        let m = 2 * self.n * self.n;
        let id = self.entries[morphism_index(self.n, g) * m + morphism_index(self.n, f)];
        Some(self.morphisms[id as usize])
    }

    /// All composable pairs `(g, f)` with their composite, in dense index
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (Morphism, Morphism, Morphism)> + '_ {
        self.morphisms.iter().flat_map(move |&g| {
            self.morphisms
                .iter()
                .filter(move |f| f.tgt() == g.src())
                .map(move |&f| (g, f, self.get(g, f).expect("composable")))
        })
    }
}

impl Composition for CategoryTable {
    fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn compose(&self, g: Morphism, f: Morphism) -> Morphism {
        debug_assert_eq!(f.tgt(), g.src());
        let m = 2 * self.n * self.n;
        let id = self.entries[morphism_index(self.n, g) * m + morphism_index(self.n, f)];
        debug_assert_ne!(id, NO_ENTRY);
        self.morphisms[id as usize]
    }
}

/// Tabulates [`compose`] over every composable pair of the category
/// determined by `alpha`.
pub fn build_table(alpha: &AlphaFunction) -> CategoryTable {
    let n = alpha.n();
    let m = 2 * n * n;
    let morphisms = Morphism::all(n);
    let mut entries = vec![NO_ENTRY; m * m];
    for &g in &morphisms {
        for &f in &morphisms {
            if f.tgt() == g.src() {
                let gf = compose_unchecked(alpha, g, f);
                entries[morphism_index(n, g) * m + morphism_index(n, f)] =
                    morphism_index(n, gf) as u8;
            }
        }
    }
    CategoryTable { n, morphisms, entries }
}

/// One concrete axiom failure, with enough context to replay it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `E` failed to act as a unit on `f`.
    Identity { f: Morphism },
    /// `(h . g) . f != h . (g . f)`.
    Associativity { h: Morphism, g: Morphism, f: Morphism },
    /// Objects `a != b` are isomorphic, so the category is not reduced.
    Isomorphic { a: u8, b: u8 },
}

/// Outcome of the exhaustive axiom scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub identity_ok: bool,
    pub associative_ok: bool,
    pub reduced_ok: bool,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.identity_ok && self.associative_ok && self.reduced_ok
    }
}

/// Checks units, associativity and reducedness by exhausting all
/// composable triples (at most `8n^4`) and all cross hom-set pairs.
/// Collects every violation found.
pub fn check_axioms<C: Composition>(cat: &C) -> AxiomReport {
    let n = cat.n();
    let mors = Morphism::all(n);
    let mut violations = Vec::new();

    let mut identity_ok = true;
    for &f in &mors {
        let left = cat.compose(Morphism::identity(f.tgt()), f);
        let right = cat.compose(f, Morphism::identity(f.src()));
        if left != f || right != f {
            identity_ok = false;
            violations.push(AxiomViolation::Identity { f });
        }
    }

    let mut associative_ok = true;
    for_composable_triples(n, |h, g, f| {
        if cat.compose(cat.compose(h, g), f) != cat.compose(h, cat.compose(g, f)) {
            associative_ok = false;
            violations.push(AxiomViolation::Associativity { h, g, f });
        }
    });

    let mut reduced_ok = true;
    for a in 1..=n as u8 {
        for b in a + 1..=n as u8 {
            let iso = Morphism::hom(a, b).into_iter().any(|f| {
                Morphism::hom(b, a).into_iter().any(|g| {
                    cat.compose(g, f) == Morphism::identity(a)
                        && cat.compose(f, g) == Morphism::identity(b)
                })
            });
            if iso {
                reduced_ok = false;
                violations.push(AxiomViolation::Isomorphic { a, b });
            }
        }
    }

    AxiomReport { identity_ok, associative_ok, reduced_ok, violations }
}

/// Walks the `8n^4` composable triples `(h, g, f)` along all object
/// chains `i -> j -> k -> l`.
fn for_composable_triples(n: usize, mut visit: impl FnMut(Morphism, Morphism, Morphism)) {
    let n = n as u8;
    for i in 1..=n {
        for j in 1..=n {
            for f in Morphism::hom(i, j) {
                for k in 1..=n {
                    for g in Morphism::hom(j, k) {
                        for l in 1..=n {
                            for h in Morphism::hom(k, l) {
                                visit(h, g, f);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Associativity only, stopping at the first violation. This is the hot
/// half of the oracle: units and reducedness never fail for alpha-built
/// tables (the full report confirms that), associativity is what alpha
/// validity has to match.
pub fn is_associative<C: Composition>(cat: &C) -> bool {
    let n = cat.n() as u8;
    for i in 1..=n {
        for j in 1..=n {
            for f in Morphism::hom(i, j) {
                for k in 1..=n {
                    for g in Morphism::hom(j, k) {
                        let gf = cat.compose(g, f);
                        for l in 1..=n {
                            for h in Morphism::hom(k, l) {
                                if cat.compose(cat.compose(h, g), f) != cat.compose(h, gf) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}
