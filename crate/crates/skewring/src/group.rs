//! Group elements for the two group kinds the ring construction needs:
//! finite groups given by multiplication tables and free groups on a finite
//! edge alphabet given by reduced words.
//!
//! Both kinds are driven through one interface (identity, multiply,
//! invert), so the ring construction is agnostic to which one it is
//! handed.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// A cyclic group of order zero was requested.
    EmptyGroup,
    /// The multiplication table is not square or has out-of-range entries.
    MalformedTable,
    /// The table fails associativity at the given triple.
    NotAssociative(usize, usize, usize),
    /// No two-sided identity exists.
    NoIdentity,
    /// The given element has no two-sided inverse.
    NoInverse(usize),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::EmptyGroup => write!(f, "a group must have at least one element"),
            GroupError::MalformedTable => write!(f, "multiplication table is malformed"),
            GroupError::NotAssociative(s, t, u) => {
                write!(f, "table is not associative at ({s}, {t}, {u})")
            }
            GroupError::NoIdentity => write!(f, "table has no two-sided identity"),
            GroupError::NoInverse(t) => write!(f, "element {t} has no two-sided inverse"),
        }
    }
}

impl std::error::Error for GroupError {}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table exhaustively: associativity on all
    /// triples, a two-sided identity, and a two-sided inverse for every
    /// element.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if mul.iter().any(|row| row.len() != n || row.iter().any(|&e| e >= n)) {
            return Err(GroupError::MalformedTable);
        }
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    if mul[mul[s][t]][u] != mul[s][mul[t][u]] {
                        return Err(GroupError::NotAssociative(s, t, u));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|t| mul[e][t] == t && mul[t][e] == t))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![0; n];
        for t in 0..n {
            inv[t] = (0..n)
                .find(|&s| mul[t][s] == identity && mul[s][t] == identity)
                .ok_or(GroupError::NoInverse(t))?;
        }
        Ok(FiniteGroup { mul, identity, inv })
    }

    /// The cyclic group Z/nZ with generator index 1.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(mul)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn multiply(&self, s: usize, t: usize) -> usize {
        self.mul[s][t]
    }

    pub fn invert(&self, t: usize) -> usize {
        self.inv[t]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }
}

/// One letter of a free-group word: an alphabet symbol or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub symbol: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: u32) -> Self {
        Letter { symbol, inverse: false }
    }

    pub fn flipped(self) -> Self {
        Letter { symbol: self.symbol, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

/// A reduced word in the free group on an alphabet of symbols. Words are
/// canonicalized eagerly, so equality is structural and the empty word is
/// the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    pub fn generator(symbol: u32) -> Self {
        FreeWord { letters: vec![Letter::new(symbol)] }
    }

    /// Builds a word from letters, cancelling adjacent inverse pairs.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut reduced: Vec<Letter> = Vec::new();
        for l in letters {
            match reduced.last() {
                Some(&last) if last.cancels(l) => {
                    reduced.pop();
                }
                _ => reduced.push(l),
            }
        }
        FreeWord { letters: reduced }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.flipped()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// A word made of the plain (non-inverse) symbols of a path.
    pub fn from_symbols(symbols: impl IntoIterator<Item = u32>) -> Self {
        FreeWord::from_letters(symbols.into_iter().map(Letter::new))
    }
}

/// An element of either group kind.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupElem {
    Table(usize),
    Word(FreeWord),
}

/// A group context: either a validated finite table group or the free
/// group on `rank` symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Group {
    Table(FiniteGroup),
    Free { rank: usize },
}

impl Group {
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        Ok(Group::Table(FiniteGroup::cyclic(n)?))
    }

    pub fn identity(&self) -> GroupElem {
        match self {
            Group::Table(g) => GroupElem::Table(g.identity()),
            Group::Free { .. } => GroupElem::Word(FreeWord::identity()),
        }
    }

    pub fn multiply(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        match (self, a, b) {
            (Group::Table(g), GroupElem::Table(s), GroupElem::Table(t)) => {
                GroupElem::Table(g.multiply(*s, *t))
            }
            (Group::Free { .. }, GroupElem::Word(u), GroupElem::Word(v)) => {
                GroupElem::Word(u.concat(v))
            }
            _ => panic!("group element kind does not match group"),
        }
    }

    pub fn invert(&self, a: &GroupElem) -> GroupElem {
        match (self, a) {
            (Group::Table(g), GroupElem::Table(t)) => GroupElem::Table(g.invert(*t)),
            (Group::Free { .. }, GroupElem::Word(w)) => GroupElem::Word(w.inverse()),
            _ => panic!("group element kind does not match group"),
        }
    }

    pub fn is_identity(&self, a: &GroupElem) -> bool {
        *a == self.identity()
    }

    /// All elements, for finite groups only.
    pub fn elements(&self) -> Option<Vec<GroupElem>> {
        match self {
            Group::Table(g) => Some((0..g.order()).map(GroupElem::Table).collect()),
            Group::Free { .. } => None,
        }
    }
}

/// Renders a group element with the given symbol names (used for free-group
/// words over a graph's edge alphabet).
pub fn elem_label(elem: &GroupElem, symbols: Option<&[String]>) -> String {
    match elem {
        GroupElem::Table(t) => format!("g{t}"),
        GroupElem::Word(w) => {
            if w.is_identity() {
                return "0".to_string();
            }
            w.letters()
                .iter()
                .map(|l| {
                    let name = match symbols {
                        Some(names) => names[l.symbol as usize].clone(),
                        None => format!("x{}", l.symbol),
                    };
                    if l.inverse { format!("{name}^-1") } else { name }
                })
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_trivial_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.multiply(0, 0), 0);
    }

    #[test]
    fn cyclic_order_four() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(g.multiply(1, 3), 0);
        assert_eq!(g.invert(1), 3);
        assert_eq!(g.invert(2), 2);
    }

    #[test]
    fn cyclic_order_two() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(g.multiply(1, 1), 0);
    }

    #[test]
    fn cyclic_zero_rejected() {
        assert_eq!(FiniteGroup::cyclic(0), Err(GroupError::EmptyGroup));
    }

    #[test]
    fn bad_tables_rejected() {
        // Non-associative: a "multiplication" picking the left operand only
        // when it is 0.
        let t = vec![vec![0, 1], vec![0, 0]];
        assert!(matches!(FiniteGroup::from_table(t), Err(GroupError::NotAssociative(..)) | Err(GroupError::NoIdentity)));
        // Out-of-range entry.
        let t = vec![vec![0, 1], vec![1, 7]];
        assert_eq!(FiniteGroup::from_table(t), Err(GroupError::MalformedTable));
        // Associative but no identity: constant map.
        let t = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(FiniteGroup::from_table(t), Err(GroupError::NoIdentity));
    }

    #[test]
    fn table_axioms_hold_after_validation() {
        for n in 1..=6 {
            let g = FiniteGroup::cyclic(n).unwrap();
            let e = g.identity();
            for s in 0..n {
                assert_eq!(g.multiply(e, s), s);
                assert_eq!(g.multiply(s, e), s);
                assert_eq!(g.multiply(s, g.invert(s)), e);
                for t in 0..n {
                    for u in 0..n {
                        assert_eq!(g.multiply(g.multiply(s, t), u), g.multiply(s, g.multiply(t, u)));
                    }
                }
            }
        }
    }

    fn word(letters: &[(u32, bool)]) -> FreeWord {
        FreeWord::from_letters(letters.iter().map(|&(s, i)| Letter { symbol: s, inverse: i }))
    }

    #[test]
    fn word_inverse_cancellation() {
        let a = word(&[(0, false)]);
        let ainv = word(&[(0, true)]);
        assert!(a.concat(&ainv).is_identity());
    }

    #[test]
    fn word_partial_cancellation() {
        // (a b⁻¹)·(b) = a
        let left = word(&[(0, false), (1, true)]);
        let right = word(&[(1, false)]);
        assert_eq!(left.concat(&right), word(&[(0, false)]));
    }

    #[test]
    fn word_identity_neutral() {
        let w = word(&[(2, false), (0, true), (1, false)]);
        assert_eq!(FreeWord::identity().concat(&w), w);
        assert_eq!(w.concat(&FreeWord::identity()), w);
    }

    fn scramble(state: &mut u64) -> u64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn random_word(state: &mut u64) -> FreeWord {
        let len = (scramble(state) % 6) as usize;
        FreeWord::from_letters((0..len).map(|_| Letter {
            symbol: (scramble(state) % 3) as u32,
            inverse: scramble(state) % 2 == 0,
        }))
    }

    #[test]
    fn word_multiplication_associative_on_random_triples() {
        let mut state = 99u64;
        for _ in 0..300 {
            let (u, v, w) = (random_word(&mut state), random_word(&mut state), random_word(&mut state));
            assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
        }
    }

    #[test]
    fn word_inverse_properties() {
        let mut state = 5u64;
        for _ in 0..200 {
            let w = random_word(&mut state);
            let inv = w.inverse();
            let expected: Vec<Letter> = w.letters().iter().rev().map(|l| l.flipped()).collect();
            assert_eq!(inv.letters(), &expected[..]);
            assert!(w.concat(&inv).is_identity());
            assert!(inv.concat(&w).is_identity());
        }
    }

    #[test]
    fn reduction_is_idempotent() {
        let mut state = 17u64;
        for _ in 0..200 {
            let w = random_word(&mut state);
            let again = FreeWord::from_letters(w.letters().iter().copied());
            assert_eq!(w, again);
        }
    }

    #[test]
    fn group_abstraction_dispatch() {
        let g = Group::cyclic(4).unwrap();
        let a = GroupElem::Table(1);
        let b = GroupElem::Table(3);
        assert_eq!(g.multiply(&a, &b), g.identity());
        assert_eq!(g.invert(&a), GroupElem::Table(3));

        let f = Group::Free { rank: 2 };
        let u = GroupElem::Word(FreeWord::generator(0));
        assert_eq!(f.multiply(&u, &f.invert(&u)), f.identity());
    }
}
