//! Letters, words and finite formal sums with [`Scalar`] coefficients.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A basis letter of a braided vector space, identified by its index.
///
/// Fixtures use the index as the algebraic label: `e_i` in the diagonal
/// algebras, `t^i` in the polynomial algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub u32);

impl Letter {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A tensor word `a₁⊗…⊗aₙ`; the empty word is the unit of `T(V)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        Word(ids.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn ids(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.0).collect()
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn append(&self, l: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn split(&self, k: usize) -> (Word, Word) {
        (self.slice(0..k), self.slice(k..self.len()))
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("e{}", l.0)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// A finite formal sum `Σ c_k k` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// Elements of `V`.
pub type LinearV = Combination<Letter>;
/// Elements of `V⊗V`.
pub type VectorInV2 = Combination<(Letter, Letter)>;
/// Elements of `T(V)`.
pub type Element = Combination<Word>;
/// Elements of `T(V) ⊗̲ T(V)`.
pub type Element2 = Combination<(Word, Word)>;
/// Elements of `T(V) ⊗̲ T(V) ⊗̲ T(V)`.
pub type Element3 = Combination<(Word, Word, Word)>;

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1·k`.
    pub fn basis(k: K) -> Self {
        Self::term(k, Scalar::one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            let coeff = if c.is_one() { v.clone() } else { v * c };
            self.add_term(k.clone(), coeff);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Linear extension of `f` on basis keys.
    pub fn map_linear<L, F>(&self, mut f: F) -> Combination<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Combination<L>,
    {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible linear extension of `f` on basis keys.
    pub fn try_map_linear<L, F, E>(&self, mut f: F) -> Result<Combination<L>, E>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Result<Combination<L>, E>,
    {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Relabels keys; colliding keys are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> IntoIterator for Combination<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> AddAssign for Combination<K> {
    fn add_assign(&mut self, rhs: Combination<K>) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;

    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;

    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        self.scale(&Scalar::from(-1))
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;

    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from(-1));
        out
    }
}

impl<K: Ord + Clone> Mul<&Scalar> for &Combination<K> {
    type Output = Combination<K>;

    fn mul(self, rhs: &Scalar) -> Combination<K> {
        self.scale(rhs)
    }
}

impl<K: Ord + Clone> std::iter::Sum for Combination<K> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c}) {k:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Element {
    /// The element `1 ∈ 𝕂 ⊂ T(V)`.
    pub fn one() -> Self {
        Element::basis(Word::empty())
    }

    pub fn word(ids: &[u32]) -> Self {
        Element::basis(Word::from_ids(ids))
    }

    /// `Some(n)` when every term has length `n`; `None` for zero.
    pub fn degree(&self) -> crate::error::Result<Option<usize>> {
        let mut it = self.keys().map(|w| w.len());
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(crate::error::Error::NotHomogeneous)
        }
    }

    /// Splits into homogeneous components, indexed by degree.
    pub fn components(&self) -> BTreeMap<usize, Element> {
        let mut out: BTreeMap<usize, Element> = BTreeMap::new();
        for (w, c) in self {
            out.entry(w.len()).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (u, a) in self {
            for (v, b) in other {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Deconcatenation `δ(a₁…aₙ) = Σ_k (a₁…a_k) ⊗̲ (a_{k+1}…aₙ)`.
    pub fn deconcat(&self) -> Element2 {
        self.map_linear(|w| (0..=w.len()).map(|k| (w.split(k), Scalar::one())).collect())
    }
}

impl Element2 {
    /// `x ⊗̲ y` for elements of `T(V)`.
    pub fn tensor(x: &Element, y: &Element) -> Element2 {
        let mut out = Element2::zero();
        for (u, a) in x {
            for (v, b) in y {
                out.add_term((u.clone(), v.clone()), a * b);
            }
        }
        out
    }
}
