//! Braided vector spaces, braided algebras and braided coalgebras.
//!
//! Structures are plain data plus rules. Axioms are verified by explicit
//! `check_*` functions returning [`Report`]s, so invalid structures can be
//! built on purpose as negative controls.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::linear::{Element, Letter, LinearV, VectorInV2};
use crate::memo::Memo;
use crate::report::Report;
use crate::scalar::Scalar;

/// Basis of a braided vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LetterSet {
    Finite(BTreeSet<Letter>),
    /// Every index `≥ min`; represented lazily.
    From { min: u32 },
}

impl LetterSet {
    pub fn range(lo: u32, hi: u32) -> Self {
        LetterSet::Finite((lo..=hi).map(Letter).collect())
    }

    pub fn contains(&self, l: Letter) -> bool {
        match self {
            LetterSet::Finite(s) => s.contains(&l),
            LetterSet::From { min } => l.0 >= *min,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LetterSet::Finite(_))
    }

    /// All letters of a finite set, or those with index `≤ bound`.
    pub fn sample(&self, bound: u32) -> Vec<Letter> {
        match self {
            LetterSet::Finite(s) => s.iter().copied().collect(),
            LetterSet::From { min } => (*min..=bound.max(*min)).map(Letter).collect(),
        }
    }

    pub fn finite(&self) -> Result<Vec<Letter>> {
        match self {
            LetterSet::Finite(s) => Ok(s.iter().copied().collect()),
            LetterSet::From { .. } => Err(Error::InfiniteCarrier),
        }
    }
}

/// The scalars `q_{ij}` of a diagonal braiding `σ(e_i⊗e_j) = q_{ij} e_j⊗e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalQ {
    /// `q_{ij} = base^{ij}`.
    PowerOfProduct { base: Scalar },
    Table(BTreeMap<(Letter, Letter), Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Braiding {
    Flip,
    Diagonal(DiagonalQ),
    /// `σ(x⊗y) = base^{|x||y|} y⊗x`.
    GradedFlip {
        base: Scalar,
        degrees: BTreeMap<Letter, u32>,
    },
    /// Sparse tables for `σ` and `σ⁻¹`; missing pairs are unknown letters.
    General {
        forward: BTreeMap<(Letter, Letter), VectorInV2>,
        backward: BTreeMap<(Letter, Letter), VectorInV2>,
    },
}

impl Braiding {
    pub fn diagonal_power(base: Scalar) -> Self {
        Braiding::Diagonal(DiagonalQ::PowerOfProduct { base })
    }

    /// `Some(c)` when `σ(a⊗b) = c·b⊗a`.
    pub fn swap_scalar(&self, a: Letter, b: Letter) -> Result<Option<Scalar>> {
        Ok(match self {
            Braiding::Flip => Some(Scalar::one()),
            Braiding::Diagonal(DiagonalQ::PowerOfProduct { base }) => {
                Some(base.pow(a.0 as i64 * b.0 as i64)?)
            }
            Braiding::Diagonal(DiagonalQ::Table(t)) => Some(
                t.get(&(a, b))
                    .cloned()
                    .ok_or(Error::UnknownLetter(if t.keys().any(|k| k.0 == a) { b.0 } else { a.0 }))?,
            ),
            Braiding::GradedFlip { base, degrees } => {
                let da = *degrees.get(&a).ok_or(Error::UnknownLetter(a.0))?;
                let db = *degrees.get(&b).ok_or(Error::UnknownLetter(b.0))?;
                Some(base.pow(da as i64 * db as i64)?)
            }
            Braiding::General { .. } => None,
        })
    }

    /// `σ(a⊗b)`.
    pub fn apply_pair(&self, a: Letter, b: Letter) -> Result<VectorInV2> {
        match self {
            Braiding::General { forward, .. } => forward
                .get(&(a, b))
                .cloned()
                .ok_or_else(|| Error::UnknownLetter(unknown_of(forward, a, b))),
            _ => {
                let c = self.swap_scalar(a, b)?.expect("scalar braiding");
                Ok(VectorInV2::term((b, a), c))
            }
        }
    }

    /// `σ⁻¹(a⊗b)`.
    pub fn apply_inverse_pair(&self, a: Letter, b: Letter) -> Result<VectorInV2> {
        match self {
            Braiding::General { backward, .. } => backward
                .get(&(a, b))
                .cloned()
                .ok_or_else(|| Error::UnknownLetter(unknown_of(backward, a, b))),
            // σ(b⊗a) = c a⊗b, so σ⁻¹(a⊗b) = c⁻¹ b⊗a
            _ => {
                let c = self.swap_scalar(b, a)?.expect("scalar braiding");
                Ok(VectorInV2::term((b, a), c.inv()?))
            }
        }
    }

    pub fn apply(&self, v: &VectorInV2) -> Result<VectorInV2> {
        v.try_map_linear(|&(a, b)| self.apply_pair(a, b))
    }

    pub fn apply_inverse(&self, v: &VectorInV2) -> Result<VectorInV2> {
        v.try_map_linear(|&(a, b)| self.apply_inverse_pair(a, b))
    }

    /// The braiding as an explicit table on `letters × letters`.
    pub fn to_general(&self, letters: &[Letter]) -> Result<Braiding> {
        let mut forward = BTreeMap::new();
        let mut backward = BTreeMap::new();
        for &a in letters {
            for &b in letters {
                forward.insert((a, b), self.apply_pair(a, b)?);
                backward.insert((a, b), self.apply_inverse_pair(a, b)?);
            }
        }
        Ok(Braiding::General { forward, backward })
    }

    /// The adjoint braiding for the dual-basis pairing: the transposed
    /// matrix on `letters × letters`.
    pub fn transpose(&self, letters: &[Letter]) -> Result<Braiding> {
        let mut forward: BTreeMap<(Letter, Letter), VectorInV2> = BTreeMap::new();
        let mut backward: BTreeMap<(Letter, Letter), VectorInV2> = BTreeMap::new();
        for &a in letters {
            for &b in letters {
                forward.entry((a, b)).or_default();
                backward.entry((a, b)).or_default();
            }
        }
        for &i in letters {
            for &j in letters {
                for (&(a, b), c) in &self.apply_pair(i, j)? {
                    forward
                        .get_mut(&(a, b))
                        .ok_or(Error::UnknownLetter(a.0))?
                        .add_term((i, j), c.clone());
                }
                for (&(a, b), c) in &self.apply_inverse_pair(i, j)? {
                    backward
                        .get_mut(&(a, b))
                        .ok_or(Error::UnknownLetter(a.0))?
                        .add_term((i, j), c.clone());
                }
            }
        }
        Ok(Braiding::General { forward, backward })
    }

    /// Short human-readable kind name.
    pub fn kind(&self) -> &'static str {
        match self {
            Braiding::Flip => "flip",
            Braiding::Diagonal(_) => "diagonal",
            Braiding::GradedFlip { .. } => "graded-flip",
            Braiding::General { .. } => "general",
        }
    }
}

fn unknown_of(table: &BTreeMap<(Letter, Letter), VectorInV2>, a: Letter, b: Letter) -> u32 {
    if table.keys().any(|k| k.0 == a) {
        b.0
    } else {
        a.0
    }
}

/// Multiplication `m: V⊗V → V` given on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multiplication {
    Zero,
    /// `e_i e_j = e_{i+j}`, or `0` when `i+j > max`.
    IndexSum { max: Option<u32> },
    /// Missing pairs multiply to zero.
    Table(BTreeMap<(Letter, Letter), LinearV>),
}

impl Multiplication {
    pub fn apply_pair(&self, a: Letter, b: Letter) -> LinearV {
        match self {
            Multiplication::Zero => LinearV::zero(),
            Multiplication::IndexSum { max } => {
                let s = a.0 + b.0;
                if max.is_some_and(|m| s > m) {
                    LinearV::zero()
                } else {
                    LinearV::basis(Letter(s))
                }
            }
            Multiplication::Table(t) => t.get(&(a, b)).cloned().unwrap_or_default(),
        }
    }
}

/// A braided vector space with a memo of braid lifts `T^σ_w`.
pub struct BraidedSpace {
    pub letters: LetterSet,
    pub braiding: Braiding,
    pub(crate) lift_cache: Memo<(Permutation, crate::linear::Word), Element>,
}

impl BraidedSpace {
    pub fn new(letters: LetterSet, braiding: Braiding) -> Self {
        BraidedSpace {
            letters,
            braiding,
            lift_cache: Memo::new(),
        }
    }

    pub fn check_letter(&self, l: Letter) -> Result<()> {
        if self.letters.contains(l) {
            Ok(())
        } else {
            Err(Error::UnknownLetter(l.0))
        }
    }

    /// Braiding with letter-membership checks.
    pub fn braid_pair(&self, a: Letter, b: Letter) -> Result<VectorInV2> {
        self.check_letter(a)?;
        self.check_letter(b)?;
        self.braiding.apply_pair(a, b)
    }

    /// Scalar `c` with `σ(a⊗b) = c b⊗a`, if the braiding is of that kind.
    pub fn swap_scalar(&self, a: Letter, b: Letter) -> Result<Option<Scalar>> {
        self.check_letter(a)?;
        self.check_letter(b)?;
        self.braiding.swap_scalar(a, b)
    }

    /// Degree of a letter for graded braidings, else `1`.
    pub fn degree(&self, l: Letter) -> Result<u32> {
        match &self.braiding {
            Braiding::GradedFlip { degrees, .. } => {
                degrees.get(&l).copied().ok_or(Error::UnknownLetter(l.0))
            }
            _ => Ok(1),
        }
    }
}

impl Clone for BraidedSpace {
    fn clone(&self) -> Self {
        BraidedSpace::new(self.letters.clone(), self.braiding.clone())
    }
}

impl fmt::Debug for BraidedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BraidedSpace")
            .field("letters", &self.letters)
            .field("braiding", &self.braiding.kind())
            .finish()
    }
}

/// `(A, m, σ)` with an optional unit letter.
#[derive(Clone, Debug)]
pub struct BraidedAlgebra {
    pub name: String,
    pub space: BraidedSpace,
    pub mult: Multiplication,
    pub unit: Option<Letter>,
}

impl BraidedAlgebra {
    pub fn new(name: impl Into<String>, letters: LetterSet, mult: Multiplication, braiding: Braiding) -> Self {
        BraidedAlgebra {
            name: name.into(),
            space: BraidedSpace::new(letters, braiding),
            mult,
            unit: None,
        }
    }

    pub fn with_unit(mut self, unit: Letter) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn braiding(&self) -> &Braiding {
        &self.space.braiding
    }

    pub fn letters(&self) -> &LetterSet {
        &self.space.letters
    }

    /// `m(a⊗b)`.
    pub fn multiply(&self, a: Letter, b: Letter) -> Result<LinearV> {
        self.space.check_letter(a)?;
        self.space.check_letter(b)?;
        Ok(self.mult.apply_pair(a, b))
    }

    pub fn multiply_linear(&self, x: &LinearV, y: &LinearV) -> Result<LinearV> {
        let mut out = LinearV::zero();
        for (&a, ca) in x {
            for (&b, cb) in y {
                out.add_scaled(&self.multiply(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `m` applied to an element of `V⊗V`.
    pub fn multiply_v2(&self, v: &VectorInV2) -> Result<LinearV> {
        v.try_map_linear(|&(a, b)| self.multiply(a, b))
    }

    /// The same algebra with multiplication replaced by zero.
    pub fn with_zero_multiplication(&self) -> BraidedAlgebra {
        BraidedAlgebra {
            name: format!("{}-zero-mult", self.name),
            space: self.space.clone(),
            mult: Multiplication::Zero,
            unit: None,
        }
    }

    /// The same multiplication with the flip braiding.
    pub fn with_flip(&self) -> BraidedAlgebra {
        BraidedAlgebra {
            name: format!("{}-flip", self.name),
            space: BraidedSpace::new(self.space.letters.clone(), Braiding::Flip),
            mult: self.mult.clone(),
            unit: self.unit,
        }
    }
}

/// `(C, Δ, σ)` with an optional counit given as the letter `c` with
/// `ε(c) = 1` (all other letters have `ε = 0`).
#[derive(Clone, Debug)]
pub struct BraidedCoalgebra {
    pub name: String,
    pub space: BraidedSpace,
    pub comult: BTreeMap<Letter, VectorInV2>,
    pub counit: Option<Letter>,
}

impl BraidedCoalgebra {
    pub fn braiding(&self) -> &Braiding {
        &self.space.braiding
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.comult.keys().copied().collect()
    }

    pub fn delta(&self, c: Letter) -> Result<VectorInV2> {
        self.comult.get(&c).cloned().ok_or(Error::UnknownLetter(c.0))
    }

    pub fn delta_v2_left(&self, v: &VectorInV2) -> Result<Triple> {
        // (Δ⊗id)
        let mut out = Triple::zero();
        for (&(a, b), c) in v {
            for (&(x, y), d) in &self.delta(a)? {
                out.add_term((x, y, b), c * d);
            }
        }
        Ok(out)
    }

    pub fn delta_v2_right(&self, v: &VectorInV2) -> Result<Triple> {
        // (id⊗Δ)
        let mut out = Triple::zero();
        for (&(a, b), c) in v {
            for (&(x, y), d) in &self.delta(b)? {
                out.add_term((a, x, y), c * d);
            }
        }
        Ok(out)
    }

    pub fn counit(&self, c: Letter) -> Scalar {
        match self.counit {
            Some(u) if u == c => Scalar::one(),
            _ => Scalar::zero(),
        }
    }
}

/// Elements of `V⊗V⊗V`.
pub type Triple = crate::linear::Combination<(Letter, Letter, Letter)>;

/// `σ` acting on positions 1–2 of `V⊗V⊗V`.
pub fn sigma1(b: &Braiding, t: &Triple) -> Result<Triple> {
    let mut out = Triple::zero();
    for (&(x, y, z), c) in t {
        for (&(u, v), d) in &b.apply_pair(x, y)? {
            out.add_term((u, v, z), c * d);
        }
    }
    Ok(out)
}

/// `σ` acting on positions 2–3 of `V⊗V⊗V`.
pub fn sigma2(b: &Braiding, t: &Triple) -> Result<Triple> {
    let mut out = Triple::zero();
    for (&(x, y, z), c) in t {
        for (&(u, v), d) in &b.apply_pair(y, z)? {
            out.add_term((x, u, v), c * d);
        }
    }
    Ok(out)
}

fn fmt_triple(t: (Letter, Letter, Letter)) -> String {
    format!("(e{}, e{}, e{})", t.0 .0, t.1 .0, t.2 .0)
}

/// Every triple over `letters`.
pub fn all_triples(letters: &[Letter]) -> Vec<(Letter, Letter, Letter)> {
    let mut out = Vec::with_capacity(letters.len().pow(3));
    for &a in letters {
        for &b in letters {
            for &c in letters {
                out.push((a, b, c));
            }
        }
    }
    out
}

pub fn all_pairs(letters: &[Letter]) -> Vec<(Letter, Letter)> {
    letters
        .iter()
        .flat_map(|&a| letters.iter().map(move |&b| (a, b)))
        .collect()
}

/// `σ₁σ₂σ₁ = σ₂σ₁σ₂` on each triple.
pub fn check_yang_baxter(b: &Braiding, triples: &[(Letter, Letter, Letter)]) -> Report {
    let mut r = Report::new(format!("yang-baxter[{}]", b.kind()));
    for &t in triples {
        let x = Triple::basis(t);
        let res = (|| -> Result<bool> {
            let lhs = sigma1(b, &sigma2(b, &sigma1(b, &x)?)?)?;
            let rhs = sigma2(b, &sigma1(b, &sigma2(b, &x)?)?)?;
            Ok(lhs == rhs)
        })();
        match res {
            Ok(ok) => r.check(ok, || fmt_triple(t)),
            Err(e) => r.fail(format!("{}: {e}", fmt_triple(t))),
        }
    }
    r
}

/// `σ⁻¹σ = σσ⁻¹ = id` on each pair.
pub fn check_invertible(b: &Braiding, pairs: &[(Letter, Letter)]) -> Report {
    let mut r = Report::new(format!("braiding-invertible[{}]", b.kind()));
    for &(x, y) in pairs {
        let v = VectorInV2::basis((x, y));
        let res = (|| -> Result<bool> {
            let a = b.apply_inverse(&b.apply(&v)?)?;
            let c = b.apply(&b.apply_inverse(&v)?)?;
            Ok(a == v && c == v)
        })();
        match res {
            Ok(ok) => r.check(ok, || format!("(e{}, e{})", x.0, y.0)),
            Err(e) => r.fail(format!("(e{}, e{}): {e}", x.0, y.0)),
        }
    }
    r
}

fn mult_left(a: &BraidedAlgebra, t: &Triple) -> Result<VectorInV2> {
    // (m⊗id)
    let mut out = VectorInV2::zero();
    for (&(x, y, z), c) in t {
        for (&p, d) in &a.multiply(x, y)? {
            out.add_term((p, z), c * d);
        }
    }
    Ok(out)
}

fn mult_right(a: &BraidedAlgebra, t: &Triple) -> Result<VectorInV2> {
    // (id⊗m)
    let mut out = VectorInV2::zero();
    for (&(x, y, z), c) in t {
        for (&p, d) in &a.multiply(y, z)? {
            out.add_term((x, p), c * d);
        }
    }
    Ok(out)
}

/// Associativity and both compatibility equations
/// `(id⊗m)σ₁σ₂ = σ(m⊗id)` and `(m⊗id)σ₂σ₁ = σ(id⊗m)` on each triple;
/// for unital structures also `σ(a⊗1) = 1⊗a` and `σ(1⊗a) = a⊗1`.
pub fn check_braided_algebra(a: &BraidedAlgebra, triples: &[(Letter, Letter, Letter)]) -> Report {
    let mut r = Report::new(format!("braided algebra axioms [{}]", a.name));
    let b = a.braiding();
    for &t in triples {
        let x = Triple::basis(t);
        let res = (|| -> Result<[bool; 3]> {
            let assoc_l = a.multiply_linear(&a.multiply(t.0, t.1)?, &LinearV::basis(t.2))?;
            let assoc_r = a.multiply_linear(&LinearV::basis(t.0), &a.multiply(t.1, t.2)?)?;
            let lhs1 = mult_right(a, &sigma1(b, &sigma2(b, &x)?)?)?;
            let rhs1 = b.apply(&mult_left(a, &x)?)?;
            let lhs2 = mult_left(a, &sigma2(b, &sigma1(b, &x)?)?)?;
            let rhs2 = b.apply(&mult_right(a, &x)?)?;
            Ok([assoc_l == assoc_r, lhs1 == rhs1, lhs2 == rhs2])
        })();
        match res {
            Ok([assoc, e1, e2]) => {
                r.check(assoc, || format!("associativity at {}", fmt_triple(t)));
                r.check(e1, || format!("(id⊗m)σ₁σ₂ ≠ σ(m⊗id) at {}", fmt_triple(t)));
                r.check(e2, || format!("(m⊗id)σ₂σ₁ ≠ σ(id⊗m) at {}", fmt_triple(t)));
            }
            Err(e) => r.fail(format!("{}: {e}", fmt_triple(t))),
        }
    }
    if let Some(u) = a.unit {
        let mut letters: BTreeSet<Letter> = BTreeSet::new();
        for &(x, y, z) in triples {
            letters.extend([x, y, z]);
        }
        for &l in &letters {
            let res = (|| -> Result<[bool; 3]> {
                let unit_law = a.multiply(u, l)? == LinearV::basis(l) && a.multiply(l, u)? == LinearV::basis(l);
                let s1 = b.apply_pair(l, u)? == VectorInV2::basis((u, l));
                let s2 = b.apply_pair(u, l)? == VectorInV2::basis((l, u));
                Ok([unit_law, s1, s2])
            })();
            match res {
                Ok([ul, s1, s2]) => {
                    r.check(ul, || format!("unit law at e{}", l.0));
                    r.check(s1, || format!("σ(a⊗1) ≠ 1⊗a at e{}", l.0));
                    r.check(s2, || format!("σ(1⊗a) ≠ a⊗1 at e{}", l.0));
                }
                Err(e) => r.fail(format!("unit at e{}: {e}", l.0)),
            }
        }
    }
    r
}

/// `q_{ij}q_{ik} = q_{i,j+k}` and `q_{ik}q_{jk} = q_{i+j,k}` for all index
/// triples whose sums stay in `letters`.
pub fn check_diagonal_constraints(b: &Braiding, letters: &[Letter]) -> Report {
    let mut r = Report::new(format!("diagonal-constraints[{}]", b.kind()));
    if !matches!(b, Braiding::Diagonal(_)) {
        return Report::out_of_scope(r.name, "not a diagonal braiding");
    }
    let set: BTreeSet<Letter> = letters.iter().copied().collect();
    let q = |i: Letter, j: Letter| b.swap_scalar(i, j).map(|c| c.expect("diagonal"));
    for &i in letters {
        for &j in letters {
            for &k in letters {
                let res = (|| -> Result<()> {
                    let jk = Letter(j.0 + k.0);
                    if set.contains(&jk) {
                        let ok = &q(i, j)? * &q(i, k)? == q(i, jk)?;
                        r.check(ok, || format!("q_ij q_ik ≠ q_i,j+k at ({}, {}, {})", i.0, j.0, k.0));
                    }
                    let ij = Letter(i.0 + j.0);
                    if set.contains(&ij) {
                        let ok = &q(i, k)? * &q(j, k)? == q(ij, k)?;
                        r.check(ok, || format!("q_ik q_jk ≠ q_i+j,k at ({}, {}, {})", i.0, j.0, k.0));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    r.fail(format!("({}, {}, {}): {e}", i.0, j.0, k.0));
                }
            }
        }
    }
    r
}

/// Coassociativity and both equations
/// `(id⊗Δ)σ = σ₁σ₂(Δ⊗id)` and `(Δ⊗id)σ = σ₂σ₁(id⊗Δ)` on letter pairs.
pub fn check_braided_coalgebra(c: &BraidedCoalgebra, letters: &[Letter]) -> Report {
    let mut r = Report::new(format!("braided-coalgebra[{}]", c.name));
    let b = c.braiding();
    for &l in letters {
        let res = (|| -> Result<bool> {
            let d = c.delta(l)?;
            Ok(c.delta_v2_left(&d)? == c.delta_v2_right(&d)?)
        })();
        match res {
            Ok(ok) => r.check(ok, || format!("coassociativity at c{}", l.0)),
            Err(e) => r.fail(format!("c{}: {e}", l.0)),
        }
    }
    for (x, y) in all_pairs(letters) {
        let v = VectorInV2::basis((x, y));
        let res = (|| -> Result<[bool; 2]> {
            let lhs1 = c.delta_v2_right(&b.apply(&v)?)?;
            let rhs1 = sigma1(b, &sigma2(b, &c.delta_v2_left(&v)?)?)?;
            let lhs2 = c.delta_v2_left(&b.apply(&v)?)?;
            let rhs2 = sigma2(b, &sigma1(b, &c.delta_v2_right(&v)?)?)?;
            Ok([lhs1 == rhs1, lhs2 == rhs2])
        })();
        match res {
            Ok([e1, e2]) => {
                r.check(e1, || format!("(id⊗Δ)σ ≠ σ₁σ₂(Δ⊗id) at (c{}, c{})", x.0, y.0));
                r.check(e2, || format!("(Δ⊗id)σ ≠ σ₂σ₁(id⊗Δ) at (c{}, c{})", x.0, y.0));
            }
            Err(e) => r.fail(format!("(c{}, c{}): {e}", x.0, y.0)),
        }
    }
    r
}

/// The dual coalgebra for the dual-basis pairing `<e_i, c_j> = δ_ij`:
/// `Δ(c_k) = Σ coeff(m(e_i⊗e_j), e_k) c_i⊗c_j`, braiding the transpose of
/// `σ`, counit dual to the unit letter if any.
pub fn adjoint_coalgebra(a: &BraidedAlgebra) -> Result<BraidedCoalgebra> {
    let letters = a.letters().finite()?;
    let mut comult: BTreeMap<Letter, VectorInV2> = letters.iter().map(|&l| (l, VectorInV2::zero())).collect();
    for &i in &letters {
        for &j in &letters {
            for (&k, c) in &a.multiply(i, j)? {
                comult
                    .get_mut(&k)
                    .ok_or(Error::UnknownLetter(k.0))?
                    .add_term((i, j), c.clone());
            }
        }
    }
    let braiding = a.braiding().transpose(&letters)?;
    Ok(BraidedCoalgebra {
        name: format!("{}*", a.name),
        space: BraidedSpace::new(a.letters().clone(), braiding),
        comult,
        counit: a.unit,
    })
}

/// The algebra dual to a finite coalgebra: `m(e_i⊗e_j) = Σ_k coeff(Δ(c_k),
/// c_i⊗c_j) e_k`, braiding the transpose of the coalgebra braiding.
pub fn adjoint_algebra(c: &BraidedCoalgebra) -> Result<BraidedAlgebra> {
    let letters = c.letters();
    let mut table: BTreeMap<(Letter, Letter), LinearV> = BTreeMap::new();
    for (&k, d) in &c.comult {
        for (&(i, j), coef) in d {
            table.entry((i, j)).or_default().add_term(k, coef.clone());
        }
    }
    let braiding = c.braiding().transpose(&letters)?;
    let mut alg = BraidedAlgebra::new(
        format!("{}*", c.name),
        LetterSet::Finite(letters.iter().copied().collect()),
        Multiplication::Table(table),
        braiding,
    );
    alg.unit = c.counit;
    Ok(alg)
}

/// `<m(x), c> = <x, Δ(c)>` for all basis `x ∈ V⊗V` and letters `c`.
pub fn check_adjoint_transposition(a: &BraidedAlgebra, c: &BraidedCoalgebra) -> Report {
    let mut r = Report::new(format!("<m(x), c> = <x, Δ(c)> [{}]", a.name));
    let letters = c.letters();
    for (i, j) in all_pairs(&letters) {
        for &k in &letters {
            let res = (|| -> Result<bool> {
                let lhs = a.multiply(i, j)?.coeff(&k);
                let rhs = c.delta(k)?.coeff(&(i, j));
                Ok(lhs == rhs)
            })();
            match res {
                Ok(ok) => r.check(ok, || format!("<m(e{}⊗e{}), c{}>", i.0, j.0, k.0)),
                Err(e) => r.fail(e.to_string()),
            }
        }
    }
    r
}

/// Bracket choice for the graded fixtures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HoffmanBracket {
    /// `[x, y]` is the first letter of degree `|x|+|y|`, or 0 if none.
    FirstOfDegree,
    Zero,
    Table(BTreeMap<(Letter, Letter), LinearV>),
}

/// Fixture constructors.
pub mod fixtures {
    use super::*;

    /// `e_i e_j = e_{i+j}` truncated above `n`, `q_ij = q^{ij}`.
    pub fn a_n(n: u32) -> BraidedAlgebra {
        BraidedAlgebra::new(
            format!("A{n}"),
            LetterSet::range(1, n),
            Multiplication::IndexSum { max: Some(n) },
            Braiding::diagonal_power(Scalar::q()),
        )
    }

    /// `a_n` with the flip braiding; `m∘σ = m` holds.
    pub fn a_n_flip(n: u32) -> BraidedAlgebra {
        a_n(n).with_flip()
    }

    /// `a_n` with a unit letter `e_0` adjoined (`q_{0j} = 1`).
    pub fn a_n_unital(n: u32) -> BraidedAlgebra {
        let mut a = BraidedAlgebra::new(
            format!("A{n}+1"),
            LetterSet::range(0, n),
            Multiplication::IndexSum { max: Some(n) },
            Braiding::diagonal_power(Scalar::q()),
        );
        a.unit = Some(Letter(0));
        a
    }

    /// Untruncated `e_i e_j = e_{i+j}` on `i ≥ 1`.
    pub fn a_inf() -> BraidedAlgebra {
        BraidedAlgebra::new(
            "A_inf",
            LetterSet::From { min: 1 },
            Multiplication::IndexSum { max: None },
            Braiding::diagonal_power(Scalar::q()),
        )
    }

    /// `𝕂[t]` with letter `i` standing for `t^i` and
    /// `σ(t^n⊗t^m) = q^{nm} t^m⊗t^n`.
    pub fn kt() -> BraidedAlgebra {
        BraidedAlgebra::new(
            "Kt",
            LetterSet::From { min: 0 },
            Multiplication::IndexSum { max: None },
            Braiding::diagonal_power(Scalar::q()),
        )
        .with_unit(Letter(0))
    }

    /// `𝕂[t]` with the flip braiding.
    pub fn kt_flip() -> BraidedAlgebra {
        BraidedAlgebra {
            name: "Kt-flip".into(),
            ..kt().with_flip()
        }
    }

    /// Graded letters `1..=degrees.len()` with `|letter k| = degrees[k-1]`,
    /// graded flip with base `q`, and the chosen graded bracket.
    pub fn hoffman(degrees: &[u32], bracket: HoffmanBracket) -> Result<BraidedAlgebra> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::Invalid("hoffman degrees must be positive".into()));
        }
        let letters: Vec<Letter> = (1..=degrees.len() as u32).map(Letter).collect();
        let deg: BTreeMap<Letter, u32> = letters.iter().copied().zip(degrees.iter().copied()).collect();
        let table = match bracket {
            HoffmanBracket::Zero => BTreeMap::new(),
            HoffmanBracket::Table(t) => t,
            HoffmanBracket::FirstOfDegree => {
                let mut t = BTreeMap::new();
                for &x in &letters {
                    for &y in &letters {
                        let d = deg[&x] + deg[&y];
                        if let Some(&z) = letters.iter().find(|l| deg[*l] == d) {
                            t.insert((x, y), LinearV::basis(z));
                        }
                    }
                }
                t
            }
        };
        let list: Vec<String> = degrees.iter().map(u32::to_string).collect();
        Ok(BraidedAlgebra::new(
            format!("hoffman:{}", list.join(",")),
            LetterSet::Finite(letters.iter().copied().collect()),
            Multiplication::Table(table),
            Braiding::GradedFlip {
                base: Scalar::q(),
                degrees: deg,
            },
        ))
    }

    /// Resolves a fixture name: `A<N>`, `A<N>-flip`, `A<N>+1`, `A_inf`,
    /// `Kt`, `Kt-flip`, `hoffman:<degrees>`, `hoffman-zero:<degrees>`.
    pub fn by_name(name: &str) -> Result<BraidedAlgebra> {
        let unknown = || Error::Invalid(format!("unknown algebra fixture '{name}'"));
        let parse_degrees = |list: &str| -> Result<Vec<u32>> {
            list.split(',')
                .map(|d| d.trim().parse::<u32>().map_err(|_| unknown()))
                .collect()
        };
        match name {
            "A_inf" => return Ok(a_inf()),
            "Kt" => return Ok(kt()),
            "Kt-flip" => return Ok(kt_flip()),
            _ => {}
        }
        if let Some(list) = name.strip_prefix("hoffman:") {
            return hoffman(&parse_degrees(list)?, HoffmanBracket::FirstOfDegree);
        }
        if let Some(list) = name.strip_prefix("hoffman-zero:") {
            return hoffman(&parse_degrees(list)?, HoffmanBracket::Zero);
        }
        if let Some(rest) = name.strip_prefix('A') {
            let (digits, suffix) = rest.split_at(rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len()));
            let n: u32 = digits.parse().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            return match suffix {
                "" => Ok(a_n(n)),
                "-flip" => Ok(a_n_flip(n)),
                "+1" => Ok(a_n_unital(n)),
                _ => Err(unknown()),
            };
        }
        Err(unknown())
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn l(i: u32) -> Letter {
        Letter(i)
    }

    #[test]
    fn apply_examples() {
        let a4 = a_n(4);
        let v = a4.braiding().apply_pair(l(1), l(2)).unwrap();
        assert_eq!(v, VectorInV2::term((l(2), l(1)), Scalar::q_pow(2)));
        assert_eq!(Braiding::Flip.apply_pair(l(3), l(1)).unwrap(), VectorInV2::basis((l(1), l(3))));
        let h = hoffman(&[2, 3], HoffmanBracket::Zero).unwrap();
        assert_eq!(
            h.braiding().apply_pair(l(1), l(2)).unwrap(),
            VectorInV2::term((l(2), l(1)), Scalar::q_pow(6))
        );
    }

    #[test]
    fn unknown_letters_error() {
        let a4 = a_n(4);
        assert_eq!(a4.space.braid_pair(l(1), l(5)), Err(Error::UnknownLetter(5)));
        assert_eq!(a4.multiply(l(9), l(1)), Err(Error::UnknownLetter(9)));
    }

    #[test]
    fn diagonal_inverse_roundtrip() {
        let a4 = a_n(4);
        let letters = a4.letters().finite().unwrap();
        assert!(check_invertible(a4.braiding(), &all_pairs(&letters)).passed());
    }

    #[test]
    fn yang_baxter_fixtures() {
        let letters: Vec<Letter> = (1..=4).map(l).collect();
        let triples = all_triples(&letters);
        assert!(check_yang_baxter(&Braiding::Flip, &triples).passed());
        assert!(check_yang_baxter(a_n(4).braiding(), &triples).passed());
    }

    #[test]
    fn yang_baxter_negative_control() {
        let letters: Vec<Letter> = (1..=2).map(l).collect();
        let Braiding::General { mut forward, backward } = Braiding::Flip.to_general(&letters).unwrap() else {
            unreachable!()
        };
        // σ(e1⊗e2) = e2⊗e1 + e1⊗e2 breaks the braid relation
        forward.get_mut(&(l(1), l(2))).unwrap().add_term((l(1), l(2)), Scalar::one());
        let b = Braiding::General { forward, backward };
        let r = check_yang_baxter(&b, &all_triples(&letters));
        assert!(!r.passed());
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn braided_algebra_fixtures() {
        let a4 = a_n(4);
        let letters = a4.letters().finite().unwrap();
        assert!(check_braided_algebra(&a4, &all_triples(&letters)).passed());
        let z = a4.with_zero_multiplication();
        assert!(check_braided_algebra(&z, &all_triples(&letters)).passed());
        let u = a_n_unital(4);
        let letters = u.letters().finite().unwrap();
        assert!(check_braided_algebra(&u, &all_triples(&letters)).passed());
    }

    #[test]
    fn diagonal_constraint_violation_found() {
        // q_11 = q but q_12 = 1 ≠ q_11 q_11: brute force over two letters
        let mut t = BTreeMap::new();
        for i in 1..=2u32 {
            for j in 1..=2u32 {
                t.insert((l(i), l(j)), if i == 1 && j == 1 { Scalar::q() } else { Scalar::one() });
            }
        }
        let b = Braiding::Diagonal(DiagonalQ::Table(t));
        let letters = vec![l(1), l(2)];
        assert!(!check_diagonal_constraints(&b, &letters).passed());
        let a = BraidedAlgebra::new(
            "bad",
            LetterSet::range(1, 2),
            Multiplication::IndexSum { max: Some(2) },
            b,
        );
        assert!(!check_braided_algebra(&a, &all_triples(&letters)).passed());
        assert!(check_diagonal_constraints(a_n(4).braiding(), &(1..=4).map(l).collect::<Vec<_>>()).passed());
    }

    #[test]
    fn adjoint_coalgebra_a4() {
        let a4 = a_n(4);
        let c = adjoint_coalgebra(&a4).unwrap();
        let d3 = VectorInV2::basis((l(1), l(2))) + VectorInV2::basis((l(2), l(1)));
        assert_eq!(c.delta(l(3)).unwrap(), d3);
        assert!(c.delta(l(1)).unwrap().is_zero());
        assert!(check_adjoint_transposition(&a4, &c).passed());
        let letters = c.letters();
        assert!(check_braided_coalgebra(&c, &letters).passed());
        assert!(check_yang_baxter(c.braiding(), &all_triples(&letters)).passed());
        // <σ(e_i⊗e_j), c_j⊗c_i> = q_ij = <e_i⊗e_j, τ(c_j⊗c_i)>
        let tau = c.braiding().apply_pair(l(2), l(1)).unwrap();
        assert_eq!(tau.coeff(&(l(1), l(2))), Scalar::q_pow(2));
    }

    #[test]
    fn adjoint_requires_finite() {
        assert_eq!(adjoint_coalgebra(&a_inf()).unwrap_err(), Error::InfiniteCarrier);
        assert_eq!(Error::InfiniteCarrier.to_string(), "finite carrier required for dual");
    }

    #[test]
    fn double_adjoint_is_identity() {
        let a4 = a_n(4);
        let back = adjoint_algebra(&adjoint_coalgebra(&a4).unwrap()).unwrap();
        for (x, y) in all_pairs(&a4.letters().finite().unwrap()) {
            assert_eq!(back.multiply(x, y).unwrap(), a4.multiply(x, y).unwrap());
            assert_eq!(back.braiding().apply_pair(x, y).unwrap(), a4.braiding().apply_pair(x, y).unwrap());
        }
    }

    #[test]
    fn hoffman_fixture_checks() {
        let h = hoffman(&[1, 1, 2], HoffmanBracket::FirstOfDegree).unwrap();
        let letters = h.letters().finite().unwrap();
        assert_eq!(h.multiply(l(1), l(2)).unwrap(), LinearV::basis(l(3)));
        assert!(h.multiply(l(1), l(3)).unwrap().is_zero());
        assert!(check_braided_algebra(&h, &all_triples(&letters)).passed());
        assert!(check_yang_baxter(h.braiding(), &all_triples(&letters)).passed());
    }

    #[test]
    fn fixture_names() {
        for name in ["A4", "A3-flip", "A4+1", "A_inf", "Kt", "Kt-flip", "hoffman:1,1,2", "hoffman-zero:1,1"] {
            assert!(by_name(name).is_ok(), "{name}");
        }
        for bad in ["B4", "A", "A0", "A4-x", "hoffman:", "hoffman:0"] {
            assert!(by_name(bad).is_err(), "{bad}");
        }
    }
}
