//! Weak braided Rota–Baxter algebras, the representation `f̄: T(A) → R`
//! and truncated multiple q-zeta values.
//!
//! A Rota–Baxter operator of weight `λ` satisfies
//! `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)`. When `R` is commutative
//! (`m∘σ = m`), right weak braided (`σ(P⊗id) = (id⊗P)σ`) and `λ = 1`, the map
//!
//! `f̄(1) = 1`, `f̄(a₁⊗…⊗aₙ) = P(f(a₁) f̄(a₂⊗…⊗aₙ))`
//!
//! is an algebra map from `(T(A), ⋈)`. Outside that scope the homomorphism
//! check reports out-of-scope instead of pass or fail.

use std::collections::BTreeMap;
use std::fmt;

use crate::braided::{fixtures, BraidedAlgebra};
use crate::error::{Error, Result};
use crate::linear::{Element, Letter, LinearV, Word};
use crate::par::{self, Exec};
use crate::qshuffle::{all_words, QShuffle};
use crate::report::Report;
use crate::scalar::{qint, Scalar};

/// The operator `P`, given on basis letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    /// `P = c·id`; `c = −λ` gives a weight-`λ` operator.
    Scaling(Scalar),
    /// `P(tⁿ) = qⁿtⁿ/(1−qⁿ)` on `𝕂[t]`; undefined on `t⁰`.
    QDilation,
    /// `QDilation` with `P(t²)` doubled. Negative control.
    CorruptedQDilation,
    /// Explicit values; letters outside the table are undefined.
    Table(BTreeMap<Letter, LinearV>),
}

impl Operator {
    pub fn apply_letter(&self, l: Letter) -> Result<LinearV> {
        match self {
            Operator::Scaling(c) => Ok(LinearV::term(l, c.clone())),
            Operator::QDilation | Operator::CorruptedQDilation => {
                let n = l.0 as i64;
                if n == 0 {
                    return Err(Error::OperatorUndefined("P(t^0) has a vanishing denominator 1-q^0".into()));
                }
                let qn = Scalar::q_pow(n);
                let mut c = qn.checked_div(&(Scalar::one() - qn.clone()))?;
                if n == 2 && *self == Operator::CorruptedQDilation {
                    c = c * Scalar::from(2);
                }
                Ok(LinearV::term(l, c))
            }
            Operator::Table(t) => t
                .get(&l)
                .cloned()
                .ok_or_else(|| Error::OperatorUndefined(format!("P(e{}) not in table", l.0))),
        }
    }

    pub fn apply(&self, x: &LinearV) -> Result<LinearV> {
        x.try_map_linear(|&l| self.apply_letter(l))
    }
}

/// Which sidedness identity the structure claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
    Both,
}

impl Side {
    fn right(self) -> bool {
        matches!(self, Side::Right | Side::Both)
    }

    fn left(self) -> bool {
        matches!(self, Side::Left | Side::Both)
    }
}

/// The algebra map `f: A → R` on letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LetterMap {
    /// `A` is a subalgebra of `R` on the same letters.
    Inclusion,
    Table(BTreeMap<Letter, LinearV>),
}

impl LetterMap {
    pub fn apply_letter(&self, l: Letter) -> Result<LinearV> {
        match self {
            LetterMap::Inclusion => Ok(LinearV::basis(l)),
            LetterMap::Table(t) => t.get(&l).cloned().ok_or(Error::UnknownLetter(l.0)),
        }
    }
}

/// `(R, P, σ)` with weight `λ`, the source algebra `A` and `f: A → R`.
pub struct RotaBaxter {
    pub name: String,
    source: QShuffle,
    carrier: BraidedAlgebra,
    unit: Letter,
    pub op: Operator,
    pub weight: Scalar,
    pub side: Side,
    pub f: LetterMap,
    /// Carrier letters used by the sampled identity checks.
    pub sample: Vec<Letter>,
}

impl fmt::Debug for RotaBaxter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RotaBaxter")
            .field("name", &self.name)
            .field("carrier", &self.carrier.name)
            .field("source", &self.source.algebra().name)
            .field("op", &self.op)
            .field("weight", &self.weight)
            .field("side", &self.side)
            .finish()
    }
}

impl RotaBaxter {
    /// `carrier` must have a unit letter.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        source: BraidedAlgebra,
        carrier: BraidedAlgebra,
        op: Operator,
        weight: Scalar,
        side: Side,
        f: LetterMap,
        sample: Vec<Letter>,
    ) -> Result<Self> {
        let unit = carrier
            .unit
            .ok_or_else(|| Error::Invalid(format!("carrier {} has no unit letter", carrier.name)))?;
        Ok(RotaBaxter {
            name: name.into(),
            source: QShuffle::new(source),
            carrier,
            unit,
            op,
            weight,
            side,
            f,
            sample,
        })
    }

    /// `𝕂[t]` with the flip braiding and `P(tⁿ) = qⁿtⁿ/(1−qⁿ)`, weight 1.
    pub fn kt() -> Self {
        Self::kt_with(Operator::QDilation, "kt")
    }

    /// `kt` with a corrupted `P(t²)`.
    pub fn kt_corrupted() -> Self {
        Self::kt_with(Operator::CorruptedQDilation, "kt-corrupted")
    }

    fn kt_with(op: Operator, name: &str) -> Self {
        Self::new(
            name,
            fixtures::kt_flip(),
            fixtures::kt_flip(),
            op,
            Scalar::one(),
            Side::Both,
            LetterMap::Inclusion,
            (1..=6).map(Letter).collect(),
        )
        .expect("Kt has a unit")
    }

    /// `𝕂[t]` with `σ(tⁿ⊗tᵐ) = q^{nm} tᵐ⊗tⁿ`: weak braided on both sides but
    /// not commutative in the braided sense.
    pub fn kt_braided() -> Self {
        Self::new(
            "kt-braided",
            fixtures::kt(),
            fixtures::kt(),
            Operator::QDilation,
            Scalar::one(),
            Side::Both,
            LetterMap::Inclusion,
            (1..=6).map(Letter).collect(),
        )
        .expect("Kt has a unit")
    }

    /// `P = −λ·id` on `A_N` with the flip braiding and a unit adjoined.
    pub fn negation(n: u32, weight: Scalar) -> Self {
        let carrier = fixtures::a_n_unital(n).with_flip();
        Self::new(
            if weight.is_one() {
                "negation".to_string()
            } else {
                format!("negation-weight-{weight}")
            },
            fixtures::a_n_flip(n),
            carrier,
            Operator::Scaling(-weight.clone()),
            weight,
            Side::Both,
            LetterMap::Inclusion,
            (0..=n).map(Letter).collect(),
        )
        .expect("unital carrier")
    }

    /// `kt`, `kt-corrupted`, `kt-braided`, `negation`, `negation-w2`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "kt" => Ok(Self::kt()),
            "kt-corrupted" => Ok(Self::kt_corrupted()),
            "kt-braided" => Ok(Self::kt_braided()),
            "negation" => Ok(Self::negation(4, Scalar::one())),
            "negation-w2" => Ok(Self::negation(4, Scalar::from(2))),
            _ => Err(Error::Invalid(format!("unknown Rota-Baxter fixture '{name}'"))),
        }
    }

    pub fn carrier(&self) -> &BraidedAlgebra {
        &self.carrier
    }

    pub fn source(&self) -> &QShuffle {
        &self.source
    }

    pub fn unit(&self) -> LinearV {
        LinearV::basis(self.unit)
    }

    pub fn p(&self, x: &LinearV) -> Result<LinearV> {
        self.op.apply(x)
    }

    pub fn mul(&self, x: &LinearV, y: &LinearV) -> Result<LinearV> {
        self.carrier.multiply_linear(x, y)
    }

    fn f_letter(&self, l: Letter) -> Result<LinearV> {
        self.source.algebra().space.check_letter(l)?;
        self.f.apply_letter(l)
    }

    /// `f̄(1) = 1`, `f̄(a₁⊗w) = P(f(a₁) f̄(w))`.
    pub fn fbar_word(&self, w: &Word) -> Result<LinearV> {
        w.iter().rev().try_fold(self.unit(), |acc, &a| self.p(&self.mul(&self.f_letter(a)?, &acc)?))
    }

    pub fn fbar(&self, x: &Element) -> Result<LinearV> {
        x.try_map_linear(|w| self.fbar_word(w))
    }

    /// `f̃(1) = 1`, `f̃(w⊗aₙ) = P(f̃(w) f(aₙ))`.
    pub fn ftilde_word(&self, w: &Word) -> Result<LinearV> {
        w.iter().try_fold(self.unit(), |acc, &a| self.p(&self.mul(&acc, &self.f_letter(a)?)?))
    }

    pub fn ftilde(&self, x: &Element) -> Result<LinearV> {
        x.try_map_linear(|w| self.ftilde_word(w))
    }

    fn sample_pairs(&self) -> Vec<(Letter, Letter)> {
        crate::braided::all_pairs(&self.sample)
    }

    /// The Rota–Baxter identity on all sampled letter pairs.
    pub fn check_rb(&self) -> Report {
        let mut r = Report::new(format!("Rota–Baxter identity [{}]", self.name));
        for (a, b) in self.sample_pairs() {
            let res = (|| -> Result<bool> {
                let (x, y) = (LinearV::basis(a), LinearV::basis(b));
                let (px, py) = (self.p(&x)?, self.p(&y)?);
                let lhs = self.mul(&px, &py)?;
                let mut rhs = self.p(&self.mul(&x, &py)?)?;
                rhs += self.p(&self.mul(&px, &y)?)?;
                rhs.add_scaled(&self.p(&self.mul(&x, &y)?)?, &self.weight);
                Ok(lhs == rhs)
            })();
            match res {
                Ok(ok) => r.check(ok, || format!("P(x)P(y) identity fails at (e{}, e{})", a.0, b.0)),
                Err(e) => r.fail(format!("(e{}, e{}): {e}", a.0, b.0)),
            }
        }
        r
    }

    fn p_left(&self, v: &crate::linear::VectorInV2) -> Result<crate::linear::VectorInV2> {
        let mut out = crate::linear::VectorInV2::zero();
        for (&(a, b), c) in v {
            for (&pa, d) in &self.op.apply_letter(a)? {
                out.add_term((pa, b), c * d);
            }
        }
        Ok(out)
    }

    fn p_right(&self, v: &crate::linear::VectorInV2) -> Result<crate::linear::VectorInV2> {
        let mut out = crate::linear::VectorInV2::zero();
        for (&(a, b), c) in v {
            for (&pb, d) in &self.op.apply_letter(b)? {
                out.add_term((a, pb), c * d);
            }
        }
        Ok(out)
    }

    /// `σ(P⊗id) = (id⊗P)σ` and/or `σ(id⊗P) = (P⊗id)σ` per [`Side`].
    pub fn check_weak_braided(&self) -> Report {
        let mut r = Report::new(format!("weak braided ({:?}) [{}]", self.side, self.name));
        let b = self.carrier.braiding();
        for (a, c) in self.sample_pairs() {
            let v = crate::linear::VectorInV2::basis((a, c));
            let res = (|| -> Result<(bool, bool)> {
                let right = !self.side.right() || b.apply(&self.p_left(&v)?)? == self.p_right(&b.apply(&v)?)?;
                let left = !self.side.left() || b.apply(&self.p_right(&v)?)? == self.p_left(&b.apply(&v)?)?;
                Ok((right, left))
            })();
            match res {
                Ok((right, left)) => {
                    r.check(right, || format!("σ(P⊗id) ≠ (id⊗P)σ at (e{}, e{})", a.0, c.0));
                    r.check(left, || format!("σ(id⊗P) ≠ (P⊗id)σ at (e{}, e{})", a.0, c.0));
                }
                Err(e) => r.fail(format!("(e{}, e{}): {e}", a.0, c.0)),
            }
        }
        r
    }

    /// `m∘σ = m` on sampled pairs.
    pub fn check_commutative(&self) -> Report {
        let mut r = Report::new(format!("m∘σ = m [{}]", self.name));
        for (a, b) in self.sample_pairs() {
            let res = (|| -> Result<bool> {
                let v = self.carrier.space.braid_pair(a, b)?;
                Ok(self.carrier.multiply_v2(&v)? == self.carrier.multiply(a, b)?)
            })();
            match res {
                Ok(ok) => r.check(ok, || format!("m∘σ ≠ m at (e{}, e{})", a.0, b.0)),
                Err(e) => r.fail(e.to_string()),
            }
        }
        r
    }

    /// `f(ab) = f(a)f(b)` and `(f⊗f)σ = σ'(f⊗f)` on sampled source letters.
    pub fn check_f(&self) -> Result<()> {
        let src = self.source.algebra();
        let letters: Vec<Letter> = self.sample.iter().copied().filter(|&l| src.space.check_letter(l).is_ok()).collect();
        for (a, b) in crate::braided::all_pairs(&letters) {
            let (fa, fb) = (self.f.apply_letter(a)?, self.f.apply_letter(b)?);
            let fab = src.multiply(a, b)?.try_map_linear(|&l| self.f.apply_letter(l))?;
            if fab != self.mul(&fa, &fb)? {
                return Err(Error::NotIntertwining(format!("f(e{}e{}) ≠ f(e{})f(e{})", a.0, b.0, a.0, b.0)));
            }
            let ff = |v: &crate::linear::VectorInV2| -> Result<crate::linear::VectorInV2> {
                let mut out = crate::linear::VectorInV2::zero();
                for (&(x, y), c) in v {
                    for (&u, d) in &self.f.apply_letter(x)? {
                        for (&w, e) in &self.f.apply_letter(y)? {
                            out.add_term((u, w), c * &(d * e));
                        }
                    }
                }
                Ok(out)
            };
            let lhs = ff(&src.space.braid_pair(a, b)?)?;
            let rhs = self.carrier.braiding().apply(&ff(&crate::linear::VectorInV2::basis((a, b)))?)?;
            if lhs != rhs {
                return Err(Error::NotIntertwining(format!("(f⊗f)σ ≠ σ'(f⊗f) at (e{}, e{})", a.0, b.0)));
            }
        }
        Ok(())
    }

    /// Why the homomorphism theorem does not apply, if it does not.
    pub fn hom_scope(&self) -> Option<String> {
        if !self.weight.is_one() {
            return Some(format!("weight {} ≠ 1", self.weight));
        }
        if !self.side.right() {
            return Some("not right weak braided".into());
        }
        if !self.check_commutative().passed() {
            return Some("carrier is not braided commutative".into());
        }
        None
    }

    /// `f̄(x ⋈ y) = f̄(x) f̄(y)` for one pair.
    pub fn verify_hom(&self, x: &Element, y: &Element) -> Report {
        let name = format!("f̄ algebra map [{}]", self.name);
        if let Some(why) = self.hom_scope() {
            return Report::out_of_scope(name, format!("out of theorem scope: {why}"));
        }
        let mut r = Report::new(name);
        match self.hom_holds(x, y, false) {
            Ok(ok) => r.check(ok, || format!("f̄({x:?} ⋈ {y:?}) ≠ f̄(x)f̄(y)")),
            Err(e) => r.fail(e.to_string()),
        }
        r
    }

    fn hom_holds(&self, x: &Element, y: &Element, tilde: bool) -> Result<bool> {
        let g = |e: &Element| if tilde { self.ftilde(e) } else { self.fbar(e) };
        let product = self.source.qqsh(x, y)?;
        Ok(g(&product)? == self.mul(&g(x)?, &g(y)?)?)
    }

    /// Basis words of the source for the homomorphism sweep: total length
    /// `≤ max` over a finite source, total exponent `≤ max` over `𝕂[t]`
    /// (letters `tⁿ`, `n ≥ 1`).
    fn hom_words(&self, max: usize) -> Vec<Word> {
        let src = self.source.algebra();
        let finite = src.letters().is_finite();
        let letters: Vec<Letter> = if finite {
            src.letters().sample(0)
        } else {
            (1..=max as u32).map(Letter).collect()
        };
        let weight = |w: &Word| if finite { w.len() } else { w.iter().map(|l| l.0 as usize).sum() };
        (0..=max)
            .flat_map(|n| all_words(&letters, n))
            .filter(|w| weight(w) <= max)
            .collect()
    }

    fn hom_sweep(&self, max: usize, exec: Exec, tilde: bool) -> Report {
        let name = format!("{} algebra map [{}]", if tilde { "f̃" } else { "f̄" }, self.name);
        if let Some(why) = self.hom_scope() {
            return Report::out_of_scope(name, format!("out of theorem scope: {why}"));
        }
        if let Err(e) = self.check_f() {
            let mut r = Report::new(name);
            r.fail(e.to_string());
            return r;
        }
        let src = self.source.algebra();
        let finite = src.letters().is_finite();
        let words = self.hom_words(max);
        let weight = |w: &Word| if finite { w.len() } else { w.iter().map(|l| l.0 as usize).sum() };
        let pairs: Vec<(Word, Word)> = words
            .iter()
            .flat_map(|u| {
                words
                    .iter()
                    .filter(move |v| weight(u) + weight(v) <= max)
                    .map(move |v| (u.clone(), v.clone()))
            })
            .collect();
        let results = par::map(exec, &pairs, |(u, v)| {
            self.hom_holds(&Element::basis(u.clone()), &Element::basis(v.clone()), tilde)
        });
        let mut r = Report::new(name);
        for ((u, v), res) in pairs.iter().zip(results) {
            match res {
                Ok(ok) => r.check(ok, || format!("fails at {u:?} ⋈ {v:?}")),
                Err(e) => r.fail(format!("{u:?} ⋈ {v:?}: {e}")),
            }
        }
        r
    }

    /// `f̄(x ⋈ y) = f̄(x)f̄(y)` on all basis pairs of total degree `≤ max`.
    pub fn check_hom(&self, max: usize, exec: Exec) -> Report {
        self.hom_sweep(max, exec, false)
    }

    /// The same for `f̃`.
    pub fn check_hom_tilde(&self, max: usize, exec: Exec) -> Report {
        self.hom_sweep(max, exec, true)
    }

    /// Every identity suite for this fixture.
    pub fn verify_all(&self, max: usize, exec: Exec) -> Vec<Report> {
        vec![
            self.check_rb(),
            self.check_weak_braided(),
            self.check_hom(max, exec),
            self.check_hom_tilde(max, exec),
        ]
    }
}

/// A polynomial in `t` with coefficients in `𝕂 = Q(q)`; `tⁿ` is `Letter(n)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQT(pub LinearV);

impl PolyQT {
    pub fn monomial(n: u32, c: Scalar) -> Self {
        PolyQT(LinearV::term(Letter(n), c))
    }

    pub fn coeff(&self, n: u32) -> Scalar {
        self.0.coeff(&Letter(n))
    }

    /// Substitutes `t = 1`.
    pub fn eval_at_one(&self) -> Scalar {
        self.0.iter().map(|(_, c)| c.clone()).sum()
    }
}

impl fmt::Debug for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(l, c)| format!("({c}) t^{}", l.0)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `f̄(t^{i₁}⊗…⊗t^{iₙ}) = q^{n iₙ + … + 1·i₁} t^{i₁+…+iₙ} / Π_r (1 − q^{iₙ+…+i_{n−r+1}})`.
pub fn kt_fbar_closed(index: &[u32]) -> Result<PolyQT> {
    if index.is_empty() {
        return Err(Error::Invalid("closed formula needs a nonempty index".into()));
    }
    let exponent: i64 = index.iter().enumerate().map(|(k, &i)| (k as i64 + 1) * i as i64).sum();
    let mut coeff = Scalar::q_pow(exponent);
    let mut tail = 0i64;
    for &i in index.iter().rev() {
        tail += i as i64;
        coeff = coeff.checked_div(&(Scalar::one() - Scalar::q_pow(tail)))?;
    }
    Ok(PolyQT::monomial(tail as u32, coeff))
}

/// A multi-index `(i₁, …, i_k)` of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaIndex(Vec<u32>);

impl ZetaIndex {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid("a zeta index is a nonempty list of positive integers".into()));
        }
        Ok(ZetaIndex(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `i₁ ≥ 2`.
    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    /// Every index of weight `≤ max_weight`, ordered by weight then
    /// lexicographically.
    pub fn all_up_to(max_weight: u32) -> Vec<ZetaIndex> {
        (1..=max_weight as usize)
            .flat_map(crate::combinat::compositions_of)
            .map(|c| ZetaIndex(c.parts().iter().map(|&p| p as u32).collect()))
            .collect()
    }
}

impl std::str::FromStr for ZetaIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad zeta index '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        ZetaIndex::new(parts)
    }
}

impl fmt::Display for ZetaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaKind {
    /// `Z_q(i) = Σ_{n₁>…>n_k>0} Π q^{i_r n_r}/(1−q^{n_r})^{i_r}`.
    Zudilin,
    /// `ζ_q(i) = Σ_{n₁>…>n_k≥1} Π q^{(i_r−1)n_r}/[n_r]^{i_r}`, `i₁ ≥ 2`.
    Bradley,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Sum the defining series.
    Direct,
    /// `f̄` of quasi-shuffle products over `𝕂[t]`, evaluated at `t = 1`.
    Series,
}

/// `N ≥ n₁ > n₂ > … > n_k ≥ 1`, in decreasing lexicographic order.
pub fn decreasing_tuples(k: usize, n: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, below: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for m in (k as u32..below).rev() {
            prefix.push(m);
            rec(k - 1, m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, n + 1, &mut Vec::new(), &mut out);
    out
}

/// Truncated multiple q-zeta values on the `kt` fixture.
pub struct Zeta {
    rb: RotaBaxter,
}

impl Default for Zeta {
    fn default() -> Self {
        Zeta { rb: RotaBaxter::kt() }
    }
}

impl Zeta {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fixture(&self) -> &RotaBaxter {
        &self.rb
    }

    fn direct_term(kind: ZetaKind, index: &ZetaIndex, ns: &[u32]) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for (&i, &n) in index.parts().iter().zip(ns) {
            let (i, n) = (i as i64, n as i64);
            let term = match kind {
                ZetaKind::Zudilin => Scalar::q_pow(i * n).checked_div(&(Scalar::one() - Scalar::q_pow(n)).pow(i)?)?,
                ZetaKind::Bradley => Scalar::q_pow((i - 1) * n).checked_div(&qint(n as u32).pow(i)?)?,
            };
            acc = acc * term;
        }
        Ok(acc)
    }

    /// `(c tⁿ¹)^{∗i₁} ∗ … ∗ (c t^{n_k})^{∗i_k}` over `𝕂[t]` with the flip
    /// braiding, `c = 1` (Zudilin) or `c = 1 − q` (Bradley).
    pub fn product_element(&self, kind: ZetaKind, index: &ZetaIndex, ns: &[u32]) -> Result<Element> {
        let c = match kind {
            ZetaKind::Zudilin => Scalar::one(),
            ZetaKind::Bradley => Scalar::one() - Scalar::q(),
        };
        let mut factors = Vec::new();
        for (&i, &n) in index.parts().iter().zip(ns) {
            let letter = Element::term(Word::from_ids(&[n]), c.clone());
            factors.extend(std::iter::repeat_n(letter, i as usize));
        }
        self.rb.source().left_fold(&factors)
    }

    fn series_term(&self, kind: ZetaKind, index: &ZetaIndex, ns: &[u32]) -> Result<PolyQT> {
        let image = self.rb.fbar(&self.product_element(kind, index, ns)?)?;
        Ok(PolyQT(match kind {
            ZetaKind::Zudilin => image,
            ZetaKind::Bradley => {
                let shift = Scalar::q_pow(-(ns.iter().map(|&n| n as i64).sum::<i64>()));
                image.scale(&shift)
            }
        }))
    }

    fn check_index(kind: ZetaKind, index: &ZetaIndex) -> Result<()> {
        if kind == ZetaKind::Bradley && !index.is_admissible() {
            return Err(Error::NotAdmissible);
        }
        Ok(())
    }

    /// The truncated `t`-series `Σ_{N≥n₁>…} f̄(…)` before evaluation.
    pub fn t_series(&self, kind: ZetaKind, index: &ZetaIndex, n: u32, exec: Exec) -> Result<PolyQT> {
        Self::check_index(kind, index)?;
        let tuples = decreasing_tuples(index.depth(), n);
        let terms = par::map(exec, &tuples, |ns| self.series_term(kind, index, ns));
        let mut acc = LinearV::zero();
        for t in terms {
            acc += t?.0;
        }
        Ok(PolyQT(acc))
    }

    /// The partial sum over `N ≥ n₁ > … > n_k ≥ 1`; zero when `N < k`.
    pub fn truncated(&self, kind: ZetaKind, index: &ZetaIndex, n: u32, route: Route, exec: Exec) -> Result<Scalar> {
        Self::check_index(kind, index)?;
        match route {
            Route::Direct => {
                let tuples = decreasing_tuples(index.depth(), n);
                let terms = par::map(exec, &tuples, |ns| Self::direct_term(kind, index, ns));
                terms.into_iter().sum()
            }
            Route::Series => Ok(self.t_series(kind, index, n, exec)?.eval_at_one()),
        }
    }

    pub fn zudilin(&self, index: &ZetaIndex, n: u32, route: Route) -> Result<Scalar> {
        self.truncated(ZetaKind::Zudilin, index, n, route, Exec::default())
    }

    pub fn bradley(&self, index: &ZetaIndex, n: u32, route: Route) -> Result<Scalar> {
        self.truncated(ZetaKind::Bradley, index, n, route, Exec::default())
    }
}

/// `f̄` on `tⁱ¹⊗…⊗tⁱⁿ` against [`kt_fbar_closed`] for every index of
/// length `≤ max_len` with entries `≤ max_entry`.
pub fn check_kt_closed_formula(rb: &RotaBaxter, max_len: usize, max_entry: u32) -> Report {
    let mut r = Report::new(format!("closed formula for f̄ [{}]", rb.name));
    let letters: Vec<Letter> = (1..=max_entry).map(Letter).collect();
    for len in 1..=max_len {
        for w in all_words(&letters, len) {
            let res = (|| -> Result<bool> {
                Ok(rb.fbar_word(&w)? == kt_fbar_closed(&w.ids())?.0)
            })();
            match res {
                Ok(ok) => r.check(ok, || format!("index {:?}", w.ids())),
                Err(e) => r.fail(format!("{:?}: {e}", w.ids())),
            }
        }
    }
    r
}

/// `f̄((tⁿ)^{∗i}) = f̄(tⁿ)^i = q^{ni}t^{ni}/(1−qⁿ)^i` for `n, i ≤ max`.
pub fn check_kt_powers(rb: &RotaBaxter, max: u32) -> Report {
    let mut r = Report::new(format!("f̄ of quasi-shuffle powers [{}]", rb.name));
    for n in 1..=max {
        for i in 1..=max {
            let res = (|| -> Result<bool> {
                let t = Element::word(&[n]);
                let lhs = rb.fbar(&rb.source().power(&t, i as usize)?)?;
                let (n, i) = (n as i64, i as i64);
                let c = Scalar::q_pow(n * i).checked_div(&(Scalar::one() - Scalar::q_pow(n)).pow(i)?)?;
                let by_power = (1..i).try_fold(rb.fbar(&t)?, |acc, _| rb.mul(&acc, &rb.fbar(&t)?))?;
                Ok(lhs == LinearV::term(Letter((n * i) as u32), c) && lhs == by_power)
            })();
            match res {
                Ok(ok) => r.check(ok, || format!("n={n}, i={i}")),
                Err(e) => r.fail(format!("n={n}, i={i}: {e}")),
            }
        }
    }
    r
}

/// `T(𝕂[t])` acts on `𝕂[t]` by `w·tᵐ = f̄(w)tᵐ`; from `1` the length-one
/// words `tˢ` reach a nonzero multiple of every `tˢ`, `1 ≤ s ≤ max`.
pub fn check_kt_cyclic(rb: &RotaBaxter, max: u32) -> Report {
    let mut r = Report::new(format!("K[t] is cyclic over T(K[t]) [{}]", rb.name));
    for s in 1..=max {
        let res = (|| -> Result<bool> {
            let image = rb.mul(&rb.fbar_word(&Word::from_ids(&[s]))?, &rb.unit())?;
            Ok(image.len() == 1 && !image.coeff(&Letter(s)).is_zero())
        })();
        match res {
            Ok(ok) => r.check(ok, || format!("t^{s} not reached")),
            Err(e) => r.fail(format!("t^{s}: {e}")),
        }
    }
    r
}
