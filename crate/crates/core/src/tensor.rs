//! Operators on `T(V)`: braid lifts `T^σ_w`, block braidings `β_ij`,
//! iterated products `m^k` and `m_I`, and `T^σ_(w,S) = m_cp(S) ∘ T^σ_w`.
//!
//! Homogeneity is enforced per operation: [`Element`]s may mix degrees, but
//! lifts act on one degree at a time.

use crate::braided::{BraidedAlgebra, BraidedSpace, Braiding};
use crate::combinat::{chi, reduced_word, Composition, Permutation};
use crate::error::{Error, Result};
use crate::linear::{Element, Letter, LinearV, Word};
use crate::scalar::Scalar;

impl BraidedSpace {
    /// `σ` at positions `i, i+1` (1-based) of every word of `x`.
    pub fn sigma_at(&self, x: &Element, i: usize) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in x {
            let (a, b) = (w[i - 1], w[i]);
            for (&(u, v), d) in &self.braid_pair(a, b)? {
                let mut letters = w.to_vec();
                letters[i - 1] = u;
                letters[i] = v;
                out.add_term(Word::new(letters), c * d);
            }
        }
        Ok(out)
    }

    /// `σ_{i1} ⋯ σ_{il}` applied to a word, `σ_{il}` first.
    pub fn apply_generators(&self, gens: &[usize], word: &Word) -> Result<Element> {
        if let Some(single) = self.apply_generators_scalar(gens, word)? {
            return Ok(single);
        }
        let mut cur = Element::basis(word.clone());
        for &i in gens.iter().rev() {
            cur = self.sigma_at(&cur, i)?;
        }
        Ok(cur)
    }

    // One-term fast path for braidings of the form σ(a⊗b) = c b⊗a.
    fn apply_generators_scalar(&self, gens: &[usize], word: &Word) -> Result<Option<Element>> {
        if matches!(self.braiding, Braiding::General { .. }) {
            return Ok(None);
        }
        for &l in word.iter() {
            self.check_letter(l)?;
        }
        let mut letters = word.to_vec();
        let mut coeff = Scalar::one();
        for &i in gens.iter().rev() {
            let c = self
                .braiding
                .swap_scalar(letters[i - 1], letters[i])?
                .expect("scalar braiding");
            if !c.is_one() {
                coeff *= &c;
            }
            letters.swap(i - 1, i);
        }
        Ok(Some(Element::term(Word::new(letters), coeff)))
    }

    /// `T^σ_w` on one word of length `w.len()`, through the smallest reduced
    /// word of `w`. Memoized for table braidings.
    pub fn lift_word(&self, w: &Permutation, word: &Word) -> Result<Element> {
        if word.len() != w.len() {
            return Err(Error::DegreeMismatch {
                expected: w.len(),
                found: word.len(),
            });
        }
        if w.is_identity() {
            return Ok(Element::basis(word.clone()));
        }
        if !matches!(self.braiding, Braiding::General { .. }) {
            return self.apply_generators(&reduced_word(w), word);
        }
        let key = (w.clone(), word.clone());
        self.lift_cache
            .get_or_try_insert(&key, || self.apply_generators(&reduced_word(w), word))
    }

    /// `T^σ_w` on a homogeneous element of degree `w.len()`.
    pub fn lift(&self, w: &Permutation, x: &Element) -> Result<Element> {
        match x.degree()? {
            None => Ok(Element::zero()),
            Some(d) if d != w.len() => Err(Error::DegreeMismatch {
                expected: w.len(),
                found: d,
            }),
            Some(_) => x.try_map_linear(|word| self.lift_word(w, word)),
        }
    }

    /// `β_ij` on one word of length `i+j`; identity when `i = 0` or `j = 0`.
    pub fn beta_word(&self, i: usize, j: usize, word: &Word) -> Result<Element> {
        if word.len() != i + j {
            return Err(Error::DegreeMismatch {
                expected: i + j,
                found: word.len(),
            });
        }
        if i == 0 || j == 0 {
            return Ok(Element::basis(word.clone()));
        }
        self.lift_word(&chi(i, j), word)
    }

    /// `β_ij` on a homogeneous element of degree `i+j`.
    pub fn beta(&self, i: usize, j: usize, x: &Element) -> Result<Element> {
        match x.degree()? {
            None => Ok(Element::zero()),
            Some(_) => x.try_map_linear(|w| self.beta_word(i, j, w)),
        }
    }
}

impl BraidedAlgebra {
    /// `m^{n-1}(a₁⊗…⊗aₙ) = a₁(a₂(⋯aₙ))` for a nonempty word.
    pub fn m_word(&self, word: &[Letter]) -> Result<LinearV> {
        let (&last, rest) = word.split_last().ok_or(Error::DegreeMismatch { expected: 1, found: 0 })?;
        self.space.check_letter(last)?;
        let mut acc = LinearV::basis(last);
        for &a in rest.iter().rev() {
            if acc.is_zero() {
                break;
            }
            acc = self.multiply_linear(&LinearV::basis(a), &acc)?;
        }
        Ok(acc)
    }

    /// `m^k` on a homogeneous element of degree `k+1`, as a degree-1 element.
    pub fn m_power(&self, k: usize, x: &Element) -> Result<Element> {
        x.try_map_linear(|w| {
            if w.len() != k + 1 {
                return Err(Error::DegreeMismatch {
                    expected: k + 1,
                    found: w.len(),
                });
            }
            Ok(self.m_word(w)?.map_keys(|&l| Word::letter(l)))
        })
    }

    /// `m_I = m^{i1-1} ⊗ ⋯ ⊗ m^{ik-1}` on one word of length `|I|`.
    pub fn m_composition_word(&self, parts: &[usize], word: &Word) -> Result<Element> {
        let total: usize = parts.iter().sum();
        if word.len() != total {
            return Err(Error::DegreeMismatch {
                expected: total,
                found: word.len(),
            });
        }
        let mut out = Element::basis(Word::empty());
        let mut pos = 0;
        for &p in parts {
            let block = if p == 1 {
                self.space.check_letter(word[pos])?;
                LinearV::basis(word[pos])
            } else {
                self.m_word(&word[pos..pos + p])?
            };
            if block.is_zero() {
                return Ok(Element::zero());
            }
            let mut next = Element::zero();
            for (w, c) in &out {
                for (&l, d) in &block {
                    next.add_term(w.append(l), c * d);
                }
            }
            out = next;
            pos += p;
        }
        Ok(out)
    }

    pub fn m_composition(&self, i: &Composition, x: &Element) -> Result<Element> {
        x.try_map_linear(|w| self.m_composition_word(i.parts(), w))
    }

    /// `T^σ_(w,S) = m_cp ∘ T^σ_w` on one word.
    pub fn t_mixable_word(&self, w: &Permutation, cp: &Composition, word: &Word) -> Result<Element> {
        let lifted = self.space.lift_word(w, word)?;
        if cp.parts().iter().all(|&p| p == 1) {
            return Ok(lifted);
        }
        self.m_composition(cp, &lifted)
    }

    pub fn t_mixable(&self, w: &Permutation, cp: &Composition, x: &Element) -> Result<Element> {
        x.try_map_linear(|word| self.t_mixable_word(w, cp, word))
    }
}
