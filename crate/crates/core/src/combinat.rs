//! Symmetric groups, shuffles, mixable shuffles, marked permutations and
//! compositions.
//!
//! Conventions used throughout the crate:
//!
//! * a [`Permutation`] is stored in one-line notation with 1-based values,
//!   `images[k-1] = w(k)`;
//! * composition is `(u ∘ v)(k) = u(v(k))`;
//! * a generator word `[i1, ..., il]` denotes `s_{i1} ∘ ... ∘ s_{il}`;
//! * pairs `(k, k+1)` in admissible/ascent sets are stored by their first
//!   entry `k`.
//!
//! Enumerations return their results in lexicographic order of one-line
//! notation, then of the sorted pair set.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let ok = v >= 1 && (v as usize) <= n && !seen[v as usize - 1];
            if !ok {
                return Err(Error::Invalid(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The simple transposition `s_i` of `S_n`.
    pub fn generator(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut w = Permutation::identity(n);
        w.images.swap(i - 1, i);
        w
    }

    /// Product of generators `s_{i1} ∘ ... ∘ s_{il}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Self {
        word.iter().fold(Permutation::identity(n), |acc, &i| {
            acc.compose(&Permutation::generator(i, n))
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `w(k)` for 1-based `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count())
            .sum()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Lexicographically smallest reduced word of `w`.
///
/// Repeatedly strips the smallest left descent: `s_i ∘ w` is shorter iff the
/// value `i+1` appears before `i` in one-line notation.
pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    let mut cur = w.images.clone();
    let n = cur.len();
    let mut pos = vec![0usize; n + 1];
    for (p, &v) in cur.iter().enumerate() {
        pos[v as usize] = p;
    }
    let mut word = Vec::new();
    'outer: loop {
        for i in 1..n {
            if pos[i + 1] < pos[i] {
                word.push(i);
                cur.swap(pos[i], pos[i + 1]);
                pos.swap(i, i + 1);
                continue 'outer;
            }
        }
        break;
    }
    word
}

/// Every reduced word of `w`, sorted lexicographically.
pub fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    fn rec(w: &Permutation, out: &mut Vec<Vec<usize>>, suffix: &mut Vec<usize>) {
        if w.is_identity() {
            let mut word = suffix.clone();
            word.reverse();
            out.push(word);
            return;
        }
        let n = w.len();
        // right descents: w ∘ s_i shorter iff w(i) > w(i+1)
        for i in 1..n {
            if w.apply(i) > w.apply(i + 1) {
                let shorter = w.compose(&Permutation::generator(i, n));
                suffix.push(i);
                rec(&shorter, out, suffix);
                suffix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(w, &mut out, &mut Vec::new());
    out.sort();
    out.dedup();
    out
}

/// The block swap `χ_{ij}`: `1..i ↦ j+1..j+i` and `i+1..i+j ↦ 1..j`.
pub fn chi(i: usize, j: usize) -> Permutation {
    let images = (1..=i)
        .map(|k| (j + k) as u32)
        .chain((1..=j).map(|k| k as u32))
        .collect();
    Permutation { images }
}

/// `1_{S_left} × w × 1_{S_right}`.
pub fn shift_embed(w: &Permutation, left: usize, right: usize) -> Permutation {
    let images = (1..=left as u32)
        .chain(w.images.iter().map(|&v| v + left as u32))
        .chain((1..=right as u32).map(|k| k + (left + w.len()) as u32))
        .collect();
    Permutation { images }
}

/// Every subset of `items`, in binary-counter order, each sorted ascending.
fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << items.len());
    for mask in 0u64..(1u64 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &k)| k)
                .collect(),
        );
    }
    out
}

fn sort_by_w_then_s<T, F>(v: &mut [T], key: F)
where
    F: Fn(&T) -> (&Permutation, &Vec<usize>),
{
    v.sort_by(|a, b| {
        let (wa, sa) = key(a);
        let (wb, sb) = key(b);
        wa.cmp(wb).then_with(|| sa.cmp(sb))
    });
}

/// All `(i,j)`-shuffles: `w(1)<…<w(i)` and `w(i+1)<…<w(i+j)`.
pub fn enumerate_shuffles(i: usize, j: usize) -> Vec<Permutation> {
    let n = i + j;
    let mut out = Vec::new();
    // choose the image set of the first block
    fn rec(start: usize, n: usize, left: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(chosen.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < left {
                break;
            }
            chosen.push(v as u32);
            rec(v + 1, n, left - 1, chosen, out);
            chosen.pop();
        }
    }
    let mut firsts = Vec::new();
    rec(1, n, i, &mut Vec::new(), &mut firsts);
    for first in firsts {
        let rest = (1..=n as u32).filter(|v| !first.contains(v));
        let images: Vec<u32> = first.iter().copied().chain(rest).collect();
        out.push(Permutation { images });
    }
    out.sort();
    out
}

/// Admissible pairs `𝒯^w = {(k,k+1) : w⁻¹(k) ≤ i < w⁻¹(k+1)}`, by `k`.
pub fn admissible_pairs(w: &Permutation, i: usize) -> Vec<usize> {
    let inv = w.inverse();
    (1..w.len())
        .filter(|&k| inv.apply(k) <= i && inv.apply(k + 1) > i)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixableShuffle {
    pub w: Permutation,
    pub pairs: Vec<usize>,
    pub i: usize,
    pub j: usize,
}

impl MixableShuffle {
    pub fn composition(&self) -> Composition {
        cp_mixable(&self.pairs, self.i + self.j)
    }
}

/// All mixable `(i,j)`-shuffles `(w, S)` with `S ⊂ 𝒯^w`.
pub fn enumerate_mixable(i: usize, j: usize) -> Vec<MixableShuffle> {
    let mut out = Vec::new();
    for w in enumerate_shuffles(i, j) {
        let adm = admissible_pairs(&w, i);
        for s in subsets(&adm) {
            out.push(MixableShuffle {
                w: w.clone(),
                pairs: s,
                i,
                j,
            });
        }
    }
    sort_by_w_then_s(&mut out, |m| (&m.w, &m.pairs));
    out
}

/// A composition of `total` into positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a composition")));
        }
        Ok(Composition { parts })
    }

    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Inserts a part `1` after the first `k` parts (`0 ≤ k ≤ len`).
    pub fn insert_one(&self, k: usize) -> Composition {
        assert!(k <= self.len(), "insert position {k} out of range");
        let mut parts = self.parts.clone();
        parts.insert(k, 1);
        Composition { parts }
    }

    /// Increments part `k` (1-based, `1 ≤ k ≤ len`).
    pub fn bump(&self, k: usize) -> Composition {
        assert!(k >= 1 && k <= self.len(), "bump position {k} out of range");
        let mut parts = self.parts.clone();
        parts[k - 1] += 1;
        Composition { parts }
    }

    /// `self ⪰ coarser`: consecutive groups of parts of `self` sum to the
    /// parts of `coarser`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        let mut it = self.parts.iter();
        for &target in &coarser.parts {
            let mut acc = 0;
            while acc < target {
                match it.next() {
                    Some(&p) => acc += p,
                    None => return false,
                }
            }
            if acc != target {
                return false;
            }
        }
        it.next().is_none()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// `cp(S)` for a mixable shuffle: every selected pair `(k,k+1)` becomes a
/// part 2, all other positions parts 1.
///
/// Admissible pairs of a shuffle are never adjacent: `(k,k+1)` and
/// `(k+1,k+2)` would need `w⁻¹(k+1)` both `≤ i` and `> i`.
pub fn cp_mixable(pairs: &[usize], n: usize) -> Composition {
    let mut parts = Vec::with_capacity(n);
    let mut pos = 1;
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    for k in sorted {
        assert!(k >= pos && k < n, "pair ({k},{}) does not fit", k + 1);
        parts.extend(std::iter::repeat_n(1, k - pos));
        parts.push(2);
        pos = k + 2;
    }
    parts.extend(std::iter::repeat_n(1, (n + 1).saturating_sub(pos)));
    Composition { parts }
}

/// Ascent pairs `𝒮^w = {(k,k+1) : w⁻¹(k) < w⁻¹(k+1)}`, by `k`.
pub fn ascent_pairs(w: &Permutation) -> Vec<usize> {
    let inv = w.inverse();
    (1..w.len()).filter(|&k| inv.apply(k) < inv.apply(k + 1)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedPermutation {
    pub w: Permutation,
    pub pairs: Vec<usize>,
}

impl MarkedPermutation {
    pub fn composition(&self) -> Composition {
        cp_marked(&self.pairs, self.w.len())
    }
}

/// All `(w, S)` with `w ∈ S_n` and `S ⊂ 𝒮^w`.
pub fn enumerate_marked(n: usize) -> Vec<MarkedPermutation> {
    let mut out = Vec::new();
    for w in all_permutations(n) {
        let asc = ascent_pairs(&w);
        for s in subsets(&asc) {
            out.push(MarkedPermutation {
                w: w.clone(),
                pairs: s,
            });
        }
    }
    sort_by_w_then_s(&mut out, |m| (&m.w, &m.pairs));
    out
}

/// Run-merged `cp(S)`: a maximal run of `r` consecutive selected pairs
/// becomes one part `r + 1`.
pub fn cp_marked(pairs: &[usize], n: usize) -> Composition {
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut parts = Vec::with_capacity(n);
    let mut pos = 1;
    let mut idx = 0;
    while idx < sorted.len() {
        let start = sorted[idx];
        assert!(start >= pos && start < n, "pair ({start},{}) does not fit", start + 1);
        let mut run = 1;
        while idx + run < sorted.len() && sorted[idx + run] == start + run {
            run += 1;
        }
        parts.extend(std::iter::repeat_n(1, start - pos));
        parts.push(run + 1);
        pos = start + run + 1;
        idx += run;
    }
    parts.extend(std::iter::repeat_n(1, (n + 1).saturating_sub(pos)));
    Composition { parts }
}

/// `cp(S)_k`: a part 1 inserted after the first `k` parts of `cp(S)`.
pub fn cp_insert(pairs: &[usize], n: usize, k: usize) -> Composition {
    cp_marked(pairs, n).insert_one(k)
}

/// `cp(S)^k`: part `k` (1-based) of `cp(S)` incremented.
pub fn cp_bump(pairs: &[usize], n: usize, k: usize) -> Composition {
    cp_marked(pairs, n).bump(k)
}

/// `L(w,i) = (χ_{1,i-1} × 1) ∘ (1 × w)`, the unique permutation of
/// `S_{n+1}` sending 1 to `i` that restricts to `w` on `2..n+1`.
pub fn l_map(w: &Permutation, i: usize) -> Permutation {
    let n = w.len();
    assert!(i >= 1 && i <= n + 1, "L(w,{i}) needs 1 ≤ i ≤ {}", n + 1);
    let left = shift_embed(&chi(1, i - 1), 0, n + 1 - i);
    left.compose(&shift_embed(w, 1, 0))
}

/// `w_i ∈ S_{2i}`: `k ↦ 2k-1` for `k ≤ i`, `i+k ↦ 2k`.
pub fn w_interleave(i: usize) -> Permutation {
    let images = (1..=i)
        .map(|k| (2 * k - 1) as u32)
        .chain((1..=i).map(|k| (2 * k) as u32))
        .collect();
    Permutation { images }
}

/// `C(w)`: the composition whose partial sums are the descents
/// `{l : w(l) > w(l+1)}`.
pub fn descent_composition(w: &Permutation) -> Composition {
    let n = w.len();
    let mut parts = Vec::new();
    let mut last = 0;
    for l in 1..n {
        if w.apply(l) > w.apply(l + 1) {
            parts.push(l - last);
            last = l;
        }
    }
    parts.push(n - last);
    Composition { parts }
}

/// Every composition refining `j`, in lexicographic order.
pub fn refinements(j: &Composition) -> Vec<Composition> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &part in &j.parts {
        let pieces = compositions_of(part);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p.parts());
                    v
                })
            })
            .collect();
    }
    let mut res: Vec<Composition> = out.into_iter().map(|parts| Composition { parts }).collect();
    res.sort();
    res
}

/// All compositions of `n ≥ 1`, in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    assert!(n >= 1, "compositions of 0 are not defined");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut parts = Vec::new();
        let mut cur = 1;
        for b in 0..n - 1 {
            if mask >> b & 1 == 1 {
                parts.push(cur);
                cur = 1;
            } else {
                cur += 1;
            }
        }
        parts.push(cur);
        out.push(Composition { parts });
    }
    out.sort();
    out
}

/// Inversion set `ι(w) = {(i,j) : i<j, w(i)>w(j)}`.
pub fn inversions(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if w.apply(i) > w.apply(j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every permutation of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}

/// JSON record for enumeration output: `{"w":[...],"S":[[k,k+1],...],"cp":[...]}`.
#[derive(Serialize)]
pub struct EnumRecord {
    pub w: Vec<u32>,
    #[serde(rename = "S")]
    pub s: Vec<[usize; 2]>,
    pub cp: Composition,
}

impl EnumRecord {
    pub fn new(w: &Permutation, pairs: &[usize], cp: Composition) -> Self {
        EnumRecord {
            w: w.images.clone(),
            s: pairs.iter().map(|&k| [k, k + 1]).collect(),
            cp,
        }
    }
}

pub fn pairs_as_set(pairs: &[usize]) -> BTreeSet<usize> {
    pairs.iter().copied().collect()
}
