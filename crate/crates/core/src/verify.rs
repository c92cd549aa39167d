//! Exhaustive verification sweeps.
//!
//! Every sweep compares independently computed sides exactly and returns a
//! [`Report`]. Sweeps over many inputs take an [`Exec`] so they can run on
//! the rayon pool or sequentially; results do not depend on the choice.

use std::collections::BTreeSet;

use crate::braided::{
    adjoint_coalgebra, all_pairs, all_triples, check_adjoint_transposition, check_braided_algebra,
    check_braided_coalgebra, check_diagonal_constraints, check_invertible, check_yang_baxter, fixtures,
    BraidedAlgebra, BraidedSpace, Braiding, HoffmanBracket,
};
use crate::combinat::{
    all_permutations, all_reduced_words, enumerate_marked, enumerate_mixable, Permutation,
};
use crate::dualcoalg::DualContext;
use crate::error::{Error, Result};
use crate::linear::{Element, Letter, LinearV, Word};
use crate::par::{self, Exec};
use crate::qshuffle::{all_words, QShuffle};
use crate::report::Report;
use crate::rotabaxter::{check_kt_closed_formula, check_kt_cyclic, check_kt_powers, RotaBaxter, Route, Zeta, ZetaIndex, ZetaKind};
use crate::scalar::Scalar;

/// An algebra fixture with the letters its sweeps range over.
pub struct Fixture {
    pub ctx: QShuffle,
    pub letters: Vec<Letter>,
}

impl Fixture {
    pub fn new(alg: BraidedAlgebra, letters: Vec<Letter>) -> Self {
        Fixture {
            ctx: QShuffle::new(alg),
            letters,
        }
    }

    /// Finite fixtures use all letters; `𝕂[t]` uses `t⁰, t¹, t²` and
    /// `A_inf` uses `e₁, e₂, e₃`.
    pub fn by_name(name: &str) -> Result<Self> {
        let alg = fixtures::by_name(name)?;
        let letters = match alg.letters() {
            crate::braided::LetterSet::Finite(s) => s.iter().copied().collect(),
            crate::braided::LetterSet::From { min } => (*min..*min + 3).map(Letter).collect(),
        };
        Ok(Fixture::new(alg, letters))
    }

    pub fn name(&self) -> &str {
        &self.ctx.algebra().name
    }

    /// Words of length `1..=max` over the sweep letters.
    pub fn words(&self, max: usize) -> Vec<Word> {
        (1..=max).flat_map(|n| all_words(&self.letters, n)).collect()
    }

    /// Nonempty word pairs with total length `≤ max`.
    pub fn pairs(&self, max: usize) -> Vec<(Word, Word)> {
        let by_len: Vec<Vec<Word>> = (0..=max).map(|n| all_words(&self.letters, n)).collect();
        let mut out = Vec::new();
        for i in 1..max {
            for j in 1..=max - i {
                for u in &by_len[i] {
                    out.extend(by_len[j].iter().map(|v| (u.clone(), v.clone())));
                }
            }
        }
        out
    }
}

/// The three fixtures of the product sweeps: `A4`, `Kt-flip`, and the
/// graded fixture with degrees `(1,1,2)`.
pub fn product_fixtures() -> Vec<Fixture> {
    ["A4", "Kt-flip", "hoffman:1,1,2"]
        .iter()
        .map(|n| Fixture::by_name(n).expect("shipped fixture"))
        .collect()
}

fn record<T>(r: &mut Report, res: Result<T>, ok: impl FnOnce(&T) -> bool, witness: impl FnOnce() -> String) {
    match res {
        Ok(v) => r.check(ok(&v), witness),
        Err(e) => r.fail(format!("{}: {e}", witness())),
    }
}

fn words_text(u: &Word, v: &Word) -> String {
    format!("{u:?} ⋈ {v:?}")
}

/// `|𝔖̄_{1,1}| = 3` with the listed elements, and `|𝔖̄ₙ|` for `n ≤ max_n`
/// against an independent brute force: marked permutations of `[n]` are in
/// bijection with ordered set partitions, counted here as surjections
/// `[n] → [k]` by exhausting all maps `[n] → [n]`.
pub fn check_enumeration(max_n: usize) -> Report {
    let mut r = Report::new("mixable shuffle and marked permutation counts");
    let m11 = enumerate_mixable(1, 1);
    let got: BTreeSet<(Vec<u32>, Vec<usize>)> = m11.iter().map(|m| (m.w.images().to_vec(), m.pairs.clone())).collect();
    let expected: BTreeSet<(Vec<u32>, Vec<usize>)> =
        [(vec![1, 2], vec![]), (vec![1, 2], vec![1]), (vec![2, 1], vec![])].into_iter().collect();
    r.check(m11.len() == 3 && got == expected, || format!("S̄_(1,1) = {got:?}"));
    for n in 1..=max_n {
        let count = enumerate_marked(n).len();
        let oracle = surjection_count(n);
        r.check(count == oracle, || format!("|S̄_{n}| = {count}, brute force {oracle}"));
    }
    r
}

/// Number of maps `[n] → [n]` whose image is `{1..k}` for some `k`.
pub fn surjection_count(n: usize) -> usize {
    let mut count = 0;
    let mut f = vec![0usize; n];
    loop {
        let image: BTreeSet<usize> = f.iter().copied().collect();
        if image.iter().copied().eq(0..image.len()) {
            count += 1;
        }
        // next map in base-n counting
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            f[k] += 1;
            if f[k] < n {
                break;
            }
            f[k] = 0;
            k += 1;
        }
    }
}

/// `qqsh = qqsh_right = qqsh_explicit` on all nonempty word pairs with
/// `i + j ≤ max_total`.
pub fn check_product_routes(fx: &Fixture, max_total: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("left = right = explicit [{}]", fx.name()));
    let pairs = fx.pairs(max_total);
    let results = par::map(exec, &pairs, |(u, v)| -> Result<(bool, bool)> {
        let left = fx.ctx.left_words(u, v)?;
        Ok((left == fx.ctx.right_words(u, v)?, left == fx.ctx.explicit_words(u, v)?))
    });
    for ((u, v), res) in pairs.iter().zip(results) {
        match res {
            Ok((a, b)) => {
                r.check(a, || format!("left ≠ right on {}", words_text(u, v)));
                r.check(b, || format!("left ≠ explicit on {}", words_text(u, v)));
            }
            Err(e) => r.fail(format!("{}: {e}", words_text(u, v))),
        }
    }
    r
}

/// `a₁ ⋈ ⋯ ⋈ aₙ` by the marked-permutation sum against the left fold, on
/// every letter sequence of length `≤ max_n`.
pub fn check_nfold(fx: &Fixture, max_n: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("n-fold explicit = left fold [{}]", fx.name()));
    let words = fx.words(max_n);
    let results = par::map(exec, &words, |w| -> Result<bool> {
        let xs: Vec<Element> = w.iter().map(|&l| Element::basis(Word::letter(l))).collect();
        Ok(fx.ctx.nfold_explicit(&xs)? == fx.ctx.left_fold(&xs)?)
    });
    for (w, res) in words.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("letters {:?}", w.ids()));
    }
    r
}

/// `e_i^{⋈k}` by the closed formula against iterated products on `A_inf`,
/// plus the exact value at `i = 1, k = 2`.
pub fn check_power_formula(max_k: usize, max_i: u32) -> Report {
    let mut r = Report::new("closed power formula [A_inf]");
    let ctx = QShuffle::new(fixtures::a_inf());
    let mut k2 = Element::basis(Word::from_ids(&[2]));
    k2.add_term(Word::from_ids(&[1, 1]), Scalar::one() + Scalar::q());
    record(&mut r, ctx.power_closed(Letter(1), 2), |v| *v == k2, || "e1^2 ≠ e2 + (1+q) e1|e1".into());
    for i in 1..=max_i {
        for k in 0..=max_k {
            let res = (|| -> Result<bool> {
                Ok(ctx.power_closed(Letter(i), k)? == ctx.power(&Element::basis(Word::from_ids(&[i])), k)?)
            })();
            record(&mut r, res, |&ok| ok, || format!("e{i}^{k}"));
        }
    }
    r
}

/// `(x⋈y)⋈z = x⋈(y⋈z)` on nonempty basis triples of total length
/// `≤ max_total`, and `1⋈x = x⋈1 = x` on words of length `≤ max_total`.
pub fn check_associativity(fx: &Fixture, max_total: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("associativity and unit [{}]", fx.name()));
    let by_len: Vec<Vec<Word>> = (0..=max_total).map(|n| all_words(&fx.letters, n)).collect();
    let mut triples = Vec::new();
    for i in 1..=max_total {
        for j in 1..=max_total - i {
            for k in 1..=max_total - i - j {
                for u in &by_len[i] {
                    for v in &by_len[j] {
                        for w in &by_len[k] {
                            triples.push((u.clone(), v.clone(), w.clone()));
                        }
                    }
                }
            }
        }
    }
    let words = fx.words(max_total);
    let results = par::map(exec, &triples, |(u, v, w)| -> Result<bool> {
        let (x, y, z) = (Element::basis(u.clone()), Element::basis(v.clone()), Element::basis(w.clone()));
        let left = fx.ctx.qqsh(&fx.ctx.qqsh(&x, &y)?, &z)?;
        Ok(left == fx.ctx.qqsh(&x, &fx.ctx.qqsh(&y, &z)?)?)
    });
    for ((u, v, w), res) in triples.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("({u:?} ⋈ {v:?}) ⋈ {w:?}"));
    }
    for u in &words {
        let x = Element::basis(u.clone());
        let res = (|| -> Result<bool> {
            Ok(fx.ctx.qqsh(&Element::one(), &x)? == x && fx.ctx.qqsh(&x, &Element::one())? == x)
        })();
        record(&mut r, res, |&ok| ok, || format!("unit law on {u:?}"));
    }
    r
}

/// `δ(x⋈y) = (⋈⊗̲⋈)(id⊗β⊗id)(δx⊗̲δy)` on basis pairs (empty word
/// included) of total length `≤ max_total`.
pub fn check_bialgebra(fx: &Fixture, max_total: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("braided bialgebra compatibility [{}]", fx.name()));
    let by_len: Vec<Vec<Word>> = (0..=max_total).map(|n| all_words(&fx.letters, n)).collect();
    let mut pairs = Vec::new();
    for i in 0..=max_total {
        for j in 0..=max_total - i {
            for u in &by_len[i] {
                pairs.extend(by_len[j].iter().map(|v| (u.clone(), v.clone())));
            }
        }
    }
    let results = par::map(exec, &pairs, |(u, v)| {
        fx.ctx.check_bialgebra_compat(&Element::basis(u.clone()), &Element::basis(v.clone()))
    });
    for ((u, v), res) in pairs.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("δ({})", words_text(u, v)));
    }
    r
}

/// Primitive elements of degree `2..=max` are zero and every letter is
/// primitive.
pub fn check_primitives(fx: &Fixture, max: usize) -> Report {
    let mut r = Report::new(format!("primitives are degree one [{}]", fx.name()));
    for n in 1..=max {
        let expected = if n == 1 { fx.letters.len() } else { 0 };
        record(
            &mut r,
            fx.ctx.primitive_dimension(&fx.letters, n),
            |&d| d == expected,
            || format!("primitive dimension in degree {n}"),
        );
    }
    r
}

/// Both factorizations through `L(w, i)` for every marked permutation with
/// `n ≤ max_n`, on all words of length `n + 1` over `letters`.
pub fn check_l_factorization(fx: &Fixture, letters: &[Letter], max_n: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("factorization through L(w,i) [{}]", fx.name()));
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for m in enumerate_marked(n) {
            for w in all_words(letters, n + 1) {
                jobs.push((m.clone(), w));
            }
        }
    }
    let results = par::map(exec, &jobs, |(m, w)| fx.ctx.check_l_factorization(m, w));
    for ((m, w), res) in jobs.iter().zip(results) {
        match res {
            Ok((checked, failures)) => {
                r.checked += checked;
                for f in failures {
                    r.fail(f);
                }
            }
            Err(e) => r.fail(format!("w={:?} S={:?} {w:?}: {e}", m.w, m.pairs)),
        }
    }
    r
}

/// Specializations: with `m = 0` the explicit product of words with
/// distinct letters has `binomial(i+j, i)` terms, all with coefficient 1
/// under the flip; with the flip and a product that never collides, the
/// term count is `Σ_k (i+j−k)!/(k!(i−k)!(j−k)!)`.
pub fn check_specializations(max_total: usize) -> Report {
    let mut r = Report::new("shuffle and quasi-shuffle specializations");
    let zero = QShuffle::new(fixtures::a_inf().with_zero_multiplication());
    let zero_flip = QShuffle::new(fixtures::a_inf().with_flip().with_zero_multiplication());
    let full_flip = QShuffle::new(fixtures::a_inf().with_flip());
    let fact = |n: usize| -> u128 { (1..=n as u128).product() };
    for i in 1..max_total {
        for j in 1..=max_total - i {
            // distinct powers of two: products never coincide with each
            // other or with word letters
            let u: Word = (0..i).map(|k| Letter(1 << k)).collect();
            let v: Word = (i..i + j).map(|k| Letter(1 << k)).collect();
            let binom = (fact(i + j) / (fact(i) * fact(j))) as usize;
            let res = zero.explicit_words(&u, &v);
            record(&mut r, res, |e| e.len() == binom, || format!("quantum shuffle term count ({i},{j})"));
            let res = zero_flip.explicit_words(&u, &v);
            record(
                &mut r,
                res,
                |e| e.len() == binom && e.iter().all(|(_, c)| c.is_one()),
                || format!("classical shuffle ({i},{j})"),
            );
            let expected: u128 = (0..=i.min(j))
                .map(|k| fact(i + j - k) / (fact(k) * fact(i - k) * fact(j - k)))
                .sum();
            let res = full_flip.explicit_words(&u, &v);
            record(
                &mut r,
                res,
                |e| e.len() as u128 == expected && e.iter().all(|(_, c)| c.is_one()),
                || format!("quasi-shuffle term count ({i},{j})"),
            );
        }
    }
    r
}

/// Every reduced word of every `w ∈ S_n`, `n ≤ max_n`, gives the same
/// operator on all words of length `n` over `letters`.
pub fn check_matsumoto(space: &BraidedSpace, name: &str, letters: &[Letter], max_n: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("reduced-word independence of lifts [{name}]"));
    let mut jobs: Vec<(Permutation, Vec<Vec<usize>>, Word)> = Vec::new();
    for n in 1..=max_n {
        let words = all_words(letters, n);
        for w in all_permutations(n) {
            let reduced = all_reduced_words(&w);
            for word in &words {
                jobs.push((w.clone(), reduced.clone(), word.clone()));
            }
        }
    }
    let results = par::map(exec, &jobs, |(_, reduced, word)| -> Result<bool> {
        let first = space.apply_generators(&reduced[0], word)?;
        for rw in &reduced[1..] {
            if space.apply_generators(rw, word)? != first {
                return Ok(false);
            }
        }
        Ok(true)
    });
    for ((w, reduced, word), res) in jobs.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("w={w:?} ({} reduced words) on {word:?}", reduced.len()));
    }
    r
}

/// The graded q-product against `⋈` for word pairs of lengths `≤ max_len`,
/// and the closed graded formula against the marked-permutation sum for
/// letter sequences of length `≤ max_n`.
pub fn check_hoffman(fx: &Fixture, max_len: usize, max_n: usize, exec: Exec) -> Report {
    let mut r = Report::new(format!("graded q-product formulas [{}]", fx.name()));
    let words = fx.words(max_len);
    let mut pairs = vec![(Word::empty(), Word::empty())];
    for u in &words {
        pairs.push((u.clone(), Word::empty()));
        pairs.push((Word::empty(), u.clone()));
        for v in &words {
            pairs.push((u.clone(), v.clone()));
        }
    }
    let results = par::map(exec, &pairs, |(u, v)| -> Result<bool> {
        let (x, y) = (Element::basis(u.clone()), Element::basis(v.clone()));
        Ok(fx.ctx.hoffman_star(&x, &y)? == fx.ctx.qqsh(&x, &y)?)
    });
    for ((u, v), res) in pairs.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("∗ ≠ ⋈ on {}", words_text(u, v)));
    }
    let seqs = fx.words(max_n);
    let results = par::map(exec, &seqs, |w| -> Result<bool> {
        let xs: Vec<Element> = w.iter().map(|&l| Element::basis(Word::letter(l))).collect();
        Ok(fx.ctx.hoffman_closed(w)? == fx.ctx.nfold_explicit(&xs)?)
    });
    for (w, res) in seqs.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("closed graded formula on {:?}", w.ids()));
    }
    r
}

/// The graded fixture with a noncommutative bracket `[e₁, e₂] = e₃` (all
/// other brackets zero), degrees `(1,1,2)`.
pub fn hoffman_noncommutative() -> BraidedAlgebra {
    let mut t = std::collections::BTreeMap::new();
    t.insert((Letter(1), Letter(2)), LinearV::basis(Letter(3)));
    let mut a = fixtures::hoffman(&[1, 1, 2], HoffmanBracket::Table(t)).expect("valid degrees");
    a.name = "hoffman-noncommutative:1,1,2".into();
    a
}

/// Yang–Baxter, invertibility, the braided algebra axioms and the diagonal
/// constraints for one algebra fixture on `letters`.
pub fn check_fixture_axioms(alg: &BraidedAlgebra, letters: &[Letter]) -> Vec<Report> {
    let triples = all_triples(letters);
    let b = alg.braiding();
    let mut yb = check_yang_baxter(b, &triples);
    yb.name = format!("Yang–Baxter [{}]", alg.name);
    let mut inv = check_invertible(b, &all_pairs(letters));
    inv.name = format!("σ⁻¹σ = id [{}]", alg.name);
    let mut out = vec![yb, inv, check_braided_algebra(alg, &triples)];
    if matches!(b, Braiding::Diagonal(_)) {
        let mut d = check_diagonal_constraints(b, letters);
        d.name = format!("q_ij q_ik = q_i,j+k [{}]", alg.name);
        out.push(d);
    }
    out
}

/// Shipped braidings with the letters used for exhaustive checks.
pub fn shipped_spaces() -> Vec<(String, BraidedSpace, Vec<Letter>)> {
    let mut out = Vec::new();
    for name in ["A4", "A4-flip", "A4+1", "A_inf", "Kt", "Kt-flip", "hoffman:1,1,2"] {
        let fx = Fixture::by_name(name).expect("shipped fixture");
        let alg = fx.ctx.algebra();
        out.push((name.to_string(), alg.space.clone(), fx.letters.clone()));
    }
    // the transposed table braiding of the A4 dual
    let c = adjoint_coalgebra(&fixtures::a_n(4)).expect("finite");
    let letters = c.letters();
    out.push(("A4* (table)".into(), c.space.clone(), letters));
    out
}

/// The dual-side sweeps on a finite fixture.
pub fn check_dual(alg: &BraidedAlgebra, max_degree: usize, exec: Exec) -> Result<Vec<Report>> {
    let d = DualContext::from_algebra(alg)?;
    let coalg = d.coalgebra().clone();
    let letters = coalg.letters();
    let mut axioms = check_braided_coalgebra(&coalg, &letters);
    axioms.name = format!("braided coalgebra axioms [{}]", coalg.name);
    Ok(vec![
        axioms,
        check_adjoint_transposition(alg, &coalg),
        d.check_tau(),
        d.check_adjoint(max_degree, exec),
        d.check_phi1_shuffle(max_degree, exec),
        d.check_phi2(max_degree, exec),
        d.check_coassociative(max_degree.min(3), exec),
        d.check_beta_intertwining(max_degree.min(3), exec),
    ])
}

/// Counit of `Δ_{σ,i}` on the unital fixture `A4+1`.
pub fn check_dual_counit(max_degree: usize, exec: Exec) -> Result<Report> {
    let d = DualContext::from_algebra(&fixtures::a_n_unital(4))?;
    Ok(d.check_counit(max_degree, exec))
}

/// Rota–Baxter suites on the shipped fixtures.
pub fn check_rota_baxter(max_degree: usize, exec: Exec) -> Vec<Report> {
    let kt = RotaBaxter::kt();
    let neg = RotaBaxter::negation(4, Scalar::one());
    let mut out = kt.verify_all(max_degree, exec);
    out.extend(neg.verify_all(max_degree, exec));
    out.push(check_kt_closed_formula(&kt, 4, 4));
    out.push(check_kt_powers(&kt, 4));
    out.push(check_kt_cyclic(&kt, 8));
    out
}

/// `direct` against `series` for all indices of weight `≤ max_weight`
/// (Bradley: admissible only) and `1 ≤ N ≤ max_n`, plus spot values.
pub fn check_zeta_routes(max_weight: u32, max_n: u32, exec: Exec) -> Report {
    let mut r = Report::new("q-zeta truncations: direct = quasi-shuffle");
    let z = Zeta::new();
    let mut jobs = Vec::new();
    for idx in ZetaIndex::all_up_to(max_weight) {
        for n in 1..=max_n {
            jobs.push((ZetaKind::Zudilin, idx.clone(), n));
            if idx.is_admissible() {
                jobs.push((ZetaKind::Bradley, idx.clone(), n));
            }
        }
    }
    let results = par::map(exec, &jobs, |(kind, idx, n)| -> Result<bool> {
        let direct = z.truncated(*kind, idx, *n, Route::Direct, Exec::Sequential)?;
        let series = z.truncated(*kind, idx, *n, Route::Series, Exec::Sequential)?;
        Ok(direct == series)
    });
    for ((kind, idx, n), res) in jobs.iter().zip(results) {
        record(&mut r, res, |&ok| ok, || format!("{kind:?}{idx} at N={n}"));
    }
    let spot = (|| -> Result<[bool; 2]> {
        let two: ZetaIndex = "2".parse()?;
        let q = Scalar::q();
        let b = q.clone() + Scalar::q_pow(2).checked_div(&(Scalar::one() + q.clone()).pow(2)?)?;
        let zu = Scalar::q_pow(2).checked_div(&(Scalar::one() - q).pow(2)?)?;
        Ok([
            z.bradley(&two, 2, Route::Direct)? == b && z.bradley(&two, 2, Route::Series)? == b,
            z.zudilin(&two, 1, Route::Direct)? == zu && z.zudilin(&two, 1, Route::Series)? == zu,
        ])
    })();
    match spot {
        Ok([a, b]) => {
            r.check(a, || "ζ_q(2) at N=2 ≠ q + q^2/(1+q)^2".into());
            r.check(b, || "Z_q(2) at N=1 ≠ q^2/(1-q)^2".into());
        }
        Err(e) => r.fail(e.to_string()),
    }
    r
}

/// The named sweep groups of `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Enumerate,
    Products,
    Nfold,
    Power,
    Associativity,
    Bialgebra,
    Primitives,
    Factorization,
    Specializations,
    Matsumoto,
    Hoffman,
    Dual,
    RotaBaxter,
    Zeta,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Axioms,
        Suite::Enumerate,
        Suite::Products,
        Suite::Nfold,
        Suite::Power,
        Suite::Associativity,
        Suite::Bialgebra,
        Suite::Primitives,
        Suite::Factorization,
        Suite::Specializations,
        Suite::Matsumoto,
        Suite::Hoffman,
        Suite::Dual,
        Suite::RotaBaxter,
        Suite::Zeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Enumerate => "enumerate",
            Suite::Products => "products",
            Suite::Nfold => "nfold",
            Suite::Power => "power",
            Suite::Associativity => "assoc",
            Suite::Bialgebra => "bialgebra",
            Suite::Primitives => "primitives",
            Suite::Factorization => "factorization",
            Suite::Specializations => "specializations",
            Suite::Matsumoto => "matsumoto",
            Suite::Hoffman => "hoffman",
            Suite::Dual => "dual",
            Suite::RotaBaxter => "rb",
            Suite::Zeta => "zeta",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::Invalid(format!("unknown verification suite '{name}'")))
    }

    /// Runs the suite with degree bound `d`: products and associativity up
    /// to total length `d`, n-fold products up to `d + 1` letters, and so on.
    pub fn run(self, d: usize, exec: Exec) -> Vec<Report> {
        match self {
            Suite::Axioms => {
                let mut out = Vec::new();
                for name in ["A4", "A4-flip", "A4+1", "A_inf", "Kt", "Kt-flip", "hoffman:1,1,2"] {
                    let fx = Fixture::by_name(name).expect("shipped fixture");
                    out.extend(check_fixture_axioms(fx.ctx.algebra(), &fx.letters));
                }
                let nc = hoffman_noncommutative();
                let letters = nc.letters().finite().expect("finite");
                out.extend(check_fixture_axioms(&nc, &letters));
                out
            }
            Suite::Enumerate => vec![check_enumeration(d.clamp(1, 5))],
            Suite::Products => product_fixtures().iter().map(|fx| check_product_routes(fx, d, exec)).collect(),
            Suite::Nfold => vec![check_nfold(&Fixture::by_name("A4").expect("A4"), d + 1, exec)],
            Suite::Power => vec![check_power_formula(d + 1, 3)],
            Suite::Associativity => product_fixtures().iter().map(|fx| check_associativity(fx, d, exec)).collect(),
            Suite::Bialgebra => product_fixtures().iter().map(|fx| check_bialgebra(fx, d, exec)).collect(),
            Suite::Primitives => product_fixtures().iter().map(|fx| check_primitives(fx, d.min(3))).collect(),
            Suite::Factorization => {
                let fx = Fixture::by_name("A4").expect("A4");
                vec![check_l_factorization(&fx, &[Letter(1), Letter(2)], d.min(4), exec)]
            }
            Suite::Specializations => vec![check_specializations(d.max(2))],
            Suite::Matsumoto => shipped_spaces()
                .iter()
                .map(|(name, space, letters)| check_matsumoto(space, name, letters, d.min(4), exec))
                .collect(),
            Suite::Hoffman => {
                let fx = Fixture::by_name("hoffman:1,1,2").expect("fixture");
                let nc = Fixture::new(hoffman_noncommutative(), (1..=3).map(Letter).collect());
                vec![
                    check_hoffman(&fx, d.min(3), d, exec),
                    check_hoffman(&nc, d.min(3), d, exec),
                ]
            }
            Suite::Dual => {
                let mut out = check_dual(&fixtures::a_n(4), d, exec).expect("A4 is finite");
                out.push(check_dual_counit(d, exec).expect("A4+1 is finite"));
                out
            }
            Suite::RotaBaxter => check_rota_baxter(d, exec),
            Suite::Zeta => vec![check_zeta_routes(d as u32, (d as u32 + 1).min(5), exec)],
        }
    }
}

/// Every suite at degree bound `d`.
pub fn run_all(d: usize, exec: Exec) -> Vec<Report> {
    Suite::ALL.into_iter().flat_map(|s| s.run(d, exec)).collect()
}
