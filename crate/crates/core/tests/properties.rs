//! Randomized invariants.

use std::collections::BTreeSet;

use proptest::prelude::*;

use qqsh::braided::fixtures;
use qqsh::combinat::*;
use qqsh::rotabaxter::RotaBaxter;
use qqsh::scalar::{qfactorial, qint, Poly, Scalar};
use qqsh::text::{element_from_json, element_to_json, parse_element, render_element};
use qqsh::{BraidedAlgebra, Element, Element3, Letter, QShuffle, Word};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..5).prop_map(|c| Poly::from_i64s(&c))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| Scalar::normalize(n, d).ok())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("zero", |s| !s.is_zero())
}

fn word(letters: Vec<u32>, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(letters), 0..=max_len).prop_map(|ids| Word::from_ids(&ids))
}

fn element(letters: Vec<u32>, max_len: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((word(letters, max_len), scalar()), 0..4).prop_map(|terms| {
        let mut x = Element::zero();
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    })
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

/// Applies `f` to the factor `start..start+len` of every word of `x`.
fn on_factor(x: &Element, start: usize, len: usize, f: impl Fn(&Word) -> Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in x {
        let (pre, rest) = w.split(start);
        let (mid, post) = rest.split(len);
        for (m, d) in &f(&mid) {
            out.add_term(pre.concat(m).concat(&post), c * d);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qint_times_one_minus_q(n in 1u32..40) {
        let lhs = &qint(n) * &(Scalar::one() - Scalar::q());
        prop_assert_eq!(lhs, Scalar::one() - Scalar::q_pow(n as i64));
    }

    #[test]
    fn qfactorial_recursion(n in 1u32..15) {
        prop_assert_eq!(qfactorial(n), &qfactorial(n - 1) * &qint(n));
    }

    #[test]
    fn scalars_form_a_field(a in nonzero_scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&b + &c, &c + &b);
        let again = Scalar::normalize(a.numerator().clone(), a.denominator().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn reduced_words_have_inversion_length(w in permutation(8)) {
        let r = reduced_word(&w);
        prop_assert_eq!(r.len(), inversions(&w).len());
        prop_assert_eq!(Permutation::from_word(&r, w.len()), w);
    }

    #[test]
    fn beta_factors_blockwise(i in 1usize..3, j in 1usize..3, k in 1usize..3,
                             seed in word(vec![1, 2, 3, 4], 6)) {
        let space = &fixtures::a_n(4).space;
        let n = i + j + k;
        let ids: Vec<u32> = (0..n).map(|t| seed.get(t).map_or(1 + t as u32 % 4, |l| l.id())).collect();
        let x = Element::word(&ids);
        let direct = space.beta(i + j, k, &x).unwrap();
        let inner = on_factor(&x, i, j + k, |m| space.beta_word(j, k, m).unwrap());
        let outer = on_factor(&inner, 0, i + k, |m| space.beta_word(i, k, m).unwrap());
        prop_assert_eq!(direct, outer);
    }

    #[test]
    fn diagonal_braiding_inverts(a in 1u32..=4, b in 1u32..=4) {
        let br = fixtures::a_n(4);
        let v = br.braiding().apply_pair(Letter(a), Letter(b)).unwrap();
        let back = br.braiding().apply_inverse(&v).unwrap();
        prop_assert_eq!(back, qqsh::VectorInV2::basis((Letter(a), Letter(b))));
    }

    #[test]
    fn trivial_composition_reduces_to_lift(w in permutation(4), seed in word(vec![1, 2, 3], 4)) {
        let alg = fixtures::hoffman(&[1, 1, 2], qqsh::braided::HoffmanBracket::FirstOfDegree).unwrap();
        let ids: Vec<u32> = (0..w.len()).map(|t| seed.get(t).map_or(1, |l| l.id())).collect();
        let x = Word::from_ids(&ids);
        let lifted = alg.space.lift_word(&w, &x).unwrap();
        prop_assert_eq!(alg.t_mixable_word(&w, &Composition::ones(w.len()), &x).unwrap(), lifted);
    }

    #[test]
    fn deconcatenation_is_coassociative(x in element(vec![1, 2, 3], 5)) {
        let mut left = Element3::zero();
        let mut right = Element3::zero();
        for ((a, b), c) in &x.deconcat() {
            for ((a1, a2), d) in &Element::basis(a.clone()).deconcat() {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c * d);
            }
            for ((b1, b2), d) in &Element::basis(b.clone()).deconcat() {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c * d);
            }
        }
        prop_assert_eq!(left, right);
    }

    #[test]
    fn render_parse_round_trip(x in element(vec![1, 2, 3, 17], 4)) {
        let text = render_element(&x);
        let parsed = parse_element(&text).unwrap();
        prop_assert_eq!(&parsed, &x);
        prop_assert_eq!(render_element(&parsed), text);
        prop_assert_eq!(element_from_json(&element_to_json(&x)).unwrap(), x);
    }
}

fn routes_agree(alg: BraidedAlgebra, x: &Element, y: &Element) -> Result<(), TestCaseError> {
    let ctx = QShuffle::new(alg);
    let left = ctx.qqsh(x, y).unwrap();
    prop_assert_eq!(&left, &ctx.qqsh_right(x, y).unwrap());
    prop_assert_eq!(&left, &ctx.qqsh_explicit(x, y).unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn product_routes_agree_on_combinations(x in element(vec![1, 2, 3, 4], 3), y in element(vec![1, 2, 3, 4], 3)) {
        routes_agree(fixtures::a_n(4), &x, &y)?;
        routes_agree(fixtures::a_inf(), &x, &y)?;
        routes_agree(fixtures::a_n_flip(4), &x, &y)?;
    }

    #[test]
    fn product_is_associative_and_unital(x in element(vec![1, 2, 3], 2), y in element(vec![1, 2, 3], 2),
                                         z in element(vec![1, 2, 3], 2)) {
        for alg in [fixtures::a_n(4), fixtures::hoffman(&[1, 1, 2], qqsh::braided::HoffmanBracket::FirstOfDegree).unwrap()] {
            let ctx = QShuffle::new(alg);
            let l = ctx.qqsh(&ctx.qqsh(&x, &y).unwrap(), &z).unwrap();
            let r = ctx.qqsh(&x, &ctx.qqsh(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(l, r);
            prop_assert_eq!(ctx.qqsh(&Element::one(), &x).unwrap(), x.clone());
        }
    }

    #[test]
    fn product_is_bilinear(x in element(vec![1, 2], 2), y in element(vec![1, 2], 2),
                           z in element(vec![1, 2], 2), c in scalar()) {
        let ctx = QShuffle::new(fixtures::a_n(4));
        let mut xz = x.clone();
        xz.add_scaled(&z, &c);
        let lhs = ctx.qqsh(&xz, &y).unwrap();
        let mut rhs = ctx.qqsh(&x, &y).unwrap();
        rhs.add_scaled(&ctx.qqsh(&z, &y).unwrap(), &c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bialgebra_on_combinations(x in element(vec![1, 2, 3], 2), y in element(vec![1, 2, 3], 2)) {
        let ctx = QShuffle::new(fixtures::a_n(4));
        prop_assert!(ctx.check_bialgebra_compat(&x, &y).unwrap());
    }

    #[test]
    fn fbar_is_multiplicative_on_kt(x in element(vec![1, 2, 3], 2), y in element(vec![1, 2, 3], 2)) {
        let kt = RotaBaxter::kt();
        let lhs = kt.fbar(&kt.source().qqsh(&x, &y).unwrap()).unwrap();
        let rhs = kt.mul(&kt.fbar(&x).unwrap(), &kt.fbar(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn shuffle_counts_are_binomial() {
    for n in 0..=8 {
        for i in 0..=n {
            assert_eq!(enumerate_shuffles(i, n - i).len(), binomial(n, i), "({i},{})", n - i);
        }
    }
}

/// Mixable shuffles by brute force over `S_n × 2^{[n-1]}` with the defining
/// inequalities tested directly.
fn mixable_brute_force(i: usize, j: usize) -> BTreeSet<(Vec<u32>, Vec<usize>)> {
    let n = i + j;
    let mut out = BTreeSet::new();
    for w in all_permutations(n) {
        let im = w.images();
        let increasing = |r: std::ops::Range<usize>| r.clone().skip(1).all(|k| im[k - 1] < im[k]);
        if !(increasing(0..i) && increasing(i..n)) {
            continue;
        }
        let winv = w.inverse();
        for mask in 0u32..(1 << n.saturating_sub(1)) {
            let pairs: Vec<usize> = (1..n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
            if pairs.iter().all(|&k| winv.apply(k) <= i && i < winv.apply(k + 1)) {
                out.insert((im.to_vec(), pairs));
            }
        }
    }
    out
}

#[test]
fn mixable_counts_match_formula_and_brute_force() {
    for n in 0..=6 {
        for i in 0..=n {
            let j = n - i;
            let formula: usize = (0..=i.min(j)).map(|k| factorial(n - k) / (factorial(k) * factorial(i - k) * factorial(j - k))).sum();
            let got: BTreeSet<(Vec<u32>, Vec<usize>)> =
                enumerate_mixable(i, j).iter().map(|m| (m.w.images().to_vec(), m.pairs.clone())).collect();
            assert_eq!(got.len(), formula, "({i},{j})");
            let brute = mixable_brute_force(i, j);
            assert_eq!(got, brute, "({i},{j})");
            // no constraint on adjacency above, yet selected pairs never touch
            assert!(brute.iter().all(|(_, p)| p.windows(2).all(|k| k[1] > k[0] + 1)), "({i},{j})");
        }
    }
}

#[test]
fn marked_counts_are_fubini_numbers() {
    // a(n) = Σ_{k≥1} C(n,k) a(n−k)
    let mut fubini = vec![1usize];
    for n in 1..=6 {
        fubini.push((1..=n).map(|k| binomial(n, k) * fubini[n - k]).sum());
    }
    for (n, &expected) in fubini.iter().enumerate().skip(1) {
        assert_eq!(enumerate_marked(n).len(), expected, "n={n}");
    }
}

#[test]
fn mixable_shuffles_are_marked_permutations() {
    for n in 1..=5 {
        let marked: BTreeSet<(Vec<u32>, Vec<usize>)> =
            enumerate_marked(n).iter().map(|m| (m.w.images().to_vec(), m.pairs.clone())).collect();
        for i in 0..=n {
            for m in enumerate_mixable(i, n - i) {
                assert!(marked.contains(&(m.w.images().to_vec(), m.pairs.clone())), "{m:?}");
            }
        }
    }
}

#[test]
fn l_map_is_a_bijection_onto_fixed_first_image() {
    for n in 1..=5 {
        for i in 1..=n + 1 {
            let images: BTreeSet<Permutation> = all_permutations(n).iter().map(|w| l_map(w, i)).collect();
            let target: BTreeSet<Permutation> =
                all_permutations(n + 1).into_iter().filter(|v| v.apply(1) == i).collect();
            assert_eq!(images, target, "n={n}, i={i}");
        }
    }
}
