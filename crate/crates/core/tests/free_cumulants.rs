use sct_core::cumulants::{
    cluster_involution, eval_tree, expr_to_tree, factor_moments, kappa_eval, kappa_scalar, moments_from_kappa,
    prime_tree_sign, read_tree, right_directed_form, scalar_reading, speicher_kappa, univariate, unsigned_polynomial,
    Evaluation, Mode,
};
use sct_core::hopf::{extract_cumulant, iota, DecoratedTree};
use sct_core::ncpart::{nc_to_rdt, sector_partition, NoncrossingPartition};
use sct_core::poly::MomentPoly;
use sct_core::trees::{enumerate, SchroederTree, TreeKind};
use sct_core::words::Word;
use sct_core::Ring;

fn scalar(e: Evaluation) -> MomentPoly {
    match e {
        Evaluation::Scalar(p) => p,
        Evaluation::Expr(p) => p.scalar_image().unwrap(),
    }
}

#[test]
fn prime_tree_formula_equals_moebius_inversion() {
    for n in 1..=7 {
        let trees = scalar(kappa_eval(n, Mode::Scalar).unwrap());
        assert_eq!(trees, speicher_kappa(n).unwrap(), "n = {n}");
    }
}

#[test]
fn speicher_two() {
    let k2 = speicher_kappa(2).unwrap();
    let m = |s: &str| MomentPoly::atom(s.parse().unwrap());
    assert_eq!(k2, m("a1a2").sub(&m("a1").mul(&m("a2"))));
}

#[test]
fn moments_recovered_from_cumulants() {
    for n in 1..=6 {
        assert_eq!(moments_from_kappa(n).unwrap(), MomentPoly::atom(Word::standard(n)), "n = {n}");
    }
}

#[test]
fn central_specialisations_agree() {
    for n in 1..=6 {
        let s = scalar(kappa_eval(n, Mode::Scalar).unwrap());
        assert_eq!(scalar(kappa_eval(n, Mode::Bimodule).unwrap()), s);
        assert_eq!(scalar(kappa_eval(n, Mode::Operator).unwrap()), s);
    }
}

#[test]
fn univariate_cumulants_and_unsigned_forms() {
    assert_eq!(univariate(&kappa_scalar(&Word::standard(3)).unwrap()).to_string(), "2m1^3 - 3m2m1 + m3");
    assert_eq!(unsigned_polynomial(3).unwrap().to_string(), "2m1^3 + 3m2m1 + m3");
    let u4 = unsigned_polynomial(4).unwrap();
    assert_eq!(u4.to_string(), "5m1^4 + 10m2m1^2 + 2m2^2 + 4m3m1 + m4");
    assert_eq!(u4.coefficient_sum(), sct_core::ring::int(22));
    for n in 1..=7 {
        let signed = univariate(&kappa_scalar(&Word::standard(n)).unwrap());
        assert_eq!(signed.unsigned(), unsigned_polynomial(n).unwrap());
        assert_eq!(
            unsigned_polynomial(n).unwrap().coefficient_sum(),
            sct_core::ring::int(enumerate(TreeKind::Prime, n).len() as i64)
        );
    }
}

#[test]
fn right_directed_rewrite_preserves_scalar_value() {
    for n in 1..=5 {
        let w = Word::standard(n);
        for t in enumerate(TreeKind::Prime, n).iter() {
            let e = read_tree(t, &w).unwrap().bimodule_normal_form();
            let r = right_directed_form(&e).unwrap();
            let (tree, word) = expr_to_tree(&r).unwrap();
            assert!(tree.belongs_to(TreeKind::RightDirected), "{t} -> {tree}");
            assert_eq!(word, w);
            assert_eq!(r.scalar_image().unwrap(), e.scalar_image().unwrap());
            assert_eq!(nc_to_rdt(&NoncrossingPartition::from_tree_sectors(&tree)), tree);
        }
    }
}

#[test]
fn right_directed_example_partition() {
    let e = "φ(a1φ(φ(a2)a3φ(a4)a5φ(a6))a7)".parse().unwrap();
    let (tree, _) = expr_to_tree(&right_directed_form(&e).unwrap()).unwrap();
    assert_eq!(sector_partition(&tree).unwrap().to_string(), "1,7|2|3,5|4|6");
}

#[test]
fn cluster_involution_pairs_terms() {
    for n in 2..=6 {
        let w = Word::standard(n);
        for j in 1..n {
            let k = n - j;
            let mut total = MomentPoly::zero();
            for t in enumerate(TreeKind::Prime, n).iter() {
                let u = cluster_involution(t, j, k).unwrap();
                assert_ne!(&u, t, "fixed point {t}");
                assert!(u.is_prime());
                assert_eq!(&cluster_involution(&u, j, k).unwrap(), t);
                assert_eq!(t.internal_count().abs_diff(u.internal_count()), 1);
                let term = |x: &SchroederTree| {
                    factor_moments(&scalar_reading(x, &w).unwrap(), j).scale(&prime_tree_sign(x))
                };
                assert_eq!(term(t).add(&term(&u)), MomentPoly::zero());
                total = total.add(&term(t));
            }
            assert!(total.is_zero(), "κ does not vanish for j={j}, k={k}");
        }
    }
}

#[test]
fn cluster_involution_rejects_bad_split() {
    let t = SchroederTree::corolla(3);
    assert!(cluster_involution(&t, 0, 3).is_err());
    assert!(cluster_involution(&t, 1, 1).is_err());
}

#[test]
fn character_cumulant_is_signed_tree_term() {
    for n in 1..=5 {
        let w = Word::standard(n);
        let trees = iota(&w).unwrap();
        let phi = |d: &DecoratedTree| if d.is_corolla() { MomentPoly::atom(d.word().clone()) } else { MomentPoly::zero() };
        let kappa = extract_cumulant(phi, trees.clone());
        for d in &trees {
            let expected = if d.tree().is_prime() {
                scalar(eval_tree(d.tree(), &w, Mode::Scalar).unwrap()).scale(&prime_tree_sign(d.tree()))
            } else {
                MomentPoly::zero()
            };
            assert_eq!(kappa.value(d), expected, "{d}");
        }
    }
}
