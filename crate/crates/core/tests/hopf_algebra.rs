use sct_core::hopf::{
    codendriform_sides, coassociativity_sides, convolve, coproduct, coproduct_of_iota, extract_cumulant,
    forests_of_weight, iota, iota_tensor, solve_character, tree_forests, Character, Counit, DecoratedTree, Half,
    Infinitesimal, LinearForm, Tensor2,
};
use sct_core::operad::{gc_series, kappa_series, TreeSeries};
use sct_core::poly::MomentPoly;
use sct_core::ring::{int, Rational};
use sct_core::trees::{enumerate, enumerate_up_to, SchroederTree, TreeKind};
use sct_core::words::Word;
use sct_core::Ring;

fn decorated_forests(n: usize) -> Vec<Vec<DecoratedTree>> {
    // Letters numbered consecutively across the forest, so all decorations are distinct.
    forests_of_weight(n, &|w| enumerate(TreeKind::All, w).to_vec())
        .into_iter()
        .map(|f| {
            let mut next = 1;
            f.into_iter()
                .map(|t| {
                    let w = Word((next..next + t.weight()).map(|i| sct_core::words::Letter(i as u16)).collect());
                    next += t.weight();
                    DecoratedTree::new(t, w).unwrap()
                })
                .collect()
        })
        .collect()
}

#[test]
fn coassociative_and_codendriform_to_weight_five() {
    for n in 1..=5 {
        for f in tree_forests(n) {
            let (l, r) = coassociativity_sides(&f).unwrap();
            assert_eq!(l, r, "coassociativity on {f:?}");
            let full = coproduct(&f, Half::Full).unwrap();
            let split = coproduct(&f, Half::Prec).unwrap().add(&coproduct(&f, Half::Succ).unwrap());
            assert_eq!(full, split);
            for (i, (l, r)) in codendriform_sides(&f).unwrap().into_iter().enumerate() {
                assert_eq!(l, r, "relation {} on {f:?}", i + 1);
            }
        }
    }
}

#[test]
fn decorated_codendriform_to_weight_four() {
    for n in 1..=4 {
        for f in decorated_forests(n) {
            let (l, r) = coassociativity_sides(&f).unwrap();
            assert_eq!(l, r);
            for (l, r) in codendriform_sides(&f).unwrap() {
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn coproduct_is_multiplicative() {
    let trees = enumerate_up_to(TreeKind::All, 3);
    let trees: Vec<_> = trees.into_iter().filter(|t| !t.is_leaf()).collect();
    for a in &trees {
        for b in &trees {
            let ab = coproduct(&[a.clone(), b.clone()], Half::Full).unwrap();
            let prod = coproduct(std::slice::from_ref(a), Half::Full).unwrap().mul(&coproduct(std::slice::from_ref(b), Half::Full).unwrap());
            assert_eq!(ab, prod);
        }
    }
}

#[test]
fn word_coproduct_coassociative_and_codendriform() {
    for n in 1..=4 {
        let w = Word::standard(n);
        let (l, r) = coassociativity_sides(std::slice::from_ref(&w)).unwrap();
        assert_eq!(l, r);
        for (l, r) in codendriform_sides(&[w]).unwrap() {
            assert_eq!(l, r);
        }
    }
}

#[test]
fn iota_is_a_codendriform_morphism() {
    assert_eq!(iota(&Word::standard(2)).unwrap().len(), 3);
    for n in 1..=4 {
        let w = Word::standard(n);
        for half in [Half::Full, Half::Prec, Half::Succ] {
            let lhs = iota_tensor(&coproduct(std::slice::from_ref(&w), half).unwrap());
            assert_eq!(lhs, coproduct_of_iota(&w, half).unwrap(), "half {half:?}, n = {n}");
        }
    }
}

#[test]
fn convolution_splits_and_counit_is_unit() {
    let trees: Vec<SchroederTree> = enumerate_up_to(TreeKind::All, 5).into_iter().filter(|t| !t.is_leaf()).collect();
    let f: Character<SchroederTree, Rational> =
        Character::from_fn(trees.clone(), |t| int(t.word().iter().map(|&x| x as i64).product::<i64>() + 1));
    let g: Character<SchroederTree, Rational> = Character::from_fn(trees.clone(), |t| int(t.internal_count() as i64));
    for n in 1..=4 {
        for forest in tree_forests(n) {
            let full = convolve(&f, &g, Half::Full, &forest).unwrap();
            let prec = convolve(&f, &g, Half::Prec, &forest).unwrap();
            let succ = convolve(&f, &g, Half::Succ, &forest).unwrap();
            assert_eq!(full, prec + succ);
            assert_eq!(convolve(&Counit, &f, Half::Full, &forest).unwrap(), f.eval(&forest));
            assert_eq!(convolve(&f, &Counit, Half::Full, &forest).unwrap(), f.eval(&forest));
        }
    }
}

#[test]
fn operad_composition_is_cut_convolution() {
    let n = 5;
    let p = gc_series(n);
    let q = kappa_series(n);
    let as_char = |s: &TreeSeries| -> Character<SchroederTree, Rational> {
        Character::from_fn(enumerate_up_to(TreeKind::All, n).into_iter().filter(|t| !t.is_leaf()), |t| s.coefficient(t))
    };
    let (fp, fq) = (as_char(&p), as_char(&q));
    let pq = p.compose(&q, n).unwrap();
    for t in enumerate_up_to(TreeKind::All, n).into_iter().filter(|t| !t.is_leaf()) {
        assert_eq!(convolve(&fp, &fq, Half::Full, std::slice::from_ref(&t)).unwrap(), pq.coefficient(&t));
        assert_eq!(convolve(&fp, &fq, Half::Prec, std::slice::from_ref(&t)).unwrap(), p.dashv(&q, n).unwrap().coefficient(&t));
    }
}

#[test]
fn corolla_character_solves_kappa_equation() {
    let n = 7;
    let kappa = kappa_series(n);
    let trees: Vec<SchroederTree> = enumerate_up_to(TreeKind::All, n).into_iter().filter(|t| !t.is_leaf()).collect();
    let phi = solve_character(|t: &SchroederTree| kappa.coefficient(t), trees.clone());
    let fc: Character<SchroederTree, Rational> = Character::from_fn(trees.clone(), |t| {
        if t.internal_count() == 1 {
            int(1)
        } else {
            int(0)
        }
    });
    assert_eq!(phi, fc);
    let back = extract_cumulant(|t: &SchroederTree| fc.value(t), trees.clone());
    let res: Infinitesimal<SchroederTree, Rational> = Infinitesimal::from_fn(trees, |t| kappa.coefficient(t));
    assert_eq!(back, res);
}

fn moment(w: &Word) -> MomentPoly {
    MomentPoly::atom(w.clone())
}

/// Signed product of viewed moments on prime trees, zero elsewhere.
fn prime_tree_value(d: &DecoratedTree) -> MomentPoly {
    if !d.tree().is_prime() {
        return MomentPoly::zero();
    }
    let letters = d.word().letters();
    let mut acc = MomentPoly::one();
    for block in d.tree().sector_blocks() {
        acc = acc.mul(&moment(&Word(block.iter().map(|&s| letters[s - 1]).collect())));
    }
    if d.tree().internal_count().is_multiple_of(2) {
        acc.neg()
    } else {
        acc
    }
}

#[test]
fn decorated_character_equation_to_weight_six() {
    let targets: Vec<DecoratedTree> = (1..=6).flat_map(|n| iota(&Word::standard(n)).unwrap()).collect();
    let phi_tree = |d: &DecoratedTree| if d.is_corolla() { moment(d.word()) } else { MomentPoly::zero() };
    let kappa = extract_cumulant(phi_tree, targets.clone());
    for d in &targets {
        assert_eq!(kappa.value(d), prime_tree_value(d), "{d}");
    }
    let phi = solve_character(|d: &DecoratedTree| kappa.value(d), targets.clone());
    for d in &targets {
        assert_eq!(phi.value(d), phi_tree(d), "{d}");
    }
}

#[test]
fn word_cumulants_match_tree_cumulants_through_iota() {
    for n in 1..=5 {
        let w = Word::standard(n);
        let words = subsequences(&w);
        let efp = extract_cumulant(|v: &Word| moment(v), words.clone());
        let trees = iota(&w).unwrap();
        let phi_tree = |d: &DecoratedTree| if d.is_corolla() { moment(d.word()) } else { MomentPoly::zero() };
        let kappa = extract_cumulant(phi_tree, trees.clone());
        let through_iota = trees.iter().fold(MomentPoly::zero(), |a, d| a.add(&kappa.value(d)));
        assert_eq!(efp.value(&w), through_iota);
        // Moments pulled back through ι: only the corolla contributes.
        let moments = trees.iter().fold(MomentPoly::zero(), |a, d| a.add(&phi_tree(d)));
        assert_eq!(moments, moment(&w));
        let solved = solve_character(|v: &Word| efp.value(v), words);
        assert_eq!(solved.value(&w), moment(&w));
    }
}

#[test]
fn unit_tensor_is_coproduct_of_unit() {
    assert_eq!(coproduct::<SchroederTree>(&[], Half::Full).unwrap(), Tensor2::unit());
}

fn subsequences(w: &Word) -> Vec<Word> {
    let n = w.len();
    (1u32..1 << n)
        .map(|m| Word((0..n).filter(|i| m >> i & 1 == 1).map(|i| w.letters()[i]).collect()))
        .collect()
}

#[test]
fn first_factor_extension_breaks_second_relation() {
    let t: SchroederTree = "1,2,0,0,0,1,0,0".parse().unwrap();
    let prec = |f: &[SchroederTree]| -> Tensor2<SchroederTree> {
        let mut d = sct_core::hopf::coproduct_first_factor(f, Half::Prec).unwrap();
        d.add_term(f.to_vec(), Vec::new(), -1);
        d
    };
    let succ = |f: &[SchroederTree]| -> Tensor2<SchroederTree> {
        let mut d = sct_core::hopf::coproduct_first_factor(f, Half::Succ).unwrap();
        d.add_term(Vec::new(), f.to_vec(), -1);
        d
    };
    let lhs = prec(std::slice::from_ref(&t)).apply_left(|f| Ok(succ(f))).unwrap();
    let rhs = succ(&[t]).apply_right(|f| Ok(prec(f))).unwrap();
    assert_ne!(lhs, rhs);
}
