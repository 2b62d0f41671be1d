use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sct_core::nsym::{cumulant_k, lagrange_g, KMethod};
use sct_core::operad::{corolla_series, gc_series, kappa_series, ldst_series, TreeSeries};
use sct_core::ring::int;
use sct_core::trees::{enumerate_up_to, TreeKind};

/// Sparse random group element: leaf coefficient 1, other coefficients in -2..=2.
fn random_series(rng: &mut ChaCha8Rng, order: usize, density: f64) -> TreeSeries {
    let mut s = TreeSeries::leaf(order);
    for t in enumerate_up_to(TreeKind::All, order) {
        if t.is_leaf() || !rng.gen_bool(density) {
            continue;
        }
        s.add_term(t, int(rng.gen_range(-2..=2)));
    }
    s
}

#[test]
fn corolla_series_inverse_is_signed_sum() {
    let n = 10;
    let fc = corolla_series(n);
    let gc = gc_series(n);
    assert_eq!(fc.compose(&gc, n).unwrap(), TreeSeries::leaf(n));
    assert_eq!(fc.comp_inverse(7).unwrap(), gc.truncate(7));
}

#[test]
fn kappa_dashv_corollas() {
    let n = 9;
    let fc = corolla_series(n);
    assert_eq!(kappa_series(n).dashv(&fc, n).unwrap(), fc);
}

#[test]
fn r_transform_and_vdash_inverse_give_kappa() {
    let n = 8;
    let kappa = kappa_series(n);
    assert_eq!(corolla_series(n).r_transform(n).unwrap(), kappa);
    assert_eq!(gc_series(n).vdash_inverse(n).unwrap(), kappa);
    let inv = gc_series(n).vdash_inverse(n).unwrap();
    assert_eq!(inv.vdash(&gc_series(n), n).unwrap(), TreeSeries::leaf(n));
}

#[test]
fn ldst_fixpoint() {
    let n = 8;
    assert_eq!(corolla_series(n).dashv_fixpoint(n).unwrap(), ldst_series(n));
}

#[test]
fn kappa_counts_and_weight_three_terms() {
    let k = kappa_series(8);
    let counts: Vec<usize> = (0..=8).map(|w| k.component(w).len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 22, 90, 394, 1806, 8558]);
    let w3: Vec<String> = k
        .component(3)
        .iter()
        .map(|(t, c)| format!("{c}*{t}"))
        .collect();
    assert_eq!(
        w3,
        [
            "1*3,0,0,0,0",
            "-1*2,1,0,0,0,0",
            "-1*2,0,1,0,0,0",
            "-1*1,2,0,0,0,0",
            "1*1,1,1,0,0,0,0",
            "1*1,1,0,1,0,0,0",
        ]
    );
}

#[test]
fn projections_to_nsym() {
    let n = 8;
    assert_eq!(kappa_series(n).project_to_nsym(), cumulant_k(n, KMethod::Solve));
    let g_minus = lagrange_g(6).minus_a().truncate(6);
    assert_eq!(gc_series(6).project_to_nsym(), g_minus);
}

#[test]
fn dashv_is_not_associative() {
    let n = 3;
    let a = random_like(&[("1,0,0", 1)], n);
    let b = random_like(&[("1,0,0", 1)], n);
    let c = random_like(&[("1,0,0", 1)], n);
    let left = a.dashv(&b, n).unwrap().dashv(&c, n).unwrap();
    let right = a.dashv(&b.dashv(&c, n).unwrap(), n).unwrap();
    assert_ne!(left, right);
}

fn random_like(terms: &[(&str, i64)], n: usize) -> TreeSeries {
    let mut s = TreeSeries::leaf(n);
    for (t, c) in terms {
        s.add_term(t.parse().unwrap(), int(*c));
    }
    s
}

#[test]
fn random_group_laws() {
    let n = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let f = random_series(&mut rng, n, 0.3);
        let g = random_series(&mut rng, n, 0.3);
        let h = random_series(&mut rng, n, 0.3);
        let fg = f.compose(&g, n).unwrap();
        assert_eq!(fg.compose(&h, n).unwrap(), f.compose(&g.compose(&h, n).unwrap(), n).unwrap());
        assert_eq!(f.dashv(&g, n).unwrap().vdash(&g, n).unwrap(), fg);
        assert_eq!(
            f.dashv(&g, n).unwrap().dashv(&h, n).unwrap(),
            f.dashv(&g.compose(&h, n).unwrap(), n).unwrap()
        );
        let fv = f.vdash(&g, n).unwrap().vdash(&h, n).unwrap();
        assert_eq!(fv, f.vdash(&g.vdash(&h, n).unwrap(), n).unwrap());
        let inv = f.comp_inverse(n).unwrap();
        assert_eq!(f.compose(&inv, n).unwrap(), TreeSeries::leaf(n));
        assert_eq!(inv.compose(&f, n).unwrap(), TreeSeries::leaf(n));
        assert_eq!(inv.comp_inverse(n).unwrap(), f);
        let r = f.r_transform(n).unwrap();
        assert_eq!(r.dashv(&f, n).unwrap(), f);
        assert_eq!(r, inv.vdash_inverse(n).unwrap());
    }
}
