use sct_core::nsym::{cumulant_k, lagrange_g, lagrange_g_component, s_in_k, Basis, KMethod, NSym};
use sct_core::operad::kappa_series;
use sct_core::Ring;

fn k(n: usize) -> NSym {
    cumulant_k(n, KMethod::Solve).homogeneous(n)
}

#[test]
fn lagrange_components_print() {
    let want = [
        "1",
        "S[1]",
        "S[2] + S[1,1]",
        "S[3] + 2S[2,1] + S[1,2] + S[1,1,1]",
        "S[4] + 3S[3,1] + 2S[2,2] + S[1,3] + 3S[2,1,1] + 2S[1,2,1] + S[1,1,2] + S[1,1,1,1]",
    ];
    for (n, w) in want.iter().enumerate() {
        assert_eq!(lagrange_g_component(n).expand(Basis::S).to_string(), *w, "g{n}");
    }
    assert_eq!(lagrange_g(3).homogeneous(3).expand(Basis::R).to_string(), "5R[3] + 3R[2,1] + 2R[1,2] + R[1,1,1]");
}

#[test]
fn cumulant_components_in_three_bases() {
    let want = [
        ["S[1]", "L[1]", "R[1]"],
        ["S[2] - S[1,1]", "-L[2]", "-R[1,1]"],
        ["S[3] - 2S[2,1] - S[1,2] + 2S[1,1,1]", "L[3] + L[2,1]", "R[1,2] + 2R[1,1,1]"],
        [
            "S[4] - 3S[3,1] - 2S[2,2] - S[1,3] + 5S[2,1,1] + 3S[1,2,1] + 2S[1,1,2] - 5S[1,1,1,1]",
            "-(L[4] + 2L[3,1] + L[2,2] + L[2,1,1])",
            "-(R[1,3] + 2R[1,2,1] + 3R[1,1,2] + 5R[1,1,1,1])",
        ],
    ];
    for (i, row) in want.iter().enumerate() {
        for (b, w) in [Basis::S, Basis::Lambda, Basis::R].into_iter().zip(row) {
            assert_eq!(k(i + 1).expand(b).to_string(), *w, "K{} in {b:?}", i + 1);
        }
    }
}

#[test]
fn k4_grouped_display_value() {
    // S4 − S13 − 3(S31 − S121) − 2(S22 − S112) + 5(S211 − S1111)
    let grouped = NSym::from_terms([
        (vec![4], 1),
        (vec![1, 3], -1),
        (vec![3, 1], -3),
        (vec![1, 2, 1], 3),
        (vec![2, 2], -2),
        (vec![1, 1, 2], 2),
        (vec![2, 1, 1], 5),
        (vec![1, 1, 1, 1], -5),
    ]);
    assert_eq!(k(4), grouped);
}

#[test]
fn s_in_cumulant_alphabet() {
    let want = [
        "K[1]",
        "K[2] + K[1,1]",
        "K[3] + 2K[2,1] + K[1,2] + K[1,1,1]",
        "K[4] + 3K[3,1] + 2K[2,2] + K[1,3] + 3K[2,1,1] + 2K[1,2,1] + K[1,1,2] + K[1,1,1,1]",
    ];
    let ks: Vec<NSym> = (0..=6).map(|n| if n == 0 { NSym::one() } else { k(n) }).collect();
    for (i, w) in want.iter().enumerate() {
        let n = i + 1;
        assert_eq!(s_in_k(n).to_string(), *w);
        assert_eq!(s_in_k(n).substitute(&ks), NSym::s_n(n));
    }
    for n in 5..=6 {
        assert_eq!(s_in_k(n).substitute(&ks), NSym::s_n(n));
    }
}

#[test]
fn three_routes_and_tree_projection_agree() {
    let n = 8;
    let solve = cumulant_k(n, KMethod::Solve);
    assert_eq!(cumulant_k(n, KMethod::AntipodeFormula), solve);
    assert_eq!(cumulant_k(n, KMethod::RibbonRule), solve);
    assert_eq!(kappa_series(n).project_to_nsym(), solve);
}

#[test]
fn k_is_minus_omega_g_at_minus_a() {
    for n in 1..=6 {
        let rhs = lagrange_g_component(n - 1).omega().minus_a().scale(&(-sct_core::ring::int(1)));
        assert_eq!(k(n), rhs, "n = {n}");
    }
}
