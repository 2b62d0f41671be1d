//! Named self-check suites, run by the command-line `verify` subcommand.
//!
//! Each suite is a list of exact checks bounded by a weight parameter; a check either holds,
//! fails, or reports the error that prevented it from running.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cumulants::{
    cluster_involution, factor_moments, kappa_eval, kappa_scalar, moments_from_kappa, prime_tree_sign,
    scalar_reading, speicher_kappa, univariate, unsigned_polynomial, Evaluation, Mode,
};
use crate::error::{Error, Result};
use crate::hopf::{
    codendriform_sides, coassociativity_sides, coproduct, coproduct_of_iota, iota_tensor, tree_forests, Half,
};
use crate::ncpart::{
    enumerate_nc, moebius_column, moebius_from_bottom_closed, moebius_row, sector_partition, tree_to_arrangement,
    NoncrossingPartition,
};
use crate::nsym::{cumulant_k, lagrange_g, lagrange_g_component, s_in_k, Basis, KMethod, NSym};
use crate::operad::{corolla_series, gc_series, kappa_series, ldst_series, TreeSeries};
use crate::poly::MomentPoly;
use crate::ring::catalan;
use crate::symfun::{classical_cumulants, e_in_h, e_star, h, h_star, nsym_cumulants, star, PowerSeries};
use crate::trees::{enumerate, TreeKind};
use crate::words::Word;
use crate::{Rational, Ring};

const TREE_COUNTS: [usize; 10] = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049];
const PRIME_COUNTS: [usize; 9] = [1, 1, 2, 6, 22, 90, 394, 1806, 8558];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counting,
    Goldens,
    Nsym,
    Operad,
    Hopf,
    Speicher,
    Cluster,
    Classical,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Counting,
        Suite::Goldens,
        Suite::Nsym,
        Suite::Operad,
        Suite::Hopf,
        Suite::Speicher,
        Suite::Cluster,
        Suite::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Goldens => "goldens",
            Suite::Nsym => "nsym",
            Suite::Operad => "operad",
            Suite::Hopf => "hopf",
            Suite::Speicher => "speicher",
            Suite::Cluster => "cluster",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown suite `{s}`") })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Error message when the check could not be evaluated.
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

struct Runner {
    suite: Suite,
    report: Report,
}

impl Runner {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<bool>) {
        let (passed, error) = match f() {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.report.checks.push(Check { suite: self.suite, name: name.into(), passed, error });
    }
}

/// Runs one suite (or all of them) with every weight-dependent bound capped at `weight`.
pub fn run(suite: Suite, weight: usize) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let mut report = Report::default();
    for s in suites {
        let mut r = Runner { suite: s, report: Report::default() };
        match s {
            Suite::Counting => counting(&mut r, weight),
            Suite::Goldens => goldens(&mut r),
            Suite::Nsym => nsym_routes(&mut r, weight),
            Suite::Operad => operad(&mut r, weight),
            Suite::Hopf => hopf(&mut r, weight),
            Suite::Speicher => speicher(&mut r, weight),
            Suite::Cluster => cluster(&mut r, weight),
            Suite::Classical => classical(&mut r, weight),
            Suite::All => unreachable!("expanded above"),
        }
        report.checks.extend(r.report.checks);
    }
    report
}

fn counting(r: &mut Runner, w: usize) {
    r.check("tree counts", || {
        Ok((0..=w.min(9)).all(|n| enumerate(TreeKind::All, n).len() == TREE_COUNTS[n]))
    });
    r.check("prime tree counts", || {
        Ok((0..=w.min(8)).all(|n| enumerate(TreeKind::Prime, n).len() == PRIME_COUNTS[n]))
    });
    r.check("binary and right-directed counts are Catalan", || {
        Ok((0..=w).all(|n| {
            let c = catalan(n);
            BigInt::from(enumerate(TreeKind::Binary, n).len()) == c
                && BigInt::from(enumerate(TreeKind::RightDirected, n).len()) == c
        }))
    });
    r.check("prime trees counted by Catalan products over NC", || {
        Ok((1..=w.min(8)).all(|n| {
            let sum: BigInt = enumerate_nc(n)
                .iter()
                .map(|pi| pi.blocks().iter().map(|b| catalan(b.len() - 1)).product::<BigInt>())
                .sum();
            sum == BigInt::from(enumerate(TreeKind::Prime, n).len())
        }))
    });
}

fn k_component(n: usize) -> NSym {
    cumulant_k(n, KMethod::Solve).homogeneous(n)
}

fn goldens(r: &mut Runner) {
    r.check("g0..g4", || {
        let want = [
            "1",
            "S[1]",
            "S[2] + S[1,1]",
            "S[3] + 2S[2,1] + S[1,2] + S[1,1,1]",
            "S[4] + 3S[3,1] + 2S[2,2] + S[1,3] + 3S[2,1,1] + 2S[1,2,1] + S[1,1,2] + S[1,1,1,1]",
        ];
        Ok(want.iter().enumerate().all(|(n, w)| lagrange_g_component(n).expand(Basis::S).to_string() == *w))
    });
    r.check("g3 in ribbons", || {
        Ok(lagrange_g(3).homogeneous(3).expand(Basis::R).to_string() == "5R[3] + 3R[2,1] + 2R[1,2] + R[1,1,1]")
    });
    r.check("K1..K4 in S, Λ, R", || {
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
        Ok(want.iter().enumerate().all(|(i, row)| {
            [Basis::S, Basis::Lambda, Basis::R].into_iter().zip(row).all(|(b, w)| k_component(i + 1).expand(b).to_string() == *w)
        }))
    });
    r.check("κ to weight 3", || {
        let k = kappa_series(3);
        let terms: Vec<String> = k.terms().iter().map(|(t, c)| format!("{c}:{t}")).collect();
        Ok(terms
            == [
                "1:0",
                "1:1,0,0",
                "1:2,0,0,0",
                "-1:1,1,0,0,0",
                "1:3,0,0,0,0",
                "-1:2,1,0,0,0,0",
                "-1:2,0,1,0,0,0",
                "-1:1,2,0,0,0,0",
                "1:1,1,1,0,0,0,0",
                "1:1,1,0,1,0,0,0",
            ])
    });
    r.check("S1..S4 in the K alphabet", || {
        let want = [
            "K[1]",
            "K[2] + K[1,1]",
            "K[3] + 2K[2,1] + K[1,2] + K[1,1,1]",
            "K[4] + 3K[3,1] + 2K[2,2] + K[1,3] + 3K[2,1,1] + 2K[1,2,1] + K[1,1,2] + K[1,1,1,1]",
        ];
        Ok(want.iter().enumerate().all(|(i, w)| s_in_k(i + 1).to_string() == *w))
    });
}

fn nsym_routes(r: &mut Runner, w: usize) {
    let solve = cumulant_k(w, KMethod::Solve);
    r.check("antipode formula = solve", || Ok(cumulant_k(w, KMethod::AntipodeFormula) == solve));
    r.check("ribbon rule = solve", || Ok(cumulant_k(w, KMethod::RibbonRule) == solve));
    r.check("projected κ = solve", || Ok(kappa_series(w).project_to_nsym() == solve));
    r.check("S_n recovered from the K alphabet", || {
        let ks: Vec<NSym> = (0..=w).map(|n| if n == 0 { NSym::one() } else { solve.homogeneous(n) }).collect();
        Ok((1..=w).all(|n| s_in_k(n).substitute(&ks) == NSym::s_n(n)))
    });
}

fn operad(r: &mut Runner, w: usize) {
    let (fc, gc, kappa) = (corolla_series(w), gc_series(w), kappa_series(w));
    r.check("f_c ∘ g_c = leaf", || Ok(fc.compose(&gc, w)? == TreeSeries::leaf(w)));
    r.check("κ ⊣ f_c = f_c", || Ok(kappa.dashv(&fc, w)? == fc));
    r.check("R-transform of f_c = κ", || Ok(fc.r_transform(w)? == kappa));
    r.check("⊢-inverse of g_c = κ", || Ok(gc.vdash_inverse(w)? == kappa));
    r.check("⊣-fixpoint of f_c = left-directed trees", || Ok(fc.dashv_fixpoint(w)? == ldst_series(w)));
    r.check("mixed associativity on named series", || {
        let m = w.min(6);
        let named = [corolla_series(m), gc_series(m), kappa_series(m), ldst_series(m)];
        for f in &named {
            for g in &named {
                let fg = f.compose(g, m)?;
                if f.dashv(g, m)?.vdash(g, m)? != fg {
                    return Ok(false);
                }
                for h in &named {
                    if f.dashv(g, m)?.dashv(h, m)? != f.dashv(&g.compose(h, m)?, m)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
}

fn hopf(r: &mut Runner, w: usize) {
    let m = w.min(5);
    r.check("coassociativity", || {
        for n in 1..=m {
            for f in tree_forests(n) {
                let (a, b) = coassociativity_sides(&f)?;
                if a != b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    r.check("codendriform relations", || {
        for n in 1..=m {
            for f in tree_forests(n) {
                if codendriform_sides(&f)?.iter().any(|(a, b)| a != b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    r.check("left comb coproduct", || {
        let t: crate::trees::SchroederTree = "1,1,0,0,0".parse()?;
        let d = coproduct(std::slice::from_ref(&t), Half::Full)?;
        let c1 = crate::trees::SchroederTree::corolla(1);
        let mut want = crate::hopf::Tensor2::default();
        want.add_term(vec![t.clone()], vec![], 1);
        want.add_term(vec![], vec![t], 1);
        want.add_term(vec![c1.clone()], vec![c1], 1);
        Ok(d == want)
    });
    r.check("ι is a morphism for Δ and Δ≺", || {
        for n in 1..=w.min(4) {
            let word = Word::standard(n);
            for half in [Half::Full, Half::Prec, Half::Succ] {
                if iota_tensor(&coproduct(std::slice::from_ref(&word), half)?) != coproduct_of_iota(&word, half)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
}

fn scalar(e: Evaluation) -> Result<MomentPoly> {
    match e {
        Evaluation::Scalar(p) => Ok(p),
        Evaluation::Expr(p) => p.scalar_image(),
    }
}

fn speicher(r: &mut Runner, w: usize) {
    r.check("prime-tree κ = Möbius inversion", || {
        for n in 1..=w.min(7) {
            if scalar(kappa_eval(n, Mode::Scalar)?)? != speicher_kappa(n)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    r.check("moments from cumulants", || {
        for n in 1..=w.min(6) {
            if moments_from_kappa(n)? != MomentPoly::atom(Word::standard(n)) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    r.check("Kreweras example", || {
        let pi: NoncrossingPartition = "134|2|57|6|8".parse()?;
        Ok(pi.kreweras() == "12|3|478|56".parse()?)
    });
    r.check("Kreweras reverses order", || {
        for n in 1..=w.min(7) {
            let all = enumerate_nc(n);
            for a in &all {
                for b in &all {
                    if a.leq(b)? && !b.kreweras().leq(&a.kreweras())? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
    r.check("Möbius closed form, recursion, duality", || {
        for n in 1..=w.min(7) {
            let row = moebius_row(&NoncrossingPartition::bottom(n));
            let col = moebius_column(&NoncrossingPartition::top(n));
            for pi in enumerate_nc(n) {
                let c = moebius_from_bottom_closed(&pi);
                if row[&pi] != c || col[&pi.kreweras()] != c {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    r.check("sector partition = complement of arrangement partition", || {
        for n in 1..=w.min(7) {
            for t in enumerate(TreeKind::Prime, n).iter() {
                if sector_partition(t)? != tree_to_arrangement(t)?.partition()?.kreweras() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
}

fn cluster(r: &mut Runner, w: usize) {
    r.check("involution is sign-reversing, fixed-point-free and cancels", || {
        for n in 2..=w.min(6) {
            let word = Word::standard(n);
            for j in 1..n {
                let k = n - j;
                let mut total = MomentPoly::zero();
                for t in enumerate(TreeKind::Prime, n).iter() {
                    let u = cluster_involution(t, j, k)?;
                    if &u == t || &cluster_involution(&u, j, k)? != t {
                        return Ok(false);
                    }
                    if prime_tree_sign(t) == prime_tree_sign(&u) {
                        return Ok(false);
                    }
                    let term = factor_moments(&scalar_reading(t, &word)?, j).scale(&prime_tree_sign(t));
                    total = total.add(&term);
                }
                if !total.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
}

fn classical(r: &mut Runner, w: usize) {
    let m = w.min(6);
    r.check("unsigned polynomials n = 3, 4", || {
        Ok(unsigned_polynomial(3)?.to_string() == "2m1^3 + 3m2m1 + m3"
            && unsigned_polynomial(4)?.to_string() == "5m1^4 + 10m2m1^2 + 2m2^2 + 4m3m1 + m4")
    });
    r.check("k_n = (−1)^n e_n*", || {
        Ok(classical_cumulants(m).iter().enumerate().all(|(i, k)| {
            let e = e_star(i + 1);
            *k == if (i + 1) % 2 == 0 { e } else { e.neg() }
        }))
    });
    r.check("h ↦ h* is an involution", || {
        Ok((1..=m).all(|n| star(&h_star(n)) == h(n) && star(&e_star(n)) == e_in_h(n)))
    });
    r.check("reversion round trip to order 8", || {
        let f: PowerSeries<Rational> = PowerSeries::new(
            [0, 1, 2, -1, 3, 0, -2, 1, 5].iter().map(|&c| Rational::from_integer(c.into())).collect(),
            8,
        );
        let g = f.revert()?;
        Ok(g.revert()? == f && g == f.revert_lagrange()? && f.compose(&g)? == PowerSeries::variable(8))
    });
    r.check("classical = scalar cumulants = NSym character", || {
        let classical = classical_cumulants(m);
        let ns = nsym_cumulants(m);
        for n in 1..=m {
            let s = univariate(&kappa_scalar(&Word::standard(n))?);
            if classical[n - 1] != s || ns[n - 1] != s {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let report = run(Suite::All, 4);
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
