//! The admissible-cut Hopf algebra of Schröder trees, its decorated version, and the word
//! Hopf algebra on segmented words.
//!
//! The three algebras share one interface, [`HopfBasis`]: a basis element lists its cuts as
//! `(trunk, pieces, keeps_last)` triples, where `keeps_last` marks the cuts that belong to the
//! left half-coproduct. Everything else (forest coproducts, half-coproducts, tensors,
//! convolutions, character solving) is generic.
//!
//! A forest is a `Vec` of basis elements of positive weight; the empty forest is the unit.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::trees::{enumerate, Layout, SchroederTree, TreeKind};
use crate::words::{Letter, Word};

/// One term of the coproduct of a basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutTerm<B> {
    /// `None` when the whole element is cut away.
    pub trunk: Option<B>,
    /// Pruned parts, left to right.
    pub pieces: Vec<B>,
    /// Whether the term belongs to the left half-coproduct `Δ⁺_≺`.
    pub keeps_last: bool,
}

pub trait HopfBasis: Clone + Ord + Hash + fmt::Debug {
    fn weight(&self) -> usize;
    /// All terms of the (unreduced) coproduct, including the two trivial ones.
    fn cut_terms(&self) -> Vec<CutTerm<Self>>;
}

pub type Forest<B> = Vec<B>;

// ---------------------------------------------------------------------------------------------
// Cuts of plane trees

/// Admissible cuts as sorted lists of internal-vertex positions.
pub fn admissible_cuts(tree: &SchroederTree) -> Vec<Vec<usize>> {
    let layout = tree.layout();
    cuts_below(tree.word(), &layout, 0)
}

fn cuts_below(word: &[u8], layout: &Layout, p: usize) -> Vec<Vec<usize>> {
    if word[p] == 0 {
        return vec![Vec::new()];
    }
    let mut combined = vec![Vec::new()];
    for c in layout.children(word, p) {
        let sub = cuts_below(word, layout, c);
        combined = combined
            .iter()
            .flat_map(|prefix| {
                sub.iter().map(move |s| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(s);
                    v
                })
            })
            .collect();
    }
    combined.push(vec![p]);
    combined
}

struct RawCut {
    trunk_word: Option<Vec<u8>>,
    pieces: Vec<(usize, usize)>,
    keeps_last: bool,
}

/// Splits a tree along a cut. Pieces are returned as word ranges.
fn split(word: &[u8], layout: &Layout, cut: &[usize]) -> RawCut {
    let n = word.len();
    let pieces: Vec<(usize, usize)> = cut.iter().map(|&p| (p, layout.end[p])).collect();
    let keeps_last = pieces.iter().all(|&(_, e)| e != n);
    let trunk_word = if cut == [0] {
        None
    } else {
        let mut w = Vec::with_capacity(n);
        let mut q = 0;
        for &(s, e) in &pieces {
            w.extend_from_slice(&word[q..s]);
            w.push(0);
            q = e;
        }
        w.extend_from_slice(&word[q..]);
        Some(w)
    };
    RawCut { trunk_word, pieces, keeps_last }
}

fn tree_from(word: &[u8]) -> SchroederTree {
    let weight = word.iter().map(|&s| s as usize).sum();
    SchroederTree::from_word_unchecked(word.to_vec(), weight)
}

impl HopfBasis for SchroederTree {
    fn weight(&self) -> usize {
        SchroederTree::weight(self)
    }

    fn cut_terms(&self) -> Vec<CutTerm<Self>> {
        let layout = self.layout();
        let word = self.word();
        admissible_cuts(self)
            .iter()
            .map(|cut| {
                let raw = split(word, &layout, cut);
                CutTerm {
                    trunk: raw.trunk_word.map(|w| tree_from(&w)).filter(|t| !t.is_leaf()),
                    pieces: raw.pieces.iter().map(|&(s, e)| tree_from(&word[s..e])).collect(),
                    keeps_last: raw.keeps_last,
                }
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------------------------
// Decorated trees

/// A tree whose sectors carry letters, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedTree {
    tree: SchroederTree,
    word: Word,
}

impl DecoratedTree {
    pub fn new(tree: SchroederTree, word: Word) -> Result<Self> {
        if tree.weight() != word.len() {
            return Err(Error::LengthMismatch { expected: tree.weight(), got: word.len() });
        }
        Ok(DecoratedTree { tree, word })
    }

    pub fn tree(&self) -> &SchroederTree {
        &self.tree
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn is_corolla(&self) -> bool {
        self.tree.internal_count() == 1
    }
}

impl Ord for DecoratedTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.tree.cmp(&other.tree).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for DecoratedTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.word.letters().iter().map(|l| l.to_string()).collect();
        write!(f, "{}@[{}]", self.tree, letters.join(","))
    }
}

impl FromStr for DecoratedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tree, labels) = s.split_once('@').ok_or_else(|| Error::Parse {
            position: 0,
            message: "decorated tree needs `@[...]` labels".into(),
        })?;
        let inner = labels
            .trim()
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(|| Error::Parse { position: tree.len() + 1, message: "expected `[...]`".into() })?;
        let letters = inner
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(Letter::from_str)
            .collect::<Result<Vec<_>>>()?;
        DecoratedTree::new(tree.trim().parse()?, Word(letters))
    }
}

impl HopfBasis for DecoratedTree {
    fn weight(&self) -> usize {
        self.tree.weight()
    }

    fn cut_terms(&self) -> Vec<CutTerm<Self>> {
        let layout = self.tree.layout();
        let word = self.tree.word();
        let letters = self.word.letters();
        admissible_cuts(&self.tree)
            .iter()
            .map(|cut| {
                let raw = split(word, &layout, cut);
                let mut inside = vec![false; letters.len()];
                let pieces = raw
                    .pieces
                    .iter()
                    .map(|&(s, e)| {
                        // Sectors strictly inside the piece's leaf span.
                        let (l0, l1) = layout.leaf_span(s);
                        inside[l0..l1].iter_mut().for_each(|x| *x = true);
                        DecoratedTree { tree: tree_from(&word[s..e]), word: Word(letters[l0..l1].to_vec()) }
                    })
                    .collect();
                let trunk = raw.trunk_word.map(|w| DecoratedTree {
                    tree: tree_from(&w),
                    word: Word(
                        letters.iter().zip(&inside).filter(|(_, &i)| !i).map(|(l, _)| *l).collect(),
                    ),
                });
                CutTerm { trunk: trunk.filter(|t| !t.tree.is_leaf()), pieces, keeps_last: raw.keeps_last }
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------------------------
// Words (segmented-word Hopf algebra)

/// Coproduct on words: a subset `S` of positions goes to the left, the maximal runs of the
/// complement form the segmented word on the right. Left half: the last position is in `S`.
impl HopfBasis for Word {
    fn weight(&self) -> usize {
        self.len()
    }

    fn cut_terms(&self) -> Vec<CutTerm<Self>> {
        let n = self.len();
        let letters = self.letters();
        (0u32..1 << n)
            .map(|mask| {
                let chosen = |i: usize| mask >> i & 1 == 1;
                let left: Vec<Letter> = (0..n).filter(|&i| chosen(i)).map(|i| letters[i]).collect();
                let mut pieces = Vec::new();
                let mut run = Vec::new();
                for (i, l) in letters.iter().enumerate() {
                    if chosen(i) {
                        if !run.is_empty() {
                            pieces.push(Word(std::mem::take(&mut run)));
                        }
                    } else {
                        run.push(*l);
                    }
                }
                if !run.is_empty() {
                    pieces.push(Word(run));
                }
                CutTerm {
                    trunk: (!left.is_empty()).then_some(Word(left)),
                    pieces,
                    keeps_last: n > 0 && chosen(n - 1),
                }
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------------------------
// Tensors and coproducts

/// Which part of the coproduct to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Half {
    Full,
    Prec,
    Succ,
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Half::Full),
            "prec" => Ok(Half::Prec),
            "succ" => Ok(Half::Succ),
            _ => Err(Error::Domain(format!("unknown coproduct part {s:?}"))),
        }
    }
}

/// Integer combination of `F ⊗ G` with `F`, `G` forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2<B: HopfBasis>(BTreeMap<(Forest<B>, Forest<B>), i64>);

/// Integer combination of `F ⊗ G ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3<B: HopfBasis>(BTreeMap<Triple<B>, i64>);

type Triple<B> = (Forest<B>, Forest<B>, Forest<B>);

fn bump<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    let slot = map.entry(key).or_insert(0);
    *slot += c;
    if *slot == 0 {
        map.retain(|_, v| *v != 0);
    }
}

impl<B: HopfBasis> Default for Tensor2<B> {
    fn default() -> Self {
        Tensor2(BTreeMap::new())
    }
}

impl<B: HopfBasis> Default for Tensor3<B> {
    fn default() -> Self {
        Tensor3(BTreeMap::new())
    }
}

impl<B: HopfBasis> Tensor2<B> {
    /// `1 ⊗ 1`.
    pub fn unit() -> Self {
        let mut t = Self::default();
        t.add_term(Vec::new(), Vec::new(), 1);
        t
    }

    pub fn add_term(&mut self, left: Forest<B>, right: Forest<B>, c: i64) {
        bump(&mut self.0, (left, right), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest<B>, &Forest<B>, i64)> {
        self.0.iter().map(|((l, r), c)| (l, r, *c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, left: &[B], right: &[B]) -> i64 {
        self.0.get(&(left.to_vec(), right.to_vec())).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.0 {
            out.add_term(l.clone(), r.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.0 {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }

    /// Product in `H ⊗ H` (componentwise concatenation).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((l1, r1), c1) in &self.0 {
            for ((l2, r2), c2) in &other.0 {
                out.add_term(concat(l1, l2), concat(r1, r2), c1 * c2);
            }
        }
        out
    }

    /// `(f ⊗ id)` for a linear map `f` given on basis forests.
    pub fn apply_left(&self, f: impl Fn(&[B]) -> Result<Tensor2<B>>) -> Result<Tensor3<B>> {
        let mut out = Tensor3::default();
        for ((l, r), c) in &self.0 {
            for ((a, b), d) in &f(l)?.0 {
                bump(&mut out.0, (a.clone(), b.clone(), r.clone()), c * d);
            }
        }
        Ok(out)
    }

    /// `(id ⊗ f)`.
    pub fn apply_right(&self, f: impl Fn(&[B]) -> Result<Tensor2<B>>) -> Result<Tensor3<B>> {
        let mut out = Tensor3::default();
        for ((l, r), c) in &self.0 {
            for ((a, b), d) in &f(r)?.0 {
                bump(&mut out.0, (l.clone(), a.clone(), b.clone()), c * d);
            }
        }
        Ok(out)
    }

    /// Image under `g ⊗ g` for an algebra morphism given on basis elements.
    pub fn map_both<C: HopfBasis>(&self, g: impl Fn(&B) -> Vec<(Forest<C>, i64)>) -> Tensor2<C> {
        let image = |forest: &[B]| -> Vec<(Forest<C>, i64)> {
            let mut acc = vec![(Vec::new(), 1)];
            for b in forest {
                let img = g(b);
                acc = acc
                    .iter()
                    .flat_map(|(f, c)| img.iter().map(move |(h, d)| (concat(f, h), c * d)))
                    .collect();
            }
            acc
        };
        let mut out = Tensor2::default();
        for ((l, r), c) in &self.0 {
            for (li, a) in image(l) {
                for (ri, b) in image(r) {
                    out.add_term(li.clone(), ri, c * a * b);
                }
            }
        }
        out
    }
}

impl<B: HopfBasis> Tensor3<B> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn concat<B: Clone>(a: &[B], b: &[B]) -> Vec<B> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v
}

fn single_coproduct<B: HopfBasis>(b: &B, half: Half) -> Tensor2<B> {
    let mut out = Tensor2::default();
    for term in b.cut_terms() {
        let keep = match half {
            Half::Full => true,
            Half::Prec => term.keeps_last,
            Half::Succ => !term.keeps_last,
        };
        if keep {
            out.add_term(term.trunk.into_iter().collect(), term.pieces, 1);
        }
    }
    out
}

/// `Δ`, `Δ⁺_≺` or `Δ⁺_≻` of a forest. The half-coproducts split on the last tree, the one
/// holding the forest's rightmost leaf, and use the full coproduct on the others; they are
/// undefined on the unit.
pub fn coproduct<B: HopfBasis>(forest: &[B], half: Half) -> Result<Tensor2<B>> {
    let Some((last, rest)) = forest.split_last() else {
        return match half {
            Half::Full => Ok(Tensor2::unit()),
            _ => Err(Error::UnitInput),
        };
    };
    let mut acc = Tensor2::unit();
    for b in rest {
        acc = acc.mul(&single_coproduct(b, Half::Full));
    }
    Ok(acc.mul(&single_coproduct(last, half)))
}

/// The half-coproducts extended through the first tree instead of the last.
///
/// Kept for comparison: with this rule the second codendriform relation fails, already on
/// single trees such as `1,2,0,0,0,1,0,0`.
pub fn coproduct_first_factor<B: HopfBasis>(forest: &[B], half: Half) -> Result<Tensor2<B>> {
    let Some((first, rest)) = forest.split_first() else {
        return coproduct(forest, half);
    };
    let mut acc = single_coproduct(first, half);
    for b in rest {
        acc = acc.mul(&single_coproduct(b, Half::Full));
    }
    Ok(acc)
}

/// `Δ̄`, `Δ_≺` or `Δ_≻`: the coproducts with the trivial terms `F ⊗ 1` / `1 ⊗ F` removed.
pub fn reduced_coproduct<B: HopfBasis>(forest: &[B], half: Half) -> Result<Tensor2<B>> {
    if forest.is_empty() {
        return Err(Error::UnitInput);
    }
    let mut out = coproduct(forest, half)?;
    if half != Half::Succ {
        out.add_term(forest.to_vec(), Vec::new(), -1);
    }
    if half != Half::Prec {
        out.add_term(Vec::new(), forest.to_vec(), -1);
    }
    Ok(out)
}

/// Both sides of `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ`.
pub fn coassociativity_sides<B: HopfBasis>(forest: &[B]) -> Result<(Tensor3<B>, Tensor3<B>)> {
    let d = coproduct(forest, Half::Full)?;
    let full = |f: &[B]| coproduct(f, Half::Full);
    Ok((d.apply_left(full)?, d.apply_right(full)?))
}

/// Both sides of each of the three codendriform relations on a nonunit forest:
/// `(Δ_≺⊗I)Δ_≺ = (I⊗Δ̄)Δ_≺`, `(Δ_≻⊗I)Δ_≺ = (I⊗Δ_≺)Δ_≻`, `(Δ̄⊗I)Δ_≻ = (I⊗Δ_≻)Δ_≻`.
pub fn codendriform_sides<B: HopfBasis>(forest: &[B]) -> Result<[(Tensor3<B>, Tensor3<B>); 3]> {
    let red = |h: Half| move |f: &[B]| reduced_coproduct(f, h);
    let prec = reduced_coproduct(forest, Half::Prec)?;
    let succ = reduced_coproduct(forest, Half::Succ)?;
    Ok([
        (prec.apply_left(red(Half::Prec))?, prec.apply_right(red(Half::Full))?),
        (prec.apply_left(red(Half::Succ))?, succ.apply_right(red(Half::Prec))?),
        (succ.apply_left(red(Half::Full))?, succ.apply_right(red(Half::Succ))?),
    ])
}

/// All forests of total weight exactly `n` whose trees come from `trees_of_weight`.
pub fn forests_of_weight<B: Clone>(n: usize, trees_of_weight: &dyn Fn(usize) -> Vec<B>) -> Vec<Forest<B>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        let heads = trees_of_weight(first);
        let tails = forests_of_weight(n - first, trees_of_weight);
        for h in &heads {
            for t in &tails {
                let mut f = vec![h.clone()];
                f.extend_from_slice(t);
                out.push(f);
            }
        }
    }
    out
}

/// Forests of plain trees of total weight `n`.
pub fn tree_forests(n: usize) -> Vec<Forest<SchroederTree>> {
    forests_of_weight(n, &|w| enumerate(TreeKind::All, w).to_vec())
}

// ---------------------------------------------------------------------------------------------
// Linear forms

/// A linear form on the algebra, read off from its values on basis elements.
pub trait LinearForm<B, R> {
    fn eval(&self, forest: &[B]) -> R;
}

/// Multiplicative form; unlisted basis elements map to zero.
#[derive(Clone, Debug)]
pub struct Character<B, R> {
    values: HashMap<B, R>,
}

/// Form vanishing on the unit and on products of two or more basis elements.
#[derive(Clone, Debug)]
pub struct Infinitesimal<B, R> {
    values: HashMap<B, R>,
}

macro_rules! form_common {
    ($t:ident) => {
        impl<B: HopfBasis, R: Ring> $t<B, R> {
            pub fn new() -> Self {
                $t { values: HashMap::new() }
            }

            pub fn from_fn(support: impl IntoIterator<Item = B>, f: impl Fn(&B) -> R) -> Self {
                let values = support
                    .into_iter()
                    .map(|b| {
                        let v = f(&b);
                        (b, v)
                    })
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                $t { values }
            }

            pub fn set(&mut self, b: B, v: R) {
                if v.is_zero() {
                    self.values.remove(&b);
                } else {
                    self.values.insert(b, v);
                }
            }

            pub fn value(&self, b: &B) -> R {
                self.values.get(b).cloned().unwrap_or_else(R::zero)
            }

            /// Nonzero values, sorted by basis element.
            pub fn support(&self) -> Vec<(&B, &R)> {
                let mut v: Vec<_> = self.values.iter().collect();
                v.sort_by(|a, b| a.0.cmp(b.0));
                v
            }
        }

        impl<B: HopfBasis, R: Ring> Default for $t<B, R> {
            fn default() -> Self {
                Self::new()
            }
        }

        impl<B: HopfBasis, R: Ring> PartialEq for $t<B, R> {
            fn eq(&self, other: &Self) -> bool {
                self.values == other.values
            }
        }
    };
}

form_common!(Character);
form_common!(Infinitesimal);

impl<B: HopfBasis, R: Ring> LinearForm<B, R> for Character<B, R> {
    fn eval(&self, forest: &[B]) -> R {
        forest.iter().fold(R::one(), |acc, b| acc.mul(&self.value(b)))
    }
}

impl<B: HopfBasis, R: Ring> LinearForm<B, R> for Infinitesimal<B, R> {
    fn eval(&self, forest: &[B]) -> R {
        match forest {
            [b] => self.value(b),
            _ => R::zero(),
        }
    }
}

/// The counit `ε`.
pub struct Counit;

impl<B, R: Ring> LinearForm<B, R> for Counit {
    fn eval(&self, forest: &[B]) -> R {
        if forest.is_empty() {
            R::one()
        } else {
            R::zero()
        }
    }
}

/// `(f ∗ g)(F)`, `(f ≺ g)(F)` or `(f ≻ g)(F)` through `Δ`, `Δ⁺_≺`, `Δ⁺_≻`.
pub fn convolve<B: HopfBasis, R: Ring>(
    f: &impl LinearForm<B, R>,
    g: &impl LinearForm<B, R>,
    half: Half,
    forest: &[B],
) -> Result<R> {
    let mut acc = R::zero();
    for (l, r, c) in coproduct(forest, half)?.terms() {
        acc = acc.add(&f.eval(l).mul(&g.eval(r)).scale(&crate::ring::int(c)));
    }
    Ok(acc)
}

/// Solves `Φ = ε + κ ≺ Φ` on the given basis elements (and everything their cuts reach).
///
/// Each value only depends on strictly lighter elements, so a memoised recursion suffices:
/// `Φ(T) = κ(T) + Σ κ(trunk)·Π Φ(pieces)` over the nontrivial cuts of the left half.
pub fn solve_character<B: HopfBasis, R: Ring>(
    kappa: impl Fn(&B) -> R,
    targets: impl IntoIterator<Item = B>,
) -> Character<B, R> {
    let mut memo: HashMap<B, R> = HashMap::new();
    for t in targets {
        solve_rec(&t, &kappa, &mut memo);
    }
    Character { values: memo.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
}

fn solve_rec<B: HopfBasis, R: Ring>(t: &B, kappa: &impl Fn(&B) -> R, memo: &mut HashMap<B, R>) -> R {
    if let Some(v) = memo.get(t) {
        return v.clone();
    }
    let mut acc = kappa(t);
    for term in t.cut_terms() {
        if !term.keeps_last || term.pieces.is_empty() {
            continue;
        }
        let Some(trunk) = &term.trunk else { continue };
        let mut prod = kappa(trunk);
        for p in &term.pieces {
            if prod.is_zero() {
                break;
            }
            prod = prod.mul(&solve_rec(p, kappa, memo));
        }
        acc = acc.add(&prod);
    }
    memo.insert(t.clone(), acc.clone());
    acc
}

/// Inverse of [`solve_character`]: recovers `κ` from the tree values of `Φ`.
pub fn extract_cumulant<B: HopfBasis, R: Ring>(
    phi: impl Fn(&B) -> R,
    targets: impl IntoIterator<Item = B>,
) -> Infinitesimal<B, R> {
    let mut memo: HashMap<B, R> = HashMap::new();
    for t in targets {
        extract_rec(&t, &phi, &mut memo);
    }
    Infinitesimal { values: memo.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
}

fn extract_rec<B: HopfBasis, R: Ring>(t: &B, phi: &impl Fn(&B) -> R, memo: &mut HashMap<B, R>) -> R {
    if let Some(v) = memo.get(t) {
        return v.clone();
    }
    let mut acc = phi(t);
    for term in t.cut_terms() {
        if !term.keeps_last || term.pieces.is_empty() {
            continue;
        }
        let Some(trunk) = &term.trunk else { continue };
        let rest = term.pieces.iter().fold(R::one(), |a, p| a.mul(&phi(p)));
        if rest.is_zero() {
            continue;
        }
        acc = acc.sub(&extract_rec(trunk, phi, memo).mul(&rest));
    }
    memo.insert(t.clone(), acc.clone());
    acc
}

// ---------------------------------------------------------------------------------------------
// The morphism from words to decorated trees

/// `ι(w)`: every tree of weight `|w|`, decorated by `w`.
pub fn iota(w: &Word) -> Result<Vec<DecoratedTree>> {
    if w.is_empty() {
        return Err(Error::Empty);
    }
    Ok(enumerate(TreeKind::All, w.len())
        .iter()
        .map(|t| DecoratedTree { tree: t.clone(), word: w.clone() })
        .collect())
}

/// `ι` on a forest-valued tensor, i.e. `ι ⊗ ι`.
pub fn iota_tensor(t: &Tensor2<Word>) -> Tensor2<DecoratedTree> {
    t.map_both(|w| iota(w).unwrap_or_default().into_iter().map(|d| (vec![d], 1)).collect())
}

/// `Δ(ι(w))` (or a half of it), summed over the trees of `ι(w)`.
pub fn coproduct_of_iota(w: &Word, half: Half) -> Result<Tensor2<DecoratedTree>> {
    let mut out = Tensor2::default();
    for d in iota(w)? {
        out = out.add(&coproduct(&[d], half)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SchroederTree {
        s.parse().unwrap()
    }

    #[test]
    fn left_comb_coproduct() {
        let comb = t("1,1,0,0,0");
        let d = coproduct(std::slice::from_ref(&comb), Half::Full).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coefficient(&[], std::slice::from_ref(&comb)), 1);
        assert_eq!(d.coefficient(&[t("1,0,0")], &[t("1,0,0")]), 1);
        assert_eq!(d.coefficient(std::slice::from_ref(&comb), &[]), 1);
        let prec = coproduct(std::slice::from_ref(&comb), Half::Prec).unwrap();
        assert_eq!(prec.coefficient(&[t("1,0,0")], &[t("1,0,0")]), 1);
        assert_eq!(prec.coefficient(std::slice::from_ref(&comb), &[]), 1);
        assert_eq!(prec.len(), 2);
    }

    #[test]
    fn corolla_has_trivial_cuts_only() {
        for n in 1..6 {
            let c = SchroederTree::corolla(n);
            assert_eq!(coproduct(&[c], Half::Full).unwrap().len(), 2);
        }
    }

    #[test]
    fn decorated_cut_keeps_visible_letters() {
        let d: DecoratedTree = "1,1,0,0,0@[a1,a2]".parse().unwrap();
        let terms = d.cut_terms();
        let inner = terms.iter().find(|c| c.trunk.is_some() && !c.pieces.is_empty()).unwrap();
        assert_eq!(inner.trunk.as_ref().unwrap().to_string(), "1,0,0@[a2]");
        assert_eq!(inner.pieces[0].to_string(), "1,0,0@[a1]");
    }

    #[test]
    fn word_coproduct_two_letters() {
        let w: Word = "a1a2".parse().unwrap();
        let d = coproduct(std::slice::from_ref(&w), Half::Full).unwrap();
        let a1: Word = "a1".parse().unwrap();
        let a2: Word = "a2".parse().unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d.coefficient(&[], std::slice::from_ref(&w)), 1);
        assert_eq!(d.coefficient(std::slice::from_ref(&a1), std::slice::from_ref(&a2)), 1);
        assert_eq!(d.coefficient(std::slice::from_ref(&a2), std::slice::from_ref(&a1)), 1);
        let prec = coproduct(std::slice::from_ref(&w), Half::Prec).unwrap();
        assert_eq!(prec.len(), 2);
        assert_eq!(prec.coefficient(&[a2], &[a1]), 1);
        assert_eq!(prec.coefficient(&[w], &[]), 1);
    }

    #[test]
    fn half_coproducts_reject_unit() {
        assert_eq!(coproduct::<SchroederTree>(&[], Half::Prec), Err(Error::UnitInput));
    }
}
