//! Noncrossing partitions, their lattice, and the correspondences with prime and
//! right-directed Schröder trees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::format::join_usize;
use crate::ring::catalan;
use crate::trees::{enumerate, SchroederTree, Shape, TreeKind};

/// A noncrossing partition of `{1..n}`: blocks sorted internally and by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..{n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {x} missing")));
        }
        let p = NoncrossingPartition { n, blocks };
        if p.has_crossing() {
            return Err(Error::InvalidPartition(format!("{p} is crossing")));
        }
        Ok(p)
    }

    /// All singletons.
    pub fn bottom(n: usize) -> Self {
        NoncrossingPartition { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// A single block (empty for `n = 0`).
    pub fn top(n: usize) -> Self {
        let blocks = if n == 0 { Vec::new() } else { vec![(1..=n).collect()] };
        NoncrossingPartition { n, blocks }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every element, indexed `1..=n` (slot 0 unused).
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                idx[x] = i;
            }
        }
        idx
    }

    fn has_crossing(&self) -> bool {
        let idx = self.block_index();
        // a < b < c < d with a,c in one block and b,d in another.
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if idx[b] == idx[a] {
                    continue;
                }
                for c in b + 1..=self.n {
                    if idx[c] != idx[a] {
                        continue;
                    }
                    if (c + 1..=self.n).any(|d| idx[d] == idx[b]) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self.refines(&other.block_index()))
    }

    fn refines(&self, coarse_index: &[usize]) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|&x| coarse_index[x] == coarse_index[b[0]]))
    }

    /// Whether the elements `lo..=hi` form a union of blocks.
    fn is_union_of_blocks(&self, idx: &[usize], lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|x| self.blocks[idx[x]].iter().all(|&y| (lo..=hi).contains(&y)))
    }

    /// Kreweras complement: `i'` and `j'` (`i < j`) share a block iff `{i+1..j}` is a union
    /// of blocks of `self`.
    pub fn kreweras(&self) -> Self {
        let idx = self.block_index();
        let mut next: Vec<Option<usize>> = vec![None; self.n + 1];
        for (i, slot) in next.iter_mut().enumerate().skip(1) {
            *slot = (i + 1..=self.n).find(|&j| self.is_union_of_blocks(&idx, i + 1, j));
        }
        let mut has_prev = vec![false; self.n + 1];
        for j in next.iter().flatten() {
            has_prev[*j] = true;
        }
        let mut blocks = Vec::new();
        for start in (1..=self.n).filter(|&s| !has_prev[s]) {
            let mut block = vec![start];
            let mut cur = start;
            while let Some(j) = next[cur] {
                block.push(j);
                cur = j;
            }
            blocks.push(block);
        }
        blocks.sort();
        NoncrossingPartition { n: self.n, blocks }
    }

    /// Sector partition of a tree of positive weight.
    pub fn from_tree_sectors(t: &SchroederTree) -> Self {
        NoncrossingPartition { n: t.weight(), blocks: t.sector_blocks() }
    }

    /// Compact text form used by the printed examples (`134|2|57|6|8`), valid for `n ≤ 9`.
    pub fn to_compact(&self) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&x| compact_digit(x)).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }
}

fn compact_digit(x: usize) -> char {
    char::from_digit(x as u32, 36).map(|c| c.to_ascii_uppercase()).unwrap_or('?')
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| join_usize(b, ",")).collect();
        f.write_str(&parts.join("|"))
    }
}

/// Parses `1,4,5,6|2,3` or the compact single-digit form `134|2|57|6|8` (`A` = 10).
impl FromStr for NoncrossingPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::bottom(0));
        }
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let part = part.trim();
            let block: Vec<usize> = if part.contains(',') {
                part.split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse { position: 0, message: format!("bad block `{part}`") })?
            } else {
                part.chars()
                    .map(|c| c.to_digit(36).map(|d| d as usize))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Parse { position: 0, message: format!("bad block `{part}`") })?
            };
            if block.is_empty() {
                return Err(Error::Parse { position: 0, message: "empty block".into() });
            }
            blocks.push(block);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::new(n, blocks)
    }
}

/// All noncrossing partitions of `{1..n}`, generated by the block of the first element.
pub fn enumerate_nc(n: usize) -> Vec<NoncrossingPartition> {
    fn on_range(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
        if lo > hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        // The block of `lo` is {lo} ∪ S for S ⊆ (lo, hi]; gaps between its elements are
        // filled independently.
        let rest: Vec<usize> = (lo + 1..=hi).collect();
        for mask in 0u32..(1u32 << rest.len()) {
            let mut block = vec![lo];
            block.extend(rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
            let mut gaps = Vec::new();
            for w in block.windows(2) {
                gaps.push((w[0] + 1, w[1] - 1));
            }
            gaps.push((*block.last().unwrap() + 1, hi));
            let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![block]];
            for (a, b) in gaps {
                let fills = on_range(a, b);
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        fills.iter().map(move |f| {
                            let mut q = p.clone();
                            q.extend(f.iter().cloned());
                            q
                        })
                    })
                    .collect();
            }
            out.extend(partial);
        }
        out
    }
    let mut all: Vec<NoncrossingPartition> = on_range(1, n)
        .into_iter()
        .map(|mut blocks| {
            blocks.sort();
            NoncrossingPartition { n, blocks }
        })
        .collect();
    all.sort();
    all
}

/// `μ(σ, π)` on the noncrossing partition lattice.
pub fn moebius(sigma: &NoncrossingPartition, pi: &NoncrossingPartition) -> Result<BigInt> {
    if !sigma.leq(pi)? {
        return Err(Error::NotComparable(sigma.to_string(), pi.to_string()));
    }
    let interval: Vec<NoncrossingPartition> = enumerate_nc(sigma.n)
        .into_iter()
        .filter(|t| sigma.refines(&t.block_index()) && t.refines(&pi.block_index()))
        .collect();
    let row = moebius_over(sigma, interval);
    Ok(row[pi].clone())
}

/// `μ(σ, τ)` for every `τ ≥ σ`.
pub fn moebius_row(sigma: &NoncrossingPartition) -> HashMap<NoncrossingPartition, BigInt> {
    let upper: Vec<NoncrossingPartition> =
        enumerate_nc(sigma.n).into_iter().filter(|t| sigma.refines(&t.block_index())).collect();
    moebius_over(sigma, upper)
}

/// Recursion `μ(σ,τ) = −Σ_{σ≤ρ<τ} μ(σ,ρ)` over the given up-set of `σ`.
fn moebius_over(
    sigma: &NoncrossingPartition,
    mut elems: Vec<NoncrossingPartition>,
) -> HashMap<NoncrossingPartition, BigInt> {
    // Finer partitions (more blocks) first, so every ρ < τ is handled before τ.
    elems.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
    let indices: Vec<Vec<usize>> = elems.iter().map(NoncrossingPartition::block_index).collect();
    let mut values: Vec<BigInt> = Vec::with_capacity(elems.len());
    for (i, tau) in elems.iter().enumerate() {
        if tau == sigma {
            values.push(BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for j in 0..i {
            if elems[j].block_count() > tau.block_count() && elems[j].refines(&indices[i]) {
                acc -= &values[j];
            }
        }
        values.push(acc);
    }
    elems.into_iter().zip(values).collect()
}

/// `μ(τ, π)` for every `τ ≤ π`, by the dual recursion from the top of the interval.
pub fn moebius_column(pi: &NoncrossingPartition) -> HashMap<NoncrossingPartition, BigInt> {
    let pi_index = pi.block_index();
    let mut elems: Vec<NoncrossingPartition> =
        enumerate_nc(pi.n).into_iter().filter(|t| t.refines(&pi_index)).collect();
    elems.sort_by(|a, b| a.block_count().cmp(&b.block_count()).then_with(|| a.cmp(b)));
    let mut values: Vec<BigInt> = Vec::with_capacity(elems.len());
    for (i, tau) in elems.iter().enumerate() {
        if tau == pi {
            values.push(BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for j in 0..i {
            if elems[j].block_count() < tau.block_count() && tau.refines(&elems[j].block_index()) {
                acc -= &values[j];
            }
        }
        values.push(acc);
    }
    elems.into_iter().zip(values).collect()
}

/// `μ(0̂, π) = (−1)^{n−#π} Π_B C_{#B−1}`.
pub fn moebius_from_bottom_closed(pi: &NoncrossingPartition) -> BigInt {
    let sign = if (pi.n - pi.block_count()).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    pi.blocks.iter().fold(sign, |acc, b| acc * catalan(b.len() - 1))
}

/// A plane binary tree whose leaves carry labels from `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelledBinary {
    Leaf(usize),
    Node(Box<LabelledBinary>, Box<LabelledBinary>),
}

impl LabelledBinary {
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            LabelledBinary::Leaf(l) => out.push(*l),
            LabelledBinary::Node(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            LabelledBinary::Leaf(_) => 0,
            LabelledBinary::Node(a, b) => 1 + a.internal_count() + b.internal_count(),
        }
    }

    fn min_label(&self) -> usize {
        match self {
            LabelledBinary::Leaf(l) => *l,
            LabelledBinary::Node(a, _) => a.min_label(),
        }
    }

    fn max_label(&self) -> usize {
        match self {
            LabelledBinary::Leaf(l) => *l,
            LabelledBinary::Node(_, b) => b.max_label(),
        }
    }

    /// Labels the leaves of a binary shape with `labels` in order.
    fn from_shape(shape: &Shape, labels: &mut impl Iterator<Item = usize>) -> Self {
        match shape {
            Shape::Leaf => LabelledBinary::Leaf(labels.next().expect("enough labels")),
            Shape::Node(c) => LabelledBinary::Node(
                Box::new(Self::from_shape(&c[0], labels)),
                Box::new(Self::from_shape(&c[1], labels)),
            ),
        }
    }
}

impl fmt::Display for LabelledBinary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelledBinary::Leaf(l) => write!(f, "{l}"),
            LabelledBinary::Node(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// A noncrossing forest of labelled binary trees whose label sets partition `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryArrangement {
    n: usize,
    trees: Vec<LabelledBinary>,
}

impl BinaryArrangement {
    pub fn new(n: usize, mut trees: Vec<LabelledBinary>) -> Result<Self> {
        trees.sort_by_key(LabelledBinary::min_label);
        let a = BinaryArrangement { n, trees };
        a.partition()?;
        for t in &a.trees {
            let labels = t.labels();
            if labels.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPartition(format!("tree {t} has unordered labels")));
            }
        }
        Ok(a)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn trees(&self) -> &[LabelledBinary] {
        &self.trees
    }

    pub fn internal_count(&self) -> usize {
        self.trees.iter().map(LabelledBinary::internal_count).sum()
    }

    /// Blocks are the label sets of the trees.
    pub fn partition(&self) -> Result<NoncrossingPartition> {
        NoncrossingPartition::new(self.n, self.trees.iter().map(LabelledBinary::labels).collect())
    }
}

impl fmt::Display for BinaryArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.trees.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn require_prime(t: &SchroederTree) -> Result<()> {
    if t.is_leaf() || !t.is_prime() {
        return Err(Error::NotPrime(t.to_string()));
    }
    Ok(())
}

/// Removes every middle edge and the root of a prime tree; leaf `i` (0-based) gets label `i+1`
/// and the root's final leaf is dropped.
pub fn tree_to_arrangement(t: &SchroederTree) -> Result<BinaryArrangement> {
    require_prime(t)?;
    let shape = t.to_shape();
    let mut next_label = 1usize;
    let mut components = Vec::new();

    fn skeleton(s: &Shape, next: &mut usize, comps: &mut Vec<LabelledBinary>) -> LabelledBinary {
        match s {
            Shape::Leaf => {
                let l = *next;
                *next += 1;
                LabelledBinary::Leaf(l)
            }
            Shape::Node(c) => {
                let first = skeleton(&c[0], next, comps);
                for middle in &c[1..c.len() - 1] {
                    let m = skeleton(middle, next, comps);
                    comps.push(m);
                }
                let last = skeleton(&c[c.len() - 1], next, comps);
                LabelledBinary::Node(Box::new(first), Box::new(last))
            }
        }
    }

    let root = shape.children();
    for child in &root[..root.len() - 1] {
        let c = skeleton(child, &mut next_label, &mut components);
        components.push(c);
    }
    BinaryArrangement::new(t.weight(), components)
}

/// Inverse of [`tree_to_arrangement`].
pub fn arrangement_to_tree(a: &BinaryArrangement) -> Result<SchroederTree> {
    if a.n == 0 {
        return Err(Error::InvalidPartition("empty arrangement has no prime tree".into()));
    }
    let by_min: BTreeMap<usize, &LabelledBinary> = a.trees.iter().map(|t| (t.min_label(), t)).collect();

    // Components whose spans tile `lo..=hi`, left to right.
    fn tile<'a>(
        lo: usize,
        hi: usize,
        by_min: &BTreeMap<usize, &'a LabelledBinary>,
    ) -> Result<Vec<&'a LabelledBinary>> {
        let mut out = Vec::new();
        let mut at = lo;
        while at <= hi {
            let t = by_min.get(&at).ok_or_else(|| {
                Error::InvalidPartition(format!("no component starts at label {at}"))
            })?;
            out.push(*t);
            at = t.max_label() + 1;
        }
        if at != hi + 1 {
            return Err(Error::InvalidPartition("components overlap".into()));
        }
        Ok(out)
    }

    fn expand(t: &LabelledBinary, by_min: &BTreeMap<usize, &LabelledBinary>) -> Result<Shape> {
        match t {
            LabelledBinary::Leaf(_) => Ok(Shape::Leaf),
            LabelledBinary::Node(l, r) => {
                let mut children = vec![expand(l, by_min)?];
                for m in tile(l.max_label() + 1, r.min_label() - 1, by_min)? {
                    children.push(expand(m, by_min)?);
                }
                children.push(expand(r, by_min)?);
                Ok(Shape::Node(children))
            }
        }
    }

    let mut root = Vec::new();
    for c in tile(1, a.n, &by_min)? {
        root.push(expand(c, &by_min)?);
    }
    root.push(Shape::Leaf);
    if root.len() < 2 {
        return Err(Error::InvalidPartition("arrangement does not cover 1..n".into()));
    }
    Shape::Node(root).to_tree()
}

/// All arrangements on `{1..n}`: a noncrossing partition and a binary tree per block.
pub fn enumerate_arrangements(n: usize) -> Vec<BinaryArrangement> {
    let mut out = Vec::new();
    for pi in enumerate_nc(n) {
        let mut partial: Vec<Vec<LabelledBinary>> = vec![Vec::new()];
        for block in pi.blocks() {
            let shapes: Vec<LabelledBinary> = enumerate(TreeKind::Binary, block.len() - 1)
                .iter()
                .map(|t| LabelledBinary::from_shape(&t.to_shape(), &mut block.iter().copied()))
                .collect();
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    shapes.iter().map(move |s| {
                        let mut q = p.clone();
                        q.push(s.clone());
                        q
                    })
                })
                .collect();
        }
        for trees in partial {
            out.push(BinaryArrangement::new(n, trees).expect("blocks of a noncrossing partition"));
        }
    }
    out
}

/// Sector partition of a prime tree.
pub fn sector_partition(t: &SchroederTree) -> Result<NoncrossingPartition> {
    require_prime(t)?;
    Ok(NoncrossingPartition::from_tree_sectors(t))
}

/// The right-directed tree whose sector partition is `pi`.
pub fn nc_to_rdt(pi: &NoncrossingPartition) -> SchroederTree {
    let idx = pi.block_index();

    fn build(lo: usize, hi: usize, pi: &NoncrossingPartition, idx: &[usize]) -> Shape {
        if lo > hi {
            return Shape::Leaf;
        }
        let block = &pi.blocks[idx[lo]];
        let mut children = vec![Shape::Leaf];
        for w in block.windows(2) {
            children.push(build(w[0] + 1, w[1] - 1, pi, idx));
        }
        children.push(build(block[block.len() - 1] + 1, hi, pi, idx));
        Shape::Node(children)
    }

    build(1, pi.n, pi, &idx).to_tree().expect("construction yields a reduced tree")
}

/// A nondecreasing parking function `π₁ ≤ … ≤ πₙ`, `πᵢ ≤ i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ndpf(pub Vec<usize>);

impl Ndpf {
    /// Packed evaluation: multiplicities of the letters that occur, in increasing order.
    pub fn ev(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut prev = None;
        for &x in &self.0 {
            if prev == Some(x) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                prev = Some(x);
            }
        }
        out
    }
}

impl fmt::Display for Ndpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_usize(&self.0, ""))
    }
}

pub fn ndpf_enumerate(n: usize) -> Vec<Ndpf> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Ndpf>) {
        if i > n {
            out.push(Ndpf(cur.clone()));
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for v in lo..=i {
            cur.push(v);
            go(i + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NoncrossingPartition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_nc(0).len(), 1);
        assert_eq!(enumerate_nc(3).len(), 5);
        assert_eq!(enumerate_nc(4).len(), 14);
        assert!(!enumerate_nc(4).contains(&NoncrossingPartition { n: 4, blocks: vec![vec![1, 3], vec![2, 4]] }));
        assert!("13|24".parse::<NoncrossingPartition>().is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("1,4,5,6|2,3|7,8,10|9"), p("1456|23|78A|9"));
        assert_eq!(p("134|2|57|6|8").to_string(), "1,3,4|2|5,7|6|8");
        assert!("12|2".parse::<NoncrossingPartition>().is_err());
        assert!("13".parse::<NoncrossingPartition>().is_err());
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(p("134|2|57|6|8").kreweras(), p("12|3|478|56"));
        assert_eq!(p("12|3|46|5").kreweras(), p("1|236|45"));
        assert_eq!(NoncrossingPartition::bottom(5).kreweras(), NoncrossingPartition::top(5));
        assert_eq!(NoncrossingPartition::top(5).kreweras(), NoncrossingPartition::bottom(5));
    }

    #[test]
    fn order_examples() {
        assert!(p("12|3").leq(&p("123")).unwrap());
        assert!(!p("13|2").leq(&p("12|3")).unwrap());
        assert!(p("1|2").leq(&p("123")).is_err());
    }

    #[test]
    fn moebius_small() {
        let zero = NoncrossingPartition::bottom(3);
        assert_eq!(moebius(&zero, &NoncrossingPartition::top(3)).unwrap(), BigInt::from(2));
        assert_eq!(moebius(&NoncrossingPartition::bottom(4), &NoncrossingPartition::top(4)).unwrap(), BigInt::from(-5));
        let x = p("12|34");
        assert_eq!(moebius(&x, &x).unwrap(), BigInt::one());
        assert!(moebius(&NoncrossingPartition::top(3), &zero).is_err());
    }

    #[test]
    fn ten_point_arrangement() {
        let t: SchroederTree = "2,1,2,0,1,0,0,1,0,0,0,1,0,2,0,0,0,0".parse().unwrap();
        let a = tree_to_arrangement(&t).unwrap();
        assert_eq!(a.partition().unwrap(), p("1,4,5,6|2,3|7,8,10|9"));
        assert_eq!(a.internal_count(), t.internal_count() - 1);
        assert_eq!(arrangement_to_tree(&a).unwrap(), t);
    }

    #[test]
    fn corolla_arrangement_is_singletons() {
        let a = tree_to_arrangement(&SchroederTree::corolla(4)).unwrap();
        assert_eq!(a.partition().unwrap(), NoncrossingPartition::bottom(4));
        assert_eq!(sector_partition(&SchroederTree::corolla(4)).unwrap(), NoncrossingPartition::top(4));
        assert!(tree_to_arrangement(&"1,0,1,0,0".parse().unwrap()).is_err());
    }

    #[test]
    fn right_directed_example() {
        let t = nc_to_rdt(&p("17|2|35|4|6"));
        // φ(a1 φ(a2 φ(a3 φ(a4) a5 φ(a6))) a7)
        let want: SchroederTree = "(* (* (* (* *) (* *))) *)".parse().unwrap();
        assert_eq!(t, want);
        assert_eq!(nc_to_rdt(&NoncrossingPartition::top(4)), SchroederTree::corolla(4));
    }

    #[test]
    fn ndpf_three() {
        let all = ndpf_enumerate(3);
        let words: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(words, ["111", "112", "113", "122", "123"]);
        let evs: Vec<Vec<usize>> = all.iter().map(Ndpf::ev).collect();
        assert_eq!(evs, vec![vec![3], vec![2, 1], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
    }
}
