//! Schröder trees (reduced plane trees) stored as their Polish pseudocomposition word.
//!
//! A word entry `k` is an internal node of arity `k + 1`, `0` is a leaf, nodes are listed in
//! preorder. Leaves are numbered `0..=n` left to right; sector `s` (1-based, `1..=n`) is the gap
//! between leaf `s - 1` and leaf `s`.
//!
//! Trees are ordered by weight, then by *decreasing* word, which is the order in which the
//! printed expansions list their terms (`S[2,0,0,0]` before `S[1,1,0,0,0]`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::format::join_usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchroederTree {
    word: Box<[u8]>,
    weight: usize,
}

/// Owned recursive view of a tree, convenient for structural rewrites.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf,
    Node(Vec<Shape>),
}

impl Shape {
    pub fn node(children: Vec<Shape>) -> Self {
        Shape::Node(children)
    }

    pub fn corolla(arity: usize) -> Self {
        Shape::Node(vec![Shape::Leaf; arity])
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Shape::Leaf)
    }

    pub fn children(&self) -> &[Shape] {
        match self {
            Shape::Leaf => &[],
            Shape::Node(c) => c,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(c) => c.iter().map(Shape::leaf_count).sum(),
        }
    }

    fn emit(&self, out: &mut Vec<u8>) -> Result<()> {
        match self {
            Shape::Leaf => out.push(0),
            Shape::Node(c) => {
                if c.len() < 2 {
                    return Err(Error::InvalidPolishWord {
                        word: out.clone(),
                        reason: "internal node with fewer than two children",
                    });
                }
                let arity = u8::try_from(c.len() - 1).map_err(|_| Error::InvalidPolishWord {
                    word: out.clone(),
                    reason: "arity too large",
                })?;
                out.push(arity);
                for child in c {
                    child.emit(out)?;
                }
            }
        }
        Ok(())
    }

    pub fn to_tree(&self) -> Result<SchroederTree> {
        let mut w = Vec::new();
        self.emit(&mut w)?;
        SchroederTree::from_word(w)
    }
}

/// Per-position structure of a word: subtree extents and leaf offsets.
#[derive(Clone, Debug)]
pub struct Layout {
    /// Exclusive end of the subtree rooted at each position.
    pub end: Vec<usize>,
    /// Number of leaves strictly before each position.
    pub leaves_before: Vec<usize>,
    total_leaves: usize,
}

impl Layout {
    fn new(word: &[u8]) -> Self {
        let n = word.len();
        let mut end = vec![0; n];
        let mut leaves_before = vec![0; n];
        let mut leaves = 0;
        for (p, &s) in word.iter().enumerate() {
            leaves_before[p] = leaves;
            if s == 0 {
                leaves += 1;
            }
        }
        // Right-to-left pass: a node's subtree ends where its last child's subtree ends.
        for p in (0..n).rev() {
            if word[p] == 0 {
                end[p] = p + 1;
            } else {
                let mut q = p + 1;
                for _ in 0..=word[p] {
                    q = end[q];
                }
                end[p] = q;
            }
        }
        Layout { end, leaves_before, total_leaves: leaves }
    }

    /// Positions of the children of the node at `p` (empty for a leaf).
    pub fn children(&self, word: &[u8], p: usize) -> Vec<usize> {
        if word[p] == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(word[p] as usize + 1);
        let mut q = p + 1;
        for _ in 0..=word[p] {
            out.push(q);
            q = self.end[q];
        }
        out
    }

    /// Leaves spanned by the subtree at `p`, as an inclusive range of leaf indices.
    pub fn leaf_span(&self, p: usize) -> (usize, usize) {
        let after = self.leaves_before.get(self.end[p]).copied().unwrap_or(self.total_leaves);
        (self.leaves_before[p], after - 1)
    }
}

impl SchroederTree {
    pub fn leaf() -> Self {
        SchroederTree { word: Box::new([0]), weight: 0 }
    }

    /// One internal node with `n + 1` leaves; the bare leaf for `n = 0`.
    pub fn corolla(n: usize) -> Self {
        if n == 0 {
            return Self::leaf();
        }
        let mut w = vec![0u8; n + 2];
        w[0] = u8::try_from(n).expect("corolla weight fits in u8");
        SchroederTree { word: w.into_boxed_slice(), weight: n }
    }

    pub fn from_word(word: Vec<u8>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::Empty);
        }
        let mut pending: usize = 1;
        let mut weight = 0usize;
        for (i, &s) in word.iter().enumerate() {
            if pending == 0 {
                return Err(Error::InvalidPolishWord {
                    word: word.clone(),
                    reason: "word continues after the tree is complete",
                });
            }
            pending = pending - 1 + if s == 0 { 0 } else { s as usize + 1 };
            weight += s as usize;
            if pending == 0 && i + 1 != word.len() {
                return Err(Error::InvalidPolishWord {
                    word: word.clone(),
                    reason: "slot counter reaches zero before the end",
                });
            }
        }
        if pending != 0 {
            return Err(Error::InvalidPolishWord { word, reason: "word ends with open slots" });
        }
        Ok(SchroederTree { word: word.into_boxed_slice(), weight })
    }

    /// Builds from a word already known to be valid.
    pub(crate) fn from_word_unchecked(word: Vec<u8>, weight: usize) -> Self {
        debug_assert!(Self::from_word(word.clone()).is_ok());
        SchroederTree { word: word.into_boxed_slice(), weight }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        self.weight + 1
    }

    pub fn internal_count(&self) -> usize {
        self.word.iter().filter(|&&s| s != 0).count()
    }

    pub fn is_leaf(&self) -> bool {
        self.weight == 0
    }

    pub fn layout(&self) -> Layout {
        Layout::new(&self.word)
    }

    /// Positions (in the word) of the internal vertices, in preorder.
    pub fn internal_positions(&self) -> Vec<usize> {
        (0..self.word.len()).filter(|&p| self.word[p] != 0).collect()
    }

    pub fn root_children(&self) -> Vec<SchroederTree> {
        let layout = self.layout();
        layout
            .children(&self.word, 0)
            .into_iter()
            .map(|c| self.subtree_with(&layout, c))
            .collect()
    }

    pub fn subtree(&self, p: usize) -> SchroederTree {
        self.subtree_with(&self.layout(), p)
    }

    pub(crate) fn subtree_with(&self, layout: &Layout, p: usize) -> SchroederTree {
        let w: Vec<u8> = self.word[p..layout.end[p]].to_vec();
        let weight = w.iter().map(|&s| s as usize).sum();
        SchroederTree { word: w.into_boxed_slice(), weight }
    }

    pub fn to_shape(&self) -> Shape {
        fn go(word: &[u8], pos: &mut usize) -> Shape {
            let s = word[*pos];
            *pos += 1;
            if s == 0 {
                Shape::Leaf
            } else {
                Shape::Node((0..=s).map(|_| go(word, pos)).collect())
            }
        }
        go(&self.word, &mut 0)
    }

    pub fn from_shape(shape: &Shape) -> Result<Self> {
        shape.to_tree()
    }

    /// Builds `node(children)` from whole trees.
    pub fn join(children: &[SchroederTree]) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::ArityMismatch { expected: 2, got: children.len() });
        }
        let mut w = vec![u8::try_from(children.len() - 1).map_err(|_| Error::InvalidPolishWord {
            word: Vec::new(),
            reason: "arity too large",
        })?];
        let mut weight = children.len() - 1;
        for c in children {
            w.extend_from_slice(&c.word);
            weight += c.weight;
        }
        Ok(SchroederTree { word: w.into_boxed_slice(), weight })
    }

    pub fn class(&self) -> TreeClass {
        let layout = self.layout();
        let mut class = TreeClass {
            is_prime: false,
            is_left_directed: true,
            is_right_directed: true,
            is_binary: true,
            is_corolla: self.internal_count() == 1,
        };
        for p in self.internal_positions() {
            let ch = layout.children(&self.word, p);
            let first_leaf = self.word[ch[0]] == 0;
            let last_leaf = self.word[*ch.last().unwrap()] == 0;
            if p == 0 {
                class.is_prime = last_leaf;
            }
            class.is_left_directed &= last_leaf;
            class.is_right_directed &= first_leaf;
            class.is_binary &= ch.len() == 2;
        }
        if self.is_leaf() {
            class.is_prime = true;
        }
        class
    }

    pub fn is_prime(&self) -> bool {
        self.class().is_prime
    }

    pub fn belongs_to(&self, kind: TreeKind) -> bool {
        let c = self.class();
        match kind {
            TreeKind::All => true,
            TreeKind::Prime => c.is_prime,
            TreeKind::LeftDirected => c.is_left_directed,
            TreeKind::RightDirected => c.is_right_directed,
            TreeKind::Binary => c.is_binary,
        }
    }

    /// Nested literal: `*` for a leaf, `(c1 c2 ...)` for an internal node.
    pub fn to_nested(&self) -> String {
        fn go(s: &Shape, out: &mut String) {
            match s {
                Shape::Leaf => out.push('*'),
                Shape::Node(c) => {
                    out.push('(');
                    for (i, ch) in c.iter().enumerate() {
                        if i > 0 {
                            out.push(' ');
                        }
                        go(ch, out);
                    }
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        go(&self.to_shape(), &mut out);
        out
    }

    /// `self ∘ (args)`: the i-th leaf is replaced by `args[i]`.
    pub fn graft(&self, args: &[SchroederTree]) -> Result<SchroederTree> {
        if args.len() != self.degree() {
            return Err(Error::ArityMismatch { expected: self.degree(), got: args.len() });
        }
        let extra: usize = args.iter().map(|a| a.word.len()).sum();
        let mut w = Vec::with_capacity(self.word.len() + extra);
        let mut next = args.iter();
        for &s in self.word.iter() {
            if s == 0 {
                w.extend_from_slice(&next.next().expect("leaf count checked").word);
            } else {
                w.push(s);
            }
        }
        let weight = self.weight + args.iter().map(|a| a.weight).sum::<usize>();
        Ok(SchroederTree { word: w.into_boxed_slice(), weight })
    }

    /// Replaces only the leaf with index `leaf` by `arg`.
    pub fn graft_at(&self, leaf: usize, arg: &SchroederTree) -> Result<SchroederTree> {
        if leaf > self.weight {
            return Err(Error::ArityMismatch { expected: self.degree(), got: leaf + 1 });
        }
        let mut w = Vec::with_capacity(self.word.len() + arg.word.len());
        let mut seen = 0;
        for &s in self.word.iter() {
            if s == 0 {
                if seen == leaf {
                    w.extend_from_slice(&arg.word);
                } else {
                    w.push(0);
                }
                seen += 1;
            } else {
                w.push(s);
            }
        }
        Ok(SchroederTree { word: w.into_boxed_slice(), weight: self.weight + arg.weight })
    }

    /// Sectors seen by each internal vertex, keyed by the vertex's word position.
    ///
    /// The gap between consecutive children `c_i`, `c_{i+1}` of a vertex is the sector ending
    /// at the first leaf of `c_{i+1}`; the vertex is the lowest common ancestor of its two
    /// bounding leaves.
    pub fn sector_views(&self) -> BTreeMap<usize, Vec<usize>> {
        let layout = self.layout();
        let mut out = BTreeMap::new();
        for p in self.internal_positions() {
            let ch = layout.children(&self.word, p);
            let sectors = ch[1..].iter().map(|&c| layout.leaves_before[c]).collect();
            out.insert(p, sectors);
        }
        out
    }

    /// The sector blocks of [`Self::sector_views`], sorted by minimum.
    pub fn sector_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = self.sector_views().into_values().collect();
        blocks.sort();
        blocks
    }
}

impl Ord for SchroederTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| other.word.cmp(&self.word))
    }
}

impl PartialOrd for SchroederTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SchroederTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<usize> = self.word.iter().map(|&s| s as usize).collect();
        f.write_str(&join_usize(&parts, ","))
    }
}

/// Accepts either a pseudocomposition (`2,0,1,0,0,0`) or a nested form (`(* (* *) *)`).
impl FromStr for SchroederTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        if s.starts_with('(') || s == "*" {
            return parse_nested(s);
        }
        let mut word = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let v: u8 = part.trim().parse().map_err(|_| Error::Parse {
                position: offset,
                message: format!("`{}` is not a word entry", part.trim()),
            })?;
            word.push(v);
            offset += part.len() + 1;
        }
        SchroederTree::from_word(word)
    }
}

fn parse_nested(s: &str) -> Result<SchroederTree> {
    let bytes = s.as_bytes();
    let mut pos = 0;

    fn skip_ws(b: &[u8], pos: &mut usize) {
        while *pos < b.len() && b[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    fn form(b: &[u8], pos: &mut usize) -> Result<Shape> {
        skip_ws(b, pos);
        match b.get(*pos) {
            Some(b'*') => {
                *pos += 1;
                Ok(Shape::Leaf)
            }
            Some(b'(') => {
                *pos += 1;
                let mut children = Vec::new();
                loop {
                    skip_ws(b, pos);
                    if b.get(*pos) == Some(&b')') {
                        *pos += 1;
                        break;
                    }
                    if *pos >= b.len() {
                        return Err(Error::Parse { position: *pos, message: "unclosed `(`".into() });
                    }
                    children.push(form(b, pos)?);
                }
                if children.len() < 2 {
                    return Err(Error::Parse {
                        position: *pos,
                        message: "internal node needs at least two children".into(),
                    });
                }
                Ok(Shape::Node(children))
            }
            _ => Err(Error::Parse { position: *pos, message: "expected `*` or `(`".into() }),
        }
    }

    let shape = form(bytes, &mut pos)?;
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(Error::Parse { position: pos, message: "trailing input".into() });
    }
    shape.to_tree()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeClass {
    pub is_prime: bool,
    pub is_left_directed: bool,
    pub is_right_directed: bool,
    pub is_binary: bool,
    pub is_corolla: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeKind {
    All,
    Prime,
    LeftDirected,
    RightDirected,
    Binary,
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "all" => Ok(TreeKind::All),
            "prime" => Ok(TreeKind::Prime),
            "left_directed" | "left" => Ok(TreeKind::LeftDirected),
            "right_directed" | "right" => Ok(TreeKind::RightDirected),
            "binary" => Ok(TreeKind::Binary),
            other => Err(Error::Parse { position: 0, message: format!("unknown tree kind `{other}`") }),
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeKind::All => "all",
            TreeKind::Prime => "prime",
            TreeKind::LeftDirected => "left_directed",
            TreeKind::RightDirected => "right_directed",
            TreeKind::Binary => "binary",
        })
    }
}

type Memo = Mutex<HashMap<(TreeKind, usize), Arc<[SchroederTree]>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All trees of weight `n` in the class, in canonical order.
pub fn enumerate(kind: TreeKind, n: usize) -> Arc<[SchroederTree]> {
    if let Some(hit) = memo().lock().expect("memo poisoned").get(&(kind, n)) {
        return Arc::clone(hit);
    }
    let computed: Arc<[SchroederTree]> = build(kind, n).into();
    let mut table = memo().lock().expect("memo poisoned");
    Arc::clone(table.entry((kind, n)).or_insert(computed))
}

/// All trees of weight `0..=n` in the class, in canonical order.
pub fn enumerate_up_to(kind: TreeKind, n: usize) -> Vec<SchroederTree> {
    (0..=n).flat_map(|w| enumerate(kind, w).iter().cloned().collect::<Vec<_>>()).collect()
}

fn build(kind: TreeKind, n: usize) -> Vec<SchroederTree> {
    if n == 0 {
        return vec![SchroederTree::leaf()];
    }
    // Class of the non-constrained children.
    let inner = match kind {
        TreeKind::Prime => TreeKind::All,
        k => k,
    };
    let max_arity = if kind == TreeKind::Binary { 2 } else { n + 1 };
    let mut out = Vec::new();
    for arity in 2..=max_arity {
        let rest = n - (arity - 1);
        let mut weights = vec![0usize; arity];
        // Constrained slot: forced leaf.
        let fixed = match kind {
            TreeKind::Prime | TreeKind::LeftDirected => Some(arity - 1),
            TreeKind::RightDirected => Some(0),
            _ => None,
        };
        let free: Vec<usize> = (0..arity).filter(|&i| Some(i) != fixed).collect();
        distribute(rest, &free, 0, &mut weights, &mut |ws| {
            let lists: Vec<Arc<[SchroederTree]>> = ws.iter().map(|&w| enumerate(inner, w)).collect();
            let mut prefix = vec![u8::try_from(arity - 1).expect("arity fits in u8")];
            product(&lists, 0, &mut prefix, n, &mut out);
        });
    }
    out.sort_unstable_by(|a, b| b.word.cmp(&a.word));
    out
}

fn distribute(
    rest: usize,
    free: &[usize],
    idx: usize,
    weights: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if idx == free.len() {
        if rest == 0 {
            emit(weights);
        }
        return;
    }
    if idx + 1 == free.len() {
        weights[free[idx]] = rest;
        emit(weights);
        weights[free[idx]] = 0;
        return;
    }
    for w in 0..=rest {
        weights[free[idx]] = w;
        distribute(rest - w, free, idx + 1, weights, emit);
    }
    weights[free[idx]] = 0;
}

fn product(
    lists: &[Arc<[SchroederTree]>],
    i: usize,
    prefix: &mut Vec<u8>,
    weight: usize,
    out: &mut Vec<SchroederTree>,
) {
    if i == lists.len() {
        out.push(SchroederTree::from_word_unchecked(prefix.clone(), weight));
        return;
    }
    for t in lists[i].iter() {
        let len = prefix.len();
        prefix.extend_from_slice(&t.word);
        product(lists, i + 1, prefix, weight, out);
        prefix.truncate(len);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SchroederTree {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_measure() {
        let x = t("2,0,1,3,0,0,0,0,0,1,0,0");
        assert_eq!(x.degree(), 8);
        assert_eq!(x.weight(), 7);
        assert_eq!(x.internal_count(), 4);
        assert_eq!(x.word().len(), x.internal_count() + x.degree());
        assert_eq!(t("0"), SchroederTree::leaf());
        assert!("1,0,0,0".parse::<SchroederTree>().is_err());
        assert!("1,0".parse::<SchroederTree>().is_err());
        assert!("".parse::<SchroederTree>().is_err());
        assert!("(* )".parse::<SchroederTree>().is_err());
    }

    #[test]
    fn nested_round_trip() {
        let x = t("(* (* *) *)");
        assert_eq!(x.to_string(), "2,0,1,0,0,0");
        assert_eq!(t(&x.to_nested()), x);
    }

    #[test]
    fn corollas() {
        assert_eq!(SchroederTree::corolla(1).to_string(), "1,0,0");
        assert_eq!(SchroederTree::corolla(2).to_string(), "2,0,0,0");
        let c5 = SchroederTree::corolla(5);
        assert_eq!((c5.internal_count(), c5.weight()), (1, 5));
        assert!(SchroederTree::corolla(0).is_leaf());
    }

    #[test]
    fn grafting_examples() {
        let leaf = SchroederTree::leaf();
        let c1 = SchroederTree::corolla(1);
        let c2 = SchroederTree::corolla(2);
        assert_eq!(c1.graft(&[c1.clone(), leaf.clone()]).unwrap().to_string(), "1,1,0,0,0");
        assert_eq!(c2.graft(&[leaf.clone(), c1.clone(), leaf.clone()]).unwrap().to_string(), "2,0,1,0,0,0");
        let x = t("2,0,1,3,0,0,0,0,0,1,0,0");
        assert_eq!(x.graft(&vec![leaf.clone(); 8]).unwrap(), x);
        assert!(c1.graft(&[leaf]).is_err());
    }

    #[test]
    fn enumeration_order_weight_two() {
        let got: Vec<String> = enumerate(TreeKind::All, 2).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["2,0,0,0", "1,1,0,0,0", "1,0,1,0,0"]);
    }

    #[test]
    fn sector_views_small() {
        let x = t("1,1,0,0,0");
        let views = x.sector_views();
        assert_eq!(views[&0], vec![2]);
        assert_eq!(views[&1], vec![1]);
        assert_eq!(SchroederTree::corolla(4).sector_blocks(), vec![vec![1, 2, 3, 4]]);
        assert!(SchroederTree::leaf().sector_views().is_empty());
    }

    #[test]
    fn six_sector_tree_blocks() {
        // φ(φ(a1 φ(a2)) a3 φ(a4 a5) a6)
        let x = t("((* (* *)) (* * *) *)");
        assert_eq!(x, t("2,1,0,1,0,0,2,0,0,0,0"));
        assert_eq!(x.sector_blocks(), vec![vec![1], vec![2], vec![3, 6], vec![4, 5]]);
    }

    #[test]
    fn classes() {
        let c = t("1,1,0,0,0").class();
        assert!(c.is_prime && c.is_left_directed && !c.is_right_directed && c.is_binary);
        let c = t("1,0,1,0,0").class();
        assert!(!c.is_prime && c.is_right_directed);
        assert!(SchroederTree::leaf().belongs_to(TreeKind::Binary));
    }

    #[test]
    fn layout_spans() {
        let x = t("2,0,1,0,0,0");
        let l = x.layout();
        assert_eq!(l.leaf_span(0), (0, 3));
        assert_eq!(l.leaf_span(2), (1, 2));
        assert_eq!(l.children(x.word(), 0), vec![1, 2, 5]);
    }
}
