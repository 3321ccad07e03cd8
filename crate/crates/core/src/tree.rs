//! Labelled rooted trees.
//!
//! A [`Tree`] is a non-planar rooted tree whose vertices carry distinct
//! positive integer labels. Trees labelled by exactly `1..=n` are called
//! *standard*; they are the elements of the operads in this crate. Trees with
//! other label sets only show up as intermediate values (restrictions, full
//! subtrees) and are turned back into standard trees with
//! [`Tree::order_relabel`].
//!
//! The text form is `label(child,child,...)` with children sorted by label,
//! so two trees are equal exactly when their renderings are equal.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Vertex label. Labels are positive; `0` encodes "no parent" in parent maps.
pub type Label = usize;

/// A rooted tree with distinct positive labels.
///
/// Stored as the ascending label list plus, for each label, the label of its
/// parent (`0` for the root).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    labels: Vec<Label>,
    parent: Vec<Label>,
}

/// An edge `{a, b}` of a tree; its degree is `|a - b|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjacentPair {
    pub a: Label,
    pub b: Label,
}

impl AdjacentPair {
    pub fn degree(&self) -> usize {
        self.a.abs_diff(self.b)
    }
}

/// The connected components of a restriction `T|_K`, ordered by root label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    components: Vec<Tree>,
}

impl Forest {
    pub fn components(&self) -> &[Tree] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The single component, if the forest is connected.
    pub fn as_tree(&self) -> Option<&Tree> {
        match self.components.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn into_components(self) -> Vec<Tree> {
        self.components
    }
}

impl Tree {
    /// The arity-one tree `1`, the unit of every operad here.
    pub fn unit() -> Tree {
        Tree { labels: vec![1], parent: vec![0] }
    }

    /// Builds a standard tree from its parent vector: `parent[v - 1]` is the
    /// parent of `v`, or `0` for the root.
    pub fn from_parents(parent: Vec<Label>) -> Result<Tree> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for &p in &parent {
            if p > n {
                return Err(Error::UnknownLabel(p));
            }
        }
        let tree = Tree { labels: (1..=n).collect(), parent };
        tree.validate()?;
        Ok(tree)
    }

    /// Builds a tree on an arbitrary label set from `(label, parent)` pairs,
    /// with parent `0` marking the root.
    pub fn from_pairs(mut pairs: Vec<(Label, Label)>) -> Result<Tree> {
        if pairs.is_empty() {
            return Err(Error::Empty);
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateLabel(w[0].0));
            }
        }
        if pairs[0].0 == 0 {
            return Err(Error::ZeroLabel);
        }
        let (labels, parent): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let tree = Tree { labels, parent };
        for &p in &tree.parent {
            if p != 0 && !tree.contains(p) {
                return Err(Error::UnknownLabel(p));
            }
        }
        tree.validate()?;
        Ok(tree)
    }

    /// Trusted constructor for internal builders that already guarantee the
    /// invariants.
    pub(crate) fn from_parents_unchecked(parent: Vec<Label>) -> Tree {
        let tree = Tree { labels: (1..=parent.len()).collect(), parent };
        debug_assert!(tree.validate().is_ok(), "invalid tree {:?}", tree);
        tree
    }

    fn validate(&self) -> Result<()> {
        let roots = self.parent.iter().filter(|&&p| p == 0).count();
        if roots != 1 {
            return Err(Error::RootCount(roots));
        }
        let n = self.len();
        for (k, &v) in self.labels.iter().enumerate() {
            let mut cur = self.parent[k];
            let mut steps = 0;
            while cur != 0 {
                if cur == v || steps > n {
                    return Err(Error::Cycle(v));
                }
                cur = self.parent_label(cur);
                steps += 1;
            }
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Arity of the tree as an operad element, i.e. its vertex count.
    pub fn arity(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Parent labels aligned with [`Tree::labels`], `0` for the root.
    pub fn parents(&self) -> &[Label] {
        &self.parent
    }

    /// True when the label set is exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.labels.first() == Some(&1) && self.labels.last() == Some(&self.len())
    }

    pub(crate) fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard)
        }
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        let first = *self.labels.first()?;
        let last = *self.labels.last()?;
        if last - first + 1 == self.len() {
            (first..=last).contains(&label).then(|| label - first)
        } else {
            self.labels.binary_search(&label).ok()
        }
    }

    pub fn contains(&self, label: Label) -> bool {
        self.index_of(label).is_some()
    }

    fn parent_label(&self, label: Label) -> Label {
        self.index_of(label).map_or(0, |k| self.parent[k])
    }

    pub fn root(&self) -> Label {
        let k = self.parent.iter().position(|&p| p == 0).expect("tree has a root");
        self.labels[k]
    }

    /// The outgoing vertex of `v`, `None` for the root.
    pub fn parent_of(&self, v: Label) -> Result<Option<Label>> {
        let k = self.index_of(v).ok_or(Error::UnknownLabel(v))?;
        let p = self.parent[k];
        Ok((p != 0).then_some(p))
    }

    /// `In(T, v)`: the incoming vertices (children) of `v`, ascending.
    pub fn in_vertices(&self, v: Label) -> Result<Vec<Label>> {
        if !self.contains(v) {
            return Err(Error::UnknownLabel(v));
        }
        Ok(self.children_of(v))
    }

    fn children_of(&self, v: Label) -> Vec<Label> {
        self.labels.iter().zip(&self.parent).filter(|&(_, &p)| p == v).map(|(&c, _)| c).collect()
    }

    /// Children lists indexed like [`Tree::labels`], each ascending.
    fn children_table(&self) -> Vec<Vec<Label>> {
        let mut table = vec![Vec::new(); self.len()];
        for (&c, &p) in self.labels.iter().zip(&self.parent) {
            if p != 0 {
                let k = self.index_of(p).expect("parent is a vertex");
                table[k].push(c);
            }
        }
        table
    }

    /// Edges oriented child to parent, as `(child, parent)`.
    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.labels.iter().zip(&self.parent).filter(|&(_, &p)| p != 0).map(|(&c, &p)| (c, p))
    }

    pub fn adjacent_pairs(&self) -> impl Iterator<Item = AdjacentPair> + '_ {
        self.edges().map(|(a, b)| AdjacentPair { a, b })
    }

    /// Sum of `|a - b|` over all edges `{a, b}`.
    pub fn degree(&self) -> usize {
        self.edges().map(|(a, b)| a.abs_diff(b)).sum()
    }

    /// Whether `v` lies in the full subtree of `c` (including `c` itself).
    pub fn is_descendant(&self, v: Label, c: Label) -> bool {
        let mut cur = v;
        while cur != 0 {
            if cur == c {
                return true;
            }
            cur = self.parent_label(cur);
        }
        false
    }

    /// `T|_K`: keep the vertices in `keep` and the edges between them. Each
    /// component is rooted at its vertex closest to the root of `self`.
    pub fn restrict(&self, keep: &[Label]) -> Result<Forest> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = keep.iter().find(|&&v| !self.contains(v)) {
            return Err(Error::UnknownLabel(v));
        }
        let kept = |v: Label| keep.binary_search(&v).is_ok();
        // parent inside the restriction, 0 when the edge is cut
        let inner_parent = |v: Label| {
            let p = self.parent_label(v);
            if p != 0 && kept(p) {
                p
            } else {
                0
            }
        };
        let top = |mut v: Label| loop {
            let p = inner_parent(v);
            if p == 0 {
                return v;
            }
            v = p;
        };
        let mut groups: Vec<(Label, Vec<(Label, Label)>)> = Vec::new();
        for &v in &keep {
            let r = top(v);
            let entry = (v, inner_parent(v));
            match groups.iter_mut().find(|(root, _)| *root == r) {
                Some((_, members)) => members.push(entry),
                None => groups.push((r, vec![entry])),
            }
        }
        groups.sort_unstable_by_key(|(r, _)| *r);
        let components =
            groups.into_iter().map(|(_, members)| Tree::from_pairs(members)).collect::<Result<Vec<_>>>()?;
        Ok(Forest { components })
    }

    /// `T^(c)`: all vertices above `c` in the tree order, rooted at `c`,
    /// with labels preserved.
    pub fn full_subtree(&self, c: Label) -> Result<Tree> {
        if !self.contains(c) {
            return Err(Error::UnknownLabel(c));
        }
        let pairs = self
            .labels
            .iter()
            .zip(&self.parent)
            .filter(|&(&v, _)| self.is_descendant(v, c))
            .map(|(&v, &p)| (v, if v == c { 0 } else { p }))
            .collect();
        Tree::from_pairs(pairs)
    }

    /// Applies the unique order-preserving bijection from the labels of
    /// `self` onto `target` (taken as a set).
    pub fn order_relabel(&self, target: &[Label]) -> Result<Tree> {
        let mut target = target.to_vec();
        target.sort_unstable();
        target.dedup();
        if target.len() != self.len() {
            return Err(Error::SizeMismatch { expected: self.len(), found: target.len() });
        }
        if target[0] == 0 {
            return Err(Error::ZeroLabel);
        }
        let map = |v: Label| if v == 0 { 0 } else { target[self.index_of(v).expect("own label")] };
        Ok(Tree { labels: target.clone(), parent: self.parent.iter().map(|&p| map(p)).collect() })
    }

    /// Relabels onto `1..=n` preserving label order.
    pub fn standardize(&self) -> Tree {
        if self.is_standard() {
            return self.clone();
        }
        let parent =
            self.parent.iter().map(|&p| if p == 0 { 0 } else { self.index_of(p).expect("own label") + 1 }).collect();
        Tree::from_parents_unchecked(parent)
    }

    /// Relabels vertex `v` as `sigma[v - 1]`; `sigma` must be a permutation
    /// of `1..=n` and the tree standard of arity `n`.
    pub fn act(&self, sigma: &[Label]) -> Result<Tree> {
        self.require_standard()?;
        let n = self.len();
        if sigma.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: sigma.len() });
        }
        let mut seen = vec![false; n];
        for &s in sigma {
            if s == 0 || s > n || seen[s - 1] {
                return Err(Error::NotPermutation(n));
            }
            seen[s - 1] = true;
        }
        let mut parent = vec![0; n];
        for (k, &p) in self.parent.iter().enumerate() {
            parent[sigma[k] - 1] = if p == 0 { 0 } else { sigma[p - 1] };
        }
        Ok(Tree::from_parents_unchecked(parent))
    }

    /// Number of edges `{a, b}` avoiding `i` with `a < i < b` or `b < i < a`.
    pub fn gap(&self, i: Label) -> Result<usize> {
        if !self.contains(i) {
            return Err(Error::UnknownLabel(i));
        }
        Ok(self.edges().filter(|&(a, b)| a != i && b != i && a.min(b) < i && i < a.max(b)).count())
    }

    /// Degree contribution of the outgoing edge of `i` after substituting a
    /// tree of arity `m` whose root is `s`: `0` at the root, `s - 1` when the
    /// outgoing vertex is smaller than `i`, `m - s` when it is larger.
    pub fn epsilon(&self, i: Label, m: usize, s: Label) -> Result<usize> {
        if s == 0 || s > m {
            return Err(Error::InvalidRootLabel { s, m });
        }
        Ok(match self.parent_of(i)? {
            None => 0,
            Some(k) if k < i => s - 1,
            Some(_) => m - s,
        })
    }

    /// Parses a standard tree (labels exactly `1..=n`).
    pub fn parse(text: &str) -> Result<Tree> {
        let tree = Tree::parse_labelled(text)?;
        if !tree.is_standard() {
            let n = tree.len();
            let missing = (1..=n).find(|v| !tree.contains(*v)).unwrap_or(n);
            return Err(Error::LabelGap { n, missing });
        }
        Ok(tree)
    }

    /// Parses a tree with any set of distinct positive labels.
    pub fn parse_labelled(text: &str) -> Result<Tree> {
        let mut parser = Parser { bytes: text.as_bytes(), pos: 0, pairs: Vec::new() };
        parser.skip_ws();
        if parser.pos == parser.bytes.len() {
            return Err(Error::Empty);
        }
        parser.tree(0)?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(Error::Syntax { pos: parser.pos, msg: "trailing input" });
        }
        Tree::from_pairs(parser.pairs)
    }

    fn tokens(&self) -> Vec<Token> {
        let table = self.children_table();
        let mut out = Vec::with_capacity(3 * self.len());
        let mut stack = vec![Frame::Open(self.root())];
        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Open(v) => {
                    out.push(Token::Label(v));
                    let children = &table[self.index_of(v).expect("own label")];
                    if !children.is_empty() {
                        out.push(Token::Open);
                        stack.push(Frame::Close);
                        for (k, &c) in children.iter().enumerate().rev() {
                            stack.push(Frame::Open(c));
                            if k > 0 {
                                stack.push(Frame::Comma);
                            }
                        }
                    }
                }
                Frame::Comma => out.push(Token::Comma),
                Frame::Close => out.push(Token::Close),
            }
        }
        out
    }
}

/// Order on canonical renderings used wherever trees are listed: tokens
/// compare as `)` < `,` < `(` < labels, labels numerically.
pub fn canonical_cmp(a: &Tree, b: &Tree) -> Ordering {
    a.tokens().cmp(&b.tokens())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Token {
    Close,
    Comma,
    Open,
    Label(Label),
}

enum Frame {
    Open(Label),
    Comma,
    Close,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    pairs: Vec<(Label, Label)>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn label(&mut self) -> Result<Label> {
        self.skip_ws();
        let start = self.pos;
        let mut value: Label = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(Label::from(b - b'0')))
                .ok_or(Error::Syntax { pos: self.pos, msg: "label too large" })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Syntax { pos: start, msg: "expected a label" });
        }
        if value == 0 {
            return Err(Error::ZeroLabel);
        }
        Ok(value)
    }

    fn tree(&mut self, parent: Label) -> Result<()> {
        let v = self.label()?;
        self.pairs.push((v, parent));
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                self.tree(v)?;
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(Error::Syntax { pos: self.pos, msg: "expected ',' or ')'" }),
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for token in self.tokens() {
            match token {
                Token::Label(v) => write!(f, "{v}")?,
                Token::Open => f.write_str("(")?,
                Token::Comma => f.write_str(",")?,
                Token::Close => f.write_str(")")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        Tree::parse(s)
    }
}

/// Parses a standard tree; see [`Tree::parse`].
pub fn parse_tree(text: &str) -> Result<Tree> {
    Tree::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn tl(s: &str) -> Tree {
        Tree::parse_labelled(s).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let one = t("1");
        assert_eq!(one.root(), 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one, Tree::unit());

        let cherry = t("2(1,3)");
        assert_eq!(cherry.root(), 2);
        assert_eq!(cherry.in_vertices(2).unwrap(), vec![1, 3]);
        assert_eq!(t("2(3,1)").to_string(), "2(1,3)");
        assert_eq!(Tree::from_parents(vec![0, 1]).unwrap().to_string(), "1(2)");

        let x = t("6(5(1,2,3(4,7)),8)");
        assert_eq!(x.len(), 8);
        assert_eq!(x.to_string(), "6(5(1,2,3(4,7)),8)");
        assert_eq!(t(" 6 ( 8 , 5(3(7,4),2,1))"), x);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Tree::parse(""), Err(Error::Empty));
        assert_eq!(Tree::parse("   "), Err(Error::Empty));
        assert_eq!(Tree::parse("1(2,2)"), Err(Error::DuplicateLabel(2)));
        assert_eq!(Tree::parse("1(3)"), Err(Error::LabelGap { n: 2, missing: 2 }));
        assert_eq!(Tree::parse("0"), Err(Error::ZeroLabel));
        assert!(matches!(Tree::parse("1(2"), Err(Error::Syntax { .. })));
        assert!(matches!(Tree::parse("1()"), Err(Error::Syntax { .. })));
        assert!(matches!(Tree::parse("1(2)3"), Err(Error::Syntax { .. })));
        assert!(matches!(Tree::parse("a"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn from_parents_rejects_bad_maps() {
        assert_eq!(Tree::from_parents(vec![]), Err(Error::Empty));
        assert_eq!(Tree::from_parents(vec![0, 0]), Err(Error::RootCount(2)));
        assert_eq!(Tree::from_parents(vec![2, 1, 0]), Err(Error::Cycle(1)));
        assert_eq!(Tree::from_parents(vec![0, 5]), Err(Error::UnknownLabel(5)));
    }

    #[test]
    fn degrees() {
        assert_eq!(t("2(1,3)").degree(), 2);
        assert_eq!(t("3(2(1,4))").degree(), 4);
        assert_eq!(t("3(1,2(4))").degree(), 5);
        assert_eq!(t("3(2(1),4)").degree(), 3);
        assert_eq!(t("1").degree(), 0);
        let pair = AdjacentPair { a: 7, b: 3 };
        assert_eq!(pair.degree(), 4);
    }

    #[test]
    fn restriction_examples() {
        // the seven-vertex tree rooted at 3 and K = {2,3,4,5,6}
        let tree = t("3(1(6(2,7)),4,5)");
        let forest = tree.restrict(&[2, 3, 4, 5, 6]).unwrap();
        let parts: Vec<_> = forest.components().iter().map(ToString::to_string).collect();
        assert_eq!(parts, ["3(4,5)", "6(2)"]);
        assert_eq!(tree.full_subtree(1).unwrap(), tl("1(6(2,7))"));

        let whole = tree.restrict(tree.labels()).unwrap();
        assert_eq!(whole.as_tree(), Some(&tree));

        let x = t("6(5(1,2,3(4,7)),8)");
        let block = x.restrict(&[3, 4, 5]).unwrap();
        assert_eq!(block.as_tree(), Some(&tl("5(3(4))")));

        assert_eq!(x.restrict(&[]), Err(Error::EmptySubset));
        assert_eq!(x.restrict(&[1, 9]), Err(Error::UnknownLabel(9)));
    }

    #[test]
    fn full_subtrees() {
        let x = t("6(5(1,2,3(4,7)),8)");
        assert_eq!(x.full_subtree(5).unwrap(), tl("5(1,2,3(4,7))"));
        assert_eq!(x.full_subtree(6).unwrap(), x);
        assert_eq!(t("1(2)").full_subtree(2).unwrap(), tl("2"));
        assert_eq!(x.full_subtree(10), Err(Error::UnknownLabel(10)));
    }

    #[test]
    fn relabelling() {
        let block = tl("5(3(4))");
        assert_eq!(block.order_relabel(&[1, 2, 3]).unwrap(), t("3(1(2))"));
        assert_eq!(block.order_relabel(&[1, 3, 2]).unwrap(), t("3(1(2))"));
        assert_eq!(block.standardize(), t("3(1(2))"));
        let cherry = t("2(1,3)");
        assert_eq!(cherry.order_relabel(&[1, 2, 3]).unwrap(), cherry);
        assert_eq!(cherry.order_relabel(&[4, 6, 9]).unwrap(), tl("6(4,9)"));
        assert_eq!(cherry.order_relabel(&[4, 6]), Err(Error::SizeMismatch { expected: 3, found: 2 }));
    }

    #[test]
    fn incoming_vertices() {
        let cherry = t("2(1,3)");
        assert_eq!(cherry.in_vertices(1).unwrap(), vec![]);
        let x = t("6(5(1,2,3(4,7)),8)");
        assert_eq!(x.in_vertices(3).unwrap(), vec![4, 7]);
        assert_eq!(x.in_vertices(0), Err(Error::UnknownLabel(0)));
    }

    #[test]
    fn permutation_action() {
        let chain = t("1(2)");
        assert_eq!(chain.act(&[1, 2]).unwrap(), chain);
        assert_eq!(chain.act(&[2, 1]).unwrap(), t("2(1)"));
        assert_eq!(t("1(2,3)").act(&[1, 3, 2]).unwrap(), t("1(2,3)"));
        assert_eq!(t("3(1(2))").act(&[2, 3, 1]).unwrap(), t("1(2(3))"));
        assert_eq!(chain.act(&[1, 1]), Err(Error::NotPermutation(2)));
        assert_eq!(chain.act(&[1]), Err(Error::SizeMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn gap_and_epsilon() {
        let cherry = t("2(1,3)");
        assert_eq!(cherry.gap(2).unwrap(), 0);
        assert_eq!(cherry.gap(1).unwrap(), 0);
        assert_eq!(cherry.gap(3).unwrap(), 0);
        assert_eq!(t("1(2,3)").gap(2).unwrap(), 1);
        assert_eq!(cherry.gap(4), Err(Error::UnknownLabel(4)));

        assert_eq!(cherry.epsilon(2, 2, 1).unwrap(), 0);
        assert_eq!(cherry.epsilon(1, 2, 2).unwrap(), 0);
        assert_eq!(cherry.epsilon(3, 2, 2).unwrap(), 1);
        assert_eq!(cherry.epsilon(3, 2, 3), Err(Error::InvalidRootLabel { s: 3, m: 2 }));
    }

    #[test]
    fn canonical_order_puts_siblings_before_descent() {
        let mut trees = [t("3(2(1,4))"), t("3(2(1),4)"), t("3(1,2(4))"), t("3(1,2,4)")];
        trees.sort_by(canonical_cmp);
        let rendered: Vec<_> = trees.iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["3(1,2,4)", "3(1,2(4))", "3(2(1),4)", "3(2(1,4))"]);
    }
}
