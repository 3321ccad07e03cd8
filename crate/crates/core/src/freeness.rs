//! Decomposability in `T_Max`, unique factorization into indecomposable
//! trees, and certificates of (non-)freeness.
//!
//! A tree `X` of arity `n` is a non-trivial `T_Max` composition `T ∘_a S`
//! exactly when some interval `[a, b] ≠ [1, n]` satisfies:
//!
//! 1. `X|_[a,b]` is connected, with root `c`;
//! 2. the vertices hanging off that block (inside `X^(c)`) hang off `a` or
//!    `b` only;
//! 3. those hanging off `a` have labels in `[b+1, n]`;
//! 4. those hanging off `b` have labels in `[1, a-1]`.
//!
//! Splitting along the first such interval and recursing yields a reduced
//! planar [`OperationTree`] over indecomposable generators.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::enumerate::{cayley_count, enumerate_trees, trees_by_arity};
use crate::error::{Error, Result};
use crate::set_operads::SetOperad;
use crate::tree::{Label, Tree};

/// An interval `[a, b]` and the root `c` of `X|_[a,b]` certifying that `X`
/// is decomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompositionWitness {
    pub a: Label,
    pub b: Label,
    pub c: Label,
}

impl fmt::Display for DecompositionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Root of the block `[a, b]` if the interval satisfies all four conditions.
/// `x` must be standard and `1 <= a < b <= n`.
fn witness_root(x: &Tree, a: Label, b: Label) -> Option<Label> {
    let parents = x.parents();
    let in_block = |v: Label| (a..=b).contains(&v);
    let mut root = None;
    for v in a..=b {
        if !in_block(parents[v - 1]) {
            if root.is_some() {
                return None;
            }
            root = Some(v);
        }
    }
    for (k, &p) in parents.iter().enumerate() {
        let w = k + 1;
        if in_block(w) || !in_block(p) {
            continue;
        }
        let ok = (p == a && w > b) || (p == b && w < a);
        if !ok {
            return None;
        }
    }
    root
}

/// Every decomposition witness of `x`, ordered by `(a, b)`.
pub fn decomposition_witnesses(x: &Tree) -> Result<Vec<DecompositionWitness>> {
    x.require_standard()?;
    let n = x.arity();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if (a, b) == (1, n) {
                continue;
            }
            if let Some(c) = witness_root(x, a, b) {
                out.push(DecompositionWitness { a, b, c });
            }
        }
    }
    Ok(out)
}

fn first_witness(x: &Tree, order: ScanOrder) -> Option<DecompositionWitness> {
    let n = x.arity();
    let mut intervals = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).filter(|&ab| ab != (1, n));
    let mut probe = |(a, b)| witness_root(x, a, b).map(|c| DecompositionWitness { a, b, c });
    match order {
        ScanOrder::Forward => intervals.find_map(&mut probe),
        ScanOrder::Reverse => intervals.collect::<Vec<_>>().into_iter().rev().find_map(probe),
    }
}

/// Whether `x` admits no decomposition witness. Generators have arity at
/// least 2, so arity 1 is rejected.
pub fn is_indecomposable(x: &Tree) -> Result<bool> {
    x.require_standard()?;
    if x.arity() < 2 {
        return Err(Error::ArityTooSmall { arity: x.arity(), min: 2 });
    }
    Ok(first_witness(x, ScanOrder::Forward).is_none())
}

/// Inverts `T_Max` composition along a witness: returns `(T, S)` with
/// `compose_max(T, a, S) == x`.
pub fn split(x: &Tree, w: DecompositionWitness) -> Result<(Tree, Tree)> {
    x.require_standard()?;
    let n = x.arity();
    let DecompositionWitness { a, b, c } = w;
    let valid = a >= 1 && a < b && b <= n && (a, b) != (1, n) && witness_root(x, a, b) == Some(c);
    if !valid {
        return Err(Error::InvalidWitness { a, b, c });
    }
    let block: Vec<Label> = (a..=b).collect();
    let s = x.restrict(&block)?.into_components().remove(0).standardize();

    let width = b - a;
    let contract = |v: Label| match v {
        0 => 0,
        v if v < a => v,
        v if v <= b => a,
        v => v - width,
    };
    let parents = x.parents();
    let mut parent = vec![0; n - width];
    for (k, &p) in parents.iter().enumerate() {
        let v = k + 1;
        if (a..=b).contains(&v) {
            continue;
        }
        parent[contract(v) - 1] = contract(p);
    }
    parent[a - 1] = contract(parents[c - 1]);
    Ok((Tree::from_parents_unchecked(parent), s))
}

/// Direction in which [`factorize_with`] scans intervals `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    Forward,
    Reverse,
}

/// An input of an [`OperationTree`] node: a free leaf or a nested operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Leaf,
    Node(Box<OperationTree>),
}

/// A reduced planar tree of operations: a generator of arity `k >= 2` with
/// `k` ordered slots. Leaves are numbered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperationTree {
    generator: Tree,
    slots: Vec<Slot>,
}

impl OperationTree {
    pub fn new(generator: Tree, slots: Vec<Slot>) -> Result<OperationTree> {
        generator.require_standard()?;
        if generator.arity() < 2 {
            return Err(Error::ArityTooSmall { arity: generator.arity(), min: 2 });
        }
        if slots.len() != generator.arity() {
            return Err(Error::SizeMismatch { expected: generator.arity(), found: slots.len() });
        }
        Ok(OperationTree { generator, slots })
    }

    /// A single node whose slots are all leaves.
    pub fn single(generator: Tree) -> Result<OperationTree> {
        let k = generator.arity();
        OperationTree::new(generator, vec![Slot::Leaf; k])
    }

    pub fn generator(&self) -> &Tree {
        &self.generator
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Total number of leaves.
    pub fn arity(&self) -> usize {
        self.slots
            .iter()
            .map(|s| match s {
                Slot::Leaf => 1,
                Slot::Node(w) => w.arity(),
            })
            .sum()
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Leaf => 0,
                Slot::Node(w) => w.node_count(),
            })
            .sum::<usize>()
    }

    /// Generators in pre-order.
    pub fn generators(&self) -> Vec<&Tree> {
        let mut out = vec![&self.generator];
        for s in &self.slots {
            if let Slot::Node(w) = s {
                out.extend(w.generators());
            }
        }
        out
    }

    /// Substitutes `sub` for the leaf at `position`: the operation-tree form
    /// of `self ∘_position sub`.
    pub fn graft(&mut self, position: usize, sub: OperationTree) -> Result<()> {
        let arity = self.arity();
        if position == 0 || position > arity {
            return Err(Error::PositionOutOfRange { position, arity });
        }
        self.graft_inner(position, sub);
        Ok(())
    }

    fn graft_inner(&mut self, mut position: usize, sub: OperationTree) {
        for slot in &mut self.slots {
            match slot {
                Slot::Leaf if position == 1 => {
                    *slot = Slot::Node(Box::new(sub));
                    return;
                }
                Slot::Leaf => position -= 1,
                Slot::Node(w) => {
                    let k = w.arity();
                    if position <= k {
                        w.graft_inner(position, sub);
                        return;
                    }
                    position -= k;
                }
            }
        }
        unreachable!("position checked against arity");
    }

    /// Evaluates in `T_Max`.
    pub fn evaluate(&self) -> Tree {
        self.evaluate_in(SetOperad::Max)
    }

    /// Evaluates with the given set composition. Slots are composed right to
    /// left so earlier leaf positions stay put.
    pub fn evaluate_in(&self, kind: SetOperad) -> Tree {
        let mut out = self.generator.clone();
        for (k, slot) in self.slots.iter().enumerate().rev() {
            if let Slot::Node(w) = slot {
                out = kind.compose_unchecked(&out, k + 1, &w.evaluate_in(kind));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<OperationTree> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let w = parse_op(text, bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Syntax { pos, msg: "trailing input" });
        }
        Ok(w)
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_op(text: &str, bytes: &[u8], pos: &mut usize) -> Result<OperationTree> {
    skip_ws(bytes, pos);
    let start = *pos;
    let mut depth = 0usize;
    while let Some(&ch) = bytes.get(*pos) {
        match ch {
            b'(' => depth += 1,
            b')' if depth == 0 => break,
            b')' => depth -= 1,
            b',' | b'[' | b']' if depth == 0 => break,
            ch if ch.is_ascii_whitespace() && depth == 0 => break,
            _ => {}
        }
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::Syntax { pos: start, msg: "expected a generator tree" });
    }
    let generator = Tree::parse(&text[start..*pos])?;
    skip_ws(bytes, pos);
    if bytes.get(*pos) != Some(&b'[') {
        return OperationTree::single(generator);
    }
    *pos += 1;
    let mut slots = Vec::new();
    loop {
        skip_ws(bytes, pos);
        if bytes.get(*pos) == Some(&b'_') {
            *pos += 1;
            slots.push(Slot::Leaf);
        } else {
            slots.push(Slot::Node(Box::new(parse_op(text, bytes, pos)?)));
        }
        skip_ws(bytes, pos);
        match bytes.get(*pos) {
            Some(b',') => *pos += 1,
            Some(b']') => {
                *pos += 1;
                break;
            }
            _ => return Err(Error::Syntax { pos: *pos, msg: "expected ',' or ']'" }),
        }
    }
    OperationTree::new(generator, slots)
}

impl fmt::Display for OperationTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator)?;
        if self.slots.iter().all(|s| matches!(s, Slot::Leaf)) {
            return Ok(());
        }
        f.write_str("[")?;
        for (k, s) in self.slots.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            match s {
                Slot::Leaf => f.write_str("_")?,
                Slot::Node(w) => write!(f, "{w}")?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for OperationTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<OperationTree> {
        OperationTree::parse(s)
    }
}

/// Evaluates an operation tree in `T_Max`.
pub fn evaluate(w: &OperationTree) -> Tree {
    w.evaluate()
}

/// Factors `x` into indecomposables, splitting along the first witness in
/// `(a, b)` order.
pub fn factorize(x: &Tree) -> Result<OperationTree> {
    factorize_with(x, ScanOrder::Forward)
}

/// [`factorize`] with an explicit witness scan order. Freeness of `T_Max`
/// makes the result independent of the order.
pub fn factorize_with(x: &Tree, order: ScanOrder) -> Result<OperationTree> {
    x.require_standard()?;
    if x.arity() < 2 {
        return Err(Error::ArityTooSmall { arity: x.arity(), min: 2 });
    }
    match first_witness(x, order) {
        None => OperationTree::single(x.clone()),
        Some(w) => {
            let (t, s) = split(x, w)?;
            let mut outer = factorize_with(&t, order)?;
            outer.graft(w.a, factorize_with(&s, order)?)?;
            Ok(outer)
        }
    }
}

/// Indecomposable trees of arity `n >= 2`, in enumeration order.
pub fn indecomposables(n: usize) -> Result<Vec<Tree>> {
    if n < 2 {
        return Err(Error::ArityTooSmall { arity: n, min: 2 });
    }
    Ok(enumerate_trees(n)?.filter(|x| first_witness(x, ScanOrder::Forward).is_none()).collect())
}

/// `β_n`, the number of indecomposables of arity `n`.
pub fn count_indecomposables(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::ArityTooSmall { arity: n, min: 2 });
    }
    Ok(enumerate_trees(n)?.filter(|x| first_witness(x, ScanOrder::Forward).is_none()).count())
}

/// Trees of arity `n` that are not the result of any non-trivial composition
/// in `kind`, found by composing every pair of smaller trees.
pub fn indecomposables_by_image(kind: SetOperad, n: usize) -> Result<Vec<Tree>> {
    if n < 2 {
        return Err(Error::ArityTooSmall { arity: n, min: 2 });
    }
    let trees = trees_by_arity(n - 1);
    let mut image = BTreeSet::new();
    for p in 2..n {
        let q = n + 1 - p;
        for t in &trees[p] {
            for s in &trees[q] {
                for i in 1..=p {
                    image.insert(kind.compose_unchecked(t, i, s));
                }
            }
        }
    }
    Ok(enumerate_trees(n)?.filter(|x| !image.contains(x)).collect())
}

/// All operation trees of each arity up to a bound over a fixed family of
/// generators.
///
/// Within an arity, trees are ordered by root generator arity, then by
/// generator order, then by slot arities with the leftmost slot largest
/// first.
#[derive(Debug, Clone)]
pub struct OperationTreeCatalog {
    by_arity: Vec<Vec<OperationTree>>,
}

impl OperationTreeCatalog {
    /// `generators(k)` supplies the generators of arity `k` for `2 <= k <=
    /// max_arity`.
    pub fn build(max_arity: usize, mut generators: impl FnMut(usize) -> Vec<Tree>) -> OperationTreeCatalog {
        let mut by_arity: Vec<Vec<OperationTree>> = vec![Vec::new(); max_arity.max(1) + 1];
        for n in 2..=max_arity {
            let mut level = Vec::new();
            for k in 2..=n {
                let gens = generators(k);
                if gens.is_empty() {
                    continue;
                }
                let shapes = compositions(n, k);
                for g in &gens {
                    for shape in &shapes {
                        fill_slots(g, shape, &by_arity, &mut level);
                    }
                }
            }
            by_arity[n] = level;
        }
        OperationTreeCatalog { by_arity }
    }

    /// Catalog over the indecomposables of `T_Max`.
    pub fn indecomposable(max_arity: usize) -> OperationTreeCatalog {
        OperationTreeCatalog::build(max_arity, |k| indecomposables(k).expect("k >= 2"))
    }

    pub fn max_arity(&self) -> usize {
        self.by_arity.len() - 1
    }

    pub fn of_arity(&self, n: usize) -> &[OperationTree] {
        self.by_arity.get(n).map_or(&[], Vec::as_slice)
    }
}

/// Compositions of `n` into `k` positive parts, first part descending.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (1..=rest - (parts - 1)).rev() {
            prefix.push(first);
            go(rest - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && n >= k {
        go(n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn fill_slots(g: &Tree, shape: &[usize], by_arity: &[Vec<OperationTree>], out: &mut Vec<OperationTree>) {
    fn go(
        g: &Tree,
        shape: &[usize],
        by_arity: &[Vec<OperationTree>],
        slots: &mut Vec<Slot>,
        out: &mut Vec<OperationTree>,
    ) {
        let k = slots.len();
        if k == shape.len() {
            out.push(OperationTree { generator: g.clone(), slots: slots.clone() });
            return;
        }
        if shape[k] == 1 {
            slots.push(Slot::Leaf);
            go(g, shape, by_arity, slots, out);
            slots.pop();
        } else {
            for w in &by_arity[shape[k]] {
                slots.push(Slot::Node(Box::new(w.clone())));
                go(g, shape, by_arity, slots, out);
                slots.pop();
            }
        }
    }
    go(g, shape, by_arity, &mut Vec::with_capacity(shape.len()), out);
}

/// Outcome of comparing operation-tree evaluations against `n^(n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreenessReport {
    pub n: usize,
    /// `n^(n-1)`
    pub trees: u128,
    /// Operation trees of arity `n`.
    pub constructions: usize,
    /// Distinct evaluations among them.
    pub distinct: usize,
}

impl FreenessReport {
    pub fn is_free(&self) -> bool {
        self.distinct == self.constructions && self.constructions as u128 == self.trees
    }
}

impl fmt::Display for FreenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_free() {
            write!(f, "OK {} trees, {} constructions", self.trees, self.constructions)
        } else {
            write!(
                f,
                "FAIL {} trees, {} constructions, {} distinct evaluations",
                self.trees, self.constructions, self.distinct
            )
        }
    }
}

/// Evaluates every operation tree of arity `n` over `T_Max` indecomposables
/// and checks the evaluations are pairwise distinct and number `n^(n-1)`.
pub fn verify_freeness(n: usize) -> Result<FreenessReport> {
    if n < 2 {
        return Err(Error::ArityTooSmall { arity: n, min: 2 });
    }
    let catalog = OperationTreeCatalog::indecomposable(n);
    let ops = catalog.of_arity(n);
    let distinct: BTreeSet<Tree> = ops.iter().map(OperationTree::evaluate).collect();
    Ok(FreenessReport { n, trees: cayley_count(n), constructions: ops.len(), distinct: distinct.len() })
}

/// Searches for two distinct operation trees of arity `n` over the
/// indecomposables of `kind` with equal evaluation. Returns the first pair
/// met in catalog order, earlier tree first.
pub fn find_collision(kind: SetOperad, n: usize) -> Result<Option<(OperationTree, OperationTree)>> {
    find_collision_with(kind, n, 2)
}

/// [`find_collision`] using only generators of arity at least
/// `min_generator_arity`.
pub fn find_collision_with(
    kind: SetOperad,
    n: usize,
    min_generator_arity: usize,
) -> Result<Option<(OperationTree, OperationTree)>> {
    if n < 2 {
        return Err(Error::ArityTooSmall { arity: n, min: 2 });
    }
    let catalog = OperationTreeCatalog::build(n, |k| {
        if k < min_generator_arity {
            Vec::new()
        } else {
            indecomposables_by_image(kind, k).expect("k >= 2")
        }
    });
    let mut seen: BTreeMap<Tree, &OperationTree> = BTreeMap::new();
    for w in catalog.of_arity(n) {
        let x = w.evaluate_in(kind);
        if let Some(first) = seen.get(&x) {
            return Ok(Some(((*first).clone(), w.clone())));
        }
        seen.insert(x, w);
    }
    Ok(None)
}
