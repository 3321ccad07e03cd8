//! Enumeration of all `n`-labelled rooted trees.
//!
//! Rooted trees on `[n]` are in bijection with pairs (root, Prüfer sequence
//! of length `n - 2`), which gives exactly `n^(n-1)` trees for `n >= 2`.
//! Trees are produced root-major, then in lexicographic Prüfer order.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tree::{Label, Tree};

/// Streams every standard tree of arity `n` exactly once.
#[derive(Debug, Clone)]
pub struct TreeIter {
    n: usize,
    root: Label,
    code: Vec<Label>,
    done: bool,
}

/// All standard trees of arity `n`. `n = 0` is rejected: the operads here are
/// reduced.
pub fn enumerate_trees(n: usize) -> Result<TreeIter> {
    if n == 0 {
        return Err(Error::ArityTooSmall { arity: 0, min: 1 });
    }
    Ok(TreeIter { n, root: 1, code: vec![1; n.saturating_sub(2)], done: false })
}

/// Collects [`enumerate_trees`] for every arity `1..=max_arity`, indexed by
/// arity (index 0 is empty).
pub fn trees_by_arity(max_arity: usize) -> Vec<Vec<Tree>> {
    let mut out = vec![Vec::new()];
    for n in 1..=max_arity {
        out.push(enumerate_trees(n).expect("n >= 1").collect());
    }
    out
}

/// `n^(n-1)`, the number of standard trees of arity `n`.
pub fn cayley_count(n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    (n as u128).pow(n as u32 - 1)
}

impl TreeIter {
    fn advance(&mut self) {
        for k in (0..self.code.len()).rev() {
            if self.code[k] < self.n {
                self.code[k] += 1;
                return;
            }
            self.code[k] = 1;
        }
        if self.root < self.n {
            self.root += 1;
        } else {
            self.done = true;
        }
    }
}

impl Iterator for TreeIter {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = if self.n == 1 {
            self.done = true;
            Tree::unit()
        } else {
            decode(self.n, &self.code, self.root)
        };
        if self.n > 1 {
            self.advance();
        }
        Some(tree)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.done {
            return (0, Some(0));
        }
        let n = self.n as u128;
        let mut rank = 0u128;
        for &c in &self.code {
            rank = rank * n + (c as u128 - 1);
        }
        let per_root = n.pow(self.code.len() as u32);
        let remaining = cayley_count(self.n) - ((self.root as u128 - 1) * per_root + rank);
        match usize::try_from(remaining) {
            Ok(r) => (r, Some(r)),
            Err(_) => (usize::MAX, None),
        }
    }
}

/// Decodes a Prüfer sequence into an unrooted tree on `[n]` and orients it
/// towards `root`.
fn decode(n: usize, code: &[Label], root: Label) -> Tree {
    let mut degree = vec![1usize; n + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut adjacency = vec![Vec::with_capacity(2); n + 1];
    fn link(a: Label, b: Label, adjacency: &mut [Vec<Label>]) {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for &c in code {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf exists");
        link(leaf, c, &mut adjacency);
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let mut last = (1..=n).filter(|&v| degree[v] == 1);
    let (u, v) = (last.next().expect("two leaves remain"), last.next().expect("two leaves remain"));
    link(u, v, &mut adjacency);

    let mut parent = vec![0; n];
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w - 1] = v;
                queue.push_back(w);
            }
        }
    }
    Tree::from_parents_unchecked(parent)
}
