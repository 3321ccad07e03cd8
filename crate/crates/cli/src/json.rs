//! JSON forms of trees and tree sums.
//!
//! A tree is `{"n": 3, "parent": [2, 0, 2]}`: entry `k` is the parent of
//! vertex `k + 1`, with `0` marking the root. A sum is
//! `{"arity": 4, "terms": [{"coeff": "1", "tree": {...}}, ...]}` with
//! coefficients as decimal strings so they survive any size, terms in
//! canonical order.

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use operad_forge_core::{Tree, TreeSum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub parent: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub tree: TreeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumJson {
    pub arity: usize,
    pub terms: Vec<TermJson>,
}

impl From<&Tree> for TreeJson {
    fn from(t: &Tree) -> TreeJson {
        TreeJson { n: t.arity(), parent: t.parents().to_vec() }
    }
}

impl TryFrom<TreeJson> for Tree {
    type Error = anyhow::Error;

    fn try_from(j: TreeJson) -> Result<Tree> {
        if j.parent.len() != j.n {
            bail!("tree has n = {} but {} parent entries", j.n, j.parent.len());
        }
        Ok(Tree::from_parents(j.parent)?)
    }
}

impl From<&TreeSum> for SumJson {
    fn from(s: &TreeSum) -> SumJson {
        SumJson {
            arity: s.arity(),
            terms: s
                .sorted_terms()
                .into_iter()
                .map(|(t, c)| TermJson { coeff: c.to_string(), tree: t.into() })
                .collect(),
        }
    }
}

impl TryFrom<SumJson> for TreeSum {
    type Error = anyhow::Error;

    fn try_from(j: SumJson) -> Result<TreeSum> {
        let mut sum = TreeSum::zero(j.arity);
        for term in j.terms {
            let coeff: BigInt = term.coeff.parse().with_context(|| format!("bad coefficient {:?}", term.coeff))?;
            let tree = Tree::try_from(term.tree)?;
            if tree.arity() != j.arity {
                bail!("term of arity {} in a sum of arity {}", tree.arity(), j.arity);
            }
            sum.add_term(tree, coeff);
        }
        Ok(sum)
    }
}

pub fn tree_to_json(t: &Tree) -> String {
    serde_json::to_string(&TreeJson::from(t)).expect("plain data serializes")
}

pub fn tree_from_json(text: &str) -> Result<Tree> {
    let j: TreeJson = serde_json::from_str(text).context("malformed tree JSON")?;
    Tree::try_from(j)
}

pub fn sum_to_json(s: &TreeSum) -> String {
    serde_json::to_string(&SumJson::from(s)).expect("plain data serializes")
}

pub fn sum_from_json(text: &str) -> Result<TreeSum> {
    let j: SumJson = serde_json::from_str(text).context("malformed sum JSON")?;
    TreeSum::try_from(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use operad_forge_core::compose_pl;

    #[test]
    fn tree_format() {
        let t: Tree = "2(1,3)".parse().unwrap();
        assert_eq!(tree_to_json(&t), r#"{"n":3,"parent":[2,0,2]}"#);
        assert_eq!(tree_from_json(r#"{"n":3,"parent":[2,0,2]}"#).unwrap(), t);
        assert!(tree_from_json(r#"{"n":2,"parent":[2,0,2]}"#).is_err());
        assert!(tree_from_json(r#"{"n":2,"parent":[2,1]}"#).is_err());
        assert!(tree_from_json("[1]").is_err());
    }

    #[test]
    fn sum_round_trip() {
        let t: Tree = "2(1,3)".parse().unwrap();
        let s: Tree = "2(1)".parse().unwrap();
        let sum = compose_pl(&t, 2, &s).unwrap() - TreeSum::from_tree("1(2,3,4)".parse().unwrap());
        let text = sum_to_json(&sum);
        assert!(text.starts_with(r#"{"arity":4,"terms":[{"coeff":"-1","tree":{"n":4,"parent":[0,1,1,1]}}"#));
        assert_eq!(sum_from_json(&text).unwrap(), sum);
        assert!(sum_from_json(r#"{"arity":3,"terms":[{"coeff":"x","tree":{"n":3,"parent":[0,1,1]}}]}"#).is_err());
        assert!(sum_from_json(r#"{"arity":2,"terms":[{"coeff":"1","tree":{"n":3,"parent":[0,1,1]}}]}"#).is_err());
    }
}
