//! The set-level operads `T_Max`, `T_Min` and `NAP`, and an exhaustive
//! checker for the non-symmetric operad axioms.
//!
//! Each composition picks a single graft map, so `T ∘_i S` is one tree:
//!
//! * `T_Max`: children `k < i` go to `m`, children `k > i` go to `1`;
//! * `T_Min`: children `k < i` go to `1`, children `k > i` go to `m`;
//! * `NAP`: every child goes to the root of `S`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::enumerate::enumerate_trees;
use crate::error::{Error, Result};
use crate::prelie::{check_position, compose_pl_linear, graft_unchecked, GraftMap, TreeSum};
use crate::tree::{Label, Tree};

/// Which single-tree composition to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetOperad {
    Max,
    Min,
    Nap,
}

impl SetOperad {
    pub const ALL: [SetOperad; 3] = [SetOperad::Max, SetOperad::Min, SetOperad::Nap];

    pub fn name(self) -> &'static str {
        match self {
            SetOperad::Max => "max",
            SetOperad::Min => "min",
            SetOperad::Nap => "nap",
        }
    }

    /// The graft map this operad uses for `T ∘_i S`.
    pub fn graft_map(self, t: &Tree, i: Label, s: &Tree) -> Result<GraftMap> {
        match self {
            SetOperad::Max => f_max_map(t, i, s.arity()),
            SetOperad::Min => f_min_map(t, i, s.arity()),
            SetOperad::Nap => f_nap_map(t, i, s),
        }
    }

    pub fn compose(self, t: &Tree, i: Label, s: &Tree) -> Result<Tree> {
        t.require_standard()?;
        s.require_standard()?;
        check_position(t, i)?;
        Ok(self.compose_unchecked(t, i, s))
    }

    /// [`SetOperad::compose`] without validation; both trees standard and
    /// `1 <= i <= arity(t)`.
    pub(crate) fn compose_unchecked(self, t: &Tree, i: Label, s: &Tree) -> Tree {
        let m = s.arity();
        match self {
            SetOperad::Max => graft_unchecked(t, i, s, |k| if k < i { m } else { 1 }),
            SetOperad::Min => graft_unchecked(t, i, s, |k| if k < i { 1 } else { m }),
            SetOperad::Nap => {
                let r = s.root();
                graft_unchecked(t, i, s, |_| r)
            }
        }
    }
}

impl fmt::Display for SetOperad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetOperad {
    type Err = Error;

    fn from_str(s: &str) -> Result<SetOperad> {
        match s {
            "max" => Ok(SetOperad::Max),
            "min" => Ok(SetOperad::Min),
            "nap" => Ok(SetOperad::Nap),
            _ => Err(Error::Syntax { pos: 0, msg: "expected max, min or nap" }),
        }
    }
}

fn in_vertices_at(t: &Tree, i: Label) -> Result<Vec<Label>> {
    check_position(t, i)?;
    t.in_vertices(i)
}

/// `f_Min`: `k < i ↦ 1`, `k > i ↦ m`.
pub fn f_min_map(t: &Tree, i: Label, m: usize) -> Result<GraftMap> {
    let children = in_vertices_at(t, i)?;
    GraftMap::new(children.into_iter().map(|k| (k, if k < i { 1 } else { m })).collect())
}

/// `f_Max`: `k < i ↦ m`, `k > i ↦ 1`.
pub fn f_max_map(t: &Tree, i: Label, m: usize) -> Result<GraftMap> {
    let children = in_vertices_at(t, i)?;
    GraftMap::new(children.into_iter().map(|k| (k, if k < i { m } else { 1 })).collect())
}

/// `f_NAP`: constant at the root of `S`.
pub fn f_nap_map(t: &Tree, i: Label, s: &Tree) -> Result<GraftMap> {
    Ok(GraftMap::constant(&in_vertices_at(t, i)?, s.root()))
}

pub fn compose_max(t: &Tree, i: Label, s: &Tree) -> Result<Tree> {
    SetOperad::Max.compose(t, i, s)
}

pub fn compose_min(t: &Tree, i: Label, s: &Tree) -> Result<Tree> {
    SetOperad::Min.compose(t, i, s)
}

pub fn compose_nap(t: &Tree, i: Label, s: &Tree) -> Result<Tree> {
    SetOperad::Nap.compose(t, i, s)
}

/// A graded collection with partial compositions and a unit, enough to state
/// the non-symmetric operad axioms.
pub trait Operad {
    type Elem: Clone + PartialEq + fmt::Display;

    fn unit(&self) -> Self::Elem;
    fn arity(&self, e: &Self::Elem) -> usize;
    fn compose(&self, a: &Self::Elem, i: usize, b: &Self::Elem) -> Self::Elem;
    /// A basis (or the full set) of elements of arity `n`.
    fn basis(&self, n: usize) -> Vec<Self::Elem>;
}

impl Operad for SetOperad {
    type Elem = Tree;

    fn unit(&self) -> Tree {
        Tree::unit()
    }

    fn arity(&self, e: &Tree) -> usize {
        e.arity()
    }

    fn compose(&self, a: &Tree, i: usize, b: &Tree) -> Tree {
        self.compose_unchecked(a, i, b)
    }

    fn basis(&self, n: usize) -> Vec<Tree> {
        enumerate_trees(n).map(Iterator::collect).unwrap_or_default()
    }
}

/// The linear pre-Lie operad, with single trees as basis.
#[derive(Debug, Clone, Copy, Default)]
pub struct PreLie;

impl Operad for PreLie {
    type Elem = TreeSum;

    fn unit(&self) -> TreeSum {
        TreeSum::from_tree(Tree::unit())
    }

    fn arity(&self, e: &TreeSum) -> usize {
        e.arity()
    }

    fn compose(&self, a: &TreeSum, i: usize, b: &TreeSum) -> TreeSum {
        compose_pl_linear(a, i, b).expect("position in range")
    }

    fn basis(&self, n: usize) -> Vec<TreeSum> {
        enumerate_trees(n).map(|it| it.map(TreeSum::from_tree).collect()).unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `(a ∘_i b) ∘_{j+i-1} c = a ∘_i (b ∘_j c)`
    Sequential,
    /// `(a ∘_i b) ∘_j c = (a ∘_j c) ∘_{i+l-1} b` for `j < i`
    Parallel,
    /// `1 ∘_1 a = a`
    UnitLeft,
    /// `a ∘_i 1 = a`
    UnitRight,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Sequential => "seq",
            Axiom::Parallel => "par",
            Axiom::UnitLeft => "unitL",
            Axiom::UnitRight => "unitR",
        }
    }
}

/// One failed instance of an axiom, with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub a: String,
    pub b: String,
    pub c: Option<String>,
    pub i: usize,
    pub j: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.c.as_deref().unwrap_or("_");
        let j = self.j.map_or_else(|| String::from("_"), |j| format!("{j}"));
        write!(
            f,
            "axiom={} a={} b={} c={} i={} j={} lhs={} rhs={}",
            self.axiom.name(),
            self.a,
            self.b,
            c,
            self.i,
            j,
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub instances: u64,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Concatenates two reports; used to merge per-chunk results.
    pub fn merge(mut self, other: AxiomReport) -> AxiomReport {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self
    }
}

/// Bases of every arity `1..=max_arity`, indexed by arity.
pub fn bases<O: Operad>(op: &O, max_arity: usize) -> Vec<Vec<O::Elem>> {
    (0..=max_arity).map(|n| if n == 0 { Vec::new() } else { op.basis(n) }).collect()
}

/// Checks the sequential and parallel axioms for every instance whose first
/// argument is `a`, with `b` and `c` drawn from `bases` (indexed by arity).
pub fn check_associativity_from<O: Operad>(op: &O, a: &O::Elem, bases: &[Vec<O::Elem>]) -> AxiomReport {
    let mut report = AxiomReport::default();
    let n = op.arity(a);
    for b in bases.iter().flatten() {
        let m = op.arity(b);
        for c in bases.iter().flatten() {
            let l = op.arity(c);
            for i in 1..=n {
                let ab = op.compose(a, i, b);
                for j in 1..=m {
                    let lhs = op.compose(&ab, j + i - 1, c);
                    let rhs = op.compose(a, i, &op.compose(b, j, c));
                    report.instances += 1;
                    if lhs != rhs {
                        report.violations.push(violation(Axiom::Sequential, a, b, Some(c), i, Some(j), &lhs, &rhs));
                    }
                }
                for j in 1..i {
                    let lhs = op.compose(&ab, j, c);
                    let rhs = op.compose(&op.compose(a, j, c), i + l - 1, b);
                    report.instances += 1;
                    if lhs != rhs {
                        report.violations.push(violation(Axiom::Parallel, a, b, Some(c), i, Some(j), &lhs, &rhs));
                    }
                }
            }
        }
    }
    report
}

/// Checks both unit laws for every element of `bases`.
pub fn check_unit_laws<O: Operad>(op: &O, bases: &[Vec<O::Elem>]) -> AxiomReport {
    let mut report = AxiomReport::default();
    let unit = op.unit();
    for a in bases.iter().flatten() {
        let left = op.compose(&unit, 1, a);
        report.instances += 1;
        if &left != a {
            report.violations.push(violation(Axiom::UnitLeft, &unit, a, None, 1, None, &left, a));
        }
        for i in 1..=op.arity(a) {
            let right = op.compose(a, i, &unit);
            report.instances += 1;
            if &right != a {
                report.violations.push(violation(Axiom::UnitRight, a, &unit, None, i, None, &right, a));
            }
        }
    }
    report
}

#[allow(clippy::too_many_arguments)]
fn violation<E: fmt::Display>(
    axiom: Axiom,
    a: &E,
    b: &E,
    c: Option<&E>,
    i: usize,
    j: Option<usize>,
    lhs: &E,
    rhs: &E,
) -> Violation {
    Violation {
        axiom,
        a: format!("{a}"),
        b: format!("{b}"),
        c: c.map(|c| format!("{c}")),
        i,
        j,
        lhs: format!("{lhs}"),
        rhs: format!("{rhs}"),
    }
}

/// Exhaustively checks all four axioms over every basis element of arity at
/// most `max_arity`.
pub fn check_axioms<O: Operad>(op: &O, max_arity: usize) -> AxiomReport {
    let bases = bases(op, max_arity);
    let mut report = check_unit_laws(op, &bases);
    for a in bases.iter().flatten() {
        report = report.merge(check_associativity_from(op, a, &bases));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::trees_by_arity;
    use alloc::string::ToString;
    use alloc::vec;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn graft_maps_for_the_cherry() {
        let cherry = t("2(1,3)");
        let max: Vec<_> = f_max_map(&cherry, 2, 2).unwrap().iter().collect();
        assert_eq!(max, [(1, 2), (3, 1)]);
        let min: Vec<_> = f_min_map(&cherry, 2, 2).unwrap().iter().collect();
        assert_eq!(min, [(1, 1), (3, 2)]);
        let nap: Vec<_> = f_nap_map(&cherry, 2, &t("2(1)")).unwrap().iter().collect();
        assert_eq!(nap, [(1, 2), (3, 2)]);
        assert_eq!(f_max_map(&cherry, 4, 2), Err(Error::PositionOutOfRange { position: 4, arity: 3 }));
    }

    #[test]
    fn golden_compositions() {
        assert_eq!(compose_max(&t("4(3(1,2,5),6)"), 3, &t("3(1(2))")).unwrap(), t("6(5(1,2,3(4,7)),8)"));
        let chain = t("1(2)");
        assert_eq!(compose_min(&chain, 1, &chain).unwrap(), t("1(2(3))"));
        assert_eq!(compose_min(&chain, 2, &chain).unwrap(), t("1(2(3))"));
        assert_eq!(compose_nap(&chain, 1, &t("2(1)")).unwrap(), t("2(1,3)"));
        assert_eq!(compose_nap(&t("2(1)"), 2, &chain).unwrap(), t("2(1,3)"));
        // T_Max tells the two chain compositions apart
        assert_ne!(compose_max(&chain, 1, &chain).unwrap(), compose_max(&chain, 2, &chain).unwrap());
    }

    #[test]
    fn compose_matches_explicit_graft_map() {
        use crate::prelie::graft_compose;
        let trees = trees_by_arity(4);
        for kind in SetOperad::ALL {
            for tt in trees.iter().flatten() {
                for s in trees.iter().flatten() {
                    for i in 1..=tt.arity() {
                        let f = kind.graft_map(tt, i, s).unwrap();
                        assert_eq!(kind.compose(tt, i, s).unwrap(), graft_compose(tt, i, s, &f).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_hold_at_arity_three() {
        for kind in SetOperad::ALL {
            let report = check_axioms(&kind, 3);
            assert!(report.is_ok(), "{kind}: {:?}", report.violations.first());
            assert!(report.instances > 0);
        }
        assert!(check_axioms(&PreLie, 3).is_ok());
    }

    /// A deliberately broken composition must be caught.
    struct Broken;

    impl Operad for Broken {
        type Elem = Tree;
        fn unit(&self) -> Tree {
            Tree::unit()
        }
        fn arity(&self, e: &Tree) -> usize {
            e.arity()
        }
        fn compose(&self, a: &Tree, i: usize, b: &Tree) -> Tree {
            // ignores the position when it can
            let i = if a.arity() > 1 && b.arity() > 1 { 1 } else { i };
            SetOperad::Max.compose_unchecked(a, i, b)
        }
        fn basis(&self, n: usize) -> Vec<Tree> {
            SetOperad::Max.basis(n)
        }
    }

    #[test]
    fn checker_reports_violations() {
        let report = check_axioms(&Broken, 3);
        assert!(!report.is_ok());
        let line = report.violations[0].to_string();
        assert!(line.starts_with("axiom="), "{line}");
        assert!(line.contains(" lhs=") && line.contains(" rhs="));
    }

    #[test]
    fn violation_format() {
        let v = Violation {
            axiom: Axiom::UnitRight,
            a: "1(2)".into(),
            b: "1".into(),
            c: None,
            i: 2,
            j: None,
            lhs: "2(1)".into(),
            rhs: "1(2)".into(),
        };
        assert_eq!(v.to_string(), "axiom=unitR a=1(2) b=1 c=_ i=2 j=_ lhs=2(1) rhs=1(2)");
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("nap".parse::<SetOperad>().unwrap(), SetOperad::Nap);
        assert!("pl".parse::<SetOperad>().is_err());
        assert_eq!(SetOperad::ALL.iter().map(|k| k.to_string()).collect::<Vec<_>>(), vec!["max", "min", "nap"]);
    }
}
