//! Black-and-white ribbon trees: enumeration, degrees, and the action of
//! trees built from white input vertices (optionally with a thick tail) and
//! black product vertices.
//!
//! Encoding: a white vertex is `w<label>`, followed by `~<sector>` when it
//! carries a tail and by `(<children>)` when it has children; a black vertex
//! is `b(<children>)`. The tail sector j ∈ 0..=#children says that the tail
//! sits between child j−1 and child j. Trees are planted, so the planar
//! string is already canonical.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Algebra;
use crate::hochschild::{brace_raw, brace_split, cup_raw, delta, delta_part, Cochain, HochError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeError {
    Parse(String),
    Invalid(String),
    /// Enumeration would exceed the configured number of trees.
    CapExceeded { cap: usize },
    ArityMismatch { expected: usize, got: usize },
    /// The tree is outside the family the action is defined for.
    Unsupported(String),
    /// Argument `index` (0-based) has Δ ≠ 0.
    NotInKerDelta(usize),
    Hoch(HochError),
}

impl From<HochError> for TreeError {
    fn from(e: HochError) -> Self {
        TreeError::Hoch(e)
    }
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::Parse(s) => write!(f, "cannot parse tree: {}", s),
            TreeError::Invalid(s) => write!(f, "invalid tree: {}", s),
            TreeError::CapExceeded { cap } => write!(f, "enumeration exceeds the cap of {} trees", cap),
            TreeError::ArityMismatch { expected, got } => write!(f, "tree has arity {}, got {} arguments", expected, got),
            TreeError::Unsupported(s) => write!(f, "unsupported tree: {}", s),
            TreeError::NotInKerDelta(i) => write!(f, "argument {} is not in Ker Δ", i + 1),
            TreeError::Hoch(e) => write!(f, "{}", e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    White { label: usize, tail: Option<usize>, children: Vec<Node> },
    Black { children: Vec<Node> },
}

impl Node {
    fn write(&self, out: &mut String) {
        match self {
            Node::White { label, tail, children } => {
                out.push_str(&format!("w{}", label));
                if let Some(j) = tail {
                    out.push_str(&format!("~{}", j));
                }
                if !children.is_empty() {
                    write_children(children, out);
                }
            }
            Node::Black { children } => {
                out.push('b');
                write_children(children, out);
            }
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Node)) {
        f(self);
        let (Node::White { children, .. } | Node::Black { children }) = self;
        for c in children {
            c.visit(f);
        }
    }
}

fn write_children(children: &[Node], out: &mut String) {
    out.push('(');
    for (i, c) in children.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        c.write(out);
    }
    out.push(')');
}

/// A planted black-and-white ribbon tree with k labeled white vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RibbonTree {
    root: Node,
    arity: usize,
}

impl RibbonTree {
    /// Checks labels 1..=k, black vertices with ≥ 2 white children and
    /// tail sectors in range.
    pub fn new(root: Node) -> Result<RibbonTree, TreeError> {
        let mut labels = Vec::new();
        let mut err = None;
        root.visit(&mut |n| match n {
            Node::White { label, tail, children } => {
                labels.push(*label);
                if tail.is_some_and(|j| j > children.len()) {
                    err = Some(format!("tail sector of w{} out of range", label));
                }
            }
            Node::Black { children } => {
                if children.len() < 2 {
                    err = Some(String::from("black vertex with fewer than two children"));
                }
                if children.iter().any(|c| matches!(c, Node::Black { .. })) {
                    err = Some(String::from("black vertex with a black child"));
                }
            }
        });
        if let Some(e) = err {
            return Err(TreeError::Invalid(e));
        }
        let k = labels.len();
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &l)| l != i + 1) {
            return Err(TreeError::Invalid(String::from("white labels must be 1..k, each once")));
        }
        Ok(RibbonTree { root, arity: k })
    }

    pub fn parse(s: &str) -> Result<RibbonTree, TreeError> {
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let root = p.node()?;
        if p.i != p.s.len() {
            return Err(TreeError::Parse(format!("trailing input at byte {}", p.i)));
        }
        RibbonTree::new(root)
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn encode(&self) -> String {
        let mut s = String::new();
        self.root.write(&mut s);
        s
    }

    /// Σ over white vertices of (#children + [tail]).
    pub fn degree(&self) -> usize {
        let mut d = 0;
        self.root.visit(&mut |n| {
            if let Node::White { tail, children, .. } = n {
                d += children.len() + tail.is_some() as usize;
            }
        });
        d
    }

    /// The label of a white leaf carrying a tail, the local picture of the
    /// Δ-tree, if there is one.
    pub fn has_delta_tail(&self) -> Option<usize> {
        let mut found = None;
        self.root.visit(&mut |n| {
            if let Node::White { label, tail: Some(_), children } = n {
                if children.is_empty() && found.is_none() {
                    found = Some(*label);
                }
            }
        });
        found
    }
}

impl fmt::Display for RibbonTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), TreeError> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(TreeError::Parse(format!("expected '{}' at byte {}", c as char, self.i)))
        }
    }

    fn number(&mut self) -> Result<usize, TreeError> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        core::str::from_utf8(&self.s[start..self.i])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| TreeError::Parse(format!("expected a number at byte {}", start)))
    }

    fn children(&mut self) -> Result<Vec<Node>, TreeError> {
        self.expect(b'(')?;
        let mut out = alloc::vec![self.node()?];
        while self.peek() == Some(b',') {
            self.i += 1;
            out.push(self.node()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn node(&mut self) -> Result<Node, TreeError> {
        match self.peek() {
            Some(b'w') => {
                self.i += 1;
                let label = self.number()?;
                let tail = if self.peek() == Some(b'~') {
                    self.i += 1;
                    Some(self.number()?)
                } else {
                    None
                };
                let children = if self.peek() == Some(b'(') { self.children()? } else { Vec::new() };
                Ok(Node::White { label, tail, children })
            }
            Some(b'b') => {
                self.i += 1;
                Ok(Node::Black { children: self.children()? })
            }
            _ => Err(TreeError::Parse(format!("expected 'w' or 'b' at byte {}", self.i))),
        }
    }
}

/// The Δ-tree: one white vertex with a tail.
pub fn delta_tree() -> RibbonTree {
    RibbonTree::parse("w1~0").expect("valid")
}

/// T_k: a black vertex over k white leaves (T = T_2 is the cup).
pub fn cup_tree(k: usize) -> RibbonTree {
    let ch: Vec<String> = (1..=k).map(|i| format!("w{}", i)).collect();
    RibbonTree::parse(&format!("b({})", ch.join(","))).expect("valid for k >= 2")
}

/// W_k: white vertex 1 with k white leaves (R = W_1 is the first brace).
pub fn brace_tree(k: usize) -> RibbonTree {
    if k == 0 {
        return RibbonTree::parse("w1").expect("valid");
    }
    let ch: Vec<String> = (2..=k + 1).map(|i| format!("w{}", i)).collect();
    RibbonTree::parse(&format!("w1({})", ch.join(","))).expect("valid")
}

struct Enum {
    cap: usize,
    made: usize,
}

impl Enum {
    fn bump(&mut self, n: usize) -> Result<(), TreeError> {
        self.made += n;
        if self.made > self.cap {
            Err(TreeError::CapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Trees on the label set `mask`, rooted white, or black if allowed.
    fn trees(&mut self, mask: u32, black: bool) -> Result<Vec<Node>, TreeError> {
        let mut out = Vec::new();
        let mut bits = mask;
        while bits != 0 {
            let l = bits.trailing_zeros();
            bits &= bits - 1;
            for children in self.forests(mask & !(1 << l), false)? {
                for tail in core::iter::once(None).chain((0..=children.len()).map(Some)) {
                    out.push(Node::White { label: l as usize + 1, tail, children: children.clone() });
                }
            }
        }
        if black && mask.count_ones() >= 2 {
            for children in self.forests(mask, true)? {
                if children.len() >= 2 {
                    out.push(Node::Black { children });
                }
            }
        }
        self.bump(out.len())?;
        Ok(out)
    }

    /// Ordered forests using exactly the labels in `mask`.
    fn forests(&mut self, mask: u32, white_only: bool) -> Result<Vec<Vec<Node>>, TreeError> {
        if mask == 0 {
            return Ok(alloc::vec![Vec::new()]);
        }
        let mut out = Vec::new();
        let mut sub = mask;
        while sub != 0 {
            let firsts = self.trees(sub, !white_only)?;
            let rests = self.forests(mask & !sub, white_only)?;
            for t in &firsts {
                for r in &rests {
                    let mut f = alloc::vec![t.clone()];
                    f.extend(r.iter().cloned());
                    out.push(f);
                }
            }
            self.bump(out.len())?;
            sub = (sub - 1) & mask;
        }
        Ok(out)
    }
}

/// All trees of arity k and degree ≤ `d_max`, sorted by encoding. `cap`
/// bounds the number of intermediate trees built.
pub fn enumerate(k: usize, d_max: usize, cap: usize) -> Result<Vec<RibbonTree>, TreeError> {
    if k == 0 || k > 16 {
        return Err(TreeError::Invalid(format!("arity {} outside 1..=16", k)));
    }
    let mut e = Enum { cap, made: 0 };
    let mut out: Vec<RibbonTree> = e
        .trees((1u32 << k) - 1, true)?
        .into_iter()
        .map(|root| RibbonTree { root, arity: k })
        .filter(|t| t.degree() <= d_max)
        .collect();
    out.sort_by_cached_key(|t| t.encode());
    Ok(out)
}

/// Number of trees of each degree at arity k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCensus {
    pub arity: usize,
    pub counts: BTreeMap<usize, usize>,
}

pub fn census(k: usize, cap: usize) -> Result<TreeCensus, TreeError> {
    let mut counts = BTreeMap::new();
    for t in enumerate(k, usize::MAX, cap)? {
        *counts.entry(t.degree()).or_insert(0) += 1;
    }
    Ok(TreeCensus { arity: k, counts })
}

fn act_node(a: &Algebra, n: &Node, args: &[Cochain]) -> Result<Cochain, TreeError> {
    match n {
        Node::Black { children } => {
            if children.len() > 2 && !a.is_associative_only() {
                return Err(TreeError::Unsupported(String::from(
                    "black vertex of arity > 2 needs an associative product",
                )));
            }
            let mut acc = act_node(a, &children[0], args)?;
            for c in &children[1..] {
                acc = cup_raw(a, &acc, &act_node(a, c, args)?);
            }
            Ok(acc)
        }
        Node::White { label, tail, children } => {
            let phi = &args[label - 1];
            let kids: Vec<Cochain> = children.iter().map(|c| act_node(a, c, args)).collect::<Result<_, _>>()?;
            let refs: Vec<&Cochain> = kids.iter().collect();
            match tail {
                None => Ok(brace_raw(a, phi, &refs)),
                Some(_) if kids.is_empty() => Ok(delta(a, phi)?),
                Some(j) => {
                    // Σ_g over the cut g of Δφ's slots, children before the
                    // tail going left of the cut.
                    let mut out = Cochain::zero(a, !phi.is_odd() ^ kids.iter().fold(false, |p, c| p ^ c.is_odd()));
                    for n in phi.weights() {
                        if n == 0 {
                            continue;
                        }
                        let comp = phi.component(n);
                        for g in 0..n {
                            let u = delta_part(a, &comp, |i, m| m == n && i == (g + 1) % n)?;
                            out = out.add(&brace_split(a, &u, &refs, g, *j))?;
                        }
                    }
                    Ok(out)
                }
            }
        }
    }
}

/// The operation of `t` on k cochains: white vertices insert their
/// argument by braces, black vertices multiply by the cup product and a
/// tail applies Δ with the children placed around the cut.
pub fn act(a: &Algebra, t: &RibbonTree, args: &[Cochain]) -> Result<Cochain, TreeError> {
    if args.len() != t.arity {
        return Err(TreeError::ArityMismatch { expected: t.arity, got: args.len() });
    }
    if args.iter().any(|c| c.tag() != a.tag()) {
        return Err(HochError::AlgebraMismatch.into());
    }
    act_node(a, &t.root, args)
}

/// Result of evaluating every top-degree tree of arity k on Ker Δ inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub arity: usize,
    /// (tree encoding, Δ-tail label, action vanished).
    pub rows: Vec<(String, Option<usize>, bool)>,
}

impl VanishingReport {
    pub fn all_vanish(&self) -> bool {
        self.rows.iter().all(|r| r.2)
    }
}

pub fn ker_delta_vanishing(a: &Algebra, args: &[Cochain], cap: usize) -> Result<VanishingReport, TreeError> {
    let k = args.len();
    for (i, c) in args.iter().enumerate() {
        if !delta(a, c)?.is_zero() {
            return Err(TreeError::NotInKerDelta(i));
        }
    }
    let top = 2 * k - 1;
    let mut rows = Vec::new();
    for t in enumerate(k, top, cap)?.into_iter().filter(|t| t.degree() == top) {
        let v = act(a, &t, args)?;
        rows.push((t.encode(), t.has_delta_tail(), v.is_zero()));
    }
    Ok(VanishingReport { arity: k, rows })
}
