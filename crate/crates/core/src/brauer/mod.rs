//! The Brauer algebra `Br_k` over `Q[c]`: perfect matchings on `k` top and
//! `k` bottom points, multiplied by stacking with each closed loop replaced
//! by `c`.

mod parse;

pub use parse::parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::algebra::{rat, Poly};
use crate::diagram::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("strand counts differ: {0} and {1}")]
    StrandMismatch(usize, usize),
    #[error("not a perfect matching on {0} strands")]
    BadMatching(usize),
    #[error("unknown element name '{name}' in Br_{k}")]
    UnknownName { name: String, k: usize },
    #[error("no named elements for Br_{0}")]
    NoNamedElements(usize),
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A perfect matching on the top points `t1..tk` and bottom points `b1..bk`.
/// Point `i < k` is `t(i+1)`, point `k + i` is `b(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrMatching {
    partner: Vec<u8>,
}

impl BrMatching {
    pub fn identity(k: usize) -> Self {
        let partner = (0..2 * k).map(|p| ((p + k) % (2 * k)) as u8).collect();
        BrMatching { partner }
    }

    /// Builds from point pairs in the `0..2k` numbering.
    pub fn from_pairs(k: usize, pairs: &[(usize, usize)]) -> Result<Self, BrauerError> {
        let mut partner = vec![u8::MAX; 2 * k];
        for &(a, b) in pairs {
            if a >= 2 * k || b >= 2 * k || a == b {
                return Err(BrauerError::BadMatching(k));
            }
            if partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(BrauerError::BadMatching(k));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        if partner.contains(&u8::MAX) {
            return Err(BrauerError::BadMatching(k));
        }
        Ok(BrMatching { partner })
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    /// Pairs with the smaller point first, in increasing order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&p| p < self.partner(p))
            .map(|p| (p, self.partner(p)))
            .collect()
    }

    /// Stacks `self` on top of `other`; returns the matching and the number
    /// of closed loops.
    pub fn stack(&self, other: &BrMatching) -> (BrMatching, u32) {
        let k = self.strands();
        debug_assert_eq!(k, other.strands());
        // 0..k top of self, k..2k the glued middle row, 2k..3k bottom of other
        let mut uf = UnionFind::new(3 * k);
        for (a, b) in self.pairs() {
            uf.union(a as u32, b as u32);
        }
        for (a, b) in other.pairs() {
            uf.union((a + k) as u32, (b + k) as u32);
        }
        let local = |p: usize| if p < k { p } else { p - k };
        let mut partner = vec![0u8; 2 * k];
        let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
        for p in (0..k).chain(2 * k..3 * k) {
            if let Some(q) = seen.insert(uf.find(p as u32), p) {
                partner[local(p)] = local(q) as u8;
                partner[local(q)] = local(p) as u8;
            }
        }
        let mut loops: Vec<u32> = (k..2 * k)
            .map(|p| uf.find(p as u32))
            .filter(|r| !seen.contains_key(r))
            .collect();
        loops.sort_unstable();
        loops.dedup();
        (BrMatching { partner }, loops.len() as u32)
    }

    /// Loops after joining each top point to the bottom point below it.
    pub fn trace_loops(&self) -> u32 {
        let k = self.strands();
        let mut uf = UnionFind::new(2 * k);
        for (a, b) in self.pairs() {
            uf.union(a as u32, b as u32);
        }
        for i in 0..k {
            uf.union(i as u32, (k + i) as u32);
        }
        let mut roots: Vec<u32> = (0..2 * k as u32).map(|p| uf.find(p)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() as u32
    }

    /// Every matching on `k` strands.
    pub fn all(k: usize) -> Vec<BrMatching> {
        fn go(partner: &mut Vec<u8>, out: &mut Vec<BrMatching>) {
            let Some(p) = partner.iter().position(|&x| x == u8::MAX) else {
                out.push(BrMatching {
                    partner: partner.clone(),
                });
                return;
            };
            for q in p + 1..partner.len() {
                if partner[q] == u8::MAX {
                    partner[p] = q as u8;
                    partner[q] = p as u8;
                    go(partner, out);
                    partner[p] = u8::MAX;
                    partner[q] = u8::MAX;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut vec![u8::MAX; 2 * k], &mut out);
        out
    }
}

impl fmt::Display for BrMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.strands();
        let name = |p: usize| {
            if p < k {
                format!("t{}", p + 1)
            } else {
                format!("b{}", p - k + 1)
            }
        };
        let body: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", name(a), name(b)))
            .collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

/// A `Q[c]`-linear combination of matchings on `k` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrElement {
    k: usize,
    terms: BTreeMap<BrMatching, Poly>,
}

impl BrElement {
    pub fn zero(k: usize) -> Self {
        BrElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::basis(BrMatching::identity(k))
    }

    pub fn basis(m: BrMatching) -> Self {
        let mut e = BrElement::zero(m.strands());
        e.push(m, Poly::one());
        e
    }

    pub fn scalar(k: usize, p: Poly) -> Self {
        BrElement::identity(k).scale(&p)
    }

    fn push(&mut self, m: BrMatching, p: Poly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Poly::zero);
        *slot += &p;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn strands(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrMatching, &Poly)> {
        self.terms.iter()
    }

    pub fn scale(&self, p: &Poly) -> Self {
        let mut out = BrElement::zero(self.k);
        for (m, q) in &self.terms {
            out.push(m.clone(), q * p);
        }
        out
    }

    pub fn try_add(&self, other: &BrElement) -> Result<BrElement, BrauerError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.push(m.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &BrElement) -> Result<BrElement, BrauerError> {
        self.try_add(&-other)
    }

    /// `self` stacked on top of `other`.
    pub fn try_mul(&self, other: &BrElement) -> Result<BrElement, BrauerError> {
        self.check(other)?;
        let mut out = BrElement::zero(self.k);
        for (ma, pa) in &self.terms {
            for (mb, pb) in &other.terms {
                let (m, loops) = ma.stack(mb);
                out.push(m, pa * pb * Poly::monomial(rat(1), loops as usize));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> BrElement {
        let mut acc = BrElement::identity(self.k);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same strand count");
        }
        acc
    }

    pub fn trace(&self) -> Poly {
        let mut total = Poly::zero();
        for (m, p) in &self.terms {
            total += &(p * Poly::monomial(rat(1), m.trace_loops() as usize));
        }
        total
    }

    fn check(&self, other: &BrElement) -> Result<(), BrauerError> {
        if self.k != other.k {
            Err(BrauerError::StrandMismatch(self.k, other.k))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for BrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, p)| format!("({p})*{m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Neg for &BrElement {
    type Output = BrElement;
    fn neg(self) -> BrElement {
        self.scale(&Poly::from_ints(&[-1]))
    }
}

macro_rules! checked_op {
    ($tr:ident, $method:ident, $via:ident) => {
        impl $tr<&BrElement> for &BrElement {
            type Output = BrElement;
            /// Panics on differing strand counts; use the `try_` form to check.
            fn $method(self, rhs: &BrElement) -> BrElement {
                self.$via(rhs).expect("strand counts must agree")
            }
        }
    };
}
checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

/// Six points of `Br_3` listed around the rectangle: along the bottom from
/// right to left, then along the top from left to right. This is the
/// labeling under which the named elements satisfy the multiplication and
/// trace identities used for the wheel values; the other five such
/// labelings are its conjugates by strand permutations.
const AROUND_3: [usize; 6] = [5, 4, 3, 0, 1, 2];

/// The named `Br_3` matchings as pairs of positions around the rectangle.
const NAMED_3: [(&str, [(usize, usize); 3]); 9] = [
    ("u+", [(0, 1), (2, 3), (4, 5)]),
    ("u-", [(0, 1), (2, 4), (3, 5)]),
    ("x+", [(0, 3), (1, 5), (2, 4)]),
    ("x-", [(0, 4), (1, 5), (2, 3)]),
    ("d", [(0, 1), (2, 3), (4, 5)]),
    ("e", [(0, 5), (1, 2), (3, 4)]),
    ("f", [(0, 3), (1, 2), (4, 5)]),
    ("g", [(0, 1), (2, 5), (3, 4)]),
    ("h", [(0, 3), (1, 4), (2, 5)]),
];

/// The named elements of `Br_2` (`a`, `b`, `1`) and `Br_3`
/// (`u+ u- x+ x- d e f g h`).
pub fn named_elements(k: usize) -> Result<Vec<(&'static str, BrMatching)>, BrauerError> {
    match k {
        2 => Ok(vec![
            ("a", BrMatching::from_pairs(2, &[(0, 1), (2, 3)])?),
            ("b", BrMatching::from_pairs(2, &[(0, 3), (1, 2)])?),
            ("1", BrMatching::identity(2)),
        ]),
        3 => NAMED_3
            .iter()
            .map(|(name, pairs)| {
                let mapped: Vec<(usize, usize)> = pairs
                    .iter()
                    .map(|&(a, b)| (AROUND_3[a], AROUND_3[b]))
                    .collect();
                Ok((*name, BrMatching::from_pairs(3, &mapped)?))
            })
            .collect(),
        _ => Err(BrauerError::NoNamedElements(k)),
    }
}

/// Looks up a named element, including the aliases `u = u+ - u-` and
/// `x = x+ - x-` in `Br_3`.
pub fn named(k: usize, name: &str) -> Result<BrElement, BrauerError> {
    let unknown = || BrauerError::UnknownName {
        name: name.to_string(),
        k,
    };
    let table = named_elements(k).map_err(|_| unknown())?;
    let get = |n: &str| {
        table
            .iter()
            .find(|(m, _)| *m == n)
            .map(|(_, m)| BrElement::basis(m.clone()))
            .ok_or_else(unknown)
    };
    match (k, name) {
        (3, "u") => Ok(&get("u+")? - &get("u-")?),
        (3, "x") => Ok(&get("x+")? - &get("x-")?),
        _ => get(name),
    }
}
