//! Words and noncommutative polynomials over a finite alphabet of generators.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rat::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId(pub u32);

/// A finite word in the generators; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        Word(ids.iter().map(|&i| GenId(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// First position at which `pat` occurs as a contiguous subword.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&i| self.0[i..i + pat.len()] == pat.0[..])
    }

    pub fn occurrences(&self, pat: &Word) -> Vec<usize> {
        if pat.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - pat.len()).filter(|&i| self.0[i..i + pat.len()] == pat.0[..]).collect()
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    /// Replace `len` letters at `pos` by `mid`.
    pub fn splice(&self, pos: usize, len: usize, mid: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + mid.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|g| names[g.0 as usize].as_str()).collect::<Vec<_>>().join(" ")
    }
}

/// Degree-lexicographic order, ties broken letterwise by a precedence on generators.
/// Generators may carry positive integer weights; the degree of a word is then the sum
/// of its letters' weights. With all weights 1 this is plain deglex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<u32>,
    weight: Vec<u32>,
}

impl MonomialOrder {
    /// `precedence` lists every generator exactly once, largest first.
    pub fn deglex(precedence: &[GenId]) -> Self {
        let n = precedence.len();
        let mut rank = vec![u32::MAX; n];
        for (i, g) in precedence.iter().enumerate() {
            assert!((g.0 as usize) < n && rank[g.0 as usize] == u32::MAX, "precedence must be a permutation");
            rank[g.0 as usize] = (n - 1 - i) as u32;
        }
        MonomialOrder { rank, weight: vec![1; n] }
    }

    /// Weighted variant; `weights[g]` is the weight of generator `g`.
    pub fn weighted(precedence: &[GenId], weights: &[u32]) -> Self {
        assert_eq!(weights.len(), precedence.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let mut o = Self::deglex(precedence);
        o.weight = weights.to_vec();
        o
    }

    pub fn weights(&self) -> &[u32] {
        &self.weight
    }

    pub fn max_weight(&self) -> usize {
        self.weight.iter().copied().max().unwrap_or(1) as usize
    }

    pub fn is_unweighted(&self) -> bool {
        self.weight.iter().all(|&w| w == 1)
    }

    /// Weighted length of a word.
    pub fn degree(&self, w: &Word) -> usize {
        w.0.iter().map(|g| self.weight[g.0 as usize] as usize).sum()
    }

    /// Generator 0 largest, then 1, and so on.
    pub fn natural(n: usize) -> Self {
        let p: Vec<GenId> = (0..n as u32).map(GenId).collect();
        Self::deglex(&p)
    }

    pub fn num_gens(&self) -> usize {
        self.rank.len()
    }

    pub fn precedence(&self) -> Vec<GenId> {
        let mut p: Vec<GenId> = (0..self.rank.len() as u32).map(GenId).collect();
        p.sort_by(|a, b| self.rank[b.0 as usize].cmp(&self.rank[a.0 as usize]));
        p
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| {
            let ra = a.0.iter().map(|g| self.rank[g.0 as usize]);
            let rb = b.0.iter().map(|g| self.rank[g.0 as usize]);
            ra.cmp(rb)
        })
    }

    pub fn key(&self, w: &Word) -> OrdWord {
        OrdWord { degree: self.degree(w), ranks: w.0.iter().map(|g| self.rank[g.0 as usize]).collect(), word: w.clone() }
    }
}

/// A word bundled with its rank vector so that `Ord` follows a [`MonomialOrder`].
#[derive(Clone, Debug)]
pub struct OrdWord {
    degree: usize,
    ranks: Vec<u32>,
    pub word: Word,
}

impl PartialEq for OrdWord {
    fn eq(&self, other: &Self) -> bool {
        self.ranks == other.ranks
    }
}
impl Eq for OrdWord {}
impl PartialOrd for OrdWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for OrdWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.ranks.cmp(&other.ranks))
    }
}

/// Finite linear combination of words with rational coefficients; no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(rat::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(rat::one(), w)
    }

    pub fn gen(g: GenId) -> Self {
        Self::word(Word::letter(g))
    }

    pub fn monomial(c: Rational, w: Word) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(rat::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// `u * self * v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, a)| (u.concat(w).concat(v), a.clone())).collect() }
    }

    /// Largest word under `order` with its coefficient.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Word, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Length of the longest word, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Largest generator index appearing plus one.
    pub fn max_gen(&self) -> usize {
        self.terms.keys().flat_map(|w| w.0.iter()).map(|g| g.0 as usize + 1).max().unwrap_or(0)
    }

    /// Renders with generator names, terms in decreasing `order` (or word order if none).
    pub fn render(&self, names: &[String], order: Option<&MonomialOrder>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        match order {
            Some(o) => ts.sort_by(|a, b| o.cmp(b.0, a.0)),
            None => ts.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0))),
        }
        let mut out = String::new();
        for (i, (w, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&rat::fmt(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&rat::fmt(&a));
                    out.push(' ');
                }
                out.push_str(&w.render(names));
            }
        }
        out
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.max_gen();
        let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        f.write_str(&self.render(&names, None))
    }
}

impl Add<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect() }
    }
}

impl Mul<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: &NcPoly) -> NcPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

/// Incrementally maintained linear span of polynomials, in echelon form keyed by leading words.
#[derive(Clone, Debug)]
pub struct PolySpan {
    order: MonomialOrder,
    pivots: BTreeMap<OrdWord, NcPoly>,
}

impl PolySpan {
    pub fn new(order: &MonomialOrder) -> Self {
        PolySpan { order: order.clone(), pivots: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &NcPoly> {
        self.pivots.values()
    }

    /// `p` minus its projection along the pivots; zero iff `p` lies in the span.
    pub fn residue(&self, p: &NcPoly) -> NcPoly {
        let mut r = p.clone();
        let mut keys: Vec<OrdWord> = r.terms().map(|(w, _)| self.order.key(w)).collect();
        keys.sort();
        // walk from the largest word down; pivot polynomials only add smaller words
        while let Some(k) = keys.pop() {
            let c = r.coeff(&k.word);
            if c.is_zero() {
                continue;
            }
            if let Some(piv) = self.pivots.get(&k) {
                for (w, _) in piv.terms() {
                    if *w != k.word && r.coeff(w).is_zero() {
                        let kw = self.order.key(w);
                        let pos = keys.binary_search(&kw).unwrap_or_else(|e| e);
                        keys.insert(pos, kw);
                    }
                }
                r = &r - &piv.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, p: &NcPoly) -> bool {
        self.residue(p).is_zero()
    }

    /// Adds `p`; returns whether the span grew.
    pub fn insert(&mut self, p: &NcPoly) -> bool {
        let r = self.residue(p);
        let Some((w, c)) = r.leading(&self.order) else { return false };
        let w = w.clone();
        let inv = c.recip();
        self.pivots.insert(self.order.key(&w), r.scale(&inv));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn names() -> Vec<String> {
        ["e", "f", "h"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn deglex_with_precedence() {
        // h > f > e
        let o = MonomialOrder::deglex(&[GenId(2), GenId(1), GenId(0)]);
        let hh = Word::from_ids(&[2, 2]);
        let fe = Word::from_ids(&[1, 0]);
        assert_eq!(o.cmp(&hh, &fe), Ordering::Greater);
        assert_eq!(o.cmp(&Word::from_ids(&[0]), &fe), Ordering::Less);
        assert_eq!(o.key(&hh).cmp(&o.key(&fe)), Ordering::Greater);
        assert_eq!(o.precedence(), vec![GenId(2), GenId(1), GenId(0)]);
    }

    #[test]
    fn weights_dominate_precedence() {
        let o = MonomialOrder::weighted(&[GenId(0), GenId(1)], &[1, 2]);
        // x x has weight 2, y alone also 2 but x > y by precedence
        assert_eq!(o.cmp(&Word::from_ids(&[0, 0]), &Word::from_ids(&[1])), Ordering::Greater);
        assert_eq!(o.cmp(&Word::from_ids(&[0, 0, 0]), &Word::from_ids(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&Word::from_ids(&[0, 0]), &Word::from_ids(&[1, 0])), Ordering::Less);
        assert_eq!(o.degree(&Word::from_ids(&[1, 0])), 3);
    }

    #[test]
    fn arithmetic_cancels() {
        let e = NcPoly::gen(GenId(0));
        let h = NcPoly::gen(GenId(2));
        let c = &(&e * &h) - &(&h * &e);
        assert_eq!(c.num_terms(), 2);
        assert!((&c - &c).is_zero());
        let p = &c.scale(&frac(1, 2)) + &NcPoly::constant(int(3));
        assert_eq!(p.render(&names(), None), "1/2 e h - 1/2 h e + 3");
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn span_tracks_dependencies() {
        let o = MonomialOrder::natural(2);
        let x = NcPoly::gen(GenId(0));
        let y = NcPoly::gen(GenId(1));
        let mut s = PolySpan::new(&o);
        assert!(s.insert(&(&x + &y)));
        assert!(s.insert(&(&x - &y)));
        assert!(!s.insert(&x));
        assert!(s.contains(&y.scale(&int(3))));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn word_search() {
        let w = Word::from_ids(&[0, 2, 2, 1]);
        assert_eq!(w.find(&Word::from_ids(&[2, 2])), Some(1));
        assert_eq!(w.occurrences(&Word::from_ids(&[2])), vec![1, 2]);
        assert_eq!(w.splice(1, 2, &Word::from_ids(&[0])), Word::from_ids(&[0, 0, 1]));
    }
}
