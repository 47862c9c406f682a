//! Rewriting systems for two-sided ideals and a degree-bounded completion procedure.
//!
//! A rule `lhs -> rhs` says the leading word `lhs` may be replaced by `rhs`, every word
//! of which is smaller under the system's [`MonomialOrder`]. Completion resolves overlap
//! and inclusion ambiguities up to a word-length bound; if every ambiguity of every
//! length resolves, the system is certified confluent outright.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::freealg::{GenId, MonomialOrder, NcPoly, OrdWord, Word};
use crate::rat::{self, Rational};

/// `sum c * u * relations[k] * v`, keyed by `(u, k, v)`.
pub type Cofactor = BTreeMap<(Word, usize, Word), Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NcPoly,
    /// Expression of `lhs - rhs` in terms of the input relations, when traced.
    pub cofactor: Option<Cofactor>,
}

impl RewriteRule {
    pub fn poly(&self) -> NcPoly {
        &NcPoly::word(self.lhs.clone()) - &self.rhs
    }
}

/// Degree up to which every ambiguity is known to resolve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    Degree(usize),
    Complete,
}

impl Certificate {
    pub fn covers(&self, len: usize) -> bool {
        match self {
            Certificate::Complete => true,
            Certificate::Degree(d) => *d >= len,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Complete => write!(f, "confluent (all degrees)"),
            Certificate::Degree(d) => write!(f, "confluent to degree {d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CompletionFailure {
    #[error("inconsistent presentation: the identity lies in the ideal")]
    Inconsistent,
    #[error("relation with leading word of degree {len} exceeds degree bound {max_degree}")]
    DegreeExceeded { len: usize, max_degree: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// Two ways of rewriting `witness`: rule `first` at position 0 and rule `second` at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub first: usize,
    pub second: usize,
    pub offset: usize,
    pub witness: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub coeff: Rational,
    pub left: Word,
    pub rule: usize,
    pub right: Word,
}

#[derive(Clone, Debug)]
pub struct CompletionOptions {
    pub max_degree: usize,
    pub trace: bool,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions { max_degree: 12, trace: false }
    }
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
    relations: Vec<NcPoly>,
    certificate: Certificate,
    by_first: Vec<Vec<usize>>,
    has_unit_rule: bool,
}

impl RewriteSystem {
    /// A system with the given rules taken as-is (no completion, no certificate beyond degree 0).
    pub fn from_rules(order: MonomialOrder, rules: Vec<(Word, NcPoly)>) -> Self {
        let rules = rules.into_iter().map(|(lhs, rhs)| RewriteRule { lhs, rhs, cofactor: None }).collect();
        let mut s = RewriteSystem {
            order,
            rules,
            relations: Vec::new(),
            certificate: Certificate::Degree(0),
            by_first: Vec::new(),
            has_unit_rule: false,
        };
        s.reindex();
        s
    }

    /// The system presenting the zero algebra: `1 -> 0`.
    pub fn trivializing(order: MonomialOrder) -> Self {
        let mut s = Self::from_rules(order, vec![(Word::empty(), NcPoly::zero())]);
        s.certificate = Certificate::Complete;
        s
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn max_lhs_len(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    pub fn max_lhs_degree(&self) -> usize {
        self.rules.iter().map(|r| self.order.degree(&r.lhs)).max().unwrap_or(0)
    }

    fn reindex(&mut self) {
        let n = self.order.num_gens();
        self.by_first = vec![Vec::new(); n];
        self.has_unit_rule = false;
        for (i, r) in self.rules.iter().enumerate() {
            match r.lhs.letters().first() {
                Some(g) => self.by_first[g.0 as usize].push(i),
                None => self.has_unit_rule = true,
            }
        }
    }

    /// Leftmost match in `w`, as (rule, position).
    pub fn find_match(&self, w: &Word) -> Option<(usize, usize)> {
        if self.has_unit_rule {
            let i = self.rules.iter().position(|r| r.lhs.is_empty()).unwrap();
            return Some((i, 0));
        }
        let ls = w.letters();
        for pos in 0..ls.len() {
            for &i in &self.by_first[ls[pos].0 as usize] {
                let lhs = self.rules[i].lhs.letters();
                if pos + lhs.len() <= ls.len() && ls[pos..pos + lhs.len()] == *lhs {
                    return Some((i, pos));
                }
            }
        }
        None
    }

    fn all_matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.rules.iter().enumerate() {
            for p in w.occurrences(&r.lhs) {
                out.push((i, p));
            }
        }
        out
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_match(w).is_none()
    }

    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        self.reduce_inner(p, None).0
    }

    /// Reduces and returns the number of single rewriting steps taken.
    pub fn reduce_counted(&self, p: &NcPoly) -> (NcPoly, usize) {
        let mut steps = Vec::new();
        let r = self.reduce_inner(p, Some(&mut steps)).0;
        (r, steps.len())
    }

    /// Reduces and records each step; `p - result = sum coeff * left * rule * right`.
    pub fn reduce_traced(&self, p: &NcPoly) -> (NcPoly, Vec<Step>) {
        let mut steps = Vec::new();
        let r = self.reduce_inner(p, Some(&mut steps)).0;
        (r, steps)
    }

    fn reduce_inner(&self, p: &NcPoly, mut trace: Option<&mut Vec<Step>>) -> (NcPoly, ()) {
        let mut work: BTreeMap<OrdWord, Rational> = BTreeMap::new();
        for (w, c) in p.terms() {
            work.insert(self.order.key(w), c.clone());
        }
        let mut out = NcPoly::zero();
        while let Some((key, c)) = work.pop_last() {
            let w = key.word;
            match self.find_match(&w) {
                None => out.add_term(w, c),
                Some((i, pos)) => {
                    let rule = &self.rules[i];
                    let n = rule.lhs.len();
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(Step { coeff: c.clone(), left: w.slice(0, pos), rule: i, right: w.slice(pos + n, w.len()) });
                    }
                    for (rw, rc) in rule.rhs.terms() {
                        let nw = w.splice(pos, n, rw);
                        let k = self.order.key(&nw);
                        let v = &c * rc;
                        let e = work.entry(k).or_insert_with(rat::zero);
                        *e += v;
                        if e.is_zero() {
                            let k = self.order.key(&nw);
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        (out, ())
    }

    /// Reduces by always rewriting the largest reducible word at its rightmost match.
    pub fn reduce_rightmost(&self, p: &NcPoly) -> NcPoly {
        self.reduce_by(p, |_, cands| cands.len() - 1)
    }

    /// Reduces by rewriting a random reducible word at a random match.
    pub fn reduce_random(&self, p: &NcPoly, rng: &mut ChaCha8Rng) -> NcPoly {
        let mut cur = p.clone();
        loop {
            let reducible: Vec<Word> = cur.terms().map(|(w, _)| w.clone()).filter(|w| !self.is_normal(w)).collect();
            if reducible.is_empty() {
                return cur;
            }
            let w = &reducible[rng.gen_range(0..reducible.len())];
            let ms = self.all_matches(w);
            let (i, pos) = ms[rng.gen_range(0..ms.len())];
            cur = self.rewrite_once(&cur, w, i, pos);
        }
    }

    fn reduce_by(&self, p: &NcPoly, pick: impl Fn(&Word, &[(usize, usize)]) -> usize) -> NcPoly {
        let mut cur = p.clone();
        loop {
            let target = cur
                .terms()
                .map(|(w, _)| w.clone())
                .filter(|w| !self.is_normal(w))
                .max_by(|a, b| self.order.cmp(a, b));
            let Some(w) = target else { return cur };
            let mut ms = self.all_matches(&w);
            ms.sort_by_key(|&(i, p)| (p, i));
            let (i, pos) = ms[pick(&w, &ms)];
            cur = self.rewrite_once(&cur, &w, i, pos);
        }
    }

    fn rewrite_once(&self, p: &NcPoly, w: &Word, rule: usize, pos: usize) -> NcPoly {
        let c = p.coeff(w);
        let r = &self.rules[rule];
        let mut out = p.clone();
        out.add_term(w.clone(), -c.clone());
        for (rw, rc) in r.rhs.terms() {
            out.add_term(w.splice(pos, r.lhs.len(), rw), &c * rc);
        }
        out
    }

    pub fn find_ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            let a = ri.lhs.letters();
            for (j, rj) in self.rules.iter().enumerate() {
                let b = rj.lhs.letters();
                // suffix of a equals prefix of b
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Overlap,
                            first: i,
                            second: j,
                            offset: a.len() - k,
                            witness: ri.lhs.concat(&Word(b[k..].to_vec())),
                        });
                    }
                }
                if i != j && !b.is_empty() {
                    for p in ri.lhs.occurrences(&rj.lhs) {
                        out.push(Ambiguity { kind: AmbiguityKind::Inclusion, first: i, second: j, offset: p, witness: ri.lhs.clone() });
                    }
                }
            }
        }
        out.sort_by_key(|a| self.order.degree(&a.witness));
        out
    }

    /// Difference of the two one-step rewrites of the witness, with its cofactor if traced.
    fn s_poly(&self, a: &Ambiguity) -> (NcPoly, Option<Cofactor>) {
        let ri = &self.rules[a.first];
        let rj = &self.rules[a.second];
        let (u, v) = match a.kind {
            AmbiguityKind::Overlap => (a.witness.slice(0, a.offset), Word::empty()),
            AmbiguityKind::Inclusion => (a.witness.slice(0, a.offset), a.witness.slice(a.offset + rj.lhs.len(), a.witness.len())),
        };
        let t = match a.kind {
            AmbiguityKind::Overlap => a.witness.slice(ri.lhs.len(), a.witness.len()),
            AmbiguityKind::Inclusion => Word::empty(),
        };
        // witness = lhs_i * t = u * lhs_j * v
        let s = &rj.poly().sandwich(&u, &v) - &ri.poly().sandwich(&Word::empty(), &t);
        let cof = match (&ri.cofactor, &rj.cofactor) {
            (Some(ci), Some(cj)) => {
                let mut c = Cofactor::new();
                cof_add(&mut c, &rat::one(), &u, cj, &v);
                cof_add(&mut c, &-rat::one(), &Word::empty(), ci, &t);
                Some(c)
            }
            _ => None,
        };
        (s, cof)
    }

    pub fn resolves(&self, a: &Ambiguity) -> bool {
        self.reduce(&self.s_poly(a).0).is_zero()
    }

    /// Expands a cofactor against the stored input relations.
    pub fn expand(&self, cof: &Cofactor) -> NcPoly {
        let mut out = NcPoly::zero();
        for ((u, k, v), c) in cof {
            out = &out + &self.relations[*k].sandwich(u, v).scale(c);
        }
        out
    }

    /// Cofactor of `p - reduce(p)` from a trace; requires a traced completion.
    pub fn trace_cofactor(&self, steps: &[Step]) -> Option<Cofactor> {
        let mut acc = Cofactor::new();
        for s in steps {
            let rc = self.rules[s.rule].cofactor.as_ref()?;
            cof_add(&mut acc, &s.coeff, &s.left, rc, &s.right);
        }
        Some(acc)
    }

    fn insert(
        &mut self,
        p: NcPoly,
        cof: Option<Cofactor>,
        queue: &mut Vec<(NcPoly, Option<Cofactor>)>,
        max_degree: usize,
    ) -> Result<bool, CompletionFailure> {
        let (r, steps) = self.reduce_traced(&p);
        if r.is_zero() {
            return Ok(false);
        }
        let mut cof = cof;
        if let Some(c) = cof.as_mut() {
            for s in &steps {
                let rc = self.rules[s.rule].cofactor.as_ref().expect("traced");
                cof_add(c, &-s.coeff.clone(), &s.left, rc, &s.right);
            }
        }
        let (lw, lc) = r.leading(&self.order).map(|(w, c)| (w.clone(), c.clone())).unwrap();
        if lw.is_empty() {
            return Err(CompletionFailure::Inconsistent);
        }
        let deg = self.order.degree(&lw);
        if deg > max_degree {
            return Err(CompletionFailure::DegreeExceeded { len: deg, max_degree });
        }
        let inv = lc.recip();
        let normalized = r.scale(&inv);
        let rhs = &NcPoly::word(lw.clone()) - &normalized;
        if let Some(c) = cof.as_mut() {
            for v in c.values_mut() {
                *v *= &inv;
            }
        }
        // drop rules whose lhs contains the new leading word; their content goes back to the queue
        let mut kept = Vec::with_capacity(self.rules.len() + 1);
        for rule in std::mem::take(&mut self.rules) {
            if rule.lhs.contains(&lw) {
                queue.push((rule.poly(), rule.cofactor));
            } else {
                kept.push(rule);
            }
        }
        kept.push(RewriteRule { lhs: lw, rhs, cofactor: cof });
        self.rules = kept;
        self.reindex();
        // interreduce right-hand sides
        for i in 0..self.rules.len() {
            let (nr, steps) = self.reduce_traced(&self.rules[i].rhs);
            if steps.is_empty() {
                continue;
            }
            let mut newcof = self.rules[i].cofactor.clone();
            if let Some(c) = newcof.as_mut() {
                for s in &steps {
                    let rc = self.rules[s.rule].cofactor.as_ref().expect("traced").clone();
                    cof_add(c, &s.coeff, &s.left, &rc, &s.right);
                }
            }
            self.rules[i].rhs = nr;
            self.rules[i].cofactor = newcof;
        }
        Ok(true)
    }
}

fn cof_add(acc: &mut Cofactor, c: &Rational, u: &Word, src: &Cofactor, v: &Word) {
    if c.is_zero() {
        return;
    }
    for ((a, k, b), x) in src {
        let key = (u.concat(a), *k, b.concat(v));
        let e = acc.entry(key.clone()).or_insert_with(rat::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(&key);
        }
    }
}

type AmbKey = (Word, Word, AmbiguityKind, usize);

fn amb_key(sys: &RewriteSystem, a: &Ambiguity) -> AmbKey {
    (sys.rules[a.first].lhs.clone(), sys.rules[a.second].lhs.clone(), a.kind, a.offset)
}

pub fn complete(relations: &[NcPoly], order: &MonomialOrder, max_degree: usize) -> Result<RewriteSystem, CompletionFailure> {
    complete_with(relations, order, &CompletionOptions { max_degree, trace: false })
}

pub fn complete_with(relations: &[NcPoly], order: &MonomialOrder, opts: &CompletionOptions) -> Result<RewriteSystem, CompletionFailure> {
    let max_degree = opts.max_degree;
    let mut sys = RewriteSystem::from_rules(order.clone(), Vec::new());
    sys.relations = relations.to_vec();
    let mut queue: Vec<(NcPoly, Option<Cofactor>)> = relations
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let cof = opts.trace.then(|| {
                let mut c = Cofactor::new();
                c.insert((Word::empty(), k, Word::empty()), rat::one());
                c
            });
            (p.clone(), cof)
        })
        .collect();
    // smallest relations first keeps interreduction cheap
    queue.sort_by(|a, b| order.cmp(&b.0.leading(order).map(|x| x.0.clone()).unwrap_or_default(), &a.0.leading(order).map(|x| x.0.clone()).unwrap_or_default()));
    let mut processed: BTreeSet<AmbKey> = BTreeSet::new();
    loop {
        while let Some((p, c)) = queue.pop() {
            sys.insert(p, c, &mut queue, max_degree)?;
        }
        let ambs: Vec<Ambiguity> = sys
            .find_ambiguities()
            .into_iter()
            .filter(|a| order.degree(&a.witness) <= max_degree && !processed.contains(&amb_key(&sys, a)))
            .collect();
        if ambs.is_empty() {
            // confirm against the final rule set; stale keys can hide a changed rule
            let mut pending = Vec::new();
            for a in sys.find_ambiguities().into_iter().filter(|a| order.degree(&a.witness) <= max_degree) {
                let (s, c) = sys.s_poly(&a);
                if !sys.reduce(&s).is_zero() {
                    pending.push((s, c));
                }
            }
            if pending.is_empty() {
                break;
            }
            queue.extend(pending);
            continue;
        }
        let d = order.degree(&ambs[0].witness);
        let mut found = Vec::new();
        for a in ambs.iter().take_while(|a| order.degree(&a.witness) == d) {
            processed.insert(amb_key(&sys, a));
            let (s, c) = sys.s_poly(a);
            if !sys.reduce(&s).is_zero() {
                found.push((s, c));
            }
        }
        found.reverse();
        queue.extend(found);
    }
    let all_resolve = sys.find_ambiguities().iter().all(|a| sys.resolves(a));
    sys.certificate = if all_resolve { Certificate::Complete } else { Certificate::Degree(max_degree) };
    sys.rules.sort_by(|a, b| order.cmp(&a.lhs, &b.lhs));
    sys.reindex();
    Ok(sys)
}

/// A pair of reduction strategies that disagree on the same input.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub input: NcPoly,
    pub left: NcPoly,
    pub right: NcPoly,
}

#[derive(Clone, Debug)]
pub enum FuzzOutcome {
    Pass { trials: usize },
    Counterexample(Counterexample),
}

/// Random word of length at most `max_len`.
pub fn random_word(rng: &mut ChaCha8Rng, ngens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| GenId(rng.gen_range(0..ngens as u32))).collect())
}

/// Random polynomial with small rational coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, ngens: usize, max_len: usize, max_terms: usize) -> NcPoly {
    let mut p = NcPoly::zero();
    let n = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..n {
        let num = rng.gen_range(-6i64..=6);
        let den = rng.gen_range(1i64..=4);
        p.add_term(random_word(rng, ngens, max_len), rat::frac(num, den));
    }
    p
}

/// Compares leftmost, rightmost and random reduction on ambiguity witnesses and random inputs.
pub fn confluence_fuzz(sys: &RewriteSystem, trials: usize, seed: u64) -> FuzzOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs: Vec<NcPoly> = sys.find_ambiguities().into_iter().map(|a| NcPoly::word(a.witness)).collect();
    let ngens = sys.order.num_gens().max(1);
    let max_len = (sys.max_lhs_len() * 2).max(3);
    while inputs.len() < trials {
        inputs.push(random_poly(&mut rng, ngens, max_len, 4));
    }
    for p in inputs.into_iter().take(trials.max(1)) {
        let a = sys.reduce(&p);
        let b = sys.reduce_rightmost(&p);
        if a != b {
            return FuzzOutcome::Counterexample(Counterexample { input: p, left: a, right: b });
        }
        let c = sys.reduce_random(&p, &mut rng);
        if a != c {
            return FuzzOutcome::Counterexample(Counterexample { input: p, left: a, right: c });
        }
    }
    FuzzOutcome::Pass { trials }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u32) -> NcPoly {
        NcPoly::gen(GenId(i))
    }

    #[test]
    fn commutative_polynomial_ring() {
        // x y - y x with x > y gives x y -> y x only
        let o = MonomialOrder::natural(2);
        let rel = &(&g(0) * &g(1)) - &(&g(1) * &g(0));
        let s = complete(&[rel], &o, 12).unwrap();
        assert_eq!(s.rules().len(), 1);
        assert_eq!(s.certificate(), Certificate::Complete);
        let w = &(&g(0) * &g(1)) * &g(1);
        assert_eq!(s.reduce(&w), NcPoly::word(Word::from_ids(&[1, 1, 0])));
    }

    #[test]
    fn inconsistent_presentation_reported() {
        // x y - y x - 1 together with x = 0 forces 1 = 0
        let o = MonomialOrder::natural(2);
        let rels = vec![&(&(&g(0) * &g(1)) - &(&g(1) * &g(0))) - &NcPoly::one(), g(0)];
        assert_eq!(complete(&rels, &o, 12).unwrap_err(), CompletionFailure::Inconsistent);
    }

    #[test]
    fn degree_bound_respected() {
        let o = MonomialOrder::natural(1);
        let rel = &(&(&g(0) * &g(0)) * &g(0)) - &g(0);
        assert!(matches!(complete(&[rel], &o, 2), Err(CompletionFailure::DegreeExceeded { len: 3, max_degree: 2 })));
    }

    #[test]
    fn non_confluent_pair_is_caught() {
        // e h -> -e and h h -> h disagree on e h h
        let o = MonomialOrder::natural(2);
        let eh = Word::from_ids(&[0, 1]);
        let hh = Word::from_ids(&[1, 1]);
        let s = RewriteSystem::from_rules(o, vec![(eh, -g(0)), (hh, g(1))]);
        match confluence_fuzz(&s, 50, 1) {
            FuzzOutcome::Counterexample(c) => {
                assert_eq!(c.input, NcPoly::word(Word::from_ids(&[0, 1, 1])));
                assert_eq!(c.left, -c.right.clone());
            }
            FuzzOutcome::Pass { .. } => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn traced_cofactors_expand_to_rules() {
        let o = MonomialOrder::natural(2);
        let rels = vec![&(&g(0) * &g(1)) + &g(0), &(&g(1) * &g(1)) - &g(1)];
        let s = complete_with(&rels, &o, &CompletionOptions { max_degree: 8, trace: true }).unwrap();
        for r in s.rules() {
            assert_eq!(s.expand(r.cofactor.as_ref().unwrap()), r.poly());
        }
        let p = NcPoly::word(Word::from_ids(&[0, 1, 1, 0, 1]));
        let (nf, steps) = s.reduce_traced(&p);
        let cof = s.trace_cofactor(&steps).unwrap();
        assert_eq!(&p - &nf, s.expand(&cof));
        assert!(nf.terms().all(|(w, _)| s.is_normal(w)));
    }
}
