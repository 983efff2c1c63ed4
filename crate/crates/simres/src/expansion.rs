//! Membership, enumeration and witnesses for the expansion set of a monomial
//! ideal, complex expansion (pendant vertex and relabeling), and the
//! predicted effect of an expansion on betti tables and homological
//! invariants.
//!
//! For a base monomial `g` dividing `c`, the expansion set consists of the
//! exponent vectors `d ≠ 0` with `d_i ≥ c_i` wherever `c_i > g_i` and
//! `d_i < c_i` for at least one other index. Equivalently, its members are
//! exactly `m = n·w/v` for a witness pair `(v, w)` with `v ≠ 1`, `v` and `w`
//! coprime, `v` coprime to `n/g`, and `v ≠ n` when `w = 1`. For an ideal the
//! base is `gcd(I)` and `n` ranges over the minimal generators.
//!
//! Adjoining a member changes the betti table in a fixed, local way: `β_1`
//! gains the new generator, and when `m` does not divide `n` the pair
//! `(β_1, β_2)` each grow by one, with the second increment landing at the
//! multidegree `lcm(m, n)`. Everything else is copied. That prediction, and
//! its companions for scaling and iterated growth, is what the oracle-backed
//! test suites verify.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::RngCore;

use crate::complex::{LabeledComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::{minimal_generators, LcmLattice, Monomial, MonomialIdeal, Nat};
use crate::resolution::{BettiTable, InvariantSummary};
use crate::sampling;

/// The membership test data for one expansion set: the base `g`, the
/// generator `c`, and the split of the variable indices into those where
/// `d_i ≥ c_i` is forced (`required`) and the rest, where some strict drop
/// `d_i < c_i` must occur (`droppable`).
#[derive(Clone, Debug)]
pub struct CSpec {
    base: Monomial,
    generator: Monomial,
    required: Vec<usize>,
    droppable: Vec<usize>,
}

/// Why a candidate fails the definitional membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonMemberReason {
    /// The unit monomial is never a member.
    UnitCandidate,
    /// `d_i < c_i` at an index where `c_i > g_i` forces `d_i ≥ c_i`.
    RequiredIndexDeficit { var: usize },
    /// No index outside the forced set has `d_i < c_i`.
    NoDroppableIndex,
}

/// Outcome of a membership test, with the witness pair on success.
#[derive(Clone, Debug)]
pub enum Membership {
    Member { v: Monomial, w: Monomial },
    NotMember(NonMemberReason),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

impl CSpec {
    /// The expansion set of an ideal at a minimal generator `n`, with base
    /// `gcd(I)`.
    pub fn for_ideal(ideal: &MonomialIdeal, n: &Monomial) -> Result<CSpec> {
        if !ideal.is_min_generator(n) {
            return Err(Error::InvalidInput(format!(
                "{n} is not a minimal generator of {ideal}"
            )));
        }
        Self::for_base(&ideal.gcd(), n)
    }

    /// The expansion set for an arbitrary base `u` dividing `n`.
    pub fn for_base(u: &Monomial, n: &Monomial) -> Result<CSpec> {
        if !u.divides(n) {
            return Err(Error::InvalidInput(format!("base {u} does not divide {n}")));
        }
        let nvars = n.context().num_vars();
        let (mut required, mut droppable) = (Vec::new(), Vec::new());
        for i in 0..nvars {
            if n.exponent(i) > u.exponent(i) {
                required.push(i);
            } else {
                droppable.push(i);
            }
        }
        Ok(CSpec {
            base: u.clone(),
            generator: n.clone(),
            required,
            droppable,
        })
    }

    pub fn base(&self) -> &Monomial {
        &self.base
    }

    pub fn generator(&self) -> &Monomial {
        &self.generator
    }

    pub fn required(&self) -> &[usize] {
        &self.required
    }

    pub fn droppable(&self) -> &[usize] {
        &self.droppable
    }

    /// Definitional membership with the failure reason or witness pair.
    pub fn verdict(&self, m: &Monomial) -> Membership {
        if m.is_unit() {
            return Membership::NotMember(NonMemberReason::UnitCandidate);
        }
        for &i in &self.required {
            if m.exponent(i) < self.generator.exponent(i) {
                return Membership::NotMember(NonMemberReason::RequiredIndexDeficit { var: i });
            }
        }
        if !self
            .droppable
            .iter()
            .any(|&i| m.exponent(i) < self.generator.exponent(i))
        {
            return Membership::NotMember(NonMemberReason::NoDroppableIndex);
        }
        let (v, w) = self.witness_pair(m);
        Membership::Member { v, w }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.verdict(m).is_member()
    }

    /// `v` collects the drops `max(c_i - d_i, 0)`, `w` the raises
    /// `max(d_i - c_i, 0)`; then `m·v = n·w`.
    fn witness_pair(&self, m: &Monomial) -> (Monomial, Monomial) {
        let ctx = self.generator.context();
        let n = self.generator.exponents();
        let d = m.exponents();
        let mut v = vec![Nat::zero(); n.len()];
        let mut w = vec![Nat::zero(); n.len()];
        for i in 0..n.len() {
            if n[i] > d[i] {
                v[i] = &n[i] - &d[i];
            } else {
                w[i] = &d[i] - &n[i];
            }
        }
        (
            ctx.monomial_from_exponents(v).expect("same length"),
            ctx.monomial_from_exponents(w).expect("same length"),
        )
    }

    /// Emptiness criterion: the set is nonempty iff some index has
    /// `c_i = g_i > 0`, and in a one-variable ring additionally `c ≠ (1)`.
    pub fn is_empty(&self) -> bool {
        let nvars = self.generator.context().num_vars();
        !self.droppable.iter().any(|&i| {
            let c = self.generator.exponent(i);
            !c.is_zero() && (nvars > 1 || *c > Nat::one())
        })
    }

    /// Every member of total degree at most `max_degree`, in graded-lex
    /// order. The set is infinite whenever nonempty (in two or more
    /// variables), so the bound is mandatory.
    pub fn enumerate(&self, max_degree: u64) -> Vec<Monomial> {
        let nvars = self.generator.context().num_vars();
        let lower: Vec<u64> = (0..nvars)
            .map(|i| {
                if self.required.contains(&i) {
                    nat_to_u64_or(self.generator.exponent(i), max_degree + 1)
                } else {
                    0
                }
            })
            .collect();
        if lower.iter().sum::<u64>() > max_degree {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = vec![0u64; nvars];
        self.enumerate_rec(0, max_degree, &lower, &mut current, &mut out);
        out.sort();
        out
    }

    fn enumerate_rec(
        &self,
        var: usize,
        budget: u64,
        lower: &[u64],
        current: &mut Vec<u64>,
        out: &mut Vec<Monomial>,
    ) {
        let nvars = current.len();
        if var == nvars {
            let ctx = self.generator.context();
            let pairs: Vec<(usize, u64)> = current.iter().enumerate().map(|(i, &e)| (i, e)).collect();
            let m = ctx.monomial(&pairs);
            if self.contains(&m) {
                out.push(m);
            }
            return;
        }
        let rest: u64 = lower[var + 1..].iter().sum();
        if budget < rest + lower[var] {
            return;
        }
        for e in lower[var]..=(budget - rest) {
            current[var] = e;
            self.enumerate_rec(var + 1, budget - e, lower, current, out);
        }
        current[var] = 0;
    }
}

fn nat_to_u64_or(n: &Nat, fallback: u64) -> u64 {
    u64::try_from(n).unwrap_or(fallback)
}

/// The certificate that `m` belongs to the expansion set of `I` at `n`:
/// `m·v = n·w` with all the coprimality and gcd side conditions validated.
#[derive(Clone, Debug)]
pub struct ExpansionWitness {
    pub ideal: MonomialIdeal,
    pub n: Monomial,
    pub m: Monomial,
    pub v: Monomial,
    pub w: Monomial,
}

impl ExpansionWitness {
    fn validate(&self) -> Result<()> {
        let gcd = self.ideal.gcd();
        let mv = self.m.mul(&self.v)?;
        let nw = self.n.mul(&self.w)?;
        let mut failures = Vec::new();
        if mv != nw {
            failures.push("m·v = n·w".to_string());
        }
        if self.v.is_unit() {
            failures.push("v ≠ 1".to_string());
        }
        if self.w.is_unit() && self.v == self.n {
            failures.push("w = 1 forces v ≠ n".to_string());
        }
        if !self.v.divides(&self.n) {
            failures.push("v | n".to_string());
        } else {
            let n_over_gcd = self.n.div(&gcd)?;
            if !self.v.is_coprime_with(&n_over_gcd) {
                failures.push("gcd(v, n/gcd(I)) = 1".to_string());
            }
            let n_over_v = self.n.div(&self.v)?;
            if gcd.lcm(&n_over_v)? != self.n {
                failures.push("lcm(gcd(I), n/v) = n".to_string());
            }
        }
        if !self.v.is_coprime_with(&self.w) {
            failures.push("gcd(v, w) = 1".to_string());
        }
        if failures.is_empty() {
            Ok(())
        } else {
            Err(Error::TheoremViolation(format!(
                "witness invariants failed for m={}, n={}, v={}, w={}: {}",
                self.m,
                self.n,
                self.v,
                self.w,
                failures.join("; ")
            )))
        }
    }
}

/// Definitional membership of `m` in the expansion set of `I` at the minimal
/// generator `n`.
pub fn c_contains(ideal: &MonomialIdeal, n: &Monomial, m: &Monomial) -> Result<bool> {
    Ok(CSpec::for_ideal(ideal, n)?.contains(m))
}

/// Membership with the failure reason or witness pair attached.
pub fn membership(ideal: &MonomialIdeal, n: &Monomial, m: &Monomial) -> Result<Membership> {
    Ok(CSpec::for_ideal(ideal, n)?.verdict(m))
}

/// The divisibility characterization: `m` is a member iff every element of
/// the lcm closure of `mingens(I) ∪ {m}` that is a proper multiple of `m` is
/// also a multiple of `n`. Requires `m ∉ I`; must agree with [`c_contains`]
/// on that domain.
pub fn c_contains_via_divisibility(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
    cap: usize,
) -> Result<bool> {
    if !ideal.is_min_generator(n) {
        return Err(Error::InvalidInput(format!(
            "{n} is not a minimal generator of {ideal}"
        )));
    }
    if m.is_unit() {
        return Err(Error::InvalidInput("candidate must be a nonunit monomial".into()));
    }
    if ideal.contains(m) {
        return Err(Error::InvalidInput(format!(
            "divisibility characterization needs m ∉ I, but {m} ∈ {ideal}"
        )));
    }
    let mut atoms = ideal.mingens().to_vec();
    atoms.push(m.clone());
    let closure = LcmLattice::from_atoms(&atoms, cap)?;
    let ok = closure
        .nonunit_elements()
        .all(|u| !(m.divides(u) && u != m) || n.divides(u));
    Ok(ok)
}

/// Splits a member as `m = n·w/v` with `v_i = max(c_i - d_i, 0)` and
/// `w_i = max(d_i - c_i, 0)`, and validates every witness invariant.
pub fn decompose_witness(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
) -> Result<ExpansionWitness> {
    match membership(ideal, n, m)? {
        Membership::Member { v, w } => {
            let witness = ExpansionWitness {
                ideal: ideal.clone(),
                n: n.clone(),
                m: m.clone(),
                v,
                w,
            };
            witness.validate()?;
            Ok(witness)
        }
        Membership::NotMember(reason) => Err(Error::Precondition(format!(
            "{m} is not in the expansion set of {ideal} at {n}: {reason:?}"
        ))),
    }
}

/// All members of degree at most `max_degree`.
pub fn enumerate_c(
    ideal: &MonomialIdeal,
    n: &Monomial,
    max_degree: u64,
) -> Result<Vec<Monomial>> {
    Ok(CSpec::for_ideal(ideal, n)?.enumerate(max_degree))
}

/// Containment helper for the nested-base property: given a divisibility
/// chain `u | m | n` and a member `h` of the set over base `u` at `n`,
/// reports whether `h` also lies in the set over base `m` at `n` and in the
/// set over base `u` at `m`. Both are always true.
pub fn containment_check(
    u: &Monomial,
    m: &Monomial,
    n: &Monomial,
    h: &Monomial,
) -> Result<(bool, bool)> {
    if !u.divides(m) || !m.divides(n) {
        return Err(Error::InvalidInput(format!(
            "broken divisibility chain: need {u} | {m} | {n}"
        )));
    }
    let over_u_at_n = CSpec::for_base(u, n)?;
    if !over_u_at_n.contains(h) {
        return Err(Error::Precondition(format!(
            "{h} is not a member over base {u} at {n}"
        )));
    }
    let in_larger_base = CSpec::for_base(m, n)?.contains(h);
    let at_smaller_generator = CSpec::for_base(u, m)?.contains(h);
    Ok((in_larger_base, at_smaller_generator))
}

fn ideal_of_labels(complex: &LabeledComplex) -> Result<MonomialIdeal> {
    MonomialIdeal::new(complex.present_labels())
}

fn fresh_vertex_name(existing: &[String], base: String) -> String {
    let mut name = base;
    while existing.iter().any(|n| *n == name) {
        name.push('\'');
    }
    name
}

/// Attaches a fresh vertex labeled `m` by an edge to the vertex carrying
/// `n`. The new complex supports a (minimal) free resolution of `I + (m)`
/// exactly when `m` is a member of the expansion set at `n` and the old
/// complex supports one of `I`. For `m | n` the right operation is
/// [`relabel_vertex`].
pub fn expand_pendant(
    complex: &LabeledComplex,
    n_vertex: usize,
    m: &Monomial,
) -> Result<LabeledComplex> {
    let present = complex.complex().vertices();
    if !present.contains(&n_vertex) {
        return Err(Error::InvalidInput(format!(
            "vertex {n_vertex} is not in the complex"
        )));
    }
    let n = complex.label(n_vertex).clone();
    if m.divides(&n) {
        return Err(Error::WrongOperation(format!(
            "{m} divides {n}; a dividing member replaces the label (relabel_vertex), it does not add a pendant"
        )));
    }
    let labels_ideal = ideal_of_labels(complex)?;
    if labels_ideal.contains(m) {
        return Err(Error::Precondition(format!(
            "{m} already lies in the ideal generated by the labels"
        )));
    }
    let mut names: Vec<String> = complex.complex().vertex_names().to_vec();
    names.push(fresh_vertex_name(&names, m.to_string()));
    let new_vertex = names.len() - 1;
    let mut facets: Vec<crate::complex::Face> = complex.complex().facets().to_vec();
    facets.push(crate::complex::Face::from_vertices([n_vertex, new_vertex]));
    let new_complex = SimplicialComplex::from_facets(names, facets)?;
    let mut labels = complex.labels().to_vec();
    labels.push(m.clone());
    LabeledComplex::new(new_complex, labels)
}

/// Replaces the label `n` by a dividing member `m`, leaving the complex
/// untouched. Supports and minimality transfer verbatim between the
/// resolutions of `I` and `I + (m)`.
pub fn relabel_vertex(
    complex: &LabeledComplex,
    n_vertex: usize,
    m: &Monomial,
) -> Result<LabeledComplex> {
    let present = complex.complex().vertices();
    if !present.contains(&n_vertex) {
        return Err(Error::InvalidInput(format!(
            "vertex {n_vertex} is not in the complex"
        )));
    }
    let n = complex.label(n_vertex).clone();
    if !m.divides(&n) {
        return Err(Error::WrongOperation(format!(
            "{m} does not divide {n}; a non-dividing member is attached as a pendant (expand_pendant)"
        )));
    }
    let labels_ideal = ideal_of_labels(complex)?;
    if labels_ideal.contains(m) {
        return Err(Error::Precondition(format!(
            "{m} already lies in the ideal generated by the labels"
        )));
    }
    let mut labels = complex.labels().to_vec();
    labels[n_vertex] = m.clone();
    let mut names = complex.complex().vertex_names().to_vec();
    let fresh = fresh_vertex_name(&names, m.to_string());
    names[n_vertex] = fresh;
    let rebuilt = SimplicialComplex::from_facets(names, complex.complex().facets().to_vec())?;
    LabeledComplex::new(rebuilt, labels)
}

/// The minimal generators of `I + (m)` for a member `m`: the old generators
/// plus `m`, with `n` evicted exactly when `m | n`. Cross-validated against
/// a fresh minimalization of the union.
pub fn new_mingens(ideal: &MonomialIdeal, n: &Monomial, m: &Monomial) -> Result<Vec<Monomial>> {
    if !c_contains(ideal, n, m)? {
        return Err(Error::Precondition(format!(
            "{m} is not in the expansion set of {ideal} at {n}"
        )));
    }
    let mut expected: Vec<Monomial> = if m.divides(n) {
        ideal.mingens().iter().filter(|g| *g != n).cloned().collect()
    } else {
        ideal.mingens().to_vec()
    };
    expected.push(m.clone());
    expected.sort();
    let mut union = ideal.mingens().to_vec();
    union.push(m.clone());
    let recomputed = minimal_generators(&union)?;
    if recomputed != expected {
        return Err(Error::TheoremViolation(format!(
            "minimal generators of {ideal} + ({m}) differ from the predicted set"
        )));
    }
    Ok(expected)
}

/// The outcome of comparing the lcm lattices of `I` and `I + (m)` for a
/// dividing member `m | n`.
#[derive(Clone, Debug)]
pub struct LatticeComparison {
    /// The lattices agree away from `{n}` and `{m}`.
    pub elements_match: bool,
    /// The swap `n -> m` (identity elsewhere) is an order isomorphism.
    pub order_isomorphic: bool,
    /// The common elements, sorted.
    pub shared: Vec<Monomial>,
}

/// Verifies that for a dividing member the two lcm lattices differ only in
/// the single element `n` versus `m`, and that swapping them is an order
/// isomorphism.
pub fn lattice_comparison(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
    cap: usize,
) -> Result<LatticeComparison> {
    if !c_contains(ideal, n, m)? {
        return Err(Error::Precondition(format!(
            "{m} is not in the expansion set of {ideal} at {n}"
        )));
    }
    if !m.divides(n) {
        return Err(Error::Precondition(format!(
            "lattice comparison applies to dividing members; {m} does not divide {n}"
        )));
    }
    let expanded = ideal.plus(m)?;
    let old = ideal.lattice(cap)?;
    let new = expanded.lattice(cap)?;
    let old_rest: BTreeSet<Monomial> = old.elements().iter().filter(|u| *u != n).cloned().collect();
    let new_rest: BTreeSet<Monomial> = new.elements().iter().filter(|u| *u != m).cloned().collect();
    let elements_match = old_rest == new_rest;

    let map = |u: &Monomial| -> Monomial {
        if u == n {
            m.clone()
        } else {
            u.clone()
        }
    };
    let mut order_isomorphic = old.len() == new.len();
    if order_isomorphic {
        'outer: for a in old.elements() {
            if !new.contains(&map(a)) {
                order_isomorphic = false;
                break;
            }
            for b in old.elements() {
                if a.divides(b) != map(a).divides(&map(b)) {
                    order_isomorphic = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(LatticeComparison {
        elements_match,
        order_isomorphic,
        shared: old_rest.into_iter().collect(),
    })
}

/// The predicted betti table of `S/(I + (m))` from the table of `S/I`:
/// `β_{1,m} = 1`; for `m | n` the entry at `(1, n)` disappears; for `m ∤ n`
/// the entry at `(2, lcm(m, n))` grows by one; everything else is copied.
/// Graded and total values are derived from the multigraded deltas by degree
/// summation.
pub fn predicted_betti(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
    base: &BettiTable,
) -> Result<BettiTable> {
    if !c_contains(ideal, n, m)? {
        return Err(Error::Precondition(format!(
            "{m} is not in the expansion set of {ideal} at {n}"
        )));
    }
    if base.context() != ideal.context() {
        return Err(Error::ContextMismatch(
            "base table context differs from the ideal's".into(),
        ));
    }
    let mut entries = base.multigraded().clone();
    let previous = entries.insert((1, m.clone()), 1);
    debug_assert!(previous.is_none(), "a member never sits in the old lattice");
    if m.divides(n) {
        entries.remove(&(1, n.clone()));
    } else {
        *entries.entry((2, m.lcm(n)?)).or_default() += 1;
    }
    Ok(BettiTable::from_multigraded(
        Arc::clone(ideal.context()),
        base.field(),
        entries,
    ))
}

/// Translation of a betti table under scaling `I -> vI`: every multidegree
/// in homological degree one and up moves to `v·u`; totals are unchanged.
pub fn scaled_betti(v: &Monomial, base: &BettiTable) -> Result<BettiTable> {
    if v.is_unit() {
        return Err(Error::InvalidInput("scaling by the unit changes nothing; pass v ≠ 1".into()));
    }
    let mut entries = std::collections::BTreeMap::new();
    for (&(i, ref u), &count) in base.multigraded() {
        let key = if i == 0 { u.clone() } else { u.mul(v)? };
        entries.insert((i, key), count);
    }
    Ok(BettiTable::from_multigraded(
        Arc::clone(base.context()),
        base.field(),
        entries,
    ))
}

/// One growth step `I -> vI + (m)` for a member `m` of the expansion set of
/// `vI` at `vn`. Returns the new ideal and its predicted table, obtained by
/// translating the base table by `v` and applying the expansion deltas.
pub fn expand_scaled(
    ideal: &MonomialIdeal,
    v: &Monomial,
    n: &Monomial,
    m: &Monomial,
    base: &BettiTable,
) -> Result<(MonomialIdeal, BettiTable)> {
    if v.is_unit() {
        return Err(Error::InvalidInput("scaling monomial must be ≠ 1".into()));
    }
    if !ideal.is_min_generator(n) {
        return Err(Error::InvalidInput(format!(
            "{n} is not a minimal generator of {ideal}"
        )));
    }
    let scaled = ideal.scaled(v)?;
    let vn = n.mul(v)?;
    let table = predicted_betti(&scaled, &vn, m, &scaled_betti(v, base)?)?;
    let expanded = scaled.plus(m)?;
    Ok((expanded, table))
}

/// How the next generator of an iterated expansion is chosen.
#[derive(Clone, Debug)]
pub enum NewGenerator {
    Exact(Monomial),
    /// A seeded draw from the expansion set, bounded in degree; drawn
    /// members never divide the scaled generator, so each random step bumps
    /// `β_1` and `β_2`.
    Random { max_degree: u64 },
}

/// One step of an iterated expansion: scale by `v`, pick the minimal
/// generator `n` of the current ideal, adjoin a member of the expansion set
/// of `vI` at `vn`.
#[derive(Clone, Debug)]
pub struct ExpansionStep {
    pub scale: Monomial,
    pub generator: Monomial,
    pub new_generator: NewGenerator,
}

/// The record kept for each performed step.
#[derive(Clone, Debug)]
pub struct TraceStep {
    /// The scaling monomial `v`.
    pub scale: Monomial,
    /// The scaled generator `v·n` the expansion attaches to.
    pub generator: Monomial,
    /// The adjoined member `m`.
    pub new_generator: Monomial,
    pub witness_v: Monomial,
    pub witness_w: Monomial,
    /// Whether `m` divides `v·n` (iff the witness `w` is 1); dividing steps
    /// leave the total betti numbers unchanged.
    pub divides_flag: bool,
    pub predicted_totals: Vec<u64>,
}

/// Runs a sequence of scaled expansions, chaining predicted tables. After
/// `s` steps in which the new generator never divides the scaled one, the
/// totals are the base totals with `β_1` and `β_2` each raised by `s`.
/// A failing step aborts with its index.
pub fn iterate_expansion(
    ideal: &MonomialIdeal,
    base: &BettiTable,
    steps: &[ExpansionStep],
    rng: &mut dyn RngCore,
) -> Result<(MonomialIdeal, BettiTable, Vec<TraceStep>)> {
    let mut current = ideal.clone();
    let mut table = base.clone();
    let mut trace = Vec::with_capacity(steps.len());
    for (index, step) in steps.iter().enumerate() {
        let attempt = (|| -> Result<()> {
            let scaled = current.scaled(&step.scale)?;
            let vn = step.generator.mul(&step.scale)?;
            let m = match &step.new_generator {
                NewGenerator::Exact(m) => m.clone(),
                NewGenerator::Random { max_degree } => {
                    sampling::sample_member(rng, &CSpec::for_ideal(&scaled, &vn)?, *max_degree)
                        .ok_or_else(|| {
                            Error::Precondition(format!(
                                "no member of degree ≤ {max_degree} found at {vn}"
                            ))
                        })?
                }
            };
            let witness = decompose_witness(&scaled, &vn, &m)?;
            let (next, next_table) =
                expand_scaled(&current, &step.scale, &step.generator, &m, &table)?;
            trace.push(TraceStep {
                scale: step.scale.clone(),
                generator: vn.clone(),
                new_generator: m.clone(),
                witness_v: witness.v,
                witness_w: witness.w,
                divides_flag: m.divides(&vn),
                predicted_totals: next_table.totals().to_vec(),
            });
            current = next;
            table = next_table;
            Ok(())
        })();
        if let Err(e) = attempt {
            return Err(Error::Step {
                index,
                source: Box::new(e),
            });
        }
    }
    Ok((current, table, trace))
}

/// Predicted pd, depth and regularity of `I + (m)` for a member `m`:
/// pd jumps from 1 to 2 exactly for non-dividing members, depth follows by
/// Auslander-Buchsbaum, and reg is recomputed from the predicted graded
/// table. The closed regularity formula
/// `max(reg, deg(m) - 1, deg(lcm(m, n)) - 2)` is cross-checked against the
/// table; a mismatch is reported as a theorem violation rather than silently
/// trusting either side.
pub fn predicted_invariants(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
    base: &BettiTable,
) -> Result<InvariantSummary> {
    let predicted = predicted_betti(ideal, n, m, base)?;
    let summary = predicted.invariants();
    let base_inv = base.invariants();

    let expected_pd = if base_inv.pd == 1 && !m.divides(n) {
        2
    } else {
        base_inv.pd
    };
    if summary.pd != expected_pd {
        return Err(Error::TheoremViolation(format!(
            "projective dimension clause predicts {expected_pd}, table gives {}",
            summary.pd
        )));
    }

    let deg_m = BigInt::from(m.degree()) - BigInt::from(1);
    let deg_lcm = BigInt::from(m.lcm(n)?.degree()) - BigInt::from(2);
    let formula_reg = if deg_m <= base_inv.reg && deg_lcm <= base_inv.reg {
        base_inv.reg.clone()
    } else {
        deg_m.max(deg_lcm)
    };
    if summary.reg != formula_reg {
        return Err(Error::TheoremViolation(format!(
            "regularity formula predicts {formula_reg}, recomputed table gives {}",
            summary.reg
        )));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::FieldSpec;
    use crate::monomial::{VarContext, DEFAULT_ENUMERATION_CAP};
    use crate::resolution::{betti_oracle, is_minimal_support, supports_resolution, taylor_complex};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const CAP: usize = DEFAULT_ENUMERATION_CAP;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn ctx_abcde() -> Arc<VarContext> {
        VarContext::new(["a", "b", "c", "d", "e"]).unwrap()
    }

    fn ijj_ideal(ctx: &Arc<VarContext>) -> MonomialIdeal {
        MonomialIdeal::parse(ctx, &["a b c", "c d e", "a c e"]).unwrap()
    }

    fn n_label(ctx: &Arc<VarContext>) -> Monomial {
        ctx.parse_monomial("a c e").unwrap()
    }

    #[test]
    fn definitional_membership() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let n = ctx.parse_monomial("a c e").unwrap();
        assert!(c_contains(&ideal, &n, &ctx.parse_monomial("a e").unwrap()).unwrap());
        assert!(c_contains(&ideal, &n, &ctx.parse_monomial("a^2 e").unwrap()).unwrap());
        assert!(!c_contains(&ideal, &n, &ctx.parse_monomial("c e").unwrap()).unwrap());

        match membership(&ideal, &n, &ctx.parse_monomial("c e").unwrap()).unwrap() {
            Membership::NotMember(NonMemberReason::RequiredIndexDeficit { var }) => {
                assert_eq!(ctx.name(var), "a");
            }
            other => panic!("expected a required-index deficit, got {other:?}"),
        }

        let bad_n = ctx.parse_monomial("a b").unwrap();
        assert!(c_contains(&ideal, &bad_n, &n).is_err());
    }

    #[test]
    fn membership_is_false_when_the_gcd_is_trivial() {
        let ctx = VarContext::new(["a", "b", "c"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^3 b", "a^2 b^2 c", "b^4 c^2", "a c^3"]).unwrap();
        assert!(ideal.gcd().is_unit());
        for n in ideal.mingens().to_vec() {
            let spec = CSpec::for_ideal(&ideal, &n).unwrap();
            assert!(spec.is_empty());
            assert!(spec.enumerate(6).is_empty());
        }
    }

    #[test]
    fn one_variable_special_cases() {
        let ctx = VarContext::new(["x1"]).unwrap();
        let plain = MonomialIdeal::parse(&ctx, &["x1"]).unwrap();
        let n = ctx.parse_monomial("x1").unwrap();
        let spec = CSpec::for_ideal(&plain, &n).unwrap();
        assert!(spec.is_empty(), "in one variable (x1) expands to nothing");

        let square = MonomialIdeal::parse(&ctx, &["x1^3"]).unwrap();
        let n = ctx.parse_monomial("x1^3").unwrap();
        let spec = CSpec::for_ideal(&square, &n).unwrap();
        assert!(!spec.is_empty());
        let members = spec.enumerate(10);
        assert_eq!(
            members,
            vec![ctx.parse_monomial("x1").unwrap(), ctx.parse_monomial("x1^2").unwrap()],
            "exactly the proper powers below the generator"
        );
    }

    #[test]
    fn emptiness_needs_a_tight_index_not_just_a_nontrivial_gcd() {
        // Every exponent of n strictly exceeds the gcd, so nothing can drop.
        let ctx = VarContext::new(["x", "y"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["x y^3", "x^3 y", "x^2 y^2"]).unwrap();
        assert!(!ideal.gcd().is_unit());
        let tight = ctx.parse_monomial("x^2 y^2").unwrap();
        let spec = CSpec::for_ideal(&ideal, &tight).unwrap();
        assert!(spec.is_empty());
        assert!(spec.enumerate(8).is_empty());

        let loose = ctx.parse_monomial("x y^3").unwrap();
        assert!(!CSpec::for_ideal(&ideal, &loose).unwrap().is_empty());
    }

    #[test]
    fn divisibility_characterization_examples() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let n = ctx.parse_monomial("a c e").unwrap();
        assert!(c_contains_via_divisibility(&ideal, &n, &ctx.parse_monomial("a e").unwrap(), CAP).unwrap());
        assert!(
            !c_contains_via_divisibility(&ideal, &n, &ctx.parse_monomial("c e").unwrap(), CAP).unwrap(),
            "lcm(ce, cde) = cde is a proper multiple of ce that ace does not divide"
        );

        let ctx4 = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let sr = MonomialIdeal::parse(&ctx4, &["a b c", "a b d"]).unwrap();
        let n = ctx4.parse_monomial("a b c").unwrap();
        assert!(c_contains_via_divisibility(&sr, &n, &ctx4.parse_monomial("c d").unwrap(), CAP).unwrap());

        // m ∈ I is outside the characterization's domain.
        assert!(c_contains_via_divisibility(&ideal, &n, &ctx.parse_monomial("a b c e").unwrap(), CAP)
            .is_err());
    }

    #[test]
    fn witness_decomposition() {
        let ctx = VarContext::new(["x1", "x2", "x3", "x4"]).unwrap();
        // n = x1*x2*x3^3 over base x1*x2: v = x1, w = x4 gives x2*x3^3*x4.
        let u = ctx.parse_monomial("x1 x2").unwrap();
        let n = ctx.parse_monomial("x1 x2 x3^3").unwrap();
        let spec = CSpec::for_base(&u, &n).unwrap();
        match spec.verdict(&ctx.parse_monomial("x2 x3^3 x4").unwrap()) {
            Membership::Member { v, w } => {
                assert_eq!(v, ctx.parse_monomial("x1").unwrap());
                assert_eq!(w, ctx.parse_monomial("x4").unwrap());
            }
            other => panic!("expected membership, got {other:?}"),
        }

        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let n = ctx.parse_monomial("a c e").unwrap();
        let w1 = decompose_witness(&ideal, &n, &ctx.parse_monomial("a e").unwrap()).unwrap();
        assert_eq!(w1.v, ctx.parse_monomial("c").unwrap());
        assert!(w1.w.is_unit());
        let w2 = decompose_witness(&ideal, &n, &ctx.parse_monomial("a^2 e").unwrap()).unwrap();
        assert_eq!(w2.v, ctx.parse_monomial("c").unwrap());
        assert_eq!(w2.w, ctx.parse_monomial("a").unwrap());

        assert!(decompose_witness(&ideal, &n, &ctx.parse_monomial("c e").unwrap()).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let n = ctx.parse_monomial("a c e").unwrap();
        let deg2 = enumerate_c(&ideal, &n, 2).unwrap();
        assert_eq!(deg2, vec![ctx.parse_monomial("a e").unwrap()]);
        let deg3 = enumerate_c(&ideal, &n, 3).unwrap();
        let expected: Vec<Monomial> = ["a e", "a^2 e", "a b e", "a d e", "a e^2"]
            .iter()
            .map(|s| ctx.parse_monomial(s).unwrap())
            .collect();
        assert_eq!(deg3.len(), 5);
        for m in &expected {
            assert!(deg3.contains(m), "missing {m}");
        }
    }

    #[test]
    fn containment_chain() {
        let ctx = VarContext::new(["x1", "x2", "x3", "x4"]).unwrap();
        let u = ctx.parse_monomial("x1 x2").unwrap();
        let mid = ctx.parse_monomial("x1 x2 x3").unwrap();
        let n = ctx.parse_monomial("x1 x2 x3^3").unwrap();
        let h = ctx.parse_monomial("x2 x3^3 x4").unwrap();
        assert_eq!(containment_check(&u, &mid, &n, &h).unwrap(), (true, true));

        // Degenerate chain u = m = n.
        assert_eq!(containment_check(&u, &u, &u, &ctx.parse_monomial("x1").unwrap()).unwrap(), (true, true));

        let broken = containment_check(&mid, &u, &n, &h);
        assert!(broken.is_err());
    }

    #[test]
    fn pendant_and_relabel_reproduce_the_worked_paths() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let path = {
            let complex = SimplicialComplex::from_named_facets(
                &["p", "q", "r"],
                &[&["p", "q"], &["q", "r"]],
            )
            .unwrap();
            let labels: Vec<Monomial> = ["a b c", "a c e", "c d e"]
                .iter()
                .map(|s| ctx.parse_monomial(s).unwrap())
                .collect();
            LabeledComplex::new(complex, labels).unwrap()
        };
        let middle = 1;

        // Pendant a^2e at ace supports resolution of J = I + (a^2e).
        let m = ctx.parse_monomial("a^2 e").unwrap();
        let pendant = expand_pendant(&path, middle, &m).unwrap();
        let j = ideal.plus(&m).unwrap();
        assert!(supports_resolution(&pendant, &j, q(), CAP).unwrap());

        // Relabeling ace to ae supports resolution of J' = I + (ae).
        let m = ctx.parse_monomial("a e").unwrap();
        let relabeled = relabel_vertex(&path, middle, &m).unwrap();
        let jp = ideal.plus(&m).unwrap();
        assert!(supports_resolution(&relabeled, &jp, q(), CAP).unwrap());

        // Pendant with a non-dividing non-member fails the support check.
        let bad = ctx.parse_monomial("b e").unwrap();
        assert!(!c_contains(&ideal, &n_label(&ctx), &bad).unwrap());
        let pendant = expand_pendant(&path, middle, &bad).unwrap();
        let jbad = ideal.plus(&bad).unwrap();
        assert!(!supports_resolution(&pendant, &jbad, q(), CAP).unwrap());

        // The dividing non-member ce is rejected by expand_pendant (it
        // would be a relabel), but the hand-built pendant complex also
        // fails the support check for I + (ce).
        let ce = ctx.parse_monomial("c e").unwrap();
        let by_hand = {
            let complex = SimplicialComplex::from_named_facets(
                &["p", "q", "r", "s"],
                &[&["p", "q"], &["q", "r"], &["q", "s"]],
            )
            .unwrap();
            let labels: Vec<Monomial> = ["a b c", "a c e", "c d e", "c e"]
                .iter()
                .map(|t| ctx.parse_monomial(t).unwrap())
                .collect();
            LabeledComplex::new(complex, labels).unwrap()
        };
        let jce = ideal.plus(&ce).unwrap();
        assert!(!supports_resolution(&by_hand, &jce, q(), CAP).unwrap());

        // Routing errors: dividing candidates relabel, non-dividing attach.
        assert!(matches!(
            expand_pendant(&path, middle, &ctx.parse_monomial("a e").unwrap()),
            Err(Error::WrongOperation(_))
        ));
        assert!(matches!(
            relabel_vertex(&path, middle, &ctx.parse_monomial("a^2 e").unwrap()),
            Err(Error::WrongOperation(_))
        ));
        // m = n is filtered by the m ∉ I precondition.
        assert!(matches!(
            relabel_vertex(&path, middle, &ctx.parse_monomial("a c e").unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn mingens_of_the_expanded_ideal() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let n = ctx.parse_monomial("a c e").unwrap();

        let grown = new_mingens(&ideal, &n, &ctx.parse_monomial("a^2 e").unwrap()).unwrap();
        assert_eq!(grown.len(), 4);
        let replaced = new_mingens(&ideal, &n, &ctx.parse_monomial("a e").unwrap()).unwrap();
        assert_eq!(replaced.len(), 3);
        assert!(!replaced.contains(&n));

        let ctx4 = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let sr = MonomialIdeal::parse(&ctx4, &["a b c", "a b d"]).unwrap();
        let grown = new_mingens(&sr, &ctx4.parse_monomial("a b c").unwrap(), &ctx4.parse_monomial("c d").unwrap())
            .unwrap();
        assert_eq!(grown.len(), 3);
    }

    #[test]
    fn lattice_swap_for_dividing_members() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let n = ctx.parse_monomial("a c e").unwrap();
        let m = ctx.parse_monomial("a e").unwrap();
        let report = lattice_comparison(&ideal, &n, &m, CAP).unwrap();
        assert!(report.elements_match);
        assert!(report.order_isomorphic);
        assert_eq!(report.shared.len(), 6);

        let ctx2 = VarContext::new(["x1", "x2"]).unwrap();
        let tiny = MonomialIdeal::parse(&ctx2, &["x1 x2"]).unwrap();
        let report = lattice_comparison(
            &tiny,
            &ctx2.parse_monomial("x1 x2").unwrap(),
            &ctx2.parse_monomial("x1").unwrap(),
            CAP,
        )
        .unwrap();
        assert!(report.elements_match && report.order_isomorphic);

        assert!(lattice_comparison(&ideal, &n, &ctx.parse_monomial("a^2 e").unwrap(), CAP).is_err());
    }

    #[test]
    fn predicted_table_for_the_running_example() {
        let ctx = VarContext::new(["x1", "x2", "x3", "x4"]).unwrap();
        let ideal =
            MonomialIdeal::parse(&ctx, &["x1^2 x2 x4", "x1 x2^2 x3^2", "x1 x2 x3^3"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let n = ctx.parse_monomial("x1 x2 x3^3").unwrap();
        let m = ctx.parse_monomial("x2 x3^3 x4").unwrap();
        let predicted = predicted_betti(&ideal, &n, &m, &base).unwrap();
        assert_eq!(predicted.totals(), &[1, 4, 4, 1]);
        assert_eq!(predicted.multigraded_entry(1, &m), 1);
        assert_eq!(
            predicted.multigraded_entry(2, &ctx.parse_monomial("x1 x2 x3^3 x4").unwrap()),
            1
        );
        let oracle = betti_oracle(&ideal.plus(&m).unwrap(), q(), CAP).unwrap();
        assert!(predicted.same_entries(&oracle));
    }

    #[test]
    fn predicted_table_for_dividing_and_nondividing_members() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let n = ctx.parse_monomial("a c e").unwrap();

        let m = ctx.parse_monomial("a e").unwrap();
        let predicted = predicted_betti(&ideal, &n, &m, &base).unwrap();
        assert_eq!(predicted.totals(), base.totals());
        assert_eq!(predicted.multigraded_entry(1, &m), 1);
        assert_eq!(predicted.multigraded_entry(1, &n), 0);
        let oracle = betti_oracle(&ideal.plus(&m).unwrap(), q(), CAP).unwrap();
        assert!(predicted.same_entries(&oracle));

        let m = ctx.parse_monomial("a^2 e").unwrap();
        let predicted = predicted_betti(&ideal, &n, &m, &base).unwrap();
        assert_eq!(predicted.totals(), &[1, 4, 3], "both early totals grow by one");
        let oracle = betti_oracle(&ideal.plus(&m).unwrap(), q(), CAP).unwrap();
        assert!(predicted.same_entries(&oracle));
    }

    #[test]
    fn scaling_translates_multidegrees() {
        let ctx = ctx_abcde();
        let ideal = MonomialIdeal::parse(&ctx, &["a", "b"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let v = ctx.parse_monomial("e").unwrap();
        let scaled = scaled_betti(&v, &base).unwrap();
        assert_eq!(scaled.totals(), base.totals());
        let oracle = betti_oracle(&ideal.scaled(&v).unwrap(), q(), CAP).unwrap();
        assert!(scaled.same_entries(&oracle));

        assert!(scaled_betti(&ctx.unit(), &base).is_err());
    }

    #[test]
    fn convenient_build_identity() {
        // Scaling all generators but one by a fresh variable preserves
        // every total betti number.
        let ctx = VarContext::new(["x1", "x2", "x3", "x4", "x5"]).unwrap();
        let lhs = MonomialIdeal::parse(&ctx, &["x1^2 x2", "x2 x3", "x1 x4"]).unwrap();
        let rhs = MonomialIdeal::parse(&ctx, &["x1^2 x2 x5", "x2 x3", "x1 x4 x5"]).unwrap();
        let lhs_table = betti_oracle(&lhs, q(), CAP).unwrap();
        let rhs_table = betti_oracle(&rhs, q(), CAP).unwrap();
        assert_eq!(lhs_table.totals(), rhs_table.totals());

        // The identity factors through scaled_betti + predicted_betti:
        // rhs = x5*lhs + (x2*x3), with x2*x3 dividing its scaled copy.
        let v = ctx.parse_monomial("x5").unwrap();
        let n = ctx.parse_monomial("x2 x3").unwrap();
        let m = n.clone();
        let (expanded, predicted) = expand_scaled(&lhs, &v, &n, &m, &lhs_table).unwrap();
        assert_eq!(expanded, rhs);
        assert!(predicted.same_entries(&rhs_table));
    }

    #[test]
    fn scaled_expansion_of_the_intro_ideal() {
        let ctx = VarContext::new(["a", "b", "c"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^3 b", "a^2 b^2 c", "b^4 c^2", "a c^3"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        assert_eq!(base.totals(), &[1, 4, 5, 2]);
        let v = ctx.parse_monomial("a").unwrap();
        let n = ctx.parse_monomial("b^4 c^2").unwrap();
        let m = ctx.parse_monomial("b^4 c^3").unwrap();
        let (expanded, predicted) = expand_scaled(&ideal, &v, &n, &m, &base).unwrap();
        let expected =
            MonomialIdeal::parse(&ctx, &["a^4 b", "a^3 b^2 c", "a b^4 c^2", "a^2 c^3", "b^4 c^3"]).unwrap();
        assert_eq!(expanded, expected);
        assert_eq!(predicted.totals(), &[1, 5, 6, 2]);
        let oracle = betti_oracle(&expanded, q(), CAP).unwrap();
        assert!(predicted.same_entries(&oracle));
    }

    #[test]
    fn iterated_expansion_reaches_the_advertised_totals() {
        let ctx = VarContext::new(["a", "b", "c"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^3 b", "a^2 b^2 c", "b^4 c^2", "a c^3"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let steps = vec![
            ExpansionStep {
                scale: ctx.parse_monomial("a").unwrap(),
                generator: ctx.parse_monomial("b^4 c^2").unwrap(),
                new_generator: NewGenerator::Exact(ctx.parse_monomial("b^4 c^3").unwrap()),
            },
            ExpansionStep {
                scale: ctx.parse_monomial("b").unwrap(),
                generator: ctx.parse_monomial("a^2 c^3").unwrap(),
                new_generator: NewGenerator::Exact(ctx.parse_monomial("a^6 c^3").unwrap()),
            },
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (final_ideal, table, trace) = iterate_expansion(&ideal, &base, &steps, &mut rng).unwrap();
        assert_eq!(trace[0].predicted_totals, vec![1, 5, 6, 2]);
        assert_eq!(trace[1].predicted_totals, vec![1, 6, 7, 2]);
        assert_eq!(table.totals(), &[1, 6, 7, 2]);
        assert!(trace.iter().all(|t| !t.divides_flag));
        let oracle = betti_oracle(&final_ideal, q(), CAP).unwrap();
        assert!(table.same_entries(&oracle));

        // Zero steps echo the input.
        let (same, same_table, empty_trace) =
            iterate_expansion(&ideal, &base, &[], &mut rng).unwrap();
        assert_eq!(same, ideal);
        assert!(same_table.same_entries(&base));
        assert!(empty_trace.is_empty());
    }

    #[test]
    fn failing_step_reports_its_index() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let steps = vec![ExpansionStep {
            scale: ctx.parse_monomial("a").unwrap(),
            generator: ctx.parse_monomial("a c e").unwrap(),
            // ce fails membership even after scaling.
            new_generator: NewGenerator::Exact(ctx.parse_monomial("c e").unwrap()),
        }];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        match iterate_expansion(&ideal, &base, &steps, &mut rng) {
            Err(Error::Step { index: 0, .. }) => {}
            other => panic!("expected a step-0 failure, got {other:?}"),
        }
    }

    #[test]
    fn dividing_step_keeps_totals() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        // Scale by b; b*ace has gcd(bI) = b*c as base, and b*ae divides it
        // after dropping c.
        let v = ctx.parse_monomial("b").unwrap();
        let n = ctx.parse_monomial("a c e").unwrap();
        let m = ctx.parse_monomial("a b e").unwrap();
        let scaled = ideal.scaled(&v).unwrap();
        let vn = n.mul(&v).unwrap();
        assert!(c_contains(&scaled, &vn, &m).unwrap());
        assert!(m.divides(&vn));
        let (expanded, predicted) = expand_scaled(&ideal, &v, &n, &m, &base).unwrap();
        assert_eq!(predicted.totals(), base.totals());
        let oracle = betti_oracle(&expanded, q(), CAP).unwrap();
        assert!(predicted.same_entries(&oracle));
    }

    #[test]
    fn predicted_invariants_of_the_arbitrary_reg_example() {
        let ctx = ctx_abcde();
        let ideal = MonomialIdeal::parse(&ctx, &["a b d", "a^2 b^2", "a c^3 e", "a^2 c^2"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let n = ctx.parse_monomial("a b d").unwrap();

        let keep = predicted_invariants(&ideal, &n, &ctx.parse_monomial("b^2 c d^2").unwrap(), &base)
            .unwrap();
        assert_eq!(keep.reg, BigInt::from(5));

        let blow = predicted_invariants(
            &ideal,
            &n,
            &ctx.parse_monomial("b^500 c d^500").unwrap(),
            &base,
        )
        .unwrap();
        assert_eq!(blow.reg, BigInt::from(1000));
        assert_eq!(blow.pd, keep.pd);
    }

    #[test]
    fn pd_jump_from_one_to_two() {
        let ctx = VarContext::new(["x1", "x2", "x3"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["x1 x2"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        assert_eq!(base.invariants().pd, 1);
        let n = ctx.parse_monomial("x1 x2").unwrap();
        let m = ctx.parse_monomial("x1 x3").unwrap();
        let inv = predicted_invariants(&ideal, &n, &m, &base).unwrap();
        assert_eq!(inv.pd, 2);
        let oracle = betti_oracle(&ideal.plus(&m).unwrap(), q(), CAP).unwrap();
        assert_eq!(oracle.invariants(), inv);
    }

    #[test]
    fn regularity_formula_misses_the_dropped_generator() {
        // Replacing the sole generator x1*x2 by x1 lowers reg from 1 to 0,
        // but the closed formula reports "unchanged". The recomputed table
        // is right and the mismatch surfaces as a theorem violation.
        let ctx = VarContext::new(["x1", "x2"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["x1 x2"]).unwrap();
        let base = betti_oracle(&ideal, q(), CAP).unwrap();
        let n = ctx.parse_monomial("x1 x2").unwrap();
        let m = ctx.parse_monomial("x1").unwrap();
        let predicted = predicted_betti(&ideal, &n, &m, &base).unwrap();
        let oracle = betti_oracle(&ideal.plus(&m).unwrap(), q(), CAP).unwrap();
        assert!(predicted.same_entries(&oracle));
        assert_eq!(predicted.invariants().reg, BigInt::from(0));
        assert!(matches!(
            predicted_invariants(&ideal, &n, &m, &base),
            Err(Error::TheoremViolation(_))
        ));
    }

    #[test]
    fn pendant_preserves_minimality_for_members() {
        let ctx = ctx_abcde();
        let ideal = ijj_ideal(&ctx);
        let taylor = taylor_complex(&ideal, CAP).unwrap();
        let n = ctx.parse_monomial("a c e").unwrap();
        let n_vertex = taylor.vertex_with_label(&n).unwrap();
        let m = ctx.parse_monomial("a^2 e").unwrap();
        let grown = expand_pendant(&taylor, n_vertex, &m).unwrap();
        assert_eq!(is_minimal_support(&taylor), is_minimal_support(&grown));
    }
}
