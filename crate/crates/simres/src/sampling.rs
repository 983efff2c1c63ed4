//! Seeded random instances for the verification suites and for random
//! expansion steps.
//!
//! Ideals are drawn with at most 4 variables, 5 minimal generators and
//! exponents up to 3, rejection-sampled so the generator gcd is nontrivial
//! (otherwise every expansion set is empty). Members are built from witness
//! pairs rather than by rejection, so sampling stays cheap even when members
//! are sparse.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::complex::{Face, SimplicialComplex};
use crate::expansion::CSpec;
use crate::monomial::{Monomial, MonomialIdeal, Nat, VarContext};

/// Caps for the random ideal generator used across the suites.
#[derive(Clone, Copy, Debug)]
pub struct IdealShape {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_exp: u64,
}

impl Default for IdealShape {
    fn default() -> Self {
        IdealShape {
            max_vars: 4,
            max_gens: 5,
            max_exp: 3,
        }
    }
}

fn fresh_context(nvars: usize) -> std::sync::Arc<VarContext> {
    VarContext::new((1..=nvars).map(|i| format!("x{i}"))).expect("generated names are valid")
}

/// A random ideal with nontrivial gcd and at least two minimal generators,
/// at least one of which has a nonempty expansion set.
pub fn random_ideal(rng: &mut dyn RngCore, shape: IdealShape) -> MonomialIdeal {
    loop {
        let nvars = rng.gen_range(2..=shape.max_vars);
        let ctx = fresh_context(nvars);
        let q = rng.gen_range(2..=shape.max_gens);
        let mut gens = Vec::with_capacity(q);
        for _ in 0..q {
            let mut pairs = Vec::new();
            for i in 0..nvars {
                let e = rng.gen_range(0..=shape.max_exp);
                if e > 0 {
                    pairs.push((i, e));
                }
            }
            if pairs.is_empty() {
                pairs.push((rng.gen_range(0..nvars), 1));
            }
            gens.push(ctx.monomial(&pairs));
        }
        let Ok(ideal) = MonomialIdeal::new(gens) else {
            continue;
        };
        if ideal.mingens().len() < 2 || ideal.gcd().is_unit() {
            continue;
        }
        if expandable_generator(rng, &ideal).is_some() {
            return ideal;
        }
    }
}

/// A minimal generator whose expansion set is nonempty, if any.
pub fn expandable_generator(rng: &mut dyn RngCore, ideal: &MonomialIdeal) -> Option<Monomial> {
    let mut gens: Vec<Monomial> = ideal.mingens().to_vec();
    gens.shuffle(rng);
    gens.into_iter().find(|n| {
        CSpec::for_ideal(ideal, n)
            .map(|spec| !spec.is_empty())
            .unwrap_or(false)
    })
}

fn exponent_at_most_3(n: &Nat) -> u64 {
    u64::try_from(n).map(|e| e.min(3)).unwrap_or(3)
}

/// A member of the expansion set built from a random witness pair `(v, w)`:
/// `v` drops below the generator on indices where the base is tight, `w`
/// raises coprime indices. When `allow_dividing` is false the result never
/// divides the generator (the witness `w` is forced nontrivial).
pub fn member_with_witness(
    rng: &mut dyn RngCore,
    spec: &CSpec,
    allow_dividing: bool,
) -> Option<Monomial> {
    let c = spec.generator();
    let nvars = c.context().num_vars();
    let eligible: Vec<usize> = spec
        .droppable()
        .iter()
        .copied()
        .filter(|&i| !c.exponent(i).is_zero())
        .collect();
    if eligible.is_empty() {
        return None;
    }
    for _ in 0..200 {
        let mut v_pairs: Vec<(usize, u64)> = Vec::new();
        for &i in &eligible {
            if rng.gen_bool(0.5) {
                v_pairs.push((i, rng.gen_range(1..=exponent_at_most_3(c.exponent(i)))));
            }
        }
        if v_pairs.is_empty() {
            let &i = eligible.choose(rng).expect("nonempty");
            v_pairs.push((i, rng.gen_range(1..=exponent_at_most_3(c.exponent(i)))));
        }
        let v_support: Vec<usize> = v_pairs.iter().map(|&(i, _)| i).collect();
        let w_candidates: Vec<usize> = (0..nvars).filter(|i| !v_support.contains(i)).collect();
        let mut w_pairs: Vec<(usize, u64)> = Vec::new();
        let want_w = if allow_dividing { rng.gen_bool(0.5) } else { true };
        if want_w {
            if w_candidates.is_empty() {
                continue;
            }
            let count = rng.gen_range(1..=w_candidates.len().min(2));
            for &i in w_candidates.choose_multiple(rng, count) {
                w_pairs.push((i, rng.gen_range(1..=2)));
            }
        }
        let ctx = c.context();
        let v = ctx.monomial(&v_pairs);
        let w = ctx.monomial(&w_pairs);
        if w.is_unit() && v == *c {
            continue;
        }
        let m = c.mul(&w).and_then(|nw| nw.div(&v)).expect("v divides c by construction");
        if spec.contains(&m) {
            return Some(m);
        }
    }
    None
}

/// A non-dividing member of degree at most `max_degree`; used for random
/// expansion steps.
pub fn sample_member(rng: &mut dyn RngCore, spec: &CSpec, max_degree: u64) -> Option<Monomial> {
    for _ in 0..200 {
        if let Some(m) = member_with_witness(rng, spec, false) {
            if m.degree() <= Nat::from(max_degree) {
                return Some(m);
            }
        }
    }
    None
}

/// A nonunit monomial outside the ideal that fails the membership test.
/// Draws random small exponent vectors and keeps the first non-member.
pub fn non_member(
    rng: &mut dyn RngCore,
    ideal: &MonomialIdeal,
    n: &Monomial,
    max_exp: u64,
) -> Monomial {
    let ctx = ideal.context();
    let nvars = ctx.num_vars();
    let spec = CSpec::for_ideal(ideal, n).expect("n is a minimal generator");
    loop {
        let mut pairs = Vec::new();
        for i in 0..nvars {
            let e = rng.gen_range(0..=max_exp);
            if e > 0 {
                pairs.push((i, e));
            }
        }
        let m = ctx.monomial(&pairs);
        if !m.is_unit() && !ideal.contains(&m) && !spec.contains(&m) {
            return m;
        }
    }
}

/// A random square-free ideal whose generators share a common variable, so
/// the gcd is nontrivial and every generator has a nonempty expansion set.
pub fn square_free_ideal(rng: &mut dyn RngCore, max_vars: usize) -> MonomialIdeal {
    loop {
        let nvars = rng.gen_range(3..=max_vars);
        let ctx = fresh_context(nvars);
        let common = rng.gen_range(0..nvars);
        let q = rng.gen_range(2..=4);
        let mut gens = Vec::with_capacity(q);
        for _ in 0..q {
            let mut pairs = vec![(common, 1u64)];
            for i in 0..nvars {
                if i != common && rng.gen_bool(0.45) {
                    pairs.push((i, 1));
                }
            }
            gens.push(ctx.monomial(&pairs));
        }
        let Ok(ideal) = MonomialIdeal::new(gens) else {
            continue;
        };
        if ideal.mingens().len() >= 2 && !ideal.gcd().is_unit() {
            return ideal;
        }
    }
}

/// A square-free member of the expansion set of a square-free ideal:
/// `m = (n / v) · w` with `v` a nonempty subset of the tight support and `w`
/// supported outside the generator.
pub fn square_free_member(
    rng: &mut dyn RngCore,
    ideal: &MonomialIdeal,
    n: &Monomial,
) -> Option<Monomial> {
    let spec = CSpec::for_ideal(ideal, n).ok()?;
    let c = spec.generator().clone();
    let nvars = c.context().num_vars();
    let eligible: Vec<usize> = spec
        .droppable()
        .iter()
        .copied()
        .filter(|&i| !c.exponent(i).is_zero())
        .collect();
    if eligible.is_empty() {
        return None;
    }
    let outside: Vec<usize> = (0..nvars)
        .filter(|&i| c.exponent(i).is_zero())
        .collect();
    for _ in 0..200 {
        let mut v_support: Vec<usize> = eligible
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if v_support.is_empty() {
            v_support.push(*eligible.choose(rng).expect("nonempty"));
        }
        let mut w_pairs: Vec<(usize, u64)> = Vec::new();
        for &i in &outside {
            if rng.gen_bool(0.35) {
                w_pairs.push((i, 1));
            }
        }
        let ctx = c.context();
        let v_pairs: Vec<(usize, u64)> = v_support.iter().map(|&i| (i, 1)).collect();
        let v = ctx.monomial(&v_pairs);
        let w = ctx.monomial(&w_pairs);
        if w.is_unit() && v == c {
            continue;
        }
        let m = c.mul(&w).and_then(|nw| nw.div(&v)).expect("v divides c");
        if m.is_square_free() && spec.contains(&m) {
            return Some(m);
        }
    }
    None
}

/// A random nonvoid simplicial complex on at most `max_vertices` vertices.
pub fn random_complex(rng: &mut dyn RngCore, max_vertices: usize) -> SimplicialComplex {
    let nverts = rng.gen_range(3..=max_vertices);
    let names: Vec<String> = (0..nverts).map(|i| format!("v{i}")).collect();
    let nfacets = rng.gen_range(2..=5);
    let mut facets = Vec::with_capacity(nfacets);
    for _ in 0..nfacets {
        let size = rng.gen_range(1..=nverts.min(4));
        let mut verts: Vec<usize> = (0..nverts).collect();
        verts.shuffle(rng);
        facets.push(Face::from_vertices(verts.into_iter().take(size)));
    }
    SimplicialComplex::from_facets(names, facets).expect("generated facets are valid")
}
