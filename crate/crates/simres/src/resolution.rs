//! Support and minimality checks for labeled complexes, betti tables, and the
//! Taylor oracle.
//!
//! A labeled complex supports a free resolution of an ideal exactly when
//! every divisibility subcomplex `Δ_{≤u}` is acyclic over the field, for `u`
//! ranging over the lcm closure of the vertex labels. When it does, the
//! multigraded betti numbers of `S/I` fall out of the strict subcomplexes:
//! `β_{i,u} = dim H_{i-2}(Δ_{<u})`. The Taylor complex (the full simplex on
//! the minimal generators) always supports a resolution, which makes it the
//! independent ground truth every other computation is checked against.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::complex::{LabeledComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{is_acyclic, reduced_homology, FieldSpec};
use crate::monomial::{minimal_generators, LcmLattice, Monomial, MonomialIdeal, Nat, VarContext};

/// Multigraded, graded and total betti numbers of `S/I`, reported together
/// with the coefficient field they were computed over. `β_0 = 1` is included
/// so totals read like `(1, 4, 5, 2)`.
#[derive(Clone, Debug)]
pub struct BettiTable {
    ctx: Arc<VarContext>,
    field: FieldSpec,
    multigraded: BTreeMap<(usize, Monomial), u64>,
    graded: BTreeMap<(usize, Nat), u64>,
    total: Vec<u64>,
}

impl BettiTable {
    /// Builds a table from nonzero multigraded entries; graded and total
    /// values are derived by degree summation.
    pub fn from_multigraded(
        ctx: Arc<VarContext>,
        field: FieldSpec,
        multigraded: BTreeMap<(usize, Monomial), u64>,
    ) -> Self {
        let mut graded: BTreeMap<(usize, Nat), u64> = BTreeMap::new();
        let mut total: Vec<u64> = Vec::new();
        for (&(i, ref u), &count) in &multigraded {
            debug_assert!(count > 0, "only nonzero entries are stored");
            *graded.entry((i, u.degree())).or_default() += count;
            if total.len() <= i {
                total.resize(i + 1, 0);
            }
            total[i] += count;
        }
        BettiTable {
            ctx,
            field,
            multigraded,
            graded,
            total,
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Nonzero multigraded entries `(i, u) -> β_{i,u}`.
    pub fn multigraded(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.multigraded
    }

    pub fn multigraded_entry(&self, i: usize, u: &Monomial) -> u64 {
        self.multigraded.get(&(i, u.clone())).copied().unwrap_or(0)
    }

    /// Nonzero graded entries `(i, j) -> β_{i,j}`.
    pub fn graded(&self) -> &BTreeMap<(usize, Nat), u64> {
        &self.graded
    }

    pub fn graded_entry(&self, i: usize, j: &Nat) -> u64 {
        self.graded.get(&(i, j.clone())).copied().unwrap_or(0)
    }

    /// Total betti numbers `(β_0, β_1, ..., β_pd)`.
    pub fn totals(&self) -> &[u64] {
        &self.total
    }

    pub fn projective_dimension(&self) -> usize {
        self.total
            .iter()
            .rposition(|&b| b > 0)
            .expect("β_0 = 1 is always present")
    }

    /// pd, reg and depth read off the table.
    pub fn invariants(&self) -> InvariantSummary {
        let pd = self.projective_dimension();
        let reg = self
            .graded
            .keys()
            .map(|(i, j)| BigInt::from(j.clone()) - BigInt::from(*i))
            .max()
            .expect("table is never empty");
        InvariantSummary {
            pd,
            reg,
            depth: self.ctx.num_vars() - pd,
        }
    }

    /// Entry-for-entry equality of the multigraded tables.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.multigraded == other.multigraded
    }
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.field == other.field && self.multigraded == other.multigraded
    }
}

impl Eq for BettiTable {}

/// Projective dimension, Castelnuovo-Mumford regularity and depth of `S/I`.
/// Depth is `n - pd` by Auslander-Buchsbaum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSummary {
    pub pd: usize,
    pub reg: BigInt,
    pub depth: usize,
}

impl fmt::Display for InvariantSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pd {}, reg {}, depth {}", self.pd, self.reg, self.depth)
    }
}

/// The Taylor complex: the full simplex on the minimal generators, each
/// vertex labeled by its generator. Errors when the generator count exceeds
/// the enumeration cap.
pub fn taylor_complex(ideal: &MonomialIdeal, cap: usize) -> Result<LabeledComplex> {
    let gens = ideal.mingens();
    if gens.len() > cap {
        return Err(Error::ResourceCap(format!(
            "{} minimal generators exceed the cap of {cap}",
            gens.len()
        )));
    }
    let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let simplex = SimplicialComplex::simplex(names)?;
    LabeledComplex::new(simplex, gens.to_vec())
}

/// Every lcm of a nonempty subset of the distinct vertex labels. This is the
/// lattice the support criterion quantifies over; it equals the lcm lattice
/// of the ideal when the labels are exactly the minimal generators.
pub fn label_lattice(complex: &LabeledComplex, cap: usize) -> Result<LcmLattice> {
    let labels = complex.present_labels();
    if labels.is_empty() {
        return Err(Error::InvalidInput(
            "complex has no vertices, so its labels generate nothing".into(),
        ));
    }
    LcmLattice::from_atoms(&labels, cap)
}

/// True iff `Δ_{≤u}` is acyclic over the field for every `u ≠ 1` in the lcm
/// closure of the labels. The vertex labels must generate the ideal.
pub fn supports_resolution(
    complex: &LabeledComplex,
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: usize,
) -> Result<bool> {
    let labels = complex.present_labels();
    if labels.is_empty() {
        return Err(Error::InvalidInput("complex has no labeled vertices".into()));
    }
    let generated = minimal_generators(&labels)?;
    if generated != ideal.mingens() {
        return Err(Error::InvalidInput(format!(
            "vertex labels generate ({}), not {ideal}",
            generated.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    let lattice = label_lattice(complex, cap)?;
    let us: Vec<&Monomial> = lattice.nonunit_elements().collect();
    Ok(us
        .par_iter()
        .all(|u| is_acyclic(&complex.sub_leq(u), field)))
}

/// Minimality of a supported resolution: no covering pair of faces carries
/// the same label. Labels are monotone under inclusion, so checking covers
/// settles the condition for all nested pairs.
pub fn is_minimal_support(complex: &LabeledComplex) -> bool {
    for tau in complex.complex().faces() {
        if tau.is_empty() {
            continue;
        }
        let tau_label = complex.face_label(tau);
        for v in tau.vertices() {
            let sigma = tau.without_vertex(v);
            if complex.face_label(sigma) == tau_label {
                return false;
            }
        }
    }
    true
}

/// Multigraded betti numbers of `S/I` read off a supporting complex:
/// `β_{i,u} = dim H_{i-2}(Δ_{<u})` for `u` in the lcm lattice of `I`, plus
/// `β_0 = 1`. Errors if the complex does not support a resolution of `I`.
pub fn betti_from_complex(
    complex: &LabeledComplex,
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: usize,
) -> Result<BettiTable> {
    if !supports_resolution(complex, ideal, field, cap)? {
        return Err(Error::Precondition(format!(
            "complex does not support a free resolution of {ideal}"
        )));
    }
    let lattice = ideal.lattice(cap)?;
    let us: Vec<Monomial> = lattice.nonunit_elements().cloned().collect();
    let per_u: Vec<(Monomial, Vec<(usize, u64)>)> = us
        .into_par_iter()
        .map(|u| {
            let profile = reduced_homology(&complex.sub_lt(&u), field);
            let entries: Vec<(usize, u64)> = profile
                .nonzero_degrees()
                .into_iter()
                .map(|d| ((d + 2) as usize, profile.dim(d) as u64))
                .collect();
            (u, entries)
        })
        .collect();
    let mut multigraded: BTreeMap<(usize, Monomial), u64> = BTreeMap::new();
    multigraded.insert((0, ideal.context().unit()), 1);
    for (u, entries) in per_u {
        for (i, count) in entries {
            multigraded.insert((i, u.clone()), count);
        }
    }
    Ok(BettiTable::from_multigraded(
        Arc::clone(ideal.context()),
        field,
        multigraded,
    ))
}

/// The independent ground truth: betti numbers through the Taylor complex.
pub fn betti_oracle(ideal: &MonomialIdeal, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    let taylor = taylor_complex(ideal, cap)?;
    betti_from_complex(&taylor, ideal, field, cap)
}
