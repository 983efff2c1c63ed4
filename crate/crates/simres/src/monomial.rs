//! Monomials over a fixed variable context, monomial ideals with canonical
//! minimal generating sets, and lcm lattices.
//!
//! Exponents are arbitrary-precision ([`Nat`]), so degree-1000 regularity
//! experiments like `b^500*c*d^500` run without overflow.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exponent / degree scalar: a nonnegative arbitrary-precision integer.
pub type Nat = BigUint;

/// Default cap on the number of atoms in subset enumerations (lcm lattices,
/// Taylor complexes). 2^20 subsets is the most we enumerate without complaint.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Convenience conversion for literals in tests and builders.
pub fn nat(n: u64) -> Nat {
    Nat::from(n)
}

/// An ordered list of distinct variable names. All monomials carry a shared
/// reference to the context they live in; the declaration order is fixed for
/// the lifetime of every derived object.
#[derive(Debug, PartialEq, Eq)]
pub struct VarContext {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarContext {
    /// Builds a context from variable names. Names must be nonempty ASCII
    /// identifiers, pairwise distinct.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidInput("variable context must be nonempty".into()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !valid_name(n) {
                return Err(Error::InvalidInput(format!(
                    "invalid variable name {n:?}: expected an ASCII identifier"
                )));
            }
            if !seen.insert(n.clone()) {
                return Err(Error::InvalidInput(format!("duplicate variable name {n:?}")));
            }
        }
        Ok(Arc::new(VarContext { names }))
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The unit monomial 1 (all exponents zero).
    pub fn unit(self: &Arc<Self>) -> Monomial {
        Monomial {
            ctx: Arc::clone(self),
            exps: vec![Nat::zero(); self.num_vars()],
        }
    }

    /// The monomial x_i.
    pub fn variable(self: &Arc<Self>, i: usize) -> Monomial {
        let mut exps = vec![Nat::zero(); self.num_vars()];
        exps[i] = Nat::one();
        Monomial {
            ctx: Arc::clone(self),
            exps,
        }
    }

    /// Builds a monomial from `(variable index, exponent)` pairs; repeated
    /// indices accumulate.
    pub fn monomial(self: &Arc<Self>, pairs: &[(usize, u64)]) -> Monomial {
        let mut exps = vec![Nat::zero(); self.num_vars()];
        for &(i, e) in pairs {
            exps[i] += nat(e);
        }
        Monomial {
            ctx: Arc::clone(self),
            exps,
        }
    }

    /// Builds a monomial from an explicit exponent vector.
    pub fn monomial_from_exponents(self: &Arc<Self>, exps: Vec<Nat>) -> Result<Monomial> {
        if exps.len() != self.num_vars() {
            return Err(Error::InvalidInput(format!(
                "exponent vector has length {}, context has {} variables",
                exps.len(),
                self.num_vars()
            )));
        }
        Ok(Monomial {
            ctx: Arc::clone(self),
            exps,
        })
    }

    /// Parses a monomial written as factors `name` or `name^k` separated by
    /// whitespace or `*`, with `k` a positive integer. `1` denotes the unit.
    ///
    /// Errors carry a 1-based column offset into `s`.
    pub fn parse_monomial(self: &Arc<Self>, s: &str) -> Result<Monomial> {
        let mut exps = vec![Nat::zero(); self.num_vars()];
        let mut saw_factor = false;
        let mut col = 0usize;
        for piece in split_factors(s) {
            let (start, token) = piece;
            col = start + 1;
            if token == "1" {
                saw_factor = true;
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: Nat = e.parse().map_err(|_| {
                        Error::parse(1, col, format!("invalid exponent {e:?} in {token:?}"))
                    })?;
                    if e.is_zero() {
                        return Err(Error::parse(1, col, format!("exponent must be positive in {token:?}")));
                    }
                    (n, e)
                }
                None => (token, Nat::one()),
            };
            let idx = self.index_of(name).ok_or_else(|| {
                Error::parse(1, col, format!("unknown variable {name:?}"))
            })?;
            exps[idx] += exp;
            saw_factor = true;
        }
        if !saw_factor {
            return Err(Error::parse(1, col.max(1), "empty monomial".to_string()));
        }
        Ok(Monomial {
            ctx: Arc::clone(self),
            exps,
        })
    }
}

/// Splits a monomial expression into `(byte offset, token)` factors.
fn split_factors(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() || c == '*' {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

/// A monomial: a vector of nonnegative exponents over a [`VarContext`].
#[derive(Clone)]
pub struct Monomial {
    ctx: Arc<VarContext>,
    exps: Vec<Nat>,
}

impl Monomial {
    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn exponents(&self) -> &[Nat] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> &Nat {
        &self.exps[i]
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> Nat {
        self.exps.iter().sum()
    }

    /// The multidegree is the exponent vector itself.
    pub fn multidegree(&self) -> &[Nat] {
        &self.exps
    }

    /// Indices of the variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| !self.exps[i].is_zero()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(Zero::is_zero)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|e| *e <= Nat::one())
    }

    fn check_context(&self, other: &Monomial, op: &str) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{op} over {:?} and {:?}",
                self.ctx.names(),
                other.ctx.names()
            )))
        }
    }

    /// `self` divides `other` iff every exponent is componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ctx, other.ctx);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise max. Errors on a context mismatch.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_context(other, "lcm")?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.max(b).clone())
            .collect();
        Ok(Monomial {
            ctx: Arc::clone(&self.ctx),
            exps,
        })
    }

    /// Componentwise min. Errors on a context mismatch.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_context(other, "gcd")?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.min(b).clone())
            .collect();
        Ok(Monomial {
            ctx: Arc::clone(&self.ctx),
            exps,
        })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_context(other, "mul")?;
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Ok(Monomial {
            ctx: Arc::clone(&self.ctx),
            exps,
        })
    }

    /// Exact division; errors if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        self.check_context(other, "div")?;
        if !other.divides(self) {
            return Err(Error::InvalidInput(format!("{other} does not divide {self}")));
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Ok(Monomial {
            ctx: Arc::clone(&self.ctx),
            exps,
        })
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ctx, other.ctx);
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a.is_zero() || b.is_zero())
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx) && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded order: total degree first, then lexicographic on the exponent
    /// vector. Used for canonical generator lists and table keys.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.ctx, other.ctx);
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "{}", self.ctx.name(i))?;
            } else {
                write!(f, "{}^{}", self.ctx.name(i), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    // Monomials read better unescaped in test output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The inclusion-of-divisibility-minimal subset of a generator list:
/// pairwise non-dividing, generating the same ideal. Errors if a unit
/// monomial is present.
pub fn minimal_generators(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    if gens.iter().any(Monomial::is_unit) {
        return Err(Error::InvalidInput(
            "the unit monomial is not allowed as an ideal generator".into(),
        ));
    }
    if let Some(first) = gens.first() {
        for g in gens.iter().skip(1) {
            first.check_context(g, "minimal_generators")?;
        }
    }
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in sorted {
        // Sorted by degree, so any divisor of g has already been kept.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// A monomial ideal: the generators as given, plus the canonical minimal
/// generating set they determine.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ctx: Arc<VarContext>,
    generators: Vec<Monomial>,
    mingens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from a nonempty list of nonunit generators.
    pub fn new(gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("ideal needs at least one generator".into()));
        }
        let ctx = Arc::clone(gens[0].context());
        let mingens = minimal_generators(&gens)?;
        Ok(MonomialIdeal {
            ctx,
            generators: gens,
            mingens,
        })
    }

    /// Parses generators in the given context.
    pub fn parse(ctx: &Arc<VarContext>, gens: &[&str]) -> Result<Self> {
        let gens: Result<Vec<Monomial>> = gens.iter().map(|s| ctx.parse_monomial(s)).collect();
        Self::new(gens?)
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    /// The generators the ideal was constructed from.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// The unique minimal generating set, in graded-lex order.
    pub fn mingens(&self) -> &[Monomial] {
        &self.mingens
    }

    pub fn is_square_free(&self) -> bool {
        self.mingens.iter().all(Monomial::is_square_free)
    }

    /// Componentwise min over the minimal generators; independent of
    /// non-minimal generators.
    pub fn gcd(&self) -> Monomial {
        let mut acc = self.mingens[0].clone();
        for g in &self.mingens[1..] {
            acc = acc.gcd(g).expect("generators share a context");
        }
        acc
    }

    /// Monomial membership: true iff some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(&self.ctx, m.context());
        self.mingens.iter().any(|g| g.divides(m))
    }

    pub fn is_min_generator(&self, m: &Monomial) -> bool {
        self.mingens.iter().any(|g| g == m)
    }

    /// The ideal `I + (m)`.
    pub fn plus(&self, m: &Monomial) -> Result<Self> {
        let mut gens = self.mingens.clone();
        gens.push(m.clone());
        Self::new(gens)
    }

    /// The scaled ideal `vI` with every generator multiplied by `v`.
    pub fn scaled(&self, v: &Monomial) -> Result<Self> {
        let gens: Result<Vec<Monomial>> = self.mingens.iter().map(|g| g.mul(v)).collect();
        Self::new(gens?)
    }

    /// The lcm lattice of the minimal generators.
    pub fn lattice(&self, cap: usize) -> Result<LcmLattice> {
        LcmLattice::from_atoms(&self.mingens, cap)
    }

    /// lcm of all minimal generators (the top of the lcm lattice).
    pub fn lcm_of_mingens(&self) -> Monomial {
        let mut acc = self.mingens[0].clone();
        for g in &self.mingens[1..] {
            acc = acc.lcm(g).expect("generators share a context");
        }
        acc
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.mingens == other.mingens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.mingens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// All lcms of nonempty subsets of the atoms, plus the bottom element 1,
/// ordered by divisibility. Stored sorted in graded-lex order with the unit
/// first.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    atoms: Vec<Monomial>,
    elements: Vec<Monomial>,
}

impl LcmLattice {
    /// Closes the atom set under pairwise lcm. The atoms need not be
    /// pairwise non-dividing (membership tests against `mingens ∪ {m}` use
    /// that generality). Errors when there are more than `cap` distinct
    /// atoms.
    pub fn from_atoms(atoms: &[Monomial], cap: usize) -> Result<Self> {
        let mut distinct: Vec<Monomial> = atoms.to_vec();
        distinct.sort();
        distinct.dedup();
        if distinct.is_empty() {
            return Err(Error::InvalidInput("lcm lattice needs at least one atom".into()));
        }
        if distinct.len() > cap {
            return Err(Error::ResourceCap(format!(
                "{} atoms exceed the subset-enumeration cap of {cap}",
                distinct.len()
            )));
        }
        let ctx = Arc::clone(distinct[0].context());
        let mut seen: HashSet<Monomial> = HashSet::new();
        seen.insert(ctx.unit());
        for atom in &distinct {
            let mut next: Vec<Monomial> = Vec::new();
            for e in &seen {
                let l = e.lcm(atom)?;
                if !seen.contains(&l) {
                    next.push(l);
                }
            }
            seen.extend(next);
        }
        let mut elements: Vec<Monomial> = seen.into_iter().collect();
        elements.sort();
        Ok(LcmLattice {
            atoms: distinct,
            elements,
        })
    }

    pub fn atoms(&self) -> &[Monomial] {
        &self.atoms
    }

    /// All lattice elements, unit first, in graded-lex order.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// The elements other than the bottom 1.
    pub fn nonunit_elements(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter(|m| !m.is_unit())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The maximum element: lcm of all atoms.
    pub fn top(&self) -> Monomial {
        let mut acc = self.atoms[0].clone();
        for a in &self.atoms[1..] {
            acc = acc.lcm(a).expect("atoms share a context");
        }
        acc
    }
}
