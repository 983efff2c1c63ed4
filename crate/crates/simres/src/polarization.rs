//! Polarization: the degree-preserving passage from a monomial ideal to a
//! square-free ideal in a grid of variables, one level per exponent. A power
//! `x^a` becomes the product of the first `a` grid variables `x_1 ⋯ x_a`.
//! Polarization preserves betti numbers and commutes with expansion
//! membership, which reduces Cohen-Macaulay questions to the square-free
//! case.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expansion::CSpec;
use crate::monomial::{Monomial, MonomialIdeal, VarContext};

/// The variable grid of a polarization: for each base variable a column of
/// `heights[i]` fresh variables named `{base}_{level}`, ordered base-major.
#[derive(Clone, Debug)]
pub struct PolarContext {
    base: Arc<VarContext>,
    heights: Vec<u64>,
    grid: Arc<VarContext>,
    /// Start offset of each base variable's column in the grid.
    offsets: Vec<usize>,
}

impl PolarContext {
    /// Builds the grid for the given per-variable heights. A height-0
    /// variable gets no grid column; monomials using it cannot be
    /// polarized in this grid.
    pub fn new(base: &Arc<VarContext>, heights: Vec<u64>) -> Result<PolarContext> {
        if heights.len() != base.num_vars() {
            return Err(Error::InvalidInput(format!(
                "{} heights for {} variables",
                heights.len(),
                base.num_vars()
            )));
        }
        let mut names = Vec::new();
        let mut offsets = Vec::with_capacity(heights.len());
        for (i, &h) in heights.iter().enumerate() {
            offsets.push(names.len());
            for level in 1..=h {
                names.push(format!("{}_{}", base.name(i), level));
            }
        }
        let grid = VarContext::new(names)?;
        Ok(PolarContext {
            base: Arc::clone(base),
            heights,
            grid,
            offsets,
        })
    }

    /// Heights taken from the lcm of the minimal generators.
    pub fn for_ideal(ideal: &MonomialIdeal) -> Result<PolarContext> {
        Self::covering(ideal, &[])
    }

    /// Heights covering both the ideal and the extra monomials (membership
    /// tests polarize candidates that may exceed the generators).
    pub fn covering(ideal: &MonomialIdeal, extras: &[&Monomial]) -> Result<PolarContext> {
        let mut top = ideal.lcm_of_mingens();
        for m in extras {
            top = top.lcm(m)?;
        }
        let heights: Result<Vec<u64>> = top
            .exponents()
            .iter()
            .map(|e| {
                u64::try_from(e).map_err(|_| {
                    Error::ResourceCap(format!("exponent {e} too large to polarize"))
                })
            })
            .collect();
        Self::new(ideal.context(), heights?)
    }

    pub fn base(&self) -> &Arc<VarContext> {
        &self.base
    }

    pub fn grid(&self) -> &Arc<VarContext> {
        &self.grid
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    /// The square-free polarization: `x^a` selects the first `a` grid
    /// variables in x's column. Errors when an exponent exceeds the column
    /// height.
    pub fn polarize_monomial(&self, m: &Monomial) -> Result<Monomial> {
        if m.context() != &self.base {
            return Err(Error::ContextMismatch(
                "monomial lives outside the polarization's base context".into(),
            ));
        }
        let mut pairs = Vec::new();
        for (i, e) in m.exponents().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let e = u64::try_from(e).map_err(|_| {
                Error::InvalidInput(format!("exponent {e} exceeds the grid height"))
            })?;
            if e > self.heights[i] {
                return Err(Error::InvalidInput(format!(
                    "exponent {e} of {} exceeds the grid height {}",
                    self.base.name(i),
                    self.heights[i]
                )));
            }
            for level in 0..e {
                pairs.push((self.offsets[i] + level as usize, 1));
            }
        }
        Ok(self.grid.monomial(&pairs))
    }
}

/// Polarizes every minimal generator; the result is square-free in the grid
/// ring sized by the lcm of the generators.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarContext)> {
    let ctx = PolarContext::for_ideal(ideal)?;
    let gens: Result<Vec<Monomial>> = ideal
        .mingens()
        .iter()
        .map(|g| ctx.polarize_monomial(g))
        .collect();
    Ok((MonomialIdeal::new(gens?)?, ctx))
}

/// Evaluates expansion membership on both sides of polarization and reports
/// whether the verdicts agree (they always do). Heights are extended to
/// cover the candidate.
pub fn check_polar_commutes(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
) -> Result<bool> {
    if !ideal.is_min_generator(n) {
        return Err(Error::InvalidInput(format!(
            "{n} is not a minimal generator of {ideal}"
        )));
    }
    if m.is_unit() {
        return Err(Error::InvalidInput("candidate must be a nonunit monomial".into()));
    }
    let plain = CSpec::for_ideal(ideal, n)?.contains(m);

    let polar_ctx = PolarContext::covering(ideal, &[m])?;
    let gens: Result<Vec<Monomial>> = ideal
        .mingens()
        .iter()
        .map(|g| polar_ctx.polarize_monomial(g))
        .collect();
    let polar_ideal = MonomialIdeal::new(gens?)?;
    let polar_n = polar_ctx.polarize_monomial(n)?;
    let polar_m = polar_ctx.polarize_monomial(m)?;
    let polarized = CSpec::for_ideal(&polar_ideal, &polar_n)?.contains(&polar_m);
    Ok(plain == polarized)
}

/// gcd commutes with polarization; used as a sanity check in the tests and
/// kept public for the analyzer.
pub fn polarized_gcd_matches(ideal: &MonomialIdeal, ctx: &PolarContext) -> Result<bool> {
    let gens: Result<Vec<Monomial>> = ideal
        .mingens()
        .iter()
        .map(|g| ctx.polarize_monomial(g))
        .collect();
    let polar_ideal = MonomialIdeal::new(gens?)?;
    Ok(polar_ideal.gcd() == ctx.polarize_monomial(&ideal.gcd())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::FieldSpec;
    use crate::monomial::DEFAULT_ENUMERATION_CAP;
    use crate::resolution::betti_oracle;

    #[test]
    fn polarize_monomials() {
        let ctx = VarContext::new(["x1", "x2"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["x1^2 x2"]).unwrap();
        let pc = PolarContext::for_ideal(&ideal).unwrap();
        let pm = pc.polarize_monomial(&ctx.parse_monomial("x1^2 x2").unwrap()).unwrap();
        assert_eq!(pm.to_string(), "x1_1*x1_2*x2_1");
        assert!(pm.is_square_free());
        assert_eq!(pm.degree(), 3u32.into(), "polarization preserves degree");
    }

    #[test]
    fn polarize_ideals() {
        let ctx = VarContext::new(["a", "b"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^2 b", "a b^2"]).unwrap();
        let (polar, pc) = polarize_ideal(&ideal).unwrap();
        assert!(polar.is_square_free());
        assert_eq!(pc.grid().num_vars(), 4);
        let mut got: Vec<String> = polar.mingens().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["a_1*a_2*b_1".to_string(), "a_1*b_1*b_2".to_string()]);
        assert!(polarized_gcd_matches(&ideal, &pc).unwrap());

        // A square-free ideal polarizes to an isomorphic copy.
        let ctx = VarContext::new(["a", "b", "c"]).unwrap();
        let sf = MonomialIdeal::parse(&ctx, &["a b", "b c"]).unwrap();
        let (polar, _) = polarize_ideal(&sf).unwrap();
        assert_eq!(polar.mingens().len(), 2);
        assert!(polar.is_square_free());

        let ctx1 = VarContext::new(["x1"]).unwrap();
        let power = MonomialIdeal::parse(&ctx1, &["x1^2"]).unwrap();
        let (polar, _) = polarize_ideal(&power).unwrap();
        assert_eq!(polar.mingens()[0].to_string(), "x1_1*x1_2");
    }

    #[test]
    fn membership_commutes_with_polarization() {
        let ctx = VarContext::new(["a", "b"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^2 b", "a b^2"]).unwrap();
        let n = ctx.parse_monomial("a^2 b").unwrap();
        assert!(check_polar_commutes(&ideal, &n, &ctx.parse_monomial("a^2").unwrap()).unwrap());

        let ctx5 = VarContext::new(["a", "b", "c", "d", "e"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx5, &["a b c", "c d e", "a c e"]).unwrap();
        let n = ctx5.parse_monomial("a c e").unwrap();
        // Both sides reject ce, both sides accept ae; the check reports
        // agreement either way.
        assert!(check_polar_commutes(&ideal, &n, &ctx5.parse_monomial("c e").unwrap()).unwrap());
        assert!(check_polar_commutes(&ideal, &n, &ctx5.parse_monomial("a e").unwrap()).unwrap());
    }

    #[test]
    fn polarization_preserves_betti_totals() {
        let ctx = VarContext::new(["a", "b"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^2 b", "a b^2", "b^3"]).unwrap();
        let (polar, _) = polarize_ideal(&ideal).unwrap();
        let plain = betti_oracle(&ideal, FieldSpec::Rationals, DEFAULT_ENUMERATION_CAP).unwrap();
        let polarized = betti_oracle(&polar, FieldSpec::Rationals, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(plain.totals(), polarized.totals());
    }
}
