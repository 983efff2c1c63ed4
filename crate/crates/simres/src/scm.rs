//! Cohen-Macaulay testing through links, and the sequential variant through
//! pure skeletons of the Stanley-Reisner complex.
//!
//! A complex is Cohen-Macaulay over the field when every link has vanishing
//! reduced homology below its dimension. An ideal is sequentially
//! Cohen-Macaulay when every pure skeleton of its Stanley-Reisner complex is
//! Cohen-Macaulay; non-square-free ideals are polarized first. Verdicts are
//! always reported together with the field, since the answer can depend on
//! the characteristic.

use rayon::prelude::*;

use crate::complex::{face_names, stanley_reisner_complex, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::expansion::c_contains;
use crate::homology::{reduced_homology, FieldSpec};
use crate::monomial::{Monomial, MonomialIdeal, VarContext};
use crate::polarization::polarize_ideal;

/// A face and homology degree witnessing a Cohen-Macaulay failure:
/// `dim H_j(lk(sigma)) = homology_dim ≠ 0` with `j < dim lk(sigma)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmCertificate {
    pub sigma: Vec<String>,
    pub j: i64,
    pub homology_dim: usize,
}

/// Verdict for one complex, with a certificate on failure.
#[derive(Clone, Debug)]
pub struct CmVerdict {
    pub cm: bool,
    pub certificate: Option<CmCertificate>,
}

/// Reisner-style check: for every face (the empty face included) the link
/// must have zero reduced homology strictly below its dimension. The first
/// failure in the deterministic face order is reported as the certificate.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<CmVerdict> {
    if complex.is_void() {
        return Err(Error::InvalidInput(
            "the void complex has no Cohen-Macaulay verdict".into(),
        ));
    }
    let faces = complex.faces();
    let failures: Vec<CmCertificate> = faces
        .par_iter()
        .filter_map(|&sigma| first_link_failure(complex, sigma, field))
        .collect();
    let certificate = failures.into_iter().min_by(|a, b| {
        (a.sigma.len(), &a.sigma, a.j).cmp(&(b.sigma.len(), &b.sigma, b.j))
    });
    Ok(CmVerdict {
        cm: certificate.is_none(),
        certificate,
    })
}

fn first_link_failure(
    complex: &SimplicialComplex,
    sigma: Face,
    field: FieldSpec,
) -> Option<CmCertificate> {
    let link = complex.link(sigma).expect("faces of the complex have links");
    let dim = link.dim()?;
    let profile = reduced_homology(&link, field);
    for j in -1..dim {
        let h = profile.dim(j);
        if h > 0 {
            return Some(CmCertificate {
                sigma: face_names(complex, sigma),
                j,
                homology_dim: h,
            });
        }
    }
    None
}

/// Per-skeleton result inside a sequential Cohen-Macaulay report.
#[derive(Clone, Debug)]
pub struct SkeletonReport {
    pub i: i64,
    pub cm: bool,
    pub certificate: Option<CmCertificate>,
}

/// The full sequential Cohen-Macaulay report: overall verdict, the field it
/// was computed over, whether the ideal was polarized first, and one entry
/// per pure skeleton.
#[derive(Clone, Debug)]
pub struct ScmReport {
    pub verdict: bool,
    pub field: FieldSpec,
    pub polarized: bool,
    pub skeletons: Vec<SkeletonReport>,
}

/// The monomial support of a monomial as a variable-index set; inverse to
/// [`face_monomial`] on square-free monomials.
pub fn support_set(m: &Monomial) -> Vec<usize> {
    m.support()
}

/// The square-free monomial with the given variable support.
pub fn face_monomial(ctx: &std::sync::Arc<VarContext>, vars: &[usize]) -> Monomial {
    let pairs: Vec<(usize, u64)> = vars.iter().map(|&v| (v, 1)).collect();
    ctx.monomial(&pairs)
}

/// Sequential Cohen-Macaulayness through pure skeletons: every skeleton of
/// the Stanley-Reisner complex, from dimension 0 up, must be Cohen-Macaulay.
/// Non-square-free ideals are polarized first (the certificate then carries
/// grid variable names).
pub fn is_sequentially_cm(ideal: &MonomialIdeal, field: FieldSpec) -> Result<ScmReport> {
    let (square_free, polarized) = if ideal.is_square_free() {
        (ideal.clone(), false)
    } else {
        (polarize_ideal(ideal)?.0, true)
    };
    let complex = stanley_reisner_complex(&square_free)?;
    let dim = complex.dim().ok_or_else(|| {
        Error::InvalidInput("Stanley-Reisner complex is void; the ideal is the whole ring".into())
    })?;
    let mut skeletons = Vec::new();
    let mut verdict = true;
    for i in 0..=dim {
        let skeleton = complex.pure_skeleton(i)?;
        let result = is_cohen_macaulay(&skeleton, field)?;
        verdict &= result.cm;
        skeletons.push(SkeletonReport {
            i,
            cm: result.cm,
            certificate: result.certificate,
        });
    }
    Ok(ScmReport {
        verdict,
        field,
        polarized,
        skeletons,
    })
}

/// Expansion preserves sequential Cohen-Macaulayness: for a member `m` of
/// the expansion set of a sequentially Cohen-Macaulay ideal, the report of
/// `I + (m)` must come back true. A false verdict ships the Reisner
/// certificate; it would contradict the preservation theorem.
pub fn verify_scm_preservation(
    ideal: &MonomialIdeal,
    n: &Monomial,
    m: &Monomial,
    field: FieldSpec,
) -> Result<ScmReport> {
    if !c_contains(ideal, n, m)? {
        return Err(Error::Precondition(format!(
            "{m} is not in the expansion set of {ideal} at {n}"
        )));
    }
    let base = is_sequentially_cm(ideal, field)?;
    if !base.verdict {
        return Err(Error::Precondition(format!(
            "{ideal} is not sequentially Cohen-Macaulay over {field}, so the preservation statement does not apply"
        )));
    }
    is_sequentially_cm(&ideal.plus(m)?, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::monomial::VarContext;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn support_and_face_monomial_are_inverse() {
        let ctx = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let cd = ctx.parse_monomial("c d").unwrap();
        assert_eq!(support_set(&cd), vec![2, 3]);
        assert_eq!(face_monomial(&ctx, &[0, 1]), ctx.parse_monomial("a b").unwrap());
        for vars in [vec![0], vec![1, 3], vec![0, 1, 2, 3]] {
            assert_eq!(support_set(&face_monomial(&ctx, &vars)), vars);
        }
    }

    #[test]
    fn cohen_macaulay_basic_shapes() {
        let glued = SimplicialComplex::from_named_facets(
            &["a", "b", "c", "d"],
            &[&["a", "c", "d"], &["b", "c", "d"]],
        )
        .unwrap();
        assert!(is_cohen_macaulay(&glued, q()).unwrap().cm);

        let two_edges = SimplicialComplex::from_named_facets(
            &["a", "b", "c", "d"],
            &[&["a", "b"], &["c", "d"]],
        )
        .unwrap();
        let verdict = is_cohen_macaulay(&two_edges, q()).unwrap();
        assert!(!verdict.cm);
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.sigma, Vec::<String>::new(), "the empty link is disconnected");
        assert_eq!(cert.j, 0);

        let simplex = SimplicialComplex::simplex(["1", "2", "3", "4"]).unwrap();
        assert!(is_cohen_macaulay(&simplex, q()).unwrap().cm);

        assert!(is_cohen_macaulay(&SimplicialComplex::void(["1"]), q()).is_err());
    }

    #[test]
    fn cones_preserve_cohen_macaulayness() {
        let complexes = [
            SimplicialComplex::from_named_facets(
                &["a", "b", "c", "d"],
                &[&["a", "b"], &["c", "d"]],
            )
            .unwrap(),
            SimplicialComplex::from_named_facets(
                &["a", "b", "c"],
                &[&["a", "b"], &["b", "c"], &["a", "c"]],
            )
            .unwrap(),
            SimplicialComplex::simplex(["1", "2"]).unwrap(),
        ];
        for c in &complexes {
            let coned = c.cone("apex").unwrap();
            assert_eq!(
                is_cohen_macaulay(c, q()).unwrap().cm,
                is_cohen_macaulay(&coned, q()).unwrap().cm,
                "cone changed the verdict of {c:?}"
            );
        }
    }

    #[test]
    fn sequential_cm_examples() {
        let ctx = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a b c", "a b d"]).unwrap();
        let report = is_sequentially_cm(&ideal, q()).unwrap();
        assert!(report.verdict);
        assert!(!report.polarized);
        assert_eq!(report.skeletons.len(), 3);

        let with_cd = MonomialIdeal::parse(&ctx, &["a b c", "a b d", "c d"]).unwrap();
        assert!(is_sequentially_cm(&with_cd, q()).unwrap().verdict);

        // Stanley-Reisner ideal of two disjoint triangles: the pure
        // 2-skeleton is disconnected.
        let complex = SimplicialComplex::from_named_facets(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "b", "c"], &["d", "e", "f"]],
        )
        .unwrap();
        let sr_ideal = crate::complex::stanley_reisner_ideal(&complex).unwrap();
        let report = is_sequentially_cm(&sr_ideal, q()).unwrap();
        assert!(!report.verdict);
        let skel2 = report.skeletons.iter().find(|s| s.i == 2).unwrap();
        assert!(!skel2.cm, "the pure 2-skeleton is disconnected");
        assert!(skel2.certificate.is_some());
    }

    #[test]
    fn preservation_on_the_square_free_example() {
        let ctx = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a b c", "a b d"]).unwrap();
        let n = ctx.parse_monomial("a b c").unwrap();
        let m = ctx.parse_monomial("c d").unwrap();
        let report = verify_scm_preservation(&ideal, &n, &m, q()).unwrap();
        assert!(report.verdict);
    }

    #[test]
    fn preservation_routes_through_polarization() {
        let ctx = VarContext::new(["a", "b"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a^2 b", "a b^2"]).unwrap();
        let n = ctx.parse_monomial("a^2 b").unwrap();
        let m = ctx.parse_monomial("a^2").unwrap();
        let report = verify_scm_preservation(&ideal, &n, &m, q()).unwrap();
        assert!(report.verdict);
        assert!(report.polarized);
    }

    #[test]
    fn top_skeleton_of_a_pure_complex_is_the_complex() {
        let ctx = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let ideal = MonomialIdeal::parse(&ctx, &["a b", "c d"]).unwrap();
        let complex = stanley_reisner_complex(&ideal).unwrap();
        let dim = complex.dim().unwrap();
        if complex.facets().iter().all(|f| f.dim() == dim) {
            assert_eq!(complex.pure_skeleton(dim).unwrap(), complex);
        }
    }
}
