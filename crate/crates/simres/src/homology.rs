//! Reduced simplicial homology dimensions over an exact coefficient field.
//!
//! Boundary matrices are integer matrices with entries in {-1, 0, 1} built
//! from the augmented chain complex (the empty face sits in degree -1, so the
//! degree-0 boundary map is the all-ones augmentation row). Ranks are
//! computed exactly: fraction-free Bareiss elimination over big integers for
//! the rationals, and modular elimination for prime fields. No floating
//! point anywhere.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// The coefficient field: exact rationals or GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Validates the modulus of a prime field.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.cols + c] = v;
    }

    /// Matrix product, used by the boundary-of-boundary checks.
    pub fn multiply(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Exact rank over the chosen field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Rationals => rank_bareiss(self),
            FieldSpec::PrimeField(p) => rank_mod_p(self, p),
        }
    }
}

/// Fraction-free Gaussian elimination (Bareiss): the rank over the integers
/// equals the rank over the rationals. Intermediate entries are minors of
/// the input, so a fast i128 pass covers everything desk-sized; on overflow
/// the computation restarts with arbitrary-precision integers.
fn rank_bareiss(m: &Matrix) -> usize {
    rank_bareiss_i128(m).unwrap_or_else(|| rank_bareiss_big(m))
}

fn rank_bareiss_i128(m: &Matrix) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c) as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..m.cols {
        let Some(p) = (row..m.rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        for r in row + 1..m.rows {
            for c in col + 1..m.cols {
                let left = a[row][col].checked_mul(a[r][c])?;
                let right = a[r][col].checked_mul(a[row][c])?;
                a[r][c] = left.checked_sub(right)? / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        rank += 1;
        row += 1;
        if row == m.rows {
            break;
        }
    }
    Some(rank)
}

fn rank_bareiss_big(m: &Matrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..m.cols {
        let Some(p) = (row..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for r in row + 1..m.rows {
            for c in col + 1..m.cols {
                let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == m.rows {
            break;
        }
    }
    rank
}

/// Plain Gaussian elimination over GF(p).
fn rank_mod_p(m: &Matrix, p: u64) -> usize {
    let p128 = p as u128;
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| reduce(m.get(r, c))).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..m.cols {
        let pivot = (row..m.rows).find(|&r| a[r][col] % p != 0);
        let Some(piv) = pivot else { continue };
        a.swap(row, piv);
        let inv = mod_inverse(a[row][col], p);
        for c in col..m.cols {
            a[row][c] = ((a[row][c] as u128 * inv as u128) % p128) as u64;
        }
        for r in 0..m.rows {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col] as u128;
                for c in col..m.cols {
                    let sub = (factor * a[row][c] as u128) % p128;
                    a[r][c] = ((a[r][c] as u128 + p128 - sub) % p128) as u64;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == m.rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    let p128 = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p128;
        }
        base = base * base % p128;
        exp >>= 1;
    }
    acc as u64
}

/// Reduced homology dimensions by degree. Degrees outside the stored range
/// are zero; two profiles are equal when they agree in every degree.
#[derive(Clone, Debug)]
pub struct HomologyProfile {
    dims: HashMap<i64, usize>,
}

impl HomologyProfile {
    fn new(dims: HashMap<i64, usize>) -> Self {
        HomologyProfile { dims }
    }

    pub fn zero() -> Self {
        HomologyProfile {
            dims: HashMap::new(),
        }
    }

    /// dim of the reduced homology in degree `d` (0 outside the range).
    pub fn dim(&self, d: i64) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.values().all(|&v| v == 0)
    }

    /// The degrees with nonzero homology, sorted.
    pub fn nonzero_degrees(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .dims
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&d, _)| d)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.nonzero_degrees().last().copied()
    }
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        let degrees: std::collections::HashSet<i64> =
            self.dims.keys().chain(other.dims.keys()).copied().collect();
        degrees.iter().all(|&d| self.dim(d) == other.dim(d))
    }
}

impl Eq for HomologyProfile {}

/// The matrix of the boundary map from `d`-faces to `(d-1)`-faces with
/// alternating signs, in the augmented chain complex. Basis faces are sorted
/// by their vertex lists under the global vertex order, so the matrix is
/// deterministic. For `d = 0` this is the all-ones augmentation row onto the
/// single empty face.
pub fn boundary_matrix(complex: &SimplicialComplex, d: i64) -> Matrix {
    let domain = complex.faces_of_dim(d);
    let codomain = complex.faces_of_dim(d - 1);
    let index: HashMap<Face, usize> = codomain.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = Matrix::zeros(codomain.len(), domain.len());
    for (j, f) in domain.iter().enumerate() {
        let mut sign = 1i64;
        for v in f.vertices() {
            let sub = f.without_vertex(v);
            let i = index[&sub];
            m.set(i, j, sign);
            sign = -sign;
        }
    }
    m
}

/// Exact reduced homology over the field, degree by degree:
/// `dim H_d = #d-faces - rank(∂_d) - rank(∂_{d+1})`. The void complex has the
/// all-zero profile; the irrelevant complex has dimension 1 in degree -1.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let Some(dim) = complex.dim() else {
        return HomologyProfile::zero();
    };
    let mut face_counts: HashMap<i64, usize> = HashMap::new();
    for d in -1..=dim {
        face_counts.insert(d, complex.faces_of_dim(d).len());
    }
    let mut ranks: HashMap<i64, usize> = HashMap::new();
    for d in -1..=(dim + 1) {
        let r = if d == -1 || d > dim {
            0
        } else {
            boundary_matrix(complex, d).rank(field)
        };
        ranks.insert(d, r);
    }
    let mut dims = HashMap::new();
    for d in -1..=dim {
        let h = face_counts[&d] - ranks[&d] - ranks[&(d + 1)];
        dims.insert(d, h);
    }
    HomologyProfile::new(dims)
}

/// True iff every reduced homology dimension vanishes. The void complex is
/// acyclic; the irrelevant complex is not.
pub fn is_acyclic(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    reduced_homology(complex, field).is_trivial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(3).is_ok());
        assert!(FieldSpec::prime_field(101).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
    }

    #[test]
    fn augmentation_row_of_the_triangle() {
        let simplex = SimplicialComplex::simplex(["1", "2", "3"]).unwrap();
        let d0 = boundary_matrix(&simplex, 0);
        assert_eq!((d0.rows(), d0.cols()), (1, 3));
        assert!((0..3).all(|c| d0.get(0, c) == 1));

        let single = SimplicialComplex::simplex(["v"]).unwrap();
        let d0 = boundary_matrix(&single, 0);
        assert_eq!((d0.rows(), d0.cols()), (1, 1));
        assert_eq!(d0.get(0, 0), 1);
    }

    #[test]
    fn top_boundary_of_the_triangle() {
        // Lex-ordered edge basis [12, 13, 23]: the face 123 maps to
        // +{23} - {13} + {12}, written bottom-up as the column (1, -1, 1).
        // Other vertex orderings (such as the one printed in textbook
        // displays) permute the signs; the rank is 1 regardless.
        let simplex = SimplicialComplex::simplex(["1", "2", "3"]).unwrap();
        let d2 = boundary_matrix(&simplex, 2);
        assert_eq!((d2.rows(), d2.cols()), (3, 1));
        assert_eq!(
            (d2.get(0, 0), d2.get(1, 0), d2.get(2, 0)),
            (1, -1, 1)
        );
        assert_eq!(d2.rank(q()), 1);

        let d1 = boundary_matrix(&simplex, 1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(d1.rank(q()), 2);
    }

    #[test]
    fn boundary_of_boundary_is_zero() {
        let complexes = [
            SimplicialComplex::simplex(["1", "2", "3", "4"]).unwrap(),
            SimplicialComplex::from_named_facets(
                &["a", "b", "c", "d"],
                &[&["a", "b", "c"], &["b", "c", "d"], &["a", "d"]],
            )
            .unwrap(),
        ];
        for c in &complexes {
            for d in 0..=c.dim().unwrap() {
                let outer = boundary_matrix(c, d);
                let inner = boundary_matrix(c, d + 1);
                if inner.cols() > 0 {
                    assert!(outer.multiply(&inner).is_zero(), "∂∂ ≠ 0 at degree {d}");
                }
            }
        }
    }

    #[test]
    fn homology_of_basic_shapes() {
        let full = SimplicialComplex::simplex(["1", "2", "3"]).unwrap();
        assert!(is_acyclic(&full, q()));

        let boundary = SimplicialComplex::from_named_facets(
            &["1", "2", "3"],
            &[&["1", "2"], &["2", "3"], &["1", "3"]],
        )
        .unwrap();
        let h = reduced_homology(&boundary, q());
        assert_eq!(h.dim(1), 1);
        assert_eq!(h.dim(0), 0);
        assert_eq!(h.dim(-1), 0);
        assert!(!is_acyclic(&boundary, q()));

        let two_points =
            SimplicialComplex::from_named_facets(&["1", "2"], &[&["1"], &["2"]]).unwrap();
        let h = reduced_homology(&two_points, q());
        assert_eq!(h.dim(0), 1);
        assert!(!is_acyclic(&two_points, q()));

        let void = SimplicialComplex::void(["1"]);
        assert!(is_acyclic(&void, q()));
        assert_eq!(reduced_homology(&void, q()), HomologyProfile::zero());

        let irr = SimplicialComplex::irrelevant(["1"]);
        let h = reduced_homology(&irr, q());
        assert_eq!(h.dim(-1), 1);
        assert!(!is_acyclic(&irr, q()));
    }

    #[test]
    fn collapse_figure_has_a_circle_on_both_sides() {
        let gamma = SimplicialComplex::from_named_facets(
            &["v1", "v2", "a", "b"],
            &[&["v2", "a"], &["v2", "b"], &["a", "b"], &["v1", "v2"]],
        )
        .unwrap();
        let (delta, _) = gamma.collapse(Face::from_vertices([0])).unwrap();
        for c in [&gamma, &delta] {
            let h = reduced_homology(c, q());
            assert_eq!(h.dim(0), 0);
            assert_eq!(h.dim(1), 1);
        }
        assert_eq!(reduced_homology(&gamma, q()), reduced_homology(&delta, q()));
    }

    #[test]
    fn euler_characteristic_identity() {
        let complexes = [
            SimplicialComplex::simplex(["1", "2", "3", "4"]).unwrap(),
            SimplicialComplex::from_named_facets(
                &["1", "2", "3", "4"],
                &[&["1", "2"], &["2", "3"], &["3", "4"], &["1", "4"]],
            )
            .unwrap(),
            SimplicialComplex::from_named_facets(
                &["a", "b", "c", "d", "e"],
                &[&["a", "b", "c"], &["c", "d"], &["e"]],
            )
            .unwrap(),
        ];
        for c in &complexes {
            for field in [q(), FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
                let h = reduced_homology(c, field);
                let dim = c.dim().unwrap();
                let mut face_side = 0i64;
                let mut hom_side = 0i64;
                for d in 0..=dim {
                    let sign = if d % 2 == 0 { 1 } else { -1 };
                    face_side += sign * c.faces_of_dim(d).len() as i64;
                    hom_side += sign * h.dim(d) as i64;
                }
                // Reduced Euler characteristic also counts degree -1.
                hom_side -= h.dim(-1) as i64;
                assert_eq!(face_side - 1, hom_side, "Euler identity on {c:?} over {field}");
            }
        }
    }

    #[test]
    fn fields_agree_on_small_torsion_free_complexes() {
        // Exhaustive over all complexes on up to 4 labeled vertices: GF(2),
        // GF(3) and Q agree (no torsion at this size).
        let names = ["1", "2", "3", "4"];
        let subsets: Vec<Face> = (1u64..16).map(Face).collect();
        let mut stack: Vec<Vec<Face>> = vec![Vec::new()];
        let mut count = 0usize;
        while let Some(chosen) = stack.pop() {
            let start = chosen.last().map(|f| f.0 + 1).unwrap_or(1);
            for f in &subsets {
                if f.0 >= start && !chosen.iter().any(|g| g.is_subset_of(*f) || f.is_subset_of(*g)) {
                    let mut next = chosen.clone();
                    next.push(*f);
                    stack.push(next);
                }
            }
            if chosen.is_empty() {
                continue;
            }
            let c = SimplicialComplex::from_facets(names.iter().copied(), chosen).unwrap();
            let hq = reduced_homology(&c, q());
            let h2 = reduced_homology(&c, FieldSpec::PrimeField(2));
            let h3 = reduced_homology(&c, FieldSpec::PrimeField(3));
            assert_eq!(hq, h2, "GF(2) disagrees on {c:?}");
            assert_eq!(hq, h3, "GF(3) disagrees on {c:?}");
            count += 1;
        }
        assert!(count > 100, "enumerated {count} complexes");
    }
}
