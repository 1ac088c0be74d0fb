//! Biderivations: bilinear maps that are derivations in each argument.
//!
//! The space is computed directly as the nullspace of both Leibniz families
//! over all basis triples (`2·n⁴` equations in `n³` unknowns). The
//! normalized-wedge classification for `λ3 ≠ 0`, the two-parameter skew
//! family for `λ3 = 0` and the factorization through linear maps `φ, ψ` are
//! then checked against that space.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::algebra::{make_3pgq, wedge, Element, Params, StructureTensor};
use crate::derivation::{ad_wedge, is_derivation, LinearMap};
use crate::error::Result;
use crate::linalg::{Matrix, Subspace};
use crate::rational::{self, Rational};

/// `δ(e_i, e_j) = Σ_k t[i][j][k] e_k`, flattened `i`-major, then `j`, then `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearTensor {
    dim: usize,
    t: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Skew,
    Mixed,
}

impl BilinearTensor {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            t: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn from_flat(dim: usize, v: &[Rational]) -> Self {
        assert_eq!(
            v.len(),
            dim * dim * dim,
            "flattened tensor has wrong length"
        );
        Self { dim, t: v.to_vec() }
    }

    /// The tensor with `δ(e_i, e_j) = f(i, j)`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Element) -> Self {
        let mut t = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.dim(), dim, "dimension mismatch");
                t.extend(v.into_coords());
            }
        }
        Self { dim, t }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.t.clone()
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.t[(i * self.dim + j) * self.dim + k]
    }

    /// `δ(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> Element {
        let s = (i * self.dim + j) * self.dim;
        Element::new(self.t[s..s + self.dim].to_vec())
    }

    pub fn apply(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim;
        let mut out = Element::zero(n);
        for (i, xi) in x.coords().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.coords().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                out = &out + &self.value(i, j).scale(&(xi * yj));
            }
        }
        out
    }

    /// `(x, y) ↦ δ(y, x)`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.value(j, i))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |i, j| &self.value(i, j) + &other.value(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |i, j| &self.value(i, j) - &other.value(i, j))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            dim: self.dim,
            t: self.t.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Zero::is_zero)
    }

    /// `y ↦ δ(e_i, y)`.
    pub fn left_slice(&self, i: usize) -> LinearMap {
        LinearMap::from_columns(self.dim, |j| self.value(i, j))
    }

    /// `x ↦ δ(x, e_j)`.
    pub fn right_slice(&self, j: usize) -> LinearMap {
        LinearMap::from_columns(self.dim, |i| self.value(i, j))
    }

    pub fn symmetry(&self) -> Symmetry {
        let t = self.transpose();
        if &t == self {
            Symmetry::Symmetric
        } else if t == self.scale(&rational::int(-1)) {
            Symmetry::Skew
        } else {
            Symmetry::Mixed
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<Vec<String>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| rational::to_strings(self.value(i, j).coords()))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for BilinearTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearTensor{:?}", self.to_strings())
    }
}

impl Serialize for BilinearTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Both Leibniz identities on every basis triple:
/// `δ(xy, z) = x δ(y, z) + δ(x, z) y` and `δ(x, yz) = y δ(x, z) + δ(x, y) z`.
pub fn is_biderivation(sc: &StructureTensor, d: &BilinearTensor) -> bool {
    let n = sc.dim();
    assert_eq!(d.dim(), n, "dimension mismatch");
    let e = |i| sc.basis(i);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let (x, y, z) = (e(a), e(b), e(c));
                let first = d.apply(&sc.multiply(&x, &y), &z)
                    == &sc.multiply(&x, &d.apply(&y, &z)) + &sc.multiply(&d.apply(&x, &z), &y);
                let second = d.apply(&x, &sc.multiply(&y, &z))
                    == &sc.multiply(&y, &d.apply(&x, &z)) + &sc.multiply(&d.apply(&x, &y), &z);
                first && second
            })
        })
    })
}

fn biderivation_constraints(sc: &StructureTensor) -> Matrix {
    let n = sc.dim();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let c = |i, j, k| sc.coeff(i, j, k);
    let mut rows = Vec::with_capacity(2 * n * n * n * n);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for k in 0..n {
                    // δ(e_a e_b, e_c) − e_a δ(e_b, e_c) − δ(e_a, e_c) e_b
                    let mut first = vec![Rational::zero(); n * n * n];
                    // δ(e_a, e_b e_c) − e_b δ(e_a, e_c) − δ(e_a, e_b) e_c
                    let mut second = vec![Rational::zero(); n * n * n];
                    for m in 0..n {
                        first[idx(m, cc, k)] += c(a, b, m);
                        first[idx(b, cc, m)] -= c(a, m, k);
                        first[idx(a, cc, m)] -= c(m, b, k);
                        second[idx(a, m, k)] += c(b, cc, m);
                        second[idx(a, cc, m)] -= c(b, m, k);
                        second[idx(a, b, m)] -= c(m, cc, k);
                    }
                    rows.push(first);
                    rows.push(second);
                }
            }
        }
    }
    Matrix::from_rows(n * n * n, rows)
}

/// `BDer(A)` as a subspace of flattened tensors.
pub fn biderivation_space(sc: &StructureTensor) -> Subspace {
    biderivation_constraints(sc).nullspace()
}

fn tensor_dim(s: &Subspace) -> usize {
    let n = (1..=s.ambient_dim())
        .find(|n| n * n * n >= s.ambient_dim())
        .unwrap_or(0);
    assert_eq!(
        n * n * n,
        s.ambient_dim(),
        "ambient dimension is not a cube"
    );
    n
}

/// Images of a biderivation space under `δ ↦ δ + δᵀ` and `δ ↦ δ − δᵀ`.
pub fn split_symmetric_skew(s: &Subspace) -> (Subspace, Subspace) {
    let n = tensor_dim(s);
    let tensors: Vec<BilinearTensor> = s
        .basis()
        .iter()
        .map(|v| BilinearTensor::from_flat(n, v))
        .collect();
    let sym = tensors.iter().map(|d| d.add(&d.transpose()).flatten());
    let skew = tensors.iter().map(|d| d.sub(&d.transpose()).flatten());
    (
        Subspace::span(s.ambient_dim(), sym),
        Subspace::span(s.ambient_dim(), skew),
    )
}

/// The tensor of `(x, y) ↦ x̃ ∧ ỹ` (normalized wedge).
pub fn wedge_tensor(p: &Params) -> Result<BilinearTensor> {
    p.require_l1("wedge_tensor")?;
    let mut values = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            values.push(wedge(p, &Element::basis(4, i), &Element::basis(4, j))?);
        }
    }
    Ok(BilinearTensor::from_fn(4, |i, j| values[i * 4 + j].clone()))
}

/// `rows[0]·(x2y3 − x3y2) − rows[1]·(x1y3 − x3y1) + rows[2]·(x1y2 − x2y1)`:
/// a determinant whose first row holds elements and whose other rows hold
/// the vector parts of `x` and `y`.
fn determinant_tensor(rows: [Element; 3]) -> BilinearTensor {
    BilinearTensor::from_fn(4, |i, j| {
        let (x, y) = (Element::basis(4, i), Element::basis(4, j));
        let (x, y) = (x.coords(), y.coords());
        let minor = |a: usize, b: usize| &x[a] * &y[b] - &x[b] * &y[a];
        &(&rows[0].scale(&minor(2, 3)) - &rows[1].scale(&minor(1, 3)))
            + &rows[2].scale(&minor(1, 2))
    })
}

/// The two skew-symmetric families at `λ3 = 0`: determinants with first
/// rows `(0, (λ2/λ1) e2, e3)` and `(0, −e3, e2)`.
pub fn skew_families_lambda3_zero(p: &Params) -> Result<[BilinearTensor; 2]> {
    p.require_l1("skew_families_lambda3_zero")?;
    let e = |i| Element::basis(4, i);
    Ok([
        determinant_tensor([Element::zero(4), e(2).scale(&(&p.l2 / &p.l1)), e(3)]),
        determinant_tensor([Element::zero(4), -&e(3), e(2)]),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct BiderivationReport {
    pub params: Params,
    pub dim: usize,
    pub generator_matches_wedge: bool,
}

/// For `λ3 ≠ 0`: the biderivations are exactly the multiples of the wedge.
pub fn verify_biderivation_theorem(p: &Params) -> Result<BiderivationReport> {
    p.require_l3_nonzero("verify_biderivation_theorem")?;
    p.require_l1l2("verify_biderivation_theorem")?;
    let space = biderivation_space(&make_3pgq(p));
    let wedge_line = Subspace::span(64, [wedge_tensor(p)?.flatten()]);
    Ok(BiderivationReport {
        params: p.clone(),
        dim: space.dim(),
        generator_matches_wedge: space.dim() == 1 && space == wedge_line,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SkewReport {
    pub params: Params,
    pub skew_dim: usize,
    pub family_matches: bool,
}

/// For `λ3 = 0`: the skew part of `BDer` is spanned by the two determinant
/// families.
pub fn verify_skew_lambda3_zero(p: &Params) -> Result<SkewReport> {
    p.require_l3_zero("verify_skew_lambda3_zero")?;
    p.require_l1l2("verify_skew_lambda3_zero")?;
    let (_, skew) = split_symmetric_skew(&biderivation_space(&make_3pgq(p)));
    let family = Subspace::span(64, skew_families_lambda3_zero(p)?.map(|t| t.flatten()));
    Ok(SkewReport {
        params: p.clone(),
        skew_dim: skew.dim(),
        family_matches: skew.dim() == 2 && skew == family,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetricReport {
    pub params: Params,
    pub dim: usize,
    pub pattern_ok: bool,
    #[serde(skip)]
    pub space: Subspace,
}

/// Whether the partial maps `D_i = δ(e_i, ·)` of a symmetric biderivation
/// at `λ3 = 0` have the six-parameter shape (`k = λ2/λ1`):
/// `D0 = 0`; rows 0 and 1 of every `D_i` vanish; and rows 2, 3 read
/// `D1: (0, a1, d1, −k c1), (0, b1, c1, d1)`,
/// `D2: (0, d1, d2, −k c2), (0, c1, c2, d2)`,
/// `D3: (0, −k c1, −k c2, −k d2), (0, d1, d2, −k c2)`.
pub fn matches_symmetric_pattern(p: &Params, d: &BilinearTensor) -> Result<bool> {
    p.require_l1("matches_symmetric_pattern")?;
    let k = &p.l2 / &p.l1;
    let slices: Vec<LinearMap> = (0..4).map(|i| d.left_slice(i)).collect();
    let s = |i: usize, r: usize, c: usize| slices[i].entry(r, c).clone();
    let (a1, b1, d1, c1) = (s(1, 2, 1), s(1, 3, 1), s(1, 2, 2), s(1, 3, 2));
    let (d2, c2) = (s(2, 2, 2), s(2, 3, 2));
    let z = Rational::zero;
    let lower = |r2: [Rational; 4], r3: [Rational; 4]| {
        let mut rows = vec![vec![z(); 4], vec![z(); 4]];
        rows.push(r2.to_vec());
        rows.push(r3.to_vec());
        LinearMap::new(Matrix::from_rows(4, rows))
    };
    let expected = [
        LinearMap::zero(4),
        lower(
            [z(), a1, d1.clone(), -&k * &c1],
            [z(), b1, c1.clone(), d1.clone()],
        ),
        lower(
            [z(), d1.clone(), d2.clone(), -&k * &c2],
            [z(), c1.clone(), c2.clone(), d2.clone()],
        ),
        lower(
            [z(), -&k * &c1, -&k * &c2, -&k * &d2],
            [z(), d1, d2, -&k * &c2],
        ),
    ];
    Ok(slices.iter().zip(&expected).all(|(a, b)| a == b))
}

/// The symmetric biderivations at `λ3 = 0`, with the pattern check applied
/// to every canonical basis element. No dimension is asserted.
pub fn symmetric_family_lambda3_zero(p: &Params) -> Result<SymmetricReport> {
    p.require_l3_zero("symmetric_family_lambda3_zero")?;
    p.require_l1l2("symmetric_family_lambda3_zero")?;
    let (sym, _) = split_symmetric_skew(&biderivation_space(&make_3pgq(p)));
    let mut pattern_ok = true;
    for v in sym.basis() {
        pattern_ok &= matches_symmetric_pattern(p, &BilinearTensor::from_flat(4, v))?;
    }
    Ok(SymmetricReport {
        params: p.clone(),
        dim: sym.dim(),
        pattern_ok,
        space: sym,
    })
}

/// Linear maps `φ, ψ` into the vector part with
/// `δ(x, y) = φ(x) ∧ ỹ = x̃ ∧ ψ(y)`.
#[derive(Clone, Debug)]
pub struct WedgeFactorization {
    pub phi: LinearMap,
    pub psi: LinearMap,
    /// The common scalar when `φ(e_i) = ψ(e_i) = μ e_i` for `i = 1, 2, 3`.
    pub mu: Option<Rational>,
}

/// Coordinates of `target` in the span of `maps`, if it lies there.
fn coords_in_span(maps: &[LinearMap], target: &LinearMap) -> Option<Vec<Rational>> {
    let cols: Vec<Vec<Rational>> = maps.iter().map(LinearMap::flatten).collect();
    let rows: Vec<Vec<Rational>> = (0..target.flatten().len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    Matrix::from_rows(maps.len(), rows).solve(&target.flatten())
}

/// Recovers `φ` and `ψ` from a biderivation by writing each partial map in
/// the basis `ad_{∧,e1}, ad_{∧,e2}, ad_{∧,e3}`. `None` when some partial map
/// is not of that form.
pub fn factor_through_wedge(p: &Params, d: &BilinearTensor) -> Result<Option<WedgeFactorization>> {
    p.require_l1("factor_through_wedge")?;
    let ads = (1..4)
        .map(|m| ad_wedge(p, &Element::basis(4, m)))
        .collect::<Result<Vec<_>>>()?;
    let neg_ads: Vec<LinearMap> = ads.iter().map(|a| a.scale(&rational::int(-1))).collect();
    let to_vector = |c: Vec<Rational>| {
        let mut v = vec![Rational::zero()];
        v.extend(c);
        Element::new(v)
    };
    let mut phi_cols = Vec::with_capacity(4);
    let mut psi_cols = Vec::with_capacity(4);
    for i in 0..4 {
        // δ(e_i, ·) = ad_{∧,φ(e_i)};  δ(·, e_i) = −ad_{∧,ψ(e_i)}
        let Some(f) = coords_in_span(&ads, &d.left_slice(i)) else {
            return Ok(None);
        };
        let Some(g) = coords_in_span(&neg_ads, &d.right_slice(i)) else {
            return Ok(None);
        };
        phi_cols.push(to_vector(f));
        psi_cols.push(to_vector(g));
    }
    let phi = LinearMap::from_columns(4, |c| phi_cols[c].clone());
    let psi = LinearMap::from_columns(4, |c| psi_cols[c].clone());
    let mu = phi.entry(1, 1).clone();
    let scalar = LinearMap::from_columns(4, |c| {
        if c == 0 {
            Element::zero(4)
        } else {
            Element::basis(4, c).scale(&mu)
        }
    });
    let uniform = (1..4).all(|i| {
        phi.apply(&Element::basis(4, i)) == scalar.apply(&Element::basis(4, i))
            && psi.apply(&Element::basis(4, i)) == scalar.apply(&Element::basis(4, i))
    });
    Ok(Some(WedgeFactorization {
        phi,
        psi,
        mu: uniform.then_some(mu),
    }))
}

/// Every left and right partial map is a derivation.
pub fn slices_are_derivations(sc: &StructureTensor, d: &BilinearTensor) -> bool {
    (0..sc.dim())
        .all(|i| is_derivation(sc, &d.left_slice(i)) && is_derivation(sc, &d.right_slice(i)))
}

#[derive(Clone, Debug, Serialize)]
pub struct TaggedTensor {
    pub symmetry: Symmetry,
    pub tensor: BilinearTensor,
}

/// A basis of `BDer` assembled from the symmetric part followed by the skew
/// part, each element tagged.
pub fn tagged_basis(s: &Subspace) -> Vec<TaggedTensor> {
    let n = tensor_dim(s);
    let (sym, skew) = split_symmetric_skew(s);
    sym.basis()
        .iter()
        .chain(skew.basis())
        .map(|v| {
            let tensor = BilinearTensor::from_flat(n, v);
            TaggedTensor {
                symmetry: tensor.symmetry(),
                tensor,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(a: i64, b: i64, c: i64) -> Params {
        Params::from_ints(a, b, c)
    }

    fn e(i: usize) -> Element {
        Element::basis(4, i)
    }

    #[test]
    fn is_biderivation_examples() {
        let h = p(1, 1, 1);
        let sc = make_3pgq(&h);
        assert!(is_biderivation(&sc, &BilinearTensor::zero(4)));
        assert!(is_biderivation(&sc, &wedge_tensor(&h).unwrap()));
        let product = BilinearTensor::from_fn(4, |i, j| sc.basis_product(i, j));
        assert!(!is_biderivation(&sc, &product));
        // e0·e0 = e0 but e0·δ(e0,e0) + δ(e0,e0)·e0 = 2e0
        assert_ne!(
            product.apply(&sc.multiply(&e(0), &e(0)), &e(0)),
            product.value(0, 0).scale(&int(2))
        );
    }

    #[test]
    fn constraint_nullspace_agrees_with_direct_check() {
        for params in [p(1, 1, 1), p(1, -1, 0)] {
            let sc = make_3pgq(&params);
            for v in biderivation_space(&sc).basis() {
                let d = BilinearTensor::from_flat(4, v);
                assert!(is_biderivation(&sc, &d));
                assert!(slices_are_derivations(&sc, &d));
            }
        }
    }

    #[test]
    fn biderivation_space_dimensions() {
        for params in [p(1, 1, 1), p(2, 3, 5)] {
            let s = biderivation_space(&make_3pgq(&params));
            assert_eq!(s.dim(), 1);
            assert_eq!(
                s,
                Subspace::span(64, [wedge_tensor(&params).unwrap().flatten()])
            );
        }
        let semi = p(1, 1, 0);
        let s = biderivation_space(&make_3pgq(&semi));
        let family = Subspace::span(
            64,
            skew_families_lambda3_zero(&semi)
                .unwrap()
                .map(|t| t.flatten()),
        );
        assert!(family.is_subspace_of(&s));
        assert_eq!(s.dim(), 8);
    }

    #[test]
    fn split_examples() {
        let s = biderivation_space(&make_3pgq(&p(1, 1, 1)));
        let (sym, skew) = split_symmetric_skew(&s);
        assert_eq!((sym.dim(), skew.dim()), (0, 1));

        let (sym, skew) = split_symmetric_skew(&biderivation_space(&make_3pgq(&p(1, 1, 0))));
        assert_eq!(skew.dim(), 2);
        assert!(sym.intersect(&skew).is_zero());

        let (a, b) = split_symmetric_skew(&Subspace::zero(64));
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn split_parts_are_complementary() {
        for params in [p(1, 1, 0), p(2, 3, 0), p(1, 1, -1)] {
            let s = biderivation_space(&make_3pgq(&params));
            let (sym, skew) = split_symmetric_skew(&s);
            assert_eq!(sym.dim() + skew.dim(), s.dim());
            assert_eq!(sym.sum(&skew), s);
            assert!(sym.intersect(&skew).is_zero());
        }
    }

    #[test]
    fn wedge_tensor_examples() {
        let t = wedge_tensor(&p(1, 1, 1)).unwrap();
        assert_eq!(t.value(1, 2), e(3));
        assert_eq!(t.value(2, 1), -&e(3));
        for params in [p(1, 1, 1), p(-2, 3, 0)] {
            let t = wedge_tensor(&params).unwrap();
            for i in 0..4 {
                assert!(t.value(0, i).is_zero());
                assert!(t.value(i, 0).is_zero());
            }
        }
        assert!(wedge_tensor(&p(0, 1, 1)).is_err());
    }

    #[test]
    fn biderivation_theorem_examples() {
        for params in [p(1, 1, 1), p(1, 1, -1), p(5, -7, 2)] {
            let r = verify_biderivation_theorem(&params).unwrap();
            assert_eq!(r.dim, 1);
            assert!(r.generator_matches_wedge, "{params}");
        }
        assert!(verify_biderivation_theorem(&p(1, 1, 0)).is_err());
    }

    #[test]
    fn skew_theorem_examples() {
        for params in [p(1, 1, 0), p(1, -1, 0), p(2, 3, 0)] {
            let r = verify_skew_lambda3_zero(&params).unwrap();
            assert_eq!(r.skew_dim, 2);
            assert!(r.family_matches, "{params}");
        }
        assert!(verify_skew_lambda3_zero(&p(1, 1, 1)).is_err());
    }

    #[test]
    fn symmetric_family_examples() {
        for params in [p(1, 1, 0), p(1, -1, 0)] {
            let r = symmetric_family_lambda3_zero(&params).unwrap();
            assert!(r.dim <= 6);
            assert!(r.pattern_ok, "{params}");
            let (_, skew) = split_symmetric_skew(&biderivation_space(&make_3pgq(&params)));
            assert!(r.space.intersect(&skew).is_zero());
        }
        // a skew tensor does not fit the symmetric shape
        let params = p(1, 1, 0);
        let [f1, _] = skew_families_lambda3_zero(&params).unwrap();
        assert!(!matches_symmetric_pattern(&params, &f1).unwrap());
    }

    #[test]
    fn biderivations_vanish_on_identity() {
        for params in [p(1, 1, 1), p(1, 1, 0), p(3, -1, 2)] {
            let s = biderivation_space(&make_3pgq(&params));
            for v in s.basis() {
                let d = BilinearTensor::from_flat(4, v);
                for i in 0..4 {
                    assert!(d.value(0, i).is_zero() && d.value(i, 0).is_zero());
                }
            }
        }
    }

    #[test]
    fn generator_factors_through_wedge() {
        for params in [p(1, 1, 1), p(2, 3, 5), p(-3, 1, 4)] {
            let s = biderivation_space(&make_3pgq(&params));
            let d = BilinearTensor::from_flat(4, &s.basis()[0]);
            let f = factor_through_wedge(&params, &d)
                .unwrap()
                .expect("partial maps are inner");
            let mu = f.mu.expect("φ and ψ act as one scalar");
            assert_eq!(d, wedge_tensor(&params).unwrap().scale(&mu));
            let x = Element::from_ints(&[1, 2, -1, 3]);
            let y = Element::from_ints(&[0, -1, 4, 1]);
            assert_eq!(
                d.apply(&x, &y),
                wedge(&params, &f.phi.apply(&x), &y).unwrap()
            );
            assert_eq!(
                d.apply(&x, &y),
                wedge(&params, &x, &f.psi.apply(&y)).unwrap()
            );
        }
    }

    #[test]
    fn symmetry_tags() {
        let h = p(1, 1, 1);
        assert_eq!(wedge_tensor(&h).unwrap().symmetry(), Symmetry::Skew);
        let tags = tagged_basis(&biderivation_space(&make_3pgq(&p(1, 1, 0))));
        assert_eq!(tags.len(), 8);
        assert_eq!(
            tags.iter().filter(|t| t.symmetry == Symmetry::Skew).count(),
            2
        );
        assert_eq!(
            tags.iter()
                .filter(|t| t.symmetry == Symmetry::Symmetric)
                .count(),
            6
        );
        let sc = make_3pgq(&h);
        let product = BilinearTensor::from_fn(4, |i, j| sc.basis_product(i, j));
        assert_eq!(product.symmetry(), Symmetry::Mixed);
    }
}
