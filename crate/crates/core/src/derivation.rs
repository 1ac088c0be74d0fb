//! Derivations, local derivations and 2-local derivations.
//!
//! A linear map `D` is stored as the matrix acting on coordinate columns:
//! `D[r][c]` is the `e_r` coordinate of `D(e_c)`. Flattening is row-major.
//!
//! The derivation algebra is always obtained as a nullspace of the Leibniz
//! constraints on basis pairs; the closed forms (the matrix pattern and the
//! normalized-wedge basis) are only ever compared against it.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::algebra::{make_3pgq, wedge, Element, Params, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap(Matrix);

impl LinearMap {
    pub fn new(m: Matrix) -> Self {
        assert_eq!(m.rows(), m.cols(), "linear maps are square");
        Self(m)
    }

    pub fn zero(dim: usize) -> Self {
        Self(Matrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(Matrix::identity(dim))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(Matrix::from_ints(rows))
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn from_flat(dim: usize, v: &[Rational]) -> Self {
        Self(Matrix::from_vec(dim, dim, v.to_vec()))
    }

    /// The map whose `c`-th column is `f(e_c)`.
    pub fn from_columns(dim: usize, f: impl Fn(usize) -> Element) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for c in 0..dim {
            for (r, v) in f(c).into_coords().into_iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn entry(&self, r: usize, c: usize) -> &Rational {
        &self.0[(r, c)]
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.0.entries().to_vec()
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::new(self.0.mul_vec(x.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        Self(self.0.mul(&other.0))
    }

    /// `self ∘ other − other ∘ self`.
    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        Self(self.compose(other).0.sub(&other.compose(self).0))
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        Self(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        Self(self.0.sub(&other.0))
    }

    pub fn scale(&self, s: &Rational) -> LinearMap {
        Self(self.0.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.dim())
            .map(|r| rational::to_strings(self.0.row(r)))
            .collect()
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap{:?}", self.to_strings())
    }
}

impl Serialize for LinearMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Linear combination `Σ coeffs[b] · maps[b]`.
pub(crate) fn combine(dim: usize, maps: &[LinearMap], coeffs: &[Rational]) -> LinearMap {
    maps.iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(LinearMap::zero(dim), |acc, (m, c)| acc.add(&m.scale(c)))
}

/// Point/value pairs prescribing a map on finitely many points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueAssignment {
    entries: Vec<(Element, Element)>,
}

impl ValueAssignment {
    pub fn new(entries: Vec<(Element, Element)>) -> Result<Self> {
        for (i, (p, _)) in entries.iter().enumerate() {
            if entries[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::RepeatedPoint(p.to_string()));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(Element, Element)] {
        &self.entries
    }
}

/// Leibniz identity `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)` on all basis pairs.
pub fn is_derivation(sc: &StructureTensor, d: &LinearMap) -> bool {
    let n = sc.dim();
    assert_eq!(d.dim(), n, "dimension mismatch");
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (ei, ej) = (sc.basis(i), sc.basis(j));
            d.apply(&sc.basis_product(i, j))
                == &sc.multiply(&d.apply(&ei), &ej) + &sc.multiply(&ei, &d.apply(&ej))
        })
    })
}

/// The `n²·n` Leibniz constraints on the flattened unknown `D`.
fn leibniz_constraints(sc: &StructureTensor) -> Matrix {
    let n = sc.dim();
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for m in 0..n {
                    row[idx(k, m)] += sc.coeff(i, j, m);
                }
                for r in 0..n {
                    row[idx(r, i)] -= sc.coeff(r, j, k);
                    row[idx(r, j)] -= sc.coeff(i, r, k);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(n * n, rows)
}

/// `Der(A)` as a subspace of flattened `n × n` matrices.
pub fn derivation_space(sc: &StructureTensor) -> Subspace {
    leibniz_constraints(sc).nullspace()
}

/// The derivation algebra of one structure tensor, with its canonical basis
/// unpacked into maps. Reuse it when asking many questions of one algebra.
#[derive(Clone, Debug)]
pub struct Derivations {
    dim: usize,
    space: Subspace,
    basis: Vec<LinearMap>,
}

impl Derivations {
    pub fn compute(sc: &StructureTensor) -> Self {
        let space = derivation_space(sc);
        let basis = space
            .basis()
            .iter()
            .map(|v| LinearMap::from_flat(sc.dim(), v))
            .collect();
        Self {
            dim: sc.dim(),
            space,
            basis,
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, d: &LinearMap) -> bool {
        self.space.contains(&d.flatten())
    }

    pub fn combine(&self, coeffs: &[Rational]) -> LinearMap {
        combine(self.dim, &self.basis, coeffs)
    }

    /// `{D(v) : D ∈ Der}`.
    pub fn image_subspace(&self, v: &Element) -> Subspace {
        Subspace::span(
            self.dim,
            self.basis.iter().map(|d| d.apply(v).into_coords()),
        )
    }

    /// Linear maps `Δ` with `Δ(v) ∈ {D(v) : D ∈ Der}` for every probe `v`.
    pub fn probe_space(&self, probes: &[Element]) -> Subspace {
        assert!(!probes.is_empty(), "at least one probe is required");
        let n = self.dim;
        let mut rows = Vec::new();
        for v in probes {
            // each functional w killing the orbit gives w · Δ(v) = 0
            for w in self.image_subspace(v).annihilator().basis() {
                let mut row = vec![Rational::zero(); n * n];
                for (r, wr) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (c, vc) in v.coords().iter().enumerate() {
                        row[r * n + c] = wr * vc;
                    }
                }
                rows.push(row);
            }
        }
        Matrix::from_rows(n * n, rows).nullspace()
    }

    /// A derivation taking each point to its prescribed value, if one exists.
    pub fn witness(&self, pairs: &[(Element, Element)]) -> Option<LinearMap> {
        let n = self.dim;
        let k = self.basis.len();
        let images: Vec<Vec<Element>> = pairs
            .iter()
            .map(|(x, _)| self.basis.iter().map(|d| d.apply(x)).collect())
            .collect();
        let mut rows = Vec::with_capacity(pairs.len() * n);
        let mut rhs = Vec::with_capacity(pairs.len() * n);
        for ((_, value), imgs) in pairs.iter().zip(&images) {
            for r in 0..n {
                rows.push((0..k).map(|b| imgs[b].coords()[r].clone()).collect());
                rhs.push(value.coords()[r].clone());
            }
        }
        let coeffs = Matrix::from_rows(k, rows).solve(&rhs)?;
        Some(self.combine(&coeffs))
    }
}

pub fn image_subspace(sc: &StructureTensor, v: &Element) -> Subspace {
    Derivations::compute(sc).image_subspace(v)
}

pub fn local_probe_space(sc: &StructureTensor, probes: &[Element]) -> Subspace {
    Derivations::compute(sc).probe_space(probes)
}

pub fn two_local_witness(
    sc: &StructureTensor,
    x: &Element,
    y: &Element,
    vx: &Element,
    vy: &Element,
) -> Option<LinearMap> {
    Derivations::compute(sc).witness(&[(x.clone(), vx.clone()), (y.clone(), vy.clone())])
}

pub fn global_witness(sc: &StructureTensor, assign: &ValueAssignment) -> Option<LinearMap> {
    Derivations::compute(sc).witness(assign.entries())
}

/// `y ↦ x̃ ∧ ỹ` with the normalized wedge.
pub fn ad_wedge(p: &Params, x: &Element) -> Result<LinearMap> {
    p.require_l1("ad_wedge")?;
    let mut cols = Vec::with_capacity(4);
    for j in 0..4 {
        cols.push(wedge(p, x, &Element::basis(4, j))?);
    }
    Ok(LinearMap::from_columns(4, |j| cols[j].clone()))
}

/// Whether `ad_{∧,e1}, ad_{∧,e2}, ad_{∧,e3}` span exactly the derivation
/// algebra.
pub fn verify_ad_basis(p: &Params) -> Result<bool> {
    p.require_l1l2("verify_ad_basis")?;
    p.require_l3_nonzero("verify_ad_basis")?;
    let ads = (1..4)
        .map(|i| ad_wedge(p, &Element::basis(4, i)).map(|d| d.flatten()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(16, ads) == derivation_space(&make_3pgq(p)))
}

/// Checks the closed matrix form of a derivation: zero first row and
/// column, `D11 = 0`, `D22 = D33` (and zero unless `λ1λ3 = 0`), and the
/// coupled off-diagonal entries
/// `D12 = −(λ3/λ2) D21`, `D13 = −(λ3/λ1) D31`, `D23 = −(λ2/λ1) D32`.
pub fn matches_derivation_form(p: &Params, d: &LinearMap) -> Result<bool> {
    p.require_l1l2("matches_derivation_form")?;
    assert_eq!(d.dim(), 4, "closed form is for 4-dimensional maps");
    let e = |r, c| d.entry(r, c);
    let outer_zero = (0..4).all(|i| e(0, i).is_zero() && e(i, 0).is_zero());
    let diagonal =
        e(1, 1).is_zero() && e(2, 2) == e(3, 3) && ((&p.l1 * &p.l3).is_zero() || e(2, 2).is_zero());
    let coupled = *e(1, 2) == -(&p.l3 / &p.l2) * e(2, 1)
        && *e(1, 3) == -(&p.l3 / &p.l1) * e(3, 1)
        && *e(2, 3) == -(&p.l2 / &p.l1) * e(3, 2);
    Ok(outer_zero && diagonal && coupled)
}

/// `e0, e1, e2, e3, e1+e2, e1+e3, e2+e3`.
pub fn theorem_probes() -> Vec<Element> {
    standard_probes(4)
}

/// Every basis vector plus `e_i + e_j` for `1 ≤ i < j < dim`; for the
/// quaternion family this is [`theorem_probes`].
pub fn standard_probes(dim: usize) -> Vec<Element> {
    let e = |i| Element::basis(dim, i);
    let mut probes: Vec<Element> = (0..dim).map(e).collect();
    for i in 1..dim {
        for j in i + 1..dim {
            probes.push(&e(i) + &e(j));
        }
    }
    probes
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    pub der_dim: usize,
    pub probe_dim: usize,
    pub equal: bool,
    /// Maps completing a basis of `Der` to one of the probe space.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub gap: Vec<LinearMap>,
}

/// Compares the probe space of `probes` with `Der` for any algebra, listing
/// a basis of the gap when the probe space is larger.
pub fn local_report(sc: &StructureTensor, probes: &[Element]) -> LocalReport {
    let der = Derivations::compute(sc);
    let probe = der.probe_space(probes);
    let gap = der
        .space()
        .complement_in(&probe)
        .iter()
        .map(|v| LinearMap::from_flat(sc.dim(), v))
        .collect();
    LocalReport {
        params: sc.params().cloned(),
        der_dim: der.dim(),
        probe_dim: probe.dim(),
        equal: &probe == der.space(),
        gap,
    }
}

/// Certifies that every local derivation is a derivation: the chain
/// `Der ⊆ LocalDer ⊆ ProbeSpace` collapses when the last two agree.
pub fn verify_local_theorem(p: &Params) -> Result<LocalReport> {
    p.require_l3_nonzero("verify_local_theorem")?;
    p.require_l1l2("verify_local_theorem")?;
    Ok(local_report(&make_3pgq(p), &theorem_probes()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoLocalReport {
    pub trials: usize,
    pub pairwise_ok: usize,
    pub global_ok: usize,
    pub implication_held: bool,
    pub seed: u64,
}

const EXTRA_POINTS: usize = 3;

fn small(rng: &mut ChaCha8Rng) -> Rational {
    rational::int(rng.gen_range(-2..=2))
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> Element {
    Element::new((0..dim).map(|_| small(rng)).collect())
}

fn random_derivation(rng: &mut ChaCha8Rng, der: &Derivations) -> LinearMap {
    let coeffs: Vec<Rational> = (0..der.dim()).map(|_| small(rng)).collect();
    der.combine(&coeffs)
}

/// The sample points of one trial: `e1, e2, e3` and a few distinct random
/// points with coordinates in `{−2, …, 2}`.
fn sample_points(rng: &mut ChaCha8Rng) -> Vec<Element> {
    let mut points: Vec<Element> = (1..4).map(|i| Element::basis(4, i)).collect();
    while points.len() < 3 + EXTRA_POINTS {
        let p = random_element(rng, 4);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    points
}

/// Values for one trial. Trials cycle through four constructions: values of
/// one derivation; one value swapped for another derivation's; every point
/// on its own derivation; one value pushed off by an arbitrary vector.
fn trial_values(
    rng: &mut ChaCha8Rng,
    der: &Derivations,
    points: &[Element],
    kind: usize,
) -> Vec<Element> {
    let d = random_derivation(rng, der);
    let mut values: Vec<Element> = points.iter().map(|x| d.apply(x)).collect();
    match kind {
        0 => {}
        1 => {
            let q = rng.gen_range(0..points.len());
            values[q] = random_derivation(rng, der).apply(&points[q]);
        }
        2 => {
            for (v, x) in values.iter_mut().zip(points) {
                *v = random_derivation(rng, der).apply(x);
            }
        }
        _ => {
            let q = rng.gen_range(0..points.len());
            values[q] = &values[q] + &random_element(rng, 4);
        }
    }
    values
}

/// Randomized check that pairwise derivation witnesses force a global one.
///
/// Each trial prescribes values on a sample set containing `e1, e2, e3`. A
/// trial is pairwise consistent when every pair of sample points admits a
/// derivation matching both values; the implication holds when each such
/// trial also admits a single derivation matching all values.
pub fn verify_two_local_theorem(p: &Params, trials: usize, seed: u64) -> Result<TwoLocalReport> {
    p.require_l3_nonzero("verify_two_local_theorem")?;
    p.require_l1l2("verify_two_local_theorem")?;
    let der = Derivations::compute(&make_3pgq(p));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut pairwise_ok, mut global_ok, mut implication_held) = (0, 0, true);
    for t in 0..trials {
        let points = sample_points(&mut rng);
        let values = trial_values(&mut rng, &der, &points, t % 4);
        let pairs: Vec<(Element, Element)> = points.into_iter().zip(values).collect();
        let pairwise = (0..pairs.len()).all(|i| {
            (i + 1..pairs.len())
                .all(|j| der.witness(&[pairs[i].clone(), pairs[j].clone()]).is_some())
        });
        let global = der.witness(&pairs).is_some();
        pairwise_ok += usize::from(pairwise);
        global_ok += usize::from(global);
        implication_held &= !pairwise || global;
    }
    Ok(TwoLocalReport {
        trials,
        pairwise_ok,
        global_ok,
        implication_held,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn e(i: usize) -> Element {
        Element::basis(4, i)
    }

    fn hamilton() -> StructureTensor {
        make_3pgq(&Params::from_ints(1, 1, 1))
    }

    /// The closed-form derivation with parameters `a, b, c, d`.
    fn closed_form(p: &Params, a: i64, b: i64, c: i64, d: i64) -> LinearMap {
        let (a, b, c, d) = (int(a), int(b), int(c), int(d));
        let mut m = Matrix::zeros(4, 4);
        m[(1, 2)] = -(&p.l3 / &p.l2) * &a;
        m[(1, 3)] = -(&p.l3 / &p.l1) * &b;
        m[(2, 1)] = a;
        m[(2, 2)] = d.clone();
        m[(2, 3)] = -(&p.l2 / &p.l1) * &c;
        m[(3, 1)] = b;
        m[(3, 2)] = c;
        m[(3, 3)] = d;
        LinearMap::new(m)
    }

    #[test]
    fn is_derivation_examples() {
        let sc = hamilton();
        let p = Params::from_ints(1, 1, 1);
        assert!(is_derivation(&sc, &LinearMap::zero(4)));
        assert!(is_derivation(&sc, &closed_form(&p, 1, 0, 0, 0)));
        assert!(!is_derivation(&sc, &LinearMap::identity(4)));
    }

    #[test]
    fn derivation_space_dimensions() {
        let sc = hamilton();
        let der = derivation_space(&sc);
        assert_eq!(der.dim(), 3);
        for v in der.basis() {
            let d = LinearMap::from_flat(4, v);
            assert!(is_derivation(&sc, &d));
            assert!(matches_derivation_form(sc.params().unwrap(), &d).unwrap());
        }
        let semi = make_3pgq(&Params::from_ints(1, 1, 0));
        assert_eq!(derivation_space(&semi).dim(), 4);
    }

    #[test]
    fn degenerate_branch_allows_diagonal_parameter() {
        let p = Params::from_ints(1, 1, 0);
        let sc = make_3pgq(&p);
        let diag = closed_form(&p, 0, 0, 0, 1);
        assert!(is_derivation(&sc, &diag));
        assert!(matches_derivation_form(&p, &diag).unwrap());
        let h = Params::from_ints(1, 1, 1);
        assert!(!matches_derivation_form(&h, &closed_form(&h, 0, 0, 0, 1)).unwrap());
    }

    #[test]
    fn ad_wedge_examples() {
        let p = Params::from_ints(1, 1, 1);
        let ad1 = ad_wedge(&p, &e(1)).unwrap();
        assert_eq!(
            ad1,
            LinearMap::from_ints(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])
        );
        assert!(ad_wedge(&p, &e(0)).unwrap().is_zero());
        for p in [Params::from_ints(2, 3, 5), Params::from_ints(1, -1, 0)] {
            let sc = make_3pgq(&p);
            let x = Element::from_ints(&[4, 1, -2, 3]);
            assert!(is_derivation(&sc, &ad_wedge(&p, &x).unwrap()));
        }
        assert!(ad_wedge(&Params::from_ints(0, 1, 1), &e(1)).is_err());
    }

    #[test]
    fn ad_basis_examples() {
        assert!(verify_ad_basis(&Params::from_ints(1, 1, 1)).unwrap());
        assert!(verify_ad_basis(&Params::from_ints(2, 3, 5)).unwrap());
        let err = verify_ad_basis(&Params::from_ints(1, 1, 0)).unwrap_err();
        assert!(err.to_string().contains("l3 != 0"), "{err}");
    }

    #[test]
    fn image_subspace_examples() {
        let sc = hamilton();
        assert!(image_subspace(&sc, &e(0)).is_zero());
        assert!(image_subspace(&sc, &Element::zero(4)).is_zero());
        assert_eq!(
            image_subspace(&sc, &e(1)),
            Subspace::span(4, [e(2).into_coords(), e(3).into_coords()])
        );
    }

    #[test]
    fn probe_space_examples() {
        for p in [Params::from_ints(1, 1, 1), Params::from_ints(2, 3, 5)] {
            let sc = make_3pgq(&p);
            // Δ(e0) = 0 is the only condition: four of sixteen entries vanish
            let only_e0 = local_probe_space(&sc, &[e(0)]);
            assert_eq!(only_e0.dim(), 12);
            assert_eq!(
                local_probe_space(&sc, &theorem_probes()),
                derivation_space(&sc)
            );
        }
        let semi = make_3pgq(&Params::from_ints(1, 1, 0));
        let probe = local_probe_space(&semi, &theorem_probes());
        let der = derivation_space(&semi);
        assert!(der.is_subspace_of(&probe));
        assert!(probe.dim() > der.dim());
    }

    #[test]
    fn probe_space_shrinks_with_more_probes() {
        let sc = make_3pgq(&Params::from_ints(3, -2, 7));
        let der = Derivations::compute(&sc);
        let probes = theorem_probes();
        let mut prev = Subspace::full(16);
        for k in 1..=probes.len() {
            let s = der.probe_space(&probes[..k]);
            assert!(s.is_subspace_of(&prev));
            assert!(der.space().is_subspace_of(&s));
            prev = s;
        }
    }

    #[test]
    fn local_theorem_reports() {
        for p in [
            Params::from_ints(1, 1, 1),
            Params::from_ints(1, 1, -1),
            Params::from_ints(3, -2, 7),
        ] {
            let r = verify_local_theorem(&p).unwrap();
            assert!(r.equal, "{p}");
            assert_eq!((r.der_dim, r.probe_dim), (3, 3));
            assert!(r.gap.is_empty());
        }
        assert!(verify_local_theorem(&Params::from_ints(1, 1, 0)).is_err());
        assert!(verify_local_theorem(&Params::from_ints(0, 1, 1)).is_err());
    }

    #[test]
    fn semi_quaternion_gap_is_reported() {
        let sc = make_3pgq(&Params::from_ints(1, 1, 0));
        let r = local_report(&sc, &theorem_probes());
        assert!(!r.equal);
        assert_eq!(r.gap.len(), r.probe_dim - r.der_dim);
        for g in &r.gap {
            assert!(!is_derivation(&sc, g));
        }
    }

    #[test]
    fn two_local_witness_examples() {
        let sc = hamilton();
        let der = Derivations::compute(&sc);
        let y = Element::from_ints(&[1, 2, -1, 1]);
        let vy = der.basis()[0].apply(&y);
        assert!(two_local_witness(&sc, &e(0), &y, &Element::zero(4), &vy).is_some());

        let d = two_local_witness(&sc, &e(1), &e(2), &e(2), &-&e(1)).unwrap();
        assert_eq!(d.apply(&e(1)), e(2));
        assert_eq!(d.apply(&e(2)), -&e(1));
        assert!(is_derivation(&sc, &d));

        assert!(two_local_witness(&sc, &e(0), &e(1), &e(1), &Element::zero(4)).is_none());
    }

    #[test]
    fn witness_against_e0_matches_orbit_membership() {
        let sc = make_3pgq(&Params::from_ints(2, 3, 5));
        let der = Derivations::compute(&sc);
        let x = Element::from_ints(&[0, 1, 1, -2]);
        let orbit = der.image_subspace(&x);
        for v in [
            Element::from_ints(&[0, 1, 0, 0]),
            Element::from_ints(&[1, 0, 0, 0]),
            der.basis()[1].apply(&x),
            Element::from_ints(&[0, 3, -1, 2]),
        ] {
            let present = two_local_witness(&sc, &x, &e(0), &v, &Element::zero(4)).is_some();
            assert_eq!(present, orbit.contains(v.coords()), "{v}");
        }
    }

    #[test]
    fn global_witness_examples() {
        let sc = make_3pgq(&Params::from_ints(2, 3, 5));
        let empty = ValueAssignment::new(vec![]).unwrap();
        assert!(global_witness(&sc, &empty).unwrap().is_zero());

        let der = Derivations::compute(&sc);
        let d = der.combine(&[int(2), int(-1), int(3)]);
        let points = [
            Element::from_ints(&[1, 0, 2, 0]),
            Element::from_ints(&[0, 1, 1, 1]),
            Element::from_ints(&[2, -1, 0, 3]),
            Element::from_ints(&[0, 0, -2, 1]),
            Element::from_ints(&[1, 1, 0, 0]),
            Element::from_ints(&[0, 2, 1, -1]),
        ];
        let assign =
            ValueAssignment::new(points.iter().map(|x| (x.clone(), d.apply(x))).collect()).unwrap();
        assert_eq!(global_witness(&sc, &assign).unwrap(), d);

        // D(e3) has no e3 coordinate, so adding e3 leaves the derivation orbit
        let perturbed = ValueAssignment::new(vec![
            (e(1), d.apply(&e(1))),
            (e(2), d.apply(&e(2))),
            (e(3), &d.apply(&e(3)) + &e(3)),
        ])
        .unwrap();
        assert!(global_witness(&sc, &perturbed).is_none());
    }

    #[test]
    fn repeated_points_are_rejected() {
        let r = ValueAssignment::new(vec![(e(1), e(2)), (e(1), e(3))]);
        assert!(matches!(r, Err(Error::RepeatedPoint(_))));
    }

    #[test]
    fn two_local_theorem_randomized() {
        let r = verify_two_local_theorem(&Params::from_ints(1, 1, 1), 100, 0).unwrap();
        assert_eq!(r.trials, 100);
        assert!(r.implication_held);
        // exact trials are always consistent, so the antecedent is not vacuous
        assert!(r.pairwise_ok >= 25);
        assert!(r.global_ok <= r.pairwise_ok);
        assert_eq!(
            r,
            verify_two_local_theorem(&Params::from_ints(1, 1, 1), 100, 0).unwrap()
        );
        assert!(verify_two_local_theorem(&Params::from_ints(1, 1, 0), 10, 0).is_err());
    }

    #[test]
    fn derivations_form_a_lie_algebra() {
        let sc = make_3pgq(&Params::from_ints(2, -3, 5));
        let der = Derivations::compute(&sc);
        for a in der.basis() {
            for b in der.basis() {
                assert!(is_derivation(&sc, &a.commutator(b)));
            }
            assert!(a.apply(&e(0)).is_zero());
            for i in 1..4 {
                assert!(a.apply(&e(i)).coords()[0].is_zero());
            }
        }
    }
}
