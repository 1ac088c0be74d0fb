//! Commuting linear maps, the centroid and the quasi-centroid.
//!
//! All three are nullspaces over flattened `n × n` matrices. The commuting
//! condition `φ(x)x = xφ(x)` is quadratic in `x`; over a field of
//! characteristic zero it is equivalent to its polarization on basis pairs,
//! which is linear in `φ`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::StructureTensor;
use crate::derivation::{combine, is_derivation, Derivations, LinearMap};
use crate::linalg::{Matrix, Subspace};
use crate::rational::{self, Rational};

/// Collects linear constraints on a flattened map `F` (`F[r][c]` is the
/// `e_r` coordinate of `F(e_c)`).
struct MapConstraints {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl MapConstraints {
    fn new(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
        }
    }

    fn row(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.n * self.n]
    }

    /// Adds, for each output coordinate `k`, the coefficients of the `k`-th
    /// coordinate of the expression built by `f`.
    fn push_family(&mut self, f: impl Fn(&mut [Vec<Rational>])) {
        let mut block: Vec<Vec<Rational>> = (0..self.n).map(|_| self.row()).collect();
        f(&mut block);
        self.rows.extend(block);
    }

    fn solve(self) -> Subspace {
        Matrix::from_rows(self.n * self.n, self.rows).nullspace()
    }
}

// Coefficient helpers writing into `block[k]`, one row per coordinate `k`.

/// `± F(e_i) · e_j`
fn add_map_then_right(
    sc: &StructureTensor,
    block: &mut [Vec<Rational>],
    i: usize,
    j: usize,
    sign: i64,
) {
    let n = sc.dim();
    let s = rational::int(sign);
    for (k, row) in block.iter_mut().enumerate() {
        for r in 0..n {
            let c = sc.coeff(r, j, k);
            if !c.is_zero() {
                row[r * n + i] += &s * c;
            }
        }
    }
}

/// `± e_i · F(e_j)`
fn add_left_then_map(
    sc: &StructureTensor,
    block: &mut [Vec<Rational>],
    i: usize,
    j: usize,
    sign: i64,
) {
    let n = sc.dim();
    let s = rational::int(sign);
    for (k, row) in block.iter_mut().enumerate() {
        for r in 0..n {
            let c = sc.coeff(i, r, k);
            if !c.is_zero() {
                row[r * n + j] += &s * c;
            }
        }
    }
}

/// `± F(e_i e_j)`
fn add_map_of_product(
    sc: &StructureTensor,
    block: &mut [Vec<Rational>],
    i: usize,
    j: usize,
    sign: i64,
) {
    let n = sc.dim();
    let s = rational::int(sign);
    for (k, row) in block.iter_mut().enumerate() {
        for m in 0..n {
            let c = sc.coeff(i, j, m);
            if !c.is_zero() {
                row[k * n + m] += &s * c;
            }
        }
    }
}

/// Maps with `φ(e_i)e_j + φ(e_j)e_i − e_iφ(e_j) − e_jφ(e_i) = 0` for `i ≤ j`.
pub fn commuting_maps(sc: &StructureTensor) -> Subspace {
    let n = sc.dim();
    let mut cs = MapConstraints::new(n);
    for i in 0..n {
        for j in i..n {
            cs.push_family(|b| {
                add_map_then_right(sc, b, i, j, 1);
                add_map_then_right(sc, b, j, i, 1);
                add_left_then_map(sc, b, i, j, -1);
                add_left_then_map(sc, b, j, i, -1);
            });
        }
    }
    cs.solve()
}

/// `γ(e_ie_j) = γ(e_i)e_j = e_iγ(e_j)` on all basis pairs.
pub fn centroid(sc: &StructureTensor) -> Subspace {
    let n = sc.dim();
    let mut cs = MapConstraints::new(n);
    for i in 0..n {
        for j in 0..n {
            cs.push_family(|b| {
                add_map_of_product(sc, b, i, j, 1);
                add_map_then_right(sc, b, i, j, -1);
            });
            cs.push_family(|b| {
                add_map_of_product(sc, b, i, j, 1);
                add_left_then_map(sc, b, i, j, -1);
            });
        }
    }
    cs.solve()
}

/// `γ(e_i)e_j = e_iγ(e_j)` on all basis pairs.
pub fn quasi_centroid(sc: &StructureTensor) -> Subspace {
    let n = sc.dim();
    let mut cs = MapConstraints::new(n);
    for i in 0..n {
        for j in 0..n {
            cs.push_family(|b| {
                add_map_then_right(sc, b, i, j, 1);
                add_left_then_map(sc, b, i, j, -1);
            });
        }
    }
    cs.solve()
}

/// Whether `φ(x)x = xφ(x)` at a given point.
pub fn commutes_at(sc: &StructureTensor, phi: &LinearMap, x: &crate::algebra::Element) -> bool {
    let fx = phi.apply(x);
    sc.multiply(&fx, x) == sc.multiply(x, &fx)
}

/// Free first row, one scalar on the remaining diagonal, zeros elsewhere.
pub fn matches_commuting_pattern(m: &LinearMap) -> bool {
    let n = m.dim();
    let mu = m.entry(1.min(n - 1), 1.min(n - 1));
    (1..n).all(|r| {
        (0..n).all(|c| {
            if r == c {
                m.entry(r, c) == mu
            } else {
                m.entry(r, c).is_zero()
            }
        })
    })
}

/// Whether a subspace of maps is exactly the scalar multiples of the identity.
pub fn is_scalar_line(s: &Subspace, n: usize) -> bool {
    *s == Subspace::span(n * n, [LinearMap::identity(n).flatten()])
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutingReport {
    #[serde(skip)]
    pub space: Subspace,
    pub dim: usize,
    pub pattern_ok: bool,
}

pub fn commuting_space(sc: &StructureTensor) -> CommutingReport {
    let space = commuting_maps(sc);
    let n = sc.dim();
    let pattern_ok = space
        .basis()
        .iter()
        .all(|v| matches_commuting_pattern(&LinearMap::from_flat(n, v)));
    CommutingReport {
        dim: space.dim(),
        space,
        pattern_ok,
    }
}

/// Random `φ` in the centroid and `d` in `Der`: checks that `φ∘d` is a
/// derivation and `[φ, d]` lies in the centroid.
pub fn verify_gamma_der_lemma(sc: &StructureTensor, trials: usize, seed: u64) -> bool {
    let n = sc.dim();
    let gamma = centroid(sc);
    let gamma_maps: Vec<LinearMap> = gamma
        .basis()
        .iter()
        .map(|v| LinearMap::from_flat(n, v))
        .collect();
    let der = Derivations::compute(sc);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |k: usize| -> Vec<Rational> {
        (0..k)
            .map(|_| rational::frac(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
            .collect()
    };
    (0..trials).all(|_| {
        let phi = combine(n, &gamma_maps, &draw(gamma_maps.len()));
        let d = der.combine(&draw(der.dim()));
        gamma_der_holds(sc, &gamma, &phi, &d)
    })
}

pub fn gamma_der_holds(
    sc: &StructureTensor,
    gamma: &Subspace,
    phi: &LinearMap,
    d: &LinearMap,
) -> bool {
    is_derivation(sc, &phi.compose(d)) && gamma.contains(&phi.commutator(d).flatten())
}

#[derive(Clone, Debug, Serialize)]
pub struct CentroidReport {
    pub commuting_dim: usize,
    pub pattern_ok: bool,
    pub centroid_dim: usize,
    pub quasi_centroid_dim: usize,
    pub gamma_der_lemma: bool,
}

pub fn centroid_report(sc: &StructureTensor, trials: usize, seed: u64) -> CentroidReport {
    let commuting = commuting_space(sc);
    CentroidReport {
        commuting_dim: commuting.dim,
        pattern_ok: commuting.pattern_ok,
        centroid_dim: centroid(sc).dim(),
        quasi_centroid_dim: quasi_centroid(sc).dim(),
        gamma_der_lemma: verify_gamma_der_lemma(sc, trials, seed),
    }
}
