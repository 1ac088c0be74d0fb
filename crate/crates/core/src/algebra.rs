//! The 3-parameter generalized quaternion algebras and their structure
//! constants.
//!
//! Elements are coordinate vectors in the basis `{e0, e1, e2, e3}`, with `e0`
//! the identity. The brute-force machinery in the rest of the crate only
//! sees a [`StructureTensor`], so any finite-dimensional algebra loaded from
//! JSON goes through the same code paths; the closed-form helpers here
//! (`bilinear_f`, `cross`, `wedge`) are specific to the 4-dimensional family.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::{self, Rational};

/// The parameters `(λ1, λ2, λ3)` selecting an algebra in the family.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Params {
    pub l1: Rational,
    pub l2: Rational,
    pub l3: Rational,
}

impl Params {
    pub fn new(l1: Rational, l2: Rational, l3: Rational) -> Self {
        Self { l1, l2, l3 }
    }

    pub fn from_ints(l1: i64, l2: i64, l3: i64) -> Self {
        Self::new(rational::int(l1), rational::int(l2), rational::int(l3))
    }

    /// The five named members of the family: generalized (2-parameter, here
    /// with α = 2, β = 3), Hamilton, split, semi- and split semi-quaternions.
    pub fn special_cases() -> Vec<(&'static str, Params)> {
        vec![
            (
                "2-parameter generalized (alpha=2, beta=3)",
                Params::from_ints(1, 2, 3),
            ),
            ("Hamilton", Params::from_ints(1, 1, 1)),
            ("split", Params::from_ints(1, 1, -1)),
            ("semi", Params::from_ints(1, 1, 0)),
            ("split semi", Params::from_ints(1, -1, 0)),
        ]
    }

    pub(crate) fn require_l1(&self, op: &'static str) -> Result<()> {
        if self.l1.is_zero() {
            return Err(Error::Domain {
                op,
                condition: "l1 != 0",
            });
        }
        Ok(())
    }

    pub(crate) fn require_l1l2(&self, op: &'static str) -> Result<()> {
        if self.l1.is_zero() || self.l2.is_zero() {
            return Err(Error::Domain {
                op,
                condition: "l1*l2 != 0",
            });
        }
        Ok(())
    }

    pub(crate) fn require_l3_nonzero(&self, op: &'static str) -> Result<()> {
        if self.l3.is_zero() {
            return Err(Error::Domain {
                op,
                condition: "l3 != 0",
            });
        }
        Ok(())
    }

    pub(crate) fn require_l3_zero(&self, op: &'static str) -> Result<()> {
        if !self.l3.is_zero() {
            return Err(Error::Domain {
                op,
                condition: "l3 = 0",
            });
        }
        Ok(())
    }

    pub fn is_nondegenerate(&self) -> bool {
        !(self.l1.is_zero() || self.l2.is_zero() || self.l3.is_zero())
    }

    pub fn to_strings(&self) -> [String; 3] {
        [&self.l1, &self.l2, &self.l3].map(rational::format)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.to_strings();
        write!(f, "({a}, {b}, {c})")
    }
}

impl fmt::Debug for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Params{self}")
    }
}

impl Serialize for Params {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let [a, b, c] = <[String; 3]>::deserialize(d)?;
        let p = |s: &str| rational::parse(s).map_err(D::Error::custom);
        Ok(Params::new(p(&a)?, p(&b)?, p(&c)?))
    }
}

/// An algebra element as a coordinate vector; `coords()[0]` is the scalar
/// part.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    /// The basis vector `e_i` of a `dim`-dimensional algebra.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.0[i] = rational::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scalar_part(&self) -> Element {
        let mut s = Self::zero(self.dim());
        s.0[0] = self.0[0].clone();
        s
    }

    pub fn vector_part(&self) -> Element {
        let mut v = self.clone();
        v.0[0] = Rational::zero();
        v
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Self(self.0.iter().map(|x| x * s).collect())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", rational::to_strings(&self.0).join(", "))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Element> for &Rational {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

/// Structure constants `c[i][j][k]` with `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    params: Option<Params>,
    c: Vec<Rational>,
}

/// Builds the multiplication table of the 3-parameter generalized quaternion
/// algebra with the given parameters.
pub fn make_3pgq(p: &Params) -> StructureTensor {
    let (l1, l2, l3) = (&p.l1, &p.l2, &p.l3);
    let mut sc = StructureTensor {
        dim: 4,
        params: Some(p.clone()),
        c: vec![Rational::zero(); 64],
    };
    for i in 0..4 {
        sc.set(0, i, i, rational::one());
        sc.set(i, 0, i, rational::one());
    }
    sc.set(1, 1, 0, -(l1 * l2));
    sc.set(2, 2, 0, -(l1 * l3));
    sc.set(3, 3, 0, -(l2 * l3));
    sc.set(1, 2, 3, l1.clone());
    sc.set(2, 1, 3, -l1.clone());
    sc.set(2, 3, 1, l3.clone());
    sc.set(3, 2, 1, -l3.clone());
    sc.set(3, 1, 2, l2.clone());
    sc.set(1, 3, 2, -l2.clone());
    sc
}

impl StructureTensor {
    /// An arbitrary algebra given by its structure constants in `i, j, k`
    /// order. `params`, when present, enables the closed-form comparisons.
    pub fn from_constants(dim: usize, params: Option<Params>, c: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedTensor("dimension must be positive".into()));
        }
        if c.len() != dim * dim * dim {
            return Err(Error::MalformedTensor(format!(
                "expected {} constants, found {}",
                dim * dim * dim,
                c.len()
            )));
        }
        if params.is_some() && dim != 4 {
            return Err(Error::MalformedTensor(
                "parameters only apply to 4-dimensional algebras".into(),
            ));
        }
        Ok(Self { dim, params, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> Option<&Params> {
        self.params.as_ref()
    }

    /// The parameters, but only when the table is exactly the one they
    /// generate; closed-form results apply only then.
    pub fn family_params(&self) -> Option<&Params> {
        self.params.as_ref().filter(|p| make_3pgq(p) == *self)
    }

    pub fn require_params(&self) -> Result<&Params> {
        self.params.as_ref().ok_or(Error::MissingParams)
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = v;
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// `e_i · e_j` as an element.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let start = (i * self.dim + j) * self.dim;
        Element(self.c[start..start + self.dim].to_vec())
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.dim(), self.dim, "dimension mismatch");
        assert_eq!(y.dim(), self.dim, "dimension mismatch");
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        Element(out)
    }

    /// Left multiplication by `x` as a matrix on coordinate vectors.
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(x, &self.basis(j));
            for (k, v) in col.0.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// Right multiplication by `y` as a matrix on coordinate vectors.
    pub fn right_mul_matrix(&self, y: &Element) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            let col = self.multiply(&self.basis(i), y);
            for (k, v) in col.0.into_iter().enumerate() {
                m[(k, i)] = v;
            }
        }
        m
    }

    /// `(e_i e_j) e_k = e_i (e_j e_k)` on every basis triple.
    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
                    self.multiply(&self.multiply(&ei, &ej), &ek)
                        == self.multiply(&ei, &self.multiply(&ej, &ek))
                })
            })
        })
    }

    /// Whether `e0` is a two-sided identity.
    pub fn has_unit_e0(&self) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis(i);
            self.basis_product(0, i) == e && self.basis_product(i, 0) == e
        })
    }

    /// All `z` with `z x = x z` for every `x`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|i| self.coeff(i, j, k) - self.coeff(j, i, k))
                        .collect(),
                );
            }
        }
        Matrix::from_rows(n, rows).nullspace()
    }

    pub fn to_json(&self) -> TensorDocument {
        let n = self.dim;
        TensorDocument {
            dim: n,
            params: self.params.clone(),
            table: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| rational::to_strings(self.basis_product(i, j).coords()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("tensor documents always serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: TensorDocument = serde_json::from_str(s)?;
        Self::try_from(doc)
    }
}

impl fmt::Debug for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureTensor")
            .field("dim", &self.dim)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

/// JSON form of a structure tensor: `table[i][j]` holds the coordinates of
/// `e_i · e_j` as rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorDocument {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl TryFrom<TensorDocument> for StructureTensor {
    type Error = Error;

    fn try_from(doc: TensorDocument) -> Result<Self> {
        let n = doc.dim;
        if doc.table.len() != n || doc.table.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTensor(format!("table must be {n}×{n}")));
        }
        let mut c = Vec::with_capacity(n * n * n);
        for row in &doc.table {
            for entry in row {
                if entry.len() != n {
                    return Err(Error::MalformedTensor(format!(
                        "each product must have {n} coordinates"
                    )));
                }
                for s in entry {
                    c.push(rational::parse(s)?);
                }
            }
        }
        StructureTensor::from_constants(n, doc.params, c)
    }
}

fn vec3(x: &Element) -> [&Rational; 3] {
    assert_eq!(
        x.dim(),
        4,
        "closed-form products need 4-dimensional elements"
    );
    [&x.0[1], &x.0[2], &x.0[3]]
}

/// `f(x̃, ỹ) = λ1λ2 x1y1 + λ1λ3 x2y2 + λ2λ3 x3y3`.
pub fn bilinear_f(p: &Params, x: &Element, y: &Element) -> Rational {
    let [x1, x2, x3] = vec3(x);
    let [y1, y2, y3] = vec3(y);
    &p.l1 * &p.l2 * x1 * y1 + &p.l1 * &p.l3 * x2 * y2 + &p.l2 * &p.l3 * x3 * y3
}

/// Determinant with first row `(λ3 e1, λ2 e2, λ1 e3)`, then `x̃`, then `ỹ`.
pub fn cross(p: &Params, x: &Element, y: &Element) -> Element {
    let [x1, x2, x3] = vec3(x);
    let [y1, y2, y3] = vec3(y);
    Element(vec![
        Rational::zero(),
        &p.l3 * (x2 * y3 - x3 * y2),
        -(&p.l2 * (x1 * y3 - x3 * y1)),
        &p.l1 * (x1 * y2 - x2 * y1),
    ])
}

/// The normalized wedge, `cross / λ1`: determinant with first row
/// `((λ3/λ1) e1, (λ2/λ1) e2, e3)`.
pub fn wedge(p: &Params, x: &Element, y: &Element) -> Result<Element> {
    if p.l1.is_zero() {
        return Err(Error::Domain {
            op: "normalized wedge undefined",
            condition: "l1 != 0",
        });
    }
    Ok(cross(p, x, y).scale(&p.l1.recip()))
}
