use std::fmt;

use super::alternating::{DifferentialForm, MultiVectorField};
use crate::error::{Error, Result};
use crate::ratpoly::Polynomial;

/// Square matrix of polynomials. Used for bundle-map defects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn zero(size: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows: vec![vec![Polynomial::zero(nvars); size]; size],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == rows.len()),
            "matrix must be square"
        );
        PolyMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Polynomial::is_zero)
    }

    /// Nonzero entries as `((i, j), value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(move |(j, p)| ((i, j), p))
        })
    }
}

/// A `(1,1)`-tensor field `N: TM -> TM`. Column `j` holds the components of
/// `N(∂_j)`, so `entry(i, j)` is the `∂_i`-component of `N(∂_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndomorphismField {
    nvars: usize,
    m: Vec<Vec<Polynomial>>,
}

impl EndomorphismField {
    pub fn zero(nvars: usize) -> Self {
        EndomorphismField {
            nvars,
            m: vec![vec![Polynomial::zero(nvars); nvars]; nvars],
        }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::scalar(Polynomial::one(nvars))
    }

    /// `f · Id`.
    pub fn scalar(f: Polynomial) -> Self {
        let nvars = f.nvars();
        let mut out = Self::zero(nvars);
        for i in 0..nvars {
            out.m[i][i] = f.clone();
        }
        out
    }

    /// Builds from `entries[i][j]` = `∂_i`-component of `N(∂_j)`.
    pub fn from_matrix(entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nvars = entries.len();
        for row in &entries {
            if row.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: row.len(),
                });
            }
            if let Some(p) = row.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
        }
        Ok(EndomorphismField { nvars, m: entries })
    }

    /// Builds from the images `N(∂_j)` of the coordinate frame.
    pub fn from_columns(columns: &[MultiVectorField]) -> Result<Self> {
        let nvars = columns.len();
        let mut out = Self::zero(nvars);
        for (j, col) in columns.iter().enumerate() {
            if col.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: col.nvars(),
                });
            }
            if col.degree() != 1 {
                return Err(Error::DegreeMismatch {
                    expected: 1,
                    found: col.degree(),
                });
            }
            for (i, p) in col.as_vector().into_iter().enumerate() {
                out.m[i][j] = p;
            }
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.m[i][j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.nvars(), self.nvars, "dimension mismatch");
        self.m[i][j] = p;
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Polynomial::is_zero)
    }

    /// `N(∂_j)`.
    pub fn column(&self, j: usize) -> MultiVectorField {
        MultiVectorField::from_vector(self.column_vec(j))
    }

    pub(crate) fn column_vec(&self, j: usize) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.m[i][j].clone()).collect()
    }

    pub(crate) fn apply_vec(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        (0..self.nvars)
            .map(|i| {
                let mut acc = Polynomial::zero(self.nvars);
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() && !self.m[i][j].is_zero() {
                        acc += &(&self.m[i][j] * vj);
                    }
                }
                acc
            })
            .collect()
    }

    /// `N X` for a vector field `X`.
    pub fn apply(&self, x: &MultiVectorField) -> MultiVectorField {
        assert_eq!(x.degree(), 1, "N acts on vector fields");
        MultiVectorField::from_vector(self.apply_vec(&x.as_vector()))
    }

    /// `N^T ξ` for a 1-form, `(N^T ξ)(X) = ξ(N X)`.
    pub fn transpose_apply(&self, xi: &DifferentialForm) -> Result<DifferentialForm> {
        if xi.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: xi.nvars(),
            });
        }
        if xi.degree() != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: xi.degree(),
            });
        }
        Ok(DifferentialForm::from_vector(
            self.transpose_apply_vec(&xi.as_vector()),
        ))
    }

    pub(crate) fn transpose_apply_vec(&self, xi: &[Polynomial]) -> Vec<Polynomial> {
        (0..self.nvars)
            .map(|j| {
                let mut acc = Polynomial::zero(self.nvars);
                for (i, xi_i) in xi.iter().enumerate() {
                    if !xi_i.is_zero() && !self.m[i][j].is_zero() {
                        acc += &(xi_i * &self.m[i][j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndomorphismField) -> EndomorphismField {
        let cols: Vec<Vec<Polynomial>> = (0..self.nvars)
            .map(|j| self.apply_vec(&other.column_vec(j)))
            .collect();
        let mut out = Self::zero(self.nvars);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, p) in col.into_iter().enumerate() {
                out.m[i][j] = p;
            }
        }
        out
    }

    pub fn add(&self, other: &EndomorphismField) -> EndomorphismField {
        let mut out = self.clone();
        for i in 0..self.nvars {
            for j in 0..self.nvars {
                out.m[i][j] += &other.m[i][j];
            }
        }
        out
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_rows(self.m.clone())
    }
}

impl fmt::Display for EndomorphismField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// A bundle map `B: T*M -> TM`, stored by the images `B(dx_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotangentMap {
    nvars: usize,
    images: Vec<Vec<Polynomial>>,
}

impl CotangentMap {
    pub fn zero(nvars: usize) -> Self {
        CotangentMap {
            nvars,
            images: vec![vec![Polynomial::zero(nvars); nvars]; nvars],
        }
    }

    /// `π♯`, with `π♯ξ = π(ξ, ·)`; the image of `dx_i` has components `π^{ij}`.
    pub fn sharp(pi: &MultiVectorField) -> Self {
        assert_eq!(pi.degree(), 2, "sharp needs a bivector");
        let n = pi.nvars();
        let images = (0..n)
            .map(|i| (0..n).map(|j| pi.coeff(&[i, j])).collect())
            .collect();
        CotangentMap { nvars: n, images }
    }

    /// `N ∘ B`.
    pub fn compose_left(&self, endo: &EndomorphismField) -> Self {
        CotangentMap {
            nvars: self.nvars,
            images: self.images.iter().map(|v| endo.apply_vec(v)).collect(),
        }
    }

    /// `B ∘ N^T`.
    pub fn compose_transpose(&self, endo: &EndomorphismField) -> Self {
        let n = self.nvars;
        let images = (0..n)
            .map(|i| {
                let nt = endo.transpose_apply_vec(&unit(n, i));
                self.apply_vec(&nt)
            })
            .collect();
        CotangentMap { nvars: n, images }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `B(dx_i)` as a component vector.
    pub fn image(&self, i: usize) -> &[Polynomial] {
        &self.images[i]
    }

    pub(crate) fn apply_vec(&self, xi: &[Polynomial]) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(self.nvars); self.nvars];
        for (i, xi_i) in xi.iter().enumerate() {
            if xi_i.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(&self.images[i]) {
                if !b.is_zero() {
                    *o += &(xi_i * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, xi: &DifferentialForm) -> MultiVectorField {
        assert_eq!(xi.degree(), 1, "B acts on 1-forms");
        MultiVectorField::from_vector(self.apply_vec(&xi.as_vector()))
    }

    /// Matrix with row `i` = `B(dx_i)`.
    pub fn to_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_rows(self.images.clone())
    }

    pub fn sub(&self, other: &CotangentMap) -> CotangentMap {
        CotangentMap {
            nvars: self.nvars,
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p - q).collect())
                .collect(),
        }
    }
}

/// Component vector of the `i`-th coordinate basis element.
pub(crate) fn unit(nvars: usize, i: usize) -> Vec<Polynomial> {
    (0..nvars)
        .map(|k| {
            if k == i {
                Polynomial::one(nvars)
            } else {
                Polynomial::zero(nvars)
            }
        })
        .collect()
}
