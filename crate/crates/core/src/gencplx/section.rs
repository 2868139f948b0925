use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::exterior::{
    exterior_derivative, sharp, DifferentialForm, EndomorphismField, MultiVectorField,
};
use crate::ratpoly::{Polynomial, Rational};

/// A section `X + ξ` of `TM ⊕ T*M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedSection {
    vector: MultiVectorField,
    form: DifferentialForm,
}

impl GeneralizedSection {
    pub fn new(vector: MultiVectorField, form: DifferentialForm) -> Result<Self> {
        for deg in [vector.degree(), form.degree()] {
            if deg != 1 {
                return Err(Error::DegreeMismatch {
                    expected: 1,
                    found: deg,
                });
            }
        }
        if vector.nvars() != form.nvars() {
            return Err(Error::DimensionMismatch {
                expected: vector.nvars(),
                found: form.nvars(),
            });
        }
        Ok(GeneralizedSection { vector, form })
    }

    pub(crate) fn from_parts(vector: MultiVectorField, form: DifferentialForm) -> Self {
        debug_assert_eq!(vector.degree(), 1);
        debug_assert_eq!(form.degree(), 1);
        GeneralizedSection { vector, form }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_parts(
            MultiVectorField::zero(nvars, 1),
            DifferentialForm::zero(nvars, 1),
        )
    }

    pub fn from_vector(vector: MultiVectorField) -> Self {
        let n = vector.nvars();
        Self::from_parts(vector, DifferentialForm::zero(n, 1))
    }

    pub fn from_form(form: DifferentialForm) -> Self {
        let n = form.nvars();
        Self::from_parts(MultiVectorField::zero(n, 1), form)
    }

    /// `∂_i` (zero-based).
    pub fn partial(nvars: usize, i: usize) -> Self {
        Self::from_vector(MultiVectorField::basis(nvars, &[i]))
    }

    /// `dx_i` (zero-based).
    pub fn dx(nvars: usize, i: usize) -> Self {
        Self::from_form(DifferentialForm::basis(nvars, &[i]))
    }

    pub fn nvars(&self) -> usize {
        self.vector.nvars()
    }

    pub fn vector(&self) -> &MultiVectorField {
        &self.vector
    }

    pub fn form(&self) -> &DifferentialForm {
        &self.form
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero() && self.form.is_zero()
    }

    pub fn mul_fn(&self, f: &Polynomial) -> Self {
        Self::from_parts(self.vector.mul_fn(f), self.form.mul_fn(f))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_parts(self.vector.scale(c), self.form.scale(c))
    }
}

impl Add for &GeneralizedSection {
    type Output = GeneralizedSection;

    fn add(self, rhs: &GeneralizedSection) -> GeneralizedSection {
        GeneralizedSection::from_parts(&self.vector + &rhs.vector, &self.form + &rhs.form)
    }
}

impl Sub for &GeneralizedSection {
    type Output = GeneralizedSection;

    fn sub(self, rhs: &GeneralizedSection) -> GeneralizedSection {
        GeneralizedSection::from_parts(&self.vector - &rhs.vector, &self.form - &rhs.form)
    }
}

impl Neg for &GeneralizedSection {
    type Output = GeneralizedSection;

    fn neg(self) -> GeneralizedSection {
        GeneralizedSection::from_parts(-&self.vector, -&self.form)
    }
}

impl fmt::Display for GeneralizedSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.vector.is_zero(), self.form.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.vector),
            (true, false) => write!(f, "{}", self.form),
            (false, false) => write!(f, "{} + {}", self.vector, self.form),
        }
    }
}

/// `⟨X + ξ, Y + η⟩ = ½(ξ(Y) + η(X))`.
pub fn pairing(v: &GeneralizedSection, w: &GeneralizedSection) -> Polynomial {
    let a = v.form.evaluate(&[w.vector.as_vector()]);
    let b = w.form.evaluate(&[v.vector.as_vector()]);
    (&a + &b).scale(&crate::ratpoly::rat(1, 2))
}

/// The bundle map
/// `J(X + ξ) = (NX + π♯ξ) + (σ♭X - N^Tξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedEndomorphism {
    endo: EndomorphismField,
    pi: MultiVectorField,
    sigma: DifferentialForm,
}

/// Assembles `J` from its blocks; no algebraic condition is imposed.
pub fn build_j(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    sigma: &DifferentialForm,
) -> Result<GeneralizedEndomorphism> {
    let n = endo.nvars();
    for found in [pi.nvars(), sigma.nvars()] {
        if found != n {
            return Err(Error::DimensionMismatch { expected: n, found });
        }
    }
    for (found, expected) in [(pi.degree(), 2), (sigma.degree(), 2)] {
        if found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
    }
    Ok(GeneralizedEndomorphism {
        endo: endo.clone(),
        pi: pi.clone(),
        sigma: sigma.clone(),
    })
}

impl GeneralizedEndomorphism {
    pub fn nvars(&self) -> usize {
        self.endo.nvars()
    }

    pub fn endomorphism(&self) -> &EndomorphismField {
        &self.endo
    }

    pub fn bivector(&self) -> &MultiVectorField {
        &self.pi
    }

    pub fn two_form(&self) -> &DifferentialForm {
        &self.sigma
    }

    pub fn apply(&self, v: &GeneralizedSection) -> GeneralizedSection {
        let x = &v.vector;
        let xi = &v.form;
        let vector = &self.endo.apply(x) + &sharp(&self.pi, xi);
        let nt = DifferentialForm::from_vector(self.endo.transpose_apply_vec(&xi.as_vector()));
        let form = &self.sigma.contract_first(&x.as_vector()) - &nt;
        GeneralizedSection::from_parts(vector, form)
    }

    /// The anchor `ρ ∘ J`, i.e. `X + ξ ↦ NX + π♯ξ`.
    pub fn anchor(&self, v: &GeneralizedSection) -> MultiVectorField {
        self.apply(v).vector
    }
}

/// `D f` for an anchor of the form `X + ξ ↦ NX + π♯ξ`, determined by
/// `⟨Df, A⟩ = ½ ρ(A) f`: `Df = -π♯df + N^T df`.
pub(crate) fn d_from_anchor(
    endo: &EndomorphismField,
    pi: &MultiVectorField,
    f: &Polynomial,
) -> GeneralizedSection {
    let df = exterior_derivative(&DifferentialForm::function(f.clone()));
    let vector = -sharp(pi, &df);
    let form = DifferentialForm::from_vector(endo.transpose_apply_vec(&df.as_vector()));
    GeneralizedSection::from_parts(vector, form)
}
