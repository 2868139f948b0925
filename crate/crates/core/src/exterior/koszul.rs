use super::alternating::{DifferentialForm, MultiVectorField};
use super::calculus::{exterior_derivative, lie_derivative, schouten_bracket};
use super::endomorphism::CotangentMap;
use crate::error::{Error, Result};
use crate::ratpoly::Polynomial;

/// `[α, β]_B = L_{Bα} β - L_{Bβ} α - d(β(Bα))` for 1-forms and a bundle map
/// `B: T*M -> TM`.
pub fn koszul_bracket(
    b: &CotangentMap,
    alpha: &DifferentialForm,
    beta: &DifferentialForm,
) -> DifferentialForm {
    assert_eq!(alpha.degree(), 1, "koszul bracket takes 1-forms");
    assert_eq!(beta.degree(), 1, "koszul bracket takes 1-forms");
    let ba = b.apply(alpha);
    let bb = b.apply(beta);
    let pairing = beta.evaluate(&[ba.as_vector()]);
    let d_pair = exterior_derivative(&DifferentialForm::function(pairing));
    &(&lie_derivative(&ba, beta) - &lie_derivative(&bb, alpha)) - &d_pair
}

/// A bivector known to satisfy `[π, π] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonBivector(MultiVectorField);

impl PoissonBivector {
    pub fn try_new(pi: MultiVectorField) -> Result<Self> {
        if pi.degree() != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                found: pi.degree(),
            });
        }
        if !schouten_bracket(&pi, &pi).is_zero() {
            return Err(Error::NotPoisson);
        }
        Ok(PoissonBivector(pi))
    }

    pub fn bivector(&self) -> &MultiVectorField {
        &self.0
    }

    pub fn into_inner(self) -> MultiVectorField {
        self.0
    }
}

/// `i_π α = Σ_{i<j} π^{ij} i_{∂_j} i_{∂_i} α`, so that `i_π(ξ∧η) = π(ξ, η)`.
pub fn contract_bivector(pi: &MultiVectorField, alpha: &DifferentialForm) -> DifferentialForm {
    let n = alpha.nvars();
    let mut out = DifferentialForm::zero(n, alpha.degree().saturating_sub(2));
    if alpha.degree() < 2 {
        return out;
    }
    let unit = |i: usize| -> Vec<Polynomial> {
        (0..n)
            .map(|k| Polynomial::from_int(n, (k == i) as i64))
            .collect()
    };
    for (idx, c) in pi.iter() {
        let t = alpha
            .contract_first(&unit(idx[0]))
            .contract_first(&unit(idx[1]));
        out = &out + &t.mul_fn(c);
    }
    out
}

/// `∂_π = i_π ∘ d - d ∘ i_π`.
fn koszul_differential(pi: &MultiVectorField, alpha: &DifferentialForm) -> DifferentialForm {
    let a = contract_bivector(pi, &exterior_derivative(alpha));
    if alpha.degree() < 2 {
        return a;
    }
    &a - &exterior_derivative(&contract_bivector(pi, alpha))
}

/// Graded bracket on forms of all degrees generated by the 1-form bracket
/// `[·,·]_{π♯}` and `[α, f] = (π♯α)(f)`, computed as the deviation of the
/// second-order operator `∂_π` from being a derivation:
/// `[α, β] = (-1)^p (∂_π(α∧β) - ∂_π α ∧ β - (-1)^p α ∧ ∂_π β)`.
///
/// Defined for any bivector; it is a Gerstenhaber bracket only when `π` is
/// Poisson. Use [`koszul_bracket_graded`] for the checked version.
pub fn koszul_bracket_graded_unchecked(
    pi: &MultiVectorField,
    alpha: &DifferentialForm,
    beta: &DifferentialForm,
) -> DifferentialForm {
    let p = alpha.degree();
    let q = beta.degree();
    let n = alpha.nvars();
    let out_degree = (p + q).max(1) - 1;
    if p + q == 0 || out_degree > n {
        return DifferentialForm::zero(n, out_degree);
    }
    let mut inner = koszul_differential(pi, &alpha.wedge(beta));
    // ∂_π vanishes on functions
    if p > 0 {
        inner = &inner - &koszul_differential(pi, alpha).wedge(beta);
    }
    if q > 0 {
        let right = alpha.wedge(&koszul_differential(pi, beta));
        inner = if p.is_multiple_of(2) {
            &inner - &right
        } else {
            &inner + &right
        };
    }
    if p.is_multiple_of(2) {
        inner
    } else {
        -inner
    }
}

/// Graded bracket `[α, β]_{π♯}` of forms of degrees `p, q`, of degree
/// `p + q - 1`, for a Poisson bivector.
pub fn koszul_bracket_graded(
    pi: &PoissonBivector,
    alpha: &DifferentialForm,
    beta: &DifferentialForm,
) -> DifferentialForm {
    koszul_bracket_graded_unchecked(pi.bivector(), alpha, beta)
}
