//! Musical maps and the tensors built from them.
//!
//! Sign conventions, fixed once here:
//! - `π♯ξ = π(ξ, ·)`;
//! - `σ♭X = σ(X, ·)`;
//! - `i_{X∧Y}φ = φ(X, Y, ·)`;
//! - the bivector inverse to a symplectic form `ω` satisfies `π♯ ∘ ω♭ = -Id`.

use super::alternating::{determinant, increasing_tuples, DifferentialForm, MultiVectorField};
use super::endomorphism::{unit, CotangentMap, EndomorphismField, PolyMatrix};
use crate::error::{Error, Result};
use crate::ratpoly::Polynomial;

/// `π♯ξ = π(ξ, ·)`.
pub fn sharp(pi: &MultiVectorField, xi: &DifferentialForm) -> MultiVectorField {
    assert_eq!(pi.degree(), 2, "sharp needs a bivector");
    assert_eq!(xi.degree(), 1, "sharp acts on 1-forms");
    pi.contract_first(&xi.as_vector())
}

/// Multiplicative extension of `π♯` to forms of any degree,
/// `π♯(ξ_1∧..∧ξ_p) = π♯ξ_1∧..∧π♯ξ_p`; the identity on functions.
///
/// In slot form this reads `(π♯α)(ξ_1,..,ξ_p) = (-1)^p α(π♯ξ_1,..,π♯ξ_p)`,
/// the sign coming from `ξ(π♯η) = -η(π♯ξ)`.
pub fn sharp_extend(pi: &MultiVectorField, alpha: &DifferentialForm) -> MultiVectorField {
    let n = alpha.nvars();
    let p = alpha.degree();
    let mut out = MultiVectorField::zero(n, p);
    if p == 0 {
        return MultiVectorField::function(alpha.as_function());
    }
    let map = CotangentMap::sharp(pi);
    for idx in increasing_tuples(n, p) {
        let args: Vec<Vec<Polynomial>> = idx.iter().map(|&i| map.image(i).to_vec()).collect();
        let v = alpha.evaluate(&args);
        out.add_sorted(idx, if p.is_multiple_of(2) { v } else { -v });
    }
    out
}

/// `σ♭X = σ(X, ·)`.
pub fn flat(sigma: &DifferentialForm, x: &MultiVectorField) -> DifferentialForm {
    assert_eq!(sigma.degree(), 2, "flat needs a 2-form");
    sigma.contract_first(&x.as_vector())
}

/// `i_{X∧Y}φ = φ(X, Y, ·)`.
pub fn contract_pair(
    phi: &DifferentialForm,
    x: &MultiVectorField,
    y: &MultiVectorField,
) -> DifferentialForm {
    phi.contract_first(&x.as_vector())
        .contract_first(&y.as_vector())
}

/// The matrix `N π♯ - π♯ N^T`; row `i` is the defect on `dx_i`.
pub fn skew_defect(pi: &MultiVectorField, endo: &EndomorphismField) -> PolyMatrix {
    let s = CotangentMap::sharp(pi);
    s.compose_left(endo)
        .sub(&s.compose_transpose(endo))
        .to_matrix()
}

/// The bivector `π_N` with `π_N(α, β) = β(N π♯ α)`, i.e. `π_N♯ = N ∘ π♯`.
///
/// Fails with the defect matrix `N π♯ - π♯ N^T` when that pairing is not
/// skew-symmetric.
pub fn pi_n(pi: &MultiVectorField, endo: &EndomorphismField) -> Result<MultiVectorField> {
    let defect = skew_defect(pi, endo);
    if !defect.is_zero() {
        return Err(Error::SkewViolation { defect });
    }
    Ok(pi_n_unchecked(pi, endo))
}

/// `π_N` read off from the `i < j` entries of `N π♯`, without the skew check.
pub(crate) fn pi_n_unchecked(pi: &MultiVectorField, endo: &EndomorphismField) -> MultiVectorField {
    let n = pi.nvars();
    let b = CotangentMap::sharp(pi).compose_left(endo);
    let mut out = MultiVectorField::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            out.add_sorted(vec![i, j], b.image(i)[j].clone());
        }
    }
    out
}

/// `ω_N(X, Y) = ω(N X, Y)`; fails when the result is not antisymmetric,
/// reporting the symmetric part `ω(N∂_i, ∂_j) + ω(N∂_j, ∂_i)`.
pub fn omega_n(omega: &DifferentialForm, endo: &EndomorphismField) -> Result<DifferentialForm> {
    let defect = omega_n_symmetric_part(omega, endo);
    if !defect.is_zero() {
        return Err(Error::Asymmetry { defect });
    }
    Ok(omega_n_unchecked(omega, endo))
}

fn omega_n_matrix(omega: &DifferentialForm, endo: &EndomorphismField) -> Vec<Vec<Polynomial>> {
    let n = omega.nvars();
    (0..n)
        .map(|i| {
            let ni = endo.column_vec(i);
            let row = omega.contract_first(&ni);
            (0..n).map(|j| row.coeff(&[j])).collect()
        })
        .collect()
}

pub(crate) fn omega_n_symmetric_part(
    omega: &DifferentialForm,
    endo: &EndomorphismField,
) -> PolyMatrix {
    let w = omega_n_matrix(omega, endo);
    let n = w.len();
    PolyMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| &w[i][j] + &w[j][i]).collect())
            .collect(),
    )
}

/// Antisymmetric part of `ω(N·, ·)`; equals `ω_N` whenever the latter exists.
pub(crate) fn omega_n_unchecked(
    omega: &DifferentialForm,
    endo: &EndomorphismField,
) -> DifferentialForm {
    let w = omega_n_matrix(omega, endo);
    let n = w.len();
    let half = crate::ratpoly::rat(1, 2);
    let mut out = DifferentialForm::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            out.add_sorted(vec![i, j], (&w[i][j] - &w[j][i]).scale(&half));
        }
    }
    out
}

/// Matrix inverse over the polynomial ring, when the determinant is a
/// nonzero constant.
fn polynomial_inverse(m: &[Vec<Polynomial>], nvars: usize) -> Result<Vec<Vec<Polynomial>>> {
    let k = m.len();
    let det = determinant(m, nvars);
    if det.is_zero() || !det.is_constant() {
        return Err(Error::NotInvertible);
    }
    let inv_det = num_traits::Inv::inv(det.constant_term());
    let mut out = vec![vec![Polynomial::zero(nvars); k]; k];
    for i in 0..k {
        for j in 0..k {
            let minor: Vec<Vec<Polynomial>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != i)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
                .collect();
            let cof = determinant(&minor, nvars).scale(&inv_det);
            out[i][j] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    Ok(out)
}

/// The bivector `π` with `π♯ ∘ ω♭ = -Id`, for a 2-form whose matrix has a
/// nonzero constant determinant.
pub fn inverse_bivector(omega: &DifferentialForm) -> Result<MultiVectorField> {
    let n = omega.nvars();
    if omega.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: omega.degree(),
        });
    }
    let w: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| omega.coeff(&[i, j])).collect())
        .collect();
    // π♯ω♭ = -Id reads P^T W^T = -I, so P = -W^{-1}.
    let inv = polynomial_inverse(&w, n)?;
    let mut out = MultiVectorField::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            out.add_sorted(vec![i, j], -&inv[i][j]);
        }
    }
    Ok(out)
}

/// The endomorphism `N` with `ω(N X, Y) = μ(X, Y)`, i.e. `N = -π♯ ∘ μ♭` for
/// the inverse bivector `π` of `ω`.
pub fn endomorphism_from_forms(
    omega: &DifferentialForm,
    mu: &DifferentialForm,
) -> Result<EndomorphismField> {
    let pi = inverse_bivector(omega)?;
    let n = omega.nvars();
    let s = CotangentMap::sharp(&pi);
    let cols: Vec<MultiVectorField> = (0..n)
        .map(|j| {
            let mu_flat = mu.contract_first(&unit(n, j));
            -MultiVectorField::from_vector(s.apply_vec(&mu_flat.as_vector()))
        })
        .collect();
    EndomorphismField::from_columns(&cols)
}
