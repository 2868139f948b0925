use super::alternating::{Alternating, DifferentialForm, MultiVectorField, Variance};
use crate::ratpoly::Polynomial;

/// `X(f) = Σ X^i ∂_i f`.
pub fn apply_vector(x: &[Polynomial], f: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(f.nvars());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let df = f.diff(i);
        if !df.is_zero() {
            acc += &(xi * &df);
        }
    }
    acc
}

/// Vector field acting on a function.
pub fn vector_apply(x: &MultiVectorField, f: &Polynomial) -> Polynomial {
    apply_vector(&x.as_vector(), f)
}

/// Lie bracket of vector fields given by component vectors.
pub(crate) fn lie_bracket_vec(x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
    x.iter()
        .zip(y)
        .map(|(xk, yk)| &apply_vector(x, yk) - &apply_vector(y, xk))
        .collect()
}

/// `[X, Y] = XY - YX`.
pub fn lie_bracket(x: &MultiVectorField, y: &MultiVectorField) -> MultiVectorField {
    MultiVectorField::from_vector(lie_bracket_vec(&x.as_vector(), &y.as_vector()))
}

/// de Rham differential. A degree `n` form maps to the zero `(n+1)`-form.
pub fn exterior_derivative(alpha: &DifferentialForm) -> DifferentialForm {
    let n = alpha.nvars();
    let mut out = DifferentialForm::zero(n, alpha.degree() + 1);
    for (idx, c) in alpha.iter() {
        for j in 0..n {
            if idx.contains(&j) {
                continue;
            }
            let dc = c.diff(j);
            if dc.is_zero() {
                continue;
            }
            let mut full = Vec::with_capacity(idx.len() + 1);
            full.push(j);
            full.extend_from_slice(idx);
            out.add_component(&full, &dc);
        }
    }
    out
}

/// Interior product in the first slot, `(i_X α)(..) = α(X, ..)`.
pub fn interior(x: &MultiVectorField, alpha: &DifferentialForm) -> DifferentialForm {
    assert_eq!(x.degree(), 1, "interior product needs a vector field");
    alpha.contract_first(&x.as_vector())
}

/// Lie derivative via Cartan's formula `L_X = i_X d + d i_X`.
pub fn lie_derivative(x: &MultiVectorField, alpha: &DifferentialForm) -> DifferentialForm {
    let v = x.as_vector();
    let a = exterior_derivative(alpha).contract_first(&v);
    if alpha.degree() == 0 {
        return a;
    }
    &a + &exterior_derivative(&alpha.contract_first(&v))
}

/// Right derivative `∂/∂θ_i` of a multivector viewed as a polynomial in the
/// odd variables `θ_j = ∂_j`.
fn odd_right_derivative<V: Variance>(p: &Alternating<V>, i: usize) -> Alternating<V> {
    let k = p.degree();
    let mut out = Alternating::zero(p.nvars(), k - 1);
    for (idx, c) in p.iter() {
        if let Some(pos) = idx.iter().position(|&j| j == i) {
            let mut rest = idx.clone();
            rest.remove(pos);
            let sign_neg = (k - 1 - pos) % 2 == 1;
            out.add_sorted(rest, if sign_neg { -c } else { c.clone() });
        }
    }
    out
}

/// Schouten bracket of multivector fields.
///
/// Extends the Lie bracket of vector fields with `[X, f] = X(f)` and
/// `[f, g] = 0`; graded antisymmetric,
/// `[P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]`. Computed as
/// `Σ_i ∂P/∂θ_i ∧ ∂Q/∂x_i - (-1)^{(p-1)(q-1)} ∂Q/∂θ_i ∧ ∂P/∂x_i`
/// with right derivatives in the odd variables.
pub fn schouten_bracket(p: &MultiVectorField, q: &MultiVectorField) -> MultiVectorField {
    assert_eq!(p.nvars(), q.nvars(), "dimension mismatch");
    let n = p.nvars();
    let (dp, dq) = (p.degree(), q.degree());
    let out_degree = (dp + dq).max(1) - 1;
    let mut out = MultiVectorField::zero(n, out_degree);
    if dp + dq == 0 {
        return out;
    }
    let sign_flip = ((dp as i64 - 1) * (dq as i64 - 1)).rem_euclid(2) == 1;
    for i in 0..n {
        if dp > 0 {
            let dq_dx = q.diff(i);
            if !dq_dx.is_zero() {
                out = &out + &odd_right_derivative(p, i).wedge(&dq_dx);
            }
        }
        if dq > 0 {
            let dp_dx = p.diff(i);
            if !dp_dx.is_zero() {
                let t = odd_right_derivative(q, i).wedge(&dp_dx);
                out = if sign_flip { &out + &t } else { &out - &t };
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn dx(n: usize, i: usize) -> DifferentialForm {
        DifferentialForm::basis(n, &[i])
    }

    fn partial(n: usize, i: usize) -> MultiVectorField {
        MultiVectorField::basis(n, &[i])
    }

    #[test]
    fn exterior_derivative_examples() {
        let n = 2;
        assert_eq!(
            exterior_derivative(&DifferentialForm::function(x(n, 0))),
            dx(n, 0)
        );
        let a = DifferentialForm::term(x(n, 0), &[1]);
        assert_eq!(exterior_derivative(&a), DifferentialForm::basis(n, &[0, 1]));
        let b = DifferentialForm::term(x(n, 1), &[0]);
        assert_eq!(
            exterior_derivative(&b),
            -DifferentialForm::basis(n, &[0, 1])
        );
        let top = DifferentialForm::term(x(n, 0), &[0, 1]);
        let d = exterior_derivative(&top);
        assert!(d.is_zero());
        assert_eq!(d.degree(), 3);
    }

    #[test]
    fn lie_derivative_examples() {
        let n = 2;
        let a = DifferentialForm::term(x(n, 0), &[1]);
        assert_eq!(lie_derivative(&partial(n, 0), &a), dx(n, 1));
        let f = DifferentialForm::function(&x(n, 0) * &x(n, 1));
        assert_eq!(
            lie_derivative(&partial(n, 1), &f),
            DifferentialForm::function(x(n, 0))
        );
        let v = MultiVectorField::term(x(n, 0), &[1]);
        assert_eq!(lie_derivative(&v, &dx(n, 1)), dx(n, 0));
    }

    #[test]
    fn schouten_extends_lie_bracket() {
        let n = 2;
        let a = partial(n, 0);
        let b = MultiVectorField::term(x(n, 0), &[1]);
        assert_eq!(schouten_bracket(&a, &b), partial(n, 1));
        assert_eq!(lie_bracket(&a, &b), partial(n, 1));
        let f = MultiVectorField::function(&x(n, 0) * &x(n, 1));
        assert_eq!(
            schouten_bracket(&b, &f),
            MultiVectorField::function(&x(n, 0) * &x(n, 0))
        );
        let g = MultiVectorField::function(x(n, 1));
        assert!(schouten_bracket(&f, &g).is_zero());
    }

    #[test]
    fn heisenberg_bivector_is_poisson() {
        let n = 3;
        let pi = MultiVectorField::term(x(n, 2), &[0, 1]);
        let b = schouten_bracket(&pi, &pi);
        assert!(b.is_zero());
        assert_eq!(b.degree(), 3);
    }

    #[test]
    fn non_poisson_witness_has_single_component() {
        let n = 4;
        let pi = &MultiVectorField::basis(n, &[0, 1]) + &MultiVectorField::term(x(n, 0), &[2, 3]);
        let b = schouten_bracket(&pi, &pi);
        let comps: Vec<_> = b.iter().collect();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, &vec![1, 2, 3]);
        assert_eq!(comps[0].1, &Polynomial::from_int(n, -2));
    }
}
