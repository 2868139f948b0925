//! Calculus attached to a `(1,1)`-tensor `N`: the derivation `i_N`, the
//! deformed bracket `[·,·]_N`, the differential `d_N`, and the Nijenhuis
//! torsion.

use std::collections::BTreeMap;
use std::fmt;

use super::alternating::{increasing_tuples, DifferentialForm, MultiVectorField};
use super::calculus::{apply_vector, exterior_derivative, lie_bracket_vec};
use super::endomorphism::{unit, EndomorphismField};
use crate::ratpoly::Polynomial;

/// `(i_N α)(X_1,..,X_p) = Σ_k α(X_1,..,N X_k,..,X_p)`; zero on functions.
pub fn i_n(endo: &EndomorphismField, alpha: &DifferentialForm) -> DifferentialForm {
    let n = alpha.nvars();
    let mut out = DifferentialForm::zero(n, alpha.degree());
    if alpha.degree() == 0 {
        return out;
    }
    for idx in increasing_tuples(n, alpha.degree()) {
        let mut acc = Polynomial::zero(n);
        for k in 0..idx.len() {
            for m in 0..n {
                let nm = endo.entry(m, idx[k]);
                if nm.is_zero() {
                    continue;
                }
                let mut slot = idx.clone();
                slot[k] = m;
                let c = alpha.coeff(&slot);
                if !c.is_zero() {
                    acc += &(nm * &c);
                }
            }
        }
        out.add_sorted(idx, acc);
    }
    out
}

fn bracket_n_vec(endo: &EndomorphismField, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
    let nx = endo.apply_vec(x);
    let ny = endo.apply_vec(y);
    let a = lie_bracket_vec(&nx, y);
    let b = lie_bracket_vec(x, &ny);
    let c = endo.apply_vec(&lie_bracket_vec(x, y));
    a.iter()
        .zip(&b)
        .zip(&c)
        .map(|((a, b), c)| &(a + b) - c)
        .collect()
}

/// `[X, Y]_N = [NX, Y] + [X, NY] - N[X, Y]`.
pub fn bracket_n(
    endo: &EndomorphismField,
    x: &MultiVectorField,
    y: &MultiVectorField,
) -> MultiVectorField {
    MultiVectorField::from_vector(bracket_n_vec(endo, &x.as_vector(), &y.as_vector()))
}

/// `d_N` from its Chevalley–Eilenberg formula with anchor `N` and bracket
/// `[·,·]_N`, evaluated on the coordinate frame.
pub fn d_n_direct(endo: &EndomorphismField, alpha: &DifferentialForm) -> DifferentialForm {
    let n = alpha.nvars();
    let p = alpha.degree();
    let mut out = DifferentialForm::zero(n, p + 1);
    if p + 1 > n {
        return out;
    }
    // [∂_a, ∂_b]_N = ∂_a(N∂_b) - ∂_b(N∂_a), componentwise
    let frame_bracket = |a: usize, b: usize| -> Vec<Polynomial> {
        (0..n)
            .map(|m| &endo.entry(m, b).diff(a) - &endo.entry(m, a).diff(b))
            .collect()
    };
    for idx in increasing_tuples(n, p + 1) {
        let mut acc = Polynomial::zero(n);
        for i in 0..=p {
            let mut rest = idx.clone();
            rest.remove(i);
            let c = alpha.coeff(&rest);
            if c.is_zero() {
                continue;
            }
            let t = apply_vector(&endo.column_vec(idx[i]), &c);
            if i % 2 == 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        for i in 0..=p {
            for k in i + 1..=p {
                let v = frame_bracket(idx[i], idx[k]);
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i && j != k)
                    .map(|(_, &j)| j)
                    .collect();
                let mut t = Polynomial::zero(n);
                for (m, vm) in v.iter().enumerate() {
                    if vm.is_zero() {
                        continue;
                    }
                    let mut slot = Vec::with_capacity(p);
                    slot.push(m);
                    slot.extend_from_slice(&rest);
                    let c = alpha.coeff(&slot);
                    if !c.is_zero() {
                        t += &(vm * &c);
                    }
                }
                if (i + k) % 2 == 0 {
                    acc += &t;
                } else {
                    acc -= &t;
                }
            }
        }
        out.add_sorted(idx, acc);
    }
    out
}

/// `d_N = i_N ∘ d - d ∘ i_N`.
pub fn d_n_cartan(endo: &EndomorphismField, alpha: &DifferentialForm) -> DifferentialForm {
    &i_n(endo, &exterior_derivative(alpha)) - &exterior_derivative(&i_n(endo, alpha))
}

/// A vector-valued 2-form, stored on the coordinate frame: component
/// `(i, j)` with `i < j` is the value on `(∂_i, ∂_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorValuedTwoForm {
    nvars: usize,
    comps: BTreeMap<(usize, usize), MultiVectorField>,
}

impl VectorValuedTwoForm {
    pub fn zero(nvars: usize) -> Self {
        VectorValuedTwoForm {
            nvars,
            comps: BTreeMap::new(),
        }
    }

    /// Evaluates `f(∂_i, ∂_j)` on every frame pair `i < j`.
    pub fn from_frame_fn(nvars: usize, f: impl Fn(usize, usize) -> MultiVectorField) -> Self {
        let mut out = Self::zero(nvars);
        for i in 0..nvars {
            for j in i + 1..nvars {
                out.set(i, j, f(i, j));
            }
        }
        out
    }

    fn set(&mut self, i: usize, j: usize, v: MultiVectorField) {
        debug_assert!(i < j);
        if v.is_zero() {
            self.comps.remove(&(i, j));
        } else {
            self.comps.insert((i, j), v);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Value on `(∂_i, ∂_j)` for any `i, j`.
    pub fn get(&self, i: usize, j: usize) -> MultiVectorField {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self
                .comps
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| MultiVectorField::zero(self.nvars, 1)),
            Greater => -self.get(j, i),
            Equal => MultiVectorField::zero(self.nvars, 1),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &MultiVectorField)> {
        self.comps.iter()
    }

    pub fn sub(&self, other: &VectorValuedTwoForm) -> VectorValuedTwoForm {
        Self::from_frame_fn(self.nvars, |i, j| &self.get(i, j) - &other.get(i, j))
    }
}

impl fmt::Display for VectorValuedTwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), v)) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "({},{}): {v}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// `T_N(X,Y) = [NX,NY] - N([NX,Y] + [X,NY] - N[X,Y])` on frame pairs.
pub fn nijenhuis_torsion(endo: &EndomorphismField) -> VectorValuedTwoForm {
    let n = endo.nvars();
    VectorValuedTwoForm::from_frame_fn(n, |i, j| {
        MultiVectorField::from_vector(torsion_vec(endo, &unit(n, i), &unit(n, j)))
    })
}

/// Torsion evaluated on arbitrary vector fields straight from the defining
/// bracket expression.
pub fn torsion_on(
    endo: &EndomorphismField,
    x: &MultiVectorField,
    y: &MultiVectorField,
) -> MultiVectorField {
    MultiVectorField::from_vector(torsion_vec(endo, &x.as_vector(), &y.as_vector()))
}

fn torsion_vec(endo: &EndomorphismField, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
    let nx = endo.apply_vec(x);
    let ny = endo.apply_vec(y);
    let a = lie_bracket_vec(&nx, &ny);
    let b = endo.apply_vec(&bracket_n_vec(endo, x, y));
    a.iter().zip(&b).map(|(a, b)| a - b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    /// N(∂1) = x2 ∂1, N(∂2) = 0.
    fn shear(n: usize) -> EndomorphismField {
        let mut e = EndomorphismField::zero(n);
        e.set_entry(0, 0, x(n, 1));
        e
    }

    #[test]
    fn i_n_examples() {
        let n = 2;
        let f = DifferentialForm::function(x(n, 0));
        assert!(i_n(&shear(n), &f).is_zero());
        let vol = DifferentialForm::basis(n, &[0, 1]);
        assert_eq!(i_n(&EndomorphismField::identity(n), &vol), vol.scale_int(2));
        let j = EndomorphismField::from_columns(&[
            MultiVectorField::basis(n, &[1]),
            -MultiVectorField::basis(n, &[0]),
        ])
        .unwrap();
        assert_eq!(
            i_n(&j, &DifferentialForm::basis(n, &[0])),
            -DifferentialForm::basis(n, &[1])
        );
    }

    #[test]
    fn bracket_n_examples() {
        let n = 2;
        let d1 = MultiVectorField::basis(n, &[0]);
        let d2 = MultiVectorField::basis(n, &[1]);
        let y = MultiVectorField::term(x(n, 0), &[1]);
        assert_eq!(bracket_n(&EndomorphismField::identity(n), &d1, &y), d2);
        assert_eq!(bracket_n(&shear(n), &d1, &d2), -d1.clone());
        assert!(bracket_n(&EndomorphismField::zero(n), &d1, &y).is_zero());
    }

    #[test]
    fn d_n_examples_agree_on_both_routes() {
        let n = 2;
        let id = EndomorphismField::identity(n);
        let a = DifferentialForm::term(x(n, 0), &[1]);
        let vol = DifferentialForm::basis(n, &[0, 1]);
        let s = shear(n);
        let f = DifferentialForm::function(x(n, 0));
        let b = DifferentialForm::term(x(n, 1), &[0]);
        let cases = [
            (&id, &a, vol.clone()),
            (&s, &f, DifferentialForm::term(x(n, 1), &[0])),
            (&s, &b, DifferentialForm::term(x(n, 1), &[0, 1])),
        ];
        for (endo, alpha, expected) in cases {
            assert_eq!(d_n_direct(endo, alpha), expected);
            assert_eq!(d_n_cartan(endo, alpha), expected);
        }
        assert!(d_n_cartan(&EndomorphismField::zero(n), &a).is_zero());
    }

    #[test]
    fn d_n_cartan_on_closed_form() {
        let n = 2;
        let s = shear(n);
        let closed = DifferentialForm::basis(n, &[0]);
        assert_eq!(
            d_n_cartan(&s, &closed),
            -exterior_derivative(&i_n(&s, &closed))
        );
    }

    #[test]
    fn torsion_examples() {
        let n = 2;
        let j = EndomorphismField::from_columns(&[
            MultiVectorField::basis(n, &[1]),
            -MultiVectorField::basis(n, &[0]),
        ])
        .unwrap();
        assert!(nijenhuis_torsion(&j).is_zero());
        assert!(nijenhuis_torsion(&EndomorphismField::scalar(x(n, 0))).is_zero());
        let t = nijenhuis_torsion(&shear(n));
        assert_eq!(t.get(0, 1), MultiVectorField::term(x(n, 1), &[0]));
        assert_eq!(t.get(1, 0), -MultiVectorField::term(x(n, 1), &[0]));
    }
}
