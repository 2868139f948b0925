use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::ratpoly::{Polynomial, Rational};

/// Marker for the two kinds of alternating tensor fields.
pub trait Variance: Clone + Copy + fmt::Debug + PartialEq + Eq + Default {
    /// Prefix for a basis element in text output: `d` for `∂_i`, `dx` for `dx_i`.
    const BASIS: &'static str;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub struct Contravariant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub struct Covariant;

impl Variance for Contravariant {
    const BASIS: &'static str = "d";
}

impl Variance for Covariant {
    const BASIS: &'static str = "dx";
}

/// Alternating tensor field of fixed degree on `R^n`.
///
/// Components are stored only on strictly increasing index tuples, with
/// `α = Σ_{i1<..<ip} α_I dx_{i1}∧..∧dx_{ip}` (no `1/p!` factors), so
/// `α(∂_{i1},..,∂_{ip}) = α_I`. Zero components are never stored. A field of
/// degree greater than `n` is the canonical zero object of that degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alternating<V> {
    nvars: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Polynomial>,
    _kind: PhantomData<V>,
}

/// Multivector field; degree 1 elements are vector fields.
pub type MultiVectorField = Alternating<Contravariant>;

/// Differential form; degree 0 elements are functions.
pub type DifferentialForm = Alternating<Covariant>;

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Determinant by cofactor expansion along the first row.
pub(crate) fn determinant(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k => {
            let mut acc = Polynomial::zero(nvars);
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let t = &m[0][col] * &determinant(&minor, nvars);
                if col % 2 == 0 {
                    acc += &t;
                } else {
                    acc -= &t;
                }
            }
            acc
        }
    }
}

/// Indices of the `k`-element subsets of `0..n`, in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl<V: Variance> Alternating<V> {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        Alternating {
            nvars,
            degree,
            comps: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    /// Degree-0 field holding the function `f`.
    pub fn function(f: Polynomial) -> Self {
        let mut out = Self::zero(f.nvars(), 0);
        out.add_sorted(Vec::new(), f);
        out
    }

    /// The basis element `e_{i1}∧..∧e_{ik}` (zero-based, any order).
    pub fn basis(nvars: usize, indices: &[usize]) -> Self {
        Self::term(Polynomial::one(nvars), indices)
    }

    /// `f · e_{i1}∧..∧e_{ik}`.
    pub fn term(f: Polynomial, indices: &[usize]) -> Self {
        let nvars = f.nvars();
        let mut out = Self::zero(nvars, indices.len());
        out.add_component(indices, &f);
        out
    }

    /// Builds a field from components on arbitrary index tuples; unsorted
    /// tuples contribute with the sign of the sorting permutation and tuples
    /// with a repeated index contribute nothing.
    pub fn from_components<I>(nvars: usize, degree: usize, components: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        let mut out = Self::zero(nvars, degree);
        for (idx, p) in components {
            if idx.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: idx.len(),
                });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= nvars) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    n: nvars,
                });
            }
            if p.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            out.add_component(&idx, &p);
        }
        Ok(out)
    }

    /// Vector field (or 1-form) with the given components.
    pub fn from_vector(components: Vec<Polynomial>) -> Self {
        let nvars = components.len();
        let mut out = Self::zero(nvars, 1);
        for (i, p) in components.into_iter().enumerate() {
            out.add_sorted(vec![i], p);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Nonzero components on increasing index tuples, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.comps.iter()
    }

    /// Component on an arbitrary index tuple, including the sorting sign.
    pub fn coeff(&self, indices: &[usize]) -> Polynomial {
        let mut idx = indices.to_vec();
        match sort_with_sign(&mut idx) {
            None => Polynomial::zero(self.nvars),
            Some(s) => match self.comps.get(&idx) {
                None => Polynomial::zero(self.nvars),
                Some(p) if s > 0 => p.clone(),
                Some(p) => -p,
            },
        }
    }

    /// The function held by a degree-0 field.
    pub fn as_function(&self) -> Polynomial {
        assert_eq!(self.degree, 0, "not a degree-0 field");
        self.coeff(&[])
    }

    /// Components `(v_1, .., v_n)` of a degree-1 field.
    pub fn as_vector(&self) -> Vec<Polynomial> {
        assert_eq!(self.degree, 1, "not a degree-1 field");
        (0..self.nvars).map(|i| self.coeff(&[i])).collect()
    }

    pub(crate) fn add_sorted(&mut self, idx: Vec<usize>, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        match self.comps.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &p;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `f · e_I` for an arbitrary tuple `I`.
    pub(crate) fn add_component(&mut self, indices: &[usize], f: &Polynomial) {
        debug_assert_eq!(indices.len(), self.degree);
        let mut idx = indices.to_vec();
        if let Some(s) = sort_with_sign(&mut idx) {
            self.add_sorted(idx, if s > 0 { f.clone() } else { -f });
        }
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "dimension mismatch");
        assert_eq!(self.degree, other.degree, "degree mismatch");
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(self + other)
    }

    /// Pointwise product with a function.
    pub fn mul_fn(&self, f: &Polynomial) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (idx, p) in &self.comps {
            out.add_sorted(idx.clone(), p * f);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.map_coeffs(|p| p.scale_int(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (idx, p) in &self.comps {
            out.add_sorted(idx.clone(), f(p));
        }
        out
    }

    /// Coefficient-wise partial derivative `∂/∂x_{i+1}`.
    pub fn diff(&self, i: usize) -> Self {
        self.map_coeffs(|p| p.diff(i))
    }

    /// Exterior product. Graded-commutative: `a∧b = (-1)^{|a||b|} b∧a`.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "dimension mismatch");
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        if out.degree > self.nvars {
            return out;
        }
        for (a, pa) in &self.comps {
            for (b, pb) in &other.comps {
                let mut idx: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                if let Some(s) = sort_with_sign(&mut idx) {
                    let prod = pa * pb;
                    out.add_sorted(idx, if s > 0 { prod } else { -prod });
                }
            }
        }
        out
    }

    /// Full contraction against `degree` arguments of the dual kind, given by
    /// their component vectors: `Σ_I c_I det[arg_l(e_{i_k})]`.
    pub fn evaluate(&self, args: &[Vec<Polynomial>]) -> Polynomial {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut acc = Polynomial::zero(self.nvars);
        for (idx, c) in &self.comps {
            let m: Vec<Vec<Polynomial>> = idx
                .iter()
                .map(|&i| args.iter().map(|a| a[i].clone()).collect())
                .collect();
            let det = determinant(&m, self.nvars);
            if !det.is_zero() {
                acc += &(c * &det);
            }
        }
        acc
    }

    /// Contraction of the first slot with a degree-1 argument of the dual
    /// kind: `(i_v α)(..) = α(v, ..)`.
    pub fn contract_first(&self, v: &[Polynomial]) -> Self {
        assert_eq!(v.len(), self.nvars, "dimension mismatch");
        let mut out = Self::zero(self.nvars, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (idx, c) in &self.comps {
            for (pos, &i) in idx.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let t = &v[i] * c;
                out.add_sorted(rest, if pos % 2 == 0 { t } else { -t });
            }
        }
        out
    }
}

impl<V: Variance> Add for &Alternating<V> {
    type Output = Alternating<V>;

    fn add(self, rhs: &Alternating<V>) -> Alternating<V> {
        self.check_same_shape(rhs);
        let mut out = self.clone();
        for (idx, p) in &rhs.comps {
            out.add_sorted(idx.clone(), p.clone());
        }
        out
    }
}

impl<V: Variance> Add for Alternating<V> {
    type Output = Alternating<V>;

    fn add(self, rhs: Alternating<V>) -> Alternating<V> {
        &self + &rhs
    }
}

impl<V: Variance> Sub for &Alternating<V> {
    type Output = Alternating<V>;

    fn sub(self, rhs: &Alternating<V>) -> Alternating<V> {
        self.check_same_shape(rhs);
        let mut out = self.clone();
        for (idx, p) in &rhs.comps {
            out.add_sorted(idx.clone(), -p);
        }
        out
    }
}

impl<V: Variance> Sub for Alternating<V> {
    type Output = Alternating<V>;

    fn sub(self, rhs: Alternating<V>) -> Alternating<V> {
        &self - &rhs
    }
}

impl<V: Variance> Neg for &Alternating<V> {
    type Output = Alternating<V>;

    fn neg(self) -> Alternating<V> {
        self.map_coeffs(|p| -p)
    }
}

impl<V: Variance> Neg for Alternating<V> {
    type Output = Alternating<V>;

    fn neg(self) -> Alternating<V> {
        -&self
    }
}

/// Basis label of an increasing index tuple, e.g. `dx1^dx3` or `d2^d4`.
pub fn basis_label<V: Variance>(idx: &[usize]) -> String {
    idx.iter()
        .map(|i| format!("{}{}", V::BASIS, i + 1))
        .collect::<Vec<_>>()
        .join("^")
}

impl<V: Variance> fmt::Display for Alternating<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (idx, p)) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if idx.is_empty() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*{}", basis_label::<V>(idx))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn wedge_examples() {
        let n = 2;
        let dx1 = DifferentialForm::basis(n, &[0]);
        let dx2 = DifferentialForm::basis(n, &[1]);
        assert_eq!(dx1.wedge(&dx2).coeff(&[0, 1]), Polynomial::one(n));
        assert_eq!(dx1.wedge(&dx2).coeff(&[1, 0]), -Polynomial::one(n));
        assert!(dx1.wedge(&dx1).is_zero());
        let a = dx1.mul_fn(&x(n, 0));
        assert_eq!(a.wedge(&dx2), DifferentialForm::term(x(n, 0), &[0, 1]));
    }

    #[test]
    fn wedge_is_graded_commutative() {
        let n = 4;
        let a = DifferentialForm::term(x(n, 0), &[0, 2]);
        let b = DifferentialForm::term(x(n, 3), &[1]);
        assert_eq!(a.wedge(&b), b.wedge(&a));
        let c = DifferentialForm::term(x(n, 1), &[3]);
        assert_eq!(b.wedge(&c), -c.wedge(&b));
    }

    #[test]
    fn degree_above_dimension_is_zero_object() {
        let n = 2;
        let a = MultiVectorField::basis(n, &[0, 1]);
        let b = MultiVectorField::basis(n, &[0]);
        let w = a.wedge(&b);
        assert!(w.is_zero());
        assert_eq!(w.degree(), 3);
    }

    #[test]
    fn from_components_normalizes_order() {
        let n = 3;
        let f = DifferentialForm::from_components(
            n,
            2,
            vec![(vec![2, 0], x(n, 1)), (vec![1, 1], x(n, 0))],
        )
        .unwrap();
        assert_eq!(f.coeff(&[0, 2]), -x(n, 1));
        assert_eq!(f.iter().count(), 1);
        assert!(DifferentialForm::from_components(n, 1, vec![(vec![3], x(n, 0))]).is_err());
        assert!(DifferentialForm::from_components(n, 2, vec![(vec![1], x(n, 0))]).is_err());
    }

    #[test]
    fn evaluation_matches_components() {
        let n = 3;
        let f = DifferentialForm::term(x(n, 2), &[0, 1]);
        let e = |i: usize| {
            (0..n)
                .map(|k| Polynomial::from_int(n, (k == i) as i64))
                .collect::<Vec<_>>()
        };
        assert_eq!(f.evaluate(&[e(0), e(1)]), x(n, 2));
        assert_eq!(f.evaluate(&[e(1), e(0)]), -x(n, 2));
        assert!(f.evaluate(&[e(0), e(2)]).is_zero());
    }

    #[test]
    fn increasing_tuples_enumerates_subsets() {
        assert_eq!(
            increasing_tuples(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(increasing_tuples(2, 0), vec![Vec::<usize>::new()]);
        assert!(increasing_tuples(2, 3).is_empty());
    }
}
