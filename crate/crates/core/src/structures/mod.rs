//! Defect computations for Poisson, Poisson-Nijenhuis and Poisson
//! quasi-Nijenhuis structures.
//!
//! Every check returns a [`DefectReport`] listing all conditions, including
//! the ones evaluated after a first failure.

mod report;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exterior::{
    contract_pair, d_n_cartan, exterior_derivative, i_n, inverse_bivector, koszul_bracket,
    koszul_bracket_graded_unchecked, lie_bracket, nijenhuis_torsion, omega_n_symmetric_part,
    omega_n_unchecked, pi_n_unchecked, schouten_bracket, sharp, sharp_extend, skew_defect,
    CotangentMap, DifferentialForm, EndomorphismField, MultiVectorField, VectorValuedTwoForm,
};
use crate::ratpoly::Polynomial;

pub use report::{Defect, DefectEntry, DefectReport, PairedVerdict};

pub const POISSON: &str = "[pi,pi] = 0";
pub const COMPATIBILITY: &str = "N pi# = pi# N^T and C^N = 0";
pub const QUASI_TORSION: &str = "T_N(X,Y) = pi#(i_{X^Y} phi)";
pub const PHI_CLOSED: &str = "d phi = 0";
pub const INP_CLOSED: &str = "d(i_N phi) = 0";

/// The data `(π, N, φ, σ, ω)` on `R^n`; only `π` is mandatory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureData {
    pub n: usize,
    pub pi: MultiVectorField,
    pub endo: Option<EndomorphismField>,
    pub phi: Option<DifferentialForm>,
    pub sigma: Option<DifferentialForm>,
    pub omega: Option<DifferentialForm>,
}

impl StructureData {
    pub fn new(pi: MultiVectorField) -> Self {
        StructureData {
            n: pi.nvars(),
            pi,
            endo: None,
            phi: None,
            sigma: None,
            omega: None,
        }
    }

    pub fn pqn(pi: MultiVectorField, endo: EndomorphismField, phi: DifferentialForm) -> Self {
        StructureData {
            endo: Some(endo),
            phi: Some(phi),
            ..Self::new(pi)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let check = |found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: n, found })
            }
        };
        let check_deg = |found: usize, expected: usize| {
            if found == expected {
                Ok(())
            } else {
                Err(Error::DegreeMismatch { expected, found })
            }
        };
        check(self.pi.nvars())?;
        check_deg(self.pi.degree(), 2)?;
        if let Some(e) = &self.endo {
            check(e.nvars())?;
        }
        for (form, deg) in [(&self.phi, 3), (&self.sigma, 2), (&self.omega, 2)] {
            if let Some(f) = form {
                check(f.nvars())?;
                check_deg(f.degree(), deg)?;
            }
        }
        if self.phi.is_some() && self.sigma.is_some() {
            return Err(Error::Precondition(
                "supply at most one of phi and sigma".into(),
            ));
        }
        Ok(())
    }

    pub fn endomorphism(&self) -> Result<&EndomorphismField> {
        self.endo
            .as_ref()
            .ok_or_else(|| Error::Precondition("missing endomorphism N".into()))
    }

    /// `φ` as given, or `dσ` when `σ` is supplied instead.
    pub fn twisting_form(&self) -> Result<DifferentialForm> {
        match (&self.phi, &self.sigma) {
            (Some(phi), _) => Ok(phi.clone()),
            (None, Some(sigma)) => Ok(exterior_derivative(sigma)),
            (None, None) => Err(Error::Precondition("missing 3-form phi".into())),
        }
    }

    fn triple(&self) -> Result<(&MultiVectorField, &EndomorphismField, DifferentialForm)> {
        self.validate()?;
        Ok((&self.pi, self.endomorphism()?, self.twisting_form()?))
    }
}

fn require_poisson(pi: &MultiVectorField) -> Result<()> {
    if pi.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: pi.degree(),
        });
    }
    if !poisson_defect(pi).is_zero() {
        return Err(Error::NotPoisson);
    }
    Ok(())
}

/// `[π, π]`.
pub fn poisson_defect(pi: &MultiVectorField) -> MultiVectorField {
    schouten_bracket(pi, pi)
}

fn one_based(i: usize) -> usize {
    i + 1
}

/// `x_k dx_i`.
fn scaled_dx(n: usize, k: usize, i: usize) -> DifferentialForm {
    DifferentialForm::term(Polynomial::var(n, k), &[i])
}

fn dx(n: usize, i: usize) -> DifferentialForm {
    DifferentialForm::basis(n, &[i])
}

/// Generators `x_i`, `dx_i`, `x_j dx_i` used for derivation-type identities.
pub fn generator_family(n: usize) -> Vec<(String, DifferentialForm)> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push((
            format!("x{}", one_based(i)),
            DifferentialForm::function(Polynomial::var(n, i)),
        ));
    }
    for i in 0..n {
        out.push((format!("dx{}", one_based(i)), dx(n, i)));
    }
    for i in 0..n {
        for j in 0..n {
            out.push((
                format!("x{}*dx{}", one_based(j), one_based(i)),
                scaled_dx(n, j, i),
            ));
        }
    }
    out
}

/// Lie algebroid defects of `(T*M)_π`: the anchor defects
/// `π♯[dx_i, dx_j]_π - [π♯dx_i, π♯dx_j]` and the Jacobiators of
/// `[·,·]_π` on `(dx_i, dx_j, x_k dx_l)`.
pub fn lie_algebroid_defect(pi: &MultiVectorField) -> Defect {
    let n = pi.nvars();
    let s = CotangentMap::sharp(pi);
    let br = |a: &DifferentialForm, b: &DifferentialForm| koszul_bracket(&s, a, b);
    let mut anchor = Vec::new();
    let mut jacobi = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (dx(n, i), dx(n, j));
            let d = &s.apply(&br(&a, &b)) - &lie_bracket(&s.apply(&a), &s.apply(&b));
            anchor.push((format!("(dx{},dx{})", i + 1, j + 1), Defect::MultiVector(d)));
            for k in 0..n {
                for l in 0..n {
                    let c = scaled_dx(n, k, l);
                    let jac = &(&br(&br(&a, &b), &c) + &br(&br(&b, &c), &a)) + &br(&br(&c, &a), &b);
                    jacobi.push((
                        format!("(dx{},dx{},x{}*dx{})", i + 1, j + 1, k + 1, l + 1),
                        Defect::Form(jac),
                    ));
                }
            }
        }
    }
    Defect::Family(vec![
        ("anchor".into(), Defect::Family(anchor)),
        ("jacobi".into(), Defect::Family(jacobi)),
    ])
}

/// `C^N(α, β) = [α,β]_{Nπ♯} - ([N^Tα,β]_π + [α,N^Tβ]_π - N^T[α,β]_π)`.
pub fn concomitant(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    alpha: &DifferentialForm,
    beta: &DifferentialForm,
) -> DifferentialForm {
    let s = CotangentMap::sharp(pi);
    let ns = s.compose_left(endo);
    let nt = |f: &DifferentialForm| {
        DifferentialForm::from_vector(endo.transpose_apply_vec(&f.as_vector()))
    };
    let first = koszul_bracket(&ns, alpha, beta);
    let a = koszul_bracket(&s, &nt(alpha), beta);
    let b = koszul_bracket(&s, alpha, &nt(beta));
    let c = nt(&koszul_bracket(&s, alpha, beta));
    &first - &(&(&a + &b) - &c)
}

/// `C^N` on the coordinate coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcomitantCN {
    nvars: usize,
    comps: BTreeMap<(usize, usize), DifferentialForm>,
}

impl ConcomitantCN {
    pub fn compute(pi: &MultiVectorField, endo: &EndomorphismField) -> Self {
        let n = pi.nvars();
        let mut comps = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = concomitant(pi, endo, &dx(n, i), &dx(n, j));
                if !c.is_zero() {
                    comps.insert((i, j), c);
                }
            }
        }
        ConcomitantCN { nvars: n, comps }
    }

    /// `C^N(dx_i, dx_j)` for any `i, j`.
    pub fn get(&self, i: usize, j: usize) -> DifferentialForm {
        if i > j {
            return -self.get(j, i);
        }
        self.comps
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| DifferentialForm::zero(self.nvars, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &DifferentialForm)> {
        self.comps.iter()
    }
}

fn concomitant_defect(pi: &MultiVectorField, endo: &EndomorphismField) -> Defect {
    let n = pi.nvars();
    let cn = ConcomitantCN::compute(pi, endo);
    let mut items = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            items.push((
                format!("(dx{},dx{})", i + 1, j + 1),
                Defect::Form(cn.get(i, j)),
            ));
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let lhs = concomitant(pi, endo, &scaled_dx(n, k, i), &dx(n, j));
                let rhs = cn.get(i, j).mul_fn(&Polynomial::var(n, k));
                items.push((
                    format!("(x{}*dx{},dx{})", k + 1, i + 1, j + 1),
                    Defect::Form(&lhs - &rhs),
                ));
            }
        }
    }
    Defect::Family(items)
}

fn compatibility_defect(pi: &MultiVectorField, endo: &EndomorphismField) -> Defect {
    Defect::Family(vec![
        ("skew".into(), Defect::Matrix(skew_defect(pi, endo))),
        ("C^N".into(), concomitant_defect(pi, endo)),
    ])
}

/// Compatibility of `π` and `N`: the bundle-map defect `Nπ♯ - π♯N^T` and
/// `C^N` on the coframe together with the function-linearity witnesses
/// `C^N(x_k dx_i, dx_j) - x_k C^N(dx_i, dx_j)`.
pub fn compatibility_defects(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
) -> Result<DefectReport> {
    require_poisson(pi)?;
    let mut r = DefectReport::new();
    r.push("N pi# = pi# N^T", Defect::Matrix(skew_defect(pi, endo)));
    r.push("C^N = 0", concomitant_defect(pi, endo));
    Ok(r)
}

/// `T_N(∂_i, ∂_j) - π♯(φ(∂_i, ∂_j, ·))` on frame pairs.
pub fn quasi_torsion_defect(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> VectorValuedTwoForm {
    let n = pi.nvars();
    let e = |i: usize| MultiVectorField::basis(n, &[i]);
    let t = nijenhuis_torsion(endo);
    let rhs =
        VectorValuedTwoForm::from_frame_fn(n, |i, j| sharp(pi, &contract_pair(phi, &e(i), &e(j))));
    t.sub(&rhs)
}

fn pn_entries(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> DefectReport {
    let mut r = DefectReport::new();
    r.push(POISSON, Defect::MultiVector(poisson_defect(pi)));
    r.push(COMPATIBILITY, compatibility_defect(pi, endo));
    r.push(
        QUASI_TORSION,
        Defect::VectorValued(quasi_torsion_defect(pi, endo, phi)),
    );
    r
}

/// Poisson quasi-Nijenhuis check on `(π, N, φ)`; `φ` may come from `σ`.
pub fn check_pqn(data: &StructureData) -> Result<DefectReport> {
    let (pi, endo, phi) = data.triple()?;
    Ok(check_pqn_parts(pi, endo, &phi))
}

pub fn check_pqn_parts(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> DefectReport {
    let mut r = pn_entries(pi, endo, phi);
    r.push(PHI_CLOSED, Defect::Form(exterior_derivative(phi)));
    r.push(
        INP_CLOSED,
        Defect::Form(exterior_derivative(&i_n(endo, phi))),
    );
    r
}

/// Poisson-Nijenhuis check: the first three entries of the quasi check with
/// `φ = 0`.
pub fn check_pn(pi: &MultiVectorField, endo: &EndomorphismField) -> DefectReport {
    pn_entries(pi, endo, &DifferentialForm::zero(pi.nvars(), 3))
}

fn graded_bracket(
    pi: &MultiVectorField,
    a: &DifferentialForm,
    b: &DifferentialForm,
) -> DifferentialForm {
    koszul_bracket_graded_unchecked(pi, a, b)
}

fn dn_square_unchecked(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> DefectReport {
    let n = pi.nvars();
    let dn2 = |a: &DifferentialForm| d_n_cartan(endo, &d_n_cartan(endo, a));
    let mut functions = Vec::new();
    let mut one_forms = Vec::new();
    for i in 0..n {
        let f = DifferentialForm::function(Polynomial::var(n, i));
        functions.push((
            format!("x{}", i + 1),
            Defect::Form(&dn2(&f) - &graded_bracket(pi, phi, &f)),
        ));
        let a = dx(n, i);
        one_forms.push((
            format!("dx{}", i + 1),
            Defect::Form(&dn2(&a) - &graded_bracket(pi, phi, &a)),
        ));
    }
    let dphi = exterior_derivative(phi);
    let mut composite = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let e = |m: usize| MultiVectorField::basis(n, &[m]).as_vector();
                let flat = dphi
                    .contract_first(&e(i))
                    .contract_first(&e(j))
                    .contract_first(&e(k));
                composite.push((
                    format!("({},{},{})", i + 1, j + 1, k + 1),
                    Defect::MultiVector(sharp(pi, &flat)),
                ));
            }
        }
    }
    let mut r = DefectReport::new();
    r.push("d_N^2 f = [phi,f]_pi", Defect::Family(functions));
    r.push("d_N^2 dx = [phi,dx]_pi", Defect::Family(one_forms));
    r.push("pi# (d phi)_flat = 0", Defect::Family(composite));
    r
}

/// `d_N² - [φ, ·]_π` on coordinate functions and differentials, and the
/// composite `π♯ ∘ (dφ)♭` on coordinate 3-frames.
pub fn dn_square_defect(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> Result<DefectReport> {
    require_poisson(pi)?;
    Ok(dn_square_unchecked(pi, endo, phi))
}

/// `[π, π_N]`, `[π_N, π_N] - 2π♯φ`, and the squares
/// `π♯(d_N α) + [π_N, π♯α]` over the generator family.
pub fn bihamiltonian_checks(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> Result<DefectReport> {
    let skew = skew_defect(pi, endo);
    if !skew.is_zero() {
        return Err(Error::SkewViolation { defect: skew });
    }
    let n = pi.nvars();
    let pin = pi_n_unchecked(pi, endo);
    let mut squares = Vec::new();
    for (label, a) in generator_family(n) {
        let lhs = sharp_extend(pi, &d_n_cartan(endo, &a));
        let rhs = schouten_bracket(&pin, &sharp_extend(pi, &a));
        squares.push((label, Defect::MultiVector(&lhs + &rhs)));
    }
    let mut r = DefectReport::new();
    r.push(
        "[pi,pi_N] = 0",
        Defect::MultiVector(schouten_bracket(pi, &pin)),
    );
    r.push(
        "[pi_N,pi_N] = 2 pi#(phi)",
        Defect::MultiVector(&schouten_bracket(&pin, &pin) - &sharp_extend(pi, phi).scale_int(2)),
    );
    r.push("pi# d_N = -[pi_N, pi#(.)]", Defect::Family(squares));
    Ok(r)
}

/// Symplectic quasi-Nijenhuis check on `(ω, N, φ)`: `ω_N` a 2-form,
/// `dω_N = 0`, `[ω_N, ω_N]_π = 2φ` for the inverse bivector `π`, and
/// `dφ = 0`.
pub fn symplectic_quasi_check(
    omega: &DifferentialForm,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
) -> Result<DefectReport> {
    let pi = inverse_bivector(omega)?;
    let omega_n = omega_n_unchecked(omega, endo);
    let mut r = DefectReport::new();
    r.push(
        "omega_N is a 2-form",
        Defect::Matrix(omega_n_symmetric_part(omega, endo)),
    );
    r.push("d omega_N = 0", Defect::Form(exterior_derivative(&omega_n)));
    r.push(
        "[omega_N,omega_N]_pi = 2 phi",
        Defect::Form(&graded_bracket(&pi, &omega_n, &omega_n) - &phi.scale_int(2)),
    );
    r.push(PHI_CLOSED, Defect::Form(exterior_derivative(phi)));
    Ok(r)
}

/// `d_N[α,β]_π - [d_N α, β]_π - (-1)^{p-1} [α, d_N β]_π` over unordered
/// pairs of generators.
pub fn derivation_defect(pi: &MultiVectorField, endo: &EndomorphismField) -> Defect {
    let n = pi.nvars();
    let gens = generator_family(n);
    let dn = |a: &DifferentialForm| d_n_cartan(endo, a);
    let mut items = Vec::new();
    for (ia, (la, a)) in gens.iter().enumerate() {
        for (lb, b) in gens.iter().skip(ia) {
            let p = a.degree();
            let lhs = if p + b.degree() == 0 {
                DifferentialForm::zero(n, 0)
            } else {
                dn(&graded_bracket(pi, a, b))
            };
            let first = graded_bracket(pi, &dn(a), b);
            let second = graded_bracket(pi, a, &dn(b));
            let rest = if p % 2 == 1 {
                &first + &second
            } else {
                &first - &second
            };
            items.push((format!("({la},{lb})"), Defect::Form(&lhs - &rest)));
        }
    }
    Defect::Family(items)
}

/// Both sides of the quasi-Lie bialgebroid equivalence. Left: the Poisson
/// quasi-Nijenhuis conditions. Right: `(T*M)_π` is a Lie algebroid, `d_N`
/// is a derivation of `[·,·]_π`, `d_N² = [φ, ·]_π`, `d_N φ = 0`, `dφ = 0`.
pub fn verify_theorem_a(data: &StructureData) -> Result<PairedVerdict> {
    let (pi, endo, phi) = data.triple()?;
    let left = check_pqn_parts(pi, endo, &phi);
    let mut right = DefectReport::new();
    right.push("(T*M)_pi is a Lie algebroid", lie_algebroid_defect(pi));
    right.push(
        "d_N is a derivation of [.,.]_pi",
        derivation_defect(pi, endo),
    );
    let sq = dn_square_unchecked(pi, endo, &phi);
    right.push(
        "d_N^2 = [phi,.]_pi",
        Defect::Family(
            sq.entries()
                .iter()
                .map(|e| (e.identity.clone(), e.defect.clone()))
                .collect(),
        ),
    );
    right.push("d_N phi = 0", Defect::Form(d_n_cartan(endo, &phi)));
    right.push(PHI_CLOSED, Defect::Form(exterior_derivative(&phi)));
    Ok(PairedVerdict { left, right })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn std_pi(n: usize) -> MultiVectorField {
        let mut p = MultiVectorField::zero(n, 2);
        for k in 0..n / 2 {
            p = &p + &MultiVectorField::basis(n, &[2 * k, 2 * k + 1]);
        }
        p
    }

    #[test]
    fn poisson_examples() {
        let pi2 = MultiVectorField::term(&x(2, 0) * &x(2, 1), &[0, 1]);
        assert!(poisson_defect(&pi2).is_zero());
        let heis = MultiVectorField::term(x(3, 2), &[0, 1]);
        assert!(poisson_defect(&heis).is_zero());
        let bad = &std_pi(4) + &MultiVectorField::term(x(4, 0), &[2, 3]);
        assert!(!poisson_defect(&bad).is_zero());
    }

    #[test]
    fn compatibility_trivial_cases() {
        let pi = std_pi(2);
        let r = compatibility_defects(&pi, &EndomorphismField::identity(2)).unwrap();
        assert!(r.verdict());
        let r = compatibility_defects(&pi, &EndomorphismField::zero(2)).unwrap();
        assert!(r.verdict());
        let bad = &std_pi(4) + &MultiVectorField::term(x(4, 0), &[2, 3]);
        assert_eq!(
            compatibility_defects(&bad, &EndomorphismField::zero(4)),
            Err(Error::NotPoisson)
        );
    }

    #[test]
    fn scalar_endomorphism_compatible_only_in_two_dimensions() {
        let r = compatibility_defects(&std_pi(2), &EndomorphismField::scalar(x(2, 0))).unwrap();
        assert!(r.verdict());
        let n = 4;
        let endo = EndomorphismField::scalar(x(n, 0));
        let r = compatibility_defects(&std_pi(n), &endo).unwrap();
        assert!(r.entries()[0].is_zero);
        assert!(!r.entries()[1].is_zero);
    }

    #[test]
    fn torsion_defect_examples() {
        let n = 2;
        let mut shear = EndomorphismField::zero(n);
        shear.set_entry(0, 0, x(n, 1));
        let phi = DifferentialForm::zero(n, 3);
        let d = quasi_torsion_defect(&std_pi(n), &shear, &phi);
        assert_eq!(d.get(0, 1), MultiVectorField::term(x(n, 1), &[0]));
        let pi0 = MultiVectorField::zero(3, 2);
        let phi3 = DifferentialForm::basis(3, &[0, 1, 2]);
        let e = EndomorphismField::identity(3);
        assert!(quasi_torsion_defect(&pi0, &e, &phi3).is_zero());
    }

    #[test]
    fn check_pqn_examples() {
        let d = StructureData::pqn(
            std_pi(2),
            EndomorphismField::zero(2),
            DifferentialForm::zero(2, 3),
        );
        let r = check_pqn(&d).unwrap();
        assert_eq!(r.entries().len(), 5);
        assert!(r.verdict());
        let missing = StructureData::new(std_pi(2));
        assert!(check_pqn(&missing).is_err());
    }

    #[test]
    fn check_pn_is_prefix_of_check_pqn() {
        let n = 2;
        let endo = EndomorphismField::scalar(x(n, 0));
        let pn = check_pn(&std_pi(n), &endo);
        let pqn = check_pqn_parts(&std_pi(n), &endo, &DifferentialForm::zero(n, 3));
        assert_eq!(pn.entries(), &pqn.entries()[..3]);
    }

    #[test]
    fn check_pn_rejects_complex_structure() {
        let n = 2;
        let j = EndomorphismField::from_columns(&[
            MultiVectorField::basis(n, &[1]),
            -MultiVectorField::basis(n, &[0]),
        ])
        .unwrap();
        let r = check_pn(&std_pi(n), &j);
        assert!(!r.verdict());
        match &r.entries()[1].defect {
            Defect::Family(items) => assert!(!items[0].1.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
        let r = check_pn(&MultiVectorField::zero(n, 2), &j);
        assert!(r.verdict());
    }

    #[test]
    fn dn_square_trivial_cases() {
        let n = 3;
        let pi = MultiVectorField::term(x(n, 2), &[0, 1]);
        let phi = DifferentialForm::zero(n, 3);
        for endo in [EndomorphismField::identity(n), EndomorphismField::zero(n)] {
            assert!(dn_square_defect(&pi, &endo, &phi).unwrap().verdict());
        }
    }

    #[test]
    fn bihamiltonian_two_dimensional_cases() {
        let n = 2;
        let phi = DifferentialForm::zero(n, 3);
        let r = bihamiltonian_checks(&std_pi(n), &EndomorphismField::identity(n), &phi).unwrap();
        assert!(r.verdict());
        let r =
            bihamiltonian_checks(&std_pi(n), &EndomorphismField::scalar(x(n, 0)), &phi).unwrap();
        assert!(r.verdict());
    }

    #[test]
    fn theorem_a_on_frame_three_form() {
        let n = 3;
        let data = StructureData::pqn(
            MultiVectorField::basis(n, &[0, 1]),
            EndomorphismField::zero(n),
            DifferentialForm::basis(n, &[0, 1, 2]),
        );
        let v = verify_theorem_a(&data).unwrap();
        assert_eq!(v.verdicts(), (false, false));
        assert!(!v.left.entry(QUASI_TORSION).unwrap().is_zero);
    }

    #[test]
    fn theorem_a_trivial_pqn() {
        let data = StructureData::pqn(
            std_pi(2),
            EndomorphismField::zero(2),
            DifferentialForm::zero(2, 3),
        );
        assert_eq!(verify_theorem_a(&data).unwrap().verdicts(), (true, true));
    }
}
