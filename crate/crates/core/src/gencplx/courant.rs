use super::section::{d_from_anchor, pairing, GeneralizedEndomorphism, GeneralizedSection};
use crate::error::{Error, Result};
use crate::exterior::{
    bracket_n, contract_pair, d_n_cartan, exterior_derivative, koszul_bracket, lie_bracket,
    lie_derivative, schouten_bracket, vector_apply, CotangentMap, DifferentialForm,
    EndomorphismField, MultiVectorField,
};
use crate::ratpoly::{rat, Polynomial};
use crate::structures::{poisson_defect, Defect, DefectReport};

fn d_fn(f: Polynomial) -> DifferentialForm {
    exterior_derivative(&DifferentialForm::function(f))
}

/// Standard bracket on `TM ⊕ T*M`:
/// `[X,Y] + L_X η - L_Y ξ + ½ d(ξ(Y) - η(X))`.
pub fn std_bracket(v: &GeneralizedSection, w: &GeneralizedSection) -> GeneralizedSection {
    let (x, xi) = (v.vector(), v.form());
    let (y, eta) = (w.vector(), w.form());
    let vector = lie_bracket(x, y);
    let a = xi.evaluate(&[y.as_vector()]);
    let b = eta.evaluate(&[x.as_vector()]);
    let corr = d_fn(&a - &b).scale(&rat(1, 2));
    let form = &(&lie_derivative(x, eta) - &lie_derivative(y, xi)) + &corr;
    GeneralizedSection::from_parts(vector, form)
}

/// `D f = df` for the standard structure: with the pairing
/// `½(ξ(Y) + η(X))`, `⟨df, A⟩ = ½ ρ(A) f`.
pub fn d_operator(f: &Polynomial) -> GeneralizedSection {
    GeneralizedSection::from_form(d_fn(f.clone()))
}

/// `⟦v, w⟧_J = ⟦Jv, w⟧ + ⟦v, Jw⟧ - J⟦v, w⟧` over the standard bracket.
pub fn deformed_bracket(
    j: &GeneralizedEndomorphism,
    v: &GeneralizedSection,
    w: &GeneralizedSection,
) -> GeneralizedSection {
    let a = std_bracket(&j.apply(v), w);
    let b = std_bracket(v, &j.apply(w));
    let c = j.apply(&std_bracket(v, w));
    &(&a + &b) - &c
}

/// Bracket of the double of `((T*M)_π, d_N, φ)`, without the Poisson check.
pub(crate) fn double_bracket_unchecked(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
    v: &GeneralizedSection,
    w: &GeneralizedSection,
) -> GeneralizedSection {
    let s = CotangentMap::sharp(pi);
    let (x, xi) = (v.vector(), v.form());
    let (y, eta) = (w.vector(), w.form());
    let xy = GeneralizedSection::from_parts(bracket_n(endo, x, y), contract_pair(phi, x, y));
    let xieta = GeneralizedSection::from_form(koszul_bracket(&s, xi, eta));
    let mixed = |x: &MultiVectorField, xi: &DifferentialForm| {
        let pairing_fn = xi.evaluate(&[x.as_vector()]);
        let half = rat(1, 2);
        let f = DifferentialForm::function(pairing_fn.clone());
        let form = &d_n_cartan(endo, xi).contract_first(&x.as_vector())
            + &d_n_cartan(endo, &f).scale(&half);
        let pi_x = schouten_bracket(pi, x);
        let pi_f = schouten_bracket(pi, &MultiVectorField::function(pairing_fn));
        let vector = -(&pi_x.contract_first(&xi.as_vector()) + &pi_f.scale(&half));
        GeneralizedSection::from_parts(vector, form)
    };
    let x_eta = mixed(x, eta);
    let y_xi = mixed(y, xi);
    &(&(&xy + &xieta) + &x_eta) - &y_xi
}

/// Bracket of the double of the quasi-Lie bialgebroid `((T*M)_π, d_N, φ)`:
/// `⟦ξ,η⟧ = [ξ,η]_π`, `⟦X,Y⟧ = [X,Y]_N + φ(X,Y,·)` and
/// `⟦X,ξ⟧ = (i_X d_N ξ + ½ d_N(ξ(X))) - (i_ξ [π,X] + ½ [π, ξ(X)])`.
pub fn double_bracket(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    phi: &DifferentialForm,
    v: &GeneralizedSection,
    w: &GeneralizedSection,
) -> Result<GeneralizedSection> {
    if !poisson_defect(pi).is_zero() {
        return Err(Error::NotPoisson);
    }
    Ok(double_bracket_unchecked(pi, endo, phi, v, w))
}

/// A Courant structure on `TM ⊕ T*M` with the standard pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CourantStructure {
    Standard,
    /// Deformed by `J`; anchor `ρ ∘ J`. The pairing is the standard one,
    /// which equals `⟨J·, J·⟩` when `J` is orthogonal.
    Deformed(GeneralizedEndomorphism),
    Double {
        pi: MultiVectorField,
        endo: EndomorphismField,
        phi: DifferentialForm,
    },
}

impl CourantStructure {
    /// The double of `((T*M)_π, d_N, φ)`; `π` must be Poisson.
    pub fn double(
        pi: MultiVectorField,
        endo: EndomorphismField,
        phi: DifferentialForm,
    ) -> Result<Self> {
        if phi.degree() != 3 {
            return Err(Error::DegreeMismatch {
                expected: 3,
                found: phi.degree(),
            });
        }
        if !poisson_defect(&pi).is_zero() {
            return Err(Error::NotPoisson);
        }
        Ok(CourantStructure::Double { pi, endo, phi })
    }

    pub fn bracket(&self, v: &GeneralizedSection, w: &GeneralizedSection) -> GeneralizedSection {
        match self {
            CourantStructure::Standard => std_bracket(v, w),
            CourantStructure::Deformed(j) => deformed_bracket(j, v, w),
            CourantStructure::Double { pi, endo, phi } => {
                double_bracket_unchecked(pi, endo, phi, v, w)
            }
        }
    }

    pub fn anchor(&self, v: &GeneralizedSection) -> MultiVectorField {
        match self {
            CourantStructure::Standard => v.vector().clone(),
            CourantStructure::Deformed(j) => j.anchor(v),
            CourantStructure::Double { pi, endo, .. } => {
                &endo.apply(v.vector()) + &CotangentMap::sharp(pi).apply(v.form())
            }
        }
    }

    pub fn d(&self, f: &Polynomial) -> GeneralizedSection {
        match self {
            CourantStructure::Standard => d_operator(f),
            CourantStructure::Deformed(j) => d_from_anchor(j.endomorphism(), j.bivector(), f),
            CourantStructure::Double { pi, endo, .. } => d_from_anchor(endo, pi, f),
        }
    }
}

/// The five Courant algebroid axioms evaluated exactly on the given sections
/// and functions: anchor homomorphism, Jacobi up to `⅓ D(T)`, the Leibniz
/// rule, `⟨Df, Dg⟩ = 0` and invariance of the pairing.
pub fn courant_axiom_defects(
    s: &CourantStructure,
    sections: &[GeneralizedSection],
    functions: &[Polynomial],
) -> DefectReport {
    let br = |a: &GeneralizedSection, b: &GeneralizedSection| s.bracket(a, b);
    let k = sections.len();
    let mut anchor = Vec::new();
    let mut jacobi = Vec::new();
    let mut leibniz = Vec::new();
    let mut rho_d = Vec::new();
    let mut invariance = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let (sa, sb) = (&sections[a], &sections[b]);
            let d = &s.anchor(&br(sa, sb)) - &lie_bracket(&s.anchor(sa), &s.anchor(sb));
            anchor.push((format!("(A{},A{})", a + 1, b + 1), Defect::MultiVector(d)));
            for c in b + 1..k {
                let sc = &sections[c];
                let ab = br(sa, sb);
                let bc = br(sb, sc);
                let ca = br(sc, sa);
                let jac = &(&br(&ab, sc) + &br(&bc, sa)) + &br(&ca, sb);
                let t = &(&pairing(&ab, sc) + &pairing(&bc, sa)) + &pairing(&ca, sb);
                let rhs = s.d(&t).scale(&rat(1, 3));
                jacobi.push((
                    format!("(A{},A{},A{})", a + 1, b + 1, c + 1),
                    Defect::Section(&jac - &rhs),
                ));
            }
        }
    }
    for (a, sa) in sections.iter().enumerate() {
        for (b, sb) in sections.iter().enumerate() {
            for (i, f) in functions.iter().enumerate() {
                let lhs = br(sa, &sb.mul_fn(f));
                let rho_f = vector_apply(&s.anchor(sa), f);
                let rhs = &(&br(sa, sb).mul_fn(f) + &sb.mul_fn(&rho_f))
                    - &s.d(f).mul_fn(&pairing(sa, sb));
                leibniz.push((
                    format!("(A{},f{}*A{})", a + 1, i + 1, b + 1),
                    Defect::Section(&lhs - &rhs),
                ));
            }
            for c in b..k {
                let sc = &sections[c];
                let lhs = vector_apply(&s.anchor(sa), &pairing(sb, sc));
                let left = &br(sa, sb) + &s.d(&pairing(sa, sb));
                let right = &br(sa, sc) + &s.d(&pairing(sa, sc));
                let rhs = &pairing(&left, sc) + &pairing(sb, &right);
                invariance.push((
                    format!("(A{},A{},A{})", a + 1, b + 1, c + 1),
                    Defect::Polynomial(&lhs - &rhs),
                ));
            }
        }
    }
    for (i, f) in functions.iter().enumerate() {
        for (j, g) in functions.iter().enumerate().skip(i) {
            rho_d.push((
                format!("(f{},f{})", i + 1, j + 1),
                Defect::Polynomial(pairing(&s.d(f), &s.d(g))),
            ));
        }
    }
    let mut r = DefectReport::new();
    r.push("rho[[A,B]] = [rho A, rho B]", Defect::Family(anchor));
    r.push("Jac(A,B,C) = D T(A,B,C)/3", Defect::Family(jacobi));
    r.push(
        "[[A,fB]] = f[[A,B]] + (rho(A)f)B - <A,B>Df",
        Defect::Family(leibniz),
    );
    r.push("<Df,Dg> = 0", Defect::Family(rho_d));
    r.push(
        "rho(A)<B,C> = <[[A,B]] + D<A,B>, C> + <B, [[A,C]] + D<A,C>>",
        Defect::Family(invariance),
    );
    r
}

/// Closed form of `⟦ξ, η⟧_J`: `[ξ, η]_π`.
pub fn closed_form_forms(
    j: &GeneralizedEndomorphism,
    xi: &DifferentialForm,
    eta: &DifferentialForm,
) -> GeneralizedSection {
    GeneralizedSection::from_form(koszul_bracket(&CotangentMap::sharp(j.bivector()), xi, eta))
}

/// Closed form of `⟦X, Y⟧_J`: `[X, Y]_N + dσ(X, Y, ·)`.
pub fn closed_form_vectors(
    j: &GeneralizedEndomorphism,
    x: &MultiVectorField,
    y: &MultiVectorField,
) -> GeneralizedSection {
    let dsigma = exterior_derivative(j.two_form());
    GeneralizedSection::from_parts(
        bracket_n(j.endomorphism(), x, y),
        contract_pair(&dsigma, x, y),
    )
}

/// Closed form of `⟦X, ξ⟧_J` with `θ = L_X ξ - ½ d(ξ(X))`:
/// `([X, π♯ξ] - π♯θ) + (L_{NX} ξ - L_X(N^T ξ) + N^T θ)`.
pub fn closed_form_mixed(
    j: &GeneralizedEndomorphism,
    x: &MultiVectorField,
    xi: &DifferentialForm,
) -> GeneralizedSection {
    let s = CotangentMap::sharp(j.bivector());
    let endo = j.endomorphism();
    let nt = |f: &DifferentialForm| {
        DifferentialForm::from_vector(endo.transpose_apply_vec(&f.as_vector()))
    };
    let theta = &lie_derivative(x, xi) - &d_fn(xi.evaluate(&[x.as_vector()])).scale(&rat(1, 2));
    let vector = &lie_bracket(x, &s.apply(xi)) - &s.apply(&theta);
    let form = &(&lie_derivative(&endo.apply(x), xi) - &lie_derivative(x, &nt(xi))) + &nt(&theta);
    GeneralizedSection::from_parts(vector, form)
}
