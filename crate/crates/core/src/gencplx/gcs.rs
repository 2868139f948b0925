use super::courant::{
    closed_form_forms, closed_form_mixed, closed_form_vectors, deformed_bracket,
    double_bracket_unchecked, std_bracket,
};
use super::section::{build_j, pairing, GeneralizedEndomorphism, GeneralizedSection};
use crate::error::{Error, Result};
use crate::exterior::{
    exterior_derivative, CotangentMap, DifferentialForm, EndomorphismField, MultiVectorField,
    PolyMatrix,
};
use crate::random;
use crate::ratpoly::Polynomial;
use crate::structures::{check_pqn_parts, Defect, DefectReport, PairedVerdict};

pub const J_SQUARED: &str = "J^2 = -I";
pub const J_ORTHOGONAL: &str = "<Jv,Jw> = <v,w>";
pub const BLOCK_IDENTITY: &str = "N^2 + pi# sigma_flat = -Id";

/// `{∂_1, .., ∂_n, dx_1, .., dx_n}`.
fn frame(n: usize) -> Vec<GeneralizedSection> {
    (0..n)
        .map(|i| GeneralizedSection::partial(n, i))
        .chain((0..n).map(|i| GeneralizedSection::dx(n, i)))
        .collect()
}

fn frame_label(n: usize, a: usize) -> String {
    if a < n {
        format!("d{}", a + 1)
    } else {
        format!("dx{}", a - n + 1)
    }
}

/// Column `a` holds the frame components of `s`: vector part first.
fn section_column(s: &GeneralizedSection) -> Vec<Polynomial> {
    let mut col = s.vector().as_vector();
    col.extend(s.form().as_vector());
    col
}

fn columns_to_matrix(cols: Vec<Vec<Polynomial>>) -> PolyMatrix {
    let size = cols.len();
    PolyMatrix::from_rows(
        (0..size)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect(),
    )
}

/// The conjugate `e^B J e^{-B}` by the B-field `e^B(X + ξ) = X + ξ + B♭X`.
/// Blocks: `N - π♯B♭`, `π`, and
/// `σ♭ + B♭N + N^T B♭ - B♭π♯B♭`.
pub fn b_transform(
    j: &GeneralizedEndomorphism,
    b: &DifferentialForm,
) -> Result<GeneralizedEndomorphism> {
    let n = j.nvars();
    if b.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.nvars(),
        });
    }
    if b.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: b.degree(),
        });
    }
    let shift = |v: &GeneralizedSection, sign: i64| {
        let bx = b.contract_first(&v.vector().as_vector()).scale_int(sign);
        &GeneralizedSection::from_form(bx) + v
    };
    let images: Vec<GeneralizedSection> = (0..n)
        .map(|i| shift(&j.apply(&shift(&GeneralizedSection::partial(n, i), -1)), 1))
        .collect();
    let columns: Vec<MultiVectorField> = images.iter().map(|s| s.vector().clone()).collect();
    let endo = EndomorphismField::from_columns(&columns)?;
    let mut comps = Vec::new();
    for (i, s) in images.iter().enumerate() {
        for (k, c) in s.form().as_vector().into_iter().enumerate().skip(i + 1) {
            comps.push((vec![i, k], c));
        }
    }
    let sigma = DifferentialForm::from_components(n, 2, comps)?;
    build_j(j.bivector(), &endo, &sigma)
}

/// `J² + I` on the frame, the pairing defect `⟨Je_a, Je_b⟩ - ⟨e_a, e_b⟩`,
/// and the block identity `N² + π♯σ♭ + Id`.
pub fn algebraic_defects(j: &GeneralizedEndomorphism) -> DefectReport {
    let n = j.nvars();
    let fr = frame(n);
    let square = columns_to_matrix(
        fr.iter()
            .map(|e| section_column(&(&j.apply(&j.apply(e)) + e)))
            .collect(),
    );
    let images: Vec<GeneralizedSection> = fr.iter().map(|e| j.apply(e)).collect();
    let orth = PolyMatrix::from_rows(
        (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| &pairing(&images[a], &images[b]) - &pairing(&fr[a], &fr[b]))
                    .collect()
            })
            .collect(),
    );
    let endo = j.endomorphism();
    let s = CotangentMap::sharp(j.bivector());
    let block = columns_to_matrix(
        (0..n)
            .map(|c| {
                let e = MultiVectorField::basis(n, &[c]);
                let nn = endo.apply(&endo.apply(&e));
                let ps = s.apply(&j.two_form().contract_first(&e.as_vector()));
                (&(&nn + &ps) + &e).as_vector()
            })
            .collect(),
    );
    let mut r = DefectReport::new();
    r.push(J_SQUARED, Defect::Matrix(square));
    r.push(J_ORTHOGONAL, Defect::Matrix(orth));
    r.push(BLOCK_IDENTITY, Defect::Matrix(block));
    r
}

/// `⟦Jv,Jw⟧ - ⟦v,w⟧ - J(⟦Jv,w⟧ + ⟦v,Jw⟧)`.
pub fn courant_nijenhuis(
    j: &GeneralizedEndomorphism,
    v: &GeneralizedSection,
    w: &GeneralizedSection,
) -> GeneralizedSection {
    let (jv, jw) = (j.apply(v), j.apply(w));
    let a = &std_bracket(&jv, &jw) - &std_bracket(v, w);
    let b = j.apply(&(&std_bracket(&jv, w) + &std_bracket(v, &jw)));
    &a - &b
}

type LabelledPairs = Vec<(String, GeneralizedSection, GeneralizedSection)>;

/// Frame pairs `(e_a, e_b)`, `a < b`, and the function-scaled witnesses
/// `(x_k ∂_i, ∂_j)`, `(x_k ∂_i, dx_j)`, `(x_k dx_i, dx_j)`.
fn test_pairs(n: usize) -> (LabelledPairs, LabelledPairs) {
    let fr = frame(n);
    let mut frames = Vec::new();
    for a in 0..2 * n {
        for b in a + 1..2 * n {
            frames.push((
                format!("({},{})", frame_label(n, a), frame_label(n, b)),
                fr[a].clone(),
                fr[b].clone(),
            ));
        }
    }
    let mut witnesses = Vec::new();
    for k in 0..n {
        let xk = Polynomial::var(n, k);
        for i in 0..n {
            for b in 0..2 * n {
                witnesses.push((
                    format!("(x{}*d{},{})", k + 1, i + 1, frame_label(n, b)),
                    fr[i].mul_fn(&xk),
                    fr[b].clone(),
                ));
            }
            for j in 0..n {
                witnesses.push((
                    format!("(x{}*dx{},dx{})", k + 1, i + 1, j + 1),
                    fr[n + i].mul_fn(&xk),
                    fr[n + j].clone(),
                ));
            }
        }
    }
    (frames, witnesses)
}

fn require_algebraic(j: &GeneralizedEndomorphism) -> Result<()> {
    if algebraic_defects(j).verdict() {
        Ok(())
    } else {
        Err(Error::AlgebraicPrecondition)
    }
}

/// The integrability defect on frame pairs and function-scaled witnesses.
/// Fails unless `J² = -I` and `J` preserves the pairing.
pub fn integrability_defect(j: &GeneralizedEndomorphism) -> Result<DefectReport> {
    require_algebraic(j)?;
    let (frames, witnesses) = test_pairs(j.nvars());
    let eval = |pairs: LabelledPairs| {
        Defect::Family(
            pairs
                .into_iter()
                .map(|(l, v, w)| (l, Defect::Section(courant_nijenhuis(j, &v, &w))))
                .collect(),
        )
    };
    let mut r = DefectReport::new();
    r.push("Courant-Nijenhuis torsion of J on frames", eval(frames));
    r.push(
        "Courant-Nijenhuis torsion of J on witnesses",
        eval(witnesses),
    );
    Ok(r)
}

/// Both sides of the generalized complex equivalence for `J` built from
/// `(π, N, σ)`. Left: `J` is integrable. Right: `(π, N, dσ)` is Poisson
/// quasi-Nijenhuis and `J` maps the double bracket onto the standard one.
pub fn verify_theorem_d(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    sigma: &DifferentialForm,
) -> Result<PairedVerdict> {
    let j = build_j(pi, endo, sigma)?;
    let left = integrability_defect(&j)?;
    let phi = exterior_derivative(sigma);
    let mut right = check_pqn_parts(pi, endo, &phi);
    let (frames, witnesses) = test_pairs(j.nvars());
    let iso = frames
        .into_iter()
        .chain(witnesses)
        .map(|(l, v, w)| {
            let lhs = j.apply(&double_bracket_unchecked(pi, endo, &phi, &v, &w));
            let rhs = std_bracket(&j.apply(&v), &j.apply(&w));
            (l, Defect::Section(&lhs - &rhs))
        })
        .collect();
    right.push("J[[v,w]]_double = [[Jv,Jw]]", Defect::Family(iso));
    right.push(
        J_ORTHOGONAL,
        algebraic_defects(&j)
            .entry(J_ORTHOGONAL)
            .expect("entry")
            .defect
            .clone(),
    );
    Ok(PairedVerdict { left, right })
}

/// Deformed bracket against its closed forms on `trials` random pairs of
/// each kind (1-forms, vector fields, mixed).
pub fn lemma74_defects(j: &GeneralizedEndomorphism, trials: u64, seed: u64) -> DefectReport {
    let n = j.nvars();
    let mut forms = Vec::new();
    let mut vectors = Vec::new();
    let mut mixed = Vec::new();
    for t in 0..trials {
        let mut rng = random::trial_rng(seed, t);
        let xi = random::form(&mut rng, n, 1, 2);
        let eta = random::form(&mut rng, n, 1, 2);
        let x = random::multivector(&mut rng, n, 1, 2);
        let y = random::multivector(&mut rng, n, 1, 2);
        let label = format!("trial{}", t + 1);
        let (sxi, seta) = (
            GeneralizedSection::from_form(xi.clone()),
            GeneralizedSection::from_form(eta.clone()),
        );
        let (sx, sy) = (
            GeneralizedSection::from_vector(x.clone()),
            GeneralizedSection::from_vector(y.clone()),
        );
        forms.push((
            label.clone(),
            Defect::Section(&deformed_bracket(j, &sxi, &seta) - &closed_form_forms(j, &xi, &eta)),
        ));
        vectors.push((
            label.clone(),
            Defect::Section(&deformed_bracket(j, &sx, &sy) - &closed_form_vectors(j, &x, &y)),
        ));
        mixed.push((
            label,
            Defect::Section(&deformed_bracket(j, &sx, &sxi) - &closed_form_mixed(j, &x, &xi)),
        ));
    }
    let mut r = DefectReport::new();
    r.push("[[xi,eta]]_J = [xi,eta]_pi", Defect::Family(forms));
    r.push(
        "[[X,Y]]_J = [X,Y]_N + d sigma(X,Y,.)",
        Defect::Family(vectors),
    );
    r.push(
        "[[X,xi]]_J = ([X,pi#xi] - pi#theta) + (L_NX xi - L_X N^T xi + N^T theta)",
        Defect::Family(mixed),
    );
    r
}

/// The deformed structure against the double of `((T*M)_π, d_N, dσ)` on
/// random section pairs: brackets, anchors and pairings.
pub fn prop75_equivalence(
    pi: &MultiVectorField,
    endo: &EndomorphismField,
    sigma: &DifferentialForm,
    trials: u64,
    seed: u64,
) -> Result<DefectReport> {
    let j = build_j(pi, endo, sigma)?;
    let phi = exterior_derivative(sigma);
    if !check_pqn_parts(pi, endo, &phi).verdict() {
        return Err(Error::Precondition(
            "(pi, N, d sigma) is not Poisson quasi-Nijenhuis".into(),
        ));
    }
    let n = j.nvars();
    let s = CotangentMap::sharp(pi);
    let mut brackets = Vec::new();
    let mut anchors = Vec::new();
    let mut pairings = Vec::new();
    for t in 0..trials {
        let mut rng = random::trial_rng(seed, t);
        let v = random::section(&mut rng, n, 2);
        let w = random::section(&mut rng, n, 2);
        let label = format!("trial{}", t + 1);
        let deformed = deformed_bracket(&j, &v, &w);
        let double = double_bracket_unchecked(pi, endo, &phi, &v, &w);
        brackets.push((label.clone(), Defect::Section(&deformed - &double)));
        let anchor_double = &endo.apply(v.vector()) + &s.apply(v.form());
        anchors.push((
            label.clone(),
            Defect::MultiVector(&j.anchor(&v) - &anchor_double),
        ));
        pairings.push((
            label,
            Defect::Polynomial(&pairing(&j.apply(&v), &j.apply(&w)) - &pairing(&v, &w)),
        ));
    }
    let mut r = DefectReport::new();
    r.push("[[v,w]]_J = [[v,w]]_double", Defect::Family(brackets));
    r.push("rho o J = N + pi#", Defect::Family(anchors));
    r.push("<Jv,Jw> = <v,w>", Defect::Family(pairings));
    Ok(r)
}
