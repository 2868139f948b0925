use pqn_core::exterior::{
    d_n_cartan, endomorphism_from_forms, exterior_derivative, i_n, inverse_bivector,
    koszul_bracket_graded_unchecked, DifferentialForm, EndomorphismField, MultiVectorField,
};
use pqn_core::random::{form, poisson_bivector, polynomial, trial_rng};
use pqn_core::ratpoly::{rat, Polynomial};
use pqn_core::structures::{
    bihamiltonian_checks, check_pqn, check_pqn_parts, dn_square_defect, lie_algebroid_defect,
    poisson_defect, symplectic_quasi_check, verify_theorem_a, ConcomitantCN, StructureData,
};
use proptest::prelude::*;

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i - 1)
}

fn bivector(n: usize, terms: &[(Polynomial, [usize; 2])]) -> MultiVectorField {
    terms
        .iter()
        .fold(MultiVectorField::zero(n, 2), |acc, (f, [i, j])| {
            &acc + &MultiVectorField::term(f.clone(), &[i - 1, j - 1])
        })
}

fn two_form(n: usize, terms: &[(Polynomial, [usize; 2])]) -> DifferentialForm {
    terms
        .iter()
        .fold(DifferentialForm::zero(n, 2), |acc, (f, [i, j])| {
            &acc + &DifferentialForm::term(f.clone(), &[i - 1, j - 1])
        })
}

fn one(n: usize) -> Polynomial {
    Polynomial::one(n)
}

/// `C^N(α,β) = π(α,β) df + π(β,df) α - π(α,df) β` for `N = f·Id`, obtained by
/// expanding the four brackets by hand.
fn scalar_concomitant(
    pi: &MultiVectorField,
    f: &Polynomial,
    a: &DifferentialForm,
    b: &DifferentialForm,
) -> DifferentialForm {
    let df = exterior_derivative(&DifferentialForm::function(f.clone()));
    let ev =
        |u: &DifferentialForm, v: &DifferentialForm| pi.evaluate(&[u.as_vector(), v.as_vector()]);
    &(&df.mul_fn(&ev(a, b)) + &a.mul_fn(&ev(b, &df))) - &b.mul_fn(&ev(a, &df))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn scalar_endomorphism_concomitant_oracle(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = trial_rng(seed, 0);
        let pi = poisson_bivector(&mut rng, n, 2);
        let f = polynomial(&mut rng, n, 2);
        let cn = ConcomitantCN::compute(&pi, &EndomorphismField::scalar(f.clone()));
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (DifferentialForm::basis(n, &[i]), DifferentialForm::basis(n, &[j]));
                prop_assert_eq!(cn.get(i, j), scalar_concomitant(&pi, &f, &a, &b));
            }
        }
    }

    #[test]
    fn theorem_a_sides_agree_on_random_data(seed in any::<u64>(), n in 2usize..=3, kind in 0u8..5, twist in 0u8..3) {
        let mut rng = trial_rng(seed, 0);
        let pi = poisson_bivector(&mut rng, n, 1);
        let endo = match kind {
            0 => EndomorphismField::zero(n),
            1 => EndomorphismField::identity(n),
            2 => EndomorphismField::scalar(Polynomial::constant(n, rat(3, 2))),
            3 => EndomorphismField::scalar(polynomial(&mut rng, n, 1)),
            _ => pqn_core::random::endomorphism(&mut rng, n, 1),
        };
        let phi = match twist {
            0 => DifferentialForm::zero(n, 3),
            1 => exterior_derivative(&form(&mut rng, n, 2, 1)),
            _ => form(&mut rng, n, 3, 1),
        };
        let v = verify_theorem_a(&StructureData::pqn(pi, endo, phi)).unwrap();
        prop_assert!(v.agree(), "{:?}", v.verdicts());
    }
}

#[test]
fn jacobiator_witnesses() {
    let pos = bivector(3, &[(x(3, 3), [1, 2])]);
    assert!(poisson_defect(&pos).is_zero());
    assert!(lie_algebroid_defect(&pos).is_zero());

    let neg = bivector(4, &[(one(4), [1, 2]), (x(4, 1), [3, 4])]);
    let defect = poisson_defect(&neg);
    let comps: Vec<_> = defect.iter().collect();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].0, &vec![1, 2, 3]);
    let c = comps[0].1;
    assert!(c.is_constant());
    assert!(c.constant_term() == rat(2, 1) || c.constant_term() == rat(-2, 1));
    assert!(!lie_algebroid_defect(&neg).is_zero());
}

/// `π = ∂1∧∂2 + ∂3∧∂4`, `ω = dx1∧dx2 + dx3∧dx4`, and the two deformations
/// `ω_N = x1 dx1∧dx2` and `ω_N = d(x1 x3 dx2)`.
fn symplectic_family() -> Vec<(DifferentialForm, DifferentialForm)> {
    let n = 4;
    let omega = two_form(n, &[(one(n), [1, 2]), (one(n), [3, 4])]);
    let first = two_form(n, &[(x(n, 1), [1, 2])]);
    let second = exterior_derivative(&DifferentialForm::term(&x(n, 1) * &x(n, 3), &[1]));
    vec![(omega.clone(), first), (omega, second)]
}

#[test]
fn symplectic_family_is_consistent() {
    for (omega, omega_n) in symplectic_family() {
        let pi = inverse_bivector(&omega).unwrap();
        assert_eq!(pi, bivector(4, &[(one(4), [1, 2]), (one(4), [3, 4])]));
        let endo = endomorphism_from_forms(&omega, &omega_n).unwrap();
        let phi = koszul_bracket_graded_unchecked(&pi, &omega_n, &omega_n).scale(&rat(1, 2));

        let pqn = check_pqn_parts(&pi, &endo, &phi);
        let bih = bihamiltonian_checks(&pi, &endo, &phi).unwrap();
        let sq = symplectic_quasi_check(&omega, &endo, &phi).unwrap();
        let dn = dn_square_defect(&pi, &endo, &phi).unwrap();
        assert!(pqn.verdict(), "{pqn}");
        assert_eq!(bih.verdict(), pqn.verdict(), "{bih}");
        assert_eq!(sq.verdict(), pqn.verdict(), "{sq}");
        assert!(dn.verdict(), "{dn}");

        // d_N φ = -d(i_N φ) once dφ = 0.
        assert_eq!(
            d_n_cartan(&endo, &phi),
            -&exterior_derivative(&i_n(&endo, &phi))
        );
    }
}

#[test]
fn second_family_member_has_nonzero_twist() {
    let (omega, omega_n) = symplectic_family().pop().unwrap();
    let pi = inverse_bivector(&omega).unwrap();
    let phi = koszul_bracket_graded_unchecked(&pi, &omega_n, &omega_n).scale(&rat(1, 2));
    let expected = DifferentialForm::term(x(4, 3), &[0, 1, 2]);
    assert_eq!(phi, expected);
    let endo = endomorphism_from_forms(&omega, &omega_n).unwrap();
    let v = verify_theorem_a(&StructureData::pqn(pi, endo, phi)).unwrap();
    assert_eq!(v.verdicts(), (true, true));
}

#[test]
fn broken_twist_breaks_both_checks_together() {
    // Halving φ breaks [π_N,π_N] = 2π♯φ and the torsion identity at once.
    let (omega, omega_n) = symplectic_family().pop().unwrap();
    let pi = inverse_bivector(&omega).unwrap();
    let endo = endomorphism_from_forms(&omega, &omega_n).unwrap();
    let phi = koszul_bracket_graded_unchecked(&pi, &omega_n, &omega_n).scale(&rat(1, 4));
    let pqn = check_pqn_parts(&pi, &endo, &phi);
    let bih = bihamiltonian_checks(&pi, &endo, &phi).unwrap();
    let sq = symplectic_quasi_check(&omega, &endo, &phi).unwrap();
    assert!(!pqn.verdict());
    assert!(!bih.verdict());
    assert!(!sq.verdict());
}

#[test]
fn scalar_endomorphism_negative_in_four_dimensions() {
    let n = 4;
    let pi = bivector(n, &[(one(n), [1, 2]), (one(n), [3, 4])]);
    let endo = EndomorphismField::scalar(x(n, 1));
    let cn = ConcomitantCN::compute(&pi, &endo);
    assert!(cn.get(0, 1).is_zero());
    assert_eq!(cn.get(1, 2), DifferentialForm::basis(n, &[2]));
    assert_eq!(cn.get(1, 3), DifferentialForm::basis(n, &[3]));
    assert_eq!(cn.get(2, 3), DifferentialForm::basis(n, &[0]));
    let data = StructureData::pqn(pi, endo, DifferentialForm::zero(n, 3));
    assert!(!check_pqn(&data).unwrap().verdict());
    assert_eq!(verify_theorem_a(&data).unwrap().verdicts(), (false, false));
}
