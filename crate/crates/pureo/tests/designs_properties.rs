//! Triple systems and plane screens: constructed designs realize the
//! closed-form face counts as pure closures, formats round-trip, and the
//! existence screens behave on frozen and structured inputs.

use pureo::designs::{
    brc_screen, construct_sts, count_labeled_sts, design_from_monomials, design_to_monomials,
    format_design, parse_design, projective_plane_sequence, steiner_f_vector, verify_steiner,
    BrcScreen,
};
use pureo::sequences::IntSeq;
use pureo::{divisor_closure, Error};

fn admissible_orders() -> impl Iterator<Item = usize> {
    (1..=31).filter(|r| r % 6 == 1 || r % 6 == 3)
}

#[test]
fn constructed_systems_realize_the_closed_form_face_counts() {
    for r in admissible_orders().filter(|&r| r >= 3) {
        let design = construct_sts(r).unwrap();
        let gens = design_to_monomials(&design);
        let ideal = divisor_closure(&gens).unwrap();
        assert!(ideal.is_pure(), "order {r}");
        assert_eq!(
            ideal.h_vector(),
            steiner_f_vector(2, 3, r).unwrap(),
            "order {r}"
        );
        assert_eq!(ideal.num_vars(), r, "order {r}");
    }
}

#[test]
fn design_text_and_monomial_forms_round_trip() {
    for r in admissible_orders().filter(|&r| r >= 3) {
        let design = construct_sts(r).unwrap();
        let reparsed = parse_design(&format_design(&design)).unwrap();
        assert_eq!(design, reparsed, "text round trip at order {r}");

        let monomials = design_to_monomials(&design);
        let rebuilt = design_from_monomials(&monomials, 2).unwrap();
        assert_eq!(design, rebuilt, "monomial round trip at order {r}");
    }
}

#[test]
fn steiner_face_counts_frozen_values() {
    assert_eq!(
        steiner_f_vector(2, 3, 7).unwrap(),
        IntSeq::new(vec![1, 7, 21, 7])
    );
    assert_eq!(
        steiner_f_vector(3, 4, 8).unwrap(),
        IntSeq::new(vec![1, 8, 28, 56, 14])
    );
    assert_eq!(
        steiner_f_vector(2, 3, 9).unwrap(),
        IntSeq::new(vec![1, 9, 36, 12])
    );
    // 2-subsets of a 6-point set cannot split into triples evenly.
    match steiner_f_vector(2, 3, 6) {
        Err(Error::DesignCounting {
            level, num, den, ..
        }) => {
            assert_eq!((level, num, den), (1, 5, 2));
        }
        other => panic!("expected a counting obstruction, got {other:?}"),
    }
}

#[test]
fn plane_sequences_are_steiner_face_counts() {
    // A plane of order q is S(2, q+1, q^2+q+1); q = 2 is the 7-point system.
    assert_eq!(
        projective_plane_sequence(2).unwrap(),
        IntSeq::new(vec![1, 7, 21, 7])
    );
    assert_eq!(
        projective_plane_sequence(3).unwrap(),
        IntSeq::new(vec![1, 13, 78, 52, 13])
    );
    assert_eq!(
        projective_plane_sequence(4).unwrap(),
        steiner_f_vector(2, 5, 21).unwrap()
    );
    assert_eq!(
        projective_plane_sequence(6).unwrap(),
        IntSeq::new(vec![1, 43, 903, 1505, 1505, 903, 301, 43])
    );
}

#[test]
fn screen_never_rejects_a_prime_power() {
    let is_prime = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
    let mut prime_powers = Vec::new();
    for p in (2u64..=100).filter(|&p| is_prime(p)) {
        let mut q = p;
        while q <= 100 {
            prime_powers.push(q);
            q *= p;
        }
    }
    for q in prime_powers {
        assert_ne!(
            brc_screen(q).unwrap(),
            BrcScreen::Fails,
            "screen rejected prime power {q}, but a plane of that order exists"
        );
    }
}

#[test]
fn screen_frozen_verdicts() {
    for (q, want) in [
        (6u64, BrcScreen::Fails),
        (10, BrcScreen::Passes),
        (14, BrcScreen::Fails),
        (22, BrcScreen::Fails),
        (7, BrcScreen::NotApplicable),
        (12, BrcScreen::NotApplicable),
    ] {
        assert_eq!(brc_screen(q).unwrap(), want, "q = {q}");
    }
}

#[test]
fn labeled_system_counts_small_orders() {
    assert_eq!(count_labeled_sts(3).unwrap(), 1);
    assert_eq!(count_labeled_sts(7).unwrap(), 30);
    assert_eq!(count_labeled_sts(9).unwrap(), 840);
}

#[test]
fn verifier_catches_tampered_designs() {
    let design = construct_sts(9).unwrap();
    assert!(verify_steiner(&design).is_none());

    // Dropping one block leaves its pairs uncovered.
    let mut blocks = design.blocks().to_vec();
    let removed = blocks.pop().unwrap();
    let broken = pureo::designs::BlockDesign::new(2, 3, 9, blocks).unwrap();
    let violation = verify_steiner(&broken).expect("a pair must be uncovered");
    assert_eq!(violation.cover_count, 0);
    assert!(
        violation.subset.iter().all(|v| removed.contains(v)),
        "uncovered pair {:?} should come from the removed block {removed:?}",
        violation.subset
    );

    // Duplicating a block covers its pairs twice.
    let mut blocks = design.blocks().to_vec();
    blocks.push(blocks[0].clone());
    let doubled = pureo::designs::BlockDesign::new(2, 3, 9, blocks).unwrap();
    let violation = verify_steiner(&doubled).expect("a pair must be double-covered");
    assert_eq!(violation.cover_count, 2);
}

#[test]
fn inadmissible_orders_are_rejected() {
    for r in [2usize, 5, 6, 8, 11, 30] {
        assert!(matches!(construct_sts(r), Err(Error::StsCongruence(got)) if got == r));
    }
}
