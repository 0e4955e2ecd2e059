//! Acceptance suite: exact golden-value checks plus exhaustive desk-scale
//! verification, one test per criterion. Each test
//! prints a `PASS criterion ...` line (visible with `--nocapture`) and
//! enforces its wall-clock budget.

use std::time::{Duration, Instant};

use immaculata::composition::compositions_of;
use immaculata::nsym::{self, NSymBasis};
use immaculata::qsym::{self, QSymBasis};
use immaculata::tableau;
use immaculata::verify::{run_suite, Suite};
use immaculata::{Composition, Int, IntTuple, NSymElement, Partition, QSymElement};

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.iter().copied()).unwrap()
}

fn s_elt(terms: &[(&[u32], i64)]) -> NSymElement {
    NSymElement::from_terms(
        NSymBasis::S,
        terms.iter().map(|(p, c)| (comp(p), Int::from(*c))),
    )
}

fn check_suite(criterion: &str, suite: Suite, max_n: u32, budget: Duration) {
    let start = Instant::now();
    let report = run_suite(suite, max_n);
    let elapsed = start.elapsed();
    assert!(
        report.passed(),
        "criterion {criterion}: suite {} failed: {:?}",
        report.suite,
        report.failures
    );
    assert!(
        elapsed < budget,
        "criterion {criterion}: suite {} took {elapsed:?} (budget {budget:?})",
        report.suite
    );
    println!(
        "PASS criterion {criterion}: {} suite, {} instances, 0 failures ({elapsed:?})",
        report.suite, report.instances
    );
}

fn golden(criterion: &str, description: &str, run: impl FnOnce()) {
    let start = Instant::now();
    run();
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "criterion {criterion} exceeded 1 s: {elapsed:?}"
    );
    println!("PASS criterion {criterion}: {description} ({elapsed:?})");
}

#[test]
fn criterion_1a_pieri_golden_example() {
    golden("1a", "S[2,3] * H_3 is the ten-term Pieri sum", || {
        let got = nsym::pieri_multiply::<Int>(&comp(&[2, 3]), 3);
        let expected = s_elt(&[
            (&[2, 3, 3], 1),
            (&[2, 4, 2], 1),
            (&[2, 5, 1], 1),
            (&[2, 6], 1),
            (&[3, 3, 2], 1),
            (&[3, 4, 1], 1),
            (&[3, 5], 1),
            (&[4, 3, 1], 1),
            (&[4, 4], 1),
            (&[5, 3], 1),
        ]);
        assert_eq!(got, expected);
    });
}

#[test]
fn criterion_1b_left_multiplication_golden_example() {
    golden("1b", "H_1 * S[1,3] = S[1,1,3] - S[2,2,1] - S[3,2]", || {
        let h1 = NSymElement::basis_element(NSymBasis::H, comp(&[1]));
        let s13 = nsym::immaculate_to_h::<Int>(&IntTuple::new([1, 3]));
        let product = nsym::h_multiply(&h1, &s13).unwrap();
        let got = nsym::change_basis(&product, NSymBasis::S).unwrap();
        let expected = s_elt(&[(&[1, 1, 3], 1), (&[2, 2, 1], -1), (&[3, 2], -1)]);
        assert_eq!(got, expected);
    });
}

#[test]
fn criterion_1c_kostka_golden_example() {
    golden("1c", "K[[4,2,3],[3,1,2,3]] = 5 with the displayed tableaux", || {
        let shape = comp(&[4, 2, 3]);
        let content = [3u32, 1, 2, 3];
        assert_eq!(tableau::kostka_immaculate(&shape, &content).unwrap(), 5);
        let got: Vec<Vec<Vec<u32>>> = tableau::enumerate_immaculate_tableaux(&shape, &content)
            .unwrap()
            .iter()
            .map(|t| t.rows().to_vec())
            .collect();
        // The five fillings, in row-reading lexicographic enumeration order.
        let expected: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![1, 1, 1, 2], vec![3, 3], vec![4, 4, 4]],
            vec![vec![1, 1, 1, 3], vec![2, 3], vec![4, 4, 4]],
            vec![vec![1, 1, 1, 3], vec![2, 4], vec![3, 4, 4]],
            vec![vec![1, 1, 1, 4], vec![2, 3], vec![3, 4, 4]],
            vec![vec![1, 1, 1, 4], vec![2, 4], vec![3, 3, 4]],
        ];
        assert_eq!(got, expected);
    });
}

#[test]
fn criterion_1d_ribbon_golden_example() {
    golden("1d", "R[2,2,2] expands over eight standard tableaux", || {
        let got = nsym::ribbon_to_immaculate::<Int>(&comp(&[2, 2, 2]));
        let expected = s_elt(&[
            (&[2, 2, 2], 1),
            (&[2, 3, 1], 1),
            (&[3, 1, 2], 1),
            (&[3, 2, 1], 2),
            (&[3, 3], 1),
            (&[4, 1, 1], 1),
            (&[4, 2], 1),
        ]);
        assert_eq!(got, expected);
        let total: Int = got.terms().iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Int::from(8));
        // The route through the H basis must agree.
        let via_h = nsym::change_basis(
            &NSymElement::basis_element(NSymBasis::R, comp(&[2, 2, 2])),
            NSymBasis::S,
        )
        .unwrap();
        assert_eq!(via_h, expected);
    });
}

#[test]
fn criterion_1e_descent_composition_golden_example() {
    golden("1e", "the 18-cell tableau has descent composition [2,3,6,7]", || {
        let t = tableau::ImmaculateTableau::new(
            comp(&[6, 5, 7]),
            vec![
                vec![1, 2, 4, 5, 10, 11],
                vec![3, 6, 7, 8, 9],
                vec![12, 13, 14, 15, 16, 17, 18],
            ],
        )
        .unwrap();
        let t = tableau::StandardImmaculateTableau::new(t).unwrap();
        assert_eq!(t.descent_composition(), comp(&[2, 3, 6, 7]));
    });
}

#[test]
fn criterion_1f_schur_decomposition_golden_example() {
    golden("1f", "s[2,2,2,1] = S*[2,2,2,1] - S*[1,3,2,1] - S*[2,1,3,1] + S*[1,1,4,1]", || {
        let got = qsym::schur_to_dual_immaculate::<Int>(&Partition::new([2, 2, 2, 1]).unwrap());
        let expected = QSymElement::from_terms(
            QSymBasis::Sstar,
            [
                (comp(&[2, 2, 2, 1]), Int::from(1)),
                (comp(&[1, 3, 2, 1]), Int::from(-1)),
                (comp(&[2, 1, 3, 1]), Int::from(-1)),
                (comp(&[1, 1, 4, 1]), Int::from(1)),
            ],
        );
        assert_eq!(got, expected);
    });
}

#[test]
fn criterion_1g_littlewood_richardson_golden_example() {
    golden("1g", "S[1,2] * S[2,1] is the ten-term sum with 2*S[2,3,1]", || {
        let got = nsym::lr_multiply::<Int>(&comp(&[1, 2]), &Partition::new([2, 1]).unwrap());
        let expected = s_elt(&[
            (&[1, 2, 2, 1], 1),
            (&[1, 3, 1, 1], 1),
            (&[1, 3, 2], 1),
            (&[2, 2, 1, 1], 1),
            (&[2, 2, 2], 1),
            (&[2, 3, 1], 2),
            (&[1, 4, 1], 1),
            (&[2, 4], 1),
            (&[3, 3], 1),
            (&[3, 2, 1], 1),
        ]);
        assert_eq!(got, expected);
        assert_eq!(got.num_terms(), 10);
    });
}

#[test]
fn criterion_1h_murnaghan_nakayama_golden_example() {
    golden("1h", "S[1,3,2] * Psi_3 gives the six zero-padded terms", || {
        let got = nsym::mn_multiply_raw(&comp(&[1, 3, 2]), 3);
        let expected = vec![
            IntTuple::new([4, 3, 2]),
            IntTuple::new([1, 6, 2]),
            IntTuple::new([1, 3, 5]),
            IntTuple::new([1, 3, 2, 3]),
            IntTuple::new([1, 3, 2, 0, 3]),
            IntTuple::new([1, 3, 2, 0, 0, 3]),
        ];
        assert_eq!(got, expected);
        // The normalized form agrees with the direct H-basis product.
        let rule = nsym::mn_multiply::<Int>(&comp(&[1, 3, 2]), 3);
        let left = nsym::immaculate_to_h::<Int>(&IntTuple::new([1, 3, 2]));
        let product = nsym::h_multiply(&left, &nsym::psi_to_h(3)).unwrap();
        let oracle = nsym::change_basis(&product, NSymBasis::S).unwrap();
        assert_eq!(rule, oracle);
    });
}

#[test]
fn criterion_2_bernstein_jacobi_trudi_agreement() {
    check_suite("2", Suite::JacobiTrudi, 6, Duration::from_secs(10));
}

#[test]
fn criterion_3_pieri_rule_vs_oracle() {
    check_suite("3 (pieri)", Suite::Pieri, 6, Duration::from_secs(60));
}

#[test]
fn criterion_3_lr_rule_vs_oracle() {
    check_suite("3 (lr)", Suite::Lr, 6, Duration::from_secs(60));
}

#[test]
fn criterion_3_mn_rule_vs_oracle() {
    check_suite("3 (mn)", Suite::Mn, 6, Duration::from_secs(60));
}

#[test]
fn criterion_4_duality() {
    check_suite("4", Suite::Duality, 6, Duration::from_secs(30));
}

#[test]
fn criterion_5_projection() {
    // The suite checks chi(S_alpha) = s_alpha for n <= 6 and chi(Psi_n) = p_n
    // for n <= 7.
    check_suite("5", Suite::Projection, 6, Duration::from_secs(10));
}

#[test]
fn criterion_6_triangularity_and_positivity() {
    let start = Instant::now();
    let kostka = run_suite(Suite::Kostka, 7);
    assert!(kostka.passed(), "kostka suite: {:?}", kostka.failures);
    let ribbon = run_suite(Suite::Ribbon, 7);
    assert!(ribbon.passed(), "ribbon suite: {:?}", ribbon.failures);

    // Littlewood-Richardson coefficients up to total degree 7 are counts of
    // tableaux, hence non-negative; sweep them all the same.
    let mut lr_instances = 0usize;
    for a in 0..=7u32 {
        for alpha in compositions_of(a) {
            for l in 0..=(7 - a) {
                for lambda in immaculata::composition::partitions_of(l) {
                    for beta in compositions_of(a + l) {
                        let c = tableau::lr_coefficient(&alpha, &lambda, &beta).unwrap();
                        let _nonneg: u64 = c;
                        lr_instances += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "criterion 6 took {elapsed:?}"
    );
    println!(
        "PASS criterion 6: kostka ({} instances) + ribbon ({} instances) at n <= 7, {} LR coefficients non-negative ({elapsed:?})",
        kostka.instances, ribbon.instances, lr_instances
    );
}

/// Bell numbers via the Peirce triangle.
fn bell_numbers(up_to: usize) -> Vec<u64> {
    let mut bell = vec![1u64];
    let mut row = vec![1u64];
    for _ in 1..=up_to {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            next.push(next.last().unwrap() + v);
        }
        bell.push(next[0]);
        row = next;
    }
    bell
}

#[test]
fn criterion_7_structural_counts() {
    let start = Instant::now();
    let bell = bell_numbers(8);
    for n in 0..=8u32 {
        let total: u64 = compositions_of(n)
            .iter()
            .map(|alpha| tableau::standard_immaculate_tableaux(alpha).len() as u64)
            .sum();
        assert_eq!(
            total, bell[n as usize],
            "standard tableaux of size {n} vs Bell number"
        );
    }
    for n in 1..=12u32 {
        assert_eq!(compositions_of(n).len() as u64, 1 << (n - 1), "n={n}");
    }
    assert_eq!(compositions_of(0).len(), 1);
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "criterion 7 took {elapsed:?}"
    );
    println!(
        "PASS criterion 7: SIT totals match Bell numbers (n <= 8), composition counts match 2^(n-1) (n <= 12) ({elapsed:?})"
    );
}
