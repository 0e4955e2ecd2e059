//! Exhaustive desk-scale verification suites.
//!
//! Each suite sweeps every instance up to a degree bound and reports the
//! instance count plus a description of every failure. The suites are
//! deliberately redundant with the unit tests: they drive each rule against
//! an independently computed oracle (usually the brute-force product in the
//! `H` basis) over the whole range instead of spot values.

use std::collections::BTreeMap;

use crate::composition::{compositions_of, partitions_of, Composition};
use crate::lincomb::LinComb;
use crate::nsym::{self, NSymBasis};
use crate::qsym;
use crate::sym;
use crate::tableau;
use crate::{Int, NSymElement, Rat};

/// The named suites exposed by the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Pieri,
    JacobiTrudi,
    Kostka,
    Ribbon,
    Duality,
    Lr,
    Mn,
    Projection,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Pieri,
        Suite::JacobiTrudi,
        Suite::Kostka,
        Suite::Ribbon,
        Suite::Duality,
        Suite::Lr,
        Suite::Mn,
        Suite::Projection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pieri => "pieri",
            Suite::JacobiTrudi => "jacobi-trudi",
            Suite::Kostka => "kostka",
            Suite::Ribbon => "ribbon",
            Suite::Duality => "duality",
            Suite::Lr => "lr",
            Suite::Mn => "mn",
            Suite::Projection => "projection",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub max_n: u32,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs one suite up to the degree bound.
pub fn run_suite(suite: Suite, max_n: u32) -> SuiteReport {
    match suite {
        Suite::Pieri => pieri_suite(max_n),
        Suite::JacobiTrudi => jacobi_trudi_suite(max_n),
        Suite::Kostka => kostka_suite(max_n),
        Suite::Ribbon => ribbon_suite(max_n),
        Suite::Duality => duality_suite(max_n),
        Suite::Lr => lr_suite(max_n),
        Suite::Mn => mn_suite(max_n),
        Suite::Projection => projection_suite(max_n),
    }
}

/// Runs every suite in order.
pub fn run_all(max_n: u32) -> Vec<SuiteReport> {
    Suite::ALL
        .iter()
        .map(|&s| run_suite(s, max_n))
        .collect()
}

type STable = BTreeMap<Composition, LinComb<Composition, Int>>;

/// The immaculate Kostka matrix of degree `n`, keyed `[shape][content]`.
fn kostka_matrix(n: u32) -> BTreeMap<Composition, BTreeMap<Composition, u64>> {
    let all = compositions_of(n);
    let mut matrix = BTreeMap::new();
    for alpha in &all {
        let mut row = BTreeMap::new();
        for beta in &all {
            let k = tableau::kostka_immaculate(alpha, beta.parts()).expect("equal sizes");
            if k > 0 {
                row.insert(beta.clone(), k);
            }
        }
        matrix.insert(alpha.clone(), row);
    }
    matrix
}

/// For every `H_beta` of degree `n`, its expansion in the immaculate basis,
/// derived from one Kostka-matrix computation.
fn h_to_s_table(n: u32) -> STable {
    let matrix = kostka_matrix(n);
    let mut table: STable = compositions_of(n)
        .into_iter()
        .map(|beta| (beta, LinComb::zero()))
        .collect();
    for (alpha, row) in &matrix {
        for (beta, &k) in row {
            table
                .get_mut(beta)
                .expect("beta is a composition of n")
                .add_term(alpha.clone(), Int::from(k));
        }
    }
    table
}

/// Converts a homogeneous `H`-basis element of degree `n` into the
/// immaculate basis through a precomputed table.
fn to_s_via_table(f: &NSymElement, table: &STable) -> NSymElement {
    let terms = f
        .terms()
        .flat_map(|beta| table.get(beta).expect("degree matches table").clone());
    NSymElement::from_terms(
        NSymBasis::S,
        terms.iter().map(|(k, c)| (k.clone(), c.clone())),
    )
}

fn immaculate_h_expansions(n: u32) -> BTreeMap<Composition, NSymElement> {
    compositions_of(n)
        .into_iter()
        .map(|alpha| {
            let h = nsym::immaculate_to_h::<Int>(&alpha.to_int_tuple());
            (alpha, h)
        })
        .collect()
}

fn pieri_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    let tables: BTreeMap<u32, STable> = (0..=max_n).map(|n| (n, h_to_s_table(n))).collect();
    for a in 0..=max_n {
        let expansions = immaculate_h_expansions(a);
        for alpha in compositions_of(a) {
            let left = &expansions[&alpha];
            for s in 1..=(max_n - a) {
                instances += 1;
                let rule = nsym::pieri_multiply::<Int>(&alpha, s);
                let right = NSymElement::basis_element(
                    NSymBasis::H,
                    Composition::new([s]).expect("s >= 1"),
                );
                let product = nsym::h_multiply(left, &right).expect("both in H");
                let oracle = to_s_via_table(&product, &tables[&(a + s)]);
                if rule != oracle {
                    failures.push(format!(
                        "pieri alpha=[{alpha}] s={s}: rule {rule} != oracle {oracle}"
                    ));
                }
            }
        }
    }
    SuiteReport {
        suite: Suite::Pieri.name(),
        max_n,
        instances,
        failures,
    }
}

fn jacobi_trudi_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for alpha in compositions_of(n) {
            instances += 1;
            let bernstein = nsym::immaculate_to_h::<Int>(&alpha.to_int_tuple());
            let determinant = nsym::jacobi_trudi_h::<Int>(&alpha);
            if bernstein != determinant {
                failures.push(format!(
                    "jacobi-trudi alpha=[{alpha}]: {bernstein} != {determinant}"
                ));
            }
        }
    }
    SuiteReport {
        suite: Suite::JacobiTrudi.name(),
        max_n,
        instances,
        failures,
    }
}

fn kostka_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let matrix = kostka_matrix(n);
        let all = compositions_of(n);
        for alpha in &all {
            for beta in &all {
                instances += 1;
                let k = matrix[alpha].get(beta).copied().unwrap_or(0);
                if alpha == beta && k != 1 {
                    failures.push(format!("kostka diagonal K[{alpha};{beta}] = {k} != 1"));
                }
                if alpha < beta && k != 0 {
                    failures.push(format!(
                        "kostka triangularity K[{alpha};{beta}] = {k} != 0 with alpha <lex beta"
                    ));
                }
            }
        }
        // Uni-triangular inverse: expanding S_alpha in H (Jacobi-Trudi) and
        // re-expanding every H term in the immaculate basis is the identity.
        let table = {
            let mut table: STable = all
                .iter()
                .map(|beta| (beta.clone(), LinComb::zero()))
                .collect();
            for (alpha, row) in &matrix {
                for (beta, &k) in row {
                    table
                        .get_mut(beta)
                        .expect("composition of n")
                        .add_term(alpha.clone(), Int::from(k));
                }
            }
            table
        };
        for alpha in &all {
            instances += 1;
            let h = nsym::jacobi_trudi_h::<Int>(alpha);
            let round = to_s_via_table(&h, &table);
            let expected = NSymElement::basis_element(NSymBasis::S, alpha.clone());
            if round != expected {
                failures.push(format!(
                    "kostka inverse: S[{alpha}] -> H -> S gave {round}"
                ));
            }
        }
    }
    SuiteReport {
        suite: Suite::Kostka.name(),
        max_n,
        instances,
        failures,
    }
}

fn ribbon_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let all = compositions_of(n);
        // One standard-tableau sweep per shape gives the whole L matrix.
        let mut descent_tally: BTreeMap<Composition, BTreeMap<Composition, u64>> = BTreeMap::new();
        let mut sit_counts: BTreeMap<Composition, u64> = BTreeMap::new();
        for alpha in &all {
            let sits = tableau::standard_immaculate_tableaux(alpha);
            sit_counts.insert(alpha.clone(), sits.len() as u64);
            let tally = descent_tally.entry(alpha.clone()).or_default();
            for t in &sits {
                *tally.entry(t.descent_composition()).or_insert(0) += 1;
            }
        }
        let table = h_to_s_table(n);
        for beta in &all {
            instances += 1;
            // Direct positive expansion from the L matrix...
            let mut direct = LinComb::zero();
            for alpha in &all {
                if let Some(&l) = descent_tally[alpha].get(beta) {
                    direct.add_term(alpha.clone(), Int::from(l));
                }
            }
            let direct = NSymElement::from_terms(
                NSymBasis::S,
                direct.iter().map(|(k, c)| (k.clone(), c.clone())),
            );
            // ...must match the shipped function and the route through H.
            let shipped = nsym::ribbon_to_immaculate::<Int>(beta);
            let via_h = to_s_via_table(&nsym::ribbon_to_h::<Int>(beta), &table);
            if shipped != direct || via_h != direct {
                failures.push(format!(
                    "ribbon R[{beta}]: direct {direct}, shipped {shipped}, via H {via_h}"
                ));
            }
        }
        for alpha in &all {
            instances += 1;
            let total: u64 = descent_tally[alpha].values().sum();
            if total != sit_counts[alpha] {
                failures.push(format!(
                    "ribbon: descent compositions of [{alpha}] cover {total} of {} tableaux",
                    sit_counts[alpha]
                ));
            }
        }
        for alpha in &all {
            instances += 1;
            let round = nsym::ribbon_to_h::<Int>(alpha)
                .terms()
                .flat_map(|b| nsym::h_to_ribbon::<Int>(b).terms().clone());
            if round != LinComb::unit(alpha.clone()) {
                failures.push(format!("ribbon transforms not inverse at [{alpha}]"));
            }
        }
    }
    SuiteReport {
        suite: Suite::Ribbon.name(),
        max_n,
        instances,
        failures,
    }
}

fn duality_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let all = compositions_of(n);
        let s_in_h = immaculate_h_expansions(n);
        let kostka = kostka_matrix(n);
        for alpha in &all {
            for beta in &all {
                instances += 1;
                // <S_alpha, S*_beta> through the H/M expansions: the Bernstein
                // expansion of S_alpha against the tableau expansion of S*_beta.
                let mut value = Int::from(0);
                for (gamma, c) in s_in_h[alpha].terms().iter() {
                    if let Some(&k) = kostka[beta].get(gamma) {
                        value += c * Int::from(k);
                    }
                }
                let expected = Int::from(u64::from(alpha == beta));
                if value != expected {
                    failures.push(format!(
                        "duality <S[{alpha}], S*[{beta}]> = {value}"
                    ));
                }
            }
        }
        // <R_alpha, F_beta> = delta through the same H/M route.
        for alpha in &all {
            let r = NSymElement::basis_element(NSymBasis::R, alpha.clone());
            for beta in &all {
                instances += 1;
                let f = crate::QSymElement::basis_element(qsym::QSymBasis::F, beta.clone());
                let value = qsym::pairing(&r, &f);
                let expected = Int::from(u64::from(alpha == beta));
                if value != expected {
                    failures.push(format!("duality <R[{alpha}], F[{beta}]> = {value}"));
                }
            }
        }
    }
    SuiteReport {
        suite: Suite::Duality.name(),
        max_n,
        instances,
        failures,
    }
}

fn lr_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    let tables: BTreeMap<u32, STable> = (0..=max_n).map(|n| (n, h_to_s_table(n))).collect();
    for a in 0..=max_n {
        let expansions = immaculate_h_expansions(a);
        for alpha in compositions_of(a) {
            let left = &expansions[&alpha];
            for l in 0..=(max_n - a) {
                for lambda in partitions_of(l) {
                    instances += 1;
                    let rule = nsym::lr_multiply::<Int>(&alpha, &lambda);
                    let right =
                        nsym::immaculate_to_h::<Int>(&lambda.as_composition().to_int_tuple());
                    let product = nsym::h_multiply(left, &right).expect("both in H");
                    let oracle = to_s_via_table(&product, &tables[&(a + l)]);
                    if rule != oracle {
                        failures.push(format!(
                            "lr alpha=[{alpha}] lambda=[{lambda}]: rule {rule} != oracle {oracle}"
                        ));
                    }
                }
            }
        }
    }
    SuiteReport {
        suite: Suite::Lr.name(),
        max_n,
        instances,
        failures,
    }
}

fn mn_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    let tables: BTreeMap<u32, STable> = (0..=max_n).map(|n| (n, h_to_s_table(n))).collect();
    for a in 0..=max_n {
        let expansions = immaculate_h_expansions(a);
        for alpha in compositions_of(a) {
            let left = &expansions[&alpha];
            for k in 1..=(max_n - a) {
                instances += 1;
                // Normalize the raw zero-padded terms through the creation
                // operators and the degree table.
                let mut acc = LinComb::zero();
                for tuple in nsym::mn_multiply_raw(&alpha, k) {
                    acc.add_assign(nsym::immaculate_to_h::<Int>(&tuple).terms());
                }
                let rule_h = NSymElement::from_terms(
                    NSymBasis::H,
                    acc.iter().map(|(key, c)| (key.clone(), c.clone())),
                );
                let rule = to_s_via_table(&rule_h, &tables[&(a + k)]);
                let shipped = nsym::mn_multiply::<Int>(&alpha, k);
                let product =
                    nsym::h_multiply(left, &nsym::psi_to_h::<Int>(k)).expect("both in H");
                let oracle = to_s_via_table(&product, &tables[&(a + k)]);
                if rule != oracle || shipped != oracle {
                    failures.push(format!(
                        "mn alpha=[{alpha}] k={k}: rule {rule} != oracle {oracle}"
                    ));
                }
            }
        }
    }
    SuiteReport {
        suite: Suite::Mn.name(),
        max_n,
        instances,
        failures,
    }
}

fn projection_suite(max_n: u32) -> SuiteReport {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for alpha in compositions_of(n) {
            instances += 1;
            let s = NSymElement::basis_element(NSymBasis::S, alpha.clone());
            let chi = sym::forgetful(&s);
            let schur = sym::schur_to_h::<Int>(&alpha.to_int_tuple());
            if chi != schur {
                failures.push(format!(
                    "projection chi(S[{alpha}]) = {chi} != {schur}"
                ));
            }
        }
    }
    // The power-sum lift is validated one degree deeper than the Schur
    // projection (Psi needs no tableau sweep, so the extra degree is free).
    for n in 1..=(max_n + 1) {
        instances += 1;
        let chi = sym::forgetful(&nsym::psi_to_h::<Int>(n));
        let rational = chi.map_coeffs(|c| Rat::from_integer(c.clone()));
        let p = sym::h_to_p(&rational).expect("h basis");
        let expected = crate::RationalSymElement::basis_element(
            sym::SymBasis::P,
            crate::Partition::new([n]).expect("positive part"),
        );
        if p != expected {
            failures.push(format!("projection chi(Psi_{n}) = {p} != p_{n}"));
        }
    }
    SuiteReport {
        suite: Suite::Projection.name(),
        max_n,
        instances,
        failures,
    }
}
