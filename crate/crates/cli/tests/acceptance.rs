//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime. All comparisons are exact (tolerance zero).

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equiseries_cli::examples;
use equiseries_core::complex::{
    invariant_lsop, verify_lsop, ActedComplex, Coloring, ComplexError, SimplicialComplex,
};
use equiseries_core::grpchar::series::expand_rational;
use equiseries_core::grpchar::{
    inner_product, CharacterTable, ClassFunction, Cyclotomic, FiniteGroup, Permutation,
};
use equiseries_core::polytope::{equivariant_ehrhart, verify_ebm};
use equiseries_core::posetgeo::Poset;
use equiseries_core::Int;

struct Criterion {
    number: usize,
    label: &'static str,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn start(number: usize, label: &'static str, budget_secs: u64) -> Self {
        Criterion {
            number,
            label,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
        }
    }

    fn finish(self, pass: bool) {
        let elapsed = self.started.elapsed();
        let within = elapsed <= self.budget;
        println!(
            "criterion {} ({}): {} in {} ms (budget {} s)",
            self.number,
            self.label,
            if pass && within { "PASS" } else { "FAIL" },
            elapsed.as_millis(),
            self.budget.as_secs(),
        );
        assert!(pass, "criterion {} ({}) failed", self.number, self.label);
        assert!(
            within,
            "criterion {} ({}) exceeded its {} s budget: {} ms",
            self.number,
            self.label,
            self.budget.as_secs(),
            elapsed.as_millis()
        );
    }
}

fn sgn(group: &Arc<FiniteGroup>) -> ClassFunction {
    // All acting groups here have the relevant involution in class 1.
    let values: Vec<i64> = (0..group.class_count())
        .map(|c| if c == 0 { 1 } else { -1 })
        .collect();
    ClassFunction::from_ints(group.clone(), &values)
}

#[test]
fn criterion_01_hexagon() {
    let criterion = Criterion::start(1, "hexagon Hilbert numerators and flag effectiveness", 1);
    let acted = examples::hexagon();
    let group = acted.group().clone();
    let triv = ClassFunction::trivial(group.clone());
    let sgn = sgn(&group);

    let series = acted.hilbert_series_formula(8).unwrap();
    let numerator_e2 = series.rational_numerator(2).unwrap();
    let numerator_e3 = series.rational_numerator(3).unwrap();
    let expected_e2 = vec![triv.clone(), triv.add(&sgn.scale_int(3)), triv.clone()];
    let expected_e3 = vec![triv.clone(), sgn.scale_int(3), sgn.scale_int(-3), triv.neg()];

    let coloring = acted.invariant_coloring(3).unwrap();
    let flags = acted.flag_f_h(&coloring).unwrap();
    let table = CharacterTable::compute(group.clone()).unwrap();
    let minus_sgn = sgn.neg();
    let mut flags_ok = true;
    for (colors, h) in &flags.h_s {
        if colors.len() == 2 {
            flags_ok &= *h == minus_sgn;
            flags_ok &= !table.decompose(h).unwrap().is_effective;
        }
    }
    let fh = acted.equivariant_f_h();
    let h_effective = fh
        .h
        .iter()
        .all(|h| table.decompose(h).unwrap().is_effective);

    criterion.finish(
        numerator_e2 == expected_e2 && numerator_e3 == expected_e3 && flags_ok && h_effective,
    );
}

#[test]
fn criterion_02_artinian_example() {
    let criterion = Criterion::start(2, "two-point complex and both rational forms", 1);
    let acted = examples::two_points_swap();
    let group = acted.group().clone();
    let triv = ClassFunction::trivial(group.clone());
    let sgn = sgn(&group);
    let one_plus_sgn = triv.add(&sgn);

    let direct = acted.hilbert_series_direct(6);
    let mut coefficients_ok = *direct.coeff(0) == triv;
    for degree in 1..=6 {
        coefficients_ok &= *direct.coeff(degree) == one_plus_sgn;
    }
    let form_a = expand_rational(&[triv.clone(), sgn.clone()], &[(triv.clone(), 1)], 6).unwrap();
    let form_b = expand_rational(&[triv.clone(), triv.clone()], &[(sgn.clone(), 1)], 6).unwrap();
    criterion.finish(coefficients_ok && direct == form_a && direct == form_b);
}

#[test]
fn criterion_03_non_proper_counterexample() {
    let criterion = Criterion::start(3, "single-edge swap refuses formula mode", 1);
    let acted = examples::single_edge_swap();
    let group = acted.group().clone();

    let direct = acted.hilbert_series_direct(3);
    let direct_t3 = ClassFunction::from_ints(group.clone(), &[4, 0]); // 2 + 2χ
    let refused = matches!(
        acted.hilbert_series_formula(3),
        Err(ComplexError::NotProper { element: 1, .. })
    );
    // The face-count formula would give 3 + χ at t³.
    let fh = acted.equivariant_f_h();
    let triv = ClassFunction::trivial(group.clone());
    let formula_series = expand_rational(
        &fh.h,
        &[(triv.clone(), 1), (triv.clone(), 1)],
        3,
    )
    .unwrap();
    let formula_t3 = ClassFunction::from_ints(group.clone(), &[4, 2]); // 3 + χ
    criterion.finish(
        *direct.coeff(3) == direct_t3 && refused && *formula_series.coeff(3) == formula_t3,
    );
}

#[test]
fn criterion_04_equivariant_betke_mcmullen() {
    // Each fixture individually carries a 30 s budget.
    let criterion = Criterion::start(4, "verify-ebm across all shipped fixtures (N = 6)", 210);
    let mut pass = true;
    let mut run_fixture = |name: &str, ok: bool, started: Instant| {
        let elapsed = started.elapsed();
        pass &= ok && elapsed <= Duration::from_secs(30);
        assert!(ok, "verify-ebm failed on {name}");
        assert!(
            elapsed <= Duration::from_secs(30),
            "{name} exceeded 30 s: {} ms",
            elapsed.as_millis()
        );
    };

    let started = Instant::now();
    let square = examples::unit_square_swap();
    let ok = verify_ebm(&square.polytope, &square.triangulation, &square.affine_action, 6)
        .unwrap()
        .ok;
    run_fixture("unit square + swap", ok, started);

    for k in 1..=2 {
        let started = Instant::now();
        let data = examples::radio_tower(k);
        let ok = verify_ebm(&data.polytope, &data.triangulation, &data.affine_action, 6)
            .unwrap()
            .ok;
        run_fixture(&format!("O(radio_tower({k}))"), ok, started);
    }
    for n in 2..=3 {
        let started = Instant::now();
        let data = examples::boolean_cube(n);
        let ok = verify_ebm(&data.polytope, &data.triangulation, &data.affine_action, 6)
            .unwrap()
            .ok;
        run_fixture(&format!("{n}-cube with S_{n}"), ok, started);
    }
    for n in 2..=3 {
        let started = Instant::now();
        let data = examples::lipschitz(n);
        let ok = verify_ebm(&data.polytope, &data.triangulation, &data.action, 6)
            .unwrap()
            .ok;
        run_fixture(&format!("Lip(T_{n}) with S_{n}"), ok, started);
    }
    criterion.finish(pass);
}

#[test]
fn criterion_05_radio_tower_closed_form() {
    let criterion = Criterion::start(5, "radio-tower Ehrhart closed form (k = 1, 2)", 10);
    let mut pass = true;
    for k in 1..=2 {
        let data = examples::radio_tower(k);
        let series = equivariant_ehrhart(&data.polytope, &data.affine_action, 6).unwrap();
        let closed = examples::radio_tower_closed_form(&data, k, 6);
        pass &= series == closed;
    }
    criterion.finish(pass);
}

#[test]
fn criterion_06_boolean_cube_numerator() {
    let criterion = Criterion::start(6, "n-cube numerator vs Young tableaux (n = 2, 3, 4)", 60);
    let mut pass = true;
    for n in 2..=4 {
        let data = examples::boolean_cube(n);
        let truncation = n + 4;
        let series = equivariant_ehrhart(&data.polytope, &data.affine_action, truncation).unwrap();
        let numerator = series.rational_numerator(n + 1).unwrap();
        let expected = examples::boolean_syt_numerator(&data);
        pass &= numerator == expected;
    }
    criterion.finish(pass);
}

#[test]
fn criterion_07_join_formula() {
    let criterion = Criterion::start(7, "join identity over all small factor pairs", 30);
    let factors = [Poset::chain(1), Poset::chain(2), Poset::antichain(2)];
    let mut pass = true;
    for x1 in &factors {
        for x2 in &factors {
            let (lhs, rhs) = examples::join_comparison(x1, x2, 6);
            pass &= lhs == rhs;
        }
    }
    criterion.finish(pass);
}

#[test]
fn criterion_08_lipschitz_identity() {
    let criterion = Criterion::start(8, "Lipschitz identity and alcove counts (n = 2, 3)", 30);
    let mut pass = true;
    for n in 2..=3 {
        let data = examples::lipschitz(n);
        let series = equivariant_ehrhart(&data.polytope, &data.action, 6).unwrap();
        let expected = examples::lipschitz_identity_rhs(&data, 6);
        pass &= series == expected;
        let cells = data.triangulation.complex().facets().len();
        pass &= cells == 2 * (1..=n).product::<usize>();
    }
    criterion.finish(pass);
}

/// Balanced Cohen–Macaulay fixtures with color-preserving actions, paired
/// with their balanced colorings.
fn balanced_fixtures() -> Vec<(&'static str, ActedComplex, Coloring)> {
    let mut fixtures = Vec::new();
    let square = examples::unit_square_swap();
    fixtures.push((
        "order polytope of the 2-antichain",
        square.acted_complex,
        square.coloring,
    ));
    for (name, k) in [("radio tower k=1", 1), ("radio tower k=2", 2)] {
        let data = examples::radio_tower(k);
        fixtures.push((name, data.acted_complex, data.coloring));
    }
    for (name, n) in [("2-cube", 2), ("3-cube", 3)] {
        let data = examples::boolean_cube(n);
        fixtures.push((name, data.acted_complex, data.coloring));
    }
    for (name, n) in [("Lip(T_2)", 2), ("Lip(T_3)", 3)] {
        let data = examples::lipschitz(n);
        let dim = data.polytope.dim();
        let coloring = data
            .acted_complex
            .invariant_coloring(dim + 1)
            .expect("alcoved triangulations admit balanced colorings");
        fixtures.push((name, data.acted_complex, coloring));
    }
    fixtures
}

#[test]
fn criterion_09_effectiveness_theorems() {
    let criterion = Criterion::start(9, "effectiveness of h and flag h on balanced fixtures", 60);
    let mut pass = true;
    for (name, acted, coloring) in balanced_fixtures() {
        assert_eq!(
            coloring.palette() as isize,
            acted.complex().dim() + 1,
            "{name}: coloring must be balanced"
        );
        let table = CharacterTable::compute(acted.group().clone()).unwrap();
        let fh = acted.equivariant_f_h();
        for (i, h) in fh.h.iter().enumerate() {
            let effective = table.decompose(h).unwrap().is_effective;
            assert!(effective, "{name}: h_{i} must be effective");
            pass &= effective;
        }
        let flags = acted.flag_f_h(&coloring).unwrap();
        for (colors, h) in &flags.h_s {
            let effective = table.decompose(h).unwrap().is_effective;
            assert!(effective, "{name}: h_S at S={colors:?} must be effective");
            pass &= effective;
        }
    }
    criterion.finish(pass);
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::new(images).unwrap()
}

fn random_acted_complex(rng: &mut ChaCha8Rng, n: usize) -> ActedComplex {
    let generator = random_permutation(rng, n);
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for _ in 0..rng.gen_range(1..=5) {
        let size = rng.gen_range(1..=3.min(n));
        let mut facet = BTreeSet::new();
        while facet.len() < size {
            facet.insert(rng.gen_range(0..n));
        }
        facets.insert(facet.into_iter().collect());
    }
    loop {
        let mut closed = facets.clone();
        for facet in &facets {
            let mut image: Vec<usize> = facet.iter().map(|&v| generator.apply(v)).collect();
            image.sort_unstable();
            closed.insert(image);
        }
        if closed == facets {
            break;
        }
        facets = closed;
    }
    let complex = SimplicialComplex::new(n, facets.into_iter().collect()).unwrap();
    let group = FiniteGroup::generate_default(n, &[generator]).unwrap();
    ActedComplex::from_vertex_group(complex, group).unwrap()
}

/// Classical Hilbert coefficients of the fixed subcomplex of one element.
fn fixed_complex_hilbert(acted: &ActedComplex, element: usize, n: usize) -> Vec<Int> {
    let faces = acted.complex().faces();
    let mut coeffs = vec![Int::from(0); n + 1];
    coeffs[0] = Int::from(1);
    for &fi in &acted.fixed_faces(element) {
        let size = faces[fi].len();
        if size == 0 {
            continue;
        }
        for degree in size..=n {
            let mut binom = Int::from(1);
            for t in 0..size - 1 {
                binom = binom * Int::from((degree - 1 - t) as i64) / Int::from((t + 1) as i64);
            }
            coeffs[degree] += binom;
        }
    }
    coeffs
}

/// Permutation groups of order up to 120 used for the orthogonality sweep.
fn group_catalog() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut catalog: Vec<(String, Arc<FiniteGroup>)> = Vec::new();
    catalog.push(("trivial".into(), FiniteGroup::trivial(1)));
    for n in 2..=12 {
        catalog.push((
            format!("Z_{n}"),
            FiniteGroup::generate_default(n, &[Permutation::cycle(n)]).unwrap(),
        ));
    }
    let double_swap = vec![
        Permutation::new(vec![1, 0, 2, 3]).unwrap(),
        Permutation::new(vec![0, 1, 3, 2]).unwrap(),
    ];
    catalog.push((
        "Z_2 x Z_2".into(),
        FiniteGroup::generate_default(4, &double_swap).unwrap(),
    ));
    catalog.push((
        "Z_2^3".into(),
        FiniteGroup::generate_default(
            6,
            &[
                Permutation::new(vec![1, 0, 2, 3, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 3, 2, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 2, 3, 5, 4]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog.push((
        "Z_2 x Z_4".into(),
        FiniteGroup::generate_default(
            6,
            &[
                Permutation::new(vec![1, 0, 2, 3, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 3, 4, 5, 2]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog.push((
        "Z_3 x Z_3".into(),
        FiniteGroup::generate_default(
            6,
            &[
                Permutation::new(vec![1, 2, 0, 3, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 2, 4, 5, 3]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    for n in [3usize, 4, 5] {
        catalog.push((format!("S_{n}"), FiniteGroup::symmetric(n).unwrap()));
    }
    catalog.push((
        "A_4".into(),
        FiniteGroup::generate_default(
            4,
            &[
                Permutation::new(vec![1, 2, 0, 3]).unwrap(),
                Permutation::new(vec![0, 2, 3, 1]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog.push((
        "A_5".into(),
        FiniteGroup::generate_default(
            5,
            &[
                Permutation::new(vec![1, 2, 3, 4, 0]).unwrap(),
                Permutation::new(vec![1, 2, 0, 3, 4]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    for n in [4usize, 5, 6] {
        let mut reversal: Vec<usize> = (0..n).rev().collect();
        reversal.rotate_right(1); // i ↦ −i mod n fixes 0
        catalog.push((
            format!("D_{n}"),
            FiniteGroup::generate_default(
                n,
                &[Permutation::cycle(n), Permutation::new(reversal).unwrap()],
            )
            .unwrap(),
        ));
    }
    catalog.push(("Q_8".into(), quaternion_group()));
    catalog.push((
        "F_20".into(),
        FiniteGroup::generate_default(
            5,
            &[
                Permutation::cycle(5),
                // x ↦ 2x mod 5
                Permutation::new(vec![0, 2, 4, 1, 3]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog.push((
        "S_3 x S_3".into(),
        FiniteGroup::generate_default(
            6,
            &[
                Permutation::new(vec![1, 0, 2, 3, 4, 5]).unwrap(),
                Permutation::new(vec![1, 2, 0, 3, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 2, 4, 3, 5]).unwrap(),
                Permutation::new(vec![0, 1, 2, 4, 5, 3]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog.push((
        "Z_2 x S_4".into(),
        FiniteGroup::generate_default(
            6,
            &[
                Permutation::new(vec![1, 0, 2, 3, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 3, 2, 4, 5]).unwrap(),
                Permutation::new(vec![0, 1, 3, 4, 5, 2]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog.push((
        "Z_2 x A_5".into(),
        FiniteGroup::generate_default(
            7,
            &[
                Permutation::new(vec![1, 0, 2, 3, 4, 5, 6]).unwrap(),
                Permutation::new(vec![0, 1, 3, 4, 5, 6, 2]).unwrap(),
                Permutation::new(vec![0, 1, 3, 4, 2, 5, 6]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    catalog
}

/// Q_8 in its regular representation, from the quaternion multiplication
/// table on {±1, ±i, ±j, ±k} (index 2·axis + sign bit).
fn quaternion_group() -> Arc<FiniteGroup> {
    fn mul(a: usize, b: usize) -> usize {
        let (sa, xa) = (a % 2 == 1, a / 2);
        let (sb, xb) = (b % 2 == 1, b / 2);
        // Axis table for 1, i, j, k with the sign of the product.
        const AXIS: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        const NEG: [[bool; 4]; 4] = [
            [false, false, false, false],
            [false, true, false, true],
            [false, true, true, false],
            [false, false, true, true],
        ];
        // NEG[xa][xb] is read as: i*i = −1, i*j = +k, i*k = −j, j*i = −k,
        // j*j = −1, j*k = +i, k*i = +j, k*j = −i, k*k = −1.
        let axis = AXIS[xa][xb];
        let sign = sa ^ sb ^ NEG[xa][xb];
        2 * axis + usize::from(sign)
    }
    let left_i = Permutation::new((0..8).map(|e| mul(2, e)).collect()).unwrap();
    let left_j = Permutation::new((0..8).map(|e| mul(4, e)).collect()).unwrap();
    FiniteGroup::generate_default(8, &[left_i, left_j]).unwrap()
}

#[test]
fn criterion_10_property_suites() {
    let criterion = Criterion::start(10, "randomized and structural property suites", 120);
    let mut pass = true;

    // (a) translative ⇒ proper on 200 randomized small acted complexes.
    let mut rng = ChaCha8Rng::seed_from_u64(424_242);
    let mut translative_count = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let acted = random_acted_complex(&mut rng, n);
        if acted.is_translative() {
            translative_count += 1;
            pass &= acted.is_proper();
        }
    }
    assert!(translative_count >= 20, "generator yields too few translative cases");

    // (b) Per-element Hilbert oracle on every proper fixture.
    let mut proper_fixtures: Vec<(&'static str, ActedComplex)> = vec![
        ("hexagon", examples::hexagon()),
        ("two points", examples::two_points_swap()),
    ];
    for (name, acted, _) in balanced_fixtures() {
        proper_fixtures.push((name, acted));
    }
    for (name, acted) in &proper_fixtures {
        assert!(acted.is_proper(), "{name} must be proper");
        let series = acted.hilbert_series_formula(6).unwrap();
        for class in 0..acted.group().class_count() {
            let rep = acted.group().classes()[class].representative;
            let oracle = fixed_complex_hilbert(acted, rep, 6);
            for degree in 0..=6 {
                let value = series
                    .coeff(degree)
                    .value(class)
                    .as_rational()
                    .unwrap()
                    .to_integer();
                pass &= value == oracle[degree];
                assert_eq!(value, oracle[degree], "{name}: class {class} degree {degree}");
            }
        }
    }

    // (c) Character-table orthogonality for the catalog of groups ≤ 120.
    for (name, group) in group_catalog() {
        assert!(group.order() <= 120, "{name} exceeds order 120");
        let table = CharacterTable::compute(group.clone()).unwrap();
        let k = table.irreducibles().len();
        assert_eq!(k, group.class_count(), "{name}: row count");
        let mut degree_sum = Int::from(0);
        for i in 0..k {
            let d = table.irreducibles()[i]
                .degree()
                .as_rational()
                .unwrap()
                .to_integer();
            degree_sum += &d * &d;
            for j in 0..k {
                let ip =
                    inner_product(&table.irreducibles()[i], &table.irreducibles()[j]).unwrap();
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                pass &= ip == expected;
                assert_eq!(ip, expected, "{name}: ⟨χ_{i}, χ_{j}⟩");
            }
        }
        assert_eq!(degree_sum, Int::from(group.order() as i64), "{name}: Σd²");
    }

    // (d) Kind–Kleinschmidt on every translative fixture.
    for (name, acted, coloring) in balanced_fixtures() {
        assert!(acted.is_translative(), "{name} must be translative");
        let forms = invariant_lsop(&acted, &coloring).unwrap();
        pass &= verify_lsop(acted.complex(), &forms);
    }
    {
        let hexagon = examples::hexagon();
        let coloring = hexagon.invariant_coloring(3).unwrap();
        let forms = invariant_lsop(&hexagon, &coloring).unwrap();
        pass &= verify_lsop(hexagon.complex(), &forms);
    }

    criterion.finish(pass);
}
