//! Miyamoto groups on the catalog and family models: closure, orders,
//! pair-order spectra, 3-transposition verdicts and commuting filters.

use griess_core::*;
use griess_groups::*;
use griess_models::*;

fn seeds(cat: &CatalogAlgebra, names: &[&str]) -> Vec<Element> {
    names.iter().map(|n| cat.named(n).clone()).collect()
}

#[test]
fn closure_on_the_axis_pair_models() {
    // 3A pair closes onto the axis triple
    let cat = make_3a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::Auto,
        100,
    )
    .unwrap();
    assert_eq!(s.len(), 3);
    // a single seed closes onto itself
    let s = close_axes(&cat.algebra, &seeds(&cat, &["a"]), FlavorRule::Auto, 100).unwrap();
    assert_eq!(s.len(), 1);
    // 2A pair closes onto the triple, 2B pair stays a pair
    let cat = make_2a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::SigmaOnly,
        100,
    )
    .unwrap();
    assert_eq!(s.len(), 3);
    let cat = make_2b();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::Auto,
        100,
    )
    .unwrap();
    assert_eq!(s.len(), 2);
}

#[test]
fn six_a_closure_reaches_all_seven_axes() {
    let cat = make_6a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["e0", "e1"]),
        FlavorRule::Auto,
        100,
    )
    .unwrap();
    assert_eq!(s.len(), 7);
    assert!(s.position(cat.named("x")).is_some());
    // the central axis got the sigma flavor, the hexagon axes tau
    let idx = s.position(cat.named("x")).unwrap();
    assert_eq!(s.maps[idx].flavor, Flavor::Sigma);
    let idx = s.position(cat.named("e0")).unwrap();
    assert_eq!(s.maps[idx].flavor, Flavor::Tau);
}

#[test]
fn closure_budget_is_enforced() {
    let cat = make_6a();
    let r = close_axes(&cat.algebra, &seeds(&cat, &["e0", "e1"]), FlavorRule::Auto, 3);
    assert!(matches!(
        r,
        Err(GroupError::ClosureBudgetExceeded { budget: 3 })
    ));
}

#[test]
fn two_a_sigma_group_is_s3() {
    let cat = make_2a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::SigmaOnly,
        100,
    )
    .unwrap();
    let image = permutation_image(&cat.algebra, &s).unwrap();
    assert_eq!(image.group.order(), 6);
    assert!(image.faithful);
    // brute-force enumeration agrees
    assert_eq!(
        enumerate_order(&image.generator_perms, s.len(), 10_000).unwrap(),
        6
    );
}

#[test]
fn six_a_group_from_the_stated_generators_has_order_twelve() {
    let cat = make_6a();
    let alg = &cat.algebra;
    let s = close_axes(alg, &seeds(&cat, &["e0", "e1"]), FlavorRule::Auto, 100).unwrap();
    let tau_a = miyamoto_tau(alg, cat.named("e0")).unwrap();
    let tau_b = miyamoto_tau(alg, cat.named("e1")).unwrap();
    let sigma_x = miyamoto_sigma(alg, cat.named("x")).unwrap();
    let gens = vec![tau_a.matrix.mat_mul(&sigma_x.matrix), tau_b.matrix];
    let group = group_from_matrices(&s, &gens).unwrap();
    assert_eq!(group.order(), 12);
    // the full per-axis generator set gives the same group order
    let image = permutation_image(alg, &s).unwrap();
    assert_eq!(image.group.order(), 12);
    assert!(image.faithful);
}

#[test]
fn pair_order_spectra_on_catalog_algebras() {
    // 2A pairs with tau maps: orders divide 2 (both taus are trivial here)
    let cat = make_2a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::TauOnly,
        100,
    )
    .unwrap();
    for (_, _, ord) in product_order_table(&s).unwrap() {
        assert!(ord <= 2);
    }
    // 2B pair: tau product order divides 2
    let cat = make_2b();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::TauOnly,
        100,
    )
    .unwrap();
    for (_, _, ord) in product_order_table(&s).unwrap() {
        assert!(ord <= 2);
    }
    // 3A triple: tau products have order exactly 3
    let cat = make_3a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["a", "b"]),
        FlavorRule::TauOnly,
        100,
    )
    .unwrap();
    for (_, _, ord) in product_order_table(&s).unwrap() {
        assert_eq!(ord, 3);
    }
    // 6A pairs on the hexagon: order 3 at algebra level
    let cat = make_6a();
    let s = close_axes(
        &cat.algebra,
        &seeds(&cat, &["e0", "e1"]),
        FlavorRule::TauOnly,
        100,
    );
    // central axis is not tau-only closable (it is sigma-type with trivial
    // tau); closing just the hexagon works through Auto on a full set, so
    // check the generating pair product directly instead
    drop(s);
    let t0 = miyamoto_tau(&cat.algebra, cat.named("e0")).unwrap();
    let t1 = miyamoto_tau(&cat.algebra, cat.named("e1")).unwrap();
    assert_eq!(matrix_order(&t0.matrix.mat_mul(&t1.matrix)).unwrap(), 3);
}

#[test]
fn three_transposition_verdicts() {
    // tau involutions of a parity triple inside the 6A algebra: orders {3}
    let cat = make_6a();
    let alg = &cat.algebra;
    let triple = seeds(&cat, &["e0", "e2", "e4"]);
    let s = close_axes(alg, &triple, FlavorRule::TauOnly, 100).unwrap();
    assert_eq!(s.len(), 3);
    let verdict = three_transposition_verdict(alg, &s).unwrap();
    assert!(verdict.is_three_transposition);
    assert!(verdict.transitive_on_axes);
    assert_eq!(verdict.order_histogram, vec![(3, 3)]);
    // sigma involutions of the pairwise-2A tail axis set, computed in the
    // ambient family algebra where they act nontrivially
    for n in 2..=4usize {
        let f = build_xn(n).unwrap();
        let s = close_axes(&f.algebra, &f.tail_axes(), FlavorRule::SigmaOnly, 1000).unwrap();
        assert_eq!(s.len(), n + n * (n - 1) / 2);
        let verdict = three_transposition_verdict(&f.algebra, &s).unwrap();
        assert!(verdict.is_three_transposition, "n = {n}");
        assert!(verdict.transitive_on_axes, "n = {n}");
    }
}

#[test]
fn matsuo_sigma_groups_are_symmetric_groups() {
    // the sigma group of the tail axis set permutes those axes together
    // with the orbit of one ground axis; the enlarged set keeps the action
    // faithful even for n = 1, where the single tail axis is fixed
    for n in 1..=4usize {
        let f = build_xn(n).unwrap();
        let s = close_axes(&f.algebra, &f.tail_axes(), FlavorRule::SigmaOnly, 1000).unwrap();
        let matrices: Vec<_> = s.maps.iter().map(|m| m.matrix.clone()).collect();
        let mut elements = s.axes.clone();
        elements.push(f.ground(0));
        let elements = orbit_closure(&matrices, &elements, 1000).unwrap();
        let group = perm_group_on(&matrices, &elements).unwrap();
        let fact: u128 = (1..=(n as u128 + 1)).product();
        assert_eq!(group.order(), fact, "n = {n}");
    }
}

#[test]
fn commuting_filter_matches_the_transposition_model() {
    // with axes as transpositions of the symmetric group on {0..n}, the
    // commuting filter by sigma of x^1 ~ (0 1) keeps exactly the
    // transpositions disjoint from it, plus itself
    let n = 4;
    let f = build_xn(n).unwrap();
    let s = close_axes(&f.algebra, &f.tail_axes(), FlavorRule::SigmaOnly, 1000).unwrap();
    let x1 = f.x(1);
    let ix1 = s.position(&x1).unwrap();
    let t = s.maps[ix1].matrix.clone();
    let filtered = filter_commuting(&s, &t);
    // transpositions commuting with (0 1): itself and (j k) for 2 <= j < k,
    // axes x^j o x^k with j, k != 1: that is 1 + C(n-1, 2)
    let expected = 1 + (n - 1) * (n - 2) / 2;
    assert_eq!(filtered.len(), expected);
    assert!(filtered.position(&x1).is_some());
    // filtering twice by the same map is idempotent
    let twice = filter_commuting(&filtered, &t);
    assert_eq!(twice.len(), filtered.len());
    // filtering by the identity keeps everything
    let id = griess_exact::Matrix::identity(f.dim());
    assert_eq!(filter_commuting(&s, &id).len(), s.len());
}

#[test]
fn conjugation_covariance_as_matrix_identity() {
    // map(g e) = g map(e) g for every generated involution g on the 3A model
    let cat = make_3a();
    let alg = &cat.algebra;
    let s = close_axes(alg, &seeds(&cat, &["a", "b"]), FlavorRule::TauOnly, 100).unwrap();
    for g in &s.maps {
        for (a, m) in s.axes.iter().zip(&s.maps) {
            let moved = g.apply(a);
            let lhs = miyamoto_tau(alg, &moved).unwrap().matrix;
            let rhs = g.matrix.mat_mul(&m.matrix).mat_mul(&g.matrix);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn permutation_image_requires_closure() {
    let cat = make_3a();
    let alg = &cat.algebra;
    // an artificially truncated axis set is rejected
    let s = close_axes(alg, &seeds(&cat, &["a", "b"]), FlavorRule::TauOnly, 100).unwrap();
    let truncated = AxisSet {
        axes: s.axes[..2].to_vec(),
        maps: s.maps[..2].to_vec(),
    };
    assert!(matches!(
        permutation_image(alg, &truncated),
        Err(GroupError::NotClosed(_))
    ));
}
