//! The verification suites behind `verify`: each check pins one exact
//! value or identity of the constructed models. Checks are grouped into
//! independent families; families run in a deterministic-order parallel
//! pool and the aggregated report preserves declaration order.

use crate::report::{Check, VerificationReport};
use griess_core::*;
use griess_exact::{determinant, ExactScalar, Matrix};
use griess_groups::*;
use griess_lattice::{
    eta_frame, expected_t_charge, full_scan, s_t_decomposition, LatticeGriess, RootType,
};
use griess_models::*;
use std::time::Instant;

fn q(p: i64, den: i64) -> ExactScalar {
    ExactScalar::ratio(p, den)
}

type Family = (&'static str, fn() -> Vec<Check>);

fn gram_of(alg: &GriessAlgebra, vecs: &[Element]) -> Matrix {
    Matrix::from_fn(vecs.len(), vecs.len(), |i, j| alg.form(&vecs[i], &vecs[j]))
}

// ---------------------------------------------------------------- catalog

fn dihedral_table_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    // constructed types: inner product, dimension, axis count by closure
    let expect: [(DihedralTypeName, i64, usize, usize); 4] = [
        (DihedralTypeName::TwoA, 32, 3, 3),
        (DihedralTypeName::TwoB, 0, 2, 2),
        (DihedralTypeName::ThreeA, 13, 4, 3),
        (DihedralTypeName::SixA, 5, 8, 7),
    ];
    for (name, ip, dim, axes) in expect {
        let cat = make_catalog(name).unwrap();
        let (a, b) = cat.generators();
        let scaled = &cat.algebra.form(&a, &b) * &ExactScalar::from_int(1024);
        checks.push(Check::compare(
            format!("catalog.table.{name}.inner"),
            format!("scaled generator inner product of the {name} algebra"),
            ExactScalar::from_int(ip),
            scaled,
        ));
        checks.push(Check::compare(
            format!("catalog.table.{name}.dim"),
            format!("dimension of the {name} algebra"),
            dim,
            cat.algebra.dim(),
        ));
        let closed = close_axes(&cat.algebra, &[a, b], FlavorRule::Auto, 100).unwrap();
        checks.push(Check::compare(
            format!("catalog.table.{name}.axes"),
            format!("number of axes of the {name} algebra"),
            axes,
            closed.len(),
        ));
    }
    // the coincident pair: scaled self inner product 256, dimension 1
    let cat = make_2a();
    let (a, _) = cat.generators();
    let scaled = &cat.algebra.form(&a, &a) * &ExactScalar::from_int(1024);
    checks.push(Check::compare(
        "catalog.table.1A.inner",
        "scaled self inner product of a single axis",
        ExactScalar::from_int(256),
        scaled,
    ));
    let sub = close_subalgebra(&cat.algebra, &[a.clone()]).unwrap();
    checks.push(Check::compare(
        "catalog.table.1A.dim",
        "dimension generated by a single axis",
        1,
        sub.dim(),
    ));
    checks.push(Check::compare(
        "catalog.table.1A.axes",
        "number of axes over a coincident pair",
        1,
        close_axes(&cat.algebra, &[a], FlavorRule::Auto, 10)
            .unwrap()
            .len(),
    ));
    checks
}

fn catalog_charge_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for (name, cc) in [
        (DihedralTypeName::TwoA, q(6, 5)),
        (DihedralTypeName::TwoB, q(1, 1)),
        (DihedralTypeName::ThreeA, q(58, 35)),
        (DihedralTypeName::SixA, q(51, 20)),
    ] {
        let cat = make_catalog(name).unwrap();
        let omega = catalog_conformal(&cat);
        checks.push(Check::compare(
            format!("catalog.charge.{name}"),
            format!("conformal central charge of the {name} algebra"),
            cc,
            omega.central_charge,
        ));
    }
    let cat = make_6a();
    let (u, v, f) = frame_6a(&cat);
    for (label, part, cc) in [
        ("u", &u, q(4, 5)),
        ("v", &v, q(6, 7)),
        ("f", &f, q(25, 28)),
    ] {
        checks.push(Check::compare(
            format!("catalog.frame6A.{label}"),
            format!("central charge of frame part {label} of the 6A algebra"),
            cc,
            part.central_charge.clone(),
        ));
    }
    let omega = catalog_conformal(&cat);
    let sum = u.element.add(&v.element).add(&f.element);
    checks.push(Check::boolean(
        "catalog.frame6A.sum",
        "6A frame parts sum to the conformal vector",
        sum == omega.element,
    ));
    checks
}

fn catalog_identity_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    // the universal axis product decomposition over every catalog algebra
    for name in [
        DihedralTypeName::TwoA,
        DihedralTypeName::TwoB,
        DihedralTypeName::ThreeA,
        DihedralTypeName::SixA,
    ] {
        let cat = make_catalog(name).unwrap();
        let alg = &cat.algebra;
        let axes = {
            let (a, b) = cat.generators();
            close_axes(alg, &[a, b], FlavorRule::Auto, 100).unwrap()
        };
        let mut residual_zero = true;
        for e in &axes.axes {
            let tau = miyamoto_tau(alg, e).unwrap();
            for i in 0..alg.dim() {
                let v = alg.basis_element(i);
                let tv = tau.apply(&v);
                let sig = sigma_image(alg, e, &v.add(&tv)).unwrap();
                let mut rhs = e.scale(&(&ExactScalar::from_int(8) * &alg.form(e, &v)));
                rhs.add_scaled(&q(5, 32), &v);
                rhs.add_scaled(&q(3, 32), &tv);
                rhs.add_scaled(&q(-1, 8), &sig);
                if alg.mul(e, &v) != rhs {
                    residual_zero = false;
                }
            }
        }
        checks.push(Check::boolean(
            format!("catalog.axisproduct.{name}"),
            format!("axis product decomposition holds on the {name} algebra"),
            residual_zero,
        ));
    }
    // sigma images of the characteristic vector in the 3A algebra
    let cat = make_3a();
    let alg = &cat.algebra;
    let (u, a, b, c) = (
        cat.named("u").clone(),
        cat.named("a").clone(),
        cat.named("b").clone(),
        cat.named("c").clone(),
    );
    let got = sigma_image(alg, &a, &u).unwrap();
    let want = Element::combine(
        4,
        &[(q(-1, 4), &u), (q(2, 9), &a), (q(8, 9), &b), (q(8, 9), &c)],
    );
    checks.push(Check::boolean(
        "catalog.sigma3A.u",
        "sigma image of the characteristic vector in the 3A algebra",
        got == want,
    ));
    let got = sigma_image(alg, &a, &b.add(&c)).unwrap();
    let want = Element::combine(
        4,
        &[
            (q(135, 128), &u),
            (q(-3, 16), &a),
            (q(1, 4), &b),
            (q(1, 4), &c),
        ],
    );
    checks.push(Check::boolean(
        "catalog.sigma3A.bc",
        "sigma image of the partner axis sum in the 3A algebra",
        got == want,
    ));
    // the two 6A double-product identities, transported around the hexagon
    let all_zero = lemma_2_14_identities(&make_6a())
        .into_iter()
        .all(|(_, r)| r.is_zero());
    checks.push(Check::boolean(
        "catalog.doubleproduct.6A",
        "6A double-product identities hold at every rotation",
        all_zero,
    ));
    checks
}

fn catalog_involution_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    // conjugation covariance of the involution maps on the 6A model
    let cat = make_6a();
    let alg = &cat.algebra;
    let e: Vec<Element> = (0..6).map(|i| cat.named(&format!("e{i}")).clone()).collect();
    let tau0 = miyamoto_tau(alg, &e[0]).unwrap();
    let mut covariant = true;
    for ei in &e {
        let lhs = miyamoto_tau(alg, &tau0.apply(ei)).unwrap().matrix;
        let rhs = tau0
            .matrix
            .mat_mul(&miyamoto_tau(alg, ei).unwrap().matrix)
            .mat_mul(&tau0.matrix);
        if lhs != rhs {
            covariant = false;
        }
    }
    let x = cat.named("x");
    let sigma = miyamoto_sigma(alg, x).unwrap();
    if miyamoto_sigma(alg, &tau0.apply(x)).unwrap().matrix
        != tau0.matrix.mat_mul(&sigma.matrix).mat_mul(&tau0.matrix)
    {
        covariant = false;
    }
    checks.push(Check::boolean(
        "catalog.covariance",
        "conjugation covariance of involution maps on the 6A model",
        covariant,
    ));
    // serialization round trips
    for name in [
        DihedralTypeName::TwoA,
        DihedralTypeName::TwoB,
        DihedralTypeName::ThreeA,
        DihedralTypeName::SixA,
    ] {
        let cat = make_catalog(name).unwrap();
        let json = crate::io::export_algebra(&cat.algebra);
        let loaded = crate::io::import_algebra(&json).unwrap();
        checks.push(Check::boolean(
            format!("catalog.roundtrip.{name}"),
            format!("serialization round trip of the {name} algebra"),
            loaded == cat.algebra,
        ));
    }
    checks
}

// ----------------------------------------------------------------- family

fn family_charge_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 0..=8usize {
        let f = build_xn(n).unwrap();
        let omega = f.omega_virasoro(n);
        checks.push(Check::compare(
            format!("family.charge.x{n}"),
            format!("conformal central charge of the stage-{n} family algebra"),
            omega_charge(n),
            match &omega {
                Ok(v) => v.central_charge.to_string(),
                Err(e) => format!("error: {e}"),
            },
        ));
        if n >= 1 {
            let fk = f.frame_vector(n);
            let ok = is_virasoro(&f.algebra, &fk);
            checks.push(Check::compare(
                format!("family.framecharge.f{n}"),
                format!("central charge of the stage-{n} frame vector"),
                virasoro::UnitaryCharge::new(n as u32 + 4).c,
                if ok {
                    central_charge(&f.algebra, &fk).to_string()
                } else {
                    "not a Virasoro vector".into()
                },
            ));
        }
        // solver cross-check at small stages
        if n <= 3 {
            let basis: Vec<Element> = (0..f.dim()).map(|i| f.algebra.basis_element(i)).collect();
            let solved = conformal_vector(&f.algebra, &basis).unwrap();
            checks.push(Check::boolean(
                format!("family.solver.x{n}"),
                format!("closed-form conformal vector matches the Gram solver at stage {n}"),
                solved.element == f.omega(n),
            ));
        }
    }
    checks
}

fn family_13_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let b = build_abxy_2a().unwrap();
    let f = &b.family;
    let alg = &f.algebra;
    checks.push(Check::compare(
        "family.13.charge",
        "conformal central charge of the 13-dimensional four-generator algebra",
        q(52, 15),
        f.omega_virasoro(2).unwrap().central_charge,
    ));
    checks.push(Check::compare(
        "family.13.fcharge",
        "central charge of the distinguished commutant generator",
        q(11, 12),
        central_charge(alg, &b.f),
    ));
    let basis: Vec<Element> = (0..13).map(|i| alg.basis_element(i)).collect();
    let det = determinant(&gram_of(alg, &basis)).unwrap();
    let expect = {
        let num = &ExactScalar::from_int(3).pow(25) * &ExactScalar::from_int(11).pow(5);
        let den = &ExactScalar::from_int(2).pow(81) * &ExactScalar::from_int(5);
        &num / &den
    };
    checks.push(Check::compare(
        "family.13.gram",
        "Gram determinant of the 13-vector basis",
        expect,
        det,
    ));
    // (a | x y) over a 2A tail pair
    checks.push(Check::compare(
        "family.13.axy",
        "ground axis against the product of a 2A tail pair",
        q(1, 64),
        alg.form(&f.ground(0), &alg.mul(&f.x(1), &f.x(2))),
    ));
    checks.push(Check::boolean(
        "family.13.commutant",
        "the commutant generator annihilates the first-stage subalgebra frame",
        alg.mul(&b.f, &f.omega(1)).is_zero() && alg.form(&b.f, &f.omega(1)).is_zero(),
    ));
    checks
}

fn family_18_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let b = build_abxy_3a().unwrap();
    let alg = &b.algebra;
    let basis: Vec<Element> = (0..18).map(|i| alg.basis_element(i)).collect();
    let eta = conformal_vector(alg, &basis).unwrap();
    checks.push(Check::compare(
        "family.18.charge",
        "conformal central charge of the 18-dimensional four-generator algebra",
        q(228, 55),
        eta.central_charge,
    ));
    checks.push(Check::compare(
        "family.18.xicharge",
        "central charge of the residual frame vector",
        q(52, 55),
        if is_virasoro(alg, &b.xi) {
            central_charge(alg, &b.xi).to_string()
        } else {
            "not a Virasoro vector".into()
        },
    ));
    let det = determinant(&gram_of(alg, &basis)).unwrap();
    let expect = {
        let num = &(&ExactScalar::from_int(3).pow(52) * &ExactScalar::from_int(11))
            * &ExactScalar::from_int(13).pow(6);
        let den = &ExactScalar::from_int(2).pow(138) * &ExactScalar::from_int(5).pow(3);
        &num / &den
    };
    checks.push(Check::compare(
        "family.18.gram",
        "Gram determinant of the 18-vector basis omitting the dependent class vector",
        expect,
        det,
    ));
    // ternary relation: sum of class vectors = 32/45 sum of grid axes
    let mut lhs = Element::zeros(18);
    for u in &b.config.class_vectors {
        lhs.add_scaled(&ExactScalar::one(), u);
    }
    let mut rhs = Element::zeros(18);
    for a in &b.config.axes {
        rhs.add_scaled(&q(32, 45), a);
    }
    checks.push(Check::boolean(
        "family.18.ternary",
        "class vectors sum to 32/45 of the grid axis sum",
        lhs == rhs,
    ));
    // class vector identities
    let e = |l: &str| alg.basis_element(alg.index_of_label(l).unwrap());
    let u3 = &b.config.class_vectors[2];
    let u4 = &b.config.class_vectors[3];
    checks.push(Check::boolean(
        "family.18.classvectors",
        "diagonal class vectors arise from their grid pairs",
        &u_vector(alg, &e("a.x"), &e("b.y")).unwrap() == u3
            && &u_vector(alg, &e("a.x"), &e("b.z")).unwrap() == u4,
    ));
    let mut orth = true;
    for (i, u) in b.config.class_vectors.iter().enumerate() {
        for v in b.config.class_vectors.iter().skip(i + 1) {
            if !alg.form(u, v).is_zero() || !alg.mul(u, v).is_zero() {
                orth = false;
            }
        }
    }
    checks.push(Check::boolean(
        "family.18.orthogonal",
        "the four class vectors are mutually orthogonal",
        orth,
    ));
    // tau conjugacy between the diagonal class vectors
    let mut conj = true;
    for l in ["a", "b", "c", "x", "y", "z"] {
        if &tau_image(alg, &e(l), u3).unwrap() != u4 {
            conj = false;
        }
    }
    checks.push(Check::boolean(
        "family.18.tauclass",
        "generator involutions swap the diagonal class vectors",
        conj,
    ));
    // inner products of generators against the diagonal class vectors
    let mut vals = true;
    for l in ["a", "b", "c", "x", "y", "z"] {
        if alg.form(&e(l), u3) != q(1, 80) || alg.form(&e(l), u4) != q(1, 80) {
            vals = false;
        }
    }
    checks.push(Check::boolean(
        "family.18.classinner",
        "generators pair to 1/80 with the diagonal class vectors",
        vals,
    ));
    // (a | x y) over a 3A tail pair, and the double-product identity
    checks.push(Check::compare(
        "family.18.axy",
        "ground axis against the product of a 3A tail pair",
        q(5, 512),
        alg.form(&e("a"), &alg.mul(&e("x"), &e("y"))),
    ));
    let lhs = alg.form(&e("x"), &alg.mul(&e("a"), &alg.mul(&e("b"), &e("y"))));
    let rhs = &q(1, 128)
        * &(&(&(&(&(&q(7, 1) * &alg.form(&e("x"), &e("y")))
            - &(&q(7, 1) * &alg.form(&e("x"), &e("a.y"))))
            - &alg.form(&e("x"), &e("b.y")))
            + &alg.form(&e("x"), &e("c.y")))
            + &q(19, 32));
    checks.push(Check::boolean(
        "family.18.doubleproduct",
        "double-product inner identity holds in the 18-dimensional algebra",
        lhs == rhs,
    ));
    // sigma-decomposition residuals for the diagonal class vectors: the
    // stored products agree with the universal axis decomposition route
    let mut sigma_ok = true;
    for l in ["a", "b", "c", "x", "y", "z"] {
        let axis = e(l);
        for u in [u3, u4] {
            let tau_u = tau_image(alg, &axis, u).unwrap();
            let sig = sigma_image(alg, &axis, &u.add(&tau_u)).unwrap();
            let mut rhs = axis.scale(&(&ExactScalar::from_int(8) * &alg.form(&axis, u)));
            rhs.add_scaled(&q(5, 32), u);
            rhs.add_scaled(&q(3, 32), &tau_u);
            rhs.add_scaled(&q(-1, 8), &sig);
            if alg.mul(&axis, u) != rhs {
                sigma_ok = false;
            }
        }
    }
    checks.push(Check::boolean(
        "family.18.classproducts",
        "class-vector products agree with the axis decomposition route",
        sigma_ok,
    ));
    checks
}

fn family_relation_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in [2usize, 3, 5] {
        let f = build_xn(n).unwrap();
        let all_zero = frame_relations_check(&f)
            .into_iter()
            .all(|(_, r)| r.is_zero());
        checks.push(Check::boolean(
            format!("family.frame.x{n}"),
            format!("frame relations hold at stage {n}"),
            all_zero,
        ));
    }
    let f = build_xn(3).unwrap();
    let part = f.matsuo_part().unwrap();
    checks.push(Check::compare(
        "family.matsuo.dim",
        "dimension of the stage-3 tail axis span",
        6,
        part.dim(),
    ));
    checks
}

// ----------------------------------------------------------------- groups

fn group_order_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let cat = make_2a();
    let (a, b) = cat.generators();
    let s = close_axes(&cat.algebra, &[a, b], FlavorRule::SigmaOnly, 100).unwrap();
    let image = permutation_image(&cat.algebra, &s).unwrap();
    checks.push(Check::compare(
        "groups.order.2A",
        "order of the 2A sigma group",
        6,
        image.group.order(),
    ));
    let cat = make_6a();
    let alg = &cat.algebra;
    let s = close_axes(
        alg,
        &[cat.named("e0").clone(), cat.named("e1").clone()],
        FlavorRule::Auto,
        100,
    )
    .unwrap();
    let tau_a = miyamoto_tau(alg, cat.named("e0")).unwrap();
    let tau_b = miyamoto_tau(alg, cat.named("e1")).unwrap();
    let sigma_x = miyamoto_sigma(alg, cat.named("x")).unwrap();
    let group = group_from_matrices(
        &s,
        &[tau_a.matrix.mat_mul(&sigma_x.matrix), tau_b.matrix],
    )
    .unwrap();
    checks.push(Check::compare(
        "groups.order.6A",
        "order of the 6A group generated by the stated pair",
        12,
        group.order(),
    ));
    for n in 1..=6usize {
        let f = build_xn(n).unwrap();
        let s = close_axes(&f.algebra, &f.tail_axes(), FlavorRule::SigmaOnly, 1000).unwrap();
        let matrices: Vec<Matrix> = s.maps.iter().map(|m| m.matrix.clone()).collect();
        let mut elements = s.axes.clone();
        elements.push(f.ground(0));
        let elements = orbit_closure(&matrices, &elements, 1000).unwrap();
        let group = perm_group_on(&matrices, &elements).unwrap();
        let fact: u128 = (1..=(n as u128 + 1)).product();
        checks.push(Check::compare(
            format!("groups.order.matsuo{n}"),
            format!("order of the sigma group of the stage-{n} tail axis set"),
            fact,
            group.order(),
        ));
    }
    checks
}

fn pair_order_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    // tau product orders: at most 2 over 2A/2B pairs, exactly 3 over 3A
    // pairs and over adjacent 6A pairs at this algebra level
    let cat = make_2a();
    let (a, b) = cat.generators();
    let s = close_axes(&cat.algebra, &[a, b], FlavorRule::TauOnly, 100).unwrap();
    let ok = product_order_table(&s)
        .unwrap()
        .into_iter()
        .all(|(_, _, o)| o <= 2);
    checks.push(Check::boolean(
        "groups.pairorder.2A",
        "tau pair orders divide two on the 2A algebra",
        ok,
    ));
    let cat = make_2b();
    let (a, b) = cat.generators();
    let s = close_axes(&cat.algebra, &[a, b], FlavorRule::TauOnly, 100).unwrap();
    let ok = product_order_table(&s)
        .unwrap()
        .into_iter()
        .all(|(_, _, o)| o <= 2);
    checks.push(Check::boolean(
        "groups.pairorder.2B",
        "tau pair orders divide two on the 2B algebra",
        ok,
    ));
    let cat = make_3a();
    let (a, b) = cat.generators();
    let s = close_axes(&cat.algebra, &[a, b], FlavorRule::TauOnly, 100).unwrap();
    let ok = product_order_table(&s)
        .unwrap()
        .into_iter()
        .all(|(_, _, o)| o == 3);
    checks.push(Check::boolean(
        "groups.pairorder.3A",
        "tau pair orders are exactly three on the 3A algebra",
        ok,
    ));
    let cat = make_6a();
    let t0 = miyamoto_tau(&cat.algebra, cat.named("e0")).unwrap();
    let t1 = miyamoto_tau(&cat.algebra, cat.named("e1")).unwrap();
    checks.push(Check::compare(
        "groups.pairorder.6A",
        "tau pair order of the 6A generators at algebra level",
        3,
        matrix_order(&t0.matrix.mat_mul(&t1.matrix)).unwrap(),
    ));
    checks
}

fn verdict_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=6usize {
        let f = build_xn(n).unwrap();
        let s = close_axes(&f.algebra, &f.tail_axes(), FlavorRule::SigmaOnly, 1000).unwrap();
        let verdict = three_transposition_verdict(&f.algebra, &s).unwrap();
        checks.push(Check::boolean(
            format!("groups.verdict.matsuo{n}"),
            format!("3-transposition verdict on the stage-{n} tail axis set"),
            verdict.is_three_transposition,
        ));
    }
    // tau involutions of an axis triple inside the 6A algebra
    let cat = make_6a();
    let triple: Vec<Element> = ["e0", "e2", "e4"]
        .iter()
        .map(|l| cat.named(l).clone())
        .collect();
    let s = close_axes(&cat.algebra, &triple, FlavorRule::TauOnly, 100).unwrap();
    let verdict = three_transposition_verdict(&cat.algebra, &s).unwrap();
    checks.push(Check::boolean(
        "groups.verdict.6Atriple",
        "3-transposition verdict on a parity triple of the 6A algebra",
        verdict.is_three_transposition && verdict.order_histogram == vec![(3, 3)],
    ));
    checks
}

// ---------------------------------------------------------------- lattice

fn lattice_oracle_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut types = vec![RootType::D(4)];
    for n in 1..=8 {
        types.push(RootType::A(n));
    }
    for t in types {
        let built = LatticeGriess::new(t);
        checks.push(Check::boolean(
            format!("lattice.oracle.{t}"),
            format!("axis-pair oracle holds on all root pairs of {t}"),
            built.is_ok(),
        ));
        if let Ok(lg) = built {
            let st = s_t_decomposition(&lg).unwrap();
            checks.push(Check::compare(
                format!("lattice.tcharge.{t}"),
                format!("central charge of the complement vector of {t}"),
                expected_t_charge(t),
                st.t.central_charge,
            ));
        }
    }
    checks
}

fn eta_frame_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let lg = LatticeGriess::new(RootType::A(5)).unwrap();
    let etas = eta_frame(&lg).unwrap();
    for (k, eta) in etas.iter().enumerate() {
        checks.push(Check::compare(
            format!("lattice.eta.{}", k + 1),
            format!("central charge of nested-chain frame vector {}", k + 1),
            virasoro::UnitaryCharge::new(k as u32 + 1).c,
            eta.central_charge.clone(),
        ));
    }
    let st = s_t_decomposition(&lg).unwrap();
    let mut sum = st.t.element.clone();
    for eta in &etas {
        sum.add_scaled(&ExactScalar::one(), &eta.element);
    }
    checks.push(Check::boolean(
        "lattice.eta.sum",
        "nested-chain frame with the complement vector sums to the conformal vector",
        sum == lg.conformal(),
    ));
    checks
}

fn e8_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let lg = match LatticeGriess::new(RootType::E8) {
        Ok(lg) => lg,
        Err(e) => {
            checks.push(Check::boolean(
                "lattice.oracle.E8",
                format!("axis-pair oracle holds on all root pairs of E8 ({e})"),
                false,
            ));
            return checks;
        }
    };
    checks.push(Check::boolean(
        "lattice.oracle.E8",
        "axis-pair oracle holds on all root pairs of E8",
        true,
    ));
    let st = s_t_decomposition(&lg).unwrap();
    checks.push(Check::compare(
        "lattice.tcharge.E8",
        "central charge of the complement vector of E8",
        q(1, 2),
        st.t.central_charge.clone(),
    ));
    checks.push(Check::boolean(
        "lattice.e8.standard",
        "the standard complement vector of E8 is an axis",
        is_ising(&lg, &st.t.element),
    ));
    match full_scan(&lg) {
        Ok(report) => {
            checks.push(Check::compare(
                "lattice.e8.count",
                "number of enumerated axis candidates",
                496,
                report.count,
            ));
            checks.push(Check::boolean(
                "lattice.e8.ising",
                "every enumerated candidate is an axis",
                report.all_ising,
            ));
            checks.push(Check::boolean(
                "lattice.e8.distinct",
                "the enumerated axes are pairwise distinct",
                report.all_distinct,
            ));
            checks.push(Check::boolean(
                "lattice.e8.values",
                "pairwise scaled inner products lie in the dihedral table set",
                report.values_in_table,
            ));
        }
        Err(e) => checks.push(Check::boolean(
            "lattice.e8.scan",
            format!("full enumeration scan ({e})"),
            false,
        )),
    }
    checks
}

fn axis_span_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for (t, dim) in [
        (RootType::A(2), 3usize),
        (RootType::A(3), 6),
        (RootType::D(4), 12),
    ] {
        let lg = LatticeGriess::new(t).unwrap();
        let span = griess_lattice::axis_span_algebra(&lg).unwrap();
        checks.push(Check::compare(
            format!("lattice.span.{t}.dim"),
            format!("dimension of the axis span of {t}"),
            dim,
            span.subalgebra.dim(),
        ));
        let st = s_t_decomposition(&lg).unwrap();
        checks.push(Check::boolean(
            format!("lattice.span.{t}.conformal"),
            format!("the axis-sum vector is the conformal vector of the axis span of {t}"),
            span.conformal.element == st.s.element,
        ));
        let kills = (0..lg.xdim()).all(|k| lg.mul(&st.t.element, &lg.axis(k, -1)).is_zero());
        checks.push(Check::boolean(
            format!("lattice.span.{t}.commutant"),
            format!("the complement vector annihilates every axis of {t}"),
            kills,
        ));
    }
    checks
}

// ----------------------------------------------------------------- runner

pub const SUITES: [&str; 5] = ["catalog", "family", "groups", "lattice", "all"];

fn families_of(suite: &str) -> Vec<Family> {
    let catalog: Vec<Family> = vec![
        ("dihedral-table", dihedral_table_checks),
        ("catalog-charges", catalog_charge_checks),
        ("catalog-identities", catalog_identity_checks),
        ("catalog-involutions", catalog_involution_checks),
    ];
    let family: Vec<Family> = vec![
        ("family-charges", family_charge_checks),
        ("family-13", family_13_checks),
        ("family-18", family_18_checks),
        ("family-relations", family_relation_checks),
    ];
    let groups: Vec<Family> = vec![
        ("group-orders", group_order_checks),
        ("pair-orders", pair_order_checks),
        ("verdicts", verdict_checks),
    ];
    let lattice: Vec<Family> = vec![
        ("lattice-oracle", lattice_oracle_checks),
        ("eta-frame", eta_frame_checks),
        ("e8", e8_checks),
        ("axis-span", axis_span_checks),
    ];
    match suite {
        "catalog" => catalog,
        "family" => family,
        "groups" => groups,
        "lattice" => lattice,
        "all" => {
            let mut v = catalog;
            v.extend(family);
            v.extend(groups);
            v.extend(lattice);
            v
        }
        _ => Vec::new(),
    }
}

/// Execute a suite. Families run in a pool of the configured size;
/// the report lists checks in declaration order regardless.
pub fn run_suite(suite: &str, jobs: usize) -> Option<VerificationReport> {
    if !SUITES.contains(&suite) {
        return None;
    }
    let families = families_of(suite);
    let start = Instant::now();
    let results: Vec<Vec<Check>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            families.par_iter().map(|(_, f)| f()).collect()
        })
    } else {
        families.iter().map(|(_, f)| f()).collect()
    };
    let checks: Vec<Check> = results.into_iter().flatten().collect();
    Some(VerificationReport::new(
        suite,
        checks,
        start.elapsed().as_millis(),
    ))
}
