//! The algebra family against its published invariants: conformal charges,
//! frame charges, Gram determinants, the nine-point configuration, and the
//! displayed inner-product and frame identities.

use griess_core::*;
use griess_exact::{determinant, ExactScalar, Matrix};
use griess_models::*;

fn q(p: i64, den: i64) -> ExactScalar {
    ExactScalar::ratio(p, den)
}

fn qs(s: &str) -> ExactScalar {
    s.parse().unwrap()
}

fn gram_of(alg: &GriessAlgebra, vecs: &[Element]) -> Matrix {
    Matrix::from_fn(vecs.len(), vecs.len(), |i, j| alg.form(&vecs[i], &vecs[j]))
}

#[test]
fn conformal_charges_follow_the_closed_form() {
    for n in 0..=6 {
        let f = build_xn(n).unwrap();
        let omega = f.omega_virasoro(n).unwrap();
        assert_eq!(omega.central_charge, omega_charge(n), "n = {n}");
        // closed form against the Gram-system solver on the full basis
        let basis: Vec<Element> = (0..f.dim()).map(|i| f.algebra.basis_element(i)).collect();
        let solved = conformal_vector(&f.algebra, &basis).unwrap();
        assert_eq!(solved.element, omega.element, "n = {n}");
    }
}

#[test]
fn stagewise_conformal_vectors_match_subalgebra_solver() {
    let f = build_xn(3).unwrap();
    for k in 0..=3 {
        // generating the stage from the ground pair and tail axes closes
        // onto the span of the stage basis
        let mut gens = vec![f.ground(0), f.ground(1)];
        for i in 1..=k {
            gens.push(f.x(i));
        }
        let sub = close_subalgebra(&f.algebra, &gens).unwrap();
        let stage = f.stage_basis(k);
        assert_eq!(sub.dim(), stage.len(), "stage {k}");
        for t in &stage {
            assert!(sub.coordinates(t).is_some(), "stage {k}");
        }
        let solved = conformal_vector(&f.algebra, &stage).unwrap();
        assert_eq!(solved.element, f.omega(k), "stage {k}");
        assert_eq!(solved.central_charge, omega_charge(k));
    }
}

#[test]
fn frame_vectors_have_series_charges_and_split_orthogonally() {
    let f = build_xn(5).unwrap();
    let alg = &f.algebra;
    let u = f.u();
    let v = f.v_ab();
    let mut frame = vec![u.clone(), v.clone()];
    for k in 1..=5 {
        frame.push(f.frame_vector(k));
    }
    // charges: 4/5, 6/7, then c_{k+4}
    assert_eq!(central_charge(alg, &frame[0]), q(4, 5));
    assert_eq!(central_charge(alg, &frame[1]), q(6, 7));
    for k in 1..=5usize {
        let fk = &frame[k + 1];
        assert!(is_virasoro(alg, fk), "f^{k}");
        assert_eq!(
            central_charge(alg, fk),
            virasoro::UnitaryCharge::new(k as u32 + 4).c,
            "f^{k}"
        );
        // f^k = omega^k - omega^{k-1} is orthogonal to omega^{k-1}
        let prev = f.omega(k - 1);
        assert!(alg.form(fk, &prev).is_zero());
        assert!(alg.mul(fk, &prev).is_zero());
    }
    // the whole frame is pairwise orthogonal and sums to the conformal vector
    let mut sum = Element::zeros(f.dim());
    for (i, p) in frame.iter().enumerate() {
        sum.add_scaled(&ExactScalar::one(), p);
        for r in frame.iter().skip(i + 1) {
            assert!(alg.form(p, r).is_zero());
            assert!(alg.mul(p, r).is_zero());
        }
    }
    assert_eq!(sum, f.omega(5));
}

#[test]
fn thirteen_dimensional_build() {
    let b = build_abxy_2a().unwrap();
    let f = &b.family;
    let alg = &f.algebra;
    assert_eq!(f.dim(), 13);
    // conformal charge 52/15
    assert_eq!(f.omega_virasoro(2).unwrap().central_charge, q(52, 15));
    // the displayed conformal vector: 1/6 u + 16/27 (nine axes) + 4/9 (x+y+z)
    let mut eta = f.u().scale(&q(1, 6));
    for g in 0..3 {
        eta.add_scaled(&q(16, 27), &f.ground(g));
        eta.add_scaled(&q(16, 27), &f.ground_x(g, 1));
        eta.add_scaled(&q(16, 27), &f.ground_x(g, 2));
    }
    eta.add_scaled(&q(4, 9), &f.x(1));
    eta.add_scaled(&q(4, 9), &f.x(2));
    eta.add_scaled(&q(4, 9), &f.xx(1, 2));
    assert_eq!(eta, f.omega(2));
    // the distinguished commutant generator: charge 11/12, from the
    // displayed closed form, and equal to the stage-two frame vector
    let mut want = f.u().scale(&q(-5, 24));
    for g in 0..3 {
        want.add_scaled(&q(-2, 27), &f.ground(g));
        want.add_scaled(&q(-2, 27), &f.ground_x(g, 1));
        want.add_scaled(&q(16, 27), &f.ground_x(g, 2));
    }
    want.add_scaled(&q(-1, 18), &f.x(1));
    want.add_scaled(&q(4, 9), &f.x(2));
    want.add_scaled(&q(4, 9), &f.xx(1, 2));
    assert_eq!(b.f, want);
    assert_eq!(central_charge(alg, &b.f), q(11, 12));
    // f annihilates the first-stage 6A subalgebra frame
    assert!(alg.mul(&b.f, &f.u()).is_zero());
    assert!(alg.mul(&b.f, &f.omega(1)).is_zero());
    assert!(alg.form(&b.f, &f.omega(1)).is_zero());
    // Gram determinant of the 13-vector basis: 3^25 11^5 / (2^81 5)
    let basis: Vec<Element> = (0..13).map(|i| alg.basis_element(i)).collect();
    let det = determinant(&gram_of(alg, &basis)).unwrap();
    let reference = {
        let three25 = ExactScalar::from_int(3).pow(25);
        let eleven5 = ExactScalar::from_int(11).pow(5);
        let denom = &ExactScalar::from_int(2).pow(81) * &ExactScalar::from_int(5);
        &(&three25 * &eleven5) / &denom
    };
    assert_eq!(det, reference);
    // the same value as a literal exact-scalar string
    assert_eq!(det, qs("136456677839404593/12089258196146291747061760"));
}

#[test]
fn eighteen_dimensional_build() {
    let b = build_abxy_3a().unwrap();
    let alg = &b.algebra;
    assert_eq!(alg.dim(), 18);
    let basis: Vec<Element> = (0..18).map(|i| alg.basis_element(i)).collect();
    // conformal vector of the displayed closed form with charge 228/55
    let eta = conformal_vector(alg, &basis).unwrap();
    assert_eq!(eta.central_charge, q(228, 55));
    let mut want = Element::zeros(18);
    want.add_scaled(&q(17, 22), &b.config.class_vectors[0]);
    want.add_scaled(&q(17, 22), &b.config.class_vectors[1]);
    want.add_scaled(&q(10, 11), &b.config.class_vectors[2]);
    want.add_scaled(&q(10, 11), &b.config.class_vectors[3]);
    for l in ["a", "b", "c", "x", "y", "z"] {
        let i = alg.index_of_label(l).unwrap();
        want.add_scaled(&q(16, 33), &alg.basis_element(i));
    }
    assert_eq!(eta.element, want);
    // xi: Virasoro of charge 52/55, orthogonal to the grid frame sum
    assert!(is_virasoro(alg, &b.xi));
    assert_eq!(central_charge(alg, &b.xi), q(52, 55));
    let frame_sum: Element = {
        let mut s = Element::zeros(18);
        for v in &b.config.class_vectors {
            s.add_scaled(&ExactScalar::one(), v);
        }
        s
    };
    assert!(alg.form(&b.xi, &frame_sum).is_zero());
    assert!(alg.mul(&b.xi, &frame_sum).is_zero());
    assert_eq!(eta.element, b.xi.add(&frame_sum));
    // Gram determinant of the 18 basis vectors (the spanning set minus the
    // fourth class vector): 3^52 11 13^6 / (2^138 5^3)
    let det = determinant(&gram_of(alg, &basis)).unwrap();
    let reference = {
        let n = &(&ExactScalar::from_int(3).pow(52) * &ExactScalar::from_int(11))
            * &ExactScalar::from_int(13).pow(6);
        let d = &ExactScalar::from_int(2).pow(138) * &ExactScalar::from_int(5).pow(3);
        &n / &d
    };
    assert_eq!(det, reference);
}

#[test]
fn nine_point_configuration() {
    let b = build_abxy_3a().unwrap();
    let alg = &b.algebra;
    let cfg = &b.config;
    // each of the twelve lines is a 3A triple sharing its class vector
    for (class, lines) in cfg.lines.iter().enumerate() {
        for line in lines {
            let p = &cfg.axes[line[0]];
            let r = &cfg.axes[line[1]];
            let t = &cfg.axes[line[2]];
            assert_eq!(alg.form(p, r), q(13, 1024));
            assert_eq!(
                classify_pair(alg, p, r).unwrap(),
                DihedralTypeName::ThreeA
            );
            let u = u_vector(alg, p, r).unwrap();
            assert_eq!(u, cfg.class_vectors[class], "class {class}");
            // the third point is the tau image
            assert_eq!(&tau_image(alg, p, r).unwrap(), t);
        }
    }
    // class vectors are Virasoro of charge 4/5 and mutually orthogonal
    for (i, u) in cfg.class_vectors.iter().enumerate() {
        assert!(is_virasoro(alg, u));
        assert_eq!(central_charge(alg, u), q(4, 5));
        for v in cfg.class_vectors.iter().skip(i + 1) {
            assert!(alg.form(u, v).is_zero());
            assert!(alg.mul(u, v).is_zero());
        }
    }
    // ternary relation: u1 + u2 + u3 + u4 = 32/45 (sum of the nine axes)
    let mut lhs = Element::zeros(18);
    for u in &cfg.class_vectors {
        lhs.add_scaled(&ExactScalar::one(), u);
    }
    let mut rhs = Element::zeros(18);
    for a in &cfg.axes {
        rhs.add_scaled(&q(32, 45), a);
    }
    assert_eq!(lhs, rhs);
    // the closure of the nine axes is 12-dimensional with conformal vector
    // the sum of the four class vectors
    let sub = close_subalgebra(alg, &cfg.axes).unwrap();
    assert_eq!(sub.dim(), 12);
    let mut spanning = cfg.axes.clone();
    spanning.extend(cfg.class_vectors[..3].iter().cloned());
    let omega = conformal_vector(alg, &spanning).unwrap();
    assert_eq!(omega.element, lhs);
    assert_eq!(omega.central_charge, q(16, 5));
}

#[test]
fn tau_conjugacy_between_diagonal_class_vectors() {
    let b = build_abxy_3a().unwrap();
    let alg = &b.algebra;
    let u3 = &b.config.class_vectors[2];
    let u4 = &b.config.class_vectors[3];
    for l in ["a", "b", "c", "x", "y", "z"] {
        let e = alg.basis_element(alg.index_of_label(l).unwrap());
        assert_eq!(&tau_image(alg, &e, u3).unwrap(), u4, "tau_{l}");
        assert_eq!(&tau_image(alg, &e, u4).unwrap(), u3, "tau_{l}");
    }
}

#[test]
fn displayed_inner_product_values() {
    // inside the 13-dimensional algebra: (a | x*y) = 2^-6 for the 2A tail
    let b = build_abxy_2a().unwrap();
    let f = &b.family;
    let alg = &f.algebra;
    let (a, x, y) = (f.ground(0), f.x(1), f.x(2));
    assert_eq!(alg.form(&a, &alg.mul(&x, &y)), q(1, 64));
    // inside the 18-dimensional algebra: (a | x*y) = 5 * 2^-9 for a 3A tail
    let b = build_abxy_3a().unwrap();
    let alg = &b.algebra;
    let e = |l: &str| alg.basis_element(alg.index_of_label(l).unwrap());
    let (a, bb, x, y) = (e("a"), e("b"), e("x"), e("y"));
    assert_eq!(alg.form(&a, &alg.mul(&x, &y)), q(5, 512));
    // (a o x | b o y) = 13 * 2^-10
    assert_eq!(alg.form(&e("a.x"), &e("b.y")), q(13, 1024));
    // (e | u3) = (e | u4) = 1/80 for all six generators' axes
    for l in ["a", "b", "c", "x", "y", "z"] {
        assert_eq!(alg.form(&e(l), &b.config.class_vectors[2]), q(1, 80));
        assert_eq!(alg.form(&e(l), &b.config.class_vectors[3]), q(1, 80));
    }
    // the double-product identity:
    // (x | a*(b*y)) = 2^-7 (7(x|y) - 7(x|a o y) - (x|b o y) + (x|c o y) + 19/32)
    let lhs = alg.form(&x, &alg.mul(&a, &alg.mul(&bb, &y)));
    let rhs = &q(1, 128)
        * &(&(&(&(&(&q(7, 1) * &alg.form(&x, &y))
            - &(&q(7, 1) * &alg.form(&x, &e("a.y"))))
            - &alg.form(&x, &e("b.y")))
            + &alg.form(&x, &e("c.y")))
            + &q(19, 32));
    assert_eq!(lhs, rhs);
}

#[test]
fn class_vector_product_identities() {
    // the sigma-decomposition products of the diagonal class vectors,
    // checked against their defining pair formula u = u_{a o x, b o y}
    let b = build_abxy_3a().unwrap();
    let alg = &b.algebra;
    let e = |l: &str| alg.basis_element(alg.index_of_label(l).unwrap());
    let u3 = u_vector(alg, &e("a.x"), &e("b.y")).unwrap();
    assert_eq!(&u3, &b.config.class_vectors[2]);
    let u4 = u_vector(alg, &e("a.x"), &e("b.z")).unwrap();
    assert_eq!(&u4, &b.config.class_vectors[3]);
    // alternate pair representatives give the same class vectors
    assert_eq!(u_vector(alg, &e("a.y"), &e("b.z")).unwrap(), u3);
    assert_eq!(u_vector(alg, &e("a.z"), &e("b.x")).unwrap(), u3);
    assert_eq!(u_vector(alg, &e("a.y"), &e("b.x")).unwrap(), u4);
    assert_eq!(u_vector(alg, &e("a.z"), &e("b.y")).unwrap(), u4);
}

#[test]
fn frame_relation_residuals_vanish() {
    for n in [1, 2, 4] {
        let f = build_xn(n).unwrap();
        for (name, residual) in frame_relations_check(&f) {
            assert!(residual.is_zero(), "n = {n}: nonzero residual in {name}");
        }
    }
    // a u + a v = 2a
    let f = build_xn(2).unwrap();
    let a = f.ground(0);
    let sum = f.algebra.mul(&a, &f.u()).add(&f.algebra.mul(&a, &f.v_ab()));
    assert_eq!(sum, a.scale(&q(2, 1)));
}

#[test]
fn matsuo_part_shape() {
    for n in [2usize, 3, 4] {
        let f = build_xn(n).unwrap();
        let part = f.matsuo_part().unwrap();
        assert_eq!(part.dim(), n + n * (n - 1) / 2, "n = {n}");
    }
    // pair axes over disjoint index pairs are orthogonal with zero product
    let f = build_xn(4).unwrap();
    let alg = &f.algebra;
    let p = f.xx(1, 2);
    let r = f.xx(3, 4);
    assert!(alg.form(&p, &r).is_zero());
    assert!(alg.mul(&p, &r).is_zero());
    // third mutually-2A axis outside the pair span is orthogonal to the
    // circle output (no 2A-tetrahedron)
    let w = circle(alg, &f.x(1), &f.x(2)).unwrap();
    assert_eq!(w, f.xx(1, 2));
    assert!(alg.form(&w, &f.x(3)).is_zero());
}

#[test]
fn family_is_independent_of_axis_ordering() {
    // permuting the tail axes yields exactly the same structure constants
    // under the induced basis bijection
    let f = build_xn(3).unwrap();
    let alg = &f.algebra;
    let perm = [2usize, 3, 1]; // x1 -> x2, x2 -> x3, x3 -> x1
    let image = |e: &Element| -> Element {
        let mut out = Element::zeros(f.dim());
        for (i, c) in e.support() {
            let label = Algebra::basis_label(alg, i);
            let mapped = match label {
                "x1" | "x2" | "x3" => format!("x{}", perm[label[1..].parse::<usize>().unwrap() - 1]),
                l if l.contains(".x") => {
                    let (g, xi) = l.split_once(".x").unwrap();
                    if g.len() == 1 && ["a", "b", "c"].contains(&g) {
                        format!("{g}.x{}", perm[xi.parse::<usize>().unwrap() - 1])
                    } else {
                        // pair axis xj.xk
                        let j = g[1..].parse::<usize>().unwrap();
                        let k = xi.parse::<usize>().unwrap();
                        let (pj, pk) = (perm[j - 1], perm[k - 1]);
                        let (pj, pk) = if pj < pk { (pj, pk) } else { (pk, pj) };
                        format!("x{pj}.x{pk}")
                    }
                }
                l => l.to_string(),
            };
            out[alg.index_of_label(&mapped).unwrap()] = c.clone();
        }
        out
    };
    for i in 0..f.dim() {
        for j in i..f.dim() {
            let bi = alg.basis_element(i);
            let bj = alg.basis_element(j);
            assert_eq!(
                image(&alg.mul(&bi, &bj)),
                alg.mul(&image(&bi), &image(&bj))
            );
            assert_eq!(alg.form(&bi, &bj), alg.form(&image(&bi), &image(&bj)));
        }
    }
}

#[test]
fn dispatch_covers_the_four_admissible_types_and_rejects_the_rest() {
    assert_eq!(
        dispatch_abxy(DihedralTypeName::OneA).unwrap().algebra().dim(),
        8
    );
    assert_eq!(
        dispatch_abxy(DihedralTypeName::TwoA).unwrap().algebra().dim(),
        13
    );
    assert_eq!(
        dispatch_abxy(DihedralTypeName::ThreeA)
            .unwrap()
            .algebra()
            .dim(),
        18
    );
    // the 2B case generates the same algebra as the 2A case
    let two_b = dispatch_abxy(DihedralTypeName::TwoB).unwrap();
    let two_a = dispatch_abxy(DihedralTypeName::TwoA).unwrap();
    assert_eq!(two_b.algebra(), two_a.algebra());
    for t in [
        DihedralTypeName::ThreeC,
        DihedralTypeName::FourA,
        DihedralTypeName::FourB,
        DihedralTypeName::FiveA,
        DihedralTypeName::SixA,
    ] {
        assert!(matches!(
            dispatch_abxy(t),
            Err(BuildError::ForbiddenType(_))
        ));
    }
}

#[test]
fn resolution_log_covers_every_pair() {
    let f = build_xn(2).unwrap();
    assert_eq!(f.resolution_log.len(), 13 * 14 / 2);
}

#[test]
fn gram_matrices_stay_nonsingular_past_the_published_range() {
    // linear independence certificate where no closed determinant is
    // published: nonsingularity of the Gram matrix
    for n in [4usize, 5, 6] {
        let f = build_xn(n).unwrap();
        let basis: Vec<Element> = (0..f.dim()).map(|i| f.algebra.basis_element(i)).collect();
        let det = determinant(&gram_of(&f.algebra, &basis)).unwrap();
        assert!(!det.is_zero(), "n = {n}");
        assert!(det.is_positive(), "n = {n}");
    }
}
