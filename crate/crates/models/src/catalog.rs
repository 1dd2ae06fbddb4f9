//! Hard-coded constructors for the dihedral algebras with full structure
//! tables (2A, 2B, 3A, 6A), plus their derived distinguished elements.
//!
//! Basis orders are fixed so serialized forms are byte-stable:
//! 2A: (a, b, a.b); 2B: (a, b); 3A: (u, a, b, c); 6A: (u, x, e0..e5).

use griess_core::{
    conformal_vector, DihedralTypeName, Element, GriessAlgebra, GriessError, VirasoroVector,
};
use griess_exact::{ExactScalar, Matrix};

fn q(p: i64, den: i64) -> ExactScalar {
    ExactScalar::ratio(p, den)
}

/// A catalog algebra together with its named distinguished elements.
#[derive(Debug, Clone)]
pub struct CatalogAlgebra {
    pub name: DihedralTypeName,
    pub algebra: GriessAlgebra,
    distinguished: Vec<(String, Element)>,
}

impl CatalogAlgebra {
    pub fn named(&self, name: &str) -> &Element {
        self.distinguished
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
            .unwrap_or_else(|| panic!("no distinguished element named {name}"))
    }

    pub fn named_all(&self) -> &[(String, Element)] {
        &self.distinguished
    }

    /// The generating axes of the algebra.
    pub fn generators(&self) -> (Element, Element) {
        (self.named("a").clone(), self.named("b").clone())
    }
}

struct TableBuilder {
    dim: usize,
    table: Vec<Vec<Element>>,
    form: Matrix,
}

impl TableBuilder {
    fn new(dim: usize) -> Self {
        TableBuilder {
            dim,
            table: vec![vec![Element::zeros(dim); dim]; dim],
            form: Matrix::zeros(dim, dim),
        }
    }

    fn set(&mut self, i: usize, j: usize, coords: Vec<(usize, ExactScalar)>) {
        let mut e = Element::zeros(self.dim);
        for (k, c) in coords {
            e[k] += &c;
        }
        self.table[i][j] = e.clone();
        self.table[j][i] = e;
    }

    fn set_form(&mut self, i: usize, j: usize, v: ExactScalar) {
        self.form[(i, j)] = v.clone();
        self.form[(j, i)] = v;
    }

    fn build(self, labels: Vec<String>) -> Result<GriessAlgebra, GriessError> {
        GriessAlgebra::from_full_table(labels, 1, self.table, self.form)
    }
}

/// The 3-dimensional algebra of a 2A pair: three axes, any two of which
/// multiply to `(1/4)(p + q - r)` with `r` the remaining axis.
pub fn make_2a() -> CatalogAlgebra {
    let labels: Vec<String> = ["a", "b", "a.b"].map(String::from).to_vec();
    let mut t = TableBuilder::new(3);
    for i in 0..3 {
        t.set(i, i, vec![(i, q(2, 1))]);
        t.set_form(i, i, q(1, 4));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let k = 3 - i - j;
            t.set(i, j, vec![(i, q(1, 4)), (j, q(1, 4)), (k, q(-1, 4))]);
            t.set_form(i, j, q(1, 32));
        }
    }
    let algebra = t.build(labels).expect("2A table is consistent");
    let distinguished = vec![
        ("a".into(), Element::basis(3, 0)),
        ("b".into(), Element::basis(3, 1)),
        ("a.b".into(), Element::basis(3, 2)),
    ];
    CatalogAlgebra {
        name: DihedralTypeName::TwoA,
        algebra,
        distinguished,
    }
}

/// The 2-dimensional algebra of a 2B pair: two orthogonal axes with zero
/// product.
pub fn make_2b() -> CatalogAlgebra {
    let labels: Vec<String> = ["a", "b"].map(String::from).to_vec();
    let mut t = TableBuilder::new(2);
    for i in 0..2 {
        t.set(i, i, vec![(i, q(2, 1))]);
        t.set_form(i, i, q(1, 4));
    }
    t.set(0, 1, vec![]);
    t.set_form(0, 1, q(0, 1));
    let algebra = t.build(labels).expect("2B table is consistent");
    let distinguished = vec![
        ("a".into(), Element::basis(2, 0)),
        ("b".into(), Element::basis(2, 1)),
    ];
    CatalogAlgebra {
        name: DihedralTypeName::TwoB,
        algebra,
        distinguished,
    }
}

/// The 4-dimensional algebra of a 3A pair on basis (u, a, b, c):
/// the characteristic 4/5-charge Virasoro vector and the axis triple.
pub fn make_3a() -> CatalogAlgebra {
    let labels: Vec<String> = ["u", "a", "b", "c"].map(String::from).to_vec();
    let mut t = TableBuilder::new(4);
    t.set(0, 0, vec![(0, q(2, 1))]);
    t.set_form(0, 0, q(2, 5));
    for g in 1..4 {
        t.set(g, g, vec![(g, q(2, 1))]);
        t.set_form(g, g, q(1, 4));
        let others: Vec<usize> = (1..4).filter(|&h| h != g).collect();
        t.set(
            0,
            g,
            vec![
                (0, q(5, 16)),
                (g, q(4, 9)),
                (others[0], q(-2, 9)),
                (others[1], q(-2, 9)),
            ],
        );
        t.set_form(0, g, q(1, 16));
    }
    for g in 1..4 {
        for h in g + 1..4 {
            let k = 6 - g - h;
            t.set(
                g,
                h,
                vec![
                    (0, q(-135, 1024)),
                    (g, q(1, 8)),
                    (h, q(1, 8)),
                    (k, q(1, 16)),
                ],
            );
            t.set_form(g, h, q(13, 1024));
        }
    }
    let algebra = t.build(labels).expect("3A table is consistent");
    let u = Element::basis(4, 0);
    let abc = Element::new(vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1)]);
    let mut v = u.scale(&q(-5, 14));
    v.add_scaled(&q(16, 21), &abc);
    let distinguished = vec![
        ("u".into(), u),
        ("a".into(), Element::basis(4, 1)),
        ("b".into(), Element::basis(4, 2)),
        ("c".into(), Element::basis(4, 3)),
        ("v".into(), v),
    ];
    CatalogAlgebra {
        name: DihedralTypeName::ThreeA,
        algebra,
        distinguished,
    }
}

/// Hexagon index (2 + (i mod 6)) into the 6A basis (u, x, e0..e5).
fn e6(i: i64) -> usize {
    2 + i.rem_euclid(6) as usize
}

/// The 8-dimensional algebra of a 6A pair on basis (u, x, e0..e5): the
/// characteristic 4/5-charge vector u, the central axis x, and the orbit
/// hexagon. All index pairs are filled in by the rotation symmetry of the
/// hexagon; generators are a = e0 and b = e1.
pub fn make_6a() -> CatalogAlgebra {
    let labels: Vec<String> = ["u", "x", "e0", "e1", "e2", "e3", "e4", "e5"]
        .map(String::from)
        .to_vec();
    let mut t = TableBuilder::new(8);
    // squares
    t.set(0, 0, vec![(0, q(2, 1))]);
    t.set(1, 1, vec![(1, q(2, 1))]);
    for i in 0..6 {
        t.set(e6(i), e6(i), vec![(e6(i), q(2, 1))]);
        t.set_form(e6(i), e6(i), q(1, 4));
    }
    // u and x are orthogonal with zero product
    t.set(0, 1, vec![]);
    t.set_form(0, 1, q(0, 1));
    t.set_form(0, 0, q(2, 5));
    t.set_form(1, 1, q(1, 4));
    for i in 0..6 {
        // u e^i: the axis triple {e^i, e^{i+2}, e^{i+4}} behaves as in the
        // 3A algebra with the shared characteristic vector u
        t.set(
            0,
            e6(i),
            vec![
                (0, q(5, 16)),
                (e6(i), q(4, 9)),
                (e6(i + 2), q(-2, 9)),
                (e6(i + 4), q(-2, 9)),
            ],
        );
        t.set_form(0, e6(i), q(1, 16));
        // x e^i: the 2A triple {x, e^i, e^{i+3}}
        t.set(
            1,
            e6(i),
            vec![(1, q(1, 4)), (e6(i), q(1, 4)), (e6(i + 3), q(-1, 4))],
        );
        t.set_form(1, e6(i), q(1, 32));
    }
    for i in 0..6i64 {
        for j in i + 1..6i64 {
            let d = (j - i).min(6 - (j - i));
            match d {
                1 => {
                    // adjacent pair: the generating 6A relation rotated around
                    // the hexagon
                    let mut coords = vec![(0, q(45, 1024)), (1, q(1, 32))];
                    for k in 0..6 {
                        let sign = if k == i || k == j { q(1, 32) } else { q(-1, 32) };
                        coords.push((e6(k), sign));
                    }
                    t.set(e6(i), e6(j), coords);
                    t.set_form(e6(i), e6(j), q(5, 1024));
                }
                2 => {
                    // axis-triple pair: 3A products with the shared u; the
                    // third member of the parity triple closes the formula
                    let third = ((i % 2) * 3 - i - j).rem_euclid(6);
                    t.set(
                        e6(i),
                        e6(j),
                        vec![
                            (0, q(-135, 1024)),
                            (e6(i), q(1, 8)),
                            (e6(j), q(1, 8)),
                            (e6(third), q(1, 16)),
                        ],
                    );
                    t.set_form(e6(i), e6(j), q(13, 1024));
                }
                _ => {
                    // antipodal pair: 2A triple through the central axis
                    t.set(
                        e6(i),
                        e6(j),
                        vec![(e6(i), q(1, 4)), (e6(j), q(1, 4)), (1, q(-1, 4))],
                    );
                    t.set_form(e6(i), e6(j), q(1, 32));
                }
            }
        }
    }
    let algebra = t.build(labels).expect("6A table is consistent");
    let mut distinguished = vec![
        ("u".into(), Element::basis(8, 0)),
        ("x".into(), Element::basis(8, 1)),
    ];
    for i in 0..6 {
        distinguished.push((format!("e{i}"), Element::basis(8, e6(i))));
    }
    // generators and their conjugates, in hexagon positions
    distinguished.push(("a".into(), Element::basis(8, e6(0))));
    distinguished.push(("b".into(), Element::basis(8, e6(1))));
    distinguished.push(("tau_a.b".into(), Element::basis(8, e6(5))));
    distinguished.push(("tau_b.a".into(), Element::basis(8, e6(2))));
    distinguished.push(("tau_a.tau_b.a".into(), Element::basis(8, e6(4))));
    distinguished.push(("tau_b.tau_a.b".into(), Element::basis(8, e6(3))));
    CatalogAlgebra {
        name: DihedralTypeName::SixA,
        algebra,
        distinguished,
    }
}

pub fn make_catalog(name: DihedralTypeName) -> Option<CatalogAlgebra> {
    match name {
        DihedralTypeName::TwoA => Some(make_2a()),
        DihedralTypeName::TwoB => Some(make_2b()),
        DihedralTypeName::ThreeA => Some(make_3a()),
        DihedralTypeName::SixA => Some(make_6a()),
        _ => None,
    }
}

/// The orthogonal Virasoro triple of the 6A algebra with charges
/// (4/5, 6/7, 25/28): u, the 6/7-vector of the even axis triple, and the
/// generator of the commutant of that triple's subalgebra. Their sum is the
/// conformal vector.
pub fn frame_6a(cat: &CatalogAlgebra) -> (VirasoroVector, VirasoroVector, VirasoroVector) {
    assert_eq!(cat.name, DihedralTypeName::SixA);
    let alg = &cat.algebra;
    let u = cat.named("u").clone();
    let x = cat.named("x");
    let even = Element::combine(
        8,
        &[
            (q(1, 1), cat.named("e0")),
            (q(1, 1), cat.named("e2")),
            (q(1, 1), cat.named("e4")),
        ],
    );
    let odd = Element::combine(
        8,
        &[
            (q(1, 1), cat.named("e1")),
            (q(1, 1), cat.named("e3")),
            (q(1, 1), cat.named("e5")),
        ],
    );
    let mut v = u.scale(&q(-5, 14));
    v.add_scaled(&q(16, 21), &even);
    let mut f = u.scale(&q(-15, 56));
    f.add_scaled(&q(1, 2), x);
    f.add_scaled(&q(-2, 21), &even);
    f.add_scaled(&q(2, 3), &odd);
    let u = VirasoroVector::new(alg, u).expect("u is Virasoro");
    let v = VirasoroVector::new(alg, v).expect("v is Virasoro");
    let f = VirasoroVector::new(alg, f).expect("f is Virasoro");
    (u, v, f)
}

/// Conformal vector of a catalog algebra via the Gram-system solver over
/// the full basis.
pub fn catalog_conformal(cat: &CatalogAlgebra) -> VirasoroVector {
    let basis: Vec<Element> = (0..griess_core::Algebra::dim(&cat.algebra))
        .map(|i| griess_core::Algebra::basis_element(&cat.algebra, i))
        .collect();
    conformal_vector(&cat.algebra, &basis).expect("catalog algebras have conformal vectors")
}

/// Exact residuals of the two displayed double-product identities of the 6A
/// algebra, in the labeling where (a, b, c) is the even axis triple and x is
/// central, transported around the hexagon. All residuals must be zero.
pub fn lemma_2_14_identities(cat: &CatalogAlgebra) -> Vec<(String, Element)> {
    assert_eq!(cat.name, DihedralTypeName::SixA);
    let alg = &cat.algebra;
    let mut out = Vec::new();
    for r in 0..6i64 {
        // relabeled triple: a = e^r, b = e^{r+2}, c = e^{r+4};
        // partner triple: a.x = e^{r+3}, b.x = e^{r+5}, c.x = e^{r+1}
        let u = Element::basis(8, 0);
        let x = Element::basis(8, 1);
        let a = Element::basis(8, e6(r));
        let b = Element::basis(8, e6(r + 2));
        let c = Element::basis(8, e6(r + 4));
        let ax = Element::basis(8, e6(r + 3));
        let bx = Element::basis(8, e6(r + 5));
        let cx = Element::basis(8, e6(r + 1));

        // a (b x) = -45/2^10 u + 2^-7 (7x + 11a + 5b + 3c - 7 a.x - b.x + c.x)
        let lhs = alg.mul(&a, &alg.mul(&b, &x));
        let rhs = Element::combine(
            8,
            &[
                (q(-45, 1024), &u),
                (q(7, 128), &x),
                (q(11, 128), &a),
                (q(5, 128), &b),
                (q(3, 128), &c),
                (q(-7, 128), &ax),
                (q(-1, 128), &bx),
                (q(1, 128), &cx),
            ],
        );
        out.push((format!("double-product identity, rotation {r}"), lhs.sub(&rhs)));

        // sigma_a (b.x + c.x) = -45/2^7 u - 1/4 x + 1/16 a + 1/4 a.x
        //                        + 1/4 (b + c) + b.x + c.x
        let lhs = griess_core::sigma_image(alg, &a, &bx.add(&cx))
            .expect("b.x + c.x is tau_a-fixed");
        let rhs = Element::combine(
            8,
            &[
                (q(-45, 128), &u),
                (q(-1, 4), &x),
                (q(1, 16), &a),
                (q(1, 4), &ax),
                (q(1, 4), &b),
                (q(1, 4), &c),
                (q(1, 1), &bx),
                (q(1, 1), &cx),
            ],
        );
        out.push((format!("sigma-image identity, rotation {r}"), lhs.sub(&rhs)));
    }
    out
}

use griess_core::Algebra;
