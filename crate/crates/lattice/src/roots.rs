//! Explicit root systems of the simply laced types, generated by
//! reflection closure from simple roots in ambient rational coordinates.

use griess_exact::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl std::fmt::Display for RootType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootType::A(n) => write!(f, "A{n}"),
            RootType::D(n) => write!(f, "D{n}"),
            RootType::E6 => write!(f, "E6"),
            RootType::E7 => write!(f, "E7"),
            RootType::E8 => write!(f, "E8"),
        }
    }
}

impl RootType {
    pub fn parse(s: &str) -> Option<RootType> {
        let s = s.trim().to_ascii_uppercase();
        match s.as_str() {
            "E6" => return Some(RootType::E6),
            "E7" => return Some(RootType::E7),
            "E8" => return Some(RootType::E8),
            _ => {}
        }
        let (head, tail) = s.split_at(1);
        let n: usize = tail.parse().ok()?;
        match head {
            "A" if n >= 1 => Some(RootType::A(n)),
            "D" if n >= 3 => Some(RootType::D(n)),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            RootType::A(n) | RootType::D(n) => *n,
            RootType::E6 => 6,
            RootType::E7 => 7,
            RootType::E8 => 8,
        }
    }

    pub fn root_count(&self) -> usize {
        match self {
            RootType::A(n) => n * (n + 1),
            RootType::D(n) => 2 * n * (n - 1),
            RootType::E6 => 72,
            RootType::E7 => 126,
            RootType::E8 => 240,
        }
    }
}

pub type Vector = Vec<ExactScalar>;

pub fn dot(u: &[ExactScalar], v: &[ExactScalar]) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

fn lex_positive(v: &[ExactScalar]) -> bool {
    v.iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .unwrap_or(false)
}

fn negate(v: &[ExactScalar]) -> Vector {
    v.iter().map(|c| -c).collect()
}

/// A root system with its canonical positive representatives: each +-pair
/// of roots is represented by its lexicographically positive member.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub rtype: RootType,
    pub ambient_dim: usize,
    /// Simple roots in ambient coordinates.
    pub simple: Vec<Vector>,
    /// Canonical representatives, one per +-pair; sorted for determinism.
    pub positive: Vec<Vector>,
    /// positive[k] expanded over the simple roots (integer coordinates,
    /// stored exactly).
    pub simple_coords: Vec<Vector>,
    pub coxeter: usize,
}

fn simple_roots(rtype: RootType) -> (usize, Vec<Vector>) {
    let one = || ExactScalar::one();
    let zero = ExactScalar::zero;
    let half = || ExactScalar::ratio(1, 2);
    let unit = |dim: usize, i: usize, sign: i64| -> Vector {
        let mut v = vec![zero(); dim];
        v[i] = ExactScalar::from_int(sign);
        v
    };
    let diff = |dim: usize, i: usize, j: usize| -> Vector {
        let mut v = vec![zero(); dim];
        v[i] = one();
        v[j] = -one();
        v
    };
    match rtype {
        RootType::A(n) => {
            let dim = n + 1;
            ((dim), (0..n).map(|i| diff(dim, i, i + 1)).collect())
        }
        RootType::D(n) => {
            let mut s: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = unit(n, n - 2, 1);
            last[n - 1] = one();
            s.push(last);
            (n, s)
        }
        RootType::E6 | RootType::E7 | RootType::E8 => {
            // the eight standard simple roots; E7 and E6 take prefixes
            let dim = 8;
            let mut a1 = vec![half(); 8];
            for i in 1..7 {
                a1[i] = -half();
            }
            let mut a2 = vec![zero(); 8];
            a2[0] = one();
            a2[1] = one();
            let mut s = vec![a1, a2];
            for i in 1..7 {
                // e_{i+1} - e_i
                let mut v = vec![zero(); 8];
                v[i] = one();
                v[i - 1] = -one();
                s.push(v);
            }
            let take = match rtype {
                RootType::E6 => 6,
                RootType::E7 => 7,
                _ => 8,
            };
            s.truncate(take);
            (dim, s)
        }
    }
}

impl RootSystemData {
    pub fn new(rtype: RootType) -> Self {
        let (ambient_dim, simple) = simple_roots(rtype);
        // reflection closure of the simple roots
        let mut roots: Vec<Vector> = simple.clone();
        let mut next = 0;
        while next < roots.len() {
            for s in &simple {
                // s_alpha(beta) = beta - (beta|alpha) alpha  for norm-2 roots
                let c = dot(&roots[next], s);
                if c.is_zero() {
                    continue;
                }
                let image: Vector = roots[next]
                    .iter()
                    .zip(s)
                    .map(|(b, a)| b - &(&c * a))
                    .collect();
                if !roots.contains(&image) {
                    roots.push(image);
                }
            }
            next += 1;
        }
        assert_eq!(roots.len(), rtype.root_count(), "root count for {rtype}");
        let two = ExactScalar::from_int(2);
        for r in &roots {
            assert_eq!(dot(r, r), two, "root norm in {rtype}");
            assert!(roots.contains(&negate(r)), "negation closure in {rtype}");
        }
        let mut positive: Vec<Vector> = roots.into_iter().filter(|r| lex_positive(r)).collect();
        positive.sort_by_key(|v| v.iter().map(ExactScalar::to_string).collect::<Vec<_>>());
        // expand each representative over the simple roots
        let rank = simple.len();
        let gram = griess_exact::Matrix::from_fn(rank, rank, |i, j| dot(&simple[i], &simple[j]));
        let simple_coords = positive
            .iter()
            .map(|r| {
                let rhs: Vec<ExactScalar> = (0..rank).map(|i| dot(&simple[i], r)).collect();
                griess_exact::solve_linear(&gram, &rhs).expect("roots lie in the simple span")
            })
            .collect();
        let coxeter = rtype.root_count() / rtype.rank();
        RootSystemData {
            rtype,
            ambient_dim,
            simple,
            positive,
            simple_coords,
            coxeter,
        }
    }

    /// Index of the canonical representative of `v` or `-v`.
    pub fn rep_index(&self, v: &[ExactScalar]) -> Option<usize> {
        let canon: Vector = if lex_positive(v) {
            v.to_vec()
        } else {
            negate(v)
        };
        self.positive.iter().position(|r| *r == canon)
    }

    pub fn pair_count(&self) -> usize {
        self.positive.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_coxeter_numbers() {
        let cases = [
            (RootType::A(1), 2, 2),
            (RootType::A(2), 6, 3),
            (RootType::A(8), 72, 9),
            (RootType::D(4), 24, 6),
            (RootType::E6, 72, 12),
            (RootType::E7, 126, 18),
            (RootType::E8, 240, 30),
        ];
        for (t, count, h) in cases {
            let r = RootSystemData::new(t);
            assert_eq!(2 * r.pair_count(), count, "{t}");
            assert_eq!(r.coxeter, h, "{t}");
        }
    }

    #[test]
    fn simple_coordinates_reconstruct_roots() {
        let r = RootSystemData::new(RootType::D(4));
        for (root, coords) in r.positive.iter().zip(&r.simple_coords) {
            let mut rebuilt = vec![ExactScalar::zero(); r.ambient_dim];
            for (c, s) in coords.iter().zip(&r.simple) {
                for (acc, x) in rebuilt.iter_mut().zip(s) {
                    *acc += &(c * x);
                }
            }
            assert_eq!(&rebuilt, root);
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["A1", "A5", "D4", "E6", "E7", "E8"] {
            assert_eq!(RootType::parse(s).unwrap().to_string(), s);
        }
        assert!(RootType::parse("B3").is_none());
        assert!(RootType::parse("D2").is_none());
    }
}
