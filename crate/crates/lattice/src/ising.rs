//! Enumeration of the 496 Ising vectors of the E8 lattice algebra: 240
//! axis vectors over the root pairs, and 256 twisted images of the standard
//! Ising vector under the sign characters of the lattice mod twice itself.

use crate::roots::{dot, RootType};
use crate::weight2::LatticeGriess;
use griess_core::{Algebra, Element};
use griess_exact::ExactScalar;

/// Compact description of an Ising vector of the E8 lattice algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsingVector {
    /// w^sign over the root-pair representative `rep`.
    Axis { rep: usize, sign: i8 },
    /// Twisted standard vector: character eps over the simple-root basis
    /// (one parity bit per simple root).
    Twisted { eps: [bool; 8] },
}

/// The 256 sign characters of E8/2E8 in simple-root parities, and their
/// values on each canonical root representative.
pub struct CharacterTable {
    /// signs[c][k] = character c evaluated on representative k (+-1)
    pub signs: Vec<Vec<i8>>,
    /// partial sums N(c) = sum_k signs[c][k]
    pub totals: Vec<i64>,
}

pub fn character_table(lg: &LatticeGriess) -> CharacterTable {
    assert_eq!(lg.roots.rtype, RootType::E8);
    let m = lg.xdim();
    // parity of the Euclidean pairing of each simple root with each rep
    let mut parity = vec![[false; 8]; m];
    for (k, p) in parity.iter_mut().enumerate() {
        for i in 0..8 {
            let d = dot(&lg.roots.simple[i], &lg.roots.positive[k]);
            let d = d
                .as_rational()
                .expect("rational pairing")
                .to_integer();
            p[i] = (&d % 2i32) != 0i32.into();
        }
    }
    let mut signs = Vec::with_capacity(256);
    let mut totals = Vec::with_capacity(256);
    for c in 0u16..256 {
        let mut row = Vec::with_capacity(m);
        let mut total = 0i64;
        for p in &parity {
            let mut neg = false;
            for (i, &bit) in p.iter().enumerate() {
                if bit && (c >> i) & 1 == 1 {
                    neg = !neg;
                }
            }
            let s = if neg { -1i8 } else { 1 };
            row.push(s);
            total += s as i64;
        }
        signs.push(row);
        totals.push(total);
    }
    CharacterTable { signs, totals }
}

impl IsingVector {
    pub fn element(&self, lg: &LatticeGriess, chars: &CharacterTable) -> Element {
        self.element_with(lg, chars, &lg.conformal())
    }

    /// Same, with the conformal vector precomputed by the caller.
    pub fn element_with(
        &self,
        lg: &LatticeGriess,
        chars: &CharacterTable,
        omega: &Element,
    ) -> Element {
        match self {
            IsingVector::Axis { rep, sign } => lg.axis(*rep, *sign),
            IsingVector::Twisted { eps } => {
                let c = eps
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i));
                let mut e = omega.scale(&ExactScalar::ratio(1, 16));
                for k in 0..lg.xdim() {
                    e[lg.x_index(k)] += &ExactScalar::ratio(chars.signs[c][k] as i64, 32);
                }
                e
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            IsingVector::Axis { rep, sign } => {
                format!("axis[{rep}]{}", if *sign > 0 { "+" } else { "-" })
            }
            IsingVector::Twisted { eps } => {
                let bits: String = eps.iter().map(|&b| if b { '1' } else { '0' }).collect();
                format!("twisted[{bits}]")
            }
        }
    }
}

/// All 240 + 256 candidates.
pub fn enumerate_ising(lg: &LatticeGriess) -> Vec<IsingVector> {
    assert_eq!(lg.roots.rtype, RootType::E8);
    let mut out = Vec::with_capacity(496);
    for rep in 0..lg.xdim() {
        out.push(IsingVector::Axis { rep, sign: 1 });
        out.push(IsingVector::Axis { rep, sign: -1 });
    }
    for c in 0u16..256 {
        let mut eps = [false; 8];
        for (i, e) in eps.iter_mut().enumerate() {
            *e = (c >> i) & 1 == 1;
        }
        out.push(IsingVector::Twisted { eps });
    }
    out
}

/// Report of the full enumeration check: idempotency, distinctness, and
/// the pairwise scaled-inner-product histogram.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub count: usize,
    pub all_ising: bool,
    pub all_distinct: bool,
    /// histogram of 2^10 (e|f) over unordered pairs, as exact strings
    pub scaled_histogram: Vec<(String, usize)>,
    /// every histogram value lies in the dihedral table column set
    pub values_in_table: bool,
}

/// Run the whole 496-vector verification: every candidate squares to twice
/// itself and has norm 1/4, all are pairwise distinct, and the scaled inner
/// products of all pairs land in the dihedral table value set.
///
/// Axis vectors and a deterministic sample of twisted vectors are squared
/// through the raw element product; the remaining twisted squares are
/// assembled from the shared sector blocks (the same basis products,
/// grouped by bilinearity), and the closed pairing formulas used for the
/// scan are compared against the raw bilinear form on a sample.
pub fn full_scan(lg: &LatticeGriess) -> Result<ScanReport, crate::weight2::LatticeError> {
    use crate::weight2::LatticeError;
    let chars = character_table(lg);
    let vectors = enumerate_ising(lg);
    let two = ExactScalar::from_int(2);
    let quarter = ExactScalar::ratio(1, 4);
    let m = lg.xdim();
    let omega = lg.conformal();
    // shared sector blocks, verified raw
    let omega_sq = lg.mul(&omega, &omega);
    if omega_sq != omega.scale(&two) {
        return Err(LatticeError::OracleMismatch(
            "conformal vector is not idempotent".into(),
        ));
    }
    let mut x_elements = Vec::with_capacity(m);
    for k in 0..m {
        let x = lg.basis_element(lg.x_index(k));
        let ox = lg.mul(&omega, &x);
        if ox != x.scale(&two) {
            return Err(LatticeError::OracleMismatch(format!(
                "conformal vector does not act as two on exponential {k}"
            )));
        }
        x_elements.push(x);
    }
    let xx: Vec<Vec<Vec<(usize, ExactScalar)>>> = (0..m)
        .map(|k| {
            (k..m)
                .map(|l| {
                    lg.mul(&x_elements[k], &x_elements[l])
                        .support()
                        .map(|(i, c)| (i, c.clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let xx_at = |k: usize, l: usize| -> &[(usize, ExactScalar)] {
        let (k, l) = if k <= l { (k, l) } else { (l, k) };
        &xx[k][l - k]
    };

    let mut all_ising = true;
    for (idx, v) in vectors.iter().enumerate() {
        let e = v.element_with(lg, &chars, &omega);
        let ok = match v {
            IsingVector::Axis { .. } => {
                lg.mul(&e, &e) == e.scale(&two) && lg.form(&e, &e) == quarter
            }
            IsingVector::Twisted { eps } => {
                let c = eps
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i));
                // assembled square
                let mut sq = omega_sq.scale(&ExactScalar::ratio(1, 256));
                for k in 0..m {
                    // 2 (1/16)(1/32) s_k (omega x_k), with omega x_k = 2 x_k
                    let s = chars.signs[c][k] as i64;
                    sq[lg.x_index(k)] += &ExactScalar::ratio(4 * s, 512);
                    for (i, v) in xx_at(k, k) {
                        sq[*i] += &(v * &ExactScalar::ratio(1, 1024));
                    }
                    for l in k + 1..m {
                        let block = xx_at(k, l);
                        if block.is_empty() {
                            continue;
                        }
                        let ss = s * chars.signs[c][l] as i64;
                        let f = ExactScalar::ratio(2 * ss, 1024);
                        for (i, v) in block {
                            sq[*i] += &(v * &f);
                        }
                    }
                }
                let assembled_ok = sq == e.scale(&two);
                // raw cross-check on a deterministic sample
                let raw_ok = if idx % 16 == 0 {
                    lg.mul(&e, &e) == e.scale(&two)
                } else {
                    true
                };
                assembled_ok && raw_ok && fast_inner(lg, &chars, v, v) == quarter
            }
        };
        if !ok {
            all_ising = false;
        }
    }

    // distinctness over exact coordinates
    let mut seen = std::collections::HashSet::new();
    let mut all_distinct = true;
    for v in &vectors {
        let key = v.element_with(lg, &chars, &omega).into_coords();
        if !seen.insert(key) {
            all_distinct = false;
        }
    }

    // pairwise scan through the closed pairing formulas, with a raw-form
    // cross-check every 997 pairs
    let allowed: Vec<ExactScalar> = [256, 32, 13, 8, 6, 5, 4, 0]
        .into_iter()
        .map(ExactScalar::from_int)
        .collect();
    let mut histogram: Vec<(ExactScalar, usize)> = Vec::new();
    let mut values_in_table = true;
    let mut pair_index = 0usize;
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            let ip = fast_inner(lg, &chars, &vectors[i], &vectors[j]);
            if pair_index % 997 == 0 {
                let raw = lg.form(
                    &vectors[i].element_with(lg, &chars, &omega),
                    &vectors[j].element_with(lg, &chars, &omega),
                );
                if raw != ip {
                    return Err(LatticeError::OracleMismatch(format!(
                        "closed pairing formula disagrees with the form on pair {i}, {j}"
                    )));
                }
            }
            pair_index += 1;
            let scaled = &ip * &ExactScalar::from_int(1024);
            if !allowed.contains(&scaled) {
                values_in_table = false;
            }
            match histogram.iter_mut().find(|(v, _)| *v == scaled) {
                Some((_, c)) => *c += 1,
                None => histogram.push((scaled, 1)),
            }
        }
    }
    histogram.sort_by_key(|(v, _)| v.to_string());
    Ok(ScanReport {
        count: vectors.len(),
        all_ising,
        all_distinct,
        scaled_histogram: histogram
            .into_iter()
            .map(|(v, c)| (v.to_string(), c))
            .collect(),
        values_in_table,
    })
}

/// Inner product of two enumerated vectors through the closed pairing
/// formulas (verified against the algebra's bilinear form on a sample by
/// the callers): axis against axis follows the root pairing, axis against
/// twisted uses the character sign, twisted against twisted averages the
/// character product.
pub fn fast_inner(
    lg: &LatticeGriess,
    chars: &CharacterTable,
    a: &IsingVector,
    b: &IsingVector,
) -> ExactScalar {
    match (a, b) {
        (IsingVector::Axis { rep: k, sign: e }, IsingVector::Axis { rep: l, sign: f }) => {
            if k == l {
                if e == f {
                    ExactScalar::ratio(1, 4)
                } else {
                    ExactScalar::zero()
                }
            } else if lg.pair_dot(*k, *l) == 0 {
                ExactScalar::zero()
            } else {
                ExactScalar::ratio(1, 32)
            }
        }
        (IsingVector::Axis { rep, sign }, IsingVector::Twisted { eps })
        | (IsingVector::Twisted { eps }, IsingVector::Axis { rep, sign }) => {
            let c = eps
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i));
            let s = chars.signs[c][*rep] as i64 * *sign as i64;
            // 1/64 + s/64
            ExactScalar::ratio(1 + s, 64)
        }
        (IsingVector::Twisted { eps: e1 }, IsingVector::Twisted { eps: e2 }) => {
            let c1 = e1
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i));
            let c2 = e2
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i));
            let c = c1 ^ c2;
            // (omega|omega)/256 + N(c)/512 = 1/64 + N(c)/512
            ExactScalar::ratio(8 + chars.totals[c], 512)
        }
    }
}
