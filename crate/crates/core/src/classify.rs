//! Classification of the subalgebra generated by two Ising vectors into the
//! nine dihedral types, by scaled inner product and closure dimension.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::GriessError;
use crate::miyamoto::is_ising;
use crate::subalgebra::close_subalgebra;
use griess_exact::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralTypeName {
    OneA,
    TwoA,
    TwoB,
    ThreeA,
    ThreeC,
    FourA,
    FourB,
    FiveA,
    SixA,
}

impl std::fmt::Display for DihedralTypeName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl DihedralTypeName {
    pub const ALL: [DihedralTypeName; 9] = [
        DihedralTypeName::OneA,
        DihedralTypeName::TwoA,
        DihedralTypeName::TwoB,
        DihedralTypeName::ThreeA,
        DihedralTypeName::ThreeC,
        DihedralTypeName::FourA,
        DihedralTypeName::FourB,
        DihedralTypeName::FiveA,
        DihedralTypeName::SixA,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            DihedralTypeName::OneA => "1A",
            DihedralTypeName::TwoA => "2A",
            DihedralTypeName::TwoB => "2B",
            DihedralTypeName::ThreeA => "3A",
            DihedralTypeName::ThreeC => "3C",
            DihedralTypeName::FourA => "4A",
            DihedralTypeName::FourB => "4B",
            DihedralTypeName::FiveA => "5A",
            DihedralTypeName::SixA => "6A",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.label().eq_ignore_ascii_case(s))
    }
}

/// Per-type metadata: the inner product scaled by 2^10, the dimension of the
/// generated Griess algebra, and the number of Ising vectors it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralType {
    pub name: DihedralTypeName,
    pub scaled_inner_product: i64,
    pub griess_dim: usize,
    pub ising_count: usize,
    /// Whether this crate ships the full structure-constant table for the
    /// type; the remaining types carry classification metadata only.
    pub full_table_available: bool,
}

impl DihedralType {
    pub fn inner_product(&self) -> ExactScalar {
        ExactScalar::ratio(self.scaled_inner_product, 1024)
    }
}

/// The metadata table over all nine types.
pub fn dihedral_table() -> Vec<DihedralType> {
    use DihedralTypeName::*;
    let rows: [(DihedralTypeName, i64, usize, usize, bool); 9] = [
        (OneA, 256, 1, 1, true),
        (TwoA, 32, 3, 3, true),
        (TwoB, 0, 2, 2, true),
        (ThreeA, 13, 4, 3, true),
        (ThreeC, 4, 3, 3, false),
        (FourA, 8, 5, 4, false),
        (FourB, 4, 5, 4, false),
        (FiveA, 6, 6, 5, false),
        (SixA, 5, 8, 7, true),
    ];
    rows.into_iter()
        .map(|(name, ip, dim, ising, full)| DihedralType {
            name,
            scaled_inner_product: ip,
            griess_dim: dim,
            ising_count: ising,
            full_table_available: full,
        })
        .collect()
}

pub fn dihedral_metadata(name: DihedralTypeName) -> DihedralType {
    dihedral_table().into_iter().find(|t| t.name == name).unwrap()
}

/// Classify the pair `(a, b)` by `2^10 (a|b)` and the dimension of the
/// generated subalgebra. 4B and 3C share the scaled inner product 4 and are
/// separated by dimension (5 against 3).
pub fn classify_pair(
    alg: &impl Algebra,
    a: &Element,
    b: &Element,
) -> Result<DihedralTypeName, GriessError> {
    if !is_ising(alg, a) || !is_ising(alg, b) {
        return Err(GriessError::NotIsing);
    }
    if a == b {
        return Ok(DihedralTypeName::OneA);
    }
    let scaled = &alg.form(a, b) * &ExactScalar::from_int(1024);
    let dim = close_subalgebra(alg, &[a.clone(), b.clone()])?.dim();
    for entry in dihedral_table() {
        if entry.name != DihedralTypeName::OneA
            && ExactScalar::from_int(entry.scaled_inner_product) == scaled
            && entry.griess_dim == dim
        {
            return Ok(entry.name);
        }
    }
    Err(GriessError::UnknownType {
        scaled: scaled.to_string(),
        dim,
    })
}
