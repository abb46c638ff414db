//! Named product sets and subspaces used as reference examples.
//!
//! Single-qubit states are written with the letters `0`, `1`, `+`, `-`, `e`
//! and `f`, where `e = (1, 1)` and `f = (1, -1)` (unnormalized `|+>`, `|->`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{kron, Matrix};
use crate::product::{ProductSet, ProductVector, SubspaceBasis};
use crate::scalar::Field;

/// The four-element three-qubit set `{000, 1+-, -1+, +-1}`.
pub const SHIFTS: [&str; 4] = ["000", "1+-", "-1+", "+-1"];

/// Eight-element four-qubit unextendible basis; extendible by biproduct vectors.
pub const K4: [&str; 8] = ["0000", "01fe", "1e1e", "1fe0", "e001", "e1ff", "fe1f", "ffe1"];

/// [`K4`] with the third-site vectors swapped within the pairs starting with
/// `1` and with `e`; unextendible across every 2|2 cut.
pub const K4_BAR: [&str; 8] = ["0000", "01fe", "1eee", "1f10", "e0f1", "e10f", "fe1f", "ffe1"];

/// Sixteen-element five-qubit unextendible basis with cyclic structure.
pub const K5: [&str; 16] = [
    "00000", "001fe", "e001f", "fe001", "1fe00", "01fe0", "01e1e", "e01e1", "1e01e", "e1e01", "1e1e0", "1fffe",
    "e1fff", "fe1ff", "ffe1f", "fffe1",
];

/// Parties accepted for `ghz:N`.
pub const MAX_GHZ_PARTIES: usize = 16;

/// Catalog entry names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    Shifts,
    K4,
    K4Bar,
    K5,
    Shor,
    Ghz(usize),
}

impl FromStr for CatalogName {
    type Err = Error;

    /// Accepts `shifts`, `k4`, `k4bar`, `k5`, `shor` and `ghz:N` (or `ghzN`).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "shifts" => return Ok(Self::Shifts),
            "k4" => return Ok(Self::K4),
            "k4bar" => return Ok(Self::K4Bar),
            "k5" => return Ok(Self::K5),
            "shor" => return Ok(Self::Shor),
            _ => {}
        }
        let n = lower
            .strip_prefix("ghz:")
            .or_else(|| lower.strip_prefix("ghz"))
            .and_then(|rest| rest.parse::<usize>().ok())
            .filter(|&n| (2..=MAX_GHZ_PARTIES).contains(&n))
            .ok_or_else(|| Error::UnknownCatalogEntry(s.to_string()))?;
        Ok(Self::Ghz(n))
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shifts => f.write_str("shifts"),
            Self::K4 => f.write_str("k4"),
            Self::K4Bar => f.write_str("k4bar"),
            Self::K5 => f.write_str("k5"),
            Self::Shor => f.write_str("shor"),
            Self::Ghz(n) => write!(f, "ghz:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry<T> {
    Set(ProductSet<T>),
    Basis(SubspaceBasis<T>),
}

pub fn catalog<T: Field>(name: CatalogName) -> CatalogEntry<T> {
    match name {
        CatalogName::Shifts => CatalogEntry::Set(qubit_set(&SHIFTS)),
        CatalogName::K4 => CatalogEntry::Set(qubit_set(&K4)),
        CatalogName::K4Bar => CatalogEntry::Set(qubit_set(&K4_BAR)),
        CatalogName::K5 => CatalogEntry::Set(qubit_set(&K5)),
        CatalogName::Shor => CatalogEntry::Basis(shor()),
        CatalogName::Ghz(n) => CatalogEntry::Basis(
            SubspaceBasis::new(
                vec![2; n],
                Matrix::from_rows(1 << n, vec![ghz_vector(n, false)]).unwrap(),
            )
            .expect("one nonzero row"),
        ),
    }
}

/// Looks up a catalog entry by name.
pub fn lookup<T: Field>(name: &str) -> Result<CatalogEntry<T>> {
    Ok(catalog(name.parse()?))
}

pub fn qubit_state<T: Field>(letter: char) -> Result<Vec<T>> {
    let (a, b) = match letter {
        '0' => (1, 0),
        '1' => (0, 1),
        '+' | 'e' => (1, 1),
        '-' | 'f' => (1, -1),
        other => return Err(Error::Format(format!("unknown qubit letter `{other}`"))),
    };
    Ok(vec![T::from_int(a), T::from_int(b)])
}

/// Product vector from a ket label such as `"01fe"`.
pub fn ket<T: Field>(label: &str) -> Result<ProductVector<T>> {
    ProductVector::new(label.chars().map(qubit_state).collect::<Result<Vec<_>>>()?)
}

fn qubit_set<T: Field>(labels: &[&str]) -> ProductSet<T> {
    let vectors: Vec<ProductVector<T>> = labels.iter().map(|l| ket(l).expect("valid label")).collect();
    ProductSet::new(vec![2; labels[0].len()], vectors).expect("labels share a length")
}

/// Unnormalized `|0...0> + |1...1>`, or `|0...0> - |1...1>` when `minus`.
pub fn ghz_vector<T: Field>(n: usize, minus: bool) -> Vec<T> {
    let mut v = vec![T::zero(); 1 << n];
    v[0] = T::one();
    v[(1 << n) - 1] = if minus { -T::one() } else { T::one() };
    v
}

/// Nine-qubit code space spanned by `GHZ^(x)3` and `GHZbar^(x)3`.
pub fn shor<T: Field>() -> SubspaceBasis<T> {
    let row = |minus: bool| {
        let g = ghz_vector::<T>(3, minus);
        kron(&kron(&g, &g), &g)
    };
    SubspaceBasis::new(vec![2; 9], Matrix::from_rows(512, vec![row(false), row(true)]).unwrap())
        .expect("the two code words are independent")
}
