//! Littlewood-Richardson coefficients, tensor-product decomposition for
//! U(n), and the symmetric/exterior square split.
//!
//! The LR enumeration is the production path; the `symfunc` character layer
//! is the independent oracle, and the verification suite pins the two
//! together exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{schur_decompose, schur_polynomial, SchurExpansion};

/// A tensor-product query `s_lambda * s_mu`, expanded in `n` variables.
/// `n = 0` means untruncated (no row bound on the result).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
}

/// Counts Littlewood-Richardson skew tableaux of shape `nu/lambda` and
/// content `mu`: rows weakly increase, columns strictly increase, and the
/// right-to-left row-major reading word is a lattice word.
fn lr_count(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(nu == lambda);
    }

    // cells of nu/lambda in reading order: each row right-to-left
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for row in 1..=nu.rows() {
        let lo = lambda.part(row) as usize + 1;
        let hi = nu.part(row) as usize;
        for col in (lo..=hi).rev() {
            cells.push((row, col));
        }
    }

    let mut counts = vec![0u32; mu.rows() + 1];
    let mut grid = vec![vec![0u32; nu.part(1) as usize + 1]; nu.rows() + 1];

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        lambda: &Partition,
        mu: &Partition,
        counts: &mut Vec<u32>,
        grid: &mut Vec<Vec<u32>>,
        found: &mut u64,
    ) {
        if idx == cells.len() {
            *found += 1;
            return;
        }
        let (row, col) = cells[idx];
        // weakly increasing along the row: bounded by the right neighbour
        let right = if col < grid[row].len() - 1 && grid[row][col + 1] > 0 {
            grid[row][col + 1]
        } else {
            mu.rows() as u32
        };
        // strictly increasing down the column: exceed the cell above when
        // that cell lies in the skew shape
        let above = if row > 1 && col > lambda.part(row - 1) as usize {
            grid[row - 1][col] + 1
        } else {
            1
        };
        for v in above..=right {
            let vi = v as usize;
            // content bound and lattice condition on the growing word
            if counts[vi] >= mu.part(vi) || (vi > 1 && counts[vi] >= counts[vi - 1]) {
                continue;
            }
            counts[vi] += 1;
            grid[row][col] = v;
            rec(cells, idx + 1, lambda, mu, counts, grid, found);
            grid[row][col] = 0;
            counts[vi] -= 1;
        }
    }

    let mut found = 0;
    rec(&cells, 0, lambda, mu, &mut counts, &mut grid, &mut found);
    found
}

/// The full LR expansion `s_lambda * s_mu = sum c^nu s_nu`, computed by
/// enumerating lattice-word skew tableaux over every candidate shape.
/// Shapes with more than `q.n` rows are filtered out after enumeration
/// when `q.n > 0`.
pub fn lr_coefficients(q: &LRQuery) -> SchurExpansion {
    let LRQuery { lambda, mu, n } = q;
    let total = lambda.size() + mu.size();
    let max_rows = lambda.rows() + mu.rows();
    let max_part = lambda.part(1) + mu.part(1);
    let mut out = SchurExpansion::new(*n);
    if total == 0 {
        out.add(Partition::empty(), BigInt::one());
        return out;
    }
    for nu in partitions_of(total as u32, max_rows, max_part) {
        if *n > 0 && nu.rows() > *n {
            continue;
        }
        if !nu.contains(lambda) || !nu.contains(mu) {
            continue;
        }
        let c = lr_count(&nu, lambda, mu);
        if c > 0 {
            out.add(nu, BigInt::from(c));
        }
    }
    out
}

/// Decomposition of `V(lambda) (x) V(mu)` as U(n) representations: LR with
/// row truncation at `n`. Factors with more than `n` rows are rejected.
pub fn tensor_decompose(lambda: &Partition, mu: &Partition, n: usize) -> Result<SchurExpansion> {
    assert!(n > 0, "tensor_decompose needs a positive variable count");
    for part in [lambda, mu] {
        if part.rows() > n {
            return Err(Error::TooManyRows {
                lambda: part.clone(),
                n,
            });
        }
    }
    Ok(lr_coefficients(&LRQuery {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
    }))
}

/// The symmetric/exterior split of a tensor square. Serializes as
/// `{"n": ..., "sym": [terms...], "alt": [terms...]}` with terms in
/// canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSplit {
    pub sym: SchurExpansion,
    pub alt: SchurExpansion,
}

impl serde::Serialize for SquareSplit {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SquareSplit", 3)?;
        st.serialize_field("n", &self.sym.variables())?;
        st.serialize_field("sym", &expansion_terms(&self.sym))?;
        st.serialize_field("alt", &expansion_terms(&self.alt))?;
        st.end()
    }
}

#[derive(serde::Serialize)]
struct TermJson {
    lambda: Partition,
    mult: i64,
}

fn expansion_terms(e: &SchurExpansion) -> Vec<TermJson> {
    e.iter()
        .map(|(lambda, mult)| TermJson {
            lambda: lambda.clone(),
            mult: num_traits::ToPrimitive::to_i64(mult)
                .expect("multiplicity exceeds i64 in serialization"),
        })
        .collect()
}

/// Splits `V(lambda) (x) V(lambda)` into its symmetric and exterior parts
/// at the character level: `sym = (s^2 + psi2(s)) / 2` and
/// `alt = (s^2 - psi2(s)) / 2`, each decomposed in the Schur basis.
///
/// A non-exact halving or a negative multiplicity means the character
/// arithmetic is internally inconsistent and aborts with a diagnostic.
pub fn square_split(lambda: &Partition, n: usize) -> Result<SquareSplit> {
    let s = schur_polynomial(lambda, n)?;
    let square = s.multiply(&s)?;
    let adams = s.adams2();
    let sym_poly = square.add(&adams)?.halve_exact("symmetric")?;
    let alt_poly = square.sub(&adams)?.halve_exact("exterior")?;
    let sym = schur_decompose(&sym_poly)?;
    let alt = schur_decompose(&alt_poly)?;
    for (side, expansion) in [("symmetric", &sym), ("exterior", &alt)] {
        if let Some((l, c)) = expansion.iter().find(|(_, c)| c.is_negative()) {
            return Err(Error::NegativeMultiplicity {
                lambda: l.clone(),
                mult: c.to_string(),
                side,
            });
        }
    }
    // the two halves must recombine to the full square
    let full = schur_decompose(&square)?;
    for nu in full.support() {
        if sym.coeff(nu).clone() + alt.coeff(nu) != full.coeff(nu) {
            return Err(Error::Verification {
                stage: "square_split",
                detail: format!("sym + alt != full tensor square at {nu}"),
            });
        }
    }
    Ok(SquareSplit { sym, alt })
}

/// SU(n) fundamental-weight coefficients of a U(n) highest weight:
/// `k_i = lambda_i - lambda_{i+1}` on the padding of `lambda` to `n` parts.
pub fn su_label(lambda: &Partition, n: usize) -> Result<Vec<u32>> {
    if lambda.rows() > n {
        return Err(Error::TooManyRows {
            lambda: lambda.clone(),
            n,
        });
    }
    let padded = lambda.padded(n);
    Ok(padded.windows(2).map(|w| w[0] - w[1]).collect())
}

/// Inverse of [`su_label`] up to determinant twist: rebuilds the unique
/// highest weight with last entry zero.
pub fn su_label_to_partition(coeffs: &[u32]) -> Partition {
    let mut parts: Vec<u32> = Vec::with_capacity(coeffs.len() + 1);
    let mut acc = 0;
    for &c in coeffs.iter().rev() {
        acc += c;
        parts.push(acc);
    }
    parts.reverse();
    Partition::new(parts).expect("suffix sums are weakly decreasing")
}
