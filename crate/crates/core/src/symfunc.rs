//! Exact sparse polynomial arithmetic over the integers, Schur polynomials,
//! and decomposition of symmetric polynomials into the Schur basis.
//!
//! This is the brute-force character layer: a representation is represented
//! by its character, a symmetric polynomial in `n` variables with big-integer
//! coefficients, and tensor products / squares / plethysm-style substitutions
//! are literal polynomial operations. The combinatorial engine in `rep` is
//! pinned against this layer by the verification suite.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A multivariate polynomial in `n` variables, stored as a mapping from
/// exponent vectors (always of length `n`) to nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    n: usize,
    terms: HashMap<Vec<u32>, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], BigInt::one());
        p
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Adds `c * x^exponent`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exponent: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exponent.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Exact convolution of term mappings.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = SparsePolynomial {
            n: self.n,
            terms: HashMap::with_capacity(self.terms.len().max(other.terms.len())),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        Ok(out)
    }

    /// The second Adams operation on characters: doubles every exponent,
    /// so that `adams2(f)(x_1,...,x_n) = f(x_1^2,...,x_n^2)`.
    pub fn adams2(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|&x| 2 * x).collect(), c.clone()))
            .collect();
        SparsePolynomial { n: self.n, terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// `self -= c * other`. Both polynomials must share `n`.
    pub fn sub_scaled(&mut self, other: &Self, c: &BigInt) {
        debug_assert_eq!(self.n, other.n);
        for (e, oc) in &other.terms {
            self.add_term(e.clone(), -(oc * c));
        }
    }

    /// Halves every coefficient; `Err` carries the offending exponent's
    /// sorted partition if any coefficient is odd.
    pub fn halve_exact(&self, side: &'static str) -> Result<Self> {
        let two = BigInt::from(2);
        let mut terms = HashMap::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, &two);
            if !r.is_zero() {
                return Err(Error::InexactHalving {
                    lambda: Partition::from_exponents(e),
                    side,
                });
            }
            if !q.is_zero() {
                terms.insert(e.clone(), q);
            }
        }
        Ok(SparsePolynomial { n: self.n, terms })
    }

    /// Termwise evaluation at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.n);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &p) in point.iter().zip(e) {
                for _ in 0..p {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Terms sorted by exponent vector (graded, then lexicographic
    /// descending); gives displays and serializations a canonical order.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: u64 = ea.iter().map(|&x| u64::from(x)).sum();
            let db: u64 = eb.iter().map(|&x| u64::from(x)).sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        v
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e:?}")?;
        }
        Ok(())
    }
}

/// An integer combination of Schur polynomials in `n` variables, keyed by
/// partition in canonical order. Signed coefficients are allowed in
/// intermediate states; final decompositions are nonnegative.
///
/// `n == 0` means "no row bound" and is used for untruncated
/// Littlewood-Richardson expansions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        SchurExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, lambda: Partition, mult: BigInt) {
        debug_assert!(self.n == 0 || lambda.rows() <= self.n);
        if mult.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.coeffs.contains_key(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterates in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Reconstructs the polynomial `sum coeffs[lambda] * s_lambda`.
    /// Only usable when a row bound / variable count is set.
    pub fn to_polynomial(&self) -> Result<SparsePolynomial> {
        assert!(self.n > 0, "cannot evaluate an untruncated expansion");
        let mut acc = SparsePolynomial::zero(self.n);
        for (lambda, c) in &self.coeffs {
            let s = schur_polynomial(lambda, self.n)?;
            let mut scaled = SparsePolynomial::zero(self.n);
            for (e, sc) in s.terms() {
                scaled.add_term(e.clone(), sc * c);
            }
            acc = acc.add(&scaled)?;
        }
        Ok(acc)
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            lambda: &'a Partition,
            mult: i64,
        }
        let terms: Vec<Term> = self
            .coeffs
            .iter()
            .map(|(lambda, mult)| Term {
                lambda,
                mult: num_traits::ToPrimitive::to_i64(mult)
                    .expect("multiplicity exceeds i64 in serialization"),
            })
            .collect();
        let mut st = serializer.serialize_struct("SchurExpansion", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The Schur polynomial `s_lambda(x_1,...,x_n)`: one monomial per
/// semistandard tableau of shape `lambda` with entries in `1..=n`.
/// Rejects shapes with more than `n` rows (the zero representation).
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Result<SparsePolynomial> {
    Ok((*schur_polynomial_cached(lambda, n)?).clone())
}

type SchurCache = HashMap<(Partition, usize), Arc<SparsePolynomial>>;

/// Shared cache: Schur polynomials are requested repeatedly with identical
/// arguments during decompositions, and the tableau enumeration dominates.
static SCHUR_CACHE: LazyLock<Mutex<SchurCache>> = LazyLock::new(|| Mutex::new(HashMap::new()));

fn schur_polynomial_cached(lambda: &Partition, n: usize) -> Result<Arc<SparsePolynomial>> {
    if lambda.rows() > n {
        return Err(Error::TooManyRows {
            lambda: lambda.clone(),
            n,
        });
    }
    if let Some(hit) = SCHUR_CACHE
        .lock()
        .unwrap()
        .get(&(lambda.clone(), n))
        .cloned()
    {
        return Ok(hit);
    }
    let poly = Arc::new(enumerate_ssyt(lambda, n));
    SCHUR_CACHE
        .lock()
        .unwrap()
        .insert((lambda.clone(), n), poly.clone());
    Ok(poly)
}

/// Depth-first fill of the diagram in row-major order. Rows weakly
/// increase, columns strictly increase, entries bounded so that the column
/// below each cell can still be completed.
fn enumerate_ssyt(lambda: &Partition, n: usize) -> SparsePolynomial {
    let mut poly = SparsePolynomial::zero(n);
    if lambda.is_empty() {
        poly.add_term(vec![0; n], BigInt::one());
        return poly;
    }

    struct Filler<'a> {
        lambda: &'a Partition,
        conj: Partition,
        n: usize,
        tableau: Vec<Vec<u32>>,
        weight: Vec<u32>,
    }

    impl Filler<'_> {
        fn fill(&mut self, r: usize, c: usize, poly: &mut SparsePolynomial) {
            if r > self.lambda.rows() {
                poly.add_term(self.weight.clone(), BigInt::one());
                return;
            }
            let (nr, nc) = if c < self.lambda.part(r) as usize {
                (r, c + 1)
            } else {
                (r + 1, 1)
            };
            let left = if c > 1 { self.tableau[r - 1][c - 2] } else { 1 };
            let above = if r > 1 {
                self.tableau[r - 2][c - 1] + 1
            } else {
                1
            };
            // leave room for the strictly increasing column below
            let hi = self.n as u32 - (self.conj.part(c) - r as u32);
            for v in left.max(above)..=hi {
                self.tableau[r - 1][c - 1] = v;
                self.weight[v as usize - 1] += 1;
                self.fill(nr, nc, poly);
                self.weight[v as usize - 1] -= 1;
            }
        }
    }

    let mut filler = Filler {
        lambda,
        conj: lambda.conjugate(),
        n,
        tableau: (1..=lambda.rows())
            .map(|r| vec![0; lambda.part(r) as usize])
            .collect(),
        weight: vec![0u32; n],
    };
    filler.fill(1, 1, &mut poly);
    poly
}

/// Writes a symmetric polynomial in the Schur basis by leading-term
/// elimination: repeatedly take the greatest surviving monomial (ordered by
/// the canonical order of its sorted exponent partition) and subtract that
/// multiple of the corresponding Schur polynomial.
///
/// Non-symmetric input is detected and rejected: whenever the leading orbit's
/// weakly decreasing representative is missing the input could not have been
/// symmetric.
pub fn schur_decompose(f: &SparsePolynomial) -> Result<SchurExpansion> {
    let n = f.variables();
    let mut residue = f.clone();
    let mut out = SchurExpansion::new(n);
    while !residue.is_zero() {
        let leading = residue
            .terms()
            .map(|(e, _)| Partition::from_exponents(e))
            .min()
            .expect("nonzero polynomial has a leading term");
        let representative = leading.padded(n);
        let c = residue.coeff(&representative);
        if c.is_zero() {
            // Some monomial in this orbit survives but the dominant one is
            // gone: the input was not symmetric.
            let witness = residue
                .terms()
                .filter(|(e, _)| Partition::from_exponents(e) == leading)
                .map(|(e, _)| e.clone())
                .next()
                .expect("orbit is nonempty");
            return Err(Error::NotSymmetric { exponent: witness });
        }
        let s = schur_polynomial_cached(&leading, n)?;
        residue.sub_scaled(&s, &c);
        out.add(leading, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn expansion(n: usize, entries: &[(&[u32], i64)]) -> SchurExpansion {
        let mut e = SchurExpansion::new(n);
        for (parts, mult) in entries {
            e.add(p(parts), BigInt::from(*mult));
        }
        e
    }

    #[test]
    fn schur_standard_representation() {
        // s_(1) in 2 variables = x1 + x2
        let s = schur_polynomial(&p(&[1]), 2).unwrap();
        assert_eq!(s.coeff(&[1, 0]), BigInt::one());
        assert_eq!(s.coeff(&[0, 1]), BigInt::one());
        assert_eq!(s.num_terms(), 2);
    }

    #[test]
    fn schur_determinant_and_h2() {
        let det = schur_polynomial(&p(&[1, 1]), 2).unwrap();
        assert_eq!(det.coeff(&[1, 1]), BigInt::one());
        assert_eq!(det.num_terms(), 1);

        let h2 = schur_polynomial(&p(&[2]), 2).unwrap();
        assert_eq!(h2.coeff(&[2, 0]), BigInt::one());
        assert_eq!(h2.coeff(&[1, 1]), BigInt::one());
        assert_eq!(h2.coeff(&[0, 2]), BigInt::one());
        assert_eq!(h2.num_terms(), 3);
    }

    #[test]
    fn schur_rejects_too_many_rows() {
        assert!(matches!(
            schur_polynomial(&p(&[1, 1, 1]), 2),
            Err(Error::TooManyRows { .. })
        ));
    }

    #[test]
    fn schur_leading_coefficient_and_degree() {
        for lambda in [p(&[3, 1]), p(&[2, 2, 1]), p(&[4])] {
            let n = 4;
            let s = schur_polynomial(&lambda, n).unwrap();
            assert_eq!(s.coeff(&lambda.padded(n)), BigInt::one());
            for (e, _) in s.terms() {
                let deg: u64 = e.iter().map(|&x| u64::from(x)).sum();
                assert_eq!(deg, lambda.size());
            }
        }
    }

    #[test]
    fn multiply_square_of_e1() {
        let e1 = schur_polynomial(&p(&[1]), 2).unwrap();
        let sq = e1.multiply(&e1).unwrap();
        assert_eq!(sq.coeff(&[2, 0]), BigInt::one());
        assert_eq!(sq.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.coeff(&[0, 2]), BigInt::one());
    }

    #[test]
    fn multiply_identities() {
        let f = schur_polynomial(&p(&[2, 1]), 3).unwrap();
        assert_eq!(f.multiply(&SparsePolynomial::one(3)).unwrap(), f);
        assert!(f.multiply(&SparsePolynomial::zero(3)).unwrap().is_zero());
        assert!(matches!(
            f.multiply(&SparsePolynomial::one(2)),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn adams2_examples() {
        let e1 = schur_polynomial(&p(&[1]), 2).unwrap();
        let a = e1.adams2();
        assert_eq!(a.coeff(&[2, 0]), BigInt::one());
        assert_eq!(a.coeff(&[0, 2]), BigInt::one());
        assert_eq!(a.num_terms(), 2);

        let det = schur_polynomial(&p(&[1, 1]), 2).unwrap();
        assert_eq!(det.adams2().coeff(&[2, 2]), BigInt::one());

        let c = SparsePolynomial::one(3);
        assert_eq!(c.adams2(), c);
    }

    #[test]
    fn decompose_round_trip_small() {
        let s = schur_polynomial(&p(&[2, 1]), 3).unwrap();
        let d = schur_decompose(&s).unwrap();
        assert_eq!(d, expansion(3, &[(&[2, 1], 1)]));
    }

    #[test]
    fn decompose_square_of_e1() {
        let e1 = schur_polynomial(&p(&[1]), 2).unwrap();
        let d = schur_decompose(&e1.multiply(&e1).unwrap()).unwrap();
        assert_eq!(d, expansion(2, &[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn decompose_adams_of_e1() {
        // hand elimination: x1^2 + x2^2 - s_(2) = -x1 x2 = -s_(1,1)
        let e1 = schur_polynomial(&p(&[1]), 2).unwrap();
        let d = schur_decompose(&e1.adams2()).unwrap();
        assert_eq!(d, expansion(2, &[(&[2], 1), (&[1, 1], -1)]));
    }

    #[test]
    fn decompose_rejects_asymmetric_input() {
        let mut f = SparsePolynomial::zero(2);
        f.add_term(vec![1, 0], BigInt::one());
        assert!(matches!(
            schur_decompose(&f),
            Err(Error::NotSymmetric { .. })
        ));

        let mut g = SparsePolynomial::zero(2);
        g.add_term(vec![2, 0], BigInt::one());
        g.add_term(vec![0, 2], BigInt::from(3));
        assert!(matches!(
            schur_decompose(&g),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn decompose_zero_and_constant() {
        assert!(schur_decompose(&SparsePolynomial::zero(3))
            .unwrap()
            .is_zero());
        let c = SparsePolynomial::one(3);
        let d = schur_decompose(&c).unwrap();
        assert_eq!(d, expansion(3, &[(&[], 1)]));
    }

    #[test]
    fn round_trip_exhaustive_small() {
        // schur_decompose(schur_polynomial(lambda, n)) = {lambda: 1}
        // for all n <= 4, lambda with <= n rows, |lambda| <= 8
        for n in 1..=4usize {
            for lambda in partitions_up_to(8, n) {
                let s = schur_polynomial(&lambda, n).unwrap();
                let d = schur_decompose(&s).unwrap();
                assert_eq!(d.len(), 1, "lambda={lambda}, n={n}");
                assert_eq!(d.coeff(&lambda), BigInt::one(), "lambda={lambda}, n={n}");
            }
        }
    }

    #[test]
    fn expansion_serialization_schema() {
        let e = expansion(4, &[(&[2, 2], 1), (&[2, 1, 1], 1)]);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"terms":[{"lambda":[2,2],"mult":1},{"lambda":[2,1,1],"mult":1}]}"#
        );
    }

    // --- property tests -------------------------------------------------

    fn arb_partition(max_size: u32, max_rows: usize) -> impl Strategy<Value = Partition> {
        (0..=max_size).prop_flat_map(move |s| {
            let all = crate::partition::partitions_of(s, max_rows, s.max(1));
            prop::sample::select(all)
        })
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = SparsePolynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..=4), 0..5).prop_map(
            move |terms| {
                let mut f = SparsePolynomial::zero(n);
                for (e, c) in terms {
                    f.add_term(e, BigInt::from(c));
                }
                f
            },
        )
    }

    fn arb_point(n: usize) -> impl Strategy<Value = Vec<BigInt>> {
        prop::collection::vec(-3i64..=3, n)
            .prop_map(|v| v.into_iter().map(BigInt::from).collect())
    }

    fn symmetrize(f: &SparsePolynomial) -> SparsePolynomial {
        // sum of f over all variable permutations
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for mut base in perms(k - 1) {
                for pos in 0..=base.len() {
                    base.insert(pos, k - 1);
                    out.push(base.clone());
                    base.remove(pos);
                }
            }
            out
        }
        let n = f.variables();
        let mut acc = SparsePolynomial::zero(n);
        for perm in perms(n) {
            for (e, c) in f.terms() {
                let mut pe = vec![0u32; n];
                for (i, &v) in e.iter().enumerate() {
                    pe[perm[i]] = v;
                }
                acc.add_term(pe, c.clone());
            }
        }
        acc
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiply_commutes(f in arb_poly(3), g in arb_poly(3)) {
            prop_assert_eq!(f.multiply(&g).unwrap(), g.multiply(&f).unwrap());
        }

        #[test]
        fn multiply_associates(f in arb_poly(2), g in arb_poly(2), h in arb_poly(2)) {
            let left = f.multiply(&g).unwrap().multiply(&h).unwrap();
            let right = f.multiply(&g.multiply(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn adams2_evaluation_identity(f in arb_poly(3), v in arb_point(3)) {
            let squared: Vec<BigInt> = v.iter().map(|x| x * x).collect();
            prop_assert_eq!(f.adams2().evaluate(&v), f.evaluate(&squared));
        }

        #[test]
        fn decompose_reconstructs_and_evaluates(f in arb_poly(3), v in arb_point(3)) {
            let sym = symmetrize(&f);
            let d = schur_decompose(&sym).unwrap();
            prop_assert_eq!(d.to_polynomial().unwrap(), sym.clone());
            let mut by_schur = BigInt::zero();
            for (lambda, c) in d.iter() {
                by_schur += c * schur_polynomial(lambda, 3).unwrap().evaluate(&v);
            }
            prop_assert_eq!(by_schur, sym.evaluate(&v));
        }

        #[test]
        fn schur_polynomials_are_symmetric(lambda in arb_partition(6, 3)) {
            let s = schur_polynomial(&lambda, 3).unwrap();
            prop_assert_eq!(symmetrize(&SparsePolynomial::one(3)).coeff(&[0,0,0]), BigInt::from(6));
            // swapping any two variables leaves the term map unchanged
            for (a, b) in [(0usize, 1usize), (1, 2), (0, 2)] {
                for (e, c) in s.terms() {
                    let mut swapped = e.clone();
                    swapped.swap(a, b);
                    prop_assert_eq!(s.coeff(&swapped), c.clone());
                }
            }
        }
    }
}
