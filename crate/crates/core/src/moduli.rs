//! The pipeline for a pair `(m, k)`: enumerate the tensor-square
//! components of `F(k pi_2)`, compute the weight of the isotropy-centre
//! circle action on each lowest-weight vector, filter by the threshold
//! carried by the isotropy module, intersect with the symmetric square,
//! and measure the complement that hosts the embedding moduli.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::dim::dim_gl;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rep::{square_split, su_label, tensor_decompose, SquareSplit};
use crate::symfunc::SchurExpansion;

/// The pair `(m, k)`: the Grassmannian `Gr_m(C^{m+2})` (so `n = m + 2`
/// torus coordinates) and the embedding degree `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairConfig {
    pub m: u32,
    pub k: u32,
}

impl PairConfig {
    pub fn new(m: u32, k: u32) -> Result<Self> {
        if m < 2 || k < 1 {
            return Err(Error::InvalidConfig { m, k });
        }
        Ok(PairConfig { m, k })
    }

    /// Number of torus coordinates, `m + 2`.
    pub fn n(&self) -> usize {
        self.m as usize + 2
    }

    /// Highest weight of the section space: the `2 x k` rectangle `(k, k)`.
    pub fn section_shape(&self) -> Partition {
        Partition::new(vec![self.k, self.k]).expect("rectangle is a partition")
    }
}

/// A torus weight of U(m+2): exactly `m + 2` integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// The exact rational exponent by which the centre circle
/// `Y = diag(y^{1/m}, ..., y^{1/m}, y^{-1/2}, y^{-1/2})` scales a weight
/// vector. The reduced denominator always divides `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CenterWeight(Ratio<i64>);

impl CenterWeight {
    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl std::fmt::Display for CenterWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for CenterWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CenterWeight", 2)?;
        st.serialize_field("num", self.0.numer())?;
        st.serialize_field("den", self.0.denom())?;
        st.end()
    }
}

/// Whether a summand sits in the symmetric or the exterior square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Sym,
    Alt,
}

/// One irreducible summand of the tensor square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRecord {
    pub i: u32,
    pub j: u32,
    pub lambda: Partition,
    pub parity: Parity,
    pub center_weight: CenterWeight,
    pub dim: BigUint,
}

/// The `(i, j)`-indexed family of tensor-square component shapes,
/// `lambda(i, j) = (2k - i, 2k - i - j, i + j, i)` over `0 <= i <= k`,
/// `0 <= j <= k - i`, in lexicographic `(i, j)` order. Exactly
/// `(k+1)(k+2)/2` entries, each a partition of `4k` with at most 4 rows.
pub fn component_shapes(cfg: PairConfig) -> Vec<(u32, u32, Partition)> {
    let k = cfg.k;
    let mut out = Vec::with_capacity(((k + 1) * (k + 2) / 2) as usize);
    for i in 0..=k {
        for j in 0..=(k - i) {
            let lambda = Partition::new(vec![2 * k - i, 2 * k - i - j, i + j, i])
                .expect("component shape is a partition");
            out.push((i, j, lambda));
        }
    }
    out
}

/// The lowest weight of `V(lambda)` as a U(n) representation: the reversal
/// of `lambda` padded to `n` entries.
pub fn lowest_weight(lambda: &Partition, n: usize) -> Weight {
    let mut entries: Vec<i64> = lambda.padded(n).into_iter().map(i64::from).collect();
    entries.reverse();
    Weight(entries)
}

/// Pairing of a torus weight with the centre circle of
/// `S(U(m) x U(2))`: `(1/m) * sum of the first m entries
/// - (1/2) * (last two entries)`. Additive in the weight.
pub fn center_weight(w: &Weight, m: u32) -> CenterWeight {
    let n = m as usize + 2;
    assert_eq!(w.0.len(), n, "weight must have m + 2 entries");
    let head: i64 = w.0[..m as usize].iter().sum();
    let tail: i64 = w.0[m as usize] + w.0[m as usize + 1];
    let value = Ratio::new(head, i64::from(m)) - Ratio::new(tail, 2);
    debug_assert_eq!(i64::from(2 * m) % value.denom(), 0);
    CenterWeight(value)
}

/// The centre weight carried by the invariantly generated endomorphism
/// module: `-2k + 1/m + 1/2`, the sum of the weights of its two factors.
pub fn gs_threshold(cfg: PairConfig) -> CenterWeight {
    let m = i64::from(cfg.m);
    let k = i64::from(cfg.k);
    CenterWeight(Ratio::new(-2 * k, 1) + Ratio::new(1, m) + Ratio::new(1, 2))
}

/// Published closed form for the centre weight of a lowest-weight vector,
/// in terms of SU fundamental-weight coefficients:
/// `-(1/2) k_1 - (1/m) * sum_{i=2}^{m} (m + 2 - i) k_i`.
///
/// Transcribed verbatim (the sum stops at `i = m`); the reports compare it
/// against the direct diagonal-action computation and record the outcome.
pub fn center_weight_closed_form(su_coeffs: &[u32], m: u32) -> CenterWeight {
    assert_eq!(su_coeffs.len(), m as usize + 1);
    let mi = i64::from(m);
    let mut value = Ratio::new(-i64::from(su_coeffs[0]), 2);
    for i in 2..=(m as usize) {
        value -= Ratio::new((mi + 2 - i as i64) * i64::from(su_coeffs[i - 1]), mi);
    }
    CenterWeight(value)
}

/// One entry surviving the centre-weight filter, with its fate in the
/// symmetric/exterior intersection stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsSurvivor {
    pub i: u32,
    pub j: u32,
    pub lambda: Partition,
    pub center_weight: CenterWeight,
    pub in_sym: bool,
}

/// Audit trail of the two-stage determination of the invariantly generated
/// module: the centre-weight filter followed by the symmetric-square
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsAudit {
    pub threshold: CenterWeight,
    pub survivors: Vec<GsSurvivor>,
    pub module: Partition,
}

/// The complement of the invariantly generated module inside the symmetric
/// square: the ambient space of the moduli.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub expansion: SchurExpansion,
    pub complex_dim: BigUint,
    pub real_dim: BigUint,
}

/// Everything the pipeline produces for one `(m, k)`, computed in a single
/// pass so the report assembles without recomputation.
pub struct Pipeline {
    pub cfg: PairConfig,
    pub components: Vec<ComponentRecord>,
    pub split: SquareSplit,
    pub audit: GsAudit,
    pub complement: Complement,
}

/// Runs the full pipeline. Any deviation from the expected two-stage
/// outcome (survivor set `{(0,0), (0,1)}`, final module `(2k, 2k)`), any
/// mismatch between the closed-form component family and the
/// Littlewood-Richardson decomposition, and any component missing from
/// both halves of the square are verification failures: they would falsify
/// the identities the engine exists to reproduce.
pub fn run_pipeline(cfg: PairConfig) -> Result<Pipeline> {
    let n = cfg.n();
    let section = cfg.section_shape();
    let shapes = component_shapes(cfg);

    // closed-form family versus the LR engine, as multisets
    let tensor = tensor_decompose(&section, &section, n)?;
    if tensor.len() != shapes.len() {
        return Err(Error::Verification {
            stage: "tensor_square",
            detail: format!(
                "LR decomposition has {} distinct summands, the (i,j) family has {} at m={}, k={}",
                tensor.len(),
                shapes.len(),
                cfg.m,
                cfg.k
            ),
        });
    }
    for (i, j, lambda) in &shapes {
        let mult = tensor.coeff(lambda);
        if mult.to_i64() != Some(1) {
            return Err(Error::Verification {
                stage: "tensor_square",
                detail: format!(
                    "summand {lambda} (i={i}, j={j}) has LR multiplicity {mult}, expected 1"
                ),
            });
        }
    }

    let split = square_split(&section, n)?;
    let threshold = gs_threshold(cfg);

    let mut components = Vec::with_capacity(shapes.len());
    for (i, j, lambda) in &shapes {
        let in_sym = split.sym.contains(lambda);
        let in_alt = split.alt.contains(lambda);
        let parity = match (in_sym, in_alt) {
            (true, false) => Parity::Sym,
            (false, true) => Parity::Alt,
            _ => {
                return Err(Error::Verification {
                    stage: "parity",
                    detail: format!(
                        "component {lambda} (i={i}, j={j}) is in sym={in_sym}, alt={in_alt}; \
                         expected exactly one"
                    ),
                })
            }
        };
        components.push(ComponentRecord {
            i: *i,
            j: *j,
            lambda: lambda.clone(),
            parity,
            center_weight: center_weight(&lowest_weight(lambda, n), cfg.m),
            dim: dim_gl(lambda, n)?,
        });
    }

    // stage 1: centre-weight filter
    let survivors: Vec<GsSurvivor> = components
        .iter()
        .filter(|c| c.center_weight <= threshold)
        .map(|c| GsSurvivor {
            i: c.i,
            j: c.j,
            lambda: c.lambda.clone(),
            center_weight: c.center_weight,
            in_sym: c.parity == Parity::Sym,
        })
        .collect();
    let survivor_keys: Vec<(u32, u32)> = survivors.iter().map(|s| (s.i, s.j)).collect();
    if survivor_keys != vec![(0, 0), (0, 1)] {
        return Err(Error::Verification {
            stage: "gs_filter",
            detail: format!(
                "centre-weight filter at m={}, k={} kept {:?} (threshold {}), expected [(0,0), (0,1)]",
                cfg.m, cfg.k, survivor_keys, threshold
            ),
        });
    }

    // stage 2: intersect with the symmetric square
    let in_sym: Vec<&GsSurvivor> = survivors.iter().filter(|s| s.in_sym).collect();
    let expected_module = &components[0].lambda; // (i, j) = (0, 0), i.e. (2k, 2k)
    if in_sym.len() != 1 || &in_sym[0].lambda != expected_module {
        return Err(Error::Verification {
            stage: "gs_intersection",
            detail: format!(
                "symmetric intersection at m={}, k={} left {:?}, expected [{}]",
                cfg.m,
                cfg.k,
                in_sym.iter().map(|s| s.lambda.clone()).collect::<Vec<_>>(),
                expected_module
            ),
        });
    }
    let module = expected_module.clone();

    // complement inside the symmetric square
    let removed = split.sym.coeff(&module);
    if removed.to_i64() != Some(1) {
        return Err(Error::Verification {
            stage: "complement",
            detail: format!("{module} has multiplicity {removed} in the symmetric square"),
        });
    }
    let mut expansion = split.sym.clone();
    expansion.add(module.clone(), -removed);
    let mut complex_dim = BigUint::zero();
    for (lambda, mult) in expansion.iter() {
        debug_assert!(!mult.is_negative());
        complex_dim += mult.to_biguint().expect("nonnegative") * dim_gl(lambda, n)?;
    }
    let real_dim = BigUint::from(2u32) * &complex_dim;

    Ok(Pipeline {
        cfg,
        components,
        split,
        audit: GsAudit {
            threshold,
            survivors,
            module,
        },
        complement: Complement {
            expansion,
            complex_dim,
            real_dim,
        },
    })
}

/// The invariantly generated module with its two-stage audit trail.
pub fn gs_module(cfg: PairConfig) -> Result<GsAudit> {
    Ok(run_pipeline(cfg)?.audit)
}

/// The complement of the invariantly generated module inside the symmetric
/// square, with complex and real dimensions.
pub fn moduli_complement(cfg: PairConfig) -> Result<Complement> {
    Ok(run_pipeline(cfg)?.complement)
}

/// The component table: shape, parity, centre weight, and dimension per
/// `(i, j)`.
pub fn component_records(cfg: PairConfig) -> Result<Vec<ComponentRecord>> {
    Ok(run_pipeline(cfg)?.components)
}

/// Published direct-sum list for the complement, transcribed verbatim:
/// `(2k - 2i, 2i)` for `i >= 1`, `2i <= k`. Empty at `k = 1`. Its summands
/// are partitions of `2k` while every tensor-square constituent has size
/// `4k`; the reports carry the list as data next to the computed
/// complement and never reconcile the two by guessing a normalization.
pub fn reference_complement_list(k: u32) -> Vec<Partition> {
    (1..=k / 2)
        .map(|i| Partition::new(vec![2 * k - 2 * i, 2 * i]).expect("weakly decreasing"))
        .collect()
}

/// SU coefficients of a component shape, padded to the `m + 1` entries the
/// closed-form centre weight expects.
pub fn component_su_coefficients(lambda: &Partition, cfg: PairConfig) -> Result<Vec<u32>> {
    su_label(lambda, cfg.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg(m: u32, k: u32) -> PairConfig {
        PairConfig::new(m, k).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ratio(num: i64, den: i64) -> Ratio<i64> {
        Ratio::new(num, den)
    }

    #[test]
    fn config_validation() {
        assert!(PairConfig::new(1, 1).is_err());
        assert!(PairConfig::new(2, 0).is_err());
        assert_eq!(cfg(2, 1).n(), 4);
        assert_eq!(cfg(3, 2).section_shape(), p(&[2, 2]));
    }

    #[test]
    fn component_shapes_k1() {
        let shapes = component_shapes(cfg(2, 1));
        assert_eq!(
            shapes,
            vec![
                (0, 0, p(&[2, 2])),
                (0, 1, p(&[2, 1, 1])),
                (1, 0, p(&[1, 1, 1, 1])),
            ]
        );
    }

    #[test]
    fn component_shapes_k2_index_set() {
        let shapes = component_shapes(cfg(3, 2));
        let keys: Vec<(u32, u32)> = shapes.iter().map(|&(i, j, _)| (i, j)).collect();
        assert_eq!(keys, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]);
    }

    #[test]
    fn component_count_is_triangular() {
        for k in 1..=6 {
            let shapes = component_shapes(cfg(2, k));
            assert_eq!(shapes.len() as u32, (k + 1) * (k + 2) / 2);
            for (_, _, lambda) in &shapes {
                assert_eq!(lambda.size(), u64::from(4 * k));
                assert!(lambda.rows() <= 4);
            }
        }
    }

    #[test]
    fn lowest_weight_is_reversal() {
        assert_eq!(lowest_weight(&p(&[2, 2]), 4).entries(), &[0, 0, 2, 2]);
        assert_eq!(lowest_weight(&p(&[1]), 3).entries(), &[0, 0, 1]);
        let k = 3u32;
        let (i, j) = (1u32, 1u32);
        let lambda = p(&[2 * k - i, 2 * k - i - j, i + j, i]);
        assert_eq!(
            lowest_weight(&lambda, 6).entries(),
            &[0, 0, 1, 2, 4, 5] // (0,...,0, i, i+j, 2k-i-j, 2k-i)
        );
    }

    #[test]
    fn center_weight_of_component_lowest_weights() {
        // -2k + (1 + 2/m) i + (1/2 + 1/m) j, and -2k + 2i + j at m = 2
        for m in [2u32, 3, 4, 5] {
            for k in 1..=4u32 {
                for (i, j, lambda) in component_shapes(cfg(m, k)) {
                    let got = center_weight(&lowest_weight(&lambda, m as usize + 2), m).value();
                    let expected = ratio(-2 * i64::from(k), 1)
                        + ratio(i64::from(m) + 2, i64::from(m)) * ratio(i64::from(i), 1)
                        + ratio(i64::from(m) + 2, 2 * i64::from(m)) * ratio(i64::from(j), 1);
                    assert_eq!(got, expected, "m={m}, k={k}, i={i}, j={j}");
                    if m == 2 {
                        assert_eq!(
                            got,
                            ratio(-2 * i64::from(k) + 2 * i64::from(i) + i64::from(j), 1)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn center_weight_of_all_ones_is_zero() {
        for m in 2..=5u32 {
            let w = Weight::new(vec![1; m as usize + 2]);
            assert_eq!(center_weight(&w, m).value(), Ratio::zero());
        }
    }

    #[test]
    fn threshold_values() {
        assert_eq!(gs_threshold(cfg(2, 1)).value(), ratio(-1, 1));
        assert_eq!(gs_threshold(cfg(2, 3)).value(), ratio(-5, 1));
        assert_eq!(gs_threshold(cfg(4, 1)).value(), ratio(-5, 4));
    }

    #[test]
    fn threshold_composes_from_factor_weights() {
        // the module is spanned by products of a tangent-direction weight
        // (e_1 - e_{m+1}) and two copies of the section lowest weight
        for m in 2..=5u32 {
            for k in 1..=4u32 {
                let n = m as usize + 2;
                let mut entries = vec![0i64; n];
                entries[0] += 1;
                entries[m as usize] -= 1;
                let low = lowest_weight(&p(&[k, k]), n);
                for (e, l) in entries.iter_mut().zip(low.entries()) {
                    *e += 2 * l;
                }
                assert_eq!(
                    center_weight(&Weight::new(entries), m),
                    gs_threshold(cfg(m, k))
                );
            }
        }
    }

    #[test]
    fn dichotomy_exhaustive() {
        // every component with i >= 1 or j > 1 lies strictly above the
        // threshold; (0,0) and (0,1) lie at or below it
        for m in [2u32, 3, 4] {
            for k in 1..=4u32 {
                let threshold = gs_threshold(cfg(m, k));
                for (i, j, lambda) in component_shapes(cfg(m, k)) {
                    let cw = center_weight(&lowest_weight(&lambda, m as usize + 2), m);
                    if i >= 1 || j > 1 {
                        assert!(cw > threshold, "m={m}, k={k}, i={i}, j={j}");
                    } else {
                        assert!(cw <= threshold, "m={m}, k={k}, i={i}, j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn gs_module_k1_m2() {
        let audit = gs_module(cfg(2, 1)).unwrap();
        assert_eq!(audit.module, p(&[2, 2]));
        assert_eq!(audit.threshold.value(), ratio(-1, 1));
        assert_eq!(audit.survivors.len(), 2);
        assert!(audit.survivors[0].in_sym);
        assert!(!audit.survivors[1].in_sym);
    }

    #[test]
    fn gs_module_k2_m3() {
        let audit = gs_module(cfg(3, 2)).unwrap();
        assert_eq!(audit.module, p(&[4, 4]));
        let keys: Vec<(u32, u32)> = audit.survivors.iter().map(|s| (s.i, s.j)).collect();
        assert_eq!(keys, vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn complement_k1_m2_is_rigid_line() {
        let c = moduli_complement(cfg(2, 1)).unwrap();
        assert_eq!(c.expansion.len(), 1);
        assert_eq!(c.expansion.coeff(&p(&[1, 1, 1, 1])), 1.into());
        assert_eq!(c.complex_dim, BigUint::from(1u32));
        assert_eq!(c.real_dim, BigUint::from(2u32));
    }

    #[test]
    fn complement_k2_m2_full_pipeline() {
        // frozen from the hook-content products: dims 84, 20, 1
        let c = moduli_complement(cfg(2, 2)).unwrap();
        let support: Vec<Partition> = c.expansion.support().cloned().collect();
        assert_eq!(
            support,
            vec![p(&[4, 2, 2]), p(&[3, 3, 1, 1]), p(&[2, 2, 2, 2])]
        );
        assert_eq!(c.complex_dim, BigUint::from(105u32));
        assert_eq!(c.real_dim, BigUint::from(210u32));
    }

    #[test]
    fn components_parity_and_dims_k1_m2() {
        let records = component_records(cfg(2, 1)).unwrap();
        let summary: Vec<(u32, u32, Parity, u32)> = records
            .iter()
            .map(|r| (r.i, r.j, r.parity, r.dim.to_u32().unwrap()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (0, 0, Parity::Sym, 20),
                (0, 1, Parity::Alt, 15),
                (1, 0, Parity::Sym, 1),
            ]
        );
    }

    #[test]
    fn reference_list_examples() {
        assert!(reference_complement_list(1).is_empty());
        assert_eq!(reference_complement_list(2), vec![p(&[2, 2])]);
        assert_eq!(reference_complement_list(5), vec![p(&[8, 2]), p(&[6, 4])]);
    }

    #[test]
    fn closed_form_center_weight_truncation() {
        // at m = 2 the published form drops the k_3 term, so it matches the
        // direct computation exactly when j = 0
        let config = cfg(2, 2);
        for (i, j, lambda) in component_shapes(config) {
            let direct = center_weight(&lowest_weight(&lambda, 4), 2);
            let coeffs = component_su_coefficients(&lambda, config).unwrap();
            let closed = center_weight_closed_form(&coeffs, 2);
            assert_eq!(direct == closed, j == 0, "i={i}, j={j}");
        }
        // at m >= 4 every component has k_{m+1} = 0 and the two agree
        let config = cfg(4, 2);
        for (_, _, lambda) in component_shapes(config) {
            let direct = center_weight(&lowest_weight(&lambda, 6), 4);
            let coeffs = component_su_coefficients(&lambda, config).unwrap();
            assert_eq!(direct, center_weight_closed_form(&coeffs, 4));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn center_weight_is_additive_and_twist_invariant(
            m in 2u32..=5,
            seed in prop::collection::vec(-20i64..=20, 14),
        ) {
            let n = m as usize + 2;
            let a = seed[..n].to_vec();
            let b = seed[7..7 + n].to_vec();
            let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let cw = |v: &[i64]| center_weight(&Weight::new(v.to_vec()), m).value();
            prop_assert_eq!(cw(&sum), cw(&a) + cw(&b));
            let twisted: Vec<i64> = a.iter().map(|x| x + 1).collect();
            prop_assert_eq!(cw(&twisted), cw(&a));
            // reduced denominator divides 2m
            prop_assert_eq!(i64::from(2 * m) % cw(&a).denom(), 0);
        }
    }
}
