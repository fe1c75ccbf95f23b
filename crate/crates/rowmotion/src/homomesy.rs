//! Exact-rational orbit censuses and homomesy verdicts.
//!
//! A statistic is *homomesic* for an action when its average over every
//! orbit is the same constant `c`. Deciding this requires exact arithmetic:
//! sums are checked 64-bit integers (overflow is an error, never a wrap) and
//! averages are arbitrary-precision rationals. No floating point is involved
//! anywhere.
//!
//! The census machinery is generic over the state type so that order ideals
//! and increasing tableaux share one implementation. States are scanned in
//! ascending order and an orbit is claimed by its least member, so a census
//! is deterministic and may be chunked across threads without changing a
//! single record.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::dynamics::DirectionVector;
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, RankedPoset};
use crate::tableaux::{k_promotion, CellSet, IncreasingTableau};

/// Exact average type: arbitrary-precision reduced fraction.
pub type Rational = BigRational;

/// Renders a rational the way reports expect: `18` or `161/9`.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn rational(numerator: i64, denominator: i64) -> Rational {
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// An integer weight per poset element; the statistic of an ideal is the
/// weight sum over its members.
#[derive(Debug, Clone)]
pub struct PosetStatistic {
    pub name: String,
    pub weights: Vec<i64>,
}

impl PosetStatistic {
    /// The cardinality statistic: weight one everywhere.
    pub fn cardinality(p: &RankedPoset) -> Self {
        PosetStatistic {
            name: "cardinality".into(),
            weights: vec![1; p.len()],
        }
    }

    /// Indicator of a union of columns of a product of three chains: the
    /// elements whose first two coordinates match one of the given pairs.
    pub fn columns(p: &RankedPoset, pairs: &[(i64, i64)]) -> Result<Self> {
        let dims = match p.dims() {
            Some(d) if d.len() == 3 => d.to_vec(),
            _ => {
                return Err(Error::Validation(
                    "column statistics need a product of exactly three chains".into(),
                ))
            }
        };
        for &(j, k) in pairs {
            if j < 1 || j > dims[0] as i64 || k < 1 || k > dims[1] as i64 {
                return Err(Error::Validation(format!(
                    "column ({j},{k}) outside [{}] x [{}]",
                    dims[0], dims[1]
                )));
            }
        }
        let weights = (0..p.len())
            .map(|e| {
                let c = p.coords(e);
                i64::from(pairs.iter().any(|&(j, k)| c.entry(0) == j && c.entry(1) == k))
            })
            .collect();
        let name = format!(
            "columns:{}",
            pairs
                .iter()
                .map(|(j, k)| format!("{j}:{k}"))
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(PosetStatistic { name, weights })
    }

    pub fn value(&self, ideal: OrderIdeal) -> i64 {
        ideal.members().map(|e| self.weights[e]).sum()
    }
}

/// Whether a set of `(j, k)` column pairs is fixed by the 180-degree
/// rotation of the `[a1] x [a2]` face, `(j, k) -> (a1+1-j, a2+1-k)`.
pub fn pairs_rotationally_symmetric(pairs: &[(i64, i64)], a1: usize, a2: usize) -> bool {
    let set: std::collections::BTreeSet<(i64, i64)> = pairs.iter().copied().collect();
    set.iter()
        .all(|&(j, k)| set.contains(&(a1 as i64 + 1 - j, a2 as i64 + 1 - k)))
}

/// One orbit of a census: its size, the exact statistic sum, the average,
/// and the least member as representative.
#[derive(Debug, Clone)]
pub struct OrbitRecord<S> {
    pub size: u64,
    pub sum: i64,
    pub average: Rational,
    pub representative: S,
}

/// A full orbit decomposition with per-orbit statistics.
#[derive(Debug, Clone)]
pub struct Census<S> {
    /// Orbit records sorted by representative.
    pub records: Vec<OrbitRecord<S>>,
    /// How many orbits attain each average.
    pub aggregate: BTreeMap<Rational, u64>,
    /// Total number of states (the orbit sizes sum to this).
    pub total_states: u64,
}

/// The homomesy decision for one census.
#[derive(Debug, Clone)]
pub struct HomomesyVerdict<S> {
    pub homomesic: bool,
    /// The common average when homomesic.
    pub constant: Option<Rational>,
    /// Two orbits with different averages otherwise.
    pub witness: Option<(OrbitRecord<S>, OrbitRecord<S>)>,
}

/// Computes the orbit census of `step` over `states` (which must be sorted
/// ascending and closed under `step`), scoring orbits by `weight`.
///
/// Each orbit is found from its least member: walks that meet a smaller
/// state abandon early. That keeps the decomposition deterministic and lets
/// `threads > 1` split the seed scan without any shared state.
pub fn census_states<S, F, W>(states: &[S], step: &F, weight: &W, threads: usize) -> Result<Census<S>>
where
    S: Ord + Clone + Send + Sync,
    F: Fn(&S) -> S + Sync,
    W: Fn(&S) -> i64 + Sync,
{
    debug_assert!(states.windows(2).all(|w| w[0] < w[1]), "states must be sorted");
    let total = states.len();
    let records: Vec<OrbitRecord<S>> = if threads <= 1 || total < 2 * threads {
        scan_seeds(states, step, weight, total)?
    } else {
        let chunk = total.div_ceil(threads);
        let chunks: Vec<&[S]> = states.chunks(chunk).collect();
        let results: Vec<Result<Vec<OrbitRecord<S>>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|seeds| scope.spawn(move || scan_seeds(seeds, step, weight, total)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut merged = Vec::new();
        for r in results {
            merged.extend(r?);
        }
        merged
    };

    let mut covered = 0u64;
    let mut aggregate: BTreeMap<Rational, u64> = BTreeMap::new();
    for rec in &records {
        covered += rec.size;
        *aggregate.entry(rec.average.clone()).or_insert(0) += 1;
    }
    if covered != total as u64 {
        return Err(Error::Internal(format!(
            "orbits cover {covered} of {total} states; the action is not a bijection"
        )));
    }
    Ok(Census {
        records,
        aggregate,
        total_states: total as u64,
    })
}

fn scan_seeds<S, F, W>(seeds: &[S], step: &F, weight: &W, total: usize) -> Result<Vec<OrbitRecord<S>>>
where
    S: Ord + Clone,
    F: Fn(&S) -> S,
    W: Fn(&S) -> i64,
{
    let mut records = Vec::new();
    'seed: for seed in seeds {
        let mut size = 1u64;
        let mut sum = weight(seed);
        let mut cur = step(seed);
        while cur != *seed {
            if cur < *seed {
                continue 'seed; // owned by a smaller seed
            }
            if size as usize > total {
                return Err(Error::Internal(
                    "orbit escaped the enumerated state set".into(),
                ));
            }
            sum = sum
                .checked_add(weight(&cur))
                .ok_or_else(|| Error::Overflow("summing a statistic over an orbit".into()))?;
            size += 1;
            cur = step(&cur);
        }
        let average = BigRational::new(BigInt::from(sum), BigInt::from(size));
        records.push(OrbitRecord {
            size,
            sum,
            average,
            representative: seed.clone(),
        });
    }
    Ok(records)
}

/// Orbit census of an ideal action over the whole ideal lattice.
pub fn ideal_census<F>(
    p: &RankedPoset,
    action: F,
    statistic: &PosetStatistic,
    cap: u64,
    threads: usize,
) -> Result<Census<OrderIdeal>>
where
    F: Fn(OrderIdeal) -> OrderIdeal + Sync,
{
    if statistic.weights.len() != p.len() {
        return Err(Error::Validation(format!(
            "statistic has {} weights for a poset of {} elements",
            statistic.weights.len(),
            p.len()
        )));
    }
    let states = p.enumerate_ideals(cap)?;
    census_states(&states, &|i: &OrderIdeal| action(*i), &|i: &OrderIdeal| statistic.value(*i), threads)
}

/// Orbit census of K-promotion on `Inc^q(rows x cols)`, scoring the entry
/// sum over a cell set.
pub fn tableau_census(
    rows: usize,
    cols: usize,
    q: u32,
    cells: &CellSet,
    cap: u64,
    threads: usize,
) -> Result<Census<IncreasingTableau>> {
    if cells.rows() != rows || cells.cols() != cols {
        return Err(Error::Validation(
            "cell set shape does not match the tableau shape".into(),
        ));
    }
    let states = match crate::tableaux::enumerate_tableaux_via_ideals(rows, cols, q, cap)? {
        Some(ts) => ts,
        None => crate::tableaux::enumerate_tableaux(rows, cols, q, cap)?,
    };
    let step = |t: &IncreasingTableau| {
        k_promotion(t).expect("K-promotion is total on increasing tableaux")
    };
    let weight =
        |t: &IncreasingTableau| crate::tableaux::sigma(t, cells).expect("shapes already checked");
    census_states(&states, &step, &weight, threads)
}

/// Decides homomesy for a census: homomesic exactly when a single average
/// occurs; otherwise reports the first two differing orbits.
pub fn verdict<S: Clone>(census: &Census<S>) -> Result<HomomesyVerdict<S>> {
    let first = census
        .records
        .first()
        .ok_or_else(|| Error::Validation("census has no orbits".into()))?;
    match census
        .records
        .iter()
        .find(|r| r.average != first.average)
    {
        None => Ok(HomomesyVerdict {
            homomesic: true,
            constant: Some(first.average.clone()),
            witness: None,
        }),
        Some(other) => Ok(HomomesyVerdict {
            homomesic: false,
            constant: None,
            witness: Some((first.clone(), other.clone())),
        }),
    }
}

/// Report JSON for one census, matching the documented schema:
/// averages are reduced fraction strings such as `"18"` or `"161/9"`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Report {
    pub poset: String,
    pub action: ActionDescription,
    pub statistic: String,
    pub orbits: Vec<OrbitReport>,
    pub aggregate: BTreeMap<String, u64>,
    pub homomesic: bool,
    pub c: Option<String>,
    pub witness: Option<Vec<OrbitReport>>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ActionDescription {
    pub v: Vec<i8>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct OrbitReport {
    pub size: u64,
    pub sum: i64,
    pub avg: String,
}

impl Report {
    pub fn build<S: Clone>(
        poset: impl Into<String>,
        direction: Option<&DirectionVector>,
        statistic: impl Into<String>,
        census: &Census<S>,
        verdict: &HomomesyVerdict<S>,
    ) -> Self {
        let orbit_report = |r: &OrbitRecord<S>| OrbitReport {
            size: r.size,
            sum: r.sum,
            avg: rational_string(&r.average),
        };
        Report {
            poset: poset.into(),
            action: ActionDescription {
                v: direction.map(|d| d.signs().to_vec()).unwrap_or_default(),
            },
            statistic: statistic.into(),
            orbits: census.records.iter().map(orbit_report).collect(),
            aggregate: census
                .aggregate
                .iter()
                .map(|(avg, count)| (rational_string(avg), *count))
                .collect(),
            homomesic: verdict.homomesic,
            c: verdict.constant.as_ref().map(rational_string),
            witness: verdict
                .witness
                .as_ref()
                .map(|(a, b)| vec![orbit_report(a), orbit_report(b)]),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{promotion_word, rowmotion};

    fn aggregate_of(census: &Census<OrderIdeal>) -> Vec<(String, u64)> {
        census
            .aggregate
            .iter()
            .map(|(r, c)| (rational_string(r), *c))
            .collect()
    }

    #[test]
    fn single_element_poset_average_is_one_half() {
        let p = RankedPoset::chain_product(&[1]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        let census = ideal_census(&p, |i| rowmotion(&p, i), &stat, 100, 1).unwrap();
        let v = verdict(&census).unwrap();
        assert!(v.homomesic);
        assert_eq!(v.constant.unwrap(), rational(1, 2));
    }

    #[test]
    fn square_census_under_rowmotion() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        let census = ideal_census(&p, |i| rowmotion(&p, i), &stat, 100, 1).unwrap();
        let mut sizes: Vec<u64> = census.records.iter().map(|r| r.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(aggregate_of(&census), vec![("2".to_string(), 2)]);
        let v = verdict(&census).unwrap();
        assert!(v.homomesic);
        assert_eq!(v.constant.unwrap(), rational(2, 1));
    }

    #[test]
    fn census_totals_match_state_count() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        for v in DirectionVector::all(3) {
            let word = promotion_word(&p, &v).unwrap();
            let census = ideal_census(&p, |i| word.apply(&p, i), &stat, 1 << 20, 1).unwrap();
            assert_eq!(
                census.total_states,
                p.enumerate_ideals(1 << 20).unwrap().len() as u64
            );
            let sizes: u64 = census.records.iter().map(|r| r.size).sum();
            assert_eq!(sizes, census.total_states);
        }
    }

    #[test]
    fn homomesic_constant_equals_global_average() {
        // When homomesic, the orbit constant must equal the global average.
        let p = RankedPoset::chain_product(&[2, 3, 4]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        let word = promotion_word(&p, &DirectionVector::ones(3)).unwrap();
        let census = ideal_census(&p, |i| word.apply(&p, i), &stat, 1 << 20, 1).unwrap();
        let v = verdict(&census).unwrap();
        assert!(v.homomesic);
        let global_sum: i64 = census.records.iter().map(|r| r.sum).sum();
        let global = BigRational::new(BigInt::from(global_sum), BigInt::from(census.total_states));
        assert_eq!(v.constant.unwrap(), global);
    }

    #[test]
    fn parallel_census_is_identical() {
        let p = RankedPoset::chain_product(&[2, 2, 2, 2]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        let word = promotion_word(&p, &DirectionVector::ones(4)).unwrap();
        let single = ideal_census(&p, |i| word.apply(&p, i), &stat, 1 << 20, 1).unwrap();
        let multi = ideal_census(&p, |i| word.apply(&p, i), &stat, 1 << 20, 4).unwrap();
        assert_eq!(single.aggregate, multi.aggregate);
        assert_eq!(single.records.len(), multi.records.len());
        for (a, b) in single.records.iter().zip(&multi.records) {
            assert_eq!(a.representative, b.representative);
            assert_eq!(a.size, b.size);
            assert_eq!(a.sum, b.sum);
        }
    }

    #[test]
    fn column_statistic_full_set_is_cardinality() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let mut pairs = Vec::new();
        for j in 1..=2 {
            for k in 1..=3 {
                pairs.push((j, k));
            }
        }
        let stat = PosetStatistic::columns(&p, &pairs).unwrap();
        assert_eq!(stat.weights, PosetStatistic::cardinality(&p).weights);
    }

    #[test]
    fn column_statistic_validates_range() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        assert!(PosetStatistic::columns(&p, &[(3, 1)]).is_err());
        assert!(PosetStatistic::columns(&p, &[(1, 0)]).is_err());
        let q = RankedPoset::chain_product(&[2, 2]).unwrap();
        assert!(PosetStatistic::columns(&q, &[(1, 1)]).is_err());
    }

    #[test]
    fn rotation_symmetry_of_pairs() {
        assert!(pairs_rotationally_symmetric(&[(1, 1), (2, 3)], 2, 3));
        assert!(!pairs_rotationally_symmetric(&[(1, 1)], 2, 3));
        assert!(pairs_rotationally_symmetric(&[(1, 2), (2, 2)], 2, 3));
    }

    #[test]
    fn non_homomesic_census_reports_witness() {
        // The 3 x 3 x 4 box under rowmotion is the canonical counterexample.
        let p = RankedPoset::chain_product(&[3, 3, 4]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        let census = ideal_census(&p, |i| rowmotion(&p, i), &stat, 1 << 20, 1).unwrap();
        let v = verdict(&census).unwrap();
        assert!(!v.homomesic);
        let (a, b) = v.witness.unwrap();
        assert_ne!(a.average, b.average);
    }

    #[test]
    fn empty_census_is_an_error() {
        let census: Census<OrderIdeal> = Census {
            records: vec![],
            aggregate: BTreeMap::new(),
            total_states: 0,
        };
        assert!(matches!(verdict(&census), Err(Error::Validation(_))));
    }

    #[test]
    fn tableau_census_single_cell() {
        // Inc^3(1 x 1) cycles 1 -> 3 -> 2 -> 1: one orbit, average 2.
        let census = tableau_census(1, 1, 3, &CellSet::full(1, 1), 1 << 10, 1).unwrap();
        assert_eq!(census.records.len(), 1);
        assert_eq!(census.records[0].size, 3);
        let v = verdict(&census).unwrap();
        assert_eq!(v.constant.unwrap(), rational(2, 1));
    }

    #[test]
    fn report_serializes_fraction_strings() {
        let p = RankedPoset::chain_product(&[3, 3, 4]).unwrap();
        let stat = PosetStatistic::cardinality(&p);
        let dir = DirectionVector::ones(3);
        let word = promotion_word(&p, &dir).unwrap();
        let census = ideal_census(&p, |i| word.apply(&p, i), &stat, 1 << 20, 1).unwrap();
        let v = verdict(&census).unwrap();
        let report = Report::build(p.name(), Some(&dir), &stat.name, &census, &v);
        let json = report.to_json().unwrap();
        assert!(json.contains("\"161/9\""));
        assert!(json.contains("\"18\""));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["homomesic"], serde_json::Value::Bool(false));
        assert!(parsed["witness"].is_array());
    }
}
