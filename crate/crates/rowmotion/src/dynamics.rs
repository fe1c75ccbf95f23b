//! Rowmotion, hyperplane-sweep promotion, layer-ordered promotion, the
//! conjugating toggle word, and orbit enumeration.
//!
//! Toggle words follow composition order: the *rightmost* factor acts first,
//! as in a product of functions. Promotion with respect to a direction
//! vector `v` toggles the affine hyperplanes `<pi(x), v> = i` for `i`
//! descending; toggles on a common hyperplane commute, so the fixed
//! within-hyperplane order (ascending element index) is only for
//! reproducibility.

use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, RankedPoset};

/// A +-1 vector selecting a promotion variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectionVector(Vec<i8>);

impl DirectionVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Validation("direction vector is empty".into()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Validation(
                "direction vector entries must be +1 or -1".into(),
            ));
        }
        Ok(DirectionVector(signs))
    }

    /// The all-ones direction, whose promotion is rowmotion.
    pub fn ones(dimension: usize) -> Self {
        DirectionVector(vec![1; dimension])
    }

    /// Parses a comma-separated list such as `1,-1,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let signs = text
            .split(',')
            .map(|t| t.trim().parse::<i8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Validation(format!("cannot parse direction vector `{text}`")))?;
        Self::new(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn sign(&self, axis: usize) -> i8 {
        self.0[axis]
    }

    /// The vector with every sign reversed.
    pub fn negated(&self) -> Self {
        DirectionVector(self.0.iter().map(|s| -s).collect())
    }

    /// The vector with the sign at one axis flipped.
    pub fn flipped(&self, axis: usize) -> Self {
        let mut v = self.0.clone();
        v[axis] = -v[axis];
        DirectionVector(v)
    }

    /// The reduced vector with one axis removed.
    pub fn without_axis(&self, axis: usize) -> Vec<i8> {
        let mut v = self.0.clone();
        v.remove(axis);
        v
    }

    /// All `2^n` direction vectors of a given dimension, in a fixed order.
    pub fn all(dimension: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(1 << dimension);
        for mask in 0..(1u32 << dimension) {
            let signs = (0..dimension)
                .map(|d| if mask >> d & 1 == 0 { 1 } else { -1 })
                .collect();
            out.push(DirectionVector(signs));
        }
        out
    }

    fn check_dimension(&self, p: &RankedPoset) -> Result<()> {
        if self.len() != p.dimension() {
            return Err(Error::Validation(format!(
                "direction vector has length {} but the projection dimension is {}",
                self.len(),
                p.dimension()
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for DirectionVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A word in the toggle group, stored in composition order: the last factor
/// acts first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToggleWord {
    factors: Vec<u32>,
}

impl ToggleWord {
    pub fn identity() -> Self {
        ToggleWord { factors: Vec::new() }
    }

    /// Builds a word from the order in which toggles are applied.
    pub fn from_application_order(mut applied: Vec<u32>) -> Self {
        applied.reverse();
        ToggleWord { factors: applied }
    }

    pub fn from_composition_order(factors: Vec<u32>) -> Self {
        ToggleWord { factors }
    }

    /// Factors in composition order (rightmost acts first).
    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// Element indices in the order they act.
    pub fn application_order(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The inverse word; toggles are involutions, so this is the reversal.
    pub fn inverse(&self) -> Self {
        let mut factors = self.factors.clone();
        factors.reverse();
        ToggleWord { factors }
    }

    /// `self` composed after `first`: `first` acts, then `self`.
    pub fn after(&self, first: &ToggleWord) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&first.factors);
        ToggleWord { factors }
    }

    pub fn apply(&self, p: &RankedPoset, ideal: OrderIdeal) -> OrderIdeal {
        let mut cur = ideal;
        for &e in self.factors.iter().rev() {
            cur = p.toggle_unchecked(cur, e as usize);
        }
        cur
    }

    /// Validates that the word toggles each element exactly once, from the
    /// top of the poset down (a linear extension read left to right from the
    /// minimum).
    pub fn validate_linear_extension(&self, p: &RankedPoset) -> Result<()> {
        if self.factors.len() != p.len() {
            return Err(Error::Validation(format!(
                "linear extension must contain each of the {} elements exactly once",
                p.len()
            )));
        }
        let mut pos = vec![usize::MAX; p.len()];
        for (k, &e) in self.factors.iter().enumerate() {
            let e = e as usize;
            if e >= p.len() {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    count: p.len(),
                });
            }
            if pos[e] != usize::MAX {
                return Err(Error::Validation(format!(
                    "element {} appears twice in the extension",
                    p.label(e)
                )));
            }
            pos[e] = k;
        }
        for &(lo, hi) in p.covers() {
            if pos[lo as usize] > pos[hi as usize] {
                return Err(Error::Validation(format!(
                    "not a linear extension: {} listed after {}",
                    p.label(lo as usize),
                    p.label(hi as usize)
                )));
            }
        }
        Ok(())
    }
}

/// Rowmotion by its definition: the ideal generated by the minimal elements
/// of the complement. This route is kept independent of the toggle machinery
/// so the two can check each other.
pub fn rowmotion(p: &RankedPoset, ideal: OrderIdeal) -> OrderIdeal {
    let bits = ideal.bits();
    let mut minimals = 0u128;
    for e in 0..p.len() {
        let mask = {
            let mut m = 0u128;
            for &c in p.lower_covers(e) {
                m |= 1u128 << c;
            }
            m
        };
        if bits >> e & 1 == 0 && bits & mask == mask {
            minimals |= 1u128 << e;
        }
    }
    OrderIdeal::from_bits(p.down_closure(minimals))
}

/// The canonical rowmotion toggle word: the fixed linear extension, toggled
/// top to bottom.
pub fn rowmotion_word(p: &RankedPoset) -> ToggleWord {
    ToggleWord::from_composition_order(p.linear_extension())
}

/// Applies rowmotion along a caller-supplied linear extension. Any linear
/// extension gives the same map.
pub fn rowmotion_by_linear_extension(
    p: &RankedPoset,
    ideal: OrderIdeal,
    extension: &ToggleWord,
) -> Result<OrderIdeal> {
    extension.validate_linear_extension(p)?;
    Ok(extension.apply(p, ideal))
}

/// The hyperplane-sweep promotion word for a direction vector: toggles the
/// slices `<pi(x), v> = i` for `i` descending.
pub fn promotion_word(p: &RankedPoset, v: &DirectionVector) -> Result<ToggleWord> {
    v.check_dimension(p)?;
    Ok(sweep_word(p, v, false))
}

#[doc(hidden)]
/// Deliberately mis-ordered sweep (the first two hyperplane slices are
/// swapped); exists only so the verification suite can prove its own checks
/// would catch a wrong toggle order.
pub fn promotion_word_scrambled(p: &RankedPoset, v: &DirectionVector) -> Result<ToggleWord> {
    v.check_dimension(p)?;
    Ok(sweep_word(p, v, true))
}

fn sweep_word(p: &RankedPoset, v: &DirectionVector, swap_first_two: bool) -> ToggleWord {
    let mut groups: std::collections::BTreeMap<i64, Vec<u32>> = std::collections::BTreeMap::new();
    for e in 0..p.len() {
        let d = p.coords(e).dot(v.signs());
        groups.entry(d).or_default().push(e as u32);
    }
    let mut ordered: Vec<Vec<u32>> = groups.into_values().rev().collect();
    if swap_first_two && ordered.len() >= 2 {
        ordered.swap(0, 1);
    }
    ToggleWord::from_application_order(ordered.into_iter().flatten().collect())
}

/// Applies `Pro_v` to one ideal.
pub fn promotion_sweep(p: &RankedPoset, v: &DirectionVector, ideal: OrderIdeal) -> Result<OrderIdeal> {
    Ok(promotion_word(p, v)?.apply(p, ideal))
}

/// The layers of the projection along one axis: elements grouped by their
/// coordinate on that axis. Values are renumbered consecutively from the
/// smallest occurring coordinate, so layer `j` (1-based) is
/// `values[j - 1]`.
#[derive(Debug, Clone)]
pub struct LayerDecomposition {
    pub axis: usize,
    /// Occurring axis values, ascending.
    pub values: Vec<i64>,
    /// Element indices per value, ascending within each layer.
    pub layers: Vec<Vec<u32>>,
}

pub fn layer_decomposition(p: &RankedPoset, axis: usize) -> Result<LayerDecomposition> {
    if axis >= p.dimension() {
        return Err(Error::IndexOutOfRange {
            index: axis,
            count: p.dimension(),
        });
    }
    let mut groups: std::collections::BTreeMap<i64, Vec<u32>> = std::collections::BTreeMap::new();
    for e in 0..p.len() {
        groups.entry(p.coords(e).entry(axis)).or_default().push(e as u32);
    }
    let (values, layers) = groups.into_iter().unzip();
    Ok(LayerDecomposition { axis, values, layers })
}

impl LayerDecomposition {
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }
}

/// The sweep word of the reduced promotion `Pro_{v*}` restricted to one
/// layer, in application order.
fn layer_promotion_application(
    p: &RankedPoset,
    v: &DirectionVector,
    axis: usize,
    layer_elements: &[u32],
) -> Vec<u32> {
    let reduced = v.without_axis(axis);
    let mut groups: std::collections::BTreeMap<i64, Vec<u32>> = std::collections::BTreeMap::new();
    for &e in layer_elements {
        let c = p.coords(e as usize).without_axis(axis);
        let d: i64 = c.iter().zip(&reduced).map(|(&x, &s)| x * i64::from(s)).sum();
        groups.entry(d).or_default().push(e);
    }
    groups.into_values().rev().flatten().collect()
}

/// The promotion word reassembled layer by layer: each layer receives the
/// reduced `(n-1)`-dimensional promotion, with layers ordered top-down when
/// the axis sign is `+1` and bottom-up when it is `-1`. Equals the
/// hyperplane sweep for every axis.
pub fn layered_promotion_word(
    p: &RankedPoset,
    v: &DirectionVector,
    axis: usize,
) -> Result<ToggleWord> {
    v.check_dimension(p)?;
    let decomposition = layer_decomposition(p, axis)?;
    let mut layer_order: Vec<usize> = (0..decomposition.layer_count()).collect();
    if v.sign(axis) == 1 {
        layer_order.reverse();
    }
    let mut applied = Vec::with_capacity(p.len());
    for j in layer_order {
        applied.extend(layer_promotion_application(p, v, axis, &decomposition.layers[j]));
    }
    Ok(ToggleWord::from_application_order(applied))
}

/// Applies the layer-ordered promotion to one ideal.
pub fn promotion_by_layers(
    p: &RankedPoset,
    v: &DirectionVector,
    axis: usize,
    ideal: OrderIdeal,
) -> Result<OrderIdeal> {
    Ok(layered_promotion_word(p, v, axis)?.apply(p, ideal))
}

/// The toggle word conjugating `Pro_v` into the promotion with the sign at
/// `axis` flipped: with `w = v` flipped at `axis`,
/// `Pro_v = D^{-1} . Pro_w . D` where `D` is the returned word.
///
/// Requires the sign at `axis` to be `+1`. With `m` layers along the axis,
/// the word is the product over `i = 1..m-1` of the inverted reduced
/// promotions on layers `i, i-1, ..., 1`; the bound `m` is the axis extent,
/// which is the only reading under which the conjugation identity holds (the
/// identity is verified exhaustively in the tests).
pub fn conjugator(p: &RankedPoset, v: &DirectionVector, axis: usize) -> Result<ToggleWord> {
    v.check_dimension(p)?;
    if axis >= p.dimension() {
        return Err(Error::IndexOutOfRange {
            index: axis,
            count: p.dimension(),
        });
    }
    if v.sign(axis) != 1 {
        return Err(Error::Validation(
            "conjugator requires the sign +1 on the chosen axis".into(),
        ));
    }
    let decomposition = layer_decomposition(p, axis)?;
    let m = decomposition.layer_count();
    let layer_words: Vec<Vec<u32>> = decomposition
        .layers
        .iter()
        .map(|layer| layer_promotion_application(p, v, axis, layer))
        .collect();
    // Application order: the written product's rightmost block (i = m-1)
    // acts first; within a block the inverted layer promotions act on layers
    // 1, 2, ..., i, each inversion reversing its sweep.
    let mut applied = Vec::new();
    for i in (1..m).rev() {
        for layer_word in layer_words.iter().take(i) {
            applied.extend(layer_word.iter().rev().copied());
        }
    }
    Ok(ToggleWord::from_application_order(applied))
}

/// The forward orbit of an ideal under a bijective action: the cyclic
/// sequence starting at `start`, ending just before `start` recurs.
pub fn orbit<F>(step: F, start: OrderIdeal, cap: u64) -> Result<Vec<OrderIdeal>>
where
    F: Fn(OrderIdeal) -> OrderIdeal,
{
    let mut out = vec![start];
    let mut cur = step(start);
    while cur != start {
        if out.len() as u64 >= cap {
            return Err(Error::Internal(format!(
                "orbit exceeded {cap} states; the action is not a bijection on the ideal lattice"
            )));
        }
        out.push(cur);
        cur = step(cur);
    }
    Ok(out)
}

/// Partitions the whole ideal lattice into orbits. Orbits are keyed (and
/// begin) at their least member under the bitset order, and are returned
/// sorted by that representative.
pub fn all_orbits<F>(p: &RankedPoset, step: F, cap: u64) -> Result<Vec<Vec<OrderIdeal>>>
where
    F: Fn(OrderIdeal) -> OrderIdeal,
{
    let ideals = p.enumerate_ideals(cap)?;
    let total = ideals.len() as u64;
    let mut orbits = Vec::new();
    let mut covered = 0u64;
    for &seed in &ideals {
        // Ownership by least member: walk the orbit and keep it only when the
        // seed is the minimum, so every orbit is emitted exactly once.
        let mut members = vec![seed];
        let mut cur = step(seed);
        let mut owned = true;
        while cur != seed {
            if cur < seed {
                owned = false;
                break;
            }
            if members.len() as u64 > total {
                return Err(Error::Internal(
                    "orbit escaped the ideal lattice; the action is not a bijection".into(),
                ));
            }
            members.push(cur);
            cur = step(cur);
        }
        if owned {
            covered += members.len() as u64;
            orbits.push(members);
        }
    }
    if covered != total {
        return Err(Error::Internal(
            "orbits do not partition the ideal lattice".into(),
        ));
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::chain_index;

    fn ideals(p: &RankedPoset) -> Vec<OrderIdeal> {
        p.enumerate_ideals(1 << 20).unwrap()
    }

    #[test]
    fn rowmotion_square_orbit() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let at = |c: &[i64]| chain_index(&[2, 2], c);
        let empty = OrderIdeal::EMPTY;
        let step1 = rowmotion(&p, empty);
        assert_eq!(step1, p.ideal_from_members(&[at(&[1, 1])]).unwrap());
        let step2 = rowmotion(&p, step1);
        assert_eq!(
            step2,
            p.ideal_from_members(&[at(&[1, 1]), at(&[1, 2]), at(&[2, 1])]).unwrap()
        );
        let step3 = rowmotion(&p, step2);
        assert_eq!(step3, p.full_ideal());
        assert_eq!(rowmotion(&p, step3), empty);

        let o = orbit(|i| rowmotion(&p, i), empty, 100).unwrap();
        assert_eq!(o.len(), 4);

        let two = p
            .ideal_from_members(&[at(&[1, 1]), at(&[1, 2])])
            .unwrap();
        let image = rowmotion(&p, two);
        assert_eq!(
            image,
            p.ideal_from_members(&[at(&[1, 1]), at(&[2, 1])]).unwrap()
        );
        assert_eq!(orbit(|i| rowmotion(&p, i), two, 100).unwrap().len(), 2);
    }

    #[test]
    fn rowmotion_of_full_ideal_is_empty() {
        for dims in [vec![3, 2], vec![2, 2, 2]] {
            let p = RankedPoset::chain_product(&dims).unwrap();
            assert_eq!(rowmotion(&p, p.full_ideal()), OrderIdeal::EMPTY);
        }
    }

    #[test]
    fn linear_extensions_agree_with_generators() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        // The diamond has exactly two linear extensions.
        let at = |c: &[i64]| chain_index(&[2, 2], c) as u32;
        let ext_a = ToggleWord::from_composition_order(vec![
            at(&[1, 1]),
            at(&[1, 2]),
            at(&[2, 1]),
            at(&[2, 2]),
        ]);
        let ext_b = ToggleWord::from_composition_order(vec![
            at(&[1, 1]),
            at(&[2, 1]),
            at(&[1, 2]),
            at(&[2, 2]),
        ]);
        for i in ideals(&p) {
            let expect = rowmotion(&p, i);
            assert_eq!(rowmotion_by_linear_extension(&p, i, &ext_a).unwrap(), expect);
            assert_eq!(rowmotion_by_linear_extension(&p, i, &ext_b).unwrap(), expect);
        }
    }

    #[test]
    fn canonical_word_is_rowmotion() {
        for dims in [vec![3, 3], vec![2, 3, 2]] {
            let p = RankedPoset::chain_product(&dims).unwrap();
            let word = rowmotion_word(&p);
            word.validate_linear_extension(&p).unwrap();
            for i in ideals(&p) {
                assert_eq!(word.apply(&p, i), rowmotion(&p, i));
            }
        }
    }

    #[test]
    fn rejects_non_extension() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let bad = ToggleWord::from_composition_order(vec![3, 2, 1, 0]);
        assert!(matches!(
            rowmotion_by_linear_extension(&p, OrderIdeal::EMPTY, &bad),
            Err(Error::Validation(_))
        ));
        let short = ToggleWord::from_composition_order(vec![0, 1]);
        assert!(short.validate_linear_extension(&p).is_err());
    }

    #[test]
    fn all_ones_promotion_is_rowmotion() {
        for dims in [vec![2, 3], vec![2, 2, 2]] {
            let p = RankedPoset::chain_product(&dims).unwrap();
            let v = DirectionVector::ones(p.dimension());
            for i in ideals(&p) {
                assert_eq!(promotion_sweep(&p, &v, i).unwrap(), rowmotion(&p, i));
            }
        }
    }

    #[test]
    fn negated_promotion_is_inverse() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        for v in DirectionVector::all(3) {
            let back = v.negated();
            for i in ideals(&p) {
                let there = promotion_sweep(&p, &v, i).unwrap();
                assert_eq!(promotion_sweep(&p, &back, there).unwrap(), i);
            }
        }
    }

    #[test]
    fn promotion_orbit_lengths_divide_perimeter() {
        for (a, b) in [(2usize, 2usize), (2, 3), (3, 3), (3, 4)] {
            let p = RankedPoset::chain_product(&[a, b]).unwrap();
            let v = DirectionVector::new(vec![1, -1]).unwrap();
            let word = promotion_word(&p, &v).unwrap();
            for o in all_orbits(&p, |i| word.apply(&p, i), 1 << 20).unwrap() {
                assert_eq!((a + b) % o.len(), 0, "a={a} b={b} len={}", o.len());
            }
        }
    }

    #[test]
    fn layered_promotion_matches_sweep() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let all = ideals(&p);
        for v in DirectionVector::all(3) {
            let sweep = promotion_word(&p, &v).unwrap();
            for axis in 0..3 {
                let layered = layered_promotion_word(&p, &v, axis).unwrap();
                for &i in &all {
                    assert_eq!(
                        layered.apply(&p, i),
                        sweep.apply(&p, i),
                        "v={v} axis={axis}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_layer_axis_reduces_to_sweep() {
        // Axis of extent 1: the layered form is a single reduced promotion.
        let p = RankedPoset::chain_product(&[1, 3]).unwrap();
        let v = DirectionVector::new(vec![1, -1]).unwrap();
        let layered = layered_promotion_word(&p, &v, 0).unwrap();
        let sweep = promotion_word(&p, &v).unwrap();
        for i in ideals(&p) {
            assert_eq!(layered.apply(&p, i), sweep.apply(&p, i));
        }
    }

    #[test]
    fn conjugator_identity_small_grid() {
        let p = RankedPoset::chain_product(&[2, 3]).unwrap();
        let v = DirectionVector::ones(2);
        let d = conjugator(&p, &v, 0).unwrap();
        let w = v.flipped(0);
        let pro_v = promotion_word(&p, &v).unwrap();
        let pro_w = promotion_word(&p, &w).unwrap();
        for i in ideals(&p) {
            let lhs = pro_v.apply(&p, i);
            let rhs = d.inverse().apply(&p, pro_w.apply(&p, d.apply(&p, i)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conjugator_identity_cube_all_axes() {
        let p = RankedPoset::chain_product(&[2, 2, 2]).unwrap();
        assert_eq!(ideals(&p).len(), 20);
        for v in DirectionVector::all(3) {
            for axis in 0..3 {
                if v.sign(axis) != 1 {
                    assert!(conjugator(&p, &v, axis).is_err());
                    continue;
                }
                let d = conjugator(&p, &v, axis).unwrap();
                let w = v.flipped(axis);
                let pro_v = promotion_word(&p, &v).unwrap();
                let pro_w = promotion_word(&p, &w).unwrap();
                for i in ideals(&p) {
                    let lhs = pro_v.apply(&p, i);
                    let rhs = d.inverse().apply(&p, pro_w.apply(&p, d.apply(&p, i)));
                    assert_eq!(lhs, rhs, "v={v} axis={axis}");
                }
            }
        }
    }

    #[test]
    fn conjugator_empty_on_single_layer() {
        let p = RankedPoset::chain_product(&[1, 3]).unwrap();
        let v = DirectionVector::ones(2);
        assert!(conjugator(&p, &v, 0).unwrap().is_empty());
    }

    #[test]
    fn orbit_of_identity_action() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let o = orbit(|i| i, p.full_ideal(), 10).unwrap();
        assert_eq!(o.len(), 1);
    }

    #[test]
    fn orbit_guard_detects_non_bijection() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let sink = p.full_ideal();
        let res = orbit(move |_| sink, OrderIdeal::EMPTY, 100);
        assert!(matches!(res, Err(Error::Internal(_))));
    }

    #[test]
    fn row_orbit_census_on_square() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let orbits = all_orbits(&p, |i| rowmotion(&p, i), 100).unwrap();
        let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn orbit_censuses_agree_across_directions() {
        let p = RankedPoset::chain_product(&[2, 2, 3]).unwrap();
        let mut censuses = Vec::new();
        for v in DirectionVector::all(3) {
            let word = promotion_word(&p, &v).unwrap();
            let mut sizes: Vec<usize> = all_orbits(&p, |i| word.apply(&p, i), 1 << 20)
                .unwrap()
                .iter()
                .map(Vec::len)
                .collect();
            sizes.sort_unstable();
            censuses.push(sizes);
        }
        for c in &censuses[1..] {
            assert_eq!(c, &censuses[0]);
        }
    }
}
