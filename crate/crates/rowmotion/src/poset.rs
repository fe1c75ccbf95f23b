//! Ranked posets with integer lattice projections, and their order ideals.
//!
//! A [`RankedPoset`] stores its elements together with a projection into the
//! integer grid `Z^n`. The projection is *order preserving* (covers step by a
//! unit vector in one coordinate) and *rank preserving* (rank equals the
//! coordinate sum up to a constant offset). For a product of chains the
//! projection is the identity embedding; other posets, such as the type B
//! minuscule poset, carry an explicit projection and the projection need not
//! be injective.
//!
//! Order ideals are fixed-width bitsets ([`OrderIdeal`] wraps a `u128`), so a
//! poset may have at most [`MAX_ELEMENTS`] elements. All types are immutable
//! after construction and all operations are pure functions, so everything
//! here is safe to share across threads.

use crate::error::{Error, Result};

/// Hard cap on poset size: ideal membership is a 128-bit word.
pub const MAX_ELEMENTS: usize = 128;

/// 1-based grid coordinates of a poset element under the lattice projection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordVector(Vec<i64>);

impl CoordVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimensions("coordinate vector is empty".into()));
        }
        if let Some(bad) = entries.iter().find(|&&c| c < 1) {
            return Err(Error::Validation(format!(
                "coordinate entries must be >= 1, found {bad}"
            )));
        }
        Ok(CoordVector(entries))
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn entry(&self, axis: usize) -> i64 {
        self.0[axis]
    }

    /// Coordinate sum; the rank function of the grid.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Signed dot product with a +-1 direction vector.
    pub fn dot(&self, signs: &[i8]) -> i64 {
        self.0
            .iter()
            .zip(signs)
            .map(|(&c, &s)| c * i64::from(s))
            .sum()
    }

    /// The vector with one axis removed.
    pub fn without_axis(&self, axis: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        v.remove(axis);
        v
    }
}

impl std::fmt::Display for CoordVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A downward-closed subset of a fixed poset, as a membership bitset.
///
/// Bit `i` is element `i`; the derived `Ord` (numeric order on the backing
/// `u128`) is the canonical total order used to pick orbit representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrderIdeal(u128);

impl OrderIdeal {
    pub const EMPTY: OrderIdeal = OrderIdeal(0);

    pub fn from_bits(bits: u128) -> Self {
        OrderIdeal(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, element: usize) -> bool {
        self.0 >> element & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Member element indices in increasing order.
    pub fn members(self) -> Members {
        Members(self.0)
    }
}

pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

/// A finite ranked poset with an n-dimensional lattice projection.
#[derive(Debug, Clone)]
pub struct RankedPoset {
    name: String,
    labels: Vec<String>,
    coords: Vec<CoordVector>,
    dimension: usize,
    covers: Vec<(u32, u32)>,
    lower_covers: Vec<Vec<u32>>,
    upper_covers: Vec<Vec<u32>>,
    lower_mask: Vec<u128>,
    upper_mask: Vec<u128>,
    /// Strictly-below sets, as bitsets.
    below: Vec<u128>,
    ranks: Vec<i64>,
    /// Chain lengths when this poset is a full chain product.
    dims: Option<Vec<usize>>,
}

impl RankedPoset {
    /// Builds a validated poset from labels, projected coordinates, and order
    /// relations. Relations may be any generating set of the order; the cover
    /// relation is recomputed as the transitive reduction.
    pub fn from_parts(
        name: impl Into<String>,
        labels: Vec<String>,
        coords: Vec<CoordVector>,
        relations: &[(usize, usize)],
        dims: Option<Vec<usize>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Schema {
                message: "poset has no elements".into(),
                offenders: vec![],
            });
        }
        if n > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded {
                cap: MAX_ELEMENTS as u64,
            });
        }
        if coords.len() != n {
            return Err(Error::Schema {
                message: format!("{} labels but {} coordinate vectors", n, coords.len()),
                offenders: vec![],
            });
        }
        let dimension = coords[0].dimension();
        for (i, c) in coords.iter().enumerate() {
            if c.dimension() != dimension {
                return Err(Error::Schema {
                    message: format!(
                        "inconsistent projection dimension ({} vs {})",
                        c.dimension(),
                        dimension
                    ),
                    offenders: vec![labels[i].clone()],
                });
            }
        }
        {
            let mut seen = std::collections::HashSet::new();
            for (i, l) in labels.iter().enumerate() {
                if !seen.insert(l.clone()) {
                    return Err(Error::Schema {
                        message: "duplicate element id".into(),
                        offenders: vec![labels[i].clone()],
                    });
                }
            }
        }
        for &(lo, hi) in relations {
            for &e in [lo, hi].iter() {
                if e >= n {
                    return Err(Error::IndexOutOfRange { index: e, count: n });
                }
            }
        }

        // Topological order via Kahn; leftovers witness a cycle.
        let mut indeg = vec![0usize; n];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(lo, hi) in relations {
            if lo == hi {
                return Err(Error::Schema {
                    message: "cyclic relations".into(),
                    offenders: vec![labels[lo].clone()],
                });
            }
            succ[lo].push(hi);
            indeg[hi] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&e| indeg[e] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(e) = queue.pop() {
            topo.push(e);
            for &f in &succ[e] {
                indeg[f] -= 1;
                if indeg[f] == 0 {
                    queue.push(f);
                }
            }
        }
        if topo.len() != n {
            let offenders = (0..n)
                .filter(|&e| indeg[e] > 0)
                .map(|e| labels[e].clone())
                .collect();
            return Err(Error::Schema {
                message: "cyclic relations".into(),
                offenders,
            });
        }

        // Strictly-below bitsets, then the transitive reduction.
        let mut below = vec![0u128; n];
        for &e in &topo {
            for &f in &succ[e] {
                below[f] |= below[e] | (1u128 << e);
            }
        }
        let mut above = vec![0u128; n];
        for e in 0..n {
            let mut b = below[e];
            while b != 0 {
                let x = b.trailing_zeros() as usize;
                b &= b - 1;
                above[x] |= 1u128 << e;
            }
        }
        let mut covers: Vec<(u32, u32)> = Vec::new();
        for hi in 0..n {
            let mut b = below[hi];
            while b != 0 {
                let lo = b.trailing_zeros() as usize;
                b &= b - 1;
                if below[hi] & above[lo] == 0 {
                    covers.push((lo as u32, hi as u32));
                }
            }
        }
        covers.sort_unstable();

        // Every cover must project to a unit step; this single check makes the
        // projection order and rank preserving on the whole order.
        for &(lo, hi) in &covers {
            let a = coords[lo as usize].entries();
            let b = coords[hi as usize].entries();
            let mut unit_axes = 0;
            let mut ok = true;
            for d in 0..dimension {
                match b[d] - a[d] {
                    0 => {}
                    1 => unit_axes += 1,
                    _ => ok = false,
                }
            }
            if !ok || unit_axes != 1 {
                return Err(Error::Schema {
                    message: "projection is not order and rank preserving across a cover".into(),
                    offenders: vec![
                        labels[lo as usize].clone(),
                        labels[hi as usize].clone(),
                    ],
                });
            }
        }

        let mut lower_covers: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut upper_covers: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut lower_mask = vec![0u128; n];
        let mut upper_mask = vec![0u128; n];
        for &(lo, hi) in &covers {
            lower_covers[hi as usize].push(lo);
            upper_covers[lo as usize].push(hi);
            lower_mask[hi as usize] |= 1u128 << lo;
            upper_mask[lo as usize] |= 1u128 << hi;
        }

        let min_sum = coords.iter().map(CoordVector::sum).min().unwrap();
        let ranks = coords.iter().map(|c| c.sum() - min_sum).collect();

        Ok(RankedPoset {
            name: name.into(),
            labels,
            coords,
            dimension,
            covers,
            lower_covers,
            upper_covers,
            lower_mask,
            upper_mask,
            below,
            ranks,
            dims,
        })
    }

    /// The product of chains `[a_1] x ... x [a_n]` in its standard embedding.
    ///
    /// Elements are indexed in mixed-radix order with coordinate 1 slowest, so
    /// coordinate/index conversion is O(1) and layers are reproducible.
    pub fn chain_product(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidDimensions("no chain lengths given".into()));
        }
        if let Some(z) = dims.iter().position(|&a| a == 0) {
            return Err(Error::InvalidDimensions(format!(
                "chain length at position {} is zero",
                z + 1
            )));
        }
        let count: usize = dims.iter().product();
        if count > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded {
                cap: MAX_ELEMENTS as u64,
            });
        }
        let n_axes = dims.len();
        let mut labels = Vec::with_capacity(count);
        let mut coords = Vec::with_capacity(count);
        let mut relations = Vec::new();
        for idx in 0..count {
            let c = chain_coords(dims, idx);
            for (axis, &a) in dims.iter().enumerate() {
                if c[axis] < a as i64 {
                    let mut up = c.clone();
                    up[axis] += 1;
                    relations.push((idx, chain_index(dims, &up)));
                }
            }
            let cv = CoordVector::new(c)?;
            labels.push(cv.to_string());
            coords.push(cv);
        }
        let name = format!(
            "chain:{}",
            dims.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join("x")
        );
        let _ = n_axes;
        Self::from_parts(name, labels, coords, &relations, Some(dims.to_vec()))
    }

    /// The type B minuscule poset `B_n`: the left half of the `[n] x [n]`
    /// grid, i.e. the cells `(i, j)` with `j <= i`, under the inclusion
    /// projection into `Z^2`.
    pub fn type_b_minuscule(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimensions(
                "type B minuscule poset needs n >= 1".into(),
            ));
        }
        let mut labels = Vec::new();
        let mut coords = Vec::new();
        let mut index = std::collections::HashMap::new();
        for i in 1..=n as i64 {
            for j in 1..=i {
                index.insert((i, j), labels.len());
                let cv = CoordVector::new(vec![i, j])?;
                labels.push(cv.to_string());
                coords.push(cv);
            }
        }
        let mut relations = Vec::new();
        for (&(i, j), &e) in &index {
            if let Some(&f) = index.get(&(i + 1, j)) {
                relations.push((e, f));
            }
            if let Some(&f) = index.get(&(i, j + 1)) {
                relations.push((e, f));
            }
        }
        Self::from_parts(format!("minusculeB:{n}"), labels, coords, &relations, None)
    }

    /// The product of this poset with an `m`-element chain; the projection
    /// gains one final coordinate. Chain products stay chain products.
    pub fn product_with_chain(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDimensions("chain factor of length zero".into()));
        }
        if let Some(dims) = &self.dims {
            let mut d = dims.clone();
            d.push(m);
            return Self::chain_product(&d);
        }
        let count = self.len() * m;
        if count > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded {
                cap: MAX_ELEMENTS as u64,
            });
        }
        let mut labels = Vec::with_capacity(count);
        let mut coords = Vec::with_capacity(count);
        let mut relations = Vec::new();
        let idx = |p: usize, k: usize| p * m + k;
        for p in 0..self.len() {
            for k in 0..m {
                labels.push(format!("{}*{}", self.labels[p], k + 1));
                let mut c = self.coords[p].entries().to_vec();
                c.push(k as i64 + 1);
                coords.push(CoordVector::new(c)?);
                if k + 1 < m {
                    relations.push((idx(p, k), idx(p, k + 1)));
                }
            }
        }
        for &(lo, hi) in &self.covers {
            for k in 0..m {
                relations.push((idx(lo as usize, k), idx(hi as usize, k)));
            }
        }
        let name = format!("{}*chain:{}", self.name, m);
        Self::from_parts(name, labels, coords, &relations, None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Chain lengths, when the poset was built as a full chain product.
    pub fn dims(&self) -> Option<&[usize]> {
        self.dims.as_deref()
    }

    pub fn label(&self, element: usize) -> &str {
        &self.labels[element]
    }

    pub fn coords(&self, element: usize) -> &CoordVector {
        &self.coords[element]
    }

    pub fn rank(&self, element: usize) -> i64 {
        self.ranks[element]
    }

    /// Cover pairs `(lower, upper)`, the transitive reduction of the order.
    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn lower_covers(&self, element: usize) -> &[u32] {
        &self.lower_covers[element]
    }

    pub fn upper_covers(&self, element: usize) -> &[u32] {
        &self.upper_covers[element]
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Elements projecting to the given grid point. The projection need not
    /// be injective, so this may return several elements.
    pub fn elements_at(&self, point: &[i64]) -> Vec<usize> {
        (0..self.len())
            .filter(|&e| self.coords[e].entries() == point)
            .collect()
    }

    pub fn is_comparable(&self, a: usize, b: usize) -> bool {
        self.below[a] >> b & 1 == 1 || self.below[b] >> a & 1 == 1
    }

    /// True when neither element covers the other.
    pub fn is_cover_pair(&self, a: usize, b: usize) -> bool {
        self.lower_mask[a] >> b & 1 == 1 || self.lower_mask[b] >> a & 1 == 1
    }

    pub fn full_ideal(&self) -> OrderIdeal {
        if self.len() == 128 {
            OrderIdeal(!0u128)
        } else {
            OrderIdeal((1u128 << self.len()) - 1)
        }
    }

    pub fn is_ideal(&self, set: u128) -> bool {
        let mut b = set;
        while b != 0 {
            let e = b.trailing_zeros() as usize;
            b &= b - 1;
            if self.lower_mask[e] & set != self.lower_mask[e] {
                return false;
            }
        }
        true
    }

    /// Builds an ideal from member indices, validating downward closure.
    pub fn ideal_from_members(&self, members: &[usize]) -> Result<OrderIdeal> {
        let mut bits = 0u128;
        for &e in members {
            if e >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    count: self.len(),
                });
            }
            bits |= 1u128 << e;
        }
        if !self.is_ideal(bits) {
            return Err(Error::Validation(
                "member set is not downward closed".into(),
            ));
        }
        Ok(OrderIdeal(bits))
    }

    /// The toggle of one element: adds or removes it when the result is still
    /// an ideal, otherwise returns the ideal unchanged.
    pub fn toggle(&self, ideal: OrderIdeal, element: usize) -> Result<OrderIdeal> {
        if element >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: element,
                count: self.len(),
            });
        }
        Ok(self.toggle_unchecked(ideal, element))
    }

    #[inline]
    pub(crate) fn toggle_unchecked(&self, ideal: OrderIdeal, element: usize) -> OrderIdeal {
        let bits = ideal.0;
        let bit = 1u128 << element;
        if bits & bit != 0 {
            if bits & self.upper_mask[element] == 0 {
                OrderIdeal(bits ^ bit)
            } else {
                ideal
            }
        } else if bits & self.lower_mask[element] == self.lower_mask[element] {
            OrderIdeal(bits | bit)
        } else {
            ideal
        }
    }

    /// Downward closure of an arbitrary element set.
    pub fn down_closure(&self, set: u128) -> u128 {
        let mut out = set;
        let mut b = set;
        while b != 0 {
            let e = b.trailing_zeros() as usize;
            b &= b - 1;
            out |= self.below[e];
        }
        out
    }

    /// A fixed linear extension: elements sorted by rank, ties by index.
    pub fn linear_extension(&self) -> Vec<u32> {
        let mut ext: Vec<u32> = (0..self.len() as u32).collect();
        ext.sort_by_key(|&e| (self.ranks[e as usize], e));
        ext
    }

    /// Every order ideal exactly once, sorted ascending by bitset.
    ///
    /// Recursive extension along one fixed linear extension: an element may
    /// be included only when all its lower covers are included, so each leaf
    /// of the recursion is an ideal and each ideal is reached once.
    pub fn enumerate_ideals(&self, cap: u64) -> Result<Vec<OrderIdeal>> {
        let ext = self.linear_extension();
        let mut out: Vec<OrderIdeal> = Vec::new();
        let mut stack: Vec<(usize, u128)> = vec![(0, 0)];
        while let Some((k, bits)) = stack.pop() {
            if k == ext.len() {
                if out.len() as u64 >= cap {
                    return Err(Error::CapacityExceeded { cap });
                }
                out.push(OrderIdeal(bits));
                continue;
            }
            let e = ext[k] as usize;
            if bits & self.lower_mask[e] == self.lower_mask[e] {
                stack.push((k + 1, bits | 1u128 << e));
            }
            stack.push((k + 1, bits));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Renders an ideal through the element labels, in index order.
    pub fn format_ideal(&self, ideal: OrderIdeal) -> String {
        let parts: Vec<&str> = ideal.members().map(|e| self.label(e)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Index of a coordinate vector in the mixed-radix order of a chain product.
pub fn chain_index(dims: &[usize], coords: &[i64]) -> usize {
    let mut idx = 0usize;
    for (axis, &a) in dims.iter().enumerate() {
        idx = idx * a + (coords[axis] as usize - 1);
    }
    idx
}

/// Inverse of [`chain_index`].
pub fn chain_coords(dims: &[usize], mut index: usize) -> Vec<i64> {
    let mut c = vec![0i64; dims.len()];
    for axis in (0..dims.len()).rev() {
        c[axis] = (index % dims[axis]) as i64 + 1;
        index /= dims[axis];
    }
    c
}
