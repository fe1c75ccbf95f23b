//! Recombination between promotion variants.
//!
//! Fix an axis and a direction vector `v`. Walking the promotion orbit of an
//! ideal and taking layer `j` (along the axis) from the `(j-1)`-st promotion
//! image assembles a new subset of the projected poset. When the axis sign of
//! `v` is `+1` the result is again an order ideal, and the construction
//! intertwines `Pro_v` with `Pro_u`, where `u` is `v` with the axis sign
//! flipped: promoting the recombined ideal with `u` equals recombining the
//! `v`-promotion of the original. At the orbit level this is a bijection
//! between `Pro_v`-orbits and `Pro_u`-orbits that preserves orbit length and
//! per-orbit cardinality sums, which is what transports homomesy between
//! promotion variants.
//!
//! Everything here works through the lattice projection, so it applies to
//! general ranked posets (where the projection may be non-injective: layers
//! live in the image, and ideals are pulled back through the projection).

use crate::dynamics::{layer_decomposition, promotion_word, DirectionVector};
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, RankedPoset};

/// Which recombination to perform: a promotion variant and the layering axis.
#[derive(Debug, Clone)]
pub struct RecombinationSpec {
    pub direction: DirectionVector,
    pub axis: usize,
}

impl RecombinationSpec {
    pub fn new(direction: DirectionVector, axis: usize) -> Self {
        RecombinationSpec { direction, axis }
    }

    /// The partner direction: the axis sign flipped.
    pub fn partner(&self) -> DirectionVector {
        self.direction.flipped(self.axis)
    }
}

/// The outcome of recombining one ideal: the selected elements, their image
/// in the projected poset, and whether the selection is downward closed.
///
/// With axis sign `+1` the selection is always an ideal; with `-1` it may
/// fail downward closure, which is reported here rather than raised, so
/// callers can inspect how the closedness degenerates.
#[derive(Debug, Clone)]
pub struct Recombined {
    /// The selected elements, as a raw bitset.
    pub element_bits: u128,
    /// Image of the selection in the projected poset, sorted. When the
    /// projection is not injective this forgets which element over a shared
    /// point was selected; `element_bits` is the operative result.
    pub points: Vec<Vec<i64>>,
    /// Whether `element_bits` is downward closed.
    pub is_ideal: bool,
}

impl Recombined {
    /// The selection as an order ideal, when it is one.
    pub fn as_ideal(&self) -> Result<OrderIdeal> {
        if self.is_ideal {
            Ok(OrderIdeal::from_bits(self.element_bits))
        } else {
            Err(Error::Validation(
                "recombination output is not downward closed".into(),
            ))
        }
    }
}

/// Recombines one ideal: the elements of layer `j` along the axis are taken
/// from the `(j-1)`-st promotion image (layers numbered from the smallest
/// occurring axis coordinate).
///
/// Layers are cut through the projection but membership is decided element
/// by element; over a non-injective projection this distinguishes elements
/// that share a lattice point, and it is the reading under which the
/// intertwining theorem survives (the image-level set with a blanket
/// pullback does not, as the tetrahedral tests witness).
pub fn recombine(p: &RankedPoset, spec: &RecombinationSpec, ideal: OrderIdeal) -> Result<Recombined> {
    let decomposition = layer_decomposition(p, spec.axis)?;
    let word = promotion_word(p, &spec.direction)?;
    let mut element_bits = 0u128;
    let mut current = ideal;
    for layer in &decomposition.layers {
        for &e in layer {
            if current.contains(e as usize) {
                element_bits |= 1u128 << e;
            }
        }
        current = word.apply(p, current);
    }
    let points: std::collections::BTreeSet<Vec<i64>> = OrderIdeal::from_bits(element_bits)
        .members()
        .map(|e| p.coords(e).entries().to_vec())
        .collect();
    Ok(Recombined {
        element_bits,
        points: points.into_iter().collect(),
        is_ideal: p.is_ideal(element_bits),
    })
}

/// Checks that `(v, u, axis)` is an admissible intertwining triple: `v` has
/// sign `+1` on the axis, `u` has `-1`, and they agree elsewhere.
pub fn check_admissible(v: &DirectionVector, u: &DirectionVector, axis: usize) -> Result<()> {
    if v.len() != u.len() {
        return Err(Error::Validation(
            "direction vectors have different lengths".into(),
        ));
    }
    if axis >= v.len() {
        return Err(Error::IndexOutOfRange {
            index: axis,
            count: v.len(),
        });
    }
    if v.sign(axis) != 1 {
        return Err(Error::Validation(format!(
            "axis {} of v must carry sign +1, found {}",
            axis + 1,
            v.sign(axis)
        )));
    }
    if u.sign(axis) != -1 {
        return Err(Error::Validation(format!(
            "axis {} of u must carry sign -1, found {}",
            axis + 1,
            u.sign(axis)
        )));
    }
    if v.without_axis(axis) != u.without_axis(axis) {
        return Err(Error::Validation(
            "v and u must agree away from the chosen axis".into(),
        ));
    }
    Ok(())
}

/// The intertwining identity on one ideal: `Pro_u` applied to the
/// recombination of `I` equals the recombination of `Pro_v(I)`, compared
/// through preimages in the poset.
pub fn check_intertwine(
    p: &RankedPoset,
    v: &DirectionVector,
    u: &DirectionVector,
    axis: usize,
    ideal: OrderIdeal,
) -> Result<bool> {
    check_admissible(v, u, axis)?;
    let spec = RecombinationSpec::new(v.clone(), axis);
    let delta = recombine(p, &spec, ideal)?;
    let delta_ideal = delta.as_ideal().map_err(|_| {
        Error::Internal("recombination with axis sign +1 must produce an ideal".into())
    })?;
    let pro_u = promotion_word(p, u)?;
    let lhs = pro_u.apply(p, delta_ideal);

    let pro_v = promotion_word(p, v)?;
    let advanced = pro_v.apply(p, ideal);
    let rhs = recombine(p, &spec, advanced)?;
    Ok(lhs.bits() == rhs.element_bits)
}

fn validate_orbit<F>(step: F, orbit: &[OrderIdeal], action: &str) -> Result<()>
where
    F: Fn(OrderIdeal) -> OrderIdeal,
{
    if orbit.is_empty() {
        return Err(Error::Validation("orbit is empty".into()));
    }
    for k in 0..orbit.len() {
        let next = step(orbit[k]);
        if next != orbit[(k + 1) % orbit.len()] {
            return Err(Error::Validation(format!(
                "input is not a full {action} orbit"
            )));
        }
    }
    Ok(())
}

/// Maps a full `Pro_v` orbit to the corresponding `Pro_u` orbit by
/// recombining every member. The image is verified to be a full `Pro_u`
/// orbit of the same length.
pub fn recombine_orbit(
    p: &RankedPoset,
    spec: &RecombinationSpec,
    orbit_v: &[OrderIdeal],
) -> Result<Vec<OrderIdeal>> {
    let pro_v = promotion_word(p, &spec.direction)?;
    validate_orbit(|i| pro_v.apply(p, i), orbit_v, "source-promotion")?;

    let mut mapped = Vec::with_capacity(orbit_v.len());
    for &i in orbit_v {
        mapped.push(recombine(p, spec, i)?.as_ideal().map_err(|_| {
            Error::Internal("recombination with axis sign +1 must produce an ideal".into())
        })?);
    }

    let pro_u = promotion_word(p, &spec.partner())?;
    let walked = crate::dynamics::orbit(|i| pro_u.apply(p, i), mapped[0], mapped.len() as u64)
        .map_err(|_| Error::Internal("recombined orbit has a different length".into()))?;
    if walked.len() != mapped.len() || !same_multiset(&walked, &mapped) {
        return Err(Error::Internal(
            "recombined members do not form one partner-promotion orbit".into(),
        ));
    }
    Ok(walked)
}

/// Inverts [`recombine_orbit`]: reconstructs the unique `Pro_v` orbit whose
/// recombination is the given `Pro_u` orbit, by taking layer `j` from the
/// `(j-1)`-st *inverse* `Pro_u` image. The reconstruction is verified by a
/// full round trip.
pub fn inverse_recombine_orbit(
    p: &RankedPoset,
    spec: &RecombinationSpec,
    orbit_u: &[OrderIdeal],
) -> Result<Vec<OrderIdeal>> {
    let pro_u = promotion_word(p, &spec.partner())?;
    validate_orbit(|i| pro_u.apply(p, i), orbit_u, "partner-promotion")?;

    let decomposition = layer_decomposition(p, spec.axis)?;
    let back = pro_u.inverse();
    let mut bits = 0u128;
    let mut current = orbit_u[0];
    for layer in &decomposition.layers {
        for &e in layer {
            if current.contains(e as usize) {
                bits |= 1u128 << e;
            }
        }
        current = back.apply(p, current);
    }
    if !p.is_ideal(bits) {
        return Err(Error::Internal(
            "inverse recombination did not produce an ideal".into(),
        ));
    }
    let seed = OrderIdeal::from_bits(bits);

    let pro_v = promotion_word(p, &spec.direction)?;
    let orbit_v = crate::dynamics::orbit(|i| pro_v.apply(p, i), seed, orbit_u.len() as u64)
        .map_err(|_| Error::Internal("inverse recombination changed the orbit length".into()))?;
    let round_trip = recombine_orbit(p, spec, &orbit_v)?;
    if !same_multiset(&round_trip, orbit_u) {
        return Err(Error::Internal(
            "inverse recombination failed its round trip".into(),
        ));
    }
    Ok(orbit_v)
}

fn same_multiset(a: &[OrderIdeal], b: &[OrderIdeal]) -> bool {
    let mut a: Vec<_> = a.to_vec();
    let mut b: Vec<_> = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{all_orbits, orbit, rowmotion};

    fn ideals(p: &RankedPoset) -> Vec<OrderIdeal> {
        p.enumerate_ideals(1 << 20).unwrap()
    }

    #[test]
    fn recombination_on_grid_matches_layerwise_construction() {
        // On [3] x [3] with the all-ones direction, recombination takes
        // layer 1 from I, layer 2 from Row(I), layer 3 from Row^2(I).
        let p = RankedPoset::chain_product(&[3, 3]).unwrap();
        let v = DirectionVector::ones(2);
        let spec = RecombinationSpec::new(v, 0);
        for i in ideals(&p) {
            let d = recombine(&p, &spec, i).unwrap();
            let r1 = rowmotion(&p, i);
            let r2 = rowmotion(&p, r1);
            let mut expect = 0u128;
            for e in 0..p.len() {
                let source = match p.coords(e).entry(0) {
                    1 => i,
                    2 => r1,
                    3 => r2,
                    _ => unreachable!(),
                };
                if source.contains(e) {
                    expect |= 1u128 << e;
                }
            }
            assert_eq!(d.element_bits, expect);
            assert!(d.is_ideal);
        }
    }

    #[test]
    fn single_layer_axis_recombines_to_itself() {
        // With one layer along the axis, every layer is drawn from the
        // original ideal, so recombination is the identity.
        let p = RankedPoset::chain_product(&[1, 3]).unwrap();
        let spec = RecombinationSpec::new(DirectionVector::ones(2), 0);
        for i in ideals(&p) {
            let d = recombine(&p, &spec, i).unwrap();
            assert_eq!(d.element_bits, i.bits());
            assert!(d.is_ideal);
        }
    }

    #[test]
    fn intertwining_for_row_into_promotion() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let v = DirectionVector::new(vec![1, 1, 1]).unwrap();
        let u = DirectionVector::new(vec![1, 1, -1]).unwrap();
        for i in ideals(&p) {
            assert!(check_intertwine(&p, &v, &u, 2, i).unwrap());
        }
    }

    #[test]
    fn intertwining_for_promotion_pair() {
        let p = RankedPoset::chain_product(&[2, 2, 3]).unwrap();
        let v = DirectionVector::new(vec![1, 1, -1]).unwrap();
        let u = DirectionVector::new(vec![-1, 1, -1]).unwrap();
        for i in ideals(&p) {
            assert!(check_intertwine(&p, &v, &u, 0, i).unwrap());
        }
    }

    #[test]
    fn admissibility_is_enforced() {
        let v = DirectionVector::new(vec![1, 1, 1]).unwrap();
        let u = DirectionVector::new(vec![-1, 1, -1]).unwrap();
        assert!(matches!(
            check_admissible(&v, &u, 2),
            Err(Error::Validation(_))
        ));
        let u2 = DirectionVector::new(vec![1, 1, 1]).unwrap();
        assert!(check_admissible(&v, &u2, 2).is_err());
        let w = DirectionVector::new(vec![-1, 1, 1]).unwrap();
        assert!(check_admissible(&w, &w.flipped(0), 0).is_err());
    }

    #[test]
    fn negative_axis_sign_can_break_closure() {
        // With axis sign -1 the recombined set may fail downward closure;
        // it is reported, not raised.
        let p = RankedPoset::chain_product(&[3, 3]).unwrap();
        let v = DirectionVector::new(vec![-1, 1]).unwrap();
        let spec = RecombinationSpec::new(v, 0);
        let mut broken = 0;
        for i in ideals(&p) {
            let d = recombine(&p, &spec, i).unwrap();
            if !d.is_ideal {
                broken += 1;
                assert!(d.as_ideal().is_err());
            }
        }
        assert!(broken > 0, "expected at least one non-ideal output");
    }

    #[test]
    fn orbit_map_is_length_preserving_bijection() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let v = DirectionVector::ones(3);
        let spec = RecombinationSpec::new(v.clone(), 2);
        let pro_v = promotion_word(&p, &v).unwrap();
        let pro_u = promotion_word(&p, &spec.partner()).unwrap();

        let source = all_orbits(&p, |i| pro_v.apply(&p, i), 1 << 20).unwrap();
        let target = all_orbits(&p, |i| pro_u.apply(&p, i), 1 << 20).unwrap();

        let mut images: Vec<OrderIdeal> = Vec::new();
        for o in &source {
            let image = recombine_orbit(&p, &spec, o).unwrap();
            assert_eq!(image.len(), o.len());
            images.push(*image.iter().min().unwrap());
        }
        // Distinct source orbits land on distinct target orbits, and every
        // target orbit is hit.
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), source.len());
        assert_eq!(source.len(), target.len());
    }

    #[test]
    fn degenerate_axis_maps_orbits_to_themselves() {
        // Extent 1 along the axis makes recombination the identity, and the
        // two promotion variants coincide, so every orbit maps to itself.
        let p = RankedPoset::chain_product(&[1, 3, 2]).unwrap();
        let v = DirectionVector::new(vec![1, 1, -1]).unwrap();
        let spec = RecombinationSpec::new(v.clone(), 0);
        let pro_v = promotion_word(&p, &v).unwrap();
        for o in all_orbits(&p, |i| pro_v.apply(&p, i), 1 << 20).unwrap() {
            let image = recombine_orbit(&p, &spec, &o).unwrap();
            assert!(same_multiset(&image, &o));
        }
    }

    #[test]
    fn inverse_round_trips_row_orbits() {
        for dims in [vec![2, 2, 2], vec![2, 3, 2]] {
            let p = RankedPoset::chain_product(&dims).unwrap();
            let v = DirectionVector::ones(3);
            let spec = RecombinationSpec::new(v.clone(), 2);
            let pro_v = promotion_word(&p, &v).unwrap();
            for o in all_orbits(&p, |i| pro_v.apply(&p, i), 1 << 20).unwrap() {
                let forward = recombine_orbit(&p, &spec, &o).unwrap();
                let back = inverse_recombine_orbit(&p, &spec, &forward).unwrap();
                assert!(same_multiset(&back, &o));
            }
        }
    }

    #[test]
    fn inverse_then_forward_is_identity_on_orbit_sets() {
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let v = DirectionVector::new(vec![1, 1, -1]).unwrap();
        let spec = RecombinationSpec::new(v, 0);
        let pro_u = promotion_word(&p, &spec.partner()).unwrap();
        for o in all_orbits(&p, |i| pro_u.apply(&p, i), 1 << 20).unwrap() {
            let pre = inverse_recombine_orbit(&p, &spec, &o).unwrap();
            let again = recombine_orbit(&p, &spec, &pre).unwrap();
            assert!(same_multiset(&again, &o));
        }
    }

    #[test]
    fn orbit_cardinality_sums_are_preserved() {
        // Summed over a whole orbit, recombination only reindexes layers, so
        // the total cardinality is carried to the partner orbit.
        let p = RankedPoset::chain_product(&[2, 3, 2]).unwrap();
        let v = DirectionVector::ones(3);
        let spec = RecombinationSpec::new(v.clone(), 2);
        let pro_v = promotion_word(&p, &v).unwrap();
        for o in all_orbits(&p, |i| pro_v.apply(&p, i), 1 << 20).unwrap() {
            let image = recombine_orbit(&p, &spec, &o).unwrap();
            let total = |xs: &[OrderIdeal]| xs.iter().map(|i| i.len()).sum::<usize>();
            assert_eq!(total(&o), total(&image));
        }
    }

    #[test]
    fn rejects_partial_orbit() {
        let p = RankedPoset::chain_product(&[2, 2]).unwrap();
        let v = DirectionVector::ones(2);
        let spec = RecombinationSpec::new(v.clone(), 0);
        let pro_v = promotion_word(&p, &v).unwrap();
        let full = orbit(|i| pro_v.apply(&p, i), OrderIdeal::EMPTY, 100).unwrap();
        let partial = &full[..full.len() - 1];
        assert!(recombine_orbit(&p, &spec, partial).is_err());
    }
}
