//! Built-in verification suite.
//!
//! Each claim checks one published orbit census or homomesy constant for the
//! dynamics implemented by this crate, exactly (no tolerances: all arithmetic
//! is integer or rational). The suite doubles as the acceptance gate: the
//! `acceptance` integration test target runs every claim, and the CLI exposes
//! the same registry as `verify-paper`.

use std::collections::BTreeMap;

use crate::document::load_poset;
use crate::dynamics::{
    all_orbits, conjugator, layered_promotion_word, promotion_word, promotion_word_scrambled,
    DirectionVector, ToggleWord,
};
use crate::error::{Error, Result};
use crate::homomesy::{
    ideal_census, pairs_rotationally_symmetric, rational, rational_string, tableau_census, verdict,
    PosetStatistic, Rational,
};
use crate::poset::{OrderIdeal, RankedPoset};
use crate::recombination::{
    check_intertwine, inverse_recombine_orbit, recombine, recombine_orbit, RecombinationSpec,
};
use crate::tableaux::{k_promotion, psi, sigma, CellSet};

/// The tetrahedral-poset document shipped with the crate.
pub const TETRAHEDRAL_DOCUMENT: &str = include_str!("../data/tetrahedral.json");

const CAP: u64 = 5_000_000;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub threads: usize,
    /// Scrambles the hyperplane order inside promotion sweeps. A mutation
    /// switch for the suite itself: with it set, the census claims must fail.
    pub corrupt_sweep: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            threads: 1,
            corrupt_sweep: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Claim = fn(&VerifyOptions) -> Result<ClaimResult>;

pub fn claims() -> Vec<(&'static str, &'static str, Claim)> {
    vec![
        (
            "census-3x3x4",
            "[3]x[3]x[4]: 456 orbits of average 18, two of 161/9, two of 163/9, for all 8 directions",
            census_3x3x4,
        ),
        (
            "census-hypercubes",
            "[2]^4: 36 orbits of average 8; [2]^5: the seven-average census",
            census_hypercubes,
        ),
        (
            "mainhom",
            "[2]x[a]x[b] is ab-mesic for a,b <= 4 under all 8 directions",
            mainhom,
        ),
        (
            "two-chains",
            "[a]x[b] is ab/2-mesic under rowmotion and promotion for a,b <= 5",
            two_chains,
        ),
        (
            "psi-equivariance",
            "ideal promotion in direction (1,1,-1) matches K-promotion through the tableau bijection",
            psi_equivariance,
        ),
        (
            "boxsum",
            "tableau entry sums track ideal size plus a(a+2) on [2]x[a]x[b]",
            boxsum,
        ),
        (
            "tabhom",
            "Inc^{a+b+1}(a x b) entry sums are ab(2+a+b)/2-mesic; frame subsets are (q+1)|S|/2-mesic",
            tabhom,
        ),
        (
            "rotsym",
            "rotation-symmetric column sets of [2]x[3]x[3] are nb/2-mesic",
            rotsym,
        ),
        (
            "gen3chain",
            "rotation-symmetric corner columns of [3]x[3]x[2] are n*a3/2-mesic",
            gen3chain,
        ),
        (
            "typebmin",
            "B_n x [2] is (n^2+n)/2-mesic for n in {2,3,4} under all 8 directions",
            typebmin,
        ),
        (
            "properties",
            "toggle, commutation, layering, conjugation, inversion, and recombination property suites",
            properties,
        ),
        (
            "tetrahedral",
            "the tetrahedral poset: 42 ideals (the 4x4 ASM count) and generalized recombination",
            tetrahedral,
        ),
    ]
}

pub fn claim_ids() -> Vec<&'static str> {
    claims().iter().map(|(id, _, _)| *id).collect()
}

pub fn run_claim(id: &str, opts: &VerifyOptions) -> Result<ClaimResult> {
    for (claim_id, _, runner) in claims() {
        if claim_id == id {
            return runner(opts);
        }
    }
    Err(Error::Validation(format!(
        "unknown claim `{id}`; known claims: {}",
        claim_ids().join(", ")
    )))
}

/// Runs every claim (or only the named one) and returns the results.
pub fn run_all(only: Option<&str>, opts: &VerifyOptions) -> Result<Vec<ClaimResult>> {
    if let Some(id) = only {
        return Ok(vec![run_claim(id, opts)?]);
    }
    claims().iter().map(|(_, _, runner)| runner(opts)).collect()
}

fn sweep(p: &RankedPoset, v: &DirectionVector, opts: &VerifyOptions) -> Result<ToggleWord> {
    if opts.corrupt_sweep {
        promotion_word_scrambled(p, v)
    } else {
        promotion_word(p, v)
    }
}

fn fail(id: &'static str, detail: String) -> Result<ClaimResult> {
    Ok(ClaimResult {
        id,
        passed: false,
        detail,
    })
}

fn pass(id: &'static str, detail: String) -> Result<ClaimResult> {
    Ok(ClaimResult {
        id,
        passed: true,
        detail,
    })
}

fn aggregate_string(aggregate: &BTreeMap<Rational, u64>) -> String {
    let parts: Vec<String> = aggregate
        .iter()
        .map(|(avg, n)| format!("{}: {}", rational_string(avg), n))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn expected_aggregate(rows: &[(i64, i64, u64)]) -> BTreeMap<Rational, u64> {
    rows.iter().map(|&(n, d, count)| (rational(n, d), count)).collect()
}

fn check_census_against(
    id: &'static str,
    p: &RankedPoset,
    expected: &BTreeMap<Rational, u64>,
    opts: &VerifyOptions,
) -> Result<std::result::Result<(), String>> {
    let stat = PosetStatistic::cardinality(p);
    for v in DirectionVector::all(p.dimension()) {
        let word = sweep(p, &v, opts)?;
        let census = ideal_census(p, |i| word.apply(p, i), &stat, CAP, opts.threads)?;
        if &census.aggregate != expected {
            return Ok(Err(format!(
                "{id}: direction {v} gave {}, expected {}",
                aggregate_string(&census.aggregate),
                aggregate_string(expected)
            )));
        }
    }
    Ok(Ok(()))
}

fn census_3x3x4(opts: &VerifyOptions) -> Result<ClaimResult> {
    let p = RankedPoset::chain_product(&[3, 3, 4])?;
    let expected = expected_aggregate(&[(18, 1, 456), (161, 9, 2), (163, 9, 2)]);
    match check_census_against("census-3x3x4", &p, &expected, opts)? {
        Ok(()) => pass(
            "census-3x3x4",
            format!("all 8 directions: {}", aggregate_string(&expected)),
        ),
        Err(detail) => fail("census-3x3x4", detail),
    }
}

fn census_hypercubes(opts: &VerifyOptions) -> Result<ClaimResult> {
    let p4 = RankedPoset::chain_product(&[2; 4])?;
    let expected4 = expected_aggregate(&[(8, 1, 36)]);
    if let Err(detail) = check_census_against("census-hypercubes", &p4, &expected4, opts)? {
        return fail("census-hypercubes", detail);
    }
    let p5 = RankedPoset::chain_product(&[2; 5])?;
    let expected5 = expected_aggregate(&[
        (16, 1, 771),
        (115, 7, 60),
        (109, 7, 60),
        (61, 4, 30),
        (67, 4, 30),
        (11, 1, 6),
        (21, 1, 6),
    ]);
    if let Err(detail) = check_census_against("census-hypercubes", &p5, &expected5, opts)? {
        return fail("census-hypercubes", detail);
    }
    pass(
        "census-hypercubes",
        format!(
            "[2]^4 {}; [2]^5 {}",
            aggregate_string(&expected4),
            aggregate_string(&expected5)
        ),
    )
}

fn check_constant(
    p: &RankedPoset,
    word: &ToggleWord,
    stat: &PosetStatistic,
    expected: &Rational,
    threads: usize,
) -> Result<std::result::Result<(), String>> {
    let census = ideal_census(p, |i| word.apply(p, i), stat, CAP, threads)?;
    let v = verdict(&census)?;
    if !v.homomesic {
        let (a, b) = v.witness.unwrap();
        return Ok(Err(format!(
            "{}: not homomesic ({} vs {})",
            p.name(),
            rational_string(&a.average),
            rational_string(&b.average)
        )));
    }
    let c = v.constant.unwrap();
    if &c != expected {
        return Ok(Err(format!(
            "{}: constant {} instead of {}",
            p.name(),
            rational_string(&c),
            rational_string(expected)
        )));
    }
    Ok(Ok(()))
}

fn mainhom(opts: &VerifyOptions) -> Result<ClaimResult> {
    for a in 1..=4usize {
        for b in 1..=4usize {
            let p = RankedPoset::chain_product(&[2, a, b])?;
            let stat = PosetStatistic::cardinality(&p);
            let expected = rational((a * b) as i64, 1);
            for v in DirectionVector::all(3) {
                let word = sweep(&p, &v, opts)?;
                if let Err(detail) = check_constant(&p, &word, &stat, &expected, opts.threads)? {
                    return fail("mainhom", format!("direction {v}: {detail}"));
                }
            }
        }
    }
    pass(
        "mainhom",
        "16 boxes x 8 directions, cardinality constant ab exactly".into(),
    )
}

fn two_chains(opts: &VerifyOptions) -> Result<ClaimResult> {
    for a in 1..=5usize {
        for b in 1..=5usize {
            let p = RankedPoset::chain_product(&[a, b])?;
            let stat = PosetStatistic::cardinality(&p);
            let expected = rational((a * b) as i64, 2);
            let row = sweep(&p, &DirectionVector::ones(2), opts)?;
            if let Err(detail) = check_constant(&p, &row, &stat, &expected, opts.threads)? {
                return fail("two-chains", format!("rowmotion: {detail}"));
            }
            let pro = sweep(&p, &DirectionVector::new(vec![1, -1])?, opts)?;
            if let Err(detail) = check_constant(&p, &pro, &stat, &expected, opts.threads)? {
                return fail("two-chains", format!("promotion: {detail}"));
            }
        }
    }
    pass(
        "two-chains",
        "25 grids under rowmotion and promotion, constant ab/2 exactly".into(),
    )
}

fn psi_equivariance(opts: &VerifyOptions) -> Result<ClaimResult> {
    let shapes = [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3), (3, 3, 2)];
    let mut checked = 0usize;
    for (a, b, c) in shapes {
        let p = RankedPoset::chain_product(&[a, b, c])?;
        let v = DirectionVector::new(vec![1, 1, -1])?;
        let word = sweep(&p, &v, opts)?;
        for i in p.enumerate_ideals(CAP)? {
            let lhs = psi(&p, word.apply(&p, i))?;
            let rhs = k_promotion(&psi(&p, i)?)?;
            if lhs != rhs {
                return fail(
                    "psi-equivariance",
                    format!("[{a}]x[{b}]x[{c}], ideal {}", p.format_ideal(i)),
                );
            }
            checked += 1;
        }
    }
    pass(
        "psi-equivariance",
        format!("{checked} ideals across 5 boxes, exact tableau equality"),
    )
}

fn boxsum(_opts: &VerifyOptions) -> Result<ClaimResult> {
    let mut checked = 0usize;
    for a in 1..=4usize {
        for b in 1..=4usize {
            let p = RankedPoset::chain_product(&[2, a, b])?;
            let full = CellSet::full(2, a);
            let shift = (a * (a + 2)) as i64;
            for i in p.enumerate_ideals(CAP)? {
                let total = sigma(&psi(&p, i)?, &full)?;
                if total != i.len() as i64 + shift {
                    return fail(
                        "boxsum",
                        format!(
                            "[2]x[{a}]x[{b}]: ideal {} sums to {total}, expected {}",
                            p.format_ideal(i),
                            i.len() as i64 + shift
                        ),
                    );
                }
                checked += 1;
            }
        }
    }
    pass("boxsum", format!("{checked} ideals, exact"))
}

fn tabhom(opts: &VerifyOptions) -> Result<ClaimResult> {
    for (a, b) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let q = (a + b + 1) as u32;
        let census = tableau_census(a, b, q, &CellSet::full(a, b), CAP, opts.threads)?;
        let v = verdict(&census)?;
        let expected = rational((a * b * (2 + a + b)) as i64, 2);
        if !v.homomesic || v.constant.as_ref() != Some(&expected) {
            return fail(
                "tabhom",
                format!(
                    "Inc^{q}({a}x{b}): expected constant {}, verdict {:?}",
                    rational_string(&expected),
                    v.constant.map(|c| rational_string(&c))
                ),
            );
        }
    }
    // Frame subsets fixed by rotation: constant (q+1)|S|/2 at any entry bound.
    for (m, n, q) in [(3usize, 3usize, 6u32), (2, 4, 6)] {
        let sets = [
            CellSet::from_cells(m, n, [(1, 1), (m, n)])?,
            CellSet::frame(m, n),
        ];
        for cells in sets {
            if !cells.is_rotation_symmetric() || !cells.is_within_frame() {
                return Err(Error::Validation(
                    "frame test set must be a rotation-symmetric frame subset".into(),
                ));
            }
            let census = tableau_census(m, n, q, &cells, CAP, opts.threads)?;
            let v = verdict(&census)?;
            let expected = rational((q as i64 + 1) * cells.len() as i64, 2);
            if !v.homomesic || v.constant.as_ref() != Some(&expected) {
                return fail(
                    "tabhom",
                    format!(
                        "Inc^{q}({m}x{n}), |S|={}: expected {}, verdict {:?}",
                        cells.len(),
                        rational_string(&expected),
                        v.constant.map(|c| rational_string(&c))
                    ),
                );
            }
        }
    }
    pass(
        "tabhom",
        "full-shape constants ab(2+a+b)/2 and frame constants (q+1)|S|/2, exact".into(),
    )
}

/// All rotation-symmetric unions of column-pair orbits over an a1 x a2 face.
fn symmetric_pair_sets(a1: usize, a2: usize, sizes: &[usize]) -> Vec<Vec<(i64, i64)>> {
    let mut orbits: Vec<Vec<(i64, i64)>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for j in 1..=a1 as i64 {
        for k in 1..=a2 as i64 {
            if seen.contains(&(j, k)) {
                continue;
            }
            let partner = (a1 as i64 + 1 - j, a2 as i64 + 1 - k);
            seen.insert((j, k));
            seen.insert(partner);
            if partner == (j, k) {
                orbits.push(vec![(j, k)]);
            } else {
                orbits.push(vec![(j, k), partner]);
            }
        }
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << orbits.len()) {
        let set: Vec<(i64, i64)> = orbits
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask >> idx & 1 == 1)
            .flat_map(|(_, o)| o.iter().copied())
            .collect();
        if sizes.contains(&set.len()) {
            out.push(set);
        }
    }
    out
}

fn rotsym(opts: &VerifyOptions) -> Result<ClaimResult> {
    let (a, b) = (3usize, 3usize);
    let p = RankedPoset::chain_product(&[2, a, b])?;
    let v = DirectionVector::new(vec![1, 1, -1])?;
    let word = sweep(&p, &v, opts)?;
    let mut tested = 0usize;
    for pairs in symmetric_pair_sets(2, a, &[2, 4]) {
        if !pairs_rotationally_symmetric(&pairs, 2, a) {
            return Err(Error::Validation(
                "generated column set is not rotation-symmetric".into(),
            ));
        }
        let stat = PosetStatistic::columns(&p, &pairs)?;
        let expected = rational((pairs.len() * b) as i64, 2);
        if let Err(detail) = check_constant(&p, &word, &stat, &expected, opts.threads)? {
            return fail("rotsym", format!("columns {pairs:?}: {detail}"));
        }
        tested += 1;
    }
    pass(
        "rotsym",
        format!("{tested} symmetric column sets on [2]x[3]x[3], constants nb/2 exactly"),
    )
}

fn gen3chain(opts: &VerifyOptions) -> Result<ClaimResult> {
    let (a1, a2, a3) = (3usize, 3usize, 2usize);
    let p = RankedPoset::chain_product(&[a1, a2, a3])?;
    let v = DirectionVector::new(vec![1, 1, -1])?;
    let word = sweep(&p, &v, opts)?;
    let mut tested = 0usize;
    for pairs in symmetric_pair_sets(a1, a2, &[2, 4]) {
        // Only corner columns participate here.
        if !pairs
            .iter()
            .all(|&(j, k)| (j == 1 || j == a1 as i64) && (k == 1 || k == a2 as i64))
        {
            continue;
        }
        if !pairs_rotationally_symmetric(&pairs, a1, a2) {
            return Err(Error::Validation(
                "generated corner set is not rotation-symmetric".into(),
            ));
        }
        let stat = PosetStatistic::columns(&p, &pairs)?;
        let expected = rational((pairs.len() * a3) as i64, 2);
        if let Err(detail) = check_constant(&p, &word, &stat, &expected, opts.threads)? {
            return fail("gen3chain", format!("corners {pairs:?}: {detail}"));
        }
        tested += 1;
    }
    pass(
        "gen3chain",
        format!("{tested} symmetric corner sets on [3]x[3]x[2], constants n*a3/2 exactly"),
    )
}

fn typebmin(opts: &VerifyOptions) -> Result<ClaimResult> {
    for n in 2..=4usize {
        let p = RankedPoset::type_b_minuscule(n)?.product_with_chain(2)?;
        let stat = PosetStatistic::cardinality(&p);
        let expected = rational((n * n + n) as i64, 2);
        for v in DirectionVector::all(3) {
            let word = sweep(&p, &v, opts)?;
            if let Err(detail) = check_constant(&p, &word, &stat, &expected, opts.threads)? {
                return fail("typebmin", format!("n={n}, direction {v}: {detail}"));
            }
        }
    }
    pass(
        "typebmin",
        "B_n x [2] for n in {2,3,4} under all 8 directions, constant (n^2+n)/2 exactly".into(),
    )
}

/// Deterministic PRNG for the randomized property suite (SplitMix64).
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn random_ideal(p: &RankedPoset, rng: &mut SplitMix64) -> OrderIdeal {
    let mut i = OrderIdeal::EMPTY;
    for _ in 0..2 * p.len() {
        i = p.toggle(i, rng.below(p.len())).unwrap();
    }
    i
}

fn properties(_opts: &VerifyOptions) -> Result<ClaimResult> {
    let mut parts = Vec::new();

    // Toggle involutivity and commutation on 10^4 random (ideal, e, f).
    {
        let posets = vec![
            RankedPoset::chain_product(&[3, 3, 4])?,
            load_poset(TETRAHEDRAL_DOCUMENT)?,
            RankedPoset::type_b_minuscule(3)?.product_with_chain(2)?,
        ];
        let mut rng = SplitMix64(0x5eed);
        for trial in 0..10_000usize {
            let p = &posets[trial % posets.len()];
            let i = random_ideal(p, &mut rng);
            let e = rng.below(p.len());
            let f = rng.below(p.len());
            let once = p.toggle(i, e)?;
            if p.toggle(once, e)? != i {
                return fail("properties", format!("toggle at {} is not an involution", p.label(e)));
            }
            if !p.is_cover_pair(e, f) {
                let ef = p.toggle(p.toggle(i, f)?, e)?;
                let fe = p.toggle(p.toggle(i, e)?, f)?;
                if ef != fe {
                    return fail(
                        "properties",
                        format!("non-covering toggles {} and {} do not commute", p.label(e), p.label(f)),
                    );
                }
            }
        }
        parts.push("10^4 random toggle involution/commutation checks".to_string());
    }

    // Layered promotion equals the hyperplane sweep, exhaustively.
    {
        let posets = vec![
            RankedPoset::chain_product(&[3, 3])?,
            RankedPoset::chain_product(&[2, 3, 2])?,
            RankedPoset::chain_product(&[2; 4])?,
            RankedPoset::chain_product(&[2, 3, 4])?,
            RankedPoset::chain_product(&[3, 3, 4])?,
            load_poset(TETRAHEDRAL_DOCUMENT)?,
            RankedPoset::type_b_minuscule(3)?.product_with_chain(2)?,
        ];
        let mut checked = 0usize;
        for p in &posets {
            let ideals = p.enumerate_ideals(CAP)?;
            for v in DirectionVector::all(p.dimension()) {
                let sweep_word = promotion_word(p, &v)?;
                for axis in 0..p.dimension() {
                    let layered = layered_promotion_word(p, &v, axis)?;
                    for &i in &ideals {
                        if layered.apply(p, i) != sweep_word.apply(p, i) {
                            return fail(
                                "properties",
                                format!(
                                    "{}: layered promotion differs from sweep at v={v}, axis {}",
                                    p.name(),
                                    axis + 1
                                ),
                            );
                        }
                        checked += 1;
                    }
                }
            }
        }
        parts.push(format!("layer-vs-sweep on {checked} (ideal, v, axis) triples"));
    }

    // Intertwining, exhaustively over admissible triples.
    {
        for dims in [[2usize, 2, 3], [2, 3, 2]] {
            let p = RankedPoset::chain_product(&dims)?;
            let ideals = p.enumerate_ideals(CAP)?;
            for axis in 0..3 {
                for v in DirectionVector::all(3) {
                    if v.sign(axis) != 1 {
                        continue;
                    }
                    let u = v.flipped(axis);
                    for &i in &ideals {
                        if !check_intertwine(&p, &v, &u, axis, i)? {
                            return fail(
                                "properties",
                                format!("{}: intertwining fails at v={v}, axis {}", p.name(), axis + 1),
                            );
                        }
                    }
                }
            }
        }
        parts.push("recombination intertwining on [2]x[2]x[3] and [2]x[3]x[2]".to_string());
    }

    // Conjugation identity, exhaustively.
    {
        for p in [
            RankedPoset::chain_product(&[2, 3])?,
            RankedPoset::chain_product(&[2, 2, 2])?,
        ] {
            let ideals = p.enumerate_ideals(CAP)?;
            for v in DirectionVector::all(p.dimension()) {
                for axis in 0..p.dimension() {
                    if v.sign(axis) != 1 {
                        continue;
                    }
                    let d = conjugator(&p, &v, axis)?;
                    let pro_v = promotion_word(&p, &v)?;
                    let pro_w = promotion_word(&p, &v.flipped(axis))?;
                    for &i in &ideals {
                        let lhs = pro_v.apply(&p, i);
                        let rhs = d.inverse().apply(&p, pro_w.apply(&p, d.apply(&p, i)));
                        if lhs != rhs {
                            return fail(
                                "properties",
                                format!("{}: conjugation fails at v={v}, axis {}", p.name(), axis + 1),
                            );
                        }
                    }
                }
            }
        }
        parts.push("conjugation identity on [2]x[3] and [2]x[2]x[2]".to_string());
    }

    // Reversed direction inverts promotion.
    {
        for p in [
            RankedPoset::chain_product(&[2, 3, 2])?,
            load_poset(TETRAHEDRAL_DOCUMENT)?,
        ] {
            let ideals = p.enumerate_ideals(CAP)?;
            for v in DirectionVector::all(p.dimension()) {
                let fwd = promotion_word(&p, &v)?;
                let back = promotion_word(&p, &v.negated())?;
                for &i in &ideals {
                    if back.apply(&p, fwd.apply(&p, i)) != i {
                        return fail(
                            "properties",
                            format!("{}: promotion at -v does not invert v={v}", p.name()),
                        );
                    }
                }
            }
        }
        parts.push("reversed-direction inversion".to_string());
    }

    // Orbit-level recombination round trips.
    {
        for (dims, v, axis) in [
            (vec![2usize, 2, 2], DirectionVector::ones(3), 2usize),
            (vec![2, 3, 2], DirectionVector::new(vec![1, 1, -1])?, 0),
        ] {
            let p = RankedPoset::chain_product(&dims)?;
            let spec = RecombinationSpec::new(v.clone(), axis);
            let word = promotion_word(&p, &v)?;
            for orbit in all_orbits(&p, |i| word.apply(&p, i), CAP)? {
                let image = recombine_orbit(&p, &spec, &orbit)?;
                if image.len() != orbit.len() {
                    return fail("properties", format!("{}: orbit length changed", p.name()));
                }
                let mut back = inverse_recombine_orbit(&p, &spec, &image)?;
                let mut fwd = orbit.clone();
                back.sort_unstable();
                fwd.sort_unstable();
                if back != fwd {
                    return fail("properties", format!("{}: orbit round trip failed", p.name()));
                }
            }
        }
        parts.push("orbit recombination round trips".to_string());
    }

    pass("properties", parts.join("; "))
}

/// Counts n x n alternating sign matrices by row DFS; the independent oracle
/// for the tetrahedral ideal count.
fn asm_count(n: usize) -> u64 {
    // Valid rows: entries in {-1,0,1}, nonzeros alternating and both
    // starting and ending with +1 (so each row sums to 1).
    let mut rows: Vec<Vec<i8>> = Vec::new();
    let total = 3usize.pow(n as u32);
    'outer: for code in 0..total {
        let mut c = code;
        let mut row = Vec::with_capacity(n);
        for _ in 0..n {
            row.push((c % 3) as i8 - 1);
            c /= 3;
        }
        let nz: Vec<i8> = row.iter().copied().filter(|&x| x != 0).collect();
        if nz.is_empty() || nz[0] != 1 || nz[nz.len() - 1] != 1 {
            continue;
        }
        for w in nz.windows(2) {
            if w[0] == w[1] {
                continue 'outer;
            }
        }
        rows.push(row);
    }
    fn dfs(rows: &[Vec<i8>], sums: &mut Vec<i8>, depth: usize, n: usize) -> u64 {
        if depth == n {
            return u64::from(sums.iter().all(|&s| s == 1));
        }
        let mut count = 0;
        'rows: for row in rows {
            for j in 0..n {
                let s = sums[j] + row[j];
                if s != 0 && s != 1 {
                    continue 'rows;
                }
            }
            for j in 0..n {
                sums[j] += row[j];
            }
            count += dfs(rows, sums, depth + 1, n);
            for j in 0..n {
                sums[j] -= row[j];
            }
        }
        count
    }
    dfs(&rows, &mut vec![0; n], 0, n)
}

fn tetrahedral(_opts: &VerifyOptions) -> Result<ClaimResult> {
    let p = load_poset(TETRAHEDRAL_DOCUMENT)?;
    let ideals = p.enumerate_ideals(CAP)?;
    let asm = asm_count(4);
    if ideals.len() as u64 != 42 || asm != 42 {
        return fail(
            "tetrahedral",
            format!("{} ideals vs {} alternating sign matrices (expected 42)", ideals.len(), asm),
        );
    }
    // Generalized recombination: every admissible direction/axis pair
    // intertwines on every ideal, and every orbit transports with a
    // verified round trip.
    let mut orbits_transported = 0usize;
    for axis in 0..p.dimension() {
        for v in DirectionVector::all(p.dimension()) {
            if v.sign(axis) != 1 {
                continue;
            }
            let u = v.flipped(axis);
            for &i in &ideals {
                let d = recombine(&p, &RecombinationSpec::new(v.clone(), axis), i)?;
                if !d.is_ideal {
                    return fail(
                        "tetrahedral",
                        format!("recombination of {} is not an ideal", p.format_ideal(i)),
                    );
                }
                if !check_intertwine(&p, &v, &u, axis, i)? {
                    return fail(
                        "tetrahedral",
                        format!("intertwining fails at v={v}, axis {}, ideal {}", axis + 1, p.format_ideal(i)),
                    );
                }
            }
            let spec = RecombinationSpec::new(v.clone(), axis);
            let word = promotion_word(&p, &v)?;
            for orbit in all_orbits(&p, |i| word.apply(&p, i), CAP)? {
                let image = recombine_orbit(&p, &spec, &orbit)?;
                let mut back = inverse_recombine_orbit(&p, &spec, &image)?;
                let mut fwd = orbit.clone();
                back.sort_unstable();
                fwd.sort_unstable();
                if back != fwd {
                    return fail("tetrahedral", "orbit round trip failed".into());
                }
                orbits_transported += 1;
            }
        }
    }
    pass(
        "tetrahedral",
        format!("42 ideals = 42 ASMs; intertwining on all ideals; {orbits_transported} orbits transported"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asm_counts_follow_the_known_sequence() {
        assert_eq!(asm_count(1), 1);
        assert_eq!(asm_count(2), 2);
        assert_eq!(asm_count(3), 7);
        assert_eq!(asm_count(4), 42);
    }

    #[test]
    fn unknown_claim_is_an_error() {
        assert!(run_claim("no-such-claim", &VerifyOptions::default()).is_err());
    }

    #[test]
    fn claim_ids_are_unique() {
        let mut ids = claim_ids();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), claims().len());
    }

    #[test]
    fn scrambled_sweep_differs() {
        // The mutation switch must actually change the promotion word.
        let p = RankedPoset::chain_product(&[3, 3]).unwrap();
        let v = DirectionVector::ones(2);
        let clean = promotion_word(&p, &v).unwrap();
        let dirty = promotion_word_scrambled(&p, &v).unwrap();
        assert_ne!(clean.factors(), dirty.factors());
    }
}
