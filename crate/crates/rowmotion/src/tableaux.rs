//! Increasing tableaux, K-promotion, and the correspondence with order
//! ideals of a product of three chains.
//!
//! An increasing tableau of shape `a x b` has entries in `1..=q` strictly
//! increasing along rows and columns. The ideals of `[a] x [b] x [c]`
//! correspond to tableaux with `q = a + b + c - 1`: stack an ideal into the
//! box, record the column heights over the `a x b` face, rotate the height
//! table 180 degrees, and add one more than the taxicab distance to the
//! top-left corner. Under this correspondence, promotion of ideals in the
//! direction `(1, 1, -1)` becomes K-promotion of tableaux.
//!
//! K-promotion is realized as the composition of the K-Bender-Knuth
//! involutions `rho_1, ..., rho_{q-1}` (in that order). The literature
//! usually introduces K-promotion through K-jeu-de-taquin; the ladder of
//! involutions used here is the standard equivalent form, and the
//! equivariance with ideal promotion is verified exhaustively by this
//! crate's test and verification suites rather than assumed.

use crate::error::{Error, Result};
use crate::poset::{chain_index, OrderIdeal, RankedPoset};

/// An `a x b` grid with entries in `1..=q`, strictly increasing along rows
/// and columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IncreasingTableau {
    rows: usize,
    cols: usize,
    max_entry: u32,
    entries: Vec<u32>,
}

impl IncreasingTableau {
    pub fn new(rows: usize, cols: usize, max_entry: u32, entries: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions("tableau shape must be nonempty".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Validation(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let t = IncreasingTableau { rows, cols, max_entry, entries };
        for i in 1..=rows {
            for j in 1..=cols {
                let e = t.get(i, j);
                if e < 1 || e > max_entry {
                    return Err(Error::Validation(format!(
                        "entry {e} at ({i},{j}) outside 1..={max_entry}"
                    )));
                }
                if j < cols && t.get(i, j + 1) <= e {
                    return Err(Error::Validation(format!(
                        "row {i} is not strictly increasing"
                    )));
                }
                if i < rows && t.get(i + 1, j) <= e {
                    return Err(Error::Validation(format!(
                        "column {j} is not strictly increasing"
                    )));
                }
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry bound `q` defining the ambient set `Inc^q`.
    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    /// 1-based access.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[(row - 1) * self.cols + (col - 1)]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Text form: a header line `a b q`, then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.max_entry);
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Validation("empty tableau text".into()))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 3 {
            return Err(Error::Validation(
                "tableau header must be `rows cols max_entry`".into(),
            ));
        }
        let rows: usize = head[0]
            .parse()
            .map_err(|_| Error::Validation("bad row count".into()))?;
        let cols: usize = head[1]
            .parse()
            .map_err(|_| Error::Validation("bad column count".into()))?;
        let q: u32 = head[2]
            .parse()
            .map_err(|_| Error::Validation("bad entry bound".into()))?;
        let mut entries = Vec::with_capacity(rows * cols);
        for line in lines {
            for tok in line.split_whitespace() {
                entries.push(
                    tok.parse::<u32>()
                        .map_err(|_| Error::Validation(format!("bad entry `{tok}`")))?,
                );
            }
        }
        Self::new(rows, cols, q, entries)
    }
}

impl std::fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A set of cells within an `a x b` shape, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    rows: usize,
    cols: usize,
    cells: std::collections::BTreeSet<(usize, usize)>,
}

impl CellSet {
    pub fn from_cells(
        rows: usize,
        cols: usize,
        cells: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = std::collections::BTreeSet::new();
        for (i, j) in cells {
            if i < 1 || i > rows || j < 1 || j > cols {
                return Err(Error::Validation(format!(
                    "cell ({i},{j}) outside the {rows} x {cols} shape"
                )));
            }
            set.insert((i, j));
        }
        Ok(CellSet { rows, cols, cells: set })
    }

    /// Every cell of the shape.
    pub fn full(rows: usize, cols: usize) -> Self {
        let cells = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .collect();
        CellSet { rows, cols, cells }
    }

    /// The frame: all cells in the first or last row, or in the first or
    /// last column.
    pub fn frame(rows: usize, cols: usize) -> Self {
        let cells = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .filter(|&(i, j)| i == 1 || i == rows || j == 1 || j == cols)
            .collect();
        CellSet { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.contains(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    /// Whether the set is fixed by 180-degree rotation of the shape,
    /// `(i, j) -> (rows + 1 - i, cols + 1 - j)`.
    pub fn is_rotation_symmetric(&self) -> bool {
        self.cells
            .iter()
            .all(|&(i, j)| self.cells.contains(&(self.rows + 1 - i, self.cols + 1 - j)))
    }

    /// Whether every cell lies on the frame of the shape.
    pub fn is_within_frame(&self) -> bool {
        self.cells
            .iter()
            .all(|&(i, j)| i == 1 || i == self.rows || j == 1 || j == self.cols)
    }
}

fn box_dims(p: &RankedPoset) -> Result<(usize, usize, usize)> {
    match p.dims() {
        Some(&[a, b, c]) => Ok((a, b, c)),
        _ => Err(Error::Validation(
            "this operation needs a product of exactly three chains".into(),
        )),
    }
}

/// Maps an ideal of `[a] x [b] x [c]` to its increasing tableau of shape
/// `a x b` with entries at most `a + b + c - 1`.
pub fn psi(p: &RankedPoset, ideal: OrderIdeal) -> Result<IncreasingTableau> {
    let (a, b, c) = box_dims(p)?;
    let dims = [a, b, c];
    let q = (a + b + c - 1) as u32;
    let mut entries = Vec::with_capacity(a * b);
    for i in 1..=a {
        for j in 1..=b {
            // Column height at the rotated position, plus one more than the
            // taxicab distance from the top-left corner.
            let (ri, rj) = (a + 1 - i, b + 1 - j);
            let mut height = 0u32;
            for k in 1..=c {
                if ideal.contains(chain_index(&dims, &[ri as i64, rj as i64, k as i64])) {
                    height += 1;
                }
            }
            entries.push(height + (i + j - 1) as u32);
        }
    }
    IncreasingTableau::new(a, b, q, entries)
}

/// Inverts [`psi`]: recovers the ideal of `[a] x [b] x [c]` whose tableau is
/// `t`. Fails with a not-in-image error when some entry leaves no valid
/// column height, since `Inc^q(a x b)` is larger than the image for other
/// entry bounds.
pub fn psi_inv(p: &RankedPoset, t: &IncreasingTableau) -> Result<OrderIdeal> {
    let (a, b, c) = box_dims(p)?;
    if t.rows() != a || t.cols() != b {
        return Err(Error::Validation(format!(
            "tableau shape {} x {} does not match the {} x {} box face",
            t.rows(),
            t.cols(),
            a,
            b
        )));
    }
    let dims = [a, b, c];
    let mut bits = 0u128;
    for i in 1..=a {
        for j in 1..=b {
            let entry = t.get(a + 1 - i, b + 1 - j) as i64;
            let height = entry - (a + b + 1) as i64 + (i + j) as i64;
            if height < 0 || height > c as i64 {
                return Err(Error::NotInImage(format!(
                    "entry {} at rotated cell ({},{}) implies column height {}",
                    entry,
                    a + 1 - i,
                    b + 1 - j,
                    height
                )));
            }
            for k in 1..=height {
                bits |= 1u128 << chain_index(&dims, &[i as i64, j as i64, k]);
            }
        }
    }
    if !p.is_ideal(bits) {
        return Err(Error::NotInImage(
            "column heights are not monotone; no ideal matches".into(),
        ));
    }
    Ok(OrderIdeal::from_bits(bits))
}

/// The K-Bender-Knuth involution `rho_i`: simultaneously, every `i` whose
/// right and lower neighbors avoid `i + 1` becomes `i + 1`, and every
/// `i + 1` whose left and upper neighbors avoid `i` becomes `i`.
pub fn k_bender_knuth(t: &IncreasingTableau, i: u32) -> Result<IncreasingTableau> {
    let q = t.max_entry();
    if i < 1 || i >= q {
        return Err(Error::Validation(format!(
            "involution index {i} outside 1..={}",
            q - 1
        )));
    }
    let (rows, cols) = (t.rows(), t.cols());
    let mut next = t.entries().to_vec();
    for r in 1..=rows {
        for c in 1..=cols {
            let e = t.get(r, c);
            if e == i {
                let right_blocks = c < cols && t.get(r, c + 1) == i + 1;
                let below_blocks = r < rows && t.get(r + 1, c) == i + 1;
                if !right_blocks && !below_blocks {
                    next[(r - 1) * cols + (c - 1)] = i + 1;
                }
            } else if e == i + 1 {
                let left_blocks = c > 1 && t.get(r, c - 1) == i;
                let above_blocks = r > 1 && t.get(r - 1, c) == i;
                if !left_blocks && !above_blocks {
                    next[(r - 1) * cols + (c - 1)] = i;
                }
            }
        }
    }
    IncreasingTableau::new(rows, cols, q, next)
        .map_err(|e| Error::Internal(format!("K-Bender-Knuth broke the increasing property: {e}")))
}

/// K-promotion: the involutions `rho_1, ..., rho_{q-1}` applied in order.
pub fn k_promotion(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    let mut cur = t.clone();
    for i in 1..t.max_entry() {
        cur = k_bender_knuth(&cur, i)?;
    }
    Ok(cur)
}

/// Sum of the entries over a cell set.
pub fn sigma(t: &IncreasingTableau, cells: &CellSet) -> Result<i64> {
    if cells.rows() != t.rows() || cells.cols() != t.cols() {
        return Err(Error::Validation(format!(
            "cell set shape {} x {} does not match tableau shape {} x {}",
            cells.rows(),
            cells.cols(),
            t.rows(),
            t.cols()
        )));
    }
    Ok(cells.iter().map(|(i, j)| i64::from(t.get(i, j))).sum())
}

/// All of `Inc^q(rows x cols)` by direct backtracking, sorted by entry list.
pub fn enumerate_tableaux(rows: usize, cols: usize, q: u32, cap: u64) -> Result<Vec<IncreasingTableau>> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidDimensions("tableau shape must be nonempty".into()));
    }
    let mut out = Vec::new();
    let mut entries = vec![0u32; rows * cols];
    fill(rows, cols, q, 0, &mut entries, &mut out, cap)?;
    Ok(out)
}

fn fill(
    rows: usize,
    cols: usize,
    q: u32,
    pos: usize,
    entries: &mut Vec<u32>,
    out: &mut Vec<IncreasingTableau>,
    cap: u64,
) -> Result<()> {
    if pos == rows * cols {
        if out.len() as u64 >= cap {
            return Err(Error::CapacityExceeded { cap });
        }
        out.push(IncreasingTableau {
            rows,
            cols,
            max_entry: q,
            entries: entries.clone(),
        });
        return Ok(());
    }
    let (r, c) = (pos / cols, pos % cols);
    let mut lo = 1u32;
    if c > 0 {
        lo = lo.max(entries[pos - 1] + 1);
    }
    if r > 0 {
        lo = lo.max(entries[pos - cols] + 1);
    }
    // A strictly increasing path to the bottom-right corner must still fit.
    let slack = (rows - 1 - r) + (cols - 1 - c);
    let hi = q.saturating_sub(slack as u32);
    for e in lo..=hi {
        entries[pos] = e;
        fill(rows, cols, q, pos + 1, entries, out, cap)?;
    }
    Ok(())
}

/// Enumerates the tableaux with `q = a + b + c - 1` through the ideals of
/// the `[a] x [b] x [c]` box. Cross-checks [`enumerate_tableaux`] and is the
/// faster route when the bound matches a box.
pub fn enumerate_tableaux_via_ideals(
    rows: usize,
    cols: usize,
    q: u32,
    cap: u64,
) -> Result<Option<Vec<IncreasingTableau>>> {
    let depth = q as i64 - (rows + cols - 1) as i64;
    if depth < 1 {
        return Ok(None);
    }
    let p = RankedPoset::chain_product(&[rows, cols, depth as usize])?;
    let mut out = Vec::new();
    for ideal in p.enumerate_ideals(cap)? {
        out.push(psi(&p, ideal)?);
    }
    out.sort_unstable();
    Ok(Some(out))
}
