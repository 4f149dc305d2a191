//! Cut-point configurations on the moment curve and the exact sign of
//! the quadrant-mass derivative matrix.
//!
//! For a canonical signed word (first letter `A`, signs `(+,+)`) the
//! free point sits on the first hyperplane ahead of all intervals, and
//! every interval is cut three times: an `a`-interval by the first,
//! second, first hyperplane in curve order, a `b`-interval by the
//! second, first, second. This is the unique assignment under which
//! each hyperplane meets the curve in exactly `d = (3j+1)/2` points.
//!
//! Walking the curve from the `(+,+)` segment behind the first
//! interval and flipping one sign per crossing labels every quarter
//! segment with a quadrant. Moving a cut right grows the quarter on
//! its left and shrinks the one on its right, which fills a square
//! matrix over rows (measure, tracked quadrant; the `(-,-)` quadrant
//! is dropped) and columns (cut coordinates, first hyperplane's then
//! the second's). The determinant sign of that matrix is the
//! orientation datum each two-component class contributes, and it is
//! cross-checked against an independent factorization into per-interval
//! 3x3 blocks times a shuffle permutation.

use crate::dynamics::{Sign, SignPair, SignedWord};
use crate::words::Letter;
use crate::Error;
use alloc::vec::Vec;
use core::fmt;

/// Which of the two hyperplanes a cut belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hyperplane {
    First,
    Second,
}

impl Hyperplane {
    /// Coordinate letter used in labels: `x` for the first hyperplane,
    /// `y` for the second.
    pub const fn axis(self) -> char {
        match self {
            Hyperplane::First => 'x',
            Hyperplane::Second => 'y',
        }
    }
}

/// One interior intersection point in curve order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cut {
    pub hyperplane: Hyperplane,
    /// 1-based index along its own hyperplane (the free point is the
    /// first hyperplane's index 1, so interior first-hyperplane cuts
    /// start at 2).
    pub coordinate: usize,
    /// 0-based interval (= measure) index.
    pub interval: usize,
    /// Quadrant label of the quarter segment left of the cut.
    pub left: SignPair,
    /// Quadrant label right of the cut.
    pub right: SignPair,
}

/// The full cut-point layout for one canonical signed word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutConfiguration {
    word: SignedWord,
    intervals: Vec<Letter>,
    cuts: Vec<Cut>,
}

/// Order of the three tracked quadrant rows within each measure block.
/// Flipping it negates every determinant for odd `j` and must leave
/// all admissibility verdicts unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RowOrder {
    /// `(+,+), (+,-), (-,+)`.
    #[default]
    Standard,
    /// `(-,+), (+,-), (+,+)`.
    Reversed,
}

impl RowOrder {
    pub fn quadrants(self) -> [SignPair; 3] {
        let pp = SignPair::new(Sign::Plus, Sign::Plus);
        let pm = SignPair::new(Sign::Plus, Sign::Minus);
        let mp = SignPair::new(Sign::Minus, Sign::Plus);
        match self {
            RowOrder::Standard => [pp, pm, mp],
            RowOrder::Reversed => [mp, pm, pp],
        }
    }
}

/// Builds the cut configuration of a canonical signed word: free point
/// on the first hyperplane ahead of all intervals, per-interval cut
/// patterns from the lowercase letters, quadrant labels propagated
/// from `(+,+)` on the segment between the free point and the first
/// interval.
pub fn build_configuration(word: &SignedWord) -> Result<CutConfiguration, Error> {
    let len = word.word.len();
    if len < 2 || !len.is_multiple_of(2) {
        return Err(Error::WordNotCanonical("length must be even and at least 2"));
    }
    if !word.word.is_balanced() {
        return Err(Error::WordNotCanonical("word must be balanced"));
    }
    if word.word.letter(0) != Letter::A {
        return Err(Error::WordNotCanonical("first letter must be A"));
    }
    if word.signs != SignPair::PLUS_PLUS {
        return Err(Error::WordNotCanonical("signs must be (+,+)"));
    }

    let intervals: Vec<Letter> = word.word.letters().skip(1).collect();
    let mut cuts = Vec::with_capacity(3 * intervals.len());
    let mut next_coordinate = [2usize, 1usize]; // the free point is x1
    let mut label = SignPair::PLUS_PLUS;
    for (interval, &letter) in intervals.iter().enumerate() {
        let pattern = match letter {
            Letter::A => [Hyperplane::First, Hyperplane::Second, Hyperplane::First],
            Letter::B => [Hyperplane::Second, Hyperplane::First, Hyperplane::Second],
        };
        for hyperplane in pattern {
            let left = label;
            label = match hyperplane {
                Hyperplane::First => SignPair::new(label.first.flipped(), label.second),
                Hyperplane::Second => SignPair::new(label.first, label.second.flipped()),
            };
            let slot = (hyperplane == Hyperplane::Second) as usize;
            cuts.push(Cut {
                hyperplane,
                coordinate: next_coordinate[slot],
                interval,
                left,
                right: label,
            });
            next_coordinate[slot] += 1;
        }
    }

    let config = CutConfiguration {
        word: *word,
        intervals,
        cuts,
    };
    let d = config.space_dimension();
    debug_assert_eq!(next_coordinate, [d + 1, d + 1], "each hyperplane carries d points");
    Ok(config)
}

impl CutConfiguration {
    pub fn word(&self) -> &SignedWord {
        &self.word
    }

    /// Measure count.
    pub fn j(&self) -> usize {
        self.intervals.len()
    }

    /// Ambient dimension `d = (3j + 1) / 2`; also the number of points
    /// each hyperplane places on the curve.
    pub fn space_dimension(&self) -> usize {
        (3 * self.j()).div_ceil(2)
    }

    pub fn intervals(&self) -> &[Letter] {
        &self.intervals
    }

    /// Interior cuts in curve order, `3j` of them.
    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    /// Standard column index of a cut: `x2..xd` then `y1..yd`.
    fn column_of(&self, cut: &Cut) -> usize {
        match cut.hyperplane {
            Hyperplane::First => cut.coordinate - 2,
            Hyperplane::Second => (self.space_dimension() - 1) + (cut.coordinate - 1),
        }
    }
}

/// The matrix of quadrant-mass derivatives: rows run over
/// (measure, tracked quadrant), columns over cut coordinates. Every
/// entry is −1, 0 or +1 and every column touches at most two rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    size: usize,
    entries: Vec<i8>,
    rows: Vec<(usize, SignPair)>,
    columns: Vec<(Hyperplane, usize)>,
}

impl SignMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.size + col]
    }

    /// `(measure index, quadrant)` per row; measures are 1-based in
    /// labels.
    pub fn rows(&self) -> &[(usize, SignPair)] {
        &self.rows
    }

    pub fn columns(&self) -> &[(Hyperplane, usize)] {
        &self.columns
    }

    pub fn row_label(&self, row: usize) -> alloc::string::String {
        let (measure, q) = self.rows[row];
        alloc::format!("b{}{}", measure + 1, q)
    }

    pub fn column_label(&self, col: usize) -> alloc::string::String {
        let (h, c) = self.columns[col];
        alloc::format!("{}{}", h.axis(), c)
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>6}", "")?;
        for c in 0..self.size {
            write!(f, " {:>4}", self.column_label(c))?;
        }
        writeln!(f)?;
        for r in 0..self.size {
            write!(f, "{:>6}", self.row_label(r))?;
            for c in 0..self.size {
                let e = self.entry(r, c);
                if e == 0 {
                    write!(f, " {:>4}", ".")?;
                } else {
                    write!(f, " {:>+4}", e)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Assembles the derivative matrix of a configuration. Each column
/// gets +1 at the row of the quadrant left of its cut and −1 at the
/// row right of it, restricted to the three tracked quadrants of the
/// cut's own measure.
pub fn sign_matrix(config: &CutConfiguration, order: RowOrder) -> Result<SignMatrix, Error> {
    let j = config.j();
    let size = 3 * j;
    let quadrants = order.quadrants();
    let rows: Vec<(usize, SignPair)> = (0..j)
        .flat_map(|i| quadrants.iter().map(move |&q| (i, q)))
        .collect();
    let mut columns = alloc::vec![(Hyperplane::First, 0usize); size];
    let mut entries = alloc::vec![0i8; size * size];

    for cut in config.cuts() {
        // Interval labels must exhaust all four quadrants.
        if cut.left == cut.right {
            return Err(Error::Inconsistency("cut separates equal labels"));
        }
        let col = config.column_of(cut);
        columns[col] = (cut.hyperplane, cut.coordinate);
        let row_base = 3 * cut.interval;
        for (r, &q) in quadrants.iter().enumerate() {
            if q == cut.left {
                entries[(row_base + r) * size + col] = 1;
            } else if q == cut.right {
                entries[(row_base + r) * size + col] = -1;
            }
        }
    }

    Ok(SignMatrix {
        size,
        entries,
        rows,
        columns,
    })
}

/// Exact determinant sign by fraction-free integer elimination.
/// The matrix must be unimodular: a zero determinant signals a broken
/// configuration, any other magnitude a bookkeeping bug.
pub fn det_sign(matrix: &SignMatrix) -> Result<Sign, Error> {
    let n = matrix.size;
    let mut m: Vec<i128> = matrix.entries.iter().map(|&e| e as i128).collect();
    let det = bareiss_determinant(&mut m, n)?;
    match det {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        0 => Err(Error::Inconsistency("sign matrix is singular")),
        _ => Err(Error::Inconsistency("sign matrix is not unimodular")),
    }
}

/// Bareiss elimination; every division is exact.
fn bareiss_determinant(m: &mut [i128], n: usize) -> Result<i128, Error> {
    if n == 0 {
        return Ok(1);
    }
    let mut swaps = 0usize;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            let Some(pivot) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return Ok(0);
            };
            for c in 0..n {
                m.swap(k * n + c, pivot * n + c);
            }
            swaps += 1;
        }
        for i in k + 1..n {
            for jj in k + 1..n {
                let num = m[i * n + jj]
                    .checked_mul(m[k * n + k])
                    .and_then(|t| t.checked_sub(m[i * n + k].checked_mul(m[k * n + jj])?))
                    .ok_or(Error::Inconsistency("determinant overflow"))?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                m[i * n + jj] = num / prev;
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    let det = m[(n - 1) * n + (n - 1)];
    Ok(if swaps % 2 == 1 { -det } else { det })
}

/// Independent determinant route: reorder columns into curve order,
/// where the matrix becomes block diagonal with one 3x3 block per
/// interval, and multiply the block determinant signs by the sign of
/// the column shuffle.
pub fn block_diagonal_sign(config: &CutConfiguration, order: RowOrder) -> Result<Sign, Error> {
    let quadrants = order.quadrants();
    let mut product = Sign::Plus;

    for (interval, chunk) in config.cuts().chunks(3).enumerate() {
        let mut block = [[0i64; 3]; 3];
        for (c, cut) in chunk.iter().enumerate() {
            debug_assert_eq!(cut.interval, interval);
            for (r, &q) in quadrants.iter().enumerate() {
                if q == cut.left {
                    block[r][c] = 1;
                } else if q == cut.right {
                    block[r][c] = -1;
                }
            }
        }
        let det = block[0][0] * (block[1][1] * block[2][2] - block[1][2] * block[2][1])
            - block[0][1] * (block[1][0] * block[2][2] - block[1][2] * block[2][0])
            + block[0][2] * (block[1][0] * block[2][1] - block[1][1] * block[2][0]);
        product = match det {
            1 => product,
            -1 => -product,
            _ => return Err(Error::Inconsistency("interval block is not invertible")),
        };
    }

    // Parity of the shuffle taking standard column order to curve order.
    let positions: Vec<usize> = config.cuts().iter().map(|c| config.column_of(c)).collect();
    let mut inversions = 0usize;
    for i in 0..positions.len() {
        for jj in i + 1..positions.len() {
            if positions[i] > positions[jj] {
                inversions += 1;
            }
        }
    }
    Ok(product.flipped_if(inversions % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::str::FromStr;

    fn config(word: &str) -> CutConfiguration {
        let sw = SignedWord::from_str(word).unwrap();
        build_configuration(&sw).unwrap()
    }

    #[test]
    fn rejects_non_canonical_words() {
        for bad in ["BAAB++", "AABB+-", "AAAB++"] {
            let sw = SignedWord::from_str(bad).unwrap();
            assert!(build_configuration(&sw).is_err(), "{bad} must be rejected");
        }
    }

    #[test]
    fn aaabbb_point_layout() {
        let c = config("AAABBB++");
        assert_eq!(c.j(), 5);
        assert_eq!(c.space_dimension(), 8);
        // Intervals a,a,b,b,b; first-hyperplane interior points split
        // 2+2+1+1+1 across them, with the free point making 8 total.
        let per_interval: Vec<usize> = (0..5)
            .map(|i| {
                c.cuts()
                    .iter()
                    .filter(|cut| cut.interval == i && cut.hyperplane == Hyperplane::First)
                    .count()
            })
            .collect();
        assert_eq!(per_interval, [2, 2, 1, 1, 1]);
        assert_eq!(c.cuts().len(), 15);
        // Natural curve order of coordinates.
        let order: Vec<alloc::string::String> = c
            .cuts()
            .iter()
            .map(|cut| alloc::format!("{}{}", cut.hyperplane.axis(), cut.coordinate))
            .collect();
        assert_eq!(
            order,
            [
                "x2", "y1", "x3", "x4", "y2", "x5", "y3", "x6", "y4", "y5", "x7", "y6", "y7",
                "x8", "y8"
            ]
        );
    }

    #[test]
    fn ababab_point_layout() {
        let c = config("ABABAB++");
        let first = c
            .cuts()
            .iter()
            .filter(|cut| cut.hyperplane == Hyperplane::First)
            .count();
        let second = c.cuts().len() - first;
        assert_eq!((first + 1, second), (8, 8));
    }

    #[test]
    fn cut_count_matches_degrees_of_freedom() {
        for word in ["AB++", "AABB++", "AABABB++", "AAAABBBB++"] {
            let c = config(word);
            assert_eq!(c.cuts().len(), 3 * c.j());
            assert_eq!(3 * c.j() + 1, 2 * c.space_dimension());
        }
    }

    #[test]
    fn columns_have_at_most_two_entries() {
        for word in ["AAABBB++", "ABABAB++", "AABABB++"] {
            let m = sign_matrix(&config(word), RowOrder::Standard).unwrap();
            for col in 0..m.size() {
                let nonzero = (0..m.size()).filter(|&r| m.entry(r, col) != 0).count();
                assert!((1..=2).contains(&nonzero), "{word} column {col}");
            }
        }
    }

    #[test]
    fn anchor_determinant_signs() {
        // The permutation expansion has 7 negative entries and 19
        // inversions in the first case, 7 and 30 in the second.
        let aaabbb = sign_matrix(&config("AAABBB++"), RowOrder::Standard).unwrap();
        assert_eq!(det_sign(&aaabbb).unwrap(), Sign::Plus);
        let ababab = sign_matrix(&config("ABABAB++"), RowOrder::Standard).unwrap();
        assert_eq!(det_sign(&ababab).unwrap(), Sign::Minus);
    }

    #[test]
    fn det_sign_basics() {
        let identity = SignMatrix {
            size: 15,
            entries: (0..15 * 15)
                .map(|i| i8::from(i % 16 == 0))
                .collect(),
            rows: alloc::vec![(0, SignPair::PLUS_PLUS); 15],
            columns: alloc::vec![(Hyperplane::First, 1); 15],
        };
        assert_eq!(det_sign(&identity).unwrap(), Sign::Plus);

        let mut swapped = identity.clone();
        for c in 0..15 {
            swapped.entries.swap(c, 15 + c);
        }
        assert_eq!(det_sign(&swapped).unwrap(), Sign::Minus);

        let mut singular = identity;
        singular.entries[0] = 0;
        assert_eq!(
            det_sign(&singular).unwrap_err(),
            Error::Inconsistency("sign matrix is singular")
        );
    }

    #[test]
    fn block_route_agrees_with_elimination() {
        for word in ["AAABBB++", "ABABAB++", "AABABB++", "AABB++", "AB++"] {
            let c = config(word);
            for order in [RowOrder::Standard, RowOrder::Reversed] {
                let direct = det_sign(&sign_matrix(&c, order).unwrap()).unwrap();
                let blocks = block_diagonal_sign(&c, order).unwrap();
                assert_eq!(direct, blocks, "{word} with {order:?}");
            }
        }
    }

    #[test]
    fn row_order_flip_negates_odd_j_determinants() {
        for word in ["AAABBB++", "ABABAB++", "AABB++"] {
            let c = config(word);
            let standard = det_sign(&sign_matrix(&c, RowOrder::Standard).unwrap()).unwrap();
            let reversed = det_sign(&sign_matrix(&c, RowOrder::Reversed).unwrap()).unwrap();
            assert_eq!(standard, -reversed, "{word}: j odd flips the sign");
        }
    }
}
