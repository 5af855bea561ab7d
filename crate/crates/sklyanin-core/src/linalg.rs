//! Exact linear algebra: 3×3 minor calculus over any commutative ring and a
//! sparse fraction-free eliminator for ranks of larger matrices.
//!
//! Nothing in this module divides, so every routine works verbatim over
//! ℚ(ζ₃) and over the polynomial ring ℚ(ζ₃)[t]: ranks computed on polynomial
//! matrices are ranks over the rational function field.  Pivoting is fully
//! deterministic — rows are consumed in the order supplied and each pivot is
//! the lowest-index nonzero column of its (reduced) row — so identical inputs
//! always produce identical elimination traces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalars::{Eis, Rational};

/// The ring operations needed by the 3×3 minor calculus.
pub trait Ring: Clone + PartialEq + Zero + std::ops::Mul<Output = Self> + std::ops::Sub<Output = Self> {}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + std::ops::Mul<Output = Self> + std::ops::Sub<Output = Self>
{
}

/// A 3×3 matrix as an array of rows.
pub type Matrix3<T> = [[T; 3]; 3];

/// Determinant by cofactor expansion along the first row.
pub fn det3<T: Ring>(m: &Matrix3<T>) -> T {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
    };
    m[0][0].clone() * minor(1, 2, 1, 2) - m[0][1].clone() * minor(1, 2, 0, 2)
        + m[0][2].clone() * minor(1, 2, 0, 1)
}

/// Cross product of two rows; spans the kernel when the matrix has rank 2.
pub fn row_cross<T: Ring>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

/// Exact rank of a 3×3 matrix by minor inspection: rank 3 iff the
/// determinant is nonzero, rank ≥ 2 iff some 2×2 minor is nonzero, rank ≥ 1
/// iff some entry is nonzero.  Division-free, hence valid over any integral
/// domain (in particular over polynomial entries, where it computes the rank
/// over the fraction field).
pub fn rank3<T: Ring>(m: &Matrix3<T>) -> usize {
    if !det3(m).is_zero() {
        return 3;
    }
    for r1 in 0..3 {
        for r2 in (r1 + 1)..3 {
            for c1 in 0..3 {
                for c2 in (c1 + 1)..3 {
                    let minor =
                        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone();
                    if !minor.is_zero() {
                        return 2;
                    }
                }
            }
        }
    }
    if m.iter().flatten().any(|e| !e.is_zero()) {
        return 1;
    }
    0
}

/// For a rank-2 matrix, a nonzero kernel vector: the cross product of the
/// first row pair (in index order) that is linearly independent.
///
/// Returns `None` when every pairwise cross product vanishes, i.e. when the
/// rank is not 2.
pub fn kernel_direction<T: Ring>(m: &Matrix3<T>) -> Option<[T; 3]> {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let v = row_cross(&m[i], &m[j]);
        if v.iter().any(|c| !c.is_zero()) {
            return Some(v);
        }
    }
    None
}

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Eis)>;

/// Incremental fraction-free Gaussian elimination over ℚ(ζ₃).
///
/// Rows are added one at a time (lowest row first) and reduced against the
/// pivots accumulated so far; a surviving row becomes the pivot of its
/// leading column.  Row combinations use cross-multiplication by leading
/// entries — never division — and every stored row is renormalized to have
/// integral coefficients with no common content, which keeps entries small
/// without leaving the ring.
#[derive(Default)]
pub struct SparseEliminator {
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEliminator {
    pub fn new() -> Self {
        SparseEliminator::default()
    }

    /// Number of independent rows seen so far.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` when it was independent of the rows seen
    /// before (i.e. the rank grew).
    pub fn add_row(&mut self, row: SparseRow) -> bool {
        let mut row = normalize_row(row);
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return false; // reduced to zero: dependent
            };
            match self.pivots.get(&lead_col) {
                None => {
                    self.pivots.insert(lead_col, row);
                    return true;
                }
                Some(pivot) => {
                    let pivot_lead = pivot.first().expect("pivot rows are nonempty").1.clone();
                    row = normalize_row(combine(&pivot_lead, &row, &lead_val, pivot));
                }
            }
        }
    }
}

/// `a·r − b·p` on sorted sparse rows (the leading column cancels).
fn combine(a: &Eis, r: &SparseRow, b: &Eis, p: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let next = match (r.get(i), p.get(j)) {
            (Some(&(ci, _)), Some(&(cj, _))) if ci == cj => {
                let v = a * &r[i].1 - (b * &p[j].1);
                i += 1;
                j += 1;
                (ci, v)
            }
            (Some(&(ci, _)), Some(&(cj, _))) if ci < cj => {
                let v = a * &r[i].1;
                i += 1;
                (ci, v)
            }
            (Some(_), Some(&(cj, _))) => {
                let v = -(b * &p[j].1);
                j += 1;
                (cj, v)
            }
            (Some(&(ci, _)), None) => {
                let v = a * &r[i].1;
                i += 1;
                (ci, v)
            }
            (None, Some(&(cj, _))) => {
                let v = -(b * &p[j].1);
                j += 1;
                (cj, v)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// Drops zero entries and rescales the row by a positive rational so that all
/// coordinates of all entries are integers with overall content 1.
fn normalize_row(row: SparseRow) -> SparseRow {
    let row: SparseRow = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    if row.is_empty() {
        return row;
    }
    let mut denom_lcm = BigInt::one();
    for (_, v) in &row {
        denom_lcm = denom_lcm.lcm(v.re().denom());
        denom_lcm = denom_lcm.lcm(v.ze().denom());
    }
    let mut numer_gcd = BigInt::zero();
    for (_, v) in &row {
        // After scaling by the common denominator every coordinate is the
        // integer numer * (lcm / denom); fold them all into one gcd.
        for part in [v.re(), v.ze()] {
            let scaled = part.numer() * (&denom_lcm / part.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
    }
    let factor = Eis::from_rational(Rational::new(denom_lcm, numer_gcd.abs()));
    row.into_iter().map(|(c, v)| (c, v * factor.clone())).collect()
}

/// Rank of a matrix given as sparse rows (any order of columns inside a row
/// is tolerated; rows are sorted on entry).
pub fn sparse_rank<I>(rows: I) -> usize
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut elim = SparseEliminator::new();
    for mut row in rows {
        row.sort_by_key(|&(c, _)| c);
        elim.add_row(row);
    }
    elim.rank()
}
