//! Graded dimensions of the algebra S itself, by exact elimination in the
//! free algebra.
//!
//! In degree d the free algebra k⟨x,y,z⟩ has the 3^d words as a basis.  The
//! degree-d piece of the relation ideal is spanned by u·r·v over relations
//! r ∈ {f, g, h} and words u, v with |u| + |v| = d − 2; each such element is
//! a 3-term row in the word basis.  The graded dimension of S is
//!
//! ```text
//!   dim S_d = 3^d − rank { u·r·v rows },
//! ```
//!
//! computed with fraction-free sparse elimination, so the published values
//! 1, 3, 6, 12, 24, 48, 96, … (tripling start, then doubling — the closed
//! form is [`dim_s_formula`]) are reproduced without any floating point.
//! The row count grows like (d−1)·3^{d−1}, so degrees beyond a configurable
//! bound are rejected rather than silently ground through.

use num_traits::Zero;

use crate::linalg::{sparse_rank, SparseRow};
use crate::relations::{QuadraticRelationSet, RelLabel};
use crate::{Error, Result};

/// Default guard on the elimination size (3^8 columns ≈ 6.5k is still fine;
/// beyond that the caller must opt in via [`dim_s_with_bound`]).
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// dim S_d with the default degree bound.
pub fn dim_s(d: usize) -> Result<usize> {
    dim_s_with_bound(d, DEFAULT_MAX_DEGREE)
}

/// dim S_d, rejecting degrees above `max_d` with [`Error::DegreeTooLarge`].
pub fn dim_s_with_bound(d: usize, max_d: usize) -> Result<usize> {
    if d > max_d {
        return Err(Error::DegreeTooLarge { got: d, max: max_d });
    }
    match d {
        0 => Ok(1),
        1 => Ok(3),
        _ => {
            let rows = relation_rows(&QuadraticRelationSet::standard(), d);
            Ok(3usize.pow(d as u32) - sparse_rank(rows))
        }
    }
}

/// The closed form 3·2^{d−1} (and 1 in degree zero) that the eliminated
/// dimensions follow.
pub fn dim_s_formula(d: usize) -> usize {
    if d == 0 {
        1
    } else {
        3 << (d - 1)
    }
}

/// The rows u·r·v of the degree-d relation space in the word basis: for each
/// split |u| + |v| = d − 2, each pair of flanking words, and each relation,
/// one row with the relation's three coefficients at the words u·a·b·v.
fn relation_rows(rels: &QuadraticRelationSet, d: usize) -> Vec<SparseRow> {
    debug_assert!(d >= 2);
    let mut rows = Vec::new();
    for left_len in 0..=(d - 2) {
        let right_len = d - 2 - left_len;
        let left_count = 3usize.pow(left_len as u32);
        let right_count = 3usize.pow(right_len as u32);
        for left in 0..left_count {
            for right in 0..right_count {
                for label in RelLabel::ALL {
                    let c = rels.relation(label);
                    let mut row: SparseRow = Vec::with_capacity(3);
                    for a in 0..3 {
                        for b in 0..3 {
                            if c[a][b].is_zero() {
                                continue;
                            }
                            // Column of the word u·a·b·v in base-3, reading
                            // word letters left to right as high digits.
                            let col = ((left * 3 + a) * 3 + b) * right_count + right;
                            row.push((col, c[a][b].clone()));
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}
