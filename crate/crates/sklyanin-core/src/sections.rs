//! Multidegree-(1,…,1) section spaces of the truncated schemes and the two
//! point parameter rings they compute.
//!
//! On one product component, a section of O(1,…,1) is determined by its
//! values at the component's *section grid*: the tuples assembled from each
//! line factor's two marked points and each point factor itself.  A point
//! factor contributes a factor 1 to the dimension, a line factor a factor 2
//! ([`gamma_dim`]); all grid entries are special points, so the grid is a
//! fully exact object.
//!
//! On a union, sections must agree on the pairwise intersections.  Since any
//! intersection of two components is again a product of the same shape, the
//! agreement is captured by one linear constraint per grid tuple of the
//! intersection ([`gluing_system`]); the section space dimension is the
//! variable count minus the rank of those constraints ([`h0_union`]).
//!
//! [`dim_b`] and [`dim_p`] apply this to the two scheme families: the graded
//! dimension of the point parameter ring of the full successor quiver and of
//! the limiting subquiver.  [`claim_checks`] reproduces the degree-4
//! comparison of the two rings down to every intermediate number, and
//! [`ambient_image_dim`] measures how much of a section space is reached by
//! the 3^d ambient multilinear monomials — an independent, elimination-based
//! route to the same dimensions.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::geometry::{marked_points, Factor, ProjPoint};
use crate::linalg::{sparse_rank, SparseRow};
use crate::scalars::Eis;
use crate::scheme::{limit_scheme, truncated_scheme, ComponentProduct, SchemeUnion};
use crate::{Error, Result};

/// Dimension of the space of multidegree-(1,…,1) sections on one component:
/// 1 per point factor, 2 per line factor, 3 for the whole plane.
pub fn gamma_dim(c: &ComponentProduct) -> usize {
    c.factors()
        .iter()
        .map(|f| match f {
            Factor::Point(_) => 1,
            Factor::Line(_) => 2,
            Factor::WholePlane => 3,
        })
        .product()
}

/// The section grid of a component: every tuple combining each point factor
/// with one of each line factor's two marked points, sorted canonically.
///
/// Evaluation at the grid identifies the section space of the component, so
/// the grid length equals [`gamma_dim`].  Full-plane factors carry no finite
/// grid and are rejected.
pub fn section_grid(c: &ComponentProduct) -> Result<Vec<Vec<ProjPoint>>> {
    let mut tuples: Vec<Vec<ProjPoint>> = vec![Vec::new()];
    for f in c.factors() {
        let choices: Vec<ProjPoint> = match f {
            Factor::Point(p) => vec![p.clone()],
            Factor::Line(l) => {
                let (m0, m1) = marked_points(l);
                vec![m0, m1]
            }
            Factor::WholePlane => return Err(Error::UnexpectedWholePlane),
        };
        let mut next = Vec::with_capacity(tuples.len() * choices.len());
        for t in &tuples {
            for p in &choices {
                let mut extended = t.clone();
                extended.push(p.clone());
                next.push(extended);
            }
        }
        tuples = next;
    }
    tuples.sort();
    Ok(tuples)
}

/// Per-component grids with a global variable numbering.
struct GridIndex {
    grids: Vec<Vec<Vec<ProjPoint>>>,
    offsets: Vec<usize>,
    total: usize,
}

impl GridIndex {
    fn build(scheme: &SchemeUnion) -> Result<Self> {
        let grids = scheme
            .components()
            .iter()
            .map(section_grid)
            .collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::with_capacity(grids.len());
        let mut total = 0;
        for g in &grids {
            offsets.push(total);
            total += g.len();
        }
        Ok(GridIndex {
            grids,
            offsets,
            total,
        })
    }

    /// Global variable index of a tuple within a component's grid.
    fn position(&self, component: usize, tuple: &[ProjPoint]) -> Result<usize> {
        self.grids[component]
            .iter()
            .position(|t| t == tuple)
            .map(|k| self.offsets[component] + k)
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "intersection tuple is not a grid tuple of component {component}"
                ))
            })
    }
}

/// The gluing constraints of a union: variables are grid values per
/// component, rows force agreement at every grid tuple of every pairwise
/// intersection.
pub struct GluingSystem {
    var_count: usize,
    rows: Vec<SparseRow>,
}

impl GluingSystem {
    /// Total number of grid-value variables (Σ of the component dimensions).
    pub fn var_count(&self) -> usize {
        self.var_count
    }

    /// Number of agreement constraints.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// The constraint rows (±1 entries at the two matching grid nodes).
    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Exact rank of the constraint matrix.
    pub fn rank(&self) -> usize {
        sparse_rank(self.rows.iter().cloned())
    }

    /// Dimension of the glued section space: variables minus rank.
    pub fn h0(&self) -> usize {
        self.var_count - self.rank()
    }
}

/// Builds the gluing constraints of a scheme union.
///
/// The degree-1 scheme (the whole plane) carries the 3-dimensional space of
/// linear forms and no constraints.
pub fn gluing_system(scheme: &SchemeUnion) -> Result<GluingSystem> {
    if scheme.components() == [ComponentProduct::new(vec![Factor::WholePlane])?] {
        return Ok(GluingSystem {
            var_count: 3,
            rows: Vec::new(),
        });
    }
    let index = GridIndex::build(scheme)?;
    let comps = scheme.components();
    let mut rows = Vec::new();
    for i in 0..comps.len() {
        for j in (i + 1)..comps.len() {
            let Some(meet) = comps[i].intersect(&comps[j])? else {
                continue;
            };
            for tuple in section_grid(&meet)? {
                let a = index.position(i, &tuple)?;
                let b = index.position(j, &tuple)?;
                let mut row = vec![(a, Eis::one()), (b, -Eis::one())];
                row.sort_by_key(|(col, _)| *col);
                rows.push(row);
            }
        }
    }
    Ok(GluingSystem {
        var_count: index.total,
        rows,
    })
}

/// Dimension of the space of multidegree-(1,…,1) sections on a union.
pub fn h0_union(scheme: &SchemeUnion) -> Result<usize> {
    Ok(gluing_system(scheme)?.h0())
}

/// Graded dimension of the point parameter ring of the full successor
/// quiver: h⁰ of the degree-d truncated scheme (1 in degree zero).
pub fn dim_b(d: usize) -> Result<usize> {
    if d == 0 {
        return Ok(1);
    }
    h0_union(&truncated_scheme(d)?)
}

/// Graded dimension of the point parameter ring of the limiting subquiver:
/// h⁰ of the degree-d limiting scheme (1 in degree zero).
pub fn dim_p(d: usize) -> Result<usize> {
    if d == 0 {
        return Ok(1);
    }
    h0_union(&limit_scheme(d)?)
}

/// Reduces a component list to its maximal antichain (empty stays empty).
fn maximal(components: Vec<ComponentProduct>) -> Result<Vec<ComponentProduct>> {
    if components.is_empty() {
        return Ok(components);
    }
    Ok(SchemeUnion::from_components(components)?
        .components()
        .to_vec())
}

/// Maximal components of the pairwise intersections between two unions.
pub fn cross_intersections(
    left: &SchemeUnion,
    right: &SchemeUnion,
) -> Result<Vec<ComponentProduct>> {
    let mut meets = Vec::new();
    for c in left.components() {
        for d in right.components() {
            if let Some(m) = c.intersect(d)? {
                meets.push(m);
            }
        }
    }
    maximal(meets)
}

/// Maximal components of the pairwise self-intersections of a union
/// (distinct component pairs only).
pub fn self_intersections(scheme: &SchemeUnion) -> Result<Vec<ComponentProduct>> {
    let comps = scheme.components();
    let mut meets = Vec::new();
    for i in 0..comps.len() {
        for j in (i + 1)..comps.len() {
            if let Some(m) = comps[i].intersect(&comps[j])? {
                meets.push(m);
            }
        }
    }
    maximal(meets)
}

/// All distinct geometric grid tuples of a union, sorted canonically.
///
/// Distinctness is exact: grid entries are canonically normalized projective
/// points, so set membership is structural equality.
pub fn distinct_grid_tuples(scheme: &SchemeUnion) -> Result<Vec<Vec<ProjPoint>>> {
    let mut set: BTreeSet<Vec<ProjPoint>> = BTreeSet::new();
    for c in scheme.components() {
        for t in section_grid(c)? {
            set.insert(t);
        }
    }
    Ok(set.into_iter().collect())
}

/// Dimension of the image of the 3^d ambient multidegree-(1,…,1) monomials
/// inside the glued section space of the union.
///
/// A glued section is determined by its values at the distinct geometric
/// grid tuples, so the image dimension is the exact rank of the evaluation
/// matrix (one row per monomial, one column per distinct tuple).  The
/// degree-1 scheme gives the three linear forms.
pub fn ambient_image_dim(scheme: &SchemeUnion) -> Result<usize> {
    if scheme.components() == [ComponentProduct::new(vec![Factor::WholePlane])?] {
        return Ok(3);
    }
    let tuples = distinct_grid_tuples(scheme)?;
    let d = scheme.degree();
    let mut rows = Vec::with_capacity(3usize.pow(d as u32));
    let mut choice = vec![0usize; d];
    loop {
        let mut row: SparseRow = Vec::with_capacity(tuples.len());
        for (col, tuple) in tuples.iter().enumerate() {
            let mut val = Eis::one();
            for (k, &i) in choice.iter().enumerate() {
                val = val * &tuple[k].coords()[i];
            }
            if !val.is_zero() {
                row.push((col, val));
            }
        }
        rows.push(row);
        // Advance the multi-index (i_1, …, i_d) through {0,1,2}^d.
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(sparse_rank(rows));
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < 3 {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Every number appearing in the degree-4 comparison of the two point
/// parameter rings, with any violated expectation recorded in `failures`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    /// Components of the intersection of the alternating part with the rest
    /// of the degree-4 scheme (expected: 12 one-dimensional products).
    pub census_line_count: usize,
    /// Pairwise self-intersections of the limiting scheme (expected: 6
    /// points).
    pub meeting_point_count: usize,
    /// Gluing constraints among the census lines (expected: 6 rows).
    pub census_gluing_rows: usize,
    /// Rank of those constraints (expected: 6).
    pub census_gluing_rank: usize,
    /// Section space of the census union (expected: 18).
    pub census_h0: usize,
    /// Section space of the alternating part, i.e. the degree-4 limiting
    /// scheme (expected: 18).
    pub alternating_h0: usize,
    /// Section space of the six remaining components (expected: 24 — they
    /// are pairwise disjoint).
    pub crossing_h0: usize,
    /// Rank of the difference map from the two section spaces into the
    /// census section space (expected: 18).
    pub difference_rank: usize,
    /// Kernel of the difference map (expected: 24).
    pub difference_kernel: usize,
    /// Directly glued dimension of the full degree-4 scheme (expected: 24).
    pub glued_dimension: usize,
    /// alternating + crossing − census (expected: 24).
    pub inclusion_exclusion: usize,
    /// Violated expectations, in evaluation order; empty means all claims
    /// verified.
    pub failures: Vec<String>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "census lines: {}", self.census_line_count)?;
        writeln!(f, "meeting points: {}", self.meeting_point_count)?;
        writeln!(
            f,
            "census gluing: {} rows, rank {}",
            self.census_gluing_rows, self.census_gluing_rank
        )?;
        writeln!(f, "census sections: {}", self.census_h0)?;
        writeln!(f, "alternating sections: {}", self.alternating_h0)?;
        writeln!(f, "crossing sections: {}", self.crossing_h0)?;
        writeln!(
            f,
            "difference map: rank {}, kernel {}",
            self.difference_rank, self.difference_kernel
        )?;
        writeln!(f, "glued dimension: {}", self.glued_dimension)?;
        writeln!(f, "inclusion-exclusion: {}", self.inclusion_exclusion)?;
        if self.failures.is_empty() {
            write!(f, "all claims verified")
        } else {
            write!(f, "FAILED: {}", self.failures.join("; "))
        }
    }
}

/// Runs the full degree-4 comparison.
///
/// The degree-4 scheme splits into the six alternating components (exactly
/// the limiting scheme) and six others.  The two parts meet in twelve
/// "census" lines; the lines meet each other in the six points where the
/// limiting scheme's own components cross.  Sections of the two parts glue
/// to a section of the whole iff their restrictions to the census agree, so
/// the glued dimension can be recomputed from the rank of the difference
/// map — and a third time by inclusion–exclusion.  Every intermediate count
/// is checked against its expected value.
pub fn claim_checks() -> Result<ClaimReport> {
    let mut failures = Vec::new();
    let v4 = truncated_scheme(4)?;
    let w4 = limit_scheme(4)?;
    for c in w4.components() {
        if !v4.components().contains(c) {
            failures.push(format!("{c} is not a degree-4 component"));
        }
    }
    let crossing: Vec<ComponentProduct> = v4
        .components()
        .iter()
        .filter(|c| !w4.components().contains(c))
        .cloned()
        .collect();
    let x2 = SchemeUnion::from_components(crossing)?;

    // The census: where the alternating part meets the rest.
    let census_lines = cross_intersections(&w4, &x2)?;
    let census_line_count = census_lines.len();
    if census_line_count != 12 {
        failures.push(format!("expected 12 census lines, found {census_line_count}"));
    }
    for c in &census_lines {
        if c.dimension() != 1 {
            failures.push(format!("census component {c} is not one-dimensional"));
        }
    }
    let census = SchemeUnion::from_components(census_lines.clone())?;

    // The six meeting points of the limiting scheme.
    let meeting_points = self_intersections(&w4)?;
    let meeting_point_count = meeting_points.len();
    if meeting_point_count != 6 {
        failures.push(format!(
            "expected 6 meeting points, found {meeting_point_count}"
        ));
    }
    for p in &meeting_points {
        if p.dimension() != 0 {
            failures.push(format!("meeting component {p} is not a point"));
        }
    }
    // The census lines meet each other exactly at those points.
    let census_meets = self_intersections(&census)?;
    if census_meets != meeting_points {
        failures.push("census self-intersections differ from the meeting points".into());
    }
    // Containment combinatorics: each meeting point on exactly 2 census
    // lines, each line through exactly 1 meeting point, each degree-4
    // component containing exactly 2 census lines.
    for p in &meeting_points {
        let on = census_lines
            .iter()
            .filter(|l| l.contains(p).expect("equal degrees"))
            .count();
        if on != 2 {
            failures.push(format!("meeting point {p} lies on {on} census lines, not 2"));
        }
    }
    for l in &census_lines {
        let through = meeting_points
            .iter()
            .filter(|p| l.contains(p).expect("equal degrees"))
            .count();
        if through != 1 {
            failures.push(format!("census line {l} contains {through} meeting points, not 1"));
        }
    }
    for c in v4.components() {
        let inside = census_lines
            .iter()
            .filter(|l| c.contains(l).expect("equal degrees"))
            .count();
        if inside != 2 {
            failures.push(format!("component {c} contains {inside} census lines, not 2"));
        }
    }

    // Section space sizes of the three unions.
    let census_system = gluing_system(&census)?;
    let census_gluing_rows = census_system.row_count();
    let census_gluing_rank = census_system.rank();
    let census_h0 = census_system.h0();
    let alternating_h0 = h0_union(&w4)?;
    let crossing_h0 = h0_union(&x2)?;
    if census_gluing_rows != 6 {
        failures.push(format!("expected 6 census gluing rows, found {census_gluing_rows}"));
    }
    if census_gluing_rank != 6 {
        failures.push(format!("expected census gluing rank 6, found {census_gluing_rank}"));
    }
    if census_h0 != 18 {
        failures.push(format!("expected 18 census sections, found {census_h0}"));
    }
    if alternating_h0 != 18 {
        failures.push(format!("expected 18 alternating sections, found {alternating_h0}"));
    }
    if crossing_h0 != 24 {
        failures.push(format!("expected 24 crossing sections, found {crossing_h0}"));
    }

    // The difference map: sections of the two parts, restricted to the
    // census, subtracted.  Its kernel is the glued section space of the
    // whole scheme; its rank is computed by stacking the alternating
    // gluing rows on top of the restriction rows, since
    // rank(difference on the glued domain) = rank(stack) − rank(gluing).
    let w4_index = GridIndex::build(&w4)?;
    let x2_index = GridIndex::build(&x2)?;
    let w4_gluing = gluing_system(&w4)?;
    let mut stacked: Vec<SparseRow> = w4_gluing.rows().to_vec();
    for line in census.components() {
        let owners_w4: Vec<usize> = (0..w4.components().len())
            .filter(|&i| w4.components()[i].contains(line).expect("equal degrees"))
            .collect();
        let owners_x2: Vec<usize> = (0..x2.components().len())
            .filter(|&i| x2.components()[i].contains(line).expect("equal degrees"))
            .collect();
        if owners_w4.len() != 1 || owners_x2.len() != 1 {
            failures.push(format!(
                "census line {line} is contained in {} alternating and {} crossing components",
                owners_w4.len(),
                owners_x2.len()
            ));
            continue;
        }
        for tuple in section_grid(line)? {
            let a = w4_index.position(owners_w4[0], &tuple)?;
            let b = x2_index.position(owners_x2[0], &tuple)?;
            stacked.push(vec![
                (a, Eis::one()),
                (w4_index.total + b, -Eis::one()),
            ]);
        }
    }
    let domain_dim = alternating_h0 + crossing_h0;
    let stacked_rank = sparse_rank(stacked);
    let difference_rank = stacked_rank - w4_gluing.rank();
    let difference_kernel = domain_dim - difference_rank;
    if difference_rank != 18 {
        failures.push(format!("expected difference rank 18, found {difference_rank}"));
    }
    if difference_kernel != 24 {
        failures.push(format!(
            "expected difference kernel 24, found {difference_kernel}"
        ));
    }

    // Three routes to the same dimension.
    let glued_dimension = h0_union(&v4)?;
    let inclusion_exclusion = alternating_h0 + crossing_h0 - census_h0;
    if glued_dimension != 24 {
        failures.push(format!("expected glued dimension 24, found {glued_dimension}"));
    }
    if difference_kernel != glued_dimension {
        failures.push("difference kernel disagrees with the glued dimension".into());
    }
    if inclusion_exclusion != glued_dimension {
        failures.push("inclusion-exclusion disagrees with the glued dimension".into());
    }

    Ok(ClaimReport {
        census_line_count,
        meeting_point_count,
        census_gluing_rows,
        census_gluing_rank,
        census_h0,
        alternating_h0,
        crossing_h0,
        difference_rank,
        difference_kernel,
        glued_dimension,
        inclusion_exclusion,
        failures,
    })
}
