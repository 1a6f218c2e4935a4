//! Cubical cell models of the polyhedral products `Z_K(D^1, S^0)` in
//! `[-1,1]^m` and `cc(K)` in `[0,1]^m`, together with homology, surface
//! reports, the cyclic rotation action, fixed-point data, quotient
//! complexes and the induced rotation matrix on `H_1`.

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intlinalg::{
    complex_homology, induced_map_on_homology, smith_normal_form, FGAbelianGroup, IntMatrix,
};
use crate::simplicial::SimplicialComplex;
use crate::words::moreau_count;

/// Default cap on the total number of cells a builder may allocate.
pub const CELL_CAP: usize = 2_000_000;

/// Default cap on `n` for [`sigma_on_h1`], sized so the full exact
/// computation finishes in minutes.
pub const SIGMA_H1_CAP: usize = 9;

/// One cubical cell: the coordinates in `sigma` are free (run through an
/// interval), all others are pinned to an endpoint recorded in `eps`.
///
/// For `Z_K(D^1, S^0) ⊆ [-1,1]^m` the endpoints are `+1` and `-1`. For
/// `cc(K) ⊆ [0,1]^m` the same struct is reused with `+1` standing for the
/// endpoint `1` and `-1` for the endpoint `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    m: usize,
    sigma: Vec<usize>,
    eps: Vec<i8>,
}

impl Cell {
    /// Builds a cell in ambient dimension `m`. `sigma` must be strictly
    /// increasing inside `1..=m`; `eps` assigns an endpoint to each
    /// coordinate outside `sigma`, listed in ascending coordinate order.
    pub fn new(m: usize, sigma: Vec<usize>, eps: Vec<i8>) -> Result<Self> {
        if sigma.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "cell coordinates {sigma:?} must be strictly increasing"
            )));
        }
        if sigma.iter().any(|&i| i < 1 || i > m) {
            return Err(Error::InvalidInput(format!(
                "cell coordinates {sigma:?} exceed ambient dimension {m}"
            )));
        }
        if eps.len() != m - sigma.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} endpoint signs, got {}",
                m - sigma.len(),
                eps.len()
            )));
        }
        if eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidInput("endpoint signs must be +1 or -1".into()));
        }
        Ok(Cell { m, sigma, eps })
    }

    /// A vertex: every coordinate pinned.
    pub fn vertex(m: usize, eps: Vec<i8>) -> Result<Self> {
        Cell::new(m, Vec::new(), eps)
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    /// The free coordinates, ascending.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Endpoints of the pinned coordinates, in ascending coordinate order.
    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    /// Endpoint of coordinate `coord`, or `None` if it is free.
    pub fn endpoint(&self, coord: usize) -> Option<i8> {
        match self.sigma.binary_search(&coord) {
            Ok(_) => None,
            Err(before) => Some(self.eps[coord - 1 - before]),
        }
    }

    /// The boundary face pinning the `j`-th free coordinate (0-based) to
    /// endpoint `t`, together with its incidence sign `(-1)^j * t`.
    fn face(&self, j: usize, t: i8) -> (Cell, i64) {
        let coord = self.sigma[j];
        let mut sigma = self.sigma.clone();
        sigma.remove(j);
        let mut eps = self.eps.clone();
        eps.insert(coord - 1 - j, t);
        let sign = if j.is_multiple_of(2) { 1 } else { -1 } * i64::from(t);
        (Cell { m: self.m, sigma, eps }, sign)
    }

    /// Render as `"{i,j}|+-..."`: free coordinates in braces, endpoints as
    /// `+`/`-` in ascending coordinate order.
    pub fn label(&self) -> String {
        let sigma = self
            .sigma
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let eps: String = self.eps.iter().map(|&e| if e == 1 { '+' } else { '-' }).collect();
        format!("{{{sigma}}}|{eps}")
    }

    /// Ordering key: `+1` endpoints sort before `-1`.
    fn eps_bits(&self) -> Vec<u8> {
        self.eps.iter().map(|&e| u8::from(e == -1)).collect()
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.sigma.len(), &self.sigma, self.eps_bits()).cmp(&(
            other.sigma.len(),
            &other.sigma,
            other.eps_bits(),
        ))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cell({})", self.label())
    }
}

/// A finite cell complex with integer boundary matrices.
#[derive(Clone, Debug)]
pub struct CellComplex {
    m: usize,
    cells: Vec<Vec<Cell>>,
    boundaries: Vec<IntMatrix>,
    index: Vec<HashMap<Cell, usize>>,
}

impl CellComplex {
    /// Assembles a complex from sorted per-dimension cell lists and
    /// boundary matrices `[d_1, ..., d_top]`; checks shapes and `∂∂ = 0`.
    pub fn from_parts(
        m: usize,
        cells: Vec<Vec<Cell>>,
        boundaries: Vec<IntMatrix>,
    ) -> Result<Self> {
        if cells.is_empty() || cells[0].is_empty() {
            return Err(Error::InvalidInput("complex needs at least one vertex".into()));
        }
        if boundaries.len() + 1 != cells.len() {
            return Err(Error::InvalidInput(format!(
                "{} cell dimensions need {} boundary matrices, got {}",
                cells.len(),
                cells.len() - 1,
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.shape() != (cells[k].len(), cells[k + 1].len()) {
                return Err(Error::InvalidInput(format!(
                    "boundary d_{} has shape {:?}, expected {:?}",
                    k + 1,
                    d.shape(),
                    (cells[k].len(), cells[k + 1].len())
                )));
            }
        }
        for pair in boundaries.windows(2) {
            let product = pair[0]
                .mul(&pair[1])
                .expect("adjacent boundary shapes agree");
            if !product.is_zero() {
                return Err(Error::Verification(
                    "boundary matrices do not compose to zero".into(),
                ));
            }
        }
        let mut index = Vec::with_capacity(cells.len());
        for dim_cells in &cells {
            let mut map = HashMap::with_capacity(dim_cells.len());
            for (i, c) in dim_cells.iter().enumerate() {
                if c.ambient() != m {
                    return Err(Error::InvalidInput(format!(
                        "cell {} has ambient dimension {}, expected {m}",
                        c.label(),
                        c.ambient()
                    )));
                }
                if map.insert(c.clone(), i).is_some() {
                    return Err(Error::InvalidInput(format!(
                        "duplicate cell {}",
                        c.label()
                    )));
                }
            }
            index.push(map);
        }
        Ok(CellComplex { m, cells, boundaries, index })
    }

    /// Ambient coordinate count.
    pub fn ambient(&self) -> usize {
        self.m
    }

    /// Top cell dimension.
    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// Cells of one dimension, in the frozen order.
    pub fn cells(&self, dim: usize) -> &[Cell] {
        &self.cells[dim]
    }

    /// Number of cells in each dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Boundary matrix `d_k: C_k -> C_(k-1)` for `1 <= k <= dim`.
    pub fn boundary(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k - 1]
    }

    /// All boundary matrices `[d_1, ..., d_top]`.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// Index of a cell within its dimension.
    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell.dim())?.get(cell).copied()
    }

    /// Alternating sum of cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, cs)| {
                let count = cs.len() as i64;
                if k % 2 == 0 {
                    count
                } else {
                    -count
                }
            })
            .sum()
    }

    /// Integer homology `[H_0, ..., H_top]`.
    pub fn homology(&self) -> Result<Vec<FGAbelianGroup>> {
        complex_homology(self.cells[0].len(), &self.boundaries)
    }

    /// JSON dump: per-dimension cell labels plus boundary matrices as
    /// sparse `[row, col, value]` triplets.
    pub fn to_json_dump(&self) -> String {
        #[derive(Serialize)]
        struct BoundaryJson {
            rows: usize,
            cols: usize,
            entries: Vec<(usize, usize, i64)>,
        }
        #[derive(Serialize)]
        struct DumpJson {
            ambient: usize,
            cells: Vec<Vec<String>>,
            boundaries: Vec<BoundaryJson>,
        }
        let boundaries = self
            .boundaries
            .iter()
            .map(|d| {
                let mut entries = Vec::new();
                for r in 0..d.rows() {
                    for c in 0..d.cols() {
                        let v = &d[(r, c)];
                        if !num_traits::Zero::is_zero(v) {
                            entries.push((r, c, v.to_i64().expect("small boundary entry")));
                        }
                    }
                }
                BoundaryJson { rows: d.rows(), cols: d.cols(), entries }
            })
            .collect();
        let dump = DumpJson {
            ambient: self.m,
            cells: self
                .cells
                .iter()
                .map(|cs| cs.iter().map(Cell::label).collect())
                .collect(),
            boundaries,
        };
        serde_json::to_string(&dump).expect("dump serializes")
    }
}

/// Total cells of the model over `K` where a face with `s` vertices
/// contributes `weight(s)` cells, checked against a cap.
fn check_cell_budget(
    k: &SimplicialComplex,
    cap: usize,
    weight: impl Fn(u32) -> u128,
) -> Result<()> {
    if k.vertex_count() >= 64 {
        return Err(Error::ResourceLimit(format!(
            "{} vertices is far beyond the cell cap {cap}",
            k.vertex_count()
        )));
    }
    let faces = k.faces_by_dim();
    let mut total: u128 = weight(0);
    for (d, fs) in faces.iter().enumerate() {
        total += fs.len() as u128 * weight(d as u32 + 1);
    }
    if total > cap as u128 {
        return Err(Error::ResourceLimit(format!(
            "complex would have {total} cells, more than the cap {cap}"
        )));
    }
    Ok(())
}

/// Checks the cubical incidence pattern: boundary entries in `{-1, 0, +1}`
/// and exactly `2k` nonzero incidences per `k`-cell.
fn verify_cubical(c: &CellComplex) -> Result<()> {
    for k in 1..=c.dim() {
        let d = c.boundary(k);
        for col in 0..d.cols() {
            let mut nonzero = 0usize;
            for row in 0..d.rows() {
                match d[(row, col)].to_i64() {
                    Some(0) => {}
                    Some(1) | Some(-1) => nonzero += 1,
                    _ => {
                        return Err(Error::Verification(format!(
                            "boundary entry ({row}, {col}) of d_{k} is not in {{-1, 0, +1}}"
                        )))
                    }
                }
            }
            if nonzero != 2 * k {
                return Err(Error::Verification(format!(
                    "{k}-cell {col} has {nonzero} incidences, expected {}",
                    2 * k
                )));
            }
        }
    }
    Ok(())
}

/// Enumerates all sign patterns on `free` coordinates in the frozen order
/// (`+1` before `-1`, first coordinate most significant).
fn sign_patterns(free: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1u64 << free).map(move |code| {
        (0..free)
            .map(|pos| if code >> (free - 1 - pos) & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

fn attach_boundaries(m: usize, cells: Vec<Vec<Cell>>) -> Result<CellComplex> {
    let mut boundaries = Vec::with_capacity(cells.len().saturating_sub(1));
    for k in 1..cells.len() {
        let lower: HashMap<&Cell, usize> =
            cells[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut d = IntMatrix::zeros(cells[k - 1].len(), cells[k].len());
        for (col, cell) in cells[k].iter().enumerate() {
            for j in 0..cell.dim() {
                for t in [1i8, -1] {
                    let (face, sign) = cell.face(j, t);
                    let row = *lower.get(&face).unwrap_or_else(|| {
                        panic!("boundary face {} missing from the complex", face.label())
                    });
                    d[(row, col)] = sign.into();
                }
            }
        }
        boundaries.push(d);
    }
    CellComplex::from_parts(m, cells, boundaries)
}

/// Builds `Z_K(D^1, S^0) ⊆ [-1,1]^m`: one cell `(sigma, eps)` for every
/// face `sigma` of `K` (including the empty face) and every sign pattern
/// `eps` on the remaining coordinates.
pub fn build_rmac(k: &SimplicialComplex) -> Result<CellComplex> {
    build_rmac_capped(k, CELL_CAP)
}

/// [`build_rmac`] with an explicit cell cap.
pub fn build_rmac_capped(k: &SimplicialComplex, cap: usize) -> Result<CellComplex> {
    let m = k.vertex_count();
    check_cell_budget(k, cap, |s| 1u128 << (m as u32 - s))?;
    let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(k.dim() + 2);
    cells.push(
        sign_patterns(m)
            .map(|eps| Cell { m, sigma: Vec::new(), eps })
            .collect(),
    );
    for faces in k.faces_by_dim() {
        let mut layer = Vec::new();
        for sigma in faces {
            for eps in sign_patterns(m - sigma.len()) {
                layer.push(Cell { m, sigma: sigma.clone(), eps });
            }
        }
        cells.push(layer);
    }
    let complex = attach_boundaries(m, cells)?;
    verify_cubical(&complex)?;
    Ok(complex)
}

/// Outcome of the reflection audit run by [`build_cc`]: reflecting each
/// top cell `C_I` of `cc(K)` (no coordinate pinned at 0) across its zero
/// coordinate hyperplanes must reproduce `Z_K(D^1, S^0)` cell for cell,
/// each `C_I` accounting for `2^(m-|I|)` cells `(I, eps)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionAudit {
    /// Per dimension: cells of `cc(K)` with no coordinate pinned at 0.
    pub unreflected_cells: Vec<usize>,
    /// Per dimension: cells those produce after reflection.
    pub reflected_cells: Vec<usize>,
    /// Per dimension: actual cell counts of `build_rmac`.
    pub rmac_cells: Vec<usize>,
}

impl ReflectionAudit {
    pub fn is_consistent(&self) -> bool {
        self.reflected_cells == self.rmac_cells
    }
}

/// Builds `cc(K) ⊆ [0,1]^m` and audits it against [`build_rmac`].
///
/// Cells are pairs `J ⊆ I` with `I` a face of `K`: coordinates in `J` are
/// pinned at `0` (encoded `-1`), coordinates in `I \ J` are free, all
/// others are pinned at `1` (encoded `+1`).
pub fn build_cc(k: &SimplicialComplex) -> Result<(CellComplex, ReflectionAudit)> {
    build_cc_capped(k, CELL_CAP)
}

/// [`build_cc`] with an explicit cell cap.
pub fn build_cc_capped(k: &SimplicialComplex, cap: usize) -> Result<(CellComplex, ReflectionAudit)> {
    let m = k.vertex_count();
    check_cell_budget(k, cap, |s| 1u128 << s)?;
    let mut faces: Vec<Vec<usize>> = vec![Vec::new()];
    faces.extend(k.faces_by_dim().into_iter().flatten());
    let mut by_dim: Vec<Vec<Cell>> = vec![Vec::new(); k.dim() + 2];
    for i_face in &faces {
        // Split I into the free part sigma = I \ J and the zero part J.
        for split in 0..1u64 << i_face.len() {
            let mut sigma = Vec::new();
            let mut zeros = Vec::new();
            for (pos, &coord) in i_face.iter().enumerate() {
                if split >> pos & 1 == 0 {
                    sigma.push(coord);
                } else {
                    zeros.push(coord);
                }
            }
            let eps = (1..=m)
                .filter(|c| !sigma.contains(c))
                .map(|c| if zeros.contains(&c) { -1 } else { 1 })
                .collect();
            by_dim[sigma.len()].push(Cell { m, sigma, eps });
        }
    }
    while by_dim.last().is_some_and(Vec::is_empty) {
        by_dim.pop();
    }
    for layer in &mut by_dim {
        layer.sort();
    }
    let complex = attach_boundaries(m, by_dim)?;
    verify_cubical(&complex)?;

    let rmac = build_rmac_capped(k, cap)?;
    let mut unreflected = vec![0usize; complex.dim() + 1];
    let mut reflected = vec![0usize; complex.dim() + 1];
    for d in 0..=complex.dim() {
        for cell in complex.cells(d) {
            if cell.eps().iter().all(|&e| e == 1) {
                unreflected[d] += 1;
                reflected[d] += 1usize << (m - cell.dim());
            }
        }
    }
    let audit = ReflectionAudit {
        unreflected_cells: unreflected,
        reflected_cells: reflected,
        rmac_cells: rmac.cell_counts(),
    };
    if !audit.is_consistent() {
        return Err(Error::Verification(format!(
            "reflection audit failed: reflected counts {:?} differ from {:?}",
            audit.reflected_cells, audit.rmac_cells
        )));
    }
    Ok((complex, audit))
}

/// Surface recognition result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    /// Alternating sum of cell counts.
    pub euler: i64,
    /// Integer homology `[H_0, ..., H_top]`.
    pub homology: Vec<FGAbelianGroup>,
    /// Whether the homology profile is that of a closed orientable
    /// surface: dimension 2, `H_0 = H_2 = Z`, `H_1` free of even rank,
    /// and `euler = 2 - rank H_1`.
    pub closed_orientable_surface: bool,
    /// Genus, present exactly when the surface test passes.
    pub genus: Option<u64>,
}

/// Computes the Euler characteristic and homology of a complex and checks
/// the closed-orientable-surface profile.
pub fn surface_report(c: &CellComplex) -> Result<SurfaceReport> {
    let euler = c.euler_characteristic();
    let homology = c.homology()?;
    let z = FGAbelianGroup::free(1);
    let is_surface = c.dim() == 2
        && homology[0] == z
        && homology[2] == z
        && homology[1].is_free()
        && homology[1].rank() % 2 == 0
        && euler == 2 - homology[1].rank() as i64;
    Ok(SurfaceReport {
        euler,
        closed_orientable_surface: is_surface,
        genus: is_surface.then(|| homology[1].rank() as u64 / 2),
        homology,
    })
}

/// The rotation action of `Z_n` on a cell complex: for each dimension,
/// cell index maps to (image index, orientation sign).
#[derive(Clone, Debug)]
pub struct CellAction {
    order: usize,
    maps: Vec<Vec<(usize, i64)>>,
}

impl CellAction {
    /// Order of the acting cyclic group.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The signed index map in one dimension.
    pub fn map(&self, dim: usize) -> &[(usize, i64)] {
        &self.maps[dim]
    }

    /// The action as a signed permutation matrix on `dim`-chains: column
    /// `s` has the sign at row `image(s)`.
    pub fn matrix(&self, dim: usize) -> IntMatrix {
        let n = self.maps[dim].len();
        let mut p = IntMatrix::zeros(n, n);
        for (src, &(img, sign)) in self.maps[dim].iter().enumerate() {
            p[(img, src)] = sign.into();
        }
        p
    }

    /// Matrices for all dimensions.
    pub fn matrices(&self) -> Vec<IntMatrix> {
        (0..self.maps.len()).map(|d| self.matrix(d)).collect()
    }
}

fn sort_parity(values: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for (i, a) in values.iter().enumerate() {
        inversions += values[i + 1..].iter().filter(|&&b| b < *a).count();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The coordinate rotation `i -> i + 1 (mod n)` on a complex in
/// `[-1,1]^n`, e.g. `build_rmac` of a polygon boundary or of the discrete
/// complex. The orientation sign of a cell is the parity of the
/// permutation the shift induces on its ordered free coordinates.
///
/// Fails with an invalid-argument error if the complex is not invariant
/// under the rotation; the returned action is verified to have order `n`
/// and to commute with all boundary matrices.
pub fn rotation_action(c: &CellComplex, n: usize) -> Result<CellAction> {
    if c.ambient() != n || n == 0 {
        return Err(Error::InvalidInput(format!(
            "rotation of order {n} needs a complex in [-1,1]^{n}, found ambient {}",
            c.ambient()
        )));
    }
    let shift = |i: usize| if i == n { 1 } else { i + 1 };
    let mut maps = Vec::with_capacity(c.dim() + 1);
    for dim in 0..=c.dim() {
        let mut map = Vec::with_capacity(c.cells(dim).len());
        for cell in c.cells(dim) {
            let shifted: Vec<usize> = cell.sigma().iter().map(|&i| shift(i)).collect();
            let sign = sort_parity(&shifted);
            let mut sigma = shifted;
            sigma.sort_unstable();
            let eps: Vec<i8> = (1..=n)
                .filter(|coord| sigma.binary_search(coord).is_err())
                .map(|coord| {
                    let prev = if coord == 1 { n } else { coord - 1 };
                    cell.endpoint(prev).expect("preimage coordinate pinned")
                })
                .collect();
            let image = Cell { m: n, sigma, eps };
            let img_index = c.index_of(&image).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "complex is not rotation-symmetric: {} maps to the missing cell {}",
                    cell.label(),
                    image.label()
                ))
            })?;
            map.push((img_index, sign));
        }
        maps.push(map);
    }
    let action = CellAction { order: n, maps };

    // The n-th iterate must be the identity with sign +1 on every cell.
    for dim in 0..=c.dim() {
        for start in 0..c.cells(dim).len() {
            let (mut at, mut sign) = (start, 1i64);
            for _ in 0..n {
                let (next, s) = action.maps[dim][at];
                at = next;
                sign *= s;
            }
            if at != start || sign != 1 {
                return Err(Error::Verification(format!(
                    "rotation has wrong order on {}-cell {start}",
                    dim
                )));
            }
        }
    }
    // The action must commute with the boundary operators.
    for k in 1..=c.dim() {
        let lhs = c.boundary(k).mul(&action.matrix(k))?;
        let rhs = action.matrix(k - 1).mul(c.boundary(k))?;
        if lhs != rhs {
            return Err(Error::Verification(format!(
                "rotation does not commute with the boundary in degree {k}"
            )));
        }
    }
    Ok(action)
}

/// One minimal-period class of vertices of `[-1,1]^n` under rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodClass {
    /// Minimal period `d`, a divisor of `n`.
    pub period: usize,
    /// Number of rotation orbits of this period (the Lyndon count `M(d)`).
    pub orbit_count: u64,
    /// Total vertices of this period: `d * orbit_count`.
    pub vertex_count: u64,
    /// Order of the stabilizer of each such vertex: `n / d`.
    pub stabilizer_order: usize,
}

/// Groups the `2^n` vertices of `[-1,1]^n` by minimal period under the
/// coordinate rotation. Orbit counts are cross-checked against the Lyndon
/// word counts.
pub fn fixed_point_census(n: usize) -> Result<Vec<PeriodClass>> {
    if n < 3 {
        return Err(Error::InvalidInput("census requires n >= 3".into()));
    }
    if n > crate::words::MAX_WORD_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "census enumerates 2^{n} vertices; capped at n = {}",
            crate::words::MAX_WORD_LENGTH
        )));
    }
    let mut period_vertices: HashMap<usize, u64> = HashMap::new();
    let mask = (1u64 << n) - 1;
    for word in 0..=mask {
        let mut period = n;
        for d in crate::arith::divisors(n as u64) {
            let d = d as usize;
            // Rotation by d bits fixes the word exactly when d is a period.
            if d < n && (word >> d | word << (n - d)) & mask == word {
                period = d;
                break;
            }
        }
        *period_vertices.entry(period).or_insert(0) += 1;
    }
    let mut classes: Vec<PeriodClass> = period_vertices
        .into_iter()
        .map(|(period, vertex_count)| {
            assert_eq!(vertex_count % period as u64, 0, "orbits partition the class");
            PeriodClass {
                period,
                orbit_count: vertex_count / period as u64,
                vertex_count,
                stabilizer_order: n / period,
            }
        })
        .collect();
    classes.sort_by_key(|c| c.period);
    for class in &classes {
        let expected = moreau_count(class.period as u64)?;
        if class.orbit_count != expected {
            return Err(Error::Verification(format!(
                "period {} has {} orbits, Lyndon count gives {expected}",
                class.period, class.orbit_count
            )));
        }
    }
    Ok(classes)
}

/// The orbit complex of a cell action. Requires the action to be free on
/// cells of dimension `>= 1` (no positive-dimensional cell may be mapped
/// onto itself by a nontrivial power); vertex orbits may be short.
///
/// Each orbit keeps its lexicographically least cell as representative;
/// the boundary of an orbit is the image of the representative's boundary
/// under the orbit projection with orientation transport.
pub fn quotient_complex(c: &CellComplex, action: &CellAction) -> Result<CellComplex> {
    let n = action.order();
    if action.maps.len() != c.dim() + 1
        || (0..=c.dim()).any(|d| action.maps[d].len() != c.cells(d).len())
    {
        return Err(Error::InvalidInput(
            "action does not match the complex's cell counts".into(),
        ));
    }
    // orbit_of[dim][cell] = (orbit index, transport sign rep -> cell)
    let mut orbit_of: Vec<Vec<Option<(usize, i64)>>> = Vec::with_capacity(c.dim() + 1);
    let mut quotient_cells: Vec<Vec<Cell>> = Vec::with_capacity(c.dim() + 1);
    for dim in 0..=c.dim() {
        let count = c.cells(dim).len();
        let mut assigned: Vec<Option<(usize, i64)>> = vec![None; count];
        let mut reps = Vec::new();
        // Cells are sorted, so scanning ascending makes the first cell of
        // each orbit the lexicographically least representative.
        for start in 0..count {
            if assigned[start].is_some() {
                continue;
            }
            let orbit_index = reps.len();
            let (mut at, mut sign) = (start, 1i64);
            let mut size = 0usize;
            loop {
                assigned[at] = Some((orbit_index, sign));
                size += 1;
                let (next, s) = action.maps[dim][at];
                at = next;
                sign *= s;
                if at == start {
                    break;
                }
            }
            if sign != 1 {
                return Err(Error::Unsupported(format!(
                    "{dim}-cell {} is stabilized with orientation reversal",
                    c.cells(dim)[start].label()
                )));
            }
            if dim >= 1 && size != n {
                return Err(Error::Unsupported(format!(
                    "{dim}-cell {} has a nontrivial stabilizer (orbit size {size} < {n})",
                    c.cells(dim)[start].label()
                )));
            }
            reps.push((start, c.cells(dim)[start].clone()));
        }
        quotient_cells.push(reps.iter().map(|(_, cell)| cell.clone()).collect());
        orbit_of.push(assigned);
    }
    let mut boundaries = Vec::with_capacity(c.dim());
    for k in 1..=c.dim() {
        let d = c.boundary(k);
        let reps: Vec<usize> = {
            // Recover representative indices: orbit i's rep is the first
            // cell assigned to orbit i.
            let mut reps = vec![usize::MAX; quotient_cells[k].len()];
            for (cell, assignment) in orbit_of[k].iter().enumerate() {
                let (orbit, _) = assignment.expect("all cells assigned");
                if reps[orbit] == usize::MAX {
                    reps[orbit] = cell;
                }
            }
            reps
        };
        let mut dq = IntMatrix::zeros(quotient_cells[k - 1].len(), quotient_cells[k].len());
        for (orbit, &rep) in reps.iter().enumerate() {
            for row in 0..d.rows() {
                let coeff = &d[(row, rep)];
                if num_traits::Zero::is_zero(coeff) {
                    continue;
                }
                let (target_orbit, transport) = orbit_of[k - 1][row].expect("assigned");
                // Projection sends a cell to (transport sign) times its
                // orbit, since rep = transport * (group element) * cell.
                let entry = dq[(target_orbit, orbit)].clone() + coeff * transport;
                dq[(target_orbit, orbit)] = entry;
            }
        }
        boundaries.push(dq);
    }
    CellComplex::from_parts(c.ambient(), quotient_cells, boundaries)
}

/// The matrix of the rotation generator acting on `H_1` of
/// `Z_(K_n)(D^1, S^0)`, on the deterministic homology basis.
///
/// Verified internally: the action fixes the classes in `H_0` and `H_2`,
/// the returned matrix has `n`-th power the identity, and it is
/// invertible over the integers.
pub fn sigma_on_h1(n: usize) -> Result<IntMatrix> {
    sigma_on_h1_capped(n, SIGMA_H1_CAP)
}

/// [`sigma_on_h1`] with an explicit cap on `n`.
pub fn sigma_on_h1_capped(n: usize, cap: usize) -> Result<IntMatrix> {
    if n < 3 {
        return Err(Error::InvalidInput("the polygon boundary needs n >= 3".into()));
    }
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "sigma on H_1 is capped at n = {cap}, got {n}"
        )));
    }
    let complex = build_rmac(&crate::simplicial::polygon_boundary(n)?)?;
    let action = rotation_action(&complex, n)?;
    let p = action.matrices();
    let (n0, n2) = (complex.cells(0).len(), complex.cells(2).len());
    let d0 = IntMatrix::zeros(0, n0);
    let d3 = IntMatrix::zeros(n2, 0);
    let empty = IntMatrix::zeros(0, 0);

    let on_h0 = induced_map_on_homology(&d0, complex.boundary(1), &p[0], &empty, &p[1])?;
    if !on_h0.is_identity() {
        return Err(Error::Verification("rotation must fix H_0".into()));
    }
    let on_h2 = induced_map_on_homology(complex.boundary(2), &d3, &p[2], &p[1], &empty)?;
    if !on_h2.is_identity() {
        return Err(Error::Verification("rotation must fix the class in H_2".into()));
    }

    let a = induced_map_on_homology(complex.boundary(1), complex.boundary(2), &p[1], &p[0], &p[2])?;
    if !a.pow(n as u64)?.is_identity() {
        return Err(Error::Verification(format!(
            "sigma on H_1 does not have order dividing {n}"
        )));
    }
    let snf = smith_normal_form(&a);
    if snf.rank != a.rows() || !snf.invariant_factors.is_empty() {
        return Err(Error::Verification(
            "sigma on H_1 is not invertible over the integers".into(),
        ));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{discrete_complex, polygon_boundary, SimplicialComplex};

    fn z() -> FGAbelianGroup {
        FGAbelianGroup::free(1)
    }

    #[test]
    fn cube_boundary_from_the_triangle() {
        let c = build_rmac(&polygon_boundary(3).unwrap()).unwrap();
        assert_eq!(c.cell_counts(), [8, 12, 6]);
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(
            c.homology().unwrap(),
            [z(), FGAbelianGroup::trivial(), z()]
        );
        let report = surface_report(&c).unwrap();
        assert!(report.closed_orientable_surface);
        assert_eq!(report.genus, Some(0));
    }

    #[test]
    fn polygon_cell_counts_match_the_closed_form() {
        for n in 4..=7usize {
            let c = build_rmac(&polygon_boundary(n).unwrap()).unwrap();
            assert_eq!(
                c.cell_counts(),
                [1 << n, n << (n - 1), n << (n - 2)],
                "n = {n}"
            );
        }
    }

    #[test]
    fn hypercube_graph_from_discrete_points() {
        let c = build_rmac(&discrete_complex(4).unwrap()).unwrap();
        assert_eq!(c.cell_counts(), [16, 32]);
        assert_eq!(c.euler_characteristic(), -16);
        let h = c.homology().unwrap();
        assert_eq!(h[0], z());
        assert_eq!(h[1], FGAbelianGroup::free(17));
    }

    #[test]
    fn torus_suspension_homology_for_the_square() {
        let c = build_rmac(&polygon_boundary(4).unwrap()).unwrap();
        assert_eq!(
            c.homology().unwrap(),
            [z(), FGAbelianGroup::free(2), z()]
        );
        let report = surface_report(&c).unwrap();
        assert_eq!(report.genus, Some(1));
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn hexagon_genus_and_euler() {
        let c = build_rmac(&polygon_boundary(6).unwrap()).unwrap();
        let report = surface_report(&c).unwrap();
        assert_eq!(report.euler, -32); // (4 - 6) * 2^4
        assert_eq!(report.genus, Some(17));
        assert_eq!(report.homology[1], FGAbelianGroup::free(34));
    }

    #[test]
    fn pendant_graph_complex_is_not_a_surface() {
        let k = SimplicialComplex::new(4, vec![vec![1, 2], vec![2, 3], vec![1, 3], vec![3, 4]])
            .unwrap();
        let c = build_rmac(&k).unwrap();
        assert_eq!(c.euler_characteristic(), 0);
        let report = surface_report(&c).unwrap();
        assert!(!report.closed_orientable_surface);
        assert_eq!(report.genus, None);
    }

    #[test]
    fn cell_cap_is_enforced() {
        let k = discrete_complex(6).unwrap();
        assert!(matches!(
            build_rmac_capped(&k, 100),
            Err(Error::ResourceLimit(_))
        ));
        assert!(build_rmac_capped(&k, 1000).is_ok()); // 64 + 6*32 = 256
    }

    #[test]
    fn cc_of_the_triangle_boundary() {
        let (c, audit) = build_cc(&polygon_boundary(3).unwrap()).unwrap();
        assert_eq!(c.cell_counts(), [7, 9, 3]);
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(
            c.homology().unwrap(),
            [z(), FGAbelianGroup::trivial(), FGAbelianGroup::trivial()]
        );
        assert_eq!(audit.unreflected_cells, [1, 3, 3]);
        assert_eq!(audit.reflected_cells, [8, 12, 6]);
        assert!(audit.is_consistent());
    }

    #[test]
    fn cc_of_a_single_vertex_is_an_interval() {
        let k = discrete_complex(1).unwrap();
        let (c, audit) = build_cc(&k).unwrap();
        assert_eq!(c.cell_counts(), [2, 1]);
        assert_eq!(audit.rmac_cells, [2, 1]); // reflected interval = D^1
        assert_eq!(c.homology().unwrap(), [z(), FGAbelianGroup::trivial()]);
    }

    #[test]
    fn rotation_maps_cells_with_the_documented_signs() {
        let c = build_rmac(&polygon_boundary(4).unwrap()).unwrap();
        let action = rotation_action(&c, 4).unwrap();

        // ({1,2}, e3 = +1, e4 = -1) -> ({2,3}, e4 = +1, e1 = -1), sign +1.
        let src = Cell::new(4, vec![1, 2], vec![1, -1]).unwrap();
        let dst = Cell::new(4, vec![2, 3], vec![-1, 1]).unwrap();
        let (img, sign) = action.map(2)[c.index_of(&src).unwrap()];
        assert_eq!(img, c.index_of(&dst).unwrap());
        assert_eq!(sign, 1);

        // ({1,4}, ...) -> ({1,2}, ...) with sign -1 (factor order swap).
        let src = Cell::new(4, vec![1, 4], vec![1, 1]).unwrap();
        let dst = Cell::new(4, vec![1, 2], vec![1, 1]).unwrap();
        let (img, sign) = action.map(2)[c.index_of(&src).unwrap()];
        assert_eq!(img, c.index_of(&dst).unwrap());
        assert_eq!(sign, -1);
    }

    #[test]
    fn rotation_exists_for_polygons_and_discrete_complexes() {
        for n in 3..=6usize {
            let c = build_rmac(&polygon_boundary(n).unwrap()).unwrap();
            let action = rotation_action(&c, n).unwrap();
            assert_eq!(action.order(), n);
        }
        let c = build_rmac(&discrete_complex(5).unwrap()).unwrap();
        assert!(rotation_action(&c, 5).is_ok());
    }

    #[test]
    fn rotation_rejects_asymmetric_complexes() {
        let k = SimplicialComplex::new(4, vec![vec![1, 2], vec![2, 3], vec![1, 3], vec![3, 4]])
            .unwrap();
        let c = build_rmac(&k).unwrap();
        assert!(matches!(
            rotation_action(&c, 4),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn census_counts_periods() {
        let census = fixed_point_census(3).unwrap();
        assert_eq!(census.len(), 2);
        assert_eq!((census[0].period, census[0].vertex_count, census[0].stabilizer_order), (1, 2, 3));
        assert_eq!((census[1].period, census[1].orbit_count), (3, 2));

        let census = fixed_point_census(6).unwrap();
        let counts: Vec<(usize, u64)> = census.iter().map(|c| (c.period, c.orbit_count)).collect();
        assert_eq!(counts, [(1, 2), (2, 1), (3, 2), (6, 9)]);
        let total: u64 = census.iter().map(|c| c.vertex_count).sum();
        assert_eq!(total, 64);

        let census = fixed_point_census(5).unwrap();
        let counts: Vec<(usize, u64)> = census.iter().map(|c| (c.period, c.orbit_count)).collect();
        assert_eq!(counts, [(1, 2), (5, 6)]);

        assert!(fixed_point_census(2).is_err());
        assert!(fixed_point_census(30).is_err());
    }

    #[test]
    fn quotient_genus_for_small_polygons() {
        let expected = [(3usize, 0u64), (4, 0), (5, 1), (6, 2)];
        for (n, genus) in expected {
            let c = build_rmac(&polygon_boundary(n).unwrap()).unwrap();
            let action = rotation_action(&c, n).unwrap();
            let q = quotient_complex(&c, &action).unwrap();
            let report = surface_report(&q).unwrap();
            assert!(report.closed_orientable_surface, "n = {n}");
            assert_eq!(report.genus, Some(genus), "n = {n}");
            assert_eq!(report.homology[2], z(), "orientable quotient for n = {n}");
        }
    }

    #[test]
    fn quotient_rejects_stabilized_cells() {
        // The full square [-1,1]^2 with the half-turn: the top cell maps
        // onto itself with an orientation flip.
        let k = SimplicialComplex::new(2, vec![vec![1, 2]]).unwrap();
        let c = build_rmac(&k).unwrap();
        let action = rotation_action(&c, 2).unwrap();
        assert!(matches!(
            quotient_complex(&c, &action),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn sigma_on_h1_small_cases() {
        let a3 = sigma_on_h1(3).unwrap();
        assert_eq!(a3.shape(), (0, 0));

        let a4 = sigma_on_h1(4).unwrap();
        assert_eq!(a4.shape(), (2, 2));
        let sq = a4.mul(&a4).unwrap();
        assert_eq!(sq, IntMatrix::identity(2).neg());

        let a5 = sigma_on_h1(5).unwrap();
        assert_eq!(a5.shape(), (10, 10));
        assert_eq!(a5.trace(), 0.into());

        assert!(matches!(sigma_on_h1(10), Err(Error::ResourceLimit(_))));
        assert!(sigma_on_h1_capped(3, 3).is_ok());
    }

    #[test]
    fn sigma_on_h1_hexagon_has_lefschetz_trace_zero() {
        let a = sigma_on_h1(6).unwrap();
        assert_eq!(a.shape(), (34, 34));
        // Lefschetz: the rotation fixes 2 vertices and acts trivially on
        // H_0 and H_2, so the H_1 trace is 1 - 2 + 1 = 0.
        assert_eq!(a.trace(), 0.into());
    }

    #[test]
    fn json_dump_of_the_interval() {
        let c = build_rmac(&discrete_complex(1).unwrap()).unwrap();
        assert_eq!(
            c.to_json_dump(),
            r#"{"ambient":1,"cells":[["{}|+","{}|-"],["{1}|"]],"boundaries":[{"rows":2,"cols":1,"entries":[[0,0,1],[1,0,-1]]}]}"#
        );
    }

    #[test]
    fn cell_labels_and_validation() {
        let cell = Cell::new(4, vec![1, 3], vec![1, -1]).unwrap();
        assert_eq!(cell.label(), "{1,3}|+-");
        assert_eq!(cell.endpoint(2), Some(1));
        assert_eq!(cell.endpoint(4), Some(-1));
        assert_eq!(cell.endpoint(1), None);
        assert!(Cell::new(3, vec![2, 1], vec![1]).is_err());
        assert!(Cell::new(3, vec![5], vec![1, 1]).is_err());
        assert!(Cell::new(3, vec![1], vec![2, 1]).is_err());
        assert!(Cell::new(3, vec![1], vec![1]).is_err());
    }
}
