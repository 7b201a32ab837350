//! Full-dimensional convex lattice polytopes given by their vertices.
//!
//! Facets are enumerated exactly: every `n`-element vertex subset spanning a
//! hyperplane contributes a candidate supporting hyperplane, kept when all
//! vertices lie on one side. That is quadratic-ish in the vertex count and
//! entirely adequate at the scale this crate works at (tens of vertices,
//! dimension at most 4 or so).

use std::collections::{BTreeMap, BTreeSet};

use num::{Integer, One, Signed, Zero};

use crate::lattice::{Int, LatticeMatrix, LatticeVector};
use crate::{Error, Result};

/// A facet of a lattice polytope: primitive outward normal `v` and support
/// level `h = max_x v(x)`. Every vertex `x` satisfies `v(x) <= h`, with
/// equality exactly on the facet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetData {
    pub normal: LatticeVector,
    pub level: Int,
}

/// Convex lattice polytope with nonempty interior, stored as its vertex list
/// in increasing lexicographic order. Every stored point is an extreme point,
/// so equal polytopes have identical representations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticeVector>,
}

impl LatticePolytope {
    /// Builds a polytope from points that are all required to be vertices.
    /// Duplicate or non-extreme points are rejected, naming the offender.
    pub fn from_vertices(dim: usize, points: Vec<LatticeVector>) -> Result<Self> {
        check_dims(dim, &points)?;
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::RedundantPoint { index: i });
                }
            }
        }
        check_full_dimensional(dim, &points)?;
        let facets = facets_of_points(dim, &points);
        for (i, p) in points.iter().enumerate() {
            if !is_extreme(dim, p, &facets) {
                return Err(Error::RedundantPoint { index: i });
            }
        }
        let mut vertices = points;
        vertices.sort();
        Ok(Self { dim, vertices })
    }

    /// Convex hull of an arbitrary point set: duplicates and interior points
    /// are silently dropped. Errors when the hull is not full-dimensional.
    pub fn hull(dim: usize, points: Vec<LatticeVector>) -> Result<Self> {
        check_dims(dim, &points)?;
        let dedup: Vec<LatticeVector> = points
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        check_full_dimensional(dim, &dedup)?;
        let facets = facets_of_points(dim, &dedup);
        let vertices: Vec<LatticeVector> = dedup
            .into_iter()
            .filter(|p| is_extreme(dim, p, &facets))
            .collect();
        Ok(Self { dim, vertices })
    }

    pub fn from_coords(coords: &[&[i64]]) -> Result<Self> {
        let dim = coords[0].len();
        Self::from_vertices(
            dim,
            coords.iter().map(|c| LatticeVector::from_i64(c)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex coordinates as the columns of an `n x k` matrix, in canonical
    /// vertex order.
    pub fn vertex_matrix(&self) -> LatticeMatrix {
        LatticeMatrix::from_columns(&self.vertices)
    }

    /// All facets, ordered lexicographically by normal.
    pub fn facets(&self) -> Vec<FacetData> {
        facets_of_points(self.dim, &self.vertices)
    }

    /// For each vertex (canonical order), the sorted list of indices of the
    /// facets it lies on. Every vertex of a full-dimensional polytope lies on
    /// at least `n` facets.
    pub fn vertex_facet_incidence(&self) -> Vec<Vec<usize>> {
        let facets = self.facets();
        self.incidence_for(&facets)
    }

    pub(crate) fn incidence_for(&self, facets: &[FacetData]) -> Vec<Vec<usize>> {
        self.vertices
            .iter()
            .map(|v| {
                facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.normal.dot(v) == f.level)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    /// True when 0 lies strictly inside, i.e. every support level is positive.
    pub fn contains_origin_interior(&self) -> bool {
        self.facets().iter().all(|f| f.level.is_positive())
    }

    pub fn contains(&self, point: &LatticeVector) -> bool {
        self.facets()
            .iter()
            .all(|f| f.normal.dot(point) <= f.level)
    }

    /// Image under an integer linear map (columns of `m` must be `dim` long).
    /// The map is assumed injective on the hull (always true for unimodular
    /// maps); vertices map to vertices.
    pub fn transform(&self, m: &LatticeMatrix) -> Result<Self> {
        let points = self.vertices.iter().map(|v| m.mul_vector(v)).collect();
        Self::from_vertices(m.rows(), points)
    }

    pub fn translate(&self, t: &LatticeVector) -> Result<Self> {
        let points = self.vertices.iter().map(|v| v.add(t)).collect();
        Self::from_vertices(self.dim, points)
    }

    /// Normalized volume: `n!` times the Euclidean volume, always a positive
    /// integer. Computed by coning over the facets from the first vertex;
    /// facets are flattened to full-dimensional polytopes of the boundary
    /// lattice, which preserves normalized volume.
    pub fn normalized_volume(&self) -> Int {
        if self.dim == 1 {
            return self.vertices.last().unwrap().coord(0) - self.vertices[0].coord(0);
        }
        let apex = &self.vertices[0];
        let facets = self.facets();
        let incidence = self.incidence_for(&facets);
        let mut total = Int::zero();
        for (fi, facet) in facets.iter().enumerate() {
            let dist = facet.level.clone() - facet.normal.dot(apex);
            if dist.is_zero() {
                continue;
            }
            let sub = self.facet_subpolytope_for(fi, &facets, &incidence);
            total += dist.abs() * sub.normalized_volume();
        }
        total
    }

    /// The facet as a full-dimensional polytope in coordinates of the
    /// saturated lattice of its hyperplane.
    pub fn facet_subpolytope(&self, facet_index: usize) -> LatticePolytope {
        let facets = self.facets();
        let incidence = self.incidence_for(&facets);
        self.facet_subpolytope_for(facet_index, &facets, &incidence)
    }

    fn facet_subpolytope_for(
        &self,
        facet_index: usize,
        facets: &[FacetData],
        incidence: &[Vec<usize>],
    ) -> LatticePolytope {
        let facet = &facets[facet_index];
        let on_facet: Vec<&LatticeVector> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(vi, _)| incidence[*vi].contains(&facet_index))
            .map(|(_, v)| v)
            .collect();
        let base = on_facet[0].clone();
        // basis of the saturated hyperplane lattice {x : normal . x = 0}
        let normal_row = LatticeMatrix::from_rows_vec(&[facet.normal.clone()]);
        let basis = normal_row.kernel_basis();
        assert_eq!(basis.len(), self.dim - 1);
        let basis_matrix = LatticeMatrix::from_columns(&basis);
        let coords: Vec<LatticeVector> = on_facet
            .iter()
            .map(|v| {
                let rhs: Vec<Int> = v.sub(&base).coords().to_vec();
                let sol = basis_matrix
                    .solve_rational(&rhs)
                    .expect("facet vertex lies in the facet hyperplane");
                LatticeVector::new(
                    sol.iter()
                        .map(|r| {
                            assert!(r.is_integer(), "saturated basis gives integer coordinates");
                            r.to_integer()
                        })
                        .collect(),
                )
            })
            .collect();
        LatticePolytope::from_vertices(self.dim - 1, coords)
            .expect("facet is a valid polytope of one dimension lower")
    }

    /// Number of lattice points in the `k`-fold dilation. Uses Pick's formula
    /// in the plane and a bounding-box sweep otherwise.
    pub fn lattice_point_count(&self, k: u32) -> Int {
        let k = Int::from(k);
        match self.dim {
            1 => {
                let len = self.vertices.last().unwrap().coord(0) - self.vertices[0].coord(0);
                len * &k + 1
            }
            2 => {
                // Pick: |P| = area + boundary/2 + 1, scaled to the dilation.
                let nv = self.normalized_volume(); // 2 * area
                let boundary: Int = self
                    .boundary_edge_contents()
                    .into_iter()
                    .sum();
                (&k * &k * nv + &k * boundary) / Int::from(2) + 1
            }
            _ => {
                let facets = self.facets();
                let lows: Vec<Int> = (0..self.dim)
                    .map(|i| {
                        self.vertices.iter().map(|v| v.coord(i)).min().unwrap() * &k
                    })
                    .collect();
                let highs: Vec<Int> = (0..self.dim)
                    .map(|i| {
                        self.vertices.iter().map(|v| v.coord(i)).max().unwrap() * &k
                    })
                    .collect();
                let mut count = Int::zero();
                let mut point = lows.clone();
                'sweep: loop {
                    let inside = facets.iter().all(|f| {
                        let val: Int = f
                            .normal
                            .coords()
                            .iter()
                            .zip(&point)
                            .map(|(a, b)| a * b)
                            .sum();
                        val <= &f.level * &k
                    });
                    if inside {
                        count += 1;
                    }
                    // odometer increment
                    for i in (0..self.dim).rev() {
                        point[i] += 1;
                        if point[i] <= highs[i] {
                            continue 'sweep;
                        }
                        point[i] = lows[i].clone();
                    }
                    break;
                }
                count
            }
        }
    }

    /// Lattice lengths of the boundary edges (2D only).
    fn boundary_edge_contents(&self) -> Vec<Int> {
        assert_eq!(self.dim, 2);
        let facets = self.facets();
        let incidence = self.incidence_for(&facets);
        facets
            .iter()
            .enumerate()
            .map(|(fi, _)| {
                let on: Vec<&LatticeVector> = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(vi, _)| incidence[*vi].contains(&fi))
                    .map(|(_, v)| v)
                    .collect();
                assert_eq!(on.len(), 2);
                on[1].sub(on[0]).content()
            })
            .collect()
    }

    /// All proper faces, each as (sorted vertex indices, sorted facet indices,
    /// dimension). Proper faces are exactly the intersections of facets, so
    /// the list is computed by closing the facet vertex sets under pairwise
    /// intersection. Includes the facets themselves and the vertices.
    pub fn proper_faces(&self) -> Vec<FaceData> {
        let facets = self.facets();
        let incidence = self.incidence_for(&facets);
        let facet_vertex_sets: Vec<BTreeSet<usize>> = (0..facets.len())
            .map(|fi| {
                (0..self.vertices.len())
                    .filter(|vi| incidence[*vi].contains(&fi))
                    .collect()
            })
            .collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = facet_vertex_sets.iter().cloned().collect();
        let mut frontier: Vec<BTreeSet<usize>> = seen.iter().cloned().collect();
        while let Some(face) = frontier.pop() {
            for fv in &facet_vertex_sets {
                let inter: BTreeSet<usize> = face.intersection(fv).cloned().collect();
                if inter.is_empty() || seen.contains(&inter) {
                    continue;
                }
                seen.insert(inter.clone());
                frontier.push(inter);
            }
        }
        let mut faces: Vec<FaceData> = seen
            .into_iter()
            .map(|vs| {
                let vertex_indices: Vec<usize> = vs.iter().cloned().collect();
                let facet_indices: Vec<usize> = (0..facets.len())
                    .filter(|fi| vertex_indices.iter().all(|vi| incidence[*vi].contains(fi)))
                    .collect();
                let dim = affine_rank(
                    &vertex_indices
                        .iter()
                        .map(|&vi| self.vertices[vi].clone())
                        .collect::<Vec<_>>(),
                );
                FaceData {
                    vertex_indices,
                    facet_indices,
                    dim,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertex_indices).cmp(&(b.dim, &b.vertex_indices)));
        faces
    }

    /// Reconstructs the vertex set from the facet half-spaces, solving each
    /// `n`-subset of facet hyperplanes. Slow and independent of the facet
    /// scan; meant for cross-checking.
    pub fn vertices_from_facets(facets: &[FacetData], dim: usize) -> Vec<LatticeVector> {
        let mut found = BTreeSet::new();
        let idx: Vec<usize> = (0..facets.len()).collect();
        for_each_combination(&idx, dim, &mut |subset| {
            let a = LatticeMatrix::from_rows_vec(
                &subset
                    .iter()
                    .map(|&i| facets[i].normal.clone())
                    .collect::<Vec<_>>(),
            );
            let rhs: Vec<Int> = subset.iter().map(|&i| facets[i].level.clone()).collect();
            if a.rank() < dim {
                return;
            }
            if let Some(sol) = a.solve_rational(&rhs) {
                if sol.iter().all(|r| r.is_integer()) {
                    let p = LatticeVector::new(sol.iter().map(|r| r.to_integer()).collect());
                    let inside = facets.iter().all(|f| f.normal.dot(&p) <= f.level);
                    if inside {
                        found.insert(p);
                    }
                }
            }
        });
        found.into_iter().collect()
    }
}

/// A proper face of a polytope, by vertex and facet indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub vertex_indices: Vec<usize>,
    pub facet_indices: Vec<usize>,
    pub dim: usize,
}

fn check_dims(dim: usize, points: &[LatticeVector]) -> Result<()> {
    if dim == 0 {
        return Err(Error::DegeneratePolytope("ambient dimension 0".into()));
    }
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
    }
    if points.len() < dim + 1 {
        return Err(Error::TooFewVertices {
            dim,
            needed: dim + 1,
            got: points.len(),
        });
    }
    Ok(())
}

fn check_full_dimensional(dim: usize, points: &[LatticeVector]) -> Result<()> {
    if affine_rank(points) < dim {
        return Err(Error::DegeneratePolytope(
            "collinear / not full-dimensional".into(),
        ));
    }
    Ok(())
}

pub(crate) fn affine_rank(points: &[LatticeVector]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<LatticeVector> = points[1..].iter().map(|p| p.sub(&points[0])).collect();
    LatticeMatrix::from_rows_vec(&diffs).rank()
}

/// Facets of the convex hull of a full-dimensional point set.
///
/// Every hull facet contains `n` affinely independent input points, so
/// scanning the `n`-subsets finds all of them; subsets whose hyperplane
/// separates the point set are discarded.
pub(crate) fn facets_of_points(dim: usize, points: &[LatticeVector]) -> Vec<FacetData> {
    let mut out: BTreeSet<FacetData> = BTreeSet::new();
    let idx: Vec<usize> = (0..points.len()).collect();
    for_each_combination(&idx, dim, &mut |subset| {
        let Some(normal) = hyperplane_normal(dim, points, subset) else {
            return;
        };
        let base = normal.dot(&points[subset[0]]);
        let mut pos = false;
        let mut neg = false;
        for p in points {
            let side = normal.dot(p) - &base;
            if side.is_positive() {
                pos = true;
            } else if side.is_negative() {
                neg = true;
            }
            if pos && neg {
                return;
            }
        }
        let (normal, level) = if pos {
            let n = normal.neg();
            let l = n.dot(&points[subset[0]]);
            (n, l)
        } else {
            (normal, base)
        };
        out.insert(FacetData { normal, level });
    });
    out.into_iter().collect()
}

/// Primitive normal of the hyperplane through the given `n` points, or `None`
/// when they are affinely dependent. Computed as the generalized cross
/// product (signed maximal minors of the difference matrix).
fn hyperplane_normal(dim: usize, points: &[LatticeVector], subset: &[usize]) -> Option<LatticeVector> {
    let diffs: Vec<LatticeVector> = subset[1..]
        .iter()
        .map(|&i| points[i].sub(&points[subset[0]]))
        .collect();
    let d = if diffs.is_empty() {
        None
    } else {
        Some(LatticeMatrix::from_rows_vec(&diffs))
    };
    let mut coords = Vec::with_capacity(dim);
    for j in 0..dim {
        let minor = match &d {
            None => Int::one(), // dim == 1: empty determinant
            Some(d) => LatticeMatrix::from_fn(dim - 1, dim - 1, |r, c| {
                d.at(r, if c < j { c } else { c + 1 }).clone()
            })
            .det(),
        };
        coords.push(if j % 2 == 0 { minor } else { -minor });
    }
    let v = LatticeVector::new(coords);
    if v.is_zero() {
        None
    } else {
        Some(v.primitive_part().expect("nonzero"))
    }
}

fn is_extreme(dim: usize, point: &LatticeVector, facets: &[FacetData]) -> bool {
    let active: Vec<LatticeVector> = facets
        .iter()
        .filter(|f| f.normal.dot(point) == f.level)
        .map(|f| f.normal.clone())
        .collect();
    if active.len() < dim {
        return false;
    }
    LatticeMatrix::from_rows_vec(&active).rank() == dim
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let remaining = k - acc.len();
        for i in start..=items.len().saturating_sub(remaining) {
            acc.push(items[i]);
            rec(items, k, i + 1, acc, f);
            acc.pop();
        }
    }
    if k > items.len() {
        return;
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Helper to index facets deterministically: map normal -> index.
pub fn facet_index_map(facets: &[FacetData]) -> BTreeMap<LatticeVector, usize> {
    facets
        .iter()
        .enumerate()
        .map(|(i, f)| (f.normal.clone(), i))
        .collect()
}
