//! Index-based lattice invariants: integer lengths, areas, volumes and
//! sines of simplicial cones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{det, determinantal_divisor, gcd_all, int, ExactInt, IntMatrix};
use crate::error::{Error, Result};

pub type LatticePoint = Vec<ExactInt>;

/// Convert a slice of machine integers to a lattice point.
pub fn point(coords: &[i64]) -> LatticePoint {
    coords.iter().map(|&c| int(c)).collect()
}

pub fn sub(a: &[ExactInt], b: &[ExactInt]) -> Vec<ExactInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[ExactInt], b: &[ExactInt]) -> Vec<ExactInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg(v: &[ExactInt]) -> Vec<ExactInt> {
    v.iter().map(|x| -x).collect()
}

/// An ordered rational simplicial cone: a vertex and `k` linearly
/// independent integer edge vectors in `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cone {
    vertex: LatticePoint,
    edges: Vec<Vec<ExactInt>>,
}

impl Cone {
    pub fn new(vertex: LatticePoint, edges: Vec<Vec<ExactInt>>) -> Result<Self> {
        let n = vertex.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("zero-dimensional vertex".into()));
        }
        if edges.is_empty() {
            return Err(Error::TooSmall { min: 1, got: 0 });
        }
        if edges.iter().any(|e| e.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "edges must have {n} coordinates"
            )));
        }
        if edges.len() > n {
            return Err(Error::DegenerateCone);
        }
        let m = IntMatrix::from_columns(&edges)?;
        if determinantal_divisor(&m, edges.len()).is_err() {
            return Err(Error::DegenerateCone);
        }
        Ok(Cone { vertex, edges })
    }

    /// Cone with its vertex at the origin.
    pub fn at_origin(edges: Vec<Vec<ExactInt>>) -> Result<Self> {
        let n = edges.first().map_or(0, Vec::len);
        Self::new(vec![BigInt::zero(); n], edges)
    }

    pub fn from_i64(edges: &[&[i64]]) -> Result<Self> {
        Self::at_origin(edges.iter().map(|e| point(e)).collect())
    }

    /// Cone whose edges are the columns of `m`.
    pub fn from_columns(m: &IntMatrix) -> Result<Self> {
        Self::at_origin(m.columns())
    }

    pub fn vertex(&self) -> &[ExactInt] {
        &self.vertex
    }

    pub fn edges(&self) -> &[Vec<ExactInt>] {
        &self.edges
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.vertex.len()
    }

    /// Number of edges `k`.
    pub fn k(&self) -> usize {
        self.edges.len()
    }

    /// The `n x k` matrix whose columns are the edges.
    pub fn edge_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.edges).expect("validated on construction")
    }

    /// Edge matrix with every column scaled to its primitive vector.
    pub fn primitive_edge_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<ExactInt>> = self
            .edges
            .iter()
            .map(|e| primitive(e).expect("edges are nonzero").0)
            .collect();
        IntMatrix::from_columns(&cols).expect("validated on construction")
    }

    /// Same vertex, new edge list.
    pub fn with_edges(&self, edges: Vec<Vec<ExactInt>>) -> Result<Self> {
        Cone::new(self.vertex.clone(), edges)
    }

    /// The subcone on the given edge positions, order preserved.
    pub fn subcone(&self, positions: &[usize]) -> Result<Self> {
        self.with_edges(positions.iter().map(|&i| self.edges[i].clone()).collect())
    }
}

/// An integer simplex `A_0 A_1 ... A_k` in `Z^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Simplex {
    vertices: Vec<LatticePoint>,
}

impl Simplex {
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::TooSmall { min: 2, got: 0 });
        };
        let n = first.len();
        if n == 0 || vertices.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(
                "simplex vertices must share a positive dimension".into(),
            ));
        }
        if vertices.len() < 2 {
            return Err(Error::TooSmall {
                min: 2,
                got: vertices.len(),
            });
        }
        let s = Simplex { vertices };
        if s.vertices.len() - 1 > n
            || determinantal_divisor(&s.edge_matrix(), s.vertices.len() - 1).is_err()
        {
            return Err(Error::Degenerate("simplex edges are dependent".into()));
        }
        Ok(s)
    }

    pub fn from_i64(vertices: &[&[i64]]) -> Result<Self> {
        Self::new(vertices.iter().map(|v| point(v)).collect())
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Columns `A_0 A_i`, `i = 1..=k`.
    pub fn edge_matrix(&self) -> IntMatrix {
        let a0 = &self.vertices[0];
        let cols: Vec<Vec<ExactInt>> = self.vertices[1..].iter().map(|a| sub(a, a0)).collect();
        IntMatrix::from_columns(&cols).expect("nonempty")
    }

    /// The cone `∠(A_i; ...)` at vertex `i`, other vertices in order.
    pub fn cone_at(&self, i: usize) -> Result<Cone> {
        let apex = self.vertices[i].clone();
        let edges = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, a)| sub(a, &apex))
            .collect();
        Cone::new(apex, edges)
    }
}

/// Primitive direction of `v` and its integer length (gcd of coordinates).
pub fn primitive(v: &[ExactInt]) -> Result<(Vec<ExactInt>, ExactInt)> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok((v.iter().map(|x| x / &g).collect(), g))
}

/// Number of lattice points on segment `AB` minus one.
pub fn integer_length(a: &[ExactInt], b: &[ExactInt]) -> Result<ExactInt> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch("points of different dimension".into()));
    }
    let g = gcd_all(&sub(b, a));
    if g.is_zero() {
        Err(Error::DegenerateSegment)
    } else {
        Ok(g)
    }
}

fn det2(u: &[ExactInt], w: &[ExactInt]) -> ExactInt {
    &u[0] * &w[1] - &u[1] * &w[0]
}

/// `|det(AB, BC)|` for a planar triangle.
pub fn integer_area_triangle(a: &[ExactInt], b: &[ExactInt], c: &[ExactInt]) -> Result<ExactInt> {
    if [a, b, c].iter().any(|p| p.len() != 2) {
        return Err(Error::DimensionMismatch("triangle must be planar".into()));
    }
    let area = det2(&sub(b, a), &sub(c, b)).abs();
    if area.is_zero() {
        Err(Error::Collinear)
    } else {
        Ok(area)
    }
}

/// Index of the edge lattice of `S` in the integer points of its span.
pub fn integer_volume(s: &Simplex) -> Result<ExactInt> {
    let m = s.edge_matrix();
    determinantal_divisor(&m, m.cols()).map_err(|_| Error::Degenerate("simplex".into()))
}

/// Index of the lattice spanned by the primitive edge vectors.
pub fn integer_sine(c: &Cone) -> Result<ExactInt> {
    if c.k() == 1 {
        return Ok(BigInt::one());
    }
    let m = c.primitive_edge_matrix();
    determinantal_divisor(&m, c.k()).map_err(|_| Error::Degenerate("cone".into()))
}

/// Integer sine of the planar angle at `b` between rays `ba` and `bc`.
pub fn angle_sine(a: &[ExactInt], b: &[ExactInt], c: &[ExactInt]) -> Result<ExactInt> {
    integer_sine(&Cone::new(b.to_vec(), vec![sub(a, b), sub(c, b)])?)
}

/// Checks the integer sine rule on a planar triangle `ABC`.
pub fn sine_rule_check(s: &Simplex) -> bool {
    let v = s.vertices();
    if v.len() != 3 || v[0].len() != 2 {
        return false;
    }
    let (a, b, c) = (&v[0], &v[1], &v[2]);
    let (Ok(area), Ok(ab), Ok(ac), Ok(bc)) = (
        integer_area_triangle(a, b, c),
        integer_length(a, b),
        integer_length(a, c),
        integer_length(b, c),
    ) else {
        return false;
    };
    let (Ok(sin_b), Ok(sin_c), Ok(sin_a)) = (angle_sine(a, b, c), angle_sine(b, c, a), angle_sine(c, a, b))
    else {
        return false;
    };
    // each ratio sin/opposite-length must equal area/(ab*ac*bc)
    let denom = &ab * &ac * &bc;
    let holds = [(&sin_b, &ac), (&sin_c, &ab), (&sin_a, &bc)]
        .iter()
        .all(|(sin, opp)| *sin * &denom == &area * *opp);
    holds
}

/// Largest bounding box brute-force counting will scan.
pub const MAX_BOX_POINTS: u64 = 1_000_000;

/// Brute-force `(interior, boundary)` lattice point counts of a triangle.
pub fn count_triangle_points(a: &[ExactInt], b: &[ExactInt], c: &[ExactInt]) -> Result<(u64, u64)> {
    integer_area_triangle(a, b, c)?;
    let to_i64 = |v: &ExactInt| -> Result<i64> {
        i64::try_from(v).map_err(|_| Error::Degenerate("coordinates too large to count".into()))
    };
    let pts: Vec<(i64, i64)> = [a, b, c]
        .iter()
        .map(|p| Ok((to_i64(&p[0])?, to_i64(&p[1])?)))
        .collect::<Result<_>>()?;
    let (xmin, xmax) = (pts.iter().map(|p| p.0).min().unwrap(), pts.iter().map(|p| p.0).max().unwrap());
    let (ymin, ymax) = (pts.iter().map(|p| p.1).min().unwrap(), pts.iter().map(|p| p.1).max().unwrap());
    let span = (xmax - xmin + 1) as u64 * (ymax - ymin + 1) as u64;
    if span > MAX_BOX_POINTS {
        return Err(Error::Degenerate("bounding box too large to count".into()));
    }
    let orient = |p: (i64, i64), q: (i64, i64), r: (i64, i64)| -> i128 {
        (q.0 - p.0) as i128 * (r.1 - p.1) as i128 - (q.1 - p.1) as i128 * (r.0 - p.0) as i128
    };
    let total = orient(pts[0], pts[1], pts[2]).signum();
    let (mut interior, mut boundary) = (0u64, 0u64);
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let p = (x, y);
            let s = [
                orient(pts[0], pts[1], p) * total,
                orient(pts[1], pts[2], p) * total,
                orient(pts[2], pts[0], p) * total,
            ];
            if s.iter().any(|&v| v < 0) {
                continue;
            }
            if s.iter().all(|&v| v > 0) {
                interior += 1;
            } else {
                boundary += 1;
            }
        }
    }
    Ok((interior, boundary))
}

/// Pick's formula on a triangle: `2S = 2I + E - 2`, where the Euclidean
/// area `S` is half the integer area.
pub fn pick_check(a: &[ExactInt], b: &[ExactInt], c: &[ExactInt]) -> Result<bool> {
    let twice_area = integer_area_triangle(a, b, c)?;
    let (i, e) = count_triangle_points(a, b, c)?;
    Ok(twice_area == BigInt::from(2 * i + e) - 2)
}

/// Lattice points on segment `AB` including both endpoints.
pub fn segment_points(a: &[ExactInt], b: &[ExactInt]) -> Result<Vec<LatticePoint>> {
    let g = integer_length(a, b)?;
    let step: Vec<ExactInt> = sub(b, a).iter().map(|x| x.div_floor(&g)).collect();
    let mut out = vec![a.to_vec()];
    let mut cur = a.to_vec();
    let mut t = BigInt::zero();
    while t < g {
        cur = add(&cur, &step);
        out.push(cur.clone());
        t += 1u32;
    }
    Ok(out)
}

/// `|det|` of a square integer matrix, used as `iv` of a full-dimensional cone.
pub fn abs_det(m: &IntMatrix) -> Result<ExactInt> {
    Ok(det(m)?.abs())
}
