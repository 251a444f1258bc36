//! Normalised Hermite normal form of an ordered cone (its integer
//! arctangent) and the sines, cosines and tangents read off it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{combinations, gcd_ext, ExactInt, IntMatrix};
use crate::error::{Error, Result};
use crate::lattice::{integer_sine, primitive, Cone};

/// The `k x k` normal form of a cone together with an `n x n` unimodular
/// transform `U` such that `U * (primitive edges) = [grid; 0]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArctanForm {
    grid: IntMatrix,
    transform: IntMatrix,
}

impl ArctanForm {
    pub fn k(&self) -> usize {
        self.grid.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.transform.rows()
    }

    pub fn grid(&self) -> &IntMatrix {
        &self.grid
    }

    pub fn transform(&self) -> &IntMatrix {
        &self.transform
    }

    /// `a_{k,k}`, the last integer sine.
    pub fn isin_k(&self) -> ExactInt {
        let k = self.k();
        self.grid[(k - 1, k - 1)].clone()
    }

    /// Entries above the diagonal in the last column, `a_{1,k} .. a_{k-1,k}`.
    pub fn last_cosines(&self) -> Vec<ExactInt> {
        let k = self.k();
        (0..k - 1).map(|j| self.grid[(j, k - 1)].clone()).collect()
    }

    /// The whole last column.
    pub fn last_column(&self) -> Vec<ExactInt> {
        self.grid.column(self.k() - 1)
    }

    /// The cone in `R^k` whose edges are the grid columns.
    pub fn grid_cone(&self) -> Cone {
        Cone::from_columns(&self.grid).expect("normal form has full rank")
    }

    /// Product of all diagonal entries.
    pub fn diagonal_product(&self) -> ExactInt {
        (0..self.k()).map(|i| self.grid[(i, i)].clone()).product()
    }

    /// True if the grid has the shape `diag(1, .., 1, s)` plus a last column.
    pub fn has_simple_shape(&self) -> bool {
        let k = self.k();
        (0..k).all(|r| {
            (0..k - 1).all(|c| {
                let want = if r == c { BigInt::one() } else { BigInt::zero() };
                self.grid[(r, c)] == want
            })
        })
    }
}

/// Grid `diag(1, .., 1, s)` with `cosines` above `s` in the last column.
pub fn simple_grid(cosines: &[ExactInt], s: &ExactInt) -> IntMatrix {
    let k = cosines.len() + 1;
    let mut m = IntMatrix::identity(k);
    for (j, c) in cosines.iter().enumerate() {
        m[(j, k - 1)] = c.clone();
    }
    m[(k - 1, k - 1)] = s.clone();
    m
}

/// Row-style Hermite normal form of `a` (full column rank), tracking the
/// left transform. Columns are never permuted.
pub fn hermite(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let (n, k) = (a.rows(), a.cols());
    if k > n {
        return Err(Error::DegenerateCone);
    }
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    for i in 0..k {
        for t in i + 1..n {
            if h[(t, i)].is_zero() {
                continue;
            }
            let (a_ii, b) = (h[(i, i)].clone(), h[(t, i)].clone());
            let (g, x, y) = gcd_ext(&a_ii, &b);
            let (p, q) = (-(&b / &g), &a_ii / &g);
            h.combine_rows(i, t, [&x, &y, &p, &q]);
            u.combine_rows(i, t, [&x, &y, &p, &q]);
        }
        if h[(i, i)].is_zero() {
            return Err(Error::DegenerateCone);
        }
        if h[(i, i)].is_negative() {
            h.negate_row(i);
            u.negate_row(i);
        }
        for j in 0..i {
            let f = -h[(j, i)].div_floor(&h[(i, i)]);
            h.add_row_multiple(j, i, &f);
            u.add_row_multiple(j, i, &f);
        }
    }
    Ok((h, u))
}

/// Normalised Hermite form of the cone's primitive edges.
pub fn arctan_form(c: &Cone) -> Result<ArctanForm> {
    let k = c.k();
    let cols: Vec<Vec<ExactInt>> = c
        .edges()
        .iter()
        .map(|e| primitive(e).map(|p| p.0))
        .collect::<Result<_>>()?;
    let a = IntMatrix::from_columns(&cols)?;
    let (h, u) = hermite(&a)?;
    let idx: Vec<usize> = (0..k).collect();
    Ok(ArctanForm {
        grid: h.select(&idx, &idx),
        transform: u,
    })
}

fn check_index(i: usize, k: usize) -> Result<()> {
    if i == 0 || i > k {
        Err(Error::IndexOutOfRange { index: i, max: k })
    } else {
        Ok(())
    }
}

/// `isin_i = a_{i,i}` (1-based).
pub fn isin_i(f: &ArctanForm, i: usize) -> Result<ExactInt> {
    check_index(i, f.k())?;
    Ok(f.grid[(i - 1, i - 1)].clone())
}

/// `icos_{j,i} = a_{j,i}` for `j < i` (1-based).
pub fn icos_ji(f: &ArctanForm, j: usize, i: usize) -> Result<ExactInt> {
    check_index(i, f.k())?;
    if j == 0 || j >= i {
        return Err(Error::IndexOutOfRange { index: j, max: i - 1 });
    }
    Ok(f.grid[(j - 1, i - 1)].clone())
}

/// Column `i` truncated to its first `i` entries (a primitive vector with
/// positive last entry).
pub fn itan_i(f: &ArctanForm, i: usize) -> Result<Vec<ExactInt>> {
    check_index(i, f.k())?;
    Ok((0..i).map(|r| f.grid[(r, i - 1)].clone()).collect())
}

/// Every `(k-1)`-subcone has integer sine 1.
pub fn is_simple(c: &Cone) -> Result<bool> {
    let k = c.k();
    if k <= 2 {
        return Ok(true);
    }
    for positions in combinations(k, k - 1) {
        if !integer_sine(&c.subcone(&positions)?)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer congruence of ordered cones: equal normal forms.
pub fn congruent(a: &Cone, b: &Cone) -> Result<bool> {
    if a.k() != b.k() {
        return Err(Error::DimensionMismatch(format!(
            "cones have {} and {} edges",
            a.k(),
            b.k()
        )));
    }
    Ok(arctan_form(a)?.grid == arctan_form(b)?.grid)
}
