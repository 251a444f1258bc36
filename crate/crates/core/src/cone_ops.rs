//! Multidimensional operations on cones: permutations, adjacent cones,
//! canonical points, simplex partners, Euclidean reductions, strong best
//! approximations and Plücker coordinates.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{det, mod_inverse, residue, ExactInt, IntMatrix};
use crate::error::{Error, Result};
use crate::hnf::{arctan_form, is_simple, simple_grid, ArctanForm};
use crate::lattice::{add, integer_length, neg, Cone, Simplex};

/// A bijection of `{1..k}`, stored 0-based: `image[x] = s(x)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation { image: (0..k).collect() }
    }

    /// From one-line notation with 1-based entries, e.g. `[3, 2, 1]`.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        let k = one_based.len();
        let mut seen = vec![false; k];
        let mut image = Vec::with_capacity(k);
        for &v in one_based {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::Parse(format!("{one_based:?} is not a permutation")));
            }
            seen[v - 1] = true;
            image.push(v - 1);
        }
        Ok(Permutation { image })
    }

    /// From disjoint cycles with 1-based entries, on `{1..k}`.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..k).collect();
        let mut seen = vec![false; k];
        for cycle in cycles {
            for (pos, &v) in cycle.iter().enumerate() {
                if v == 0 || v > k || seen[v - 1] {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} on 1..{k}")));
                }
                seen[v - 1] = true;
                image[v - 1] = cycle[(pos + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { image })
    }

    /// The transposition `(i, j)`, 1-based.
    pub fn transposition(k: usize, i: usize, j: usize) -> Result<Self> {
        for v in [i, j] {
            if v == 0 || v > k {
                return Err(Error::IndexOutOfRange { index: v, max: k });
            }
        }
        let mut image: Vec<usize> = (0..k).collect();
        image.swap(i - 1, j - 1);
        Ok(Permutation { image })
    }

    /// The cycle `(1, 2, .., k)`.
    pub fn standard_cycle(k: usize) -> Self {
        Permutation {
            image: (0..k).map(|x| (x + 1) % k).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `s(x)` for 1-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1] + 1
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn power(&self, e: usize) -> Permutation {
        (0..e).fold(Permutation::identity(self.len()), |acc, _| self.compose(&acc))
    }

    /// A single cycle through all `k` points.
    pub fn is_full_cycle(&self) -> bool {
        let k = self.len();
        if k == 0 {
            return false;
        }
        let (mut x, mut steps) = (self.image[0], 1);
        while x != 0 {
            x = self.image[x];
            steps += 1;
            if steps > k {
                return false;
            }
        }
        steps == k
    }

    /// All permutations of `{1..k}` in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation { image: prefix.clone() });
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; k], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Coordinates `λ_i` of a point `(1/iv) Σ λ_i v_i`, reduced mod `iv`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlphaCoords {
    pub coords: Vec<ExactInt>,
    pub modulus: ExactInt,
}

/// One named congruence check with its exact residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub details: String,
    /// Informational checks are reported but do not affect the verdict.
    pub required: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn holds(&self) -> bool {
        self.checks.iter().filter(|c| c.required).all(|c| c.holds)
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool, details: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            holds,
            details: details.into(),
            required: true,
        });
    }

    pub fn info(&mut self, name: impl Into<String>, holds: bool, details: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            holds,
            details: details.into(),
            required: false,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// Edges reordered so that edge `x` of the result is edge `s(x)` of `c`.
pub fn permute(c: &Cone, s: &Permutation) -> Result<Cone> {
    if s.len() != c.k() {
        return Err(Error::SizeMismatch {
            perm: s.len(),
            edges: c.k(),
        });
    }
    c.with_edges((1..=c.k()).map(|x| c.edges()[s.apply(x) - 1].clone()).collect())
}

fn check_index(i: usize, max: usize) -> Result<()> {
    if i == 0 || i > max {
        Err(Error::IndexOutOfRange { index: i, max })
    } else {
        Ok(())
    }
}

fn simple_form(c: &Cone) -> Result<ArctanForm> {
    if !is_simple(c)? {
        return Err(Error::NotSimple);
    }
    arctan_form(c)
}

fn invert_cosine(a: &ExactInt, s: &ExactInt) -> Result<ExactInt> {
    mod_inverse(a, s).map_err(|_| Error::CosineNotInvertible {
        cos: a.to_string(),
        sin: s.to_string(),
    })
}

/// Cosine congruences of the `(i, j)`-transpose of a simple cone.
pub fn verify_transpose_relations(c: &Cone, i: usize, j: usize) -> Result<Report> {
    let k = c.k();
    check_index(j, k)?;
    if i == 0 || i >= j {
        return Err(Error::IndexOutOfRange { index: i, max: j - 1 });
    }
    let f = simple_form(c)?;
    let s = f.isin_k();
    let cos = f.last_cosines();
    let sigma = Permutation::transposition(k, i, j)?;
    let g = arctan_form(&permute(c, &sigma)?)?;
    let cos_t = g.last_cosines();
    let mut r = Report::default();
    r.push(
        format!("transpose({i},{j}) isin_k"),
        g.isin_k() == s,
        format!("{} = {}", g.isin_k(), s),
    );
    r.push(format!("transpose({i},{j}) shape"), g.has_simple_shape(), "diag(1,..,1,isin_k)");
    if j < k {
        for x in 1..k {
            let want = &cos[sigma.apply(x) - 1];
            r.push(
                format!("transpose({i},{j}) icos_{x}"),
                cos_t[x - 1] == *want,
                format!("{} = icos_{}({})", cos_t[x - 1], sigma.apply(x), want),
            );
        }
        return Ok(r);
    }
    let inv = invert_cosine(&cos[i - 1], &s)?;
    for x in 1..k {
        let want = if x == i {
            inv.clone()
        } else {
            residue(&(-&cos[x - 1] * &inv), &s)
        };
        let formula = if x == i {
            format!("icos_{i}^-1 = {inv}")
        } else {
            format!("-{}*{} = {}", cos[x - 1], inv, want)
        };
        r.push(
            format!("transpose({i},{k}) icos_{x}"),
            residue(&cos_t[x - 1], &s) == want,
            format!("{} ≡ {formula} mod {s}", cos_t[x - 1]),
        );
    }
    Ok(r)
}

/// Cosines of `α_{τ^j}`, `j = 0..k-1`, for the given cycle.
fn cycle_forms(c: &Cone, tau: &Permutation) -> Result<Vec<ArctanForm>> {
    (0..c.k()).map(|j| arctan_form(&permute(c, &tau.power(j))?)).collect()
}

/// Product congruences over a full cycle, plus the explicit formulas for
/// the cosines of `α_{τ^j}` with `τ = (1, .., k)`.
pub fn verify_cycle_products(c: &Cone, tau: &Permutation) -> Result<Report> {
    let k = c.k();
    if tau.len() != k {
        return Err(Error::SizeMismatch { perm: tau.len(), edges: k });
    }
    if !tau.is_full_cycle() {
        return Err(Error::NotACycle);
    }
    let f = simple_form(c)?;
    let s = f.isin_k();
    let forms = cycle_forms(c, tau)?;
    let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let want = residue(&sign, &s);
    let mut r = Report::default();
    for x in 1..k {
        let factors: Vec<ExactInt> = forms.iter().map(|g| g.last_cosines()[x - 1].clone()).collect();
        let prod = residue(&factors.iter().product(), &s);
        let shown: Vec<String> = factors.iter().map(|v| v.to_string()).collect();
        r.push(
            format!("cycle{tau} product icos_{x}"),
            prod == want,
            format!("{} ≡ {} ≡ (-1)^{k} mod {s}", shown.join("*"), prod),
        );
    }
    r.extend(verify_strict_cycle(c)?);
    Ok(r)
}

/// Explicit cosines of `α_{τ^j}` for the standard cycle: `icos_j^{-1}` at
/// position `k - j`, `-icos_j^{-1} icos_{(x+j) mod k}` elsewhere.
pub fn verify_strict_cycle(c: &Cone) -> Result<Report> {
    let k = c.k();
    let f = simple_form(c)?;
    let s = f.isin_k();
    let cos = f.last_cosines();
    let forms = cycle_forms(c, &Permutation::standard_cycle(k))?;
    let mut r = Report::default();
    for j in 1..k {
        let inv = invert_cosine(&cos[j - 1], &s)?;
        let got = forms[j].last_cosines();
        for x in 1..k {
            let want = if x == k - j {
                inv.clone()
            } else {
                residue(&(-&inv * &cos[(x + j) % k - 1]), &s)
            };
            r.push(
                format!("strict cycle tau^{j} icos_{x}"),
                residue(&got[x - 1], &s) == want,
                format!("{} ≡ {} mod {s}", got[x - 1], want),
            );
        }
    }
    Ok(r)
}

/// `M[r][(r+t) mod k] = icos_{t,k}(α_{τ^r})` with zero diagonal, `τ = (1, .., k)`.
pub fn special_matrix(c: &Cone) -> Result<IntMatrix> {
    let k = c.k();
    simple_form(c)?;
    let forms = cycle_forms(c, &Permutation::standard_cycle(k))?;
    let mut m = IntMatrix::zeros(k, k);
    for (r, g) in forms.iter().enumerate() {
        let cos = g.last_cosines();
        for t in 1..k {
            m[(r, (r + t) % k)] = cos[t - 1].clone();
        }
    }
    Ok(m)
}

/// `det(M_α) ≡ 1 - k (mod isin_k α)`.
pub fn verify_special_det(c: &Cone) -> Result<Report> {
    let m = special_matrix(c)?;
    let s = arctan_form(c)?.isin_k();
    let d = det(&m)?;
    let got = residue(&d, &s);
    let want = residue(&BigInt::from(1 - c.k() as i64), &s);
    let mut r = Report::default();
    r.push(
        "special matrix det",
        got == want,
        format!("det = {d} ≡ {got}, 1-k ≡ {want} mod {s}"),
    );
    Ok(r)
}

/// Edge `i` replaced by its negative.
pub fn adjacent(c: &Cone, i: usize) -> Result<Cone> {
    check_index(i, c.k())?;
    let mut edges = c.edges().to_vec();
    edges[i - 1] = neg(&edges[i - 1]);
    c.with_edges(edges)
}

/// `(π_i - α)_{(i,k)}`: edge `k` becomes `-v_i`, edge `i` becomes `v_k`.
pub fn face_adjacent(c: &Cone, i: usize) -> Result<Cone> {
    let k = c.k();
    permute(&adjacent(c, i)?, &Permutation::transposition(k, i, k)?)
}

/// Sine and cosine relations of the `i`-th adjacent cone.
pub fn verify_adjacent_relations(c: &Cone, i: usize) -> Result<Report> {
    let k = c.k();
    check_index(i, k)?;
    let f = simple_form(c)?;
    let s = f.isin_k();
    let cos = f.last_cosines();
    let g = arctan_form(&adjacent(c, i)?)?;
    let got = g.last_cosines();
    let mut r = Report::default();
    r.push(format!("adjacent({i}) isin_k"), g.isin_k() == s, format!("{} = {}", g.isin_k(), s));
    for x in 1..k {
        let flips = i == k || x == i;
        let want = if flips { residue(&(&s - &cos[x - 1]), &s) } else { cos[x - 1].clone() };
        let formula = if flips {
            format!("{s} - {}", cos[x - 1])
        } else {
            format!("{}", cos[x - 1])
        };
        r.push(
            format!("adjacent({i}) icos_{x}"),
            residue(&got[x - 1], &s) == want,
            format!("{} ≡ {formula} mod {s}", got[x - 1]),
        );
    }
    Ok(r)
}

/// `iv · H^{-1} · (1, .., 1)` reduced mod `iv`, `H` the normal form.
pub fn canonical_point_coords(c: &Cone) -> Result<AlphaCoords> {
    let f = simple_form(c)?;
    let h = f.grid();
    let k = f.k();
    let iv = f.diagonal_product();
    let mut x = vec![BigRational::zero(); k];
    for r in (0..k).rev() {
        let mut acc = BigRational::from_integer(iv.clone());
        for col in r + 1..k {
            acc -= BigRational::from_integer(h[(r, col)].clone()) * &x[col];
        }
        x[r] = acc / BigRational::from_integer(h[(r, r)].clone());
    }
    let coords = x
        .into_iter()
        .map(|v| {
            if v.is_integer() {
                Ok(residue(&v.to_integer(), &iv))
            } else {
                Err(Error::Degenerate("canonical point is not integral".into()))
            }
        })
        .collect::<Result<_>>()?;
    Ok(AlphaCoords { coords, modulus: iv })
}

/// The canonical point has coordinates `(-icos_1, .., -icos_{k-1}, 1)`.
pub fn verify_canonical_point(c: &Cone) -> Result<Report> {
    let f = simple_form(c)?;
    let p = canonical_point_coords(c)?;
    let s = &p.modulus;
    let mut want: Vec<ExactInt> = f.last_cosines().iter().map(|a| residue(&-a, s)).collect();
    want.push(residue(&BigInt::one(), s));
    let mut r = Report::default();
    let shown = |v: &[ExactInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    r.push(
        "canonical point",
        p.coords == want,
        format!("({}) ≡ ({}) mod {s}", shown(&p.coords), shown(&want)),
    );
    Ok(r)
}

/// Relations between `α = ∠(A_0; A_1..A_k)` and `β = ∠(A_1; A_0, A_2..A_k)`
/// for a simplex with unit edge lengths.
pub fn simplex_partner_check(s: &Simplex) -> Result<Report> {
    let v = s.vertices();
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if !integer_length(&v[a], &v[b])?.is_one() {
                return Err(Error::NonUnitEdgeLengths(a, b));
            }
        }
    }
    let alpha = s.cone_at(0)?;
    let beta = s.cone_at(1)?;
    let fa = simple_form(&alpha)?;
    let fb = simple_form(&beta)?;
    let k = fa.k();
    let m = fa.isin_k();
    let ca = fa.last_cosines();
    let cb = fb.last_cosines();
    let mut r = Report::default();
    r.push("simplex isin_k", fb.isin_k() == m, format!("{} = {}", fb.isin_k(), m));
    if k >= 2 {
        let sum: ExactInt = &cb[0] + ca.iter().sum::<ExactInt>();
        let shown: Vec<String> = ca.iter().map(|x| x.to_string()).collect();
        r.push(
            "simplex icos_1 sum",
            residue(&sum, &m) == residue(&BigInt::one(), &m),
            format!("{} + ({}) = {} ≡ {} mod {m}", cb[0], shown.join(" + "), sum, residue(&sum, &m)),
        );
    }
    for x in 2..k {
        r.push(
            format!("simplex icos_{x}"),
            cb[x - 1] == ca[x - 1],
            format!("{} = {}", cb[x - 1], ca[x - 1]),
        );
    }
    Ok(r)
}

/// `(a_i, a_k)` of a simple cone after validating `1 <= i <= k-1`.
fn reduction_data(c: &Cone, i: usize) -> Result<(ArctanForm, ExactInt, ExactInt)> {
    let k = c.k();
    if k < 2 {
        return Err(Error::TooSmall { min: 2, got: k });
    }
    check_index(i, k - 1)?;
    let f = simple_form(c)?;
    let a_i = f.last_cosines()[i - 1].clone();
    if a_i.is_zero() {
        return Err(Error::ZeroCosine(i));
    }
    let a_k = f.isin_k();
    Ok((f, a_i, a_k))
}

/// `⌊a_k / a_i⌋`.
pub fn partial_quotient(c: &Cone, i: usize) -> Result<ExactInt> {
    let (_, a_i, a_k) = reduction_data(c, i)?;
    Ok(a_k.div_floor(&a_i))
}

/// Swap `a_i` and `a_k` in the last column and renormalise. The result is
/// the grid cone of the new normal form.
pub fn euclid_reduce(c: &Cone, i: usize) -> Result<Cone> {
    let (f, a_i, a_k) = reduction_data(c, i)?;
    let mut cos = f.last_cosines();
    cos[i - 1] = a_k;
    let m = simple_grid(&cos, &a_i);
    Ok(arctan_form(&Cone::from_columns(&m)?)?.grid_cone())
}

/// `T_i`: the reduction branch whose partial quotient exceeds 1.
pub fn t_i(c: &Cone, i: usize) -> Result<Cone> {
    let k = c.k();
    if k < 2 {
        return Err(Error::TooSmall { min: 2, got: k });
    }
    check_index(i, k - 1)?;
    let a_i = simple_form(c)?.last_cosines()[i - 1].clone();
    if a_i < BigInt::from(2) {
        return Err(Error::CosineTooSmall {
            index: i,
            value: a_i.to_string(),
        });
    }
    let swap = Permutation::transposition(k, i, k)?;
    let one = BigInt::one();
    let transposed = permute(c, &swap)?;
    let first = if partial_quotient(&transposed, i)? > one {
        Some(face_adjacent(&euclid_reduce(&transposed, i)?, i)?)
    } else {
        None
    };
    let adj = face_adjacent(c, i)?;
    let second = if partial_quotient(&adj, i)? > one {
        Some(permute(&euclid_reduce(&adj, i)?, &swap)?)
    } else {
        None
    };
    match (first, second) {
        (Some(x), None) | (None, Some(x)) => Ok(x),
        (Some(x), Some(y)) => {
            if arctan_form(&x)?.grid() == arctan_form(&y)?.grid() {
                Ok(x)
            } else {
                Err(Error::BranchAmbiguity(format!("both branches apply at i = {i} and differ")))
            }
        }
        (None, None) => Err(Error::BranchAmbiguity(format!("neither branch applies at i = {i}"))),
    }
}

/// Closure of all edge permutations of `c` under the applicable `T_i`,
/// up to `max_steps` applications, one entry per congruence class in
/// discovery order.
pub fn sba_cones(c: &Cone, max_steps: usize) -> Result<Vec<ArctanForm>> {
    let k = c.k();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for s in Permutation::all(k) {
        let p = permute(c, &s)?;
        let f = arctan_form(&p)?;
        if seen.insert(f.grid().clone()) {
            frontier.push(f.grid_cone());
            out.push(f);
        }
    }
    for _ in 0..max_steps {
        let mut next = Vec::new();
        for cone in &frontier {
            if k < 2 || !is_simple(cone)? {
                continue;
            }
            for i in 1..k {
                let Ok(t) = t_i(cone, i) else { continue };
                let f = arctan_form(&t)?;
                if seen.insert(f.grid().clone()) {
                    next.push(f.grid_cone());
                    out.push(f);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(out)
}

/// `p_i = (-1)^{i-1}` times the minor of the top `k-1` grid rows omitting
/// column `i`.
pub fn plucker(c: &Cone) -> Result<Vec<ExactInt>> {
    let k = c.k();
    if k < 2 {
        return Err(Error::TooSmall { min: 2, got: k });
    }
    let f = arctan_form(c)?;
    let rows: Vec<usize> = (0..k - 1).collect();
    (0..k)
        .map(|i| {
            let cols: Vec<usize> = (0..k).filter(|&j| j != i).collect();
            let minor = det(&f.grid().select(&rows, &cols))?;
            Ok(if i % 2 == 0 { minor } else { -minor })
        })
        .collect()
}

/// Plücker congruence for the `(i, k)`-transpose at positions `i` and `k`,
/// the other positions reported as informational, plus
/// `iv / isin_k = ∏_{j<k} isin_j`.
pub fn verify_plucker_transpose(c: &Cone, i: usize) -> Result<Report> {
    let k = c.k();
    if k < 2 {
        return Err(Error::TooSmall { min: 2, got: k });
    }
    check_index(i, k - 1)?;
    let swapped = permute(c, &Permutation::transposition(k, i, k)?)?;
    let f = arctan_form(c)?;
    let g = arctan_form(&swapped)?;
    let iv = f.diagonal_product();
    let p = plucker(c)?;
    let q = plucker(&swapped)?;
    let rhs = (&iv / f.isin_k()) * (&iv / g.isin_k());
    let want = residue(&rhs, &iv);
    let mut r = Report::default();
    for j in 1..=k {
        let prod = &p[j - 1] * &q[j - 1];
        let holds = residue(&prod, &iv) == want;
        let details = format!(
            "{}*{} ≡ {} vs {} ≡ {} mod {iv}",
            p[j - 1],
            q[j - 1],
            residue(&prod, &iv),
            rhs,
            want
        );
        if j == i || j == k {
            r.push(format!("plucker transpose({i},{k}) p_{j}"), holds, details);
        } else {
            r.info(format!("plucker transpose({i},{k}) p_{j}"), holds, details);
        }
    }
    let head: ExactInt = (0..k - 1).map(|j| f.grid()[(j, j)].clone()).product();
    r.push(
        "iv/isin_k = prod isin_i",
        &iv / f.isin_k() == head && (&iv % f.isin_k()).is_zero(),
        format!("{iv}/{} = {head}", f.isin_k()),
    );
    Ok(r)
}

/// Simplex `A_0 = vertex`, `A_i = vertex + v_i` spanned by a cone.
pub fn cone_simplex(c: &Cone) -> Result<Simplex> {
    let mut vs = vec![c.vertex().to_vec()];
    vs.extend(c.edges().iter().map(|e| add(c.vertex(), e)));
    Simplex::new(vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::lattice::point;
    use crate::sample::{random_cone, random_simple_cone, rng};
    use crate::trig2d::{iarctan2, itan2, t_op, Angle2D};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;

    fn big3() -> Cone {
        Cone::from_i64(&[&[123, 234, 655], &[13, -347, 341], &[19, 156, -456]]).unwrap()
    }

    fn last(c: &Cone) -> Vec<ExactInt> {
        arctan_form(c).unwrap().last_column()
    }

    fn cyc(k: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(k, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let t = cyc(3, &[1, 2, 3]);
        assert_eq!(t.one_line(), vec![2, 3, 1]);
        assert!(t.is_full_cycle());
        assert_eq!(t.power(3), Permutation::identity(3));
        assert_eq!(Permutation::from_one_line(&[3, 2, 1]).unwrap(), cyc(3, &[1, 3]));
        assert!(!cyc(3, &[1, 3]).is_full_cycle());
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::standard_cycle(3), t);
    }

    #[test]
    fn big3_permutations() {
        let c = big3();
        assert_eq!(last(&permute(&c, &cyc(3, &[1, 3])).unwrap()), point(&[11154342, 18378882, 21469421]));
        assert_eq!(last(&permute(&c, &Permutation::identity(3)).unwrap()), last(&c));
        let tau = cyc(3, &[1, 2, 3]);
        assert_eq!(last(&permute(&c, &tau).unwrap()), point(&[18378882, 11154342, 21469421]));
        assert_eq!(last(&permute(&c, &tau.power(2)).unwrap()), point(&[20652409, 18802856, 21469421]));
        assert_eq!(
            permute(&c, &Permutation::identity(2)).unwrap_err(),
            Error::SizeMismatch { perm: 2, edges: 3 }
        );
    }

    #[test]
    fn big3_relations() {
        let c = big3();
        let r = verify_transpose_relations(&c, 1, 3).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(verify_transpose_relations(&c, 1, 2).unwrap().holds());
        assert!(verify_cycle_products(&c, &cyc(3, &[1, 2, 3])).unwrap().holds());
        assert!(verify_cycle_products(&c, &cyc(3, &[1, 3, 2])).unwrap().holds());
        assert_eq!(verify_cycle_products(&c, &cyc(3, &[1, 3])).unwrap_err(), Error::NotACycle);
        assert!(verify_special_det(&c).unwrap().holds());
        for i in 1..=3 {
            assert!(verify_adjacent_relations(&c, i).unwrap().holds());
        }
        assert!(verify_canonical_point(&c).unwrap().holds());
    }

    #[test]
    fn big3_special_det_by_hand() {
        // rows built from the three cyclic grids
        let m = IntMatrix::from_i64_rows(&[
            &[0, 9719300, 8781600],
            &[11154342, 0, 18378882],
            &[20652409, 18802856, 0],
        ]);
        assert_eq!(special_matrix(&big3()).unwrap(), m);
        assert_eq!(residue(&det(&m).unwrap(), &int(21469421)), int(21469421 - 2));
    }

    #[test]
    fn big3_adjacent() {
        let a = adjacent(&big3(), 1).unwrap();
        assert_eq!(last(&a), point(&[11750121, 8781600, 21469421]));
        assert_eq!(9719300 + 11750121, 21469421);
        let twice = adjacent(&a, 1).unwrap();
        assert_eq!(last(&twice), last(&big3()));
        let planar = adjacent(&iarctan2(&BigRational::new(int(8), int(5))).unwrap().cone().unwrap(), 2).unwrap();
        assert_eq!(last(&planar), point(&[3, 8]));
        assert!(matches!(adjacent(&big3(), 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn canonical_point_example() {
        let p = canonical_point_coords(&big3()).unwrap();
        assert_eq!(p.modulus, int(21469421));
        assert_eq!(p.coords, point(&[21469421 - 9719300, 21469421 - 8781600, 1]));
        let basis = Cone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let b = canonical_point_coords(&basis).unwrap();
        assert_eq!((b.coords, b.modulus), (point(&[0, 0, 0]), int(1)));
    }

    #[test]
    fn simplex_example() {
        let s = cone_simplex(&big3()).unwrap();
        let r = simplex_partner_check(&s).unwrap();
        assert!(r.holds(), "{r:?}");
        let beta = s.cone_at(1).unwrap();
        assert_eq!(last(&beta), point(&[2968522, 8781600, 21469421]));
        let unit = Simplex::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(simplex_partner_check(&unit).unwrap().holds());
        let nonunit = Simplex::from_i64(&[&[0, 0, 0], &[123, 234, 655], &[13, -347, 156], &[19, 156, -457]]).unwrap();
        assert_eq!(simplex_partner_check(&nonunit).unwrap_err(), Error::NonUnitEdgeLengths(1, 3));
    }

    #[test]
    fn euclid_examples() {
        let planar = Cone::from_i64(&[&[1, 0], &[10, 43]]).unwrap();
        assert_eq!(arctan_form(&euclid_reduce(&planar, 1).unwrap()).unwrap().grid(), &IntMatrix::from_i64_rows(&[&[1, 3], &[0, 10]]));
        assert_eq!(partial_quotient(&planar, 1).unwrap(), int(4));
        let c = Cone::from_columns(&simple_grid(&point(&[2, 3]), &int(7))).unwrap();
        assert_eq!(last(&euclid_reduce(&c, 1).unwrap()), point(&[1, 1, 2]));
        let basis = Cone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(euclid_reduce(&basis, 1).unwrap_err(), Error::ZeroCosine(1));
        assert_eq!(partial_quotient(&basis, 2).unwrap_err(), Error::ZeroCosine(2));
        let skew = Cone::from_i64(&[&[1, 1, 0], &[1, -1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(euclid_reduce(&skew, 1).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn t_i_matches_t_op_on_43_30() {
        let mut a = iarctan2(&BigRational::new(int(43), int(30))).unwrap();
        let mut c = a.cone().unwrap();
        let mut tans = Vec::new();
        for _ in 0..3 {
            c = t_i(&c, 1).unwrap();
            a = t_op(&a).unwrap();
            let via_cone = itan2(&Angle2D::from_cone(&c).unwrap());
            assert_eq!(via_cone, itan2(&a));
            tans.push(via_cone.to_string());
        }
        assert_eq!(tans, ["10/7", "3/2", "1"]);
        assert!(matches!(t_i(&c, 1), Err(Error::CosineTooSmall { .. })));
    }

    #[test]
    fn sba_cones_examples() {
        let c = iarctan2(&BigRational::new(int(43), int(30))).unwrap().cone().unwrap();
        let tans: HashSet<String> = sba_cones(&c, 3)
            .unwrap()
            .iter()
            .map(|f| itan2(&Angle2D::from_cone(&f.grid_cone()).unwrap()).to_string())
            .collect();
        for t in ["43/30", "10/7", "3/2", "1", "43/33", "13/10", "4/3"] {
            assert!(tans.contains(t), "{t} missing from {tans:?}");
        }
        assert_eq!(tans.len(), 7);
        let basis = Cone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let b = sba_cones(&basis, 5).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].grid(), &IntMatrix::identity(3));
    }

    #[test]
    fn plucker_examples() {
        let c = Cone::from_columns(&IntMatrix::from_i64_rows(&[&[1, 4, 67], &[0, 5, 59], &[0, 0, 107]])).unwrap();
        assert_eq!(plucker(&c).unwrap(), point(&[4 * 59 - 5 * 67, -59, 5]));
        let basis = Cone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(plucker(&basis).unwrap(), point(&[0, 0, 1]));
        let planar = Cone::from_i64(&[&[1, 0], &[5, 8]]).unwrap();
        assert_eq!(plucker(&planar).unwrap(), point(&[5, -1]));
        assert!(verify_plucker_transpose(&planar, 1).unwrap().holds());
        assert_eq!(plucker(&Cone::from_i64(&[&[1, 2]]).unwrap()).unwrap_err(), Error::TooSmall { min: 2, got: 1 });
        let r = verify_plucker_transpose(&big3(), 1).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]

        #[test]
        fn simple_cone_relations(seed in any::<u64>(), k in 2usize..=4) {
            let mut g = rng(seed);
            let c = random_simple_cone(&mut g, k, 1_000_000);
            let s = arctan_form(&c).unwrap().isin_k();
            for j in 2..=k {
                for i in 1..j {
                    let r = verify_transpose_relations(&c, i, j).unwrap();
                    prop_assert!(r.holds(), "{:?}", r);
                }
            }
            for i in 1..=k {
                prop_assert!(verify_adjacent_relations(&c, i).unwrap().holds());
            }
            let mut pts: Vec<usize> = (1..=k).collect();
            for _ in 0..5 {
                pts.shuffle(&mut g);
                let tau = Permutation::from_cycles(k, &[pts.clone()]).unwrap();
                prop_assert!(verify_cycle_products(&c, &tau).unwrap().holds());
            }
            prop_assert!(verify_special_det(&c).unwrap().holds());
            prop_assert!(verify_canonical_point(&c).unwrap().holds());
            for s_perm in Permutation::all(k) {
                prop_assert_eq!(arctan_form(&permute(&c, &s_perm).unwrap()).unwrap().isin_k(), s.clone());
            }
        }

        #[test]
        fn t_i_shrinks_isin(seed in any::<u64>()) {
            let mut g = rng(seed);
            let c = random_simple_cone(&mut g, 3, 5000);
            let f = arctan_form(&c).unwrap();
            for i in 1..3 {
                if f.last_cosines()[i - 1] < int(2) {
                    continue;
                }
                let t = t_i(&c, i).unwrap();
                let tf = arctan_form(&t).unwrap();
                prop_assert!(tf.isin_k() < f.isin_k());
                prop_assert!(tf.has_simple_shape());
            }
        }

        #[test]
        fn plucker_transpose_general(seed in any::<u64>()) {
            let mut g = rng(seed);
            let c = random_cone(&mut g, 3, 3, 12);
            for i in 1..3 {
                let r = verify_plucker_transpose(&c, i).unwrap();
                prop_assert!(r.holds(), "{:?}", r);
            }
        }
    }
}
