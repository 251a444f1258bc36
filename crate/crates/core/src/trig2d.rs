//! Planar integer trigonometry: sails, LLS sequences, tangents, transpose
//! and adjacent angles, sums, the triangle criterion and strong best
//! approximations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{cf_eval, cf_expand, int, regular_cf, CFSeq, ExactInt, ExactRat, IntMatrix, Parity, ProjRat};
use crate::error::{Error, Result};
use crate::hnf::arctan_form;
use crate::lattice::{add, integer_length, neg, primitive, sub, Cone, LatticePoint};

/// A planar angle `∠(A; B C)` given by its vertex and two edge vectors.
/// Edges pointing along the same ray form the trivial angle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Angle2D {
    vertex: LatticePoint,
    first: Vec<ExactInt>,
    second: Vec<ExactInt>,
}

fn det2(u: &[ExactInt], w: &[ExactInt]) -> ExactInt {
    &u[0] * &w[1] - &u[1] * &w[0]
}

impl Angle2D {
    pub fn new(vertex: LatticePoint, first: Vec<ExactInt>, second: Vec<ExactInt>) -> Result<Self> {
        if vertex.len() != 2 || first.len() != 2 || second.len() != 2 {
            return Err(Error::DimensionMismatch("planar angles live in Z^2".into()));
        }
        if first.iter().all(Zero::is_zero) || second.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        if det2(&first, &second).is_zero() {
            let dot = &first[0] * &second[0] + &first[1] * &second[1];
            if dot.is_negative() {
                return Err(Error::Degenerate("edges form a straight angle".into()));
            }
        }
        Ok(Angle2D { vertex, first, second })
    }

    /// Angle at the origin.
    pub fn from_edges(first: Vec<ExactInt>, second: Vec<ExactInt>) -> Result<Self> {
        Self::new(vec![BigInt::zero(), BigInt::zero()], first, second)
    }

    pub fn from_i64(first: [i64; 2], second: [i64; 2]) -> Result<Self> {
        Self::from_edges(vec![int(first[0]), int(first[1])], vec![int(second[0]), int(second[1])])
    }

    pub fn from_cone(c: &Cone) -> Result<Self> {
        if c.k() != 2 || c.dim() != 2 {
            return Err(Error::DimensionMismatch("expected a 2-cone in R^2".into()));
        }
        Self::new(c.vertex().to_vec(), c.edges()[0].clone(), c.edges()[1].clone())
    }

    pub fn vertex(&self) -> &[ExactInt] {
        &self.vertex
    }

    pub fn first(&self) -> &[ExactInt] {
        &self.first
    }

    pub fn second(&self) -> &[ExactInt] {
        &self.second
    }

    pub fn is_trivial(&self) -> bool {
        det2(&self.first, &self.second).is_zero()
    }

    pub fn cone(&self) -> Result<Cone> {
        if self.is_trivial() {
            return Err(Error::TrivialAngle);
        }
        Cone::new(self.vertex.clone(), vec![self.first.clone(), self.second.clone()])
    }

    /// `(icos, isin)` read off the normal form; `(0, 1)` when `isin = 1`.
    fn grid_pair(&self) -> Result<(ExactInt, ExactInt)> {
        let f = arctan_form(&self.cone()?)?;
        Ok((f.grid()[(0, 1)].clone(), f.grid()[(1, 1)].clone()))
    }
}

/// Odd-length sequence of positive integers: alternating sail segment
/// lengths and vertex sines.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LLSSeq(Vec<ExactInt>);

impl LLSSeq {
    pub fn new(elements: Vec<ExactInt>) -> Result<Self> {
        if elements.len().is_multiple_of(2) {
            return Err(Error::Parse("an LLS sequence has odd length".into()));
        }
        if let Some(bad) = elements.iter().find(|e| !e.is_positive()) {
            return Err(Error::Parse(format!("LLS entries must be positive, got {bad}")));
        }
        Ok(LLSSeq(elements))
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| int(x)).collect())
    }

    pub fn elements(&self) -> &[ExactInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer tangent this sequence encodes.
    pub fn value(&self) -> ExactRat {
        cf_eval(&self.0).to_rational().expect("positive entries give a finite value")
    }

    pub fn reversed(&self) -> LLSSeq {
        LLSSeq(self.0.iter().rev().cloned().collect())
    }

    pub fn to_cf(&self) -> CFSeq {
        CFSeq(self.0.clone())
    }
}

/// Angle at the origin with edges through `(1, 0)` and `(n, m)` for `q = m/n > 0`.
pub fn iarctan2(q: &ExactRat) -> Result<Angle2D> {
    if !q.is_positive() {
        return Err(Error::NonPositive(q.to_string()));
    }
    Angle2D::from_edges(vec![BigInt::one(), BigInt::zero()], vec![q.denom().clone(), q.numer().clone()])
}

/// The angle `iarctan2` of the value of an LLS sequence.
pub fn angle_from_lls(seq: &LLSSeq) -> Angle2D {
    iarctan2(&seq.value()).expect("LLS values are at least 1")
}

/// Integer sine; 0 for the trivial angle.
pub fn isin2(a: &Angle2D) -> ExactInt {
    if a.is_trivial() {
        return BigInt::zero();
    }
    a.grid_pair().expect("non-trivial").1
}

/// Integer cosine; 1 for the trivial angle and for `isin = 1`.
pub fn icos2(a: &Angle2D) -> ExactInt {
    if a.is_trivial() {
        return BigInt::one();
    }
    let (c, s) = a.grid_pair().expect("non-trivial");
    if s.is_one() {
        BigInt::one()
    } else {
        c
    }
}

/// Integer tangent `isin / icos`; 0 for the trivial angle.
pub fn itan2(a: &Angle2D) -> ExactRat {
    if a.is_trivial() {
        return BigRational::zero();
    }
    BigRational::new(isin2(a), icos2(a))
}

fn inverse2(u: &IntMatrix) -> IntMatrix {
    let d = &u[(0, 0)] * &u[(1, 1)] - &u[(0, 1)] * &u[(1, 0)];
    let mut inv = IntMatrix::zeros(2, 2);
    inv[(0, 0)] = &d * &u[(1, 1)];
    inv[(0, 1)] = -(&d * &u[(0, 1)]);
    inv[(1, 0)] = -(&d * &u[(1, 0)]);
    inv[(1, 1)] = &d * &u[(0, 0)];
    inv
}

/// Sail vertices from the primitive point of the first edge to the
/// primitive point of the second.
pub fn sail(a: &Angle2D) -> Result<Vec<LatticePoint>> {
    let cone = a.cone()?;
    let u = primitive(a.first())?.0;
    let w = primitive(a.second())?.0;
    let f = arctan_form(&cone)?;
    let (c, s) = (f.grid()[(0, 1)].clone(), f.grid()[(1, 1)].clone());
    if s.is_one() {
        return Ok(vec![add(a.vertex(), &u), add(a.vertex(), &w)]);
    }
    let back = inverse2(f.transform());
    let odd = cf_expand(&BigRational::new(s, c), Parity::Odd);
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut canonical = vec![(BigInt::one(), BigInt::zero())];
    for (i, a_i) in odd.elements().iter().enumerate() {
        let p2 = a_i * &p1 + &p0;
        let q2 = a_i * &q1 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        if i % 2 == 0 {
            canonical.push((q1.clone(), p1.clone()));
        }
    }
    Ok(canonical
        .into_iter()
        .map(|(x, y)| add(a.vertex(), &back.mul_vec(&[x, y]).expect("2x2")))
        .collect())
}

/// Lattice length sine sequence read off the sail.
pub fn lls(a: &Angle2D) -> Result<LLSSeq> {
    let pts = sail(a)?;
    let mut out = Vec::with_capacity(2 * pts.len() - 3);
    for j in 0..pts.len() - 1 {
        if j > 0 {
            let back = primitive(&sub(&pts[j - 1], &pts[j]))?.0;
            let fwd = primitive(&sub(&pts[j + 1], &pts[j]))?.0;
            out.push(det2(&back, &fwd).abs());
        }
        out.push(integer_length(&pts[j], &pts[j + 1])?);
    }
    LLSSeq::new(out)
}

/// Same vertex, edges swapped.
pub fn transpose2(a: &Angle2D) -> Result<Angle2D> {
    if a.is_trivial() {
        return Err(Error::TrivialAngle);
    }
    Angle2D::new(a.vertex.clone(), a.second.clone(), a.first.clone())
}

/// The angle between the second edge and the continuation of the first
/// edge beyond the vertex.
pub fn adjacent2(a: &Angle2D) -> Result<Angle2D> {
    if a.is_trivial() {
        return Err(Error::TrivialAngle);
    }
    Angle2D::new(a.vertex.clone(), a.second.clone(), neg(&a.first))
}

/// Integer congruence of planar angles.
pub fn congruent2(a: &Angle2D, b: &Angle2D) -> bool {
    match (a.is_trivial(), b.is_trivial()) {
        (true, true) => true,
        (false, false) => a.grid_pair().ok() == b.grid_pair().ok(),
        _ => false,
    }
}

/// Congruent to both its transpose and its adjacent angle.
pub fn is_right_angle2(a: &Angle2D) -> bool {
    match (transpose2(a), adjacent2(a)) {
        (Ok(t), Ok(adj)) => congruent2(a, &t) && congruent2(a, &adj),
        _ => false,
    }
}

/// `(a_0, .., a_2n, s, b_0, .., b_2m)` with its value and, when the value
/// is a finite tangent `>= 1`, an angle realising it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AngleSum {
    pub sequence: CFSeq,
    pub value: ProjRat,
    pub angle: Option<Angle2D>,
}

pub fn angle_sum(a: &Angle2D, b: &Angle2D, s: &ExactInt) -> Result<AngleSum> {
    let mut seq = lls(a)?.0;
    seq.push(s.clone());
    seq.extend(lls(b)?.0);
    let value = cf_eval(&seq);
    let angle = value
        .to_rational()
        .filter(|v| *v >= BigRational::one())
        .map(|v| iarctan2(&v).expect("positive"));
    Ok(AngleSum {
        sequence: CFSeq(seq),
        value,
        angle,
    })
}

/// `]q_1 : s_1 : q_2 : ... : q_k[`: odd expansions of the tangents
/// interleaved with the separators.
pub fn bracket_eval(tangents: &[ExactRat], separators: &[ExactInt]) -> Result<ProjRat> {
    if tangents.is_empty() || separators.len() + 1 != tangents.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} tangents need {} separators, got {}",
            tangents.len(),
            tangents.len().saturating_sub(1),
            separators.len()
        )));
    }
    let mut seq = Vec::new();
    for (i, t) in tangents.iter().enumerate() {
        if *t < BigRational::one() {
            return Err(Error::NonPositiveTangent(t.to_string()));
        }
        if i > 0 {
            seq.push(separators[i - 1].clone());
        }
        seq.extend(cf_expand(t, Parity::Odd).0);
    }
    Ok(cf_eval(&seq))
}

/// Outcome of the triangle criterion for one ordering of three tangents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleVerdict {
    pub exists: bool,
    /// Positions (0-based) of the input angles in the tested order.
    pub ordering: [usize; 3],
    /// `]t_1 : -1 : t_2 : -1 : t_3[`
    pub bracket3: ProjRat,
    /// `]t_1 : -1 : t_2[`
    pub bracket2: ProjRat,
}

const ORDERINGS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn criterion(t: &[ExactRat; 3], ord: [usize; 3]) -> Result<TriangleVerdict> {
    let m1 = -BigInt::one();
    let three = [t[ord[0]].clone(), t[ord[1]].clone(), t[ord[2]].clone()];
    let bracket3 = bracket_eval(&three, &[m1.clone(), m1.clone()])?;
    let bracket2 = bracket_eval(&three[..2], &[m1])?;
    let inside = bracket2
        .to_rational()
        .is_some_and(|v| !v.is_negative() && v <= three[0]);
    Ok(TriangleVerdict {
        exists: bracket3.numer().is_zero() && !inside,
        ordering: ord,
        bracket3,
        bracket2,
    })
}

/// Triangle criterion on tangents: the first ordering that passes, or the
/// identity ordering's values when none does.
pub fn triangle_exists_tangents(t: &[ExactRat; 3]) -> Result<TriangleVerdict> {
    let mut first = None;
    for ord in ORDERINGS {
        let v = criterion(t, ord)?;
        if v.exists {
            return Ok(v);
        }
        first.get_or_insert(v);
    }
    Ok(first.expect("six orderings"))
}

pub fn triangle_exists(a: &Angle2D, b: &Angle2D, c: &Angle2D) -> Result<TriangleVerdict> {
    if a.is_trivial() || b.is_trivial() || c.is_trivial() {
        return Err(Error::TrivialAngle);
    }
    triangle_exists_tangents(&[itan2(a), itan2(b), itan2(c)])
}

/// Convergents of the regular expansion (last element `> 1`), without
/// `a_0` when `a_1 = 1` or `q = a_0 + 1/2`.
pub fn sba_classical(q: &ExactRat) -> Vec<ExactRat> {
    let cf = regular_cf(q);
    let a = cf.elements();
    let mut out = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let v = cf_eval(&a[..=i]).to_rational().expect("regular prefixes are finite");
        out.push(v);
    }
    let degenerate = a.len() >= 2 && (a[1].is_one() || (a.len() == 2 && a[1] == int(2)));
    if degenerate {
        out.remove(0);
    }
    out
}

/// Brute-force strong best approximations: for every denominator up to
/// `den(q)`, the unique nearest numerator, kept when its error beats all
/// smaller denominators.
pub fn sba_oracle(q: &ExactRat) -> Vec<ExactRat> {
    let half = BigRational::new(BigInt::one(), int(2));
    let mut best: Option<ExactRat> = None;
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while d <= *q.denom() {
        let x = q * BigRational::from_integer(d.clone());
        let p = x.floor();
        let frac = &x - &p;
        let (p, err) = if frac > half {
            (p + BigInt::one(), BigRational::one() - &frac)
        } else {
            (p, frac.clone())
        };
        let tie = frac == half;
        if best.as_ref().is_none_or(|b| err < *b) {
            if !tie {
                out.push(BigRational::new(p.to_integer(), d.clone()));
            }
            best = Some(err);
        }
        d += 1u32;
    }
    out
}

fn reduce_class(c: ExactInt, s: ExactInt) -> Angle2D {
    Angle2D::from_edges(vec![BigInt::one(), BigInt::zero()], vec![c, s]).expect("independent")
}

/// `E_1` on the normal form `(1, c; 0, s)`: the angle with edges `(1,0)`
/// and `(s, c)`, and the partial quotient `floor(s/c)`.
fn euclid2(a: &Angle2D) -> Result<(Angle2D, ExactInt)> {
    let (c, s) = a.grid_pair()?;
    if c.is_zero() {
        return Err(Error::ZeroCosine(1));
    }
    let chi = s.div_floor(&c);
    Ok((reduce_class(s, c), chi))
}

/// One step down the chain of strong best approximations.
pub fn t_op(a: &Angle2D) -> Result<Angle2D> {
    if a.is_trivial() {
        return Err(Error::TrivialAngle);
    }
    if isin2(a).is_one() {
        return Err(Error::NoReduction);
    }
    let t = transpose2(a)?;
    let adj = adjacent2(a)?;
    let one = BigInt::one();
    let first = {
        let (e, chi) = euclid2(&t)?;
        (chi > one).then(|| adjacent2(&e)).transpose()?
    };
    let second = {
        let (e, chi) = euclid2(&adj)?;
        (chi > one).then(|| transpose2(&e)).transpose()?
    };
    match (first, second) {
        (Some(x), None) | (None, Some(x)) => Ok(x),
        (Some(x), Some(y)) if congruent2(&x, &y) => Ok(x),
        (Some(_), Some(_)) => Err(Error::BranchAmbiguity("both branches apply and differ".into())),
        (None, None) => Err(Error::BranchAmbiguity("neither branch applies".into())),
    }
}

/// Tangents along the `T` chain from `q`: at most `m - 1` steps where `m`
/// is the length of the regular expansion of `q`, stopping at tangent 1.
/// Values below 1 are shifted by an integer so that `a_0 = 1` and shifted
/// back afterwards.
pub fn sba_by_t_chain(q: &ExactRat) -> Result<Vec<ExactRat>> {
    if !q.is_positive() {
        return Err(Error::NonPositive(q.to_string()));
    }
    let steps = regular_cf(q).len() - 1;
    let shift = if *q < BigRational::one() {
        BigInt::one() - q.floor().to_integer()
    } else {
        BigInt::zero()
    };
    let shift = BigRational::from_integer(shift);
    let mut a = iarctan2(&(q + &shift))?;
    let mut out = vec![itan2(&a) - &shift];
    for _ in 0..steps {
        a = match t_op(&a) {
            Ok(next) => next,
            Err(Error::NoReduction) => break,
            Err(e) => return Err(e),
        };
        out.push(itan2(&a) - &shift);
    }
    Ok(out)
}
