//! Seeded random generators for cones, angles and unimodular maps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, ExactInt, ExactRat, IntMatrix};
use crate::hnf::simple_grid;
use crate::lattice::{Cone, LatticePoint};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Product of at most ten elementary shear, swap and negation matrices.
pub fn random_unimodular<R: Rng>(r: &mut R, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    let steps = r.random_range(0..=10);
    for _ in 0..steps {
        if n == 1 {
            m.negate_row(0);
            continue;
        }
        let a = r.random_range(0..n);
        let mut b = r.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        match r.random_range(0..4) {
            0 => m.swap_rows(a, b),
            1 => m.negate_row(a),
            _ => {
                let f = int(r.random_range(-3..=3));
                m.add_row_multiple(a, b, &f);
            }
        }
    }
    m
}

pub fn random_point<R: Rng>(r: &mut R, n: usize, bound: i64) -> LatticePoint {
    (0..n).map(|_| int(r.random_range(-bound..=bound))).collect()
}

/// A cone at the origin with `k` independent edges, entries in `[-bound, bound]`.
pub fn random_cone<R: Rng>(r: &mut R, n: usize, k: usize, bound: i64) -> Cone {
    loop {
        let edges = (0..k).map(|_| random_point(r, n, bound)).collect();
        if let Ok(c) = Cone::at_origin(edges) {
            return c;
        }
    }
}

/// Random grid `diag(1, .., 1, s)` with `1 <= s <= max_sine` and cosines
/// coprime to `s`.
pub fn random_simple_grid<R: Rng>(r: &mut R, k: usize, max_sine: u64) -> IntMatrix {
    let s = r.random_range(1..=max_sine);
    let cosines: Vec<ExactInt> = (0..k - 1)
        .map(|_| loop {
            let c = r.random_range(0..s);
            if c.gcd(&s) == 1 {
                break BigInt::from(c);
            }
        })
        .collect();
    simple_grid(&cosines, &BigInt::from(s))
}

/// A simple `k`-cone in `R^k`: a random simple grid moved by a random
/// unimodular map.
pub fn random_simple_cone<R: Rng>(r: &mut R, k: usize, max_sine: u64) -> Cone {
    let g = random_simple_grid(r, k, max_sine);
    let u = random_unimodular(r, k);
    Cone::from_columns(&u.mul(&g).expect("square")).expect("unimodular image is independent")
}

/// Positive rational with denominator in `1..=max_den` and value below `max_value`.
pub fn random_positive_rational<R: Rng>(r: &mut R, max_den: u64, max_value: u64) -> ExactRat {
    let d = r.random_range(1..=max_den);
    let n = r.random_range(1..=d * max_value);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational `m/n >= 1` in lowest terms with `m <= max_sine`.
pub fn random_tangent<R: Rng>(r: &mut R, max_sine: u64) -> ExactRat {
    let m = r.random_range(1..=max_sine);
    loop {
        let n = r.random_range(1..=m);
        if n.gcd(&m) == 1 {
            return BigRational::new(BigInt::from(m), BigInt::from(n));
        }
    }
}

/// Apply `x -> U x + t` to a point.
pub fn affine_image(u: &IntMatrix, t: &[ExactInt], p: &[ExactInt]) -> LatticePoint {
    u.mul_vec(p)
        .expect("dimensions agree")
        .into_iter()
        .zip(t)
        .map(|(a, b)| a + b)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::det;
    use crate::hnf::{arctan_form, is_simple};
    use num_traits::{One, Signed};

    #[test]
    fn unimodular_has_unit_determinant() {
        let mut r = rng(7);
        for n in 1..=5 {
            for _ in 0..50 {
                assert!(det(&random_unimodular(&mut r, n)).unwrap().abs().is_one());
            }
        }
    }

    #[test]
    fn simple_sampler_gives_simple_cones() {
        let mut r = rng(11);
        for k in 2..=4 {
            for _ in 0..50 {
                let c = random_simple_cone(&mut r, k, 1000);
                assert!(is_simple(&c).unwrap());
                assert!(arctan_form(&c).unwrap().has_simple_shape());
            }
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let a: Vec<ExactRat> = (0..5).map(|_| random_tangent(&mut rng(3), 100)).collect();
        let mut r1 = rng(3);
        let mut r2 = rng(3);
        for _ in 0..5 {
            assert_eq!(random_tangent(&mut r1, 100), random_tangent(&mut r2, 100));
        }
        assert!(a.iter().all(|q| *q >= BigRational::one()));
    }
}
