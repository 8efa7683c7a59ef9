//! Exact ranks of simplicial boundary maps by sparse column reduction.
//!
//! Columns are reduced left to right against earlier columns sharing the
//! same lowest nonzero row. Dimensions are processed from the top down so
//! that rows already used as pivots can be skipped one dimension lower
//! (their columns are known to reduce to zero).

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

/// Arithmetic needed by the reduction. Operations return `None` on
/// overflow so that a cheap representation can fall back to an exact one.
pub trait Field: Sync {
    type E: Clone + Send;
    fn unit(&self, negative: bool) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn div(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
    /// `a - f * b`.
    fn mul_sub(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Option<Self::E>;
}

/// `Z/p` for a prime `p < 2^32`.
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        Self { p }
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type E = u64;

    fn unit(&self, negative: bool) -> u64 {
        if negative {
            self.p - 1
        } else {
            1
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn div(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(a * self.pow(*b, self.p - 2) % self.p)
    }

    fn mul_sub(&self, a: &u64, f: &u64, b: &u64) -> Option<u64> {
        Some((a + self.p - f * b % self.p) % self.p)
    }
}

/// Rationals with `i64` parts; gives up on overflow.
pub struct SmallRationals;

impl Field for SmallRationals {
    type E = Ratio<i64>;

    fn unit(&self, negative: bool) -> Ratio<i64> {
        Ratio::from_integer(if negative { -1 } else { 1 })
    }

    fn is_zero(&self, a: &Ratio<i64>) -> bool {
        a.is_zero()
    }

    fn div(&self, a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
        a.checked_div(b)
    }

    fn mul_sub(&self, a: &Ratio<i64>, f: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
        a.checked_sub(&f.checked_mul(b)?)
    }
}

pub struct BigRationals;

impl Field for BigRationals {
    type E = BigRational;

    fn unit(&self, negative: bool) -> BigRational {
        let one = BigRational::one();
        if negative {
            -one
        } else {
            one
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a / b)
    }

    fn mul_sub(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a - f * b)
    }
}

type Column<E> = Vec<(u32, E)>;

/// `a - f * b` for sorted sparse columns.
fn axpy<F: Field>(field: &F, a: &Column<F::E>, f: &F::E, b: &Column<F::E>) -> Option<Column<F::E>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let rb = b.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        if ra < rb {
            out.push(a[i].clone());
            i += 1;
        } else if rb < ra {
            let zero_minus = field.mul_sub(&field_zero(field, &b[j].1)?, f, &b[j].1)?;
            out.push((rb, zero_minus));
            j += 1;
        } else {
            let v = field.mul_sub(&a[i].1, f, &b[j].1)?;
            if !field.is_zero(&v) {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// A zero of the field's element type, obtained without a dedicated method.
fn field_zero<F: Field>(field: &F, like: &F::E) -> Option<F::E> {
    field.mul_sub(like, &field.unit(false), like)
}

/// Ranks of the augmented boundary maps of a simplicial complex.
///
/// `faces[k]` holds the faces with `k` vertices as sorted bitmasks
/// (`faces[0] == [0]`, the empty face). The result has the same length;
/// entry `k >= 1` is the rank of the map from `k`-vertex faces to
/// `(k - 1)`-vertex faces, entry 0 is zero.
pub fn boundary_ranks<F: Field>(field: &F, faces: &[Vec<u64>]) -> Option<Vec<usize>> {
    let mut ranks = vec![0usize; faces.len()];
    let mut skip: Vec<bool> = Vec::new();
    for k in (1..faces.len()).rev() {
        let rows = &faces[k - 1];
        let cols = &faces[k];
        let mut pivot_of_row: Vec<u32> = vec![u32::MAX; rows.len()];
        let mut reduced: Vec<Column<F::E>> = Vec::new();
        let mut next_skip = vec![false; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            if skip.get(c).copied().unwrap_or(false) {
                continue;
            }
            let mut col: Column<F::E> = Vec::with_capacity(k);
            let mut bits = face;
            let mut pos = 0;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                let row = rows
                    .binary_search(&(face ^ bit))
                    .expect("complex is closed under subsets");
                col.push((row as u32, field.unit(pos % 2 == 1)));
                bits &= bits - 1;
                pos += 1;
            }
            col.sort_unstable_by_key(|e| e.0);
            while let Some((low, val)) = col.last() {
                let r = pivot_of_row[*low as usize];
                if r == u32::MAX {
                    break;
                }
                let other = &reduced[r as usize];
                let f = field.div(val, &other.last().expect("nonzero column").1)?;
                col = axpy(field, &col, &f, other)?;
            }
            if let Some((low, _)) = col.last() {
                pivot_of_row[*low as usize] = reduced.len() as u32;
                next_skip[*low as usize] = true;
                reduced.push(col);
            }
        }
        ranks[k] = reduced.len();
        skip = next_skip;
    }
    Some(ranks)
}

/// Reduced Betti numbers `dim H̃_{k-1}` for `k = 0..faces.len()`, i.e.
/// entry `k` is the homology in dimension `k - 1`.
pub fn reduced_homology<F: Field>(field: &F, faces: &[Vec<u64>]) -> Option<Vec<usize>> {
    let ranks = boundary_ranks(field, faces)?;
    Some(
        (0..faces.len())
            .map(|k| faces[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect(),
    )
}

/// Characteristic-0 homology: `i64` rationals first, big rationals if
/// anything overflows.
pub fn reduced_homology_rational(faces: &[Vec<u64>]) -> Vec<usize> {
    reduced_homology(&SmallRationals, faces)
        .unwrap_or_else(|| reduced_homology(&BigRationals, faces).expect("exact arithmetic"))
}

/// Rank of a dense integer matrix over `Q` by fraction-free elimination;
/// used to cross-check the sparse reduction in tests.
pub fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..width {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        rank += 1;
    }
    rank
}
