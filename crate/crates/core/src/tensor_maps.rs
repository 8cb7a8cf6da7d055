//! The linear maps T_p attached to pairings, and exact ranks of their spans.
//!
//! A pairing p on (k,l) induces T_p : (C^n)^⊗k → (C^n)^⊗l whose entry at
//! (j, i) is 1 exactly when every string of p joins equal index values. The
//! dimension of a Hom-space is the rank over the rationals of the span of the
//! vectorized T_p with p running over a diagram class; ranks are computed by
//! fraction-free (Bareiss) elimination over arbitrary-precision integers, so
//! no floating point and no tolerances enter anywhere.
//!
//! Index conventions, fixed once: lower circle points 1..=l carry j_1..j_l
//! left to right; upper circle points l+1..=l+k carry i_k..i_1, i.e. the
//! upper row read right to left. Vectorization is row-major over the lower
//! multi-index, then the upper one.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde::Serialize;

use crate::diagrams::{self, ClassFilter, Pairing};
use crate::error::{Error, Result};

/// Default refusal threshold for n^(k+l) matrix cells.
pub const DEFAULT_MAX_CELLS: u128 = 10_000_000;

/// A dense matrix of exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::SignatureMismatch { left: self.cols, right: rhs.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.at(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(m, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kronecker(&self, rhs: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.at(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.at(r2, c2);
                        if !b.is_zero() {
                            *out.at_mut(r1 * rhs.rows + r2, c1 * rhs.cols + c2) = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scaled(&self, factor: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= factor;
        }
        out
    }

    /// Sparse triplet form, for debugging exports: (rows, cols, [[r,c,v],...]).
    pub fn to_sparse_triplets(&self) -> SparseTriplets {
        let entries = (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.at(r, c).is_zero())
            .map(|(r, c)| (r, c, self.at(r, c).to_string()))
            .collect();
        SparseTriplets { rows: self.rows, cols: self.cols, entries }
    }
}

/// JSON-friendly sparse form of an [`IntMatrix`]; values are decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct SparseTriplets {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

fn checked_pow(n: usize, e: usize, cap: u128) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(n as u128);
        if acc > cap {
            return Err(Error::ResourceLimit { what: "matrix cells", value: acc, cap });
        }
    }
    Ok(acc as usize)
}

/// Builds T_p as an n^l × n^k matrix of zeros and ones.
pub fn build_tp(p: &Pairing, n: usize) -> Result<IntMatrix> {
    build_tp_capped(p, n, DEFAULT_MAX_CELLS)
}

pub fn build_tp_capped(p: &Pairing, n: usize, cap: u128) -> Result<IntMatrix> {
    let (k, l) = (p.upper(), p.lower());
    checked_pow(n, k + l, cap)?;
    let rows = n.pow(l as u32);
    let cols = n.pow(k as u32);
    let mut m = IntMatrix::zeros(rows, cols);
    for_each_consistent_index(p, n, |row, col| *m.at_mut(row, col) = BigInt::one());
    Ok(m)
}

/// Calls `emit(row, col)` once for every index assignment in which each
/// string of `p` joins equal values; these are exactly the unit entries of T_p.
fn for_each_consistent_index(p: &Pairing, n: usize, mut emit: impl FnMut(usize, usize)) {
    let (k, l) = (p.upper(), p.lower());
    let pairs = p.pairs();
    let s = pairs.len();
    // digit weight of each circle point in the (row, col) index pair
    let lower_weight = |x: usize| n.pow((l - 1 - x) as u32); // 0-based lower point
    let upper_weight = |t: usize| n.pow(t as u32); // 0-based upper offset
    let mut values = vec![0usize; s];
    loop {
        let mut row = 0usize;
        let mut col = 0usize;
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            for point in [a - 1, b - 1] {
                if point < l {
                    row += values[idx] * lower_weight(point);
                } else {
                    col += values[idx] * upper_weight(point - l);
                }
            }
        }
        emit(row, col);
        // odometer over string values
        let mut i = 0;
        while i < s {
            values[i] += 1;
            if values[i] < n {
                break;
            }
            values[i] = 0;
            i += 1;
        }
        if i == s {
            break;
        }
    }
}

/// T_p flattened row-major into a vector of length n^(k+l).
fn vectorized_tp(p: &Pairing, n: usize) -> Vec<BigInt> {
    let (k, l) = (p.upper(), p.lower());
    let cols = n.pow(k as u32);
    let mut v = vec![BigInt::zero(); n.pow((k + l) as u32)];
    for_each_consistent_index(p, n, |row, col| v[row * cols + col] = BigInt::one());
    v
}

/// Fraction-free Gaussian elimination; returns the rank and the original
/// indices of the pivot rows, sorted.
pub fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, Vec<usize>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut perm: Vec<usize> = (0..nrows).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        perm.swap(rank, p);
        pivots.push(perm[rank]);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            if m[r][col].is_zero() && pivot.is_one() && prev.is_one() {
                // row already reduced in this column; scaling by 1 is a no-op
                continue;
            }
            for c in col + 1..ncols {
                let t = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = t / &prev; // exact by the Bareiss identity
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    pivots.sort_unstable();
    (rank, pivots)
}

/// The span of the maps T_p over one diagram class, described by its rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomSpace {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub class: ClassFilter,
    /// Exact rank of the span over the rationals.
    pub rank: usize,
    /// Number of diagrams in the class.
    pub set_size: usize,
    /// Indices (into the canonical enumeration) of a spanning subset.
    pub basis_indices: Vec<usize>,
}

/// Exact dimension of the span of {T_p : p in the class} inside
/// Hom((C^n)^⊗k, (C^n)^⊗l). Odd totals give rank 0.
pub fn hom_dim(n: usize, k: usize, l: usize, class: ClassFilter) -> Result<HomSpace> {
    hom_dim_capped(n, k, l, class, DEFAULT_MAX_CELLS)
}

pub fn hom_dim_capped(
    n: usize,
    k: usize,
    l: usize,
    class: ClassFilter,
    cap: u128,
) -> Result<HomSpace> {
    if n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    checked_pow(n, k + l, cap)?;
    let set = diagrams::enumerate(k, l, class);
    let rows: Vec<Vec<BigInt>> = set.iter().map(|p| vectorized_tp(p, n)).collect();
    let set_size = rows.len();
    let (rank, basis_indices) = rank_bareiss(rows);
    Ok(HomSpace { n, k, l, class, rank, set_size, basis_indices })
}

/// Verifies on concrete matrices that p ↦ T_p intertwines the diagram
/// operations with composition, tensor product and transposition:
/// T_q·T_p = n^loops·T_{q∘p}, T_{p⊗q} = T_p ⊗ T_q, T_{p*} = T_p^T.
pub fn functor_check(p: &Pairing, q: &Pairing, n: usize) -> Result<bool> {
    let (composed, loops) = diagrams::compose(q, p)?;
    let tp = build_tp(p, n)?;
    let tq = build_tp(q, n)?;
    let lhs = tq.mul(&tp)?;
    let factor = BigInt::from(n).pow(loops as u32);
    let rhs = build_tp(&composed, n)?.scaled(&factor);
    if lhs != rhs {
        return Ok(false);
    }

    let t_tensor = build_tp(&p.tensor(q), n)?;
    if t_tensor != tp.kronecker(&tq) {
        return Ok(false);
    }

    if build_tp(&p.involute(), n)? != tp.transpose() {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::PairingClass;

    #[test]
    fn tp_identity_is_identity_matrix() {
        for n in [2usize, 3] {
            let t = build_tp(&Pairing::identity(2), n).unwrap();
            assert_eq!(t, IntMatrix::identity(n * n));
        }
    }

    #[test]
    fn tp_capcup() {
        // cap over cup on (2,2): e_a⊗e_b ↦ δ_ab Σ_c e_c⊗e_c
        let p = Pairing::new(2, 2, &[(1, 2), (3, 4)]).unwrap();
        let n = 3;
        let t = build_tp(&p, n).unwrap();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let expect = u8::from(a == b && c == d);
                        assert_eq!(t.at(c * n + d, a * n + b), &BigInt::from(expect));
                    }
                }
            }
        }
    }

    #[test]
    fn tp_reversal_swaps_factors() {
        // T(e_i⊗e_j⊗e_k) = e_k⊗e_j⊗e_i as an 8×8 permutation matrix at n=2
        let n = 2usize;
        let t = build_tp(&Pairing::reversal(3), n).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let col = i * n * n + j * n + k;
                    let row = k * n * n + j * n + i;
                    for r in 0..8 {
                        assert_eq!(t.at(r, col), &BigInt::from(u8::from(r == row)));
                    }
                }
            }
        }
        let square = t.mul(&t).unwrap();
        assert_eq!(square, IntMatrix::identity(8));
    }

    #[test]
    fn rank_examples() {
        let h = hom_dim(3, 1, 1, ClassFilter::P).unwrap();
        assert_eq!((h.rank, h.set_size), (1, 1));
        let h = hom_dim(3, 2, 2, ClassFilter::E).unwrap();
        assert_eq!((h.rank, h.set_size), (2, 2));
        assert_eq!(h.basis_indices, vec![0, 1]);
        // odd totals are empty spans
        let h = hom_dim(3, 1, 2, ClassFilter::P).unwrap();
        assert_eq!((h.rank, h.set_size), (0, 0));
    }

    #[test]
    fn rank_e_equals_rank_n_at_n2() {
        let e = hom_dim(2, 3, 3, ClassFilter::E).unwrap();
        let nn = hom_dim(2, 3, 3, ClassFilter::N).unwrap();
        assert_eq!(e.rank, nn.rank);
        assert_eq!(nn.rank, 5);
    }

    #[test]
    fn rank_e_exceeds_rank_n_at_n3() {
        let e = hom_dim(3, 3, 3, ClassFilter::E).unwrap();
        let nn = hom_dim(3, 3, 3, ClassFilter::N).unwrap();
        assert!(e.rank > nn.rank, "E rank {} vs N rank {}", e.rank, nn.rank);
        assert_eq!((e.rank, nn.rank), (6, 5));
    }

    #[test]
    fn rank_monotone_in_class() {
        for n in [2usize, 3] {
            for (k, l) in [(0, 4), (2, 2), (1, 3), (3, 3), (2, 4)] {
                let p = hom_dim(n, k, l, ClassFilter::P).unwrap().rank;
                let e = hom_dim(n, k, l, ClassFilter::E).unwrap().rank;
                let nr = hom_dim(n, k, l, ClassFilter::N).unwrap().rank;
                assert!(nr <= e && e <= p, "n={n} ({k},{l}): {nr} {e} {p}");
            }
        }
    }

    #[test]
    fn tp_independent_for_large_n() {
        // for n ≥ k+l the maps T_p over P(k,l) are linearly independent
        for (n, k, l) in [(4, 2, 2), (4, 0, 4), (5, 1, 3), (6, 3, 3)] {
            let h = hom_dim(n, k, l, ClassFilter::P).unwrap();
            assert_eq!(h.rank, h.set_size, "n={n} ({k},{l})");
        }
    }

    #[test]
    fn resource_cap_refuses_large_spaces() {
        let err = hom_dim_capped(10, 4, 4, ClassFilter::P, 10_000).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    #[test]
    fn functor_circle() {
        // cup under cap closes a loop worth a factor of n
        let t_cup = build_tp(&Pairing::cup(), 3).unwrap();
        let t_cap = build_tp(&Pairing::cap(), 3).unwrap();
        let prod = t_cup.mul(&t_cap).unwrap();
        assert_eq!(prod.rows(), 1);
        assert_eq!(prod.at(0, 0), &BigInt::from(3));
        assert!(functor_check(&Pairing::cap(), &Pairing::cup(), 3).unwrap());
    }

    #[test]
    fn functor_exhaustive_small() {
        for n in [2usize, 3] {
            let mut pool = Vec::new();
            for total in [2usize, 4] {
                for k in 0..=total {
                    pool.extend(diagrams::enumerate(k, total - k, ClassFilter::P).iter().cloned());
                }
            }
            for p in &pool {
                for q in &pool {
                    if q.upper() != p.lower() || p.points() + q.points() > 6 {
                        continue;
                    }
                    assert!(functor_check(p, q, n).unwrap(), "n={n} p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn functor_reversal_squares_to_identity() {
        assert!(functor_check(&Pairing::reversal(3), &Pairing::reversal(3), 2).unwrap());
    }

    #[test]
    fn bareiss_matches_known_ranks() {
        let m = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
        ];
        let (rank, pivots) = rank_bareiss(m);
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 2]);
    }

    #[test]
    fn sparse_triplets_roundtrip_shape() {
        let p = Pairing::crossing();
        let t = build_tp(&p, 2).unwrap();
        let s = t.to_sparse_triplets();
        assert_eq!((s.rows, s.cols), (4, 4));
        assert_eq!(s.entries.len(), 4); // one unit per string assignment
        assert!(s.entries.iter().all(|(_, _, v)| v == "1"));
    }

    #[test]
    fn classify_consistency_with_spans() {
        // sanity: the E(2,2) set is {identity, cap over cup}, both noncrossing
        let e = diagrams::enumerate(2, 2, ClassFilter::E);
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|p| p.classify() == PairingClass::N));
    }
}
