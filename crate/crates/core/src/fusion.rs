//! Tensor product decompositions: Littlewood-Richardson for U_n dominant
//! weights with arbitrary (possibly negative) entries, and the twisted
//! product for the half-liberated orthogonal quantum group.
//!
//! The twist: for dominant λ, μ in L the product decomposes through
//! ψ(λ⊗μ) = ψ(λ) ⊗ ψ(μ)^λ, where the right factor gets conjugated exactly
//! when λ lies in the τ sector; conjugation itself satisfies
//! ψ(λ̄) = conj(ψ(λ))^λ, so τ-sector objects are selfadjoint. Summand
//! sectors multiply in Z_2.
//!
//! Negative entries are handled by a uniform shift λ + c·(1,…,1) before the
//! tableau rule and an unshift after; Littlewood-Richardson coefficients are
//! invariant under such determinant twists.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weight_lattice::{GroupElement, Multiset, Sector, Weight};

/// Default cap on distinct summands carried through iterated products.
pub const DEFAULT_MAX_SUMMANDS: usize = 1_000_000;

/// A decomposition into irreducibles: dominant key → multiplicity.
pub type Decomposition<K> = Multiset<K>;

/// Which representation ring an iterated power lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerSide {
    /// Iterated twisted products of the fundamental weight e_1·τ.
    Ostar,
    /// Alternating U_n products v ⊗ v̄ ⊗ v ⊗ …
    UnAlternating,
}

/// Exact Weyl dimension Π_{i<j} (λ_i − λ_j + j − i)/(j − i).
pub fn weyl_dim(lambda: &Weight) -> Result<BigInt> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let n = lambda.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i64;
            num *= BigInt::from(lambda.0[i] - lambda.0[j] + gap);
            den *= BigInt::from(gap);
        }
    }
    Ok(num / den)
}

/// Highest weight of the conjugate U_n irreducible: (−λ_n, …, −λ_1).
pub fn conjugate_un(lambda: &Weight) -> Weight {
    Weight(lambda.0.iter().rev().map(|x| -x).collect())
}

/// Littlewood-Richardson decomposition of the product of two U_n
/// irreducibles, with exact multiplicities.
///
/// Implemented by chains of horizontal strips: the rows of the (shifted)
/// right factor are added as strips labelled 1..n, subject to the lattice
/// condition that the boxes of each label, counted down to any row, never
/// outnumber the boxes of the previous label counted one row higher.
pub fn tensor_un(lambda: &Weight, mu: &Weight) -> Result<Decomposition<Weight>> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch(lambda.len(), mu.len()));
    }
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.0.clone()));
        }
    }
    let n = lambda.len();
    if n == 0 {
        return Ok([(Weight(vec![]), 1)].into_iter().collect());
    }
    let shift_of = |w: &Weight| -> i64 { -w.0.iter().copied().min().unwrap_or(0).min(0) };
    let (a, b) = (shift_of(lambda), shift_of(mu));
    let lam: Vec<i64> = lambda.0.iter().map(|x| x + a).collect();
    let mu_p: Vec<i64> = mu.0.iter().map(|x| x + b).collect();

    let mut out: Decomposition<Weight> = Decomposition::new();
    add_strips(lam, vec![0i64; n], &mu_p, 0, &mut |shape| {
        let unshifted: Vec<i64> = shape.iter().map(|x| x - a - b).collect();
        *out.entry(Weight(unshifted)).or_insert(0) += 1;
    });
    Ok(out)
}

fn add_strips(shape: Vec<i64>, prev_strip: Vec<i64>, mu: &[i64], label: usize, emit: &mut impl FnMut(&[i64])) {
    if label == mu.len() {
        emit(&shape);
        return;
    }
    let mut strip = vec![0i64; shape.len()];
    place_strip(&shape, &mut strip, 0, mu[label], 0, 0, label == 0, &prev_strip, &mut |strip| {
        let grown: Vec<i64> = shape.iter().zip(strip).map(|(a, b)| a + b).collect();
        add_strips(grown, strip.to_vec(), mu, label + 1, emit);
    });
}

/// Chooses how many boxes of the current label go into each row, depth-first.
/// All caps are read off the immutable pre-strip shape: a horizontal strip
/// may not put two boxes in one column, and (except for the first label) the
/// lattice condition keeps prefix counts behind the previous label's counts
/// shifted one row up.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    old: &[i64],
    strip: &mut Vec<i64>,
    row: usize,
    left: i64,
    pref_prev: i64,
    pref_here: i64,
    unconstrained: bool,
    prev_strip: &[i64],
    cont: &mut impl FnMut(&[i64]),
) {
    if row == old.len() {
        if left == 0 {
            cont(strip);
        }
        return;
    }
    let horiz_cap = if row == 0 { left } else { old[row - 1] - old[row] };
    let lattice_cap = if unconstrained { left } else { pref_prev - pref_here };
    let cap = left.min(horiz_cap).min(lattice_cap).max(0);
    let next_pref_prev = pref_prev + prev_strip[row];
    for s in 0..=cap {
        strip[row] = s;
        place_strip(
            old,
            strip,
            row + 1,
            left - s,
            next_pref_prev,
            pref_here + s,
            unconstrained,
            prev_strip,
            cont,
        );
        strip[row] = 0;
    }
}

/// The twisted product of two dominant L-weights.
pub fn tensor_ostar(a: &GroupElement, b: &GroupElement) -> Result<Decomposition<GroupElement>> {
    for e in [a, b] {
        e.check_membership()?;
        if !e.is_dominant() {
            return Err(Error::NotDominant(e.lambda.0.clone()));
        }
    }
    let rhs = if a.sector == Sector::Tau { conjugate_un(&b.psi()) } else { b.psi() };
    let sector = a.sector.compose(b.sector);
    let dec = tensor_un(&a.psi(), &rhs)?;
    let mut out = Decomposition::new();
    for (nu, mult) in dec {
        let elem = GroupElement::new(nu, sector)?;
        out.insert(elem, mult);
    }
    Ok(out)
}

/// Conjugate in L_{++}: τ-sector weights are selfadjoint, circ-sector
/// weights conjugate like their ψ-image.
pub fn conjugate_ostar(a: &GroupElement) -> Result<GroupElement> {
    a.check_membership()?;
    if !a.is_dominant() {
        return Err(Error::NotDominant(a.lambda.0.clone()));
    }
    match a.sector {
        Sector::Tau => Ok(a.clone()),
        Sector::Circ => GroupElement::new(conjugate_un(&a.psi()), Sector::Circ),
    }
}

/// Extends the twisted product biadditively to whole decompositions.
pub fn tensor_ostar_dec(
    lhs: &Decomposition<GroupElement>,
    rhs: &Decomposition<GroupElement>,
) -> Result<Decomposition<GroupElement>> {
    let mut out = Decomposition::new();
    for (a, &ma) in lhs {
        for (b, &mb) in rhs {
            for (nu, m) in tensor_ostar(a, b)? {
                *out.entry(nu).or_insert(0) += ma * mb * m;
            }
        }
    }
    Ok(out)
}

/// Decomposes the k-th tensor power of the fundamental object, either on the
/// half-liberated side or as the alternating U_n power v⊗v̄⊗v⊗…
pub fn decompose_power(n: usize, k: usize, side: PowerSide) -> Result<DecomposedPower> {
    decompose_power_capped(n, k, side, DEFAULT_MAX_SUMMANDS)
}

/// Result of [`decompose_power`]; exactly one side is populated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposedPower {
    Ostar(Decomposition<GroupElement>),
    Un(Decomposition<Weight>),
}

pub fn decompose_power_capped(
    n: usize,
    k: usize,
    side: PowerSide,
    max_summands: usize,
) -> Result<DecomposedPower> {
    if n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    match side {
        PowerSide::Ostar => {
            let fundamental = GroupElement::generator(n, 0);
            let mut dec: Decomposition<GroupElement> =
                [(GroupElement::identity(n), 1)].into_iter().collect();
            for _ in 0..k {
                let step: Decomposition<GroupElement> =
                    [(fundamental.clone(), 1)].into_iter().collect();
                dec = tensor_ostar_dec(&dec, &step)?;
                check_summands(dec.len(), max_summands)?;
            }
            Ok(DecomposedPower::Ostar(dec))
        }
        PowerSide::UnAlternating => {
            let v = Weight::unit(n, 0);
            let vbar = conjugate_un(&v);
            let mut dec: Decomposition<Weight> = [(Weight::zero(n), 1)].into_iter().collect();
            for step in 0..k {
                let factor = if step % 2 == 0 { &v } else { &vbar };
                let mut next = Decomposition::new();
                for (w, &m) in &dec {
                    for (nu, c) in tensor_un(w, factor)? {
                        *next.entry(nu).or_insert(0) += m * c;
                    }
                }
                dec = next;
                check_summands(dec.len(), max_summands)?;
            }
            Ok(DecomposedPower::Un(dec))
        }
    }
}

fn check_summands(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::ResourceLimit {
            what: "summands",
            value: len as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// Highest weight, exact dimension and conjugate of one irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepInfo {
    pub weight: GroupElement,
    pub dim: BigInt,
    pub conjugate: GroupElement,
}

pub fn irrep_info(a: &GroupElement) -> Result<IrrepInfo> {
    Ok(IrrepInfo {
        weight: a.clone(),
        dim: weyl_dim(&a.psi())?,
        conjugate: conjugate_ostar(a)?,
    })
}

/// Σ multiplicity · dim over a U_n decomposition.
pub fn total_dim_un(dec: &Decomposition<Weight>) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (w, &m) in dec {
        total += weyl_dim(w)? * BigInt::from(m);
    }
    Ok(total)
}

/// Σ multiplicity · dim over a twisted decomposition.
pub fn total_dim_ostar(dec: &Decomposition<GroupElement>) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (e, &m) in dec {
        total += weyl_dim(&e.psi())? * BigInt::from(m);
    }
    Ok(total)
}
