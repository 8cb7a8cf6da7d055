//! The diagonal group L_n inside Z^n ⋊ Z_2, weights and weight multisets.
//!
//! L_n is generated by g_i = e_i·τ with τ acting by negation; its elements
//! split into the sector L° (coordinate sum 0, trivial Z_2 part) and L^τ
//! (coordinate sum 1, flipping Z_2 part). The sector-forgetting injection
//! ψ : L_n → Z^n connects everything to ordinary U_n weights: dominance,
//! the partial orders, and the Gelfand-Tsetlin weight multisets below.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of Gelfand-Tsetlin patterns enumerated at once.
pub const DEFAULT_MAX_PATTERNS: u128 = 1_000_000;

/// The Z_2 component of a semidirect product element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Circ,
    Tau,
}

impl Sector {
    pub fn compose(self, other: Sector) -> Sector {
        if self == other {
            Sector::Circ
        } else {
            Sector::Tau
        }
    }

    /// Coordinate sum forced on L_n elements of this sector.
    pub fn required_sum(self) -> i64 {
        match self {
            Sector::Circ => 0,
            Sector::Tau => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sector::Circ => "circ",
            Sector::Tau => "tau",
        }
    }
}

/// An integer weight vector in X = Z^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Weight(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Non-increasing coordinates.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// True iff self ≥ other in the dominance order: the difference has all
    /// proper partial sums ≥ 0 and total 0.
    pub fn dominates(&self, other: &Weight) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let mut partial = 0i64;
        for (a, b) in self.0.iter().zip(&other.0) {
            partial += a - b;
            if partial < 0 {
                return Ok(false);
            }
        }
        Ok(partial == 0)
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element λ·x of the ambient semidirect product Z^n ⋊ Z_2.
///
/// [`GroupElement::new`] enforces membership in L_n (sector circ needs
/// coordinate sum 0, sector tau needs sum 1); [`GroupElement::ambient`]
/// builds unvalidated elements of the full semidirect product, which the
/// group law handles just as well.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub lambda: Weight,
    pub sector: Sector,
}

impl GroupElement {
    pub fn new(lambda: Weight, sector: Sector) -> Result<Self> {
        let elem = GroupElement { lambda, sector };
        elem.check_membership()?;
        Ok(elem)
    }

    pub fn ambient(lambda: Weight, sector: Sector) -> Self {
        GroupElement { lambda, sector }
    }

    /// The identity 0·1 of L_n.
    pub fn identity(n: usize) -> Self {
        GroupElement { lambda: Weight::zero(n), sector: Sector::Circ }
    }

    /// The generator g_i = e_i·τ (0-based index).
    pub fn generator(n: usize, i: usize) -> Self {
        GroupElement { lambda: Weight::unit(n, i), sector: Sector::Tau }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_in_l(&self) -> bool {
        self.lambda.sum() == self.sector.required_sum()
    }

    pub fn check_membership(&self) -> Result<()> {
        if !self.is_in_l() {
            return Err(Error::SectorMismatch {
                sector: self.sector.name(),
                expected: self.sector.required_sum(),
                got: self.lambda.sum(),
            });
        }
        Ok(())
    }

    /// Semidirect law (λ·x)(μ·y) = (λ + x·μ)·(xy) with τ·μ = −μ.
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch(self.n(), other.n()));
        }
        let sign = match self.sector {
            Sector::Circ => 1,
            Sector::Tau => -1,
        };
        let lambda = Weight(
            self.lambda
                .0
                .iter()
                .zip(&other.lambda.0)
                .map(|(a, b)| a + sign * b)
                .collect(),
        );
        Ok(GroupElement { lambda, sector: self.sector.compose(other.sector) })
    }

    /// Inverse: (λ·x)^{-1} = (−x·λ)·x.
    pub fn inverse(&self) -> GroupElement {
        let sign = match self.sector {
            Sector::Circ => -1,
            Sector::Tau => 1,
        };
        let lambda = Weight(self.lambda.0.iter().map(|a| sign * a).collect());
        GroupElement { lambda, sector: self.sector }
    }

    /// ψ forgets the sector; injective on L_n since the sector is readable
    /// off the coordinate sum.
    pub fn psi(&self) -> Weight {
        self.lambda.clone()
    }

    pub fn is_dominant(&self) -> bool {
        self.lambda.is_dominant()
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}·{}", self.lambda, self.sector.name())
    }
}

/// Reads the sector off the coordinate sum, for CLI-style inputs.
pub fn infer_sector(lambda: &Weight) -> Result<Sector> {
    match lambda.sum() {
        0 => Ok(Sector::Circ),
        1 => Ok(Sector::Tau),
        s => Err(Error::NoSector(s)),
    }
}

/// Evaluates a word in the generators g_i (0-based indices) by folding the
/// group law. The closed form — occurrences at odd minus occurrences at even
/// positions, sector the word length mod 2 — is kept in the tests as the
/// independent check.
pub fn eval_word(n: usize, word: &[usize]) -> GroupElement {
    let mut acc = GroupElement::identity(n);
    for &i in word {
        acc = acc.multiply(&GroupElement::generator(n, i)).expect("same n");
    }
    acc
}

/// The partial order of L: a ≥ b iff a·b^{-1} is a positive element, which
/// for matching sectors means ψ(a) dominates ψ(b) and for mixed sectors
/// never holds (a·b^{-1} then lies in L^τ, disjoint from L_+).
pub fn order_l(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    a.check_membership()?;
    b.check_membership()?;
    if a.sector != b.sector {
        return Ok(false);
    }
    a.psi().dominates(&b.psi())
}

/// A finite multiset of group elements or weights.
pub type Multiset<K> = BTreeMap<K, u64>;

/// The weight multiset of the U_n irreducible with highest weight `lambda`,
/// by Gelfand-Tsetlin pattern enumeration: each pattern contributes the
/// weight given by its successive row-sum differences. The total multiplicity
/// is the dimension of the representation, which makes the enumeration
/// self-certifying against the Weyl dimension formula.
pub fn weight_multiset_un(lambda: &Weight) -> Result<Multiset<Weight>> {
    weight_multiset_un_capped(lambda, DEFAULT_MAX_PATTERNS)
}

pub fn weight_multiset_un_capped(lambda: &Weight, cap: u128) -> Result<Multiset<Weight>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut out: Multiset<Weight> = BTreeMap::new();
    let mut count: u128 = 0;
    let n = lambda.len();
    // rows[r] has length n-r; rows[0] is lambda itself
    let mut rows: Vec<Vec<i64>> = vec![lambda.0.clone()];
    descend_gt(&mut rows, n, &mut |rows| {
        count += 1;
        if count > cap {
            return Err(Error::ResourceLimit { what: "GT patterns", value: count, cap });
        }
        let mut weight = vec![0i64; n];
        let mut prev_sum = 0i64;
        // rows are stored top-down; weight_j uses the row of length j
        for j in 1..=n {
            let row_sum: i64 = rows[n - j].iter().sum();
            weight[j - 1] = row_sum - prev_sum;
            prev_sum = row_sum;
        }
        *out.entry(Weight(weight)).or_insert(0) += 1;
        Ok(())
    })?;
    Ok(out)
}

/// Enumerates all interlacing continuations of the last row down to length 1.
fn descend_gt(
    rows: &mut Vec<Vec<i64>>,
    n: usize,
    emit: &mut impl FnMut(&[Vec<i64>]) -> Result<()>,
) -> Result<()> {
    let top = rows.last().expect("nonempty").clone();
    if top.len() == 1 {
        return emit(rows);
    }
    let m = top.len() - 1;
    let mut next = vec![0i64; m];
    fn rec(
        top: &[i64],
        next: &mut Vec<i64>,
        pos: usize,
        rows: &mut Vec<Vec<i64>>,
        n: usize,
        emit: &mut impl FnMut(&[Vec<i64>]) -> Result<()>,
    ) -> Result<()> {
        if pos == next.len() {
            rows.push(next.clone());
            let r = descend_gt(rows, n, emit);
            rows.pop();
            return r;
        }
        // interlacing: top[pos] ≥ next[pos] ≥ top[pos+1]
        for v in top[pos + 1]..=top[pos] {
            next[pos] = v;
            rec(top, next, pos + 1, rows, n, emit)?;
        }
        Ok(())
    }
    rec(&top, &mut next, 0, rows, n, emit)
}

/// Pulls the U_n weight multiset of ψ(lw) back to L: all weights of one
/// irreducible lie in the sector of its highest weight.
pub fn weight_multiset_ostar(lw: &GroupElement) -> Result<Multiset<GroupElement>> {
    weight_multiset_ostar_capped(lw, DEFAULT_MAX_PATTERNS)
}

pub fn weight_multiset_ostar_capped(
    lw: &GroupElement,
    cap: u128,
) -> Result<Multiset<GroupElement>> {
    lw.check_membership()?;
    if !lw.is_dominant() {
        return Err(Error::NotDominant(lw.lambda.0.clone()));
    }
    let un = weight_multiset_un_capped(&lw.psi(), cap)?;
    Ok(un
        .into_iter()
        .map(|(w, m)| (GroupElement::ambient(w, lw.sector), m))
        .collect())
}
