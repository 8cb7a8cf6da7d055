//! Brauer pairings and their diagram classes.
//!
//! A pairing joins `k` upper and `l` lower points by strings; the points are
//! numbered counterclockwise starting from bottom left, so the lower row is
//! `1..=l` left to right and the upper row is `l+1..=l+k` right to left. Three
//! nested classes matter here: all pairings `P`, the pairings whose every
//! string has an even number of crossings `E`, and the noncrossing
//! (Temperley-Lieb) pairings `N`. Crossings are counted by chord interleaving
//! on the circle, so they are isotopy invariants by construction.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Selects one of the three diagram classes for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassFilter {
    /// All pairings.
    P,
    /// Pairings whose every string has an even number of crossings.
    E,
    /// Noncrossing pairings.
    N,
}

impl std::str::FromStr for ClassFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(ClassFilter::P),
            "E" | "e" => Ok(ClassFilter::E),
            "N" | "n" => Ok(ClassFilter::N),
            other => Err(Error::Parse(format!("unknown class {other:?}, expected P, E or N"))),
        }
    }
}

/// The finest of the nested classes `N ⊆ E ⊆ P` containing a pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairingClass {
    /// Noncrossing.
    N,
    /// Every string has an even number of crossings, but at least one crossing exists.
    ENotN,
    /// Some string has an odd number of crossings.
    POnly,
}

impl PairingClass {
    pub fn in_e(self) -> bool {
        matches!(self, PairingClass::N | PairingClass::ENotN)
    }

    pub fn in_n(self) -> bool {
        matches!(self, PairingClass::N)
    }

    pub fn matches(self, filter: ClassFilter) -> bool {
        match filter {
            ClassFilter::P => true,
            ClassFilter::E => self.in_e(),
            ClassFilter::N => self.in_n(),
        }
    }
}

/// A perfect matching of `k` upper and `l` lower points.
///
/// Stored as a 0-based involution without fixed points; the public interface
/// speaks 1-based point numbers to match the circular numbering convention.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pairing {
    k: usize,
    l: usize,
    partner: Vec<usize>,
}

impl Pairing {
    /// Builds a pairing from 1-based point pairs.
    pub fn new(k: usize, l: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let points = k + l;
        if points % 2 != 0 {
            return Err(Error::InvalidPairing(format!("k+l = {points} is odd")));
        }
        if pairs.len() * 2 != points {
            return Err(Error::InvalidPairing(format!(
                "{} pairs cannot cover {points} points",
                pairs.len()
            )));
        }
        let mut partner = vec![usize::MAX; points];
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > points || b > points {
                return Err(Error::InvalidPairing(format!("bad pair ({a},{b})")));
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidPairing(format!(
                    "point {} covered twice",
                    if partner[a] != usize::MAX { a + 1 } else { b + 1 }
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Ok(Pairing { k, l, partner })
    }

    fn from_partner(k: usize, l: usize, partner: Vec<usize>) -> Self {
        debug_assert_eq!(partner.len(), k + l);
        debug_assert!(partner.iter().enumerate().all(|(i, &p)| p != i && partner[p] == i));
        Pairing { k, l, partner }
    }

    /// The empty diagram on (0,0).
    pub fn empty() -> Self {
        Pairing { k: 0, l: 0, partner: Vec::new() }
    }

    /// Identity diagram on (s,s): each lower point joined to the upper point above it.
    pub fn identity(s: usize) -> Self {
        let mut partner = vec![0; 2 * s];
        for i in 0..s {
            // lower i sits under upper 2s-1-i
            partner[i] = 2 * s - 1 - i;
            partner[2 * s - 1 - i] = i;
        }
        Pairing { k: s, l: s, partner }
    }

    /// The (s,s) diagram whose map reverses tensor factors; for s = 3 this is
    /// the three-string half-turn implementing e_i⊗e_j⊗e_k ↦ e_k⊗e_j⊗e_i.
    pub fn reversal(s: usize) -> Self {
        let mut partner = vec![0; 2 * s];
        for i in 0..s {
            partner[i] = s + i;
            partner[s + i] = i;
        }
        Pairing { k: s, l: s, partner }
    }

    /// The crossing on (2,2): strings {1,3} and {2,4}.
    pub fn crossing() -> Self {
        Pairing { k: 2, l: 2, partner: vec![2, 3, 0, 1] }
    }

    /// The cup on (2,0): the two upper points joined.
    pub fn cup() -> Self {
        Pairing { k: 2, l: 0, partner: vec![1, 0] }
    }

    /// The cap on (0,2): the two lower points joined.
    pub fn cap() -> Self {
        Pairing { k: 0, l: 2, partner: vec![1, 0] }
    }

    pub fn upper(&self) -> usize {
        self.k
    }

    pub fn lower(&self) -> usize {
        self.l
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn strings(&self) -> usize {
        self.partner.len() / 2
    }

    /// 1-based partner of a 1-based point.
    pub fn partner_of(&self, point: usize) -> Result<usize> {
        self.check_point(point)?;
        Ok(self.partner[point - 1] + 1)
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point == 0 || point > self.points() {
            return Err(Error::InvalidPoint { point, points: self.points() });
        }
        Ok(())
    }

    /// Strings as 1-based pairs (min, max), sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.points())
            .filter(|&i| i < self.partner[i])
            .map(|i| (i + 1, self.partner[i] + 1))
            .collect();
        out.sort_unstable();
        out
    }

    /// Number of strings interleaving with the string through `point` (1-based).
    ///
    /// A string {c,d} crosses {a,b} iff exactly one of c, d lies strictly
    /// between a and b on the circle; the count is invariant under isotopy.
    pub fn crossing_count(&self, point: usize) -> Result<usize> {
        self.check_point(point)?;
        let a = point - 1;
        let b = self.partner[a];
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let mut count = 0;
        for c in 0..self.points() {
            let d = self.partner[c];
            if c >= d || c == lo {
                continue;
            }
            let c_in = lo < c && c < hi;
            let d_in = lo < d && d < hi;
            if c_in != d_in {
                count += 1;
            }
        }
        Ok(count)
    }

    /// True iff no two strings interleave.
    pub fn is_noncrossing(&self) -> bool {
        let n = self.points();
        for a in 0..n {
            let b = self.partner[a];
            if a >= b {
                continue;
            }
            for c in a + 1..b {
                let d = self.partner[c];
                if !(a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff under the alternating circular labelling a,b,a,b,... every
    /// string joins an `a` point to a `b` point.
    pub fn joins_alternating_labels(&self) -> bool {
        (0..self.points()).all(|i| (i + self.partner[i]) % 2 == 1)
    }

    /// The finest class among N ⊆ E ⊆ P containing this pairing.
    pub fn classify(&self) -> PairingClass {
        if self.is_noncrossing() {
            PairingClass::N
        } else if self.joins_alternating_labels() {
            PairingClass::ENotN
        } else {
            PairingClass::POnly
        }
    }

    /// Caps the diagram by joining point `i` and the circularly next point
    /// with a semicircle (1-based, `i = k+l` wraps to point 1).
    ///
    /// The former partners of the two capped points get joined; if the two
    /// points were partners their string is deleted. The remaining points are
    /// renumbered preserving circular order and the signature adjusts
    /// according to the rows the capped points lay on.
    pub fn capped(&self, i: usize) -> Result<Pairing> {
        self.check_point(i)?;
        let n = self.points();
        let a = i - 1;
        let b = (a + 1) % n;
        let pa = self.partner[a];
        let pb = self.partner[b];

        // new signature: each capped point removes one slot from its row
        let row_of = |x: usize| if x < self.l { 0 } else { 1 };
        let (mut k, mut l) = (self.k, self.l);
        for x in [a, b] {
            if row_of(x) == 0 {
                l -= 1;
            } else {
                k -= 1;
            }
        }

        // renumber: drop positions a and b, keep circular order
        let renumber = |x: usize| -> usize {
            if b == 0 {
                x - 1 // dropped first and last position
            } else {
                if x < a {
                    x
                } else {
                    x - 2
                }
            }
        };

        let mut partner = vec![usize::MAX; n - 2];
        for x in 0..n {
            if x == a || x == b {
                continue;
            }
            let y = self.partner[x];
            if y == a || y == b {
                continue; // re-routed below
            }
            partner[renumber(x)] = renumber(y);
        }
        if pa != b {
            // join the former partners of a and b
            let (u, v) = (renumber(pa), renumber(pb));
            partner[u] = v;
            partner[v] = u;
        }
        Ok(Pairing::from_partner(k, l, partner))
    }

    /// All cappings p^1, ..., p^(k+l).
    pub fn cappings(&self) -> Vec<Pairing> {
        (1..=self.points()).map(|i| self.capped(i).expect("valid index")).collect()
    }

    /// Cyclic relabelling moving the top-left point to bottom-left, so that
    /// iterating `k` times yields the one-row representative on (0, k+l).
    /// When the upper row is already empty the lower row is cycled in place.
    pub fn rotate(&self) -> Pairing {
        let n = self.points();
        if n == 0 {
            return self.clone();
        }
        let shift = |x: usize| (x + 1) % n;
        let mut partner = vec![0; n];
        for x in 0..n {
            partner[shift(x)] = shift(self.partner[x]);
        }
        let (k, l) = if self.k > 0 { (self.k - 1, self.l + 1) } else { (0, self.l) };
        Pairing::from_partner(k, l, partner)
    }

    /// Upside-down turning: swaps the rows, signature (k,l) → (l,k).
    /// At the map level this is the transpose.
    pub fn involute(&self) -> Pairing {
        let n = self.points();
        let flip = |x: usize| n - 1 - x;
        let mut partner = vec![0; n];
        for x in 0..n {
            partner[flip(x)] = flip(self.partner[x]);
        }
        Pairing::from_partner(self.l, self.k, partner)
    }

    /// Horizontal concatenation: `other` is placed to the right of `self`.
    pub fn tensor(&self, other: &Pairing) -> Pairing {
        let (k1, l1) = (self.k, self.l);
        let (k2, l2) = (other.k, other.l);
        let map_self = |x: usize| if x < l1 { x } else { x + l2 + k2 };
        let map_other = |x: usize| l1 + x;
        let mut partner = vec![0; k1 + k2 + l1 + l2];
        for x in 0..self.points() {
            partner[map_self(x)] = map_self(self.partner[x]);
        }
        for x in 0..other.points() {
            partner[map_other(x)] = map_other(other.partner[x]);
        }
        Pairing::from_partner(k1 + k2, l1 + l2, partner)
    }
}

/// Vertical concatenation `q ∘ p`: the upper boundary of `q` is glued to the
/// lower boundary of `p` in matching left-to-right position order, so `p`
/// acts first. Returns the glued pairing on (p.upper, q.lower) together with
/// the number of closed loops removed; at the map level T_q·T_p equals
/// n^loops · T_{q∘p}.
pub fn compose(q: &Pairing, p: &Pairing) -> Result<(Pairing, usize)> {
    let m = q.k;
    if p.l != m {
        return Err(Error::SignatureMismatch { left: q.k, right: p.l });
    }
    let (k, l) = (p.k, q.l);

    // node ids: p's points 0..p.points(), then q's points offset by p.points()
    let off = p.points();
    let total = off + q.points();
    let pairing_edge: Vec<usize> = p
        .partner
        .iter()
        .copied()
        .chain(q.partner.iter().map(|&y| y + off))
        .collect();
    // gluing: p's lower position j (point j) meets q's upper position j
    // (point l + m - 1 - j, upper rows being numbered right to left)
    let mut glue = vec![usize::MAX; total];
    for j in 0..m {
        let a = j;
        let b = off + l + m - 1 - j;
        glue[a] = b;
        glue[b] = a;
    }

    let external = |x: usize| -> Option<usize> {
        // result point id for an external node, 0-based in the glued diagram
        if x >= off {
            let qx = x - off;
            if qx < l {
                return Some(qx); // q's lower row keeps its numbers
            }
        } else if x >= m {
            return Some(l + (x - m)); // p's upper point m+t becomes l+t
        }
        None
    };

    let mut partner = vec![usize::MAX; k + l];
    let mut seen = vec![false; total];
    // trace paths from every external point
    for start in 0..total {
        let Some(res_start) = external(start) else { continue };
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut x = pairing_edge[start];
        loop {
            seen[x] = true;
            if let Some(res_end) = external(x) {
                partner[res_start] = res_end;
                partner[res_end] = res_start;
                break;
            }
            let twin = glue[x];
            seen[twin] = true;
            x = pairing_edge[twin];
        }
    }
    // untouched middle nodes form closed loops; each loop alternates
    // pairing and gluing edges, so it has an even number of nodes per side
    let mut loops = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut x = start;
        loop {
            seen[x] = true;
            let twin = glue[pairing_edge[x]];
            seen[pairing_edge[x]] = true;
            if twin == start {
                break;
            }
            x = twin;
        }
    }
    Ok((Pairing::from_partner(k, l, partner), loops))
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)?;
        let pairs = self.pairs();
        let body: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", body.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct PairingRepr {
    k: usize,
    l: usize,
    pairs: Vec<(usize, usize)>,
}

impl Serialize for Pairing {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PairingRepr { k: self.k, l: self.l, pairs: self.pairs() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Pairing {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = PairingRepr::deserialize(de)?;
        Pairing::new(repr.k, repr.l, &repr.pairs).map_err(serde::de::Error::custom)
    }
}

/// A deduplicated collection of pairings sharing one signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramSet {
    pub k: usize,
    pub l: usize,
    pairings: BTreeSet<Pairing>,
}

impl DiagramSet {
    pub fn new(k: usize, l: usize) -> Self {
        DiagramSet { k, l, pairings: BTreeSet::new() }
    }

    pub fn insert(&mut self, p: Pairing) -> bool {
        debug_assert_eq!((p.upper(), p.lower()), (self.k, self.l));
        self.pairings.insert(p)
    }

    pub fn len(&self) -> usize {
        self.pairings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairings.is_empty()
    }

    pub fn contains(&self, p: &Pairing) -> bool {
        self.pairings.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pairing> {
        self.pairings.iter()
    }
}

/// Enumerates the pairings of the requested class on (k,l).
///
/// Odd totals yield the empty set, by convention.
pub fn enumerate(k: usize, l: usize, class: ClassFilter) -> DiagramSet {
    let mut out = DiagramSet::new(k, l);
    let points = k + l;
    if points % 2 != 0 {
        return out;
    }
    let mut partner = vec![usize::MAX; points];
    fill_matchings(&mut partner, &mut |partner| {
        let p = Pairing::from_partner(k, l, partner.to_vec());
        if p.classify().matches(class) {
            out.insert(p);
        }
    });
    out
}

/// Recursively matches the smallest free point with every later free point.
fn fill_matchings(partner: &mut [usize], emit: &mut impl FnMut(&[usize])) {
    let Some(a) = partner.iter().position(|&x| x == usize::MAX) else {
        emit(partner);
        return;
    };
    for b in a + 1..partner.len() {
        if partner[b] != usize::MAX {
            continue;
        }
        partner[a] = b;
        partner[b] = a;
        fill_matchings(partner, emit);
        partner[a] = usize::MAX;
        partner[b] = usize::MAX;
    }
}

/// The closure ⟨seed⟩: the fixpoint of {seed} ∪ N under composition, tensor,
/// involution and capping, returned restricted to diagrams with at most
/// `max_points` points and organized by signature.
///
/// The fixpoint itself works with two extra points of headroom: moving a
/// point between rows factors through one cup/cap insertion, which passes
/// through a diagram two points larger. Without the headroom whole rotation
/// classes at the bound would be unreachable.
pub fn generate(seed: &Pairing, max_points: usize) -> BTreeMap<(usize, usize), DiagramSet> {
    let working = max_points + 2;
    let mut all: BTreeSet<Pairing> = BTreeSet::new();
    let mut frontier: Vec<Pairing> = Vec::new();

    let mut push = |p: Pairing, all: &mut BTreeSet<Pairing>, frontier: &mut Vec<Pairing>| {
        if p.points() <= working && all.insert(p.clone()) {
            frontier.push(p);
        }
    };

    if seed.points() <= max_points {
        push(seed.clone(), &mut all, &mut frontier);
    }
    for total in (0..=working).step_by(2) {
        for k in 0..=total {
            let l = total - k;
            for p in enumerate(k, l, ClassFilter::N).iter() {
                push(p.clone(), &mut all, &mut frontier);
            }
        }
    }

    while !frontier.is_empty() {
        let fresh = std::mem::take(&mut frontier);
        let snapshot: Vec<Pairing> = all.iter().cloned().collect();
        for p in &fresh {
            push(p.involute(), &mut all, &mut frontier);
            if p.points() > 0 {
                for c in p.cappings() {
                    push(c, &mut all, &mut frontier);
                }
            }
            for q in &snapshot {
                push(p.tensor(q), &mut all, &mut frontier);
                push(q.tensor(p), &mut all, &mut frontier);
                if q.upper() == p.lower() {
                    let (c, _) = compose(q, p).expect("checked signature");
                    push(c, &mut all, &mut frontier);
                }
                if p.upper() == q.lower() {
                    let (c, _) = compose(p, q).expect("checked signature");
                    push(c, &mut all, &mut frontier);
                }
            }
        }
    }

    let mut by_sig: BTreeMap<(usize, usize), DiagramSet> = BTreeMap::new();
    for p in all {
        if p.points() > max_points {
            continue;
        }
        by_sig
            .entry((p.upper(), p.lower()))
            .or_insert_with(|| DiagramSet::new(p.upper(), p.lower()))
            .insert(p);
    }
    by_sig
}

/// (2s-1)!! — the number of perfect matchings of 2s points.
pub fn double_factorial_odd(s: usize) -> u64 {
    (0..s).map(|i| 2 * i as u64 + 1).product()
}

/// The s-th Catalan number.
pub fn catalan(s: usize) -> u64 {
    // C(s) = binom(2s, s) / (s+1), computed without overflow for small s
    let mut c: u128 = 1;
    for i in 0..s as u128 {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c as u64
}

pub fn factorial(s: usize) -> u64 {
    (1..=s as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Pairing {
        Pairing::reversal(3)
    }

    #[test]
    fn construction_validates() {
        assert!(Pairing::new(1, 2, &[]).is_err()); // odd total
        assert!(Pairing::new(0, 2, &[(1, 1)]).is_err()); // fixed point
        assert!(Pairing::new(0, 4, &[(1, 2), (2, 3)]).is_err()); // double cover
        assert!(Pairing::new(0, 2, &[(1, 2)]).is_ok());
        assert_eq!(Pairing::empty().points(), 0);
    }

    #[test]
    fn named_diagrams() {
        assert_eq!(Pairing::identity(2).pairs(), vec![(1, 4), (2, 3)]);
        assert_eq!(p3().pairs(), vec![(1, 4), (2, 5), (3, 6)]);
        assert_eq!(Pairing::crossing().pairs(), vec![(1, 3), (2, 4)]);
    }

    #[test]
    fn counting_small() {
        assert_eq!(enumerate(0, 6, ClassFilter::P).len(), 15);
        assert_eq!(enumerate(0, 6, ClassFilter::N).len(), 5);
        assert_eq!(enumerate(0, 6, ClassFilter::E).len(), 6);
        assert!(enumerate(1, 2, ClassFilter::P).is_empty()); // odd total
        assert_eq!(enumerate(0, 0, ClassFilter::P).len(), 1); // the empty diagram
    }

    #[test]
    fn crossing_counts() {
        let id = Pairing::identity(2);
        assert_eq!(id.crossing_count(1).unwrap(), 0);
        let x = Pairing::crossing();
        assert_eq!(x.crossing_count(1).unwrap(), 1);
        assert_eq!(p3().crossing_count(2).unwrap(), 2);
        assert!(id.crossing_count(5).is_err());
        assert!(id.crossing_count(0).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(Pairing::identity(2).classify(), PairingClass::N);
        assert_eq!(Pairing::crossing().classify(), PairingClass::POnly);
        assert_eq!(p3().classify(), PairingClass::ENotN);
    }

    #[test]
    fn capping_examples() {
        // capping a string deletes it
        let p = Pairing::new(0, 4, &[(1, 2), (3, 4)]).unwrap();
        let c = p.capped(1).unwrap();
        assert_eq!((c.upper(), c.lower()), (0, 2));
        assert_eq!(c.pairs(), vec![(1, 2)]);

        // partners of 2 and 3 get joined and renumbered
        let p = Pairing::new(0, 4, &[(1, 3), (2, 4)]).unwrap();
        let c = p.capped(2).unwrap();
        assert_eq!(c.pairs(), vec![(1, 2)]);

        // p_3 capped at 3: join partner(3)=6 with partner(4)=1
        let c = p3().capped(3).unwrap();
        assert_eq!((c.upper(), c.lower()), (2, 2));
        assert_eq!(c.pairs(), vec![(1, 4), (2, 3)]);

        // wrap-around cap on (1,1) deletes the lone string
        let c = Pairing::identity(1).capped(2).unwrap();
        assert_eq!(c, Pairing::empty());
    }

    #[test]
    fn rotation() {
        let r = Pairing::identity(1).rotate();
        assert_eq!((r.upper(), r.lower()), (0, 2));
        assert_eq!(r.pairs(), vec![(1, 2)]);

        // six rotations of p_3 give back its partner array cyclically
        let mut p = p3();
        for _ in 0..6 {
            p = p.rotate();
        }
        assert_eq!((p.upper(), p.lower()), (0, 6));
        assert_eq!(p.pairs(), p3().pairs());
    }

    #[test]
    fn rotation_preserves_class() {
        for total in [2usize, 4, 6, 8] {
            for k in 0..=total {
                let l = total - k;
                for p in enumerate(k, l, ClassFilter::P).iter() {
                    assert_eq!(p.rotate().classify(), p.classify(), "{p}");
                }
            }
        }
    }

    #[test]
    fn involution() {
        for total in [2usize, 4, 6, 8] {
            for k in 0..=total {
                let l = total - k;
                for p in enumerate(k, l, ClassFilter::P).iter() {
                    let q = p.involute();
                    assert_eq!((q.upper(), q.lower()), (l, k));
                    assert_eq!(&q.involute(), p);
                    assert_eq!(q.classify(), p.classify());
                }
            }
        }
        let t = Pairing::identity(1).tensor(&Pairing::identity(1));
        assert_eq!(t, Pairing::identity(2));
    }

    #[test]
    fn composition_examples() {
        // identity law
        for k in 0..=3usize {
            for l in 0..=3usize {
                if (k + l) % 2 != 0 {
                    continue;
                }
                for p in enumerate(k, l, ClassFilter::P).iter() {
                    let (c, loops) = compose(p, &Pairing::identity(k)).unwrap();
                    assert_eq!((&c, loops), (p, 0));
                    let (c, loops) = compose(&Pairing::identity(l), p).unwrap();
                    assert_eq!((&c, loops), (p, 0));
                }
            }
        }

        // cup under cap closes one loop
        let (c, loops) = compose(&Pairing::cup(), &Pairing::cap()).unwrap();
        assert_eq!(c, Pairing::empty());
        assert_eq!(loops, 1);

        // the reversal diagram is an involution
        let (c, loops) = compose(&p3(), &p3()).unwrap();
        assert_eq!(c, Pairing::identity(3));
        assert_eq!(loops, 0);

        assert!(compose(&Pairing::cup(), &Pairing::cup()).is_err());
    }

    #[test]
    fn tensor_class_multiplicativity() {
        // tensor is noncrossing iff both factors are
        let mut pool = Vec::new();
        for total in [0usize, 2, 4] {
            for k in 0..=total {
                pool.extend(enumerate(k, total - k, ClassFilter::P).iter().cloned());
            }
        }
        for p in &pool {
            for q in &pool {
                if p.points() + q.points() > 6 {
                    continue;
                }
                let t = p.tensor(q);
                assert_eq!(
                    t.classify().in_n(),
                    p.classify().in_n() && q.classify().in_n()
                );
            }
        }
    }

    #[test]
    fn generation_closures() {
        // the crossing generates everything
        let gen = generate(&Pairing::crossing(), 6);
        for (&(k, l), set) in &gen {
            assert_eq!(set.len(), enumerate(k, l, ClassFilter::P).len(), "P at ({k},{l})");
        }
        // p_3 generates exactly the even class
        let gen = generate(&p3(), 6);
        for (&(k, l), set) in &gen {
            let expect = enumerate(k, l, ClassFilter::E);
            assert_eq!(set.len(), expect.len(), "E at ({k},{l})");
            for p in set.iter() {
                assert!(expect.contains(p));
            }
        }
        // the identity generates exactly the noncrossing class
        let gen = generate(&Pairing::identity(1), 6);
        for (&(k, l), set) in &gen {
            assert_eq!(set.len(), enumerate(k, l, ClassFilter::N).len(), "N at ({k},{l})");
        }
    }

    #[test]
    fn serde_roundtrip() {
        let p = p3();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"k":3,"l":3,"pairs":[[1,4],[2,5],[3,6]]}"#);
        let q: Pairing = serde_json::from_str(&json).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(double_factorial_odd(3), 15);
        assert_eq!(catalan(3), 5);
        assert_eq!(factorial(3), 6);
        assert_eq!(catalan(5), 42);
    }
}

