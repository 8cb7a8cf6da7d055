//! Cayley graphs on irreducible objects and their ball-volume growth.
//!
//! Vertices are highest weights, edges join w to the summands of w ⊗ u_1
//! with multiplicity dim Hom(w, v⊗u_1), and the length of a vertex is its
//! BFS depth from the trivial object. The generator u_1 is the fundamental
//! object for the half-liberated group, v ⊕ v̄ for U_n, the adjoint for
//! PU_n and the restricted fundamental pair for SU_n, whose weights are
//! classes modulo (1,…,1) represented by the lift with coordinate sum in
//! 0..n. Ball volumes b_k = Σ_{l(w)≤k} dim(w)² are exact integers; only the
//! final growth-exponent fit works in floating point.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::{conjugate_un, tensor_ostar, tensor_un, weyl_dim};
use crate::weight_lattice::{infer_sector, GroupElement, Multiset, Sector, Weight};

/// Default cap on the number of vertices a single build may collect.
pub const DEFAULT_MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CayleyGroup {
    Ostar,
    Un,
    PUn,
    SUn,
}

impl std::str::FromStr for CayleyGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ostar" => Ok(CayleyGroup::Ostar),
            "un" => Ok(CayleyGroup::Un),
            "pun" => Ok(CayleyGroup::PUn),
            "sun" => Ok(CayleyGroup::SUn),
            other => Err(Error::Parse(format!(
                "unknown group {other:?}, expected ostar, un, pun or sun"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyVertex {
    pub weight: Weight,
    /// Sector of the weight, present only on the half-liberated side.
    pub sector: Option<Sector>,
    pub dim: BigInt,
    pub len: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    pub group: CayleyGroup,
    pub n: usize,
    pub radius: u32,
    /// Sorted by (length, weight); index 0 is the trivial object.
    pub vertices: Vec<CayleyVertex>,
    /// Ordered pairs (from, to, multiplicity), sorted; both directions are
    /// stored since the generator is selfadjoint.
    pub edges: Vec<(usize, usize, u64)>,
}

/// The canonical lift of an SU_n weight class: subtract the multiple of
/// (1,…,1) that lands the coordinate sum in 0..n.
pub fn su_canonical_lift(w: &Weight) -> Weight {
    let n = w.len() as i64;
    let shift = w.sum().div_euclid(n);
    Weight(w.0.iter().map(|x| x - shift).collect())
}

/// Summands of w ⊗ u_1 for the given group, as weight → multiplicity.
fn neighbors(group: CayleyGroup, n: usize, w: &Weight) -> Result<Multiset<Weight>> {
    let v = Weight::unit(n, 0);
    let vbar = conjugate_un(&v);
    match group {
        CayleyGroup::Ostar => {
            let elem = GroupElement::new(w.clone(), infer_sector(w)?)?;
            let u = GroupElement::generator(n, 0);
            let dec = tensor_ostar(&elem, &u)?;
            Ok(dec.into_iter().map(|(e, m)| (e.psi(), m)).collect())
        }
        CayleyGroup::Un => {
            let mut out = Multiset::new();
            for factor in [&v, &vbar] {
                for (nu, m) in tensor_un(w, factor)? {
                    *out.entry(nu).or_insert(0) += m;
                }
            }
            Ok(out)
        }
        CayleyGroup::PUn => {
            if n < 2 {
                return Err(Error::Parse("the projective graph needs n >= 2".into()));
            }
            let mut adjoint = vec![0i64; n];
            adjoint[0] = 1;
            adjoint[n - 1] = -1;
            tensor_un(w, &Weight(adjoint))
        }
        CayleyGroup::SUn => {
            let mut out = Multiset::new();
            for factor in [&v, &vbar] {
                for (nu, m) in tensor_un(w, factor)? {
                    *out.entry(su_canonical_lift(&nu)).or_insert(0) += m;
                }
            }
            Ok(out)
        }
    }
}

/// Builds the ball of the given radius by breadth-first search from the
/// trivial weight; lengths are depths of first appearance and the edge set
/// is complete inside the ball.
pub fn build_graph(group: CayleyGroup, n: usize, radius: u32) -> Result<CayleyGraph> {
    build_graph_capped(group, n, radius, DEFAULT_MAX_VERTICES)
}

pub fn build_graph_capped(
    group: CayleyGroup,
    n: usize,
    radius: u32,
    max_vertices: usize,
) -> Result<CayleyGraph> {
    if n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    let origin = Weight::zero(n);
    let mut length: BTreeMap<Weight, u32> = BTreeMap::new();
    let mut adjacency: BTreeMap<Weight, Multiset<Weight>> = BTreeMap::new();
    length.insert(origin.clone(), 0);
    let mut level = vec![origin];
    for depth in 0..=radius {
        let mut next = Vec::new();
        for w in level {
            let nb = neighbors(group, n, &w)?;
            if depth < radius {
                for t in nb.keys() {
                    if !length.contains_key(t) {
                        if length.len() >= max_vertices {
                            return Err(Error::ResourceLimit {
                                what: "graph vertices",
                                value: (length.len() + 1) as u128,
                                cap: max_vertices as u128,
                            });
                        }
                        length.insert(t.clone(), depth + 1);
                        next.push(t.clone());
                    }
                }
            }
            adjacency.insert(w, nb);
        }
        level = next;
    }

    let mut vertices: Vec<CayleyVertex> = Vec::with_capacity(length.len());
    for (w, &len) in &length {
        vertices.push(CayleyVertex {
            sector: match group {
                CayleyGroup::Ostar => Some(infer_sector(w)?),
                _ => None,
            },
            dim: weyl_dim(w)?,
            len,
            weight: w.clone(),
        });
    }
    vertices.sort_by(|a, b| (a.len, &a.weight).cmp(&(b.len, &b.weight)));
    let index: BTreeMap<&Weight, usize> =
        vertices.iter().enumerate().map(|(i, v)| (&v.weight, i)).collect();

    let mut edges = Vec::new();
    for (w, nb) in &adjacency {
        let from = index[w];
        for (t, &mult) in nb {
            if let Some(&to) = index.get(t) {
                edges.push((from, to, mult));
            }
        }
    }
    edges.sort_unstable();
    Ok(CayleyGraph { group, n, radius, vertices, edges })
}

impl CayleyGraph {
    pub fn vertex_index(&self, w: &Weight) -> Option<usize> {
        self.vertices.iter().position(|v| &v.weight == w)
    }

    pub fn contains_weight(&self, w: &Weight) -> bool {
        self.vertex_index(w).is_some()
    }

    /// Edge multiset keyed by weights instead of indices.
    fn edge_weights(&self) -> Vec<(Weight, Weight, u64)> {
        let mut out: Vec<(Weight, Weight, u64)> = self
            .edges
            .iter()
            .map(|&(i, j, m)| (self.vertices[i].weight.clone(), self.vertices[j].weight.clone(), m))
            .collect();
        out.sort_unstable();
        out
    }
}

/// True iff the ψ-image of the half-liberated graph equals the full subgraph
/// of the U_n graph induced on the vertices with coordinate sum 0 or 1,
/// compared on the smaller radius: same vertices with equal lengths and
/// dimensions, and identical edge multisets.
pub fn subgraph_check(a: &CayleyGraph, u: &CayleyGraph) -> Result<bool> {
    if a.group != CayleyGroup::Ostar {
        return Err(Error::WrongGroup("half-liberated"));
    }
    if u.group != CayleyGroup::Un {
        return Err(Error::WrongGroup("unitary"));
    }
    if a.n != u.n {
        return Err(Error::LengthMismatch(a.n, u.n));
    }
    if a.radius > u.radius {
        return Err(Error::InsufficientRadius { have: u.radius, need: a.radius });
    }
    let r = a.radius;
    let a_vertices: BTreeMap<&Weight, (u32, &BigInt)> =
        a.vertices.iter().map(|v| (&v.weight, (v.len, &v.dim))).collect();
    let u_vertices: BTreeMap<&Weight, (u32, &BigInt)> = u
        .vertices
        .iter()
        .filter(|v| v.len <= r && (v.weight.sum() == 0 || v.weight.sum() == 1))
        .map(|v| (&v.weight, (v.len, &v.dim)))
        .collect();
    if a_vertices != u_vertices {
        return Ok(false);
    }
    let in_sub = |w: &Weight| u_vertices.contains_key(w);
    let a_edges = a.edge_weights();
    let mut u_edges: Vec<(Weight, Weight, u64)> = u
        .edge_weights()
        .into_iter()
        .filter(|(x, y, _)| in_sub(x) && in_sub(y))
        .collect();
    u_edges.sort_unstable();
    Ok(a_edges == u_edges)
}

/// Collapses a half-liberated graph of even radius 2r onto its circ-sector
/// vertices: edges count the length-2 paths, computed exactly through two
/// fusion steps (so boundary vertices lose nothing), minus one loop at each
/// vertex. The result is the projective graph of radius r.
pub fn projective_collapse(a: &CayleyGraph) -> Result<CayleyGraph> {
    if a.group != CayleyGroup::Ostar {
        return Err(Error::WrongGroup("half-liberated"));
    }
    if a.radius % 2 != 0 {
        return Err(Error::OddRadius(a.radius));
    }
    let n = a.n;
    let u = GroupElement::generator(n, 0);

    let mut vertices: Vec<CayleyVertex> = a
        .vertices
        .iter()
        .filter(|v| v.sector == Some(Sector::Circ))
        .map(|v| CayleyVertex {
            weight: v.weight.clone(),
            sector: None,
            dim: v.dim.clone(),
            len: v.len / 2,
        })
        .collect();
    vertices.sort_by(|a, b| (a.len, &a.weight).cmp(&(b.len, &b.weight)));
    let index: BTreeMap<&Weight, usize> =
        vertices.iter().enumerate().map(|(i, v)| (&v.weight, i)).collect();

    let mut edges = Vec::new();
    for v in &vertices {
        let from = index[&v.weight];
        let elem = GroupElement::new(v.weight.clone(), Sector::Circ)?;
        let mut paths: Multiset<Weight> = Multiset::new();
        for (x, m1) in tensor_ostar(&elem, &u)? {
            for (t, m2) in tensor_ostar(&x, &u)? {
                *paths.entry(t.psi()).or_insert(0) += m1 * m2;
            }
        }
        for (t, mult) in paths {
            let Some(&to) = index.get(&t) else { continue };
            let mult = if to == from {
                // one loop at each vertex comes from w ⊂ w ⊗ u ⊗ u regardless
                // of the projective edge structure; drop it
                debug_assert!(mult >= 1);
                mult - 1
            } else {
                mult
            };
            if mult > 0 {
                edges.push((from, to, mult));
            }
        }
    }
    edges.sort_unstable();
    Ok(CayleyGraph { group: CayleyGroup::PUn, n, radius: a.radius / 2, vertices, edges })
}

/// Exact partial sums of squared dimensions by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSeries {
    pub values: Vec<BigInt>,
}

impl GrowthSeries {
    pub fn kmax(&self) -> u32 {
        (self.values.len() as u32).saturating_sub(1)
    }
}

pub fn ball_volumes(g: &CayleyGraph, kmax: u32) -> Result<GrowthSeries> {
    if g.radius < kmax {
        return Err(Error::InsufficientRadius { have: g.radius, need: kmax });
    }
    let mut by_len = vec![BigInt::zero(); kmax as usize + 1];
    for v in &g.vertices {
        if v.len <= kmax {
            by_len[v.len as usize] += &v.dim * &v.dim;
        }
    }
    let mut values = Vec::with_capacity(by_len.len());
    let mut acc = BigInt::zero();
    for term in by_len {
        acc += term;
        values.push(acc.clone());
    }
    Ok(GrowthSeries { values })
}

/// Least-squares fit of log b_k against log k, plus dyadic ratios.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthFit {
    pub kmin: u32,
    pub kmax: u32,
    pub slope: f64,
    /// (k, log2(b_{2k}/b_k)) for every k in range with 2k ≤ kmax.
    pub dyadic: Vec<(u32, f64)>,
}

fn ln_big(x: &BigInt) -> f64 {
    if let Some(v) = x.to_f64().filter(|v| v.is_finite() && *v > 0.0) {
        return v.ln();
    }
    // beyond f64 range: peel the bit length off first
    let bits = x.bits();
    let shifted = x >> (bits.saturating_sub(53));
    shifted.to_f64().unwrap_or(1.0).ln() + (bits.saturating_sub(53)) as f64 * std::f64::consts::LN_2
}

pub fn fit_exponent(s: &GrowthSeries, kmin: u32, kmax: u32) -> Result<GrowthFit> {
    if kmin < 2 || kmax <= kmin || (kmax as usize) >= s.values.len() + 1 {
        return Err(Error::DegenerateRange { kmin, kmax, len: s.values.len() });
    }
    let ks: Vec<u32> = (kmin..=kmax).collect();
    let xs: Vec<f64> = ks.iter().map(|&k| (k as f64).ln()).collect();
    let ys: Vec<f64> = ks.iter().map(|&k| ln_big(&s.values[k as usize])).collect();
    let m = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / m;
    let ybar = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xbar) * (y - ybar)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    let slope = sxy / sxx;

    let mut dyadic = Vec::new();
    for &k in &ks {
        if 2 * k <= kmax {
            let ratio =
                (ln_big(&s.values[2 * k as usize]) - ln_big(&s.values[k as usize])) / std::f64::consts::LN_2;
            dyadic.push((k, ratio));
        }
    }
    Ok(GrowthFit { kmin, kmax, slope, dyadic })
}

/// Verifies the ball inclusions B_k^{PU} ⊂ B_{2k}^{half-lib} ⊂ B_{2k}^{SU}
/// under the weight identifications, and the resulting volume inequalities.
pub fn inclusion_chain(n: usize, k: u32) -> Result<bool> {
    let pu = build_graph(CayleyGroup::PUn, n, k)?;
    let a = build_graph(CayleyGroup::Ostar, n, 2 * k)?;
    let su = build_graph(CayleyGroup::SUn, n, 2 * k)?;

    for v in &pu.vertices {
        if !a.contains_weight(&v.weight) {
            return Ok(false);
        }
    }
    for v in &a.vertices {
        if !su.contains_weight(&su_canonical_lift(&v.weight)) {
            return Ok(false);
        }
    }
    let b_pu = ball_volumes(&pu, k)?;
    let b_a = ball_volumes(&a, 2 * k)?;
    let b_su = ball_volumes(&su, 2 * k)?;
    let vk = &b_pu.values[k as usize];
    let v2k_a = &b_a.values[2 * k as usize];
    let v2k_su = &b_su.values[2 * k as usize];
    Ok(vk <= v2k_a && v2k_a <= v2k_su)
}

/// Serialized graph form: dims and weights are exact, indices refer to the
/// sorted vertex list.
#[derive(Serialize)]
struct GraphRepr<'a> {
    group: CayleyGroup,
    n: usize,
    radius: u32,
    vertices: Vec<VertexRepr<'a>>,
    edges: &'a [(usize, usize, u64)],
}

#[derive(Serialize)]
struct VertexRepr<'a> {
    weight: &'a Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    sector: Option<Sector>,
    dim: String,
    len: u32,
}

impl Serialize for CayleyGraph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            group: self.group,
            n: self.n,
            radius: self.radius,
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexRepr {
                    weight: &v.weight,
                    sector: v.sector,
                    dim: v.dim.to_string(),
                    len: v.len,
                })
                .collect(),
            edges: &self.edges,
        }
        .serialize(ser)
    }
}

impl CayleyGraph {
    /// Graphviz form with one undirected edge per unordered pair per unit of
    /// multiplicity and vertex labels "λ | dim | len".
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph {:?}_{} {{\n", self.group, self.n).to_lowercase());
        for (i, v) in self.vertices.iter().enumerate() {
            let weight = v
                .weight
                .0
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!("  v{i} [label=\"{} | {} | {}\"];\n", weight, v.dim, v.len));
        }
        for &(i, j, mult) in &self.edges {
            if i > j {
                continue; // each unordered pair once; loops keep their own entry
            }
            for _ in 0..mult {
                out.push_str(&format!("  v{i} -- v{j};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}
