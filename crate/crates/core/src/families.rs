//! Half biwheels, wheels, prisms and the four families of nonbipartite
//! planar cycle-extendable irreducible graphs, with certificates.
//!
//! A half biwheel of path length `L` is an even path `p0 .. pL` plus a hub
//! joined to `p0, p2, .., pL`; its corners are `u = p0` and `v = pL`.
//! Recognition derives candidate specs from the structure of the input and
//! confirms each by building the member and finding an isomorphism, so a
//! certificate is only ever issued together with an explicit labelling.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cycles::{self, CycleWitness, Parity};
use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::iso;
use crate::matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfBiwheelSpec {
    /// Even; `0` gives `K2`, `2` gives `C4`.
    pub path_length: usize,
}

impl HalfBiwheelSpec {
    pub fn order(&self) -> usize {
        self.path_length + 2
    }

    fn check(&self) -> Result<()> {
        if !self.path_length.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!(
                "half biwheel path length {} is odd",
                self.path_length
            )));
        }
        Ok(())
    }
}

/// One half biwheel of a generalized prism. With `hub_in_a` the hub plays
/// `w = x` and the corners are `y, z`; otherwise the hub is `y = z` and the
/// corners are `w, x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G0Part {
    pub path_length: usize,
    #[serde(default = "yes")]
    pub hub_in_a: bool,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G0Spec {
    pub parts: Vec<G0Part>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G1Spec {
    pub parts: Vec<HalfBiwheelSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G2Spec {
    pub first: HalfBiwheelSpec,
    pub second: HalfBiwheelSpec,
}

/// Odd `k >= 3`; used for both wheels and prisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    G0,
    G1,
    G2,
    G3,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    G0(G0Spec),
    G1(G1Spec),
    G2(G2Spec),
    G3(HalfBiwheelSpec),
}

impl FamilySpec {
    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilySpec::G0(_) => FamilyTag::G0,
            FamilySpec::G1(_) => FamilyTag::G1,
            FamilySpec::G2(_) => FamilyTag::G2,
            FamilySpec::G3(_) => FamilyTag::G3,
        }
    }

    /// Number of vertices of the member.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::G0(s) => s.parts.iter().map(|p| p.path_length + 2).sum(),
            FamilySpec::G1(s) => 1 + s.parts.iter().map(|p| p.path_length + 1).sum::<usize>(),
            FamilySpec::G2(s) => s.first.order() + s.second.order(),
            FamilySpec::G3(s) => 6 + s.order(),
        }
    }

    pub fn generate(&self) -> Result<Member> {
        match self {
            FamilySpec::G0(s) => gen_g0(s),
            FamilySpec::G1(s) => gen_g1(s),
            FamilySpec::G2(s) => gen_g2(s),
            FamilySpec::G3(s) => gen_g3(s),
        }
    }
}

/// A generated member with named vertices and connector edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub graph: Graph,
    pub roles: BTreeMap<String, VertexId>,
    pub connectors: BTreeMap<String, EdgeId>,
    /// Vertex sets of the building blocks: the half biwheels (each with its
    /// hub) and, for hexagon members, the hexagon first.
    pub parts: Vec<Vec<VertexId>>,
}

struct Block {
    hub: VertexId,
    u: VertexId,
    v: VertexId,
    vertices: Vec<VertexId>,
}

fn add_half_biwheel(g: &mut Graph, spec: HalfBiwheelSpec, hub: Option<VertexId>) -> Result<Block> {
    spec.check()?;
    let h = hub.unwrap_or_else(|| g.add_vertex());
    let path: Vec<VertexId> = (0..=spec.path_length).map(|_| g.add_vertex()).collect();
    for w in path.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    for &p in path.iter().step_by(2) {
        g.add_edge(h, p)?;
    }
    let mut vertices = vec![h];
    vertices.extend(&path);
    Ok(Block {
        hub: h,
        u: path[0],
        v: path[spec.path_length],
        vertices,
    })
}

pub fn gen_half_biwheel(spec: HalfBiwheelSpec) -> Result<Member> {
    let mut g = Graph::new(0);
    let b = add_half_biwheel(&mut g, spec, None)?;
    let roles = BTreeMap::from([
        (String::from("h"), b.hub),
        (String::from("u"), b.u),
        (String::from("v"), b.v),
    ]);
    Ok(Member {
        graph: g,
        roles,
        connectors: BTreeMap::new(),
        parts: vec![b.vertices],
    })
}

fn check_ring(k: usize) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!("k = {k} must be odd and at least three")));
    }
    Ok(())
}

/// Hub `0` and an odd rim `1..=k`.
pub fn gen_wheel(spec: RingSpec) -> Result<Graph> {
    check_ring(spec.k)?;
    Ok(crate::catalog::wheel(spec.k))
}

/// Two odd `k`-cycles joined by rungs.
pub fn gen_prism(spec: RingSpec) -> Result<Graph> {
    check_ring(spec.k)?;
    Ok(crate::catalog::prism(spec.k))
}

fn role(roles: &mut BTreeMap<String, VertexId>, name: String, v: VertexId) {
    roles.insert(name, v);
}

pub fn gen_g0(spec: &G0Spec) -> Result<Member> {
    let k = spec.parts.len();
    check_ring(k)?;
    let mut g = Graph::new(0);
    let mut roles = BTreeMap::new();
    let mut parts = Vec::new();
    // (w, x, y, z) per block
    let mut ends = Vec::new();
    for (i, p) in spec.parts.iter().enumerate() {
        let b = add_half_biwheel(
            &mut g,
            HalfBiwheelSpec {
                path_length: p.path_length,
            },
            None,
        )?;
        let wxyz = if p.hub_in_a {
            (b.hub, b.hub, b.u, b.v)
        } else {
            (b.u, b.v, b.hub, b.hub)
        };
        for (name, v) in [
            ("h", b.hub),
            ("u", b.u),
            ("v", b.v),
            ("w", wxyz.0),
            ("x", wxyz.1),
            ("y", wxyz.2),
            ("z", wxyz.3),
        ] {
            role(&mut roles, format!("{name}{i}"), v);
        }
        ends.push(wxyz);
        parts.push(b.vertices);
    }
    let mut connectors = BTreeMap::new();
    for i in 0..k {
        let j = (i + 1) % k;
        let a = g.add_edge(ends[i].1, ends[j].0)?;
        let b = g.add_edge(ends[i].2, ends[j].3)?;
        connectors.insert(format!("alpha{i}"), a);
        connectors.insert(format!("beta{i}"), b);
    }
    Ok(Member {
        graph: g,
        roles,
        connectors,
        parts,
    })
}

pub fn gen_g1(spec: &G1Spec) -> Result<Member> {
    let k = spec.parts.len();
    check_ring(k)?;
    let mut g = Graph::new(1);
    let mut roles = BTreeMap::from([(String::from("h"), 0)]);
    let mut blocks = Vec::new();
    for (i, &p) in spec.parts.iter().enumerate() {
        let b = add_half_biwheel(&mut g, p, Some(0))?;
        role(&mut roles, format!("u{i}"), b.u);
        role(&mut roles, format!("v{i}"), b.v);
        blocks.push(b);
    }
    let mut connectors = BTreeMap::new();
    for i in 0..k {
        let e = g.add_edge(blocks[i].v, blocks[(i + 1) % k].u)?;
        connectors.insert(format!("e{i}"), e);
    }
    Ok(Member {
        graph: g,
        roles,
        connectors,
        parts: blocks.into_iter().map(|b| b.vertices).collect(),
    })
}

pub fn gen_g2(spec: &G2Spec) -> Result<Member> {
    for s in [spec.first, spec.second] {
        if s.path_length < 2 {
            return Err(Error::InvalidSpec(String::from(
                "double half biwheels need two half biwheels other than K2",
            )));
        }
    }
    let mut g = Graph::new(0);
    let b0 = add_half_biwheel(&mut g, spec.first, None)?;
    let b1 = add_half_biwheel(&mut g, spec.second, None)?;
    let mut roles = BTreeMap::new();
    for (i, b) in [&b0, &b1].into_iter().enumerate() {
        role(&mut roles, format!("h{i}"), b.hub);
        role(&mut roles, format!("u{i}"), b.u);
        role(&mut roles, format!("v{i}"), b.v);
    }
    let connectors = BTreeMap::from([
        (String::from("alpha0"), g.add_edge(b1.hub, b0.hub)?),
        (String::from("beta0"), g.add_edge(b1.v, b0.v)?),
        (String::from("alpha1"), g.add_edge(b0.u, b1.hub)?),
        (String::from("beta1"), g.add_edge(b0.hub, b1.u)?),
    ]);
    Ok(Member {
        graph: g,
        roles,
        connectors,
        parts: vec![b0.vertices, b1.vertices],
    })
}

pub fn gen_g3(spec: &HalfBiwheelSpec) -> Result<Member> {
    let mut g = Graph::new(6);
    for i in 0..6 {
        g.add_edge(i, (i + 1) % 6)?;
    }
    let b = add_half_biwheel(&mut g, *spec, None)?;
    let mut roles: BTreeMap<String, VertexId> = (0..6).map(|i| (format!("a{i}"), i)).collect();
    role(&mut roles, String::from("h1"), b.hub);
    role(&mut roles, String::from("u1"), b.u);
    role(&mut roles, String::from("v1"), b.v);
    let connectors = BTreeMap::from([
        (String::from("alpha0"), g.add_edge(b.hub, 4)?),
        (String::from("beta0"), g.add_edge(b.v, 1)?),
        (String::from("alpha1"), g.add_edge(3, b.hub)?),
        (String::from("beta1"), g.add_edge(0, b.u)?),
    ]);
    Ok(Member {
        graph: g,
        roles,
        connectors,
        parts: vec![(0..6).collect(), b.vertices],
    })
}

/// Membership proof: the spec, plus a labelling that maps the generated
/// member onto the input graph. Roles, connectors and parts are given in
/// the input's ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCertificate {
    pub tag: FamilyTag,
    pub spec: FamilySpec,
    /// `(generated vertex, input vertex)`, sorted by the first entry.
    pub labeling: Vec<(VertexId, VertexId)>,
    pub roles: BTreeMap<String, VertexId>,
    pub connectors: BTreeMap<String, EdgeId>,
    pub parts: Vec<Vec<VertexId>>,
}

impl FamilyCertificate {
    /// Regenerates the member from the spec.
    pub fn replay(&self) -> Result<Member> {
        self.spec.generate()
    }

    /// Checks that the labelling is an isomorphism from the replayed member
    /// onto `g`, and that roles, connectors and parts are its images.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |why: &str| Err(Error::Internal(format!("certificate mismatch: {why}")));
        if self.tag != self.spec.tag() {
            return bad("tag");
        }
        let m = self.replay()?;
        let map: BTreeMap<VertexId, VertexId> = self.labeling.iter().copied().collect();
        let image: BTreeSet<VertexId> = map.values().copied().collect();
        let gen_vs: BTreeSet<VertexId> = m.graph.vertices().collect();
        let g_vs: BTreeSet<VertexId> = g.vertices().collect();
        if map.len() != self.labeling.len() || map.keys().copied().collect::<BTreeSet<_>>() != gen_vs || image != g_vs {
            return bad("labelling is not a bijection");
        }
        let mapped: BTreeMap<(VertexId, VertexId), usize> = m
            .graph
            .edge_multiset()
            .into_iter()
            .map(|((a, b), c)| {
                let (x, y) = (map[&a], map[&b]);
                ((x.min(y), x.max(y)), c)
            })
            .collect();
        if mapped != g.edge_multiset() {
            return bad("edges do not correspond");
        }
        for (name, v) in &m.roles {
            if self.roles.get(name) != Some(&map[v]) {
                return bad("roles");
            }
        }
        for (name, &e) in &m.connectors {
            let (a, b) = m.graph.endpoints(e).expect("generated edge");
            let ok = self
                .connectors
                .get(name)
                .and_then(|&f| g.endpoints(f))
                .is_some_and(|(x, y)| {
                    let (p, q) = (map[&a], map[&b]);
                    (x, y) == (p, q) || (x, y) == (q, p)
                });
            if !ok {
                return bad("connectors");
            }
        }
        let parts: Vec<Vec<VertexId>> = m.parts.iter().map(|p| sorted_image(p, &map)).collect();
        if parts != self.parts {
            return bad("parts");
        }
        Ok(())
    }
}

fn sorted_image(vs: &[VertexId], map: &BTreeMap<VertexId, VertexId>) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = vs.iter().map(|v| map[v]).collect();
    out.sort_unstable();
    out
}

/// Builds the member for `spec` and, if it is isomorphic to `g`, the
/// certificate.
pub fn certify(g: &Graph, spec: &FamilySpec) -> Result<Option<FamilyCertificate>> {
    if spec.order() != g.order() {
        return Ok(None);
    }
    let m = spec.generate()?;
    if m.graph.size() != g.size() {
        return Ok(None);
    }
    let Some(labeling) = iso::find_isomorphism(&m.graph, g)? else {
        return Ok(None);
    };
    let map: BTreeMap<VertexId, VertexId> = labeling.iter().copied().collect();
    let roles = m.roles.iter().map(|(n, v)| (n.clone(), map[v])).collect();
    let mut connectors = BTreeMap::new();
    for (name, &e) in &m.connectors {
        let (a, b) = m.graph.endpoints(e).expect("generated edge");
        let f = g
            .edges_between(map[&a], map[&b])
            .into_iter()
            .next()
            .ok_or_else(|| Error::internal("isomorphism lost an edge"))?;
        connectors.insert(name.clone(), f);
    }
    let cert = FamilyCertificate {
        tag: spec.tag(),
        spec: spec.clone(),
        labeling,
        roles,
        connectors,
        parts: m.parts.iter().map(|p| sorted_image(p, &map)).collect(),
    };
    cert.validate(g)?;
    Ok(Some(cert))
}

/// Candidate specs read off the structure of `g`, per family.
fn candidate_specs(g: &Graph) -> Result<Vec<FamilySpec>> {
    let mut out = wheel_candidates(g);
    if g.order() >= 6 {
        out.extend(doubleton_candidates(g)?);
    }
    Ok(out)
}

/// Generalized wheels: a hub whose deletion leaves a spanning odd cycle.
/// Rim edges with both ends adjacent to the hub are the connectors; the
/// stretches between them are the half biwheel paths.
fn wheel_candidates(g: &Graph) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for h in g.vertices() {
        let rest = g.without_vertices(&[h]);
        let n = rest.order();
        if n < 3 || n.is_multiple_of(2) || !rest.is_connected() || rest.vertices().any(|v| rest.degree(v) != 2) {
            continue;
        }
        let Some(rim) = cycle_order(&rest) else { continue };
        let spoke: Vec<bool> = rim.iter().map(|&v| g.multiplicity(h, v) > 0).collect();
        let cuts: Vec<usize> = (0..n).filter(|&i| spoke[i] && spoke[(i + 1) % n]).collect();
        if cuts.len() < 3 || cuts.len().is_multiple_of(2) {
            continue;
        }
        let mut parts = Vec::new();
        let mut ok = true;
        for (j, &c) in cuts.iter().enumerate() {
            let next = cuts[(j + 1) % cuts.len()];
            let len = (next + n - c) % n;
            let len = if len == 0 { n } else { len };
            // vertices c+1 ..= next form the path
            let path_len = len - 1;
            let alternating = (0..len).all(|t| spoke[(c + 1 + t) % n] == (t % 2 == 0));
            if path_len % 2 != 0 || !alternating {
                ok = false;
                break;
            }
            parts.push(HalfBiwheelSpec { path_length: path_len });
        }
        if ok {
            out.push(FamilySpec::G1(G1Spec { parts }));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Vertices of a connected 2-regular graph in cyclic order.
fn cycle_order(c: &Graph) -> Option<Vec<VertexId>> {
    let start = c.vertices().next()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = c.neighbors(start)[0];
    while cur != start {
        order.push(cur);
        let nbrs = c.neighbors(cur);
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
        if order.len() > c.order() {
            return None;
        }
    }
    Some(order)
}

/// Generalized prisms, double half biwheels and hexagon half biwheels: the
/// removable doubletons split the graph into the blocks.
fn doubleton_candidates(g: &Graph) -> Result<Vec<FamilySpec>> {
    if !matching::is_matching_covered(g) {
        return Ok(Vec::new());
    }
    let doubletons = matching::removable_doubletons(g)?;
    let k = doubletons.len();
    if k < 2 {
        return Ok(Vec::new());
    }
    let all: Vec<EdgeId> = doubletons.iter().flat_map(|&(a, b)| [a, b]).collect();
    let rest = g.without_edges(&all);
    let comps = rest.components();
    let mut which = vec![usize::MAX; g.vertex_bound()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            which[v] = i;
        }
    }
    let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    let mut out = Vec::new();
    if k == 2 && comps.len() == 2 {
        let (a, b) = (sizes[0], sizes[1]);
        for (x, y) in [(a, b), (b, a)] {
            if x >= 4 && y >= 4 && x % 2 == 0 && y % 2 == 0 {
                out.push(FamilySpec::G2(G2Spec {
                    first: HalfBiwheelSpec { path_length: x - 2 },
                    second: HalfBiwheelSpec { path_length: y - 2 },
                }));
            }
        }
        for (i, &s) in sizes.iter().enumerate() {
            let other = sizes[1 - i];
            let hexagon = comps[i].len() == 6 && comps[i].iter().all(|&v| rest.degree(v) == 2);
            if hexagon && s == 6 && other >= 2 && other.is_multiple_of(2) {
                out.push(FamilySpec::G3(HalfBiwheelSpec { path_length: other - 2 }));
            }
        }
    }
    if k >= 3 && k % 2 == 1 && comps.len() == k {
        // Components in cyclic order along the doubletons.
        let mut links: Vec<Vec<usize>> = vec![Vec::new(); k];
        for &(a, b) in &doubletons {
            let (a1, a2) = g.endpoints(a).expect("live");
            let (b1, b2) = g.endpoints(b).expect("live");
            let pa = pair(which[a1], which[a2]);
            if pa != pair(which[b1], which[b2]) || pa.0 == pa.1 {
                return Ok(out);
            }
            links[pa.0].push(pa.1);
            links[pa.1].push(pa.0);
        }
        if links.iter().any(|l| l.len() != 2) {
            return Ok(out);
        }
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        loop {
            let next = if links[cur][0] != prev {
                links[cur][0]
            } else {
                links[cur][1]
            };
            if next == 0 {
                break;
            }
            if order.len() == k {
                return Ok(out);
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != k {
            return Ok(out);
        }
        let lens: Vec<usize> = order.iter().map(|&c| sizes[c]).collect();
        if lens.iter().any(|&s| s < 2 || s % 2 == 1) {
            return Ok(out);
        }
        let free: Vec<usize> = (0..k).filter(|&i| lens[i] > 2).collect();
        for bits in 0u64..(1u64 << free.len()) {
            let mut parts: Vec<G0Part> = lens
                .iter()
                .map(|&s| G0Part {
                    path_length: s - 2,
                    hub_in_a: true,
                })
                .collect();
            for (t, &i) in free.iter().enumerate() {
                parts[i].hub_in_a = bits >> t & 1 == 0;
            }
            out.push(FamilySpec::G0(G0Spec { parts }));
        }
    }
    Ok(out)
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Every family certificate `g` admits (at most one, as the families are
/// disjoint; returning all of them lets tests check that).
pub fn recognize_all(g: &Graph) -> Result<Vec<FamilyCertificate>> {
    let mut out: Vec<FamilyCertificate> = Vec::new();
    for spec in candidate_specs(g)? {
        if out.iter().any(|c| c.tag == spec.tag()) {
            continue;
        }
        if let Some(c) = certify(g, &spec)? {
            out.push(c);
        }
    }
    out.sort_by_key(|c| c.tag);
    Ok(out)
}

/// The family certificate of `g`, if it is a member of one of the four
/// families.
pub fn recognize_family(g: &Graph) -> Result<Option<FamilyCertificate>> {
    for spec in candidate_specs(g)? {
        if let Some(c) = certify(g, &spec)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// An even cycle of `g - w` through `x`, first in canonical order.
pub fn family_even_cycle_probe(
    g: &Graph,
    cert: &FamilyCertificate,
    x: VertexId,
    w: VertexId,
) -> Result<Option<CycleWitness>> {
    cert.validate(g)?;
    if !g.has_vertex(x) || g.degree(x) != 3 {
        return Err(Error::pre("probe vertex must be cubic"));
    }
    if g.multiplicity(x, w) == 0 {
        return Err(Error::pre("second vertex must be a neighbour of the first"));
    }
    let h = g.without_vertices(&[w]);
    let d = Dense::new(&h)?;
    let bit = 1u64 << d.index[x];
    let mut found = Vec::new();
    let _ = cycles::for_each_cycle(&d, Parity::Even, |p, e, mask| {
        if mask & bit != 0 {
            found.push(cycles::witness(&d, p, e));
        }
        ControlFlow::Continue(())
    });
    cycles::sort_cycles(&mut found);
    Ok(found.into_iter().next())
}

/// Whether the even-cycle properties of the families promise an even cycle
/// of `g - w` through the cubic vertex `x`.
pub fn even_cycle_promised(g: &Graph, cert: &FamilyCertificate, x: VertexId, w: VertexId) -> bool {
    let block_of = |v: VertexId| cert.parts.iter().position(|p| p.contains(&v));
    let outside_or_degree_two = |x: VertexId, w: VertexId| {
        let bx = cert.parts.iter().position(|p| p.contains(&x));
        let same = bx.is_some_and(|i| cert.parts[i].contains(&w));
        !same || g.degree(w) == 2
    };
    match cert.tag {
        FamilyTag::G0 | FamilyTag::G2 => outside_or_degree_two(x, w),
        FamilyTag::G3 => block_of(x) == Some(0) || outside_or_degree_two(x, w),
        FamilyTag::G1 => {
            let h = cert.roles["h"];
            if g.order() == 4 || w == h {
                return false;
            }
            !g1_exception(g, cert, x, w)
        }
    }
}

/// The generalized-wheel configuration without such a cycle: three
/// connectors, and both `x` and `w` isolated once the connectors and the
/// hub are deleted.
pub fn g1_exception(g: &Graph, cert: &FamilyCertificate, x: VertexId, w: VertexId) -> bool {
    let h = cert.roles["h"];
    let e3: BTreeSet<EdgeId> = cert.connectors.values().copied().collect();
    let isolated = |v: VertexId| g.incident(v).iter().all(|&(e, u)| e3.contains(&e) || u == h);
    e3.len() == 3 && isolated(x) && isolated(w)
}

/// Every spec of the given family with at most `max_order` vertices, one per
/// rotation and reflection class of the block sequence.
pub fn specs_up_to(tag: FamilyTag, max_order: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match tag {
        FamilyTag::G0 => {
            let mut k = 3;
            while 2 * k <= max_order {
                for lens in even_tuples(k, max_order - 2 * k) {
                    let free: Vec<usize> = (0..k).filter(|&i| lens[i] > 0).collect();
                    for bits in 0u64..(1u64 << free.len()) {
                        let mut parts: Vec<G0Part> = lens
                            .iter()
                            .map(|&l| G0Part {
                                path_length: l,
                                hub_in_a: true,
                            })
                            .collect();
                        for (t, &i) in free.iter().enumerate() {
                            parts[i].hub_in_a = bits >> t & 1 == 0;
                        }
                        if is_dihedral_min(&parts) {
                            out.push(FamilySpec::G0(G0Spec { parts }));
                        }
                    }
                }
                k += 2;
            }
        }
        FamilyTag::G1 => {
            let mut k = 3;
            while k < max_order {
                for lens in even_tuples(k, max_order - 1 - k) {
                    if is_dihedral_min(&lens) {
                        let parts = lens.into_iter().map(|l| HalfBiwheelSpec { path_length: l }).collect();
                        out.push(FamilySpec::G1(G1Spec { parts }));
                    }
                }
                k += 2;
            }
        }
        FamilyTag::G2 => {
            let mut a = 2;
            while a + 2 + 4 <= max_order {
                let mut b = a;
                while a + b + 4 <= max_order {
                    out.push(FamilySpec::G2(G2Spec {
                        first: HalfBiwheelSpec { path_length: a },
                        second: HalfBiwheelSpec { path_length: b },
                    }));
                    b += 2;
                }
                a += 2;
            }
        }
        FamilyTag::G3 => {
            let mut l = 0;
            while l + 8 <= max_order {
                out.push(FamilySpec::G3(HalfBiwheelSpec { path_length: l }));
                l += 2;
            }
        }
    }
    out
}

/// All length-`k` tuples of even numbers with sum at most `budget`.
fn even_tuples(k: usize, budget: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let mut l = 0;
        while l <= budget {
            cur.push(l);
            rec(k, budget - l, cur, out);
            cur.pop();
            l += 2;
        }
    }
    let mut out = Vec::new();
    rec(k, budget, &mut Vec::new(), &mut out);
    out
}

fn is_dihedral_min<T: Ord + Clone>(s: &[T]) -> bool {
    let k = s.len();
    let mut rev: Vec<T> = s.to_vec();
    rev.reverse();
    (0..k).all(|r| {
        let rot: Vec<T> = (0..k).map(|i| s[(i + r) % k].clone()).collect();
        let rrot: Vec<T> = (0..k).map(|i| rev[(i + r) % k].clone()).collect();
        s <= rot.as_slice() && s <= rrot.as_slice()
    })
}
