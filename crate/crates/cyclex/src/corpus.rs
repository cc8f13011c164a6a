//! Labelled test corpora: exhaustive small graphs, random planar matching
//! covered graphs grown by ears, and family members.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::Path;

use cyclex_core::families::{self, FamilySpec, FamilyTag};
use cyclex_core::generate::{self, IsoSet};
use cyclex_core::recognizer::{self, Mode, TerminalClass, Verdict};
use cyclex_core::{decomposition, matching, planar, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::formats;

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Core(#[from] cyclex_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Format(#[from] formats::FormatError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusParams {
    /// Largest order of the exhaustive part; only even orders are kept.
    pub n_max: usize,
    /// Orders to sample random planar matching covered graphs at.
    #[serde(default)]
    pub sample_orders: Vec<usize>,
    /// Graphs per sampled order.
    #[serde(default)]
    pub sample_count: usize,
    #[serde(default)]
    pub seed: u64,
    /// Also include every family member up to this order.
    #[serde(default)]
    pub family_max_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    /// `graph6` for simple graphs, `edgelist` otherwise.
    pub format: String,
    pub payload: String,
    pub source: String,
    pub order: usize,
    pub size: usize,
    pub mcg: bool,
    pub planar: bool,
    /// Oracle verdict; only for matching covered graphs.
    pub ce: Option<bool>,
    pub b: Option<usize>,
    pub p: Option<usize>,
    /// Family of the irreducible reduction, for planar CE graphs.
    pub family: Option<FamilyTag>,
}

impl CorpusRecord {
    pub fn graph(&self) -> Result<Graph, formats::FormatError> {
        match self.format.as_str() {
            "graph6" => formats::parse_graph6(&self.payload),
            _ => formats::parse_edgelist(&self.payload),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub params: CorpusParams,
    pub records: Vec<CorpusRecord>,
}

/// Computes every label of `g`. Planar matching covered graphs are decided
/// in both modes, so a disagreement surfaces as an error here.
pub fn label(g: &Graph, source: &str) -> Result<CorpusRecord, CorpusError> {
    let (format, payload) = match formats::to_graph6(g) {
        Ok(s) => ("graph6", s),
        Err(_) => ("edgelist", formats::to_edgelist(g)),
    };
    let mcg = matching::is_matching_covered(g);
    let is_planar = g.is_connected() && planar::is_planar(g)?;
    let mut rec = CorpusRecord {
        format: String::from(format),
        payload,
        source: String::from(source),
        order: g.order(),
        size: g.size(),
        mcg,
        planar: is_planar,
        ce: None,
        b: None,
        p: None,
        family: None,
    };
    if !mcg {
        return Ok(rec);
    }
    let summary = decomposition::tight_cut_decomposition(g)?;
    rec.b = Some(summary.b);
    rec.p = Some(summary.p);
    if is_planar {
        let d = recognizer::decide(g, Mode::Both)?;
        rec.ce = Some(d.verdict == Verdict::Ce);
        if let Some(TerminalClass::Family { certificate }) = d.chain.map(|c| c.terminal) {
            rec.family = Some(certificate.tag);
        }
    } else {
        rec.ce = Some(matching::brute_force_cycle_extendable(g)?.is_ce());
    }
    Ok(rec)
}

/// Connected simple graphs of even order `2..=n_max`, one per isomorphism
/// class.
pub fn exhaustive(n_max: usize) -> Result<Vec<Graph>, CorpusError> {
    Ok(generate::connected_graphs_up_to(n_max)?
        .into_iter()
        .enumerate()
        .filter(|(i, _)| (i + 1) % 2 == 0)
        .flat_map(|(_, level)| level)
        .collect())
}

/// Random planar matching covered graphs on `n` vertices, pairwise
/// non-isomorphic. Each starts as an even cycle and grows by random ears of
/// length one or three; candidates that are not planar and matching covered
/// are discarded.
pub fn sample_planar_mcg(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>, CorpusError> {
    if n < 4 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let mut set = IsoSet::new();
    let attempts = count.saturating_mul(400).max(1000);
    for _ in 0..attempts {
        if set.len() >= count {
            break;
        }
        let g = grow(n, &mut rng)?;
        if g.order() == n && matching::is_matching_covered(&g) && planar::is_planar(&g)? {
            set.insert(g)?;
        }
    }
    Ok(set.into_graphs())
}

fn grow(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, CorpusError> {
    let start = 2 * rng.gen_range(2..=n / 2);
    let mut g = cyclex_core::catalog::cycle(start);
    let chords = rng.gen_range(0..=3);
    let mut added = 0;
    let mut guard = 0;
    while (g.order() < n || added < chords) && guard < 200 {
        guard += 1;
        let k = g.order();
        let (u, v) = (rng.gen_range(0..k), rng.gen_range(0..k));
        if u == v {
            continue;
        }
        if g.order() + 2 <= n && rng.gen_bool(0.7) {
            let a = g.add_vertex();
            let b = g.add_vertex();
            g.add_edge(u, a)?;
            g.add_edge(a, b)?;
            g.add_edge(b, v)?;
        } else if g.multiplicity(u, v) == 0 {
            g.add_edge(u, v)?;
            if g.order() == n {
                added += 1;
            }
        }
    }
    Ok(g)
}

/// Every member of the four families with at most `max_order` vertices.
pub fn family_members(max_order: usize) -> Result<Vec<(FamilySpec, Graph)>, CorpusError> {
    let mut out = Vec::new();
    for tag in [FamilyTag::G0, FamilyTag::G1, FamilyTag::G2, FamilyTag::G3] {
        for spec in families::specs_up_to(tag, max_order) {
            let g = spec.generate()?.graph;
            out.push((spec, g));
        }
    }
    Ok(out)
}

/// Builds and labels the corpus; labelling runs in parallel, the record
/// order is deterministic.
pub fn build(params: &CorpusParams) -> Result<CorpusManifest, CorpusError> {
    let mut graphs: Vec<(String, Graph)> = exhaustive(params.n_max)?
        .into_iter()
        .map(|g| (format!("exhaustive-{}", g.order()), g))
        .collect();
    let orders: BTreeSet<usize> = params.sample_orders.iter().copied().collect();
    for n in orders {
        for g in sample_planar_mcg(n, params.sample_count, params.seed)? {
            graphs.push((format!("sample-{n}"), g));
        }
    }
    for (spec, g) in family_members(params.family_max_order)? {
        graphs.push((format!("family-{}", serde_json::to_string(&spec)?), g));
    }
    let records = graphs
        .par_iter()
        .map(|(source, g)| label(g, source))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CorpusManifest {
        params: params.clone(),
        records,
    })
}

fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents)?;
    fs::rename(tmp, path)
}

/// Writes `manifest.json` plus `graphs.g6` and `graphs.el` (one payload per
/// graph, simple and multigraph records respectively).
pub fn write(dir: &Path, manifest: &CorpusManifest) -> Result<(), CorpusError> {
    fs::create_dir_all(dir)?;
    let mut g6 = String::new();
    let mut el = String::new();
    for r in &manifest.records {
        if r.format == "graph6" {
            g6.push_str(&r.payload);
            g6.push('\n');
        } else {
            el.push_str(&format!("# {}\n{}", r.source, r.payload));
        }
    }
    write_atomic(&dir.join("graphs.g6"), &g6)?;
    write_atomic(&dir.join("graphs.el"), &el)?;
    write_atomic(&dir.join("manifest.json"), &serde_json::to_string_pretty(manifest)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclex_core::catalog;

    #[test]
    fn k2_and_c4_labels() {
        let r = label(&catalog::k2(), "t").unwrap();
        assert_eq!((r.mcg, r.ce, r.b), (true, Some(true), Some(0)));
        let r = label(&catalog::cycle(4), "t").unwrap();
        assert_eq!(r.ce, Some(true));
        let r = label(&catalog::cube(), "t").unwrap();
        assert_eq!(r.ce, Some(false));
        assert_eq!(r.family, None);
    }

    #[test]
    fn samples_are_planar_matching_covered() {
        let gs = sample_planar_mcg(10, 10, 7).unwrap();
        assert_eq!(gs.len(), 10);
        for g in &gs {
            assert_eq!(g.order(), 10);
            assert!(matching::is_matching_covered(g) && planar::is_planar(g).unwrap());
        }
        assert_eq!(gs, sample_planar_mcg(10, 10, 7).unwrap());
    }
}
