//! The end-to-end decision pipeline.
//!
//! Fast mode reduces the input to an irreducible graph `H` and classifies
//! `H`: `K2` is cycle-extendable, any other bipartite graph is not, and a
//! nonbipartite `H` is cycle-extendable exactly when it belongs to one of the
//! four families. A negative answer comes with an even cycle of the input
//! that is not conformal; it is found by the oracle on `H` and lifted back
//! through the reduction trace.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::cycles::CycleWitness;
use crate::error::{Error, Result};
use crate::families::{self, FamilyCertificate};
use crate::graph::Graph;
use crate::matching::{self, OracleVerdict};
use crate::planar;
use crate::reduction::{self, ReductionStep, ReductionTrace};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Fast,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "CE")]
    Ce,
    #[serde(rename = "NotCE")]
    NotCe,
    #[serde(rename = "NotApplicable")]
    NotApplicable,
}

/// What the irreducible graph turned out to be.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum TerminalClass {
    K2,
    BipartiteNonK2,
    Family { certificate: FamilyCertificate },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChain {
    pub trace: ReductionTrace,
    pub terminal: TerminalClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub mode: Mode,
    /// Absent in oracle mode and for inputs outside the theorem's scope.
    pub chain: Option<CertificateChain>,
    /// A non-conformal even cycle of the input, for `NotCE`.
    pub witness: Option<CycleWitness>,
    /// Why the input is out of scope, for `NotApplicable`.
    pub reason: Option<String>,
}

impl Decision {
    fn not_applicable(mode: Mode, reason: &str) -> Decision {
        Decision {
            verdict: Verdict::NotApplicable,
            mode,
            chain: None,
            witness: None,
            reason: Some(String::from(reason)),
        }
    }

    /// Re-checks the decision against `g` without trusting the recognizer:
    /// the trace must replay, a family certificate must replay onto the
    /// irreducible graph, and a witness must be a non-conformal even cycle.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(chain) = &self.chain {
            let h = chain.trace.replay(g)?;
            let ok = match (&chain.terminal, self.verdict) {
                (TerminalClass::K2, Verdict::Ce) => h.order() == 2 && h.size() == 1,
                (TerminalClass::Family { certificate }, Verdict::Ce) => certificate.validate(&h).is_ok(),
                (TerminalClass::BipartiteNonK2, Verdict::NotCe) => h.is_bipartite() && h.order() > 2,
                (TerminalClass::None, Verdict::NotCe) => true,
                _ => false,
            };
            if !ok {
                return Err(Error::internal("terminal class does not support the verdict"));
            }
        }
        match (self.verdict, &self.witness) {
            (Verdict::NotCe, Some(c)) => check_witness(g, c),
            (Verdict::NotCe, None) => Err(Error::internal("negative decision without a witness")),
            (_, Some(_)) => Err(Error::internal("witness on a non-negative decision")),
            _ => Ok(()),
        }
    }
}

fn check_witness(g: &Graph, c: &CycleWitness) -> Result<()> {
    if !c.is_valid_in(g) || !c.even {
        return Err(Error::internal("witness is not an even cycle of the graph"));
    }
    if matching::is_conformal_subgraph(g, &c.vertices) {
        return Err(Error::internal("witness cycle is conformal"));
    }
    Ok(())
}

/// Decides cycle-extendability of a planar matching covered graph.
pub fn decide(g: &Graph, mode: Mode) -> Result<Decision> {
    decide_with(g, mode, true)
}

/// As [`decide`]; with `require_planar` off, oracle mode also runs on
/// non-planar input. Fast and both modes always require planarity.
pub fn decide_with(g: &Graph, mode: Mode, require_planar: bool) -> Result<Decision> {
    if !matching::is_matching_covered(g) {
        return Ok(Decision::not_applicable(mode, "graph is not matching covered"));
    }
    if (require_planar || mode != Mode::Oracle) && !planar::is_planar(g)? {
        return Ok(Decision::not_applicable(mode, "graph is not planar"));
    }
    match mode {
        Mode::Fast => fast(g),
        Mode::Oracle => oracle(g),
        Mode::Both => {
            let f = fast(g)?;
            let o = oracle(g)?;
            if f.verdict != o.verdict {
                let edges: Vec<String> = g.edges().map(|(_, u, v)| format!("{u} {v}")).collect();
                return Err(Error::Disagreement(format!(
                    "graph [{}]: fast says {:?}, oracle says {:?}",
                    edges.join(", "),
                    f.verdict,
                    o.verdict
                )));
            }
            Ok(Decision { mode: Mode::Both, ..f })
        }
    }
}

fn oracle(g: &Graph) -> Result<Decision> {
    let (verdict, witness) = match matching::brute_force_cycle_extendable(g)? {
        OracleVerdict::CycleExtendable => (Verdict::Ce, None),
        OracleVerdict::NotCycleExtendable(c) => (Verdict::NotCe, Some(c)),
    };
    Ok(Decision {
        verdict,
        mode: Mode::Oracle,
        chain: None,
        witness,
        reason: None,
    })
}

fn fast(g: &Graph) -> Result<Decision> {
    let (h, trace) = reduction::to_irreducible(g)?;
    let terminal = if trace.k2_degenerate {
        TerminalClass::K2
    } else if h.is_bipartite() {
        TerminalClass::BipartiteNonK2
    } else {
        match families::recognize_family(&h)? {
            Some(certificate) => TerminalClass::Family { certificate },
            None => TerminalClass::None,
        }
    };
    let (verdict, witness) = match terminal {
        TerminalClass::K2 | TerminalClass::Family { .. } => (Verdict::Ce, None),
        _ => {
            let c = match matching::brute_force_cycle_extendable(&h)? {
                OracleVerdict::NotCycleExtendable(c) => c,
                OracleVerdict::CycleExtendable => {
                    return Err(Error::Disagreement(String::from(
                        "irreducible graph outside the families passed the oracle",
                    )))
                }
            };
            (Verdict::NotCe, Some(lift_witness(g, &trace, &c)?))
        }
    };
    Ok(Decision {
        verdict,
        mode: Mode::Fast,
        chain: Some(CertificateChain { trace, terminal }),
        witness,
        reason: None,
    })
}

/// Carries a non-conformal even cycle of the reduced graph back to `g`.
pub fn lift_witness(g: &Graph, trace: &ReductionTrace, c: &CycleWitness) -> Result<CycleWitness> {
    let lifted = lift_cycle(g, trace, c)?;
    check_witness(g, &lifted).map_err(|_| Error::internal("lifted witness does not validate"))?;
    Ok(lifted)
}

/// Carries any cycle of the reduced graph back to `g` by re-expanding every
/// series edge it uses, last reduction first. Parity is preserved.
pub fn lift_cycle(g: &Graph, trace: &ReductionTrace, c: &CycleWitness) -> Result<CycleWitness> {
    let mut edges: Vec<_> = c.edges.clone();
    for step in trace.steps.iter().rev() {
        if let ReductionStep::Series { removed, inserted, .. } = step {
            if let Some(i) = edges.iter().position(|e| e == inserted) {
                edges.splice(i..=i, removed.iter().copied());
            }
        }
    }
    CycleWitness::from_edge_set(g, &edges)
}
