//! The JSON certificate document. Field order is fixed by the struct layout,
//! so identical inputs serialize to identical bytes.

use serde::Serialize;

use crate::criteria::{Certificate, CriterionOutcome, Hypothesis, Theorem};
use crate::poly::Polynomial;
use crate::root_bounds::{RootBoundMethod, RootBoundVerdict};

pub const TOOL_VERSION: &str = concat!("irrcert ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateDocument {
    pub input: String,
    pub primitive_part: String,
    pub content: String,
    pub outcome: OutcomeDoc,
    pub theorem: Option<Theorem>,
    pub witnesses: WitnessDoc,
    pub root_proof: Option<RootProofDoc>,
    pub hypothesis_trace: Vec<Hypothesis>,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum OutcomeDoc {
    Irreducible,
    Reducible { unit: String, factors: Vec<String> },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct WitnessDoc {
    pub p: Option<u64>,
    pub k: Option<u32>,
    pub d: Option<String>,
    pub j: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootProofDoc {
    pub method: RootBoundMethod,
    pub radius: String,
    pub verdict: RootBoundVerdict,
}

impl CertificateDocument {
    pub fn new(input: &Polynomial, outcome: &CriterionOutcome) -> Self {
        let (content, primitive_part) = match input.primitive_part() {
            Ok((c, pp)) => (c.to_string(), pp.to_string()),
            Err(_) => ("undefined".to_string(), "0".to_string()),
        };
        let mut doc = CertificateDocument {
            input: input.to_string(),
            primitive_part,
            content,
            outcome: OutcomeDoc::Irreducible,
            theorem: None,
            witnesses: WitnessDoc::default(),
            root_proof: None,
            hypothesis_trace: Vec::new(),
            tool_version: TOOL_VERSION.to_string(),
        };
        match outcome {
            CriterionOutcome::Irreducible(cert) => doc.fill_certificate(cert),
            CriterionOutcome::Reducible(w) => {
                doc.outcome = OutcomeDoc::Reducible {
                    unit: w.unit.to_string(),
                    factors: w.factors.iter().map(ToString::to_string).collect(),
                };
            }
            CriterionOutcome::Inconclusive { reason, trace } => {
                doc.outcome = OutcomeDoc::Inconclusive {
                    reason: reason.clone(),
                };
                doc.hypothesis_trace = trace.clone();
            }
        }
        doc
    }

    fn fill_certificate(&mut self, cert: &Certificate) {
        self.outcome = OutcomeDoc::Irreducible;
        self.theorem = Some(cert.theorem);
        self.witnesses = WitnessDoc {
            p: Some(cert.p),
            k: Some(cert.k),
            d: cert.d.as_ref().map(ToString::to_string),
            j: cert.j,
        };
        self.root_proof = cert.root_proof.as_ref().map(|rp| RootProofDoc {
            method: rp.method,
            radius: rp.radius.to_string(),
            verdict: rp.verdict,
        });
        self.hypothesis_trace = cert.hypothesis_trace.clone();
    }

    /// Pretty JSON terminated by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
