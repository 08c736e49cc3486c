//! JSON wire formats for colorings, certificates, chromatic-number
//! results, and tightness reports. All rationals are serialized as
//! `"numerator/denominator"` strings so round-trips are exact.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::circle::Coloring;
use crate::colorer::Certificate;
use crate::error::{Error, Result};
use crate::graph::SwitchSet;
use crate::rational::{fmt_ratio, parse_ratio};
use crate::solver::{ChiC, TightnessReport};

/// `{"r": "8/3", "f": ["0/1", "1/1", ...]}`; `f` is indexed by vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringJson {
    pub r: String,
    pub f: Vec<String>,
}

impl ColoringJson {
    pub fn from_coloring(c: &Coloring) -> Result<ColoringJson> {
        if !c.covers(c.len()) {
            return Err(Error::DomainMismatch(
                "only dense colorings serialize to JSON".into(),
            ));
        }
        Ok(ColoringJson {
            r: fmt_ratio(c.r()),
            f: c.points().values().map(fmt_ratio).collect(),
        })
    }

    pub fn to_coloring(&self) -> Result<Coloring> {
        let bad = |s: &str| Error::Parse { line: 0, msg: format!("bad rational `{s}`") };
        let r = parse_ratio(&self.r).ok_or_else(|| bad(&self.r))?;
        let f = self
            .f
            .iter()
            .map(|s| parse_ratio(s).ok_or_else(|| bad(s)))
            .collect::<Result<Vec<_>>>()?;
        Coloring::dense(r, f)
    }
}

/// `{"switch_set": [1, 4], "coloring": {...}}`. The coloring is valid for
/// the graph switched at `switch_set`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub switch_set: Vec<usize>,
    pub coloring: ColoringJson,
}

impl CertificateJson {
    pub fn from_certificate(cert: &Certificate) -> Result<CertificateJson> {
        Ok(CertificateJson {
            switch_set: cert.switch_set.iter().collect(),
            coloring: ColoringJson::from_coloring(&cert.coloring)?,
        })
    }

    pub fn to_certificate(&self) -> Result<Certificate> {
        Ok(Certificate {
            switch_set: SwitchSet::from_iter(self.switch_set.iter().copied()),
            coloring: self.coloring.to_coloring()?,
        })
    }
}

/// Result of a chromatic-number computation. `chi_c` is `"p/q"` in lowest
/// terms or `"inf"`; `p`/`q` give the even-numerator grid representative
/// and are absent for `"inf"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChiCJson {
    pub chi_c: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ColoringJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tightness: Option<TightnessJson>,
}

impl ChiCJson {
    pub fn from_result(result: &ChiC, tightness: Option<&TightnessReport>) -> Result<ChiCJson> {
        match result {
            ChiC::Infinite => Ok(ChiCJson {
                chi_c: "inf".into(),
                p: None,
                q: None,
                witness: None,
                tightness: None,
            }),
            ChiC::Finite { value, p, q, witness } => Ok(ChiCJson {
                chi_c: fmt_ratio(value),
                p: Some(*p),
                q: Some(*q),
                witness: Some(ColoringJson::from_coloring(witness)?),
                tightness: tightness.map(TightnessJson::from_report).transpose()?,
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TightnessJson {
    pub tight_edges: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<TightCycleJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TightCycleJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub increments: Vec<String>,
    pub positive_edges: usize,
    pub negative_edges: usize,
    pub winding: i64,
    pub pm_sum: i64,
    pub recovered_r: String,
    pub hamiltonian_on: usize,
}

impl TightnessJson {
    pub fn from_report(report: &TightnessReport) -> Result<TightnessJson> {
        let cycle = match &report.cycle {
            None => None,
            Some(c) => Some(TightCycleJson {
                vertices: c.vertices.clone(),
                edges: c.edges.clone(),
                increments: c.increments.iter().map(fmt_ratio).collect(),
                positive_edges: c.positive_edges,
                negative_edges: c.negative_edges,
                winding: c.winding.to_i64().expect("small winding"),
                pm_sum: c.pm_sum.to_i64().expect("small sum"),
                recovered_r: fmt_ratio(&c.recovered_r),
                hamiltonian_on: c.vertices.len(),
            }),
        };
        Ok(TightnessJson { tight_edges: report.tight_edges.clone(), cycle })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn coloring_round_trip() {
        let c = Coloring::dense(rat(8, 3), vec![int(0), int(1), int(2), rat(1, 3)]).unwrap();
        let j = ColoringJson::from_coloring(&c).unwrap();
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(
            s,
            r#"{"r":"8/3","f":["0/1","1/1","2/1","1/3"]}"#
        );
        let back: ColoringJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_coloring().unwrap(), c);
    }

    #[test]
    fn certificate_round_trip() {
        let cert = Certificate {
            switch_set: SwitchSet::from_iter([1, 3]),
            coloring: Coloring::dense(int(3), vec![int(0), int(1)]).unwrap(),
        };
        let j = CertificateJson::from_certificate(&cert).unwrap();
        let s = serde_json::to_string(&j).unwrap();
        let back: CertificateJson = serde_json::from_str(&s).unwrap();
        let cert2 = back.to_certificate().unwrap();
        assert_eq!(cert2.coloring, cert.coloring);
        assert_eq!(cert2.switch_set.iter().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn bad_ratio_reports_parse_error() {
        let j = ColoringJson { r: "8/3".into(), f: vec!["x".into()] };
        assert!(j.to_coloring().is_err());
    }

    #[test]
    fn chi_c_json_shapes() {
        use crate::generators;
        use crate::solver::{analyze_tightness, chi_c};
        let g = generators::cycle(
            4,
            &[
                crate::graph::Sign::Positive,
                crate::graph::Sign::Positive,
                crate::graph::Sign::Positive,
                crate::graph::Sign::Negative,
            ],
        )
        .unwrap();
        let result = chi_c(&g);
        let witness = match &result {
            ChiC::Finite { witness, .. } => witness.clone(),
            ChiC::Infinite => panic!(),
        };
        let report = analyze_tightness(&g, &witness).unwrap();
        let j = ChiCJson::from_result(&result, Some(&report)).unwrap();
        assert_eq!(j.chi_c, "8/3");
        assert_eq!((j.p, j.q), (Some(8), Some(3)));
        let t = j.tightness.unwrap();
        assert_eq!(t.cycle.unwrap().recovered_r, "8/3");

        let mut loopy = crate::graph::SignedGraph::new(1);
        loopy.add_edge(0, 0, crate::graph::Sign::Positive).unwrap();
        let j = ChiCJson::from_result(&chi_c(&loopy), None).unwrap();
        assert_eq!(j.chi_c, "inf");
        assert!(j.p.is_none());
    }
}
