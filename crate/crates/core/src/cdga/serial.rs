//! JSON form of a CDGA:
//! `{"generators": [{"name", "degree"}...], "differential": {name: [{"coeff": "p/q", "monomial": {name: exp}}]}}`.
//!
//! Generators and differential entries are written in canonical generator
//! order, terms in canonical monomial order, so writing a parsed document
//! reproduces it byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::Map;

use crate::cdga::parse::parse_rational;
use crate::cdga::{Cdga, Generator, GeneratorSpace, Monomial, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Map<String, serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CdgaJson {
    pub generators: Vec<GeneratorJson>,
    pub differential: Map<String, serde_json::Value>,
}

impl Polynomial {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        let space = self.space();
        self.terms()
            .map(|(m, c)| {
                let mut mono = Map::new();
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        mono.insert(space.generator(i).name().to_string(), e.into());
                    }
                }
                TermJson { coeff: c.to_string(), monomial: mono }
            })
            .collect()
    }

    pub fn from_json_terms(space: &std::sync::Arc<GeneratorSpace>, terms: &[TermJson]) -> Result<Polynomial> {
        let mut out = Polynomial::zero(space);
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            let mut term = Polynomial::constant(space, c);
            let mut ordered = Vec::new();
            for (name, e) in &t.monomial {
                let e = e
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("exponent of `{name}` is not a non-negative integer")))?;
                ordered.push((space.index_of(name)?, e as u32));
            }
            // monomials are read as canonical exponent vectors, independent of key order
            ordered.sort();
            let mut exps = vec![0u32; space.len()];
            for (i, e) in ordered {
                if space.is_odd(i) && e > 1 {
                    term = Polynomial::zero(space);
                }
                exps[i] += e;
            }
            term = &term * &Polynomial::term(space, Monomial::from_exponents(exps), num_traits::One::one());
            out = &out + &term;
        }
        Ok(out)
    }
}

impl Cdga {
    pub fn to_json(&self) -> CdgaJson {
        let space = self.space();
        let generators = space
            .generators()
            .iter()
            .map(|g| GeneratorJson { name: g.name().to_string(), degree: g.degree() })
            .collect();
        let mut differential = Map::new();
        for (i, g) in space.generators().iter().enumerate() {
            let d = self.d_generator(i);
            if !d.is_zero() {
                differential.insert(g.name().to_string(), serde_json::to_value(d.to_json_terms()).expect("serialisable"));
            }
        }
        CdgaJson { generators, differential }
    }

    pub fn from_json(doc: &CdgaJson) -> Result<Cdga> {
        let gens = doc
            .generators
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.degree))
            .collect::<Result<Vec<_>>>()?;
        let space = GeneratorSpace::new(gens)?;
        let mut diffs = Vec::new();
        for (name, terms) in &doc.differential {
            let terms: Vec<TermJson> = serde_json::from_value(terms.clone())?;
            diffs.push((name.clone(), Polynomial::from_json_terms(&space, &terms)?));
        }
        Cdga::new(space, diffs)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serialisable")
    }

    pub fn from_json_str(s: &str) -> Result<Cdga> {
        Cdga::from_json(&serde_json::from_str(s)?)
    }
}
