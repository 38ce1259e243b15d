//! JSON file formats for lattices and posets.
//!
//! Both share one schema:
//!
//! ```json
//! {"elements": ["0", "a", "b", "1"],
//!  "covers": [["0","a"], ["0","b"], ["a","1"], ["b","1"]]}
//! ```
//!
//! Covers are `[lower, upper]` pairs. Emission writes the transitive
//! reduction, so parse/emit round-trips.

use serde::{Deserialize, Serialize};

use crate::birkhoff::Poset;
use crate::error::Result;
use crate::lattice::Lattice;

#[derive(Debug, Serialize, Deserialize)]
pub struct OrderFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl OrderFile {
    pub fn from_lattice(lat: &Lattice) -> OrderFile {
        OrderFile {
            elements: lat.names().to_vec(),
            covers: lat
                .covers()
                .iter()
                .map(|&(lo, hi)| (lat.name(lo).to_string(), lat.name(hi).to_string()))
                .collect(),
        }
    }

    pub fn from_poset(p: &Poset) -> OrderFile {
        OrderFile {
            elements: p.names().to_vec(),
            covers: p
                .covers()
                .iter()
                .map(|&(lo, hi)| (p.name(lo).to_string(), p.name(hi).to_string()))
                .collect(),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        let names: Vec<&str> = self.elements.iter().map(|s| s.as_str()).collect();
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Lattice::from_covers(&names, &covers)
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let names: Vec<&str> = self.elements.iter().map(|s| s.as_str()).collect();
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Poset::from_covers(&names, &covers)
    }
}

pub fn lattice_from_json(text: &str) -> Result<Lattice> {
    let file: OrderFile = serde_json::from_str(text)?;
    file.to_lattice()
}

pub fn lattice_to_json(lat: &Lattice) -> String {
    serde_json::to_string_pretty(&OrderFile::from_lattice(lat)).expect("serializable")
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    let file: OrderFile = serde_json::from_str(text)?;
    file.to_poset()
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string_pretty(&OrderFile::from_poset(p)).expect("serializable")
}
