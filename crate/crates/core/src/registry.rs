//! Built-in field polynomials and published resource figures.
//!
//! Each constant-multiplication entry records the count reported for
//! multiplication by `1 + x^⌈n/2⌉`, the constant the field multiplier uses.

use crate::gf2poly::{parse_modulus, ModulusSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModulusEntry {
    pub degree: usize,
    pub exponents: &'static str,
    /// Where the polynomial was taken from.
    pub source: &'static str,
    pub published_cnot: usize,
    pub published_depth: usize,
}

impl ModulusEntry {
    pub fn modulus(&self) -> ModulusSpec {
        parse_modulus(self.exponents).expect("registry entries are valid")
    }
}

pub const CONSTMULT_TABLE: &[ModulusEntry] = &[
    ModulusEntry { degree: 4, exponents: "4,1,0", source: "ehcc", published_cnot: 5, published_depth: 4 },
    ModulusEntry { degree: 8, exponents: "8,4,3,1,0", source: "ehcc", published_cnot: 20, published_depth: 14 },
    ModulusEntry { degree: 16, exponents: "16,5,3,1,0", source: "ehcc", published_cnot: 47, published_depth: 30 },
    ModulusEntry { degree: 32, exponents: "32,7,3,2,0", source: "ehcc", published_cnot: 133, published_depth: 93 },
    ModulusEntry { degree: 64, exponents: "64,4,3,1,0", source: "ehcc", published_cnot: 264, published_depth: 182 },
    ModulusEntry { degree: 127, exponents: "127,1,0", source: "ehcc", published_cnot: 396, published_depth: 293 },
    ModulusEntry { degree: 128, exponents: "128,7,2,1,0", source: "ehcc", published_cnot: 626, published_depth: 443 },
    ModulusEntry { degree: 163, exponents: "163,7,6,3,0", source: "fips-186", published_cnot: 740, published_depth: 975 },
    ModulusEntry { degree: 163, exponents: "163,89,74,15,0", source: "banegas-2018", published_cnot: 1885, published_depth: 1646 },
    ModulusEntry { degree: 233, exponents: "233,74,0", source: "fips-186", published_cnot: 3319, published_depth: 2976 },
    ModulusEntry { degree: 256, exponents: "256,10,5,2,0", source: "ehcc", published_cnot: 1401, published_depth: 1030 },
    ModulusEntry { degree: 283, exponents: "283,12,7,5,0", source: "fips-186", published_cnot: 2117, published_depth: 1700 },
    ModulusEntry { degree: 283, exponents: "283,160,123,37,0", source: "banegas-2018", published_cnot: 6785, published_depth: 6368 },
    ModulusEntry { degree: 571, exponents: "571,10,5,2,0", source: "fips-186", published_cnot: 4027, published_depth: 3177 },
    ModulusEntry { degree: 571, exponents: "571,353,218,135,0", source: "banegas-2018", published_cnot: 33182, published_depth: 32331 },
    ModulusEntry { degree: 1024, exponents: "1024,19,6,1,0", source: "seroussi-1998", published_cnot: 8147, published_depth: 6624 },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModmultEntry {
    pub degree: usize,
    pub exponents: &'static str,
    pub schoolbook_tof: usize,
    pub published_tof: usize,
    pub published_cnot: usize,
    pub published_depth: usize,
}

impl ModmultEntry {
    pub fn modulus(&self) -> ModulusSpec {
        parse_modulus(self.exponents).expect("registry entries are valid")
    }
}

/// Field multipliers, each over the cheapest registered polynomial of its degree.
pub const MODMULT_TABLE: &[ModmultEntry] = &[
    ModmultEntry { degree: 2, exponents: "2,1,0", schoolbook_tof: 4, published_tof: 3, published_cnot: 9, published_depth: 9 },
    ModmultEntry { degree: 4, exponents: "4,1,0", schoolbook_tof: 16, published_tof: 9, published_cnot: 44, published_depth: 32 },
    ModmultEntry { degree: 8, exponents: "8,4,3,1,0", schoolbook_tof: 64, published_tof: 27, published_cnot: 200, published_depth: 124 },
    ModmultEntry { degree: 16, exponents: "16,5,3,1,0", schoolbook_tof: 256, published_tof: 81, published_cnot: 678, published_depth: 365 },
    ModmultEntry { degree: 32, exponents: "32,7,3,2,0", schoolbook_tof: 1024, published_tof: 243, published_cnot: 2238, published_depth: 1110 },
    ModmultEntry { degree: 64, exponents: "64,4,3,1,0", schoolbook_tof: 4096, published_tof: 729, published_cnot: 6896, published_depth: 3129 },
    ModmultEntry { degree: 127, exponents: "127,1,0", schoolbook_tof: 16129, published_tof: 2185, published_cnot: 20632, published_depth: 8769 },
    ModmultEntry { degree: 128, exponents: "128,7,2,1,0", schoolbook_tof: 16384, published_tof: 2187, published_cnot: 21272, published_depth: 9142 },
    ModmultEntry { degree: 163, exponents: "163,7,6,3,0", schoolbook_tof: 26569, published_tof: 4387, published_cnot: 37168, published_depth: 17906 },
    ModmultEntry { degree: 233, exponents: "233,74,0", schoolbook_tof: 54289, published_tof: 6323, published_cnot: 63655, published_depth: 29530 },
    ModmultEntry { degree: 256, exponents: "256,10,5,2,0", schoolbook_tof: 65536, published_tof: 6561, published_cnot: 64706, published_depth: 26725 },
    ModmultEntry { degree: 283, exponents: "283,12,7,5,0", schoolbook_tof: 80089, published_tof: 10273, published_cnot: 89620, published_depth: 41548 },
    ModmultEntry { degree: 571, exponents: "571,10,5,2,0", schoolbook_tof: 326041, published_tof: 31171, published_cnot: 270940, published_depth: 121821 },
    ModmultEntry { degree: 1024, exponents: "1024,19,6,1,0", schoolbook_tof: 1048576, published_tof: 59049, published_cnot: 591942, published_depth: 234053 },
];

/// Registered polynomials of the given degree, in table order.
pub fn moduli_of_degree(degree: usize) -> Vec<&'static ModulusEntry> {
    CONSTMULT_TABLE.iter().filter(|e| e.degree == degree).collect()
}

/// Looks up a registered polynomial by degree and source tag.
pub fn lookup(degree: usize, source: &str) -> Option<&'static ModulusEntry> {
    CONSTMULT_TABLE
        .iter()
        .find(|e| e.degree == degree && e.source == source)
}

/// The polynomial the field-multiplier table uses for a degree.
pub fn default_modulus(degree: usize) -> Option<ModulusSpec> {
    MODMULT_TABLE
        .iter()
        .find(|e| e.degree == degree)
        .map(ModmultEntry::modulus)
}
