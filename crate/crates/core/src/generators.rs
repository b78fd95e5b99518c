//! The oriented simplex, cube and glob as finite complexes.
//!
//! Element names:
//! - simplex: the sorted vertex labels concatenated, e.g. `012` (labels are
//!   joined with `.` once the vertex set reaches 10);
//! - cube: a word over `-`, `o`, `+` (`o` marks a free coordinate), e.g. `o-`;
//! - glob: `-k` or `+k` for the two elements of dimension `k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Complex, ElementRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Simplex,
    Cube,
    Glob,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Simplex => "simplex",
            Family::Cube => "cube",
            Family::Glob => "glob",
        })
    }
}

impl FromStr for Family {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simplex" => Ok(Family::Simplex),
            "cube" => Ok(Family::Cube),
            "glob" => Ok(Family::Glob),
            other => Err(GeneratorError::UnknownFamily(other.to_string())),
        }
    }
}

/// Largest `n` accepted per family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub simplex: usize,
    pub cube: usize,
    pub glob: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            simplex: 6,
            cube: 4,
            glob: 32,
        }
    }
}

impl Caps {
    fn get(&self, family: Family) -> usize {
        match family {
            Family::Simplex => self.simplex,
            Family::Cube => self.cube,
            Family::Glob => self.glob,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{family}({n}) exceeds the size cap {cap}")]
    CapExceeded {
        family: Family,
        n: usize,
        cap: usize,
    },
    #[error("unknown generator family `{0}` (expected simplex, cube or glob)")]
    UnknownFamily(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
}

impl GeneratorSpec {
    pub fn build(&self, caps: &Caps) -> Result<Complex, GeneratorError> {
        let cap = caps.get(self.family);
        if self.n > cap {
            return Err(GeneratorError::CapExceeded {
                family: self.family,
                n: self.n,
                cap,
            });
        }
        let records = match self.family {
            Family::Simplex => simplex_records(self.n),
            Family::Cube => cube_records(self.n),
            Family::Glob => glob_records(self.n),
        };
        Ok(Complex::new(records).expect("generated faces are always present"))
    }
}

pub fn generate(family: Family, n: usize) -> Result<Complex, GeneratorError> {
    GeneratorSpec { family, n }.build(&Caps::default())
}

/// The `n`-simplex on vertices `0..=n`.
pub fn simplex(n: usize) -> Result<Complex, GeneratorError> {
    generate(Family::Simplex, n)
}

/// The `n`-cube.
pub fn cube(n: usize) -> Result<Complex, GeneratorError> {
    generate(Family::Cube, n)
}

/// The `n`-skeleton of the ω-glob: two elements in each dimension `0..=n`.
pub fn glob(n: usize) -> Result<Complex, GeneratorError> {
    generate(Family::Glob, n)
}

fn simplex_records(n: usize) -> Vec<ElementRecord> {
    let sep = if n >= 10 { "." } else { "" };
    let name = |verts: &[usize]| -> String {
        verts
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    };
    let mut records = Vec::new();
    for mask in 1u64..(1u64 << (n + 1)) {
        let verts: Vec<usize> = (0..=n).filter(|v| mask >> v & 1 == 1).collect();
        let (mut minus, mut plus) = (Vec::new(), Vec::new());
        if verts.len() > 1 {
            for i in 0..verts.len() {
                let mut face = verts.clone();
                face.remove(i);
                // x⁻ deletes odd positions, x⁺ even ones.
                if i % 2 == 1 {
                    minus.push(name(&face));
                } else {
                    plus.push(name(&face));
                }
            }
        }
        records.push(ElementRecord {
            id: name(&verts),
            dim: verts.len() - 1,
            minus,
            plus,
        });
    }
    records
}

fn cube_records(n: usize) -> Vec<ElementRecord> {
    const SYMBOLS: [char; 3] = ['-', 'o', '+'];
    let mut records = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let mut word = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            word.push(SYMBOLS[c % 3]);
            c /= 3;
        }
        word.reverse();
        let free: Vec<usize> = (0..n).filter(|&i| word[i] == 'o').collect();
        let (mut minus, mut plus) = (Vec::new(), Vec::new());
        for (k, &pos) in free.iter().enumerate() {
            // the i-th free coordinate, i = k + 1 counted from the left
            let odd = k % 2 == 0;
            let mut down = word.clone();
            down[pos] = if odd { '-' } else { '+' };
            let mut up = word.clone();
            up[pos] = if odd { '+' } else { '-' };
            minus.push(down.into_iter().collect());
            plus.push(up.into_iter().collect());
        }
        records.push(ElementRecord {
            id: word.into_iter().collect(),
            dim: free.len(),
            minus,
            plus,
        });
    }
    records
}

fn glob_records(n: usize) -> Vec<ElementRecord> {
    let mut records = Vec::new();
    for k in 0..=n {
        for sign in ['-', '+'] {
            let (minus, plus) = if k == 0 {
                (vec![], vec![])
            } else {
                (vec![format!("-{}", k - 1)], vec![format!("+{}", k - 1)])
            };
            records.push(ElementRecord {
                id: format!("{sign}{k}"),
                dim: k,
                minus,
                plus,
            });
        }
    }
    records
}
