//! Problem instances: sets of distinct vectors over GF(2)^d, a target
//! vector, and a tuple length.
//!
//! Vectors are elements of GF(2)^d packed into machine words. Addition is
//! XOR. The text format is line oriented:
//!
//! ```text
//! d=2 k=3
//! t=00
//! 01
//! 10, 11
//! ```
//!
//! The first significant line declares the dimension and tuple length, the
//! second the target, and every further line lists one or more vectors
//! separated by commas. Bitstrings are most-significant-bit first and must
//! have exactly `d` characters. Blank lines and lines starting with `#` are
//! ignored.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Hard ceiling on the dimension. Tables of 2^d entries stop being a
/// sensible in-memory representation well before this.
pub const MAX_DIMENSION: usize = 30;

/// Default parse-time cap, overridable per call (and from the CLI).
pub const DEFAULT_DIMENSION_CAP: usize = 24;

/// A vector in GF(2)^d, packed little-endian into a `u32`: bit `i` of the
/// word is coordinate `i`, and coordinate 0 is the rightmost character of
/// the bitstring form.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GF2Vector(pub u32);

impl GF2Vector {
    pub const ZERO: GF2Vector = GF2Vector(0);

    /// The vector's position in a 2^d-entry table.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Vector addition over GF(2).
    #[inline]
    pub fn xor(self, other: GF2Vector) -> GF2Vector {
        GF2Vector(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Whether the coordinate-wise AND with `other` has odd weight. This is
    /// the GF(2) inner product, the sign that the transform attaches to the
    /// pair `(self, other)`.
    #[inline]
    pub fn odd_overlap(self, other: GF2Vector) -> bool {
        (self.0 & other.0).count_ones() % 2 == 1
    }

    /// Whether the vector fits in dimension `d`.
    #[inline]
    pub fn fits(self, d: usize) -> bool {
        d >= 32 || self.0 < 1u32 << d
    }

    /// Renders the vector as a `d`-character bitstring, most significant
    /// coordinate first.
    pub fn bitstring(self, d: usize) -> String {
        (0..d)
            .rev()
            .map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Parses a bitstring of exactly `d` characters.
    pub fn from_bitstring(s: &str, d: usize) -> std::result::Result<GF2Vector, String> {
        if s.len() != d {
            return Err(format!(
                "expected a bitstring of length {d}, got {:?} (length {})",
                s,
                s.len()
            ));
        }
        let mut value = 0u32;
        for c in s.chars() {
            value <<= 1;
            match c {
                '0' => {}
                '1' => value |= 1,
                other => return Err(format!("invalid bit {other:?} in {s:?}")),
            }
        }
        Ok(GF2Vector(value))
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Vector({:#b})", self.0)
    }
}

/// A validated counting instance: `m` distinct vectors in GF(2)^d, a target
/// `t`, and the maximum tuple length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    d: usize,
    vectors: Vec<GF2Vector>,
    target: GF2Vector,
    k: usize,
}

impl Instance {
    /// Builds an instance, checking that every vector fits in dimension `d`,
    /// that the vectors are pairwise distinct, and that `d` does not exceed
    /// [`MAX_DIMENSION`]. The vector order is preserved; counting results
    /// never depend on it.
    pub fn new(d: usize, vectors: Vec<GF2Vector>, target: GF2Vector, k: usize) -> Result<Instance> {
        if d > MAX_DIMENSION {
            return Err(Error::DimensionCap {
                d,
                cap: MAX_DIMENSION,
            });
        }
        if !target.fits(d) {
            return Err(Error::Invalid {
                reason: format!("target {} does not fit in dimension {d}", target.0),
            });
        }
        let mut seen = HashSet::with_capacity(vectors.len());
        for v in &vectors {
            if !v.fits(d) {
                return Err(Error::Invalid {
                    reason: format!("vector {} does not fit in dimension {d}", v.0),
                });
            }
            if !seen.insert(*v) {
                return Err(Error::Invalid {
                    reason: format!("vector {} appears twice", v.bitstring(d.max(1))),
                });
            }
        }
        Ok(Instance {
            d,
            vectors,
            target,
            k,
        })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn vectors(&self) -> &[GF2Vector] {
        &self.vectors
    }

    /// Number of vectors, usually called `m`.
    pub fn vector_count(&self) -> usize {
        self.vectors.len()
    }

    pub fn target(&self) -> GF2Vector {
        self.target
    }

    /// Maximum tuple length to count witnesses for.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Serializes back to the text format. Parsing the result yields an
    /// equal instance.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("d={} k={}\n", self.d, self.k));
        out.push_str(&format!("t={}\n", self.target.bitstring(self.d)));
        for v in &self.vectors {
            out.push_str(&v.bitstring(self.d));
            out.push('\n');
        }
        out
    }
}

/// Parse-time options. `dedupe` silently collapses repeated vectors instead
/// of failing; `dimension_cap` rejects instances whose declared `d` would
/// allocate more than the caller bargained for.
#[derive(Copy, Clone, Debug)]
pub struct ParseOptions {
    pub dedupe: bool,
    pub dimension_cap: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            dedupe: false,
            dimension_cap: DEFAULT_DIMENSION_CAP,
        }
    }
}

/// Parses the instance text format with default options.
pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_with(text, ParseOptions::default())
}

/// Parses the instance text format. Errors carry 1-based line numbers into
/// the raw input.
pub fn parse_instance_with(text: &str, opts: ParseOptions) -> Result<Instance> {
    let mut lines = significant_lines(text);

    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing header line \"d=<int> k=<int>\"".into(),
    })?;
    let (d, k) = parse_header(header_no, header)?;
    if d == 0 {
        return Err(Error::Parse {
            line: header_no,
            reason: "dimension d must be at least 1".into(),
        });
    }
    let cap = opts.dimension_cap.min(MAX_DIMENSION);
    if d > cap {
        return Err(Error::DimensionCap { d, cap });
    }

    let (target_no, target_line) = lines.next().ok_or(Error::Parse {
        line: header_no,
        reason: "missing target line \"t=<bitstring>\"".into(),
    })?;
    let target = match target_line.strip_prefix("t=") {
        Some(bits) => GF2Vector::from_bitstring(bits.trim(), d).map_err(|reason| Error::Parse {
            line: target_no,
            reason,
        })?,
        None => {
            return Err(Error::Parse {
                line: target_no,
                reason: format!("expected \"t=<bitstring>\", got {target_line:?}"),
            })
        }
    };

    let mut vectors = Vec::new();
    let mut seen = HashSet::new();
    for (line_no, line) in lines {
        for token in line.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    reason: "empty vector entry".into(),
                });
            }
            let v = GF2Vector::from_bitstring(token, d).map_err(|reason| Error::Parse {
                line: line_no,
                reason,
            })?;
            if seen.insert(v) {
                vectors.push(v);
            } else if !opts.dedupe {
                return Err(Error::DuplicateVector {
                    line: line_no,
                    bits: v.bitstring(d),
                });
            }
        }
    }

    Instance::new(d, vectors, target, k)
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut d = None;
    let mut k = None;
    for token in line.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
            line: line_no,
            reason: format!("expected key=value, got {token:?}"),
        })?;
        let parsed: usize = value.parse().map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("invalid integer {value:?} for {key}"),
        })?;
        match key {
            "d" => d = Some(parsed),
            "k" => k = Some(parsed),
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    reason: format!("unknown header key {other:?}"),
                })
            }
        }
    }
    match (d, k) {
        (Some(d), Some(k)) => Ok((d, k)),
        _ => Err(Error::Parse {
            line: line_no,
            reason: "header must declare both d= and k=".into(),
        }),
    }
}

/// Iterates over (1-based line number, trimmed content), skipping blanks and
/// `#` comments.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// The characteristic table of an instance's vector set: entry `x` is 1 when
/// `x` is one of the instance's vectors, else 0. This is the function the
/// transform pipeline operates on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    d: usize,
    values: Vec<u8>,
}

impl CharTable {
    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Membership indicator for a single vector.
    pub fn value(&self, x: GF2Vector) -> u8 {
        self.values[x.index()]
    }

    /// Number of ones, i.e. the instance's `m`.
    pub fn ones(&self) -> usize {
        self.values.iter().map(|&b| b as usize).sum()
    }
}

/// Builds the 2^d-entry characteristic table of the instance's vector set.
pub fn build_char_table(instance: &Instance) -> CharTable {
    let d = instance.dimension();
    let mut values = vec![0u8; 1usize << d];
    for v in instance.vectors() {
        values[v.index()] = 1;
    }
    CharTable { d, values }
}
