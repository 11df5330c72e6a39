//! Independent sets of `P_4^n` versus odd-neighbor sequences.
//!
//! Every level of `P_4^n` is a `K_4`, so an independent set picks at most one
//! vertex per level. The vertices of the level with core `2i` carry the labels
//!
//! ```text
//! 2i    2i(2i+1)    [2i-1]2i    [2i-1]2i(2i+1)
//! ```
//!
//! (the innermost level, core 2, reads `2, 23, 12, 123`). Reading the labels
//! of an independent set in increasing order, dropping a bracketed `2i-1`
//! whenever `2i-2` or an unbracketed `2i-1` is also present, and erasing the
//! remaining brackets gives a subsequence of `1..=2n+1` in which every odd
//! member has an even neighbor. This module builds both directions of that
//! correspondence.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` for which the exhaustive listings are produced.
pub const MAX_LISTING_N: usize = 9;

/// Which of the two optional odd values a label carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    /// The odd value below the core (`[2i-1]`, or the `1` on the innermost level).
    pub lower: bool,
    /// The odd value above the core (`2i+1`).
    pub upper: bool,
}

impl Shape {
    /// Label order on every level: core, core+trail, bracket+core, all three.
    pub const ORDER: [Shape; 4] = [
        Shape { lower: false, upper: false },
        Shape { lower: false, upper: true },
        Shape { lower: true, upper: false },
        Shape { lower: true, upper: true },
    ];

    /// Shapes allowed on the next outer level when this shape is used.
    fn allowed_outer(self) -> [Shape; 2] {
        let [core, trail, bracket, both] = Self::ORDER;
        match (self.lower, self.upper) {
            (false, false) => [bracket, both],
            (false, true) => [core, both],
            (true, false) => [core, trail],
            (true, true) => [trail, bracket],
        }
    }
}

/// Label of one vertex of `P_4^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    /// Level, 1 (outermost) to `n` (innermost).
    pub level: usize,
    /// Even value `2(n - level) + 2`.
    pub core: u32,
    /// Odd value `core - 1`; written in brackets except on the innermost
    /// level, where it is the `1`.
    pub bracket: Option<u32>,
    /// Odd value `core + 1`.
    pub trail: Option<u32>,
}

impl VertexLabel {
    fn new(n: usize, level: usize, shape: Shape) -> Self {
        let core = 2 * (n - level) as u32 + 2;
        VertexLabel {
            level,
            core,
            bracket: shape.lower.then_some(core - 1),
            trail: shape.upper.then_some(core + 1),
        }
    }

    pub fn shape(&self) -> Shape {
        Shape {
            lower: self.bracket.is_some(),
            upper: self.trail.is_some(),
        }
    }

    /// Whether the lower odd value is written in brackets.
    pub fn is_bracketed(&self) -> bool {
        self.bracket.is_some() && self.core > 2
    }

    /// The label's values with their bracket flags, ascending.
    fn digits(&self) -> Vec<(u32, bool)> {
        let mut out = Vec::with_capacity(3);
        if let Some(b) = self.bracket {
            out.push((b, self.is_bracketed()));
        }
        out.push((self.core, false));
        if let Some(t) = self.trail {
            out.push((t, false));
        }
        out
    }
}

/// Renders as `[5]67`, or `[11]12,13` once values reach two digits.
impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.core + 1 >= 10;
        let mut parts = Vec::new();
        if let Some(b) = self.bracket {
            parts.push(if self.is_bracketed() {
                format!("[{b}]")
            } else {
                b.to_string()
            });
        }
        parts.push(self.core.to_string());
        if let Some(t) = self.trail {
            parts.push(t.to_string());
        }
        if wide {
            // the bracket already delimits itself
            let mut out = String::new();
            for (k, p) in parts.iter().enumerate() {
                if k > 0 && !parts[k - 1].ends_with(']') {
                    out.push(',');
                }
                out.push_str(p);
            }
            f.write_str(&out)
        } else {
            f.write_str(&parts.concat())
        }
    }
}

/// At most one vertex on a level; `None` is the empty choice.
pub type LevelChoice = Option<VertexLabel>;

/// One level choice per level, innermost level first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Selection {
    n: usize,
    choices: Vec<LevelChoice>,
}

impl Selection {
    /// Validates level numbers and adjacent-level compatibility.
    pub fn new(n: usize, choices: Vec<LevelChoice>) -> Result<Self> {
        if choices.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} level choices, got {}",
                choices.len()
            )));
        }
        for (k, choice) in choices.iter().enumerate() {
            if let Some(label) = choice {
                let level = n - k;
                if *label != VertexLabel::new(n, level, label.shape()) {
                    return Err(Error::InvalidArgument(format!(
                        "label {label} does not belong to level {level} of P_4^{n}"
                    )));
                }
            }
        }
        for pair in choices.windows(2) {
            if !compatible_outer(&pair[0], &pair[1])? {
                return Err(Error::InvalidArgument(format!(
                    "labels {} and {} are adjacent",
                    fmt_choice(&pair[0]),
                    fmt_choice(&pair[1])
                )));
            }
        }
        Ok(Selection { n, choices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Choices from level `n` outwards.
    pub fn choices(&self) -> &[LevelChoice] {
        &self.choices
    }

    pub fn labels(&self) -> impl Iterator<Item = &VertexLabel> {
        self.choices.iter().flatten()
    }

    /// The tuple form, e.g. `(ε,45,[5]67)`.
    pub fn tuple(&self) -> String {
        let parts: Vec<String> = self.choices.iter().map(fmt_choice).collect();
        format!("({})", parts.join(","))
    }
}

fn fmt_choice(choice: &LevelChoice) -> String {
    choice.map_or_else(|| "ε".to_string(), |l| l.to_string())
}

/// The set form, e.g. `{45,[5]67}`.
impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A strictly increasing subsequence of `1..=2n+1` in which every odd member
/// `m` has `m - 1` or `m + 1` present.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddEvenSeq {
    members: Vec<u32>,
}

impl OddEvenSeq {
    pub fn new(members: Vec<u32>, n: usize) -> Result<Self> {
        let top = 2 * n as u32 + 1;
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedSequence(format!(
                "{members:?} is not strictly increasing"
            )));
        }
        if let Some(&m) = members.iter().find(|&&m| m == 0 || m > top) {
            return Err(Error::MalformedSequence(format!(
                "{m} lies outside 1..={top}"
            )));
        }
        if let Some(&m) = members
            .iter()
            .find(|&&m| m % 2 == 1 && !members.contains(&(m - 1)) && !members.contains(&(m + 1)))
        {
            return Err(Error::MalformedSequence(format!(
                "odd member {m} has no even neighbor"
            )));
        }
        Ok(OddEvenSeq { members })
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, m: u32) -> bool {
        self.members.binary_search(&m).is_ok()
    }
}

/// Digit string (`4567`) when every member is a single digit, otherwise
/// comma-separated; `ε` when empty.
impl fmt::Display for OddEvenSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = self.members.iter().map(u32::to_string).collect();
        if self.members.iter().all(|&m| m < 10) {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

fn check_listing_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > MAX_LISTING_N {
        return Err(Error::ResourceLimit(format!(
            "exhaustive listings support n <= {MAX_LISTING_N}, got {n}"
        )));
    }
    Ok(())
}

/// All odd-neighbor subsequences of `1..=2n+1`, lexicographically ordered.
pub fn valid_sequences(n: usize) -> Result<Vec<OddEvenSeq>> {
    check_listing_n(n)?;
    let top = 2 * n + 1;
    let mut out: Vec<OddEvenSeq> = (0u32..1 << top)
        .filter_map(|mask| {
            let members = (1..=top as u32).filter(|m| mask >> (m - 1) & 1 == 1).collect();
            OddEvenSeq::new(members, n).ok()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The four labels of `level` in `P_4^n`, in their fixed order.
pub fn labels_at_level(n: usize, level: usize) -> Result<[VertexLabel; 4]> {
    if level == 0 || level > n {
        return Err(Error::InvalidArgument(format!(
            "level {level} outside 1..={n}"
        )));
    }
    Ok(Shape::ORDER.map(|shape| VertexLabel::new(n, level, shape)))
}

/// Whether `outer`, on the level just outside `inner`, may join it in an
/// independent set.
pub fn compatible_outer(inner: &LevelChoice, outer: &LevelChoice) -> Result<bool> {
    match (inner, outer) {
        (Some(i), Some(o)) => {
            if o.level + 1 != i.level || o.core != i.core + 2 {
                return Err(Error::InvalidArgument(format!(
                    "{i} (level {}) and {o} (level {}) are not on adjacent levels",
                    i.level, o.level
                )));
            }
            Ok(i.shape().allowed_outer().contains(&o.shape()))
        }
        _ => Ok(true),
    }
}

/// Every independent set of `P_4^n` as a chain of level choices.
pub fn independent_selections(n: usize) -> Result<Vec<Selection>> {
    check_listing_n(n)?;
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(n);
    extend(n, &mut chain, &mut out)?;
    Ok(out)
}

fn extend(n: usize, chain: &mut Vec<LevelChoice>, out: &mut Vec<Selection>) -> Result<()> {
    if chain.len() == n {
        out.push(Selection {
            n,
            choices: chain.clone(),
        });
        return Ok(());
    }
    let level = n - chain.len();
    let inner = chain.last().copied().flatten();
    let candidates = std::iter::once(None).chain(labels_at_level(n, level)?.map(Some));
    for choice in candidates {
        if compatible_outer(&inner, &choice)? {
            chain.push(choice);
            extend(n, chain, out)?;
            chain.pop();
        }
    }
    Ok(())
}

/// Maps an independent set to its odd-neighbor sequence.
pub fn to_sequence(sel: &Selection) -> Result<OddEvenSeq> {
    let mut digits: Vec<(u32, bool)> = sel.labels().flat_map(VertexLabel::digits).collect();
    digits.sort();
    let present_plain = |v: u32| digits.iter().any(|&(d, bracketed)| d == v && !bracketed);
    let mut members: Vec<u32> = digits
        .iter()
        .filter(|&&(d, bracketed)| !(bracketed && (present_plain(d - 1) || present_plain(d))))
        .map(|&(d, _)| d)
        .collect();
    members.dedup();
    OddEvenSeq::new(members, sel.n)
}

/// Maps an odd-neighbor sequence back to its independent set.
///
/// Levels are filled from the inside out. The level with core `2i` is
/// occupied exactly when `2i` is in the sequence. Its trail is present exactly
/// when `2i + 1` is. Its bracket is read off the sequence when the next inner
/// level is empty, and otherwise is the one choice the inner label allows.
pub fn from_sequence(s: &OddEvenSeq, n: usize) -> Result<Selection> {
    let s = OddEvenSeq::new(s.members.clone(), n)?;
    let mut choices: Vec<LevelChoice> = Vec::with_capacity(n);
    for level in (1..=n).rev() {
        let labels = labels_at_level(n, level)?;
        let core = labels[0].core;
        if !s.contains(core) {
            choices.push(None);
            continue;
        }
        let inner = choices.last().copied().flatten();
        let candidates: Vec<VertexLabel> = labels
            .into_iter()
            .filter(|l| l.trail.is_some() == s.contains(core + 1))
            .filter(|l| inner.is_some() || l.bracket.is_some() == s.contains(core - 1))
            .filter(|l| inner.is_none_or(|i| i.shape().allowed_outer().contains(&l.shape())))
            .collect();
        match candidates.as_slice() {
            [label] => choices.push(Some(*label)),
            [] => {
                return Err(Error::MalformedSequence(format!(
                    "no label at level {level} accounts for {s}"
                )))
            }
            _ => {
                return Err(Error::MalformedSequence(format!(
                    "ambiguous label at level {level} for {s}"
                )))
            }
        }
    }
    Selection::new(n, choices)
}
