//! Periodic juggling sequences (siteswaps), their 2-colored variant, and the
//! correspondences `φ: A_{n,k} → ground-state sequences` and
//! `ψ: B_{n,k} → J_{n,k}`.
//!
//! Positions are 1-based: the throw `t_i` happens at time `i` and lands at
//! time `i + |t_i|`. The sign of a colored throw is the ball's color.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{parse_int_list, Permutation, SignedPermutation};

/// Default cap on `k` for `ψ`, whose period is `n·k!`.
pub const DEFAULT_PSI_CAP: usize = 6;

/// An `n`-periodic juggling sequence of nonnegative throws.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JugglingSequence {
    throws: Vec<u32>,
}

/// A juggling sequence whose throw signs are ball colors that never change.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredJugglingSequence {
    throws: Vec<i32>,
}

/// The landing schedule after the last throw of a period, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JugglingState {
    bits: Vec<bool>,
}

/// Either kind of sequence, as produced by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "throws", rename_all = "lowercase")]
pub enum Validated {
    Plain(JugglingSequence),
    Colored(ColoredJugglingSequence),
}

impl Validated {
    pub fn magnitudes(&self) -> JugglingSequence {
        match self {
            Validated::Plain(t) => t.clone(),
            Validated::Colored(t) => t.magnitudes(),
        }
    }

    pub fn colored(&self) -> ColoredJugglingSequence {
        match self {
            Validated::Plain(t) => t.to_colored(),
            Validated::Colored(t) => t.clone(),
        }
    }
}

/// Validates a throw list; it is colored iff some throw is negative.
pub fn validate(throws: &[i32]) -> Result<Validated> {
    if throws.iter().all(|&t| t >= 0) {
        JugglingSequence::new(throws.iter().map(|&t| t as u32).collect()).map(Validated::Plain)
    } else {
        ColoredJugglingSequence::new(throws.to_vec()).map(Validated::Colored)
    }
}

/// Parses `"+5,-2,0,-1"` (signs optional on positive throws).
pub fn parse_throws(s: &str) -> Result<Vec<i32>> {
    let throws: Vec<i32> = parse_int_list(s)?;
    if throws.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(throws)
}

fn check_magnitudes(throws: &[u32]) -> Result<()> {
    let n = throws.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let mut owner = vec![0usize; n];
    for (i, &t) in throws.iter().enumerate() {
        let residue = (t as usize + i + 1) % n;
        if owner[residue] != 0 {
            return Err(Error::ResidueCollision {
                first: owner[residue],
                second: i + 1,
                residue,
            });
        }
        owner[residue] = i + 1;
    }
    // distinct residues already force n | sum; kept as a guard
    let sum: u64 = throws.iter().map(|&t| t as u64).sum();
    if !sum.is_multiple_of(n as u64) {
        return Err(Error::NonIntegerMean { sum, period: n });
    }
    Ok(())
}

/// Position (1-based) where the ball thrown at `i` is thrown next, wrapping around the period.
fn successor(i: usize, throw: u32, n: usize) -> usize {
    (i + throw as usize - 1) % n + 1
}

impl JugglingSequence {
    pub fn new(throws: Vec<u32>) -> Result<Self> {
        check_magnitudes(&throws)?;
        Ok(JugglingSequence { throws })
    }

    /// The cascade `(k, k, …, k)` of period `n`.
    pub fn cascade(k: u32, n: usize) -> Self {
        JugglingSequence {
            throws: vec![k; n.max(1)],
        }
    }

    pub fn throws(&self) -> &[u32] {
        &self.throws
    }

    pub fn period(&self) -> usize {
        self.throws.len()
    }

    pub fn ball_count(&self) -> usize {
        self.throws.iter().map(|&t| t as usize).sum::<usize>() / self.period()
    }

    /// `σ_i = 1` iff some `t_j + j = i + d·n` with `d > 0`.
    pub fn state(&self) -> JugglingState {
        let n = self.period();
        let horizon = self
            .throws
            .iter()
            .enumerate()
            .map(|(j, &t)| t as usize + j + 1)
            .max()
            .unwrap_or(0)
            .saturating_sub(n);
        let mut bits = vec![false; horizon];
        for (j, &t) in self.throws.iter().enumerate() {
            let landing = t as usize + j + 1;
            let mut d = 1;
            while landing > d * n {
                bits[landing - d * n - 1] = true;
                d += 1;
            }
        }
        while bits.last() == Some(&false) {
            bits.pop();
        }
        JugglingState { bits }
    }

    pub fn is_ground_state(&self, k: usize) -> bool {
        self.state().is_ground(k)
    }

    /// The order in which the balls thrown at times `1..=k` land after the
    /// period ends, normalized to `[k]` by subtracting `n`.
    pub fn landing_permutation(&self, k: usize) -> Result<Permutation> {
        landing_permutation_of(&self.throws, k, self.is_ground_state(k))
    }

    /// `m` consecutive copies of one period.
    pub fn repeat(&self, m: usize) -> JugglingSequence {
        JugglingSequence {
            throws: self.throws.repeat(m),
        }
    }

    pub fn to_colored(&self) -> ColoredJugglingSequence {
        ColoredJugglingSequence {
            throws: self.throws.iter().map(|&t| t as i32).collect(),
        }
    }
}

fn landing_permutation_of(throws: &[u32], k: usize, ground: bool) -> Result<Permutation> {
    let n = throws.len();
    if k > n {
        return Err(Error::KAboveN { k, n });
    }
    if !ground {
        return Err(Error::NotGroundState { balls: k });
    }
    let mut landing = Vec::with_capacity(k);
    for start in 1..=k {
        let mut i = start;
        loop {
            let t = throws[i - 1] as usize;
            if t == 0 {
                return Err(Error::ZeroThrow { position: i });
            }
            if i + t > n {
                landing.push((i + t - n) as u32);
                break;
            }
            i += t;
        }
    }
    Permutation::new(landing)
}

impl ColoredJugglingSequence {
    pub fn new(throws: Vec<i32>) -> Result<Self> {
        let magnitudes: Vec<u32> = throws.iter().map(|t| t.unsigned_abs()).collect();
        check_magnitudes(&magnitudes)?;
        let n = throws.len();
        for (i, &t) in throws.iter().enumerate() {
            if t == 0 {
                continue;
            }
            let j = successor(i + 1, t.unsigned_abs(), n);
            if t.signum() != throws[j - 1].signum() {
                return Err(Error::ColorBreak {
                    position: i + 1,
                    successor: j,
                });
            }
        }
        Ok(ColoredJugglingSequence { throws })
    }

    pub fn throws(&self) -> &[i32] {
        &self.throws
    }

    pub fn period(&self) -> usize {
        self.throws.len()
    }

    /// `|T|`.
    pub fn magnitudes(&self) -> JugglingSequence {
        JugglingSequence {
            throws: self.throws.iter().map(|t| t.unsigned_abs()).collect(),
        }
    }

    pub fn ball_count(&self) -> usize {
        self.magnitudes().ball_count()
    }

    pub fn state(&self) -> JugglingState {
        self.magnitudes().state()
    }

    pub fn is_ground_state(&self, k: usize) -> bool {
        self.magnitudes().is_ground_state(k)
    }

    pub fn landing_permutation(&self, k: usize) -> Result<Permutation> {
        self.magnitudes().landing_permutation(k)
    }
}

impl JugglingState {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// `(1, 1, …, 1)` with exactly `k` ones.
    pub fn is_ground(&self, k: usize) -> bool {
        self.bits.len() == k && self.bits.iter().all(|&b| b)
    }
}

impl fmt::Display for JugglingState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &b) in self.bits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for JugglingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.throws.iter().map(|t| t.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

/// Nonzero throws carry an explicit sign, e.g. `+5,-2,0,-1`.
impl fmt::Display for ColoredJugglingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .throws
            .iter()
            .map(|&t| {
                if t > 0 {
                    format!("+{t}")
                } else {
                    t.to_string()
                }
            })
            .collect();
        f.write_str(&items.join(","))
    }
}

/// `φ(p) = (t_1, …, t_n)` with `t_i = k - i + p(i)`.
pub fn phi(p: &Permutation, k: usize) -> Result<JugglingSequence> {
    let maxdrop = p.max_drop();
    if maxdrop > k {
        return Err(Error::MaxDropExceeds { maxdrop, k });
    }
    if p.is_empty() {
        return Err(Error::EmptySequence);
    }
    let throws = p
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| (k + v as usize - (i + 1)) as u32)
        .collect();
    JugglingSequence::new(throws)
}

/// `p(i) = t_i + i - k`, for ground-state sequences juggling `k` balls.
pub fn phi_inverse(t: &JugglingSequence, k: usize) -> Result<Permutation> {
    let balls = t.ball_count();
    if balls != k {
        return Err(Error::BallCount {
            expected: k,
            found: balls,
        });
    }
    if !t.is_ground_state(k) {
        return Err(Error::NotGroundState { balls: k });
    }
    let n = t.period();
    let values = t
        .throws
        .iter()
        .enumerate()
        .map(|(i, &ti)| {
            let v = ti as i64 + i as i64 + 1 - k as i64;
            if v < 1 || v > n as i64 {
                Err(Error::OutOfRange { value: v, n })
            } else {
                Ok(v as u32)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(values)
}

fn factorial_checked(k: usize) -> Option<usize> {
    (1..=k).try_fold(1usize, |acc, i| acc.checked_mul(i))
}

/// `ψ(p)`: `k!` copies of `φ(|p|)`, colored by the signs of `p(1..=k)` and
/// propagated along each ball's path.
pub fn psi(p: &SignedPermutation, k: usize, cap: usize) -> Result<ColoredJugglingSequence> {
    if k > cap {
        return Err(Error::TooLarge {
            what: "k (psi period n*k!)",
            requested: k,
            cap,
        });
    }
    let n = p.len();
    if k > n {
        return Err(Error::KAboveN { k, n });
    }
    let maxdrop = p.max_drop();
    if maxdrop > k {
        return Err(Error::MaxDropExceeds { maxdrop, k });
    }
    let copies = factorial_checked(k).ok_or(Error::TooLarge {
        what: "k (psi period n*k!)",
        requested: k,
        cap,
    })?;
    let base = phi(&p.abs(), k)?;
    let magnitudes = base.repeat(copies).throws;
    let period = magnitudes.len();

    let mut sign = vec![0i32; period];
    for (s, v) in sign.iter_mut().zip(&p.values()[..k]) {
        *s = v.signum();
    }
    for i in 1..=period {
        let t = magnitudes[i - 1] as usize;
        if t == 0 {
            continue;
        }
        assert_ne!(sign[i - 1], 0, "throw at {i} received no color");
        let j = i + t;
        if j > k && j <= period {
            sign[j - 1] = sign[i - 1];
        }
    }
    let throws = magnitudes
        .iter()
        .zip(&sign)
        .map(|(&m, &s)| m as i32 * if m == 0 { 1 } else { s })
        .collect();
    ColoredJugglingSequence::new(throws)
}

/// Inverse of [`psi`]: `φ^{-1}` of the first `n` magnitudes, with the signs of
/// the first `k` throws restored.
pub fn psi_inverse(t: &ColoredJugglingSequence, n: usize, k: usize) -> Result<SignedPermutation> {
    let copies = factorial_checked(k).ok_or(Error::TooLarge {
        what: "k (psi period n*k!)",
        requested: k,
        cap: DEFAULT_PSI_CAP,
    })?;
    let expected = n.checked_mul(copies).ok_or(Error::TooLarge {
        what: "k (psi period n*k!)",
        requested: k,
        cap: DEFAULT_PSI_CAP,
    })?;
    if t.period() != expected {
        return Err(Error::SizeMismatch {
            expected,
            found: t.period(),
        });
    }
    if k > n {
        return Err(Error::KAboveN { k, n });
    }
    let mags = t.magnitudes();
    if let Some(position) = (n..t.period()).find(|&i| mags.throws[i] != mags.throws[i % n]) {
        return Err(Error::NotPeriodic {
            period: n,
            position: position + 1,
        });
    }
    let first = JugglingSequence::new(mags.throws[..n].to_vec())?;
    let sigma = phi_inverse(&first, k)?;
    let values = sigma
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if i < k && t.throws[i] < 0 {
                -(v as i32)
            } else {
                v as i32
            }
        })
        .collect();
    SignedPermutation::new(values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramFormat {
    Ascii,
    Svg,
}

impl FromStr for DiagramFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ascii" => Ok(DiagramFormat::Ascii),
            "svg" => Ok(DiagramFormat::Svg),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Arc diagram of one period: each nonzero throw is an arc from its throw
/// time to its landing time. Negative (second color) throws use `=` in ASCII
/// and the `neg` stroke class in SVG.
pub fn render_diagram(t: &ColoredJugglingSequence, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Ascii => render_ascii(t),
        DiagramFormat::Svg => render_svg(t),
    }
}

const CELL: usize = 3;

fn diagram_span(t: &ColoredJugglingSequence) -> usize {
    t.throws
        .iter()
        .enumerate()
        .map(|(i, v)| i + 1 + v.unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
        .max(t.period())
}

fn render_ascii(t: &ColoredJugglingSequence) -> String {
    let n = t.period();
    let span = diagram_span(t);
    let labels: Vec<String> = t
        .throws
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("t{} = {}", i + 1, v))
        .collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0).max(4) + 1;
    // column of the last digit of time c
    let col = |c: usize| width + CELL * c - 1;

    let shown = if t.throws.iter().all(|&v| v >= 0) {
        t.magnitudes().to_string()
    } else {
        t.to_string()
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "T = ({shown})  period {n}  balls {}  state {}",
        t.ball_count(),
        t.state()
    );
    let mut header = format!("{:<width$}", "time");
    for c in 1..=span {
        let _ = write!(header, "{c:>CELL$}");
    }
    out.push_str(&header);
    out.push('\n');
    // period boundary, between times n and n + 1
    let _ = writeln!(out, "{}|", " ".repeat(col(n) + 1));
    for (i, &v) in t.throws.iter().enumerate() {
        let mut line = format!("{:<width$}", labels[i]);
        if v != 0 {
            let from = col(i + 1);
            let to = col(i + 1 + v.unsigned_abs() as usize);
            let fill = if v < 0 { '=' } else { '-' };
            line.push_str(&" ".repeat(from - line.len()));
            line.push('o');
            line.extend(std::iter::repeat_n(fill, to - from - 1));
            line.push('>');
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_svg(t: &ColoredJugglingSequence) -> String {
    const STEP: usize = 40;
    const MARGIN: usize = 30;
    let span = diagram_span(t);
    let max_throw = t
        .throws
        .iter()
        .map(|v| v.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    let base = MARGIN + max_throw * STEP / 2;
    let width = 2 * MARGIN + span * STEP;
    let height = base + MARGIN;
    let x = |c: usize| MARGIN + (c - 1) * STEP + STEP / 2;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str("<style>\n");
    out.push_str(".pos { stroke: #1f4e9c; stroke-width: 2; fill: none; }\n");
    out.push_str(".neg { stroke: #c0392b; stroke-width: 2; fill: none; stroke-dasharray: 6 3; }\n");
    out.push_str(".tick { font: 12px monospace; text-anchor: middle; }\n");
    out.push_str("</style>\n");
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="black" />"#,
        x(1),
        x(span)
    );
    let boundary = x(t.period()) + STEP / 2;
    let _ = writeln!(
        out,
        r#"<line x1="{boundary}" y1="{}" x2="{boundary}" y2="{}" stroke="gray" stroke-dasharray="2 2" />"#,
        MARGIN / 2,
        base + 5
    );
    for c in 1..=span {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{base}" r="3" />"#, x(c));
        let _ = writeln!(
            out,
            r#"<text class="tick" x="{}" y="{}">{c}</text>"#,
            x(c),
            base + 18
        );
    }
    for (i, &v) in t.throws.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let from = x(i + 1);
        let to = x(i + 1 + v.unsigned_abs() as usize);
        let r = (to - from) / 2;
        let class = if v < 0 { "neg" } else { "pos" };
        let _ = writeln!(
            out,
            r#"<path class="{class}" d="M {from} {base} A {r} {r} 0 0 1 {to} {base}" />"#
        );
    }
    out.push_str("</svg>\n");
    out
}
