//! Lattice paths: Dyck, Motzkin, 3-coloured Motzkin, Schröder and
//! almost-Dyck step sequences, their heights, the ψ transform between
//! almost-Dyck and 0-Schröder paths, and exhaustive enumeration of paths
//! and labelled paths.
//!
//! Labels follow the 0-based convention: a label set `{0..b}` is written as
//! an inclusive bound `b`, and an empty label set forbids the step.

use std::fmt;
use std::str::FromStr;

/// One step of a path. `Level` carries its colour (1, 2 or 3); plain
/// Motzkin paths use colour 1. `LongLevel` spans two abscissa units.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Rise,
    Fall,
    Level(u8),
    LongLevel,
}

impl Step {
    fn height_change(self) -> i64 {
        match self {
            Step::Rise => 1,
            Step::Fall => -1,
            Step::Level(_) | Step::LongLevel => 0,
        }
    }

    fn abscissa_span(self) -> usize {
        match self {
            Step::LongLevel => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Rise => write!(out, "U"),
            Step::Fall => write!(out, "D"),
            Step::Level(colour) => write!(out, "L{colour}"),
            Step::LongLevel => write!(out, "LL"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathKind {
    Dyck,
    Motzkin,
    ColouredMotzkin,
    Schroder,
    AlmostDyck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    BadStep { kind: PathKind, position: usize },
    BelowFloor { position: usize },
    BadEnd { height: i64 },
    DipNotRecovered { position: usize },
    LongLevelOffFloor { position: usize },
    BadToken(String),
    BadLabel { position: usize, label: usize, bound: Option<usize> },
    LabelCount { expected: usize, got: usize },
}

impl fmt::Display for PathError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::BadStep { kind, position } => {
                write!(out, "step {position} is not allowed in a {kind:?} path")
            }
            PathError::BelowFloor { position } => {
                write!(out, "height drops below the floor after step {position}")
            }
            PathError::BadEnd { height } => write!(out, "path ends at height {height}, not 0"),
            PathError::DipNotRecovered { position } => {
                write!(out, "visit to height -1 at step {position} not followed by a rise")
            }
            PathError::LongLevelOffFloor { position } => {
                write!(out, "long level step at step {position} is above height 0")
            }
            PathError::BadToken(tok) => write!(out, "unknown step token {tok:?}"),
            PathError::BadLabel { position, label, bound } => match bound {
                Some(b) => write!(
                    out,
                    "label {label} at step {position} exceeds its bound {b}"
                ),
                None => write!(out, "step {position} admits no label, got {label}"),
            },
            PathError::LabelCount { expected, got } => {
                write!(out, "expected {expected} labels, got {got}")
            }
        }
    }
}

impl std::error::Error for PathError {}

/// A validated step sequence of one of the five path kinds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepSeq {
    kind: PathKind,
    steps: Vec<Step>,
}

impl StepSeq {
    pub fn new(kind: PathKind, steps: Vec<Step>) -> Result<StepSeq, PathError> {
        let path = StepSeq { kind, steps };
        path.validate()?;
        Ok(path)
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Total abscissa length: number of steps, with long level steps
    /// counting twice.
    pub fn length(&self) -> usize {
        self.steps.iter().map(|s| s.abscissa_span()).sum()
    }

    fn validate(&self) -> Result<(), PathError> {
        let floor = if self.kind == PathKind::AlmostDyck { -1 } else { 0 };
        let mut h = 0i64;
        for (idx, &step) in self.steps.iter().enumerate() {
            let position = idx + 1;
            let allowed = matches!(
                (self.kind, step),
                (PathKind::Dyck | PathKind::AlmostDyck, Step::Rise | Step::Fall)
                    | (PathKind::Motzkin, Step::Rise | Step::Fall | Step::Level(1))
                    | (
                        PathKind::ColouredMotzkin,
                        Step::Rise | Step::Fall | Step::Level(1..=3)
                    )
                    | (PathKind::Schroder, Step::Rise | Step::Fall | Step::LongLevel)
            );
            if !allowed {
                return Err(PathError::BadStep { kind: self.kind, position });
            }
            h += step.height_change();
            if h < floor {
                return Err(PathError::BelowFloor { position });
            }
            if self.kind == PathKind::AlmostDyck && h == -1 {
                match self.steps.get(idx + 1) {
                    Some(Step::Rise) => {}
                    _ => return Err(PathError::DipNotRecovered { position }),
                }
            }
            if self.kind == PathKind::Schroder && step == Step::LongLevel && h != 0 {
                // The 0-Schröder restriction: ψ only produces long level
                // steps on the floor, and T-fraction δ-weights above the
                // floor are handled by general Schröder paths, which are
                // validated with this check relaxed via `new_schroder`.
                return Err(PathError::LongLevelOffFloor { position });
            }
        }
        if h != 0 {
            return Err(PathError::BadEnd { height: h });
        }
        Ok(())
    }

    /// General Schröder path: long level steps at any height.
    pub fn new_schroder(steps: Vec<Step>) -> Result<StepSeq, PathError> {
        let mut h = 0i64;
        for (idx, &step) in steps.iter().enumerate() {
            let position = idx + 1;
            if matches!(step, Step::Level(_)) {
                return Err(PathError::BadStep { kind: PathKind::Schroder, position });
            }
            h += step.height_change();
            if h < 0 {
                return Err(PathError::BelowFloor { position });
            }
        }
        if h != 0 {
            return Err(PathError::BadEnd { height: h });
        }
        Ok(StepSeq { kind: PathKind::Schroder, steps })
    }

    /// Is every long level step at height 0?
    pub fn is_zero_schroder(&self) -> bool {
        let mut h = 0i64;
        for &step in &self.steps {
            if step == Step::LongLevel && h != 0 {
                return false;
            }
            h += step.height_change();
        }
        true
    }

    /// Boundary heights `h_0 .. h_m`, one entry per step boundary (a long
    /// level step contributes a single boundary).
    pub fn heights(&self) -> Vec<i64> {
        let mut hs = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0i64;
        hs.push(h);
        for &step in &self.steps {
            h += step.height_change();
            hs.push(h);
        }
        hs
    }
}

impl fmt::Display for StepSeq {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(out, " ")?;
            }
            write!(out, "{step}")?;
        }
        Ok(())
    }
}

/// Replace each down-up dip through height −1 by a long level step at
/// height 0, turning an almost-Dyck path into a 0-Schröder path.
pub fn psi(path: &StepSeq) -> StepSeq {
    assert_eq!(path.kind(), PathKind::AlmostDyck);
    let mut steps = Vec::new();
    let mut h = 0i64;
    let mut iter = path.steps().iter().peekable();
    while let Some(&step) = iter.next() {
        if step == Step::Fall && h == 0 {
            // validated almost-Dyck: the dip is always (0,-1,0)
            let recovered = iter.next();
            debug_assert_eq!(recovered, Some(&Step::Rise));
            steps.push(Step::LongLevel);
            continue;
        }
        h += step.height_change();
        steps.push(step);
    }
    StepSeq::new(PathKind::Schroder, steps).expect("ψ image is a valid 0-Schröder path")
}

/// Inverse of `psi`: each long level step becomes a fall-rise dip.
pub fn psi_inv(path: &StepSeq) -> StepSeq {
    assert_eq!(path.kind(), PathKind::Schroder);
    let mut steps = Vec::new();
    for &step in path.steps() {
        match step {
            Step::LongLevel => {
                steps.push(Step::Fall);
                steps.push(Step::Rise);
            }
            other => steps.push(other),
        }
    }
    StepSeq::new(PathKind::AlmostDyck, steps).expect("ψ⁻¹ image is a valid almost-Dyck path")
}

/// A step sequence together with one label per step (a long level step
/// carries a single label for its abscissa pair).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledPath {
    pub path: StepSeq,
    pub labels: Vec<usize>,
}

impl LabelledPath {
    pub fn new(path: StepSeq, labels: Vec<usize>) -> Result<LabelledPath, PathError> {
        if labels.len() != path.steps().len() {
            return Err(PathError::LabelCount {
                expected: path.steps().len(),
                got: labels.len(),
            });
        }
        Ok(LabelledPath { path, labels })
    }
}

impl fmt::Display for LabelledPath {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (step, label)) in self.path.steps().iter().zip(&self.labels).enumerate() {
            if i > 0 {
                write!(out, " ")?;
            }
            write!(out, "{step}:{label}")?;
        }
        Ok(())
    }
}

fn parse_step_tokens(s: &str) -> Result<(Vec<Step>, Vec<usize>), PathError> {
    let mut steps = Vec::new();
    let mut labels = Vec::new();
    for tok in s.split_whitespace() {
        let (step_tok, label_tok) = tok
            .split_once(':')
            .ok_or_else(|| PathError::BadToken(tok.to_string()))?;
        let step = match step_tok {
            "U" => Step::Rise,
            "D" => Step::Fall,
            "L1" => Step::Level(1),
            "L2" => Step::Level(2),
            "L3" => Step::Level(3),
            "LL" => Step::LongLevel,
            other => return Err(PathError::BadToken(other.to_string())),
        };
        let label: usize = label_tok
            .parse()
            .map_err(|_| PathError::BadToken(tok.to_string()))?;
        steps.push(step);
        labels.push(label);
    }
    Ok((steps, labels))
}

impl LabelledPath {
    /// Parse `"U:0 U:1 L2:1 D:2"` as a labelled path of the given kind.
    pub fn parse_as(kind: PathKind, s: &str) -> Result<LabelledPath, PathError> {
        let (steps, labels) = parse_step_tokens(s)?;
        LabelledPath::new(StepSeq::new(kind, steps)?, labels)
    }
}

impl FromStr for LabelledPath {
    type Err = PathError;

    /// Parses with the kind inferred from the steps: level steps make it
    /// a coloured Motzkin path, dips below 0 an almost-Dyck path, long
    /// level steps a Schröder path, otherwise Dyck. Use
    /// [`LabelledPath::parse_as`] when the kind is known.
    fn from_str(s: &str) -> Result<LabelledPath, PathError> {
        let (steps, labels) = parse_step_tokens(s)?;
        let has_level = steps.iter().any(|s| matches!(s, Step::Level(_)));
        let has_long = steps.contains(&Step::LongLevel);
        let mut h = 0i64;
        let mut dips = false;
        for &step in &steps {
            h += step.height_change();
            dips |= h < 0;
        }
        let kind = if has_long {
            PathKind::Schroder
        } else if has_level {
            PathKind::ColouredMotzkin
        } else if dips {
            PathKind::AlmostDyck
        } else {
            PathKind::Dyck
        };
        LabelledPath::new(StepSeq::new(kind, steps)?, labels)
    }
}

/// Label-bound rules for the two bijections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelRuleset {
    /// 3-coloured Motzkin paths: rises admit `{0..h}`, falls `{0..h-1}`,
    /// level steps of types 1 and 2 `{0..h-1}` (empty at height 0),
    /// type 3 `{0}`.
    Permutation,
    /// Almost-Dyck paths: rises admit `{0..⌈h/2⌉}`, falls
    /// `{0..⌈(h-1)/2⌉}`, heights measured before the step.
    DPermutation,
}

/// Ceiling of `x / 2` for possibly negative `x`.
fn ceil_half(x: i64) -> i64 {
    if x >= 0 {
        (x + 1) / 2
    } else {
        x / 2
    }
}

impl LabelRuleset {
    /// Inclusive upper label bound for a step starting at height `h`, or
    /// `None` when the step admits no label (and is therefore forbidden).
    pub fn bound(self, step: Step, h: i64) -> Option<usize> {
        match self {
            LabelRuleset::Permutation => match step {
                Step::Rise => Some(h as usize),
                Step::Fall => (h >= 1).then(|| (h - 1) as usize),
                Step::Level(1) | Step::Level(2) => (h >= 1).then(|| (h - 1) as usize),
                Step::Level(_) => Some(0),
                Step::LongLevel => None,
            },
            LabelRuleset::DPermutation => match step {
                Step::Rise => Some(ceil_half(h) as usize),
                Step::Fall => {
                    let b = ceil_half(h - 1);
                    (b >= 0).then_some(b as usize)
                }
                // the 0-Schröder form of the same ruleset: a long level
                // step (the image of a dip under ψ) carries the label 0
                Step::LongLevel => (h == 0).then_some(0),
                Step::Level(_) => None,
            },
        }
    }

    /// Check every label of `lp` against the bounds; reports the first
    /// offending step (1-indexed).
    pub fn check(self, lp: &LabelledPath) -> Result<(), PathError> {
        let heights = lp.path.heights();
        for (idx, (&step, &label)) in lp.path.steps().iter().zip(&lp.labels).enumerate() {
            match self.bound(step, heights[idx]) {
                Some(bound) if label <= bound => {}
                bound => {
                    return Err(PathError::BadLabel {
                        position: idx + 1,
                        label,
                        bound,
                    })
                }
            }
        }
        Ok(())
    }
}

/// All valid step sequences of the given kind and abscissa length.
pub fn enumerate_paths(kind: PathKind, length: usize) -> Vec<StepSeq> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    extend_paths(kind, length, 0, &mut steps, &mut out);
    out
}

fn extend_paths(
    kind: PathKind,
    remaining: usize,
    h: i64,
    steps: &mut Vec<Step>,
    out: &mut Vec<StepSeq>,
) {
    if remaining == 0 {
        if h == 0 {
            // Re-validate: cheap, and keeps the dip rule in one place.
            if let Ok(path) = StepSeq::new(kind, steps.clone()) {
                out.push(path);
            }
        }
        return;
    }
    let candidates: &[Step] = match kind {
        PathKind::Dyck | PathKind::AlmostDyck => &[Step::Rise, Step::Fall],
        PathKind::Motzkin => &[Step::Rise, Step::Fall, Step::Level(1)],
        PathKind::ColouredMotzkin => &[
            Step::Rise,
            Step::Fall,
            Step::Level(1),
            Step::Level(2),
            Step::Level(3),
        ],
        PathKind::Schroder => &[Step::Rise, Step::Fall, Step::LongLevel],
    };
    let floor = if kind == PathKind::AlmostDyck { -1 } else { 0 };
    for &step in candidates {
        let span = step.abscissa_span();
        if span > remaining {
            continue;
        }
        let nh = h + step.height_change();
        if nh < floor || nh > (remaining - span) as i64 {
            continue;
        }
        if kind == PathKind::Schroder && step == Step::LongLevel && h != 0 {
            continue;
        }
        steps.push(step);
        extend_paths(kind, remaining - span, nh, steps, out);
        steps.pop();
    }
}

/// General Schröder paths (long level steps at any height), for the
/// T-fraction path sums.
pub fn enumerate_schroder_general(length: usize) -> Vec<StepSeq> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    extend_schroder_general(length, 0, &mut steps, &mut out);
    out
}

fn extend_schroder_general(remaining: usize, h: i64, steps: &mut Vec<Step>, out: &mut Vec<StepSeq>) {
    if remaining == 0 {
        if h == 0 {
            out.push(StepSeq::new_schroder(steps.clone()).unwrap());
        }
        return;
    }
    for step in [Step::Rise, Step::Fall, Step::LongLevel] {
        let span = step.abscissa_span();
        if span > remaining {
            continue;
        }
        let nh = h + step.height_change();
        if nh < 0 || nh > (remaining - span) as i64 {
            continue;
        }
        steps.push(step);
        extend_schroder_general(remaining - span, nh, steps, out);
        steps.pop();
    }
}

/// Every `(path, labels)` pair of the given kind and length satisfying the
/// ruleset, exactly once. An empty label set forbids the step, so paths
/// whose steps cannot all be labelled do not appear.
pub fn enumerate_labelled(kind: PathKind, length: usize, rules: LabelRuleset) -> Vec<LabelledPath> {
    let mut out = Vec::new();
    for path in enumerate_paths(kind, length) {
        let heights = path.heights();
        let bounds: Option<Vec<usize>> = path
            .steps()
            .iter()
            .enumerate()
            .map(|(idx, &step)| rules.bound(step, heights[idx]))
            .collect();
        let Some(bounds) = bounds else { continue };
        let mut labels = vec![0usize; bounds.len()];
        loop {
            out.push(LabelledPath::new(path.clone(), labels.clone()).unwrap());
            // odometer over the label boxes
            let mut advanced = false;
            for idx in (0..bounds.len()).rev() {
                if labels[idx] < bounds[idx] {
                    labels[idx] += 1;
                    for l in labels.iter_mut().skip(idx + 1) {
                        *l = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heights_of_running_example_paths() {
        // Example 1 Motzkin path: cval→U, cpeak→D, cdfall→L1, cdrise→L2, fix→L3.
        let path = StepSeq::new(
            PathKind::ColouredMotzkin,
            vec![
                Step::Rise,
                Step::Rise,
                Step::Level(2),
                Step::Level(3),
                Step::Rise,
                Step::Level(2),
                Step::Fall,
                Step::Level(3),
                Step::Level(2),
                Step::Fall,
                Step::Fall,
            ],
        )
        .unwrap();
        assert_eq!(path.heights(), vec![0, 1, 2, 2, 2, 3, 3, 2, 2, 2, 1, 0]);

        // Example 2 almost-Dyck path.
        let ad = StepSeq::new(
            PathKind::AlmostDyck,
            vec![
                Step::Rise,
                Step::Rise,
                Step::Rise,
                Step::Rise,
                Step::Fall,
                Step::Rise,
                Step::Fall,
                Step::Fall,
                Step::Fall,
                Step::Fall,
                Step::Fall,
                Step::Rise,
                Step::Rise,
                Step::Fall,
            ],
        )
        .unwrap();
        assert_eq!(
            ad.heights(),
            vec![0, 1, 2, 3, 4, 3, 4, 3, 2, 1, 0, -1, 0, 1, 0]
        );
    }

    #[test]
    fn spike_path_peaks_at_k() {
        let mut steps = vec![Step::Rise; 4];
        steps.extend(vec![Step::Fall; 4]);
        let path = StepSeq::new(PathKind::Dyck, steps).unwrap();
        assert_eq!(*path.heights().iter().max().unwrap(), 4);
    }

    #[test]
    fn invalid_paths_are_rejected() {
        assert!(matches!(
            StepSeq::new(PathKind::Dyck, vec![Step::Fall, Step::Rise]),
            Err(PathError::BelowFloor { position: 1 })
        ));
        assert!(matches!(
            StepSeq::new(PathKind::Dyck, vec![Step::Rise]),
            Err(PathError::BadEnd { height: 1 })
        ));
        assert!(matches!(
            StepSeq::new(PathKind::Dyck, vec![Step::Level(1), Step::Level(1)]),
            Err(PathError::BadStep { .. })
        ));
        // dip not recovered: D U D U is fine, D D .. never valid
        assert!(StepSeq::new(
            PathKind::AlmostDyck,
            vec![Step::Fall, Step::Rise, Step::Fall, Step::Rise]
        )
        .is_ok());
        assert!(StepSeq::new(
                PathKind::AlmostDyck,
                vec![Step::Rise, Step::Fall, Step::Fall, Step::Fall],
            ).is_err());
    }

    #[test]
    fn psi_round_trip() {
        // Dyck path: unchanged by ψ.
        let dyck = StepSeq::new(
            PathKind::AlmostDyck,
            vec![Step::Rise, Step::Rise, Step::Fall, Step::Fall],
        )
        .unwrap();
        let image = psi(&dyck);
        assert_eq!(image.steps(), dyck.steps());

        // Lone dip becomes a single long level step.
        let dip = StepSeq::new(PathKind::AlmostDyck, vec![Step::Fall, Step::Rise]).unwrap();
        let image = psi(&dip);
        assert_eq!(image.steps(), &[Step::LongLevel]);
        assert_eq!(psi_inv(&image), dip);

        // Example 2: one long level step replacing steps 11-12.
        let ad = StepSeq::new(
            PathKind::AlmostDyck,
            vec![
                Step::Rise,
                Step::Rise,
                Step::Rise,
                Step::Rise,
                Step::Fall,
                Step::Rise,
                Step::Fall,
                Step::Fall,
                Step::Fall,
                Step::Fall,
                Step::Fall,
                Step::Rise,
                Step::Rise,
                Step::Fall,
            ],
        )
        .unwrap();
        let image = psi(&ad);
        assert_eq!(image.steps()[10], Step::LongLevel);
        assert_eq!(image.steps().len(), 13);
        assert_eq!(image.length(), 14);
        assert!(image.is_zero_schroder());
        assert_eq!(psi_inv(&image), ad);
    }

    #[test]
    fn plain_path_counts() {
        // Motzkin numbers 1, 1, 2, 4, 9, 21; Catalan 1, 1, 2, 5, 14;
        // Schröder (large) 1, 2, 6, 22.
        let motzkin: Vec<usize> = (0..6).map(|n| enumerate_paths(PathKind::Motzkin, n).len()).collect();
        assert_eq!(motzkin, vec![1, 1, 2, 4, 9, 21]);
        let dyck: Vec<usize> = (0..5).map(|n| enumerate_paths(PathKind::Dyck, 2 * n).len()).collect();
        assert_eq!(dyck, vec![1, 1, 2, 5, 14]);
        let schroder: Vec<usize> =
            (0..4).map(|n| enumerate_schroder_general(2 * n).len()).collect();
        assert_eq!(schroder, vec![1, 2, 6, 22]);
    }

    #[test]
    fn labelled_counts_match_the_bijections() {
        // Permutation ruleset counts n!.
        let factorials = [1usize, 1, 2, 6, 24, 120];
        for (n, &expected) in factorials.iter().enumerate() {
            assert_eq!(
                enumerate_labelled(PathKind::ColouredMotzkin, n, LabelRuleset::Permutation).len(),
                expected,
                "n = {n}"
            );
        }
        // D-permutation ruleset counts the median Genocchi number h_{n+1}.
        let dperm_counts = [1usize, 2, 8, 56];
        for (n, &expected) in dperm_counts.iter().enumerate() {
            assert_eq!(
                enumerate_labelled(PathKind::AlmostDyck, 2 * n, LabelRuleset::DPermutation).len(),
                expected,
                "2n = {}",
                2 * n
            );
        }
    }

    #[test]
    fn single_level_step_is_forced_to_type_3() {
        let labelled = enumerate_labelled(PathKind::ColouredMotzkin, 1, LabelRuleset::Permutation);
        assert_eq!(labelled.len(), 1);
        assert_eq!(labelled[0].path.steps(), &[Step::Level(3)]);
        assert_eq!(labelled[0].labels, vec![0]);
    }

    #[test]
    fn labelled_path_text_round_trip() {
        for lp in enumerate_labelled(PathKind::ColouredMotzkin, 4, LabelRuleset::Permutation) {
            let text = lp.to_string();
            let back = LabelledPath::parse_as(PathKind::ColouredMotzkin, &text).unwrap();
            assert_eq!(back, lp);
        }
        for lp in enumerate_labelled(PathKind::AlmostDyck, 6, LabelRuleset::DPermutation) {
            let back = LabelledPath::parse_as(PathKind::AlmostDyck, &lp.to_string()).unwrap();
            assert_eq!(back, lp);
            // kind inference agrees on the steps either way
            let inferred: LabelledPath = lp.to_string().parse().unwrap();
            assert_eq!(inferred.path.steps(), lp.path.steps());
            assert_eq!(inferred.labels, lp.labels);
        }
    }

    #[test]
    fn ruleset_check_reports_first_offender() {
        let lp: LabelledPath = "U:0 U:2 D:0 D:0".parse().unwrap();
        match LabelRuleset::Permutation.check(&lp) {
            Err(PathError::BadLabel { position: 2, label: 2, bound: Some(1) }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let ok: LabelledPath = "U:0 U:1 D:1 D:0".parse().unwrap();
        assert!(LabelRuleset::Permutation.check(&ok).is_ok());
    }
}
