//! The three bijections between (D-)permutations and labelled lattice
//! paths: forward maps, inverse maps via inversion tables, the FZ/DS
//! insertion orders, Laguerre-digraph histories, and cycle-closer
//! detection.

use std::collections::BTreeSet;
use std::fmt;

use crate::perm::{LaguerreDigraph, PermError, Permutation};
use crate::paths::{LabelRuleset, LabelledPath, PathError, PathKind, Step, StepSeq};
use crate::stats::{lnest_p, psnest, unest_p};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BijectError {
    Path(PathError),
    Perm(PermError),
    Table(TableError),
}

impl fmt::Display for BijectError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectError::Path(e) => write!(out, "{e}"),
            BijectError::Perm(e) => write!(out, "{e}"),
            BijectError::Table(e) => write!(out, "{e}"),
        }
    }
}

impl std::error::Error for BijectError {}

impl From<PathError> for BijectError {
    fn from(e: PathError) -> BijectError {
        BijectError::Path(e)
    }
}

impl From<PermError> for BijectError {
    fn from(e: PermError) -> BijectError {
        BijectError::Perm(e)
    }
}

impl From<TableError> for BijectError {
    fn from(e: TableError) -> BijectError {
        BijectError::Table(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    LengthMismatch { set: usize, table: usize },
    EntryOutOfRange { index: usize, entry: usize, bound: usize },
    MissingValue(usize),
}

impl fmt::Display for TableError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::LengthMismatch { set, table } => {
                write!(out, "set has {set} elements but table has {table}")
            }
            TableError::EntryOutOfRange { index, entry, bound } => {
                write!(out, "table entry {entry} at index {index} exceeds bound {bound}")
            }
            TableError::MissingValue(v) => write!(out, "no table entry for value {v}"),
        }
    }
}

impl std::error::Error for TableError {}

/// Left-to-right inversion table: `p_α = #{β < α : x_β > x_α}`.
pub fn ltr_inv_table(x: &[usize]) -> Vec<usize> {
    (0..x.len())
        .map(|a| (0..a).filter(|&b| x[b] > x[a]).count())
        .collect()
}

/// Right-to-left inversion table: `q_α = #{β > α : x_β < x_α}`.
pub fn rtl_inv_table(x: &[usize]) -> Vec<usize> {
    (0..x.len())
        .map(|a| (a + 1..x.len()).filter(|&b| x[b] < x[a]).count())
        .collect()
}

/// Rebuild the sequence from its left-to-right inversion table, working
/// right to left: `x_k` is the `(p_k+1)`-th largest element of `S`, then
/// `x_{k-1}` the `(p_{k-1}+1)`-th largest of what remains, and so on.
/// `set` must be sorted ascending.
pub fn reconstruct_ltr(set: &[usize], table: &[usize]) -> Result<Vec<usize>, TableError> {
    if set.len() != table.len() {
        return Err(TableError::LengthMismatch { set: set.len(), table: table.len() });
    }
    let mut available: Vec<usize> = set.to_vec();
    let mut out = vec![0; set.len()];
    for idx in (0..table.len()).rev() {
        let p = table[idx];
        if p >= available.len() {
            return Err(TableError::EntryOutOfRange {
                index: idx,
                entry: p,
                bound: available.len() - 1,
            });
        }
        out[idx] = available.remove(available.len() - 1 - p);
    }
    Ok(out)
}

/// Rebuild the sequence from its right-to-left inversion table, working
/// left to right: `x_1` is the `(q_1+1)`-th smallest element of `S`, etc.
/// `set` must be sorted ascending.
pub fn reconstruct_rtl(set: &[usize], table: &[usize]) -> Result<Vec<usize>, TableError> {
    if set.len() != table.len() {
        return Err(TableError::LengthMismatch { set: set.len(), table: table.len() });
    }
    let mut available: Vec<usize> = set.to_vec();
    let mut out = vec![0; set.len()];
    for (idx, &q) in table.iter().enumerate() {
        if q >= available.len() {
            return Err(TableError::EntryOutOfRange {
                index: idx,
                entry: q,
                bound: available.len() - 1,
            });
        }
        out[idx] = available.remove(q);
    }
    Ok(out)
}

/// Value-based left-to-right inversion table: `p'_{x_i} = p_i`, returned
/// as `(value, count)` pairs in value order.
pub fn value_ltr_inv_table(x: &[usize]) -> Vec<(usize, usize)> {
    let table = ltr_inv_table(x);
    let mut pairs: Vec<(usize, usize)> = x.iter().copied().zip(table).collect();
    pairs.sort();
    pairs
}

/// Value-based right-to-left inversion table: `q'_{x_i} = q_i`.
pub fn value_rtl_inv_table(x: &[usize]) -> Vec<(usize, usize)> {
    let table = rtl_inv_table(x);
    let mut pairs: Vec<(usize, usize)> = x.iter().copied().zip(table).collect();
    pairs.sort();
    pairs
}

fn lookup(table: &[(usize, usize)], value: usize) -> Result<usize, TableError> {
    table
        .iter()
        .find(|(v, _)| *v == value)
        .map(|&(_, c)| c)
        .ok_or(TableError::MissingValue(value))
}

/// Rebuild the sequence from a value-based left-to-right table, inserting
/// values from largest to smallest so that `p'_{s}` already-placed entries
/// end up to the left of `s`. `set` must be sorted ascending.
pub fn reconstruct_value_ltr(
    set: &[usize],
    table: &[(usize, usize)],
) -> Result<Vec<usize>, TableError> {
    if set.len() != table.len() {
        return Err(TableError::LengthMismatch { set: set.len(), table: table.len() });
    }
    let mut out: Vec<usize> = Vec::with_capacity(set.len());
    for (rank, &value) in set.iter().enumerate().rev() {
        let p = lookup(table, value)?;
        if p > out.len() {
            return Err(TableError::EntryOutOfRange {
                index: rank,
                entry: p,
                bound: out.len(),
            });
        }
        out.insert(p, value);
    }
    Ok(out)
}

/// Rebuild the sequence from a value-based right-to-left table, inserting
/// values from smallest to largest so that `q'_{s}` already-placed entries
/// end up to the right of `s`. `set` must be sorted ascending.
pub fn reconstruct_value_rtl(
    set: &[usize],
    table: &[(usize, usize)],
) -> Result<Vec<usize>, TableError> {
    if set.len() != table.len() {
        return Err(TableError::LengthMismatch { set: set.len(), table: table.len() });
    }
    let mut out: Vec<usize> = Vec::with_capacity(set.len());
    for (rank, &value) in set.iter().enumerate() {
        let q = lookup(table, value)?;
        if q > out.len() {
            return Err(TableError::EntryOutOfRange {
                index: rank,
                entry: q,
                bound: out.len(),
            });
        }
        out.insert(out.len() - q, value);
    }
    Ok(out)
}

/// Insertion stage of a history step.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stage {
    A,
    B,
    C,
}

impl fmt::Display for Stage {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::A => write!(out, "a"),
            Stage::B => write!(out, "b"),
            Stage::C => write!(out, "c"),
        }
    }
}

/// One step of a Laguerre-digraph history: the vertex handled, the edge
/// inserted, whether that edge closed a cycle (turned a path with at least
/// two vertices into a cycle), and the digraph after insertion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HistoryStep {
    pub vertex: usize,
    pub stage: Stage,
    pub edge: (usize, usize),
    pub closes_cycle: bool,
    pub snapshot: LaguerreDigraph,
}

/// The index sets of the Foata--Zeilberger construction, read off a
/// 3-coloured Motzkin path: excedance positions `F` (rises and type-2
/// levels), anti-excedance positions `G` (falls and type-1 levels), fixed
/// points `H` (type-3 levels), excedance values `F'` (falls and type-2
/// levels) and anti-excedance values `G'` (rises and type-1 levels).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FzSets {
    pub f: Vec<usize>,
    pub f_prime: Vec<usize>,
    pub g: Vec<usize>,
    pub g_prime: Vec<usize>,
    pub h: Vec<usize>,
}

pub fn fz_sets(path: &StepSeq) -> FzSets {
    assert!(matches!(
        path.kind(),
        PathKind::ColouredMotzkin | PathKind::Motzkin | PathKind::Dyck
    ));
    let mut sets = FzSets {
        f: Vec::new(),
        f_prime: Vec::new(),
        g: Vec::new(),
        g_prime: Vec::new(),
        h: Vec::new(),
    };
    for (idx, &step) in path.steps().iter().enumerate() {
        let i = idx + 1;
        match step {
            Step::Rise => {
                sets.f.push(i);
                sets.g_prime.push(i);
            }
            Step::Fall => {
                sets.g.push(i);
                sets.f_prime.push(i);
            }
            Step::Level(1) => {
                sets.g.push(i);
                sets.g_prime.push(i);
            }
            Step::Level(2) => {
                sets.f.push(i);
                sets.f_prime.push(i);
            }
            Step::Level(3) => sets.h.push(i),
            _ => unreachable!("validated coloured Motzkin path"),
        }
    }
    sets
}

/// The FZ insertion order of a 3-coloured Motzkin path: `H` increasing,
/// then `G` increasing, then `F` decreasing. It depends only on the
/// coloured path, never on the labels.
pub fn fz_order(path: &StepSeq) -> Vec<usize> {
    let sets = fz_sets(path);
    let mut order = sets.h.clone();
    order.extend(&sets.g);
    order.extend(sets.f.iter().rev());
    order
}

/// Foata--Zeilberger forward map: `σ ↦ (3-coloured Motzkin path, labels)`.
/// Step kinds follow the cycle classification (cval→rise, cpeak→fall,
/// cdfall→type 1, cdrise→type 2, fix→type 3); the label of an excedance
/// counts earlier larger values, of an anti-excedance later smaller
/// values, and of a fixed point is 0.
pub fn fz_forward(sigma: &Permutation) -> LabelledPath {
    let n = sigma.n();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for i in 1..=n {
        let v = sigma.apply(i);
        let (step, label) = if v > i {
            let step = if sigma.inverse_apply(i) > i {
                Step::Rise
            } else {
                Step::Level(2)
            };
            (step, (1..i).filter(|&j| sigma.apply(j) > v).count())
        } else if v < i {
            let step = if sigma.inverse_apply(i) < i {
                Step::Fall
            } else {
                Step::Level(1)
            };
            (step, (i + 1..=n).filter(|&j| sigma.apply(j) < v).count())
        } else {
            (Step::Level(3), 0)
        };
        steps.push(step);
        labels.push(label);
    }
    let path = StepSeq::new(PathKind::ColouredMotzkin, steps)
        .expect("the cycle classification always yields a Motzkin path");
    let lp = LabelledPath::new(path, labels).unwrap();
    debug_assert!(LabelRuleset::Permutation.check(&lp).is_ok());
    lp
}

/// Inverse of `fz_forward`. Validates the label bounds eagerly and reports
/// the first offending step.
pub fn fz_inverse(lp: &LabelledPath) -> Result<Permutation, BijectError> {
    LabelRuleset::Permutation.check(lp)?;
    let sets = fz_sets(&lp.path);
    let n = lp.path.steps().len();
    let mut word = vec![0usize; n];
    for &i in &sets.h {
        word[i - 1] = i;
    }
    let f_labels: Vec<usize> = sets.f.iter().map(|&i| lp.labels[i - 1]).collect();
    let f_images = reconstruct_ltr(&sets.f_prime, &f_labels)?;
    for (&i, &v) in sets.f.iter().zip(&f_images) {
        word[i - 1] = v;
    }
    let g_labels: Vec<usize> = sets.g.iter().map(|&i| lp.labels[i - 1]).collect();
    let g_images = reconstruct_rtl(&sets.g_prime, &g_labels)?;
    for (&i, &v) in sets.g.iter().zip(&g_images) {
        word[i - 1] = v;
    }
    Ok(Permutation::from_word(word)?)
}

/// Build the FZ history of a labelled 3-coloured Motzkin path: insert the
/// edges `u → σ(u)` in FZ order, recording a digraph snapshot and the
/// cycle-closure flag at every step.
pub fn fz_history(lp: &LabelledPath) -> Result<Vec<HistoryStep>, BijectError> {
    let sigma = fz_inverse(lp)?;
    let sets = fz_sets(&lp.path);
    let heights = lp.path.heights();
    let f_set: BTreeSet<usize> = sets.f.iter().copied().collect();
    let h_set: BTreeSet<usize> = sets.h.iter().copied().collect();

    let mut remaining_targets: BTreeSet<usize> = sets.f_prime.iter().copied().collect();
    let mut digraph = LaguerreDigraph::empty(sigma.n());
    let mut history = Vec::with_capacity(sigma.n());
    for u in fz_order(&lp.path) {
        let stage = if h_set.contains(&u) {
            Stage::A
        } else if f_set.contains(&u) {
            Stage::C
        } else {
            Stage::B
        };
        if stage == Stage::C {
            if lp.path.steps()[u - 1] == Step::Rise {
                // Cycle-valley steps see exactly h_{u-1}+1 admissible
                // targets above u; each label picks a distinct one.
                let above = remaining_targets.range(u + 1..).count() as i64;
                assert_eq!(above, heights[u - 1] + 1, "target count at cycle valley {u}");
            }
            remaining_targets.remove(&sigma.apply(u));
        }
        let v = sigma.apply(u);
        let closes_cycle = digraph.edge_closes_cycle(u, v);
        digraph.insert_edge(u, v);
        history.push(HistoryStep {
            vertex: u,
            stage,
            edge: (u, v),
            closes_cycle,
            snapshot: digraph.clone(),
        });
    }
    Ok(history)
}

/// Deb--Sokal forward map: `σ ↦ (almost-Dyck path, labels)`. Steps are
/// rises where `σ⁻¹(i)` is even and falls where it is odd; labels are the
/// nesting counts of even/odd non-fixed indices and the pseudo-nesting of
/// fixed points.
pub fn ds_forward(sigma: &Permutation) -> Result<LabelledPath, BijectError> {
    if !sigma.is_dpermutation()? {
        return Err(BijectError::Perm(PermError::NotInClass("D-permutation")));
    }
    let n = sigma.n();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for i in 1..=n {
        steps.push(if sigma.inverse_apply(i).is_multiple_of(2) {
            Step::Rise
        } else {
            Step::Fall
        });
        let v = sigma.apply(i);
        let label = if v == i {
            psnest(sigma, i).unwrap()
        } else if i % 2 == 0 {
            // lnest(i): later positions with smaller image
            (i + 1..=n).filter(|&j| sigma.apply(j) < v).count()
        } else {
            // unest(i): earlier positions with larger image
            (1..i).filter(|&j| sigma.apply(j) > v).count()
        };
        labels.push(label);
    }
    let path = StepSeq::new(PathKind::AlmostDyck, steps)
        .expect("a D-permutation always yields an almost-Dyck path");
    let lp = LabelledPath::new(path, labels).unwrap();
    debug_assert!(LabelRuleset::DPermutation.check(&lp).is_ok());
    Ok(lp)
}

/// Rise and fall positions of an almost-Dyck path: the excedance values
/// `F'` (rises) and anti-excedance values `G'` (falls) of the
/// D-permutation it encodes.
pub fn ds_sets(path: &StepSeq) -> (Vec<usize>, Vec<usize>) {
    let mut f_prime = Vec::new();
    let mut g_prime = Vec::new();
    for (idx, &step) in path.steps().iter().enumerate() {
        match step {
            Step::Rise => f_prime.push(idx + 1),
            Step::Fall => g_prime.push(idx + 1),
            _ => unreachable!("validated almost-Dyck path"),
        }
    }
    (f_prime, g_prime)
}

/// Inverse of `ds_forward`: the even subword is rebuilt from `F'` through
/// a right-to-left inversion table, the odd subword from `G'` through a
/// left-to-right one.
pub fn ds_inverse(lp: &LabelledPath) -> Result<Permutation, BijectError> {
    LabelRuleset::DPermutation.check(lp)?;
    let (f_prime, g_prime) = ds_sets(&lp.path);
    let n = lp.path.steps().len();
    let even_labels: Vec<usize> = (1..=n / 2).map(|a| lp.labels[2 * a - 1]).collect();
    let odd_labels: Vec<usize> = (1..=n / 2).map(|a| lp.labels[2 * a - 2]).collect();
    let even_subword = reconstruct_rtl(&f_prime, &even_labels)?;
    let odd_subword = reconstruct_ltr(&g_prime, &odd_labels)?;
    let mut word = vec![0usize; n];
    for (a, &v) in even_subword.iter().enumerate() {
        word[2 * a + 1] = v;
    }
    for (a, &v) in odd_subword.iter().enumerate() {
        word[2 * a] = v;
    }
    let sigma = Permutation::from_word(word)?;
    debug_assert_eq!(sigma.is_dpermutation(), Ok(true));
    Ok(sigma)
}

/// DS history: insert `u → σ(u)` for even vertices in increasing order
/// (stage a), then odd vertices in decreasing order (stage b).
pub fn ds_history(lp: &LabelledPath) -> Result<Vec<HistoryStep>, BijectError> {
    let sigma = ds_inverse(lp)?;
    let n = sigma.n();
    let heights = lp.path.heights();
    let (_, g_prime) = ds_sets(&lp.path);
    let mut remaining_targets: BTreeSet<usize> = g_prime.iter().copied().collect();

    let mut digraph = LaguerreDigraph::empty(n);
    let mut history = Vec::with_capacity(n);
    let order = (1..=n / 2)
        .map(|k| (2 * k, Stage::A))
        .chain((1..=n / 2).rev().map(|k| (2 * k - 1, Stage::B)));
    for (u, stage) in order {
        if stage == Stage::B {
            if lp.path.steps()[u - 1] == Step::Rise {
                // Cycle-valley steps see exactly f_u = ⌈h_{u-1}/2⌉+1
                // admissible targets above u.
                let above = remaining_targets.range(u + 1..).count() as i64;
                assert_eq!(above, (heights[u] + 1) / 2, "target count at cycle valley {u}");
            }
            remaining_targets.remove(&sigma.apply(u));
        }
        let v = sigma.apply(u);
        let closes_cycle = digraph.edge_closes_cycle(u, v);
        digraph.insert_edge(u, v);
        history.push(HistoryStep {
            vertex: u,
            stage,
            edge: (u, v),
            closes_cycle,
            snapshot: digraph.clone(),
        });
    }
    Ok(history)
}

/// Variant Deb--Sokal forward map: same almost-Dyck path, labels read off
/// the variant nesting statistics and attached to values: `lnest'(i)` on
/// rises, `unest'(i)` on falls, `psnest(i)` on fixed points.
pub fn ds_variant_forward(sigma: &Permutation) -> Result<LabelledPath, BijectError> {
    if !sigma.is_dpermutation()? {
        return Err(BijectError::Perm(PermError::NotInClass("D-permutation")));
    }
    let n = sigma.n();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for i in 1..=n {
        let rise = sigma.inverse_apply(i).is_multiple_of(2);
        steps.push(if rise { Step::Rise } else { Step::Fall });
        let label = if sigma.is_fixed_point(i) {
            psnest(sigma, i).unwrap()
        } else if rise {
            lnest_p(sigma, i)
        } else {
            unest_p(sigma, i)
        };
        labels.push(label);
    }
    let path = StepSeq::new(PathKind::AlmostDyck, steps)
        .expect("a D-permutation always yields an almost-Dyck path");
    let lp = LabelledPath::new(path, labels).unwrap();
    debug_assert!(LabelRuleset::DPermutation.check(&lp).is_ok());
    Ok(lp)
}

/// Inverse of `ds_variant_forward`, via value-based inversion tables: the
/// even subword is rebuilt from the right-to-left value-based table on
/// `F'`, the odd subword from the left-to-right one on `G'`.
pub fn ds_variant_inverse(lp: &LabelledPath) -> Result<Permutation, BijectError> {
    LabelRuleset::DPermutation.check(lp)?;
    let (f_prime, g_prime) = ds_sets(&lp.path);
    let n = lp.path.steps().len();
    let f_table: Vec<(usize, usize)> =
        f_prime.iter().map(|&v| (v, lp.labels[v - 1])).collect();
    let g_table: Vec<(usize, usize)> =
        g_prime.iter().map(|&v| (v, lp.labels[v - 1])).collect();
    let even_subword = reconstruct_value_rtl(&f_prime, &f_table)?;
    let odd_subword = reconstruct_value_ltr(&g_prime, &g_table)?;
    let mut word = vec![0usize; n];
    for (a, &v) in even_subword.iter().enumerate() {
        word[2 * a + 1] = v;
    }
    for (a, &v) in odd_subword.iter().enumerate() {
        word[2 * a] = v;
    }
    let sigma = Permutation::from_word(word)?;
    debug_assert_eq!(sigma.is_dpermutation(), Ok(true));
    Ok(sigma)
}

/// Variant DS history: insert the edges `σ⁻¹(u) → u` going through `G'`
/// in increasing order (stage a), then `F'` in decreasing order (stage b).
pub fn ds_variant_history(lp: &LabelledPath) -> Result<Vec<HistoryStep>, BijectError> {
    let sigma = ds_variant_inverse(lp)?;
    let n = sigma.n();
    let heights = lp.path.heights();
    let (f_prime, g_prime) = ds_sets(&lp.path);
    // Sources still available during stage (b) are even positions not yet
    // assigned an out-edge.
    let mut remaining_sources: BTreeSet<usize> = (1..=n / 2).map(|k| 2 * k).collect();

    let mut digraph = LaguerreDigraph::empty(n);
    let mut history = Vec::with_capacity(n);
    let order = g_prime
        .iter()
        .copied()
        .map(|v| (v, Stage::A))
        .chain(f_prime.iter().rev().copied().map(|v| (v, Stage::B)));
    for (u, stage) in order {
        let from = sigma.inverse_apply(u);
        if stage == Stage::B {
            if u % 2 == 1 {
                // u is a cycle valley; exactly f_u admissible sources lie
                // above it.
                let above = remaining_sources.range(u + 1..).count() as i64;
                assert_eq!(above, (heights[u] + 1) / 2, "source count at cycle valley {u}");
            }
            remaining_sources.remove(&from);
        }
        let closes_cycle = digraph.edge_closes_cycle(from, u);
        digraph.insert_edge(from, u);
        history.push(HistoryStep {
            vertex: u,
            stage,
            edge: (from, u),
            closes_cycle,
            snapshot: digraph.clone(),
        });
    }
    Ok(history)
}

/// The edges whose insertion closed a cycle, in insertion order.
pub fn cycle_closures(history: &[HistoryStep]) -> Vec<(usize, usize)> {
    history
        .iter()
        .filter(|step| step.closes_cycle)
        .map(|step| step.edge)
        .collect()
}
