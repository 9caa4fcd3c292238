//! Permutations of `[n]` in one-line form, D-permutations and their
//! subclasses, cycle structure, and Laguerre digraphs.
//!
//! Everything is 1-indexed at the API boundary, matching the usual
//! convention for permutations.

use std::fmt;
use std::str::FromStr;

/// A permutation of `{1, ..., n}` in one-line form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    NotABijection,
    OddSize,
    NumberFormat(String),
    IndexOutOfRange(usize),
    NotAFixedPoint(usize),
    NotInClass(&'static str),
}

impl fmt::Display for PermError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection => write!(out, "word is not a bijection of {{1,...,n}}"),
            PermError::OddSize => write!(out, "operation requires an even-sized permutation"),
            PermError::NumberFormat(s) => write!(out, "could not read {s:?} as a number"),
            PermError::IndexOutOfRange(i) => write!(out, "index {i} out of range"),
            PermError::NotAFixedPoint(i) => write!(out, "index {i} is not a fixed point"),
            PermError::NotInClass(cls) => write!(out, "permutation is not a {cls}"),
        }
    }
}

impl std::error::Error for PermError {}

impl Permutation {
    /// Build from a 1-indexed one-line word, checking bijectivity.
    pub fn from_word(word: Vec<usize>) -> Result<Permutation, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotABijection);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `σ(i)`, 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// `σ⁻¹(i)`, 1-indexed.
    pub fn inverse_apply(&self, i: usize) -> usize {
        // Linear scan: n ≤ 14 at desk scale, not worth caching.
        self.word.iter().position(|&v| v == i).unwrap() + 1
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The inverse permutation as a table: `inv[i-1] = σ⁻¹(i)`.
    pub fn inverse_table(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        inv
    }

    pub fn is_fixed_point(&self, i: usize) -> bool {
        self.apply(i) == i
    }

    /// Whether every even index satisfies `σ(2k) ≤ 2k` and every odd index
    /// `σ(2k−1) ≥ 2k−1`; errors on odd `n`.
    pub fn is_dpermutation(&self) -> Result<bool, PermError> {
        if !self.n().is_multiple_of(2) {
            return Err(PermError::OddSize);
        }
        Ok(self.word.iter().enumerate().all(|(idx, &v)| {
            let i = idx + 1;
            if i % 2 == 0 {
                v <= i
            } else {
                v >= i
            }
        }))
    }

    /// Cycles as index lists, each starting at its minimum element,
    /// sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v - 1] {
                seen[v - 1] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cyc(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle notation, e.g. `(1,9,10)(2,3,7,5,6,11)(4)(8)`.
    pub fn cycle_notation(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles() {
            out.push('(');
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&v.to_string());
            }
            out.push(')');
        }
        out
    }

    fn from_cycle_notation(s: &str) -> Result<Permutation, PermError> {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut max = 0;
        for chunk in s.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let inner = chunk
                .strip_prefix('(')
                .ok_or_else(|| PermError::NumberFormat(chunk.to_string()))?;
            let members: Result<Vec<usize>, _> = inner
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| PermError::NumberFormat(tok.to_string()))
                })
                .collect();
            let members = members?;
            if members.is_empty() {
                return Err(PermError::NumberFormat(chunk.to_string()));
            }
            for window in 0..members.len() {
                let from = members[window];
                let to = members[(window + 1) % members.len()];
                max = max.max(from);
                pairs.push((from, to));
            }
        }
        let mut word = vec![0; max];
        for (from, to) in pairs {
            if from == 0 || from > max || word[from - 1] != 0 {
                return Err(PermError::NotABijection);
            }
            word[from - 1] = to;
        }
        if word.contains(&0) {
            return Err(PermError::NotABijection);
        }
        Permutation::from_word(word)
    }
}

/// Accepts the one-line word form `"9 3 7 4 6 11 5 8 10 1 2"` and the cycle
/// form `"(1,9,10)(2,3,7,5,6,11)(4)(8)"`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Permutation, PermError> {
        let s = s.trim();
        if s.starts_with('(') {
            return Permutation::from_cycle_notation(s);
        }
        let word: Result<Vec<usize>, _> = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| PermError::NumberFormat(tok.to_string()))
            })
            .collect();
        Permutation::from_word(word?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(out, " ")?;
            }
            write!(out, "{}", v)?;
        }
        Ok(())
    }
}

/// Restartable stream of all permutations of `[n]` in lexicographic order
/// of the one-line word. `n = 0` yields one empty permutation.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.next.take()?;
        let mut succ = word.clone();
        self.next = next_lex(&mut succ).then_some(succ);
        Some(Permutation { word })
    }
}

/// Visit every permutation word of `[n]` in lexicographic order without
/// allocating per item; the buffer is reused between calls.
pub fn visit_permutations(n: usize, mut visitor: impl FnMut(&[usize])) {
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        visitor(&word);
        if !next_lex(&mut word) {
            return;
        }
    }
}

/// Advance `word` to its lexicographic successor in place.
/// Returns false when `word` was the last permutation.
fn next_lex(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Subclasses of D-permutations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DPermClass {
    /// All D-permutations.
    All,
    /// No even fixed points.
    ESemiderangement,
    /// No odd fixed points.
    OSemiderangement,
    /// No fixed points.
    Derangement,
    /// Exactly one cycle.
    Cycle,
}

impl DPermClass {
    pub fn admits(self, sigma: &Permutation) -> bool {
        match self {
            DPermClass::All => true,
            DPermClass::ESemiderangement => {
                !(1..=sigma.n()).any(|i| i % 2 == 0 && sigma.is_fixed_point(i))
            }
            DPermClass::OSemiderangement => {
                !(1..=sigma.n()).any(|i| i % 2 == 1 && sigma.is_fixed_point(i))
            }
            DPermClass::Derangement => !(1..=sigma.n()).any(|i| sigma.is_fixed_point(i)),
            DPermClass::Cycle => sigma.cyc() == 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DPermClass::All => "all",
            DPermClass::ESemiderangement => "esemi",
            DPermClass::OSemiderangement => "osemi",
            DPermClass::Derangement => "derangement",
            DPermClass::Cycle => "cycle",
        }
    }
}

impl FromStr for DPermClass {
    type Err = PermError;

    fn from_str(s: &str) -> Result<DPermClass, PermError> {
        match s {
            "all" => Ok(DPermClass::All),
            "esemi" | "e" => Ok(DPermClass::ESemiderangement),
            "osemi" | "o" => Ok(DPermClass::OSemiderangement),
            "derangement" | "eo" => Ok(DPermClass::Derangement),
            "cycle" | "dc" => Ok(DPermClass::Cycle),
            other => Err(PermError::NumberFormat(other.to_string())),
        }
    }
}

/// Stream of the D-permutations of `[two_n]` in the requested class, in
/// lexicographic order: the full `S_{2n}` stream filtered by the defining
/// inequalities. Desk scale (`2n ≤ 12`) keeps this cheap.
pub fn d_permutations(two_n: usize, class: DPermClass) -> impl Iterator<Item = Permutation> {
    assert!(two_n.is_multiple_of(2), "D-permutations require even size");
    permutations(two_n).filter(move |sigma| {
        sigma.is_dpermutation() == Ok(true) && class.admits(sigma)
    })
}

fn word_is_dperm(word: &[usize]) -> bool {
    word.iter().enumerate().all(|(idx, &v)| {
        let i = idx + 1;
        if i % 2 == 0 {
            v <= i
        } else {
            v >= i
        }
    })
}

/// Count of `d_permutations(two_n, class)`: filters the full `S_{2n}`
/// stream like the iterator, but through the allocation-free visitor.
pub fn d_permutation_count(two_n: usize, class: DPermClass) -> u64 {
    assert!(two_n.is_multiple_of(2), "D-permutations require even size");
    let mut count = 0u64;
    match class {
        DPermClass::All => {
            visit_permutations(two_n, |word| {
                if word_is_dperm(word) {
                    count += 1;
                }
            });
        }
        // Subclass predicates look at global cycle structure; go through
        // the materializing stream.
        _ => count = d_permutations(two_n, class).count() as u64,
    }
    count
}

/// Independent route to `d_permutation_count(two_n, All)`: backtracking
/// over positions with the defining inequalities as pruning rules. Used
/// to cross-check the filter.
pub fn d_permutation_count_pruned(two_n: usize) -> u64 {
    assert!(two_n.is_multiple_of(2), "D-permutations require even size");
    let mut count = 0u64;
    let mut used = vec![false; two_n + 1];
    count_dperms_rec(two_n, 1, &mut used, &mut count);
    count
}

fn count_dperms_rec(n: usize, pos: usize, used: &mut [bool], count: &mut u64) {
    if pos > n {
        *count += 1;
        return;
    }
    let range = if pos.is_multiple_of(2) { 1..=pos } else { pos..=n };
    for v in range {
        if !used[v] {
            used[v] = true;
            count_dperms_rec(n, pos + 1, used, count);
            used[v] = false;
        }
    }
}

/// A digraph on `[n]` in which every vertex has in- and out-degree 0 or 1.
/// Connected components are directed paths (including isolated vertices)
/// or directed cycles (including loops).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaguerreDigraph {
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
}

impl LaguerreDigraph {
    pub fn empty(n: usize) -> LaguerreDigraph {
        LaguerreDigraph {
            succ: vec![None; n],
            pred: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn succ(&self, u: usize) -> Option<usize> {
        self.succ[u - 1]
    }

    pub fn pred(&self, v: usize) -> Option<usize> {
        self.pred[v - 1]
    }

    /// Insert the edge `u → v`. Panics if it would violate the degree
    /// constraints; histories only ever insert fresh edges.
    pub fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(self.succ[u - 1].is_none(), "vertex {u} already has an out-edge");
        assert!(self.pred[v - 1].is_none(), "vertex {v} already has an in-edge");
        self.succ[u - 1] = Some(v);
        self.pred[v - 1] = Some(u);
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().flatten().count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| (i + 1, v)))
    }

    /// Would inserting `u → v` turn an existing path with at least two
    /// vertices into a cycle? True iff `u ≠ v`, `u` is the final vertex of
    /// a path whose initial vertex is `v`.
    pub fn edge_closes_cycle(&self, u: usize, v: usize) -> bool {
        if u == v || self.succ[u - 1].is_some() || self.pred[v - 1].is_some() {
            return false;
        }
        // Walk back from u; if we reach v, then u and v bound one path.
        let mut w = u;
        while let Some(p) = self.pred[w - 1] {
            w = p;
            if w == v {
                return true;
            }
        }
        false
    }

    pub fn components(&self) -> Components {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Components::default();
        // Paths and isolated vertices: start from in-degree-0 vertices.
        for start in 1..=n {
            if self.pred[start - 1].is_some() {
                continue;
            }
            let mut vertices = vec![start];
            seen[start - 1] = true;
            let mut v = start;
            while let Some(next) = self.succ[v - 1] {
                vertices.push(next);
                seen[next - 1] = true;
                v = next;
            }
            if vertices.len() == 1 {
                out.isolated.push(start);
            } else {
                let last = *vertices.last().unwrap();
                let interior = vertices[1..vertices.len() - 1].to_vec();
                out.paths.push(PathComponent {
                    initial: start,
                    final_: last,
                    interior,
                });
            }
        }
        // What remains is covered by cycles; canonicalize at the minimum.
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut v = self.succ[start - 1].expect("unseen vertex must lie on a cycle");
            while v != start {
                cycle.push(v);
                seen[v - 1] = true;
                v = self.succ[v - 1].unwrap();
            }
            if cycle.len() == 1 {
                out.loops.push(start);
            } else {
                out.nontrivial_cycles.push(cycle);
            }
        }
        out
    }
}

/// A directed path with at least two vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathComponent {
    pub initial: usize,
    pub final_: usize,
    pub interior: Vec<usize>,
}

/// Disjoint classification of the connected components of a Laguerre
/// digraph. Cycles start at their minimum; lists are ordered by discovery
/// from the smallest vertex, hence deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Components {
    pub loops: Vec<usize>,
    pub nontrivial_cycles: Vec<Vec<usize>>,
    pub paths: Vec<PathComponent>,
    pub isolated: Vec<usize>,
}

/// The digraph of `σ`: edges `u → σ(u)` for every `u`. No paths remain,
/// only cycles and loops.
pub fn laguerre_of(sigma: &Permutation) -> LaguerreDigraph {
    restrict_by_source(sigma, (1..=sigma.n()).collect::<Vec<_>>().as_slice())
}

/// Keep only the edges `u → σ(u)` with `u ∈ S`.
pub fn restrict_by_source(sigma: &Permutation, s: &[usize]) -> LaguerreDigraph {
    let mut g = LaguerreDigraph::empty(sigma.n());
    for &u in s {
        g.insert_edge(u, sigma.apply(u));
    }
    g
}

/// Keep only the edges `σ⁻¹(i) → i` with `i ∈ S`.
pub fn restrict_by_target(sigma: &Permutation, s: &[usize]) -> LaguerreDigraph {
    let mut g = LaguerreDigraph::empty(sigma.n());
    for &i in s {
        g.insert_edge(sigma.inverse_apply(i), i);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    pub(crate) const EXAMPLE_1: &str = "9 3 7 4 6 11 5 8 10 1 2";
    pub(crate) const EXAMPLE_2: &str = "7 1 9 2 5 4 8 6 10 3 11 12 14 13";

    #[test]
    fn permutation_stream_counts_and_order() {
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(0).next().unwrap().n(), 0);
        let singletons: Vec<_> = permutations(1).collect();
        assert_eq!(singletons, vec![perm("1")]);
        let all4: Vec<_> = permutations(4).collect();
        assert_eq!(all4.len(), 24);
        assert_eq!(all4[0], perm("1 2 3 4"));
        assert_eq!(all4[23], perm("4 3 2 1"));
        let mut sorted = all4.clone();
        sorted.sort_by(|a, b| a.word().cmp(b.word()));
        assert_eq!(all4, sorted);
    }

    #[test]
    fn dperm_membership() {
        assert_eq!(perm("2 1 4 3").is_dpermutation(), Ok(true));
        assert_eq!(perm("1 2 3 4").is_dpermutation(), Ok(true));
        assert_eq!(perm("1 2 4 3").is_dpermutation(), Ok(true));
        assert_eq!(perm("4 3 2 1").is_dpermutation(), Ok(false));
        assert_eq!(perm("1 2 3").is_dpermutation(), Err(PermError::OddSize));
        assert_eq!(perm(EXAMPLE_2).is_dpermutation(), Ok(true));
    }

    #[test]
    fn dperm_streams_match_the_listings() {
        let d2: Vec<String> = d_permutations(2, DPermClass::All)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(d2, vec!["1 2", "2 1"]);

        let d4: Vec<String> = d_permutations(4, DPermClass::All)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            d4,
            vec![
                "1 2 3 4", "1 2 4 3", "2 1 3 4", "2 1 4 3", "3 1 4 2", "3 2 4 1", "4 1 3 2",
                "4 2 3 1"
            ]
        );

        let dc4: Vec<String> = d_permutations(4, DPermClass::Cycle)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(dc4, vec!["3 1 4 2"]);
    }

    #[test]
    fn dperm_count_agrees_with_stream() {
        for two_n in [2usize, 4, 6, 8] {
            for class in [
                DPermClass::All,
                DPermClass::ESemiderangement,
                DPermClass::OSemiderangement,
                DPermClass::Derangement,
                DPermClass::Cycle,
            ] {
                assert_eq!(
                    d_permutation_count(two_n, class),
                    d_permutations(two_n, class).count() as u64,
                    "2n={two_n} class={class:?}"
                );
            }
            assert_eq!(
                d_permutation_count_pruned(two_n),
                d_permutation_count(two_n, DPermClass::All)
            );
        }
    }

    #[test]
    fn visitor_matches_iterator() {
        let mut seen = Vec::new();
        visit_permutations(4, |word| seen.push(word.to_vec()));
        let expected: Vec<Vec<usize>> = permutations(4).map(|p| p.word().to_vec()).collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn cycle_structure_of_running_examples() {
        let sigma = perm(EXAMPLE_1);
        assert_eq!(sigma.cyc(), 4);
        assert_eq!(sigma.cycle_notation(), "(1,9,10)(2,3,7,5,6,11)(4)(8)");

        let sigma2 = perm(EXAMPLE_2);
        assert_eq!(sigma2.cyc(), 6);
        assert_eq!(
            sigma2.cycle_notation(),
            "(1,7,8,6,4,2)(3,9,10)(5)(11)(12)(13,14)"
        );

        assert_eq!(Permutation::identity(5).cyc(), 5);
    }

    #[test]
    fn parse_round_trips_both_forms() {
        let sigma = perm(EXAMPLE_1);
        assert_eq!(sigma.to_string().parse::<Permutation>().unwrap(), sigma);
        assert_eq!(
            sigma.cycle_notation().parse::<Permutation>().unwrap(),
            sigma
        );
    }

    #[test]
    fn laguerre_of_small_cases() {
        let id2 = Permutation::identity(2);
        let g = laguerre_of(&id2);
        let comps = g.components();
        assert_eq!(comps.loops, vec![1, 2]);
        assert!(comps.paths.is_empty() && comps.isolated.is_empty());

        let swap = perm("2 1");
        let comps = laguerre_of(&swap).components();
        assert_eq!(comps.nontrivial_cycles, vec![vec![1, 2]]);
    }

    #[test]
    fn laguerre_components_match_cycles() {
        let sigma = perm(EXAMPLE_1);
        let comps = laguerre_of(&sigma).components();
        assert!(comps.paths.is_empty() && comps.isolated.is_empty());
        let mut cycles: Vec<Vec<usize>> = comps.nontrivial_cycles.clone();
        cycles.extend(comps.loops.iter().map(|&u| vec![u]));
        cycles.sort();
        let mut expected = sigma.cycles();
        expected.sort();
        assert_eq!(cycles, expected);
    }

    #[test]
    fn restriction_examples() {
        let sigma = perm(EXAMPLE_1);
        let empty = restrict_by_source(&sigma, &[]);
        assert_eq!(empty.edge_count(), 0);

        let full = restrict_by_source(&sigma, &(1..=11).collect::<Vec<_>>());
        assert_eq!(full, laguerre_of(&sigma));

        // S = H ∪ G = {4,8} ∪ {7,10,11}
        let g = restrict_by_source(&sigma, &[4, 8, 7, 10, 11]);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        assert_eq!(edges, vec![(4, 4), (7, 5), (8, 8), (10, 1), (11, 2)]);
        let comps = g.components();
        assert_eq!(comps.loops, vec![4, 8]);
        assert_eq!(comps.paths.len(), 3);
        assert!(comps.paths.iter().all(|p| p.interior.is_empty()));
        assert_eq!(comps.isolated, vec![3, 6, 9]);
        assert!(comps.nontrivial_cycles.is_empty());
    }

    #[test]
    fn component_classification_edge_cases() {
        let g = LaguerreDigraph::empty(3);
        let comps = g.components();
        assert_eq!(comps.isolated, vec![1, 2, 3]);

        let mut g = LaguerreDigraph::empty(2);
        g.insert_edge(1, 2);
        let comps = g.components();
        assert_eq!(comps.paths.len(), 1);
        assert_eq!((comps.paths[0].initial, comps.paths[0].final_), (1, 2));
    }

    #[test]
    fn source_restriction_never_creates_partial_cycles() {
        // A directed cycle appears only when the cycle's whole vertex set
        // is included.
        for sigma in permutations(5) {
            let cycles = sigma.cycles();
            for mask in 0u32..(1 << 5) {
                let s: Vec<usize> = (1..=5).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let comps = restrict_by_source(&sigma, &s).components();
                let mut got: Vec<Vec<usize>> = comps.nontrivial_cycles.clone();
                got.extend(comps.loops.iter().map(|&u| vec![u]));
                for cycle in &got {
                    assert!(cycle.iter().all(|v| s.contains(v)));
                    assert!(cycles.contains(cycle));
                }
            }
        }
    }
}
