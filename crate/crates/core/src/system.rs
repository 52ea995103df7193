//! Finite F-systems: sentences plus the "affirms the falsity of" relation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::SentenceSet;

/// Name of a sentence: a nonempty token over `[A-Za-z0-9_]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SentenceId(String);

impl SentenceId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_valid_name(&name) {
            Ok(SentenceId(name))
        } else {
            Err(Error::InvalidSentenceId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SentenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for SentenceId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// An immutable finite F-system.
///
/// Sentences are stored sorted by name, so a sentence's index is its position
/// in canonical order and every derived list comes out canonically ordered.
/// An edge `(x, y)` reads "x says that y is false". Self-loops are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct FSystem {
    names: Vec<SentenceId>,
    succ: Vec<SentenceSet>,
    pred: Vec<SentenceSet>,
    succ_lists: Vec<Vec<usize>>,
    pred_lists: Vec<Vec<usize>>,
    sinks: SentenceSet,
    edge_count: usize,
}

impl FSystem {
    /// Builds a system in strict mode: every edge endpoint must be declared.
    ///
    /// Duplicate declarations and duplicate edges collapse silently.
    pub fn build<S, E, A, B>(sentences: S, edges: E) -> Result<FSystem>
    where
        S: IntoIterator,
        S::Item: AsRef<str>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut builder = FSystemBuilder::strict();
        for s in sentences {
            builder.sentence(s.as_ref())?;
        }
        for (a, b) in edges {
            builder.edge(a.as_ref(), b.as_ref())?;
        }
        builder.finish()
    }

    /// Like [`FSystem::build`] but undeclared edge endpoints are declared on
    /// the fly.
    pub fn build_lenient<S, E, A, B>(sentences: S, edges: E) -> Result<FSystem>
    where
        S: IntoIterator,
        S::Item: AsRef<str>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut builder = FSystemBuilder::lenient();
        for s in sentences {
            builder.sentence(s.as_ref())?;
        }
        for (a, b) in edges {
            builder.edge(a.as_ref(), b.as_ref())?;
        }
        builder.finish()
    }

    /// Builds directly from indices; `edges` must be in range.
    pub(crate) fn from_parts(names: Vec<SentenceId>, edges: &BTreeSet<(usize, usize)>) -> FSystem {
        let n = names.len();
        let mut succ = vec![SentenceSet::empty(n); n];
        let mut pred = vec![SentenceSet::empty(n); n];
        let mut succ_lists = vec![Vec::new(); n];
        let mut pred_lists = vec![Vec::new(); n];
        for &(x, y) in edges {
            succ[x].insert(y);
            pred[y].insert(x);
            succ_lists[x].push(y);
            pred_lists[y].push(x);
        }
        for list in &mut pred_lists {
            list.sort_unstable();
        }
        let sinks = SentenceSet::from_indices(n, (0..n).filter(|&x| succ_lists[x].is_empty()));
        FSystem {
            names,
            succ,
            pred,
            succ_lists,
            pred_lists,
            sinks,
            edge_count: edges.len(),
        }
    }

    /// Builds a system on `n` sentences named by `name(i)` from an index edge list.
    ///
    /// The names must be valid and pairwise distinct; indices refer to the
    /// order of generation, not the canonical order.
    pub fn from_index_edges(
        n: usize,
        name: impl Fn(usize) -> String,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<FSystem> {
        let mut builder = FSystemBuilder::strict();
        let names: Vec<String> = (0..n).map(name).collect();
        for s in &names {
            builder.sentence(s)?;
        }
        for (a, b) in edges {
            let (Some(a), Some(b)) = (names.get(a), names.get(b)) else {
                return Err(Error::Precondition(format!("edge index ({a}, {b}) out of range")));
            };
            builder.edge(a, b)?;
        }
        builder.finish()
    }

    pub fn empty() -> FSystem {
        FSystem::from_parts(Vec::new(), &BTreeSet::new())
    }

    /// Number of sentences.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn names(&self) -> &[SentenceId] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        self.names[x].as_str()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .binary_search_by(|id| id.as_str().cmp(name))
            .map_err(|_| Error::UnknownSentence(name.to_string()))
    }

    /// Resolves a list of names into a set.
    pub fn set_of<I>(&self, names: I) -> Result<SentenceSet>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut set = self.empty_set();
        for name in names {
            set.insert(self.index_of(name.as_ref())?);
        }
        Ok(set)
    }

    /// Member names of `set`, canonically ordered.
    pub fn names_of(&self, set: &SentenceSet) -> Vec<String> {
        set.iter().map(|x| self.name(x).to_string()).collect()
    }

    pub fn empty_set(&self) -> SentenceSet {
        SentenceSet::empty(self.len())
    }

    pub fn all(&self) -> SentenceSet {
        SentenceSet::full(self.len())
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.succ[x].contains(y)
    }

    /// Edges as index pairs in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ_lists
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    /// The sentences `x` says are false.
    pub fn successors(&self, x: usize) -> &SentenceSet {
        &self.succ[x]
    }

    /// The sentences that say `x` is false.
    pub fn predecessors(&self, x: usize) -> &SentenceSet {
        &self.pred[x]
    }

    pub fn successor_list(&self, x: usize) -> &[usize] {
        &self.succ_lists[x]
    }

    pub fn predecessor_list(&self, x: usize) -> &[usize] {
        &self.pred_lists[x]
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.succ_lists[x].len()
    }

    pub fn successors_of_set(&self, set: &SentenceSet) -> SentenceSet {
        let mut out = self.empty_set();
        for x in set {
            out.union_with(&self.succ[x]);
        }
        out
    }

    pub fn predecessors_of_set(&self, set: &SentenceSet) -> SentenceSet {
        let mut out = self.empty_set();
        for x in set {
            out.union_with(&self.pred[x]);
        }
        out
    }

    pub fn is_sink(&self, x: usize) -> bool {
        self.succ_lists[x].is_empty()
    }

    /// All sinks of the system.
    pub fn sinks(&self) -> &SentenceSet {
        &self.sinks
    }

    /// The members of `set` that are sinks.
    pub fn sinks_of(&self, set: &SentenceSet) -> SentenceSet {
        set.intersection(&self.sinks)
    }

    /// Same sentences, every edge reversed.
    pub fn invert(&self) -> FSystem {
        let edges: BTreeSet<(usize, usize)> = self.edges().map(|(x, y)| (y, x)).collect();
        FSystem::from_parts(self.names.clone(), &edges)
    }

    /// Checks that `set` was drawn from this system.
    pub(crate) fn check_set(&self, set: &SentenceSet) -> Result<()> {
        if set.universe() == self.len() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "sentence set over {} sentences used with a system of {}",
                set.universe(),
                self.len()
            )))
        }
    }
}

impl fmt::Debug for FSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self.edges().map(|(x, y)| (self.name(x), self.name(y))).collect();
        f.debug_struct("FSystem")
            .field("sentences", &self.names.iter().map(SentenceId::as_str).collect::<Vec<_>>())
            .field("edges", &edges)
            .finish()
    }
}

/// Incremental construction of an [`FSystem`].
#[derive(Debug, Default)]
pub struct FSystemBuilder {
    lenient: bool,
    sentences: BTreeSet<SentenceId>,
    edges: BTreeSet<(SentenceId, SentenceId)>,
}

impl FSystemBuilder {
    /// Rejects edges whose endpoints were never declared.
    pub fn strict() -> Self {
        FSystemBuilder::default()
    }

    /// Declares edge endpoints automatically.
    pub fn lenient() -> Self {
        FSystemBuilder {
            lenient: true,
            ..FSystemBuilder::default()
        }
    }

    pub fn sentence(&mut self, name: &str) -> Result<&mut Self> {
        self.sentences.insert(SentenceId::new(name)?);
        Ok(self)
    }

    /// Records an edge. In strict mode both endpoints must already be declared.
    pub fn edge(&mut self, from: &str, to: &str) -> Result<&mut Self> {
        let a = SentenceId::new(from)?;
        let b = SentenceId::new(to)?;
        if self.lenient {
            self.sentences.insert(a.clone());
            self.sentences.insert(b.clone());
        } else if !self.sentences.contains(&a) || !self.sentences.contains(&b) {
            return Err(Error::UndeclaredEndpoint {
                from: from.to_string(),
                to: to.to_string(),
            });
        }
        self.edges.insert((a, b));
        Ok(self)
    }

    pub fn finish(self) -> Result<FSystem> {
        let names: Vec<SentenceId> = self.sentences.into_iter().collect();
        let index = |id: &SentenceId| names.binary_search(id).expect("endpoint declared");
        let edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|(a, b)| (index(a), index(b)))
            .collect();
        Ok(FSystem::from_parts(names, &edges))
    }
}
