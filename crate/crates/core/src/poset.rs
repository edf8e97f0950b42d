//! The directed-braid order on the reduced words of a permutation.
//!
//! Two generating moves, both strictly increasing in lexicographic order:
//!
//! * short: swap an adjacent pair `x y` with `y >= x + 2` into `y x`;
//! * long: for adjacent towers `a b` with `in(a) <= in(b) <= fin(b) < fin(a)`,
//!   split `b = b1 b2` with `b1` nonempty and rewrite `a b1 b2` as
//!   `lift(b1) a b2`.

use std::collections::{BTreeSet, HashMap};

use petgraph::algo::{toposort, tred};
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::IntoNeighbors;

use crate::error::{Error, Result};
use crate::oracle::enumerate_by_descents;
use crate::word::{evaluate_min, is_reduced, natural_word, tower_decomposition, Permutation, Word};
use crate::wordset::WordSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Short,
    Long,
}

impl Relation {
    pub fn label(self) -> &'static str {
        match self {
            Relation::Short => "1",
            Relation::Long => "2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub rel: Relation,
}

fn require_reduced(a: &Word) -> Result<()> {
    if is_reduced(a) {
        Ok(())
    } else {
        Err(Error::NotReduced(a.clone()))
    }
}

/// Words reachable from `a` by one short move.
pub fn succ_short(a: &Word) -> Result<WordSet> {
    require_reduced(a)?;
    let l = a.letters();
    Ok((0..a.len().saturating_sub(1))
        .filter(|&i| l[i + 1] >= l[i] + 2)
        .map(|i| a.swapped(i))
        .collect())
}

/// Words reachable from `a` by one long move.
pub fn succ_long(a: &Word) -> Result<WordSet> {
    require_reduced(a)?;
    let towers = tower_decomposition(a).into_towers();
    let target = evaluate_min(a);
    let mut out = WordSet::new();
    for i in 0..towers.len().saturating_sub(1) {
        let (left, right) = (&towers[i], &towers[i + 1]);
        let (li, lf) = (left.first().unwrap(), left.last().unwrap());
        let (ri, rf) = (right.first().unwrap(), right.last().unwrap());
        if !(li <= ri && ri <= rf && rf < lf) {
            continue;
        }
        for cut in 1..=right.len() {
            let moved = Word::new(right.letters()[..cut].to_vec())?.lift();
            let rest = Word::new(right.letters()[cut..].to_vec())?;
            let parts = towers[..i]
                .iter()
                .chain([&moved, left, &rest])
                .chain(&towers[i + 2..]);
            let b = Word::concat(parts);
            if !is_reduced(&b) || evaluate_min(&b) != target {
                return Err(Error::Consistency(format!("long move {a} -> {b} changes the permutation")));
            }
            out.insert(b);
        }
    }
    Ok(out)
}

/// All reduced words of one permutation with their short and long edges.
#[derive(Clone, Debug)]
pub struct PosetGraph {
    vertices: Vec<Word>,
    index: HashMap<Word, usize>,
    edges: BTreeSet<Edge>,
    root: usize,
}

impl PosetGraph {
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// The natural word.
    pub fn root(&self) -> &Word {
        &self.vertices[self.root]
    }

    pub fn has_edge(&self, from: &Word, to: &Word) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(f), Some(t)) => self.edges.iter().any(|e| e.from == f && e.to == t),
            _ => false,
        }
    }

    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut out_deg = vec![0; self.vertices.len()];
        let mut in_deg = vec![0; self.vertices.len()];
        let pairs: BTreeSet<(usize, usize)> = self.edges.iter().map(|e| (e.from, e.to)).collect();
        for (f, t) in pairs {
            out_deg[f] += 1;
            in_deg[t] += 1;
        }
        (out_deg, in_deg)
    }

    /// Vertices with no outgoing edge.
    pub fn maximal_elements(&self) -> WordSet {
        let (out_deg, _) = self.degrees();
        self.vertices.iter().zip(out_deg).filter(|(_, d)| *d == 0).map(|(w, _)| w.clone()).collect()
    }

    /// Vertices with no incoming edge.
    pub fn minimal_elements(&self) -> WordSet {
        let (_, in_deg) = self.degrees();
        self.vertices.iter().zip(in_deg).filter(|(_, d)| *d == 0).map(|(w, _)| w.clone()).collect()
    }

    /// Successor lists by vertex index, ignoring relation tags.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            if adj[e.from].last() != Some(&e.to) {
                adj[e.from].push(e.to);
            }
        }
        adj
    }

    /// For each vertex, the set of vertices reachable by a nonempty path.
    pub fn reachability(&self) -> Vec<BTreeSet<usize>> {
        let adj = self.adjacency();
        let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); adj.len()];
        // vertices are in lex order and every edge increases lex order
        for v in (0..adj.len()).rev() {
            let mut r = BTreeSet::new();
            for &s in &adj[v] {
                r.insert(s);
                r.extend(reach[s].iter().copied());
            }
            reach[v] = r;
        }
        reach
    }

    /// Transitive reduction. Every surviving edge keeps the relation tags it had.
    pub fn hasse_reduction(&self) -> Result<PosetGraph> {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(self.vertices.len(), self.edges.len());
        let nodes: Vec<NodeIndex> = (0..self.vertices.len()).map(|_| g.add_node(())).collect();
        for (f, t) in self.edges.iter().map(|e| (e.from, e.to)).collect::<BTreeSet<_>>() {
            g.add_edge(nodes[f], nodes[t], ());
        }
        let order = toposort(&g, None)
            .map_err(|_| Error::Consistency("directed-braid graph has a cycle".into()))?;
        let (list, revmap) = tred::dag_to_toposorted_adjacency_list::<_, u32>(&g, &order);
        let (reduced, _closure) = tred::dag_transitive_reduction_closure(&list);
        let mut keep = BTreeSet::new();
        for (old, &rank) in revmap.iter().enumerate() {
            for succ in reduced.neighbors(rank) {
                keep.insert((old, order[succ as usize].index()));
            }
        }
        let edges = self.edges.iter().filter(|e| keep.contains(&(e.from, e.to))).copied().collect();
        Ok(PosetGraph { edges, ..self.clone() })
    }

    /// Builds from explicit parts; used for small hand-made graphs.
    pub fn from_parts(vertices: Vec<Word>, edges: impl IntoIterator<Item = Edge>, root: usize) -> Self {
        let index = vertices.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        PosetGraph { vertices, index, edges: edges.into_iter().collect(), root }
    }
}

/// The directed-braid poset of `p`. Vertices come from the descent oracle.
pub fn build_poset(p: &Permutation, max_words: usize) -> Result<PosetGraph> {
    let vertices = enumerate_by_descents(p, max_words)?.to_vec();
    let index: HashMap<Word, usize> = vertices.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = BTreeSet::new();
    for (from, w) in vertices.iter().enumerate() {
        for (rel, succ) in [(Relation::Short, succ_short(w)?), (Relation::Long, succ_long(w)?)] {
            for t in succ.iter() {
                let to = *index
                    .get(t)
                    .ok_or_else(|| Error::Consistency(format!("{w} -> {t} leaves the vertex set")))?;
                edges.insert(Edge { from, to, rel });
            }
        }
    }
    let root = index[&natural_word(p)];
    Ok(PosetGraph { vertices, index, edges, root })
}
