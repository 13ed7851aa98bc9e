//! Canonical forms and isomorphism of incidence polytopes.
//!
//! Combinatorial equivalence is label-independent, so we canonicalise the
//! bipartite vertex–facet incidence graph: iterative colour refinement,
//! individualisation with backtracking on ties, pruning both by partition
//! invariants and by automorphisms discovered from coinciding leaves. The
//! search is exact — a configurable node budget aborts with a resource
//! error rather than ever returning a wrong answer.

use std::cmp::Ordering;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;

/// Default cap on refinement steps for one canonicalisation.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A canonical key: equal keys exactly characterise combinatorial
/// equivalence (including equality of the claimed dimension).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub dim: usize,
    pub n_vertices: usize,
    pub n_facets: usize,
    /// Facet lists under the canonical vertex numbering, sorted.
    pub facets: Vec<Vec<u32>>,
}

/// Canonical form as a printable string, stable under any relabelling of
/// vertices and facets.
pub fn canonical_form(p: &IncidencePolytope) -> Result<String> {
    let key = canonical_key(p)?;
    let facets: Vec<String> = key
        .facets
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    Ok(format!(
        "d{};v{};f{};{}",
        key.dim,
        key.n_vertices,
        key.n_facets,
        facets.join("|")
    ))
}

pub fn is_isomorphic(p: &IncidencePolytope, q: &IncidencePolytope) -> Result<bool> {
    if p.dim() != q.dim()
        || p.n_vertices() != q.n_vertices()
        || p.n_facets() != q.n_facets()
    {
        return Ok(false);
    }
    Ok(canonical_key(p)? == canonical_key(q)?)
}

pub fn canonical_key(p: &IncidencePolytope) -> Result<CanonicalKey> {
    canonical_key_with_budget(p, DEFAULT_BUDGET)
}

pub fn canonical_key_with_budget(p: &IncidencePolytope, budget: usize) -> Result<CanonicalKey> {
    let mut search = Search::new(p, budget);
    let initial = search.refine(search.initial_colors())?;
    let trace = partition_trace(&initial);
    search.dfs(initial, &mut Vec::new(), vec![trace])?;
    let best = search.best.expect("search always reaches at least one leaf");
    Ok(CanonicalKey {
        dim: p.dim(),
        n_vertices: p.n_vertices(),
        n_facets: p.n_facets(),
        facets: best.leaf,
    })
}

type Colors = Vec<u32>;
type Trace = Vec<(u32, u32)>;
type Leaf = Vec<Vec<u32>>;

struct Best {
    trace_path: Vec<Trace>,
    leaf: Leaf,
    order: Vec<usize>,
}

struct Search<'a> {
    p: &'a IncidencePolytope,
    /// Bipartite adjacency over nodes 0..n (vertices) and n..n+m (facets).
    adj: Vec<BitSet>,
    nodes: usize,
    budget: usize,
    best: Option<Best>,
    generators: Vec<Vec<usize>>,
}

/// Partition shape: (colour, class size) pairs in colour order.
fn partition_trace(colors: &Colors) -> Trace {
    let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut sizes = vec![0u32; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes
        .into_iter()
        .enumerate()
        .map(|(c, s)| (c as u32, s))
        .collect()
}

fn cmp_prefix(a: &[Trace], b: &[Trace]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl<'a> Search<'a> {
    fn new(p: &'a IncidencePolytope, budget: usize) -> Self {
        let n = p.n_vertices();
        let m = p.n_facets();
        let nodes = n + m;
        let mut adj = vec![BitSet::empty(nodes); nodes];
        for (j, f) in p.facets().iter().enumerate() {
            for v in f.iter() {
                adj[v].insert(n + j);
                adj[n + j].insert(v);
            }
        }
        Search {
            p,
            adj,
            nodes,
            budget,
            best: None,
            generators: Vec::new(),
        }
    }

    fn initial_colors(&self) -> Colors {
        let n = self.p.n_vertices();
        (0..self.nodes).map(|i| u32::from(i >= n)).collect()
    }

    /// Colour refinement to a fixpoint; colour ids are ranks of sorted
    /// signatures, hence independent of input labelling.
    fn refine(&mut self, mut colors: Colors) -> Result<Colors> {
        if self.budget == 0 {
            return Err(Error::resource("canonical-form search budget exhausted"));
        }
        self.budget -= 1;
        loop {
            let classes = 1 + *colors.iter().max().unwrap() as usize;
            let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(self.nodes);
            for i in 0..self.nodes {
                let mut nb: Vec<u32> = self.adj[i].iter().map(|j| colors[j]).collect();
                nb.sort_unstable();
                sigs.push((colors[i], nb));
            }
            let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            if distinct.len() == classes {
                return Ok(colors);
            }
            for (i, sig) in sigs.iter().enumerate() {
                colors[i] = distinct.binary_search(&sig).unwrap() as u32;
            }
        }
    }

    fn is_discrete(&self, colors: &Colors) -> bool {
        let mut seen = vec![false; self.nodes];
        for &c in colors {
            if seen[c as usize] {
                return false;
            }
            seen[c as usize] = true;
        }
        true
    }

    /// Canonical facet lists under a discrete colouring.
    fn leaf_value(&self, colors: &Colors) -> (Leaf, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.nodes).collect();
        order.sort_by_key(|&i| colors[i]);
        let n = self.p.n_vertices();
        let mut vertex_rank = vec![0u32; n];
        let mut next = 0u32;
        for &node in &order {
            if node < n {
                vertex_rank[node] = next;
                next += 1;
            }
        }
        let mut facets: Vec<Vec<u32>> = self
            .p
            .facets()
            .iter()
            .map(|f| {
                let mut list: Vec<u32> = f.iter().map(|v| vertex_rank[v]).collect();
                list.sort_unstable();
                list
            })
            .collect();
        facets.sort();
        (facets, order)
    }

    fn dfs(
        &mut self,
        colors: Colors,
        path: &mut Vec<usize>,
        trace_path: Vec<Trace>,
    ) -> Result<()> {
        if self.is_discrete(&colors) {
            let (leaf, order) = self.leaf_value(&colors);
            match &self.best {
                None => {
                    self.best = Some(Best {
                        trace_path,
                        leaf,
                        order,
                    });
                }
                Some(best) => {
                    let c = cmp_prefix(&trace_path, &best.trace_path)
                        .then_with(|| leaf.cmp(&best.leaf));
                    match c {
                        Ordering::Less => {
                            self.best = Some(Best {
                                trace_path,
                                leaf,
                                order,
                            });
                        }
                        Ordering::Equal => {
                            // Coinciding leaves yield an automorphism.
                            let mut gamma = vec![0usize; self.nodes];
                            for (i, &b) in best.order.iter().enumerate() {
                                gamma[b] = order[i];
                            }
                            if gamma.iter().enumerate().any(|(i, &g)| g != i) {
                                self.generators.push(gamma);
                            }
                        }
                        Ordering::Greater => {}
                    }
                }
            }
            return Ok(());
        }

        // Target cell: the smallest colour class with more than one node.
        let target = {
            let trace = partition_trace(&colors);
            trace
                .iter()
                .find(|&&(_, size)| size > 1)
                .map(|&(c, _)| c)
                .unwrap()
        };
        let mut cell: Vec<usize> = (0..self.nodes)
            .filter(|&i| colors[i] == target)
            .collect();

        // Refine each candidate child and order by its invariant.
        let mut children: Vec<(Trace, usize, Colors)> = Vec::with_capacity(cell.len());
        for &x in &cell {
            let mut c2: Colors = colors.iter().map(|&c| c * 2).collect();
            c2[x] += 1;
            let refined = self.refine(c2)?;
            children.push((partition_trace(&refined), x, refined));
        }
        children.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        cell.clear();

        let mut explored: Vec<usize> = Vec::new();
        for (child_trace, x, refined) in children {
            if self.in_explored_orbit(x, &explored, path) {
                continue;
            }
            let mut next_path = trace_path.clone();
            next_path.push(child_trace);
            if let Some(best) = &self.best {
                if cmp_prefix(&next_path, &best.trace_path) == Ordering::Greater {
                    explored.push(x);
                    continue;
                }
            }
            path.push(x);
            self.dfs(refined, path, next_path)?;
            path.pop();
            explored.push(x);
        }
        Ok(())
    }

    /// True when `x` lies in the orbit of an already explored sibling under
    /// the automorphisms that fix every individualised node on the path.
    fn in_explored_orbit(&self, x: usize, explored: &[usize], path: &[usize]) -> bool {
        if explored.is_empty() || self.generators.is_empty() {
            return false;
        }
        let applicable: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| path.iter().all(|&p| g[p] == p))
            .collect();
        if applicable.is_empty() {
            return false;
        }
        let mut orbit = vec![false; self.nodes];
        let mut queue = vec![x];
        orbit[x] = true;
        while let Some(y) = queue.pop() {
            for g in &applicable {
                for z in [g[y], g.iter().position(|&w| w == y).unwrap()] {
                    if !orbit[z] {
                        if explored.contains(&z) {
                            return true;
                        }
                        orbit[z] = true;
                        queue.push(z);
                    }
                }
            }
        }
        false
    }
}
