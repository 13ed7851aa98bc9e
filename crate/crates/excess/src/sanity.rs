//! Necessary-condition checks for polytopality.
//!
//! Passing the battery does not certify that an incidence structure is a
//! polytope (no finite check at this level of description can), but every
//! genuine polytope passes, so failures are definitive rejections.

use crate::bitset::BitSet;
use crate::error::Result;
use crate::lattice;
use crate::polytope::IncidencePolytope;

#[derive(Clone, Debug)]
pub struct SanityEntry {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Outcome of [`sanity_check`]: one entry per necessary condition.
#[derive(Clone, Debug)]
pub struct SanityReport {
    pub entries: Vec<SanityEntry>,
}

impl SanityReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| {
                format!(
                    "{}: {}",
                    e.name,
                    e.detail.as_deref().unwrap_or("failed")
                )
            })
            .collect()
    }
}

impl std::fmt::Display for SanityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{:24} {}{}",
                e.name,
                if e.passed { "pass" } else { "FAIL" },
                e.detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default()
            )?;
        }
        write!(f, "necessary conditions only; passing does not prove polytopality")
    }
}

/// Runs the battery: incidence invariants, lattice grading, diamond
/// property, ridges-in-two-facets, the Euler relation, and Balinski
/// connectivity of the graph. Failures are report entries, never errors;
/// only resource exhaustion aborts.
pub fn sanity_check(p: &IncidencePolytope) -> Result<SanityReport> {
    let mut entries = Vec::new();
    let mut entry = |name: &'static str, res: std::result::Result<(), String>| {
        entries.push(match res {
            Ok(()) => SanityEntry {
                name,
                passed: true,
                detail: None,
            },
            Err(detail) => SanityEntry {
                name,
                passed: false,
                detail: Some(detail),
            },
        });
    };

    entry("incidence-invariants", p.validate_incidence());

    let raw = lattice::enumerate(p)?;
    entry("lattice-graded", raw.check_graded());
    entry("diamond-property", raw.check_diamond());
    entry("ridges-in-two-facets", raw.check_ridges());

    let lat = raw.into_lattice();
    entry(
        "euler-relation",
        if lat.euler_characteristic_ok() {
            Ok(())
        } else {
            Err(format!("f-vector {:?} fails the alternating sum", lat.f_vector()))
        },
    );

    entry("balinski-connectivity", check_balinski(p));

    Ok(SanityReport { entries })
}

/// Balinski's condition: the graph of a d-polytope is d-connected.
pub fn check_balinski(p: &IncidencePolytope) -> std::result::Result<(), String> {
    let d = p.dim();
    let n = p.n_vertices();
    if d <= 1 || n <= d {
        // dim 0/1 are trivial; n <= d cannot occur for valid input.
        return Ok(());
    }
    let adj = p.adjacency();
    if is_k_connected(&adj, d) {
        Ok(())
    } else {
        Err(format!("graph is not {d}-connected"))
    }
}

/// Vertex connectivity test via unit-capacity max-flow on the split graph.
/// Checks flow(v_i, u) >= k for the first k vertices against all their
/// non-neighbours, which suffices: any cutset of size < k misses one of the
/// first k vertices, and that vertex is separated from some non-neighbour.
pub fn is_k_connected(adj: &[BitSet], k: usize) -> bool {
    let n = adj.len();
    if n <= k {
        return false;
    }
    if adj.iter().any(|a| a.len() < k) {
        return false;
    }
    if adj.iter().all(|a| a.len() == n - 1) {
        return true; // complete graph
    }
    for s in 0..k.min(n) {
        let mut non_neighbours = adj[s].complement();
        non_neighbours.remove(s);
        for t in non_neighbours.iter() {
            if max_vertex_flow(adj, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Number of internally vertex-disjoint s-t paths, computed up to `cap`.
fn max_vertex_flow(adj: &[BitSet], s: usize, t: usize, cap: usize) -> usize {
    let n = adj.len();
    // Split nodes: in(v) = v, out(v) = n + v. Unit capacities throughout;
    // edge flow is recorded per direction, interior usage per vertex.
    let mut edge_flow: Vec<BitSet> = vec![BitSet::empty(n); n];
    let mut used = BitSet::empty(n);
    let mut flow = 0;
    while flow < cap {
        // BFS from out(s) to in(t) over the residual graph.
        let mut parent: Vec<Option<usize>> = vec![None; 2 * n];
        let mut queue = std::collections::VecDeque::new();
        parent[n + s] = Some(n + s);
        queue.push_back(n + s);
        let mut reached = false;
        'bfs: while let Some(node) = queue.pop_front() {
            if node >= n {
                let u = node - n;
                // out(u) -> in(v) along an unused edge, or cancel in(u)'s use.
                for v in adj[u].difference(&edge_flow[u]).iter() {
                    if parent[v].is_none() {
                        parent[v] = Some(node);
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
                if used.contains(u) && parent[u].is_none() {
                    parent[u] = Some(node);
                    queue.push_back(u);
                }
            } else {
                let v = node;
                if v != s && v != t {
                    // in(v) -> out(v) when v is not yet on a path.
                    if !used.contains(v) && parent[n + v].is_none() {
                        parent[n + v] = Some(node);
                        queue.push_back(n + v);
                    }
                    // Residual: cancel flow arriving from some out(w).
                    for w in edge_flow_into(&edge_flow, v) {
                        if parent[n + w].is_none() {
                            parent[n + w] = Some(node);
                            queue.push_back(n + w);
                        }
                    }
                }
            }
        }
        if !reached {
            break;
        }
        // Walk the augmenting path back and update flows. Transitions
        // alternate strictly between out- and in-nodes.
        let mut node = t;
        while node != n + s {
            let prev = parent[node].unwrap();
            if node < n {
                // out(u) -> in(node): either a forward edge arc, or the
                // backward residual of in(u) -> out(u) when u == node.
                let u = prev - n;
                if u == node {
                    used.remove(u);
                } else {
                    edge_flow[u].insert(node);
                }
            } else {
                // in(v) -> out(w): the internal arc when w == v, else the
                // backward residual of the edge arc out(w) -> in(v).
                let v = prev;
                let w = node - n;
                if v == w {
                    used.insert(v);
                } else {
                    edge_flow[w].remove(v);
                }
            }
            node = prev;
        }
        flow += 1;
    }
    flow
}

fn edge_flow_into(edge_flow: &[BitSet], v: usize) -> Vec<usize> {
    (0..edge_flow.len())
        .filter(|&w| edge_flow[w].contains(v))
        .collect()
}
