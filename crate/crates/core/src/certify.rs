//! Specialised recognizers for generic, BFS, DFS, LBFS and LDFS orderings.
//!
//! The generic, BFS and DFS checks run in `O(n + m)` from the prefix neighbour
//! tables. The lexicographic checks evaluate a pattern condition on every pair
//! `b <σ c`, `O(n(n + m))` in total. All of them return a witness triple on
//! rejection; see [`Rule`] for how to read it.

use thiserror::Error;

use crate::certificate::{Certificate, Rule, Witness};
use crate::engine::check_fixpoint;
use crate::graph::{Graph, Position, PrefixNeighborTables, Vertex, VertexOrdering};
use crate::label::{LabelOrder, Search};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("specialised certifiers only handle undirected graphs")]
    Directed,
    #[error("ordering has {ordering} vertices but the graph has {graph}")]
    SizeMismatch { graph: usize, ordering: usize },
}

pub(crate) fn precheck(graph: &Graph, sigma: &VertexOrdering) -> Result<(), CertifyError> {
    if graph.is_directed() {
        return Err(CertifyError::Directed);
    }
    if graph.n() != sigma.len() {
        return Err(CertifyError::SizeMismatch {
            graph: graph.n(),
            ordering: sigma.len(),
        });
    }
    Ok(())
}

/// Generic-search check: a vertex with a left neighbour must not reach back
/// past the start of its connected stretch. `O(n)` given the tables.
pub fn check_generic(
    graph: &Graph,
    sigma: &VertexOrdering,
    tables: &PrefixNeighborTables,
) -> Result<Certificate, CertifyError> {
    precheck(graph, sigma)?;
    // position of the last vertex with no left neighbour
    let mut start = 1;
    for i in 2..=graph.n() {
        let x = sigma.vertex_at(i);
        match tables.ln(x) {
            None => start = i,
            Some(l) if l < start => {
                let triple = vec![sigma.vertex_at(l), sigma.vertex_at(start), x];
                return Ok(Certificate::reject(
                    Rule::GenTriple,
                    Witness::new(sigma, triple),
                ));
            }
            Some(_) => {}
        }
    }
    Ok(Certificate::accept())
}

/// BFS check: generic, then a right-to-left scan making sure `ln` never
/// exceeds the running minimum of `ln` over later vertices.
pub fn check_bfs(
    graph: &Graph,
    sigma: &VertexOrdering,
    tables: &PrefixNeighborTables,
) -> Result<Certificate, CertifyError> {
    let generic = check_generic(graph, sigma, tables)?;
    if !generic.accepted {
        return Ok(generic);
    }
    let n = graph.n();
    let mut min = n;
    let mut min_at = n;
    for i in (1..=n).rev() {
        let Some(l) = tables.ln(sigma.vertex_at(i)) else {
            continue;
        };
        if l > min {
            let triple = vec![
                sigma.vertex_at(min),
                sigma.vertex_at(i),
                sigma.vertex_at(min_at),
            ];
            return Ok(Certificate::reject(
                Rule::BfsTriple,
                Witness::new(sigma, triple),
            ));
        }
        min = l;
        min_at = i;
    }
    Ok(Certificate::accept())
}

/// DFS check: generic, then no `x`, `y` with `lmax(y) < x < y < rn(x)`, i.e.
/// `RLeft(y)` starts before `Right(x)` and ends strictly inside it.
///
/// Sweeps `y` left to right over a monotone stack of candidate `x` whose
/// `rn` values decrease; the best `x` after `lmax(y)` is found by binary
/// search, so this pass is `O(n log n)`.
pub fn check_dfs(
    graph: &Graph,
    sigma: &VertexOrdering,
    tables: &PrefixNeighborTables,
) -> Result<Certificate, CertifyError> {
    let generic = check_generic(graph, sigma, tables)?;
    if !generic.accepted {
        return Ok(generic);
    }
    // (position of x, rn(x)), positions increasing, rn strictly decreasing
    let mut stack: Vec<(Position, Position)> = Vec::new();
    for q in 1..=graph.n() {
        let y = sigma.vertex_at(q);
        if let Some(l) = tables.lmax(y) {
            let k = stack.partition_point(|&(p, _)| p <= l);
            if let Some(&(px, r)) = stack.get(k) {
                if r > q {
                    let triple = vec![sigma.vertex_at(px), y, sigma.vertex_at(r)];
                    return Ok(Certificate::reject(
                        Rule::DfsTriple,
                        Witness::new(sigma, triple),
                    ));
                }
            }
        }
        if let Some(r) = tables.rn(y) {
            while stack.last().is_some_and(|&(_, s)| s <= r) {
                stack.pop();
            }
            stack.push((q, r));
        }
    }
    Ok(Certificate::accept())
}

/// Content of one `(b, c)` cell of a lexicographic pattern table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternEntry {
    /// `N(b)` and `N(c)` agree before `b`.
    Vacuous,
    /// The decisive vertex `a` lies in `N(b) − N(c)`.
    Satisfied(Vertex),
    /// The decisive vertex `a` lies in `N(c) − N(b)`.
    Violated(Vertex),
}

/// Pattern outcomes for every pair `b <σ c`, stored as a packed lower
/// triangle indexed by positions.
#[derive(Debug, Clone)]
pub struct PatternTable {
    search: Search,
    n: usize,
    // 0: vacuous, v: satisfied by v, v | VIOLATED: violated by v
    cells: Vec<u32>,
}

const VIOLATED: u32 = 1 << 31;

impl PatternTable {
    fn index(pb: Position, pc: Position) -> usize {
        debug_assert!(pb < pc);
        (pc - 1) * (pc - 2) / 2 + (pb - 1)
    }

    /// Entry for the pair at positions `pb < pc`.
    pub fn get(&self, pb: Position, pc: Position) -> PatternEntry {
        match self.cells[Self::index(pb, pc)] {
            0 => PatternEntry::Vacuous,
            x if x & VIOLATED != 0 => PatternEntry::Violated((x & !VIOLATED) as Vertex),
            x => PatternEntry::Satisfied(x as Vertex),
        }
    }

    pub fn search(&self) -> Search {
        self.search
    }

    /// First violated cell, scanning `b` then `c` by position.
    pub fn certificate(&self, sigma: &VertexOrdering) -> Certificate {
        for pb in 1..=self.n {
            for pc in pb + 1..=self.n {
                if let PatternEntry::Violated(a) = self.get(pb, pc) {
                    return lex_reject(self.search, sigma, a, pb, pc);
                }
            }
        }
        Certificate::accept()
    }
}

/// Positions of each vertex's neighbours, sorted.
fn positional_adjacency(graph: &Graph, sigma: &VertexOrdering) -> Vec<Vec<Position>> {
    let mut adj = vec![Vec::new(); graph.n() + 1];
    for u in sigma.iter() {
        let pu = sigma.position_of(u);
        for &w in graph.neighbors(u) {
            adj[w].push(pu);
        }
    }
    adj
}

/// Decisive element of `N(b) △ N(c)` among positions `< bound`: the least for
/// lbfs, the greatest for ldfs. Returns its position and whether it is in
/// `N(b)`.
fn decisive(
    search: Search,
    nb: &[Position],
    nc: &[Position],
    bound: Position,
) -> Option<(Position, bool)> {
    let nb = &nb[..nb.partition_point(|&p| p < bound)];
    let nc = &nc[..nc.partition_point(|&p| p < bound)];
    let (mut i, mut j) = (0, 0);
    match search {
        Search::Lbfs => {
            while i < nb.len() && j < nc.len() {
                if nb[i] == nc[j] {
                    i += 1;
                    j += 1;
                } else if nb[i] < nc[j] {
                    return Some((nb[i], true));
                } else {
                    return Some((nc[j], false));
                }
            }
            nb.get(i)
                .map(|&p| (p, true))
                .or_else(|| nc.get(j).map(|&p| (p, false)))
        }
        Search::Ldfs => {
            let (mut i, mut j) = (nb.len(), nc.len());
            while i > 0 && j > 0 {
                if nb[i - 1] == nc[j - 1] {
                    i -= 1;
                    j -= 1;
                } else if nb[i - 1] > nc[j - 1] {
                    return Some((nb[i - 1], true));
                } else {
                    return Some((nc[j - 1], false));
                }
            }
            if i > 0 {
                Some((nb[i - 1], true))
            } else if j > 0 {
                Some((nc[j - 1], false))
            } else {
                None
            }
        }
        other => unreachable!("no pattern table for {other}"),
    }
}

fn lex_reject(
    search: Search,
    sigma: &VertexOrdering,
    a: Vertex,
    pb: Position,
    pc: Position,
) -> Certificate {
    let rule = if search == Search::Lbfs {
        Rule::LbfsPattern
    } else {
        Rule::LdfsPattern
    };
    let triple = vec![a, sigma.vertex_at(pb), sigma.vertex_at(pc)];
    Certificate::reject(rule, Witness::new(sigma, triple))
}

fn lex_check(
    search: Search,
    graph: &Graph,
    sigma: &VertexOrdering,
) -> Result<Certificate, CertifyError> {
    precheck(graph, sigma)?;
    let adj = positional_adjacency(graph, sigma);
    let n = graph.n();
    for pb in 1..=n {
        let nb = &adj[sigma.vertex_at(pb)];
        for pc in pb + 1..=n {
            if let Some((pa, false)) = decisive(search, nb, &adj[sigma.vertex_at(pc)], pb) {
                return Ok(lex_reject(search, sigma, sigma.vertex_at(pa), pb, pc));
            }
        }
    }
    Ok(Certificate::accept())
}

fn lex_table(
    search: Search,
    graph: &Graph,
    sigma: &VertexOrdering,
) -> Result<PatternTable, CertifyError> {
    precheck(graph, sigma)?;
    let adj = positional_adjacency(graph, sigma);
    let n = graph.n();
    let mut cells = vec![0u32; n * n.saturating_sub(1) / 2];
    for pc in 2..=n {
        let nc = &adj[sigma.vertex_at(pc)];
        for pb in 1..pc {
            let cell = &mut cells[PatternTable::index(pb, pc)];
            *cell = match decisive(search, &adj[sigma.vertex_at(pb)], nc, pb) {
                None => 0,
                Some((pa, true)) => sigma.vertex_at(pa) as u32,
                Some((pa, false)) => sigma.vertex_at(pa) as u32 | VIOLATED,
            };
        }
    }
    Ok(PatternTable { search, n, cells })
}

/// LBFS check: for every `b <σ c`, the leftmost vertex of `N(b) △ N(c)`
/// before `b`, if any, must be a neighbour of `b`. Streams the pairs and
/// stops at the first violation.
pub fn check_lbfs(graph: &Graph, sigma: &VertexOrdering) -> Result<Certificate, CertifyError> {
    lex_check(Search::Lbfs, graph, sigma)
}

/// LDFS check: as [`check_lbfs`] with the rightmost such vertex.
pub fn check_ldfs(graph: &Graph, sigma: &VertexOrdering) -> Result<Certificate, CertifyError> {
    lex_check(Search::Ldfs, graph, sigma)
}

/// The full LBFS pattern table, `O(n²)` cells.
pub fn lbfs_pattern_table(
    graph: &Graph,
    sigma: &VertexOrdering,
) -> Result<PatternTable, CertifyError> {
    lex_table(Search::Lbfs, graph, sigma)
}

/// The full LDFS pattern table, `O(n²)` cells.
pub fn ldfs_pattern_table(
    graph: &Graph,
    sigma: &VertexOrdering,
) -> Result<PatternTable, CertifyError> {
    lex_table(Search::Ldfs, graph, sigma)
}

/// Runs the specialised certifier for `search`, or `None` for mcs and mns,
/// which have none.
pub fn certify(
    graph: &Graph,
    search: Search,
    sigma: &VertexOrdering,
) -> Option<Result<Certificate, CertifyError>> {
    let tables = || PrefixNeighborTables::build(graph, sigma);
    Some(match search {
        Search::Gen => check_generic(graph, sigma, &tables()),
        Search::Bfs => check_bfs(graph, sigma, &tables()),
        Search::Dfs => check_dfs(graph, sigma, &tables()),
        Search::Lbfs => check_lbfs(graph, sigma),
        Search::Ldfs => check_ldfs(graph, sigma),
        Search::Mcs | Search::Mns => return None,
    })
}

/// Decides whether `sigma` is an ordering of `order` on `graph`: the
/// specialised certifier when one exists and the graph is undirected, the
/// fixed-point test otherwise.
pub fn recognize(
    graph: &Graph,
    order: &LabelOrder,
    sigma: &VertexOrdering,
) -> Result<Certificate, CertifyError> {
    if graph.n() != sigma.len() {
        return Err(CertifyError::SizeMismatch {
            graph: graph.n(),
            ordering: sigma.len(),
        });
    }
    if !graph.is_directed() {
        if let Some(result) = order.as_search().and_then(|s| certify(graph, s, sigma)) {
            return result;
        }
    }
    Ok(check_fixpoint(graph, order, sigma))
}
