use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{EnumerateError, LatticeWeight};

/// Tuning knobs for the frontier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumConfig {
    /// Maximum number of queued lattice points.
    pub frontier_cap: usize,
    /// Two float weights share a plateau when their logs differ by at most this.
    pub plateau_tol: f64,
    /// Distinct plateaus closer than this in log are reported as tie sensitive.
    pub near_tie_tol: f64,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            frontier_cap: 100_000_000,
            plateau_tol: 1e-10,
            near_tie_tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone)]
struct Node {
    log_sigma: f64,
    u: Option<u128>,
    k: Vec<u64>,
}

impl Node {
    /// Larger means popped earlier: bigger σ first, then lexicographically smaller `k`.
    fn priority(&self, other: &Self) -> Ordering {
        let by_weight = match (self.u, other.u) {
            (Some(a), Some(b)) => b.cmp(&a),
            _ => self.log_sigma.total_cmp(&other.log_sigma),
        };
        by_weight.then_with(|| other.k.cmp(&self.k))
    }
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.priority(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.priority(other)
    }
}

/// One orthant representative inside a plateau.
#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub k: Vec<u64>,
    pub sigma: f64,
    pub log_sigma: f64,
    pub multiplicity: u64,
}

/// All lattice points sharing one weight value.
#[derive(Debug, Clone, PartialEq)]
pub struct Plateau {
    /// Reciprocal weight `1/σ` of the plateau.
    pub theta: f64,
    /// Exact `1/σ` in integer mode.
    pub exact_theta: Option<u128>,
    /// Representatives in lexicographic order.
    pub members: Vec<Member>,
    /// Number of lattice points in this plateau.
    pub size: u64,
    /// Cumulative number of lattice points up to and including this plateau.
    pub n_end: u64,
    /// Members were merged by tolerance or the next plateau is a near tie.
    pub tie_sensitive: bool,
}

/// Best-first walk over `ℕ₀^d`, yielding one plateau at a time.
pub struct Frontier<'w, W: LatticeWeight + ?Sized> {
    weight: &'w W,
    heap: BinaryHeap<Node>,
    config: EnumConfig,
    emitted: u64,
    integer: bool,
}

impl<'w, W: LatticeWeight + ?Sized> Frontier<'w, W> {
    pub fn new(weight: &'w W, config: EnumConfig) -> Self {
        let mut f = Frontier {
            weight,
            heap: BinaryHeap::new(),
            config,
            emitted: 0,
            integer: weight.is_integer(),
        };
        let origin = vec![0; weight.dim()];
        f.heap.push(f.node(origin));
        f
    }

    /// Lattice points emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    fn node(&self, k: Vec<u64>) -> Node {
        Node {
            log_sigma: self.weight.log_sigma(&k),
            u: if self.integer { self.weight.exact_u(&k) } else { None },
            k,
        }
    }

    fn push_children(&mut self, k: &[u64]) -> Result<(), EnumerateError> {
        for j in 0..k.len() {
            let mut child = k.to_vec();
            child[j] += 1;
            let node = self.node(child);
            if node.log_sigma > f64::NEG_INFINITY {
                self.heap.push(node);
            }
            if k[j] != 0 {
                break;
            }
        }
        if self.heap.len() > self.config.frontier_cap {
            return Err(EnumerateError::BudgetExceeded {
                cap: self.config.frontier_cap,
            });
        }
        Ok(())
    }

    fn same_plateau(&self, first: &Node, other: &Node) -> bool {
        if self.integer {
            first.u == other.u
        } else {
            (other.log_sigma - first.log_sigma).abs() <= self.config.plateau_tol
        }
    }

    fn member(&self, node: Node) -> Member {
        let sigma = match node.u {
            Some(u) => 1.0 / u as f64,
            None => node.log_sigma.exp(),
        };
        Member {
            multiplicity: self.weight.multiplicity(&node.k),
            k: node.k,
            sigma,
            log_sigma: node.log_sigma,
        }
    }

    /// Next plateau, or `None` once only zero weights remain.
    pub fn next_plateau(&mut self) -> Result<Option<Plateau>, EnumerateError> {
        let Some(first) = self.heap.pop() else {
            return Ok(None);
        };
        if first.log_sigma == f64::NEG_INFINITY {
            self.heap.clear();
            return Ok(None);
        }
        if self.integer && first.u.is_none() {
            return Err(EnumerateError::Overflow);
        }
        self.push_children(&first.k)?;
        let mut nodes = vec![first.clone()];
        while let Some(top) = self.heap.peek() {
            if !self.same_plateau(&first, top) {
                break;
            }
            let node = self.heap.pop().expect("peeked");
            self.push_children(&node.k)?;
            nodes.push(node);
        }

        let mut tie_sensitive = false;
        if !self.integer {
            tie_sensitive = nodes.iter().any(|n| n.log_sigma != first.log_sigma);
            if let Some(next) = self.heap.peek() {
                tie_sensitive |= (first.log_sigma - next.log_sigma).abs() <= self.config.near_tie_tol;
            }
        }

        nodes.sort_by(|a, b| a.k.cmp(&b.k));
        let members: Vec<Member> = nodes.into_iter().map(|n| self.member(n)).collect();
        let size: u64 = members.iter().map(|m| m.multiplicity).sum();
        self.emitted += size;
        Ok(Some(Plateau {
            theta: match first.u {
                Some(u) => u as f64,
                None => (-first.log_sigma).exp(),
            },
            exact_theta: first.u,
            members,
            size,
            n_end: self.emitted,
            tie_sensitive,
        }))
    }
}
