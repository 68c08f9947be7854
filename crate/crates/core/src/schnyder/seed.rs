use crate::error::{Error, Result};
use crate::plane_graph::edge_of;
use crate::suspension::Suspension;

use super::completion::Completion;
use super::wood::{check_wood, SchnyderWood};

/// Unit-capacity max flow (Dinic) with an iterative blocking-flow search.
struct Flow {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(n: usize) -> Flow {
        Flow { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Adds arc `u -> v`; returns its id. The reverse residual arc is `id ^ 1`.
    fn add(&mut self, u: usize, v: usize, cap: u32) -> usize {
        let id = self.head.len();
        self.head.push(v);
        self.cap.push(cap);
        self.adj[u].push(id);
        self.head.push(u);
        self.cap.push(0);
        self.adj[v].push(id + 1);
        id
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let n = self.adj.len();
        let mut total = 0;
        loop {
            let mut level = vec![u32::MAX; n];
            level[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && level[v] == u32::MAX {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[t] == u32::MAX {
                return total;
            }
            let mut next = vec![0usize; n];
            loop {
                // depth-first search for one augmenting path in the level graph
                let mut path: Vec<usize> = Vec::new();
                let mut u = s;
                let found = loop {
                    if u == t {
                        break true;
                    }
                    let mut advanced = false;
                    while next[u] < self.adj[u].len() {
                        let a = self.adj[u][next[u]];
                        let v = self.head[a];
                        if self.cap[a] > 0 && level[v] == level[u] + 1 {
                            path.push(a);
                            u = v;
                            advanced = true;
                            break;
                        }
                        next[u] += 1;
                    }
                    if !advanced {
                        if u == s {
                            break false;
                        }
                        level[u] = u32::MAX;
                        let a = path.pop().expect("non-source has an entering arc");
                        u = self.head[a ^ 1];
                        next[u] += 1;
                    }
                };
                if !found {
                    break;
                }
                let bottleneck = path.iter().map(|&a| self.cap[a]).min().unwrap_or(0);
                for &a in &path {
                    self.cap[a] -= bottleneck;
                    self.cap[a ^ 1] += bottleneck;
                }
                total += bottleneck as u64;
            }
        }
    }
}

/// Some Schnyder wood of the suspension. Orients the completion so that
/// primal and dual vertices have outdegree 3 and crossings outdegree 1 via
/// a max-flow, then reads off the colors.
pub fn compute_wood(s: &Suspension) -> Result<SchnyderWood> {
    let mut c = Completion::skeleton(s)?;
    let g = c.graph().clone();
    let m = s.graph().m();
    let apex = c.apex();
    // Arms at the apex and on the three ray crossings are forced: rays run
    // root -> crossing -> apex, the outer triangle edges point into their
    // crossings and the outer pieces point to the apex.
    let forced = |arm: usize| arm >= 4 * m;
    let mut fixed_out = vec![0u32; g.n()];
    for arm in 4 * m..g.m() {
        let leaves_tail = arm >= 4 * (m + 3) || arm % 4 == 2;
        let d = if leaves_tail { 2 * arm } else { 2 * arm + 1 };
        fixed_out[g.tail(d)] += 1;
        c.set_dir(arm, d);
    }
    let free: Vec<usize> = (0..g.m()).filter(|&a| !forced(a)).collect();
    let source = g.n() + free.len();
    let sink = source + 1;
    let mut flow = Flow::new(sink + 1);
    let mut choice = Vec::with_capacity(free.len());
    for (i, &arm) in free.iter().enumerate() {
        let node = g.n() + i;
        flow.add(source, node, 1);
        let (x, y) = g.endpoints(arm);
        let to_x = flow.add(node, x, 1);
        flow.add(node, y, 1);
        choice.push(to_x);
    }
    for x in 0..g.n() {
        if x == apex {
            continue;
        }
        let want = c.alpha(x) as u32;
        let cap = want
            .checked_sub(fixed_out[x])
            .ok_or_else(|| Error::InvalidWood(format!("completion vertex {x} exceeds its outdegree")))?;
        flow.add(x, sink, cap);
    }
    let got = flow.max_flow(source, sink);
    if got != free.len() as u64 {
        return Err(Error::InvalidWood(format!("orientation covers {got} of {} arms", free.len())));
    }
    for (i, &arm) in free.iter().enumerate() {
        // flow to the tail of the canonical dart means the arm leaves it
        let d = if flow.cap[choice[i]] == 0 { 2 * arm } else { 2 * arm + 1 };
        debug_assert_eq!(edge_of(d), arm);
        c.set_dir(arm, d);
    }
    c.recolor()?;
    let wood = c.primal_wood();
    if let Some(v) = check_wood(s, &wood).first() {
        return Err(Error::InvalidWood(format!("seed wood: {v}")));
    }
    Ok(wood)
}
