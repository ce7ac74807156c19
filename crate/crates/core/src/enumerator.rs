//! Candidate classes `W = (e·H, v)` for fiber components of degree `e`.
//!
//! On P² with `L = e·H` we have `L² = e²` and `K·L = −3e`. A vector `v`
//! indexed by cluster points is a candidate when
//!
//! * (a) `v_p ≤ e`,
//! * (b) `v_p ≥ Σ v_q` over the points `q` proximate to `p`,
//! * (c) `e² ≤ Σ v_p²`,
//! * (d) the adjunction-type condition checked in [`adjunction_ok`],
//! * (e) `e·d = Σ v_p·m_p`.

use serde::Serialize;

use crate::cluster::Cluster;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Candidate {
    pub e: u32,
    /// Virtual multiplicity per cluster point, indexed by point id.
    pub v: Vec<u32>,
}

/// Effective divisor classes of degree `e` on the plane. `Pic(P²) = Z·H`,
/// so this is always the single class `e·H`, returned as its degree.
pub fn effective_classes(e: u32) -> Vec<u32> {
    vec![e]
}

/// All candidates of degree `e`, in lexicographic order of `v`.
pub fn enumerate_candidates(cluster: &Cluster, e: u32, d: u32) -> Vec<Candidate> {
    let m: Vec<u64> = cluster.generic_mults().iter().map(|&x| x as u64).collect();
    let n = m.len();
    // suffix sums of m, for the (e) bound
    let mut tail = vec![0u64; n + 1];
    for i in (0..n).rev() {
        tail[i] = tail[i + 1] + m[i];
    }
    let proximate_to: Vec<Vec<usize>> = cluster.points().iter().map(|p| p.proximate_to.clone()).collect();
    let mut out = Vec::new();
    for _class in effective_classes(e) {
        let mut search = Search {
            e,
            target: e as u64 * d as u64,
            m: &m,
            tail: &tail,
            proximate_to: &proximate_to,
            v: vec![0; n],
            prox_load: vec![0; n],
            out: &mut out,
            cluster,
        };
        search.step(0, 0);
    }
    out
}

struct Search<'a> {
    e: u32,
    target: u64,
    m: &'a [u64],
    tail: &'a [u64],
    proximate_to: &'a [Vec<usize>],
    v: Vec<u32>,
    /// Running `Σ v_q` over assigned points proximate to each point.
    prox_load: Vec<u32>,
    out: &'a mut Vec<Candidate>,
    cluster: &'a Cluster,
}

impl Search<'_> {
    fn step(&mut self, i: usize, weighted: u64) {
        if i == self.m.len() {
            if weighted == self.target {
                let cand = Candidate { e: self.e, v: self.v.clone() };
                if is_candidate(self.cluster, &cand, (self.target / self.e as u64) as u32) {
                    self.out.push(cand);
                }
            }
            return;
        }
        for val in 0..=self.e {
            let w = weighted + val as u64 * self.m[i];
            if w > self.target {
                break;
            }
            // the remaining points cannot reach the target even at v = e
            if w + self.e as u64 * self.tail[i + 1] < self.target {
                continue;
            }
            if self.proximate_to[i].iter().any(|&p| self.prox_load[p] + val > self.v[p]) {
                break;
            }
            self.v[i] = val;
            for &p in self.proximate_to[i].iter() {
                self.prox_load[p] += val;
            }
            self.step(i + 1, w);
            for &p in self.proximate_to[i].iter() {
                self.prox_load[p] -= val;
            }
            self.v[i] = 0;
        }
    }
}

/// Condition (d), the trichotomy with `K·L = −3e`.
pub fn adjunction_ok(e: u32, v: &[u32]) -> bool {
    let e = e as i64;
    let sum: i64 = v.iter().map(|&x| x as i64).sum();
    let sq: i64 = v.iter().map(|&x| (x as i64).pow(2)).sum();
    let kl = -3 * e + sum;
    let arith = e * e - 3 * e + 2 >= v.iter().map(|&x| (x as i64) * (x as i64 - 1)).sum::<i64>();
    (kl >= 0 && arith) || (e * e == sq && kl == -2) || (kl == -1 && e * e - sq == -1)
}

/// Checks (a)–(e) directly, without any of the search's pruning.
pub fn is_candidate(cluster: &Cluster, c: &Candidate, d: u32) -> bool {
    let m = cluster.generic_mults();
    if c.v.len() != m.len() || c.e == 0 {
        return false;
    }
    let e = c.e as u64;
    let a = c.v.iter().all(|&x| x <= c.e);
    let b = cluster.satisfies_proximity(&c.v);
    let sq: u64 = c.v.iter().map(|&x| (x as u64).pow(2)).sum();
    let cc = e * e <= sq;
    let dd = adjunction_ok(c.e, &c.v);
    let ee = e * d as u64 == c.v.iter().zip(&m).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>();
    a && b && cc && dd && ee
}
