//! Incremental Bowyer-Watson.
//!
//! The scaffold is a single symbolic vertex at infinity: every hull edge
//! carries a "ghost" triangle joining it to that vertex, so the mesh is a
//! closed surface and the final triangulation covers the convex hull exactly.

use std::collections::HashMap;

use super::{Triangulation, BOUNDARY};
use crate::error::{Error, Result};
use crate::geom::{incircle, orient, Orientation, Point2, PointCloud};
use crate::scalar::Scalar;

const GHOST: usize = usize::MAX;

struct Builder<'p, T> {
    pts: &'p [Point2<T>],
    tris: Vec<[usize; 3]>,
    adj: Vec<[usize; 3]>,
    alive: Vec<bool>,
    stamp: Vec<u32>,
    epoch: u32,
    last: usize,
}

#[inline]
fn edge(tri: &[usize; 3], k: usize) -> (usize, usize) {
    (tri[(k + 1) % 3], tri[(k + 2) % 3])
}

impl<'p, T: Scalar> Builder<'p, T> {
    fn is_ghost(&self, t: usize) -> bool {
        self.tris[t].contains(&GHOST)
    }

    /// Strict circumcircle containment; for a ghost triangle the
    /// "circumcircle" is the open outer half-plane of its hull edge plus the
    /// open edge itself.
    fn in_circum(&self, t: usize, p: Point2<T>) -> bool {
        let tri = &self.tris[t];
        match tri.iter().position(|&v| v == GHOST) {
            None => {
                let [a, b, c] = tri.map(|v| self.pts[v]);
                incircle(a, b, c, p) > 0.0
            }
            Some(g) => {
                let (a, b) = edge(tri, g);
                let (a, b) = (self.pts[a], self.pts[b]);
                match orient(a, b, p) {
                    Orientation::CounterClockwise => true,
                    Orientation::Clockwise => false,
                    Orientation::Collinear => {
                        p.sub(a).dot(b.sub(a)) > T::zero() && p.sub(b).dot(a.sub(b)) > T::zero()
                    }
                }
            }
        }
    }

    /// Finds a triangle whose circumcircle strictly contains `p`, or the
    /// point `p` duplicates.
    fn locate(&self, p: Point2<T>) -> Located {
        let mut t = self.last;
        let cap = 4 * self.tris.len() + 16;
        'walk: for _ in 0..cap {
            let tri = self.tris[t];
            for k in 0..3 {
                let (u, v) = edge(&tri, k);
                if orient(self.pts[u], self.pts[v], p) == Orientation::Clockwise {
                    let next = self.adj[t][k];
                    if self.is_ghost(next) {
                        return Located::Cavity(next);
                    }
                    t = next;
                    continue 'walk;
                }
            }
            return self.settle(t, p);
        }
        self.locate_by_scan(p)
    }

    fn settle(&self, t: usize, p: Point2<T>) -> Located {
        match self.tris[t].iter().find(|&&v| self.pts[v] == p) {
            Some(&v) => Located::Duplicate(v),
            None => Located::Cavity(t),
        }
    }

    fn locate_by_scan(&self, p: Point2<T>) -> Located {
        for t in 0..self.tris.len() {
            if !self.alive[t] || self.is_ghost(t) {
                continue;
            }
            let tri = self.tris[t];
            if (0..3).all(|k| {
                let (u, v) = edge(&tri, k);
                orient(self.pts[u], self.pts[v], p) != Orientation::Clockwise
            }) {
                return self.settle(t, p);
            }
        }
        for t in 0..self.tris.len() {
            if self.alive[t] && self.is_ghost(t) && self.in_circum(t, p) {
                return Located::Cavity(t);
            }
        }
        unreachable!("point outside every triangle and every ghost")
    }

    fn insert(&mut self, id: usize) -> Option<usize> {
        let p = self.pts[id];
        let seed = match self.locate(p) {
            Located::Duplicate(v) => return Some(v),
            Located::Cavity(t) => t,
        };

        self.epoch += 1;
        let epoch = self.epoch;
        let mut bad = vec![seed];
        self.stamp[seed] = epoch;
        let mut i = 0;
        while i < bad.len() {
            let t = bad[i];
            i += 1;
            for k in 0..3 {
                let nb = self.adj[t][k];
                if self.stamp[nb] != epoch && self.in_circum(nb, p) {
                    self.stamp[nb] = epoch;
                    bad.push(nb);
                }
            }
        }

        // cavity boundary: (u, v, outside triangle, its slot facing the cavity)
        let mut rim = Vec::new();
        for &t in &bad {
            for k in 0..3 {
                let nb = self.adj[t][k];
                if self.stamp[nb] != epoch {
                    let back = (0..3).find(|&j| self.adj[nb][j] == t).unwrap();
                    let (u, v) = edge(&self.tris[t], k);
                    rim.push((u, v, nb, back));
                }
            }
        }

        let mut slots = bad;
        while slots.len() < rim.len() {
            self.tris.push([0; 3]);
            self.adj.push([0; 3]);
            self.alive.push(false);
            self.stamp.push(0);
            slots.push(self.tris.len() - 1);
        }
        for &t in &slots {
            self.alive[t] = false;
        }

        let mut by_start = HashMap::with_capacity(rim.len());
        let mut by_end = HashMap::with_capacity(rim.len());
        for (n, &(u, v, _, _)) in rim.iter().enumerate() {
            by_start.insert(u, slots[n]);
            by_end.insert(v, slots[n]);
        }
        for (n, &(u, v, nb, back)) in rim.iter().enumerate() {
            let t = slots[n];
            self.tris[t] = [u, v, id];
            self.adj[t] = [by_start[&v], by_end[&u], nb];
            self.adj[nb][back] = t;
            self.alive[t] = true;
            if u != GHOST && v != GHOST {
                self.last = t;
            }
        }
        None
    }
}

enum Located {
    Cavity(usize),
    Duplicate(usize),
}

pub(super) fn build<T: Scalar>(cloud: &PointCloud<T>) -> Result<Triangulation<'_, T>> {
    let pts = cloud.points();
    let n = pts.len();
    if n < 3 {
        return Err(Error::DegenerateInput(
            "triangulation needs at least 3 points",
        ));
    }
    let a = 0;
    let b = (1..n)
        .find(|&i| pts[i] != pts[a])
        .ok_or(Error::DegenerateInput("all points coincide"))?;
    let c = (b + 1..n)
        .find(|&i| orient(pts[a], pts[b], pts[i]) != Orientation::Collinear)
        .ok_or(Error::DegenerateInput("all points are collinear"))?;
    let (b, c) = if orient(pts[a], pts[b], pts[c]) == Orientation::CounterClockwise {
        (b, c)
    } else {
        (c, b)
    };

    let tris = vec![[a, b, c], [c, b, GHOST], [a, c, GHOST], [b, a, GHOST]];
    let mut adj = vec![[0usize; 3]; 4];
    for (t, slots) in adj.iter_mut().enumerate() {
        for (k, slot) in slots.iter_mut().enumerate() {
            let (u, v) = edge(&tris[t], k);
            *slot = (0..4)
                .find(|&s| (0..3).any(|j| edge(&tris[s], j) == (v, u)))
                .unwrap();
        }
    }
    let mut builder = Builder {
        pts,
        tris,
        adj,
        alive: vec![true; 4],
        stamp: vec![0; 4],
        epoch: 0,
        last: 0,
    };

    let mut representative: Vec<usize> = (0..n).collect();
    for (id, rep) in representative.iter_mut().enumerate() {
        if id == a || id == b || id == c {
            continue;
        }
        if let Some(v) = builder.insert(id) {
            *rep = v;
        }
    }

    Ok(finish(cloud, &builder, representative))
}

fn finish<'a, T: Scalar>(
    cloud: &'a PointCloud<T>,
    builder: &Builder<'_, T>,
    representative: Vec<usize>,
) -> Triangulation<'a, T> {
    let n = cloud.len();
    let mut triangles: Vec<[usize; 3]> = (0..builder.tris.len())
        .filter(|&t| builder.alive[t] && !builder.is_ghost(t))
        .map(|t| {
            let tri = builder.tris[t];
            let r = (0..3).min_by_key(|&k| tri[k]).unwrap();
            [tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]]
        })
        .collect();
    triangles.sort_unstable();

    let mut edge_owner = HashMap::with_capacity(3 * triangles.len());
    for (t, tri) in triangles.iter().enumerate() {
        for k in 0..3 {
            edge_owner.insert(edge(tri, k), t);
        }
    }
    let neighbors = triangles
        .iter()
        .map(|tri| {
            let mut nb = [BOUNDARY; 3];
            for (k, slot) in nb.iter_mut().enumerate() {
                let (u, v) = edge(tri, k);
                if let Some(&t) = edge_owner.get(&(v, u)) {
                    *slot = t;
                }
            }
            nb
        })
        .collect();

    let mut adjacency = vec![Vec::new(); n];
    let mut incident = vec![BOUNDARY; n];
    for (t, tri) in triangles.iter().enumerate() {
        for k in 0..3 {
            let (u, v) = edge(tri, k);
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[tri[k]] = incident[tri[k]].min(t);
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }
    let mut aliases = vec![Vec::new(); n];
    for (id, &rep) in representative.iter().enumerate() {
        if rep != id {
            aliases[rep].push(id);
        }
    }

    Triangulation {
        cloud,
        triangles,
        neighbors,
        representative,
        adjacency,
        aliases,
        incident,
    }
}
