//! Hasse diagrams of the Cayley plane and the Freudenthal variety as drawn in
//! the usual pictures: a node is `(codim, height)`, and the naming rule says
//! how the heights within one codimension translate into primes.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub struct Diagram {
    pub dimension: usize,
    /// Heights per codimension; codimensions not listed hold one node at 8.
    pub nodes: BTreeMap<usize, Vec<i64>>,
    pub edges: Vec<((usize, i64), (usize, i64))>,
}

impl Diagram {
    pub fn heights(&self, codim: usize) -> Vec<i64> {
        let mut h = self.nodes.get(&codim).cloned().unwrap_or_else(|| vec![8]);
        h.sort_unstable();
        h
    }
}

fn parse(dimension: usize, nodes: &str, edges: &str, chains: &[(usize, usize)]) -> Diagram {
    let mut n = BTreeMap::new();
    for part in nodes.split(';') {
        let (c, ys) = part.split_once(':').unwrap();
        n.insert(
            c.trim().parse().unwrap(),
            ys.split(',').map(|y| y.trim().parse().unwrap()).collect(),
        );
    }
    let node = |s: &str| -> (usize, i64) {
        match s.split_once('y') {
            Some((c, y)) => (c.trim().parse().unwrap(), y.trim().parse().unwrap()),
            None => (s.trim().parse().unwrap(), 8),
        }
    };
    let mut e = Vec::new();
    for part in edges.split(',') {
        let (a, b) = part.split_once('-').unwrap();
        e.push((node(a), node(b)));
    }
    for &(hi, lo) in chains {
        for c in lo..hi {
            e.push(((c + 1, 8), (c, 8)));
        }
    }
    Diagram {
        dimension,
        nodes: n,
        edges: e,
    }
}

pub fn cayley_plane() -> Diagram {
    parse(
        16,
        "12:10,6;11:8,4;10:10,6;9:8,12;8:14,10,6;7:8,12;6:10,6;5:8,4;4:10,6",
        "13-12y10,13-12y6,\
         12y6-11y8,12y6-11y4,12y10-11y8,\
         11y8-10y10,11y8-10y6,11y4-10y6,\
         10y10-9y12,10y10-9y8,10y6-9y8,\
         9y12-8y14,9y12-8y10,9y8-8y10,9y8-8y6,\
         8y14-7y12,8y10-7y12,8y10-7y8,8y6-7y8,\
         7y12-6y10,7y8-6y10,7y8-6y6,\
         6y10-5y8,6y6-5y8,6y6-5y4,\
         5y8-4y6,5y8-4y10,5y4-4y6,\
         4y10-3,4y6-3",
        &[(16, 13), (3, 0)],
    )
}

pub fn freudenthal() -> Diagram {
    parse(
        27,
        "22:10,6;21:8,12;20:10,6;19:8,4;18:10,6,2;17:8,4,0;16:10,6,2;15:8,4,12;\
         14:10,6,8;13:8,10,6;12:8,12,4;11:10,6,14;10:8,12,16;9:10,6,14;8:8,12;\
         7:10,6;6:8,4;5:10,6",
        "23-22y10,23-22y6,\
         22y10-21y12,22y10-21y8,22y6-21y8,\
         21y8-20y6,21y8-20y10,21y12-20y10,\
         20y6-19y4,20y6-19y8,20y10-19y8,\
         19y4-18y2,19y8-18y10,19y8-18y6,19y4-18y6,\
         18y2-17y0,18y10-17y8,18y6-17y4,18y6-17y8,18y2-17y4,\
         17y4-16y2,17y8-16y6,17y8-16y10,17y4-16y6,17y0-16y2,\
         16y6-15y4,16y10-15y8,16y10-15y12,16y6-15y8,16y2-15y4,\
         15y12-14y10,15y8-14y6,15y8-14y10,15y4-14y6,15y8-14y8,\
         14y10-13y8,14y6-13y8,14y6-13y6,14y10-13y10,14y8-13y10,14y8-13y6,\
         13y8-12y8,13y10-12y12,13y6-12y8,13y6-12y4,13y10-12y8,\
         12y12-11y14,12y8-11y10,12y4-11y6,12y8-11y6,12y12-11y10,\
         11y14-10y16,11y10-10y12,11y6-10y8,11y10-10y8,11y14-10y12,\
         10y12-9y14,10y8-9y10,10y8-9y6,10y12-9y10,10y16-9y14,\
         9y14-8y12,9y10-8y12,9y10-8y8,9y6-8y8,\
         8y8-7y6,8y12-7y10,8y8-7y10,\
         7y6-6y4,7y10-6y8,7y6-6y8,\
         6y8-5y6,6y4-5y6,6y8-5y10,\
         5y6-4,5y10-4",
        &[(27, 23), (4, 0)],
    )
}

/// Primes of the node at `height` in codimension `codim`.
pub fn cayley_primes(d: &Diagram, codim: usize, height: i64) -> usize {
    let h = d.heights(codim);
    let r = h.iter().position(|&y| y == height).unwrap();
    if h.len() == 1 {
        0
    } else {
        2 - r
    }
}

/// Up to codimension 13 the lowest node carries the most primes, from 14 on
/// the highest one does.
pub fn freudenthal_primes(d: &Diagram, codim: usize, height: i64) -> usize {
    let h = d.heights(codim);
    let r = h.iter().position(|&y| y == height).unwrap();
    let from_bottom = match h.len() {
        1 => return 0,
        _ => 2 - r,
    };
    if codim <= 13 {
        from_bottom
    } else {
        match h.len() {
            2 => r + 1,
            _ => r,
        }
    }
}
