use std::collections::HashMap;

use crate::linear_rep::Config;

/// Equivalence closure of a relation on configurations, over interned values.
#[derive(Debug, Default)]
pub(crate) struct ConfigUnionFind {
    ids: HashMap<Config, usize>,
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl ConfigUnionFind {
    fn intern(&mut self, c: &Config) -> usize {
        if let Some(&id) = self.ids.get(c) {
            return id;
        }
        let id = self.parent.len();
        self.ids.insert(c.clone(), id);
        self.parent.push(id);
        self.rank.push(0);
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub(crate) fn equivalent(&mut self, u: &Config, v: &Config) -> bool {
        if u == v {
            return true;
        }
        match (self.ids.get(u).copied(), self.ids.get(v).copied()) {
            (Some(a), Some(b)) => self.find(a) == self.find(b),
            _ => false,
        }
    }

    pub(crate) fn union(&mut self, u: &Config, v: &Config) {
        let a = self.intern(u);
        let b = self.intern(v);
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}
