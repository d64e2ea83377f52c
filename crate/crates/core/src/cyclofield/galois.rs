use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use crate::ntheory::gcd;

/// `(Z/m)*` together with its subgroup of squares.
#[derive(Debug)]
pub struct UnitGroup {
    m: u64,
    units: Vec<u64>,
    generators: Vec<u64>,
    squares: HashSet<u64>,
    /// One representative per coset of the squares, starting with 1.
    square_classes: Vec<u64>,
}

type Cache = RwLock<HashMap<u64, Arc<UnitGroup>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn mul(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Subgroup generated by `gens`, as a set.
fn closure(gens: &[u64], m: u64) -> HashSet<u64> {
    let mut set: HashSet<u64> = HashSet::from([1 % m]);
    let mut frontier = vec![1 % m];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = mul(x, g, m);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

impl UnitGroup {
    pub fn get(m: u64) -> Arc<UnitGroup> {
        if let Some(g) = cache().read().unwrap().get(&m) {
            return g.clone();
        }
        let g = Arc::new(Self::build(m));
        cache().write().unwrap().entry(m).or_insert(g).clone()
    }

    fn build(m: u64) -> Self {
        let units: Vec<u64> = (0..m).filter(|&a| gcd(a, m) == 1).collect();
        let mut generators = Vec::new();
        let mut span = closure(&generators, m);
        for &a in &units {
            if !span.contains(&a) {
                generators.push(a);
                span = closure(&generators, m);
            }
        }
        let sq: Vec<u64> = generators.iter().map(|&g| mul(g, g, m)).collect();
        let squares = closure(&sq, m);
        let mut covered: HashSet<u64> = HashSet::new();
        let mut square_classes = Vec::new();
        for &a in &units {
            if covered.insert(a) {
                square_classes.push(a);
                covered.extend(squares.iter().map(|&s| mul(a, s, m)));
            }
        }
        UnitGroup {
            m,
            units,
            generators,
            squares,
            square_classes,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Generators of the subgroup of squares.
    pub fn square_generators(&self) -> Vec<u64> {
        self.generators.iter().map(|&g| mul(g, g, self.m)).collect()
    }

    pub fn is_square(&self, a: u64) -> bool {
        self.squares.contains(&(a % self.m.max(1)))
    }

    /// Representatives of `G / G²`, the first being the identity.
    pub fn square_classes(&self) -> &[u64] {
        &self.square_classes
    }
}
