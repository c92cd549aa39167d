//! Read-mostly memo tables shared between threads.
//!
//! Values are pure functions of their keys, so a lost insertion race only
//! costs a recomputation. Tables stop growing once they reach the size cap
//! taken from `QQSH_CACHE_LIMIT` (default 200 000 entries per table).

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use parking_lot::RwLock;

pub const CACHE_LIMIT_VAR: &str = "QQSH_CACHE_LIMIT";
const DEFAULT_LIMIT: usize = 200_000;

/// Per-table entry cap from the environment.
pub fn cache_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(CACHE_LIMIT_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_LIMIT)
    })
}

pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
    limit: usize,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Self::with_limit(cache_limit())
    }

    pub fn with_limit(limit: usize) -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
            limit,
        }
    }

    pub fn get(&self, k: &K) -> Option<V> {
        self.map.read().get(k).cloned()
    }

    pub fn insert(&self, k: K, v: V) {
        let mut map = self.map.write();
        if map.len() < self.limit {
            map.entry(k).or_insert(v);
        }
    }

    /// Looks up `k`, computing and storing it on a miss. `f` runs without
    /// holding the lock, so it may recurse into the same table.
    pub fn get_or_try_insert<E>(&self, k: &K, f: impl FnOnce() -> Result<V, E>) -> Result<V, E> {
        if let Some(v) = self.get(k) {
            return Ok(v);
        }
        let v = f()?;
        self.insert(k.clone(), v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().clear();
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn respects_limit() {
        let m: Memo<u32, u32> = Memo::with_limit(2);
        for k in 0..5 {
            let v = m.get_or_try_insert::<()>(&k, || Ok(k * 10)).unwrap();
            assert_eq!(v, k * 10);
        }
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn recursive_fill() {
        fn fib(m: &Memo<u64, u64>, n: u64) -> u64 {
            m.get_or_try_insert::<()>(&n, || {
                Ok(if n < 2 { n } else { fib(m, n - 1) + fib(m, n - 2) })
            })
            .unwrap()
        }
        let m = Memo::with_limit(1000);
        assert_eq!(fib(&m, 80), 23416728348467685);
    }
}
