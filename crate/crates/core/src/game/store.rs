//! Global interning arena and memo tables.
//!
//! Every structurally distinct `{L | R}` is stored once; a [`Game`] is an index
//! into the arena. Memo tables map node identities to results. Locks are never
//! held across recursive calls, so concurrent callers at worst compute the same
//! deterministic value twice.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, LazyLock, Mutex, RwLock};

use super::Game;

pub(crate) struct Node {
    pub left: Arc<[Game]>,
    pub right: Arc<[Game]>,
}

struct Arena {
    nodes: RwLock<Vec<Node>>,
    index: Mutex<HashMap<Vec<u32>, Game>>,
}

static ARENA: LazyLock<Arena> = LazyLock::new(|| Arena {
    nodes: RwLock::new(Vec::new()),
    index: Mutex::new(HashMap::new()),
});

/// Returns the unique node for the given option sets. Inputs must be sorted and deduplicated.
pub(crate) fn intern(left: Vec<Game>, right: Vec<Game>) -> Game {
    let mut key = Vec::with_capacity(left.len() + right.len() + 1);
    key.push(left.len() as u32);
    key.extend(left.iter().map(|g| g.0));
    key.extend(right.iter().map(|g| g.0));
    let mut index = ARENA.index.lock().unwrap();
    if let Some(&g) = index.get(&key) {
        return g;
    }
    let mut nodes = ARENA.nodes.write().unwrap();
    let id = Game(u32::try_from(nodes.len()).expect("game arena exhausted"));
    nodes.push(Node {
        left: left.into(),
        right: right.into(),
    });
    index.insert(key, id);
    id
}

pub(crate) fn with_node<T>(g: Game, f: impl FnOnce(&Node) -> T) -> T {
    let nodes = ARENA.nodes.read().unwrap();
    f(&nodes[g.0 as usize])
}

/// Number of interned nodes so far.
pub fn arena_size() -> usize {
    ARENA.nodes.read().unwrap().len()
}

/// A process-wide memo table.
pub(crate) struct Memo<K, V> {
    map: LazyLock<Mutex<HashMap<K, V>>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub const fn new() -> Self {
        Memo {
            map: LazyLock::new(|| Mutex::new(HashMap::new())),
        }
    }

    pub fn get(&self, k: &K) -> Option<V> {
        self.map.lock().unwrap().get(k).cloned()
    }

    pub fn insert(&self, k: K, v: V) {
        self.map.lock().unwrap().insert(k, v);
    }
}
