use std::fmt;

use thiserror::Error;

use super::term::Name;
use crate::list::List;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unbound variable `{0}`")]
pub struct Unbound(pub Name);

/// A persistent environment; the most recent binding of a name wins.
pub struct Env<V> {
    bindings: List<(Name, V)>,
}

impl<V> Env<V> {
    pub fn empty() -> Self {
        Env {
            bindings: List::nil(),
        }
    }

    pub fn extend(&self, x: Name, v: V) -> Self {
        Env {
            bindings: self.bindings.push((x, v)),
        }
    }

    pub fn lookup(&self, x: &str) -> Result<&V, Unbound> {
        self.bindings
            .iter()
            .find(|(y, _)| &**y == x)
            .map(|(_, v)| v)
            .ok_or_else(|| Unbound(x.into()))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Name, V)> {
        self.bindings.iter()
    }
}

impl<V> Clone for Env<V> {
    fn clone(&self) -> Self {
        Env {
            bindings: self.bindings.clone(),
        }
    }
}

impl<V> Default for Env<V> {
    fn default() -> Self {
        Env::empty()
    }
}

impl<V: PartialEq> PartialEq for Env<V> {
    fn eq(&self, other: &Self) -> bool {
        self.bindings == other.bindings
    }
}

impl<V: fmt::Debug> fmt::Debug for Env<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.bindings.iter().map(|(k, v)| (k, v)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::name;
    use proptest::prelude::*;

    #[test]
    fn lookup_examples() {
        let e = Env::empty().extend(name("x"), 1);
        assert_eq!(e.lookup("x"), Ok(&1));
        assert_eq!(e.extend(name("x"), 2).lookup("x"), Ok(&2));
        assert_eq!(e.lookup("y"), Err(Unbound(name("y"))));
    }

    proptest! {
        #[test]
        fn shadowing(n in "[a-z]{1,3}", v1: i32, v2: i32, others in proptest::collection::vec(("[a-z]{1,3}", any::<i32>()), 0..5)) {
            let mut e = Env::empty();
            for (k, v) in others {
                e = e.extend(name(&k), v);
            }
            let e = e.extend(name(&n), v1).extend(name(&n), v2);
            prop_assert_eq!(e.lookup(&n), Ok(&v2));
        }
    }
}
