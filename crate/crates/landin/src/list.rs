//! Persistent singly linked lists.
//!
//! Every stack, control list, dump and context in the crate is one of these.
//! Sharing is by reference counting, and dropping is iterative so that the
//! million-frame dumps produced by divergent programs do not exhaust the host
//! stack.

use std::fmt;
use std::rc::Rc;

pub struct List<T> {
    head: Option<Rc<Node<T>>>,
}

struct Node<T> {
    elem: T,
    next: List<T>,
}

impl<T> List<T> {
    pub const fn nil() -> Self {
        List { head: None }
    }

    /// A new list with `elem` in front of `tail`.
    pub fn cons(elem: T, tail: List<T>) -> Self {
        List {
            head: Some(Rc::new(Node { elem, next: tail })),
        }
    }

    /// Pushes onto a clone of `self`.
    pub fn push(&self, elem: T) -> Self {
        List::cons(elem, self.clone())
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_none()
    }

    pub fn head(&self) -> Option<&T> {
        self.head.as_ref().map(|n| &n.elem)
    }

    /// Splits into a reference to the first element and the rest.
    pub fn uncons(&self) -> Option<(&T, List<T>)> {
        self.head.as_ref().map(|n| (&n.elem, n.next.clone()))
    }

    pub fn tail(&self) -> List<T> {
        match &self.head {
            Some(n) => n.next.clone(),
            None => List::nil(),
        }
    }

    pub fn len(&self) -> usize {
        self.iter().count()
    }

    pub fn iter(&self) -> Iter<'_, T> {
        Iter {
            cur: self.head.as_deref(),
        }
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        match (&self.head, &other.head) {
            (None, None) => true,
            (Some(a), Some(b)) => Rc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl<T: Clone> List<T> {
    /// Builds a list whose first element is the first item of `items`.
    pub fn from_items<I>(items: I) -> Self
    where
        I: IntoIterator<Item = T>,
        I::IntoIter: DoubleEndedIterator,
    {
        items
            .into_iter()
            .rev()
            .fold(List::nil(), |acc, x| List::cons(x, acc))
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.iter().cloned().collect()
    }
}

impl<T> Clone for List<T> {
    fn clone(&self) -> Self {
        List {
            head: self.head.clone(),
        }
    }
}

impl<T> Default for List<T> {
    fn default() -> Self {
        List::nil()
    }
}

impl<T> Drop for List<T> {
    fn drop(&mut self) {
        let mut cur = self.head.take();
        while let Some(node) = cur {
            match Rc::try_unwrap(node) {
                Ok(mut n) => cur = n.next.head.take(),
                Err(_) => break,
            }
        }
    }
}

impl<T: PartialEq> PartialEq for List<T> {
    fn eq(&self, other: &Self) -> bool {
        let (mut a, mut b) = (self.head.as_ref(), other.head.as_ref());
        loop {
            match (a, b) {
                (None, None) => return true,
                (Some(x), Some(y)) => {
                    if Rc::ptr_eq(x, y) {
                        return true;
                    }
                    if x.elem != y.elem {
                        return false;
                    }
                    a = x.next.head.as_ref();
                    b = y.next.head.as_ref();
                }
                _ => return false,
            }
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for List<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

pub struct Iter<'a, T> {
    cur: Option<&'a Node<T>>,
}

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;
    fn next(&mut self) -> Option<&'a T> {
        self.cur.map(|n| {
            self.cur = n.next.head.as_deref();
            &n.elem
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cons_and_uncons() {
        let l = List::from_items([1, 2, 3]);
        assert_eq!(l.head(), Some(&1));
        assert_eq!(l.len(), 3);
        let (h, t) = l.uncons().unwrap();
        assert_eq!(*h, 1);
        assert_eq!(t.to_vec(), vec![2, 3]);
        assert!(List::<i32>::nil().uncons().is_none());
    }

    #[test]
    fn sharing_survives_drop_of_one_owner() {
        let base = List::from_items([1, 2]);
        let a = base.push(0);
        drop(base);
        assert_eq!(a.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn long_lists_drop_without_overflow() {
        let mut l = List::nil();
        for i in 0..2_000_000u32 {
            l = List::cons(i, l);
        }
        assert_eq!(l.head(), Some(&1_999_999));
        drop(l);
    }

    #[test]
    fn equality_is_structural() {
        assert_eq!(List::from_items([1, 2]), List::from_items([1, 2]));
        assert_ne!(List::from_items([1, 2]), List::from_items([1]));
    }
}
