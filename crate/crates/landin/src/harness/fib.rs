//! Two versions of a traced Fibonacci function: one in continuation-passing
//! style with host closures as continuations, one with the continuations
//! defunctionalized. They record the first argument of every call and are
//! expected to produce the same trace.

use std::rc::Rc;

use crate::list::List;

/// The result and the calling sequence, most recent call first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibTrace {
    pub result: i64,
    pub trace: Vec<i64>,
}

impl FibTrace {
    fn new(result: i64, t: &List<i64>) -> FibTrace {
        FibTrace {
            result,
            trace: t.iter().copied().collect(),
        }
    }
}

/// Host-level trampolining, so that neither version is bounded by the
/// host stack.
enum Bounce {
    Done(i64, List<i64>),
    More(Box<dyn FnOnce() -> Bounce>),
}

fn trampoline(mut b: Bounce) -> (i64, List<i64>) {
    loop {
        match b {
            Bounce::Done(v, t) => return (v, t),
            Bounce::More(f) => b = f(),
        }
    }
}

type K = Rc<dyn Fn(i64, List<i64>) -> Bounce>;

fn fib_c(n: i64, k: K, t: List<i64>) -> Bounce {
    if n <= 1 {
        return Bounce::More(Box::new(move || k(n, t)));
    }
    let k1: K = Rc::new(move |v1, t: List<i64>| {
        let k = k.clone();
        let k2: K = Rc::new(move |v2, t| k(v1 + v2, t));
        Bounce::More(Box::new(move || fib_c(n - 2, k2, t.push(n - 2))))
    });
    Bounce::More(Box::new(move || fib_c(n - 1, k1, t.push(n - 1))))
}

pub fn fib_cps_trace(n: i64) -> FibTrace {
    assert!(n >= 0, "negative argument");
    let id: K = Rc::new(|v, t| Bounce::Done(v, t));
    let (v, t) = trampoline(fib_c(n, id, List::nil().push(n)));
    FibTrace::new(v, &t)
}

#[derive(Clone, Debug)]
enum Cont {
    C0,
    C1(i64, Rc<Cont>),
    C2(i64, Rc<Cont>),
}

/// `fib_c_def` and `apply_cont` as one loop over their two call forms.
enum Call {
    Fib(i64, Rc<Cont>, List<i64>),
    Apply(Rc<Cont>, i64, List<i64>),
}

pub fn fib_def_trace(n: i64) -> FibTrace {
    assert!(n >= 0, "negative argument");
    let mut call = Call::Fib(n, Rc::new(Cont::C0), List::nil().push(n));
    loop {
        call = match call {
            Call::Fib(n, c, t) if n <= 1 => Call::Apply(c, n, t),
            Call::Fib(n, c, t) => Call::Fib(n - 1, Rc::new(Cont::C2(n, c)), t.push(n - 1)),
            Call::Apply(c, v, t) => match &*c {
                Cont::C0 => return FibTrace::new(v, &t),
                Cont::C1(v1, c) => Call::Apply(c.clone(), v1 + v, t),
                Cont::C2(n, c) => Call::Fib(n - 2, Rc::new(Cont::C1(v, c.clone())), t.push(n - 2)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case() {
        assert_eq!(fib_cps_trace(0), FibTrace { result: 0, trace: vec![0] });
        assert_eq!(fib_def_trace(1), FibTrace { result: 1, trace: vec![1] });
    }

    #[test]
    fn fib_2_by_hand() {
        // fib_c(2) calls fib_c(1), then fib_c(0).
        assert_eq!(fib_cps_trace(2), FibTrace { result: 1, trace: vec![0, 1, 2] });
    }

    #[test]
    fn both_versions_agree() {
        for n in 0..=20 {
            assert_eq!(fib_cps_trace(n), fib_def_trace(n), "{n}");
        }
    }

    #[test]
    fn results_are_fibonacci_numbers_and_traces_count_calls() {
        let (mut a, mut b) = (0i64, 1i64);
        for n in 0..=20 {
            let t = fib_def_trace(n);
            assert_eq!(t.result, a);
            // Calls of naive Fibonacci: 2 * fib(n + 1) - 1.
            assert_eq!(t.trace.len() as i64, 2 * b - 1);
            (a, b) = (b, a + b);
        }
    }
}
