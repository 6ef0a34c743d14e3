//! Functional-programming utilities: combinators, folds and their inverse
//! unfolds, list-as-set operations, association lists.
//!
//! Set operations treat a `Vec` as a set and keep first occurrences in
//! order. Each has a `_by` variant that takes the governing equivalence
//! relation explicitly; the plain form uses `PartialEq`.

use alloc::vec::Vec;

use crate::error::{fail, Result};

pub fn id_fn<T>(x: T) -> T {
    x
}

pub fn con_fn<A: Clone, B>(x: A) -> impl Fn(B) -> A {
    move |_| x.clone()
}

pub fn curry<A, B, C>(f: impl Fn((A, B)) -> C) -> impl Fn(A, B) -> C {
    move |a, b| f((a, b))
}

pub fn uncurry<A, B, C>(f: impl Fn(A, B) -> C) -> impl Fn((A, B)) -> C {
    move |(a, b)| f(a, b)
}

pub fn swap_arg<A, B, C>(f: impl Fn(A, B) -> C) -> impl Fn(B, A) -> C {
    move |b, a| f(a, b)
}

pub fn dbl_arg<A: Clone, B>(f: impl Fn(A, A) -> B) -> impl Fn(A) -> B {
    move |a| f(a.clone(), a)
}

/// Function composition: `compose(f, g)(x) = f(g(x))`.
pub fn compose<A, B, C>(f: impl Fn(B) -> C, g: impl Fn(A) -> B) -> impl Fn(A) -> C {
    move |x| f(g(x))
}

pub fn pair_apply<A, B, C, D>(
    f: impl Fn(A) -> C,
    g: impl Fn(B) -> D,
) -> impl Fn((A, B)) -> (C, D) {
    move |(a, b)| (f(a), g(b))
}

pub fn map<A, B>(f: impl FnMut(&A) -> B, xs: &[A]) -> Vec<B> {
    xs.iter().map(f).collect()
}

/// Map a binary function over two lists of equal length.
pub fn bimap<A, B, C>(mut f: impl FnMut(&A, &B) -> C, xs: &[A], ys: &[B]) -> Result<Vec<C>> {
    if xs.len() != ys.len() {
        return fail("bimap", "lists of unequal length");
    }
    Ok(xs.iter().zip(ys).map(|(x, y)| f(x, y)).collect())
}

/// Apply `f` to `x` exactly `n` times. Fails on negative `n`.
pub fn funpow<T>(n: i64, f: impl Fn(T) -> T, x: T) -> Result<T> {
    if n < 0 {
        return fail("funpow", "negative iteration count");
    }
    let mut acc = x;
    for _ in 0..n {
        acc = f(acc);
    }
    Ok(acc)
}

pub fn hd<T: Clone>(xs: &[T]) -> Result<T> {
    match xs.first() {
        Some(x) => Ok(x.clone()),
        None => fail("hd", "empty list"),
    }
}

pub fn tl<T: Clone>(xs: &[T]) -> Result<Vec<T>> {
    match xs.split_first() {
        Some((_, rest)) => Ok(rest.to_vec()),
        None => fail("tl", "empty list"),
    }
}

pub fn last<T: Clone>(xs: &[T]) -> Result<T> {
    match xs.last() {
        Some(x) => Ok(x.clone()),
        None => fail("last", "empty list"),
    }
}

pub fn front<T: Clone>(xs: &[T]) -> Result<Vec<T>> {
    match xs.split_last() {
        Some((_, rest)) => Ok(rest.to_vec()),
        None => fail("front", "empty list"),
    }
}

/// 1-based element selection.
pub fn el<T: Clone>(n: usize, xs: &[T]) -> Result<T> {
    if n == 0 || n > xs.len() {
        return fail("el", "index out of range");
    }
    Ok(xs[n - 1].clone())
}

/// Split off the first `n` elements.
pub fn cut<T: Clone>(n: usize, xs: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    if n > xs.len() {
        return fail("cut", "index out of range");
    }
    Ok((xs[..n].to_vec(), xs[n..].to_vec()))
}

pub fn find<T: Clone>(p: impl Fn(&T) -> bool, xs: &[T]) -> Result<T> {
    match xs.iter().find(|x| p(x)) {
        Some(x) => Ok(x.clone()),
        None => fail("find", "no matching element"),
    }
}

/// `f(x1, f(x2, ... f(xn, b)))`
pub fn foldr<A, B>(f: impl Fn(&A, B) -> B, xs: &[A], b: B) -> B {
    xs.iter().rev().fold(b, |acc, x| f(x, acc))
}

/// `f(... f(f(b, x1), x2) ..., xn)`
pub fn foldl<A, B>(f: impl Fn(B, &A) -> B, b: B, xs: &[A]) -> B {
    xs.iter().fold(b, f)
}

/// `foldr` seeded with the last element. Fails on an empty list.
pub fn foldr1<A: Clone>(f: impl Fn(&A, A) -> A, xs: &[A]) -> Result<A> {
    match xs.split_last() {
        Some((x, rest)) => Ok(foldr(f, rest, x.clone())),
        None => fail("foldr1", "empty list"),
    }
}

/// `foldl` seeded with the first element. Fails on an empty list.
pub fn foldl1<A: Clone>(f: impl Fn(A, &A) -> A, xs: &[A]) -> Result<A> {
    match xs.split_first() {
        Some((x, rest)) => Ok(foldl(f, x.clone(), rest)),
        None => fail("foldl1", "empty list"),
    }
}

/// Inverse of `foldr`: peel right-nested applications off `x` with `dest`
/// until it fails, returning the operands and the residue.
pub fn unfoldr<A, B>(dest: impl Fn(&B) -> Option<(A, B)>, x: B) -> (Vec<A>, B) {
    let mut items = Vec::new();
    let mut cur = x;
    while let Some((a, rest)) = dest(&cur) {
        items.push(a);
        cur = rest;
    }
    (items, cur)
}

/// Inverse of `foldl`: peel left-nested applications off `x`.
pub fn unfoldl<A, B>(dest: impl Fn(&B) -> Option<(B, A)>, x: B) -> (B, Vec<A>) {
    let mut items = Vec::new();
    let mut cur = x;
    while let Some((rest, a)) = dest(&cur) {
        items.push(a);
        cur = rest;
    }
    items.reverse();
    (cur, items)
}

/// Inverse of `foldr1`: the residue becomes the final element.
pub fn unfoldr1<A>(dest: impl Fn(&A) -> Option<(A, A)>, x: A) -> Vec<A> {
    let (mut items, last) = unfoldr(dest, x);
    items.push(last);
    items
}

/// Inverse of `foldl1`: the residue becomes the first element.
pub fn unfoldl1<A>(dest: impl Fn(&A) -> Option<(A, A)>, x: A) -> Vec<A> {
    let (first, items) = unfoldl(dest, x);
    let mut out = Vec::with_capacity(items.len() + 1);
    out.push(first);
    out.extend(items);
    out
}

pub fn mem_by<T>(eq: impl Fn(&T, &T) -> bool, x: &T, xs: &[T]) -> bool {
    xs.iter().any(|y| eq(x, y))
}

pub fn mem<T: PartialEq>(x: &T, xs: &[T]) -> bool {
    mem_by(|a, b| a == b, x, xs)
}

pub fn setify_by<T: Clone>(eq: impl Fn(&T, &T) -> bool, xs: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(xs.len());
    for x in xs {
        if !out.iter().any(|y| eq(x, y)) {
            out.push(x.clone());
        }
    }
    out
}

pub fn setify<T: Clone + PartialEq>(xs: &[T]) -> Vec<T> {
    setify_by(|a, b| a == b, xs)
}

pub fn insert_by<T: Clone>(eq: impl Fn(&T, &T) -> bool, x: &T, xs: &[T]) -> Vec<T> {
    let mut out = setify_by(&eq, xs);
    if !out.iter().any(|y| eq(x, y)) {
        out.push(x.clone());
    }
    out
}

pub fn insert<T: Clone + PartialEq>(x: &T, xs: &[T]) -> Vec<T> {
    insert_by(|a, b| a == b, x, xs)
}

pub fn union_by<T: Clone>(eq: impl Fn(&T, &T) -> bool, xs: &[T], ys: &[T]) -> Vec<T> {
    let mut out = setify_by(&eq, xs);
    for y in ys {
        if !out.iter().any(|z| eq(y, z)) {
            out.push(y.clone());
        }
    }
    out
}

pub fn union<T: Clone + PartialEq>(xs: &[T], ys: &[T]) -> Vec<T> {
    union_by(|a, b| a == b, xs, ys)
}

pub fn subtract_by<T: Clone>(eq: impl Fn(&T, &T) -> bool, xs: &[T], ys: &[T]) -> Vec<T> {
    let keep: Vec<T> = xs
        .iter()
        .filter(|x| !ys.iter().any(|y| eq(x, y)))
        .cloned()
        .collect();
    setify_by(eq, &keep)
}

pub fn subtract<T: Clone + PartialEq>(xs: &[T], ys: &[T]) -> Vec<T> {
    subtract_by(|a, b| a == b, xs, ys)
}

pub fn intersect_by<T: Clone>(eq: impl Fn(&T, &T) -> bool, xs: &[T], ys: &[T]) -> Vec<T> {
    let keep: Vec<T> = xs
        .iter()
        .filter(|x| ys.iter().any(|y| eq(x, y)))
        .cloned()
        .collect();
    setify_by(eq, &keep)
}

pub fn intersect<T: Clone + PartialEq>(xs: &[T], ys: &[T]) -> Vec<T> {
    intersect_by(|a, b| a == b, xs, ys)
}

pub fn no_dups_by<T>(eq: impl Fn(&T, &T) -> bool, xs: &[T]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| !xs[i + 1..].iter().any(|y| eq(x, y)))
}

/// Value paired with the first occurrence of `key`.
pub fn assoc<K: PartialEq, V: Clone>(key: &K, pairs: &[(K, V)]) -> Result<V> {
    match try_assoc(key, pairs) {
        Some(v) => Ok(v),
        None => fail("assoc", "no matching key"),
    }
}

/// Key paired with the first occurrence of `value`.
pub fn inv_assoc<K: Clone, V: PartialEq>(value: &V, pairs: &[(K, V)]) -> Result<K> {
    match pairs.iter().find(|(_, v)| v == value) {
        Some((k, _)) => Ok(k.clone()),
        None => fail("inv_assoc", "no matching value"),
    }
}

pub fn try_assoc<K: PartialEq, V: Clone>(key: &K, pairs: &[(K, V)]) -> Option<V> {
    pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[derive(Clone, Debug, PartialEq)]
    enum Nest {
        Leaf(i32),
        Node(i32, alloc::boxed::Box<Nest>),
    }

    #[test]
    fn funpow_cases() {
        assert_eq!(funpow(0, |x: i32| x + 1, 7).unwrap(), 7);
        assert_eq!(funpow(3, |x: i32| x + 1, 0).unwrap(), 3);
        let e = funpow(-1, |x: i32| x, 0).unwrap_err();
        assert_eq!(e.origin_name(), Some("funpow"));
    }

    #[test]
    fn fold_examples() {
        let r = foldr(|x: &i32, acc| Nest::Node(*x, acc.into()), &[1, 2, 3], Nest::Leaf(0));
        assert_eq!(
            r,
            Nest::Node(
                1,
                Nest::Node(2, Nest::Node(3, Nest::Leaf(0).into()).into()).into()
            )
        );
        assert_eq!(foldl(|acc, x: &i32| acc - x, 10, &[1, 2, 3]), 4);
        let e = foldr1(|x: &i32, acc| x + acc, &[]).unwrap_err();
        assert_eq!(e.origin_name(), Some("foldr1"));
        assert_eq!(foldl1(|a, x: &i32| a - x, &[10, 1, 2]).unwrap(), 7);
        assert!(foldl1(|a, x: &i32| a - x, &[]).is_err());
    }

    #[test]
    fn set_examples() {
        assert_eq!(subtract(&[1, 2, 3], &[2]), vec![1, 3]);
        assert!(!mem(&5, &[]));
        assert_eq!(union(&[1, 2, 2], &[3, 1]), vec![1, 2, 3]);
        assert_eq!(intersect(&[3, 1, 2, 3], &[3, 2]), vec![3, 2]);
        assert_eq!(insert(&4, &[1, 1]), vec![1, 4]);
        let mod3 = |a: &i32, b: &i32| a % 3 == b % 3;
        assert_eq!(union_by(mod3, &[1, 2], &[4, 6]), vec![1, 2, 6]);
    }

    #[test]
    fn assoc_examples() {
        let pairs = [(1, "a"), (2, "b")];
        assert_eq!(assoc(&2, &pairs).unwrap(), "b");
        assert_eq!(inv_assoc(&"a", &[(1, "a")]).unwrap(), 1);
        assert_eq!(assoc(&3, &[(1, "a")]).unwrap_err().origin_name(), Some("assoc"));
        assert_eq!(inv_assoc(&"z", &pairs).unwrap_err().origin_name(), Some("inv_assoc"));
        assert_eq!(try_assoc(&9, &pairs), None);
    }

    #[test]
    fn list_errors_name_their_origin() {
        let empty: [i32; 0] = [];
        assert_eq!(hd(&empty).unwrap_err().origin_name(), Some("hd"));
        assert_eq!(el(3, &[1, 2]).unwrap_err().origin_name(), Some("el"));
        assert_eq!(find(|x: &i32| *x > 5, &[1]).unwrap_err().origin_name(), Some("find"));
        assert_eq!(bimap(|a: &i32, b: &i32| a + b, &[1], &[]).unwrap_err().origin_name(), Some("bimap"));
    }

    #[test]
    fn combinators() {
        let add = |a: i32, b: i32| a - b;
        assert_eq!(swap_arg(add)(1, 10), 9);
        assert_eq!(curry(uncurry(add))(5, 2), 3);
        assert_eq!(dbl_arg(|a: i32, b: i32| a * b)(7), 49);
        assert_eq!(compose(|x: i32| x * 2, |x: i32| x + 1)(3), 8);
        assert_eq!(pair_apply(|x: i32| x + 1, |y: i32| y * 2)((1, 2)), (2, 4));
        assert_eq!(con_fn::<i32, &str>(4)("ignored"), 4);
        assert_eq!(id_fn(3), 3);
    }

    fn dest_node(n: &Nest) -> Option<(i32, Nest)> {
        match n {
            Nest::Node(x, rest) => Some((*x, (**rest).clone())),
            Nest::Leaf(_) => None,
        }
    }

    proptest! {
        #[test]
        fn funpow_step(n in 0i64..50, x in -100i64..100) {
            let f = |v: i64| v.wrapping_mul(3).wrapping_add(1);
            let a = funpow(n + 1, f, x).unwrap();
            let b = f(funpow(n, f, x).unwrap());
            prop_assert_eq!(a, b);
        }

        #[test]
        fn foldr_unfoldr_inverse(xs in proptest::collection::vec(-50i32..50, 1..12), b in -5i32..5) {
            let nested = foldr(|x: &i32, acc| Nest::Node(*x, acc.into()), &xs, Nest::Leaf(b));
            let (items, residue) = unfoldr(dest_node, nested);
            prop_assert_eq!(items, xs);
            prop_assert_eq!(residue, Nest::Leaf(b));
        }

        #[test]
        fn foldl_unfoldl_inverse(xs in proptest::collection::vec(-50i32..50, 1..12)) {
            #[derive(Clone, Debug, PartialEq)]
            enum L { Base, Snoc(alloc::boxed::Box<L>, i32) }
            let nested = foldl(|acc, x: &i32| L::Snoc(acc.into(), *x), L::Base, &xs);
            let (base, items) = unfoldl(|l: &L| match l {
                L::Snoc(rest, x) => Some(((**rest).clone(), *x)),
                L::Base => None,
            }, nested);
            prop_assert_eq!(base, L::Base);
            prop_assert_eq!(items, xs);
        }

        #[test]
        fn set_ops_have_set_semantics(xs in proptest::collection::vec(0i32..10, 0..15),
                                      ys in proptest::collection::vec(0i32..10, 0..15)) {
            let eq = |a: &i32, b: &i32| a == b;
            let u = union(&xs, &ys);
            let s = subtract(&xs, &ys);
            let i = intersect(&xs, &ys);
            for r in [&u, &s, &i] {
                prop_assert!(no_dups_by(eq, r));
            }
            for v in 0..10 {
                prop_assert_eq!(mem(&v, &u), mem(&v, &xs) || mem(&v, &ys));
                prop_assert_eq!(mem(&v, &s), mem(&v, &xs) && !mem(&v, &ys));
                prop_assert_eq!(mem(&v, &i), mem(&v, &xs) && mem(&v, &ys));
            }
        }
    }
}
