//! Small named systems used throughout the docs, tests and the generator.

use crate::system::FSystem;

fn fixed(sentences: &[&str], edges: &[(&str, &str)]) -> FSystem {
    FSystem::build(sentences.iter().copied(), edges.iter().copied()).expect("well-formed named system")
}

/// `a` says that `a` is false.
pub fn liar() -> FSystem {
    fixed(&["a"], &[("a", "a")])
}

/// An object sentence `a` and `b`, which says `a` is false.
pub fn example2() -> FSystem {
    fixed(&["a", "b"], &[("b", "a")])
}

/// Sink `a`; `b` denies both `a` and `c`; `c` denies `b`.
/// Relatively grounded but not grounded.
pub fn example4() -> FSystem {
    fixed(&["a", "b", "c"], &[("b", "a"), ("b", "c"), ("c", "b")])
}

/// The transitive triangle `a -> b -> c`, `a -> c`; `a` is a referential
/// contradiction.
pub fn example6() -> FSystem {
    fixed(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
}

/// The transitive triangle next to a disconnected liar `d`.
pub fn example7() -> FSystem {
    fixed(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "c"), ("d", "d")])
}

/// `a` and `b` deny each other.
pub fn two_cycle() -> FSystem {
    fixed(&["a", "b"], &[("a", "b"), ("b", "a")])
}

/// `a` denies `b`; read as an argumentation framework, `a` attacks `b`.
pub fn single_attack() -> FSystem {
    fixed(&["a", "b"], &[("a", "b")])
}

/// The directed 4-cycle `a -> b -> c -> d -> a`.
pub fn four_cycle() -> FSystem {
    fixed(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
}
