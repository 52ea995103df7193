//! Named and parametrised system generators.

use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::examples;
use crate::system::FSystem;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Liar,
    /// Finite Yablo prefix on `n` sentences.
    Yablo { n: usize },
    Cycle { n: usize },
    Example2,
    Example4,
    Example6,
    Example7,
    Random { n: usize, p: f64, seed: u64 },
}

/// Generator names accepted by [`GeneratorSpec::from_parts`].
pub const GENERATOR_NAMES: &[&str] = &[
    "liar", "yablo", "cycle", "example2", "example4", "example6", "example7", "random",
];

impl GeneratorSpec {
    /// Assembles a spec from a name and optional parameters, rejecting
    /// parameters the generator does not take and requiring the ones it does.
    pub fn from_parts(name: &str, n: Option<usize>, p: Option<f64>, seed: Option<u64>) -> Result<Self> {
        let no_params = |spec: GeneratorSpec| {
            if n.is_some() || p.is_some() || seed.is_some() {
                Err(Error::InvalidGenerator(format!("{name} takes no parameters")))
            } else {
                Ok(spec)
            }
        };
        let only_n = |make: fn(usize) -> GeneratorSpec| {
            if p.is_some() || seed.is_some() {
                return Err(Error::InvalidGenerator(format!("{name} takes only n")));
            }
            n.map(make)
                .ok_or_else(|| Error::InvalidGenerator(format!("{name} requires n")))
        };
        match name {
            "liar" => no_params(GeneratorSpec::Liar),
            "example2" => no_params(GeneratorSpec::Example2),
            "example4" => no_params(GeneratorSpec::Example4),
            "example6" => no_params(GeneratorSpec::Example6),
            "example7" => no_params(GeneratorSpec::Example7),
            "yablo" => only_n(|n| GeneratorSpec::Yablo { n }),
            "cycle" => only_n(|n| GeneratorSpec::Cycle { n }),
            "random" => match (n, p, seed) {
                (Some(n), Some(p), Some(seed)) => Ok(GeneratorSpec::Random { n, p, seed }),
                _ => Err(Error::InvalidGenerator("random requires n, p and seed".into())),
            },
            other => Err(Error::InvalidGenerator(format!(
                "unknown generator {other:?}; expected one of {}",
                GENERATOR_NAMES.join(", ")
            ))),
        }
    }

    pub fn generate(&self) -> Result<FSystem> {
        match *self {
            GeneratorSpec::Liar => Ok(examples::liar()),
            GeneratorSpec::Example2 => Ok(examples::example2()),
            GeneratorSpec::Example4 => Ok(examples::example4()),
            GeneratorSpec::Example6 => Ok(examples::example6()),
            GeneratorSpec::Example7 => Ok(examples::example7()),
            GeneratorSpec::Yablo { n } => yablo(n),
            GeneratorSpec::Cycle { n } => cycle(n),
            GeneratorSpec::Random { n, p, seed } => random(n, p, seed),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    /// Parses parameterless names only; use [`GeneratorSpec::from_parts`]
    /// for the rest.
    fn from_str(s: &str) -> Result<Self> {
        GeneratorSpec::from_parts(s, None, None, None)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Liar => write!(f, "liar"),
            GeneratorSpec::Yablo { n } => write!(f, "yablo(n={n})"),
            GeneratorSpec::Cycle { n } => write!(f, "cycle(n={n})"),
            GeneratorSpec::Example2 => write!(f, "example2"),
            GeneratorSpec::Example4 => write!(f, "example4"),
            GeneratorSpec::Example6 => write!(f, "example6"),
            GeneratorSpec::Example7 => write!(f, "example7"),
            GeneratorSpec::Random { n, p, seed } => write!(f, "random(n={n}, p={p}, seed={seed})"),
        }
    }
}

fn numbered(i: usize) -> String {
    format!("a{}", i + 1)
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidGenerator("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Sentences `a1..an` where each `ak` denies every later `am`.
///
/// Every finite prefix is transitive with exactly one sink (`an`), and the
/// sink lets a classical labelling exist: the prefixes are never paradoxical.
/// The paradox only appears in the infinite system, which has no finite
/// representation here.
pub fn yablo(n: usize) -> Result<FSystem> {
    check_n(n)?;
    FSystem::from_index_edges(
        n,
        numbered,
        (0..n).flat_map(|k| (k + 1..n).map(move |m| (k, m))),
    )
}

/// The directed cycle `a1 -> a2 -> ... -> an -> a1`; `cycle(1)` is a liar.
pub fn cycle(n: usize) -> Result<FSystem> {
    check_n(n)?;
    FSystem::from_index_edges(n, numbered, (0..n).map(|k| (k, (k + 1) % n)))
}

/// Each ordered pair over `a1..an`, self-loops included, is an edge with
/// probability `p`.
///
/// Pairs are drawn in row-major order from a ChaCha8 stream seeded with
/// `seed`, so a seed names the same system on every platform.
pub fn random(n: usize, p: f64, seed: u64) -> Result<FSystem> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidGenerator(format!("p = {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rng.random_bool(p) {
                edges.push((x, y));
            }
        }
    }
    FSystem::from_index_edges(n, numbered, edges)
}
