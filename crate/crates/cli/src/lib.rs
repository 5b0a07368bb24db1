//! Command implementations behind the `thresh` binary.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use thresh_core::{
    charpoly_auto, charpoly_balanced, charpoly_eval, charpoly_interpolation, charpoly_quadratic,
    dense_charpoly_capped, det_weighted, CreationSequence, IntPolynomial, ThresholdGraph,
    WeightedThresholdMatrix, DEFAULT_AUTO_CROSSOVER, DEFAULT_ORACLE_CAP,
};

/// Overrides the dense-oracle size cap.
pub const ORACLE_CAP_ENV: &str = "THRESH_ORACLE_CAP";
/// Overrides the `auto` crossover between the quadratic and balanced algorithms.
pub const CROSSOVER_ENV: &str = "THRESH_AUTO_CROSSOVER";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algo {
    Auto,
    Quadratic,
    Balanced,
    Oracle,
    Interp,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Quadratic => "quadratic",
            Algo::Balanced => "balanced",
            Algo::Oracle => "oracle",
            Algo::Interp => "interp",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub oracle_cap: usize,
    pub crossover: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            oracle_cap: DEFAULT_ORACLE_CAP,
            crossover: DEFAULT_AUTO_CROSSOVER,
        }
    }
}

pub fn charpoly_with(g: &ThresholdGraph, algo: Algo, settings: &Settings) -> Result<IntPolynomial> {
    Ok(match algo {
        Algo::Auto => charpoly_auto(g, settings.crossover),
        Algo::Quadratic => charpoly_quadratic(g),
        Algo::Balanced => charpoly_balanced(g),
        Algo::Oracle => {
            let adj = g.to_dense_adjacency_capped(settings.oracle_cap)?;
            dense_charpoly_capped(&adj, settings.oracle_cap)?
        }
        Algo::Interp => charpoly_interpolation(g)?,
    })
}

pub fn render(p: &IntPolynomial, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string(p)?,
    })
}

pub fn cmd_charpoly(bits: &str, algo: Algo, format: Format, settings: &Settings) -> Result<String> {
    let g: ThresholdGraph = bits.parse()?;
    render(&charpoly_with(&g, algo, settings)?, format)
}

/// Parses comma-separated integers; the empty string is an empty list.
pub fn parse_int_list(text: &str) -> Result<Vec<BigInt>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, item)| {
            item.trim()
                .parse::<BigInt>()
                .with_context(|| format!("item {} ({:?}) is not an integer", i + 1, item))
        })
        .collect()
}

pub fn cmd_det(b: &str, d: &str) -> Result<String> {
    let m = WeightedThresholdMatrix::new(parse_int_list(b)?, parse_int_list(d)?)?;
    Ok(det_weighted(&m).to_string())
}

pub fn cmd_eval(bits: &str, at: &BigInt) -> Result<String> {
    let g: ThresholdGraph = bits.parse()?;
    Ok(charpoly_eval(&g, at).to_string())
}

/// One timing sample; serialized as a row of the bench CSV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub algo: String,
    pub wall_time: f64,
    pub coeff_maxbits: u64,
}

/// Uniform random creation sequence for `n` vertices.
///
/// Bits come from ChaCha8 seeded with `seed`, on stream `n`, so each size
/// gets its own reproducible instance regardless of which sizes are run.
pub fn random_sequence(seed: u64, n: usize) -> CreationSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    CreationSequence::from_bools((1..n).map(|_| rng.gen::<bool>()).collect())
}

/// Instance sizes: doubling from `min_n` (default 64) while at most `max_n`.
pub fn bench_sizes(min_n: usize, max_n: usize) -> Vec<usize> {
    let mut n = min_n.min(max_n).max(1);
    let mut sizes = Vec::new();
    while n <= max_n {
        sizes.push(n);
        n *= 2;
    }
    sizes
}

pub fn run_bench(
    min_n: usize,
    max_n: usize,
    algos: &[Algo],
    seed: u64,
    settings: &Settings,
) -> Result<Vec<BenchRecord>> {
    if max_n < 2 {
        bail!("bench needs max_n >= 2, got {max_n}");
    }
    let mut records = Vec::new();
    for n in bench_sizes(min_n, max_n) {
        let g = ThresholdGraph::new(random_sequence(seed, n));
        for &algo in algos {
            let start = Instant::now();
            let p = charpoly_with(&g, algo, settings)?;
            let wall_time = start.elapsed().as_secs_f64();
            records.push(BenchRecord {
                n,
                algo: algo.name().to_string(),
                wall_time,
                coeff_maxbits: p.max_bits(),
            });
        }
    }
    Ok(records)
}

pub fn write_bench_csv(path: &Path, records: &[BenchRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_bench(
    min_n: usize,
    max_n: usize,
    algos: &[Algo],
    seed: u64,
    out: &Path,
    settings: &Settings,
) -> Result<Vec<BenchRecord>> {
    // Fail on an unwritable path before spending time on the runs.
    let probe = csv::Writer::from_path(out).with_context(|| format!("cannot write {}", out.display()))?;
    drop(probe);
    let records = run_bench(min_n, max_n, algos, seed, settings)?;
    write_bench_csv(out, &records)?;
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_lists() {
        assert!(parse_int_list("").unwrap().is_empty());
        assert_eq!(parse_int_list("1, -2,3").unwrap(), vec![1.into(), (-2).into(), 3.into()]);
        assert!(parse_int_list("1,,2").is_err());
        assert!(parse_int_list("1,a").is_err());
    }

    #[test]
    fn sizes_double_up_to_max() {
        assert_eq!(bench_sizes(64, 512), vec![64, 128, 256, 512]);
        assert_eq!(bench_sizes(64, 300), vec![64, 128, 256]);
        assert_eq!(bench_sizes(64, 10), vec![10]);
        assert_eq!(bench_sizes(1024, 16384).len(), 5);
    }

    #[test]
    fn random_sequences_are_reproducible() {
        assert_eq!(random_sequence(7, 100), random_sequence(7, 100));
        assert_ne!(random_sequence(7, 100), random_sequence(8, 100));
        assert_eq!(random_sequence(7, 100).n(), 100);
        assert_eq!(random_sequence(7, 1).n(), 1);
    }

    #[test]
    fn command_outputs() {
        let s = Settings::default();
        assert_eq!(cmd_charpoly("1", Algo::Auto, Format::Json, &s).unwrap(), r#"["-1","0","1"]"#);
        assert_eq!(cmd_charpoly("", Algo::Balanced, Format::Json, &s).unwrap(), r#"["0","1"]"#);
        assert_eq!(cmd_charpoly("11", Algo::Oracle, Format::Text, &s).unwrap(), "λ^3 - 3λ - 2");
        assert_eq!(cmd_det("1", "0,0").unwrap(), "-1");
        assert_eq!(cmd_det("", "7").unwrap(), "7");
        assert_eq!(cmd_det("1,1", "0,0,0").unwrap(), "2");
        assert!(cmd_det("1,1", "0,0").is_err());
        assert_eq!(cmd_eval("1", &2.into()).unwrap(), "3");
        assert_eq!(cmd_eval("1", &1.into()).unwrap(), "0");
        assert_eq!(cmd_eval("", &5.into()).unwrap(), "5");
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let s = Settings { oracle_cap: 3, ..Settings::default() };
        assert!(cmd_charpoly("111", Algo::Oracle, Format::Text, &s).is_err());
        assert!(cmd_charpoly("11", Algo::Oracle, Format::Text, &s).is_ok());
    }

    #[test]
    fn all_algorithms_agree() {
        let s = Settings::default();
        let outputs: Vec<_> = [Algo::Auto, Algo::Quadratic, Algo::Balanced, Algo::Oracle, Algo::Interp]
            .iter()
            .map(|&a| cmd_charpoly("1001101", a, Format::Json, &s).unwrap())
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{outputs:?}");
    }
}
