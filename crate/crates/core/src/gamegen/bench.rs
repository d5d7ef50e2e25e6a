use std::fmt;
use std::time::Instant;

use super::float::{classify_float, DEFAULT_EPS};
use super::{
    non_equivalent_integer, pat_integer, pure_integer, rng_for, IntGrid, NonEquivalentKind,
    DEFAULT_RANGE,
};
use crate::exactnum::BimatrixGame;
use crate::ser0::{classify, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Equivalent,
    PureNe,
    NonEquivalent,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::Equivalent => "equivalent",
            Family::PureNe => "pure_ne",
            Family::NonEquivalent => "non_equivalent",
        }
    }

    pub fn expected_verdict(self) -> Verdict {
        match self {
            Family::Equivalent => Verdict::StrategicallyZeroSum,
            Family::PureNe => Verdict::PureStrategyNe,
            Family::NonEquivalent => Verdict::NotEquivalentViaPat,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithmeticMode {
    Exact,
    Float,
}

impl ArithmeticMode {
    pub fn token(self) -> &'static str {
        match self {
            ArithmeticMode::Exact => "exact",
            ArithmeticMode::Float => "float",
        }
    }
}

impl fmt::Display for ArithmeticMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<(usize, usize)>,
    pub reps: usize,
    pub families: Vec<Family>,
    pub seed: u64,
    pub mode: ArithmeticMode,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub m: usize,
    pub n: usize,
    pub family: Family,
    /// Seed the instance was generated from.
    pub seed: u64,
    /// Seconds spent in classification alone.
    pub wall_time: f64,
    pub verdict: Verdict,
    pub mode: ArithmeticMode,
}

fn mix(mut z: u64) -> u64 {
    // splitmix64 finaliser
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn instance_seed(base: u64, m: usize, n: usize, family: Family, rep: usize) -> u64 {
    let tag = family as u64;
    mix(base ^ mix((m as u64) << 40 ^ (n as u64) << 16 ^ tag << 8 ^ rep as u64))
}

fn generate(m: usize, n: usize, family: Family, seed: u64) -> (IntGrid, IntGrid) {
    let mut rng = rng_for(seed);
    match family {
        Family::Equivalent => {
            let pat = pat_integer(m, n, &mut rng, &DEFAULT_RANGE);
            (pat.a_tilde, pat.b_tilde)
        }
        Family::PureNe => pure_integer(m, n, &mut rng),
        Family::NonEquivalent => {
            let kind = if m < 3 || n < 3 || seed.is_multiple_of(2) {
                NonEquivalentKind::GammaNegative
            } else {
                NonEquivalentKind::DBroken
            };
            non_equivalent_integer(m, n, kind, &mut rng)
        }
    }
}

/// Generates and classifies one instance per size × family × repetition,
/// in that nesting order. Only classification is timed.
///
/// Sizes below what a family supports (2x2 for equivalent and
/// non-equivalent games) are skipped.
pub fn bench_run(config: &BenchConfig) -> Vec<BenchRecord> {
    let mut records = Vec::new();
    for &(m, n) in &config.sizes {
        for &family in &config.families {
            let min = match family {
                Family::PureNe => 1,
                _ => 2,
            };
            if m < min || n < min {
                continue;
            }
            for rep in 0..config.reps {
                let seed = instance_seed(config.seed, m, n, family, rep);
                let (a, b) = generate(m, n, family, seed);
                let (wall_time, verdict) = match config.mode {
                    ArithmeticMode::Exact => {
                        let game = BimatrixGame::new(a.to_matrix(), b.to_matrix())
                            .expect("generated matrices share a shape");
                        let start = Instant::now();
                        let report = classify(&game);
                        (start.elapsed().as_secs_f64(), report.verdict())
                    }
                    ArithmeticMode::Float => {
                        let (fa, fb) = (a.to_f64(), b.to_f64());
                        let start = Instant::now();
                        let report = classify_float(&fa, &fb, m, n, DEFAULT_EPS);
                        (start.elapsed().as_secs_f64(), report.verdict)
                    }
                };
                records.push(BenchRecord {
                    m,
                    n,
                    family,
                    seed,
                    wall_time,
                    verdict,
                    mode: config.mode,
                });
            }
        }
    }
    records
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_follow_the_family() {
        for mode in [ArithmeticMode::Exact, ArithmeticMode::Float] {
            let records = bench_run(&BenchConfig {
                sizes: vec![(3, 3), (6, 4)],
                reps: 3,
                families: vec![Family::Equivalent, Family::PureNe, Family::NonEquivalent],
                seed: 11,
                mode,
            });
            assert_eq!(records.len(), 18);
            for r in &records {
                assert_eq!(r.verdict, r.family.expected_verdict(), "{r:?}");
                assert_eq!(r.mode, mode);
            }
        }
    }

    #[test]
    fn empty_families_give_no_records() {
        let records = bench_run(&BenchConfig {
            sizes: vec![(4, 4)],
            reps: 1,
            families: vec![],
            seed: 0,
            mode: ArithmeticMode::Exact,
        });
        assert!(records.is_empty());
    }

    #[test]
    fn seeds_are_stable_and_distinct() {
        let cfg = BenchConfig {
            sizes: vec![(4, 4)],
            reps: 4,
            families: vec![Family::Equivalent],
            seed: 5,
            mode: ArithmeticMode::Float,
        };
        let a: Vec<u64> = bench_run(&cfg).iter().map(|r| r.seed).collect();
        let b: Vec<u64> = bench_run(&cfg).iter().map(|r| r.seed).collect();
        assert_eq!(a, b);
        let mut dedup = a.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 4);
    }
}
