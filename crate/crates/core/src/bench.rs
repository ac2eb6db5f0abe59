//! Desk-scale measurement harness for the codec, multiplication and the
//! two word-problem pipelines: seeded workloads, monotonic-clock medians,
//! least-squares slopes on log-log points, CSV output.
//!
//! Timing columns vary run to run; workloads and verdict columns are fully
//! determined by the seed.

use crate::braid::{
    multiply, process_word_geometric, process_word_syntactic, BraidWord, SyntacticGBase,
};
use crate::free_words::{FGWord, Sign};
use crate::path_codec::{path_to_syntactic, syntactic_to_path, GBase};
use crate::workload::{random_braid_word, random_reduced_conjugate, rng_from_seed};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::time::Instant;

/// Shared harness knobs. One seed pins the whole workload.
#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub seed: u64,
    /// Timed samples per case; the median is reported.
    pub reps: u32,
    /// Run the correctness columns of the word-problem comparison on
    /// several threads. Timings always stay sequential.
    pub parallel_checks: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { seed: 42, reps: 5, parallel_checks: false }
    }
}

/// One measured case.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub op: String,
    pub n: usize,
    /// The linear parameter of the case: links, letters, or a product of
    /// list lengths.
    pub size: u64,
    pub reps: u32,
    pub median_ns: u128,
    pub spread_ns: u128,
    /// Geometric over syntactic median, word-problem rows only.
    pub ratio: Option<f64>,
    pub verdict: String,
}

/// Fitted log-log slope of one operation's rows.
#[derive(Debug, Clone)]
pub struct SlopeFit {
    pub op: String,
    pub n: usize,
    pub slope: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub slopes: Vec<SlopeFit>,
}

impl BenchReport {
    pub fn slope_of(&self, op: &str) -> Option<f64> {
        self.slopes.iter().find(|s| s.op == op).map(|s| s.slope)
    }

    /// Full CSV: one header row, stable column order, timing included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("op,n,size,reps,median_ns,spread_ns,ratio,verdict,slope\n");
        for r in &self.rows {
            let ratio = r.ratio.map_or(String::new(), |x| format!("{x:.4}"));
            let slope = self
                .slopes
                .iter()
                .find(|s| s.op == r.op && s.n == r.n)
                .map_or(String::new(), |s| format!("{:.4}", s.slope));
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.op, r.n, r.size, r.reps, r.median_ns, r.spread_ns, ratio, r.verdict, slope
            );
        }
        out
    }

    /// Seed-determined projection of the CSV: everything timing-derived
    /// stripped. Two runs with one seed must produce identical bytes.
    pub fn csv_verdict_columns(&self) -> String {
        let mut out = String::from("op,n,size,verdict\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", r.op, r.n, r.size, r.verdict);
        }
        out
    }

    fn fit_slopes(&mut self) {
        let mut keys: Vec<(String, usize)> = Vec::new();
        for r in &self.rows {
            let key = (r.op.clone(), r.n);
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
        for (op, n) in keys {
            let points: Vec<(f64, f64)> = self
                .rows
                .iter()
                .filter(|r| r.op == op && r.n == n && r.size > 0 && r.median_ns > 0)
                .map(|r| ((r.size as f64).ln(), (r.median_ns as f64).ln()))
                .collect();
            if points.len() < 3 {
                continue;
            }
            let span = points.iter().map(|p| p.0).fold(f64::MIN, f64::max)
                - points.iter().map(|p| p.0).fold(f64::MAX, f64::min);
            // A slope is only meaningful across at least four doublings;
            // the 3% slack absorbs rounding of the generated sizes.
            if span < 4.0 * 2.0f64.ln() * 0.97 {
                continue;
            }
            self.slopes.push(SlopeFit { op, n, slope: fit_slope(&points), points: points.len() });
        }
    }
}

/// Least-squares slope through log-log points.
fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in points {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

/// Median and spread of `reps` samples, each averaging a batch sized so a
/// sample spans roughly half a millisecond.
fn measure<F: FnMut()>(reps: u32, mut f: F) -> (u128, u128) {
    let start = Instant::now();
    f();
    let once = start.elapsed().as_nanos().max(1);
    let batch = (500_000 / once).clamp(1, 10_000) as u32;
    let mut samples = Vec::with_capacity(reps as usize);
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        for _ in 0..batch {
            f();
        }
        samples.push(start.elapsed().as_nanos() / batch as u128);
    }
    samples.sort_unstable();
    (samples[samples.len() / 2], samples[samples.len() - 1] - samples[0])
}

/// Measures both codec directions: `syntactic_to_path` against the word
/// length and `path_to_syntactic` against the resulting list length.
/// Word lengths are rounded to the nearest odd conjugate length; zeros are
/// reported as skipped.
pub fn bench_codec(n: usize, word_lengths: &[usize], cfg: &BenchConfig) -> BenchReport {
    let mut rng = rng_from_seed(cfg.seed);
    let mut report = BenchReport::default();
    for &target in word_lengths {
        if target == 0 {
            report.rows.push(BenchRow {
                op: "syntactic_to_path".into(),
                n,
                size: 0,
                reps: 0,
                median_ns: 0,
                spread_ns: 0,
                ratio: None,
                verdict: "skipped: empty input".into(),
            });
            continue;
        }
        let word = random_reduced_conjugate(&mut rng, n, target.saturating_sub(1) / 2);
        let path = syntactic_to_path(&word).expect("generated words are encodable");
        let round = path_to_syntactic(&path).expect("generated paths are valid");
        let verdict = if round == word { "roundtrip-ok" } else { "roundtrip-fail" };

        let (median, spread) = measure(cfg.reps, || {
            std::hint::black_box(syntactic_to_path(std::hint::black_box(&word)).unwrap());
        });
        report.rows.push(BenchRow {
            op: "syntactic_to_path".into(),
            n,
            size: word.len() as u64,
            reps: cfg.reps,
            median_ns: median,
            spread_ns: spread,
            ratio: None,
            verdict: verdict.into(),
        });

        let (median, spread) = measure(cfg.reps, || {
            std::hint::black_box(path_to_syntactic(std::hint::black_box(&path)).unwrap());
        });
        report.rows.push(BenchRow {
            op: "path_to_syntactic".into(),
            n,
            size: path.len() as u64,
            reps: cfg.reps,
            median_ns: median,
            spread_ns: spread,
            ratio: None,
            verdict: verdict.into(),
        });
    }
    report.fit_slopes();
    report
}

/// Grows a g-base by random braid moves until its serialized form carries
/// at least `target_links` links.
fn random_gbase_with_links(rng: &mut ChaCha8Rng, n: usize, target_links: usize) -> GBase {
    assert!(n >= 2);
    let mut gbase = SyntacticGBase::standard(n).expect("n is positive");
    while gbase.total_letters() + n + 1 < target_links {
        let index = rng.random_range(1..n);
        let sign = if rng.random::<bool>() { Sign::Plus } else { Sign::Minus };
        gbase = gbase.braid_move(index, sign).expect("index drawn in range");
    }
    let paths = gbase
        .elements()
        .iter()
        .map(|w| syntactic_to_path(w).expect("g-base elements are encodable"))
        .collect();
    GBase::new(paths).expect("braid images form a g-base")
}

/// Measures `multiply` over pairs of list-length targets, fitting the
/// slope against the product of the two serialized lengths, plus the
/// degenerate identity-times-G series against the length of G.
pub fn bench_multiply(n: usize, length_pairs: &[(usize, usize)], cfg: &BenchConfig) -> BenchReport {
    let mut rng = rng_from_seed(cfg.seed);
    let mut report = BenchReport::default();
    let identity = GBase::standard(n).expect("n is positive");
    for &(l1, l2) in length_pairs {
        let left = random_gbase_with_links(&mut rng, n, l1);
        let right = random_gbase_with_links(&mut rng, n, l2);
        let verdict = match multiply(&left, &right) {
            Ok(_) => "ok",
            Err(_) => "error",
        };
        let size = (left.total_links() as u64) * (right.total_links() as u64);
        let (median, spread) = measure(cfg.reps, || {
            std::hint::black_box(multiply(std::hint::black_box(&left), std::hint::black_box(&right)).unwrap());
        });
        report.rows.push(BenchRow {
            op: "multiply".into(),
            n,
            size,
            reps: cfg.reps,
            median_ns: median,
            spread_ns: spread,
            ratio: None,
            verdict: verdict.into(),
        });

        let (median, spread) = measure(cfg.reps, || {
            std::hint::black_box(multiply(std::hint::black_box(&identity), std::hint::black_box(&right)).unwrap());
        });
        report.rows.push(BenchRow {
            op: "multiply_identity".into(),
            n,
            size: right.total_links() as u64,
            reps: cfg.reps,
            median_ns: median,
            spread_ns: spread,
            ratio: None,
            verdict: verdict.into(),
        });
    }
    report.fit_slopes();
    report
}

fn pipelines_agree(word: &BraidWord) -> bool {
    let syn = process_word_syntactic(word);
    let geo = process_word_geometric(word);
    let geo_words: Vec<FGWord> = geo
        .paths()
        .iter()
        .map(|p| path_to_syntactic(p).expect("g-base paths are valid"))
        .collect();
    geo_words == syn.elements()
}

fn all_pipelines_agree(words: &[BraidWord], parallel: bool) -> bool {
    if parallel && words.len() >= 8 {
        let chunk = words.len().div_ceil(4);
        std::thread::scope(|scope| {
            let handles: Vec<_> = words
                .chunks(chunk)
                .map(|c| scope.spawn(move || c.iter().all(pipelines_agree)))
                .collect();
            handles.into_iter().all(|h| h.join().expect("checker thread panicked"))
        })
    } else {
        words.iter().all(pipelines_agree)
    }
}

/// Runs the same random words through both pipelines, timing each and
/// reporting the per-length median ratio geometric over syntactic. The
/// agreement of the two outputs rides along as the verdict column.
pub fn bench_wordproblem(
    n: usize,
    lengths: &[usize],
    words_per_length: usize,
    cfg: &BenchConfig,
) -> BenchReport {
    let mut rng = rng_from_seed(cfg.seed);
    let mut report = BenchReport::default();
    for &len in lengths {
        if len == 0 {
            report.rows.push(BenchRow {
                op: "word_problem".into(),
                n,
                size: 0,
                reps: cfg.reps,
                median_ns: 0,
                spread_ns: 0,
                ratio: Some(1.0),
                verdict: "agree".into(),
            });
            continue;
        }
        let words: Vec<BraidWord> = (0..words_per_length.max(1))
            .map(|_| random_braid_word(&mut rng, n, len))
            .collect();
        let verdict =
            if all_pipelines_agree(&words, cfg.parallel_checks) { "agree" } else { "mismatch" };
        let per_word = words.len() as u128;
        let (syn_median, syn_spread) = measure(cfg.reps, || {
            for w in &words {
                std::hint::black_box(process_word_syntactic(std::hint::black_box(w)));
            }
        });
        let (geo_median, _) = measure(cfg.reps, || {
            for w in &words {
                std::hint::black_box(process_word_geometric(std::hint::black_box(w)));
            }
        });
        report.rows.push(BenchRow {
            op: "word_problem".into(),
            n,
            size: len as u64,
            reps: cfg.reps,
            median_ns: syn_median / per_word,
            spread_ns: syn_spread / per_word,
            ratio: Some(geo_median as f64 / syn_median.max(1) as f64),
            verdict: verdict.into(),
        });
    }
    report.fit_slopes();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_slope_recovers_exact_powers() {
        let linear: Vec<(f64, f64)> =
            (1..=6).map(|i| ((1000.0 * 2f64.powi(i)).ln(), (7.0 * 1000.0 * 2f64.powi(i)).ln())).collect();
        assert!((fit_slope(&linear) - 1.0).abs() < 1e-9);
        let quadratic: Vec<(f64, f64)> =
            (1..=6).map(|i| ((10.0 * 2f64.powi(i)).ln(), (100.0 * 4f64.powi(i)).ln())).collect();
        assert!((fit_slope(&quadratic) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn empty_grid_gives_empty_report() {
        let report = bench_multiply(4, &[], &BenchConfig::default());
        assert!(report.rows.is_empty());
        assert!(report.slopes.is_empty());
        assert_eq!(report.to_csv().lines().count(), 1);
    }

    #[test]
    fn zero_length_cases_are_notices() {
        let cfg = BenchConfig { reps: 1, ..BenchConfig::default() };
        let report = bench_codec(4, &[0], &cfg);
        assert_eq!(report.rows.len(), 1);
        assert!(report.rows[0].verdict.starts_with("skipped"));
        let report = bench_wordproblem(4, &[0], 3, &cfg);
        assert_eq!(report.rows[0].ratio, Some(1.0));
        assert_eq!(report.rows[0].verdict, "agree");
    }

    #[test]
    fn csv_has_header_and_stable_columns() {
        let cfg = BenchConfig { reps: 1, ..BenchConfig::default() };
        let report = bench_codec(4, &[9, 17], &cfg);
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "op,n,size,reps,median_ns,spread_ns,ratio,verdict,slope");
        assert_eq!(lines.count(), 4);
        assert!(report.rows.iter().all(|r| r.verdict == "roundtrip-ok"));
    }

    #[test]
    fn verdict_columns_are_seed_deterministic() {
        let cfg = BenchConfig { reps: 1, ..BenchConfig::default() };
        let a = bench_wordproblem(4, &[4, 8], 4, &cfg);
        let b = bench_wordproblem(4, &[4, 8], 4, &cfg);
        assert_eq!(a.csv_verdict_columns(), b.csv_verdict_columns());
        let a = bench_multiply(3, &[(20, 20)], &cfg);
        let b = bench_multiply(3, &[(20, 20)], &cfg);
        assert_eq!(a.csv_verdict_columns(), b.csv_verdict_columns());
    }

    #[test]
    fn parallel_checks_match_sequential() {
        let sequential = BenchConfig { reps: 1, parallel_checks: false, ..BenchConfig::default() };
        let parallel = BenchConfig { reps: 1, parallel_checks: true, ..BenchConfig::default() };
        let a = bench_wordproblem(4, &[6], 12, &sequential);
        let b = bench_wordproblem(4, &[6], 12, &parallel);
        assert_eq!(a.csv_verdict_columns(), b.csv_verdict_columns());
    }

    #[test]
    fn geometric_never_beats_syntactic_by_much() {
        // The geometric pipeline repeats the syntactic work plus codec
        // passes, so the ratio stays above one up to timing noise.
        let cfg = BenchConfig { reps: 3, ..BenchConfig::default() };
        let report = bench_wordproblem(4, &[12], 6, &cfg);
        let ratio = report.rows[0].ratio.unwrap();
        assert!(ratio >= 0.9, "geometric/syntactic ratio {ratio} fell below tolerance");
    }
}
