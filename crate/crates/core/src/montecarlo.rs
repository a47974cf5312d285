//! Seeded power simulation for the chi-square components.
//!
//! Each replication draws `n` values from the alternative, bins them at the
//! null quantiles of the cumulative cell probabilities, and rejects `X²`
//! against the `χ²(k-1)` upper quantile and each `T_l` two-sided against the
//! standard normal. Replication `r` uses ChaCha8 stream `r` under the master
//! seed, and rejections are summed as integers, so results do not depend on
//! the thread count.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Distribution;
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::chisq::{
    decompose, eigenbasis_from_hadamard, eigenbasis_from_latin_hadamard, CellCounts,
    EigenbasisMatrix, ProbabilityVector,
};
use crate::coloring::{SignMatrix, SignedLatinSquare};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DistributionSpec {
    Normal {
        mean: f64,
        sd: f64,
    },
    StudentT {
        df: f64,
    },
    /// Shape/scale parametrisation: mean `shape·scale`.
    Gamma {
        shape: f64,
        scale: f64,
    },
    /// Standard Cauchy, identical in law to `t(1)`.
    Cauchy,
}

impl DistributionSpec {
    pub fn standard_normal() -> Self {
        DistributionSpec::Normal { mean: 0.0, sd: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            DistributionSpec::Normal { mean, sd } => mean.is_finite() && sd > 0.0 && sd.is_finite(),
            DistributionSpec::StudentT { df } => df >= 1.0 && df.is_finite(),
            DistributionSpec::Gamma { shape, scale } => {
                shape > 0.0 && scale > 0.0 && shape.is_finite() && scale.is_finite()
            }
            DistributionSpec::Cauchy => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "invalid distribution parameters: {self}"
            )))
        }
    }

    /// Quantile function at `prob ∈ (0, 1)`.
    pub fn quantile(&self, prob: f64) -> Result<f64> {
        self.validate()?;
        if !(prob > 0.0 && prob < 1.0) {
            return Err(Error::invalid(format!(
                "quantile level {prob} outside (0, 1)"
            )));
        }
        let q = match *self {
            DistributionSpec::Normal { mean, sd } => mean + sd * normal_quantile(prob),
            DistributionSpec::StudentT { df } => statrs::distribution::StudentsT::new(0.0, 1.0, df)
                .map_err(|e| Error::invalid(e.to_string()))?
                .inverse_cdf(prob),
            DistributionSpec::Gamma { shape, scale } => {
                statrs::distribution::Gamma::new(shape, 1.0 / scale)
                    .map_err(|e| Error::invalid(e.to_string()))?
                    .inverse_cdf(prob)
            }
            DistributionSpec::Cauchy => (std::f64::consts::PI * (prob - 0.5)).tan(),
        };
        Ok(q)
    }

    pub fn sampler(&self) -> Result<Sampler> {
        self.validate()?;
        let bad = |e: &dyn fmt::Display| Error::invalid(e.to_string());
        Ok(match *self {
            DistributionSpec::Normal { mean, sd } => {
                Sampler::Normal(rand_distr::Normal::new(mean, sd).map_err(|e| bad(&e))?)
            }
            DistributionSpec::StudentT { df } => {
                Sampler::StudentT(rand_distr::StudentT::new(df).map_err(|e| bad(&e))?)
            }
            DistributionSpec::Gamma { shape, scale } => {
                Sampler::Gamma(rand_distr::Gamma::new(shape, scale).map_err(|e| bad(&e))?)
            }
            DistributionSpec::Cauchy => {
                Sampler::Cauchy(rand_distr::Cauchy::new(0.0, 1.0).map_err(|e| bad(&e))?)
            }
        })
    }
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DistributionSpec::Normal { mean, sd } => write!(f, "normal:{mean},{sd}"),
            DistributionSpec::StudentT { df } => write!(f, "t:{df}"),
            DistributionSpec::Gamma { shape, scale } => write!(f, "gamma:{shape},{scale}"),
            DistributionSpec::Cauchy => write!(f, "cauchy"),
        }
    }
}

/// Parses a real, also accepting a simple fraction `a/b`.
fn parse_real(s: &str) -> Result<f64> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((a, b)) => a
            .trim()
            .parse::<f64>()
            .ok()
            .zip(b.trim().parse::<f64>().ok())
            .map(|(a, b)| a / b),
        None => s.parse::<f64>().ok(),
    };
    parsed
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::invalid(format!("not a number: {s:?}")))
}

impl FromStr for DistributionSpec {
    type Err = Error;

    /// `normal:MEAN,SD`, `t:DF`, `gamma:SHAPE,SCALE`, `cauchy`.
    fn from_str(s: &str) -> Result<Self> {
        let (family, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<f64> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',').map(parse_real).collect::<Result<_>>()?
        };
        let spec = match (family.trim().to_ascii_lowercase().as_str(), args.as_slice()) {
            ("normal" | "n", &[mean, sd]) => DistributionSpec::Normal { mean, sd },
            ("t" | "student_t", &[df]) => DistributionSpec::StudentT { df },
            ("gamma", &[shape, scale]) => DistributionSpec::Gamma { shape, scale },
            ("cauchy", &[]) => DistributionSpec::Cauchy,
            _ => {
                return Err(Error::invalid(format!(
                    "cannot parse distribution {s:?}; expected normal:MEAN,SD, t:DF, gamma:SHAPE,SCALE or cauchy"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Draws variates for a [`DistributionSpec`].
#[derive(Debug, Clone, Copy)]
pub enum Sampler {
    Normal(rand_distr::Normal<f64>),
    StudentT(rand_distr::StudentT<f64>),
    Gamma(rand_distr::Gamma<f64>),
    Cauchy(rand_distr::Cauchy<f64>),
}

impl Distribution<f64> for Sampler {
    fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Sampler::Normal(d) => d.sample(rng),
            Sampler::StudentT(d) => d.sample(rng),
            Sampler::Gamma(d) => d.sample(rng),
            Sampler::Cauchy(d) => d.sample(rng),
        }
    }
}

/// Normal with the gamma's mean `shape·scale` and sd `sqrt(shape)·scale`.
pub fn matched_normal_null(g: &DistributionSpec) -> Result<DistributionSpec> {
    match *g {
        DistributionSpec::Gamma { shape, scale } => {
            g.validate()?;
            Ok(DistributionSpec::Normal {
                mean: shape * scale,
                sd: shape.sqrt() * scale,
            })
        }
        other => Err(Error::invalid(format!(
            "matched normal null needs a gamma distribution, got {other}"
        ))),
    }
}

/// Standard normal quantile, Wichura's AS241 (PPND16), relative accuracy about 1e-16.
#[allow(clippy::excessive_precision)]
pub fn normal_quantile(p: f64) -> f64 {
    const A: [f64; 8] = [
        3.387_132_872_796_366_608,
        133.141_667_891_784_377_45,
        1_971.590_950_306_551_442_7,
        13_731.693_765_509_461_125,
        45_921.953_931_549_871_457,
        67_265.770_927_008_700_853,
        33_430.575_583_588_128_105,
        2_509.080_928_730_122_672_7,
    ];
    const B: [f64; 8] = [
        1.0,
        42.313_330_701_600_911_252,
        687.187_007_492_057_908_3,
        5_394.196_021_424_751_107_7,
        21_213.794_301_586_595_867,
        39_307.895_800_092_710_61,
        28_729.085_735_721_942_674,
        5_226.495_278_852_854_561,
    ];
    const C: [f64; 8] = [
        1.423_437_110_749_683_577_34,
        4.630_337_846_156_545_295_9,
        5.769_497_221_460_691_405_5,
        3.647_848_324_763_204_605_04,
        1.270_458_252_452_368_382_58,
        0.241_780_725_177_450_611_77,
        0.022_723_844_989_269_184_583_3,
        7.745_450_142_783_414_076_4e-4,
    ];
    const D: [f64; 8] = [
        1.0,
        2.053_191_626_637_758_821_87,
        1.676_384_830_183_803_849_4,
        0.689_767_334_985_100_004_55,
        0.148_103_976_427_480_074_59,
        0.015_198_666_563_616_457_196_6,
        5.475_938_084_995_344_946e-4,
        1.050_750_071_644_416_843_24e-9,
    ];
    const E: [f64; 8] = [
        6.657_904_643_501_103_777_2,
        5.463_784_911_164_114_369_9,
        1.784_826_539_917_291_335_8,
        0.296_560_571_828_504_891_23,
        0.026_532_189_526_576_123_093,
        0.001_242_660_947_388_078_438_6,
        2.711_555_568_743_487_578_15e-5,
        2.010_334_399_292_288_132_65e-7,
    ];
    const F: [f64; 8] = [
        1.0,
        0.599_832_206_555_887_937_69,
        0.136_929_880_922_735_805_31,
        0.014_875_361_290_850_614_852_5,
        7.868_691_311_456_132_591e-4,
        1.846_318_317_510_054_681_8e-5,
        1.421_511_758_316_445_888_7e-7,
        2.044_263_103_389_939_785_64e-15,
    ];
    fn ratio(num: &[f64; 8], den: &[f64; 8], r: f64) -> f64 {
        let poly = |c: &[f64; 8]| c.iter().rev().fold(0.0, |acc, &v| acc * r + v);
        poly(num) / poly(den)
    }

    if p.is_nan() {
        return f64::NAN;
    }
    if p <= 0.0 {
        return f64::NEG_INFINITY;
    }
    if p >= 1.0 {
        return f64::INFINITY;
    }
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * ratio(&A, &B, r);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let val = if r <= 5.0 {
        ratio(&C, &D, r - 1.6)
    } else {
        ratio(&E, &F, r - 5.0)
    };
    if q < 0.0 {
        -val
    } else {
        val
    }
}

/// Upper `alpha` point of `χ²(df)`.
pub fn chi_square_critical(df: usize, alpha: f64) -> Result<f64> {
    let d = ChiSquared::new(df as f64).map_err(|e| Error::invalid(e.to_string()))?;
    Ok(d.inverse_cdf(1.0 - alpha))
}

/// Multinomial probability presets for eight cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// `∝ (1,1,1,1,1,1,1,1)`
    A,
    /// `∝ (1,2,3,4,4,3,2,1)`
    B,
    /// `∝ (1,2,3,4,1,2,3,4)`
    C,
}

impl Preset {
    pub fn weights(self) -> [f64; 8] {
        match self {
            Preset::A => [1.0; 8],
            Preset::B => [1.0, 2.0, 3.0, 4.0, 4.0, 3.0, 2.0, 1.0],
            Preset::C => [1.0, 2.0, 3.0, 4.0, 1.0, 2.0, 3.0, 4.0],
        }
    }

    pub fn probabilities(self) -> ProbabilityVector {
        ProbabilityVector::from_weights(&self.weights()).expect("preset weights are positive")
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Preset::A),
            "b" => Ok(Preset::B),
            "c" => Ok(Preset::C),
            _ => Err(Error::invalid(format!(
                "unknown preset {s:?}; expected a, b or c"
            ))),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Preset::A => 'a',
            Preset::B => 'b',
            Preset::C => 'c',
        };
        write!(f, "{c}")
    }
}

/// Cell boundaries on the real line for a null distribution.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinningScheme {
    edges: Vec<f64>,
    p: ProbabilityVector,
}

impl BinningScheme {
    pub fn k(&self) -> usize {
        self.p.len()
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn probabilities(&self) -> &ProbabilityVector {
        &self.p
    }

    /// 0-based cell of `x`; cell `j` covers `(edge_{j-1}, edge_j]`.
    pub fn cell(&self, x: f64) -> usize {
        self.edges.partition_point(|&e| e < x)
    }

    pub fn counts(&self, xs: impl IntoIterator<Item = f64>) -> Vec<u64> {
        let mut m = vec![0u64; self.k()];
        for x in xs {
            m[self.cell(x)] += 1;
        }
        m
    }
}

/// `edge_j = Q_null(p_1 + .. + p_j)` for `j = 1..k-1`.
pub fn bin_edges(null: &DistributionSpec, p: &ProbabilityVector) -> Result<BinningScheme> {
    let k = p.len();
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    let mut cum = 0.0;
    for (j, &pj) in p.as_slice()[..k - 1].iter().enumerate() {
        cum += pj;
        if cum >= 1.0 {
            return Err(Error::invalid(format!(
                "cumulative probability reaches 1 at edge {}",
                j + 1
            )));
        }
        edges.push(null.quantile(cum)?);
    }
    if edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("bin edges are not strictly increasing"));
    }
    Ok(BinningScheme {
        edges,
        p: p.clone(),
    })
}

/// Sign pattern that yields the eigenbasis for a given `p`.
#[derive(Debug, Clone, PartialEq)]
pub enum BasisSource {
    LatinHadamard(SignedLatinSquare),
    /// Normalized Hadamard sign matrix; equiprobable `p` only.
    Hadamard(SignMatrix),
}

impl BasisSource {
    pub fn eigenbasis(&self, p: &ProbabilityVector) -> Result<EigenbasisMatrix> {
        match self {
            BasisSource::LatinHadamard(h) => eigenbasis_from_latin_hadamard(h, p),
            BasisSource::Hadamard(s) => eigenbasis_from_hadamard(s, p),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PowerSimConfig {
    pub null: DistributionSpec,
    pub alternative: DistributionSpec,
    pub p: ProbabilityVector,
    pub n: usize,
    pub reps: u64,
    pub alpha: f64,
    pub master_seed: u64,
    pub basis: BasisSource,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl PowerSimConfig {
    pub fn validate(&self) -> Result<()> {
        self.null.validate()?;
        self.alternative.validate()?;
        if self.reps == 0 {
            return Err(Error::invalid("reps must be at least 1"));
        }
        if self.n == 0 {
            return Err(Error::invalid("sample size must be at least 1"));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::invalid(format!(
                "alpha = {} outside (0, 1)",
                self.alpha
            )));
        }
        if self.threads == Some(0) {
            return Err(Error::invalid("threads must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatisticRate {
    pub statistic: String,
    pub rejections: u64,
    pub rate: f64,
    pub se: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerSimEcho {
    pub null: DistributionSpec,
    pub alternative: DistributionSpec,
    pub p: Vec<f64>,
    pub n: usize,
    pub reps: u64,
    pub alpha: f64,
    pub master_seed: u64,
    pub chi_square_critical: f64,
    pub normal_critical: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerSimResult {
    /// `X2` first, then `T2..Tk`.
    pub rates: Vec<StatisticRate>,
    pub config: PowerSimEcho,
}

impl PowerSimResult {
    pub fn rate(&self, statistic: &str) -> Option<f64> {
        self.rates
            .iter()
            .find(|r| r.statistic == statistic)
            .map(|r| r.rate)
    }
}

/// Rejection counts of one replication: index 0 is `X²`, `l-1` is `T_l`.
fn replicate(
    rep: u64,
    cfg: &PowerSimConfig,
    sampler: &Sampler,
    bins: &BinningScheme,
    o: &EigenbasisMatrix,
    chi_crit: f64,
    z_crit: f64,
) -> Result<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.master_seed);
    rng.set_stream(rep);
    let m = bins.counts((0..cfg.n).map(|_| sampler.sample(&mut rng)));
    let d = decompose(&CellCounts::new(m), &cfg.p, o)?;
    let mut hits = Vec::with_capacity(d.components.len() + 1);
    hits.push(u64::from(d.x2 > chi_crit));
    hits.extend(d.components.iter().map(|t| u64::from(t.abs() > z_crit)));
    Ok(hits)
}

pub fn simulate_power(cfg: &PowerSimConfig) -> Result<PowerSimResult> {
    cfg.validate()?;
    let k = cfg.p.len();
    let bins = bin_edges(&cfg.null, &cfg.p)?;
    let o = cfg.basis.eigenbasis(&cfg.p)?;
    let sampler = cfg.alternative.sampler()?;
    let chi_crit = chi_square_critical(k - 1, cfg.alpha)?;
    let z_crit = normal_quantile(1.0 - cfg.alpha / 2.0);

    let run = || {
        (0..cfg.reps)
            .into_par_iter()
            .map(|rep| replicate(rep, cfg, &sampler, &bins, &o, chi_crit, z_crit))
            .try_reduce(
                || vec![0u64; k],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    Ok(a)
                },
            )
    };
    let totals = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::internal(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };

    let reps = cfg.reps as f64;
    let rates = totals
        .iter()
        .enumerate()
        .map(|(idx, &hits)| {
            let rate = hits as f64 / reps;
            StatisticRate {
                statistic: if idx == 0 {
                    "X2".to_string()
                } else {
                    format!("T{}", idx + 1)
                },
                rejections: hits,
                rate,
                se: (rate * (1.0 - rate) / reps).sqrt(),
            }
        })
        .collect();
    Ok(PowerSimResult {
        rates,
        config: PowerSimEcho {
            null: cfg.null,
            alternative: cfg.alternative,
            p: cfg.p.as_slice().to_vec(),
            n: cfg.n,
            reps: cfg.reps,
            alpha: cfg.alpha,
            master_seed: cfg.master_seed,
            chi_square_critical: chi_crit,
            normal_critical: z_crit,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::distribution::Normal;

    #[test]
    fn parse_specs() {
        assert_eq!(
            "normal:0,1.3".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::Normal { mean: 0.0, sd: 1.3 }
        );
        assert_eq!(
            "t:2".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::StudentT { df: 2.0 }
        );
        assert_eq!(
            "gamma:5,1/5".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::Gamma {
                shape: 5.0,
                scale: 0.2
            }
        );
        assert_eq!(
            "cauchy".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::Cauchy
        );
        for bad in [
            "normal:0,-1",
            "t:0.5",
            "gamma:5",
            "beta:1,2",
            "normal:x,1",
            "t:1/0",
        ] {
            assert!(bad.parse::<DistributionSpec>().is_err(), "{bad}");
        }
        let spec = DistributionSpec::Gamma {
            shape: 5.0,
            scale: 0.2,
        };
        assert_eq!(spec.to_string().parse::<DistributionSpec>().unwrap(), spec);
    }

    #[test]
    fn quantile_against_statrs() {
        let oracle = Normal::new(0.0, 1.0).unwrap();
        for i in 1..2000 {
            let p = i as f64 / 2000.0;
            assert!(
                (normal_quantile(p) - oracle.inverse_cdf(p)).abs() < 1e-9,
                "p={p}"
            );
        }
        for &p in &[1e-10, 1e-6, 0.001, 0.999, 1.0 - 1e-6] {
            assert!(
                (normal_quantile(p) - oracle.inverse_cdf(p)).abs() < 1e-9,
                "p={p}"
            );
        }
        assert_eq!(normal_quantile(0.5), 0.0);
    }

    #[test]
    fn critical_values() {
        let chi = chi_square_critical(7, 0.05).unwrap();
        assert!((chi - 14.0671).abs() < 5e-5);
        assert!((normal_quantile(0.975) - 1.95996).abs() < 5e-6);
    }

    #[test]
    fn matched_null() {
        let n = matched_normal_null(&DistributionSpec::Gamma {
            shape: 5.0,
            scale: 0.2,
        })
        .unwrap();
        let DistributionSpec::Normal { mean, sd } = n else {
            panic!()
        };
        assert!((mean - 1.0).abs() < 1e-15);
        assert!((sd - 5f64.sqrt() / 5.0).abs() < 1e-15);
        assert_eq!(
            matched_normal_null(&DistributionSpec::Gamma {
                shape: 10.0,
                scale: 1.0
            })
            .unwrap(),
            DistributionSpec::Normal {
                mean: 10.0,
                sd: 10f64.sqrt()
            }
        );
        assert_eq!(
            matched_normal_null(&DistributionSpec::Gamma {
                shape: 1.0,
                scale: 1.0
            })
            .unwrap(),
            DistributionSpec::Normal { mean: 1.0, sd: 1.0 }
        );
        assert!(matched_normal_null(&DistributionSpec::Cauchy).is_err());
    }

    #[test]
    fn edges_for_presets() {
        let z = DistributionSpec::standard_normal();
        let a = bin_edges(&z, &Preset::A.probabilities()).unwrap();
        assert_eq!(a.edges().len(), 7);
        assert!(a.edges()[3].abs() < 1e-15);
        assert!((a.edges()[0] + 1.15035).abs() < 5e-6);
        let b = bin_edges(&z, &Preset::B.probabilities()).unwrap();
        assert!(b.edges()[3].abs() < 1e-12);
        assert_eq!(a.cell(-10.0), 0);
        assert_eq!(a.cell(0.0), 3);
        assert_eq!(a.cell(10.0), 7);
    }

    #[test]
    fn cauchy_quantile_matches_t1() {
        let t1 = DistributionSpec::StudentT { df: 1.0 };
        for &p in &[0.1, 0.3, 0.5, 0.9] {
            let a = DistributionSpec::Cauchy.quantile(p).unwrap();
            let b = t1.quantile(p).unwrap();
            assert!((a - b).abs() < 1e-8);
        }
    }

    fn draws(spec: DistributionSpec, count: usize) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = spec.sampler().unwrap();
        (0..count).map(|_| s.sample(&mut rng)).collect()
    }

    #[test]
    fn sampler_moments() {
        let n = 1_000_000;
        let z = draws(DistributionSpec::standard_normal(), n);
        assert!((z.iter().sum::<f64>() / n as f64).abs() < 0.004);
        let g = draws(
            DistributionSpec::Gamma {
                shape: 5.0,
                scale: 0.2,
            },
            n,
        );
        assert!((g.iter().sum::<f64>() / n as f64 - 1.0).abs() < 0.002);
        let mut c = draws(DistributionSpec::StudentT { df: 1.0 }, n);
        c.sort_by(|a, b| a.total_cmp(b));
        assert!(c[n / 2].abs() < 0.005);
    }

    fn small_cfg(threads: Option<usize>) -> PowerSimConfig {
        PowerSimConfig {
            null: DistributionSpec::standard_normal(),
            alternative: DistributionSpec::Normal { mean: 0.0, sd: 1.3 },
            p: Preset::A.probabilities(),
            n: 200,
            reps: 400,
            alpha: 0.05,
            master_seed: 11,
            basis: BasisSource::LatinHadamard(crate::reference::latin_hadamard_8x8(0).unwrap()),
            threads,
        }
    }

    #[test]
    fn deterministic_across_threads() {
        let a = simulate_power(&small_cfg(Some(1))).unwrap();
        let b = simulate_power(&small_cfg(Some(4))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rates.len(), 8);
        assert_eq!(a.rates[0].statistic, "X2");
        assert_eq!(a.rates[7].statistic, "T8");
    }

    #[test]
    fn config_validation() {
        let mut cfg = small_cfg(None);
        cfg.reps = 0;
        assert!(simulate_power(&cfg).is_err());
        let mut cfg = small_cfg(None);
        cfg.alpha = 1.0;
        assert!(simulate_power(&cfg).is_err());
        let mut cfg = small_cfg(Some(0));
        cfg.threads = Some(0);
        assert!(simulate_power(&cfg).is_err());
    }
}
