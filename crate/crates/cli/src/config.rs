//! Run configuration: CLI flags layered over an optional JSON file, with the
//! `HOMSTRUCT_SEED` environment variable as the default-seed override.

use homstruct_core::sample::{MetricCase, ALL_CASES};
use serde::Deserialize;

use crate::report::ConfigEcho;

#[derive(Clone, Debug)]
pub struct Config {
    pub cases: Vec<MetricCase>,
    pub samples_per_case: usize,
    pub identity_sample_count: usize,
    pub seed: u64,
    pub perfect_square_only: bool,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub cases: Option<Vec<String>>,
    pub samples_per_case: Option<usize>,
    pub identity_sample_count: Option<usize>,
    pub seed: Option<u64>,
    pub perfect_square_only: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct ConfigOverrides {
    pub cases: Vec<String>,
    pub samples_per_case: Option<usize>,
    pub identity_sample_count: Option<usize>,
    pub seed: Option<u64>,
    pub perfect_square_only: Option<bool>,
    pub unsafe_low_samples: bool,
}

impl Config {
    /// File values first, CLI flags override, environment seeds the default.
    pub fn resolve(file: Option<ConfigFile>, cli: ConfigOverrides) -> Result<Config, String> {
        let file = file.unwrap_or_default();
        let env_seed = std::env::var("HOMSTRUCT_SEED")
            .ok()
            .map(|s| s.parse::<u64>().map_err(|_| format!("HOMSTRUCT_SEED `{s}` is not a u64")))
            .transpose()?;
        let case_names: Vec<String> = if !cli.cases.is_empty() {
            cli.cases
        } else if let Some(cs) = file.cases {
            cs
        } else {
            ALL_CASES.iter().map(|c| c.name().to_string()).collect()
        };
        let mut cases = Vec::new();
        for name in &case_names {
            let c = MetricCase::parse(name)?;
            if !cases.contains(&c) {
                cases.push(c);
            }
        }
        let samples_per_case = cli.samples_per_case.or(file.samples_per_case).unwrap_or(8);
        if samples_per_case < 1 {
            return Err("samples per case must be at least 1".into());
        }
        let identity_sample_count = cli
            .identity_sample_count
            .or(file.identity_sample_count)
            .unwrap_or(16);
        if identity_sample_count < 16 && !cli.unsafe_low_samples {
            return Err(
                "identity sample count below 16 weakens the identity checks; pass --unsafe-low-samples to allow"
                    .into(),
            );
        }
        if identity_sample_count < 1 {
            return Err("identity sample count must be at least 1".into());
        }
        let seed = cli.seed.or(file.seed).or(env_seed).unwrap_or(42);
        let perfect_square_only = cli
            .perfect_square_only
            .or(file.perfect_square_only)
            .unwrap_or(false);
        Ok(Config {
            cases,
            samples_per_case,
            identity_sample_count,
            seed,
            perfect_square_only,
        })
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            cases: self.cases.iter().map(|c| c.name().to_string()).collect(),
            samples_per_case: self.samples_per_case,
            identity_sample_count: self.identity_sample_count,
            seed: self.seed,
            perfect_square_only: self.perfect_square_only,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        let cfg = Config::resolve(None, ConfigOverrides::default()).unwrap();
        assert_eq!(cfg.samples_per_case, 8);
        assert_eq!(cfg.identity_sample_count, 16);
        assert_eq!(cfg.cases.len(), 5);

        let file = ConfigFile {
            seed: Some(7),
            samples_per_case: Some(3),
            ..Default::default()
        };
        let cli = ConfigOverrides {
            samples_per_case: Some(5),
            ..Default::default()
        };
        let cfg = Config::resolve(Some(file), cli).unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.samples_per_case, 5);
    }

    #[test]
    fn low_identity_samples_need_the_unsafe_flag() {
        let cli = ConfigOverrides {
            identity_sample_count: Some(4),
            ..Default::default()
        };
        assert!(Config::resolve(None, cli).is_err());
        let cli = ConfigOverrides {
            identity_sample_count: Some(4),
            unsafe_low_samples: true,
            ..Default::default()
        };
        assert_eq!(Config::resolve(None, cli).unwrap().identity_sample_count, 4);
    }

    #[test]
    fn zero_samples_rejected() {
        let cli = ConfigOverrides {
            samples_per_case: Some(0),
            ..Default::default()
        };
        assert!(Config::resolve(None, cli).is_err());
    }

    #[test]
    fn unknown_case_rejected() {
        let cli = ConfigOverrides {
            cases: vec!["euclidean".into()],
            ..Default::default()
        };
        assert!(Config::resolve(None, cli).is_err());
    }
}
