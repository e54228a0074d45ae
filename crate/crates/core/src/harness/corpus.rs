use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph, generate, random_graph};

/// A corpus graph with a stable display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// Which graphs the verification run covers. Ranges are inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub paths: (usize, usize),
    pub cycles: (usize, usize),
    pub complete: (usize, usize),
    pub stars: (usize, usize),
    /// Number of random (G1, G2) pairs; each is verified in both orders.
    pub random_trials: usize,
    pub max_random_n: usize,
    pub max_random_m: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            paths: (1, 8),
            cycles: (3, 8),
            complete: (1, 5),
            stars: (2, 6),
            random_trials: 200,
            max_random_n: 12,
            max_random_m: 66,
            seed: 42,
        }
    }
}

impl CorpusConfig {
    pub fn validate(&self) -> Result<()> {
        let families = [
            (Family::Path, self.paths),
            (Family::Cycle, self.cycles),
            (Family::Complete, self.complete),
            (Family::Star, self.stars),
        ];
        for (family, (lo, hi)) in families {
            if lo > hi {
                return Err(Error::Domain(format!("empty {family} range {lo}..={hi}")));
            }
            if lo < family.min_n() {
                return Err(Error::Domain(format!(
                    "{family} range starts at {lo}, minimum is {}",
                    family.min_n()
                )));
            }
        }
        if self.random_trials == 0 {
            return Err(Error::Domain("random trial count must be at least 1".into()));
        }
        if self.max_random_n == 0 {
            return Err(Error::Domain("max random n must be at least 1".into()));
        }
        Ok(())
    }

    /// Family graphs in the order paths, cycles, complete graphs, stars.
    pub fn family_graphs(&self) -> Result<Vec<NamedGraph>> {
        let mut out = Vec::new();
        let families = [
            (Family::Path, self.paths),
            (Family::Cycle, self.cycles),
            (Family::Complete, self.complete),
            (Family::Star, self.stars),
        ];
        for (family, (lo, hi)) in families {
            for n in lo..=hi {
                out.push(NamedGraph {
                    name: family.label(n),
                    graph: generate(family, n)?,
                });
            }
        }
        Ok(out)
    }

    /// The seeded random pairs, one per trial. Pure in the config.
    pub fn random_pairs(&self) -> Result<Vec<(NamedGraph, NamedGraph)>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut draw = |trial: usize, side: char| -> Result<NamedGraph> {
            let n = rng.random_range(1..=self.max_random_n);
            let m = rng.random_range(0..=self.max_random_m.min(n * (n - 1) / 2));
            let seed = rng.random::<u64>();
            Ok(NamedGraph {
                name: format!("R{trial}{side}(n={n},m={m})"),
                graph: random_graph(n, m, seed)?,
            })
        };
        (0..self.random_trials)
            .map(|trial| Ok((draw(trial, 'a')?, draw(trial, 'b')?)))
            .collect()
    }

    /// Every ordered pair of family graphs, then each random pair in both orders.
    pub fn pairs(&self) -> Result<Vec<(NamedGraph, NamedGraph)>> {
        self.validate()?;
        let families = self.family_graphs()?;
        let mut pairs = Vec::with_capacity(families.len().pow(2) + 2 * self.random_trials);
        for a in &families {
            for b in &families {
                pairs.push((a.clone(), b.clone()));
            }
        }
        for (a, b) in self.random_pairs()? {
            pairs.push((b.clone(), a.clone()));
            pairs.push((a, b));
        }
        Ok(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_shape() {
        let config = CorpusConfig::default();
        assert_eq!(config.family_graphs().unwrap().len(), 8 + 6 + 5 + 5);
        assert_eq!(config.pairs().unwrap().len(), 24 * 24 + 400);
    }

    #[test]
    fn random_pairs_are_reproducible() {
        let config = CorpusConfig::default();
        assert_eq!(config.random_pairs().unwrap(), config.random_pairs().unwrap());
        let other = CorpusConfig { seed: 7, ..CorpusConfig::default() };
        assert_ne!(config.random_pairs().unwrap(), other.random_pairs().unwrap());
        for (a, b) in config.random_pairs().unwrap() {
            assert!(a.graph.n() <= 12 && b.graph.n() <= 12);
        }
    }

    #[test]
    fn invalid_configs() {
        let bad = [
            CorpusConfig { cycles: (2, 5), ..Default::default() },
            CorpusConfig { paths: (5, 4), ..Default::default() },
            CorpusConfig { random_trials: 0, ..Default::default() },
            CorpusConfig { max_random_n: 0, ..Default::default() },
        ];
        for config in bad {
            assert!(config.validate().is_err(), "{config:?}");
        }
    }

    #[test]
    fn partial_json_uses_defaults() {
        let config: CorpusConfig = serde_json::from_str(r#"{"random_trials": 3, "seed": 9}"#).unwrap();
        assert_eq!(config.random_trials, 3);
        assert_eq!(config.paths, (1, 8));
        assert!(serde_json::from_str::<CorpusConfig>(r#"{"bogus": 1}"#).is_err());
    }
}
