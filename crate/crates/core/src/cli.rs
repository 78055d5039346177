//! The `winners` command line: parse a ballot file, run one method, print
//! the winners and optionally write a certificate.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::ballots::{
    borda_scores, condorcet_winner, margin_graph, parse_profile, plurality_scores, top_scorers,
    MarginGraph, ProfileError,
};
use crate::certificate::{river_dot, CertificateRecord, DiagramRecord};
use crate::graph::{DescendingOrdering, OrderingError};
use crate::oracle::{put_winners_bruteforce, DEFAULT_CAP};
use crate::putcheck::river_put_winners;
use crate::river::river_fast;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Condorcet,
    Plurality,
    Borda,
    River,
    RiverPut,
    Oracle,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Tiebreak for plain River: `lex`, or `shuffle:SEED` to shuffle each
/// equal-margin group with a seeded RNG.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tiebreak {
    Lex,
    Shuffle(u64),
}

impl FromStr for Tiebreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            None if s == "lex" => Ok(Tiebreak::Lex),
            Some(("shuffle", seed)) => seed
                .parse()
                .map(Tiebreak::Shuffle)
                .map_err(|_| format!("invalid shuffle seed {seed:?}")),
            _ => Err(format!("expected `lex` or `shuffle:SEED`, got {s:?}")),
        }
    }
}

impl fmt::Display for Tiebreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tiebreak::Lex => write!(f, "lex"),
            Tiebreak::Shuffle(seed) => write!(f, "shuffle:{seed}"),
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "winners", version, about = "Compute election winners from a ballot file")]
pub struct RunConfig {
    /// Ballot file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "river-put")]
    pub method: Method,
    /// Shorthand for `--method oracle`.
    #[arg(long, conflicts_with = "method")]
    pub oracle: bool,
    /// `lex` or `shuffle:SEED`; only valid with `--method river`.
    #[arg(long)]
    pub tiebreak: Option<Tiebreak>,
    /// Write the River diagram(s) here; `.dot` selects DOT, anything else JSON.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Return a Condorcet winner without checking the other alternatives.
    #[arg(long)]
    pub condorcet_shortcut: bool,
    /// Maximum number of tiebreak orderings the oracle may enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub oracle_cap: u64,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, method: Method) -> Self {
        RunConfig {
            input: input.into(),
            method,
            oracle: false,
            tiebreak: None,
            certificate: None,
            format: Format::Text,
            condorcet_shortcut: false,
            oracle_cap: DEFAULT_CAP,
        }
    }

    pub fn effective_method(&self) -> Method {
        if self.oracle {
            Method::Oracle
        } else {
            self.method
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(#[from] ProfileError),
    #[error("oracle: {0}")]
    OracleCap(#[from] OrderingError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Read { .. } | CliError::Parse(_) => 2,
            CliError::OracleCap(_) => 3,
        }
    }
}

struct Outcome {
    winners: Vec<usize>,
    extra: Vec<(&'static str, Value)>,
    certificate: Option<Certificate>,
}

enum Certificate {
    Json(Value),
    Dot(String),
}

/// Runs one configuration and returns what goes to stdout.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let method = config.effective_method();
    if config.tiebreak.is_some() && method != Method::River {
        return Err(CliError::Usage("--tiebreak only applies to --method river".into()));
    }
    if config.certificate.is_some() && !matches!(method, Method::River | Method::RiverPut) {
        return Err(CliError::Usage(
            "--certificate requires --method river or river-put".into(),
        ));
    }
    let dot = config
        .certificate
        .as_ref()
        .is_some_and(|p| p.extension().is_some_and(|ext| ext == "dot"));

    let text = std::fs::read_to_string(&config.input).map_err(|source| CliError::Read {
        path: config.input.clone(),
        source,
    })?;
    let profile = parse_profile(&text)?;
    let labels = profile.labels();
    let scores_value = |scores: &[u64]| -> Value {
        labels
            .iter()
            .zip(scores)
            .map(|(l, &s)| (l.clone(), json!(s)))
            .collect::<serde_json::Map<_, _>>()
            .into()
    };

    let outcome = match method {
        Method::Condorcet => Outcome {
            winners: condorcet_winner(&margin_graph(&profile)).into_iter().collect(),
            extra: Vec::new(),
            certificate: None,
        },
        Method::Plurality | Method::Borda => {
            let scores = if method == Method::Plurality {
                plurality_scores(&profile)
            } else {
                borda_scores(&profile)
            };
            Outcome {
                winners: top_scorers(&scores),
                extra: vec![("scores", scores_value(&scores))],
                certificate: None,
            }
        }
        Method::River => {
            let g = margin_graph(&profile);
            let tiebreak = config.tiebreak.unwrap_or(Tiebreak::Lex);
            let ordering = match tiebreak {
                Tiebreak::Lex => DescendingOrdering::lex(g.graph()),
                Tiebreak::Shuffle(seed) => DescendingOrdering::seeded_shuffle(g.graph(), seed),
            };
            let d = river_fast(&g, &ordering).expect("generated orderings are valid");
            let certificate = config.certificate.as_ref().map(|_| {
                if dot {
                    Certificate::Dot(river_dot(&d, &labels))
                } else {
                    Certificate::Json(json!(DiagramRecord::from_river(&d, &labels)))
                }
            });
            Outcome {
                winners: vec![d.root()],
                extra: vec![("tiebreak", json!(tiebreak.to_string()))],
                certificate,
            }
        }
        Method::RiverPut => {
            let g = margin_graph(&profile);
            let put = river_put_winners(&g, config.condorcet_shortcut);
            let certificate = config.certificate.as_ref().map(|_| put_certificate(&g, &put, dot));
            Outcome {
                winners: put.winners,
                extra: vec![("condorcet_shortcut", json!(put.condorcet_shortcut))],
                certificate,
            }
        }
        Method::Oracle => {
            let g = margin_graph(&profile);
            let report = put_winners_bruteforce(&g, config.oracle_cap)?;
            Outcome {
                winners: report.winners.into_iter().collect(),
                extra: vec![("orderings", json!(report.ordering_count))],
                certificate: None,
            }
        }
    };

    if let (Some(path), Some(cert)) = (&config.certificate, &outcome.certificate) {
        let body = match cert {
            Certificate::Json(v) => serde_json::to_string_pretty(v).expect("json serializes") + "\n",
            Certificate::Dot(s) => s.clone(),
        };
        std::fs::write(path, body)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }

    let mut names: Vec<&str> = outcome.winners.iter().map(|&w| labels[w].as_str()).collect();
    names.sort_unstable();
    Ok(match config.format {
        Format::Text if names.is_empty() => "(none)\n".to_string(),
        Format::Text => format!("{}\n", names.join(", ")),
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("method".into(), json!(method_name(method)));
            obj.insert("winners".into(), json!(names));
            for (k, v) in outcome.extra {
                obj.insert(k.into(), v);
            }
            format!("{}\n", Value::Object(obj))
        }
    })
}

fn put_certificate(g: &MarginGraph, put: &crate::putcheck::PutOutcome, dot: bool) -> Certificate {
    if dot {
        Certificate::Dot(
            put.certificates
                .iter()
                .map(|c| river_dot(&c.diagram, g.labels()))
                .collect(),
        )
    } else {
        let records: Vec<CertificateRecord> = put
            .certificates
            .iter()
            .map(|c| CertificateRecord::new(c, g.labels(), g.edges()))
            .collect();
        Certificate::Json(json!(records))
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Condorcet => "condorcet",
        Method::Plurality => "plurality",
        Method::Borda => "borda",
        Method::River => "river",
        Method::RiverPut => "river-put",
        Method::Oracle => "oracle",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiebreak_parsing() {
        assert_eq!("lex".parse(), Ok(Tiebreak::Lex));
        assert_eq!("shuffle:7".parse(), Ok(Tiebreak::Shuffle(7)));
        assert!("shuffle".parse::<Tiebreak>().is_err());
        assert!("shuffle:x".parse::<Tiebreak>().is_err());
        assert!("random".parse::<Tiebreak>().is_err());
        assert_eq!(Tiebreak::Shuffle(3).to_string(), "shuffle:3");
    }

    #[test]
    fn flag_parsing() {
        let cfg = RunConfig::try_parse_from([
            "winners",
            "e.txt",
            "--method",
            "river",
            "--tiebreak",
            "shuffle:9",
            "--format",
            "json",
        ])
        .unwrap();
        assert_eq!(cfg.method, Method::River);
        assert_eq!(cfg.tiebreak, Some(Tiebreak::Shuffle(9)));
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.oracle_cap, DEFAULT_CAP);

        let cfg = RunConfig::try_parse_from(["winners", "e.txt", "--oracle"]).unwrap();
        assert_eq!(cfg.effective_method(), Method::Oracle);
        assert!(RunConfig::try_parse_from(["winners", "e.txt", "--method", "schulze"]).is_err());
    }

    #[test]
    fn tiebreak_requires_river() {
        let mut cfg = RunConfig::new("does-not-matter.txt", Method::Borda);
        cfg.tiebreak = Some(Tiebreak::Lex);
        let err = run(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn missing_file_is_an_input_error() {
        let cfg = RunConfig::new("/nonexistent/ballots.txt", Method::Borda);
        assert_eq!(run(&cfg).unwrap_err().exit_code(), 2);
    }
}
