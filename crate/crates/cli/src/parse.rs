//! Parsers for the string forms accepted on the command line.

use std::path::PathBuf;
use std::str::FromStr;

use ciqw_core::graphs::parse_edge_list;
use ciqw_core::{long_params, GraphSpec, GroverParams};
use num_rational::Ratio;
use serde::Serialize;

use crate::CliError;

/// A `--graph` value: a family instance or an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GraphArg {
    Family(GraphSpec),
    File { path: PathBuf },
}

impl GraphArg {
    /// Realizes file arguments as `GraphSpec::Custom`.
    pub fn load(&self) -> Result<GraphSpec, CliError> {
        match self {
            GraphArg::Family(spec) => Ok(spec.clone()),
            GraphArg::File { path } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                let g = parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                Ok(GraphSpec::Custom {
                    n: g.n_vertices(),
                    edges: g.edges().to_vec(),
                })
            }
        }
    }
}

impl FromStr for GraphArg {
    type Err = String;

    /// Accepts `family:a,b`, `family(a,b)` and `file:PATH`. Family names
    /// are case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GraphArg::File { path: path.into() });
        }
        let (name, args) = if let Some((name, rest)) = s.split_once('(') {
            let inner = rest.strip_suffix(')').ok_or_else(|| format!("unbalanced parentheses in `{s}`"))?;
            (name, inner)
        } else if let Some((name, rest)) = s.split_once(':') {
            (name, rest)
        } else {
            return Err(format!("expected family:params or file:path, got `{s}`"));
        };
        let name = name.trim().to_ascii_lowercase().replace('-', "_");
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| format!("bad parameter `{a}` in `{s}`")))
            .collect::<Result<Vec<_>, _>>()?;
        let want = |count: usize| {
            if nums.len() == count {
                Ok(())
            } else {
                Err(format!("{name} takes {count} parameter(s), got {}", nums.len()))
            }
        };
        let spec = match name.as_str() {
            "complete" | "k" => want(1).map(|_| GraphSpec::Complete { n: nums[0] }),
            "johnson" | "j" => want(2).map(|_| GraphSpec::Johnson { n: nums[0], k: nums[1] }),
            "kneser" => want(2).map(|_| GraphSpec::Kneser { n: nums[0], k: nums[1] }),
            "hamming" | "h" => want(2).map(|_| GraphSpec::Hamming { d: nums[0], q: nums[1] }),
            "grassmann" => want(3).map(|_| GraphSpec::Grassmann {
                q: nums[0],
                n: nums[1],
                k: nums[2],
            }),
            "rook" => want(2).map(|_| GraphSpec::Rook { m: nums[0], n: nums[1] }),
            "complete_square" => want(1).map(|_| GraphSpec::CompleteSquare { n: nums[0] }),
            "cocktail_party" => want(1).map(|_| GraphSpec::CocktailParty { n: nums[0] }),
            "complete_multipartite" => want(2).map(|_| GraphSpec::CompleteMultipartite { n: nums[0], k: nums[1] }),
            "star" => want(1).map(|_| GraphSpec::Star { n: nums[0] }),
            "antiregular" => want(1).map(|_| GraphSpec::Antiregular { n: nums[0] }),
            other => Err(format!("unknown family `{other}`")),
        }?;
        spec.validate().map_err(|e| e.to_string())?;
        Ok(GraphArg::Family(spec))
    }
}

/// A `--params` value.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamsArg {
    /// Derive exact parameters as if the marked fraction were `epsilon`.
    Epsilon { epsilon: Ratio<u64> },
    /// Use these iteration count and phases verbatim.
    Explicit { k: u64, alpha: f64, beta: f64 },
}

impl ParamsArg {
    /// `true_epsilon` is recorded when the parameters are explicit.
    pub fn resolve(&self, true_epsilon: Ratio<u64>) -> Result<GroverParams, CliError> {
        match *self {
            ParamsArg::Epsilon { epsilon } => long_params(epsilon).map_err(|e| CliError::Input(e.to_string())),
            ParamsArg::Explicit { k, alpha, beta } => Ok(GroverParams {
                epsilon: true_epsilon,
                k,
                alpha,
                beta,
            }),
        }
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<u64>, String> {
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: u64 = num.trim().parse().map_err(|_| format!("bad ratio `{s}`"))?;
    let den: u64 = den.trim().parse().map_err(|_| format!("bad ratio `{s}`"))?;
    if den == 0 {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Ratio::new(num, den))
}

impl FromStr for ParamsArg {
    type Err = String;

    /// `eps=P/Q`, or `k=K,alpha=A` with optional `beta=B` (default `A`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut eps = None;
        let (mut k, mut alpha, mut beta) = (None, None, None);
        for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair.split_once('=').ok_or_else(|| format!("expected key=value, got `{pair}`"))?;
            let float = || value.trim().parse::<f64>().map_err(|_| format!("bad number `{value}`"));
            match key.trim() {
                "eps" | "epsilon" => eps = Some(parse_ratio(value)?),
                "k" => k = Some(value.trim().parse::<u64>().map_err(|_| format!("bad k `{value}`"))?),
                "alpha" => alpha = Some(float()?),
                "beta" => beta = Some(float()?),
                other => return Err(format!("unknown parameter `{other}`")),
            }
        }
        match (eps, k, alpha) {
            (Some(epsilon), None, None) if beta.is_none() => Ok(ParamsArg::Epsilon { epsilon }),
            (None, Some(k), Some(alpha)) => Ok(ParamsArg::Explicit {
                k,
                alpha,
                beta: beta.unwrap_or(alpha),
            }),
            _ => Err("give either eps=P/Q or k=K,alpha=A[,beta=B]".into()),
        }
    }
}

/// A marked-set size: a fixed count, or `n/D` for `⌈N/D⌉`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CountArg {
    Fixed(usize),
    Fraction { divisor: usize },
}

impl CountArg {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            CountArg::Fixed(c) => c,
            CountArg::Fraction { divisor } => n.div_ceil(divisor),
        }
    }
}

impl std::fmt::Display for CountArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountArg::Fixed(c) => write!(f, "{c}"),
            CountArg::Fraction { divisor } => write!(f, "n/{divisor}"),
        }
    }
}

impl FromStr for CountArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(d) = s.strip_prefix("n/").or_else(|| s.strip_prefix("N/")) {
            let divisor: usize = d.parse().map_err(|_| format!("bad divisor in `{s}`"))?;
            if divisor == 0 {
                return Err("divisor must be positive".into());
            }
            return Ok(CountArg::Fraction { divisor });
        }
        let c: usize = s.parse().map_err(|_| format!("expected a count or n/D, got `{s}`"))?;
        if c == 0 {
            return Err("marked count must be positive".into());
        }
        Ok(CountArg::Fixed(c))
    }
}
