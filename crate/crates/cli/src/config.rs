//! Run configuration: a flat TOML file such as
//!
//! ```toml
//! n = 2
//! p = [0, -1]
//! q = [0, 1]
//! tiebreak = "degrevlex"
//! vars = ["x1", "x2", "D1", "D2"]   # ascending
//! field = "rational"                # or "fp(32003)"
//! degree_cap = 40
//! output = "json"
//! ```

use std::path::Path;

use serde::Deserialize;
use weylstd::{LinearForm, MonomialOrder, OrderContext, Prime, TieBreak};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Fp(Prime),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub lambda: LinearForm,
    pub tiebreak: TieBreak,
    pub field: FieldChoice,
    pub degree_cap: Option<u64>,
    pub output: OutputFormat,
}

impl RunConfig {
    /// Order filtration `|β|`, degrevlex, rationals.
    pub fn default_for(n: usize) -> Self {
        RunConfig {
            n,
            lambda: LinearForm::order(n),
            tiebreak: TieBreak::standard(MonomialOrder::DegRevLex, n),
            field: FieldChoice::Rational,
            degree_cap: None,
            output: OutputFormat::Text,
        }
    }

    pub fn context(&self) -> OrderContext {
        OrderContext::new(self.lambda.clone(), self.tiebreak.clone())
            .expect("dimensions validated at load")
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        raw.validate()
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    n: usize,
    p: Option<Vec<i64>>,
    q: Option<Vec<i64>>,
    tiebreak: Option<String>,
    vars: Option<Vec<String>>,
    field: Option<String>,
    degree_cap: Option<u64>,
    output: Option<String>,
}

impl RawConfig {
    fn validate(self) -> Result<RunConfig, CliError> {
        let n = self.n;
        if n == 0 {
            return Err(CliError::Config("n must be at least 1".into()));
        }
        let p = self.p.unwrap_or_else(|| vec![0; n]);
        let q = self.q.unwrap_or_else(|| vec![1; n]);
        if p.len() != n || q.len() != n {
            return Err(CliError::Config(format!(
                "p and q must have n = {n} entries (got {} and {})",
                p.len(),
                q.len()
            )));
        }
        let lambda = LinearForm::new(p, q).map_err(|e| CliError::Config(e.to_string()))?;

        let order: MonomialOrder = self
            .tiebreak
            .as_deref()
            .unwrap_or("degrevlex")
            .parse()
            .map_err(|e: weylstd::Error| CliError::Config(e.to_string()))?;
        let tiebreak = match self.vars {
            None => TieBreak::standard(order, n),
            Some(vars) => {
                let ascending = vars
                    .iter()
                    .map(|v| variable_index(v, n))
                    .collect::<Result<Vec<_>, _>>()?;
                if ascending.len() != 2 * n {
                    return Err(CliError::Config(format!(
                        "vars must list all {} variables",
                        2 * n
                    )));
                }
                TieBreak::new(order, ascending).map_err(|e| CliError::Config(e.to_string()))?
            }
        };

        let field = match self.field.as_deref().unwrap_or("rational") {
            "rational" | "QQ" => FieldChoice::Rational,
            other => FieldChoice::Fp(parse_prime_field(other)?),
        };
        let output = match self.output.as_deref().unwrap_or("text") {
            "text" => OutputFormat::Text,
            "json" => OutputFormat::Json,
            other => return Err(CliError::Config(format!("unknown output format `{other}`"))),
        };
        Ok(RunConfig {
            n,
            lambda,
            tiebreak,
            field,
            degree_cap: self.degree_cap,
            output,
        })
    }
}

fn variable_index(name: &str, n: usize) -> Result<usize, CliError> {
    let bad = || CliError::Config(format!("unknown variable `{name}` in vars"));
    let (head, digits) = name.split_at(1.min(name.len()));
    let i: usize = digits.parse().map_err(|_| bad())?;
    if i == 0 || i > n {
        return Err(bad());
    }
    match head {
        "x" => Ok(i - 1),
        "D" | "d" => Ok(n + i - 1),
        _ => Err(bad()),
    }
}

fn parse_prime_field(s: &str) -> Result<Prime, CliError> {
    let inner = s
        .strip_prefix("fp(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| CliError::Config(format!("unknown field `{s}`")))?;
    let p: u64 = inner
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("bad modulus in `{s}`")))?;
    if p >= 1 << 62 {
        return Err(CliError::Config(format!("modulus {p} too large")));
    }
    Prime::new(p).map_err(|e| CliError::Config(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config() {
        let cfg = RunConfig::from_toml(
            r#"
            n = 2
            p = [0, -1]
            q = [0, 1]
            tiebreak = "lex"
            vars = ["D2", "D1", "x2", "x1"]
            field = "fp(101)"
            degree_cap = 12
            output = "json"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.lambda, LinearForm::v_filtration(2));
        assert_eq!(cfg.tiebreak.ascending(), &[3, 2, 1, 0]);
        assert_eq!(cfg.field, FieldChoice::Fp(Prime::new(101).unwrap()));
        assert_eq!(cfg.degree_cap, Some(12));
        assert_eq!(cfg.output, OutputFormat::Json);
    }

    #[test]
    fn defaults_to_order_filtration() {
        let cfg = RunConfig::from_toml("n = 3").unwrap();
        assert_eq!(cfg, RunConfig::default_for(3));
    }

    #[test]
    fn rejections() {
        assert!(RunConfig::from_toml("n = 1\np = [-2]\nq = [1]").is_err());
        assert!(RunConfig::from_toml("n = 1\nfield = \"fp(91)\"").is_err());
        assert!(RunConfig::from_toml("n = 2\np = [0]").is_err());
        assert!(RunConfig::from_toml("n = 1\ntiebreak = \"random\"").is_err());
        assert!(RunConfig::from_toml("n = 1\nvars = [\"x1\", \"x1\"]").is_err());
        assert!(RunConfig::from_toml("n = 1\ncolour = 3").is_err());
        assert!(RunConfig::from_toml("n = 0").is_err());
    }
}
