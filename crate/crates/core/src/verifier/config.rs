use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Configuration;

/// On-disk form: `{"alpha": 4, "d": 2, "generators": [[3,1],[1,3]]}`.
/// The corners `alpha * u_j` may be listed or left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub alpha: u64,
    pub d: usize,
    pub generators: Vec<Vec<i64>>,
}

impl ConfigFile {
    pub fn into_configuration(self) -> Result<Configuration> {
        Configuration::new(self.alpha, self.d, &self.generators)
    }
}

impl From<&Configuration> for ConfigFile {
    fn from(cfg: &Configuration) -> Self {
        ConfigFile {
            alpha: cfg.alpha(),
            d: cfg.dim(),
            generators: cfg
                .a_points()
                .iter()
                .map(|p| p.coords().iter().map(|&x| x as i64).collect())
                .collect(),
        }
    }
}

pub fn parse_config(text: &str) -> Result<Configuration> {
    let file: ConfigFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("configuration JSON: {e}")))?;
    file.into_configuration()
}

pub fn load_config(path: &Path) -> Result<Configuration> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners_are_optional() {
        let a = parse_config(r#"{"alpha":4,"d":2,"generators":[[3,1],[1,3]]}"#).unwrap();
        let b = parse_config(r#"{"alpha":4,"d":2,"generators":[[4,0],[0,4],[3,1],[1,3]]}"#).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn malformed_input() {
        for bad in [
            r#"{"alpha":4,"d":2,"generators":[[3,2]]}"#,
            r#"{"alpha":4,"d":2,"generators":[[3,1,0]]}"#,
            r#"{"alpha":4,"d":2,"generators":[[5,-1]]}"#,
            r#"{"alpha":4,"d":2}"#,
            r#"{"alpha":4,"d":2,"generators":[[4,0]]}"#,
            "not json",
        ] {
            let e = parse_config(bad).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{bad}: {e}");
        }
    }

    #[test]
    fn round_trip() {
        let cfg = Configuration::new(3, 3, &[vec![1, 1, 1], vec![2, 1, 0]]).unwrap();
        let text = serde_json::to_string(&ConfigFile::from(&cfg)).unwrap();
        assert_eq!(parse_config(&text).unwrap(), cfg);
    }
}
