use indexmap::IndexMap;
use thiserror::Error;

use super::term::is_absolute_iri;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrefixError {
    #[error("unknown prefix `{0}:`")]
    UnknownPrefix(String),
    #[error("prefix `{0}:` is declared twice")]
    Duplicate(String),
    #[error("`{0}` is not an absolute IRI")]
    NotAbsolute(String),
    #[error("`{0}` is not a prefixed name")]
    NotPrefixed(String),
}

/// Prefix declarations in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    entries: IndexMap<String, String>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(
        &mut self,
        prefix: impl Into<String>,
        iri: impl Into<String>,
    ) -> Result<(), PrefixError> {
        let (prefix, iri) = (prefix.into(), iri.into());
        if !is_absolute_iri(&iri) {
            return Err(PrefixError::NotAbsolute(iri));
        }
        if self.entries.contains_key(&prefix) {
            return Err(PrefixError::Duplicate(prefix));
        }
        self.entries.insert(prefix, iri);
        Ok(())
    }

    pub fn get(&self, prefix: &str) -> Option<&str> {
        self.entries.get(prefix).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn resolve(&self, prefix: &str, local: &str) -> Result<String, PrefixError> {
        self.get(prefix)
            .map(|iri| format!("{iri}{local}"))
            .ok_or_else(|| PrefixError::UnknownPrefix(prefix.to_owned()))
    }

    /// Expands `prefix:local` to a full IRI.
    pub fn expand(&self, name: &str) -> Result<String, PrefixError> {
        let (prefix, local) = name
            .split_once(':')
            .ok_or_else(|| PrefixError::NotPrefixed(name.to_owned()))?;
        self.resolve(prefix, local)
    }

    /// `PREFIX p: <iri>` lines, one per entry.
    pub fn to_sparql(&self) -> String {
        self.iter()
            .map(|(p, iri)| format!("PREFIX {p}: <{iri}>\n"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_prefix() {
        let mut m = PrefixMap::new();
        m.insert("", "http://e/").unwrap();
        assert_eq!(m.expand(":x").unwrap(), "http://e/x");
    }

    #[test]
    fn duplicates_and_relative_iris_are_rejected() {
        let mut m = PrefixMap::new();
        m.insert("a", "http://a/").unwrap();
        assert_eq!(
            m.insert("a", "http://b/"),
            Err(PrefixError::Duplicate("a".into()))
        );
        assert!(matches!(
            m.insert("b", "rel/path"),
            Err(PrefixError::NotAbsolute(_))
        ));
    }
}
