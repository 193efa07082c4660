use std::collections::HashMap;

use crate::error::{Error, IdentKind, Result};

/// Ordered list of unique names with a reverse index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    kind: IdentKind,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl SymbolTable {
    pub fn new(kind: IdentKind, names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind,
                    name: name.clone(),
                });
            }
        }
        Ok(SymbolTable { kind, names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.get(name).ok_or_else(|| Error::UnknownIdentifier {
            kind: self.kind,
            name: name.to_string(),
        })
    }
}
