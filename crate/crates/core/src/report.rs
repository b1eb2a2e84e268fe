use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Named relation checks with their outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<(String, bool)>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.entries.push((name.into(), passed));
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.entries
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, ok)| *ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.entries {
            writeln!(f, "{} {name}", if *ok { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}
