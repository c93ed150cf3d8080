//! Port and label alphabets.
//!
//! Ports and labels are handled internally as small indices into an ordered
//! alphabet. The order of the alphabet is significant: canonical vertex names
//! are chosen by breadth-first traversal in port order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a port symbol within a [`PortAlphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Port(pub u8);

/// Index of a label symbol within a [`LabelAlphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Label(pub u8);

impl Port {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Label {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

fn validate_symbols(kind: &str, symbols: &[String]) -> Result<()> {
    if symbols.is_empty() {
        return Err(Error::InvalidAlphabet(format!("{kind} alphabet is empty")));
    }
    if symbols.len() > u8::MAX as usize {
        return Err(Error::InvalidAlphabet(format!("{kind} alphabet has more than 255 symbols")));
    }
    for (i, s) in symbols.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::InvalidAlphabet(format!("empty {kind} symbol")));
        }
        if symbols[..i].contains(s) {
            return Err(Error::InvalidAlphabet(format!("duplicate {kind} symbol `{s}`")));
        }
    }
    Ok(())
}

/// The ordered port alphabet π.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PortAlphabet {
    symbols: Vec<String>,
}

impl PortAlphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        validate_symbols("port", &symbols)?;
        for s in &symbols {
            if s.contains('.') || s.contains('/') {
                return Err(Error::InvalidAlphabet(format!(
                    "port symbol `{s}` may not contain `.` or `/`"
                )));
            }
        }
        Ok(PortAlphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn ports(&self) -> impl Iterator<Item = Port> + '_ {
        (0..self.symbols.len()).map(|i| Port(i as u8))
    }

    pub fn symbol(&self, p: Port) -> &str {
        &self.symbols[p.index()]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn lookup(&self, symbol: &str) -> Result<Port> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .map(|i| Port(i as u8))
            .ok_or_else(|| Error::UnknownPort(symbol.to_string()))
    }
}

/// The ordered label alphabet Σ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabelAlphabet {
    symbols: Vec<String>,
}

impl LabelAlphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        validate_symbols("label", &symbols)?;
        Ok(LabelAlphabet { symbols })
    }

    /// `{0, 1, ..., n-1}` rendered as decimal strings.
    pub fn numeric(n: usize) -> Self {
        LabelAlphabet::new((0..n).map(|i| i.to_string())).expect("numeric alphabet is valid")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.symbols.len()).map(|i| Label(i as u8))
    }

    pub fn symbol(&self, l: Label) -> &str {
        &self.symbols[l.index()]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn lookup(&self, symbol: &str) -> Result<Label> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .map(|i| Label(i as u8))
            .ok_or_else(|| Error::UnknownLabel(symbol.to_string()))
    }
}

/// A port alphabet together with a label alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alphabets {
    pub ports: PortAlphabet,
    pub labels: LabelAlphabet,
}

impl Alphabets {
    pub fn new(ports: PortAlphabet, labels: LabelAlphabet) -> Self {
        Alphabets { ports, labels }
    }

    /// Ports `a, a', b, b'` of the square grid, with labels `0..labels`.
    pub fn grid(labels: usize) -> Self {
        Alphabets {
            ports: PortAlphabet::new(["a", "a'", "b", "b'"]).expect("valid"),
            labels: LabelAlphabet::numeric(labels),
        }
    }

    pub fn port_count(&self) -> usize {
        self.ports.len()
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn ensure_same(&self, other: &Alphabets) -> Result<()> {
        if self != other {
            return Err(Error::AlphabetMismatch(format!("{self} vs {other}")));
        }
        Ok(())
    }
}

impl fmt::Display for Alphabets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pi={{{}}} sigma={{{}}}",
            self.ports.symbols.join(","),
            self.labels.symbols.join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(PortAlphabet::new(Vec::<String>::new()).is_err());
        assert!(PortAlphabet::new(["a", "a"]).is_err());
        assert!(PortAlphabet::new(["a.b"]).is_err());
        assert!(LabelAlphabet::new(["0", "1"]).is_ok());
    }

    #[test]
    fn lookup_follows_declared_order() {
        let pi = PortAlphabet::new(["b", "a"]).unwrap();
        assert_eq!(pi.lookup("b").unwrap(), Port(0));
        assert_eq!(pi.lookup("a").unwrap(), Port(1));
        assert!(matches!(pi.lookup("c"), Err(Error::UnknownPort(_))));
    }
}
