//! Fixity tables for term constants and type constants.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Assoc {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fixity {
    Nonfix,
    Infix(u32, Assoc),
    Prefix,
    Postfix,
    Binder,
}

/// Largest precedence an infix may be given.
pub const MAX_PREC: u32 = 100;

impl Fixity {
    pub fn is_nonfix(self) -> bool {
        self == Fixity::Nonfix
    }

    pub fn infix(self) -> Option<(u32, Assoc)> {
        match self {
            Fixity::Infix(p, a) => Some((p, a)),
            _ => None,
        }
    }
}

impl fmt::Display for Fixity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixity::Nonfix => write!(f, "nonfix"),
            Fixity::Infix(p, Assoc::Left) => write!(f, "infixl {}", p),
            Fixity::Infix(p, Assoc::Right) => write!(f, "infixr {}", p),
            Fixity::Prefix => write!(f, "prefix"),
            Fixity::Postfix => write!(f, "postfix"),
            Fixity::Binder => write!(f, "binder"),
        }
    }
}

/// Parse the `Display` form back.
pub fn parse_fixity(s: &str) -> Option<Fixity> {
    let mut it = s.split_whitespace();
    let kind = it.next()?;
    let f = match kind {
        "nonfix" => Fixity::Nonfix,
        "prefix" => Fixity::Prefix,
        "postfix" => Fixity::Postfix,
        "binder" => Fixity::Binder,
        "infixl" | "infixr" => {
            let p: u32 = it.next()?.parse().ok()?;
            let a = if kind == "infixl" { Assoc::Left } else { Assoc::Right };
            Fixity::Infix(p, a)
        }
        _ => return None,
    };
    if it.next().is_some() {
        return None;
    }
    Some(f)
}

/// Name of the boolean-equality alias of `=`.
pub const IFF: &str = "<=>";

/// Term and type fixities of one session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixityTable {
    terms: BTreeMap<String, Fixity>,
    // Type constant name to (symbol, precedence, associativity).
    types: BTreeMap<String, (String, u32, Assoc)>,
}

impl Default for FixityTable {
    fn default() -> Self {
        FixityTable::standard()
    }
}

impl FixityTable {
    pub fn empty() -> FixityTable {
        FixityTable {
            terms: BTreeMap::new(),
            types: BTreeMap::new(),
        }
    }

    /// The standard table with the platform operators preassigned.
    pub fn standard() -> FixityTable {
        use Assoc::*;
        let mut t = FixityTable::empty();
        let infixes: &[(&str, u32, Assoc)] = &[
            (",", 4, Right),
            (IFF, 5, Right),
            ("==>", 10, Right),
            ("\\/", 15, Right),
            ("/\\", 20, Right),
            ("=", 30, Right),
            ("<", 40, Right),
            ("<=", 40, Right),
            (">", 40, Right),
            (">=", 40, Right),
            ("+", 50, Left),
            ("-", 50, Left),
            ("*", 60, Left),
            ("div", 60, Left),
            ("mod", 60, Left),
            ("exp", 70, Right),
        ];
        for (n, p, a) in infixes {
            t.terms.insert(n.to_string(), Fixity::Infix(*p, *a));
        }
        for b in ["!", "?", "?!", "@"] {
            t.terms.insert(b.to_string(), Fixity::Binder);
        }
        t.terms.insert("~".to_string(), Fixity::Prefix);
        t.types.insert("fun".to_string(), ("->".to_string(), 5, Right));
        t.types.insert("prod".to_string(), ("#".to_string(), 10, Right));
        t
    }

    pub fn get(&self, name: &str) -> Fixity {
        self.terms.get(name).copied().unwrap_or(Fixity::Nonfix)
    }

    pub fn set(&mut self, name: &str, f: Fixity) {
        if f == Fixity::Nonfix {
            self.terms.remove(name);
        } else {
            self.terms.insert(name.to_string(), f);
        }
    }

    /// All names with a fixity other than nonfix, in name order.
    pub fn all(&self) -> Vec<(String, Fixity)> {
        self.terms.iter().map(|(n, f)| (n.clone(), *f)).collect()
    }

    pub fn get_type(&self, name: &str) -> Option<(&str, u32, Assoc)> {
        self.types.get(name).map(|(s, p, a)| (s.as_str(), *p, *a))
    }

    /// Type constant written with the given infix symbol.
    pub fn type_by_symbol(&self, sym: &str) -> Option<(&str, u32, Assoc)> {
        self.types
            .iter()
            .find(|(_, (s, _, _))| s == sym)
            .map(|(n, (_, p, a))| (n.as_str(), *p, *a))
    }

    /// Make a binary type constant infix under `symbol`, or remove its
    /// infix status with `None`.
    pub fn set_type(&mut self, name: &str, infix: Option<(&str, u32, Assoc)>) {
        match infix {
            Some((s, p, a)) => {
                self.types.insert(name.to_string(), (s.to_string(), p, a));
            }
            None => {
                self.types.remove(name);
            }
        }
    }

    pub fn all_types(&self) -> Vec<(String, String, u32, Assoc)> {
        self.types
            .iter()
            .map(|(n, (s, p, a))| (n.clone(), s.clone(), *p, *a))
            .collect()
    }

    /// Symbolic names the lexer must recognise.
    pub(crate) fn symbols(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.terms.keys().map(|s| s.as_str()).collect();
        v.extend(self.types.values().map(|(s, _, _)| s.as_str()));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        for f in [
            Fixity::Nonfix,
            Fixity::Infix(20, Assoc::Right),
            Fixity::Infix(50, Assoc::Left),
            Fixity::Prefix,
            Fixity::Postfix,
            Fixity::Binder,
        ] {
            assert_eq!(parse_fixity(&alloc::format!("{}", f)), Some(f));
        }
        assert_eq!(parse_fixity("infix 3"), None);
    }

    #[test]
    fn standard_precedences_are_ordered() {
        let t = FixityTable::standard();
        let p = |n: &str| t.get(n).infix().unwrap().0;
        assert!(p("=") > p("/\\"));
        assert!(p("/\\") > p("\\/"));
        assert!(p("\\/") > p("==>"));
        assert!(p("==>") > p(IFF));
        assert_eq!(t.get("!"), Fixity::Binder);
        assert_eq!(t.get("foo"), Fixity::Nonfix);
    }
}
