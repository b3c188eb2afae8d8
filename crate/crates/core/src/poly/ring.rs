use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{Field, Monomial, MonomialOrder, Poly};
use crate::error::{Error, Result};

/// Ambient polynomial ring F_p[X_1, ..., X_n] with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], order: MonomialOrder) -> Result<RingRef> {
        let field = Field::new(p)?;
        Self::with_field(field, vars.iter().map(|v| v.as_ref().to_string()).collect(), order)
    }

    pub fn with_field(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef> {
        let mut seen = HashSet::new();
        for v in &vars {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { field, vars, order }))
    }

    /// Internal constructor for auxiliary rings whose variable names may use reserved
    /// characters so they can never clash with user names.
    pub(crate) fn auxiliary(field: Field, vars: Vec<String>, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { field, vars, order })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same field and variables under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Poly> {
        let i = self.var_index(name)?;
        Ok(Poly::monomial(self, 1, Monomial::var(self.nvars(), i, 1)))
    }

    pub fn gen(self: &Arc<Self>, index: usize) -> Poly {
        Poly::monomial(self, 1, Monomial::var(self.nvars(), index, 1))
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Poly> {
        super::parse::parse_poly(text)?.to_poly(self)
    }

    pub fn parse_all(self: &Arc<Self>, texts: &[&str]) -> Result<Vec<Poly>> {
        texts.iter().map(|t| self.parse(t)).collect()
    }

    pub(crate) fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({})",
            self.characteristic(),
            self.vars.join(","),
            self.order.name()
        )
    }
}
