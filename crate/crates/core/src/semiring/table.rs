use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Element, Semiring};
use crate::error::{Axiom, AxiomViolation, Error, Result};

/// Unvalidated Cayley tables, exactly as stored in a semiring JSON file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTables {
    pub order: usize,
    pub zero: u32,
    pub one: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub add: Vec<Vec<u32>>,
    pub mul: Vec<Vec<u32>>,
}

/// `U(S)`, `V(S)` and `Q(S)` of a finite semiring, with the inverse,
/// negation and square-root maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSets {
    inverse: Vec<Option<Element>>,
    negation: Vec<Option<Element>>,
    roots: Vec<Vec<Element>>,
}

impl DerivedSets {
    fn compute(order: usize, zero: u32, one: u32, add: &[u32], mul: &[u32]) -> Self {
        let mut inverse = vec![None; order];
        let mut negation = vec![None; order];
        let mut roots = vec![Vec::new(); order];
        for a in 0..order {
            for b in 0..order {
                let idx = a * order + b;
                if inverse[a].is_none() && mul[idx] == one {
                    inverse[a] = Some(Element(b as u32));
                }
                if negation[a].is_none() && add[idx] == zero {
                    negation[a] = Some(Element(b as u32));
                }
            }
            roots[mul[a * order + a] as usize].push(Element(a as u32));
        }
        DerivedSets {
            inverse,
            negation,
            roots,
        }
    }

    /// `U(S)` in canonical order.
    pub fn units(&self) -> Vec<Element> {
        Self::support(&self.inverse)
    }

    /// `V(S)` in canonical order.
    pub fn add_invertible(&self) -> Vec<Element> {
        Self::support(&self.negation)
    }

    /// `Q(S)` in canonical order.
    pub fn squares(&self) -> Vec<Element> {
        self.roots
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(i, _)| Element(i as u32))
            .collect()
    }

    pub fn inverse(&self, a: Element) -> Option<Element> {
        self.inverse[a.index()]
    }

    pub fn negation(&self, a: Element) -> Option<Element> {
        self.negation[a.index()]
    }

    pub fn roots(&self, a: Element) -> &[Element] {
        &self.roots[a.index()]
    }

    fn support(map: &[Option<Element>]) -> Vec<Element> {
        map.iter()
            .enumerate()
            .filter(|(_, v)| v.is_some())
            .map(|(i, _)| Element(i as u32))
            .collect()
    }
}

/// A validated finite commutative semiring.
#[derive(Debug, Clone)]
pub struct SemiringTable {
    label: String,
    order: usize,
    zero: Element,
    one: Element,
    names: Vec<String>,
    by_name: HashMap<String, Element>,
    add: Vec<u32>,
    mul: Vec<u32>,
    elements: Vec<Element>,
    derived: DerivedSets,
}

impl PartialEq for SemiringTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for SemiringTable {}

/// Validate candidate tables, returning every failing axiom instance.
pub fn validate_table(raw: &RawTables) -> Result<SemiringTable> {
    validate_labelled(raw, "custom")
}

pub(crate) fn validate_labelled(raw: &RawTables, label: &str) -> Result<SemiringTable> {
    let q = raw.order;
    check_shape(raw)?;
    let add: Vec<u32> = raw.add.iter().flatten().copied().collect();
    let mul: Vec<u32> = raw.mul.iter().flatten().copied().collect();
    let violations = axiom_violations(q, raw.zero, raw.one, &add, &mul);
    if !violations.is_empty() {
        return Err(Error::AxiomViolations(violations));
    }

    let names = raw
        .names
        .clone()
        .unwrap_or_else(|| (0..q).map(|i| i.to_string()).collect());
    let by_name = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), Element(i as u32)))
        .collect();
    let derived = DerivedSets::compute(q, raw.zero, raw.one, &add, &mul);
    Ok(SemiringTable {
        label: label.to_string(),
        order: q,
        zero: Element(raw.zero),
        one: Element(raw.one),
        names,
        by_name,
        add,
        mul,
        elements: (0..q as u32).map(Element).collect(),
        derived,
    })
}

fn check_shape(raw: &RawTables) -> Result<()> {
    let q = raw.order;
    let malformed = |msg: String| Err(Error::MalformedTable(msg));
    if q == 0 {
        return malformed("order must be positive".into());
    }
    if q > u32::MAX as usize {
        return malformed(format!("order {q} is too large"));
    }
    for (which, table) in [("add", &raw.add), ("mul", &raw.mul)] {
        if table.len() != q {
            return malformed(format!("{which} has {} rows, expected {q}", table.len()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != q {
                return malformed(format!(
                    "{which} row {i} has {} entries, expected {q}",
                    row.len()
                ));
            }
            if let Some(bad) = row.iter().find(|&&v| v as usize >= q) {
                return malformed(format!("{which} row {i} contains {bad}, outside 0..{q}"));
            }
        }
    }
    if raw.zero as usize >= q || raw.one as usize >= q {
        return malformed("zero/one outside the carrier".into());
    }
    if let Some(names) = &raw.names {
        if names.len() != q {
            return malformed(format!("{} names for order {q}", names.len()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return malformed(format!("duplicate element name {dup:?}"));
        }
    }
    Ok(())
}

fn axiom_violations(
    q: usize,
    zero: u32,
    one: u32,
    add: &[u32],
    mul: &[u32],
) -> Vec<AxiomViolation> {
    let at = |t: &[u32], a: u32, b: u32| t[a as usize * q + b as usize];
    let mut out = Vec::new();
    let mut push = |axiom, a, b, c| {
        out.push(AxiomViolation {
            axiom,
            witness: [a, b, c],
        })
    };
    let n = q as u32;

    for a in 0..n {
        if at(add, a, zero) != a || at(add, zero, a) != a {
            push(Axiom::AddIdentity, a, zero, zero);
        }
        if at(mul, a, one) != a || at(mul, one, a) != a {
            push(Axiom::MulIdentity, a, one, one);
        }
        if at(mul, a, zero) != zero || at(mul, zero, a) != zero {
            push(Axiom::Annihilation, a, zero, zero);
        }
        for b in 0..n {
            if at(add, a, b) != at(add, b, a) {
                push(Axiom::AddCommutative, a, b, b);
            }
            if at(mul, a, b) != at(mul, b, a) {
                push(Axiom::MulCommutative, a, b, b);
            }
            for c in 0..n {
                if at(add, at(add, a, b), c) != at(add, a, at(add, b, c)) {
                    push(Axiom::AddAssociative, a, b, c);
                }
                if at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)) {
                    push(Axiom::MulAssociative, a, b, c);
                }
                let left = at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c));
                let right = at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c));
                if left || right {
                    push(Axiom::Distributive, a, b, c);
                }
            }
        }
    }
    out
}

impl SemiringTable {
    pub(crate) fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn derived_sets(&self) -> &DerivedSets {
        &self.derived
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Export back to the file representation.
    pub fn to_raw(&self) -> RawTables {
        let q = self.order;
        let rows = |t: &[u32]| t.chunks(q).map(<[u32]>::to_vec).collect();
        RawTables {
            order: q,
            zero: self.zero.0,
            one: self.one.0,
            names: Some(self.names.clone()),
            add: rows(&self.add),
            mul: rows(&self.mul),
        }
    }

    /// True iff `V(S) = S`.
    pub fn is_ring(&self) -> bool {
        self.derived.add_invertible().len() == self.order
    }
}

impl Semiring for SemiringTable {
    type Elem = Element;

    fn zero(&self) -> Element {
        self.zero
    }

    fn one(&self) -> Element {
        self.one
    }

    #[inline]
    fn add(&self, a: &Element, b: &Element) -> Element {
        Element(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    fn mul(&self, a: &Element, b: &Element) -> Element {
        Element(self.mul[a.index() * self.order + b.index()])
    }

    fn inverse(&self, a: &Element) -> Option<Element> {
        self.derived.inverse(*a)
    }

    fn negate(&self, a: &Element) -> Option<Element> {
        self.derived.negation(*a)
    }

    fn square_roots(&self, a: &Element) -> Vec<Element> {
        self.derived.roots(*a).to_vec()
    }

    fn is_square(&self, a: &Element) -> bool {
        !self.derived.roots(*a).is_empty()
    }

    fn is_antinegative(&self) -> bool {
        self.derived.add_invertible() == [self.zero]
    }

    fn elements(&self) -> Option<&[Element]> {
        Some(&self.elements)
    }

    fn sample(&self, bound: usize) -> Vec<Element> {
        self.elements
            .iter()
            .take(bound.saturating_add(1))
            .copied()
            .collect()
    }

    fn name(&self, a: &Element) -> String {
        self.names[a.index()].clone()
    }

    fn parse_element(&self, text: &str) -> Result<Element> {
        let text = text.trim();
        if let Some(e) = self.by_name.get(text) {
            return Ok(*e);
        }
        match text.parse::<usize>() {
            Ok(i) if i < self.order => Ok(Element(i as u32)),
            _ => Err(Error::UnknownElement(text.to_string())),
        }
    }

    fn label(&self) -> &str {
        &self.label
    }
}
