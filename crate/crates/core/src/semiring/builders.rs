use super::naturals::Naturals;
use super::table::{validate_labelled, RawTables, SemiringTable};
use crate::error::{Error, Result};

/// A semiring resolved from a URI or file: finite table or `ℕ`.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum AnySemiring {
    Finite(SemiringTable),
    Naturals(Naturals),
}

fn tables(q: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut add = vec![vec![0; q]; q];
    let mut mul = vec![vec![0; q]; q];
    for a in 0..q {
        for b in 0..q {
            let (s, p) = f(a, b);
            add[a][b] = s as u32;
            mul[a][b] = p as u32;
        }
    }
    (add, mul)
}

fn build(
    label: String,
    zero: u32,
    one: u32,
    names: Vec<String>,
    add: Vec<Vec<u32>>,
    mul: Vec<Vec<u32>>,
) -> SemiringTable {
    let raw = RawTables {
        order: names.len(),
        zero,
        one,
        names: Some(names),
        add,
        mul,
    };
    validate_labelled(&raw, &label).expect("built-in construction violates the semiring axioms")
}

/// The ring `Z_n`, elements indexed by residue.
pub fn make_zn(n: usize) -> Result<SemiringTable> {
    if n < 2 {
        return Err(Error::Parse(format!("zn needs n >= 2, got {n}")));
    }
    let (add, mul) = tables(n, |a, b| ((a + b) % n, (a * b) % n));
    let names = (0..n).map(|i| i.to_string()).collect();
    Ok(build(format!("zn:{n}"), 0, 1, names, add, mul))
}

/// The binary Boolean semiring, `1 + 1 = 1`.
pub fn make_boolean() -> SemiringTable {
    let (add, mul) = tables(2, |a, b| (a | b, a & b));
    build("bool".into(), 0, 1, vec!["0".into(), "1".into()], add, mul)
}

/// Componentwise product. Element `(a, b)` sits at index `a·q₂ + b`.
pub fn make_product(s1: &SemiringTable, s2: &SemiringTable) -> SemiringTable {
    use super::{Element, Semiring};
    let (q1, q2) = (s1.names().len(), s2.names().len());
    let split = |i: usize| (Element((i / q2) as u32), Element((i % q2) as u32));
    let join = |a: Element, b: Element| a.index() * q2 + b.index();
    let (add, mul) = tables(q1 * q2, |x, y| {
        let ((a1, b1), (a2, b2)) = (split(x), split(y));
        (
            join(s1.add(&a1, &a2), s2.add(&b1, &b2)),
            join(s1.mul(&a1, &a2), s2.mul(&b1, &b2)),
        )
    });
    let names = (0..q1 * q2)
        .map(|i| {
            let (a, b) = split(i);
            format!("({},{})", s1.name(&a), s2.name(&b))
        })
        .collect();
    let zero = join(s1.zero(), s2.zero()) as u32;
    let one = join(s1.one(), s2.one()) as u32;
    build(
        format!("product:{},{}", s1.label(), s2.label()),
        zero,
        one,
        names,
        add,
        mul,
    )
}

/// `Z₂[x]/(x³)`: `a + b·x + c·x²` is stored at index `a + 2b + 4c`.
pub fn make_z2x_mod_x3() -> SemiringTable {
    let mul_poly = |p: usize, q: usize| {
        let mut r = 0;
        for i in 0..3 {
            for j in 0..3 - i {
                if (p >> i) & 1 == 1 && (q >> j) & 1 == 1 {
                    r ^= 1 << (i + j);
                }
            }
        }
        r
    };
    let (add, mul) = tables(8, |a, b| (a ^ b, mul_poly(a, b)));
    let names = (0..8)
        .map(|i: usize| {
            let terms: Vec<&str> = [(1, "1"), (2, "x"), (4, "x^2")]
                .into_iter()
                .filter(|(bit, _)| i & bit != 0)
                .map(|(_, t)| t)
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    build("z2x3".into(), 0, 1, names, add, mul)
}

/// The chain `0 < 1 < … < k` as a distributive lattice: `+ = max`, `· = min`.
pub fn make_chain_lattice(k: usize) -> Result<SemiringTable> {
    if k < 1 {
        return Err(Error::Parse("chain needs k >= 1".into()));
    }
    let (add, mul) = tables(k + 1, |a, b| (a.max(b), a.min(b)));
    let names = (0..=k).map(|i| i.to_string()).collect();
    Ok(build(format!("chain:{k}"), 0, k as u32, names, add, mul))
}

pub fn make_naturals() -> Naturals {
    Naturals
}

/// Resolve a builder URI: `zn:N`, `bool`, `product:A,B`, `z2x3`,
/// `chain:K` or `nat`. Products nest (`product:product:zn:2,bool,chain:1`).
pub fn parse_uri(uri: &str) -> Result<AnySemiring> {
    let (s, rest) = parse_prefix(uri.trim())?;
    if !rest.is_empty() {
        return Err(Error::Parse(format!(
            "trailing input {rest:?} in semiring uri {uri:?}"
        )));
    }
    Ok(s)
}

fn parse_number(input: &str) -> Result<(usize, &str)> {
    let end = input
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(input.len());
    let n = input[..end]
        .parse()
        .map_err(|_| Error::Parse(format!("expected a number at {input:?}")))?;
    Ok((n, &input[end..]))
}

fn parse_prefix(input: &str) -> Result<(AnySemiring, &str)> {
    if let Some(rest) = input.strip_prefix("zn:") {
        let (n, rest) = parse_number(rest)?;
        return Ok((AnySemiring::Finite(make_zn(n)?), rest));
    }
    if let Some(rest) = input.strip_prefix("chain:") {
        let (k, rest) = parse_number(rest)?;
        return Ok((AnySemiring::Finite(make_chain_lattice(k)?), rest));
    }
    if let Some(rest) = input.strip_prefix("product:") {
        let (a, rest) = parse_prefix(rest)?;
        let rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("expected ',' in product at {rest:?}")))?;
        let (b, rest) = parse_prefix(rest)?;
        return match (a, b) {
            (AnySemiring::Finite(a), AnySemiring::Finite(b)) => {
                Ok((AnySemiring::Finite(make_product(&a, &b)), rest))
            }
            _ => Err(Error::Parse(
                "products of infinite semirings are not supported".into(),
            )),
        };
    }
    for (word, make) in [
        ("bool", make_boolean as fn() -> SemiringTable),
        ("z2x3", make_z2x_mod_x3),
    ] {
        if let Some(rest) = input.strip_prefix(word) {
            return Ok((AnySemiring::Finite(make()), rest));
        }
    }
    if let Some(rest) = input.strip_prefix("nat") {
        return Ok((AnySemiring::Naturals(Naturals), rest));
    }
    Err(Error::Parse(format!("unknown semiring uri {input:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Element, Semiring};

    fn finite(uri: &str) -> SemiringTable {
        match parse_uri(uri).unwrap() {
            AnySemiring::Finite(s) => s,
            other => panic!("{other:?}"),
        }
    }

    fn named(s: &SemiringTable, names: &[&str]) -> Vec<Element> {
        names.iter().map(|n| s.parse_element(n).unwrap()).collect()
    }

    #[test]
    fn zn_squares_and_units() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(
            z6.derived_sets().squares(),
            named(&z6, &["0", "1", "3", "4"])
        );
        assert_eq!(z6.derived_sets().units(), named(&z6, &["1", "5"]));
        let z2 = make_zn(2).unwrap();
        assert_eq!(z2.derived_sets().squares().len(), 2);
        assert!(make_zn(1).is_err());
    }

    #[test]
    fn boolean_derived_sets() {
        let b = make_boolean();
        let d = b.derived_sets();
        assert_eq!(d.add_invertible(), [Element(0)]);
        assert_eq!(d.units(), [Element(1)]);
        assert_eq!(d.squares(), [Element(0), Element(1)]);
        assert!(b.is_antinegative());
    }

    #[test]
    fn product_z2_bool() {
        let s = finite("product:zn:2,bool");
        let d = s.derived_sets();
        assert_eq!(d.squares().len(), 4, "Q(S) = S");
        assert_eq!(d.add_invertible(), named(&s, &["(0,0)", "(1,0)"]));
        assert_eq!(d.units(), named(&s, &["(1,1)"]));
        assert_eq!(s.zero(), Element(0));
        assert_eq!(s.name(&s.one()), "(1,1)");
    }

    #[test]
    fn z2x3_squares() {
        let s = make_z2x_mod_x3();
        assert_eq!(
            s.derived_sets().squares(),
            named(&s, &["0", "1", "x^2", "1+x^2"])
        );
        assert_eq!(
            s.square_roots(&s.parse_element("1").unwrap()),
            named(&s, &["1", "1+x^2"])
        );
        assert_eq!(
            s.square_roots(&s.parse_element("1+x^2").unwrap()),
            named(&s, &["1+x", "1+x+x^2"])
        );
    }

    #[test]
    fn chain_is_idempotent() {
        let s = make_chain_lattice(2).unwrap();
        assert_eq!(s.derived_sets().squares().len(), 3);
        assert_eq!(s.name(&s.one()), "2");
        assert!(s.is_antinegative());
    }

    #[test]
    fn uris() {
        assert_eq!(finite("zn:6"), make_zn(6).unwrap());
        assert_eq!(finite("bool"), make_boolean());
        assert_eq!(finite("z2x3"), make_z2x_mod_x3());
        assert_eq!(finite("chain:2"), make_chain_lattice(2).unwrap());
        assert_eq!(parse_uri("nat").unwrap(), AnySemiring::Naturals(Naturals));
        let nested = finite("product:product:zn:2,bool,chain:1");
        assert_eq!(nested.order(), Some(8));
        assert_eq!(nested.label(), "product:product:zn:2,bool,chain:1");
        for bad in ["zn:", "zn:6x", "product:zn:2", "quux", "product:nat,bool"] {
            assert!(parse_uri(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn square_roots_of_zero_contain_zero() {
        for uri in ["zn:6", "bool", "product:zn:2,bool", "z2x3", "chain:2"] {
            let s = finite(uri);
            assert!(s.square_roots(&s.zero()).contains(&s.zero()), "{uri}");
        }
    }
}
