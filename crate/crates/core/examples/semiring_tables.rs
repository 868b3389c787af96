//! Build semirings from URIs and from raw Cayley tables, and inspect
//! their units, additive inverses and squares.

use semiring_cholesky::{parse_uri, q_closed, validate_table, AnySemiring, RawTables, Semiring};

fn main() -> semiring_cholesky::Result<()> {
    for uri in ["bool", "zn:6", "z2x3", "product:zn:2,bool", "chain:3"] {
        let AnySemiring::Finite(s) = parse_uri(uri)? else {
            unreachable!()
        };
        let d = s.derived_sets();
        let show = |v: Vec<_>| v.iter().map(|e| s.name(e)).collect::<Vec<_>>().join(" ");
        println!(
            "{uri:<18} order {:<2} U = {{{}}}",
            s.names().len(),
            show(d.units())
        );
        println!(
            "{:<18} V = {{{}}}  Q = {{{}}}  Q+Q in Q: {}",
            "",
            show(d.add_invertible()),
            show(d.squares()),
            q_closed(&s)?
        );
    }

    // Tables may also be supplied directly; this one is not distributive.
    let raw: RawTables = serde_json::from_str(
        r#"{"order": 3, "zero": 0, "one": 1, "add": [[0,1,2],[1,2,0],[2,0,1]], "mul": [[0,0,0],[0,1,2],[0,2,2]]}"#,
    )?;
    match validate_table(&raw) {
        Ok(_) => println!("custom table is a semiring"),
        Err(e) => println!("custom table rejected: {e}"),
    }
    Ok(())
}
