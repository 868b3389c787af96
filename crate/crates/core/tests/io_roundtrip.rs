mod common;

use std::io::Write;

use proptest::prelude::*;
use semiring_cholesky::io::{
    cholesky_doc, load_semiring, matrix_from_doc, matrix_to_doc, MatrixDoc,
};
use semiring_cholesky::{cholesky, AnySemiring, Error, Matrix, Naturals, RawTables, Semiring};
use serde_json::json;

const SEMIRINGS: [&str; 5] = ["bool", "zn:6", "z2x3", "product:zn:2,bool", "chain:4"];

proptest! {
    #[test]
    fn matrix_documents_round_trip(k in 0..SEMIRINGS.len(), rows in 1usize..4, cols in 1usize..4, seed in prop::collection::vec(0usize..64, 9)) {
        let s = common::finite(SEMIRINGS[k]);
        let elems = s.elements().unwrap();
        let m = Matrix::from_fn(&s, rows, cols, |i, j| elems[seed[i * 3 + j] % elems.len()]);
        let text = serde_json::to_string(&matrix_to_doc(&m)).unwrap();
        let doc: MatrixDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc.semiring.as_deref(), Some(SEMIRINGS[k]));
        prop_assert_eq!(matrix_from_doc(&s, &doc).unwrap(), m);
    }

    #[test]
    fn naturals_round_trip(entries in prop::collection::vec(0u64..1_000_000, 4)) {
        let s = std::sync::Arc::new(Naturals);
        let doc = MatrixDoc { semiring: None, rows: vec![vec![json!(entries[0]), json!(entries[1])], vec![json!(entries[2]), json!(entries[3])]] };
        let m = matrix_from_doc(&s, &doc).unwrap();
        let back = matrix_from_doc(&s, &matrix_to_doc(&m)).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn semiring_files_round_trip() {
    for uri in SEMIRINGS {
        let s = common::finite(uri);
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(
            serde_json::to_string_pretty(&s.to_raw())
                .unwrap()
                .as_bytes(),
        )
        .unwrap();
        let AnySemiring::Finite(loaded) = load_semiring(file.path().to_str().unwrap()).unwrap()
        else {
            panic!("expected a finite semiring");
        };
        assert_eq!(loaded, *s, "{uri}");
        assert_eq!(loaded.names(), s.names());
        assert_eq!(loaded.label(), file.path().display().to_string());
    }
}

#[test]
fn semiring_file_without_names_uses_indices() {
    let raw: RawTables = serde_json::from_value(json!({
        "order": 2, "zero": 0, "one": 1,
        "add": [[0, 1], [1, 1]],
        "mul": [[0, 0], [0, 1]]
    }))
    .unwrap();
    let s = semiring_cholesky::validate_table(&raw).unwrap();
    assert_eq!(s.names(), ["0", "1"]);
    assert_eq!(s, *common::finite("bool"));
}

#[test]
fn bad_inputs_are_rejected() {
    let s = common::finite("zn:6");
    let doc: MatrixDoc = serde_json::from_value(json!({"rows": [["1", "2"], ["9"]]})).unwrap();
    assert!(matches!(
        matrix_from_doc(&s, &doc),
        Err(Error::UnknownElement(_))
    ));
    let doc: MatrixDoc = serde_json::from_value(json!({"rows": [["1", "2"], ["3"]]})).unwrap();
    assert!(matrix_from_doc(&s, &doc).is_err());
    let doc: MatrixDoc = serde_json::from_value(json!({"rows": [[true]]})).unwrap();
    assert!(matrix_from_doc(&s, &doc).is_err());
    assert!(load_semiring("/nonexistent/semiring.json").is_err());
}

#[test]
fn cholesky_document_shape() {
    let s = common::finite("zn:6");
    let m = Matrix::from_names(&s, &[["1", "2"], ["2", "5"]]).unwrap();
    let doc = serde_json::to_value(cholesky_doc(s.as_ref(), &cholesky(&m).unwrap())).unwrap();
    assert_eq!(
        doc,
        json!({
            "status": "success",
            "L": {"semiring": "zn:6", "rows": [["1", "0"], ["2", "1"]]},
            "pivots": ["1", "1"],
            "verified_hypotheses": "local"
        })
    );
    let m = Matrix::from_names(&s, &[["5", "2"], ["2", "1"]]).unwrap();
    let doc = serde_json::to_value(cholesky_doc(s.as_ref(), &cholesky(&m).unwrap())).unwrap();
    assert_eq!(doc["status"], "pivot_not_square");
    assert_eq!(doc["pivot"], "5");
    assert_eq!(doc["L"], serde_json::Value::Null);
}
