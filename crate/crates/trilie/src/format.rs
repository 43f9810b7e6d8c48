//! JSON file formats: algebras, representations, matrices, cochain dumps.
//!
//! All indices are 1-based on the wire to match basis labels `e1, e2, …`;
//! every rational is a string `"p"` or `"p/q"` so no consumer ever coerces
//! a value through floating point. Unknown keys are rejected. Emission is
//! canonical: sorted keys, sorted tuples, LF line endings — identical
//! structures serialize to identical bytes.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::{Representation, ThreeLieAlgebra};
use crate::cochain::Cochain;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::Error;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    brackets: Vec<BracketEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    #[serde(rename = "in")]
    args: [usize; 3],
    out: BTreeMap<String, String>,
}

fn to_zero_based(index_1based: usize, dim: usize, what: &str) -> Result<usize, Error> {
    if index_1based == 0 || index_1based > dim {
        return Err(Error::parse(format!(
            "{what} index {index_1based} out of range 1..={dim}"
        )));
    }
    Ok(index_1based - 1)
}

fn parse_out_vector(out: &BTreeMap<String, String>, dim: usize) -> Result<Vector, Error> {
    let mut v = Vector::zero(dim);
    for (key, lit) in out {
        let idx: usize = key
            .parse()
            .map_err(|_| Error::parse(format!("output index {key:?} is not an integer")))?;
        let idx = to_zero_based(idx, dim, "output")?;
        v.set(idx, Scalar::parse(lit)?);
    }
    Ok(v)
}

/// Parses an algebra document.
pub fn parse_algebra(text: &str) -> Result<ThreeLieAlgebra, Error> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("algebra file: {e}")))?;
    if file.dim == 0 {
        return Err(Error::parse("algebra dimension must be positive"));
    }
    let mut algebra = ThreeLieAlgebra::abelian(file.dim);
    if let Some(basis) = file.basis {
        algebra = algebra.with_basis_names(basis)?;
    }
    let mut seen = std::collections::BTreeSet::new();
    for entry in &file.brackets {
        let mut ix = [0usize; 3];
        for (slot, &i) in entry.args.iter().enumerate() {
            ix[slot] = to_zero_based(i, file.dim, "bracket")?;
        }
        let mut sorted = ix;
        sorted.sort_unstable();
        if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
            return Err(Error::parse(format!(
                "bracket entry {:?} repeats an index",
                entry.args
            )));
        }
        if !seen.insert(sorted) {
            return Err(Error::parse(format!(
                "duplicate bracket entry for triple {:?}",
                entry.args
            )));
        }
        let value = parse_out_vector(&entry.out, file.dim)?;
        algebra.set_bracket(ix[0], ix[1], ix[2], value)?;
    }
    Ok(algebra)
}

pub fn load_algebra(path: &Path) -> Result<ThreeLieAlgebra, Error> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

/// Canonical emission; parses back to an identical structure table.
pub fn algebra_to_json(a: &ThreeLieAlgebra) -> Value {
    let brackets: Vec<Value> = a
        .table()
        .iter()
        .map(|(key, v)| {
            let out: BTreeMap<String, String> = v
                .support()
                .map(|(i, c)| ((i + 1).to_string(), c.to_string()))
                .collect();
            json!({ "in": [key[0] + 1, key[1] + 1, key[2] + 1], "out": out })
        })
        .collect();
    json!({
        "dim": a.dim(),
        "basis": a.basis_names(),
        "brackets": brackets,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    algebra: AlgebraRef,
    rep_dim: usize,
    rho: Vec<RhoEntry>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlgebraRef {
    Path(String),
    Inline(Value),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RhoEntry {
    pair: [usize; 2],
    matrix: Vec<Vec<String>>,
}

/// Parses a representation document; a string `algebra` field is resolved
/// relative to `base_dir`.
pub fn parse_representation(
    text: &str,
    base_dir: &Path,
) -> Result<(ThreeLieAlgebra, Representation), Error> {
    let file: RepresentationFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("representation file: {e}")))?;
    let algebra = match &file.algebra {
        AlgebraRef::Path(p) => load_algebra(&base_dir.join(p))?,
        AlgebraRef::Inline(v) => parse_algebra(&v.to_string())?,
    };
    if file.rep_dim == 0 {
        return Err(Error::parse("rep_dim must be positive"));
    }
    let mut rep = Representation::zero(algebra.dim(), file.rep_dim);
    let mut seen = std::collections::BTreeSet::new();
    for entry in &file.rho {
        let i = to_zero_based(entry.pair[0], algebra.dim(), "action")?;
        let j = to_zero_based(entry.pair[1], algebra.dim(), "action")?;
        if i == j {
            return Err(Error::parse(format!(
                "action pair {:?} repeats an index",
                entry.pair
            )));
        }
        if !seen.insert(if i < j { [i, j] } else { [j, i] }) {
            return Err(Error::parse(format!(
                "duplicate action entry for pair {:?}",
                entry.pair
            )));
        }
        let m = parse_matrix_rows(&entry.matrix)?;
        if m.nrows() != file.rep_dim || m.ncols() != file.rep_dim {
            return Err(Error::parse(format!(
                "action matrix for pair {:?} is {}x{}, expected {}x{}",
                entry.pair,
                m.nrows(),
                m.ncols(),
                file.rep_dim,
                file.rep_dim
            )));
        }
        rep.set_action(i, j, m)?;
    }
    Ok((algebra, rep))
}

pub fn load_representation(path: &Path) -> Result<(ThreeLieAlgebra, Representation), Error> {
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_representation(&std::fs::read_to_string(path)?, base)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: Vec<Vec<String>>,
}

fn parse_matrix_rows(rows: &[Vec<String>]) -> Result<Matrix, Error> {
    let parsed: Result<Vec<Vec<Scalar>>, Error> = rows
        .iter()
        .map(|r| r.iter().map(|s| Scalar::parse(s)).collect())
        .collect();
    Matrix::from_rows(parsed?)
}

/// Parses a rational matrix document `{ "rows": [["1","0"],…] }`.
pub fn parse_matrix(text: &str) -> Result<Matrix, Error> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("matrix file: {e}")))?;
    if file.rows.is_empty() {
        return Err(Error::parse("matrix has no rows"));
    }
    parse_matrix_rows(&file.rows)
}

pub fn load_matrix(path: &Path) -> Result<Matrix, Error> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    json!({ "rows": m.to_row_strings() })
}

/// Cochain dump: a list of `{ "tuple": [[i,j],…,[a,b,c]], "value": {…} }`
/// entries in lexicographic tuple order, indices 1-based. Degree-0 entries
/// carry a singleton `[[t]]`.
pub fn cochain_dump(c: &Cochain) -> Value {
    let mut entries = Vec::new();
    for (key, value) in c.entries() {
        let tuple: Vec<Value> = if c.degree() == 0 {
            vec![json!([key[0] + 1])]
        } else {
            let mut parts: Vec<Value> = key[..2 * (c.degree() - 1)]
                .chunks(2)
                .map(|p| json!([p[0] + 1, p[1] + 1]))
                .collect();
            let t = &key[2 * (c.degree() - 1)..];
            parts.push(json!([t[0] + 1, t[1] + 1, t[2] + 1]));
            parts
        };
        let out: BTreeMap<String, String> = value
            .support()
            .map(|(i, s)| ((i + 1).to_string(), s.to_string()))
            .collect();
        entries.push(json!({ "tuple": tuple, "value": out }));
    }
    Value::Array(entries)
}

/// Canonical string rendering of a JSON value: sorted keys (the value tree
/// uses sorted maps), two-space indentation, LF endings.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serialization") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const EXAMPLE: &str = r#"{
        "dim": 3,
        "basis": ["e1", "e2", "e3"],
        "brackets": [ { "in": [1, 2, 3], "out": { "1": "1" } } ]
    }"#;

    #[test]
    fn parses_the_bundled_example() {
        let a = parse_algebra(EXAMPLE).unwrap();
        assert_eq!(a.table(), corpus::example_5_6_algebra().table());
    }

    #[test]
    fn round_trip_is_identity_on_tables() {
        let a = corpus::example_5_7_algebra();
        let text = to_canonical_string(&algebra_to_json(&a));
        let b = parse_algebra(&text).unwrap();
        assert_eq!(a.table(), b.table());
        // and emission is byte-stable
        assert_eq!(text, to_canonical_string(&algebra_to_json(&b)));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let bad = r#"{ "dim": 3, "brackets": [], "extra": 1 }"#;
        assert!(parse_algebra(bad).is_err());
        let bad_entry = r#"{ "dim": 3, "brackets": [ { "in": [1,2,3], "out": {}, "note": "x" } ] }"#;
        assert!(parse_algebra(bad_entry).is_err());
    }

    #[test]
    fn bad_rationals_and_indices_are_rejected() {
        let bad_rat = r#"{ "dim": 3, "brackets": [ { "in": [1,2,3], "out": { "1": "1.5" } } ] }"#;
        assert!(parse_algebra(bad_rat).is_err());
        let bad_idx = r#"{ "dim": 3, "brackets": [ { "in": [1,2,4], "out": { "1": "1" } } ] }"#;
        assert!(parse_algebra(bad_idx).is_err());
        let repeated = r#"{ "dim": 3, "brackets": [ { "in": [1,2,2], "out": { "1": "1" } } ] }"#;
        assert!(parse_algebra(repeated).is_err());
        let dup = r#"{ "dim": 3, "brackets": [
            { "in": [1,2,3], "out": { "1": "1" } },
            { "in": [3,2,1], "out": { "1": "1" } } ] }"#;
        assert!(parse_algebra(dup).is_err());
    }

    #[test]
    fn representation_with_inline_algebra() {
        let text = format!(
            r#"{{ "algebra": {EXAMPLE}, "rep_dim": 3,
                 "rho": [ {{ "pair": [1, 2], "matrix": [["0","0","1"],["0","0","0"],["0","0","0"]] }} ] }}"#
        );
        let (a, rep) = parse_representation(&text, Path::new(".")).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(
            rep.apply_basis(0, 1, &Vector::basis(3, 2)),
            Vector::basis(3, 0)
        );
    }

    #[test]
    fn matrix_round_trip() {
        let m = corpus::example_5_6_t();
        let text = to_canonical_string(&matrix_to_json(&m));
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn dump_uses_one_based_sorted_tuples() {
        let pi = crate::cochain::from_bracket(&corpus::example_5_6_algebra());
        let dump = cochain_dump(&pi);
        assert_eq!(
            dump,
            json!([{ "tuple": [[1, 2, 3]], "value": { "1": "1" } }])
        );
    }
}
