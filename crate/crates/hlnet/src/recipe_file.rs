//! JSON recipe documents.
//!
//! ```json
//! {"dim": 1, "node": {"left": {"dim": 0, "leaf": true},
//!                     "right": {"dim": 0, "leaf": true},
//!                     "matching": [0]}}
//! ```
//!
//! Matching entries are local indices into the right half. Schema errors are
//! reported with the JSON pointer of the offending value.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use hlnet_core::{compose, HlError, MatchingPerm, Recipe};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

pub fn to_json(r: &Recipe) -> Value {
    match r.as_node() {
        None => json!({"dim": 0, "leaf": true}),
        Some(node) => json!({
            "dim": node.dim(),
            "node": {
                "left": to_json(node.left()),
                "right": to_json(node.right()),
                "matching": node.matching().as_slice(),
            }
        }),
    }
}

pub fn from_json(value: &Value) -> Result<Recipe> {
    parse(value, String::new())
}

fn parse(value: &Value, pointer: String) -> Result<Recipe> {
    let obj = value.as_object().ok_or_else(|| Error::schema(&pointer, "expected an object"))?;
    let dim = field(obj, "dim", &pointer)?
        .as_u64()
        .ok_or_else(|| Error::schema(&format!("{pointer}/dim"), "expected a non-negative integer"))?;
    if dim == 0 {
        match obj.get("leaf") {
            Some(Value::Bool(true)) => {}
            _ => return Err(Error::schema(&pointer, "a dim-0 recipe must be {\"dim\": 0, \"leaf\": true}")),
        }
        if obj.contains_key("node") {
            return Err(Error::schema(&format!("{pointer}/node"), "a leaf has no node"));
        }
        return Ok(Recipe::Leaf);
    }
    if obj.contains_key("leaf") {
        return Err(Error::schema(&format!("{pointer}/leaf"), format!("a dim-{dim} recipe cannot be a leaf")));
    }
    let node_ptr = format!("{pointer}/node");
    let node = field(obj, "node", &pointer)?
        .as_object()
        .ok_or_else(|| Error::schema(&node_ptr, "expected an object"))?;
    let left = parse(field(node, "left", &node_ptr)?, format!("{node_ptr}/left"))?;
    let right = parse(field(node, "right", &node_ptr)?, format!("{node_ptr}/right"))?;
    for (side, child) in [("left", &left), ("right", &right)] {
        if u64::from(child.dim()) + 1 != dim {
            return Err(Error::schema(
                &format!("{node_ptr}/{side}"),
                format!("half has dim {}, expected {} under a dim-{dim} node", child.dim(), dim - 1),
            ));
        }
    }
    let matching_ptr = format!("{node_ptr}/matching");
    let entries = field(node, "matching", &node_ptr)?
        .as_array()
        .ok_or_else(|| Error::schema(&matching_ptr, "expected an array"))?;
    let map = entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            e.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::schema(&format!("{matching_ptr}/{i}"), "expected a non-negative integer"))
        })
        .collect::<Result<Vec<u32>>>()?;
    let matching = MatchingPerm::new(map).map_err(|e| match e {
        HlError::DuplicateImage { index, .. } | HlError::ImageOutOfRange { index, .. } => {
            Error::schema(&format!("{matching_ptr}/{index}"), e.to_string())
        }
        other => other.into(),
    })?;
    compose(left, right, matching).map_err(|e| Error::schema(&matching_ptr, e.to_string()))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, pointer: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::schema(pointer, format!("missing field \"{key}\"")))
}

pub fn write_recipe<W: Write>(r: &Recipe, mut out: W) -> Result<()> {
    serde_json::to_writer(&mut out, &to_json(r)).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn read_recipe<R: Read>(input: R) -> Result<Recipe> {
    let value: Value = serde_json::from_reader(input)
        .map_err(|e| Error::Json { line: e.line(), column: e.column(), message: e.to_string() })?;
    from_json(&value)
}

pub fn save_recipe(r: &Recipe, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut buf = Vec::new();
    write_recipe(r, &mut buf)?;
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

pub fn load_recipe(path: impl AsRef<Path>) -> Result<Recipe> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_recipe(std::io::BufReader::new(file))
}
