//! On-disk JSON format for [`GameScript`].
//!
//! One JSON document per script, field names exactly as declared on the
//! domain types (see `schemas/game_script.schema.json` at the repo root).
//! Serialization is canonical: struct field order plus sorted maps, so
//! serialize → parse → serialize is byte-identical.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use super::GameScript;

#[derive(Debug, Error)]
pub enum ScriptDecodeError {
    /// Input is not a valid script document. `offset` is the byte offset
    /// of the failure in the input.
    #[error("script decode failed at byte {offset} (line {line}, column {column}): {message}")]
    Decode {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("script io: {0}")]
    Io(#[from] io::Error),
}

/// Parse a script from JSON bytes. Invalid documents report the byte
/// offset of the first error; structural invariants are NOT checked here —
/// run [`super::validate_script`] on the result.
pub fn parse_script(bytes: &[u8]) -> Result<GameScript, ScriptDecodeError> {
    serde_json::from_slice(bytes).map_err(|e| decode_error(bytes, &e))
}

fn decode_error(bytes: &[u8], e: &serde_json::Error) -> ScriptDecodeError {
    ScriptDecodeError::Decode {
        offset: byte_offset(bytes, e.line(), e.column()),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Translate serde_json's 1-based line/column into a byte offset.
fn byte_offset(bytes: &[u8], line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut remaining_newlines = line - 1;
    let mut line_start = 0;
    for (i, b) in bytes.iter().enumerate() {
        if remaining_newlines == 0 {
            break;
        }
        if *b == b'\n' {
            remaining_newlines -= 1;
            line_start = i + 1;
        }
    }
    (line_start + column.saturating_sub(1)).min(bytes.len())
}

/// Canonical JSON rendering (pretty, trailing newline).
pub fn script_to_json(script: &GameScript) -> String {
    let mut s = serde_json::to_string_pretty(script).expect("script serialization is infallible");
    s.push('\n');
    s
}

pub fn read_script(path: &Path) -> Result<GameScript, ScriptDecodeError> {
    let bytes = fs::read(path)?;
    parse_script(&bytes)
}

/// Write atomically: temp file in the same directory, then rename.
pub fn write_script(path: &Path, script: &GameScript) -> Result<(), ScriptDecodeError> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, script_to_json(script))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::sample::{sample_script, SampleParams};
    use super::*;

    #[test]
    fn roundtrip_is_identity() {
        let script = sample_script(11, 2, &SampleParams::default());
        let json = script_to_json(&script);
        let back = parse_script(json.as_bytes()).unwrap();
        assert_eq!(script, back);
        assert_eq!(json, script_to_json(&back));
    }

    #[test]
    fn roundtrip_with_unicode_and_quotes() {
        let mut script = sample_script(12, 2, &SampleParams::default());
        script.outline.role_summaries[0].name = "Žofie \"the Owl\" 夜".into();
        script.clue_pool.clues[0].content = "note says: \"meet at ten\"\n—torn edge".into();
        let json = script_to_json(&script);
        let back = parse_script(json.as_bytes()).unwrap();
        assert_eq!(script, back);
    }

    #[test]
    fn corrupted_bytes_name_offset() {
        let script = sample_script(13, 2, &SampleParams::default());
        let mut json = script_to_json(&script).into_bytes();
        let cut = json.len() / 2;
        json.truncate(cut);
        match parse_script(&json) {
            Err(ScriptDecodeError::Decode { offset, .. }) => {
                assert!(offset <= cut, "offset {offset} beyond cut {cut}");
                assert!(offset > 0);
            }
            other => panic!("expected decode error, got {other:?}"),
        }
    }

    #[test]
    fn byte_offset_handles_multiline() {
        let text = b"{\n  \"a\": 1,\n  oops\n}";
        let e = serde_json::from_slice::<serde_json::Value>(text).unwrap_err();
        let off = byte_offset(text, e.line(), e.column());
        assert_eq!(&text[off - 1..off], b"o");
    }

    #[test]
    fn write_then_read(){
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        let script = sample_script(14, 3, &SampleParams::default());
        write_script(&path, &script).unwrap();
        assert_eq!(read_script(&path).unwrap(), script);
    }
}
