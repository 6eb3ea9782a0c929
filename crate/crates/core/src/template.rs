//! Placeholder-based prompt templates.
//!
//! Templates are plain text files with `{name}` placeholders; `{{` and `}}`
//! escape literal braces. The required placeholder set is derived by
//! scanning the text at load time, and rendering fails if any required
//! placeholder is unbound.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TemplateError {
    #[error("template {template_id}: placeholder {{{name}}} is unbound")]
    Unbound { template_id: String, name: String },
    #[error("template {template_id}: unmatched '{{' at byte {offset}")]
    UnmatchedBrace { template_id: String, offset: usize },
    #[error("template {template_id}: empty placeholder name at byte {offset}")]
    EmptyPlaceholder { template_id: String, offset: usize },
    #[error("template directory missing file {0}")]
    MissingFile(String),
    #[error("template io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone)]
pub struct PromptTemplate {
    pub template_id: String,
    pub text: String,
    pub required: BTreeSet<String>,
}

impl PromptTemplate {
    /// Parse template text, scanning the required placeholder set.
    pub fn new(template_id: impl Into<String>, text: impl Into<String>) -> Result<Self, TemplateError> {
        let template_id = template_id.into();
        let text = text.into();
        let required = scan_placeholders(&template_id, &text)?;
        Ok(Self { template_id, text, required })
    }

    pub fn load(template_id: impl Into<String>, path: &Path) -> Result<Self, TemplateError> {
        let template_id = template_id.into();
        if !path.is_file() {
            return Err(TemplateError::MissingFile(path.display().to_string()));
        }
        let text = fs::read_to_string(path)?;
        Self::new(template_id, text)
    }

    /// Substitute every placeholder. Extra bindings are ignored; a missing
    /// one is an error.
    pub fn render(&self, bindings: &BTreeMap<String, String>) -> Result<String, TemplateError> {
        for name in &self.required {
            if !bindings.contains_key(name) {
                return Err(TemplateError::Unbound {
                    template_id: self.template_id.clone(),
                    name: name.clone(),
                });
            }
        }
        let mut out = String::with_capacity(self.text.len());
        let bytes = self.text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b'{' if bytes.get(i + 1) == Some(&b'{') => {
                    out.push('{');
                    i += 2;
                }
                b'}' if bytes.get(i + 1) == Some(&b'}') => {
                    out.push('}');
                    i += 2;
                }
                b'{' => {
                    let Some(rel) = self.text[i..].find('}') else {
                        return Err(TemplateError::UnmatchedBrace {
                            template_id: self.template_id.clone(),
                            offset: i,
                        });
                    };
                    let name = &self.text[i + 1..i + rel];
                    let value = bindings.get(name).ok_or_else(|| TemplateError::Unbound {
                        template_id: self.template_id.clone(),
                        name: name.to_string(),
                    })?;
                    out.push_str(value);
                    i += rel + 1;
                }
                _ => {
                    // Copy the full UTF-8 character.
                    let ch = self.text[i..].chars().next().expect("in-bounds char");
                    out.push(ch);
                    i += ch.len_utf8();
                }
            }
        }
        Ok(out)
    }
}

fn scan_placeholders(template_id: &str, text: &str) -> Result<BTreeSet<String>, TemplateError> {
    let mut required = BTreeSet::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'{' if bytes.get(i + 1) == Some(&b'{') => i += 2,
            b'}' if bytes.get(i + 1) == Some(&b'}') => i += 2,
            b'{' => match text[i..].find('}') {
                None => {
                    return Err(TemplateError::UnmatchedBrace {
                        template_id: template_id.into(),
                        offset: i,
                    })
                }
                Some(rel) => {
                    let name = &text[i + 1..i + rel];
                    if name.is_empty() {
                        return Err(TemplateError::EmptyPlaceholder {
                            template_id: template_id.into(),
                            offset: i,
                        });
                    }
                    required.insert(name.to_string());
                    i += rel + 1;
                }
            },
            _ => i += 1,
        }
    }
    Ok(required)
}

/// All templates the pipeline and the judges need, loaded from a directory
/// with one file per stage.
#[derive(Debug, Clone)]
pub struct TemplateSet {
    templates: BTreeMap<String, PromptTemplate>,
}

/// File stems expected in a template directory.
pub const TEMPLATE_IDS: [&str; 13] = [
    "outline",
    "character",
    "critic",
    "clue",
    "qa_long_script",
    "qa_text_rich",
    "qa_media_rich",
    "qa_multi_hop",
    "roleplay_intro",
    "roleplay_ask",
    "roleplay_answer",
    "judge_self_intro",
    "judge_discussion",
];

impl TemplateSet {
    pub fn load_dir(dir: &Path) -> Result<Self, TemplateError> {
        let mut templates = BTreeMap::new();
        for id in TEMPLATE_IDS {
            let path = dir.join(format!("{id}.txt"));
            templates.insert(id.to_string(), PromptTemplate::load(id, &path)?);
        }
        Ok(Self { templates })
    }

    /// Build a set from in-memory pairs; used by tests and the built-in
    /// defaults.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self, TemplateError>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut templates = BTreeMap::new();
        for (id, text) in pairs {
            let id = id.into();
            templates.insert(id.clone(), PromptTemplate::new(id, text.into())?);
        }
        Ok(Self { templates })
    }

    pub fn get(&self, id: &str) -> Result<&PromptTemplate, TemplateError> {
        self.templates
            .get(id)
            .ok_or_else(|| TemplateError::MissingFile(format!("{id}.txt")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn renders_and_escapes() {
        let t = PromptTemplate::new("t", "json {{\"k\": 1}} for {who} at {when}").unwrap();
        assert_eq!(t.required.len(), 2);
        let out = t.render(&bind(&[("who", "us"), ("when", "dusk")])).unwrap();
        assert_eq!(out, "json {\"k\": 1} for us at dusk");
    }

    #[test]
    fn unbound_placeholder_fails() {
        let t = PromptTemplate::new("t", "hello {name}").unwrap();
        match t.render(&bind(&[])) {
            Err(TemplateError::Unbound { name, .. }) => assert_eq!(name, "name"),
            other => panic!("expected unbound error, got {other:?}"),
        }
    }

    #[test]
    fn unmatched_brace_rejected_at_load() {
        assert!(matches!(
            PromptTemplate::new("t", "broken {name"),
            Err(TemplateError::UnmatchedBrace { .. })
        ));
        assert!(matches!(
            PromptTemplate::new("t", "broken {}"),
            Err(TemplateError::EmptyPlaceholder { .. })
        ));
    }

    #[test]
    fn unicode_text_survives() {
        let t = PromptTemplate::new("t", "犯人は {who} — ação").unwrap();
        assert_eq!(t.render(&bind(&[("who", "謎")])).unwrap(), "犯人は 謎 — ação");
    }
}
