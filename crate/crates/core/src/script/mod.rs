//! Canonical domain types for murder-mystery game scripts.
//!
//! A [`GameScript`] bundles an outline, per-role scripts, a clue pool, QA
//! items and dialogue fixtures. All cross-references (role ids, clue ids,
//! fact ids) are stable caller-visible strings; the [`CluePool`]'s fact
//! registry is the join point between clues, secrets and reasoning chains.
//!
//! Values are immutable after construction and safe to share between
//! threads. Malformed content is reported by [`validate_script`] rather
//! than rejected at parse time, so arbitrary parsed input can be inspected.

mod io;
mod validate;

pub mod sample;

pub use io::{parse_script, read_script, script_to_json, write_script, ScriptDecodeError};
pub use validate::{validate_script, Finding, Severity, ValidationReport};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Reserved fact id naming the murderer. Clues must never reveal it; the
/// final step of a deduction chain may reference it.
pub const MURDERER_FACT_ID: &str = "murderer_identity";

/// A timed entry in a timeline (crime-day events, daily actions).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimedEvent {
    /// Time of day as zero-padded `HH:MM`.
    pub time: String,
    pub event: String,
}

impl TimedEvent {
    /// Minutes since midnight, if `time` is a well-formed `HH:MM`.
    pub fn minutes(&self) -> Option<u32> {
        let (h, m) = self.time.split_once(':')?;
        if h.len() != 2 || m.len() != 2 {
            return None;
        }
        let h: u32 = h.parse().ok()?;
        let m: u32 = m.parse().ok()?;
        if h > 23 || m > 59 {
            return None;
        }
        Some(h * 60 + m)
    }
}

/// Summary-level view of one role in the outline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleSummary {
    pub role_id: String,
    pub name: String,
    pub public_summary: String,
    pub secret_summary: String,
    pub is_murderer: bool,
}

/// Story outline: crime-day narrative, role summaries and motives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outline {
    pub title: String,
    pub background: String,
    pub crime_day_timeline: Vec<TimedEvent>,
    pub role_summaries: Vec<RoleSummary>,
    /// Motive notes keyed by role id.
    pub motive_notes: BTreeMap<String, String>,
}

impl Outline {
    /// The single murderer's role id, if exactly one role is flagged.
    pub fn murderer_id(&self) -> Option<&str> {
        let mut found = None;
        for r in &self.role_summaries {
            if r.is_murderer {
                if found.is_some() {
                    return None;
                }
                found = Some(r.role_id.as_str());
            }
        }
        found
    }

    pub fn role_ids(&self) -> impl Iterator<Item = &str> {
        self.role_summaries.iter().map(|r| r.role_id.as_str())
    }
}

/// Full per-role script: backstory, timed daily actions, secrets and the
/// fact ids the role privately knows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleScript {
    pub role_id: String,
    pub name: String,
    pub backstory: String,
    pub daily_actions: Vec<TimedEvent>,
    pub secrets: Vec<String>,
    pub knowledge: Vec<String>,
}

/// Clue modality: plain text, or a structured textual scene specification
/// standing in for an image (caption, embedded text items, layout notes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Modality {
    #[serde(rename = "text")]
    Text,
    #[serde(rename = "image-descriptor")]
    ImageDescriptor,
}

/// A public clue. `reveals` links the clue to ground-truth facts in the
/// pool's registry; a clue never carries [`MURDERER_FACT_ID`] directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clue {
    pub clue_id: String,
    pub modality: Modality,
    pub content: String,
    pub reveals: Vec<String>,
    pub is_public: bool,
}

/// All clues for a script plus the fact registry they resolve against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CluePool {
    pub clues: Vec<Clue>,
    /// fact id → ground-truth fact text.
    pub fact_registry: BTreeMap<String, String>,
}

impl CluePool {
    pub fn clue(&self, clue_id: &str) -> Option<&Clue> {
        self.clues.iter().find(|c| c.clue_id == clue_id)
    }

    /// Number of image-descriptor clues (N).
    pub fn image_count(&self) -> usize {
        self.clues
            .iter()
            .filter(|c| c.modality == Modality::ImageDescriptor)
            .count()
    }

    /// Number of text clues (M).
    pub fn text_count(&self) -> usize {
        self.clues
            .iter()
            .filter(|c| c.modality == Modality::Text)
            .count()
    }
}

/// QA category, matching the four question families the pipeline emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QaCategory {
    #[serde(rename = "long-script")]
    LongScript,
    #[serde(rename = "text-rich")]
    TextRich,
    #[serde(rename = "media-rich")]
    MediaRich,
    #[serde(rename = "multi-hop")]
    MultiHop,
}

impl QaCategory {
    pub const ALL: [QaCategory; 4] = [
        QaCategory::LongScript,
        QaCategory::TextRich,
        QaCategory::MediaRich,
        QaCategory::MultiHop,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            QaCategory::LongScript => "long-script",
            QaCategory::TextRich => "text-rich",
            QaCategory::MediaRich => "media-rich",
            QaCategory::MultiHop => "multi-hop",
        }
    }
}

/// One labeled multiple-choice option.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Choice {
    pub label: String,
    pub text: String,
}

/// A single step of a reasoning chain: a claim plus the clue or fact ids
/// that support it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReasoningStep {
    pub claim: String,
    pub evidence: Vec<String>,
}

/// A question with its gold answer and annotated reasoning chain.
/// `hop_count` always equals the reasoning chain length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaItem {
    pub qa_id: String,
    pub category: QaCategory,
    pub question: String,
    pub choices: Vec<Choice>,
    pub gold_answer: String,
    pub reasoning_chain: Vec<ReasoningStep>,
    pub hop_count: u32,
}

impl QaItem {
    /// Clue ids (not fact ids) referenced anywhere in the reasoning chain,
    /// resolved against `pool`, deduplicated in first-seen order.
    pub fn evidence_clue_ids(&self, pool: &CluePool) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for step in &self.reasoning_chain {
            for id in &step.evidence {
                if pool.clue(id).is_some() && !out.iter().any(|x| x == id) {
                    out.push(id.clone());
                }
            }
        }
        out
    }
}

/// Kind of a dialogue turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TurnKind {
    SelfIntroduction,
    Ask,
    Answer,
}

/// One turn of the game dialogue. Ask turns may address the speaker
/// themselves — that is representable on purpose, and scored 0 by the
/// questioning-strategy reward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DialogueTurn {
    pub turn_index: u32,
    pub speaker_role_id: String,
    pub kind: TurnKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub addressee_role_id: Option<String>,
    pub content: String,
    pub referenced_clue_ids: Vec<String>,
}

/// The complete script artifact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameScript {
    pub script_id: String,
    pub outline: Outline,
    pub role_scripts: Vec<RoleScript>,
    pub clue_pool: CluePool,
    pub qa_items: Vec<QaItem>,
    pub dialogue_fixtures: Vec<DialogueTurn>,
}

impl GameScript {
    pub fn role_script(&self, role_id: &str) -> Option<&RoleScript> {
        self.role_scripts.iter().find(|r| r.role_id == role_id)
    }

    /// The murderer's role id; `None` when the outline is inconsistent.
    pub fn murderer_id(&self) -> Option<&str> {
        self.outline.murderer_id()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn timed_event_minutes() {
        let e = TimedEvent {
            time: "09:30".into(),
            event: "x".into(),
        };
        assert_eq!(e.minutes(), Some(570));
        for bad in ["9:30", "24:00", "12:60", "noon", "12-30", "123:4"] {
            let e = TimedEvent {
                time: bad.into(),
                event: "x".into(),
            };
            assert_eq!(e.minutes(), None, "{bad}");
        }
    }

    #[test]
    fn murderer_id_requires_exactly_one_flag() {
        let mut outline = sample::sample_script(1, 3, &Default::default()).outline;
        assert!(outline.murderer_id().is_some());
        outline.role_summaries[0].is_murderer = true;
        outline.role_summaries[1].is_murderer = true;
        assert_eq!(outline.murderer_id(), None);
        for r in &mut outline.role_summaries {
            r.is_murderer = false;
        }
        assert_eq!(outline.murderer_id(), None);
    }

    #[test]
    fn evidence_clue_ids_skips_facts_and_dedupes() {
        let script = sample::sample_script(7, 3, &sample::SampleParams::default());
        let qa = &script.qa_items[0];
        let ids = qa.evidence_clue_ids(&script.clue_pool);
        for id in &ids {
            assert!(script.clue_pool.clue(id).is_some());
        }
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
    }
}
