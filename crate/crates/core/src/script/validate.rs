//! Structural validation of parsed scripts.
//!
//! [`validate_script`] never fails: malformed content yields report entries
//! whose `path` identifies the offending element. An empty report means
//! every domain invariant holds.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{GameScript, QaCategory, TurnKind, MURDERER_FACT_ID};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

/// One validation finding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: Severity,
    /// Dotted path with indices, e.g. `qa_items[2].reasoning_chain[0]`.
    pub path: String,
    pub message: String,
}

pub type ValidationReport = Vec<Finding>;

fn err(report: &mut ValidationReport, path: impl Into<String>, message: impl Into<String>) {
    report.push(Finding {
        severity: Severity::Error,
        path: path.into(),
        message: message.into(),
    });
}

/// Check every domain invariant of `script`. The report is empty iff the
/// script is fully consistent.
pub fn validate_script(script: &GameScript) -> ValidationReport {
    let mut report = Vec::new();

    if script.script_id.is_empty() {
        err(&mut report, "script_id", "script_id must be non-empty");
    }

    // Outline: exactly one murderer, unique role ids, ordered timeline.
    let murderer_count = script
        .outline
        .role_summaries
        .iter()
        .filter(|r| r.is_murderer)
        .count();
    if murderer_count != 1 {
        err(
            &mut report,
            "outline.role_summaries",
            format!("exactly one murderer required, found {murderer_count}"),
        );
    }
    let mut role_ids = BTreeSet::new();
    for (i, r) in script.outline.role_summaries.iter().enumerate() {
        if r.role_id.is_empty() {
            err(
                &mut report,
                format!("outline.role_summaries[{i}]"),
                "role_id must be non-empty",
            );
        }
        if !role_ids.insert(r.role_id.as_str()) {
            err(
                &mut report,
                format!("outline.role_summaries[{i}]"),
                format!("duplicate role_id {:?}", r.role_id),
            );
        }
    }
    check_timeline(
        &mut report,
        "outline.crime_day_timeline",
        &script.outline.crime_day_timeline,
        true,
    );
    for role_id in script.outline.motive_notes.keys() {
        if !role_ids.contains(role_id.as_str()) {
            err(
                &mut report,
                "outline.motive_notes",
                format!("motive note for unknown role {role_id:?}"),
            );
        }
    }

    // Role scripts: cover every outline role, no strays, ordered actions,
    // knowledge resolving in the fact registry.
    let facts = &script.clue_pool.fact_registry;
    let mut scripted_roles = BTreeSet::new();
    for (i, rs) in script.role_scripts.iter().enumerate() {
        let path = format!("role_scripts[{i}]");
        if !role_ids.contains(rs.role_id.as_str()) {
            err(
                &mut report,
                &path,
                format!("role_id {:?} not present in outline", rs.role_id),
            );
        }
        if !scripted_roles.insert(rs.role_id.as_str()) {
            err(
                &mut report,
                &path,
                format!("duplicate role script for {:?}", rs.role_id),
            );
        }
        check_timeline(&mut report, &format!("{path}.daily_actions"), &rs.daily_actions, false);
        for (k, fact_id) in rs.knowledge.iter().enumerate() {
            if !facts.contains_key(fact_id) {
                err(
                    &mut report,
                    format!("{path}.knowledge[{k}]"),
                    format!("fact {fact_id:?} missing from fact registry"),
                );
            }
        }
    }
    for role_id in role_ids.iter() {
        if !scripted_roles.contains(role_id) {
            err(
                &mut report,
                "role_scripts",
                format!("outline role {role_id:?} has no role script"),
            );
        }
    }

    // Clue pool: unique ids, non-empty resolving reveals, no direct
    // murderer-identity leak.
    let mut clue_ids = BTreeSet::new();
    for (i, clue) in script.clue_pool.clues.iter().enumerate() {
        let path = format!("clue_pool.clues[{i}]");
        if !clue_ids.insert(clue.clue_id.as_str()) {
            err(
                &mut report,
                &path,
                format!("duplicate clue_id {:?}", clue.clue_id),
            );
        }
        if clue.reveals.is_empty() {
            err(&mut report, &path, "reveals must be non-empty");
        }
        for (k, fact_id) in clue.reveals.iter().enumerate() {
            if !facts.contains_key(fact_id) {
                err(
                    &mut report,
                    format!("{path}.reveals[{k}]"),
                    format!("fact {fact_id:?} missing from fact registry"),
                );
            }
            if fact_id == MURDERER_FACT_ID {
                err(
                    &mut report,
                    format!("{path}.reveals[{k}]"),
                    "clue reveals the murderer-identity fact directly",
                );
            }
        }
    }

    // QA items: resolving evidence, consistent hop counts, gold among
    // choices when choices are present.
    let mut qa_ids = BTreeSet::new();
    for (i, qa) in script.qa_items.iter().enumerate() {
        let path = format!("qa_items[{i}]");
        if !qa_ids.insert(qa.qa_id.as_str()) {
            err(&mut report, &path, format!("duplicate qa_id {:?}", qa.qa_id));
        }
        if qa.hop_count as usize != qa.reasoning_chain.len() {
            err(
                &mut report,
                format!("{path}.hop_count"),
                format!(
                    "hop_count {} does not match reasoning chain length {}",
                    qa.hop_count,
                    qa.reasoning_chain.len()
                ),
            );
        }
        if qa.hop_count < 1 {
            err(&mut report, format!("{path}.hop_count"), "hop_count must be >= 1");
        }
        if qa.category == QaCategory::MultiHop && qa.hop_count < 2 {
            err(
                &mut report,
                format!("{path}.hop_count"),
                "multi-hop items require hop_count >= 2",
            );
        }
        if !qa.choices.is_empty() {
            let mut labels = BTreeSet::new();
            for (k, c) in qa.choices.iter().enumerate() {
                if !labels.insert(c.label.as_str()) {
                    err(
                        &mut report,
                        format!("{path}.choices[{k}]"),
                        format!("duplicate choice label {:?}", c.label),
                    );
                }
            }
            if !labels.contains(qa.gold_answer.as_str()) {
                err(
                    &mut report,
                    format!("{path}.gold_answer"),
                    format!("gold answer {:?} is not a choice label", qa.gold_answer),
                );
            }
        } else if qa.gold_answer.is_empty() {
            err(&mut report, format!("{path}.gold_answer"), "gold answer must be non-empty");
        }
        for (s, step) in qa.reasoning_chain.iter().enumerate() {
            for evid in &step.evidence {
                if !clue_ids.contains(evid.as_str()) && !facts.contains_key(evid) {
                    err(
                        &mut report,
                        format!("{path}.reasoning_chain[{s}]"),
                        format!("evidence {evid:?} resolves to neither a clue nor a fact"),
                    );
                }
            }
        }
    }

    // Dialogue fixtures: strictly increasing indices, known speakers,
    // addressees where the kind requires one, resolving clue references.
    let mut last_index: Option<u32> = None;
    for (i, turn) in script.dialogue_fixtures.iter().enumerate() {
        let path = format!("dialogue_fixtures[{i}]");
        if let Some(prev) = last_index {
            if turn.turn_index <= prev {
                err(
                    &mut report,
                    format!("{path}.turn_index"),
                    format!("turn_index {} not strictly increasing after {}", turn.turn_index, prev),
                );
            }
        }
        last_index = Some(turn.turn_index);
        if !role_ids.contains(turn.speaker_role_id.as_str()) {
            err(
                &mut report,
                format!("{path}.speaker_role_id"),
                format!("unknown speaker {:?}", turn.speaker_role_id),
            );
        }
        match turn.kind {
            TurnKind::Ask | TurnKind::Answer => match &turn.addressee_role_id {
                None => err(
                    &mut report,
                    format!("{path}.addressee_role_id"),
                    "ask/answer turns require an addressee",
                ),
                Some(a) if !role_ids.contains(a.as_str()) => err(
                    &mut report,
                    format!("{path}.addressee_role_id"),
                    format!("unknown addressee {a:?}"),
                ),
                Some(_) => {}
            },
            TurnKind::SelfIntroduction => {}
        }
        for clue_id in &turn.referenced_clue_ids {
            if !clue_ids.contains(clue_id.as_str()) {
                err(
                    &mut report,
                    format!("{path}.referenced_clue_ids"),
                    format!("clue {clue_id:?} missing from pool"),
                );
            }
        }
    }

    report
}

fn check_timeline(
    report: &mut ValidationReport,
    path: &str,
    events: &[super::TimedEvent],
    strict: bool,
) {
    let mut prev: Option<u32> = None;
    for (i, e) in events.iter().enumerate() {
        match e.minutes() {
            None => err(
                report,
                format!("{path}[{i}].time"),
                format!("time {:?} is not a valid HH:MM", e.time),
            ),
            Some(m) => {
                if let Some(p) = prev {
                    let ok = if strict { m > p } else { m >= p };
                    if !ok {
                        err(
                            report,
                            format!("{path}[{i}].time"),
                            format!("timeline not ordered at {:?}", e.time),
                        );
                    }
                }
                prev = Some(m);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::sample::{sample_script, SampleParams};
    use super::*;

    #[test]
    fn consistent_sample_is_clean() {
        let script = sample_script(3, 4, &SampleParams::default());
        let report = validate_script(&script);
        assert!(report.is_empty(), "unexpected findings: {report:?}");
    }

    #[test]
    fn two_murderers_reported_at_role_summaries() {
        let mut script = sample_script(3, 4, &SampleParams::default());
        script.outline.role_summaries[1].is_murderer = true;
        let report = validate_script(&script);
        assert!(report
            .iter()
            .any(|f| f.path == "outline.role_summaries" && f.message.contains("exactly one murderer")));
    }

    #[test]
    fn dangling_qa_evidence_reported_on_reasoning_chain() {
        let mut script = sample_script(3, 4, &SampleParams::default());
        script.qa_items[0].reasoning_chain[0]
            .evidence
            .push("c99".into());
        let report = validate_script(&script);
        assert!(report
            .iter()
            .any(|f| f.path.starts_with("qa_items[0].reasoning_chain")));
    }

    #[test]
    fn murderer_fact_in_clue_is_leakage() {
        let mut script = sample_script(3, 4, &SampleParams::default());
        script.clue_pool.clues[0].reveals.push(MURDERER_FACT_ID.into());
        let report = validate_script(&script);
        assert!(report.iter().any(|f| f.message.contains("murderer-identity")));
    }

    #[test]
    fn hop_count_mismatch_reported() {
        let mut script = sample_script(3, 4, &SampleParams::default());
        script.qa_items[0].hop_count += 1;
        let report = validate_script(&script);
        assert!(report.iter().any(|f| f.path.contains("hop_count")));
    }

    #[test]
    fn unordered_timeline_reported() {
        let mut script = sample_script(3, 4, &SampleParams::default());
        script.outline.crime_day_timeline.swap(0, 1);
        let report = validate_script(&script);
        assert!(report.iter().any(|f| f.path.starts_with("outline.crime_day_timeline")));
    }

    #[test]
    fn missing_role_script_reported() {
        let mut script = sample_script(3, 4, &SampleParams::default());
        script.role_scripts.pop();
        let report = validate_script(&script);
        assert!(report.iter().any(|f| f.message.contains("has no role script")));
    }
}
