//! Deterministic sample scripts for fixtures, demos and tests.
//!
//! [`sample_script`] builds a fully consistent [`GameScript`] from a seed:
//! same inputs, byte-identical output. The clue pool is laid out so that
//! multi-hop chains exist (overlapping `reveals` across text and image
//! clues), which makes the samples usable end to end through the synthesis
//! pipeline, the game engine and the exporters.

use std::collections::BTreeMap;

use super::{
    Choice, Clue, CluePool, DialogueTurn, GameScript, Modality, Outline, QaCategory, QaItem,
    ReasoningStep, RoleScript, RoleSummary, TimedEvent, TurnKind, MURDERER_FACT_ID,
};

const NAMES: [&str; 10] = [
    "Edwina Harlow",
    "Victor Grange",
    "Mabel Quince",
    "Theodore Ash",
    "Iris Calloway",
    "Rupert Vane",
    "Clara Mowbray",
    "Hugh Pemberton",
    "Sybil Trent",
    "Oswald Finch",
];

const TITLES: [&str; 4] = [
    "The Gallery at Dusk",
    "A Toast Gone Cold",
    "The Last Train from Marlow",
    "Shadows over Hartwell House",
];

/// Knobs for the generated fixture. Defaults produce 6 clues (4 text,
/// 2 image) and a 5-item QA plan.
#[derive(Debug, Clone)]
pub struct SampleParams {
    pub long_script: usize,
    pub text_rich: usize,
    pub media_rich: usize,
    /// At most 3; the fixture pool carries three distinct chains.
    pub multi_hop: usize,
    pub discussion_rounds: usize,
    pub text_clues: usize,
    pub image_clues: usize,
}

impl Default for SampleParams {
    fn default() -> Self {
        Self {
            long_script: 2,
            text_rich: 1,
            media_rich: 1,
            multi_hop: 1,
            discussion_rounds: 1,
            text_clues: 4,
            image_clues: 2,
        }
    }
}

/// The evidence paths of the three chains baked into the fixture pool, in
/// the order multi-hop items consume them.
pub const SAMPLE_CHAINS: [&[&str]; 3] = [&["c1", "c2", "c3"], &["c4", "c5"], &["c2", "c3"]];

/// Build a deterministic, fully consistent script.
///
/// # Panics
/// If `n_roles < 2` or `params` asks for more than 3 multi-hop items or
/// fewer clues than the chain layout needs (4 text + 2 image).
pub fn sample_script(seed: u64, n_roles: usize, params: &SampleParams) -> GameScript {
    assert!(n_roles >= 2, "a game needs at least 2 roles");
    assert!(params.multi_hop <= 3, "fixture pool carries only 3 chains");
    assert!(
        params.text_clues >= 4 && params.image_clues >= 2,
        "chain layout needs at least 4 text and 2 image clues"
    );

    let pick = |i: usize, len: usize| ((seed as usize).wrapping_add(i)) % len;
    let murderer = (seed as usize) % n_roles;

    let role_ids: Vec<String> = (1..=n_roles).map(|i| format!("r{i}")).collect();
    let names: Vec<String> = (0..n_roles).map(|i| NAMES[pick(i, NAMES.len())].to_string()).collect();

    let role_summaries: Vec<RoleSummary> = (0..n_roles)
        .map(|i| RoleSummary {
            role_id: role_ids[i].clone(),
            name: names[i].clone(),
            public_summary: format!("{} was a guest at the estate on the night of the crime.", names[i]),
            secret_summary: if i == murderer {
                format!("{} rigged the cellar door and lied about the cigar smoke.", names[i])
            } else {
                format!("{} owes the victim a debt nobody else knows about.", names[i])
            },
            is_murderer: i == murderer,
        })
        .collect();

    let crime_day_timeline = vec![
        TimedEvent { time: "18:30".into(), event: "Guests arrive for the unveiling.".into() },
        TimedEvent { time: "20:15".into(), event: "The lights fail for two minutes.".into() },
        TimedEvent { time: "21:40".into(), event: "A cry is heard from the cellar stairs.".into() },
        TimedEvent { time: "22:05".into(), event: "The victim is found; the doors are sealed.".into() },
    ];

    let mut motive_notes = BTreeMap::new();
    for (i, rid) in role_ids.iter().enumerate() {
        motive_notes.insert(
            rid.clone(),
            format!("{} stood to gain from the victim's silence over the ledger.", names[i]),
        );
    }

    let outline = Outline {
        title: TITLES[pick(0, TITLES.len())].to_string(),
        background: "An autumn reception at Hartwell House ends with the collector dead at the \
                     foot of the cellar stairs. Every guest had reason to want the ledger he \
                     carried to stay closed."
            .into(),
        crime_day_timeline,
        role_summaries,
        motive_notes,
    };

    // Fact registry: chain facts fA..fE, one private fact per role, and the
    // reserved murderer-identity fact (never revealed by clues).
    let mut fact_registry = BTreeMap::new();
    fact_registry.insert("fA".into(), "The cellar key left the board between 20:00 and 20:30.".into());
    fact_registry.insert("fB".into(), "The cigar ash on the stairs matches the study's humidor.".into());
    fact_registry.insert("fC".into(), "The ledger page for March has been torn out.".into());
    fact_registry.insert("fD".into(), "A second glass was rinsed and returned to the tray.".into());
    fact_registry.insert("fE".into(), "The service lift was used after the lights failed.".into());
    for (i, rid) in role_ids.iter().enumerate() {
        fact_registry.insert(
            format!("f_{rid}"),
            format!("{} was seen near the east corridor at 21:30.", names[i]),
        );
    }
    fact_registry.insert(
        MURDERER_FACT_ID.into(),
        format!("{} is the murderer.", names[murderer]),
    );

    let role_scripts: Vec<RoleScript> = (0..n_roles)
        .map(|i| RoleScript {
            role_id: role_ids[i].clone(),
            name: names[i].clone(),
            backstory: format!(
                "{} first met the victim at the spring auction and has corresponded since. \
                 The invitation to Hartwell House came as a surprise.",
                names[i]
            ),
            daily_actions: vec![
                TimedEvent { time: "18:30".into(), event: "Arrived with the other guests.".into() },
                TimedEvent {
                    time: "20:15".into(),
                    event: if i == murderer {
                        "Slipped away during the blackout.".into()
                    } else {
                        "Stayed in the salon during the blackout.".into()
                    },
                },
                TimedEvent { time: "21:45".into(), event: "Gathered with the others at the stairs.".into() },
            ],
            secrets: if i == murderer {
                vec![
                    "Keeps a copy of the cellar key.".into(),
                    "cover: claims to have been smoking on the terrace at 21:40.".into(),
                ]
            } else {
                vec!["Owes the victim three hundred pounds.".into()]
            },
            knowledge: vec![format!("f_{}", role_ids[i])],
        })
        .collect();

    // Clues c1.. with overlapping reveals so the chains in SAMPLE_CHAINS
    // exist: c1{fA} — c2{fA,fB} — c3{fB}, and c4{fC} — c5{fC,fD}.
    let mut clues = Vec::new();
    let total_clues = params.text_clues + params.image_clues;
    let image_slots = [2usize, 5];
    let mut extra_image = 0usize;
    for idx in 1..=total_clues {
        let is_base_image = image_slots.contains(&idx);
        let is_image = if is_base_image {
            true
        } else if idx > 6 && extra_image < params.image_clues.saturating_sub(2) {
            extra_image += 1;
            true
        } else {
            false
        };
        let (content, reveals): (String, Vec<String>) = match idx {
            1 => ("A brass key tag logged back in at 20:32.".into(), vec!["fA".into()]),
            2 => (
                "caption: photograph of the key board\nembedded text: 'CELLAR — hook 3 empty'\nlayout: close-up, hook 3 centered, ash smudge lower left"
                    .into(),
                vec!["fA".into(), "fB".into()],
            ),
            3 => ("Ash flakes on the third stair, still warm at 21:50.".into(), vec!["fB".into()]),
            4 => ("The ledger lies open; the March page is missing.".into(), vec!["fC".into()]),
            5 => (
                "caption: photograph of the drinks tray\nembedded text: inventory card '12 glasses'\nlayout: eleven glasses dry, one upturned and wet"
                    .into(),
                vec!["fC".into(), "fD".into()],
            ),
            6 => ("The lift indicator rests at the cellar floor.".into(), vec!["fE".into()]),
            k => (
                if is_image {
                    format!("caption: corridor photograph {k}\nembedded text: room plate {k}\nlayout: wide shot")
                } else {
                    format!("A guest's note about the evening, item {k}.")
                },
                vec!["fE".into()],
            ),
        };
        clues.push(Clue {
            clue_id: format!("c{idx}"),
            modality: if is_image { Modality::ImageDescriptor } else { Modality::Text },
            content,
            reveals,
            is_public: true,
        });
    }

    let clue_pool = CluePool { clues, fact_registry };

    let mut qa_items = Vec::new();
    let mut qa_n = 0usize;
    let mut push_qa = |items: &mut Vec<QaItem>, category: QaCategory, question: String, steps: Vec<ReasoningStep>| {
        qa_n += 1;
        let hop_count = steps.len() as u32;
        items.push(QaItem {
            qa_id: format!("q{qa_n}"),
            category,
            question,
            choices: vec![
                Choice { label: "A".into(), text: "Before the lights failed".into() },
                Choice { label: "B".into(), text: "During the blackout".into() },
                Choice { label: "C".into(), text: "After the body was found".into() },
                Choice { label: "D".into(), text: "It cannot be determined".into() },
            ],
            gold_answer: "B".into(),
            reasoning_chain: steps,
            hop_count,
        });
    };

    for k in 0..params.long_script {
        push_qa(
            &mut qa_items,
            QaCategory::LongScript,
            format!("According to the role scripts, when did guest {} leave the salon?", k + 1),
            vec![ReasoningStep {
                claim: "The daily actions place the departure inside the blackout window.".into(),
                evidence: vec![format!("f_{}", role_ids[k % n_roles])],
            }],
        );
    }
    for _ in 0..params.text_rich {
        push_qa(
            &mut qa_items,
            QaCategory::TextRich,
            "When was the cellar key returned to the board?".into(),
            vec![ReasoningStep {
                claim: "The key log shows the tag coming back at 20:32.".into(),
                evidence: vec!["c1".into()],
            }],
        );
    }
    for _ in 0..params.media_rich {
        push_qa(
            &mut qa_items,
            QaCategory::MediaRich,
            "What does the photograph of the key board establish?".into(),
            vec![ReasoningStep {
                claim: "Hook 3 is empty and smudged with ash in the photograph.".into(),
                evidence: vec!["c2".into()],
            }],
        );
    }
    for m in 0..params.multi_hop {
        let chain = SAMPLE_CHAINS[m];
        let steps: Vec<ReasoningStep> = chain
            .iter()
            .enumerate()
            .map(|(h, node)| ReasoningStep {
                claim: format!("Hop {}: the shared fact carries the trail forward.", h + 1),
                evidence: vec![node.to_string()],
            })
            .collect();
        push_qa(
            &mut qa_items,
            QaCategory::MultiHop,
            "When did the cellar door get rigged?".into(),
            steps,
        );
    }

    // Dialogue: one intro per role, then per round one ask/answer pair per
    // role in outline order.
    let mut dialogue_fixtures = Vec::new();
    let mut turn = 0u32;
    for i in 0..n_roles {
        dialogue_fixtures.push(DialogueTurn {
            turn_index: turn,
            speaker_role_id: role_ids[i].clone(),
            kind: TurnKind::SelfIntroduction,
            addressee_role_id: None,
            content: format!("I am {}. I arrived with the first carriage and never left the salon.", names[i]),
            referenced_clue_ids: vec![],
        });
        turn += 1;
    }
    for round in 0..params.discussion_rounds {
        for i in 0..n_roles {
            let target = (i + 1) % n_roles;
            let clue_ref = format!("c{}", 1 + (i + round) % total_clues);
            dialogue_fixtures.push(DialogueTurn {
                turn_index: turn,
                speaker_role_id: role_ids[i].clone(),
                kind: TurnKind::Ask,
                addressee_role_id: Some(role_ids[target].clone()),
                content: format!("{}, where were you when the lights failed?", names[target]),
                referenced_clue_ids: vec![clue_ref.clone()],
            });
            turn += 1;
            dialogue_fixtures.push(DialogueTurn {
                turn_index: turn,
                speaker_role_id: role_ids[target].clone(),
                kind: TurnKind::Answer,
                addressee_role_id: Some(role_ids[i].clone()),
                content: "In the salon, as anyone will confirm.".into(),
                referenced_clue_ids: vec![clue_ref],
            });
            turn += 1;
        }
    }

    GameScript {
        script_id: format!("sample-{seed}-{n_roles}"),
        outline,
        role_scripts,
        clue_pool,
        qa_items,
        dialogue_fixtures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::validate_script;

    #[test]
    fn sample_is_deterministic() {
        let a = sample_script(5, 4, &SampleParams::default());
        let b = sample_script(5, 4, &SampleParams::default());
        assert_eq!(a, b);
        let c = sample_script(6, 4, &SampleParams::default());
        assert_ne!(a, c);
    }

    #[test]
    fn sample_validates_clean_across_sizes() {
        for (seed, n_roles) in [(0u64, 2usize), (1, 3), (9, 5), (42, 8)] {
            let s = sample_script(seed, n_roles, &SampleParams::default());
            let report = validate_script(&s);
            assert!(report.is_empty(), "seed {seed} roles {n_roles}: {report:?}");
        }
    }

    #[test]
    fn default_counts_match_fixture_shape() {
        let s = sample_script(3, 3, &SampleParams::default());
        assert_eq!(s.qa_items.len(), 5);
        assert_eq!(s.dialogue_fixtures.len(), 9); // 3 intros + 3 asks + 3 answers
        assert_eq!(s.clue_pool.image_count(), 2);
        assert_eq!(s.clue_pool.text_count(), 4);
    }

    #[test]
    fn large_image_pool_supported() {
        let params = SampleParams { text_clues: 4, image_clues: 82, ..Default::default() };
        let s = sample_script(8, 4, &params);
        assert_eq!(s.clue_pool.image_count(), 82);
        assert!(validate_script(&s).is_empty());
    }
}
