//! Synthesis and evaluation engine for murder-mystery game scripts.
//!
//! The crate is organized around a shared script vocabulary and a set of
//! independent subsystems that consume it:
//!
//! - [`script`] — canonical domain types ([`script::GameScript`], clues, QA
//!   items, dialogue), validation and the on-disk JSON format.
//! - [`llm`] — provider abstraction for text-completion calls, with a real
//!   HTTP backend and a deterministic scripted mock for offline runs.
//! - [`template`] — placeholder-based prompt templates, one per agent stage.
//! - [`pipeline`] — the multi-agent synthesis pipeline
//!   (outline → characters → critique loop → clues → QA → roleplay).
//! - [`game`] — the four-phase social-deduction game state machine and
//!   budgeted context assembly.
//! - [`reward`] — reward functions for verifiable and judge-scored tasks,
//!   plus the multi-judge scoring client.
//! - [`grpo`] — group-standardized advantages and the clipped surrogate
//!   objective over caller-supplied rewards and log-probabilities.
//! - [`stats`] — judge-agreement statistics (Pearson, Spearman, Cohen's
//!   kappa, score-difference histograms) and the evaluation metric report.
//! - [`dataset`] — SFT / RL corpus export and corpus statistics.
//!
//! Everything is synchronous and deterministic under the scripted mock:
//! identical inputs produce byte-identical outputs.

pub mod dataset;
pub mod game;
pub mod grpo;
pub mod llm;
pub mod pipeline;
pub mod reward;
pub mod script;
pub mod stats;
pub mod template;
