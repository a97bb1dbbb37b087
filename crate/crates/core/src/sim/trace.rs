use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Message accounting for one synchronous round.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundStats {
    pub round: usize,
    pub messages: usize,
    pub payload_units: usize,
}

/// Per-round accounting of a protocol run.
///
/// `rounds_used` counts rounds up to and including the last one in which a
/// message was sent; trailing local computation is free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTrace {
    pub rounds_used: usize,
    pub rounds: Vec<RoundStats>,
}

impl RoundTrace {
    pub fn total_messages(&self) -> usize {
        self.rounds.iter().map(|r| r.messages).sum()
    }

    pub fn total_payload(&self) -> usize {
        self.rounds.iter().map(|r| r.payload_units).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("round,messages,total_payload_units\n");
        for r in &self.rounds {
            let _ = writeln!(out, "{},{},{}", r.round, r.messages, r.payload_units);
        }
        out
    }
}
