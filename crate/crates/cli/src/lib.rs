//! Support library for the `fanotilt` command-line tool: flag-value parsing
//! and JSON rendering ([`json`]), CSV figure data ([`plot`]), and the
//! deterministic verification suite ([`verify`]).

pub mod json;
pub mod plot;
pub mod verify;
