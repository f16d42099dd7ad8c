//! Text formats, consistency checks and the command line for `iwahori-core`.

pub mod cli;
pub mod parse;
pub mod verify;
