//! Rule engines for a four-game tournament arena.
//!
//! Every engine is a pure function over immutable state values:
//! `initial_state -> legal_moves -> apply_move -> outcome`. All hidden
//! information (deals, shuffles) is driven by an explicit [`rng::SeededRng`],
//! so identical seeds and move sequences reproduce identical games on any
//! platform. The [`kernel`] module defines the shared vocabulary (games,
//! seats, move tokens, outcomes) and dispatches to the per-game modules.

pub mod bots;
pub mod bridge;
pub mod cards;
pub mod chess;
pub mod gomoku;
pub mod holdem;
pub mod kernel;
pub mod rng;

pub use kernel::{
    apply_move, initial_state, legal_moves, observe_state, outcome, serialize_state, to_act,
    Game, GameError, GameId, GameState, Mode, MoveToken, RawOutcome, SeatResult, SetupParams,
    Termination,
};
pub use rng::SeededRng;
