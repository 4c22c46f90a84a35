//! Local geometry of rooted maps: balls, local distance, inclusion of maps
//! with a hole, occurrence counts, and peeling explorations.

mod ball;
mod includes;
mod peel;

pub use ball::{ball, local_distance, BallMap, LocalDistance};
pub use includes::{complement, embed, gluing_closure, includes, includes_oracle, occ, Embedding};
pub use peel::{peel_sequence, Explored, PeelAction, PeelRecord, PeelSequence, PeelStep};
