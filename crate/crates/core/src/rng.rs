//! Deterministic seed derivation.
//!
//! Every stochastic entry point takes a `u64` base seed. Derived generators
//! are ChaCha12 streams keyed by `(base seed, label, index)` so that
//! ensembles, worker chunks and per-event trajectory streams are mutually
//! independent and reproducible regardless of thread scheduling.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Stream labels keep unrelated consumers of the same base seed apart.
#[derive(Clone, Copy, Debug)]
pub enum StreamLabel {
    Main,
    Run,
    Walk,
    Trajectory,
    Chunk,
}

impl StreamLabel {
    fn tag(self) -> u64 {
        match self {
            StreamLabel::Main => 0x6d61_696e,
            StreamLabel::Run => 0x7275_6e00,
            StreamLabel::Walk => 0x7761_6c6b,
            StreamLabel::Trajectory => 0x7472_616a,
            StreamLabel::Chunk => 0x6368_6e6b,
        }
    }
}

/// The documented splitting rule: the 32-byte ChaCha key is the little-endian
/// concatenation of `base`, the label tag, `index`, and a fixed pad.
pub fn derive(base: u64, label: StreamLabel, index: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&base.to_le_bytes());
    key[8..16].copy_from_slice(&label.tag().to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    key[24..32].copy_from_slice(&0x646c_6131_6431_3233u64.to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// Identifier recorded in logs when a dedicated stream is consumed.
pub fn stream_id(label: StreamLabel, index: u64) -> u64 {
    label.tag().wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ index
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn derived_streams_are_stable_and_distinct() {
        let mut a = derive(7, StreamLabel::Run, 0);
        let mut b = derive(7, StreamLabel::Run, 0);
        assert_eq!(a.next_u64(), b.next_u64());
        let mut c = derive(7, StreamLabel::Run, 1);
        let mut d = derive(7, StreamLabel::Walk, 0);
        let x = derive(7, StreamLabel::Run, 0).next_u64();
        assert_ne!(x, c.next_u64());
        assert_ne!(x, d.next_u64());
    }
}
