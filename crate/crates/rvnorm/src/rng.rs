//! Splittable deterministic RNG.
//!
//! SplitMix64 streams keyed by (seed, index). Every Monte Carlo sample owns an
//! independent stream derived from its index, so estimates are deterministic in
//! (seed, N) and independent of any parallel scheduling.

/// SplitMix64 generator: passes BigCrush, trivially splittable, 64-bit state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SplitMix64 {
    /// Stream seeded directly.
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for sample `index` under master `seed`.
    ///
    /// The two words are mixed through the output function so that contiguous
    /// indices give decorrelated streams.
    pub fn for_index(seed: u64, index: u64) -> Self {
        let s = mix(seed ^ GOLDEN).wrapping_add(mix(index.wrapping_mul(GOLDEN)));
        SplitMix64 { state: mix(s) }
    }

    /// Next raw 64-bit word.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform double in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform double in the open interval (0, 1); safe for log/inverse-CDF.
    pub fn next_open_f64(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
    }

    /// Standard normal via Box–Muller (first coordinate).
    pub fn next_normal(&mut self) -> f64 {
        let u1 = self.next_open_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}
