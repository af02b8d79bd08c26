//! Helpers shared by unit tests.

use rand_core::RngCore;

/// Wraps a random stream and counts how many raw draws were taken.
pub(crate) struct CountingRng<R: RngCore> {
    inner: R,
    u32_draws: u64,
    u64_draws: u64,
}

impl<R: RngCore> CountingRng<R> {
    pub(crate) fn new(inner: R) -> Self {
        CountingRng { inner, u32_draws: 0, u64_draws: 0 }
    }

    pub(crate) fn u64_draws(&self) -> u64 {
        self.u64_draws
    }

    pub(crate) fn total_draws(&self) -> u64 {
        self.u32_draws + self.u64_draws
    }
}

impl<R: RngCore> RngCore for CountingRng<R> {
    fn next_u32(&mut self) -> u32 {
        self.u32_draws += 1;
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.u64_draws += 1;
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest);
    }
}
