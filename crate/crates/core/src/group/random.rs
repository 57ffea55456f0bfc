use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

/// Default seed for all randomized group algorithms; overridden by `DTG_SEED`.
pub const DEFAULT_SEED: u64 = 0x0d15_7a9c_e5ee_d001;

pub fn seed_from_env() -> u64 {
    std::env::var("DTG_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// Product replacement random element generator.
pub struct ProductReplacement {
    pool: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    pub fn new(degree: usize, gens: &[Permutation], seed: u64) -> Self {
        let mut pool: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if pool.is_empty() {
            pool.push(Permutation::identity(degree));
        }
        let k = pool.len();
        let mut i = 0;
        while pool.len() < 10 {
            pool.push(pool[i % k].clone());
            i += 1;
        }
        let mut pr =
            ProductReplacement { pool, acc: Permutation::identity(degree), rng: ChaCha8Rng::seed_from_u64(seed) };
        for _ in 0..60 {
            pr.next_element();
        }
        pr
    }

    pub fn next_element(&mut self) -> Permutation {
        let n = self.pool.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let prod = if self.rng.gen_bool(0.5) {
            self.pool[i].compose(&self.pool[j])
        } else {
            self.pool[i].compose(&self.pool[j].inverse())
        };
        self.pool[i] = prod;
        self.acc = self.acc.compose(&self.pool[i]);
        self.acc.clone()
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}
