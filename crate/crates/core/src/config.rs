/// Default ceiling on the number of boxes handled by sweeps and the CLI.
pub const DEFAULT_MAX_SIZE: usize = 14;

/// Technical ceiling for single-shape computations. Descent sets are packed
/// into 64-bit masks and supports into bitsets of `2^(n-1)` bits.
pub const HARD_MAX_SIZE: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_size: DEFAULT_MAX_SIZE }
    }
}

pub(crate) fn check_hard_limit(size: usize) -> crate::Result<()> {
    if size > HARD_MAX_SIZE {
        Err(crate::Error::ResourceLimit { size, limit: HARD_MAX_SIZE })
    } else {
        Ok(())
    }
}

/// One slice `index` of `count` (1-based) of a pair sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Shard {
    pub index: u32,
    pub count: u32,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 1, count: 1 };

    pub fn new(index: u32, count: u32) -> crate::Result<Self> {
        if count == 0 || index == 0 || index > count {
            return Err(crate::Error::Parse {
                input: format!("{index}/{count}"),
                reason: "shard must satisfy 1 <= index <= count".into(),
            });
        }
        Ok(Shard { index, count })
    }

    /// `true` if the item with this hash belongs to the shard.
    pub fn owns(&self, hash: u64) -> bool {
        hash % self.count as u64 == (self.index - 1) as u64
    }
}

impl std::fmt::Display for Shard {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl std::str::FromStr for Shard {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        let bad = || crate::Error::Parse { input: s.to_string(), reason: "expected i/k".into() };
        let (i, k) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(i.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shard_parsing() {
        assert_eq!("2/5".parse::<Shard>().unwrap(), Shard { index: 2, count: 5 });
        assert!("0/5".parse::<Shard>().is_err());
        assert!("6/5".parse::<Shard>().is_err());
        assert!("x".parse::<Shard>().is_err());
        let owned: usize = (0..100u64).filter(|&h| (1..=4).any(|i| Shard::new(i, 4).unwrap().owns(h))).count();
        assert_eq!(owned, 100);
    }
}
