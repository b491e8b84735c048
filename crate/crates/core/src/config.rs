/// Environment variable overriding [`Config::max_weyl_order`].
pub const MAX_WEYL_ORDER_ENV: &str = "SLODOWY_MAX_WEYL_ORDER";

/// Default bound on `|W|`; admits everything up to E6 and A8, rejects E7/E8.
pub const DEFAULT_MAX_WEYL_ORDER: u128 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_weyl_order: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_weyl_order: DEFAULT_MAX_WEYL_ORDER }
    }
}

impl Config {
    /// Default configuration, with the Weyl order guard taken from the
    /// environment when it parses.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(v) = std::env::var(MAX_WEYL_ORDER_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            cfg.max_weyl_order = v;
        }
        cfg
    }
}
