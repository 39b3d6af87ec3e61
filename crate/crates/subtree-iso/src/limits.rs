//! Range caps for generators and searches, with an environment override.

/// Environment variable that raises the default range caps, e.g.
/// `SUBTREE_ISO_MAXN=20`. It can only raise caps: operations whose fixed
/// small ranges must always work (like the order ≤ 7 catalog scan) are
/// unaffected by a low setting.
pub const ENV_MAXN: &str = "SUBTREE_ISO_MAXN";

/// The effective cap for an operation with the given default: the larger of
/// the default and the environment override. Unparseable values fall back
/// to the default.
pub fn effective_cap(default_cap: usize) -> usize {
    match std::env::var(ENV_MAXN) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(v) => v.max(default_cap),
            Err(_) => default_cap,
        },
        Err(_) => default_cap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_when_env_absent() {
        // test processes do not set the variable
        assert_eq!(effective_cap(18), 18);
    }
}
