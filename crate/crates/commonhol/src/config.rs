use std::fmt;

use commonhol_core::platform::PLATFORM_VERSION;

/// Identification of this system, written into trace headers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub system_name: String,
    pub system_version: String,
    pub platform_version: String,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            system_name: env!("CARGO_PKG_NAME").to_string(),
            system_version: env!("CARGO_PKG_VERSION").to_string(),
            platform_version: PLATFORM_VERSION.to_string(),
        }
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system_name {}", self.system_name)?;
        writeln!(f, "system_version {}", self.system_version)?;
        write!(f, "platform_version {}", self.platform_version)
    }
}
