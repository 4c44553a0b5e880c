use std::fmt;

/// Coarse failure class; decides the exit code and the message prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Usage,
    Domain,
    Input,
    Io,
    Numerical,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Usage => "usage",
            Kind::Domain => "domain",
            Kind::Input => "input",
            Kind::Io => "io",
            Kind::Numerical => "numerical",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Kind::Numerical => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        Self { kind, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Kind::Usage, message)
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(Kind::Input, message)
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }
}

/// Always a single line: `error[kind]: message`.
impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat = self.message.split_whitespace().collect::<Vec<_>>().join(" ");
        write!(f, "error[{}]: {}", self.kind.as_str(), flat)
    }
}

impl std::error::Error for CliError {}

impl From<tanhspec::Error> for CliError {
    fn from(e: tanhspec::Error) -> Self {
        use tanhspec::Error as E;
        let kind = match &e {
            E::Domain(_) | E::Pole(_) | E::Index(_) | E::Mode(_) | E::Size(_) => Kind::Domain,
            E::NonFiniteSample { .. } | E::NoConvergence(_) | E::RankDeficient(_) => Kind::Numerical,
        };
        let message = match e {
            E::Domain(m) | E::Mode(m) | E::Size(m) | E::Index(m) => m,
            other => other.to_string(),
        };
        Self::new(kind, message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::new(Kind::Io, e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
