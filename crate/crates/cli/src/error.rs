use std::fmt;

/// A failure reported as one `error: code=… message=…` line.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    /// Usage errors exit with 2, data and model errors with 1.
    pub usage: bool,
}

impl CliError {
    pub fn data(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), usage: false }
    }

    pub fn usage(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), usage: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.usage {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let message = self.message.replace('\n', " ");
        write!(f, "error: code={} message={}", self.code, message)
    }
}

macro_rules! data_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::data(e.code(), e.to_string())
            }
        }
    )*};
}

data_error!(
    scenetemp::ingest::IngestError,
    scenetemp::curves::CurveError,
    scenetemp::mtm::MtmError,
    scenetemp::stm::StmError,
    scenetemp::baseline::BaselineError,
    scenetemp::stats::StatsError,
    scenetemp::eval::EvalError,
    scenetemp::synth::SynthError
);

impl From<scenetemp::eval::ModelFailure> for CliError {
    fn from(e: scenetemp::eval::ModelFailure) -> Self {
        CliError::data(e.code, e.message)
    }
}

impl From<scenetemp::config::ConfigError> for CliError {
    fn from(e: scenetemp::config::ConfigError) -> Self {
        CliError::usage(e.code(), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::data("Io", e.to_string())
    }
}
