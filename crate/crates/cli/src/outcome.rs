use sosq_core::Error;

pub const SUCCESS: u8 = 0;
pub const REFUTED: u8 = 1;
pub const INCONCLUSIVE: u8 = 2;
pub const INPUT_ERROR: u8 = 3;

/// Exit code and report of one command.
#[derive(Debug)]
pub struct Outcome {
    pub code: u8,
    pub report: String,
    /// Written to stderr instead of stdout.
    pub is_error: bool,
}

impl Outcome {
    pub fn new(code: u8, report: impl Into<String>) -> Self {
        Outcome {
            code,
            report: report.into(),
            is_error: false,
        }
    }

    pub fn error(code: u8, report: impl Into<String>) -> Self {
        Outcome {
            code,
            report: report.into(),
            is_error: true,
        }
    }

    pub fn emit(&self) {
        if self.is_error {
            eprintln!("{}", self.report);
        } else {
            println!("{}", self.report);
        }
    }
}

pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotPsd
        | Error::NotTotallyImaginary(_)
        | Error::Reducible(_)
        | Error::NoSolution
        | Error::NotCayleyBacharach(_)
        | Error::NotASumOverU => REFUTED,
        Error::PrecisionExhausted(_)
        | Error::OrderExceeded(_)
        | Error::NotQuadraticallyIndependent
        | Error::MissingGramWitness => INCONCLUSIVE,
        _ => INPUT_ERROR,
    }
}
