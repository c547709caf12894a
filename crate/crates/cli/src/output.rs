use std::io::{self, BufWriter, Stdout, Write};

use clap::ValueEnum;
use serde_json::Value;
use sturmian::word::{Letter, Word};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Alphabet {
    Ab,
    #[value(name = "01")]
    Digits,
}

pub struct Output {
    pub format: Format,
    alphabet: Alphabet,
    sink: BufWriter<Stdout>,
}

impl Output {
    pub fn new(format: Format, alphabet: Alphabet) -> Output {
        Output {
            format,
            alphabet,
            sink: BufWriter::new(io::stdout()),
        }
    }

    pub fn word(&self, w: &Word) -> String {
        match self.alphabet {
            Alphabet::Ab => w.to_string(),
            Alphabet::Digits => w
                .letters()
                .iter()
                .map(|x| char::from(b'0' + x.digit()))
                .collect(),
        }
    }

    pub fn letter(&self, x: Letter) -> char {
        match self.alphabet {
            Alphabet::Ab => x.to_char(),
            Alphabet::Digits => char::from(b'0' + x.digit()),
        }
    }

    pub fn line(&mut self, text: impl AsRef<str>) -> Result<(), CliError> {
        writeln!(self.sink, "{}", text.as_ref())?;
        Ok(())
    }

    pub fn json(&mut self, value: &Value) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut self.sink, value).map_err(io::Error::from)?;
        writeln!(self.sink)?;
        Ok(())
    }

    /// A CSV writer over the output stream.
    pub fn csv(&mut self) -> csv::Writer<&mut BufWriter<Stdout>> {
        csv::Writer::from_writer(&mut self.sink)
    }

    /// Rejects `--format csv` for commands whose output is not a table.
    pub fn require_not_csv(&self, command: &str) -> Result<(), CliError> {
        if self.format == Format::Csv {
            return Err(CliError::Parse(format!(
                "csv output is available for occ, dist and verify, not {command}"
            )));
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), CliError> {
        self.sink.flush()?;
        Ok(())
    }
}

/// Parses a word written over `{a, b}` or `{0, 1}`.
pub fn parse_word(s: &str) -> Result<Word, CliError> {
    s.parse::<Word>().map_err(CliError::from)
}
