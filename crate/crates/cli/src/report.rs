//! Line-oriented output in a human layout or as `key=value` pairs.

use std::fmt::Display;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(String, String, Option<String>)>,
}

impl Report {
    pub fn line(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string(), None));
        self
    }

    /// A line stating a dynamical or group-theoretic fact, with its source.
    pub fn fact(&mut self, key: impl Into<String>, value: impl Display, citation: impl Into<String>) -> &mut Self {
        let citation = citation.into();
        let citation = (!citation.is_empty()).then_some(citation);
        self.entries.push((key.into(), value.to_string(), citation));
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (key, value, citation) in &self.entries {
            match format {
                Format::Text => {
                    out.push_str(&format!("{key}: {value}"));
                    if let Some(c) = citation {
                        out.push_str(&format!(" [{c}]"));
                    }
                    out.push('\n');
                }
                Format::Structured => {
                    out.push_str(&format!("{key}={}\n", escape(value)));
                    if let Some(c) = citation {
                        out.push_str(&format!("{key}.citation={}\n", escape(c)));
                    }
                }
            }
        }
        out
    }
}

fn escape(value: &str) -> String {
    value.replace('\\', "\\\\").replace('\n', "\\n")
}
