//! TSV and JSON renderings of reports, classifications and check results.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Map, Value};
use sindhi_spell_core::classify::ErrorClassification;
use sindhi_spell_core::suggest::{Flag, Suggestion};
use sindhi_spell_core::trends::{Share, TrendReport};
use sindhi_spell_core::Category;
use sindhi_spell_core::EditKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// Report rows in fixed order with their shares. Category rows are shares
/// of categorized ops, every other row a share of `total_errors`.
pub fn report_rows(r: &TrendReport) -> Vec<(&'static str, Share)> {
    let rows = [
        ("total_errors", r.total_errors),
        ("transposition", r.kind_count(EditKind::Transposition)),
        ("insertion", r.kind_count(EditKind::Insertion)),
        ("deletion", r.kind_count(EditKind::Deletion)),
        ("substitution", r.kind_count(EditKind::Substitution)),
        ("single_error_total", r.single_error_total),
        ("multiple_error", r.multiple_error),
        ("boundary_errors", r.boundary_errors),
        ("short_word_errors", r.short_word_errors),
        ("first_char_errors", r.first_char_errors),
        ("real_word_errors", r.real_word_errors),
    ];
    let mut out: Vec<(&'static str, Share)> = rows.into_iter().map(|(n, c)| (n, r.share(c))).collect();
    for cat in [Category::Typographic, Category::Phonetic, Category::Visual, Category::SpaceRelated] {
        out.push((cat.name(), r.category_share(cat)));
    }
    out
}

pub const REPORT_HEADER: &str = "metric\tcount\tpercent";

pub fn write_report<W: Write>(r: &TrendReport, format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Tsv => {
            writeln!(out, "{REPORT_HEADER}")?;
            for (name, share) in report_rows(r) {
                writeln!(out, "{name}\t{}\t{share}", share.count)?;
            }
        }
        Format::Json => {
            let mut counts = Map::new();
            let mut percent = Map::new();
            let mut ratio = Map::new();
            for (name, share) in report_rows(r) {
                counts.insert(name.into(), json!(share.count));
                percent.insert(name.into(), json!(share.tenths() as f64 / 10.0));
                ratio.insert(name.into(), json!(share.ratio()));
            }
            let doc = json!({ "counts": counts, "percent": percent, "ratio": ratio });
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Rebuilds a report from the `counts` object of the JSON rendering.
pub fn report_from_json(doc: &Value) -> Option<TrendReport> {
    let c = doc.get("counts")?;
    let get = |k: &str| c.get(k).and_then(Value::as_u64);
    Some(TrendReport {
        total_errors: get("total_errors")?,
        transposition: get("transposition")?,
        insertion: get("insertion")?,
        deletion: get("deletion")?,
        substitution: get("substitution")?,
        single_error_total: get("single_error_total")?,
        multiple_error: get("multiple_error")?,
        boundary_errors: get("boundary_errors")?,
        short_word_errors: get("short_word_errors")?,
        first_char_errors: get("first_char_errors")?,
        real_word_errors: get("real_word_errors")?,
        typographic: get("typographic")?,
        phonetic: get("phonetic")?,
        visual: get("visual")?,
        space_related: get("space_related")?,
    })
}

fn score(s: &Suggestion) -> String {
    format!("{:.6}", s.score)
}

/// `start end token suggestions scores error`; lists are `|`-separated.
pub const CHECK_COLUMNS: usize = 6;

pub fn write_flag<W: Write>(flag: &Flag, format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Tsv => {
            let words: Vec<String> = flag.suggestions.iter().map(Suggestion::text).collect();
            let scores: Vec<String> = flag.suggestions.iter().map(score).collect();
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                flag.start,
                flag.end,
                flag.token,
                words.join("|"),
                scores.join("|"),
                flag.error.as_deref().unwrap_or("")
            )
        }
        Format::Json => {
            let suggestions: Vec<Value> = flag
                .suggestions
                .iter()
                .map(|s| json!({ "text": s.text(), "score": s.score, "source": s.source, "script": s.script }))
                .collect();
            let mut doc = json!({
                "start": flag.start,
                "end": flag.end,
                "token": flag.token,
                "suggestions": suggestions,
            });
            if let Some(e) = &flag.error {
                doc["error"] = json!(e);
            }
            serde_json::to_writer(&mut out, &doc)?;
            writeln!(out)
        }
    }
}

/// Flat classification record.
#[derive(Debug, Serialize)]
pub struct ClassRecord<'a> {
    pub line: usize,
    pub wrong: &'a str,
    pub intended: &'a str,
    #[serde(flatten)]
    pub result: ClassResult<'a>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ClassResult<'a> {
    Ok(&'a ErrorClassification),
    Err { error: String },
}

/// `line wrong intended kind boundary multiplicity length position locus
/// wordness category cues keyboard script error`
pub const CLASSIFY_COLUMNS: usize = 15;

pub fn write_classification<W: Write>(rec: &ClassRecord<'_>, format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut out, rec)?;
            writeln!(out)
        }
        Format::Tsv => {
            let fields: Vec<String> = match &rec.result {
                ClassResult::Ok(c) => {
                    vec![
                        c.kind.map_or("multiple".into(), |k| k.name().into()),
                        c.boundary.map_or("-".into(), |b| b.name().into()),
                        snake(&c.multiplicity),
                        snake(&c.word_length_class),
                        snake(&c.position_class),
                        snake(&c.locus),
                        snake(&c.wordness),
                        c.category.name().into(),
                        c.cue_labels.iter().map(|x| x.name()).collect::<Vec<_>>().join(","),
                        c.keyboard_adjacent.to_string(),
                        c.edit_script.iter().map(|op| op.to_string()).collect::<Vec<_>>().join(" "),
                        String::new(),
                    ]
                }
                ClassResult::Err { error } => {
                    let mut v = vec!["-".to_string(); 11];
                    v.push(error.clone());
                    v
                }
            };
            writeln!(out, "{}\t{}\t{}\t{}", rec.line, rec.wrong, rec.intended, fields.join("\t"))
        }
    }
}

/// The serde name of a unit variant.
fn snake<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        _ => String::from("?"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_report_round_trips() {
        let r = TrendReport { total_errors: 3, deletion: 2, substitution: 1, single_error_total: 3, ..Default::default() };
        let mut out = Vec::new();
        write_report(&r, Format::Json, &mut out).unwrap();
        let doc: Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(report_from_json(&doc), Some(r));
        assert_eq!(doc["percent"]["deletion"], json!(66.7));
    }

    #[test]
    fn tsv_report_shape() {
        let r = TrendReport { total_errors: 1, insertion: 1, single_error_total: 1, ..Default::default() };
        let mut out = Vec::new();
        write_report(&r, Format::Tsv, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], REPORT_HEADER);
        assert_eq!(lines.len(), 16);
        assert!(lines.iter().all(|l| l.split('\t').count() == 3));
        assert_eq!(lines[3], "insertion\t1\t100.0");
    }
}
