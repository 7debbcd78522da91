//! CSV output and the best-known-size input file.

use std::collections::HashMap;
use std::io::{Read, Write};

use super::{instance_id, BenchError, BenchRecord, MeasureReport};

pub const CSV_HEADER: [&str; 9] = [
    "instance",
    "n",
    "m",
    "problem",
    "algorithm",
    "solution_size",
    "time_ns",
    "ratio_solution",
    "ratio_time",
];

pub const SUMMARY_HEADER: [&str; 5] = [
    "algorithm",
    "problem",
    "instances",
    "mean_ratio_solution",
    "mean_ratio_time",
];

/// Writes one row per record, a blank line, then the per-algorithm summary.
/// Each entry of `notes` is appended as a `# ` comment line.
pub fn emit_csv<W: Write>(
    report: &MeasureReport,
    records: &[BenchRecord],
    mut sink: W,
    notes: &[String],
) -> Result<(), BenchError> {
    if report.solution.len() != records.len() || report.time.len() != records.len() {
        return Err(BenchError::LengthMismatch(report.solution.len(), records.len()));
    }
    {
        let mut w = csv::Writer::from_writer(&mut sink);
        w.write_record(CSV_HEADER)?;
        for ((r, rs), rt) in records.iter().zip(&report.solution).zip(&report.time) {
            w.write_record([
                r.instance.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.problem.to_string(),
                r.algorithm.clone(),
                r.solution_size.to_string(),
                r.elapsed.as_nanos().to_string(),
                format!("{rs:.3}"),
                format!("{rt:.3}"),
            ])?;
        }
        w.flush()?;
    }
    writeln!(sink)?;
    {
        let mut w = csv::Writer::from_writer(&mut sink);
        w.write_record(SUMMARY_HEADER)?;
        for s in &report.summary {
            w.write_record([
                s.algorithm.clone(),
                s.problem.map_or_else(|| "all".to_string(), |p| p.to_string()),
                s.instances.to_string(),
                format!("{:.3}", s.mean_solution),
                format!("{:.3}", s.mean_time),
            ])?;
        }
        w.flush()?;
    }
    for note in notes {
        writeln!(sink, "# {note}")?;
    }
    sink.flush()?;
    Ok(())
}

/// Reads `name,size` rows. A non-numeric first row is taken as a header;
/// names are also registered without their file extension.
pub fn read_best_known<R: Read>(reader: R) -> Result<HashMap<String, usize>, BenchError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut out = HashMap::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let bad = |message: String| BenchError::BestKnownFormat { record: i + 1, message };
        if row.len() != 2 {
            return Err(bad(format!("expected 2 fields, found {}", row.len())));
        }
        let name = &row[0];
        let size = match row[1].parse::<usize>() {
            Ok(s) => s,
            Err(_) if i == 0 => continue,
            Err(e) => return Err(bad(format!("size `{}`: {e}", &row[1]))),
        };
        let stem = instance_id(std::path::Path::new(name));
        out.insert(name.to_string(), size);
        out.entry(stem).or_insert(size);
    }
    Ok(out)
}
